//! The subgroup `H = <a, b, z_j (j in J)>` with `a = x [y,x]`, `b = y`, and
//! its membership decision procedure.
//!
//! The module endomorphism `lambda: e -> (2 - b^-1) e + (1 - a) b^-1 f, f -> f`
//! (fixing `t_j` for `j >= 3`) induces `psi_star` on Magnus matrices, which
//! sends `mu(w)` to `mu(psi(w))` for the substitution `x -> a, y -> b`. Its
//! inverse over the fraction field needs a division by `2 s2 - 1`; an element
//! of `mu(Phi)` lies in `mu(H)` exactly when that division is exact (plus the
//! support conditions for the free factor `<x, y, z_j>` in higher rank).

use serde::Serialize;
use thiserror::Error;

use crate::laurent::{geometric_sum, LaurentError, LaurentPoly, LaurentRing, Monomial};
use crate::magnus::{MagnusMatrix, MatrixRecord};
use crate::words::{evaluate, Word, WordError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SubgroupError {
    #[error("rank must be at least 2 (got {0})")]
    RankTooSmall(usize),
    #[error("z-generator index {index} is not in 3..={rank}")]
    InvalidSubset { index: usize, rank: usize },
    #[error("matrix is not in the image of the Magnus embedding: {0}")]
    NotInImage(String),
    #[error("root exponent must be at least 2 (got {0})")]
    RootExponent(i64),
    #[error("letter {0} is not a generator of H")]
    NotAnHGenerator(usize),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
    #[error(transparent)]
    Word(#[from] WordError),
}

/// `2 s2 - 1`.
pub fn two_beta_minus_one(ring: LaurentRing) -> LaurentPoly {
    let beta = ring.var(2).expect("rank >= 2");
    &(&beta + &beta) - &ring.one()
}

/// The matrix of `lambda` on the basis `{e, f}`:
/// `[[2 - s2^-1, (1 - s1) s2^-1], [0, 1]]`, rows giving the images of `e`, `f`.
pub fn lambda_matrix(ring: LaurentRing) -> [[LaurentPoly; 2]; 2] {
    let one = ring.one();
    let alpha = ring.var(1).expect("rank >= 2");
    let beta_inv = LaurentPoly::from_monomial(ring, Monomial::var(ring.rank(), 2).unwrap().inv());
    [
        [&ring.constant(2) - &beta_inv, &(&one - &alpha) * &beta_inv],
        [ring.zero(), one],
    ]
}

/// Which membership check failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    /// `c` has a nonzero exponent at a variable outside `{1, 2} + J`.
    CExponent,
    /// Some `gamma_i` with `i` outside `{1, 2} + J` is nonzero.
    GammaVanishing,
    /// A remaining `gamma_i` involves a variable outside `{1, 2} + J`.
    Subring,
    /// `2 s2 - 1` does not divide `gamma_1`.
    Divisibility,
}

impl Check {
    pub fn as_str(self) -> &'static str {
        match self {
            Check::CExponent => "c-exponent",
            Check::GammaVanishing => "gamma-vanishing",
            Check::Subring => "subring",
            Check::Divisibility => "divisibility",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    /// `gamma_1 / (2 s2 - 1)`.
    pub quotient: String,
    /// `psi1_star(S)`, which lies in `mu(Phi)`.
    pub preimage: MatrixRecord,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub check: Check,
    pub datum: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MembershipVerdict {
    Member(Certificate),
    NonMember(Failure),
}

impl MembershipVerdict {
    pub fn member(&self) -> bool {
        matches!(self, MembershipVerdict::Member(_))
    }

    pub fn to_json(&self) -> serde_json::Value {
        match self {
            MembershipVerdict::Member(c) => serde_json::json!({ "member": true, "certificate": c }),
            MembershipVerdict::NonMember(f) => serde_json::json!({ "member": false, "failure": f }),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SubgroupH {
    ring: LaurentRing,
    subset: Vec<usize>,
    a: MagnusMatrix,
    b: MagnusMatrix,
    a_word: Word,
}

impl SubgroupH {
    /// `H` in rank `rank` with z-generators indexed by `subset` (a subset of `3..=rank`).
    pub fn new(rank: usize, subset: impl IntoIterator<Item = usize>) -> Result<Self, SubgroupError> {
        if rank < 2 {
            return Err(SubgroupError::RankTooSmall(rank));
        }
        let mut subset: Vec<usize> = subset.into_iter().collect();
        subset.sort_unstable();
        subset.dedup();
        if let Some(&index) = subset.iter().find(|&&j| j < 3 || j > rank) {
            return Err(SubgroupError::InvalidSubset { index, rank });
        }
        let ring = LaurentRing::new(rank);
        let x = Word::generator(1);
        let y = Word::generator(2);
        let a_word = x.mul(&Word::commutator(&y, &x));
        Ok(SubgroupH {
            ring,
            a: evaluate(&a_word, ring)?,
            b: MagnusMatrix::generator(ring, 2)?,
            subset,
            a_word,
        })
    }

    /// `H` with every `z_j` included.
    pub fn full(rank: usize) -> Result<Self, SubgroupError> {
        Self::new(rank, 3..=rank)
    }

    pub fn ring(&self) -> LaurentRing {
        self.ring
    }

    pub fn rank(&self) -> usize {
        self.ring.rank()
    }

    pub fn subset(&self) -> &[usize] {
        &self.subset
    }

    pub fn a(&self) -> &MagnusMatrix {
        &self.a
    }

    pub fn b(&self) -> &MagnusMatrix {
        &self.b
    }

    /// Generator indices of the H-alphabet: `1 = a`, `2 = b`, then `J`.
    pub fn letters(&self) -> Vec<usize> {
        [1, 2].into_iter().chain(self.subset.iter().copied()).collect()
    }

    /// `a`, `b`, `z_j` as words over `x, y, z`.
    pub fn generator_words(&self) -> Vec<Word> {
        let mut out = vec![self.a_word.clone(), Word::generator(2)];
        out.extend(self.subset.iter().map(|&j| Word::generator(j)));
        out
    }

    /// Rewrites a word over the H-alphabet as a word over `x, y, z`.
    pub fn expand(&self, h_word: &Word) -> Result<Word, SubgroupError> {
        let allowed = self.letters();
        if let Some(l) = h_word.letters().iter().find(|l| !allowed.contains(&l.generator)) {
            return Err(SubgroupError::NotAnHGenerator(l.generator));
        }
        Ok(self.psi_word(h_word))
    }

    /// The substitution `x -> a, y -> b, z_i -> z_i`.
    pub fn psi_word(&self, w: &Word) -> Word {
        let mut images = vec![self.a_word.clone(), Word::generator(2)];
        images.extend((3..=w.max_generator().max(2)).map(Word::generator));
        w.substitute(&images)
    }

    /// Applies `lambda` to the module part; `c` is unchanged.
    pub fn psi_star(&self, s: &MagnusMatrix) -> Result<MagnusMatrix, SubgroupError> {
        self.ring.check(&s.ring())?;
        let [[e_e, e_f], _] = lambda_matrix(self.ring);
        let g = s.gamma();
        let mut gamma = g.to_vec();
        gamma[0] = &g[0] * &e_e;
        gamma[1] = &(&g[0] * &e_f) + &g[1];
        Ok(MagnusMatrix::new(s.c().clone(), gamma)?)
    }

    /// The inverse of `lambda` applied to the module part, when it stays
    /// integral: `gamma_1 -> gamma_1 s2 / (2 s2 - 1)`,
    /// `gamma_2 -> gamma_1 (s1 - 1) / (2 s2 - 1) + gamma_2`.
    pub fn psi1_star(&self, s: &MagnusMatrix) -> Result<Option<MagnusMatrix>, SubgroupError> {
        self.ring.check(&s.ring())?;
        Ok(self.psi1_parts(s)?.map(|(_, m)| m))
    }

    fn psi1_parts(&self, s: &MagnusMatrix) -> Result<Option<(LaurentPoly, MagnusMatrix)>, SubgroupError> {
        let ring = self.ring;
        let g = s.gamma();
        let Some(q) = g[0].divide_exact(&two_beta_minus_one(ring))? else {
            return Ok(None);
        };
        let beta = ring.var(2)?;
        let alpha_minus_one = &ring.var(1)? - &ring.one();
        let mut gamma = g.to_vec();
        gamma[0] = &q * &beta;
        gamma[1] = &(&q * &alpha_minus_one) + &g[1];
        Ok(Some((q, MagnusMatrix::new(s.c().clone(), gamma)?)))
    }

    /// Decides `S in mu(H)` for `S in mu(Phi)`.
    pub fn contains(&self, s: &MagnusMatrix) -> Result<MembershipVerdict, SubgroupError> {
        self.ring.check(&s.ring())?;
        if !s.bachmuth_check() {
            return Err(SubgroupError::NotInImage(s.to_string()));
        }
        let support = self.letters();
        let fail = |check, datum| Ok(MembershipVerdict::NonMember(Failure { check, datum }));

        for (i, &e) in s.c().exponents().iter().enumerate() {
            if e != 0 && !support.contains(&(i + 1)) {
                return fail(Check::CExponent, format!("exponent of s{} is {e}", i + 1));
            }
        }
        for (i, g) in s.gamma().iter().enumerate() {
            if !g.is_zero() && !support.contains(&(i + 1)) {
                return fail(Check::GammaVanishing, format!("gamma_{} = {g}", i + 1));
            }
        }
        for (i, g) in s.gamma().iter().enumerate() {
            if !g.uses_only(&support) {
                return fail(Check::Subring, format!("gamma_{} = {g}", i + 1));
            }
        }
        match self.psi1_parts(s)? {
            None => fail(Check::Divisibility, s.gamma()[0].to_string()),
            Some((q, pre)) => Ok(MembershipVerdict::Member(Certificate {
                quotient: q.to_string(),
                preimage: pre.to_record(),
            })),
        }
    }

    /// `(w^m in H, w in H)`, each computed independently.
    pub fn check_root_implication(&self, w: &Word, m: i64) -> Result<(bool, bool), SubgroupError> {
        if m < 2 {
            return Err(SubgroupError::RootExponent(m));
        }
        let s = evaluate(w, self.ring)?;
        let power = self.contains(&s.power(m))?.member();
        let base = self.contains(&s)?.member();
        Ok((power, base))
    }
}

/// True iff `2 s2 - 1` does not divide `1 + c + ... + c^(m-1)`.
pub fn coprimality_witness(c: &Monomial, m: i64) -> Result<bool, SubgroupError> {
    if m < 2 {
        return Err(SubgroupError::RootExponent(m));
    }
    if c.rank() < 2 {
        return Err(SubgroupError::RankTooSmall(c.rank()));
    }
    let ring = LaurentRing::new(c.rank());
    let sum = geometric_sum(ring, c, m)?;
    Ok(sum.divide_exact(&two_beta_minus_one(ring))?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{parse, ParseOptions};

    fn h2() -> SubgroupH {
        SubgroupH::new(2, []).unwrap()
    }

    fn eval(text: &str, rank: usize) -> MagnusMatrix {
        let w = parse(text, ParseOptions::with_aliases(rank)).unwrap();
        evaluate(&w, LaurentRing::new(rank)).unwrap()
    }

    #[test]
    fn construction() {
        assert!(matches!(SubgroupH::new(1, []), Err(SubgroupError::RankTooSmall(1))));
        assert!(matches!(
            SubgroupH::new(4, [2]),
            Err(SubgroupError::InvalidSubset { index: 2, rank: 4 })
        ));
        assert!(SubgroupH::new(4, [5]).is_err());
        let h = SubgroupH::new(4, [4, 3, 4]).unwrap();
        assert_eq!(h.subset(), &[3, 4]);
        assert_eq!(h.letters(), vec![1, 2, 3, 4]);
        assert_eq!(SubgroupH::full(5).unwrap().subset(), &[3, 4, 5]);
    }

    #[test]
    fn generator_images() {
        let h = h2();
        assert_eq!(h.a(), &eval("x [y,x]", 2));
        assert_eq!(h.b(), &eval("y", 2));
        assert_eq!(h.a().to_string(), r#"c=[1,0], gamma=["2 - s2^-1", "s2^-1 - s1*s2^-1"]"#);
    }

    #[test]
    fn psi_star_examples() {
        let h = h2();
        assert_eq!(h.psi_star(&eval("x", 2)).unwrap(), *h.a());
        assert_eq!(h.psi_star(&eval("y", 2)).unwrap(), *h.b());
        let id = MagnusMatrix::identity(h.ring());
        assert_eq!(h.psi_star(&id).unwrap(), id);
    }

    #[test]
    fn psi1_star_examples() {
        let h = h2();
        assert_eq!(h.psi1_star(h.a()).unwrap(), Some(eval("x", 2)));
        assert_eq!(h.psi1_star(&eval("y", 2)).unwrap(), Some(eval("y", 2)));
        assert_eq!(h.psi1_star(&eval("x", 2)).unwrap(), None);
    }

    #[test]
    fn lambda_determinant() {
        let ring = LaurentRing::new(2);
        let [[a, b], [c, d]] = lambda_matrix(ring);
        assert_eq!(a, ring.parse("2 - b^-1").unwrap());
        assert_eq!(b, ring.parse("b^-1 - a*b^-1").unwrap());
        assert!(c.is_zero());
        assert!(d.is_one());
        let det = &(&a * &d) - &(&b * &c);
        assert_eq!(det, ring.parse("2 - b^-1").unwrap());
        // (2 s2 - 1) / s2
        assert_eq!(&det * &ring.var(2).unwrap(), two_beta_minus_one(ring));
    }

    #[test]
    fn contains_examples() {
        let h = h2();
        let x = h.contains(&eval("x", 2)).unwrap();
        assert!(!x.member());
        assert_eq!(
            x,
            MembershipVerdict::NonMember(Failure {
                check: Check::Divisibility,
                datum: "1".into()
            })
        );
        assert!(h.contains(&eval("a b^-2 a^-1 b", 2)).unwrap().member());
        assert!(!h.contains(&eval("x^2", 2)).unwrap().member());
        assert!(!h.contains(&eval("[x,y]", 2)).unwrap().member());
        assert!(h.contains(&MagnusMatrix::identity(h.ring())).unwrap().member());
    }

    #[test]
    fn contains_rejects_matrices_outside_the_image() {
        let ring = LaurentRing::new(2);
        let bad = MagnusMatrix::new(Monomial::var(2, 1).unwrap(), vec![ring.zero(), ring.zero()]).unwrap();
        assert!(matches!(h2().contains(&bad), Err(SubgroupError::NotInImage(_))));
        let r3 = MagnusMatrix::identity(LaurentRing::new(3));
        assert!(matches!(h2().contains(&r3), Err(SubgroupError::Laurent(_))));
    }

    #[test]
    fn certificate_serialization() {
        let v = h2().contains(&eval("a", 2)).unwrap();
        let json = v.to_json().to_string();
        assert_eq!(
            json,
            r#"{"certificate":{"preimage":{"c":[1,0],"gamma":["1","0"]},"quotient":"s2^-1"},"member":true}"#
        );
        let v = h2().contains(&eval("x", 2)).unwrap();
        assert_eq!(
            v.to_json().to_string(),
            r#"{"failure":{"check":"divisibility","datum":"1"},"member":false}"#
        );
    }

    #[test]
    fn general_rank_checks() {
        let h = SubgroupH::new(4, [3]).unwrap();
        assert!(h.contains(&eval("a z3 b^-1 z3^-2", 4)).unwrap().member());
        let v = h.contains(&eval("z4", 4)).unwrap();
        assert!(matches!(v, MembershipVerdict::NonMember(Failure { check: Check::CExponent, .. })));
        let v = h.contains(&eval("[a, z4]", 4)).unwrap();
        assert!(matches!(v, MembershipVerdict::NonMember(Failure { check: Check::GammaVanishing, .. })));
        // z4 b z4^-1 keeps c and the gamma support inside {1,2} but gamma_2 picks up s4
        let v = h.contains(&eval("[z4, b]", 4)).unwrap();
        assert!(!v.member());
        let none = SubgroupH::new(4, []).unwrap();
        assert!(!none.contains(&eval("z3", 4)).unwrap().member());
        assert!(none.contains(&eval("a b", 4)).unwrap().member());
    }

    #[test]
    fn subring_check_fires() {
        // c = 1, gamma_1 = (1 - s2) s4, gamma_2 = -(1 - s1) s4 satisfies Bachmuth
        // with only gamma_1, gamma_2 nonzero, but both involve s4.
        let ring = LaurentRing::new(4);
        let g1 = ring.parse("s4 - s2*s4").unwrap();
        let g2 = ring.parse("s1*s4 - s4").unwrap();
        let s = MagnusMatrix::new(Monomial::one(4), vec![g1, g2, ring.zero(), ring.zero()]).unwrap();
        assert!(s.bachmuth_check());
        let v = SubgroupH::new(4, [3]).unwrap().contains(&s).unwrap();
        assert!(matches!(v, MembershipVerdict::NonMember(Failure { check: Check::Subring, .. })));
    }

    #[test]
    fn root_implication_examples() {
        let h = h2();
        let w = |t: &str| parse(t, ParseOptions::with_aliases(2)).unwrap();
        assert_eq!(h.check_root_implication(&w("x"), 2).unwrap(), (false, false));
        assert_eq!(h.check_root_implication(&w("a"), 3).unwrap(), (true, true));
        assert_eq!(h.check_root_implication(&w("a b^2"), 5).unwrap(), (true, true));
        assert_eq!(h.check_root_implication(&w("b^5"), 7).unwrap(), (true, true));
        assert!(matches!(
            h.check_root_implication(&w("x"), 1),
            Err(SubgroupError::RootExponent(1))
        ));
    }

    #[test]
    fn coprimality_examples() {
        assert!(coprimality_witness(&Monomial::from_exponents(&[1, 0]), 3).unwrap());
        assert!(coprimality_witness(&Monomial::from_exponents(&[0, 0]), 2).unwrap());
        assert!(coprimality_witness(&Monomial::from_exponents(&[0, 1]), 2).unwrap());
        assert!(coprimality_witness(&Monomial::from_exponents(&[0, 1]), 1).is_err());
    }

    #[test]
    fn psi_word_substitutes_generators() {
        let h = SubgroupH::full(3).unwrap();
        let w = parse("x y z3", ParseOptions::new(3)).unwrap();
        let expect = parse("a b z3", ParseOptions::with_aliases(3)).unwrap();
        assert_eq!(h.psi_word(&w), expect);
        let hw = parse("x y^-1 z3", ParseOptions::new(3)).unwrap();
        assert_eq!(h.expand(&hw).unwrap(), parse("a b^-1 z3", ParseOptions::with_aliases(3)).unwrap());
        let h = SubgroupH::new(4, [4]).unwrap();
        assert_eq!(h.expand(&Word::generator(3)), Err(SubgroupError::NotAnHGenerator(3)));
    }
}
