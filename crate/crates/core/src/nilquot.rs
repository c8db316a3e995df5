//! Lower central quotients of the free metabelian group and the witness
//! construction showing `x` lies in the image of `H` in every `Phi / gamma_n Phi`.
//!
//! Weight-`k` basic commutators `[x_i1, x_i2, ..., x_ik]` with
//! `i1 > i2 <= i3 <= ... <= ik` form a basis of `gamma_k / gamma_(k+1)`. An
//! element of `gamma_k` is read off in that basis from the degree `k - 1` part
//! of its Magnus coefficients after `s_i = 1 + u_i`.

use std::fmt;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::exec::{self, Execution};
use crate::laurent::{LaurentPoly, LaurentRing, Monomial};
use crate::linalg::{self, SolveError};
use crate::magnus::{MagnusMatrix, ShiftSubstitution};
use crate::subgroup::{SubgroupError, SubgroupH};
use crate::words::{evaluate, Alphabet, Word, WordError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NilError {
    #[error("element is not trivial modulo the class-{0} truncation")]
    NotInTerm(usize),
    #[error("weight-{0} coset system is inconsistent")]
    Inconsistent(usize),
    #[error("weight-{0} coset system has no unique solution")]
    Underdetermined(usize),
    #[error("weight-{0} coset coordinates are not integral")]
    NonIntegral(usize),
    #[error("weight must be at least 2 (got {0})")]
    Weight(usize),
    #[error("class {class} failed: {reason}")]
    ClassFailed { class: usize, reason: String },
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Subgroup(#[from] SubgroupError),
}

/// A left-normed commutator of generators; indices are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasicCommutator {
    indices: Vec<usize>,
}

impl BasicCommutator {
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn weight(&self) -> usize {
        self.indices.len()
    }

    /// The word with generator `i` replaced by `images[i - 1]`.
    pub fn word_in(&self, images: &[Word]) -> Word {
        let parts: Vec<Word> = self.indices.iter().map(|&i| images[i - 1].clone()).collect();
        Word::left_normed(&parts)
    }

    pub fn word(&self) -> Word {
        let parts: Vec<Word> = self.indices.iter().map(|&i| Word::generator(i)).collect();
        Word::left_normed(&parts)
    }

    /// The Magnus image with generator `i` sent to `images[i - 1]`.
    pub fn matrix_in(&self, images: &[MagnusMatrix]) -> MagnusMatrix {
        let mut it = self.indices.iter().map(|&i| &images[i - 1]);
        let first = it.next().expect("weight >= 1").clone();
        it.fold(first, |acc, g| acc.commutator(g))
    }

    pub fn render(&self, alphabet: Alphabet) -> String {
        let names: Vec<String> = self.indices.iter().map(|&i| alphabet.name(i)).collect();
        if names.len() == 1 {
            names[0].clone()
        } else {
            format!("[{}]", names.join(","))
        }
    }
}

impl fmt::Display for BasicCommutator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(Alphabet::Free))
    }
}

/// Weight-`k` basic commutators in rank `n`, in lexicographic order.
pub fn basic_commutators(weight: usize, rank: usize) -> Vec<BasicCommutator> {
    if weight == 0 {
        return Vec::new();
    }
    if weight == 1 {
        return (1..=rank).map(|i| BasicCommutator { indices: vec![i] }).collect();
    }
    let mut out = Vec::new();
    for i1 in 1..=rank {
        for i2 in 1..i1 {
            let mut tail = vec![i2; weight - 2];
            loop {
                let mut indices = vec![i1, i2];
                indices.extend_from_slice(&tail);
                out.push(BasicCommutator { indices });
                // next non-decreasing tail over i2..=rank
                let Some(pos) = tail.iter().rposition(|&t| t < rank) else {
                    break;
                };
                let v = tail[pos] + 1;
                for t in &mut tail[pos..] {
                    *t = v;
                }
            }
        }
    }
    out
}

/// `(k - 1) * C(n + k - 2, k)`, the rank of `gamma_k / gamma_(k+1)` for `k >= 2`.
pub fn quotient_rank(weight: usize, rank: usize) -> usize {
    let (n, k) = (rank as u128, weight as u128);
    let mut binom: u128 = 1;
    for i in 0..k {
        binom = binom * (n + k - 2 - i) / (i + 1);
    }
    ((k - 1) * binom) as usize
}

/// Degree `k - 1` coordinates of the Magnus coefficients of an element of
/// `gamma_k`, keyed by `(coefficient index, monomial in u)`.
fn leading_components(m: &MagnusMatrix, weight: usize) -> Result<Vec<(usize, Monomial, BigInt)>, NilError> {
    if !m.truncate(weight).is_identity() {
        return Err(NilError::NotInTerm(weight));
    }
    let mut sub = ShiftSubstitution::default();
    let d = weight as i64 - 1;
    let mut out = Vec::new();
    for (i, g) in m.gamma().iter().enumerate() {
        let shifted: LaurentPoly = sub.apply(g, d).degree_slice(d, d);
        for (mono, c) in shifted.terms() {
            out.push((i, mono.clone(), c.clone()));
        }
    }
    Ok(out)
}

/// Coset coordinates in `gamma_k / gamma_(k+1)` of a matrix known to lie in `gamma_k`.
pub fn express_matrix(m: &MagnusMatrix, weight: usize) -> Result<Vec<BigInt>, NilError> {
    if weight < 2 {
        return Err(NilError::Weight(weight));
    }
    let ring = m.ring();
    let generators: Vec<MagnusMatrix> = (1..=ring.rank())
        .map(|i| MagnusMatrix::generator(ring, i).expect("in range"))
        .collect();
    let basis = basic_commutators(weight, ring.rank());
    let columns: Vec<Vec<(usize, Monomial, BigInt)>> = basis
        .iter()
        .map(|c| leading_components(&c.matrix_in(&generators), weight))
        .collect::<Result<_, _>>()?;
    let target = leading_components(m, weight)?;

    let mut keys: Vec<(usize, Monomial)> = columns
        .iter()
        .flatten()
        .chain(&target)
        .map(|(i, mono, _)| (*i, mono.clone()))
        .collect();
    keys.sort();
    keys.dedup();
    let row = |key: &(usize, Monomial), comps: &[(usize, Monomial, BigInt)]| -> BigRational {
        comps
            .iter()
            .find(|(i, mono, _)| (*i, mono) == (key.0, &key.1))
            .map(|(_, _, c)| BigRational::from_integer(c.clone()))
            .unwrap_or_else(BigRational::zero)
    };
    let a: Vec<Vec<BigRational>> = keys
        .iter()
        .map(|k| columns.iter().map(|col| row(k, col)).collect())
        .collect();
    let b: Vec<BigRational> = keys.iter().map(|k| row(k, &target)).collect();
    if a.is_empty() {
        return Ok(vec![BigInt::zero(); basis.len()]);
    }
    let solution = linalg::solve(&a, &b).map_err(|e| match e {
        SolveError::Inconsistent => NilError::Inconsistent(weight),
        SolveError::Underdetermined => NilError::Underdetermined(weight),
    })?;
    solution
        .into_iter()
        .map(|q| q.is_integer().then(|| q.to_integer()).ok_or(NilError::NonIntegral(weight)))
        .collect()
}

/// Exponents `m_c` with `w = prod c^(m_c)` modulo `gamma_(k+1)`, over the
/// weight-`k` basic commutators of the given rank.
pub fn express_in_quotient(w: &Word, weight: usize, ring: LaurentRing) -> Result<Vec<BigInt>, NilError> {
    express_matrix(&evaluate(w, ring)?, weight)
}

/// The coefficient matrix of the weight-`k` basic commutators: one column
/// per commutator, one row per degree `k - 1` coordinate.
pub fn basis_coefficient_matrix(weight: usize, rank: usize) -> Vec<Vec<BigRational>> {
    let ring = LaurentRing::new(rank);
    let generators: Vec<MagnusMatrix> = (1..=rank)
        .map(|i| MagnusMatrix::generator(ring, i).expect("in range"))
        .collect();
    let columns: Vec<_> = basic_commutators(weight, rank)
        .iter()
        .map(|c| leading_components(&c.matrix_in(&generators), weight).expect("basic commutator lies in gamma_k"))
        .collect();
    let mut keys: Vec<(usize, Monomial)> = columns
        .iter()
        .flatten()
        .map(|(i, m, _)| (*i, m.clone()))
        .collect();
    keys.sort();
    keys.dedup();
    keys.iter()
        .map(|k| {
            columns
                .iter()
                .map(|col| {
                    col.iter()
                        .find(|(i, m, _)| (*i, m) == (k.0, &k.1))
                        .map(|(_, _, c)| BigRational::from_integer(c.clone()))
                        .unwrap_or_else(BigRational::zero)
                })
                .collect()
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessStep {
    pub weight: usize,
    pub exponents: Vec<i64>,
}

/// A word over `a, b` that agrees with `x` modulo `gamma_class`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessChain {
    class: usize,
    /// Reduced word over the H-alphabet (`1 = a`, `2 = b`).
    witness: Word,
    factors: Vec<(BasicCommutator, i64)>,
    steps: Vec<WitnessStep>,
}

impl WitnessChain {
    pub fn class(&self) -> usize {
        self.class
    }

    pub fn witness(&self) -> &Word {
        &self.witness
    }

    pub fn steps(&self) -> &[WitnessStep] {
        &self.steps
    }

    pub fn factors(&self) -> &[(BasicCommutator, i64)] {
        &self.factors
    }

    /// The witness as a product of commutator powers in `a, b`, e.g. `a [b,a]^-1`.
    pub fn factored_text(&self) -> String {
        if self.factors.is_empty() {
            return "1".into();
        }
        self.factors
            .iter()
            .map(|(c, e)| {
                let base = c.render(Alphabet::Subgroup);
                if *e == 1 {
                    base
                } else {
                    format!("{base}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// The witness rewritten over `x, y`.
    pub fn expand(&self) -> Word {
        let x = Word::generator(1);
        let y = Word::generator(2);
        let a = x.mul(&Word::commutator(&y, &x));
        self.witness.substitute(&[a, y])
    }
}

/// Builds `v_class` with `v_class^-1 x` in `gamma_class`, one weight at a
/// time: the coset of `v_k^-1 x` in `gamma_k / gamma_(k+1)` is read off in the
/// basic-commutator basis and the same commutators in `a, b` are appended.
/// Works in rank 2, since only `x`, `a` and `b` are involved.
pub fn lift_witness(class: usize) -> Result<WitnessChain, NilError> {
    let ring = LaurentRing::new(2);
    let x = MagnusMatrix::generator(ring, 1).expect("rank 2");
    let h = SubgroupH::new(2, [])?;
    let images = [h.a().clone(), h.b().clone()];

    let mut witness = Word::empty();
    let mut current = MagnusMatrix::identity(ring);
    let mut factors = Vec::new();
    let mut steps = Vec::new();

    for weight in 1..class {
        let defect = &current.inverse() * &x;
        let exps: Vec<BigInt> = if weight == 1 {
            defect.c().exponents().iter().map(|&e| BigInt::from(e)).collect()
        } else {
            express_matrix(&defect, weight)?
        };
        let exps: Vec<i64> = exps
            .iter()
            .map(|e| e.to_i64().ok_or(NilError::NonIntegral(weight)))
            .collect::<Result<_, _>>()?;
        for (c, &e) in basic_commutators(weight, 2).into_iter().zip(&exps) {
            if e == 0 {
                continue;
            }
            witness = witness.mul(&c.word().pow(e));
            current = &current * &c.matrix_in(&images).power(e);
            factors.push((c, e));
        }
        steps.push(WitnessStep {
            weight,
            exponents: exps,
        });
    }
    Ok(WitnessChain {
        class,
        witness,
        factors,
        steps,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassReport {
    pub class: usize,
    pub witness: String,
    pub trunc_equal: bool,
    pub in_h: bool,
    pub millis: u128,
}

impl fmt::Display for ClassReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let yes = |b: bool| if b { "yes" } else { "no" };
        write!(
            f,
            "class {}: witness {}, trunc-equal: {}, in-H: {}, ms: {}",
            self.class,
            self.witness,
            yes(self.trunc_equal),
            yes(self.in_h),
            self.millis
        )
    }
}

/// Runs [`lift_witness`] for every class `1..=max_class` and checks that each
/// witness matches `x` at its class and lies in `H`.
pub fn verify_nonseparability(
    max_class: usize,
    h: &SubgroupH,
    exec: Execution,
) -> Result<Vec<ClassReport>, NilError> {
    let x = MagnusMatrix::generator(h.ring(), 1).expect("rank >= 2");
    let results = exec::map_indexed(exec, max_class, |i| -> Result<ClassReport, NilError> {
        let class = i + 1;
        let start = Instant::now();
        let chain = lift_witness(class)?;
        let m = evaluate(&chain.expand(), h.ring())?;
        let trunc_equal = m.truncate(class) == x.truncate(class);
        let in_h = h.contains(&m)?.member();
        let report = ClassReport {
            class,
            witness: chain.factored_text(),
            trunc_equal,
            in_h,
            millis: start.elapsed().as_millis(),
        };
        if !trunc_equal || !in_h {
            return Err(NilError::ClassFailed {
                class,
                reason: report.to_string(),
            });
        }
        Ok(report)
    });
    results.into_iter().collect()
}
