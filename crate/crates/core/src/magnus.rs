//! The Magnus representation of the free metabelian group of rank `n`.
//!
//! A group element is stored as the pair `(c, gamma)` standing for the
//! upper-unitriangular matrix `[[c, sum gamma_i t_i], [0, 1]]`, where `c` is a
//! unit monomial and the `gamma_i` are Laurent polynomials. The product rule
//! is `(c1, g1) * (c2, g2) = (c1 c2, c1 g2 + g1)`.

use std::collections::HashMap;
use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::laurent::{geometric_sum, LaurentError, LaurentPoly, LaurentRing, Monomial};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MagnusMatrix {
    c: Monomial,
    gamma: Vec<LaurentPoly>,
}

impl MagnusMatrix {
    pub fn new(c: Monomial, gamma: Vec<LaurentPoly>) -> Result<Self, LaurentError> {
        let rank = c.rank();
        if gamma.len() != rank {
            return Err(LaurentError::RankMismatch {
                left: rank,
                right: gamma.len(),
            });
        }
        let ring = LaurentRing::new(rank);
        for g in &gamma {
            ring.check(&g.ring())?;
        }
        Ok(MagnusMatrix { c, gamma })
    }

    pub fn identity(ring: LaurentRing) -> Self {
        MagnusMatrix {
            c: Monomial::one(ring.rank()),
            gamma: vec![ring.zero(); ring.rank()],
        }
    }

    /// `mu(x_i) = (s_i, t_i)`, 1-based.
    pub fn generator(ring: LaurentRing, i: usize) -> Result<Self, LaurentError> {
        let c = Monomial::var(ring.rank(), i)?;
        let mut gamma = vec![ring.zero(); ring.rank()];
        gamma[i - 1] = ring.one();
        Ok(MagnusMatrix { c, gamma })
    }

    pub fn ring(&self) -> LaurentRing {
        LaurentRing::new(self.c.rank())
    }

    pub fn c(&self) -> &Monomial {
        &self.c
    }

    pub fn gamma(&self) -> &[LaurentPoly] {
        &self.gamma
    }

    pub fn is_identity(&self) -> bool {
        self.c.is_one() && self.gamma.iter().all(LaurentPoly::is_zero)
    }

    pub fn checked_mul(&self, other: &MagnusMatrix) -> Result<MagnusMatrix, LaurentError> {
        self.ring().check(&other.ring())?;
        let gamma = self
            .gamma
            .iter()
            .zip(&other.gamma)
            .map(|(g1, g2)| &g2.shift(&self.c) + g1)
            .collect();
        Ok(MagnusMatrix {
            c: self.c.mul(&other.c),
            gamma,
        })
    }

    pub fn inverse(&self) -> MagnusMatrix {
        let c_inv = self.c.inv();
        let minus_one = -BigInt::one();
        let gamma = self
            .gamma
            .iter()
            .map(|g| g.scale_term(&c_inv, &minus_one))
            .collect();
        MagnusMatrix { c: c_inv, gamma }
    }

    /// Right multiplication by `mu(x_i)^(+-1)` without a general product.
    pub(crate) fn mul_generator(&mut self, i: usize, inverse: bool) {
        let idx = i - 1;
        if inverse {
            self.c.mul_var(idx, -1);
            self.gamma[idx].add_term(self.c.clone(), -BigInt::one());
        } else {
            self.gamma[idx].add_term(self.c.clone(), BigInt::one());
            self.c.mul_var(idx, 1);
        }
    }

    /// `S^m` by the closed forms
    /// `S^m = (c^m, (1 + c + ... + c^(m-1)) gamma)` and
    /// `S^-m = (c^-m, -(c^-1 + ... + c^-m) gamma)`.
    pub fn power(&self, m: i64) -> MagnusMatrix {
        let ring = self.ring();
        if m == 0 {
            return MagnusMatrix::identity(ring);
        }
        let k = m.abs();
        let mut factor = geometric_sum(ring, &self.c, k).expect("k >= 1");
        if m < 0 {
            factor = factor.scale_term(&self.c.pow(-k), &-BigInt::one());
        }
        MagnusMatrix {
            c: self.c.pow(m),
            gamma: self.gamma.iter().map(|g| g * &factor).collect(),
        }
    }

    /// `S^-1 T^-1 S T`.
    pub fn commutator(&self, other: &MagnusMatrix) -> MagnusMatrix {
        &(&(&self.inverse() * &other.inverse()) * self) * other
    }

    /// Bachmuth's criterion: `sum gamma_i (1 - s_i) = 1 - c`.
    pub fn bachmuth_check(&self) -> bool {
        let ring = self.ring();
        let one = ring.one();
        let mut lhs = ring.zero();
        for (i, g) in self.gamma.iter().enumerate() {
            let s = ring.var(i + 1).expect("index in range");
            lhs = &lhs + &(g * &(&one - &s));
        }
        lhs == &one - &LaurentPoly::from_monomial(ring, self.c.clone())
    }

    /// Image in the class-`class` truncation (see [`TruncatedMatrix`]).
    pub fn truncate(&self, class: usize) -> TruncatedMatrix {
        let ring = self.ring();
        let mut sub = ShiftSubstitution::default();
        let c_poly = LaurentPoly::from_monomial(ring, self.c.clone());
        let n = class as i64;
        TruncatedMatrix {
            class,
            c_series: sub.apply(&c_poly, n - 1),
            gamma: self.gamma.iter().map(|g| sub.apply(g, n - 2)).collect(),
        }
    }

    pub fn to_record(&self) -> MatrixRecord {
        MatrixRecord {
            c: self.c.exponents().to_vec(),
            gamma: self.gamma.iter().map(|g| g.to_string()).collect(),
        }
    }

    pub fn from_record(ring: LaurentRing, record: &MatrixRecord) -> Result<Self, LaurentError> {
        if record.c.len() != ring.rank() {
            return Err(LaurentError::RankMismatch {
                left: ring.rank(),
                right: record.c.len(),
            });
        }
        let gamma = record
            .gamma
            .iter()
            .map(|t| ring.parse(t))
            .collect::<Result<Vec<_>, _>>()?;
        MagnusMatrix::new(Monomial::from_exponents(&record.c), gamma)
    }
}

impl Mul for &MagnusMatrix {
    type Output = MagnusMatrix;
    fn mul(self, rhs: &MagnusMatrix) -> MagnusMatrix {
        self.checked_mul(rhs).expect("MagnusMatrix multiplication")
    }
}

impl fmt::Display for MagnusMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.c.exponents().iter().map(i64::to_string).collect();
        let g: Vec<String> = self.gamma.iter().map(|g| format!("\"{g}\"")).collect();
        write!(f, "c=[{}], gamma=[{}]", c.join(","), g.join(", "))
    }
}

/// Serialized form `{ "c": [j1, ..., jn], "gamma": [poly-text, ...] }`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixRecord {
    pub c: Vec<i64>,
    pub gamma: Vec<String>,
}

/// A Magnus matrix after `s_i = 1 + u_i`, truncated at class `N`.
///
/// `c_series` keeps the terms of total degree `< N` and each `gamma_i` the
/// terms of degree `< N - 1`, since every `t_i` carries weight one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedMatrix {
    class: usize,
    c_series: LaurentPoly,
    gamma: Vec<LaurentPoly>,
}

impl TruncatedMatrix {
    pub fn identity(ring: LaurentRing, class: usize) -> Self {
        MagnusMatrix::identity(ring).truncate(class)
    }

    pub fn class(&self) -> usize {
        self.class
    }

    pub fn c_series(&self) -> &LaurentPoly {
        &self.c_series
    }

    pub fn gamma(&self) -> &[LaurentPoly] {
        &self.gamma
    }

    pub fn is_identity(&self) -> bool {
        self.c_series.is_one() && self.gamma.iter().all(LaurentPoly::is_zero)
    }

    /// Truncated product; both factors must share the class.
    pub fn mul(&self, other: &TruncatedMatrix) -> TruncatedMatrix {
        assert_eq!(self.class, other.class, "truncation class mismatch");
        let n = self.class as i64;
        let c_series = (&self.c_series * &other.c_series).degree_slice(0, n - 1);
        let gamma = self
            .gamma
            .iter()
            .zip(&other.gamma)
            .map(|(g1, g2)| (&(&self.c_series * g2) + g1).degree_slice(0, n - 2))
            .collect();
        TruncatedMatrix {
            class: self.class,
            c_series,
            gamma,
        }
    }
}

/// Substitutes `s_i = 1 + u_i` into Laurent polynomials, expanding negative
/// powers as binomial series and dropping terms above a degree bound.
#[derive(Default)]
pub(crate) struct ShiftSubstitution {
    series: HashMap<(i64, i64), Vec<BigInt>>,
}

impl ShiftSubstitution {
    /// Coefficients of `(1 + u)^e` up to `u^max_degree`.
    fn binomial_series(&mut self, e: i64, max_degree: i64) -> &[BigInt] {
        self.series.entry((e, max_degree)).or_insert_with(|| {
            let mut out = Vec::with_capacity(max_degree as usize + 1);
            let mut c = BigInt::one();
            out.push(c.clone());
            for k in 1..=max_degree {
                c = c * BigInt::from(e - k + 1) / BigInt::from(k);
                out.push(c.clone());
            }
            out
        })
    }

    pub(crate) fn apply(&mut self, p: &LaurentPoly, max_degree: i64) -> LaurentPoly {
        let ring = p.ring();
        if max_degree < 0 {
            return ring.zero();
        }
        let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
        for (m, c) in p.terms() {
            let mut partial: Vec<(Monomial, i64, BigInt)> =
                vec![(Monomial::one(ring.rank()), 0, c.clone())];
            for (var, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let series = self.binomial_series(e, max_degree).to_vec();
                let mut next = Vec::new();
                for (mono, deg, coeff) in &partial {
                    for (k, b) in series.iter().enumerate().take((max_degree - deg) as usize + 1) {
                        if b.is_zero() {
                            continue;
                        }
                        let mut m2 = mono.clone();
                        m2.mul_var(var, k as i64);
                        next.push((m2, deg + k as i64, coeff * b));
                    }
                }
                partial = next;
            }
            for (mono, _, coeff) in partial {
                *acc.entry(mono).or_default() += coeff;
            }
        }
        LaurentPoly::from_terms(ring, acc)
    }
}
