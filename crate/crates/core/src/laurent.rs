//! Exact arithmetic in the integer Laurent polynomial ring `Z[s1^±1, ..., sn^±1]`.
//!
//! Every polynomial carries the [`LaurentRing`] it lives in; combining values of
//! different rank is an error ([`LaurentError::RankMismatch`]) through the
//! `checked_*` methods and a panic through the operator impls.
//!
//! Terms are kept sorted by exponent vector (lexicographic) with no zero
//! coefficients, so structural equality is polynomial equality.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LaurentError {
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("unsupported divisor `{0}`: needs degree >= 1 in some variable with a single-term leading coefficient")]
    UnsupportedDivisor(String),
    #[error("geometric sum needs at least one term (got m = {0})")]
    EmptyGeometricSum(i64),
    #[error("variable index {index} outside 1..={rank}")]
    VariableOutOfRange { index: usize, rank: usize },
    #[error("polynomial parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// The ring context: the number of variables `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LaurentRing {
    rank: usize,
}

impl LaurentRing {
    pub fn new(rank: usize) -> Self {
        LaurentRing { rank }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn zero(&self) -> LaurentPoly {
        LaurentPoly {
            ring: *self,
            terms: Vec::new(),
        }
    }

    pub fn one(&self) -> LaurentPoly {
        self.constant(1)
    }

    pub fn constant(&self, c: impl Into<BigInt>) -> LaurentPoly {
        LaurentPoly::term(*self, Monomial::one(self.rank), c.into())
    }

    /// The variable `s_i`, 1-based.
    pub fn var(&self, i: usize) -> Result<LaurentPoly, LaurentError> {
        let m = Monomial::var(self.rank, i)?;
        Ok(LaurentPoly::from_monomial(*self, m))
    }

    pub fn parse(&self, text: &str) -> Result<LaurentPoly, LaurentError> {
        PolyParser::new(*self, text).parse()
    }

    pub(crate) fn check(&self, other: &LaurentRing) -> Result<(), LaurentError> {
        if self.rank == other.rank {
            Ok(())
        } else {
            Err(LaurentError::RankMismatch {
                left: self.rank,
                right: other.rank,
            })
        }
    }
}

/// A unit monomial `s1^j1 * ... * sn^jn`; exponents may be negative.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(SmallVec<[i64; 4]>);

impl Monomial {
    pub fn one(rank: usize) -> Self {
        Monomial(SmallVec::from_elem(0, rank))
    }

    /// `s_i`, 1-based.
    pub fn var(rank: usize, i: usize) -> Result<Self, LaurentError> {
        if i == 0 || i > rank {
            return Err(LaurentError::VariableOutOfRange { index: i, rank });
        }
        let mut m = Self::one(rank);
        m.0[i - 1] = 1;
        Ok(m)
    }

    pub fn from_exponents(exponents: &[i64]) -> Self {
        Monomial(SmallVec::from_slice(exponents))
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[i64] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Sum of the exponents.
    pub fn total_degree(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.rank(), other.rank(), "monomial rank mismatch");
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.rank(), other.rank(), "monomial rank mismatch");
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn inv(&self) -> Monomial {
        Monomial(self.0.iter().map(|e| -e).collect())
    }

    pub fn pow(&self, k: i64) -> Monomial {
        Monomial(self.0.iter().map(|e| e * k).collect())
    }

    pub(crate) fn mul_var(&mut self, var: usize, k: i64) {
        self.0[var] += k;
    }

    fn with_exponent(&self, var: usize, e: i64) -> Monomial {
        let mut m = self.clone();
        m.0[var] = e;
        m
    }

    fn write_factors(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "s{}", i + 1)?;
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }

    /// Print order: descending powers of `s2`, then ascending in the others.
    fn display_cmp(&self, other: &Monomial) -> Ordering {
        let key = |m: &Monomial| -> SmallVec<[i64; 4]> {
            let e = &m.0;
            match e.len() {
                0 => SmallVec::new(),
                1 => SmallVec::from_elem(-e[0], 1),
                _ => std::iter::once(-e[1])
                    .chain(std::iter::once(e[0]))
                    .chain(e[2..].iter().copied())
                    .collect(),
            }
        };
        key(self).cmp(&key(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            f.write_str("1")
        } else {
            self.write_factors(f)
        }
    }
}

/// A Laurent polynomial with arbitrary-precision integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    ring: LaurentRing,
    terms: Vec<(Monomial, BigInt)>,
}

impl LaurentPoly {
    pub fn term(ring: LaurentRing, m: Monomial, c: BigInt) -> Self {
        assert_eq!(m.rank(), ring.rank, "monomial rank mismatch");
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        LaurentPoly { ring, terms }
    }

    pub fn from_monomial(ring: LaurentRing, m: Monomial) -> Self {
        Self::term(ring, m, BigInt::one())
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates.
    pub fn from_terms<I>(ring: LaurentRing, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, BigInt)>,
    {
        let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.rank(), ring.rank, "monomial rank mismatch");
            *acc.entry(m).or_default() += c;
        }
        Self::from_map(ring, acc)
    }

    fn from_map(ring: LaurentRing, acc: HashMap<Monomial, BigInt>) -> Self {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        LaurentPoly { ring, terms }
    }

    pub fn ring(&self) -> LaurentRing {
        self.ring
    }

    pub fn terms(&self) -> &[(Monomial, BigInt)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        match self.terms.binary_search_by(|(t, _)| t.cmp(m)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    pub fn checked_add(&self, other: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
        self.ring.check(&other.ring)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
        self.ring.check(&other.ring)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
        self.ring.check(&other.ring)?;
        if self.is_zero() || other.is_zero() {
            return Ok(self.ring.zero());
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return Ok(self.scale_term(m, c));
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return Ok(other.scale_term(m, c));
        }
        let mut acc: HashMap<Monomial, BigInt> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                *acc.entry(ma.mul(mb)).or_default() += ca * cb;
            }
        }
        Ok(Self::from_map(self.ring, acc))
    }

    fn merge(&self, other: &LaurentPoly, negate_other: bool) -> LaurentPoly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let sign = |c: &BigInt| if negate_other { -c } else { c.clone() };
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match ma.cmp(mb) {
                Ordering::Less => {
                    out.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((mb.clone(), sign(cb)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other { ca - cb } else { ca + cb };
                    if !c.is_zero() {
                        out.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().map(|(m, c)| (m.clone(), sign(c))));
        LaurentPoly {
            ring: self.ring,
            terms: out,
        }
    }

    /// Multiplication by the single term `c * m`. Lex order is translation
    /// invariant, so no re-sort is needed.
    pub fn scale_term(&self, m: &Monomial, c: &BigInt) -> LaurentPoly {
        if c.is_zero() {
            return self.ring.zero();
        }
        LaurentPoly {
            ring: self.ring,
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect(),
        }
    }

    pub fn shift(&self, m: &Monomial) -> LaurentPoly {
        self.scale_term(m, &BigInt::one())
    }

    /// Adds `c * m` in place.
    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        assert_eq!(m.rank(), self.ring.rank, "monomial rank mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.binary_search_by(|(t, _)| t.cmp(&m)) {
            Ok(i) => {
                self.terms[i].1 += c;
                if self.terms[i].1.is_zero() {
                    self.terms.remove(i);
                }
            }
            Err(i) => self.terms.insert(i, (m, c)),
        }
    }

    pub fn pow(&self, k: u32) -> LaurentPoly {
        let mut acc = self.ring.one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// True when no term involves a variable outside `allowed` (1-based indices).
    pub fn uses_only(&self, allowed: &[usize]) -> bool {
        self.terms.iter().all(|(m, _)| {
            m.exponents()
                .iter()
                .enumerate()
                .all(|(i, &e)| e == 0 || allowed.contains(&(i + 1)))
        })
    }

    /// Terms whose total degree lies in `lo..=hi`.
    pub fn degree_slice(&self, lo: i64, hi: i64) -> LaurentPoly {
        LaurentPoly {
            ring: self.ring,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| (lo..=hi).contains(&m.total_degree()))
                .cloned()
                .collect(),
        }
    }

    /// Exact quotient `self / divisor`, or `None` when the divisor does not
    /// divide `self` in the integer Laurent ring.
    ///
    /// The divisor must have degree at least one in some variable `v`, and its
    /// top coefficient in `v` must be a single term. Division with remainder is
    /// carried out over the rationals with `v` as the main variable; the
    /// division succeeds iff the remainder vanishes and the quotient is integral.
    pub fn divide_exact(&self, divisor: &LaurentPoly) -> Result<Option<LaurentPoly>, LaurentError> {
        self.ring.check(&divisor.ring)?;
        if divisor.is_zero() {
            return Err(LaurentError::DivisionByZero);
        }
        let v = divisor
            .main_variable()
            .ok_or_else(|| LaurentError::UnsupportedDivisor(divisor.to_string()))?;
        if self.is_zero() {
            return Ok(Some(self.ring.zero()));
        }

        let (d_low, d_high) = divisor.v_range(v);
        let (p_low, _) = self.v_range(v);
        let (lead_m, lead_c) = divisor
            .terms
            .iter()
            .find(|(m, _)| m.0[v] == d_high)
            .map(|(m, c)| (m.with_exponent(v, 0), BigRational::from_integer(c.clone())))
            .expect("leading group is non-empty");
        let d = RationalLaurentPoly::from(divisor);
        let mut rem = RationalLaurentPoly::from(self);
        let mut quotient = RationalLaurentPoly::zero(self.ring);
        let stop = p_low - d_low;

        while let Some(top) = rem.max_exponent(v) {
            let shift = top - d_high;
            if shift < stop {
                break;
            }
            // t = (coefficient of v^top in rem) / lead * v^shift
            let t: Vec<(Monomial, BigRational)> = rem
                .terms
                .iter()
                .filter(|(m, _)| m.0[v] == top)
                .map(|(m, c)| {
                    let mut q = m.div(&lead_m);
                    q.0[v] = shift;
                    (q, c / &lead_c)
                })
                .collect();
            for (m, c) in &t {
                rem = rem.sub(&d.scale_term(m, c));
                quotient.add_term(m.clone(), c.clone());
            }
        }
        if !rem.is_zero() {
            return Ok(None);
        }
        Ok(quotient.to_integer())
    }

    /// First variable in which `self` is a valid divisor for [`divide_exact`].
    fn main_variable(&self) -> Option<usize> {
        (0..self.ring.rank).find(|&v| {
            let (lo, hi) = self.v_range(v);
            hi > lo && self.terms.iter().filter(|(m, _)| m.0[v] == hi).count() == 1
        })
    }

    fn v_range(&self, v: usize) -> (i64, i64) {
        let mut it = self.terms.iter().map(|(m, _)| m.0[v]);
        let first = it.next().unwrap_or(0);
        it.fold((first, first), |(lo, hi), e| (lo.min(e), hi.max(e)))
    }
}

/// `1 + c + c^2 + ... + c^(m-1)`.
pub fn geometric_sum(ring: LaurentRing, c: &Monomial, m: i64) -> Result<LaurentPoly, LaurentError> {
    if m < 1 {
        return Err(LaurentError::EmptyGeometricSum(m));
    }
    if c.rank() != ring.rank {
        return Err(LaurentError::RankMismatch {
            left: ring.rank,
            right: c.rank(),
        });
    }
    let terms = (0..m).map(|k| (c.pow(k), BigInt::one()));
    Ok(LaurentPoly::from_terms(ring, terms))
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut order: Vec<&(Monomial, BigInt)> = self.terms.iter().collect();
        order.sort_by(|a, b| a.0.display_cmp(&b.0));
        for (k, (m, c)) in order.into_iter().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if m.is_one() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                m.write_factors(f)?;
            }
        }
        Ok(())
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_add(rhs).expect("LaurentPoly addition")
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_sub(rhs).expect("LaurentPoly subtraction")
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_mul(rhs).expect("LaurentPoly multiplication")
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            ring: self.ring,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

/// Scratch space for division: rational coefficients, same canonical form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalLaurentPoly {
    ring: LaurentRing,
    terms: Vec<(Monomial, BigRational)>,
}

impl RationalLaurentPoly {
    pub fn zero(ring: LaurentRing) -> Self {
        RationalLaurentPoly {
            ring,
            terms: Vec::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, BigRational)] {
        &self.terms
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.binary_search_by(|(t, _)| t.cmp(&m)) {
            Ok(i) => {
                self.terms[i].1 += c;
                if self.terms[i].1.is_zero() {
                    self.terms.remove(i);
                }
            }
            Err(i) => self.terms.insert(i, (m, c)),
        }
    }

    pub fn scale_term(&self, m: &Monomial, c: &BigRational) -> Self {
        RationalLaurentPoly {
            ring: self.ring,
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    fn max_exponent(&self, v: usize) -> Option<i64> {
        self.terms.iter().map(|(m, _)| m.0[v]).max()
    }

    /// Lossless conversion when every coefficient is an integer.
    pub fn to_integer(&self) -> Option<LaurentPoly> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            if !c.is_integer() {
                return None;
            }
            terms.push((m.clone(), c.to_integer()));
        }
        Some(LaurentPoly {
            ring: self.ring,
            terms,
        })
    }
}

impl From<&LaurentPoly> for RationalLaurentPoly {
    fn from(p: &LaurentPoly) -> Self {
        RationalLaurentPoly {
            ring: p.ring,
            terms: p
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), BigRational::from_integer(c.clone())))
                .collect(),
        }
    }
}

struct PolyParser<'a> {
    ring: LaurentRing,
    src: &'a [u8],
    pos: usize,
}

impl<'a> PolyParser<'a> {
    fn new(ring: LaurentRing, text: &'a str) -> Self {
        PolyParser {
            ring,
            src: text.as_bytes(),
            pos: 0,
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, LaurentError> {
        Err(LaurentError::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn parse(mut self) -> Result<LaurentPoly, LaurentError> {
        let mut out = self.ring.zero();
        let mut first = true;
        loop {
            let negative = match self.peek() {
                None if first => return self.err("empty polynomial"),
                None => break,
                Some(b'+') => {
                    self.pos += 1;
                    false
                }
                Some(b'-') => {
                    self.pos += 1;
                    true
                }
                Some(_) if first => false,
                Some(c) => return self.err(format!("expected `+` or `-`, found `{}`", c as char)),
            };
            first = false;
            let (m, mut c) = self.term()?;
            if negative {
                c = -c;
            }
            out.add_term(m, c);
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<(Monomial, BigInt), LaurentError> {
        let mut coeff = BigInt::one();
        let mut mono = Monomial::one(self.ring.rank);
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let d = self.digits().unwrap();
                    coeff *= d.parse::<BigInt>().expect("digits");
                }
                Some(b's' | b'a' | b'b') => {
                    let var = self.variable()?;
                    let mut e = 1i64;
                    if self.peek() == Some(b'^') {
                        self.pos += 1;
                        e = self.exponent()?;
                    }
                    mono.0[var] += e;
                }
                Some(c) => return self.err(format!("unexpected `{}`", c as char)),
                None => return self.err("unexpected end of input"),
            }
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                return Ok((mono, coeff));
            }
        }
    }

    fn variable(&mut self) -> Result<usize, LaurentError> {
        let c = self.src[self.pos];
        self.pos += 1;
        let index = match c {
            b'a' | b'b' if self.ring.rank != 2 => {
                return self.err("aliases `a`/`b` are only accepted in rank 2");
            }
            b'a' => 1,
            b'b' => 2,
            _ => match self.digits() {
                Some(d) => d.parse::<usize>().unwrap_or(0),
                None => return self.err("expected a variable index after `s`"),
            },
        };
        if index == 0 || index > self.ring.rank {
            return self.err(format!("variable s{index} outside rank {}", self.ring.rank));
        }
        Ok(index - 1)
    }

    fn exponent(&mut self) -> Result<i64, LaurentError> {
        let negative = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            _ => false,
        };
        self.skip_ws();
        match self.digits().and_then(|d| d.parse::<i64>().ok()) {
            Some(e) if negative => Ok(-e),
            Some(e) => Ok(e),
            None => self.err("expected an integer exponent"),
        }
    }
}
