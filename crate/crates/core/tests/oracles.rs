//! Independent oracles for the Magnus representation.

use std::collections::HashMap;

use metabelian::sample::{random_word, trial_rng};
use metabelian::{evaluate, parse, LaurentPoly, LaurentRing, MagnusMatrix, Monomial, ParseOptions, Word};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Abelianised Fox derivatives `d w / d x_i`, summed letter by letter.
fn fox_gamma(w: &Word, ring: LaurentRing) -> (Monomial, Vec<LaurentPoly>) {
    let n = ring.rank();
    let mut prefix = vec![0i64; n];
    let mut acc: Vec<HashMap<Vec<i64>, BigInt>> = vec![HashMap::new(); n];
    for l in w.letters() {
        let g = l.generator - 1;
        if l.inverse {
            prefix[g] -= 1;
            *acc[g].entry(prefix.clone()).or_default() -= 1;
        } else {
            *acc[g].entry(prefix.clone()).or_default() += 1;
            prefix[g] += 1;
        }
    }
    let gamma = acc
        .into_iter()
        .map(|terms| {
            LaurentPoly::from_terms(ring, terms.into_iter().map(|(e, c)| (Monomial::from_exponents(&e), c)))
        })
        .collect();
    (Monomial::from_exponents(&prefix), gamma)
}

#[test]
fn gamma_is_the_abelianised_fox_derivative() {
    for i in 0..300 {
        let mut rng = trial_rng(101, i);
        let rank = 2 + i % 3;
        let ring = LaurentRing::new(rank);
        let w = random_word(&mut rng, rank, 25);
        let m = evaluate(&w, ring).unwrap();
        let (c, gamma) = fox_gamma(&w, ring);
        assert_eq!(m.c(), &c, "{w}");
        assert_eq!(m.gamma(), gamma.as_slice(), "{w}");
    }
}

#[test]
fn fox_oracle_on_the_subgroup_generator() {
    let ring = LaurentRing::new(2);
    let a = parse("x [y,x]", ParseOptions::new(2)).unwrap();
    let (c, gamma) = fox_gamma(&a, ring);
    assert_eq!(c.exponents(), &[1, 0]);
    assert_eq!(gamma[0].to_string(), "2 - s2^-1");
    assert_eq!(gamma[1].to_string(), "s2^-1 - s1*s2^-1");
}

/// `binom(e, k)` for any integer `e`.
fn gbinom(e: i64, k: i64) -> BigRational {
    let mut r = BigRational::one();
    for j in 0..k {
        r = r * BigRational::from_integer(BigInt::from(e - j)) / BigRational::from_integer(BigInt::from(j + 1));
    }
    r
}

/// Coefficient of `u^alpha` in `p(1 + u)`.
fn taylor(p: &LaurentPoly, alpha: &[i64]) -> BigRational {
    p.terms().iter().fold(BigRational::zero(), |acc, (m, c)| {
        let prod = m
            .exponents()
            .iter()
            .zip(alpha)
            .fold(BigRational::from_integer(c.clone()), |t, (&e, &k)| t * gbinom(e, k));
        acc + prod
    })
}

fn exponent_vectors(rank: usize, max_total: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|v: Vec<i64>| {
                let used: i64 = v.iter().sum();
                (0..=max_total - used).map(move |k| {
                    let mut w = v.clone();
                    w.push(k);
                    w
                })
            })
            .collect();
    }
    out
}

fn assert_series(series: &LaurentPoly, p: &LaurentPoly, max_total: i64) {
    let mut seen = 0;
    for alpha in exponent_vectors(p.ring().rank(), max_total) {
        let expected = taylor(p, &alpha);
        let got = series.coefficient(&Monomial::from_exponents(&alpha));
        assert_eq!(BigRational::from_integer(got.clone()), expected, "u^{alpha:?} in {p}");
        if !got.is_zero() {
            seen += 1;
        }
    }
    assert_eq!(seen, series.num_terms(), "series has terms above degree {max_total}");
}

#[test]
fn truncation_matches_taylor_coefficients() {
    for i in 0..60 {
        let mut rng = trial_rng(202, i);
        let rank = 2 + i % 2;
        let ring = LaurentRing::new(rank);
        let m = evaluate(&random_word(&mut rng, rank, 10), ring).unwrap();
        for class in 1..=5usize {
            let t = m.truncate(class);
            let c = LaurentPoly::from_monomial(ring, m.c().clone());
            assert_series(t.c_series(), &c, class as i64 - 1);
            for (g, s) in m.gamma().iter().zip(t.gamma()) {
                if class >= 2 {
                    assert_series(s, g, class as i64 - 2);
                } else {
                    assert!(s.is_zero());
                }
            }
        }
    }
}

#[test]
fn inverse_generators_match_closed_forms() {
    let ring = LaurentRing::new(2);
    let x = MagnusMatrix::generator(ring, 1).unwrap().inverse();
    let y = MagnusMatrix::generator(ring, 2).unwrap().inverse();
    assert_eq!(x.c().exponents(), &[-1, 0]);
    assert_eq!(x.gamma()[0].to_string(), "-s1^-1");
    assert!(x.gamma()[1].is_zero());
    assert_eq!(y.c().exponents(), &[0, -1]);
    assert_eq!(y.gamma()[1].to_string(), "-s2^-1");
}
