//! Seeded verification suites behind `metabelian verify`.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::Serialize;

use crate::exec::{self, Execution};
use crate::laurent::LaurentRing;
use crate::magnus::MagnusMatrix;
use crate::nilquot::{basic_commutators, basis_coefficient_matrix, quotient_rank, verify_nonseparability};
use crate::sample::{random_monomial, random_word, random_word_over, trial_rng};
use crate::subgroup::{coprimality_witness, SubgroupH};
use crate::words::{evaluate, parse, separate_by_tau, tau, ParseOptions, Permutation, Word};
use crate::linalg;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Tau,
    Bachmuth,
    Lemma1,
    Lemma2,
    Diagram,
    Isolation,
    Coprime,
    Basis,
    Nonsep,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Tau,
        Suite::Bachmuth,
        Suite::Lemma1,
        Suite::Lemma2,
        Suite::Diagram,
        Suite::Isolation,
        Suite::Coprime,
        Suite::Basis,
        Suite::Nonsep,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Tau => "tau",
            Suite::Bachmuth => "bachmuth",
            Suite::Lemma1 => "lemma1",
            Suite::Lemma2 => "lemma2",
            Suite::Diagram => "diagram",
            Suite::Isolation => "isolation",
            Suite::Coprime => "coprime",
            Suite::Basis => "basis",
            Suite::Nonsep => "nonsep",
        }
    }

    fn default_trials(self) -> usize {
        match self {
            Suite::Tau | Suite::Basis | Suite::Nonsep => 0,
            Suite::Bachmuth | Suite::Isolation => 1000,
            Suite::Lemma1 | Suite::Diagram | Suite::Coprime => 500,
            Suite::Lemma2 => 200,
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyOptions {
    pub seed: u64,
    pub trials: Option<usize>,
    pub class: usize,
    pub exec: Execution,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            seed: 0,
            trials: None,
            class: 6,
            exec: Execution::Parallel,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub trials: usize,
    pub failures: Vec<String>,
    pub details: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.details {
            writeln!(f, "  {d}")?;
        }
        for d in self.failures.iter().take(10) {
            writeln!(f, "  FAILED {d}")?;
        }
        write!(
            f,
            "verify {}: {} checks, {} failures: {}",
            self.suite,
            self.trials,
            self.failures.len(),
            if self.passed() { "pass" } else { "FAIL" }
        )
    }
}

pub fn run(suite: Suite, h: &SubgroupH, opts: &VerifyOptions) -> SuiteReport {
    let n = opts.trials.unwrap_or_else(|| suite.default_trials());
    let mut details = Vec::new();
    let outcomes: Vec<Option<String>> = match suite {
        Suite::Tau => tau_checks(h),
        Suite::Bachmuth => bachmuth_checks(opts, n),
        Suite::Lemma1 => membership_checks(h, opts, n),
        Suite::Lemma2 => trials(opts, n, |rng, i| {
            let rank = rng.random_range(2..=4);
            let ring = LaurentRing::new(rank);
            let s = evaluate(&random_word(rng, rank, 15), ring).expect("rank");
            let mut forward = MagnusMatrix::identity(ring);
            let mut backward = MagnusMatrix::identity(ring);
            let s_inv = s.inverse();
            for m in 0..=8i64 {
                if s.power(m) != forward || s.power(-m) != backward {
                    return Some(format!("trial {i}: power mismatch at m = +-{m}"));
                }
                forward = &forward * &s;
                backward = &backward * &s_inv;
            }
            None
        }),
        Suite::Diagram => trials(opts, n, |rng, i| {
            let w = random_word(rng, h.rank(), 15);
            let s = evaluate(&w, h.ring()).expect("rank");
            let image = h.psi_star(&s).expect("rank");
            if image != evaluate(&h.psi_word(&w), h.ring()).expect("rank") {
                return Some(format!("trial {i}: psi_star(mu({w})) != mu(psi({w}))"));
            }
            match h.psi1_star(&image).expect("rank") {
                Some(back) if back == s => None,
                _ => Some(format!("trial {i}: psi1_star(psi_star(mu({w}))) != mu({w})")),
            }
        }),
        Suite::Isolation => trials(opts, n, |rng, i| {
            let m = [2, 3, 5, 7][rng.random_range(0..4)];
            let w = if rng.random_bool(0.25) {
                let hw = random_word_over(rng, &h.letters(), 4);
                h.expand(&hw).expect("H letters")
            } else {
                random_word(rng, h.rank(), 12)
            };
            match h.check_root_implication(&w, m) {
                Ok((true, false)) => Some(format!("trial {i}: ({w})^{m} in H but {w} is not")),
                Ok(_) => None,
                Err(e) => Some(format!("trial {i}: {e}")),
            }
        }),
        Suite::Coprime => trials(opts, n, |rng, i| {
            let c = random_monomial(rng, h.rank(), 10);
            let m = rng.random_range(2..=10);
            match coprimality_witness(&c, m) {
                Ok(true) => None,
                Ok(false) => Some(format!("trial {i}: 2 s2 - 1 divides the geometric sum of {c}, m = {m}")),
                Err(e) => Some(format!("trial {i}: {e}")),
            }
        }),
        Suite::Basis => basis_checks(&mut details),
        Suite::Nonsep => match verify_nonseparability(opts.class, h, opts.exec) {
            Ok(reports) => {
                details.extend(reports.iter().map(|r| r.to_string()));
                vec![None; reports.len()]
            }
            Err(e) => vec![Some(e.to_string())],
        },
    };
    SuiteReport {
        suite: suite.name(),
        trials: outcomes.len(),
        failures: outcomes.into_iter().flatten().collect(),
        details,
    }
}

fn trials<F>(opts: &VerifyOptions, n: usize, f: F) -> Vec<Option<String>>
where
    F: Fn(&mut rand_chacha::ChaCha8Rng, usize) -> Option<String> + Sync + Send,
{
    exec::map_indexed(opts.exec, n, |i| f(&mut trial_rng(opts.seed, i), i))
}

fn tau_checks(h: &SubgroupH) -> Vec<Option<String>> {
    let t23 = Permutation::transposition(2, 3);
    let gens = h.generator_words();
    let check = |ok: bool, msg: &str| (!ok).then(|| msg.to_string());
    vec![
        check(tau(&gens[0]) == t23, "tau(a) != (2 3)"),
        check(tau(&gens[1]) == t23, "tau(b) != (2 3)"),
        check(tau(&Word::generator(1)) == Permutation::transposition(1, 2), "tau(x) != (1 2)"),
        check(
            gens[2..].iter().all(|z| tau(z) == Permutation::IDENTITY),
            "tau(z_j) != 1",
        ),
        check(separate_by_tau(&Word::generator(1), &gens), "tau(x) lies in tau(H)"),
    ]
}

fn bachmuth_checks(opts: &VerifyOptions, n: usize) -> Vec<Option<String>> {
    let mut out = trials(opts, n, |rng, i| {
        let rank = rng.random_range(2..=4);
        let w = random_word(rng, rank, 15);
        let s = evaluate(&w, LaurentRing::new(rank)).expect("rank");
        (!s.bachmuth_check()).then(|| format!("trial {i}: mu({w}) fails Bachmuth"))
    });
    let mutated = VerifyOptions {
        seed: opts.seed ^ 0x9e37_79b9_7f4a_7c15,
        ..opts.clone()
    };
    out.extend(trials(&mutated, n.div_ceil(10), |rng, i| {
        let rank = rng.random_range(2..=4);
        let ring = LaurentRing::new(rank);
        let s = evaluate(&random_word(rng, rank, 15), ring).expect("rank");
        let t = perturb(&s, rng.random_range(0..rank));
        t.bachmuth_check()
            .then(|| format!("mutation {i}: perturbed matrix passes Bachmuth"))
    }));
    out
}

/// Adds one to `gamma_(index + 1)`.
pub fn perturb(s: &MagnusMatrix, index: usize) -> MagnusMatrix {
    let ring = s.ring();
    let mut gamma = s.gamma().to_vec();
    gamma[index] = &gamma[index] + &ring.one();
    MagnusMatrix::new(s.c().clone(), gamma).expect("same rank")
}

fn membership_checks(h: &SubgroupH, opts: &VerifyOptions, n: usize) -> Vec<Option<String>> {
    let letters = h.letters();
    let mut out = trials(opts, n, |rng, i| {
        let hw = random_word_over(rng, &letters, 20);
        let w = h.expand(&hw).expect("H letters");
        match h.contains(&evaluate(&w, h.ring()).expect("rank")) {
            Ok(v) if v.member() => None,
            Ok(_) => Some(format!("trial {i}: H-word {hw} reported outside H")),
            Err(e) => Some(format!("trial {i}: {e}")),
        }
    });
    let opts_fixed = ParseOptions::new(h.rank());
    for text in ["x", "x^2", "[x,y]"] {
        let w = parse(text, opts_fixed).expect("fixed word");
        let v = h.contains(&evaluate(&w, h.ring()).expect("rank"));
        out.push(match v {
            Ok(v) if !v.member() => None,
            Ok(_) => Some(format!("{text} reported inside H")),
            Err(e) => Some(format!("{text}: {e}")),
        });
    }
    let coset = VerifyOptions {
        seed: opts.seed ^ 0x5851_f42d_4c95_7f2d,
        ..opts.clone()
    };
    out.extend(trials(&coset, (n * 2).div_ceil(5), |rng, i| {
        let hw = random_word_over(rng, &letters, 20);
        let w = Word::generator(1).mul(&h.expand(&hw).expect("H letters"));
        match h.contains(&evaluate(&w, h.ring()).expect("rank")) {
            Ok(v) if !v.member() => None,
            Ok(_) => Some(format!("coset trial {i}: x * {hw} reported inside H")),
            Err(e) => Some(format!("coset trial {i}: {e}")),
        }
    }));
    out
}

fn basis_checks(details: &mut Vec<String>) -> Vec<Option<String>> {
    let mut out = Vec::new();
    for k in 2..=5 {
        for n in 2..=3 {
            let count = basic_commutators(k, n).len();
            let expected = quotient_rank(k, n);
            let rank = linalg::rank(&basis_coefficient_matrix(k, n));
            details.push(format!("weight {k}, rank {n}: {count} commutators, coefficient rank {rank}"));
            out.push(
                (count != expected || rank != count)
                    .then(|| format!("weight {k}, rank {n}: count {count}, expected {expected}, matrix rank {rank}")),
            );
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts(trials: usize) -> VerifyOptions {
        VerifyOptions {
            seed: 11,
            trials: Some(trials),
            class: 4,
            exec: Execution::Sequential,
        }
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn small_runs_pass() {
        let h = SubgroupH::full(3).unwrap();
        for s in Suite::ALL {
            let r = run(s, &h, &opts(20));
            assert!(r.passed(), "{r}");
            assert!(r.trials > 0);
        }
    }

    #[test]
    fn reports_are_deterministic_across_execution_modes() {
        let h = SubgroupH::new(2, []).unwrap();
        let seq = run(Suite::Isolation, &h, &opts(40));
        let par = run(Suite::Isolation, &h, &VerifyOptions { exec: Execution::Parallel, ..opts(40) });
        assert_eq!(seq, par);
    }
}
