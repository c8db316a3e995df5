//! Seeded random inputs for property checks and verification runs.
//!
//! Each trial draws from its own ChaCha stream derived from `(seed, index)`,
//! so a run's inputs do not depend on how trials are scheduled.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::laurent::Monomial;
use crate::words::{Letter, Word};

pub fn trial_rng(seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng
}

/// A freely reduced word of length at most `max_len` over the given letters.
pub fn random_word_over<R: Rng>(rng: &mut R, generators: &[usize], max_len: usize) -> Word {
    let len = rng.random_range(0..=max_len);
    let letters = (0..len)
        .map(|_| {
            let g = generators[rng.random_range(0..generators.len())];
            Letter::new(g, rng.random_bool(0.5))
        })
        .collect();
    Word::from_letters(letters).reduced()
}

/// A random word over `x_1, ..., x_rank`.
pub fn random_word<R: Rng>(rng: &mut R, rank: usize, max_len: usize) -> Word {
    let gens: Vec<usize> = (1..=rank).collect();
    random_word_over(rng, &gens, max_len)
}

/// A monomial with exponents in `-max_abs..=max_abs`.
pub fn random_monomial<R: Rng>(rng: &mut R, rank: usize, max_abs: i64) -> Monomial {
    let e: Vec<i64> = (0..rank).map(|_| rng.random_range(-max_abs..=max_abs)).collect();
    Monomial::from_exponents(&e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_are_reproducible() {
        let a = random_word(&mut trial_rng(7, 3), 3, 12);
        let b = random_word(&mut trial_rng(7, 3), 3, 12);
        assert_eq!(a, b);
        assert!(a.len() <= 12);
        assert!(a.max_generator() <= 3);
    }
}
