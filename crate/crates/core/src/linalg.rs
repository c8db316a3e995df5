//! Exact Gaussian elimination over the rationals.

use num_rational::BigRational;
use num_traits::Zero;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveError {
    Inconsistent,
    Underdetermined,
}

/// Reduces `rows` in place to row echelon form and returns the pivot columns.
fn echelon(rows: &mut [Vec<BigRational>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        for v in rows[r].iter_mut() {
            *v = &*v / &pivot;
        }
        for i in 0..rows.len() {
            if i == r || rows[i][c].is_zero() {
                continue;
            }
            let f = rows[i][c].clone();
            let (top, rest) = if i < r {
                let (a, b) = rows.split_at_mut(r);
                (&mut a[i], &b[0])
            } else {
                let (a, b) = rows.split_at_mut(i);
                (&mut b[0], &a[r])
            };
            for (t, s) in top.iter_mut().zip(rest) {
                *t -= &f * s;
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

pub fn rank(rows: &[Vec<BigRational>]) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut work = rows.to_vec();
    echelon(&mut work, cols).len()
}

/// Solves `a * x = b` for a system with a unique solution.
pub fn solve(a: &[Vec<BigRational>], b: &[BigRational]) -> Result<Vec<BigRational>, SolveError> {
    assert_eq!(a.len(), b.len(), "row count mismatch");
    let cols = a.first().map_or(0, Vec::len);
    let mut aug: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = echelon(&mut aug, cols + 1);
    if pivots.last() == Some(&cols) {
        return Err(SolveError::Inconsistent);
    }
    if pivots.len() < cols {
        return Err(SolveError::Underdetermined);
    }
    Ok((0..cols).map(|i| aug[i][cols].clone()).collect())
}
