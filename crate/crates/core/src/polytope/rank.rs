//! Rank over the rationals by fraction-free (Bareiss) elimination.
//!
//! Every intermediate entry is a minor of the input, so the exact division in
//! the update never leaves the integers. The elimination first runs on `i128`
//! with checked arithmetic and restarts on big integers if any step overflows.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::matrix::IntMatrix;

pub fn rank_exact(matrix: &IntMatrix) -> usize {
    let rows: Vec<Vec<i128>> = matrix
        .iter_rows()
        .map(|r| r.iter().map(|&v| v as i128).collect())
        .collect();
    if let Some(r) = bareiss_i128(rows, matrix.cols()) {
        return r;
    }
    let rows = matrix
        .iter_rows()
        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    bareiss_big(rows, matrix.cols())
}

fn bareiss_i128(mut a: Vec<Vec<i128>>, cols: usize) -> Option<usize> {
    let n = a.len();
    let mut prev: i128 = 1;
    let mut rank = 0;
    for col in 0..cols {
        if rank == n {
            break;
        }
        let Some(p) = (rank..n).find(|&i| a[i][col] != 0) else {
            continue;
        };
        a.swap(rank, p);
        let (top, rest) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let pivot = pivot_row[col];
        for row in rest.iter_mut() {
            let factor = row[col];
            for j in col + 1..cols {
                let t = pivot.checked_mul(row[j])?.checked_sub(factor.checked_mul(pivot_row[j])?)?;
                row[j] = t / prev;
            }
            row[col] = 0;
        }
        prev = pivot;
        rank += 1;
    }
    Some(rank)
}

fn bareiss_big(mut a: Vec<Vec<BigInt>>, cols: usize) -> usize {
    let n = a.len();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..cols {
        if rank == n {
            break;
        }
        let Some(p) = (rank..n).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let (top, rest) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let pivot = &pivot_row[col];
        for row in rest.iter_mut() {
            if row[col].is_zero() {
                // t = pivot·row[j] / prev, still exact
                if !pivot.is_one() || !prev.is_one() {
                    for v in row[col + 1..].iter_mut() {
                        if !v.is_zero() {
                            *v = &*v * pivot / &prev;
                        }
                    }
                }
                continue;
            }
            let factor = row[col].clone();
            for j in col + 1..cols {
                let t = pivot * &row[j] - &factor * &pivot_row[j];
                row[j] = t / &prev;
            }
            row[col] = BigInt::zero();
        }
        prev = pivot.clone();
        rank += 1;
    }
    rank
}
