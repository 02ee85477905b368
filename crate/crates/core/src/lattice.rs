//! Exact integer linear algebra on small symmetric matrices.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Leading principal minors `D_1, ..., D_n` of a square integer matrix,
/// computed by fraction-free (Bareiss) elimination without pivoting.
///
/// Elimination stops at the first vanishing minor, so the returned vector is
/// shorter than `n` exactly when some `D_k` is zero (and then ends with that
/// zero).
pub fn leading_principal_minors(matrix: &[Vec<i64>]) -> Vec<BigInt> {
    let n = matrix.len();
    let mut work: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|row| {
            debug_assert_eq!(row.len(), n);
            row.iter().map(|&x| BigInt::from(x)).collect()
        })
        .collect();
    let mut minors = Vec::with_capacity(n);
    let mut prev = BigInt::from(1);
    for k in 0..n {
        let pivot = work[k][k].clone();
        minors.push(pivot.clone());
        if pivot.is_zero() {
            break;
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let num = &work[i][j] * &pivot - &work[i][k] * &work[k][j];
                // Sylvester's identity guarantees exact division.
                debug_assert!((&num % &prev).is_zero());
                work[i][j] = num / &prev;
            }
        }
        prev = pivot;
    }
    minors
}

/// Determinant of a square integer matrix.
pub fn determinant(matrix: &[Vec<i64>]) -> BigInt {
    if matrix.is_empty() {
        return BigInt::from(1);
    }
    let n = matrix.len();
    let minors = leading_principal_minors(matrix);
    if minors.len() == n {
        return minors[n - 1].clone();
    }
    // A vanishing leading minor stops Bareiss; fall back to pivoted
    // elimination over the rationals via row swaps.
    pivoted_determinant(matrix)
}

fn pivoted_determinant(matrix: &[Vec<i64>]) -> BigInt {
    let n = matrix.len();
    let mut work: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut sign = 1i32;
    let mut prev = BigInt::from(1);
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !work[r][k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            work.swap(p, k);
            sign = -sign;
        }
        let pivot = work[k][k].clone();
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let num = &work[i][j] * &pivot - &work[i][k] * &work[k][j];
                work[i][j] = num / &prev;
            }
        }
        prev = pivot;
    }
    let det = work[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Sylvester's criterion for negative definiteness: `(-1)^k D_k > 0` for
/// every leading principal minor.
pub fn is_negative_definite(matrix: &[Vec<i64>]) -> bool {
    let n = matrix.len();
    let minors = leading_principal_minors(matrix);
    minors.len() == n
        && minors.iter().enumerate().all(|(k, d)| {
            // k is zero-based, so D_{k+1} must have sign (-1)^{k+1}.
            if k % 2 == 0 {
                d.is_negative()
            } else {
                d.is_positive()
            }
        })
}
