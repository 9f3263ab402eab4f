//! Exact Gaussian elimination.

use alloc::vec::Vec;

use crate::rational::Rational;

/// Reduces `rows` (each of the same length) to row echelon form in place and returns the rank.
#[allow(clippy::needless_range_loop)]
pub fn rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let Some(width) = rows.first().map(Vec::len) else {
        return 0;
    };
    let mut rank = 0;
    for col in 0..width {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][col].clone();
        for i in rank + 1..rows.len() {
            if rows[i][col].is_zero() {
                continue;
            }
            let f = &rows[i][col] / &pivot;
            for k in col..width {
                let delta = &f * &rows[rank][k];
                rows[i][k] -= delta;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Solves the square system `a x = b`; `None` when `a` is singular.
#[allow(clippy::needless_range_loop)]
pub fn solve(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = a.len();
    debug_assert!(a.iter().all(|r| r.len() == n) && b.len() == n);
    for col in 0..n {
        let p = (col..n).find(|&i| !a[i][col].is_zero())?;
        a.swap(col, p);
        b.swap(col, p);
        let inv = a[col][col].recip();
        for k in col..n {
            a[col][k] *= &inv;
        }
        b[col] *= &inv;
        for i in 0..n {
            if i == col || a[i][col].is_zero() {
                continue;
            }
            let f = a[i][col].clone();
            for k in col..n {
                let delta = &f * &a[col][k];
                a[i][k] -= delta;
            }
            let delta = &f * &b[col];
            b[i] -= delta;
        }
    }
    Some(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, q};
    use alloc::vec;

    #[test]
    fn solves_and_ranks() {
        let a = vec![vec![int(2), int(1)], vec![int(1), int(3)]];
        assert_eq!(
            solve(a.clone(), vec![int(3), int(5)]),
            Some(vec![q(4, 5), q(7, 5)])
        );
        assert_eq!(rank(a), 2);
        let singular = vec![vec![int(1), int(2)], vec![int(2), int(4)]];
        assert_eq!(solve(singular.clone(), vec![int(1), int(1)]), None);
        assert_eq!(rank(singular), 1);
    }
}
