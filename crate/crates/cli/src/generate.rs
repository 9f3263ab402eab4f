//! Seeded random instances for the verification suites.

use pmas_core::{Rational, SurplusMatrix};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A positive rational with numerator up to 12 and denominator up to 3.
pub fn small_rational(rng: &mut impl Rng) -> Rational {
    Rational::new(rng.random_range(1..=12), rng.random_range(1..=3))
}

/// Entries are zero with probability one third.
pub fn random_matrix(rng: &mut impl Rng, max_side: usize, max_players: usize) -> SurplusMatrix {
    let rows = rng.random_range(1..=max_side);
    let cols = rng.random_range(1..=max_side.min(max_players - rows).max(1));
    let mut m = SurplusMatrix::zeros(rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            if rng.random_range(0..3) > 0 {
                m.set(i, j, small_rational(rng)).unwrap();
            }
        }
    }
    m
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    Row,
    Col,
    Gamma,
}

/// A block with its entries; the corner of a `Gamma` block is `(0, 0)`.
fn block(rng: &mut impl Rng, shape: Shape, budget: usize, dominant: bool) -> Vec<Vec<Rational>> {
    match shape {
        Shape::Row => {
            let k = rng.random_range(1..=(budget - 1).clamp(1, 3));
            vec![(0..k).map(|_| small_rational(rng)).collect()]
        }
        Shape::Col => {
            let k = rng.random_range(1..=(budget - 1).clamp(1, 3));
            (0..k).map(|_| vec![small_rational(rng)]).collect()
        }
        Shape::Gamma => {
            let spare = budget.saturating_sub(4);
            let rows = 2 + rng.random_range(0..=spare.min(2));
            let cols = 2 + rng.random_range(0..=(spare - (rows - 2)).min(2));
            let mut b = vec![vec![Rational::zero(); cols]; rows];
            for entry in b[0].iter_mut().skip(1) {
                *entry = small_rational(rng);
            }
            for row in b.iter_mut().skip(1) {
                row[0] = small_rational(rng);
            }
            let best_row = b[0][1..].iter().cloned().max().unwrap();
            let best_col = b[1..].iter().map(|r| r[0].clone()).max().unwrap();
            let reach = &best_row + &best_col;
            b[0][0] = if dominant {
                let extra = if rng.random_bool(0.3) {
                    Rational::zero()
                } else {
                    small_rational(rng)
                };
                reach + extra
            } else {
                // strictly between zero and the pair sum
                let k = rng.random_range(1..=9);
                reach * Rational::new(k, 10)
            };
            b
        }
    }
}

/// Places blocks along the diagonal, adds null lines and shuffles rows and columns.
fn assemble(
    rng: &mut impl Rng,
    blocks: Vec<Vec<Vec<Rational>>>,
    null_rows: usize,
    null_cols: usize,
) -> SurplusMatrix {
    let rows: usize = blocks.iter().map(Vec::len).sum::<usize>() + null_rows;
    let cols: usize = blocks.iter().map(|b| b[0].len()).sum::<usize>() + null_cols;
    let mut row_order: Vec<usize> = (0..rows).collect();
    let mut col_order: Vec<usize> = (0..cols).collect();
    row_order.shuffle(rng);
    col_order.shuffle(rng);
    let mut m = SurplusMatrix::zeros(rows, cols);
    let (mut r0, mut c0) = (0, 0);
    for b in &blocks {
        for (i, row) in b.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                m.set(row_order[r0 + i], col_order[c0 + j], v.clone())
                    .unwrap();
            }
        }
        r0 += b.len();
        c0 += b[0].len();
    }
    m
}

fn shapes(rng: &mut impl Rng, max_players: usize, dominant: bool) -> Vec<Vec<Vec<Rational>>> {
    let count = rng.random_range(1..=3);
    let mut left = max_players;
    let mut out = Vec::new();
    for k in 0..count {
        if left < 2 {
            break;
        }
        let must_fail = !dominant && k == 0;
        let shape = if must_fail || (left >= 4 && rng.random_bool(0.4)) {
            Shape::Gamma
        } else if rng.random_bool(0.5) {
            Shape::Row
        } else {
            Shape::Col
        };
        if shape == Shape::Gamma && left < 4 {
            break;
        }
        let b = block(rng, shape, left, dominant || k > 0);
        left -= b.len() + b[0].len();
        out.push(b);
    }
    out
}

/// 1 to 3 blocks, each a row, a column or a dominant corner, within `max_players` players.
pub fn admissible_matrix(
    rng: &mut impl Rng,
    max_players: usize,
    allow_null: bool,
) -> SurplusMatrix {
    let blocks = shapes(rng, max_players, true);
    let used: usize = blocks.iter().map(|b| b.len() + b[0].len()).sum();
    let (mut nr, mut nc) = (0, 0);
    if allow_null && used < max_players && rng.random_bool(0.5) {
        if rng.random_bool(0.5) {
            nr = 1;
        } else {
            nc = 1;
        }
    }
    assemble(rng, blocks, nr, nc)
}

/// Like [`admissible_matrix`], but one corner block misses dominance.
pub fn violating_matrix(rng: &mut impl Rng, max_players: usize) -> SurplusMatrix {
    let blocks = shapes(rng, max_players.max(4), false);
    assemble(rng, blocks, 0, 0)
}

/// `[[a, b], [c, 0]]` with `a >= b + c` when `dominant`, otherwise `0 < a < b + c`.
pub fn corner_pair(rng: &mut impl Rng, dominant: bool) -> (Rational, Rational, Rational) {
    let b = small_rational(rng);
    let c = small_rational(rng);
    let reach = &b + &c;
    let a = if dominant {
        if rng.random_bool(0.25) {
            reach
        } else {
            reach + small_rational(rng)
        }
    } else {
        reach * Rational::new(rng.random_range(1..=19), 20)
    };
    (a, b, c)
}

pub fn positive_square(rng: &mut impl Rng) -> SurplusMatrix {
    let rows = (0..2)
        .map(|_| (0..2).map(|_| small_rational(rng)).collect())
        .collect();
    SurplusMatrix::new(rows).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use pmas_core::pmas::classify_blocks;

    #[test]
    fn generated_instances_have_the_intended_verdict() {
        let mut r = rng(3);
        for _ in 0..200 {
            let m = admissible_matrix(&mut r, 10, true);
            assert!(m.players() <= 10);
            assert!(classify_blocks(&m).is_admissible(), "{m:?}");
            let m = violating_matrix(&mut r, 8);
            assert!(!classify_blocks(&m).is_admissible(), "{m:?}");
        }
    }

    #[test]
    fn same_seed_same_instance() {
        assert_eq!(
            admissible_matrix(&mut rng(9), 10, true),
            admissible_matrix(&mut rng(9), 10, true)
        );
    }
}
