//! The core of an assignment game: its linear system, membership and vertices.

use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{AssignmentGame, Matching};
use crate::coalition::Coalition;
use crate::error::{Error, Result};
use crate::game::{coalition_sum, grand_coalition, Game};
use crate::lp::{LinearProgram, Relation, Sense};
use crate::rational::Rational;

/// One linear condition on a payoff vector, in player indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoreConstraint {
    /// `x_row + x_col = surplus` for a pair of the fixed optimal matching.
    Matched {
        row: usize,
        col: usize,
        surplus: Rational,
    },
    /// `x_player = 0` for a player the optimal matching leaves single.
    Unmatched { player: usize },
    /// `x_row + x_col >= surplus` for a pair off the optimal matching.
    Stable {
        row: usize,
        col: usize,
        surplus: Rational,
    },
    /// `x_player >= 0` for a matched player.
    Nonnegative { player: usize },
}

impl CoreConstraint {
    pub fn is_satisfied_by(&self, x: &[Rational]) -> bool {
        match self {
            CoreConstraint::Matched { row, col, surplus } => &x[*row] + &x[*col] == *surplus,
            CoreConstraint::Unmatched { player } => x[*player].is_zero(),
            CoreConstraint::Stable { row, col, surplus } => &x[*row] + &x[*col] >= *surplus,
            CoreConstraint::Nonnegative { player } => !x[*player].is_negative(),
        }
    }
}

/// The linear description of the core built on one optimal matching.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreSystem {
    players: usize,
    matching: Matching,
    constraints: Vec<CoreConstraint>,
}

impl CoreSystem {
    pub fn matching(&self) -> &Matching {
        &self.matching
    }

    pub fn constraints(&self) -> &[CoreConstraint] {
        &self.constraints
    }

    pub fn is_satisfied_by(&self, x: &[Rational]) -> bool {
        x.len() == self.players && self.constraints.iter().all(|c| c.is_satisfied_by(x))
    }

    /// The system as a linear program over the payoff vector (zero objective).
    pub fn to_lp(&self) -> LinearProgram {
        let mut lp = LinearProgram::new(self.players);
        let one = Rational::one;
        for c in &self.constraints {
            match c {
                CoreConstraint::Matched { row, col, surplus } => lp.add_sparse(
                    [(*row, one()), (*col, one())],
                    Relation::Eq,
                    surplus.clone(),
                ),
                CoreConstraint::Unmatched { player } => {
                    lp.add_sparse([(*player, one())], Relation::Eq, Rational::zero())
                }
                CoreConstraint::Stable { row, col, surplus } => lp.add_sparse(
                    [(*row, one()), (*col, one())],
                    Relation::Ge,
                    surplus.clone(),
                ),
                CoreConstraint::Nonnegative { player } => lp.set_nonnegative(*player),
            }
        }
        lp
    }
}

pub fn core_system(g: &AssignmentGame) -> CoreSystem {
    let m = g.matrix();
    let matching = g.optimal_matching();
    let mut constraints = Vec::new();
    let mut matched = alloc::vec![false; m.players()];
    for &(i, j) in matching.pairs() {
        let (r, c) = (m.row_player(i), m.col_player(j));
        matched[r] = true;
        matched[c] = true;
        constraints.push(CoreConstraint::Matched {
            row: r,
            col: c,
            surplus: m.get(i, j).clone(),
        });
    }
    for (k, &is_matched) in matched.iter().enumerate() {
        if !is_matched {
            constraints.push(CoreConstraint::Unmatched { player: k });
        }
    }
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            if !matching.contains(i, j) {
                constraints.push(CoreConstraint::Stable {
                    row: m.row_player(i),
                    col: m.col_player(j),
                    surplus: m.get(i, j).clone(),
                });
            }
        }
    }
    for (k, &is_matched) in matched.iter().enumerate() {
        if is_matched {
            constraints.push(CoreConstraint::Nonnegative { player: k });
        }
    }
    CoreSystem {
        players: m.players(),
        matching,
        constraints,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoreMembership {
    Yes,
    /// The first violated coalition: `N` when efficiency fails, otherwise
    /// an essential coalition in cardinality-then-lexicographic order.
    No(Coalition),
}

impl CoreMembership {
    pub fn is_yes(&self) -> bool {
        matches!(self, CoreMembership::Yes)
    }
}

/// Core membership checked on efficiency and the essential coalitions.
pub fn core_contains(g: &(impl Game + ?Sized), x: &[Rational]) -> Result<CoreMembership> {
    let n = g.players();
    if x.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: x.len(),
        });
    }
    let all = grand_coalition(g);
    if coalition_sum(x, all) != g.worth(all) {
        return Ok(CoreMembership::No(all));
    }
    for s in g.essential_coalitions() {
        if coalition_sum(x, s) < g.worth(s) {
            return Ok(CoreMembership::No(s));
        }
    }
    Ok(CoreMembership::Yes)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SideOptimal {
    /// Rows at their core maxima, columns at their core minima.
    pub row_optimal: Vec<Rational>,
    /// Rows at their core minima, columns at their core maxima.
    pub column_optimal: Vec<Rational>,
}

impl SideOptimal {
    /// `lambda * row_optimal + (1 - lambda) * column_optimal`.
    pub fn combination(&self, lambda: &Rational) -> Vec<Rational> {
        let mu = Rational::one() - lambda;
        self.row_optimal
            .iter()
            .zip(&self.column_optimal)
            .map(|(r, c)| lambda * r + &mu * c)
            .collect()
    }

    pub fn midpoint(&self) -> Vec<Rational> {
        self.combination(&Rational::new(1, 2))
    }
}

pub fn side_optimal_vertices(g: &AssignmentGame) -> Result<SideOptimal> {
    let lp = core_system(g).to_lp();
    let rows = g.rows();
    let n = g.players();
    let mut row_optimal = Vec::with_capacity(n);
    let mut column_optimal = Vec::with_capacity(n);
    for k in 0..n {
        let hi = lp.max_coordinate(k)?;
        let lo = lp.min_coordinate(k)?;
        if k < rows {
            row_optimal.push(hi);
            column_optimal.push(lo);
        } else {
            row_optimal.push(lo);
            column_optimal.push(hi);
        }
    }
    for point in [&row_optimal, &column_optimal] {
        if !core_contains(g, point)?.is_yes() {
            return Err(Error::Solver("side-optimal point left the core"));
        }
    }
    Ok(SideOptimal {
        row_optimal,
        column_optimal,
    })
}

/// A deterministic pseudo-random core point.
///
/// The point mixes a random point of the segment between the side-optimal
/// vertices with the core vertex maximizing a random integer objective.
pub fn sample_core_point(g: &AssignmentGame, seed: u64) -> Result<Vec<Rational>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sides = side_optimal_vertices(g)?;
    let lambda = Rational::new(rng.random_range(0..=16), 16);
    let on_segment = sides.combination(&lambda);

    let mut lp = core_system(g).to_lp();
    let objective: Vec<Rational> = (0..g.players())
        .map(|_| Rational::from_integer(rng.random_range(-3..=3)))
        .collect();
    lp.set_objective(Sense::Maximize, objective);
    let vertex = match lp.solve()? {
        crate::lp::LpResult::Optimal { point, .. } => point,
        crate::lp::LpResult::Infeasible => return Err(Error::Solver("assignment core is empty")),
        crate::lp::LpResult::Unbounded => {
            return Err(Error::Solver("assignment core is unbounded"))
        }
    };
    let mu = Rational::new(rng.random_range(0..=16), 16);
    let nu = Rational::one() - &mu;
    let x: Vec<Rational> = on_segment
        .iter()
        .zip(&vertex)
        .map(|(a, b)| &mu * a + &nu * b)
        .collect();
    debug_assert!(core_contains(g, &x)?.is_yes());
    Ok(x)
}
