//! Explicit PMAS constructions for admissible assignment games and veto games.

use alloc::vec::Vec;

use super::classify::{classify_blocks, Block, BlockKind, Verdict};
use super::scheme::{Coverage, Scheme};
use crate::assignment::{core_contains, AssignmentGame, CoreMembership, SurplusMatrix};
use crate::coalition::Coalition;
use crate::error::{Error, Result};
use crate::game::{check_size, monotonicity_violation, veto_violation, Game, MAX_PLAYERS};
use crate::rational::Rational;

/// The scheme of a game whose positive surpluses all involve one `veto` player.
///
/// A coalition with both the veto player and its `top` partner pays them
/// their core payoffs; without the top partner the veto player collects the
/// best surplus available and everyone else gets nothing.
#[derive(Clone, Debug)]
struct LineRule {
    veto: usize,
    partners: Vec<(usize, Rational)>,
    top: usize,
    veto_payoff: Rational,
    top_payoff: Rational,
}

impl LineRule {
    fn payoff(&self, s: Coalition, player: usize) -> Rational {
        if !s.contains(self.veto) {
            return Rational::zero();
        }
        if s.contains(self.top) {
            if player == self.veto {
                return self.veto_payoff.clone();
            }
            if player == self.top {
                return self.top_payoff.clone();
            }
            return Rational::zero();
        }
        if player != self.veto {
            return Rational::zero();
        }
        self.partners
            .iter()
            .filter(|(p, _)| s.contains(*p))
            .map(|(_, a)| a)
            .max()
            .cloned()
            .unwrap_or_else(Rational::zero)
    }
}

/// Lowest-index partner with the largest surplus.
fn top_partner(partners: &[(usize, Rational)]) -> usize {
    let mut best = &partners[0];
    for p in &partners[1..] {
        if p.1 > best.1 {
            best = p;
        }
    }
    best.0
}

fn block_rules(m: &SurplusMatrix, block: &Block, x: &[Rational]) -> Vec<LineRule> {
    match block.kind {
        BlockKind::RowVector => {
            let i = block.rows[0];
            let veto = m.row_player(i);
            let partners: Vec<(usize, Rational)> = block
                .cols
                .iter()
                .map(|&j| (m.col_player(j), m.get(i, j).clone()))
                .collect();
            let top = top_partner(&partners);
            alloc::vec![LineRule {
                veto,
                top,
                veto_payoff: x[veto].clone(),
                top_payoff: x[top].clone(),
                partners,
            }]
        }
        BlockKind::ColVector => {
            let j = block.cols[0];
            let veto = m.col_player(j);
            let partners: Vec<(usize, Rational)> = block
                .rows
                .iter()
                .map(|&i| (m.row_player(i), m.get(i, j).clone()))
                .collect();
            let top = top_partner(&partners);
            alloc::vec![LineRule {
                veto,
                top,
                veto_payoff: x[veto].clone(),
                top_payoff: x[top].clone(),
                partners,
            }]
        }
        BlockKind::GammaDominant { corner: (i1, j1) } => {
            // Split into the corner row, with the corner reduced by the best
            // other column entry, and the corner column carrying that amount.
            let transfer = block
                .rows
                .iter()
                .filter(|&&k| k != i1)
                .map(|&k| m.get(k, j1))
                .max()
                .expect("a gamma block has two rows")
                .clone();
            let (r, c) = (m.row_player(i1), m.col_player(j1));
            let row_partners: Vec<(usize, Rational)> = block
                .cols
                .iter()
                .map(|&j| {
                    let a = m.get(i1, j);
                    (
                        m.col_player(j),
                        if j == j1 { a - &transfer } else { a.clone() },
                    )
                })
                .collect();
            let col_partners: Vec<(usize, Rational)> = block
                .rows
                .iter()
                .map(|&i| {
                    (
                        m.row_player(i),
                        if i == i1 {
                            transfer.clone()
                        } else {
                            m.get(i, j1).clone()
                        },
                    )
                })
                .collect();
            alloc::vec![
                LineRule {
                    veto: r,
                    partners: row_partners,
                    top: c,
                    veto_payoff: x[r].clone(),
                    top_payoff: &x[c] - &transfer,
                },
                LineRule {
                    veto: c,
                    partners: col_partners,
                    top: r,
                    veto_payoff: transfer,
                    top_payoff: Rational::zero(),
                },
            ]
        }
    }
}

/// A PMAS of an admissible assignment game extending the core point `x`.
pub fn build_pmas(g: &AssignmentGame, x: &[Rational]) -> Result<Scheme> {
    let n = g.players();
    check_size(n, MAX_PLAYERS)?;
    if let CoreMembership::No(violated) = core_contains(g, x)? {
        return Err(Error::NotInCore { violated });
    }
    let m = g.matrix();
    let blocks = match classify_blocks(m).verdict {
        Verdict::Admissible(blocks) => blocks,
        Verdict::NotAdmissible(w) => return Err(Error::NotAdmissible(w)),
    };
    let mut owner: Vec<Option<usize>> = alloc::vec![None; n];
    let mut rules = Vec::with_capacity(blocks.len());
    for (k, block) in blocks.iter().enumerate() {
        for &i in &block.rows {
            owner[m.row_player(i)] = Some(k);
        }
        for &j in &block.cols {
            owner[m.col_player(j)] = Some(k);
        }
        rules.push(block_rules(m, block, x));
    }
    let mut scheme = Scheme::new(n, Coverage::AllCoalitions);
    for bits in 1..1u32 << n {
        let s = Coalition(bits);
        let payoff = s
            .members()
            .map(|i| match owner[i] {
                None => Rational::zero(),
                Some(k) => rules[k].iter().map(|r| r.payoff(s, i)).sum(),
            })
            .collect();
        scheme.insert(s, payoff)?;
    }
    Ok(scheme)
}

/// The scheme paying each coalition's worth to `veto`.
pub fn build_veto_pmas(g: &(impl Game + ?Sized), veto: usize) -> Result<Scheme> {
    let n = g.players();
    check_size(n, MAX_PLAYERS)?;
    if veto >= n {
        return Err(Error::PlayerOutOfRange {
            player: veto,
            players: n,
        });
    }
    if let Some(coalition) = veto_violation(g, veto) {
        return Err(Error::NotVeto {
            player: veto,
            coalition,
        });
    }
    if let Some((subset, superset)) = monotonicity_violation(g) {
        return Err(Error::NotMonotonic { subset, superset });
    }
    let table = g.worth_table();
    let mut scheme = Scheme::new(n, Coverage::AllCoalitions);
    for bits in 1..1u32 << n {
        let s = Coalition(bits);
        let payoff = s
            .members()
            .map(|i| {
                if i == veto {
                    table[s.index()].clone()
                } else {
                    Rational::zero()
                }
            })
            .collect();
        scheme.insert(s, payoff)?;
    }
    Ok(scheme)
}

/// One block of an admissible assignment game as a game of its own.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub game: AssignmentGame,
    /// Players of the parent game, rows first, in the component's player order.
    pub players: Vec<usize>,
    pub kind: BlockKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub components: Vec<Component>,
    /// Players of the parent game belonging to no block.
    pub null_players: Vec<usize>,
}

impl Decomposition {
    /// `w(S)` recomposed from the component games.
    pub fn worth(&self, s: Coalition) -> Rational {
        self.components
            .iter()
            .map(|c| {
                let local = Coalition::from_members(
                    c.players
                        .iter()
                        .enumerate()
                        .filter(|(_, p)| s.contains(**p))
                        .map(|(k, _)| k),
                );
                c.game.worth(local)
            })
            .sum()
    }
}

pub fn decompose_admissible(g: &AssignmentGame) -> Result<Decomposition> {
    let m = g.matrix();
    let d = classify_blocks(m);
    let blocks = match d.verdict {
        Verdict::Admissible(blocks) => blocks,
        Verdict::NotAdmissible(w) => return Err(Error::NotAdmissible(w)),
    };
    let mut components = Vec::with_capacity(blocks.len());
    for block in blocks {
        let sub = m.submatrix(&block.rows, &block.cols);
        let mut players: Vec<usize> = block.rows.iter().map(|&i| m.row_player(i)).collect();
        players.extend(block.cols.iter().map(|&j| m.col_player(j)));
        let kind = match block.kind {
            BlockKind::GammaDominant { corner: (i, j) } => BlockKind::GammaDominant {
                corner: (
                    block.rows.iter().position(|&r| r == i).unwrap(),
                    block.cols.iter().position(|&c| c == j).unwrap(),
                ),
            },
            other => other,
        };
        components.push(Component {
            game: AssignmentGame::new(sub)?,
            players,
            kind,
        });
    }
    let mut null_players: Vec<usize> = d.null_rows.iter().map(|&i| m.row_player(i)).collect();
    null_players.extend(d.null_cols.iter().map(|&j| m.col_player(j)));
    Ok(Decomposition {
        components,
        null_players,
    })
}
