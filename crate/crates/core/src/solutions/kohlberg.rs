//! Balanced families and the Kohlberg test for the nucleolus.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::assignment::{core_contains, CoreMembership};
use crate::coalition::Coalition;
use crate::error::{Error, Result};
use crate::game::{check_size, coalition_sum, grand_coalition, Game, MAX_PLAYERS};
use crate::lp::{LinearProgram, LpResult, Relation, Sense};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Unbalance {
    /// No coalition of the family contains this player.
    Uncovered(usize),
    /// No nonnegative weights make every player's total one.
    NoWeights,
    /// Weights exist, but this coalition gets zero in all of them.
    ZeroWeight(Coalition),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyVerdict {
    /// Strictly positive weights with `Σ_{S∋i} λ_S = 1` for every player.
    Balanced(Vec<(Coalition, Rational)>),
    NotBalanced(Unbalance),
}

impl FamilyVerdict {
    pub fn is_balanced(&self) -> bool {
        matches!(self, FamilyVerdict::Balanced(_))
    }
}

/// Decides whether `family` is balanced on `players` players.
pub fn balanced_family(players: usize, family: &[Coalition]) -> Result<FamilyVerdict> {
    check_size(players, MAX_PLAYERS)?;
    let family: Vec<Coalition> = family
        .iter()
        .copied()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let all = Coalition::full(players);
    for &s in &family {
        if s.is_empty() {
            return Err(Error::EmptyCoalition);
        }
        if !s.is_subset_of(all) {
            return Err(Error::PlayerOutOfRange {
                player: s.difference(all).first().unwrap(),
                players,
            });
        }
    }
    let covered = family.iter().fold(Coalition::EMPTY, |acc, &s| acc.union(s));
    if let Some(i) = all.difference(covered).first() {
        return Ok(FamilyVerdict::NotBalanced(Unbalance::Uncovered(i)));
    }

    let mut lp = LinearProgram::new(family.len());
    for k in 0..family.len() {
        lp.set_nonnegative(k);
    }
    for i in 0..players {
        let terms = family
            .iter()
            .enumerate()
            .filter(|(_, s)| s.contains(i))
            .map(|(k, _)| (k, Rational::one()));
        lp.add_sparse(terms, Relation::Eq, Rational::one());
    }
    // averaging one maximizer per coalition gives weights positive wherever possible
    let mut sum = alloc::vec![Rational::zero(); family.len()];
    for (k, &s) in family.iter().enumerate() {
        let mut probe = lp.clone();
        probe.set_sparse_objective(Sense::Maximize, [(k, Rational::one())]);
        match probe.solve()? {
            LpResult::Optimal { point, value } => {
                if value.is_zero() {
                    return Ok(FamilyVerdict::NotBalanced(Unbalance::ZeroWeight(s)));
                }
                for (acc, v) in sum.iter_mut().zip(point) {
                    *acc += v;
                }
            }
            LpResult::Infeasible => return Ok(FamilyVerdict::NotBalanced(Unbalance::NoWeights)),
            LpResult::Unbounded => return Err(Error::Solver("balancing weights unbounded")),
        }
    }
    let scale = Rational::new(1, family.len() as i64);
    let weights = family
        .into_iter()
        .zip(sum)
        .map(|(s, v)| (s, v * &scale))
        .collect();
    Ok(FamilyVerdict::Balanced(weights))
}

/// The family of coalitions whose satisfaction is at most `threshold`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Level {
    pub threshold: Rational,
    pub family: Vec<Coalition>,
    pub verdict: FamilyVerdict,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KohlbergCertificate {
    pub levels: Vec<Level>,
}

impl KohlbergCertificate {
    /// Every level is balanced.
    pub fn is_nucleolus(&self) -> bool {
        self.levels.iter().all(|l| l.verdict.is_balanced())
    }

    pub fn first_failure(&self) -> Option<&Level> {
        self.levels.iter().find(|l| !l.verdict.is_balanced())
    }
}

/// Runs the balancedness test at every attained satisfaction level of the
/// essential coalitions other than the grand coalition, lowest first.
pub fn kohlberg_check(g: &(impl Game + ?Sized), x: &[Rational]) -> Result<KohlbergCertificate> {
    let n = g.players();
    check_size(n, MAX_PLAYERS)?;
    if let CoreMembership::No(violated) = core_contains(g, x)? {
        return Err(Error::NotInCore { violated });
    }
    let all = grand_coalition(g);
    let mut sats: Vec<(Rational, Coalition)> = g
        .essential_coalitions()
        .into_iter()
        .filter(|&s| s != all)
        .map(|s| (coalition_sum(x, s) - g.worth(s), s))
        .collect();
    sats.sort_by(|a, b| a.0.cmp(&b.0));
    let mut levels = Vec::new();
    let mut family = Vec::new();
    let mut k = 0;
    while k < sats.len() {
        let threshold = sats[k].0.clone();
        while k < sats.len() && sats[k].0 == threshold {
            family.push(sats[k].1);
            k += 1;
        }
        let verdict = balanced_family(n, &family)?;
        levels.push(Level {
            threshold,
            family: family.clone(),
            verdict,
        });
    }
    Ok(KohlbergCertificate { levels })
}
