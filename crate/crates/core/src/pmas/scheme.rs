//! Allocation schemes and their verification.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::coalition::Coalition;
use crate::error::{Error, Result};
use crate::game::{
    check_coalition, check_size, inessential_splits, sort_size_lex, Game, MAX_PLAYERS,
};
use crate::rational::Rational;

/// Which coalitions a scheme lists explicitly.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Coverage {
    AllCoalitions,
    /// Only essential coalitions; the rest follow by joining the parts of an
    /// inessential split.
    EssentialOnly,
}

/// A payoff vector for each coalition, indexed by the coalition's members in
/// ascending order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scheme {
    players: usize,
    coverage: Coverage,
    entries: BTreeMap<Coalition, Vec<Rational>>,
}

impl Scheme {
    pub fn new(players: usize, coverage: Coverage) -> Self {
        Scheme {
            players,
            coverage,
            entries: BTreeMap::new(),
        }
    }

    pub fn players(&self) -> usize {
        self.players
    }

    pub fn coverage(&self) -> Coverage {
        self.coverage
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Stores the suballocation of `s`; `payoff[k]` goes to the `k`-th member.
    pub fn insert(&mut self, s: Coalition, payoff: Vec<Rational>) -> Result<()> {
        if s.is_empty() {
            return Err(Error::EmptyCoalition);
        }
        if !s.is_subset_of(Coalition::full(self.players)) {
            let player = s
                .difference(Coalition::full(self.players))
                .first()
                .unwrap_or(0);
            return Err(Error::PlayerOutOfRange {
                player,
                players: self.players,
            });
        }
        if payoff.len() != s.len() {
            return Err(Error::MalformedScheme { coalition: s });
        }
        self.entries.insert(s, payoff);
        Ok(())
    }

    pub fn get(&self, s: Coalition) -> Option<&[Rational]> {
        self.entries.get(&s).map(Vec::as_slice)
    }

    /// `x^S_i`.
    pub fn payoff(&self, s: Coalition, player: usize) -> Option<&Rational> {
        let k = s.position(player)?;
        self.get(s).map(|x| &x[k])
    }

    /// The allocation of the grand coalition, as a full payoff vector.
    pub fn grand(&self) -> Option<&[Rational]> {
        self.get(Coalition::full(self.players))
    }

    /// Entries by cardinality, then lexicographically.
    pub fn ordered(&self) -> Vec<(Coalition, &[Rational])> {
        let mut keys: Vec<Coalition> = self.entries.keys().copied().collect();
        sort_size_lex(&mut keys);
        keys.into_iter()
            .map(|s| (s, self.get(s).unwrap()))
            .collect()
    }

    /// Fills in every coalition missing from an essential-only scheme.
    pub fn expand(&self, g: &(impl Game + ?Sized)) -> Result<Scheme> {
        let n = self.players;
        if g.players() != n {
            return Err(Error::DimensionMismatch {
                expected: g.players(),
                found: n,
            });
        }
        check_size(n, MAX_PLAYERS)?;
        let mut out = Scheme::new(n, Coverage::AllCoalitions);
        let splits = if self.coverage == Coverage::EssentialOnly {
            inessential_splits(g)
        } else {
            Vec::new()
        };
        // subsets have smaller masks, so their entries exist by the time they are needed
        for bits in 1..1u32 << n {
            let s = Coalition(bits);
            if let Some(x) = self.get(s) {
                out.entries.insert(s, x.to_vec());
                continue;
            }
            let split = splits.get(s.index()).copied().flatten();
            let Some((a, b)) = split else {
                return Err(Error::IncompleteScheme { missing: s });
            };
            let x = s
                .members()
                .map(|i| {
                    let part = if a.contains(i) { a } else { b };
                    out.payoff(part, i).unwrap().clone()
                })
                .collect();
            out.entries.insert(s, x);
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// `Σ_{i∈S} x^S_i != w(S)`.
    Efficiency {
        coalition: Coalition,
        total: Rational,
        worth: Rational,
    },
    /// `x^S_i > x^T_i` for `S ⊂ T = S ∪ {j}`.
    Monotonicity {
        subset: Coalition,
        superset: Coalition,
        player: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Efficiency {
                coalition,
                total,
                worth,
            } => write!(
                f,
                "coalition {coalition} receives {total} but is worth {worth}"
            ),
            Violation::Monotonicity {
                subset,
                superset,
                player,
            } => write!(
                f,
                "player {} is paid less in {superset} than in {subset}",
                player + 1
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PmasCheck {
    Valid,
    Invalid(Violation),
}

impl PmasCheck {
    pub fn is_valid(&self) -> bool {
        matches!(self, PmasCheck::Valid)
    }
}

/// Checks efficiency in every coalition, then monotonicity along every
/// one-player extension. Both sweeps run in cardinality-then-lexicographic order.
pub fn verify_pmas(g: &(impl Game + ?Sized), scheme: &Scheme) -> Result<PmasCheck> {
    let n = g.players();
    check_size(n, MAX_PLAYERS)?;
    if scheme.players() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: scheme.players(),
        });
    }
    let expanded;
    let full = match scheme.coverage() {
        Coverage::AllCoalitions => scheme,
        Coverage::EssentialOnly => {
            expanded = scheme.expand(g)?;
            &expanded
        }
    };
    let order = crate::coalition::by_size_then_lex(n);
    let table = g.worth_table();
    for &s in &order {
        check_coalition(g, s)?;
        let x = full.get(s).ok_or(Error::IncompleteScheme { missing: s })?;
        let total: Rational = x.iter().sum();
        if total != table[s.index()] {
            return Ok(PmasCheck::Invalid(Violation::Efficiency {
                coalition: s,
                total,
                worth: table[s.index()].clone(),
            }));
        }
    }
    let all = Coalition::full(n);
    for &s in &order {
        let x = full.get(s).unwrap();
        for j in all.difference(s).members() {
            let t = s.with(j);
            let y = full.get(t).unwrap();
            for (k, i) in s.members().enumerate() {
                let kt = t.position(i).unwrap();
                if x[k] > y[kt] {
                    return Ok(PmasCheck::Invalid(Violation::Monotonicity {
                        subset: s,
                        superset: t,
                        player: i,
                    }));
                }
            }
        }
    }
    Ok(PmasCheck::Valid)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::fixtures::{coal, veto_example};
    use crate::game::{subgame, ExplicitGame};
    use crate::rational::int;
    use alloc::vec;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&a| int(a)).collect()
    }

    #[test]
    fn zero_scheme_on_zero_game() {
        let g = ExplicitGame::new(3).unwrap();
        let mut s = Scheme::new(3, Coverage::AllCoalitions);
        for bits in 1..8u32 {
            let c = Coalition(bits);
            s.insert(c, vec![Rational::zero(); c.len()]).unwrap();
        }
        assert_eq!(verify_pmas(&g, &s).unwrap(), PmasCheck::Valid);
    }

    #[test]
    fn incomplete_and_malformed() {
        let g = ExplicitGame::new(2).unwrap();
        let mut s = Scheme::new(2, Coverage::AllCoalitions);
        assert_eq!(
            s.insert(coal(&[1, 2]), ints(&[0])),
            Err(Error::MalformedScheme {
                coalition: coal(&[1, 2])
            })
        );
        s.insert(coal(&[1]), ints(&[0])).unwrap();
        assert_eq!(
            verify_pmas(&g, &s),
            Err(Error::IncompleteScheme {
                missing: coal(&[2])
            })
        );
    }

    #[test]
    fn forced_allocations_break_on_one_three_four() {
        // the subgame on players 1, 3, 4 of the veto example; locally 0, 1, 2
        let g = veto_example();
        let sub = subgame(&g, coal(&[1, 3, 4])).unwrap();
        let mut s = Scheme::new(3, Coverage::AllCoalitions);
        s.insert(coal(&[1]), ints(&[0])).unwrap();
        s.insert(coal(&[2]), ints(&[0])).unwrap();
        s.insert(coal(&[3]), ints(&[0])).unwrap();
        s.insert(coal(&[1, 2]), ints(&[1, 2])).unwrap();
        s.insert(coal(&[1, 3]), ints(&[1, 3])).unwrap();
        s.insert(coal(&[2, 3]), ints(&[0, 0])).unwrap();
        s.insert(coal(&[1, 2, 3]), ints(&[1, 2, 2])).unwrap();
        assert_eq!(
            verify_pmas(&sub, &s).unwrap(),
            PmasCheck::Invalid(Violation::Monotonicity {
                subset: coal(&[1, 3]),
                superset: coal(&[1, 2, 3]),
                player: 2,
            })
        );
        s.insert(coal(&[1, 2, 3]), ints(&[1, 2, 3])).unwrap();
        assert_eq!(
            verify_pmas(&sub, &s).unwrap(),
            PmasCheck::Invalid(Violation::Efficiency {
                coalition: coal(&[1, 2, 3]),
                total: int(6),
                worth: int(5),
            })
        );
    }

    #[test]
    fn essential_only_expands() {
        // two disjoint pairs each worth 2: the grand coalition splits
        let g = ExplicitGame::from_values(
            4,
            [
                (coal(&[1, 2]), int(2)),
                (coal(&[3, 4]), int(2)),
                (coal(&[1, 2, 3]), int(2)),
                (coal(&[1, 2, 4]), int(2)),
                (coal(&[1, 3, 4]), int(2)),
                (coal(&[2, 3, 4]), int(2)),
                (coal(&[1, 2, 3, 4]), int(4)),
            ],
        )
        .unwrap();
        let mut s = Scheme::new(4, Coverage::EssentialOnly);
        for e in g.essential_coalitions() {
            let x = if e.len() == 1 {
                ints(&[0])
            } else {
                ints(&[1, 1])
            };
            s.insert(e, x).unwrap();
        }
        let full = s.expand(&g).unwrap();
        assert_eq!(full.len(), 15);
        assert_eq!(full.grand(), Some(ints(&[1, 1, 1, 1]).as_slice()));
        assert_eq!(
            full.get(coal(&[1, 2, 3])),
            Some(ints(&[1, 1, 0]).as_slice())
        );
        assert!(verify_pmas(&g, &s).unwrap().is_valid());
    }
}
