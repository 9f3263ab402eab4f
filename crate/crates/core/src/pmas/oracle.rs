//! PMAS existence and extension decided by linear programming on the defining system.

use alloc::vec;
use alloc::vec::Vec;

use super::scheme::{verify_pmas, Coverage, PmasCheck, Scheme};
use crate::assignment::{core_contains, CoreMembership};
use crate::coalition::Coalition;
use crate::error::{Error, Result};
use crate::game::{check_size, inessential_splits, ExplicitGame, Game};
use crate::lp::{Feasibility, LinearProgram, Relation};
use crate::rational::Rational;

/// Games with more players are refused by the oracle.
pub const ORACLE_MAX_PLAYERS: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleResult {
    Feasible(Scheme),
    Infeasible,
}

impl OracleResult {
    pub fn is_feasible(&self) -> bool {
        matches!(self, OracleResult::Feasible(_))
    }

    pub fn scheme(&self) -> Option<&Scheme> {
        match self {
            OracleResult::Feasible(s) => Some(s),
            OracleResult::Infeasible => None,
        }
    }
}

/// Decides whether `g` admits a PMAS.
pub fn pmas_exists_lp(g: &(impl Game + ?Sized)) -> Result<OracleResult> {
    oracle(g, None)
}

/// Decides whether the core point `x` is the grand-coalition allocation of some PMAS.
pub fn pmas_extend_lp(g: &(impl Game + ?Sized), x: &[Rational]) -> Result<OracleResult> {
    if let CoreMembership::No(violated) = core_contains(g, x)? {
        return Err(Error::NotInCore { violated });
    }
    oracle(g, Some(x))
}

/// Where `x^S_i` lives in the reduced system.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Slot {
    /// `x^{{i}}_i = w({i})`
    Singleton(usize),
    Var(usize),
}

/// The defining system over one variable per member of each essential
/// coalition of two or more players.
///
/// In any PMAS an inessential coalition with split `S1 ∪ S2` pays each part
/// exactly what the part gets on its own, so every `x^S_i` is identified with
/// `x^E_i` for an essential `E ⊆ S` reached by following the splits. With
/// `substitute == false` every coalition keeps its own variables instead.
struct DefinitionSystem {
    lp: LinearProgram,
    /// `slot[S][k]` for the `k`-th member of `S`.
    slots: Vec<Vec<Slot>>,
}

fn definition_system(
    g: &ExplicitGame,
    pin: Option<&[Rational]>,
    substitute: bool,
) -> Option<DefinitionSystem> {
    let n = g.players();
    let all = Coalition::full(n);
    let table = g.worth_table();
    let splits = if substitute {
        inessential_splits(g)
    } else {
        vec![None; 1 << n]
    };

    let mut own: Vec<Option<usize>> = vec![None; 1 << n];
    let mut vars = 0usize;
    for bits in 1..1u32 << n {
        let s = Coalition(bits);
        if s.len() >= 2 && splits[s.index()].is_none() {
            own[s.index()] = Some(vars);
            vars += s.len();
        }
    }
    let resolve = |mut s: Coalition, i: usize| -> Slot {
        while let Some((a, b)) = splits[s.index()] {
            s = if a.contains(i) { a } else { b };
        }
        match own[s.index()] {
            Some(base) => Slot::Var(base + s.position(i).unwrap()),
            None => Slot::Singleton(i),
        }
    };
    let slots: Vec<Vec<Slot>> = (0..1u32 << n)
        .map(|bits| {
            let s = Coalition(bits);
            s.members().map(|i| resolve(s, i)).collect()
        })
        .collect();

    let singleton = |i: usize| table[Coalition::singleton(i).index()].clone();
    let mut lp = LinearProgram::new(vars);
    for bits in 1..1u32 << n {
        let s = Coalition(bits);
        if let Some(base) = own[s.index()] {
            for (k, i) in s.members().enumerate() {
                lp.set_lower_bound(base + k, singleton(i));
            }
        }
    }

    // efficiency, then the pinned grand allocation
    let mut rows: Vec<(Vec<(usize, Rational)>, Rational)> = Vec::new();
    for bits in 1..1u32 << n {
        let s = Coalition(bits);
        let mut terms = Vec::new();
        let mut rhs = table[s.index()].clone();
        for (k, i) in s.members().enumerate() {
            match slots[s.index()][k] {
                Slot::Singleton(_) => rhs -= singleton(i),
                Slot::Var(v) => terms.push((v, Rational::one())),
            }
        }
        rows.push((terms, rhs));
    }
    if let Some(x) = pin {
        for (k, i) in all.members().enumerate() {
            match slots[all.index()][k] {
                Slot::Singleton(_) => rows.push((Vec::new(), &x[i] - singleton(i))),
                Slot::Var(v) => rows.push((alloc::vec![(v, Rational::one())], x[i].clone())),
            }
        }
    }
    let mut seen = alloc::collections::BTreeSet::new();
    for (terms, rhs) in rows {
        if terms.is_empty() {
            if !rhs.is_zero() {
                return None;
            }
            continue;
        }
        let mut key: Vec<usize> = terms.iter().map(|t| t.0).collect();
        key.sort_unstable();
        if seen.insert((key, rhs.clone())) {
            lp.add_sparse(terms, Relation::Eq, rhs);
        }
    }

    // monotonicity along one-player extensions
    let mut pairs = alloc::collections::BTreeSet::new();
    for bits in 1..1u32 << n {
        let s = Coalition(bits);
        for j in all.difference(s).members() {
            let t = s.with(j);
            for (k, i) in s.members().enumerate() {
                let (lo, hi) = (
                    slots[s.index()][k],
                    slots[t.index()][t.position(i).unwrap()],
                );
                match (lo, hi) {
                    _ if lo == hi => {}
                    // every variable of player i is bounded below by w({i})
                    (Slot::Singleton(_), _) => {}
                    (Slot::Var(v), Slot::Singleton(_)) => {
                        if pairs.insert((v, usize::MAX)) {
                            lp.add_sparse([(v, Rational::one())], Relation::Le, singleton(i));
                        }
                    }
                    (Slot::Var(v), Slot::Var(u)) => {
                        if pairs.insert((v, u)) {
                            lp.add_sparse(
                                [(v, Rational::one()), (u, -Rational::one())],
                                Relation::Le,
                                Rational::zero(),
                            );
                        }
                    }
                }
            }
        }
    }
    Some(DefinitionSystem { lp, slots })
}

fn solve_definition(
    g: &ExplicitGame,
    pin: Option<&[Rational]>,
    substitute: bool,
) -> Result<Option<Scheme>> {
    let Some(system) = definition_system(g, pin, substitute) else {
        return Ok(None);
    };
    let point = match system.lp.feasible()? {
        Feasibility::Feasible(p) => p,
        Feasibility::Infeasible => return Ok(None),
    };
    let n = g.players();
    let table = g.worth_table();
    let mut scheme = Scheme::new(n, Coverage::AllCoalitions);
    for bits in 1..1u32 << n {
        let s = Coalition(bits);
        let x = system.slots[s.index()]
            .iter()
            .map(|slot| match *slot {
                Slot::Singleton(i) => table[Coalition::singleton(i).index()].clone(),
                Slot::Var(v) => point[v].clone(),
            })
            .collect();
        scheme.insert(s, x)?;
    }
    Ok(Some(scheme))
}

fn oracle(g: &(impl Game + ?Sized), pin: Option<&[Rational]>) -> Result<OracleResult> {
    let n = g.players();
    check_size(n, ORACLE_MAX_PLAYERS)?;
    if let Some(x) = pin {
        if x.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: x.len(),
            });
        }
    }
    let full = ExplicitGame::from_game(g)?;
    let Some(scheme) = solve_definition(&full, pin, true)? else {
        return Ok(OracleResult::Infeasible);
    };
    if let Some(x) = pin {
        if scheme.grand() != Some(x) {
            return Err(Error::Solver("scheme misses the pinned allocation"));
        }
    }
    match verify_pmas(&full, &scheme)? {
        PmasCheck::Valid => Ok(OracleResult::Feasible(scheme)),
        PmasCheck::Invalid(_) => Err(Error::Solver("oracle scheme is not a PMAS")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::assignment::{AssignmentGame, SurplusMatrix};
    use crate::game::compose;
    use crate::game::fixtures::{coal, convex_three, veto_example};
    use crate::rational::int;
    use alloc::boxed::Box;
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&a| int(a)).collect()
    }

    fn game(rows: &[&[i64]]) -> AssignmentGame {
        AssignmentGame::new(SurplusMatrix::from_ints(rows)).unwrap()
    }

    #[test]
    fn positive_two_by_two_has_no_pmas() {
        assert_eq!(
            pmas_exists_lp(&game(&[&[1, 2], &[3, 1]])).unwrap(),
            OracleResult::Infeasible
        );
    }

    #[test]
    fn veto_example_extensions() {
        let g = veto_example();
        assert!(pmas_exists_lp(&g).unwrap().is_feasible());
        let r = pmas_extend_lp(&g, &ints(&[8, 0, 0, 0])).unwrap();
        assert_eq!(
            r.scheme().unwrap().grand(),
            Some(ints(&[8, 0, 0, 0]).as_slice())
        );
        assert_eq!(
            pmas_extend_lp(&g, &ints(&[1, 2, 2, 3])).unwrap(),
            OracleResult::Infeasible
        );
        assert_eq!(
            pmas_extend_lp(&g, &ints(&[0, 0, 0, 8])),
            Err(Error::NotInCore {
                violated: coal(&[1, 2])
            })
        );
    }

    #[test]
    fn dominance_dichotomy() {
        assert_eq!(
            pmas_exists_lp(&game(&[&[6, 3], &[5, 0]])).unwrap(),
            OracleResult::Infeasible
        );
        assert!(pmas_exists_lp(&game(&[&[9, 3], &[5, 0]]))
            .unwrap()
            .is_feasible());
    }

    #[test]
    fn composite_and_null_players() {
        let g = compose(vec![
            Box::new(convex_three()) as Box<dyn Game + Send + Sync>,
            Box::new(ExplicitGame::new(1).unwrap()),
            Box::new(crate::game::fixtures::pair(3)),
        ])
        .unwrap();
        let r = pmas_exists_lp(&g).unwrap();
        let s = r.scheme().unwrap();
        assert!(verify_pmas(&g, s).unwrap().is_valid());
        assert_eq!(s.payoff(Coalition::full(6), 3), Some(&Rational::zero()));
    }

    #[test]
    fn size_limit() {
        let g = ExplicitGame::new(11).unwrap();
        assert_eq!(
            pmas_exists_lp(&g),
            Err(Error::TooManyPlayers {
                players: 11,
                limit: 10
            })
        );
    }

    fn plain_verdict(g: &(impl Game + ?Sized), pin: Option<&[Rational]>) -> bool {
        let e = ExplicitGame::from_game(g).unwrap();
        let s = solve_definition(&e, pin, false).unwrap();
        if let Some(s) = &s {
            assert!(verify_pmas(&e, s).unwrap().is_valid());
        }
        s.is_some()
    }

    #[test]
    fn substitution_agrees_with_the_plain_system() {
        for rows in [
            &[&[9i64, 3, 0][..], &[5, 0, 0], &[0, 0, 2]][..],
            &[&[2, 0], &[0, 3]],
            &[&[4, 3, 1], &[2, 0, 0]],
            &[&[4, 3, 1], &[2, 0, 1]],
            &[&[6, 3], &[5, 0]],
        ] {
            let g = game(rows);
            assert_eq!(
                plain_verdict(&g, None),
                pmas_exists_lp(&g).unwrap().is_feasible(),
                "{rows:?}"
            );
        }
        let g = veto_example();
        for x in [
            ints(&[8, 0, 0, 0]),
            ints(&[1, 2, 2, 3]),
            ints(&[5, 1, 1, 1]),
        ] {
            assert_eq!(
                plain_verdict(&g, Some(&x)),
                pmas_extend_lp(&g, &x).unwrap().is_feasible()
            );
        }
    }

    fn explicit_game(n: usize) -> impl Strategy<Value = ExplicitGame> {
        proptest::collection::vec(0i64..6, 1 << n).prop_map(move |vals| {
            ExplicitGame::from_values(
                n,
                vals.into_iter().enumerate().skip(1).map(|(bits, v)| {
                    let s = Coalition(bits as u32);
                    // mostly sums of members' weights so that feasible games turn up
                    let v = if s.len() == 1 {
                        0
                    } else {
                        v * s.len() as i64 / 2
                    };
                    (s, int(v))
                }),
            )
            .unwrap()
        })
    }

    fn matrix() -> impl Strategy<Value = SurplusMatrix> {
        (1usize..=3, 1usize..=3).prop_flat_map(|(r, c)| {
            proptest::collection::vec(prop_oneof![2 => Just(0i64), 3 => 1i64..9], r * c).prop_map(
                move |vals| {
                    let rows = (0..r)
                        .map(|i| (0..c).map(|j| int(vals[i * c + j])).collect())
                        .collect();
                    SurplusMatrix::new(rows).unwrap()
                },
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        #[test]
        fn substitution_agrees_on_random_games(g in (2usize..=4).prop_flat_map(explicit_game)) {
            prop_assert_eq!(plain_verdict(&g, None), pmas_exists_lp(&g).unwrap().is_feasible());
        }

        #[test]
        fn inessential_coalitions_split(m in matrix()) {
            let g = AssignmentGame::new(m).unwrap();
            if let OracleResult::Feasible(s) = pmas_exists_lp(&g).unwrap() {
                for (bits, split) in inessential_splits(&g).into_iter().enumerate() {
                    let Some((a, b)) = split else { continue };
                    let whole = Coalition(bits as u32);
                    for part in [a, b] {
                        for i in part.members() {
                            prop_assert_eq!(s.payoff(whole, i), s.payoff(part, i));
                        }
                    }
                }
            }
        }
    }
}
