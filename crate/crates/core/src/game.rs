//! Transferable-utility games behind one read interface.

use alloc::borrow::Cow;
use alloc::boxed::Box;
use alloc::vec;
use alloc::vec::Vec;

use crate::coalition::{by_size_then_lex, Coalition};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Exhaustive `2^n` sweeps are refused beyond this many players.
pub const MAX_PLAYERS: usize = 20;

/// A coalitional function on players `0..players()`.
pub trait Game {
    fn players(&self) -> usize;

    /// `w(S)`. `s` must lie within `0..players()`; `w(∅) = 0`.
    fn worth(&self, s: Coalition) -> Rational;

    /// Every worth, indexed by the coalition bitmask.
    fn worth_table(&self) -> Cow<'_, [Rational]> {
        let n = self.players();
        Cow::Owned(
            (0..1u32 << n)
                .map(|bits| self.worth(Coalition(bits)))
                .collect(),
        )
    }

    /// Essential coalitions (including singletons), by cardinality then lexicographic.
    fn essential_coalitions(&self) -> Vec<Coalition> {
        essential_by_partition_search(self)
    }
}

impl<G: Game + ?Sized> Game for &G {
    fn players(&self) -> usize {
        (**self).players()
    }
    fn worth(&self, s: Coalition) -> Rational {
        (**self).worth(s)
    }
    fn worth_table(&self) -> Cow<'_, [Rational]> {
        (**self).worth_table()
    }
    fn essential_coalitions(&self) -> Vec<Coalition> {
        (**self).essential_coalitions()
    }
}

impl<G: Game + ?Sized> Game for Box<G> {
    fn players(&self) -> usize {
        (**self).players()
    }
    fn worth(&self, s: Coalition) -> Rational {
        (**self).worth(s)
    }
    fn worth_table(&self) -> Cow<'_, [Rational]> {
        (**self).worth_table()
    }
    fn essential_coalitions(&self) -> Vec<Coalition> {
        (**self).essential_coalitions()
    }
}

pub fn check_coalition(g: &(impl Game + ?Sized), s: Coalition) -> Result<()> {
    let n = g.players();
    if !s.is_subset_of(Coalition::full(n)) {
        let player = s.difference(Coalition::full(n)).first().unwrap_or(n);
        return Err(Error::PlayerOutOfRange { player, players: n });
    }
    Ok(())
}

/// `w(S)` with a range check on the members of `s`.
pub fn checked_worth(g: &(impl Game + ?Sized), s: Coalition) -> Result<Rational> {
    check_coalition(g, s)?;
    Ok(g.worth(s))
}

pub fn grand_coalition(g: &(impl Game + ?Sized)) -> Coalition {
    Coalition::full(g.players())
}

pub(crate) fn check_size(n: usize, limit: usize) -> Result<()> {
    if n > limit {
        return Err(Error::TooManyPlayers { players: n, limit });
    }
    Ok(())
}

/// `x(S)`.
pub fn coalition_sum(x: &[Rational], s: Coalition) -> Rational {
    s.members().map(|i| &x[i]).sum()
}

/// A game given by an explicit table of worths; unlisted coalitions are worth zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExplicitGame {
    players: usize,
    values: Vec<Rational>,
}

impl ExplicitGame {
    /// The zero game on `players` players.
    pub fn new(players: usize) -> Result<Self> {
        check_size(players, MAX_PLAYERS)?;
        Ok(ExplicitGame {
            players,
            values: vec![Rational::zero(); 1 << players],
        })
    }

    pub fn from_values<I>(players: usize, values: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Coalition, Rational)>,
    {
        let mut g = Self::new(players)?;
        for (s, v) in values {
            g.set(s, v)?;
        }
        Ok(g)
    }

    /// Copies any game into a table.
    pub fn from_game(g: &(impl Game + ?Sized)) -> Result<Self> {
        check_size(g.players(), MAX_PLAYERS)?;
        Ok(ExplicitGame {
            players: g.players(),
            values: g.worth_table().into_owned(),
        })
    }

    pub fn set(&mut self, s: Coalition, value: Rational) -> Result<()> {
        check_coalition(self, s)?;
        if s.is_empty() {
            return Err(Error::EmptyCoalition);
        }
        self.values[s.index()] = value;
        Ok(())
    }
}

impl Game for ExplicitGame {
    fn players(&self) -> usize {
        self.players
    }
    fn worth(&self, s: Coalition) -> Rational {
        self.values[s.index()].clone()
    }
    fn worth_table(&self) -> Cow<'_, [Rational]> {
        Cow::Borrowed(&self.values)
    }
}

/// The restriction of a game to a coalition, with players renumbered `0..|S|`.
#[derive(Clone, Debug)]
pub struct Subgame<G> {
    parent: G,
    members: Vec<usize>,
}

impl<G: Game> Subgame<G> {
    /// Local player `k` is parent player `members()[k]`.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn parent(&self) -> &G {
        &self.parent
    }

    pub fn to_parent(&self, local: Coalition) -> Coalition {
        Coalition::from_members(local.members().map(|k| self.members[k]))
    }
}

impl<G: Game> Game for Subgame<G> {
    fn players(&self) -> usize {
        self.members.len()
    }
    fn worth(&self, s: Coalition) -> Rational {
        self.parent.worth(self.to_parent(s))
    }
}

/// Restricts `g` to the players of `s`.
pub fn subgame<G: Game>(g: G, s: Coalition) -> Result<Subgame<G>> {
    check_coalition(&g, s)?;
    if s.is_empty() {
        return Err(Error::EmptyCoalition);
    }
    Ok(Subgame {
        members: s.members().collect(),
        parent: g,
    })
}

/// Independent sum of games on disjoint player blocks laid out consecutively.
pub struct Composite<'a> {
    parts: Vec<Box<dyn Game + Send + Sync + 'a>>,
    offsets: Vec<usize>,
    players: usize,
}

impl<'a> Composite<'a> {
    /// Player set of component `k` in the composite numbering.
    pub fn component(&self, k: usize) -> Coalition {
        let n = self.parts[k].players();
        Coalition(Coalition::full(n).0 << self.offsets[k])
    }

    pub fn components(&self) -> usize {
        self.parts.len()
    }
}

impl core::fmt::Debug for Composite<'_> {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("Composite")
            .field("offsets", &self.offsets)
            .field("players", &self.players)
            .finish()
    }
}

impl Game for Composite<'_> {
    fn players(&self) -> usize {
        self.players
    }
    fn worth(&self, s: Coalition) -> Rational {
        self.parts
            .iter()
            .zip(&self.offsets)
            .map(|(g, &off)| {
                let local = Coalition((s.0 >> off) & Coalition::full(g.players()).0);
                if local.is_empty() {
                    Rational::zero()
                } else {
                    g.worth(local)
                }
            })
            .sum()
    }
    fn essential_coalitions(&self) -> Vec<Coalition> {
        let mut all: Vec<Coalition> = self
            .parts
            .iter()
            .zip(&self.offsets)
            .flat_map(|(g, &off)| {
                g.essential_coalitions()
                    .into_iter()
                    .map(move |c| Coalition(c.0 << off))
            })
            .collect();
        sort_size_lex(&mut all);
        all
    }
}

/// `w(S) = Σ_k w_k(S ∩ N_k)` with component `k` occupying the next `players()` indices.
pub fn compose<'a>(games: Vec<Box<dyn Game + Send + Sync + 'a>>) -> Result<Composite<'a>> {
    if games.is_empty() {
        return Err(Error::NothingToCompose);
    }
    let mut offsets = Vec::with_capacity(games.len());
    let mut players = 0;
    for g in &games {
        offsets.push(players);
        players += g.players();
    }
    check_size(players, MAX_PLAYERS)?;
    Ok(Composite {
        parts: games,
        offsets,
        players,
    })
}

pub(crate) fn sort_size_lex(v: &mut [Coalition]) {
    v.sort_by(|a, b| {
        a.len()
            .cmp(&b.len())
            .then_with(|| a.members().cmp(b.members()))
    });
}

/// Whether a coalition is essential, with a two-part split when it is not.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Essentiality {
    Essential,
    /// `w(S) <= P(S1) + P(S2)` where `P` is the best partition value; the parts
    /// may themselves be inessential.
    Inessential(Coalition, Coalition),
}

/// Best partition value `P(T) = max over partitions of T of Σ w(part)` for every `T ⊆ s`,
/// indexed by bitmask.
fn partition_values(table: &[Rational], s: Coalition) -> Vec<Option<Rational>> {
    let mut best: Vec<Option<Rational>> = vec![None; table.len()];
    best[0] = Some(Rational::zero());
    let mut subsets: Vec<Coalition> = s.subsets().filter(|t| !t.is_empty()).collect();
    subsets.sort_by_key(|t| t.len());
    for t in subsets {
        let mut v = table[t.index()].clone();
        for (a, b) in t.splits() {
            let split = best[a.index()].as_ref().unwrap() + best[b.index()].as_ref().unwrap();
            if split > v {
                v = split;
            }
        }
        best[t.index()] = Some(v);
    }
    best
}

/// Decides essentiality of `s` by searching two-part splits over best partition values.
pub fn is_inessential(g: &(impl Game + ?Sized), s: Coalition) -> Result<Essentiality> {
    check_coalition(g, s)?;
    if s.is_empty() {
        return Err(Error::EmptyCoalition);
    }
    if s.len() == 1 {
        return Ok(Essentiality::Essential);
    }
    let table = g.worth_table();
    let best = partition_values(&table, s);
    let ws = &table[s.index()];
    for (a, b) in s.splits() {
        let split = best[a.index()].as_ref().unwrap() + best[b.index()].as_ref().unwrap();
        if *ws <= split {
            return Ok(Essentiality::Inessential(a, b));
        }
    }
    Ok(Essentiality::Essential)
}

/// For every coalition (by bitmask), a two-part split witnessing inessentiality,
/// or `None` when the coalition is essential or empty.
pub fn inessential_splits(g: &(impl Game + ?Sized)) -> Vec<Option<(Coalition, Coalition)>> {
    let n = g.players();
    let table = g.worth_table();
    let best = partition_values(&table, Coalition::full(n));
    (0..1u32 << n)
        .map(|bits| {
            let s = Coalition(bits);
            if s.len() < 2 {
                return None;
            }
            let ws = &table[s.index()];
            s.splits().find(|&(a, b)| {
                *ws <= best[a.index()].as_ref().unwrap() + best[b.index()].as_ref().unwrap()
            })
        })
        .collect()
}

/// The default essential-coalition search: `S` is essential iff `w(S)` beats every
/// partition of `S` into at least two parts. Runs in `3^n`.
pub fn essential_by_partition_search(g: &(impl Game + ?Sized)) -> Vec<Coalition> {
    let n = g.players();
    let table = g.worth_table();
    let best = partition_values(&table, Coalition::full(n));
    let mut out: Vec<Coalition> = by_size_then_lex(n)
        .into_iter()
        .filter(|&s| {
            if s.len() == 1 {
                return true;
            }
            let ws = &table[s.index()];
            s.splits().all(|(a, b)| {
                *ws > best[a.index()].as_ref().unwrap() + best[b.index()].as_ref().unwrap()
            })
        })
        .collect();
    sort_size_lex(&mut out);
    out
}

/// First disjoint pair with `w(S ∪ T) < w(S) + w(T)`, if any.
pub fn superadditivity_violation(g: &(impl Game + ?Sized)) -> Option<(Coalition, Coalition)> {
    let n = g.players();
    let table = g.worth_table();
    for s in 1..1u32 << n {
        let s = Coalition(s);
        for (a, b) in s.splits() {
            if table[s.index()] < &table[a.index()] + &table[b.index()] {
                return Some((a, b));
            }
        }
    }
    None
}

/// First `S ⊂ S ∪ {j}` with `w(S) > w(S ∪ {j})`, if any.
pub fn monotonicity_violation(g: &(impl Game + ?Sized)) -> Option<(Coalition, Coalition)> {
    let n = g.players();
    let table = g.worth_table();
    for s in 0..1u32 << n {
        let s = Coalition(s);
        for j in Coalition::full(n).difference(s).members() {
            let t = s.with(j);
            if table[s.index()] > table[t.index()] {
                return Some((s, t));
            }
        }
    }
    None
}

/// Players `i` with `w(S ∪ {i}) = w(S)` for every `S` not containing `i`.
pub fn null_players(g: &(impl Game + ?Sized)) -> Coalition {
    let n = g.players();
    let table = g.worth_table();
    let all = Coalition::full(n);
    Coalition::from_members((0..n).filter(|&i| {
        all.without(i)
            .subsets()
            .all(|s| table[s.index()] == table[s.with(i).index()])
    }))
}

/// A coalition not containing `player` with nonzero worth, if one exists.
pub fn veto_violation(g: &(impl Game + ?Sized), player: usize) -> Option<Coalition> {
    let n = g.players();
    let table = g.worth_table();
    Coalition::full(n)
        .without(player)
        .subsets()
        .find(|s| !table[s.index()].is_zero())
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;
    use crate::rational::int;

    fn c(members: &[usize]) -> Coalition {
        Coalition::from_members(members.iter().map(|m| m - 1))
    }

    /// The 4-player game with veto player 1 from the PMAS-extendability example.
    pub fn veto_example() -> ExplicitGame {
        ExplicitGame::from_values(
            4,
            [
                (c(&[1, 2]), int(2)),
                (c(&[1, 3]), int(3)),
                (c(&[1, 2, 3]), int(3)),
                (c(&[1, 4]), int(4)),
                (c(&[1, 2, 4]), int(4)),
                (c(&[1, 3, 4]), int(5)),
                (c(&[1, 2, 3, 4]), int(8)),
            ],
        )
        .unwrap()
    }

    /// Three-player convex game `v(12)=1, v(13)=2, v(23)=3, v(123)=5`.
    pub fn convex_three() -> ExplicitGame {
        ExplicitGame::from_values(
            3,
            [
                (c(&[1, 2]), int(1)),
                (c(&[1, 3]), int(2)),
                (c(&[2, 3]), int(3)),
                (c(&[1, 2, 3]), int(5)),
            ],
        )
        .unwrap()
    }

    pub fn pair(value: i64) -> ExplicitGame {
        ExplicitGame::from_values(2, [(c(&[1, 2]), int(value))]).unwrap()
    }

    pub fn coal(members: &[usize]) -> Coalition {
        c(members)
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use crate::rational::int;
    use proptest::prelude::*;

    #[test]
    fn worth_lookup() {
        let g = veto_example();
        assert_eq!(checked_worth(&g, coal(&[1, 3, 4])).unwrap(), int(5));
        assert_eq!(g.worth(Coalition::EMPTY), int(0));
        assert!(matches!(
            checked_worth(&g, Coalition::singleton(7)),
            Err(Error::PlayerOutOfRange {
                player: 7,
                players: 4
            })
        ));
        assert!(ExplicitGame::new(0)
            .unwrap()
            .set(Coalition::EMPTY, int(1))
            .is_err());
        assert!(ExplicitGame::new(21).is_err());
    }

    #[test]
    fn composite_of_convex_example() {
        let g = compose(vec![Box::new(convex_three()), Box::new(pair(3))]).unwrap();
        assert_eq!(g.players(), 5);
        assert_eq!(g.worth(Coalition::full(5)), int(8));
        assert_eq!(g.worth(coal(&[2, 3, 4])), int(3));
        let single = compose(vec![Box::new(convex_three())]).unwrap();
        for s in Coalition::full(3).subsets() {
            assert_eq!(single.worth(s), convex_three().worth(s));
        }
        assert!(compose(Vec::new()).is_err());
    }

    #[test]
    fn subgame_renumbers() {
        let g = veto_example();
        let sub = subgame(&g, coal(&[1, 3, 4])).unwrap();
        assert_eq!(sub.players(), 3);
        assert_eq!(sub.worth(coal(&[1, 2])), int(3));
        assert_eq!(sub.worth(coal(&[1, 3])), int(4));
        assert_eq!(sub.worth(coal(&[1, 2, 3])), int(5));
        assert!(subgame(&g, Coalition::EMPTY).is_err());
        let full = subgame(&g, Coalition::full(4)).unwrap();
        for s in Coalition::full(4).subsets() {
            assert_eq!(full.worth(s), g.worth(s));
        }
    }

    #[test]
    fn inessential_witnesses() {
        let g = veto_example();
        assert_eq!(
            is_inessential(&g, coal(&[1, 2, 3])).unwrap(),
            Essentiality::Inessential(coal(&[1, 3]), coal(&[2]))
        );
        assert_eq!(
            is_inessential(&g, coal(&[3])).unwrap(),
            Essentiality::Essential
        );
        assert_eq!(
            is_inessential(&g, coal(&[1, 3, 4])).unwrap(),
            Essentiality::Essential
        );
    }

    #[test]
    fn essential_sets() {
        let g = veto_example();
        let multi: Vec<Coalition> = g
            .essential_coalitions()
            .into_iter()
            .filter(|s| s.len() > 1 && *s != Coalition::full(4))
            .collect();
        assert_eq!(
            multi,
            vec![
                coal(&[1, 2]),
                coal(&[1, 3]),
                coal(&[1, 4]),
                coal(&[1, 3, 4])
            ]
        );
        // v(N) = 8 beats the best partition value 5 = v(2) + v(134)
        assert!(g.essential_coalitions().contains(&Coalition::full(4)));
        let zero = ExplicitGame::new(4).unwrap();
        assert_eq!(zero.essential_coalitions().len(), 4);
    }

    /// All partitions of a set, by recursion on the lowest member.
    fn partitions(s: Coalition) -> Vec<Vec<Coalition>> {
        let Some(low) = s.first() else {
            return vec![Vec::new()];
        };
        let rest = s.without(low);
        let mut out = Vec::new();
        for block_rest in rest.subsets() {
            let block = block_rest.with(low);
            for mut tail in partitions(rest.difference(block_rest)) {
                tail.push(block);
                out.push(tail);
            }
        }
        out
    }

    fn essential_by_definition(g: &ExplicitGame) -> Vec<Coalition> {
        let mut out: Vec<Coalition> = (1..1u32 << g.players())
            .map(Coalition)
            .filter(|&s| {
                s.len() == 1
                    || partitions(s)
                        .into_iter()
                        .filter(|p| p.len() >= 2)
                        .all(|p| g.worth(s) > p.iter().map(|&b| g.worth(b)).sum::<Rational>())
            })
            .collect();
        sort_size_lex(&mut out);
        out
    }

    fn random_game(n: usize) -> impl Strategy<Value = ExplicitGame> {
        proptest::collection::vec(-3i64..6, 1 << n).prop_map(move |vals| {
            ExplicitGame::from_values(
                n,
                vals.into_iter()
                    .enumerate()
                    .skip(1)
                    .map(|(bits, v)| (Coalition(bits as u32), int(v))),
            )
            .unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]
        #[test]
        fn essential_matches_definition(g in (2usize..=6).prop_flat_map(random_game)) {
            prop_assert_eq!(g.essential_coalitions(), essential_by_definition(&g));
        }

        #[test]
        fn compose_then_restrict(a in random_game(3), b in random_game(2)) {
            let composite = compose(vec![Box::new(a.clone()), Box::new(b.clone())]).unwrap();
            let back_a = subgame(&composite, composite.component(0)).unwrap();
            let back_b = subgame(&composite, composite.component(1)).unwrap();
            for s in Coalition::full(3).subsets() {
                prop_assert_eq!(back_a.worth(s), a.worth(s));
            }
            for s in Coalition::full(2).subsets() {
                prop_assert_eq!(back_b.worth(s), b.worth(s));
            }
        }
    }
}
