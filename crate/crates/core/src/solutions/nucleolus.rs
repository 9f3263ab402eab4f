//! The nucleolus by successive max-min programs.

use alloc::vec;
use alloc::vec::Vec;

use crate::coalition::Coalition;
use crate::error::{Error, Result};
use crate::game::{check_coalition, check_size, coalition_sum, grand_coalition, Game, MAX_PLAYERS};
use crate::lp::{LinearProgram, LpResult, Relation, Sense};
use crate::rational::Rational;

/// Incremental span of coalition indicator vectors.
struct Span {
    width: usize,
    rows: Vec<(usize, Vec<Rational>)>,
}

impl Span {
    fn new(width: usize) -> Self {
        Span {
            width,
            rows: Vec::new(),
        }
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, s: Coalition) -> Vec<Rational> {
        let mut v: Vec<Rational> = (0..self.width)
            .map(|i| {
                if s.contains(i) {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            })
            .collect();
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let f = &v[*p] / &row[*p];
            for (a, b) in v.iter_mut().zip(row) {
                if !b.is_zero() {
                    *a -= &f * b;
                }
            }
        }
        v
    }

    fn spans(&self, s: Coalition) -> bool {
        self.reduce(s).iter().all(Rational::is_zero)
    }

    fn insert(&mut self, s: Coalition) {
        let v = self.reduce(s);
        if let Some(p) = v.iter().position(|a| !a.is_zero()) {
            self.rows.push((p, v));
        }
    }
}

/// The nucleolus, lexicographically maximizing satisfactions of the
/// essential coalitions other than the grand coalition.
pub fn nucleolus(g: &(impl Game + ?Sized)) -> Result<Vec<Rational>> {
    check_size(g.players(), MAX_PLAYERS)?;
    let all = grand_coalition(g);
    let coalitions: Vec<Coalition> = g
        .essential_coalitions()
        .into_iter()
        .filter(|&s| s != all)
        .collect();
    nucleolus_over(g, &coalitions)
}

/// The nucleolus restricted to core allocations, with satisfactions taken
/// over `coalitions`. Their indicator vectors, together with the grand
/// coalition, must span the payoff space.
pub fn nucleolus_over(g: &(impl Game + ?Sized), coalitions: &[Coalition]) -> Result<Vec<Rational>> {
    let n = g.players();
    check_size(n, MAX_PLAYERS)?;
    for &s in coalitions {
        check_coalition(g, s)?;
    }
    let all = grand_coalition(g);
    let total = g.worth(all);
    let worth: Vec<Rational> = coalitions.iter().map(|&s| g.worth(s)).collect();
    let mut span = Span::new(n);
    span.insert(all);
    let mut active: Vec<usize> = (0..coalitions.len())
        .filter(|&k| !span.spans(coalitions[k]))
        .collect();
    let mut frozen: Vec<(usize, Rational)> = Vec::new();
    let mut point: Option<Vec<Rational>> = None;
    let level = n;

    while !active.is_empty() {
        let mut lp = LinearProgram::new(n + 1);
        lp.set_nonnegative(level);
        lp.add_sparse(
            (0..n).map(|i| (i, Rational::one())),
            Relation::Eq,
            total.clone(),
        );
        for (k, t) in &frozen {
            lp.add_sparse(
                coalitions[*k].members().map(|i| (i, Rational::one())),
                Relation::Eq,
                &worth[*k] + t,
            );
        }
        for &k in &active {
            let terms = coalitions[k]
                .members()
                .map(|i| (i, Rational::one()))
                .chain([(level, -Rational::one())]);
            lp.add_sparse(terms, Relation::Ge, worth[k].clone());
        }
        lp.set_sparse_objective(Sense::Maximize, [(level, Rational::one())]);
        let (p, best) = match lp.solve()? {
            LpResult::Optimal { point, value } => (point, value),
            LpResult::Infeasible if frozen.is_empty() => return Err(Error::Unbalanced),
            LpResult::Infeasible => return Err(Error::Solver("nucleolus stage became infeasible")),
            LpResult::Unbounded => return Err(Error::Unbounded),
        };
        lp.add_sparse([(level, Rational::one())], Relation::Eq, best.clone());

        let mut newly = Vec::new();
        for &k in &active {
            let s = coalitions[k];
            if coalition_sum(&p, s) - &worth[k] > best {
                continue;
            }
            let mut probe = lp.clone();
            probe.set_sparse_objective(Sense::Maximize, s.members().map(|i| (i, Rational::one())));
            let reach = match probe.solve()? {
                LpResult::Optimal { value, .. } => value,
                _ => return Err(Error::Solver("freezing probe failed")),
            };
            if reach - &worth[k] == best {
                newly.push(k);
            }
        }
        if newly.is_empty() {
            return Err(Error::Solver("no coalition is fixed at the optimum"));
        }
        for k in newly {
            span.insert(coalitions[k]);
            frozen.push((k, best.clone()));
        }
        active.retain(|&k| !span.spans(coalitions[k]));
        point = Some(p[..n].to_vec());
    }

    if span.rank() < n {
        return Err(Error::Solver(
            "coalitions do not determine a unique allocation",
        ));
    }
    Ok(point.unwrap_or_else(|| vec![total]))
}
