//! Two-phase primal simplex on a sparse row tableau.

use alloc::vec;
use alloc::vec::Vec;

use super::{Coefficients, LinearProgram, LpResult, Relation, Sense};
use crate::error::{Error, Result};
use crate::rational::Rational;

type Row = Vec<(usize, Rational)>;

/// How an original variable maps onto nonnegative tableau columns.
#[derive(Clone)]
enum Column {
    /// `x = shift + y`
    Shifted { col: usize, shift: Rational },
    /// `x = y_plus - y_minus`
    Split { plus: usize, minus: usize },
}

struct Tableau {
    rows: Vec<Row>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
    /// Reduced costs of the current (minimization) objective.
    cost: Vec<Rational>,
    /// Columns that may never enter the basis.
    blocked: Vec<bool>,
}

fn axpy(target: &Row, factor: &Rational, source: &Row) -> Row {
    // target - factor * source, both sorted by column
    let mut out = Vec::with_capacity(target.len() + source.len());
    let (mut i, mut j) = (0, 0);
    while i < target.len() || j < source.len() {
        let take_target = j >= source.len() || (i < target.len() && target[i].0 < source[j].0);
        let take_source = i >= target.len() || (j < source.len() && source[j].0 < target[i].0);
        if take_target {
            out.push(target[i].clone());
            i += 1;
        } else if take_source {
            out.push((source[j].0, -(factor * &source[j].1)));
            j += 1;
        } else {
            let v = &target[i].1 - factor * &source[j].1;
            if !v.is_zero() {
                out.push((target[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn entry(row: &Row, col: usize) -> Option<&Rational> {
    row.binary_search_by_key(&col, |e| e.0)
        .ok()
        .map(|k| &row[k].1)
}

impl Tableau {
    fn pivot(&mut self, r: usize, q: usize) {
        let a = entry(&self.rows[r], q)
            .expect("pivot on a zero entry")
            .clone();
        if a != Rational::one() {
            let inv = a.recip();
            for e in self.rows[r].iter_mut() {
                e.1 *= &inv;
            }
            self.rhs[r] *= &inv;
        }
        let pivot_row = core::mem::take(&mut self.rows[r]);
        let pivot_rhs = self.rhs[r].clone();
        for i in 0..self.rows.len() {
            if i == r {
                continue;
            }
            let Some(f) = entry(&self.rows[i], q).cloned() else {
                continue;
            };
            self.rows[i] = axpy(&self.rows[i], &f, &pivot_row);
            if !pivot_rhs.is_zero() {
                let delta = &f * &pivot_rhs;
                self.rhs[i] -= delta;
            }
        }
        let dq = self.cost[q].clone();
        if !dq.is_zero() {
            for (j, v) in &pivot_row {
                let delta = &dq * v;
                self.cost[*j] -= delta;
            }
        }
        self.rows[r] = pivot_row;
        self.basis[r] = q;
    }

    /// Runs Bland's rule until optimal. Returns `false` when unbounded.
    fn optimize(&mut self) -> bool {
        loop {
            let entering =
                (0..self.cost.len()).find(|&j| !self.blocked[j] && self.cost[j].is_negative());
            let Some(q) = entering else {
                return true;
            };
            let mut best: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                let Some(a) = entry(&self.rows[i], q) else {
                    continue;
                };
                if !a.is_positive() {
                    continue;
                }
                let ratio = &self.rhs[i] / a;
                let better = match &best {
                    None => true,
                    Some((k, b)) => ratio < *b || (ratio == *b && self.basis[i] < self.basis[*k]),
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            let Some((r, _)) = best else {
                return false;
            };
            self.pivot(r, q);
        }
    }

    /// Installs reduced costs for `min c.y` given the current basis.
    fn price(&mut self, c: &[Rational]) {
        self.cost = c.to_vec();
        for i in 0..self.rows.len() {
            let cb = &c[self.basis[i]];
            if cb.is_zero() {
                continue;
            }
            let cb = cb.clone();
            for (j, v) in &self.rows[i] {
                let delta = &cb * v;
                self.cost[*j] -= delta;
            }
        }
    }
}

pub(super) fn solve(lp: &LinearProgram) -> Result<LpResult> {
    // Structural columns.
    let mut columns = Vec::with_capacity(lp.vars);
    let mut ncols = 0usize;
    for j in 0..lp.vars {
        match &lp.lower[j] {
            Some(l) => {
                columns.push(Column::Shifted {
                    col: ncols,
                    shift: l.clone(),
                });
                ncols += 1;
            }
            None => {
                columns.push(Column::Split {
                    plus: ncols,
                    minus: ncols + 1,
                });
                ncols += 2;
            }
        }
    }
    let structural = ncols;

    // Rows over structural columns with nonnegative right-hand sides.
    let mut rows: Vec<(Row, Relation, Rational)> = Vec::with_capacity(lp.constraints.len());
    for c in &lp.constraints {
        let terms: Vec<(usize, &Rational)> = match &c.coefficients {
            Coefficients::Dense(v) => v.iter().enumerate().filter(|(_, a)| !a.is_zero()).collect(),
            Coefficients::Sparse(t) => t.iter().map(|(j, a)| (*j, a)).collect(),
        };
        let mut rhs = c.rhs.clone();
        let mut row: Row = Vec::with_capacity(terms.len());
        for (j, a) in terms {
            match &columns[j] {
                Column::Shifted { col, shift } => {
                    if !shift.is_zero() {
                        rhs -= a * shift;
                    }
                    row.push((*col, a.clone()));
                }
                Column::Split { plus, minus } => {
                    row.push((*plus, a.clone()));
                    row.push((*minus, -a));
                }
            }
        }
        row.sort_by_key(|e| e.0);
        // merge duplicates from sparse input
        let mut merged: Row = Vec::with_capacity(row.len());
        for (j, a) in row {
            match merged.last_mut() {
                Some((k, b)) if *k == j => *b += a,
                _ => merged.push((j, a)),
            }
        }
        merged.retain(|e| !e.1.is_zero());
        let mut relation = c.relation;
        if rhs.is_negative() {
            rhs = -rhs;
            for e in merged.iter_mut() {
                e.1 = -&e.1;
            }
            relation = match relation {
                Relation::Le => Relation::Ge,
                Relation::Ge => Relation::Le,
                Relation::Eq => Relation::Eq,
            };
        }
        rows.push((merged, relation, rhs));
    }

    // Slack, surplus and artificial columns.
    let mut tableau_rows = Vec::with_capacity(rows.len());
    let mut rhs_col = Vec::with_capacity(rows.len());
    let mut basis = Vec::with_capacity(rows.len());
    let mut artificial_rows = Vec::new();
    for (mut row, relation, rhs) in rows {
        match relation {
            Relation::Le => {
                row.push((ncols, Rational::one()));
                basis.push(ncols);
                ncols += 1;
            }
            Relation::Ge => {
                row.push((ncols, -Rational::one()));
                ncols += 1;
                row.push((ncols, Rational::one()));
                basis.push(ncols);
                artificial_rows.push(tableau_rows.len());
                ncols += 1;
            }
            Relation::Eq => {
                row.push((ncols, Rational::one()));
                basis.push(ncols);
                artificial_rows.push(tableau_rows.len());
                ncols += 1;
            }
        }
        tableau_rows.push(row);
        rhs_col.push(rhs);
    }
    let mut is_artificial = vec![false; ncols];
    for &i in &artificial_rows {
        is_artificial[basis[i]] = true;
    }

    let mut t = Tableau {
        rows: tableau_rows,
        rhs: rhs_col,
        basis,
        cost: Vec::new(),
        blocked: vec![false; ncols],
    };

    // Phase 1.
    if !artificial_rows.is_empty() {
        let c1: Vec<Rational> = is_artificial
            .iter()
            .map(|&a| if a { Rational::one() } else { Rational::zero() })
            .collect();
        t.price(&c1);
        if !t.optimize() {
            return Err(Error::Solver("phase one unbounded"));
        }
        let infeasibility: Rational = (0..t.rows.len())
            .filter(|&i| is_artificial[t.basis[i]])
            .map(|i| t.rhs[i].clone())
            .sum();
        if infeasibility.is_positive() {
            return Ok(LpResult::Infeasible);
        }
        // Drive remaining (zero-valued) artificials out of the basis.
        let mut i = 0;
        while i < t.rows.len() {
            if !is_artificial[t.basis[i]] {
                i += 1;
                continue;
            }
            let replacement = t.rows[i]
                .iter()
                .find(|(j, _)| !is_artificial[*j])
                .map(|e| e.0);
            match replacement {
                Some(q) => {
                    t.pivot(i, q);
                    i += 1;
                }
                None => {
                    t.rows.swap_remove(i);
                    t.rhs.swap_remove(i);
                    t.basis.swap_remove(i);
                }
            }
        }
        for (j, a) in is_artificial.iter().enumerate() {
            if *a {
                t.blocked[j] = true;
            }
        }
        for row in t.rows.iter_mut() {
            row.retain(|(j, _)| !is_artificial[*j]);
        }
    }

    // Phase 2: minimize c.y where maximize objectives are negated.
    let mut c2 = vec![Rational::zero(); ncols];
    for (j, a) in lp.objective.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let a = match lp.sense {
            Sense::Minimize => a.clone(),
            Sense::Maximize => -a,
        };
        match &columns[j] {
            Column::Shifted { col, .. } => c2[*col] += &a,
            Column::Split { plus, minus } => {
                c2[*plus] += &a;
                c2[*minus] -= &a;
            }
        }
    }
    let has_objective = c2[..structural].iter().any(|a| !a.is_zero());
    if has_objective {
        t.price(&c2);
        if !t.optimize() {
            return Ok(LpResult::Unbounded);
        }
    }

    let mut y = vec![Rational::zero(); ncols];
    for (i, &b) in t.basis.iter().enumerate() {
        y[b] = t.rhs[i].clone();
    }
    let point: Vec<Rational> = columns
        .iter()
        .map(|c| match c {
            Column::Shifted { col, shift } => shift + &y[*col],
            Column::Split { plus, minus } => &y[*plus] - &y[*minus],
        })
        .collect();
    let value = lp.objective_value(&point);
    Ok(LpResult::Optimal { point, value })
}
