//! Exact linear programming over [`Rational`].
//!
//! Programs are built incrementally and solved by a two-phase primal simplex
//! on a sparse tableau with Bland's smallest-index rule, so every run
//! terminates and is reproducible. Results are exact: an `Optimal` point is
//! re-checked against every constraint before it is returned.

pub mod linalg;
mod simplex;

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Comparison between a constraint's left-hand side and its right-hand side.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

impl Relation {
    pub fn holds(self, lhs: &Rational, rhs: &Rational) -> bool {
        match self {
            Relation::Le => lhs <= rhs,
            Relation::Eq => lhs == rhs,
            Relation::Ge => lhs >= rhs,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sense {
    Maximize,
    Minimize,
}

/// Left-hand side coefficients of a constraint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Coefficients {
    /// One coefficient per variable.
    Dense(Vec<Rational>),
    /// `(variable, coefficient)` pairs; absent variables have coefficient zero.
    Sparse(Vec<(usize, Rational)>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub coefficients: Coefficients,
    pub relation: Relation,
    pub rhs: Rational,
}

impl Constraint {
    fn lhs(&self, point: &[Rational]) -> Rational {
        match &self.coefficients {
            Coefficients::Dense(row) => row.iter().zip(point).map(|(a, x)| a * x).sum(),
            Coefficients::Sparse(terms) => terms.iter().map(|(j, a)| a * &point[*j]).sum(),
        }
    }

    pub fn is_satisfied_by(&self, point: &[Rational]) -> bool {
        self.relation.holds(&self.lhs(point), &self.rhs)
    }
}

/// A linear program over `vars` variables.
///
/// Variables are free unless given a lower bound; upper bounds are ordinary
/// constraints.
#[derive(Clone, Debug)]
pub struct LinearProgram {
    vars: usize,
    lower: Vec<Option<Rational>>,
    constraints: Vec<Constraint>,
    objective: Vec<Rational>,
    sense: Sense,
}

/// Outcome of [`LinearProgram::solve`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpResult {
    Optimal {
        point: Vec<Rational>,
        value: Rational,
    },
    Infeasible,
    Unbounded,
}

impl LpResult {
    pub fn is_optimal(&self) -> bool {
        matches!(self, LpResult::Optimal { .. })
    }
}

/// Outcome of [`LinearProgram::feasible`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Feasibility {
    Feasible(Vec<Rational>),
    Infeasible,
}

impl LinearProgram {
    /// A program with `vars` free variables, no constraints and a zero objective to maximize.
    pub fn new(vars: usize) -> Self {
        LinearProgram {
            vars,
            lower: alloc::vec![None; vars],
            constraints: Vec::new(),
            objective: alloc::vec![Rational::zero(); vars],
            sense: Sense::Maximize,
        }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn lower_bound(&self, var: usize) -> Option<&Rational> {
        self.lower[var].as_ref()
    }

    /// Adds a fresh free variable and returns its index.
    pub fn add_var(&mut self) -> usize {
        self.vars += 1;
        self.lower.push(None);
        self.objective.push(Rational::zero());
        self.vars - 1
    }

    /// Restricts `var >= bound`. Panics on an out-of-range index.
    pub fn set_lower_bound(&mut self, var: usize, bound: Rational) {
        self.lower[var] = Some(bound);
    }

    pub fn set_nonnegative(&mut self, var: usize) {
        self.set_lower_bound(var, Rational::zero());
    }

    pub fn push(&mut self, constraint: Constraint) {
        self.constraints.push(constraint);
    }

    pub fn add_sparse<I>(&mut self, terms: I, relation: Relation, rhs: Rational)
    where
        I: IntoIterator<Item = (usize, Rational)>,
    {
        let terms = terms.into_iter().filter(|(_, a)| !a.is_zero()).collect();
        self.push(Constraint {
            coefficients: Coefficients::Sparse(terms),
            relation,
            rhs,
        });
    }

    pub fn add_dense(&mut self, row: Vec<Rational>, relation: Relation, rhs: Rational) {
        self.push(Constraint {
            coefficients: Coefficients::Dense(row),
            relation,
            rhs,
        });
    }

    /// Replaces the objective with a dense coefficient row.
    pub fn set_objective(&mut self, sense: Sense, coefficients: Vec<Rational>) {
        self.sense = sense;
        self.objective = coefficients;
    }

    pub fn set_sparse_objective<I>(&mut self, sense: Sense, terms: I)
    where
        I: IntoIterator<Item = (usize, Rational)>,
    {
        self.sense = sense;
        self.objective = alloc::vec![Rational::zero(); self.vars];
        for (j, a) in terms {
            self.objective[j] += a;
        }
    }

    pub fn sense(&self) -> Sense {
        self.sense
    }

    pub fn objective(&self) -> &[Rational] {
        &self.objective
    }

    fn validate(&self) -> Result<()> {
        if self.objective.len() != self.vars {
            return Err(Error::ObjectiveLength {
                expected: self.vars,
                found: self.objective.len(),
            });
        }
        for (row, c) in self.constraints.iter().enumerate() {
            match &c.coefficients {
                Coefficients::Dense(v) if v.len() != self.vars => {
                    return Err(Error::RowLength {
                        row,
                        expected: self.vars,
                        found: v.len(),
                    })
                }
                Coefficients::Sparse(terms) => {
                    if let Some((var, _)) = terms.iter().find(|(j, _)| *j >= self.vars) {
                        return Err(Error::VariableOutOfRange {
                            row,
                            var: *var,
                            vars: self.vars,
                        });
                    }
                }
                _ => {}
            }
        }
        Ok(())
    }

    /// Whether `point` meets every bound and constraint exactly.
    pub fn is_feasible_point(&self, point: &[Rational]) -> bool {
        point.len() == self.vars
            && self
                .lower
                .iter()
                .zip(point)
                .all(|(l, x)| l.as_ref().is_none_or(|l| x >= l))
            && self.constraints.iter().all(|c| c.is_satisfied_by(point))
    }

    pub fn objective_value(&self, point: &[Rational]) -> Rational {
        self.objective.iter().zip(point).map(|(c, x)| c * x).sum()
    }

    /// Solves the program exactly.
    pub fn solve(&self) -> Result<LpResult> {
        self.validate()?;
        let result = simplex::solve(self)?;
        if let LpResult::Optimal { point, .. } = &result {
            if !self.is_feasible_point(point) {
                return Err(Error::Solver("optimal point violates a constraint"));
            }
        }
        Ok(result)
    }

    /// Feasibility only; the objective is ignored.
    pub fn feasible(&self) -> Result<Feasibility> {
        let mut probe = self.clone();
        probe.objective = alloc::vec![Rational::zero(); self.vars];
        Ok(match probe.solve()? {
            LpResult::Optimal { point, .. } => Feasibility::Feasible(point),
            LpResult::Infeasible => Feasibility::Infeasible,
            LpResult::Unbounded => return Err(Error::Solver("zero objective reported unbounded")),
        })
    }

    fn extremize(&self, var: usize, sense: Sense) -> Result<Rational> {
        let mut probe = self.clone();
        probe.set_sparse_objective(sense, [(var, Rational::one())]);
        match probe.solve()? {
            LpResult::Optimal { value, .. } => Ok(value),
            LpResult::Infeasible => Err(Error::Infeasible),
            LpResult::Unbounded => Err(Error::Unbounded),
        }
    }

    /// Exact maximum of one variable over the feasible region.
    pub fn max_coordinate(&self, var: usize) -> Result<Rational> {
        self.extremize(var, Sense::Maximize)
    }

    /// Exact minimum of one variable over the feasible region.
    pub fn min_coordinate(&self, var: usize) -> Result<Rational> {
        self.extremize(var, Sense::Minimize)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;
    use alloc::vec;

    #[test]
    fn single_binding_constraint() {
        let mut lp = LinearProgram::new(1);
        lp.add_dense(vec![int(1)], Relation::Le, int(3));
        lp.add_dense(vec![int(1)], Relation::Ge, int(0));
        lp.set_objective(Sense::Maximize, vec![int(1)]);
        assert_eq!(
            lp.solve().unwrap(),
            LpResult::Optimal {
                point: vec![int(3)],
                value: int(3)
            }
        );
    }

    #[test]
    fn contradictory_bounds() {
        let mut lp = LinearProgram::new(1);
        lp.add_dense(vec![int(1)], Relation::Le, int(1));
        lp.add_dense(vec![int(1)], Relation::Ge, int(2));
        lp.set_objective(Sense::Maximize, vec![int(1)]);
        assert_eq!(lp.solve().unwrap(), LpResult::Infeasible);
    }

    #[test]
    fn feasibility_examples() {
        let mut lp = LinearProgram::new(1);
        lp.add_dense(vec![int(1)], Relation::Ge, int(0));
        lp.add_dense(vec![int(1)], Relation::Le, int(0));
        assert_eq!(lp.feasible().unwrap(), Feasibility::Feasible(vec![int(0)]));

        let mut lp = LinearProgram::new(1);
        lp.add_dense(vec![int(1)], Relation::Ge, int(1));
        lp.add_dense(vec![int(1)], Relation::Le, int(0));
        assert_eq!(lp.feasible().unwrap(), Feasibility::Infeasible);
    }

    #[test]
    fn max_of_pinned_variable() {
        let mut lp = LinearProgram::new(1);
        lp.add_dense(vec![int(1)], Relation::Eq, int(7));
        assert_eq!(lp.max_coordinate(0).unwrap(), int(7));
        assert_eq!(lp.min_coordinate(0).unwrap(), int(7));
    }

    #[test]
    fn unbounded_is_a_status() {
        let mut lp = LinearProgram::new(2);
        lp.set_nonnegative(0);
        lp.add_dense(vec![int(1), int(-1)], Relation::Le, int(1));
        lp.set_objective(Sense::Maximize, vec![int(1), int(0)]);
        assert_eq!(lp.solve().unwrap(), LpResult::Unbounded);
        assert_eq!(lp.max_coordinate(0), Err(Error::Unbounded));
    }

    #[test]
    fn malformed_rows_are_rejected() {
        let mut lp = LinearProgram::new(2);
        lp.add_dense(vec![int(1)], Relation::Le, int(1));
        assert_eq!(
            lp.solve(),
            Err(Error::RowLength {
                row: 0,
                expected: 2,
                found: 1
            })
        );
        let mut lp = LinearProgram::new(2);
        lp.add_sparse([(5, int(1))], Relation::Le, int(1));
        assert!(matches!(
            lp.solve(),
            Err(Error::VariableOutOfRange { var: 5, .. })
        ));
    }

    #[test]
    fn free_variables_go_negative() {
        let mut lp = LinearProgram::new(2);
        lp.add_dense(vec![int(1), int(1)], Relation::Eq, int(-4));
        lp.add_dense(vec![int(1), int(0)], Relation::Ge, int(-10));
        lp.add_dense(vec![int(0), int(1)], Relation::Ge, int(-1));
        lp.set_objective(Sense::Maximize, vec![int(1), int(0)]);
        match lp.solve().unwrap() {
            LpResult::Optimal { point, value } => {
                assert_eq!(value, int(-3));
                assert_eq!(point, vec![int(-3), int(-1)]);
            }
            other => panic!("{other:?}"),
        }
        lp.set_objective(Sense::Minimize, vec![int(1), int(0)]);
        assert_eq!(lp.min_coordinate(0).unwrap(), int(-10));
    }

    #[test]
    fn redundant_equalities() {
        let mut lp = LinearProgram::new(2);
        lp.set_nonnegative(0);
        lp.set_nonnegative(1);
        lp.add_dense(vec![int(1), int(1)], Relation::Eq, int(2));
        lp.add_dense(vec![int(2), int(2)], Relation::Eq, int(4));
        lp.add_dense(vec![int(0), int(0)], Relation::Eq, int(0));
        lp.set_objective(Sense::Maximize, vec![int(1), int(2)]);
        match lp.solve().unwrap() {
            LpResult::Optimal { value, .. } => assert_eq!(value, int(4)),
            other => panic!("{other:?}"),
        }
    }
}
