//! Point solutions and certificates.

mod kohlberg;
mod nucleolus;
mod shapley;
mod tau;

pub use kohlberg::{
    balanced_family, kohlberg_check, FamilyVerdict, KohlbergCertificate, Level, Unbalance,
};
pub use nucleolus::{nucleolus, nucleolus_over};
pub use shapley::shapley_value;
pub use tau::{lower_vector, tau_value, tau_value_assignment, upper_vector, TauBundle};

use alloc::vec::Vec;

use crate::coalition::Coalition;
use crate::error::{Error, Result};
use crate::game::{coalition_sum, grand_coalition, Game};
use crate::lp::{Feasibility, LinearProgram, Relation};
use crate::rational::Rational;

/// `x(S) - w(S)`.
pub fn satisfaction(g: &(impl Game + ?Sized), x: &[Rational], s: Coalition) -> Result<Rational> {
    if x.len() != g.players() {
        return Err(Error::DimensionMismatch {
            expected: g.players(),
            found: x.len(),
        });
    }
    crate::game::check_coalition(g, s)?;
    Ok(coalition_sum(x, s) - g.worth(s))
}

/// The core as a linear program over the payoff vector, using the essential coalitions.
pub fn core_lp(g: &(impl Game + ?Sized)) -> LinearProgram {
    let n = g.players();
    let all = grand_coalition(g);
    let mut lp = LinearProgram::new(n);
    lp.add_sparse(
        (0..n).map(|i| (i, Rational::one())),
        Relation::Eq,
        g.worth(all),
    );
    for s in g.essential_coalitions() {
        if s == all {
            continue;
        }
        if s.len() == 1 {
            lp.set_lower_bound(s.first().unwrap(), g.worth(s));
        } else {
            lp.add_sparse(
                s.members().map(|i| (i, Rational::one())),
                Relation::Ge,
                g.worth(s),
            );
        }
    }
    lp
}

/// Some core point, or `None` when the core is empty.
pub fn core_point(g: &(impl Game + ?Sized)) -> Result<Option<Vec<Rational>>> {
    Ok(match core_lp(g).feasible()? {
        Feasibility::Feasible(x) => Some(x),
        Feasibility::Infeasible => None,
    })
}
