//! Upper and lower vectors and the tau-value.

use alloc::vec::Vec;

use super::core_point;
use crate::assignment::{side_optimal_vertices, AssignmentGame};
use crate::coalition::Coalition;
use crate::error::{Error, Result};
use crate::game::{check_size, grand_coalition, Game, MAX_PLAYERS};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TauBundle {
    /// Marginal contributions to the grand coalition.
    pub upper: Vec<Rational>,
    /// Concession lower bounds.
    pub lower: Vec<Rational>,
    pub kappa: Rational,
    pub tau: Vec<Rational>,
}

/// `M_i = w(N) - w(N \ {i})`.
pub fn upper_vector(g: &(impl Game + ?Sized)) -> Vec<Rational> {
    let all = grand_coalition(g);
    let total = g.worth(all);
    (0..g.players())
        .map(|i| &total - g.worth(all.without(i)))
        .collect()
}

/// `m_i = max over S ∋ i of w(S) - Σ_{j ∈ S \ {i}} M_j`, by a full sweep.
pub fn lower_vector(g: &(impl Game + ?Sized)) -> Result<Vec<Rational>> {
    let n = g.players();
    check_size(n, MAX_PLAYERS)?;
    let upper = upper_vector(g);
    lower_with(g, &upper)
}

fn lower_with(g: &(impl Game + ?Sized), upper: &[Rational]) -> Result<Vec<Rational>> {
    let n = g.players();
    let table = g.worth_table();
    let mut best: Vec<Option<Rational>> = alloc::vec![None; n];
    // running Σ_{j∈S} M_j built from the set with the top bit removed
    let mut upper_sum: Vec<Rational> = Vec::with_capacity(1 << n);
    upper_sum.push(Rational::zero());
    for bits in 1..1u32 << n {
        let top = 31 - bits.leading_zeros() as usize;
        let rest = bits & !(1 << top);
        let sum = &upper_sum[rest as usize] + &upper[top];
        let s = Coalition(bits);
        let slack = &table[s.index()] - &sum;
        for i in s.members() {
            let v = &slack + &upper[i];
            if best[i].as_ref().is_none_or(|b| v > *b) {
                best[i] = Some(v);
            }
        }
        upper_sum.push(sum);
    }
    Ok(best
        .into_iter()
        .map(|b| b.unwrap_or_else(Rational::zero))
        .collect())
}

/// The efficient compromise between the upper and lower vectors.
///
/// When the two vectors have equal sums the weight is taken to be zero and
/// the lower vector must then be efficient.
pub fn tau_value(g: &(impl Game + ?Sized)) -> Result<TauBundle> {
    let n = g.players();
    check_size(n, MAX_PLAYERS)?;
    if core_point(g)?.is_none() {
        return Err(Error::Unbalanced);
    }
    let upper = upper_vector(g);
    let lower = lower_with(g, &upper)?;
    let total = g.worth(grand_coalition(g));
    let sum_upper: Rational = upper.iter().sum();
    let sum_lower: Rational = lower.iter().sum();
    let kappa = if sum_upper == sum_lower {
        if sum_lower != total {
            return Err(Error::DegenerateTau);
        }
        Rational::zero()
    } else {
        (&total - &sum_lower) / (&sum_upper - &sum_lower)
    };
    let rest = Rational::one() - &kappa;
    let tau = upper
        .iter()
        .zip(&lower)
        .map(|(hi, lo)| &kappa * hi + &rest * lo)
        .collect();
    Ok(TauBundle {
        upper,
        lower,
        kappa,
        tau,
    })
}

/// The midpoint of the row-optimal and column-optimal core vertices.
pub fn tau_value_assignment(g: &AssignmentGame) -> Result<Vec<Rational>> {
    Ok(side_optimal_vertices(g)?.midpoint())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::assignment::SurplusMatrix;
    use crate::game::fixtures::{convex_three, pair, veto_example};
    use crate::game::{compose, ExplicitGame};
    use crate::rational::{int, q};
    use alloc::boxed::Box;
    use alloc::vec;
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&a| int(a)).collect()
    }

    fn example3() -> AssignmentGame {
        AssignmentGame::new(SurplusMatrix::from_ints(&[&[6, 3], &[5, 0]])).unwrap()
    }

    #[test]
    fn veto_example_tau() {
        let b = tau_value(&veto_example()).unwrap();
        assert_eq!(b.upper, ints(&[8, 3, 4, 5]));
        assert_eq!(b.lower, ints(&[0, 0, 0, 0]));
        assert_eq!(b.kappa, q(2, 5));
        assert_eq!(b.tau, vec![q(16, 5), q(6, 5), q(8, 5), q(10, 5)]);
    }

    #[test]
    fn assignment_example_tau() {
        let g = example3();
        let b = tau_value(&g).unwrap();
        assert_eq!(b.upper, ints(&[3, 2, 5, 2]));
        assert_eq!(b.lower, ints(&[1, 0, 3, 0]));
        assert_eq!(b.kappa, q(1, 2));
        assert_eq!(b.tau, ints(&[2, 1, 4, 1]));
        assert_eq!(tau_value_assignment(&g).unwrap(), ints(&[2, 1, 4, 1]));
        let one = AssignmentGame::new(SurplusMatrix::from_ints(&[&[5]])).unwrap();
        assert_eq!(tau_value_assignment(&one).unwrap(), vec![q(5, 2), q(5, 2)]);
    }

    #[test]
    fn composite_tau() {
        let g = compose(vec![
            Box::new(convex_three()) as Box<dyn Game + Send + Sync>,
            Box::new(pair(3)),
        ])
        .unwrap();
        let b = tau_value(&g).unwrap();
        assert_eq!(b.lower, ints(&[0, 0, 0, 0, 0]));
        assert_eq!(
            b.tau,
            vec![q(16, 15), q(24, 15), q(32, 15), q(24, 15), q(24, 15)]
        );
        let left = tau_value(&convex_three()).unwrap().tau;
        assert_eq!(left, vec![q(10, 9), q(15, 9), q(20, 9)]);
        let mut joined = left;
        joined.extend(tau_value(&pair(3)).unwrap().tau);
        assert_ne!(b.tau, joined);
    }

    #[test]
    fn zero_and_degenerate_games() {
        let zero = ExplicitGame::new(3).unwrap();
        assert_eq!(upper_vector(&zero), ints(&[0, 0, 0]));
        let b = tau_value(&zero).unwrap();
        assert_eq!(b.kappa, int(0));
        assert_eq!(b.tau, ints(&[0, 0, 0]));
    }

    #[test]
    fn unbalanced_is_refused() {
        let g = ExplicitGame::from_values(
            2,
            [
                (Coalition::singleton(0), int(2)),
                (Coalition::singleton(1), int(2)),
                (Coalition::full(2), int(1)),
            ],
        )
        .unwrap();
        assert_eq!(tau_value(&g), Err(Error::Unbalanced));
    }

    fn matrix() -> impl Strategy<Value = SurplusMatrix> {
        (1usize..=3, 1usize..=3).prop_flat_map(|(r, c)| {
            proptest::collection::vec(prop_oneof![2 => Just(0i64), 5 => 1i64..9], r * c).prop_map(
                move |vals| {
                    let rows = (0..r)
                        .map(|i| (0..c).map(|j| Rational::new(vals[i * c + j], 2)).collect())
                        .collect();
                    SurplusMatrix::new(rows).unwrap()
                },
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]
        #[test]
        fn assignment_tau_is_the_vertex_midpoint(m in matrix()) {
            let g = AssignmentGame::new(m).unwrap();
            let b = tau_value(&g).unwrap();
            prop_assert_eq!(&b.tau, &tau_value_assignment(&g).unwrap());
            let total: Rational = b.tau.iter().sum();
            prop_assert_eq!(total, g.worth(grand_coalition(&g)));
        }

        #[test]
        fn core_points_lie_between_the_vectors(m in matrix(), seed in 0u64..500) {
            let g = AssignmentGame::new(m).unwrap();
            let b = tau_value(&g).unwrap();
            let x = crate::assignment::sample_core_point(&g, seed).unwrap();
            for (i, xi) in x.iter().enumerate() {
                prop_assert!(&b.lower[i] <= xi && xi <= &b.upper[i]);
                prop_assert!(b.lower[i] <= b.tau[i] && b.tau[i] <= b.upper[i]);
            }
        }
    }
}
