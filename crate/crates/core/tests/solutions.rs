use pmas_core::assignment::{core_contains, sample_core_point};
use pmas_core::game::{compose, grand_coalition};
use pmas_core::solutions::{
    kohlberg_check, nucleolus, nucleolus_over, shapley_value, tau_value, tau_value_assignment,
};
use pmas_core::{AssignmentGame, Coalition, Game, Rational, SurplusMatrix};
use proptest::prelude::*;

fn matrix(max_side: usize) -> impl Strategy<Value = SurplusMatrix> {
    (1..=max_side, 1..=max_side).prop_flat_map(|(r, c)| {
        proptest::collection::vec(prop_oneof![1 => Just(0i64), 3 => 1i64..10], r * c).prop_map(
            move |vals| {
                let rows: Vec<Vec<Rational>> = (0..r)
                    .map(|i| {
                        (0..c)
                            .map(|j| Rational::from_integer(vals[i * c + j]))
                            .collect()
                    })
                    .collect();
                SurplusMatrix::new(rows).unwrap()
            },
        )
    })
}

fn diagonal() -> impl Strategy<Value = SurplusMatrix> {
    proptest::collection::vec(1i64..12, 1..=4).prop_map(|d| {
        let mut m = SurplusMatrix::zeros(d.len(), d.len());
        for (k, v) in d.into_iter().enumerate() {
            m.set(k, k, Rational::from_integer(v)).unwrap();
        }
        m
    })
}

fn mix(a: &[Rational], b: &[Rational], mu: &Rational) -> Vec<Rational> {
    let rest = Rational::one() - mu;
    a.iter().zip(b).map(|(x, y)| &rest * x + mu * y).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn moving_off_the_nucleolus_breaks_the_certificate(m in matrix(3), seed in 0u64..1000) {
        let g = AssignmentGame::new(m).unwrap();
        let eta = nucleolus(&g).unwrap();
        prop_assert!(kohlberg_check(&g, &eta).unwrap().is_nucleolus());
        for k in 0..10u64 {
            let p = sample_core_point(&g, seed * 10 + k).unwrap();
            if p == eta {
                continue;
            }
            let y = mix(&eta, &p, &Rational::new(1 + k as i64, 11));
            prop_assert!(core_contains(&g, &y).unwrap().is_yes());
            prop_assert!(!kohlberg_check(&g, &y).unwrap().is_nucleolus());
        }
    }

    #[test]
    fn diagonal_markets_agree_on_every_solution(m in diagonal()) {
        let g = AssignmentGame::new(m).unwrap();
        let eta = nucleolus(&g).unwrap();
        prop_assert_eq!(&shapley_value(&g).unwrap(), &eta);
        prop_assert_eq!(&tau_value(&g).unwrap().tau, &eta);
        prop_assert_eq!(&tau_value_assignment(&g).unwrap(), &eta);
    }

    #[test]
    fn nucleolus_factors_over_components(a in matrix(2), b in matrix(2)) {
        let ga = AssignmentGame::new(a).unwrap();
        let gb = AssignmentGame::new(b).unwrap();
        let mut joined = nucleolus(&ga).unwrap();
        joined.extend(nucleolus(&gb).unwrap());
        let composite = compose(vec![Box::new(ga), Box::new(gb)]).unwrap();
        prop_assert_eq!(nucleolus(&composite).unwrap(), joined);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn essential_coalitions_suffice(m in matrix(4)) {
        let g = AssignmentGame::new(m).unwrap();
        let n = g.players();
        let all = grand_coalition(&g);
        let proper: Vec<Coalition> = (1..all.bits()).map(Coalition).collect();
        prop_assert_eq!(nucleolus_over(&g, &proper).unwrap(), nucleolus(&g).unwrap());
        prop_assert!(n <= 8);
    }
}
