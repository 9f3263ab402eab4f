//! Cross-checking suites run by `verify-paper` and the acceptance target.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use pmas_core::assignment::{core_contains, side_optimal_vertices};
use pmas_core::game::{coalition_sum, compose, grand_coalition};
use pmas_core::lp::linalg;
use pmas_core::pmas::{
    build_pmas, build_veto_pmas, classify_blocks, classify_blocks_mutant, pmas_exists_lp,
    pmas_extend_lp, verify_pmas, Witness,
};
use pmas_core::solutions::{kohlberg_check, nucleolus, tau_value, tau_value_assignment};
use pmas_core::{AssignmentGame, Coalition, ExplicitGame, Game, Rational, SurplusMatrix};
use rand::Rng;

use crate::generate;
use crate::output::vector;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub name: &'static str,
    pub checked: usize,
    pub failure: Option<String>,
}

impl Outcome {
    fn from(name: &'static str, r: Result<usize, String>) -> Self {
        match r {
            Ok(checked) => Outcome {
                name,
                checked,
                failure: None,
            },
            Err(e) => Outcome {
                name,
                checked: 0,
                failure: Some(e),
            },
        }
    }

    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Options {
    pub seed: u64,
    pub instances: usize,
    pub mutant: bool,
}

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn core_err(e: pmas_core::Error) -> String {
    e.to_string()
}

fn r(num: i64, den: i64) -> Rational {
    Rational::new(num, den)
}

fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&a| Rational::from_integer(a)).collect()
}

fn coal(members: &[usize]) -> Coalition {
    Coalition::from_members(members.iter().map(|m| m - 1))
}

pub fn dump(m: &SurplusMatrix) -> String {
    let mut out = String::from("[");
    for i in 0..m.rows() {
        if i > 0 {
            out.push(',');
        }
        out.push_str(&vector(m.row(i)));
    }
    out.push(']');
    out
}

/// The four-player game with player 1 as veto player.
pub fn veto_game() -> ExplicitGame {
    ExplicitGame::from_values(
        4,
        [
            (coal(&[1, 2]), Rational::from_integer(2)),
            (coal(&[1, 3]), Rational::from_integer(3)),
            (coal(&[1, 2, 3]), Rational::from_integer(3)),
            (coal(&[1, 4]), Rational::from_integer(4)),
            (coal(&[1, 2, 4]), Rational::from_integer(4)),
            (coal(&[1, 3, 4]), Rational::from_integer(5)),
            (coal(&[1, 2, 3, 4]), Rational::from_integer(8)),
        ],
    )
    .unwrap()
}

pub fn convex_three() -> ExplicitGame {
    ExplicitGame::from_values(
        3,
        [
            (coal(&[1, 2]), Rational::from_integer(1)),
            (coal(&[1, 3]), Rational::from_integer(2)),
            (coal(&[2, 3]), Rational::from_integer(3)),
            (coal(&[1, 2, 3]), Rational::from_integer(5)),
        ],
    )
    .unwrap()
}

pub fn pair_game(v: i64) -> ExplicitGame {
    ExplicitGame::from_values(2, [(Coalition::full(2), Rational::from_integer(v))]).unwrap()
}

pub fn example_market() -> AssignmentGame {
    AssignmentGame::new(SurplusMatrix::from_ints(&[&[6, 3], &[5, 0]])).unwrap()
}

pub fn veto_extension() -> Result<usize, String> {
    let g = veto_game();
    let ok = pmas_extend_lp(&g, &ints(&[8, 0, 0, 0])).map_err(core_err)?;
    let scheme = ok.scheme().ok_or("(8,0,0,0) should extend to a scheme")?;
    ensure!(
        verify_pmas(&g, scheme).map_err(core_err)?.is_valid(),
        "the oracle's scheme for (8,0,0,0) does not verify"
    );
    let no = pmas_extend_lp(&g, &ints(&[1, 2, 2, 3])).map_err(core_err)?;
    ensure!(!no.is_feasible(), "(1,2,2,3) should not extend");
    let veto = build_veto_pmas(&g, 0).map_err(core_err)?;
    let check = verify_pmas(&g, &veto).map_err(core_err)?;
    ensure!(check.is_valid(), "veto scheme rejected: {check:?}");
    Ok(3)
}

pub fn veto_solutions() -> Result<usize, String> {
    let g = veto_game();
    let b = tau_value(&g).map_err(core_err)?;
    ensure!(b.kappa == r(2, 5), "kappa {} != 2/5", b.kappa);
    let tau = vec![r(16, 5), r(6, 5), r(8, 5), r(10, 5)];
    ensure!(b.tau == tau, "tau {} != {}", vector(&b.tau), vector(&tau));
    let eta = nucleolus(&g).map_err(core_err)?;
    let expected = vec![r(21, 6), r(8, 6), r(8, 6), r(11, 6)];
    ensure!(
        eta == expected,
        "nucleolus {} != {}",
        vector(&eta),
        vector(&expected)
    );
    let ct = kohlberg_check(&g, &tau).map_err(core_err)?;
    let fail = ct.first_failure().ok_or("tau passes the certificate")?;
    ensure!(
        fail.threshold == r(6, 5),
        "tau fails at t={} instead of 6/5",
        fail.threshold
    );
    let ce = kohlberg_check(&g, &eta).map_err(core_err)?;
    ensure!(ce.is_nucleolus(), "the nucleolus fails its certificate");
    Ok(5)
}

pub fn market_example() -> Result<usize, String> {
    let g = example_market();
    let b = tau_value(&g).map_err(core_err)?;
    ensure!(b.upper == ints(&[3, 2, 5, 2]), "upper {}", vector(&b.upper));
    ensure!(b.lower == ints(&[1, 0, 3, 0]), "lower {}", vector(&b.lower));
    ensure!(b.kappa == r(1, 2), "kappa {}", b.kappa);
    ensure!(b.tau == ints(&[2, 1, 4, 1]), "tau {}", vector(&b.tau));
    let eta = nucleolus(&g).map_err(core_err)?;
    let expected = vec![r(7, 3), r(2, 3), r(13, 3), r(2, 3)];
    ensure!(eta == expected, "nucleolus {}", vector(&eta));
    let d = classify_blocks(g.matrix());
    match d.witness() {
        Some(
            w @ Witness::GammaViolation {
                corner_value,
                row_value,
                col_value,
                ..
            },
        ) => ensure!(
            (corner_value, row_value, col_value) == (&r(6, 1), &r(3, 1), &r(5, 1)),
            "unexpected witness {w}"
        ),
        other => return Err(format!("expected a corner violation, got {other:?}")),
    }
    ensure!(
        !pmas_exists_lp(&g).map_err(core_err)?.is_feasible(),
        "the LP finds a scheme for [[6,3],[5,0]]"
    );
    Ok(6)
}

pub fn composite_example() -> Result<usize, String> {
    let parts = || -> Vec<Box<dyn Game + Send + Sync>> {
        vec![Box::new(convex_three()), Box::new(pair_game(3))]
    };
    let g = compose(parts()).map_err(core_err)?;
    let tau = tau_value(&g).map_err(core_err)?.tau;
    let expected = vec![r(16, 15), r(24, 15), r(32, 15), r(24, 15), r(24, 15)];
    ensure!(tau == expected, "tau {}", vector(&tau));
    let mut joined = tau_value(&convex_three()).map_err(core_err)?.tau;
    joined.extend(tau_value(&pair_game(3)).map_err(core_err)?.tau);
    let stated = vec![r(10, 9), r(15, 9), r(20, 9), r(3, 2), r(3, 2)];
    ensure!(joined == stated, "component taus {}", vector(&joined));
    ensure!(tau != joined, "tau unexpectedly factors");
    let eta = nucleolus(&g).map_err(core_err)?;
    let mut parts_eta = nucleolus(&convex_three()).map_err(core_err)?;
    parts_eta.extend(nucleolus(&pair_game(3)).map_err(core_err)?);
    let expected = vec![r(1, 1), r(3, 2), r(5, 2), r(3, 2), r(3, 2)];
    ensure!(eta == expected, "nucleolus {}", vector(&eta));
    ensure!(
        eta == parts_eta,
        "nucleolus does not factor: {}",
        vector(&parts_eta)
    );
    Ok(4)
}

fn all_matrices(
    rows: usize,
    cols: usize,
    values: &[i64],
) -> impl Iterator<Item = SurplusMatrix> + '_ {
    let cells = rows * cols;
    let total = values.len().pow(cells as u32);
    (0..total).map(move |mut code| {
        let mut m = SurplusMatrix::zeros(rows, cols);
        for k in 0..cells {
            let v = values[code % values.len()];
            code /= values.len();
            m.set(k / cols, k % cols, Rational::from_integer(v))
                .unwrap();
        }
        m
    })
}

fn agree(m: &SurplusMatrix, mutant: bool) -> Result<(), String> {
    let claimed = if mutant {
        classify_blocks_mutant(m)
    } else {
        classify_blocks(m)
    }
    .is_admissible();
    let g = AssignmentGame::new(m.clone()).map_err(core_err)?;
    let lp = pmas_exists_lp(&g).map_err(core_err)?.is_feasible();
    ensure!(
        claimed == lp,
        "matrix {}: classifier says {}, LP says {}",
        dump(m),
        if claimed {
            "admissible"
        } else {
            "not admissible"
        },
        if lp { "feasible" } else { "infeasible" }
    );
    Ok(())
}

/// Every 2x2 and 2x3 matrix over `{0,1,2,3,5}`.
pub fn classifier_matches_lp_exhaustive(mutant: bool) -> Result<usize, String> {
    let values = [0, 1, 2, 3, 5];
    let mut n = 0;
    for (rows, cols) in [(2, 2), (2, 3)] {
        for m in all_matrices(rows, cols, &values) {
            agree(&m, mutant)?;
            n += 1;
        }
    }
    Ok(n)
}

/// Random matrices up to 4x4 with at most 8 players, a third each arbitrary,
/// admissible by construction and violating by construction.
pub fn classifier_matches_lp_random(
    seed: u64,
    count: usize,
    mutant: bool,
) -> Result<usize, String> {
    let mut rng = generate::rng(seed);
    for k in 0..count {
        let m = match k % 3 {
            0 => generate::random_matrix(&mut rng, 4, 8),
            1 => generate::admissible_matrix(&mut rng, 8, true),
            _ => generate::violating_matrix(&mut rng, 8),
        };
        agree(&m, mutant)?;
    }
    Ok(count)
}

/// Null rows or columns are kept only when both solutions pay them nothing.
pub fn coincidence_on_admissible(seed: u64, count: usize) -> Result<usize, String> {
    let mut rng = generate::rng(seed);
    for _ in 0..count {
        let mut m = generate::admissible_matrix(&mut rng, 10, true);
        let mut g = AssignmentGame::new(m.clone()).map_err(core_err)?;
        let mut tau = tau_value(&g).map_err(core_err)?.tau;
        let mut eta = nucleolus(&g).map_err(core_err)?;
        let nulls = pmas_core::game::null_players(&g);
        if nulls
            .members()
            .any(|i| !tau[i].is_zero() || !eta[i].is_zero())
        {
            m = generate::admissible_matrix(&mut rng, 10, false);
            g = AssignmentGame::new(m.clone()).map_err(core_err)?;
            tau = tau_value(&g).map_err(core_err)?.tau;
            eta = nucleolus(&g).map_err(core_err)?;
        }
        let mid = tau_value_assignment(&g).map_err(core_err)?;
        ensure!(
            eta == tau && tau == mid,
            "matrix {}: nucleolus {}, tau {}, vertex midpoint {}",
            dump(&m),
            vector(&eta),
            vector(&tau),
            vector(&mid)
        );
    }
    Ok(count)
}

pub fn midpoint_on_arbitrary(seed: u64, count: usize) -> Result<usize, String> {
    let mut rng = generate::rng(seed);
    for _ in 0..count {
        let m = generate::random_matrix(&mut rng, 4, 8);
        let g = AssignmentGame::new(m.clone()).map_err(core_err)?;
        let tau = tau_value(&g).map_err(core_err)?.tau;
        let mid = side_optimal_vertices(&g).map_err(core_err)?.midpoint();
        ensure!(
            tau == mid,
            "matrix {}: tau {} but midpoint {}",
            dump(&m),
            vector(&tau),
            vector(&mid)
        );
    }
    Ok(count)
}

/// Builds and verifies a scheme for both side-optimal vertices and their midpoint.
pub fn every_core_point_extends(seed: u64, count: usize) -> Result<usize, String> {
    let mut rng = generate::rng(seed);
    for _ in 0..count {
        let m = generate::admissible_matrix(&mut rng, 10, true);
        let g = AssignmentGame::new(m.clone()).map_err(core_err)?;
        let side = side_optimal_vertices(&g).map_err(core_err)?;
        for x in [
            side.row_optimal.clone(),
            side.column_optimal.clone(),
            side.midpoint(),
        ] {
            let s = build_pmas(&g, &x)
                .map_err(|e| format!("matrix {}, point {}: {e}", dump(&m), vector(&x)))?;
            let check = verify_pmas(&g, &s).map_err(core_err)?;
            ensure!(
                check.is_valid(),
                "matrix {}, point {}: {check:?}",
                dump(&m),
                vector(&x)
            );
            ensure!(
                s.grand() == Some(x.as_slice()),
                "matrix {}: scheme does not extend {}",
                dump(&m),
                vector(&x)
            );
        }
    }
    Ok(count * 3)
}

fn corner_matrix(a: &Rational, b: &Rational, c: &Rational) -> SurplusMatrix {
    SurplusMatrix::new(vec![
        vec![a.clone(), b.clone()],
        vec![c.clone(), Rational::zero()],
    ])
    .unwrap()
}

/// `[[a,b],[c,0]]`: no scheme when `b + c > a`, and the fixed table when `a >= b + c`.
pub fn corner_dichotomy(seed: u64, count: usize) -> Result<usize, String> {
    let mut rng = generate::rng(seed);
    for _ in 0..count {
        let (a, b, c) = generate::corner_pair(&mut rng, false);
        let m = corner_matrix(&a, &b, &c);
        let g = AssignmentGame::new(m.clone()).map_err(core_err)?;
        ensure!(
            !pmas_exists_lp(&g).map_err(core_err)?.is_feasible(),
            "matrix {} has a scheme",
            dump(&m)
        );
    }
    for _ in 0..count {
        let (a, b, c) = generate::corner_pair(&mut rng, true);
        let m = corner_matrix(&a, &b, &c);
        let g = AssignmentGame::new(m.clone()).map_err(core_err)?;
        ensure!(
            pmas_exists_lp(&g).map_err(core_err)?.is_feasible(),
            "matrix {} has no scheme",
            dump(&m)
        );
        let side = side_optimal_vertices(&g).map_err(core_err)?;
        let lambda = Rational::new(rng.random_range(0..=4), 4);
        let x = side.combination(&lambda);
        let s = build_pmas(&g, &x).map_err(|e| format!("matrix {}: {e}", dump(&m)))?;
        ensure!(
            verify_pmas(&g, &s).map_err(core_err)?.is_valid(),
            "matrix {}: invalid scheme",
            dump(&m)
        );
        let zero = Rational::zero();
        let table = [
            (coal(&[1, 3]), vec![x[0].clone(), x[2].clone()]),
            (coal(&[1, 4]), vec![b.clone(), zero.clone()]),
            (coal(&[2, 3]), vec![zero.clone(), c.clone()]),
            (
                coal(&[1, 2, 3, 4]),
                vec![x[0].clone(), zero.clone(), x[2].clone(), zero.clone()],
            ),
        ];
        for (coalition, expected) in table {
            let got = s.get(coalition).unwrap();
            ensure!(
                got == expected.as_slice(),
                "matrix {}: {coalition} gets {} instead of {}",
                dump(&m),
                vector(got),
                vector(&expected)
            );
        }
        for (coalition, payoff) in s.ordered() {
            for player in [1, 3] {
                if let Some(k) = coalition.position(player) {
                    ensure!(
                        payoff[k].is_zero(),
                        "matrix {}: player {} is paid {} in {coalition}",
                        dump(&m),
                        player + 1,
                        payoff[k]
                    );
                }
            }
        }
    }
    Ok(2 * count)
}

/// Incremental row echelon form for the brute-force search.
#[derive(Clone)]
struct Echelon(Vec<(usize, Vec<Rational>)>);

impl Echelon {
    fn push(&mut self, row: &[Rational]) -> bool {
        let mut v = row.to_vec();
        for (p, r) in &self.0 {
            if v[*p].is_zero() {
                continue;
            }
            let f = &v[*p] / &r[*p];
            for (a, b) in v.iter_mut().zip(r) {
                *a -= &f * b;
            }
        }
        match v.iter().position(|a| !a.is_zero()) {
            Some(p) => {
                self.0.push((p, v));
                true
            }
            None => false,
        }
    }
}

/// The core point whose ascending satisfaction vector is lexicographically
/// largest, found by enumerating every vertex of the arrangement of
/// equal-satisfaction hyperplanes over the essential coalitions.
pub fn brute_force_nucleolus(g: &(impl Game + ?Sized)) -> Option<Vec<Rational>> {
    let n = g.players();
    let all = grand_coalition(g);
    let total = g.worth(all);
    if n == 1 {
        return Some(vec![total]);
    }
    let coalitions: Vec<Coalition> = g
        .essential_coalitions()
        .into_iter()
        .filter(|&s| s != all)
        .collect();
    let indicator =
        |s: Coalition| -> Vec<i64> { (0..n).map(|i| i64::from(s.contains(i))).collect() };
    let mut planes: BTreeSet<(Vec<i64>, Rational)> = BTreeSet::new();
    for (a, &s) in coalitions.iter().enumerate() {
        for &t in &coalitions[a + 1..] {
            let (is, it) = (indicator(s), indicator(t));
            let mut row: Vec<i64> = is.iter().zip(&it).map(|(x, y)| x - y).collect();
            let mut rhs = g.worth(s) - g.worth(t);
            if row.iter().find(|&&v| v != 0).is_some_and(|&v| v < 0) {
                row.iter_mut().for_each(|v| *v = -*v);
                rhs = -rhs;
            }
            planes.insert((row, rhs));
        }
    }
    let planes: Vec<(Vec<Rational>, Rational)> = planes
        .into_iter()
        .map(|(row, rhs)| (row.into_iter().map(Rational::from_integer).collect(), rhs))
        .collect();

    let ones = vec![Rational::one(); n];
    let mut base = Echelon(Vec::new());
    base.push(&ones);
    let mut best: Option<(Vec<Rational>, Vec<Rational>)> = None;
    let mut chosen = Vec::new();
    search(
        g,
        &coalitions,
        &planes,
        &ones,
        &total,
        0,
        &base,
        &mut chosen,
        &mut best,
    );
    best.map(|(x, _)| x)
}

#[allow(clippy::too_many_arguments)]
fn search(
    g: &(impl Game + ?Sized),
    coalitions: &[Coalition],
    planes: &[(Vec<Rational>, Rational)],
    ones: &[Rational],
    total: &Rational,
    from: usize,
    echelon: &Echelon,
    chosen: &mut Vec<usize>,
    best: &mut Option<(Vec<Rational>, Vec<Rational>)>,
) {
    let n = ones.len();
    if chosen.len() == n - 1 {
        let mut a = vec![ones.to_vec()];
        let mut b = vec![total.clone()];
        for &k in chosen.iter() {
            a.push(planes[k].0.clone());
            b.push(planes[k].1.clone());
        }
        let Some(x) = linalg::solve(a, b) else { return };
        if !core_contains(g, &x).map(|m| m.is_yes()).unwrap_or(false) {
            return;
        }
        let mut sats: Vec<Rational> = coalitions
            .iter()
            .map(|&s| coalition_sum(&x, s) - g.worth(s))
            .collect();
        sats.sort();
        if best.as_ref().is_none_or(|(_, b)| sats > *b) {
            *best = Some((x, sats));
        }
        return;
    }
    let needed = n - 1 - chosen.len();
    for k in from..planes.len() {
        if planes.len() - k < needed {
            break;
        }
        let mut next = echelon.clone();
        if !next.push(&planes[k].0) {
            continue;
        }
        chosen.push(k);
        search(
            g,
            coalitions,
            planes,
            ones,
            total,
            k + 1,
            &next,
            chosen,
            best,
        );
        chosen.pop();
    }
}

/// Nucleolus outputs pass the certificate and match the brute-force search on at most 6 players.
pub fn nucleolus_certified(seed: u64, count: usize) -> Result<usize, String> {
    let mut rng = generate::rng(seed);
    let mut k = 0;
    while k < count {
        let m = generate::random_matrix(&mut rng, 3, 6);
        let g = AssignmentGame::new(m.clone()).map_err(core_err)?;
        // keep the hyperplane enumeration small
        if g.essential_coalitions().len() > 10 {
            continue;
        }
        let eta = nucleolus(&g).map_err(core_err)?;
        let cert = kohlberg_check(&g, &eta).map_err(core_err)?;
        ensure!(
            cert.is_nucleolus(),
            "matrix {}: nucleolus {} fails the certificate",
            dump(&m),
            vector(&eta)
        );
        let brute = brute_force_nucleolus(&g)
            .ok_or_else(|| format!("matrix {}: brute force found nothing", dump(&m)))?;
        ensure!(
            brute == eta,
            "matrix {}: nucleolus {} but brute force {}",
            dump(&m),
            vector(&eta),
            vector(&brute)
        );
        k += 1;
    }
    Ok(count)
}

pub fn positive_squares_fail(seed: u64, count: usize) -> Result<usize, String> {
    let mut rng = generate::rng(seed);
    for _ in 0..count {
        let m = generate::positive_square(&mut rng);
        let g = AssignmentGame::new(m.clone()).map_err(core_err)?;
        ensure!(
            !classify_blocks(&m).is_admissible(),
            "matrix {} classified admissible",
            dump(&m)
        );
        ensure!(
            !pmas_exists_lp(&g).map_err(core_err)?.is_feasible(),
            "matrix {} has a scheme",
            dump(&m)
        );
    }
    Ok(count)
}

/// The golden examples always; the random suites when `instances > 0`.
pub fn run(opts: Options) -> Vec<Outcome> {
    let seed = |k: u64| {
        opts.seed
            .wrapping_mul(0x9e37_79b9_7f4a_7c15)
            .wrapping_add(k)
    };
    let n = opts.instances;
    let mut out = vec![
        Outcome::from("veto game extensions", veto_extension()),
        Outcome::from("veto game tau and nucleolus", veto_solutions()),
        Outcome::from("two-by-two market", market_example()),
        Outcome::from("composite game", composite_example()),
    ];
    if n == 0 {
        return out;
    }
    out.push(Outcome::from(
        "classifier vs LP, exhaustive",
        classifier_matches_lp_exhaustive(opts.mutant),
    ));
    out.push(Outcome::from(
        "classifier vs LP, random",
        classifier_matches_lp_random(seed(1), n, opts.mutant),
    ));
    out.push(Outcome::from(
        "nucleolus = tau on admissible games",
        coincidence_on_admissible(seed(2), n),
    ));
    out.push(Outcome::from(
        "tau = vertex midpoint",
        midpoint_on_arbitrary(seed(3), n),
    ));
    out.push(Outcome::from(
        "core points extend",
        every_core_point_extends(seed(4), n),
    ));
    out.push(Outcome::from(
        "corner dichotomy",
        corner_dichotomy(seed(5), n),
    ));
    out.push(Outcome::from(
        "nucleolus certified",
        nucleolus_certified(seed(6), n),
    ));
    out.push(Outcome::from(
        "positive 2x2 blocks",
        positive_squares_fail(seed(7), n),
    ));
    out
}

pub fn render(outcomes: &[Outcome]) -> String {
    let mut s = String::new();
    for o in outcomes {
        match &o.failure {
            None => writeln!(s, "pass  {} ({} checked)", o.name, o.checked).unwrap(),
            Some(f) => writeln!(s, "FAIL  {}: {f}", o.name).unwrap(),
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn brute_force_matches_the_known_market() {
        let eta = brute_force_nucleolus(&example_market()).unwrap();
        assert_eq!(eta, vec![r(7, 3), r(2, 3), r(13, 3), r(2, 3)]);
        let eta = brute_force_nucleolus(&veto_game()).unwrap();
        assert_eq!(eta, vec![r(21, 6), r(8, 6), r(8, 6), r(11, 6)]);
    }

    #[test]
    fn goldens_pass() {
        for o in run(Options {
            seed: 0,
            instances: 0,
            mutant: false,
        }) {
            assert!(o.passed(), "{o:?}");
        }
    }

    #[test]
    fn mutant_is_caught_on_the_small_sweep() {
        let e = classifier_matches_lp_exhaustive(true).unwrap_err();
        assert!(e.starts_with("matrix [["), "{e}");
    }
}
