//! Bounded exact checks of the identities, each producing a [`CheckReport`].

mod fock_checks;
mod identities;
mod report;

use std::time::Instant;

pub use fock_checks::{
    check_commutation, check_completeness, check_fock_vs_determinant, check_orthonormality, check_straighten,
};
pub use identities::{
    check_branching_o, check_branching_odd_sp, check_branching_sp, check_cauchy, check_gt_sum, check_newton,
    check_reductions, check_transition_odd, check_witnesses, CauchyFamily,
};
pub use report::{CheckReport, Comparator, Failure, Grid};

/// Suite names accepted by [`run_suite`].
pub const SUITES: &[&str] = &[
    "commutation",
    "orthonormality",
    "fock",
    "completeness",
    "straighten",
    "witnesses",
    "branching",
    "cauchy",
    "transition",
    "gt",
    "reductions",
    "newton",
    "all",
];

fn timed(f: impl FnOnce() -> CheckReport) -> CheckReport {
    let start = Instant::now();
    let mut r = f();
    r.seconds = start.elapsed().as_secs_f64();
    r
}

/// Runs a named suite; `None` for an unknown name.
pub fn run_suite(name: &str, grid: &Grid) -> Option<Vec<CheckReport>> {
    let g = grid;
    let reports = match name {
        "commutation" => vec![timed(|| check_commutation(g))],
        "orthonormality" => vec![timed(|| check_orthonormality(g))],
        "fock" => vec![timed(|| check_fock_vs_determinant(g))],
        "completeness" => vec![timed(|| check_completeness(g))],
        "straighten" => vec![timed(|| check_straighten(g))],
        "witnesses" => vec![timed(|| check_witnesses(g))],
        "branching" => vec![
            timed(|| check_branching_sp(g)),
            timed(|| check_branching_o(g)),
            timed(|| check_branching_odd_sp(g)),
        ],
        "cauchy" => CauchyFamily::ALL.iter().map(|&f| timed(|| check_cauchy(f, g))).collect(),
        "transition" => vec![timed(|| check_transition_odd(g))],
        "gt" => vec![timed(|| check_gt_sum(g))],
        "reductions" => vec![timed(|| check_reductions(g))],
        "newton" => vec![timed(|| check_newton(g))],
        "all" => SUITES[..SUITES.len() - 1].iter().flat_map(|s| run_suite(s, g).expect("known suite")).collect(),
        _ => return None,
    };
    Some(reports)
}
