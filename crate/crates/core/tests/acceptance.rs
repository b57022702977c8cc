//! Acceptance criteria 1-10: one line each with the verdict, the work done
//! and the wall-clock time against its budget.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use unichar_core::verify::{run_suite, CheckReport, Grid};

struct Criterion {
    id: u8,
    title: &'static str,
    suite: &'static str,
    grid: Grid,
    budget: Duration,
    extra: fn(&[CheckReport]) -> Result<Option<String>, String>,
}

fn none(_: &[CheckReport]) -> Result<Option<String>, String> {
    Ok(None)
}

fn cauchy_variant_reported(reports: &[CheckReport]) -> Result<Option<String>, String> {
    let o = reports.iter().find(|r| r.check_name == "cauchy_o_universal").ok_or("no orthogonal Cauchy report")?;
    let note = o.notes.iter().find(|n| n.contains("k ≤ l") && n.contains("k < l")).ok_or("index variant not reported")?;
    Ok(Some(note.clone()))
}

fn criteria() -> Vec<Criterion> {
    let d = Grid::default();
    let secs = Duration::from_secs;
    vec![
        Criterion {
            id: 1,
            title: "commutation relations, degree ≤ 6, |i|,|j| ≤ 6",
            suite: "commutation",
            grid: Grid { degree_cap: 6, ..d.clone() },
            budget: secs(60),
            extra: none,
        },
        Criterion {
            id: 2,
            title: "orthonormality, weight ≤ 6, length ≤ 4",
            suite: "orthonormality",
            grid: Grid { max_weight: 6, max_len: 4, ..d.clone() },
            budget: secs(60),
            extra: none,
        },
        Criterion {
            id: 3,
            title: "Fock matrix elements = skew determinants, |α| ≤ 6, n,m ≤ 2, l+n+m ≤ 6",
            suite: "fock",
            grid: Grid { n_range: [0, 2], m_range: [0, 2], max_weight: 6, fock_max_dim: 6, ..d.clone() },
            budget: secs(300),
            extra: none,
        },
        Criterion {
            id: 4,
            title: "bialternant witnesses, |λ| ≤ 6",
            suite: "witnesses",
            grid: Grid { n_range: [0, 3], odd_n_max: 2, max_weight: 6, ..d.clone() },
            budget: secs(120),
            extra: none,
        },
        Criterion {
            id: 5,
            title: "branching, n ≤ 3, m ≤ 2, |λ| ≤ 6, all splits",
            suite: "branching",
            grid: Grid { n_range: [0, 3], m_range: [0, 2], max_weight: 6, ..d.clone() },
            budget: secs(300),
            extra: none,
        },
        Criterion {
            id: 6,
            title: "Cauchy identities to degree 5, n ≤ 2, m ≤ 1",
            suite: "cauchy",
            grid: Grid { cauchy_n_max: 2, cauchy_m_max: 1, cauchy_degree: 5, ..d.clone() },
            budget: secs(300),
            extra: cauchy_variant_reported,
        },
        Criterion {
            id: 7,
            title: "Gelfand-Tsetlin sum and chain counts, n ≤ 3, |λ| ≤ 6",
            suite: "gt",
            grid: Grid { n_range: [0, 3], max_weight: 6, ..d.clone() },
            budget: secs(60),
            extra: none,
        },
        Criterion {
            id: 8,
            title: "transition formulas, n ≤ 2, |λ| ≤ 5",
            suite: "transition",
            grid: Grid { odd_n_max: 2, transition_max_weight: 5, ..d.clone() },
            budget: secs(60),
            extra: none,
        },
        Criterion {
            id: 9,
            title: "reductions, n ≤ 3, m ≤ 2, |λ| ≤ 6; z = ±1 witnesses n ≤ 2",
            suite: "reductions",
            grid: Grid { n_range: [0, 3], m_range: [0, 2], max_weight: 6, odd_n_max: 2, ..d.clone() },
            budget: secs(60),
            extra: none,
        },
        Criterion {
            id: 10,
            title: "Newton relation, n ≤ 3, m ≤ 2, N ≤ 8",
            suite: "newton",
            grid: Grid { n_range: [0, 3], m_range: [0, 2], newton_degree: 8, ..d },
            budget: secs(10),
            extra: none,
        },
    ]
}

fn main() -> ExitCode {
    let mut all = true;
    for c in criteria() {
        let start = Instant::now();
        let reports = run_suite(c.suite, &c.grid).expect("known suite");
        let elapsed = start.elapsed();
        let instances: usize = reports.iter().map(|r| r.instances_run).sum();
        let failures: usize = reports.iter().map(|r| r.failures.len()).sum();
        let extra = (c.extra)(&reports);
        let ok = failures == 0 && instances > 0 && elapsed <= c.budget && extra.is_ok();
        all &= ok;
        println!(
            "criterion {:>2}: {} {} ({} instances, {} failures, {:.1}s of {}s)",
            c.id,
            if ok { "PASS" } else { "FAIL" },
            c.title,
            instances,
            failures,
            elapsed.as_secs_f64(),
            c.budget.as_secs()
        );
        match extra {
            Ok(Some(note)) => println!("    {note}"),
            Ok(None) => {}
            Err(e) => println!("    {e}"),
        }
        if !ok {
            for r in reports.iter().filter(|r| !r.passed()) {
                println!("{r}");
            }
        }
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
