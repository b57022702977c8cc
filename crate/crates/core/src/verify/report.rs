use std::collections::HashMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::partitions::Partition;
use crate::ring::{LaurentPoly, Scalar, Var};

/// Bounds for the identity checks. The `*_max` caps narrow individual suites
/// whose cost grows fastest; every check also stays inside the ranges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Grid {
    pub n_range: [usize; 2],
    pub m_range: [usize; 2],
    pub max_weight: i64,
    pub max_len: usize,
    pub degree_cap: usize,
    pub rng_seed: u64,
    /// Fock matrix elements: bound on `l + n + m`.
    pub fock_max_dim: usize,
    /// Cauchy identities: bounds on `n`, `m` and the truncation degree.
    pub cauchy_n_max: usize,
    pub cauchy_m_max: usize,
    pub cauchy_degree: usize,
    /// Transition formulas and `z = ±1` witnesses: bounds on `n` and weight.
    pub odd_n_max: usize,
    pub transition_max_weight: i64,
    /// Newton identity degree.
    pub newton_degree: usize,
}

impl Default for Grid {
    fn default() -> Self {
        Grid {
            n_range: [0, 3],
            m_range: [0, 2],
            max_weight: 6,
            max_len: 4,
            degree_cap: 6,
            rng_seed: 0,
            fock_max_dim: 6,
            cauchy_n_max: 2,
            cauchy_m_max: 1,
            cauchy_degree: 5,
            odd_n_max: 2,
            transition_max_weight: 5,
            newton_degree: 8,
        }
    }
}

impl Grid {
    pub fn ns(&self) -> impl Iterator<Item = usize> {
        self.n_range[0]..=self.n_range[1]
    }

    pub fn ms(&self) -> impl Iterator<Item = usize> {
        self.m_range[0]..=self.m_range[1]
    }

    /// A small grid for quick runs and unit tests.
    pub fn small() -> Grid {
        Grid {
            n_range: [0, 2],
            m_range: [0, 1],
            max_weight: 3,
            max_len: 3,
            degree_cap: 3,
            fock_max_dim: 4,
            cauchy_n_max: 1,
            cauchy_m_max: 1,
            cauchy_degree: 3,
            odd_n_max: 1,
            transition_max_weight: 3,
            newton_degree: 5,
            ..Grid::default()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub instance: String,
    pub lhs: String,
    pub rhs: String,
    /// `(weight, parts)` of the instance's main partition, smallest first.
    #[serde(skip)]
    pub key: (i64, Vec<i64>),
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub check_name: String,
    pub instances_run: usize,
    pub failures: Vec<Failure>,
    pub notes: Vec<String>,
    pub seconds: f64,
}

impl CheckReport {
    pub fn new(name: &str) -> CheckReport {
        CheckReport { check_name: name.to_string(), instances_run: 0, failures: Vec::new(), notes: Vec::new(), seconds: 0.0 }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn record<'a>(
        &mut self,
        ok: bool,
        instance: impl FnOnce() -> (String, Option<&'a Partition>),
        lhs: impl fmt::Display, rhs: impl fmt::Display) {
        self.instances_run += 1;
        if !ok {
            let (instance, lam) = instance();
            let key = lam.map_or((0, Vec::new()), |l| (l.weight(), l.padded_parts()));
            self.failures.push(Failure { instance, lhs: lhs.to_string(), rhs: rhs.to_string(), key });
        }
    }

    pub fn fail(&mut self, instance: String, lam: Option<&Partition>, lhs: impl fmt::Display, rhs: impl fmt::Display) {
        self.record(false, || (instance, lam), lhs, rhs);
    }

    pub fn pass(&mut self) {
        self.instances_run += 1;
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    pub(crate) fn finish(mut self) -> CheckReport {
        self.failures.sort_by(|a, b| a.key.cmp(&b.key).then_with(|| a.instance.cmp(&b.instance)));
        self
    }
}

impl CheckReport {
    /// Human-readable block; wall-clock time only when `timings` is set, so
    /// the untimed form is byte-stable.
    pub fn render(&self, timings: bool) -> String {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let mut out = format!(
            "{status:<5} {:<28} {:>8} instances {:>4} failures",
            self.check_name,
            self.instances_run,
            self.failures.len()
        );
        if timings {
            out += &format!(" {:>8.2}s", self.seconds);
        }
        for note in &self.notes {
            out += &format!("\n      note: {note}");
        }
        for fail in self.failures.iter().take(5) {
            out += &format!("\n      {}: lhs = {} ; rhs = {}", fail.instance, fail.lhs, fail.rhs);
        }
        if self.failures.len() > 5 {
            out += &format!("\n      … {} more", self.failures.len() - 5);
        }
        out
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(true))
    }
}

/// Polynomial equality with a random-evaluation pre-pass. The verdict is
/// always structural; a mismatch at a random point is only counted.
pub struct Comparator {
    rng: ChaCha8Rng,
    points: Vec<HashMap<Var, Scalar>>,
    pub evaluation_mismatches: usize,
}

impl Comparator {
    pub fn new(seed: u64) -> Comparator {
        Comparator { rng: ChaCha8Rng::seed_from_u64(seed), points: Vec::new(), evaluation_mismatches: 0 }
    }

    fn point(&mut self, idx: usize, vars: &[Var]) -> HashMap<Var, Scalar> {
        while self.points.len() <= idx {
            self.points.push(HashMap::new());
        }
        for &v in vars {
            if !self.points[idx].contains_key(&v) {
                let num = self.rng.gen_range(1..=9) * if self.rng.gen_bool(0.5) { 1 } else { -1 };
                let den = self.rng.gen_range(1..=7);
                self.points[idx].insert(v, Scalar::ratio(num, den));
            }
        }
        self.points[idx].clone()
    }

    pub fn equal(&mut self, lhs: &LaurentPoly, rhs: &LaurentPoly) -> bool {
        let vars: Vec<Var> = lhs.vars().into_iter().chain(rhs.vars()).collect();
        for idx in 0..3 {
            let at = self.point(idx, &vars);
            if let (Ok(a), Ok(b)) = (lhs.eval(&at), rhs.eval(&at)) {
                if a != b {
                    self.evaluation_mismatches += 1;
                    break;
                }
            }
        }
        lhs == rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_json_defaults() {
        let g: Grid = serde_json::from_str(r#"{"max_weight": 4}"#).unwrap();
        assert_eq!(g.max_weight, 4);
        assert_eq!(g.n_range, [0, 3]);
        assert!(serde_json::from_str::<Grid>(r#"{"bogus": 1}"#).is_err());
    }

    #[test]
    fn failures_sorted_minimal_first() {
        let mut r = CheckReport::new("t");
        r.fail("big".into(), Some(&Partition::of(&[2, 1])), 1, 2);
        r.fail("small".into(), Some(&Partition::of(&[1])), 1, 2);
        let r = r.finish();
        assert_eq!(r.failures[0].instance, "small");
    }

    #[test]
    fn comparator_is_structural() {
        let mut c = Comparator::new(1);
        let a: LaurentPoly = "x1 + x1^-1".parse().unwrap();
        let b: LaurentPoly = "x1 + x1^-1 + z1".parse().unwrap();
        assert!(c.equal(&a, &a));
        assert!(!c.equal(&a, &b));
    }
}
