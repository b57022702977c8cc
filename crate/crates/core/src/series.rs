//! Generalized complete homogeneous and elementary functions.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::ring::{LaurentPoly, Monomial, Scalar, Var};

/// A variable set for the generating function
/// `∏_{v ∈ symmetric} 1/((1 - v w)(1 - v^-1 w)) · ∏_{v ∈ plain} 1/(1 - v w)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Alphabet {
    pub symmetric: Vec<Var>,
    pub plain: Vec<Var>,
}

impl Alphabet {
    pub fn new(symmetric: Vec<Var>, plain: Vec<Var>) -> Alphabet {
        Alphabet { symmetric, plain }
    }

    /// `x_1^±, …, x_n^±; z_1, …, z_m`.
    pub fn standard(n: usize, m: usize) -> Alphabet {
        Alphabet::new((1..=n).map(Var::x).collect(), (1..=m).map(Var::z).collect())
    }

    pub fn plain(vars: Vec<Var>) -> Alphabet {
        Alphabet::new(Vec::new(), vars)
    }

    /// Number of variables counted as in the matrix dimension `n + m`.
    pub fn size(&self) -> usize {
        self.symmetric.len() + self.plain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    /// Power sums `c_k = Σ (v^k + v^-k) + Σ u^k` for `k = 1..=max`, index 0 unused.
    pub fn power_sums(&self, max: usize) -> Vec<LaurentPoly> {
        let mut out = vec![LaurentPoly::zero(); max + 1];
        for (k, c) in out.iter_mut().enumerate().skip(1) {
            let k = k as i32;
            for &v in &self.symmetric {
                c.add_term(Monomial::var_pow(v, k), &Scalar::ONE);
                c.add_term(Monomial::var_pow(v, -k), &Scalar::ONE);
            }
            for &v in &self.plain {
                c.add_term(Monomial::var_pow(v, k), &Scalar::ONE);
            }
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ZMode {
    /// `z_j` only.
    Plain,
    /// `z_j` and `z_j^-1`.
    Symmetric,
    /// Ignore the z-variables.
    None,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HSpec {
    pub n: usize,
    pub m: usize,
    pub z_mode: ZMode,
}

impl HSpec {
    pub fn new(n: usize, m: usize, z_mode: ZMode) -> HSpec {
        HSpec { n, m, z_mode }
    }

    pub fn alphabet(&self) -> Alphabet {
        let xs: Vec<Var> = (1..=self.n).map(Var::x).collect();
        let zs: Vec<Var> = (1..=self.m).map(Var::z).collect();
        match self.z_mode {
            ZMode::Plain => Alphabet::new(xs, zs),
            ZMode::Symmetric => Alphabet::new(xs.into_iter().chain(zs).collect(), Vec::new()),
            ZMode::None => Alphabet::new(xs, Vec::new()),
        }
    }
}

/// `[h_0, …, h_max]` for the alphabet, by multiplying in one geometric series
/// at a time: after a factor `1/(1 - a w)`, `h_k ← h_k + a·h_{k-1}`.
pub fn h_alphabet(alpha: &Alphabet, max: usize) -> Vec<LaurentPoly> {
    let mut h = vec![LaurentPoly::zero(); max + 1];
    h[0] = LaurentPoly::one();
    let mut factors: Vec<Monomial> = Vec::new();
    for &v in &alpha.symmetric {
        factors.push(Monomial::var(v));
        factors.push(Monomial::var_pow(v, -1));
    }
    factors.extend(alpha.plain.iter().map(|&v| Monomial::var(v)));
    for a in &factors {
        for k in 1..=max {
            let shifted = h[k - 1].mul_monomial(a, &Scalar::ONE);
            h[k] += shifted;
        }
    }
    h
}

/// Shared, lazily grown `h` sequences keyed by alphabet.
pub fn h_cached(alpha: &Alphabet, max: usize) -> Arc<Vec<LaurentPoly>> {
    static CACHE: OnceLock<Mutex<HashMap<Alphabet, Arc<Vec<LaurentPoly>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(h) = cache.lock().expect("cache lock").get(alpha) {
        if h.len() > max {
            return Arc::clone(h);
        }
    }
    let h = Arc::new(h_alphabet(alpha, max.max(8)));
    cache.lock().expect("cache lock").insert(alpha.clone(), Arc::clone(&h));
    h
}

pub fn h_seq(spec: HSpec, max: usize) -> Vec<LaurentPoly> {
    h_alphabet(&spec.alphabet(), max)
}

/// Looks up `h_k`, treating negative `k` as zero.
pub fn h_at(h: &[LaurentPoly], k: i64) -> LaurentPoly {
    if k < 0 {
        LaurentPoly::zero()
    } else {
        h.get(k as usize).cloned().expect("h sequence computed to sufficient degree")
    }
}

/// `[e_0, …, e_m]`, the coefficients of `∏_{j ≤ m} (1 - z_j^-1 w)`.
pub fn e_seq(m: usize) -> Vec<LaurentPoly> {
    let mut e = vec![LaurentPoly::zero(); m + 1];
    e[0] = LaurentPoly::one();
    for j in 1..=m {
        let a = Monomial::var_pow(Var::z(j), -1);
        for k in (1..=j).rev() {
            let t = e[k - 1].mul_monomial(&a, &Scalar::int(-1));
            e[k] += t;
        }
    }
    e
}

/// The first degree at which `h_k(x^±; z) = Σ_i e_i h_{k-i}(x^±; z^±)` fails,
/// or `None` if it holds for all `k ≤ max`.
pub fn newton_failure(n: usize, m: usize, max: usize) -> Option<(usize, LaurentPoly, LaurentPoly)> {
    let lhs = h_seq(HSpec::new(n, m, ZMode::Plain), max);
    let sym = h_seq(HSpec::new(n, m, ZMode::Symmetric), max);
    let e = e_seq(m);
    (0..=max).find_map(|k| {
        let rhs: LaurentPoly = (0..=m.min(k)).map(|i| &e[i] * &sym[k - i]).sum();
        (lhs[k] != rhs).then(|| (k, lhs[k].clone(), rhs))
    })
}

pub fn check_newton(n: usize, m: usize, max: usize) -> bool {
    newton_failure(n, m, max).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn h_examples() {
        assert_eq!(h_seq(HSpec::new(1, 0, ZMode::Plain), 2), vec![p("1"), p("x1 + x1^-1"), p("x1^2 + 1 + x1^-2")]);
        assert_eq!(h_seq(HSpec::new(0, 1, ZMode::Plain), 2), vec![p("1"), p("z1"), p("z1^2")]);
        assert_eq!(h_seq(HSpec::new(1, 1, ZMode::Plain), 1)[1], p("x1 + x1^-1 + z1"));
    }

    #[test]
    fn e_examples() {
        assert_eq!(e_seq(0), vec![p("1")]);
        assert_eq!(e_seq(1), vec![p("1"), p("-z1^-1")]);
        assert_eq!(e_seq(2), vec![p("1"), p("-z1^-1 - z2^-1"), p("z1^-1*z2^-1")]);
    }

    #[test]
    fn newton_small() {
        assert!(check_newton(1, 1, 4));
        assert!(check_newton(2, 2, 6));
    }

    #[test]
    fn symmetric_mode_without_z_is_none_mode() {
        assert_eq!(h_seq(HSpec::new(2, 0, ZMode::Symmetric), 5), h_seq(HSpec::new(2, 0, ZMode::None), 5));
    }
}
