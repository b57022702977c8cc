use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::characters::{
    jt_raw, o_even_bialternant_witness_with, o_intermediate_reduce, o_odd_bialternant_witness,
    o_odd_half_integer_witness, schur, skew_character, sp_bialternant_witness, sp_odd_bialternant_witness,
    universal_character_padded, CharFamily, EvenReading, OddRowReading, Witness, ZValue,
};
use crate::partitions::{contained_in, enumerate, gt_chains, interlaces, Partition};
use crate::ring::{Family, LaurentPoly, Monomial, Scalar, Var};
use crate::series::{h_alphabet, newton_failure, Alphabet};

use super::fock_checks::split;
use super::report::{CheckReport, Comparator, Grid};

/// Memoized universal characters keyed by alphabet, dimension and padded
/// partition.
#[derive(Default)]
struct CharCache {
    map: HashMap<(CharFamily, Alphabet, Vec<i64>), LaurentPoly>,
}

impl CharCache {
    fn get(&mut self, family: CharFamily, alpha: &Alphabet, lam: &Partition) -> LaurentPoly {
        self.get_dim(family, alpha, lam, alpha.size())
    }

    fn get_dim(&mut self, family: CharFamily, alpha: &Alphabet, lam: &Partition, dim: usize) -> LaurentPoly {
        let key = (family, alpha.clone(), lam.padded(dim));
        if let Some(v) = self.map.get(&key) {
            return v.clone();
        }
        let v = universal_character_padded(family, alpha, lam, dim).expect("partition fits the dimension");
        self.map.insert(key, v.clone());
        v
    }
}

/// `Σ_μ χ_μ(first) χ_{λ/μ}(second)` over `μ ⊂ λ` of declared length `dim`,
/// with the left factor taken as the determinant of size `dim`.
fn branch_sum(
    cache: &mut CharCache,
    family: CharFamily,
    first: &Alphabet,
    second: &Alphabet,
    lam: &Partition,
    dim: usize,
) -> LaurentPoly {
    let mut rhs = LaurentPoly::zero();
    for mu in contained_in(lam, dim) {
        let left = cache.get_dim(family, first, &mu, dim);
        if left.is_zero() {
            continue;
        }
        let mu = mu.with_len(dim).expect("fits");
        rhs += &left * &skew_character(family, second, lam, &mu).expect("fits");
    }
    rhs
}

/// Tally of splits where the sum over `l(μ) ≤ |first|` alone disagrees.
#[derive(Default)]
struct ShortSum {
    splits: usize,
    failed: usize,
    failed_outside_z_first: usize,
}

impl ShortSum {
    fn add(&mut self, ok: bool, first: &Alphabet, second: &Alphabet) {
        self.splits += 1;
        if !ok {
            self.failed += 1;
            if first.plain.is_empty() || second.is_empty() {
                self.failed_outside_z_first += 1;
            }
        }
    }

    fn note(&self, report: &mut CheckReport) {
        report.note(format!(
            "sum over l(μ) ≤ |first|: {} of {} split instances differ ({} without z in the first group)",
            self.failed, self.splits, self.failed_outside_z_first
        ));
    }
}

fn branching(name: &str, family: CharFamily, grid: &Grid, ns: &[usize]) -> CheckReport {
    let mut report = CheckReport::new(name);
    let mut cache = CharCache::default();
    let mut cmp = Comparator::new(grid.rng_seed);
    let mut short = ShortSum::default();
    for &n in ns {
        for m in grid.ms() {
            let full = Alphabet::standard(n, m);
            for lam in enumerate(n + m, grid.max_weight) {
                let lhs = cache.get(family, &full, &lam);
                for k in 0..=n {
                    for s in 0..=m {
                        let (first, second) = split(n, m, k, s);
                        let stated = branch_sum(&mut cache, family, &first, &second, &lam, first.size());
                        short.add(lhs == stated, &first, &second);
                        let rhs = branch_sum(&mut cache, family, &first, &second, &lam, n + m);
                        let ok = cmp.equal(&lhs, &rhs);
                        report.record(ok, || (format!("{family} λ={lam} n={n} m={m} k={k} s={s}"), Some(&lam)), &lhs, &rhs);
                    }
                }
            }
        }
    }
    short.note(&mut report);
    report.finish()
}

/// General branching for the universal symplectic functions over every split
/// of the `x` and `z` variables.
pub fn check_branching_sp(grid: &Grid) -> CheckReport {
    branching("branching_sp", CharFamily::Symplectic, grid, &grid.ns().collect::<Vec<_>>())
}

pub fn check_branching_o(grid: &Grid) -> CheckReport {
    branching("branching_o", CharFamily::Orthogonal, grid, &grid.ns().collect::<Vec<_>>())
}

/// The two odd symplectic branchings (`z` with the right or the left factor).
pub fn check_branching_odd_sp(grid: &Grid) -> CheckReport {
    let mut report = CheckReport::new("branching_odd_sp");
    let mut cache = CharCache::default();
    let mut short = ShortSum::default();
    let family = CharFamily::Symplectic;
    for n in grid.ns() {
        let full = Alphabet::standard(n, 1);
        for lam in enumerate(n + 1, grid.max_weight) {
            let lhs = cache.get(family, &full, &lam);
            for k in 0..=n {
                for (side, s) in [("right", 1usize), ("left", 0usize)] {
                    let (first, second) = split(n, 1, k, s);
                    let stated = branch_sum(&mut cache, family, &first, &second, &lam, first.size());
                    short.add(lhs == stated, &first, &second);
                    let rhs = branch_sum(&mut cache, family, &first, &second, &lam, n + 1);
                    report.record(lhs == rhs, || (format!("λ={lam} n={n} k={k} z {side}"), Some(&lam)), &lhs, &rhs);
                }
            }
        }
    }
    short.note(&mut report);
    report.finish()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CauchyFamily {
    SpUniversal,
    SpOdd,
    SpN0,
    OUniversal,
}

impl CauchyFamily {
    pub const ALL: [CauchyFamily; 4] =
        [CauchyFamily::SpUniversal, CauchyFamily::SpOdd, CauchyFamily::SpN0, CauchyFamily::OUniversal];

    pub fn name(self) -> &'static str {
        match self {
            CauchyFamily::SpUniversal => "sp_universal",
            CauchyFamily::SpOdd => "sp_odd",
            CauchyFamily::SpN0 => "sp_n0",
            CauchyFamily::OUniversal => "o_universal",
        }
    }
}

impl std::str::FromStr for CauchyFamily {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CauchyFamily::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| format!("unknown Cauchy family `{s}`"))
    }
}

/// `Σ_λ char_λ s_λ(y)` truncated at total `y`-degree `D`.
fn cauchy_lhs(family: CharFamily, n: usize, m: usize, d: usize, cache: &mut CharCache) -> LaurentPoly {
    let k = n + m;
    let alpha = Alphabet::standard(n, m);
    let mut lhs = LaurentPoly::zero();
    for lam in enumerate(k, d as i64) {
        let c = cache.get(family, &alpha, &lam);
        lhs += &c * &schur(&lam, k).expect("fits");
    }
    lhs
}

/// `∏_s Σ_t h_t y_s^t · ∏_{k<l} (1 - y_k y_l)` (or `k ≤ l`), truncated.
fn cauchy_rhs(n: usize, m: usize, d: usize, non_strict: bool) -> LaurentPoly {
    let k = n + m;
    let h = h_alphabet(&Alphabet::standard(n, m), d);
    let mut rhs = LaurentPoly::one();
    for s in 1..=k {
        let y = Var::y(s);
        let series: LaurentPoly =
            h.iter().enumerate().map(|(t, ht)| ht.mul_monomial(&Monomial::var_pow(y, t as i32), &Scalar::ONE)).sum();
        rhs = rhs.mul_truncated(&series, Family::Y, d as i64);
    }
    for a in 1..=k {
        for b in a..=k {
            if a == b && !non_strict {
                continue;
            }
            let factor = LaurentPoly::one() - LaurentPoly::var(Var::y(a)) * LaurentPoly::var(Var::y(b));
            rhs = rhs.mul_truncated(&factor, Family::Y, d as i64);
        }
    }
    rhs
}

pub fn check_cauchy(kind: CauchyFamily, grid: &Grid) -> CheckReport {
    let mut report = CheckReport::new(&format!("cauchy_{}", kind.name()));
    let mut cache = CharCache::default();
    let d = grid.cauchy_degree;
    let ns: Vec<usize> = grid.ns().filter(|&n| n <= grid.cauchy_n_max).collect();
    let ms: Vec<usize> = grid.ms().filter(|&m| m <= grid.cauchy_m_max).collect();
    let cases: Vec<(usize, usize)> = match kind {
        CauchyFamily::SpUniversal | CauchyFamily::OUniversal => {
            ns.iter().flat_map(|&n| ms.iter().map(move |&m| (n, m))).collect()
        }
        CauchyFamily::SpOdd => ns.iter().map(|&n| (n, 1)).collect(),
        CauchyFamily::SpN0 => (1..=grid.cauchy_n_max + grid.cauchy_m_max).map(|m| (0, m)).collect(),
    };
    if kind == CauchyFamily::OUniversal {
        let (mut strict_ok, mut non_strict_ok) = (0usize, 0usize);
        let mut rows = Vec::new();
        for &(n, m) in &cases {
            let lhs = cauchy_lhs(CharFamily::Orthogonal, n, m, d, &mut cache);
            let strict = cauchy_rhs(n, m, d, false);
            let non_strict = cauchy_rhs(n, m, d, true);
            strict_ok += usize::from(lhs == strict);
            non_strict_ok += usize::from(lhs == non_strict);
            rows.push((n, m, lhs, non_strict));
        }
        report.note(format!(
            "product over k ≤ l (with (1 - y_k^2) factors) matches {non_strict_ok}/{} cases; k < l matches {strict_ok}/{}",
            cases.len(),
            cases.len()
        ));
        for (n, m, lhs, rhs) in rows {
            report.record(lhs == rhs, || (format!("o n={n} m={m} D={d} (k ≤ l)"), None), &lhs, &rhs);
        }
    } else {
        for &(n, m) in &cases {
            let lhs = cauchy_lhs(CharFamily::Symplectic, n, m, d, &mut cache);
            let rhs = cauchy_rhs(n, m, d, false);
            report.record(lhs == rhs, || (format!("sp n={n} m={m} D={d}"), None), &lhs, &rhs);
        }
    }
    report.finish()
}

/// Zero-one vectors of the given length.
fn epsilons(len: usize) -> impl Iterator<Item = Vec<i64>> {
    (0u32..(1 << len)).map(move |bits| (0..len).map(|i| i64::from((bits >> i) & 1)).collect())
}

/// Transitions from odd symplectic (and odd orthogonal) characters to
/// characters over `x^±, z^±`, and the `z`-power formula.
pub fn check_transition_odd(grid: &Grid) -> CheckReport {
    let mut report = CheckReport::new("transition_odd");
    let mut cache = CharCache::default();
    let z = Var::z(1);
    let minus_zinv = LaurentPoly::var_pow(z, -1).scale(&Scalar::int(-1));
    let mut literal_failures = 0usize;
    let mut literal_instances = 0usize;
    for n in grid.ns().filter(|&n| n <= grid.odd_n_max) {
        let odd = Alphabet::standard(n, 1);
        let under = Alphabet::new((1..=n).map(Var::x).chain([z]).collect(), Vec::new());
        for lam in enumerate(n + 1, grid.transition_max_weight) {
            // symplectic: ε over all n+1 parts
            let lhs = cache.get(CharFamily::Symplectic, &odd, &lam);
            let parts = lam.padded(n + 1);
            let mut dropped = LaurentPoly::zero();
            let mut raw = LaurentPoly::zero();
            for eps in epsilons(n + 1) {
                let seq: Vec<i64> = parts.iter().zip(&eps).map(|(a, e)| a - e).collect();
                let w = minus_zinv.pow(eps.iter().sum::<i64>() as u32);
                if let Ok(p) = Partition::new(&seq) {
                    dropped += &w * &cache.get(CharFamily::Symplectic, &under, &p);
                }
                raw += &w * &jt_raw(CharFamily::Symplectic, &under, &seq, &[]).expect("fits");
            }
            report.record(lhs == dropped, || (format!("sp λ={lam} n={n} (partition terms)"), Some(&lam)), &lhs, &dropped);
            report.record(raw == dropped, || (format!("sp λ={lam} n={n} (raw determinants)"), Some(&lam)), &raw, &dropped);

            // z-power formula: sp_λ(x;z) = Σ_{μ ≺ λ} sp_μ(x) z^{|λ|-|μ|}
            let xs = Alphabet::standard(n, 0);
            let zs = Alphabet::standard(0, 1);
            let mut interlaced = LaurentPoly::zero();
            let mut literal = LaurentPoly::zero();
            for mu in contained_in(&lam, n) {
                let term = cache.get(CharFamily::Symplectic, &xs, &mu)
                    .mul_monomial(&Monomial::var_pow(z, (lam.weight() - mu.weight()) as i32), &Scalar::ONE);
                let skew = skew_character(CharFamily::Symplectic, &zs, &lam, &mu.with_len(n).expect("fits")).expect("fits");
                let expect_skew = if interlaces(&mu, &lam) {
                    LaurentPoly::var_pow(z, (lam.weight() - mu.weight()) as i32)
                } else {
                    LaurentPoly::zero()
                };
                report.record(skew == expect_skew, || (format!("skew λ/μ={lam}/{mu} in z"), Some(&lam)), &skew, &expect_skew);
                if interlaces(&mu, &lam) {
                    interlaced += term.clone();
                }
                literal += term;
            }
            report.record(lhs == interlaced, || (format!("z-power λ={lam} n={n}"), Some(&lam)), &lhs, &interlaced);
            literal_instances += 1;
            literal_failures += usize::from(lhs != literal);

            // orthogonal: λ = (λ_1..λ_n, 0), ε over the first n parts
            if lam.length() <= n {
                let lam0 = lam.with_len(n + 1).expect("fits");
                let lhs = cache.get(CharFamily::Orthogonal, &odd, &lam0);
                let mut dropped = LaurentPoly::zero();
                let mut raw = LaurentPoly::zero();
                for eps in epsilons(n) {
                    let mut seq: Vec<i64> = parts.iter().zip(&eps).map(|(a, e)| a - e).collect();
                    seq.truncate(n);
                    seq.push(0);
                    let w = minus_zinv.pow(eps.iter().sum::<i64>() as u32);
                    if let Ok(p) = Partition::new(&seq) {
                        dropped += &w * &cache.get(CharFamily::Orthogonal, &under, &p);
                    }
                    raw += &w * &jt_raw(CharFamily::Orthogonal, &under, &seq, &[]).expect("fits");
                }
                report.record(lhs == dropped, || (format!("o λ={lam0} n={n} (partition terms)"), Some(&lam)), &lhs, &dropped);
                report.record(raw == dropped, || (format!("o λ={lam0} n={n} (raw determinants)"), Some(&lam)), &raw, &dropped);
            }
        }
    }
    report.note(format!(
        "z-power sum over every μ ⊂ λ without interlacing differs from the character in {literal_failures}/{literal_instances} cases"
    ));
    report.finish()
}

/// Gelfand-Tsetlin sum against the odd symplectic character at `z = x_{n+1}`,
/// and chain counts against the value at `x = 1`.
pub fn check_gt_sum(grid: &Grid) -> CheckReport {
    let mut report = CheckReport::new("gt_sum");
    let mut cache = CharCache::default();
    for n in grid.ns() {
        let alpha = Alphabet::standard(n, 1);
        for lam in enumerate(n + 1, grid.max_weight) {
            let chains: Vec<_> = gt_chains(&lam, n).expect("fits").collect();
            let sum = LaurentPoly::from_terms(chains.iter().map(|c| (c.weight_monomial(), Scalar::ONE)));
            let character = cache.get(CharFamily::Symplectic, &alpha, &lam);
            let at = character.map_vars(|v| if v == Var::z(1) { Var::x(n + 1) } else { v });
            report.record(sum == at, || (format!("λ={lam} n={n}"), Some(&lam)), &sum, &at);
            let ones: Vec<(Var, Scalar)> = at.vars().into_iter().map(|v| (v, Scalar::ONE)).collect();
            let dim = at.specialize(&ones);
            let count = LaurentPoly::int(chains.len() as i64);
            report.record(dim == count, || (format!("count λ={lam} n={n}"), Some(&lam)), &count, &dim);
        }
    }
    report.finish()
}

fn record_witness(report: &mut CheckReport, label: String, lam: &Partition, w: Result<Witness, impl std::fmt::Display>) {
    match w {
        Ok(w) => {
            let ok = w.holds();
            report.record(ok, || (label, Some(lam)), &w.numerator, format!("({}) * ({})", w.denominator, w.candidate));
        }
        Err(e) => report.fail(label, Some(lam), e, "witness"),
    }
}

/// Bialternant witnesses: numerator = denominator × Jacobi-Trudi candidate.
pub fn check_witnesses(grid: &Grid) -> CheckReport {
    let mut report = CheckReport::new("witnesses");
    let n_top = grid.n_range[1];
    for n in 1..=n_top {
        for lam in enumerate(n, grid.max_weight) {
            record_witness(&mut report, format!("sp bialternant λ={lam} n={n}"), &lam, sp_bialternant_witness(&lam, n));
            record_witness(
                &mut report,
                format!("o even bialternant λ={lam} l={n}"),
                &lam,
                o_even_bialternant_witness_with(&lam, n, EvenReading::Repaired),
            );
        }
    }
    let (mut lit_even, mut lit_even_ok) = (0, 0);
    for l in 1..=n_top {
        for lam in enumerate(l, grid.max_weight) {
            lit_even += 1;
            if o_even_bialternant_witness_with(&lam, l, EvenReading::Literal).is_ok_and(|w| w.holds()) {
                lit_even_ok += 1;
            }
        }
    }
    report.note(format!("even orthogonal bialternant, literal switch reading: {lit_even_ok}/{lit_even} witnesses hold"));
    let (mut lit_odd, mut lit_odd_ok) = (0, 0);
    for n in 0..=grid.odd_n_max {
        for lam in enumerate(n + 1, grid.max_weight) {
            record_witness(&mut report, format!("sp odd bialternant λ={lam} n={n}"), &lam, sp_odd_bialternant_witness(&lam, n));
        }
        if n == 0 {
            continue;
        }
        for lam in enumerate(n, grid.max_weight) {
            for z in [ZValue::Plus, ZValue::Minus] {
                record_witness(&mut report, format!("o odd z={z:?} λ={lam} n={n}"), &lam, o_odd_half_integer_witness(&lam, n, z));
            }
            record_witness(
                &mut report,
                format!("o odd bialternant λ={lam} n={n}"),
                &lam,
                o_odd_bialternant_witness(&lam, n, OddRowReading::Repaired),
            );
            lit_odd += 1;
            if o_odd_bialternant_witness(&lam, n, OddRowReading::Literal).is_ok_and(|w| w.holds()) {
                lit_odd_ok += 1;
            }
        }
    }
    report.note(format!("odd orthogonal bialternant, literal last-row reading: {lit_odd_ok}/{lit_odd} witnesses hold"));
    report.finish()
}

/// `n = 0` branchings, the intermediate orthogonal reduction, the `z = ±1`
/// witnesses and symmetry of zero-padded characters in the `z` block.
pub fn check_reductions(grid: &Grid) -> CheckReport {
    let mut report = CheckReport::new("reductions");
    if grid.n_range[0] == 0 {
        for family in [CharFamily::Symplectic, CharFamily::Orthogonal] {
            let sub = branching("n0", family, grid, &[0]);
            report.instances_run += sub.instances_run;
            report.failures.extend(sub.failures);
        }
    }
    for n in grid.ns() {
        for m in grid.ms() {
            for lam in enumerate(n, grid.max_weight) {
                let r = o_intermediate_reduce(&lam, n, m);
                let ok = r.is_ok();
                report.record(ok, || (format!("o intermediate λ={lam} n={n} m={m}"), Some(&lam)), format!("{r:?}"), "reduction");
            }
        }
    }
    for n in grid.ns().filter(|&n| n >= 1 && n <= grid.odd_n_max) {
        for lam in enumerate(n, grid.max_weight) {
            for z in [ZValue::Plus, ZValue::Minus] {
                record_witness(&mut report, format!("o odd z={z:?} λ={lam} n={n}"), &lam, o_odd_half_integer_witness(&lam, n, z));
            }
        }
    }
    let mut cache = CharCache::default();
    for family in [CharFamily::Symplectic, CharFamily::Orthogonal] {
        for n in grid.ns() {
            for m in grid.ms().filter(|&m| m >= 2) {
                let alpha = Alphabet::standard(n, m);
                for lam in enumerate((n + 1).min(n + m), grid.max_weight) {
                    let c = cache.get(family, &alpha, &lam);
                    for j in 1..m {
                        let swapped = c.swap_vars(Var::z(j), Var::z(j + 1));
                        report.record(swapped == c, || (format!("{family} z-block λ={lam} n={n} m={m} swap z{j}"), Some(&lam)), &swapped, &c);
                    }
                }
            }
        }
    }
    report.finish()
}

pub fn check_newton(grid: &Grid) -> CheckReport {
    let mut report = CheckReport::new("newton");
    for n in grid.ns() {
        for m in grid.ms() {
            match newton_failure(n, m, grid.newton_degree) {
                None => report.pass(),
                Some((k, lhs, rhs)) => report.fail(format!("n={n} m={m} degree {k}"), None, lhs, rhs),
            }
        }
    }
    report.finish()
}
