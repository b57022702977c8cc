use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::characters::{skew_character, universal_character_padded, CharFamily};
use crate::fock::{
    bra_seq_apply, ket, ket_seq, matrix_element, pairing, permuted_sequence, straighten, Expansion, FockVector,
    ModeKind, PowerSum, Side,
};
use crate::partitions::{contained_in, enumerate, partitions_of, Partition};
use crate::ring::{LaurentPoly, Scalar, Var};
use crate::series::Alphabet;

use super::report::{CheckReport, Comparator, Grid};

const FAMILIES: [CharFamily; 2] = [CharFamily::Symplectic, CharFamily::Orthogonal];

pub(crate) fn basis_vectors(max_degree: i64) -> Vec<(Partition, FockVector)> {
    (0..=max_degree)
        .flat_map(|d| partitions_of(d, d as usize, d))
        .map(|mu| {
            let v = FockVector::basis(PowerSum::from_partition(&mu));
            (mu, v)
        })
        .collect()
}

/// Lazily computed products `X_a Z_b v` for one vector.
struct Products<'a> {
    v: &'a FockVector,
    inner: HashMap<ModeKind, Expansion>,
    inner_modes: HashMap<(ModeKind, i64), FockVector>,
    outer: HashMap<(ModeKind, i64, ModeKind), Expansion>,
}

impl<'a> Products<'a> {
    fn new(v: &'a FockVector) -> Self {
        Products { v, inner: HashMap::new(), inner_modes: HashMap::new(), outer: HashMap::new() }
    }

    fn single(&mut self, kind: ModeKind, b: i64) -> FockVector {
        if let Some(w) = self.inner_modes.get(&(kind, b)) {
            return w.clone();
        }
        let v = self.v;
        let w = self.inner.entry(kind).or_insert_with(|| Expansion::new(kind, v)).mode(b);
        self.inner_modes.insert((kind, b), w.clone());
        w
    }

    fn product(&mut self, outer: ModeKind, a: i64, inner: ModeKind, b: i64) -> FockVector {
        if !self.outer.contains_key(&(inner, b, outer)) {
            let w = self.single(inner, b);
            self.outer.insert((inner, b, outer), Expansion::new(outer, &w));
        }
        self.outer[&(inner, b, outer)].mode(a)
    }
}

/// Exchange relations of `Y, Y*` and `W, W*` on every power-sum monomial of
/// degree `≤ D`, for mode indices `|i|, |j| ≤ D`, plus the dual-vacuum rules.
pub fn check_commutation(grid: &Grid) -> CheckReport {
    let mut report = CheckReport::new("commutation");
    let d = grid.degree_cap as i64;
    for (mu, v) in basis_vectors(d) {
        let mut prods = Products::new(&v);
        for family in FAMILIES {
            let (c, s) = (ModeKind::creation(family), ModeKind::dual(family));
            for i in -d..=d {
                for j in -d..=d {
                    let lhs = prods.product(c, i, c, j).add(&prods.product(c, j + 1, c, i - 1));
                    report.record(lhs.is_zero(), || (format!("{c}_{i}{c}_{j} on {}", PowerSum::from_partition(&mu)), Some(&mu)), &lhs, 0);
                    let lhs = prods.product(s, i, s, j).add(&prods.product(s, j - 1, s, i + 1));
                    report.record(lhs.is_zero(), || (format!("{s}_{i}{s}_{j} on {}", PowerSum::from_partition(&mu)), Some(&mu)), &lhs, 0);
                    let lhs = prods.product(c, i, s, j).add(&prods.product(s, j + 1, c, i + 1));
                    let rhs = if i == j { v.clone() } else { FockVector::zero() };
                    report.record(lhs == rhs, || (format!("{c}_{i}{s}_{j} on {}", PowerSum::from_partition(&mu)), Some(&mu)), &lhs, &rhs);
                }
            }
        }
        // dual vacuum
        for n in -d - 2..=d + 2 {
            let vac = |p: &mut Products, k: ModeKind, idx: i64| p.single(k, idx).vacuum_coefficient();
            let pairs = [
                (ModeKind::YStar, n, -n + 2, -1),
                (ModeKind::Y, n, -n, 1),
                (ModeKind::W, n, -n - 2, -1),
                (ModeKind::WStar, n, -n, 1),
            ];
            for (kind, a, b, sign) in pairs {
                let lhs = vac(&mut prods, kind, a);
                let rhs = &vac(&mut prods, kind, b) * &Scalar::int(sign);
                report.record(lhs == rhs, || (format!("<0|{kind}_{a} vs <0|{kind}_{b} on {}", PowerSum::from_partition(&mu)), Some(&mu)), &lhs, &rhs);
            }
        }
    }
    report.finish()
}

/// `⟨μ|λ⟩ = δ_{μλ}` for partitions of weight `≤ max_weight`, padded to each
/// common length `≤ max_len`.
pub fn check_orthonormality(grid: &Grid) -> CheckReport {
    let mut report = CheckReport::new("orthonormality");
    for family in FAMILIES {
        for len in 0..=grid.max_len {
            let parts: Vec<Partition> =
                enumerate(len, grid.max_weight).map(|p| p.with_len(len).expect("fits")).collect();
            for mu in &parts {
                for lam in &parts {
                    let got = pairing(family, mu, lam);
                    let want = if mu == lam { Scalar::ONE } else { Scalar::ZERO };
                    report.record(got == want, || (format!("{family} <{mu}|{lam}>"), Some(lam)), &got, &want);
                }
            }
        }
    }
    report.finish()
}

/// Operator matrix elements `⟨β|Γ₊|α⟩` against the skew determinants.
pub fn check_fock_vs_determinant(grid: &Grid) -> CheckReport {
    let mut report = CheckReport::new("fock_vs_determinant");
    let mut cmp = Comparator::new(grid.rng_seed);
    for family in FAMILIES {
        for n in grid.ns() {
            for m in grid.ms() {
                let alphabet = Alphabet::standard(n, m);
                if n + m > grid.fock_max_dim {
                    continue;
                }
                for dim in (n + m + 1)..=grid.fock_max_dim.min(n + m + 2) {
                    for lam in enumerate(dim, grid.max_weight) {
                        let lam = lam.with_len(dim).expect("fits");
                        let fock = matrix_element(family, &Partition::empty(), &lam, &alphabet);
                        let det = universal_character_padded(family, &alphabet, &lam, dim).expect("fits");
                        let ok = cmp.equal(&fock, &det);
                        report.record(ok, || (format!("{family} <0|{lam}> n={n} m={m}"), Some(&lam)), &fock, &det);
                    }
                }
                for l in 0..=(grid.fock_max_dim - n - m) {
                    for alpha in enumerate(l + n + m, grid.max_weight) {
                        let alpha = alpha.with_len(l + n + m).expect("fits");
                        for beta in contained_in(&alpha, l) {
                            let beta = beta.with_len(l).expect("fits");
                            let fock = matrix_element(family, &beta, &alpha, &alphabet);
                            let det = match skew_character(family, &alphabet, &alpha, &beta) {
                                Ok(d) => d,
                                Err(e) => {
                                    report.fail(format!("{family} {alpha}/{beta} n={n} m={m}"), Some(&alpha), &fock, e);
                                    continue;
                                }
                            };
                            let ok = cmp.equal(&fock, &det);
                            report.record(ok, || (format!("{family} {alpha}/{beta} n={n} m={m}"), Some(&alpha)), &fock, &det);
                        }
                    }
                }
            }
        }
    }
    if cmp.evaluation_mismatches > 0 {
        report.note(format!("{} random-point mismatches", cmp.evaluation_mismatches));
    }
    report.finish()
}

/// Resolution of the identity between two groups of variables, computed on
/// the operator side only. Intermediate states run over `η` of declared
/// length `n + m`.
pub fn check_completeness(grid: &Grid) -> CheckReport {
    let mut report = CheckReport::new("completeness");
    let weight = grid.max_weight.min(4);
    for family in FAMILIES {
        for n in grid.ns().filter(|&n| n <= grid.odd_n_max) {
            for m in grid.ms().filter(|&m| m <= 1) {
                let full = Alphabet::standard(n, m);
                for k in 0..=n {
                    for s in 0..=m {
                        let (first, second) = split(n, m, k, s);
                        let l1 = n + m;
                        for alpha in enumerate(n + m, weight) {
                            let lhs = matrix_element(family, &Partition::empty(), &alpha, &full);
                            let mut rhs = LaurentPoly::zero();
                            for eta in contained_in(&alpha, l1) {
                                let eta = eta.with_len(l1).expect("fits");
                                let left = matrix_element(family, &Partition::empty(), &eta, &first);
                                if left.is_zero() {
                                    continue;
                                }
                                rhs += &left * &matrix_element(family, &eta, &alpha, &second);
                            }
                            report.record(lhs == rhs, || (format!("{family} {alpha} n={n} m={m} split k={k} s={s}"), Some(&alpha)), &lhs, &rhs);
                        }
                    }
                }
            }
        }
    }
    report.finish()
}

/// First `n-k` of the `x` and first `m-s` of the `z` variables, and the rest.
pub(crate) fn split(n: usize, m: usize, k: usize, s: usize) -> (Alphabet, Alphabet) {
    let xs: Vec<Var> = (1..=n).map(Var::x).collect();
    let zs: Vec<Var> = (1..=m).map(Var::z).collect();
    (
        Alphabet::new(xs[..n - k].to_vec(), zs[..m - s].to_vec()),
        Alphabet::new(xs[n - k..].to_vec(), zs[m - s..].to_vec()),
    )
}

fn permutations(l: usize) -> Vec<Vec<usize>> {
    if l == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(l - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, l - 1);
            out.push(q);
        }
    }
    out
}

/// Exchange-rule straightening against direct vectors and functionals, and
/// the permuted closed form on the ket side.
pub fn check_straighten(grid: &Grid) -> CheckReport {
    let mut report = CheckReport::new("straighten");
    for family in FAMILIES {
        for len in 0..=grid.max_len {
            let perms = permutations(len);
            for mu in enumerate(len, grid.max_weight) {
                let parts = mu.padded(len);
                let mu = mu.with_len(len).expect("fits");
                for sigma in &perms {
                    let (seq, sign) = permuted_sequence(&parts, sigma);
                    let got = straighten(&seq, family, Side::Ket);
                    let ok = matches!(&got, Ok(Some((s, p))) if *s == sign && p.padded_parts() == parts);
                    report.record(ok, || (format!("{family} closed form {seq:?}"), Some(&mu)), format!("{got:?}"), format!("({sign}, {mu})"));
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(grid.rng_seed);
    let probes = basis_vectors(4);
    for _ in 0..60 {
        let len = rng.gen_range(1..=3);
        let seq: Vec<i64> = (0..len).map(|_| rng.gen_range(-3..=4)).collect();
        for family in FAMILIES {
            let ket_ok = match straighten(&seq, family, Side::Ket) {
                Ok(None) => ket_seq(family, &seq).is_zero(),
                Ok(Some((s, p))) => ket_seq(family, &seq) == ket(family, &p).scale(&Scalar::int(s)),
                Err(_) => false,
            };
            report.record(ket_ok, || (format!("{family} ket {seq:?}"), None), "word", "straightened");
            let bra = straighten(&seq, family, Side::Bra);
            let bra_ok = probes.iter().all(|(_, v)| {
                let direct = bra_seq_apply(family, &seq, v);
                match &bra {
                    Ok(None) => direct.is_zero(),
                    Ok(Some((s, p))) => direct == &bra_seq_apply(family, &p.padded_parts(), v) * &Scalar::int(*s),
                    Err(_) => false,
                }
            });
            report.record(bra_ok, || (format!("{family} bra {seq:?}"), None), "word", "straightened");
        }
    }
    report.finish()
}
