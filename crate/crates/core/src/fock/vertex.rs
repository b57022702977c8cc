use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::characters::CharFamily;
use crate::partitions::Partition;
use crate::ring::{factorial, LaurentPoly, Scalar};
use crate::series::Alphabet;

use super::vector::{for_each_submultiset, series_coeff, Coefficient, FockVector, PowerSum, Series};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ModeKind {
    Y,
    YStar,
    W,
    WStar,
}

impl ModeKind {
    pub const ALL: [ModeKind; 4] = [ModeKind::Y, ModeKind::YStar, ModeKind::W, ModeKind::WStar];

    /// Creation operator of the family (builds kets).
    pub fn creation(family: CharFamily) -> ModeKind {
        match family {
            CharFamily::Symplectic => ModeKind::Y,
            CharFamily::Orthogonal => ModeKind::W,
        }
    }

    /// Dual operator of the family (builds bras).
    pub fn dual(family: CharFamily) -> ModeKind {
        match family {
            CharFamily::Symplectic => ModeKind::YStar,
            CharFamily::Orthogonal => ModeKind::WStar,
        }
    }

    pub fn is_starred(self) -> bool {
        matches!(self, ModeKind::YStar | ModeKind::WStar)
    }

    fn series(self) -> Series {
        match self {
            ModeKind::Y => Series::H,
            ModeKind::YStar => Series::EDiff,
            ModeKind::W => Series::HDiff,
            ModeKind::WStar => Series::E,
        }
    }
}

impl fmt::Display for ModeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ModeKind::Y => "Y",
            ModeKind::YStar => "Y*",
            ModeKind::W => "W",
            ModeKind::WStar => "W*",
        })
    }
}

impl FromStr for ModeKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "Y" | "y" => Ok(ModeKind::Y),
            "Y*" | "y*" | "ystar" | "Ystar" => Ok(ModeKind::YStar),
            "W" | "w" => Ok(ModeKind::W),
            "W*" | "w*" | "wstar" | "Wstar" => Ok(ModeKind::WStar),
            _ => Err(format!("unknown operator `{s}` (expected Y, Y*, W or W*)")),
        }
    }
}

/// `v(p_k ∓ (z^k + z^-k))` split by powers of `z`, the annihilation half of a
/// vertex operator applied to `v`. Every mode of that operator on `v` is a
/// finite sum over these pieces.
pub struct Expansion<C: Coefficient = Scalar> {
    kind: ModeKind,
    pieces: BTreeMap<i64, FockVector<C>>,
}

impl<C: Coefficient> Expansion<C> {
    pub fn new(kind: ModeKind, v: &FockVector<C>) -> Self {
        let sign = if kind.is_starred() { 1 } else { -1 };
        let mut pieces: BTreeMap<i64, FockVector<C>> = BTreeMap::new();
        for (ps, c) in v.terms() {
            let mults = ps.multiplicities();
            shift_term(ps, &mults, 0, 0, Scalar::ONE, sign, &mut |kept, zpow, w| {
                pieces.entry(zpow).or_default().add_term(kept, &c.scale(w));
            });
        }
        pieces.retain(|_, v| !v.is_zero());
        Expansion { kind, pieces }
    }

    pub fn kind(&self) -> ModeKind {
        self.kind
    }

    /// The mode with index `n` applied to the expanded vector.
    pub fn mode(&self, n: i64) -> FockVector<C> {
        let series = self.kind.series();
        let mut acc: HashMap<PowerSum, C> = HashMap::new();
        for (&j, piece) in &self.pieces {
            let k = if self.kind.is_starred() { n - j } else { -n - j };
            if k < 0 {
                continue;
            }
            piece.mul_into(&series_coeff(series, k), &mut acc);
        }
        FockVector::from_hash(acc)
    }
}

/// Expands the shift `p_k -> p_k + sign (z^k + z^-k)` on one monomial, part by
/// part: `r` copies of `k` go to `z^k`, `s` copies to `z^-k`.
fn shift_term(
    ps: &PowerSum,
    mults: &[(u32, u32)],
    idx: usize,
    zpow: i64,
    weight: Scalar,
    sign: i64,
    f: &mut dyn FnMut(PowerSum, i64, &Scalar),
) {
    if idx == mults.len() {
        f(ps.clone(), zpow, &weight);
        return;
    }
    let (k, m) = mults[idx];
    for r in 0..=m {
        for s in 0..=(m - r) {
            let mult = &(&factorial(m) / &(&factorial(r) * &factorial(s))) / &factorial(m - r - s);
            let sgn = if sign < 0 && (r + s) % 2 == 1 { -1 } else { 1 };
            let w = &(&weight * &mult) * &Scalar::int(sgn);
            let next = if r + s > 0 { ps.remove(k, r + s) } else { ps.clone() };
            shift_term(&next, mults, idx + 1, zpow + (k as i64) * (r as i64 - s as i64), w, sign, f);
        }
    }
}

pub fn apply_mode<C: Coefficient>(kind: ModeKind, n: i64, v: &FockVector<C>) -> FockVector<C> {
    Expansion::new(kind, v).mode(n)
}

/// `|λ⟩ = Y_{-λ_1} ⋯ Y_{-λ_l} |0⟩` (or with `W` for the orthogonal family).
pub fn ket(family: CharFamily, lam: &Partition) -> FockVector {
    ket_seq(family, &lam.padded_parts())
}

/// `Y_{-n_1} ⋯ Y_{-n_l} |0⟩` for an arbitrary integer sequence.
pub fn ket_seq(family: CharFamily, ns: &[i64]) -> FockVector {
    static CACHE: OnceLock<Mutex<HashMap<(CharFamily, Vec<i64>), FockVector>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (family, ns.to_vec());
    if let Some(v) = cache.lock().expect("cache lock").get(&key) {
        return v.clone();
    }
    let kind = ModeKind::creation(family);
    let v = ns.iter().rev().fold(FockVector::vacuum(), |v, &n| apply_mode(kind, -n, &v));
    cache.lock().expect("cache lock").insert(key, v.clone());
    v
}

/// `⟨0| Y*_{-n_l} ⋯ Y*_{-n_1}` evaluated on the basis monomial `ps`.
fn bra_on_basis(family: CharFamily, ns: &[i64], ps: &PowerSum) -> Scalar {
    type Memo = HashMap<(CharFamily, Vec<i64>, PowerSum), Scalar>;
    static MEMO: OnceLock<Mutex<Memo>> = OnceLock::new();
    if ns.is_empty() {
        return if ps.is_empty() { Scalar::ONE } else { Scalar::ZERO };
    }
    let memo = MEMO.get_or_init(Default::default);
    let key = (family, ns.to_vec(), ps.clone());
    if let Some(v) = memo.lock().expect("cache lock").get(&key) {
        return v.clone();
    }
    let w = apply_mode(ModeKind::dual(family), -ns[0], &FockVector::<Scalar>::basis(ps.clone()));
    let value: Scalar = w.terms().map(|(q, c)| c * &bra_on_basis(family, &ns[1..], q)).sum();
    memo.lock().expect("cache lock").insert(key, value.clone());
    value
}

/// `⟨n_1, …, n_l| v` with the dual modes, for any coefficient ring.
pub fn bra_seq_apply<C: Coefficient>(family: CharFamily, ns: &[i64], v: &FockVector<C>) -> C {
    let mut acc = C::zero();
    for (ps, c) in v.terms() {
        let f = bra_on_basis(family, ns, ps);
        if !f.is_zero() {
            acc.add_assign_ref(&c.scale(&f));
        }
    }
    acc
}

pub fn bra_apply<C: Coefficient>(family: CharFamily, mu: &Partition, v: &FockVector<C>) -> C {
    bra_seq_apply(family, &mu.padded_parts(), v)
}

/// `⟨μ|λ⟩` with both partitions padded to a common length.
pub fn pairing(family: CharFamily, mu: &Partition, lam: &Partition) -> Scalar {
    let len = mu.declared_len().max(lam.declared_len());
    bra_seq_apply(family, &mu.padded(len), &ket_seq(family, &lam.padded(len)))
}

/// `Γ₊ v`: the shift `p_k -> p_k + Σ (x^k + x^-k) + Σ z^k`.
pub fn gamma_plus<C: Coefficient>(alpha: &Alphabet, v: &FockVector<C>) -> FockVector<LaurentPoly> {
    let max = v.max_degree().unwrap_or(0) as usize;
    v.shift(&alpha.power_sums(max))
}

/// `⟨β| Γ₊(x^±; z) |α⟩`. The bra keeps the declared length of `β`; trailing
/// zeros of `α` do not change the ket.
pub fn matrix_element(family: CharFamily, beta: &Partition, alpha_part: &Partition, alpha: &Alphabet) -> LaurentPoly {
    let bra = beta.padded_parts();
    let v = ket(family, alpha_part);
    // group by the consumed power sums σ: Σ_σ g_σ c_σ
    let mut grouped: HashMap<PowerSum, Scalar> = HashMap::new();
    for (nu, a) in v.terms() {
        for_each_submultiset(nu, |kept, removed, weight| {
            let f = bra_on_basis(family, &bra, &kept);
            if f.is_zero() {
                return;
            }
            let parts: SmallVec<[u32; 12]> =
                removed.iter().flat_map(|&(k, r)| std::iter::repeat(k).take(r as usize)).collect();
            let sigma = PowerSum::from_parts(&parts);
            *grouped.entry(sigma).or_insert(Scalar::ZERO) += &(&(a * &f) * weight);
        });
    }
    let max = v.max_degree().unwrap_or(0) as usize;
    let c = alpha.power_sums(max);
    let mut out = LaurentPoly::zero();
    for (sigma, g) in grouped {
        if g.is_zero() {
            continue;
        }
        let mut term = LaurentPoly::constant(g);
        for k in sigma.parts() {
            term = &term * &c[k as usize];
        }
        out += term;
    }
    out
}

/// The same matrix element by applying the dual modes to `Γ₊|α⟩` directly.
pub fn matrix_element_direct(
    family: CharFamily,
    beta: &Partition,
    alpha_part: &Partition,
    alpha: &Alphabet,
) -> LaurentPoly {
    let v = gamma_plus(alpha, &ket(family, alpha_part));
    let dual = ModeKind::dual(family);
    beta.padded_parts().iter().fold(v, |w, &n| apply_mode(dual, -n, &w)).vacuum_coefficient()
}

/// `⟨0|v⟩` after `Γ₊`: the vector evaluated at `p_k = c_k`.
pub fn evaluate(alpha: &Alphabet, v: &FockVector) -> LaurentPoly {
    gamma_plus(alpha, v).vacuum_coefficient()
}
