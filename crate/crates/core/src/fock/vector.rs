use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use smallvec::SmallVec;

use crate::partitions::{partitions_of, Partition};
use crate::ring::{binomial, factorial, LaurentPoly, Scalar};

use super::FockError;

/// A power-sum monomial `p_{μ_1} p_{μ_2} …`, stored as parts in decreasing order.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PowerSum(SmallVec<[u8; 12]>);

impl PowerSum {
    pub fn one() -> PowerSum {
        PowerSum(SmallVec::new())
    }

    pub fn from_parts(parts: &[u32]) -> PowerSum {
        let mut v: SmallVec<[u8; 12]> = parts
            .iter()
            .filter(|&&p| p > 0)
            .map(|&p| u8::try_from(p).expect("power-sum index fits in u8"))
            .collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        PowerSum(v)
    }

    pub fn from_partition(p: &Partition) -> PowerSum {
        PowerSum::from_parts(p.parts())
    }

    pub fn to_partition(&self) -> Partition {
        let parts: Vec<i64> = self.0.iter().map(|&p| p as i64).collect();
        Partition::of(&parts)
    }

    pub fn parts(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().map(|&p| p as u32)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&p| p as u32).sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn multiplicity(&self, k: u32) -> u32 {
        self.0.iter().filter(|&&p| p as u32 == k).count() as u32
    }

    /// `(part, multiplicity)` pairs, largest part first.
    pub fn multiplicities(&self) -> SmallVec<[(u32, u32); 8]> {
        let mut out: SmallVec<[(u32, u32); 8]> = SmallVec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, m)) if *q == p as u32 => *m += 1,
                _ => out.push((p as u32, 1)),
            }
        }
        out
    }

    /// `z_μ = ∏ i^{m_i} m_i!`.
    pub fn z_factor(&self) -> Scalar {
        self.multiplicities()
            .iter()
            .fold(Scalar::ONE, |acc, &(i, m)| &(&acc * &Scalar::int(i as i64).pow(m as i32)) * &factorial(m))
    }

    pub fn mul(&self, other: &PowerSum) -> PowerSum {
        if other.0.is_empty() {
            return self.clone();
        }
        if self.0.is_empty() {
            return other.clone();
        }
        let mut out = SmallVec::with_capacity(self.0.len() + other.0.len());
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            if a[i] >= b[j] {
                out.push(a[i]);
                i += 1;
            } else {
                out.push(b[j]);
                j += 1;
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        PowerSum(out)
    }

    /// Removes `count` copies of part `k` (which must be present).
    pub fn remove(&self, k: u32, count: u32) -> PowerSum {
        let mut left = count;
        PowerSum(
            self.0
                .iter()
                .copied()
                .filter(|&p| {
                    if p as u32 == k && left > 0 {
                        left -= 1;
                        false
                    } else {
                        true
                    }
                })
                .collect(),
        )
    }
}

impl Ord for PowerSum {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for PowerSum {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PowerSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let mults = self.multiplicities();
        for (i, (k, m)) in mults.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            if *m == 1 {
                write!(f, "p{k}")?;
            } else {
                write!(f, "p{k}^{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for PowerSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Coefficient rings for Fock vectors.
pub trait Coefficient: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn add_assign_ref(&mut self, other: &Self);
    fn mul_ref(&self, other: &Self) -> Self;
    fn scale(&self, c: &Scalar) -> Self;
    fn from_scalar(c: Scalar) -> Self;
    fn to_poly(&self) -> LaurentPoly;
}

impl Coefficient for Scalar {
    fn zero() -> Self {
        Scalar::ZERO
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, c: &Scalar) -> Self {
        self * c
    }
    fn from_scalar(c: Scalar) -> Self {
        c
    }
    fn to_poly(&self) -> LaurentPoly {
        LaurentPoly::constant(self.clone())
    }
}

impl Coefficient for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, c: &Scalar) -> Self {
        LaurentPoly::scale(self, c)
    }
    fn from_scalar(c: Scalar) -> Self {
        LaurentPoly::constant(c)
    }
    fn to_poly(&self) -> LaurentPoly {
        self.clone()
    }
}

/// A finite linear combination of power-sum monomials; `|0⟩` is `p_∅`.
#[derive(Clone, PartialEq)]
pub struct FockVector<C: Coefficient = Scalar> {
    terms: BTreeMap<PowerSum, C>,
}

impl<C: Coefficient> Default for FockVector<C> {
    fn default() -> Self {
        FockVector { terms: BTreeMap::new() }
    }
}

impl<C: Coefficient> FockVector<C> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn vacuum() -> Self {
        Self::basis(PowerSum::one())
    }

    pub fn basis(ps: PowerSum) -> Self {
        Self::term(ps, C::from_scalar(Scalar::ONE))
    }

    pub fn term(ps: PowerSum, c: C) -> Self {
        let mut v = Self::zero();
        v.add_term(ps, &c);
        v
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PowerSum, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, ps: &PowerSum) -> C {
        self.terms.get(ps).cloned().unwrap_or_else(C::zero)
    }

    /// `⟨0|v⟩`, the coefficient of `p_∅`.
    pub fn vacuum_coefficient(&self) -> C {
        self.coeff(&PowerSum::one())
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().map(PowerSum::degree).max()
    }

    pub fn add_term(&mut self, ps: PowerSum, c: &C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(ps) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                e.get_mut().add_assign_ref(c);
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (ps, c) in &other.terms {
            self.add_term(ps.clone(), c);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&Scalar::int(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        FockVector { terms: self.terms.iter().map(|(k, v)| (k.clone(), v.scale(c))).collect() }
    }

    pub fn scale_by(&self, c: &C) -> Self {
        let mut out = Self::zero();
        for (k, v) in &self.terms {
            out.add_term(k.clone(), &v.mul_ref(c));
        }
        out
    }

    /// Homogeneous component of the given degree.
    pub fn component(&self, degree: u32) -> Self {
        FockVector {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.degree() == degree)
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }

    /// Product with a scalar-coefficient polynomial in the power sums.
    pub fn mul_scalar_vector(&self, other: &FockVector<Scalar>) -> Self {
        let mut acc: HashMap<PowerSum, C> = HashMap::new();
        self.mul_into(other, &mut acc);
        Self::from_hash(acc)
    }

    pub(crate) fn mul_into(&self, other: &FockVector<Scalar>, acc: &mut HashMap<PowerSum, C>) {
        for (kb, cb) in &other.terms {
            for (ka, ca) in &self.terms {
                let c = ca.scale(cb);
                match acc.entry(ka.mul(kb)) {
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                    std::collections::hash_map::Entry::Occupied(mut e) => e.get_mut().add_assign_ref(&c),
                }
            }
        }
    }

    pub(crate) fn from_hash(acc: HashMap<PowerSum, C>) -> Self {
        FockVector { terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    /// The Heisenberg generator `a_n`: multiplication by `p_{-n}` for `n < 0`,
    /// `n ∂/∂p_n` for `n > 0`.
    pub fn heisenberg(&self, n: i32) -> Result<Self, FockError> {
        match n.cmp(&0) {
            Ordering::Equal => Err(FockError::ZeroModeRequested),
            Ordering::Less => {
                let p = PowerSum::from_parts(&[n.unsigned_abs()]);
                Ok(FockVector { terms: self.terms.iter().map(|(k, v)| (k.mul(&p), v.clone())).collect() })
            }
            Ordering::Greater => {
                let k = n as u32;
                let mut out = Self::zero();
                for (ps, c) in &self.terms {
                    let m = ps.multiplicity(k);
                    if m > 0 {
                        out.add_term(ps.remove(k, 1), &c.scale(&Scalar::int((k * m) as i64)));
                    }
                }
                Ok(out)
            }
        }
    }

    /// Applies the shift `p_k -> p_k + c_k` (the annihilation exponential
    /// `exp(Σ a_k c_k / k)`); `c[k]` must exist for every part present.
    pub fn shift(&self, c: &[LaurentPoly]) -> FockVector<LaurentPoly> {
        let mut powers: HashMap<(u32, u32), LaurentPoly> = HashMap::new();
        let mut out: FockVector<LaurentPoly> = FockVector::zero();
        for (ps, coeff) in &self.terms {
            let lifted = coeff.to_poly();
            for_each_submultiset(ps, |kept, removed, weight| {
                let mut value = lifted.scale(weight);
                for &(k, r) in removed {
                    let pw = powers
                        .entry((k, r))
                        .or_insert_with(|| c[k as usize].pow(r))
                        .clone();
                    value = &value * &pw;
                }
                out.add_term(kept, &value);
            });
        }
        out
    }
}

/// Calls `f(kept, removed, weight)` for every sub-multiset `removed ⊆ ps`,
/// where `removed` lists `(part, count)` and `weight = ∏ binom(m_i, r_i)`.
pub(crate) fn for_each_submultiset(ps: &PowerSum, mut f: impl FnMut(PowerSum, &[(u32, u32)], &Scalar)) {
    let mults = ps.multiplicities();
    let mut choice = vec![0u32; mults.len()];
    loop {
        let mut kept = ps.clone();
        let mut removed: SmallVec<[(u32, u32); 8]> = SmallVec::new();
        let mut weight = Scalar::ONE;
        for (idx, &(k, m)) in mults.iter().enumerate() {
            let r = choice[idx];
            if r > 0 {
                kept = kept.remove(k, r);
                removed.push((k, r));
                weight = &weight * &binomial(m, r);
            }
        }
        f(kept, &removed, &weight);
        let mut idx = 0;
        loop {
            if idx == mults.len() {
                return;
            }
            if choice[idx] < mults[idx].1 {
                choice[idx] += 1;
                break;
            }
            choice[idx] = 0;
            idx += 1;
        }
    }
}

impl<C: Coefficient> fmt::Display for FockVector<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (ps, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*{ps}")?;
        }
        Ok(())
    }
}

impl<C: Coefficient> fmt::Debug for FockVector<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Which generating series a cached coefficient vector belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) enum Series {
    /// `exp(Σ p_k w^k / k) = Σ H_k w^k`.
    H,
    /// `exp(-Σ p_k w^k / k) = Σ E'_k w^k`.
    E,
    /// `H_k - H_{k-2}`.
    HDiff,
    /// `E'_k - E'_{k-2}`.
    EDiff,
}

/// The cached degree-`k` coefficient of one of the exponential series, as a
/// polynomial in the power sums; zero for `k < 0`.
pub(crate) fn series_coeff(series: Series, k: i64) -> Arc<FockVector<Scalar>> {
    static CACHE: OnceLock<Mutex<HashMap<(Series, i64), Arc<FockVector<Scalar>>>>> = OnceLock::new();
    if k < 0 {
        static ZERO: OnceLock<Arc<FockVector<Scalar>>> = OnceLock::new();
        return Arc::clone(ZERO.get_or_init(|| Arc::new(FockVector::zero())));
    }
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().expect("cache lock").get(&(series, k)) {
        return Arc::clone(v);
    }
    let v = match series {
        Series::H | Series::E => {
            let mut v = FockVector::zero();
            for mu in partitions_of(k, k as usize, k) {
                let ps = PowerSum::from_partition(&mu);
                let sign = if series == Series::E && ps.len() % 2 == 1 { -1 } else { 1 };
                let c = &Scalar::int(sign) / &ps.z_factor();
                v.add_term(ps, &c);
            }
            v
        }
        Series::HDiff => series_coeff(Series::H, k).sub(&series_coeff(Series::H, k - 2)),
        Series::EDiff => series_coeff(Series::E, k).sub(&series_coeff(Series::E, k - 2)),
    };
    let v = Arc::new(v);
    cache.lock().expect("cache lock").insert((series, k), Arc::clone(&v));
    v
}
