//! Partitions, containment, interlacing, enumeration and symplectic
//! Gelfand-Tsetlin chains.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::ring::{Monomial, Var};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PartitionError {
    #[error("negative part {0}")]
    NegativePart(i64),
    #[error("parts are not weakly decreasing: {0:?}")]
    NotDecreasing(Vec<i64>),
    #[error("partition {partition} has {len} nonzero parts, at most {max} allowed")]
    TooLong { partition: String, len: usize, max: usize },
    #[error("cannot parse partition `{0}`")]
    Parse(String),
}

/// A weakly decreasing sequence of nonnegative integers with a declared
/// (padded) length. Equality, hashing and ordering ignore trailing zeros.
#[derive(Clone, Default)]
pub struct Partition {
    parts: Vec<u32>,
    declared_len: usize,
}

impl Partition {
    pub fn empty() -> Partition {
        Partition::default()
    }

    /// The declared length is the number of entries given, zeros included.
    pub fn new(parts: &[i64]) -> Result<Partition, PartitionError> {
        if let Some(&p) = parts.iter().find(|&&p| p < 0) {
            return Err(PartitionError::NegativePart(p));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotDecreasing(parts.to_vec()));
        }
        Ok(Partition {
            parts: parts.iter().filter(|&&p| p > 0).map(|&p| p as u32).collect(),
            declared_len: parts.len(),
        })
    }

    /// Like [`Partition::new`] but panics on invalid input; for literals.
    pub fn of(parts: &[i64]) -> Partition {
        Partition::new(parts).expect("valid partition literal")
    }

    /// The same partition padded (or declared) to `len` entries.
    pub fn with_len(&self, len: usize) -> Result<Partition, PartitionError> {
        if self.length() > len {
            return Err(PartitionError::TooLong {
                partition: self.to_string(),
                len: self.length(),
                max: len,
            });
        }
        Ok(Partition { parts: self.parts.clone(), declared_len: len })
    }

    /// Nonzero parts.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The i-th part (0-based), zero beyond the nonzero parts.
    pub fn part(&self, i: usize) -> i64 {
        self.parts.get(i).map_or(0, |&p| p as i64)
    }

    /// Parts padded with zeros to `len` (never truncates nonzero parts).
    pub fn padded(&self, len: usize) -> Vec<i64> {
        let len = len.max(self.parts.len());
        (0..len).map(|i| self.part(i)).collect()
    }

    /// Parts padded to the declared length.
    pub fn padded_parts(&self) -> Vec<i64> {
        self.padded(self.declared_len)
    }

    pub fn declared_len(&self) -> usize {
        self.declared_len.max(self.parts.len())
    }

    pub fn weight(&self) -> i64 {
        self.parts.iter().map(|&p| p as i64).sum()
    }

    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `mu ⊂ self`.
    pub fn contains(&self, mu: &Partition) -> bool {
        contains(mu, self)
    }
}

/// `mu ⊂ lam`: `mu_i <= lam_i` for all i.
pub fn contains(mu: &Partition, lam: &Partition) -> bool {
    mu.length() <= lam.length() && (0..mu.length()).all(|i| mu.part(i) <= lam.part(i))
}

/// `nu ≺ lam`: `lam_i >= nu_i >= lam_{i+1}` for all i.
pub fn interlaces(nu: &Partition, lam: &Partition) -> bool {
    let len = nu.length().max(lam.length());
    (0..len).all(|i| lam.part(i) >= nu.part(i) && nu.part(i) >= lam.part(i + 1))
}

impl PartialEq for Partition {
    fn eq(&self, other: &Self) -> bool {
        self.parts == other.parts
    }
}

impl Eq for Partition {}

impl Hash for Partition {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.parts.hash(state);
    }
}

/// Weight first, then reverse lexicographic (so `(2) < (1,1)`).
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts = self.padded_parts();
        if parts.is_empty() {
            return write!(f, "∅");
        }
        let body: Vec<String> = parts.iter().map(i64::to_string).collect();
        write!(f, "({})", body.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    /// Accepts `3,1,1`, `(3,1,1)`, `[3,1,1]`, and the empty string or `∅`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s
            .trim()
            .trim_start_matches(['(', '['])
            .trim_end_matches([')', ']'])
            .trim();
        if t.is_empty() || t == "∅" {
            return Ok(Partition::empty());
        }
        let parts: Vec<i64> = t
            .split(',')
            .map(|p| p.trim().parse::<i64>())
            .collect::<Result<_, _>>()
            .map_err(|_| PartitionError::Parse(s.to_string()))?;
        Partition::new(&parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.padded_parts().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Vec::<i64>::deserialize(d)?;
        Partition::new(&v).map_err(serde::de::Error::custom)
    }
}

/// Partitions of exactly `weight` with at most `max_len` parts, each at most
/// `max_part`, in lexicographically decreasing order.
pub fn partitions_of(weight: i64, max_len: usize, max_part: i64) -> Vec<Partition> {
    fn rec(rest: i64, max_len: usize, max_part: i64, cur: &mut Vec<i64>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition::of(cur));
            return;
        }
        if max_len == 0 {
            return;
        }
        for p in (1..=max_part.min(rest)).rev() {
            if p * (max_len as i64) < rest {
                break;
            }
            cur.push(p);
            rec(rest - p, max_len - 1, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if weight >= 0 {
        rec(weight, max_len, max_part, &mut Vec::new(), &mut out);
    }
    out
}

/// Every partition with at most `max_len` nonzero parts and weight at most
/// `max_weight`, ordered by weight, then lexicographically decreasing.
pub fn enumerate(max_len: usize, max_weight: i64) -> impl Iterator<Item = Partition> {
    (0..=max_weight.max(-1)).flat_map(move |w| partitions_of(w, max_len, w))
}

/// All `mu ⊂ lam` with at most `max_len` nonzero parts.
pub fn contained_in(lam: &Partition, max_len: usize) -> Vec<Partition> {
    fn rec(lam: &Partition, i: usize, max_len: usize, bound: i64, cur: &mut Vec<i64>, out: &mut Vec<Partition>) {
        if i == lam.length() || i == max_len {
            out.push(Partition::of(cur));
            return;
        }
        for p in 0..=lam.part(i).min(bound) {
            cur.push(p);
            rec(lam, i + 1, max_len, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(lam, 0, max_len, i64::MAX, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// One term of the symplectic Gelfand-Tsetlin sum: `∅ = z_0 ≺ z_1 ≺ … ≺ z_{2n+1} = λ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GtChain {
    pub n: usize,
    /// `z_0 … z_{2n+1}`; `z_k` has `⌈k/2⌉` declared parts.
    pub chain: Vec<Partition>,
}

impl GtChain {
    /// `x_{n+1}^{|z_{2n+1}|-|z_{2n}|} ∏_i x_i^{2|z_{2i-1}|-|z_{2i}|-|z_{2i-2}|}`.
    pub fn weight_monomial(&self) -> Monomial {
        let w = |k: usize| self.chain[k].weight() as i32;
        let n = self.n;
        let mut pairs: Vec<(Var, i32)> = (1..=n)
            .map(|i| (Var::x(i), 2 * w(2 * i - 1) - w(2 * i) - w(2 * i - 2)))
            .collect();
        pairs.push((Var::x(n + 1), w(2 * n + 1) - w(2 * n)));
        Monomial::from_pairs(pairs)
    }
}

impl fmt::Display for GtChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, z) in self.chain.iter().enumerate().skip(1) {
            if k > 1 {
                write!(f, " ")?;
            }
            write!(f, "z{k}={z}")?;
        }
        Ok(())
    }
}

/// All symplectic Gelfand-Tsetlin chains ending at `lam` (padded to `n+1`
/// parts), in lexicographic order of `(z_1, z_2, …)`.
pub fn gt_chains(lam: &Partition, n: usize) -> Result<impl Iterator<Item = GtChain>, PartitionError> {
    let top = lam.with_len(n + 1)?;
    let mut out = Vec::new();
    let mut stack = vec![top];
    extend_down(n, 2 * n + 1, &mut stack, &mut out);
    out.sort_by(|a: &GtChain, b: &GtChain| {
        let key = |c: &GtChain| c.chain.iter().map(Partition::padded_parts).collect::<Vec<_>>();
        key(a).cmp(&key(b))
    });
    Ok(out.into_iter())
}

// stack holds z_{2n+1}, z_{2n}, …, z_k (top first); chooses z_{k-1}.
fn extend_down(n: usize, k: usize, stack: &mut Vec<Partition>, out: &mut Vec<GtChain>) {
    if k == 0 {
        let mut chain = stack.clone();
        chain.reverse();
        out.push(GtChain { n, chain });
        return;
    }
    let upper = stack.last().expect("nonempty").clone();
    let len = (k - 1).div_ceil(2);
    let mut cur = vec![0i64; len];
    fill(&upper, 0, &mut cur, &mut |nu| {
        stack.push(Partition::of(nu).with_len(len).expect("fits"));
        extend_down(n, k - 1, stack, out);
        stack.pop();
    });
}

fn fill(upper: &Partition, i: usize, cur: &mut Vec<i64>, emit: &mut dyn FnMut(&[i64])) {
    if i == cur.len() {
        emit(cur);
        return;
    }
    for v in upper.part(i + 1)..=upper.part(i) {
        cur[i] = v;
        fill(upper, i + 1, cur, emit);
    }
}
