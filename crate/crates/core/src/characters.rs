//! Jacobi-Trudi determinants, bialternant witnesses and closed
//! specializations for symplectic and orthogonal characters.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::partitions::{Partition, PartitionError};
use crate::ring::{LaurentPoly, Monomial, PolyMatrix, RingError, Scalar, Var};
use crate::series::{h_at, h_cached, Alphabet};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CharError {
    #[error("partition {partition} is too long: {len} nonzero parts, at most {max}")]
    PartitionTooLong { partition: String, len: usize, max: usize },
    #[error("witness identity failed for {formula} at {instance}")]
    DivisionWitnessFailed { formula: String, instance: String },
    #[error("partition {0} must have a zero last part")]
    LastPartNonzero(String),
    #[error("reduction mismatch at {0}")]
    ReductionMismatch(String),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CharFamily {
    #[serde(rename = "sp")]
    Symplectic,
    #[serde(rename = "o")]
    Orthogonal,
}

impl fmt::Display for CharFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CharFamily::Symplectic => "sp",
            CharFamily::Orthogonal => "o",
        })
    }
}

impl FromStr for CharFamily {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "sp" | "symplectic" => Ok(CharFamily::Symplectic),
            "o" | "orthogonal" => Ok(CharFamily::Orthogonal),
            _ => Err(format!("unknown family `{s}` (expected sp or o)")),
        }
    }
}

/// Which character to compute: family, variable counts and the indexing
/// partitions. An inner partition with declared length `l > 0` selects the
/// skew determinant of dimension `l + n + m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharSpec {
    pub family: CharFamily,
    pub n: usize,
    pub m: usize,
    pub outer: Partition,
    #[serde(default)]
    pub inner: Partition,
}

impl CharSpec {
    pub fn new(family: CharFamily, n: usize, m: usize, outer: Partition) -> CharSpec {
        CharSpec { family, n, m, outer, inner: Partition::empty() }
    }

    pub fn skew(family: CharFamily, n: usize, m: usize, outer: Partition, inner: Partition) -> CharSpec {
        CharSpec { family, n, m, outer, inner }
    }

    pub fn alphabet(&self) -> Alphabet {
        Alphabet::standard(self.n, self.m)
    }

    pub fn is_skew(&self) -> bool {
        self.inner.declared_len() > 0
    }

    pub fn dimension(&self) -> usize {
        self.inner.declared_len() + self.n + self.m
    }

    pub fn compute(&self) -> Result<LaurentPoly, CharError> {
        skew_character(self.family, &self.alphabet(), &self.outer, &self.inner)
    }
}

fn too_long(p: &Partition, max: usize) -> CharError {
    CharError::PartitionTooLong { partition: p.to_string(), len: p.length(), max }
}

/// The raw Jacobi-Trudi determinant on integer sequences (entries may be
/// negative or out of order). Dimension is `inner.len() + alphabet.size()`;
/// `outer` is zero-padded to it.
///
/// symplectic: `det(h_{a_i-b_j-i+j} + [j>l+1] h_{a_i-i-j+2l+2})`
/// orthogonal: `det(h_{a_i-b_j-i+j} - [j>l] h_{a_i-i-j+2l})`
pub fn jt_raw(family: CharFamily, alpha: &Alphabet, outer: &[i64], inner: &[i64]) -> Result<LaurentPoly, CharError> {
    jt_dim(family, alpha, outer, inner, inner.len() + alpha.size())
}

/// The universal determinant of `λ` taken at dimension `dim ≥ alpha.size()`,
/// which need not equal the number of variables.
pub fn universal_character_padded(
    family: CharFamily,
    alpha: &Alphabet,
    lam: &Partition,
    dim: usize,
) -> Result<LaurentPoly, CharError> {
    if lam.length() > dim {
        return Err(too_long(lam, dim));
    }
    jt_dim(family, alpha, &lam.padded(dim), &[], dim)
}

fn jt_dim(family: CharFamily, alpha: &Alphabet, outer: &[i64], inner: &[i64], d: usize) -> Result<LaurentPoly, CharError> {
    let l = inner.len();
    if outer.len() > d && outer[d..].iter().any(|&a| a != 0) {
        let p = format!("{outer:?}");
        return Err(CharError::PartitionTooLong { partition: p, len: outer.len(), max: d });
    }
    let a = |i: usize| outer.get(i).copied().unwrap_or(0);
    let b = |j: usize| inner.get(j).copied().unwrap_or(0);
    let top = (0..d).map(a).max().unwrap_or(0).max(0) + 2 * d as i64 + 2;
    let h = h_cached(alpha, top as usize);
    let l = l as i64;
    let m = PolyMatrix::from_fn(d, d, |i0, j0| {
        let (i, j) = (i0 as i64 + 1, j0 as i64 + 1);
        let first = h_at(&h, a(i0) - b(j0) - i + j);
        match family {
            CharFamily::Symplectic if j > l + 1 => first + h_at(&h, a(i0) - i - j + 2 * l + 2),
            CharFamily::Orthogonal if j > l => first - h_at(&h, a(i0) - i - j + 2 * l),
            _ => first,
        }
    });
    Ok(m.det()?)
}

/// Universal character over an arbitrary alphabet; `lam` may have at most
/// `alpha.size()` nonzero parts.
pub fn universal_character(family: CharFamily, alpha: &Alphabet, lam: &Partition) -> Result<LaurentPoly, CharError> {
    if lam.length() > alpha.size() {
        return Err(too_long(lam, alpha.size()));
    }
    jt_raw(family, alpha, &lam.padded(alpha.size()), &[])
}

/// Skew character over an arbitrary alphabet; `l = inner.declared_len()`.
pub fn skew_character(
    family: CharFamily,
    alpha: &Alphabet,
    outer: &Partition,
    inner: &Partition,
) -> Result<LaurentPoly, CharError> {
    let d = inner.declared_len() + alpha.size();
    if outer.length() > d {
        return Err(too_long(outer, d));
    }
    jt_raw(family, alpha, &outer.padded(d), &inner.padded_parts())
}

pub fn sp_universal(spec: &CharSpec) -> Result<LaurentPoly, CharError> {
    universal_character(CharFamily::Symplectic, &spec.alphabet(), &spec.outer)
}

pub fn sp_skew(spec: &CharSpec) -> Result<LaurentPoly, CharError> {
    skew_character(CharFamily::Symplectic, &spec.alphabet(), &spec.outer, &spec.inner)
}

pub fn o_universal(spec: &CharSpec) -> Result<LaurentPoly, CharError> {
    universal_character(CharFamily::Orthogonal, &spec.alphabet(), &spec.outer)
}

pub fn o_skew(spec: &CharSpec) -> Result<LaurentPoly, CharError> {
    skew_character(CharFamily::Orthogonal, &spec.alphabet(), &spec.outer, &spec.inner)
}

fn sp_nm(lam: &Partition, n: usize, m: usize) -> Result<LaurentPoly, CharError> {
    universal_character(CharFamily::Symplectic, &Alphabet::standard(n, m), lam)
}

fn o_nm(lam: &Partition, n: usize, m: usize) -> Result<LaurentPoly, CharError> {
    universal_character(CharFamily::Orthogonal, &Alphabet::standard(n, m), lam)
}

/// Schur polynomial `s_λ(y_1, …, y_k)` as `det(h_{λ_i-i+j}(y))`.
pub fn schur(lam: &Partition, k: usize) -> Result<LaurentPoly, CharError> {
    if lam.length() > k {
        return Err(too_long(lam, k));
    }
    let d = lam.length();
    let h = h_cached(&Alphabet::plain((1..=k).map(Var::y).collect()), lam.part(0) as usize + d);
    let m = PolyMatrix::from_fn(d, d, |i, j| h_at(&h, lam.part(i) - i as i64 + j as i64));
    Ok(m.det()?)
}

/// A determinant-ratio identity checked multiplicatively:
/// `numerator == denominator * candidate`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub numerator: LaurentPoly,
    pub denominator: LaurentPoly,
    pub candidate: LaurentPoly,
}

impl Witness {
    pub fn holds(&self) -> bool {
        !self.denominator.is_zero() && self.numerator == &self.denominator * &self.candidate
    }

    fn into_candidate(self, formula: &str, instance: String) -> Result<LaurentPoly, CharError> {
        if self.holds() {
            Ok(self.candidate)
        } else {
            Err(CharError::DivisionWitnessFailed { formula: formula.to_string(), instance })
        }
    }
}

fn mono(v: Var, e: i64) -> LaurentPoly {
    LaurentPoly::var_pow(v, e as i32)
}

/// `v^e - v^-e` (or `v^e + v^-e` when `plus`).
fn pm(v: Var, e: i64, plus: bool) -> LaurentPoly {
    if plus {
        mono(v, e) + mono(v, -e)
    } else {
        mono(v, e) - mono(v, -e)
    }
}

fn det(rows: usize, f: impl FnMut(usize, usize) -> LaurentPoly) -> Result<LaurentPoly, CharError> {
    Ok(PolyMatrix::from_fn(rows, rows, f).det()?)
}

/// `det(x_i^{λ_j+n-j+1} - x_i^{-(λ_j+n-j+1)}) / det(x_i^{n-j+1} - x_i^{-(n-j+1)})`
/// against `sp_λ(x^±)` from the Jacobi-Trudi side.
pub fn sp_bialternant_witness(lam: &Partition, n: usize) -> Result<Witness, CharError> {
    if lam.length() > n {
        return Err(too_long(lam, n));
    }
    let nn = n as i64;
    let numerator = det(n, |i, j| pm(Var::x(i + 1), lam.part(j) + nn - j as i64, false))?;
    let denominator = det(n, |i, j| pm(Var::x(i + 1), nn - j as i64, false))?;
    let candidate = sp_nm(lam, n, 0)?;
    Ok(Witness { numerator, denominator, candidate })
}

pub fn sp_bialternant(lam: &Partition, n: usize) -> Result<LaurentPoly, CharError> {
    sp_bialternant_witness(lam, n)?.into_candidate("symplectic bialternant", format!("λ={lam}, n={n}"))
}

/// The odd symplectic bialternant with `z = z1` as the (n+1)-st row, against
/// the `m = 1` universal character.
pub fn sp_odd_bialternant_witness(lam: &Partition, n: usize) -> Result<Witness, CharError> {
    if lam.length() > n + 1 {
        return Err(too_long(lam, n + 1));
    }
    let z = Var::z(1);
    let nn = n as i64;
    let numerator = det(n + 1, |i, j| {
        let e = lam.part(j) + nn - j as i64 + 1;
        if i < n {
            let x = Var::x(i + 1);
            pm(x, e, false) - pm(x, e - 1, false) * mono(z, -1)
        } else {
            mono(z, e) - mono(z, e - 2)
        }
    })?;
    let denominator = det(n + 1, |i, j| {
        let e = nn - j as i64 + 1;
        let v = if i < n { Var::x(i + 1) } else { z };
        pm(v, e, false)
    })?;
    let candidate = sp_nm(lam, n, 1)?;
    Ok(Witness { numerator, denominator, candidate })
}

pub fn sp_odd_bialternant(lam: &Partition, n: usize) -> Result<LaurentPoly, CharError> {
    sp_odd_bialternant_witness(lam, n)?.into_candidate("odd symplectic bialternant", format!("λ={lam}, n={n}"))
}

/// The odd symplectic Jacobi-Trudi form: the `m = 1` universal character.
pub fn sp_odd_jt(lam: &Partition, n: usize) -> Result<LaurentPoly, CharError> {
    sp_nm(lam, n, 1)
}

/// Reading of the inverse-power switch in the even orthogonal bialternant
/// with `λ_l > 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EvenReading {
    /// The inverse power is dropped only when `j = l` and `λ_l = 0`.
    Repaired,
    /// The inverse power is kept only when `j ≠ l` and `λ_l ≠ 0`.
    Literal,
}

/// Even orthogonal bialternant over `l` variables. For `λ_l = 0` this is
/// `det(x^{λ_j+l-j} + x^{-(λ_j+l-j)}) / det(x^{l-j} + x^{-(l-j)})`; for
/// `λ_l > 0` the numerator carries an extra factor 2.
pub fn o_even_bialternant_witness(lam: &Partition, l: usize) -> Result<Witness, CharError> {
    o_even_bialternant_witness_with(lam, l, EvenReading::Repaired)
}

pub fn o_even_bialternant_witness_with(lam: &Partition, l: usize, reading: EvenReading) -> Result<Witness, CharError> {
    if lam.length() > l {
        return Err(too_long(lam, l));
    }
    let ll = l as i64;
    let last_nonzero = l > 0 && lam.part(l - 1) > 0;
    let mut numerator = det(l, |i, j| {
        let x = Var::x(i + 1);
        let e = lam.part(j) + ll - 1 - j as i64;
        let keep_inverse = match reading {
            EvenReading::Repaired => true,
            EvenReading::Literal => !last_nonzero || j != l - 1,
        };
        if keep_inverse {
            pm(x, e, true)
        } else {
            mono(x, e)
        }
    })?;
    if last_nonzero {
        numerator = numerator.scale(&Scalar::int(2));
    }
    let denominator = det(l, |i, j| pm(Var::x(i + 1), ll - 1 - j as i64, true))?;
    let candidate = o_nm(lam, l, 0)?;
    Ok(Witness { numerator, denominator, candidate })
}

pub fn o_even_bialternant(lam: &Partition, l: usize) -> Result<LaurentPoly, CharError> {
    o_even_bialternant_witness(lam, l)?.into_candidate("even orthogonal bialternant", format!("λ={lam}, l={l}"))
}

/// Reading of the last-row, zero-part entries in the odd orthogonal bialternant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OddRowReading {
    /// `z^{n+1-j} + z^{-(n+1-j)}`.
    Repaired,
    /// `z^{n+1-j} + z^{-n-i+j}` with `i = n+1` substituted literally.
    Literal,
}

/// The odd orthogonal bialternant in `x_1..x_n` and `z = z1` against the
/// `m = 1` universal orthogonal character; `λ = (λ_1, …, λ_n, 0)`.
pub fn o_odd_bialternant_witness(lam: &Partition, n: usize, reading: OddRowReading) -> Result<Witness, CharError> {
    if lam.length() > n {
        return Err(CharError::LastPartNonzero(lam.to_string()));
    }
    let z = Var::z(1);
    let nn = n as i64;
    let numerator = det(n + 1, |i, j| {
        let lj = lam.part(j);
        let e = lj + nn - j as i64;
        if i < n {
            let x = Var::x(i + 1);
            let mut a = pm(x, e, true);
            if lj > 0 {
                a = a - pm(x, e - 1, true) * mono(z, -1);
            }
            a
        } else if lj > 0 {
            mono(z, e) - mono(z, e - 2)
        } else {
            let k = nn - j as i64;
            match reading {
                OddRowReading::Repaired => pm(z, k, true),
                OddRowReading::Literal => mono(z, k) + mono(z, -2 * nn - 1 + j as i64 + 1),
            }
        }
    })?;
    let denominator = det(n + 1, |i, j| {
        let v = if i < n { Var::x(i + 1) } else { z };
        pm(v, nn - j as i64, true)
    })?;
    let candidate = o_nm(&lam.with_len(n + 1)?, n, 1)?;
    Ok(Witness { numerator, denominator, candidate })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ZValue {
    #[serde(rename = "+1")]
    Plus,
    #[serde(rename = "-1")]
    Minus,
    #[serde(rename = "symbolic")]
    Symbolic,
}

impl FromStr for ZValue {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "1" | "+1" => Ok(ZValue::Plus),
            "-1" => Ok(ZValue::Minus),
            "z" | "symbolic" => Ok(ZValue::Symbolic),
            _ => Err(format!("unknown z value `{s}` (expected +1, -1 or symbolic)")),
        }
    }
}

/// `x_i -> t_i^2` for `i = 1..=n`.
pub fn x_to_t_squared(p: &LaurentPoly, n: usize) -> LaurentPoly {
    (1..=n).fold(p.clone(), |acc, i| {
        acc.substitute(Var::x(i), &Scalar::ONE, &Monomial::var_pow(Var::t(i), 2))
    })
}

/// Witness for `o_λ(x^±; ±1)` against the half-integer bialternant in
/// `t_i` with `x_i = t_i^2`: `det(t^{2(λ_j+n-j)+1} ∓ t^{-…}) / det(t^{2(n-j)+1} ∓ t^{-…})`.
/// The candidate is returned in the `t` variables.
pub fn o_odd_half_integer_witness(lam: &Partition, n: usize, z: ZValue) -> Result<Witness, CharError> {
    if lam.length() > n {
        return Err(CharError::LastPartNonzero(lam.to_string()));
    }
    let (plus, zval) = match z {
        ZValue::Plus => (false, Scalar::ONE),
        ZValue::Minus => (true, Scalar::int(-1)),
        ZValue::Symbolic => return o_odd_bialternant_witness(lam, n, OddRowReading::Repaired),
    };
    let nn = n as i64;
    let numerator = det(n, |i, j| pm(Var::t(i + 1), 2 * (lam.part(j) + nn - 1 - j as i64) + 1, plus))?;
    let denominator = det(n, |i, j| pm(Var::t(i + 1), 2 * (nn - 1 - j as i64) + 1, plus))?;
    let universal = o_nm(&lam.with_len(n + 1)?, n, 1)?;
    let candidate = x_to_t_squared(&universal.specialize(&[(Var::z(1), zval)]), n);
    Ok(Witness { numerator, denominator, candidate })
}

/// `o_λ(x^±; z)` for `λ = (λ_1, …, λ_n, 0)`, witness-checked: against the
/// odd orthogonal bialternant for symbolic `z`, and against the half-integer
/// bialternants at `z = ±1`.
pub fn o_odd_closed(lam: &Partition, n: usize, z: ZValue) -> Result<LaurentPoly, CharError> {
    let w = o_odd_half_integer_witness(lam, n, z)?;
    let instance = format!("λ={lam}, n={n}, z={z:?}");
    let formula = match z {
        ZValue::Symbolic => "odd orthogonal bialternant",
        _ => "half-integer orthogonal bialternant",
    };
    if !w.holds() {
        return Err(CharError::DivisionWitnessFailed { formula: formula.into(), instance });
    }
    let universal = o_nm(&lam.with_len(n + 1)?, n, 1)?;
    Ok(match z {
        ZValue::Symbolic => universal,
        ZValue::Plus => universal.specialize(&[(Var::z(1), Scalar::ONE)]),
        ZValue::Minus => universal.specialize(&[(Var::z(1), Scalar::int(-1))]),
    })
}

/// `det(h'_{λ_i-i+j} + [j>1] h'_{λ_i-i-j+2})` of size `n`, with
/// `h'_k = h_k - h_{k-2}` over `x_1^±..x_n^±; z_1..z_m`.
pub fn o_intermediate_det(lam: &Partition, n: usize, m: usize) -> Result<LaurentPoly, CharError> {
    if lam.length() > n {
        return Err(too_long(lam, n));
    }
    let alpha = Alphabet::standard(n, m);
    let h = h_cached(&alpha, lam.part(0) as usize + 2 * n + 2);
    let hp = |k: i64| h_at(&h, k) - h_at(&h, k - 2);
    det(n, |i0, j0| {
        let (i, j) = (i0 as i64 + 1, j0 as i64 + 1);
        let li = lam.part(i0);
        let first = hp(li - i + j);
        if j > 1 {
            first + hp(li - i - j + 2)
        } else {
            first
        }
    })
}

/// Computes the intermediate determinant and asserts it equals the universal
/// orthogonal character on `λ` padded with `m` zeros.
pub fn o_intermediate_reduce(lam: &Partition, n: usize, m: usize) -> Result<LaurentPoly, CharError> {
    let reduced = o_intermediate_det(lam, n, m)?;
    let full = o_nm(&lam.with_len(n + m)?, n, m)?;
    if reduced != full {
        return Err(CharError::ReductionMismatch(format!("λ={lam}, n={n}, m={m}")));
    }
    Ok(reduced)
}
