use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize};

use super::monomial::Monomial;
use super::scalar::Scalar;
use super::var::{Family, Var};
use super::RingError;

/// Multivariate Laurent polynomial with exact rational coefficients, kept in
/// canonical form (no zero coefficients).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, Scalar>,
}

/// Products with more term pairs than this accumulate in a hash map.
const HASH_MUL_THRESHOLD: usize = 256;

impl LaurentPoly {
    pub fn zero() -> LaurentPoly {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> LaurentPoly {
        LaurentPoly::constant(Scalar::ONE)
    }

    pub fn int(n: i64) -> LaurentPoly {
        LaurentPoly::constant(Scalar::int(n))
    }

    pub fn constant(c: Scalar) -> LaurentPoly {
        LaurentPoly::term(Monomial::one(), c)
    }

    pub fn term(m: Monomial, c: Scalar) -> LaurentPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { terms }
    }

    pub fn var(v: Var) -> LaurentPoly {
        LaurentPoly::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, e: i32) -> LaurentPoly {
        LaurentPoly::term(Monomial::var_pow(v, e), Scalar::ONE)
    }

    /// `v + v^-1`.
    pub fn sym(v: Var) -> LaurentPoly {
        LaurentPoly::var(v) + LaurentPoly::var_pow(v, -1)
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Scalar)>>(it: I) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for (m, c) in it {
            p.add_term(m, &c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    /// The value if this is a constant polynomial (including zero).
    pub fn as_constant(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::ZERO),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending (display) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or(Scalar::ZERO)
    }

    pub fn add_term(&mut self, m: Monomial, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Scalar) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Scalar) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(k, a)| (k.mul(m), a * c)).collect() }
    }

    pub fn pow(&self, k: u32) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self * other`, dropping every term whose `family` degree exceeds `max_degree`.
    pub fn mul_truncated(&self, other: &LaurentPoly, family: Family, max_degree: i64) -> LaurentPoly {
        let mut acc: HashMap<Monomial, Scalar> = HashMap::new();
        for (ma, ca) in &self.terms {
            let da = ma.degree_in(family);
            if da > max_degree {
                continue;
            }
            for (mb, cb) in &other.terms {
                if da + mb.degree_in(family) > max_degree {
                    continue;
                }
                let c = ca * cb;
                *acc.entry(ma.mul(mb)).or_insert(Scalar::ZERO) += &c;
            }
        }
        LaurentPoly::from_hash(acc)
    }

    pub fn truncate(&self, family: Family, max_degree: i64) -> LaurentPoly {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree_in(family) <= max_degree)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Terms whose `family` degree equals `degree`.
    pub fn homogeneous_part(&self, family: Family, degree: i64) -> LaurentPoly {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree_in(family) == degree)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    fn from_hash(acc: HashMap<Monomial, Scalar>) -> LaurentPoly {
        LaurentPoly { terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    fn mul_impl(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
        if a.is_zero() || b.is_zero() {
            return LaurentPoly::zero();
        }
        if a.len() == 1 {
            let (m, c) = a.terms.iter().next().unwrap();
            return b.mul_monomial(m, c);
        }
        if b.len() == 1 {
            let (m, c) = b.terms.iter().next().unwrap();
            return a.mul_monomial(m, c);
        }
        if a.len() * b.len() <= HASH_MUL_THRESHOLD {
            let mut out = LaurentPoly::zero();
            for (ma, ca) in &a.terms {
                for (mb, cb) in &b.terms {
                    out.add_term(ma.mul(mb), &(ca * cb));
                }
            }
            return out;
        }
        let mut acc: HashMap<Monomial, Scalar> = HashMap::with_capacity(a.len() * b.len() / 2);
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                let c = ca * cb;
                match acc.entry(ma.mul(mb)) {
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                    std::collections::hash_map::Entry::Occupied(mut e) => {
                        *e.get_mut() += &c;
                    }
                }
            }
        }
        LaurentPoly::from_hash(acc)
    }

    /// Exact value at a point; every variable present must be assigned a nonzero value.
    pub fn eval(&self, point: &HashMap<Var, Scalar>) -> Result<Scalar, RingError> {
        let mut total = Scalar::ZERO;
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in m.iter() {
                let x = point.get(&v).ok_or(RingError::MissingAssignment(v))?;
                if x.is_zero() {
                    return Err(RingError::ZeroAssignedToLaurentVariable(v));
                }
                t *= &x.pow(e);
            }
            total += &t;
        }
        Ok(total)
    }

    /// Replaces `v^e` by `(c * m)^e` everywhere. `c` must be nonzero when `v`
    /// occurs with a negative exponent.
    pub fn substitute(&self, v: Var, c: &Scalar, m: &Monomial) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (mono, coeff) in &self.terms {
            let (rest, e) = mono.split_var(v);
            if e == 0 {
                out.add_term(mono.clone(), coeff);
                continue;
            }
            out.add_term(rest.mul(&m.pow(e)), &(coeff * &c.pow(e)));
        }
        out
    }

    /// Partial evaluation: substitutes a scalar for each listed variable.
    pub fn specialize(&self, values: &[(Var, Scalar)]) -> LaurentPoly {
        values
            .iter()
            .fold(self.clone(), |p, (v, c)| p.substitute(*v, c, &Monomial::one()))
    }

    /// Applies a variable renaming (which must not merge variables present in
    /// the same monomial unless the merge is intended).
    pub fn map_vars(&self, f: impl Fn(Var) -> Var) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(m.map_vars(&f), c);
        }
        out
    }

    pub fn swap_vars(&self, a: Var, b: Var) -> LaurentPoly {
        self.map_vars(|v| if v == a { b } else if v == b { a } else { v })
    }

    /// `v -> v^-1`.
    pub fn invert_var(&self, v: Var) -> LaurentPoly {
        self.substitute(v, &Scalar::ONE, &Monomial::var_pow(v, -1))
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        self.terms.keys().flat_map(|m| m.iter().map(|(v, _)| v)).collect()
    }

    /// Largest total degree in `family` over all terms, `None` for zero.
    pub fn max_degree_in(&self, family: Family) -> Option<i64> {
        self.terms.keys().map(|m| m.degree_in(family)).max()
    }

    /// Collects terms by the exponent vector of the given variables; the keys
    /// are monomials in those variables only.
    pub fn coefficients_in(&self, vars: &[Var]) -> BTreeMap<Monomial, LaurentPoly> {
        let mut out: BTreeMap<Monomial, LaurentPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut key = Monomial::one();
            let mut rest = m.clone();
            for &v in vars {
                let (r, e) = rest.split_var(v);
                rest = r;
                key = key.mul(&Monomial::var_pow(v, e));
            }
            out.entry(key).or_default().add_term(rest, c);
        }
        out
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(Scalar::is_integer)
    }

    pub fn require_integer(&self) -> Result<(), RingError> {
        match self.terms.iter().find(|(_, c)| !c.is_integer()) {
            None => Ok(()),
            Some((m, c)) => Err(RingError::NonIntegerCoefficient(format!("{c} at {m}"))),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("LaurentPoly serializes")
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let (big, small) = if self.len() >= rhs.len() { (self, rhs) } else { (rhs, self) };
        let mut out = big.clone();
        for (m, c) in &small.terms {
            out.add_term(m.clone(), c);
        }
        out
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        LaurentPoly::mul_impl(self, rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -&*c;
        }
        self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$f(&rhs)
            }
        }
        impl<'a> $tr<&'a LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: &'a LaurentPoly) -> LaurentPoly {
                (&self).$f(rhs)
            }
        }
        impl<'a> $tr<LaurentPoly> for &'a LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$f(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c);
        }
    }
}

impl AddAssign<LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: LaurentPoly) {
        if self.is_zero() {
            *self = rhs;
        } else {
            *self += &rhs;
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), &-c);
        }
    }
}

impl MulAssign<&LaurentPoly> for LaurentPoly {
    fn mul_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self * rhs;
    }
}

impl From<Scalar> for LaurentPoly {
    fn from(c: Scalar) -> Self {
        LaurentPoly::constant(c)
    }
}

impl From<i64> for LaurentPoly {
    fn from(n: i64) -> Self {
        LaurentPoly::int(n)
    }
}

impl From<Var> for LaurentPoly {
    fn from(v: Var) -> Self {
        LaurentPoly::var(v)
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        let mut acc = LaurentPoly::zero();
        for p in iter {
            acc += p;
        }
        acc
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

struct Exps<'a>(&'a Monomial);

impl Serialize for Exps<'_> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(None)?;
        for (v, e) in self.0.iter() {
            map.serialize_entry(&v.to_string(), &e)?;
        }
        map.end()
    }
}

#[derive(Serialize)]
struct TermOut<'a> {
    coeff: String,
    exps: Exps<'a>,
}

#[derive(Deserialize)]
struct TermIn {
    coeff: String,
    #[serde(default)]
    exps: BTreeMap<Var, i32>,
}

impl Serialize for LaurentPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.terms().map(|(m, c)| TermOut { coeff: c.to_string(), exps: Exps(m) }))
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = Vec::<TermIn>::deserialize(d)?;
        let mut p = LaurentPoly::zero();
        for t in raw {
            let c: Scalar = t.coeff.parse().map_err(serde::de::Error::custom)?;
            p.add_term(Monomial::from_pairs(t.exps), &c);
        }
        Ok(p)
    }
}

impl FromStr for LaurentPoly {
    type Err = RingError;

    /// Parses the canonical text form, e.g. `x1^2 - 3/2*x1*z2 + 1`.
    /// Terms may appear in any order and repeat.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |msg: &str| RingError::Parse(format!("{msg} in `{s}`"));
        let src: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if src.is_empty() {
            return Err(err("empty input"));
        }
        let bytes = src.as_bytes();
        let mut pieces: Vec<(bool, &str)> = Vec::new();
        let mut start = 0;
        let mut negative = false;
        for i in 0..=bytes.len() {
            let at_sign = i < bytes.len() && (bytes[i] == b'+' || bytes[i] == b'-');
            let after_caret = i > 0 && bytes[i - 1] == b'^';
            if i == bytes.len() || (at_sign && !after_caret) {
                let piece = &src[start..i];
                if i == 0 {
                    // leading sign
                } else if piece.is_empty() {
                    return Err(err("empty term"));
                } else {
                    pieces.push((negative, piece));
                }
                if i < bytes.len() {
                    negative = bytes[i] == b'-';
                    start = i + 1;
                }
            }
        }
        let mut p = LaurentPoly::zero();
        for (neg, piece) in pieces {
            let mut coeff = Scalar::ONE;
            let mut mono = Monomial::one();
            for factor in piece.split('*') {
                if factor.is_empty() {
                    return Err(err("empty factor"));
                }
                if factor.starts_with(|c: char| c.is_ascii_digit()) {
                    let c: Scalar = factor.parse().map_err(|_| err("bad coefficient"))?;
                    coeff = &coeff * &c;
                    continue;
                }
                let (name, exp) = match factor.split_once('^') {
                    Some((n, e)) => (n, e.parse::<i32>().map_err(|_| err("bad exponent"))?),
                    None => (factor, 1),
                };
                let v: Var = name.parse().map_err(|_| err("bad variable"))?;
                mono = mono.mul(&Monomial::var_pow(v, exp));
            }
            if neg {
                coeff = -coeff;
            }
            p.add_term(mono, &coeff);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn add_examples() {
        assert_eq!(p("x1 + x1^-1") + LaurentPoly::zero(), p("x1 + x1^-1"));
        assert!((p("x1") + p("-x1")).is_zero());
        assert_eq!(p("x1 + 1") + p("x1^-1 - 1"), p("x1 + x1^-1"));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(p("x1 - x1^-1") * p("x1 + x1^-1"), p("x1^2 - x1^-2"));
        assert_eq!(p("x1 + x1^-1").pow(2).to_string(), "x1^2 + 2 + x1^-2");
        let q = p("3*x1*z2 - 7 + y1^-3");
        assert_eq!(&q * &LaurentPoly::one(), q);
    }

    #[test]
    fn eval_examples() {
        let pt: HashMap<Var, Scalar> = [(Var::x(1), Scalar::int(2))].into_iter().collect();
        assert_eq!(p("x1 + x1^-1").eval(&pt).unwrap(), Scalar::ratio(5, 2));
        assert_eq!(LaurentPoly::zero().eval(&HashMap::new()).unwrap(), Scalar::ZERO);
        let pt: HashMap<Var, Scalar> = [(Var::x(1), Scalar::int(3))].into_iter().collect();
        assert_eq!(p("x1^2 - x1^-2").eval(&pt).unwrap(), Scalar::ratio(80, 9));
        assert!(matches!(
            p("x1 + z1").eval(&pt),
            Err(RingError::MissingAssignment(v)) if v == Var::z(1)
        ));
        let zero: HashMap<Var, Scalar> = [(Var::x(1), Scalar::ZERO)].into_iter().collect();
        assert!(matches!(
            p("x1^-1").eval(&zero),
            Err(RingError::ZeroAssignedToLaurentVariable(_))
        ));
    }

    #[test]
    fn display_order_and_format() {
        assert_eq!(p("z1 + x1^-1 + x1").to_string(), "x1 + x1^-1 + z1");
        assert_eq!(p("-3/2*x1*z1 + x1^2").to_string(), "x1^2 - 3/2*x1*z1");
        assert_eq!(p("-1").to_string(), "-1");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn parse_round_trips() {
        for s in ["x1^2 + 2 + x1^-2", "-x1*z1^-3 + 5", "2/3*t1^4 - a1"] {
            assert_eq!(p(s).to_string().parse::<LaurentPoly>().unwrap(), p(s));
        }
        assert!("".parse::<LaurentPoly>().is_err());
        assert!("x1 + + x2".parse::<LaurentPoly>().is_err());
        assert!("q1".parse::<LaurentPoly>().is_err());
    }

    #[test]
    fn json_round_trips() {
        let q = p("x1^2 - 3*x1*z1 + 1/2");
        let text = serde_json::to_string(&q).unwrap();
        assert_eq!(
            text,
            r#"[{"coeff":"1","exps":{"x1":2}},{"coeff":"1/2","exps":{}},{"coeff":"-3","exps":{"x1":1,"z1":1}}]"#
        );
        assert_eq!(serde_json::from_str::<LaurentPoly>(&text).unwrap(), q);
    }

    #[test]
    fn substitution_and_inversion() {
        let q = p("x1^2 + x1^-1*z1");
        assert_eq!(q.invert_var(Var::x(1)), p("x1^-2 + x1*z1"));
        assert_eq!(q.substitute(Var::x(1), &Scalar::int(2), &Monomial::var(Var::t(1))), p("4*t1^2 + 1/2*t1^-1*z1"));
        assert_eq!(q.specialize(&[(Var::z(1), Scalar::int(-1))]), p("x1^2 - x1^-1"));
    }

    #[test]
    fn truncated_product_matches_full_then_truncate() {
        let a = p("1 + y1 + y1^2*x1 + y2");
        let b = p("1 - y1*y2 + y2^3");
        assert_eq!(a.mul_truncated(&b, Family::Y, 2), (&a * &b).truncate(Family::Y, 2));
    }

    #[test]
    fn integrality() {
        assert!(p("2*x1 - 3").require_integer().is_ok());
        assert!(matches!(p("1/2*x1").require_integer(), Err(RingError::NonIntegerCoefficient(_))));
    }
}
