use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use super::var::{Family, Var};

/// A Laurent monomial: sparse `Var -> exponent`, sorted by variable, with no
/// zero exponents stored.
///
/// # Term order
///
/// Monomials split into a *primary* block (`x`, `t`) and a *parameter* block
/// (`z`, `y`, aux). A monomial is greater when its parameter block is smaller
/// in graded-lex order, and on a tie when its primary block is greater in
/// graded-lex order. Polynomials print in descending order, so a character
/// reads as a polynomial in the parameters with ascending degree whose
/// coefficients are written in descending `x` order:
/// `x1^2 + 1 + x1^-2 + x1*z1 + x1^-1*z1 + z1^2`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: SmallVec<[(Var, i32); 4]>,
}

impl Monomial {
    pub fn one() -> Monomial {
        Monomial { exps: SmallVec::new() }
    }

    pub fn var(v: Var) -> Monomial {
        Monomial::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, e: i32) -> Monomial {
        let mut exps = SmallVec::new();
        if e != 0 {
            exps.push((v, e));
        }
        Monomial { exps }
    }

    /// Builds from arbitrary `(var, exp)` pairs, merging repeats.
    pub fn from_pairs<I: IntoIterator<Item = (Var, i32)>>(pairs: I) -> Monomial {
        let mut out = Monomial::one();
        for (v, e) in pairs {
            out = out.mul(&Monomial::var_pow(v, e));
        }
        out
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, v: Var) -> i32 {
        self.exps
            .binary_search_by(|(w, _)| w.cmp(&v))
            .map(|i| self.exps[i].1)
            .unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Var, i32)> + '_ {
        self.exps.iter().copied()
    }

    pub fn degree(&self) -> i64 {
        self.exps.iter().map(|&(_, e)| e as i64).sum()
    }

    pub fn degree_in(&self, family: Family) -> i64 {
        self.exps
            .iter()
            .filter(|(v, _)| v.family() == family)
            .map(|&(_, e)| e as i64)
            .sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        if other.exps.is_empty() {
            return self.clone();
        }
        if self.exps.is_empty() {
            return other.clone();
        }
        let mut exps = SmallVec::with_capacity(self.exps.len() + other.exps.len());
        let (a, b) = (&self.exps, &other.exps);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    exps.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    exps.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    let e = a[i].1 + b[j].1;
                    if e != 0 {
                        exps.push((a[i].0, e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        exps.extend_from_slice(&a[i..]);
        exps.extend_from_slice(&b[j..]);
        Monomial { exps }
    }

    pub fn pow(&self, k: i32) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial { exps: self.exps.iter().map(|&(v, e)| (v, e * k)).collect() }
    }

    pub fn inverse(&self) -> Monomial {
        self.pow(-1)
    }

    /// Splits off the exponent of `v`, returning `(rest, exponent)`.
    pub fn split_var(&self, v: Var) -> (Monomial, i32) {
        let mut e = 0;
        let exps = self
            .exps
            .iter()
            .copied()
            .filter(|&(w, x)| {
                if w == v {
                    e = x;
                    false
                } else {
                    true
                }
            })
            .collect();
        (Monomial { exps }, e)
    }

    /// Applies a variable renaming; the map must be injective on this monomial.
    pub fn map_vars(&self, f: impl Fn(Var) -> Var) -> Monomial {
        Monomial::from_pairs(self.exps.iter().map(|&(v, e)| (f(v), e)))
    }
}

fn glex<'a>(
    a: impl Iterator<Item = &'a (Var, i32)> + Clone,
    b: impl Iterator<Item = &'a (Var, i32)> + Clone,
) -> Ordering {
    let da: i64 = a.clone().map(|&(_, e)| e as i64).sum();
    let db: i64 = b.clone().map(|&(_, e)| e as i64).sum();
    if da != db {
        return da.cmp(&db);
    }
    let mut a = a.peekable();
    let mut b = b.peekable();
    loop {
        match (a.peek(), b.peek()) {
            (None, None) => return Ordering::Equal,
            (Some(&&(_, ea)), None) => return ea.cmp(&0),
            (None, Some(&&(_, eb))) => return 0.cmp(&eb),
            (Some(&&(va, ea)), Some(&&(vb, eb))) => match va.cmp(&vb) {
                Ordering::Less => return ea.cmp(&0),
                Ordering::Greater => return 0.cmp(&eb),
                Ordering::Equal => {
                    if ea != eb {
                        return ea.cmp(&eb);
                    }
                    a.next();
                    b.next();
                }
            },
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b) = (&self.exps, &other.exps);
        let is_param = |p: &&(Var, i32)| !p.0.family().is_primary();
        let is_primary = |p: &&(Var, i32)| p.0.family().is_primary();
        glex(b.iter().filter(is_param), a.iter().filter(is_param))
            .then_with(|| glex(a.iter().filter(is_primary), b.iter().filter(is_primary)))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return write!(f, "1");
        }
        for (i, (v, e)) in self.exps.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
