//! Values checked against independent computations written here from
//! scratch: Weyl ratios evaluated at rational points with a separate
//! rational determinant, brute-force expansions, and hand expansions.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use unichar_core::characters::{
    o_odd_closed, schur, universal_character, CharFamily, CharSpec, ZValue,
};
use unichar_core::fock::{ket, matrix_element, FockVector, PowerSum};
use unichar_core::partitions::{contained_in, enumerate, gt_chains, interlaces, Partition};
use unichar_core::ring::{LaurentPoly, PolyMatrix, Scalar, Var};
use unichar_core::series::{h_alphabet, Alphabet};

type Q = BigRational;

fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

fn qpow(x: &Q, e: i64) -> Q {
    if e >= 0 {
        num_traits::pow(x.clone(), e as usize)
    } else {
        num_traits::pow(x.recip(), (-e) as usize)
    }
}

/// Gaussian elimination over the rationals.
fn qdet(mut a: Vec<Vec<Q>>) -> Q {
    let n = a.len();
    let mut det = Q::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else { return Q::zero() };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det *= a[c][c].clone();
        for r in c + 1..n {
            let f = a[r][c].clone() / a[c][c].clone();
            for k in c..n {
                let v = a[c][k].clone() * f.clone();
                a[r][k] -= v;
            }
        }
    }
    det
}

fn eval(p: &LaurentPoly, point: &[(Var, Q)]) -> Q {
    let at: HashMap<Var, Scalar> =
        point.iter().map(|(v, x)| (*v, format!("{}/{}", x.numer(), x.denom()).parse().unwrap())).collect();
    p.eval(&at).unwrap().to_big()
}

const POINTS: [[(i64, i64); 3]; 2] = [[(2, 1), (3, 1), (5, 2)], [(-3, 2), (7, 3), (1, 4)]];

/// `det(x_j^{λ_i+n-i+1} - x_j^{-(λ_i+n-i+1)}) / det(x_j^{n-i+1} - x_j^{-(n-i+1)})`.
fn sp_weyl(lam: &Partition, xs: &[Q]) -> Q {
    let n = xs.len();
    let alt = |shift: &dyn Fn(usize) -> i64| {
        qdet((0..n).map(|i| xs.iter().map(|x| qpow(x, shift(i)) - qpow(x, -shift(i))).collect()).collect())
    };
    alt(&|i| lam.part(i) + (n - i) as i64) / alt(&|i| (n - i) as i64)
}

/// `c · det(x_j^{l_i} + x_j^{-l_i}) / det(x_j^{n-i} + x_j^{-(n-i)})`, `l_i = λ_i + n - i`,
/// with `c = 2` when `λ_n > 0`.
fn o_weyl(lam: &Partition, xs: &[Q]) -> Q {
    let n = xs.len();
    let sym = |shift: &dyn Fn(usize) -> i64| {
        qdet((0..n).map(|i| xs.iter().map(|x| qpow(x, shift(i)) + qpow(x, -shift(i))).collect()).collect())
    };
    let c = if n > 0 && lam.part(n - 1) > 0 { q(2, 1) } else { Q::one() };
    c * sym(&|i| lam.part(i) + (n - 1 - i) as i64) / sym(&|i| (n - 1 - i) as i64)
}

fn x_point(idx: usize, n: usize) -> Vec<(Var, Q)> {
    (0..n).map(|i| (Var::x(i + 1), q(POINTS[idx][i].0, POINTS[idx][i].1))).collect()
}

#[test]
fn symplectic_matches_weyl_ratio() {
    for n in 1..=3 {
        for lam in enumerate(n, 5) {
            let p = universal_character(CharFamily::Symplectic, &Alphabet::standard(n, 0), &lam).unwrap();
            for idx in 0..POINTS.len() {
                let pt = x_point(idx, n);
                let xs: Vec<Q> = pt.iter().map(|(_, x)| x.clone()).collect();
                assert_eq!(eval(&p, &pt), sp_weyl(&lam, &xs), "sp {lam} n={n}");
            }
        }
    }
}

#[test]
fn orthogonal_matches_weyl_ratio() {
    for n in 1..=3 {
        for lam in enumerate(n, 5) {
            let p = universal_character(CharFamily::Orthogonal, &Alphabet::standard(n, 0), &lam).unwrap();
            for idx in 0..POINTS.len() {
                let pt = x_point(idx, n);
                let xs: Vec<Q> = pt.iter().map(|(_, x)| x.clone()).collect();
                assert_eq!(eval(&p, &pt), o_weyl(&lam, &xs), "o {lam} n={n}");
            }
        }
    }
}

/// `Σ_{a ∈ ℕ^vars, |a| = k} vars^a` over `x_i^{±1}` and the plain `z_j`.
fn h_brute(n: usize, m: usize, k: usize) -> LaurentPoly {
    let mut vars: Vec<LaurentPoly> = Vec::new();
    for i in 1..=n {
        vars.push(LaurentPoly::var(Var::x(i)));
        vars.push(LaurentPoly::var_pow(Var::x(i), -1));
    }
    for j in 1..=m {
        vars.push(LaurentPoly::var(Var::z(j)));
    }
    fn go(vars: &[LaurentPoly], k: usize) -> LaurentPoly {
        match vars.split_first() {
            None if k == 0 => LaurentPoly::one(),
            None => LaurentPoly::zero(),
            Some((v, rest)) => (0..=k).map(|a| &v.pow(a as u32) * &go(rest, k - a)).sum(),
        }
    }
    go(&vars, k)
}

#[test]
fn complete_homogeneous_by_brute_force() {
    for n in 0..=2 {
        for m in 0..=2 {
            let h = h_alphabet(&Alphabet::standard(n, m), 4);
            for k in 0..=4 {
                assert_eq!(h[k], h_brute(n, m, k), "h_{k} n={n} m={m}");
            }
        }
    }
    for n in 1..=2 {
        for k in 0..=4 {
            let p = universal_character(CharFamily::Symplectic, &Alphabet::standard(n, 0), &Partition::of(&[k as i64]));
            assert_eq!(p.unwrap(), h_brute(n, 0, k));
        }
    }
}

#[test]
fn small_hand_expansions() {
    let p = |s: &str| s.parse::<LaurentPoly>().unwrap();
    let sp = |n, m, parts: &[i64]| CharSpec::new(CharFamily::Symplectic, n, m, Partition::of(parts)).compute().unwrap();
    assert_eq!(p("x1 + x1^-1").pow(2), p("x1^2 + 2 + x1^-2"));
    assert_eq!(sp(1, 1, &[1]), p("x1 + x1^-1 + z1"));
    assert_eq!(sp(1, 0, &[1]), p("x1 + x1^-1"));
    assert_eq!(sp(1, 1, &[2]), p("x1^2 + 1 + x1^-2 + z1*x1 + z1*x1^-1 + z1^2"));
    assert_eq!(sp(0, 0, &[]), LaurentPoly::one());
    let o = CharSpec::new(CharFamily::Orthogonal, 1, 1, Partition::of(&[1, 0])).compute().unwrap();
    assert_eq!(o, p("x1 + x1^-1 + z1"));
    let skew = CharSpec::skew(CharFamily::Symplectic, 1, 0, Partition::of(&[2, 0]), Partition::of(&[1])).compute();
    assert_eq!(skew.unwrap(), p("x1 + x1^-1"));
    let s11 = schur(&Partition::of(&[1, 1]), 2).unwrap();
    assert_eq!(s11.vars().len(), 2);
    assert_eq!(s11.len(), 1);
    let at: HashMap<Var, Scalar> = [(Var::x(1), Scalar::int(3))].into();
    assert_eq!(p("x1^2 - x1^-2").eval(&at).unwrap(), Scalar::ratio(80, 9));
}

#[test]
fn odd_orthogonal_closed_forms() {
    let p = |s: &str| s.parse::<LaurentPoly>().unwrap();
    let lam = Partition::of(&[1, 0]);
    assert_eq!(o_odd_closed(&lam, 1, ZValue::Plus).unwrap(), p("x1 + 1 + x1^-1"));
    assert_eq!(o_odd_closed(&lam, 1, ZValue::Minus).unwrap(), p("x1 - 1 + x1^-1"));
}

/// Leibniz expansion over all permutations.
fn leibniz(m: &[Vec<LaurentPoly>]) -> LaurentPoly {
    let n = m.len();
    let mut total = LaurentPoly::zero();
    let mut perm: Vec<usize> = (0..n).collect();
    fn heap(k: usize, perm: &mut Vec<usize>, sign: &mut i64, m: &[Vec<LaurentPoly>], total: &mut LaurentPoly) {
        if k <= 1 {
            let mut t = LaurentPoly::int(*sign);
            for (i, &j) in perm.iter().enumerate() {
                t = &t * &m[i][j];
            }
            *total += &t;
            return;
        }
        for i in 0..k {
            heap(k - 1, perm, sign, m, total);
            if i + 1 < k {
                let j = if k % 2 == 0 { i } else { 0 };
                perm.swap(j, k - 1);
                *sign = -*sign;
            }
        }
    }
    let mut sign = 1;
    heap(n, &mut perm, &mut sign, m, &mut total);
    total
}

#[test]
fn determinant_matches_leibniz() {
    let entries = ["x1 + 1", "z1^-1", "2*x1*z1 - 3", "x2^2", "0", "x1^-1 + x2", "1/2", "z1 - x2", "x1*x2*z1"];
    for shift in 0..entries.len() {
        let rows: Vec<Vec<LaurentPoly>> = (0..3)
            .map(|i| (0..3).map(|j| entries[(3 * i + j + shift) % entries.len()].parse().unwrap()).collect())
            .collect();
        let det = PolyMatrix::from_rows(rows.clone()).unwrap().det().unwrap();
        assert_eq!(det, leibniz(&rows));
    }
}

#[test]
fn partition_counts_by_brute_force() {
    let listed: Vec<Vec<i64>> = enumerate(2, 2).map(|p| p.padded_parts()).collect();
    assert_eq!(listed.len(), 4);
    for l in 0..=4 {
        for w in 0..=6 {
            let mut count = 0;
            let bound = (w + 1) as usize;
            let total = bound.pow(l as u32);
            for code in 0..total {
                let mut c = code;
                let parts: Vec<i64> = (0..l).map(|_| { let d = (c % bound) as i64; c /= bound; d }).collect();
                if parts.windows(2).all(|p| p[0] >= p[1]) && parts.iter().sum::<i64>() <= w {
                    count += 1;
                }
            }
            assert_eq!(enumerate(l, w).count(), count, "l={l} w={w}");
        }
    }
    assert_eq!(enumerate(3, 4).count(), 11);
}

#[test]
fn containment_by_brute_force() {
    let lam = Partition::of(&[3, 1, 1]);
    let brute: Vec<Partition> = enumerate(3, 5).filter(|mu| (0..3).all(|i| mu.part(i) <= lam.part(i))).collect();
    let mut got = contained_in(&lam, 3);
    got.sort();
    let mut want = brute;
    want.sort();
    assert_eq!(got, want);
}

#[test]
fn gt_chains_by_brute_force() {
    // n = 1: z1 = (a), z2 = (b), z3 = λ with interlacing at each step
    for k in 0..=4 {
        let lam = Partition::of(&[k]);
        let mut brute = 0;
        for a in 0..=k {
            for b in 0..=k {
                let (z1, z2) = (Partition::of(&[a]), Partition::of(&[b]));
                if interlaces(&z1, &z2) && interlaces(&z2, &lam) {
                    brute += 1;
                }
            }
        }
        assert_eq!(gt_chains(&lam, 1).unwrap().count(), brute, "k={k}");
    }
    assert_eq!(gt_chains(&Partition::of(&[1]), 1).unwrap().count(), 3);
    // (z1, z2) with 0 ≤ z1 ≤ z2 ≤ 2, including (0, 2); h_2 of three variables at 1
    assert_eq!(gt_chains(&Partition::of(&[2]), 1).unwrap().count(), 6);
}

fn z_mu(ps: &PowerSum) -> Q {
    let mut z = Q::one();
    for (k, mult) in ps.multiplicities() {
        z *= qpow(&q(k as i64, 1), mult as i64);
        z *= Q::from_integer((1..=mult as i64).product::<i64>().into());
    }
    z
}

#[test]
fn single_row_kets_in_power_sums() {
    // Y_{-k}|0> = h_k = Σ p_μ / z_μ
    for k in 0..=5 {
        let v = ket(CharFamily::Symplectic, &Partition::of(&[k]));
        let mut want = FockVector::zero();
        for mu in enumerate(k as usize, k).filter(|p| p.weight() == k) {
            let ps = PowerSum::from_partition(&mu);
            let c = z_mu(&ps).recip();
            want.add_term(ps, &format!("{}/{}", c.numer(), c.denom()).parse().unwrap());
        }
        assert_eq!(v, want, "k={k}");
    }
    let p = |s: &str| s.parse::<LaurentPoly>().unwrap();
    let m = matrix_element(CharFamily::Symplectic, &Partition::of(&[1]), &Partition::of(&[2, 0]), &Alphabet::standard(1, 0));
    assert_eq!(m, p("x1 + x1^-1"));
}
