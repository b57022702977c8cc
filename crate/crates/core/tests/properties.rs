use std::collections::HashMap;

use proptest::prelude::*;

use unichar_core::characters::{jt_raw, skew_character, universal_character, CharFamily};
use unichar_core::fock::{ket_seq, pairing, permuted_sequence, straighten, Side};
use unichar_core::partitions::{contains, interlaces, Partition};
use unichar_core::ring::{LaurentPoly, Monomial, PolyMatrix, Scalar, Var};
use unichar_core::series::Alphabet;

fn var() -> impl Strategy<Value = Var> {
    prop_oneof![(1usize..=2).prop_map(Var::x), (1usize..=2).prop_map(Var::z)]
}

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((prop::collection::vec((var(), -2i32..=2), 0..3), -4i64..=4, 1i64..=3), 0..4).prop_map(
        |terms| {
            LaurentPoly::from_terms(
                terms.into_iter().map(|(pairs, n, d)| (Monomial::from_pairs(pairs), Scalar::ratio(n, d))),
            )
        },
    )
}

fn partition(max_len: usize, max_part: i64) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=max_part, 0..=max_len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(&v).unwrap()
    })
}

fn family() -> impl Strategy<Value = CharFamily> {
    prop_oneof![Just(CharFamily::Symplectic), Just(CharFamily::Orthogonal)]
}

fn point() -> HashMap<Var, Scalar> {
    [(Var::x(1), Scalar::ratio(3, 2)), (Var::x(2), Scalar::int(-2)), (Var::z(1), Scalar::ratio(5, 7)), (Var::z(2), Scalar::int(3))]
        .into()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &LaurentPoly::one(), a.clone());
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in poly(), b in poly()) {
        let at = point();
        let (ea, eb) = (a.eval(&at).unwrap(), b.eval(&at).unwrap());
        prop_assert_eq!((&a * &b).eval(&at).unwrap(), &ea * &eb);
        prop_assert_eq!((&a + &b).eval(&at).unwrap(), &ea + &eb);
    }

    #[test]
    fn text_round_trip(a in poly()) {
        prop_assert_eq!(a.to_string().parse::<LaurentPoly>().unwrap(), a);
    }

    #[test]
    fn determinant_alternates_and_is_multiplicative(entries in prop::collection::vec(poly(), 9), other in prop::collection::vec(poly(), 9)) {
        let m = PolyMatrix::from_fn(3, 3, |i, j| entries[3 * i + j].clone());
        let n = PolyMatrix::from_fn(3, 3, |i, j| other[3 * i + j].clone());
        let d = m.det().unwrap();
        let mut swapped = m.clone();
        swapped.swap_rows(0, 2);
        prop_assert_eq!(swapped.det().unwrap(), -&d);
        let prod = PolyMatrix::from_fn(3, 3, |i, j| (0..3).map(|k| m.get(i, k) * n.get(k, j)).sum());
        prop_assert_eq!(prod.det().unwrap(), &d * &n.det().unwrap());
    }

    #[test]
    fn interlacing_implies_containment(nu in partition(3, 4), lam in partition(3, 4)) {
        if interlaces(&nu, &lam) {
            prop_assert!(contains(&nu, &lam));
        }
    }

    #[test]
    fn characters_are_invariant(f in family(), lam in partition(3, 3)) {
        let (n, m) = (2, 1.max(lam.length().saturating_sub(2)));
        let p = universal_character(f, &Alphabet::standard(n, m), &lam).unwrap();
        prop_assert_eq!(p.invert_var(Var::x(1)), p.clone());
        prop_assert_eq!(p.swap_vars(Var::x(1), Var::x(2)), p.clone());
        let p2 = universal_character(f, &Alphabet::standard(1, 2), &lam.clone()).unwrap();
        prop_assert_eq!(p2.swap_vars(Var::z(1), Var::z(2)), p2.clone());
        prop_assert!(p.is_integral());
    }

    #[test]
    fn skew_by_empty_is_plain(f in family(), lam in partition(3, 3), n in 0usize..=2, m in 1usize..=2) {
        prop_assume!(lam.length() <= n + m);
        let a = Alphabet::standard(n, m);
        prop_assert_eq!(skew_character(f, &a, &lam, &Partition::empty()).unwrap(), universal_character(f, &a, &lam).unwrap());
    }

    #[test]
    fn row_permutation_sign_rule(f in family(), lam in partition(3, 3), perm in Just(vec![0usize, 1, 2]).prop_shuffle()) {
        let a = Alphabet::standard(1, 2);
        let outer = lam.padded(3);
        let shifted: Vec<i64> = (0..3).map(|i| outer[i] - i as i64).collect();
        let permuted: Vec<i64> = (0..3).map(|i| shifted[perm[i]] + i as i64).collect();
        let inversions = (0..3).flat_map(|i| (i + 1..3).map(move |j| (i, j))).filter(|&(i, j)| perm[i] > perm[j]).count();
        let sign = if inversions % 2 == 0 { LaurentPoly::one() } else { LaurentPoly::int(-1) };
        let base = jt_raw(f, &a, &outer, &[]).unwrap();
        prop_assert_eq!(jt_raw(f, &a, &permuted, &[]).unwrap(), &sign * &base);
    }

    #[test]
    fn straightening_closed_form(f in family(), lam in partition(4, 3), perm in Just(vec![0usize, 1, 2, 3]).prop_shuffle()) {
        let parts = lam.padded(4);
        let (seq, sign) = permuted_sequence(&parts, &perm);
        let got = straighten(&seq, f, Side::Ket).unwrap().unwrap();
        prop_assert_eq!(got.0, sign);
        prop_assert_eq!(got.1.padded_parts(), parts);
    }

    #[test]
    fn ket_words_straighten(f in family(), seq in prop::collection::vec(-2i64..=4, 1..=3)) {
        let v = ket_seq(f, &seq);
        match straighten(&seq, f, Side::Ket).unwrap() {
            None => prop_assert!(v.is_zero()),
            Some((s, p)) => {
                let w = ket_seq(f, &p.padded_parts());
                prop_assert_eq!(v, w.scale(&Scalar::int(s)));
            }
        }
    }

    #[test]
    fn pairing_is_orthonormal(f in family(), mu in partition(3, 3), lam in partition(3, 3)) {
        let want = if mu.padded(3) == lam.padded(3) { Scalar::ONE } else { Scalar::ZERO };
        prop_assert_eq!(pairing(f, &mu.with_len(3).unwrap(), &lam.with_len(3).unwrap()), want);
    }
}
