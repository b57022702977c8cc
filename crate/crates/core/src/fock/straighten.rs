use serde::{Deserialize, Serialize};

use crate::characters::CharFamily;
use crate::partitions::Partition;

use super::FockError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Ket,
    Bra,
}

const MAX_STEPS: usize = 100_000;

/// Rewrites the operator word indexed by `ns` (a ket `Y_{-n_1} ⋯ Y_{-n_l}|0⟩`
/// or a bra `⟨0|Y*_{-n_l} ⋯ Y*_{-n_1}`) as `sign · |λ⟩`. `Ok(None)` means the
/// word vanishes. The resulting partition keeps the length of `ns`.
pub fn straighten(ns: &[i64], family: CharFamily, side: Side) -> Result<Option<(i64, Partition)>, FockError> {
    let mut seq = ns.to_vec();
    let mut sign = 1i64;
    for _ in 0..MAX_STEPS {
        if let Some(i) = (0..seq.len().saturating_sub(1)).find(|&i| seq[i] < seq[i + 1]) {
            let (a, b) = (seq[i], seq[i + 1]);
            if b == a + 1 {
                return Ok(None);
            }
            seq[i] = b - 1;
            seq[i + 1] = a + 1;
            sign = -sign;
            continue;
        }
        let Some(&last) = seq.last() else {
            return Ok(Some((sign, Partition::empty())));
        };
        if last >= 0 {
            let p = Partition::new(&seq).expect("sorted nonnegative sequence is a partition");
            return Ok(Some((sign, p)));
        }
        let l = seq.len() - 1;
        match (side, family) {
            (Side::Ket, _) => return Ok(None),
            (Side::Bra, CharFamily::Symplectic) => {
                if last == -1 {
                    return Ok(None);
                }
                seq[l] = -last - 2;
                sign = -sign;
            }
            (Side::Bra, CharFamily::Orthogonal) => seq[l] = -last,
        }
    }
    Err(FockError::NonTermination(ns.to_vec()))
}

/// The sequence `μ_{σ(i)} - σ(i) + i` for a permutation `σ` of `0..l`, with
/// the sign of `σ`; it straightens to `sign · |μ⟩` on the ket side.
pub fn permuted_sequence(mu: &[i64], sigma: &[usize]) -> (Vec<i64>, i64) {
    let seq = (0..mu.len()).map(|i| mu[sigma[i]] - sigma[i] as i64 + i as i64).collect();
    let mut inversions = 0;
    for i in 0..sigma.len() {
        for j in i + 1..sigma.len() {
            if sigma[i] > sigma[j] {
                inversions += 1;
            }
        }
    }
    (seq, if inversions % 2 == 0 { 1 } else { -1 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::vertex::{bra_seq_apply, ket_seq};
    use crate::fock::{FockVector, PowerSum};
    use crate::partitions::partitions_of;

    fn check_ket(ns: &[i64], family: CharFamily) {
        let lhs = ket_seq(family, ns);
        let rhs = match straighten(ns, family, Side::Ket).unwrap() {
            None => FockVector::zero(),
            Some((s, p)) => ket_seq(family, &p.padded_parts()).scale(&crate::ring::Scalar::int(s)),
        };
        assert_eq!(lhs, rhs, "{ns:?} {family}");
    }

    fn check_bra(ns: &[i64], family: CharFamily) {
        let st = straighten(ns, family, Side::Bra).unwrap();
        for d in 0..=4 {
            for mu in partitions_of(d, d as usize, d) {
                let v: FockVector = FockVector::basis(PowerSum::from_partition(&mu));
                let lhs = bra_seq_apply(family, ns, &v);
                let rhs = match &st {
                    None => crate::ring::Scalar::ZERO,
                    Some((s, p)) => &bra_seq_apply(family, &p.padded_parts(), &v) * &crate::ring::Scalar::int(*s),
                };
                assert_eq!(lhs, rhs, "{ns:?} {family} on {mu}");
            }
        }
    }

    #[test]
    fn examples() {
        assert_eq!(straighten(&[1, 2], CharFamily::Symplectic, Side::Ket).unwrap(), None);
        assert_eq!(
            straighten(&[0, 3], CharFamily::Symplectic, Side::Ket).unwrap(),
            Some((-1, Partition::of(&[2, 1])))
        );
        assert_eq!(straighten(&[1, -1], CharFamily::Symplectic, Side::Ket).unwrap(), None);
    }

    #[test]
    fn ket_words_match_vectors() {
        for family in [CharFamily::Symplectic, CharFamily::Orthogonal] {
            for a in -2..=3 {
                for b in -2..=3 {
                    check_ket(&[a, b], family);
                }
            }
        }
    }

    #[test]
    fn bra_words_match_functionals() {
        for family in [CharFamily::Symplectic, CharFamily::Orthogonal] {
            for a in -3..=2 {
                for b in -3..=2 {
                    check_bra(&[a, b], family);
                }
            }
        }
    }

    #[test]
    fn permuted_sequences() {
        let mu = [3, 1, 0];
        let sigma = [1, 0, 2];
        let (seq, s) = permuted_sequence(&mu, &sigma);
        assert_eq!(straighten(&seq, CharFamily::Symplectic, Side::Ket).unwrap(), Some((s, Partition::new(&mu).unwrap())));
    }
}
