//! The boson Fock space and the vertex operators `Y`, `Y*`, `W`, `W*`.

mod straighten;
mod vector;
mod vertex;

pub use straighten::{permuted_sequence, straighten, Side};
pub use vector::{Coefficient, FockVector, PowerSum};
pub use vertex::{
    apply_mode, bra_apply, bra_seq_apply, evaluate, gamma_plus, ket, ket_seq, matrix_element, matrix_element_direct,
    pairing, Expansion, ModeKind,
};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum FockError {
    #[error("a_0 is not part of the Heisenberg algebra used here")]
    ZeroModeRequested,
    #[error("straightening of {0:?} did not terminate")]
    NonTermination(Vec<i64>),
}
