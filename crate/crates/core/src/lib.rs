//! Grothendieck-group models of the categorified Specht modules of the symmetric group.
//!
//! The crate computes Kazhdan-Lusztig polynomials of `S_n`, right cells, parabolic
//! (antispherical) Kazhdan-Lusztig polynomials, the action of translation functors
//! on the cell module attached to a composition, and the graded bilinear form given
//! by the Cartan pairing of projective-injective modules.
//!
//! Everything is exact: coefficients are arbitrary-precision integers and linear
//! algebra over `Q(v)` is done fraction-free.

pub mod cells;
pub mod form;
pub mod hecke;
mod kl_engine;
pub mod laurent;
pub mod matrix;
pub mod parabolic;
pub mod specht;
pub mod symgroup;
pub mod tableaux;
mod tables;

pub use cells::CellPartition;
pub use form::GramMatrix;
pub use hecke::{HeckeElt, KlTable};
pub use laurent::{LaurentPoly, RationalV};
pub use matrix::PolyMatrix;
pub use parabolic::{AntisphericalElt, ParabolicKlTable};
pub use specht::SpechtModel;
pub use symgroup::{Composition, CosetData, Permutation, SymmetricGroup};
pub use tableaux::{Partition, StandardTableau};
pub use tables::Tables;

/// Largest `n` accepted by default for table construction.
pub const DEFAULT_MAX_N: usize = 7;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("permutations act on different sets: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("not a permutation of 1..n: {0:?}")]
    InvalidPermutation(Vec<usize>),
    #[error("invalid composition: {0}")]
    InvalidComposition(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("generator index {index} out of range for S_{n}")]
    InvalidGenerator { index: usize, n: usize },
    #[error("n = {n} exceeds the configured bound {bound}")]
    BoundExceeded { n: usize, bound: usize },
    #[error("denominator has no invertible lowest term")]
    NonInvertibleDenominator,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("right cell of w_mu is not contained in the coset representatives for mu = {0}")]
    CellEscapesCoset(Composition),
    #[error("{0} is not a shortest coset representative")]
    NotACosetRep(Permutation),
    #[error("{0} is not in the cell basis")]
    NotInCell(Permutation),
    #[error("Gram matrix is singular")]
    SingularGram,
    #[error("crosscheck failed: {0}")]
    CrosscheckFailed(String),
    #[error("identification with the Specht module failed at cycle type {cycle_type}: {got} != {expected}")]
    IdentificationFailed { cycle_type: Partition, got: i64, expected: i64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
