//! Exact computations on the real neutral fermion Fock space: Clifford and
//! Heisenberg modes, three families of Virasoro representations, q-series
//! characters, singular vectors and sector decompositions.

pub mod error;
pub mod fock;
pub mod linalg;
pub mod modes;
pub mod rep;
pub mod scalar;
pub mod series;

pub use error::{Error, Result};
pub use fock::{
    enumerate_basis, vacuum_like, BasisFilter, BasisVector, GradingRecord, Parity, State,
};
pub use modes::{apply_op, commutator_apply, ModeEngine, OperatorSpec};
pub use rep::{DecompositionCase, DecompositionReport, SectorSpec, Selector};
pub use scalar::{normalize_radicand, Surd};
pub use series::{CharSeries, KnownCharacter, ProductForm, SumForm};
