//! Teleportation of a polarization qubit, first between three
//! distinguishable qubits and then between three identical photons whose
//! momentum directions enlarge the single-particle space.
//!
//! - [`tensor`]: labeled bases, state vectors and dense operators.
//! - [`distinguishable`]: the three-qubit reference protocol.
//! - [`symmetric`]: bosonic occupation-number spaces over photon modes.
//! - [`identical`]: the identical-photon protocol and its cross-checks.

pub mod distinguishable;
pub mod error;
pub mod identical;
pub mod symmetric;
pub mod tensor;

pub use distinguishable::{BellKind, QubitState};
pub use error::{Error, Result};
pub use symmetric::{ModeLabel, ModeSet, OccupationState, Polarization, SymmetricSpace};
pub use tensor::{Basis, LinearOperator, StateVector, C64, TOL};
