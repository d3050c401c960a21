//! Exact simulation of redundant string-symmetry error correction for
//! measurement-based teleportation on graph states.
//!
//! The library is organized around the flow of a teleportation experiment:
//!
//! * [`pauli`] — phase-tracked Pauli strings and the symmetry algebra
//!   (stabilizer construction, subgroup filtering, factorization).
//! * [`graph`] — graph-state specifications: the chain, diamond and
//!   hourglass families, path enumeration, preparation circuits.
//! * [`sim`] — dense statevector / density-matrix engine with projective
//!   measurement, branch enumeration and partial traces.
//! * [`noise`] — coherent ZZ-crosstalk, single-qubit axis errors and the
//!   two-qubit depolarizing channel.
//! * [`teleport`] — the measurement-based teleportation protocol with
//!   path-dependent byproduct corrections and fidelity estimators.
//! * [`spt`] — entanglement-spectrum and string-order diagnostics.
//! * [`gslab`] — exact-diagonalization ground states of perturbed
//!   stabilizer Hamiltonians and teleportation through them.
//! * [`calibrate`] — path calibration and the 3-row majority-vote decoder.
//! * [`experiment`] — seeded, reproducible experiment runner with CSV/JSON
//!   outputs.

pub mod calibrate;
pub mod error;
pub mod experiment;
pub mod graph;
pub mod gslab;
pub mod noise;
pub mod pauli;
pub mod rng;
pub mod sim;
pub mod spt;
pub mod teleport;

pub use error::{Error, Result};
