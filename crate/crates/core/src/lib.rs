//! Quality-diversity search over gate-based quantum circuits.
//!
//! Circuits are encoded as flat real vectors (one scalar per grid position:
//! the integer part picks the gate kind from an ordered gate set, the decimal
//! part picks the rotation angle or CNOT target). Candidate vectors are
//! sampled by CMA emitters, decoded into circuit grids, simulated exactly on
//! a dense statevector, and scored against diagonal graph Hamiltonians
//! (MaxCut, MinVEC, MaxIND, MaxCLI). A 2-D MAP-Elites archive over
//! (sparsity, gate diversity) with annealed acceptance thresholds unifies
//! CMA-ES, CMA-ME and CMA-MAE through a single learning rate `alpha`.
//!
//! Module map:
//! - [`gates`] — gate sets and genome-to-circuit decoding
//! - [`sim`] — dense statevector simulation and diagonal expectations
//! - [`graphs`] — graph instances, generators, edge-list I/O
//! - [`problems`] — the four cost Hamiltonians plus an exhaustive oracle
//! - [`qd`] — measures, elite archive, CMA emitters, step scheduler
//! - [`harness`] — seeded experiment runner with CSV/PPM outputs

pub mod error;
pub mod gates;
pub mod graphs;
pub mod harness;
pub mod problems;
pub mod qd;
pub mod rng;
pub mod sim;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
