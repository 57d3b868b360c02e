//! Barut second- and third-order wave equations in the (1/2,0)⊕(0,1/2)
//! representation.
//!
//! * [`algebra`]: γ matrices, σ tensor, C, Majorana unitary, O(4,2) generators
//! * [`spinors`]: boosts, helicity spinors, the rest-frame relation and its
//!   boosted (Dirac-form) constraint
//! * [`barut`]: second/third-order operators, mass spectra, lepton masses
//! * [`majorana`]: real/imaginary split and recombination
//! * [`noether`]: Lagrangian, Noether invariants on box mode sets
//! * [`fgm`]: Feynman–Gell-Mann operator with external fields
//! * [`verify`]: the identity suites surfaced by the CLI

pub mod algebra;
pub mod error;
pub mod fgm;
pub mod fourvec;
pub mod poly;
pub mod spinors;
pub mod barut;
pub mod majorana;
pub mod noether;
pub mod verify;

pub use error::{Error, Result};
