//! Spacetime-algebra formulation of two-potential electrodynamics and a
//! verification toolkit for its static soliton solution.
//!
//! Modules, bottom up:
//! - [`clifford`]: dense Cl(1,3) multivectors, products, involutions, split.
//! - [`fields`]: constants, soliton parameters, potentials, constraint, shell current.
//! - [`differential`]: finite-difference Dirac operator and residual checks.
//! - [`observables`]: energy/momentum densities and exact volume integrals.
//! - [`verify`]: calibration and the end-to-end report.
//! - [`config`] and [`cli`]: run configuration and the command-line front end.

pub mod cli;
pub mod clifford;
pub mod config;
pub mod differential;
pub mod error;
pub mod fields;
pub mod observables;
pub mod quadrature;
pub mod vec3;
pub mod verify;

pub use clifford::{Multivector, RelativeSplit};
pub use error::{Error, Result};
pub use fields::{PhysicalConstants, SolitonParams};
