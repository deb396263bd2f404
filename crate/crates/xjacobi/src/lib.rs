//! Exceptional Jacobi and Romanovski–Jacobi polynomials from rational Darboux
//! transformations of the Jacobi equation.
//!
//! The crate is layered bottom-up:
//!
//! * [`ratpoly`], [`ratfn`], [`rational`] — exact arithmetic over ℚ and Sturm root counting;
//! * [`jacobi`] — classical and Romanovski–Jacobi polynomials and their contiguous relations;
//! * [`xconstruct`] — polynomial determinants, X_m-Jacobi and XR-Jacobi polynomials;
//! * [`seeds`] — seed classification, energies and admissibility;
//! * [`sle`] — reference polynomial fractions, Heine coefficients, exact ODE residuals;
//! * [`quadrature`], [`orthocheck`] — Gauss–Jacobi rules, Gram matrices, zero counts;
//! * [`potentials`] — Pöschl–Teller potentials, their deformations and a finite-difference solver;
//! * [`exec`] — sequential/parallel execution of independent work items.

pub mod error;
pub mod exec;
pub mod jacobi;
pub mod orthocheck;
pub mod potentials;
pub mod quadrature;
pub mod rational;
pub mod ratfn;
pub mod ratpoly;
pub mod seeds;
pub mod sle;
pub mod xconstruct;

pub use error::{Error, Result};
pub use rational::Rat;
pub use ratpoly::RatPoly;
