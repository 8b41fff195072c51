//! Exact computational toolkit for the representation theory around
//! metaplectic covers of GL(r): affine Hecke algebras in Bernstein normal
//! form, the quantum affine Schur-Weyl bimodule, Gelfand-Graev modules,
//! Coxeter hyperplane arrangements, and local scattering / R-matrices.
//!
//! Everything is computed over an exact coefficient field: fractions of
//! multivariate integer Laurent polynomials in the Hecke parameter `q` and
//! spectral variables `z1..zk`. There is no floating point anywhere; every
//! identity asserted by the test suites is an exact structural equality.

pub mod coeff;
pub mod linalg;
pub mod perm;
pub mod rootsys;
pub mod arrangement;
pub mod hecke;
pub mod qaff;
pub mod schurweyl;
pub mod gelfandgraev;
pub mod scattering;
pub mod report;

pub use coeff::{LaurentPoly, RatFunc, Rational};
pub use linalg::Mat;
