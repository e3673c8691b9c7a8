//! Exact computational toolkit for real zero and stable polynomials.
//!
//! Everything outside the Monte Carlo module works over arbitrary-precision
//! rationals, so identity tests are exact. The main pieces:
//!
//! * [`poly`] — sparse multivariate polynomials with rational coefficients,
//!   parsing/printing and structural operators (shifts, homogenization,
//!   derivatives, multi-affine part, support).
//! * [`realroot`] — exact real-rootedness and root counting via square-free
//!   decomposition and Sturm chains.
//! * [`matrix`] — exact symmetric matrices, determinants, characteristic
//!   polynomials and PSD decisions.
//! * [`certify`] — real-zero / stability verdicts, Rayleigh differences,
//!   sum-of-squares certificate checking.
//! * [`matroid`] — matroids and delta-matroids on small ground sets, plus a
//!   rank-function feasibility solver deciding amalgam existence.
//! * [`amalgam`] — the three constructive amalgamation algorithms
//!   (disjoint-variable, quadratic, determinantal) and the averaging
//!   identities behind the disjoint one.
//! * [`instances`] — the bundled counterexample matroids, their bases
//!   generating polynomials and the shipped SOS certificates.

pub mod amalgam;
pub mod certify;
pub mod error;
pub mod exec;
pub mod instances;
pub mod matrix;
pub mod matroid;
pub mod poly;
pub mod rational;
pub mod realroot;

pub use error::{Error, Result};
pub use rational::Rational;
