//! Stieltjes constants γ_k(a), the Hurwitz zeta function and its s-derivatives,
//! and derivatives of real Dirichlet L-functions, each computed through several
//! independent representations, plus a registry that checks the closed-form
//! identities connecting them.
//!
//! The crate is layered bottom-up:
//!
//! * [`numerics`]: summation, quadrature, Γ/ψ family, Stirling numbers.
//! * [`hurwitz`]: ζ(s,a) and ζ^{(j)}(s,a).
//! * [`stieltjes`]: γ_k(a) by integral, Euler–Maclaurin, and series routes.
//! * [`dirichlet`]: real characters and L-function values/derivatives.
//! * [`fracpart`]: fractional-part integrals I_n.
//! * [`identities`]: the verification registry and report serialization.
//!
//! Data-parallel loops go through [`par`], which uses rayon when the
//! `parallel` feature is enabled and falls back to sequential iteration
//! otherwise. Results never depend on the choice.

pub mod dirichlet;
pub mod error;
pub mod fracpart;
pub mod hurwitz;
pub mod identities;
pub mod numerics;
pub mod par;
pub mod stieltjes;

pub use error::{Error, Result};
pub use numerics::{QuadratureSpec, Rational};
