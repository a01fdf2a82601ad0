//! Numerical verification of doubly logarithmic integral identities.
//!
//! Every identity of the form `∫₀¹ ln(−ln x) R(x) dx = closed form` handled
//! here is checked up to three ways: double-exponential quadrature of the
//! left-hand side, accelerated summation of the equivalent series, and the
//! closed form evaluated through gamma/digamma/zeta/Dirichlet-beta kernels.
//!
//! * [`specfun`] – special-function kernels (Γ, ln Γ, ψ, ζ, η, β, Kummer's series).
//! * [`series`] – alternating (Cohen–Rodriguez-Villegas–Zagier) and phase
//!   (Levin) accelerators and the named series built on them.
//! * [`quadrature`] – tanh-sinh / exp-sinh rules and the `−μ ln x → u` substitution.
//! * [`identities`] – the registry of identities, integrands and closed forms.
//! * [`verifier`] – three-way checks, sweeps and the full matrix.
//! * [`report`] – JSON / Markdown / CSV serialization of results.
//! * [`cli`] – the command-line front end used by the `loglog-lab` binary.

pub mod cli;
pub mod error;
pub mod identities;
pub mod quadrature;
pub mod report;
pub mod series;
pub mod specfun;
pub mod verifier;

pub use error::{Error, Result};

/// Complex scalar used for every integrand, series and closed-form value.
/// Real quantities carry a zero imaginary part.
pub type ComplexValue = num_complex::Complex64;
