//! Foundational numerics: complex special functions carrying error
//! estimates, Gauss-Legendre quadrature, and finite-difference stencils.
//!
//! Every special-function result is an [`SfValue`], a value paired with a
//! relative error estimate. Oscillatory cancellation is the dominant failure
//! mode for the parameter families used here, so verification code compares
//! against tolerances using these estimates rather than assuming full f64
//! accuracy.

mod dd;
mod gamma;
mod kummer;
mod quadrature;
mod stencil;

pub use gamma::complex_gamma;
pub use kummer::{kummer_1f1, kummer_1f1_dz};
pub use quadrature::{gauss_legendre, gauss_legendre_composite, QuadratureRule};
pub use stencil::{fd_apply, fd_apply_1d, FDStencil};

use num_complex::Complex64;

/// A special-function value with its relative error estimate.
#[derive(Debug, Clone, Copy)]
pub struct SfValue {
    pub value: Complex64,
    /// Estimated relative error of `value`.
    pub rel_err: f64,
}

impl SfValue {
    pub(crate) fn new(value: Complex64, rel_err: f64) -> Self {
        Self { value, rel_err }
    }
}
