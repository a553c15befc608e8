//! Weber (parabolic-cylindrical) modes of the scalar wave equation and of the
//! electromagnetic field, together with the machinery needed to verify their
//! dynamical constants numerically at desk scale.
//!
//! The crate is organized in layers:
//!
//! - [`numerics`]: complex special functions with error estimates
//!   (gamma, confluent hypergeometric ₁F₁), Gauss-Legendre quadrature and
//!   finite-difference stencils;
//! - [`coords`]: the parabolic-cylindrical chart x + iy = (u + iv)²/2,
//!   scale factors and local frames;
//! - [`scalar`]: scalar Weber modes U, V, ψ, travelling modes and the
//!   symmetry operator 𝔸 = (l_z p_y + p_y l_z)/2 in both coordinate forms;
//! - [`em`]: TE/TM electromagnetic modes built from Hertz potentials via the
//!   vector operators 𝕄 and ℕ;
//! - [`dynamics`]: windowed volume integrals, boundary fluxes and the
//!   identities behind the conserved quantities ℰ, P_z, S_z, ℒ_z and 𝔄;
//! - [`quantum`]: per-photon constants and the two-mode (TE, TM) operator
//!   algebra at fixed mode index;
//! - [`verify`]: the named verification suites used by the CLI and the
//!   acceptance tests.

pub mod coords;
pub mod dynamics;
pub mod em;
pub mod error;
pub mod numerics;
pub mod quantum;
pub mod scalar;
pub mod verify;

pub use coords::{CartesianPoint, LocalFrame, ParabolicPoint};
pub use error::{Error, Result};
pub use numerics::{FDStencil, QuadratureRule, SfValue};
pub use scalar::{AxisSample, ModeIndex, Parity, ScalarSample};
