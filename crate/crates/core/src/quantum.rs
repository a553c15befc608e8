//! Per-photon dynamical constants and the two-mode (TE, TM) operator algebra
//! at a fixed mode index.
//!
//! Photons of the mode carry energy ħω, axial momentum ħk_z and the value
//! ħ²k⊥a of the symmetrized momentum product. The helicity operator is
//! off-diagonal in the (TE, TM) basis,
//!
//! ```text
//!   Ŝ_z = (iħ k_z c / 2ω)(a_TE† a_TM - a_TE a_TM†),
//! ```
//!
//! and diagonalizes in the circular combinations (TE ∓ i TM)/√2 with
//! eigenvalues ±ħ k_z c / 2ω. The number operator is kept in its symmetrized
//! form N̂ = (a†a + a a†)/2, so diagonal observables retain a 1/2 zero-point
//! per mode; a flag exposes the normal-ordered variant.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::ModeIndex;

/// Speed of light in the internal unit system.
const C: f64 = 1.0;

/// Per-photon constants of one Weber mode.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct PhotonConstants {
    pub hbar: f64,
    /// ħω
    pub energy: f64,
    /// ħk_z
    pub momentum_z: f64,
    /// ħ²k⊥a — units of linear momentum × angular momentum
    pub a_value: f64,
    /// ±ħk_z c / 2ω
    pub helicity_magnitude: f64,
    /// |ε_κ|² = ħ/(k² k⊥²), the squared electric field per photon
    pub field_per_photon_sq: f64,
}

pub fn photon_constants(mode: &ModeIndex, hbar: f64) -> Result<PhotonConstants> {
    if !(hbar > 0.0) {
        return Err(Error::Domain(format!("hbar must be positive, got {hbar}")));
    }
    let k = mode.k();
    let kp = mode.k_perp();
    Ok(PhotonConstants {
        hbar,
        energy: hbar * mode.omega,
        momentum_z: hbar * mode.k_z,
        a_value: hbar * hbar * kp * mode.a,
        helicity_magnitude: hbar * mode.k_z * C / (2.0 * mode.omega),
        field_per_photon_sq: hbar / (k * k * kp * kp),
    })
}

/// Observables with a closed form on the two-mode block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Observable {
    Energy,
    MomentumZ,
    AValue,
    Helicity,
}

/// Two-mode state at fixed κ.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub enum TwoModeState {
    /// Fock occupations (n_TE, n_TM).
    Fock { n_te: u32, n_tm: u32 },
    /// Coherent amplitudes (α_TE, α_TM).
    Coherent {
        alpha_te: Complex64,
        alpha_tm: Complex64,
    },
}

/// Helicity operator restricted to the single-photon (TE, TM) block:
/// [[0, iλ], [-iλ, 0]] with λ = ħ k_z c / 2ω.
pub fn helicity_matrix(mode: &ModeIndex, hbar: f64) -> [[Complex64; 2]; 2] {
    let lambda = hbar * mode.k_z * C / (2.0 * mode.omega);
    let zero = Complex64::new(0.0, 0.0);
    [
        [zero, Complex64::new(0.0, lambda)],
        [Complex64::new(0.0, -lambda), zero],
    ]
}

/// Single-photon block of a diagonal observable (energy, P_z, 𝔄) or of the
/// helicity. Diagonal blocks include the symmetrized zero-point, so they are
/// (1 + 1/2 + 1/2) = 2 × the per-photon constant on each basis state.
pub fn single_photon_block(
    mode: &ModeIndex,
    observable: Observable,
    hbar: f64,
) -> Result<[[Complex64; 2]; 2]> {
    let pc = photon_constants(mode, hbar)?;
    let zero = Complex64::new(0.0, 0.0);
    let diag = |per_photon: f64| {
        let d = Complex64::new(2.0 * per_photon, 0.0);
        [[d, zero], [zero, d]]
    };
    Ok(match observable {
        Observable::Energy => diag(pc.energy),
        Observable::MomentumZ => diag(pc.momentum_z),
        Observable::AValue => diag(pc.a_value),
        Observable::Helicity => helicity_matrix(mode, hbar),
    })
}

/// Eigenvalues (ascending) and eigenvectors of a Hermitian 2x2 matrix.
pub fn eigen_2x2(m: &[[Complex64; 2]; 2]) -> (f64, f64, [Complex64; 2], [Complex64; 2]) {
    let a = m[0][0].re;
    let d = m[1][1].re;
    let b = m[0][1];
    let tr = a + d;
    let det = a * d - b.norm_sqr();
    let disc = (tr * tr / 4.0 - det).max(0.0).sqrt();
    let lo = tr / 2.0 - disc;
    let hi = tr / 2.0 + disc;
    let vec_for = |lambda: f64| -> [Complex64; 2] {
        // (a - λ) x + b y = 0
        let (x, y) = if b.norm() > 1e-300 {
            (b, Complex64::new(lambda - a, 0.0))
        } else {
            // already diagonal
            if (a - lambda).abs() < (d - lambda).abs() {
                (Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0))
            } else {
                (Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0))
            }
        };
        let n = (x.norm_sqr() + y.norm_sqr()).sqrt();
        [x / n, y / n]
    };
    (lo, hi, vec_for(lo), vec_for(hi))
}

pub fn commutator(
    x: &[[Complex64; 2]; 2],
    y: &[[Complex64; 2]; 2],
) -> [[Complex64; 2]; 2] {
    let mut out = [[Complex64::new(0.0, 0.0); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            let mut acc = Complex64::new(0.0, 0.0);
            for l in 0..2 {
                acc += x[i][l] * y[l][j] - y[i][l] * x[l][j];
            }
            out[i][j] = acc;
        }
    }
    out
}

/// Expectation value of an observable in a two-mode state.
///
/// With `normal_order = false` (the default convention) the symmetrized
/// number operator contributes a zero-point 1/2 per mode to the diagonal
/// observables; `normal_order = true` drops it.
pub fn expectation(
    state: &TwoModeState,
    observable: Observable,
    mode: &ModeIndex,
    hbar: f64,
    normal_order: bool,
) -> Result<f64> {
    let pc = photon_constants(mode, hbar)?;
    let zp = if normal_order { 0.0 } else { 0.5 };
    let (n_te, n_tm, cross_im) = match state {
        TwoModeState::Fock { n_te, n_tm } => (*n_te as f64, *n_tm as f64, 0.0),
        TwoModeState::Coherent { alpha_te, alpha_tm } => {
            let a = alpha_te;
            let b = alpha_tm;
            if !(a.re.is_finite() && a.im.is_finite() && b.re.is_finite() && b.im.is_finite()) {
                return Err(Error::NonFinite("coherent amplitudes"));
            }
            (a.norm_sqr(), b.norm_sqr(), (a.conj() * b).im)
        }
    };
    let weight = n_te + n_tm + 2.0 * zp;
    Ok(match observable {
        Observable::Energy => pc.energy * weight,
        Observable::MomentumZ => pc.momentum_z * weight,
        Observable::AValue => pc.a_value * weight,
        // <S_z> = (iħ k_z c/2ω)(<a_TE† a_TM> - c.c.) = -(ħ k_z c/ω) Im(α_TE* α_TM)
        Observable::Helicity => -2.0 * pc.helicity_magnitude * cross_im,
    })
}
