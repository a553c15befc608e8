//! The parabolic-cylindrical chart x + iy = (u + iv)²/2, z = z, with
//! u ∈ (-∞, ∞) and v ∈ [0, ∞).
//!
//! Surfaces of constant u are half confocal parabolic cylinders opening
//! towards negative x; surfaces of constant v open the opposite way; the
//! common focal line is x = y = 0. Both scale factors equal
//! h = sqrt(u² + v²), which vanishes on the focal line, where the local
//! frame is undefined even though fields stay finite.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ParabolicPoint {
    pub u: f64,
    /// v >= 0
    pub v: f64,
    pub z: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CartesianPoint {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

/// Orthonormal transverse frame and scale factor at a parabolic point.
#[derive(Debug, Clone, Copy)]
pub struct LocalFrame {
    /// Cartesian components of ê_u
    pub e_u: [f64; 2],
    /// Cartesian components of ê_v
    pub e_v: [f64; 2],
    /// h = sqrt(u² + v²)
    pub h: f64,
}

impl ParabolicPoint {
    pub fn new(u: f64, v: f64, z: f64) -> Result<Self> {
        if v < 0.0 {
            return Err(Error::Domain(format!("parabolic v must be >= 0, got {v}")));
        }
        Ok(Self { u, v, z })
    }

    pub fn h(&self) -> f64 {
        self.u.hypot(self.v)
    }

    pub fn h2(&self) -> f64 {
        self.u * self.u + self.v * self.v
    }
}

impl CartesianPoint {
    pub fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }
}

/// x = (u² - v²)/2, y = u v, z unchanged.
pub fn to_cartesian(p: &ParabolicPoint) -> CartesianPoint {
    CartesianPoint {
        x: 0.5 * (p.u * p.u - p.v * p.v),
        y: p.u * p.v,
        z: p.z,
    }
}

/// Inverse chart with the branch v >= 0 and sign(u) = sign(y) for y != 0;
/// on the x-axis, x > 0 maps to (sqrt(2x), 0) and x < 0 to (0, sqrt(-2x)).
pub fn from_cartesian(c: &CartesianPoint) -> ParabolicPoint {
    if c.y == 0.0 {
        return if c.x >= 0.0 {
            ParabolicPoint {
                u: (2.0 * c.x).sqrt(),
                v: 0.0,
                z: c.z,
            }
        } else {
            ParabolicPoint {
                u: 0.0,
                v: (-2.0 * c.x).sqrt(),
                z: c.z,
            }
        };
    }
    let w = Complex64::new(2.0 * c.x, 2.0 * c.y).sqrt();
    let (u, v) = if w.im < 0.0 { (-w.re, -w.im) } else { (w.re, w.im) };
    ParabolicPoint { u, v, z: c.z }
}

/// ê_u = (u, v)/h, ê_v = (-v, u)/h. Degenerate on the focal line.
pub fn frame(p: &ParabolicPoint) -> Result<LocalFrame> {
    let h = p.h();
    if h == 0.0 {
        return Err(Error::Domain(
            "local frame undefined on the focal line (u, v) = (0, 0)".into(),
        ));
    }
    Ok(LocalFrame {
        e_u: [p.u / h, p.v / h],
        e_v: [-p.v / h, p.u / h],
        h,
    })
}

/// Rotate complex parabolic vector components (f_u, f_v, f_z) into Cartesian
/// components at `p`; the z component passes through.
pub fn vector_to_cartesian(
    components: (Complex64, Complex64, Complex64),
    p: &ParabolicPoint,
) -> Result<[Complex64; 3]> {
    let fr = frame(p)?;
    let (fu, fv, fz) = components;
    Ok([
        fu * fr.e_u[0] + fv * fr.e_v[0],
        fu * fr.e_u[1] + fv * fr.e_v[1],
        fz,
    ])
}
