//! Central finite-difference stencils for first and second derivatives,
//! accuracy orders 2 through 8.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// A symmetric central stencil: derivative `order` (1 or 2), even accuracy
/// order, and step size.
#[derive(Debug, Clone, Copy)]
pub struct FDStencil {
    pub order: u8,
    pub accuracy: u8,
    pub step: f64,
}

// coefficients for offsets -m..=m, divided by step^order at apply time
const D1_ACC2: [f64; 3] = [-0.5, 0.0, 0.5];
const D1_ACC4: [f64; 5] = [1.0 / 12.0, -2.0 / 3.0, 0.0, 2.0 / 3.0, -1.0 / 12.0];
const D1_ACC6: [f64; 7] = [
    -1.0 / 60.0,
    3.0 / 20.0,
    -3.0 / 4.0,
    0.0,
    3.0 / 4.0,
    -3.0 / 20.0,
    1.0 / 60.0,
];
const D1_ACC8: [f64; 9] = [
    1.0 / 280.0,
    -4.0 / 105.0,
    1.0 / 5.0,
    -4.0 / 5.0,
    0.0,
    4.0 / 5.0,
    -1.0 / 5.0,
    4.0 / 105.0,
    -1.0 / 280.0,
];
const D2_ACC2: [f64; 3] = [1.0, -2.0, 1.0];
const D2_ACC4: [f64; 5] = [-1.0 / 12.0, 4.0 / 3.0, -5.0 / 2.0, 4.0 / 3.0, -1.0 / 12.0];
const D2_ACC6: [f64; 7] = [
    1.0 / 90.0,
    -3.0 / 20.0,
    3.0 / 2.0,
    -49.0 / 18.0,
    3.0 / 2.0,
    -3.0 / 20.0,
    1.0 / 90.0,
];
const D2_ACC8: [f64; 9] = [
    -1.0 / 560.0,
    8.0 / 315.0,
    -1.0 / 5.0,
    8.0 / 5.0,
    -205.0 / 72.0,
    8.0 / 5.0,
    -1.0 / 5.0,
    8.0 / 315.0,
    -1.0 / 560.0,
];

impl FDStencil {
    pub fn new(order: u8, accuracy: u8, step: f64) -> Result<Self> {
        if !(order == 1 || order == 2) {
            return Err(Error::Domain(format!("unsupported derivative order {order}")));
        }
        if ![2, 4, 6, 8].contains(&accuracy) {
            return Err(Error::Domain(format!("unsupported accuracy order {accuracy}")));
        }
        if !(step > 0.0) || !step.is_finite() {
            return Err(Error::Domain(format!("invalid step {step}")));
        }
        Ok(Self {
            order,
            accuracy,
            step,
        })
    }

    pub fn coefficients(&self) -> &'static [f64] {
        match (self.order, self.accuracy) {
            (1, 2) => &D1_ACC2,
            (1, 4) => &D1_ACC4,
            (1, 6) => &D1_ACC6,
            (1, 8) => &D1_ACC8,
            (2, 2) => &D2_ACC2,
            (2, 4) => &D2_ACC4,
            (2, 6) => &D2_ACC6,
            (2, 8) => &D2_ACC8,
            _ => unreachable!("validated in new"),
        }
    }

    /// Half-width of the stencil footprint in grid points.
    pub fn half_width(&self) -> usize {
        self.coefficients().len() / 2
    }
}

/// Apply a stencil to a one-dimensional sampler at `x0`.
pub fn fd_apply_1d<F>(mut sampler: F, x0: f64, stencil: &FDStencil) -> Result<Complex64>
where
    F: FnMut(f64) -> Result<Complex64>,
{
    let coeffs = stencil.coefficients();
    let m = stencil.half_width() as isize;
    let mut acc = Complex64::new(0.0, 0.0);
    for (idx, &c) in coeffs.iter().enumerate() {
        if c == 0.0 {
            continue;
        }
        let off = idx as isize - m;
        acc += c * sampler(x0 + off as f64 * stencil.step)?;
    }
    Ok(acc / stencil.step.powi(stencil.order as i32))
}

/// Apply a stencil along one Cartesian axis of a sampler on R^3.
pub fn fd_apply<F>(
    sampler: F,
    point: [f64; 3],
    axis: usize,
    stencil: &FDStencil,
) -> Result<Complex64>
where
    F: Fn([f64; 3]) -> Result<Complex64>,
{
    if axis > 2 {
        return Err(Error::Domain(format!("axis {axis} out of range")));
    }
    fd_apply_1d(
        |x| {
            let mut p = point;
            p[axis] = x;
            sampler(p)
        },
        point[axis],
        stencil,
    )
}
