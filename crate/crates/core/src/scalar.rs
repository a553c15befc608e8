//! Scalar Weber modes.
//!
//! The transverse profile separates as ψ(u, v) = U(u) V(v) where both axis
//! factors solve Weber (parabolic cylinder) equations,
//!
//! ```text
//!   U'' + (k⊥² u² - 2 k⊥ a) U = 0,      V'' + (k⊥² v² + 2 k⊥ a) V = 0,
//! ```
//!
//! and are expressed through ₁F₁ with ζ = k⊥ t²:
//!
//! ```text
//!   U_{p}(u) = s_p ζ_u^{(n_p-1)/4} e^{-i ζ_u / 2} ₁F₁(n_p/4 - i a/2; n_p/2; i ζ_u)
//! ```
//!
//! with n_e = 1, n_o = 3, and V equal to U with a → -a. For odd parity the
//! printed prefactor ζ^{1/2} = √k⊥ |u| is even in u; the implementation uses
//! √k⊥ · u (equivalently sign(u)√ζ), which realizes the odd eigenfunction
//! U_o(-u) = -U_o(u) and is the analytic odd solution of the same ODE.
//!
//! Second and third derivatives are always produced by ODE substitution
//! rather than by differentiating ₁F₁ repeatedly; this removes one order of
//! cancellation error and keeps the ODE-residual test independent.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::coords::{CartesianPoint, ParabolicPoint};
use crate::error::{Error, Result};
use crate::numerics::{complex_gamma, fd_apply, fd_apply_1d, kummer_1f1, FDStencil};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    /// n_p: 1 for even, 3 for odd.
    pub fn n_p(self) -> f64 {
        match self {
            Parity::Even => 1.0,
            Parity::Odd => 3.0,
        }
    }

    /// Reflection eigenvalue (-1)^p.
    pub fn sign(self) -> f64 {
        match self {
            Parity::Even => 1.0,
            Parity::Odd => -1.0,
        }
    }
}

/// Travelling-mode branch: Ψ_± = (ψ_e ± i ψ_o) e^{i(k_z z - ω t)} / √(2π).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Branch {
    Plus,
    Minus,
}

/// Quantum numbers of one Weber mode (units with c = 1, so k = ω).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModeIndex {
    pub parity: Parity,
    pub omega: f64,
    pub k_z: f64,
    pub a: f64,
}

impl ModeIndex {
    pub fn new(parity: Parity, omega: f64, k_z: f64, a: f64) -> Result<Self> {
        if !(omega > 0.0) || !omega.is_finite() {
            return Err(Error::Domain(format!("omega must be positive, got {omega}")));
        }
        if !k_z.is_finite() || k_z.abs() >= omega {
            return Err(Error::Domain(format!(
                "|k_z| must be < k = ω/c for a transverse structure, got k_z = {k_z}, k = {omega}"
            )));
        }
        if !a.is_finite() {
            return Err(Error::Domain("separation parameter a must be finite".into()));
        }
        Ok(Self {
            parity,
            omega,
            k_z,
            a,
        })
    }

    /// Mode from the CLI-style parameterization: wavelength as the length
    /// unit, k = 2π/λ, k_z = ratio · k.
    pub fn from_ratio(parity: Parity, wavelength: f64, kz_over_k: f64, a: f64) -> Result<Self> {
        if !(wavelength > 0.0) {
            return Err(Error::Domain(format!("wavelength must be positive: {wavelength}")));
        }
        if !(kz_over_k > 0.0 && kz_over_k < 1.0) {
            return Err(Error::Domain(format!(
                "kz_over_k must lie in (0, 1), got {kz_over_k}"
            )));
        }
        let k = 2.0 * std::f64::consts::PI / wavelength;
        Self::new(parity, k, kz_over_k * k, a)
    }

    pub fn k(&self) -> f64 {
        self.omega
    }

    pub fn k_perp(&self) -> f64 {
        (self.omega * self.omega - self.k_z * self.k_z).sqrt()
    }

    pub fn with_parity(&self, parity: Parity) -> Self {
        Self { parity, ..*self }
    }
}

/// Axis factor sample: value and first three derivatives, plus the
/// propagated relative error estimate of the underlying ₁F₁ evaluations.
#[derive(Debug, Clone, Copy)]
pub struct AxisSample {
    pub value: Complex64,
    pub d1: Complex64,
    pub d2: Complex64,
    pub d3: Complex64,
    pub rel_err: f64,
}

/// Transverse profile sample with the partial derivatives needed by the
/// field operators.
#[derive(Debug, Clone, Copy)]
pub struct ScalarSample {
    pub value: Complex64,
    pub d_u: Complex64,
    pub d_v: Complex64,
    pub d_uu: Complex64,
    pub d_uv: Complex64,
    pub d_vv: Complex64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    U,
    V,
}

/// Normalization factor s_p; sec(iaπ) = 1/cosh(aπ) makes it real positive.
pub fn normalization(parity: Parity, a: f64) -> Result<f64> {
    let sech = 1.0 / (a * std::f64::consts::PI).cosh();
    let gamma_arg = Complex64::new(1.0 - parity.n_p() / 4.0, -a / 2.0);
    let g = complex_gamma(gamma_arg)?.value.norm();
    let s = match parity {
        Parity::Even => (std::f64::consts::PI * sech).sqrt() / g,
        Parity::Odd => (2.0 * std::f64::consts::PI * sech).sqrt() / g,
    };
    if !s.is_finite() {
        return Err(Error::NonFinite("normalization factor"));
    }
    Ok(s)
}

/// Evaluate one axis factor (U along u, or V along v) with derivatives.
pub fn eval_axis(mode: &ModeIndex, axis: Axis, t: f64) -> Result<AxisSample> {
    let kp = mode.k_perp();
    if !(kp > 0.0) {
        return Err(Error::Domain("k_perp must be positive".into()));
    }
    let a_signed = match axis {
        Axis::U => mode.a,
        Axis::V => -mode.a,
    };
    if axis == Axis::V && t < 0.0 {
        return Err(Error::Domain(format!("V is defined for v >= 0, got {t}")));
    }
    let n_p = mode.parity.n_p();
    let alpha = Complex64::new(n_p / 4.0, -a_signed / 2.0);
    let beta = Complex64::new(n_p / 2.0, 0.0);
    let zeta = kp * t * t;
    let z = Complex64::new(0.0, zeta);

    let m = kummer_1f1(alpha, beta, z)?;
    let mp = crate::numerics::kummer_1f1_dz(alpha, beta, z)?;
    let s_p = normalization(mode.parity, mode.a)?;

    // W(t) = e^{-iζ/2} M(iζ);  W' = i ζ' e^{-iζ/2} (M' - M/2),  ζ' = 2 k⊥ t
    let phase = Complex64::new(0.0, -0.5 * zeta).exp();
    let w = phase * m.value;
    let dw = Complex64::new(0.0, 2.0 * kp * t) * phase * (mp.value - 0.5 * m.value);

    // parity prefactor: 1 for even, √k⊥ t for odd
    let (pref, dpref) = match mode.parity {
        Parity::Even => (1.0, 0.0),
        Parity::Odd => (kp.sqrt() * t, kp.sqrt()),
    };

    let value = s_p * (pref * w);
    let d1 = s_p * (dpref * w + pref * dw);
    // ODE substitution: X'' = (2 k⊥ a_signed - k⊥² t²) X
    let ode = 2.0 * kp * a_signed - kp * kp * t * t;
    let d2 = ode * value;
    let d3 = ode * d1 - 2.0 * kp * kp * t * value;

    Ok(AxisSample {
        value,
        d1,
        d2,
        d3,
        rel_err: m.rel_err + mp.rel_err,
    })
}

pub fn eval_u(mode: &ModeIndex, u: f64) -> Result<AxisSample> {
    eval_axis(mode, Axis::U, u)
}

pub fn eval_v(mode: &ModeIndex, v: f64) -> Result<AxisSample> {
    eval_axis(mode, Axis::V, v)
}

/// ψ(u, v) = U(u) V(v) with all partials by the product rule.
pub fn eval_psi(mode: &ModeIndex, p: &ParabolicPoint) -> Result<ScalarSample> {
    let us = eval_u(mode, p.u)?;
    let vs = eval_v(mode, p.v)?;
    Ok(combine_axes(&us, &vs))
}

pub(crate) fn combine_axes(us: &AxisSample, vs: &AxisSample) -> ScalarSample {
    ScalarSample {
        value: us.value * vs.value,
        d_u: us.d1 * vs.value,
        d_v: us.value * vs.d1,
        d_uu: us.d2 * vs.value,
        d_uv: us.d1 * vs.d1,
        d_vv: us.value * vs.d2,
    }
}

/// Phase factor e^{i(k_z z - ω t)} / √(2π).
pub fn phase_factor(mode: &ModeIndex, z: f64, t: f64) -> Complex64 {
    Complex64::new(0.0, mode.k_z * z - mode.omega * t).exp()
        / (2.0 * std::f64::consts::PI).sqrt()
}

/// Travelling mode Ψ_± = (ψ_e ± i ψ_o) e^{i(k_z z - ω t)} / √(2π); both
/// parities share (ω, k_z, a).
pub fn eval_traveling(
    mode: &ModeIndex,
    branch: Branch,
    p: &ParabolicPoint,
    z: f64,
    t: f64,
) -> Result<Complex64> {
    let psi_e = eval_psi(&mode.with_parity(Parity::Even), p)?.value;
    let psi_o = eval_psi(&mode.with_parity(Parity::Odd), p)?.value;
    let i = Complex64::new(0.0, 1.0);
    let combo = match branch {
        Branch::Plus => psi_e + i * psi_o,
        Branch::Minus => psi_e - i * psi_o,
    };
    Ok(combo * phase_factor(mode, z, t))
}

/// The symmetry operator on a sampled field:
/// 𝔸 f = [v² ∂²_u f - u² ∂²_v f] / (2 h²).
///
/// For a Weber mode this returns k⊥ a · ψ at the point.
pub fn apply_a_parabolic(sample: &ScalarSample, p: &ParabolicPoint) -> Result<Complex64> {
    let h2 = p.h2();
    if h2 == 0.0 {
        return Err(Error::Domain(
            "A-operator singular on the focal line (u, v) = (0, 0)".into(),
        ));
    }
    Ok((p.v * p.v * sample.d_uu - p.u * p.u * sample.d_vv) / (2.0 * h2))
}

/// Cartesian form 𝔸 = (1/2) ∂_x + y ∂²_xy - x ∂²_y applied with
/// finite-difference stencils to an arbitrary sampler.
pub fn apply_a_cartesian<F>(
    sampler: F,
    c: &CartesianPoint,
    stencil: &FDStencil,
) -> Result<Complex64>
where
    F: Fn(&CartesianPoint) -> Result<Complex64> + Copy,
{
    let point = [c.x, c.y, c.z];
    let f3 = |p: [f64; 3]| sampler(&CartesianPoint::new(p[0], p[1], p[2]));
    let d1 = FDStencil::new(1, stencil.accuracy, stencil.step)?;
    let d2 = FDStencil::new(2, stencil.accuracy, stencil.step)?;

    let dx = fd_apply(f3, point, 0, &d1)?;
    let dyy = fd_apply(f3, point, 1, &d2)?;
    // mixed partial: outer d/dx of the inner d/dy estimate
    let dxy = fd_apply_1d(
        |x| {
            fd_apply(f3, [x, c.y, c.z], 1, &d1)
        },
        c.x,
        &d1,
    )?;
    Ok(0.5 * dx + c.y * dxy - c.x * dyy)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coords::{from_cartesian, to_cartesian};
    use approx::assert_relative_eq;

    /// Mode of the reference configuration: λ = 1, k_z = 0.995 k, a = -2.
    pub(crate) fn fig_mode(parity: Parity) -> ModeIndex {
        ModeIndex::from_ratio(parity, 1.0, 0.995, -2.0).unwrap()
    }

    #[test]
    fn mode_index_invariants() {
        assert!(ModeIndex::new(Parity::Even, 1.0, 1.0, 0.0).is_err());
        assert!(ModeIndex::new(Parity::Even, -1.0, 0.0, 0.0).is_err());
        assert!(ModeIndex::new(Parity::Even, 1.0, 0.5, f64::NAN).is_err());
        let m = fig_mode(Parity::Even);
        assert_relative_eq!(m.k_perp(), 0.6275326410661563418874968, max_relative = 1e-14);
    }

    #[test]
    fn normalization_oracle_values() {
        // a = 0: s_e = √π/Γ(3/4), s_o = √(2π)/Γ(1/4)  (mpmath, 60 digits)
        assert_relative_eq!(
            normalization(Parity::Even, 0.0).unwrap(),
            1.446409084632077142535701,
            max_relative = 1e-12
        );
        assert_relative_eq!(
            normalization(Parity::Odd, 0.0).unwrap(),
            0.6913673390362933505327931,
            max_relative = 1e-12
        );
        assert_relative_eq!(
            normalization(Parity::Even, -2.0).unwrap(),
            0.2098620567196561761416628,
            max_relative = 1e-12
        );
        assert_relative_eq!(
            normalization(Parity::Odd, -2.0).unwrap(),
            0.2912084427515776720712114,
            max_relative = 1e-12
        );
    }

    #[test]
    fn origin_values() {
        for a in [-2.0, 0.0, 1.5] {
            let me = ModeIndex::from_ratio(Parity::Even, 1.0, 0.995, a).unwrap();
            let mo = ModeIndex::from_ratio(Parity::Odd, 1.0, 0.995, a).unwrap();
            let se = normalization(Parity::Even, a).unwrap();
            assert_relative_eq!(eval_u(&me, 0.0).unwrap().value.re, se, max_relative = 1e-13);
            assert_eq!(eval_u(&me, 0.0).unwrap().value.im, 0.0);
            assert_eq!(eval_u(&mo, 0.0).unwrap().value.norm(), 0.0);
            assert_eq!(eval_v(&mo, 0.0).unwrap().value.norm(), 0.0);
            assert_relative_eq!(eval_v(&me, 0.0).unwrap().value.re, se, max_relative = 1e-13);
            // ψ(0,0) = s_e² even, 0 odd
            let origin = ParabolicPoint::new(0.0, 0.0, 0.0).unwrap();
            assert_relative_eq!(
                eval_psi(&me, &origin).unwrap().value.re,
                se * se,
                max_relative = 1e-12
            );
            assert_eq!(eval_psi(&mo, &origin).unwrap().value.norm(), 0.0);
        }
    }

    #[test]
    fn oracle_values_reference_mode() {
        // mpmath, 60 digits, k⊥ = 2π√(1 - 0.995²), a = -2
        let ue = eval_u(&fig_mode(Parity::Even), 1.0).unwrap().value;
        assert_relative_eq!(ue.re, -0.006197525664606796536177756, max_relative = 1e-9);
        assert!(ue.im.abs() < 1e-14);
        let uo = eval_u(&fig_mode(Parity::Odd), 1.0).unwrap().value;
        assert_relative_eq!(uo.re, 0.1421430113487095526535294, max_relative = 1e-10);
        let ue2 = eval_u(&fig_mode(Parity::Even), 6.5).unwrap().value;
        assert_relative_eq!(ue2.re, 0.03392766236578003058551252, max_relative = 1e-10);
    }

    #[test]
    fn v_is_u_with_a_flipped() {
        let m = ModeIndex::from_ratio(Parity::Odd, 1.0, 0.8, 1.25).unwrap();
        let m_neg = ModeIndex::from_ratio(Parity::Odd, 1.0, 0.8, -1.25).unwrap();
        for t in [0.3, 1.7, 4.4] {
            let v = eval_v(&m, t).unwrap();
            let u = eval_u(&m_neg, t).unwrap();
            assert!((v.value - u.value).norm() <= 1e-13 * u.value.norm());
            assert!((v.d1 - u.d1).norm() <= 1e-13 * u.d1.norm());
        }
    }

    #[test]
    fn parity_of_axis_factors() {
        for parity in [Parity::Even, Parity::Odd] {
            let m = fig_mode(parity);
            for u in [0.2, 1.1, 3.7, 8.4] {
                let plus = eval_u(&m, u).unwrap().value;
                let minus = eval_u(&m, -u).unwrap().value;
                let expect = parity.sign() * plus;
                assert!(
                    (minus - expect).norm() <= 1e-12 * plus.norm().max(1e-30),
                    "parity {parity:?} at u = {u}"
                );
            }
        }
    }

    #[test]
    fn ode_residual_independent_finite_differences() {
        // 8th-order FD of the evaluated values against the Weber equation
        let stencil = FDStencil::new(2, 8, 0.02).unwrap();
        for parity in [Parity::Even, Parity::Odd] {
            for a in [-2.0f64, -0.5, 0.0, 1.5, 3.0] {
                let m = ModeIndex::from_ratio(parity, 1.0, 0.995, a).unwrap();
                let kp = m.k_perp();
                let sp = normalization(parity, a).unwrap();
                for t in [0.4, 2.3, 6.1, 9.97] {
                    let d2_fd =
                        fd_apply_1d(|x| Ok(eval_u(&m, x)?.value), t, &stencil).unwrap();
                    let val = eval_u(&m, t).unwrap().value;
                    let resid = d2_fd + (kp * kp * t * t - 2.0 * kp * a) * val;
                    let scale = val.norm().max(sp);
                    assert!(
                        resid.norm() <= 1e-8 * scale,
                        "parity {parity:?} a {a} t {t}: residual {:.3e}",
                        resid.norm() / scale
                    );
                }
            }
        }
    }

    #[test]
    fn helmholtz_identity_from_samples() {
        let m = fig_mode(Parity::Even);
        let kp = m.k_perp();
        for (u, v) in [(0.7, 1.3), (-2.2, 0.4), (5.0, 3.3)] {
            let p = ParabolicPoint::new(u, v, 0.0).unwrap();
            let s = eval_psi(&m, &p).unwrap();
            let resid = s.d_uu + s.d_vv + kp * kp * p.h2() * s.value;
            assert!(resid.norm() <= 1e-10 * (kp * kp * p.h2() * s.value).norm().max(1e-30));
        }
    }

    #[test]
    fn eigenvalue_property_analytic() {
        for parity in [Parity::Even, Parity::Odd] {
            let m = ModeIndex::from_ratio(parity, 1.0, 0.995, -2.0).unwrap();
            let kp = m.k_perp();
            for (u, v) in [(0.9, 0.8), (-1.4, 2.0), (3.0, 0.3)] {
                let p = ParabolicPoint::new(u, v, 0.0).unwrap();
                let s = eval_psi(&m, &p).unwrap();
                let lhs = apply_a_parabolic(&s, &p).unwrap();
                let rhs = kp * m.a * s.value;
                assert!(
                    (lhs - rhs).norm() <= 1e-10 * rhs.norm().max(1e-20),
                    "parity {parity:?} at ({u}, {v})"
                );
            }
        }
    }

    #[test]
    fn a_operator_on_polynomials() {
        let stencil = FDStencil::new(1, 6, 0.02).unwrap();
        // f = x: A f = 1/2
        let f_x = |c: &CartesianPoint| Ok(Complex64::new(c.x, 0.0));
        let v = apply_a_cartesian(f_x, &CartesianPoint::new(0.7, -0.3, 0.0), &stencil).unwrap();
        assert_relative_eq!(v.re, 0.5, epsilon = 1e-10);
        // f = y: A f = 0
        let f_y = |c: &CartesianPoint| Ok(Complex64::new(c.y, 0.0));
        let v = apply_a_cartesian(f_y, &CartesianPoint::new(0.7, -0.3, 0.0), &stencil).unwrap();
        assert!(v.norm() < 1e-10);
        // f = x²: A f = x
        let f_x2 = |c: &CartesianPoint| Ok(Complex64::new(c.x * c.x, 0.0));
        let v = apply_a_cartesian(f_x2, &CartesianPoint::new(1.3, 0.4, 0.0), &stencil).unwrap();
        assert_relative_eq!(v.re, 1.3, epsilon = 1e-9);
    }

    #[test]
    fn a_operator_parabolic_on_coordinate_functions() {
        // f = x = (u²-v²)/2 has d_uu = 1, d_vv = -1: A f = 1/2
        let p = ParabolicPoint::new(1.2, 0.7, 0.0).unwrap();
        let s = ScalarSample {
            value: Complex64::new(0.0, 0.0),
            d_u: Complex64::new(0.0, 0.0),
            d_v: Complex64::new(0.0, 0.0),
            d_uu: Complex64::new(1.0, 0.0),
            d_uv: Complex64::new(0.0, 0.0),
            d_vv: Complex64::new(-1.0, 0.0),
        };
        let v = apply_a_parabolic(&s, &p).unwrap();
        assert_relative_eq!(v.re, 0.5, max_relative = 1e-14);
        // f = y = u v has vanishing second partials: A f = 0
        let s0 = ScalarSample {
            d_uu: Complex64::new(0.0, 0.0),
            d_vv: Complex64::new(0.0, 0.0),
            ..s
        };
        assert_eq!(apply_a_parabolic(&s0, &p).unwrap().norm(), 0.0);
        let focal = ParabolicPoint::new(0.0, 0.0, 0.0).unwrap();
        assert!(apply_a_parabolic(&s, &focal).is_err());
    }

    #[test]
    fn cartesian_and_parabolic_forms_agree_on_mode() {
        let m = fig_mode(Parity::Odd);
        let kp = m.k_perp();
        let stencil = FDStencil::new(1, 6, 0.02).unwrap();
        let sampler = |c: &CartesianPoint| {
            let p = from_cartesian(c);
            Ok(eval_psi(&m, &p)?.value)
        };
        for (u, v) in [(0.8, 1.1), (-1.6, 0.6)] {
            let p = ParabolicPoint::new(u, v, 0.0).unwrap();
            let c = to_cartesian(&p);
            let fd = apply_a_cartesian(sampler, &c, &stencil).unwrap();
            let s = eval_psi(&m, &p).unwrap();
            let analytic = apply_a_parabolic(&s, &p).unwrap();
            assert!(
                (fd - analytic).norm() <= 1e-6 * analytic.norm().max(1e-12),
                "at ({u}, {v}): fd {fd} analytic {analytic}, expected k⊥ a ψ = {}",
                kp * m.a * s.value
            );
        }
    }

    #[test]
    fn traveling_modes_phase_structure() {
        let m = fig_mode(Parity::Even);
        let p = ParabolicPoint::new(0.9, 1.4, 0.0).unwrap();
        let base = eval_traveling(&m, Branch::Plus, &p, 0.0, 0.0).unwrap();

        // |Ψ±| independent of z and t
        for (z, t) in [(0.0, 0.0), (3.7, 0.0), (0.0, 1.9), (-2.0, 0.77)] {
            let v = eval_traveling(&m, Branch::Plus, &p, z, t).unwrap();
            assert_relative_eq!(v.norm(), base.norm(), max_relative = 1e-13);
        }

        // advancing t by one period multiplies by e^{-2πi} = 1
        let period = 2.0 * std::f64::consts::PI / m.omega;
        let v = eval_traveling(&m, Branch::Plus, &p, 0.0, period).unwrap();
        assert!((v - base).norm() <= 1e-12 * base.norm());

        // reflection u -> -u swaps branches
        let refl = ParabolicPoint::new(-p.u, p.v, 0.0).unwrap();
        let plus_refl = eval_traveling(&m, Branch::Plus, &refl, 0.3, 0.1).unwrap();
        let minus = eval_traveling(&m, Branch::Minus, &p, 0.3, 0.1).unwrap();
        assert!((plus_refl - minus).norm() <= 1e-12 * minus.norm());

        // phase eigenvalue equations: -i ∂_z Ψ = k_z Ψ and i ∂_t Ψ = ω Ψ
        let d = 1e-5;
        let num_dz = (eval_traveling(&m, Branch::Plus, &p, d, 0.0).unwrap()
            - eval_traveling(&m, Branch::Plus, &p, -d, 0.0).unwrap())
            / (2.0 * d);
        assert!(
            (Complex64::new(0.0, -1.0) * num_dz - m.k_z * base).norm() <= 1e-7 * base.norm()
        );
        let num_dt = (eval_traveling(&m, Branch::Plus, &p, 0.0, d).unwrap()
            - eval_traveling(&m, Branch::Plus, &p, 0.0, -d).unwrap())
            / (2.0 * d);
        assert!(
            (Complex64::new(0.0, 1.0) * num_dt - m.omega * base).norm() <= 1e-7 * base.norm()
        );
    }
}
