//! TE/TM electromagnetic Weber modes via Hertz potentials.
//!
//! With the monochromatic phase convention e^{i(k_z z - ω t)} the vector
//! operators reduce to
//!
//! ```text
//!   𝕄 Ψ = (∂_ct/h)(ê_u ∂_v - ê_v ∂_u) Ψ  →  ((-ik/h) ∂_v ψ, (ik/h) ∂_u ψ, 0)
//!   ℕ Ψ = (∂_z/h)(ê_u ∂_u + ê_v ∂_v) Ψ - ê_z ∇⊥² Ψ
//!        →  ((ik_z/h) ∂_u ψ, (ik_z/h) ∂_v ψ, k⊥² ψ)
//! ```
//!
//! and the fields of a polarized mode are E = ik A, B = -ik(𝒜_TE ℕ - 𝒜_TM 𝕄)Ψ
//! with A = 𝒜_TE 𝕄Ψ + 𝒜_TM ℕΨ. All public output is in Cartesian
//! components; parabolic components stay internal.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::coords::{frame, vector_to_cartesian, ParabolicPoint};
use crate::error::{Error, Result};
use crate::scalar::{
    combine_axes, eval_u, eval_v, phase_factor, AxisSample, Branch, ModeIndex, Parity,
};

/// Points closer to the focal line than this are nudged off it and flagged;
/// the frame is singular there although the fields stay finite.
pub const FOCAL_CLIP: f64 = 1e-6;

/// TE/TM mode family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    Te,
    Tm,
}

/// Which scalar potential the vector mode is built on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PsiForm {
    /// Single-parity standing profile ψ_p (parity taken from the mode index).
    Standing,
    /// Travelling combination ψ_e ± i ψ_o.
    Traveling(Branch),
}

/// TE/TM amplitude pair (𝒜_TE, 𝒜_TM).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Polarization {
    pub amp_te: Complex64,
    pub amp_tm: Complex64,
}

impl Polarization {
    pub fn new(amp_te: Complex64, amp_tm: Complex64) -> Result<Self> {
        if amp_te.norm() == 0.0 && amp_tm.norm() == 0.0 {
            return Err(Error::Domain(
                "polarization amplitudes must not both vanish".into(),
            ));
        }
        if !(amp_te.re.is_finite()
            && amp_te.im.is_finite()
            && amp_tm.re.is_finite()
            && amp_tm.im.is_finite())
        {
            return Err(Error::NonFinite("polarization amplitudes"));
        }
        Ok(Self { amp_te, amp_tm })
    }

    pub fn pure_te() -> Self {
        Self {
            amp_te: Complex64::new(1.0, 0.0),
            amp_tm: Complex64::new(0.0, 0.0),
        }
    }

    pub fn pure_tm() -> Self {
        Self {
            amp_te: Complex64::new(0.0, 0.0),
            amp_tm: Complex64::new(1.0, 0.0),
        }
    }

    /// Duality rotation (𝒜_TE, 𝒜_TM) → (𝒜_TM, -𝒜_TE), which maps the fields
    /// (E, B) → (B, -E).
    pub fn dual(&self) -> Self {
        Self {
            amp_te: self.amp_tm,
            amp_tm: -self.amp_te,
        }
    }
}

/// Circular-basis amplitudes (𝒜_TE ∓ i 𝒜_TM)/√2; the map is unitary.
pub fn circular_basis(pol: &Polarization) -> (Complex64, Complex64) {
    let i = Complex64::new(0.0, 1.0);
    let s = std::f64::consts::FRAC_1_SQRT_2;
    (
        (pol.amp_te - i * pol.amp_tm) * s,
        (pol.amp_te + i * pol.amp_tm) * s,
    )
}

/// Complex E and B at a spacetime point, Cartesian components.
#[derive(Debug, Clone, Copy)]
pub struct EMFieldSample {
    pub e: [Complex64; 3],
    pub b: [Complex64; 3],
    /// true if the evaluation point was nudged off the focal line
    pub clipped: bool,
}

/// First-order data of the transverse potential profile.
#[derive(Debug, Clone, Copy)]
pub(crate) struct PsiD1 {
    pub value: Complex64,
    pub d_u: Complex64,
    pub d_v: Complex64,
}

pub(crate) fn psi_d1_from_axes(
    form: PsiForm,
    parity: Parity,
    even_u: &AxisSample,
    even_v: &AxisSample,
    odd_u: &AxisSample,
    odd_v: &AxisSample,
) -> PsiD1 {
    let pick = |p: Parity| {
        let (us, vs) = match p {
            Parity::Even => (even_u, even_v),
            Parity::Odd => (odd_u, odd_v),
        };
        PsiD1 {
            value: us.value * vs.value,
            d_u: us.d1 * vs.value,
            d_v: us.value * vs.d1,
        }
    };
    match form {
        PsiForm::Standing => pick(parity),
        PsiForm::Traveling(branch) => {
            let e = pick(Parity::Even);
            let o = pick(Parity::Odd);
            let i = match branch {
                Branch::Plus => Complex64::new(0.0, 1.0),
                Branch::Minus => Complex64::new(0.0, -1.0),
            };
            PsiD1 {
                value: e.value + i * o.value,
                d_u: e.d_u + i * o.d_u,
                d_v: e.d_v + i * o.d_v,
            }
        }
    }
}

fn psi_d1_fresh(mode: &ModeIndex, form: PsiForm, p: &ParabolicPoint) -> Result<PsiD1> {
    match form {
        PsiForm::Standing => {
            let us = eval_u(mode, p.u)?;
            let vs = eval_v(mode, p.v)?;
            let s = combine_axes(&us, &vs);
            Ok(PsiD1 {
                value: s.value,
                d_u: s.d_u,
                d_v: s.d_v,
            })
        }
        PsiForm::Traveling(_) => {
            let me = mode.with_parity(Parity::Even);
            let mo = mode.with_parity(Parity::Odd);
            let eu = eval_u(&me, p.u)?;
            let ev = eval_v(&me, p.v)?;
            let ou = eval_u(&mo, p.u)?;
            let ov = eval_v(&mo, p.v)?;
            Ok(psi_d1_from_axes(form, mode.parity, &eu, &ev, &ou, &ov))
        }
    }
}

fn clip_point(p: &ParabolicPoint) -> (ParabolicPoint, bool) {
    if p.h() < FOCAL_CLIP {
        (
            ParabolicPoint {
                u: p.u,
                v: FOCAL_CLIP,
                z: p.z,
            },
            true,
        )
    } else {
        (*p, false)
    }
}

/// 𝕄Ψ in parabolic components at z = 0, t = 0 (phase factor 1/√(2π)
/// included): ((-ik/h) ∂_v ψ, (ik/h) ∂_u ψ, 0).
pub fn vector_m(
    mode: &ModeIndex,
    p: &ParabolicPoint,
) -> Result<(Complex64, Complex64, Complex64)> {
    let (pc, _) = clip_point(p);
    let h = pc.h();
    if h == 0.0 {
        return Err(Error::Domain("vector_m singular on the focal line".into()));
    }
    let psi = psi_d1_fresh(mode, PsiForm::Standing, &pc)?;
    let ik = Complex64::new(0.0, mode.k());
    let ph = phase_factor(mode, 0.0, 0.0);
    Ok((
        -ik / h * psi.d_v * ph,
        ik / h * psi.d_u * ph,
        Complex64::new(0.0, 0.0),
    ))
}

/// ℕΨ in parabolic components at z = 0, t = 0:
/// ((ik_z/h) ∂_u ψ, (ik_z/h) ∂_v ψ, k⊥² ψ), with ∇⊥²ψ already reduced to
/// -k⊥²ψ through the Helmholtz equation.
pub fn vector_n(
    mode: &ModeIndex,
    p: &ParabolicPoint,
) -> Result<(Complex64, Complex64, Complex64)> {
    let (pc, _) = clip_point(p);
    let h = pc.h();
    if h == 0.0 {
        return Err(Error::Domain("vector_n singular on the focal line".into()));
    }
    let psi = psi_d1_fresh(mode, PsiForm::Standing, &pc)?;
    let ikz = Complex64::new(0.0, mode.k_z);
    let kp2 = mode.k_perp() * mode.k_perp();
    let ph = phase_factor(mode, 0.0, 0.0);
    Ok((
        ikz / h * psi.d_u * ph,
        ikz / h * psi.d_v * ph,
        kp2 * psi.value * ph,
    ))
}

/// E, B and A (Cartesian) from first-order ψ data at a point; `phase` is the
/// full travelling phase at the requested (z, t).
pub(crate) fn fields_from_psi(
    mode: &ModeIndex,
    pol: &Polarization,
    psi: &PsiD1,
    p: &ParabolicPoint,
    phase: Complex64,
) -> Result<([Complex64; 3], [Complex64; 3], [Complex64; 3])> {
    let fr = frame(p)?;
    let h = fr.h;
    let k = mode.k();
    let ik = Complex64::new(0.0, k);
    let ikz = Complex64::new(0.0, mode.k_z);
    let kp2 = mode.k_perp() * mode.k_perp();

    // parabolic components of M Psi and N Psi (with phase)
    let m_u = -ik / h * psi.d_v * phase;
    let m_v = ik / h * psi.d_u * phase;
    let n_u = ikz / h * psi.d_u * phase;
    let n_v = ikz / h * psi.d_v * phase;
    let n_z = kp2 * psi.value * phase;

    let a_para = (
        pol.amp_te * m_u + pol.amp_tm * n_u,
        pol.amp_te * m_v + pol.amp_tm * n_v,
        pol.amp_tm * n_z,
    );
    let e_para = (ik * a_para.0, ik * a_para.1, ik * a_para.2);
    let b_para = (
        -ik * (pol.amp_te * n_u - pol.amp_tm * m_u),
        -ik * (pol.amp_te * n_v - pol.amp_tm * m_v),
        -ik * pol.amp_te * n_z,
    );

    Ok((
        vector_to_cartesian(e_para, p)?,
        vector_to_cartesian(b_para, p)?,
        vector_to_cartesian(a_para, p)?,
    ))
}

/// Electric and magnetic field of the polarized mode at (p, z, t).
pub fn eval_eb(
    mode: &ModeIndex,
    pol: &Polarization,
    form: PsiForm,
    p: &ParabolicPoint,
    z: f64,
    t: f64,
) -> Result<EMFieldSample> {
    let (sample, _a) = eval_eba(mode, pol, form, p, z, t)?;
    Ok(sample)
}

/// Like [`eval_eb`] but also returns the vector potential A.
pub fn eval_eba(
    mode: &ModeIndex,
    pol: &Polarization,
    form: PsiForm,
    p: &ParabolicPoint,
    z: f64,
    t: f64,
) -> Result<(EMFieldSample, [Complex64; 3])> {
    let (pc, clipped) = clip_point(p);
    let psi = psi_d1_fresh(mode, form, &pc)?;
    let phase = phase_factor(mode, z, t);
    let (e, b, a) = fields_from_psi(mode, pol, &psi, &pc, phase)?;
    for c in e.iter().chain(b.iter()) {
        if !c.re.is_finite() || !c.im.is_finite() {
            return Err(Error::NonFinite("field evaluation"));
        }
    }
    Ok((EMFieldSample { e, b, clipped }, a))
}

/// Predicted field at the u-mirrored point (-u, v) from the field at (u, v):
///
/// ```text
///   P_u E_TE = (-1)^p (-E_x,  E_y, E_z)      P_u E_TM = (-1)^p ( E_x, -E_y, E_z)
/// ```
///
/// B transforms with the pattern of the opposite family (B of a TE mode
/// reflects like E of a TM mode and vice versa).
pub fn reflect_u(sample: &EMFieldSample, parity: Parity, family: Family) -> EMFieldSample {
    let s = parity.sign();
    let (e_sign, b_sign) = match family {
        Family::Te => ([-1.0, 1.0, 1.0], [1.0, -1.0, 1.0]),
        Family::Tm => ([1.0, -1.0, 1.0], [-1.0, 1.0, 1.0]),
    };
    let map = |f: &[Complex64; 3], signs: [f64; 3]| {
        [
            s * signs[0] * f[0],
            s * signs[1] * f[1],
            s * signs[2] * f[2],
        ]
    };
    EMFieldSample {
        e: map(&sample.e, e_sign),
        b: map(&sample.b, b_sign),
        clipped: sample.clipped,
    }
}

/// Polarization-ellipse parameters of the transverse field (E_x, E_y).
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct PolarizationEllipse {
    /// Major-axis orientation in (-π/2, π/2].
    pub orientation: f64,
    /// Minor/major axis ratio in [0, 1]; 0 linear, 1 circular.
    pub ellipticity: f64,
    /// |E|² including the longitudinal component.
    pub intensity: f64,
    /// true when the transverse field vanishes and the orientation is
    /// undefined
    pub degenerate: bool,
}

pub fn polarization_ellipse(sample: &EMFieldSample) -> PolarizationEllipse {
    let ex = sample.e[0];
    let ey = sample.e[1];
    let s0 = ex.norm_sqr() + ey.norm_sqr();
    let intensity = s0 + sample.e[2].norm_sqr();
    if s0 <= f64::MIN_POSITIVE {
        return PolarizationEllipse {
            orientation: 0.0,
            ellipticity: 0.0,
            intensity,
            degenerate: true,
        };
    }
    let s1 = ex.norm_sqr() - ey.norm_sqr();
    let cross = ex.conj() * ey;
    let s2 = 2.0 * cross.re;
    let s3 = 2.0 * cross.im;
    let orientation = 0.5 * s2.atan2(s1);
    let chi = 0.5 * (s3 / s0).clamp(-1.0, 1.0).asin();
    PolarizationEllipse {
        orientation,
        ellipticity: chi.tan().abs(),
        intensity,
        degenerate: false,
    }
}

// ---------------------------------------------------------------------------
// complex 2-jets in (u, v); the dynamics layer uses these for analytic
// derivatives of the Cartesian field components
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct Jet2 {
    pub f: Complex64,
    pub fu: Complex64,
    pub fv: Complex64,
    pub fuu: Complex64,
    pub fuv: Complex64,
    pub fvv: Complex64,
}

impl Jet2 {
    pub fn coord_u(u: f64) -> Self {
        Jet2 {
            f: Complex64::new(u, 0.0),
            fu: Complex64::new(1.0, 0.0),
            ..Default::default()
        }
    }

    pub fn coord_v(v: f64) -> Self {
        Jet2 {
            f: Complex64::new(v, 0.0),
            fv: Complex64::new(1.0, 0.0),
            ..Default::default()
        }
    }

    pub fn add(&self, o: &Jet2) -> Jet2 {
        Jet2 {
            f: self.f + o.f,
            fu: self.fu + o.fu,
            fv: self.fv + o.fv,
            fuu: self.fuu + o.fuu,
            fuv: self.fuv + o.fuv,
            fvv: self.fvv + o.fvv,
        }
    }

    pub fn sub(&self, o: &Jet2) -> Jet2 {
        Jet2 {
            f: self.f - o.f,
            fu: self.fu - o.fu,
            fv: self.fv - o.fv,
            fuu: self.fuu - o.fuu,
            fuv: self.fuv - o.fuv,
            fvv: self.fvv - o.fvv,
        }
    }

    pub fn scale(&self, c: Complex64) -> Jet2 {
        Jet2 {
            f: c * self.f,
            fu: c * self.fu,
            fv: c * self.fv,
            fuu: c * self.fuu,
            fuv: c * self.fuv,
            fvv: c * self.fvv,
        }
    }

    pub fn mul(&self, o: &Jet2) -> Jet2 {
        Jet2 {
            f: self.f * o.f,
            fu: self.fu * o.f + self.f * o.fu,
            fv: self.fv * o.f + self.f * o.fv,
            fuu: self.fuu * o.f + 2.0 * self.fu * o.fu + self.f * o.fuu,
            fuv: self.fuv * o.f + self.fu * o.fv + self.fv * o.fu + self.f * o.fuv,
            fvv: self.fvv * o.f + 2.0 * self.fv * o.fv + self.f * o.fvv,
        }
    }

    pub fn div(&self, o: &Jet2) -> Jet2 {
        let q = self.f / o.f;
        let qu = (self.fu - q * o.fu) / o.f;
        let qv = (self.fv - q * o.fv) / o.f;
        Jet2 {
            f: q,
            fu: qu,
            fv: qv,
            fuu: (self.fuu - q * o.fuu - 2.0 * qu * o.fu) / o.f,
            fuv: (self.fuv - q * o.fuv - qu * o.fv - qv * o.fu) / o.f,
            fvv: (self.fvv - q * o.fvv - 2.0 * qv * o.fv) / o.f,
        }
    }

    /// Square root jet (principal branch through the value).
    pub fn sqrt(&self) -> Jet2 {
        let s = self.f.sqrt();
        let su = self.fu / (2.0 * s);
        let sv = self.fv / (2.0 * s);
        Jet2 {
            f: s,
            fu: su,
            fv: sv,
            fuu: (self.fuu - 2.0 * su * su) / (2.0 * s),
            fuv: (self.fuv - 2.0 * su * sv) / (2.0 * s),
            fvv: (self.fvv - 2.0 * sv * sv) / (2.0 * s),
        }
    }

    /// Chart derivative ∂_x f = (u f_u - v f_v)/h² of the jet's value.
    pub fn dx(&self, p: &ParabolicPoint) -> Complex64 {
        (p.u * self.fu - p.v * self.fv) / p.h2()
    }

    /// Chart derivative ∂_y f = (v f_u + u f_v)/h² of the jet's value.
    pub fn dy(&self, p: &ParabolicPoint) -> Complex64 {
        (p.v * self.fu + p.u * self.fv) / p.h2()
    }
}

/// Jets of ψ, ∂_u ψ and ∂_v ψ for one parity, from the axis samples.
pub(crate) struct PsiJets {
    pub psi: Jet2,
    pub psi_u: Jet2,
    pub psi_v: Jet2,
}

pub(crate) fn psi_jets_from_axes(us: &AxisSample, vs: &AxisSample) -> PsiJets {
    PsiJets {
        psi: Jet2 {
            f: us.value * vs.value,
            fu: us.d1 * vs.value,
            fv: us.value * vs.d1,
            fuu: us.d2 * vs.value,
            fuv: us.d1 * vs.d1,
            fvv: us.value * vs.d2,
        },
        psi_u: Jet2 {
            f: us.d1 * vs.value,
            fu: us.d2 * vs.value,
            fv: us.d1 * vs.d1,
            fuu: us.d3 * vs.value,
            fuv: us.d2 * vs.d1,
            fvv: us.d1 * vs.d2,
        },
        psi_v: Jet2 {
            f: us.value * vs.d1,
            fu: us.d1 * vs.d1,
            fv: us.value * vs.d2,
            fuu: us.d2 * vs.d1,
            fuv: us.d1 * vs.d2,
            fvv: us.value * vs.d3,
        },
    }
}

pub(crate) fn psi_jets_combined(
    form: PsiForm,
    parity: Parity,
    even: &PsiJets,
    odd: &PsiJets,
) -> PsiJets {
    match form {
        PsiForm::Standing => {
            let src = match parity {
                Parity::Even => even,
                Parity::Odd => odd,
            };
            PsiJets {
                psi: src.psi,
                psi_u: src.psi_u,
                psi_v: src.psi_v,
            }
        }
        PsiForm::Traveling(branch) => {
            let i = match branch {
                Branch::Plus => Complex64::new(0.0, 1.0),
                Branch::Minus => Complex64::new(0.0, -1.0),
            };
            PsiJets {
                psi: even.psi.add(&odd.psi.scale(i)),
                psi_u: even.psi_u.add(&odd.psi_u.scale(i)),
                psi_v: even.psi_v.add(&odd.psi_v.scale(i)),
            }
        }
    }
}

/// 2-jets of the unit-amplitude potential's Cartesian components at
/// z = 0, t = 0 (1/√(2π) included):
///
/// ```text
///   TE: A = ((-ik)(v ψ_u + u ψ_v)/h², (ik)(u ψ_u - v ψ_v)/h², 0)
///   TM: A = ((ik_z)(u ψ_u - v ψ_v)/h², (ik_z)(v ψ_u + u ψ_v)/h², k⊥² ψ)
/// ```
pub(crate) fn potential_jets(
    mode: &ModeIndex,
    family: Family,
    jets: &PsiJets,
    p: &ParabolicPoint,
) -> [Jet2; 3] {
    let ju = Jet2::coord_u(p.u);
    let jv = Jet2::coord_v(p.v);
    let jh2 = ju.mul(&ju).add(&jv.mul(&jv));
    // h² ∂_y ψ and h² ∂_x ψ
    let num_y = jv.mul(&jets.psi_u).add(&ju.mul(&jets.psi_v));
    let num_x = ju.mul(&jets.psi_u).sub(&jv.mul(&jets.psi_v));
    let norm = Complex64::new(1.0 / (2.0 * std::f64::consts::PI).sqrt(), 0.0);
    let ik = Complex64::new(0.0, mode.k());
    let ikz = Complex64::new(0.0, mode.k_z);
    let kp2 = Complex64::new(mode.k_perp() * mode.k_perp(), 0.0);
    match family {
        Family::Te => [
            num_y.div(&jh2).scale(-ik * norm),
            num_x.div(&jh2).scale(ik * norm),
            Jet2::default(),
        ],
        Family::Tm => [
            num_x.div(&jh2).scale(ikz * norm),
            num_y.div(&jh2).scale(ikz * norm),
            jets.psi.scale(kp2 * norm),
        ],
    }
}

/// Fresh potential jets for a (mode, family, form) at a point.
pub(crate) fn potential_jets_fresh(
    mode: &ModeIndex,
    family: Family,
    form: PsiForm,
    p: &ParabolicPoint,
) -> Result<[Jet2; 3]> {
    let me = mode.with_parity(Parity::Even);
    let mo = mode.with_parity(Parity::Odd);
    let even = psi_jets_from_axes(&eval_u(&me, p.u)?, &eval_v(&me, p.v)?);
    let odd = psi_jets_from_axes(&eval_u(&mo, p.u)?, &eval_v(&mo, p.v)?);
    let jets = psi_jets_combined(form, mode.parity, &even, &odd);
    Ok(potential_jets(mode, family, &jets, p))
}
