//! Double-double (~31 significant digits) real and complex arithmetic.
//!
//! Only the handful of operations needed for compensated Taylor summation of
//! ₁F₁ are implemented. Algorithms are the classical error-free transforms
//! (Dekker/Knuth two_sum, FMA-based two_prod).

#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub(crate) struct Dd {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl Dd {
    #[inline]
    pub fn from_f64(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    #[inline]
    pub fn add(self, o: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, o.hi);
        let (hi, lo) = quick_two_sum(s, e + self.lo + o.lo);
        Dd { hi, lo }
    }

    #[inline]
    pub fn sub(self, o: Dd) -> Dd {
        self.add(Dd {
            hi: -o.hi,
            lo: -o.lo,
        })
    }

    #[inline]
    pub fn mul(self, o: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, o.hi);
        let (hi, lo) = quick_two_sum(p, e + self.hi * o.lo + self.lo * o.hi);
        Dd { hi, lo }
    }

    #[inline]
    pub fn div(self, o: Dd) -> Dd {
        let q1 = self.hi / o.hi;
        let r = self.sub(o.mul_f64(q1));
        let q2 = r.hi / o.hi;
        let r2 = r.sub(o.mul_f64(q2));
        let q3 = r2.hi / o.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo }.add(Dd::from_f64(q3))
    }

    #[inline]
    pub fn mul_f64(self, x: f64) -> Dd {
        let (p, e) = two_prod(self.hi, x);
        let (hi, lo) = quick_two_sum(p, e + self.lo * x);
        Dd { hi, lo }
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }
}

/// Complex number with double-double components.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct CDd {
    pub re: Dd,
    pub im: Dd,
}

impl CDd {
    #[inline]
    pub fn new(re: f64, im: f64) -> Self {
        CDd {
            re: Dd::from_f64(re),
            im: Dd::from_f64(im),
        }
    }

    #[inline]
    pub fn add(self, o: CDd) -> CDd {
        CDd {
            re: self.re.add(o.re),
            im: self.im.add(o.im),
        }
    }

    #[inline]
    pub fn mul(self, o: CDd) -> CDd {
        CDd {
            re: self.re.mul(o.re).sub(self.im.mul(o.im)),
            im: self.re.mul(o.im).add(self.im.mul(o.re)),
        }
    }

    /// Divide by a complex number given in f64 components.
    #[inline]
    pub fn div_c64(self, cr: f64, ci: f64) -> CDd {
        // a / b = a * conj(b) / |b|^2, with |b|^2 in double-double
        let br = Dd::from_f64(cr);
        let bi = Dd::from_f64(ci);
        let norm = br.mul(br).add(bi.mul(bi));
        let re = self.re.mul(br).add(self.im.mul(bi)).div(norm);
        let im = self.im.mul(br).sub(self.re.mul(bi)).div(norm);
        CDd { re, im }
    }

    #[inline]
    pub fn div_f64(self, x: f64) -> CDd {
        let d = Dd::from_f64(x);
        CDd {
            re: self.re.div(d),
            im: self.im.div(d),
        }
    }

    #[inline]
    pub fn abs_f64(self) -> f64 {
        self.re.hi.hypot(self.im.hi)
    }

    #[inline]
    pub fn to_c64(self) -> num_complex::Complex64 {
        num_complex::Complex64::new(self.re.to_f64(), self.im.to_f64())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dd_mul_keeps_extra_precision() {
        // (1 + 2^-30) * (1 - 2^-30) = 1 - 2^-60, representable only in dd
        let a = Dd::from_f64(1.0).add(Dd::from_f64((2f64).powi(-30)));
        let b = Dd::from_f64(1.0).sub(Dd::from_f64((2f64).powi(-30)));
        let p = a.mul(b);
        let exact = -(2f64).powi(-60);
        assert_eq!(p.hi, 1.0);
        assert!((p.lo - exact).abs() < 1e-25);
    }

    #[test]
    fn dd_div_roundtrip() {
        let a = Dd::from_f64(std::f64::consts::PI);
        let b = Dd::from_f64(std::f64::consts::E);
        let q = a.div(b).mul(b);
        assert!((q.hi - a.hi).abs() < 1e-15);
        assert!((q.sub(a).to_f64()).abs() < 1e-30);
    }

    #[test]
    fn cdd_div_mul_roundtrip() {
        let a = CDd::new(1.25, -0.75);
        let q = a.div_c64(0.3, 1.7).mul(CDd::new(0.3, 1.7));
        assert!((q.re.to_f64() - 1.25).abs() < 1e-29);
        assert!((q.im.to_f64() + 0.75).abs() < 1e-29);
    }
}
