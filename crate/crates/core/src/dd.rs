//! Double-double arithmetic: a value is stored as an unevaluated sum `hi + lo`
//! of two `f64`s, giving roughly 106 bits of significand (~31 decimal digits).
//!
//! Series with heavy cancellation (alternating Taylor sums with large
//! intermediate terms, residuals of near-exact truncations) lose most of their
//! signal in plain `f64`; the compensated representation keeps it.  Algorithms
//! follow the classic error-free transformations (Knuth two-sum, FMA-based
//! two-product) as used in the QD library.

use num_complex::Complex64;

/// Double-double real number, invariant `|lo| <= ulp(hi)/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

/// Requires |a| >= |b|.
#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let err = b - (s - a);
    (s, err)
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let err = f64::mul_add(a, b, -p);
    (p, err)
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    #[inline]
    pub fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn add(self, other: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, other.hi);
        let (t, f) = two_sum(self.lo, other.lo);
        let (s, e) = quick_two_sum(s, e + t);
        let (hi, lo) = quick_two_sum(s, e + f);
        Dd { hi, lo }
    }

    #[inline]
    pub fn add_f64(self, other: f64) -> Dd {
        let (s, e) = two_sum(self.hi, other);
        let (hi, lo) = quick_two_sum(s, e + self.lo);
        Dd { hi, lo }
    }

    #[inline]
    pub fn sub(self, other: Dd) -> Dd {
        self.add(other.neg())
    }

    #[inline]
    pub fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }

    #[inline]
    pub fn mul(self, other: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, other.hi);
        let e = e + (self.hi * other.lo + self.lo * other.hi);
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }

    #[inline]
    pub fn mul_f64(self, other: f64) -> Dd {
        let (p, e) = two_prod(self.hi, other);
        let (hi, lo) = quick_two_sum(p, e + self.lo * other);
        Dd { hi, lo }
    }

    #[inline]
    pub fn div(self, other: Dd) -> Dd {
        let q1 = self.hi / other.hi;
        let r = self.sub(other.mul_f64(q1));
        let q2 = r.hi / other.hi;
        let r = r.sub(other.mul_f64(q2));
        let q3 = r.hi / other.hi;
        let (s, e) = quick_two_sum(q1, q2);
        Dd { hi: s, lo: e }.add_f64(q3)
    }

    #[inline]
    pub fn div_f64(self, other: f64) -> Dd {
        self.div(Dd::from_f64(other))
    }

    #[inline]
    pub fn abs(self) -> Dd {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            self.neg()
        } else {
            self
        }
    }
}

/// Complex number with double-double components.
#[derive(Debug, Clone, Copy)]
pub struct CDd {
    pub re: Dd,
    pub im: Dd,
}

impl CDd {
    pub const ZERO: CDd = CDd { re: Dd::ZERO, im: Dd::ZERO };
    pub const ONE: CDd = CDd { re: Dd::ONE, im: Dd::ZERO };

    #[inline]
    pub fn from_complex(z: Complex64) -> CDd {
        CDd { re: Dd::from_f64(z.re), im: Dd::from_f64(z.im) }
    }

    #[inline]
    pub fn to_complex(self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    #[inline]
    pub fn add(self, other: CDd) -> CDd {
        CDd { re: self.re.add(other.re), im: self.im.add(other.im) }
    }

    #[inline]
    pub fn sub(self, other: CDd) -> CDd {
        CDd { re: self.re.sub(other.re), im: self.im.sub(other.im) }
    }

    #[inline]
    pub fn mul(self, other: CDd) -> CDd {
        let re = self.re.mul(other.re).sub(self.im.mul(other.im));
        let im = self.re.mul(other.im).add(self.im.mul(other.re));
        CDd { re, im }
    }

    /// Multiply by an ordinary complex double.
    #[inline]
    pub fn mul_complex(self, other: Complex64) -> CDd {
        let re = self.re.mul_f64(other.re).sub(self.im.mul_f64(other.im));
        let im = self.re.mul_f64(other.im).add(self.im.mul_f64(other.re));
        CDd { re, im }
    }

    #[inline]
    pub fn mul_dd(self, other: Dd) -> CDd {
        CDd { re: self.re.mul(other), im: self.im.mul(other) }
    }

    #[inline]
    pub fn div_dd(self, other: Dd) -> CDd {
        CDd { re: self.re.div(other), im: self.im.div(other) }
    }

    #[inline]
    pub fn scale(self, other: f64) -> CDd {
        CDd { re: self.re.mul_f64(other), im: self.im.mul_f64(other) }
    }

    #[inline]
    pub fn conj(self) -> CDd {
        CDd { re: self.re, im: self.im.neg() }
    }

    /// |z|^2 as a double-double real.
    #[inline]
    pub fn norm_sqr(self) -> Dd {
        self.re.mul(self.re).add(self.im.mul(self.im))
    }

    /// Euclidean magnitude, collapsed to f64 (used for termination checks).
    #[inline]
    pub fn abs_f64(self) -> f64 {
        let r = self.re.to_f64();
        let i = self.im.to_f64();
        r.hypot(i)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation_survives() {
        let big = Dd::from_f64(1e16);
        let x = big.add_f64(1.0).sub(big);
        assert_eq!(x.to_f64(), 1.0);
    }

    #[test]
    fn repeated_tenth_sums_exactly() {
        let tenth = Dd::ONE.div_f64(10.0);
        let mut acc = Dd::ZERO;
        for _ in 0..1000 {
            acc = acc.add(tenth);
        }
        assert!((acc.to_f64() - 100.0).abs() < 1e-28);
    }

    #[test]
    fn division_round_trip() {
        let a = Dd::from_f64(std::f64::consts::PI);
        let b = Dd::from_f64(std::f64::consts::E);
        let q = a.div(b).mul(b);
        assert!((q.to_f64() - std::f64::consts::PI).abs() < 1e-30);
        assert!(q.sub(a).abs().to_f64() < 1e-30);
    }

    #[test]
    fn exp_series_matches_libm() {
        // e^1 summed term by term in double-double should round to libm's exp(1).
        let mut term = Dd::ONE;
        let mut sum = Dd::ONE;
        for n in 1..40 {
            term = term.div_f64(n as f64);
            sum = sum.add(term);
        }
        assert_eq!(sum.to_f64(), 1f64.exp());
    }

    #[test]
    fn complex_product_against_f64() {
        let a = Complex64::new(1.25, -0.75);
        let b = Complex64::new(-0.5, 2.0);
        let z = CDd::from_complex(a).mul(CDd::from_complex(b)).to_complex();
        let w = a * b;
        assert!((z - w).norm() < 1e-16);
    }

    #[test]
    fn alternating_series_precision() {
        // sum (-10)^n / n! = e^{-10}; plain f64 keeps only ~5 digits here.
        let mut term = Dd::ONE;
        let mut sum = Dd::ONE;
        for n in 1..60 {
            term = term.mul_f64(-10.0).div_f64(n as f64);
            sum = sum.add(term);
        }
        let exact = (-10f64).exp();
        assert!((sum.to_f64() - exact).abs() < 1e-18 * exact.abs().max(1.0));
    }
}
