//! Double-double (~31 significant digits) arithmetic for extended-precision
//! reference values in tests.
//!
//! Error-free transformations follow Dekker and Knuth; the division and
//! square root are the usual two-correction Newton forms from the QD library
//! literature. Accuracy is far beyond what any 1e-10-relative comparison
//! needs, so tests can treat `Dd` results as exact.

/// A number represented as an unevaluated sum `hi + lo` with |lo| <= ulp(hi)/2.
#[derive(Clone, Copy, Debug, PartialEq)]
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

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    // requires |a| >= |b|
    let s = a + b;
    let err = b - (s - a);
    (s, err)
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let err = a.mul_add(b, -p);
    (p, err)
}

impl Dd {
    pub const fn new(hi: f64, lo: f64) -> Self {
        Dd { hi, lo }
    }

    pub fn from(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn add(self, other: Dd) -> Dd {
        let (s1, s2) = two_sum(self.hi, other.hi);
        let (t1, t2) = two_sum(self.lo, other.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        let (s1, s2) = quick_two_sum(s1, s2 + t2);
        Dd { hi: s1, lo: s2 }
    }

    pub fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }

    pub fn sub(self, other: Dd) -> Dd {
        self.add(other.neg())
    }

    pub fn mul(self, other: Dd) -> Dd {
        let (p1, p2) = two_prod(self.hi, other.hi);
        let p2 = p2 + self.hi * other.lo + self.lo * other.hi;
        let (hi, lo) = quick_two_sum(p1, p2);
        Dd { hi, lo }
    }

    pub fn div(self, other: Dd) -> Dd {
        let q1 = self.hi / other.hi;
        let r = self.sub(other.mul(Dd::from(q1)));
        let q2 = r.hi / other.hi;
        let r = r.sub(other.mul(Dd::from(q2)));
        let q3 = r.hi / other.hi;
        let (s, e) = quick_two_sum(q1, q2);
        Dd { hi: s, lo: e }.add(Dd::from(q3))
    }

    pub fn sqrt(self) -> Dd {
        if self.hi == 0.0 {
            return Dd::from(0.0);
        }
        // one Newton correction on the f64 estimate: x + (a - x^2) / (2x)
        let x = self.hi.sqrt();
        let x_dd = Dd::from(x);
        let corr = self.sub(x_dd.mul(x_dd)).div(Dd::from(2.0 * x));
        x_dd.add(corr)
    }

    pub fn scale(self, k: f64) -> Dd {
        self.mul(Dd::from(k))
    }

    pub fn recip(self) -> Dd {
        Dd::from(1.0).div(self)
    }

    pub fn abs(self) -> Dd {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            self.neg()
        } else {
            self
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn add_catches_residual() {
        let a = Dd::from(1.0);
        let b = Dd::from(1e-30);
        let s = a.add(b);
        assert_eq!(s.hi, 1.0);
        assert_eq!(s.lo, 1e-30);
    }

    #[test]
    fn mul_div_roundtrip() {
        let a = Dd::from(3.0).div(Dd::from(7.0));
        let b = a.mul(Dd::from(7.0));
        let err = b.sub(Dd::from(3.0));
        assert!(err.to_f64().abs() < 1e-30);
    }

    #[test]
    fn sqrt_squares_back() {
        let a = Dd::from(2.0).sqrt();
        let err = a.mul(a).sub(Dd::from(2.0));
        assert!(err.to_f64().abs() < 1e-30);
    }

    #[test]
    fn div_matches_known_expansion() {
        // 1/3 = 0.333... ; check the low word is a genuine correction
        let third = Dd::from(1.0).div(Dd::from(3.0));
        assert!((third.hi - 1.0 / 3.0).abs() < 1e-17);
        assert!(third.lo.abs() > 0.0);
        let back = third.mul(Dd::from(3.0)).sub(Dd::from(1.0));
        assert!(back.to_f64().abs() < 1e-31);
    }
}
