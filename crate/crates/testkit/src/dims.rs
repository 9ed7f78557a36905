//! SI dimension tracking for unit-correctness tests.
//!
//! A `Quantity` carries a value together with integer exponents over the SI
//! base dimensions (m, kg, s, A). Arithmetic propagates the exponents, so a
//! test can compose a formula factor by factor and assert both the numeric
//! value and the resulting dimension.

use std::ops::{Add, Div, Mul, Sub};

/// Exponents over the SI base dimensions used in this workspace.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Dim {
    pub m: i32,
    pub kg: i32,
    pub s: i32,
    pub a: i32,
}

impl Dim {
    pub const NONE: Dim = Dim { m: 0, kg: 0, s: 0, a: 0 };

    pub const fn new(m: i32, kg: i32, s: i32, a: i32) -> Self {
        Dim { m, kg, s, a }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Quantity {
    pub value: f64,
    pub dim: Dim,
}

impl Quantity {
    pub const fn new(value: f64, dim: Dim) -> Self {
        Quantity { value, dim }
    }

    pub fn dimensionless(value: f64) -> Self {
        Quantity::new(value, Dim::NONE)
    }

    pub fn meters(value: f64) -> Self {
        Quantity::new(value, Dim::new(1, 0, 0, 0))
    }

    pub fn seconds(value: f64) -> Self {
        Quantity::new(value, Dim::new(0, 0, 1, 0))
    }

    pub fn kilograms(value: f64) -> Self {
        Quantity::new(value, Dim::new(0, 1, 0, 0))
    }

    pub fn amperes(value: f64) -> Self {
        Quantity::new(value, Dim::new(0, 0, 0, 1))
    }

    /// J = kg m^2 s^-2
    pub fn joules(value: f64) -> Self {
        Quantity::new(value, Dim::new(2, 1, -2, 0))
    }

    /// T = kg s^-2 A^-1
    pub fn tesla(value: f64) -> Self {
        Quantity::new(value, Dim::new(0, 1, -2, -1))
    }

    /// H/m = kg m s^-2 A^-2
    pub fn henry_per_meter(value: f64) -> Self {
        Quantity::new(value, Dim::new(1, 1, -2, -2))
    }

    /// F/m = A^2 s^4 kg^-1 m^-3
    pub fn farad_per_meter(value: f64) -> Self {
        Quantity::new(value, Dim::new(-3, -1, 4, 2))
    }

    /// rad/s is tracked as s^-1.
    pub fn per_second(value: f64) -> Self {
        Quantity::new(value, Dim::new(0, 0, -1, 0))
    }

    /// rad/m is tracked as m^-1.
    pub fn per_meter(value: f64) -> Self {
        Quantity::new(value, Dim::new(-1, 0, 0, 0))
    }

    pub fn cubic_meters(value: f64) -> Self {
        Quantity::new(value, Dim::new(3, 0, 0, 0))
    }

    pub fn powi(self, n: i32) -> Quantity {
        Quantity::new(
            self.value.powi(n),
            Dim::new(self.dim.m * n, self.dim.kg * n, self.dim.s * n, self.dim.a * n),
        )
    }

    /// Square root; panics if any exponent is odd (a genuine unit error).
    pub fn sqrt(self) -> Quantity {
        let d = self.dim;
        assert!(
            d.m % 2 == 0 && d.kg % 2 == 0 && d.s % 2 == 0 && d.a % 2 == 0,
            "sqrt of non-square dimension {:?}",
            d
        );
        Quantity::new(
            self.value.sqrt(),
            Dim::new(d.m / 2, d.kg / 2, d.s / 2, d.a / 2),
        )
    }
}

impl Mul for Quantity {
    type Output = Quantity;
    fn mul(self, rhs: Quantity) -> Quantity {
        Quantity::new(
            self.value * rhs.value,
            Dim::new(
                self.dim.m + rhs.dim.m,
                self.dim.kg + rhs.dim.kg,
                self.dim.s + rhs.dim.s,
                self.dim.a + rhs.dim.a,
            ),
        )
    }
}

impl Div for Quantity {
    type Output = Quantity;
    fn div(self, rhs: Quantity) -> Quantity {
        Quantity::new(
            self.value / rhs.value,
            Dim::new(
                self.dim.m - rhs.dim.m,
                self.dim.kg - rhs.dim.kg,
                self.dim.s - rhs.dim.s,
                self.dim.a - rhs.dim.a,
            ),
        )
    }
}

impl Add for Quantity {
    type Output = Quantity;
    fn add(self, rhs: Quantity) -> Quantity {
        assert_eq!(self.dim, rhs.dim, "adding quantities of different dimensions");
        Quantity::new(self.value + rhs.value, self.dim)
    }
}

impl Sub for Quantity {
    type Output = Quantity;
    fn sub(self, rhs: Quantity) -> Quantity {
        assert_eq!(self.dim, rhs.dim, "subtracting quantities of different dimensions");
        Quantity::new(self.value - rhs.value, self.dim)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn joule_decomposes() {
        let j = Quantity::kilograms(2.0) * Quantity::meters(3.0).powi(2)
            / Quantity::seconds(1.0).powi(2);
        assert_eq!(j.dim, Quantity::joules(1.0).dim);
        assert_eq!(j.value, 18.0);
    }

    #[test]
    fn sqrt_halves_exponents() {
        let v = Quantity::meters(4.0).powi(2).sqrt();
        assert_eq!(v.dim, Quantity::meters(1.0).dim);
        assert_eq!(v.value, 2.0);
    }

    #[test]
    #[should_panic]
    fn sqrt_of_odd_dimension_panics() {
        let _ = Quantity::meters(4.0).sqrt();
    }
}
