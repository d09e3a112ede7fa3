//! Truncated power series in `t` over an exact coefficient ring, with the
//! two cheap recurrences that zeta-function work actually needs: multiplying
//! and dividing by binomials `1 - x·t^d`.

use super::qpoly::QPoly;
use crate::hodge::EPoly;

/// The coefficient operations a series needs. Implemented for the exact
/// polynomial types in this crate; no numeric tolerance anywhere.
pub trait Ring: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn is_zero(&self) -> bool;
}

impl Ring for QPoly {
    fn zero() -> Self {
        QPoly::zero()
    }
    fn one() -> Self {
        QPoly::one()
    }
    fn add(&self, other: &Self) -> Self {
        QPoly::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        QPoly::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        QPoly::mul(self, other)
    }
    fn is_zero(&self) -> bool {
        QPoly::is_zero(self)
    }
}

impl Ring for EPoly {
    fn zero() -> Self {
        EPoly::zero()
    }
    fn one() -> Self {
        EPoly::one()
    }
    fn add(&self, other: &Self) -> Self {
        EPoly::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        EPoly::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        EPoly::mul(self, other)
    }
    fn is_zero(&self) -> bool {
        EPoly::is_zero(self)
    }
}

/// A power series truncated at a fixed order: coefficients of t^0 .. t^order.
/// Arithmetic past the truncation order is silently (and intentionally) cut.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series<C> {
    coeffs: Vec<C>,
}

impl<C: serde::Serialize> serde::Serialize for Series<C> {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut state = serializer.serialize_struct("Series", 2)?;
        state.serialize_field("order", &(self.coeffs.len() - 1))?;
        state.serialize_field("coeffs", &self.coeffs)?;
        state.end()
    }
}

impl<C: Ring> Series<C> {
    pub fn one(order: usize) -> Self {
        let mut coeffs = vec![C::zero(); order + 1];
        coeffs[0] = C::one();
        Series { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty());
        Series { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &C {
        assert!(n <= self.order(), "coefficient beyond truncation order");
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// Multiply in place by `1 - x·t^d`.
    pub fn mul_one_minus(&mut self, x: &C, d: usize) {
        assert!(d >= 1);
        for n in (d..=self.order()).rev() {
            let delta = x.mul(&self.coeffs[n - d]);
            self.coeffs[n] = self.coeffs[n].sub(&delta);
        }
    }

    /// Divide in place by `1 - x·t^d`.
    pub fn div_one_minus(&mut self, x: &C, d: usize) {
        assert!(d >= 1);
        for n in d..=self.order() {
            let delta = x.mul(&self.coeffs[n - d]);
            self.coeffs[n] = self.coeffs[n].add(&delta);
        }
    }

    pub fn mul(&self, other: &Series<C>) -> Series<C> {
        let order = self.order().min(other.order());
        let mut coeffs = vec![C::zero(); order + 1];
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(order - i) {
                let term = self.coeffs[i].mul(&other.coeffs[j]);
                coeffs[i + j] = coeffs[i + j].add(&term);
            }
        }
        Series { coeffs }
    }

    /// Divide by a series with constant term exactly one.
    pub fn div(&self, other: &Series<C>) -> Series<C> {
        assert!(
            other.coeffs[0] == C::one(),
            "series division needs unit constant term"
        );
        let order = self.order().min(other.order());
        let mut coeffs = vec![C::zero(); order + 1];
        for n in 0..=order {
            let mut acc = self.coeffs[n].clone();
            for k in 0..n {
                let term = coeffs[k].mul(&other.coeffs[n - k]);
                acc = acc.sub(&term);
            }
            coeffs[n] = acc;
        }
        Series { coeffs }
    }

    /// Substitute `t -> t^k`, truncated at the receiver's order.
    pub fn substitute_t_power(&self, k: usize) -> Series<C> {
        assert!(k >= 1);
        let order = self.order();
        let mut coeffs = vec![C::zero(); order + 1];
        for (n, c) in self.coeffs.iter().enumerate() {
            if n * k <= order {
                coeffs[n * k] = c.clone();
            }
        }
        Series { coeffs }
    }
}
