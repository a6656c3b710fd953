//! Coordinate vectors and comparison tolerances shared by every space.

use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A point of a finite-dimensional space, stored as its coordinate vector.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Element(Vec<f64>);

impl Element {
    pub fn new(coords: Vec<f64>) -> Self {
        Self(coords)
    }

    pub fn zeros(dim: usize) -> Self {
        Self(vec![0.0; dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, f64> {
        self.0.iter()
    }

    /// Checks length against `dim` and that every coordinate is finite.
    pub fn validate(&self, dim: usize) -> Result<()> {
        if self.0.len() != dim {
            return Err(Error::Dimension {
                expected: dim,
                got: self.0.len(),
            });
        }
        match self.0.iter().position(|c| !c.is_finite()) {
            Some(i) => Err(Error::NonFinite(i)),
            None => Ok(()),
        }
    }

    pub fn scale(&self, a: f64) -> Self {
        Self(self.0.iter().map(|c| a * c).collect())
    }

    /// `self + t * dir`
    pub fn axpy(&self, t: f64, dir: &Element) -> Self {
        Self(self.0.iter().zip(&dir.0).map(|(c, d)| c + t * d).collect())
    }

    pub fn dot(&self, other: &Element) -> f64 {
        dot(&self.0, &other.0)
    }

    pub fn norm2(&self) -> f64 {
        self.dot(self).sqrt()
    }

    /// Largest coordinate magnitude (0 for the empty vector).
    pub fn max_abs(&self) -> f64 {
        self.0.iter().fold(0.0, |m, c| m.max(c.abs()))
    }

    pub fn dist_inf(&self, other: &Element) -> f64 {
        self.0
            .iter()
            .zip(&other.0)
            .fold(0.0, |m, (a, b)| m.max((a - b).abs()))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0.0)
    }

    pub fn zip_with(&self, other: &Element, f: impl Fn(f64, f64) -> f64) -> Self {
        Self(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        )
    }
}

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

impl From<Vec<f64>> for Element {
    fn from(v: Vec<f64>) -> Self {
        Self(v)
    }
}

impl From<&[f64]> for Element {
    fn from(v: &[f64]) -> Self {
        Self(v.to_vec())
    }
}

impl<const N: usize> From<[f64; N]> for Element {
    fn from(v: [f64; N]) -> Self {
        Self(v.to_vec())
    }
}

impl std::ops::Index<usize> for Element {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        debug_assert_eq!(self.dim(), rhs.dim());
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        debug_assert_eq!(self.dim(), rhs.dim());
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element(self.0.iter().map(|c| -c).collect())
    }
}

impl Mul<&Element> for f64 {
    type Output = Element;
    fn mul(self, rhs: &Element) -> Element {
        rhs.scale(self)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Element> for Element {
            type Output = Element;
            fn $m(self, rhs: Element) -> Element {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Element> for Element {
            type Output = Element;
            fn $m(self, rhs: &Element) -> Element {
                (&self).$m(rhs)
            }
        }
        impl $tr<Element> for &Element {
            type Output = Element;
            fn $m(self, rhs: Element) -> Element {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);

impl Neg for Element {
    type Output = Element;
    fn neg(self) -> Element {
        -&self
    }
}

/// Comparison slack `atol + rtol * scale`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    pub atol: f64,
    pub rtol: f64,
}

impl Tolerance {
    pub const MAX: f64 = 1e-3;

    pub fn new(atol: f64, rtol: f64) -> Result<Self> {
        for (name, v) in [("atol", atol), ("rtol", rtol)] {
            if !(0.0..=Self::MAX).contains(&v) {
                return Err(Error::Input(format!("{name} = {v} outside [0, 1e-3]")));
            }
        }
        Ok(Self { atol, rtol })
    }

    /// Same value for both components.
    pub fn uniform(tol: f64) -> Result<Self> {
        Self::new(tol, tol)
    }

    pub fn bound(&self, scale: f64) -> f64 {
        self.atol + self.rtol * scale
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Self {
            atol: 1e-9,
            rtol: 1e-9,
        }
    }
}

/// Largest coordinate magnitude over a set of operands.
pub fn scale_of(elems: &[&Element]) -> f64 {
    elems.iter().fold(0.0, |m, e| m.max(e.max_abs()))
}
