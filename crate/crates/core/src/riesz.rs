//! `R^n` with both orders equal to the coordinatewise order. The mixed
//! envelopes collapse to coordinatewise max and min, which makes this space the
//! degenerate (Riesz) control case for the law suite.

use crate::element::{Element, Tolerance};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RieszSpace {
    n: usize,
    tol: Tolerance,
}

impl RieszSpace {
    pub fn new(n: usize, tol: Tolerance) -> Result<Self> {
        if n == 0 {
            return Err(Error::Input("product space needs n >= 1".into()));
        }
        Ok(Self { n, tol })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn tol(&self) -> Tolerance {
        self.tol
    }

    pub fn violation(&self, z: &Element) -> f64 {
        z.iter().fold(0.0, |m, &c| m.max(-c))
    }

    pub fn env_up(&self, u: &Element, v: &Element) -> Element {
        u.zip_with(v, f64::max)
    }

    pub fn env_down(&self, u: &Element, v: &Element) -> Element {
        u.zip_with(v, f64::min)
    }

    /// Positive and negative parts.
    pub fn split(&self, y: &Element) -> (Element, Element) {
        (
            y.zip_with(y, |a, _| a.max(0.0)),
            y.zip_with(y, |a, _| (-a).max(0.0)),
        )
    }
}
