//! Functions of bounded variation sampled on the grid `0..=m`.
//!
//! Initial order is pointwise. `f ≼ g` additionally requires `g - f` to be
//! nondecreasing. Envelopes are single prefix-max scans:
//!
//! ```text
//! (f ∨ g)_i = f_i + max_{j<=i} (g_j - f_j)⁺
//! (f ∧ g)_i = f_i - max_{j<=i} (f_j - g_j)⁺
//! ```
//!
//! Abscissae are never stored: orders, envelopes and norms only depend on the
//! sample values and their order.

use crate::element::{Element, Tolerance};
use crate::error::{Error, Result};

/// A sampled function on the `m + 1` grid points.
pub type GridFn = Element;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpace {
    m: usize,
    tol: Tolerance,
}

impl GridSpace {
    pub fn new(m: usize, tol: Tolerance) -> Result<Self> {
        if m < 1 {
            return Err(Error::Input("grid needs m >= 1".into()));
        }
        Ok(Self { m, tol })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Number of grid points, `m + 1`.
    pub fn dim(&self) -> usize {
        self.m + 1
    }

    pub fn tol(&self) -> Tolerance {
        self.tol
    }

    pub fn initial_violation(&self, z: &GridFn) -> f64 {
        z.iter().fold(0.0, |m, &c| m.max(-c))
    }

    /// Amount by which `z` fails to be nonnegative and nondecreasing.
    pub fn specific_violation(&self, z: &GridFn) -> f64 {
        let s = z.as_slice();
        let start = (-s[0]).max(0.0);
        s.windows(2).fold(start, |m, w| m.max(w[0] - w[1]))
    }

    /// `f ≼ g`: `g - f` nonnegative with nondecreasing increments, up to `tol`.
    pub fn sleq(&self, f: &GridFn, g: &GridFn) -> bool {
        let d = g - f;
        self.specific_violation(&d) <= self.tol.bound(f.max_abs().max(g.max_abs()))
    }

    pub fn env_up(&self, f: &GridFn, g: &GridFn) -> GridFn {
        let mut run = 0.0_f64;
        let out = f
            .iter()
            .zip(g.iter())
            .map(|(&fi, &gi)| {
                run = run.max(gi - fi);
                fi + run
            })
            .collect();
        Element::new(out)
    }

    pub fn env_down(&self, f: &GridFn, g: &GridFn) -> GridFn {
        let mut run = 0.0_f64;
        let out = f
            .iter()
            .zip(g.iter())
            .map(|(&fi, &gi)| {
                run = run.max(fi - gi);
                fi - run
            })
            .collect();
        Element::new(out)
    }

    /// Writes `f = g - h` with `g, h` nonnegative and nondecreasing: the running
    /// sums of positive and negative increments, with `f_0` placed on the matching side.
    pub fn split_specific(&self, f: &GridFn) -> (GridFn, GridFn) {
        let s = f.as_slice();
        let mut g = Vec::with_capacity(s.len());
        let mut h = Vec::with_capacity(s.len());
        let (mut gp, mut hp) = (s[0].max(0.0), (-s[0]).max(0.0));
        g.push(gp);
        h.push(hp);
        for w in s.windows(2) {
            let d = w[1] - w[0];
            gp += d.max(0.0);
            hp += (-d).max(0.0);
            g.push(gp);
            h.push(hp);
        }
        (Element::new(g), Element::new(h))
    }
}

/// `max_i |f_i|`
pub fn sup_norm(f: &GridFn) -> f64 {
    f.max_abs()
}

/// `|f_0| + Σ |f_i - f_{i-1}|`
pub fn bv_norm(f: &GridFn) -> f64 {
    let s = f.as_slice();
    s.first().map_or(0.0, |v| v.abs()) + s.windows(2).map(|w| (w[1] - w[0]).abs()).sum::<f64>()
}
