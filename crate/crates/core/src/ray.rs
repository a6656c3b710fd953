//! `R^n` ordered by a polyhedral cone `C = {z : A z >= 0}` (initial order) and
//! by the ray `{t x : t >= 0}` through an interior direction `x` (specific order).
//!
//! Both envelopes reduce to a one-dimensional shift along `x`:
//!
//! ```text
//! u ∨ v = u + t* x,   t* = max(0, max_i a_i·(v - u) / a_i·x)
//! u ∧ v = u - t* x,   t* = max(0, max_i a_i·(u - v) / a_i·x)
//! ```

use nalgebra::DMatrix;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::element::{dot, Element, Tolerance};
use crate::error::{Error, Result};

/// Relative margin `a_i·x >= δ ‖a_i‖ ‖x‖` required of the interior direction.
pub const INTERIOR_MARGIN: f64 = 1e-6;

/// Singular values below `RANK_THRESHOLD * ‖A‖₂` count as zero.
pub const RANK_THRESHOLD: f64 = 1e-10;

/// Polyhedral cone in H-representation; rows of `A` are inward facet normals.
#[derive(Debug, Clone, PartialEq)]
pub struct ConeH {
    rows: Vec<Element>,
    dim: usize,
}

impl ConeH {
    pub fn new(rows: Vec<Vec<f64>>) -> Result<Self> {
        let dim = rows.first().map_or(0, Vec::len);
        if dim == 0 {
            return Err(Error::Input(
                "facet matrix must have at least one non-empty row".into(),
            ));
        }
        let rows: Vec<Element> = rows.into_iter().map(Element::new).collect();
        for r in &rows {
            r.validate(dim)?;
        }
        let cone = Self { rows, dim };
        let rank = cone.rank();
        if rank < dim {
            return Err(Error::NotPointed { rank, dim });
        }
        Ok(cone)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn facets(&self) -> &[Element] {
        &self.rows
    }

    /// Numerical rank from the singular values of `A`.
    pub fn rank(&self) -> usize {
        let k = self.rows.len();
        let flat: Vec<f64> = self.rows.iter().flat_map(|r| r.iter().copied()).collect();
        let m = DMatrix::from_row_slice(k, self.dim, &flat);
        let sv = m.singular_values();
        let top = sv.iter().fold(0.0_f64, |a, &b| a.max(b));
        if top == 0.0 {
            return 0;
        }
        sv.iter().filter(|&&s| s > RANK_THRESHOLD * top).count()
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        self.rows.iter().map(|r| r.as_slice().to_vec()).collect()
    }
}

/// Validated ray-cone space.
#[derive(Debug, Clone, PartialEq)]
pub struct RaySpace {
    cone: ConeH,
    x_hat: Element,
    denom: Vec<f64>,
    row_norms: Vec<f64>,
    x_hat_sq: f64,
    tol: Tolerance,
}

/// Shape of the mixed-order interval `{z : u ≼ z ≤ v}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum IntervalExtent {
    Empty,
    /// The interval is the segment `{u + t x : 0 <= t <= t_max}`.
    Bounded {
        t_max: f64,
    },
}

/// Builds a ray-cone space, checking pointedness and strict interiority of `x_hat`.
pub fn make_ray_space(a: Vec<Vec<f64>>, x_hat: Vec<f64>, tol: Tolerance) -> Result<RaySpace> {
    RaySpace::new(ConeH::new(a)?, Element::new(x_hat), tol)
}

impl RaySpace {
    pub fn new(cone: ConeH, x_hat: Element, tol: Tolerance) -> Result<Self> {
        x_hat.validate(cone.dim())?;
        let xn = x_hat.norm2();
        let row_norms: Vec<f64> = cone.rows.iter().map(Element::norm2).collect();
        let denom: Vec<f64> = cone.rows.iter().map(|r| r.dot(&x_hat)).collect();
        for (i, (&d, &an)) in denom.iter().zip(&row_norms).enumerate() {
            let margin = INTERIOR_MARGIN * an * xn;
            if !(d >= margin && d > 0.0) {
                return Err(Error::NotInterior {
                    facet: i,
                    value: d,
                    margin,
                });
            }
        }
        let x_hat_sq = x_hat.dot(&x_hat);
        Ok(Self {
            cone,
            x_hat,
            denom,
            row_norms,
            x_hat_sq,
            tol,
        })
    }

    pub fn dim(&self) -> usize {
        self.cone.dim
    }

    pub fn cone(&self) -> &ConeH {
        &self.cone
    }

    pub fn x_hat(&self) -> &Element {
        &self.x_hat
    }

    pub fn tol(&self) -> Tolerance {
        self.tol
    }

    /// `a_i·x_hat` for every facet.
    pub fn denom(&self) -> &[f64] {
        &self.denom
    }

    /// Membership in `C` up to `tol` scaled by the magnitude of `z`.
    pub fn cone_member(&self, z: &Element) -> bool {
        let bound = self.tol.bound(z.max_abs());
        self.cone
            .rows
            .iter()
            .zip(&self.row_norms)
            .all(|(a, an)| a.dot(z) >= -bound * an)
    }

    /// Distance-like amount by which `z` leaves `C` (0 inside).
    pub fn initial_violation(&self, z: &Element) -> f64 {
        self.cone
            .rows
            .iter()
            .zip(&self.row_norms)
            .fold(0.0, |m, (a, an)| m.max(-a.dot(z) / an))
    }

    /// Sup-distance from `z` to the ray `{t x_hat : t >= 0}`.
    pub fn specific_violation(&self, z: &Element) -> f64 {
        let tau = (z.dot(&self.x_hat) / self.x_hat_sq).max(0.0);
        z.axpy(-tau, &self.x_hat).max_abs()
    }

    /// `t0 = min{t >= 0 : y + t x_hat ∈ C}`.
    pub fn t_min_shift(&self, y: &Element) -> f64 {
        self.cone
            .rows
            .iter()
            .zip(&self.denom)
            .fold(0.0, |t, (a, d)| t.max(-a.dot(y) / d))
    }

    fn shift_between(&self, from: &[f64], to: &[f64]) -> f64 {
        // max(0, max_i a_i·(to - from)/d_i) without materialising the difference
        self.cone
            .rows
            .iter()
            .zip(&self.denom)
            .fold(0.0, |t, (a, d)| {
                let s: f64 = a
                    .iter()
                    .zip(to.iter().zip(from))
                    .map(|(ai, (p, q))| ai * (p - q))
                    .sum();
                t.max(s / d)
            })
    }

    /// Mixed upper envelope: smallest `u + t x_hat` (t >= 0) lying above `v` in `C`.
    pub fn env_up(&self, u: &Element, v: &Element) -> Element {
        let t = self.shift_between(u.as_slice(), v.as_slice());
        u.axpy(t, &self.x_hat)
    }

    /// Mixed lower envelope: largest `u - t x_hat` (t >= 0) lying below `v` in `C`.
    pub fn env_down(&self, u: &Element, v: &Element) -> Element {
        let t = self.shift_between(v.as_slice(), u.as_slice());
        u.axpy(-t, &self.x_hat)
    }

    pub fn interval_extent(&self, u: &Element, v: &Element) -> IntervalExtent {
        let t_max = self
            .cone
            .rows
            .iter()
            .zip(&self.denom)
            .map(|(a, d)| {
                let s: f64 = a
                    .iter()
                    .zip(v.iter().zip(u.iter()))
                    .map(|(ai, (p, q))| ai * (p - q))
                    .sum();
                s / d
            })
            .fold(f64::INFINITY, f64::min);
        let slack = self.tol.bound(u.max_abs().max(v.max_abs()));
        if t_max < -slack {
            IntervalExtent::Empty
        } else {
            IntervalExtent::Bounded {
                t_max: t_max.max(0.0),
            }
        }
    }

    /// Euclidean diameter of the interval `{z : u ≼ z ≤ v}` (0 when empty).
    pub fn interval_diameter(&self, extent: IntervalExtent) -> f64 {
        match extent {
            IntervalExtent::Empty => 0.0,
            IntervalExtent::Bounded { t_max } => t_max * self.x_hat_sq.sqrt(),
        }
    }

    /// Coordinate `τ` with `z = τ x_hat`.
    pub fn ray_coord(&self, z: &Element) -> Result<f64> {
        let tau = z.dot(&self.x_hat) / self.x_hat_sq;
        let residual = z.axpy(-tau, &self.x_hat).norm2();
        let bound = self.tol.bound(z.max_abs());
        if residual > bound {
            return Err(Error::OffRay { residual, bound });
        }
        Ok(tau)
    }

    /// Writes `y = g - h` with `g, h` on the ray, if `y` lies on `span{x_hat}`.
    pub fn split_specific(&self, y: &Element) -> Option<(Element, Element)> {
        let tau = self.ray_coord(y).ok()?;
        let g = self.x_hat.scale(tau.max(0.0));
        let h = self.x_hat.scale((-tau).max(0.0));
        Some((g, h))
    }

    /// Point of `C` obtained by pushing `z` along `x_hat` past the boundary by `extra`.
    pub fn lift_into_cone(&self, z: &Element, extra: f64) -> Element {
        let t = self.t_min_shift(z) + extra;
        z.axpy(t, &self.x_hat)
    }
}

/// Random facet set whose normalized normal-sum is an interior direction with
/// relative margin at least `margin`. Used to build harness fixtures.
pub fn random_ray_space<R: Rng + ?Sized>(
    rng: &mut R,
    dim: usize,
    facets: usize,
    margin: f64,
    tol: Tolerance,
) -> Result<RaySpace> {
    if facets < dim {
        return Err(Error::Input(format!(
            "need at least {dim} facets, got {facets}"
        )));
    }
    for _ in 0..10_000 {
        let center = unit(
            &(0..dim)
                .map(|_| rng.random_range(-1.0..1.0))
                .collect::<Vec<_>>(),
        );
        let Some(center) = center else { continue };
        let normals: Option<Vec<Vec<f64>>> = (0..facets)
            .map(|_| {
                let raw: Vec<f64> = center
                    .iter()
                    .map(|c| c + rng.random_range(-1.0..1.0))
                    .collect();
                unit(&raw)
            })
            .collect();
        let Some(normals) = normals else { continue };
        let mut sum = vec![0.0; dim];
        for a in &normals {
            for (s, v) in sum.iter_mut().zip(a) {
                *s += v;
            }
        }
        let Some(x_hat) = unit(&sum) else { continue };
        if normals.iter().any(|a| dot(a, &x_hat) < margin) {
            continue;
        }
        if let Ok(space) = make_ray_space(normals, x_hat, tol) {
            return Ok(space);
        }
    }
    Err(Error::Input("could not draw a valid cone".into()))
}

fn unit(v: &[f64]) -> Option<Vec<f64>> {
    let n = dot(v, v).sqrt();
    (n > 1e-3).then(|| v.iter().map(|c| c / n).collect())
}
