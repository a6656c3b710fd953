//! The closed set of concrete mixed lattice spaces and their JSON description.

use serde::{Deserialize, Serialize};

use crate::element::{Element, Tolerance};
use crate::error::{Error, Result};
use crate::grid::GridSpace;
use crate::ray::{make_ray_space, RaySpace};
use crate::riesz::RieszSpace;

/// A concrete mixed lattice space.
#[derive(Debug, Clone, PartialEq)]
pub enum SpaceHandle {
    RayCone(RaySpace),
    BvGrid(GridSpace),
    ProductRiesz(RieszSpace),
}

fn default_tol() -> f64 {
    1e-9
}

/// JSON form, e.g. `{"type":"ray_cone","A":[[1,0],[0,1]],"x_hat":[1,1]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum SpaceSpec {
    RayCone {
        #[serde(rename = "A")]
        a: Vec<Vec<f64>>,
        x_hat: Vec<f64>,
        #[serde(default = "default_tol")]
        atol: f64,
        #[serde(default = "default_tol")]
        rtol: f64,
    },
    BvGrid {
        m: usize,
        #[serde(default = "default_tol")]
        atol: f64,
        #[serde(default = "default_tol")]
        rtol: f64,
    },
    ProductRiesz {
        n: usize,
        #[serde(default = "default_tol")]
        atol: f64,
        #[serde(default = "default_tol")]
        rtol: f64,
    },
}

impl SpaceSpec {
    pub fn build(&self) -> Result<SpaceHandle> {
        match self {
            SpaceSpec::RayCone {
                a,
                x_hat,
                atol,
                rtol,
            } => Ok(SpaceHandle::RayCone(make_ray_space(
                a.clone(),
                x_hat.clone(),
                Tolerance::new(*atol, *rtol)?,
            )?)),
            SpaceSpec::BvGrid { m, atol, rtol } => Ok(SpaceHandle::BvGrid(GridSpace::new(
                *m,
                Tolerance::new(*atol, *rtol)?,
            )?)),
            SpaceSpec::ProductRiesz { n, atol, rtol } => Ok(SpaceHandle::ProductRiesz(
                RieszSpace::new(*n, Tolerance::new(*atol, *rtol)?)?,
            )),
        }
    }
}

impl SpaceHandle {
    /// First quadrant of the plane with the diagonal ray.
    pub fn e2() -> Self {
        SpaceHandle::RayCone(
            make_ray_space(
                vec![vec![1.0, 0.0], vec![0.0, 1.0]],
                vec![1.0, 1.0],
                Tolerance::default(),
            )
            .expect("valid fixture"),
        )
    }

    pub fn grid(m: usize) -> Result<Self> {
        Ok(SpaceHandle::BvGrid(GridSpace::new(
            m,
            Tolerance::default(),
        )?))
    }

    pub fn riesz(n: usize) -> Result<Self> {
        Ok(SpaceHandle::ProductRiesz(RieszSpace::new(
            n,
            Tolerance::default(),
        )?))
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let spec: SpaceSpec =
            serde_json::from_str(text).map_err(|e| Error::Input(format!("space spec: {e}")))?;
        spec.build()
    }

    pub fn to_spec(&self) -> SpaceSpec {
        let t = self.tol();
        match self {
            SpaceHandle::RayCone(s) => SpaceSpec::RayCone {
                a: s.cone().to_rows(),
                x_hat: s.x_hat().as_slice().to_vec(),
                atol: t.atol,
                rtol: t.rtol,
            },
            SpaceHandle::BvGrid(g) => SpaceSpec::BvGrid {
                m: g.m(),
                atol: t.atol,
                rtol: t.rtol,
            },
            SpaceHandle::ProductRiesz(r) => SpaceSpec::ProductRiesz {
                n: r.dim(),
                atol: t.atol,
                rtol: t.rtol,
            },
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            SpaceHandle::RayCone(_) => "ray_cone",
            SpaceHandle::BvGrid(_) => "bv_grid",
            SpaceHandle::ProductRiesz(_) => "product_riesz",
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            SpaceHandle::RayCone(s) => s.dim(),
            SpaceHandle::BvGrid(g) => g.dim(),
            SpaceHandle::ProductRiesz(r) => r.dim(),
        }
    }

    pub fn tol(&self) -> Tolerance {
        match self {
            SpaceHandle::RayCone(s) => s.tol(),
            SpaceHandle::BvGrid(g) => g.tol(),
            SpaceHandle::ProductRiesz(r) => r.tol(),
        }
    }

    pub fn as_ray(&self) -> Result<&RaySpace> {
        match self {
            SpaceHandle::RayCone(s) => Ok(s),
            other => Err(Error::WrongSpace {
                expected: "ray_cone",
                got: other.kind(),
            }),
        }
    }

    pub fn as_grid(&self) -> Result<&GridSpace> {
        match self {
            SpaceHandle::BvGrid(g) => Ok(g),
            other => Err(Error::WrongSpace {
                expected: "bv_grid",
                got: other.kind(),
            }),
        }
    }

    pub fn check(&self, x: &Element) -> Result<()> {
        x.validate(self.dim())
    }

    /// How far `z` lies outside the initial cone `V_p` (0 inside).
    pub fn initial_violation(&self, z: &Element) -> f64 {
        match self {
            SpaceHandle::RayCone(s) => s.initial_violation(z),
            SpaceHandle::BvGrid(g) => g.initial_violation(z),
            SpaceHandle::ProductRiesz(r) => r.violation(z),
        }
    }

    /// How far `z` lies outside the specific cone `V_sp` (0 inside).
    pub fn specific_violation(&self, z: &Element) -> f64 {
        match self {
            SpaceHandle::RayCone(s) => s.specific_violation(z),
            SpaceHandle::BvGrid(g) => g.specific_violation(z),
            SpaceHandle::ProductRiesz(r) => r.violation(z),
        }
    }

    /// `u ≤ v` up to the space tolerance.
    pub fn leq_initial(&self, u: &Element, v: &Element) -> bool {
        let scale = u.max_abs().max(v.max_abs());
        self.initial_violation(&(v - u)) <= self.tol().bound(scale)
    }

    /// `u ≼ v` up to the space tolerance.
    pub fn leq_specific(&self, u: &Element, v: &Element) -> bool {
        let scale = u.max_abs().max(v.max_abs());
        self.specific_violation(&(v - u)) <= self.tol().bound(scale)
    }

    /// Native upper envelope without input validation.
    pub fn up(&self, u: &Element, v: &Element) -> Element {
        match self {
            SpaceHandle::RayCone(s) => s.env_up(u, v),
            SpaceHandle::BvGrid(g) => g.env_up(u, v),
            SpaceHandle::ProductRiesz(r) => r.env_up(u, v),
        }
    }

    /// Native lower envelope without input validation.
    pub fn down(&self, u: &Element, v: &Element) -> Element {
        match self {
            SpaceHandle::RayCone(s) => s.env_down(u, v),
            SpaceHandle::BvGrid(g) => g.env_down(u, v),
            SpaceHandle::ProductRiesz(r) => r.env_down(u, v),
        }
    }

    /// Decomposes `y = g - h` with `g, h ∈ V_sp` when the specific cone allows it.
    pub fn split_specific(&self, y: &Element) -> Option<(Element, Element)> {
        match self {
            SpaceHandle::RayCone(s) => s.split_specific(y),
            SpaceHandle::BvGrid(g) => Some(g.split_specific(y)),
            SpaceHandle::ProductRiesz(r) => Some(r.split(y)),
        }
    }

    /// Whether `V_sp - V_sp` is the whole space.
    pub fn specific_cone_generating(&self) -> bool {
        match self {
            SpaceHandle::RayCone(s) => s.dim() == 1,
            _ => true,
        }
    }
}
