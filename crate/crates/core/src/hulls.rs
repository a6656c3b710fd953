//! Hull membership oracles over finite base sets, mixed-full hulls of grid
//! boxes, and Minkowski gauges by bisection.
//!
//! For a base set `A`:
//!
//! ```text
//! MF₁(A) = {y : x ≼ y ≤ z for some x, z ∈ A}
//! MF₂(A) = {y : x ≤ y ≼ z for some x, z ∈ A}
//! MS₁(A) = {y : -s(x) ≼ y ≤ s(x) for some x ∈ A}
//! MS₂(A) = {y : -s(x) ≤ y ≼ s(x) for some x ∈ A}
//! SH(A)  = {y : s(y) ≤ s(x) for some x ∈ A}
//! ```

use serde::{Deserialize, Serialize};

use crate::element::Element;
use crate::engine::{run_sampled, Clause, Evaluation, LawReport};
use crate::error::{Error, Result};
use crate::grid::GridSpace;
use crate::mlcore::{r_low, r_upp, sym_abs};
use crate::sampling::Sampler;
use crate::space::SpaceHandle;

/// Which of the two mirrored hulls.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Variant {
    One,
    Two,
}

impl Variant {
    pub fn from_index(i: u8) -> Result<Self> {
        match i {
            1 => Ok(Variant::One),
            2 => Ok(Variant::Two),
            _ => Err(Error::Input(format!(
                "hull variant must be 1 or 2, got {i}"
            ))),
        }
    }
}

/// A nonempty list of points of one space.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FiniteSet {
    points: Vec<Element>,
}

impl FiniteSet {
    pub fn new(points: Vec<Element>, dim: usize) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::Input("base set must be nonempty".into()));
        }
        for p in &points {
            p.validate(dim)?;
        }
        Ok(Self { points })
    }

    pub fn points(&self) -> &[Element] {
        &self.points
    }

    /// `A ∪ -A`
    pub fn balanced(&self) -> Self {
        let mut points = self.points.clone();
        points.extend(self.points.iter().map(|p| -p));
        Self { points }
    }

    pub fn negated(&self) -> Self {
        Self {
            points: self.points.iter().map(|p| -p).collect(),
        }
    }
}

/// Axis-aligned box `{u : lo ≤ u ≤ hi}` of grid functions, containing 0.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoxSet {
    lo: Element,
    hi: Element,
}

impl BoxSet {
    pub fn new(lo: Element, hi: Element) -> Result<Self> {
        if lo.dim() != hi.dim() {
            return Err(Error::Dimension {
                expected: lo.dim(),
                got: hi.dim(),
            });
        }
        lo.validate(lo.dim())?;
        hi.validate(hi.dim())?;
        for (i, (&l, &h)) in lo.iter().zip(hi.iter()).enumerate() {
            if !(l <= 0.0 && 0.0 <= h && l < h) {
                return Err(Error::Input(format!(
                    "box bounds at {i} must satisfy lo <= 0 <= hi, lo < hi"
                )));
            }
        }
        Ok(Self { lo, hi })
    }

    /// `[-r, r]` in every coordinate.
    pub fn symmetric(dim: usize, r: f64) -> Result<Self> {
        Self::new(Element::new(vec![-r; dim]), Element::new(vec![r; dim]))
    }

    pub fn lo(&self) -> &Element {
        &self.lo
    }

    pub fn hi(&self) -> &Element {
        &self.hi
    }

    pub fn dim(&self) -> usize {
        self.lo.dim()
    }

    pub fn contains(&self, z: &Element) -> bool {
        z.iter()
            .zip(self.lo.iter().zip(self.hi.iter()))
            .all(|(&v, (&l, &h))| l <= v && v <= h)
    }
}

/// JSON set description: `{"type":"points","pts":[...]}` or `{"type":"box","lo":[...],"hi":[...]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum SetSpec {
    Points { pts: Vec<Vec<f64>> },
    Box { lo: Vec<f64>, hi: Vec<f64> },
}

/// A parsed base set.
#[derive(Debug, Clone, PartialEq)]
pub enum BaseSet {
    Points(FiniteSet),
    Box(BoxSet),
}

impl SetSpec {
    pub fn build(&self, dim: usize) -> Result<BaseSet> {
        match self {
            SetSpec::Points { pts } => Ok(BaseSet::Points(FiniteSet::new(
                pts.iter().map(|p| Element::from(p.as_slice())).collect(),
                dim,
            )?)),
            SetSpec::Box { lo, hi } => {
                let b = BoxSet::new(Element::from(lo.as_slice()), Element::from(hi.as_slice()))?;
                if b.dim() != dim {
                    return Err(Error::Dimension {
                        expected: dim,
                        got: b.dim(),
                    });
                }
                Ok(BaseSet::Box(b))
            }
        }
    }

    pub fn from_json(text: &str, dim: usize) -> Result<BaseSet> {
        let spec: SetSpec = serde_json::from_str(text).map_err(|e| Error::Input(e.to_string()))?;
        spec.build(dim)
    }
}

type OrderTest = fn(&SpaceHandle, &Element, &Element) -> bool;

pub fn mf_member(space: &SpaceHandle, a: &FiniteSet, y: &Element, variant: Variant) -> bool {
    let (below, above): (OrderTest, OrderTest) = match variant {
        Variant::One => (SpaceHandle::leq_specific, SpaceHandle::leq_initial),
        Variant::Two => (SpaceHandle::leq_initial, SpaceHandle::leq_specific),
    };
    a.points.iter().any(|x| below(space, x, y)) && a.points.iter().any(|z| above(space, y, z))
}

pub fn ms_member(space: &SpaceHandle, a: &FiniteSet, y: &Element, variant: Variant) -> bool {
    a.points.iter().any(|x| {
        let s = sym_abs(space, x);
        let ns = -&s;
        match variant {
            Variant::One => space.leq_specific(&ns, y) && space.leq_initial(y, &s),
            Variant::Two => space.leq_initial(&ns, y) && space.leq_specific(y, &s),
        }
    })
}

pub fn sh_member(space: &SpaceHandle, a: &FiniteSet, y: &Element) -> bool {
    let sy = sym_abs(space, y);
    a.points
        .iter()
        .any(|x| space.leq_initial(&sy, &sym_abs(space, x)))
}

/// Membership of `z` in `MF₁(U) = (U + V_sp) ∩ (U - V_p)` for a grid box `U`.
///
/// `z ∈ U - V_p` iff `z ≤ hi`. For `U + V_sp` the smallest admissible
/// nonnegative nondecreasing `h` with `z - h ≤ hi` is
/// `h_i = max(0, h_{i-1}, z_i - hi_i)`, and `z` is a member iff also `z - h ≥ lo`.
pub fn box_mf1_member(_space: &GridSpace, u: &BoxSet, z: &Element) -> bool {
    let mut h = 0.0_f64;
    for ((&zi, &lo), &hi) in z.iter().zip(u.lo.iter()).zip(u.hi.iter()) {
        if zi > hi {
            return false;
        }
        h = h.max(zi - hi);
        if h > zi - lo {
            return false;
        }
    }
    true
}

/// Result of a gauge bisection.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GaugeResult {
    pub value: f64,
    pub iterations: u32,
    pub bracket_width: f64,
}

pub const GAUGE_ITERATIONS: u32 = 80;

/// Default upper bracket `2¹⁰ (1 + ‖z‖∞)`.
pub fn default_t_hi(z: &Element) -> f64 {
    1024.0 * (1.0 + z.max_abs())
}

/// `inf{t > 0 : z ∈ tU}` for a set `U` star-shaped about 0, given by `member`.
pub fn gauge_bisect(
    member: impl Fn(&Element) -> bool,
    z: &Element,
    t_hi: Option<f64>,
) -> Result<GaugeResult> {
    if z.is_zero() {
        return Ok(GaugeResult {
            value: 0.0,
            iterations: 0,
            bracket_width: 0.0,
        });
    }
    let t_hi = t_hi.unwrap_or_else(|| default_t_hi(z));
    if !(t_hi > 0.0 && t_hi.is_finite()) {
        return Err(Error::Input(format!(
            "gauge bracket {t_hi} must be positive and finite"
        )));
    }
    let inside = |t: f64| member(&z.scale(1.0 / t));
    if !inside(t_hi) {
        return Err(Error::Input(format!("point not absorbed at t = {t_hi}")));
    }
    let mut seen = false;
    for k in (1..=8).rev() {
        let now = inside(t_hi / f64::from(1u32 << k));
        if seen && !now {
            return Err(Error::Input("set is not star-shaped about 0".into()));
        }
        seen |= now;
    }
    let (mut lo, mut hi) = (0.0, t_hi);
    for _ in 0..GAUGE_ITERATIONS {
        let mid = 0.5 * (lo + hi);
        if inside(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(GaugeResult {
        value: 0.5 * (lo + hi),
        iterations: GAUGE_ITERATIONS,
        bracket_width: hi - lo,
    })
}

/// Gauge of `MF₁(U)` for a grid box `U`.
pub fn box_mf1_gauge(space: &GridSpace, u: &BoxSet, z: &Element) -> Result<GaugeResult> {
    z.validate(space.dim())?;
    if u.dim() != space.dim() {
        return Err(Error::Dimension {
            expected: space.dim(),
            got: u.dim(),
        });
    }
    gauge_bisect(|w| box_mf1_member(space, u, w), z, None)
}

/// Gauge of the box itself.
pub fn box_gauge(u: &BoxSet, z: &Element) -> Result<GaugeResult> {
    z.validate(u.dim())?;
    gauge_bisect(|w| u.contains(w), z, None)
}

pub const ABSORB_DEPTH: i32 = 20;

/// Looks for `t > 0` with `t·y ∈ MS₁(A)`.
///
/// When the specific cone splits `y = g - h`, every `x ∈ A` with
/// `s(x) - t(g + h) ≽ 0` gives `t·y ∈ [-s(x), s(x)]`, so the candidate is the
/// largest dyadic `t ≤ 1` with that property. Otherwise dyadic `t` down to
/// `2⁻²⁰` are tried directly; below that the absolute tolerance starts to
/// blur every direction into the ray.
pub fn ms_absorb_search(space: &SpaceHandle, a: &FiniteSet, y: &Element) -> Option<f64> {
    let dyadic = (0..=ABSORB_DEPTH).map(|k| 0.5_f64.powi(k));
    if let Some((g, h)) = space.split_specific(y) {
        let e = &g + &h;
        for x in &a.points {
            let s = sym_abs(space, x);
            if let Some(t) = dyadic
                .clone()
                .find(|&t| space.leq_specific(&e.scale(t), &s))
            {
                if ms_member(space, a, &y.scale(t), Variant::One) {
                    return Some(t);
                }
            }
        }
    }
    dyadic
        .into_iter()
        .find(|&t| ms_member(space, a, &y.scale(t), Variant::One))
}

/// Hull propositions as sampled checks; one report per proposition.
pub fn check_hull_props(
    space: &SpaceHandle,
    samples: usize,
    seed: u64,
    tol: f64,
) -> Vec<LawReport> {
    let absorb_samples = samples.min(1000);
    vec![
        run_sampled(space, "H-MF-conj", samples, seed, tol, |s| {
            let a = base_set(s).balanced();
            let y = mf_probe(s, &a);
            let ny = -&y;
            Evaluation::new().input("y", &y).clauses([
                Clause::iff(
                    "y ∈ MF₁(A) ⟺ -y ∈ MF₂(A)",
                    mf_member(s.space(), &a, &y, Variant::One),
                    mf_member(s.space(), &a, &ny, Variant::Two),
                ),
                Clause::iff(
                    "y ∈ MF₂(A) ⟺ -y ∈ MF₁(A)",
                    mf_member(s.space(), &a, &y, Variant::Two),
                    mf_member(s.space(), &a, &ny, Variant::One),
                ),
                Clause::holds(
                    "A ⊆ MF₁(A) ∩ MF₂(A)",
                    a.points.iter().all(|p| {
                        mf_member(s.space(), &a, p, Variant::One)
                            && mf_member(s.space(), &a, p, Variant::Two)
                    }),
                ),
            ])
        }),
        run_sampled(space, "H-MS-conj", samples, seed, tol, |s| {
            let a = base_set(s);
            let y = ms_probe(s, &a);
            let ny = -&y;
            Evaluation::new().input("y", &y).clause(Clause::iff(
                "y ∈ MS₁(A) ⟺ -y ∈ MS₂(A)",
                ms_member(s.space(), &a, &y, Variant::One),
                ms_member(s.space(), &a, &ny, Variant::Two),
            ))
        }),
        run_sampled(space, "H-MS-scale", samples, seed, tol, |s| {
            let a = base_set(s);
            let y = ms_probe(s, &a);
            let t = s.scalar(0.0, 1.0);
            let r = s.scalar(-1.0, 1.0);
            let sp = s.space();
            let in1 = ms_member(sp, &a, &y, Variant::One);
            let in_union = |w: &Element| {
                ms_member(sp, &a, w, Variant::One) || ms_member(sp, &a, w, Variant::Two)
            };
            Evaluation::new()
                .input("y", &y)
                .scalar("t", t)
                .scalar("r", r)
                .clauses([
                    Clause::holds(
                        "y ∈ MS₁(A) ⟹ ty ∈ MS₁(A)",
                        !in1 || ms_member(sp, &a, &y.scale(t), Variant::One),
                    ),
                    Clause::holds(
                        "y ∈ MS₁ ∪ MS₂ ⟹ ry ∈ MS₁ ∪ MS₂",
                        !in_union(&y) || in_union(&y.scale(r)),
                    ),
                    Clause::holds(
                        "0 ∈ MS₁(A)",
                        ms_member(sp, &a, &Element::zeros(sp.dim()), Variant::One),
                    ),
                ])
        }),
        run_sampled(space, "H-MS-pm-s", samples, seed, tol, |s| {
            let a = base_set(s);
            let sp = s.space();
            let x = &a.points[s.index(a.points.len())];
            let sx = sym_abs(sp, x);
            let nsx = -&sx;
            Evaluation::new().input("x", x).clauses([
                Clause::holds("s(x) ∈ MS₁(A)", ms_member(sp, &a, &sx, Variant::One)),
                Clause::holds("-s(x) ∈ MS₁(A)", ms_member(sp, &a, &nsx, Variant::One)),
                Clause::holds("s(x) ∈ MS₂(A)", ms_member(sp, &a, &sx, Variant::Two)),
                Clause::holds("-s(x) ∈ MS₂(A)", ms_member(sp, &a, &nsx, Variant::Two)),
            ])
        }),
        run_sampled(space, "H-SH-solid", samples, seed, tol, |s| {
            let a = base_set(s);
            let sp = s.space();
            let y = sh_probe(s, &a);
            let w = s_dominated(s, &y);
            Evaluation::new().input("y", &y).input("w", &w).clauses([
                Clause::holds("A ⊆ SH(A)", a.points.iter().all(|p| sh_member(sp, &a, p))),
                Clause::leq_initial("s(w) ≤ s(y)", sym_abs(sp, &w), sym_abs(sp, &y)),
                Clause::holds(
                    "y ∈ SH(A), s(w) ≤ s(y) ⟹ w ∈ SH(A)",
                    !sh_member(sp, &a, &y) || sh_member(sp, &a, &w),
                ),
            ])
        }),
        run_sampled(space, "H-MS-absorb", absorb_samples, seed, tol, |s| {
            let sp = s.space();
            let a = absorbing_base(sp);
            let y = absorb_probe(s);
            let found = ms_absorb_search(sp, &a, &y);
            Evaluation::new().input("y", &y).clause(Clause::iff(
                "absorbed ⟺ specific cone generating",
                found.is_some(),
                sp.specific_cone_generating(),
            ))
        })
        .with_note(
            "a generating specific cone makes MS₁(A) absorbing; only this direction is tested",
        ),
    ]
}

/// Random element; in ray spaces of dimension at least 2 it is pushed at
/// least one unit away from the ray, so every probe is off-ray.
fn absorb_probe(s: &mut Sampler<'_>) -> Element {
    let y = s.element();
    let SpaceHandle::RayCone(r) = s.space() else {
        return y;
    };
    let xh = r.x_hat();
    let along = y.dot(xh) / xh.dot(xh);
    let perp = y.axpy(-along, xh);
    let norm = perp.norm2();
    if r.dim() < 2 || norm == 0.0 {
        return y;
    }
    let len = s.scalar(1.0, 10.0);
    xh.scale(along).axpy(len / norm, &perp)
}

/// A base set whose `s`-values are strictly increasing on the grid and on
/// the ray in ray spaces, so the constructive absorbency search has room.
pub fn absorbing_base(space: &SpaceHandle) -> FiniteSet {
    let x = match space {
        SpaceHandle::RayCone(r) => r.x_hat().clone(),
        _ => Element::new((0..space.dim()).map(|i| 1.0 + i as f64).collect()),
    };
    let nx = -&x;
    FiniteSet {
        points: vec![x, nx],
    }
}

fn base_set(s: &mut Sampler<'_>) -> FiniteSet {
    let k = 1 + s.index(3);
    FiniteSet {
        points: (0..k).map(|_| s.element()).collect(),
    }
}

fn pick<'a>(s: &mut Sampler<'_>, a: &'a FiniteSet) -> &'a Element {
    &a.points[s.index(a.points.len())]
}

// Probes mix free draws with points built to sit above or below a base point,
// so both outcomes of each membership test occur.
fn mf_probe(s: &mut Sampler<'_>, a: &FiniteSet) -> Element {
    match s.index(3) {
        0 => s.element(),
        1 => {
            let x = pick(s, a).clone();
            let t = s.scalar(0.0, 0.5);
            &x + &s.specific_positive().scale(t)
        }
        _ => {
            let z = pick(s, a).clone();
            let t = s.scalar(0.0, 0.5);
            &z - &s.initial_positive().scale(t)
        }
    }
}

fn ms_probe(s: &mut Sampler<'_>, a: &FiniteSet) -> Element {
    let sx = sym_abs(s.space(), pick(s, a));
    match s.index(3) {
        0 => s.element(),
        1 => {
            let t = s.scalar(0.0, 0.5);
            &(-&sx) + &s.specific_positive().scale(t)
        }
        _ => {
            let t = s.scalar(0.0, 0.5);
            &sx - &s.specific_positive().scale(t)
        }
    }
}

fn sh_probe(s: &mut Sampler<'_>, a: &FiniteSet) -> Element {
    match s.index(3) {
        0 => s.element(),
        _ => {
            let t = s.scalar(-1.0, 1.0);
            pick(s, a).scale(t)
        }
    }
}

/// Some `w` with `s(w) ≤ s(y)`.
fn s_dominated(s: &mut Sampler<'_>, y: &Element) -> Element {
    let sp = s.space();
    let t = s.scalar(-1.0, 1.0);
    match s.index(4) {
        0 => y.scale(t),
        1 => r_upp(sp, y).scale(t),
        2 => r_low(sp, y).scale(t),
        _ => sym_abs(sp, y).scale(t),
    }
}

/// Sampled mixed-monotonicity of the gauge of `MF₁(U)`:
/// `0 ≼ y ≤ z` implies `gauge(y) ≤ gauge(z)`.
pub fn check_box_gauge_monotone(
    space: &GridSpace,
    u: &BoxSet,
    samples: usize,
    seed: u64,
    tol: f64,
) -> LawReport {
    let handle = SpaceHandle::BvGrid(*space);
    run_sampled(&handle, "H-gauge-monotone", samples, seed, tol, |s| {
        let y = s.specific_positive().scale(0.2);
        let z = &y + &s.initial_positive().scale(0.2);
        let gy = box_mf1_gauge(space, u, &y).map_or(f64::INFINITY, |g| g.value);
        let gz = box_mf1_gauge(space, u, &z).map_or(f64::INFINITY, |g| g.value);
        Evaluation::new()
            .input("y", &y)
            .input("z", &z)
            .clause(Clause::le("gauge(y) ≤ gauge(z)", gy, gz))
    })
}
