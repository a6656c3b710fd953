//! Seeded samplers for elements and order-comparable pairs.
//!
//! Comparable pairs are built, not rejection-sampled: `(z, z + c)` with
//! `c ∈ V_p` for the initial order and `(z, z + h)` with `h ∈ V_sp` for the
//! specific order, so the claimed relation holds by construction.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::element::Element;
use crate::space::SpaceHandle;

/// Name and version of the generator behind every sampled check.
pub const RNG_NAME: &str = "chacha8-v1";

/// Default half-width of the coordinate box for sampled elements.
pub const DEFAULT_RADIUS: f64 = 10.0;

pub type SampleRng = ChaCha8Rng;

/// Generator for stream `stream` of the check labelled `label` under `seed`.
pub fn stream_rng(seed: u64, label: &str, stream: u64) -> SampleRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ fnv1a(label));
    rng.set_stream(stream);
    rng
}

fn fnv1a(label: &str) -> u64 {
    label.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| {
        (h ^ u64::from(b)).wrapping_mul(0x100_0000_01b3)
    })
}

/// Coordinates uniform in `[-radius, radius]`.
pub fn sample_element(space: &SpaceHandle, rng: &mut SampleRng, radius: f64) -> Element {
    Element::new(
        (0..space.dim())
            .map(|_| rng.random_range(-radius..=radius))
            .collect(),
    )
}

/// An element of the initial cone `V_p`.
pub fn sample_initial_positive(space: &SpaceHandle, rng: &mut SampleRng, radius: f64) -> Element {
    match space {
        SpaceHandle::RayCone(s) => {
            let z = sample_element(space, rng, radius);
            let extra = rng.random_range(0.0..radius);
            s.lift_into_cone(&z, extra)
        }
        _ => Element::new(
            (0..space.dim())
                .map(|_| nonneg_coord(rng, radius))
                .collect(),
        ),
    }
}

/// An element of the specific cone `V_sp`.
pub fn sample_specific_positive(space: &SpaceHandle, rng: &mut SampleRng, radius: f64) -> Element {
    match space {
        SpaceHandle::RayCone(s) => s.x_hat().scale(rng.random_range(0.0..radius)),
        SpaceHandle::BvGrid(g) => {
            let step = 2.0 * radius / g.dim() as f64;
            let mut level = nonneg_coord(rng, radius);
            let mut out = Vec::with_capacity(g.dim());
            out.push(level);
            for _ in 1..g.dim() {
                level += nonneg_coord(rng, step);
                out.push(level);
            }
            Element::new(out)
        }
        SpaceHandle::ProductRiesz(_) => Element::new(
            (0..space.dim())
                .map(|_| nonneg_coord(rng, radius))
                .collect(),
        ),
    }
}

// A quarter of the draws are exactly zero so ties and flat stretches show up.
fn nonneg_coord(rng: &mut SampleRng, radius: f64) -> f64 {
    if rng.random_range(0..4) == 0 {
        0.0
    } else {
        rng.random_range(0.0..radius)
    }
}

/// `(z, z + c)` with `c ∈ V_p`, so `z ≤ z + c`.
pub fn sample_initial_pair(
    space: &SpaceHandle,
    rng: &mut SampleRng,
    radius: f64,
) -> (Element, Element) {
    let z = sample_element(space, rng, radius);
    let c = sample_initial_positive(space, rng, radius);
    let w = &z + &c;
    (z, w)
}

/// `(z, z + h)` with `h ∈ V_sp`, so `z ≼ z + h`.
pub fn sample_specific_pair(
    space: &SpaceHandle,
    rng: &mut SampleRng,
    radius: f64,
) -> (Element, Element) {
    let z = sample_element(space, rng, radius);
    let h = sample_specific_positive(space, rng, radius);
    let w = &z + &h;
    (z, w)
}

/// Convenience wrapper binding a space, a generator and a radius.
pub struct Sampler<'a> {
    space: &'a SpaceHandle,
    rng: SampleRng,
    radius: f64,
}

impl<'a> Sampler<'a> {
    pub fn new(space: &'a SpaceHandle, rng: SampleRng, radius: f64) -> Self {
        Self { space, rng, radius }
    }

    pub fn space(&self) -> &'a SpaceHandle {
        self.space
    }

    pub fn element(&mut self) -> Element {
        sample_element(self.space, &mut self.rng, self.radius)
    }

    pub fn initial_positive(&mut self) -> Element {
        sample_initial_positive(self.space, &mut self.rng, self.radius)
    }

    pub fn specific_positive(&mut self) -> Element {
        sample_specific_positive(self.space, &mut self.rng, self.radius)
    }

    pub fn initial_pair(&mut self) -> (Element, Element) {
        sample_initial_pair(self.space, &mut self.rng, self.radius)
    }

    pub fn specific_pair(&mut self) -> (Element, Element) {
        sample_specific_pair(self.space, &mut self.rng, self.radius)
    }

    /// Uniform scalar in `[lo, hi)`.
    pub fn scalar(&mut self, lo: f64, hi: f64) -> f64 {
        self.rng.random_range(lo..hi)
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.rng.random_range(0..n)
    }

    pub fn rng(&mut self) -> &mut SampleRng {
        &mut self.rng
    }
}
