//! Sampled property checking shared by the law catalogue, the hull
//! propositions and the norm checks.
//!
//! Every check is a closure that draws its own inputs from a [`Sampler`] and
//! returns the clauses to compare. Samples are split into fixed-size chunks;
//! chunk `c` draws from stream `c` of the generator keyed by `(seed, label)`, so
//! reports do not depend on how many worker threads run the chunks.
//!
//! A clause's raw violation is normalized by `1 + scale`, where `scale` is the
//! largest coordinate magnitude among the sample's inputs and the clause's two
//! sides. A sample fails when the normalized violation exceeds `tol`, which is
//! the `atol + rtol·scale` rule with `atol = rtol = tol`. Clauses built with
//! [`Clause::le_abs`] and boolean clauses are not normalized.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::element::Element;
use crate::sampling::{stream_rng, Sampler, DEFAULT_RADIUS};
use crate::space::SpaceHandle;

/// Samples per generator stream.
pub const CHUNK: usize = 256;

/// Witnesses kept per report.
pub const MAX_WITNESSES: usize = 8;

/// One failing sample.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Failure {
    pub sample: usize,
    pub clause: String,
    pub inputs: BTreeMap<String, Vec<f64>>,
    pub lhs: Vec<f64>,
    pub rhs: Vec<f64>,
    pub delta: f64,
}

/// Outcome of a sampled check.
///
/// `max_violation` and every `delta` are violations as defined in the module
/// docs, so `failures` is empty exactly when `max_violation <= tol`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LawReport {
    pub law: String,
    pub samples: usize,
    pub seed: u64,
    pub tol: f64,
    pub max_violation: f64,
    pub failure_count: usize,
    pub failures: Vec<Failure>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl LawReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub(crate) fn with_note(mut self, note: &str) -> Self {
        self.note = Some(note.to_string());
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) enum Rel {
    Eq,
    LeqInitial,
    LeqSpecific,
    /// `lhs[0] <= rhs[0]`
    LeScalar,
    /// `lhs[0] <= rhs[0]` with the raw, unnormalized excess as violation.
    LeAbsolute,
    /// `rhs` must be nonzero whenever `lhs` is.
    NonzeroWith,
    /// Two booleans encoded as 0/1 must agree.
    Iff,
}

#[derive(Debug, Clone)]
pub(crate) struct Clause {
    pub label: &'static str,
    pub rel: Rel,
    pub lhs: Element,
    pub rhs: Element,
}

impl Clause {
    pub fn eq(label: &'static str, lhs: Element, rhs: Element) -> Self {
        Self {
            label,
            rel: Rel::Eq,
            lhs,
            rhs,
        }
    }

    pub fn leq_initial(label: &'static str, lhs: Element, rhs: Element) -> Self {
        Self {
            label,
            rel: Rel::LeqInitial,
            lhs,
            rhs,
        }
    }

    pub fn leq_specific(label: &'static str, lhs: Element, rhs: Element) -> Self {
        Self {
            label,
            rel: Rel::LeqSpecific,
            lhs,
            rhs,
        }
    }

    pub fn le(label: &'static str, lhs: f64, rhs: f64) -> Self {
        Self {
            label,
            rel: Rel::LeScalar,
            lhs: Element::new(vec![lhs]),
            rhs: Element::new(vec![rhs]),
        }
    }

    pub fn le_abs(label: &'static str, lhs: f64, rhs: f64) -> Self {
        Self {
            label,
            rel: Rel::LeAbsolute,
            lhs: Element::new(vec![lhs]),
            rhs: Element::new(vec![rhs]),
        }
    }

    pub fn nonzero_with(label: &'static str, x: Element, image: Element) -> Self {
        Self {
            label,
            rel: Rel::NonzeroWith,
            lhs: x,
            rhs: image,
        }
    }

    pub fn iff(label: &'static str, a: bool, b: bool) -> Self {
        let enc = |v: bool| Element::new(vec![if v { 1.0 } else { 0.0 }]);
        Self {
            label,
            rel: Rel::Iff,
            lhs: enc(a),
            rhs: enc(b),
        }
    }

    /// Boolean fact that must hold.
    pub fn holds(label: &'static str, value: bool) -> Self {
        Self::iff(label, value, true)
    }

    /// Normalized violation.
    fn violation(&self, space: &SpaceHandle, input_scale: f64, tol: f64) -> f64 {
        let scale = input_scale.max(self.lhs.max_abs()).max(self.rhs.max_abs());
        let raw = match self.rel {
            Rel::Eq => self.lhs.dist_inf(&self.rhs),
            Rel::LeqInitial => space.initial_violation(&(&self.rhs - &self.lhs)),
            Rel::LeqSpecific => space.specific_violation(&(&self.rhs - &self.lhs)),
            Rel::LeScalar => (self.lhs[0] - self.rhs[0]).max(0.0),
            Rel::NonzeroWith => {
                let image = self.rhs.max_abs();
                if image <= tol * (1.0 + image) {
                    self.lhs.max_abs()
                } else {
                    0.0
                }
            }
            Rel::Iff => return if self.lhs[0] == self.rhs[0] { 0.0 } else { 1.0 },
            Rel::LeAbsolute => {
                let v = self.lhs[0] - self.rhs[0];
                return if v.is_nan() { f64::MAX } else { v.max(0.0) };
            }
        };
        let v = raw / (1.0 + scale);
        if v.is_nan() {
            f64::MAX
        } else {
            v
        }
    }
}

/// Inputs drawn for one sample and the clauses they must satisfy.
#[derive(Debug, Clone, Default)]
pub(crate) struct Evaluation {
    pub inputs: Vec<(&'static str, Element)>,
    pub clauses: Vec<Clause>,
}

impl Evaluation {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn input(mut self, name: &'static str, value: &Element) -> Self {
        self.inputs.push((name, value.clone()));
        self
    }

    pub fn scalar(mut self, name: &'static str, value: f64) -> Self {
        self.inputs.push((name, Element::new(vec![value])));
        self
    }

    pub fn clause(mut self, c: Clause) -> Self {
        self.clauses.push(c);
        self
    }

    pub fn clauses(mut self, cs: impl IntoIterator<Item = Clause>) -> Self {
        self.clauses.extend(cs);
        self
    }
}

struct ChunkOutcome {
    max_violation: f64,
    failure_count: usize,
    failures: Vec<Failure>,
}

/// Runs `eval` on `samples` deterministic draws.
pub(crate) fn run_sampled<F>(
    space: &SpaceHandle,
    label: &str,
    samples: usize,
    seed: u64,
    tol: f64,
    eval: F,
) -> LawReport
where
    F: Fn(&mut Sampler<'_>) -> Evaluation + Sync,
{
    let chunks = samples.div_ceil(CHUNK);
    let outcomes: Vec<ChunkOutcome> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut sampler =
                Sampler::new(space, stream_rng(seed, label, c as u64), DEFAULT_RADIUS);
            let mut out = ChunkOutcome {
                max_violation: 0.0,
                failure_count: 0,
                failures: Vec::new(),
            };
            let end = ((c + 1) * CHUNK).min(samples);
            for sample in c * CHUNK..end {
                let ev = eval(&mut sampler);
                let input_scale = ev
                    .inputs
                    .iter()
                    .fold(0.0_f64, |m, (_, e)| m.max(e.max_abs()));
                let worst = ev
                    .clauses
                    .iter()
                    .map(|cl| (cl.violation(space, input_scale, tol), cl))
                    .fold(None::<(f64, &Clause)>, |best, cur| match best {
                        Some(b) if b.0 >= cur.0 => Some(b),
                        _ => Some(cur),
                    });
                let Some((v, clause)) = worst else { continue };
                out.max_violation = out.max_violation.max(v);
                if v > tol {
                    out.failure_count += 1;
                    if out.failures.len() < MAX_WITNESSES {
                        out.failures.push(Failure {
                            sample,
                            clause: clause.label.to_string(),
                            inputs: ev
                                .inputs
                                .iter()
                                .map(|(k, e)| (k.to_string(), e.as_slice().to_vec()))
                                .collect(),
                            lhs: clause.lhs.as_slice().to_vec(),
                            rhs: clause.rhs.as_slice().to_vec(),
                            delta: v,
                        });
                    }
                }
            }
            out
        })
        .collect();

    let mut report = LawReport {
        law: label.to_string(),
        samples,
        seed,
        tol,
        max_violation: 0.0,
        failure_count: 0,
        failures: Vec::new(),
        note: None,
    };
    for o in outcomes {
        report.max_violation = report.max_violation.max(o.max_violation);
        report.failure_count += o.failure_count;
        for f in o.failures {
            if report.failures.len() < MAX_WITNESSES {
                report.failures.push(f);
            }
        }
    }
    report
}
