//! Mixed lattice vector spaces: two nested cones, asymmetric envelopes,
//! generalized absolute values, hulls, gauges and the norms built from them.
//!
//! Three concrete spaces are provided behind [`SpaceHandle`]:
//!
//! * [`RaySpace`]: `R^n` ordered by a polyhedral cone with a single-ray specific cone,
//! * [`GridSpace`]: sampled functions of bounded variation,
//! * [`RieszSpace`]: `R^n` with both orders coordinatewise.

pub mod audit;
pub mod element;
pub mod engine;
pub mod error;
pub mod grid;
pub mod hulls;
pub mod laws;
pub mod mlcore;
pub mod norms;
pub mod ray;
pub mod riesz;
pub mod sampling;
pub mod space;
pub mod suite;

pub use audit::{audit_sup_claims, AuditReport};
pub use element::{Element, Tolerance};
pub use engine::{Failure, LawReport};
pub use error::{Error, Result};
pub use grid::{bv_norm, sup_norm, GridFn, GridSpace};
pub use hulls::{BaseSet, BoxSet, FiniteSet, GaugeResult, SetSpec, Variant};
pub use laws::{check_all, check_law, check_law_id, LawId};
pub use mlcore::{env_down, env_up, gen_abs, parts, AbsTriple, Parts};
pub use norms::{ConeNormReport, FunctionalHandle, QVariant, SeminormClass};
pub use ray::{make_ray_space, random_ray_space, ConeH, IntervalExtent, RaySpace};
pub use riesz::RieszSpace;
pub use sampling::{Sampler, RNG_NAME};
pub use space::{SpaceHandle, SpaceSpec};
pub use suite::{random_ray_fixtures, run_suite, Suite, SuiteReport, Verdict};
