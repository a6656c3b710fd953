//! Verification suites: laws, hull propositions and norm checks bundled into
//! one report with a single verdict.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::element::Tolerance;
use crate::engine::LawReport;
use crate::error::{Error, Result};
use crate::hulls::{check_box_gauge_monotone, check_hull_props, BoxSet};
use crate::laws::check_all;
use crate::norms::{
    check_asym_axioms, check_cone_norm, check_lipschitz_transfer, check_norm0_axioms,
    check_q_continuity, check_seminorm_class, observe_ql_ratio, ConeNormReport, FunctionalHandle,
    QVariant, RatioObservation, SeminormClass,
};
use crate::ray::random_ray_space;
use crate::sampling::RNG_NAME;
use crate::space::{SpaceHandle, SpaceSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Core,
    Hulls,
    Norms,
    All,
}

impl Suite {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "core" => Ok(Self::Core),
            "hulls" => Ok(Self::Hulls),
            "norms" => Ok(Self::Norms),
            "all" => Ok(Self::All),
            _ => Err(Error::Input(format!(
                "unknown suite `{s}` (core, hulls, norms, all)"
            ))),
        }
    }

    fn includes(self, other: Suite) -> bool {
        self == Suite::All || self == other
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Environment {
    pub version: String,
    pub seed: u64,
    pub rng: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<String>,
}

/// Checks that are reported but do not enter the verdict.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Observations {
    pub reports: Vec<LawReport>,
    pub ratios: Vec<RatioObservation>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub space: SpaceSpec,
    pub samples: usize,
    pub seed: u64,
    pub tol: f64,
    pub verdict: Verdict,
    pub laws: Vec<LawReport>,
    pub cone_norms: Vec<ConeNormReport>,
    pub observations: Observations,
    pub environment: Environment,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// Reports with at least one failure.
    pub fn failing(&self) -> Vec<&LawReport> {
        self.laws
            .iter()
            .chain(self.cone_norms.iter().flat_map(|c| c.axioms.values()))
            .filter(|r| !r.passed())
            .collect()
    }
}

/// Runs `suite` on `space`. `tol` may be 0 to get a negative control run.
pub fn run_suite(
    space: &SpaceHandle,
    suite: Suite,
    samples: usize,
    seed: u64,
    tol: f64,
) -> Result<SuiteReport> {
    if samples == 0 {
        return Err(Error::Input("samples must be at least 1".into()));
    }
    if !(0.0..=Tolerance::MAX).contains(&tol) {
        return Err(Error::Input(format!(
            "tol {tol} outside [0, {}]",
            Tolerance::MAX
        )));
    }
    let mut laws = Vec::new();
    let mut cone_norms = Vec::new();
    let mut observations = Observations::default();

    if suite.includes(Suite::Core) {
        laws.extend(check_all(space, samples, seed, tol)?);
    }
    if suite.includes(Suite::Hulls) {
        laws.extend(check_hull_props(space, samples, seed, tol));
        if let SpaceHandle::BvGrid(g) = space {
            laws.push(check_box_gauge_monotone(
                g,
                &BoxSet::symmetric(g.dim(), 1.0)?,
                samples,
                seed,
                tol,
            ));
        }
    }
    if suite.includes(Suite::Norms) {
        use FunctionalHandle as F;
        use SeminormClass::{MixedLattice as Ml, MixedMonotone as Mm};
        let q = |p: F| F::QOf(Box::new(p));
        let class = |p: &F, c| check_seminorm_class(space, p, c, samples, seed, tol);
        match space {
            SpaceHandle::RayCone(_) => {
                for v in [QVariant::L, QVariant::R] {
                    cone_norms.push(check_cone_norm(space, v, samples, seed, tol));
                }
                laws.push(class(&F::Norm0, Ml)?);
                laws.push(class(&F::Norm0, Mm)?);
                laws.push(check_asym_axioms(space, &F::Norm0, samples, seed, tol)?);
                laws.push(check_norm0_axioms(space, samples, seed, tol)?);
                laws.push(check_lipschitz_transfer(space, samples, seed)?);
                laws.push(check_q_continuity(space, samples, seed, tol)?);
                observations
                    .ratios
                    .push(observe_ql_ratio(space, samples, seed)?);
            }
            SpaceHandle::BvGrid(g) => {
                laws.push(class(&F::Bv, Mm)?);
                laws.push(class(&q(F::Bv), Ml)?);
                laws.push(class(&q(F::Bv), Mm)?);
                laws.push(class(&F::Sup, Mm)?);
                laws.push(class(&F::Gauge(BoxSet::symmetric(g.dim(), 1.0)?), Mm)?);
                laws.push(check_asym_axioms(space, &q(F::Bv), samples, seed, tol)?);
                observations.reports.push(
                    class(&F::Sup, Ml)?.with_note(
                        "informational; the exhaustive sup-norm audit decides this claim",
                    ),
                );
            }
            SpaceHandle::ProductRiesz(_) => {
                for v in [QVariant::L, QVariant::R] {
                    cone_norms.push(check_cone_norm(space, v, samples, seed, tol));
                }
                laws.push(class(&F::Sup, Ml)?);
                laws.push(class(&F::Sup, Mm)?);
                laws.push(class(&q(F::Sup), Ml)?);
                laws.push(check_asym_axioms(space, &F::Sup, samples, seed, tol)?);
            }
        }
    }

    let pass = laws.iter().all(LawReport::passed) && cone_norms.iter().all(ConeNormReport::passed);
    Ok(SuiteReport {
        suite,
        space: space.to_spec(),
        samples,
        seed,
        tol,
        verdict: if pass { Verdict::Pass } else { Verdict::Fail },
        laws,
        cone_norms,
        observations,
        environment: Environment {
            version: env!("CARGO_PKG_VERSION").to_string(),
            seed,
            rng: RNG_NAME.to_string(),
            timestamp: None,
        },
    })
}

/// Margin `min aᵢ·x̂` required of randomly drawn cones.
pub const FIXTURE_MARGIN: f64 = 0.2;

/// Five random ray spaces in dimensions 2, 3, 4, 5, 3 with at most 8 facets.
pub fn random_ray_fixtures(seed: u64) -> Result<Vec<SpaceHandle>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    [(2, 3), (3, 5), (4, 6), (5, 8), (3, 8)]
        .into_iter()
        .map(|(dim, facets)| {
            random_ray_space(&mut rng, dim, facets, FIXTURE_MARGIN, Tolerance::default())
                .map(SpaceHandle::RayCone)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_pass_on_fixtures() {
        for space in [
            SpaceHandle::e2(),
            SpaceHandle::grid(2).unwrap(),
            SpaceHandle::riesz(4).unwrap(),
        ] {
            let r = run_suite(&space, Suite::All, 300, 0, 1e-9).unwrap();
            assert!(r.passed(), "{}: {:#?}", space.kind(), r.failing().first());
        }
    }

    #[test]
    fn sup_norm_observation_is_recorded_but_not_counted() {
        let r = run_suite(&SpaceHandle::grid(2).unwrap(), Suite::Norms, 3000, 0, 1e-9).unwrap();
        assert!(r.passed());
        assert_eq!(r.observations.reports.len(), 1);
        assert!(!r.observations.reports[0].passed());
    }

    #[test]
    fn zero_tolerance_is_a_negative_control() {
        let space = random_ray_fixtures(1).unwrap().remove(3);
        let r = run_suite(&space, Suite::Core, 2000, 0, 0.0).unwrap();
        assert!(!r.passed());
        let again = run_suite(&space, Suite::Core, 2000, 0, 1e-9).unwrap();
        assert!(again.passed(), "{:#?}", again.failing().first());
    }

    #[test]
    fn config_guards() {
        let e2 = SpaceHandle::e2();
        assert!(run_suite(&e2, Suite::Core, 0, 0, 1e-9).is_err());
        assert!(run_suite(&e2, Suite::Core, 10, 0, 0.1).is_err());
        assert!(Suite::parse("everything").is_err());
    }

    #[test]
    fn fixtures_have_requested_shapes() {
        let f = random_ray_fixtures(7).unwrap();
        let dims: Vec<usize> = f.iter().map(SpaceHandle::dim).collect();
        assert_eq!(dims, vec![2, 3, 4, 5, 3]);
        for s in &f {
            assert!(s.as_ray().unwrap().cone().facets().len() <= 8);
        }
    }
}
