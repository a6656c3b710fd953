//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use mixlat_core::hulls::check_hull_props;
use mixlat_core::norms::{check_cone_norm, check_lipschitz_transfer, check_seminorm_class};
use mixlat_core::sampling::{stream_rng, Sampler};
use mixlat_core::{
    audit_sup_claims, check_all, env_down, env_up, random_ray_fixtures, BoxSet, Element,
    FunctionalHandle, LawReport, QVariant, RaySpace, SeminormClass, SpaceHandle,
};

const SEED: u64 = 0;
const FIXTURE_SEED: u64 = 2024;
const LAW_SAMPLES: usize = 10_000;
const ORACLE_SAMPLES: usize = 1_000;
const COMPETITORS: usize = 1_000;
const RADIUS: f64 = 10.0;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ray_fixtures() -> Vec<SpaceHandle> {
    random_ray_fixtures(FIXTURE_SEED).expect("ray fixtures")
}

fn first_failure<'a>(reports: impl IntoIterator<Item = &'a LawReport>) -> Option<String> {
    reports.into_iter().find(|r| !r.passed()).map(|r| {
        format!(
            "{} failed {} of {} samples, max violation {:e}",
            r.law, r.failure_count, r.samples, r.max_violation
        )
    })
}

fn law_suite() -> Outcome {
    let start = Instant::now();
    let mut spaces = ray_fixtures();
    for m in [1, 2, 5, 20] {
        spaces.push(SpaceHandle::grid(m).unwrap());
    }
    spaces.push(SpaceHandle::riesz(4).unwrap());
    let mut checked = 0;
    for space in &spaces {
        let reports = check_all(space, LAW_SAMPLES, SEED, 1e-7).map_err(|e| e.to_string())?;
        if let Some(f) = first_failure(&reports) {
            return Err(format!("{} (dim {}): {f}", space.kind(), space.dim()));
        }
        checked += reports.len();
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(120) {
        return Err(format!(
            "runtime {:.1}s exceeds 120s",
            elapsed.as_secs_f64()
        ));
    }
    Ok(format!(
        "{checked} law runs on {} spaces in {:.1}s",
        spaces.len(),
        elapsed.as_secs_f64()
    ))
}

/// `min{t >= 0 : y + t x̂ ∈ C}` by bracketing and 80 bisection steps on raw facet tests.
fn bisect_shift(ray: &RaySpace, y: &Element) -> f64 {
    let inside = |t: f64| {
        ray.cone()
            .facets()
            .iter()
            .all(|a| a.dot(&y.axpy(t, ray.x_hat())) >= 0.0)
    };
    if inside(0.0) {
        return 0.0;
    }
    let mut hi = 1.0;
    while !inside(hi) {
        hi *= 2.0;
    }
    let mut lo = 0.0;
    for _ in 0..80 {
        let mid = 0.5 * (lo + hi);
        if inside(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}

fn oracle_agreement() -> Outcome {
    let mut worst: f64 = 0.0;
    for (k, space) in ray_fixtures().iter().enumerate() {
        let ray = space.as_ray().unwrap();
        let mut s = Sampler::new(space, stream_rng(SEED, "accept-shift", k as u64), RADIUS);
        for i in 0..ORACLE_SAMPLES {
            let y = s.element();
            let (closed, bisected) = (ray.t_min_shift(&y), bisect_shift(ray, &y));
            let rel = (closed - bisected).abs() / bisected.abs().max(1.0);
            worst = worst.max(rel);
            if rel > 1e-9 {
                return Err(format!(
                    "ray fixture {k} sample {i}: closed {closed} vs bisection {bisected}"
                ));
            }
        }
    }

    let mut exceptions = 0usize;
    for m in [1, 2, 5, 20] {
        let space = SpaceHandle::grid(m).unwrap();
        let grid = space.as_grid().unwrap();
        let mut s = Sampler::new(
            &space,
            stream_rng(SEED, "accept-grid-min", m as u64),
            RADIUS,
        );
        let slack = 1e-9;
        for _ in 0..ORACLE_SAMPLES.div_ceil(4) {
            let (f, g) = (s.element(), s.element());
            let up = env_up(&space, &f, &g).unwrap();
            let down = env_down(&space, &f, &g).unwrap();
            if !grid.sleq(&f, &up) || (&up - &g).iter().any(|&c| c < -slack) {
                exceptions += 1;
            }
            if !grid.sleq(&down, &f) || (&g - &down).iter().any(|&c| c < -slack) {
                exceptions += 1;
            }
            for _ in 0..COMPETITORS {
                let (mut run_up, mut run_down) = (0.0_f64, 0.0_f64);
                let mut above = Vec::with_capacity(f.dim());
                let mut below = Vec::with_capacity(f.dim());
                for i in 0..f.dim() {
                    let extra = s.scalar(0.0, 1.0);
                    run_up = run_up.max((g[i] - f[i]).max(0.0) + extra);
                    run_down = run_down.max((f[i] - g[i]).max(0.0) + extra);
                    above.push(f[i] + run_up);
                    below.push(f[i] - run_down);
                }
                let (above, below) = (Element::new(above), Element::new(below));
                if up.iter().zip(above.iter()).any(|(w, c)| w > &(c + slack)) {
                    exceptions += 1;
                }
                if down.iter().zip(below.iter()).any(|(w, c)| w < &(c - slack)) {
                    exceptions += 1;
                }
            }
        }
    }
    if exceptions > 0 {
        return Err(format!("{exceptions} grid minimality exceptions"));
    }
    Ok(format!(
        "shift max relative gap {worst:.1e}; grid envelopes tie or beat every competitor"
    ))
}

fn riesz_exact() -> Outcome {
    let space = SpaceHandle::riesz(4).unwrap();
    let mut s = Sampler::new(&space, stream_rng(SEED, "accept-riesz", 0), RADIUS);
    for i in 0..LAW_SAMPLES {
        let (u, v) = (s.element(), s.element());
        let max = u.zip_with(&v, f64::max);
        let min = u.zip_with(&v, f64::min);
        if env_up(&space, &u, &v).unwrap() != max || env_down(&space, &u, &v).unwrap() != min {
            return Err(format!(
                "sample {i}: envelope differs from coordinatewise max/min"
            ));
        }
    }
    Ok(format!("{LAW_SAMPLES} samples exact"))
}

fn cone_norms() -> Outcome {
    let mut axioms = 0;
    for space in &ray_fixtures() {
        for v in [QVariant::L, QVariant::R] {
            let report = check_cone_norm(space, v, LAW_SAMPLES, SEED, 1e-8);
            if let Some(f) = first_failure(report.axioms.values()) {
                return Err(format!("dim {}: {f}", space.dim()));
            }
            if v == QVariant::R
                && report
                    .axioms
                    .keys()
                    .filter(|k| k.starts_with("monotone"))
                    .count()
                    != 2
            {
                return Err("variant r lacks monotonicity checks".into());
            }
            axioms += report.axioms.len();
        }
    }
    Ok(format!("{axioms} axiom checks on 5 ray spaces"))
}

fn lipschitz() -> Outcome {
    for space in &ray_fixtures() {
        let r = check_lipschitz_transfer(space, LAW_SAMPLES, SEED).map_err(|e| e.to_string())?;
        if let Some(f) = first_failure([&r]) {
            return Err(format!("dim {}: {f}", space.dim()));
        }
    }
    Ok(format!("{LAW_SAMPLES} pairs per ray space"))
}

fn hulls() -> Outcome {
    let mut lines = Vec::new();
    for space in [SpaceHandle::grid(5).unwrap(), SpaceHandle::e2()] {
        let reports = check_hull_props(&space, LAW_SAMPLES, SEED, 1e-9);
        if let Some(f) = first_failure(&reports) {
            return Err(format!("{}: {f}", space.kind()));
        }
        let absorb = reports
            .iter()
            .find(|r| r.law == "H-MS-absorb")
            .ok_or("missing absorbency check")?;
        if absorb.samples != ORACLE_SAMPLES {
            return Err(format!("absorbency ran {} probes", absorb.samples));
        }
        lines.push(format!("{} {} checks", space.kind(), reports.len()));
    }
    Ok(format!(
        "{}; absorbency found on grid, refused off-ray on E2",
        lines.join(", ")
    ))
}

fn seminorm_classes() -> Outcome {
    use FunctionalHandle as F;
    use SeminormClass::{MixedLattice, MixedMonotone};
    let grid = SpaceHandle::grid(5).unwrap();
    let cases = [
        (SpaceHandle::e2(), F::Norm0, MixedLattice),
        (grid.clone(), F::Bv, MixedMonotone),
        (grid.clone(), F::QOf(Box::new(F::Bv)), MixedLattice),
        (
            grid.clone(),
            F::Gauge(BoxSet::symmetric(grid.dim(), 1.0).unwrap()),
            MixedMonotone,
        ),
    ];
    for (space, handle, class) in &cases {
        let r = check_seminorm_class(space, handle, *class, LAW_SAMPLES, SEED, 1e-8)
            .map_err(|e| e.to_string())?;
        if let Some(f) = first_failure([&r]) {
            return Err(f);
        }
    }
    Ok("norm0, bv, q:bv and the box gauge verified".into())
}

fn audit() -> Outcome {
    let start = Instant::now();
    let report = audit_sup_claims(&SpaceHandle::grid(2).unwrap(), 4).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(60) {
        return Err(format!("audit took {:.1}s", elapsed.as_secs_f64()));
    }
    if !report.s_routes_agree || report.functions_searched != 729 {
        return Err("s routes disagree or search incomplete".into());
    }
    let witnessed = |holds: bool, has: bool| holds || has;
    if !witnessed(
        report.claim_norm_eq.holds,
        report.claim_norm_eq.counterexample.is_some(),
    ) || !witnessed(
        report.claim_ml_norm.holds,
        report.claim_ml_norm.counterexample.is_some(),
    ) {
        return Err("failed claim without a witness".into());
    }
    Ok(format!(
        "norm identity holds={}, sup mixed-lattice holds={}, {:.2}s",
        report.claim_norm_eq.holds,
        report.claim_ml_norm.holds,
        elapsed.as_secs_f64()
    ))
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let space = dir.path().join("e2.json");
    std::fs::write(
        &space,
        r#"{"type":"ray_cone","A":[[1,0],[0,1]],"x_hat":[1,1]}"#,
    )
    .map_err(|e| e.to_string())?;
    let run = |name: &str| -> Result<serde_json::Value, String> {
        let out = dir.path().join(name);
        let status = Command::new(env!("CARGO_BIN_EXE_mixlat"))
            .args([
                "verify",
                "--suite",
                "all",
                "--samples",
                "2000",
                "--seed",
                "7",
            ])
            .arg("--space")
            .arg(&space)
            .arg("--out")
            .arg(&out)
            .status()
            .map_err(|e| e.to_string())?;
        if !status.success() {
            return Err(format!("verify exited with {status}"));
        }
        let mut v: serde_json::Value =
            serde_json::from_str(&std::fs::read_to_string(&out).map_err(|e| e.to_string())?)
                .map_err(|e| e.to_string())?;
        v["environment"]
            .as_object_mut()
            .ok_or("no environment stamp")?
            .remove("timestamp");
        Ok(v)
    };
    let (a, b) = (run("a.json")?, run("b.json")?);
    if a != b {
        return Err("reports differ".into());
    }
    Ok("two verify runs agree outside the timestamp".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("law suite", law_suite),
        ("oracle agreement", oracle_agreement),
        ("product-Riesz envelopes", riesz_exact),
        ("cone norm axioms", cone_norms),
        ("Lipschitz transfer", lipschitz),
        ("hull propositions", hulls),
        ("seminorm classes", seminorm_classes),
        ("sup-norm audit", audit),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {} {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {} {name}: {detail}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
