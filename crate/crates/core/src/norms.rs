//! Seminorms, asymmetric seminorm pairs and the cone norm `Q`.
//!
//! In a ray space every `s(z)` lies on the ray, so `‖z‖₀ = ‖s(z)‖₂` is the
//! ray coordinate of `s(z)` times `‖x̂‖₂`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::element::Element;
use crate::engine::{run_sampled, Clause, Evaluation, LawReport};
use crate::error::{Error, Result};
use crate::grid::{bv_norm, sup_norm};
use crate::hulls::{box_mf1_gauge, BoxSet};
use crate::mlcore::{r_low, r_upp, sym_abs};
use crate::sampling::{stream_rng, Sampler, DEFAULT_RADIUS};
use crate::space::SpaceHandle;

/// A real functional bound to a space by evaluation.
#[derive(Debug, Clone, PartialEq)]
pub enum FunctionalHandle {
    Norm0,
    Sup,
    Bv,
    /// Gauge of `MF₁(U)` for a grid box `U`.
    Gauge(BoxSet),
    /// `q(x) = p(s(x))`
    QOf(Box<FunctionalHandle>),
    /// `p₁(x) = ρ(xᵘ)`
    P1Of(Box<FunctionalHandle>),
    /// `p₂(x) = ρ(xˡ)`
    P2Of(Box<FunctionalHandle>),
}

impl FunctionalHandle {
    /// Parses `norm0`, `sup`, `bv`, `gauge:<file>`, `q:<h>`, `p1:<h>`, `p2:<h>`.
    /// `load_box` resolves the file argument of `gauge:`.
    pub fn parse(name: &str, load_box: &dyn Fn(&str) -> Result<BoxSet>) -> Result<Self> {
        let name = name.trim();
        if let Some((head, rest)) = name.split_once(':') {
            return match head {
                "gauge" => Ok(Self::Gauge(load_box(rest)?)),
                "q" => Ok(Self::QOf(Box::new(Self::parse(rest, load_box)?))),
                "p1" => Ok(Self::P1Of(Box::new(Self::parse(rest, load_box)?))),
                "p2" => Ok(Self::P2Of(Box::new(Self::parse(rest, load_box)?))),
                _ => Err(Error::Input(format!("unknown functional `{name}`"))),
            };
        }
        match name {
            "norm0" => Ok(Self::Norm0),
            "sup" => Ok(Self::Sup),
            "bv" => Ok(Self::Bv),
            _ => Err(Error::Input(format!("unknown functional `{name}`"))),
        }
    }

    pub fn eval(&self, space: &SpaceHandle, z: &Element) -> Result<f64> {
        space.check(z)?;
        self.eval_unchecked(space, z)
    }

    fn eval_unchecked(&self, space: &SpaceHandle, z: &Element) -> Result<f64> {
        match self {
            Self::Norm0 => norm0(space, z),
            Self::Sup => Ok(sup_norm(z)),
            Self::Bv => {
                space.as_grid()?;
                Ok(bv_norm(z))
            }
            Self::Gauge(u) => Ok(box_mf1_gauge(space.as_grid()?, u, z)?.value),
            Self::QOf(p) => p.eval_unchecked(space, &sym_abs(space, z)),
            Self::P1Of(p) => p.eval_unchecked(space, &r_upp(space, z)),
            Self::P2Of(p) => p.eval_unchecked(space, &r_low(space, z)),
        }
    }

    /// Evaluation inside sampled checks, where an error becomes NaN and is
    /// reported as a violation.
    fn value(&self, space: &SpaceHandle, z: &Element) -> f64 {
        self.eval_unchecked(space, z).unwrap_or(f64::NAN)
    }
}

impl fmt::Display for FunctionalHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Norm0 => f.write_str("norm0"),
            Self::Sup => f.write_str("sup"),
            Self::Bv => f.write_str("bv"),
            Self::Gauge(_) => f.write_str("gauge"),
            Self::QOf(p) => write!(f, "q:{p}"),
            Self::P1Of(p) => write!(f, "p1:{p}"),
            Self::P2Of(p) => write!(f, "p2:{p}"),
        }
    }
}

/// `‖z‖₀ = ‖s(z)‖₂` on a ray space.
pub fn norm0(space: &SpaceHandle, z: &Element) -> Result<f64> {
    let ray = space.as_ray()?;
    space.check(z)?;
    let tau = ray.ray_coord(&sym_abs(space, z))?;
    Ok(tau * ray.x_hat().norm2())
}

/// `(ρ(xᵘ), ρ(xˡ))`
pub fn asym_pair(space: &SpaceHandle, rho: &FunctionalHandle, z: &Element) -> Result<(f64, f64)> {
    space.check(z)?;
    Ok((
        rho.eval_unchecked(space, &r_upp(space, z))?,
        rho.eval_unchecked(space, &r_low(space, z))?,
    ))
}

/// `l`: `Q(z) = z∨0` onto `V_p`; `r`: `Q(z) = 0∨z` onto `V_sp`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum QVariant {
    L,
    R,
}

impl QVariant {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "l" | "L" => Ok(Self::L),
            "r" | "R" => Ok(Self::R),
            _ => Err(Error::Input(format!(
                "cone norm variant must be l or r, got `{s}`"
            ))),
        }
    }
}

pub fn cone_norm_q(space: &SpaceHandle, z: &Element, variant: QVariant) -> Result<Element> {
    space.check(z)?;
    Ok(q_apply(space, z, variant))
}

fn q_apply(space: &SpaceHandle, z: &Element, variant: QVariant) -> Element {
    let zero = Element::zeros(space.dim());
    match variant {
        QVariant::L => space.up(z, &zero),
        QVariant::R => space.up(&zero, z),
    }
}

/// Per-axiom reports for one cone norm variant.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConeNormReport {
    pub variant: QVariant,
    pub axioms: BTreeMap<String, LawReport>,
}

impl ConeNormReport {
    pub fn passed(&self) -> bool {
        self.axioms.values().all(LawReport::passed)
    }
}

/// Cone norm axioms and properness; variant `r` also gets both monotonicity checks.
pub fn check_cone_norm(
    space: &SpaceHandle,
    variant: QVariant,
    samples: usize,
    seed: u64,
    tol: f64,
) -> ConeNormReport {
    let q = move |sp: &SpaceHandle, z: &Element| q_apply(sp, z, variant);
    let target = move |s: &mut Sampler<'_>| match variant {
        QVariant::L => s.initial_positive(),
        QVariant::R => s.specific_positive(),
    };
    let target_leq = move |label: &'static str, a: Element, b: Element| match variant {
        QVariant::L => Clause::leq_initial(label, a, b),
        QVariant::R => Clause::leq_specific(label, a, b),
    };
    let tag = match variant {
        QVariant::L => "Q_l",
        QVariant::R => "Q_r",
    };
    let label = |axiom: &str| format!("{tag}:{axiom}");
    let mut axioms = BTreeMap::new();

    axioms.insert(
        "restriction_to_C".to_string(),
        run_sampled(space, &label("restriction_to_C"), samples, seed, tol, |s| {
            let c = target(s);
            let z = s.element();
            let zero = Element::zeros(z.dim());
            Evaluation::new().input("c", &c).input("z", &z).clauses([
                Clause::eq("Q(c) = c", q(s.space(), &c), c.clone()),
                target_leq("0 ≤ Q(z) in the target cone", zero, q(s.space(), &z)),
            ])
        }),
    );
    axioms.insert(
        "positive_homogeneity".to_string(),
        run_sampled(
            space,
            &label("positive_homogeneity"),
            samples,
            seed,
            tol,
            |s| {
                let z = s.element();
                let t = if s.index(8) == 0 {
                    0.0
                } else {
                    s.scalar(0.0, 4.0)
                };
                Evaluation::new()
                    .input("z", &z)
                    .scalar("t", t)
                    .clause(Clause::eq(
                        "Q(tz) = tQ(z)",
                        q(s.space(), &z.scale(t)),
                        q(s.space(), &z).scale(t),
                    ))
            },
        ),
    );
    axioms.insert(
        "subadditivity".to_string(),
        run_sampled(space, &label("subadditivity"), samples, seed, tol, |s| {
            let (z, w) = (s.element(), s.element());
            let sp = s.space();
            Evaluation::new()
                .input("z", &z)
                .input("w", &w)
                .clause(target_leq(
                    "Q(z+w) ≤ Q(z) + Q(w)",
                    q(sp, &(&z + &w)),
                    &q(sp, &z) + &q(sp, &w),
                ))
        }),
    );
    axioms.insert(
        "separation".to_string(),
        run_sampled(space, &label("separation"), samples, seed, tol, |s| {
            let z = nonzero_element(s);
            let sp = s.space();
            let (qz, qn) = (q(sp, &z), q(sp, &-&z));
            let both = Element::new(qz.iter().chain(qn.iter()).copied().collect());
            Evaluation::new()
                .input("z", &z)
                .clause(Clause::nonzero_with("z ≠ 0 ⟹ (Qz, Q(-z)) ≠ 0", z, both))
        }),
    );
    axioms.insert(
        "proper".to_string(),
        run_sampled(space, &label("proper"), samples, seed, tol, |s| {
            let z = s.element();
            let sp = s.space();
            let rest = &z - &q(sp, &z);
            Evaluation::new().input("z", &z).clause(Clause::eq(
                "Q(z - Qz) = 0",
                q(sp, &rest),
                Element::zeros(z.dim()),
            ))
        }),
    );
    if variant == QVariant::R {
        axioms.insert(
            "monotone_initial".to_string(),
            run_sampled(space, &label("monotone_initial"), samples, seed, tol, |s| {
                let (z, w) = s.initial_pair();
                let sp = s.space();
                Evaluation::new()
                    .input("z", &z)
                    .input("w", &w)
                    .clause(Clause::leq_initial("z ≤ w ⟹ Qz ≤ Qw", q(sp, &z), q(sp, &w)))
            }),
        );
        axioms.insert(
            "monotone_specific".to_string(),
            run_sampled(
                space,
                &label("monotone_specific"),
                samples,
                seed,
                tol,
                |s| {
                    let (z, w) = s.specific_pair();
                    let sp = s.space();
                    Evaluation::new()
                        .input("z", &z)
                        .input("w", &w)
                        .clause(Clause::leq_specific(
                            "z ≼ w ⟹ Qz ≼ Qw",
                            q(sp, &z),
                            q(sp, &w),
                        ))
                },
            ),
        );
    }
    ConeNormReport { variant, axioms }
}

// Nonzero draw with unit Euclidean length.
fn nonzero_element(s: &mut Sampler<'_>) -> Element {
    loop {
        let z = s.element();
        let n = z.norm2();
        if n > 1e-3 {
            return z.scale(1.0 / n);
        }
    }
}

/// Seminorm classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SeminormClass {
    /// `0 ≼ x ≤ y ⟹ p(x) ≤ p(y)`
    MixedMonotone,
    /// `s(x) ≤ s(y) ⟹ p(x) ≤ p(y)`
    MixedLattice,
}

impl SeminormClass {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::MixedMonotone => "mixed_monotone",
            Self::MixedLattice => "mixed_lattice",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "mixed_monotone" => Ok(Self::MixedMonotone),
            "mixed_lattice" => Ok(Self::MixedLattice),
            _ => Err(Error::Input(format!("unknown seminorm class `{s}`"))),
        }
    }
}

/// Sampled membership test of `p` in a seminorm class.
///
/// Mixed-lattice hypotheses `s(x) ≤ s(y)` are built from `y`: `x` is a scaled
/// copy of `y`, `yᵘ`, `yˡ` or `s(y)`, or the pair `(xᵘ - yᵘ, x - y)`; in the grid
/// and product spaces independent pairs that happen to be comparable are used too.
pub fn check_seminorm_class(
    space: &SpaceHandle,
    p: &FunctionalHandle,
    class: SeminormClass,
    samples: usize,
    seed: u64,
    tol: f64,
) -> Result<LawReport> {
    p.eval(space, &Element::zeros(space.dim()))?;
    let label = format!("{}:{}", class.as_str(), p);
    Ok(match class {
        SeminormClass::MixedMonotone => run_sampled(space, &label, samples, seed, tol, |s| {
            let x = s.specific_positive();
            let y = &x + &s.initial_positive();
            let sp = s.space();
            Evaluation::new()
                .input("x", &x)
                .input("y", &y)
                .clause(Clause::le(
                    "0 ≼ x ≤ y ⟹ p(x) ≤ p(y)",
                    p.value(sp, &x),
                    p.value(sp, &y),
                ))
        }),
        SeminormClass::MixedLattice => run_sampled(space, &label, samples, seed, tol, |s| {
            let (x, y) = s_comparable_pair(s);
            let sp = s.space();
            let px = p.value(sp, &x);
            Evaluation::new().input("x", &x).input("y", &y).clauses([
                Clause::leq_initial("s(x) ≤ s(y)", sym_abs(sp, &x), sym_abs(sp, &y)),
                Clause::le("s(x) ≤ s(y) ⟹ p(x) ≤ p(y)", px, p.value(sp, &y)),
                Clause::eq(
                    "p(s(x)) = p(x)",
                    Element::new(vec![p.value(sp, &sym_abs(sp, &x))]),
                    Element::new(vec![px]),
                ),
            ])
        }),
    })
}

fn s_comparable_pair(s: &mut Sampler<'_>) -> (Element, Element) {
    let sp = s.space();
    let y = s.element();
    let t = s.scalar(-1.0, 1.0);
    let kind = s.index(if matches!(sp, SpaceHandle::RayCone(_)) {
        5
    } else {
        6
    });
    match kind {
        0 => (y.scale(t), y),
        1 => (r_upp(sp, &y).scale(t), y),
        2 => (r_low(sp, &y).scale(t), y),
        3 => (sym_abs(sp, &y).scale(t), y),
        4 => {
            let x = s.element();
            (&r_upp(sp, &x) - &r_upp(sp, &y), &x - &y)
        }
        _ => {
            let x = s.element();
            let (sx, sy) = (sym_abs(sp, &x), sym_abs(sp, &y));
            if sp.leq_initial(&sx, &sy) {
                (x, y)
            } else if sp.leq_initial(&sy, &sx) {
                (y, x)
            } else {
                (y.scale(t), y)
            }
        }
    }
}

/// Asymmetric seminorm axioms for `p₁ = ρ(·ᵘ)`, `p₂ = ρ(·ˡ)` and `pˢ = p₁ + p₂`.
pub fn check_asym_axioms(
    space: &SpaceHandle,
    rho: &FunctionalHandle,
    samples: usize,
    seed: u64,
    tol: f64,
) -> Result<LawReport> {
    rho.eval(space, &Element::zeros(space.dim()))?;
    let label = format!("asym:{rho}");
    let is_ray = matches!(space, SpaceHandle::RayCone(_));
    Ok(run_sampled(space, &label, samples, seed, tol, |s| {
        let sp = s.space();
        let (z, w) = (nonzero_element(s).scale(s.scalar(0.1, 10.0)), s.element());
        let a = if s.index(8) == 0 {
            1.0
        } else {
            s.scalar(0.0, 4.0)
        };
        let b = s.scalar(-4.0, 4.0);
        let p1 = |v: &Element| rho.value(sp, &r_upp(sp, v));
        let p2 = |v: &Element| rho.value(sp, &r_low(sp, v));
        let ps = |v: &Element| p1(v) + p2(v);
        let nz = -&z;
        let zw = &z + &w;
        let sc = |v: f64| Element::new(vec![v]);
        let mut ev = Evaluation::new()
            .input("z", &z)
            .input("w", &w)
            .scalar("a", a)
            .scalar("b", b)
            .clauses([
                Clause::nonzero_with(
                    "A1: z ≠ 0 ⟹ (p₁(z), p₁(-z)) ≠ 0",
                    z.clone(),
                    Element::new(vec![p1(&z), p1(&nz)]),
                ),
                Clause::nonzero_with(
                    "A1: z ≠ 0 ⟹ (p₂(z), p₂(-z)) ≠ 0",
                    z.clone(),
                    Element::new(vec![p2(&z), p2(&nz)]),
                ),
                Clause::eq("A2: p₁(az) = a p₁(z)", sc(p1(&z.scale(a))), sc(a * p1(&z))),
                Clause::eq("A2: p₂(az) = a p₂(z)", sc(p2(&z.scale(a))), sc(a * p2(&z))),
                Clause::le("A3: p₁(z+w) ≤ p₁(z) + p₁(w)", p1(&zw), p1(&z) + p1(&w)),
                Clause::le("A3: p₂(z+w) ≤ p₂(z) + p₂(w)", p2(&zw), p2(&z) + p2(&w)),
                Clause::eq("p₁(-z) = p₂(z)", sc(p1(&nz)), sc(p2(&z))),
                Clause::nonzero_with("pˢ(z) > 0 for z ≠ 0", z.clone(), sc(ps(&z))),
                Clause::eq(
                    "pˢ(bz) = |b| pˢ(z)",
                    sc(ps(&z.scale(b))),
                    sc(b.abs() * ps(&z)),
                ),
                Clause::le("pˢ(z+w) ≤ pˢ(z) + pˢ(w)", ps(&zw), ps(&z) + ps(&w)),
            ]);
        if is_ray {
            ev = ev.clause(Clause::eq(
                "pˢ(z) = ρ(s(z))",
                sc(ps(&z)),
                sc(rho.value(sp, &sym_abs(sp, &z))),
            ));
        }
        ev
    }))
}

/// Definiteness on unit vectors, absolute homogeneity and the triangle inequality for `‖·‖₀`.
pub fn check_norm0_axioms(
    space: &SpaceHandle,
    samples: usize,
    seed: u64,
    tol: f64,
) -> Result<LawReport> {
    space.as_ray()?;
    Ok(run_sampled(
        space,
        "norm0:axioms",
        samples,
        seed,
        tol,
        |s| {
            let sp = s.space();
            let n = |v: &Element| FunctionalHandle::Norm0.value(sp, v);
            let u = nonzero_element(s);
            let (z, w) = (s.element(), s.element());
            let a = s.scalar(-4.0, 4.0);
            Evaluation::new()
                .input("u", &u)
                .input("z", &z)
                .input("w", &w)
                .scalar("a", a)
                .clauses([
                    Clause::le("‖u‖₂ = 1 ⟹ ‖u‖₀ > 1e-8", 1e-8, n(&u)),
                    Clause::eq(
                        "‖az‖₀ = |a| ‖z‖₀",
                        Element::new(vec![n(&z.scale(a))]),
                        Element::new(vec![a.abs() * n(&z)]),
                    ),
                    Clause::le("‖z+w‖₀ ≤ ‖z‖₀ + ‖w‖₀", n(&(&z + &w)), n(&z) + n(&w)),
                ])
        },
    ))
}

/// Absolute bound `‖xᵘ - yᵘ‖₀ ≤ ‖x - y‖₀ + 1e-8`.
pub fn check_lipschitz_transfer(
    space: &SpaceHandle,
    samples: usize,
    seed: u64,
) -> Result<LawReport> {
    space.as_ray()?;
    Ok(run_sampled(
        space,
        "norm0:lipschitz",
        samples,
        seed,
        1e-8,
        |s| {
            let sp = s.space();
            let n = |v: &Element| FunctionalHandle::Norm0.value(sp, v);
            let (x, y) = (s.element(), s.element());
            Evaluation::new()
                .input("x", &x)
                .input("y", &y)
                .clause(Clause::le_abs(
                    "‖xᵘ - yᵘ‖₀ ≤ ‖x - y‖₀",
                    n(&(&r_upp(sp, &x) - &r_upp(sp, &y))),
                    n(&(&x - &y)),
                ))
        },
    ))
}

/// `‖Q_r x - Q_r y‖₀ ≤ ‖x - y‖₀`
pub fn check_q_continuity(
    space: &SpaceHandle,
    samples: usize,
    seed: u64,
    tol: f64,
) -> Result<LawReport> {
    space.as_ray()?;
    Ok(run_sampled(
        space,
        "Q_r:continuity",
        samples,
        seed,
        tol,
        |s| {
            let sp = s.space();
            let n = |v: &Element| FunctionalHandle::Norm0.value(sp, v);
            let (x, y) = (s.element(), s.element());
            let d = &q_apply(sp, &x, QVariant::R) - &q_apply(sp, &y, QVariant::R);
            Evaluation::new()
                .input("x", &x)
                .input("y", &y)
                .clause(Clause::le(
                    "‖Q_r x - Q_r y‖₀ ≤ ‖x - y‖₀",
                    n(&d),
                    n(&(&x - &y)),
                ))
        },
    ))
}

/// Observed `max ‖Q_l x - Q_l y‖₀ / ‖x - y‖₀`, compared against 2 without asserting it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RatioObservation {
    pub name: String,
    pub samples: usize,
    pub seed: u64,
    pub max_ratio: f64,
    pub bound: f64,
    pub within_bound: bool,
    pub worst_pair: Option<(Vec<f64>, Vec<f64>)>,
}

pub fn observe_ql_ratio(
    space: &SpaceHandle,
    samples: usize,
    seed: u64,
) -> Result<RatioObservation> {
    space.as_ray()?;
    let label = "Q_l:ratio";
    let mut sampler = Sampler::new(space, stream_rng(seed, label, 0), DEFAULT_RADIUS);
    let mut max_ratio = 0.0_f64;
    let mut worst = None;
    for _ in 0..samples {
        let (x, y) = (sampler.element(), sampler.element());
        let den = norm0(space, &(&x - &y))?;
        if den <= 1e-12 {
            continue;
        }
        let num = norm0(
            space,
            &(&q_apply(space, &x, QVariant::L) - &q_apply(space, &y, QVariant::L)),
        )?;
        let ratio = num / den;
        if ratio > max_ratio {
            max_ratio = ratio;
            worst = Some((x.into_vec(), y.into_vec()));
        }
    }
    Ok(RatioObservation {
        name: label.to_string(),
        samples,
        seed,
        max_ratio,
        bound: 2.0,
        within_bound: max_ratio <= 2.0 + 1e-8,
        worst_pair: worst,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(v: &[f64]) -> Element {
        Element::from(v)
    }

    fn no_box(_: &str) -> Result<BoxSet> {
        Err(Error::Input("no sets here".into()))
    }

    #[test]
    fn norm0_examples() {
        let e2 = SpaceHandle::e2();
        assert!((norm0(&e2, &el(&[1.0, -2.0])).unwrap() - 3.0 * 2f64.sqrt()).abs() < 1e-12);
        assert_eq!(norm0(&e2, &el(&[0.0, 0.0])).unwrap(), 0.0);
        assert!((norm0(&e2, &el(&[1.0, 1.0])).unwrap() - 2f64.sqrt()).abs() < 1e-12);
        assert!(norm0(&SpaceHandle::grid(2).unwrap(), &el(&[0.0, 0.0, 0.0])).is_err());
    }

    #[test]
    fn asym_pair_examples() {
        let e2 = SpaceHandle::e2();
        let rho = FunctionalHandle::Norm0;
        let (p1, p2) = asym_pair(&e2, &rho, &el(&[1.0, -2.0])).unwrap();
        assert!((p1 - 2f64.sqrt()).abs() < 1e-12);
        assert!((p2 - 2.0 * 2f64.sqrt()).abs() < 1e-12);
        let (_, p2) = asym_pair(&e2, &rho, &el(&[2.0, 2.0])).unwrap();
        assert_eq!(p2, 0.0);
        let (p1n, _) = asym_pair(&e2, &rho, &el(&[-1.0, 2.0])).unwrap();
        assert!((p1n - 2.0 * 2f64.sqrt()).abs() < 1e-12);
        let (a, b) = asym_pair(&e2, &rho, &el(&[1.0, -2.0])).unwrap();
        assert!((a + b - norm0(&e2, &el(&[1.0, -2.0])).unwrap()).abs() < 1e-12);
    }

    #[test]
    fn cone_norm_examples() {
        let e2 = SpaceHandle::e2();
        let z = el(&[1.0, -2.0]);
        let ql = cone_norm_q(&e2, &z, QVariant::L).unwrap();
        assert_eq!(ql, el(&[3.0, 0.0]));
        assert_eq!(
            cone_norm_q(&e2, &(&z - &ql), QVariant::L).unwrap(),
            el(&[0.0, 0.0])
        );
        assert_eq!(
            cone_norm_q(&e2, &el(&[0.5, 2.0]), QVariant::L).unwrap(),
            el(&[0.5, 2.0])
        );
        assert_eq!(cone_norm_q(&e2, &z, QVariant::R).unwrap(), el(&[1.0, 1.0]));
        assert_eq!(
            cone_norm_q(&e2, &el(&[2.0, -1.0]), QVariant::R).unwrap(),
            el(&[2.0, 2.0])
        );
    }

    #[test]
    fn cone_norm_checks_pass_on_e2() {
        let e2 = SpaceHandle::e2();
        for v in [QVariant::L, QVariant::R] {
            let r = check_cone_norm(&e2, v, 2000, 0, 1e-8);
            assert!(r.passed(), "{r:?}");
            assert_eq!(r.axioms.len(), if v == QVariant::R { 7 } else { 5 });
        }
    }

    #[test]
    fn handle_parsing() {
        assert_eq!(
            FunctionalHandle::parse("q:bv", &no_box).unwrap(),
            FunctionalHandle::QOf(Box::new(FunctionalHandle::Bv))
        );
        assert_eq!(
            FunctionalHandle::parse("p1:norm0", &no_box)
                .unwrap()
                .to_string(),
            "p1:norm0"
        );
        assert!(FunctionalHandle::parse("gauge:x.json", &no_box).is_err());
        assert!(FunctionalHandle::parse("l2", &no_box).is_err());
        let boxed = |_: &str| BoxSet::symmetric(3, 1.0);
        assert!(matches!(
            FunctionalHandle::parse("gauge:u.json", &boxed).unwrap(),
            FunctionalHandle::Gauge(_)
        ));
    }

    #[test]
    fn seminorm_classes_on_fixtures() {
        let e2 = SpaceHandle::e2();
        let g3 = SpaceHandle::grid(2).unwrap();
        let n0 = FunctionalHandle::Norm0;
        let bv = FunctionalHandle::Bv;
        let qbv = FunctionalHandle::QOf(Box::new(FunctionalHandle::Bv));
        let run = |sp: &SpaceHandle, p: &FunctionalHandle, c| {
            check_seminorm_class(sp, p, c, 2000, 0, 1e-8).unwrap()
        };
        assert!(run(&e2, &n0, SeminormClass::MixedLattice).passed());
        assert!(run(&e2, &n0, SeminormClass::MixedMonotone).passed());
        assert!(run(&g3, &bv, SeminormClass::MixedMonotone).passed());
        assert!(run(&g3, &qbv, SeminormClass::MixedLattice).passed());
        assert!(run(&g3, &qbv, SeminormClass::MixedMonotone).passed());
        let gauge = FunctionalHandle::Gauge(BoxSet::symmetric(3, 1.0).unwrap());
        assert!(run(&g3, &gauge, SeminormClass::MixedMonotone).passed());
        assert!(check_seminorm_class(&g3, &n0, SeminormClass::MixedLattice, 10, 0, 1e-8).is_err());
    }

    #[test]
    fn sup_norm_is_not_mixed_lattice_on_grid() {
        let g3 = SpaceHandle::grid(2).unwrap();
        let r = check_seminorm_class(
            &g3,
            &FunctionalHandle::Sup,
            SeminormClass::MixedLattice,
            4000,
            0,
            1e-8,
        )
        .unwrap();
        assert!(!r.passed());
        let ok = check_seminorm_class(
            &g3,
            &FunctionalHandle::Sup,
            SeminormClass::MixedMonotone,
            4000,
            0,
            1e-8,
        )
        .unwrap();
        assert!(ok.passed());
    }

    #[test]
    fn asym_and_norm0_checks() {
        let e2 = SpaceHandle::e2();
        assert!(
            check_asym_axioms(&e2, &FunctionalHandle::Norm0, 2000, 0, 1e-8)
                .unwrap()
                .passed()
        );
        assert!(check_norm0_axioms(&e2, 2000, 0, 1e-8).unwrap().passed());
        assert!(check_lipschitz_transfer(&e2, 2000, 0).unwrap().passed());
        assert!(check_q_continuity(&e2, 2000, 0, 1e-8).unwrap().passed());
        let obs = observe_ql_ratio(&e2, 2000, 0).unwrap();
        assert!(obs.max_ratio > 0.0);
        let g3 = SpaceHandle::grid(2).unwrap();
        let qbv = FunctionalHandle::QOf(Box::new(FunctionalHandle::Bv));
        assert!(check_asym_axioms(&g3, &qbv, 2000, 0, 1e-8)
            .unwrap()
            .passed());
    }
}
