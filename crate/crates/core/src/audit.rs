//! Exhaustive audit of two sup-norm claims about the three-point grid.
//!
//! Over all integer grid functions with `|values| ≤ value_bound` on `m = 2`:
//!
//! * `claim_norm_eq`: `s(g)(b) = ‖g‖∞` for every `g`, where `b` is the last grid point;
//! * `claim_ml_norm`: `s(f) ≤ s(g)` pointwise implies `‖f‖∞ ≤ ‖g‖∞`.
//!
//! `s(g)` is computed twice, as `gᵘ + gˡ` and as `½(ᵘ|g|ˡ + ˡ|g|ᵘ)`. On integer
//! data both routes are exact, so any disagreement is an error.
//!
//! Counterexamples are minimal by total `L¹` size, ties broken lexicographically.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::element::Element;
use crate::error::{Error, Result};
use crate::grid::{bv_norm, sup_norm};
use crate::mlcore::{lu_abs, r_low, r_upp, ul_abs};
use crate::space::SpaceHandle;

pub const MAX_VALUE_BOUND: u32 = 6;
pub const DEFAULT_VALUE_BOUND: u32 = 4;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NormEqWitness {
    pub g: Vec<f64>,
    pub s_g: Vec<f64>,
    pub s_g_at_b: f64,
    pub sup_norm: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MlNormWitness {
    pub f: Vec<f64>,
    pub g: Vec<f64>,
    pub s_f: Vec<f64>,
    pub s_g: Vec<f64>,
    pub sup_f: f64,
    pub sup_g: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClaimResult<W> {
    pub holds: bool,
    pub violations: u64,
    pub counterexample: Option<W>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AuditReport {
    pub m: usize,
    pub value_bound: u32,
    pub functions_searched: u64,
    pub pairs_searched: u64,
    pub s_routes_agree: bool,
    pub claim_norm_eq: ClaimResult<NormEqWitness>,
    pub claim_ml_norm: ClaimResult<MlNormWitness>,
    /// Pairs with `s(f) ≤ s(g)` and `‖f‖_BV > ‖g‖_BV`; informational only.
    pub bv_pairs_exceeding: u64,
    pub bv_note: String,
}

struct Entry {
    g: Element,
    s: Element,
    sup: f64,
    bv: f64,
    size: f64,
}

fn l1(v: &Element) -> f64 {
    v.iter().map(|c| c.abs()).sum()
}

fn lex_cmp(a: &[f64], b: &[f64]) -> std::cmp::Ordering {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.total_cmp(y))
        .find(|o| o.is_ne())
        .unwrap_or(std::cmp::Ordering::Equal)
}

/// Runs the audit on a grid space with `m = 2`.
pub fn audit_sup_claims(space: &SpaceHandle, value_bound: u32) -> Result<AuditReport> {
    let grid = space.as_grid()?;
    if grid.m() != 2 {
        return Err(Error::Input(format!(
            "audit needs a grid with m = 2, got m = {}",
            grid.m()
        )));
    }
    if value_bound > MAX_VALUE_BOUND {
        return Err(Error::Input(format!(
            "value bound {value_bound} exceeds {MAX_VALUE_BOUND}"
        )));
    }
    let b = i64::from(value_bound);
    let mut entries = Vec::new();
    for a0 in -b..=b {
        for a1 in -b..=b {
            for a2 in -b..=b {
                let g = Element::from([a0 as f64, a1 as f64, a2 as f64]);
                let via_parts = &r_upp(space, &g) + &r_low(space, &g);
                let via_abs = (&ul_abs(space, &g) + &lu_abs(space, &g)).scale(0.5);
                if via_parts != via_abs {
                    return Err(Error::Consistency(format!(
                        "s(g) routes disagree at g = {:?}: {:?} vs {:?}",
                        g.as_slice(),
                        via_parts.as_slice(),
                        via_abs.as_slice()
                    )));
                }
                entries.push(Entry {
                    sup: sup_norm(&g),
                    bv: bv_norm(&g),
                    size: l1(&g),
                    s: via_parts,
                    g,
                });
            }
        }
    }

    let mut norm_eq = ClaimResult {
        holds: true,
        violations: 0,
        counterexample: None::<NormEqWitness>,
    };
    let mut best_key: Option<&Entry> = None;
    for e in &entries {
        let at_b = e.s[2];
        if at_b != e.sup {
            norm_eq.holds = false;
            norm_eq.violations += 1;
            let better = best_key.is_none_or(|b| {
                e.size < b.size
                    || (e.size == b.size && lex_cmp(e.g.as_slice(), b.g.as_slice()).is_lt())
            });
            if better {
                best_key = Some(e);
            }
        }
    }
    norm_eq.counterexample = best_key.map(|e| NormEqWitness {
        g: e.g.as_slice().to_vec(),
        s_g: e.s.as_slice().to_vec(),
        s_g_at_b: e.s[2],
        sup_norm: e.sup,
    });

    struct Partial {
        violations: u64,
        bv_exceeding: u64,
        best: Option<(usize, usize)>,
    }
    let key = |i: usize, j: usize| {
        let (f, g) = (&entries[i], &entries[j]);
        (f.size + g.size, i, j)
    };
    let better = |cand: (usize, usize), cur: Option<(usize, usize)>| match cur {
        None => true,
        Some(c) => {
            let (ks, kc) = (key(cand.0, cand.1), key(c.0, c.1));
            ks.0 < kc.0
                || (ks.0 == kc.0
                    && lex_cmp(
                        &[entries[cand.0].g.as_slice(), entries[cand.1].g.as_slice()].concat(),
                        &[entries[c.0].g.as_slice(), entries[c.1].g.as_slice()].concat(),
                    )
                    .is_lt())
        }
    };
    let partials: Vec<Partial> = (0..entries.len())
        .into_par_iter()
        .map(|i| {
            let f = &entries[i];
            let mut p = Partial {
                violations: 0,
                bv_exceeding: 0,
                best: None,
            };
            for (j, g) in entries.iter().enumerate() {
                let dominated = f.s.iter().zip(g.s.iter()).all(|(a, b)| a <= b);
                if !dominated {
                    continue;
                }
                if f.bv > g.bv {
                    p.bv_exceeding += 1;
                }
                if f.sup > g.sup {
                    p.violations += 1;
                    if better((i, j), p.best) {
                        p.best = Some((i, j));
                    }
                }
            }
            p
        })
        .collect();
    let mut ml = ClaimResult {
        holds: true,
        violations: 0,
        counterexample: None::<MlNormWitness>,
    };
    let mut bv_exceeding = 0;
    let mut best = None;
    for p in partials {
        ml.violations += p.violations;
        bv_exceeding += p.bv_exceeding;
        if let Some(c) = p.best {
            if better(c, best) {
                best = Some(c);
            }
        }
    }
    ml.holds = ml.violations == 0;
    ml.counterexample = best.map(|(i, j)| {
        let (f, g) = (&entries[i], &entries[j]);
        MlNormWitness {
            f: f.g.as_slice().to_vec(),
            g: g.g.as_slice().to_vec(),
            s_f: f.s.as_slice().to_vec(),
            s_g: g.s.as_slice().to_vec(),
            sup_f: f.sup,
            sup_g: g.sup,
        }
    });

    let n = entries.len() as u64;
    Ok(AuditReport {
        m: 2,
        value_bound,
        functions_searched: n,
        pairs_searched: n * n,
        s_routes_agree: true,
        claim_norm_eq: norm_eq,
        claim_ml_norm: ml,
        bv_pairs_exceeding: bv_exceeding,
        bv_note: "s(f) ≤ s(g) is not claimed to bound the BV norm; mixed-monotonicity of the BV norm is checked separately"
            .to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g3() -> SpaceHandle {
        SpaceHandle::grid(2).unwrap()
    }

    #[test]
    fn bound_zero_is_trivial() {
        let r = audit_sup_claims(&g3(), 0).unwrap();
        assert_eq!(r.functions_searched, 1);
        assert!(r.claim_norm_eq.holds && r.claim_ml_norm.holds);
    }

    #[test]
    fn guards() {
        assert!(audit_sup_claims(&g3(), 9).is_err());
        assert!(audit_sup_claims(&SpaceHandle::grid(3).unwrap(), 1).is_err());
        assert!(matches!(
            audit_sup_claims(&SpaceHandle::e2(), 1),
            Err(Error::WrongSpace { .. })
        ));
    }

    #[test]
    fn default_bound_refutes_both_claims_minimally() {
        let r = audit_sup_claims(&g3(), DEFAULT_VALUE_BOUND).unwrap();
        assert_eq!(r.functions_searched, 729);
        assert!(r.s_routes_agree);
        let w = r.claim_norm_eq.counterexample.unwrap();
        assert!(!r.claim_norm_eq.holds);
        assert_eq!(w.g, vec![-1.0, 0.0, 1.0]);
        assert_eq!(w.s_g_at_b, 2.0);
        assert_eq!(w.sup_norm, 1.0);

        assert!(!r.claim_ml_norm.holds);
        let p = r.claim_ml_norm.counterexample.unwrap();
        assert!(p.s_f.iter().zip(&p.s_g).all(|(a, b)| a <= b));
        assert!(p.sup_f > p.sup_g);
        let size: f64 = p.f.iter().chain(&p.g).map(|c| c.abs()).sum();
        assert_eq!(size, 4.0);
        assert_eq!((p.f, p.g), (vec![0.0, -2.0, 0.0], vec![-1.0, 1.0, 0.0]));
    }

    #[test]
    fn hint_pair_is_a_counterexample() {
        let s = g3();
        let f = Element::from([0.0, 4.0, 0.0]);
        let g = Element::from([3.0, -3.0, 0.0]);
        let sf = &r_upp(&s, &f) + &r_low(&s, &f);
        let sg = &r_upp(&s, &g) + &r_low(&s, &g);
        assert_eq!(sf, Element::from([0.0, 4.0, 4.0]));
        assert_eq!(sg, Element::from([3.0, 6.0, 6.0]));
        assert!(sup_norm(&f) > sup_norm(&g));
    }

    #[test]
    fn constant_nonnegative_functions_satisfy_norm_eq() {
        let s = g3();
        for c in 0..5 {
            let g = Element::from([c as f64; 3]);
            let sg = &r_upp(&s, &g) + &r_low(&s, &g);
            assert_eq!(sg[2], sup_norm(&g));
        }
    }
}
