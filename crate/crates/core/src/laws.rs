//! The catalogue of identities and inequalities every mixed lattice space must
//! satisfy, checked by sampling.
//!
//! Order hypotheses are met by construction (see [`crate::sampling`]). Laws of
//! the form "A iff B" get a forward clause on constructed inputs and a converse
//! clause on inputs produced by the operations themselves.

use std::fmt;
use std::str::FromStr;

use crate::element::Element;
use crate::engine::{run_sampled, Clause, Evaluation, LawReport};
use crate::error::{Error, Result};
use crate::mlcore::{l_low, l_upp, lu_abs, r_low, r_upp, sym_abs, ul_abs};
use crate::sampling::Sampler;
use crate::space::SpaceHandle;

macro_rules! law_ids {
    ($($variant:ident => $name:literal),* $(,)?) => {
        /// Stable identifier of a catalogued law.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum LawId {
            $($variant),*
        }

        impl LawId {
            pub const ALL: &'static [LawId] = &[$(LawId::$variant),*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(LawId::$variant => $name),*
                }
            }
        }
    };
}

law_ids! {
    P0 => "L-P0",
    P1 => "L-P1",
    P2 => "L-P2",
    P3 => "L-P3",
    P4 => "L-P4",
    P5a => "L-P5A",
    P5b => "L-P5B",
    P6 => "L-P6",
    P7 => "L-P7",
    P8a => "L-P8A",
    P8b => "L-P8B",
    T24a => "L-T24a",
    T24b => "L-T24b",
    T24c => "L-T24c",
    T24d => "L-T24d",
    T24e => "L-T24e",
    T24f => "L-T24f",
    T24g => "L-T24g",
    T24h => "L-T24h",
    T24i => "L-T24i",
    T24j => "L-T24j",
    T24k => "L-T24k",
    T24l => "L-T24l",
    T24m => "L-T24m",
    T26a => "L-T26a",
    T26b => "L-T26b",
    T26c => "L-T26c",
    T26d => "L-T26d",
    T26e => "L-T26e",
    T26f => "L-T26f",
    L27 => "L-L27",
}

impl fmt::Display for LawId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for LawId {
    type Err = Error;

    /// Case-insensitive, so `L-P8b` and `l-p8b` both name `L-P8B`.
    fn from_str(s: &str) -> Result<Self> {
        LawId::ALL
            .iter()
            .copied()
            .find(|id| id.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownLaw(s.to_string()))
    }
}

impl LawId {
    /// One-line statement of the law.
    pub fn statement(self) -> &'static str {
        use LawId::*;
        match self {
            P0 => "x∧y ≼ x ≼ x∨y and x∧y ≤ y ≤ x∨y",
            P1 => "x∨y + y∧x = x + y",
            P2 => "z + x∨y = (x+z)∨(y+z) and z + x∧y = (x+z)∧(y+z)",
            P3 => "x∨y = -((-x)∧(-y))",
            P4 => "x ≼ u and y ≤ v imply x∨y ≤ u∨v and x∧y ≤ u∧v",
            P5a => "x ≤ y iff y∨x = y iff x∧y = x",
            P5b => "x ≼ y iff x∨y = y iff y∧x = x",
            P6 => "x ≼ y implies z∨x ≼ z∨y and z∧x ≼ z∧y",
            P7 => "x ≼ z, y ≼ z imply x∨y ≼ z; u ≼ x, u ≼ y imply u ≼ x∧y",
            P8a => "a ≥ 0: (ax)∧(ay) = a(x∧y) and (ax)∨(ay) = a(x∨y)",
            P8b => "a ≤ 0: (ax)∧(ay) = a(x∨y) and (ax)∨(ay) = a(x∧y)",
            T24a => "ᵘx = ˡ(-x) and xᵘ = (-x)ˡ",
            T24b => "x = xᵘ - ˡx = ᵘx - xˡ",
            T24c => "ᵘ|x|ˡ = ᵘx∨xˡ = ᵘx + xˡ and ˡ|x|ᵘ = ˡx∨xᵘ = ˡx + xᵘ",
            T24d => "ᵘ|x|ˡ = ˡ|-x|ᵘ",
            T24e => "ᵘ(x+y) ≤ ᵘx + ᵘy, (x+y)ˡ ≤ xˡ + yˡ, ᵘ|x+y|ˡ ≤ ᵘ|x|ˡ + ᵘ|y|ˡ",
            T24f => "(x+y)ᵘ ≤ xᵘ + yᵘ, ˡ(x+y) ≤ ˡx + ˡy, ˡ|x+y|ᵘ ≤ ˡ|x|ᵘ + ˡ|y|ᵘ",
            T24g => "xᵘ∧ˡx = 0 and xˡ∧ᵘx = 0",
            T24h => "xᵘ∨ˡx = ᵘx + ˡx = xˡ + xᵘ = xˡ∨ᵘx",
            T24i => "x ≽ 0 iff x = ˡ|x|ᵘ = ᵘ|x|ˡ = ᵘx = xᵘ and ˡx = xˡ = 0",
            T24j => "x ≥ 0 iff x = ᵘ|x|ˡ = ᵘx and xˡ = 0",
            T24k => "ᵘ|x|ˡ ≥ 0, ˡ|x|ᵘ ≥ 0, and both vanish iff x = 0",
            T24l => "a ≥ 0: ᵘ|ax|ˡ = a ᵘ|x|ˡ and ˡ|ax|ᵘ = a ˡ|x|ᵘ",
            T24m => "a ≤ 0: ᵘ|ax|ˡ = |a| ˡ|x|ᵘ and ˡ|ax|ᵘ = |a| ᵘ|x|ˡ",
            T26a => "s(x) = xᵘ∨ˡx = ᵘx + ˡx = xˡ + xᵘ = xˡ∨ᵘx",
            T26b => "s(ax) = |a| s(x)",
            T26c => "s(x) ≽ 0 and s(x) = 0 iff x = 0",
            T26d => "s(x) = x iff x ≽ 0",
            T26e => "s(s(x)) = s(x)",
            T26f => "s(x+y) ≤ s(x) + s(y)",
            L27 => "s(xᵘ - yᵘ) ≤ s(x - y)",
        }
    }

    fn note(self) -> Option<&'static str> {
        match self {
            LawId::P6 => Some("second clause read as z∧x ≼ z∧y"),
            _ => None,
        }
    }
}

/// Checks one law on `samples` seeded draws.
pub fn check_law(
    space: &SpaceHandle,
    law: &str,
    samples: usize,
    seed: u64,
    tol: f64,
) -> Result<LawReport> {
    let id: LawId = law.parse()?;
    check_law_id(space, id, samples, seed, tol)
}

pub fn check_law_id(
    space: &SpaceHandle,
    id: LawId,
    samples: usize,
    seed: u64,
    tol: f64,
) -> Result<LawReport> {
    if !(0.0..=1e-3).contains(&tol) {
        return Err(Error::Input(format!("tol {tol} outside [0, 1e-3]")));
    }
    let report = run_sampled(space, id.as_str(), samples, seed, tol, |s| evaluate(id, s));
    Ok(match id.note() {
        Some(n) => report.with_note(n),
        None => report,
    })
}

/// Every law in catalogue order.
pub fn check_all(
    space: &SpaceHandle,
    samples: usize,
    seed: u64,
    tol: f64,
) -> Result<Vec<LawReport>> {
    LawId::ALL
        .iter()
        .map(|&id| check_law_id(space, id, samples, seed, tol))
        .collect()
}

fn evaluate(id: LawId, s: &mut Sampler<'_>) -> Evaluation {
    use LawId::*;
    let sp = s.space();
    let up = |a: &Element, b: &Element| sp.up(a, b);
    let down = |a: &Element, b: &Element| sp.down(a, b);
    let zero = Element::zeros(sp.dim());
    match id {
        P0 => {
            let (x, y) = (s.element(), s.element());
            let (j, m) = (up(&x, &y), down(&x, &y));
            Evaluation::new().input("x", &x).input("y", &y).clauses([
                Clause::leq_specific("x∧y ≼ x", m.clone(), x.clone()),
                Clause::leq_specific("x ≼ x∨y", x, j.clone()),
                Clause::leq_initial("x∧y ≤ y", m, y.clone()),
                Clause::leq_initial("y ≤ x∨y", y, j),
            ])
        }
        P1 => {
            let (x, y) = (s.element(), s.element());
            let lhs = &up(&x, &y) + &down(&y, &x);
            Evaluation::new()
                .input("x", &x)
                .input("y", &y)
                .clause(Clause::eq("x∨y + y∧x = x + y", lhs, &x + &y))
        }
        P2 => {
            let (x, y, z) = (s.element(), s.element(), s.element());
            let (xz, yz) = (&x + &z, &y + &z);
            Evaluation::new()
                .input("x", &x)
                .input("y", &y)
                .input("z", &z)
                .clauses([
                    Clause::eq("z + x∨y = (x+z)∨(y+z)", &z + &up(&x, &y), up(&xz, &yz)),
                    Clause::eq("z + x∧y = (x+z)∧(y+z)", &z + &down(&x, &y), down(&xz, &yz)),
                ])
        }
        P3 => {
            let (x, y) = (s.element(), s.element());
            let rhs = -down(&-&x, &-&y);
            Evaluation::new()
                .input("x", &x)
                .input("y", &y)
                .clause(Clause::eq("x∨y = -((-x)∧(-y))", up(&x, &y), rhs))
        }
        P4 => {
            let (x, u) = s.specific_pair();
            let (y, v) = s.initial_pair();
            Evaluation::new()
                .input("x", &x)
                .input("u", &u)
                .input("y", &y)
                .input("v", &v)
                .clauses([
                    Clause::leq_initial("x∨y ≤ u∨v", up(&x, &y), up(&u, &v)),
                    Clause::leq_initial("x∧y ≤ u∧v", down(&x, &y), down(&u, &v)),
                ])
        }
        P5a => {
            let (x, y) = s.initial_pair();
            let (a, b) = (s.element(), s.element());
            Evaluation::new()
                .input("x", &x)
                .input("y", &y)
                .input("a", &a)
                .input("b", &b)
                .clauses([
                    Clause::eq("x ≤ y ⟹ y∨x = y", up(&y, &x), y.clone()),
                    Clause::eq("x ≤ y ⟹ x∧y = x", down(&x, &y), x.clone()),
                    Clause::leq_initial("a ≤ b∨a", a.clone(), up(&b, &a)),
                    Clause::leq_initial("a∧b ≤ b", down(&a, &b), b),
                ])
        }
        P5b => {
            let (x, y) = s.specific_pair();
            let (a, b) = (s.element(), s.element());
            Evaluation::new()
                .input("x", &x)
                .input("y", &y)
                .input("a", &a)
                .input("b", &b)
                .clauses([
                    Clause::eq("x ≼ y ⟹ x∨y = y", up(&x, &y), y.clone()),
                    Clause::eq("x ≼ y ⟹ y∧x = x", down(&y, &x), x.clone()),
                    Clause::leq_specific("a ≼ a∨b", a.clone(), up(&a, &b)),
                    Clause::leq_specific("b∧a ≼ b", down(&b, &a), b),
                ])
        }
        P6 => {
            let (x, y) = s.specific_pair();
            let z = s.element();
            Evaluation::new()
                .input("x", &x)
                .input("y", &y)
                .input("z", &z)
                .clauses([
                    Clause::leq_specific("z∨x ≼ z∨y", up(&z, &x), up(&z, &y)),
                    Clause::leq_specific("z∧x ≼ z∧y", down(&z, &x), down(&z, &y)),
                ])
        }
        P7 => {
            let u = s.element();
            let (h1, h2, h3) = (
                s.specific_positive(),
                s.specific_positive(),
                s.specific_positive(),
            );
            let x = &u + &h1;
            let y = &u + &h2;
            let z = &(&x + &h2) + &h3;
            Evaluation::new()
                .input("x", &x)
                .input("y", &y)
                .input("z", &z)
                .input("u", &u)
                .clauses([
                    Clause::leq_specific("x∨y ≼ z", up(&x, &y), z),
                    Clause::leq_specific("u ≼ x∧y", u, down(&x, &y)),
                ])
        }
        P8a | P8b => {
            let (x, y) = (s.element(), s.element());
            let a = if id == P8a {
                s.scalar(0.0, 4.0)
            } else {
                -s.scalar(0.0, 4.0)
            };
            let (ax, ay) = (x.scale(a), y.scale(a));
            let (j, m) = (up(&x, &y), down(&x, &y));
            let (dj, dm) = if id == P8a { (m, j) } else { (j, m) };
            Evaluation::new()
                .input("x", &x)
                .input("y", &y)
                .scalar("a", a)
                .clauses([
                    Clause::eq("(ax)∧(ay)", down(&ax, &ay), dj.scale(a)),
                    Clause::eq("(ax)∨(ay)", up(&ax, &ay), dm.scale(a)),
                ])
        }
        T24a => {
            let x = s.element();
            let nx = -&x;
            Evaluation::new().input("x", &x).clauses([
                Clause::eq("ᵘx = ˡ(-x)", l_upp(sp, &x), l_low(sp, &nx)),
                Clause::eq("xᵘ = (-x)ˡ", r_upp(sp, &x), r_low(sp, &nx)),
            ])
        }
        T24b => {
            let x = s.element();
            Evaluation::new().input("x", &x).clauses([
                Clause::eq("x = xᵘ - ˡx", x.clone(), &r_upp(sp, &x) - &l_low(sp, &x)),
                Clause::eq("x = ᵘx - xˡ", x.clone(), &l_upp(sp, &x) - &r_low(sp, &x)),
            ])
        }
        T24c => {
            let x = s.element();
            let (lu_, ru, ll, rl) = (l_upp(sp, &x), r_upp(sp, &x), l_low(sp, &x), r_low(sp, &x));
            let (ul, lu) = (ul_abs(sp, &x), lu_abs(sp, &x));
            Evaluation::new().input("x", &x).clauses([
                Clause::eq("ᵘ|x|ˡ = ᵘx∨xˡ", ul.clone(), up(&lu_, &rl)),
                Clause::eq("ᵘ|x|ˡ = ᵘx + xˡ", ul, &lu_ + &rl),
                Clause::eq("ˡ|x|ᵘ = ˡx∨xᵘ", lu.clone(), up(&ll, &ru)),
                Clause::eq("ˡ|x|ᵘ = ˡx + xᵘ", lu, &ll + &ru),
            ])
        }
        T24d => {
            let x = s.element();
            Evaluation::new().input("x", &x).clause(Clause::eq(
                "ᵘ|x|ˡ = ˡ|-x|ᵘ",
                ul_abs(sp, &x),
                lu_abs(sp, &-&x),
            ))
        }
        T24e | T24f => {
            let (x, y) = (s.element(), s.element());
            let xy = &x + &y;
            let subadd =
                |f: fn(&SpaceHandle, &Element) -> Element| (f(sp, &xy), &f(sp, &x) + &f(sp, &y));
            let ev = Evaluation::new().input("x", &x).input("y", &y);
            let (a, b, c) = if id == T24e {
                (subadd(l_upp), subadd(r_low), subadd(ul_abs))
            } else {
                (subadd(r_upp), subadd(l_low), subadd(lu_abs))
            };
            let labels = if id == T24e {
                [
                    "ᵘ(x+y) ≤ ᵘx + ᵘy",
                    "(x+y)ˡ ≤ xˡ + yˡ",
                    "ᵘ|x+y|ˡ ≤ ᵘ|x|ˡ + ᵘ|y|ˡ",
                ]
            } else {
                [
                    "(x+y)ᵘ ≤ xᵘ + yᵘ",
                    "ˡ(x+y) ≤ ˡx + ˡy",
                    "ˡ|x+y|ᵘ ≤ ˡ|x|ᵘ + ˡ|y|ᵘ",
                ]
            };
            ev.clauses([
                Clause::leq_initial(labels[0], a.0, a.1),
                Clause::leq_initial(labels[1], b.0, b.1),
                Clause::leq_initial(labels[2], c.0, c.1),
            ])
        }
        T24g => {
            let x = s.element();
            let (lu_, ru, ll, rl) = (l_upp(sp, &x), r_upp(sp, &x), l_low(sp, &x), r_low(sp, &x));
            Evaluation::new().input("x", &x).clauses([
                Clause::eq("xᵘ∧ˡx = 0", down(&ru, &ll), zero.clone()),
                Clause::eq("xˡ∧ᵘx = 0", down(&rl, &lu_), zero),
            ])
        }
        T24h | T26a => {
            let x = s.element();
            let (lu_, ru, ll, rl) = (l_upp(sp, &x), r_upp(sp, &x), l_low(sp, &x), r_low(sp, &x));
            let first = if id == T26a {
                sym_abs(sp, &x)
            } else {
                up(&ru, &ll)
            };
            let mut ev = Evaluation::new().input("x", &x);
            if id == T26a {
                ev = ev.clause(Clause::eq("s(x) = xᵘ∨ˡx", first.clone(), up(&ru, &ll)));
            }
            ev.clauses([
                Clause::eq("xᵘ∨ˡx = ᵘx + ˡx", first.clone(), &lu_ + &ll),
                Clause::eq("ᵘx + ˡx = xˡ + xᵘ", &lu_ + &ll, &rl + &ru),
                Clause::eq("xˡ + xᵘ = xˡ∨ᵘx", &rl + &ru, up(&rl, &lu_)),
            ])
        }
        T24i => {
            let h = s.specific_positive();
            let x = s.element();
            Evaluation::new().input("h", &h).input("x", &x).clauses([
                Clause::eq("h = ˡ|h|ᵘ", h.clone(), lu_abs(sp, &h)),
                Clause::eq("h = ᵘ|h|ˡ", h.clone(), ul_abs(sp, &h)),
                Clause::eq("h = ᵘh", h.clone(), l_upp(sp, &h)),
                Clause::eq("h = hᵘ", h.clone(), r_upp(sp, &h)),
                Clause::eq("ˡh = 0", l_low(sp, &h), zero.clone()),
                Clause::eq("hˡ = 0", r_low(sp, &h), zero.clone()),
                Clause::leq_specific("0 ≼ xᵘ", zero, r_upp(sp, &x)),
            ])
        }
        T24j => {
            let c = s.initial_positive();
            let x = s.element();
            Evaluation::new().input("c", &c).input("x", &x).clauses([
                Clause::eq("c = ᵘ|c|ˡ", c.clone(), ul_abs(sp, &c)),
                Clause::eq("c = ᵘc", c.clone(), l_upp(sp, &c)),
                Clause::eq("cˡ = 0", r_low(sp, &c), zero.clone()),
                Clause::leq_initial("0 ≤ ᵘx", zero, l_upp(sp, &x)),
            ])
        }
        T24k => {
            let x = s.element();
            let (ul, lu) = (ul_abs(sp, &x), lu_abs(sp, &x));
            let both = Element::new(ul.iter().chain(lu.iter()).copied().collect());
            Evaluation::new().input("x", &x).clauses([
                Clause::leq_initial("0 ≤ ᵘ|x|ˡ", zero.clone(), ul),
                Clause::leq_initial("0 ≤ ˡ|x|ᵘ", zero.clone(), lu),
                Clause::nonzero_with("x ≠ 0 ⟹ (ᵘ|x|ˡ, ˡ|x|ᵘ) ≠ 0", x, both),
                Clause::eq("ᵘ|0|ˡ = 0", ul_abs(sp, &zero), zero.clone()),
                Clause::eq("ˡ|0|ᵘ = 0", lu_abs(sp, &zero), zero),
            ])
        }
        T24l | T24m => {
            let x = s.element();
            let a = if id == T24l {
                s.scalar(0.0, 4.0)
            } else {
                -s.scalar(0.0, 4.0)
            };
            let ax = x.scale(a);
            let (ul, lu) = (ul_abs(sp, &x), lu_abs(sp, &x));
            let (for_ul, for_lu) = if id == T24l { (ul, lu) } else { (lu, ul) };
            Evaluation::new().input("x", &x).scalar("a", a).clauses([
                Clause::eq("ᵘ|ax|ˡ", ul_abs(sp, &ax), for_ul.scale(a.abs())),
                Clause::eq("ˡ|ax|ᵘ", lu_abs(sp, &ax), for_lu.scale(a.abs())),
            ])
        }
        T26b => {
            let x = s.element();
            let a = if s.index(8) == 0 {
                0.0
            } else {
                s.scalar(-4.0, 4.0)
            };
            Evaluation::new()
                .input("x", &x)
                .scalar("a", a)
                .clause(Clause::eq(
                    "s(ax) = |a| s(x)",
                    sym_abs(sp, &x.scale(a)),
                    sym_abs(sp, &x).scale(a.abs()),
                ))
        }
        T26c => {
            let x = s.element();
            let sx = sym_abs(sp, &x);
            Evaluation::new().input("x", &x).clauses([
                Clause::leq_specific("0 ≼ s(x)", zero.clone(), sx.clone()),
                Clause::nonzero_with("x ≠ 0 ⟹ s(x) ≠ 0", x, sx),
                Clause::eq("s(0) = 0", sym_abs(sp, &zero), zero),
            ])
        }
        T26d => {
            let h = s.specific_positive();
            let x = s.element();
            Evaluation::new().input("h", &h).input("x", &x).clauses([
                Clause::eq("h ≽ 0 ⟹ s(h) = h", sym_abs(sp, &h), h.clone()),
                Clause::leq_specific("0 ≼ s(x)", zero, sym_abs(sp, &x)),
            ])
        }
        T26e => {
            let x = s.element();
            let sx = sym_abs(sp, &x);
            Evaluation::new().input("x", &x).clause(Clause::eq(
                "s(s(x)) = s(x)",
                sym_abs(sp, &sx),
                sx,
            ))
        }
        T26f => {
            let (x, y) = (s.element(), s.element());
            Evaluation::new()
                .input("x", &x)
                .input("y", &y)
                .clause(Clause::leq_initial(
                    "s(x+y) ≤ s(x) + s(y)",
                    sym_abs(sp, &(&x + &y)),
                    &sym_abs(sp, &x) + &sym_abs(sp, &y),
                ))
        }
        L27 => {
            let (x, y) = (s.element(), s.element());
            Evaluation::new()
                .input("x", &x)
                .input("y", &y)
                .clause(Clause::leq_initial(
                    "s(xᵘ - yᵘ) ≤ s(x - y)",
                    sym_abs(sp, &(&r_upp(sp, &x) - &r_upp(sp, &y))),
                    sym_abs(sp, &(&x - &y)),
                ))
        }
    }
}
