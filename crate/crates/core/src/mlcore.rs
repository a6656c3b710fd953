//! Space-generic mixed lattice algebra: envelopes, upper/lower parts and the
//! generalized absolute values.

use serde::{Deserialize, Serialize};

use crate::element::{scale_of, Element};
use crate::error::{Error, Result};
use crate::space::SpaceHandle;

/// The four parts `ᵘx = x∨0`, `xᵘ = 0∨x`, `ˡx = (-x)∨0`, `xˡ = 0∨(-x)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Parts {
    pub l_upp: Element,
    pub r_upp: Element,
    pub l_low: Element,
    pub r_low: Element,
}

/// `x∨(-x)`, `(-x)∨x` and their mean `s(x)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AbsTriple {
    pub ul_abs: Element,
    pub lu_abs: Element,
    pub s_abs: Element,
}

fn check_pair(space: &SpaceHandle, u: &Element, v: &Element) -> Result<()> {
    space.check(u)?;
    space.check(v)
}

/// `u ∨ v = min{w : w ≽ u, w ≥ v}` via the space's native envelope.
pub fn env_up(space: &SpaceHandle, u: &Element, v: &Element) -> Result<Element> {
    check_pair(space, u, v)?;
    Ok(space.up(u, v))
}

/// `u ∧ v = max{w : w ≼ u, w ≤ v}`, computed as `-((-u) ∨ (-v))`.
pub fn env_down(space: &SpaceHandle, u: &Element, v: &Element) -> Result<Element> {
    check_pair(space, u, v)?;
    Ok(-space.up(&-u, &-v))
}

pub fn parts(space: &SpaceHandle, x: &Element) -> Result<Parts> {
    space.check(x)?;
    Ok(parts_of(space, x))
}

pub fn gen_abs(space: &SpaceHandle, x: &Element) -> Result<AbsTriple> {
    space.check(x)?;
    let triple = abs_of(space, x);
    let via_parts = &r_upp(space, x) + &r_low(space, x);
    let scale = scale_of(&[x, &triple.s_abs]);
    let gap = triple.s_abs.dist_inf(&via_parts);
    if gap > space.tol().bound(scale) {
        return Err(Error::Consistency(format!(
            "s(x) = ½(x∨-x + -x∨x) disagrees with xᵘ + xˡ by {gap:e}"
        )));
    }
    Ok(triple)
}

pub(crate) fn parts_of(space: &SpaceHandle, x: &Element) -> Parts {
    Parts {
        l_upp: l_upp(space, x),
        r_upp: r_upp(space, x),
        l_low: l_low(space, x),
        r_low: r_low(space, x),
    }
}

pub(crate) fn abs_of(space: &SpaceHandle, x: &Element) -> AbsTriple {
    let ul_abs = ul_abs(space, x);
    let lu_abs = lu_abs(space, x);
    let s_abs = (&ul_abs + &lu_abs).scale(0.5);
    AbsTriple {
        ul_abs,
        lu_abs,
        s_abs,
    }
}

/// `ᵘx = x ∨ 0`
pub(crate) fn l_upp(space: &SpaceHandle, x: &Element) -> Element {
    space.up(x, &Element::zeros(x.dim()))
}

/// `xᵘ = 0 ∨ x`
pub(crate) fn r_upp(space: &SpaceHandle, x: &Element) -> Element {
    space.up(&Element::zeros(x.dim()), x)
}

/// `ˡx = (-x) ∨ 0`
pub(crate) fn l_low(space: &SpaceHandle, x: &Element) -> Element {
    space.up(&-x, &Element::zeros(x.dim()))
}

/// `xˡ = 0 ∨ (-x)`
pub(crate) fn r_low(space: &SpaceHandle, x: &Element) -> Element {
    space.up(&Element::zeros(x.dim()), &-x)
}

/// `ᵘ|x|ˡ = x ∨ (-x)`
pub(crate) fn ul_abs(space: &SpaceHandle, x: &Element) -> Element {
    space.up(x, &-x)
}

/// `ˡ|x|ᵘ = (-x) ∨ x`
pub(crate) fn lu_abs(space: &SpaceHandle, x: &Element) -> Element {
    space.up(&-x, x)
}

/// `s(x) = ½(ᵘ|x|ˡ + ˡ|x|ᵘ)`
pub(crate) fn sym_abs(space: &SpaceHandle, x: &Element) -> Element {
    (&ul_abs(space, x) + &lu_abs(space, x)).scale(0.5)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(v: &[f64]) -> Element {
        Element::from(v)
    }

    #[test]
    fn e2_examples() {
        let s = SpaceHandle::e2();
        assert_eq!(
            env_up(&s, &el(&[0.0, 0.0]), &el(&[1.0, -2.0])).unwrap(),
            el(&[1.0, 1.0])
        );
        assert_eq!(
            env_down(&s, &el(&[1.0, -2.0]), &el(&[0.0, 0.0])).unwrap(),
            el(&[0.0, -3.0])
        );
        let p = parts(&s, &el(&[1.0, -2.0])).unwrap();
        assert_eq!(p.l_upp, el(&[3.0, 0.0]));
        assert_eq!(p.r_upp, el(&[1.0, 1.0]));
        assert_eq!(p.l_low, el(&[0.0, 3.0]));
        assert_eq!(p.r_low, el(&[2.0, 2.0]));
        assert_eq!(
            gen_abs(&s, &el(&[1.0, -2.0])).unwrap().s_abs,
            el(&[3.0, 3.0])
        );
    }

    #[test]
    fn g3_examples() {
        let s = SpaceHandle::grid(2).unwrap();
        assert_eq!(
            env_up(&s, &el(&[0.0, 1.0, 0.0]), &el(&[1.0, 0.0, 2.0])).unwrap(),
            el(&[1.0, 2.0, 2.0])
        );
        assert_eq!(
            env_down(&s, &el(&[1.0, 0.0, 2.0]), &el(&[0.0, 1.0, 0.0])).unwrap(),
            el(&[0.0, -1.0, 0.0])
        );
        let x = el(&[1.0, -3.0, 2.0]);
        let p = parts(&s, &x).unwrap();
        assert_eq!(p.l_upp, el(&[1.0, 0.0, 5.0]));
        assert_eq!(p.r_upp, el(&[1.0, 1.0, 2.0]));
        assert_eq!(p.l_low, el(&[0.0, 4.0, 0.0]));
        assert_eq!(p.r_low, el(&[0.0, 3.0, 3.0]));
        let abs = gen_abs(&s, &x).unwrap();
        assert_eq!(abs.s_abs, el(&[1.0, 4.0, 5.0]));
        assert_eq!(abs.s_abs, &p.r_upp + &p.r_low);
    }

    #[test]
    fn reflexive_and_zero() {
        for s in [
            SpaceHandle::e2(),
            SpaceHandle::grid(3).unwrap(),
            SpaceHandle::riesz(2).unwrap(),
        ] {
            let u = Element::new((0..s.dim()).map(|i| i as f64 - 1.5).collect());
            assert_eq!(env_up(&s, &u, &u).unwrap(), u);
            assert_eq!(env_down(&s, &u, &u).unwrap(), u);
            let z = Element::zeros(s.dim());
            let p = parts(&s, &z).unwrap();
            for part in [&p.l_upp, &p.r_upp, &p.l_low, &p.r_low] {
                assert!(part.is_zero());
            }
            let a = gen_abs(&s, &z).unwrap();
            assert!(a.ul_abs.is_zero() && a.lu_abs.is_zero() && a.s_abs.is_zero());
        }
    }

    #[test]
    fn generic_lower_envelope_matches_native() {
        let s = SpaceHandle::grid(4).unwrap();
        let u = el(&[1.0, -2.0, 0.5, 3.0, -1.0]);
        let v = el(&[0.0, 1.0, -4.0, 2.0, 2.0]);
        assert_eq!(env_down(&s, &u, &v).unwrap(), s.down(&u, &v));
    }

    #[test]
    fn dimension_errors() {
        let s = SpaceHandle::e2();
        assert!(matches!(
            env_up(&s, &el(&[0.0]), &el(&[1.0, 2.0])),
            Err(Error::Dimension {
                expected: 2,
                got: 1
            })
        ));
        assert!(parts(&s, &el(&[1.0, 2.0, 3.0])).is_err());
        assert!(gen_abs(&s, &el(&[f64::INFINITY, 0.0])).is_err());
    }
}
