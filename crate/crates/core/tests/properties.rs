use mixlat_core::norms::{cone_norm_q, norm0};
use mixlat_core::{
    check_law, env_down, env_up, gen_abs, parts, random_ray_fixtures, Element, QVariant,
    SpaceHandle, SpaceSpec,
};
use proptest::prelude::*;

const SLACK: f64 = 1e-9;

fn vec_of(n: usize) -> impl Strategy<Value = Element> {
    prop::collection::vec(-50.0..50.0f64, n).prop_map(Element::new)
}

fn grid_pair() -> impl Strategy<Value = (usize, Element, Element)> {
    (1usize..8).prop_flat_map(|m| (Just(m), vec_of(m + 1), vec_of(m + 1)))
}

fn spaces() -> Vec<SpaceHandle> {
    let mut s = random_ray_fixtures(11).unwrap();
    s.push(SpaceHandle::e2());
    s
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn grid_envelopes_are_feasible((m, f, g) in grid_pair()) {
        let space = SpaceHandle::grid(m).unwrap();
        let up = env_up(&space, &f, &g).unwrap();
        let down = env_down(&space, &f, &g).unwrap();
        prop_assert!(space.leq_specific(&f, &up));
        prop_assert!(space.leq_initial(&g, &up));
        prop_assert!(space.leq_specific(&down, &f));
        prop_assert!(space.leq_initial(&down, &g));
    }

    #[test]
    fn grid_envelope_is_below_every_shifted_competitor((m, f, g) in grid_pair(), bumps in prop::collection::vec(0.0..5.0f64, 9)) {
        let space = SpaceHandle::grid(m).unwrap();
        let up = env_up(&space, &f, &g).unwrap();
        let mut run = 0.0_f64;
        for i in 0..=m {
            run = run.max((g[i] - f[i]).max(0.0) + bumps[i]);
            prop_assert!(up[i] <= f[i] + run + SLACK);
        }
    }

    #[test]
    fn riesz_envelopes_are_coordinatewise(u in vec_of(4), v in vec_of(4)) {
        let space = SpaceHandle::riesz(4).unwrap();
        prop_assert_eq!(env_up(&space, &u, &v).unwrap(), u.zip_with(&v, f64::max));
        prop_assert_eq!(env_down(&space, &u, &v).unwrap(), u.zip_with(&v, f64::min));
    }

    #[test]
    fn symmetric_absolute_value_properties((m, x, _) in grid_pair()) {
        let space = SpaceHandle::grid(m).unwrap();
        let abs = gen_abs(&space, &x).unwrap();
        let neg = gen_abs(&space, &-&x).unwrap();
        let p = parts(&space, &x).unwrap();
        prop_assert!(space.leq_initial(&Element::zeros(m + 1), &abs.s_abs));
        prop_assert!(abs.s_abs.dist_inf(&neg.s_abs) <= SLACK * (1.0 + x.max_abs()));
        prop_assert!(abs.s_abs.dist_inf(&(&p.l_upp + &p.l_low)) <= SLACK * (1.0 + x.max_abs()));
        prop_assert!(x.dist_inf(&(&p.l_upp - &p.r_low)) <= SLACK * (1.0 + x.max_abs()));
        prop_assert!(x.dist_inf(&(&p.r_upp - &p.l_low)) <= SLACK * (1.0 + x.max_abs()));
    }

    #[test]
    fn ray_envelope_moves_along_the_ray(k in 0usize..6, seed in any::<u64>()) {
        let space = &spaces()[k];
        let mut s = mixlat_core::Sampler::new(space, mixlat_core::sampling::stream_rng(seed, "prop", 0), 10.0);
        let (u, v) = (s.element(), s.element());
        let up = env_up(space, &u, &v).unwrap();
        prop_assert!(space.leq_specific(&u, &up));
        prop_assert!(space.leq_initial(&v, &up));
        let down = env_down(space, &u, &v).unwrap();
        prop_assert!(space.leq_specific(&down, &u));
        prop_assert!(space.leq_initial(&down, &v));
    }

    #[test]
    fn cone_norm_lands_in_the_cone_and_is_idempotent(y in vec_of(2)) {
        let space = SpaceHandle::e2();
        for v in [QVariant::L, QVariant::R] {
            let q = cone_norm_q(&space, &y, v).unwrap();
            prop_assert!(q.iter().all(|c| *c >= -SLACK));
            let qq = cone_norm_q(&space, &q, v).unwrap();
            prop_assert!(q.dist_inf(&qq) <= SLACK * (1.0 + y.max_abs()));
        }
    }

    #[test]
    fn norm0_is_symmetric_and_homogeneous(z in vec_of(2), a in -10.0..10.0f64) {
        let space = SpaceHandle::e2();
        let n = norm0(&space, &z).unwrap();
        prop_assert!((norm0(&space, &-&z).unwrap() - n).abs() <= SLACK * (1.0 + n));
        prop_assert!((norm0(&space, &z.scale(a)).unwrap() - a.abs() * n).abs() <= SLACK * (1.0 + a.abs() * n));
    }
}

#[test]
fn e2_worked_examples() {
    let e2 = SpaceHandle::e2();
    let y = Element::from([1.0, -2.0]);
    assert_eq!(
        env_up(&e2, &Element::zeros(2), &y).unwrap(),
        Element::from([1.0, 1.0])
    );
    assert_eq!(
        cone_norm_q(&e2, &y, QVariant::L).unwrap(),
        Element::from([3.0, 0.0])
    );
    assert!((norm0(&e2, &y).unwrap() - 3.0 * 2f64.sqrt()).abs() < 1e-12);
}

#[test]
fn sampled_checks_are_deterministic() {
    for space in [
        SpaceHandle::e2(),
        SpaceHandle::grid(4).unwrap(),
        SpaceHandle::riesz(3).unwrap(),
    ] {
        let a = check_law(&space, "L-T24c", 500, 9, 1e-9).unwrap();
        let b = check_law(&space, "l-t24c", 500, 9, 1e-9).unwrap();
        assert_eq!(a, b);
        let c = check_law(&space, "L-T24c", 500, 10, 1e-9).unwrap();
        assert_eq!(c.seed, 10);
    }
}

#[test]
fn space_specs_round_trip() {
    for text in [
        r#"{"type":"ray_cone","A":[[1,0],[0,1]],"x_hat":[1,1]}"#,
        r#"{"type":"bv_grid","m":5}"#,
        r#"{"type":"product_riesz","n":3,"atol":1e-8}"#,
    ] {
        let space = SpaceHandle::from_json(text).unwrap();
        let spec = space.to_spec();
        let again: SpaceSpec =
            serde_json::from_str(&serde_json::to_string(&spec).unwrap()).unwrap();
        assert_eq!(again.build().unwrap().to_spec(), spec);
    }
}

#[test]
fn invalid_specs_are_rejected() {
    for text in [
        r#"{"type":"ray_cone","A":[[1,0],[-1,0]],"x_hat":[1,1]}"#,
        r#"{"type":"ray_cone","A":[[1,0],[0,1]],"x_hat":[1,-1]}"#,
        r#"{"type":"bv_grid","m":0}"#,
        r#"{"type":"product_riesz","n":3,"atol":0.5}"#,
        r#"{"type":"torus"}"#,
    ] {
        assert!(SpaceHandle::from_json(text).is_err(), "{text}");
    }
}
