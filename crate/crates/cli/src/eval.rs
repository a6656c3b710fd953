use std::collections::BTreeMap;
use std::path::Path;

use clap::Args;
use mixlat_core::hulls::{self, BaseSet, BoxSet, FiniteSet, SetSpec, Variant};
use mixlat_core::norms::{self, FunctionalHandle, QVariant};
use mixlat_core::{bv_norm, env_down, env_up, gen_abs, parts, sup_norm, Element, SpaceHandle};
use serde_json::{json, Value};

use crate::{read, CliResult, Common, UsageError};

#[derive(Args, Debug)]
pub struct EvalArgs {
    /// Operation name
    pub op: String,
    /// Operands as JSON arrays
    pub args: Vec<String>,
    /// Hull variant (1|2) or cone norm variant (l|r)
    #[arg(long)]
    pub variant: Option<String>,
    /// Functional handle for `functional` and `asym_pair`
    #[arg(long)]
    pub p: Option<String>,
}

pub const OPS: &[(&str, &[&str])] = &[
    ("env_up", &["u", "v"]),
    ("env_down", &["u", "v"]),
    ("parts", &["x"]),
    ("gen_abs", &["x"]),
    ("leq_initial", &["u", "v"]),
    ("leq_specific", &["u", "v"]),
    ("split_specific", &["y"]),
    ("t_min_shift", &["y"]),
    ("ray_coord", &["z"]),
    ("interval_extent", &["u", "v"]),
    ("conenorm", &["z"]),
    ("norm0", &["z"]),
    ("sup_norm", &["z"]),
    ("bv_norm", &["z"]),
    ("functional", &["z"]),
    ("asym_pair", &["z"]),
    ("gauge", &["z"]),
    ("box_gauge", &["z"]),
    ("mf_member", &["y"]),
    ("ms_member", &["y"]),
    ("sh_member", &["y"]),
    ("box_mf1_member", &["z"]),
];

fn parse_vec(text: &str, name: &str) -> CliResult<Element> {
    let v: Vec<f64> =
        serde_json::from_str(text).map_err(|e| UsageError(format!("operand {name}: {e}")))?;
    Ok(Element::new(v))
}

fn load_set(common: &Common, dim: usize) -> CliResult<BaseSet> {
    let path = common
        .set
        .as_ref()
        .ok_or_else(|| UsageError("--set FILE is required".into()))?;
    Ok(SetSpec::from_json(&read(path)?, dim)?)
}

fn points(common: &Common, dim: usize) -> CliResult<FiniteSet> {
    match load_set(common, dim)? {
        BaseSet::Points(p) => Ok(p),
        BaseSet::Box(_) => Err(UsageError("this operation needs a points set".into())),
    }
}

fn boxed(common: &Common, dim: usize) -> CliResult<BoxSet> {
    match load_set(common, dim)? {
        BaseSet::Box(b) => Ok(b),
        BaseSet::Points(_) => Err(UsageError("this operation needs a box set".into())),
    }
}

fn box_from_file(path: &str, dim: usize) -> mixlat_core::Result<BoxSet> {
    let text = std::fs::read_to_string(Path::new(path))
        .map_err(|e| mixlat_core::Error::Input(format!("{path}: {e}")))?;
    match SetSpec::from_json(&text, dim)? {
        BaseSet::Box(b) => Ok(b),
        BaseSet::Points(_) => Err(mixlat_core::Error::Input("gauge needs a box set".into())),
    }
}

fn hull_variant(args: &EvalArgs) -> CliResult<Variant> {
    match args.variant.as_deref() {
        None | Some("1") => Ok(Variant::One),
        Some("2") => Ok(Variant::Two),
        Some(v) => Err(UsageError(format!(
            "hull variant must be 1 or 2, got `{v}`"
        ))),
    }
}

fn handle(space: &SpaceHandle, name: &str) -> CliResult<FunctionalHandle> {
    let dim = space.dim();
    Ok(FunctionalHandle::parse(name, &|p| box_from_file(p, dim))?)
}

pub fn run(space: &SpaceHandle, common: &Common, args: &EvalArgs) -> CliResult<Value> {
    let op = args.op.as_str();
    let names = OPS
        .iter()
        .find(|(name, _)| *name == op)
        .map(|(_, n)| *n)
        .ok_or_else(|| UsageError(format!("unknown op `{op}`")))?;
    if args.args.len() != names.len() {
        return Err(UsageError(format!(
            "{op} takes {} operand(s), got {}",
            names.len(),
            args.args.len()
        )));
    }
    let mut xs = Vec::new();
    for (text, name) in args.args.iter().zip(names) {
        let x = parse_vec(text, name)?;
        space.check(&x)?;
        xs.push(x);
    }
    let inputs: BTreeMap<&str, &Element> = names.iter().copied().zip(xs.iter()).collect();
    let a = &xs[0];
    let b = xs.get(1);
    let two = || b.ok_or_else(|| UsageError("missing operand".into()));
    let dim = space.dim();

    let output = match op {
        "env_up" => json!(env_up(space, a, two()?)?),
        "env_down" => json!(env_down(space, a, two()?)?),
        "parts" => json!(parts(space, a)?),
        "gen_abs" => json!(gen_abs(space, a)?),
        "leq_initial" => json!(space.leq_initial(a, two()?)),
        "leq_specific" => json!(space.leq_specific(a, two()?)),
        "split_specific" => json!(space.split_specific(a)),
        "t_min_shift" => json!(space.as_ray()?.t_min_shift(a)),
        "ray_coord" => json!(space.as_ray()?.ray_coord(a)?),
        "interval_extent" => json!(space.as_ray()?.interval_extent(a, two()?)),
        "conenorm" => {
            let v = QVariant::parse(args.variant.as_deref().unwrap_or("l"))?;
            json!(norms::cone_norm_q(space, a, v)?)
        }
        "norm0" => json!(norms::norm0(space, a)?),
        "sup_norm" => json!(sup_norm(a)),
        "bv_norm" => {
            space.as_grid()?;
            json!(bv_norm(a))
        }
        "functional" => {
            let name = args
                .p
                .as_deref()
                .ok_or_else(|| UsageError("--p HANDLE is required".into()))?;
            json!(handle(space, name)?.eval(space, a)?)
        }
        "asym_pair" => {
            let rho = handle(space, args.p.as_deref().unwrap_or("norm0"))?;
            let (p1, p2) = norms::asym_pair(space, &rho, a)?;
            json!([p1, p2])
        }
        "gauge" => json!(hulls::box_mf1_gauge(
            space.as_grid()?,
            &boxed(common, dim)?,
            a
        )?),
        "box_gauge" => json!(hulls::box_gauge(&boxed(common, dim)?, a)?),
        "mf_member" => json!(hulls::mf_member(
            space,
            &points(common, dim)?,
            a,
            hull_variant(args)?
        )),
        "ms_member" => json!(hulls::ms_member(
            space,
            &points(common, dim)?,
            a,
            hull_variant(args)?
        )),
        "sh_member" => json!(hulls::sh_member(space, &points(common, dim)?, a)),
        "box_mf1_member" => json!(hulls::box_mf1_member(
            space.as_grid()?,
            &boxed(common, dim)?,
            a
        )),
        _ => unreachable!("op table and dispatch agree"),
    };
    Ok(json!({ "op": op, "inputs": inputs, "output": output }))
}
