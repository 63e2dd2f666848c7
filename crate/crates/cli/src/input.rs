use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use serde::de::DeserializeOwned;
use serde_json::Value;
use tqft::cellgraph::{CellGraph, GraphSpec};
use tqft::frobenius::{AlgebraSpec, FrobeniusAlgebra, Vector};
use tqft::scalar;
use tqft::toprec::{airy_curve, catalan_local_curve, CurveSpec, LocalSpectralCurve};
use tqft::zoo;

/// Overrides the brute-force total degree guard.
pub const MAX_DEGREE_VAR: &str = "TQFT_MAX_DEGREE";
/// Overrides the series truncation of curve presets and curve files.
pub const TRUNCATION_VAR: &str = "TQFT_TRUNCATION";

pub const DEFAULT_MAX_DEGREE: usize = 12;
pub const DEFAULT_TRUNCATION: i64 = 16;

fn env_number<T: std::str::FromStr>(var: &str) -> Result<Option<T>> {
    match std::env::var(var) {
        Ok(s) => s.trim().parse().map(Some).map_err(|_| anyhow!("{var} must be a non-negative integer, got {s:?}")),
        Err(_) => Ok(None),
    }
}

pub fn max_degree() -> Result<usize> {
    Ok(env_number(MAX_DEGREE_VAR)?.unwrap_or(DEFAULT_MAX_DEGREE))
}

pub fn truncation_override() -> Result<Option<i64>> {
    env_number(TRUNCATION_VAR)
}

fn read_json<T: DeserializeOwned>(path: &Path, what: &str) -> Result<T> {
    let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {what} file {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("{} is not a valid {what} JSON document", path.display()))
}

/// `zoo:<preset>` or a path to algebra JSON.
pub fn algebra_spec(arg: &str) -> Result<AlgebraSpec> {
    if arg.starts_with("zoo:") {
        return Ok(zoo::preset_algebra(arg)?.to_spec());
    }
    read_json(Path::new(arg), "algebra")
}

pub fn algebra(arg: &str) -> Result<FrobeniusAlgebra> {
    let spec = algebra_spec(arg)?;
    FrobeniusAlgebra::from_spec(&spec).with_context(|| format!("{arg} is not a Frobenius algebra"))
}

pub fn graph(path: &Path) -> Result<CellGraph> {
    let spec: GraphSpec = read_json(path, "graph")?;
    spec.to_graph().with_context(|| format!("{} does not describe a cell graph", path.display()))
}

pub fn curve_file(path: &Path) -> Result<LocalSpectralCurve> {
    let mut spec: CurveSpec = read_json(path, "curve")?;
    if let Some(n) = truncation_override()? {
        spec.truncation = n;
    }
    Ok(spec.to_curve()?)
}

pub fn curve_preset(name: &str) -> Result<LocalSpectralCurve> {
    let n = truncation_override()?.unwrap_or(DEFAULT_TRUNCATION);
    match name {
        "airy" => Ok(airy_curve(n)),
        "catalan" => Ok(catalan_local_curve(n)),
        _ => bail!("unknown curve preset {name:?}; expected airy or catalan"),
    }
}

/// A JSON list of vectors, given inline or as a path to a file. Entries are
/// fraction strings or integers.
pub fn vectors(arg: &str, dim: usize) -> Result<Vec<Vector>> {
    let text = if Path::new(arg).is_file() {
        std::fs::read_to_string(arg).with_context(|| format!("cannot read {arg}"))?
    } else {
        arg.to_string()
    };
    let value: Value = serde_json::from_str(&text).context("vectors must be a JSON list of lists")?;
    let rows = value.as_array().ok_or_else(|| anyhow!("vectors must be a JSON list of lists"))?;
    rows.iter()
        .enumerate()
        .map(|(i, row)| {
            let row = row.as_array().ok_or_else(|| anyhow!("vector {i} is not a list"))?;
            if row.len() != dim {
                bail!("vector {i} has {} entries, the algebra has dimension {dim}", row.len());
            }
            row.iter().map(entry).collect()
        })
        .collect()
}

fn entry(v: &Value) -> Result<tqft::Scalar> {
    match v {
        Value::String(s) => Ok(scalar::parse(s)?),
        Value::Number(n) => {
            n.as_i64().map(scalar::int).ok_or_else(|| anyhow!("{n} is not an integer; write fractions as \"p/q\""))
        }
        other => bail!("expected a number or \"p/q\", got {other}"),
    }
}

pub fn degrees(s: &str) -> Result<Vec<usize>> {
    s.split(',').map(|p| p.trim().parse().map_err(|_| anyhow!("degree {p:?} is not a non-negative integer"))).collect()
}
