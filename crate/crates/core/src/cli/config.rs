//! Tolerance configuration: command-line flags, then the JSON file named by
//! `QGINV_CONFIG`, then built-in defaults.

use std::path::Path;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::numerics::Tolerances;

pub const CONFIG_ENV: &str = "QGINV_CONFIG";

/// Values given explicitly on the command line.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Overrides {
    pub rel_tol: Option<f64>,
    pub max_denominator: Option<u64>,
    pub eig_threshold: Option<f64>,
}

/// Reads a config file of the form `{"rel_tol": 1e-11, "max_denominator": 10000, "eig_threshold": 1e-13}`.
/// Every key is optional; unknown keys are rejected.
pub fn read_file(path: &Path) -> Result<Overrides> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::parse(path.display().to_string(), format!("cannot read config file: {e}")))?;
    let v: Value = serde_json::from_str(&text)
        .map_err(|e| Error::parse(path.display().to_string(), format!("config is not valid JSON: {e}")))?;
    let obj = v
        .as_object()
        .ok_or_else(|| Error::parse(path.display().to_string(), "config must be a JSON object"))?;
    let mut o = Overrides::default();
    for (k, val) in obj {
        let bad = || Error::parse(k.clone(), "config value has the wrong type");
        match k.as_str() {
            "rel_tol" => o.rel_tol = Some(val.as_f64().ok_or_else(bad)?),
            "max_denominator" => o.max_denominator = Some(val.as_u64().ok_or_else(bad)?),
            "eig_threshold" => o.eig_threshold = Some(val.as_f64().ok_or_else(bad)?),
            _ => return Err(Error::parse(k.clone(), "unknown config key")),
        }
    }
    Ok(o)
}

/// Layers `flags` over `file` over defaults and validates the result.
pub fn resolve(flags: Overrides, file: Option<Overrides>) -> Result<Tolerances> {
    let d = Tolerances::default();
    let f = file.unwrap_or_default();
    let t = Tolerances {
        rel_tol: flags.rel_tol.or(f.rel_tol).unwrap_or(d.rel_tol),
        max_denominator: flags.max_denominator.or(f.max_denominator).unwrap_or(d.max_denominator),
        eig_threshold: flags.eig_threshold.or(f.eig_threshold).unwrap_or(d.eig_threshold),
    };
    if !(t.rel_tol > 0.0) || !(t.eig_threshold > 0.0) || t.max_denominator == 0 {
        return Err(Error::Domain("tolerances must be positive".into()));
    }
    Ok(t)
}

pub fn to_json(t: &Tolerances) -> Value {
    json!({
        "rel_tol": t.rel_tol,
        "max_denominator": t.max_denominator,
        "eig_threshold": t.eig_threshold,
    })
}
