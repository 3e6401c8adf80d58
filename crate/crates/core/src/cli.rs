//! Structured reports for the `polycone` command-line tool.
//!
//! Every command returns a [`RunReport`]: one JSON object with `command`,
//! `input`, `result`, `budget`, `version` and `success` keys. Integer vectors
//! are arrays of integers; there are no floats.

use serde::Serialize;
use serde_json::{json, Value};

use crate::classify::{self, ClassifyOptions};
use crate::cyclic;
use crate::error::{Error, Result};
use crate::geometry::{self, IntVector};
use crate::gorenstein::{self, DegreeCap};
use crate::normaliz;
use crate::polymatroid::{self, Presentation};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Environment variable that raises the default `n` budget of `verify` and
/// `classify`.
pub const BUDGET_ENV: &str = "POLYCONE_BUDGET_N";

/// Process exit status contract.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    Success = 0,
    VerificationFailed = 1,
    Usage = 2,
    BudgetExceeded = 3,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        self as i32
    }

    pub fn for_error(e: &Error) -> Self {
        match e {
            Error::Parse(_) | Error::Domain(_) => ExitStatus::Usage,
            Error::Budget(_) => ExitStatus::BudgetExceeded,
            Error::Lineality(_) | Error::Inconsistency(_) => ExitStatus::VerificationFailed,
        }
    }
}

/// What a command operates on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Target {
    Cyclic(usize),
    Presentation(Presentation),
}

impl Target {
    pub fn presentation(&self) -> Result<Presentation> {
        match self {
            Target::Cyclic(n) => polymatroid::cyclic_presentation(*n),
            Target::Presentation(p) => Ok(p.clone()),
        }
    }

    fn describe(&self) -> Value {
        match self {
            Target::Cyclic(n) => json!({ "cyclic": n }),
            Target::Presentation(p) => json!({ "presentation": p.to_string() }),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct BudgetReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree_cap: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_n: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunReport {
    pub command: String,
    pub input: Value,
    pub result: Value,
    pub budget: BudgetReport,
    pub version: String,
    pub success: bool,
}

impl RunReport {
    fn new(command: &str, input: Value, result: Value, budget: BudgetReport, success: bool) -> Self {
        RunReport {
            command: command.to_string(),
            input,
            result,
            budget,
            version: VERSION.to_string(),
            success,
        }
    }

    pub fn exit_status(&self) -> ExitStatus {
        if self.success {
            ExitStatus::Success
        } else {
            ExitStatus::VerificationFailed
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    /// Human-readable rendering.
    pub fn to_text(&self) -> String {
        if self.command == "emit-normaliz" {
            if let Some(s) = self.result["normaliz"].as_str() {
                return s.to_string();
            }
        }
        let mut out = format!("{} {}\n", self.command, compact(&self.input));
        if let Value::Object(map) = &self.result {
            for (k, v) in map {
                match v {
                    Value::Array(items) if items.iter().all(|i| i.is_array() || i.is_object()) && !items.is_empty() => {
                        out.push_str(&format!("{k}: ({})\n", items.len()));
                        for i in items {
                            out.push_str(&format!("  {}\n", compact(i)));
                        }
                    }
                    _ => out.push_str(&format!("{k}: {}\n", compact(v))),
                }
            }
        }
        out.push_str(if self.success { "status: ok\n" } else { "status: FAILED\n" });
        out
    }
}

fn compact(v: &Value) -> String {
    serde_json::to_string(v).expect("value serializes")
}

fn vectors(v: &[IntVector]) -> Value {
    serde_json::to_value(v).expect("vectors serialize")
}

fn cap_report(cap: DegreeCap) -> BudgetReport {
    BudgetReport {
        degree_cap: match cap {
            DegreeCap::Default => None,
            DegreeCap::Fixed(k) => Some(k),
        },
        max_n: None,
    }
}

/// Reads [`BUDGET_ENV`], falling back to `default`. The variable can only
/// raise the budget.
pub fn budget_from_env(default: usize) -> usize {
    std::env::var(BUDGET_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .map_or(default, |v| v.max(default))
}

pub fn cmd_bases(target: &Target) -> Result<RunReport> {
    let p = target.presentation()?;
    let base = polymatroid::enumerate_bases(&p);
    let exchange = polymatroid::check_base_exchange(&base.points);
    Ok(RunReport::new(
        "bases",
        target.describe(),
        json!({
            "presentation": p.to_string(),
            "count": base.len(),
            "exchange_axiom": exchange,
            "points": base.points,
        }),
        BudgetReport::default(),
        exchange,
    ))
}

pub fn cmd_facets(target: &Target) -> Result<RunReport> {
    let p = target.presentation()?;
    let base = polymatroid::enumerate_bases(&p);
    let gens: Vec<IntVector> = base.points.iter().map(IntVector::from).collect();
    let cone = geometry::facet_enumeration(&gens)?;
    let rays = geometry::extreme_rays(&cone);
    let normals: Vec<IntVector> = cone.facets.iter().map(|f| f.normal().clone()).collect();
    Ok(RunReport::new(
        "facets",
        target.describe(),
        json!({
            "presentation": p.to_string(),
            "dim": cone.dim,
            "facet_count": normals.len(),
            "facets": vectors(&normals),
            "span_equations": vectors(&cone.span_equations),
            "extreme_rays": vectors(&rays),
        }),
        BudgetReport::default(),
        true,
    ))
}

pub fn cmd_predict(n: usize) -> Result<RunReport> {
    let pred = cyclic::predicted_facets(n)?;
    let entries: Vec<Value> = pred
        .normals
        .iter()
        .map(|(s, h)| json!({ "interval": s.indices(), "normal": h.normal() }))
        .collect();
    Ok(RunReport::new(
        "predict",
        json!({ "cyclic": n }),
        json!({ "count": entries.len(), "normals": entries }),
        BudgetReport::default(),
        true,
    ))
}

pub fn cmd_verify(n: usize, max_n: usize) -> Result<RunReport> {
    let r = cyclic::verify_cyclic_facets(n, max_n)?;
    let success = r.success;
    Ok(RunReport::new(
        "verify",
        json!({ "cyclic": n }),
        serde_json::to_value(&r).expect("verification serializes"),
        BudgetReport {
            degree_cap: None,
            max_n: Some(max_n),
        },
        success,
    ))
}

pub fn cmd_gorenstein(target: &Target, cap: DegreeCap) -> Result<RunReport> {
    let p = target.presentation()?;
    let s = gorenstein::is_gorenstein(&p, cap)?;
    Ok(RunReport::new(
        "gorenstein",
        target.describe(),
        serde_json::to_value(&s).expect("summary serializes"),
        cap_report(cap),
        true,
    ))
}

pub fn cmd_hilbert(target: &Target, cap: DegreeCap) -> Result<RunReport> {
    let p = target.presentation()?;
    let series = gorenstein::h_vector(&polymatroid::enumerate_bases(&p), cap)?;
    let palindromic = series.is_palindromic();
    let mut result = serde_json::to_value(&series).expect("series serializes");
    result["presentation"] = json!(p.to_string());
    result["palindromic"] = json!(palindromic);
    Ok(RunReport::new("hilbert", target.describe(), result, cap_report(cap), true))
}

pub fn cmd_classify(opts: &ClassifyOptions) -> Result<RunReport> {
    let c = classify::classify(opts)?;
    Ok(RunReport::new(
        "classify",
        json!({ "n": opts.n, "m_min": opts.m_min, "m_max": opts.m_max }),
        serde_json::to_value(&c).expect("classification serializes"),
        BudgetReport {
            degree_cap: c.degree_cap,
            max_n: Some(opts.max_n),
        },
        true,
    ))
}

pub fn cmd_emit_normaliz(target: &Target) -> Result<RunReport> {
    let p = target.presentation()?;
    let text = normaliz::emit(&polymatroid::enumerate_bases(&p));
    Ok(RunReport::new(
        "emit-normaliz",
        target.describe(),
        json!({ "normaliz": text }),
        BudgetReport::default(),
        true,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(ExitStatus::for_error(&Error::Parse("x".into())).code(), 2);
        assert_eq!(ExitStatus::for_error(&Error::Domain("x".into())).code(), 2);
        assert_eq!(ExitStatus::for_error(&Error::Budget("x".into())).code(), 3);
        assert_eq!(ExitStatus::for_error(&Error::Inconsistency("x".into())).code(), 1);
    }

    #[test]
    fn report_top_level_keys() {
        let r = cmd_bases(&Target::Cyclic(3)).unwrap();
        let v: Value = serde_json::from_str(&r.to_json()).unwrap();
        for key in ["command", "input", "result", "budget", "version", "success"] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
        assert_eq!(v["result"]["count"], 7);
        assert_eq!(v["result"]["points"][0], json!([0, 1, 2]));
    }

    #[test]
    fn text_rendering_of_normaliz_is_the_file() {
        let r = cmd_emit_normaliz(&Target::Cyclic(3)).unwrap();
        assert!(r.to_text().starts_with("7\n3\n0 1 2\n"));
    }

    #[test]
    fn predict_lists_intervals() {
        let r = cmd_predict(4).unwrap();
        assert_eq!(r.result["count"], 12);
        assert!(cmd_predict(2).is_err());
    }
}
