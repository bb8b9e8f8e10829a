//! Report serialization.

use std::io::Write;
use std::path::Path;

use gyro_core::{CheckRecord, SampleCount, VerificationReport};
use serde_json::{json, Value};

use crate::config::RunConfig;
use crate::error::CliError;
use crate::json::{float, to_canonical_string};
use crate::suites::SuiteOutput;

/// Key of the only field allowed to differ between identical runs.
pub const WALL_TIME_KEY: &str = "wall_time_seconds";

fn check_value(c: &CheckRecord) -> Value {
    let (kind, n) = match c.samples {
        SampleCount::Sampled(n) => ("sampled", n),
        SampleCount::Exhaustive(n) => ("exhaustive", n),
    };
    json!({
        "name": c.name,
        "pass": c.pass,
        "samples": n,
        "coverage": kind,
        "max_residual": float(c.max_residual),
        "witness": c.witness.as_ref().map(|w| json!({ "values": w.values, "residual": float(w.residual) })),
        "note": c.note,
    })
}

pub fn report_value(r: &VerificationReport) -> Value {
    json!({
        "suite": r.suite,
        "pass": r.pass(),
        "seed": r.seed,
        "tolerances": r.tolerances.map(|t| json!({
            "abs_tol": float(t.abs_tol),
            "rel_tol": float(t.rel_tol),
            "boundary_margin": float(t.boundary_margin),
        })),
        "depth": r.depth,
        "resolution": r.depth.map(|d| float((-(d as f64)).exp2())),
        "max_residual": float(r.max_residual()),
        "checks": r.checks.iter().map(check_value).collect::<Vec<_>>(),
        WALL_TIME_KEY: r.wall_time_seconds.map(float),
    })
}

/// The full document for a CLI run.
pub fn output_value(out: &SuiteOutput, cfg: &RunConfig) -> Value {
    let mut v = report_value(&out.report);
    v["model"] = json!(out.model);
    v["n_samples"] = json!(cfg.n_samples);
    if v["seed"].is_null() {
        v["seed"] = json!(cfg.seed);
    }
    if let Some(r) = &out.results {
        v["results"] = r.clone();
    }
    v
}

/// Writes the canonical JSON of `v` to `path`, or to stdout.
pub fn emit_report(v: &Value, path: Option<&Path>) -> Result<(), CliError> {
    let text = to_canonical_string(v);
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::Io {
            path: p.display().to_string(),
            message: e.to_string(),
        }),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| CliError::Io {
                    path: "<stdout>".into(),
                    message: e.to_string(),
                })
        }
    }
}

/// The report text with the wall time removed, for determinism checks.
pub fn without_wall_time(v: &Value) -> String {
    let mut v = v.clone();
    if let Some(m) = v.as_object_mut() {
        m.remove(WALL_TIME_KEY);
    }
    to_canonical_string(&v)
}
