//! Machine-readable verification reports and trajectory tables.
//!
//! Rendering is deterministic: checks sorted by name, JSON objects with
//! sorted keys, no timestamps. Rerunning a suite with the same config and
//! seed must reproduce the output byte for byte.

use crate::config::{format_complex, OutputFormat};
use crate::C64;
use serde_json::{json, Value};

/// One value in a check's `inputs` record. Complex values render as {re, im}
/// in JSON and "re+imi" in CSV.
#[derive(Debug, Clone)]
pub enum InputValue {
    Complex(C64),
    Real(f64),
    Int(i64),
    Text(String),
}

impl InputValue {
    fn to_json(&self) -> Value {
        match self {
            InputValue::Complex(z) => json!({"re": z.re, "im": z.im}),
            InputValue::Real(x) => json!(x),
            InputValue::Int(n) => json!(n),
            InputValue::Text(s) => json!(s),
        }
    }

    fn to_csv(&self) -> String {
        match self {
            InputValue::Complex(z) => format_complex(*z),
            InputValue::Real(x) => format!("{x}"),
            InputValue::Int(n) => format!("{n}"),
            InputValue::Text(s) => s.clone(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    /// which formula or route this residual verifies, as a stable id
    pub anchor: String,
    pub inputs: Vec<(String, InputValue)>,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl Check {
    /// A measured residual against a tolerance. Non-finite residuals fail.
    pub fn measured(
        name: impl Into<String>,
        anchor: impl Into<String>,
        inputs: Vec<(String, InputValue)>,
        residual: f64,
        tolerance: f64,
    ) -> Check {
        let mut inputs = inputs;
        inputs.sort_by(|a, b| a.0.cmp(&b.0));
        Check {
            name: name.into(),
            anchor: anchor.into(),
            inputs,
            residual,
            tolerance,
            pass: residual.is_finite() && residual <= tolerance,
        }
    }

    /// A check that could not produce a number at all; recorded as a failure
    /// with the error text, never silently dropped.
    pub fn errored(
        name: impl Into<String>,
        anchor: impl Into<String>,
        tolerance: f64,
        err: impl std::fmt::Display,
    ) -> Check {
        Check::measured(
            name,
            anchor,
            vec![("error".into(), InputValue::Text(err.to_string()))],
            f64::INFINITY,
            tolerance,
        )
    }

    fn to_json(&self) -> Value {
        let inputs: serde_json::Map<String, Value> = self
            .inputs
            .iter()
            .map(|(k, v)| (k.clone(), v.to_json()))
            .collect();
        json!({
            "name": self.name,
            "anchor": self.anchor,
            "inputs": inputs,
            "residual": self.residual,
            "tolerance": self.tolerance,
            "pass": self.pass,
        })
    }
}

#[derive(Debug, Clone)]
pub struct Report {
    pub version: String,
    pub config: Value,
    /// sorted by name
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(config: Value, mut checks: Vec<Check>) -> Report {
        checks.sort_by(|a, b| a.name.cmp(&b.name));
        Report {
            version: env!("CARGO_PKG_VERSION").to_string(),
            config,
            checks,
        }
    }

    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.pass).count()
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_json_value(&self) -> Value {
        json!({
            "version": self.version,
            "config": self.config,
            "checks": self.checks.iter().map(Check::to_json).collect::<Vec<_>>(),
            "summary": {
                "total": self.checks.len(),
                "passed": self.passed(),
                "failed": self.checks.len() - self.passed(),
                "pass": self.all_pass(),
            },
        })
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => {
                let mut s = serde_json::to_string_pretty(&self.to_json_value())
                    .expect("report serialization is infallible");
                s.push('\n');
                s
            }
            OutputFormat::Csv => {
                let mut out = String::from("name,anchor,residual,tolerance,pass,inputs\n");
                for c in &self.checks {
                    let inputs = c
                        .inputs
                        .iter()
                        .map(|(k, v)| format!("{k}={}", v.to_csv()))
                        .collect::<Vec<_>>()
                        .join(";");
                    out.push_str(&format!(
                        "{},{},{},{},{},{}\n",
                        csv_field(&c.name),
                        csv_field(&c.anchor),
                        c.residual,
                        c.tolerance,
                        c.pass,
                        csv_field(&inputs),
                    ));
                }
                out
            }
        }
    }

    /// One human line per check, pass/fail first.
    pub fn console_lines(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = if c.pass { "PASS" } else { "FAIL" };
            out.push_str(&format!(
                "{tag} {} residual {:.3e} tol {:.1e}\n",
                c.name, c.residual, c.tolerance
            ));
        }
        out.push_str(&format!(
            "{} of {} checks passed\n",
            self.passed(),
            self.checks.len()
        ));
        out
    }
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// One τ-sample of a solution trajectory. Rows where the computation failed
/// or the residual exceeded the tolerance are flagged but still emitted.
#[derive(Debug, Clone)]
pub struct TrajectoryRow {
    pub tau: C64,
    pub t: C64,
    pub b1: C64,
    pub delta1: C64,
    pub lambda: C64,
    pub residual_elliptic: f64,
    pub residual_rational: f64,
    pub flagged: bool,
    /// short reason when flagged, empty otherwise
    pub note: String,
}

impl TrajectoryRow {
    pub fn failed(tau: C64, note: String) -> TrajectoryRow {
        let nan = C64::new(f64::NAN, f64::NAN);
        TrajectoryRow {
            tau,
            t: nan,
            b1: nan,
            delta1: nan,
            lambda: nan,
            residual_elliptic: f64::NAN,
            residual_rational: f64::NAN,
            flagged: true,
            note,
        }
    }
}

pub fn render_trajectory(rows: &[TrajectoryRow], format: OutputFormat) -> String {
    match format {
        OutputFormat::Csv => {
            let mut out = String::from(
                "tau,t,b1,delta1,lambda,residual_elliptic,residual_rational,flagged,note\n",
            );
            for r in rows {
                out.push_str(&format!(
                    "{},{},{},{},{},{},{},{},{}\n",
                    format_complex(r.tau),
                    format_complex(r.t),
                    format_complex(r.b1),
                    format_complex(r.delta1),
                    format_complex(r.lambda),
                    r.residual_elliptic,
                    r.residual_rational,
                    r.flagged,
                    csv_field(&r.note),
                ));
            }
            out
        }
        OutputFormat::Json => {
            fn cj(z: C64) -> Value {
                json!({"re": z.re, "im": z.im})
            }
            let rows: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "tau": cj(r.tau),
                        "t": cj(r.t),
                        "b1": cj(r.b1),
                        "delta1": cj(r.delta1),
                        "lambda": cj(r.lambda),
                        "residual_elliptic": r.residual_elliptic,
                        "residual_rational": r.residual_rational,
                        "flagged": r.flagged,
                        "note": r.note,
                    })
                })
                .collect();
            let mut s = serde_json::to_string_pretty(&json!({ "rows": rows }))
                .expect("trajectory serialization is infallible");
            s.push('\n');
            s
        }
    }
}
