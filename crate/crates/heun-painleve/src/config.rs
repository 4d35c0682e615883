//! Run configuration for the verification suites: precision modes, the
//! "re+imi" text form of complex numbers, τ-grids, and the config echo that
//! goes into every report.

use crate::error::{Error, Result};
use crate::painleve::FamilyKind;
use crate::C64;
use std::fmt;
use std::str::FromStr;

/// Accuracy targets for the adaptive pieces (quadrature, ODE stepping).
///
/// Both modes run in f64; `Extended` pushes the adaptive targets to the
/// roundoff floor, buying roughly two digits at a few times the cost. True
/// high-precision reference values live in the frozen test oracles, not here.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Precision {
    Double,
    Extended,
}

impl Precision {
    pub fn quad_tol(self) -> f64 {
        match self {
            Precision::Double => 1e-11,
            Precision::Extended => 1e-13,
        }
    }

    pub fn ode_rtol(self) -> f64 {
        match self {
            Precision::Double => 1e-12,
            Precision::Extended => 1e-13,
        }
    }
}

impl FromStr for Precision {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "double" => Ok(Precision::Double),
            "extended" => Ok(Precision::Extended),
            other => Err(Error::usage(format!(
                "unknown precision '{other}' (expected double or extended)"
            ))),
        }
    }
}

impl fmt::Display for Precision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Precision::Double => write!(f, "double"),
            Precision::Extended => write!(f, "extended"),
        }
    }
}

/// Parse "re+imi" (also bare "re", bare "imi", and "i"/"-i").
///
/// The split point is the last sign that is not an exponent sign, so
/// "1e-3+2.5e-4i" parses. Whitespace inside the literal is not accepted.
pub fn parse_complex(s: &str) -> Result<C64> {
    let t = s.trim();
    if t.is_empty() {
        return Err(Error::usage("empty complex literal"));
    }
    let bad = || Error::usage(format!("cannot parse '{t}' as a complex number (want re+imi)"));
    let parse_re = |p: &str| p.parse::<f64>().map_err(|_| bad());
    // unit imaginary parts: "i", "+i", "-i", "1.5-i", ...
    let parse_im = |p: &str| match p {
        "" | "+" => Ok(1.0),
        "-" => Ok(-1.0),
        _ => p.parse::<f64>().map_err(|_| bad()),
    };
    let Some(body) = t.strip_suffix('i').or_else(|| t.strip_suffix('I')) else {
        return Ok(C64::new(parse_re(t)?, 0.0));
    };
    let bytes = body.as_bytes();
    let mut split = None;
    for k in (1..bytes.len()).rev() {
        if matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E') {
            split = Some(k);
            break;
        }
    }
    match split {
        Some(k) => Ok(C64::new(parse_re(&body[..k])?, parse_im(&body[k..])?)),
        None => Ok(C64::new(0.0, parse_im(body)?)),
    }
}

/// Shortest-roundtrip "re+imi", always carrying both parts with an explicit
/// sign between them, so `parse_complex` recovers the value bit for bit.
pub fn format_complex(z: C64) -> String {
    if z.im.is_sign_negative() {
        format!("{}{}i", z.re, z.im)
    } else {
        format!("{}+{}i", z.re, z.im)
    }
}

/// Straight-line τ-grid, written "start:end:count" with complex endpoints.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TauGrid {
    pub start: C64,
    pub end: C64,
    pub count: usize,
}

impl TauGrid {
    pub fn new(start: C64, end: C64, count: usize) -> Result<Self> {
        if count == 0 {
            return Err(Error::usage("τ-grid needs at least one point"));
        }
        if start.im <= 0.0 || end.im <= 0.0 {
            return Err(Error::usage("τ-grid endpoints must have positive imaginary part"));
        }
        Ok(TauGrid { start, end, count })
    }

    pub fn points(&self) -> Vec<C64> {
        if self.count == 1 {
            return vec![self.start];
        }
        (0..self.count)
            .map(|k| {
                let s = k as f64 / (self.count - 1) as f64;
                self.start + (self.end - self.start) * s
            })
            .collect()
    }
}

impl FromStr for TauGrid {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 3 {
            return Err(Error::usage(format!(
                "cannot parse τ-grid '{s}' (want start:end:count, e.g. 1.0i:1.6i:20)"
            )));
        }
        let start = parse_complex(parts[0])?;
        let end = parse_complex(parts[1])?;
        let count: usize = parts[2]
            .parse()
            .map_err(|_| Error::usage(format!("bad grid count '{}'", parts[2])))?;
        TauGrid::new(start, end, count)
    }
}

impl fmt::Display for TauGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}:{}:{}",
            format_complex(self.start),
            format_complex(self.end),
            self.count
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Lame,
    Reduction,
    P6,
    Modular,
    Monodromy,
    All,
}

impl Suite {
    pub const ALL_NAMES: [&'static str; 6] =
        ["lame", "reduction", "p6", "modular", "monodromy", "all"];
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "lame" => Ok(Suite::Lame),
            "reduction" => Ok(Suite::Reduction),
            "p6" => Ok(Suite::P6),
            "modular" => Ok(Suite::Modular),
            "monodromy" => Ok(Suite::Monodromy),
            "all" => Ok(Suite::All),
            other => Err(Error::usage(format!(
                "unknown suite '{other}' (expected one of {})",
                Suite::ALL_NAMES.join(", ")
            ))),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Suite::Lame => "lame",
            Suite::Reduction => "reduction",
            Suite::P6 => "p6",
            Suite::Modular => "modular",
            Suite::Monodromy => "monodromy",
            Suite::All => "all",
        };
        write!(f, "{name}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Csv,
}

impl FromStr for OutputFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            other => Err(Error::usage(format!(
                "unknown format '{other}' (expected json or csv)"
            ))),
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OutputFormat::Json => write!(f, "json"),
            OutputFormat::Csv => write!(f, "csv"),
        }
    }
}

/// Everything a suite run depends on. Identical configs (and seeds) must
/// produce byte-identical reports; nothing here may carry wall-clock state.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub suite: Suite,
    /// anchor τ for single-τ checks
    pub tau: C64,
    /// grid for trajectory and drift checks; None picks a suite default
    pub tau_grid: Option<TauGrid>,
    pub family: FamilyKind,
    /// (C₁, C₃) for the generic families
    pub c1: C64,
    pub c3: C64,
    /// (D₁, D₃) for the degenerate families
    pub d1: C64,
    pub d3: C64,
    /// weights for the general spectral checks in the lame suite
    pub l: [u32; 4],
    /// overrides every per-check default tolerance when set
    pub tol: Option<f64>,
    pub precision: Precision,
    pub seed: u64,
    pub format: OutputFormat,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            suite: Suite::All,
            tau: C64::new(0.3, 1.1),
            tau_grid: None,
            family: FamilyKind::Hitchin,
            c1: C64::new(0.5, 0.0),
            c3: C64::new(0.5, 0.0),
            d1: C64::new(0.4, 0.3),
            d3: C64::new(-0.2, 0.5),
            l: [2, 0, 0, 0],
            tol: None,
            precision: Precision::Double,
            seed: 7,
            format: OutputFormat::Json,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.tau.im <= 0.0 {
            return Err(Error::usage("τ must have positive imaginary part"));
        }
        if let Some(tol) = self.tol {
            if !(tol > 0.0) {
                return Err(Error::usage("--tol must be positive"));
            }
        }
        if self.l.iter().any(|&li| li > 6) {
            return Err(Error::usage("weights above 6 are outside the tested range"));
        }
        Ok(())
    }

    /// Tolerance actually applied to a check with the given default.
    pub fn tol_or(&self, default: f64) -> f64 {
        self.tol.unwrap_or(default)
    }

    /// Config echo for the report, complex entries as {re, im}.
    pub fn echo_json(&self) -> serde_json::Value {
        fn cj(z: C64) -> serde_json::Value {
            serde_json::json!({"re": z.re, "im": z.im})
        }
        let grid = match &self.tau_grid {
            Some(g) => serde_json::json!({
                "start": cj(g.start), "end": cj(g.end), "count": g.count
            }),
            None => serde_json::Value::Null,
        };
        serde_json::json!({
            "suite": self.suite.to_string(),
            "tau": cj(self.tau),
            "tau_grid": grid,
            "family": self.family.with_params(self.c1, self.c3).to_string(),
            "c1": cj(self.c1),
            "c3": cj(self.c3),
            "d1": cj(self.d1),
            "d3": cj(self.d3),
            "l": self.l,
            "tol": self.tol,
            "precision": self.precision.to_string(),
            "seed": self.seed,
            "format": self.format.to_string(),
        })
    }
}
