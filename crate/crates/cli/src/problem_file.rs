//! JSON problem files.
//!
//! ```json
//! {
//!   "schema_version": 1,
//!   "alpha": 0.5, "lambda": 1, "horizon": 1, "grid_step": 0.001,
//!   "terms": [{"b": "t", "b_sup": 1, "g": "(x + 1) / 4", "lipschitz": 0.25, "delay": 1}],
//!   "history": "t"
//! }
//! ```
//!
//! `b` and `history` are expressions in `t`, `g` in `x`. `grid_step`, `b_sup`
//! and (for affine `g`) `lipschitz` may be omitted.

use std::fs;
use std::path::{Path, PathBuf};

use fracreep::expr::{Expr, ScalarFn};
use fracreep::solver::{DelayTerm, ProblemSpec};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum ProblemError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("{field}: {message}")]
    Field { field: String, message: String },
}

fn field(field: impl Into<String>, message: impl Into<String>) -> ProblemError {
    ProblemError::Field {
        field: field.into(),
        message: message.into(),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermFile {
    pub b: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b_sup: Option<f64>,
    pub g: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lipschitz: Option<f64>,
    pub delay: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub schema_version: u32,
    pub alpha: f64,
    pub lambda: f64,
    pub horizon: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grid_step: Option<f64>,
    pub terms: Vec<TermFile>,
    pub history: String,
}

fn parse_expr(src: &str, var: char, name: &str) -> Result<Expr, ProblemError> {
    Expr::parse(src, var).map_err(|e| field(name, e.to_string()))
}

impl ProblemFile {
    pub fn from_json(text: &str) -> Result<Self, ProblemError> {
        serde_json::from_str(text).map_err(|e| ProblemError::Syntax {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("problem files always serialise");
        s.push('\n');
        s
    }

    /// Validates the file and builds the problem.
    pub fn to_spec(&self) -> Result<ProblemSpec, ProblemError> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(field(
                "schema_version",
                format!("unsupported version {} (expected {SCHEMA_VERSION})", self.schema_version),
            ));
        }
        if !(self.alpha > 0.0 && self.alpha <= 1.0) {
            return Err(field("alpha", format!("must lie in (0, 1], got {}", self.alpha)));
        }
        if !(self.lambda.is_finite() && self.lambda > 0.0) {
            return Err(field("lambda", format!("must be positive, got {}", self.lambda)));
        }
        if !(self.horizon.is_finite() && self.horizon > 0.0) {
            return Err(field("horizon", format!("must be positive, got {}", self.horizon)));
        }
        if self.terms.is_empty() {
            return Err(field("terms", "at least one delay term required"));
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (j, t) in self.terms.iter().enumerate() {
            let name = |f: &str| format!("terms[{j}].{f}");
            if !(t.delay.is_finite() && t.delay > 0.0) {
                return Err(field(name("delay"), format!("must be positive, got {}", t.delay)));
            }
            if t.delay > self.horizon {
                return Err(field(
                    name("delay"),
                    format!("{} exceeds the horizon {}", t.delay, self.horizon),
                ));
            }
            let b = parse_expr(&t.b, 't', &name("b"))?;
            let g = parse_expr(&t.g, 'x', &name("g"))?;
            let lipschitz = match t.lipschitz {
                Some(l) if l.is_finite() && l >= 0.0 => l,
                Some(l) => return Err(field(name("lipschitz"), format!("must be non-negative, got {l}"))),
                None => match g.affine() {
                    Some((slope, _)) => slope.abs(),
                    None => return Err(field(name("lipschitz"), "required because g is not affine")),
                },
            };
            if let Some(bs) = t.b_sup {
                if !(bs.is_finite() && bs >= 0.0) {
                    return Err(field(name("b_sup"), format!("must be non-negative, got {bs}")));
                }
            }
            terms.push(DelayTerm {
                b: b.into(),
                b_sup: t.b_sup,
                g: g.into(),
                lipschitz: Some(lipschitz),
                delay: t.delay,
            });
        }
        let history = parse_expr(&self.history, 't', "history")?;
        let at0 = history.eval(0.0);
        if at0.is_nan() || at0.abs() > 1e-12 {
            return Err(field("history", format!("history must vanish at 0, got {at0}")));
        }
        let spec = ProblemSpec::new(self.alpha, self.lambda, self.horizon, terms, history.into())
            .map_err(|e| field(blame(&e.to_string()), e.to_string()))?;
        match self.grid_step {
            Some(h) => spec
                .with_grid_step(h)
                .map_err(|e| field("grid_step", e.to_string())),
            None => Ok(spec),
        }
    }

    /// Canonical file for `spec`; every function must be expression-backed.
    pub fn from_spec(spec: &ProblemSpec) -> Result<Self, ProblemError> {
        let expr = |f: &ScalarFn, name: String| {
            f.as_expr()
                .map(|e| e.to_string())
                .ok_or_else(|| field(name, "not an expression"))
        };
        let terms = spec
            .terms()
            .iter()
            .enumerate()
            .map(|(j, t)| {
                Ok(TermFile {
                    b: expr(&t.b, format!("terms[{j}].b"))?,
                    b_sup: t.b_sup,
                    g: expr(&t.g, format!("terms[{j}].g"))?,
                    lipschitz: t.lipschitz,
                    delay: t.delay,
                })
            })
            .collect::<Result<Vec<_>, ProblemError>>()?;
        Ok(ProblemFile {
            schema_version: SCHEMA_VERSION,
            alpha: spec.alpha(),
            lambda: spec.lambda(),
            horizon: spec.horizon(),
            grid_step: spec.grid_step(),
            terms,
            history: expr(spec.history(), "history".into())?,
        })
    }
}

/// Best-effort field name for a validation message from the core library.
fn blame(message: &str) -> String {
    if let Some(start) = message.find("terms[") {
        let rest = &message[start..];
        let end = rest.find([' ', ':']).unwrap_or(rest.len());
        return rest[..end].to_string();
    }
    if message.contains("history") {
        return "history".into();
    }
    "problem".into()
}

pub fn parse_problem(path: &Path) -> Result<ProblemSpec, ProblemError> {
    let text = fs::read_to_string(path).map_err(|source| ProblemError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    ProblemFile::from_json(&text)?.to_spec()
}
