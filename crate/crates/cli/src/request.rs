use clap::ValueEnum;
use linstat_core::{Poly, WeightKind, WeightSpec, DEFAULT_MAX_DEGREE};
use serde::{Deserialize, Serialize};

use crate::failure::Failure;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    /// Variance of tr f(M)
    Variance,
    /// Coefficients of f in the weight's orthogonal basis
    Expand,
    /// Kernel matrix R(m, n)
    Kernel,
    /// Upper-triangular T with c = T d
    Transform,
    /// Variance cross-checked against the principal-value integral
    Check,
}

/// Request as read from `--input`: every field optional, command-line flags
/// fill in or override.
#[derive(Debug, Clone, Default, PartialEq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct JobRequest {
    pub command: Option<Command>,
    pub coeffs: Option<Vec<f64>>,
    pub weight: Option<String>,
    pub a: Option<f64>,
    pub b: Option<f64>,
    #[serde(default)]
    pub emit_kernel: bool,
    #[serde(default)]
    pub emit_d: bool,
    #[serde(default)]
    pub oracle: bool,
    pub k: Option<usize>,
    pub max_degree: Option<usize>,
}

impl JobRequest {
    /// Fields set in `over` win; flags are or-ed.
    pub fn overlay(self, over: JobRequest) -> JobRequest {
        JobRequest {
            command: over.command.or(self.command),
            coeffs: over.coeffs.or(self.coeffs),
            weight: over.weight.or(self.weight),
            a: over.a.or(self.a),
            b: over.b.or(self.b),
            emit_kernel: over.emit_kernel || self.emit_kernel,
            emit_d: over.emit_d || self.emit_d,
            oracle: over.oracle || self.oracle,
            k: over.k.or(self.k),
            max_degree: over.max_degree.or(self.max_degree),
        }
    }
}

/// A request that passed validation.
#[derive(Debug, Clone, PartialEq)]
pub struct Job {
    pub command: Command,
    pub f: Option<Poly>,
    pub weight: WeightSpec,
    pub k: usize,
    pub emit_kernel: bool,
    pub emit_d: bool,
    pub oracle: bool,
    pub max_degree: usize,
}

fn missing(field: &str) -> Failure {
    Failure::validation("missing-field", format!("missing required field `{field}`"))
}

impl JobRequest {
    /// Checks names, interval constraints, coefficients and the degree cap
    /// before anything is computed. `env_cap` is the raw `LINSTAT_MAX_DEGREE`.
    pub fn validate(&self, env_cap: Option<&str>) -> Result<Job, Failure> {
        let command = self.command.ok_or_else(|| missing("command"))?;
        let name = self.weight.as_deref().ok_or_else(|| missing("weight"))?;
        let kind = WeightKind::from_name(name).ok_or_else(|| {
            Failure::validation(
                "unknown-weight",
                format!("unknown weight `{name}`; expected one of arcsine, semicircle, hard-edge, jacobi"),
            )
        })?;
        let a = self.a.ok_or_else(|| missing("a"))?;
        let b = self.b.ok_or_else(|| missing("b"))?;
        let weight = WeightSpec::new(kind, a, b).map_err(Failure::from_core)?;

        let max_degree = match (self.max_degree, env_cap) {
            (Some(n), _) => n,
            (None, Some(raw)) => raw.trim().parse::<usize>().map_err(|_| {
                Failure::validation(
                    "malformed-input",
                    format!("LINSTAT_MAX_DEGREE must be a non-negative integer (got `{raw}`)"),
                )
            })?,
            (None, None) => DEFAULT_MAX_DEGREE,
        };

        let f = match &self.coeffs {
            None => None,
            Some(c) if c.is_empty() => {
                return Err(Failure::validation(
                    "malformed-input",
                    "coeffs must not be empty",
                ));
            }
            Some(c) => Some(Poly::try_new(c.clone()).map_err(|_| {
                Failure::validation("malformed-input", "coeffs must be finite numbers")
            })?),
        };

        let k = match (command, &f, self.k) {
            (_, Some(_), Some(_)) => {
                return Err(Failure::validation(
                    "conflicting-input",
                    "give either coeffs or k, not both",
                ));
            }
            (Command::Kernel | Command::Transform, None, Some(0)) => {
                return Err(Failure::validation(
                    "malformed-input",
                    "k must be at least 1",
                ));
            }
            (Command::Kernel | Command::Transform, None, Some(k)) => k,
            (Command::Kernel | Command::Transform, None, None) => {
                return Err(missing("coeffs` or `k"))
            }
            (_, None, _) => return Err(missing("coeffs")),
            (_, Some(p), None) => p.degree(),
        };
        if k > max_degree {
            return Err(Failure::from_core(linstat_core::Error::DegreeCap {
                degree: k,
                cap: max_degree,
            }));
        }

        Ok(Job {
            command,
            f,
            weight,
            k,
            emit_kernel: self.emit_kernel,
            emit_d: self.emit_d,
            oracle: self.oracle,
            max_degree,
        })
    }
}
