use linstat_core::kernel::{transform_for, variance_with, VarianceOptions};
use linstat_core::{variance_oracle, Basis, KernelMatrix, Matrix};
use serde::Serialize;

use crate::failure::Failure;
use crate::request::{Command, Job};

/// `check` fails above this gap.
pub const CHECK_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Meta {
    pub command: Command,
    pub weight: &'static str,
    pub a: f64,
    pub b: f64,
    #[serde(rename = "K")]
    pub k: usize,
    pub basis: &'static str,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct JobResult {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub variance: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expansion: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kernel: Option<Vec<Vec<f64>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub prefactor: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub transform: Option<Vec<Vec<f64>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_variance: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rel_gap: Option<f64>,
    pub meta: Meta,
}

fn basis_name(b: Basis) -> &'static str {
    match b {
        Basis::ChebT => "chebyshev-t",
        Basis::ChebU => "chebyshev-u",
        Basis::SzegoHardEdge => "szego-hard-edge",
        Basis::SzegoJacobi => "szego-jacobi",
    }
}

fn basis_for(job: &Job) -> Basis {
    use linstat_core::WeightKind::*;
    match job.weight.kind() {
        Arcsine => Basis::ChebT,
        Semicircle => Basis::ChebU,
        HardEdge => Basis::SzegoHardEdge,
        Jacobi => Basis::SzegoJacobi,
    }
}

fn finite(v: f64, what: &str) -> Result<f64, Failure> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Failure::numerical(
            "non-finite",
            format!("{what} is not finite"),
        ))
    }
}

fn nested(m: &Matrix) -> Vec<Vec<f64>> {
    m.to_nested()
}

/// `|v - o| / max(1, |v|)`.
pub fn rel_gap(v: f64, o: f64) -> f64 {
    (v - o).abs() / v.abs().max(1.0)
}

pub fn run(job: &Job) -> Result<JobResult, Failure> {
    let mut out = JobResult {
        variance: None,
        expansion: None,
        d: None,
        kernel: None,
        prefactor: None,
        transform: None,
        oracle_variance: None,
        rel_gap: None,
        meta: Meta {
            command: job.command,
            weight: job.weight.kind().name(),
            a: job.weight.a(),
            b: job.weight.b(),
            k: job.k,
            basis: basis_name(basis_for(job)),
        },
    };

    if let Some(f) = &job.f {
        let opts = VarianceOptions {
            max_degree: job.max_degree,
            ..Default::default()
        };
        let r = variance_with(f, &job.weight, &opts).map_err(Failure::from_core)?;
        out.variance = Some(finite(r.value, "variance")?);
        out.expansion = Some(r.expansion.coeffs.clone());
        if job.emit_d || job.command == Command::Transform {
            out.d = Some(r.d.clone());
        }
        if job.oracle || job.command == Command::Check {
            let o = finite(variance_oracle(f, &job.weight), "oracle variance")?;
            out.oracle_variance = Some(o);
            out.rel_gap = Some(rel_gap(r.value, o));
        }
    }

    if job.emit_kernel || job.command == Command::Kernel {
        let r = KernelMatrix::new(&job.weight, job.k);
        out.kernel = Some(nested(&r.entries));
        out.prefactor = Some(r.prefactor);
    }
    if job.command == Command::Transform {
        let t = transform_for(&job.weight, job.k).map_err(Failure::from_core)?;
        out.transform = Some(nested(&t.t));
    }

    if job.command == Command::Check {
        let gap = out.rel_gap.unwrap_or(0.0);
        if gap.is_nan() || gap > CHECK_TOLERANCE {
            return Err(Failure::numerical(
                "oracle-gap",
                format!(
                    "closed form {} and oracle {} differ by rel_gap {:e} > {:e}",
                    out.variance.unwrap_or(f64::NAN),
                    out.oracle_variance.unwrap_or(f64::NAN),
                    gap,
                    CHECK_TOLERANCE
                ),
            ));
        }
    }
    Ok(out)
}
