//! Command-line front-end for `linstat-core`.
//!
//! One JSON object per invocation goes to stdout on success. Any failure
//! writes exactly one `{"error": {...}}` object to stderr and exits 2
//! (invalid input) or 3 (numerical failure).

pub mod failure;
pub mod request;
pub mod run;

use std::io::Read;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::Parser;

pub use failure::{Failure, FailureKind};
pub use request::{Command, Job, JobRequest};
pub use run::{run, JobResult};

/// Environment variable overriding the degree cap.
pub const MAX_DEGREE_ENV: &str = "LINSTAT_MAX_DEGREE";

#[derive(Debug, Parser)]
#[command(
    name = "linstat",
    version,
    about = "Variance of polynomial linear statistics of random matrices"
)]
pub struct Cli {
    #[arg(value_enum)]
    pub command: Command,

    /// Monomial coefficients, lowest degree first: 0,1,2 is x + 2x²
    #[arg(
        long,
        value_delimiter = ',',
        allow_hyphen_values = true,
        conflicts_with = "input"
    )]
    pub coeffs: Option<Vec<f64>>,

    /// JSON request file; `-` reads standard input
    #[arg(long)]
    pub input: Option<PathBuf>,

    /// arcsine, semicircle, hard-edge or jacobi
    #[arg(long)]
    pub weight: Option<String>,

    #[arg(long, allow_negative_numbers = true)]
    pub a: Option<f64>,

    #[arg(long, allow_negative_numbers = true)]
    pub b: Option<f64>,

    /// Kernel size for `kernel` and `transform` when no coefficients are given
    #[arg(long)]
    pub k: Option<usize>,

    #[arg(long)]
    pub emit_kernel: bool,

    #[arg(long)]
    pub emit_d: bool,

    /// Also evaluate the principal-value integral and report rel_gap
    #[arg(long)]
    pub oracle: bool,

    #[arg(long)]
    pub max_degree: Option<usize>,

    /// Indented output
    #[arg(long)]
    pub pretty: bool,
}

impl Cli {
    fn flags(&self) -> JobRequest {
        JobRequest {
            command: Some(self.command),
            coeffs: self.coeffs.clone(),
            weight: self.weight.clone(),
            a: self.a,
            b: self.b,
            emit_kernel: self.emit_kernel,
            emit_d: self.emit_d,
            oracle: self.oracle,
            k: self.k,
            max_degree: self.max_degree,
        }
    }
}

/// What the process should print and return.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn failure(f: &Failure) -> Self {
        Outcome {
            code: f.exit_code(),
            stdout: String::new(),
            stderr: f.to_json() + "\n",
        }
    }
}

fn usage_failure(e: &clap::Error) -> Failure {
    let code = match e.kind() {
        ErrorKind::UnknownArgument => "unknown-flag",
        ErrorKind::ArgumentConflict => "conflicting-input",
        ErrorKind::InvalidValue | ErrorKind::ValueValidation => "malformed-input",
        ErrorKind::MissingRequiredArgument | ErrorKind::MissingSubcommand => "missing-field",
        _ => "usage",
    };
    let text = e.to_string();
    let first = text
        .lines()
        .next()
        .unwrap_or("")
        .trim_start_matches("error: ")
        .to_string();
    Failure::validation(code, first)
}

fn read_request(path: &PathBuf, stdin: &mut dyn Read) -> Result<JobRequest, Failure> {
    let mut text = String::new();
    let read = if path.as_os_str() == "-" {
        stdin.read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|s| text = s)
    };
    read.map_err(|e| {
        Failure::validation(
            "unreadable-input",
            format!("cannot read {}: {e}", path.display()),
        )
    })?;
    serde_json::from_str(&text)
        .map_err(|e| Failure::validation("malformed-input", format!("invalid request: {e}")))
}

/// Full invocation: argv (including the program name), the raw
/// `LINSTAT_MAX_DEGREE` value and standard input.
pub fn execute<I, T>(argv: I, env_cap: Option<&str>, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            return Outcome {
                code: 0,
                stdout: e.to_string(),
                stderr: String::new(),
            };
        }
        Err(e) => return Outcome::failure(&usage_failure(&e)),
    };

    let mut request = cli.flags();
    if let Some(path) = &cli.input {
        match read_request(path, stdin) {
            Ok(file) => {
                if file.command.is_some_and(|c| c != cli.command) {
                    return Outcome::failure(&Failure::validation(
                        "conflicting-input",
                        "command in the input file differs from the command line",
                    ));
                }
                request = file.overlay(request);
            }
            Err(f) => return Outcome::failure(&f),
        }
    }

    let result = request.validate(env_cap).and_then(|job| run(&job));
    match result {
        Ok(r) => {
            let body = if cli.pretty {
                serde_json::to_string_pretty(&r)
            } else {
                serde_json::to_string(&r)
            }
            .expect("result serializes");
            Outcome {
                code: 0,
                stdout: body + "\n",
                stderr: String::new(),
            }
        }
        Err(f) => Outcome::failure(&f),
    }
}
