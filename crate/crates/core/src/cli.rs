//! Command-line front end shared by the `walkers-return` binary and tests.
//!
//! Exit codes: `0` success, `1` a comparison or verification failed, `2`
//! usage or domain error.

use std::path::PathBuf;

use clap::{Args, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::crw::{simulate_return_crw, CRWInitialState, TransitionMatrix};
use crate::error::Error;
use crate::genfunc::{closed_series, compare_gf};
use crate::quadrature::QuadratureSpec;
use crate::qw::{simulate_return, AmplitudeField, CoinMatrix, QWInitialState};
use crate::series::{Model, ReturnSeries};
use crate::table::{Meta, Table};
use crate::verify::{self, Suite};

pub const TOL_ENV: &str = "WALKERS_RETURN_TOL";
pub const MAX_DIST_STEPS: usize = 100_000;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelTag {
    Qw,
    Hadamard,
    Crw,
    Rw,
    Polya2d,
    Polya3d,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq, Args)]
pub struct RunConfig {
    #[arg(long, value_enum)]
    pub model: ModelTag,
    /// |alpha|^2 of the quantum-walk coin
    #[arg(long = "alpha-sq")]
    pub alpha_sq: Option<f64>,
    /// P(left | last step left)
    #[arg(long)]
    pub a: Option<f64>,
    /// P(left | last step right); must equal 1 - d when given
    #[arg(long)]
    pub b: Option<f64>,
    /// P(right | last step right)
    #[arg(long)]
    pub d: Option<f64>,
    /// initial weight of "previous step was left"
    #[arg(long)]
    pub phi1: Option<f64>,
    /// step-left probability of the uncorrelated walk
    #[arg(long)]
    pub p: Option<f64>,
    #[arg(long, default_value_t = 20)]
    pub nmax: usize,
    #[arg(long = "z-start", default_value_t = 0.0, allow_negative_numbers = true)]
    pub z_start: f64,
    #[arg(long = "z-stop", default_value_t = 0.8, allow_negative_numbers = true)]
    pub z_stop: f64,
    #[arg(long = "z-count", default_value_t = 5)]
    pub z_count: usize,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// overrides the default tolerance (also settable through WALKERS_RETURN_TOL)
    #[arg(long)]
    pub tol: Option<f64>,
    /// emit two plain whitespace-separated columns instead of CSV/JSON
    #[arg(long)]
    pub gnuplot: bool,
}

impl RunConfig {
    pub fn new(model: ModelTag) -> Self {
        Self {
            model,
            alpha_sq: None,
            a: None,
            b: None,
            d: None,
            phi1: None,
            p: None,
            nmax: 20,
            z_start: 0.0,
            z_stop: 0.8,
            z_count: 5,
            format: Format::Csv,
            out: None,
            tol: None,
            gnuplot: false,
        }
    }

    /// `--tol`, else `WALKERS_RETURN_TOL`, else `default`.
    pub fn tolerance(&self, default: f64) -> Result<f64, CliError> {
        let tol = match self.tol {
            Some(t) => t,
            None => match std::env::var(TOL_ENV) {
                Ok(v) => v
                    .parse()
                    .map_err(|_| CliError::Usage(format!("{TOL_ENV}={v} is not a number")))?,
                Err(_) => default,
            },
        };
        if tol > 0.0 && tol.is_finite() {
            Ok(tol)
        } else {
            Err(CliError::Usage(format!("tolerance {tol} must be positive")))
        }
    }

    /// Validated model parameters.
    pub fn resolve_model(&self) -> Result<Model, CliError> {
        let need = |v: Option<f64>, flag: &str| {
            v.ok_or_else(|| CliError::Usage(format!("--model {:?} requires --{flag}", self.model).to_lowercase()))
        };
        let model = match self.model {
            ModelTag::Qw => {
                let alpha_sq = need(self.alpha_sq, "alpha-sq")?;
                CoinMatrix::from_alpha_sq(alpha_sq).map_err(CliError::invalid)?;
                Model::Qw { alpha_sq }
            }
            ModelTag::Hadamard => Model::Hadamard,
            ModelTag::Crw => {
                let t = TransitionMatrix::new(need(self.a, "a")?, need(self.d, "d")?)
                    .map_err(CliError::invalid)?;
                if let Some(b) = self.b {
                    if (b - t.b()).abs() > 1e-12 {
                        return Err(CliError::Usage(format!(
                            "column sum b + d = {} must equal 1",
                            b + t.d()
                        )));
                    }
                }
                let phi = CRWInitialState::new(self.phi1.unwrap_or(0.5)).map_err(CliError::invalid)?;
                Model::Crw {
                    a: t.a(),
                    b: t.b(),
                    d: t.d(),
                    phi1: phi.phi1(),
                }
            }
            ModelTag::Rw => {
                let p = self.p.unwrap_or(0.5);
                TransitionMatrix::random_walk(p).map_err(CliError::invalid)?;
                Model::Rw { p }
            }
            ModelTag::Polya2d => Model::Polya2d,
            ModelTag::Polya3d => {
                return Err(CliError::Usage(
                    "polya3d has no return series; its constants are reported by `verify genfunc`".into(),
                ))
            }
        };
        Ok(model)
    }

    pub fn z_grid(&self) -> Result<Vec<f64>, CliError> {
        if self.z_count == 0 {
            return Err(CliError::Usage("--z-count must be at least 1".into()));
        }
        let grid: Vec<f64> = if self.z_count == 1 {
            vec![self.z_start]
        } else {
            let step = (self.z_stop - self.z_start) / (self.z_count - 1) as f64;
            (0..self.z_count).map(|i| self.z_start + step * i as f64).collect()
        };
        if let Some(z) = grid.iter().find(|z| z.is_nan() || z.abs() >= 1.0) {
            return Err(CliError::Usage(format!("z = {z} must lie strictly inside (-1, 1)")));
        }
        Ok(grid)
    }
}

#[derive(Debug, Clone, PartialEq, Subcommand)]
pub enum Command {
    /// Tabulate r_n by closed form and by simulation
    Return(RunConfig),
    /// Compare the closed-form generating function with its power series
    Genfunc(RunConfig),
    /// Position distribution at time nmax
    Dist(RunConfig),
    /// Run the cross-check suites
    Verify {
        #[arg(default_value = "all")]
        suite: Suite,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Model(#[from] Error),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    fn invalid(e: Error) -> Self {
        CliError::Usage(e.to_string())
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Model(Error::Convergence { .. }) => EXIT_FAILED,
            _ => EXIT_USAGE,
        }
    }
}

/// A finished command: rendered text plus whether every comparison held.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub text: String,
    pub passed: bool,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        if self.passed {
            EXIT_OK
        } else {
            EXIT_FAILED
        }
    }
}

/// Runs one subcommand and renders its output (without writing it).
pub fn execute(cmd: &Command) -> Result<Outcome, CliError> {
    match cmd {
        Command::Return(cfg) => cmd_return(cfg).map(|r| r.render(cfg, ("n", "r_closed"))),
        Command::Genfunc(cfg) => cmd_genfunc(cfg).map(|r| r.render(cfg, ("z", "gf_closed"))),
        Command::Dist(cfg) => cmd_dist(cfg).map(|r| r.render(cfg, ("x", "probability"))),
        Command::Verify { suite } => {
            let report = cmd_verify(*suite)?;
            Ok(Outcome {
                text: format!("{report}\n"),
                passed: report.passed(),
            })
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TableResult {
    pub table: Table,
    pub meta: Meta,
    pub passed: bool,
}

impl TableResult {
    fn render(self, cfg: &RunConfig, plot: (&str, &str)) -> Outcome {
        let text = if cfg.gnuplot {
            self.table
                .to_gnuplot(plot.0, plot.1)
                .expect("plot columns exist in every command table")
        } else {
            match cfg.format {
                Format::Csv => self.table.to_csv(),
                Format::Json => self.table.to_json(&self.meta) + "\n",
            }
        };
        Outcome {
            text,
            passed: self.passed,
        }
    }
}

fn meta(command: &str, model: &Model, tolerances: Value) -> Meta {
    Meta {
        command: command.into(),
        model: serde_json::to_value(model).expect("models serialise"),
        tolerances,
        tool_version: env!("CARGO_PKG_VERSION"),
    }
}

fn simulated_series(model: &Model, nmax: usize) -> Result<ReturnSeries, CliError> {
    Ok(match *model {
        Model::Qw { alpha_sq } => simulate_return(
            &CoinMatrix::from_alpha_sq(alpha_sq)?,
            &QWInitialState::symmetric(),
            nmax,
        ),
        Model::Hadamard => simulate_return(&CoinMatrix::hadamard(), &QWInitialState::symmetric(), nmax),
        Model::Crw { a, d, phi1, .. } => {
            simulate_return_crw(&TransitionMatrix::new(a, d)?, &CRWInitialState::new(phi1)?, nmax)
        }
        Model::Rw { p } => simulate_return_crw(
            &TransitionMatrix::random_walk(p)?,
            &CRWInitialState::new(0.5)?,
            nmax,
        ),
        Model::Polya2d => {
            // the planar walk, rotated by 45°, is a pair of independent
            // symmetric walks on the diagonals
            let one_d = simulate_return_crw(
                &TransitionMatrix::random_walk(0.5)?,
                &CRWInitialState::new(0.5)?,
                nmax,
            );
            ReturnSeries::new(*model, one_d.values.iter().map(|r| r * r).collect())
        }
    })
}

/// Rows `n, r_closed, r_simulated, abs_err` for `n = 0..=nmax`.
pub fn cmd_return(cfg: &RunConfig) -> Result<TableResult, CliError> {
    let model = cfg.resolve_model()?;
    let default_tol = match model {
        Model::Qw { .. } | Model::Hadamard => 1e-10,
        _ => 1e-12,
    };
    let tol = cfg.tolerance(default_tol)?;
    let closed = closed_series(&model, cfg.nmax)?;
    let simulated = simulated_series(&model, cfg.nmax)?;
    let mut table = Table::new(["n", "r_closed", "r_simulated", "abs_err"]);
    let mut passed = true;
    for (n, (c, s)) in closed.values.iter().zip(&simulated.values).enumerate() {
        let err = (c - s).abs();
        passed &= err <= tol;
        table.push(vec![n as f64, *c, *s, err]);
    }
    Ok(TableResult {
        table,
        meta: meta("return", &model, json!({ "abs_err": tol })),
        passed,
    })
}

/// Rows `z, gf_closed, gf_series, abs_err, tail_bound` over the z-grid.
pub fn cmd_genfunc(cfg: &RunConfig) -> Result<TableResult, CliError> {
    let model = cfg.resolve_model()?;
    let tol = cfg.tolerance(1e-6)?;
    let spec = QuadratureSpec::default();
    let mut table = Table::new(["z", "gf_closed", "gf_series", "abs_err", "tail_bound"]);
    let mut passed = true;
    for z in cfg.z_grid()? {
        let ev = compare_gf(&model, z, tol, &spec)?;
        passed &= ev.passes(tol);
        table.push(vec![z, ev.closed_value, ev.series_value, ev.abs_err(), ev.tail_bound]);
    }
    Ok(TableResult {
        table,
        meta: meta(
            "genfunc",
            &model,
            json!({ "series": tol, "quadrature": spec.abs_tol }),
        ),
        passed,
    })
}

/// Rows `x, probability` at time `nmax`.
pub fn cmd_dist(cfg: &RunConfig) -> Result<TableResult, CliError> {
    let model = cfg.resolve_model()?;
    if cfg.nmax > MAX_DIST_STEPS {
        return Err(CliError::Usage(format!("--nmax {} exceeds {MAX_DIST_STEPS}", cfg.nmax)));
    }
    let tol = cfg.tolerance(1e-9)?;
    let dist = match model {
        Model::Qw { .. } | Model::Hadamard => {
            let coin = match model {
                Model::Qw { alpha_sq } => CoinMatrix::from_alpha_sq(alpha_sq)?,
                _ => CoinMatrix::hadamard(),
            };
            let mut f = AmplitudeField::new(&QWInitialState::symmetric());
            for _ in 0..cfg.nmax {
                f.advance(&coin);
            }
            f.distribution()
        }
        Model::Crw { .. } | Model::Rw { .. } => {
            let (t, phi) = match model {
                Model::Crw { a, d, phi1, .. } => (TransitionMatrix::new(a, d)?, CRWInitialState::new(phi1)?),
                Model::Rw { p } => (TransitionMatrix::random_walk(p)?, CRWInitialState::new(0.5)?),
                _ => unreachable!(),
            };
            let mut f = crate::crw::ProbabilityField::new(&phi);
            for _ in 0..cfg.nmax {
                f.advance(&t);
            }
            f.distribution()
        }
        Model::Polya2d => {
            return Err(CliError::Usage("dist supports the one-dimensional models only".into()))
        }
    };
    let mut table = Table::new(["x", "probability"]);
    let mut total = 0.0;
    for (x, p) in dist {
        total += p;
        table.push(vec![x as f64, p]);
    }
    Ok(TableResult {
        table,
        meta: meta("dist", &model, json!({ "total_mass": tol })),
        passed: (total - 1.0).abs() <= tol,
    })
}

pub fn cmd_verify(suite: Suite) -> Result<verify::Report, CliError> {
    Ok(verify::run(suite)?)
}
