//! Batch front-end: parses systems, runs counting, bound, and verification
//! campaigns, and writes CSV or JSON reports.

mod checks;
mod report;

use std::fs;
use std::path::{Path, PathBuf};

use fewcurve::intersect::{CurveSystem, IntersectError};
use fewcurve::poly::{parse_rational, parse_terms, DenseBiPoly, PolyError, Rational, SparseBiPoly};
use num_traits::Signed;

pub use report::{Report, SCHEMA_VERSION};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Mode {
    /// Count real solutions of one system (`--f`, `--g`) or of `--n` random ones.
    Count,
    /// Tabulate every bound over `1..=dmax` by `1..=tmax`.
    Bounds,
    /// Compare the pipeline against the oracle and check the structural bounds.
    Verify,
    /// Implicit derivatives against finite differences on traced branches.
    Derivcheck,
    /// Factored Wronskian against the determinant.
    Wronskcheck,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub mode: Mode,
    pub seed: u64,
    pub d_max: usize,
    pub t_max: usize,
    pub coeff_max: i64,
    pub n_instances: usize,
    pub tolerance: Rational,
    pub out: Option<PathBuf>,
    pub format: Format,
    pub f_path: Option<PathBuf>,
    pub g_path: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            mode: Mode::Verify,
            seed: 0,
            d_max: 4,
            t_max: 5,
            coeff_max: 5,
            n_instances: 100,
            tolerance: Rational::new(1.into(), 1_000_000.into()),
            out: None,
            format: Format::Csv,
            f_path: None,
            g_path: None,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("parse error in {path}: {source}")]
    Parse { path: String, source: PolyError },
    #[error("exponent budget exceeded: {0}")]
    Budget(PolyError),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Intersect(IntersectError),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("report serialization failed: {0}")]
    Serialize(String),
}

impl From<IntersectError> for CliError {
    fn from(e: IntersectError) -> Self {
        match e {
            IntersectError::Poly(p @ PolyError::ExponentBudgetExceeded { .. }) => CliError::Budget(p),
            e => CliError::Intersect(e),
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        if self.d_max < 1 {
            return Err(CliError::Config("dmax must be at least 1".into()));
        }
        if self.t_max < 1 {
            return Err(CliError::Config("tmax must be at least 1".into()));
        }
        if self.coeff_max < 1 {
            return Err(CliError::Config("coeff must be at least 1".into()));
        }
        if self.n_instances < 1 {
            return Err(CliError::Config("n must be at least 1".into()));
        }
        if !self.tolerance.is_positive() {
            return Err(CliError::Config("tol must be positive".into()));
        }
        if self.f_path.is_some() != self.g_path.is_some() {
            return Err(CliError::Config("--f and --g must be given together".into()));
        }
        Ok(())
    }
}

/// Tolerance as `p/q`, an integer, or a decimal such as `1e-6`.
pub fn parse_tolerance(s: &str) -> Result<Rational, String> {
    if let Some(r) = parse_rational(s) {
        return Ok(r);
    }
    let v: f64 = s.parse().map_err(|_| format!("bad tolerance `{s}`"))?;
    Rational::from_float(v).ok_or_else(|| format!("bad tolerance `{s}`"))
}

/// Terms in the file format; `;` also separates terms so that report
/// instances can be pasted back as files.
fn read_terms(path: &Path) -> Result<Vec<(Rational, u64, u64)>, CliError> {
    let text = fs::read_to_string(path)?;
    parse_terms(&text.replace(';', "\n"))
        .map_err(|source| CliError::Parse { path: path.display().to_string(), source })
}

/// Largest exponent accepted in the dense file.
pub const DENSE_EXPONENT_LIMIT: u64 = 4096;

pub fn parse_system(f_path: &Path, g_path: &Path) -> Result<CurveSystem, CliError> {
    let f_terms = read_terms(f_path)?;
    let g_terms = read_terms(g_path)?;
    let mut dense = Vec::with_capacity(f_terms.len());
    for (c, a, b) in f_terms {
        let e = a.max(b);
        if e > DENSE_EXPONENT_LIMIT {
            return Err(CliError::Budget(PolyError::ExponentBudgetExceeded {
                exponent: e,
                budget: DENSE_EXPONENT_LIMIT,
            }));
        }
        dense.push((c, a as usize, b as usize));
    }
    let f = DenseBiPoly::from_terms(&dense);
    let g = SparseBiPoly::new(g_terms).map_err(|e| match e {
        PolyError::ExponentBudgetExceeded { .. } => CliError::Budget(e),
        source => CliError::Parse { path: g_path.display().to_string(), source },
    })?;
    Ok(CurveSystem::new(f, g)?)
}

/// Instance text: the file format with `;` between terms.
pub fn encode_dense(f: &DenseBiPoly) -> String {
    f.terms().iter().map(|(c, a, b)| format!("{c} {a} {b}")).collect::<Vec<_>>().join(";")
}

pub fn encode_sparse(g: &SparseBiPoly) -> String {
    g.terms().iter().map(|(c, a, b)| format!("{c} {a} {b}")).collect::<Vec<_>>().join(";")
}

/// Builds the report for `cfg` and writes it to `cfg.out` (stdout if unset).
pub fn run(cfg: &RunConfig) -> Result<Report, CliError> {
    cfg.validate()?;
    let report = match cfg.mode {
        Mode::Count => checks::count(cfg)?,
        Mode::Bounds => checks::bounds(cfg)?,
        Mode::Verify => checks::verify(cfg)?,
        Mode::Derivcheck => checks::derivcheck(cfg)?,
        Mode::Wronskcheck => checks::wronskcheck(cfg)?,
    };
    let text = match cfg.format {
        Format::Csv => report.to_csv()?,
        Format::Json => report.to_json()?,
    };
    match &cfg.out {
        Some(p) => fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(report)
}
