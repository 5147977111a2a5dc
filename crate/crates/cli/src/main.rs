use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use fewcurve_cli::{parse_tolerance, run, Format, Mode, RunConfig};

#[derive(Parser)]
#[command(name = "fewcurve", version, about = "Real intersections of a dense curve with a sparse curve")]
struct Args {
    #[arg(long, value_enum, default_value = "verify")]
    mode: Mode,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 4)]
    dmax: usize,
    #[arg(long, default_value_t = 5)]
    tmax: usize,
    /// Coefficients are drawn from [-coeff, coeff].
    #[arg(long, default_value_t = 5)]
    coeff: i64,
    #[arg(long, default_value_t = 100)]
    n: usize,
    /// Relative tolerance for finite differences: `p/q` or a decimal.
    #[arg(long, default_value = "1/1000000", value_parser = parse_tolerance)]
    tol: fewcurve::poly::Rational,
    /// Report file; stdout if omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    /// Dense polynomial file, one `<coeff> <alpha> <beta>` term per line.
    #[arg(long)]
    f: Option<PathBuf>,
    /// Sparse polynomial file in the same format.
    #[arg(long)]
    g: Option<PathBuf>,
}

fn main() -> ExitCode {
    let a = Args::parse();
    let cfg = RunConfig {
        mode: a.mode,
        seed: a.seed,
        d_max: a.dmax,
        t_max: a.tmax,
        coeff_max: a.coeff,
        n_instances: a.n,
        tolerance: a.tol,
        out: a.out,
        format: a.format,
        f_path: a.f,
        g_path: a.g,
    };
    match run(&cfg) {
        Ok(report) if report.failures() == 0 => ExitCode::SUCCESS,
        Ok(report) => {
            eprintln!("{} of {} rows failed", report.failures(), report.rows.len());
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
