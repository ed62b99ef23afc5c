//! Command line: evaluation, zero tables, Rayleigh sums, zero bounds, claim
//! verification, Figure 1 data and the full report.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use crate::error::{domain, Error, Result};
use crate::fmt::num;
use crate::lab::{run_suite, verify, GridSpec};
use crate::rayleigh::{self, BoundTarget, Method, RayleighFamily};
use crate::report::{ClaimId, SUMMARY_HEADER};
use crate::special::{bessel_i_ratio, bessel_j_pair, derivative, evaluate, FunctionId, Order, SeriesConfig};
use crate::zeros::{ZeroFinder, ZeroKind, DEFAULT_TOL};

/// Largest number of rows figure1 will write.
pub const MAX_FIGURE_ROWS: usize = 10_000_000;
/// Relative size of |J_nu| below which figure1 leaves f_nu empty.
pub const POLE_MASK: f64 = 1e-12;

#[derive(Parser, Debug)]
#[command(name = "dini", version, about = "Dini functions, Bessel cross-products and their zeros")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Value or derivative of one function family.
    #[command(allow_negative_numbers = true)]
    Eval {
        #[arg(long = "fn")]
        function: FunctionId,
        #[arg(long)]
        nu: f64,
        #[arg(long)]
        x: f64,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=2))]
        deriv: Option<u32>,
    },
    /// Table of positive zeros as CSV.
    #[command(allow_negative_numbers = true)]
    Zeros {
        #[arg(long = "fn")]
        function: ZeroKind,
        #[arg(long)]
        nu: f64,
        #[arg(long)]
        count: usize,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Rayleigh sums of orders 1..=max-order as CSV.
    #[command(allow_negative_numbers = true)]
    Rayleigh {
        #[arg(long)]
        family: RayleighFamily,
        #[arg(long)]
        nu: f64,
        #[arg(long)]
        max_order: usize,
        #[arg(long, default_value = "recursion")]
        method: Method,
    },
    /// Euler-Rayleigh bounds on a power of the smallest zero.
    #[command(allow_negative_numbers = true)]
    Bounds {
        #[arg(long)]
        target: BoundTarget,
        #[arg(long)]
        nu: f64,
        #[arg(long)]
        order: usize,
    },
    /// Check one claim over a grid and print its report.
    #[command(allow_negative_numbers = true)]
    Verify {
        #[arg(long)]
        claim: ClaimId,
        #[arg(long, conflicts_with = "nu_grid")]
        nu: Option<f64>,
        #[arg(long, value_delimiter = ',')]
        nu_grid: Option<Vec<f64>>,
        #[arg(long, value_delimiter = ',')]
        grid_frac: Option<Vec<f64>>,
        #[arg(long)]
        count: Option<usize>,
    },
    /// x J'/J and x I'/I on a uniform grid, written as CSV.
    #[command(allow_negative_numbers = true)]
    Figure1 {
        #[arg(long)]
        nu: f64,
        #[arg(long)]
        xmax: f64,
        #[arg(long)]
        step: f64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Every claim on its default grid; one JSON file per claim plus summary.csv.
    Report {
        #[arg(long)]
        out: PathBuf,
    },
}

/// Runs the command line with the process's standard streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = io::stdout();
    let stderr = io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

/// Runs the command line against the given streams and returns the exit code:
/// 0 on success, 1 when a checked claim has violations, 2 on usage or
/// domain errors.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let _ = write!(err, "{text}");
                    2
                }
            };
        }
    };
    match execute(cli.cmd, out) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(Failure::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

enum Failure {
    Lib(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn execute(cmd: Cmd, out: &mut dyn Write) -> std::result::Result<bool, Failure> {
    let cfg = SeriesConfig::default();
    match cmd {
        Cmd::Eval { function, nu, x, deriv } => {
            let nu = Order::new(nu)?;
            let r = match deriv {
                None => evaluate(function, nu, x, &cfg)?,
                Some(k) => derivative(function, nu, x, k, &cfg)?,
            };
            writeln!(out, "{}", num(r.value))?;
        }
        Cmd::Zeros { function, nu, count, tol } => {
            if count == 0 {
                return Err(Error::Domain("count must be at least 1".into()).into());
            }
            let t = ZeroFinder::shared(tol)?.table(function, Order::new(nu)?, count)?;
            t.prefix(count).write_csv(&mut *out)?;
        }
        Cmd::Rayleigh { family, nu, max_order, method } => {
            if max_order == 0 {
                return Err(Error::Domain("max-order must be at least 1".into()).into());
            }
            let nu = Order::new(nu)?;
            let rows = (1..=max_order)
                .map(|m| rayleigh::rayleigh(family, nu, m, method))
                .collect::<Result<Vec<_>>>()?;
            rayleigh::write_csv(&mut *out, &rows)?;
        }
        Cmd::Bounds { target, nu, order } => {
            let (lo, hi) = rayleigh::smallest_zero_bounds(target, Order::new(nu)?, order)?;
            writeln!(out, "target,nu,order,power,lower,upper")?;
            writeln!(
                out,
                "{},{},{},{},{},{}",
                target.tag(),
                num(nu),
                order,
                target.family().power(),
                num(lo),
                num(hi)
            )?;
        }
        Cmd::Verify { claim, nu, nu_grid, grid_frac, count } => {
            let mut g = GridSpec::default_for(claim)?;
            if let Some(v) = nu {
                g.nu_values = vec![v];
            }
            if let Some(v) = nu_grid {
                g.nu_values = v;
            }
            if let Some(f) = grid_frac {
                g.fractions = f;
            }
            if let Some(c) = count {
                g.count = c;
            }
            let r = verify(claim, &g)?;
            writeln!(out, "{}", r.to_json())?;
            return Ok(r.pass);
        }
        Cmd::Figure1 { nu, xmax, step, out: path } => {
            let csv = figure1_csv(nu, xmax, step)?;
            fs::write(&path, csv)?;
            writeln!(out, "{}", path.display())?;
        }
        Cmd::Report { out: dir } => {
            fs::create_dir_all(&dir)?;
            let mut summary = format!("{SUMMARY_HEADER}\n");
            let mut all = true;
            for (claim, r) in run_suite(&ClaimId::ALL) {
                let r = r?;
                fs::write(dir.join(format!("{claim}.json")), r.to_json() + "\n")?;
                summary.push_str(&r.summary_row());
                summary.push('\n');
                all &= r.pass;
            }
            fs::write(dir.join("summary.csv"), &summary)?;
            write!(out, "{summary}")?;
            return Ok(all);
        }
    }
    Ok(true)
}

/// CSV with columns x, f_nu = x J_nu'/J_nu and g_nu = x I_nu'/I_nu at
/// x = 0, step, 2 step, ... up to xmax. f_nu is left empty where J_nu
/// vanishes to within POLE_MASK of |J_nu| + |J_{nu+1}|.
pub fn figure1_csv(nu: f64, xmax: f64, step: f64) -> Result<String> {
    Order::new(nu)?;
    if !(step > 0.0) || !(xmax > 0.0) || !xmax.is_finite() {
        return domain("xmax and step must be positive");
    }
    let rows = (xmax / step).floor() as usize + 1;
    if rows > MAX_FIGURE_ROWS {
        return domain(format!("at most {MAX_FIGURE_ROWS} rows, asked for {rows}"));
    }
    let mut s = String::from("x,f_nu,g_nu\n");
    for i in 0..rows {
        let x = i as f64 * step;
        if x == 0.0 {
            s.push_str(&format!("0,{},{}\n", num(nu), num(nu)));
            continue;
        }
        let (j0, j1) = bessel_j_pair(nu, x);
        let g = nu + x * bessel_i_ratio(nu, x);
        let f = if j0.abs() < POLE_MASK * (j0.abs() + j1.abs()) {
            String::new()
        } else {
            num(nu - x * j1 / j0)
        };
        s.push_str(&format!("{},{},{}\n", num(x), f, num(g)));
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("dini").chain(args.iter().copied());
        let code = run_with(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn normalized_cross_product_is_one_at_origin() {
        let (code, out, _) = run_capture(&["eval", "--fn", "calW", "--nu", "0", "--x", "0"]);
        assert_eq!((code, out.as_str()), (0, "1\n"));
    }

    #[test]
    fn negative_orders_parse() {
        let (code, out, _) = run_capture(&["eval", "--fn", "J", "--nu", "-0.5", "--x", "1"]);
        assert_eq!(code, 0);
        let want = (2.0 / std::f64::consts::PI).sqrt() * 1f64.cos();
        assert!((out.trim().parse::<f64>().unwrap() - want).abs() < 1e-15);
    }

    #[test]
    fn usage_and_domain_errors_exit_2() {
        assert_eq!(run_capture(&["frobnicate"]).0, 2);
        assert_eq!(run_capture(&["eval", "--fn", "nope", "--nu", "0", "--x", "1"]).0, 2);
        let (code, _, err) = run_capture(&["eval", "--fn", "J", "--nu", "-1", "--x", "1"]);
        assert_eq!(code, 2);
        assert_eq!(err.lines().count(), 1);
        assert_eq!(run_capture(&["eval", "--fn", "J", "--nu", "0", "--x", "1", "--deriv", "3"]).0, 2);
    }

    #[test]
    fn help_exits_0() {
        let (code, out, _) = run_capture(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("figure1"));
    }

    #[test]
    fn figure1_masks_exact_zeros_of_j() {
        let csv = figure1_csv(0.5, std::f64::consts::PI, std::f64::consts::PI / 4.0).unwrap();
        let last = csv.lines().last().unwrap();
        let fields: Vec<&str> = last.split(',').collect();
        assert_eq!(fields[1], "");
        assert!(!fields[2].is_empty());
        assert_eq!(csv.lines().next(), Some("x,f_nu,g_nu"));
    }
}
