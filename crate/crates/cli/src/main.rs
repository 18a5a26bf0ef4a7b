//! Command-line front end: quadratic embedding constants for files and
//! generators, the verification suites, path-graph tables, and the
//! (s,t)-plane psd region as CSV/SVG.
//!
//! Exit codes: 0 success, 1 usage error, 2 computation failure.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use qeclab_core::graphs::{parse_edge_list, parse_graph_spec, path_graph, Graph};
use qeclab_core::matrices::{
    build_a, det_a_exact, is_psd_a, region_sample, PsdMethod, RegionConfig,
};
use qeclab_core::numerics::det::lu_det;
use qeclab_core::numerics::eigen::{default_psd_tol, psd_check, sym_eigen};
use qeclab_core::numerics::rational::{parse_rational, to_f64, Rational};
use qeclab_core::polynomials::{s_poly, s_roots_special, SParams, SpecialCase};
use qeclab_core::qec::{qec_report, QecReport};
use qeclab_core::textfmt::format_significant;
use qeclab_core::verify::{run_all, seed_from_env, VerifyOptions};

#[derive(Parser)]
#[command(
    name = "qeclab",
    version,
    about = "Quadratic embedding constants of graphs, with the S_n(a,b;t)/A_n(s,t) machinery"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RegionFormat {
    Csv,
    Svg,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Quadratic embedding constant of a graph (edge-list file or
    /// generator spec path:N | cycle:N | complete:N | star:N)
    Qec {
        /// Edge-list file path, or a generator spec containing ':'
        input: String,
        /// Override the psd-bisection tolerance
        #[arg(long)]
        tol: Option<f64>,
        /// Write output here instead of stdout (atomic)
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,
    },
    /// CSV table of path-graph constants for n in [n_min, n_max]
    Table {
        n_min: usize,
        n_max: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sample the (s,t) psd region and emit CSV and/or SVG files
    Region {
        /// Grid spec smin,smax,tmin,tmax,steps (steps applies to both axes)
        #[arg(long, allow_hyphen_values = true)]
        grid: Option<String>,
        /// Finite sizes to overlay, comma-separated
        #[arg(long)]
        ns: Option<String>,
        /// Output base path; .csv/.svg extensions are appended
        #[arg(long, default_value = "region")]
        out: PathBuf,
        #[arg(long, value_enum, default_value = "both")]
        format: RegionFormat,
    },
    /// Run the verification suites up to the given size
    Verify {
        #[arg(default_value_t = 8)]
        n_max: usize,
        /// Replace the pass tolerance of the inexact suites
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Print and evaluate members of the polynomial family
    Poly {
        #[arg(long)]
        n: usize,
        /// Parameter a as integer, p/q or decimal
        #[arg(long, default_value = "2", allow_hyphen_values = true)]
        a: String,
        /// Parameter b as integer, p/q or decimal
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        b: String,
        /// Evaluation points (exact rationals); repeatable
        #[arg(long, allow_hyphen_values = true)]
        eval: Vec<String>,
        /// Print the closed-form roots (special (a,b) cases only)
        #[arg(long)]
        roots: bool,
    },
    /// Determinant and psd verdicts of one matrix family member
    Matrix {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        s: String,
        #[arg(long, allow_hyphen_values = true)]
        t: String,
        /// Override the eigen psd tolerance
        #[arg(long)]
        tol: Option<f64>,
    },
}

enum CliError {
    Usage(String),
    Compute(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Compute(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Compute(m) => m,
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn compute(err: impl std::fmt::Display) -> CliError {
    CliError::Compute(err.to_string())
}

/// Writes through a temp file in the same directory, then renames, so a
/// partially written output never lands at the destination path.
fn write_atomic(path: &Path, content: &str) -> Result<(), CliError> {
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    let tmp = PathBuf::from(tmp);
    std::fs::write(&tmp, content)
        .map_err(|e| CliError::Compute(format!("cannot write {}: {e}", tmp.display())))?;
    std::fs::rename(&tmp, path)
        .map_err(|e| CliError::Compute(format!("cannot rename to {}: {e}", path.display())))?;
    Ok(())
}

fn emit(out: Option<&Path>, content: &str) -> Result<(), CliError> {
    match out {
        Some(path) => write_atomic(path, content),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn load_graph(input: &str) -> Result<(String, Graph), CliError> {
    if input.contains(':') {
        let g = parse_graph_spec(input).map_err(|e| usage(e.to_string()))?;
        return Ok((input.to_string(), g));
    }
    let text =
        std::fs::read_to_string(input).map_err(|e| usage(format!("cannot read {input}: {e}")))?;
    let g = parse_edge_list(&text).map_err(compute)?;
    Ok((input.to_string(), g))
}

fn cmd_qec(
    input: &str,
    tol: Option<f64>,
    out: Option<&Path>,
    format: ReportFormat,
) -> Result<(), CliError> {
    if let Some(t) = tol {
        if t <= 0.0 {
            return Err(usage("--tol must be positive"));
        }
    }
    let (id, g) = load_graph(input)?;
    let report = qec_report(&id, &g).map_err(compute)?;
    let rendered = match format {
        ReportFormat::Text => report.to_text(),
        ReportFormat::Csv => format!("{}\n{}\n", QecReport::CSV_HEADER, report.csv_row()),
    };
    emit(out, &rendered)
}

fn cmd_table(n_min: usize, n_max: usize, out: Option<&Path>) -> Result<(), CliError> {
    if n_min < 2 || n_min > n_max {
        return Err(usage("table needs 2 <= n_min <= n_max"));
    }
    let mut csv = String::from(QecReport::CSV_HEADER);
    csv.push('\n');
    for n in n_min..=n_max {
        let report = qec_report(&format!("path:{n}"), &path_graph(n)).map_err(compute)?;
        csv.push_str(&report.csv_row());
        csv.push('\n');
    }
    emit(out, &csv)
}

fn parse_grid(spec: &str) -> Result<RegionConfig, CliError> {
    let parts: Vec<&str> = spec.split(',').map(str::trim).collect();
    if parts.len() != 5 {
        return Err(usage("--grid expects smin,smax,tmin,tmax,steps"));
    }
    let num = |s: &str| -> Result<f64, CliError> {
        s.parse()
            .map_err(|_| usage(format!("bad grid number {s:?}")))
    };
    let steps: usize = parts[4]
        .parse()
        .map_err(|_| usage(format!("bad step count {:?}", parts[4])))?;
    Ok(RegionConfig {
        s_min: num(parts[0])?,
        s_max: num(parts[1])?,
        t_min: num(parts[2])?,
        t_max: num(parts[3])?,
        s_steps: steps,
        t_steps: steps,
        ..RegionConfig::default()
    })
}

fn cmd_region(
    grid: Option<&str>,
    ns: Option<&str>,
    out: &Path,
    format: RegionFormat,
) -> Result<(), CliError> {
    let mut cfg = match grid {
        Some(spec) => parse_grid(spec)?,
        None => RegionConfig::default(),
    };
    if let Some(list) = ns {
        cfg.n_list = list
            .split(',')
            .map(|v| {
                v.trim()
                    .parse::<usize>()
                    .map_err(|_| usage(format!("bad n {v:?}")))
            })
            .collect::<Result<_, _>>()?;
    }
    let grid = region_sample(&cfg).map_err(compute)?;
    let mut written = Vec::new();
    if format != RegionFormat::Svg {
        let path = out.with_extension("csv");
        write_atomic(&path, &grid.to_csv())?;
        written.push(path);
    }
    if format != RegionFormat::Csv {
        let path = out.with_extension("svg");
        write_atomic(&path, &grid.to_svg())?;
        written.push(path);
    }
    println!(
        "region: {} x {} cells, n_list {:?}",
        grid.s_values.len(),
        grid.t_values.len(),
        grid.n_list
    );
    for p in written {
        println!("wrote {}", p.display());
    }
    Ok(())
}

fn cmd_verify(n_max: usize, tol: Option<f64>) -> Result<(), CliError> {
    if n_max < 2 {
        return Err(usage("verify needs n_max >= 2"));
    }
    let opts = VerifyOptions {
        n_max,
        seed: seed_from_env(),
        tol_override: tol,
    };
    let results = run_all(&opts);
    let mut failed = 0usize;
    println!(
        "{:<28} {:>13} {:>10} result",
        "suite", "max deviation", "tolerance"
    );
    for r in &results {
        let status = if r.pass { "PASS" } else { "FAIL" };
        println!(
            "{:<28} {:>13} {:>10} {status}",
            r.name,
            format_significant(r.max_deviation, 4),
            format_significant(r.tolerance, 3)
        );
        if !r.pass {
            failed += 1;
            println!("    identity: {}", r.identity);
            if let Some(d) = &r.detail {
                println!("    detail:   {d}");
            }
        }
    }
    println!(
        "{} of {} suites passed (n_max={n_max}, seed={})",
        results.len() - failed,
        results.len(),
        opts.seed
    );
    if failed > 0 {
        return Err(CliError::Compute(format!("{failed} suite(s) failed")));
    }
    Ok(())
}

fn special_case_for(a: &Rational, b: &Rational) -> Option<SpecialCase> {
    SpecialCase::ALL.into_iter().find(|c| {
        let p = c.params(1);
        p.a == *a && p.b == *b
    })
}

fn cmd_poly(n: usize, a: &str, b: &str, eval: &[String], roots: bool) -> Result<(), CliError> {
    let a = parse_rational(a).map_err(|e| usage(e.to_string()))?;
    let b = parse_rational(b).map_err(|e| usage(e.to_string()))?;
    let params = SParams::new(a.clone(), b.clone(), n);
    let poly = s_poly(&params);

    let mut out = String::new();
    let _ = writeln!(out, "S_{n}(a={a}, b={b}; t)");
    let degree = poly
        .degree()
        .map_or("-inf (zero polynomial)".to_string(), |d| d.to_string());
    let _ = writeln!(out, "degree: {degree}");
    let coeffs: Vec<String> = poly.coeffs().iter().map(|c| c.to_string()).collect();
    let _ = writeln!(out, "coefficients (t^0 ..): [{}]", coeffs.join(", "));

    for point in eval {
        let t = parse_rational(point).map_err(|e| usage(e.to_string()))?;
        let value = poly.eval(&t);
        let _ = writeln!(
            out,
            "value at t={t}: {value} ({})",
            format_significant(to_f64(&value), 12)
        );
    }

    if roots {
        let Some(case) = special_case_for(&a, &b) else {
            return Err(usage(
                "closed-form roots exist only for (a,b) in {(2,1), (1,1/2), (1,1), (3,1)}",
            ));
        };
        if n == 0 {
            return Err(usage("roots need n >= 1"));
        }
        let rs = s_roots_special(case, n);
        let _ = writeln!(out, "roots (ascending):");
        for r in rs {
            let residual = to_f64(
                &poly.eval(&qeclab_core::numerics::rational::from_f64(r).expect("finite root")),
            );
            let _ = writeln!(
                out,
                "  {}  residual {}",
                format_significant(r, 12),
                format_significant(residual, 3)
            );
        }
    }
    print!("{out}");
    Ok(())
}

fn cmd_matrix(n: usize, s: &str, t: &str, tol: Option<f64>) -> Result<(), CliError> {
    if n == 0 {
        return Err(usage("matrix needs n >= 1"));
    }
    let s = parse_rational(s).map_err(|e| usage(e.to_string()))?;
    let t = parse_rational(t).map_err(|e| usage(e.to_string()))?;
    let (sf, tf) = (to_f64(&s), to_f64(&t));

    let exact = det_a_exact(n, &s, &t);
    let m = build_a(n, &s, &t);
    let lu = lu_det(&m.map(to_f64));
    println!("A_{n}(s={s}, t={t})");
    println!("det (exact, polynomial route): {exact}");
    println!(
        "det (float, elimination):      {}",
        format_significant(lu, 12)
    );
    let crit = is_psd_a(n, sf, tf, PsdMethod::Criterion).map_err(compute)?;
    println!("psd (criterion): {crit}");
    let mf = m.map(to_f64);
    let eigen_tol = tol.unwrap_or_else(|| default_psd_tol(&mf));
    if eigen_tol < 0.0 {
        return Err(usage("--tol must be nonnegative"));
    }
    let eig = psd_check(&mf, eigen_tol).map_err(compute)?;
    println!(
        "psd (eigen, tol {}): {eig}",
        format_significant(eigen_tol, 3)
    );
    let min_eig = sym_eigen(&mf).map_err(compute)?.min();
    println!("min eigenvalue: {}", format_significant(min_eig, 12));
    if crit != eig {
        println!("note: verdicts differ inside the boundary band; eigen verdict governs");
    }
    Ok(())
}

fn run(cmd: Command) -> Result<(), CliError> {
    match cmd {
        Command::Qec {
            input,
            tol,
            out,
            format,
        } => cmd_qec(&input, tol, out.as_deref(), format),
        Command::Table { n_min, n_max, out } => cmd_table(n_min, n_max, out.as_deref()),
        Command::Region {
            grid,
            ns,
            out,
            format,
        } => cmd_region(grid.as_deref(), ns.as_deref(), &out, format),
        Command::Verify { n_max, tol } => cmd_verify(n_max, tol),
        Command::Poly {
            n,
            a,
            b,
            eval,
            roots,
        } => cmd_poly(n, &a, &b, &eval, roots),
        Command::Matrix { n, s, t, tol } => cmd_matrix(n, &s, &t, tol),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}
