//! `genjacobi` command-line tool.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or validation error.

mod render;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use genjacobi::genjacobi::{coeff_q, coeff_r, coeff_s, Components};
use genjacobi::inner::gram_matrix;
use genjacobi::operators::{
    combined_weights, eigen_combined, eigen_lambda2, eigen_lfull, eigen_lhat, eigen_ltilde, expand_operator,
    OperatorKind,
};
use genjacobi::verify::{run_suite, GridConfig, Suite};
use genjacobi::{parse_rational, Params, Rational, Residual, VerifyReport};
use num_traits::{One, Signed};
use render::{csv_text, latex_escape, Cell, OutputFormat, Table};

#[derive(Parser)]
#[command(name = "genjacobi", version, about = "Exact generalized Jacobi polynomials and their differential operators")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print P_n^{alpha,beta,M,N} and its components P, Q, R, S.
    Poly {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
        format: OutputFormat,
    },
    /// Print the coefficient polynomials e_i(x) of a differential operator.
    Operator {
        /// One of L2, Ltilde, Lhat, Lfull, Combined (case-insensitive).
        #[arg(long, value_parser = parse_kind)]
        kind: OperatorKind,
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
        format: OutputFormat,
    },
    /// Print the eigenvalues of every operator for n = 0..=nmax.
    Eigen {
        #[arg(long, default_value_t = 12)]
        nmax: usize,
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
        format: OutputFormat,
    },
    /// Print the Gram matrix <P_n, P_m> for n, m = 0..=nmax.
    Gram {
        #[arg(long, default_value_t = 4)]
        nmax: usize,
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
        format: OutputFormat,
    },
    /// Run identity suites over a parameter grid.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct WeightArgs {
    #[arg(long, default_value = "0", allow_negative_numbers = true, value_parser = parse_exponent)]
    alpha: u32,
    #[arg(long, default_value = "0", allow_negative_numbers = true, value_parser = parse_exponent)]
    beta: u32,
    /// Mass at x = -1, as "p" or "p/q".
    #[arg(long = "bigm", value_name = "M", default_value = "0", allow_negative_numbers = true, value_parser = parse_mass)]
    mass_neg: Rational,
    /// Mass at x = +1, as "p" or "p/q".
    #[arg(long = "bign", value_name = "N", default_value = "0", allow_negative_numbers = true, value_parser = parse_mass)]
    mass_pos: Rational,
}

impl WeightArgs {
    fn params(&self) -> Result<Params, String> {
        Params::new(self.alpha, self.beta, self.mass_neg.clone(), self.mass_pos.clone()).map_err(|e| e.to_string())
    }
}

#[derive(Args)]
struct VerifyArgs {
    /// eigen, components, factorized, sixth-order, mixed, product-form, symmetry,
    /// orthogonality or all.
    #[arg(long, default_value = "all", value_parser = parse_suite)]
    suite: Suite,
    #[arg(long, default_value_t = 3, allow_negative_numbers = true, value_parser = parse_exponent)]
    alpha_max: u32,
    #[arg(long, default_value_t = 3, allow_negative_numbers = true, value_parser = parse_exponent)]
    beta_max: u32,
    #[arg(long, default_value_t = 12)]
    nmax: usize,
    /// Masses at x = -1 to sweep (repeatable); defaults to 0, 1/3, 1, 2.
    #[arg(long = "bigm", value_name = "M", allow_negative_numbers = true, value_parser = parse_mass)]
    masses_neg: Vec<Rational>,
    /// Masses at x = +1 to sweep (repeatable); defaults to 0, 1/3, 1, 2.
    #[arg(long = "bign", value_name = "N", allow_negative_numbers = true, value_parser = parse_mass)]
    masses_pos: Vec<Rational>,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Random polynomial pairs per parameter point in the symmetry suite.
    #[arg(long, default_value_t = 50)]
    trials: usize,
    /// Degree cap for random polynomials; defaults to 2*alpha+2*beta+8.
    #[arg(long)]
    degmax: Option<usize>,
    /// Harness self-test: corrupt y_n at the first eigen grid point.
    #[arg(long, hide = true)]
    inject_fault: Option<usize>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
    format: OutputFormat,
}

fn parse_exponent(s: &str) -> Result<u32, String> {
    let v: i64 = s.trim().parse().map_err(|_| format!("'{s}' is not an integer"))?;
    if v < 0 {
        return Err(format!("exponent must be an integer > -1, got {v}"));
    }
    u32::try_from(v).map_err(|_| format!("{v} is too large"))
}

fn parse_mass(s: &str) -> Result<Rational, String> {
    let r = parse_rational(s).map_err(|e| e.to_string())?;
    if r.is_negative() {
        return Err(format!("mass must be nonnegative, got {r}"));
    }
    Ok(r)
}

fn parse_kind(s: &str) -> Result<OperatorKind, String> {
    s.parse().map_err(|e: genjacobi::Error| e.to_string())
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: genjacobi::Error| e.to_string())
}

fn cmd_poly(n: usize, params: &Params) -> Table {
    let (a, b) = (params.alpha, params.beta);
    let comps = Components::new(n, a, b);
    let y = comps.combine(&params.mass_neg, &params.mass_pos);
    let mut t = Table::new(format!("P_{n}(x) = {y}"), &["component", "weight", "constant", "polynomial"])
        .meta("n", n)
        .meta("params", params);
    let opt = |r: genjacobi::Result<Rational>| r.map_or(Cell::Empty, Cell::Rat);
    let mn = &params.mass_neg * &params.mass_pos;
    t.row(vec![Cell::Text("y".into()), Cell::Empty, Cell::Empty, Cell::Poly(y)]);
    t.row(vec![Cell::Text("P".into()), Cell::Rat(Rational::one()), Cell::Empty, Cell::Poly(comps.p)]);
    t.row(vec![Cell::Text("Q".into()), Cell::Rat(params.mass_neg.clone()), opt(coeff_q(n, a, b)), Cell::Poly(comps.q)]);
    t.row(vec![Cell::Text("R".into()), Cell::Rat(params.mass_pos.clone()), opt(coeff_r(n, a, b)), Cell::Poly(comps.r)]);
    t.row(vec![Cell::Text("S".into()), Cell::Rat(mn), opt(coeff_s(n, a, b)), Cell::Poly(comps.s)]);
    t
}

fn cmd_operator(kind: OperatorKind, params: &Params) -> Result<Table, String> {
    let op = expand_operator(kind, params).map_err(|e| e.to_string())?;
    let mut t = Table::new(format!("{kind} = sum_i e_i(x) D^i"), &["i", "e_i(x)"])
        .meta("kind", kind)
        .meta("params", params)
        .meta("nominal order", kind.nominal_order(params.alpha, params.beta))
        .meta("effective order", op.order());
    for i in 1..=op.order() {
        t.row(vec![Cell::Int(i), Cell::Poly(op.coefficient(i))]);
    }
    Ok(t)
}

fn cmd_eigen(nmax: usize, params: &Params) -> Table {
    let (a, b) = (params.alpha, params.beta);
    let (wq, wr, ws) = combined_weights(params);
    let mut t = Table::new("eigenvalues", &["n", "L2", "Ltilde", "Lhat", "Lfull", "Combined"])
        .meta("params", params)
        .meta("Combined", format!("L2 + ({wq}) Ltilde + ({wr}) Lhat + ({ws}) Lfull"));
    for n in 0..=nmax {
        t.row(vec![
            Cell::Int(n),
            Cell::Rat(eigen_lambda2(n, a, b)),
            Cell::Rat(eigen_ltilde(n, a, b)),
            Cell::Rat(eigen_lhat(n, a, b)),
            Cell::Rat(eigen_lfull(n, a, b)),
            Cell::Rat(eigen_combined(n, params)),
        ]);
    }
    t
}

fn cmd_gram(nmax: usize, params: &Params) -> Table {
    let mut columns = vec!["n\\m".to_string()];
    columns.extend((0..=nmax).map(|m| m.to_string()));
    let cols: Vec<&str> = columns.iter().map(String::as_str).collect();
    let mut t = Table::new("Gram matrix <P_n, P_m>", &cols).meta("params", params).meta("nmax", nmax);
    for (n, row) in gram_matrix(nmax, params).into_iter().enumerate() {
        let mut cells = vec![Cell::Int(n)];
        cells.extend(row.into_iter().map(Cell::Rat));
        t.row(cells);
    }
    t
}

fn residual_text(r: &Option<Residual>) -> String {
    match r {
        None => String::new(),
        Some(Residual::Poly(p)) => p.to_string(),
        Some(Residual::Scalar(s)) => s.to_string(),
    }
}

fn render_report(report: &VerifyReport, format: OutputFormat) -> String {
    let n_text = |n: Option<usize>| n.map_or(String::new(), |n| n.to_string());
    match format {
        OutputFormat::Json => serde_json::to_string_pretty(report).expect("report serializes") + "\n",
        OutputFormat::Csv => {
            let header: Vec<String> =
                ["label", "params", "n", "residual", "pass", "skipped"].iter().map(|s| s.to_string()).collect();
            csv_text(
                &header,
                report.cases.iter().map(|c| {
                    vec![
                        c.label.clone(),
                        c.params.clone(),
                        n_text(c.n),
                        residual_text(&c.residual),
                        c.pass.to_string(),
                        c.skipped.clone().unwrap_or_default(),
                    ]
                }),
            )
        }
        OutputFormat::Latex => {
            let mut t = Table::new(format!("suite {}", report.suite), &["label", "params", "n", "residual", "status"])
                .meta("grid", &report.grid);
            for c in &report.cases {
                let residual = match &c.residual {
                    None => Cell::Empty,
                    Some(Residual::Poly(p)) => Cell::Poly(p.clone()),
                    Some(Residual::Scalar(s)) => Cell::Rat(s.clone()),
                };
                let n = c.n.map_or(Cell::Empty, Cell::Int);
                t.row(vec![Cell::Text(c.label.clone()), Cell::Text(c.params.clone()), n, residual, Cell::Text(c.status().into())]);
            }
            let mut out = t.render(OutputFormat::Latex);
            out.push_str(&format!("% all_pass: {}\n", latex_escape(&report.all_pass.to_string())));
            out
        }
        OutputFormat::Plain => {
            let mut out = format!("suite: {}\ngrid: {}\n", report.suite, report.grid);
            if let Some(seed) = report.seed {
                out.push_str(&format!("seed: {seed}\n"));
            }
            let mut groups: Vec<(&str, [usize; 3])> = Vec::new();
            for c in &report.cases {
                let g = c.label.split_once('/').map_or(report.suite.as_str(), |(g, _)| g);
                if groups.last().map(|(name, _)| *name) != Some(g) {
                    groups.push((g, [0; 3]));
                }
                let slot = match c.status() {
                    "pass" => 0,
                    "fail" => 1,
                    _ => 2,
                };
                groups.last_mut().unwrap().1[slot] += 1;
            }
            for (g, [p, f, s]) in &groups {
                out.push_str(&format!("{g:<14} {p:>6} pass {f:>4} fail {s:>4} skipped\n"));
            }
            for c in report.failures() {
                out.push_str(&format!(
                    "FAIL {} [{}] n={} residual={}\n",
                    c.label,
                    c.params,
                    n_text(c.n),
                    residual_text(&c.residual)
                ));
            }
            out.push_str(if report.all_pass { "result: PASS\n" } else { "result: FAIL\n" });
            out
        }
    }
}

fn cmd_verify(args: &VerifyArgs) -> Result<VerifyReport, String> {
    let mut grid = GridConfig {
        alpha_max: args.alpha_max,
        beta_max: args.beta_max,
        nmax: args.nmax,
        seed: args.seed,
        trials: args.trials,
        degmax: args.degmax,
        fault: args.inject_fault,
        ..GridConfig::default()
    };
    if !args.masses_neg.is_empty() {
        grid.masses_neg = args.masses_neg.clone();
    }
    if !args.masses_pos.is_empty() {
        grid.masses_pos = args.masses_pos.clone();
    }
    run_suite(args.suite, &grid).map_err(|e| e.to_string())
}

fn configure_threads() -> Result<(), String> {
    let Ok(v) = std::env::var("GENJACOBI_THREADS") else {
        return Ok(());
    };
    let n: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| format!("GENJACOBI_THREADS must be a positive integer, got '{v}'"))?;
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| e.to_string())
}

/// Returns the text to print and whether verification passed.
fn run(cli: Cli) -> Result<(String, bool), String> {
    configure_threads()?;
    Ok(match cli.command {
        Command::Poly { n, weight, format } => (cmd_poly(n, &weight.params()?).render(format), true),
        Command::Operator { kind, weight, format } => (cmd_operator(kind, &weight.params()?)?.render(format), true),
        Command::Eigen { nmax, weight, format } => (cmd_eigen(nmax, &weight.params()?).render(format), true),
        Command::Gram { nmax, weight, format } => (cmd_gram(nmax, &weight.params()?).render(format), true),
        Command::Verify(args) => {
            let report = cmd_verify(&args)?;
            (render_report(&report, args.format), report.all_pass)
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((text, pass)) => {
            print!("{text}");
            if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
