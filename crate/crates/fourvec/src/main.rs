use clap::{Parser, Subcommand, ValueEnum};
use fourvec::basis::{basis_product, Basis};
use fourvec::bench::run_bench;
use fourvec::error::Error;
use fourvec::fourvector::Fourvector;
use fourvec::rotation::{
    boost_rotor, reflect, rotate, rotor_from_axis_angle, AxisAngle, BoostKind, BoostParameters,
    IntervalElement, Rotor,
};
use fourvec::solve::{divide, left_factor, right_factor, solve_quadratic, Side};
use fourvec::text::{format_fourvector, parse_fourvector};
use fourvec::verify::{run_suite, VerifyConfig, VerifyReport};

/// Fourvector algebra: products, factor solvers, rotations, boosts,
/// reflections, an identity suite, and an operation-count benchmark.
///
/// Fourvector operands are written as four comma-separated complex
/// literals in parentheses, e.g. "(1, 3+5i, 2, -1)".
#[derive(Parser)]
#[command(name = "fourvec", version, disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Emit structured JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Tolerance for residual checks and rotor validation.
    #[arg(long, global = true, default_value_t = 1e-9, allow_negative_numbers = true)]
    tol: f64,

    /// Seed for the deterministic sampling in `verify`.
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,

    /// Sample count per identity in `verify`.
    #[arg(long, global = true, default_value_t = 1000)]
    samples: u64,

    /// Digits after the decimal point in formatted output (1..=17;
    /// 17 formats with enough digits to round-trip exactly).
    #[arg(long, global = true, default_value_t = 12, value_parser = clap::value_parser!(u8).range(1..=17))]
    precision: u8,
}

#[derive(Subcommand)]
enum Command {
    /// Fourvector product A ** B.
    Prod { a: String, b: String },
    /// Hamilton quaternion product A · B.
    Hprod { a: String, b: String },
    /// Rotate V with a unit rotor (sandwich form).
    Rotate {
        v: String,
        /// Rotor as a fourvector literal with unit norm.
        #[arg(long, conflicts_with_all = ["axis", "angle"])]
        rotor: Option<String>,
        /// Rotation axis as three comma-separated reals, e.g. "0,0,1".
        #[arg(long, value_name = "X,Y,Z", allow_hyphen_values = true, requires = "angle")]
        axis: Option<String>,
        /// Rotation angle in radians.
        #[arg(long, allow_negative_numbers = true, requires = "axis")]
        angle: Option<f64>,
    },
    /// Reflect a pure vector X in the mirror plane with unit normal N.
    Reflect { x: String, normal: String },
    /// Boost the interval element (dt, dx, dy, dz); components are real.
    Boost {
        ds: String,
        /// Circular rotor angle in radians.
        #[arg(long, allow_negative_numbers = true)]
        trig: Option<f64>,
        /// Hyperbolic rotor rapidity.
        #[arg(long, allow_negative_numbers = true)]
        hyper: Option<f64>,
        /// Velocity rotor from a Lorentz factor (>= 1).
        #[arg(long, allow_negative_numbers = true)]
        gamma: Option<f64>,
        /// Velocity rotor from a speed fraction (|beta| < 1).
        #[arg(long, allow_negative_numbers = true)]
        beta: Option<f64>,
    },
    /// Divide P by Q (right-multiplication by the inverse).
    Divide { p: String, q: String },
    /// Solve Y ** B == A for Y.
    FactorLeft { a: String, b: String },
    /// Solve B ** X == A for X.
    FactorRight { a: String, b: String },
    /// Solve q**q + q**C == K (or C**q with --side left).
    SolveQuad {
        c: String,
        k: String,
        #[arg(long, value_enum, default_value_t = SideArg::Right)]
        side: SideArg,
    },
    /// Print the basis multiplication table (row ** column).
    Table,
    /// Run the randomized identity suite.
    Verify,
    /// Count scalar operations and time both composition representations.
    Bench {
        #[arg(long, default_value_t = 100_000)]
        iterations: u64,
    },
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum SideArg {
    Right,
    Left,
}

impl From<SideArg> for Side {
    fn from(side: SideArg) -> Side {
        match side {
            SideArg::Right => Side::Right,
            SideArg::Left => Side::Left,
        }
    }
}

enum Failure {
    /// Malformed operands or flag combinations: exit 2.
    Usage(String),
    /// Well-formed input outside the operation's domain: exit 3.
    Domain(Error),
}

fn main() {
    let cli = Cli::parse();
    let code = match execute(&cli) {
        Ok(code) => code,
        Err(Failure::Usage(message)) => {
            eprintln!("error: {message}");
            2
        }
        Err(Failure::Domain(error)) => {
            eprintln!("error: {error}");
            3
        }
    };
    std::process::exit(code);
}

fn parse_operand(label: &str, text: &str) -> Result<Fourvector, Failure> {
    parse_fourvector(text).map_err(|e| Failure::Usage(format!("operand {label}: {e}")))
}

fn parse_axis(text: &str) -> Result<[f64; 3], Failure> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 3 {
        return Err(Failure::Usage(format!(
            "--axis expects three comma-separated reals, got {text:?}"
        )));
    }
    let mut axis = [0.0; 3];
    for (slot, part) in axis.iter_mut().zip(&parts) {
        *slot = part
            .trim()
            .parse::<f64>()
            .map_err(|_| Failure::Usage(format!("--axis component {:?} is not a real", part.trim())))?;
    }
    Ok(axis)
}

fn parse_interval(text: &str) -> Result<IntervalElement, Failure> {
    let v = parse_operand("ds", text)?;
    for c in v.components() {
        if c.im != 0.0 {
            return Err(Failure::Usage(
                "interval element components must be real; the spatial parts are made imaginary internally".into(),
            ));
        }
    }
    Ok(IntervalElement::new(v.t.re, v.x.re, v.y.re, v.z.re))
}

fn fourvector_json(v: Fourvector) -> serde_json::Value {
    serde_json::json!({
        "t": [v.t.re, v.t.im],
        "x": [v.x.re, v.x.im],
        "y": [v.y.re, v.y.im],
        "z": [v.z.re, v.z.im],
    })
}

fn emit_fourvector(cli: &Cli, v: Fourvector) {
    if cli.json {
        println!("{}", fourvector_json(v));
    } else {
        println!("{}", format_fourvector(v, cli.precision as usize));
    }
}

fn execute(cli: &Cli) -> Result<i32, Failure> {
    match &cli.command {
        Command::Prod { a, b } => {
            let a = parse_operand("A", a)?;
            let b = parse_operand("B", b)?;
            emit_fourvector(cli, a.product(b));
            Ok(0)
        }
        Command::Hprod { a, b } => {
            let a = parse_operand("A", a)?;
            let b = parse_operand("B", b)?;
            emit_fourvector(cli, a.hamilton(b));
            Ok(0)
        }
        Command::Rotate {
            v,
            rotor,
            axis,
            angle,
        } => {
            let v = parse_operand("V", v)?;
            let r = match (rotor, axis, angle) {
                (Some(literal), None, None) => {
                    let value = parse_operand("rotor", literal)?;
                    Rotor::new_with_tolerance(value, cli.tol).map_err(Failure::Domain)?
                }
                (None, Some(axis), Some(angle)) => {
                    let aa = AxisAngle::new(parse_axis(axis)?, *angle).map_err(Failure::Domain)?;
                    rotor_from_axis_angle(aa)
                }
                _ => {
                    return Err(Failure::Usage(
                        "rotate needs either --rotor or both --axis and --angle".into(),
                    ))
                }
            };
            emit_fourvector(cli, rotate(v, r));
            Ok(0)
        }
        Command::Reflect { x, normal } => {
            let x = parse_operand("X", x)?;
            let normal = parse_operand("N", normal)?;
            let image = reflect(x, normal).map_err(Failure::Domain)?;
            emit_fourvector(cli, image);
            Ok(0)
        }
        Command::Boost {
            ds,
            trig,
            hyper,
            gamma,
            beta,
        } => {
            let ds = parse_interval(ds)?;
            let kind = match (trig, hyper, gamma, beta) {
                (Some(angle), None, None, None) => BoostKind::Trig(*angle),
                (None, Some(rapidity), None, None) => BoostKind::Hyper(*rapidity),
                (None, None, Some(gamma), None) => BoostKind::Gamma(
                    BoostParameters::from_gamma(*gamma).map_err(Failure::Domain)?,
                ),
                (None, None, None, Some(beta)) => BoostKind::Gamma(
                    BoostParameters::from_beta(*beta).map_err(Failure::Domain)?,
                ),
                _ => {
                    return Err(Failure::Usage(
                        "boost needs exactly one of --trig, --hyper, --gamma, --beta".into(),
                    ))
                }
            };
            emit_fourvector(cli, rotate(ds.materialize(), boost_rotor(kind)));
            Ok(0)
        }
        Command::Divide { p, q } => {
            let p = parse_operand("P", p)?;
            let q = parse_operand("Q", q)?;
            let quotient = divide(p, q).map_err(Failure::Domain)?;
            emit_fourvector(cli, quotient);
            Ok(0)
        }
        Command::FactorLeft { a, b } => {
            let a = parse_operand("A", a)?;
            let b = parse_operand("B", b)?;
            let y = left_factor(a, b).map_err(Failure::Domain)?;
            emit_fourvector(cli, y);
            Ok(0)
        }
        Command::FactorRight { a, b } => {
            let a = parse_operand("A", a)?;
            let b = parse_operand("B", b)?;
            let x = right_factor(a, b).map_err(Failure::Domain)?;
            emit_fourvector(cli, x);
            Ok(0)
        }
        Command::SolveQuad { c, k, side } => {
            let c = parse_operand("C", c)?;
            let k = parse_operand("K", k)?;
            let solution = solve_quadratic((*side).into(), c, k).map_err(Failure::Domain)?;
            if cli.json {
                let roots: Vec<serde_json::Value> =
                    solution.solutions.iter().copied().map(fourvector_json).collect();
                println!(
                    "{}",
                    serde_json::json!({
                        "degenerate": solution.degenerate,
                        "solutions": roots,
                    })
                );
            } else if solution.degenerate {
                println!("degenerate: a continuum of solutions exists; no isolated roots");
            } else {
                for (index, root) in solution.solutions.iter().enumerate() {
                    println!(
                        "q{} = {}",
                        index + 1,
                        format_fourvector(*root, cli.precision as usize)
                    );
                }
            }
            Ok(0)
        }
        Command::Table => {
            if cli.json {
                let products: Vec<Vec<String>> = Basis::ALL
                    .iter()
                    .map(|&left| {
                        Basis::ALL
                            .iter()
                            .map(|&right| basis_product(left, right).symbol())
                            .collect()
                    })
                    .collect();
                println!(
                    "{}",
                    serde_json::json!({
                        "basis": ["e", "i", "j", "k"],
                        "order": "row ** column",
                        "products": products,
                    })
                );
            } else {
                print!("{}", render_table());
            }
            Ok(0)
        }
        Command::Verify => {
            let report = run_suite(&VerifyConfig {
                samples: cli.samples,
                seed: cli.seed,
                tolerance: cli.tol,
            });
            if cli.json {
                print_verify_json(&report);
            } else {
                print_verify_text(&report);
            }
            Ok(if report.all_passed() { 0 } else { 1 })
        }
        Command::Bench { iterations } => {
            if *iterations < 1 {
                return Err(Failure::Usage("--iterations must be at least 1".into()));
            }
            let report = run_bench(*iterations);
            if cli.json {
                println!(
                    "{}",
                    serde_json::json!({
                        "mults_fourvector": report.mults_fourvector,
                        "adds_fourvector": report.adds_fourvector,
                        "mults_matrix": report.mults_matrix,
                        "adds_matrix": report.adds_matrix,
                        "wall_time_ns_per_op_fourvector": report.wall_time_ns_per_op_fourvector,
                        "wall_time_ns_per_op_matrix": report.wall_time_ns_per_op_matrix,
                        "iterations": report.iterations,
                        "counts_match_claim": report.counts_match_claim(),
                    })
                );
            } else {
                println!(
                    "fourvector product: {} multiplications, {} additions",
                    report.mults_fourvector, report.adds_fourvector
                );
                println!(
                    "3x3 matrix product: {} multiplications, {} additions",
                    report.mults_matrix, report.adds_matrix
                );
                println!(
                    "fourvector product timing: {:.2} ns/op (median of 5 batches of {})",
                    report.wall_time_ns_per_op_fourvector, report.iterations
                );
                println!(
                    "3x3 matrix product timing: {:.2} ns/op (median of 5 batches of {})",
                    report.wall_time_ns_per_op_matrix, report.iterations
                );
            }
            if report.counts_match_claim() {
                Ok(0)
            } else {
                eprintln!("error: measured operation counts do not match the advertised 16/12 and 27/18");
                Ok(1)
            }
        }
    }
}

fn render_table() -> String {
    let mut out = String::new();
    out.push_str(" ** |");
    for basis in Basis::ALL {
        out.push_str(&format!(" {:>4}", basis.symbol()));
    }
    out.push('\n');
    out.push_str("----+--------------------\n");
    for left in Basis::ALL {
        out.push_str(&format!("  {} |", left.symbol()));
        for right in Basis::ALL {
            out.push_str(&format!(" {:>4}", basis_product(left, right).symbol()));
        }
        out.push('\n');
    }
    out
}

fn print_verify_text(report: &VerifyReport) {
    println!(
        "seed {}, samples {}, tolerance {:e}",
        report.seed, report.samples, report.tolerance
    );
    let width = report
        .outcomes
        .iter()
        .map(|o| o.name.len())
        .max()
        .unwrap_or(0);
    for outcome in &report.outcomes {
        println!(
            "[{}] {:<width$}  worst residual {:e} ({} checks)",
            if outcome.passed { "PASS" } else { "FAIL" },
            outcome.name,
            outcome.worst_residual,
            outcome.checks,
        );
    }
    println!(
        "{}/{} identities passed",
        report.passed_count(),
        report.outcomes.len()
    );
}

fn print_verify_json(report: &VerifyReport) {
    let identities: Vec<serde_json::Value> = report
        .outcomes
        .iter()
        .map(|o| {
            serde_json::json!({
                "name": o.name,
                "passed": o.passed,
                "worst_residual": o.worst_residual,
                "checks": o.checks,
            })
        })
        .collect();
    println!(
        "{}",
        serde_json::json!({
            "seed": report.seed,
            "samples": report.samples,
            "tolerance": report.tolerance,
            "all_passed": report.all_passed(),
            "identities": identities,
        })
    );
}
