//! Command-line front end: products, the Baxter operator, embedding tables,
//! annihilator series, reductions, membership queries, witness suites, and
//! canonical (re)formatting.
//!
//! Subcommands map one-to-one onto library operations; there is no hidden
//! state and no configuration file, so identical invocations produce
//! byte-identical output. Exit codes: 0 success (including negative verdicts
//! such as non-membership), 1 a checked property failed, 2 usage error.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use baxter_core::complete::SequenceJson;
use baxter_core::{
    annihilator_b, baxter_reduce, check_annihilation, homogeneous_membership,
    reduce_by_generators, run_witness_suite, specialize_b, AlgebraCtx, CompleteError,
    ReductionStep, ReductionTrace, RingId, Scalar, ShuffleElement, SuiteBounds, SuiteSelection,
    TruncatedBaxterSeries,
};

#[derive(Parser)]
#[command(
    name = "baxter",
    version,
    about = "Exact computer algebra for free Baxter (mixable shuffle) algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Context flags shared by the element-oriented subcommands.
#[derive(Args, Clone)]
struct CtxArgs {
    /// Coefficient ring: Q, laurent, fp:<p>, or Z. Defaults to Q, or to
    /// laurent when the weight mentions x.
    #[arg(long)]
    ring: Option<String>,
    /// Comma-separated variable names (may be empty).
    #[arg(long, default_value = "")]
    vars: String,
    /// The weight: a rational such as 1 or -1/2, or a Laurent expression in
    /// x (the bare symbol x selects the laurent ring).
    #[arg(long, default_value = "0")]
    weight: String,
}

impl CtxArgs {
    fn build(&self) -> Result<AlgebraCtx, CliError> {
        let ring = match &self.ring {
            Some(r) => RingId::parse_label(r).map_err(usage)?,
            None => {
                if self.weight.contains('x') {
                    RingId::LaurentQ
                } else {
                    RingId::RationalQ
                }
            }
        };
        let weight = Scalar::parse_in_ring(&self.weight, ring).map_err(usage)?;
        let vars: Vec<String> = self
            .vars
            .split(',')
            .map(str::trim)
            .filter(|v| !v.is_empty())
            .map(str::to_string)
            .collect();
        AlgebraCtx::new(ring, vars, weight).map_err(usage)
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum ReduceMode {
    /// cancel leading terms with scaled unit-power multiples (rationals only)
    Ring,
    /// cancel leading terms with scaled Baxter shifts
    Baxter,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum BoundsArg {
    Small,
    Medium,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    All,
    Charp,
    Sums,
    PowerChain,
    SubmoduleSpan,
    ModuleChain,
    Annihilator,
}

#[derive(Subcommand)]
enum Command {
    /// Multiply two elements with the mixable shuffle product.
    Product {
        #[command(flatten)]
        ctx: CtxArgs,
        /// Emit JSON instead of the text format.
        #[arg(long)]
        json: bool,
        a: String,
        b: String,
    },
    /// Apply the Baxter operator P (prepend a tensor factor 1).
    Baxter {
        #[command(flatten)]
        ctx: CtxArgs,
        #[arg(long)]
        json: bool,
        element: String,
    },
    /// Print the componentwise embedding table of a truncated series.
    Phi {
        /// Coefficient ring of the series.
        #[arg(long, default_value = "Q")]
        ring: String,
        #[arg(long)]
        weight: String,
        /// Comma-separated coefficients b_0, b_1, ...
        #[arg(long)]
        coeffs: String,
        /// Truncation precision; defaults to the number of coefficients - 1.
        #[arg(long)]
        precision: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Generate an annihilator series (symbolic, or specialized at a weight).
    Annihilator {
        /// The annihilated unit-power tensor degree.
        #[arg(long)]
        k: usize,
        #[arg(long)]
        precision: usize,
        /// Specialize the symbolic weight x at this nonzero rational.
        #[arg(long)]
        lambda: Option<String>,
        /// Scale factor applied after specialization.
        #[arg(long, default_value = "1")]
        scale: String,
        /// Also certify the four annihilation properties (exit 1 on failure).
        #[arg(long)]
        check: bool,
        #[arg(long)]
        json: bool,
    },
    /// Reduce an element by generators, returning an exact trace.
    Reduce {
        #[command(flatten)]
        ctx: CtxArgs,
        #[arg(long, value_enum, default_value = "baxter")]
        mode: ReduceMode,
        /// Generators (repeatable).
        #[arg(long = "gen", required = true)]
        gens: Vec<String>,
        target: String,
        #[arg(long)]
        json: bool,
    },
    /// Decide homogeneous ideal membership on a grade slice.
    Member {
        #[command(flatten)]
        ctx: CtxArgs,
        /// Bound on the multiplier tensor degree.
        #[arg(long, default_value = "4")]
        tensor_bound: usize,
        #[arg(long = "gen", required = true)]
        gens: Vec<String>,
        target: String,
        #[arg(long)]
        json: bool,
    },
    /// Run the witness suites and print one certificate per check.
    Witness {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        #[arg(long, value_enum, default_value = "small")]
        bounds: BoundsArg,
        #[arg(long)]
        json: bool,
    },
    /// Parse an element (text or JSON) and re-emit it canonically.
    Fmt {
        #[command(flatten)]
        ctx: CtxArgs,
        #[arg(long)]
        json: bool,
        input: String,
    },
}

enum CliError {
    Usage(String),
    Violation(String),
}

fn usage<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Usage(e.to_string())
}

fn parse_element(ctx: &AlgebraCtx, input: &str) -> Result<ShuffleElement, CliError> {
    if input.trim_start().starts_with('{') {
        ShuffleElement::from_json_str(input).map_err(usage)
    } else {
        ShuffleElement::parse(ctx, input).map_err(usage)
    }
}

fn print_element(e: &ShuffleElement, as_json: bool) {
    if as_json {
        println!("{}", e.to_json_string());
    } else {
        println!("{e}");
    }
}

fn trace_json(trace: &ReductionTrace) -> serde_json::Value {
    let steps: Vec<serde_json::Value> = trace
        .steps
        .iter()
        .map(|s| match s {
            ReductionStep::Multiply {
                generator,
                cofactor,
                subtracted,
            } => json!({
                "kind": "multiply",
                "generator": generator,
                "cofactor": cofactor.to_json(),
                "subtracted": subtracted.to_json(),
            }),
            ReductionStep::BaxterShift {
                generator,
                shift,
                scale,
                subtracted,
            } => json!({
                "kind": "baxter_shift",
                "generator": generator,
                "shift": shift,
                "scale": scale.to_string(),
                "subtracted": subtracted.to_json(),
            }),
        })
        .collect();
    json!({ "steps": steps, "remainder": trace.remainder.to_json() })
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Product { ctx, json, a, b } => {
            let ctx = ctx.build()?;
            let a = parse_element(&ctx, &a)?;
            let b = parse_element(&ctx, &b)?;
            let p = a.product(&b).map_err(usage)?;
            print_element(&p, json);
        }
        Command::Baxter { ctx, json, element } => {
            let ctx = ctx.build()?;
            let e = parse_element(&ctx, &element)?;
            print_element(&e.baxter_p(), json);
        }
        Command::Phi {
            ring,
            weight,
            coeffs,
            precision,
            json,
        } => {
            let ring = RingId::parse_label(&ring).map_err(usage)?;
            let weight = Scalar::parse_in_ring(&weight, ring).map_err(usage)?;
            let coeffs: Vec<Scalar> = coeffs
                .split(',')
                .map(|c| Scalar::parse_in_ring(c, ring))
                .collect::<Result<_, _>>()
                .map_err(usage)?;
            let precision = precision.unwrap_or(coeffs.len().saturating_sub(1));
            let series = TruncatedBaxterSeries::new(ring, weight, precision, coeffs)
                .map_err(usage)?;
            let seq = series.phi().map_err(usage)?;
            if json {
                let out: SequenceJson = seq.to_json();
                println!("{}", serde_json::to_string(&out).expect("serializable"));
            } else {
                for (i, comp) in seq.components().iter().enumerate() {
                    println!("{}\t{}", i + 1, comp);
                }
            }
        }
        Command::Annihilator {
            k,
            precision,
            lambda,
            scale,
            check,
            json,
        } => {
            let series = match &lambda {
                Some(l) if l.trim() != "x" => {
                    let lam = Scalar::parse_in_ring(l, RingId::RationalQ).map_err(usage)?;
                    let c = Scalar::parse_in_ring(&scale, RingId::RationalQ).map_err(usage)?;
                    specialize_b(k, &lam, &c, precision).map_err(usage)?
                }
                _ => annihilator_b(k, precision).map_err(usage)?,
            };
            if json {
                println!(
                    "{}",
                    serde_json::to_string(&series.to_json()).expect("serializable")
                );
            } else {
                let line: Vec<String> = series.coeffs().iter().map(Scalar::to_string).collect();
                println!("{}", line.join(", "));
            }
            if check {
                match check_annihilation(&series, k) {
                    Ok(report) => println!(
                        "annihilation check: pass (c = {}, lower filtration value = {})",
                        report.c, report.lower_filtration_value
                    ),
                    Err(e @ CompleteError::PropertyViolation { .. }) => {
                        return Err(CliError::Violation(e.to_string()));
                    }
                    Err(e) => return Err(usage(e)),
                }
            }
        }
        Command::Reduce {
            ctx,
            mode,
            gens,
            target,
            json,
        } => {
            let ctx = ctx.build()?;
            let target = parse_element(&ctx, &target)?;
            let gens: Vec<ShuffleElement> = gens
                .iter()
                .map(|g| parse_element(&ctx, g))
                .collect::<Result<_, _>>()?;
            let trace = match mode {
                ReduceMode::Ring => reduce_by_generators(&target, &gens).map_err(usage)?,
                ReduceMode::Baxter => baxter_reduce(&target, &gens).map_err(usage)?,
            };
            if json {
                println!(
                    "{}",
                    serde_json::to_string(&trace_json(&trace)).expect("serializable")
                );
            } else {
                println!("steps: {}", trace.steps.len());
                println!("remainder: {}", trace.remainder);
            }
        }
        Command::Member {
            ctx,
            tensor_bound,
            gens,
            target,
            json,
        } => {
            let ctx = ctx.build()?;
            let target = parse_element(&ctx, &target)?;
            let gens: Vec<ShuffleElement> = gens
                .iter()
                .map(|g| parse_element(&ctx, g))
                .collect::<Result<_, _>>()?;
            let cert = homogeneous_membership(&target, &gens, tensor_bound).map_err(usage)?;
            if json {
                println!(
                    "{}",
                    serde_json::to_string(&cert.to_json()).expect("serializable")
                );
            } else if cert.is_member() {
                println!("member");
                if let baxter_core::MembershipVerdict::Member(combo) = &cert.verdict {
                    for (k, m) in combo {
                        println!("  generator {k} * ({m})");
                    }
                }
            } else if let baxter_core::MembershipVerdict::NonMember {
                span_rank,
                augmented_rank,
            } = &cert.verdict
            {
                println!("non-member (span rank {span_rank}, with target {augmented_rank})");
            }
        }
        Command::Witness { suite, bounds, json } => {
            let selection = match suite {
                SuiteArg::All => SuiteSelection::All,
                SuiteArg::Charp => SuiteSelection::CharP,
                SuiteArg::Sums => SuiteSelection::CoefficientSums,
                SuiteArg::PowerChain => SuiteSelection::PowerChain,
                SuiteArg::SubmoduleSpan => SuiteSelection::SubmoduleSpan,
                SuiteArg::ModuleChain => SuiteSelection::ModuleChain,
                SuiteArg::Annihilator => SuiteSelection::Annihilator,
            };
            let bounds = match bounds {
                BoundsArg::Small => SuiteBounds::Small,
                BoundsArg::Medium => SuiteBounds::Medium,
            };
            let certificates = run_witness_suite(selection, bounds);
            if json {
                println!(
                    "{}",
                    serde_json::to_string(&certificates).expect("serializable")
                );
            } else {
                for c in &certificates {
                    println!(
                        "{}  {}  {}",
                        if c.passed() { "PASS" } else { "FAIL" },
                        c.claim,
                        c.bounds
                    );
                }
            }
            let failures = certificates.iter().filter(|c| !c.passed()).count();
            if failures > 0 {
                return Err(CliError::Violation(format!(
                    "{failures} witness check(s) failed"
                )));
            }
        }
        Command::Fmt { ctx, json, input } => {
            let element = if input.trim_start().starts_with('{') {
                ShuffleElement::from_json_str(&input).map_err(usage)?
            } else {
                let ctx = ctx.build()?;
                ShuffleElement::parse(&ctx, &input).map_err(usage)?
            };
            print_element(&element, json);
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Violation(msg)) => {
            eprintln!("property violation: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
