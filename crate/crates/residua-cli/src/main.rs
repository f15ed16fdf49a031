//! Batch front end: reads a monomial ideal as JSON (file or stdin), runs
//! one analysis, and prints a deterministic JSON document. Exit codes:
//! 0 success, 1 a verification predicate came back false, 2 bad input.

mod input;
mod report;
mod svg;

use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use residua::random::{
    random_ci_tuple_with_redundant, random_m_primary_ideal, random_monomial_tuple,
};
use residua::{
    essential_sets, hickel_verdict, strictness_witness, theorem_c_check, Error, MonomialTuple,
};

use input::{parse_input, ParsedIdeal};
use report::{
    build_report, essentials_out, ideal_out, polyhedron_out, render, valuations_out, BsOut, CiOut,
    DecomposeOut, SocleOut, SCHEMA,
};

#[derive(Parser)]
#[command(
    name = "residua",
    version,
    about = "Exact Newton-polyhedron analysis of m-primary monomial ideals"
)]
struct Cli {
    /// Worker threads for the facet search; 1 keeps everything sequential.
    /// The output bytes do not depend on this.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    parallel: u16,
    #[command(subcommand)]
    command: Command,
}

/// Most commands take the ideal JSON as a path argument, with "-" (the
/// default) reading stdin.
#[derive(Subcommand)]
enum Command {
    /// Full facet description of the Newton polyhedron
    Np {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Rees valuations: one primitive normal and offset per compact facet
    Rees {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Essential generator sets with their facets and determinants
    Essential {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Minimal generators of the integral closure
    Closure {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Minimal generators of the k-th power
    Power {
        #[arg(default_value = "-")]
        input: String,
        #[arg(short, long)]
        k: u64,
    },
    /// Socle monomials and the colength of the quotient
    Socle {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Irredundant irreducible decomposition
    Decompose {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Complete-intersection verdict for the minimalized ideal
    Ci {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Checks closure(a^n) inside a; a false verdict exits 1
    BsCheck {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Annihilator sandwich: closure(a^n), a, essential count, CI verdict
    Bounds {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Everything above as one document
    Report {
        #[arg(default_value = "-")]
        input: String,
        /// Also write the n = 2 staircase plot here
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Staircase plot (n = 2): stdout, or --svg PATH
    Staircase {
        #[arg(default_value = "-")]
        input: String,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Seeded random self-check of the library's theorem predicates
    Verify {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Instances per check
        #[arg(long, default_value_t = 50)]
        count: usize,
        /// Fix the ambient dimension (default alternates 2 and 3)
        #[arg(long)]
        n: Option<usize>,
    },
}

struct Failure {
    code: u8,
    message: String,
}

fn input_error(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

fn verification_error(message: impl Into<String>) -> Failure {
    Failure {
        code: 1,
        message: message.into(),
    }
}

fn from_library(err: Error) -> Failure {
    input_error(err.to_string())
}

fn read_source(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| input_error(format!("cannot read stdin: {e}")))?;
        Ok(text)
    } else {
        fs::read_to_string(path).map_err(|e| input_error(format!("cannot read {path}: {e}")))
    }
}

fn load(path: &str) -> Result<ParsedIdeal, Failure> {
    parse_input(&read_source(path)?).map_err(input_error)
}

/// Commands built on valuations, closures, or staircase scans need a
/// bounded staircase; diagnose the uncovered variable by name.
fn require_m_primary(parsed: &ParsedIdeal) -> Result<(), Failure> {
    match parsed.ideal().uncovered_variable() {
        Some(i) => Err(input_error(format!(
            "ideal is not m-primary: variable '{}' has no pure power generator",
            parsed.variables[i]
        ))),
        None => Ok(()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    rayon::ThreadPoolBuilder::new()
        .num_threads(cli.parallel as usize)
        .build_global()
        .ok();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn emit<T: Serialize>(value: &T) -> Result<(), Failure> {
    print!("{}", render(value).map_err(input_error)?);
    Ok(())
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Np { input } => {
            let parsed = load(&input)?;
            emit(&polyhedron_out(&parsed.tuple.newton_polyhedron()).map_err(input_error)?)
        }
        Command::Rees { input } => {
            let parsed = load(&input)?;
            require_m_primary(&parsed)?;
            emit(&valuations_out(&parsed.ideal()).map_err(input_error)?)
        }
        Command::Essential { input } => {
            let parsed = load(&input)?;
            require_m_primary(&parsed)?;
            let sets = essential_sets(&parsed.tuple).map_err(from_library)?;
            emit(&essentials_out(&sets).map_err(input_error)?)
        }
        Command::Closure { input } => {
            let parsed = load(&input)?;
            require_m_primary(&parsed)?;
            let closed = parsed.ideal().integral_closure().map_err(from_library)?;
            emit(&ideal_out(&closed, &parsed.variables))
        }
        Command::Power { input, k } => {
            let parsed = load(&input)?;
            let power = parsed.ideal().power(k).map_err(from_library)?;
            emit(&ideal_out(&power, &parsed.variables))
        }
        Command::Socle { input } => {
            let parsed = load(&input)?;
            require_m_primary(&parsed)?;
            let a = parsed.ideal();
            let socle = a.socle().map_err(from_library)?;
            let colength = a.colength().map_err(from_library)?;
            emit(&SocleOut {
                monomials: socle
                    .iter()
                    .map(|s| input::monomial_string(s, &parsed.variables))
                    .collect(),
                colength,
            })
        }
        Command::Decompose { input } => {
            let parsed = load(&input)?;
            require_m_primary(&parsed)?;
            let components = parsed
                .ideal()
                .irreducible_decomposition()
                .map_err(from_library)?;
            emit(&DecomposeOut {
                components: components
                    .iter()
                    .map(|c| {
                        c.gens()
                            .iter()
                            .map(|g| input::monomial_string(g, &parsed.variables))
                            .collect()
                    })
                    .collect(),
            })
        }
        Command::Ci { input } => {
            let parsed = load(&input)?;
            require_m_primary(&parsed)?;
            let verdict = parsed
                .ideal()
                .is_complete_intersection()
                .map_err(from_library)?;
            emit(&CiOut {
                complete_intersection: verdict,
            })
        }
        Command::BsCheck { input } => {
            let parsed = load(&input)?;
            require_m_primary(&parsed)?;
            let contained =
                residua::briancon_skoda_verify(&parsed.ideal()).map_err(from_library)?;
            emit(&BsOut {
                power: parsed.n(),
                contained,
            })?;
            if !contained {
                return Err(verification_error(
                    "closure of the n-th power escapes the ideal",
                ));
            }
            Ok(())
        }
        Command::Bounds { input } => {
            let parsed = load(&input)?;
            require_m_primary(&parsed)?;
            let bounds = residua::annihilator_bounds(&parsed.tuple).map_err(from_library)?;
            emit(&report::BoundsOut {
                lower_generators: bounds
                    .lower
                    .gens()
                    .iter()
                    .map(|g| input::monomial_string(g, &parsed.variables))
                    .collect(),
                upper_generators: bounds
                    .upper
                    .gens()
                    .iter()
                    .map(|g| input::monomial_string(g, &parsed.variables))
                    .collect(),
                essential_count: bounds.essential_count,
                complete_intersection: bounds.is_ci,
            })
        }
        Command::Report { input, svg: plot } => {
            let parsed = load(&input)?;
            require_m_primary(&parsed)?;
            let document = build_report(&parsed).map_err(input_error)?;
            if let Some(path) = &plot {
                let image = svg::render_staircase_svg(&parsed.tuple, &parsed.variables)
                    .map_err(input_error)?;
                fs::write(path, image)
                    .map_err(|e| input_error(format!("cannot write {}: {e}", path.display())))?;
            }
            emit(&document)?;
            if !document.briancon_skoda.contained {
                return Err(verification_error(
                    "closure of the n-th power escapes the ideal",
                ));
            }
            Ok(())
        }
        Command::Staircase { input, svg: plot } => {
            let parsed = load(&input)?;
            let image =
                svg::render_staircase_svg(&parsed.tuple, &parsed.variables).map_err(input_error)?;
            match &plot {
                Some(path) => fs::write(path, image)
                    .map_err(|e| input_error(format!("cannot write {}: {e}", path.display()))),
                None => {
                    print!("{image}");
                    Ok(())
                }
            }
        }
        Command::Verify { seed, count, n } => verify(seed, count, n),
    }
}

#[derive(Serialize)]
struct CheckOut {
    name: &'static str,
    instances: usize,
    failures: usize,
}

#[derive(Serialize)]
struct VerifyOut {
    schema: &'static str,
    seed: u64,
    count: usize,
    checks: Vec<CheckOut>,
    ok: bool,
}

/// Seeded property run over random instances: the containment, witness,
/// dichotomy, essentiality, and structure predicates that must never fail
/// on valid inputs.
fn verify(seed: u64, count: usize, fixed_n: Option<usize>) -> Result<(), Failure> {
    if let Some(n) = fixed_n {
        if !(1..=4).contains(&n) {
            return Err(input_error("verify supports n between 1 and 4"));
        }
    }
    let dims = |i: usize| fixed_n.unwrap_or(if i.is_multiple_of(2) { 2 } else { 3 });
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checks = Vec::new();
    let fail = |e: Error| input_error(format!("internal failure during verify: {e}"));

    let mut containment = 0;
    let mut witnesses = 0;
    for i in 0..count {
        let n = dims(i);
        let a = random_m_primary_ideal(&mut rng, n, 8, 4);
        let closed = a
            .power(n as u64)
            .and_then(|p| p.integral_closure())
            .map_err(fail)?;
        if !a.contains_ideal(&closed).map_err(fail)? {
            containment += 1;
        }
        if n >= 2 {
            let t = MonomialTuple::new(a.gens().to_vec(), n).expect("gens form a tuple");
            for e in essential_sets(&t).map_err(fail)? {
                let w = strictness_witness(&t, &e).map_err(fail)?;
                if closed.contains_monomial(&w.monomial).map_err(fail)? {
                    witnesses += 1;
                }
            }
        }
    }
    checks.push(CheckOut {
        name: "closure-power-containment",
        instances: count,
        failures: containment,
    });
    checks.push(CheckOut {
        name: "strictness-witnesses",
        instances: count,
        failures: witnesses,
    });

    let mut inconsistent = 0;
    for i in 0..count {
        let n = dims(i);
        let t = random_monomial_tuple(&mut rng, n, n, 8);
        if !hickel_verdict(&t).map_err(fail)?.consistent {
            inconsistent += 1;
        }
    }
    checks.push(CheckOut {
        name: "jacobian-dichotomy",
        instances: count,
        failures: inconsistent,
    });

    let mut essential = 0;
    for i in 0..count {
        let n = dims(i);
        let t = random_ci_tuple_with_redundant(&mut rng, n, 8, 3);
        if !theorem_c_check(&t).map_err(fail)? {
            essential += 1;
        }
    }
    checks.push(CheckOut {
        name: "essential-equals-generating",
        instances: count,
        failures: essential,
    });

    let mut structure = 0;
    for i in 0..count {
        let n = dims(i);
        let a = random_m_primary_ideal(&mut rng, n, 6, 3);
        let components = a.irreducible_decomposition().map_err(fail)?;
        let socle = a.socle().map_err(fail)?;
        let closed = a.integral_closure().map_err(fail)?;
        if components.len() != socle.len() || closed.integral_closure().map_err(fail)? != closed {
            structure += 1;
        }
    }
    checks.push(CheckOut {
        name: "decomposition-and-closure-structure",
        instances: count,
        failures: structure,
    });

    let ok = checks.iter().all(|c| c.failures == 0);
    emit(&VerifyOut {
        schema: SCHEMA,
        seed,
        count,
        checks,
        ok,
    })?;
    if ok {
        Ok(())
    } else {
        Err(verification_error(
            "a property check failed; see the report",
        ))
    }
}
