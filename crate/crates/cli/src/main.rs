//! `pso`: compose, analyze, law-check and decompose set-theoretic operads
//! on simplicial complexes.
//!
//! Exit codes: 0 success, 1 domain/precondition/parse error, 2 resource
//! bound exceeded, 3 law violation found.

use clap::{Parser, Subcommand, ValueEnum};
use powerset_operads::base_operads::Variant;
use powerset_operads::error::Error;
use powerset_operads::io;
use powerset_operads::join_operad::join_compose;
use powerset_operads::laws::{instance_names, run_named_laws, CheckMode};
use powerset_operads::pl::{
    euler_characteristic, j_construction_certified, recognize_low_dim, PlCertificate, Recognition,
};
use powerset_operads::scpx_operads::{
    compose, decompose_bounded, Decomposition, NamedComplex, DECOMPOSE_DEFAULT_BOUND,
};
use powerset_operads::{RelativePair, SimplicialComplex};
use std::path::Path;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "pso",
    about = "set-theoretic operads on simplicial complexes",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OpKind {
    Subst,
    Comp,
    Join,
    Pair,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Subst,
    Comp,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Variant {
        match v {
            VariantArg::Subst => Variant::Subst,
            VariantArg::Comp => Variant::Comp,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Compose two complexes (or two relative pairs) at a slot.
    Compose {
        #[arg(long, value_enum)]
        op: OpKind,
        /// Slot index (not needed for --op join).
        #[arg(long)]
        slot: Option<usize>,
        /// Inputs: files or shorthands (pt, simplex:N, bd:N, discrete:N,
        /// trivial:N, pure:N,K); pairs may be FILE or SHORTHAND/SHORTHAND.
        left: String,
        right: String,
        #[arg(long)]
        json: bool,
    },
    /// Print the facets (inclusionwise maximal faces) of a complex.
    Facets {
        input: String,
        #[arg(long)]
        json: bool,
    },
    /// Classification flags, dimension, minimal non-faces and Euler
    /// characteristic.
    Analyze { input: String },
    /// Check the operad laws of a named operad.
    Laws {
        #[arg(long, default_value = "scpx-subst")]
        operad: String,
        #[arg(long, default_value_t = 3)]
        max_arity: usize,
        /// Sample this many random cases instead of exhausting.
        #[arg(long)]
        sampled: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Emit one line per violation.
        #[arg(long)]
        records: bool,
        /// List the known operads and exit.
        #[arg(long)]
        list: bool,
    },
    /// Search for a factorization X = K ∘_k L with both sides non-units.
    Decompose {
        #[arg(long, value_enum)]
        variant: VariantArg,
        input: String,
        #[arg(long, default_value_t = DECOMPOSE_DEFAULT_BOUND)]
        bound: usize,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Apply the iterated-wedge construction with multiplicities J.
    Jconstruct {
        /// Comma-separated multiplicities, e.g. 2,1,3.
        #[arg(long)]
        j: String,
        input: String,
        #[arg(long)]
        json: bool,
    },
    /// Sphere/ball verdict with certificate provenance.
    Pl { input: String },
    /// Convert between the text and JSON formats.
    Convert {
        #[arg(long, value_enum)]
        to: Format,
        input: String,
    },
    /// List all simplicial complexes on `[n]`.
    Enumerate {
        n: usize,
        #[arg(long)]
        count_only: bool,
    },
}

fn exit_code_for(err: &Error) -> ExitCode {
    match err {
        Error::Resource(_) => ExitCode::from(2),
        _ => ExitCode::from(1),
    }
}

fn load_named(spec: &str) -> Option<Result<SimplicialComplex, Error>> {
    let named = if spec == "pt" {
        NamedComplex::Point
    } else {
        let (kind, arg) = spec.split_once(':')?;
        let parse = |s: &str| s.parse::<usize>().ok();
        match kind {
            "simplex" => NamedComplex::Simplex(parse(arg)?),
            "bd" => NamedComplex::BoundarySimplex(parse(arg)?),
            "discrete" => NamedComplex::Discrete(parse(arg)?),
            "trivial" => NamedComplex::Trivial(parse(arg)?),
            "pure" => {
                let (n, k) = arg.split_once(',')?;
                NamedComplex::CompletePure(parse(n)?, parse(k)?)
            }
            _ => return None,
        }
    };
    Some(named.realize())
}

fn load_complex(spec: &str) -> Result<SimplicialComplex, Error> {
    if let Some(named) = load_named(spec) {
        return named;
    }
    let path = Path::new(spec);
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::parse(format!("cannot read '{spec}': {e}")))?;
    if text.trim_start().starts_with('{') {
        io::parse_complex_json(&text)
    } else {
        io::parse_complex_text(&text)
    }
}

fn load_pair(spec: &str) -> Result<RelativePair, Error> {
    if let Some((t, s)) = spec.split_once('/') {
        if let (Some(total), Some(sub)) = (load_named(t), load_named(s)) {
            return RelativePair::new(total?, sub?);
        }
    }
    let text = std::fs::read_to_string(spec)
        .map_err(|e| Error::parse(format!("cannot read '{spec}': {e}")))?;
    if text.trim_start().starts_with('{') {
        io::parse_pair_json(&text)
    } else {
        io::parse_pair_text(&text)
    }
}

fn print_complex(c: &SimplicialComplex, json: bool) {
    if json {
        println!("{}", io::complex_to_json(c));
    } else {
        print!("{}", io::complex_to_text(c));
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Compose {
            op,
            slot,
            left,
            right,
            json,
        } => {
            match op {
                OpKind::Join => {
                    let k = load_complex(&left)?;
                    let l = load_complex(&right)?;
                    print_complex(&k.join(&l)?, json);
                }
                OpKind::Subst | OpKind::Comp => {
                    let slot =
                        slot.ok_or_else(|| Error::domain("--slot is required for this operation"))?;
                    let variant = match op {
                        OpKind::Subst => Variant::Subst,
                        _ => Variant::Comp,
                    };
                    let k = load_complex(&left)?;
                    let l = load_complex(&right)?;
                    print_complex(&compose(&k, slot, &l, variant)?, json);
                }
                OpKind::Pair => {
                    let slot =
                        slot.ok_or_else(|| Error::domain("--slot is required for this operation"))?;
                    let p = load_pair(&left)?;
                    let q = load_pair(&right)?;
                    let out = join_compose(&p, slot, &q)?;
                    if json {
                        println!("{}", io::pair_to_json(&out));
                    } else {
                        print!("{}", io::pair_to_text(&out));
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Facets { input, json } => {
            let c = load_complex(&input)?;
            let facets = c.facets();
            if json {
                println!("{}", io::family_to_json(&facets));
            } else {
                print!("{}", io::family_to_text(&facets));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Analyze { input } => {
            let c = load_complex(&input)?;
            let flags = c.family().classify();
            println!("ambient: {}", c.ambient());
            println!(
                "flags: simplicial={} upward={} transversal={} reduced={}",
                flags.is_simplicial, flags.is_upward, flags.is_transversal, flags.is_reduced
            );
            match c.dimension() {
                Some(d) => println!("dimension: {d}"),
                None => println!("dimension: empty"),
            }
            println!("facets: {}", c.facets());
            println!("minimal non-faces: {}", c.minimal_non_faces());
            match euler_characteristic(&c) {
                Ok(chi) => println!("euler characteristic: {chi}"),
                Err(_) => println!("euler characteristic: undefined (empty complex)"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Laws {
            operad,
            max_arity,
            sampled,
            seed,
            workers,
            records,
            list,
        } => {
            if list {
                for (name, bound) in instance_names() {
                    println!("{name} (documented exhaustive bound {bound})");
                }
                return Ok(ExitCode::SUCCESS);
            }
            let mode = match sampled {
                Some(count) => CheckMode::Sampled { count, seed },
                None => CheckMode::Exhaustive,
            };
            let report = run_named_laws(&operad, max_arity, mode, workers)?;
            for l in &report.laws {
                println!(
                    "law={} cases={} violations={}",
                    l.law,
                    l.cases,
                    l.violations.len()
                );
                if records {
                    for v in &l.violations {
                        println!(
                            "violation law={} case={} lhs={} rhs={}",
                            v.law, v.case_id, v.lhs, v.rhs
                        );
                    }
                }
            }
            println!(
                "{} violations in {} cases",
                report.total_violations(),
                report.total_cases()
            );
            if report.is_clean() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(3))
            }
        }
        Command::Decompose {
            variant,
            input,
            bound,
            workers,
        } => {
            let c = load_complex(&input)?;
            match decompose_bounded(&c, variant.into(), bound, workers)? {
                Decomposition::Indecomposable => println!("indecomposable"),
                Decomposition::Witness { outer, slot, inner } => {
                    println!("decomposable at slot {slot}");
                    println!("outer:");
                    print!("{}", io::complex_to_text(&outer));
                    println!("inner:");
                    print!("{}", io::complex_to_text(&inner));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Jconstruct { j, input, json } => {
            let c = load_complex(&input)?;
            let multiplicities = j
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|e| Error::parse(format!("bad multiplicity '{t}': {e}")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            let base = match c.dimension() {
                Some(d) if d <= 2 => PlCertificate::recognized(recognize_low_dim(&c)?),
                _ => PlCertificate::recognized(Recognition::Other),
            };
            let (out, cert) = j_construction_certified(&c, &base, &multiplicities)?;
            print_complex(&out, json);
            eprintln!("certificate:\n{cert}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Pl { input } => {
            let c = load_complex(&input)?;
            match c.dimension() {
                Some(d) if d <= 2 => {
                    let verdict = recognize_low_dim(&c)?;
                    println!("verdict: {verdict}");
                    println!("provenance:\n{}", PlCertificate::recognized(verdict));
                }
                Some(d) => {
                    println!("verdict: unknown (dimension {d} is above the exact range)");
                }
                None => println!("verdict: other (empty complex)"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Convert { to, input } => {
            // arbitrary families are accepted here, not only complexes
            let text = match load_named(&input) {
                Some(c) => io::complex_to_text(&c?),
                None => std::fs::read_to_string(&input)
                    .map_err(|e| Error::parse(format!("cannot read '{input}': {e}")))?,
            };
            let fam = if text.trim_start().starts_with('{') {
                io::parse_family_json(&text)?
            } else {
                io::parse_family_text(&text)?
            };
            match to {
                Format::Text => print!("{}", io::family_to_text(&fam)),
                Format::Json => println!("{}", io::family_to_json(&fam)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate { n, count_only } => {
            let all = powerset_operads::laws::enumerate_complexes(n)?;
            if count_only {
                println!("{}", all.len());
            } else {
                for c in &all {
                    println!("{c}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
            let _ = e.print();
            return code;
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            exit_code_for(&err)
        }
    }
}
