use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use sdfa_core::classify::classify_ring;
use sdfa_core::dsl::{parse_element, parse_ideal, parse_ring};
use sdfa_core::harness::{all_passed, build_corpus, registry, CorpusSpec, Harness};
use sdfa_core::report::ReportDocument;
use sdfa_core::{is_prime, is_sdf_bruteforce, is_weakly_prime, is_weakly_sdf_bruteforce, sdf, Error};

const EXIT_FAILED: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_RESOURCE: u8 = 3;
const EXIT_INTERNAL: u8 = 4;

#[derive(Parser)]
#[command(name = "sdfa", version, about = "Classify ideals of finite commutative rings and check sdf-absorption theorems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Property {
    Sdf,
    WeaklySdf,
    Prime,
    WeaklyPrime,
}

#[derive(Subcommand)]
enum Command {
    /// Classify every ideal of a ring given in the ring-spec language.
    Classify {
        spec: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Include raw element indices next to rendered elements.
        #[arg(long)]
        raw: bool,
    },
    /// Run the property suite over a ring corpus. Exits 1 if any property fails.
    Verify {
        #[arg(long)]
        zn_max: Option<usize>,
        /// Run only these properties (repeatable).
        #[arg(long, num_args = 1..)]
        only: Vec<String>,
        #[arg(long)]
        seed: Option<u64>,
        /// JSON corpus spec; missing fields take the defaults.
        #[arg(long)]
        corpus: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        raw: bool,
        /// List property ids and descriptions, then exit.
        #[arg(long)]
        list: bool,
    },
    /// Print a certified failure pair for one property of one ideal, or "holds".
    Witness {
        spec: String,
        /// Ideal generators, e.g. "[(0,0,1)]".
        #[arg(long)]
        gens: String,
        #[arg(long, value_enum)]
        property: Property,
        /// Check this pair instead of searching.
        #[arg(long, num_args = 2, value_names = ["A", "B"])]
        pair: Option<Vec<String>>,
    },
}

enum Outcome {
    Ok,
    Failed,
}

fn emit(doc: &ReportDocument, format: Format, out: Option<&PathBuf>) -> Result<(), Error> {
    let text = match format {
        Format::Json => doc.to_json()?,
        Format::Csv => doc.to_csv()?,
        Format::Text => doc.to_text(),
    };
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| Error::Input(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn classify(spec: &str, format: Format, out: Option<&PathBuf>, raw: bool) -> Result<Outcome, Error> {
    let ring = parse_ring(spec)?;
    let c = classify_ring(&ring)?;
    emit(&ReportDocument::classification(&c, raw), format, out)?;
    Ok(Outcome::Ok)
}

#[allow(clippy::too_many_arguments)]
fn verify(
    zn_max: Option<usize>,
    only: &[String],
    seed: Option<u64>,
    corpus: Option<&PathBuf>,
    format: Format,
    out: Option<&PathBuf>,
    raw: bool,
    list: bool,
) -> Result<Outcome, Error> {
    if list {
        for p in registry() {
            let sampled = if p.sampled { " [sampled]" } else { "" };
            println!("{:<40} {}{sampled}", p.id, p.description);
        }
        return Ok(Outcome::Ok);
    }
    let mut spec = match corpus {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
            CorpusSpec::from_json(&text)?
        }
        None => CorpusSpec::default(),
    };
    if let Some(n) = zn_max {
        spec.zn_max = n;
    }
    if let Some(s) = seed {
        spec.seed = s;
    }
    let harness = Harness::new(build_corpus(&spec)?);
    let results = if only.is_empty() { harness.run_all() } else { harness.run_only(only)? };
    let passed = all_passed(&results);
    let doc = ReportDocument::verification(&spec, harness.corpus.rings.len(), results, raw);
    emit(&doc, format, out)?;
    Ok(if passed { Outcome::Ok } else { Outcome::Failed })
}

fn witness(spec: &str, gens: &str, property: Property, pair: Option<&[String]>) -> Result<Outcome, Error> {
    let ring = parse_ring(spec)?;
    let ideal = parse_ideal(&ring, gens)?;
    if let Some(pair) = pair {
        let a = parse_element(&ring, &pair[0])?;
        let b = parse_element(&ring, &pair[1])?;
        let certifies = match property {
            Property::Sdf => sdf::check_sdf_witness(&ideal, a, b),
            Property::WeaklySdf => sdf::check_weakly_sdf_witness(&ideal, a, b),
            Property::Prime => sdf::check_prime_witness(&ideal, a, b),
            Property::WeaklyPrime => sdf::check_weakly_prime_witness(&ideal, a, b),
        };
        return Ok(if certifies {
            println!("certified a={}, b={}", ring.render(a), ring.render(b));
            Outcome::Ok
        } else {
            println!("not a witness");
            Outcome::Failed
        });
    }
    let verdict = match property {
        Property::Sdf => is_sdf_bruteforce(&ideal)?,
        Property::WeaklySdf => is_weakly_sdf_bruteforce(&ideal)?,
        Property::Prime => is_prime(&ideal)?,
        Property::WeaklyPrime => is_weakly_prime(&ideal)?,
    };
    if !verdict.recheck(&ideal) {
        return Err(Error::Disagreement {
            criterion: "certificate recheck".into(),
            ring: ring.label().to_string(),
            ideal: ideal.render(),
        });
    }
    match verdict.witness {
        Some((a, b)) => println!("witness a={}, b={}", ring.render(a), ring.render(b)),
        None => println!("holds"),
    }
    Ok(Outcome::Ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Classify { spec, format, out, raw } => classify(spec, *format, out.as_ref(), *raw),
        Command::Verify { zn_max, only, seed, corpus, format, out, raw, list } => {
            verify(*zn_max, only, *seed, corpus.as_ref(), *format, out.as_ref(), *raw, *list)
        }
        Command::Witness { spec, gens, property, pair } => witness(spec, gens, *property, pair.as_deref()),
    };
    match result {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Failed) => ExitCode::from(EXIT_FAILED),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match &e {
                Error::Resource { .. } => EXIT_RESOURCE,
                e if e.is_input_error() => EXIT_INPUT,
                _ => EXIT_INTERNAL,
            })
        }
    }
}
