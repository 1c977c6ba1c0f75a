//! Command-line interface: compute invariants of braid closures, print
//! generator images and representation matrices, run the verification
//! suites, and manage the frozen oracle corpus.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use planar_rook::braid::parse_word;
use planar_rook::error::Error;
use planar_rook::homs::{duality_check, phi_word, quadratic_report, skein_suite, verify_braid_relations, FamilySpec};
use planar_rook::invariants::{alexander, jones, linking_profile, to_classical_q};
use planar_rook::oracle::{read_corpus, regenerate_corpus, write_corpus};
use planar_rook::report::Report;
use planar_rook::reps::{isomorphism_check, lambda_suite, linking_suite, rho_element, trace_decomposition_check, REP_CAP};
use planar_rook::traces::{markov_suite, partition_vanishing_suite, vip_checks, VIP_CAP};

#[derive(Parser)]
#[command(
    name = "planar-rook",
    about = "Braid-closure invariants through the planar rook algebra",
    long_about = "Computes the Jones polynomial, the Alexander polynomial, and linking-number \
data of braid closures by mapping braid words into the planar rook algebra and taking Markov \
traces. All arithmetic is exact.\n\nBraid words are whitespace-separated nonzero integers: \
letter k > 0 is the positive generator on strands (k, k+1), negative its inverse. Polynomials \
are reported in q with q^2 = t; substituting q -> -q recovers the classical Kauffman-bracket \
convention for the Jones polynomial."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute an invariant of the closure of a braid word
    Invariant(InvariantArgs),
    /// Print the image of a braid word under a coefficient family
    Image(ImageArgs),
    /// Print the subset-space matrix of a braid word's image
    Rep(RepArgs),
    /// Run a named verification suite
    Verify(VerifyArgs),
    /// Regenerate or check the frozen oracle corpus
    Corpus(CorpusArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Jones,
    Alexander,
    Linking,
}

#[derive(Args)]
struct InvariantArgs {
    /// Strand count
    #[arg(long)]
    n: usize,
    /// Braid word, e.g. "1 -2 1 -2"
    #[arg(long)]
    word: String,
    /// Which invariant to compute
    #[arg(long, value_enum)]
    kind: Kind,
    /// Report the Jones polynomial in the classical variable (q -> -q)
    #[arg(long)]
    classical: bool,
    /// Machine-readable JSON output
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ImageArgs {
    /// Coefficient family 1..=5
    #[arg(long)]
    family: u8,
    /// Use the rescaled variant (family 2 only)
    #[arg(long)]
    rescaled: bool,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    word: String,
}

#[derive(Args)]
struct RepArgs {
    #[arg(long)]
    n: usize,
    /// Subset size 0..=n
    #[arg(long)]
    k: usize,
    #[arg(long)]
    word: String,
    /// Coefficient family for the word image
    #[arg(long, default_value_t = 1)]
    family: u8,
    /// Use the rescaled variant (family 2 only)
    #[arg(long)]
    rescaled: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Relations,
    Duality,
    Skein,
    Traces,
    Vip,
    Reps,
    All,
}

#[derive(Args)]
struct VerifyArgs {
    /// Which suite to run
    #[arg(long, value_enum)]
    suite: Suite,
    /// Restrict the relations suite to one family
    #[arg(long)]
    family: Option<u8>,
    /// Strand-count cap where a suite supports one
    #[arg(long)]
    n: Option<usize>,
    /// Seed for the randomized suites
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of random words per check
    #[arg(long, default_value_t = 25)]
    words: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CorpusAction {
    Regen,
    Check,
}

#[derive(Args)]
struct CorpusArgs {
    #[arg(value_enum)]
    action: CorpusAction,
    /// Corpus file path
    #[arg(long, default_value = "data/corpus.jsonl")]
    corpus: PathBuf,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::BadToken(_)
                | Error::GeneratorOutOfRange { .. }
                | Error::IndexOutOfRange(_)
                | Error::BadPartition(_)
                | Error::SizeMismatch(_, _)
                | Error::CapExceeded { .. }
                | Error::TooManyCrossings { .. } => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Invariant(args) => invariant_cmd(args),
        Command::Image(args) => image_cmd(args),
        Command::Rep(args) => rep_cmd(args),
        Command::Verify(args) => verify_cmd(args),
        Command::Corpus(args) => corpus_cmd(args),
    }
}

fn invariant_cmd(args: InvariantArgs) -> Result<ExitCode, Error> {
    let w = parse_word(&args.word, args.n)?;
    let mut poly_text: Option<String> = None;
    let mut linking: Option<Vec<Vec<i64>>> = None;
    let kind = match args.kind {
        Kind::Jones => {
            let v = jones(&w)?;
            let v = if args.classical { to_classical_q(&v) } else { v };
            poly_text = Some(v.to_string());
            "jones"
        }
        Kind::Alexander => {
            poly_text = Some(alexander(&w)?.to_string());
            "alexander"
        }
        Kind::Linking => {
            linking = Some(linking_profile(&w).linking_int());
            "linking"
        }
    };
    if args.json {
        let value = serde_json::json!({
            "kind": kind,
            "n": args.n,
            "word": w.letters(),
            "polynomial": poly_text,
            "linking": linking,
        });
        println!("{value}");
    } else {
        match args.kind {
            Kind::Linking => print!("{}", linking_profile(&w)),
            _ => println!("{}", poly_text.unwrap()),
        }
        println!();
    }
    Ok(ExitCode::SUCCESS)
}

fn family_spec(family: u8, rescaled: bool) -> Result<FamilySpec, Error> {
    FamilySpec::new(family, rescaled)
}

fn image_cmd(args: ImageArgs) -> Result<ExitCode, Error> {
    let spec = family_spec(args.family, args.rescaled)?;
    let w = parse_word(&args.word, args.n)?;
    println!("{}", phi_word(spec, &w));
    Ok(ExitCode::SUCCESS)
}

fn rep_cmd(args: RepArgs) -> Result<ExitCode, Error> {
    let spec = family_spec(args.family, args.rescaled)?;
    let w = parse_word(&args.word, args.n)?;
    if args.k > args.n {
        return Err(Error::IndexOutOfRange(format!(
            "subset size {} exceeds {} strands",
            args.k, args.n
        )));
    }
    print!("{}", rho_element(args.k, &phi_word(spec, &w)));
    Ok(ExitCode::SUCCESS)
}

fn verify_cmd(args: VerifyArgs) -> Result<ExitCode, Error> {
    let mut reports: Vec<Report> = Vec::new();
    let families: Vec<FamilySpec> = match args.family {
        Some(f) => vec![family_spec(f, false)?],
        None => (1..=5)
            .map(|f| FamilySpec::plain(f).expect("family in range"))
            .collect(),
    };
    let run_relations = |reports: &mut Vec<Report>| {
        for &spec in &families {
            reports.push(verify_braid_relations(spec));
        }
        if args.family.is_none() || args.family == Some(2) {
            reports.push(verify_braid_relations(FamilySpec::rescaled_two()));
        }
    };
    match args.suite {
        Suite::Relations => run_relations(&mut reports),
        Suite::Duality => reports.push(duality_check()),
        Suite::Skein => {
            reports.push(skein_suite(args.words, 8, args.seed));
            reports.push(quadratic_report());
        }
        Suite::Traces => reports.push(markov_suite(args.words, args.seed)),
        Suite::Vip => {
            let hi = args.n.unwrap_or(VIP_CAP).min(VIP_CAP);
            for n in 2..=hi {
                reports.push(vip_checks(n)?);
            }
            reports.push(partition_vanishing_suite(5.min(hi)));
        }
        Suite::Reps => {
            let hi = args.n.unwrap_or(REP_CAP).min(REP_CAP);
            for n in 2..=hi {
                reports.push(isomorphism_check(n)?);
                reports.push(trace_decomposition_check(n, 5, args.seed)?);
            }
            reports.push(lambda_suite(args.words, args.seed));
            reports.push(linking_suite(args.words, args.seed));
        }
        Suite::All => {
            run_relations(&mut reports);
            reports.push(duality_check());
            reports.push(skein_suite(args.words, 8, args.seed));
            reports.push(quadratic_report());
            reports.push(markov_suite(args.words, args.seed));
            for n in 2..=VIP_CAP {
                reports.push(vip_checks(n)?);
            }
            reports.push(partition_vanishing_suite(5));
            for n in 2..=REP_CAP {
                reports.push(isomorphism_check(n)?);
                reports.push(trace_decomposition_check(n, 5, args.seed)?);
            }
            reports.push(lambda_suite(args.words, args.seed));
            reports.push(linking_suite(args.words, args.seed));
        }
    }
    let mut ok = true;
    for r in &reports {
        println!("{r}");
        println!();
        ok &= r.all_passed();
    }
    Ok(if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn corpus_cmd(args: CorpusArgs) -> Result<ExitCode, Error> {
    match args.action {
        CorpusAction::Regen => {
            let entries = regenerate_corpus()?;
            write_corpus(&args.corpus, &entries)?;
            println!("wrote {} entries to {}", entries.len(), args.corpus.display());
            Ok(ExitCode::SUCCESS)
        }
        CorpusAction::Check => {
            let frozen = read_corpus(&args.corpus)?;
            let fresh = regenerate_corpus()?;
            let mut ok = true;
            for f in &fresh {
                match frozen.iter().find(|e| e.name == f.name) {
                    Some(e) if e == f => println!("[PASS] {}", f.name),
                    Some(e) => {
                        ok = false;
                        println!("[FAIL] {}: frozen {:?} vs recomputed {:?}", f.name, e, f);
                    }
                    None => {
                        ok = false;
                        println!("[FAIL] {}: missing from corpus file", f.name);
                    }
                }
            }
            if frozen.len() != fresh.len() {
                ok = false;
                println!(
                    "[FAIL] corpus has {} entries, expected {}",
                    frozen.len(),
                    fresh.len()
                );
            }
            Ok(if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}
