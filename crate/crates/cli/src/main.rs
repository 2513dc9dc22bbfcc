use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use schur_core::classify::{self, make_dual_pair, make_selfdual};
use schur_core::code::{Limits, DEFAULT_BUDGET};
use schur_core::gf::{prime_power, Field, ProjPoint};
use schur_core::rs::{recover_rs, rs_code};
use schur_core::search::{run_search, SearchConfig};
use schur_core::stab::{decompose, projector_basis, stabilizer};
use schur_core::{random, CodeDoc, Error, LinearCode};

/// Schur products, Reed-Solomon recognition and PMDS classification over
/// small finite fields. Results go to stdout as JSON, diagnostics to stderr.
#[derive(Debug, Parser)]
#[command(name = "schur", version)]
struct Cli {
    /// Seed for generators and searches.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Ceiling on enumerated messages or column subsets.
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Worker threads.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Schur product of two or more codes.
    Product {
        #[arg(num_args = 2.., required = true)]
        codes: Vec<PathBuf>,
    },
    /// Exact minimum distance.
    Mindist { code: PathBuf },
    /// Disjoint-projector basis of the stabilizer algebra.
    Stabilizer { code: PathBuf },
    /// Direct-sum decomposition of a full-support code.
    Decompose { code: PathBuf },
    /// Exit status 1 when the code is not MDS.
    IsMds { code: PathBuf },
    /// Exit status 1 when the code is not Reed-Solomon.
    IsRs { code: PathBuf },
    /// Reed-Solomon certificate, or null with exit status 1.
    RecoverRs { code: PathBuf },
    /// Certificate for a PMDS pair.
    ClassifyPmds { c: PathBuf, d: PathBuf },
    /// Singleton, refined Singleton, Kneser and product Singleton reports.
    CheckBounds {
        #[arg(num_args = 1.., required = true)]
        codes: Vec<PathBuf>,
    },
    /// A Reed-Solomon code; points and multipliers are random unless given.
    MakeRs {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        k: usize,
        /// Length, when `--alpha` is absent.
        #[arg(long)]
        n: Option<usize>,
        /// Comma-separated points, `inf` for infinity.
        #[arg(long, value_delimiter = ',')]
        alpha: Option<Vec<String>>,
        #[arg(long, value_delimiter = ',')]
        g: Option<Vec<u32>>,
        /// Allow infinity among random points.
        #[arg(long)]
        infinity: bool,
    },
    /// The pair ((gD)^perp, D); D is read from a file or drawn at random.
    MakeDualPair {
        d: Option<PathBuf>,
        #[command(flatten)]
        field: OptionalField,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        l: Option<usize>,
        #[arg(long, value_delimiter = ',')]
        g: Option<Vec<u32>>,
        /// Also write C to this file.
        #[arg(long)]
        out_c: Option<PathBuf>,
        /// Also write D to this file.
        #[arg(long)]
        out_d: Option<PathBuf>,
    },
    /// A self-dual code of length 2 * nhalf.
    MakeSelfdual {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        nhalf: usize,
    },
    /// Direct sum on consecutive coordinate blocks.
    MakeDirectSum {
        #[arg(num_args = 2.., required = true)]
        codes: Vec<PathBuf>,
    },
    /// Seeded search streaming PMDS pairs as JSON lines.
    SearchPmds {
        #[arg(long)]
        config: PathBuf,
    },
}

#[derive(Debug, clap::Args)]
struct FieldArgs {
    /// Field order.
    #[arg(long)]
    q: u64,
    /// Comma-separated modulus coefficients, constant term first.
    #[arg(long, value_delimiter = ',')]
    modulus: Option<Vec<u32>>,
}

#[derive(Debug, clap::Args)]
struct OptionalField {
    #[arg(long)]
    q: Option<u64>,
    #[arg(long, value_delimiter = ',')]
    modulus: Option<Vec<u32>>,
}

/// A failure mapped onto an exit status.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::BudgetExceeded { .. }) { 3 } else { 2 };
        Failure { code, message: e.to_string() }
    }
}

fn input(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

type Outcome = Result<bool, Failure>;

fn make_field(q: u64, modulus: Option<&[u32]>) -> Result<Field, Failure> {
    let (p, m) = prime_power(q).ok_or_else(|| input(format!("{q} is not a prime power")))?;
    Ok(Field::new(p, m, modulus)?)
}

fn read_text(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| input(format!("stdin: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| input(format!("{}: {e}", path.display())))
}

fn read_code(path: &Path) -> Result<LinearCode, Failure> {
    let text = read_text(path)?;
    serde_json::from_str(&text).map_err(|e| input(format!("{}: {e}", path.display())))
}

fn read_codes(paths: &[PathBuf]) -> Result<Vec<LinearCode>, Failure> {
    paths.iter().map(|p| read_code(p)).collect()
}

fn emit<T: Serialize>(value: &T) -> Result<(), Failure> {
    let text = serde_json::to_string(value).map_err(|e| input(e.to_string()))?;
    println!("{text}");
    Ok(())
}

fn write_file<T: Serialize>(path: &Path, value: &T) -> Result<(), Failure> {
    let text = serde_json::to_string(value).map_err(|e| input(e.to_string()))?;
    fs::write(path, text + "\n").map_err(|e| input(format!("{}: {e}", path.display())))
}

fn parse_point(s: &str) -> Result<ProjPoint, Failure> {
    let s = s.trim();
    if s.eq_ignore_ascii_case("inf") {
        return Ok(ProjPoint::Infinity);
    }
    s.parse().map(ProjPoint::Finite).map_err(|_| input(format!("bad evaluation point {s:?}")))
}

#[derive(Serialize)]
struct PairDoc {
    c: CodeDoc,
    d: CodeDoc,
}

fn run(cli: Cli) -> Outcome {
    let limits = Limits::with_budget(cli.budget.unwrap_or(DEFAULT_BUDGET));
    let seed = cli.seed.unwrap_or(0);
    match cli.command {
        Command::Product { codes } => {
            let codes = read_codes(&codes)?;
            emit(&CodeDoc::from(LinearCode::product_of(&codes)?))?;
        }
        Command::Mindist { code } => {
            emit(&read_code(&code)?.min_distance(&limits)?)?;
        }
        Command::Stabilizer { code } => {
            let st = stabilizer(&read_code(&code)?)?;
            emit(&projector_basis(&st)?)?;
        }
        Command::Decompose { code } => {
            emit(&decompose(&read_code(&code)?)?)?;
        }
        Command::IsMds { code } => {
            let mds = read_code(&code)?.is_mds(&limits)?;
            emit(&mds)?;
            return Ok(mds);
        }
        Command::IsRs { code } => {
            let rs = recover_rs(&read_code(&code)?, &limits)?.is_some();
            emit(&rs)?;
            return Ok(rs);
        }
        Command::RecoverRs { code } => {
            let cert = recover_rs(&read_code(&code)?, &limits)?;
            emit(&cert)?;
            return Ok(cert.is_some());
        }
        Command::ClassifyPmds { c, d } => {
            let (c, d) = (read_code(&c)?, read_code(&d)?);
            let cert = match classify::classify_pmds(&c, &d, &limits) {
                Ok(cert) => cert,
                Err(e @ Error::NotPmds(_)) => {
                    eprintln!("{e}");
                    return Ok(false);
                }
                Err(e) => return Err(e.into()),
            };
            if !classify::verify_certificate(&cert, &c, &d, &limits) {
                return Err(Error::InternalTheoremViolation("certificate failed verification".into()).into());
            }
            emit(&cert)?;
        }
        Command::CheckBounds { codes } => {
            let reports = classify::bound_reports(&read_codes(&codes)?, &limits)?;
            emit(&reports)?;
            return Ok(reports.iter().all(|r| r.holds));
        }
        Command::MakeRs { field, k, n, alpha, g, infinity } => {
            let f = make_field(field.q, field.modulus.as_deref())?;
            let mut rng = random::rng(seed, 0);
            let alpha = match (alpha, n) {
                (Some(a), _) => a.iter().map(|s| parse_point(s)).collect::<Result<Vec<_>, _>>()?,
                (None, Some(n)) => {
                    let avail = f.q() as usize + infinity as usize;
                    if n > avail {
                        return Err(Error::LengthExceedsQPlus1 { n, q: f.q() }.into());
                    }
                    random::points(&f, n, infinity, &mut rng)
                }
                (None, None) => return Err(input("give --alpha or --n")),
            };
            let g = g.unwrap_or_else(|| random::invertible(&f, alpha.len(), &mut rng));
            emit(&CodeDoc::from(rs_code(&f, &g, &alpha, k)?))?;
        }
        Command::MakeDualPair { d, field, n, l, g, out_c, out_d } => {
            let mut rng = random::rng(seed, 0);
            let d = match d {
                Some(path) => read_code(&path)?,
                None => {
                    let q = field.q.ok_or_else(|| input("give a code file or --q, --n and --l"))?;
                    let f = make_field(q, field.modulus.as_deref())?;
                    let (n, l) = match (n, l) {
                        (Some(n), Some(l)) if 1 <= l && l < n => (n, l),
                        _ => return Err(input("need --n and --l with 1 <= l < n")),
                    };
                    loop {
                        let d = random::full_support_code(&f, n, l, &mut rng);
                        if make_dual_pair(&d, &vec![1; n]).is_ok() {
                            break d;
                        }
                    }
                }
            };
            let g = g.unwrap_or_else(|| random::invertible(d.field(), d.n(), &mut rng));
            let (c, d) = make_dual_pair(&d, &g)?;
            if let Some(path) = out_c {
                write_file(&path, &CodeDoc::from(&c))?;
            }
            if let Some(path) = out_d {
                write_file(&path, &CodeDoc::from(&d))?;
            }
            emit(&PairDoc { c: CodeDoc::from(&c), d: CodeDoc::from(&d) })?;
        }
        Command::MakeSelfdual { field, nhalf } => {
            let f = make_field(field.q, field.modulus.as_deref())?;
            emit(&CodeDoc::from(make_selfdual(&f, nhalf, seed)?))?;
        }
        Command::MakeDirectSum { codes } => {
            let codes = read_codes(&codes)?;
            let mut acc = codes[0].clone();
            for c in &codes[1..] {
                acc = acc.direct_sum(c)?;
            }
            emit(&CodeDoc::from(acc))?;
        }
        Command::SearchPmds { config } => {
            let text = read_text(&config)?;
            let mut cfg: SearchConfig =
                serde_json::from_str(&text).map_err(|e| input(format!("{}: {e}", config.display())))?;
            if let Some(s) = cli.seed {
                cfg.seed = s;
            }
            if let Some(b) = cli.budget {
                cfg.budget = Some(b);
            }
            if let Some(j) = cli.jobs {
                cfg.jobs = Some(j);
            }
            let stdout = io::stdout();
            let mut out = BufWriter::new(stdout.lock());
            let summary = run_search(&cfg, &limits, |rec| {
                serde_json::to_writer(&mut out, rec)?;
                out.write_all(b"\n")
            })?;
            out.flush().map_err(|e| input(e.to_string()))?;
            eprintln!("{}", serde_json::to_string(&summary).map_err(|e| input(e.to_string()))?);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.jobs {
        if j == 0 || rayon::ThreadPoolBuilder::new().num_threads(j).build_global().is_err() {
            eprintln!("invalid --jobs value");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
