//! `arndt`: enumerate Arndt-type compositions, print count tables and series
//! expansions, export OEIS b-files and run the cross-validation suite.
//!
//! Exit codes: 0 success, 1 verification failure or brute-force cap, 2 usage
//! error, 3 reference mismatch.

mod render;

use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use arndt::bfile::{self, Sequence};
use arndt::bijection::{arndt_to_reduced_ap, reduced_ap_to_arndt};
use arndt::catalog::{CatalogGf, Statistic};
use arndt::enumerate::{BruteForce, DEFAULT_BRUTE_FORCE_CAP};
use arndt::series::DEFAULT_ORDER;
use arndt::tables::{count_triangle, Method};
use arndt::verify::{self, Scope, VerifyOptions};
use arndt::{Composition, Error, Family};
use clap::{Args, Parser, Subcommand, ValueEnum};

use render::Format;

#[derive(Parser)]
#[command(name = "arndt", version, about = "Arndt compositions: enumeration, counts and generating functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the compositions of n in a family, lexicographically decreasing.
    Enumerate {
        #[arg(long = "n", visible_alias = "N")]
        n: usize,
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
        #[command(flatten)]
        cap: CapArgs,
    },
    /// Print rows 0..=N of the count triangle by parts or by last part.
    Table {
        #[arg(value_enum)]
        kind: TableKind,
        #[arg(long = "N", visible_alias = "n")]
        size: usize,
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum, default_value_t = MethodArg::Gf)]
        method: MethodArg,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
        #[command(flatten)]
        cap: CapArgs,
    },
    /// Expand a catalog generating function to order N.
    Series {
        /// One of: arndt, antipalindromic, reduced-ap, last-part,
        /// total-parts, total-last, arndt-total, all, k-arndt, block-arndt,
        /// distinct-parts.
        name: String,
        #[arg(long = "N", visible_aliases = ["n", "order"], default_value_t = DEFAULT_ORDER)]
        order: usize,
        /// Parameter of k-arndt, block-arndt and distinct-parts.
        #[arg(long, allow_hyphen_values = true)]
        k: Option<i64>,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Write an OEIS b-file, or check it against the bundled reference.
    Bfile {
        #[arg(value_enum)]
        sequence: SequenceArg,
        #[arg(long = "N", visible_alias = "n")]
        size: usize,
        /// Compare with the bundled reference prefix; exit 3 on mismatch.
        #[arg(long)]
        check: bool,
        /// With --check, compare against this b-file instead.
        #[arg(long, requires = "check")]
        reference: Option<std::path::PathBuf>,
        #[arg(long, value_enum, default_value_t = MethodArg::Gf)]
        method: MethodArg,
        #[command(flatten)]
        cap: CapArgs,
    },
    /// Map a reduced anti-palindromic representative to its Arndt
    /// composition, or back with --inverse.
    Bijection {
        /// Comma-separated parts, e.g. 2,3,6,2,1.
        parts: String,
        #[arg(long)]
        inverse: bool,
    },
    /// Run the cross-validation suite; exit 1 if any check fails.
    Verify {
        /// all, or one of: composition, enumerator, series, catalog,
        /// closed-forms, bijection, asymptotics, references.
        #[arg(default_value = "all")]
        scope: String,
        /// Lower every weight bound of the suite to at most this value.
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, hide = true)]
        inject_fault: Option<String>,
        #[arg(long, hide = true, allow_hyphen_values = true)]
        fault_k: Option<i64>,
    },
}

#[derive(Args)]
struct FamilyArgs {
    #[arg(long, value_enum, default_value_t = FamilyArg::Arndt)]
    family: FamilyArg,
    /// Required by k-arndt and block-arndt.
    #[arg(long, allow_hyphen_values = true)]
    k: Option<i64>,
}

#[derive(Args)]
struct CapArgs {
    /// Largest n that exhaustive enumeration will accept.
    #[arg(long = "max-n", default_value_t = DEFAULT_BRUTE_FORCE_CAP)]
    cap: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Arndt,
    KArndt,
    BlockArndt,
    Antipalindromic,
    ReducedAp,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableKind {
    Parts,
    Last,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Brute,
    Gf,
    Formula,
}

#[derive(Clone, Copy, ValueEnum)]
enum SequenceArg {
    ArndtTotal,
    PartsTriangleFlat,
    LastSum,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Brute => Method::Brute,
            MethodArg::Gf => Method::Gf,
            MethodArg::Formula => Method::Formula,
        }
    }
}

impl From<SequenceArg> for Sequence {
    fn from(s: SequenceArg) -> Self {
        match s {
            SequenceArg::ArndtTotal => Sequence::ArndtTotal,
            SequenceArg::PartsTriangleFlat => Sequence::PartsTriangleFlat,
            SequenceArg::LastSum => Sequence::LastSum,
        }
    }
}

/// Why the command stopped, mapped onto an exit code.
enum Failure {
    Usage(String),
    Cap(String),
    Verification,
    Mismatch(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BruteForceCap { .. } => Failure::Cap(format!("{e}; raise it with --max-n")),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type Outcome = Result<(), Failure>;

impl FamilyArgs {
    fn resolve(&self) -> Result<Family, Failure> {
        let need_k = |name: &str| {
            self.k
                .ok_or_else(|| Failure::Usage(format!("--family {name} requires --k")))
        };
        let family = match self.family {
            FamilyArg::Arndt => Family::Arndt,
            FamilyArg::KArndt => Family::KArndt(need_k("k-arndt")?),
            FamilyArg::BlockArndt => Family::k_block(need_k("block-arndt")?)?,
            FamilyArg::Antipalindromic => Family::AntiPalindromic,
            FamilyArg::ReducedAp => Family::ReducedApRepresentative,
            FamilyArg::All => Family::Unrestricted,
        };
        if self.k.is_some() && !matches!(self.family, FamilyArg::KArndt | FamilyArg::BlockArndt) {
            return Err(Failure::Usage(format!("--k does not apply to --family {family}")));
        }
        Ok(family)
    }
}

fn parse_parts(text: &str) -> Result<Composition, Failure> {
    let trimmed = text.trim().trim_start_matches('(').trim_end_matches(')');
    if trimmed.is_empty() {
        return Ok(Composition::empty());
    }
    let parts = trimmed
        .split(',')
        .map(|p| p.trim().parse::<u64>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| Failure::Usage(format!("cannot read '{text}' as comma-separated parts")))?;
    Ok(Composition::new(parts)?)
}

fn run(cli: Cli, out: &mut impl Write) -> Outcome {
    match cli.command {
        Command::Enumerate { n, family, format, cap } => {
            let family = family.resolve()?;
            for c in BruteForce::with_cap(cap.cap).members(n, family)? {
                render::composition(out, &c, format)?;
            }
        }
        Command::Table { kind, size, family, method, format, cap } => {
            let family = family.resolve()?;
            let stat = match kind {
                TableKind::Parts => Statistic::Parts,
                TableKind::Last => Statistic::LastPart,
            };
            let tri = count_triangle(family, stat, size, method.into(), BruteForce::with_cap(cap.cap))?;
            render::triangle(out, &tri, size, format)?;
        }
        Command::Series { name, order, k, format } => {
            let entry = CatalogGf::parse(&name, k)?;
            let takes_k = matches!(
                entry,
                CatalogGf::KArndt(_) | CatalogGf::KBlock(_) | CatalogGf::DistinctParts(_)
            );
            if k.is_some() && !takes_k {
                return Err(Failure::Usage(format!("--k does not apply to '{name}'")));
            }
            render::series(out, &entry.build().expand(order), format)?;
        }
        Command::Bfile { sequence, size, check, reference, method, cap } => {
            let seq = Sequence::from(sequence);
            let ours = seq.generate(size, method.into(), BruteForce::with_cap(cap.cap))?;
            out.write_all(bfile::format(&ours).as_bytes())?;
            if check {
                out.flush()?;
                let (label, entries) = match reference {
                    Some(path) => {
                        let text = std::fs::read_to_string(&path)
                            .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
                        (path.display().to_string(), bfile::parse(&text)?)
                    }
                    None => (seq.oeis_id().to_string(), seq.reference()),
                };
                match bfile::compare(&ours, &entries) {
                    Ok(k) => eprintln!("{seq}: {k} terms agree with {label}"),
                    Err(m) => return Err(Failure::Mismatch(format!("{seq} vs {label}: {m}"))),
                }
            }
        }
        Command::Bijection { parts, inverse } => {
            let c = parse_parts(&parts)?;
            let image = if inverse { arndt_to_reduced_ap(&c)? } else { reduced_ap_to_arndt(&c)? };
            writeln!(out, "{image}")?;
        }
        Command::Verify { scope, max_n, inject_fault, fault_k } => {
            let scopes = match scope.as_str() {
                "all" => Scope::ALL.to_vec(),
                s => vec![s.parse::<Scope>()?],
            };
            let opts = VerifyOptions {
                max_n,
                inject_fault: inject_fault.map(|name| CatalogGf::parse(&name, fault_k)).transpose()?,
                brute: BruteForce::default(),
            };
            let outcomes = verify::run(&scopes, &opts);
            for o in &outcomes {
                writeln!(out, "{o}")?;
            }
            let (passed, failed) = verify::summary(&outcomes);
            writeln!(out, "{passed} passed, {failed} failed")?;
            if failed > 0 {
                return Err(Failure::Verification);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli, &mut out).and_then(|()| out.flush().map_err(Failure::Io));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Cap(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Verification) => {
            let _ = out.flush();
            eprintln!("verification failed");
            ExitCode::from(1)
        }
        Err(Failure::Mismatch(msg)) => {
            eprintln!("mismatch: {msg}");
            ExitCode::from(3)
        }
        // a closed pipe (`| head`) is not an error worth reporting
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn argument_definitions_are_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn parts_parsing() {
        assert_eq!(parse_parts("2,3,6").ok().unwrap().parts(), &[2, 3, 6]);
        assert_eq!(parse_parts("(2, 1)").ok().unwrap().parts(), &[2, 1]);
        assert!(parse_parts("()").ok().unwrap().parts().is_empty());
        assert!(parse_parts("2,x").is_err());
        assert!(parse_parts("2,0").is_err());
    }
}
