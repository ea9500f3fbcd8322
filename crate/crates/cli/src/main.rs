use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use matroid_rough::connectivity::{connectivity_report, DEFAULT_EXHAUSTIVE_BOUND};
use matroid_rough::io::{
    emit_dot, emit_text_stream, to_json, ConnectivityDocument, MatroidDocument, VerifyEntry,
    VerifyReport,
};
use matroid_rough::oracle::{generate, is_known_erratum, GeneratorSpec};
use matroid_rough::{
    induced_graph, induced_relation, induced_relation_allow_free, BinaryRelation, Error, Matroid,
};

const EXIT_DATA: u8 = 1;
const EXIT_ERRATA: u8 = 3;
const EXIT_FAILURE: u8 = 4;

/// Matroids, circuit-induced relations, rough approximations and
/// connectivity.
///
/// FILE arguments are matroid documents in the text or JSON format; `-`
/// reads standard input.
#[derive(Parser)]
#[command(name = "mrough", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Matroid document (`-` for standard input).
    file: PathBuf,
}

#[derive(Args)]
struct SetArg {
    /// Comma-separated labels, e.g. `a1,a4`; empty for the empty set.
    #[arg(long, allow_hyphen_values = true)]
    set: String,
}

#[derive(Args)]
struct Bound {
    /// Largest ground set on which scans over every subset run.
    #[arg(long, env = "MROUGH_EXHAUSTIVE_BOUND", default_value_t = DEFAULT_EXHAUSTIVE_BOUND)]
    exhaustive_bound: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Print the circuits, smallest first.
    Circuits(Input),
    /// Print the rank of a set.
    Rank {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        set: SetArg,
    },
    /// Print the closure of a set.
    Closure {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        set: SetArg,
    },
    /// Print the relation induced by the circuits and its properties.
    Relation {
        #[command(flatten)]
        input: Input,
        /// Accept a matroid without circuits (its relation is empty).
        #[arg(long)]
        allow_free: bool,
    },
    /// Print the lower or upper approximation of a set.
    Approx {
        #[command(flatten)]
        input: Input,
        #[arg(long, conflicts_with = "lower", required_unless_present = "lower")]
        upper: bool,
        #[arg(long)]
        lower: bool,
        #[command(flatten)]
        set: SetArg,
        /// Accept a matroid without circuits (its relation is empty).
        #[arg(long)]
        allow_free: bool,
    },
    /// Print the graph linking elements that share a circuit.
    Graph {
        #[command(flatten)]
        input: Input,
        /// Emit Graphviz DOT instead of an edge list.
        #[arg(long)]
        dot: bool,
    },
    /// Print the connected components.
    Components(Input),
    /// Decide connectivity and show a disconnecting set.
    Connected {
        #[command(flatten)]
        input: Input,
        /// Print every criterion as JSON.
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        bound: Bound,
    },
    /// Run the axiom checks and the statement battery; print a JSON report.
    ///
    /// Exit status: 0 when everything holds, 3 when only known errata fail,
    /// 4 when any other statement fails, 1 on unreadable input.
    Verify {
        /// Matroid documents; each may hold several documents.
        #[arg(required_unless_present = "fixtures")]
        files: Vec<PathBuf>,
        /// Also verify the built-in reference matroids.
        #[arg(long)]
        fixtures: bool,
        #[command(flatten)]
        bound: Bound,
        /// Exit 0 when the only failures are known errata.
        #[arg(long)]
        allow_known_errata: bool,
        /// Write the report here instead of standard output.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Generate matroids and print them as circuit documents.
    Generate {
        /// uniform:K,N | graphic:V,E | vector:R,C | sum(SPEC;...) |
        /// exhaustive:N | mixed:COUNT
        #[arg(long)]
        spec: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Print a JSON array instead of `---`-separated text.
        #[arg(long)]
        json: bool,
    },
}

enum Failure {
    Data(String),
    Exit(u8),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Data(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Data(e.to_string())
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::Data(format!("{}: {e}", path.display())))
    }
}

fn load(input: &Input) -> Result<Matroid, Failure> {
    let text = read(&input.file)?;
    MatroidDocument::parse(&text)
        .and_then(|d| d.build())
        .map_err(|e| Failure::Data(format!("{}: {e}", input.file.display())))
}

fn relation(m: &Matroid, allow_free: bool) -> Result<BinaryRelation, Failure> {
    if allow_free {
        Ok(induced_relation_allow_free(m))
    } else {
        Ok(induced_relation(m)?)
    }
}

fn run(cli: Cli, out: &mut impl Write) -> Result<(), Failure> {
    match cli.command {
        Command::Circuits(input) => {
            let m = load(&input)?;
            writeln!(out, "{}", m.circuits())?;
            if m.is_free() {
                eprintln!("note: free matroid, no circuits");
            }
        }
        Command::Rank { input, set } => {
            let m = load(&input)?;
            writeln!(out, "{}", m.rank(&m.ground().parse_set(&set.set)?)?)?;
        }
        Command::Closure { input, set } => {
            let m = load(&input)?;
            writeln!(out, "{}", m.closure(&m.ground().parse_set(&set.set)?)?)?;
        }
        Command::Relation { input, allow_free } => {
            let m = load(&input)?;
            let r = relation(&m, allow_free)?;
            let p = r.properties();
            writeln!(out, "{r}")?;
            writeln!(
                out,
                "serial={} reflexive={} symmetric={} transitive={}",
                p.serial, p.reflexive, p.symmetric, p.transitive
            )?;
        }
        Command::Approx {
            input,
            upper,
            set,
            allow_free,
            ..
        } => {
            let m = load(&input)?;
            let r = relation(&m, allow_free)?;
            let x = m.ground().parse_set(&set.set)?;
            let y = if upper {
                r.upper_approx(&x)?
            } else {
                r.lower_approx(&x)?
            };
            writeln!(out, "{y}")?;
        }
        Command::Graph { input, dot } => {
            let m = load(&input)?;
            let g = induced_graph(&m)?;
            if dot {
                write!(out, "{}", emit_dot(&g))?;
            } else {
                let l = m.ground().labels();
                for (x, y) in g.edges() {
                    writeln!(out, "{} -- {}", l[x], l[y])?;
                }
            }
        }
        Command::Components(input) => {
            let m = load(&input)?;
            writeln!(
                out,
                "{}",
                matroid_rough::connectivity::matroid_components(&m)
            )?;
        }
        Command::Connected { input, json, bound } => {
            let m = load(&input)?;
            let report = connectivity_report(&m, bound.exhaustive_bound);
            if json {
                write!(out, "{}", to_json(&ConnectivityDocument::from(&report)))?;
            } else if report.connected {
                writeln!(out, "connected; components: {}", report.components)?;
            } else {
                let witness = report.witness_set().expect("disconnected");
                writeln!(
                    out,
                    "disconnected; components: {}; witness X={witness}",
                    report.components
                )?;
            }
            if !report.agreement {
                eprintln!("warning: connectivity criteria disagree");
            }
        }
        Command::Verify {
            files,
            fixtures,
            bound,
            allow_known_errata,
            output,
        } => {
            let b = bound.exhaustive_bound;
            let mut entries = Vec::new();
            if fixtures {
                for (name, m) in matroid_rough::fixtures::all() {
                    entries.push(VerifyEntry::new(name, &m, b));
                }
            }
            for path in &files {
                let text = read(path)?;
                let docs = MatroidDocument::parse_all(&text)
                    .map_err(|e| Failure::Data(format!("{}: {e}", path.display())))?;
                let many = docs.len() > 1;
                for (i, doc) in docs.iter().enumerate() {
                    let name = if many {
                        format!("{}#{}", path.display(), i + 1)
                    } else {
                        path.display().to_string()
                    };
                    let m = doc
                        .build()
                        .map_err(|e| Failure::Data(format!("{name}: {e}")))?;
                    entries.push(VerifyEntry::new(name, &m, b));
                }
            }
            let report = VerifyReport::new(b, entries);
            let json = to_json(&report);
            match output {
                Some(p) => std::fs::write(&p, json)
                    .map_err(|e| Failure::Data(format!("{}: {e}", p.display())))?,
                None => write!(out, "{json}")?,
            }
            let s = report.summary;
            eprintln!(
                "{} matroids: {} hold, {} fail, {} known errata, {} inapplicable, {} skipped",
                s.matroids, s.holds, s.fails, s.known_errata, s.inapplicable, s.skipped
            );
            for e in &report.entries {
                for row in e.battery.iter().filter(|r| r.status == "fails") {
                    let tag = if is_known_erratum(&row.id) {
                        "known erratum"
                    } else {
                        "FAIL"
                    };
                    eprintln!(
                        "{tag}: {} {} {}",
                        e.name,
                        row.id,
                        row.witness.as_deref().unwrap_or("")
                    );
                }
            }
            if s.fails > 0 {
                return Err(Failure::Exit(EXIT_FAILURE));
            }
            if s.known_errata > 0 && !allow_known_errata {
                return Err(Failure::Exit(EXIT_ERRATA));
            }
        }
        Command::Generate { spec, seed, json } => {
            let spec = GeneratorSpec::new(spec.parse()?, seed);
            let docs: Vec<MatroidDocument> = generate(&spec)?
                .iter()
                .map(MatroidDocument::from_matroid)
                .collect();
            if json {
                write!(out, "{}", to_json(&docs))?;
            } else {
                write!(out, "{}", emit_text_stream(&docs))?;
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = run(cli, &mut out);
    let flushed = out.flush();
    match (result, flushed) {
        (Ok(()), Ok(())) => ExitCode::SUCCESS,
        (Err(Failure::Exit(code)), _) => ExitCode::from(code),
        (Err(Failure::Data(msg)), _) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_DATA)
        }
        (Ok(()), Err(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_DATA)
        }
    }
}
