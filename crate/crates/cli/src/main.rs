use clap::{Args, Parser, Subcommand};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use torsidl::commands::{self, Closure, LatticeQuery, PairSelector, Session};
use torsidl::suites::corpora_dir;
use torsidl::{cache, CliError, Report, WindowSpec};
use torsidl_lattice::{TdOptions, DEFAULT_BUDGET};

#[derive(Parser)]
#[command(
    name = "torsidl",
    version,
    about = "Ideal torsion pairs, radical ranks and subfunctor lattices on module windows"
)]
struct Cli {
    /// Window cache directory [default: $TORSIDL_CACHE or ./.torsidl]
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Source {
    /// Cached window key (or unique prefix) from `window build`.
    #[arg(long, conflicts_with = "corpus")]
    window: Option<String>,
    /// Corpus directory containing corpus.json.
    #[arg(long)]
    corpus: Option<PathBuf>,
    /// Extend the window by this many Auslander-Reiten translates of projectives and injectives.
    #[arg(long, default_value_t = 0)]
    extend: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Validate and cache a window.
    Window {
        #[command(subcommand)]
        action: WindowAction,
    },
    /// Report on an ideal torsion pair.
    Pair {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, requires = "objects", conflicts_with = "subfunctor")]
        closure: Option<Closure>,
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        objects: Vec<String>,
        /// zero, one, or OBJECT:c1,c2,... (the subfunctor generated by one vector)
        #[arg(long)]
        subfunctor: Option<String>,
    },
    /// Radical chain and projective rank of an object.
    Rank {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        module: String,
        #[arg(long, default_value_t = 8)]
        depth: usize,
        #[arg(long, default_value_t = 2)]
        omega_budget: usize,
    },
    /// Subfunctor lattice queries.
    Lattice {
        #[command(flatten)]
        source: Source,
        #[arg(long, group = "query")]
        enumerate: bool,
        #[arg(long, group = "query")]
        mdim: bool,
        /// Torsion-dimension report.
        #[arg(long, group = "query")]
        td: bool,
        /// Descending chain certificate below a deep radical map SOURCE -> TARGET.
        #[arg(long, group = "query", requires_all = ["from", "to"])]
        certify: bool,
        /// Iterated extension chain of the pair generated by --objects.
        #[arg(long, group = "query", requires = "objects")]
        diamond: bool,
        #[arg(long)]
        from: Option<String>,
        #[arg(long)]
        to: Option<String>,
        #[arg(long, default_value_t = 4)]
        depth: usize,
        #[arg(long, default_value_t = 8)]
        omega_depth: usize,
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        objects: Vec<String>,
        #[arg(long, default_value_t = 4)]
        n_max: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Run a bundled verification suite (or `all`).
    Verify {
        #[arg(long)]
        suite: String,
        /// Corpora directory [default: $TORSIDL_CORPORA, ./corpora, or the source tree]
        #[arg(long)]
        corpora: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum WindowAction {
    Build {
        #[arg(long, conflicts_with_all = ["algebra", "modules"])]
        corpus: Option<PathBuf>,
        #[arg(long, requires = "modules")]
        algebra: Option<PathBuf>,
        #[arg(long, num_args = 1..)]
        modules: Vec<PathBuf>,
        /// The modules are all indecomposables up to isomorphism.
        #[arg(long)]
        complete: bool,
    },
}

fn load_source(src: &Source, cache_dir: &Path) -> Result<Session, CliError> {
    let spec = match (&src.window, &src.corpus) {
        (Some(key), _) => cache::load(cache_dir, key)?.spec,
        (None, Some(dir)) => WindowSpec::from_corpus(dir)?,
        (None, None) => return Err(CliError::Usage("give --window KEY or --corpus DIR".into())),
    };
    Session::new(&spec, src.extend)
}

fn run(cli: Cli) -> Result<(Report, Option<CliError>), CliError> {
    let cache_dir = cache::cache_dir(cli.cache_dir.as_deref());
    let report = match cli.command {
        Command::Window { action: WindowAction::Build { corpus, algebra, modules, complete } } => {
            let spec = match (corpus, algebra) {
                (Some(dir), _) => WindowSpec::from_corpus(&dir)?,
                (None, Some(alg)) => WindowSpec::from_files(&alg, &modules, complete)?,
                (None, None) => {
                    return Err(CliError::Usage("give --corpus DIR or --algebra FILE --modules FILE...".into()))
                }
            };
            commands::window_build(&spec, &cache_dir)?
        }
        Command::Pair { source, closure, objects, subfunctor } => {
            let s = load_source(&source, &cache_dir)?;
            let sel = match (closure, subfunctor) {
                (Some(c), None) => PairSelector::Closure(c, objects),
                (None, Some(seed)) => PairSelector::Subfunctor(seed),
                _ => return Err(CliError::Usage("give --closure KIND --objects ... or --subfunctor SEED".into())),
            };
            commands::pair(&s, &sel)?
        }
        Command::Rank { source, module, depth, omega_budget } => {
            commands::rank(&load_source(&source, &cache_dir)?, &module, depth, omega_budget)?
        }
        Command::Lattice {
            source,
            enumerate,
            mdim,
            td,
            certify,
            diamond,
            from,
            to,
            depth,
            omega_depth,
            objects,
            n_max,
            budget,
        } => {
            let q = if enumerate {
                LatticeQuery::Enumerate { budget }
            } else if mdim {
                LatticeQuery::Mdim { budget }
            } else if td {
                LatticeQuery::TorsionDimension(TdOptions {
                    budget,
                    certificate_depth: depth,
                    omega_depth,
                    ..TdOptions::default()
                })
            } else if certify {
                let (source, target) = (from.unwrap_or_default(), to.unwrap_or_default());
                LatticeQuery::Certify { source, target, depth, omega_depth }
            } else if diamond {
                LatticeQuery::Diamond { objects, n_max }
            } else {
                return Err(CliError::Usage("give one of --enumerate, --mdim, --td, --certify, --diamond".into()));
            };
            commands::lattice(&load_source(&source, &cache_dir)?, &q)?
        }
        Command::Verify { suite, corpora } => {
            let (report, outcomes) = commands::verify(&suite, &corpora_dir(corpora.as_deref()))?;
            let mut failure = None;
            for o in &outcomes {
                let status = if o.passed { "pass" } else { "FAIL" };
                eprintln!("{status} {} ({} ms)", o.suite, o.elapsed_ms);
                if let (None, Some(c)) = (&failure, o.first_failure()) {
                    failure = Some(CliError::Verification(format!("{}: {} ({})", o.suite, c.name, c.detail)));
                }
            }
            return Ok((report, failure));
        }
    };
    Ok((report, None))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let out = cli.out.clone();
    let result = run(cli).and_then(|(report, failure)| {
        let json = report.to_canonical_json();
        match &out {
            Some(path) => std::fs::write(path, json)?,
            None => print!("{json}"),
        }
        failure.map_or(Ok(()), Err)
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
