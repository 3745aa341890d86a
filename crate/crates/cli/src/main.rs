use std::fmt::Display;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use stringtop::dialgebra::{classify, text as dtext, Axiom, Cell, Dialgebra};
use stringtop::graph::{self, text as gtext, AmbientGraph, Boundary, GraphPath, PathChain};
use stringtop::linear::{FormalSum, Tensor};
use stringtop::surface::{self, CyclicWord, SurfaceSymbol};
use stringtop::suites::{self, DEFAULT_SEED};
use stringtop::tqft::{self, text as ttext, Sector};
use stringtop::{Rational, Scalar};

#[derive(Parser)]
#[command(name = "stringtop", version, about = "Exact string-topology operations: Goldman-Turaev, dialgebras, open strings on graphs, 1+1 TQFT")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SurfaceArgs {
    /// Preset surface: torus-1 (a,b,A,B) or pants (a,A,b,B)
    #[arg(long, conflicts_with = "symbol")]
    surface: Option<String>,
    /// Half-edge cyclic order, e.g. a,b,A,B
    #[arg(long)]
    symbol: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum SectorArg {
    Closed,
    Open,
}

impl From<SectorArg> for Sector {
    fn from(s: SectorArg) -> Self {
        match s {
            SectorArg::Closed => Sector::Closed,
            SectorArg::Open => Sector::Open,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Goldman bracket of two cyclic words
    Bracket {
        #[command(flatten)]
        surface: SurfaceArgs,
        word1: String,
        word2: String,
    },
    /// Turaev cobracket of a cyclic word
    Cobracket {
        #[command(flatten)]
        surface: SurfaceArgs,
        word: String,
    },
    /// Antisymmetry, Jacobi, co-antisymmetry, cojacobi and Drinfeld checks
    BialgebraSuite {
        #[command(flatten)]
        surface: SurfaceArgs,
        #[arg(long, default_value_t = 4)]
        max_len: usize,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        /// Maximum length of the random words
        #[arg(long, default_value_t = 8)]
        sample_len: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Check dialgebra axioms exhaustively on basis tuples
    DialgebraCheck {
        file: PathBuf,
        /// Comma-separated axiom names, or `all`
        #[arg(long, default_value = "all")]
        axioms: String,
        /// Koszul-signed actions
        #[arg(long)]
        koszul: bool,
    },
    /// Place a dialgebra in the six-cell table
    Classify {
        file: PathBuf,
        #[arg(long)]
        koszul: bool,
    },
    /// Evaluate a bordism on a basis tuple
    TqftEval {
        dialgebra: PathBuf,
        bordism: PathBuf,
        /// Comma-separated basis symbols, one per incoming boundary
        #[arg(long)]
        input: String,
        #[arg(long, value_enum, default_value = "closed")]
        sector: SectorArg,
    },
    /// Compare random decompositions with the normal form
    TqftInvariance {
        dialgebra: PathBuf,
        #[arg(long, default_value_t = 2)]
        genus_max: usize,
        #[arg(long, default_value_t = 3)]
        ports_max: usize,
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, value_enum, default_value = "closed")]
        sector: SectorArg,
    },
    /// Open string operations on a graph file
    Graph {
        file: PathBuf,
        #[command(subcommand)]
        op: GraphOp,
    },
    /// Run every acceptance suite
    Selftest {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum GraphOp {
    /// Concatenate two paths (`e1.e2` or `@v`)
    Compose { left: String, right: String },
    /// Cut a sum of paths at a label: all interior crossings, one index, or an endpoint
    Cut {
        #[arg(required = true)]
        paths: Vec<String>,
        #[arg(long)]
        label: String,
        #[arg(long, conflicts_with = "boundary")]
        at: Option<usize>,
        #[arg(long, value_parser = ["start", "end"])]
        boundary: Option<String>,
    },
    /// Keep the terms starting (or ending) in a label
    Restrict {
        #[arg(required = true)]
        paths: Vec<String>,
        #[arg(long, conflicts_with = "end", required_unless_present = "end")]
        start: Option<String>,
        #[arg(long)]
        end: Option<String>,
    },
}

/// Input problems; always exit status 2.
struct InputError(String);

impl<E: Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

type Res = Result<ExitCode, InputError>;

fn status(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Command) -> Res {
    match cmd {
        Command::Bracket { surface, word1, word2 } => {
            let s = load_surface(&surface)?;
            let (a, b) = (state(&s, &word1)?, state(&s, &word2)?);
            print!("{}", surface::bracket(&s, &a, &b)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Cobracket { surface, word } => {
            let s = load_surface(&surface)?;
            print!("{}", surface::cobracket(&s, &state(&s, &word)?)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::BialgebraSuite { surface, max_len, samples, sample_len, seed } => {
            let s = load_surface(&surface)?;
            if sample_len == 0 {
                return Err(InputError("--sample-len must be positive".into()));
            }
            let suite = suites::lie_bialgebra_suite(&s, max_len, samples, sample_len, seed);
            println!("surface {s} words {} samples {samples} seed {seed}", suite.words);
            for t in &suite.tallies {
                match &t.failure {
                    None => println!("{:<16} PASS {}", t.name, t.checked),
                    Some(w) => println!("{:<16} FAIL {} witness {w}", t.name, t.checked),
                }
            }
            Ok(status(suite.holds()))
        }
        Command::DialgebraCheck { file, axioms, koszul } => {
            let mut d = load_dialgebra(&file)?;
            d.set_koszul(koszul);
            let list: Vec<Axiom> = if axioms == "all" {
                Axiom::ALL.to_vec()
            } else {
                axioms.split(',').map(|a| a.trim().parse()).collect::<Result<_, _>>()?
            };
            let mut ok = true;
            for a in list {
                let r = d.check(a)?;
                ok &= r.holds;
                match &r.witness {
                    None => println!("{:<24} PASS", a.name()),
                    Some(w) => println!("{:<24} FAIL witness {w}", a.name()),
                }
            }
            Ok(status(ok))
        }
        Command::Classify { file, koszul } => {
            let mut d = load_dialgebra(&file)?;
            d.set_koszul(koszul);
            let c = classify(&d)?;
            for cell in Cell::ALL {
                if c.cells.contains(&cell) {
                    println!("{:<24} yes", cell.name());
                } else {
                    let why: Vec<&str> = c.blockers(cell).iter().map(|r| r.axiom.name()).collect();
                    println!("{:<24} no   fails {}", cell.name(), why.join(","));
                }
            }
            println!("{:<24} {}", "hopf", if c.hopf { "yes" } else { "no" });
            Ok(ExitCode::SUCCESS)
        }
        Command::TqftEval { dialgebra, bordism, input, sector } => {
            let d = load_dialgebra(&dialgebra)?;
            let b = ttext::parse(&read(&bordism)?).map_err(|e| located(&bordism, e))?;
            let syms = input.split(',').map(|n| d.symbol(n.trim())).collect::<Result<Vec<_>, _>>()?;
            let v = FormalSum::basis(Tensor::new(syms));
            let sector = Sector::from(sector);
            let failed: Vec<&str> =
                tqft::gate(&d, sector)?.iter().filter(|r| !r.holds).map(|r| r.axiom.name()).collect();
            if !failed.is_empty() {
                eprintln!("warning: {} fails; value depends on the decomposition", failed.join(","));
            }
            print!("{}", tqft::evaluate_in(&d, &b, &v, sector)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::TqftInvariance { dialgebra, genus_max, ports_max, samples, seed, sector } => {
            let d = load_dialgebra(&dialgebra)?;
            if ports_max == 0 {
                return Err(InputError("--ports-max must be at least 1".into()));
            }
            let r = tqft::invariance(&d, sector.into(), genus_max, ports_max, samples, seed)?;
            for g in &r.gate {
                match &g.witness {
                    None => println!("gate {:<22} PASS", g.axiom.name()),
                    Some(w) => println!("gate {:<22} FAIL witness {w}", g.axiom.name()),
                }
            }
            println!("types {} decompositions {} evaluations {}", r.types, r.decompositions, r.evaluations);
            match &r.mismatch {
                None => println!("invariant yes"),
                Some(m) => {
                    println!("invariant no: type {} seed {}", m.ty, m.seed);
                    print!("input\n{}canonical\n{}decomposition\n{}", m.input, m.canonical, m.found);
                    print!("{}", ttext::serialize(&m.dag));
                }
            }
            Ok(status(r.gate_passed() && r.mismatch.is_none()))
        }
        Command::Graph { file, op } => {
            let g = gtext::parse(&read(&file)?).map_err(|e| located(&file, e))?;
            graph_op(&g, op)
        }
        Command::Selftest { seed } => {
            let reports = suites::run_all(seed);
            for r in &reports {
                println!("{}", r.line());
            }
            Ok(status(reports.iter().all(|r| r.passed)))
        }
    }
}

fn graph_op(g: &AmbientGraph, op: GraphOp) -> Res {
    let sum = |ps: &[String]| -> Result<FormalSum<GraphPath, Rational>, InputError> {
        let mut out = FormalSum::zero();
        for p in ps {
            out.add_term(g.parse_path(p)?, Rational::from_int(1));
        }
        Ok(out)
    };
    let all = g.everything();
    match op {
        GraphOp::Compose { left, right } => {
            let x = PathChain::new(sum(&[left])?, all.clone(), all.clone())?;
            let y = PathChain::new(sum(&[right])?, all.clone(), all)?;
            print!("{}", graph::compose(&x, &y)?.sum());
        }
        GraphOp::Cut { paths, label, at, boundary } => {
            let x = sum(&paths)?;
            let l = g.label(&label)?;
            let out = match (at, boundary.as_deref()) {
                (Some(i), _) => graph::cut_at_index(&x, i, l),
                (None, Some("start")) => graph::cut_boundary(&x, Boundary::Start, l),
                (None, Some(_)) => graph::cut_boundary(&x, Boundary::End, l),
                (None, None) => graph::cut_interior(&x, l),
            };
            print!("{out}");
        }
        GraphOp::Restrict { paths, start, end } => {
            let x = PathChain::new(sum(&paths)?, all.clone(), all)?;
            let out = match (start, end) {
                (Some(l), _) => graph::restrict_start(&x, g.label(&l)?)?,
                (None, Some(l)) => graph::restrict_end(&x, g.label(&l)?)?,
                (None, None) => unreachable!("clap requires one of --start/--end"),
            };
            print!("{}", out.sum());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn read(path: &Path) -> Result<String, InputError> {
    std::fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn located(path: &Path, e: impl Display) -> InputError {
    InputError(format!("{}: {e}", path.display()))
}

fn load_dialgebra(path: &Path) -> Result<Dialgebra<Rational>, InputError> {
    dtext::parse(&read(path)?).map_err(|e| located(path, e))
}

fn load_surface(a: &SurfaceArgs) -> Result<SurfaceSymbol, InputError> {
    Ok(match (&a.surface, &a.symbol) {
        (_, Some(sym)) => SurfaceSymbol::parse(sym)?,
        (Some(p), None) => SurfaceSymbol::preset(p)?,
        (None, None) => SurfaceSymbol::punctured_torus(),
    })
}

/// A word as a closed string state; the trivial class is zero.
fn state(s: &SurfaceSymbol, w: &str) -> Result<FormalSum<CyclicWord, Rational>, InputError> {
    Ok(match CyclicWord::parse(w)? {
        Some(c) => {
            s.check_word(&c)?;
            FormalSum::basis(c)
        }
        None => FormalSum::zero(),
    })
}
