use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use commands::Report;
use zkring_core::classify::Config;
use zkring_core::hochster::DEFAULT_MAX_VERTICES;
use zkring_core::{Coefficients, Error, Family, SimplicialComplex};

mod commands;

/// Cohomology of moment-angle complexes and the Golod property of simplicial complexes.
#[derive(Parser, Debug)]
#[command(name = "zkring", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Coefficient fields, comma separated; single-field commands use the first.
    #[arg(long, global = true, value_delimiter = ',', default_value = "q,f2,f3,f5,f7")]
    field: Vec<String>,

    /// Refuse complexes with more vertices than this (at most 24).
    #[arg(long, global = true, default_value_t = 20)]
    max_vertices: usize,

    /// Worker threads; defaults to the number of CPUs.
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Args, Debug, Clone)]
struct Input {
    /// Complexes in canonical JSON form; several files run as a batch.
    paths: Vec<PathBuf>,

    /// Generator spec instead of a file, e.g. `--gen polygon 5`.
    #[arg(long = "gen", num_args = 1.., value_name = "SPEC", allow_negative_numbers = true, conflicts_with = "paths")]
    generator: Option<Vec<String>>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Theorem {
    #[value(name = "thm1.1")]
    Thm11,
    #[value(name = "thm1.2")]
    Thm12,
    #[value(name = "thm4.2")]
    Thm42,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Betti numbers of Z_K from full subcomplexes.
    Hochster(Input),
    /// Betti numbers of Z_K from its cellular chain complex.
    BettiZk(Input),
    /// Betti numbers of the real moment-angle complex.
    BettiRk(Input),
    /// Product table of H*(Z_K) over the first field.
    Products(Input),
    /// Cup-product Golod test (exit 0 if Golod, 1 if not).
    Golod(Input),
    /// Minimal non-Golodness with per-vertex evidence.
    Mng(Input),
    /// Cone vertices and core.
    Core(Input),
    /// Gorenstein* test.
    Gorenstein(Input),
    /// Sphere / connected-sum-of-sphere-products recognition.
    Recognize(Input),
    /// Run a theorem harness.
    Verify {
        theorem: Theorem,
        #[command(flatten)]
        input: Input,
    },
    /// Print a generated complex as JSON.
    Gen {
        #[arg(required = true, num_args = 1.., allow_negative_numbers = true)]
        spec: Vec<String>,
    },
    /// Full classification report.
    Analyze(Input),
}

/// Exit statuses.
pub mod exit {
    pub const OK: u8 = 0;
    pub const FALSE: u8 = 1;
    pub const INPUT: u8 = 2;
    pub const CAP: u8 = 3;
    pub const INTERNAL: u8 = 4;
}

/// A failure with its exit status.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::TooManyVertices { .. } => exit::CAP,
            Error::Overflow => exit::INTERNAL,
            _ => exit::INPUT,
        };
        Failure { code, message: e.to_string() }
    }
}

fn input_error(message: impl Into<String>) -> Failure {
    Failure { code: exit::INPUT, message: message.into() }
}

/// Settings shared by every command.
pub struct RunConfig {
    pub fields: Vec<Coefficients>,
    pub max_vertices: usize,
    pub json: bool,
}

impl RunConfig {
    pub fn first_field(&self) -> Coefficients {
        self.fields[0]
    }

    /// Predicates work over fields only; `z` entries are dropped.
    pub fn classify(&self) -> Result<Config, Failure> {
        let fields: Vec<Coefficients> = self.fields.iter().copied().filter(|c| c.is_field()).collect();
        if fields.is_empty() {
            return Err(Error::NotAField.into());
        }
        Ok(Config { fields, max_vertices: self.max_vertices })
    }

    pub fn check(&self, k: &SimplicialComplex) -> Result<(), Failure> {
        if k.m() > self.max_vertices {
            return Err(Error::TooManyVertices { m: k.m(), cap: self.max_vertices }.into());
        }
        Ok(())
    }
}

fn read_complex(path: &Path) -> Result<SimplicialComplex, Failure> {
    let text =
        std::fs::read_to_string(path).map_err(|e| input_error(format!("cannot read {}: {e}", path.display())))?;
    Ok(SimplicialComplex::from_json_str(&text)?)
}

/// Labelled inputs; one entry per file, or the generated complex.
fn inputs(input: &Input) -> Result<Vec<(String, Result<SimplicialComplex, Failure>)>, Failure> {
    if let Some(spec) = &input.generator {
        let k = Family::parse(spec).and_then(|f| f.build()).map_err(Failure::from);
        return Ok(vec![(spec.join(" "), k)]);
    }
    if input.paths.is_empty() {
        return Err(input_error("no input: give a JSON file or --gen <family> <params>"));
    }
    Ok(input.paths.iter().map(|p| (p.display().to_string(), read_complex(p))).collect())
}

type Handler = fn(&SimplicialComplex, &RunConfig) -> Result<Report, Failure>;

fn dispatch(command: &Command) -> Option<(Handler, &Input)> {
    Some(match command {
        Command::Gen { .. } | Command::Verify { .. } => return None,
        Command::Hochster(i) => (commands::hochster as Handler, i),
        Command::BettiZk(i) => (commands::betti_zk, i),
        Command::BettiRk(i) => (commands::betti_rk, i),
        Command::Products(i) => (commands::products, i),
        Command::Golod(i) => (commands::golod, i),
        Command::Mng(i) => (commands::mng, i),
        Command::Core(i) => (commands::core, i),
        Command::Gorenstein(i) => (commands::gorenstein, i),
        Command::Recognize(i) => (commands::recognize, i),
        Command::Analyze(i) => (commands::analyze, i),
    })
}

fn emit(cfg: &RunConfig, runs: Vec<(String, Result<Report, Failure>)>) -> u8 {
    let code = runs.iter().map(|(_, r)| r.as_ref().map_or_else(|f| f.code, |r| r.code)).max().unwrap_or(exit::OK);
    let batch = runs.len() > 1;
    if cfg.json && batch {
        let items: Vec<serde_json::Value> = runs
            .into_iter()
            .map(|(name, r)| match r {
                Ok(r) => serde_json::json!({ "input": name, "exit_code": r.code, "report": r.json }),
                Err(f) => {
                    eprintln!("error: {name}: {}", f.message);
                    serde_json::json!({ "input": name, "exit_code": f.code, "error": f.message })
                }
            })
            .collect();
        println!("{}", serde_json::to_string_pretty(&items).expect("JSON values serialize"));
        return code;
    }
    for (name, r) in runs {
        match r {
            Ok(r) if cfg.json => println!("{}", serde_json::to_string_pretty(&r.json).expect("JSON values serialize")),
            Ok(r) => {
                if batch {
                    println!("== {name}");
                }
                print!("{}", r.text);
            }
            Err(f) if batch => eprintln!("error: {name}: {}", f.message),
            Err(f) => eprintln!("error: {}", f.message),
        }
    }
    code
}

fn run(cli: Cli) -> Result<u8, Failure> {
    if cli.max_vertices > DEFAULT_MAX_VERTICES {
        return Err(input_error(format!("--max-vertices must be at most {DEFAULT_MAX_VERTICES}")));
    }
    let fields = cli.field.iter().map(|f| Coefficients::parse(f)).collect::<Result<Vec<_>, _>>()?;
    if fields.is_empty() {
        return Err(input_error("--field needs at least one entry"));
    }
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build_global()
            .map_err(|e| Failure { code: exit::INTERNAL, message: e.to_string() })?;
    }
    let cfg = RunConfig { fields, max_vertices: cli.max_vertices, json: cli.json };
    let runs = match &cli.command {
        Command::Gen { spec } => return commands::gen(spec),
        Command::Verify { theorem, input } => inputs(input)?
            .into_iter()
            .map(|(name, k)| (name, k.and_then(|k| commands::verify(*theorem, &k, &cfg))))
            .collect(),
        other => {
            let (handler, input) = dispatch(other).expect("every other command takes a complex");
            inputs(input)?.into_iter().map(|(name, k)| (name, k.and_then(|k| handler(&k, &cfg)))).collect()
        }
    };
    Ok(emit(&cfg, runs))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { exit::INPUT } else { exit::OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
