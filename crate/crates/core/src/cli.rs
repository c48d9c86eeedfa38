//! Command-line front end.

use std::fs;
use std::io::Write;
use std::path::{Path as FsPath, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::arcomp::{
    cohomology_diagram, fmt_dims, rim_tower, stalk_tower, string_complex, ArcompError, CohomologyDiagram, RimTower,
};
use crate::classify::{classify, string_quotient};
use crate::field::Field;
use crate::homalg::rep::cohomology;
use crate::homalg::{minimal_form, HomalgError, ProjComplex, DEFAULT_SEED};
use crate::io::{complex_to_json, parse_complex, ComplexJson};
use crate::pathalg::{parse_presentation, Algebra, Presentation};
use crate::strings::{enumerate_string_walks, StringContext};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_THEOREM: i32 = 3;
pub const EXIT_FIELD: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "biserial", version, about = "String complexes and rim towers over symmetric special biserial algebras")]
pub struct Cli {
    /// Ground field, `q` or `fp:P`; overrides the file.
    #[arg(long, global = true)]
    pub field: Option<Field>,
    /// Nilpotency bound used when enumerating paths; overrides the file.
    #[arg(long, global = true)]
    pub max_nilpotency: Option<usize>,
    /// Seed for randomized searches.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Report special biserial, condition (C), symmetry and class C.
    Classify {
        file: PathBuf,
        /// Check condition (C) on the relations exactly as written.
        #[arg(long)]
        strict: bool,
    },
    /// List strings of the associated string algebra, or generalized strings.
    Strings {
        file: PathBuf,
        #[arg(long, default_value_t = 2)]
        max_len: usize,
        #[arg(long)]
        generalized: bool,
    },
    /// Build a string complex, or minimize a complex read from JSON.
    Complex {
        file: PathBuf,
        #[command(flatten)]
        source: ComplexSource,
        /// Replace the complex by its minimal form.
        #[arg(long)]
        minimal: bool,
        /// Apply `T^m`.
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        shift: i64,
    },
    /// Build the tower `P_0[w], …, P_K[w]`.
    Rim {
        file: PathBuf,
        #[arg(long)]
        string: String,
        #[arg(long, default_value_t = 3)]
        levels: usize,
        #[arg(long, value_enum, default_value_t = RimFormat::Json)]
        format: RimFormat,
    },
    /// Cohomology diagram of a rim tower or of stalk towers.
    Diagram {
        file: PathBuf,
        #[arg(long, conflicts_with = "tower")]
        string: Option<String>,
        #[arg(long, default_value_t = 3)]
        levels: usize,
        /// Vertex whose stalk towers `P[1_v^n]` form the rows.
        #[arg(long, requires = "n")]
        tower: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum, default_value_t = DiagramFormat::Tsv)]
        format: DiagramFormat,
    },
    /// The stalk tower `P[1_v^n]` and its cohomology.
    Tower {
        file: PathBuf,
        #[arg(long)]
        vertex: String,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct ComplexSource {
    /// Generalized string literal such as `z0^-1*t0*t1`.
    #[arg(long)]
    string: Option<String>,
    /// JSON file with a complex.
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum RimFormat {
    Json,
    Tsv,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum DiagramFormat {
    Tsv,
    Dot,
}

/// Error with an exit status and a message for stderr.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }
}

impl From<ArcompError> for Failure {
    fn from(e: ArcompError) -> Self {
        let code = match &e {
            ArcompError::Homalg(HomalgError::Characteristic { .. }) => EXIT_FIELD,
            ArcompError::Homalg(_) => EXIT_THEOREM,
            e if e.is_theorem_failure() => EXIT_THEOREM,
            _ => EXIT_INPUT,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<HomalgError> for Failure {
    fn from(e: HomalgError) -> Self {
        ArcompError::from(e).into()
    }
}

fn load(file: &FsPath, cli: &Cli) -> Result<Presentation, Failure> {
    let text = fs::read_to_string(file).map_err(|e| Failure::input(format!("{}: {e}", file.display())))?;
    let mut pres = parse_presentation(&text).map_err(|e| Failure::input(format!("{}: {e}", file.display())))?;
    if let Some(f) = cli.field {
        pres.field = f;
    }
    if let Some(b) = cli.max_nilpotency {
        pres.bound = Some(b);
    }
    Ok(pres)
}

fn build(pres: &Presentation) -> Result<Algebra, Failure> {
    Algebra::build(pres).map_err(|e| Failure::input(e.to_string()))
}

fn tilde_algebra(alg: &Algebra) -> Result<Algebra, Failure> {
    let tp = string_quotient(&alg.pres).map_err(|w| Failure::input(format!("no string quotient: {}", w.reason)))?;
    Algebra::build_unchecked(&tp).map_err(|e| Failure::input(e.to_string()))
}

fn to_json<T: Serialize>(x: &T) -> String {
    let mut s = serde_json::to_string_pretty(x).expect("serializable");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct LevelReport {
    level: usize,
    low: i64,
    terms: String,
    length: usize,
    indecomposable: bool,
    cone_terms: Option<String>,
    complex: ComplexJson,
}

#[derive(Serialize)]
struct RimReport {
    string: String,
    degree: i64,
    levels: Vec<LevelReport>,
}

fn rim_report(alg: &Algebra, ctx: &StringContext, t: &RimTower) -> RimReport {
    RimReport {
        string: t.word.display(ctx.alg).to_string(),
        degree: t.degree,
        levels: t
            .levels
            .iter()
            .enumerate()
            .map(|(k, c)| LevelReport {
                level: k,
                low: c.low,
                terms: c.describe(alg),
                length: c.length(),
                indecomposable: true,
                cone_terms: (k > 0).then(|| t.steps[k - 1].cone.describe(alg)),
                complex: complex_to_json(alg, c),
            })
            .collect(),
    }
}

fn rim_tsv(alg: &Algebra, t: &RimTower) -> String {
    let mut s = String::from("level\tlow\tlength\tterms\n");
    for (k, c) in t.levels.iter().enumerate() {
        s += &format!("{k}\t{}\t{}\t{}\n", c.low, c.length(), c.describe(alg));
    }
    s
}

fn vertex(pres: &Presentation, label: &str) -> Result<usize, Failure> {
    pres.vertex_index(label)
        .or_else(|| label.strip_prefix('v').and_then(|l| pres.vertex_index(l)))
        .ok_or_else(|| Failure::input(format!("unknown vertex `{label}`")))
}

fn diagram_output(d: &CohomologyDiagram, format: DiagramFormat) -> String {
    match format {
        DiagramFormat::Tsv => d.to_tsv(),
        DiagramFormat::Dot => d.to_dot(),
    }
}

#[derive(Serialize)]
struct CohomologyEntry {
    degree: i64,
    dims: String,
}

#[derive(Serialize)]
struct ComplexReport {
    terms: String,
    minimal: bool,
    cohomology: Vec<CohomologyEntry>,
    complex: ComplexJson,
}

fn complex_report(alg: &Algebra, c: &ProjComplex) -> ComplexReport {
    ComplexReport {
        terms: c.describe(alg),
        minimal: c.is_minimal(alg),
        cohomology: cohomology(alg, c)
            .into_iter()
            .map(|(degree, h)| CohomologyEntry {
                degree,
                dims: fmt_dims(&h.dims),
            })
            .collect(),
        complex: complex_to_json(alg, c),
    }
}

/// Runs a parsed command and returns its output text.
pub fn execute(cli: &Cli) -> Result<String, Failure> {
    match &cli.command {
        Command::Classify { file, strict } => {
            let pres = load(file, cli)?;
            let report = classify(&pres, *strict).map_err(|e| Failure::input(e.to_string()))?;
            Ok(to_json(&report))
        }
        Command::Strings {
            file,
            max_len,
            generalized,
        } => {
            let pres = load(file, cli)?;
            let alg = build(&pres)?;
            let ctx = StringContext::new(&alg);
            let mut out = String::new();
            if *generalized {
                let cc = crate::classify::check_class_c(&pres).map(|(ok, _)| ok).unwrap_or(false);
                if !cc {
                    eprintln!("warning: the algebra is not in class C; listing anyway");
                }
                for g in ctx.enumerate(*max_len) {
                    out += &format!("{}\n", g.display(&alg));
                }
            } else {
                for v in 0..pres.vertices.len() {
                    out += &format!("1_{}\n", pres.vertices[v]);
                }
                for w in enumerate_string_walks(&ctx.tilde, *max_len) {
                    out += &format!("{}\n", w.display(&ctx.tilde));
                }
            }
            Ok(out)
        }
        Command::Complex {
            file,
            source,
            minimal,
            shift,
        } => {
            let pres = load(file, cli)?;
            let alg = build(&pres)?;
            let ctx = StringContext::new(&alg);
            let mut c = if let Some(s) = &source.string {
                let w = ctx.parse(s).map_err(|e| Failure::input(format!("--string: {e}")))?;
                string_complex(&ctx, &w)?
            } else {
                let path = source.json.as_ref().expect("one source is required");
                let text =
                    fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
                let c = parse_complex(&alg, &text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
                if !c.check_d2(&alg) {
                    return Err(Failure::input("the differential does not square to zero"));
                }
                c
            };
            if *minimal {
                c = minimal_form(&alg, &c).complex;
            }
            c = c.shift(*shift, &alg);
            Ok(to_json(&complex_report(&alg, &c)))
        }
        Command::Rim {
            file,
            string,
            levels,
            format,
        } => {
            let pres = load(file, cli)?;
            let alg = build(&pres)?;
            let ctx = StringContext::new(&alg);
            let w = ctx.parse(string).map_err(|e| Failure::input(format!("--string: {e}")))?;
            let tower = rim_tower(&ctx, &w, *levels, cli.seed)?;
            Ok(match format {
                RimFormat::Json => to_json(&rim_report(&alg, &ctx, &tower)),
                RimFormat::Tsv => rim_tsv(&alg, &tower),
            })
        }
        Command::Diagram {
            file,
            string,
            levels,
            tower,
            n,
            format,
        } => {
            let pres = load(file, cli)?;
            let alg = build(&pres)?;
            let tilde = tilde_algebra(&alg)?;
            let rows: Vec<ProjComplex> = match (string, tower) {
                (Some(s), _) => {
                    let ctx = StringContext::new(&alg);
                    let w = ctx.parse(s).map_err(|e| Failure::input(format!("--string: {e}")))?;
                    rim_tower(&ctx, &w, *levels, cli.seed)?.levels
                }
                (None, Some(v)) => {
                    let v = vertex(&pres, v)?;
                    let n = n.expect("clap requires --n");
                    (0..=n).map(|k| stalk_tower(&alg, v, k)).collect::<Result<_, _>>()?
                }
                (None, None) => return Err(Failure::input("give --string or --tower")),
            };
            let d = cohomology_diagram(&alg, &tilde, &rows, cli.seed)?;
            Ok(diagram_output(&d, *format))
        }
        Command::Tower { file, vertex: v, n } => {
            let pres = load(file, cli)?;
            let alg = build(&pres)?;
            let v = vertex(&pres, v)?;
            let c = stalk_tower(&alg, v, *n)?;
            Ok(to_json(&complex_report(&alg, &c)))
        }
    }
}

/// Parses arguments, runs, writes output and returns the exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(text) => {
            let written = match &cli.out {
                Some(p) => fs::write(p, text.as_bytes()),
                None => std::io::stdout().write_all(text.as_bytes()),
            };
            match written {
                Ok(()) => EXIT_OK,
                Err(e) => {
                    eprintln!("error: {e}");
                    EXIT_INPUT
                }
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}
