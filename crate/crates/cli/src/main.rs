use std::fmt::Write as _;
use std::io::{Read, Write as _};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use domipoly_core::catalog::{
    align_to_reference, export_graph6, generate_regular, load_catalog, write_catalog, CatalogError,
    REFERENCE_NAMES,
};
use domipoly_core::equivalence::{partition_by_polynomial, render_table};
use domipoly_core::graph6::HEADER;
use domipoly_core::verify::{self, Context};
use domipoly_core::{
    domination_polynomial, gamma_sets, parse_edge_list, parse_graph6, DominationError, Graph,
};

#[derive(Parser)]
#[command(name = "domipoly", version, about = "Domination polynomials of small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the domination polynomial of each input graph.
    Poly {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = PolyOutput::Poly)]
        output: PolyOutput,
    },
    /// Print the domination number and every minimum dominating set.
    Gamma {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = GammaOutput::Text)]
        output: GammaOutput,
    },
    /// Generate all k-regular graphs on n vertices up to isomorphism.
    Catalog {
        #[arg(short = 'n', long)]
        order: usize,
        #[arg(short = 'k', long)]
        degree: usize,
        /// Write here instead of standard output.
        #[arg(short, long)]
        out: Option<PathBuf>,
        /// Plain graph6 lines instead of JSON lines.
        #[arg(long)]
        graph6: bool,
    },
    /// Group the graphs of a catalog file by polynomial.
    Classify {
        catalog: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Run the acceptance checks on the cubic graphs of order 10.
    VerifyPaper {
        #[arg(long)]
        json: bool,
        /// Check this catalog file instead of a fresh generation.
        #[arg(long)]
        catalog: Option<PathBuf>,
    },
}

#[derive(clap::Args)]
struct InputArgs {
    /// Input file; standard input when absent.
    #[arg(conflicts_with = "petersen")]
    input: Option<PathBuf>,
    /// Use the built-in Petersen graph.
    #[arg(long)]
    petersen: bool,
    #[arg(long, value_enum, default_value_t = Format::Auto)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Auto,
    Graph6,
    Edgelist,
}

#[derive(Clone, Copy, ValueEnum)]
enum PolyOutput {
    Poly,
    Json,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum GammaOutput {
    Text,
    Json,
}

enum Failure {
    Input(String),
    Capacity(String),
    /// Carries the report, which is still printed.
    Verification(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Capacity(_) => 3,
            Failure::Verification(_) => 4,
        }
    }
}

impl From<DominationError> for Failure {
    fn from(e: DominationError) -> Self {
        match e {
            DominationError::Capacity { .. } => Failure::Capacity(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

impl From<CatalogError> for Failure {
    fn from(e: CatalogError) -> Self {
        match e {
            CatalogError::OrderTooLarge { .. } => Failure::Capacity(e.to_string()),
            CatalogError::Domination(d) => d.into(),
            other => Failure::Input(other.to_string()),
        }
    }
}

fn read_text(path: Option<&Path>) -> Result<String, Failure> {
    match path {
        Some(p) => std::fs::read_to_string(p).map_err(|e| Failure::Input(format!("{}: {e}", p.display()))),
        None => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::Input(format!("stdin: {e}")))?;
            Ok(s)
        }
    }
}

fn looks_like_graph6(text: &str) -> bool {
    let Some(line) = text.lines().find(|l| !l.trim().is_empty()) else {
        return false;
    };
    let line = line.trim();
    line.starts_with(HEADER) || (line.as_bytes()[0] >= 63 && parse_graph6(line).is_ok())
}

fn read_graphs(args: &InputArgs) -> Result<Vec<Graph>, Failure> {
    if args.petersen {
        return Ok(vec![Graph::petersen()]);
    }
    let text = read_text(args.input.as_deref())?;
    let graph6 = match args.format {
        Format::Graph6 => true,
        Format::Edgelist => false,
        Format::Auto => looks_like_graph6(&text),
    };
    let graphs = if graph6 {
        text.lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
            .map(|(i, l)| parse_graph6(l).map_err(|e| Failure::Input(format!("line {}: {e}", i + 1))))
            .collect::<Result<Vec<_>, _>>()?
    } else {
        vec![parse_edge_list(&text).map_err(|e| Failure::Input(e.to_string()))?]
    };
    if graphs.is_empty() {
        return Err(Failure::Input("no graph in input".into()));
    }
    Ok(graphs)
}

fn json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("library types serialize")
}

fn cmd_poly(input: &InputArgs, output: PolyOutput) -> Result<String, Failure> {
    let mut out = String::new();
    for g in read_graphs(input)? {
        let p = domination_polynomial(&g)?;
        match output {
            PolyOutput::Poly => writeln!(out, "{p}"),
            PolyOutput::Json => writeln!(out, "{}", json(&p)),
            PolyOutput::Table => {
                let _ = writeln!(out, "i\td(G,i)");
                p.coefficients()
                    .iter()
                    .enumerate()
                    .try_for_each(|(i, c)| writeln!(out, "{i}\t{c}"))
            }
        }
        .expect("writing to a String");
    }
    Ok(out)
}

fn cmd_gamma(input: &InputArgs, output: GammaOutput) -> Result<String, Failure> {
    let mut out = String::new();
    for g in read_graphs(input)? {
        if g.order() > domipoly_core::domination::MAX_SWEEP_ORDER {
            return Err(DominationError::Capacity { n: g.order() }.into());
        }
        let family = gamma_sets(&g);
        match output {
            GammaOutput::Text => {
                let _ = writeln!(out, "gamma={}, count={}", family.gamma, family.sets.len());
                for s in &family.sets {
                    let labels: Vec<String> = s.to_one_based().iter().map(|v| v.to_string()).collect();
                    let _ = writeln!(out, "{{{}}}", labels.join(", "));
                }
            }
            GammaOutput::Json => {
                let _ = writeln!(out, "{}", json(&family));
            }
        }
    }
    Ok(out)
}

fn cmd_catalog(n: usize, k: usize, out: Option<&Path>, graph6: bool) -> Result<String, Failure> {
    let mut catalog = generate_regular(n, k)?;
    if (n, k) == (10, 3) {
        let report = align_to_reference(&mut catalog)?;
        for line in report.diff().lines() {
            eprintln!("discrepancy: {line}");
        }
        for name in REFERENCE_NAMES {
            if let Some(options) = report.alternatives.get(name) {
                eprintln!("ambiguous: {name} fits {} graphs equally well", options.len());
            }
        }
    }
    let text = if graph6 {
        export_graph6(&catalog)
    } else {
        write_catalog(&catalog)
    };
    match out {
        Some(path) => std::fs::write(path, text)
            .map(|()| String::new())
            .map_err(|e| Failure::Input(format!("{}: {e}", path.display()))),
        None => Ok(text),
    }
}

fn cmd_classify(path: &Path, as_json: bool) -> Result<String, Failure> {
    let catalog = load_catalog(path)?;
    let classes = partition_by_polynomial(&catalog.entries);
    Ok(if as_json {
        json(&classes) + "\n"
    } else {
        render_table(&classes)
    })
}

fn cmd_verify(as_json: bool, catalog: Option<&Path>) -> Result<String, Failure> {
    let context = match catalog {
        None => Context::generate(),
        Some(path) => load_catalog(path).and_then(Context::with_catalog),
    };
    let context = match context {
        Ok(c) => c,
        Err(e) => {
            let report = if as_json {
                format!("{}\n", serde_json::json!({ "status": "FAIL", "error": e.to_string() }))
            } else {
                format!("[FAIL] catalog: {e}\n")
            };
            return Err(Failure::Verification(report));
        }
    };
    let ledger = verify::run(&context);
    let report = if as_json {
        json(&ledger) + "\n"
    } else {
        ledger.render()
    };
    if ledger.passed() {
        Ok(report)
    } else {
        Err(Failure::Verification(report))
    }
}

/// Writes to stdout; a closed pipe is not an error.
fn emit(text: &str) {
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(text.as_bytes()).and_then(|()| stdout.flush());
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Poly { input, output } => cmd_poly(input, *output),
        Command::Gamma { input, output } => cmd_gamma(input, *output),
        Command::Catalog {
            order,
            degree,
            out,
            graph6,
        } => cmd_catalog(*order, *degree, out.as_deref(), *graph6),
        Command::Classify { catalog, json } => cmd_classify(catalog, *json),
        Command::VerifyPaper { json, catalog } => cmd_verify(*json, catalog.as_deref()),
    };
    match result {
        Ok(text) => {
            emit(&text);
            ExitCode::SUCCESS
        }
        Err(f) => {
            match &f {
                Failure::Input(m) | Failure::Capacity(m) => eprintln!("error: {m}"),
                Failure::Verification(report) => emit(report),
            }
            ExitCode::from(f.code())
        }
    }
}
