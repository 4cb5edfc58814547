use std::fmt;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use permsum::bounds::{bound, Claim};
use permsum::harness::{rank, EnumerationRecord, GraphClass, Harness, VerificationReport};
use permsum::{
    coefficients_permanent, coefficients_sachs, decode_graph6, encode_graph6, ps_permanent, ps_sachs, Error,
    FamilySpec, Graph, RecursiveEngine,
};
use serde_json::json;

#[derive(Parser)]
#[command(name = "permsum", version, about = "Permanental polynomials and permanental sums of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the permanental sum of each input graph.
    Ps {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Engine::Recursive)]
        engine: Engine,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the coefficients b_0..b_n of per(xI - A), comma-separated.
    Poly {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = PolyEngine::Sachs)]
        engine: PolyEngine,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the graph6 encoding of a family member such as "B2(3,3,1)".
    Family {
        spec: String,
        /// Relabel to canonical form first.
        #[arg(long)]
        canonical: bool,
    },
    /// Enumerate a graph class and rank it by permanental sum.
    Enumerate {
        #[arg(long, value_enum)]
        class: ClassArg,
        #[arg(long)]
        n: usize,
        /// Edge count (naive class only; default: every size).
        #[arg(long)]
        m: Option<usize>,
        /// Connected graphs only (naive class only).
        #[arg(long)]
        connected: bool,
        #[arg(long)]
        top: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Check an extremal claim against exhaustive enumeration.
    Verify {
        #[arg(long)]
        claim: String,
        #[arg(long, conflicts_with_all = ["n_min", "n_max"], required_unless_present_all = ["n_min", "n_max"])]
        n: Option<usize>,
        #[arg(long, requires = "n_max")]
        n_min: Option<usize>,
        #[arg(long, requires = "n_min")]
        n_max: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Evaluate a claim's closed-form bound.
    Bound {
        #[arg(long)]
        claim: String,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// A single graph in graph6 format ("?" is the empty graph).
    #[arg(long)]
    graph6: Option<String>,
    /// A file with one graph6 string per line.
    #[arg(long)]
    file: Option<PathBuf>,
    /// A family spec such as "B1(3,4)".
    #[arg(long)]
    family: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Engine {
    Sachs,
    Permanent,
    Recursive,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PolyEngine {
    Sachs,
    Permanent,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ClassArg {
    Tree,
    Forest,
    Unicyclic,
    Bicyclic,
    B1,
    B2,
    B3,
    Naive,
}

/// Exit statuses.
const FAIL: u8 = 1;
const PARSE: u8 = 2;
const LIMIT: u8 = 3;
const OUT_OF_RANGE: u8 = 4;

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure { code, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::OrderLimit { .. } | Error::EngineLimit { .. } => LIMIT,
            Error::Unverifiable { .. } => OUT_OF_RANGE,
            _ => PARSE,
        };
        Failure::new(code, e.to_string())
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

type CmdResult = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Ps { input, engine, format } => cmd_ps(&input, engine, format),
        Command::Poly { input, engine, format } => cmd_poly(&input, engine, format),
        Command::Family { spec, canonical } => cmd_family(&spec, canonical),
        Command::Enumerate { class, n, m, connected, top, format } => {
            cmd_enumerate(class, n, m, connected, top, format)
        }
        Command::Verify { claim, n, n_min, n_max, format } => {
            let (lo, hi) = match n {
                Some(n) => (n, n),
                None => (n_min.unwrap_or(0), n_max.unwrap_or(0)),
            };
            cmd_verify(&claim, lo, hi, format)
        }
        Command::Bound { claim, n } => cmd_bound(&claim, n),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.code)
        }
    }
}

/// Input graphs paired with their source text.
fn read_input(input: &Input) -> Result<Vec<(String, Graph)>, Failure> {
    if let Some(text) = &input.graph6 {
        return Ok(vec![(text.clone(), decode_graph6(text)?)]);
    }
    if let Some(spec) = &input.family {
        let g = spec.parse::<FamilySpec>()?.build()?;
        return Ok(vec![(encode_graph6(&g), g)]);
    }
    let path = input.file.as_ref().expect("clap enforces one input source");
    let content = fs::read_to_string(path)
        .map_err(|e| Failure::new(PARSE, format!("cannot read {}: {e}", path.display())))?;
    content
        .lines()
        .enumerate()
        .map(|(i, line)| {
            let line = line.trim_end_matches('\r');
            decode_graph6(line)
                .map(|g| (line.to_string(), g))
                .map_err(|e| Failure::new(PARSE, format!("{}:{}: {e}", path.display(), i + 1)))
        })
        .collect()
}

fn cmd_ps(input: &Input, engine: Engine, format: Format) -> CmdResult {
    let graphs = read_input(input)?;
    let recursive = RecursiveEngine::new();
    let mut rows = Vec::new();
    let mut disagree = false;
    for (text, g) in &graphs {
        let values = match engine {
            Engine::Sachs => vec![("sachs", ps_sachs(g)?)],
            Engine::Permanent => vec![("permanent", ps_permanent(g)?)],
            Engine::Recursive => vec![("recursive", recursive.ps(g))],
            Engine::All => {
                let v = vec![
                    ("sachs", ps_sachs(g)?),
                    ("permanent", ps_permanent(g)?),
                    ("recursive", recursive.ps(g)),
                ];
                if v.iter().any(|(_, p)| *p != v[0].1) {
                    disagree = true;
                    eprintln!("engines disagree on {text}");
                }
                v
            }
        };
        for (name, ps) in values {
            rows.push((text.clone(), name, ps.to_string()));
        }
    }
    match format {
        Format::Text => {
            for (_, _, ps) in &rows {
                println!("{ps}");
            }
        }
        Format::Csv => {
            println!("graph6,engine,ps");
            for (g, e, ps) in &rows {
                println!("{g},{e},{ps}");
            }
        }
        Format::Json => {
            let list: Vec<_> =
                rows.iter().map(|(g, e, ps)| json!({"graph6": g, "engine": e, "ps": ps})).collect();
            println!("{}", serde_json::to_string_pretty(&list).expect("serializable"));
        }
    }
    Ok(if disagree { FAIL } else { 0 })
}

fn cmd_poly(input: &Input, engine: PolyEngine, format: Format) -> CmdResult {
    let graphs = read_input(input)?;
    let mut rows = Vec::new();
    let mut disagree = false;
    for (text, g) in &graphs {
        let values = match engine {
            PolyEngine::Sachs => vec![("sachs", coefficients_sachs(g)?)],
            PolyEngine::Permanent => vec![("permanent", coefficients_permanent(g)?)],
            PolyEngine::All => {
                let v = vec![("sachs", coefficients_sachs(g)?), ("permanent", coefficients_permanent(g)?)];
                if v[0].1 != v[1].1 {
                    disagree = true;
                    eprintln!("engines disagree on {text}");
                }
                v
            }
        };
        for (name, poly) in values {
            rows.push((text.clone(), name, poly));
        }
    }
    match format {
        Format::Text => {
            for (_, _, poly) in &rows {
                println!("{poly}");
            }
        }
        Format::Csv => {
            println!("graph6,engine,coefficients");
            for (g, e, poly) in &rows {
                println!("{g},{e},\"{poly}\"");
            }
        }
        Format::Json => {
            let list: Vec<_> = rows
                .iter()
                .map(|(g, e, poly)| {
                    let coeffs: Vec<String> = poly.coefficients().iter().map(|c| c.to_string()).collect();
                    json!({"graph6": g, "engine": e, "coefficients": coeffs})
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&list).expect("serializable"));
        }
    }
    Ok(if disagree { FAIL } else { 0 })
}

fn cmd_family(spec: &str, canonical: bool) -> CmdResult {
    let g = spec.parse::<FamilySpec>()?.build()?;
    let g = if canonical { permsum::canonical_graph(&g) } else { g };
    println!("{}", encode_graph6(&g));
    Ok(0)
}

fn cmd_enumerate(
    class: ClassArg,
    n: usize,
    m: Option<usize>,
    connected: bool,
    top: Option<usize>,
    format: Format,
) -> CmdResult {
    if class != ClassArg::Naive && (m.is_some() || connected) {
        return Err(Failure::new(PARSE, "--m and --connected apply to --class naive only"));
    }
    let h = Harness::new();
    let records: Vec<EnumerationRecord> = match class {
        ClassArg::Tree => h.trees(n)?.to_vec(),
        ClassArg::Forest => h.forests(n)?.iter().filter(|r| r.class == GraphClass::Forest).cloned().collect(),
        ClassArg::Unicyclic => h.unicyclic(n)?.to_vec(),
        ClassArg::Bicyclic => h.bicyclic(n)?.to_vec(),
        ClassArg::B1 | ClassArg::B2 | ClassArg::B3 => {
            let want = match class {
                ClassArg::B1 => GraphClass::TypeB1,
                ClassArg::B2 => GraphClass::TypeB2,
                _ => GraphClass::TypeB3,
            };
            h.bicyclic(n)?.iter().filter(|r| r.class == want).cloned().collect()
        }
        ClassArg::Naive => h.naive(n, m, connected)?.to_vec(),
    };
    let records = match top {
        Some(k) => rank(&records, k),
        None => records,
    };
    match format {
        Format::Csv => {
            println!("graph6,n,class,ps,rank");
            for r in &records {
                println!("{},{},{},{},{}", r.graph6, r.n, r.class, r.ps, r.rank);
            }
        }
        Format::Json => println!("{}", serde_json::to_string_pretty(&records).expect("serializable")),
        Format::Text => {
            for r in &records {
                println!("{:<4} {:<10} {:>12}  {}", r.rank, r.class.name(), r.ps.to_string(), r.graph6);
            }
        }
    }
    Ok(0)
}

fn report_text(r: &VerificationReport) -> String {
    format!(
        "{} n={} expected={} observed={} extremal_expected={} extremal_observed=[{}] {}",
        r.claim,
        r.n,
        r.expected,
        r.observed,
        r.extremal_expected.as_deref().unwrap_or("-"),
        r.extremal_observed.join(","),
        if r.pass { "PASS" } else { "FAIL" }
    )
}

fn cmd_verify(claim: &str, lo: usize, hi: usize, format: Format) -> CmdResult {
    let claim: Claim = claim.parse()?;
    if lo > hi {
        return Err(Failure::new(PARSE, format!("empty range {lo}..{hi}")));
    }
    let h = Harness::new();
    let (mut failed, mut unverifiable) = (false, false);
    let mut json_rows = Vec::new();
    if format == Format::Csv {
        println!("claim,n,expected,observed,status");
    }
    for n in lo..=hi {
        match h.verify(claim, n) {
            Ok(r) => {
                failed |= !r.pass;
                match format {
                    Format::Json => json_rows.push(serde_json::to_value(&r).expect("serializable")),
                    Format::Csv => println!(
                        "{},{},{},{},{}",
                        r.claim,
                        r.n,
                        r.expected,
                        r.observed,
                        if r.pass { "pass" } else { "fail" }
                    ),
                    Format::Text => println!("{}", report_text(&r)),
                }
            }
            Err(Error::Unverifiable { reason, .. }) => {
                unverifiable = true;
                let note = if claim == Claim::Thm1_2 && (8..=10).contains(&n) {
                    h.observe_second_max_b2(n)
                        .ok()
                        .map(|(v, gs)| format!("observed type B2 second maximum {v} at [{}]", gs.join(",")))
                } else {
                    None
                };
                match format {
                    Format::Json => {
                        let mut row =
                            json!({"claim": claim.id(), "n": n, "status": "unverifiable", "reason": reason});
                        if let Some(note) = &note {
                            row["note"] = json!(note);
                        }
                        json_rows.push(row);
                    }
                    Format::Csv => println!("{},{n},,,unverifiable", claim.id()),
                    Format::Text => {
                        println!("{} n={n} unverifiable: {reason}", claim.id());
                        if let Some(note) = note {
                            println!("{} n={n} info: {note}", claim.id());
                        }
                    }
                }
            }
            Err(e) => return Err(e.into()),
        }
    }
    if format == Format::Json {
        println!("{}", serde_json::to_string_pretty(&json_rows).expect("serializable"));
    }
    Ok(if failed {
        FAIL
    } else if unverifiable {
        OUT_OF_RANGE
    } else {
        0
    })
}

fn cmd_bound(claim: &str, n: usize) -> CmdResult {
    let claim: Claim = claim.parse()?;
    println!("{}", bound(claim, n)?);
    Ok(0)
}
