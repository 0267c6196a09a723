//! `mcfarland`: build, check and take apart McFarland difference sets with
//! `q = 2^m`, and run the transversal oracles.
//!
//! Exit status: 0 when the verdict holds, 1 when a violation was found,
//! 2 on usage or input errors.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mcfarland_core::designs::{
    assemble_difference_set, construct_with_poly, decompose_difference_set, verify_building_sets,
    BuildingSetFamily, DifferenceSetJson, FamilyJson, SubgroupJson, SylowType,
};
use mcfarland_core::group::{subgroup_generate, ElementSet, FinAbGroup};
use mcfarland_core::group_ring::{is_difference_set, mcfarland_params, two_power_params};
use mcfarland_core::transversal::{
    classify_transversal, ei_ej_sweep, oracle_size, oracle_z43, SearchReport, SweepOptions,
    Z43Options,
};
use mcfarland_core::Error;
use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Parser)]
#[command(name = "mcfarland", version, about = "McFarland difference sets with q = 2^m")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    io: IoArgs,
}

#[derive(Args, Clone)]
struct IoArgs {
    /// report format
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// write the report here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Parameters (v, k, lambda) from q and n, or from m with q = 2^m, n = 2
    Params {
        #[arg(long)]
        q: Option<u64>,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long, conflicts_with_all = ["q", "n"])]
        m: Option<u32>,
    },
    /// Build a family of building sets from the GF(2^m) spread
    Construct {
        #[arg(long)]
        m: u32,
        /// ea or z4
        #[arg(long, default_value = "ea")]
        sylow: String,
        /// field polynomial as a bit mask, e.g. 0b1011 or 11
        #[arg(long)]
        poly: Option<String>,
    },
    /// Verify a family of building sets or a difference set (read from --in or stdin)
    Verify {
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// Glue a family of building sets to a difference set in G x H
    Assemble {
        #[arg(long = "in")]
        input: Option<PathBuf>,
        /// odd-order group, e.g. Z5
        #[arg(long)]
        odd: String,
    },
    /// Split a difference set into building sets on its Sylow 2-subgroup
    Decompose {
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// Classify a transversal {group, N, elements}, or every block of a family
    Classify {
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// Exhaustive searches
    Oracle {
        #[command(subcommand)]
        which: Oracle,
    },
}

#[derive(Subcommand)]
enum Oracle {
    /// Transversals of the socle of Z4^3 with all character sums divisible by 4
    Z43 {
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// earlier report whose finished branches are reused
        #[arg(long)]
        resume: Option<PathBuf>,
        /// only search these first-level branches, e.g. 0,3
        #[arg(long, value_delimiter = ',')]
        branches: Option<Vec<usize>>,
        /// 4 for the lemma, 2 for the control run
        #[arg(long, default_value_t = 4)]
        modulus: i64,
        #[arg(long)]
        max_witnesses: Option<usize>,
    },
    /// Transversal size bound for |E| in {2, 4} (exhaustive) and 8 (curated)
    Size {
        #[arg(long, default_value_t = 32)]
        max_order: usize,
        #[arg(long, value_delimiter = ',', default_values_t = [2usize, 4])]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Classify every transversal meeting the EI or EJ hypotheses
    Sweep {
        #[arg(long, default_value_t = 64)]
        max_order: usize,
        /// groups of order 128 with |N| = 8 instead
        #[arg(long)]
        extended: bool,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
}

enum Failure {
    Usage(String),
    Violation(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotMcFarlandShaped(_)
            | Error::InvalidDecomposition(_)
            | Error::LemmaViolation(_)
            | Error::PreconditionViolation(_)
            | Error::HypothesisNotMet(_) => Failure::Violation(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Usage(format!("malformed JSON: {e}"))
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Run = Result<Report, Failure>;

/// What a command produced: the JSON value, text lines and the verdict.
struct Report {
    json: Value,
    text: Vec<String>,
    pass: bool,
}

impl Report {
    fn new(json: impl Serialize, text: Vec<String>, pass: bool) -> Result<Self, Failure> {
        Ok(Report {
            json: serde_json::to_value(json)?,
            text,
            pass,
        })
    }
}

#[derive(Serialize, Deserialize)]
struct TransversalJson {
    group: String,
    #[serde(rename = "N")]
    n: SubgroupJson,
    elements: Vec<Vec<u32>>,
}

fn read_input(path: &Option<PathBuf>) -> Result<Value, Failure> {
    let mut s = String::new();
    match path {
        Some(p) => s = fs::read_to_string(p).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?,
        None => {
            io::stdin().read_to_string(&mut s)?;
        }
    }
    Ok(serde_json::from_str(&s)?)
}

fn read_family(v: Value) -> Result<BuildingSetFamily, Failure> {
    let j: FamilyJson = serde_json::from_value(v)?;
    Ok(BuildingSetFamily::from_json(&j)?)
}

fn parse_poly(s: &str) -> Result<u32, Failure> {
    let r = match s.strip_prefix("0b") {
        Some(b) => u32::from_str_radix(b, 2),
        None => match s.strip_prefix("0x") {
            Some(h) => u32::from_str_radix(h, 16),
            None => s.parse(),
        },
    };
    r.map_err(|_| Failure::Usage(format!("cannot read polynomial {s:?}")))
}

fn params(q: Option<u64>, n: Option<u32>, m: Option<u32>) -> Run {
    let ps = match (q, n, m) {
        (_, _, Some(m)) => two_power_params(m)?,
        (Some(q), Some(n), None) => mcfarland_params(q, n)?,
        _ => return Err(Failure::Usage("give --q and --n, or --m".into())),
    };
    let line = format!("v = {}, k = {}, lambda = {}", ps.v, ps.k, ps.lambda);
    Report::new(ps, vec![line], true)
}

fn construct(m: u32, sylow: &str, poly: &Option<String>) -> Run {
    let sylow: SylowType = sylow.parse()?;
    let poly = poly.as_deref().map(parse_poly).transpose()?;
    let c = construct_with_poly(m, sylow, poly)?;
    let f = &c.family;
    let text = vec![format!(
        "{} blocks of size {} in {}, |N| = {}",
        f.blocks.len(),
        1 << (m + 1),
        f.group.descriptor(),
        f.n.order()
    )];
    Report::new(f.to_json(), text, true)
}

fn verify(input: &Option<PathBuf>) -> Run {
    let v = read_input(input)?;
    if v.get("blocks").is_some() {
        let f = read_family(v)?;
        let r = verify_building_sets(&f)?;
        let text = vec![format!(
            "building sets: {} ({} characters, {} violations)",
            if r.verdict { "pass" } else { "fail" },
            r.characters_checked,
            r.violation_count
        )];
        let pass = r.verdict;
        Report::new(r, text, pass)
    } else if v.get("elements").is_some() {
        let d: DifferenceSetJson = serde_json::from_value(v)?;
        let r = is_difference_set(&d.to_set()?)?;
        let text = vec![match r.lambda {
            Some(l) if r.verdict => format!("difference set: pass ({}, {}, {l})", r.v, r.k),
            _ => format!("difference set: fail (v = {}, k = {})", r.v, r.k),
        }];
        let pass = r.verdict;
        Report::new(r, text, pass)
    } else {
        Err(Failure::Usage("input is neither a family (blocks) nor a set (elements)".into()))
    }
}

fn assemble(input: &Option<PathBuf>, odd: &str) -> Run {
    let f = read_family(read_input(input)?)?;
    let h = FinAbGroup::parse(odd)?;
    let d = assemble_difference_set(&f, &h)?;
    let text = vec![format!("difference set of size {} in {}", d.len(), d.group().descriptor())];
    Report::new(DifferenceSetJson::from_set(&d), text, true)
}

#[derive(Serialize)]
struct DecompositionJson {
    family: FamilyJson,
    e0: E0Json,
    e0_label: Vec<u32>,
    fiber_sizes: Vec<usize>,
}

#[derive(Serialize)]
struct E0Json {
    rep: Vec<u32>,
    subgroup: SubgroupJson,
}

fn decompose(input: &Option<PathBuf>) -> Run {
    let d: DifferenceSetJson = serde_json::from_value(read_input(input)?)?;
    let dec = decompose_difference_set(&d.to_set()?)?;
    let g = &dec.family.group;
    let out = DecompositionJson {
        family: dec.family.to_json(),
        e0: E0Json {
            rep: g.exps(dec.e0.rep),
            subgroup: SubgroupJson {
                generators: dec.e0.subgroup.generator_exps(),
            },
        },
        e0_label: dec.e0_label.clone(),
        fiber_sizes: dec.fiber_sizes.clone(),
    };
    let text = vec![format!(
        "{} building sets in {}, E0 of size {} at {:?}",
        dec.family.blocks.len(),
        g.descriptor(),
        dec.e0.len(),
        dec.e0_label
    )];
    Report::new(out, text, true)
}

fn classify(input: &Option<PathBuf>) -> Run {
    let v = read_input(input)?;
    let (n, sets) = if v.get("blocks").is_some() {
        let f = read_family(v)?;
        (f.n, f.blocks)
    } else {
        let t: TransversalJson = serde_json::from_value(v)?;
        let g = FinAbGroup::parse(&t.group)?;
        let gens = t.n.generators.iter().map(|x| g.elem(x)).collect::<Result<Vec<_>, _>>()?;
        let e = ElementSet::from_exps(&g, &t.elements)?;
        (subgroup_generate(&g, &gens), vec![e])
    };
    let mut reports = Vec::new();
    let mut text = Vec::new();
    for (i, e) in sets.iter().enumerate() {
        let r = classify_transversal(e, &n)?;
        let kind = match (r.type_i.is_some(), r.type_ii.is_some()) {
            (true, true) => "type I and type II",
            (true, false) => "type I",
            (false, true) => "type II",
            (false, false) => "neither",
        };
        text.push(format!("set {i}: {kind} (stabilizer order {})", r.stabilizer_order));
        reports.push(r);
    }
    let pass = reports.iter().all(|r| !r.neither);
    if reports.len() == 1 {
        Report::new(&reports[0], text, pass)
    } else {
        Report::new(&reports, text, pass)
    }
}

fn search_text(r: &SearchReport) -> Vec<String> {
    let mut lines = vec![format!(
        "{}: {} candidates, {} found, {}",
        r.target,
        r.candidates_examined,
        r.satisfying_found,
        if r.complete { "complete" } else { "incomplete" }
    )];
    lines.extend(r.details.iter().map(|(k, v)| format!("  {k}: {v}")));
    lines
}

fn oracle(which: &Oracle) -> Run {
    let r = match which {
        Oracle::Z43 {
            workers,
            resume,
            branches,
            modulus,
            max_witnesses,
        } => {
            let resume = match resume {
                Some(p) => {
                    let prev: SearchReport = serde_json::from_value(read_input(&Some(p.clone()))?)?;
                    prev.branches
                }
                None => Vec::new(),
            };
            let r = oracle_z43(&Z43Options {
                modulus: *modulus,
                workers: *workers,
                resume,
                only: branches.clone(),
                max_witnesses_per_branch: *max_witnesses,
            })?;
            // the relaxed modulus is a control; solutions are expected there
            let pass = *modulus != 4 || r.satisfying_found == 0;
            return Report::new(&r, search_text(&r), pass);
        }
        Oracle::Size {
            max_order,
            sizes,
            workers,
        } => oracle_size(*max_order, sizes, *workers)?,
        Oracle::Sweep {
            max_order,
            extended,
            workers,
        } => {
            let opts = if *extended {
                SweepOptions::extended(*workers)
            } else {
                SweepOptions::exhaustive(*max_order, *workers)
            };
            ei_ej_sweep(&opts)?
        }
    };
    let pass = r.satisfying_found == 0;
    Report::new(&r, search_text(&r), pass)
}

fn run(cli: &Cli) -> Run {
    match &cli.command {
        Command::Params { q, n, m } => params(*q, *n, *m),
        Command::Construct { m, sylow, poly } => construct(*m, sylow, poly),
        Command::Verify { input } => verify(input),
        Command::Assemble { input, odd } => assemble(input, odd),
        Command::Decompose { input } => decompose(input),
        Command::Classify { input } => classify(input),
        Command::Oracle { which } => oracle(which),
    }
}

fn emit(io_args: &IoArgs, report: &Report) -> io::Result<()> {
    let body = match io_args.format {
        Format::Json => serde_json::to_string_pretty(&report.json).expect("values serialize") + "\n",
        Format::Text => report.text.join("\n") + "\n",
    };
    match &io_args.out {
        Some(p) => fs::write(p, body),
        None => io::stdout().lock().write_all(body.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            if let Err(e) = emit(&cli.io, &report) {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            if report.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Violation(msg)) => {
            eprintln!("violation: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
