mod target;

use std::fmt;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use arq_core::denom::{conjecture_table, verify_denominator};
use arq_core::fixtures::{self, GridFixture, ReadingsFixture};
use arq_core::verify::{check_with, Property};
use arq_core::words::format_letters;
use arq_core::{
    bilex_less, coarse_less, find_quiver, partial_less, total_less, ARQuiver, CommClass, Error, Mode,
    RootSequence, SeqCalc, Socle,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use target::TargetArgs;

const DEFAULT_CAP: usize = 1_000_000;

#[derive(Debug, Parser)]
#[command(name = "arq", version, about = "Convex orders, socles and distances on AR quivers of ADE type")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Clone, Args)]
struct Common {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Maximum number of commutation class members to enumerate.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP, value_parser = parse_cap)]
    cap_class: usize,
    /// Maximum number of vector partitions to enumerate.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP, value_parser = parse_cap)]
    cap_partitions: usize,
    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
    Latex,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the AR quiver of a Dynkin quiver.
    Show(TargetArgs),
    /// Reduced words, heaps and commutation classes.
    Word {
        #[arg(value_enum)]
        action: WordAction,
        #[command(flatten)]
        target: TargetArgs,
    },
    /// Compare roots or sequences.
    Order {
        #[command(subcommand)]
        action: OrderAction,
    },
    /// Socles, distances and radii of pairs.
    Pair {
        #[arg(value_enum)]
        action: PairAction,
        #[command(flatten)]
        target: TargetArgs,
        /// A pair or sequence such as "{2|-4},{1|2}" or "(111001,123212)".
        #[arg(long)]
        pair: Option<String>,
        /// A positive root, for radius.
        #[arg(long)]
        gamma: Option<String>,
    },
    /// Denominator formulas read from AR quivers.
    Denom {
        #[arg(value_enum)]
        action: DenomAction,
        #[command(flatten)]
        target: TargetArgs,
        #[arg(long)]
        all_orientations: bool,
    },
    /// Check a property on one or all orientations.
    Verify {
        #[arg(value_parser = parse_property)]
        property: Property,
        #[command(flatten)]
        target: TargetArgs,
        #[arg(long)]
        all_orientations: bool,
    },
    /// Built-in golden data.
    Fixture {
        #[arg(value_enum)]
        action: FixtureAction,
        name: Option<String>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum WordAction {
    Roots,
    Check,
    Heap,
    Class,
}

#[derive(Debug, Subcommand)]
enum OrderAction {
    /// Whether LHS is below RHS.
    Cmp {
        #[arg(long, value_enum)]
        kind: OrderKind,
        #[command(flatten)]
        target: TargetArgs,
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OrderKind {
    Total,
    Partial,
    Bilex,
    Coarse,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum PairAction {
    Socle,
    Dist,
    Gdist,
    Len,
    Radius,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum DenomAction {
    Verify,
    Table,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FixtureAction {
    List,
    Show,
    Diff,
}

fn parse_cap(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("caps must be at least 1".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

fn parse_property(s: &str) -> Result<Property, String> {
    s.parse().map_err(|_| {
        let names: Vec<&str> = Property::ALL.iter().map(|p| p.name()).collect();
        format!("unknown property {s:?}; expected one of {}", names.join(", "))
    })
}

/// Why a command did not succeed, mapped onto the exit status.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Mismatch(String),
    Cap(String),
    Io(String),
}

impl Failure {
    pub fn usage(msg: impl Into<String>) -> Self {
        Failure::Usage(msg.into())
    }

    fn code(&self) -> u8 {
        match self {
            Failure::Mismatch(_) => 1,
            Failure::Usage(_) | Failure::Io(_) => 2,
            Failure::Cap(_) => 3,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) | Failure::Mismatch(m) | Failure::Cap(m) | Failure::Io(m) => f.write_str(m),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ClassTooLarge { .. } | Error::EnumerationCapExceeded { .. } => Failure::Cap(e.to_string()),
            Error::WellDefinednessViolation { .. } => Failure::Mismatch(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

/// Collected output plus whether any check failed.
struct Output {
    text: String,
    mismatch: bool,
}

impl Output {
    fn new(text: impl Into<String>) -> Self {
        Output { text: text.into(), mismatch: false }
    }

    fn json(value: serde_json::Value) -> Self {
        Output::new(serde_json::to_string_pretty(&value).expect("json values serialize") + "\n")
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|out| {
        write_output(&cli.common, &out.text)?;
        if out.mismatch {
            Err(Failure::Mismatch("verification failed".into()))
        } else {
            Ok(())
        }
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("arq: {f}");
            ExitCode::from(f.code())
        }
    }
}

fn write_output(common: &Common, text: &str) -> Result<(), Failure> {
    match &common.out {
        Some(path) => std::fs::write(path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display()))),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Io(e.to_string())),
    }
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    let c = &cli.common;
    match &cli.command {
        Command::Show(target) => show(c, target),
        Command::Word { action, target } => word(c, *action, target),
        Command::Order { action: OrderAction::Cmp { kind, target, lhs, rhs } } => order(c, *kind, target, lhs, rhs),
        Command::Pair { action, target, pair: p, gamma } => pair(c, *action, target, p.as_deref(), gamma.as_deref()),
        Command::Denom { action, target, all_orientations } => denom(c, *action, target, *all_orientations),
        Command::Verify { property, target, all_orientations } => verify(c, *property, target, *all_orientations),
        Command::Fixture { action, name } => fixture(c, *action, name.as_deref()),
    }
}

fn unsupported(format: Format, command: &str) -> Failure {
    Failure::usage(format!("--format {format:?} is not available for {command}").to_lowercase())
}

fn show(c: &Common, target: &TargetArgs) -> Result<Output, Failure> {
    let arq = ARQuiver::build(&target.quiver()?);
    Ok(match c.format {
        Format::Text => Output::new(arq.to_text()),
        Format::Dot => Output::new(arq.to_dot()),
        Format::Json => Output::json(arq.to_json()),
        Format::Latex => return Err(unsupported(c.format, "show")),
    })
}

fn word(c: &Common, action: WordAction, target: &TargetArgs) -> Result<Output, Failure> {
    let t = target.resolve()?;
    let w = t.word();
    let sys = w.system().clone();
    let json = c.format == Format::Json;
    if !matches!(c.format, Format::Text | Format::Json) {
        return Err(unsupported(c.format, "word"));
    }
    let class = CommClass::new(w.clone());
    Ok(match action {
        WordAction::Roots => {
            let roots: Vec<String> = w.roots().iter().map(|&r| sys.format_root(r)).collect();
            if json {
                Output::json(json!({ "word": format_letters(w.letters()), "roots": roots }))
            } else {
                Output::new(roots.join("\n") + "\n")
            }
        }
        WordAction::Check => {
            let quiver = find_quiver(&class).map(|q| q.to_spec());
            if json {
                Output::json(json!({
                    "word": format_letters(w.letters()),
                    "reduced": true,
                    "longest": w.is_longest(),
                    "adapted_to": quiver,
                }))
            } else {
                Output::new(format!(
                    "reduced: yes\nlongest: {}\nadapted to: {}\n",
                    if w.is_longest() { "yes" } else { "no" },
                    quiver.as_deref().unwrap_or("none")
                ))
            }
        }
        WordAction::Heap => {
            let heap = class.heap_json();
            if json {
                Output::json(heap)
            } else {
                let mut out = String::new();
                for &(p, q) in class.covers() {
                    out.push_str(&format!(
                        "{} -> {}\n",
                        sys.format_root(w.roots()[p]),
                        sys.format_root(w.roots()[q])
                    ));
                }
                Output::new(out)
            }
        }
        WordAction::Class => {
            let members = class.enumerate(c.cap_class)?;
            let words: Vec<String> = members.iter().map(|m| format_letters(m.letters())).collect();
            if json {
                Output::json(json!({ "size": words.len(), "members": words }))
            } else {
                Output::new(words.join("\n") + "\n")
            }
        }
    })
}

fn order(c: &Common, kind: OrderKind, target: &TargetArgs, lhs: &str, rhs: &str) -> Result<Output, Failure> {
    let t = target.resolve()?;
    let sys = t.system().clone();
    let less = match kind {
        OrderKind::Total | OrderKind::Partial => {
            let (a, b) = (sys.parse_root(lhs)?, sys.parse_root(rhs)?);
            if kind == OrderKind::Total {
                total_less(&t.word(), a, b)?
            } else {
                partial_less(&t.class(), a, b)?
            }
        }
        OrderKind::Bilex | OrderKind::Coarse => {
            let (a, b) = (RootSequence::parse(&sys, lhs)?, RootSequence::parse(&sys, rhs)?);
            let class = t.class();
            for r in a.support().iter().chain(b.support().iter()) {
                if !class.contains(r) {
                    return Err(Error::RootNotInWord(sys.format_root(r)).into());
                }
            }
            if kind == OrderKind::Bilex {
                bilex_less(&t.word(), &a, &b)
            } else {
                coarse_less(&class, &a, &b)
            }
        }
    };
    Ok(match c.format {
        Format::Json => Output::json(json!({ "lhs": lhs, "rhs": rhs, "less": less })),
        Format::Text => Output::new(format!("{less}\n")),
        _ => return Err(unsupported(c.format, "order")),
    })
}

fn pair(
    c: &Common,
    action: PairAction,
    target: &TargetArgs,
    pair: Option<&str>,
    gamma: Option<&str>,
) -> Result<Output, Failure> {
    if !matches!(c.format, Format::Text | Format::Json) {
        return Err(unsupported(c.format, "pair"));
    }
    let json = c.format == Format::Json;
    let calc = SeqCalc::with_cap(target.resolve()?.class(), c.cap_partitions);
    let sys = calc.system();
    let word = calc.class().word().clone();
    let fmt = |m: &RootSequence| m.format(&word);
    if let PairAction::Radius = action {
        let g = sys.parse_root(gamma.ok_or_else(|| Failure::usage("radius needs --gamma"))?)?;
        let (r, witness) = calc.radius_witness(g)?;
        let chain = match &witness {
            Some(w) => {
                let (a, b) = calc.pair_roots(w)?;
                calc.chain_json(&calc.dist_chain(a, b)?).chain
            }
            None => Vec::new(),
        };
        let witness = witness.as_ref().map(fmt);
        return Ok(if json {
            Output::json(json!({ "gamma": sys.format_root(g), "radius": r, "witness": witness, "chain": chain }))
        } else {
            let mut out = format!("{r}\n");
            if let Some(w) = witness {
                out.push_str(&format!("witness: {w}\n"));
            }
            if !chain.is_empty() {
                out.push_str(&format!("chain: {}\n", chain.join(" < ")));
            }
            Output::new(out)
        });
    }
    let text = pair.ok_or_else(|| Failure::usage("missing --pair"))?;
    let m = RootSequence::parse(sys, text)?;
    let label = fmt(&m);
    Ok(match action {
        PairAction::Socle => match calc.socle(&m)? {
            Socle::Defined(s) if json => Output::json(json!({ "pair": label, "defined": true, "socle": fmt(&s) })),
            Socle::Defined(s) => Output::new(format!("{}\n", fmt(&s))),
            Socle::Undefined(list) => {
                let list: Vec<String> = list.iter().map(fmt).collect();
                if json {
                    Output::json(json!({ "pair": label, "defined": false, "simple_sequences": list }))
                } else {
                    Output::new(format!("undefined: {} simple sequences below\n{}\n", list.len(), list.join("\n")))
                }
            }
        },
        PairAction::Dist | PairAction::Gdist => {
            let chain = match action {
                PairAction::Dist => {
                    let (a, b) = calc.pair_roots(&m)?;
                    calc.dist_chain(a, b)?
                }
                _ => calc.gdist_chain(&m)?,
            };
            let cj = calc.chain_json(&chain);
            if json {
                Output::json(json!({ "pair": label, "length": cj.length, "chain": cj.chain }))
            } else if cj.chain.is_empty() {
                Output::new(format!("{}\n", cj.length))
            } else {
                Output::new(format!("{}\nchain: {} < {label}\n", cj.length, cj.chain.join(" < ")))
            }
        }
        PairAction::Len => {
            let good: Vec<String> = calc.good_neighbors(&m)?.iter().map(fmt).collect();
            if json {
                Output::json(json!({ "pair": label, "len": good.len(), "good_neighbors": good }))
            } else {
                Output::new(format!("{}\n{}", good.len(), good.iter().map(|g| g.clone() + "\n").collect::<String>()))
            }
        }
        PairAction::Radius => unreachable!("handled above"),
    })
}

fn denom(c: &Common, action: DenomAction, target: &TargetArgs, all: bool) -> Result<Output, Failure> {
    match action {
        DenomAction::Verify => {
            let mut reports = Vec::new();
            for q in target.quivers(all)? {
                reports.push(verify_denominator(&q, Mode::Checked)?);
            }
            let mut out = match c.format {
                Format::Json => Output::json(serde_json::to_value(&reports).expect("reports serialize")),
                Format::Text => {
                    let mut text = String::new();
                    for r in &reports {
                        let status = if r.is_ok() { "ok" } else { "MISMATCH" };
                        text.push_str(&format!("{}: {status} ({} entries)\n", r.orientation, r.checked));
                        for m in &r.mismatches {
                            text.push_str(&format!(
                                "  d_{},{}: computed {}, expected {}, differs at t = {:?}\n",
                                m.k, m.l, m.computed, m.expected, m.offending
                            ));
                        }
                    }
                    Output::new(text)
                }
                _ => return Err(unsupported(c.format, "denom verify")),
            };
            out.mismatch = reports.iter().any(|r| !r.is_ok());
            Ok(out)
        }
        DenomAction::Table => {
            let sys = target.system()?;
            let has_quiver = target.orient.is_some() || target.class.is_some() || target.fixture.is_some();
            let quiver = if has_quiver { Some(target.quiver()?) } else { None };
            let mut tables = Vec::new();
            if all {
                for q in arq_core::DynkinQuiver::all(&sys) {
                    tables.push(conjecture_table(&sys, Some(&q), Mode::Checked)?);
                }
            } else {
                tables.push(conjecture_table(&sys, quiver.as_ref(), Mode::Checked)?);
            }
            let first = &tables[0];
            let mut out = match c.format {
                Format::Text => Output::new(first.to_text()),
                Format::Latex => Output::new(first.to_latex()),
                Format::Json => Output::json(serde_json::to_value(first).expect("tables serialize")),
                Format::Dot => return Err(unsupported(c.format, "denom table")),
            };
            let differing: Vec<&str> = tables
                .iter()
                .filter(|t| t.entries != first.entries)
                .map(|t| t.orientation.as_str())
                .collect();
            if !differing.is_empty() {
                eprintln!("arq: tables differ for orientations {}", differing.join("; "));
                out.mismatch = true;
            }
            Ok(out)
        }
    }
}

fn verify(c: &Common, property: Property, target: &TargetArgs, all: bool) -> Result<Output, Failure> {
    let mut reports = Vec::new();
    for q in target.quivers(all)? {
        let arq = ARQuiver::build(&q);
        let calc = SeqCalc::with_cap(arq.class(), c.cap_partitions);
        reports.push(check_with(property, &arq, &calc)?);
    }
    let failed = reports.iter().filter(|r| !r.is_ok()).count();
    let mut out = match c.format {
        Format::Json => Output::json(serde_json::to_value(&reports).expect("reports serialize")),
        Format::Text => {
            let mut text: String = reports.iter().map(|r| r.to_string()).collect();
            text.push_str(&format!("{property}: {} orientations, {failed} failed\n", reports.len()));
            Output::new(text)
        }
        _ => return Err(unsupported(c.format, "verify")),
    };
    out.mismatch = failed > 0;
    Ok(out)
}

fn fixture(c: &Common, action: FixtureAction, name: Option<&str>) -> Result<Output, Failure> {
    if let FixtureAction::List = action {
        return Ok(Output::new(fixtures::names().join("\n") + "\n"));
    }
    let name = name.ok_or_else(|| Failure::usage("missing fixture name"))?;
    match action {
        FixtureAction::Show => Ok(Output::new(fixtures::load_raw(name)?)),
        FixtureAction::Diff => {
            if ReadingsFixture::load(name).is_ok() {
                return readings_diff(c, name);
            }
            let fx = GridFixture::load(name)?;
            let diff = fx.diff(&ARQuiver::build(&fx.quiver()?));
            let mut out = match c.format {
                Format::Json => Output::json(serde_json::to_value(&diff).expect("diffs serialize")),
                _ => Output::new(diff.to_string()),
            };
            out.mismatch = !diff.is_empty();
            Ok(out)
        }
        FixtureAction::List => unreachable!("handled above"),
    }
}

/// Printed readings that are not readings of the fixture's AR quiver.
fn readings_diff(c: &Common, name: &str) -> Result<Output, Failure> {
    let fx = ReadingsFixture::load(name)?;
    let sys = std::sync::Arc::new(arq_core::RootSystem::new(fx.kind, fx.rank)?);
    let arq = ARQuiver::build(&arq_core::DynkinQuiver::parse(&sys, &fx.orientation)?);
    let mut missing = Vec::new();
    for reading in &fx.readings {
        let roots: Result<Vec<_>, _> = reading.iter().map(|r| sys.parse_root(r)).collect();
        let found = roots?.iter().map(|&r| arq.residue(r)).collect::<Vec<_>>();
        let ok = arq_core::ReducedWord::new(&sys, found)
            .map(|w| arq.is_reading(&w) && w.roots().iter().map(|&r| sys.format_root(r)).eq(reading.iter().cloned()))
            .unwrap_or(false);
        if !ok {
            missing.push(reading.join(" "));
        }
    }
    let mut out = match c.format {
        Format::Json => Output::json(json!({ "name": name, "not_readings": missing })),
        _ if missing.is_empty() => Output::new("no differences\n"),
        _ => Output::new(missing.iter().map(|m| format!("not a reading: {m}\n")).collect::<String>()),
    };
    out.mismatch = !missing.is_empty();
    Ok(out)
}
