//! The `hang` command line.
//!
//! Exit codes: 0 on success, 1 when a word disagrees with its spec (the first
//! differing subset is printed), 2 on usage, parse or spec errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::compiler::{
    compile, estimate_length, Auxiliary, CompileOptions, CompileReport, Verification,
};
use crate::constructions::{build_disjoint, build_e};
use crate::error::Error;
use crate::formula::{
    parse_formula, parse_formula_with_n, validate_spec, MonotoneCircuit, PuzzleSpec,
};
use crate::freegroup::{fall_table, NailSubset, Word};
use crate::puzzles::{fixture, load_fixtures, PuzzleFixture};
use crate::render::{to_diagram, Format};
use crate::sortnet::{build_k_of_n, threshold_circuit};
use crate::spectator::{
    greedy_min_fell, max_survive_exact, min_fell_exact, set_cover_optimum, set_cover_to_hanging,
};

#[derive(Parser, Debug)]
#[command(
    name = "hang",
    version,
    about = "Picture-hanging puzzles as free-group words"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a hanging from one of the direct constructions.
    Construct {
        #[command(subcommand)]
        kind: Construct,
    },
    /// Compile a fall specification into a verified hanging.
    Compile(CompileArgs),
    /// Check a word against a spec on every subset of nails.
    Verify {
        #[arg(long)]
        word: PathBuf,
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Spectator problems: which nails to pull.
    Solve {
        #[command(subcommand)]
        problem: Solve,
    },
    /// Draw a word as a weaving diagram.
    Render {
        #[arg(long)]
        word: PathBuf,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long, default_value = "svg")]
        format: String,
    },
    /// Show the puzzle fixtures and their solutions.
    Puzzles {
        #[arg(long)]
        id: Option<u32>,
        #[arg(long)]
        json: bool,
    },
    /// Print the fall table of a word.
    Table {
        #[arg(long)]
        word: PathBuf,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand, Debug)]
enum Construct {
    /// Falls when any one of n nails is removed.
    OneOf {
        #[arg(long)]
        n: u32,
    },
    /// Falls when at least k of n nails are removed.
    KOf {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        compile: CompileFlags,
    },
    /// Falls when every nail of some class is removed.
    Classes {
        /// Classes separated by ';', nails by ',', e.g. "1,2;3,4".
        #[arg(long)]
        classes: String,
        #[arg(long)]
        n: Option<u32>,
    },
}

#[derive(Args, Debug)]
struct CompileFlags {
    #[arg(long, default_value_t = crate::compiler::DEFAULT_LETTER_BUDGET)]
    budget: u64,
    /// Use nails 1 and 2 as the gadget auxiliaries instead of two extra nails.
    #[arg(long)]
    shared_aux: bool,
    /// Print the length estimate without building the word.
    #[arg(long)]
    dry_run: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct CompileArgs {
    #[arg(long, conflicts_with = "formula", required_unless_present = "formula")]
    spec: Option<PathBuf>,
    #[arg(long)]
    formula: Option<String>,
    /// Number of nails for --formula; defaults to the largest variable.
    #[arg(long)]
    n: Option<u32>,
    #[command(flatten)]
    flags: CompileFlags,
}

#[derive(Clone, Copy, Debug)]
enum Strategy {
    MinFell,
    MaxSurvive,
    Greedy,
}

#[derive(Subcommand, Debug)]
enum Solve {
    /// Fewest nails whose removal fells the picture.
    MinFell(SolveArgs),
    /// Most nails removable while the picture still hangs.
    MaxSurvive(SolveArgs),
    /// Greedy heuristic for min-fell.
    Greedy(SolveArgs),
    /// Encode a Set Cover instance {"m": .., "sets": [[..], ..]} as a hanging.
    SetCover {
        #[arg(long)]
        instance: PathBuf,
        /// Also solve the encoded hanging exactly and report the cover.
        #[arg(long)]
        solve: bool,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args, Debug)]
struct SolveArgs {
    #[arg(long)]
    word: PathBuf,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    json: bool,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SetCoverInstance {
    m: u32,
    sets: Vec<Vec<u32>>,
}

/// What a command produced, before it is written out.
enum Outcome {
    Ok,
    Mismatch,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Lib(#[from] Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
}

type CliResult<T> = Result<T, CliError>;

fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn read_word(path: &Path) -> CliResult<Word> {
    Ok(Word::parse_any(read(path)?.trim())?)
}

fn json_line<T: Serialize>(out: &mut dyn Write, value: &T) -> std::io::Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(rendered.as_bytes())
            } else {
                err.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(Outcome::Ok) => 0,
        Ok(Outcome::Mismatch) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn io(e: std::io::Error) -> CliError {
    CliError::Io {
        path: "<output>".into(),
        source: e,
    }
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<Outcome> {
    match command {
        Command::Construct { kind } => construct(kind, out, err),
        Command::Compile(args) => compile_cmd(args, out, err),
        Command::Verify { word, spec, json } => {
            let word = read_word(&word)?;
            let spec = PuzzleSpec::from_json(&read(&spec)?)?;
            verify_cmd(&word, &spec, json, out)
        }
        Command::Solve { problem } => solve(problem, out, err),
        Command::Render { word, n, format } => {
            let format: Format = format.parse()?;
            let word = read_word(&word)?;
            let n = n.unwrap_or_else(|| word.max_nail());
            out.write_all(to_diagram(&word, n, format)?.as_bytes())
                .map_err(io)?;
            Ok(Outcome::Ok)
        }
        Command::Puzzles { id, json } => puzzles(id, json, out),
        Command::Table { word, n, json } => {
            let word = read_word(&word)?;
            let n = n.unwrap_or_else(|| word.max_nail());
            let table = fall_table(&word, n)?;
            if json {
                let rows: Vec<_> = (0..1u64 << n)
                    .map(|m| {
                        let s = NailSubset::from_mask(n, m).unwrap();
                        serde_json::json!({"removed": s.to_vec(), "falls": table.get(&s)})
                    })
                    .collect();
                json_line(out, &rows).map_err(io)?;
            } else {
                write!(out, "{table}").map_err(io)?;
            }
            Ok(Outcome::Ok)
        }
    }
}

fn options(flags: &CompileFlags) -> CompileOptions {
    CompileOptions {
        auxiliary: if flags.shared_aux {
            Auxiliary::Shared
        } else {
            Auxiliary::Anchored
        },
        budget: flags.budget,
        ..Default::default()
    }
}

fn dry_run(
    circuit: &MonotoneCircuit,
    flags: &CompileFlags,
    out: &mut dyn Write,
) -> CliResult<Outcome> {
    let estimate = estimate_length(circuit);
    let depth = circuit.depth();
    if flags.json {
        json_line(
            out,
            &serde_json::json!({
                "n": circuit.n(),
                "depth": depth,
                "estimate": estimate,
                "budget": flags.budget,
                "within_budget": estimate <= flags.budget,
            }),
        )
        .map_err(io)?;
    } else {
        writeln!(
            out,
            "n = {}, depth {depth}, estimated length {estimate}, budget {} ({})",
            circuit.n(),
            flags.budget,
            if estimate <= flags.budget {
                "within"
            } else {
                "exceeded"
            }
        )
        .map_err(io)?;
    }
    Ok(Outcome::Ok)
}

fn report(
    r: &CompileReport,
    json: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CliResult<Outcome> {
    if json {
        json_line(out, r).map_err(io)?;
    } else {
        writeln!(out, "{}", r.word).map_err(io)?;
        let _ = writeln!(
            err,
            "{} letters ({} as constructed, estimate {}), depth {}, nails 1..={}{}",
            r.reduced_length,
            r.as_constructed_length,
            r.estimate,
            r.depth,
            r.nails,
            match r.anchors {
                Some([a, b]) => format!(", fixed auxiliary nails {a} and {b}"),
                None => String::new(),
            }
        );
        let _ = match &r.verification {
            Verification::Verified { subsets } => {
                writeln!(err, "verified on all {subsets} subsets")
            }
            Verification::Mismatch {
                subset,
                expected,
                actual,
            } => writeln!(
                err,
                "MISMATCH removing {}: expected {}, word {}",
                NailSubset::from_nails(r.nails, subset.iter().copied()).unwrap(),
                falls_word(*expected),
                falls_word(*actual)
            ),
            Verification::Skipped { reason } => writeln!(err, "UNVERIFIED: {reason}"),
        };
    }
    Ok(match r.verification {
        Verification::Mismatch { .. } => Outcome::Mismatch,
        _ => Outcome::Ok,
    })
}

fn falls_word(v: bool) -> &'static str {
    if v {
        "falls"
    } else {
        "hangs"
    }
}

fn construct(kind: Construct, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<Outcome> {
    let word = match kind {
        Construct::OneOf { n } => build_e(&(1..=n).collect::<Vec<_>>())?,
        Construct::KOf { k, n, compile } => {
            if compile.dry_run {
                if k < 1 || k > n {
                    return Err(Error::KOutOfRange { k, n }.into());
                }
                return dry_run(&threshold_circuit(k, n), &compile, out);
            }
            let r = build_k_of_n(k, n, &options(&compile))?;
            return report(&r, compile.json, out, err);
        }
        Construct::Classes { classes, n } => {
            let classes = parse_classes(&classes)?;
            let n = n.unwrap_or_else(|| classes.iter().flatten().copied().max().unwrap_or(0));
            build_disjoint(n, &classes)?
        }
    };
    writeln!(out, "{word}").map_err(io)?;
    Ok(Outcome::Ok)
}

fn parse_classes(text: &str) -> CliResult<Vec<Vec<u32>>> {
    text.split(';')
        .map(|class| {
            class
                .split(',')
                .map(|t| {
                    t.trim().parse::<u32>().map_err(|_| {
                        CliError::Usage(format!("bad nail {:?} in --classes", t.trim()))
                    })
                })
                .collect()
        })
        .collect()
}

fn compile_cmd(args: CompileArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<Outcome> {
    let spec = match (&args.spec, &args.formula) {
        (Some(path), _) => PuzzleSpec::from_json(&read(path)?)?,
        (None, Some(text)) => {
            let c = match args.n {
                Some(n) => parse_formula_with_n(text, n)?,
                None => parse_formula(text)?,
            };
            PuzzleSpec::circuit(c)
        }
        (None, None) => unreachable!("clap requires one of --spec, --formula"),
    };
    let validated = validate_spec(&spec)?;
    for notice in &validated.notices {
        let _ = writeln!(err, "note: {notice}");
    }
    let circuit = validated.spec.to_circuit()?;
    if args.flags.dry_run {
        return dry_run(&circuit, &args.flags, out);
    }
    let r = compile(&circuit, &options(&args.flags))?;
    report(&r, args.flags.json, out, err)
}

fn verify_cmd(
    word: &Word,
    spec: &PuzzleSpec,
    json: bool,
    out: &mut dyn Write,
) -> CliResult<Outcome> {
    let n = spec.n;
    if word.max_nail() > n {
        return Err(Error::NailOutOfRange {
            nail: word.max_nail(),
            n,
        }
        .into());
    }
    let expected = spec.to_circuit()?.table()?;
    let actual = fall_table(word, n)?;
    let mismatch = expected.first_mismatch(&actual);
    if json {
        let value = match &mismatch {
            None => serde_json::json!({"verified": true, "subsets": 1u64 << n}),
            Some(m) => serde_json::json!({
                "verified": false,
                "removed": m.subset.to_vec(),
                "expected": m.expected,
                "actual": m.actual,
            }),
        };
        json_line(out, &value).map_err(io)?;
    } else {
        match &mismatch {
            None => writeln!(out, "verified: all {} subsets agree", 1u64 << n),
            Some(m) => writeln!(
                out,
                "mismatch removing {}: spec says the picture {}, the word {}",
                m.subset,
                falls_word(m.expected),
                falls_word(m.actual)
            ),
        }
        .map_err(io)?;
    }
    Ok(if mismatch.is_some() {
        Outcome::Mismatch
    } else {
        Outcome::Ok
    })
}

fn solve(problem: Solve, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<Outcome> {
    let (strategy, args) = match problem {
        Solve::MinFell(a) => (Strategy::MinFell, a),
        Solve::MaxSurvive(a) => (Strategy::MaxSurvive, a),
        Solve::Greedy(a) => (Strategy::Greedy, a),
        Solve::SetCover {
            instance,
            solve,
            json,
        } => return set_cover(&instance, solve, json, out, err),
    };
    let word = read_word(&args.word)?;
    let n = args.n.unwrap_or_else(|| word.max_nail());
    let subset = match strategy {
        Strategy::MinFell => min_fell_exact(&word, n)?,
        Strategy::MaxSurvive => max_survive_exact(&word, n)?,
        Strategy::Greedy => greedy_min_fell(&word, n)?,
    };
    if args.json {
        json_line(
            out,
            &serde_json::json!({"removed": subset.to_vec(), "size": subset.len()}),
        )
        .map_err(io)?;
    } else {
        writeln!(out, "{subset}").map_err(io)?;
    }
    Ok(Outcome::Ok)
}

fn set_cover(
    path: &Path,
    solve: bool,
    json: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CliResult<Outcome> {
    let instance: SetCoverInstance =
        serde_json::from_str(&read(path)?).map_err(|e| Error::InvalidInstance(e.to_string()))?;
    let encoded = set_cover_to_hanging(instance.m, &instance.sets)?;
    let cover = if solve {
        Some(min_fell_exact(&encoded.word, encoded.n)?)
    } else {
        None
    };
    if json {
        let mut value = serde_json::to_value(&encoded).expect("serializable");
        if let Some(c) = &cover {
            value["cover"] = serde_json::json!(c.to_vec());
            value["brute_force_optimum"] =
                serde_json::json!(set_cover_optimum(instance.m, &instance.sets));
        }
        json_line(out, &value).map_err(io)?;
    } else {
        writeln!(out, "{}", encoded.word).map_err(io)?;
        for (j, nails) in encoded.element_nails.iter().enumerate() {
            let _ = writeln!(err, "u{} <- nails {:?}", j + 1, nails);
        }
        if let Some([a, b]) = encoded.anchors {
            let _ = writeln!(err, "auxiliary nails {a} and {b} stay in place");
        }
        if let Some(c) = &cover {
            let _ = writeln!(err, "optimal cover: sets {c} ({} sets)", c.len());
        }
    }
    Ok(Outcome::Ok)
}

fn puzzles(id: Option<u32>, json: bool, out: &mut dyn Write) -> CliResult<Outcome> {
    let list: Vec<PuzzleFixture> = match id {
        Some(id) => vec![fixture(id)?],
        None => load_fixtures(),
    };
    for f in &list {
        if json {
            json_line(
                out,
                &serde_json::json!({
                    "id": f.id,
                    "name": f.name,
                    "statement": f.statement,
                    "n": f.n,
                    "word": f.word,
                    "word_text": f.word.to_string(),
                    "spec": serde_json::from_str::<serde_json::Value>(&f.spec.to_json()).unwrap(),
                }),
            )
            .map_err(io)?;
        } else if id.is_some() {
            writeln!(out, "{}", f.word).map_err(io)?;
            writeln!(out, "{}", f.spec.to_json()).map_err(io)?;
        } else {
            writeln!(
                out,
                "{:>2}  {:<18} {:>3} letters  {}",
                f.id,
                f.name,
                f.word.len(),
                f.spec.to_json()
            )
            .map_err(io)?;
        }
    }
    Ok(Outcome::Ok)
}
