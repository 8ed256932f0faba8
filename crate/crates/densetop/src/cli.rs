//! Command-line front door: enumeration dumps, single-space checks,
//! exhaustive statement sweeps, counterexample search, symbolic-model
//! claims, and machine-readable reports.
//!
//! Exit codes: 0 success/verified, 1 falsified (a sweep or cross-validation
//! reported failures), 2 usage or input error, 3 cap exceeded.
//!
//! Reports are deterministic given (command, caps, mode): evaluation is
//! sequential, struct fields serialize in declaration order, and
//! `--elide-timing` zeroes the one wall-clock field so that two runs emit
//! identical bytes.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::dense::{
    dc_decomposition, dense_ultraconnected_witness, is_dense_connected_fast,
    is_dense_pathwise_fast, is_dense_ultraconnected_fast, is_locally_dense_connected_fast,
    predicate_names,
};
use crate::enumerate::{enumerate_topologies, Caps, Mode, ENUM_HARD_CAP};
use crate::error::{Error, Result};
use crate::expr::Expr;
use crate::space::FiniteSpace;
use crate::symbolic::{self, Model};
use crate::theorems::{theorem_ids, theorem_info, verify_theorem};

// ---------------------------------------------------------------------------
// Argument grammar
// ---------------------------------------------------------------------------

#[derive(Parser, Debug)]
#[command(
    name = "densetop",
    version,
    about = "Deciders and exhaustive checkers for dense-subset properties of finite \
             topological spaces, topologized finite groups, and six rule-based \
             infinite models"
)]
struct Cli {
    /// Output format for reports.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Parallelism hint. Evaluation is sequential (already deterministic);
    /// the flag is accepted for interface stability.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    /// Every labeled topology.
    Labeled,
    /// One representative per homeomorphism class.
    Classes,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Labeled => Mode::Labeled,
            ModeArg::Classes => Mode::Classes,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Stream every topology at a given size, one JSON space per line,
    /// followed by a count summary.
    Enumerate {
        /// Carrier size.
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = ModeArg::Labeled)]
        mode: ModeArg,
    },
    /// Print the full property profile of one space: connectivity flags,
    /// fast deciders, separation profile.
    Check {
        /// A JSON space file, or `named:<name>` — named spaces are
        /// sierpinski, discrete:<n>, indiscrete:<n>, h_analogue,
        /// sierpinski_sq, and sum:<name>+<name>.
        target: String,
    },
    /// Exhaustively verify a registered statement at a given scale.
    Verify {
        /// Statement id; `verify list` prints the registry.
        theorem: String,
        /// Carrier-size scale for space statements (default: the
        /// statement's registered scale).
        #[arg(long)]
        n: Option<usize>,
        /// Group-order scale for group statements.
        #[arg(long)]
        order: Option<usize>,
        #[arg(long, value_enum, default_value_t = ModeArg::Labeled)]
        mode: ModeArg,
        /// Also write the JSON report to this path.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Zero the elapsed-time field so reports are byte-identical
        /// across runs.
        #[arg(long)]
        elide_timing: bool,
    },
    /// Hunt the enumerated universe for a space satisfying a boolean
    /// combination of registered predicates.
    Search {
        /// Predicate expression: identifiers, `&`, `|`, `!`, parentheses.
        #[arg(long)]
        property: String,
        /// Search sizes 0 through this carrier size.
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = ModeArg::Labeled)]
        mode: ModeArg,
    },
    /// Evaluate a registered claim of a symbolic model, or cross-validate
    /// the model's rules against window samples.
    Sym {
        /// Model name: cofinite_N, opc_discrete, ray_R, ray_R_closed,
        /// window_Z, H_space.
        model: String,
        /// Claim name; omit with --cross-validate.
        #[arg(required_unless_present = "cross_validate", conflicts_with = "cross_validate")]
        claim: Option<String>,
        /// Print the derivation trace.
        #[arg(long)]
        trace: bool,
        /// Replay the model's rules against finite window samples.
        #[arg(long)]
        cross_validate: bool,
        /// Window radius for --cross-validate.
        #[arg(long, default_value_t = 64)]
        radius: i64,
    },
}

// ---------------------------------------------------------------------------
// Entry points
// ---------------------------------------------------------------------------

/// Parses `argv` (without the program name) and runs; returns the process
/// exit code.
pub fn run<I>(argv: I) -> i32
where
    I: IntoIterator<Item = String>,
{
    let mut full = vec!["densetop".to_string()];
    full.extend(argv);
    let cli = match Cli::try_parse_from(full) {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders help/version as "errors"; keep their exit 0.
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let caps = match caps_from_env() {
        Ok(caps) => caps,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    match dispatch(&cli, &caps) {
        Ok(Outcome { stdout, verified }) => {
            print!("{stdout}");
            if verified {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            if cli.format == Format::Json {
                println!("{}", json!({ "error": e.to_string() }));
            }
            match e {
                Error::CapExceeded { .. } => 3,
                _ => 2,
            }
        }
    }
}

/// Default caps with the enumeration bound optionally lowered (never
/// raised past the hard cap) by the DENSETOP_MAX_N environment variable.
pub fn caps_from_env() -> Result<Caps> {
    let mut caps = Caps::default();
    if let Ok(raw) = std::env::var("DENSETOP_MAX_N") {
        let v: usize = raw
            .parse()
            .map_err(|_| Error::Malformed(format!("DENSETOP_MAX_N=`{raw}` is not a number")))?;
        caps.max_enum_points = v.min(ENUM_HARD_CAP);
    }
    Ok(caps)
}

struct Outcome {
    stdout: String,
    verified: bool,
}

fn dispatch(cli: &Cli, caps: &Caps) -> Result<Outcome> {
    match &cli.cmd {
        Cmd::Enumerate { n, mode } => cmd_enumerate(*n, (*mode).into(), cli.format, caps),
        Cmd::Check { target } => cmd_check(target, cli.format, caps),
        Cmd::Verify {
            theorem,
            n,
            order,
            mode,
            json,
            elide_timing,
        } => cmd_verify(
            theorem,
            n.or(*order),
            (*mode).into(),
            json.as_deref(),
            *elide_timing,
            cli.format,
            caps,
        ),
        Cmd::Search { property, n, mode } => {
            cmd_search(property, *n, (*mode).into(), cli.format, caps)
        }
        Cmd::Sym {
            model,
            claim,
            trace,
            cross_validate,
            radius,
        } => {
            if *cross_validate {
                cmd_sym_cross_validate(model, *radius, cli.format, caps)
            } else {
                cmd_sym_claim(model, claim.as_deref().unwrap_or_default(), *trace, cli.format)
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Named spaces
// ---------------------------------------------------------------------------

/// Resolves a registry name: sierpinski, discrete:<n>, indiscrete:<n>,
/// h_analogue, sierpinski_sq, sum:<name>+<name>.
pub fn named_space(name: &str, caps: &Caps) -> Result<FiniteSpace> {
    if let Some(rest) = name.strip_prefix("sum:") {
        let (a, b) = rest
            .split_once('+')
            .ok_or_else(|| Error::UnknownSpace(name.to_string()))?;
        return FiniteSpace::topological_sum(&[
            named_space(a, caps)?,
            named_space(b, caps)?,
        ]);
    }
    if let Some(k) = name.strip_prefix("discrete:") {
        return sized(k, name, caps).map(FiniteSpace::discrete);
    }
    if let Some(k) = name.strip_prefix("indiscrete:") {
        return sized(k, name, caps).map(FiniteSpace::indiscrete);
    }
    match name {
        "sierpinski" => Ok(FiniteSpace::sierpinski()),
        "h_analogue" => Ok(FiniteSpace::h_analogue()),
        "sierpinski_sq" => FiniteSpace::sierpinski().product(&FiniteSpace::sierpinski()),
        _ => Err(Error::UnknownSpace(name.to_string())),
    }
}

fn sized(raw: &str, name: &str, caps: &Caps) -> Result<usize> {
    let k: usize = raw
        .parse()
        .map_err(|_| Error::UnknownSpace(name.to_string()))?;
    if k > caps.max_subset_points {
        return Err(Error::CapExceeded {
            what: "named space size",
            requested: k as u64,
            cap: caps.max_subset_points as u64,
        });
    }
    Ok(k)
}

fn load_space(target: &str, caps: &Caps) -> Result<FiniteSpace> {
    if let Some(name) = target.strip_prefix("named:") {
        named_space(name, caps)
    } else {
        let text = std::fs::read_to_string(target)?;
        FiniteSpace::from_json_str(&text)
    }
}

// ---------------------------------------------------------------------------
// check
// ---------------------------------------------------------------------------

/// Everything the `check` command reports about one space.
#[derive(Debug, Clone, Serialize)]
pub struct SpaceProfile {
    pub n: usize,
    pub open_count: usize,
    pub connected: bool,
    pub path_connected: bool,
    pub hyperconnected: bool,
    pub ultraconnected: bool,
    pub non_separated_points: bool,
    pub t0: bool,
    pub t1: bool,
    pub hausdorff: bool,
    pub dense_connected: bool,
    pub dense_ultraconnected: bool,
    pub dense_pathwise_connected: bool,
    pub locally_dense_connected: bool,
    /// Finite spaces are always dense-pseudocompact.
    pub dense_pseudocompact: bool,
    /// Incomparable pair refuting dense-ultraconnectedness, if any.
    pub dense_ultraconnected_witness: Option<(usize, usize)>,
    /// Clopen dense-connected components, when locally dense-connected.
    pub dc_components: Option<Vec<Vec<usize>>>,
    /// Largest value count of a continuous map into a discrete space.
    pub max_real_range: usize,
    pub space: Value,
}

/// Computes the full profile of a space.
pub fn space_profile(space: &FiniteSpace, caps: &Caps) -> SpaceProfile {
    let conn = space.classify_connectivity();
    let sep = space.separation_profile();
    let dc = dc_decomposition(space, caps).ok().map(|parts| {
        parts
            .iter()
            .map(|p| p.iter().collect::<Vec<usize>>())
            .collect()
    });
    SpaceProfile {
        n: space.n(),
        open_count: space.opens().len(),
        connected: conn.connected,
        path_connected: conn.path_connected,
        hyperconnected: conn.hyperconnected,
        ultraconnected: conn.ultraconnected,
        non_separated_points: conn.non_separated_points,
        t0: sep.t0,
        t1: sep.t1,
        hausdorff: sep.hausdorff,
        dense_connected: is_dense_connected_fast(space),
        dense_ultraconnected: is_dense_ultraconnected_fast(space),
        dense_pathwise_connected: is_dense_pathwise_fast(space),
        locally_dense_connected: is_locally_dense_connected_fast(space),
        dense_pseudocompact: true,
        dense_ultraconnected_witness: dense_ultraconnected_witness(space),
        dc_components: dc,
        max_real_range: space.max_real_range(),
        space: space.to_json_value(),
    }
}

fn cmd_check(target: &str, format: Format, caps: &Caps) -> Result<Outcome> {
    let space = load_space(target, caps)?;
    let profile = space_profile(&space, caps);
    let stdout = match format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&profile)?),
        Format::Csv => csv_of_value(&serde_json::to_value(&profile)?),
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "space: {}", profile.space);
            let _ = writeln!(s, "n: {}   opens: {}", profile.n, profile.open_count);
            let _ = writeln!(
                s,
                "connected: {}   path_connected: {}   hyperconnected: {}   ultraconnected: {}",
                profile.connected,
                profile.path_connected,
                profile.hyperconnected,
                profile.ultraconnected
            );
            let _ = writeln!(
                s,
                "t0: {}   t1: {}   hausdorff: {}   non_separated_points: {}",
                profile.t0, profile.t1, profile.hausdorff, profile.non_separated_points
            );
            let _ = writeln!(
                s,
                "dense_connected: {}   dense_ultraconnected: {}   dense_pathwise_connected: {}",
                profile.dense_connected,
                profile.dense_ultraconnected,
                profile.dense_pathwise_connected
            );
            let _ = writeln!(
                s,
                "locally_dense_connected: {}   dense_pseudocompact: {}   max_real_range: {}",
                profile.locally_dense_connected,
                profile.dense_pseudocompact,
                profile.max_real_range
            );
            if let Some((x, y)) = profile.dense_ultraconnected_witness {
                let _ = writeln!(s, "dense_ultraconnected_witness: ({x}, {y})");
            }
            match &profile.dc_components {
                Some(parts) => {
                    let _ = writeln!(s, "dc_components: {parts:?}");
                }
                None => {
                    let _ = writeln!(s, "dc_components: not locally dense-connected");
                }
            }
            s
        }
    };
    Ok(Outcome {
        stdout,
        verified: true,
    })
}

// ---------------------------------------------------------------------------
// enumerate
// ---------------------------------------------------------------------------

fn cmd_enumerate(n: usize, mode: Mode, format: Format, caps: &Caps) -> Result<Outcome> {
    let mut out = String::new();
    let mut count: u64 = 0;
    if format == Format::Csv {
        let _ = writeln!(out, "n,opens");
    }
    for space in enumerate_topologies(n, mode, caps)? {
        count += 1;
        match format {
            Format::Csv => {
                let opens = serde_json::to_string(&space.to_json_value()["opens"])?;
                let _ = writeln!(out, "{n},{}", csv_escape(&opens));
            }
            _ => {
                let _ = writeln!(out, "{}", space.to_json_string());
            }
        }
    }
    match format {
        Format::Csv => {}
        _ => {
            let _ = writeln!(out, "{}", json!({ "n": n, "mode": mode.to_string(), "count": count }));
        }
    }
    Ok(Outcome {
        stdout: out,
        verified: true,
    })
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

fn cmd_verify(
    theorem: &str,
    scale: Option<usize>,
    mode: Mode,
    json_path: Option<&std::path::Path>,
    elide_timing: bool,
    format: Format,
    caps: &Caps,
) -> Result<Outcome> {
    if theorem == "list" {
        let mut out = String::new();
        for id in theorem_ids() {
            let info = theorem_info(id)?;
            let _ = writeln!(out, "{:16} (scale {}): {}", id, info.default_scale, info.statement);
        }
        return Ok(Outcome {
            stdout: out,
            verified: true,
        });
    }
    let info = theorem_info(theorem)?;
    let scale = scale.unwrap_or(info.default_scale);
    let mut report = verify_theorem(theorem, scale, mode, caps)?;
    if elide_timing {
        report.elapsed_ms = 0;
    }
    if let Some(path) = json_path {
        std::fs::write(path, format!("{}\n", report.to_json_value()))?;
    }
    let verified = report.verified();
    let stdout = match format {
        Format::Json => format!("{}\n", report.to_json_value()),
        Format::Csv => csv_of_value(&report.to_json_value()),
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(
                s,
                "{} at scale {} ({}): checked {} instance(s), {} failure(s){}",
                report.theorem,
                report.n,
                report.mode,
                report.checked,
                report.failures.len(),
                if elide_timing {
                    String::new()
                } else {
                    format!(", {} ms", report.elapsed_ms)
                }
            );
            for note in &report.notes {
                let _ = writeln!(s, "  note: {note}");
            }
            for f in report.failures.iter().take(5) {
                let _ = writeln!(s, "  FALSIFIED by {}: {}", f.item, f.detail);
            }
            if report.failures.len() > 5 {
                let _ = writeln!(s, "  ... and {} more", report.failures.len() - 5);
            }
            let _ = writeln!(s, "verdict: {}", if verified { "verified" } else { "falsified" });
            s
        }
    };
    Ok(Outcome { stdout, verified })
}

// ---------------------------------------------------------------------------
// search
// ---------------------------------------------------------------------------

fn cmd_search(property: &str, n: usize, mode: Mode, format: Format, caps: &Caps) -> Result<Outcome> {
    let expr = Expr::parse(property)?;
    for id in expr.idents() {
        if !predicate_names().contains(&id) {
            return Err(Error::UnknownProperty(id.to_string()));
        }
    }
    let mut searched: u64 = 0;
    let mut witness: Option<(usize, FiniteSpace)> = None;
    'sizes: for k in 0..=n {
        for space in enumerate_topologies(k, mode, caps)? {
            searched += 1;
            if expr.eval(&space, caps)? {
                witness = Some((k, space));
                break 'sizes;
            }
        }
    }
    let disclaimer = "finite-scale evidence only: absence here proves nothing at larger sizes";
    let stdout = match format {
        Format::Json => {
            let v = json!({
                "property": property,
                "max_n": n,
                "mode": mode.to_string(),
                "searched": searched,
                "witness": witness.as_ref().map(|(_, s)| s.to_json_value()),
                "witness_n": witness.as_ref().map(|(k, _)| k),
                "note": disclaimer,
            });
            format!("{v}\n")
        }
        Format::Csv => {
            let v = json!({
                "property": property,
                "max_n": n,
                "searched": searched,
                "witness": witness
                    .as_ref()
                    .map(|(_, s)| s.to_json_string())
                    .unwrap_or_default(),
            });
            csv_of_value(&v)
        }
        Format::Text => match &witness {
            Some((k, s)) => format!(
                "witness at n={k} after {searched} space(s):\n{}\n",
                s.to_json_string()
            ),
            None => format!("none at this scale (sizes 0..={n}, {searched} space(s); {disclaimer})\n"),
        },
    };
    Ok(Outcome {
        stdout,
        verified: true,
    })
}

// ---------------------------------------------------------------------------
// sym
// ---------------------------------------------------------------------------

fn cmd_sym_claim(model: &str, claim: &str, trace: bool, format: Format) -> Result<Outcome> {
    let model = Model::parse(model)?;
    let verdict = symbolic::sym_claim(model, claim)?;
    let stdout = match format {
        Format::Json => format!("{}\n", serde_json::to_string(&verdict)?),
        Format::Csv => csv_of_value(&serde_json::to_value(&verdict)?),
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "{} {}: {}", verdict.model, verdict.claim, verdict.value);
            if let Some(w) = &verdict.witness {
                let _ = writeln!(s, "witness: {w}");
            }
            if trace {
                for line in &verdict.trace {
                    let _ = writeln!(s, "  - {line}");
                }
            }
            s
        }
    };
    Ok(Outcome {
        stdout,
        verified: true,
    })
}

fn cmd_sym_cross_validate(model: &str, radius: i64, format: Format, caps: &Caps) -> Result<Outcome> {
    let model = Model::parse(model)?;
    let report = symbolic::cross_validate(model, radius, caps)?;
    let verified = report.verified();
    let stdout = match format {
        Format::Json => format!("{}\n", serde_json::to_string(&report)?),
        Format::Csv => csv_of_value(&report.to_json_value()),
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(
                s,
                "{} cross-validation at radius {}: {} check(s) over {} descriptor(s), \
                 {} disagreement(s)",
                report.model,
                report.radius,
                report.checks,
                report.battery_size,
                report.disagreements.len()
            );
            for d in &report.disagreements {
                let _ = writeln!(s, "  DISAGREES: {d}");
            }
            for note in &report.notes {
                let _ = writeln!(s, "  note: {note}");
            }
            s
        }
    };
    Ok(Outcome { stdout, verified })
}

// ---------------------------------------------------------------------------
// CSV helpers
// ---------------------------------------------------------------------------

fn csv_escape(cell: &str) -> String {
    if cell.contains([',', '"', '\n']) {
        format!("\"{}\"", cell.replace('"', "\"\""))
    } else {
        cell.to_string()
    }
}

/// Flattens one JSON object into a two-line CSV (header + row); nested
/// values stay JSON-encoded inside their cells.
fn csv_of_value(v: &Value) -> String {
    let obj = v.as_object().expect("csv reports are objects");
    let header: Vec<String> = obj.keys().map(|k| csv_escape(k)).collect();
    let row: Vec<String> = obj
        .values()
        .map(|v| match v {
            Value::String(s) => csv_escape(s),
            other => csv_escape(&other.to_string()),
        })
        .collect();
    format!("{}\n{}\n", header.join(","), row.join(","))
}
