//! End-to-end acceptance suite. Runs as a plain binary (no libtest harness)
//! so it prints exactly one pass/fail line per criterion and exits nonzero
//! if any criterion fails.
//!
//! Every expected count below was produced by an oracle that is independent
//! of the code under test: the small-universe counts by filtering raw
//! subset families through the topology axioms, the larger ones by counting
//! reflexive-transitive relations directly.

use std::process::Command;
use std::time::{Duration, Instant};

use densetop::dense::{
    dense_p, dense_ultraconnected_witness, is_dense_ultraconnected_fast,
    is_locally_dense_connected_fast, dc_decomposition, eval_named_predicate, ULTRACONNECTED,
};
use densetop::enumerate::{enumerate_topologies, homeomorphic, Caps, Mode};
use densetop::symbolic::{cross_validate, sym_claim, Model};
use densetop::theorems::{verify_theorem, TheoremReport};
use densetop::{Error, FiniteSpace, PointSet};

// Budgets pinned by the suite; exceeding one is a failure, not a warning.
const ENUMERATION_BUDGET: Duration = Duration::from_secs(10);
const EQUIVALENCE_BUDGET: Duration = Duration::from_secs(60);
const PRESERVATION_BUDGET: Duration = Duration::from_secs(300);

/// Labeled topology counts for carrier sizes 1..=5.
const LABELED_COUNTS: [u64; 5] = [1, 4, 29, 355, 6942];

type Check = fn() -> Result<(), String>;

fn main() {
    let criteria: [(&str, Check); 10] = [
        ("enumeration soundness", criterion_1),
        ("dense-connected equivalences", criterion_2),
        ("dense-ultraconnected equivalences", criterion_3),
        ("heredity suite", criterion_4),
        ("structure suite", criterion_5),
        ("preservation suite", criterion_6),
        ("group suite", criterion_7),
        ("named-witness regressions", criterion_8),
        ("symbolic suite", criterion_9),
        ("determinism", criterion_10),
    ];
    let mut failed = false;
    for (k, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(()) => println!("acceptance {} {}: pass", k + 1, name),
            Err(why) => {
                failed = true;
                println!("acceptance {} {}: FAIL — {}", k + 1, name, why);
            }
        }
    }
    if failed {
        std::process::exit(1);
    }
}

fn expect(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn report(id: &str, scale: usize, caps: &Caps) -> Result<TheoremReport, String> {
    verify_theorem(id, scale, Mode::Labeled, caps)
        .map_err(|e| format!("verify {id} at scale {scale}: {e}"))
}

fn zero_failures(r: &TheoremReport) -> Result<(), String> {
    expect(
        r.failures.is_empty(),
        format!(
            "{} at scale {} reported {} failure(s); first: {}",
            r.theorem,
            r.n,
            r.failures.len(),
            r.failures
                .first()
                .map(|f| f.detail.clone())
                .unwrap_or_default()
        ),
    )?;
    expect(
        r.checked > 0,
        format!("{} at scale {} checked nothing", r.theorem, r.n),
    )
}

// ---------------------------------------------------------------------------
// 1. Enumeration soundness
// ---------------------------------------------------------------------------

/// Counts open-set families on `n` points that pass the topology axioms,
/// sweeping every one of the 2^(2^n) subset families. Exercises nothing but
/// the axiom validator; usable up to n = 3.
fn count_by_axiom_filter(n: usize) -> u64 {
    let subsets = 1u64 << n;
    let mut count = 0;
    for family_mask in 0..(1u64 << subsets) {
        let family: Vec<PointSet> = (0..subsets)
            .filter(|s| family_mask >> s & 1 == 1)
            .map(PointSet::from_bits)
            .collect();
        if FiniteSpace::validate(n, family).is_ok() {
            count += 1;
        }
    }
    count
}

/// Counts reflexive-transitive relations on `n` points by sweeping every
/// assignment of the off-diagonal entries. Independent of the enumerator:
/// topologies on a finite carrier correspond one-to-one to these relations.
fn count_by_transitive_relations(n: usize) -> u64 {
    assert!(n <= 5, "2^(n^2 - n) sweep");
    let off_diagonal = (n * n - n) as u32;
    let mut count = 0;
    for pattern in 0..(1u64 << off_diagonal) {
        let mut rows = [0u32; 5];
        let mut bit = 0;
        for (i, row) in rows.iter_mut().enumerate().take(n) {
            *row = 1 << i;
            for j in 0..n {
                if i != j {
                    if pattern >> bit & 1 == 1 {
                        *row |= 1 << j;
                    }
                    bit += 1;
                }
            }
        }
        let transitive = (0..n).all(|i| {
            (0..n).all(|j| rows[i] >> j & 1 == 0 || rows[j] & !rows[i] == 0)
        });
        if transitive {
            count += 1;
        }
    }
    count
}

fn criterion_1() -> Result<(), String> {
    let start = Instant::now();
    let caps = Caps::default();
    for (i, &expected) in LABELED_COUNTS.iter().enumerate() {
        let n = i + 1;
        let got = enumerate_topologies(n, Mode::Labeled, &caps)
            .map_err(|e| e.to_string())?
            .count() as u64;
        expect(
            got == expected,
            format!("labeled count at n={n}: got {got}, expected {expected}"),
        )?;
        let oracle = if n <= 3 {
            count_by_axiom_filter(n)
        } else {
            count_by_transitive_relations(n)
        };
        expect(
            oracle == expected,
            format!("independent oracle at n={n}: got {oracle}, expected {expected}"),
        )?;
    }
    expect(
        start.elapsed() < ENUMERATION_BUDGET,
        format!("enumeration took {:?}, budget {:?}", start.elapsed(), ENUMERATION_BUDGET),
    )
}

// ---------------------------------------------------------------------------
// 2–3. Equivalence sweeps
// ---------------------------------------------------------------------------

fn equivalence_sweep(id: &str) -> Result<(), String> {
    let start = Instant::now();
    let caps = Caps::default();
    for (scale, expected) in [(4usize, 355u64), (5, 6942)] {
        let r = report(id, scale, &caps)?;
        zero_failures(&r)?;
        expect(
            r.checked == expected,
            format!("{id} at n={scale}: checked {}, expected {expected}", r.checked),
        )?;
    }
    expect(
        start.elapsed() < EQUIVALENCE_BUDGET,
        format!("{id} sweep took {:?}, budget {:?}", start.elapsed(), EQUIVALENCE_BUDGET),
    )
}

fn criterion_2() -> Result<(), String> {
    equivalence_sweep("t1")
}

fn criterion_3() -> Result<(), String> {
    equivalence_sweep("t22")
}

// ---------------------------------------------------------------------------
// 4. Heredity suite
// ---------------------------------------------------------------------------

fn criterion_4() -> Result<(), String> {
    let caps = Caps::default();
    for id in ["t44", "p566", "clopen-prop", "p11"] {
        zero_failures(&report(id, 5, &caps)?)?;
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// 5. Structure suite
// ---------------------------------------------------------------------------

fn criterion_5() -> Result<(), String> {
    let caps = Caps::default();
    for id in ["p6", "p7", "p10", "t233"] {
        zero_failures(&report(id, 5, &caps)?)?;
    }
    // The decomposition must partition into clopen pieces exactly on the
    // locally dense-connected spaces and signal the hypothesis failure on
    // all others.
    for n in 0..=5usize {
        for x in enumerate_topologies(n, Mode::Labeled, &caps).map_err(|e| e.to_string())? {
            let locally = is_locally_dense_connected_fast(&x);
            match dc_decomposition(&x, &caps) {
                Ok(parts) => {
                    expect(locally, format!("decomposed a non-locally space: {}", x.to_json_string()))?;
                    let mut union = PointSet::EMPTY;
                    for (i, &p) in parts.iter().enumerate() {
                        expect(
                            x.is_open(p) && x.is_closed(p),
                            format!("component {:?} of {} is not clopen", p, x.to_json_string()),
                        )?;
                        for &q in &parts[i + 1..] {
                            expect(
                                p.intersect(q).is_empty(),
                                format!("overlapping components in {}", x.to_json_string()),
                            )?;
                        }
                        union = union.union(p);
                    }
                    expect(
                        union == x.carrier(),
                        format!("components do not cover {}", x.to_json_string()),
                    )?;
                }
                Err(Error::NotLocallyDenseConnected) => {
                    expect(
                        !locally,
                        format!("refused to decompose a locally dense-connected space: {}", x.to_json_string()),
                    )?;
                }
                Err(e) => return Err(format!("unexpected decomposition error: {e}")),
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// 6. Preservation suite
// ---------------------------------------------------------------------------

fn criterion_6() -> Result<(), String> {
    let start = Instant::now();
    let caps = Caps::default();
    for (id, scale) in [("p1", 3usize), ("p3", 3), ("p2", 12), ("product-local", 12), ("p0", 4)] {
        zero_failures(&report(id, scale, &caps)?)?;
    }
    expect(
        start.elapsed() < PRESERVATION_BUDGET,
        format!("preservation suite took {:?}, budget {:?}", start.elapsed(), PRESERVATION_BUDGET),
    )
}

// ---------------------------------------------------------------------------
// 7. Group suite
// ---------------------------------------------------------------------------

fn criterion_7() -> Result<(), String> {
    let caps = Caps::default();
    for order in 2..=6usize {
        for id in ["t2", "t3", "c1", "ultra", "dsg-remark"] {
            zero_failures(&report(id, order, &caps)?)?;
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// 8. Named-witness regressions
// ---------------------------------------------------------------------------

fn criterion_8() -> Result<(), String> {
    let caps = Caps::default();

    let sq = FiniteSpace::sierpinski()
        .product(&FiniteSpace::sierpinski())
        .map_err(|e| e.to_string())?;
    let brute = dense_p(&sq, &ULTRACONNECTED, &caps).map_err(|e| e.to_string())?;
    expect(!brute, "the square of the two-point connected space must not be dense-ultraconnected")?;
    expect(
        !is_dense_ultraconnected_fast(&sq),
        "fast decider disagrees on the product square",
    )?;
    expect(
        dense_ultraconnected_witness(&sq).is_some(),
        "no incomparable witness pair reported for the product square",
    )?;

    let h = FiniteSpace::h_analogue();
    expect(
        eval_named_predicate("ultraconnected", &h, &caps).map_err(|e| e.to_string())?,
        "h_analogue must be ultraconnected",
    )?;
    expect(
        !dense_p(&h, &ULTRACONNECTED, &caps).map_err(|e| e.to_string())?,
        "h_analogue must not be dense-ultraconnected",
    )?;

    // The search interface must rediscover the same space (up to
    // homeomorphism) from the property alone.
    let (code, out) = run_cli(&[
        "search",
        "--property",
        "ultraconnected & !dense_ultraconnected",
        "--n",
        "3",
        "--format",
        "json",
    ])?;
    expect(code == 0, format!("search exited with {code}"))?;
    let v: serde_json::Value =
        serde_json::from_str(&out).map_err(|e| format!("search emitted invalid JSON: {e}"))?;
    let witness = v
        .get("witness")
        .filter(|w| !w.is_null())
        .ok_or("search found no witness at n=3")?;
    let found = FiniteSpace::from_json_value(witness).map_err(|e| e.to_string())?;
    expect(
        homeomorphic(&found, &h),
        format!("search witness {} is not the three-point analogue", found.to_json_string()),
    )
}

// ---------------------------------------------------------------------------
// 9. Symbolic suite
// ---------------------------------------------------------------------------

fn criterion_9() -> Result<(), String> {
    let caps = Caps::default();
    for model in [
        Model::CofiniteN,
        Model::OpcDiscrete,
        Model::RayR,
        Model::RayRClosed,
        Model::WindowZ,
        Model::HSpace,
    ] {
        let r = cross_validate(model, 64, &caps).map_err(|e| e.to_string())?;
        expect(
            r.disagreements.is_empty(),
            format!(
                "{} cross-validation: {} disagreement(s); first: {}",
                r.model,
                r.disagreements.len(),
                r.disagreements.first().cloned().unwrap_or_default()
            ),
        )?;
        expect(r.checks > 0, format!("{} cross-validation checked nothing", r.model))?;
    }

    let claim = |m: Model, c: &str| sym_claim(m, c).map_err(|e| e.to_string());

    // Cofinite carrier: every dense subset connected, points closed.
    expect(claim(Model::CofiniteN, "dense_connected")?.value, "cofinite model must be dense-connected")?;
    expect(claim(Model::CofiniteN, "t1")?.value, "cofinite model must have closed points")?;

    // Right-ray plane: dense-connected both by the base rules and, for the
    // closed-ray coarsening, by transfer along the coarsening route; the
    // two derivations must agree.
    let finer = claim(Model::RayR, "dense_connected")?;
    let coarser = claim(Model::RayRClosed, "dense_connected")?;
    expect(finer.value, "ray model must be dense-connected")?;
    expect(coarser.value == finer.value, "coarsening transfer disagrees with the direct rule")?;
    expect(
        coarser.trace.join("\n").contains("coarsen"),
        "closed-ray verdict must cite the coarsening transfer",
    )?;

    // Window-complement integers: the setwise coverage condition holds.
    expect(claim(Model::WindowZ, "t3_condition")?.value, "window model must satisfy the coverage condition")?;

    // Two-special-point line: ultraconnected yet not dense-ultraconnected.
    expect(claim(Model::HSpace, "ultraconnected")?.value, "the two-special-point line must be ultraconnected")?;
    let h = claim(Model::HSpace, "dense_ultraconnected")?;
    expect(!h.value, "the two-special-point line must not be dense-ultraconnected")?;
    expect(
        h.witness.as_deref() == Some("(0, 1)"),
        format!("expected the witness pair (0, 1), got {:?}", h.witness),
    )?;

    // Compactified discrete carrier: the proper dense part is the discrete
    // part, which carries an unbounded function.
    expect(
        !claim(Model::OpcDiscrete, "proper_one_dense_pseudocompact")?.value,
        "the proper dense part of the compactified model must fail pseudocompactness",
    )
}

// ---------------------------------------------------------------------------
// 10. Determinism
// ---------------------------------------------------------------------------

fn run_cli(args: &[&str]) -> Result<(i32, String), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_densetop"))
        .args(args)
        .env_remove("DENSETOP_MAX_N")
        .output()
        .map_err(|e| format!("spawning the CLI failed: {e}"))?;
    Ok((
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
    ))
}

fn criterion_10() -> Result<(), String> {
    let batteries: &[&[&str]] = &[
        &["enumerate", "--n", "4", "--format", "csv"],
        &["check", "named:sierpinski_sq", "--format", "json"],
        &["verify", "t22", "--n", "4", "--format", "json", "--elide-timing"],
        &["verify", "c1", "--order", "3", "--format", "json", "--elide-timing"],
        &["search", "--property", "ultraconnected & !dense_ultraconnected", "--n", "3", "--format", "json"],
        &["sym", "window_Z", "dense_connected", "--trace", "--format", "json"],
        &["sym", "ray_R_closed", "--cross-validate", "--radius", "8", "--format", "json"],
    ];
    for args in batteries {
        let (code_a, out_a) = run_cli(args)?;
        let (code_b, out_b) = run_cli(args)?;
        expect(
            code_a == code_b && out_a == out_b,
            format!("two runs of {:?} differ", args),
        )?;
        expect(code_a == 0, format!("{:?} exited with {code_a}", args))?;
    }

    // Every emitted counterexample must replay through `check`: feed the
    // search witness back in as a file and confirm the profile agrees.
    let (_, out) = run_cli(&[
        "search",
        "--property",
        "ultraconnected & !dense_ultraconnected",
        "--n",
        "3",
        "--format",
        "json",
    ])?;
    let v: serde_json::Value = serde_json::from_str(&out).map_err(|e| e.to_string())?;
    let witness = v
        .get("witness")
        .filter(|w| !w.is_null())
        .ok_or("search found no witness to replay")?;
    let path = std::env::temp_dir().join("densetop-acceptance-witness.json");
    std::fs::write(&path, witness.to_string()).map_err(|e| e.to_string())?;
    let (code, out) = run_cli(&["check", path.to_str().unwrap(), "--format", "json"])?;
    expect(code == 0, format!("replay through check exited with {code}"))?;
    let profile: serde_json::Value = serde_json::from_str(&out).map_err(|e| e.to_string())?;
    expect(
        profile["ultraconnected"] == serde_json::Value::Bool(true)
            && profile["dense_ultraconnected"] == serde_json::Value::Bool(false),
        "replayed profile does not reproduce the searched property",
    )?;
    std::fs::remove_file(&path).ok();
    Ok(())
}
