//! The six rule-based infinite models: closures in the descriptor algebra,
//! registered claims with their derivation traces, and the window
//! cross-validation that keeps the analytic rules honest.
//!
//! Run with: cargo run --example symbolic_models

use densetop::enumerate::Caps;
use densetop::symbolic::{
    claim_names, cross_validate, sym_claim, sym_closure, Model, SetDescriptor, MODEL_NAMES,
};

fn main() -> densetop::Result<()> {
    let caps = Caps::default();

    // Closures in the cofinite model: finite sets are closed, every
    // infinite set is dense.
    let m = Model::CofiniteN;
    for s in [
        SetDescriptor::finite([1, 2, 3]),
        SetDescriptor::cofinite([0]),
        SetDescriptor::ray(5),
    ] {
        println!(
            "closure over {m} of {} = {}",
            s.render(m),
            sym_closure(m, &s)?.render(m)
        );
    }
    // In the ray models the closure of a finite set escapes the algebra.
    match sym_closure(Model::RayR, &SetDescriptor::finite([0])) {
        Err(e) => println!("closure over ray_R of {{0}}: {e}"),
        Ok(_) => unreachable!(),
    }

    // Every registered claim of every model, with one trace shown in full.
    println!();
    for name in MODEL_NAMES {
        let model = Model::parse(name)?;
        for claim in claim_names(model) {
            let v = sym_claim(model, claim)?;
            let witness = v
                .witness
                .as_deref()
                .map(|w| format!("  (witness: {w})"))
                .unwrap_or_default();
            println!("{name:13} {claim:32} {}{witness}", v.value);
        }
    }

    println!("\nderivation trace for window_Z dense_connected:");
    for line in sym_claim(Model::WindowZ, "dense_connected")?.trace {
        println!("  - {line}");
    }

    // Cross-validation: the symbolic rules replayed against finite window
    // samples; zero disagreements expected for every shipped model.
    println!("\ncross-validation at radius {}:", caps.max_window_radius);
    for name in MODEL_NAMES {
        let model = Model::parse(name)?;
        let report = cross_validate(model, caps.max_window_radius, &caps)?;
        println!(
            "  {name:13} {:>6} checks, {} disagreement(s) [{}]",
            report.checks,
            report.disagreements.len(),
            if report.verified() { "ok" } else { "RULE BUG" }
        );
    }
    Ok(())
}
