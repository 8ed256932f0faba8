//! Counterexample hunting: sweep the enumerated universe for spaces
//! satisfying boolean combinations of registered predicates.  A hit is a
//! concrete witness; a miss at this scale is evidence, not proof.
//!
//! Run with: cargo run --example search_counterexamples

use densetop::enumerate::{enumerate_topologies, Caps, Mode};
use densetop::expr::Expr;

fn main() -> densetop::Result<()> {
    let caps = Caps::default();
    let max_n = 4;

    let hunts = [
        // The finite analogue of a line with two incomparable endpoints.
        "ultraconnected & !dense_ultraconnected",
        // Dense-connected and hyperconnected coincide, so this must stay empty.
        "dense_connected & !hyperconnected",
        // Connectedness alone does not force every dense subset connected.
        "connected & !dense_connected",
        // Every dense subset connected, yet some pair of points separated.
        "dense_connected & !non_separated_points",
        // Hausdorff finite spaces are discrete, so this must stay empty.
        "hausdorff & !discrete",
        // Locally dense-connected without being dense-connected: a sum of
        // dense-connected pieces.
        "locally_dense_connected & !dense_connected",
    ];

    for property in hunts {
        let expr = Expr::parse(property)?;
        let mut found = None;
        let mut searched = 0u64;
        'sizes: for n in 0..=max_n {
            for space in enumerate_topologies(n, Mode::Classes, &caps)? {
                searched += 1;
                if expr.eval(&space, &caps)? {
                    found = Some(space);
                    break 'sizes;
                }
            }
        }
        match found {
            Some(space) => println!(
                "{property}\n  witness after {searched} class(es): {}",
                space.to_json_string()
            ),
            None => println!(
                "{property}\n  none at sizes 0..={max_n} ({searched} classes; finite-scale evidence only)"
            ),
        }
    }
    Ok(())
}
