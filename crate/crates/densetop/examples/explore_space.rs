//! Tour of the single-space toolkit: build spaces, inspect closures and
//! dense subsets, run the fast deciders against their brute-force twins,
//! and decompose a space into its clopen dense-connected components.
//!
//! Run with: cargo run --example explore_space

use densetop::dense::{
    dc_decomposition, dense_p, dense_ultraconnected_witness, heredity_class,
    is_dense_connected_fast, is_dense_ultraconnected_fast, CONNECTED,
};
use densetop::enumerate::{dense_subsets, Caps};
use densetop::{FiniteSpace, PointSet};

fn main() -> densetop::Result<()> {
    let caps = Caps::default();

    // The two-point space with one open point: the smallest space that is
    // dense-connected without being indiscrete.
    let s = FiniteSpace::sierpinski();
    println!("two-point space with one open point: {}", s.to_json_string());
    println!("  closure of {{1}} (the open point) = {}", s.closure(PointSet::singleton(1))?);
    println!("  dense subsets: {:?}", dense_subsets(&s, &caps)?);
    println!(
        "  dense-connected: fast {}, brute {}",
        is_dense_connected_fast(&s),
        dense_p(&s, &CONNECTED, &caps)?
    );

    // Three points, one bottom, two incomparable tops: ultraconnected but
    // not dense-ultraconnected — removing the bottom leaves two separated
    // open points in a dense subspace.
    let h = FiniteSpace::h_analogue();
    println!("\nbottom-plus-incomparable-pair space: {}", h.to_json_string());
    println!(
        "  ultraconnected: {}, dense-ultraconnected: {}",
        h.classify_connectivity().ultraconnected,
        is_dense_ultraconnected_fast(&h)
    );
    if let Some((x, y)) = dense_ultraconnected_witness(&h) {
        println!("  witness: points {x} and {y} are specialization-incomparable");
    }

    // A disjoint sum decomposes into its clopen dense-connected components
    // and reassembles as the sum of the parts.
    let sum = FiniteSpace::topological_sum(&[
        FiniteSpace::sierpinski(),
        FiniteSpace::indiscrete(2),
    ])?;
    println!("\nsum of two two-point pieces: {}", sum.to_json_string());
    match dc_decomposition(&sum, &caps) {
        Ok(parts) => println!("  dense-connected components: {parts:?}"),
        Err(e) => println!("  no decomposition: {e}"),
    }

    // The discrete three-point space is not locally dense-connected in any
    // interesting way — every component is a singleton.
    let d3 = FiniteSpace::discrete(3);
    println!("\ndiscrete on 3 points: components {:?}", dc_decomposition(&d3, &caps)?);

    // Heredity certification: connectedness transfers to closed subspaces
    // only at the trivial level; the report names counterexamples.
    let report = heredity_class(&CONNECTED, 4, &caps)?;
    println!(
        "\nheredity of connectedness at sizes <= {}: closed {}, clopen {}, open {}",
        report.max_points, report.closed_hereditary, report.clopen_hereditary, report.open_hereditary
    );
    if let Some(cx) = &report.closed_counterexample {
        println!(
            "  closed-subspace counterexample: subset {:?} of {}",
            cx.subset.iter().collect::<Vec<_>>(),
            cx.space.to_json_string()
        );
    }
    Ok(())
}
