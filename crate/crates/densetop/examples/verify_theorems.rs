//! Sweep the registered statements at their acceptance scales and print one
//! line per report.
//!
//! ```text
//! cargo run --example verify_theorems
//! ```

use densetop::enumerate::{Caps, Mode};
use densetop::theorems::{theorem_info, verify_theorem, TheoremKind};

fn main() {
    let caps = Caps::default();
    // (id, scale) pairs; space scales are carrier sizes (or maximal product
    // sizes), group scales are group orders.
    let slate = [
        ("t1", 5),
        ("t22", 5),
        ("c0", 4),
        ("p0", 4),
        ("l3", 4),
        ("p1", 3),
        ("p3", 3),
        ("almost-open-prop", 3),
        ("p2", 12),
        ("product-local", 12),
        ("t44", 5),
        ("p566", 5),
        ("clopen-prop", 5),
        ("p11", 5),
        ("t4-finite", 4),
        ("union-prop", 4),
        ("p4", 4),
        ("p5", 4),
        ("p9-open", 5),
        ("p6", 5),
        ("p7", 5),
        ("p10", 4),
        ("t233", 5),
        ("t5555", 5),
        ("l2", 5),
        ("t2", 6),
        ("t3", 6),
        ("c1", 6),
        ("ultra", 6),
        ("dsg-remark", 6),
        ("para-obs", 6),
    ];
    let mut all_ok = true;
    for (id, scale) in slate {
        let info = theorem_info(id).expect("registered id");
        let report = match verify_theorem(id, scale, Mode::Labeled, &caps) {
            Ok(report) => report,
            Err(err) => {
                println!("{id:<18} scale {scale:>2}  error: {err}");
                all_ok = false;
                continue;
            }
        };
        let verdict = if report.verified() { "ok" } else { "FALSIFIED" };
        let unit = match info.kind {
            TheoremKind::Space => "n",
            TheoremKind::Group => "order",
        };
        println!(
            "{id:<18} {unit} {scale:>2}  checked {:>8}  failures {:>2}  {:>6} ms  {verdict}",
            report.checked,
            report.failures.len(),
            report.elapsed_ms,
        );
        all_ok &= report.verified();
    }
    std::process::exit(if all_ok { 0 } else { 1 });
}
