//! Non-regularity scan: no 2-apex tree of order n >= 7 is regular, while
//! K4 (order 4) and K3,3 (order 6) show up below that threshold.
//!
//! Run with: cargo run --release --example theorem1_scan

use apex_randic::apex::audit_nonregularity;
use apex_randic::enumerate::Guards;

fn main() {
    let guards = Guards::default();
    for n in 4..=8 {
        let audit = audit_nonregularity(2, n, &guards).unwrap();
        let threshold = if n >= 7 { ">= 4k-1" } else { "below 4k-1" };
        println!(
            "k = 2, n = {n} ({threshold}): scanned {} classes, {} regular",
            audit.scanned,
            audit.regular_witnesses.len()
        );
        for w in &audit.regular_witnesses {
            println!(
                "    {} ({}-regular), cross edges l = {} (identity {}, bound l <= mk {})",
                w.graph6, w.degree, w.cross_edges, w.cross_edge_identity_ok, w.cross_edge_bound_ok
            );
        }
        assert!(audit.theorem_consistent);
    }
}
