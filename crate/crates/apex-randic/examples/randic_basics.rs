//! Compute exact Randić indices for a few named graphs and show the gap
//! identity R = n/2 - gap at work.
//!
//! Run with: cargo run --release --example randic_basics

use apex_randic::randic::{randic, verify_gap_identity};
use apex_randic::Graph;

fn main() {
    let graphs = [
        ("C6", Graph::cycle(6).unwrap()),
        ("K4", Graph::complete(4).unwrap()),
        ("P4", Graph::path(4).unwrap()),
        ("K_{1,3}", Graph::star(3).unwrap()),
        ("Petersen", Graph::petersen()),
        (
            "K4 with an edge subdivided 3x",
            Graph::complete(4).unwrap().subdivide_edge(2, 3, 3).unwrap(),
        ),
    ];

    for (name, g) in graphs {
        let r = randic(&g);
        println!("{name} (n = {}, m = {})", g.n(), g.m());
        println!("  R        = {}  ≈ {}", r.value, r.value.decimal(12));
        println!("  gap      = {}  ≈ {}", r.gap, r.gap.decimal(12));
        println!(
            "  spectrum = {}",
            r.spectrum
                .iter()
                .map(|((a, b), c)| format!("c_{{{a},{b}}}={c}"))
                .collect::<Vec<_>>()
                .join(", ")
        );
        println!(
            "  asymmetric edges: {}, identity R = n/2 - gap: {}",
            r.spectrum.asymmetric_edges(),
            verify_gap_identity(&g).is_ok()
        );
        println!();
    }
}
