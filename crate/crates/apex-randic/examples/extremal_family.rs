//! Build members of the extremal family (degrees in {2,3}, exactly two
//! asymmetric edges, apex number exactly k) and confirm the closed-form
//! value n/2 - (5 - 2*sqrt(6))/6.
//!
//! Run with: cargo run --release --example extremal_family

use apex_randic::enumerate::Guards;
use apex_randic::family::{construct_member, family_membership, ConstructOutcome};
use apex_randic::randic::randic_value;
use apex_randic::{extremal_value, Graph};

fn main() {
    let guards = Guards::default();

    for (k, n) in [(2usize, 7usize), (2, 12), (3, 12), (4, 18)] {
        match construct_member(k, n, &guards).unwrap() {
            ConstructOutcome::Found(g) => {
                let r = randic_value(&g);
                let bound = extremal_value(n as i64);
                println!(
                    "(k = {k}, n = {n}): member found, R = {} ≈ {} (formula says {})",
                    r,
                    r.decimal(12),
                    bound.decimal(12)
                );
                assert_eq!(r, bound);
            }
            ConstructOutcome::NotFound { searched } => {
                println!("(k = {k}, n = {n}): no member; searched {searched}");
            }
        }
    }

    println!("\nmembership diagnostics:");
    let c7 = Graph::cycle(7).unwrap();
    let m = family_membership(&c7, 2).unwrap();
    println!("  C7 for k = 2: {:?} (asymmetric edges: {})", m.verdict, m.asym_count);
    let k4sub = Graph::complete(4).unwrap().subdivide_edge(2, 3, 3).unwrap();
    let m = family_membership(&k4sub, 2).unwrap();
    println!(
        "  subdivided K4 for k = 2: {:?} (R matches formula: {:?})",
        m.verdict, m.randic_matches_formula
    );
}
