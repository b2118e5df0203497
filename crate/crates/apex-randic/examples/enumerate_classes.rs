//! Isomorph-free enumeration: connected classes, free trees, and the
//! dual-strategy cross-check for k-apex trees.
//!
//! Run with: cargo run --release --example enumerate_classes

use apex_randic::enumerate::{connected_count, count_cross_check, free_trees, Guards};

fn main() {
    let guards = Guards::default();

    println!("connected graph classes:");
    for n in 1..=8 {
        println!("  n = {n}: {}", connected_count(n, &guards).unwrap());
    }

    println!("\nfree tree classes:");
    for v in 1..=9 {
        println!("  v = {v}: {}", free_trees(v).unwrap().len());
    }

    println!("\nk-apex tree classes (both strategies must agree):");
    for k in 1..=2usize {
        for n in (k + 2)..=8 {
            let summary = count_cross_check(k, n, &guards).unwrap();
            println!(
                "  k = {k}, n = {n}: {:5} classes  [{} ms, {}]",
                summary.count, summary.wall_ms, summary.strategy
            );
        }
    }
}
