//! Exhaustive conjecture scan: is n/2 - (5 - 2*sqrt(6))/6 really the sharp
//! maximum of the Randić index over k-apex trees, attained exactly on the
//! family?
//!
//! At (k = 2, n = 7) the answer is NO: three graphs — six degree-3 vertices
//! plus one degree-4 apex — reach 7/3 + (2/3)*sqrt(3), strictly above the
//! bound. At n = 8 and beyond the scanned orders agree with the bound.
//!
//! Run with: cargo run --release --example conjecture_scan

use apex_randic::enumerate::Guards;
use apex_randic::family::verify_conjecture;

fn main() {
    let guards = Guards::default();
    for n in [7usize, 8] {
        let r = verify_conjecture(2, n, &guards).unwrap();
        println!("k = 2, n = {n}: scanned {} two-apex trees", r.scanned);
        println!("  exact max      = {} ≈ {}", r.max_value.exact, r.max_value.decimal);
        println!("  claimed bound  = {} ≈ {}", r.extremal_value.exact, r.extremal_value.decimal);
        println!("  maximizers     = {:?}", r.maximizers);
        println!("  family members = {:?}", r.family_members);
        println!(
            "  float cross-check: within 1e-9 = {}, argmax sets match = {}",
            r.float_check.within_tolerance, r.float_check.argmax_matches
        );
        println!("  conjecture holds here: {}", r.conjecture_holds);
        for ce in &r.counterexamples {
            println!(
                "  counterexample [{}]: {} with R = {} ≈ {}",
                ce.kind, ce.graph6, ce.value.exact, ce.value.decimal
            );
        }
        println!();
    }
}
