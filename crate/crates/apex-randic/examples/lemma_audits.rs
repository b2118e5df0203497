//! Audit all five scalar lemmas on their default grids. Three of them fail
//! as stated; the witnesses are printed with exact values.
//!
//! Run with: cargo run --release --example lemma_audits

use apex_randic::lemmas::{audit_lemma, default_grid, LemmaId};

fn main() {
    for id in [LemmaId::L2, LemmaId::L3, LemmaId::L4, LemmaId::L5, LemmaId::L6] {
        let grid = default_grid(id);
        let audit = audit_lemma(id, &grid).unwrap();
        println!("{} on grid {}:", audit.lemma, audit.grid);
        for claim in &audit.claims {
            match &claim.witness {
                None => println!(
                    "  {:?}: {} ({} sign checks)",
                    claim.kind, claim.verdict, claim.checked
                ),
                Some(w) => println!(
                    "  {:?}: {} at {} with value {} ≈ {}",
                    claim.kind,
                    claim.verdict,
                    w,
                    claim.value_exact.as_deref().unwrap(),
                    claim.value_decimal.as_deref().unwrap()
                ),
            }
        }
        println!();
    }
    println!("every verdict above is decided by exact sign, not floating point");
}
