//! Apex numbers with witness certificates, cross-checked against the
//! subset-enumeration oracle.
//!
//! Run with: cargo run --release --example apex_certificates

use apex_randic::io::write_graph6;
use apex_randic::{apex_number, apex_number_bruteforce, Graph};

fn main() {
    let graphs = [
        ("P5", Graph::path(5).unwrap()),
        ("C7", Graph::cycle(7).unwrap()),
        ("K4", Graph::complete(4).unwrap()),
        ("K5", Graph::complete(5).unwrap()),
        ("K_{3,3}", Graph::complete_bipartite(3, 3).unwrap()),
        ("prism", Graph::circular_ladder(3).unwrap()),
        ("cube", Graph::circular_ladder(4).unwrap()),
        ("Petersen", Graph::petersen()),
        ("Heawood", Graph::heawood()),
    ];

    for (name, g) in graphs {
        let cert = apex_number(&g).unwrap();
        println!(
            "{name:9} n = {:2}  apex = {}  witness = {:?}  residual tree = {}",
            g.n(),
            cert.k,
            cert.witness,
            write_graph6(&cert.residual)
        );
        if g.n() <= 16 {
            let oracle = apex_number_bruteforce(&g).unwrap();
            assert_eq!(cert.k, oracle.k);
            assert_eq!(cert.witness, oracle.witness);
        }
        assert!(cert.residual.is_tree());
    }
    println!("\nevery certificate re-validated: residual is a tree, oracle agrees");
}
