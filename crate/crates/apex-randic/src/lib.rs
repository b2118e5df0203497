//! Exact Randić index computation and k-apex tree analysis.
//!
//! A graph is a k-apex tree when some k-vertex set — and no smaller one —
//! can be deleted to leave a tree. This crate computes the Randić index
//! `R(G) = Σ 1/sqrt(d(u)d(v))` in exact arithmetic over sums of square
//! roots, determines apex numbers with witness certificates, enumerates
//! connected graphs and k-apex trees up to isomorphism, and audits a set of
//! claims about the Randić maximizers among k-apex trees — including an
//! exhaustive scan for the conjectured sharp bound `n/2 - (5 - 2√6)/6`.
//!
//! ```
//! use apex_randic::{randic_value, Graph, RadicalValue};
//!
//! let k4 = Graph::complete(4).unwrap();
//! assert_eq!(randic_value(&k4), RadicalValue::from_integer(2));
//! ```
//!
//! The `examples/` directory has one runnable example per capability; the
//! `apexrandic` binary exposes the same operations as subcommands.

pub mod apex;
pub mod canon;
pub mod cli;
pub mod enumerate;
pub mod error;
pub mod family;
pub mod graph;
pub mod io;
pub mod lemmas;
pub mod radical;
pub mod randic;
pub mod report;

pub use apex::{apex_number, apex_number_bruteforce, is_k_apex_tree, ApexCertificate};
pub use canon::{are_isomorphic, canonical_code, canonical_form, CanonicalCode};
pub use enumerate::{connected_graphs, free_trees, k_apex_trees, Guards};
pub use error::{Error, Result};
pub use family::{construct_member, extremal_value, family_membership, verify_conjecture};
pub use graph::{DegreePairSpectrum, EdgeClass, Graph};
pub use lemmas::{audit_lemma, lemma_function, LemmaId};
pub use radical::{RadicalValue, Sign};
pub use randic::{randic, randic_float, randic_value, verify_gap_identity, RandicResult};
