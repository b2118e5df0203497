//! Isomorph-free exhaustive generation of connected graphs, free trees, and
//! k-apex trees of a given order.
//!
//! Generation grows graphs one vertex at a time: every class of order v is
//! extended by a new vertex with every possible neighborhood, children are
//! deduplicated level-wise by their packed canonical key, and each level is
//! sorted. The emitted stream is therefore deterministic (ascending canonical
//! code) and independent of the degree of parallelism; workers only ever
//! produce local key sets that are merged and sorted. A from-scratch labeled
//! generator provides the second, independent route for the counts.
//!
//! k-apex trees come in two interchangeable strategies: (A) filter the
//! connected enumeration by apex number, (B) attach k new vertices to every
//! free tree on n-k vertices in all possible ways. Their streams must agree
//! exactly; `count_cross_check` asserts it.

use std::collections::HashSet;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::apex::apex_number;
use crate::canon::{canonical_key, graph_from_key};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Cost guards. Defaults keep everything desk-scale; `allow_large` lifts the
/// order guard (but never past the 16-vertex key limit).
#[derive(Clone, Debug)]
pub struct Guards {
    /// largest order enumerated without `allow_large`
    pub max_n: usize,
    /// cap on strategy-B candidate count
    pub max_candidates: u64,
    pub allow_large: bool,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            max_n: 10,
            max_candidates: 20_000_000,
            allow_large: false,
        }
    }
}

impl Guards {
    pub fn allow_large() -> Self {
        Guards {
            allow_large: true,
            ..Guards::default()
        }
    }

    fn check_order(&self, n: usize) -> Result<()> {
        if n == 0 {
            return Err(Error::Domain("enumeration needs n >= 1".into()));
        }
        if n > 16 {
            return Err(Error::Guard {
                what: format!("enumeration at n = {n}"),
                estimate: "hard cap is 16 vertices (packed canonical keys)".into(),
            });
        }
        if n > self.max_n && !self.allow_large {
            return Err(Error::Guard {
                what: format!("enumeration at n = {n}"),
                estimate: format!(
                    "guard is n <= {}; roughly {} classes at n = {n} — pass --allow-large to proceed",
                    self.max_n,
                    class_estimate(n)
                ),
            });
        }
        Ok(())
    }
}

fn class_estimate(n: usize) -> &'static str {
    const EST: [&str; 17] = [
        "0", "1", "2", "4", "11", "34", "156", "1044", "12346", "274668", "12005168",
        "1018997864", "1.65e11", "5.0e13", "2.9e16", "3.2e19", "6.4e22",
    ];
    EST.get(n).copied().unwrap_or("astronomical")
}

/// Deterministic stream of graphs reconstructed from sorted canonical keys.
pub struct GraphStream {
    keys: std::vec::IntoIter<u128>,
}

impl Iterator for GraphStream {
    type Item = Graph;
    fn next(&mut self) -> Option<Graph> {
        self.keys.next().map(graph_from_key)
    }
}

impl GraphStream {
    fn from_keys(keys: Vec<u128>) -> Self {
        GraphStream { keys: keys.into_iter() }
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.len() == 0
    }
}

/// Canonical keys of all isomorphism classes on `n` vertices (connected or
/// not), grown level by level.
fn all_class_keys(n: usize, guards: &Guards) -> Result<Vec<u128>> {
    guards.check_order(n)?;
    let mut level: Vec<u128> = vec![canonical_key(&Graph::empty(1).unwrap())];
    for v in 1..n {
        let merged: HashSet<u128> = level
            .par_iter()
            .fold(HashSet::new, |mut acc, &key| {
                let parent = graph_from_key(key);
                for mask in 0..(1u64 << v) {
                    acc.insert(canonical_key(&parent.with_added_vertex(mask)));
                }
                acc
            })
            .reduce(HashSet::new, |mut a, b| {
                a.extend(b);
                a
            });
        level = merged.into_iter().collect();
        level.sort_unstable();
    }
    Ok(level)
}

/// One representative per isomorphism class of connected graphs on `n`
/// vertices, ascending canonical code.
pub fn connected_graphs(n: usize, guards: &Guards) -> Result<GraphStream> {
    let keys = all_class_keys(n, guards)?
        .into_iter()
        .filter(|&k| graph_from_key(k).is_connected())
        .collect();
    Ok(GraphStream::from_keys(keys))
}

pub fn connected_count(n: usize, guards: &Guards) -> Result<usize> {
    Ok(connected_graphs(n, guards)?.len())
}

/// Independent route: every labeled graph on `n` vertices, filtered to
/// connected, deduplicated by canonical key. Exponential in n²; guarded at
/// n <= 7.
pub fn connected_class_keys_bruteforce(n: usize) -> Result<Vec<u128>> {
    if n == 0 || n > 7 {
        return Err(Error::Guard {
            what: format!("labeled brute-force enumeration at n = {n}"),
            estimate: format!("2^{} labeled graphs", n * n.saturating_sub(1) / 2),
        });
    }
    let pairs = n * (n - 1) / 2;
    let total = 1u64 << pairs;
    let chunk = 1u64 << 12;
    let set: HashSet<u128> = (0..total.div_ceil(chunk))
        .into_par_iter()
        .fold(HashSet::new, |mut acc, c| {
            let lo = c * chunk;
            let hi = (lo + chunk).min(total);
            for bits in lo..hi {
                let g = graph_from_bits(n, bits);
                if g.is_connected() {
                    acc.insert(canonical_key(&g));
                }
            }
            acc
        })
        .reduce(HashSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    let mut keys: Vec<u128> = set.into_iter().collect();
    keys.sort_unstable();
    Ok(keys)
}

fn graph_from_bits(n: usize, bits: u64) -> Graph {
    let mut edges = Vec::new();
    let mut t = 0;
    for v in 1..n {
        for u in 0..v {
            if bits >> t & 1 == 1 {
                edges.push((u, v));
            }
            t += 1;
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// One representative per free-tree isomorphism class on `v` vertices.
/// Every class admits a labeling where each vertex attaches to a smaller
/// label (root any vertex, BFS order), so running through all parent arrays
/// p[i] < i and deduplicating canonically is exhaustive.
pub fn free_trees(v: usize) -> Result<Vec<Graph>> {
    if v == 0 || v > 11 {
        return Err(Error::Guard {
            what: format!("free tree generation at v = {v}"),
            estimate: format!("{v}-1 factorial parent arrays"),
        });
    }
    if v == 1 {
        return Ok(vec![Graph::empty(1).unwrap()]);
    }
    let mut keys = HashSet::new();
    let mut parents = vec![0usize; v]; // parents[i] < i for i >= 1
    loop {
        let edges: Vec<(usize, usize)> = (1..v).map(|i| (parents[i], i)).collect();
        keys.insert(canonical_key(&Graph::from_edges(v, &edges).unwrap()));
        // odometer over parent choices
        let mut i = v - 1;
        loop {
            parents[i] += 1;
            if parents[i] < i {
                break;
            }
            parents[i] = 0;
            if i == 1 {
                let mut sorted: Vec<u128> = keys.into_iter().collect();
                sorted.sort_unstable();
                return Ok(sorted.into_iter().map(graph_from_key).collect());
            }
            i -= 1;
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Strategy {
    /// filter the connected enumeration by apex number
    FilterConnected,
    /// attach k new vertices to free trees on n-k vertices
    TreeAttachment,
}

pub(crate) fn k_apex_tree_keys(
    k: usize,
    n: usize,
    guards: &Guards,
    strategy: Strategy,
) -> Result<Vec<u128>> {
    if k == 0 || n <= k {
        return Err(Error::Domain(format!(
            "k-apex tree enumeration needs n > k >= 1, got k = {k}, n = {n}"
        )));
    }
    match strategy {
        Strategy::FilterConnected => {
            guards.check_order(n)?;
            let keys: Vec<u128> = all_class_keys(n, guards)?
                .into_par_iter()
                .filter(|&key| {
                    let g = graph_from_key(key);
                    g.is_connected() && apex_number(&g).map(|c| c.k == k).unwrap_or(false)
                })
                .collect();
            Ok(keys)
        }
        Strategy::TreeAttachment => {
            let v = n - k;
            let trees = free_trees(v)?;
            let mut shift = 0u32;
            let mut candidates = trees.len() as u64;
            for i in 0..k {
                shift += (v + i) as u32;
            }
            candidates = candidates.saturating_mul(1u64 << shift.min(63));
            if candidates > guards.max_candidates {
                return Err(Error::Guard {
                    what: format!("tree-attachment enumeration for k = {k}, n = {n}"),
                    estimate: format!("about {candidates} attachment candidates"),
                });
            }
            let set: HashSet<u128> = trees
                .par_iter()
                .fold(HashSet::new, |mut acc, tree| {
                    attach_vertices(tree, k, n, &mut acc);
                    acc
                })
                .reduce(HashSet::new, |mut a, b| {
                    a.extend(b);
                    a
                });
            let mut keys: Vec<u128> = set.into_iter().collect();
            keys.sort_unstable();
            Ok(keys)
        }
    }
}

fn attach_vertices(tree: &Graph, k: usize, n: usize, out: &mut HashSet<u128>) {
    fn rec(g: &Graph, remaining: usize, k: usize, out: &mut HashSet<u128>) {
        if remaining == 0 {
            if g.is_connected() && apex_number(g).map(|c| c.k == k).unwrap_or(false) {
                out.insert(canonical_key(g));
            }
            return;
        }
        for mask in 0..(1u64 << g.n()) {
            rec(&g.with_added_vertex(mask), remaining - 1, k, out);
        }
    }
    debug_assert_eq!(tree.n() + k, n);
    rec(tree, k, k, out);
}

/// One representative per isomorphism class of graphs with apex number
/// exactly `k` and order `n` (strategy A).
pub fn k_apex_trees(k: usize, n: usize, guards: &Guards) -> Result<GraphStream> {
    Ok(GraphStream::from_keys(k_apex_tree_keys(
        k,
        n,
        guards,
        Strategy::FilterConnected,
    )?))
}

#[derive(Clone, Debug, Serialize)]
pub struct EnumerationSummary {
    pub n: usize,
    pub filter: String,
    pub count: usize,
    pub strategy: String,
    pub wall_ms: u128,
}

/// Run both k-apex strategies and require identical canonical-code sets.
pub fn count_cross_check(k: usize, n: usize, guards: &Guards) -> Result<EnumerationSummary> {
    let start = Instant::now();
    let a = k_apex_tree_keys(k, n, guards, Strategy::FilterConnected)?;
    let b = k_apex_tree_keys(k, n, guards, Strategy::TreeAttachment)?;
    if a != b {
        return Err(Error::Internal(format!(
            "strategy A found {} classes, strategy B found {} for k = {k}, n = {n}",
            a.len(),
            b.len()
        )));
    }
    Ok(EnumerationSummary {
        n,
        filter: format!("{k}-apex trees"),
        count: a.len(),
        strategy: "filter-connected + tree-attachment".into(),
        wall_ms: start.elapsed().as_millis(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::{are_isomorphic_bruteforce, canonical_code};

    #[test]
    fn connected_counts_small() {
        let guards = Guards::default();
        let expected = [1usize, 1, 2, 6, 21, 112];
        for (i, &want) in expected.iter().enumerate() {
            let n = i + 1;
            assert_eq!(connected_count(n, &guards).unwrap(), want, "n = {n}");
        }
    }

    #[test]
    fn matches_labeled_bruteforce_to_5() {
        let guards = Guards::default();
        for n in 1..=5usize {
            let fast: Vec<u128> = connected_graphs(n, &guards)
                .unwrap()
                .map(|g| canonical_key(&g))
                .collect();
            let slow = connected_class_keys_bruteforce(n).unwrap();
            assert_eq!(fast, slow, "n = {n}");
        }
    }

    #[test]
    fn completeness_by_bruteforce_iso_to_5() {
        // from-scratch: all labeled graphs, connected, deduped by pairwise
        // brute-force isomorphism — no canonical code involved
        for (n, want) in [(2usize, 1usize), (3, 2), (4, 6), (5, 21)] {
            let pairs = n * (n - 1) / 2;
            let mut reps: Vec<Graph> = Vec::new();
            for bits in 0u64..1 << pairs {
                let g = graph_from_bits(n, bits);
                if g.is_connected() && !reps.iter().any(|r| are_isomorphic_bruteforce(r, &g)) {
                    reps.push(g);
                }
            }
            assert_eq!(reps.len(), want, "n = {n}");
            assert_eq!(connected_count(n, &Guards::default()).unwrap(), want, "n = {n}");
        }
    }

    #[test]
    fn no_duplicate_codes() {
        let guards = Guards::default();
        let codes: Vec<_> = connected_graphs(6, &guards)
            .unwrap()
            .map(|g| canonical_code(&g))
            .collect();
        let mut dedup = codes.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(codes.len(), dedup.len());
        // stream is sorted ascending
        assert!(codes.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn guard_refuses_large() {
        match connected_graphs(11, &Guards::default()) {
            Err(Error::Guard { .. }) => {}
            other => panic!("expected guard refusal, got {:?}", other.map(|s| s.len())),
        }
        // hard cap holds even with allow_large
        assert!(connected_graphs(17, &Guards::allow_large()).is_err());
    }

    #[test]
    fn free_tree_counts() {
        let expected = [1usize, 1, 1, 2, 3, 6, 11, 23, 47];
        for (i, &want) in expected.iter().enumerate() {
            let v = i + 1;
            let trees = free_trees(v).unwrap();
            assert_eq!(trees.len(), want, "v = {v}");
            assert!(trees.iter().all(|t| t.is_tree()));
        }
    }

    #[test]
    fn one_apex_on_four_vertices() {
        let guards = Guards::default();
        let classes: Vec<Graph> = k_apex_trees(1, 4, &guards).unwrap().collect();
        assert_eq!(classes.len(), 3);
        let codes: Vec<_> = classes.iter().map(canonical_code).collect();
        let c4 = canonical_code(&Graph::cycle(4).unwrap());
        let paw = canonical_code(&Graph::from_edges(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap());
        assert!(codes.contains(&c4));
        assert!(codes.contains(&paw));
        // no trees in the stream
        assert!(classes.iter().all(|g| !g.is_tree()));
    }

    #[test]
    fn cross_checks_agree() {
        let guards = Guards::default();
        for (k, n) in [(1, 4), (1, 5), (2, 5), (2, 6), (2, 7)] {
            let summary = count_cross_check(k, n, &guards).unwrap();
            assert!(summary.count > 0, "(k, n) = ({k}, {n})");
        }
    }

    #[test]
    fn two_apex_seven_contains_subdivided_k4() {
        let guards = Guards::default();
        let target = canonical_code(&Graph::complete(4).unwrap().subdivide_edge(2, 3, 3).unwrap());
        let found = k_apex_trees(2, 7, &guards)
            .unwrap()
            .any(|g| canonical_code(&g) == target);
        assert!(found);
    }

    #[test]
    fn two_apex_seven_has_no_regular_graph() {
        let guards = Guards::default();
        assert!(k_apex_trees(2, 7, &guards)
            .unwrap()
            .all(|g| g.is_regular().is_none()));
    }
}
