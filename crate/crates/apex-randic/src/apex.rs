//! Apex number: the minimum number of vertex deletions that leaves a tree,
//! with a witness certificate.
//!
//! The fast path is iterative-deepening branch and bound: every surviving
//! cycle must lose a vertex, so branching is restricted to the vertices of a
//! short cycle. Pruning uses a per-component lower bound: all components but
//! one must be deleted outright, and reducing a component's cyclomatic number
//! μ = m - n + c costs at least ⌈μ/(Δ-1)⌉ deletions, since removing a vertex
//! of degree d lowers μ by at most d - 1. (A flat ⌈μ/2⌉ is only valid with
//! Δ <= 3 and over-prunes dense graphs — K6 already breaks it.)
//!
//! The minimum witness set is then re-found lexicographically, and a
//! subset-enumeration oracle cross-checks the whole thing.

use serde::Serialize;

use crate::canon::canonical_code;
use crate::enumerate::{k_apex_trees, Guards};
use crate::error::{Error, Result};
use crate::graph::{components, edges_in, mask_below, BitIter, Graph};
use itertools::Itertools;

/// Proof object for "the apex number of g is k": a witness deletion set of
/// that size (the lexicographically smallest one) and the resulting tree.
#[derive(Clone, Debug)]
pub struct ApexCertificate {
    pub k: usize,
    pub witness: Vec<usize>,
    pub residual: Graph,
}

impl ApexCertificate {
    fn build(g: &Graph, witness: Vec<usize>) -> Result<Self> {
        let residual = g.delete_vertices(&witness)?;
        if !residual.is_tree() {
            return Err(Error::Internal(format!(
                "witness {witness:?} does not leave a tree"
            )));
        }
        // tree on n-k vertices: degree sum 2(n-k-1)
        debug_assert_eq!(
            residual.vertices().map(|v| residual.degree(v)).sum::<usize>(),
            2 * (g.n() - witness.len() - 1)
        );
        Ok(ApexCertificate {
            k: witness.len(),
            witness,
            residual,
        })
    }
}

/// Minimum k with some |X| = k making `g - X` a tree. Trees get k = 0.
/// Requires a connected graph on at least 2 vertices.
pub fn apex_number(g: &Graph) -> Result<ApexCertificate> {
    if g.n() < 2 {
        return Err(Error::Domain("apex number needs at least 2 vertices".into()));
    }
    if !g.is_connected() {
        return Err(Error::Domain("apex number is defined for connected graphs".into()));
    }
    if g.is_tree() {
        return ApexCertificate::build(g, Vec::new());
    }
    let adj = g.adjacency();
    let full = mask_below(g.n());
    for k in 1..g.n() {
        if feasible(adj, full, k) {
            let witness = lexmin_witness(adj, g.n(), k)
                .ok_or_else(|| Error::Internal("feasible size lost on lex re-scan".into()))?;
            return ApexCertificate::build(g, witness);
        }
    }
    Err(Error::Internal("no deletion set found below n".into()))
}

/// Same contract as [`apex_number`], by enumerating subsets in increasing
/// size, lexicographic within each size. Independent oracle; capped at 16
/// vertices.
pub fn apex_number_bruteforce(g: &Graph) -> Result<ApexCertificate> {
    if g.n() > 16 {
        return Err(Error::Guard {
            what: "brute-force apex number".into(),
            estimate: format!("2^{} subsets", g.n()),
        });
    }
    if g.n() < 2 {
        return Err(Error::Domain("apex number needs at least 2 vertices".into()));
    }
    if !g.is_connected() {
        return Err(Error::Domain("apex number is defined for connected graphs".into()));
    }
    for k in 0..g.n() {
        for combo in (0..g.n()).combinations(k) {
            let del: u64 = combo.iter().fold(0u64, |m, &v| m | 1 << v);
            if is_tree_mask(g.adjacency(), mask_below(g.n()) & !del) {
                return ApexCertificate::build(g, combo);
            }
        }
    }
    Err(Error::Internal("no deletion set found below n".into()))
}

pub fn is_k_apex_tree(g: &Graph, k: usize) -> Result<bool> {
    Ok(apex_number(g)?.k == k)
}

fn is_tree_mask(adj: &[u64], alive: u64) -> bool {
    if alive == 0 {
        return false;
    }
    let n = alive.count_ones() as usize;
    edges_in(adj, alive) == n - 1
        && crate::graph::flood(adj, alive, alive.trailing_zeros() as usize) == alive
}

/// Can `budget` more deletions turn the subgraph on `alive` into a tree?
fn feasible(adj: &[u64], alive: u64, budget: usize) -> bool {
    let comps = components(adj, alive);
    let n_alive = alive.count_ones() as usize;

    // forest: keep the largest component, delete the rest whole
    let mut cyclic = Vec::new();
    let mut max_size = 0usize;
    for &c in &comps {
        let size = c.count_ones() as usize;
        max_size = max_size.max(size);
        if edges_in(adj, c) >= size {
            cyclic.push(c);
        }
    }
    if cyclic.is_empty() {
        return n_alive - max_size <= budget;
    }

    // lower bound: keep one component, pay for the rest plus its cycles
    let bound = comps
        .iter()
        .map(|&c| {
            let size = c.count_ones() as usize;
            (n_alive - size) + cycle_lower_bound(adj, c)
        })
        .min()
        .unwrap();
    if bound > budget {
        return false;
    }

    // some vertex of any surviving cycle must go
    let cycle = shortest_cycle(adj, cyclic[0]);
    for v in cycle {
        if feasible(adj, alive & !(1u64 << v), budget - 1) {
            return true;
        }
    }
    false
}

/// ⌈μ / (Δ - 1)⌉ for a cyclic component; deleting one vertex of degree d
/// drops μ by at most d - 1.
fn cycle_lower_bound(adj: &[u64], comp: u64) -> usize {
    let size = comp.count_ones() as usize;
    let m = edges_in(adj, comp);
    if m < size {
        return 0;
    }
    let mu = m - size + 1;
    let max_deg = BitIter(comp)
        .map(|v| (adj[v] & comp).count_ones() as usize)
        .max()
        .unwrap();
    mu.div_ceil(max_deg.saturating_sub(1).max(1))
}

/// A short cycle inside a cyclic component, found by BFS from every vertex:
/// the first non-tree edge closing a cycle through the root gives a
/// candidate; the best candidate over all roots is returned.
fn shortest_cycle(adj: &[u64], comp: u64) -> Vec<usize> {
    let mut best: Option<Vec<usize>> = None;
    for root in BitIter(comp) {
        if let Some(cycle) = bfs_cycle(adj, comp, root) {
            if best.as_ref().is_none_or(|b| cycle.len() < b.len()) {
                best = Some(cycle);
            }
        }
    }
    best.expect("cyclic component must contain a cycle")
}

fn bfs_cycle(adj: &[u64], alive: u64, root: usize) -> Option<Vec<usize>> {
    let mut parent = [usize::MAX; 64];
    let mut dist = [usize::MAX; 64];
    dist[root] = 0;
    let mut queue = vec![root];
    let mut qi = 0;
    let mut best: Option<(usize, usize, usize)> = None; // (length, u, w)
    while qi < queue.len() {
        let u = queue[qi];
        qi += 1;
        for w in BitIter(adj[u] & alive) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                parent[w] = u;
                queue.push(w);
            } else if parent[u] != w && parent[w] != u {
                let len = dist[u] + dist[w] + 1;
                if best.is_none_or(|(l, _, _)| len < l) {
                    best = Some((len, u, w));
                }
            }
        }
    }
    let (_, u, w) = best?;
    // walk both endpoints up to their meeting point
    let path = |mut v: usize| {
        let mut p = vec![v];
        while parent[v] != usize::MAX {
            v = parent[v];
            p.push(v);
        }
        p
    };
    let (pu, pw) = (path(u), path(w));
    let shared: std::collections::HashSet<usize> = pu.iter().copied().collect();
    let meet = *pw.iter().find(|v| shared.contains(v)).unwrap();
    let mut cycle: Vec<usize> = pu.iter().take_while(|&&v| v != meet).copied().collect();
    cycle.push(meet);
    cycle.extend(pw.iter().take_while(|&&v| v != meet));
    Some(cycle)
}

/// First deletion set of size exactly `budget` in lexicographic set order
/// (DFS that includes the lowest-index candidates first).
fn lexmin_witness(adj: &[u64], n: usize, budget: usize) -> Option<Vec<usize>> {
    fn dfs(
        adj: &[u64],
        n: usize,
        alive: u64,
        budget: usize,
        next: usize,
        chosen: &mut Vec<usize>,
    ) -> bool {
        if budget == 0 {
            return is_tree_mask(adj, alive);
        }
        if next >= n || n - next < budget {
            return false;
        }
        // cheap bound: even deleting everything past `next` keeps earlier cycles
        for v in next..=(n - budget) {
            chosen.push(v);
            if dfs(adj, n, alive & !(1u64 << v), budget - 1, v + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let mut chosen = Vec::with_capacity(budget);
    if dfs(adj, n, mask_below(n), budget, 0, &mut chosen) {
        Some(chosen)
    } else {
        None
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RegularWitness {
    pub graph6: String,
    pub degree: usize,
    /// edges between the witness set X and the surviving tree
    pub cross_edges: usize,
    /// l = m·n - m·k - 2n + 2k + 2, the counting identity on X
    pub cross_edge_identity_ok: bool,
    /// l <= m·k
    pub cross_edge_bound_ok: bool,
}

/// Scan of all k-apex trees of one order for regular members. For
/// n >= 4k - 1 an empty list is the expected (theorem-consistent) outcome;
/// below that threshold regular graphs may legitimately appear.
#[derive(Clone, Debug, Serialize)]
pub struct NonRegularityAudit {
    pub k: usize,
    pub n: usize,
    pub scanned: usize,
    pub regular_witnesses: Vec<RegularWitness>,
    pub theorem_consistent: bool,
}

pub fn audit_nonregularity(k: usize, n: usize, guards: &Guards) -> Result<NonRegularityAudit> {
    if k < 2 {
        return Err(Error::Domain("non-regularity audit needs k >= 2".into()));
    }
    let mut scanned = 0usize;
    let mut regular_witnesses = Vec::new();
    for g in k_apex_trees(k, n, guards)? {
        scanned += 1;
        if let Some(m) = g.is_regular() {
            let cert = apex_number(&g)?;
            let xmask: u64 = cert.witness.iter().fold(0, |acc, &v| acc | 1 << v);
            let cross = BitIter(xmask)
                .map(|v| (g.neighbors_mask(v) & !xmask).count_ones() as usize)
                .sum::<usize>();
            let expected = (m * n) as i64 - (m * k) as i64 - 2 * n as i64 + 2 * k as i64 + 2;
            regular_witnesses.push(RegularWitness {
                graph6: canonical_code(&g).as_graph6().to_string(),
                degree: m,
                cross_edges: cross,
                cross_edge_identity_ok: cross as i64 == expected,
                cross_edge_bound_ok: cross <= m * k,
            });
        }
    }
    let theorem_consistent = n < 4 * k - 1 || regular_witnesses.is_empty();
    Ok(NonRegularityAudit {
        k,
        n,
        scanned,
        regular_witnesses,
        theorem_consistent,
    })
}
