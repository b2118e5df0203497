//! Simple undirected graphs on at most 64 labeled vertices.
//!
//! Adjacency is one `u64` bitmask per vertex, which keeps the structural
//! predicates (connectivity, trees, components) down to a handful of word
//! operations. Graphs are immutable values: every edit returns a new graph.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// Hard representation limit: one adjacency word per vertex.
pub const MAX_VERTICES: usize = 64;

/// Simple undirected graph with vertices labeled `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices. `n = 0` is rejected: nothing in this
    /// crate has a use for the empty graph.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("graph must have at least one vertex".into()));
        }
        if n > MAX_VERTICES {
            return Err(Error::Domain(format!(
                "at most {MAX_VERTICES} vertices supported, got {n}"
            )));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    fn insert_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::Domain(format!(
                "edge ({u}, {v}) out of range for {} vertices",
                self.n
            )));
        }
        if u == v {
            return Err(Error::Domain(format!("self-loop at vertex {u}")));
        }
        if self.adj[u] >> v & 1 == 1 {
            return Err(Error::Domain(format!("duplicate edge ({u}, {v})")));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    /// New graph with one extra edge.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        let mut g = self.clone();
        g.insert_edge(u, v)?;
        Ok(g)
    }

    /// New graph with one extra vertex (label `n`) adjacent to the vertices
    /// set in `neighbors`.
    pub(crate) fn with_added_vertex(&self, neighbors: u64) -> Self {
        debug_assert!(self.n < MAX_VERTICES);
        debug_assert_eq!(neighbors & !mask_below(self.n), 0);
        let n = self.n + 1;
        let mut adj = self.adj.clone();
        adj.push(neighbors);
        let mut bits = neighbors;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            adj[v] |= 1 << (n - 1);
        }
        Graph { n, adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Number of incident edges. Panics on an out-of-range vertex.
    pub fn degree(&self, v: usize) -> usize {
        assert!(v < self.n, "vertex {v} out of range (n = {})", self.n);
        self.adj[v].count_ones() as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn neighbors_mask(&self, v: usize) -> u64 {
        assert!(v < self.n, "vertex {v} out of range (n = {})", self.n);
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        BitIter(self.neighbors_mask(v))
    }

    /// Edges as ordered pairs `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            BitIter(self.adj[u] & !mask_upto(u)).map(move |v| (u, v))
        })
    }

    pub(crate) fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    /// Induced subgraph on `V \ X`, survivors relabeled `0..` by ascending
    /// original label. Deleting every vertex is an error.
    pub fn delete_vertices(&self, xs: &[usize]) -> Result<Graph> {
        let mut del = 0u64;
        for &x in xs {
            if x >= self.n {
                return Err(Error::Domain(format!(
                    "vertex {x} out of range for {} vertices",
                    self.n
                )));
            }
            del |= 1 << x;
        }
        self.delete_mask(del)
    }

    pub(crate) fn delete_mask(&self, del: u64) -> Result<Graph> {
        let alive = mask_below(self.n) & !del;
        if alive == 0 {
            return Err(Error::Domain(
                "deleting every vertex leaves the empty graph".into(),
            ));
        }
        let mut relabel = [usize::MAX; MAX_VERTICES];
        let mut next = 0;
        for v in BitIter(alive) {
            relabel[v] = next;
            next += 1;
        }
        let mut adj = vec![0u64; next];
        for v in BitIter(alive) {
            for w in BitIter(self.adj[v] & alive) {
                adj[relabel[v]] |= 1 << relabel[w];
            }
        }
        Ok(Graph { n: next, adj })
    }

    pub fn is_connected(&self) -> bool {
        let alive = mask_below(self.n);
        flood(&self.adj, alive, 0) == alive
    }

    /// Connected with exactly `n - 1` edges.
    pub fn is_tree(&self) -> bool {
        self.m() == self.n - 1 && self.is_connected()
    }

    pub fn component_count(&self) -> usize {
        components(&self.adj, mask_below(self.n)).len()
    }

    /// The common degree when every vertex has the same one.
    pub fn is_regular(&self) -> Option<usize> {
        let d = self.degree(0);
        if (1..self.n).all(|v| self.degree(v) == d) {
            Some(d)
        } else {
            None
        }
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap()
    }

    pub fn degree_pair_spectrum(&self) -> DegreePairSpectrum {
        let mut spec = DegreePairSpectrum::default();
        for (u, v) in self.edges() {
            spec.bump(self.degree(u), self.degree(v));
        }
        spec
    }

    /// Per-edge symmetry classes together with the degree-pair spectrum.
    pub fn classify_edges(&self) -> (DegreePairSpectrum, Vec<((usize, usize), EdgeClass)>) {
        let mut spec = DegreePairSpectrum::default();
        let mut classes = Vec::with_capacity(self.m());
        for (u, v) in self.edges() {
            let (du, dv) = (self.degree(u), self.degree(v));
            spec.bump(du, dv);
            classes.push(((u, v), EdgeClass::new(du.abs_diff(dv))));
        }
        (spec, classes)
    }

    /// Replace edge `uv` by a path through `times` fresh vertices (appended
    /// as labels `n, n+1, ...`).
    pub fn subdivide_edge(&self, u: usize, v: usize, times: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::Domain(format!("no edge ({u}, {v}) to subdivide")));
        }
        if times == 0 {
            return Ok(self.clone());
        }
        if self.n + times > MAX_VERTICES {
            return Err(Error::Domain(format!(
                "subdivision would exceed {MAX_VERTICES} vertices"
            )));
        }
        let mut g = self.clone();
        g.adj[u] &= !(1 << v);
        g.adj[v] &= !(1 << u);
        for _ in 0..times {
            g.adj.push(0);
            g.n += 1;
        }
        let first = self.n;
        let last = self.n + times - 1;
        g.insert_edge(u, first)?;
        for i in first..last {
            g.insert_edge(i, i + 1)?;
        }
        g.insert_edge(last, v)?;
        Ok(g)
    }

    // Named constructors used all over the tests and examples.

    pub fn path(n: usize) -> Result<Graph> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::Domain("cycle needs at least 3 vertices".into()));
        }
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges)
    }

    pub fn complete(n: usize) -> Result<Graph> {
        let mut edges = Vec::new();
        for v in 0..n {
            for u in 0..v {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges)
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
        let mut edges = Vec::new();
        for u in 0..a {
            for v in 0..b {
                edges.push((u, a + v));
            }
        }
        Graph::from_edges(a + b, &edges)
    }

    /// Star with `leaves` leaves, center 0.
    pub fn star(leaves: usize) -> Result<Graph> {
        Graph::complete_bipartite(1, leaves)
    }

    /// Prism over an `m`-cycle: outer cycle `0..m`, inner cycle `m..2m`, rungs.
    pub fn circular_ladder(m: usize) -> Result<Graph> {
        if m < 3 {
            return Err(Error::Domain("circular ladder needs m >= 3".into()));
        }
        let mut edges = Vec::new();
        for i in 0..m {
            edges.push((i, (i + 1) % m));
            edges.push((m + i, m + (i + 1) % m));
            edges.push((i, m + i));
        }
        Graph::from_edges(2 * m, &edges)
    }

    /// Cycle on `2m` vertices plus the `m` diameters.
    pub fn moebius_ladder(m: usize) -> Result<Graph> {
        if m < 3 {
            return Err(Error::Domain("Möbius ladder needs m >= 3".into()));
        }
        let n = 2 * m;
        let mut edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        edges.extend((0..m).map(|i| (i, i + m)));
        Graph::from_edges(n, &edges)
    }

    pub fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
            edges.push((i, 5 + i));
        }
        Graph::from_edges(10, &edges).unwrap()
    }

    /// LCF [5, -5]^7 on 14 vertices.
    pub fn heawood() -> Graph {
        let mut edges: Vec<_> = (0..14).map(|i| (i, (i + 1) % 14)).collect();
        for i in (0..14).step_by(2) {
            edges.push((i, (i + 5) % 14));
        }
        Graph::from_edges(14, &edges).unwrap()
    }
}

/// Multiset of edge counts by unordered endpoint-degree pair `(a, b)`, a <= b.
/// This is the sufficient statistic for the Randić index: every edge of class
/// `(a, b)` contributes exactly `1/sqrt(a*b)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DegreePairSpectrum {
    counts: BTreeMap<(usize, usize), usize>,
}

impl DegreePairSpectrum {
    fn bump(&mut self, a: usize, b: usize) {
        let key = (a.min(b), a.max(b));
        *self.counts.entry(key).or_insert(0) += 1;
    }

    pub fn get(&self, a: usize, b: usize) -> usize {
        self.counts.get(&(a.min(b), a.max(b))).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.counts.iter().map(|(&k, &v)| (k, v))
    }

    pub fn total_edges(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn asymmetric_edges(&self) -> usize {
        self.counts
            .iter()
            .filter(|&(&(a, b), _)| a != b)
            .map(|(_, &c)| c)
            .sum()
    }

    /// Largest degree gap occurring on an asymmetric edge, 0 if none.
    pub fn max_gap(&self) -> usize {
        self.counts.keys().map(|&(a, b)| b - a).max().unwrap_or(0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeSymmetry {
    Symmetric,
    Asymmetric,
}

/// Symmetry class of one edge: symmetric iff its endpoint degrees agree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EdgeClass {
    pub symmetry: EdgeSymmetry,
    /// `|d(u) - d(v)|`
    pub gap: usize,
}

impl EdgeClass {
    fn new(gap: usize) -> Self {
        let symmetry = if gap == 0 {
            EdgeSymmetry::Symmetric
        } else {
            EdgeSymmetry::Asymmetric
        };
        EdgeClass { symmetry, gap }
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetry == EdgeSymmetry::Symmetric
    }
}

/// Iterator over the set bits of a word.
#[derive(Clone, Copy)]
pub(crate) struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

pub(crate) fn mask_below(n: usize) -> u64 {
    if n >= 64 {
        !0
    } else {
        (1u64 << n) - 1
    }
}

fn mask_upto(v: usize) -> u64 {
    mask_below(v + 1)
}

/// Vertices reachable from `start` inside `alive`.
pub(crate) fn flood(adj: &[u64], alive: u64, start: usize) -> u64 {
    debug_assert!(alive >> start & 1 == 1);
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0u64;
        for v in BitIter(frontier) {
            next |= adj[v] & alive;
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen
}

/// Connected components of the subgraph induced by `alive`, as masks, ordered
/// by lowest vertex.
pub(crate) fn components(adj: &[u64], alive: u64) -> Vec<u64> {
    let mut comps = Vec::new();
    let mut rest = alive;
    while rest != 0 {
        let start = rest.trailing_zeros() as usize;
        let comp = flood(adj, rest, start);
        comps.push(comp);
        rest &= !comp;
    }
    comps
}

/// Edge count of the subgraph induced by `alive`.
pub(crate) fn edges_in(adj: &[u64], alive: u64) -> usize {
    BitIter(alive)
        .map(|v| (adj[v] & alive).count_ones() as usize)
        .sum::<usize>()
        / 2
}
