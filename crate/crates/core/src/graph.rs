//! Graphs, hypergraphs and vertex sets.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Graphs up to this many vertices also keep one neighbor bitset per vertex.
pub const DENSE_LIMIT: usize = 2048;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph has isolated vertex {0}")]
    IsolatedVertex(usize),
    #[error("not a bipartition: {0}")]
    NotBipartite(&'static str),
}

/// A fixed-universe bitset over vertex ids `0..universe`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet {
    words: Vec<u64>,
    universe: usize,
}

impl VertexSet {
    pub fn new(universe: usize) -> Self {
        VertexSet { words: vec![0; universe.div_ceil(64)], universe }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::new(universe);
        for v in 0..universe {
            s.insert(v);
        }
        s
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(universe: usize, items: I) -> Self {
        let mut s = Self::new(universe);
        for v in items {
            s.insert(v);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    #[inline]
    pub fn insert(&mut self, v: usize) -> bool {
        assert!(v < self.universe, "vertex {v} outside universe {}", self.universe);
        let (w, b) = (v / 64, 1u64 << (v % 64));
        let fresh = self.words[w] & b == 0;
        self.words[w] |= b;
        fresh
    }

    #[inline]
    pub fn remove(&mut self, v: usize) -> bool {
        if v >= self.universe {
            return false;
        }
        let (w, b) = (v / 64, 1u64 << (v % 64));
        let present = self.words[w] & b != 0;
        self.words[w] &= !b;
        present
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.universe && self.words[v / 64] & (1u64 << (v % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.universe
    }

    pub fn clear(&mut self) {
        self.words.iter_mut().for_each(|w| *w = 0);
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter { words: &self.words, idx: 0, cur: self.words.first().copied().unwrap_or(0) }
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= *b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= *b;
        }
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !*b;
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.difference_with(other);
        s
    }

    pub fn complement(&self) -> VertexSet {
        let mut s = VertexSet::full(self.universe);
        s.difference_with(self);
        s
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.words.iter().zip(&other.words).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    idx: usize,
    cur: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let bit = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.idx * 64 + bit);
            }
            self.idx += 1;
            if self.idx >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.idx];
        }
    }
}

/// Simple undirected graph on vertices `0..n`.
///
/// Immutable once built. Neighbor lists are sorted; graphs with at most
/// [`DENSE_LIMIT`] vertices also carry a neighbor bitset per vertex.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    dense: Option<Vec<VertexSet>>,
    labels: Option<Vec<String>>,
    m: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph").field("n", &self.n()).field("edges", &self.edges().collect::<Vec<_>>()).finish()
    }
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges are merged.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut b = GraphBuilder::new(n);
        for (u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    pub fn empty(n: usize) -> Graph {
        GraphBuilder::new(n).build()
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        match &self.dense {
            Some(rows) => rows[u].contains(v),
            None => self.adj[u].binary_search(&v).is_ok(),
        }
    }

    /// `N(v)`, or `N[v]` when `closed` is set.
    pub fn neighborhood(&self, v: usize, closed: bool) -> Result<VertexSet, GraphError> {
        if v >= self.n() {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n() });
        }
        let mut s = self.open_neighborhood(v);
        if closed {
            s.insert(v);
        }
        Ok(s)
    }

    pub fn open_neighborhood(&self, v: usize) -> VertexSet {
        match &self.dense {
            Some(rows) => rows[v].clone(),
            None => VertexSet::from_iter(self.n(), self.adj[v].iter().copied()),
        }
    }

    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = self.open_neighborhood(v);
        s.insert(v);
        s
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn isolated_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n()).filter(|&v| self.adj[v].is_empty())
    }

    pub fn has_isolated_vertices(&self) -> bool {
        self.isolated_vertices().next().is_some()
    }

    /// Errors with the first isolated vertex, if any.
    pub fn require_no_isolated(&self) -> Result<(), GraphError> {
        match self.isolated_vertices().next() {
            Some(v) => Err(GraphError::IsolatedVertex(v)),
            None => Ok(()),
        }
    }

    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return true;
        }
        let mut seen = VertexSet::new(self.n());
        let mut stack = vec![0];
        seen.insert(0);
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen.is_full()
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Cheap structural check of the adjacency invariants.
    pub fn check_invariants(&self) -> Result<(), GraphError> {
        let n = self.n();
        for (v, ns) in self.adj.iter().enumerate() {
            for &w in ns {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
                if w == v {
                    return Err(GraphError::SelfLoop(v));
                }
                if self.adj[w].binary_search(&v).is_err() {
                    return Err(GraphError::NotBipartite("asymmetric adjacency"));
                }
            }
        }
        Ok(())
    }
}

/// Incremental construction of a [`Graph`], optionally with vertex labels.
#[derive(Debug, Clone, Default)]
pub struct GraphBuilder {
    adj: Vec<Vec<usize>>,
    labels: Vec<String>,
    labelled: bool,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        GraphBuilder { adj: vec![Vec::new(); n], labels: vec![String::new(); n], labelled: false }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.labels.push(String::new());
        self.adj.len() - 1
    }

    pub fn add_labelled_vertex(&mut self, label: String) -> usize {
        self.labelled = true;
        let v = self.add_vertex();
        self.labels[v] = label;
        v
    }

    pub fn set_label(&mut self, v: usize, label: String) {
        self.labelled = true;
        self.labels[v] = label;
    }

    /// Returns `false` if the edge was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool, GraphError> {
        let n = self.adj.len();
        for x in [u, v] {
            if x >= n {
                return Err(GraphError::VertexOutOfRange { vertex: x, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.adj[u].contains(&v) {
            return Ok(false);
        }
        self.adj[u].push(v);
        self.adj[v].push(u);
        Ok(true)
    }

    pub fn build(mut self) -> Graph {
        let n = self.adj.len();
        let mut m = 0;
        for ns in &mut self.adj {
            ns.sort_unstable();
            m += ns.len();
        }
        let dense =
            (n <= DENSE_LIMIT).then(|| self.adj.iter().map(|ns| VertexSet::from_iter(n, ns.iter().copied())).collect());
        Graph { adj: self.adj, dense, labels: self.labelled.then_some(self.labels), m: m / 2 }
    }
}

/// Two-sided vertex partition of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub a: VertexSet,
    pub b: VertexSet,
}

impl Bipartition {
    /// `A` as given, `B` its complement; rejects edges inside either side.
    pub fn new(g: &Graph, a: VertexSet) -> Result<Bipartition, GraphError> {
        if a.universe() != g.n() {
            return Err(GraphError::NotBipartite("side A has the wrong universe"));
        }
        let b = a.complement();
        for (u, v) in g.edges() {
            if a.contains(u) == a.contains(v) {
                return Err(GraphError::NotBipartite("edge inside one side"));
            }
        }
        Ok(Bipartition { a, b })
    }

    /// The same partition with the sides exchanged.
    pub fn swapped(&self) -> Bipartition {
        Bipartition { a: self.b.clone(), b: self.a.clone() }
    }

    /// Two-colors a graph by BFS, putting the smallest vertex of every
    /// component on side A. `None` if the graph has an odd cycle.
    pub fn two_color(g: &Graph) -> Option<Bipartition> {
        let n = g.n();
        let mut side: Vec<Option<bool>> = vec![None; n];
        for s in 0..n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(true);
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                let sv = side[v].unwrap();
                for &w in g.neighbors(v) {
                    match side[w] {
                        None => {
                            side[w] = Some(!sv);
                            stack.push(w);
                        }
                        Some(sw) if sw == sv => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let a = VertexSet::from_iter(n, (0..n).filter(|&v| side[v] == Some(true)));
        Bipartition::new(g, a).ok()
    }
}

/// Hypergraph on ground set `0..vertex_count`; edges may repeat and keep
/// their order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    vertex_count: usize,
    edges: Vec<VertexSet>,
}

impl Hypergraph {
    pub fn new(vertex_count: usize, edges: Vec<Vec<usize>>) -> Result<Hypergraph, GraphError> {
        let mut sets = Vec::with_capacity(edges.len());
        for e in edges {
            let mut s = VertexSet::new(vertex_count);
            for v in e {
                if v >= vertex_count {
                    return Err(GraphError::VertexOutOfRange { vertex: v, n: vertex_count });
                }
                s.insert(v);
            }
            sets.push(s);
        }
        Ok(Hypergraph { vertex_count, edges: sets })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }
}

/// Small named graph families used by tests, examples and the CLI.
pub mod families {
    use super::*;

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    pub fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).unwrap()
    }

    pub fn complete_bipartite(p: usize, q: usize) -> Graph {
        Graph::from_edges(p + q, (0..p).flat_map(|u| (0..q).map(move |v| (u, p + v)))).unwrap()
    }

    /// Spine path `0..spine` with `legs` pendant vertices on every spine vertex.
    pub fn caterpillar(spine: usize, legs: usize) -> Graph {
        let n = spine * (legs + 1);
        let mut edges: Vec<(usize, usize)> = (1..spine).map(|i| (i - 1, i)).collect();
        for s in 0..spine {
            for l in 0..legs {
                edges.push((s, spine + s * legs + l));
            }
        }
        Graph::from_edges(n, edges).unwrap()
    }

    pub fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, edges).unwrap()
    }
}
