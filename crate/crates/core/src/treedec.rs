//! Tree decompositions: validation, heuristic and exact construction, and the
//! nice form with leaf, introduce, rule, forget and join nodes.

use alloc::collections::BinaryHeap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;

use hashbrown::{HashMap, HashSet};

use crate::graph::Graph;
use crate::GuardExceeded;

/// Vertex limit of the subset dynamic program in [`exact_treewidth`].
pub const EXACT_LIMIT: usize = 20;

/// Vertex limit of the branch-and-bound decision `tw <= k`.
pub const DECISION_LIMIT: usize = 64;

/// Bags (sorted vertex lists) connected by tree edges.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TreeDecomposition {
    pub bags: Vec<Vec<usize>>,
    pub edges: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TdViolation {
    #[error("bag {bag} contains vertex {vertex} outside the graph")]
    VertexOutOfRange { bag: usize, vertex: usize },
    #[error("bag {bag} lists vertex {vertex} twice")]
    RepeatedVertex { bag: usize, vertex: usize },
    #[error("the bags do not form a tree")]
    NotATree,
    #[error("vertex {0} is in no bag")]
    VertexUncovered(usize),
    #[error("edge {0}-{1} is in no bag")]
    EdgeUncovered(usize, usize),
    #[error("the bags containing vertex {0} are not connected")]
    Disconnected(usize),
}

impl TreeDecomposition {
    pub fn new(bags: Vec<Vec<usize>>, edges: Vec<(usize, usize)>) -> Self {
        let bags = bags
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        TreeDecomposition { bags, edges }
    }

    /// Largest bag size minus one; `0` for decompositions without bags.
    pub fn width(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(1).saturating_sub(1)
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.bags.len()];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    /// Builds the decomposition induced by eliminating vertices in `order`.
    /// Components are chained at their roots so the result is one tree.
    pub fn from_elimination_order(g: &Graph, order: &[usize]) -> TreeDecomposition {
        let n = g.n();
        assert_eq!(order.len(), n, "elimination order must list every vertex");
        if n == 0 {
            return TreeDecomposition { bags: vec![Vec::new()], edges: Vec::new() };
        }
        let mut pos = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut adj: Vec<HashSet<usize>> = (0..n).map(|v| g.neighbors(v).iter().copied().collect()).collect();
        let mut bags = Vec::with_capacity(n);
        let mut parent_vertex = vec![usize::MAX; n];
        for &v in order {
            let later: Vec<usize> = adj[v].iter().copied().collect();
            for &a in &later {
                adj[a].remove(&v);
            }
            for (i, &a) in later.iter().enumerate() {
                for &b in &later[i + 1..] {
                    adj[a].insert(b);
                    adj[b].insert(a);
                }
            }
            if let Some(&p) = later.iter().min_by_key(|&&w| pos[w]) {
                parent_vertex[v] = p;
            }
            let mut bag = later;
            bag.push(v);
            bag.sort_unstable();
            bags.push(bag);
        }
        let mut edges = Vec::with_capacity(n - 1);
        let mut last_root: Option<usize> = None;
        for (i, &v) in order.iter().enumerate() {
            match parent_vertex[v] {
                usize::MAX => {
                    if let Some(r) = last_root {
                        edges.push((r, i));
                    }
                    last_root = Some(i);
                }
                p => edges.push((i, pos[p])),
            }
        }
        TreeDecomposition { bags, edges }
    }
}

/// Width of `td` if it is a tree decomposition of `g`, else the first
/// violated condition.
pub fn validate_td(g: &Graph, td: &TreeDecomposition) -> Result<usize, TdViolation> {
    let n = g.n();
    let nb = td.bags.len();
    let mut stamp = vec![usize::MAX; n];
    for (i, bag) in td.bags.iter().enumerate() {
        for &v in bag {
            if v >= n {
                return Err(TdViolation::VertexOutOfRange { bag: i, vertex: v });
            }
            if core::mem::replace(&mut stamp[v], i) == i {
                return Err(TdViolation::RepeatedVertex { bag: i, vertex: v });
            }
        }
    }
    if nb == 0 {
        return if n == 0 { Ok(0) } else { Err(TdViolation::VertexUncovered(0)) };
    }
    if td.edges.len() != nb - 1 || td.edges.iter().any(|&(a, b)| a >= nb || b >= nb || a == b) {
        return Err(TdViolation::NotATree);
    }
    let adj = td.adjacency();
    let mut seen = vec![false; nb];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(t) = stack.pop() {
        for &u in &adj[t] {
            if !core::mem::replace(&mut seen[u], true) {
                stack.push(u);
            }
        }
    }
    if seen.iter().any(|s| !s) {
        return Err(TdViolation::NotATree);
    }
    let mut holders: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, bag) in td.bags.iter().enumerate() {
        for &v in bag {
            holders[v].push(i);
        }
    }
    if let Some(v) = (0..n).find(|&v| holders[v].is_empty()) {
        return Err(TdViolation::VertexUncovered(v));
    }
    for (u, v) in g.edges() {
        if !holders[u].iter().any(|&i| td.bags[i].contains(&v)) {
            return Err(TdViolation::EdgeUncovered(u, v));
        }
    }
    // In a tree, the bags holding v are connected iff they span
    // |holders| - 1 tree edges among themselves.
    let mut internal = vec![0usize; n];
    for &(a, b) in &td.edges {
        for &v in td.bags[a].iter().filter(|v| td.bags[b].contains(v)) {
            internal[v] += 1;
        }
    }
    if let Some(v) = (0..n).find(|&v| internal[v] + 1 != holders[v].len()) {
        return Err(TdViolation::Disconnected(v));
    }
    Ok(td.width())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Heuristic {
    MinDegree,
    MinFill,
}

/// Greedy elimination order by the given heuristic, ties to the lowest id.
pub fn elimination_order(g: &Graph, strategy: Heuristic) -> Vec<usize> {
    let n = g.n();
    let mut adj: Vec<HashSet<usize>> = (0..n).map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let mut gone = vec![false; n];
    let score = |adj: &[HashSet<usize>], v: usize| -> usize {
        match strategy {
            Heuristic::MinDegree => adj[v].len(),
            Heuristic::MinFill => {
                let ns: Vec<usize> = adj[v].iter().copied().collect();
                let mut missing = 0;
                for (i, &a) in ns.iter().enumerate() {
                    missing += ns[i + 1..].iter().filter(|&&b| !adj[a].contains(&b)).count();
                }
                missing
            }
        }
    };
    let mut current: Vec<usize> = (0..n).map(|v| score(&adj, v)).collect();
    let mut heap: BinaryHeap<Reverse<(usize, usize, usize)>> =
        (0..n).map(|v| Reverse((current[v], adj[v].len(), v))).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(Reverse((s, d, v))) = heap.pop() {
        if gone[v] || s != current[v] || d != adj[v].len() {
            continue;
        }
        gone[v] = true;
        order.push(v);
        let ns: Vec<usize> = adj[v].drain().collect();
        for &a in &ns {
            adj[a].remove(&v);
        }
        for (i, &a) in ns.iter().enumerate() {
            for &b in &ns[i + 1..] {
                adj[a].insert(b);
                adj[b].insert(a);
            }
        }
        let mut touched: HashSet<usize> = ns.iter().copied().collect();
        if strategy == Heuristic::MinFill {
            for &a in &ns {
                touched.extend(adj[a].iter().copied());
            }
        }
        for w in touched {
            if !gone[w] {
                current[w] = score(&adj, w);
                heap.push(Reverse((current[w], adj[w].len(), w)));
            }
        }
    }
    order
}

pub fn heuristic_decomposition(g: &Graph, strategy: Heuristic) -> TreeDecomposition {
    TreeDecomposition::from_elimination_order(g, &elimination_order(g, strategy))
}

/// Result of [`exact_treewidth`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExactTreewidth {
    Width(usize, TreeDecomposition),
    /// The treewidth is larger than the requested bound.
    Exceeds(usize),
}

/// Exact treewidth with a witness decomposition. With `upper_bound = Some(k)`
/// this decides `tw <= k` and may answer [`ExactTreewidth::Exceeds`].
///
/// Without a bound, graphs up to [`EXACT_LIMIT`] vertices are solved by a
/// subset DP over elimination orders. With a bound, the heuristic and a
/// degeneracy lower bound are tried first, then a branch and bound over
/// elimination orders (up to [`DECISION_LIMIT`] vertices).
pub fn exact_treewidth(g: &Graph, upper_bound: Option<usize>) -> Result<ExactTreewidth, GuardExceeded> {
    let n = g.n();
    if n <= EXACT_LIMIT {
        let td = TreeDecomposition::from_elimination_order(g, &subset_dp_order(g));
        let w = td.width();
        return Ok(match upper_bound {
            Some(k) if w > k => ExactTreewidth::Exceeds(k),
            _ => ExactTreewidth::Width(w, td),
        });
    }
    let Some(k) = upper_bound else {
        return Err(GuardExceeded { size: n, limit: EXACT_LIMIT });
    };
    if degeneracy(g) > k {
        return Ok(ExactTreewidth::Exceeds(k));
    }
    let heuristic = heuristic_decomposition(g, Heuristic::MinFill);
    let mut best = if heuristic.width() <= k {
        heuristic
    } else {
        match bounded_order(g, k)? {
            Some(order) => TreeDecomposition::from_elimination_order(g, &order),
            None => return Ok(ExactTreewidth::Exceeds(k)),
        }
    };
    let floor = degeneracy(g);
    while best.width() > floor {
        match bounded_order(g, best.width() - 1)? {
            Some(order) => best = TreeDecomposition::from_elimination_order(g, &order),
            None => break,
        }
    }
    Ok(ExactTreewidth::Width(best.width(), best))
}

/// Degeneracy: a lower bound on treewidth.
pub fn degeneracy(g: &Graph) -> usize {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut gone = vec![false; n];
    let mut heap: BinaryHeap<Reverse<(usize, usize)>> = (0..n).map(|v| Reverse((deg[v], v))).collect();
    let mut best = 0;
    while let Some(Reverse((d, v))) = heap.pop() {
        if gone[v] || d != deg[v] {
            continue;
        }
        gone[v] = true;
        best = best.max(d);
        for &w in g.neighbors(v) {
            if !gone[w] {
                deg[w] -= 1;
                heap.push(Reverse((deg[w], w)));
            }
        }
    }
    best
}

fn masks(g: &Graph) -> Vec<u64> {
    (0..g.n()).map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w)).collect()
}

/// Neighbors of `v` in the graph obtained by eliminating `s`: vertices
/// outside `s + v` reachable from `v` through `s`.
fn q_set(adj: &[u64], s: u64, v: usize) -> u64 {
    let mut frontier = adj[v];
    let mut inside = 0u64;
    loop {
        let fresh = frontier & s & !inside;
        if fresh == 0 {
            break;
        }
        inside |= fresh;
        let mut f = fresh;
        while f != 0 {
            let w = f.trailing_zeros() as usize;
            f &= f - 1;
            frontier |= adj[w];
        }
    }
    frontier & !s & !(1 << v)
}

/// Optimal elimination order by the classic subset recurrence
/// `TW(S) = min_v max(TW(S - v), |Q(S - v, v)|)`.
fn subset_dp_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n == 0 {
        return Vec::new();
    }
    let adj = masks(g);
    let full = (1u64 << n) - 1;
    let mut tw = vec![u8::MAX; 1 << n];
    let mut arg = vec![0u8; 1 << n];
    tw[0] = 0;
    for s in 1..=full {
        let mut best = u8::MAX;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let prev = s & !(1 << v);
            let cost = tw[prev as usize].max(q_set(&adj, prev, v).count_ones() as u8);
            if cost < best {
                best = cost;
                arg[s as usize] = v as u8;
            }
        }
        tw[s as usize] = best;
    }
    let mut order = Vec::with_capacity(n);
    let mut s = full;
    while s != 0 {
        let v = arg[s as usize] as usize;
        order.push(v);
        s &= !(1 << v);
    }
    order.reverse();
    order
}

/// Elimination order of width at most `k`, if one exists.
fn bounded_order(g: &Graph, k: usize) -> Result<Option<Vec<usize>>, GuardExceeded> {
    let n = g.n();
    if n > DECISION_LIMIT {
        return Err(GuardExceeded { size: n, limit: DECISION_LIMIT });
    }
    let adj = masks(g);
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut failed: HashSet<u64> = HashSet::new();
    let mut order = Vec::new();
    fn rec(adj: &[u64], full: u64, k: usize, s: u64, failed: &mut HashSet<u64>, order: &mut Vec<usize>) -> bool {
        let remaining = (full & !s).count_ones() as usize;
        if remaining <= k + 1 {
            let mut rest = full & !s;
            while rest != 0 {
                order.push(rest.trailing_zeros() as usize);
                rest &= rest - 1;
            }
            return true;
        }
        if failed.contains(&s) {
            return false;
        }
        let mut cands: Vec<(u32, usize)> = Vec::new();
        let mut rest = full & !s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let q = q_set(adj, s, v).count_ones();
            if q as usize <= k {
                cands.push((q, v));
            }
        }
        cands.sort_unstable();
        if let Some(&(q, v)) = cands.first() {
            // Vertices of degree at most one are simplicial and safe to
            // eliminate first.
            if q <= 1 {
                order.push(v);
                if rec(adj, full, k, s | 1 << v, failed, order) {
                    return true;
                }
                order.pop();
                failed.insert(s);
                return false;
            }
        }
        for (_, v) in cands {
            order.push(v);
            if rec(adj, full, k, s | 1 << v, failed, order) {
                return true;
            }
            order.pop();
        }
        failed.insert(s);
        false
    }
    Ok(rec(&adj, full, k, 0, &mut failed, &mut order).then_some(order))
}

/// Node kinds of a nice tree decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NodeKind {
    Leaf,
    Introduce(usize),
    /// Placed directly below `Forget(v)` with the same bag.
    Rule(usize),
    Forget(usize),
    Join,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NiceNode {
    pub kind: NodeKind,
    pub bag: Vec<usize>,
    pub children: Vec<usize>,
}

/// Rooted binary tree decomposition. Nodes are stored children first; the
/// root is the last node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NiceTd {
    pub nodes: Vec<NiceNode>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("nice decomposition invalid at node {node}: {reason}")]
pub struct NiceViolation {
    pub node: usize,
    pub reason: &'static str,
}

impl NiceTd {
    pub fn root(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn width(&self) -> usize {
        self.nodes.iter().map(|t| t.bag.len()).max().unwrap_or(1).saturating_sub(1)
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Checks all structural invariants of the nice form against `g`.
    pub fn check(&self, g: &Graph) -> Result<(), NiceViolation> {
        let n = g.n();
        let fail = |node, reason| Err(NiceViolation { node, reason });
        if self.nodes.is_empty() {
            return fail(0, "no nodes");
        }
        if !self.nodes[self.root()].bag.is_empty() {
            return fail(self.root(), "root bag not empty");
        }
        let mut parent = vec![usize::MAX; self.nodes.len()];
        let mut forgotten = vec![false; n];
        for (i, t) in self.nodes.iter().enumerate() {
            if t.bag.windows(2).any(|w| w[0] >= w[1]) || t.bag.iter().any(|&v| v >= n) {
                return fail(i, "bag not a sorted vertex list");
            }
            for &c in &t.children {
                if c >= i || parent[c] != usize::MAX {
                    return fail(i, "children must precede their unique parent");
                }
                parent[c] = i;
            }
            let child_bag = |j: usize| &self.nodes[t.children[j]].bag;
            let arity = t.children.len();
            match t.kind {
                NodeKind::Leaf => {
                    if arity != 0 || !t.bag.is_empty() {
                        return fail(i, "leaf must be childless with an empty bag");
                    }
                }
                NodeKind::Introduce(v) => {
                    if arity != 1 || !same_plus(&t.bag, child_bag(0), v) {
                        return fail(i, "introduce must add exactly its vertex");
                    }
                }
                NodeKind::Forget(v) => {
                    if arity != 1 || !same_plus(child_bag(0), &t.bag, v) {
                        return fail(i, "forget must remove exactly its vertex");
                    }
                    if self.nodes[t.children[0]].kind != NodeKind::Rule(v) {
                        return fail(i, "forget must sit on a rule node of its vertex");
                    }
                    if core::mem::replace(&mut forgotten[v], true) {
                        return fail(i, "vertex forgotten twice");
                    }
                }
                NodeKind::Rule(v) => {
                    if arity != 1 || child_bag(0) != &t.bag || t.bag.binary_search(&v).is_err() {
                        return fail(i, "rule node must copy its child's bag containing its vertex");
                    }
                    if g.neighbors(v).iter().any(|&w| !forgotten[w] && t.bag.binary_search(&w).is_err()) {
                        return fail(i, "a neighbor still to be forgotten is missing from the rule bag");
                    }
                }
                NodeKind::Join => {
                    if arity != 2 || child_bag(0) != &t.bag || child_bag(1) != &t.bag {
                        return fail(i, "join must have two children with its bag");
                    }
                }
            }
        }
        for (i, &p) in parent.iter().enumerate() {
            if i != self.root() && p == usize::MAX {
                return fail(i, "node without parent");
            }
            if let NodeKind::Rule(v) = self.nodes[i].kind {
                if p == usize::MAX || self.nodes[p].kind != NodeKind::Forget(v) {
                    return fail(i, "rule node must sit below the forget of its vertex");
                }
            }
        }
        if let Some(v) = forgotten.iter().position(|f| !f) {
            return fail(v, "vertex never forgotten");
        }
        Ok(())
    }
}

fn same_plus(big: &[usize], small: &[usize], v: usize) -> bool {
    big.len() == small.len() + 1 && small.binary_search(&v).is_err() && big.iter().filter(|&&x| x != v).eq(small.iter())
}

struct NiceBuilder {
    nodes: Vec<NiceNode>,
}

impl NiceBuilder {
    fn push(&mut self, kind: NodeKind, bag: Vec<usize>, children: Vec<usize>) -> usize {
        self.nodes.push(NiceNode { kind, bag, children });
        self.nodes.len() - 1
    }

    fn forget_all(&mut self, mut top: usize, drop: &[usize]) -> usize {
        for &v in drop {
            let bag = self.nodes[top].bag.clone();
            let rule = self.push(NodeKind::Rule(v), bag.clone(), vec![top]);
            let smaller: Vec<usize> = bag.into_iter().filter(|&x| x != v).collect();
            top = self.push(NodeKind::Forget(v), smaller, vec![rule]);
        }
        top
    }

    fn introduce_all(&mut self, mut top: usize, add: &[usize]) -> usize {
        for &v in add {
            let mut bag = self.nodes[top].bag.clone();
            let at = bag.binary_search(&v).unwrap_err();
            bag.insert(at, v);
            top = self.push(NodeKind::Introduce(v), bag, vec![top]);
        }
        top
    }
}

/// Converts a valid decomposition into nice form rooted at bag 0. Every bag
/// of the result is a subset of an input bag.
pub fn make_nice(g: &Graph, td: &TreeDecomposition) -> Result<NiceTd, TdViolation> {
    validate_td(g, td)?;
    let mut b = NiceBuilder { nodes: Vec::new() };
    if td.bags.is_empty() {
        b.push(NodeKind::Leaf, Vec::new(), Vec::new());
        return Ok(NiceTd { nodes: b.nodes });
    }
    let adj = td.adjacency();
    let nb = td.bags.len();
    let mut parent = vec![usize::MAX; nb];
    let mut order = Vec::with_capacity(nb);
    let mut stack = vec![0];
    parent[0] = 0;
    while let Some(t) = stack.pop() {
        order.push(t);
        for &c in &adj[t] {
            if parent[c] == usize::MAX {
                parent[c] = t;
                stack.push(c);
            }
        }
    }
    let mut top = vec![usize::MAX; nb];
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); nb];
    for &t in order.iter().skip(1) {
        children[parent[t]].push(t);
    }
    for &t in order.iter().rev() {
        let bag = &td.bags[t];
        let mut branches = Vec::new();
        for &c in &children[t] {
            let cbag = &td.bags[c];
            let drop: Vec<usize> = cbag.iter().copied().filter(|v| bag.binary_search(v).is_err()).collect();
            let add: Vec<usize> = bag.iter().copied().filter(|v| cbag.binary_search(v).is_err()).collect();
            let x = b.forget_all(top[c], &drop);
            branches.push(b.introduce_all(x, &add));
        }
        if branches.is_empty() {
            let leaf = b.push(NodeKind::Leaf, Vec::new(), Vec::new());
            branches.push(b.introduce_all(leaf, bag));
        }
        let mut acc = branches[0];
        for &other in &branches[1..] {
            acc = b.push(NodeKind::Join, bag.clone(), vec![acc, other]);
        }
        top[t] = acc;
    }
    let root_bag = td.bags[0].clone();
    b.forget_all(top[0], &root_bag);
    let nice = NiceTd { nodes: b.nodes };
    debug_assert_eq!(nice.check(g), Ok(()));
    Ok(nice)
}

/// Counts of each node kind, for diagnostics.
pub fn node_kind_counts(nice: &NiceTd) -> HashMap<&'static str, usize> {
    let mut counts = HashMap::new();
    for t in &nice.nodes {
        let name = match t.kind {
            NodeKind::Leaf => "leaf",
            NodeKind::Introduce(_) => "introduce",
            NodeKind::Rule(_) => "rule",
            NodeKind::Forget(_) => "forget",
            NodeKind::Join => "join",
        };
        *counts.entry(name).or_insert(0) += 1;
    }
    counts
}
