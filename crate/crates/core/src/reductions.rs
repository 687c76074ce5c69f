//! Instance generators for the hardness reductions between Multicolored
//! Clique, the Grundy domination variants, one-sided Grundy total domination
//! and Grundy covering, plus the leaf corona.
//!
//! Every generator returns a plain [`Graph`]; generated vertices carry labels
//! naming their gadget and indices (1-based, as in the usual notation).

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Bipartition, Graph, GraphBuilder, GraphError, Hypergraph, VertexSet};
use crate::sequence::{find_sequence_of_length, SequenceError, SequenceVariant};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ReductionError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("need at least two color classes, got {0}")]
    TooFewClasses(usize),
    #[error("color classes have different sizes")]
    UnequalClasses,
    #[error("vertex {0} is missing from the classes or listed twice")]
    NotAPartition(usize),
    #[error("class {class} contains the edge {u}-{v}")]
    ClassNotIndependent { class: usize, u: usize, v: usize },
    #[error("target length must be positive for the {0} lift")]
    ZeroTarget(SequenceVariant),
    #[error("no co-bipartite lift to {0} sequences")]
    UnsupportedVariant(SequenceVariant),
}

/// Multicolored Clique instance: `classes[i][p]` is vertex `v^i_p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MccInstance {
    pub graph: Graph,
    pub classes: Vec<Vec<usize>>,
}

impl MccInstance {
    pub fn new(graph: Graph, classes: Vec<Vec<usize>>) -> Result<MccInstance, ReductionError> {
        let k = classes.len();
        if k < 2 {
            return Err(ReductionError::TooFewClasses(k));
        }
        if classes.iter().any(|c| c.len() != classes[0].len()) {
            return Err(ReductionError::UnequalClasses);
        }
        let n = graph.n();
        let mut owner = vec![usize::MAX; n];
        for (i, class) in classes.iter().enumerate() {
            for &v in class {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: v, n }.into());
                }
                if owner[v] != usize::MAX {
                    return Err(ReductionError::NotAPartition(v));
                }
                owner[v] = i;
            }
        }
        if let Some(v) = owner.iter().position(|&o| o == usize::MAX) {
            return Err(ReductionError::NotAPartition(v));
        }
        if let Some((u, v)) = graph.edges().find(|&(u, v)| owner[u] == owner[v]) {
            return Err(ReductionError::ClassNotIndependent { class: owner[u], u, v });
        }
        Ok(MccInstance { graph, classes })
    }

    pub fn k(&self) -> usize {
        self.classes.len()
    }

    pub fn q(&self) -> usize {
        self.classes[0].len()
    }

    /// Whether `v^i_p` and `v^j_r` are adjacent.
    pub fn cross_edge(&self, i: usize, p: usize, j: usize, r: usize) -> bool {
        self.graph.adjacent(self.classes[i][p], self.classes[j][r])
    }

    /// A multicolored clique as one index per class, by exhaustive search.
    pub fn find_clique(&self) -> Option<Vec<usize>> {
        let (k, q) = (self.k(), self.q());
        let mut pick = Vec::with_capacity(k);
        fn extend(inst: &MccInstance, pick: &mut Vec<usize>, k: usize, q: usize) -> bool {
            let i = pick.len();
            if i == k {
                return true;
            }
            for p in 0..q {
                if (0..i).all(|j| inst.cross_edge(j, pick[j], i, p)) {
                    pick.push(p);
                    if extend(inst, pick, k, q) {
                        return true;
                    }
                    pick.pop();
                }
            }
            false
        }
        extend(self, &mut pick, k, q).then_some(pick)
    }
}

/// One-sided Grundy total domination instance: is there a total dominating
/// sequence of side `A` of length at least `target`?
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OsgtdInstance {
    pub graph: Graph,
    pub sides: Bipartition,
    pub target: usize,
}

impl OsgtdInstance {
    pub fn new(graph: Graph, a: VertexSet, target: usize) -> Result<OsgtdInstance, ReductionError> {
        let sides = Bipartition::new(&graph, a)?;
        Ok(OsgtdInstance { graph, sides, target })
    }
}

/// Vertex ids of the gadgets built by [`mcc_to_osgtd`]; all indices 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MccLayout {
    pub alpha: usize,
    pub beta: usize,
    /// `x[i][p][a]`
    pub x: Vec<Vec<Vec<usize>>>,
    /// `y[i][a]`
    pub y: Vec<Vec<usize>>,
    /// `c[(i, j)][b]` for `i < j`
    pub c: BTreeMap<(usize, usize), Vec<usize>>,
    /// `w[(i, j, p, r)][b]` for `i < j` and every edge `v^i_p v^j_r`
    pub w: BTreeMap<(usize, usize, usize, usize), Vec<usize>>,
    pub f: usize,
    pub g: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MccReduction {
    pub instance: OsgtdInstance,
    pub layout: MccLayout,
}

/// `α·k + β·C(k,2) + 1` with `α = β = 2k + 1`.
pub fn mcc_target(k: usize) -> usize {
    let alpha = 2 * k + 1;
    alpha * k + alpha * (k * (k - 1) / 2) + 1
}

/// Builds the selection, verification and blocker gadgets. `f` joins side
/// `A` with the selection and verification vertices; `g`, `Y` and the edge
/// vertices form side `B`.
pub fn mcc_to_osgtd(inst: &MccInstance) -> MccReduction {
    let (k, q) = (inst.k(), inst.q());
    let alpha = 2 * k + 1;
    let beta = alpha;
    let mut gb = GraphBuilder::new(0);
    let x: Vec<Vec<Vec<usize>>> = (0..k)
        .map(|i| {
            (0..q)
                .map(|p| {
                    (0..alpha).map(|a| gb.add_labelled_vertex(format!("x[{},{},{}]", i + 1, p + 1, a + 1))).collect()
                })
                .collect()
        })
        .collect();
    let y: Vec<Vec<usize>> = (0..k)
        .map(|i| (0..alpha).map(|a| gb.add_labelled_vertex(format!("y[{},{}]", i + 1, a + 1))).collect())
        .collect();
    let mut c = BTreeMap::new();
    let mut w = BTreeMap::new();
    for i in 0..k {
        for j in i + 1..k {
            let cs: Vec<usize> =
                (0..beta).map(|b| gb.add_labelled_vertex(format!("c[{},{},{}]", i + 1, j + 1, b + 1))).collect();
            for p in 0..q {
                for r in 0..q {
                    if inst.cross_edge(i, p, j, r) {
                        let ws: Vec<usize> = (0..beta)
                            .map(|b| {
                                gb.add_labelled_vertex(format!("w[{},{},{},{},{}]", i + 1, j + 1, p + 1, r + 1, b + 1))
                            })
                            .collect();
                        w.insert((i, j, p, r), ws);
                    }
                }
            }
            c.insert((i, j), cs);
        }
    }
    let f = gb.add_labelled_vertex(String::from("f"));
    let g = gb.add_labelled_vertex(String::from("g"));
    let mut edge = |u: usize, v: usize| {
        gb.add_edge(u, v).expect("gadget ids are in range and distinct");
    };
    for i in 0..k {
        for p in 0..q {
            for a in 0..alpha {
                edge(x[i][p][a], y[i][a]);
            }
        }
    }
    edge(f, g);
    let all_y: Vec<usize> = y.iter().flatten().copied().collect();
    for &v in &all_y {
        edge(f, v);
    }
    for cs in c.values() {
        for &cv in cs {
            edge(cv, g);
            for &v in &all_y {
                edge(cv, v);
            }
        }
    }
    for (&(i, j, p, r), ws) in &w {
        let cs = &c[&(i, j)];
        for b in 0..beta {
            edge(cs[b], ws[b]);
            for t in 0..q {
                for a in 0..alpha {
                    if t != p {
                        edge(x[i][t][a], ws[b]);
                    }
                    if t != r {
                        edge(x[j][t][a], ws[b]);
                    }
                }
            }
        }
    }
    let graph = gb.build();
    let n = graph.n();
    let side_a = x.iter().flatten().flatten().copied().chain(c.values().flatten().copied()).chain([f]);
    let a = VertexSet::from_iter(n, side_a);
    let instance = OsgtdInstance::new(graph, a, mcc_target(k)).expect("gadget graph is bipartite");
    MccReduction { instance, layout: MccLayout { alpha, beta, x, y, c, w, f, g } }
}

/// First discrepancy found by [`audit_mcc`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("gadget audit failed: {0}")]
pub struct AuditFailure(pub String);

/// Re-derives the gadget graph from the vertex labels alone and compares
/// every adjacency, the gadget counts, the bipartition and the target.
pub fn audit_mcc(inst: &MccInstance, red: &MccReduction) -> Result<(), AuditFailure> {
    #[derive(Clone, Copy, PartialEq, Debug)]
    enum Role {
        X(usize, usize, usize),
        Y(usize, usize),
        C(usize, usize, usize),
        W(usize, usize, usize, usize, usize),
        F,
        G,
    }
    let fail = |s: String| Err(AuditFailure(s));
    let g = &red.instance.graph;
    let (k, q) = (inst.k(), inst.q());
    let alpha = 2 * k + 1;
    let n = g.n();
    let mut roles = Vec::with_capacity(n);
    for v in 0..n {
        let Some(label) = g.label(v) else { return fail(format!("vertex {v} has no label")) };
        let idx: Vec<usize> = label
            .trim_start_matches(|ch: char| ch.is_ascii_alphabetic())
            .trim_matches(|ch| ch == '[' || ch == ']')
            .split(',')
            .filter(|s| !s.is_empty())
            .filter_map(|s| s.parse::<usize>().ok().and_then(|x| x.checked_sub(1)))
            .collect();
        let role = match (label.as_bytes()[0], idx.as_slice()) {
            (b'x', &[i, p, a]) => Role::X(i, p, a),
            (b'y', &[i, a]) => Role::Y(i, a),
            (b'c', &[i, j, b]) => Role::C(i, j, b),
            (b'w', &[i, j, p, r, b]) => Role::W(i, j, p, r, b),
            (b'f', &[]) => Role::F,
            (b'g', &[]) => Role::G,
            _ => return fail(format!("unparsable label {label:?}")),
        };
        roles.push(role);
    }
    let count = |pred: &dyn Fn(&Role) -> bool| roles.iter().filter(|r| pred(r)).count();
    let pairs = k * (k - 1) / 2;
    let cross: usize = inst.graph.m();
    let expected = [
        ("selection", count(&|r| matches!(r, Role::X(..))), k * q * alpha),
        ("y", count(&|r| matches!(r, Role::Y(..))), k * alpha),
        ("verification", count(&|r| matches!(r, Role::C(..))), pairs * alpha),
        ("edge", count(&|r| matches!(r, Role::W(..))), cross * alpha),
        ("blocker", count(&|r| matches!(r, Role::F | Role::G)), 2),
    ];
    for (name, got, want) in expected {
        if got != want {
            return fail(format!("{got} {name} vertices, expected {want}"));
        }
    }
    for i in 0..k {
        for j in i + 1..k {
            let per_pair = count(&|r| matches!(*r, Role::C(a, b, _) if (a, b) == (i, j)));
            if per_pair != alpha {
                return fail(format!("class pair {{{i},{j}}} has {per_pair} verification gadgets"));
            }
        }
    }
    let should = |u: Role, v: Role| -> bool {
        use Role::*;
        match (u, v) {
            (X(i, _, a), Y(i2, a2)) => i == i2 && a == a2,
            (X(t, p, _), W(i, j, r, s, _)) => (t == i && p != r) || (t == j && p != s),
            (F, G) | (F, Y(..)) | (C(..), G) | (C(..), Y(..)) => true,
            (C(i, j, b), W(i2, j2, _, _, b2)) => (i, j, b) == (i2, j2, b2),
            _ => false,
        }
    };
    let canonical = |u: Role, v: Role| -> bool {
        // Put the side-A role first so `should` only sees one orientation.
        let a_first = |r: Role| matches!(r, Role::X(..) | Role::C(..) | Role::F);
        match (a_first(u), a_first(v)) {
            (true, false) => should(u, v),
            (false, true) => should(v, u),
            _ => false,
        }
    };
    let mut edges_expected = 0;
    for u in 0..n {
        for v in u + 1..n {
            let want = canonical(roles[u], roles[v]);
            edges_expected += usize::from(want);
            if g.adjacent(u, v) != want {
                return fail(format!("adjacency of {} and {} is {}", label(g, u), label(g, v), g.adjacent(u, v)));
            }
        }
    }
    if edges_expected != g.m() {
        return fail(format!("{} edges, expected {edges_expected}", g.m()));
    }
    for (i, class) in inst.classes.iter().enumerate() {
        for (p, &vp) in class.iter().enumerate() {
            for (j, other) in inst.classes.iter().enumerate().skip(i + 1) {
                for (r, &vr) in other.iter().enumerate() {
                    let present = roles.contains(&Role::W(i, j, p, r, 0));
                    if present != inst.graph.adjacent(vp, vr) {
                        return fail(format!(
                            "edge vertex for v^{}_{} v^{}_{} mismatches the source",
                            i + 1,
                            p + 1,
                            j + 1,
                            r + 1
                        ));
                    }
                }
            }
        }
    }
    for v in 0..n {
        let in_a = matches!(roles[v], Role::X(..) | Role::C(..) | Role::F);
        if red.instance.sides.a.contains(v) != in_a {
            return fail(format!("{} is on the wrong side", label(g, v)));
        }
    }
    if red.instance.target != mcc_target(k) {
        return fail(format!("target {} differs from {}", red.instance.target, mcc_target(k)));
    }
    Ok(())
}

fn label(g: &Graph, v: usize) -> String {
    g.label(v).map_or_else(|| format!("{v}"), String::from)
}

/// Outcome of [`certify_mcc`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MccCertificate {
    pub clique: Option<Vec<usize>>,
    /// A total dominating sequence of `A` of length at least the target.
    pub sequence: Option<Vec<usize>>,
}

impl MccCertificate {
    /// Both sides of the equivalence agree.
    pub fn sound(&self) -> bool {
        self.clique.is_some() == self.sequence.is_some()
    }
}

/// Decides both sides of the reduction exhaustively. `limit` caps the gadget
/// graph size handed to the sequence search.
pub fn certify_mcc(inst: &MccInstance, red: &MccReduction, limit: usize) -> Result<MccCertificate, SequenceError> {
    let OsgtdInstance { graph, sides, target } = &red.instance;
    let sequence = find_sequence_of_length(graph, SequenceVariant::Tgd, Some(&sides.a), *target, limit)?;
    Ok(MccCertificate { clique: inst.find_clique(), sequence })
}

fn bipartite_double(g: &Graph, diagonal: bool) -> Result<(Graph, VertexSet), ReductionError> {
    g.require_no_isolated()?;
    let n = g.n();
    let mut gb = GraphBuilder::new(0);
    for i in 0..n {
        gb.add_labelled_vertex(format!("a[{}]", i + 1));
    }
    for i in 0..n {
        gb.add_labelled_vertex(format!("b[{}]", i + 1));
    }
    for i in 0..n {
        if diagonal {
            gb.add_edge(i, n + i)?;
        }
        for &j in g.neighbors(i) {
            gb.add_edge(i, n + j)?;
        }
    }
    Ok((gb.build(), VertexSet::from_iter(2 * n, 0..n)))
}

/// Dominating sequences of `g` become total dominating sequences of side
/// `A = {a_i}` (ids `0..n`) with `a_i ~ b_j` (ids `n..2n`) iff `i = j` or
/// `u_i u_j` is an edge.
pub fn gd_to_osgtd(g: &Graph, k: usize) -> Result<OsgtdInstance, ReductionError> {
    let (graph, a) = bipartite_double(g, true)?;
    OsgtdInstance::new(graph, a, k)
}

/// As [`gd_to_osgtd`] without the edges `a_i b_i`.
pub fn tgd_to_osgtd(g: &Graph, k: usize) -> Result<OsgtdInstance, ReductionError> {
    let (graph, a) = bipartite_double(g, false)?;
    OsgtdInstance::new(graph, a, k)
}

/// L-sequences: `a_i` (ids `0..n`), `b^1_i` (ids `n..2n`) and `b^2_i` (ids
/// `2n..3n`). `a_i ~ b^1_i`, and every edge `u_i u_j` joins `a_i` to both
/// copies of `b_j` and `a_j` to both copies of `b_i`.
pub fn lgd_to_osgtd(g: &Graph, k: usize) -> Result<OsgtdInstance, ReductionError> {
    g.require_no_isolated()?;
    let n = g.n();
    let mut gb = GraphBuilder::new(0);
    for i in 0..n {
        gb.add_labelled_vertex(format!("a[{}]", i + 1));
    }
    for copy in 1..=2 {
        for i in 0..n {
            gb.add_labelled_vertex(format!("b{copy}[{}]", i + 1));
        }
    }
    for i in 0..n {
        gb.add_edge(i, n + i)?;
        for &j in g.neighbors(i) {
            gb.add_edge(i, n + j)?;
            gb.add_edge(i, 2 * n + j)?;
        }
    }
    OsgtdInstance::new(gb.build(), VertexSet::from_iter(3 * n, 0..n), k)
}

/// Co-bipartite lift: both sides become cliques. For total dominating and
/// L-sequences two fresh vertices join each side first (ids `n, n+1` on `A`,
/// `n+2, n+3` on `B`) and the target grows by four.
pub fn osgtd_to_cobipartite(inst: &OsgtdInstance, var: SequenceVariant) -> Result<(Graph, usize), ReductionError> {
    inst.graph.require_no_isolated()?;
    let padded = match var {
        SequenceVariant::Gd | SequenceVariant::Z => false,
        SequenceVariant::Tgd | SequenceVariant::L => true,
        SequenceVariant::LocalL => return Err(ReductionError::UnsupportedVariant(var)),
    };
    if padded && inst.target == 0 {
        return Err(ReductionError::ZeroTarget(var));
    }
    let n = inst.graph.n();
    let mut gb = GraphBuilder::new(n);
    for v in 0..n {
        if let Some(l) = inst.graph.label(v) {
            gb.set_label(v, String::from(l));
        }
    }
    let mut side_a = inst.sides.a.to_vec();
    let mut side_b = inst.sides.b.to_vec();
    if padded {
        for (name, side) in [("a'1", 0), ("a'2", 0), ("b'1", 1), ("b'2", 1)] {
            let v = gb.add_labelled_vertex(String::from(name));
            if side == 0 {
                side_a.push(v)
            } else {
                side_b.push(v)
            }
        }
    }
    for (u, v) in inst.graph.edges() {
        gb.add_edge(u, v)?;
    }
    for side in [&side_a, &side_b] {
        for (x, &u) in side.iter().enumerate() {
            for &v in &side[x + 1..] {
                gb.add_edge(u, v)?;
            }
        }
    }
    Ok((gb.build(), inst.target + if padded { 4 } else { 0 }))
}

/// Ground set `B` (renumbered in increasing id order) with one edge `N(v)`
/// per `v` in `A`, in increasing id order.
pub fn osgtd_to_hypergraph(inst: &OsgtdInstance) -> Hypergraph {
    let n = inst.graph.n();
    let mut index = vec![usize::MAX; n];
    for (i, v) in inst.sides.b.iter().enumerate() {
        index[v] = i;
    }
    let edges = inst.sides.a.iter().map(|v| inst.graph.neighbors(v).iter().map(|&w| index[w]).collect()).collect();
    Hypergraph::new(inst.sides.b.len(), edges).expect("neighbors of A lie in B")
}

/// Attaches a pendant leaf to every vertex; the leaf of `v` is `n + v`.
pub fn corona_with_leaves(g: &Graph) -> Graph {
    let n = g.n();
    Graph::from_edges(2 * n, g.edges().chain((0..n).map(|v| (v, n + v)))).expect("leaf ids are fresh")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use crate::rules::{min_forcing_bruteforce, RuleSet};
    use crate::sequence::max_sequence_bruteforce;

    fn mcc(k: usize, q: usize, edges: &[(usize, usize)]) -> MccInstance {
        let g = Graph::from_edges(k * q, edges.iter().copied()).unwrap();
        MccInstance::new(g, (0..k).map(|i| (i * q..(i + 1) * q).collect()).collect()).unwrap()
    }

    #[test]
    fn single_edge_sizes() {
        let inst = mcc(2, 1, &[(0, 1)]);
        let red = mcc_to_osgtd(&inst);
        assert_eq!(red.instance.target, 16);
        assert_eq!(red.instance.graph.n(), 32);
        assert_eq!(red.instance.sides.b.len(), 16);
        audit_mcc(&inst, &red).unwrap();
    }

    #[test]
    fn instance_validation() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(MccInstance::new(g.clone(), vec![vec![0, 1, 2]]), Err(ReductionError::TooFewClasses(1)));
        assert_eq!(MccInstance::new(g.clone(), vec![vec![0], vec![1, 2]]), Err(ReductionError::UnequalClasses));
        assert!(matches!(
            MccInstance::new(Graph::from_edges(4, [(0, 1)]).unwrap(), vec![vec![0, 1], vec![2, 3]]),
            Err(ReductionError::ClassNotIndependent { .. })
        ));
        assert_eq!(
            MccInstance::new(Graph::empty(4), vec![vec![0, 1], vec![1, 3]]),
            Err(ReductionError::NotAPartition(1))
        );
    }

    #[test]
    fn audit_catches_tampering() {
        let inst = mcc(2, 2, &[(0, 2), (1, 3)]);
        let red = mcc_to_osgtd(&inst);
        audit_mcc(&inst, &red).unwrap();
        let l = &red.layout;
        let extra = (l.x[0][0][0], l.w[&(0, 1, 0, 0)][0]);
        let mut tampered = red.clone();
        let edges = red.instance.graph.edges().chain([extra]);
        let mut gb = GraphBuilder::new(red.instance.graph.n());
        for v in 0..red.instance.graph.n() {
            gb.set_label(v, String::from(red.instance.graph.label(v).unwrap()));
        }
        for (u, v) in edges {
            gb.add_edge(u, v).unwrap();
        }
        tampered.instance.graph = gb.build();
        assert!(audit_mcc(&inst, &tampered).is_err());
    }

    #[test]
    fn k2_q1_soundness() {
        for edges in [&[(0, 1)][..], &[][..]] {
            let inst = mcc(2, 1, edges);
            let red = mcc_to_osgtd(&inst);
            let cert = certify_mcc(&inst, &red, 64).unwrap();
            assert!(cert.sound(), "{edges:?}");
            assert_eq!(cert.clique.is_some(), !edges.is_empty());
        }
    }

    #[test]
    fn k2_gd_lift() {
        let inst = gd_to_osgtd(&complete(2), 1).unwrap();
        assert_eq!(inst.graph.m(), 4);
        let best = max_sequence_bruteforce(&inst.graph, SequenceVariant::Tgd, Some(&inst.sides.a)).unwrap();
        assert_eq!(best.len(), 1);
        let inst = tgd_to_osgtd(&complete(2), 2).unwrap();
        assert_eq!(inst.graph.edges().collect::<Vec<_>>(), vec![(0, 3), (1, 2)]);
    }

    #[test]
    fn lgd_lift_of_p3() {
        let inst = lgd_to_osgtd(&path(3), 1).unwrap();
        assert_eq!((inst.sides.a.len(), inst.sides.b.len()), (3, 6));
        let one_sided = max_sequence_bruteforce(&inst.graph, SequenceVariant::Tgd, Some(&inst.sides.a)).unwrap();
        let direct = max_sequence_bruteforce(&path(3), SequenceVariant::L, None).unwrap();
        assert_eq!(one_sided.len(), direct.len());
    }

    #[test]
    fn cobipartite_guards() {
        let inst = OsgtdInstance::new(complete(2), VertexSet::from_iter(2, [0]), 0).unwrap();
        assert_eq!(
            osgtd_to_cobipartite(&inst, SequenceVariant::Tgd),
            Err(ReductionError::ZeroTarget(SequenceVariant::Tgd))
        );
        assert_eq!(osgtd_to_cobipartite(&inst, SequenceVariant::Gd).unwrap().1, 0);
        let (g, k) = osgtd_to_cobipartite(&OsgtdInstance { target: 1, ..inst }, SequenceVariant::L).unwrap();
        assert_eq!((g.n(), g.m(), k), (6, 1 + 3 + 3, 5));
    }

    #[test]
    fn hypergraph_of_k2() {
        let inst = OsgtdInstance::new(complete(2), VertexSet::from_iter(2, [0]), 1).unwrap();
        let h = osgtd_to_hypergraph(&inst);
        assert_eq!(h.vertex_count(), 1);
        assert_eq!(h.edges().len(), 1);
        assert_eq!(h.edges()[0].to_vec(), vec![0]);
    }

    #[test]
    fn corona_of_triangle() {
        assert_eq!(corona_with_leaves(&Graph::empty(1)), complete(2));
        let c = corona_with_leaves(&cycle(3));
        assert_eq!((c.n(), c.m()), (6, 6));
        assert_eq!(min_forcing_bruteforce(&c, RuleSet::ZT).unwrap().k, 0);
        assert_eq!(min_forcing_bruteforce(&c, RuleSet::TD).unwrap().k, 0);
    }
}
