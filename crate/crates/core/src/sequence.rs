//! Dominating-type vertex sequences, hypergraph covering sequences and the
//! conversions between sequences and forcing sets.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use hashbrown::HashMap;

use crate::graph::{Graph, GraphError, Hypergraph, VertexSet};
use crate::rules::{replay, ReplayError, Rule, RuleApplication, RuleSet};
use crate::GuardExceeded;

/// Default vertex limit for [`max_sequence_bruteforce`].
pub const DEFAULT_SEQUENCE_LIMIT: usize = 16;

/// Hard ceiling of the bitmask search engine.
pub const MASK_LIMIT: usize = 128;

/// Which neighborhoods a sequence position footprints from and blocks for
/// later positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SequenceVariant {
    /// Dominating sequence: closed targets, closed blockers.
    Gd,
    /// Total dominating sequence: open targets, open blockers.
    Tgd,
    /// Z-sequence: open targets, closed blockers.
    Z,
    /// L-sequence: closed targets, open blockers.
    L,
    /// L-sequence whose footprints lie among the listed vertices so far.
    LocalL,
}

impl SequenceVariant {
    pub const ALL: [SequenceVariant; 5] =
        [SequenceVariant::Gd, SequenceVariant::Tgd, SequenceVariant::Z, SequenceVariant::L, SequenceVariant::LocalL];

    pub fn closed_target(self) -> bool {
        matches!(self, SequenceVariant::Gd | SequenceVariant::L | SequenceVariant::LocalL)
    }

    pub fn closed_blocker(self) -> bool {
        matches!(self, SequenceVariant::Gd | SequenceVariant::Z)
    }

    pub fn is_local(self) -> bool {
        self == SequenceVariant::LocalL
    }

    /// The rule set whose minimum forcing sets are dual to this variant.
    pub fn rule_set(self) -> RuleSet {
        match self {
            SequenceVariant::Z => RuleSet::Z,
            SequenceVariant::Gd => RuleSet::ZD,
            SequenceVariant::Tgd => RuleSet::ZT,
            SequenceVariant::L => RuleSet::ZTD,
            SequenceVariant::LocalL => RuleSet::TD,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SequenceVariant::Gd => "gd",
            SequenceVariant::Tgd => "tgd",
            SequenceVariant::Z => "z",
            SequenceVariant::L => "l",
            SequenceVariant::LocalL => "locall",
        }
    }

    pub fn parse(s: &str) -> Option<SequenceVariant> {
        SequenceVariant::ALL.into_iter().find(|v| v.name().eq_ignore_ascii_case(s))
    }
}

impl fmt::Display for SequenceVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SequenceError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("vertex {0} appears twice")]
    Duplicate(usize),
    #[error("vertex {0} is outside the allowed side")]
    OutsideRestriction(usize),
    #[error("position {position} (vertex {vertex}) footprints nothing")]
    NoFootprint { position: usize, vertex: usize },
    #[error("edge index {index} out of range ({edges} edges)")]
    EdgeOutOfRange { index: usize, edges: usize },
    #[error("edge index {0} appears twice")]
    DuplicateEdge(usize),
    #[error("trace does not replay: {0}")]
    Replay(#[from] ReplayError),
    #[error(transparent)]
    Guard(#[from] GuardExceeded),
}

/// Per position, the full set of vertices footprinted there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FootprintWitness {
    pub footprints: Vec<VertexSet>,
}

impl FootprintWitness {
    /// Deterministic single witness per position: the vertex itself when it
    /// footprints itself, else the lowest footprinted id.
    pub fn chosen(&self, seq: &[usize]) -> Vec<usize> {
        self.footprints.iter().zip(seq).map(|(fp, &v)| if fp.contains(v) { v } else { fp.first().unwrap() }).collect()
    }
}

fn bracket(g: &Graph, v: usize, closed: bool) -> VertexSet {
    if closed {
        g.closed_neighborhood(v)
    } else {
        g.open_neighborhood(v)
    }
}

pub fn verify_sequence(g: &Graph, seq: &[usize], var: SequenceVariant) -> Result<FootprintWitness, SequenceError> {
    verify_sequence_restricted(g, seq, var, None)
}

/// Checks that every position footprints a vertex; with `restrict_to` every
/// member must also lie in that set (one-sided sequences).
pub fn verify_sequence_restricted(
    g: &Graph,
    seq: &[usize],
    var: SequenceVariant,
    restrict_to: Option<&VertexSet>,
) -> Result<FootprintWitness, SequenceError> {
    g.require_no_isolated()?;
    let n = g.n();
    let mut seen = VertexSet::new(n);
    for &v in seq {
        if v >= n {
            return Err(GraphError::VertexOutOfRange { vertex: v, n }.into());
        }
        if !seen.insert(v) {
            return Err(SequenceError::Duplicate(v));
        }
        if restrict_to.is_some_and(|r| !r.contains(v)) {
            return Err(SequenceError::OutsideRestriction(v));
        }
    }
    let mut blocked = VertexSet::new(n);
    let mut listed = VertexSet::new(n);
    let mut footprints = Vec::with_capacity(seq.len());
    for (position, &v) in seq.iter().enumerate() {
        listed.insert(v);
        let mut fp = bracket(g, v, var.closed_target());
        fp.difference_with(&blocked);
        if var.is_local() {
            fp.intersect_with(&listed);
        }
        if fp.is_empty() {
            return Err(SequenceError::NoFootprint { position, vertex: v });
        }
        footprints.push(fp);
        blocked.union_with(&bracket(g, v, var.closed_blocker()));
    }
    Ok(FootprintWitness { footprints })
}

/// Checks that every listed edge contains an element outside all earlier ones.
pub fn verify_covering_sequence(h: &Hypergraph, idx: &[usize]) -> Result<Vec<VertexSet>, SequenceError> {
    let edges = h.edges();
    let mut seen = vec![false; edges.len()];
    for &i in idx {
        if i >= edges.len() {
            return Err(SequenceError::EdgeOutOfRange { index: i, edges: edges.len() });
        }
        if core::mem::replace(&mut seen[i], true) {
            return Err(SequenceError::DuplicateEdge(i));
        }
    }
    let mut covered = VertexSet::new(h.vertex_count());
    let mut out = Vec::with_capacity(idx.len());
    for (position, &i) in idx.iter().enumerate() {
        let fp = edges[i].difference(&covered);
        if fp.is_empty() {
            return Err(SequenceError::NoFootprint { position, vertex: i });
        }
        covered.union_with(&edges[i]);
        out.push(fp);
    }
    Ok(out)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    /// Used items can never footprint again, so the covered set is the state.
    Plain,
    /// Closed targets with open blockers: an item may still footprint itself.
    SelfFootprint,
    /// As above, footprints restricted to listed vertices.
    Local,
}

/// Bitmask search over sequences of items with target and blocker masks.
struct SeqEngine {
    ids: Vec<usize>,
    target: Vec<u128>,
    blocker: Vec<u128>,
    own: Vec<u128>,
    mode: Mode,
}

type Key = (u128, u128);

impl SeqEngine {
    fn for_graph(g: &Graph, var: SequenceVariant, restrict_to: Option<&VertexSet>) -> SeqEngine {
        let mask = |s: VertexSet| s.iter().fold(0u128, |m, v| m | 1 << v);
        let ids: Vec<usize> = (0..g.n()).filter(|&v| restrict_to.is_none_or(|r| r.contains(v))).collect();
        let mode = match var {
            SequenceVariant::L => Mode::SelfFootprint,
            SequenceVariant::LocalL => Mode::Local,
            _ => Mode::Plain,
        };
        SeqEngine {
            target: ids.iter().map(|&v| mask(bracket(g, v, var.closed_target()))).collect(),
            blocker: ids.iter().map(|&v| mask(bracket(g, v, var.closed_blocker()))).collect(),
            own: ids.iter().map(|&v| 1u128 << v).collect(),
            ids,
            mode,
        }
    }

    fn for_hypergraph(h: &Hypergraph) -> SeqEngine {
        let masks: Vec<u128> = h.edges().iter().map(|e| e.iter().fold(0u128, |m, v| m | 1 << v)).collect();
        SeqEngine {
            ids: (0..masks.len()).collect(),
            target: masks.clone(),
            blocker: masks,
            own: vec![0; h.edges().len()],
            mode: Mode::Plain,
        }
    }

    fn key(&self, covered: u128, used: u128) -> Key {
        match self.mode {
            Mode::Plain => (covered, 0),
            Mode::SelfFootprint => (covered, used & !covered),
            Mode::Local => (covered, used),
        }
    }

    fn can_extend(&self, i: usize, covered: u128, used: u128) -> bool {
        if used & self.own[i] != 0 && self.mode != Mode::Plain {
            return false;
        }
        let fp = match self.mode {
            Mode::Local => self.target[i] & (used | self.own[i]) & !covered,
            _ => self.target[i] & !covered,
        };
        fp != 0
    }

    /// Upper bound on how many more items can be appended.
    fn bound(&self, covered: u128, used: u128) -> usize {
        let mut reach = 0u128;
        let mut avail = 0usize;
        let mut selfish = 0u128;
        for i in 0..self.ids.len() {
            if self.can_extend_loose(i, covered, used) {
                avail += 1;
                reach |= self.target[i] & !covered;
                if self.mode != Mode::Plain {
                    selfish |= self.own[i] & !covered;
                }
            }
        }
        // Each step either covers a new vertex or (L variants) lists an
        // uncovered vertex that footprints itself.
        let potential = match self.mode {
            Mode::Plain => reach.count_ones() as usize,
            _ => (reach.count_ones() + selfish.count_ones()) as usize,
        };
        avail.min(potential)
    }

    // Like can_extend but ignores the locality restriction, which can be
    // lifted by later steps.
    fn can_extend_loose(&self, i: usize, covered: u128, used: u128) -> bool {
        if used & self.own[i] != 0 && self.mode != Mode::Plain {
            return false;
        }
        self.target[i] & !covered != 0
    }

    fn max(&self) -> Vec<usize> {
        let mut memo: HashMap<Key, (u8, u8)> = HashMap::new();
        self.max_rec(0, 0, &mut memo);
        let (mut covered, mut used) = (0u128, 0u128);
        let mut out = Vec::new();
        while let Some(&(len, choice)) = memo.get(&self.key(covered, used)) {
            if len == 0 {
                break;
            }
            let i = choice as usize;
            out.push(self.ids[i]);
            covered |= self.blocker[i];
            used |= self.own[i];
        }
        out
    }

    fn max_rec(&self, covered: u128, used: u128, memo: &mut HashMap<Key, (u8, u8)>) -> u8 {
        let key = self.key(covered, used);
        if let Some(&(len, _)) = memo.get(&key) {
            return len;
        }
        let mut best = (0u8, 0u8);
        for i in 0..self.ids.len() {
            if self.can_extend(i, covered, used) {
                let len = 1 + self.max_rec(covered | self.blocker[i], used | self.own[i], memo);
                if len > best.0 {
                    best = (len, i as u8);
                }
            }
        }
        memo.insert(key, best);
        best.0
    }

    /// A sequence of length at least `need`, if one exists.
    fn find(&self, need: usize) -> Option<Vec<usize>> {
        let mut failed: HashMap<Key, usize> = HashMap::new();
        let mut path = Vec::new();
        self.find_rec(0, 0, need, &mut failed, &mut path).then(|| path.iter().map(|&i| self.ids[i]).collect())
    }

    fn find_rec(
        &self,
        covered: u128,
        used: u128,
        need: usize,
        failed: &mut HashMap<Key, usize>,
        path: &mut Vec<usize>,
    ) -> bool {
        if need == 0 {
            return true;
        }
        let key = self.key(covered, used);
        if failed.get(&key).is_some_and(|&f| f <= need) {
            return false;
        }
        if self.bound(covered, used) >= need {
            for i in 0..self.ids.len() {
                if self.can_extend(i, covered, used) {
                    path.push(i);
                    if self.find_rec(covered | self.blocker[i], used | self.own[i], need - 1, failed, path) {
                        return true;
                    }
                    path.pop();
                }
            }
        }
        let entry = failed.entry(key).or_insert(need);
        *entry = (*entry).min(need);
        false
    }
}

fn check_limits(g: &Graph, limit: usize) -> Result<(), SequenceError> {
    let limit = limit.min(MASK_LIMIT);
    if g.n() > limit {
        return Err(GuardExceeded { size: g.n(), limit }.into());
    }
    g.require_no_isolated()?;
    Ok(())
}

/// Longest sequence of the variant, optionally confined to `restrict_to`.
pub fn max_sequence_bruteforce(
    g: &Graph,
    var: SequenceVariant,
    restrict_to: Option<&VertexSet>,
) -> Result<Vec<usize>, SequenceError> {
    max_sequence_bruteforce_with_limit(g, var, restrict_to, DEFAULT_SEQUENCE_LIMIT)
}

pub fn max_sequence_bruteforce_with_limit(
    g: &Graph,
    var: SequenceVariant,
    restrict_to: Option<&VertexSet>,
    limit: usize,
) -> Result<Vec<usize>, SequenceError> {
    check_limits(g, limit)?;
    Ok(SeqEngine::for_graph(g, var, restrict_to).max())
}

/// Searches for a sequence of length at least `need` with bound pruning.
/// Scales to larger graphs than the full maximization when `need` is close
/// to the maximum.
pub fn find_sequence_of_length(
    g: &Graph,
    var: SequenceVariant,
    restrict_to: Option<&VertexSet>,
    need: usize,
    limit: usize,
) -> Result<Option<Vec<usize>>, SequenceError> {
    check_limits(g, limit)?;
    Ok(SeqEngine::for_graph(g, var, restrict_to).find(need))
}

/// Longest covering sequence, as edge indices.
pub fn max_covering_bruteforce(h: &Hypergraph, limit: usize) -> Result<Vec<usize>, SequenceError> {
    let limit = limit.min(MASK_LIMIT);
    if h.vertex_count() > MASK_LIMIT || h.edges().len() > limit {
        return Err(GuardExceeded { size: h.edges().len().max(h.vertex_count()), limit }.into());
    }
    Ok(SeqEngine::for_hypergraph(h).max())
}

/// Turns a valid sequence into a forcing set `V \ seq` for the dual rule set
/// and a trace coloring the rest, applied from the last position backwards.
pub fn sequence_to_forcing(
    g: &Graph,
    seq: &[usize],
    var: SequenceVariant,
) -> Result<(VertexSet, Vec<RuleApplication>), SequenceError> {
    let witness = verify_sequence(g, seq, var)?;
    let n = g.n();
    let chosen = witness.chosen(seq);
    let mut position = vec![usize::MAX; n];
    for (i, &v) in seq.iter().enumerate() {
        position[v] = i;
    }
    let s = VertexSet::from_iter(n, seq.iter().copied()).complement();
    let mut trace = Vec::with_capacity(seq.len());
    for i in (0..seq.len()).rev() {
        let (v, u) = (seq[i], chosen[i]);
        let r = if u == v {
            RuleApplication::d(v)
        } else if position[u] < i {
            RuleApplication { kind: Rule::T, actor: u, target: v }
        } else {
            RuleApplication::z(u, v)
        };
        trace.push(r);
    }
    debug_assert!(replay(g, &s, &trace, var.rule_set()).is_ok());
    Ok((s, trace))
}

/// Reads a forcing trace backwards as a sequence of the dual variant.
pub fn forcing_trace_to_sequence(
    g: &Graph,
    s: &VertexSet,
    trace: &[RuleApplication],
    var: SequenceVariant,
) -> Result<Vec<usize>, SequenceError> {
    replay(g, s, trace, var.rule_set())?;
    let seq: Vec<usize> = trace.iter().rev().map(|r| r.target).collect();
    verify_sequence(g, &seq, var)?;
    Ok(seq)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use crate::rules::min_forcing_bruteforce;

    #[test]
    fn k2_dominating() {
        let g = path(2);
        let w = verify_sequence(&g, &[0], SequenceVariant::Gd).unwrap();
        assert_eq!(w.footprints[0].to_vec(), vec![0, 1]);
        let (s, trace) = sequence_to_forcing(&g, &[0], SequenceVariant::Gd).unwrap();
        assert_eq!(s.to_vec(), vec![1]);
        assert_eq!(trace, vec![RuleApplication::d(0)]);
    }

    #[test]
    fn complete_graph_maxima() {
        for n in 2..7 {
            let g = complete(n);
            assert_eq!(max_sequence_bruteforce(&g, SequenceVariant::Gd, None).unwrap().len(), 1);
            assert_eq!(max_sequence_bruteforce(&g, SequenceVariant::Tgd, None).unwrap().len(), 2);
            assert_eq!(max_sequence_bruteforce(&g, SequenceVariant::Z, None).unwrap().len(), 1);
        }
    }

    #[test]
    fn isolated_vertices_are_rejected() {
        let g = Graph::empty(2);
        assert!(matches!(verify_sequence(&g, &[0], SequenceVariant::Gd), Err(SequenceError::Graph(_))));
        assert!(max_sequence_bruteforce(&g, SequenceVariant::Gd, None).is_err());
    }

    #[test]
    fn duplicates_are_rejected() {
        let g = path(3);
        assert_eq!(verify_sequence(&g, &[0, 0], SequenceVariant::L), Err(SequenceError::Duplicate(0)));
    }

    #[test]
    fn p3_z_sequence_round_trip() {
        let g = path(3);
        let (s, trace) = sequence_to_forcing(&g, &[0, 1], SequenceVariant::Z).unwrap();
        assert_eq!(s.to_vec(), vec![2]);
        assert_eq!(trace, vec![RuleApplication::z(2, 1), RuleApplication::z(1, 0)]);
        let back = forcing_trace_to_sequence(&g, &s, &trace, SequenceVariant::Z).unwrap();
        assert_eq!(back, vec![0, 1]);
    }

    #[test]
    fn covering_sequences() {
        let h = Hypergraph::new(2, vec![vec![0], vec![0, 1]]).unwrap();
        assert!(verify_covering_sequence(&h, &[0, 1]).is_ok());
        let h = Hypergraph::new(2, vec![vec![0, 1], vec![0]]).unwrap();
        assert_eq!(verify_covering_sequence(&h, &[0, 1]), Err(SequenceError::NoFootprint { position: 1, vertex: 1 }));
        let h = Hypergraph::new(3, vec![vec![0], vec![1], vec![2]]).unwrap();
        assert_eq!(max_covering_bruteforce(&h, 20).unwrap().len(), 3);
        let h = Hypergraph::new(3, vec![vec![0, 1, 2]; 3]).unwrap();
        assert_eq!(max_covering_bruteforce(&h, 20).unwrap().len(), 1);
    }

    #[test]
    fn duality_on_small_families() {
        for g in [path(5), cycle(5), complete(4), star(4), petersen()] {
            for var in SequenceVariant::ALL {
                let seq = max_sequence_bruteforce(&g, var, None).unwrap();
                verify_sequence(&g, &seq, var).unwrap();
                let k = min_forcing_bruteforce(&g, var.rule_set()).unwrap().k;
                assert_eq!(seq.len() + k, g.n(), "{var} on {g:?}");
                let (s, trace) = sequence_to_forcing(&g, &seq, var).unwrap();
                replay(&g, &s, &trace, var.rule_set()).unwrap();
            }
        }
    }

    #[test]
    fn find_agrees_with_max() {
        let g = petersen();
        for var in SequenceVariant::ALL {
            let best = max_sequence_bruteforce(&g, var, None).unwrap().len();
            let hit = find_sequence_of_length(&g, var, None, best, 16).unwrap().unwrap();
            verify_sequence(&g, &hit, var).unwrap();
            assert!(hit.len() >= best);
            assert!(find_sequence_of_length(&g, var, None, best + 1, 16).unwrap().is_none());
        }
    }
}
