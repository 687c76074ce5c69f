//! The Z, T and D color-change rules, closures, forcing-set verification and
//! exhaustive minimum forcing sets.

use alloc::collections::BinaryHeap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;
use core::fmt;

use hashbrown::HashSet;

use crate::graph::{Graph, VertexSet};
use crate::GuardExceeded;

/// Default cap on blue sets visited by the order search when T is enabled.
pub const DEFAULT_SEARCH_BUDGET: usize = 1 << 22;

/// Default vertex limit for [`min_forcing_bruteforce`].
pub const DEFAULT_BRUTEFORCE_LIMIT: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rule {
    Z,
    T,
    D,
}

impl Rule {
    pub const ALL: [Rule; 3] = [Rule::Z, Rule::T, Rule::D];

    pub fn letter(self) -> char {
        match self {
            Rule::Z => 'Z',
            Rule::T => 'T',
            Rule::D => 'D',
        }
    }

    pub fn from_letter(c: char) -> Option<Rule> {
        match c.to_ascii_uppercase() {
            'Z' => Some(Rule::Z),
            'T' => Some(Rule::T),
            'D' => Some(Rule::D),
            _ => None,
        }
    }

    fn bit(self) -> u8 {
        1 << self as u8
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A non-empty subset of {Z, T, D}.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct RuleSet(u8);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RuleSetError {
    #[error("empty rule set")]
    Empty,
    #[error("unknown rule letter {0:?}")]
    UnknownLetter(char),
}

impl RuleSet {
    pub const Z: RuleSet = RuleSet(1);
    pub const ZT: RuleSet = RuleSet(3);
    pub const ZD: RuleSet = RuleSet(5);
    pub const ZTD: RuleSet = RuleSet(7);
    pub const T: RuleSet = RuleSet(2);
    pub const D: RuleSet = RuleSet(4);
    pub const TD: RuleSet = RuleSet(6);

    pub fn new(rules: &[Rule]) -> Result<RuleSet, RuleSetError> {
        let bits = rules.iter().fold(0, |acc, r| acc | r.bit());
        if bits == 0 {
            Err(RuleSetError::Empty)
        } else {
            Ok(RuleSet(bits))
        }
    }

    /// Parses letters such as `"zt"` or `"ZTD"`; order and repeats are ignored.
    pub fn parse(s: &str) -> Result<RuleSet, RuleSetError> {
        let mut rules = Vec::new();
        for c in s.chars() {
            rules.push(Rule::from_letter(c).ok_or(RuleSetError::UnknownLetter(c))?);
        }
        RuleSet::new(&rules)
    }

    /// All seven non-empty rule sets.
    pub fn all() -> impl Iterator<Item = RuleSet> {
        (1u8..8).map(RuleSet)
    }

    #[inline]
    pub fn contains(self, r: Rule) -> bool {
        self.0 & r.bit() != 0
    }

    pub fn iter(self) -> impl Iterator<Item = Rule> {
        Rule::ALL.into_iter().filter(move |&r| self.contains(r))
    }

    pub fn is_subset(self, other: RuleSet) -> bool {
        self.0 & !other.0 == 0
    }
}

impl fmt::Display for RuleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in self.iter() {
            write!(f, "{}", r.letter().to_ascii_lowercase())?;
        }
        Ok(())
    }
}

impl fmt::Debug for RuleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RuleSet({self})")
    }
}

/// One rule step `actor -> target`; for D the two coincide.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RuleApplication {
    pub kind: Rule,
    pub actor: usize,
    pub target: usize,
}

impl RuleApplication {
    pub fn z(actor: usize, target: usize) -> Self {
        RuleApplication { kind: Rule::Z, actor, target }
    }

    pub fn t(actor: usize, target: usize) -> Self {
        RuleApplication { kind: Rule::T, actor, target }
    }

    pub fn d(v: usize) -> Self {
        RuleApplication { kind: Rule::D, actor: v, target: v }
    }
}

impl fmt::Display for RuleApplication {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.kind, self.actor, self.target)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RuleError {
    #[error("rule {rule} is not in the rule set")]
    NotInRuleSet { rule: RuleApplication },
    #[error("rule {rule} is not applicable: {reason}")]
    Inapplicable { rule: RuleApplication, reason: &'static str },
    #[error("vertex {0} out of range")]
    OutOfRange(usize),
}

/// Blue/white state of a graph.
#[derive(Clone)]
pub struct Coloring<'g> {
    g: &'g Graph,
    blue: VertexSet,
    white_nbrs: Vec<u32>,
}

impl fmt::Debug for Coloring<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Coloring").field("blue", &self.blue).finish()
    }
}

impl<'g> Coloring<'g> {
    pub fn new(g: &'g Graph, blue: VertexSet) -> Coloring<'g> {
        assert_eq!(blue.universe(), g.n(), "coloring universe must match the graph");
        let white_nbrs =
            (0..g.n()).map(|v| g.neighbors(v).iter().filter(|&&w| !blue.contains(w)).count() as u32).collect();
        Coloring { g, blue, white_nbrs }
    }

    pub fn all_white(g: &'g Graph) -> Coloring<'g> {
        Coloring::new(g, VertexSet::new(g.n()))
    }

    pub fn graph(&self) -> &'g Graph {
        self.g
    }

    pub fn blue(&self) -> &VertexSet {
        &self.blue
    }

    pub fn into_blue(self) -> VertexSet {
        self.blue
    }

    pub fn is_blue(&self, v: usize) -> bool {
        self.blue.contains(v)
    }

    pub fn is_all_blue(&self) -> bool {
        self.blue.is_full()
    }

    pub fn white_neighbor_count(&self, v: usize) -> usize {
        self.white_nbrs[v] as usize
    }

    fn single_white_neighbor(&self, v: usize) -> Option<usize> {
        if self.white_nbrs[v] != 1 {
            return None;
        }
        self.g.neighbors(v).iter().copied().find(|&w| !self.blue.contains(w))
    }

    /// Rules of kind in `rs` with this actor that are legal now, in Z, T, D order.
    pub fn applicable_at(&self, v: usize, rs: RuleSet) -> impl Iterator<Item = RuleApplication> + '_ {
        let blue = self.blue.contains(v);
        let single = self.single_white_neighbor(v);
        let z = (rs.contains(Rule::Z) && blue).then_some(single).flatten().map(|w| RuleApplication::z(v, w));
        let t = (rs.contains(Rule::T) && !blue).then_some(single).flatten().map(|w| RuleApplication::t(v, w));
        let d = (rs.contains(Rule::D) && !blue && self.white_nbrs[v] == 0).then(|| RuleApplication::d(v));
        z.into_iter().chain(t).chain(d)
    }

    /// All legal applications, ordered by actor then Z < T < D.
    pub fn applicable(&self, rs: RuleSet) -> Vec<RuleApplication> {
        (0..self.g.n()).flat_map(|v| self.applicable_at(v, rs)).collect()
    }

    pub fn check(&self, r: RuleApplication) -> Result<(), RuleError> {
        let n = self.g.n();
        if r.actor >= n {
            return Err(RuleError::OutOfRange(r.actor));
        }
        if r.target >= n {
            return Err(RuleError::OutOfRange(r.target));
        }
        let fail = |reason| Err(RuleError::Inapplicable { rule: r, reason });
        match r.kind {
            Rule::Z | Rule::T => {
                if r.actor == r.target || !self.g.adjacent(r.actor, r.target) {
                    return fail("target is not a neighbor of the actor");
                }
                if r.kind == Rule::Z && !self.is_blue(r.actor) {
                    return fail("Z actor is white");
                }
                if r.kind == Rule::T && self.is_blue(r.actor) {
                    return fail("T actor is blue");
                }
                if self.is_blue(r.target) {
                    return fail("target is already blue");
                }
                if self.white_nbrs[r.actor] != 1 {
                    return fail("actor has more than one white neighbor");
                }
            }
            Rule::D => {
                if r.actor != r.target {
                    return fail("D actor and target differ");
                }
                if self.is_blue(r.actor) {
                    return fail("D actor is blue");
                }
                if self.white_nbrs[r.actor] != 0 {
                    return fail("D actor has a white neighbor");
                }
            }
        }
        Ok(())
    }

    /// Applies `r`; the blue set grows by exactly the target.
    pub fn apply(&mut self, r: RuleApplication) -> Result<(), RuleError> {
        self.check(r)?;
        self.color(r.target);
        Ok(())
    }

    pub fn apply_in(&mut self, r: RuleApplication, rs: RuleSet) -> Result<(), RuleError> {
        if !rs.contains(r.kind) {
            return Err(RuleError::NotInRuleSet { rule: r });
        }
        self.apply(r)
    }

    fn color(&mut self, w: usize) {
        if self.blue.insert(w) {
            for &x in self.g.neighbors(w) {
                self.white_nbrs[x] -= 1;
            }
        }
    }
}

/// `Coloring::apply` as a free function.
pub fn apply_rule<'g>(mut c: Coloring<'g>, r: RuleApplication) -> Result<Coloring<'g>, RuleError> {
    c.apply(r)?;
    Ok(c)
}

pub fn applicable_rules(c: &Coloring<'_>, rs: RuleSet) -> Vec<RuleApplication> {
    c.applicable(rs)
}

/// Applies rules until none is applicable, always picking the lowest actor
/// and then Z < T < D. Complete for T-free rule sets; with T the result is
/// one maximal trace among possibly several.
pub fn greedy_closure(g: &Graph, start: &VertexSet, rs: RuleSet) -> (VertexSet, Vec<RuleApplication>) {
    let mut c = Coloring::new(g, start.clone());
    let trace = close(&mut c, rs);
    (c.into_blue(), trace)
}

fn close(c: &mut Coloring<'_>, rs: RuleSet) -> Vec<RuleApplication> {
    let g = c.g;
    let mut heap: BinaryHeap<Reverse<RuleApplication>> = BinaryHeap::new();
    let push_at = |c: &Coloring<'_>, v: usize, heap: &mut BinaryHeap<Reverse<RuleApplication>>| {
        for r in c.applicable_at(v, rs) {
            heap.push(Reverse(r));
        }
    };
    for v in 0..g.n() {
        push_at(c, v, &mut heap);
    }
    let mut trace = Vec::new();
    while let Some(Reverse(r)) = heap.pop() {
        // Rules only ever become inapplicable for good, so stale entries are skipped.
        if c.check(r).is_err() {
            continue;
        }
        c.color(r.target);
        trace.push(r);
        push_at(c, r.target, &mut heap);
        for &x in g.neighbors(r.target) {
            push_at(c, x, &mut heap);
        }
    }
    trace
}

/// Outcome of [`is_forcing_set`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ForcingVerdict {
    /// A trace coloring every vertex blue from the start set.
    Yes(Vec<RuleApplication>),
    /// No order colors everything; `largest` is a maximum blue set reached
    /// and `explored` counts the distinct blue sets visited.
    No { largest: VertexSet, explored: usize },
}

impl ForcingVerdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, ForcingVerdict::Yes(_))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("order search exceeded its budget of {budget} blue sets")]
pub struct SearchExhausted {
    pub budget: usize,
}

pub fn is_forcing_set(g: &Graph, s: &VertexSet, rs: RuleSet) -> Result<ForcingVerdict, SearchExhausted> {
    is_forcing_set_with_budget(g, s, rs, DEFAULT_SEARCH_BUDGET)
}

/// Decides whether some order of rules from `rs` colors all of `g` from `s`.
///
/// Z and D steps never hurt (an enabled Z or D step can be taken first in any
/// successful order, with a T step by the same vertex turning into a Z step),
/// so states are closed under them and only T choices are branched on.
pub fn is_forcing_set_with_budget(
    g: &Graph,
    s: &VertexSet,
    rs: RuleSet,
    budget: usize,
) -> Result<ForcingVerdict, SearchExhausted> {
    let mut c = Coloring::new(g, s.clone());
    let monotone = RuleSet(rs.0 & !Rule::T.bit());
    let mut trace = if monotone.0 != 0 { close(&mut c, monotone) } else { Vec::new() };
    if c.is_all_blue() {
        return Ok(ForcingVerdict::Yes(trace));
    }
    if !rs.contains(Rule::T) {
        return Ok(ForcingVerdict::No { largest: c.into_blue(), explored: 1 });
    }
    let mut search = TSearch { rs, monotone, budget, failed: HashSet::new(), largest: c.blue.clone() };
    if search.dfs(&c, &mut trace)? {
        Ok(ForcingVerdict::Yes(trace))
    } else {
        Ok(ForcingVerdict::No { largest: search.largest, explored: search.failed.len() })
    }
}

struct TSearch {
    rs: RuleSet,
    monotone: RuleSet,
    budget: usize,
    failed: HashSet<VertexSet>,
    largest: VertexSet,
}

impl TSearch {
    fn dfs(&mut self, c: &Coloring<'_>, trace: &mut Vec<RuleApplication>) -> Result<bool, SearchExhausted> {
        if c.is_all_blue() {
            return Ok(true);
        }
        if self.failed.contains(&c.blue) {
            return Ok(false);
        }
        if c.blue.len() > self.largest.len() {
            self.largest = c.blue.clone();
        }
        let mut tried_targets = VertexSet::new(c.g.n());
        for r in c.applicable(self.rs) {
            // After closing under Z and D only T moves remain; two T moves
            // with the same target lead to the same state.
            if r.kind != Rule::T || !tried_targets.insert(r.target) {
                continue;
            }
            let mut next = c.clone();
            next.color(r.target);
            let mark = trace.len();
            trace.push(r);
            if self.monotone.0 != 0 {
                let more = close(&mut next, self.monotone);
                trace.extend(more);
            }
            if self.dfs(&next, trace)? {
                return Ok(true);
            }
            trace.truncate(mark);
        }
        if self.failed.len() >= self.budget {
            return Err(SearchExhausted { budget: self.budget });
        }
        self.failed.insert(c.blue.clone());
        Ok(false)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ReplayError {
    #[error("step {step}: {source}")]
    Step { step: usize, source: RuleError },
    #[error("trace ends with {white} white vertices")]
    Incomplete { white: usize },
}

/// Replays `trace` from `s` and requires every vertex to end blue.
pub fn replay(g: &Graph, s: &VertexSet, trace: &[RuleApplication], rs: RuleSet) -> Result<(), ReplayError> {
    let mut c = Coloring::new(g, s.clone());
    for (step, &r) in trace.iter().enumerate() {
        c.apply_in(r, rs).map_err(|source| ReplayError::Step { step, source })?;
    }
    let white = g.n() - c.blue.len();
    if white > 0 {
        return Err(ReplayError::Incomplete { white });
    }
    Ok(())
}

/// Minimum forcing set found by exhaustive search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinForcing {
    pub k: usize,
    pub set: VertexSet,
    pub trace: Vec<RuleApplication>,
}

pub fn min_forcing_bruteforce(g: &Graph, rs: RuleSet) -> Result<MinForcing, GuardExceeded> {
    min_forcing_bruteforce_with_limit(g, rs, DEFAULT_BRUTEFORCE_LIMIT)
}

/// Smallest `S` such that some rule order colors all of `g`, found by
/// enumerating subsets by size with a reachability memo shared across all
/// blue sets.
pub fn min_forcing_bruteforce_with_limit(g: &Graph, rs: RuleSet, limit: usize) -> Result<MinForcing, GuardExceeded> {
    let n = g.n();
    if n > limit.min(26) {
        return Err(GuardExceeded { size: n, limit: limit.min(26) });
    }
    let oracle = MaskOracle::new(g, rs);
    let mut memo = vec![0u8; 1usize << n];
    for k in 0..=n {
        let mut found = None;
        for_each_subset_of_size(n, k, |mask| {
            if oracle.reach(mask, &mut memo) {
                found = Some(mask);
                false
            } else {
                true
            }
        });
        if let Some(mask) = found {
            let trace = oracle.witness(mask, &mut memo);
            let set = VertexSet::from_iter(n, (0..n).filter(|&v| mask >> v & 1 == 1));
            return Ok(MinForcing { k, set, trace });
        }
    }
    unreachable!("V(G) is always a forcing set")
}

/// Calls `f` on every `n`-bit mask with `k` ones in increasing order until it
/// returns `false`.
pub fn for_each_subset_of_size(n: usize, k: usize, mut f: impl FnMut(u32) -> bool) {
    if k > n {
        return;
    }
    if k == 0 {
        f(0);
        return;
    }
    let mut s: u64 = (1 << k) - 1;
    while s < 1 << n {
        if !f(s as u32) {
            return;
        }
        let c = s & s.wrapping_neg();
        let r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
}

/// Bitmask rule engine for graphs with at most 32 vertices.
struct MaskOracle {
    n: usize,
    adj: Vec<u32>,
    rs: RuleSet,
}

impl MaskOracle {
    fn new(g: &Graph, rs: RuleSet) -> Self {
        let adj = (0..g.n()).map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w)).collect();
        MaskOracle { n: g.n(), adj, rs }
    }

    fn full(&self) -> u32 {
        if self.n == 32 {
            u32::MAX
        } else {
            (1u32 << self.n) - 1
        }
    }

    /// Applicable rules at `blue` in actor, Z < T < D order.
    fn moves(&self, blue: u32, out: &mut Vec<RuleApplication>) {
        out.clear();
        for v in 0..self.n {
            let white = self.adj[v] & !blue;
            let is_blue = blue >> v & 1 == 1;
            let single = white.count_ones() == 1;
            let w = white.trailing_zeros() as usize;
            if is_blue {
                if single && self.rs.contains(Rule::Z) {
                    out.push(RuleApplication::z(v, w));
                }
            } else {
                if single && self.rs.contains(Rule::T) {
                    out.push(RuleApplication::t(v, w));
                }
                if white == 0 && self.rs.contains(Rule::D) {
                    out.push(RuleApplication::d(v));
                }
            }
        }
    }

    // memo: 0 unknown, 1 reachable, 2 not reachable
    fn reach(&self, blue: u32, memo: &mut [u8]) -> bool {
        let full = self.full();
        let mut stack: Vec<(u32, Vec<u32>)> = Vec::new();
        let mut moves = Vec::new();
        let succ = |b: u32, moves: &mut Vec<RuleApplication>| -> Vec<u32> {
            self.moves(b, moves);
            let mut s: Vec<u32> = moves.iter().map(|r| b | 1 << r.target).collect();
            s.sort_unstable();
            s.dedup();
            s
        };
        if blue == full {
            return true;
        }
        if memo[blue as usize] != 0 {
            return memo[blue as usize] == 1;
        }
        stack.push((blue, succ(blue, &mut moves)));
        let mut last: Option<bool> = None;
        while let Some((b, rest)) = stack.last_mut() {
            let b = *b;
            if let Some(res) = last.take() {
                if res {
                    memo[b as usize] = 1;
                    stack.pop();
                    last = Some(true);
                    continue;
                }
            }
            match rest.pop() {
                None => {
                    memo[b as usize] = 2;
                    stack.pop();
                    last = Some(false);
                }
                Some(nb) => {
                    if nb == full || memo[nb as usize] == 1 {
                        last = Some(true);
                    } else if memo[nb as usize] == 2 {
                        last = Some(false);
                    } else {
                        let s = succ(nb, &mut moves);
                        stack.push((nb, s));
                    }
                }
            }
        }
        last.unwrap_or(false)
    }

    fn witness(&self, start: u32, memo: &mut [u8]) -> Vec<RuleApplication> {
        let full = self.full();
        let mut blue = start;
        let mut trace = Vec::new();
        let mut moves = Vec::new();
        while blue != full {
            self.moves(blue, &mut moves);
            let r = *moves
                .iter()
                .find(|r| {
                    let nb = blue | 1 << r.target;
                    self.reach(nb, memo)
                })
                .expect("reachable state has a reachable successor");
            blue |= 1 << r.target;
            trace.push(r);
        }
        trace
    }
}

/// Minimum vertex cover size by subset enumeration (small graphs only).
pub fn min_vertex_cover_bruteforce(g: &Graph) -> Result<usize, GuardExceeded> {
    let n = g.n();
    if n > 26 {
        return Err(GuardExceeded { size: n, limit: 26 });
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    for k in 0..=n {
        let mut ok = false;
        for_each_subset_of_size(n, k, |m| {
            ok = edges.iter().all(|&(u, v)| m >> u & 1 == 1 || m >> v & 1 == 1);
            !ok
        });
        if ok {
            return Ok(k);
        }
    }
    Ok(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use alloc::string::ToString;

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_iter(n, vs.iter().copied())
    }

    #[test]
    fn applicable_rules_examples() {
        let p3 = path(3);
        let c = Coloring::new(&p3, set(3, &[0]));
        assert_eq!(c.applicable(RuleSet::Z), vec![RuleApplication::z(0, 1)]);
        let k3 = complete(3);
        assert!(Coloring::new(&k3, set(3, &[0])).applicable(RuleSet::Z).is_empty());
        let p2 = path(2);
        assert_eq!(
            Coloring::all_white(&p2).applicable(RuleSet::T),
            vec![RuleApplication::t(0, 1), RuleApplication::t(1, 0)]
        );
    }

    #[test]
    fn apply_rule_examples() {
        let p3 = path(3);
        let c = apply_rule(Coloring::new(&p3, set(3, &[0])), RuleApplication::z(0, 1)).unwrap();
        assert_eq!(c.blue().to_vec(), vec![0, 1]);
        let p2 = path(2);
        let c = apply_rule(Coloring::all_white(&p2), RuleApplication::t(0, 1)).unwrap();
        assert_eq!(c.blue().to_vec(), vec![1]);
        let s = star(3);
        let c = apply_rule(Coloring::new(&s, set(4, &[1, 2, 3])), RuleApplication::d(0)).unwrap();
        assert!(c.is_all_blue());
        assert!(apply_rule(Coloring::new(&p3, set(3, &[0])), RuleApplication::z(1, 2)).is_err());
        assert!(apply_rule(Coloring::new(&s, set(4, &[1, 2])), RuleApplication::d(0)).is_err());
    }

    #[test]
    fn greedy_closure_examples() {
        let (blue, trace) = greedy_closure(&path(5), &set(5, &[0]), RuleSet::Z);
        assert!(blue.is_full());
        assert_eq!(trace.len(), 4);
        let (blue, trace) = greedy_closure(&complete(3), &set(3, &[0]), RuleSet::Z);
        assert_eq!(blue.to_vec(), vec![0]);
        assert!(trace.is_empty());
    }

    #[test]
    fn greedy_prefers_lowest_actor_then_kind() {
        let g = path(3);
        let (_, trace) = greedy_closure(&g, &set(3, &[]), RuleSet::ZTD);
        assert_eq!(trace[0], RuleApplication::t(0, 1));
    }

    #[test]
    fn forcing_set_examples() {
        assert!(is_forcing_set(&path(6), &set(6, &[5]), RuleSet::Z).unwrap().is_yes());
        assert!(!is_forcing_set(&cycle(4), &set(4, &[]), RuleSet::T).unwrap().is_yes());
        let k4 = complete(4);
        for_each_subset_of_size(4, 2, |m| {
            let s = VertexSet::from_iter(4, (0..4).filter(|v| m >> v & 1 == 1));
            assert!(!is_forcing_set(&k4, &s, RuleSet::Z).unwrap().is_yes());
            true
        });
        assert!(is_forcing_set(&k4, &set(4, &[0, 1, 2]), RuleSet::Z).unwrap().is_yes());
    }

    #[test]
    fn forcing_search_finds_order_dependent_traces() {
        let g = path(2);
        let verdict = is_forcing_set(&g, &set(2, &[]), RuleSet::TD).unwrap();
        let ForcingVerdict::Yes(trace) = verdict else { panic!("expected YES") };
        replay(&g, &set(2, &[]), &trace, RuleSet::TD).unwrap();
    }

    #[test]
    fn search_budget_is_reported() {
        let g = cycle(6);
        let r = is_forcing_set_with_budget(&g, &set(6, &[]), RuleSet::T, 0);
        assert_eq!(r, Err(SearchExhausted { budget: 0 }));
    }

    #[test]
    fn min_forcing_examples() {
        assert_eq!(min_forcing_bruteforce(&path(5), RuleSet::Z).unwrap().k, 1);
        assert_eq!(min_forcing_bruteforce(&cycle(4), RuleSet::Z).unwrap().k, 2);
        let pet = petersen();
        assert_eq!(min_forcing_bruteforce(&pet, RuleSet::D).unwrap().k, min_vertex_cover_bruteforce(&pet).unwrap());
        let m = min_forcing_bruteforce(&pet, RuleSet::ZT).unwrap();
        replay(&pet, &m.set, &m.trace, RuleSet::ZT).unwrap();
        assert!(min_forcing_bruteforce_with_limit(&path(5), RuleSet::Z, 4).is_err());
    }

    #[test]
    fn subsets_of_size_are_complete() {
        let mut count = 0;
        for_each_subset_of_size(6, 3, |m| {
            assert_eq!(m.count_ones(), 3);
            count += 1;
            true
        });
        assert_eq!(count, 20);
    }

    #[test]
    fn rule_set_parsing() {
        assert_eq!(RuleSet::parse("tz").unwrap(), RuleSet::ZT);
        assert_eq!(RuleSet::parse("").unwrap_err(), RuleSetError::Empty);
        assert!(RuleSet::parse("zx").is_err());
        assert_eq!(RuleSet::all().count(), 7);
        assert_eq!(RuleSet::ZTD.to_string(), "ztd");
    }
}
