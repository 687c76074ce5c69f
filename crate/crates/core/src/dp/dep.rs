//! Dependency digraphs over the events of a bag.
//!
//! Bag position `i` owns two events: `2i` (the vertex turns blue) and
//! `2i + 1` (the vertex applies its rule). Rows are out-neighbor bitsets, so
//! a bag holds at most 32 vertices.

use alloc::vec;
use alloc::vec::Vec;

pub const MAX_EVENTS: usize = 64;

#[inline]
pub fn gamma(pos: usize) -> usize {
    2 * pos
}

#[inline]
pub fn phi(pos: usize) -> usize {
    2 * pos + 1
}

/// A digraph on events `0..rows.len()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DepGraph {
    pub rows: Vec<u64>,
}

impl DepGraph {
    pub fn new(events: usize) -> Self {
        assert!(events <= MAX_EVENTS);
        DepGraph { rows: vec![0; events] }
    }

    pub fn events(&self) -> usize {
        self.rows.len()
    }

    pub fn add_arc(&mut self, a: usize, b: usize) {
        self.rows[a] |= 1 << b;
    }

    pub fn has_arc(&self, a: usize, b: usize) -> bool {
        self.rows[a] >> b & 1 == 1
    }

    /// Reachability matrix (paths of length at least one).
    pub fn closure(&self) -> DepGraph {
        let mut rows = self.rows.clone();
        close(&mut rows);
        DepGraph { rows }
    }

    pub fn is_acyclic(&self) -> bool {
        let c = self.closure();
        (0..c.events()).all(|e| !c.has_arc(e, e))
    }
}

/// Transitive closure in place (Warshall over bit rows).
pub fn close(rows: &mut [u64]) {
    for k in 0..rows.len() {
        let rk = rows[k];
        let bit = 1u64 << k;
        for x in 0..rows.len() {
            if rows[x] & bit != 0 {
                rows[x] |= rk;
            }
        }
    }
}

/// Adds arc `a -> b` to a transitively closed graph, keeping it closed.
/// Returns `false`, leaving `rows` untouched, if the arc closes a cycle.
#[inline]
pub fn add_arc_closed(rows: &mut [u64], a: usize, b: usize) -> bool {
    if a == b || rows[b] >> a & 1 == 1 {
        return false;
    }
    let add = rows[b] | 1 << b;
    let abit = 1u64 << a;
    for (x, row) in rows.iter_mut().enumerate() {
        if x == a || *row & abit != 0 {
            *row |= add;
        }
    }
    true
}

/// Removes bit positions `at` and `at + 1` from `word`, shifting higher bits down.
#[inline]
pub fn drop_two_bits(word: u64, at: usize) -> u64 {
    let low = word & ((1u64 << at) - 1);
    let high = if at + 2 >= 64 { 0 } else { word >> (at + 2) };
    low | high << at
}

/// Opens two zero bit positions at `at`, shifting higher bits up.
#[inline]
pub fn insert_two_bits(word: u64, at: usize) -> u64 {
    let low = word & ((1u64 << at) - 1);
    let high = if at >= 64 { 0 } else { word >> at };
    low | high.checked_shl(at as u32 + 2).unwrap_or(0)
}

/// Removes the two events of bag position `pos` after adding every arc of
/// the transitive closure of the subgraph induced by those events and their
/// in- and out-neighbors. Reachability between the remaining events is
/// unchanged.
pub fn bypass(dep: &DepGraph, pos: usize) -> DepGraph {
    let (g, p) = (gamma(pos), phi(pos));
    let m = dep.events();
    let mine = 1u64 << g | 1u64 << p;
    let mut local = mine;
    for e in 0..m {
        if dep.rows[e] & mine != 0 {
            local |= 1 << e;
        }
    }
    local |= dep.rows[g] | dep.rows[p];
    let mut induced: Vec<u64> = (0..m).map(|e| if local >> e & 1 == 1 { dep.rows[e] & local } else { 0 }).collect();
    close(&mut induced);
    let mut rows: Vec<u64> = (0..m).map(|e| dep.rows[e] | induced[e]).collect();
    rows.remove(p);
    rows.remove(g);
    for r in &mut rows {
        *r = drop_two_bits(*r, g);
    }
    DepGraph { rows }
}
