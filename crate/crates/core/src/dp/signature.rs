//! Signatures, signature tables and the five node transitions.

use alloc::vec;
use alloc::vec::Vec;
use core::hash::BuildHasher;

use hashbrown::hash_table::Entry as TableEntry;
use hashbrown::{DefaultHashBuilder, HashMap, HashTable};

use super::dep::{add_arc_closed, close, drop_two_bits, gamma, insert_two_bits, phi};
use crate::rules::{Rule, RuleSet};

/// Largest bag the tables can represent (two events per vertex in a `u64`).
pub const MAX_BAG: usize = 32;

/// Per-vertex rule value: `BOT` (none), or the rule kind.
pub const BOT: u8 = 0;
pub const Z: u8 = 1;
pub const T: u8 = 2;
pub const D: u8 = 3;

const B_GAMMA: u8 = 1 << 4;
const B_PHI: u8 = 1 << 5;

/// Marker for "no vertex chosen" in rule-node provenance.
pub const NONE: u8 = u8::MAX;

pub fn rule_code(r: Rule) -> u8 {
    match r {
        Rule::Z => Z,
        Rule::T => T,
        Rule::D => D,
    }
}

pub fn code_rule(c: u8) -> Option<Rule> {
    match c {
        Z => Some(Rule::Z),
        T => Some(Rule::T),
        D => Some(Rule::D),
        _ => None,
    }
}

/// `(Γ(v), Φ(v))` pairs a newly introduced vertex may take.
///
/// Besides the six pairs that can never describe a valid coloring process,
/// `(D, ⊥)` is excluded as well: it would mark `v` as self-colored without
/// any event that checks its neighbors, which lets every vertex be colored
/// for free once D is allowed. The D rule is carried by `(D, D)`, or by
/// `(D, T)` for a vertex that first forces by T and then colors itself.
pub fn allowed_pairs(rs: RuleSet) -> Vec<(u8, u8)> {
    const EXCLUDED: [(u8, u8); 7] = [(T, T), (D, Z), (BOT, T), (Z, D), (T, D), (BOT, D), (D, BOT)];
    let mut values = vec![BOT];
    values.extend(rs.iter().map(rule_code));
    let mut out = Vec::new();
    for &gv in &values {
        for &pv in &values {
            if !EXCLUDED.contains(&(gv, pv)) {
                out.push((gv, pv));
            }
        }
    }
    out
}

/// Unpacked signature over a bag of `len` vertices (bag positions are
/// indices into the sorted bag). Dependency rows are kept transitively
/// closed; the weight lives in the table.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Sig {
    pub len: usize,
    pub st: [u8; MAX_BAG],
    pub rows: [u64; 2 * MAX_BAG],
}

impl Sig {
    pub fn empty() -> Sig {
        Sig { len: 0, st: [0; MAX_BAG], rows: [0; 2 * MAX_BAG] }
    }

    #[inline]
    pub fn gamma_of(&self, i: usize) -> u8 {
        self.st[i] & 3
    }

    #[inline]
    pub fn phi_of(&self, i: usize) -> u8 {
        self.st[i] >> 2 & 3
    }

    #[inline]
    pub fn b_gamma(&self, i: usize) -> bool {
        self.st[i] & B_GAMMA != 0
    }

    #[inline]
    pub fn b_phi(&self, i: usize) -> bool {
        self.st[i] & B_PHI != 0
    }

    #[inline]
    fn set_b_gamma(&mut self, i: usize) {
        self.st[i] |= B_GAMMA;
    }

    #[inline]
    fn set_b_phi(&mut self, i: usize) {
        self.st[i] |= B_PHI;
    }

    pub fn events(&self) -> usize {
        2 * self.len
    }

    /// Whether `a` reaches `b` in the dependency graph.
    pub fn reaches(&self, a: usize, b: usize) -> bool {
        self.rows[a] >> b & 1 == 1
    }

    pub fn is_acyclic(&self) -> bool {
        (0..self.events()).all(|e| !self.reaches(e, e))
    }

    #[inline]
    fn add(&mut self, a: usize, b: usize) -> bool {
        let m = self.events();
        add_arc_closed(&mut self.rows[..m], a, b)
    }

    /// Opens bag position `p` for a new vertex with the given state.
    fn inserted(&self, p: usize, gv: u8, pv: u8) -> Sig {
        let mut s = Sig::empty();
        s.len = self.len + 1;
        s.st[..p].copy_from_slice(&self.st[..p]);
        s.st[p + 1..s.len].copy_from_slice(&self.st[p..self.len]);
        let at = 2 * p;
        for e in 0..self.events() {
            let ne = if e < at { e } else { e + 2 };
            s.rows[ne] = insert_two_bits(self.rows[e], at);
        }
        let mut st = gv | pv << 2;
        if gv == D || gv == BOT {
            st |= B_GAMMA;
        }
        if pv == D || pv == BOT {
            st |= B_PHI;
        }
        s.st[p] = st;
        match pv {
            Z => s.rows[gamma(p)] = 1 << phi(p),
            T | D => s.rows[phi(p)] = 1 << gamma(p),
            _ => {}
        }
        s
    }

    /// Drops bag position `p`. Rows are closed, so deleting the two events
    /// is the same as bypassing them.
    fn removed(&self, p: usize) -> Sig {
        let mut s = Sig::empty();
        s.len = self.len - 1;
        s.st[..p].copy_from_slice(&self.st[..p]);
        s.st[p..s.len].copy_from_slice(&self.st[p + 1..self.len]);
        let at = 2 * p;
        let mut ne = 0;
        for e in 0..self.events() {
            if e == at || e == at + 1 {
                continue;
            }
            s.rows[ne] = drop_two_bits(self.rows[e], at);
            ne += 1;
        }
        s
    }
}

/// Number of `u64` words in a packed key for a bag of `len` vertices.
pub fn stride(len: usize) -> usize {
    len.div_ceil(8) + (4 * len * len).div_ceil(64)
}

fn pack(s: &Sig, out: &mut [u64]) {
    out.iter_mut().for_each(|w| *w = 0);
    let sw = s.len.div_ceil(8);
    for i in 0..s.len {
        out[i / 8] |= (s.st[i] as u64) << (8 * (i % 8));
    }
    let width = 2 * s.len;
    let mut bit = 0usize;
    for e in 0..width {
        let r = s.rows[e];
        let (w, off) = (sw + bit / 64, bit % 64);
        out[w] |= r << off;
        if off + width > 64 && off != 0 {
            out[w + 1] |= r >> (64 - off);
        }
        bit += width;
    }
}

fn unpack(key: &[u64], len: usize) -> Sig {
    let mut s = Sig::empty();
    s.len = len;
    let sw = len.div_ceil(8);
    for i in 0..len {
        s.st[i] = (key[i / 8] >> (8 * (i % 8))) as u8;
    }
    let width = 2 * len;
    let mask = if width == 64 { u64::MAX } else { (1u64 << width) - 1 };
    let mut bit = 0usize;
    for e in 0..width {
        let (w, off) = (sw + bit / 64, bit % 64);
        let mut r = key[w] >> off;
        if off + width > 64 && off != 0 {
            r |= key[w + 1] << (64 - off);
        }
        s.rows[e] = r & mask;
        bit += width;
    }
    s
}

/// How a stored signature was produced; indices refer to child tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Prov {
    pub a: u32,
    pub b: u32,
    /// Bag positions of the chosen colorer and colored vertex at rule nodes.
    pub f: u8,
    pub g: u8,
}

impl Prov {
    fn child(a: usize) -> Prov {
        Prov { a: a as u32, b: 0, f: NONE, g: NONE }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("signature budget of {budget} exceeded")]
pub struct BudgetExceeded {
    pub budget: usize,
}

/// Counts stored signatures across all tables of a run.
#[derive(Debug, Clone)]
pub struct Budget {
    pub limit: usize,
    pub used: usize,
}

impl Budget {
    pub fn new(limit: usize) -> Self {
        Budget { limit, used: 0 }
    }

    fn charge(&mut self) -> Result<(), BudgetExceeded> {
        self.used += 1;
        if self.used > self.limit {
            Err(BudgetExceeded { budget: self.limit })
        } else {
            Ok(())
        }
    }
}

/// Signatures of one tree node: one entry per key, keeping the smallest
/// weight (ties keep the first).
#[derive(Clone)]
pub struct Table {
    pub bag: Vec<usize>,
    stride: usize,
    keys: Vec<u64>,
    pub weight: Vec<u32>,
    pub prov: Vec<Prov>,
    index: HashTable<u32>,
    hasher: DefaultHashBuilder,
    dedup: bool,
    /// Signatures whose weight, counting bag vertices still to be paid for
    /// at their forget node, exceeds this are dropped.
    pub cap: u32,
}

impl core::fmt::Debug for Table {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("Table").field("bag", &self.bag).field("len", &self.len()).finish()
    }
}

impl Table {
    pub fn new(bag: Vec<usize>, dedup: bool) -> Table {
        let stride = stride(bag.len());
        Table {
            bag,
            stride,
            keys: Vec::new(),
            weight: Vec::new(),
            prov: Vec::new(),
            index: HashTable::new(),
            hasher: DefaultHashBuilder::default(),
            dedup,
            cap: u32::MAX,
        }
    }

    /// Empty table over `bag` with this table's settings.
    pub fn derived(&self, bag: Vec<usize>) -> Table {
        Table { cap: self.cap, ..Table::new(bag, self.dedup) }
    }

    pub fn len(&self) -> usize {
        self.weight.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weight.is_empty()
    }

    pub fn key(&self, i: usize) -> &[u64] {
        &self.keys[i * self.stride..(i + 1) * self.stride]
    }

    pub fn sig(&self, i: usize) -> Sig {
        unpack(self.key(i), self.bag.len())
    }

    pub fn min_weight(&self) -> Option<(usize, u32)> {
        self.weight.iter().copied().enumerate().min_by_key(|&(i, w)| (w, i))
    }

    /// Inserts `s` with weight `w`; returns whether a new key was created.
    pub fn insert(&mut self, s: &Sig, w: u32, prov: Prov, budget: &mut Budget) -> Result<bool, BudgetExceeded> {
        debug_assert!(s.is_acyclic(), "stored signatures must be acyclic");
        debug_assert_eq!(s.len, self.bag.len());
        if self.cap != u32::MAX && w + (0..s.len).filter(|&i| s.gamma_of(i) == BOT).count() as u32 > self.cap {
            return Ok(false);
        }
        let mut buf = [0u64; 160];
        let key = &mut buf[..self.stride];
        pack(s, key);
        if !self.dedup {
            budget.charge()?;
            self.push(key, w, prov);
            return Ok(true);
        }
        let hash = self.hasher.hash_one(&*key);
        let (keys, stride) = (&self.keys, self.stride);
        let entry = self.index.entry(
            hash,
            |&i| keys[i as usize * stride..(i as usize + 1) * stride] == *key,
            |&i| self.hasher.hash_one(&keys[i as usize * stride..(i as usize + 1) * stride]),
        );
        match entry {
            TableEntry::Occupied(o) => {
                let i = *o.get() as usize;
                if w < self.weight[i] {
                    self.weight[i] = w;
                    self.prov[i] = prov;
                }
                Ok(false)
            }
            TableEntry::Vacant(v) => {
                budget.charge()?;
                v.insert(self.weight.len() as u32);
                self.push(&buf[..stride], w, prov);
                Ok(true)
            }
        }
    }

    fn push(&mut self, key: &[u64], w: u32, prov: Prov) {
        self.keys.extend_from_slice(key);
        self.weight.push(w);
        self.prov.push(prov);
    }
}

/// Bag vertices whose whole neighborhood already lies in the subtree. Such a
/// vertex can only still be colored by, or color, a current bag neighbor, so
/// a signature without an unused partner of the right kind is dead.
#[derive(Clone, Debug, Default)]
pub struct Demand {
    pub closed: u32,
    /// Bag-position adjacency masks.
    pub adj: Vec<u32>,
}

impl Demand {
    pub fn viable(&self, s: &Sig) -> bool {
        // Per rule kind: closed vertices waiting for a partner of that kind,
        // and the union of unused partners they could take. A partner serves
        // one vertex only.
        let mut need = [(0u32, 0u32); 4];
        let mut give = [(0u32, 0u32); 4];
        let mut rest = self.closed;
        while rest != 0 {
            let q = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let nb = self.adj[q];
            if !s.b_gamma(q) {
                let x = s.gamma_of(q) as usize;
                let sup = partners(nb, |u| s.phi_of(u) as usize == x && !s.b_phi(u));
                if sup == 0 {
                    return false;
                }
                need[x].0 |= 1 << q;
                give[x].0 |= sup;
            }
            if !s.b_phi(q) {
                let x = s.phi_of(q) as usize;
                let sup = partners(nb, |u| s.gamma_of(u) as usize == x && !s.b_gamma(u));
                if sup == 0 {
                    return false;
                }
                need[x].1 |= 1 << q;
                give[x].1 |= sup;
            }
        }
        need.iter()
            .zip(&give)
            .all(|(n, g)| n.0.count_ones() <= g.0.count_ones() && n.1.count_ones() <= g.1.count_ones())
    }
}

fn partners(mut nb: u32, ok: impl Fn(usize) -> bool) -> u32 {
    let mut out = 0;
    while nb != 0 {
        let u = nb.trailing_zeros() as usize;
        nb &= nb - 1;
        if ok(u) {
            out |= 1 << u;
        }
    }
    out
}

/// The single empty signature of weight zero.
pub fn process_leaf(dedup: bool, cap: u32, budget: &mut Budget) -> Result<Table, BudgetExceeded> {
    let mut t = Table { cap, ..Table::new(Vec::new(), dedup) };
    t.insert(&Sig::empty(), 0, Prov::child(0), budget)?;
    Ok(t)
}

pub fn process_introduce(
    child: &Table,
    bag: &[usize],
    v: usize,
    rs: RuleSet,
    demand: &Demand,
    budget: &mut Budget,
) -> Result<Table, BudgetExceeded> {
    let p = bag.binary_search(&v).expect("introduced vertex in bag");
    let pairs = allowed_pairs(rs);
    let mut out = child.derived(bag.to_vec());
    for i in 0..child.len() {
        let c = child.sig(i);
        for &(gv, pv) in &pairs {
            let s = c.inserted(p, gv, pv);
            if demand.viable(&s) {
                out.insert(&s, child.weight[i], Prov::child(i), budget)?;
            }
        }
    }
    Ok(out)
}

/// Rule node of `v`: picks who colors `v` (if not settled) and whom `v`
/// colors (if not settled) among bag neighbors, adding the ordering
/// constraints every edge at `v` imposes.
pub fn process_rule(
    child: &Table,
    v: usize,
    bag_neighbors: &[usize],
    demand: &Demand,
    budget: &mut Budget,
) -> Result<Table, BudgetExceeded> {
    let bag = &child.bag;
    let p = bag.binary_search(&v).expect("rule vertex in bag");
    let nb: Vec<usize> = bag_neighbors.iter().map(|w| bag.binary_search(w).expect("neighbor in bag")).collect();
    let mut out = child.derived(bag.clone());
    let mut fopts = Vec::with_capacity(nb.len() + 1);
    let mut gopts = Vec::with_capacity(nb.len() + 1);
    for i in 0..child.len() {
        let c = child.sig(i);
        let (gv, pv) = (c.gamma_of(p), c.phi_of(p));
        fopts.clear();
        gopts.clear();
        if c.b_gamma(p) {
            fopts.push(NONE as usize);
        } else {
            fopts.extend(nb.iter().copied().filter(|&q| c.phi_of(q) == gv && !c.b_phi(q)));
        }
        if c.b_phi(p) {
            gopts.push(NONE as usize);
        } else {
            gopts.extend(nb.iter().copied().filter(|&q| c.gamma_of(q) == pv && !c.b_gamma(q)));
        }
        for &f in &fopts {
            for &g in &gopts {
                if let Some(s) = rule_successor(&c, p, &nb, f, g).filter(|s| demand.viable(s)) {
                    let prov = Prov { a: i as u32, b: 0, f: f as u8, g: g as u8 };
                    out.insert(&s, child.weight[i], prov, budget)?;
                }
            }
        }
    }
    Ok(out)
}

fn rule_successor(c: &Sig, p: usize, nb: &[usize], f: usize, g: usize) -> Option<Sig> {
    let none = NONE as usize;
    let mut s = *c;
    let pv = c.phi_of(p);
    let mut ok = true;
    if f != none {
        ok &= s.add(phi(f), gamma(p));
        s.set_b_gamma(p);
        s.set_b_phi(f);
        if pv == T {
            ok &= s.add(phi(p), phi(f));
        }
    }
    if ok && g != none {
        ok &= s.add(phi(p), gamma(g));
        s.set_b_gamma(g);
        s.set_b_phi(p);
        if c.phi_of(g) == T {
            ok &= s.add(phi(g), phi(p));
        }
    }
    for &w in nb {
        if !ok {
            break;
        }
        if w != f && c.phi_of(w) != BOT {
            ok &= s.add(gamma(p), phi(w));
        }
        if ok && pv != BOT && w != g {
            ok &= s.add(gamma(w), phi(p));
        }
    }
    ok.then_some(s)
}

/// Keeps signatures where `v` has both partners settled; a vertex with
/// `Γ(v) = ⊥` is a member of the forcing set and costs one.
pub fn process_forget(child: &Table, v: usize, budget: &mut Budget) -> Result<Table, BudgetExceeded> {
    let p = child.bag.binary_search(&v).expect("forgotten vertex in bag");
    let bag: Vec<usize> = child.bag.iter().copied().filter(|&x| x != v).collect();
    let mut out = child.derived(bag);
    for i in 0..child.len() {
        let c = child.sig(i);
        if !(c.b_gamma(p) && c.b_phi(p)) {
            continue;
        }
        let w = child.weight[i] + u32::from(c.gamma_of(p) == BOT);
        out.insert(&c.removed(p), w, Prov::child(i), budget)?;
    }
    Ok(out)
}

/// Merges signatures that agree on Γ and Φ, whose event-set flags come from
/// at most one side, and whose united dependency graph stays acyclic.
pub fn process_join(
    left: &Table,
    right: &Table,
    demand: &Demand,
    budget: &mut Budget,
) -> Result<Table, BudgetExceeded> {
    assert_eq!(left.bag, right.bag, "join children must share the bag");
    let len = left.bag.len();
    let mut out = left.derived(left.bag.clone());
    let rule_part = |s: &Sig| -> u128 { (0..len).fold(0u128, |acc, i| acc | ((s.st[i] & 15) as u128) << (4 * i)) };
    let mut buckets: HashMap<u128, Vec<usize>> = HashMap::new();
    let right_sigs: Vec<Sig> = (0..right.len()).map(|j| right.sig(j)).collect();
    for (j, s) in right_sigs.iter().enumerate() {
        buckets.entry(rule_part(s)).or_default().push(j);
    }
    for i in 0..left.len() {
        let a = left.sig(i);
        let Some(bucket) = buckets.get(&rule_part(&a)) else { continue };
        let mut ev_gamma = 0u32;
        let mut ev_phi = 0u32;
        let mut bg_a = 0u32;
        let mut bp_a = 0u32;
        for q in 0..len {
            if matches!(a.gamma_of(q), Z | T) {
                ev_gamma |= 1 << q;
            }
            if matches!(a.phi_of(q), Z | T) {
                ev_phi |= 1 << q;
            }
            bg_a |= u32::from(a.b_gamma(q)) << q;
            bp_a |= u32::from(a.b_phi(q)) << q;
        }
        for &j in bucket {
            let b = &right_sigs[j];
            let mut bg_b = 0u32;
            let mut bp_b = 0u32;
            for q in 0..len {
                bg_b |= u32::from(b.b_gamma(q)) << q;
                bp_b |= u32::from(b.b_phi(q)) << q;
            }
            if bg_a & bg_b & ev_gamma != 0 || bp_a & bp_b & ev_phi != 0 {
                continue;
            }
            let mut s = a;
            for q in 0..len {
                s.st[q] |= b.st[q];
            }
            let m = s.events();
            for e in 0..m {
                s.rows[e] |= b.rows[e];
            }
            close(&mut s.rows[..m]);
            if !s.is_acyclic() || !demand.viable(&s) {
                continue;
            }
            let w = left.weight[i].saturating_add(right.weight[j]);
            out.insert(&s, w, Prov { a: i as u32, b: j as u32, f: NONE, g: NONE }, budget)?;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn budget() -> Budget {
        Budget::new(usize::MAX)
    }

    #[test]
    fn pack_round_trip() {
        for len in 0..=MAX_BAG {
            let mut s = Sig::empty();
            s.len = len;
            for i in 0..len {
                s.st[i] = (i as u8 * 7 + 3) & 63;
            }
            for e in 0..2 * len {
                let mask = if 2 * len == 64 { u64::MAX } else { (1u64 << (2 * len)) - 1 };
                s.rows[e] = (0x9E37_79B9_7F4A_7C15u64.rotate_left(e as u32) ^ e as u64) & mask;
            }
            let mut key = vec![0u64; stride(len)];
            pack(&s, &mut key);
            assert_eq!(unpack(&key, len), s, "len {len}");
        }
    }

    #[test]
    fn leaf_is_single_empty_signature() {
        let t = process_leaf(true, u32::MAX, &mut budget()).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t.weight[0], 0);
        assert_eq!(t.sig(0), Sig::empty());
    }

    #[test]
    fn introduce_choices() {
        assert_eq!(allowed_pairs(RuleSet::Z).len(), 4);
        let leaf = process_leaf(true, u32::MAX, &mut budget()).unwrap();
        let t = process_introduce(&leaf, &[5], 5, RuleSet::Z, &Demand::default(), &mut budget()).unwrap();
        assert_eq!(t.len(), 4);
        for i in 0..t.len() {
            let s = t.sig(i);
            if s.phi_of(0) == Z {
                assert!(s.reaches(gamma(0), phi(0)));
            }
            if s.gamma_of(0) == BOT {
                assert!(s.b_gamma(0));
            }
        }
        assert!(!allowed_pairs(RuleSet::ZTD).contains(&(D, BOT)));
        assert!(allowed_pairs(RuleSet::TD).contains(&(D, T)));
    }

    fn p2_with(gs: [(u8, u8); 2]) -> Table {
        let mut b = budget();
        let leaf = process_leaf(true, u32::MAX, &mut b).unwrap();
        let mut t = Table::new(vec![0], true);
        t.insert(&Sig::empty().inserted(0, gs[0].0, gs[0].1), 0, Prov::child(0), &mut b).unwrap();
        let _ = leaf;
        let mut t2 = Table::new(vec![0, 1], true);
        t2.insert(&t.sig(0).inserted(1, gs[1].0, gs[1].1), 0, Prov::child(0), &mut b).unwrap();
        t2
    }

    #[test]
    fn rule_node_z_forcing_on_p2() {
        let t = p2_with([(Z, BOT), (BOT, Z)]);
        let out = process_rule(&t, 0, &[1], &Demand::default(), &mut budget()).unwrap();
        assert_eq!(out.len(), 1);
        let s = out.sig(0);
        assert!(s.reaches(phi(1), gamma(0)));
        assert!(s.b_gamma(0) && s.b_phi(1));
    }

    #[test]
    fn settled_vertex_has_single_successor() {
        let t = p2_with([(BOT, BOT), (BOT, BOT)]);
        let out = process_rule(&t, 0, &[1], &Demand::default(), &mut budget()).unwrap();
        assert_eq!(out.len(), 1);
        assert_eq!(out.prov[0].f, NONE);
        assert_eq!(out.prov[0].g, NONE);
    }

    #[test]
    fn mutual_forcing_is_cyclic() {
        let t = p2_with([(Z, Z), (Z, Z)]);
        let out = process_rule(&t, 0, &[1], &Demand::default(), &mut budget()).unwrap();
        assert!(out.is_empty());
    }

    #[test]
    fn forget_filters_and_counts() {
        let t = p2_with([(BOT, BOT), (Z, BOT)]);
        let f = process_forget(&t, 0, &mut budget()).unwrap();
        assert_eq!(f.len(), 1);
        assert_eq!(f.weight[0], 1);
        let g = process_forget(&t, 1, &mut budget()).unwrap();
        assert!(g.is_empty());
    }

    #[test]
    fn join_rules() {
        let mut b = budget();
        let l = p2_with([(Z, BOT), (BOT, Z)]);
        let forced = process_rule(&l, 0, &[1], &Demand::default(), &mut b).unwrap();
        // Both sides claim the same forcing event.
        assert!(process_join(&forced, &forced, &Demand::default(), &mut b).unwrap().is_empty());
        // One side settled, the other untouched.
        let j = process_join(&forced, &l, &Demand::default(), &mut b).unwrap();
        assert_eq!(j.len(), 1);
        // Different rule values never merge.
        let other = p2_with([(BOT, BOT), (BOT, Z)]);
        assert!(process_join(&l, &other, &Demand::default(), &mut b).unwrap().is_empty());
    }

    #[test]
    fn join_rejects_cyclic_union() {
        let mut b = budget();
        let mut x = Sig::empty().inserted(0, BOT, BOT).inserted(1, BOT, BOT);
        let mut y = x;
        assert!(x.add(gamma(0), gamma(1)));
        assert!(y.add(gamma(1), gamma(0)));
        let mut l = Table::new(vec![0, 1], true);
        l.insert(&x, 0, Prov::child(0), &mut b).unwrap();
        let mut r = Table::new(vec![0, 1], true);
        r.insert(&y, 0, Prov::child(0), &mut b).unwrap();
        assert!(process_join(&l, &r, &Demand::default(), &mut b).unwrap().is_empty());
        assert_eq!(process_join(&l, &l, &Demand::default(), &mut b).unwrap().len(), 1);
    }

    #[test]
    fn dedup_keeps_smaller_weight() {
        let mut b = budget();
        let mut t = Table::new(vec![0], true);
        let s = Sig::empty().inserted(0, BOT, BOT);
        assert!(t.insert(&s, 3, Prov::child(0), &mut b).unwrap());
        assert!(!t.insert(&s, 1, Prov::child(1), &mut b).unwrap());
        assert!(!t.insert(&s, 1, Prov::child(2), &mut b).unwrap());
        assert_eq!(t.len(), 1);
        assert_eq!(t.weight[0], 1);
        assert_eq!(t.prov[0].a, 1);
    }

    #[test]
    fn budget_is_enforced() {
        let mut b = Budget::new(2);
        let leaf = process_leaf(true, u32::MAX, &mut b).unwrap();
        assert_eq!(
            process_introduce(&leaf, &[0], 0, RuleSet::Z, &Demand::default(), &mut b).unwrap_err(),
            BudgetExceeded { budget: 2 }
        );
    }
}
