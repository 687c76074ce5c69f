//! Witness reconstruction: follow provenance from the best root signature,
//! unite the dependency digraphs, order the events topologically and read
//! the rule applications off that order.

use alloc::collections::BinaryHeap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;

use hashbrown::HashSet;

use super::signature::{Table, BOT, D, NONE, T, Z};
use super::DpError;
use crate::graph::{Graph, VertexSet};
use crate::rules::{replay, RuleApplication, RuleSet};
use crate::treedec::{NiceTd, NodeKind};

pub(super) fn witness(
    g: &Graph,
    nice: &NiceTd,
    tables: &[Table],
    best: usize,
    rs: RuleSet,
) -> Result<(VertexSet, Vec<RuleApplication>), DpError> {
    let n = g.n();
    let mut gamma_v = vec![BOT; n];
    let mut phi_v = vec![BOT; n];
    let mut target = vec![usize::MAX; n];
    let mut arcs: HashSet<(u32, u32)> = HashSet::new();
    let mut stack = vec![(nice.root(), best)];
    while let Some((t, i)) = stack.pop() {
        let node = &nice.nodes[t];
        let table = &tables[t];
        let s = table.sig(i);
        let bag = &table.bag;
        let ev = |e: usize| (2 * bag[e / 2] + e % 2) as u32;
        for a in 0..s.events() {
            let mut row = s.rows[a];
            while row != 0 {
                let b = row.trailing_zeros() as usize;
                row &= row - 1;
                arcs.insert((ev(a), ev(b)));
            }
        }
        let prov = table.prov[i];
        if let NodeKind::Rule(v) = node.kind {
            let p = bag.binary_search(&v).unwrap();
            gamma_v[v] = s.gamma_of(p);
            phi_v[v] = s.phi_of(p);
            if prov.f != NONE {
                target[bag[prov.f as usize]] = v;
            }
            if prov.g != NONE {
                target[v] = bag[prov.g as usize];
            }
        }
        match node.children.len() {
            0 => {}
            1 => stack.push((node.children[0], prov.a as usize)),
            _ => {
                stack.push((node.children[0], prov.a as usize));
                stack.push((node.children[1], prov.b as usize));
            }
        }
    }

    // Kahn's algorithm over events 2v (v turns blue) and 2v + 1 (v acts).
    let m = 2 * n;
    let mut out: Vec<Vec<u32>> = vec![Vec::new(); m];
    let mut indeg = vec![0usize; m];
    for &(a, b) in &arcs {
        out[a as usize].push(b);
        indeg[b as usize] += 1;
    }
    let exists = |e: usize| e.is_multiple_of(2) || phi_v[e / 2] != BOT;
    let priority = |e: usize| {
        let v = e / 2;
        let class = if e.is_multiple_of(2) && gamma_v[v] == BOT { 0 } else { 1 };
        (class, v, e % 2)
    };
    let mut heap = BinaryHeap::new();
    for e in (0..m).filter(|&e| exists(e) && indeg[e] == 0) {
        heap.push(Reverse(priority(e)));
    }
    let mut pos = vec![usize::MAX; m];
    let mut emitted = 0;
    let mut ready_now: Vec<usize> = Vec::new();
    let release = |e: usize, indeg: &mut Vec<usize>, ready: &mut Vec<usize>| {
        for &b in &out[e] {
            indeg[b as usize] -= 1;
            if indeg[b as usize] == 0 {
                ready.push(b as usize);
            }
        }
    };
    while let Some(Reverse((_, v, kind))) = heap.pop() {
        let e = 2 * v + kind;
        if pos[e] != usize::MAX {
            continue;
        }
        pos[e] = emitted;
        emitted += 1;
        ready_now.clear();
        release(e, &mut indeg, &mut ready_now);
        // Emit the forced vertex right after the forcing event when possible.
        if kind == 1 && target[v] != usize::MAX {
            let te = 2 * target[v];
            if indeg[te] == 0 && pos[te] == usize::MAX {
                pos[te] = emitted;
                emitted += 1;
                release(te, &mut indeg, &mut ready_now);
            }
        }
        for &r in &ready_now {
            if pos[r] == usize::MAX {
                heap.push(Reverse(priority(r)));
            }
        }
    }
    let total = (0..m).filter(|&e| exists(e)).count();
    if emitted != total {
        return Err(DpError::CyclicWitness);
    }

    let mut rules: Vec<(usize, RuleApplication)> = Vec::new();
    for v in 0..n {
        if target[v] != usize::MAX {
            let kind = if phi_v[v] == Z { crate::rules::Rule::Z } else { crate::rules::Rule::T };
            rules.push((pos[2 * v + 1], RuleApplication { kind, actor: v, target: target[v] }));
        }
        if gamma_v[v] == D {
            let at = if phi_v[v] == T { pos[2 * v] } else { pos[2 * v + 1] };
            rules.push((at, RuleApplication::d(v)));
        }
    }
    rules.sort_unstable_by_key(|&(p, _)| p);
    let trace: Vec<RuleApplication> = rules.into_iter().map(|(_, r)| r).collect();
    let set = VertexSet::from_iter(n, (0..n).filter(|&v| gamma_v[v] == BOT));
    replay(g, &set, &trace, rs).map_err(DpError::WitnessReplay)?;
    Ok((set, trace))
}
