//! Exhaustive enumeration of small graphs up to isomorphism.
//!
//! Graphs on `n` vertices are grown from those on `n - 1` by adding a vertex
//! with every possible neighborhood and keeping one representative per
//! canonical code. Canonical codes come from color refinement with
//! individualization, skipping branches that only swap twin vertices.

use alloc::vec;
use alloc::vec::Vec;

use hashbrown::HashSet;

use crate::graph::Graph;
use crate::GuardExceeded;

/// Largest vertex count supported by [`canonical_code`] (the upper triangle
/// of the adjacency matrix must fit in 64 bits).
pub const CANON_LIMIT: usize = 11;

fn code_of(adj: &[u16], order: &[usize]) -> u64 {
    // order[i] = vertex placed at position i
    let n = order.len();
    let mut code = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            code = code << 1 | u64::from(adj[order[i]] >> order[j] & 1);
        }
    }
    code
}

/// Stable color refinement: colors are ranks of (old color, sorted neighbor
/// colors) until the number of classes stops growing.
fn refine(adj: &[u16], colors: &mut [usize]) {
    let n = colors.len();
    loop {
        let classes_before = count_classes(colors);
        let mut sigs: Vec<(usize, Vec<usize>, usize)> = (0..n)
            .map(|v| {
                let mut ns: Vec<usize> = (0..n).filter(|&w| adj[v] >> w & 1 == 1).map(|w| colors[w]).collect();
                ns.sort_unstable();
                (colors[v], ns, v)
            })
            .collect();
        sigs.sort();
        let mut rank = 0;
        for i in 0..n {
            if i > 0 && (sigs[i].0 != sigs[i - 1].0 || sigs[i].1 != sigs[i - 1].1) {
                rank = i;
            }
            colors[sigs[i].2] = rank;
        }
        if count_classes(colors) == classes_before {
            return;
        }
    }
}

fn count_classes(colors: &[usize]) -> usize {
    let mut seen: Vec<usize> = colors.to_vec();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

fn twins(adj: &[u16], u: usize, v: usize) -> bool {
    let mask = !(1u16 << u | 1u16 << v);
    adj[u] & mask == adj[v] & mask
}

fn search(adj: &[u16], colors: &mut [usize], best: &mut Option<u64>) {
    let n = colors.len();
    refine(adj, colors);
    // Cells are identified by color value; pick the first non-singleton.
    let mut by_color: Vec<Vec<usize>> = vec![Vec::new(); n];
    for v in 0..n {
        by_color[colors[v]].push(v);
    }
    let Some(cell) = by_color.iter().find(|c| c.len() > 1) else {
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| colors[v]);
        let code = code_of(adj, &order);
        if best.is_none_or(|b| code > b) {
            *best = Some(code);
        }
        return;
    };
    let all_twins = cell.iter().all(|&u| twins(adj, cell[0], u));
    let branches: Vec<usize> = if all_twins { vec![cell[0]] } else { cell.clone() };
    let base = colors[cell[0]];
    for v in branches {
        let mut next: Vec<usize> = colors.iter().map(|&c| if c > base { c + 1 } else { c }).collect();
        for &u in cell {
            if u != v {
                next[u] = base + 1;
            }
        }
        search(adj, &mut next, best);
    }
}

/// Isomorphism-invariant code of a graph with at most [`CANON_LIMIT`]
/// vertices; two graphs are isomorphic iff their codes (and orders) agree.
pub fn canonical_code(g: &Graph) -> Result<u64, GuardExceeded> {
    let n = g.n();
    if n > CANON_LIMIT {
        return Err(GuardExceeded { size: n, limit: CANON_LIMIT });
    }
    let adj: Vec<u16> = (0..n).map(|v| g.neighbors(v).iter().fold(0u16, |m, &w| m | 1 << w)).collect();
    Ok(canon_adj(&adj))
}

fn canon_adj(adj: &[u16]) -> u64 {
    let mut colors = vec![0; adj.len()];
    let mut best = None;
    search(adj, &mut colors, &mut best);
    best.unwrap_or(0)
}

fn from_adj(adj: &[u16]) -> Graph {
    let n = adj.len();
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).filter(move |&v| adj[u] >> v & 1 == 1).map(move |v| (u, v))))
        .expect("valid adjacency")
}

/// One graph per isomorphism class on exactly `n` vertices, ordered by
/// canonical code.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>, GuardExceeded> {
    if n > CANON_LIMIT.min(9) {
        return Err(GuardExceeded { size: n, limit: CANON_LIMIT.min(9) });
    }
    let mut level: Vec<Vec<u16>> = vec![Vec::new()];
    for m in 1..=n {
        let mut seen: HashSet<u64> = HashSet::new();
        let mut next: Vec<(u64, Vec<u16>)> = Vec::new();
        for adj in &level {
            for mask in 0u16..1 << (m - 1) {
                let mut grown = adj.clone();
                for (u, row) in grown.iter_mut().enumerate() {
                    *row |= (mask >> u & 1) << (m - 1);
                }
                grown.push(mask);
                let code = canon_adj(&grown);
                if seen.insert(code) {
                    next.push((code, grown));
                }
            }
        }
        next.sort_unstable_by_key(|(c, _)| *c);
        level = next.into_iter().map(|(_, a)| a).collect();
    }
    Ok(level.iter().map(|a| from_adj(a)).collect())
}

/// Connected graphs on exactly `n` vertices up to isomorphism.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>, GuardExceeded> {
    Ok(all_graphs(n)?.into_iter().filter(Graph::is_connected).collect())
}
