//! Seeded random graphs. Every generator takes an explicit 64-bit seed and
//! uses ChaCha8, so outputs are identical across platforms.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use zforce_core::reductions::MccInstance;
use zforce_core::Graph;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi `G(n, p)`.
pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut r = rng(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if r.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("ids in range")
}

/// Uniform random recursive tree: vertex `v > 0` hangs below a uniformly
/// chosen earlier vertex, after a random relabelling.
pub fn random_tree(n: usize, seed: u64) -> Graph {
    let mut r = rng(seed);
    let mut label: Vec<usize> = (0..n).collect();
    label.shuffle(&mut r);
    let edges: Vec<(usize, usize)> = (1..n).map(|v| (label[r.gen_range(0..v)], label[v])).collect();
    Graph::from_edges(n, edges).expect("ids in range")
}

/// Random partial `k`-tree: a random `k`-tree on `n` vertices whose edges
/// are kept independently with probability `keep`. Treewidth is at most `k`.
pub fn partial_ktree(n: usize, k: usize, keep: f64, seed: u64) -> Graph {
    let mut r = rng(seed);
    let mut cliques: Vec<Vec<usize>> = Vec::new();
    let mut edges = Vec::new();
    let base = (k + 1).min(n);
    let first: Vec<usize> = (0..base).collect();
    for (i, &u) in first.iter().enumerate() {
        for &v in &first[i + 1..] {
            edges.push((u, v));
        }
    }
    if base == k + 1 {
        for skip in 0..base {
            cliques.push(first.iter().copied().filter(|&x| x != first[skip]).collect());
        }
    }
    for v in base..n {
        let c = cliques[r.gen_range(0..cliques.len())].clone();
        for &u in &c {
            edges.push((u, v));
        }
        for skip in 0..c.len() {
            let mut next: Vec<usize> = c.iter().copied().filter(|&x| x != c[skip]).collect();
            next.push(v);
            cliques.push(next);
        }
    }
    let mut label: Vec<usize> = (0..n).collect();
    label.shuffle(&mut r);
    let kept: Vec<(usize, usize)> =
        edges.into_iter().filter(|_| r.gen_bool(keep)).map(|(u, v)| (label[u], label[v])).collect();
    Graph::from_edges(n, kept).expect("ids in range")
}

/// Multicolored Clique instance with `k` classes of size `q`; each cross
/// pair is an edge with probability `p`. Class `i` holds ids `i*q..(i+1)*q`.
pub fn random_mcc(k: usize, q: usize, p: f64, seed: u64) -> MccInstance {
    let mut r = rng(seed);
    let mut edges = Vec::new();
    for u in 0..k * q {
        for v in u + 1..k * q {
            if u / q != v / q && r.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    let g = Graph::from_edges(k * q, edges).expect("ids in range");
    MccInstance::new(g, (0..k).map(|i| (i * q..(i + 1) * q).collect()).collect()).expect("valid classes")
}
