//! Minimum R-forcing sets by dynamic programming over a nice tree
//! decomposition, for every non-empty rule set R.
//!
//! Each tree node keeps a table of signatures. A signature fixes, for every
//! bag vertex, the rule that colors it (`Γ`, `⊥` for members of the forcing
//! set) and the rule it applies (`Φ`), flags recording whether the partner
//! of each has been chosen, and a dependency digraph over the events "v
//! turns blue" and "v applies its rule". A signature is valid while that
//! digraph is acyclic.

pub mod dep;
mod reconstruct;
pub mod signature;

use alloc::vec::Vec;

use crate::graph::{Graph, VertexSet};
use crate::rules::{ReplayError, RuleApplication, RuleSet};
use crate::treedec::{
    exact_treewidth, heuristic_decomposition, make_nice, ExactTreewidth, Heuristic, NiceTd, NiceViolation, NodeKind,
    TdViolation,
};
use crate::GuardExceeded;
use signature::{
    process_forget, process_introduce, process_join, process_leaf, process_rule, Budget, BudgetExceeded, Demand, Table,
    MAX_BAG,
};

/// Default cap on signatures stored over a whole run.
pub const DEFAULT_BUDGET: usize = 1 << 24;

#[derive(Debug, Clone)]
pub struct DpOptions {
    pub budget: usize,
    /// Keep every table for witness reconstruction. When off, child tables
    /// are dropped as soon as their parent is built and only `k` is reported.
    pub keep_witness: bool,
    /// Merge signatures with equal keys (keeping the lighter one).
    pub dedup: bool,
}

impl Default for DpOptions {
    fn default() -> Self {
        DpOptions { budget: DEFAULT_BUDGET, keep_witness: true, dedup: true }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DpError {
    #[error("bag of {size} vertices exceeds the supported {limit}")]
    BagTooLarge { size: usize, limit: usize },
    #[error("invalid nice decomposition: {0}")]
    InvalidDecomposition(#[from] NiceViolation),
    #[error("invalid tree decomposition: {0}")]
    InvalidTreeDecomposition(#[from] TdViolation),
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
    #[error("reconstructed witness does not replay: {0}")]
    WitnessReplay(ReplayError),
    #[error("reconstructed dependency graph has a cycle")]
    CyclicWitness,
    #[error("rule set {0} is not supported by the solution-size algorithm (only z and zd)")]
    UnsupportedRuleSet(RuleSet),
    #[error(transparent)]
    Guard(#[from] GuardExceeded),
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DpStats {
    pub nodes: usize,
    pub signatures: usize,
    pub largest_table: usize,
}

/// Minimum forcing set size, with a witness set and trace when requested.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DpSolution {
    pub k: usize,
    pub witness: Option<(VertexSet, Vec<RuleApplication>)>,
    pub stats: DpStats,
}

pub fn solve(g: &Graph, nice: &NiceTd, rs: RuleSet) -> Result<DpSolution, DpError> {
    solve_with(g, nice, rs, &DpOptions::default())
}

pub fn solve_with(g: &Graph, nice: &NiceTd, rs: RuleSet, opts: &DpOptions) -> Result<DpSolution, DpError> {
    Ok(run(g, nice, rs, opts, u32::MAX)?.expect("the full vertex set is always a forcing set"))
}

/// Runs the DP keeping only partial solutions of weight at most `cap`;
/// `None` when no forcing set fits.
fn run(g: &Graph, nice: &NiceTd, rs: RuleSet, opts: &DpOptions, cap: u32) -> Result<Option<DpSolution>, DpError> {
    nice.check(g)?;
    let widest = nice.width() + 1;
    if widest > MAX_BAG {
        return Err(DpError::BagTooLarge { size: widest, limit: MAX_BAG });
    }
    let demands = demands(g, nice);
    let mut budget = Budget::new(opts.budget);
    let mut tables: Vec<Option<Table>> = Vec::with_capacity(nice.len());
    let mut stats = DpStats { nodes: nice.len(), ..DpStats::default() };
    for (node, demand) in nice.nodes.iter().zip(&demands) {
        let table = match node.kind {
            NodeKind::Leaf => process_leaf(opts.dedup, cap, &mut budget)?,
            NodeKind::Introduce(v) => {
                process_introduce(child(&tables, node.children[0]), &node.bag, v, rs, demand, &mut budget)?
            }
            NodeKind::Rule(v) => {
                let nb: Vec<usize> =
                    g.neighbors(v).iter().copied().filter(|w| node.bag.binary_search(w).is_ok()).collect();
                process_rule(child(&tables, node.children[0]), v, &nb, demand, &mut budget)?
            }
            NodeKind::Forget(v) => process_forget(child(&tables, node.children[0]), v, &mut budget)?,
            NodeKind::Join => {
                let (l, r) = (child(&tables, node.children[0]), child(&tables, node.children[1]));
                process_join(l, r, demand, &mut budget)?
            }
        };
        stats.largest_table = stats.largest_table.max(table.len());
        if !opts.keep_witness {
            for &c in &node.children {
                tables[c] = None;
            }
        }
        tables.push(Some(table));
    }
    stats.signatures = budget.used;
    let root = tables[nice.root()].as_ref().expect("root table");
    let Some((best, k)) = root.min_weight() else {
        return Ok(None);
    };
    let witness = if opts.keep_witness {
        let tables: Vec<Table> = tables.into_iter().map(|t| t.expect("kept")).collect();
        Some(reconstruct::witness(g, nice, &tables, best, rs)?)
    } else {
        None
    };
    Ok(Some(DpSolution { k: k as usize, witness, stats }))
}

/// Per node, the bag vertices all of whose neighbors occur in the subtree.
/// Counts of such neighbors follow the node kinds: an introduced vertex sees
/// only bag neighbors below it, and the two sides of a join share exactly
/// the bag.
fn demands(g: &Graph, nice: &NiceTd) -> Vec<Demand> {
    let mut counts: Vec<Vec<u32>> = Vec::with_capacity(nice.len());
    let mut out = Vec::with_capacity(nice.len());
    for node in &nice.nodes {
        let bag = &node.bag;
        let in_bag = |v: usize| g.neighbors(v).iter().filter(|w| bag.binary_search(w).is_ok()).count() as u32;
        let inherited = |c: usize, v: usize| counts[c][nice.nodes[c].bag.binary_search(&v).expect("kept vertex")];
        let cnt: Vec<u32> = match node.kind {
            NodeKind::Leaf => Vec::new(),
            NodeKind::Introduce(u) => bag
                .iter()
                .map(|&v| if v == u { in_bag(u) } else { inherited(node.children[0], v) + u32::from(g.adjacent(u, v)) })
                .collect(),
            NodeKind::Rule(_) | NodeKind::Forget(_) => bag.iter().map(|&v| inherited(node.children[0], v)).collect(),
            NodeKind::Join => bag
                .iter()
                .map(|&v| inherited(node.children[0], v) + inherited(node.children[1], v) - in_bag(v))
                .collect(),
        };
        let mut demand = Demand::default();
        for (q, &v) in bag.iter().enumerate() {
            if cnt[q] as usize == g.degree(v) {
                demand.closed |= 1 << q;
            }
            demand.adj.push(bag.iter().enumerate().filter(|&(_, &w)| g.adjacent(v, w)).fold(0, |m, (i, _)| m | 1 << i));
        }
        counts.push(cnt);
        out.push(demand);
    }
    out
}

fn child(tables: &[Option<Table>], c: usize) -> &Table {
    tables[c].as_ref().expect("child table present")
}

/// Decomposes with the given heuristic and solves.
pub fn solve_graph(g: &Graph, rs: RuleSet, strategy: Heuristic) -> Result<DpSolution, DpError> {
    let td = heuristic_decomposition(g, strategy);
    let nice = make_nice(g, &td)?;
    solve(g, &nice, rs)
}

/// Answer of [`solve_by_solution_size`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SizeDecision {
    Yes {
        set: VertexSet,
        trace: Vec<RuleApplication>,
    },
    /// Treewidth exceeds `k`, so no forcing set of size `k` exists.
    TreewidthExceeds,
    /// The minimum forcing set is larger than `k`.
    MinimumLarger,
}

impl SizeDecision {
    pub fn is_yes(&self) -> bool {
        matches!(self, SizeDecision::Yes { .. })
    }
}

/// Decides whether a Z- or ZD-forcing set of size at most `k` exists. A
/// graph with such a set has pathwidth, hence treewidth, at most `k`; the
/// DP then runs on a decomposition of width at most `k`, dropping partial
/// solutions heavier than `k`.
pub fn solve_by_solution_size(g: &Graph, k: usize, rs: RuleSet) -> Result<SizeDecision, DpError> {
    if rs != RuleSet::Z && rs != RuleSet::ZD {
        return Err(DpError::UnsupportedRuleSet(rs));
    }
    let td = match exact_treewidth(g, Some(k))? {
        ExactTreewidth::Exceeds(_) => return Ok(SizeDecision::TreewidthExceeds),
        ExactTreewidth::Width(_, td) => td,
    };
    let nice = make_nice(g, &td)?;
    let cap = u32::try_from(k).unwrap_or(u32::MAX);
    match run(g, &nice, rs, &DpOptions::default(), cap)? {
        Some(sol) => {
            let (set, trace) = sol.witness.expect("witness kept");
            Ok(SizeDecision::Yes { set, trace })
        }
        None => Ok(SizeDecision::MinimumLarger),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use crate::rules::{min_forcing_bruteforce, replay};
    use crate::treedec::TreeDecomposition;

    fn check_against_bruteforce(g: &Graph) {
        check_rule_sets(g, RuleSet::all());
    }

    fn check_rule_sets(g: &Graph, sets: impl Iterator<Item = RuleSet>) {
        for rs in sets {
            let sol = solve_graph(g, rs, Heuristic::MinFill).unwrap();
            let brute = min_forcing_bruteforce(g, rs).unwrap();
            assert_eq!(sol.k, brute.k, "{rs} on {g:?}");
            let (set, trace) = sol.witness.unwrap();
            assert_eq!(set.len(), sol.k);
            replay(g, &set, &trace, rs).unwrap();
        }
    }

    #[test]
    fn small_families_match_bruteforce() {
        for g in [path(1), path(2), path(5), cycle(4), cycle(5), complete(4), star(4)] {
            check_against_bruteforce(&g);
        }
        check_rule_sets(&petersen(), [RuleSet::Z, RuleSet::D, RuleSet::ZD, RuleSet::TD].into_iter());
    }

    #[test]
    fn isolated_vertices_and_forests() {
        check_against_bruteforce(&Graph::empty(3));
        check_against_bruteforce(&Graph::from_edges(5, [(0, 1), (2, 3)]).unwrap());
    }

    #[test]
    fn path_with_z_needs_one() {
        let sol = solve_graph(&path(5), RuleSet::Z, Heuristic::MinDegree).unwrap();
        assert_eq!(sol.k, 1);
    }

    #[test]
    fn decomposition_independence() {
        let g = cycle(6);
        let a = make_nice(&g, &heuristic_decomposition(&g, Heuristic::MinFill)).unwrap();
        let single = TreeDecomposition::new(alloc::vec![(0..6).collect()], alloc::vec![]);
        let b = make_nice(&g, &single).unwrap();
        for rs in RuleSet::all() {
            assert_eq!(solve(&g, &a, rs).unwrap().k, solve(&g, &b, rs).unwrap().k);
        }
    }

    #[test]
    fn dedup_is_lossless() {
        let g = cycle(5);
        let nice = make_nice(&g, &heuristic_decomposition(&g, Heuristic::MinFill)).unwrap();
        for rs in RuleSet::all() {
            let plain = DpOptions { dedup: false, keep_witness: false, ..DpOptions::default() };
            assert_eq!(solve(&g, &nice, rs).unwrap().k, solve_with(&g, &nice, rs, &plain).unwrap().k);
        }
    }

    #[test]
    fn budget_exhaustion_is_an_error() {
        let g = complete(5);
        let nice = make_nice(&g, &heuristic_decomposition(&g, Heuristic::MinFill)).unwrap();
        let opts = DpOptions { budget: 10, ..DpOptions::default() };
        assert!(matches!(solve_with(&g, &nice, RuleSet::ZTD, &opts), Err(DpError::Budget(_))));
    }

    #[test]
    fn solution_size_wrapper() {
        assert_eq!(solve_by_solution_size(&complete(5), 2, RuleSet::Z).unwrap(), SizeDecision::TreewidthExceeds);
        let SizeDecision::Yes { set, trace } = solve_by_solution_size(&path(10), 1, RuleSet::Z).unwrap() else {
            panic!("expected YES")
        };
        assert_eq!(set.len(), 1);
        replay(&path(10), &set, &trace, RuleSet::Z).unwrap();
        assert!(matches!(solve_by_solution_size(&path(3), 1, RuleSet::ZT), Err(DpError::UnsupportedRuleSet(_))));
        assert_eq!(solve_by_solution_size(&cycle(5), 1, RuleSet::Z).unwrap(), SizeDecision::TreewidthExceeds);
        assert_eq!(solve_by_solution_size(&petersen(), 4, RuleSet::Z).unwrap(), SizeDecision::MinimumLarger);
    }
}
