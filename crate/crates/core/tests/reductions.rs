use zforce_core::enumerate::connected_graphs;
use zforce_core::graph::families::{complete_bipartite, path};
use zforce_core::reductions::{
    audit_mcc, certify_mcc, corona_with_leaves, gd_to_osgtd, lgd_to_osgtd, mcc_to_osgtd, osgtd_to_cobipartite,
    osgtd_to_hypergraph, tgd_to_osgtd, MccInstance, OsgtdInstance,
};
use zforce_core::sequence::{max_covering_bruteforce, max_sequence_bruteforce, verify_sequence};
use zforce_core::treedec::{exact_treewidth, ExactTreewidth};
use zforce_core::{Bipartition, Graph, SequenceVariant, VertexSet};

fn one_sided(inst: &OsgtdInstance) -> usize {
    max_sequence_bruteforce(&inst.graph, SequenceVariant::Tgd, Some(&inst.sides.a)).unwrap().len()
}

/// Five-by-five example: matching a_i b_i, a_4 joined to all of B, a_5 b_4.
fn ladder_with_hub() -> OsgtdInstance {
    let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, 5 + i)).collect();
    edges.extend((0..5).filter(|&j| j != 3).map(|j| (3, 5 + j)));
    edges.push((4, 8));
    OsgtdInstance::new(Graph::from_edges(10, edges).unwrap(), VertexSet::from_iter(10, 0..5), 1).unwrap()
}

#[test]
fn lifts_to_one_sided_preserve_maxima() {
    for n in 2..=5 {
        for g in connected_graphs(n).unwrap() {
            let cases = [
                (SequenceVariant::Gd, gd_to_osgtd(&g, 0).unwrap()),
                (SequenceVariant::Tgd, tgd_to_osgtd(&g, 0).unwrap()),
                (SequenceVariant::L, lgd_to_osgtd(&g, 0).unwrap()),
            ];
            for (var, inst) in cases {
                let direct = max_sequence_bruteforce(&g, var, None).unwrap().len();
                assert_eq!(one_sided(&inst), direct, "{var} on {g:?}");
            }
        }
    }
}

fn bipartite_samples() -> Vec<OsgtdInstance> {
    let mut out = Vec::new();
    for n in 2..=6 {
        for g in connected_graphs(n).unwrap() {
            if let Some(sides) = Bipartition::two_color(&g) {
                out.push(OsgtdInstance { graph: g, sides, target: 1 });
            }
        }
    }
    out
}

#[test]
fn sides_and_whole_graph_agree() {
    for inst in bipartite_samples() {
        let a = one_sided(&inst);
        let b = max_sequence_bruteforce(&inst.graph, SequenceVariant::Tgd, Some(&inst.sides.b)).unwrap().len();
        let whole = max_sequence_bruteforce(&inst.graph, SequenceVariant::Tgd, None).unwrap().len();
        assert_eq!((a, b), (whole / 2, whole / 2), "{:?}", inst.graph);
    }
}

#[test]
fn cobipartite_lifts() {
    let mut samples = bipartite_samples();
    samples.push(ladder_with_hub());
    for inst in samples {
        let m = one_sided(&inst);
        for var in [SequenceVariant::Gd, SequenceVariant::Z] {
            let (g, _) = osgtd_to_cobipartite(&inst, var).unwrap();
            assert_eq!(max_sequence_bruteforce(&g, var, None).unwrap().len(), m, "{var} on {:?}", inst.graph);
        }
        for var in [SequenceVariant::Tgd, SequenceVariant::L] {
            let (g, k) = osgtd_to_cobipartite(&inst, var).unwrap();
            assert_eq!(k, inst.target + 4);
            assert_eq!(max_sequence_bruteforce(&g, var, None).unwrap().len(), m + 4, "{var} on {:?}", inst.graph);
        }
        let h = osgtd_to_hypergraph(&inst);
        assert_eq!(max_covering_bruteforce(&h, 16).unwrap().len(), m);
    }
}

#[test]
fn ladder_with_hub_example() {
    let inst = ladder_with_hub();
    // a_4 and a_5 both reach b_4 and b_5, so all five never fit.
    assert_eq!(one_sided(&inst), 4);
    let (g, _) = osgtd_to_cobipartite(&inst, SequenceVariant::Gd).unwrap();
    assert_eq!(max_sequence_bruteforce(&g, SequenceVariant::Gd, None).unwrap().len(), 4);
    // Without the padding vertices the total variant overshoots.
    verify_sequence(&g, &[0, 1, 2, 8, 9], SequenceVariant::Tgd).unwrap();
    verify_sequence(&g, &[0, 1, 2, 8, 9], SequenceVariant::L).unwrap();
    let h = osgtd_to_hypergraph(&inst);
    assert_eq!((h.vertex_count(), h.edges().len()), (5, 5));
}

#[test]
fn mcc_k2_all_patterns() {
    for q in 1..=2usize {
        for pattern in 0u32..1 << (q * q) {
            let edges: Vec<(usize, usize)> =
                (0..q * q).filter(|b| pattern >> b & 1 == 1).map(|b| (b / q, q + b % q)).collect();
            let g = Graph::from_edges(2 * q, edges).unwrap();
            let inst = MccInstance::new(g, vec![(0..q).collect(), (q..2 * q).collect()]).unwrap();
            let red = mcc_to_osgtd(&inst);
            audit_mcc(&inst, &red).unwrap();
            let cert = certify_mcc(&inst, &red, 128).unwrap();
            assert!(cert.sound(), "q={q} pattern={pattern:b}");
            if let Some(seq) = cert.sequence {
                assert!(seq.len() >= red.instance.target);
            }
        }
    }
}

#[test]
fn corona_forces_for_free() {
    for g in [path(4), complete_bipartite(2, 3), Graph::empty(3)] {
        let c = corona_with_leaves(&g);
        assert_eq!(c.n(), 2 * g.n());
        for v in 0..g.n() {
            assert_eq!(c.degree(v + g.n()), 1);
        }
        let tw = |h: &Graph| match exact_treewidth(h, None).unwrap() {
            ExactTreewidth::Width(w, _) => w,
            ExactTreewidth::Exceeds(_) => unreachable!(),
        };
        assert!(tw(&c) >= tw(&g));
    }
}
