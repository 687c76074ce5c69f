//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so the lines always reach stdout. Any
//! disagreement between solver and oracle exits non-zero. A criterion whose
//! prescribed scope is not covered is reported as FAIL with the reason but
//! does not fail the run; `ZFORCE_FULL_N9=1` extends criterion 8 to every
//! graph on nine vertices (about a day on one core).

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use zforce::generate::{gnp, partial_ktree};
use zforce_core::dp::{solve_by_solution_size, solve_graph, SizeDecision};
use zforce_core::enumerate::{all_graphs, connected_graphs};
use zforce_core::graph::families::{caterpillar, complete, path};
use zforce_core::reductions::{
    audit_mcc, certify_mcc, corona_with_leaves, gd_to_osgtd, lgd_to_osgtd, mcc_to_osgtd, osgtd_to_cobipartite,
    osgtd_to_hypergraph, tgd_to_osgtd, MccInstance, OsgtdInstance,
};
use zforce_core::rules::{min_forcing_bruteforce, replay};
use zforce_core::sequence::{
    max_covering_bruteforce, max_sequence_bruteforce, max_sequence_bruteforce_with_limit, SequenceError,
};
use zforce_core::treedec::{exact_treewidth, ExactTreewidth, Heuristic};
use zforce_core::{Bipartition, Graph, RuleSet, SequenceVariant};

enum Verdict {
    Pass(String),
    /// Every check that ran agreed, but the prescribed scope was not covered.
    Short(String),
    /// A solver disagreed with its oracle.
    Fail(String),
}

type Check = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)*) => {
        if !$cond {
            return Err(format!($($fmt)*));
        }
    };
}

fn connected_range(lo: usize, hi: usize) -> Vec<Graph> {
    (lo..=hi).flat_map(|n| connected_graphs(n).unwrap()).collect()
}

fn treewidth(g: &Graph) -> usize {
    match exact_treewidth(g, None).unwrap() {
        ExactTreewidth::Width(w, _) => w,
        ExactTreewidth::Exceeds(_) => unreachable!("no bound given"),
    }
}

/// Smallest vertex cover by subset enumeration, kept apart from the library.
fn vertex_cover_oracle(g: &Graph) -> usize {
    let n = g.n();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    (0u32..1 << n)
        .filter(|s| edges.iter().all(|&(u, v)| s >> u & 1 == 1 || s >> v & 1 == 1))
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap()
}

fn criterion_1() -> Check {
    let pairs = [
        (SequenceVariant::Z, RuleSet::Z),
        (SequenceVariant::Gd, RuleSet::ZD),
        (SequenceVariant::Tgd, RuleSet::ZT),
        (SequenceVariant::L, RuleSet::ZTD),
        (SequenceVariant::LocalL, RuleSet::TD),
    ];
    let graphs = connected_range(2, 7);
    for g in &graphs {
        for (var, rs) in pairs {
            ensure!(var.rule_set() == rs, "{var} is paired with {} in the library", var.rule_set());
            let seq = max_sequence_bruteforce(g, var, None).unwrap().len();
            let k = min_forcing_bruteforce(g, rs).unwrap().k;
            ensure!(seq + k == g.n(), "{var}/{rs}: {seq} + {k} != {} on {g:?}", g.n());
        }
    }
    Ok(format!("{} connected graphs, 2 <= n <= 7, 5 pairings, tolerance 0", graphs.len()))
}

struct Replays {
    witnesses: usize,
    failures: usize,
}

impl Replays {
    fn check(&mut self, g: &Graph, rs: RuleSet, sol: &zforce_core::dp::DpSolution) -> Result<(), String> {
        self.witnesses += 1;
        let r = Self::replays(g, rs, sol);
        self.failures += usize::from(r.is_err());
        r
    }

    fn replays(g: &Graph, rs: RuleSet, sol: &zforce_core::dp::DpSolution) -> Result<(), String> {
        let (set, trace) = sol.witness.as_ref().ok_or("DP returned no witness")?;
        ensure!(set.len() == sol.k, "{rs}: |S| = {} but k = {} on {g:?}", set.len(), sol.k);
        replay(g, set, trace, rs).map_err(|e| format!("{rs}: witness does not replay ({e}) on {g:?}"))
    }
}

fn random_sample() -> Vec<Graph> {
    let mut out = Vec::new();
    for seed in 0..240u64 {
        let n = 6 + (seed % 5) as usize;
        out.push(match seed % 4 {
            0 => gnp(n, 0.25, seed),
            1 => partial_ktree(n, 1, 1.0, seed),
            2 => partial_ktree(n, 2, 0.8, seed),
            _ => partial_ktree(n, 3, 0.6, seed),
        });
    }
    out
}

fn criterion_2(replays: &mut Replays) -> Check {
    let exhaustive = connected_range(1, 7);
    let random = random_sample();
    for (i, g) in exhaustive.iter().chain(&random).enumerate() {
        for rs in RuleSet::all() {
            let sol = solve_graph(g, rs, Heuristic::MinFill).map_err(|e| format!("{rs}: {e} on {g:?}"))?;
            let brute = min_forcing_bruteforce(g, rs).unwrap().k;
            ensure!(sol.k == brute, "graph #{i}, {rs}: DP {} vs brute force {brute} on {g:?}", sol.k);
            replays.check(g, rs, &sol)?;
        }
    }
    Ok(format!(
        "{} connected graphs n <= 7 and {} seeded random graphs 6 <= n <= 10, 7 rule sets, tolerance 0",
        exhaustive.len(),
        random.len()
    ))
}

fn criterion_4() -> Check {
    let mut count = 0;
    for n in 1..=8 {
        for g in all_graphs(n).unwrap() {
            count += 1;
            let d = min_forcing_bruteforce(&g, RuleSet::D).unwrap().k;
            ensure!(d == vertex_cover_oracle(&g), "{{D}} minimum {d} is not the vertex cover number of {g:?}");
            if g.m() > 0 {
                let t = min_forcing_bruteforce(&g, RuleSet::T).unwrap().k;
                ensure!(t == n, "{{T}} minimum {t} < n on {g:?}");
            }
        }
    }
    Ok(format!("{count} graphs n <= 8, exact"))
}

fn criterion_5(replays: &mut Replays) -> Check {
    for seed in 0..20u64 {
        let n = 3 + (seed % 6) as usize;
        let base = gnp(n, 0.4, 1000 + seed);
        let c = corona_with_leaves(&base);
        for rs in [RuleSet::ZT, RuleSet::TD] {
            let sol = solve_graph(&c, rs, Heuristic::MinFill).map_err(|e| e.to_string())?;
            ensure!(sol.k == 0, "corona of {base:?} needs {} under {rs}", sol.k);
            replays.check(&c, rs, &sol)?;
        }
        let (tb, tc) = (treewidth(&base), treewidth(&c));
        ensure!(tc >= tb, "tw(corona) {tc} < tw(base) {tb} for {base:?}");
    }
    Ok("20 seeded bases 3 <= n <= 8: k_min = 0 under {Z,T} and {T,D}; exact treewidth never drops".into())
}

/// `Some(clique exists)` when certified, `None` when the gadget is beyond the
/// search guard and only the audit ran.
fn mcc_check(inst: &MccInstance) -> Result<Option<bool>, String> {
    let red = mcc_to_osgtd(inst);
    audit_mcc(inst, &red).map_err(|e| e.to_string())?;
    let k = inst.k();
    ensure!(red.instance.target == (2 * k + 1) * k + (2 * k + 1) * k * (k - 1) / 2 + 1, "target formula");
    let cert = match certify_mcc(inst, &red, 128) {
        Ok(c) => c,
        Err(SequenceError::Guard(_)) => return Ok(None),
        Err(e) => return Err(e.to_string()),
    };
    ensure!(cert.sound(), "clique {:?} but sequence {:?}", cert.clique, cert.sequence);
    if let Some(seq) = &cert.sequence {
        ensure!(seq.len() >= red.instance.target, "certifying sequence too short");
    }
    Ok(Some(cert.clique.is_some()))
}

fn pattern_instance(k: usize, q: usize, pairs: &[(usize, usize)], bits: u64) -> MccInstance {
    let mut edges = Vec::new();
    let mut b = 0;
    for &(i, j) in pairs {
        for p in 0..q {
            for r in 0..q {
                if bits >> b & 1 == 1 {
                    edges.push((i * q + p, j * q + r));
                }
                b += 1;
            }
        }
    }
    let g = Graph::from_edges(k * q, edges).unwrap();
    MccInstance::new(g, (0..k).map(|i| (i * q..(i + 1) * q).collect()).collect()).unwrap()
}

/// Seeded k = 3, q = 2 pattern with exactly `edges` of the 12 cross pairs.
fn seeded_pattern(seed: u64, edges: usize) -> MccInstance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let chosen = rand::seq::index::sample(&mut rng, 12, edges);
    let bits = chosen.iter().fold(0u64, |b, i| b | 1 << i);
    pattern_instance(3, 2, &[(0, 1), (0, 2), (1, 2)], bits)
}

fn criterion_6() -> Check {
    let mut instances = Vec::new();
    for q in 1..=2 {
        for bits in 0..1u64 << (q * q) {
            instances.push(pattern_instance(2, q, &[(0, 1)], bits));
        }
    }
    for bits in 0..8 {
        instances.push(pattern_instance(3, 1, &[(0, 1), (0, 2), (1, 2)], bits));
    }
    for seed in 0..12 {
        instances.push(seeded_pattern(500 + seed, 5));
    }
    let (mut yes, mut no, mut audited) = (0, 0, 0);
    for inst in &instances {
        match mcc_check(inst)? {
            Some(true) => yes += 1,
            Some(false) => no += 1,
            None => audited += 1,
        }
    }
    Ok(format!(
        "{} instances (k=2 all patterns q<=2, k=3 q=1 all 8, k=3 q=2 12 seeded with 5 cross edges): {yes} YES and {no} NO certified, {audited} audit only; all audits pass, tolerance 0",
        instances.len()
    ))
}

fn criterion_7() -> Check {
    let one_sided = |inst: &OsgtdInstance| -> usize {
        max_sequence_bruteforce_with_limit(&inst.graph, SequenceVariant::Tgd, Some(&inst.sides.a), 24).unwrap().len()
    };
    let sources: Vec<Graph> = connected_range(2, 6);
    for g in &sources {
        for (var, inst) in [
            (SequenceVariant::Gd, gd_to_osgtd(g, 0)),
            (SequenceVariant::Tgd, tgd_to_osgtd(g, 0)),
            (SequenceVariant::L, lgd_to_osgtd(g, 0)),
        ] {
            let inst = inst.map_err(|e| e.to_string())?;
            let direct = max_sequence_bruteforce(g, var, None).unwrap().len();
            ensure!(one_sided(&inst) == direct, "bipartite lift of {var} changes the maximum on {g:?}");
        }
    }
    let mut bipartite = 0;
    for g in &sources {
        let Some(sides) = Bipartition::two_color(g) else { continue };
        bipartite += 1;
        let inst = OsgtdInstance { graph: g.clone(), sides, target: 1 };
        let m = one_sided(&inst);
        let b = max_sequence_bruteforce(g, SequenceVariant::Tgd, Some(&inst.sides.b)).unwrap().len();
        let whole = max_sequence_bruteforce(g, SequenceVariant::Tgd, None).unwrap().len();
        ensure!(m == b && m + b == whole, "sides {m}/{b} vs whole {whole} on {g:?}");
        for var in [SequenceVariant::Gd, SequenceVariant::Z] {
            let (c, _) = osgtd_to_cobipartite(&inst, var).map_err(|e| e.to_string())?;
            ensure!(max_sequence_bruteforce(&c, var, None).unwrap().len() == m, "{var} co-bipartite lift on {g:?}");
        }
        for var in [SequenceVariant::Tgd, SequenceVariant::L] {
            let (c, _) = osgtd_to_cobipartite(&inst, var).map_err(|e| e.to_string())?;
            ensure!(max_sequence_bruteforce(&c, var, None).unwrap().len() == m + 4, "{var} co-bipartite lift on {g:?}");
        }
        let h = osgtd_to_hypergraph(&inst);
        ensure!(max_covering_bruteforce(&h, 16).unwrap().len() == m, "hypergraph lift on {g:?}");
    }
    Ok(format!(
        "{} connected sources 2 <= n <= 6 for the bipartite lifts, {bipartite} bipartite ones for the co-bipartite, hypergraph and side checks, exact",
        sources.len()
    ))
}

fn wrapper_agrees(g: &Graph, stats: &mut [usize; 3]) -> Check {
    for rs in [RuleSet::Z, RuleSet::ZD] {
        let k = min_forcing_bruteforce(g, rs).unwrap().k;
        match solve_by_solution_size(g, k, rs).map_err(|e| e.to_string())? {
            SizeDecision::Yes { set, trace } => {
                ensure!(set.len() <= k, "{rs}: YES set larger than {k}");
                replay(g, &set, &trace, rs).map_err(|e| format!("{rs}: {e} on {g:?}"))?;
                stats[0] += 1;
            }
            other => return Err(format!("{rs}, k = {k}: {other:?} on {g:?}")),
        }
        if k > 0 {
            match solve_by_solution_size(g, k - 1, rs).map_err(|e| e.to_string())? {
                SizeDecision::TreewidthExceeds => stats[1] += 1,
                SizeDecision::MinimumLarger => stats[2] += 1,
                SizeDecision::Yes { .. } => return Err(format!("{rs}, k = {}: YES below the minimum on {g:?}", k - 1)),
            }
        }
    }
    Ok(String::new())
}

fn criterion_8() -> Result<Verdict, String> {
    let k5 = solve_by_solution_size(&complete(5), 2, RuleSet::Z).map_err(|e| e.to_string())?;
    ensure!(k5 == SizeDecision::TreewidthExceeds, "K5, k = 2 gave {k5:?}");
    let mut stats = [0usize; 3];
    let mut count = 0;
    for n in 1..=8 {
        for g in all_graphs(n).unwrap() {
            wrapper_agrees(&g, &mut stats)?;
            count += 1;
        }
    }
    let full = std::env::var_os("ZFORCE_FULL_N9").is_some();
    let stride = if full { 1 } else { 500 };
    let nine = all_graphs(9).unwrap();
    let mut sampled = 0;
    for g in nine.iter().step_by(stride) {
        wrapper_agrees(g, &mut stats)?;
        sampled += 1;
    }
    let detail = format!(
        "K5 k=2 -> treewidth NO; all {count} graphs n <= 8 and {sampled} of {} graphs n = 9 at k_min and k_min - 1 for {{Z}}, {{Z,D}}: {} YES, {} NO by treewidth, {} NO by DP",
        nine.len(),
        stats[0],
        stats[1],
        stats[2]
    );
    Ok(if full {
        Verdict::Pass(detail)
    } else {
        Verdict::Short(format!(
            "{detail}; n = 9 is sampled every {stride}th graph since the exhaustive sweep takes about 22 h on one core"
        ))
    })
}

fn time_solve(g: &Graph) -> Result<Duration, String> {
    let mut best = Duration::MAX;
    for _ in 0..3 {
        let t = Instant::now();
        let sol = solve_graph(g, RuleSet::Z, Heuristic::MinDegree).map_err(|e| e.to_string())?;
        best = best.min(t.elapsed());
        let (set, trace) = sol.witness.expect("witness");
        replay(g, &set, &trace, RuleSet::Z).map_err(|e| e.to_string())?;
    }
    Ok(best)
}

const SCALING_LIMIT: Duration = Duration::from_secs(60);
/// Allowed t(10^4) / t(10^3): ten times the n log n growth factor, rounded up.
const SCALING_RATIO: f64 = 15.0;

fn criterion_9() -> Check {
    let mut parts = Vec::new();
    for (name, small, large) in
        [("path", path(1_000), path(10_000)), ("caterpillar", caterpillar(500, 1), caterpillar(5_000, 1))]
    {
        let (ts, tl) = (time_solve(&small)?, time_solve(&large)?);
        ensure!(tl < SCALING_LIMIT, "{name} n = 10^4 took {tl:?}");
        let ratio = tl.as_secs_f64() / ts.as_secs_f64();
        if ratio > SCALING_RATIO {
            return Err(format!("{name}: t(10^4)/t(10^3) = {ratio:.1} > {SCALING_RATIO}"));
        }
        parts.push(format!("{name} {:.3}s -> {:.3}s (x{ratio:.1})", ts.as_secs_f64(), tl.as_secs_f64()));
    }
    Ok(format!("{}; limits 60 s and ratio {SCALING_RATIO}", parts.join(", ")))
}

fn timed(f: impl FnOnce() -> Result<Verdict, String>) -> (Verdict, Duration) {
    let t = Instant::now();
    let v = f().unwrap_or_else(Verdict::Fail);
    (v, t.elapsed())
}

fn main() -> ExitCode {
    let mut replays = Replays { witnesses: 0, failures: 0 };
    let mut failed = false;
    let mut emit = |id: u32, name: &str, (v, took): (Verdict, Duration)| {
        failed |= matches!(v, Verdict::Fail(_));
        println!("{}", report(id, name, &v, took));
    };
    emit(1, "duality identities", timed(|| criterion_1().map(Verdict::Pass)));
    emit(2, "DP equals brute force", timed(|| criterion_2(&mut replays).map(Verdict::Pass)));
    emit(4, "vertex cover and {T}", timed(|| criterion_4().map(Verdict::Pass)));
    emit(5, "corona", timed(|| criterion_5(&mut replays).map(Verdict::Pass)));
    let v3 = if replays.failures == 0 && replays.witnesses > 0 {
        Verdict::Pass(format!("{} DP witnesses from criteria 2 and 5 replayed, |S| = k_min each", replays.witnesses))
    } else {
        Verdict::Fail(format!("{} of {} witnesses failed", replays.failures, replays.witnesses))
    };
    emit(3, "witness replay", (v3, Duration::ZERO));
    emit(6, "MCC reduction", timed(|| criterion_6().map(Verdict::Pass)));
    emit(7, "reduction sweeps", timed(|| criterion_7().map(Verdict::Pass)));
    emit(8, "solution-size wrapper", timed(criterion_8));
    emit(9, "scaling sanity", timed(|| criterion_9().map(Verdict::Pass)));
    if failed {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}

fn report(id: u32, name: &str, v: &Verdict, took: Duration) -> String {
    let (tag, detail) = match v {
        Verdict::Pass(d) => ("PASS", d),
        Verdict::Short(d) => ("FAIL", d),
        Verdict::Fail(d) => ("FAIL", d),
    };
    format!("criterion {id} {tag} [{name}] {detail} ({:.1}s)", took.as_secs_f64())
}
