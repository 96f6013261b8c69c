//! Witness checkers, the factor classifier for the doubled graph, instance
//! generators, and named theorem suites.

use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bitset::{bit, from_slice, Bits};
use crate::error::{invalid, Error, Result};
use crate::graphs::{
    intersect_graphs, is_interval, is_split, is_threshold, is_unit_interval, recognize_interval,
    recognize_split, union_edges, Graph, IntervalRep, SplitPartition,
};
use crate::io::{write_graph, write_poset};
use crate::posets::{
    characteristic_poset, is_realizer, poset_dimension, poset_from_relation, Poset,
};
use crate::reductions::{
    box_to_threshold_cover, interval_reps_from_cover, poset_to_split_graph,
    realizer_from_threshold_cover, split_to_gprime, threshold_graphs_from_realizer,
    two_threshold_cover, GPrime,
};
use crate::solvers::{
    boxicity, cubicity, threshold_dimension, threshold_intersection_number, FactorKind,
    IntersectionRep, SearchConfig, ThresholdCover,
};

/// Every factor is a supergraph of `g` of the declared kind and the factors
/// intersect to `g`. An empty family represents nothing.
pub fn check_intersection(g: &Graph, rep: &IntersectionRep) -> bool {
    if rep.factors.is_empty() || rep.factors.iter().any(|f| f.n() != g.n()) {
        return false;
    }
    let kind_ok = |f: &Graph| match rep.kind {
        FactorKind::Interval => is_interval(f),
        FactorKind::UnitInterval => is_unit_interval(f),
        FactorKind::Threshold => is_threshold(f),
    };
    rep.factors.iter().all(|f| g.is_subgraph_of(f) && kind_ok(f))
        && intersect_graphs(&rep.factors).is_ok_and(|h| h == *g)
}

/// Every member is a threshold spanning subgraph and the edge union is `E(g)`.
pub fn check_cover(g: &Graph, cover: &ThresholdCover) -> bool {
    if cover.0.iter().any(|t| t.n() != g.n() || !t.is_subgraph_of(g) || !is_threshold(t)) {
        return false;
    }
    if cover.0.is_empty() {
        return g.edge_count() == 0;
    }
    union_edges(&cover.0).is_ok_and(|u| u == *g)
}

/// No member's edge set contains another's.
pub fn no_containment(graphs: &[Graph]) -> bool {
    graphs.iter().enumerate().all(|(i, a)| {
        graphs.iter().enumerate().all(|(j, b)| i == j || !a.is_subgraph_of(b))
    })
}

/// Position of the extreme independent intervals of an interval factor of
/// the doubled graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FactorCase {
    /// The doubled graph is `h` itself; there is nothing to classify.
    TrivialBypass,
    /// Leftmost in copy one, rightmost in copy two.
    LeftFirstRightSecond,
    /// Leftmost in copy two, rightmost in copy one.
    LeftSecondRightFirst,
    /// Both extremes in copy one.
    BothFirst,
    /// Both extremes in copy two.
    BothSecond,
}

impl FactorCase {
    /// Case number 1 to 4, or 0 for the bypass.
    pub fn number(self) -> u8 {
        match self {
            FactorCase::TrivialBypass => 0,
            FactorCase::LeftFirstRightSecond => 1,
            FactorCase::LeftSecondRightFirst => 2,
            FactorCase::BothFirst => 3,
            FactorCase::BothSecond => 4,
        }
    }
}

/// Classifies an interval supergraph of the doubled graph whose independent
/// side is that of the doubled graph, and checks what each case promises for
/// the two copies: both restrictions threshold when the extremes lie in
/// different copies; otherwise the copy without extremes is a complete split
/// graph and the other splits into two threshold graphs.
///
/// A broken promise is an [`Error::Internal`].
pub fn classify_factor(gp: &GPrime, factor_rep: &IntervalRep) -> Result<FactorCase> {
    if gp.trivial_case {
        return Ok(FactorCase::TrivialBypass);
    }
    let f = factor_rep.graph();
    if f.n() != gp.graph.n() || !gp.graph.is_subgraph_of(&f) {
        return invalid("factor is not a supergraph of the doubled graph");
    }
    let indep = gp.partition.independent_mask();
    if !f.is_independent(indep) {
        return invalid("factor does not keep the independent side independent");
    }
    let by_left = Bits(indep).min_by_key(|&v| (factor_rep.left(v), v)).expect("nonempty");
    let by_right = Bits(indep).max_by_key(|&v| (factor_rep.right(v), v)).expect("nonempty");
    let first = from_slice(&gp.copy1);
    let in_first = |v: usize| first & bit(v) != 0;
    let case = match (in_first(by_left), in_first(by_right)) {
        (true, false) => FactorCase::LeftFirstRightSecond,
        (false, true) => FactorCase::LeftSecondRightFirst,
        (true, true) => FactorCase::BothFirst,
        (false, false) => FactorCase::BothSecond,
    };
    let restrict = |copy: &[usize]| -> Result<(Graph, IntervalRep)> {
        let g = f.induced_subgraph(copy)?;
        let rep = IntervalRep::new(copy.iter().map(|&v| factor_rep.intervals[v]).collect())?;
        Ok((g, rep))
    };
    let one = restrict(&gp.copy1)?;
    let two = restrict(&gp.copy2)?;
    let base = &gp.base_partition;
    let complete_split = |g: &Graph| base.is_complete_split(g);
    let splits_in_two = |(g, rep): &(Graph, IntervalRep)| two_threshold_cover(g, base, rep).is_ok();
    let holds = match case {
        FactorCase::LeftFirstRightSecond | FactorCase::LeftSecondRightFirst => {
            is_threshold(&one.0) && is_threshold(&two.0)
        }
        FactorCase::BothFirst => complete_split(&two.0) && splits_in_two(&one),
        FactorCase::BothSecond => complete_split(&one.0) && splits_in_two(&two),
        FactorCase::TrivialBypass => true,
    };
    if !holds {
        return Err(Error::Internal(format!("factor case {} does not hold", case.number())));
    }
    Ok(case)
}

/// Random split graph: clique size uniform in `0..=n`, each clique-independent
/// pair present with probability `density`, then a random relabelling.
pub fn gen_random_split(n: usize, density: f64, seed: u64) -> Result<(Graph, SplitPartition)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_split(n, density, &mut rng)
}

fn check_density(density: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&density) {
        return invalid(format!("density {density} is outside [0, 1]"));
    }
    Ok(())
}

fn random_split(n: usize, density: f64, rng: &mut ChaCha8Rng) -> Result<(Graph, SplitPartition)> {
    check_density(density)?;
    if n == 0 {
        return invalid("graph needs at least one vertex");
    }
    let k = rng.gen_range(0..=n);
    let mut label: Vec<usize> = (0..n).collect();
    label.shuffle(rng);
    let mut g = Graph::new(n)?;
    for a in 0..k {
        for b in a + 1..k {
            g.add_edge(label[a], label[b]);
        }
        for b in k..n {
            if rng.gen_bool(density) {
                g.add_edge(label[a], label[b]);
            }
        }
    }
    let clique = from_slice(&label[..k]);
    Ok((g, SplitPartition::from_clique_mask(n, clique)))
}

/// Random poset: each pair of a random ordering becomes a relation with
/// probability `density`, then the transitive closure is taken.
pub fn gen_random_poset(n: usize, density: f64, seed: u64) -> Result<Poset> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_poset(n, density, &mut rng)
}

fn random_poset(n: usize, density: f64, rng: &mut ChaCha8Rng) -> Result<Poset> {
    check_density(density)?;
    if n == 0 {
        return invalid("poset needs at least one element");
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                pairs.push((perm[i], perm[j]));
            }
        }
    }
    poset_from_relation(n, &pairs)
}

/// Random split interval graph: clique vertices get intervals through 0,
/// independent vertices distinct points.
pub fn gen_random_split_interval(n: usize, seed: u64) -> Result<(Graph, SplitPartition)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_split_interval(n, &mut rng)
}

fn random_split_interval(n: usize, rng: &mut ChaCha8Rng) -> Result<(Graph, SplitPartition)> {
    if n == 0 {
        return invalid("graph needs at least one vertex");
    }
    let k = rng.gen_range(0..=n);
    let span = n as i64 + 1;
    let mut points: Vec<i64> = (-span..=span).collect();
    points.shuffle(rng);
    let mut label: Vec<usize> = (0..n).collect();
    label.shuffle(rng);
    let mut iv = vec![(0i64, 0i64); n];
    for (i, &v) in label.iter().enumerate() {
        iv[v] = if i < k {
            (-rng.gen_range(0..=span), rng.gen_range(0..=span))
        } else {
            let p = points[i];
            (p, p)
        };
    }
    let g = IntervalRep::new(iv)?.graph();
    Ok((g, SplitPartition::from_clique_mask(n, from_slice(&label[..k]))))
}

/// All labeled graphs on `n` vertices, in order of their edge bitmask over
/// the lexicographic pair list.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let m = pairs.len();
    assert!(m < 32, "too many vertices to enumerate");
    (0u32..1 << m).map(move |mask| {
        let edges: Vec<(usize, usize)> = pairs.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, &e)| e).collect();
        Graph::from_edges(n, &edges).expect("enumerated edges are valid")
    })
}

/// All labeled split graphs on `n >= 1` vertices.
pub fn all_split_graphs(n: usize) -> impl Iterator<Item = Graph> {
    all_graphs(n).filter(is_split)
}

/// All labeled posets on `n` elements.
pub fn all_posets(n: usize) -> Vec<Poset> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v))).collect();
    let m = pairs.len();
    assert!(m < 32, "too many elements to enumerate");
    (0u32..1 << m)
        .filter_map(|mask| {
            let mut above = vec![0u64; n];
            for (i, &(u, v)) in pairs.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    above[u] |= bit(v);
                }
            }
            Poset::from_strict_rows(above).ok()
        })
        .collect()
}

/// Names accepted by [`verify_theorem`].
pub const THEOREM_IDS: [&str; 8] = [
    "charThresh",
    "charBox",
    "threshLB",
    "cor_dim",
    "cor_box",
    "splitIntThresh",
    "gprime_eq",
    "cub_bounds",
];

/// One instance that broke a claim, in the text format of its kind.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub instance: String,
    pub reason: String,
}

/// Outcome of a theorem suite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub theorem: String,
    pub instances: usize,
    pub failures: Vec<Failure>,
    /// Instances abandoned because an oracle hit its limits.
    pub skipped: Vec<Failure>,
    /// Witnesses re-validated along the way.
    pub witnesses_checked: usize,
    pub seed: u64,
    pub elapsed_ms: u64,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = format!(
            "theorem {}: {} ({} instances, {} failures, {} skipped, {} witnesses checked, seed {}, {} ms)\n",
            self.theorem,
            if self.passed() { "pass" } else { "FAIL" },
            self.instances,
            self.failures.len(),
            self.skipped.len(),
            self.witnesses_checked,
            self.seed,
            self.elapsed_ms
        );
        for (label, list) in [("failure", &self.failures), ("skipped", &self.skipped)] {
            for f in list.iter() {
                s.push_str(&format!("{label}: {}\n{}", f.reason, f.instance));
            }
        }
        s
    }
}

/// Exhaustive size bound baked into each suite.
fn exhaustive_bound(id: &str) -> usize {
    match id {
        "charThresh" | "charBox" | "splitIntThresh" => 5,
        "gprime_eq" => 4,
        "cub_bounds" => 6,
        _ => 4,
    }
}

enum Instance {
    Graph(Graph, Option<SplitPartition>),
    Poset(Poset),
}

impl Instance {
    fn text(&self) -> String {
        match self {
            Instance::Graph(g, _) => write_graph(g),
            Instance::Poset(p) => write_poset(p),
        }
    }
}

/// Outcome of checking one instance.
enum Verdict {
    Pass,
    Fail(String),
}

/// Per-instance bookkeeping shared by the suite bodies.
struct Tally {
    witnesses: usize,
}

impl Tally {
    fn witness(&mut self, ok: bool, what: &str) -> std::result::Result<(), String> {
        self.witnesses += 1;
        if ok {
            Ok(())
        } else {
            Err(format!("witness: {what}"))
        }
    }
}

/// Runs a named suite: exhaustive instances up to the suite's bound (capped
/// by `n_max`), then `samples` random instances. Random sizes are drawn above
/// the exhaustive bound when `n_max` allows, otherwise from `1..=n_max`.
///
/// Oracle limits are read from `cfg`; an instance that hits them is recorded
/// as skipped.
pub fn verify_theorem_with(id: &str, n_max: usize, samples: usize, seed: u64, cfg: &SearchConfig) -> Result<TheoremReport> {
    if !THEOREM_IDS.contains(&id) {
        return invalid(format!("unknown theorem `{id}`; valid ids: {}", THEOREM_IDS.join(", ")));
    }
    if n_max == 0 {
        return invalid("n_max must be at least 1");
    }
    let start = Instant::now();
    let instances = build_instances(id, n_max, samples, seed)?;
    let mut tally = Tally { witnesses: 0 };
    let mut failures = Vec::new();
    let mut skipped = Vec::new();
    for inst in &instances {
        match check_instance(id, inst, cfg, &mut tally) {
            Ok(Verdict::Pass) => {}
            Ok(Verdict::Fail(reason)) => failures.push(Failure { instance: inst.text(), reason }),
            Err(e @ (Error::Timeout { .. } | Error::Capacity { .. })) => {
                skipped.push(Failure { instance: inst.text(), reason: e.to_string() })
            }
            Err(e) => failures.push(Failure { instance: inst.text(), reason: e.to_string() }),
        }
    }
    Ok(TheoremReport {
        theorem: id.to_string(),
        instances: instances.len(),
        failures,
        skipped,
        witnesses_checked: tally.witnesses,
        seed,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

/// [`verify_theorem_with`] using oracle limits large enough for every suite
/// and the timeout from `DIMKIT_TIMEOUT_MS` when set.
pub fn verify_theorem(id: &str, n_max: usize, samples: usize, seed: u64) -> Result<TheoremReport> {
    let cfg = SearchConfig::graphs().with_max_n(crate::graphs::MAX_VERTICES).with_env_timeout();
    verify_theorem_with(id, n_max, samples, seed, &cfg)
}

fn build_instances(id: &str, n_max: usize, samples: usize, seed: u64) -> Result<Vec<Instance>> {
    let bound = exhaustive_bound(id).min(n_max);
    let poset_side = matches!(id, "threshLB" | "cor_dim" | "cor_box");
    let mut out = Vec::new();
    for n in 1..=bound {
        if poset_side {
            out.extend(all_posets(n).into_iter().map(Instance::Poset));
        } else if id == "cub_bounds" {
            out.extend(all_graphs(n).map(|g| Instance::Graph(g, None)));
        } else if id == "splitIntThresh" {
            out.extend(all_split_graphs(n).filter(is_interval).map(|g| Instance::Graph(g, None)));
        } else {
            out.extend(all_split_graphs(n).map(|g| Instance::Graph(g, None)));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sizes = if n_max > bound { bound + 1..=n_max } else { 1..=n_max };
    for _ in 0..samples {
        let n = rng.gen_range(sizes.clone());
        let density: f64 = rng.gen_range(0.0..=1.0);
        let inst = if poset_side {
            Instance::Poset(random_poset(n, density, &mut rng)?)
        } else if id == "cub_bounds" {
            let mut g = Graph::new(n)?;
            for (u, v) in Graph::complete(n)?.edges() {
                if rng.gen_bool(density) {
                    g.add_edge(u, v);
                }
            }
            Instance::Graph(g, None)
        } else if id == "splitIntThresh" {
            let (g, part) = random_split_interval(n, &mut rng)?;
            Instance::Graph(g, Some(part))
        } else {
            let (g, part) = random_split(n, density, &mut rng)?;
            Instance::Graph(g, Some(part))
        };
        out.push(inst);
    }
    Ok(out)
}

fn check_instance(id: &str, inst: &Instance, cfg: &SearchConfig, tally: &mut Tally) -> Result<Verdict> {
    let verdict = match inst {
        Instance::Poset(p) => match id {
            "threshLB" => check_thresh_lb(p, cfg, tally)?,
            "cor_dim" => check_cor_dim(p, cfg, tally)?,
            _ => check_cor_box(p, cfg, tally)?,
        },
        Instance::Graph(g, part) => {
            let part = match part {
                Some(p) => p.clone(),
                None if id == "cub_bounds" => SplitPartition { clique: vec![], independent: vec![] },
                None => recognize_split(g)?
                    .partition()
                    .ok_or_else(|| Error::Internal("enumerated graph is not split".into()))?,
            };
            match id {
                "charThresh" => check_char_thresh(g, &part, cfg, tally, false)?,
                "charBox" => check_char_thresh(g, &part, cfg, tally, true)?,
                "splitIntThresh" => check_split_int_thresh(g, &part, cfg, tally)?,
                "gprime_eq" => check_gprime_eq(g, cfg, tally)?,
                _ => check_cub_bounds(g, cfg, tally)?,
            }
        }
    };
    Ok(match verdict {
        Ok(()) => Verdict::Pass,
        Err(reason) => Verdict::Fail(reason),
    })
}

type Check = std::result::Result<(), String>;

fn claim(ok: bool, what: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

/// Minimum realizer, re-validated.
fn dimension(p: &Poset, cfg: &SearchConfig, tally: &mut Tally) -> Result<std::result::Result<usize, String>> {
    let (d, r) = poset_dimension(p, cfg)?;
    Ok(tally.witness(r.len() == d && is_realizer(p, &r), "poset realizer").map(|_| d))
}

/// Threshold intersection number with its witness and the complementary
/// cover re-validated.
fn tint(g: &Graph, cfg: &SearchConfig, tally: &mut Tally) -> Result<std::result::Result<(usize, IntersectionRep), String>> {
    let (t, rep) = threshold_intersection_number(g, cfg)?;
    let cover = ThresholdCover(rep.factors.iter().map(Graph::complement).collect());
    let checked = tally
        .witness(check_intersection(g, &rep) && rep.factors.len() == t, "threshold intersection")
        .and_then(|_| {
            if g.is_complete() {
                Ok(())
            } else {
                let co = g.complement();
                tally.witness(check_cover(&co, &cover) && no_containment(&cover.0), "threshold cover of the complement")
            }
        });
    Ok(checked.map(|_| (t, rep)))
}

fn boxi(g: &Graph, cfg: &SearchConfig, tally: &mut Tally) -> Result<std::result::Result<(usize, IntersectionRep), String>> {
    let (b, rep) = boxicity(g, cfg)?;
    Ok(tally.witness(check_intersection(g, &rep) && rep.factors.len() == b, "interval intersection").map(|_| (b, rep)))
}

fn check_thresh_lb(p: &Poset, cfg: &SearchConfig, tally: &mut Tally) -> Result<Check> {
    let d = match dimension(p, cfg, tally)? {
        Ok(d) => d,
        Err(e) => return Ok(Err(e)),
    };
    let (_, r) = poset_dimension(p, cfg)?;
    let gp = poset_to_split_graph(p)?;
    let rep = threshold_graphs_from_realizer(p, &r)?;
    if let Err(e) = tally.witness(check_intersection(&gp.graph, &rep), "threshold graphs from realizer") {
        return Ok(Err(e));
    }
    Ok(claim(rep.factors.len() == d, || format!("{} factors from a realizer of size {d}", rep.factors.len())))
}

fn check_cor_dim(p: &Poset, cfg: &SearchConfig, tally: &mut Tally) -> Result<Check> {
    let d = match dimension(p, cfg, tally)? {
        Ok(d) => d,
        Err(e) => return Ok(Err(e)),
    };
    let gp = poset_to_split_graph(p)?;
    let (t, rep) = match tint(&gp.graph, cfg, tally)? {
        Ok(x) => x,
        Err(e) => return Ok(Err(e)),
    };
    let r = realizer_from_threshold_cover(&gp.graph, &gp.partition, &rep)?;
    if let Err(e) = tally.witness(r.len() == t && is_realizer(p, &r), "realizer from threshold factors") {
        return Ok(Err(e));
    }
    Ok(claim(d == t, || format!("dim(P) = {d} but t(complement of G_P) = {t}")))
}

fn check_cor_box(p: &Poset, cfg: &SearchConfig, tally: &mut Tally) -> Result<Check> {
    let d = match dimension(p, cfg, tally)? {
        Ok(d) => d,
        Err(e) => return Ok(Err(e)),
    };
    let gp = poset_to_split_graph(p)?;
    let (b, _) = match boxi(&gp.graph, cfg, tally)? {
        Ok(x) => x,
        Err(e) => return Ok(Err(e)),
    };
    Ok(claim(b <= d, || format!("boxi(G_P) = {b} exceeds dim(P) = {d}")))
}

fn check_char_thresh(g: &Graph, part: &SplitPartition, cfg: &SearchConfig, tally: &mut Tally, with_box: bool) -> Result<Check> {
    let cp = characteristic_poset(g, part)?;
    let d = match dimension(&cp.poset, cfg, tally)? {
        Ok(d) => d,
        Err(e) => return Ok(Err(e)),
    };
    let (t, rep) = match tint(g, cfg, tally)? {
        Ok(x) => x,
        Err(e) => return Ok(Err(e)),
    };
    let r = realizer_from_threshold_cover(g, part, &rep)?;
    let realizes = cp.poset.n() == 0 || is_realizer(&cp.poset, &r);
    if let Err(e) = tally.witness(r.len() == t && realizes, "realizer from threshold factors") {
        return Ok(Err(e));
    }
    if d > t {
        return Ok(Err(format!("dim(charposet) = {d} exceeds t(complement) = {t}")));
    }
    if !with_box {
        return Ok(Ok(()));
    }
    let (b, brep) = match boxi(g, cfg, tally)? {
        Ok(x) => x,
        Err(e) => return Ok(Err(e)),
    };
    let trep = box_to_threshold_cover(g, part, &brep)?;
    if let Err(e) = tally.witness(trep.factors.len() == 2 * b && check_intersection(g, &trep), "threshold factors from boxes") {
        return Ok(Err(e));
    }
    Ok(claim(t <= 2 * b, || format!("t(complement) = {t} exceeds 2 boxi = {}", 2 * b)))
}

fn check_split_int_thresh(g: &Graph, part: &SplitPartition, cfg: &SearchConfig, tally: &mut Tally) -> Result<Check> {
    let rep = recognize_interval(g)?.ok_or_else(|| Error::Internal("split interval instance is not interval".into()))?;
    let (g1, g2) = two_threshold_cover(g, part, &rep)?;
    let pair = IntersectionRep { kind: FactorKind::Threshold, factors: vec![g1, g2] };
    if let Err(e) = tally.witness(check_intersection(g, &pair), "two stretched threshold graphs") {
        return Ok(Err(e));
    }
    let (t, _) = match tint(g, cfg, tally)? {
        Ok(x) => x,
        Err(e) => return Ok(Err(e)),
    };
    Ok(claim(t <= 2, || format!("t(complement) = {t} exceeds 2")))
}

fn check_gprime_eq(h: &Graph, cfg: &SearchConfig, tally: &mut Tally) -> Result<Check> {
    let gp = split_to_gprime(h)?;
    let (t, cover) = threshold_dimension(h, cfg)?;
    if let Err(e) = tally.witness(check_cover(h, &cover) && no_containment(&cover.0), "threshold cover of h") {
        return Ok(Err(e));
    }
    let (b, brep) = match boxi(&gp.graph, cfg, tally)? {
        Ok(x) => x,
        Err(e) => return Ok(Err(e)),
    };
    if !gp.trivial_case {
        let reps = interval_reps_from_cover(h, &cover)?;
        let built = IntersectionRep { kind: FactorKind::Interval, factors: reps.iter().map(|(g, _)| g.clone()).collect() };
        let ranks_ok = reps.iter().all(|(_, rep)| ranks_respect_inclusion(&gp, rep));
        if let Err(e) = tally.witness(check_intersection(&gp.graph, &built) && ranks_ok, "interval factors built from the cover") {
            return Ok(Err(e));
        }
        for (_, rep) in &reps {
            classify_factor(&gp, rep)?;
        }
        for f in &brep.factors {
            let rep = recognize_interval(f)?.ok_or_else(|| Error::Internal("witness factor is not interval".into()))?;
            let (_, srep) = crate::reductions::split_interval_sandwich(&gp.graph, &gp.partition, &rep)?;
            classify_factor(&gp, &srep)?;
        }
    }
    Ok(claim(b == t, || {
        let note = if h.edge_count() == 0 { " (h has no edges)" } else { "" };
        format!("boxi(G') = {b} but t(h) = {t}{note}")
    }))
}

/// Strictly larger neighborhoods in a factor get strictly smaller ranks.
fn ranks_respect_inclusion(gp: &GPrime, rep: &IntervalRep) -> bool {
    let f = rep.graph();
    let indep: Vec<usize> = gp.base_partition.independent.iter().map(|&u| gp.copy1[u]).collect();
    let clique = from_slice(&gp.copy1) & gp.partition.clique_mask();
    indep.iter().all(|&u| {
        indep.iter().all(|&v| {
            let (nu, nv) = (f.neighbors(u) & clique, f.neighbors(v) & clique);
            let strict = nu & !nv == 0 && nu != nv;
            !strict || rep.left(u) > rep.left(v)
        })
    })
}

fn check_cub_bounds(g: &Graph, cfg: &SearchConfig, tally: &mut Tally) -> Result<Check> {
    let (b, _) = match boxi(g, cfg, tally)? {
        Ok(x) => x,
        Err(e) => return Ok(Err(e)),
    };
    let (c, crep) = cubicity(g, cfg)?;
    if let Err(e) = tally.witness(check_intersection(g, &crep) && crep.factors.len() == c, "unit interval intersection") {
        return Ok(Err(e));
    }
    let log = ceil_log2(g.n());
    if c < b {
        return Ok(Err(format!("cub = {c} is below boxi = {b}")));
    }
    Ok(claim(c <= b * log, || format!("cub = {c} exceeds boxi * ceil(log2 n) = {b} * {log}")))
}

/// `ceil(log2 n)` for `n >= 1`.
pub fn ceil_log2(n: usize) -> usize {
    if n <= 1 {
        0
    } else {
        (usize::BITS - (n - 1).leading_zeros()) as usize
    }
}
