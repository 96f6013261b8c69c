//! Constructive translations between split graphs, posets, threshold
//! families and interval families.

use crate::bitset::{bit, Bits};
use crate::error::{invalid, Error, Result};
use crate::graphs::{
    intersect_graphs, is_complete_split_graph, is_interval, is_threshold, normalize_interval_rep,
    recognize_interval, recognize_split, Graph, IntervalRep, SplitPartition, MAX_VERTICES,
};
use crate::posets::{characteristic_poset, is_realizer, LinearExtension, Poset, Realizer};
use crate::solvers::{FactorKind, IntersectionRep, ThresholdCover};

fn same_size(g: &Graph, h: &Graph, what: &str) -> Result<()> {
    if g.n() != h.n() {
        return invalid(format!("{what} has {} vertices, expected {}", h.n(), g.n()));
    }
    Ok(())
}

/// Threshold graph between a split graph and a threshold supergraph, with the
/// same independent side as `g`.
///
/// Independent vertices keep only their `g_sup`-neighbors inside `K(g)`; the
/// clique side stays a clique.
pub fn threshold_sandwich(g: &Graph, part: &SplitPartition, g_sup: &Graph) -> Result<Graph> {
    part.validate(g)?;
    same_size(g, g_sup, "supergraph")?;
    if !g.is_subgraph_of(g_sup) {
        return invalid("g is not a subgraph of the supergraph");
    }
    if !is_threshold(g_sup) {
        return invalid("supergraph is not threshold");
    }
    let k = part.clique_mask();
    let mut h = Graph::new(g.n())?;
    for (u, v) in g.edges().filter(|&(u, v)| k & bit(u) != 0 && k & bit(v) != 0) {
        h.add_edge(u, v);
    }
    for &u in &part.independent {
        for v in Bits(g_sup.neighbors(u) & k) {
            h.add_edge(u, v);
        }
    }
    if !is_threshold(&h) {
        return Err(Error::Internal("threshold sandwich produced a non-threshold graph".into()));
    }
    Ok(h)
}

/// Whether `rep` is a valid intersection representation of `g`.
pub(crate) fn validate_rep(g: &Graph, rep: &IntersectionRep, kind: FactorKind) -> Result<()> {
    if rep.kind != kind {
        return invalid(format!("expected {} factors, found {}", kind.name(), rep.kind.name()));
    }
    if rep.factors.is_empty() {
        return invalid("representation has no factors");
    }
    for f in &rep.factors {
        same_size(g, f, "factor")?;
    }
    if !crate::verify::check_intersection(g, rep) {
        return invalid(format!("factors are not {} supergraphs intersecting to g", kind.name()));
    }
    Ok(())
}

/// Realizer of the characteristic poset of `g` with one extension per
/// threshold factor.
///
/// Each factor is first cut down by [`threshold_sandwich`]. For an element
/// `X` (a neighborhood in `g`) let `f(X)` be the least factor neighborhood of
/// an independent vertex that contains `X`; these form a chain. Elements are
/// ordered by `f`, and within equal `f` by a topological sort of the poset
/// that prefers the lexicographically smaller neighborhood.
pub fn realizer_from_threshold_cover(g: &Graph, part: &SplitPartition, rep: &IntersectionRep) -> Result<Realizer> {
    validate_rep(g, rep, FactorKind::Threshold)?;
    let cp = characteristic_poset(g, part)?;
    let m = cp.poset.n();
    let mut exts = Vec::with_capacity(rep.factors.len());
    for t in &rep.factors {
        let t = threshold_sandwich(g, part, t)?;
        let family: Vec<u64> = part.independent.iter().map(|&u| t.neighbors(u)).collect();
        let f: Vec<u64> = cp
            .element_of
            .iter()
            .map(|&x| {
                family
                    .iter()
                    .copied()
                    .filter(|&y| x & !y == 0)
                    .min_by_key(|y| y.count_ones())
                    .ok_or_else(|| Error::Internal("element has no covering neighborhood".into()))
            })
            .collect::<Result<_>>()?;
        let mut classes: Vec<u64> = f.clone();
        classes.sort_by_key(|y| y.count_ones());
        classes.dedup();
        let mut order = Vec::with_capacity(m);
        for class in classes {
            let members: Vec<usize> = (0..m).filter(|&x| f[x] == class).collect();
            order.extend(topo_by_neighborhood(&cp.poset, &members, |x| cp.neighborhood(x)));
        }
        exts.push(LinearExtension(order));
    }
    let r = Realizer(exts);
    if m > 0 && !is_realizer(&cp.poset, &r) {
        return Err(Error::Internal("constructed extensions do not realize the poset".into()));
    }
    Ok(r)
}

/// Topological order of `members` under `p`, taking the available element
/// with the smallest key each time.
fn topo_by_neighborhood<K: Ord>(p: &Poset, members: &[usize], key: impl Fn(usize) -> K) -> Vec<usize> {
    let mut left: Vec<usize> = members.to_vec();
    let mut out = Vec::with_capacity(left.len());
    while !left.is_empty() {
        let (i, _) = left
            .iter()
            .enumerate()
            .filter(|&(_, &x)| !left.iter().any(|&y| p.lt(y, x)))
            .min_by_key(|&(_, &x)| key(x))
            .expect("a finite poset has a minimal element");
        out.push(left.remove(i));
    }
    out
}

/// Split interval graph between `g` and the interval graph of `g_sup_rep`,
/// with the same independent side as `g`, and its representation.
///
/// The supergraph representation is normalized to distinct endpoints and
/// scaled by `|I| + 1`; clique vertices keep their intervals and each
/// independent vertex becomes a distinct point in the common part of its own
/// interval and those of its neighbors.
pub fn split_interval_sandwich(
    g: &Graph,
    part: &SplitPartition,
    g_sup_rep: &IntervalRep,
) -> Result<(Graph, IntervalRep)> {
    part.validate(g)?;
    if g_sup_rep.n() != g.n() {
        return invalid("representation size does not match g");
    }
    let g_sup = g_sup_rep.graph();
    if !g.is_subgraph_of(&g_sup) {
        return invalid("g is not a subgraph of the supergraph");
    }
    let norm = normalize_interval_rep(g_sup_rep);
    let scale = part.independent.len() as i64 + 1;
    let mut iv: Vec<(i64, i64)> = norm.intervals.iter().map(|&(l, r)| (l * scale, r * scale)).collect();
    for (idx, &v) in part.independent.iter().enumerate() {
        let group = g.neighbors(v) | bit(v);
        let lo = Bits(group).map(|x| norm.left(x)).max().expect("nonempty");
        let hi = Bits(group).map(|x| norm.right(x)).min().expect("nonempty");
        if lo >= hi {
            return Err(Error::Internal(format!("no common point for vertex {v} and its neighbors")));
        }
        let point = lo * scale + idx as i64 + 1;
        iv[v] = (point, point);
    }
    let rep = IntervalRep::new(iv)?;
    let h = rep.graph();
    if !(g.is_subgraph_of(&h) && h.is_subgraph_of(&g_sup) && h.is_independent(part.independent_mask())) {
        return Err(Error::Internal("interval sandwich violated its bounds".into()));
    }
    Ok((h, rep))
}

/// Two threshold graphs intersecting to a split interval graph: one with every
/// clique interval stretched to the leftmost point, one to the rightmost.
pub fn two_threshold_cover(g: &Graph, part: &SplitPartition, rep: &IntervalRep) -> Result<(Graph, Graph)> {
    part.validate(g)?;
    if !rep.realizes(g) {
        return invalid("representation does not realize g");
    }
    let lmin = rep.intervals.iter().map(|iv| iv.0).min().unwrap_or(0);
    let rmax = rep.intervals.iter().map(|iv| iv.1).max().unwrap_or(0);
    let mut left = rep.intervals.clone();
    let mut right = rep.intervals.clone();
    for &u in &part.clique {
        left[u].0 = lmin;
        right[u].1 = rmax;
    }
    let g1 = IntervalRep::new(left)?.graph();
    let g2 = IntervalRep::new(right)?.graph();
    if !(is_threshold(&g1) && is_threshold(&g2)) {
        return Err(Error::Internal("stretched representation is not threshold".into()));
    }
    if intersect_graphs(&[g1.clone(), g2.clone()])? != *g {
        return Err(Error::Internal("stretched factors do not intersect to g".into()));
    }
    Ok((g1, g2))
}

/// Turns `k` interval supergraphs of a split graph into `2k` threshold
/// supergraphs with the same intersection.
pub fn box_to_threshold_cover(g: &Graph, part: &SplitPartition, rep: &IntersectionRep) -> Result<IntersectionRep> {
    validate_rep(g, rep, FactorKind::Interval)?;
    let mut factors = Vec::with_capacity(2 * rep.factors.len());
    for f in &rep.factors {
        let f_rep = recognize_interval(f)?.ok_or_else(|| Error::InvalidInput("factor is not interval".into()))?;
        let (h, h_rep) = split_interval_sandwich(g, part, &f_rep)?;
        let (t1, t2) = two_threshold_cover(&h, part, &h_rep)?;
        factors.push(t1);
        factors.push(t2);
    }
    Ok(IntersectionRep { kind: FactorKind::Threshold, factors })
}

/// Split graph whose characteristic poset is a given poset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PosetGraph {
    pub graph: Graph,
    pub partition: SplitPartition,
    /// `element[v]` is the poset element matched with clique vertex `v`.
    pub element: Vec<usize>,
}

impl PosetGraph {
    /// Independent vertex standing for element `x`.
    pub fn independent_vertex(&self, x: usize) -> usize {
        self.element.len() + x
    }
}

/// Clique vertices `0..N` stand for elements `0..N`, independent vertex `N+x`
/// for element `x`; `N+x` sees clique vertex `v` iff `v <= x`.
pub fn poset_to_split_graph(p: &Poset) -> Result<PosetGraph> {
    let n = p.n();
    if n == 0 {
        return invalid("poset has no elements");
    }
    if 2 * n > MAX_VERTICES {
        return invalid(format!("poset has {n} elements, at most {} supported", MAX_VERTICES / 2));
    }
    let mut g = Graph::new(2 * n)?;
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    for x in 0..n {
        for v in 0..n {
            if p.leq(v, x) {
                g.add_edge(n + x, v);
            }
        }
    }
    let partition = SplitPartition { clique: (0..n).collect(), independent: (n..2 * n).collect() };
    let cp = characteristic_poset(&g, &partition)?;
    if cp.poset != *p {
        return Err(Error::Internal("characteristic poset differs from the input".into()));
    }
    Ok(PosetGraph { graph: g, partition, element: (0..n).collect() })
}

/// One threshold graph per extension: `N+x` sees `v` iff `v` is not after `x`
/// in that extension.
pub fn threshold_graphs_from_realizer(p: &Poset, r: &Realizer) -> Result<IntersectionRep> {
    if !is_realizer(p, r) {
        return invalid("family is not a realizer of the poset");
    }
    let gp = poset_to_split_graph(p)?;
    let n = p.n();
    let mut factors = Vec::with_capacity(r.len());
    for ext in &r.0 {
        let pos = ext.positions().expect("checked by is_realizer");
        let mut t = Graph::new(2 * n)?;
        for u in 0..n {
            for v in u + 1..n {
                t.add_edge(u, v);
            }
        }
        for x in 0..n {
            for v in 0..n {
                if pos[v] <= pos[x] {
                    t.add_edge(n + x, v);
                }
            }
        }
        factors.push(t);
    }
    if intersect_graphs(&factors)? != gp.graph || !factors.iter().all(is_threshold) {
        return Err(Error::Internal("realizer factors do not intersect to the poset graph".into()));
    }
    Ok(IntersectionRep { kind: FactorKind::Threshold, factors })
}

/// The doubled split graph built from `h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GPrime {
    pub graph: Graph,
    pub partition: SplitPartition,
    /// Set when `h` is a complete split graph and `graph` is `h` itself.
    pub trivial_case: bool,
    /// Partition of the complement of `h`: clique `I(h)`, independent `K(h)`.
    pub base_partition: SplitPartition,
    /// Vertex of the first copy for each vertex of `h`.
    pub copy1: Vec<usize>,
    /// Vertex of the second copy for each vertex of `h`; empty when trivial.
    pub copy2: Vec<usize>,
}

/// `(old, new)` vertex pairs.
pub type VertexMap = Vec<(usize, usize)>;

impl GPrime {
    /// Maps for both copies, the first copy first.
    pub fn vertex_map(&self) -> (VertexMap, VertexMap) {
        let pairs = |c: &[usize]| c.iter().copied().enumerate().collect();
        (pairs(&self.copy1), pairs(&self.copy2))
    }
}

/// Builds the doubled graph from a split graph `h` on `n` vertices.
///
/// With `G` the complement of `h`, vertex `v` of `G` becomes `v` and `n + v`.
/// Each copy keeps its own edges, both clique sides are joined, and each
/// clique side is joined to the other copy's independent side. A complete
/// split `h` is returned unchanged.
pub fn split_to_gprime(h: &Graph) -> Result<GPrime> {
    let part = recognize_split(h)?
        .partition()
        .ok_or_else(|| Error::InvalidInput("h is not a split graph".into()))?;
    let base_partition = SplitPartition { clique: part.independent.clone(), independent: part.clique.clone() };
    let n = h.n();
    if is_complete_split_graph(h) {
        return Ok(GPrime {
            graph: h.clone(),
            partition: part,
            trivial_case: true,
            base_partition,
            copy1: (0..n).collect(),
            copy2: Vec::new(),
        });
    }
    if 2 * n > MAX_VERTICES {
        return invalid(format!("h has {n} vertices, at most {} supported", MAX_VERTICES / 2));
    }
    let g = h.complement();
    let k = base_partition.clique_mask();
    let i = base_partition.independent_mask();
    let mut gp = Graph::new(2 * n)?;
    for (u, v) in g.edges() {
        gp.add_edge(u, v);
        gp.add_edge(n + u, n + v);
    }
    for a in Bits(k) {
        for b in Bits(k) {
            gp.add_edge(a, n + b);
        }
        for b in Bits(i) {
            gp.add_edge(a, n + b);
            gp.add_edge(n + a, b);
        }
    }
    let clique: Vec<usize> = Bits(k).chain(Bits(k).map(|v| n + v)).collect();
    let partition = SplitPartition::from_clique_mask(2 * n, crate::bitset::from_slice(&clique));
    partition.validate(&gp)?;
    Ok(GPrime {
        graph: gp,
        partition,
        trivial_case: false,
        base_partition,
        copy1: (0..n).collect(),
        copy2: (n..2 * n).collect(),
    })
}

/// Interval graphs on the doubled graph, one per threshold factor of the
/// complement of `h`.
///
/// Factors are first cut down by [`threshold_sandwich`]. Independent vertices
/// of `G` are ranked `1..=|I|` by decreasing factor degree (ties by index);
/// a clique vertex gets the largest rank among its independent neighbors, or
/// 0. Copy one places independents at their rank and clique vertices on
/// `[-n, rank]`; copy two mirrors this.
pub fn interval_reps_from_threshold_cover(h: &Graph, factors: &[Graph]) -> Result<Vec<(Graph, IntervalRep)>> {
    let gp = split_to_gprime(h)?;
    if gp.trivial_case {
        return invalid("h is a complete split graph, so the doubled graph is h itself");
    }
    let g = h.complement();
    if factors.is_empty() {
        return invalid("no threshold factors given");
    }
    for t in factors {
        same_size(&g, t, "factor")?;
        if !is_threshold(t) {
            return invalid("factor is not threshold");
        }
    }
    if intersect_graphs(factors)? != g {
        return invalid("factors do not intersect to the complement of h");
    }
    let n = h.n();
    let base = &gp.base_partition;
    let mut out = Vec::with_capacity(factors.len());
    for t in factors {
        let t = threshold_sandwich(&g, base, t)?;
        let ranks = independent_ranks(&t, base);
        let mut iv = vec![(0i64, 0i64); 2 * n];
        for &u in &base.independent {
            let r = ranks[u];
            iv[gp.copy1[u]] = (r, r);
            iv[gp.copy2[u]] = (-r, -r);
        }
        for &u in &base.clique {
            let top = Bits(t.neighbors(u) & base.independent_mask()).map(|v| ranks[v]).max().unwrap_or(0);
            iv[gp.copy1[u]] = (-(n as i64), top);
            iv[gp.copy2[u]] = (-top, n as i64);
        }
        let rep = IntervalRep::new(iv)?;
        out.push((rep.graph(), rep));
    }
    Ok(out)
}

/// Same as [`interval_reps_from_threshold_cover`], taking a threshold cover of
/// `h` and complementing it.
pub fn interval_reps_from_cover(h: &Graph, cover: &ThresholdCover) -> Result<Vec<(Graph, IntervalRep)>> {
    let factors: Vec<Graph> = cover.0.iter().map(Graph::complement).collect();
    interval_reps_from_threshold_cover(h, &factors)
}

/// Rank `1..=|I|` of each independent vertex by decreasing degree in `t`.
pub(crate) fn independent_ranks(t: &Graph, part: &SplitPartition) -> Vec<i64> {
    let mut order = part.independent.clone();
    order.sort_by_key(|&u| (std::cmp::Reverse(t.degree(u)), u));
    let mut ranks = vec![0i64; t.n()];
    for (i, &u) in order.iter().enumerate() {
        ranks[u] = i as i64 + 1;
    }
    ranks
}

/// `part` is a valid split partition of `g` and `g` is interval.
pub fn is_split_interval(g: &Graph, part: &SplitPartition) -> bool {
    part.validate(g).is_ok() && is_interval(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{path, union_edges};
    use crate::posets::{poset_from_relation, standard_example};
    use crate::solvers::{boxicity, threshold_dimension, threshold_intersection_number, SearchConfig};

    fn p4_part() -> SplitPartition {
        SplitPartition { clique: vec![1, 2], independent: vec![0, 3] }
    }

    #[test]
    fn threshold_sandwich_is_tight_on_threshold_input() {
        let g = crate::graphs::star(3);
        let part = SplitPartition { clique: vec![0], independent: vec![1, 2, 3] };
        assert_eq!(threshold_sandwich(&g, &part, &g).unwrap(), g);
    }

    #[test]
    fn threshold_sandwich_on_p4() {
        let g = path(4);
        let mut sup = Graph::complete(4).unwrap();
        sup.remove_edge(0, 3);
        let h = threshold_sandwich(&g, &p4_part(), &sup).unwrap();
        assert!(g.is_subgraph_of(&h) && h.is_subgraph_of(&sup) && is_threshold(&h));
        assert!(h.is_independent(bit(0) | bit(3)));
    }

    #[test]
    fn threshold_sandwich_rejects_bad_inputs() {
        let g = path(4);
        let err = threshold_sandwich(&g, &p4_part(), &g).unwrap_err();
        assert!(err.to_string().contains("not threshold"), "{err}");
        let err = threshold_sandwich(&g, &p4_part(), &Graph::new(4).unwrap()).unwrap_err();
        assert!(err.to_string().contains("not a subgraph"), "{err}");
    }

    #[test]
    fn two_threshold_cover_on_p4() {
        let rep = IntervalRep::new(vec![(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let (g1, g2) = two_threshold_cover(&path(4), &p4_part(), &rep).unwrap();
        let mut e1 = path(4);
        e1.add_edge(0, 2);
        let mut e2 = path(4);
        e2.add_edge(1, 3);
        assert_eq!(g1, e1);
        assert_eq!(g2, e2);
    }

    #[test]
    fn split_interval_sandwich_between_p4_and_k4() {
        let g = path(4);
        let k4 = IntervalRep::new(vec![(0, 5); 4]).unwrap();
        let (h, rep) = split_interval_sandwich(&g, &p4_part(), &k4).unwrap();
        assert!(rep.realizes(&h));
        assert!(g.is_subgraph_of(&h) && is_split_interval(&h, &p4_part()));
    }

    #[test]
    fn box_to_threshold_on_p4() {
        let g = path(4);
        let rep = IntersectionRep { kind: FactorKind::Interval, factors: vec![g.clone()] };
        let out = box_to_threshold_cover(&g, &p4_part(), &rep).unwrap();
        assert_eq!(out.factors.len(), 2);
        assert_eq!(intersect_graphs(&out.factors).unwrap(), g);
    }

    #[test]
    fn realizer_from_p4_intersection() {
        let g = path(4);
        let (_, rep) = threshold_intersection_number(&g, &SearchConfig::graphs()).unwrap();
        let r = realizer_from_threshold_cover(&g, &p4_part(), &rep).unwrap();
        assert_eq!(r.len(), 2);
        assert!(is_realizer(&Poset::antichain(2).unwrap(), &r));
    }

    #[test]
    fn poset_graph_of_two_chain() {
        let p = Poset::chain(2).unwrap();
        let gp = poset_to_split_graph(&p).unwrap();
        assert_eq!(gp.graph.n(), 4);
        assert_eq!(gp.graph.neighbors(2), bit(0));
        assert_eq!(gp.graph.neighbors(3), bit(0) | bit(1));
        let single = poset_to_split_graph(&Poset::chain(1).unwrap()).unwrap();
        assert_eq!(single.graph, path(2));
    }

    #[test]
    fn realizer_factors_of_antichain() {
        let p = Poset::antichain(2).unwrap();
        let r = Realizer(vec![LinearExtension(vec![0, 1]), LinearExtension(vec![1, 0])]);
        let rep = threshold_graphs_from_realizer(&p, &r).unwrap();
        assert_eq!(rep.factors.len(), 2);
        assert_eq!(intersect_graphs(&rep.factors).unwrap(), poset_to_split_graph(&p).unwrap().graph);
        let chain = poset_from_relation(3, &[(0, 1), (1, 2)]).unwrap();
        let single = Realizer(vec![LinearExtension(vec![0, 1, 2])]);
        let rep = threshold_graphs_from_realizer(&chain, &single).unwrap();
        assert_eq!(rep.factors, vec![poset_to_split_graph(&chain).unwrap().graph]);
    }

    #[test]
    fn standard_example_graph_needs_three() {
        let gp = poset_to_split_graph(&standard_example(3).unwrap()).unwrap();
        let cfg = SearchConfig::graphs().with_max_n(12);
        assert_eq!(threshold_dimension(&gp.graph.complement(), &cfg).unwrap().0, 3);
    }

    #[test]
    fn gprime_of_p4() {
        let h = path(4);
        let gp = split_to_gprime(&h).unwrap();
        assert!(!gp.trivial_case);
        assert_eq!(gp.graph.n(), 8);
        let (t, cover) = threshold_dimension(&h, &SearchConfig::graphs()).unwrap();
        assert_eq!(t, 2);
        assert_eq!(union_edges(&cover.0).unwrap(), h);
        let reps = interval_reps_from_cover(&h, &cover).unwrap();
        let graphs: Vec<Graph> = reps.iter().map(|(g, _)| g.clone()).collect();
        assert!(graphs.iter().all(is_interval));
        assert_eq!(intersect_graphs(&graphs).unwrap(), gp.graph);
        assert_eq!(boxicity(&gp.graph, &SearchConfig::graphs()).unwrap().0, 2);
    }

    #[test]
    fn gprime_of_complete_split_is_trivial() {
        let h = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let gp = split_to_gprime(&h).unwrap();
        assert!(gp.trivial_case);
        assert_eq!(gp.graph, h);
        assert!(split_to_gprime(&crate::graphs::cycle(4)).is_err());
    }
}
