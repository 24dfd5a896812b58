//! Interval-containment and simple-triangle models.
//!
//! Both model kinds are validated against a graph, converted into
//! 12-representants, and built from a vertex ordering by topologically
//! sorting a digraph on interval endpoints. Only the relative order of
//! coordinates matters anywhere in this module.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

use crate::error::{Error, Result};
use crate::graph::{Bipartition, Graph, Labeling, Side};
use crate::word::Word;

/// Per-vertex closed intervals on a line, with a bipartition. An `X` vertex
/// is adjacent to a `Y` vertex when its interval contains the other.
#[derive(Debug, Clone, PartialEq)]
pub struct IntervalModel {
    intervals: Vec<(f64, f64)>,
    bipartition: Bipartition,
}

impl IntervalModel {
    pub fn new(intervals: Vec<(f64, f64)>, bipartition: Bipartition) -> Result<Self> {
        if intervals.len() != bipartition.len() {
            return Err(Error::InvalidModel("bipartition size differs from interval count".into()));
        }
        check_intervals(&intervals)?;
        Ok(IntervalModel { intervals, bipartition })
    }

    pub fn n(&self) -> usize {
        self.intervals.len()
    }

    pub fn interval(&self, v: usize) -> (f64, f64) {
        self.intervals[v]
    }

    pub fn intervals(&self) -> &[(f64, f64)] {
        &self.intervals
    }

    pub fn bipartition(&self) -> &Bipartition {
        &self.bipartition
    }

    fn contains(&self, x: usize, y: usize) -> bool {
        let (lx, rx) = self.intervals[x];
        let (ly, ry) = self.intervals[y];
        lx < ly && ry < rx
    }

    /// The bigraph this model encodes.
    pub fn implied_graph(&self) -> Graph {
        let mut g = Graph::new(self.n());
        for x in self.bipartition.class(Side::X) {
            for y in self.bipartition.class(Side::Y) {
                if self.contains(x, y) {
                    g.add_edge(x, y).unwrap();
                }
            }
        }
        g
    }

    /// Applies `f` to every coordinate; `f` must be strictly increasing.
    pub fn map_coordinates(&self, f: impl Fn(f64) -> f64) -> Result<Self> {
        let intervals = self.intervals.iter().map(|&(l, r)| (f(l), f(r))).collect();
        IntervalModel::new(intervals, self.bipartition.clone())
    }
}

/// Per-vertex triangles spanned by an apex on an upper line and a base
/// interval on a lower line; triangles that meet are adjacent.
#[derive(Debug, Clone, PartialEq)]
pub struct TriangleModel {
    apex: Vec<f64>,
    base: Vec<(f64, f64)>,
}

impl TriangleModel {
    pub fn new(apex: Vec<f64>, base: Vec<(f64, f64)>) -> Result<Self> {
        if apex.len() != base.len() {
            return Err(Error::InvalidModel("apex and base counts differ".into()));
        }
        if apex.iter().any(|p| !p.is_finite()) {
            return Err(Error::InvalidModel("non-finite apex".into()));
        }
        let mut sorted = apex.clone();
        sorted.sort_by(f64::total_cmp);
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::DuplicateApex);
        }
        check_intervals(&base)?;
        Ok(TriangleModel { apex, base })
    }

    pub fn n(&self) -> usize {
        self.apex.len()
    }

    pub fn apex(&self, v: usize) -> f64 {
        self.apex[v]
    }

    pub fn base(&self, v: usize) -> (f64, f64) {
        self.base[v]
    }

    /// Whether the triangles of `u` and `v` meet. With `p_u < p_v` they are
    /// disjoint exactly when the base of `u` ends before the base of `v`
    /// starts.
    pub fn intersects(&self, u: usize, v: usize) -> bool {
        let (a, b) = if self.apex[u] < self.apex[v] { (u, v) } else { (v, u) };
        self.base[a].1 >= self.base[b].0
    }

    pub fn implied_graph(&self) -> Graph {
        let n = self.n();
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if self.intersects(u, v) {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        g
    }

    /// Applies `f_apex` to apexes and `f_base` to base endpoints; both must
    /// be strictly increasing.
    pub fn map_coordinates(&self, f_apex: impl Fn(f64) -> f64, f_base: impl Fn(f64) -> f64) -> Result<Self> {
        TriangleModel::new(
            self.apex.iter().map(|&p| f_apex(p)).collect(),
            self.base.iter().map(|&(l, r)| (f_base(l), f_base(r))).collect(),
        )
    }
}

fn check_intervals(intervals: &[(f64, f64)]) -> Result<()> {
    let mut seen = HashSet::new();
    for (v, &(l, r)) in intervals.iter().enumerate() {
        if !l.is_finite() || !r.is_finite() {
            return Err(Error::InvalidModel(format!("non-finite endpoint at vertex {}", v + 1)));
        }
        if l >= r {
            return Err(Error::InvalidModel(format!("empty interval at vertex {}", v + 1)));
        }
        for e in [l, r] {
            if !seen.insert(e.to_bits()) {
                return Err(Error::InvalidModel(format!("endpoint {e} repeated")));
            }
        }
    }
    Ok(())
}

/// Result of checking a model against a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModelCheck {
    Valid,
    /// Vertices `u < v` on which graph and model disagree.
    Mismatch {
        u: usize,
        v: usize,
    },
}

impl ModelCheck {
    pub fn is_valid(&self) -> bool {
        matches!(self, ModelCheck::Valid)
    }
}

/// Checks that `m` is an interval containment model of `g`.
pub fn validate_icb(g: &Graph, m: &IntervalModel) -> Result<ModelCheck> {
    if m.n() != g.n() {
        return Err(Error::BipartitionMismatch(format!("model has {} vertices, graph {}", m.n(), g.n())));
    }
    let bp = m.bipartition();
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            let expected = match (bp.side(u), bp.side(v)) {
                (Side::X, Side::Y) => m.contains(u, v),
                (Side::Y, Side::X) => m.contains(v, u),
                _ => false,
            };
            if g.has_edge(u, v) != expected {
                return Ok(ModelCheck::Mismatch { u, v });
            }
        }
    }
    Ok(ModelCheck::Valid)
}

/// Checks that `m` is a simple-triangle model of `g`.
pub fn validate_triangle(g: &Graph, m: &TriangleModel) -> Result<ModelCheck> {
    if m.n() != g.n() {
        return Err(Error::InvalidModel(format!("model has {} vertices, graph {}", m.n(), g.n())));
    }
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if g.has_edge(u, v) != m.intersects(u, v) {
                return Ok(ModelCheck::Mismatch { u, v });
            }
        }
    }
    Ok(ModelCheck::Valid)
}

/// Vertices sorted by `key`.
fn rank_order(n: usize, key: impl Fn(usize) -> f64) -> Vec<usize> {
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| key(a).total_cmp(&key(b)));
    order
}

/// Labels vertices by left endpoint and returns `w = pi_y pi_r pi_x`, where
/// `pi_r` lists labels by right endpoint and `pi_y`, `pi_x` list the labels
/// of each class in ascending order. The word has length `2n` and
/// 12-represents the implied bigraph under the returned labeling.
pub fn icb_to_representant(m: &IntervalModel) -> Result<(Labeling, Word)> {
    let n = m.n();
    let labeling = Labeling::from_order(&rank_order(n, |v| m.intervals[v].0))?;
    let by_right = rank_order(n, |v| m.intervals[v].1);

    let class_labels = |side: Side| {
        let mut ls: Vec<u32> = m.bipartition.class(side).into_iter().map(|v| labeling.label(v)).collect();
        ls.sort_unstable();
        ls
    };
    let mut letters = class_labels(Side::Y);
    letters.extend(by_right.iter().map(|&v| labeling.label(v)));
    letters.extend(class_labels(Side::X));
    Ok((labeling, Word::new(letters)?))
}

/// Labels vertices by apex and reads the base endpoints from right to left.
/// The word 12-represents the complement of the implied graph.
pub fn triangle_to_representant(m: &TriangleModel) -> Result<(Labeling, Word)> {
    let n = m.n();
    let labeling = Labeling::from_order(&rank_order(n, |v| m.apex[v]))?;
    let mut endpoints: Vec<(f64, usize)> = (0..n).flat_map(|v| [(m.base[v].0, v), (m.base[v].1, v)]).collect();
    endpoints.sort_by(|a, b| b.0.total_cmp(&a.0));
    let letters = endpoints.into_iter().map(|(_, v)| labeling.label(v)).collect();
    Ok((labeling, Word::new(letters)?))
}

/// Kahn's algorithm taking the smallest available node first. `None` when
/// the digraph has a cycle.
fn topological_ranks(node_count: usize, arcs: &[(usize, usize)]) -> Option<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); node_count];
    let mut indeg = vec![0usize; node_count];
    for &(a, b) in arcs {
        out[a].push(b);
        indeg[b] += 1;
    }
    let mut heap: BinaryHeap<Reverse<usize>> = (0..node_count).filter(|&v| indeg[v] == 0).map(Reverse).collect();
    let mut rank = vec![usize::MAX; node_count];
    let mut next = 0;
    while let Some(Reverse(v)) = heap.pop() {
        rank[v] = next;
        next += 1;
        for &w in &out[v] {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                heap.push(Reverse(w));
            }
        }
    }
    (next == node_count).then_some(rank)
}

/// Arcs of the endpoint digraph for building a triangle model of the
/// complement of `g` whose apex order is `sigma`. Node `2(i-1)` is the left
/// endpoint and `2(i-1)+1` the right endpoint of the vertex labeled `i`, so
/// that smaller node ids break ties by label, left before right.
pub fn triangle_constraint_arcs(g: &Graph, sigma: &Labeling) -> Vec<(usize, usize)> {
    let n = g.n();
    let left = |i: usize| 2 * i;
    let right = |i: usize| 2 * i + 1;
    let mut arcs = Vec::with_capacity(n * n);
    for i in 0..n {
        arcs.push((left(i), right(i)));
    }
    let order = sigma.order();
    for i in 0..n {
        for j in i + 1..n {
            if g.has_edge(order[i], order[j]) {
                // disjoint triangles: base of i ends before base of j starts
                arcs.push((right(i), left(j)));
            } else {
                arcs.push((left(j), right(i)));
            }
        }
    }
    arcs
}

/// Builds a simple-triangle model of the complement of `g` whose apexes are
/// in `sigma` order, with integer coordinates. Fails when `sigma` contains an
/// `I3`, `J4` or `Q4` occurrence (the endpoint digraph is then cyclic).
pub fn ordering_to_triangle_model(g: &Graph, sigma: &Labeling) -> Result<TriangleModel> {
    let n = g.n();
    if sigma.n() != n {
        return Err(Error::BadLabeling(n));
    }
    let arcs = triangle_constraint_arcs(g, sigma);
    let rank = topological_ranks(2 * n, &arcs).ok_or(Error::OrderingNotPatternFree)?;
    let mut apex = vec![0.0; n];
    let mut base = vec![(0.0, 0.0); n];
    for (i, &v) in sigma.order().iter().enumerate() {
        apex[v] = (i + 1) as f64;
        base[v] = ((rank[2 * i] + 1) as f64, (rank[2 * i + 1] + 1) as f64);
    }
    TriangleModel::new(apex, base)
}

/// Builds an interval containment model of the bigraph `g` whose left
/// endpoints follow `sigma`. Every edge must have its `X` endpoint first in
/// `sigma`. Left endpoints are `1..=n`; right endpoints `n+1..=2n` come from
/// the digraph on right endpoints with, for `x` before `y`, an arc
/// `r_y -> r_x` on edges and `r_x -> r_y` on non-edges.
pub fn ordering_to_icb_model(g: &Graph, bipartition: &Bipartition, sigma: &Labeling) -> Result<IntervalModel> {
    let n = g.n();
    if sigma.n() != n {
        return Err(Error::BadLabeling(n));
    }
    if !bipartition.is_valid_for(g) {
        return Err(Error::BipartitionMismatch("classes are not independent".into()));
    }
    for (u, v) in g.edges() {
        let (x, y) = if bipartition.side(u) == Side::X { (u, v) } else { (v, u) };
        if sigma.label(y) < sigma.label(x) {
            return Err(Error::OrderingNotXFirst { x: x + 1, y: y + 1 });
        }
    }

    // node i is the right endpoint of the vertex labeled i+1
    let order = sigma.order();
    let mut arcs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let (a, b) = (order[i], order[j]);
            if bipartition.side(a) == Side::X && bipartition.side(b) == Side::Y {
                if g.has_edge(a, b) {
                    arcs.push((j, i));
                } else {
                    arcs.push((i, j));
                }
            }
        }
    }
    let rank = topological_ranks(n, &arcs).ok_or(Error::OrderingNotPatternFree)?;
    let mut intervals = vec![(0.0, 0.0); n];
    for (i, &v) in order.iter().enumerate() {
        intervals[v] = ((i + 1) as f64, (n + rank[i] + 1) as f64);
    }
    IntervalModel::new(intervals, bipartition.clone())
}
