//! Deciders for 12-representability with certificates and witnesses.

use std::cmp::Reverse;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{fixtures, Graph, GridGraph, LabeledGraph, Labeling, Side};
use crate::models::{
    icb_to_representant, ordering_to_icb_model, ordering_to_triangle_model, triangle_to_representant, validate_icb,
    validate_triangle, IntervalModel, TriangleModel,
};
use crate::patterns::{find_pattern_free_ordering, PatternFamily};
use crate::word::{u_represents, PatternWord, Verdict, Word};

/// Geometric model behind a certificate.
#[derive(Debug, Clone, PartialEq)]
pub enum Model {
    /// Interval containment model of the graph itself.
    Interval(IntervalModel),
    /// Simple-triangle model of the complement of the graph.
    Triangle(TriangleModel),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Certificate {
    pub labeling: Labeling,
    pub model: Model,
    pub word: Word,
}

/// Why a graph was rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// The exact ordering search found nothing; no succinct certificate.
    SearchExhausted,
    /// `embedding[i]` is the vertex of the graph playing vertex `i` of the
    /// named forbidden graph.
    InducedSubgraph { name: String, embedding: Vec<usize> },
    /// An induced cycle, in cyclic order.
    InducedCycle(Vec<usize>),
    /// A center with three legs of length three.
    T3Subtree { center: usize, legs: [[usize; 3]; 3] },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one_based = |vs: &[usize]| vs.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(" ");
        match self {
            Witness::SearchExhausted => write!(f, "no pattern-free ordering exists (exhaustive search)"),
            Witness::InducedSubgraph { name, embedding } => {
                write!(f, "induced {name} on vertices {}", one_based(embedding))
            }
            Witness::InducedCycle(c) => write!(f, "induced C{} on vertices {}", c.len(), one_based(c)),
            Witness::T3Subtree { center, legs } => {
                write!(f, "T3 centered at {}; legs", center + 1)?;
                for leg in legs {
                    write!(f, " [{}]", one_based(leg))?;
                }
                Ok(())
            }
        }
    }
}

/// Answer of a decider. A positive answer always carries a certificate whose
/// word has been verified; a negative one carries a witness.
#[derive(Debug, Clone, PartialEq)]
pub struct Decision {
    pub representable: bool,
    pub certificate: Option<Certificate>,
    pub witness: Option<Witness>,
}

impl Decision {
    fn yes(certificate: Certificate) -> Self {
        Decision { representable: true, certificate: Some(certificate), witness: None }
    }

    fn no(witness: Witness) -> Self {
        Decision { representable: false, certificate: None, witness: Some(witness) }
    }
}

fn check_word(g: &Graph, labeling: &Labeling, word: &Word) -> Result<()> {
    let lg = LabeledGraph::new(g.clone(), labeling.clone())?;
    match u_represents(word, &lg, &PatternWord::twelve())? {
        Verdict::Represents => Ok(()),
        Verdict::Violation { x, y, .. } => {
            Err(Error::CertificateRejected(format!("word {word} fails on labels {x}, {y}")))
        }
    }
}

/// General decider: searches an `{I3, J4, Q4}`-free ordering, builds a
/// triangle model of the complement with apexes in that order, and reads
/// the word off the model. The returned labeling is the ordering found.
pub fn is_12_representable(g: &Graph) -> Result<Decision> {
    let Some(sigma) = find_pattern_free_ordering(g, &PatternFamily::i3_j4_q4(), None, false)? else {
        return Ok(Decision::no(Witness::SearchExhausted));
    };
    let model = ordering_to_triangle_model(g, &sigma)?;
    if !validate_triangle(&g.complement(), &model)?.is_valid() {
        return Err(Error::CertificateRejected("triangle model does not match the complement".into()));
    }
    let (labeling, word) = triangle_to_representant(&model)?;
    if labeling != sigma {
        return Err(Error::CertificateRejected("construction relabeled the graph".into()));
    }
    check_word(g, &labeling, &word)?;
    Ok(Decision::yes(Certificate { labeling, model: Model::Triangle(model), word }))
}

/// Bipartite decider via interval containment models. The ordering search
/// uses the colored containment patterns and requires `X` endpoints first.
pub fn is_12_representable_bipartite(g: &Graph) -> Result<Decision> {
    let bp = g.bipartition().ok_or(Error::NotBipartite)?;
    let Some(sigma) = find_pattern_free_ordering(g, &PatternFamily::interval_containment(), Some(&bp), true)? else {
        return Ok(Decision::no(Witness::SearchExhausted));
    };
    let model = ordering_to_icb_model(g, &bp, &sigma)?;
    if !validate_icb(g, &model)?.is_valid() {
        return Err(Error::CertificateRejected("interval model does not match the graph".into()));
    }
    let (labeling, word) = icb_to_representant(&model)?;
    check_word(g, &labeling, &word)?;
    Ok(Decision::yes(Certificate { labeling, model: Model::Interval(model), word }))
}

/// Grid decider: rejects graphs with an induced cycle of length at least 8
/// or an induced copy of one of the six forbidden grid graphs, and accepts
/// everything else with a certificate from the bipartite decider.
pub fn grid_12_representable(grid: &GridGraph) -> Result<Decision> {
    let g = grid.graph();
    if let Some(cycle) = find_long_induced_cycle(g, 8) {
        return Ok(Decision::no(Witness::InducedCycle(cycle)));
    }
    for f in fixtures::grid_obstructions() {
        if let Some(embedding) = contains_induced(g, &f.graph) {
            return Ok(Decision::no(Witness::InducedSubgraph { name: f.name.to_string(), embedding }));
        }
    }
    let d = is_12_representable_bipartite(g)?;
    if !d.representable {
        return Err(Error::CertificateRejected(
            "grid graph has no forbidden subgraph but no containment model was found".into(),
        ));
    }
    Ok(d)
}

/// Tree decider: a tree is rejected exactly when some vertex has three
/// neighbors each starting a branch that reaches distance 3.
pub fn tree_12_representable(g: &Graph) -> Result<Decision> {
    if !g.is_tree() {
        return Err(Error::NotATree);
    }
    for center in 0..g.n() {
        let mut legs = Vec::new();
        for nb in g.neighbors(center) {
            if let Some(leg) = leg_of_length_three(g, center, nb) {
                legs.push(leg);
                if legs.len() == 3 {
                    let legs = [legs[0], legs[1], legs[2]];
                    return Ok(Decision::no(Witness::T3Subtree { center, legs }));
                }
            }
        }
    }
    let d = is_12_representable_bipartite(g)?;
    if !d.representable {
        return Err(Error::CertificateRejected("tree has no T3 but no containment model was found".into()));
    }
    Ok(d)
}

/// A path `nb, a, b` with `b` at distance 3 from `center`, inside the branch
/// of `nb`.
fn leg_of_length_three(g: &Graph, center: usize, nb: usize) -> Option<[usize; 3]> {
    for a in g.neighbors(nb).filter(|&a| a != center) {
        if let Some(b) = g.neighbors(a).find(|&b| b != nb) {
            return Some([nb, a, b]);
        }
    }
    None
}

/// Induced-subgraph isomorphism by backtracking. Returns `embedding` with
/// `embedding[i]` the vertex of `g` used for vertex `i` of `h`.
pub fn contains_induced(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    let k = h.n();
    if k > g.n() {
        return None;
    }
    // place high-degree pattern vertices first, then neighbors of placed ones
    let mut order = Vec::with_capacity(k);
    let mut placed = vec![false; k];
    while order.len() < k {
        let next = (0..k)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let linked = order.iter().filter(|&&u| h.has_edge(u, v)).count();
                (linked, h.degree(v), Reverse(v))
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
    }
    let g_deg: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let h_deg: Vec<usize> = (0..k).map(|v| h.degree(v)).collect();
    let mut map = vec![usize::MAX; k];
    let mut used = vec![false; g.n()];

    #[allow(clippy::too_many_arguments)]
    fn extend(
        depth: usize,
        order: &[usize],
        g: &Graph,
        h: &Graph,
        g_deg: &[usize],
        h_deg: &[usize],
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let hv = order[depth];
        for gv in 0..g.n() {
            if used[gv] || g_deg[gv] < h_deg[hv] {
                continue;
            }
            let consistent = order[..depth].iter().all(|&hu| h.has_edge(hu, hv) == g.has_edge(map[hu], gv));
            if !consistent {
                continue;
            }
            map[hv] = gv;
            used[gv] = true;
            if extend(depth + 1, order, g, h, g_deg, h_deg, map, used) {
                return true;
            }
            used[gv] = false;
            map[hv] = usize::MAX;
        }
        false
    }

    extend(0, &order, g, h, &g_deg, &h_deg, &mut map, &mut used).then_some(map)
}

/// First induced (chordless) cycle with at least `min_len` vertices, found
/// by growing chordless paths from each start vertex through larger
/// vertices only.
pub fn find_long_induced_cycle(g: &Graph, min_len: usize) -> Option<Vec<usize>> {
    let min_len = min_len.max(3);
    let n = g.n();
    let mut path = Vec::with_capacity(n);
    let mut on_path = vec![false; n];

    fn grow(g: &Graph, min_len: usize, path: &mut Vec<usize>, on_path: &mut [bool]) -> Option<Vec<usize>> {
        let start = path[0];
        let last = *path.last().unwrap();
        for u in g.neighbors(last) {
            if u <= start || on_path[u] {
                continue;
            }
            // u may touch only `last` and possibly `start`
            let interior = &path[1.min(path.len() - 1)..path.len() - 1];
            if interior.iter().any(|&p| g.has_edge(p, u)) {
                continue;
            }
            if path.len() >= 2 && g.has_edge(start, u) {
                if path.len() + 1 >= min_len && path[1] < u {
                    let mut cycle = path.clone();
                    cycle.push(u);
                    return Some(cycle);
                }
                continue;
            }
            path.push(u);
            on_path[u] = true;
            if let Some(c) = grow(g, min_len, path, on_path) {
                return Some(c);
            }
            on_path[u] = false;
            path.pop();
        }
        None
    }

    for s in 0..n {
        path.clear();
        path.push(s);
        on_path[s] = true;
        let found = grow(g, min_len, &mut path, &mut on_path);
        on_path[s] = false;
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Checks that every class-`X` vertex of an interval model precedes its
/// neighbors; used by tests of the bipartite decider.
pub fn labeling_is_x_first(g: &Graph, labeling: &Labeling) -> bool {
    let Some(bp) = g.bipartition() else { return false };
    g.edges().all(|(u, v)| {
        let (x, y) = if bp.side(u) == Side::X { (u, v) } else { (v, u) };
        labeling.label(x) < labeling.label(y)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path, star};

    fn is_induced_cycle(g: &Graph, c: &[usize]) -> bool {
        let k = c.len();
        (0..k).all(|i| {
            (0..k).all(|j| {
                let adjacent = (i + 1) % k == j || (j + 1) % k == i;
                i == j || g.has_edge(c[i], c[j]) == adjacent
            })
        })
    }

    #[test]
    fn cycles() {
        assert!(is_12_representable(&cycle(4)).unwrap().representable);
        for n in 5..=8 {
            let d = is_12_representable(&cycle(n)).unwrap();
            assert!(!d.representable, "C{n}");
            assert_eq!(d.witness, Some(Witness::SearchExhausted));
        }
    }

    #[test]
    fn complete_graphs() {
        let d = is_12_representable(&complete(4)).unwrap();
        let cert = d.certificate.unwrap();
        assert_eq!(cert.word.len(), 8);
    }

    #[test]
    fn bipartite_examples() {
        let d = is_12_representable_bipartite(&fixtures::g1()).unwrap();
        assert!(d.representable);
        let cert = d.certificate.unwrap();
        assert!(labeling_is_x_first(&fixtures::g1(), &cert.labeling));
        let h2 = &fixtures::grid_obstructions()[2];
        assert_eq!(h2.name, "H2");
        assert!(!is_12_representable_bipartite(&h2.graph).unwrap().representable);
        for k in 1..8 {
            assert!(is_12_representable_bipartite(&star(k)).unwrap().representable);
        }
        assert_eq!(is_12_representable_bipartite(&cycle(5)), Err(Error::NotBipartite));
    }

    #[test]
    fn grid_examples() {
        // The boundary of the full 3x3 grid is a chordless 8-cycle.
        let full = GridGraph::rectangle(3, 3);
        let d = grid_12_representable(&full).unwrap();
        assert!(matches!(d.witness, Some(Witness::InducedCycle(ref c)) if c.len() == 8));
        assert!(!is_12_representable(full.graph()).unwrap().representable);

        let corner_cut: Vec<(i64, i64)> =
            (0..3).flat_map(|r| (0..3).map(move |c| (r, c))).filter(|&p| p != (2, 2)).collect();
        let cut = GridGraph::from_points(&corner_cut).unwrap();
        let d = grid_12_representable(&cut).unwrap();
        assert!(d.representable);
        assert!(is_12_representable(cut.graph()).unwrap().representable);

        let ring: Vec<(i64, i64)> = (0..3).flat_map(|r| (0..3).map(move |c| (r, c))).filter(|&p| p != (1, 1)).collect();
        let d = grid_12_representable(&GridGraph::from_points(&ring).unwrap()).unwrap();
        match d.witness {
            Some(Witness::InducedCycle(c)) => assert_eq!(c.len(), 8),
            other => panic!("expected C8 witness, got {other:?}"),
        }

        let x = &fixtures::grid_obstructions()[5];
        let d = grid_12_representable(&x.grid()).unwrap();
        match d.witness {
            Some(Witness::InducedSubgraph { name, .. }) => assert_eq!(name, "X"),
            other => panic!("expected X witness, got {other:?}"),
        }
    }

    #[test]
    fn tree_examples() {
        let d = tree_12_representable(&fixtures::t3()).unwrap();
        match d.witness {
            Some(Witness::T3Subtree { center, .. }) => assert_eq!(center, 0),
            other => panic!("{other:?}"),
        }
        // caterpillar: spine 0..5 with a leaf on each spine vertex
        let mut cat = Graph::new(10);
        for i in 0..4 {
            cat.add_edge(i, i + 1).unwrap();
        }
        for i in 0..5 {
            cat.add_edge(i, i + 5).unwrap();
        }
        assert!(tree_12_representable(&cat).unwrap().representable);
        // spider with legs of length 2
        let spider = Graph::from_edges(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        assert!(tree_12_representable(&spider).unwrap().representable);
        assert!(is_12_representable(&spider).unwrap().representable);
        assert_eq!(tree_12_representable(&cycle(4)), Err(Error::NotATree));
        assert!(tree_12_representable(&path(1)).unwrap().representable);
    }

    #[test]
    fn induced_embedding_examples() {
        let grid = GridGraph::rectangle(3, 3);
        let emb = contains_induced(grid.graph(), &cycle(4)).unwrap();
        assert_eq!(grid.graph().induced_subgraph(&emb).unwrap(), cycle(4));

        let x = fixtures::x();
        let emb = contains_induced(&x, &fixtures::g1()).unwrap();
        assert_eq!(x.induced_subgraph(&emb).unwrap(), fixtures::g1());
        // C4 is a subgraph but not an induced subgraph of K4
        assert_eq!(contains_induced(&complete(4), &cycle(4)), None);
    }

    #[test]
    fn long_cycles_in_grids() {
        let g4 = GridGraph::rectangle(4, 4);
        let c = find_long_induced_cycle(g4.graph(), 8).unwrap();
        assert!(c.len() >= 8);
        assert!(is_induced_cycle(g4.graph(), &c));
        assert_eq!(find_long_induced_cycle(GridGraph::rectangle(2, 6).graph(), 8), None);
        assert_eq!(find_long_induced_cycle(&cycle(7), 8), None);
        assert_eq!(find_long_induced_cycle(&cycle(9), 8).map(|c| c.len()), Some(9));
        assert_eq!(find_long_induced_cycle(&complete(5), 3).map(|c| c.len()), Some(3));
    }
}
