//! Simple undirected graphs, labelings, and the fixture graphs.
//!
//! Vertices are `0..n`; labels are `1..=n`.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// Simple undirected graph on vertices `0..n`, stored as a dense matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph { n, adj: vec![false; n * n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Same as [`Graph::from_edges`] with 1-based endpoints.
    pub fn from_edges_1based(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            if u == 0 || v == 0 {
                return Err(Error::VertexOutOfRange(0));
            }
            g.add_edge(u - 1, v - 1)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n {
            return Err(Error::VertexOutOfRange(u));
        }
        if v >= self.n {
            return Err(Error::VertexOutOfRange(v));
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u * self.n + v] = true;
        self.adj[v * self.n + u] = true;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.adj.iter().filter(|&&b| b).count() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let row = &self.adj[v * self.n..(v + 1) * self.n];
        row.iter().enumerate().filter(|(_, &b)| b).map(|(u, _)| u)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).count()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| (u + 1..self.n).filter(move |&v| self.has_edge(u, v)).map(move |v| (u, v)))
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for u in 0..self.n {
            for v in 0..self.n {
                if u != v {
                    g.adj[u * self.n + v] = !self.has_edge(u, v);
                }
            }
        }
        g
    }

    /// Subgraph induced by `subset`; vertex `i` of the result is `subset[i]`.
    pub fn induced_subgraph(&self, subset: &[usize]) -> Result<Graph> {
        let mut seen = HashSet::new();
        for &v in subset {
            if v >= self.n || !seen.insert(v) {
                return Err(Error::VertexOutOfRange(v));
            }
        }
        let k = subset.len();
        let mut g = Graph::new(k);
        for i in 0..k {
            for j in 0..k {
                g.adj[i * k + j] = i != j && self.has_edge(subset[i], subset[j]);
            }
        }
        Ok(g)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for u in self.neighbors(v) {
                    if comp[u] == usize::MAX {
                        comp[u] = id;
                        members.push(u);
                        queue.push_back(u);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_tree(&self) -> bool {
        self.n > 0 && self.m() == self.n - 1 && self.is_connected()
    }

    /// Proper 2-coloring if one exists. The smallest vertex of every
    /// component is placed in `X`.
    pub fn bipartition(&self) -> Option<Bipartition> {
        let mut side: Vec<Option<Side>> = vec![None; self.n];
        for s in 0..self.n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(Side::X);
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                let sv = side[v].unwrap();
                for u in self.neighbors(v) {
                    match side[u] {
                        None => {
                            side[u] = Some(sv.other());
                            queue.push_back(u);
                        }
                        Some(su) if su == sv => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(Bipartition { sides: side.into_iter().map(Option::unwrap).collect() })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<_> = self.edges().map(|(u, v)| (u + 1, v + 1)).collect();
        write!(f, "Graph(n={}, edges={:?})", self.n, edges)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    X,
    Y,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::X => Side::Y,
            Side::Y => Side::X,
        }
    }
}

/// Assignment of every vertex to one of two classes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Bipartition {
    sides: Vec<Side>,
}

impl Bipartition {
    pub fn new(sides: Vec<Side>) -> Self {
        Bipartition { sides }
    }

    pub fn side(&self, v: usize) -> Side {
        self.sides[v]
    }

    pub fn len(&self) -> usize {
        self.sides.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sides.is_empty()
    }

    pub fn class(&self, side: Side) -> Vec<usize> {
        (0..self.sides.len()).filter(|&v| self.sides[v] == side).collect()
    }

    pub fn swapped(&self) -> Bipartition {
        Bipartition { sides: self.sides.iter().map(|s| s.other()).collect() }
    }

    /// Checks that both classes are independent in `g`.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        self.sides.len() == g.n() && g.edges().all(|(u, v)| self.sides[u] != self.sides[v])
    }
}

/// Bijection from vertices `0..n` to labels `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Labeling {
    label: Vec<u32>,
    vertex: Vec<usize>,
}

impl Labeling {
    pub fn identity(n: usize) -> Self {
        Labeling { label: (1..=n as u32).collect(), vertex: (0..n).collect() }
    }

    /// From `label[v]` for every vertex `v`.
    pub fn from_labels(label: Vec<u32>) -> Result<Self> {
        let n = label.len();
        let mut vertex = vec![usize::MAX; n];
        for (v, &l) in label.iter().enumerate() {
            let idx = (l as usize).wrapping_sub(1);
            if idx >= n || vertex[idx] != usize::MAX {
                return Err(Error::BadLabeling(n));
            }
            vertex[idx] = v;
        }
        Ok(Labeling { label, vertex })
    }

    /// From a vertex ordering: the i-th vertex listed gets label `i + 1`.
    pub fn from_order(order: &[usize]) -> Result<Self> {
        let n = order.len();
        let mut label = vec![0u32; n];
        for (i, &v) in order.iter().enumerate() {
            if v >= n || label[v] != 0 {
                return Err(Error::BadLabeling(n));
            }
            label[v] = i as u32 + 1;
        }
        Ok(Labeling { label, vertex: order.to_vec() })
    }

    pub fn n(&self) -> usize {
        self.label.len()
    }

    pub fn label(&self, v: usize) -> u32 {
        self.label[v]
    }

    pub fn labels(&self) -> &[u32] {
        &self.label
    }

    pub fn vertex(&self, label: u32) -> usize {
        self.vertex[label as usize - 1]
    }

    /// Vertices sorted by label.
    pub fn order(&self) -> &[usize] {
        &self.vertex
    }

    /// `vertex:label` pairs in vertex order, 1-based.
    pub fn to_pairs_string(&self) -> String {
        self.label.iter().enumerate().map(|(v, l)| format!("{}:{}", v + 1, l)).collect::<Vec<_>>().join(" ")
    }
}

/// A graph together with a labeling of its vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    graph: Graph,
    labeling: Labeling,
}

impl LabeledGraph {
    pub fn new(graph: Graph, labeling: Labeling) -> Result<Self> {
        if graph.n() != labeling.n() {
            return Err(Error::BadLabeling(graph.n()));
        }
        Ok(LabeledGraph { graph, labeling })
    }

    pub fn identity(graph: Graph) -> Self {
        let labeling = Labeling::identity(graph.n());
        LabeledGraph { graph, labeling }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn labeling(&self) -> &Labeling {
        &self.labeling
    }

    pub fn vertex_of(&self, label: u32) -> usize {
        self.labeling.vertex(label)
    }

    /// The same labeled graph re-indexed so vertex `i` carries label `i + 1`.
    pub fn canonical(&self) -> Graph {
        let order = self.labeling.order();
        self.graph.induced_subgraph(order).expect("labeling is a permutation")
    }
}

/// `red(H)`: relabels distinct labels by rank.
pub fn reduced_labeled(graph: &Graph, labels: &[u32]) -> Result<LabeledGraph> {
    if labels.len() != graph.n() {
        return Err(Error::BadLabeling(graph.n()));
    }
    let mut sorted = labels.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != labels.len() {
        return Err(Error::BadLabeling(graph.n()));
    }
    let ranks = labels.iter().map(|l| sorted.binary_search(l).unwrap() as u32 + 1).collect();
    LabeledGraph::new(graph.clone(), Labeling::from_labels(ranks)?)
}

/// Induced subgraph of the integer lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridGraph {
    points: Vec<(i64, i64)>,
    graph: Graph,
}

impl GridGraph {
    /// Vertex `i` is `points[i]`; edges join points at distance 1.
    pub fn from_points(points: &[(i64, i64)]) -> Result<Self> {
        let mut seen = HashSet::new();
        for &(x, y) in points {
            if !seen.insert((x, y)) {
                return Err(Error::DuplicatePoint(x, y));
            }
        }
        let n = points.len();
        let mut graph = Graph::new(n);
        for i in 0..n {
            for j in i + 1..n {
                let (a, b) = (points[i], points[j]);
                if (a.0 - b.0).abs() + (a.1 - b.1).abs() == 1 {
                    graph.add_edge(i, j)?;
                }
            }
        }
        Ok(GridGraph { points: points.to_vec(), graph })
    }

    /// Full `rows x cols` block, row-major.
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        let points: Vec<_> = (0..rows as i64).flat_map(|r| (0..cols as i64).map(move |c| (r, c))).collect();
        GridGraph::from_points(&points).expect("distinct points")
    }

    pub fn points(&self) -> &[(i64, i64)] {
        &self.points
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    let mut g = path(n);
    g.add_edge(n - 1, 0).unwrap();
    g
}

pub fn complete(n: usize) -> Graph {
    Graph::new(n).complement()
}

/// `K_{1,k}` with the center at vertex 0.
pub fn star(k: usize) -> Graph {
    let edges: Vec<_> = (1..=k).map(|i| (0, i)).collect();
    Graph::from_edges(k + 1, &edges).unwrap()
}

pub mod fixtures {
    //! Fixed example graphs, given vertex by vertex. Each grid
    //! fixture also carries a lattice embedding that induces it.

    use super::{Graph, GridGraph};

    /// Interval containment bigraph on labels 1..8 (vertex `i` has label `i+1`).
    pub fn g1() -> Graph {
        Graph::from_edges_1based(8, &[(1, 3), (1, 5), (1, 7), (1, 8), (2, 3), (2, 5), (4, 5), (4, 8), (6, 7), (6, 8)])
            .unwrap()
    }

    /// Simple-triangle graph on labels 1..6.
    pub fn g2() -> Graph {
        Graph::from_edges_1based(6, &[(1, 2), (2, 3), (2, 5), (3, 5), (3, 6), (4, 5), (4, 6)]).unwrap()
    }

    /// A forbidden grid fixture: its graph and an inducing lattice embedding.
    #[derive(Debug, Clone)]
    pub struct GridFixture {
        pub name: &'static str,
        pub graph: Graph,
        pub points: Vec<(i64, i64)>,
    }

    impl GridFixture {
        pub fn grid(&self) -> GridGraph {
            GridGraph::from_points(&self.points).unwrap()
        }
    }

    /// Spider with three legs of length 3; vertex 1 is the center.
    pub fn t3() -> Graph {
        grid_obstructions()[0].graph.clone()
    }

    /// `G1` plus a pendant vertex.
    pub fn x() -> Graph {
        grid_obstructions()[5].graph.clone()
    }

    /// The six forbidden induced subgraphs for grid graphs: T3, H1..H4, X.
    pub fn grid_obstructions() -> Vec<GridFixture> {
        vec![
            GridFixture {
                name: "T3",
                graph: Graph::from_edges_1based(
                    10,
                    &[(1, 2), (2, 3), (3, 4), (1, 5), (5, 6), (6, 7), (1, 8), (8, 9), (9, 10)],
                )
                .unwrap(),
                points: vec![(0, 0), (0, 1), (0, 2), (0, 3), (-1, 0), (-2, 0), (-3, 0), (1, 0), (2, 0), (3, 0)],
            },
            GridFixture {
                name: "H1",
                graph: Graph::from_edges_1based(
                    10,
                    &[(1, 2), (2, 3), (3, 4), (5, 6), (6, 7), (8, 9), (9, 10), (9, 1), (1, 6), (10, 2), (2, 7)],
                )
                .unwrap(),
                points: vec![(0, 1), (0, 2), (0, 3), (0, 4), (1, 0), (1, 1), (1, 2), (-1, 0), (-1, 1), (-1, 2)],
            },
            GridFixture {
                // v1..v5 = 1..5, u1..u5 = 6..10
                name: "H2",
                graph: Graph::from_edges_1based(
                    10,
                    &[(1, 2), (2, 3), (3, 4), (4, 5), (6, 7), (7, 8), (8, 9), (9, 10), (3, 8), (4, 9), (5, 10)],
                )
                .unwrap(),
                points: vec![(-1, 1), (-1, 2), (0, 2), (0, 3), (0, 4), (2, 1), (2, 2), (1, 2), (1, 3), (1, 4)],
            },
            GridFixture {
                // a..j = 1..10
                name: "H3",
                graph: Graph::from_edges_1based(
                    10,
                    &[(1, 2), (2, 3), (1, 4), (4, 5), (5, 6), (1, 7), (7, 8), (8, 9), (4, 10), (10, 7)],
                )
                .unwrap(),
                points: vec![(0, 0), (0, 1), (0, 2), (1, 0), (2, 0), (3, 0), (0, -1), (0, -2), (0, -3), (1, -1)],
            },
            GridFixture {
                name: "H4",
                graph: Graph::from_edges_1based(
                    12,
                    &[
                        (1, 2),
                        (2, 6),
                        (3, 4),
                        (4, 5),
                        (5, 6),
                        (6, 7),
                        (7, 8),
                        (8, 9),
                        (10, 11),
                        (11, 12),
                        (5, 10),
                        (6, 11),
                        (7, 12),
                    ],
                )
                .unwrap(),
                points: vec![
                    (0, 2),
                    (0, 1),
                    (-3, 0),
                    (-2, 0),
                    (-1, 0),
                    (0, 0),
                    (1, 0),
                    (2, 0),
                    (3, 0),
                    (-1, -1),
                    (0, -1),
                    (1, -1),
                ],
            },
            GridFixture {
                // a..i = 1..9; b..i form G1, a is the pendant at b
                name: "X",
                graph: Graph::from_edges_1based(
                    9,
                    &[(1, 2), (2, 3), (3, 4), (5, 6), (6, 7), (8, 9), (2, 7), (7, 8), (3, 6), (6, 9), (4, 5)],
                )
                .unwrap(),
                points: vec![(2, 1), (1, 1), (1, 0), (1, -1), (0, -1), (0, 0), (0, 1), (-1, 1), (-1, 0)],
            },
        ]
    }
}
