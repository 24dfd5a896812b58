//! Ordered induced patterns and the search for orderings that avoid them.
//!
//! A labeling is read as a vertex ordering (smaller label first). The three
//! forbidden labeled graphs `I3`, `J4`, `Q4` are then the ordered patterns
//! with edge sets `{12,23}`, `{13,24}` and `{14,23}`; every position pair
//! without an edge is a required non-edge.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{reduced_labeled, Bipartition, Graph, LabeledGraph, Labeling, Side};

/// Patterns in this crate have at most four positions.
pub const MAX_PATTERN_SIZE: usize = 4;

/// A small ordered graph with induced semantics and optional 2-coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedPattern {
    name: String,
    k: usize,
    adj: [[bool; MAX_PATTERN_SIZE]; MAX_PATTERN_SIZE],
    colors: Option<Vec<Side>>,
}

impl OrderedPattern {
    /// `edges` are 1-based position pairs.
    pub fn new(name: &str, k: usize, edges: &[(usize, usize)], colors: Option<Vec<Side>>) -> Result<Self> {
        if k == 0 || k > MAX_PATTERN_SIZE {
            return Err(Error::InvalidModel(format!("pattern size {k} unsupported")));
        }
        let mut adj = [[false; MAX_PATTERN_SIZE]; MAX_PATTERN_SIZE];
        for &(i, j) in edges {
            if i == 0 || j == 0 || i > k || j > k || i == j {
                return Err(Error::InvalidModel(format!("pattern edge ({i},{j}) out of range")));
            }
            adj[i - 1][j - 1] = true;
            adj[j - 1][i - 1] = true;
        }
        if let Some(c) = &colors {
            if c.len() != k {
                return Err(Error::InvalidModel("pattern coloring has wrong length".into()));
            }
        }
        Ok(OrderedPattern { name: name.to_string(), k, adj, colors })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn size(&self) -> usize {
        self.k
    }

    pub fn is_colored(&self) -> bool {
        self.colors.is_some()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i][j]
    }

    /// 1-based edge list.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.k {
            for j in i + 1..self.k {
                if self.adj[i][j] {
                    out.push((i + 1, j + 1));
                }
            }
        }
        out
    }

    /// The pattern as a labeled graph on `1..=k` (vertex `i` has label `i+1`).
    pub fn as_graph(&self) -> Graph {
        Graph::from_edges_1based(self.k, &self.edges()).unwrap()
    }

    /// True when every cut between positions `s` and `s+1` is crossed by an
    /// edge. Occurrences of such a pattern never span two blocks of an
    /// ordering that lists components one after another.
    pub fn crosses_every_cut(&self) -> bool {
        (1..self.k).all(|s| self.edges().iter().any(|&(i, j)| i <= s && j > s))
    }

    /// Whether the vertices `vs`, already in ordering order, form an
    /// occurrence.
    pub fn matches(&self, g: &Graph, vs: &[usize], coloring: Option<&Bipartition>) -> bool {
        debug_assert_eq!(vs.len(), self.k);
        for a in 0..self.k {
            for b in a + 1..self.k {
                if g.has_edge(vs[a], vs[b]) != self.adj[a][b] {
                    return false;
                }
            }
        }
        match (&self.colors, coloring) {
            (None, _) => true,
            (Some(colors), Some(bp)) => {
                let same = vs.iter().zip(colors).all(|(&v, &c)| bp.side(v) == c);
                let swapped = vs.iter().zip(colors).all(|(&v, &c)| bp.side(v) != c);
                same || swapped
            }
            (Some(_), None) => false,
        }
    }
}

impl fmt::Display for OrderedPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)
    }
}

pub fn i3() -> OrderedPattern {
    OrderedPattern::new("I3", 3, &[(1, 2), (2, 3)], None).unwrap()
}

pub fn j4() -> OrderedPattern {
    OrderedPattern::new("J4", 4, &[(1, 3), (2, 4)], None).unwrap()
}

pub fn q4() -> OrderedPattern {
    OrderedPattern::new("Q4", 4, &[(1, 4), (2, 3)], None).unwrap()
}

/// A nonempty list of patterns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternFamily {
    patterns: Vec<OrderedPattern>,
}

impl PatternFamily {
    pub fn new(patterns: Vec<OrderedPattern>) -> Result<Self> {
        if patterns.is_empty() {
            return Err(Error::InvalidModel("empty pattern family".into()));
        }
        Ok(PatternFamily { patterns })
    }

    /// `{I3, J4, Q4}`: orderings avoiding these are the labelings that can
    /// be 12-represented.
    pub fn i3_j4_q4() -> Self {
        PatternFamily { patterns: vec![i3(), j4(), q4()] }
    }

    /// `{J4, Q4}`, uncolored.
    pub fn j4_q4() -> Self {
        PatternFamily { patterns: vec![j4(), q4()] }
    }

    /// Colored patterns characterizing interval containment bigraphs. Each
    /// also matches with the two classes exchanged.
    pub fn interval_containment() -> Self {
        use Side::{X, Y};
        PatternFamily {
            patterns: vec![
                OrderedPattern::new("ICB-a", 4, &[(1, 3), (2, 4)], Some(vec![X, X, Y, Y])).unwrap(),
                OrderedPattern::new("ICB-b", 4, &[(1, 4), (2, 3)], Some(vec![X, Y, X, Y])).unwrap(),
                OrderedPattern::new("ICB-c", 4, &[(1, 4), (2, 3)], Some(vec![X, X, Y, Y])).unwrap(),
            ],
        }
    }

    pub fn patterns(&self) -> &[OrderedPattern] {
        &self.patterns
    }

    pub fn is_colored(&self) -> bool {
        self.patterns.iter().any(OrderedPattern::is_colored)
    }

    fn max_size(&self) -> usize {
        self.patterns.iter().map(OrderedPattern::size).max().unwrap()
    }
}

/// A pattern occurrence: the pattern's name and the matched vertices in
/// ordering order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Occurrence {
    pub pattern: String,
    pub vertices: Vec<usize>,
}

/// Finds the first occurrence of `p` in `ordering` (lexicographic in
/// positions).
pub fn contains_pattern(
    g: &Graph,
    ordering: &Labeling,
    p: &OrderedPattern,
    coloring: Option<&Bipartition>,
) -> Result<Option<Vec<usize>>> {
    if p.is_colored() && coloring.is_none() {
        return Err(Error::MissingBipartition);
    }
    if ordering.n() != g.n() {
        return Err(Error::BadLabeling(g.n()));
    }
    let order = ordering.order();
    let mut found = None;
    for_each_subsequence(order, p.size(), &mut |vs| {
        if p.matches(g, vs, coloring) {
            found = Some(vs.to_vec());
            true
        } else {
            false
        }
    });
    Ok(found)
}

/// First occurrence of any pattern of the family, scanning patterns in
/// family order.
pub fn find_occurrence(
    g: &Graph,
    ordering: &Labeling,
    family: &PatternFamily,
    coloring: Option<&Bipartition>,
) -> Result<Option<Occurrence>> {
    for p in family.patterns() {
        if let Some(vertices) = contains_pattern(g, ordering, p, coloring)? {
            return Ok(Some(Occurrence { pattern: p.name().to_string(), vertices }));
        }
    }
    Ok(None)
}

/// Calls `f` on every length-`k` subsequence of `items` in lexicographic
/// position order until it returns true.
fn for_each_subsequence(items: &[usize], k: usize, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    fn rec(items: &[usize], start: usize, k: usize, buf: &mut Vec<usize>, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if buf.len() == k {
            return f(buf);
        }
        let need = k - buf.len();
        for i in start..=items.len().saturating_sub(need) {
            if i >= items.len() {
                break;
            }
            buf.push(items[i]);
            if rec(items, i + 1, k, buf, f) {
                return true;
            }
            buf.pop();
        }
        false
    }
    if k > items.len() {
        return false;
    }
    rec(items, 0, k, &mut Vec::with_capacity(k), f)
}

/// Which forbidden family a labeling is checked against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Forbidden {
    I3J4Q4,
    J4Q4,
}

impl Forbidden {
    pub fn family(self) -> PatternFamily {
        match self {
            Forbidden::I3J4Q4 => PatternFamily::i3_j4_q4(),
            Forbidden::J4Q4 => PatternFamily::j4_q4(),
        }
    }
}

/// Whether the labeling of `h` is free of the forbidden family, with the
/// first occurrence when it is not.
pub fn labeling_is_f_free(h: &LabeledGraph, family: Forbidden) -> (bool, Option<Occurrence>) {
    let occ = find_occurrence(h.graph(), h.labeling(), &family.family(), None)
        .expect("uncolored family never needs a bipartition");
    (occ.is_none(), occ)
}

/// The same test computed by reducing every induced 3- and 4-vertex
/// subgraph and comparing it against the forbidden labeled graphs.
pub fn labeling_is_f_free_by_reduction(h: &LabeledGraph, family: Forbidden) -> bool {
    let forbidden: Vec<Graph> = family.family().patterns().iter().map(OrderedPattern::as_graph).collect();
    let n = h.graph().n();
    let vertices: Vec<usize> = (0..n).collect();
    for k in [3, 4] {
        let mut clean = true;
        for_each_subsequence(&vertices, k, &mut |subset| {
            let sub = h.graph().induced_subgraph(subset).unwrap();
            let labels: Vec<u32> = subset.iter().map(|&v| h.labeling().label(v)).collect();
            let red = reduced_labeled(&sub, &labels).unwrap();
            let canon = red.canonical();
            if forbidden.iter().any(|f| f == &canon) {
                clean = false;
                return true;
            }
            false
        });
        if !clean {
            return false;
        }
    }
    true
}

/// Exact backtracking search for an ordering of `g` avoiding every pattern of
/// `family`. With `x_first`, every edge must additionally have its
/// `X`-endpoint earlier.
///
/// Prefixes are extended one vertex at a time and discarded as soon as an
/// occurrence (or an `X`-first violation) lies entirely inside them; since
/// such a prefix can never be completed, the search is exhaustive over the
/// remaining ones. When every pattern crosses every cut, components are
/// solved independently and concatenated by smallest vertex.
pub fn find_pattern_free_ordering(
    g: &Graph,
    family: &PatternFamily,
    coloring: Option<&Bipartition>,
    x_first: bool,
) -> Result<Option<Labeling>> {
    if (family.is_colored() || x_first) && coloring.is_none() {
        return Err(Error::MissingBipartition);
    }
    if let Some(bp) = coloring {
        if !bp.is_valid_for(g) {
            return Err(Error::BipartitionMismatch("coloring is not a proper 2-coloring of the graph".into()));
        }
    }

    let split = family.patterns().iter().all(OrderedPattern::crosses_every_cut);
    let parts: Vec<Vec<usize>> = if split { g.components() } else { vec![(0..g.n()).collect()] };

    let mut order = Vec::with_capacity(g.n());
    for part in parts {
        let sub = g.induced_subgraph(&part)?;
        let sub_coloring = coloring.map(|bp| Bipartition::new(part.iter().map(|&v| bp.side(v)).collect()));
        let mut search = Search::new(&sub, family, sub_coloring.as_ref(), x_first);
        if !search.run() {
            return Ok(None);
        }
        order.extend(search.prefix.iter().map(|&i| part[i]));
    }
    let labeling = Labeling::from_order(&order)?;
    debug_assert!(find_occurrence(g, &labeling, family, coloring).unwrap().is_none());
    Ok(Some(labeling))
}

struct Search<'a> {
    g: &'a Graph,
    family: &'a PatternFamily,
    coloring: Option<&'a Bipartition>,
    x_first: bool,
    candidates: Vec<usize>,
    used: Vec<bool>,
    prefix: Vec<usize>,
    max_k: usize,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, family: &'a PatternFamily, coloring: Option<&'a Bipartition>, x_first: bool) -> Self {
        let mut candidates: Vec<usize> = (0..g.n()).collect();
        candidates.sort_by_key(|&v| (g.degree(v), v));
        Search {
            g,
            family,
            coloring,
            x_first,
            candidates,
            used: vec![false; g.n()],
            prefix: Vec::with_capacity(g.n()),
            max_k: family.max_size(),
        }
    }

    /// Invariant: every unused vertex can be appended to the current prefix.
    /// A vertex that cannot be appended now never can be later, since the
    /// blocking occurrence stays in any extension; so a prefix leaving such a
    /// vertex behind is abandoned at once.
    fn run(&mut self) -> bool {
        if self.prefix.len() == self.g.n() {
            return true;
        }
        for idx in 0..self.candidates.len() {
            let v = self.candidates[idx];
            if self.used[v] {
                continue;
            }
            self.used[v] = true;
            self.prefix.push(v);
            let alive = self.candidates.iter().all(|&u| self.used[u] || self.can_still_append(u));
            if alive && self.run() {
                return true;
            }
            self.prefix.pop();
            self.used[v] = false;
        }
        false
    }

    /// Whether appending `u` completes no occurrence and no violation that
    /// involves the last prefix vertex.
    fn can_still_append(&self, u: usize) -> bool {
        let (&last, rest) = self.prefix.split_last().unwrap();
        if self.x_first && self.coloring.unwrap().side(u) == Side::X && self.g.has_edge(last, u) {
            return false;
        }
        let mut buf = [0usize; MAX_PATTERN_SIZE];
        for k in 2..=self.max_k {
            let patterns: Vec<&OrderedPattern> = self.family.patterns().iter().filter(|p| p.size() == k).collect();
            if patterns.is_empty() || rest.len() < k - 2 {
                continue;
            }
            let hit = for_each_subsequence(rest, k - 2, &mut |vs| {
                buf[..k - 2].copy_from_slice(vs);
                buf[k - 2] = last;
                buf[k - 1] = u;
                patterns.iter().any(|p| p.matches(self.g, &buf[..k], self.coloring))
            });
            if hit {
                return false;
            }
        }
        true
    }
}
