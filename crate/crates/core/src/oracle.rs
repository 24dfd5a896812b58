//! Brute-force deciders and exhaustive agreement runs.
//!
//! Nothing here calls the backtracking search or the model constructions to
//! produce its own answers: orderings are enumerated outright and candidate
//! words are enumerated letter by letter. The word search only considers
//! words in which every letter occurs once or twice, the shape produced by
//! both model constructions; this restriction is the one place where the
//! oracle leans on the constructions it is meant to check.

use std::collections::HashSet;
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Bipartition, Graph, GridGraph, LabeledGraph, Labeling};
use crate::models::{ordering_to_triangle_model, validate_icb};
use crate::patterns::{
    find_occurrence, find_pattern_free_ordering, labeling_is_f_free, labeling_is_f_free_by_reduction, Forbidden,
    PatternFamily,
};
use crate::recognition::{
    grid_12_representable, is_12_representable, is_12_representable_bipartite, tree_12_representable, Model,
};
use crate::word::{u_represents, PatternWord, Word};

pub const MAX_ORDERING_N: usize = 8;
pub const MAX_WORD_N: usize = 5;

/// Lexicographic successor of a permutation; false after the last one.
fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Calls `f` on every vertex ordering of `0..n` in lexicographic order until
/// it returns true.
pub fn for_each_ordering(n: usize, mut f: impl FnMut(&[usize]) -> bool) -> bool {
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        if f(&p) {
            return true;
        }
        if !next_permutation(&mut p) {
            return false;
        }
    }
}

/// First ordering (lexicographic as a vertex sequence) avoiding `family`.
pub fn brute_force_ordering(
    g: &Graph,
    family: &PatternFamily,
    coloring: Option<&Bipartition>,
) -> Result<Option<Labeling>> {
    if g.n() > MAX_ORDERING_N {
        return Err(Error::TooLarge { n: g.n(), max: MAX_ORDERING_N });
    }
    let mut found = None;
    let mut err = None;
    for_each_ordering(g.n(), |order| {
        let l = Labeling::from_order(order).unwrap();
        match find_occurrence(g, &l, family, coloring) {
            Ok(None) => {
                found = Some(l);
                true
            }
            Ok(Some(_)) => false,
            Err(e) => {
                err = Some(e);
                true
            }
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(found),
    }
}

/// A 12-representant of `lg` in which each letter occurs once or twice,
/// searching by length and then lexicographically.
pub fn brute_force_word(lg: &LabeledGraph) -> Result<Option<Word>> {
    let n = lg.graph().n();
    if n > MAX_WORD_N {
        return Err(Error::TooLarge { n, max: MAX_WORD_N });
    }
    let twelve = PatternWord::twelve();
    for len in n..=2 * n {
        let mut counts = vec![0u8; n + 1];
        let mut letters = Vec::with_capacity(len);
        let mut found = None;
        word_search(n, len, &mut counts, &mut letters, &mut |w| {
            let word = Word::new(w.to_vec()).unwrap();
            if u_represents(&word, lg, &twelve).unwrap().holds() {
                found = Some(word);
                true
            } else {
                false
            }
        });
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

fn word_search(
    n: usize,
    len: usize,
    counts: &mut [u8],
    letters: &mut Vec<u32>,
    f: &mut dyn FnMut(&[u32]) -> bool,
) -> bool {
    let remaining = len - letters.len();
    let missing = (1..=n).filter(|&l| counts[l] == 0).count();
    if missing > remaining {
        return false;
    }
    if remaining == 0 {
        return f(letters);
    }
    for l in 1..=n {
        if counts[l] == 2 {
            continue;
        }
        counts[l] += 1;
        letters.push(l as u32);
        if word_search(n, len, counts, letters, f) {
            return true;
        }
        letters.pop();
        counts[l] -= 1;
    }
    false
}

/// Every graph on `n` labeled vertices, indexed by the bitmask of its edges
/// in lexicographic pair order.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let mut g = Graph::new(n);
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    })
}

/// Rooted canonical string of the subtree at `v` (parent `p`).
fn ahu(g: &Graph, v: usize, p: usize) -> String {
    let mut kids: Vec<String> = g.neighbors(v).filter(|&u| u != p).map(|u| ahu(g, u, v)).collect();
    kids.sort();
    format!("({})", kids.concat())
}

/// Canonical form of a tree, rooted at its center (or the smaller of the two
/// bicentral encodings).
pub fn tree_canonical(g: &Graph) -> String {
    let n = g.n();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for u in g.neighbors(v) {
                degree[u] -= 1;
                if degree[u] == 1 {
                    next.push(u);
                }
            }
        }
        layer = next;
    }
    layer.iter().map(|&c| ahu(g, c, usize::MAX)).min().unwrap_or_default()
}

/// All unlabeled trees on `n` vertices, one representative each.
pub fn all_trees(n: usize) -> Vec<Graph> {
    if n == 0 {
        return Vec::new();
    }
    let mut level = vec![Graph::new(1)];
    for size in 1..n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for t in &level {
            for v in 0..size {
                let mut bigger = Graph::new(size + 1);
                for (a, b) in t.edges() {
                    bigger.add_edge(a, b).unwrap();
                }
                bigger.add_edge(v, size).unwrap();
                if seen.insert(tree_canonical(&bigger)) {
                    next.push(bigger);
                }
            }
        }
        level = next;
    }
    level
}

/// Graph family enumerated by a corpus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorpusClass {
    All,
    Bipartite,
    Tree,
    /// Every cell subset of a `rows x cols` grid; `max_n` is ignored.
    GridSubset {
        rows: usize,
        cols: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Corpus {
    pub max_n: usize,
    pub class: CorpusClass,
}

/// One graph of a corpus; grid instances keep their lattice points.
#[derive(Debug, Clone)]
pub struct Instance {
    pub graph: Graph,
    pub points: Option<Vec<(i64, i64)>>,
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.points {
            Some(p) => write!(f, "grid cells {p:?}"),
            None => write!(f, "{:?}", self.graph),
        }
    }
}

impl Corpus {
    pub fn instances(&self) -> Vec<Instance> {
        let plain = |graph| Instance { graph, points: None };
        match self.class {
            CorpusClass::All => (1..=self.max_n).flat_map(all_graphs).map(plain).collect(),
            CorpusClass::Bipartite => {
                (1..=self.max_n).flat_map(all_graphs).filter(|g| g.bipartition().is_some()).map(plain).collect()
            }
            CorpusClass::Tree => (1..=self.max_n).flat_map(all_trees).map(plain).collect(),
            CorpusClass::GridSubset { rows, cols } => {
                let cells: Vec<(i64, i64)> =
                    (0..rows as i64).flat_map(|r| (0..cols as i64).map(move |c| (r, c))).collect();
                (0u64..1 << cells.len())
                    .map(|mask| {
                        let pts: Vec<_> =
                            cells.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p).collect();
                        let graph = GridGraph::from_points(&pts).unwrap().graph().clone();
                        Instance { graph, points: Some(pts) }
                    })
                    .collect()
            }
        }
    }
}

/// Pass/fail tally of one agreement property.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: usize,
    pub failed: usize,
    pub first_counterexample: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Report {
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn disagreements(&self) -> usize {
        self.checks.iter().map(|c| c.failed).sum()
    }

    pub fn is_clean(&self) -> bool {
        self.disagreements() == 0
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{:<36} {:>10} {:>8}", "check", "passed", "failed")?;
        for c in &self.checks {
            writeln!(f, "{:<36} {:>10} {:>8}", c.name, c.passed, c.failed)?;
            if let Some(ce) = &c.first_counterexample {
                writeln!(f, "  first counterexample: {ce}")?;
            }
        }
        Ok(())
    }
}

/// Outcome of one property on one instance: `None` when not applicable,
/// otherwise `Ok(())` or a failure message.
type Outcome = Option<std::result::Result<(), String>>;

fn agree(a: bool, b: bool, what: &str) -> Outcome {
    Some(if a == b { Ok(()) } else { Err(format!("{what}: {a} vs {b}")) })
}

fn flatten(r: Result<Outcome>) -> Outcome {
    r.unwrap_or_else(|e| Some(Err(format!("error: {e}"))))
}

/// Search agrees with enumeration of all orderings on existence.
pub fn check_search_vs_brute(g: &Graph) -> Result<Outcome> {
    let fam = PatternFamily::i3_j4_q4();
    let fast = find_pattern_free_ordering(g, &fam, None, false)?.is_some();
    let slow = brute_force_ordering(g, &fam, None)?.is_some();
    Ok(agree(fast, slow, "search vs enumeration"))
}

/// A positive general decision carries the searched ordering as its
/// labeling and its word verifies under it.
pub fn check_certificate_same_labeling(g: &Graph) -> Result<Outcome> {
    let d = is_12_representable(g)?;
    let Some(cert) = d.certificate else { return Ok(None) };
    let sigma = find_pattern_free_ordering(g, &PatternFamily::i3_j4_q4(), None, false)?;
    if sigma.as_ref() != Some(&cert.labeling) {
        return Ok(Some(Err("certificate labeling differs from the searched ordering".into())));
    }
    let lg = LabeledGraph::new(g.clone(), cert.labeling)?;
    let ok = u_represents(&cert.word, &lg, &PatternWord::twelve())?.holds();
    Ok(agree(ok, true, "certificate word verifies"))
}

/// For every ordering: the endpoint digraph is acyclic exactly when the
/// ordering avoids `I3`, `J4`, `Q4`.
pub fn check_acyclicity_all_orderings(g: &Graph) -> Result<Outcome> {
    if g.n() > MAX_ORDERING_N {
        return Err(Error::TooLarge { n: g.n(), max: MAX_ORDERING_N });
    }
    let fam = PatternFamily::i3_j4_q4();
    let mut failure = None;
    for_each_ordering(g.n(), |order| {
        let sigma = Labeling::from_order(order).unwrap();
        let acyclic = ordering_to_triangle_model(g, &sigma).is_ok();
        let free = find_occurrence(g, &sigma, &fam, None).unwrap().is_none();
        if acyclic != free {
            failure = Some(format!("ordering {order:?}: acyclic {acyclic}, pattern-free {free}"));
            return true;
        }
        false
    });
    Ok(Some(failure.map_or(Ok(()), Err)))
}

/// For every labeling: a word with letters used once or twice exists exactly
/// when the labeling is `{I3, J4, Q4}`-free.
pub fn check_word_oracle_all_labelings(g: &Graph) -> Result<Outcome> {
    if g.n() > MAX_WORD_N {
        return Err(Error::TooLarge { n: g.n(), max: MAX_WORD_N });
    }
    let mut failure = None;
    for_each_ordering(g.n(), |order| {
        let lg = LabeledGraph::new(g.clone(), Labeling::from_order(order).unwrap()).unwrap();
        let has_word = brute_force_word(&lg).unwrap().is_some();
        let free = labeling_is_f_free(&lg, Forbidden::I3J4Q4).0;
        if has_word != free {
            failure = Some(format!("ordering {order:?}: word {has_word}, F-free {free}"));
            return true;
        }
        false
    });
    Ok(Some(failure.map_or(Ok(()), Err)))
}

/// Scanner and induced-subgraph reduction agree on both families.
pub fn check_view_equivalence(g: &Graph) -> Outcome {
    let lg = LabeledGraph::identity(g.clone());
    for fam in [Forbidden::I3J4Q4, Forbidden::J4Q4] {
        let a = labeling_is_f_free(&lg, fam).0;
        let b = labeling_is_f_free_by_reduction(&lg, fam);
        if a != b {
            return Some(Err(format!("{fam:?}: scanner {a}, reduction {b}")));
        }
    }
    Some(Ok(()))
}

/// Bipartite decider agrees with the general one; its model validates.
pub fn check_bipartite_pipeline(g: &Graph) -> Result<Outcome> {
    let bip = is_12_representable_bipartite(g)?;
    let gen = is_12_representable(g)?;
    if bip.representable != gen.representable {
        return Ok(agree(bip.representable, gen.representable, "bipartite vs general"));
    }
    if let Some(cert) = &bip.certificate {
        let Model::Interval(m) = &cert.model else {
            return Ok(Some(Err("bipartite certificate without interval model".into())));
        };
        if !validate_icb(g, m)?.is_valid() {
            return Ok(Some(Err("interval model does not validate".into())));
        }
    }
    Ok(Some(Ok(())))
}

pub fn check_tree(g: &Graph) -> Result<Outcome> {
    let t = tree_12_representable(g)?.representable;
    let gen = is_12_representable(g)?.representable;
    Ok(agree(t, gen, "tree vs general"))
}

pub fn check_grid(points: &[(i64, i64)]) -> Result<Outcome> {
    let grid = GridGraph::from_points(points)?;
    let a = grid_12_representable(&grid)?.representable;
    let b = is_12_representable(grid.graph())?.representable;
    Ok(agree(a, b, "grid vs general"))
}

type Property = (&'static str, fn(&Instance) -> Outcome);

fn properties(class: CorpusClass) -> Vec<Property> {
    match class {
        CorpusClass::All => vec![
            ("search agrees with enumeration", |i| flatten(check_search_vs_brute(&i.graph))),
            ("certificate keeps labeling", |i| flatten(check_certificate_same_labeling(&i.graph))),
            ("scanner agrees with reduction", |i| check_view_equivalence(&i.graph)),
            ("acyclic iff pattern-free", |i| {
                if i.graph.n() <= 6 {
                    flatten(check_acyclicity_all_orderings(&i.graph))
                } else {
                    None
                }
            }),
            ("word exists iff labeling F-free", |i| {
                if i.graph.n() <= 4 {
                    flatten(check_word_oracle_all_labelings(&i.graph))
                } else {
                    None
                }
            }),
        ],
        CorpusClass::Bipartite => {
            vec![("bipartite agrees with general", |i| flatten(check_bipartite_pipeline(&i.graph)))]
        }
        CorpusClass::Tree => vec![("tree agrees with general", |i| flatten(check_tree(&i.graph)))],
        CorpusClass::GridSubset { .. } => {
            vec![("grid agrees with general", |i| flatten(check_grid(i.points.as_deref().unwrap_or_default())))]
        }
    }
}

/// Runs every agreement property of the corpus class over all instances,
/// in parallel. The reported counterexample is the first in corpus order.
pub fn cross_validate(corpus: &Corpus) -> Report {
    let instances = corpus.instances();
    let checks = properties(corpus.class)
        .into_iter()
        .map(|(name, prop)| {
            let outcomes: Vec<Outcome> = instances.par_iter().map(prop).collect();
            let passed = outcomes.iter().filter(|o| matches!(o, Some(Ok(())))).count();
            let failures: Vec<(usize, &String)> = outcomes
                .iter()
                .enumerate()
                .filter_map(|(i, o)| match o {
                    Some(Err(msg)) => Some((i, msg)),
                    _ => None,
                })
                .collect();
            CheckResult {
                name,
                passed,
                failed: failures.len(),
                first_counterexample: failures.first().map(|&(i, msg)| format!("{}: {msg}", instances[i])),
            }
        })
        .collect();
    Report { checks }
}
