use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use twelverep::graph::{Bipartition, Graph, GridGraph, LabeledGraph, Labeling};
use twelverep::models::{
    ordering_to_icb_model, ordering_to_triangle_model, triangle_to_representant, validate_icb, validate_triangle,
};
use twelverep::oracle::{all_graphs, check_view_equivalence, cross_validate, Corpus, CorpusClass};
use twelverep::patterns::{OrderedPattern, PatternFamily};
use twelverep::recognition::{find_long_induced_cycle, is_12_representable};
use twelverep::word::{reverse, u_represents, PatternWord, Word};

#[test]
fn scanner_matches_reduction_on_all_graphs_up_to_7() {
    for n in 1..=7 {
        for g in all_graphs(n) {
            assert_eq!(check_view_equivalence(&g), Some(Ok(())), "{g:?}");
        }
    }
}

#[test]
fn all_graphs_up_to_6_cross_validate() {
    let report = cross_validate(&Corpus { max_n: 6, class: CorpusClass::All });
    assert!(report.is_clean(), "{report}");
}

#[test]
fn triangle_round_trip_keeps_the_ordering() {
    let fam = PatternFamily::i3_j4_q4();
    for n in 1..=6 {
        for g in all_graphs(n) {
            let Some(sigma) = twelverep::patterns::find_pattern_free_ordering(&g, &fam, None, false).unwrap() else {
                continue;
            };
            let model = ordering_to_triangle_model(&g, &sigma).unwrap();
            assert!(validate_triangle(&g.complement(), &model).unwrap().is_valid());
            let (labeling, word) = triangle_to_representant(&model).unwrap();
            assert_eq!(labeling, sigma);
            let lg = LabeledGraph::new(g.clone(), labeling).unwrap();
            assert!(u_represents(&word, &lg, &PatternWord::twelve()).unwrap().holds(), "{g:?}");
        }
    }
}

/// Visits every X-first ordering of `g` avoiding the containment patterns.
fn for_each_icb_ordering(g: &Graph, bp: &Bipartition, f: &mut dyn FnMut(&[usize])) {
    fn subsets(items: &[usize], k: usize, buf: &mut Vec<usize>, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if k == 0 {
            return f(buf);
        }
        for i in 0..items.len() {
            buf.push(items[i]);
            let hit = subsets(&items[i + 1..], k - 1, buf, f);
            buf.pop();
            if hit {
                return true;
            }
        }
        false
    }
    fn completes(g: &Graph, bp: &Bipartition, pats: &[OrderedPattern], prefix: &[usize]) -> bool {
        let (last, rest) = prefix.split_last().unwrap();
        pats.iter().any(|p| {
            subsets(rest, p.size() - 1, &mut Vec::new(), &mut |vs| {
                let mut vs = vs.to_vec();
                vs.push(*last);
                p.matches(g, &vs, Some(bp))
            })
        })
    }
    fn rec(
        g: &Graph,
        bp: &Bipartition,
        pats: &[OrderedPattern],
        prefix: &mut Vec<usize>,
        used: &mut [bool],
        f: &mut dyn FnMut(&[usize]),
    ) {
        if prefix.len() == g.n() {
            f(prefix);
            return;
        }
        for v in 0..g.n() {
            if used[v] {
                continue;
            }
            let y_before_x = bp.side(v) == twelverep::Side::X && prefix.iter().any(|&u| g.has_edge(u, v));
            prefix.push(v);
            if !y_before_x && !completes(g, bp, pats, prefix) {
                used[v] = true;
                rec(g, bp, pats, prefix, used, f);
                used[v] = false;
            }
            prefix.pop();
        }
    }
    let fam = PatternFamily::interval_containment();
    rec(g, bp, fam.patterns(), &mut Vec::new(), &mut vec![false; g.n()], f);
}

fn icb_orderings_on(n: usize) {
    for g in all_graphs(n) {
        let Some(bp) = g.bipartition() else { continue };
        let mut count = 0;
        for_each_icb_ordering(&g, &bp, &mut |order| {
            let sigma = Labeling::from_order(order).unwrap();
            let model = ordering_to_icb_model(&g, &bp, &sigma).unwrap_or_else(|e| panic!("{g:?} {order:?}: {e}"));
            assert!(validate_icb(&g, &model).unwrap().is_valid(), "{g:?} {order:?}");
            count += 1;
        });
        let representable = is_12_representable(&g).unwrap().representable;
        assert_eq!(count > 0, representable, "{g:?}");
    }
}

#[test]
fn every_icb_ordering_builds_a_valid_model() {
    for n in 1..=6 {
        icb_orderings_on(n);
    }
}

// About ten minutes on one core.
#[test]
#[ignore]
fn every_icb_ordering_builds_a_valid_model_on_7_vertices() {
    icb_orderings_on(7);
}

#[test]
fn representability_is_hereditary() {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..200 {
        let n = rng.gen_range(4..=9);
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(0.4) {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        if !is_12_representable(&g).unwrap().representable {
            continue;
        }
        let mut vs: Vec<usize> = (0..n).collect();
        vs.shuffle(&mut rng);
        vs.truncate(rng.gen_range(1..n));
        vs.sort();
        let sub = g.induced_subgraph(&vs).unwrap();
        assert!(is_12_representable(&sub).unwrap().representable, "{g:?} on {vs:?}");
    }
}

/// Chordless cycles of length at least 8 in the 4x4 grid, by brute force
/// over vertex subsets.
#[test]
fn long_cycle_search_agrees_with_subset_enumeration_on_4x4_grid() {
    let grid = GridGraph::rectangle(4, 4);
    let g = grid.graph();
    let is_cycle = |vs: &[usize]| {
        let h = g.induced_subgraph(vs).unwrap();
        h.n() >= 3 && (0..h.n()).all(|v| h.degree(v) == 2) && h.is_connected()
    };
    let mut lengths = std::collections::BTreeSet::new();
    for mask in 0u32..1 << 16 {
        if mask.count_ones() < 8 {
            continue;
        }
        let vs: Vec<usize> = (0..16).filter(|i| mask >> i & 1 == 1).collect();
        if is_cycle(&vs) {
            lengths.insert(vs.len());
        }
    }
    assert!(lengths.contains(&8));
    let found = find_long_induced_cycle(g, 8).expect("an induced 8-cycle exists");
    assert!(found.len() >= 8 && is_cycle(&found));
    let longest = *lengths.iter().max().unwrap();
    assert!(find_long_induced_cycle(g, longest + 1).is_none());
    assert!(find_long_induced_cycle(g, longest).is_some());
}

fn word_and_graph() -> impl Strategy<Value = (Word, LabeledGraph)> {
    (1usize..=7)
        .prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            (
                Just(n),
                prop::collection::vec(1..=n as u32, 0..2 * n),
                Just((1..=n as u32).collect::<Vec<_>>()).prop_shuffle(),
                prop::collection::vec(any::<bool>(), pairs),
            )
        })
        .prop_map(|(n, extra, perm, bits)| {
            let mut letters = perm;
            letters.extend(extra);
            let mut g = Graph::new(n);
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        g.add_edge(u, v).unwrap();
                    }
                    i += 1;
                }
            }
            (Word::new(letters).unwrap(), LabeledGraph::identity(g))
        })
}

proptest! {
    #[test]
    fn reverse_swaps_12_and_21((w, lg) in word_and_graph()) {
        let a = u_represents(&w, &lg, &PatternWord::twelve()).unwrap().holds();
        let b = u_represents(&reverse(&w), &lg, &PatternWord::twenty_one()).unwrap().holds();
        prop_assert_eq!(a, b);
    }
}
