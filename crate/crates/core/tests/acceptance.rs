//! Acceptance criteria. Each criterion prints one PASS/FAIL line with its
//! elapsed time and limit; the binary fails if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use twelverep::graph::{complete, cycle, fixtures, Bipartition, Graph, LabeledGraph, Labeling, Side};
use twelverep::models::{
    icb_to_representant, ordering_to_icb_model, triangle_to_representant, validate_icb, IntervalModel, TriangleModel,
};
use twelverep::oracle::{
    all_graphs, check_acyclicity_all_orderings, check_bipartite_pipeline, check_certificate_same_labeling,
    check_search_vs_brute, check_word_oracle_all_labelings, cross_validate, Corpus, CorpusClass,
};
use twelverep::recognition::is_12_representable;
use twelverep::word::{reverse, u_represents, PatternWord, Word};

type Check = Result<(), String>;
type Criterion = (&'static str, Duration, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn represents(word: &Word, g: &Graph, labeling: &Labeling, u: &PatternWord) -> bool {
    let lg = LabeledGraph::new(g.clone(), labeling.clone()).unwrap();
    u_represents(word, &lg, u).unwrap().holds()
}

fn g1_model() -> IntervalModel {
    let intervals = [(1, 17), (2, 8), (3, 7), (4, 14), (5, 6), (10, 16), (11, 15), (12, 13)];
    let sides = [Side::X, Side::X, Side::Y, Side::X, Side::Y, Side::X, Side::Y, Side::Y];
    IntervalModel::new(intervals.iter().map(|&(l, r)| (l as f64, r as f64)).collect(), Bipartition::new(sides.to_vec()))
        .unwrap()
}

fn g2_model() -> TriangleModel {
    let apex = [3.0, 6.0, 8.0, 10.0, 12.0, 14.0];
    let base = [(1.0, 3.0), (2.0, 6.0), (5.0, 10.0), (11.0, 14.0), (4.0, 8.0), (9.0, 12.0)];
    TriangleModel::new(apex.to_vec(), base.to_vec()).unwrap()
}

fn example_1() -> Check {
    let g1 = fixtures::g1();
    let word: Word = "3 5 7 8 5 3 2 8 4 7 6 1 1 2 4 6".parse().unwrap();
    ensure(represents(&word, &g1, &Labeling::identity(8), &PatternWord::twelve()), || {
        "verify rejected the word".into()
    })?;
    let (labeling, built) = icb_to_representant(&g1_model()).unwrap();
    ensure(labeling == Labeling::identity(8), || format!("labeling {}", labeling.to_pairs_string()))?;
    ensure(built == word, || format!("word {built}"))
}

fn example_2() -> Check {
    let (labeling, word) = triangle_to_representant(&g2_model()).unwrap();
    ensure(word.to_string() == "4 6 4 3 6 5 2 3 5 1 2 1", || format!("word {word}"))?;
    ensure(labeling == Labeling::identity(6), || format!("labeling {}", labeling.to_pairs_string()))?;
    let co_g2 = fixtures::g2().complement();
    ensure(represents(&word, &co_g2, &labeling, &PatternWord::twelve()), || "verify rejected the word".into())
}

fn negative_fixtures() -> Check {
    let mut graphs: Vec<(String, Graph)> = (5..=8).map(|n| (format!("C{n}"), cycle(n))).collect();
    graphs.extend(fixtures::grid_obstructions().into_iter().map(|f| (f.name.to_string(), f.graph)));
    for (name, g) in graphs {
        ensure(!is_12_representable(&g).unwrap().representable, || format!("{name} accepted"))?;
    }
    Ok(())
}

fn each_graph(graphs: impl Iterator<Item = Graph>, f: impl Fn(&Graph) -> twelverep::Result<Option<Check>>) -> Check {
    let mut checked = 0;
    for g in graphs {
        match f(&g) {
            Ok(Some(Err(msg))) => return Err(format!("{g:?}: {msg}")),
            Err(e) => return Err(format!("{g:?}: {e}")),
            Ok(Some(Ok(()))) => checked += 1,
            Ok(None) => {}
        }
    }
    ensure(checked > 0, || "nothing checked".into())
}

fn search_equivalence_on_5_vertices() -> Check {
    ensure(all_graphs(5).count() == 1024, || "corpus size".into())?;
    each_graph(all_graphs(5), check_search_vs_brute)?;
    each_graph(all_graphs(5), check_certificate_same_labeling)
}

fn bipartite_equivalence() -> Check {
    let graphs = (1..=7).flat_map(all_graphs).filter(|g| g.bipartition().is_some());
    each_graph(graphs, check_bipartite_pipeline)
}

fn word_oracle() -> Check {
    each_graph((1..=4).flat_map(all_graphs), check_word_oracle_all_labelings)
}

fn report_check(corpus: Corpus) -> Check {
    let report = cross_validate(&corpus);
    ensure(report.is_clean() && report.checks.iter().all(|c| c.passed > 0), || format!("\n{report}"))
}

fn random_icb_model(n: usize, rng: &mut StdRng) -> IntervalModel {
    let mut ends: Vec<u32> = (1..=2 * n as u32).collect();
    ends.shuffle(rng);
    let intervals = ends.chunks(2).map(|c| (c[0].min(c[1]) as f64, c[0].max(c[1]) as f64)).collect();
    let sides = (0..n).map(|_| if rng.gen_bool(0.5) { Side::X } else { Side::Y }).collect();
    IntervalModel::new(intervals, Bipartition::new(sides)).unwrap()
}

fn large_icb_certificates() -> Check {
    let mut rng = StdRng::seed_from_u64(200);
    for _ in 0..5 {
        let m = random_icb_model(200, &mut rng);
        let g = m.implied_graph();
        let mut by_left: Vec<usize> = (0..200).collect();
        by_left.sort_by(|&a, &b| m.interval(a).0.total_cmp(&m.interval(b).0));
        let sigma = Labeling::from_order(&by_left).unwrap();
        let built = ordering_to_icb_model(&g, m.bipartition(), &sigma).map_err(|e| e.to_string())?;
        ensure(validate_icb(&g, &built).unwrap().is_valid(), || "rebuilt model invalid".into())?;
        let (labeling, word) = icb_to_representant(&built).unwrap();
        ensure(word.len() == 400, || format!("word length {}", word.len()))?;
        ensure(represents(&word, &g, &labeling, &PatternWord::twelve()), || "word rejected".into())?;
    }
    Ok(())
}

fn grid_characterization() -> Check {
    report_check(Corpus { max_n: 0, class: CorpusClass::GridSubset { rows: 3, cols: 4 } })
}

fn acyclicity_equivalence() -> Check {
    each_graph((1..=5).flat_map(all_graphs), check_acyclicity_all_orderings)
}

fn reverse_duality() -> Check {
    let mut rng = StdRng::seed_from_u64(10_000);
    let (twelve, twenty_one) = (PatternWord::twelve(), PatternWord::twenty_one());
    for _ in 0..10_000 {
        let n = rng.gen_range(1..=8);
        let mut letters: Vec<u32> = (1..=n as u32).collect();
        for _ in 0..rng.gen_range(0..=2 * n) {
            letters.push(rng.gen_range(1..=n as u32));
        }
        letters.shuffle(&mut rng);
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(0.5) {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        let w = Word::new(letters).unwrap();
        let lg = LabeledGraph::identity(g);
        let a = u_represents(&w, &lg, &twelve).unwrap().holds();
        let b = u_represents(&reverse(&w), &lg, &twenty_one).unwrap().holds();
        ensure(a == b, || format!("word {w}, {:?}", lg.graph()))?;
    }
    // sanity: the monotone words still behave
    let k4 = LabeledGraph::identity(complete(4));
    ensure(u_represents(&"4 3 2 1".parse().unwrap(), &k4, &twelve).unwrap().holds(), || "K4".into())
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let criteria: Vec<Criterion> = vec![
        ("1  G1 word verifies; the G1 containment model gives the same labeling and word", secs(1), example_1),
        ("2  the G2 triangle model gives 4 6 4 3 6 5 2 3 5 1 2 1 for the complement of G2", secs(1), example_2),
        ("3  C5..C8 and the six grid fixtures are rejected", secs(10), negative_fixtures),
        (
            "4  5-vertex graphs: search = enumeration, certificate keeps the labeling",
            secs(600),
            search_equivalence_on_5_vertices,
        ),
        (
            "5  bipartite graphs on <= 7 vertices: bipartite = general, models validate",
            secs(1800),
            bipartite_equivalence,
        ),
        ("6  graphs on <= 4 vertices, all labelings: word exists = F-free", secs(600), word_oracle),
        ("7a 3x4 grid subsets: grid checker = general decider", secs(600), grid_characterization),
        ("7b n = 200 random containment models rebuild, convert and verify", secs(5), large_icb_certificates),
        ("8  trees on <= 9 vertices: tree checker = general decider", secs(600), || {
            report_check(Corpus { max_n: 9, class: CorpusClass::Tree })
        }),
        ("9  graphs on <= 5 vertices, all orderings: acyclic = pattern-free", secs(600), acyclicity_equivalence),
        ("10 10000 random pairs: 12 on w = 21 on reverse(w)", secs(60), reverse_duality),
    ];

    let mut failures = 0;
    for (name, limit, run) in criteria {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let verdict = match (&result, elapsed <= limit) {
            (Ok(()), true) => "PASS".to_string(),
            (Ok(()), false) => "FAIL (time limit exceeded)".to_string(),
            (Err(msg), _) => format!("FAIL ({msg})"),
        };
        if !verdict.starts_with("PASS") {
            failures += 1;
        }
        println!("criterion {name}: {verdict} [{:.2}s / limit {}s]", elapsed.as_secs_f64(), limit.as_secs());
    }
    if failures == 0 {
        println!("acceptance: all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failures} criteria failed");
        ExitCode::FAILURE
    }
}
