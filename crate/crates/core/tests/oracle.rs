use betadf::dfset::{df_of_beta, DfResult};
use betadf::exact_arith::beta_from_kneading;
use betadf::markov_oracle::{build_partition, minimal_loops, oracle_hull};
use betadf::symbolic::{finite_kneading, EventuallyPeriodic, Word};

const CASES: &[(&str, u8)] = &[
    ("11", 2),
    ("101", 2),
    ("111", 2),
    ("1001", 2),
    ("11001", 2),
    ("2121", 3),
    ("21", 3),
    ("201", 3),
    ("22", 3),
    ("211", 3),
    ("2101", 3),
    ("31", 4),
    ("32", 4),
    ("301", 4),
    ("3201", 4),
    ("33", 4),
];

#[test]
fn loops_and_pipeline_agree() {
    for &(text, k) in CASES {
        let word = Word::parse(text, k).unwrap();
        let beta = beta_from_kneading(&EventuallyPeriodic::with_zero_tail(word.digits().to_vec(), k).unwrap()).unwrap();
        assert_eq!(finite_kneading(&beta, 100).unwrap().as_deref(), Some(word.digits()), "{text}");
        let (_, graph) = build_partition(&beta, &word).unwrap();
        let loops = minimal_loops(&graph);
        let oracle = oracle_hull(&loops, &graph.labels, k).unwrap();
        let df = df_of_beta(&beta, 10_000, 100).unwrap();
        let DfResult::Exact(poly) = df.result else { panic!("{text}: finite orbit must give an exact polytope") };
        assert!(oracle.same_vertices(&poly), "{text}: loops give {:?}, pipeline gives {:?}", oracle.points(), poly.points());
    }
}
