use std::collections::HashSet;
use std::sync::Arc;

use sdfa_core::dsl::parse_ring;
use sdfa_core::harness::{build_corpus, registry, Corpus, CorpusSpec, Harness, Status};
use sdfa_core::report::ReportDocument;
use sdfa_core::FiniteRing;

/// Every structural statement the suite is meant to cover, by the property
/// that checks it.
const REQUIRED: &[&str] = &[
    "nonzero-sdf-is-radical",
    "nonzero-hypothesis-fixtures",
    "guards-removable-for-nonzero-ideals",
    "char-two-radical-is-sdf",
    "two-in-ideal-equivalences",
    "two-unit-sdf-is-prime",
    "linear-system-oracle-equivalence",
    "integer-ideals-closed-form",
    "boolean-times-integers",
    "field-polynomial-principal-ideals",
    "localization-preserves-sdf",
    "hom-preimage-sdf",
    "hom-image-sdf",
    "quotient-correspondence",
    "hom-hypotheses-counterexamples",
    "all-nonzero-sdf-forces-vnr-reduction",
    "all-ideals-report-consistent",
    "all-ideals-fixtures",
    "z3-cubed-counterexample",
    "square-zero-extension-zero-ideal",
    "boolean-rings-all-sdf",
    "field-products",
    "comaximal-prime-intersection",
    "irredundant-prime-intersection",
    "polynomial-sampled",
    "polynomial-x-ideals",
    "zn-zero-ideal-closed-form",
    "product-rules",
    "product-unified-rule",
    "product-z4-squared-fixture",
    "idealization-rules",
    "idealization-zero-zero",
    "amalgamation-rule",
    "amalgamation-zero-ideal-differs",
    "weakly-fixture-z4-squared",
    "weakly-two-unit-is-weakly-prime",
    "localization-preserves-weakly-sdf",
    "hom-preimage-weakly-sdf",
    "hom-image-weakly-sdf",
    "quotient-weakly-sdf",
    "weakly-not-sdf-in-nilradical",
    "weakly-not-sdf-consequences",
    "weakly-full-factor-product",
    "weakly-both-factors-product",
    "weakly-product-fixture",
    "nil-zn-classification",
];

fn small_spec() -> CorpusSpec {
    CorpusSpec { zn_max: 30, pair_factor_max_order: 6, triple_factor_max_order: 3, ..CorpusSpec::default() }
}

#[test]
fn registry_covers_every_statement() {
    let ids: HashSet<&str> = registry().iter().map(|p| p.id).collect();
    for id in REQUIRED {
        assert!(ids.contains(id), "no property registered as {id}");
    }
    assert!(registry().len() >= 25);
    assert_eq!(ids.len(), registry().len(), "duplicate ids");
}

#[test]
fn only_polynomial_search_is_sampled() {
    let sampled: Vec<&str> = registry().iter().filter(|p| p.sampled).map(|p| p.id).collect();
    assert_eq!(sampled, ["polynomial-sampled"]);
}

#[test]
fn default_corpus_passes_everything() {
    let h = Harness::new(build_corpus(&CorpusSpec::default()).unwrap());
    assert!(h.corpus.rings.len() >= 300);
    for r in h.run_all() {
        assert_eq!(r.status, Status::Pass, "{r:?}");
    }
}

#[test]
fn zn_zero_ideal_instance_count_follows_zn_max() {
    for (zn_max, expected) in [(60, 59), (120, 119)] {
        let h = Harness::new(build_corpus(&CorpusSpec { zn_max, ..small_spec() }).unwrap());
        let r = h.run_property("zn-zero-ideal-closed-form").unwrap();
        assert_eq!((r.status, r.checked_instances), (Status::Pass, expected));
    }
}

#[test]
fn unknown_property_is_an_error() {
    let h = Harness::new(Corpus::of(small_spec(), vec![parse_ring("zn(4)").unwrap()]));
    assert!(h.run_property("no-such-property").is_err());
    assert!(h.run_only(&["ring-axioms".into(), "nope".into()]).is_err());
}

/// `Z_6` with one multiplication entry changed.
fn mutant() -> Arc<FiniteRing> {
    let r = parse_ring("zn(6)").unwrap();
    let n = r.order();
    let add: Vec<u32> = (0..n * n).map(|k| r.add(k / n, k % n) as u32).collect();
    let mut mul: Vec<u32> = (0..n * n).map(|k| r.mul(k / n, k % n) as u32).collect();
    mul[2 * n + 3] = 1;
    Arc::new(FiniteRing::from_tables_unchecked("mutant-z6", r.zero(), r.one(), add, mul).unwrap())
}

#[test]
fn flipped_multiplication_entry_fails_ring_axioms() {
    let rings = vec![parse_ring("zn(5)").unwrap(), mutant()];
    let h = Harness::new(Corpus::of(small_spec(), rings));
    let r = h.run_property("ring-axioms").unwrap();
    assert_eq!(r.status, Status::Fail);
    let cx = r.counterexample.as_ref().unwrap();
    assert_eq!(cx.ring, "mutant-z6");
    assert!(h.replay(&r).unwrap(), "failure does not replay");
}

#[test]
fn passing_results_do_not_replay_as_failures() {
    let h = Harness::new(build_corpus(&small_spec()).unwrap());
    let r = h.run_property("product-rules").unwrap();
    assert_eq!(r.status, Status::Pass);
    assert!(!h.replay(&r).unwrap());
}

#[test]
fn fields_only_corpus_never_fails() {
    let spec = CorpusSpec {
        zn_max: 1,
        include_products: false,
        include_poly_quotients: false,
        include_idealizations: false,
        include_amalgamations: false,
        ..CorpusSpec::default()
    };
    let mut rings = build_corpus(&spec).unwrap().rings;
    rings.extend(["zn(2)", "zn(3)", "zn(7)", "zn(11)"].iter().map(|s| parse_ring(s).unwrap()));
    let h = Harness::new(Corpus::of(spec, rings));
    let results = h.run_all();
    assert!(results.iter().all(|r| r.status != Status::Fail), "{results:?}");
    assert!(results.iter().filter(|r| r.status == Status::Inapplicable).count() >= 5);
}

#[test]
fn identical_spec_gives_identical_report() {
    let run = |seed| {
        let spec = CorpusSpec { seed, ..small_spec() };
        let h = Harness::new(build_corpus(&spec).unwrap());
        ReportDocument::verification(&spec, h.corpus.rings.len(), h.run_all(), false).to_json().unwrap()
    };
    assert_eq!(run(7), run(7));
    assert_ne!(run(7), run(8), "the seed is part of the report");
}
