use nearbi::commands;
use nearbi::corpus;

#[test]
fn every_fixture_matches_its_expectations() {
    for (stem, doc) in corpus::all() {
        assert!(!doc.meta.expect.is_empty(), "{stem} records no expectations");
        let section = commands::regression_section(&stem, &doc).unwrap();
        for c in &section.checks {
            assert!(c.holds, "{stem}: {}", c.name);
        }
    }
}

#[test]
fn flipped_expectation_is_detected() {
    let mut doc = corpus::fixture("r56").unwrap();
    doc.meta.expect.insert("delta-equals-CO6".to_string(), true);
    let section = commands::regression_section("r56", &doc).unwrap();
    assert!(!section.check("delta-equals-CO6 = true").unwrap().holds);
}

#[test]
fn unknown_expectation_key_is_an_error() {
    let mut doc = corpus::fixture("co4").unwrap();
    doc.meta.expect.insert("cocommutative".to_string(), true);
    assert!(commands::regression_section("co4", &doc).is_err());
}

#[test]
fn corpus_report_passes() {
    let report = commands::report(&corpus::all(), 0, 0).unwrap();
    assert!(report.passed, "{}", report.to_text());
    assert_eq!(report.sections.len(), corpus::FIXTURES.len());
}
