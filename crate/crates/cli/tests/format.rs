use nearbi::corpus;
use nearbi::format::{parse_document, Document, FormatError, Kind, Payload};
use nearbi_core::scalar::{int, ratio};
use nearbi_core::{fixtures, Algebra, Tensor3};
use proptest::prelude::*;

#[test]
fn nal6_file_has_nine_products() {
    let doc = corpus::fixture("nal6").unwrap();
    let a = doc.algebra().unwrap();
    assert_eq!(a.constants().support().count(), 9);
    assert_eq!(a, &fixtures::nal6());
    assert_eq!(doc.name_or("?"), "NAL6");
}

#[test]
fn every_fixture_matches_the_core_constructor() {
    let alg = |n: &str| corpus::fixture(n).unwrap().algebra().unwrap().clone();
    let cop = |n: &str| corpus::fixture(n).unwrap().coproduct().unwrap().clone();
    let r = |n: &str| corpus::fixture(n).unwrap().r_matrix().unwrap().clone();
    assert_eq!(alg("na6"), fixtures::na6());
    assert_eq!(alg("lr3"), fixtures::lr3());
    assert_eq!(alg("nal4"), fixtures::nal4());
    assert_eq!(cop("co4"), fixtures::co4());
    assert_eq!(cop("co6"), fixtures::co6());
    assert_eq!(r("r14"), fixtures::r14());
    assert_eq!(r("r56"), fixtures::r56());
    assert_eq!(r("r26"), fixtures::r26());
    assert_eq!(r("r15"), fixtures::r15());
}

#[test]
fn fixture_lookup_ignores_case_and_accepts_labels() {
    assert!(corpus::fixture("NAL6").is_some());
    assert!(corpus::fixture("Co4").is_some());
    assert!(corpus::fixture("nal7").is_none());
}

const HEADER: &str = "schema_version = \"1\"\nkind = \"algebra\"\ndim = 2\n";

#[test]
fn index_zero_is_out_of_range() {
    let text = format!("{HEADER}products = [\n  {{ i = 0, j = 1, k = 1, c = 1 }},\n]\n");
    match parse_document(&text) {
        Err(FormatError::IndexOutOfRange { line, field, index, dim }) => {
            assert_eq!((line, index, dim), (Some(5), 0, 2));
            assert_eq!(field, "products[0].i");
        }
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn index_above_dim_is_out_of_range() {
    let text = format!("{HEADER}products = [{{ i = 1, j = 1, k = 3, c = 1 }}]\n");
    assert!(matches!(
        parse_document(&text),
        Err(FormatError::IndexOutOfRange { index: 3, dim: 2, .. })
    ));
}

#[test]
fn duplicate_entries_are_rejected() {
    let text = format!(
        "{HEADER}products = [\n  {{ i = 1, j = 2, k = 1, c = 1 }},\n  {{ i = 1, j = 2, k = 1, c = 2 }},\n]\n"
    );
    match parse_document(&text) {
        Err(FormatError::DuplicateEntry { line, field, indices }) => {
            assert_eq!(line, Some(6));
            assert_eq!(field, "products[1]");
            assert_eq!(indices, "(1, 2, 1)");
        }
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn malformed_input_is_a_parse_error() {
    let cases = [
        "kind = \"algebra\"\ndim = 2\n".to_string(),
        "schema_version = \"2\"\nkind = \"algebra\"\ndim = 2\n".to_string(),
        "schema_version = \"1\"\nkind = \"algebra\"\ndim = 0\n".to_string(),
        "schema_version = \"1\"\nkind = \"monoid\"\ndim = 2\n".to_string(),
        format!("{HEADER}products = [{{ i = 1, j = 1, c = 1 }}]\n"),
        format!("{HEADER}products = [{{ i = 1, j = 1, k = 1, c = \"1/0\" }}]\n"),
        format!("{HEADER}entries = [{{ i = 1, j = 1, k = 1, c = 1 }}]\n"),
        format!("{HEADER}basis_names = [\"x\"]\n"),
        format!("{HEADER}colour = \"red\"\n"),
    ];
    for text in &cases {
        assert!(
            matches!(parse_document(text), Err(FormatError::Parse { .. })),
            "accepted:\n{text}"
        );
    }
}

#[test]
fn syntax_errors_carry_a_line() {
    let err = parse_document("schema_version = \"1\"\nkind = \"algebra\"\ndim = = 2\n").unwrap_err();
    assert!(matches!(err, FormatError::Parse { line: Some(3), .. }), "{err:?}");
    assert!(err.to_string().contains("line 3"));
}

#[test]
fn rational_coefficients_parse() {
    let text = "schema_version = \"1\"\nkind = \"r-matrix\"\ndim = 2\nentries = [\n  { i = 1, j = 2, c = \"1/2\" },\n  { i = 2, j = 1, c = \"-1/2\" },\n]\n";
    let doc = parse_document(text).unwrap();
    let r = doc.r_matrix().unwrap();
    assert_eq!(r.get(0, 1), &ratio(1, 2));
    assert_eq!(r.get(1, 0), &ratio(-1, 2));
    assert!(r.is_skew());
}

#[test]
fn wrong_kind_accessor_is_an_error() {
    let doc = corpus::fixture("co4").unwrap();
    assert_eq!(doc.kind(), Kind::Coproduct);
    assert!(doc.algebra().is_err());
}

#[test]
fn fixtures_round_trip_through_canonical_text() {
    for (stem, doc) in corpus::all() {
        let text = doc.to_toml();
        let again = parse_document(&text).unwrap_or_else(|e| panic!("{stem}: {e}"));
        assert_eq!(again, doc, "{stem}");
        assert_eq!(again.to_toml(), text, "{stem}");
    }
}

fn coefficient() -> impl Strategy<Value = (i64, i64)> {
    (-3i64..=3, prop_oneof![Just(1i64), Just(2), Just(3)]).prop_filter("nonzero", |(p, _)| *p != 0)
}

proptest! {
    #[test]
    fn random_algebras_round_trip(
        dim in 1usize..=4,
        entries in proptest::collection::vec((0usize..4, 0usize..4, 0usize..4, coefficient()), 0..10),
    ) {
        let mut t = Tensor3::zeros(dim);
        for (i, j, k, (p, q)) in entries {
            t.set(i % dim, j % dim, k % dim, ratio(p, q));
        }
        let doc = Document::new(Payload::Algebra(Algebra::new(t))).with_label("random");
        let text = doc.to_toml();
        let again = parse_document(&text).unwrap();
        prop_assert_eq!(&again, &doc);
        prop_assert_eq!(again.to_toml(), text);
    }
}

#[test]
fn integer_coefficients_serialize_as_integers() {
    let mut t = Tensor3::zeros(1);
    t.set(0, 0, 0, int(-2));
    let text = Document::new(Payload::Algebra(Algebra::new(t))).to_toml();
    assert!(text.contains("c = -2"), "{text}");
}
