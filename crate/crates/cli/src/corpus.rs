//! The fixture corpus, embedded at build time, and resolution of command
//! line inputs to documents.

use std::path::Path;

use anyhow::{bail, Context};

use crate::format::{parse_document, Document};

/// `(file stem, text)` for every shipped fixture.
pub const FIXTURES: [(&str, &str); 10] = [
    ("na6", include_str!("../fixtures/na6.toml")),
    ("lr3", include_str!("../fixtures/lr3.toml")),
    ("nal4", include_str!("../fixtures/nal4.toml")),
    ("nal6", include_str!("../fixtures/nal6.toml")),
    ("co4", include_str!("../fixtures/co4.toml")),
    ("co6", include_str!("../fixtures/co6.toml")),
    ("r14", include_str!("../fixtures/r14.toml")),
    ("r56", include_str!("../fixtures/r56.toml")),
    ("r26", include_str!("../fixtures/r26.toml")),
    ("r15", include_str!("../fixtures/r15.toml")),
];

/// The fixture whose file stem or label matches `name`, ignoring case.
pub fn fixture(name: &str) -> Option<Document> {
    FIXTURES.iter().find_map(|(stem, text)| {
        let doc = parse_document(text).expect("shipped fixtures parse");
        let label_matches = doc
            .meta
            .label
            .as_deref()
            .is_some_and(|l| l.eq_ignore_ascii_case(name));
        (stem.eq_ignore_ascii_case(name) || label_matches).then_some(doc)
    })
}

/// Every fixture in corpus order.
pub fn all() -> Vec<(String, Document)> {
    FIXTURES
        .iter()
        .map(|(stem, text)| {
            let doc = parse_document(text).expect("shipped fixtures parse");
            (stem.to_string(), doc)
        })
        .collect()
}

/// A path to a file, or else the name of a shipped fixture.
pub fn load(input: &str) -> anyhow::Result<Document> {
    let path = Path::new(input);
    if path.is_file() {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {input}"))?;
        return parse_document(&text).with_context(|| format!("in {input}"));
    }
    match fixture(input) {
        Some(doc) => Ok(doc),
        None => bail!("{input} is neither a readable file nor a fixture name"),
    }
}
