//! Versioned TOML files for algebras, coproducts, bilinear forms and
//! r-matrices.
//!
//! Indices in files are 1-based. Omitted entries are zero. The canonical
//! serialization drops zero entries and sorts the rest by `(i, j, k)`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use nearbi_core::scalar::{self, Scalar};
use nearbi_core::{Algebra, BilinearForm, Comultiplication, Matrix, Tensor2, Tensor3};
use serde::{Deserialize, Serialize};
use toml::Spanned;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    Algebra,
    Coproduct,
    Form,
    RMatrix,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Algebra => "algebra",
            Kind::Coproduct => "coproduct",
            Kind::Form => "form",
            Kind::RMatrix => "r-matrix",
        }
    }

    fn arity(self) -> usize {
        match self {
            Kind::Algebra | Kind::Coproduct => 3,
            Kind::Form | Kind::RMatrix => 2,
        }
    }

    /// Name of the entry list in the file.
    fn list_name(self) -> &'static str {
        match self {
            Kind::Algebra => "products",
            _ => "entries",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormatError {
    #[error("parse error{}: {message}", location(*.line, .field.as_deref()))]
    Parse {
        line: Option<usize>,
        field: Option<String>,
        message: String,
    },
    #[error("index out of range{}: {index} is not in 1..={dim}", location(*.line, Some(.field)))]
    IndexOutOfRange {
        line: Option<usize>,
        field: String,
        index: usize,
        dim: usize,
    },
    #[error("duplicate entry{}: {indices} already given", location(*.line, Some(.field)))]
    DuplicateEntry {
        line: Option<usize>,
        field: String,
        indices: String,
    },
}

fn location(line: Option<usize>, field: Option<&str>) -> String {
    match (line, field) {
        (Some(l), Some(f)) => format!(" at line {l}, field `{f}`"),
        (Some(l), None) => format!(" at line {l}"),
        (None, Some(f)) => format!(" in field `{f}`"),
        (None, None) => String::new(),
    }
}

/// Descriptive fields shared by every file kind.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Meta {
    pub label: Option<String>,
    /// Label of the algebra a coproduct or r-matrix lives over.
    pub over: Option<String>,
    pub basis_names: Vec<String>,
    pub notes: Vec<String>,
    /// Expected predicate verdicts, keyed by predicate name.
    pub expect: BTreeMap<String, bool>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Payload {
    Algebra(Algebra),
    Coproduct(Comultiplication),
    Form(BilinearForm),
    RMatrix(Tensor2),
}

impl Payload {
    pub fn kind(&self) -> Kind {
        match self {
            Payload::Algebra(_) => Kind::Algebra,
            Payload::Coproduct(_) => Kind::Coproduct,
            Payload::Form(_) => Kind::Form,
            Payload::RMatrix(_) => Kind::RMatrix,
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            Payload::Algebra(a) => a.dim(),
            Payload::Coproduct(c) => c.dim(),
            Payload::Form(b) => b.dim(),
            Payload::RMatrix(r) => r.dim(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub meta: Meta,
    pub payload: Payload,
}

impl Document {
    pub fn new(payload: Payload) -> Self {
        Document {
            meta: Meta::default(),
            payload,
        }
    }

    pub fn with_label(mut self, label: &str) -> Self {
        self.meta.label = Some(label.to_string());
        self
    }

    pub fn kind(&self) -> Kind {
        self.payload.kind()
    }

    pub fn dim(&self) -> usize {
        self.payload.dim()
    }

    /// The label, or `fallback` when the file has none.
    pub fn name_or<'a>(&'a self, fallback: &'a str) -> &'a str {
        self.meta.label.as_deref().unwrap_or(fallback)
    }

    fn wrong_kind(&self, expected: Kind) -> FormatError {
        FormatError::Parse {
            line: None,
            field: Some("kind".to_string()),
            message: format!("expected a {expected} file, found a {} file", self.kind()),
        }
    }

    pub fn algebra(&self) -> Result<&Algebra, FormatError> {
        match &self.payload {
            Payload::Algebra(a) => Ok(a),
            _ => Err(self.wrong_kind(Kind::Algebra)),
        }
    }

    pub fn coproduct(&self) -> Result<&Comultiplication, FormatError> {
        match &self.payload {
            Payload::Coproduct(c) => Ok(c),
            _ => Err(self.wrong_kind(Kind::Coproduct)),
        }
    }

    pub fn form(&self) -> Result<&BilinearForm, FormatError> {
        match &self.payload {
            Payload::Form(b) => Ok(b),
            _ => Err(self.wrong_kind(Kind::Form)),
        }
    }

    pub fn r_matrix(&self) -> Result<&Tensor2, FormatError> {
        match &self.payload {
            Payload::RMatrix(r) => Ok(r),
            _ => Err(self.wrong_kind(Kind::RMatrix)),
        }
    }

    /// Canonical text: fixed key order, zero entries dropped, entries sorted.
    pub fn to_toml(&self) -> String {
        let entries: Vec<RawEntry> = match &self.payload {
            Payload::Algebra(a) => triples(a.constants()),
            Payload::Coproduct(c) => triples(c.tensor()),
            Payload::Form(b) => pairs(b.gram().rows(), |i, j| b.gram().get(i, j).clone()),
            Payload::RMatrix(r) => pairs(r.dim(), |i, j| r.get(i, j).clone()),
        };
        let (products, entries) = match self.kind() {
            Kind::Algebra => (entries, Vec::new()),
            _ => (Vec::new(), entries),
        };
        let out = OutDocument {
            schema_version: SCHEMA_VERSION,
            kind: self.kind(),
            label: self.meta.label.as_deref(),
            over: self.meta.over.as_deref(),
            dim: self.dim(),
            basis_names: &self.meta.basis_names,
            notes: &self.meta.notes,
            products,
            entries,
            expect: &self.meta.expect,
        };
        toml::to_string(&out).expect("document serializes")
    }
}

fn triples(t: &Tensor3) -> Vec<RawEntry> {
    t.support()
        .map(|(i, j, k, c)| RawEntry {
            i: i + 1,
            j: j + 1,
            k: Some(k + 1),
            c: Literal::from_scalar(c),
        })
        .collect()
}

fn pairs(n: usize, get: impl Fn(usize, usize) -> Scalar) -> Vec<RawEntry> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let c = get(i, j);
            if c != scalar::zero() {
                out.push(RawEntry {
                    i: i + 1,
                    j: j + 1,
                    k: None,
                    c: Literal::from_scalar(&c),
                });
            }
        }
    }
    out
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum Literal {
    Int(i64),
    Text(String),
}

impl Literal {
    fn from_scalar(c: &Scalar) -> Self {
        match scalar::to_i64(c) {
            Some(v) => Literal::Int(v),
            None => Literal::Text(scalar::format_scalar(c)),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEntry {
    i: usize,
    j: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    k: Option<usize>,
    c: Literal,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct InDocument {
    schema_version: String,
    kind: Kind,
    #[serde(default)]
    label: Option<String>,
    #[serde(default)]
    over: Option<String>,
    dim: usize,
    #[serde(default)]
    basis_names: Vec<String>,
    #[serde(default)]
    notes: Vec<String>,
    #[serde(default)]
    products: Option<Vec<Spanned<RawEntry>>>,
    #[serde(default)]
    entries: Option<Vec<Spanned<RawEntry>>>,
    #[serde(default)]
    expect: BTreeMap<String, bool>,
}

#[derive(Serialize)]
struct OutDocument<'a> {
    schema_version: &'a str,
    kind: Kind,
    #[serde(skip_serializing_if = "Option::is_none")]
    label: Option<&'a str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    over: Option<&'a str>,
    dim: usize,
    #[serde(skip_serializing_if = "<[String]>::is_empty")]
    basis_names: &'a [String],
    #[serde(skip_serializing_if = "<[String]>::is_empty")]
    notes: &'a [String],
    #[serde(skip_serializing_if = "Vec::is_empty")]
    products: Vec<RawEntry>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    entries: Vec<RawEntry>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    expect: &'a BTreeMap<String, bool>,
}

fn line_of(text: &str, offset: usize) -> usize {
    text[..offset.min(text.len())].matches('\n').count() + 1
}

fn parse_error(line: Option<usize>, field: &str, message: impl Into<String>) -> FormatError {
    FormatError::Parse {
        line,
        field: Some(field.to_string()),
        message: message.into(),
    }
}

pub fn parse_document(text: &str) -> Result<Document, FormatError> {
    let raw: InDocument = toml::from_str(text).map_err(|e| FormatError::Parse {
        line: e.span().map(|s| line_of(text, s.start)),
        field: None,
        message: e.message().to_string(),
    })?;
    if raw.schema_version != SCHEMA_VERSION {
        return Err(parse_error(
            None,
            "schema_version",
            format!("unsupported schema version {:?}", raw.schema_version),
        ));
    }
    let kind = raw.kind;
    let n = raw.dim;
    if n == 0 {
        return Err(parse_error(None, "dim", "dimension must be positive"));
    }
    if !raw.basis_names.is_empty() && raw.basis_names.len() != n {
        return Err(parse_error(
            None,
            "basis_names",
            format!("{} names for dimension {n}", raw.basis_names.len()),
        ));
    }
    let list = kind.list_name();
    let (own, other) = match kind {
        Kind::Algebra => (raw.products, raw.entries),
        _ => (raw.entries, raw.products),
    };
    if other.is_some() {
        let wrong = if kind == Kind::Algebra { "entries" } else { "products" };
        return Err(parse_error(None, wrong, format!("a {kind} file lists its values under `{list}`")));
    }

    let mut seen = BTreeSet::new();
    let mut values = Vec::new();
    for (pos, spanned) in own.unwrap_or_default().into_iter().enumerate() {
        let line = Some(line_of(text, spanned.span().start));
        let e = spanned.into_inner();
        let field = format!("{list}[{pos}]");
        let mut idx = vec![e.i, e.j];
        match (kind.arity(), e.k) {
            (3, Some(k)) => idx.push(k),
            (3, None) => return Err(parse_error(line, &format!("{field}.k"), "missing index k")),
            (_, Some(_)) => {
                return Err(parse_error(line, &format!("{field}.k"), format!("a {kind} entry has only i and j")))
            }
            (_, None) => {}
        }
        for (name, &v) in ["i", "j", "k"].iter().zip(&idx) {
            if v == 0 || v > n {
                return Err(FormatError::IndexOutOfRange {
                    line,
                    field: format!("{field}.{name}"),
                    index: v,
                    dim: n,
                });
            }
        }
        if !seen.insert(idx.clone()) {
            let text: Vec<String> = idx.iter().map(usize::to_string).collect();
            return Err(FormatError::DuplicateEntry {
                line,
                field,
                indices: format!("({})", text.join(", ")),
            });
        }
        let c = match e.c {
            Literal::Int(v) => scalar::int(v),
            Literal::Text(t) => scalar::parse_scalar(&t)
                .map_err(|err| parse_error(line, &format!("{field}.c"), err.to_string()))?,
        };
        values.push((idx, c));
    }

    let payload = match kind {
        Kind::Algebra => Payload::Algebra(Algebra::new(tensor3(n, &values))),
        Kind::Coproduct => Payload::Coproduct(Comultiplication::new(tensor3(n, &values))),
        Kind::Form => {
            let mut m = Matrix::zeros(n, n);
            for (idx, c) in &values {
                m.set(idx[0] - 1, idx[1] - 1, c.clone());
            }
            Payload::Form(BilinearForm::new(m).expect("square by construction"))
        }
        Kind::RMatrix => {
            let mut t = Tensor2::zeros(n);
            for (idx, c) in &values {
                t.set(idx[0] - 1, idx[1] - 1, c.clone());
            }
            Payload::RMatrix(t)
        }
    };
    Ok(Document {
        meta: Meta {
            label: raw.label,
            over: raw.over,
            basis_names: raw.basis_names,
            notes: raw.notes,
            expect: raw.expect,
        },
        payload,
    })
}

fn tensor3(n: usize, values: &[(Vec<usize>, Scalar)]) -> Tensor3 {
    let mut t = Tensor3::zeros(n);
    for (idx, c) in values {
        t.set(idx[0] - 1, idx[1] - 1, idx[2] - 1, c.clone());
    }
    t
}
