//! Structured verdicts with reproducible counterexamples.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::linalg::{Matrix, Vector};
use crate::scalar::{self, Scalar};
use crate::tensor::{Tensor2, Tensor3};

/// A value appearing on one side of a failed equation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Scalar(Scalar),
    Vector(Vector),
    Matrix(Matrix),
    Tensor2(Tensor2),
    Tensor3(Tensor3),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Scalar(s) => f.write_str(&scalar::format_scalar(s)),
            Value::Vector(v) => v.fmt(f),
            Value::Matrix(m) => m.fmt(f),
            Value::Tensor2(t) => t.fmt(f),
            Value::Tensor3(t) => t.fmt(f),
        }
    }
}

impl From<Vector> for Value {
    fn from(v: Vector) -> Self {
        Value::Vector(v)
    }
}

impl From<Matrix> for Value {
    fn from(m: Matrix) -> Self {
        Value::Matrix(m)
    }
}

impl From<Tensor2> for Value {
    fn from(t: Tensor2) -> Self {
        Value::Tensor2(t)
    }
}

impl From<Tensor3> for Value {
    fn from(t: Tensor3) -> Self {
        Value::Tensor3(t)
    }
}

impl From<Scalar> for Value {
    fn from(s: Scalar) -> Self {
        Value::Scalar(s)
    }
}

/// The first basis tuple (0-based indices) at which an equation `lhs = rhs`
/// fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub check: String,
    pub indices: Vec<usize>,
    pub lhs: Value,
    pub rhs: Value,
}

impl Witness {
    pub fn new(check: &str, indices: &[usize], lhs: impl Into<Value>, rhs: impl Into<Value>) -> Self {
        Witness {
            check: String::from(check),
            indices: indices.to_vec(),
            lhs: lhs.into(),
            rhs: rhs.into(),
        }
    }

    /// Indices rendered as 1-based basis labels, e.g. `(e2, e1, e2)`.
    pub fn basis_tuple(&self) -> String {
        let mut out = String::from("(");
        for (n, i) in self.indices.iter().enumerate() {
            if n > 0 {
                out.push_str(", ");
            }
            out.push_str(&alloc::format!("e{}", i + 1));
        }
        out.push(')');
        out
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} fails at {}: {} ≠ {}",
            self.check,
            self.basis_tuple(),
            self.lhs,
            self.rhs
        )
    }
}

/// `Verdict` entries decide the overall outcome; `Info` entries record
/// properties whose truth value is reported but not required.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    Verdict,
    Info,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entry {
    pub name: String,
    pub holds: bool,
    pub role: Role,
    pub witness: Option<Witness>,
    pub note: Option<String>,
}

/// Ordered list of named checks. Insertion order is the rendering order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckReport {
    entries: Vec<Entry>,
}

impl CheckReport {
    pub fn new() -> Self {
        Self::default()
    }

    fn push(&mut self, name: &str, role: Role, outcome: Result<(), Witness>) -> bool {
        let holds = outcome.is_ok();
        self.entries.push(Entry {
            name: String::from(name),
            holds,
            role,
            witness: outcome.err(),
            note: None,
        });
        holds
    }

    /// Records a required check; returns whether it holds.
    pub fn verdict(&mut self, name: &str, outcome: Result<(), Witness>) -> bool {
        self.push(name, Role::Verdict, outcome)
    }

    /// Records an informational property; returns whether it holds.
    pub fn info(&mut self, name: &str, outcome: Result<(), Witness>) -> bool {
        self.push(name, Role::Info, outcome)
    }

    /// Records a required boolean fact that has no natural witness.
    pub fn verdict_flag(&mut self, name: &str, holds: bool) -> bool {
        self.push_flag(name, Role::Verdict, holds)
    }

    pub fn info_flag(&mut self, name: &str, holds: bool) -> bool {
        self.push_flag(name, Role::Info, holds)
    }

    fn push_flag(&mut self, name: &str, role: Role, holds: bool) -> bool {
        self.entries.push(Entry {
            name: String::from(name),
            holds,
            role,
            witness: None,
            note: None,
        });
        holds
    }

    /// Attaches free text (e.g. a computed subspace) to the last entry.
    pub fn annotate(&mut self, note: String) {
        if let Some(e) = self.entries.last_mut() {
            e.note = Some(note);
        }
    }

    /// Appends every entry of `other`, prefixing names with `prefix.`.
    pub fn extend_prefixed(&mut self, prefix: &str, other: CheckReport) {
        for mut e in other.entries {
            e.name = alloc::format!("{prefix}.{}", e.name);
            self.entries.push(e);
        }
    }

    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    pub fn get(&self, name: &str) -> Option<&Entry> {
        self.entries.iter().find(|e| e.name == name)
    }

    /// Truth value of a named entry. Panics if absent.
    pub fn holds(&self, name: &str) -> bool {
        self.get(name)
            .unwrap_or_else(|| panic!("no report entry named {name}"))
            .holds
    }

    pub fn all_verdicts_hold(&self) -> bool {
        self.entries
            .iter()
            .filter(|e| e.role == Role::Verdict)
            .all(|e| e.holds)
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            let mark = match (e.holds, e.role) {
                (true, _) => "true ",
                (false, Role::Verdict) => "FALSE",
                (false, Role::Info) => "false",
            };
            write!(f, "{mark} {}", e.name)?;
            if let Some(note) = &e.note {
                write!(f, " [{note}]")?;
            }
            writeln!(f)?;
            if let Some(w) = &e.witness {
                writeln!(f, "      {w}")?;
            }
        }
        Ok(())
    }
}

/// `Ok(())` when equal, otherwise a witness carrying both sides.
pub fn compare<T: PartialEq + Into<Value>>(
    check: &str,
    indices: &[usize],
    lhs: T,
    rhs: T,
) -> Result<(), Witness> {
    if lhs == rhs {
        Ok(())
    } else {
        Err(Witness::new(check, indices, lhs, rhs))
    }
}
