//! Reports: an ordered tree of sections, facts and checks, rendered as
//! aligned text or as JSON.

use std::fmt::Write as _;

use nearbi_core::report::{CheckReport, Role};
use nearbi_core::Witness;
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessView {
    pub check: String,
    /// Basis labels, e.g. `(e2, e1, e2)`.
    pub at: String,
    /// 1-based basis indices.
    pub indices: Vec<usize>,
    pub lhs: String,
    pub rhs: String,
}

impl From<&Witness> for WitnessView {
    fn from(w: &Witness) -> Self {
        WitnessView {
            check: w.check.clone(),
            at: w.basis_tuple(),
            indices: w.indices.iter().map(|i| i + 1).collect(),
            lhs: w.lhs.to_string(),
            rhs: w.rhs.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub holds: bool,
    /// Required checks decide the exit status; the others are reported only.
    pub required: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessView>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fact {
    pub name: String,
    pub value: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Section {
    pub title: String,
    pub facts: Vec<Fact>,
    pub checks: Vec<Check>,
}

impl Section {
    pub fn new(title: impl Into<String>) -> Self {
        Section {
            title: title.into(),
            ..Section::default()
        }
    }

    /// All entries of a core report; its verdict entries become required.
    pub fn from_report(title: impl Into<String>, report: &CheckReport) -> Self {
        let mut s = Section::new(title);
        s.extend(report, true);
        s
    }

    /// Appends the entries of `report`. With `keep_roles` false every entry
    /// is informational.
    pub fn extend(&mut self, report: &CheckReport, keep_roles: bool) {
        for e in report.entries() {
            self.checks.push(Check {
                name: e.name.clone(),
                holds: e.holds,
                required: keep_roles && e.role == Role::Verdict,
                witness: e.witness.as_ref().map(WitnessView::from),
                note: e.note.clone(),
            });
        }
    }

    pub fn fact(&mut self, name: impl Into<String>, value: impl ToString) -> &mut Self {
        self.facts.push(Fact {
            name: name.into(),
            value: value.to_string(),
        });
        self
    }

    pub fn outcome(&mut self, name: impl Into<String>, required: bool, outcome: &Result<(), Witness>) -> bool {
        self.checks.push(Check {
            name: name.into(),
            holds: outcome.is_ok(),
            required,
            witness: outcome.as_ref().err().map(WitnessView::from),
            note: None,
        });
        outcome.is_ok()
    }

    pub fn flag(&mut self, name: impl Into<String>, required: bool, holds: bool) -> bool {
        self.checks.push(Check {
            name: name.into(),
            holds,
            required,
            witness: None,
            note: None,
        });
        holds
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Vec<String>,
    pub sections: Vec<Section>,
    pub passed: bool,
}

impl Report {
    pub fn new(command: &str, inputs: Vec<String>) -> Self {
        Report {
            command: command.to_string(),
            inputs,
            sections: Vec::new(),
            passed: true,
        }
    }

    pub fn push(&mut self, section: Section) {
        self.passed &= section.checks.iter().all(|c| c.holds || !c.required);
        self.sections.push(section);
    }

    pub fn section(&self, title: &str) -> Option<&Section> {
        self.sections.iter().find(|s| s.title == title)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.command, self.inputs.join(" "));
        for s in &self.sections {
            let _ = writeln!(out, "\n[{}]", s.title);
            for f in &s.facts {
                let _ = writeln!(out, "  {} = {}", f.name, f.value);
            }
            for c in &s.checks {
                let mark = match (c.holds, c.required) {
                    (true, _) => "true ",
                    (false, true) => "FALSE",
                    (false, false) => "false",
                };
                let _ = write!(out, "  {mark} {}", c.name);
                if let Some(note) = &c.note {
                    let _ = write!(out, " [{note}]");
                }
                out.push('\n');
                if let Some(w) = &c.witness {
                    let _ = writeln!(out, "        at {}: {} ≠ {}", w.at, w.lhs, w.rhs);
                }
            }
        }
        let _ = writeln!(out, "\nresult: {}", if self.passed { "pass" } else { "fail" });
        out
    }
}
