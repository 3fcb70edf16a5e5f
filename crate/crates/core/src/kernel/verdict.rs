//! Shared pass/fail/inconclusive vocabulary for every checker.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Inconclusive => "inconclusive",
        })
    }
}

/// One located disagreement: where, and what each side evaluated to.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub location: String,
    pub expected: String,
    pub actual: String,
}

impl Witness {
    pub fn new(location: impl Into<String>, expected: impl ToString, actual: impl ToString) -> Self {
        Witness { location: location.into(), expected: expected.to_string(), actual: actual.to_string() }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: lhs {}, rhs {}", self.location, self.expected, self.actual)
    }
}

/// Outcome of a check.
///
/// A failing verdict always carries at least one witness; a passing one
/// carries none. Inconclusive verdicts may carry the unresolved residue.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    status: Status,
    witnesses: Vec<Witness>,
    detail: String,
}

impl Verdict {
    pub fn pass(detail: impl Into<String>) -> Self {
        Verdict { status: Status::Pass, witnesses: Vec::new(), detail: detail.into() }
    }

    pub fn fail(first: Witness, detail: impl Into<String>) -> Self {
        Verdict { status: Status::Fail, witnesses: vec![first], detail: detail.into() }
    }

    pub fn fail_many(witnesses: Vec<Witness>, detail: impl Into<String>) -> Self {
        assert!(!witnesses.is_empty(), "a failing verdict needs a witness");
        Verdict { status: Status::Fail, witnesses, detail: detail.into() }
    }

    pub fn inconclusive(detail: impl Into<String>) -> Self {
        Verdict { status: Status::Inconclusive, witnesses: Vec::new(), detail: detail.into() }
    }

    pub fn inconclusive_at(residue: Witness, detail: impl Into<String>) -> Self {
        Verdict { status: Status::Inconclusive, witnesses: vec![residue], detail: detail.into() }
    }

    pub fn status(&self) -> Status {
        self.status
    }

    pub fn is_pass(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn is_fail(&self) -> bool {
        self.status == Status::Fail
    }

    pub fn witnesses(&self) -> &[Witness] {
        &self.witnesses
    }

    pub fn first_witness(&self) -> Option<&Witness> {
        self.witnesses.first()
    }

    pub fn detail(&self) -> &str {
        &self.detail
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = detail.into();
        self
    }

    /// Conjunction: any failure wins, then any inconclusive, else pass.
    pub fn all(detail: impl Into<String>, parts: impl IntoIterator<Item = Verdict>) -> Verdict {
        let mut fails = Vec::new();
        let mut unsure = None;
        for v in parts {
            match v.status {
                Status::Pass => {}
                Status::Fail => fails.extend(v.witnesses),
                Status::Inconclusive => {
                    if unsure.is_none() {
                        unsure = Some(v);
                    }
                }
            }
        }
        let detail = detail.into();
        if !fails.is_empty() {
            Verdict::fail_many(fails, detail)
        } else if let Some(v) = unsure {
            Verdict { detail: format!("{detail}: {}", v.detail), ..v }
        } else {
            Verdict::pass(detail)
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.status)?;
        if !self.detail.is_empty() {
            write!(f, " ({})", self.detail)?;
        }
        for w in &self.witnesses {
            write!(f, "\n    {w}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjunction_prefers_failure() {
        let w = Witness::new("here", "1", "0");
        let v = Verdict::all(
            "combo",
            [Verdict::pass(""), Verdict::inconclusive("bound"), Verdict::fail(w.clone(), "")],
        );
        assert_eq!(v.status(), Status::Fail);
        assert_eq!(v.witnesses(), &[w]);

        let v = Verdict::all("combo", [Verdict::pass(""), Verdict::inconclusive("bound")]);
        assert_eq!(v.status(), Status::Inconclusive);
        assert!(Verdict::all("empty", []).is_pass());
    }

    #[test]
    #[should_panic]
    fn fail_needs_witness() {
        let _ = Verdict::fail_many(Vec::new(), "");
    }
}
