//! Verification reports shared by the library suites and the CLI.

use serde::{Deserialize, Serialize};

use crate::regions::{Certificate, Verdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

impl Status {
    /// Any failure fails; otherwise any inconclusive part is inconclusive.
    pub fn combine(items: impl IntoIterator<Item = Status>) -> Status {
        let mut out = Status::Pass;
        for s in items {
            match s {
                Status::Fail => return Status::Fail,
                Status::Inconclusive => out = Status::Inconclusive,
                Status::Pass => {}
            }
        }
        out
    }

    pub fn from_bool(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

/// A point (or pair) demonstrating a failure.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub subcheck: String,
    pub z: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub w: Option<String>,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SubCheck {
    pub name: String,
    pub status: Status,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
}

impl SubCheck {
    pub fn new(name: impl Into<String>, status: Status, detail: impl Into<String>) -> Self {
        SubCheck {
            name: name.into(),
            status,
            detail: detail.into(),
            witness: None,
        }
    }

    pub fn with_witness(
        mut self,
        z: impl Into<String>,
        w: Option<String>,
        note: impl Into<String>,
    ) -> Self {
        self.witness = Some(Witness {
            subcheck: self.name.clone(),
            z: z.into(),
            w,
            note: note.into(),
        });
        self
    }

    pub fn from_verdict(name: impl Into<String>, v: &Verdict) -> Self {
        let name = name.into();
        match v {
            Verdict::Equal { points } => {
                SubCheck::new(name, Status::Pass, format!("equal at {points} points"))
            }
            Verdict::Differ { witness, in_first } => {
                let side = if *in_first {
                    "left side only"
                } else {
                    "right side only"
                };
                SubCheck::new(name, Status::Fail, "regions differ").with_witness(
                    witness.to_string(),
                    None,
                    side,
                )
            }
            Verdict::Inconclusive { reason } => {
                SubCheck::new(name, Status::Inconclusive, reason.clone())
            }
        }
    }

    pub fn from_certificate(name: impl Into<String>, c: &Certificate) -> Self {
        let name = name.into();
        match c {
            Certificate::Proven { boxes } => {
                SubCheck::new(name, Status::Pass, format!("proved with {boxes} boxes"))
            }
            Certificate::Refuted { witness } => SubCheck::new(
                name,
                Status::Fail,
                "inclusion refuted",
            )
            .with_witness(witness.to_string(), None, "in the smaller set only"),
            Certificate::Undecided { boxes } => SubCheck::new(
                name,
                Status::Inconclusive,
                format!("undecided after {boxes} boxes"),
            ),
        }
    }
}

/// The JSON report of one verification suite.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    pub status: Status,
    pub subchecks: Vec<SubCheck>,
    pub witnesses: Vec<Witness>,
    pub samples: usize,
    pub seed: u64,
    /// Omitted unless timings are requested, so that reports stay
    /// byte-identical across runs.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub elapsed_ms: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub extra: Option<serde_json::Value>,
}

impl CheckReport {
    pub fn new(
        check: impl Into<String>,
        subchecks: Vec<SubCheck>,
        samples: usize,
        seed: u64,
    ) -> Self {
        let status = Status::combine(subchecks.iter().map(|s| s.status));
        let witnesses = subchecks.iter().filter_map(|s| s.witness.clone()).collect();
        CheckReport {
            check: check.into(),
            status,
            subchecks,
            witnesses,
            samples,
            seed,
            elapsed_ms: None,
            extra: None,
        }
    }
}
