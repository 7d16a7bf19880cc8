//! Reports emitted on stdout, as plain text or canonical JSON (sorted keys,
//! normalized rationals, violations already in deterministic order).

use serde::Serialize;

use leibniz_ly::{format_rat, AxiomReport, Matrix};

use crate::files::to_canonical_json;

#[derive(Clone, Debug, Serialize)]
pub struct ReportViolation {
    pub axiom: String,
    pub indices: Vec<usize>,
    pub defect: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub verdict: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub violations: Vec<ReportViolation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
    #[serde(skip)]
    pub exit_code: i32,
}

impl Report {
    pub fn new(command: String, verdict: impl Into<String>, exit_code: i32) -> Self {
        Report {
            command,
            verdict: verdict.into(),
            violations: Vec::new(),
            witness: None,
            note: None,
            timing_ms: None,
            exit_code,
        }
    }

    /// A pass/fail report from an axiom check: exit 0 on pass, 1 on fail.
    pub fn from_check(command: String, report: &AxiomReport) -> Self {
        let passed = report.passed();
        let mut out = Report::new(command, if passed { "pass" } else { "fail" }, i32::from(!passed));
        out.violations = violations_to_doc(report);
        out
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn to_json(&self) -> String {
        to_canonical_json(self)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("command: {}\n", self.command));
        out.push_str(&format!("verdict: {}\n", self.verdict));
        if !self.violations.is_empty() {
            out.push_str(&format!("violations: {}\n", self.violations.len()));
            for v in &self.violations {
                let idx = v
                    .indices
                    .iter()
                    .map(usize::to_string)
                    .collect::<Vec<_>>()
                    .join(", ");
                out.push_str(&format!(
                    "  {} @ ({}): defect [{}]\n",
                    v.axiom,
                    idx,
                    v.defect.join(", ")
                ));
            }
        }
        if let Some(w) = &self.witness {
            out.push_str("witness:\n");
            for row in w {
                out.push_str(&format!("  [{}]\n", row.join(", ")));
            }
        }
        if let Some(note) = &self.note {
            out.push_str(&format!("note: {note}\n"));
        }
        if let Some(ms) = self.timing_ms {
            out.push_str(&format!("timing: {ms} ms\n"));
        }
        out.pop();
        out
    }
}

pub fn violations_to_doc(report: &AxiomReport) -> Vec<ReportViolation> {
    report
        .violations()
        .iter()
        .map(|v| ReportViolation {
            axiom: v.axiom.to_string(),
            indices: v.indices.clone(),
            defect: v.defect.iter().map(format_rat).collect(),
        })
        .collect()
}

pub fn witness_to_doc(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| format_rat(m.get(r, c))).collect())
        .collect()
}
