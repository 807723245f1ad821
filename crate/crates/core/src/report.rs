//! Per-task result records, summary counts, and the two deterministic
//! output renderers (plain text and JSON).

use serde::Serialize;
use std::fmt;

/// Outcome of comparing a computed value with its recorded expectation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    /// Computed equals expected exactly.
    Match,
    /// Computed differs from expected.
    Mismatch,
    /// Computed differs from a recorded external value on a task
    /// explicitly flagged as an open question; both values are shown.
    DocumentedDeviation,
}

impl Verdict {
    pub fn label(self) -> &'static str {
        match self {
            Verdict::Match => "match",
            Verdict::Mismatch => "mismatch",
            Verdict::DocumentedDeviation => "documented-deviation",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// One executed task: identification, inputs, values, verdict.
#[derive(Debug, Clone, Serialize)]
pub struct TaskRecord {
    /// Stable key: anchor location for the built-in suite, operation
    /// name for scenario files.
    pub key: String,
    /// Module the operation belongs to (used by `--filter`).
    pub module: String,
    /// Human-readable input description.
    pub inputs: String,
    pub computed: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<String>,
    pub verdict: Verdict,
    /// Extra context; for documented deviations, the open-question key.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub total: usize,
    pub matches: usize,
    pub mismatches: usize,
    pub documented_deviations: usize,
}

/// Ordered collection of task records.
#[derive(Debug, Clone, Default, Serialize)]
pub struct Report {
    pub records: Vec<TaskRecord>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(&mut self, record: TaskRecord) {
        self.records.push(record);
    }

    pub fn summary(&self) -> Summary {
        let count = |v: Verdict| self.records.iter().filter(|r| r.verdict == v).count();
        Summary {
            total: self.records.len(),
            matches: count(Verdict::Match),
            mismatches: count(Verdict::Mismatch),
            documented_deviations: count(Verdict::DocumentedDeviation),
        }
    }

    pub fn has_mismatch(&self) -> bool {
        self.records
            .iter()
            .any(|r| r.verdict == Verdict::Mismatch)
    }

    /// Process exit status contract: zero iff no mismatch verdicts.
    pub fn exit_code(&self) -> i32 {
        if self.has_mismatch() {
            1
        } else {
            0
        }
    }

    /// Plain-text rendering: one line per record plus a summary line.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            out.push_str(&format!(
                "[{}] {} :: {} | {} | computed {}",
                r.verdict, r.module, r.key, r.inputs, r.computed
            ));
            if let Some(e) = &r.expected {
                out.push_str(&format!(" | expected {e}"));
            }
            if let Some(n) = &r.note {
                out.push_str(&format!(" | {n}"));
            }
            out.push('\n');
        }
        let s = self.summary();
        out.push_str(&format!(
            "summary: {} tasks, {} match, {} mismatch, {} documented-deviation\n",
            s.total, s.matches, s.mismatches, s.documented_deviations
        ));
        out
    }

    /// JSON rendering; byte-identical for identical inputs.
    pub fn render_json(&self) -> String {
        #[derive(Serialize)]
        struct Wire<'a> {
            records: &'a [TaskRecord],
            summary: Summary,
        }
        let wire = Wire {
            records: &self.records,
            summary: self.summary(),
        };
        let mut s = serde_json::to_string_pretty(&wire).expect("report serializes");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn record(verdict: Verdict) -> TaskRecord {
        TaskRecord {
            key: "k".into(),
            module: "m".into(),
            inputs: "i".into(),
            computed: "1".into(),
            expected: Some("1".into()),
            verdict,
            note: None,
        }
    }

    #[test]
    fn exit_code_contract() {
        let mut r = Report::new();
        assert_eq!(r.exit_code(), 0);
        r.push(record(Verdict::Match));
        r.push(record(Verdict::DocumentedDeviation));
        assert_eq!(r.exit_code(), 0);
        r.push(record(Verdict::Mismatch));
        assert_eq!(r.exit_code(), 1);
    }

    #[test]
    fn summary_counts() {
        let mut r = Report::new();
        r.push(record(Verdict::Match));
        r.push(record(Verdict::Match));
        r.push(record(Verdict::Mismatch));
        let s = r.summary();
        assert_eq!(
            (s.total, s.matches, s.mismatches, s.documented_deviations),
            (3, 2, 1, 0)
        );
    }

    #[test]
    fn json_is_deterministic_and_labeled() {
        let mut r = Report::new();
        r.push(record(Verdict::DocumentedDeviation));
        let a = r.render_json();
        let b = r.render_json();
        assert_eq!(a, b);
        assert!(a.contains("\"documented-deviation\""));
        let text = r.render_text();
        assert!(text.contains("documented-deviation"));
        assert!(text.ends_with("1 documented-deviation\n"));
    }
}
