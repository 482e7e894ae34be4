use alloc::string::{String, ToString};
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::Result;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportEntry {
    pub id: String,
    pub paper_ref: String,
    pub objects: String,
    pub deviation: f64,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoherenceReport {
    pub group: String,
    pub tolerance: f64,
    pub seed: u64,
    pub entries: Vec<ReportEntry>,
}

impl CoherenceReport {
    pub fn new(group: &str, tolerance: f64, seed: u64) -> Self {
        Self {
            group: group.to_string(),
            tolerance,
            seed,
            entries: Vec::new(),
        }
    }

    /// Records one diagram instance. A construction error is recorded as a
    /// failing entry with deviation `f64::MAX` and the message appended to
    /// the object description.
    pub fn record(&mut self, id: &str, reference: &str, objects: String, outcome: Result<f64>) {
        let (deviation, objects) = match outcome {
            Ok(d) if d.is_finite() => (d, objects),
            Ok(_) => (f64::MAX, objects + " [non-finite deviation]"),
            Err(e) => (f64::MAX, alloc::format!("{objects} [error: {e}]")),
        };
        self.entries.push(ReportEntry {
            id: id.to_string(),
            paper_ref: reference.to_string(),
            objects,
            deviation,
            pass: deviation <= self.tolerance,
        });
    }

    /// Sorts entries by id, then object tuple.
    pub fn finish(&mut self) {
        self.entries
            .sort_by(|a, b| a.id.cmp(&b.id).then_with(|| a.objects.cmp(&b.objects)));
    }

    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ReportEntry> {
        self.entries.iter().filter(|e| !e.pass)
    }

    /// Entries whose id starts with `prefix`.
    pub fn matching<'s>(&'s self, prefix: &'s str) -> impl Iterator<Item = &'s ReportEntry> + 's {
        self.entries.iter().filter(move |e| e.id.starts_with(prefix))
    }

    /// Largest deviation among entries whose id starts with `prefix`; `None` if there are none.
    pub fn max_deviation(&self, prefix: &str) -> Option<f64> {
        self.matching(prefix).map(|e| e.deviation).reduce(f64::max)
    }
}
