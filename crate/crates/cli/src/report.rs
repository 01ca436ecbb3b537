//! The report document every subcommand produces.

use serde::{Deserialize, Serialize};

use transpoly_core::canonical::CanonicalGenerators;
use transpoly_core::hilbert::{ConjectureOutcome, ConjectureReport};
use transpoly_core::{ConeRepresentation, FamilyCase, FamilyParams, Presentation};

use crate::num::{nums, Num};

pub const SCHEMA_VERSION: u32 = 1;

/// Generator sets above this size are summarized unless `--full` is given.
pub const SUMMARY_THRESHOLD: usize = 1000;
pub const SUMMARY_SAMPLE: usize = 20;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub instance: Option<Instance>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cone: Option<ConeSummary>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub type_value: Option<Num>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a_invariant: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gorenstein: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h_values: Option<Vec<Num>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub numerator: Option<Vec<Num>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hilbert_series: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub canonical: Option<GeneratorSummary>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub conjecture: Option<ConjectureRow>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sweep: Option<Vec<ConjectureRow>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexamples: Option<Vec<ConjectureRow>>,
    pub oracle_checks: Vec<OracleCheck>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Instance {
    Family { n: usize, i: usize, j: usize, case: String, r: usize },
    Presentation { n: usize, sets: Vec<Vec<usize>> },
}

impl Instance {
    pub fn family(p: &FamilyParams) -> Self {
        let case = match p.case() {
            FamilyCase::LowSum => "low_sum",
            FamilyCase::HighSum => "high_sum",
        };
        Instance::Family { n: p.n(), i: p.i(), j: p.j(), case: case.into(), r: p.r() }
    }

    pub fn presentation(pres: &Presentation) -> Self {
        Instance::Presentation { n: pres.n(), sets: (0..pres.n()).map(|k| pres.set_elements(k)).collect() }
    }

    pub fn label(&self) -> String {
        match self {
            Instance::Family { n, i, j, .. } => format!("({n},{i},{j})"),
            Instance::Presentation { sets, .. } => {
                let parts: Vec<String> = sets
                    .iter()
                    .map(|s| format!("{{{}}}", s.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",")))
                    .collect();
                parts.join(" ")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalEntry {
    pub label: String,
    pub coords: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeSummary {
    pub dimension: usize,
    pub normals: Vec<NormalEntry>,
    pub ray_count: usize,
    pub rays: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub det_certificate: Option<Num>,
}

impl ConeSummary {
    pub fn new(cone: &ConeRepresentation, det: Option<Num>) -> Self {
        ConeSummary {
            dimension: cone.dimension,
            normals: cone
                .normals
                .iter()
                .map(|a| NormalEntry { label: a.label.to_string(), coords: a.coords.clone() })
                .collect(),
            ray_count: cone.rays.len(),
            rays: cone.rays.iter().map(|r| r.coords().to_vec()).collect(),
            det_certificate: det,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeCount {
    pub degree: u64,
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorSummary {
    /// `closed_form` or `brute_force`.
    pub source: String,
    pub count: usize,
    pub degrees: Vec<DegreeCount>,
    /// All generators, or the first ones in lexicographic order when
    /// `truncated` is set.
    pub generators: Vec<Vec<u32>>,
    pub truncated: bool,
}

impl GeneratorSummary {
    pub fn new(source: &str, gens: &CanonicalGenerators, full: bool) -> Self {
        let truncated = !full && gens.len() > SUMMARY_THRESHOLD;
        let shown = if truncated { SUMMARY_SAMPLE } else { gens.len() };
        GeneratorSummary {
            source: source.into(),
            count: gens.len(),
            degrees: gens.degree_histogram().into_iter().map(|(degree, count)| DegreeCount { degree, count }).collect(),
            generators: gens.generators().iter().take(shown).map(|g| g.coords().to_vec()).collect(),
            truncated,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Holds,
    Violated,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureRow {
    pub instance: Instance,
    /// `closed_form` or `brute_force`.
    pub mode: String,
    pub r: Option<usize>,
    pub type_value: Option<Num>,
    pub predicted: Option<Num>,
    pub h_vector: Vec<Num>,
    pub outcome: Outcome,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl ConjectureRow {
    pub fn new(instance: Instance, mode: &str, report: &ConjectureReport) -> Self {
        let (outcome, reason) = match &report.outcome {
            ConjectureOutcome::Holds => (Outcome::Holds, None),
            ConjectureOutcome::Violated => (Outcome::Violated, None),
            ConjectureOutcome::Skipped(why) => (Outcome::Skipped, Some(why.clone())),
        };
        ConjectureRow {
            instance,
            mode: mode.into(),
            r: report.r,
            type_value: report.type_value.as_ref().map(Num::from),
            predicted: report.predicted.as_ref().map(Num::from),
            h_vector: nums(&report.h_vector),
            outcome,
            reason,
        }
    }

    pub fn skipped(instance: Instance, mode: &str, reason: String) -> Self {
        ConjectureRow {
            instance,
            mode: mode.into(),
            r: None,
            type_value: None,
            predicted: None,
            h_vector: Vec::new(),
            outcome: Outcome::Skipped,
            reason: Some(reason),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleCheck {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

impl OracleCheck {
    pub fn new(name: impl Into<String>, status: Status, detail: impl Into<String>) -> Self {
        OracleCheck { name: name.into(), status, detail: detail.into() }
    }

    pub fn from_bool(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        Self::new(name, if ok { Status::Pass } else { Status::Fail }, detail)
    }
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            command: command.into(),
            instance: None,
            cone: None,
            type_value: None,
            a_invariant: None,
            gorenstein: None,
            h_values: None,
            numerator: None,
            hilbert_series: None,
            canonical: None,
            conjecture: None,
            sweep: None,
            counterexamples: None,
            oracle_checks: Vec::new(),
        }
    }

    /// Adds a check. Names must be unique within a report.
    pub fn push_check(&mut self, check: OracleCheck) {
        assert!(
            self.oracle_checks.iter().all(|c| c.name != check.name),
            "duplicate oracle check name {:?}",
            check.name
        );
        self.oracle_checks.push(check);
    }

    pub fn first_failure(&self) -> Option<&OracleCheck> {
        self.oracle_checks.iter().find(|c| c.status == Status::Fail)
    }

    pub fn failed(&self) -> bool {
        self.first_failure().is_some()
    }

    pub fn tally(&self) -> (usize, usize, usize) {
        let count = |s| self.oracle_checks.iter().filter(|c| c.status == s).count();
        (count(Status::Pass), count(Status::Fail), count(Status::Skipped))
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("report serializes");
        text.push('\n');
        text
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    #[should_panic(expected = "duplicate")]
    fn duplicate_check_names_are_refused() {
        let mut r = Report::new("verify");
        r.push_check(OracleCheck::new("a", Status::Pass, ""));
        r.push_check(OracleCheck::new("a", Status::Fail, ""));
    }

    #[test]
    fn json_round_trip() {
        let mut r = Report::new("report");
        r.instance = Some(Instance::family(&FamilyParams::new(4, 1, 1).unwrap()));
        r.type_value = Some(Num::from(2u32));
        r.numerator = Some(vec![Num::from(1u32), Num::from(u64::MAX)]);
        r.push_check(OracleCheck::new("x", Status::Skipped, "why"));
        let text = r.to_json();
        let back = Report::from_json(&text).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.to_json(), text);
        assert!(text.contains("\"18446744073709551615\""));
    }
}
