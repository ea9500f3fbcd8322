//! Serializable reports. Field order is declaration order, so the JSON
//! output is byte-stable for a fixed input.

use serde::{Deserialize, Serialize};

use crate::connectivity::{connectivity_report, ConnectivityReport};
use crate::error::{Error, Result};
use crate::induced::induced_relation_allow_free;
use crate::matroid::{check_all_axioms, AxiomReport, Matroid};
use crate::oracle::{proposition_battery, Battery};
use crate::rough::RelationProperties;
use crate::set::Subset;

fn labels(s: &Subset) -> Vec<String> {
    s.labels().into_iter().map(String::from).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionEntry {
    pub name: String,
    pub status: String,
    pub verdict: Option<bool>,
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectivityDocument {
    pub connected: bool,
    pub components: Vec<Vec<String>>,
    pub criteria: Vec<CriterionEntry>,
    pub agreement: bool,
}

impl From<&ConnectivityReport> for ConnectivityDocument {
    fn from(r: &ConnectivityReport) -> Self {
        let g = r.components.ground();
        Self {
            connected: r.connected,
            components: r.components.blocks().iter().map(labels).collect(),
            criteria: r
                .criteria
                .iter()
                .map(|c| CriterionEntry {
                    name: c.name.to_string(),
                    status: c.status.as_str().to_string(),
                    verdict: c.verdict,
                    witness: c.witness.as_ref().map(|w| w.describe(g)),
                })
                .collect(),
            agreement: r.agreement,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolationEntry {
    pub axiom: String,
    pub witness: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomDocument {
    pub passed: bool,
    pub violations: Vec<ViolationEntry>,
}

impl From<&AxiomReport> for AxiomDocument {
    fn from(r: &AxiomReport) -> Self {
        Self {
            passed: r.passed(),
            violations: r
                .violations()
                .iter()
                .map(|v| ViolationEntry {
                    axiom: v.axiom.label().to_string(),
                    witness: v.witness.iter().map(labels).collect(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowEntry {
    pub id: String,
    pub status: String,
    pub witness: Option<String>,
}

impl From<&Battery> for Vec<RowEntry> {
    fn from(b: &Battery) -> Self {
        b.rows
            .iter()
            .map(|r| RowEntry {
                id: r.id.to_string(),
                status: r.status.as_str().to_string(),
                witness: r.witness.clone(),
            })
            .collect()
    }
}

/// Everything `verify` knows about one matroid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyEntry {
    pub name: String,
    pub ground: Vec<String>,
    pub circuits: Vec<Vec<String>>,
    pub relation: Option<RelationProperties>,
    /// Absent when the ground set exceeds the exhaustive-scan bound.
    pub axioms: Option<AxiomDocument>,
    pub connectivity: ConnectivityDocument,
    pub battery: Vec<RowEntry>,
}

impl VerifyEntry {
    pub fn new(name: impl Into<String>, m: &Matroid, exhaustive_bound: usize) -> Self {
        Self {
            name: name.into(),
            ground: m.ground().labels().to_vec(),
            circuits: m.circuits().iter().map(|c| labels(&c)).collect(),
            relation: (!m.is_free()).then(|| induced_relation_allow_free(m).properties()),
            axioms: (m.ground().len() <= exhaustive_bound).then(|| (&check_all_axioms(m)).into()),
            connectivity: (&connectivity_report(m, exhaustive_bound)).into(),
            battery: (&proposition_battery(m, exhaustive_bound)).into(),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifySummary {
    pub matroids: usize,
    pub holds: usize,
    pub fails: usize,
    pub known_errata: usize,
    pub inapplicable: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub exhaustive_bound: usize,
    pub entries: Vec<VerifyEntry>,
    pub summary: VerifySummary,
}

impl VerifyReport {
    pub fn new(exhaustive_bound: usize, entries: Vec<VerifyEntry>) -> Self {
        let mut summary = VerifySummary {
            matroids: entries.len(),
            ..VerifySummary::default()
        };
        for row in entries.iter().flat_map(|e| &e.battery) {
            match row.status.as_str() {
                "holds" => summary.holds += 1,
                "inapplicable" => summary.inapplicable += 1,
                "skipped" => summary.skipped += 1,
                _ if crate::oracle::is_known_erratum(&row.id) => summary.known_errata += 1,
                _ => summary.fails += 1,
            }
        }
        Self {
            exhaustive_bound,
            entries,
            summary,
        }
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

pub fn from_json<T: serde::de::DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}
