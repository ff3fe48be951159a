//! Structured report document shared by the subcommands.
//!
//! Reports are JSON with stable field names; floating-point values are
//! written in the shortest form that parses back to the identical `f64`,
//! so reading a report reproduces the exact vectors written. Commands
//! populate the fields they computed and omit the rest.

use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::Path;

use neim_core::{
    Decision, FilterStats, NeimReport, Normalization, ObjectiveVector, PayoffMatrix, UtopiaNadirBox,
};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Debug, Default, Serialize, Deserialize)]
#[serde(default)]
pub struct Report {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub problem: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha_deg: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub normalized: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<Vec<f64>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub solver_weights: Option<Vec<Vec<f64>>>,
    /// Payoff matrices as lists of columns.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub payoff_standard: Option<Vec<Vec<f64>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub payoff_nonextreme: Option<Vec<Vec<f64>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub box_standard: Option<BoxDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub box_nonextreme: Option<BoxDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub normalization: Option<NormalizationDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stats: Option<FilterStats>,
    /// Spanning matrices as lists of columns, one entry per objective.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spanning_matrices: Option<Vec<Vec<Vec<f64>>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub knee_standard: Option<KneeDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub knee_nonextreme: Option<KneeDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BoxDoc {
    pub utopia: Vec<f64>,
    pub nadir: Vec<f64>,
}

impl From<&UtopiaNadirBox> for BoxDoc {
    fn from(b: &UtopiaNadirBox) -> Self {
        Self {
            utopia: b.utopia().as_slice().to_vec(),
            nadir: b.nadir().as_slice().to_vec(),
        }
    }
}

impl BoxDoc {
    pub fn to_box(&self) -> Result<UtopiaNadirBox, CliError> {
        Ok(UtopiaNadirBox::new(
            ObjectiveVector::new(self.utopia.clone())?,
            ObjectiveVector::new(self.nadir.clone())?,
        )?)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NormalizationDoc {
    pub shift: Vec<f64>,
    pub scale: Vec<f64>,
}

impl From<&Normalization> for NormalizationDoc {
    fn from(n: &Normalization) -> Self {
        Self {
            shift: n.shift().as_slice().to_vec(),
            scale: n.scale().to_vec(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct KneeDoc {
    pub weight: Vec<f64>,
    pub has_negative_components: bool,
    pub solver_weight: Vec<f64>,
    pub clamped: bool,
    pub objectives: Vec<f64>,
    pub decision: Decision,
    pub pareto_guaranteed: bool,
    /// Dominance status within the input cloud; absent for analytic
    /// problems.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dominated_in_cloud: Option<bool>,
}

fn payoff_columns(phi: &PayoffMatrix) -> Vec<Vec<f64>> {
    phi.columns()
        .iter()
        .map(|c| c.as_slice().to_vec())
        .collect()
}

impl Report {
    /// Fill the fields covered by a library-level run.
    pub fn from_neim(report: &NeimReport, alpha_deg: Vec<f64>, problem: String) -> Self {
        Self {
            problem: Some(problem),
            alpha_deg: Some(alpha_deg),
            normalized: Some(report.normalized),
            weights: Some(
                report
                    .weights
                    .iter()
                    .map(|w| w.as_slice().to_vec())
                    .collect(),
            ),
            solver_weights: Some(report.solver_weights.clone()),
            payoff_standard: Some(payoff_columns(&report.standard_payoff)),
            payoff_nonextreme: Some(payoff_columns(&report.nonextreme_payoff)),
            box_standard: Some(BoxDoc::from(&report.standard_box)),
            box_nonextreme: Some(BoxDoc::from(&report.nonextreme_box)),
            ..Self::default()
        }
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let file =
            File::open(path).map_err(|e| CliError::Data(format!("{}: {e}", path.display())))?;
        Ok(serde_json::from_reader(BufReader::new(file))?)
    }

    pub fn write<W: Write>(&self, mut out: W) -> Result<(), CliError> {
        serde_json::to_writer_pretty(&mut out, self)?;
        out.write_all(b"\n")?;
        Ok(())
    }

    pub fn save(&self, path: &Path) -> Result<(), CliError> {
        let file =
            File::create(path).map_err(|e| CliError::Data(format!("{}: {e}", path.display())))?;
        self.write(BufWriter::new(file))
    }
}
