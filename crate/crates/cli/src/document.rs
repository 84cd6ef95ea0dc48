//! Versioned JSON documents for rank charts.

use anyhow::{bail, Context, Result};
use grassrank::solver::{SolveReport, SolveStatus};
use grassrank::RankChart;
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    Solver,
    Formula,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Parameters {
    pub source: Source,
    pub field: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_p: Option<usize>,
}

impl Parameters {
    pub fn formula(family: &str, field: &str) -> Self {
        Parameters {
            source: Source::Formula,
            field: field.to_string(),
            family: Some(family.to_string()),
            k: None,
            n: None,
            q: None,
            p: None,
            max_p: None,
        }
    }
}

/// One construction's contribution to a solve.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Diagnostic {
    pub signs: String,
    pub duplicates: Vec<String>,
    pub admissible_pairs: usize,
    /// `None` when the search gave up.
    pub candidates: Option<usize>,
    pub contains_result: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChartDocument {
    pub schema_version: String,
    pub parameters: Parameters,
    pub generators: Vec<[i64; 2]>,
    pub certification: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certifying_construction: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub candidates: Option<Vec<Vec<[i64; 2]>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diagnostics: Option<Vec<Diagnostic>>,
}

fn pairs(chart: &RankChart) -> Vec<[i64; 2]> {
    chart.generators().iter().map(|g| [g.p, g.q]).collect()
}

impl ChartDocument {
    pub fn from_formula(parameters: Parameters, chart: &RankChart) -> Self {
        ChartDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            parameters,
            generators: pairs(chart),
            certification: "exact".to_string(),
            certifying_construction: None,
            candidates: None,
            diagnostics: None,
        }
    }

    pub fn from_report(report: &SolveReport, diagnostics: bool) -> Self {
        let parameters = Parameters {
            source: Source::Solver,
            field: report.field.as_str().to_string(),
            family: None,
            k: Some(report.k),
            n: Some(report.n),
            q: Some(report.q),
            p: None,
            max_p: None,
        };
        let generators = report.result.as_ref().map(pairs).unwrap_or_default();
        let candidates = (report.status != SolveStatus::Certified)
            .then(|| report.candidates.iter().map(pairs).collect());
        let diagnostics = diagnostics.then(|| {
            report
                .witnesses
                .iter()
                .map(|w| Diagnostic {
                    signs: w.signs.to_string(),
                    duplicates: w.duplicates.iter().map(ToString::to_string).collect(),
                    admissible_pairs: w.admissible_pairs,
                    candidates: w.candidates,
                    contains_result: w.contains_result,
                })
                .collect()
        });
        ChartDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            parameters,
            generators,
            certification: report.status.as_str().to_string(),
            certifying_construction: report.certifying.as_ref().map(ToString::to_string),
            candidates,
            diagnostics,
        }
    }

    pub fn chart(&self) -> RankChart {
        RankChart::from_pairs(self.generators.iter().map(|&[p, q]| (p, q)))
    }

    /// Compact JSON with keys in sorted order and a trailing newline.
    pub fn to_json(&self) -> Result<String> {
        let value = serde_json::to_value(self)?;
        let mut text = serde_json::to_string(&value)?;
        text.push('\n');
        Ok(text)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: ChartDocument = serde_json::from_str(text).context("malformed chart document")?;
        if doc.schema_version != SCHEMA_VERSION {
            bail!("unsupported schema version {:?}", doc.schema_version);
        }
        if !doc.generators.windows(2).all(|w| w[0] <= w[1]) {
            bail!("generator list is not sorted");
        }
        Ok(doc)
    }
}
