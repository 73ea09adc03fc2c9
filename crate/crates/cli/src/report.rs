//! The JSON report written by `construct`.

use bicurve::constructions::{
    homological_profile, is_gorenstein, presentation, value_semigroup_trace, BiAmalgSpec,
    BuildOptions, GorensteinVerdict, HomologicalProfile, Image, ValidationReport,
};
use bicurve::goodsgp::{GoodSemigroup, Violation};
use bicurve::oracle::{oracle_compare, Comparison, OracleConfig, OracleOutcome, Saturation};
use bicurve::Result;
use serde::{Deserialize, Serialize};

use crate::input::InputSpecFile;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupSection {
    pub window: [i64; 2],
    pub delta: Vec<i64>,
    pub gamma: Vec<i64>,
    pub small_elements: Vec<Vec<i64>>,
    pub violations: Vec<Violation>,
    /// Positions where both coordinates could cancel; informational.
    pub double_ties: Vec<[i64; 2]>,
    pub symmetric_stable: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationSection {
    pub variables: Vec<String>,
    pub images: Vec<Image>,
    pub kernel_first: Vec<String>,
    pub kernel_second: Vec<String>,
    pub note: String,
    /// Every kernel generator maps to zero modulo `t^40`.
    pub kernels_vanish: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleSummary {
    pub config: OracleConfig,
    pub window: [i64; 2],
    pub points: usize,
    pub saturation: Saturation,
    pub comparison: Comparison,
    pub caveat: String,
}

impl OracleSummary {
    pub fn new(config: OracleConfig, outcome: &OracleOutcome, fast: &GoodSemigroup) -> Self {
        OracleSummary {
            config,
            window: outcome.window,
            points: outcome.points.len(),
            saturation: outcome.saturation.clone(),
            comparison: oracle_compare(fast, &outcome.point_set(), outcome.window),
            caveat: outcome.caveat.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub version: String,
    pub input: InputSpecFile,
    pub validation: ValidationReport,
    pub gluing_ideal: Vec<i64>,
    pub value_semigroup: SemigroupSection,
    pub gorenstein: GorensteinVerdict,
    pub profile: HomologicalProfile,
    pub presentation: PresentationSection,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleSummary>,
}

impl ReportDocument {
    pub fn build(input: &InputSpecFile, spec: &BiAmalgSpec, options: &BuildOptions) -> Result<(Self, GoodSemigroup)> {
        let trace = value_semigroup_trace(spec, options)?;
        let semigroup = GoodSemigroup::from_window_trace(&trace.points);
        let gorenstein = is_gorenstein(spec, options)?;
        let p = presentation(spec);
        let [kernel_first, kernel_second] = p.kernel_strings();
        let kernels_vanish = p.kernel_residues(3, 40)?.is_empty();
        let doc = ReportDocument {
            version: VERSION.into(),
            input: input.clone(),
            validation: spec.report(),
            gluing_ideal: spec.gluing_ideal().generators().to_vec(),
            value_semigroup: SemigroupSection {
                window: trace.window,
                delta: semigroup.delta().to_vec(),
                gamma: semigroup.gamma(),
                small_elements: semigroup.small_elements(),
                violations: semigroup.validate(),
                double_ties: trace.double_ties.clone(),
                symmetric_stable: semigroup.is_symmetric() == semigroup.is_symmetric_in_box(3),
            },
            gorenstein,
            profile: homological_profile(spec),
            presentation: PresentationSection {
                variables: p.variables.clone(),
                images: p.images.clone(),
                kernel_first,
                kernel_second,
                note: p.note.clone(),
                kernels_vanish,
            },
            oracle: None,
        };
        Ok((doc, semigroup))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }
}
