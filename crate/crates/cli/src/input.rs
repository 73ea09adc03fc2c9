//! The TOML spec file.
//!
//! ```toml
//! mode = "biamalg"          # biamalg | amalg | duplication
//! window = [15, 23]         # optional
//!
//! [B]
//! generators = [4, 7, 9]
//! [C]
//! generators = [5, 8, 11]
//! [f]
//! degree = 7                # or kind = "inclusion" with an [A] section
//! [g]
//! degree = 11
//! [J]
//! generators = [4, 9]
//! [Jp]
//! generators = [5, 8]
//!
//! [oracle]                  # optional
//! prime = 3
//! truncation = 40
//! budget = 8                # or trials / seed / partitions for random mode
//! ```

use bicurve::constructions::{MapKind, Mode, SpecData};
use bicurve::oracle::{OracleConfig, OracleMode};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Generators {
    pub generators: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MapKindName {
    Power,
    Inclusion,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapSection {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<MapKindName>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<i64>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OracleSection {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prime: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub truncation: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub budget: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trials: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub partitions: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputSpecFile {
    pub mode: Mode,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub window: Option<[i64; 2]>,
    #[serde(rename = "A", default, skip_serializing_if = "Option::is_none")]
    pub a: Option<Generators>,
    #[serde(rename = "B", default, skip_serializing_if = "Option::is_none")]
    pub b: Option<Generators>,
    #[serde(rename = "C", default, skip_serializing_if = "Option::is_none")]
    pub c: Option<Generators>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f: Option<MapSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g: Option<MapSection>,
    #[serde(rename = "J", default, skip_serializing_if = "Option::is_none")]
    pub j: Option<Generators>,
    #[serde(rename = "Jp", default, skip_serializing_if = "Option::is_none")]
    pub jp: Option<Generators>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleSection>,
}

#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("{0}")]
    Parse(#[from] toml::de::Error),
    #[error("map {name}: {reason}")]
    Map { name: &'static str, reason: String },
    #[error("oracle: {0}")]
    Oracle(String),
}

impl InputSpecFile {
    pub fn parse(text: &str) -> Result<Self, InputError> {
        Ok(toml::from_str(text)?)
    }

    fn map(name: &'static str, section: &Option<MapSection>) -> Result<Option<MapKind>, InputError> {
        let Some(s) = section else { return Ok(None) };
        match (&s.kind, s.degree) {
            (Some(MapKindName::Inclusion), None) => Ok(Some(MapKind::Inclusion)),
            (Some(MapKindName::Inclusion), Some(_)) => Err(InputError::Map {
                name,
                reason: "an inclusion takes no degree".into(),
            }),
            (_, Some(d)) => Ok(Some(MapKind::Power(d))),
            (_, None) => Err(InputError::Map { name, reason: "missing degree".into() }),
        }
    }

    pub fn to_data(&self) -> Result<SpecData, InputError> {
        let gens = |g: &Option<Generators>| g.as_ref().map(|g| g.generators.clone());
        Ok(SpecData {
            mode: self.mode,
            a: gens(&self.a),
            b: gens(&self.b),
            c: gens(&self.c),
            f: Self::map("f", &self.f)?,
            g: Self::map("g", &self.g)?,
            j: gens(&self.j),
            jp: gens(&self.jp),
        })
    }

    /// Oracle settings from the file, with library defaults for the rest.
    pub fn oracle_config(&self) -> Result<OracleConfig, InputError> {
        let section = self.oracle.clone().unwrap_or_default();
        let defaults = OracleConfig::default();
        let mode = match (section.budget, section.trials) {
            (Some(_), Some(_)) => {
                return Err(InputError::Oracle("give either budget or trials, not both".into()))
            }
            (_, Some(trials)) => OracleMode::Random {
                trials,
                seed: section.seed.unwrap_or(0),
                partitions: section.partitions.unwrap_or(4),
            },
            (Some(budget), None) => OracleMode::Exhaustive { budget },
            (None, None) => defaults.mode,
        };
        Ok(OracleConfig {
            prime: section.prime.unwrap_or(defaults.prime),
            truncation: section.truncation.unwrap_or(defaults.truncation),
            mode,
            window: self.window,
        })
    }
}
