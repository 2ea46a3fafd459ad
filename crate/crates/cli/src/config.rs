//! Scenario configuration as read from JSON.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use extended_brauer::falgebra::{make_field, Field};
use extended_brauer::groups::{sylow_subgroup, FiniteGroup, Perm, Subgroup};

use crate::catalog::{preset, Preset};
use crate::CliError;

pub const CHECKS: &[&str] =
    &["prop21", "prop22", "lemma23", "prop24", "prop25", "thm31", "thm32", "remark31", "prop33", "invariants"];

/// A group or subgroup: a preset name or explicit generators as image
/// arrays.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum GroupSpec {
    Name(String),
    Generators { generators: Vec<Vec<usize>> },
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum FieldDegree {
    Auto(String),
    Explicit(u32),
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    #[serde(default)]
    pub scenario: Option<String>,
    pub group: GroupSpec,
    #[serde(default)]
    pub normal_subgroup: Option<GroupSpec>,
    pub p: u32,
    #[serde(default)]
    pub p_subgroup: Option<GroupSpec>,
    #[serde(default)]
    pub h_subgroup: Option<GroupSpec>,
    #[serde(default)]
    pub checks: Vec<String>,
    #[serde(default)]
    pub field_degree: Option<FieldDegree>,
    #[serde(default)]
    pub seed: u64,
    #[serde(default)]
    pub output: Option<String>,
}

/// Everything a run needs, resolved and validated.
pub struct Scenario {
    pub name: String,
    pub g: Subgroup,
    pub n: Subgroup,
    pub p_sub: Subgroup,
    pub h: Subgroup,
    pub prime: u32,
    pub field: Field,
    pub checks: Vec<String>,
    pub seed: u64,
}

pub fn load_config(text: &str) -> Result<ScenarioConfig, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Config(format!("parse error: {e}")))
}

fn config_err(e: impl std::fmt::Display) -> CliError {
    CliError::Config(e.to_string())
}

fn build_group(spec: &GroupSpec) -> Result<(Arc<FiniteGroup>, Option<&'static Preset>), CliError> {
    match spec {
        GroupSpec::Name(name) => {
            let p = preset(name).ok_or_else(|| CliError::Config(format!("unknown preset {name:?}")))?;
            Ok((p.build()?, Some(p)))
        }
        GroupSpec::Generators { generators } => {
            let perms =
                generators.iter().map(|g| Perm::new(g.clone())).collect::<Result<Vec<_>, _>>().map_err(config_err)?;
            Ok((FiniteGroup::from_generators(perms).map_err(config_err)?, None))
        }
    }
}

fn resolve_subgroup(
    group: &Arc<FiniteGroup>,
    preset: Option<&Preset>,
    spec: &GroupSpec,
    what: &str,
) -> Result<Subgroup, CliError> {
    match spec {
        GroupSpec::Name(name) => match name.as_str() {
            "G" | "whole" => Ok(Subgroup::whole(group)),
            "1" | "trivial" => Ok(Subgroup::trivial(group)),
            _ => preset
                .and_then(|p| p.subgroup(group, name))
                .unwrap_or_else(|| Err(CliError::Config(format!("unknown {what} {name:?}")))),
        },
        GroupSpec::Generators { generators } => {
            let perms =
                generators.iter().map(|g| Perm::new(g.clone())).collect::<Result<Vec<_>, _>>().map_err(config_err)?;
            Subgroup::from_perms(group, &perms).map_err(|e| CliError::Config(format!("{what}: {e}")))
        }
    }
}

impl ScenarioConfig {
    /// Builds the groups and field, applying defaults: `N = G`, `P` a Sylow
    /// subgroup, `H = G`, automatic field degree.
    pub fn resolve(&self) -> Result<Scenario, CliError> {
        let (group, preset) = build_group(&self.group)?;
        let g = Subgroup::whole(&group);
        let n = match &self.normal_subgroup {
            Some(spec) => resolve_subgroup(&group, preset, spec, "normal subgroup")?,
            None => g.clone(),
        };
        if !n.is_normal_in(&g) {
            return Err(CliError::Config("normal_subgroup is not normal in the group".into()));
        }
        let field = match &self.field_degree {
            None => make_field(&group, self.p, None),
            Some(FieldDegree::Auto(s)) if s == "auto" => make_field(&group, self.p, None),
            Some(FieldDegree::Auto(s)) => {
                return Err(CliError::Config(format!("field_degree {s:?} is neither \"auto\" nor an integer")))
            }
            Some(FieldDegree::Explicit(e)) => make_field(&group, self.p, Some(*e)),
        }
        .map_err(config_err)?;
        let prime = self.p as usize;
        let p_sub = match &self.p_subgroup {
            None => sylow_subgroup(&g, prime).map_err(config_err)?,
            Some(GroupSpec::Name(s)) if s == "sylow" => sylow_subgroup(&g, prime).map_err(config_err)?,
            Some(spec) => resolve_subgroup(&group, preset, spec, "p_subgroup")?,
        };
        if !p_sub.is_p_group(prime) {
            return Err(CliError::Config("p_subgroup is not a p-group".into()));
        }
        let h = match &self.h_subgroup {
            Some(spec) => resolve_subgroup(&group, preset, spec, "h_subgroup")?,
            None => g.clone(),
        };
        if !p_sub.is_subgroup_of(&h) {
            return Err(CliError::Config("p_subgroup is not contained in h_subgroup".into()));
        }
        let checks =
            if self.checks.is_empty() { CHECKS.iter().map(|s| s.to_string()).collect() } else { self.checks.clone() };
        if let Some(bad) = checks.iter().find(|c| !CHECKS.contains(&c.as_str())) {
            return Err(CliError::Config(format!("unknown check {bad:?}")));
        }
        let name = self.scenario.clone().unwrap_or_else(|| match &self.group {
            GroupSpec::Name(s) => s.clone(),
            GroupSpec::Generators { .. } => "custom".into(),
        });
        Ok(Scenario { name, g, n, p_sub, h, prime: self.p, field, checks, seed: self.seed })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_config() {
        let c = load_config(r#"{"group":"S3","normal_subgroup":"A3","p":3,"p_subgroup":"sylow","checks":["prop25"]}"#)
            .unwrap();
        let s = c.resolve().unwrap();
        assert_eq!(s.g.order(), 6);
        assert_eq!(s.n.order(), 3);
        assert_eq!(s.p_sub.order(), 3);
        assert_eq!(s.field.order(), 3);
        assert_eq!(s.seed, 0);
    }

    #[test]
    fn unknown_preset() {
        let c = load_config(r#"{"group":"S9","p":2}"#).unwrap();
        assert!(matches!(c.resolve(), Err(CliError::Config(_))));
    }

    #[test]
    fn explicit_q8_generators() {
        let c = load_config(
            r#"{"group":{"generators":[[1,4,3,6,5,0,7,2],[2,7,4,1,6,3,0,5]]},"p":2,"checks":["invariants"]}"#,
        )
        .unwrap();
        let s = c.resolve().unwrap();
        assert_eq!(s.g.order(), 8);
        assert_eq!(s.p_sub.order(), 8);
    }

    #[test]
    fn non_normal_is_rejected() {
        let c = load_config(r#"{"group":"S3","normal_subgroup":"C2","p":2}"#).unwrap();
        assert!(c.resolve().is_err());
    }

    #[test]
    fn field_degree_forms() {
        let c = load_config(r#"{"group":"S3","p":2,"field_degree":"auto"}"#).unwrap();
        assert_eq!(c.resolve().unwrap().field.order(), 4);
        let c = load_config(r#"{"group":"S3","p":2,"field_degree":3}"#).unwrap();
        assert_eq!(c.resolve().unwrap().field.order(), 8);
    }
}
