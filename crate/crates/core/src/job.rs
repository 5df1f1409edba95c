//! Declarative job files: field, named presentations, Hopf data,
//! actions/coactions, a smash datum, modules, bounds and a command, as
//! one versioned JSON document.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const JOB_SCHEMA: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum FieldSpec {
    Rationals,
    Prime { p: u64 },
}

/// One relation term: a word in generator indices with a coefficient,
/// written as a string so that rationals stay exact.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TermSpec {
    pub word: Vec<usize>,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlgebraSpec {
    /// (label, degree) per generator.
    pub generators: Vec<(String, usize)>,
    #[serde(default)]
    pub relations: Vec<Vec<TermSpec>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "constructor", rename_all = "kebab-case")]
pub enum HopfSpec {
    Trivial,
    Cyclic { order: usize },
    SymmetricS3,
    Sweedler,
}

/// An action or coaction given on generators: `gen_data[h][g]` is the
/// coefficient vector attached to Hopf basis element `h` and algebra
/// generator `g` (images for actions, components for coactions).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HopfMapSpec {
    pub hopf: String,
    pub algebra: String,
    /// Omitted means the trivial (co)action.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gen_data: Option<Vec<Vec<Vec<String>>>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SmashSpec {
    pub a: String,
    pub action: String,
    pub b: String,
    pub coaction: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ModuleKind {
    Trivial,
    Regular,
}

impl Default for ModuleKind {
    fn default() -> ModuleKind {
        ModuleKind::Trivial
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct JobSpec {
    pub schema: u32,
    pub field: FieldSpec,
    /// Homological and internal truncation bounds (N, D).
    pub bounds: (usize, usize),
    pub command: String,
    #[serde(default)]
    pub algebras: BTreeMap<String, AlgebraSpec>,
    #[serde(default)]
    pub hopf: BTreeMap<String, HopfSpec>,
    #[serde(default)]
    pub actions: BTreeMap<String, HopfMapSpec>,
    #[serde(default)]
    pub coactions: BTreeMap<String, HopfMapSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub smash: Option<SmashSpec>,
    /// Target algebra name for the single-algebra commands
    /// (resolve, ext, as-regular; validate with no smash datum).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<String>,
    /// Module kinds for the theorem commands: `m` over A, `x` over B.
    #[serde(default)]
    pub module_m: ModuleKind,
    #[serde(default)]
    pub module_x: ModuleKind,
    /// Seed for randomized validators; fixed default keeps runs
    /// deterministic.
    #[serde(default)]
    pub seed: u64,
}

pub const COMMANDS: &[&str] = &[
    "validate",
    "smash",
    "resolve",
    "ext",
    "verify-ext-theorem",
    "tor-check",
    "as-regular",
    "nakayama",
];

/// Parses and cross-validates a job document.
pub fn parse_job(text: &str) -> Result<JobSpec> {
    let job: JobSpec = serde_json::from_str(text)?;
    validate_job(&job)?;
    Ok(job)
}

pub fn validate_job(job: &JobSpec) -> Result<()> {
    if job.schema != JOB_SCHEMA {
        return Err(Error::Input(format!(
            "unsupported job schema {}, expected {JOB_SCHEMA}",
            job.schema
        )));
    }
    if job.bounds.0 == 0 || job.bounds.1 == 0 {
        return Err(Error::Input("bounds must be positive".into()));
    }
    if !COMMANDS.contains(&job.command.as_str()) {
        return Err(Error::Input(format!(
            "unknown command {:?}; expected one of {:?}",
            job.command, COMMANDS
        )));
    }
    for (name, m) in job.actions.iter().chain(job.coactions.iter()) {
        if !job.hopf.contains_key(&m.hopf) {
            return Err(Error::Input(format!(
                "{name} references undefined Hopf data {:?}",
                m.hopf
            )));
        }
        if !job.algebras.contains_key(&m.algebra) {
            return Err(Error::Input(format!(
                "{name} references undefined algebra {:?}",
                m.algebra
            )));
        }
    }
    if let Some(s) = &job.smash {
        for (what, name) in [("algebra", &s.a), ("algebra", &s.b)] {
            if !job.algebras.contains_key(name) {
                return Err(Error::Input(format!(
                    "smash references undefined {what} {name:?}"
                )));
            }
        }
        let act = job
            .actions
            .get(&s.action)
            .ok_or_else(|| Error::Input(format!("smash references undefined action {:?}", s.action)))?;
        let coact = job
            .coactions
            .get(&s.coaction)
            .ok_or_else(|| Error::Input(format!("smash references undefined coaction {:?}", s.coaction)))?;
        if act.algebra != s.a {
            return Err(Error::Input(format!(
                "action {:?} is on algebra {:?}, not the smash factor {:?}",
                s.action, act.algebra, s.a
            )));
        }
        if coact.algebra != s.b {
            return Err(Error::Input(format!(
                "coaction {:?} is on algebra {:?}, not the smash factor {:?}",
                s.coaction, coact.algebra, s.b
            )));
        }
        if act.hopf != coact.hopf {
            return Err(Error::Input(
                "smash action and coaction use different Hopf data".into(),
            ));
        }
    }
    if let Some(t) = &job.target {
        if !job.algebras.contains_key(t) {
            return Err(Error::Input(format!("target references undefined algebra {t:?}")));
        }
    }
    let needs_smash = matches!(
        job.command.as_str(),
        "smash" | "verify-ext-theorem" | "tor-check" | "nakayama"
    );
    if needs_smash && job.smash.is_none() {
        return Err(Error::Input(format!(
            "command {:?} needs a smash datum",
            job.command
        )));
    }
    let needs_target = matches!(job.command.as_str(), "resolve" | "ext" | "as-regular");
    if needs_target && job.target.is_none() && job.smash.is_none() {
        return Err(Error::Input(format!(
            "command {:?} needs a target algebra or a smash datum",
            job.command
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_job_parses() {
        let text = r#"{
            "schema": 1,
            "field": {"kind": "prime", "p": 7},
            "bounds": [3, 6],
            "command": "validate",
            "algebras": {"A": {"generators": [["x", 1]]}}
        }"#;
        let job = parse_job(text).unwrap();
        assert_eq!(job.field, FieldSpec::Prime { p: 7 });
        assert_eq!(job.algebras["A"].generators, vec![("x".to_string(), 1)]);
    }

    #[test]
    fn undefined_reference_is_named() {
        let text = r#"{
            "schema": 1,
            "field": {"kind": "rationals"},
            "bounds": [3, 6],
            "command": "validate",
            "algebras": {"A": {"generators": [["x", 1]]}},
            "actions": {"act": {"hopf": "H", "algebra": "A"}}
        }"#;
        let err = parse_job(text).unwrap_err().to_string();
        assert!(err.contains("act") && err.contains("H"), "{err}");
    }

    #[test]
    fn round_trip_is_stable() {
        let text = r#"{
            "schema": 1,
            "field": {"kind": "prime", "p": 7},
            "bounds": [3, 6],
            "command": "verify-ext-theorem",
            "algebras": {
                "A": {"generators": [["x", 1]]},
                "B": {"generators": [["y", 1]]}
            },
            "hopf": {"H": {"constructor": "cyclic", "order": 2}},
            "actions": {"act": {"hopf": "H", "algebra": "A", "gen_data": [[["1"]], [["-1"]]]}},
            "coactions": {"co": {"hopf": "H", "algebra": "B", "gen_data": [[["0"]], [["1"]]]}},
            "smash": {"a": "A", "action": "act", "b": "B", "coaction": "co"}
        }"#;
        let job = parse_job(text).unwrap();
        let ser = serde_json::to_string(&job).unwrap();
        let again = parse_job(&ser).unwrap();
        assert_eq!(job, again);
        assert_eq!(ser, serde_json::to_string(&again).unwrap());
    }
}
