//! Named EAS and ℓEAS instances shipped with the crate.
//!
//! EAS names: the thirteen two-element classes `A1` … `H2`, plus the
//! diassociative (`dias-*`) and triassociative (`trias-*`) tables. ℓEAS names:
//! `ex2d-01` … `ex2d-17` (with `ex2d-02` at λ = 1, 2, -1), `dendriform-1..4`,
//! `tridendriform-1..3`, `duplicial`, `dual-duplicial`, `post-lie`. Any EAS
//! name is also accepted as an ℓEAS name and resolves to its linearization.

use std::path::Path;
use std::sync::OnceLock;

use serde_json::Value;

use crate::eas::{are_isomorphic, FiniteEas};
use crate::error::{Error, Result};
use crate::leas::{linearize, LinearEas};
use crate::scalar::Rational;

const EAS_DATA: &str = include_str!("../data/eas.json");
const LEAS_DATA: &str = include_str!("../data/leas.json");

/// The thirteen isomorphism classes of two-element EAS.
pub const CLASSIFIED: [&str; 13] =
    ["A1", "A2", "C1", "C3", "C5", "C6", "E1-E2", "E3", "F1", "F3", "F4", "H1", "H2"];

#[derive(Clone, Debug)]
pub struct EasEntry {
    pub name: String,
    pub aliases: Vec<String>,
    pub description: Option<String>,
    pub eas: FiniteEas,
}

#[derive(Clone, Debug)]
pub struct LeasEntry {
    pub name: String,
    pub note: Option<String>,
    pub leas: LinearEas<Rational>,
}

fn str_field(v: &Value, key: &str) -> Option<String> {
    v.get(key).and_then(Value::as_str).map(str::to_owned)
}

pub fn eas_entries() -> &'static [EasEntry] {
    static CELL: OnceLock<Vec<EasEntry>> = OnceLock::new();
    CELL.get_or_init(|| {
        let raw: Vec<Value> = serde_json::from_str(EAS_DATA).expect("embedded EAS catalog");
        raw.iter()
            .map(|v| EasEntry {
                name: str_field(v, "name").expect("catalog entry name"),
                aliases: v
                    .get("aliases")
                    .and_then(Value::as_array)
                    .map(|a| a.iter().filter_map(Value::as_str).map(str::to_owned).collect())
                    .unwrap_or_default(),
                description: str_field(v, "description"),
                eas: FiniteEas::from_json_str(&v.to_string()).expect("embedded EAS table"),
            })
            .collect()
    })
}

pub fn leas_entries() -> &'static [LeasEntry] {
    static CELL: OnceLock<Vec<LeasEntry>> = OnceLock::new();
    CELL.get_or_init(|| {
        let raw: Vec<Value> = serde_json::from_str(LEAS_DATA).expect("embedded ℓEAS catalog");
        raw.iter()
            .map(|v| LeasEntry {
                name: str_field(v, "name").expect("catalog entry name"),
                note: str_field(v, "note"),
                leas: LinearEas::from_json_str(&v.to_string()).expect("embedded ℓEAS matrix"),
            })
            .collect()
    })
}

fn find_eas(name: &str) -> Option<&'static EasEntry> {
    eas_entries().iter().find(|e| e.name == name || e.aliases.iter().any(|a| a == name))
}

pub fn eas(name: &str) -> Result<FiniteEas> {
    find_eas(name).map(|e| e.eas.clone()).ok_or_else(|| Error::UnknownName(name.to_owned()))
}

pub fn leas(name: &str) -> Result<LinearEas<Rational>> {
    if let Some(e) = leas_entries().iter().find(|e| e.name == name) {
        return Ok(e.leas.clone());
    }
    let e = find_eas(name).ok_or_else(|| Error::UnknownName(name.to_owned()))?;
    Ok(linearize(&e.eas)?.with_name(e.name.clone()))
}

/// All primary names, EAS first.
pub fn names() -> Vec<String> {
    eas_entries().iter().map(|e| e.name.clone()).chain(leas_entries().iter().map(|e| e.name.clone())).collect()
}

pub fn classified() -> Vec<(&'static str, FiniteEas)> {
    CLASSIFIED.iter().map(|&n| (n, eas(n).expect("classified name"))).collect()
}

/// Every ℓEAS matrix in the catalog proper (not the EAS linearizations).
pub fn leas_catalog() -> Vec<LinearEas<Rational>> {
    leas_entries().iter().map(|e| e.leas.clone()).collect()
}

/// Name of the two-element class `s` belongs to, if any.
pub fn identify_eas(s: &FiniteEas) -> Option<String> {
    if s.len() != 2 {
        return None;
    }
    classified().into_iter().find(|(_, t)| are_isomorphic(s, t)).map(|(n, _)| n.to_owned())
}

fn read_json(path: &str) -> Result<Value> {
    let text = std::fs::read_to_string(Path::new(path))
        .map_err(|e| Error::Parse(format!("{path}: {e}")))?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{path}: {e}")))
}

/// Resolves a catalog name, falling back to a JSON file path.
pub fn load_eas(name_or_path: &str) -> Result<FiniteEas> {
    if let Ok(s) = eas(name_or_path) {
        return Ok(s);
    }
    if !Path::new(name_or_path).exists() {
        return Err(Error::UnknownName(name_or_path.to_owned()));
    }
    FiniteEas::from_json_str(&read_json(name_or_path)?.to_string())
}

/// Like [`load_eas`] for ℓEAS; an EAS file is linearized.
pub fn load_leas(name_or_path: &str) -> Result<LinearEas<Rational>> {
    if let Ok(l) = leas(name_or_path) {
        return Ok(l);
    }
    if !Path::new(name_or_path).exists() {
        return Err(Error::UnknownName(name_or_path.to_owned()));
    }
    let v = read_json(name_or_path)?;
    if v.get("phi").is_some() {
        LinearEas::from_json_str(&v.to_string())
    } else {
        linearize(&FiniteEas::from_json_str(&v.to_string())?)
    }
}
