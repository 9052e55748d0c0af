//! Verified realizations with their grow-point registry and derivation trace.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::growable::{is_growable_at, GrowPoint};
use crate::multiset::LengthMultiset;
use crate::path::{verify_realization, HamPath, Verification};

/// One step of a derivation: an operation name and its integer parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub step: String,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub params: BTreeMap<String, i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl TraceStep {
    pub fn new(step: impl Into<String>) -> Self {
        Self {
            step: step.into(),
            params: BTreeMap::new(),
            note: None,
        }
    }

    pub fn param(mut self, key: &str, value: impl TryInto<i64>) -> Self {
        let value = value.try_into().unwrap_or(i64::MAX);
        self.params.insert(key.to_string(), value);
        self
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

impl std::fmt::Display for TraceStep {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.step)?;
        if !self.params.is_empty() {
            let ps: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            write!(f, " {}", ps.join(" "))?;
        }
        if let Some(n) = &self.note {
            write!(f, " ({n})")?;
        }
        Ok(())
    }
}

/// A realization together with the multiset it realizes, the grow points
/// known to hold, and how it was derived.
///
/// Every constructor checks that the path realizes the multiset and that
/// each listed grow point passes [`is_growable_at`], so a `Certificate`
/// value is always valid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawCertificate", into = "RawCertificate")]
pub struct Certificate {
    path: HamPath,
    multiset: LengthMultiset,
    grow_points: Vec<GrowPoint>,
    trace: Vec<TraceStep>,
}

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct RawCertificate {
    #[serde(default = "schema_default")]
    schema: u32,
    path: HamPath,
    multiset: LengthMultiset,
    #[serde(default)]
    grow_points: Vec<GrowPoint>,
    #[serde(default)]
    trace: Vec<TraceStep>,
}

fn schema_default() -> u32 {
    SCHEMA_VERSION
}

impl TryFrom<RawCertificate> for Certificate {
    type Error = Error;

    fn try_from(raw: RawCertificate) -> Result<Self> {
        if raw.schema != SCHEMA_VERSION {
            return Err(Error::Certificate(format!("unsupported schema {}", raw.schema)));
        }
        Certificate::with_trace(raw.path, raw.multiset, raw.grow_points, raw.trace)
    }
}

impl From<Certificate> for RawCertificate {
    fn from(c: Certificate) -> Self {
        RawCertificate {
            schema: SCHEMA_VERSION,
            path: c.path,
            multiset: c.multiset,
            grow_points: c.grow_points,
            trace: c.trace,
        }
    }
}

impl Certificate {
    /// Certificate for whatever `path` realizes, with the given grow points.
    pub fn from_path(path: HamPath, grow_points: Vec<GrowPoint>) -> Result<Self> {
        let multiset = crate::path::cyclic_lengths(&path);
        Self::with_trace(path, multiset, grow_points, Vec::new())
    }

    /// Checked constructor.
    pub fn with_trace(
        path: HamPath,
        multiset: LengthMultiset,
        mut grow_points: Vec<GrowPoint>,
        trace: Vec<TraceStep>,
    ) -> Result<Self> {
        match verify_realization(&path, &multiset) {
            Verification::Realizes => {}
            Verification::OrderMismatch {
                path_order,
                expected,
            } => {
                return Err(Error::Certificate(format!(
                    "path has order {path_order}, multiset needs {expected}"
                )))
            }
            Verification::MultisetMismatch { actual } => {
                return Err(Error::Certificate(format!(
                    "path realizes {{{actual}}}, not {{{multiset}}}"
                )))
            }
        }
        grow_points.sort();
        grow_points.dedup();
        for p in &grow_points {
            if !is_growable_at(&path, p.x, p.m)? {
                return Err(Error::NotGrowable { x: p.x, m: p.m });
            }
        }
        Ok(Self {
            path,
            multiset,
            grow_points,
            trace,
        })
    }

    pub fn path(&self) -> &HamPath {
        &self.path
    }

    pub fn multiset(&self) -> &LengthMultiset {
        &self.multiset
    }

    pub fn order(&self) -> usize {
        self.path.order()
    }

    pub fn grow_points(&self) -> &[GrowPoint] {
        &self.grow_points
    }

    pub fn trace(&self) -> &[TraceStep] {
        &self.trace
    }

    /// First registered point for length `x` (smallest `m`).
    pub fn grow_point(&self, x: usize) -> Option<GrowPoint> {
        self.grow_points.iter().copied().find(|p| p.x == x)
    }

    /// The lengths `x` with a registered grow point.
    pub fn growable_lengths(&self) -> Vec<usize> {
        let mut xs: Vec<usize> = self.grow_points.iter().map(|p| p.x).collect();
        xs.dedup();
        xs
    }

    pub fn push_trace(&mut self, step: TraceStep) {
        self.trace.push(step);
    }

    pub fn with_step(mut self, step: TraceStep) -> Self {
        self.trace.push(step);
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificate serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Certificate(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let p = HamPath::new(vec![6, 4, 3, 0, 7, 1, 5, 2, 8]).unwrap();
        let c = Certificate::from_path(p, vec![GrowPoint::new(3, 2)])
            .unwrap()
            .with_step(TraceStep::new("seed").param("rows", 1).note("example"));
        let j = c.to_json();
        assert!(j.contains("\"schema\":1"));
        assert!(j.contains("\"multiset\":\"1 2^2 3^4 4\""));
        assert_eq!(Certificate::from_json(&j).unwrap(), c);
    }

    #[test]
    fn rejects_bad_certificates() {
        let bad_ms = r#"{"path":[0,1,2],"multiset":"1 2","grow_points":[],"trace":[]}"#;
        assert!(Certificate::from_json(bad_ms).is_err());
        let bad_point = r#"{"path":[0,1,2,3],"multiset":"1^3","grow_points":[{"x":2,"m":0}]}"#;
        assert!(Certificate::from_json(bad_point).is_err());
        let bad_schema = r#"{"schema":7,"path":[0,1],"multiset":"1"}"#;
        assert!(Certificate::from_json(bad_schema).is_err());
    }
}
