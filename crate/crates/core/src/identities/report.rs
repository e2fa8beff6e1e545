use std::time::Duration;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::qscalar::QRat;
use crate::xpoly::XPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One side of a compared identity.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Side {
    Scalar(QRat),
    Poly(XPoly),
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Side::Scalar(c) => c.fmt(f),
            Side::Poly(p) => p.fmt(f),
        }
    }
}

/// A failing instance: indices plus both canonical sides.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    pub n: usize,
    pub k: Option<usize>,
    pub r: Option<usize>,
    pub lhs: Side,
    pub rhs: Side,
}

/// Outcome of one catalog entry. `status` is pass iff `witnesses` is empty.
#[derive(Clone, Debug, PartialEq)]
pub struct IdentityReport {
    pub id: String,
    pub n_max: usize,
    pub r_max: Option<usize>,
    pub witnesses: Vec<Witness>,
    pub elapsed: Duration,
}

impl IdentityReport {
    pub fn status(&self) -> Status {
        if self.witnesses.is_empty() {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn passed(&self) -> bool {
        self.status() == Status::Pass
    }

    /// Serializable view. Timing is omitted (`null`) unless requested so that
    /// repeated runs produce identical output.
    pub fn json_view(&self, with_timing: bool) -> ReportJson<'_> {
        ReportJson {
            report: self,
            with_timing,
        }
    }
}

pub struct ReportJson<'a> {
    report: &'a IdentityReport,
    with_timing: bool,
}

impl Serialize for ReportJson<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let r = self.report;
        let mut map = serializer.serialize_map(Some(6))?;
        map.serialize_entry("id", &r.id)?;
        map.serialize_entry("n_max", &r.n_max)?;
        map.serialize_entry("r_max", &r.r_max)?;
        map.serialize_entry("status", &r.status())?;
        map.serialize_entry("witnesses", &r.witnesses)?;
        let elapsed = self.with_timing.then_some(r.elapsed.as_millis() as u64);
        map.serialize_entry("elapsed_ms", &elapsed)?;
        map.end()
    }
}

impl Serialize for IdentityReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.json_view(true).serialize(serializer)
    }
}
