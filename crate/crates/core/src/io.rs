//! JSON formats.
//!
//! Writers emit compact JSON with sorted collections and a trailing newline,
//! so reading a canonical document and writing it back is byte-identical.
//! Readers report the offending field as [`Error::Schema`].

use std::sync::Arc;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lab::TightQuantale;
use crate::lattice::Lattice;
use crate::quantale::{make_quantale, FrobeniusReport, FrobeniusWitness, Quantale};
use crate::rel::TernaryRel;
use crate::slatt::{BiIdealSpace, SupMap, TensorElement};

/// Compact JSON plus a newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("plain data serializes");
    s.push('\n');
    s
}

pub fn from_json<T: DeserializeOwned>(s: &str) -> Result<T> {
    let de = &mut serde_json::Deserializer::from_str(s);
    serde_path_to_error::deserialize(de).map_err(|e| Error::Schema {
        path: e.path().to_string(),
        message: e.inner().to_string(),
    })
}

fn schema(path: &str, e: impl std::fmt::Display) -> Error {
    Error::Schema {
        path: path.into(),
        message: e.to_string(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatticeJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub size: usize,
    /// `[i, j]`: `i` is covered by `j`.
    pub covers: Vec<[usize; 2]>,
}

impl LatticeJson {
    pub fn of(l: &Lattice) -> LatticeJson {
        LatticeJson {
            name: l.name().map(str::to_owned),
            size: l.size(),
            covers: l.covers().into_iter().map(|(a, b)| [a, b]).collect(),
        }
    }

    pub fn build(&self) -> Result<Lattice> {
        let covers: Vec<(usize, usize)> = self.covers.iter().map(|&[a, b]| (a, b)).collect();
        let l = Lattice::from_covers(self.size, &covers).map_err(|e| schema("covers", e))?;
        Ok(match &self.name {
            Some(n) => l.with_name(n.clone()),
            None => l,
        })
    }
}

pub fn lattice_to_json(l: &Lattice) -> String {
    to_json(&LatticeJson::of(l))
}

pub fn lattice_from_json(s: &str) -> Result<Lattice> {
    from_json::<LatticeJson>(s)?.build()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SupMapJson {
    pub source: LatticeJson,
    pub target: LatticeJson,
    pub values: Vec<usize>,
}

pub fn supmap_to_json(f: &SupMap) -> String {
    to_json(&SupMapJson {
        source: LatticeJson::of(f.source()),
        target: LatticeJson::of(f.target()),
        values: f.values().to_vec(),
    })
}

pub fn supmap_from_json(s: &str) -> Result<SupMap> {
    let j: SupMapJson = from_json(s)?;
    let source = Arc::new(j.source.build().map_err(|e| nest("source", e))?);
    let target = Arc::new(j.target.build().map_err(|e| nest("target", e))?);
    SupMap::new(source, target, j.values).map_err(|e| schema("values", e))
}

fn nest(prefix: &str, e: Error) -> Error {
    match e {
        Error::Schema { path, message } => Error::Schema {
            path: format!("{prefix}.{path}"),
            message,
        },
        other => schema(prefix, other),
    }
}

/// Sorted pair list.
pub fn tensor_element_to_json(d: &TensorElement) -> String {
    let pairs: Vec<[usize; 2]> = d.pairs().into_iter().map(|(a, b)| [a, b]).collect();
    to_json(&pairs)
}

/// Rejects pairs out of range and sets that are not bi-ideals.
pub fn tensor_element_from_json(space: &BiIdealSpace, s: &str) -> Result<TensorElement> {
    let pairs: Vec<[usize; 2]> = from_json(s)?;
    let (n, m) = (space.left().size(), space.right().size());
    if let Some(i) = pairs.iter().position(|&[a, b]| a >= n || b >= m) {
        return Err(schema(&format!("[{i}]"), "pair out of range"));
    }
    let d = space.closure(pairs.iter().map(|&[a, b]| (a, b)));
    if d.len() != pairs.iter().collect::<std::collections::BTreeSet<_>>().len() {
        return Err(schema("", "pairs do not form a bi-ideal"));
    }
    Ok(d)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuantaleJson {
    pub lattice: LatticeJson,
    pub mult: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<usize>,
}

impl QuantaleJson {
    pub fn of(q: &Quantale) -> QuantaleJson {
        QuantaleJson {
            lattice: LatticeJson::of(q.carrier()),
            mult: q.mult_rows(),
            unit: q.unit(),
        }
    }

    pub fn build(&self) -> Result<Quantale> {
        let carrier = Arc::new(self.lattice.build().map_err(|e| nest("lattice", e))?);
        let q = make_quantale(carrier, &self.mult, true).map_err(|e| schema("mult", e))?;
        if self.unit.is_some() && self.unit != q.unit() {
            return Err(schema("unit", format!("{:?} is not the unit", self.unit)));
        }
        Ok(q)
    }
}

pub fn quantale_to_json(q: &Quantale) -> String {
    to_json(&QuantaleJson::of(q))
}

pub fn quantale_from_json(s: &str) -> Result<Quantale> {
    from_json::<QuantaleJson>(s)?.build()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessJson {
    pub l: Vec<usize>,
    pub r: Vec<usize>,
    pub origin: String,
}

impl WitnessJson {
    pub fn of(w: &FrobeniusWitness) -> WitnessJson {
        WitnessJson {
            l: w.l.clone(),
            r: w.r.clone(),
            origin: w.origin.to_string(),
        }
    }

    pub fn build(&self) -> Result<FrobeniusWitness> {
        Ok(FrobeniusWitness {
            l: self.l.clone(),
            r: self.r.clone(),
            origin: self.origin.parse().map_err(|e| schema("origin", e))?,
        })
    }
}

pub fn witness_to_json(w: &FrobeniusWitness) -> String {
    to_json(&WitnessJson::of(w))
}

pub fn witness_from_json(s: &str) -> Result<FrobeniusWitness> {
    from_json::<WitnessJson>(s)?.build()
}

pub fn report_to_json(r: &FrobeniusReport) -> String {
    to_json(r)
}

pub fn report_from_json(s: &str) -> Result<FrobeniusReport> {
    from_json(s)
}

/// Everything the tight construction produces for one lattice.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TightReportJson {
    pub lattice: LatticeJson,
    /// Tight maps as value vectors, in quantale index order.
    pub maps: Vec<Vec<usize>>,
    pub quantale: QuantaleJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub negation: Option<WitnessJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub report: Option<FrobeniusReport>,
}

impl TightReportJson {
    pub fn of(t: &TightQuantale) -> TightReportJson {
        TightReportJson {
            lattice: LatticeJson::of(t.base()),
            maps: t.maps().to_vec(),
            quantale: QuantaleJson::of(t.quantale()),
            negation: t.negation().map(WitnessJson::of),
            report: t.verify(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelationJson {
    pub size: usize,
    pub triples: Vec<[usize; 3]>,
}

impl RelationJson {
    pub fn of(r: &TernaryRel) -> RelationJson {
        RelationJson {
            size: r.size(),
            triples: r.triples().into_iter().map(|(x, y, z)| [x, y, z]).collect(),
        }
    }

    pub fn build(&self) -> Result<TernaryRel> {
        TernaryRel::new(self.size, self.triples.iter().map(|&[x, y, z]| (x, y, z)))
            .map_err(|e| schema("triples", e))
    }
}

pub fn relation_to_json(r: &TernaryRel) -> String {
    to_json(&RelationJson::of(r))
}

pub fn relation_from_json(s: &str) -> Result<TernaryRel> {
    from_json::<RelationJson>(s)?.build()
}
