//! JSON documents for categories and orbifold data.
//!
//! Documents reference objects and labels by name, so files stay
//! readable and independent of internal index order. Scalars use the
//! exact cyclotomic form. Export is deterministic: entries are sorted
//! by their index tuples, so export, import and re-export reproduce the
//! same bytes.

use crate::cyclotomic::Cyclo;
use crate::fusion::{CategoryInput, FusionCategoryData, FusionDataError};
use crate::orbifold::{DatumInput, OrbifoldDatum, OrbifoldError};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum JsonIoError {
    #[error("json: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("unknown object name {0:?}")]
    UnknownObject(String),
    #[error("unknown label name {0:?}")]
    UnknownLabel(String),
    #[error("lengths of objects, dual, twist and qdim must agree")]
    BadLength,
    #[error(transparent)]
    Fusion(#[from] FusionDataError),
    #[error(transparent)]
    Orbifold(#[from] OrbifoldError),
}

#[derive(Serialize, Deserialize, Clone)]
pub struct FEntryDoc {
    pub key: [String; 6],
    pub value: Cyclo,
}

#[derive(Serialize, Deserialize, Clone)]
pub struct REntryDoc {
    pub key: [String; 3],
    pub value: Cyclo,
}

#[derive(Serialize, Deserialize, Clone)]
pub struct CategoryDoc {
    pub objects: Vec<String>,
    pub unit: String,
    pub dual: Vec<String>,
    pub fusion: Vec<[String; 3]>,
    pub twist: Vec<Cyclo>,
    pub qdim: Vec<Cyclo>,
    pub f: Vec<FEntryDoc>,
    pub g: Vec<FEntryDoc>,
    pub r: Vec<REntryDoc>,
    pub rinv: Vec<REntryDoc>,
}

#[derive(Serialize, Deserialize, Clone)]
pub struct TEntryDoc {
    pub key: [String; 3],
    pub obj: String,
}

#[derive(Serialize, Deserialize, Clone)]
pub struct FgEntryDoc {
    /// Labels (a, b, c, d, p, q).
    pub key: [String; 6],
    /// Ambient object the entry is taken at.
    pub obj: String,
    pub value: Cyclo,
}

#[derive(Serialize, Deserialize, Clone)]
pub struct DatumDoc {
    pub labels: Vec<String>,
    pub iota: Option<String>,
    pub t: Vec<TEntryDoc>,
    pub f: Vec<FgEntryDoc>,
    pub g: Vec<FgEntryDoc>,
    pub psi2: Vec<Cyclo>,
    pub phi2: Cyclo,
}

pub fn category_to_doc(cat: &FusionCategoryData) -> CategoryDoc {
    let name = |i: usize| cat.name(i).to_string();
    let mut fusion = Vec::new();
    for i in cat.objects() {
        for j in cat.objects() {
            for k in cat.objects() {
                if cat.n(i, j, k) != 0 {
                    fusion.push([name(i), name(j), name(k)]);
                }
            }
        }
    }
    let f_doc = |entries: Vec<(&(usize, usize, usize, usize, usize, usize), &Cyclo)>| {
        let mut sorted = entries;
        sorted.sort_by_key(|(k, _)| **k);
        sorted
            .into_iter()
            .map(|(&(i, j, k, l, a, b), v)| FEntryDoc {
                key: [name(i), name(j), name(k), name(l), name(a), name(b)],
                value: v.clone(),
            })
            .collect::<Vec<_>>()
    };
    let r_doc = |entries: Vec<(&(usize, usize, usize), &Cyclo)>| {
        let mut sorted = entries;
        sorted.sort_by_key(|(k, _)| **k);
        sorted
            .into_iter()
            .map(|(&(i, j, k), v)| REntryDoc { key: [name(i), name(j), name(k)], value: v.clone() })
            .collect::<Vec<_>>()
    };
    CategoryDoc {
        objects: cat.objects().map(name).collect(),
        unit: name(cat.unit()),
        dual: cat.objects().map(|i| name(cat.dual(i))).collect(),
        fusion,
        twist: cat.objects().map(|i| cat.twist(i).clone()).collect(),
        qdim: cat.objects().map(|i| cat.qdim(i).clone()).collect(),
        f: f_doc(cat.f_entries().collect()),
        g: f_doc(cat.g_entries().collect()),
        r: r_doc(cat.r_entries().collect()),
        rinv: r_doc(cat.rinv_entries().collect()),
    }
}

pub fn category_from_doc(doc: &CategoryDoc) -> Result<FusionCategoryData, JsonIoError> {
    let n = doc.objects.len();
    if doc.dual.len() != n || doc.twist.len() != n || doc.qdim.len() != n {
        return Err(JsonIoError::BadLength);
    }
    let resolve = |s: &String| {
        doc.objects
            .iter()
            .position(|o| o == s)
            .ok_or_else(|| JsonIoError::UnknownObject(s.clone()))
    };
    let mut fusion = Vec::new();
    for [i, j, k] in &doc.fusion {
        fusion.push((resolve(i)?, resolve(j)?, resolve(k)?));
    }
    let f_entries = |docs: &[FEntryDoc]| -> Result<Vec<_>, JsonIoError> {
        docs.iter()
            .map(|e| {
                let [i, j, k, l, a, b] = &e.key;
                Ok((
                    (resolve(i)?, resolve(j)?, resolve(k)?, resolve(l)?, resolve(a)?, resolve(b)?),
                    e.value.clone(),
                ))
            })
            .collect()
    };
    let r_entries = |docs: &[REntryDoc]| -> Result<Vec<_>, JsonIoError> {
        docs.iter()
            .map(|e| {
                let [i, j, k] = &e.key;
                Ok(((resolve(i)?, resolve(j)?, resolve(k)?), e.value.clone()))
            })
            .collect()
    };
    let input = CategoryInput {
        names: doc.objects.clone(),
        unit: resolve(&doc.unit)?,
        dual: doc.dual.iter().map(resolve).collect::<Result<_, _>>()?,
        fusion,
        f: f_entries(&doc.f)?,
        g: f_entries(&doc.g)?,
        r: r_entries(&doc.r)?,
        rinv: r_entries(&doc.rinv)?,
        twist: doc.twist.clone(),
        qdim: doc.qdim.clone(),
    };
    Ok(FusionCategoryData::new(input)?)
}

pub fn datum_to_doc(datum: &OrbifoldDatum, cat: &FusionCategoryData) -> DatumDoc {
    let oname = |i: usize| cat.name(i).to_string();
    let lname = |a: usize| datum.labels()[a].clone();
    let mut t_entries = datum.t_entries();
    t_entries.sort_by_key(|(k, _)| *k);
    let fg_doc = |entries: Vec<(&(usize, usize, usize, usize, usize, usize, usize), &Cyclo)>| {
        let mut sorted = entries;
        sorted.sort_by_key(|(k, _)| **k);
        sorted
            .into_iter()
            .map(|(&(a, b, c, d, p, q, i), v)| FgEntryDoc {
                key: [lname(a), lname(b), lname(c), lname(d), lname(p), lname(q)],
                obj: oname(i),
                value: v.clone(),
            })
            .collect::<Vec<_>>()
    };
    DatumDoc {
        labels: datum.labels().to_vec(),
        iota: datum.iota().map(lname),
        t: t_entries
            .into_iter()
            .map(|((a, b, c), obj)| TEntryDoc { key: [lname(a), lname(b), lname(c)], obj: oname(obj) })
            .collect(),
        f: fg_doc(datum.f_entries().collect()),
        g: fg_doc(datum.g_entries().collect()),
        psi2: (0..datum.label_count()).map(|b| datum.psi2(b).clone()).collect(),
        phi2: datum.phi2().clone(),
    }
}

pub fn datum_from_doc(doc: &DatumDoc, cat: &FusionCategoryData) -> Result<OrbifoldDatum, JsonIoError> {
    let label = |s: &String| {
        doc.labels
            .iter()
            .position(|l| l == s)
            .ok_or_else(|| JsonIoError::UnknownLabel(s.clone()))
    };
    let object =
        |s: &String| cat.object_by_name(s).ok_or_else(|| JsonIoError::UnknownObject(s.clone()));
    let mut t = Vec::new();
    for e in &doc.t {
        let [a, b, c] = &e.key;
        t.push(((label(a)?, label(b)?, label(c)?), object(&e.obj)?));
    }
    let fg = |docs: &[FgEntryDoc]| -> Result<Vec<_>, JsonIoError> {
        docs.iter()
            .map(|e| {
                let [a, b, c, d, p, q] = &e.key;
                Ok((
                    (label(a)?, label(b)?, label(c)?, label(d)?, label(p)?, label(q)?, object(&e.obj)?),
                    e.value.clone(),
                ))
            })
            .collect()
    };
    let input = DatumInput {
        labels: doc.labels.clone(),
        iota: doc.iota.as_ref().map(label).transpose()?,
        t,
        f: fg(&doc.f)?,
        g: fg(&doc.g)?,
        psi2: doc.psi2.clone(),
        phi2: doc.phi2.clone(),
    };
    Ok(OrbifoldDatum::new(input, cat)?)
}

pub fn category_to_json(cat: &FusionCategoryData) -> String {
    serde_json::to_string_pretty(&category_to_doc(cat)).expect("category serialization")
}

pub fn category_from_json(s: &str) -> Result<FusionCategoryData, JsonIoError> {
    let doc: CategoryDoc = serde_json::from_str(s)?;
    category_from_doc(&doc)
}

pub fn datum_to_json(datum: &OrbifoldDatum, cat: &FusionCategoryData) -> String {
    serde_json::to_string_pretty(&datum_to_doc(datum, cat)).expect("datum serialization")
}

pub fn datum_from_json(s: &str, cat: &FusionCategoryData) -> Result<OrbifoldDatum, JsonIoError> {
    let doc: DatumDoc = serde_json::from_str(s)?;
    datum_from_doc(&doc, cat)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fib::build_fib;
    use crate::ising::build_ising;
    use crate::orbifold::Condition;

    #[test]
    fn category_round_trip_is_byte_exact() {
        let cat = build_ising(3, -1).unwrap();
        let json = category_to_json(&cat);
        let back = category_from_json(&json).unwrap();
        assert_eq!(category_to_json(&back), json);
        assert!(back.check_fg_inverse().passed());
        assert_eq!(back.global_dimension(), Cyclo::from_int(4));
    }

    #[test]
    fn datum_round_trip_is_byte_exact() {
        let r = build_fib(1, 1).unwrap();
        let json = datum_to_json(&r.datum, &r.cat);
        let back = datum_from_json(&json, &r.cat).unwrap();
        assert_eq!(datum_to_json(&back, &r.cat), json);
        assert!(back.check_condition(&r.cat, Condition::O8).passed());
    }

    #[test]
    fn unknown_names_are_rejected() {
        let cat = build_ising(0, 1).unwrap();
        let r = build_fib(1, 1).unwrap();
        let json = datum_to_json(&r.datum, &r.cat).replace("\"sigma\"", "\"tau\"");
        match datum_from_json(&json, &cat) {
            Err(JsonIoError::UnknownObject(s)) => assert_eq!(s, "tau"),
            other => panic!("expected unknown object, got {:?}", other.map(|_| ())),
        }
    }
}
