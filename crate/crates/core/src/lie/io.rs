//! TOML documents for algebras and representations.
//!
//! ```toml
//! name = "su(2)"
//! dim = 3
//! f = [[1, 2, 3, "1/1"], [2, 1, 3, "-1/1"]]   # a, b, c, f^{ab}_c
//! kappa = [[1, 1, "1/1"]]                       # a, b, κ^{ab}
//! ```
//!
//! A representation has `name`, `dim`, `alpha = [[a, i, j, re, im?], ...]`
//! and `mu = [[i, j, re, im?], ...]`. Indices are 1-based, absent entries
//! are zero, and values are exact rationals written as strings.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::validate::StructuralError;
use super::{ActionTensor, LieAlgebraData, RepresentationData, StructureConstants};
use crate::scalar::{fmt_q, gq, parse_q, zeros, Gq, Mat, Q};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum FormatError {
    #[error("TOML: {0}")]
    Toml(String),
    #[error("{field} entry {entry}: {message}")]
    Entry { field: &'static str, entry: usize, message: String },
    #[error(transparent)]
    Structural(#[from] StructuralError),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraDoc {
    name: String,
    dim: usize,
    f: Vec<(usize, usize, usize, String)>,
    kappa: Vec<(usize, usize, String)>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Entry3 {
    Complex(usize, usize, usize, String, String),
    Real(usize, usize, usize, String),
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Entry2 {
    Complex(usize, usize, String, String),
    Real(usize, usize, String),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RepDoc {
    name: String,
    dim: usize,
    alpha: Vec<Entry3>,
    mu: Vec<Entry2>,
}

struct Reader {
    field: &'static str,
    entry: usize,
}

impl Reader {
    fn err(&self, message: impl Into<String>) -> FormatError {
        FormatError::Entry { field: self.field, entry: self.entry + 1, message: message.into() }
    }

    fn index(&self, i: usize, dim: usize) -> Result<usize, FormatError> {
        if (1..=dim).contains(&i) {
            Ok(i - 1)
        } else {
            Err(self.err(format!("index {i} outside 1..={dim}")))
        }
    }

    fn value(&self, s: &str) -> Result<Q, FormatError> {
        parse_q(s).map_err(|e| self.err(e))
    }

    fn insert<K: Ord + Copy, V>(&self, map: &mut BTreeMap<K, V>, k: K, v: V) -> Result<(), FormatError> {
        if map.insert(k, v).is_some() {
            return Err(self.err("duplicate entry"));
        }
        Ok(())
    }
}

fn dense<T: crate::scalar::Field>(map: BTreeMap<(usize, usize), T>, n: usize) -> Mat<T> {
    let mut m = zeros(n, n);
    for ((i, j), v) in map {
        m[i][j] = v;
    }
    m
}

fn toml_err(e: impl std::fmt::Display) -> FormatError {
    FormatError::Toml(e.to_string())
}

pub fn parse_algebra(text: &str) -> Result<LieAlgebraData, FormatError> {
    let doc: AlgebraDoc = toml::from_str(text).map_err(toml_err)?;
    let n = doc.dim;
    let mut f = StructureConstants::new();
    for (entry, (a, b, c, v)) in doc.f.iter().enumerate() {
        let r = Reader { field: "f", entry };
        let key = (r.index(*a, n)?, r.index(*b, n)?, r.index(*c, n)?);
        r.insert(&mut f, key, r.value(v)?)?;
    }
    let mut kappa = BTreeMap::new();
    for (entry, (a, b, v)) in doc.kappa.iter().enumerate() {
        let r = Reader { field: "kappa", entry };
        let key = (r.index(*a, n)?, r.index(*b, n)?);
        r.insert(&mut kappa, key, r.value(v)?)?;
    }
    Ok(LieAlgebraData::new(doc.name, n, f, dense(kappa, n))?)
}

pub fn parse_representation(text: &str) -> Result<RepresentationData, FormatError> {
    let doc: RepDoc = toml::from_str(text).map_err(toml_err)?;
    let n = doc.dim;
    let mut alpha = ActionTensor::new();
    for (entry, e) in doc.alpha.iter().enumerate() {
        let r = Reader { field: "alpha", entry };
        let (a, i, j, re, im) = match e {
            Entry3::Complex(a, i, j, re, im) => (a, i, j, re, Some(im)),
            Entry3::Real(a, i, j, re) => (a, i, j, re, None),
        };
        if *a == 0 {
            return Err(r.err("generator index 0; indices are 1-based"));
        }
        let im = im.map_or(Ok(Q::zero()), |s| r.value(s))?;
        let key = (a - 1, r.index(*i, n)?, r.index(*j, n)?);
        r.insert(&mut alpha, key, gq(r.value(re)?, im))?;
    }
    let mut mu = BTreeMap::new();
    for (entry, e) in doc.mu.iter().enumerate() {
        let r = Reader { field: "mu", entry };
        let (i, j, re, im) = match e {
            Entry2::Complex(i, j, re, im) => (i, j, re, Some(im)),
            Entry2::Real(i, j, re) => (i, j, re, None),
        };
        let im = im.map_or(Ok(Q::zero()), |s| r.value(s))?;
        let key = (r.index(*i, n)?, r.index(*j, n)?);
        r.insert(&mut mu, key, gq(r.value(re)?, im))?;
    }
    Ok(RepresentationData::new(doc.name, n, alpha, dense(mu, n))?)
}

pub fn algebra_to_toml(l: &LieAlgebraData) -> String {
    let mut kappa = Vec::new();
    for (a, row) in l.kappa.iter().enumerate() {
        for (b, v) in row.iter().enumerate() {
            if !v.is_zero() {
                kappa.push((a + 1, b + 1, fmt_q(v)));
            }
        }
    }
    let doc = AlgebraDoc {
        name: l.name.clone(),
        dim: l.dim,
        f: l.f.iter().map(|(&(a, b, c), v)| (a + 1, b + 1, c + 1, fmt_q(v))).collect(),
        kappa,
    };
    toml::to_string(&doc).expect("plain data serializes")
}

fn entry_values(v: &Gq) -> (String, Option<String>) {
    let im = (!v.im.is_zero()).then(|| fmt_q(&v.im));
    (fmt_q(&v.re), im)
}

pub fn representation_to_toml(r: &RepresentationData) -> String {
    let alpha = r
        .alpha
        .iter()
        .map(|(&(a, i, j), v)| match entry_values(v) {
            (re, Some(im)) => Entry3::Complex(a + 1, i + 1, j + 1, re, im),
            (re, None) => Entry3::Real(a + 1, i + 1, j + 1, re),
        })
        .collect();
    let mut mu = Vec::new();
    for (i, row) in r.mu.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            if !v.is_zero() {
                mu.push(match entry_values(v) {
                    (re, Some(im)) => Entry2::Complex(i + 1, j + 1, re, im),
                    (re, None) => Entry2::Real(i + 1, j + 1, re),
                });
            }
        }
    }
    let doc = RepDoc { name: r.name.clone(), dim: r.dim_v, alpha, mu };
    toml::to_string(&doc).expect("plain data serializes")
}
