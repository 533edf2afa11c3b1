use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::Zero;

use super::fiber::{koszul_sign, BasisElement};
use crate::scalar::{fmt_gq, gr, qi, Gq, Q};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TensorError {
    #[error("expected {expected} slots, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("tensor has total degree {expected}, arguments have degree {got}")]
    Grading { expected: i32, got: i32 },
}

/// Sparse multilinear form over the fiber, homogeneous in total degree.
#[derive(Debug, Clone, PartialEq)]
pub struct CombinatorialTensor {
    arity: usize,
    degree: Option<i32>,
    entries: BTreeMap<Vec<BasisElement>, Gq>,
}

fn total_degree(key: &[BasisElement]) -> i32 {
    key.iter().map(|e| e.degree()).sum()
}

/// Koszul sign of sorting `key` back from the permutation `perm` of it.
fn permutation_sign(key: &[BasisElement], perm: &[usize]) -> i32 {
    let mut order: Vec<usize> = perm.to_vec();
    let mut sign = 1;
    for i in 0..order.len() {
        for j in 0..order.len() - 1 - i {
            if order[j] > order[j + 1] {
                sign *= koszul_sign(key[order[j]], key[order[j + 1]]);
                order.swap(j, j + 1);
            }
        }
    }
    sign
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

impl CombinatorialTensor {
    pub fn new(arity: usize) -> Self {
        Self { arity, degree: None, entries: BTreeMap::new() }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Total cohomological degree of every entry, `None` while empty.
    pub fn degree(&self) -> Option<i32> {
        self.degree
    }

    fn check(&self, key: &[BasisElement]) -> Result<(), TensorError> {
        if key.len() != self.arity {
            return Err(TensorError::Arity { expected: self.arity, got: key.len() });
        }
        if let Some(d) = self.degree {
            let got = total_degree(key);
            if got != d {
                return Err(TensorError::Grading { expected: d, got });
            }
        }
        Ok(())
    }

    /// Adds `value` to the entry at `key`.
    pub fn add(&mut self, key: Vec<BasisElement>, value: Gq) -> Result<(), TensorError> {
        self.check(&key)?;
        if value.is_zero() {
            return Ok(());
        }
        self.degree.get_or_insert(total_degree(&key));
        let e = self.entries.entry(key.clone()).or_insert_with(Gq::zero);
        *e += value;
        if e.is_zero() {
            self.entries.remove(&key);
        }
        Ok(())
    }

    pub fn add_real(&mut self, key: Vec<BasisElement>, value: Q) -> Result<(), TensorError> {
        self.add(key, gr(value))
    }

    /// Entry lookup; absent keys are zero.
    pub fn get(&self, key: &[BasisElement]) -> Gq {
        self.entries.get(key).cloned().unwrap_or_else(Gq::zero)
    }

    /// Lookup that rejects arguments of the wrong arity or total degree.
    pub fn evaluate(&self, args: &[BasisElement]) -> Result<Gq, TensorError> {
        self.check(args)?;
        Ok(self.get(args))
    }

    pub fn entries(&self) -> impl Iterator<Item = (&[BasisElement], &Gq)> {
        self.entries.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Exchanges slots `slot` and `slot + 1` with the Koszul sign.
    pub fn koszul_swap(&self, slot: usize) -> Self {
        assert!(slot + 1 < self.arity, "no slot after {slot}");
        let mut out = Self { arity: self.arity, degree: self.degree, entries: BTreeMap::new() };
        for (k, v) in &self.entries {
            let mut key = k.clone();
            key.swap(slot, slot + 1);
            let s = koszul_sign(k[slot], k[slot + 1]);
            out.entries.insert(key, v.clone() * gr(qi(s as i64)));
        }
        out
    }

    /// The tensor whose entries at every reordering of each key of `self`
    /// agree with `self` up to the Koszul sign. Keys of `self` must lie in
    /// distinct orbits.
    pub fn graded_orbits(&self) -> Self {
        let mut out = Self::new(self.arity);
        let perms = permutations(self.arity);
        for (k, v) in &self.entries {
            for p in &perms {
                let key: Vec<BasisElement> = p.iter().map(|&i| k[i]).collect();
                let s = permutation_sign(k, p);
                out.add(key, v.clone() * gr(qi(s as i64))).expect("same arity and degree");
            }
        }
        out
    }

    pub fn filter(&self, keep: impl Fn(&[BasisElement]) -> bool) -> Self {
        let mut out = Self::new(self.arity);
        out.degree = self.degree;
        for (k, v) in &self.entries {
            if keep(k) {
                out.entries.insert(k.clone(), v.clone());
            }
        }
        out
    }

    pub fn scaled(&self, s: &Gq) -> Self {
        let mut out = Self::new(self.arity);
        for (k, v) in &self.entries {
            out.add(k.clone(), v.clone() * s.clone()).expect("same shape");
        }
        out
    }

    pub fn plus(&self, other: &Self) -> Result<Self, TensorError> {
        let mut out = self.clone();
        for (k, v) in &other.entries {
            out.add(k.clone(), v.clone())?;
        }
        Ok(out)
    }

    /// One `key = value` line per entry in key order, e.g. `dx1 *dx1 = 1/1`.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        for (k, v) in &self.entries {
            let names: Vec<String> = k.iter().map(ToString::to_string).collect();
            let _ = writeln!(s, "{} = {}", names.join(" "), fmt_gq(v));
        }
        s
    }
}
