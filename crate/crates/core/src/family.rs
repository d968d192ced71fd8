//! Truncated adversary function families and their canonical enumeration.
//!
//! A function with `r` columns is an `r`-tuple of elements; its index is the
//! base-`n` number with column 1 as the most significant digit, so index order
//! is lexicographic order. A canonical family is a strictly increasing list of
//! function indices. Families are enumerated in lexicographic order with a
//! prefix sorting before its extensions.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::{Elem, Semigroup};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FunctionFamily {
    #[serde(skip)]
    owner: u64,
    order: usize,
    r: usize,
    /// `values[i][t - 1]` is `f_i(t)`.
    values: Vec<Vec<Elem>>,
}

impl FunctionFamily {
    pub fn new(s: &Semigroup, values: Vec<Vec<Elem>>) -> Result<FunctionFamily> {
        let r = values.first().map(Vec::len).unwrap_or(0);
        if values.is_empty() || r == 0 {
            return Err(Error::InvalidParameters("a family needs k >= 1 functions and r >= 1 columns".into()));
        }
        if values.iter().any(|f| f.len() != r) {
            return Err(Error::InvalidParameters("all functions need the same column count".into()));
        }
        for &v in values.iter().flatten() {
            s.check_elem(v)?;
        }
        Ok(FunctionFamily { owner: s.fingerprint(), order: s.order(), r, values })
    }

    /// The family made of the given function indices.
    pub fn from_indices(s: &Semigroup, r: usize, indices: &[u64]) -> Result<FunctionFamily> {
        let values = indices.iter().map(|&i| decode_function(i, s.order(), r)).collect();
        FunctionFamily::new(s, values)
    }

    pub fn k(&self) -> usize {
        self.values.len()
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn values(&self) -> &[Vec<Elem>] {
        &self.values
    }

    pub fn function(&self, i: usize) -> &[Elem] {
        &self.values[i]
    }

    /// `f_i(t)` with `t` counted from 1.
    pub fn at(&self, i: usize, t: usize) -> Elem {
        self.values[i][t - 1]
    }

    pub fn check_bound(&self, s: &Semigroup) -> Result<()> {
        if self.owner == s.fingerprint() && self.order == s.order() {
            Ok(())
        } else {
            Err(Error::SemigroupMismatch)
        }
    }

    /// Keeps only the first `r` columns.
    pub fn truncate(&self, r: usize) -> FunctionFamily {
        let mut f = self.clone();
        f.r = r.min(self.r);
        for v in &mut f.values {
            v.truncate(r);
        }
        f
    }

    /// Sorted, deduplicated copy.
    pub fn canonical(&self) -> FunctionFamily {
        let mut f = self.clone();
        f.values.sort();
        f.values.dedup();
        f
    }

    /// Parses the family file format: `k r`, then `k` lines of `r` labels.
    pub fn parse(s: &Semigroup, text: &str) -> Result<FunctionFamily> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| Error::Parse("empty family file".into()))?;
        let dims: Vec<usize> = header
            .split_whitespace()
            .map(|x| x.parse().map_err(|_| Error::Parse(format!("bad header `{header}`"))))
            .collect::<Result<_>>()?;
        let [k, r] = dims[..] else {
            return Err(Error::Parse(format!("header must be `k r`, got `{header}`")));
        };
        let mut values = Vec::with_capacity(k);
        for i in 0..k {
            let line = lines.next().ok_or_else(|| Error::Parse(format!("missing function {}", i + 1)))?;
            let row = line.split_whitespace().map(|l| s.index_of(l)).collect::<Result<Vec<_>>>()?;
            if row.len() != r {
                return Err(Error::Parse(format!("function {} has {} values, expected {r}", i + 1, row.len())));
            }
            values.push(row);
        }
        if lines.next().is_some() {
            return Err(Error::Parse("trailing lines in family file".into()));
        }
        FunctionFamily::new(s, values)
    }

    pub fn to_text(&self, s: &Semigroup) -> String {
        let mut out = format!("{} {}\n", self.k(), self.r);
        for f in &self.values {
            let row: Vec<&str> = f.iter().map(|&e| s.label(e)).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Number of functions with `r` columns, `n^r`, if it fits in a `u64`.
pub fn function_count(n: usize, r: usize) -> Option<u64> {
    (n as u64).checked_pow(r as u32)
}

pub fn decode_function(mut index: u64, n: usize, r: usize) -> Vec<Elem> {
    let mut out = vec![0; r];
    for slot in out.iter_mut().rev() {
        *slot = (index % n as u64) as usize;
        index /= n as u64;
    }
    out
}

pub fn encode_function(values: &[Elem], n: usize) -> u64 {
    values.iter().fold(0, |acc, &v| acc * n as u64 + v as u64)
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul(n - i) / (i + 1);
    }
    acc
}

/// Number of canonical families of 1..=k distinct functions out of `funcs`.
pub fn canonical_family_count(funcs: u128, k: usize) -> u128 {
    (1..=k as u128).map(|j| binomial(funcs, j)).fold(0u128, |a, b| a.saturating_add(b))
}

/// Canonical index families in enumeration order.
pub struct FamilyIter {
    funcs: u64,
    k: usize,
    stack: Vec<u64>,
    started: bool,
}

impl FamilyIter {
    pub fn new(funcs: u64, k: usize) -> FamilyIter {
        FamilyIter { funcs, k, stack: Vec::with_capacity(k), started: false }
    }

    fn advance(&mut self) -> Option<&[u64]> {
        if !self.started {
            self.started = true;
            if self.funcs == 0 || self.k == 0 {
                return None;
            }
            self.stack.push(0);
            return Some(&self.stack);
        }
        let last = *self.stack.last()?;
        if self.stack.len() < self.k && last + 1 < self.funcs {
            self.stack.push(last + 1);
            return Some(&self.stack);
        }
        loop {
            let top = self.stack.pop()?;
            if top + 1 < self.funcs {
                self.stack.push(top + 1);
                return Some(&self.stack);
            }
        }
    }
}

impl Iterator for FamilyIter {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        self.advance().map(<[u64]>::to_vec)
    }
}

/// Every canonical family of at most `k` functions with `r` columns, in order.
pub fn enumerate_families(s: &Semigroup, k: usize, r: usize) -> Result<impl Iterator<Item = FunctionFamily> + '_> {
    if k == 0 || r == 0 {
        return Err(Error::InvalidParameters("k and r must be positive".into()));
    }
    let funcs = function_count(s.order(), r)
        .ok_or_else(|| Error::InvalidParameters(format!("{}^{r} functions overflow", s.order())))?;
    Ok(FamilyIter::new(funcs, k)
        .map(move |idx| FunctionFamily::from_indices(s, r, &idx).expect("indices in range")))
}
