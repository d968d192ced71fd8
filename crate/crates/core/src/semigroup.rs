//! Finite semigroups given by Cayley tables.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashSet;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::par;
use crate::subset::SubsetMask;

/// Index of an element in its semigroup's enumeration order.
pub type Elem = usize;

/// Default cap on semigroup order.
pub const DEFAULT_ORDER_CAP: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn as_str(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
        }
    }
}

impl std::str::FromStr for Side {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "left" => Ok(Side::Left),
            "right" => Ok(Side::Right),
            _ => Err(Error::Parse(format!("side must be left or right, got `{s}`"))),
        }
    }
}

/// A finite semigroup stored as a full multiplication table.
///
/// `table[i * order + j]` is the index of `e_i * e_j`; the row is the left operand.
#[derive(Debug, Clone)]
pub struct Semigroup {
    order: usize,
    table: Vec<u32>,
    labels: Vec<String>,
    commutative: bool,
    identity: Option<Elem>,
    fingerprint: u64,
}

impl PartialEq for Semigroup {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.table == other.table && self.labels == other.labels
    }
}

impl Eq for Semigroup {}

impl Semigroup {
    /// Validates and builds a semigroup from labels and a row-major table of indices.
    pub fn from_cayley(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Semigroup> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::BadTable("order must be positive".into()));
        }
        if table.len() != n || table.iter().any(|row| row.len() != n) {
            return Err(Error::BadTable(format!("expected a {n}x{n} table")));
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if l.is_empty() || l.chars().any(char::is_whitespace) {
                return Err(Error::BadTable(format!("invalid label `{l}`")));
            }
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let mut flat = Vec::with_capacity(n * n);
        for row in &table {
            for &v in row {
                if v >= n {
                    return Err(Error::BadIndex { index: v, order: n });
                }
                flat.push(v as u32);
            }
        }
        let sg = Semigroup::from_parts_unchecked(labels, flat);
        sg.check_associative()?;
        Ok(sg)
    }

    /// Builds without the associativity check. Callers guarantee a valid table.
    pub(crate) fn from_parts_unchecked(labels: Vec<String>, table: Vec<u32>) -> Semigroup {
        let n = labels.len();
        debug_assert_eq!(table.len(), n * n);
        let commutative = (0..n).all(|i| (i + 1..n).all(|j| table[i * n + j] == table[j * n + i]));
        let identity = (0..n).find(|&e| {
            (0..n).all(|x| table[e * n + x] as usize == x && table[x * n + e] as usize == x)
        });
        let mut h = DefaultHasher::new();
        n.hash(&mut h);
        table.hash(&mut h);
        Semigroup { order: n, table, labels, commutative, identity, fingerprint: h.finish() }
    }

    /// Exhaustive triple check; reports the least violating triple.
    pub fn check_associative(&self) -> Result<()> {
        let n = self.order;
        let violations = par::map_range(n, |i| {
            for j in 0..n {
                let ij = self.mul(i, j);
                for k in 0..n {
                    if self.mul(ij, k) != self.mul(i, self.mul(j, k)) {
                        return Some((i, j, k));
                    }
                }
            }
            None
        });
        match violations.into_iter().flatten().next() {
            Some((i, j, k)) => Err(Error::NonAssociative(i, j, k)),
            None => Ok(()),
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.table[a * self.order + b] as usize
    }

    /// Product of a non-empty sequence, left to right.
    pub fn product(&self, items: &[Elem]) -> Elem {
        let (first, rest) = items.split_first().expect("empty product");
        rest.iter().fold(*first, |acc, &x| self.mul(acc, x))
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, e: Elem) -> &str {
        &self.labels[e]
    }

    pub fn index_of(&self, label: &str) -> Result<Elem> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    pub fn identity(&self) -> Option<Elem> {
        self.identity
    }

    pub(crate) fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.order
    }

    /// Row `a` of the table: `a * x` for every `x`.
    pub fn row(&self, a: Elem) -> impl Iterator<Item = Elem> + '_ {
        self.table[a * self.order..(a + 1) * self.order].iter().map(|&v| v as usize)
    }

    pub fn table_rows(&self) -> Vec<Vec<Elem>> {
        (0..self.order).map(|i| self.row(i).collect()).collect()
    }

    pub(crate) fn check_elem(&self, e: Elem) -> Result<()> {
        if e < self.order {
            Ok(())
        } else {
            Err(Error::BadIndex { index: e, order: self.order })
        }
    }

    /// `x^j` with `j >= 1` factors.
    pub fn power(&self, x: Elem, j: usize) -> Result<Elem> {
        self.check_elem(x)?;
        if j == 0 {
            return Err(Error::InvalidParameters("power exponent must be at least 1".into()));
        }
        Ok((1..j).fold(x, |acc, _| self.mul(acc, x)))
    }

    /// `j` copies of `x` combined; `j = 0` has no meaning in a semigroup.
    pub(crate) fn pow_unchecked(&self, x: Elem, j: usize) -> Elem {
        (1..j).fold(x, |acc, _| self.mul(acc, x))
    }

    pub fn translate(&self, set: &SubsetMask, x: Elem, side: Side) -> Result<SubsetMask> {
        self.check_elem(x)?;
        set.check_bound(self)?;
        let mut out = SubsetMask::empty(self);
        for a in set.iter() {
            out.insert(match side {
                Side::Left => self.mul(x, a),
                Side::Right => self.mul(a, x),
            });
        }
        Ok(out)
    }

    /// Left: `x^{-1}A = {y : x*y in A}`. Right: `{y : y*x in A}`.
    pub fn quotient(&self, set: &SubsetMask, x: Elem, side: Side) -> Result<SubsetMask> {
        self.check_elem(x)?;
        set.check_bound(self)?;
        let mut out = SubsetMask::empty(self);
        for y in self.elements() {
            let p = match side {
                Side::Left => self.mul(x, y),
                Side::Right => self.mul(y, x),
            };
            if set.contains(p) {
                out.insert(y);
            }
        }
        Ok(out)
    }

    /// Coordinatewise product. Element `(i_1, .., i_m)` gets index
    /// `i_1 * |S_2|...|S_m| + ... + i_m`, so the first factor is most significant.
    pub fn direct_product(factors: &[&Semigroup], cap: usize) -> Result<Semigroup> {
        if factors.len() < 2 {
            return Err(Error::InvalidParameters("direct product needs at least two factors".into()));
        }
        let order = factors.iter().try_fold(1usize, |acc, f| acc.checked_mul(f.order));
        let order = match order {
            Some(o) if o <= cap => o,
            Some(o) => return Err(Error::Oversize { order: o, cap }),
            None => return Err(Error::Oversize { order: usize::MAX, cap }),
        };
        let coords: Vec<Vec<Elem>> = (0..order).map(|idx| decompose(idx, factors)).collect();
        let labels = coords
            .iter()
            .map(|c| {
                let parts: Vec<&str> = c.iter().zip(factors).map(|(&e, f)| f.label(e)).collect();
                format!("({})", parts.join(","))
            })
            .collect();
        let mut table = Vec::with_capacity(order * order);
        for a in &coords {
            for b in &coords {
                let mut idx = 0;
                for ((&x, &y), f) in a.iter().zip(b).zip(factors) {
                    idx = idx * f.order + f.mul(x, y);
                }
                table.push(idx as u32);
            }
        }
        Ok(Semigroup::from_parts_unchecked(labels, table))
    }
}

/// Splits a product index into factor coordinates.
pub fn decompose(mut idx: usize, factors: &[&Semigroup]) -> Vec<Elem> {
    let mut out = vec![0; factors.len()];
    for (slot, f) in out.iter_mut().zip(factors).rev() {
        *slot = idx % f.order;
        idx /= f.order;
    }
    out
}

/// Inverse of [`decompose`].
pub fn compose(coords: &[Elem], factors: &[&Semigroup]) -> Elem {
    coords.iter().zip(factors).fold(0, |acc, (&c, f)| acc * f.order + c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(n: usize) -> Vec<String> {
        (0..n).map(|i| i.to_string()).collect()
    }

    #[test]
    fn z2_is_commutative_with_identity() {
        let s = Semigroup::from_cayley(labels(2), vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert!(s.is_commutative());
        assert_eq!(s.identity(), Some(0));
    }

    #[test]
    fn left_zero_two() {
        let s = Semigroup::from_cayley(labels(2), vec![vec![0, 0], vec![1, 1]]).unwrap();
        assert!(!s.is_commutative());
        assert_eq!(s.identity(), None);
        assert_eq!(s.mul(0, 1), 0);
        assert_eq!(s.mul(1, 0), 1);
    }

    #[test]
    fn rejects_non_associative() {
        // 0*0 = 1 and 1*1 = 2 give (0*0)*1 = 2 while 0*(0*1) = 0*0 = 1.
        let t = vec![vec![1, 0, 0], vec![0, 2, 0], vec![0, 0, 0]];
        let err = Semigroup::from_cayley(labels(3), t).unwrap_err();
        assert!(matches!(err, Error::NonAssociative(..)));
    }

    #[test]
    fn rejects_bad_input() {
        let e = Semigroup::from_cayley(labels(2), vec![vec![0, 2], vec![1, 0]]).unwrap_err();
        assert_eq!(e, Error::BadIndex { index: 2, order: 2 });
        let e = Semigroup::from_cayley(vec!["a".into(), "a".into()], vec![vec![0, 0], vec![0, 0]])
            .unwrap_err();
        assert_eq!(e, Error::DuplicateLabel("a".into()));
        let e = Semigroup::from_cayley(labels(2), vec![vec![0, 0]]).unwrap_err();
        assert!(matches!(e, Error::BadTable(_)));
    }

    #[test]
    fn product_coordinates() {
        let z2 = Semigroup::from_cayley(labels(2), vec![vec![0, 1], vec![1, 0]]).unwrap();
        let p = Semigroup::direct_product(&[&z2, &z2], 4096).unwrap();
        assert_eq!(p.order(), 4);
        let a = p.index_of("(1,0)").unwrap();
        let b = p.index_of("(0,1)").unwrap();
        assert_eq!(p.label(p.mul(a, b)), "(1,1)");
        assert_eq!(decompose(compose(&[1, 0], &[&z2, &z2]), &[&z2, &z2]), vec![1, 0]);
        let err = Semigroup::direct_product(&[&z2, &z2, &z2], 7).unwrap_err();
        assert_eq!(err, Error::Oversize { order: 8, cap: 7 });
    }
}
