//! J-, CR-, k-CR- and SCR-type checks at a fixed parameter box.
//!
//! A family admits a witness when some choice of coefficients and columns maps
//! every function into `A`. The universally quantified checks sweep all
//! canonical families (see [`crate::engine`]); the `find_*` functions return
//! the least witness for one family. Witnesses are ordered by coefficient
//! tuple first, then by column tuple, both lexicographically.

use serde::{Deserialize, Serialize};

use crate::bitset::{first_set, set_bit, words_for};
use crate::engine::{first_failure, MaskTable};
use crate::error::{Error, Result};
use crate::family::{canonical_family_count, function_count, FamilyIter, FunctionFamily};
use crate::semigroup::{Elem, Semigroup};
use crate::subset::SubsetMask;

/// Default cap on canonical families times witness candidates.
pub const DEFAULT_SEARCH_CAP: u128 = 1 << 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub search_cap: u128,
    /// Largest order accepted by the literal piecewise-syndetic decomposition search.
    pub pws_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { search_cap: DEFAULT_SEARCH_CAP, pws_cap: crate::largeness::DEFAULT_PWS_CAP }
    }
}

/// `a + sum_{t in H} f(t)`; `h` holds 1-based ascending columns.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JWitness {
    pub a: Elem,
    pub h: Vec<usize>,
}

/// `a_1 f(t_1) a_2 ... a_m f(t_m) a_{m+1}`; `columns` are 1-based and strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrWitness {
    pub coeffs: Vec<Elem>,
    pub columns: Vec<usize>,
}

impl CrWitness {
    pub fn m(&self) -> usize {
        self.columns.len()
    }
}

/// `a1 f(t) a2` with `t` counted from 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScrWitness {
    pub a1: Elem,
    pub a2: Elem,
    pub t: usize,
}

impl ScrWitness {
    /// The same data read as a product of length one.
    pub fn to_cr(self) -> CrWitness {
        CrWitness { coeffs: vec![self.a1, self.a2], columns: vec![self.t] }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Holds,
    Fails,
    Inconclusive,
}

impl Verdict {
    pub fn from_bool(b: bool) -> Verdict {
        if b {
            Verdict::Holds
        } else {
            Verdict::Fails
        }
    }

    pub fn holds(self) -> bool {
        self == Verdict::Holds
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub k: usize,
    pub r: usize,
    pub m: Option<usize>,
    pub verdict: Verdict,
    /// Least family without a witness, when the check fails.
    pub counterexample: Option<FunctionFamily>,
    pub families_scanned: u64,
    /// Families of the space left unvisited after the sweep stopped.
    pub families_pruned: u64,
}

// ---------------------------------------------------------------------------
// membership predicates, evaluated directly from the table

pub fn j_holds(s: &Semigroup, set: &SubsetMask, family: &FunctionFamily, w: &JWitness) -> bool {
    !w.h.is_empty()
        && w.h.iter().all(|&t| t >= 1 && t <= family.r())
        && family.values().iter().all(|f| {
            let v = w.h.iter().fold(w.a, |acc, &t| s.mul(acc, f[t - 1]));
            set.contains(v)
        })
}

pub fn cr_holds(s: &Semigroup, set: &SubsetMask, family: &FunctionFamily, w: &CrWitness) -> bool {
    let m = w.columns.len();
    m >= 1
        && w.coeffs.len() == m + 1
        && w.columns.windows(2).all(|p| p[0] < p[1])
        && w.columns[0] >= 1
        && w.columns[m - 1] <= family.r()
        && family.values().iter().all(|f| {
            let mut acc = w.coeffs[0];
            for (&t, &c) in w.columns.iter().zip(&w.coeffs[1..]) {
                acc = s.mul(s.mul(acc, f[t - 1]), c);
            }
            set.contains(acc)
        })
}

pub fn scr_holds(s: &Semigroup, set: &SubsetMask, family: &FunctionFamily, w: &ScrWitness) -> bool {
    w.t >= 1
        && w.t <= family.r()
        && family.values().iter().all(|f| set.contains(s.mul(s.mul(w.a1, f[w.t - 1]), w.a2)))
}

// ---------------------------------------------------------------------------
// witness shapes

pub(crate) trait Shape: Sync {
    /// Words per function block.
    fn width(&self) -> usize;
    /// Witness candidates per family.
    fn candidates(&self) -> u128;
    fn fill(&self, values: &[Elem], out: &mut [u64]);
}

/// Column tuples of length `m` out of `r`, 0-based, in lexicographic order.
pub(crate) fn column_tuples(r: usize, m: usize) -> Vec<Vec<usize>> {
    FamilyIter::new(r as u64, m)
        .filter(|c| c.len() == m)
        .map(|c| c.into_iter().map(|x| x as usize).collect())
        .collect()
}

/// Non-empty column subsets of `1..=r`, 0-based, in lexicographic order.
pub(crate) fn column_subsets(r: usize) -> Vec<Vec<usize>> {
    FamilyIter::new(r as u64, r).map(|c| c.into_iter().map(|x| x as usize).collect()).collect()
}

/// Least set bit over equal-width segments; ties go to the earlier segment.
fn least_in_segments(block: &[u64], seg_words: usize, segments: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for seg in 0..segments {
        if let Some(bit) = first_set(&block[seg * seg_words..(seg + 1) * seg_words]) {
            if best.is_none_or(|(b, _)| bit < b) {
                best = Some((bit, seg));
            }
        }
    }
    best
}

pub(crate) struct ScrShape {
    n: usize,
    r: usize,
    seg: usize,
    /// For every element `x`: pairs `(a1, a2)` (bit `a1 * n + a2`) with `a1 x a2` in `A`.
    pairs: Vec<u64>,
}

impl ScrShape {
    pub fn new(s: &Semigroup, set: &SubsetMask, r: usize) -> ScrShape {
        let n = s.order();
        let seg = words_for(n * n);
        let mut pairs = vec![0u64; n * seg];
        for x in 0..n {
            let row = &mut pairs[x * seg..(x + 1) * seg];
            for a1 in 0..n {
                let a1x = s.mul(a1, x);
                for a2 in 0..n {
                    if set.contains(s.mul(a1x, a2)) {
                        set_bit(row, a1 * n + a2);
                    }
                }
            }
        }
        ScrShape { n, r, seg, pairs }
    }

    #[inline]
    pub fn pair_mask(&self, x: Elem) -> &[u64] {
        &self.pairs[x * self.seg..(x + 1) * self.seg]
    }

    pub fn decode(&self, block: &[u64]) -> Option<ScrWitness> {
        least_in_segments(block, self.seg, self.r)
            .map(|(bit, t)| ScrWitness { a1: bit / self.n, a2: bit % self.n, t: t + 1 })
    }
}

impl Shape for ScrShape {
    fn width(&self) -> usize {
        self.seg * self.r
    }

    fn candidates(&self) -> u128 {
        (self.n * self.n * self.r) as u128
    }

    fn fill(&self, values: &[Elem], out: &mut [u64]) {
        for (t, &x) in values.iter().enumerate().take(self.r) {
            out[t * self.seg..(t + 1) * self.seg].copy_from_slice(self.pair_mask(x));
        }
    }
}

struct CrLayer {
    m: usize,
    seg: usize,
    slots: Vec<Vec<usize>>,
    /// For every value tuple of length `m`: accepted coefficient tuples.
    table: Vec<u64>,
}

pub(crate) struct CrShape {
    n: usize,
    layers: Vec<CrLayer>,
}

/// Upper bound on the bits of one layer's value-tuple table.
const LAYER_TABLE_CAP: u128 = 1 << 31;

impl CrShape {
    /// Layers for products of length `ms`.
    pub fn new(s: &Semigroup, set: &SubsetMask, r: usize, ms: impl IntoIterator<Item = usize>) -> Result<CrShape> {
        let n = s.order();
        let mut layers = Vec::new();
        for m in ms {
            let bits = (n as u128).pow(m as u32 + 1);
            let tuples = (n as u128).pow(m as u32);
            if bits * tuples > LAYER_TABLE_CAP {
                return Err(Error::SearchSpaceCap { needed: bits * tuples, cap: LAYER_TABLE_CAP });
            }
            let seg = words_for(bits as usize);
            let mut table = vec![0u64; tuples as usize * seg];
            for (v, row) in table.chunks_mut(seg).enumerate() {
                let vals = crate::family::decode_function(v as u64, n, m);
                fill_products(s, set, &vals, 0, None, 0, row);
            }
            layers.push(CrLayer { m, seg, slots: column_tuples(r, m), table });
        }
        Ok(CrShape { n, layers })
    }

    /// Least witness in the first layer.
    pub fn decode_first_layer(&self, block: &[u64]) -> Option<CrWitness> {
        let layer = self.layers.first()?;
        let (bit, slot) = least_in_segments(&block[..layer.seg * layer.slots.len()], layer.seg, layer.slots.len())?;
        let coeffs = crate::family::decode_function(bit as u64, self.n, layer.m + 1);
        Some(CrWitness { coeffs, columns: layer.slots[slot].iter().map(|c| c + 1).collect() })
    }
}

fn fill_products(s: &Semigroup, set: &SubsetMask, vals: &[Elem], pos: usize, prefix: Option<Elem>, idx: usize, out: &mut [u64]) {
    let n = s.order();
    for c in 0..n {
        let p = prefix.map_or(c, |x| s.mul(x, c));
        if pos == vals.len() {
            if set.contains(p) {
                set_bit(out, idx * n + c);
            }
        } else {
            fill_products(s, set, vals, pos + 1, Some(s.mul(p, vals[pos])), idx * n + c, out);
        }
    }
}

impl Shape for CrShape {
    fn width(&self) -> usize {
        self.layers.iter().map(|l| l.seg * l.slots.len()).sum()
    }

    fn candidates(&self) -> u128 {
        self.layers.iter().map(|l| (self.n as u128).pow(l.m as u32 + 1) * l.slots.len() as u128).sum()
    }

    fn fill(&self, values: &[Elem], out: &mut [u64]) {
        let mut off = 0;
        for l in &self.layers {
            for cols in &l.slots {
                let v = cols.iter().fold(0usize, |acc, &c| acc * self.n + values[c]);
                out[off..off + l.seg].copy_from_slice(&l.table[v * l.seg..(v + 1) * l.seg]);
                off += l.seg;
            }
        }
    }
}

pub(crate) struct JShape<'a> {
    s: &'a Semigroup,
    seg: usize,
    subsets: Vec<Vec<usize>>,
    /// For every element `x`: the shifts `a` with `a + x` in `A`.
    shifts: Vec<u64>,
}

impl<'a> JShape<'a> {
    pub fn new(s: &'a Semigroup, set: &SubsetMask, r: usize) -> JShape<'a> {
        let n = s.order();
        let seg = words_for(n);
        let mut shifts = vec![0u64; n * seg];
        for (x, row) in shifts.chunks_mut(seg).enumerate() {
            for a in 0..n {
                if set.contains(s.mul(a, x)) {
                    set_bit(row, a);
                }
            }
        }
        JShape { s, seg, subsets: column_subsets(r), shifts }
    }

    pub fn decode(&self, block: &[u64]) -> Option<JWitness> {
        least_in_segments(block, self.seg, self.subsets.len())
            .map(|(a, h)| JWitness { a, h: self.subsets[h].iter().map(|c| c + 1).collect() })
    }
}

impl Shape for JShape<'_> {
    fn width(&self) -> usize {
        self.seg * self.subsets.len()
    }

    fn candidates(&self) -> u128 {
        (self.s.order() * self.subsets.len()) as u128
    }

    fn fill(&self, values: &[Elem], out: &mut [u64]) {
        for (h, cols) in self.subsets.iter().enumerate() {
            let sum = cols[1..].iter().fold(values[cols[0]], |acc, &c| self.s.mul(acc, values[c]));
            out[h * self.seg..(h + 1) * self.seg].copy_from_slice(&self.shifts[sum * self.seg..(sum + 1) * self.seg]);
        }
    }
}

/// AND of the blocks of every function in `family`.
pub(crate) fn family_block(shape: &dyn Shape, family: &FunctionFamily) -> Vec<u64> {
    let w = shape.width();
    let mut acc = vec![!0u64; w];
    let mut tmp = vec![0u64; w];
    for f in family.values() {
        shape.fill(f, &mut tmp);
        for (a, b) in acc.iter_mut().zip(&tmp) {
            *a &= b;
        }
    }
    acc
}

// ---------------------------------------------------------------------------
// single-family searches

fn bind(s: &Semigroup, set: &SubsetMask, family: Option<&FunctionFamily>) -> Result<()> {
    set.check_bound(s)?;
    if let Some(f) = family {
        f.check_bound(s)?;
    }
    Ok(())
}

/// Least `(a, H)` with `a + sum_{t in H} f(t)` in `A` for every function.
pub fn find_j_witness(s: &Semigroup, set: &SubsetMask, family: &FunctionFamily) -> Result<Option<JWitness>> {
    bind(s, set, Some(family))?;
    if !s.is_commutative() {
        return Err(Error::NotCommutative);
    }
    let shape = JShape::new(s, set, family.r());
    Ok(shape.decode(&family_block(&shape, family)))
}

/// Least witness using exactly `m` columns.
pub fn find_cr_witness(s: &Semigroup, set: &SubsetMask, family: &FunctionFamily, m: usize) -> Result<Option<CrWitness>> {
    bind(s, set, Some(family))?;
    if m == 0 || m > family.r() {
        return Err(Error::InvalidParameters(format!("need 1 <= m <= r, got m={m}, r={}", family.r())));
    }
    let shape = CrShape::new(s, set, family.r(), [m])?;
    Ok(shape.decode_first_layer(&family_block(&shape, family)))
}

pub fn find_scr_witness(s: &Semigroup, set: &SubsetMask, family: &FunctionFamily) -> Result<Option<ScrWitness>> {
    bind(s, set, Some(family))?;
    let shape = ScrShape::new(s, set, family.r());
    Ok(shape.decode(&family_block(&shape, family)))
}

// ---------------------------------------------------------------------------
// universally quantified checks

fn check_params(k: usize, r: usize) -> Result<()> {
    if k == 0 || r == 0 {
        Err(Error::InvalidParameters("k and r must be positive".into()))
    } else {
        Ok(())
    }
}

fn sweep(s: &Semigroup, k: usize, r: usize, m: Option<usize>, shape: &dyn Shape, limits: &Limits) -> Result<CheckOutcome> {
    let n = s.order();
    let funcs = function_count(n, r).ok_or(Error::SearchSpaceCap { needed: u128::MAX, cap: limits.search_cap })?;
    let families = canonical_family_count(funcs as u128, k);
    let needed = families.saturating_mul(shape.candidates());
    if needed > limits.search_cap {
        return Err(Error::SearchSpaceCap { needed, cap: limits.search_cap });
    }
    let table = MaskTable::build(n, r, funcs, shape.width(), |v, out| shape.fill(v, out));
    let res = first_failure(&table, k);
    let counterexample = res
        .counterexample
        .map(|idx| FunctionFamily::from_indices(s, r, &idx).expect("indices in range"));
    Ok(CheckOutcome {
        k,
        r,
        m,
        verdict: Verdict::from_bool(counterexample.is_none()),
        counterexample,
        families_scanned: res.scanned as u64,
        families_pruned: (families - res.scanned) as u64,
    })
}

pub fn check_k_scr(s: &Semigroup, set: &SubsetMask, k: usize, r: usize) -> Result<CheckOutcome> {
    check_k_scr_with(s, set, k, r, &Limits::default())
}

/// Every family of at most `k` functions with `r` columns has an SCR witness.
pub fn check_k_scr_with(s: &Semigroup, set: &SubsetMask, k: usize, r: usize, limits: &Limits) -> Result<CheckOutcome> {
    bind(s, set, None)?;
    check_params(k, r)?;
    sweep(s, k, r, None, &ScrShape::new(s, set, r), limits)
}

pub fn check_k_cr(s: &Semigroup, set: &SubsetMask, k: usize, r: usize, m: usize) -> Result<CheckOutcome> {
    check_k_cr_with(s, set, k, r, m, &Limits::default())
}

/// Every family of at most `k` functions has a witness of some length `m' <= m`.
pub fn check_k_cr_with(s: &Semigroup, set: &SubsetMask, k: usize, r: usize, m: usize, limits: &Limits) -> Result<CheckOutcome> {
    bind(s, set, None)?;
    check_params(k, r)?;
    if m == 0 || m > r {
        return Err(Error::InvalidParameters(format!("need 1 <= m <= r, got m={m}, r={r}")));
    }
    sweep(s, k, r, Some(m), &CrShape::new(s, set, r, 1..=m)?, limits)
}

pub fn check_k_cr_comm(s: &Semigroup, set: &SubsetMask, k: usize, r: usize) -> Result<CheckOutcome> {
    check_k_cr_comm_with(s, set, k, r, &Limits::default())
}

/// Commutative k-CR: every family of at most `k` functions has a `JWitness` with `max H <= r`.
pub fn check_k_cr_comm_with(s: &Semigroup, set: &SubsetMask, k: usize, r: usize, limits: &Limits) -> Result<CheckOutcome> {
    bind(s, set, None)?;
    check_params(k, r)?;
    if !s.is_commutative() {
        return Err(Error::NotCommutative);
    }
    if r > 20 {
        return Err(Error::InvalidParameters("r > 20 column subsets are not supported".into()));
    }
    sweep(s, k, r, None, &JShape::new(s, set, r), limits)
}

pub fn check_cr_matrix(s: &Semigroup, set: &SubsetMask, k: usize, r: usize) -> Result<CheckOutcome> {
    check_cr_matrix_with(s, set, k, r, &Limits::default())
}

/// Matrix form: every `r x k` matrix admits `a` and non-empty `H` with
/// `a + sum_{t in H} m[t][j]` in `A` for each column `j`.
///
/// Matrices are enumerated raw (ordered columns, repeats allowed); the
/// counterexample is the least matrix, returned as its `k` columns.
pub fn check_cr_matrix_with(s: &Semigroup, set: &SubsetMask, k: usize, r: usize, limits: &Limits) -> Result<CheckOutcome> {
    bind(s, set, None)?;
    check_params(k, r)?;
    if !s.is_commutative() {
        return Err(Error::NotCommutative);
    }
    let n = s.order();
    let cols = function_count(n, r).ok_or(Error::SearchSpaceCap { needed: u128::MAX, cap: limits.search_cap })?;
    let matrices = (cols as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    let subsets = column_subsets(r);
    let needed = matrices.saturating_mul((subsets.len() * n) as u128);
    if needed > limits.search_cap {
        return Err(Error::SearchSpaceCap { needed, cap: limits.search_cap });
    }
    let per_first = matrices / cols as u128;
    let admits = |m: &[Vec<Elem>]| {
        subsets.iter().any(|h| {
            let sums: Vec<Elem> = m
                .iter()
                .map(|col| h[1..].iter().fold(col[h[0]], |acc, &t| s.mul(acc, col[t])))
                .collect();
            (0..n).any(|a| sums.iter().all(|&x| set.contains(s.mul(a, x))))
        })
    };
    let chunks = crate::par::map_range(cols as usize, |first| {
        let lo = first as u128 * per_first;
        for (i, idx) in (lo..lo + per_first).enumerate() {
            let m = decode_matrix(idx, cols, k, n, r);
            if !admits(&m) {
                return (Some(m), i as u128 + 1);
            }
        }
        (None, per_first)
    });
    let mut scanned = 0u128;
    let mut counterexample = None;
    for (fail, count) in chunks {
        scanned += count;
        if let Some(m) = fail {
            counterexample = Some(FunctionFamily::new(s, m)?);
            break;
        }
    }
    Ok(CheckOutcome {
        k,
        r,
        m: None,
        verdict: Verdict::from_bool(counterexample.is_none()),
        counterexample,
        families_scanned: scanned as u64,
        families_pruned: (matrices - scanned) as u64,
    })
}

fn decode_matrix(mut idx: u128, cols: u64, k: usize, n: usize, r: usize) -> Vec<Vec<Elem>> {
    let mut out = vec![Vec::new(); k];
    for slot in out.iter_mut().rev() {
        *slot = crate::family::decode_function((idx % cols as u128) as u64, n, r);
        idx /= cols as u128;
    }
    out
}

/// Closed form for finite semigroups: some `a1 S a2` lies inside `A`. Returns the least pair.
pub fn is_scr(s: &Semigroup, set: &SubsetMask) -> Result<Option<(Elem, Elem)>> {
    set.check_bound(s)?;
    for a1 in s.elements() {
        let left: Vec<Elem> = s.row(a1).collect();
        for a2 in s.elements() {
            if left.iter().all(|&x| set.contains(s.mul(x, a2))) {
                return Ok(Some((a1, a2)));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::make_catalog;

    fn set(s: &Semigroup, text: &str) -> SubsetMask {
        SubsetMask::parse(s, text).unwrap()
    }

    fn fam(s: &Semigroup, v: Vec<Vec<Elem>>) -> FunctionFamily {
        FunctionFamily::new(s, v).unwrap()
    }

    #[test]
    fn j_witness_examples() {
        let s = make_catalog("zadd:4").unwrap();
        let w = find_j_witness(&s, &set(&s, "0,1"), &fam(&s, vec![vec![3]])).unwrap();
        assert_eq!(w, Some(JWitness { a: 1, h: vec![1] }));
        let w = find_j_witness(&s, &SubsetMask::full(&s), &fam(&s, vec![vec![2, 1], vec![3, 3]])).unwrap();
        assert_eq!(w, Some(JWitness { a: 0, h: vec![1] }));
        assert_eq!(find_j_witness(&s, &set(&s, ""), &fam(&s, vec![vec![1]])).unwrap(), None);
        let lz = make_catalog("lz1:2").unwrap();
        let e = find_j_witness(&lz, &SubsetMask::full(&lz), &fam(&lz, vec![vec![0]])).unwrap_err();
        assert_eq!(e, Error::NotCommutative);
    }

    #[test]
    fn comm_cr_examples() {
        let s = make_catalog("zadd:4").unwrap();
        assert!(check_k_cr_comm(&s, &SubsetMask::full(&s), 2, 1).unwrap().verdict.holds());
        let out = check_k_cr_comm(&s, &set(&s, "0"), 2, 1).unwrap();
        assert_eq!(out.verdict, Verdict::Fails);
        assert_eq!(out.counterexample.unwrap().values(), &[vec![0], vec![1]]);
        let z2 = make_catalog("zadd:2").unwrap();
        assert!(check_k_cr_comm(&z2, &set(&z2, "0"), 1, 1).unwrap().verdict.holds());
    }

    #[test]
    fn matrix_examples() {
        let s = make_catalog("zadd:4").unwrap();
        assert!(check_cr_matrix(&s, &SubsetMask::full(&s), 2, 2).unwrap().verdict.holds());
        let out = check_cr_matrix(&s, &set(&s, ""), 2, 2).unwrap();
        assert_eq!(out.verdict, Verdict::Fails);
        assert_eq!(out.families_scanned, 1);
        let out = check_cr_matrix(&s, &set(&s, "0"), 2, 1).unwrap();
        assert_eq!(out.counterexample.unwrap().values(), &[vec![0], vec![1]]);
    }

    #[test]
    fn noncomm_cr_examples() {
        let lz = make_catalog("lz1:2").unwrap();
        assert!(check_k_cr(&lz, &set(&lz, "x0"), 1, 1, 1).unwrap().verdict.holds());
        let s = make_catalog("zadd:4").unwrap();
        let out = check_k_cr(&s, &set(&s, "0,1"), 2, 1, 1).unwrap();
        assert_eq!(out.counterexample.unwrap().values(), &[vec![0], vec![2]]);
        assert!(check_k_cr(&s, &SubsetMask::full(&s), 3, 2, 2).unwrap().verdict.holds());
        assert!(check_k_cr(&s, &set(&s, "0"), 1, 1, 2).is_err());
    }

    #[test]
    fn cr_witness_order() {
        let s = make_catalog("zadd:4").unwrap();
        // 0 + f(1) + 0 + f(2) + 0 with f = (1, 3) lands on 0; least coefficients first
        let w = find_cr_witness(&s, &set(&s, "0"), &fam(&s, vec![vec![1, 3]]), 2).unwrap().unwrap();
        assert_eq!(w, CrWitness { coeffs: vec![0, 0, 0], columns: vec![1, 2] });
        let w = find_cr_witness(&s, &set(&s, "0"), &fam(&s, vec![vec![1, 3]]), 1).unwrap().unwrap();
        assert_eq!(w, CrWitness { coeffs: vec![0, 1], columns: vec![2] });
        assert!(cr_holds(&s, &set(&s, "0"), &fam(&s, vec![vec![1, 3]]), &w));
    }

    #[test]
    fn scr_examples() {
        let s = make_catalog("zadd:4").unwrap();
        let a = set(&s, "0,1");
        assert!(check_k_scr(&s, &a, 1, 1).unwrap().verdict.holds());
        for x in 0..4 {
            let w = find_scr_witness(&s, &a, &fam(&s, vec![vec![x]])).unwrap().unwrap();
            assert!(scr_holds(&s, &a, &fam(&s, vec![vec![x]]), &w));
        }
        let out = check_k_scr(&s, &a, 2, 1).unwrap();
        assert_eq!(out.counterexample.unwrap().values(), &[vec![0], vec![2]]);
        let rz = make_catalog("rightzero:2").unwrap();
        let y0 = set(&rz, "y0");
        for k in 1..=3 {
            for r in 1..=2 {
                assert!(check_k_scr(&rz, &y0, k, r).unwrap().verdict.holds());
            }
        }
        let w = find_scr_witness(&rz, &y0, &fam(&rz, vec![vec![1, 1]])).unwrap().unwrap();
        assert_eq!(w.a2, 0);
    }

    #[test]
    fn closed_form_examples() {
        let s = make_catalog("zadd:4").unwrap();
        assert_eq!(is_scr(&s, &SubsetMask::full(&s)).unwrap(), Some((0, 0)));
        assert_eq!(is_scr(&s, &set(&s, "0,1")).unwrap(), None);
        let lz = make_catalog("lz1:2").unwrap();
        assert_eq!(is_scr(&lz, &set(&lz, "x0")).unwrap().map(|p| p.0), Some(0));
    }

    #[test]
    fn cap_is_an_error() {
        let s = make_catalog("zadd:8").unwrap();
        let limits = Limits { search_cap: 1000, ..Limits::default() };
        let e = check_k_scr_with(&s, &SubsetMask::full(&s), 3, 3, &limits).unwrap_err();
        assert!(matches!(e, Error::SearchSpaceCap { .. }));
    }

    #[test]
    fn counts_cover_the_space() {
        let s = make_catalog("zadd:3").unwrap();
        let out = check_k_scr(&s, &SubsetMask::full(&s), 2, 2).unwrap();
        assert_eq!(out.families_scanned as u128, canonical_family_count(9, 2));
        assert_eq!(out.families_pruned, 0);
        let out = check_k_scr(&s, &set(&s, "0"), 2, 2).unwrap();
        assert_eq!(out.families_scanned as u128 + out.families_pruned as u128, canonical_family_count(9, 2));
    }
}
