//! Progression sets in product semigroups and the witness lifts that carry a
//! witness for `A` (found on a derived family) to a witness for the
//! progression set.
//!
//! Commutative case: `C = {(a, d) : a + j d in A for j = 0..=l}` in `S x S`.
//! A family `f_i = (g_i, g'_i)` over `S x S` yields the derived functions
//! `p_{i,j} = g_i + j (b + g'_i)` for `j = 0..=l`; a J-witness `(a, H)` for them
//! lifts to `(a, |H| b)`, which puts every `f_i` into `C`. The `j = 0` terms are
//! what make the first coordinate itself land in `A`.
//!
//! Non-commutative case: `D = {(a1, a2, d) : a1 d^t a2 in A for t = 1..=l}` in
//! `S x S x S`. A family `f_i = (h_i, g_i, k_i)` yields
//! `p_{i,j} = h_i a21 (a13 k_i a23)^j a12 g_i` for `j = 1..=l`; an SCR witness
//! `(a11, a22, t)` for them lifts to `((a11, a12, a13), (a21, a22, a23), t)`.
//!
//! Every lift re-checks its conclusion and fails loudly if it does not hold.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::FunctionFamily;
use crate::richness::{j_holds, scr_holds, JWitness, ScrWitness};
use crate::semigroup::{compose, decompose, Elem, Semigroup, Side, DEFAULT_ORDER_CAP};
use crate::subset::SubsetMask;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommLiftConstants {
    pub b: Elem,
    pub l: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct NoncommLiftConstants {
    pub a12: Elem,
    pub a13: Elem,
    pub a21: Elem,
    pub a23: Elem,
    pub l: usize,
}

impl NoncommLiftConstants {
    pub fn as_array(&self) -> [Elem; 4] {
        [self.a12, self.a13, self.a21, self.a23]
    }
}

/// `C` (pairs) or `D` (triples) as a mask over the product semigroup.
#[derive(Debug, Clone)]
pub struct ProgressionSet {
    pub product: Semigroup,
    pub mask: SubsetMask,
    pub l: usize,
}

impl ProgressionSet {
    pub fn contains(&self, e: Elem) -> bool {
        self.mask.contains(e)
    }

    pub fn len(&self) -> usize {
        self.mask.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mask.is_empty()
    }
}

/// `a + j d in A` for every `j` in `0..=l`, evaluated with explicit powers.
pub fn comm_progression_member(s: &Semigroup, set: &SubsetMask, l: usize, a: Elem, d: Elem) -> bool {
    set.contains(a) && (1..=l).all(|j| set.contains(s.mul(a, s.pow_unchecked(d, j))))
}

/// `a1 d^t a2 in A` for every `t` in `1..=l`, evaluated with explicit powers.
pub fn noncomm_progression_member(s: &Semigroup, set: &SubsetMask, l: usize, a1: Elem, a2: Elem, d: Elem) -> bool {
    (1..=l).all(|t| set.contains(s.product(&[a1, s.pow_unchecked(d, t), a2])))
}

fn check_l(l: usize, min: usize) -> Result<()> {
    if l < min {
        Err(Error::InvalidParameters(format!("progression length must be at least {min}")))
    } else {
        Ok(())
    }
}

pub fn build_progression_set_comm(s: &Semigroup, set: &SubsetMask, l: usize) -> Result<ProgressionSet> {
    build_progression_set_comm_capped(s, set, l, DEFAULT_ORDER_CAP)
}

pub fn build_progression_set_comm_capped(s: &Semigroup, set: &SubsetMask, l: usize, cap: usize) -> Result<ProgressionSet> {
    set.check_bound(s)?;
    check_l(l, 1)?;
    if !s.is_commutative() {
        return Err(Error::NotCommutative);
    }
    let product = Semigroup::direct_product(&[s, s], cap)?;
    let mut mask = SubsetMask::empty(&product);
    for a in s.elements() {
        for d in s.elements() {
            let mut x = a;
            let mut ok = set.contains(x);
            for _ in 0..l {
                if !ok {
                    break;
                }
                x = s.mul(x, d);
                ok = set.contains(x);
            }
            if ok {
                mask.insert(compose(&[a, d], &[s, s]));
            }
        }
    }
    Ok(ProgressionSet { product, mask, l })
}

pub fn build_progression_set_noncomm(s: &Semigroup, set: &SubsetMask, l: usize) -> Result<ProgressionSet> {
    build_progression_set_noncomm_capped(s, set, l, DEFAULT_ORDER_CAP)
}

pub fn build_progression_set_noncomm_capped(s: &Semigroup, set: &SubsetMask, l: usize, cap: usize) -> Result<ProgressionSet> {
    set.check_bound(s)?;
    check_l(l, 1)?;
    let product = Semigroup::direct_product(&[s, s, s], cap)?;
    let mut mask = SubsetMask::empty(&product);
    for d in s.elements() {
        let powers: Vec<Elem> = std::iter::successors(Some(d), |&p| Some(s.mul(p, d))).take(l).collect();
        for a1 in s.elements() {
            let left: Vec<Elem> = powers.iter().map(|&p| s.mul(a1, p)).collect();
            for a2 in s.elements() {
                if left.iter().all(|&x| set.contains(s.mul(x, a2))) {
                    mask.insert(compose(&[a1, a2, d], &[s, s, s]));
                }
            }
        }
    }
    Ok(ProgressionSet { product, mask, l })
}

fn check_product(s: &Semigroup, product: &Semigroup, dims: u32) -> Result<()> {
    if product.order() != s.order().pow(dims) {
        return Err(Error::SemigroupMismatch);
    }
    Ok(())
}

/// `g + j (b + g')` for `j = 0..=l`, read off one product value `(g, g')`.
#[inline]
pub(crate) fn comm_derived_values(s: &Semigroup, pair: (Elem, Elem), b: Elem, l: usize, out: &mut Vec<Elem>) {
    let (g, g2) = pair;
    let step = s.mul(b, g2);
    let mut x = g;
    out.push(x);
    for _ in 0..l {
        x = s.mul(x, step);
        out.push(x);
    }
}

/// `h a21 (a13 k a23)^j a12 g` for `j = 1..=l`, read off one product value `(h, g, k)`.
#[inline]
pub(crate) fn noncomm_derived_values(s: &Semigroup, triple: (Elem, Elem, Elem), c: &NoncommLiftConstants, out: &mut Vec<Elem>) {
    let (h, g, k) = triple;
    let head = s.mul(h, c.a21);
    let mid = s.mul(s.mul(c.a13, k), c.a23);
    let tail = s.mul(c.a12, g);
    let mut p = mid;
    for j in 1..=c.l {
        if j > 1 {
            p = s.mul(p, mid);
        }
        out.push(s.mul(s.mul(head, p), tail));
    }
}

/// `pred` over the same values as [`noncomm_derived_values`], without collecting them.
#[inline]
pub(crate) fn noncomm_derived_all(s: &Semigroup, triple: (Elem, Elem, Elem), c: &NoncommLiftConstants, mut pred: impl FnMut(Elem) -> bool) -> bool {
    let (h, g, k) = triple;
    let head = s.mul(h, c.a21);
    let mid = s.mul(s.mul(c.a13, k), c.a23);
    let tail = s.mul(c.a12, g);
    let mut p = mid;
    for j in 1..=c.l {
        if j > 1 {
            p = s.mul(p, mid);
        }
        if !pred(s.mul(s.mul(head, p), tail)) {
            return false;
        }
    }
    true
}

/// The `(l + 1) k` functions `p_{i,j}`, ordered by `i` then `j = 0..=l`.
pub fn derive_comm_family(s: &Semigroup, product: &Semigroup, family: &FunctionFamily, consts: &CommLiftConstants) -> Result<FunctionFamily> {
    family.check_bound(product)?;
    check_product(s, product, 2)?;
    s.check_elem(consts.b)?;
    if !s.is_commutative() {
        return Err(Error::NotCommutative);
    }
    let mut out = Vec::with_capacity(family.k() * (consts.l + 1));
    for f in family.values() {
        let mut rows = vec![Vec::with_capacity(family.r()); consts.l + 1];
        let mut buf = Vec::with_capacity(consts.l + 1);
        for &v in f {
            let c = decompose(v, &[s, s]);
            buf.clear();
            comm_derived_values(s, (c[0], c[1]), consts.b, consts.l, &mut buf);
            for (row, &x) in rows.iter_mut().zip(&buf) {
                row.push(x);
            }
        }
        out.extend(rows);
    }
    FunctionFamily::new(s, out)
}

/// The `l k` functions `p_{i,j}`, ordered by `i` then `j = 1..=l`.
pub fn derive_noncomm_family(s: &Semigroup, product: &Semigroup, family: &FunctionFamily, consts: &NoncommLiftConstants) -> Result<FunctionFamily> {
    family.check_bound(product)?;
    check_product(s, product, 3)?;
    for &c in &consts.as_array() {
        s.check_elem(c)?;
    }
    check_l(consts.l, 1)?;
    let mut out = Vec::with_capacity(family.k() * consts.l);
    for f in family.values() {
        let mut rows = vec![Vec::with_capacity(family.r()); consts.l];
        let mut buf = Vec::with_capacity(consts.l);
        for &v in f {
            let c = decompose(v, &[s, s, s]);
            buf.clear();
            noncomm_derived_values(s, (c[0], c[1], c[2]), consts, &mut buf);
            for (row, &x) in rows.iter_mut().zip(&buf) {
                row.push(x);
            }
        }
        out.extend(rows);
    }
    FunctionFamily::new(s, out)
}

/// `a + sum_{t in H} f(t)` in the product, for every function; all must lie in `C`.
pub(crate) fn comm_lift_check(prog: &ProgressionSet, abar: Elem, h: &[usize], funcs: &[&[Elem]]) -> bool {
    funcs.iter().all(|f| {
        let v = h.iter().fold(abar, |acc, &t| prog.product.mul(acc, f[t - 1]));
        prog.contains(v)
    })
}

/// `abar1 f(t) abar2` in the product, for every function; all must lie in `D`.
pub(crate) fn noncomm_lift_check(prog: &ProgressionSet, abar1: Elem, abar2: Elem, t: usize, funcs: &[&[Elem]]) -> bool {
    let p = &prog.product;
    funcs.iter().all(|f| prog.contains(p.mul(p.mul(abar1, f[t - 1]), abar2)))
}

/// Lifted first coordinate pair `(a, |H| b)` as a product index.
pub(crate) fn comm_lift_point(s: &Semigroup, a: Elem, h_len: usize, b: Elem) -> Elem {
    compose(&[a, s.pow_unchecked(b, h_len)], &[s, s])
}

/// Lifts a J-witness of the derived family to `(abar, H)` with `abar + sum_{t in H} f_i(t)` in `C`.
pub fn lift_comm_witness(
    s: &Semigroup,
    prog: &ProgressionSet,
    family: &FunctionFamily,
    witness: &JWitness,
    consts: &CommLiftConstants,
) -> Result<(Elem, Vec<usize>)> {
    family.check_bound(&prog.product)?;
    check_product(s, &prog.product, 2)?;
    if consts.l != prog.l {
        return Err(Error::InvalidParameters("constants and progression set disagree on l".into()));
    }
    if witness.h.is_empty() || witness.h.iter().any(|&t| t == 0 || t > family.r()) {
        return Err(Error::LiftVerificationFailed(format!("witness columns {:?} out of range", witness.h)));
    }
    let abar = comm_lift_point(s, witness.a, witness.h.len(), consts.b);
    let funcs: Vec<&[Elem]> = family.values().iter().map(Vec::as_slice).collect();
    if !comm_lift_check(prog, abar, &witness.h, &funcs) {
        return Err(Error::LiftVerificationFailed(format!(
            "abar={} with H={:?} does not land in C",
            prog.product.label(abar),
            witness.h
        )));
    }
    Ok((abar, witness.h.clone()))
}

/// Lifts an SCR witness `(a11, a22, t)` of the derived family to
/// `((a11, a12, a13), (a21, a22, a23), t)` with `abar1 f_i(t) abar2` in `D`.
pub fn lift_noncomm_witness(
    s: &Semigroup,
    prog: &ProgressionSet,
    family: &FunctionFamily,
    witness: &ScrWitness,
    consts: &NoncommLiftConstants,
) -> Result<(Elem, Elem, usize)> {
    family.check_bound(&prog.product)?;
    check_product(s, &prog.product, 3)?;
    if consts.l != prog.l {
        return Err(Error::InvalidParameters("constants and progression set disagree on l".into()));
    }
    if witness.t == 0 || witness.t > family.r() {
        return Err(Error::LiftVerificationFailed(format!("column {} out of range", witness.t)));
    }
    let abar1 = compose(&[witness.a1, consts.a12, consts.a13], &[s, s, s]);
    let abar2 = compose(&[consts.a21, witness.a2, consts.a23], &[s, s, s]);
    let funcs: Vec<&[Elem]> = family.values().iter().map(Vec::as_slice).collect();
    if !noncomm_lift_check(prog, abar1, abar2, witness.t, &funcs) {
        return Err(Error::LiftVerificationFailed(format!(
            "({}, {}) at t={} does not land in D",
            prog.product.label(abar1),
            prog.product.label(abar2),
            witness.t
        )));
    }
    Ok((abar1, abar2, witness.t))
}

/// Moves an SCR witness for `A` to one for `x A` (left, `(x a1, a2, t)`) or
/// `A y` (right, `(a1, a2 y, t)`), re-checked against the translated set.
pub fn scr_shift_witness(
    s: &Semigroup,
    set: &SubsetMask,
    family: &FunctionFamily,
    witness: &ScrWitness,
    x: Elem,
    side: Side,
) -> Result<ScrWitness> {
    s.check_elem(x)?;
    family.check_bound(s)?;
    if !scr_holds(s, set, family, witness) {
        return Err(Error::LiftVerificationFailed("witness is not valid for the original set".into()));
    }
    let shifted = match side {
        Side::Left => ScrWitness { a1: s.mul(x, witness.a1), ..*witness },
        Side::Right => ScrWitness { a2: s.mul(witness.a2, x), ..*witness },
    };
    let target = s.translate(set, x, side)?;
    if !scr_holds(s, &target, family, &shifted) {
        return Err(Error::LiftVerificationFailed(format!("shifted witness {shifted:?} fails")));
    }
    Ok(shifted)
}

/// J-witness validity, re-exported for callers verifying derived witnesses.
pub fn derived_j_witness_holds(s: &Semigroup, set: &SubsetMask, derived: &FunctionFamily, w: &JWitness) -> bool {
    j_holds(s, set, derived, w)
}
