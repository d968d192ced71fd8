//! Deliberately naive reference checkers.
//!
//! Every check here is the literal definition evaluated with raw nested loops:
//! ordered function tuples with repeats, no canonical families, no precomputed
//! masks, no closed forms. They only exist to validate the optimized checkers.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::{decode_function, FunctionFamily};
use crate::property::{evaluate, Property, Query};
use crate::richness::{cr_holds, j_holds, scr_holds, CheckOutcome, CrWitness, JWitness, Limits, ScrWitness, Verdict};
use crate::semigroup::{Elem, Semigroup, Side};
use crate::subset::{all_subsets, SubsetMask};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleScale {
    pub max_order: usize,
    pub max_k: usize,
    pub max_r: usize,
    pub max_m: usize,
}

impl Default for OracleScale {
    fn default() -> Self {
        OracleScale { max_order: 4, max_k: 2, max_r: 2, max_m: 2 }
    }
}

fn subsets_of(n: usize) -> impl Iterator<Item = u32> {
    0..1u32 << n
}

fn contains(mask: u32, e: Elem) -> bool {
    mask >> e & 1 == 1
}

fn naive_syndetic(s: &Semigroup, set: &SubsetMask) -> bool {
    let n = s.order();
    subsets_of(n).any(|f| {
        s.elements().all(|y| s.elements().any(|t| contains(f, t) && set.contains(s.mul(t, y))))
    })
}

fn naive_thick(s: &Semigroup, set: &SubsetMask, side: Side) -> bool {
    let n = s.order();
    subsets_of(n).all(|f| {
        s.elements().any(|x| {
            s.elements().filter(|&e| contains(f, e)).all(|e| {
                let p = match side {
                    Side::Right => s.mul(e, x),
                    Side::Left => s.mul(x, e),
                };
                set.contains(p)
            })
        })
    })
}

fn naive_pws(s: &Semigroup, set: &SubsetMask, side: Side) -> Result<bool> {
    let n = s.order();
    for sy in subsets_of(n) {
        for th in subsets_of(n) {
            let inter = SubsetMask::from_mask(s, (sy & th) as u128)?;
            if inter != *set {
                continue;
            }
            let sy_m = SubsetMask::from_mask(s, sy as u128)?;
            let th_m = SubsetMask::from_mask(s, th as u128)?;
            if naive_syndetic(s, &sy_m) && naive_thick(s, &th_m, side) {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Odometer over `len` digits base `n`.
fn tuples(n: usize, len: usize) -> impl Iterator<Item = Vec<Elem>> {
    let total = n.pow(len as u32) as u64;
    (0..total).map(move |i| decode_function(i, n, len))
}

fn naive_scr_witness(s: &Semigroup, set: &SubsetMask, fam: &[Vec<Elem>], r: usize) -> bool {
    for a1 in s.elements() {
        for a2 in s.elements() {
            for t in 0..r {
                if fam.iter().all(|f| set.contains(s.mul(s.mul(a1, f[t]), a2))) {
                    return true;
                }
            }
        }
    }
    false
}

fn naive_cr_witness(s: &Semigroup, set: &SubsetMask, fam: &[Vec<Elem>], r: usize, m_max: usize) -> bool {
    let n = s.order();
    for m in 1..=m_max {
        for cols in tuples(r, m).filter(|c| c.windows(2).all(|p| p[0] < p[1])) {
            for coeffs in tuples(n, m + 1) {
                let ok = fam.iter().all(|f| {
                    let mut acc = coeffs[0];
                    for i in 0..m {
                        acc = s.mul(acc, f[cols[i]]);
                        acc = s.mul(acc, coeffs[i + 1]);
                    }
                    set.contains(acc)
                });
                if ok {
                    return true;
                }
            }
        }
    }
    false
}

fn naive_j_witness(s: &Semigroup, set: &SubsetMask, fam: &[Vec<Elem>], r: usize) -> bool {
    for h in 1u32..1 << r {
        for a in s.elements() {
            let ok = fam.iter().all(|f| {
                let mut acc = a;
                for t in 0..r {
                    if contains(h, t) {
                        acc = s.mul(acc, f[t]);
                    }
                }
                set.contains(acc)
            });
            if ok {
                return true;
            }
        }
    }
    false
}

/// First ordered tuple of `size` functions (sizes `sizes`) without a witness.
fn naive_sweep(
    s: &Semigroup,
    r: usize,
    sizes: std::ops::RangeInclusive<usize>,
    has_witness: impl Fn(&[Vec<Elem>]) -> bool,
) -> (Option<Vec<Vec<Elem>>>, u64) {
    let n = s.order();
    let funcs = n.pow(r as u32);
    let mut scanned = 0;
    for size in sizes {
        for picks in tuples(funcs, size) {
            scanned += 1;
            let fam: Vec<Vec<Elem>> = picks.iter().map(|&p| decode_function(p as u64, n, r)).collect();
            if !has_witness(&fam) {
                return (Some(fam), scanned);
            }
        }
    }
    (None, scanned)
}

/// The literal definition of `q.property`, evaluated without any pruning.
pub fn naive_oracle_check(s: &Semigroup, set: &SubsetMask, q: &Query) -> Result<CheckOutcome> {
    naive_oracle_check_scaled(s, set, q, &OracleScale::default())
}

pub fn naive_oracle_check_scaled(s: &Semigroup, set: &SubsetMask, q: &Query, scale: &OracleScale) -> Result<CheckOutcome> {
    set.check_bound(s)?;
    let n = s.order();
    if n > scale.max_order {
        return Err(Error::OracleScaleCap(format!("order {n} > {}", scale.max_order)));
    }
    if q.property.uses_families() && (q.k > scale.max_k || q.r > scale.max_r || q.m > scale.max_m) {
        return Err(Error::OracleScaleCap(format!("box (k={}, r={}, m={}) too large", q.k, q.r, q.m)));
    }
    if q.property.needs_commutative() && !s.is_commutative() {
        return Err(Error::NotCommutative);
    }
    let plain = |b: bool| CheckOutcome {
        k: 0,
        r: 0,
        m: None,
        verdict: Verdict::from_bool(b),
        counterexample: None,
        families_scanned: 0,
        families_pruned: 0,
    };
    let (r, k) = (q.r, q.k);
    let swept = match q.property {
        Property::Syndetic => return Ok(plain(naive_syndetic(s, set))),
        Property::Thick => return Ok(plain(naive_thick(s, set, q.side))),
        Property::Pws => return Ok(plain(naive_pws(s, set, q.side)?)),
        Property::Scr => {
            // every family of at most |S| one-column functions
            let (fail, _) = naive_sweep(s, 1, 1..=n, |f| naive_scr_witness(s, set, f, 1));
            return Ok(plain(fail.is_none()));
        }
        Property::Jset => return Err(Error::InvalidParameters("jset needs an explicit family".into())),
        Property::Kscr => naive_sweep(s, r, 1..=k, |f| naive_scr_witness(s, set, f, r)),
        Property::Kcr => {
            if q.m == 0 || q.m > r {
                return Err(Error::InvalidParameters("need 1 <= m <= r".into()));
            }
            naive_sweep(s, r, 1..=k, |f| naive_cr_witness(s, set, f, r, q.m))
        }
        Property::KcrComm => naive_sweep(s, r, 1..=k, |f| naive_j_witness(s, set, f, r)),
        Property::KcrMatrix => naive_sweep(s, r, k..=k, |f| naive_j_witness(s, set, f, r)),
    };
    let (fail, scanned) = swept;
    let counterexample = fail.map(|v| FunctionFamily::new(s, v)).transpose()?;
    Ok(CheckOutcome {
        k,
        r,
        m: (q.property == Property::Kcr).then_some(q.m),
        verdict: Verdict::from_bool(counterexample.is_none()),
        counterexample,
        families_scanned: scanned,
        families_pruned: 0,
    })
}

/// Whether `family` admits any witness for `q`, by brute force.
pub fn naive_family_admits(s: &Semigroup, set: &SubsetMask, family: &FunctionFamily, q: &Query) -> bool {
    let fam = family.values();
    let r = family.r();
    match q.property {
        Property::Kscr | Property::Scr => naive_scr_witness(s, set, fam, r),
        Property::Kcr => naive_cr_witness(s, set, fam, r, q.m.min(r)),
        Property::KcrComm | Property::KcrMatrix | Property::Jset => naive_j_witness(s, set, fam, r),
        _ => true,
    }
}

/// Disagreement between the optimized and naive checker on one instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleMismatch {
    pub mask: String,
    pub set: Vec<String>,
    pub property: Property,
    pub side: &'static str,
    pub k: usize,
    pub r: usize,
    pub m: usize,
    pub optimized: Verdict,
    pub naive: Verdict,
    /// Set when the verdicts agree but the optimized counterexample has a witness.
    pub bad_counterexample: Option<Vec<Vec<Elem>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleGridReport {
    pub instances: u64,
    pub agreements: u64,
    /// Least mismatching instance in grid order.
    pub first_mismatch: Option<OracleMismatch>,
}

/// Every query the grid covers for `s`, in grid order.
pub fn grid_queries(s: &Semigroup, properties: &[Property], scale: &OracleScale) -> Vec<Query> {
    let mut out = Vec::new();
    for &p in properties {
        if p == Property::Jset || (p.needs_commutative() && !s.is_commutative()) {
            continue;
        }
        match p {
            Property::Thick | Property::Pws => {
                for side in [Side::Right, Side::Left] {
                    out.push(Query::new(p).with_side(side));
                }
            }
            Property::Syndetic | Property::Scr => out.push(Query::new(p)),
            Property::Kcr => {
                for k in 1..=scale.max_k {
                    for r in 1..=scale.max_r {
                        for m in 1..=r.min(scale.max_m) {
                            out.push(Query::new(p).with_box(k, r, m));
                        }
                    }
                }
            }
            _ => {
                for k in 1..=scale.max_k {
                    for r in 1..=scale.max_r {
                        out.push(Query::new(p).with_box(k, r, 1));
                    }
                }
            }
        }
    }
    out
}

pub type Checker<'a> = dyn Fn(&Semigroup, &SubsetMask, &Query) -> Result<CheckOutcome> + Sync + 'a;

/// Compares the optimized checkers against the oracle on every subset and query.
pub fn oracle_grid(s: &Semigroup, properties: &[Property], scale: &OracleScale) -> Result<OracleGridReport> {
    let limits = Limits::default();
    oracle_grid_with(s, properties, scale, &|s, a, q| evaluate(s, a, q, &limits))
}

/// As [`oracle_grid`] with a caller-supplied optimized checker (fault injection).
pub fn oracle_grid_with(s: &Semigroup, properties: &[Property], scale: &OracleScale, optimized: &Checker) -> Result<OracleGridReport> {
    if s.order() > scale.max_order {
        return Err(Error::OracleScaleCap(format!("order {} > {}", s.order(), scale.max_order)));
    }
    let queries = grid_queries(s, properties, scale);
    let subsets: Vec<SubsetMask> = all_subsets(s).collect();
    let per_subset = crate::par::map_slice(&subsets, |a| -> Result<(u64, Option<OracleMismatch>)> {
        let mut agree = 0;
        for q in &queries {
            let fast = optimized(s, a, q)?;
            let slow = naive_oracle_check_scaled(s, a, q, scale)?;
            let bad_cx = fast
                .counterexample
                .as_ref()
                .filter(|cx| naive_family_admits(s, a, cx, q))
                .map(|cx| cx.values().to_vec());
            if fast.verdict == slow.verdict && bad_cx.is_none() {
                agree += 1;
            } else {
                return Ok((
                    agree,
                    Some(OracleMismatch {
                        mask: a.to_hex(),
                        set: a.labels(s).into_iter().map(String::from).collect(),
                        property: q.property,
                        side: q.side.as_str(),
                        k: q.k,
                        r: q.r,
                        m: q.m,
                        optimized: fast.verdict,
                        naive: slow.verdict,
                        bad_counterexample: bad_cx,
                    }),
                ));
            }
        }
        Ok((agree, None))
    });
    let mut report = OracleGridReport { instances: 0, agreements: 0, first_mismatch: None };
    for res in per_subset {
        let (agree, mismatch) = res?;
        report.agreements += agree;
        report.instances += agree;
        if let Some(m) = mismatch {
            report.instances += 1;
            report.first_mismatch = Some(m);
            break;
        }
    }
    Ok(report)
}

/// Re-checks a witness of each kind against a family; used by tests and experiments.
pub fn witness_checks(s: &Semigroup, set: &SubsetMask, family: &FunctionFamily) -> (Option<JWitness>, Option<CrWitness>, Option<ScrWitness>) {
    let j = if s.is_commutative() {
        crate::richness::find_j_witness(s, set, family).ok().flatten().filter(|w| j_holds(s, set, family, w))
    } else {
        None
    };
    let cr = crate::richness::find_cr_witness(s, set, family, 1).ok().flatten().filter(|w| cr_holds(s, set, family, w));
    let scr = crate::richness::find_scr_witness(s, set, family).ok().flatten().filter(|w| scr_holds(s, set, family, w));
    (j, cr, scr)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::make_catalog;

    #[test]
    fn empty_set_fails_everything() {
        let s = make_catalog("zadd:3").unwrap();
        let e = SubsetMask::empty(&s);
        for q in grid_queries(&s, &Property::ALL, &OracleScale::default()) {
            assert_eq!(naive_oracle_check(&s, &e, &q).unwrap().verdict, Verdict::Fails, "{q:?}");
        }
    }

    #[test]
    fn scale_cap() {
        let s = make_catalog("zadd:5").unwrap();
        let q = Query::new(Property::Kscr);
        assert!(matches!(naive_oracle_check(&s, &SubsetMask::full(&s), &q), Err(Error::OracleScaleCap(_))));
        let s = make_catalog("zadd:3").unwrap();
        let q = Query::new(Property::Kscr).with_box(3, 1, 1);
        assert!(matches!(naive_oracle_check(&s, &SubsetMask::full(&s), &q), Err(Error::OracleScaleCap(_))));
    }

    #[test]
    fn injected_fault_is_reported() {
        let s = make_catalog("zadd:3").unwrap();
        let limits = Limits::default();
        // claims every set is thick
        let broken = |s: &Semigroup, a: &SubsetMask, q: &Query| {
            let mut out = evaluate(s, a, q, &limits)?;
            if q.property == Property::Thick {
                out.verdict = Verdict::Holds;
            }
            Ok(out)
        };
        let rep = oracle_grid_with(&s, &[Property::Thick], &OracleScale::default(), &broken).unwrap();
        let m = rep.first_mismatch.unwrap();
        assert_eq!(m.mask, "0");
        assert_eq!((m.optimized, m.naive), (Verdict::Holds, Verdict::Fails));
    }
}
