//! Abundance experiments (does every witness found on a derived family lift
//! into the progression set?) and the partition-regularity experiment.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::engine::{visit_all, MaskTable};
use crate::error::{Error, Result};
use crate::family::{canonical_family_count, decode_function, function_count};
use crate::lift::{
    build_progression_set_comm, build_progression_set_noncomm, comm_derived_values, comm_lift_check, comm_lift_point,
    noncomm_derived_all, noncomm_derived_values, noncomm_lift_check, NoncommLiftConstants, ProgressionSet,
};
use crate::par;
use crate::report::SetRecord;
use crate::richness::{check_k_cr_with, check_k_scr_with, is_scr, JShape, JWitness, Limits, ScrShape, ScrWitness, Shape};
use crate::semigroup::{compose, decompose, Elem, Semigroup};
use crate::subset::SubsetMask;

/// Which families over the product semigroup an experiment visits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilySource {
    /// Every canonical family.
    Exhaustive,
    /// `count` families per column count, drawn from a seeded ChaCha stream.
    Sampled { count: usize, seed: u64 },
}

/// The free constants of a lift: `b` (one element) or `a12, a13, a21, a23` (four).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConstantSource {
    Fixed(Vec<Elem>),
    Sweep,
    Sampled { count: usize, seed: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AbundanceBox {
    pub l: usize,
    /// Families of 1..=k functions.
    pub k: usize,
    /// Families with 1..=r columns.
    pub r: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstantStats {
    pub constants: Vec<Elem>,
    pub families_checked: u64,
    pub witnesses_found: u64,
    pub lifts_verified: u64,
    pub lift_failures: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftFailure {
    pub constants: Vec<Elem>,
    /// Product-element indices, one row per function.
    pub family: Vec<Vec<Elem>>,
    pub witness: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbundanceReport {
    pub kind: String,
    pub spec: String,
    pub set: SetRecord,
    pub l: usize,
    pub k: usize,
    pub r: usize,
    pub families: String,
    pub constants: String,
    pub families_checked: u64,
    pub witnesses_found: u64,
    pub lifts_verified: u64,
    pub lift_failures: u64,
    pub no_witness: u64,
    pub cr_embedding_checked: u64,
    pub cr_embedding_failures: u64,
    pub per_constant: Vec<ConstantStats>,
    pub first_failure: Option<LiftFailure>,
}

#[derive(Debug, Default, Clone)]
struct Tally {
    families: u64,
    witnesses: u64,
    verified: u64,
    failures: u64,
    cr_checked: u64,
    cr_failures: u64,
    first_failure: Option<(Vec<Vec<Elem>>, String)>,
}

impl Tally {
    fn merge(&mut self, o: Tally) {
        self.families += o.families;
        self.witnesses += o.witnesses;
        self.verified += o.verified;
        self.failures += o.failures;
        self.cr_checked += o.cr_checked;
        self.cr_failures += o.cr_failures;
        if self.first_failure.is_none() {
            self.first_failure = o.first_failure;
        }
    }
}

/// Function values by index, `r` per function.
struct Values {
    r: usize,
    data: Vec<Elem>,
}

impl Values {
    #[inline]
    fn get(&self, f: usize) -> &[Elem] {
        &self.data[f * self.r..(f + 1) * self.r]
    }
}

enum Found {
    J(JWitness, Elem),
    Scr(ScrWitness, Elem, Elem),
}

impl Found {
    fn describe(&self) -> String {
        match self {
            Found::J(w, abar) => format!("a={} H={:?} abar={abar}", w.a, w.h),
            Found::Scr(w, b1, b2) => format!("a11={} a22={} t={} abar1={b1} abar2={b2}", w.a1, w.a2, w.t),
        }
    }
}

struct Hit {
    verified: bool,
    cr: Option<bool>,
    found: Found,
}

trait Lifter: Sync {
    fn width(&self) -> usize;
    fn fill(&self, vals: &[Elem], out: &mut [u64]);
    fn lift(&self, funcs: &[&[Elem]], block: &[u64]) -> Option<Hit>;
}

struct CommLifter<'a> {
    s: &'a Semigroup,
    prog: &'a ProgressionSet,
    shape: JShape<'a>,
    b: Elem,
}

impl Lifter for CommLifter<'_> {
    fn width(&self) -> usize {
        self.shape.width()
    }

    fn fill(&self, vals: &[Elem], out: &mut [u64]) {
        let l = self.prog.l;
        let mut derived = vec![Vec::with_capacity(vals.len()); l + 1];
        let mut buf = Vec::with_capacity(l + 1);
        for &v in vals {
            let c = decompose(v, &[self.s, self.s]);
            buf.clear();
            comm_derived_values(self.s, (c[0], c[1]), self.b, l, &mut buf);
            for (row, &x) in derived.iter_mut().zip(&buf) {
                row.push(x);
            }
        }
        and_fills(&self.shape, &derived, out);
    }

    fn lift(&self, funcs: &[&[Elem]], block: &[u64]) -> Option<Hit> {
        let w = self.shape.decode(block)?;
        let abar = comm_lift_point(self.s, w.a, w.h.len(), self.b);
        Some(Hit {
            verified: comm_lift_check(self.prog, abar, &w.h, funcs),
            cr: None,
            found: Found::J(w, abar),
        })
    }
}

struct NoncommLifter<'a> {
    s: &'a Semigroup,
    set: &'a SubsetMask,
    prog: &'a ProgressionSet,
    shape: ScrShape,
    c: NoncommLiftConstants,
}

impl NoncommLifter<'_> {
    #[inline]
    fn triple(&self, v: Elem) -> (Elem, Elem, Elem) {
        let n = self.s.order();
        (v / (n * n), (v / n) % n, v % n)
    }
}

impl Lifter for NoncommLifter<'_> {
    fn width(&self) -> usize {
        self.shape.width()
    }

    fn fill(&self, vals: &[Elem], out: &mut [u64]) {
        let mut derived = vec![Vec::with_capacity(vals.len()); self.c.l];
        let mut buf = Vec::with_capacity(self.c.l);
        for &v in vals {
            buf.clear();
            noncomm_derived_values(self.s, self.triple(v), &self.c, &mut buf);
            for (row, &x) in derived.iter_mut().zip(&buf) {
                row.push(x);
            }
        }
        and_fills(&self.shape, &derived, out);
    }

    fn lift(&self, funcs: &[&[Elem]], block: &[u64]) -> Option<Hit> {
        let w = self.shape.decode(block)?;
        let s = self.s;
        let abar1 = compose(&[w.a1, self.c.a12, self.c.a13], &[s, s, s]);
        let abar2 = compose(&[self.c.a21, w.a2, self.c.a23], &[s, s, s]);
        // the same witness read as a length-one product must satisfy the CR predicate
        let cw = w.to_cr();
        let (c0, c1, col) = (cw.coeffs[0], cw.coeffs[1], cw.columns[0] - 1);
        let cr_ok = funcs.iter().all(|f| {
            noncomm_derived_all(s, self.triple(f[col]), &self.c, |p| self.set.contains(s.mul(s.mul(c0, p), c1)))
        });
        Some(Hit {
            verified: noncomm_lift_check(self.prog, abar1, abar2, w.t, funcs),
            cr: Some(cr_ok),
            found: Found::Scr(w, abar1, abar2),
        })
    }
}

fn and_fills(shape: &dyn Shape, derived: &[Vec<Elem>], out: &mut [u64]) {
    out.fill(!0);
    let mut tmp = vec![0u64; out.len()];
    for d in derived {
        shape.fill(d, &mut tmp);
        for (o, t) in out.iter_mut().zip(&tmp) {
            *o &= t;
        }
    }
}

fn record(t: &mut Tally, funcs: &[&[Elem]], hit: Option<Hit>) {
    t.families += 1;
    let Some(hit) = hit else { return };
    t.witnesses += 1;
    if hit.verified {
        t.verified += 1;
    } else {
        t.failures += 1;
        if t.first_failure.is_none() {
            t.first_failure = Some((funcs.iter().map(|f| f.to_vec()).collect(), hit.found.describe()));
        }
    }
    if let Some(ok) = hit.cr {
        t.cr_checked += 1;
        t.cr_failures += u64::from(!ok);
    }
}

fn run_exhaustive(lifter: &dyn Lifter, order: usize, k: usize, r: usize, limits: &Limits) -> Result<Tally> {
    let funcs = function_count(order, r).ok_or(Error::SearchSpaceCap { needed: u128::MAX, cap: limits.search_cap })?;
    let total = canonical_family_count(funcs as u128, k);
    if total > limits.search_cap {
        return Err(Error::SearchSpaceCap { needed: total, cap: limits.search_cap });
    }
    let values = Values { r, data: (0..funcs).flat_map(|f| decode_function(f, order, r)).collect() };
    let table = MaskTable::build(order, r, funcs, lifter.width(), |v, out| lifter.fill(v, out));
    let values = &values;
    let parts = visit_all(
        &table,
        k,
        || (Tally::default(), Vec::with_capacity(k)),
        |(t, fs), fam, inter| {
            fs.clear();
            fs.extend(fam.iter().map(|&f| values.get(f as usize)));
            record(t, fs, lifter.lift(fs, inter));
        },
    );
    Ok(parts.into_iter().map(|(t, _)| t).fold(Tally::default(), |mut acc, t| {
        acc.merge(t);
        acc
    }))
}

fn sample_families(order: usize, r: usize, k: usize, count: usize, seed: u64) -> Result<Vec<Vec<Vec<Elem>>>> {
    let funcs = function_count(order, r)
        .filter(|&f| f <= usize::MAX as u64)
        .ok_or(Error::SearchSpaceCap { needed: (order as u128).saturating_pow(r as u32), cap: u64::MAX as u128 })?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..count)
        .map(|_| {
            let size = rng.gen_range(1..=k.min(funcs as usize));
            let mut idx = sample(&mut rng, funcs as usize, size).into_vec();
            idx.sort_unstable();
            idx.into_iter().map(|f| decode_function(f as u64, order, r)).collect()
        })
        .collect())
}

fn run_sampled(lifter: &dyn Lifter, families: &[Vec<Vec<Elem>>]) -> Tally {
    const CHUNK: usize = 64;
    let parts = par::map_range(families.len().div_ceil(CHUNK), |c| {
        let mut t = Tally::default();
        let w = lifter.width();
        let mut block = vec![0u64; w];
        let mut tmp = vec![0u64; w];
        for fam in &families[c * CHUNK..((c + 1) * CHUNK).min(families.len())] {
            block.fill(!0);
            for f in fam {
                lifter.fill(f, &mut tmp);
                for (b, x) in block.iter_mut().zip(&tmp) {
                    *b &= x;
                }
            }
            let fs: Vec<&[Elem]> = fam.iter().map(Vec::as_slice).collect();
            record(&mut t, &fs, lifter.lift(&fs, &block));
        }
        t
    });
    parts.into_iter().fold(Tally::default(), |mut acc, t| {
        acc.merge(t);
        acc
    })
}

fn constant_tuples(s: &Semigroup, width: usize, source: &ConstantSource) -> Result<Vec<Vec<Elem>>> {
    let n = s.order();
    let total = function_count(n, width).ok_or(Error::InvalidParameters("too many constant tuples".into()))?;
    match source {
        ConstantSource::Fixed(c) => {
            if c.len() != width {
                return Err(Error::InvalidParameters(format!("expected {width} constants, got {}", c.len())));
            }
            for &e in c {
                s.check_elem(e)?;
            }
            Ok(vec![c.clone()])
        }
        ConstantSource::Sweep => Ok((0..total).map(|i| decode_function(i, n, width)).collect()),
        ConstantSource::Sampled { count, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            let mut idx = sample(&mut rng, total as usize, (*count).min(total as usize)).into_vec();
            idx.sort_unstable();
            Ok(idx.into_iter().map(|i| decode_function(i as u64, n, width)).collect())
        }
    }
}

fn describe_families(f: &FamilySource) -> String {
    match f {
        FamilySource::Exhaustive => "exhaustive".into(),
        FamilySource::Sampled { count, seed } => format!("sampled:{count}:{seed}"),
    }
}

fn describe_constants(c: &ConstantSource) -> String {
    match c {
        ConstantSource::Fixed(v) => format!("fixed:{}", v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")),
        ConstantSource::Sweep => "sweep".into(),
        ConstantSource::Sampled { count, seed } => format!("sampled:{count}:{seed}"),
    }
}

fn check_box(bx: &AbundanceBox) -> Result<()> {
    if bx.l == 0 || bx.k == 0 || bx.r == 0 {
        return Err(Error::InvalidParameters("l, k and r must be positive".into()));
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn run_grid<'a, L, F>(
    kind: &str,
    s: &Semigroup,
    set: &SubsetMask,
    prog: &ProgressionSet,
    bx: &AbundanceBox,
    consts: Vec<Vec<Elem>>,
    const_src: &ConstantSource,
    families: &FamilySource,
    limits: &Limits,
    make: F,
) -> Result<AbundanceReport>
where
    L: Lifter + 'a,
    F: Fn(&[Elem], usize) -> L,
{
    let order = prog.product.order();
    let samples: Vec<Vec<Vec<Vec<Elem>>>> = match families {
        FamilySource::Exhaustive => Vec::new(),
        FamilySource::Sampled { count, seed } => {
            (1..=bx.r).map(|r| sample_families(order, r, bx.k, *count, seed.wrapping_add(r as u64))).collect::<Result<_>>()?
        }
    };
    let mut report = AbundanceReport {
        kind: kind.into(),
        spec: String::new(),
        set: SetRecord::new(s, set),
        l: bx.l,
        k: bx.k,
        r: bx.r,
        families: describe_families(families),
        constants: describe_constants(const_src),
        families_checked: 0,
        witnesses_found: 0,
        lifts_verified: 0,
        lift_failures: 0,
        no_witness: 0,
        cr_embedding_checked: 0,
        cr_embedding_failures: 0,
        per_constant: Vec::new(),
        first_failure: None,
    };
    for c in consts {
        let mut tally = Tally::default();
        for r in 1..=bx.r {
            let lifter = make(&c, r);
            tally.merge(match families {
                FamilySource::Exhaustive => run_exhaustive(&lifter, order, bx.k, r, limits)?,
                FamilySource::Sampled { .. } => run_sampled(&lifter, &samples[r - 1]),
            });
        }
        report.families_checked += tally.families;
        report.witnesses_found += tally.witnesses;
        report.lifts_verified += tally.verified;
        report.lift_failures += tally.failures;
        report.no_witness += tally.families - tally.witnesses;
        report.cr_embedding_checked += tally.cr_checked;
        report.cr_embedding_failures += tally.cr_failures;
        if report.first_failure.is_none() {
            report.first_failure = tally.first_failure.map(|(family, witness)| LiftFailure {
                constants: c.clone(),
                family,
                witness,
            });
        }
        report.per_constant.push(ConstantStats {
            constants: c,
            families_checked: tally.families,
            witnesses_found: tally.witnesses,
            lifts_verified: tally.verified,
            lift_failures: tally.failures,
        });
    }
    Ok(report)
}

/// Commutative abundance: J-witnesses on `p_{i,j} = g_i + j (b + g'_i)` lifted into `C`.
pub fn abundance_experiment_comm(
    s: &Semigroup,
    set: &SubsetMask,
    bx: &AbundanceBox,
    constants: &ConstantSource,
    families: &FamilySource,
    limits: &Limits,
) -> Result<AbundanceReport> {
    check_box(bx)?;
    let prog = build_progression_set_comm(s, set, bx.l)?;
    let consts = constant_tuples(s, 1, constants)?;
    run_grid("comm", s, set, &prog, bx, consts, constants, families, limits, |c, r| CommLifter {
        s,
        prog: &prog,
        shape: JShape::new(s, set, r),
        b: c[0],
    })
}

/// Non-commutative abundance: SCR witnesses on `h a21 (a13 k a23)^j a12 g` lifted into `D`.
pub fn abundance_experiment_noncomm(
    s: &Semigroup,
    set: &SubsetMask,
    bx: &AbundanceBox,
    constants: &ConstantSource,
    families: &FamilySource,
    limits: &Limits,
) -> Result<AbundanceReport> {
    check_box(bx)?;
    let prog = build_progression_set_noncomm(s, set, bx.l)?;
    let consts = constant_tuples(s, 4, constants)?;
    run_grid("noncomm", s, set, &prog, bx, consts, constants, families, limits, |c, r| NoncommLifter {
        s,
        set,
        prog: &prog,
        shape: ScrShape::new(s, set, r),
        c: NoncommLiftConstants { a12: c[0], a13: c[1], a21: c[2], a23: c[3], l: bx.l },
    })
}

// ---------------------------------------------------------------------------
// partition regularity

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "property")]
pub enum PartitionProperty {
    /// Closed form: some `a1 S a2` inside the set.
    Scr,
    Kscr { k: usize, r: usize },
    Kcr { k: usize, r: usize, m: usize },
}

impl PartitionProperty {
    pub fn name(&self) -> &'static str {
        match self {
            PartitionProperty::Scr => "scr",
            PartitionProperty::Kscr { .. } => "kscr",
            PartitionProperty::Kcr { .. } => "kcr",
        }
    }

    fn holds(&self, s: &Semigroup, set: &SubsetMask, limits: &Limits) -> Result<bool> {
        Ok(match *self {
            PartitionProperty::Scr => is_scr(s, set)?.is_some(),
            PartitionProperty::Kscr { k, r } => check_k_scr_with(s, set, k, r, limits)?.verdict.holds(),
            PartitionProperty::Kcr { k, r, m } => check_k_cr_with(s, set, k, r, m, limits)?.verdict.holds(),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionViolation {
    pub set: SetRecord,
    pub cell1: SetRecord,
    pub cell2: SetRecord,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionReport {
    pub spec: String,
    #[serde(flatten)]
    pub property: PartitionProperty,
    pub sets_checked: u64,
    pub sets_with_property: u64,
    pub partitions_checked: u64,
    pub violations: Vec<PartitionViolation>,
}

/// Largest order swept by the partition experiment.
pub const PARTITION_ORDER_CAP: usize = 16;

/// For every set with the property and every split `A = A1 + A2` (`A1 < A2` as
/// masks), records the splits where neither cell has the property.
pub fn partition_regularity_experiment(s: &Semigroup, property: PartitionProperty, limits: &Limits) -> Result<PartitionReport> {
    let n = s.order();
    if n > PARTITION_ORDER_CAP {
        return Err(Error::SearchSpaceCap { needed: 1u128 << n, cap: 1u128 << PARTITION_ORDER_CAP });
    }
    let subsets = 1usize << n;
    let holds: Vec<bool> = par::map_range(subsets, |m| {
        SubsetMask::from_mask(s, m as u128).and_then(|a| property.holds(s, &a, limits))
    })
    .into_iter()
    .collect::<Result<_>>()?;
    let per_set = par::map_range(subsets, |a| {
        let mut found = Vec::new();
        let mut checked = 0u64;
        if !holds[a] {
            return (checked, found);
        }
        let mut a1 = 0usize;
        loop {
            let a2 = a ^ a1;
            if a1 <= a2 {
                checked += 1;
                if !holds[a1] && !holds[a2] {
                    found.push((a1, a2));
                }
            }
            if a1 == a {
                break;
            }
            a1 = a1.wrapping_sub(a) & a;
        }
        (checked, found)
    });
    let rec = |m: usize| SetRecord::new(s, &SubsetMask::from_mask(s, m as u128).expect("mask fits"));
    let mut report = PartitionReport {
        spec: String::new(),
        property,
        sets_checked: subsets as u64,
        sets_with_property: holds.iter().filter(|&&h| h).count() as u64,
        partitions_checked: 0,
        violations: Vec::new(),
    };
    for (a, (checked, found)) in per_set.into_iter().enumerate() {
        report.partitions_checked += checked;
        for (a1, a2) in found {
            report.violations.push(PartitionViolation { set: rec(a), cell1: rec(a1), cell2: rec(a2) });
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::make_catalog;

    fn set(s: &Semigroup, text: &str) -> SubsetMask {
        SubsetMask::parse(s, text).unwrap()
    }

    #[test]
    fn full_set_lifts_everything() {
        let s = make_catalog("zadd:4").unwrap();
        let bx = AbundanceBox { l: 2, k: 1, r: 1 };
        let rep = abundance_experiment_comm(&s, &SubsetMask::full(&s), &bx, &ConstantSource::Fixed(vec![1]), &FamilySource::Exhaustive, &Limits::default()).unwrap();
        assert_eq!(rep.families_checked, 16);
        assert_eq!(rep.lifts_verified, rep.families_checked);
        assert_eq!(rep.lift_failures, 0);
    }

    #[test]
    fn comm_sweep_reports_per_constant() {
        let s = make_catalog("zadd:4").unwrap();
        let bx = AbundanceBox { l: 2, k: 1, r: 2 };
        let rep = abundance_experiment_comm(&s, &set(&s, "0,2"), &bx, &ConstantSource::Sweep, &FamilySource::Exhaustive, &Limits::default()).unwrap();
        assert_eq!(rep.per_constant.len(), 4);
        assert_eq!(rep.lift_failures, 0);
        assert_eq!(rep.families_checked, 4 * (16 + 256));
        assert_eq!(rep.witnesses_found + rep.no_witness, rep.families_checked);
    }

    /// Generic route: materialize the derived family and use the public lift.
    #[test]
    fn fast_path_matches_public_lift() {
        use crate::family::FunctionFamily;
        use crate::lift::{derive_comm_family, lift_comm_witness, CommLiftConstants};
        use crate::richness::find_j_witness;
        let s = make_catalog("zadd:3").unwrap();
        let a = set(&s, "0,1");
        let bx = AbundanceBox { l: 1, k: 2, r: 1 };
        let rep = abundance_experiment_comm(&s, &a, &bx, &ConstantSource::Fixed(vec![1]), &FamilySource::Exhaustive, &Limits::default()).unwrap();
        let prog = build_progression_set_comm(&s, &a, 1).unwrap();
        let consts = CommLiftConstants { b: 1, l: 1 };
        let (mut found, mut checked) = (0, 0);
        for fam in crate::family::enumerate_families(&prog.product, 2, 1).unwrap() {
            let fam: FunctionFamily = fam;
            checked += 1;
            let d = derive_comm_family(&s, &prog.product, &fam, &consts).unwrap();
            if let Some(w) = find_j_witness(&s, &a, &d).unwrap() {
                found += 1;
                lift_comm_witness(&s, &prog, &fam, &w, &consts).unwrap();
            }
        }
        assert_eq!((rep.families_checked, rep.witnesses_found), (checked, found));
    }

    #[test]
    fn noncomm_sampled_is_deterministic() {
        let s = make_catalog("freetrunc:2:2").unwrap();
        let bx = AbundanceBox { l: 2, k: 2, r: 2 };
        let c = ConstantSource::Sampled { count: 5, seed: 7 };
        let f = FamilySource::Sampled { count: 40, seed: 11 };
        let a = set(&s, "bot");
        let one = par::with_workers(1, || abundance_experiment_noncomm(&s, &a, &bx, &c, &f, &Limits::default()).unwrap());
        let three = par::with_workers(3, || abundance_experiment_noncomm(&s, &a, &bx, &c, &f, &Limits::default()).unwrap());
        assert_eq!(one, three);
        assert_eq!(one.per_constant.len(), 5);
        assert_eq!(one.families_checked, 5 * 80);
        assert_eq!(one.lift_failures, 0);
        assert_eq!(one.cr_embedding_failures, 0);
    }

    #[test]
    fn partition_finding_on_zadd4() {
        let s = make_catalog("zadd:4").unwrap();
        let rep = partition_regularity_experiment(&s, PartitionProperty::Scr, &Limits::default()).unwrap();
        let hit = rep.violations.iter().find(|v| v.set.mask == "f" && v.cell1.mask == "3");
        assert_eq!(hit.unwrap().cell2.labels, vec!["2", "3"]);
        // only the full set is SCR in a group
        assert_eq!(rep.sets_with_property, 1);
        assert_eq!(rep.partitions_checked, 8);
        assert_eq!(rep.violations.len(), 7);
    }
}
