use crlab::lift::{
    build_progression_set_comm, build_progression_set_noncomm, derive_comm_family, derive_noncomm_family,
    lift_comm_witness, lift_noncomm_witness, scr_shift_witness, CommLiftConstants, NoncommLiftConstants,
};
use crlab::oracle::naive_family_admits;
use crlab::richness::{cr_holds, find_cr_witness, find_j_witness, find_scr_witness, j_holds, scr_holds};
use crlab::{make_catalog, FunctionFamily, Property, Query, Semigroup, SemigroupSpec, Side, SubsetMask};
use proptest::prelude::*;

const SPECS: &[&str] = &[
    "zadd:3", "zadd:4", "zadd:5", "zmul:4", "zmul:6", "leftzero:2", "rightzero:3", "lz1:2", "lz1:3", "freetrunc:2:2",
    "freetrunc:1:3", "bool2x2",
];
const COMM: &[&str] = &["zadd:3", "zadd:4", "zmul:4", "zmul:5", "prod(zadd:2,zmul:3)"];
const SMALL: &[&str] = &["zadd:3", "lz1:2", "leftzero:2", "rightzero:2", "freetrunc:1:2", "zmul:3"];

fn pick(s: &Semigroup, raw: usize) -> usize {
    raw % s.order()
}

fn subset(s: &Semigroup, raw: u128) -> SubsetMask {
    let mask = if s.order() >= 128 { raw } else { raw & ((1u128 << s.order()) - 1) };
    SubsetMask::from_mask(s, mask).unwrap()
}

fn family(s: &Semigroup, raw: &[Vec<usize>], r: usize) -> FunctionFamily {
    let vals = raw.iter().map(|f| f.iter().take(r).map(|&v| pick(s, v)).collect()).collect();
    FunctionFamily::new(s, vals).unwrap()
}

fn raw_family() -> impl Strategy<Value = Vec<Vec<usize>>> {
    prop::collection::vec(prop::collection::vec(any::<usize>(), 3), 1..4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn products_are_associative(a in prop::sample::select(SMALL), b in prop::sample::select(SMALL)) {
        let p = SemigroupSpec::parse(&format!("prod({a},{b})")).unwrap().build().unwrap();
        prop_assert!(p.check_associative().is_ok());
        let fa = make_catalog(a).unwrap();
        let fb = make_catalog(b).unwrap();
        prop_assert_eq!(p.order(), fa.order() * fb.order());
        prop_assert_eq!(p.is_commutative(), fa.is_commutative() && fb.is_commutative());
    }

    #[test]
    fn power_law(spec in prop::sample::select(SPECS), x in any::<usize>(), i in 1usize..6, j in 1usize..6) {
        let s = make_catalog(spec).unwrap();
        let x = pick(&s, x);
        prop_assert_eq!(s.power(x, i + j).unwrap(), s.mul(s.power(x, i).unwrap(), s.power(x, j).unwrap()));
    }

    #[test]
    fn quotients_and_translates(spec in prop::sample::select(SPECS), raw in any::<u128>(), x in any::<usize>(), left in any::<bool>()) {
        let s = make_catalog(spec).unwrap();
        let a = subset(&s, raw);
        let x = pick(&s, x);
        let side = if left { Side::Left } else { Side::Right };
        let q = s.quotient(&a, x, side).unwrap();
        let t = s.translate(&a, x, side).unwrap();
        for y in s.elements() {
            let xy = if left { s.mul(x, y) } else { s.mul(y, x) };
            prop_assert_eq!(q.contains(y), a.contains(xy));
            if a.contains(y) {
                prop_assert!(t.contains(xy));
            }
        }
        prop_assert!(t.len() <= a.len());
    }

    #[test]
    fn overflow_absorbs(x in any::<usize>()) {
        let s = make_catalog("freetrunc:2:3").unwrap();
        let bot = s.index_of("bot").unwrap();
        let x = pick(&s, x);
        prop_assert_eq!(s.mul(x, bot), bot);
        prop_assert_eq!(s.mul(bot, x), bot);
    }

    #[test]
    fn subset_and_family_text_round_trip(spec in prop::sample::select(SPECS), raw in any::<u128>(), f in raw_family(), r in 1usize..4) {
        let s = make_catalog(spec).unwrap();
        let a = subset(&s, raw);
        prop_assert_eq!(&SubsetMask::parse(&s, &format!("mask:{}", a.to_hex())).unwrap(), &a);
        let labels: Vec<&str> = a.labels(&s);
        if !a.is_empty() && labels.iter().all(|l| !l.contains(',')) {
            prop_assert_eq!(&SubsetMask::parse(&s, &labels.join(",")).unwrap(), &a);
        }
        let fam = family(&s, &f, r);
        prop_assert_eq!(FunctionFamily::parse(&s, &fam.to_text(&s)).unwrap(), fam);
    }

    /// Reordering or repeating functions never changes the least witness.
    #[test]
    fn witnesses_ignore_order_and_repeats(spec in prop::sample::select(SPECS), raw in any::<u128>(), f in raw_family(), r in 1usize..4, rot in 0usize..4) {
        let s = make_catalog(spec).unwrap();
        let a = subset(&s, raw);
        let fam = family(&s, &f, r);
        let mut vals = fam.values().to_vec();
        let len = vals.len();
        vals.rotate_left(rot % len);
        vals.push(vals[0].clone());
        let shuffled = FunctionFamily::new(&s, vals).unwrap();
        prop_assert_eq!(find_scr_witness(&s, &a, &fam).unwrap(), find_scr_witness(&s, &a, &shuffled).unwrap());
        prop_assert_eq!(find_cr_witness(&s, &a, &fam, 1).unwrap(), find_cr_witness(&s, &a, &shuffled, 1).unwrap());
        prop_assert_eq!(fam.canonical(), shuffled.canonical());
    }

    /// Returned witnesses pass the plain predicates; absent witnesses agree with the naive search.
    #[test]
    fn witnesses_are_valid(spec in prop::sample::select(SPECS), raw in any::<u128>(), f in raw_family(), r in 1usize..3) {
        let s = make_catalog(spec).unwrap();
        let a = subset(&s, raw);
        let fam = family(&s, &f, r);
        let scr = find_scr_witness(&s, &a, &fam).unwrap();
        if let Some(w) = scr {
            prop_assert!(scr_holds(&s, &a, &fam, &w));
            prop_assert!(cr_holds(&s, &a, &fam, &w.to_cr()));
        }
        if s.order() <= 4 {
            let q = Query::new(Property::Kscr).with_box(fam.k(), r, 1);
            prop_assert_eq!(scr.is_some(), naive_family_admits(&s, &a, &fam, &q));
        }
        for m in 1..=r {
            if let Some(w) = find_cr_witness(&s, &a, &fam, m).unwrap() {
                prop_assert!(cr_holds(&s, &a, &fam, &w));
                prop_assert_eq!(w.m(), m);
            }
        }
        if s.is_commutative() {
            if let Some(w) = find_j_witness(&s, &a, &fam).unwrap() {
                prop_assert!(j_holds(&s, &a, &fam, &w));
            }
        }
    }

    #[test]
    fn comm_lifts_land_in_progression_set(spec in prop::sample::select(COMM), raw in any::<u128>(), f in raw_family(), r in 1usize..3, b in any::<usize>(), l in 1usize..4) {
        let s = make_catalog(spec).unwrap();
        let a = subset(&s, raw);
        let c = build_progression_set_comm(&s, &a, l).unwrap();
        let fam = family(&c.product, &f, r);
        let consts = CommLiftConstants { b: pick(&s, b), l };
        let derived = derive_comm_family(&s, &c.product, &fam, &consts).unwrap();
        prop_assert_eq!(derived.k(), (l + 1) * fam.k());
        if let Some(w) = find_j_witness(&s, &a, &derived).unwrap() {
            prop_assert!(lift_comm_witness(&s, &c, &fam, &w, &consts).is_ok());
        }
    }

    #[test]
    fn noncomm_lifts_land_in_progression_set(spec in prop::sample::select(SMALL), raw in any::<u128>(), f in raw_family(), r in 1usize..3, cs in prop::array::uniform4(any::<usize>()), l in 1usize..4) {
        let s = make_catalog(spec).unwrap();
        let a = subset(&s, raw);
        let d = build_progression_set_noncomm(&s, &a, l).unwrap();
        let fam = family(&d.product, &f, r);
        let consts = NoncommLiftConstants { a12: pick(&s, cs[0]), a13: pick(&s, cs[1]), a21: pick(&s, cs[2]), a23: pick(&s, cs[3]), l };
        let derived = derive_noncomm_family(&s, &d.product, &fam, &consts).unwrap();
        prop_assert_eq!(derived.k(), l * fam.k());
        if let Some(w) = find_scr_witness(&s, &a, &derived).unwrap() {
            prop_assert!(lift_noncomm_witness(&s, &d, &fam, &w, &consts).is_ok());
        }
    }

    #[test]
    fn shifted_witnesses_stay_valid(spec in prop::sample::select(SPECS), raw in any::<u128>(), f in raw_family(), r in 1usize..3, x in any::<usize>(), left in any::<bool>()) {
        let s = make_catalog(spec).unwrap();
        let a = subset(&s, raw);
        let fam = family(&s, &f, r);
        let side = if left { Side::Left } else { Side::Right };
        if let Some(w) = find_scr_witness(&s, &a, &fam).unwrap() {
            prop_assert!(scr_shift_witness(&s, &a, &fam, &w, pick(&s, x), side).is_ok());
        }
    }
}
