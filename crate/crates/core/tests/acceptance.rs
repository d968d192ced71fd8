//! Acceptance checks. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any fails. Criteria 1-8 run with 1 worker; they are then rerun
//! with 2 and 8 workers and their reports compared byte for byte.

use std::time::{Duration, Instant};

use crlab::experiment::{
    abundance_experiment_comm, abundance_experiment_noncomm, partition_regularity_experiment, AbundanceBox,
    AbundanceReport, ConstantSource, FamilySource, PartitionProperty,
};
use crlab::family::enumerate_families;
use crlab::lift::scr_shift_witness;
use crlab::oracle::{oracle_grid, OracleScale};
use crlab::richness::{check_cr_matrix, check_k_cr_comm, check_k_scr, cr_holds, find_scr_witness, is_scr};
use crlab::subset::all_subsets;
use crlab::{make_catalog, par, Limits, Property, Semigroup, Side, SubsetMask};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

struct Criterion {
    id: u32,
    name: &'static str,
    passed: bool,
    summary: String,
    report: Value,
    elapsed: Duration,
}

fn sets(s: &Semigroup) -> Vec<SubsetMask> {
    all_subsets(s).collect()
}

fn oracle_equivalence() -> (bool, String, Value) {
    let props = [
        Property::Syndetic,
        Property::Thick,
        Property::Pws,
        Property::Kscr,
        Property::Kcr,
        Property::KcrComm,
        Property::KcrMatrix,
    ];
    let mut ok = true;
    let mut total = 0;
    let mut rows = Vec::new();
    for spec in ["zadd:4", "zadd:3", "lz1:2", "leftzero:2", "rightzero:2"] {
        let s = make_catalog(spec).unwrap();
        let rep = oracle_grid(&s, &props, &OracleScale::default()).unwrap();
        ok &= rep.first_mismatch.is_none() && rep.instances == rep.agreements;
        total += rep.instances;
        rows.push(json!({ "spec": spec, "report": rep }));
    }
    (ok, format!("{total} instances over 5 semigroups, all agree"), Value::Array(rows))
}

fn summarize(rep: &AbundanceReport) -> Value {
    json!({
        "set": rep.set.mask, "l": rep.l, "families": rep.families_checked, "witnesses": rep.witnesses_found,
        "verified": rep.lifts_verified, "failures": rep.lift_failures, "cr_checked": rep.cr_embedding_checked,
        "cr_failures": rep.cr_embedding_failures,
        "per_constant": rep.per_constant.iter().map(|c| [c.witnesses_found, c.lift_failures]).collect::<Vec<_>>(),
    })
}

fn comm_lifts() -> (bool, String, Value) {
    let limits = Limits::default();
    let (mut failures, mut witnesses, mut families) = (0, 0, 0);
    let mut rows = Vec::new();
    for n in 3..=5 {
        let spec = format!("zadd:{n}");
        let s = make_catalog(&spec).unwrap();
        for a in sets(&s) {
            for l in 1..=2 {
                let bx = AbundanceBox { l, k: 2, r: 2 };
                let rep = abundance_experiment_comm(&s, &a, &bx, &ConstantSource::Sweep, &FamilySource::Exhaustive, &limits).unwrap();
                failures += rep.lift_failures;
                witnesses += rep.witnesses_found;
                families += rep.families_checked;
                rows.push(json!({ "spec": spec, "run": summarize(&rep) }));
            }
        }
    }
    (failures == 0, format!("{families} families, {witnesses} witnesses lifted, {failures} failures"), Value::Array(rows))
}

/// Non-commutative lift runs; also returns the CR-embedding tallies for criterion 4.
fn noncomm_lifts() -> ((bool, String, Value), (u64, u64)) {
    let limits = Limits::default();
    let (mut failures, mut witnesses, mut families, mut cr_checked, mut cr_failures) = (0, 0, 0, 0, 0);
    let mut rows = Vec::new();
    let mut tally = |spec: &str, rep: AbundanceReport| {
        failures += rep.lift_failures;
        witnesses += rep.witnesses_found;
        families += rep.families_checked;
        cr_checked += rep.cr_embedding_checked;
        cr_failures += rep.cr_embedding_failures;
        rows.push(json!({ "spec": spec, "run": summarize(&rep) }));
    };

    let lz = make_catalog("lz1:2").unwrap();
    for a in sets(&lz) {
        for l in 1..=2 {
            let bx = AbundanceBox { l, k: 2, r: 2 };
            tally("lz1:2", abundance_experiment_noncomm(&lz, &a, &bx, &ConstantSource::Sweep, &FamilySource::Exhaustive, &limits).unwrap());
        }
    }

    let ft = make_catalog("freetrunc:2:2").unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut collection = vec![SubsetMask::full(&ft), SubsetMask::parse(&ft, "bot").unwrap()];
    while collection.len() < 8 {
        let a = SubsetMask::from_mask(&ft, rng.gen_range(0..128u128)).unwrap();
        if !collection.contains(&a) {
            collection.push(a);
        }
    }
    let consts = ConstantSource::Sampled { count: 100, seed: 17 };
    let fams = FamilySource::Sampled { count: 150, seed: 29 };
    for a in &collection {
        for l in 1..=2 {
            let bx = AbundanceBox { l, k: 2, r: 2 };
            tally("freetrunc:2:2", abundance_experiment_noncomm(&ft, a, &bx, &consts, &fams, &limits).unwrap());
        }
    }
    (
        (failures == 0, format!("{families} families, {witnesses} witnesses lifted, {failures} failures"), Value::Array(rows)),
        (cr_checked, cr_failures),
    )
}

fn scr_embedding(from_lifts: (u64, u64)) -> (bool, String, Value) {
    let (mut checked, mut failures) = from_lifts;
    for spec in ["zadd:4", "zadd:3", "lz1:2", "leftzero:2", "rightzero:2"] {
        let s = make_catalog(spec).unwrap();
        for a in sets(&s) {
            for r in 1..=2 {
                for fam in enumerate_families(&s, 2, r).unwrap() {
                    if let Some(w) = find_scr_witness(&s, &a, &fam).unwrap() {
                        checked += 1;
                        failures += u64::from(!cr_holds(&s, &a, &fam, &w.to_cr()));
                    }
                }
            }
        }
    }
    (failures == 0, format!("{checked} SCR witnesses checked as CR, {failures} failures"), json!([checked, failures]))
}

fn small_catalog() -> Vec<String> {
    let mut specs = Vec::new();
    for n in 1..=4 {
        for name in ["zadd", "zmul", "leftzero", "rightzero"] {
            specs.push(format!("{name}:{n}"));
        }
    }
    specs.extend(["lz1:1", "lz1:2", "lz1:3", "freetrunc:1:1", "freetrunc:1:2", "freetrunc:1:3", "freetrunc:2:1", "freetrunc:3:1"].map(String::from));
    let twos = ["zadd:2", "zmul:2", "leftzero:2", "rightzero:2", "lz1:1", "freetrunc:1:1"];
    for (i, a) in twos.iter().enumerate() {
        for b in &twos[i..] {
            specs.push(format!("prod({a},{b})"));
        }
    }
    specs
}

fn column_collapse() -> (bool, String, Value) {
    let specs = small_catalog();
    let (mut instances, mut mismatches) = (0u64, Vec::new());
    for spec in &specs {
        let s = make_catalog(spec).unwrap();
        assert!(s.order() <= 4, "{spec}");
        for a in sets(&s) {
            for k in 1..=3 {
                let verdicts: Vec<_> = (1..=3).map(|r| check_k_scr(&s, &a, k, r).unwrap().verdict).collect();
                instances += 1;
                if verdicts.iter().any(|v| *v != verdicts[0]) {
                    mismatches.push(json!({ "spec": spec, "set": a.to_hex(), "k": k, "r_verdicts": verdicts }));
                }
            }
            instances += 1;
            let closed = is_scr(&s, &a).unwrap().is_some();
            if closed != check_k_scr(&s, &a, s.order(), 1).unwrap().verdict.holds() {
                mismatches.push(json!({ "spec": spec, "set": a.to_hex(), "closed_form": closed }));
            }
        }
    }
    (
        mismatches.is_empty(),
        format!("{} semigroups, {instances} comparisons, {} mismatches", specs.len(), mismatches.len()),
        json!({ "specs": specs, "mismatches": mismatches }),
    )
}

fn shift_transforms() -> (bool, String, Value) {
    let (mut checked, mut failures) = (0u64, 0u64);
    for spec in ["zadd:4", "lz1:2"] {
        let s = make_catalog(spec).unwrap();
        for a in sets(&s) {
            for k in 1..=2 {
                if !check_k_scr(&s, &a, k, 1).unwrap().verdict.holds() {
                    continue;
                }
                for r in 1..=2 {
                    for fam in enumerate_families(&s, k, r).unwrap() {
                        let w = find_scr_witness(&s, &a, &fam).unwrap().expect("k-SCR set admits a witness");
                        for x in s.elements() {
                            for side in [Side::Left, Side::Right] {
                                checked += 1;
                                failures += u64::from(scr_shift_witness(&s, &a, &fam, &w, x, side).is_err());
                            }
                        }
                    }
                }
            }
        }
    }
    (failures == 0, format!("{checked} shifted witnesses re-checked, {failures} failures"), json!([checked, failures]))
}

fn matrix_equivalence() -> (bool, String, Value) {
    let (mut instances, mut mismatches) = (0u64, Vec::new());
    for n in 1..=4 {
        let s = make_catalog(&format!("zadd:{n}")).unwrap();
        for a in sets(&s) {
            for k in 1..=2 {
                for r in 1..=2 {
                    instances += 1;
                    let m = check_cr_matrix(&s, &a, k, r).unwrap().verdict;
                    let c = check_k_cr_comm(&s, &a, k, r).unwrap().verdict;
                    if m != c {
                        mismatches.push(json!({ "n": n, "set": a.to_hex(), "k": k, "r": r }));
                    }
                }
            }
        }
    }
    (mismatches.is_empty(), format!("{instances} instances, {} mismatches", mismatches.len()), json!(mismatches))
}

fn partition_finding() -> (bool, String, Value) {
    let s = make_catalog("zadd:4").unwrap();
    let run = || {
        let mut rep = partition_regularity_experiment(&s, PartitionProperty::Scr, &Limits::default()).unwrap();
        rep.spec = "zadd:4".into();
        serde_json::to_string(&rep).unwrap()
    };
    let (first, second) = (run(), run());
    let rep: Value = serde_json::from_str(&first).unwrap();
    let violations = rep["violations"].as_array().unwrap();
    let found = violations.iter().any(|v| {
        v["set"]["labels"] == json!(["0", "1", "2", "3"])
            && v["cell1"]["labels"] == json!(["0", "1"])
            && v["cell2"]["labels"] == json!(["2", "3"])
    });
    (
        found && first == second,
        format!("{} violations; A=S split {{0,1}}/{{2,3}} recorded: {found}; repeat identical: {}", violations.len(), first == second),
        rep,
    )
}

fn run_all(workers: usize) -> Vec<Criterion> {
    par::with_workers(workers, || {
        let mut out = Vec::new();
        let mut timed = |id, name, f: &mut dyn FnMut() -> (bool, String, Value)| {
            let t = Instant::now();
            let (passed, summary, report) = f();
            out.push(Criterion { id, name, passed, summary, report, elapsed: t.elapsed() });
        };
        timed(1, "oracle equivalence", &mut oracle_equivalence);
        timed(2, "commutative lift soundness", &mut comm_lifts);
        let mut embed = (0, 0);
        timed(3, "non-commutative lift soundness", &mut || {
            let (res, cr) = noncomm_lifts();
            embed = cr;
            res
        });
        timed(4, "SCR witnesses embed as CR witnesses", &mut || scr_embedding(embed));
        timed(5, "column collapse and closed form", &mut column_collapse);
        timed(6, "shift transforms", &mut shift_transforms);
        timed(7, "matrix form vs commutative k-CR", &mut matrix_equivalence);
        timed(8, "partition experiment finding and determinism", &mut partition_finding);
        out
    })
}

fn main() {
    let base = run_all(1);
    let mut all_ok = true;
    for c in &base {
        let mut passed = c.passed;
        let mut summary = c.summary.clone();
        if c.id == 1 && c.elapsed > Duration::from_secs(300) {
            passed = false;
            summary.push_str("; exceeded 5 minutes");
        }
        all_ok &= passed;
        let verdict = if passed { "PASS" } else { "FAIL" };
        println!("{verdict} criterion {} ({}): {summary} [{:.1}s]", c.id, c.name, c.elapsed.as_secs_f64());
    }

    let mut differing = Vec::new();
    for w in [2, 8] {
        for (a, b) in base.iter().zip(run_all(w)) {
            if serde_json::to_string(&a.report).unwrap() != serde_json::to_string(&b.report).unwrap() || a.passed != b.passed {
                differing.push(format!("{} at {w} workers", a.id));
            }
        }
    }
    let ok9 = differing.is_empty();
    all_ok &= ok9;
    let detail = if ok9 { "reports of criteria 1-8 identical for 1, 2 and 8 workers".to_string() } else { format!("differences: {}", differing.join(", ")) };
    println!("{} criterion 9 (determinism under parallelism): {detail}", if ok9 { "PASS" } else { "FAIL" });

    if !all_ok {
        std::process::exit(1);
    }
}
