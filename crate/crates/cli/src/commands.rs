//! Subcommand dispatch. Everything here is plumbing around library calls.

use std::time::Instant;

use anyhow::{bail, Context, Result};
use crlab::experiment::{
    abundance_experiment_comm, abundance_experiment_noncomm, partition_regularity_experiment, AbundanceBox,
    ConstantSource, FamilySource, PartitionProperty,
};
use crlab::largeness::{is_piecewise_syndetic_capped, is_syndetic, is_thick};
use crlab::oracle::{oracle_grid, OracleScale};
use crlab::report::{RunReport, SetRecord};
use crlab::richness::{find_cr_witness, find_j_witness, find_scr_witness, is_scr};
use crlab::search::{minimal_r_cr_comm, minimal_r_scr, minimal_rm_cr, ParameterBox};
use crlab::semigroup::DEFAULT_ORDER_CAP;
use crlab::survey::{survey, survey_csv, SurveyBox};
use crlab::{evaluate, par, Error, FunctionFamily, Limits, Property, Query, Semigroup, SemigroupSpec, Side, SubsetMask, Verdict};
use serde_json::{json, Value};

use crate::config::Config;
use crate::{CheckArgs, Cli, Command, Format, LiftArgs, LiftMode, Minimal, OracleArgs, PartitionArgs, SearchArgs, SurveyArgs, Target};

struct Settings {
    workers: usize,
    order_cap: usize,
    limits: Limits,
}

fn settings(cli: &Cli) -> Result<Settings> {
    let cfg = match &cli.config {
        Some(path) => Config::load(path)?,
        None => Config::default(),
    };
    let mut limits = Limits::default();
    if let Some(c) = cli.search_cap.or(cfg.search_cap) {
        limits.search_cap = c;
    }
    if let Some(c) = cfg.pws_cap {
        limits.pws_cap = c;
    }
    let workers = cli.workers.or(cfg.workers).unwrap_or_else(par::default_workers);
    if workers == 0 {
        bail!("--workers must be at least 1");
    }
    Ok(Settings { workers, order_cap: cli.order_cap.or(cfg.order_cap).unwrap_or(DEFAULT_ORDER_CAP), limits })
}

pub fn run(cli: &Cli) -> Result<u8> {
    let st = settings(cli)?;
    par::with_workers(st.workers, || match &cli.command {
        Command::Check(a) => check(a, &st),
        Command::Search(a) => search(a, &st),
        Command::Lift(a) => lift(a, &st),
        Command::Survey(a) => cmd_survey(a, &st),
        Command::Oracle(a) => oracle(a, &st),
        Command::Partition(a) => partition(a, &st),
    })
}

fn load(spec: &str, st: &Settings) -> Result<Semigroup> {
    let parsed = SemigroupSpec::parse(spec)?;
    parsed.build_capped(st.order_cap).with_context(|| format!("building `{spec}`"))
}

fn load_target(t: &Target, st: &Settings) -> Result<(Semigroup, SubsetMask)> {
    let s = load(&t.semigroup, st)?;
    let set = SubsetMask::parse(&s, &t.set).with_context(|| format!("parsing set `{}`", t.set))?;
    Ok((s, set))
}

fn exit_code(v: Verdict) -> u8 {
    match v {
        Verdict::Holds => 0,
        Verdict::Fails => 1,
        Verdict::Inconclusive => 2,
    }
}

fn emit(report: &RunReport, format: Format) {
    match format {
        Format::Json => println!("{}", report.to_json()),
        Format::Csv => print!("{}", report.to_csv()),
    }
}

fn base_report(spec: &str, property: &str, s: &Semigroup, set: &SubsetMask, st: &Settings) -> RunReport {
    let mut rep = RunReport::new(spec, property, Verdict::Inconclusive);
    rep.set = Some(SetRecord::new(s, set));
    rep.workers = st.workers;
    rep
}

fn elems(set: &SubsetMask) -> Vec<usize> {
    set.iter().collect()
}

/// Witness for the properties that are decided without families.
fn plain_witness(s: &Semigroup, set: &SubsetMask, p: Property, side: Side, limits: &Limits) -> Result<Option<Value>> {
    Ok(match p {
        Property::Syndetic => is_syndetic(s, set)?.1.map(|f| json!({ "cover": elems(&f) })),
        Property::Thick => is_thick(s, set, side)?.1.map(|x| json!({ "x": x })),
        Property::Pws => is_piecewise_syndetic_capped(s, set, side, limits.pws_cap)?
            .1
            .map(|(sy, th)| json!({ "syndetic": elems(&sy), "thick": elems(&th) })),
        Property::Scr => is_scr(s, set)?.map(|(a1, a2)| json!({ "a1": a1, "a2": a2 })),
        _ => None,
    })
}

fn check(a: &CheckArgs, st: &Settings) -> Result<u8> {
    let started = Instant::now();
    let (s, set) = load_target(&a.target, st)?;
    let property: Property = a.property.parse()?;
    let side: Side = a.side.parse()?;
    let mut rep = base_report(&a.target.semigroup, property.name(), &s, &set, st);
    if matches!(property, Property::Thick | Property::Pws) {
        rep.side = Some(side.as_str().to_string());
    }
    if let Some(path) = &a.family {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let family = FunctionFamily::parse(&s, &text)?;
        rep.k = Some(family.k());
        rep.r = Some(family.r());
        let witness = match property {
            Property::Jset | Property::KcrComm | Property::KcrMatrix => {
                find_j_witness(&s, &set, &family)?.map(|w| serde_json::to_value(w).expect("plain data"))
            }
            Property::Kcr => {
                rep.m = Some(a.m);
                find_cr_witness(&s, &set, &family, a.m)?.map(|w| serde_json::to_value(w).expect("plain data"))
            }
            Property::Kscr | Property::Scr => {
                find_scr_witness(&s, &set, &family)?.map(|w| serde_json::to_value(w).expect("plain data"))
            }
            _ => bail!("--family only applies to jset, kcr, kcr-comm, kcr-matrix, kscr and scr"),
        };
        rep.verdict = Verdict::from_bool(witness.is_some());
        rep.witness = witness;
        rep.families_scanned = 1;
    } else {
        let q = Query::new(property).with_box(a.k, a.r, a.m).with_side(side);
        match evaluate(&s, &set, &q, &st.limits) {
            Ok(outcome) => {
                rep.absorb(&outcome);
                if !property.uses_families() {
                    (rep.k, rep.r, rep.m) = (None, None, None);
                    if outcome.verdict.holds() {
                        rep.witness = plain_witness(&s, &set, property, side, &st.limits)?;
                    }
                }
            }
            Err(e @ (Error::SearchSpaceCap { .. } | Error::CapExceeded { .. })) => {
                eprintln!("inconclusive: {e}");
                rep.verdict = Verdict::Inconclusive;
            }
            Err(e) => return Err(e.into()),
        }
    }
    rep.ms = started.elapsed().as_millis() as u64;
    emit(&rep, a.format);
    Ok(exit_code(rep.verdict))
}

fn search(a: &SearchArgs, st: &Settings) -> Result<u8> {
    let started = Instant::now();
    let (s, set) = load_target(&a.target, st)?;
    let cert = match a.minimal {
        Minimal::R => match a.property.parse::<Property>()? {
            Property::Kscr => minimal_r_scr(&s, &set, a.k, a.rcap, &st.limits)?,
            Property::KcrComm => minimal_r_cr_comm(&s, &set, a.k, a.rcap, &st.limits)?,
            other => bail!("--minimal r supports kscr and kcr-comm, not {}", other.name()),
        },
        Minimal::Rm => minimal_rm_cr(&s, &set, &ParameterBox::new(a.k, a.rcap, a.mcap)?, &st.limits)?,
    };
    let property = match a.minimal {
        Minimal::R => a.property.as_str(),
        Minimal::Rm => "kcr",
    };
    let mut rep = base_report(&a.target.semigroup, property, &s, &set, st);
    if let Some(out) = &cert.outcome {
        rep.absorb(out);
    }
    rep.k = Some(cert.k);
    rep.r = cert.r;
    rep.m = cert.m;
    rep.verdict = cert.verdict;
    rep.witness = cert.r.map(|r| json!({ "r": r, "m": cert.m }));
    rep.details = Some(serde_json::to_value(&cert)?);
    rep.ms = started.elapsed().as_millis() as u64;
    emit(&rep, a.format);
    Ok(exit_code(rep.verdict))
}

fn element_list(s: &Semigroup, text: &str) -> Result<Vec<usize>> {
    text.split(',').map(|l| s.index_of(l.trim()).map_err(Into::into)).collect()
}

fn lift(a: &LiftArgs, st: &Settings) -> Result<u8> {
    let started = Instant::now();
    let (s, set) = load_target(&a.target, st)?;
    let constants = if let Some(b) = &a.b {
        ConstantSource::Fixed(element_list(&s, b)?)
    } else if let Some(c) = &a.consts {
        ConstantSource::Fixed(element_list(&s, c)?)
    } else if let Some(count) = a.sample_consts {
        ConstantSource::Sampled { count, seed: a.seed }
    } else {
        ConstantSource::Sweep
    };
    let families = match a.sample_families {
        Some(count) => FamilySource::Sampled { count, seed: a.seed },
        None => FamilySource::Exhaustive,
    };
    let bx = AbundanceBox { l: a.l, k: a.k, r: a.r };
    let mut report = match a.mode {
        LiftMode::Comm => abundance_experiment_comm(&s, &set, &bx, &constants, &families, &st.limits)?,
        LiftMode::Noncomm => abundance_experiment_noncomm(&s, &set, &bx, &constants, &families, &st.limits)?,
    };
    report.spec = a.target.semigroup.clone();
    if let Some(f) = &report.first_failure {
        eprintln!("lift verification failed: constants {:?}, family {:?}, {}", f.constants, f.family, f.witness);
    }
    let name = match a.mode {
        LiftMode::Comm => "lift-comm",
        LiftMode::Noncomm => "lift-noncomm",
    };
    let mut rep = base_report(&a.target.semigroup, name, &s, &set, st);
    rep.k = Some(a.k);
    rep.r = Some(a.r);
    rep.verdict = Verdict::from_bool(report.lift_failures == 0);
    rep.families_scanned = report.families_checked;
    rep.details = Some(serde_json::to_value(&report)?);
    rep.ms = started.elapsed().as_millis() as u64;
    emit(&rep, a.format);
    Ok(exit_code(rep.verdict))
}

fn cmd_survey(a: &SurveyArgs, st: &Settings) -> Result<u8> {
    let s = load(&a.semigroup, st)?;
    let rows = survey(&s, &SurveyBox { k: a.k, rcap: a.rcap, mcap: a.mcap }, &st.limits)?;
    let text = match a.format {
        Format::Json => {
            let doc = json!({ "spec": a.semigroup, "k": a.k, "rcap": a.rcap, "mcap": a.mcap, "rows": rows });
            serde_json::to_string_pretty(&doc)? + "\n"
        }
        Format::Csv => survey_csv(&rows),
    };
    std::fs::write(&a.out, text).with_context(|| format!("writing {}", a.out.display()))?;
    println!("{}", json!({ "spec": a.semigroup, "rows": rows.len(), "out": a.out }));
    Ok(0)
}

fn oracle(a: &OracleArgs, st: &Settings) -> Result<u8> {
    let s = load(&a.semigroup, st)?;
    let scale = OracleScale { max_k: a.k, max_r: a.r, max_m: a.m, ..OracleScale::default() };
    let report = oracle_grid(&s, &Property::ALL, &scale)?;
    println!("{}", serde_json::to_string_pretty(&json!({ "spec": a.semigroup, "report": report }))?);
    if let Some(m) = &report.first_mismatch {
        eprintln!("mismatch: {}", serde_json::to_string(m)?);
        return Ok(1);
    }
    Ok(0)
}

fn partition(a: &PartitionArgs, st: &Settings) -> Result<u8> {
    let s = load(&a.semigroup, st)?;
    let property = match a.property.as_str() {
        "scr" => PartitionProperty::Scr,
        "kscr" => PartitionProperty::Kscr { k: a.k, r: a.r },
        "kcr" => PartitionProperty::Kcr { k: a.k, r: a.r, m: a.m },
        other => bail!("partition property must be scr, kscr or kcr, not `{other}`"),
    };
    let mut report = partition_regularity_experiment(&s, property, &st.limits)?;
    report.spec = a.semigroup.clone();
    println!("{}", serde_json::to_string_pretty(&report)?);
    Ok(0)
}
