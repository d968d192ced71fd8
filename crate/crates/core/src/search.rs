//! Minimal `(r, m)` certificates over a parameter box.
//!
//! Every sub-box is checked and recorded, so the returned frontier doubles as
//! a regression check: verdicts must be monotone in `r` (and in `m`), and for
//! k-SCR they must not depend on `r` at all.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::richness::{check_k_cr_comm_with, check_k_cr_with, check_k_scr_with, CheckOutcome, Limits, Verdict};
use crate::semigroup::Semigroup;
use crate::subset::SubsetMask;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParameterBox {
    pub k: usize,
    pub r_max: usize,
    pub m_max: Option<usize>,
}

impl ParameterBox {
    pub fn new(k: usize, r_max: usize, m_max: Option<usize>) -> Result<ParameterBox> {
        if k == 0 || r_max == 0 || m_max == Some(0) {
            return Err(Error::InvalidParameters("box bounds must be positive".into()));
        }
        if m_max.is_some_and(|m| m > r_max) {
            return Err(Error::InvalidParameters("m_max must not exceed r_max".into()));
        }
        Ok(ParameterBox { k, r_max, m_max })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CertificateKind {
    #[serde(rename = "kSCR")]
    KScr,
    #[serde(rename = "kCR")]
    KCr,
    #[serde(rename = "kCRcomm")]
    KCrComm,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrontierPoint {
    pub r: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub property: CertificateKind,
    pub k: usize,
    /// Least `(r, m)` at which the check holds.
    pub r: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    /// Holds: certificate found. Fails: provably fails at every box.
    /// Inconclusive: fails everywhere in the box but larger boxes might succeed.
    pub verdict: Verdict,
    pub frontier: Vec<FrontierPoint>,
    /// Outcome at the certificate, or at the largest box when there is none.
    #[serde(skip)]
    pub outcome: Option<CheckOutcome>,
}

/// Least `r <= r_cap` at which `A` is k-SCR. Failure at `r = 1` is final.
pub fn minimal_r_scr(s: &Semigroup, set: &SubsetMask, k: usize, r_cap: usize, limits: &Limits) -> Result<Certificate> {
    let bx = ParameterBox::new(k, r_cap, None)?;
    let mut frontier = Vec::new();
    let mut outcomes = Vec::new();
    for r in 1..=bx.r_max {
        let out = check_k_scr_with(s, set, k, r, limits)?;
        frontier.push(FrontierPoint { r, m: None, verdict: out.verdict });
        outcomes.push(out);
    }
    if frontier.iter().any(|p| p.verdict != frontier[0].verdict) {
        return Err(Error::MonotonicityViolation(format!("k-SCR verdict varies with r: {frontier:?}")));
    }
    let holds = frontier[0].verdict.holds();
    let outcome = if holds { outcomes.swap_remove(0) } else { outcomes.pop().expect("r_cap >= 1") };
    Ok(Certificate {
        property: CertificateKind::KScr,
        k,
        r: holds.then_some(1),
        m: None,
        verdict: Verdict::from_bool(holds),
        frontier,
        outcome: Some(outcome),
    })
}

/// Least `r <= r_cap` at which `A` is commutative k-CR.
pub fn minimal_r_cr_comm(s: &Semigroup, set: &SubsetMask, k: usize, r_cap: usize, limits: &Limits) -> Result<Certificate> {
    let bx = ParameterBox::new(k, r_cap, None)?;
    let mut frontier = Vec::new();
    let mut outcomes = Vec::new();
    for r in 1..=bx.r_max {
        let out = check_k_cr_comm_with(s, set, k, r, limits)?;
        frontier.push(FrontierPoint { r, m: None, verdict: out.verdict });
        outcomes.push(out);
    }
    check_monotone(&frontier, |a, b| a.r < b.r)?;
    let first = frontier.iter().position(|p| p.verdict.holds());
    finish(CertificateKind::KCrComm, k, set, frontier, outcomes, first)
}

/// Lexicographically least `(r, m)` in the box at which `A` is k-CR.
pub fn minimal_rm_cr(s: &Semigroup, set: &SubsetMask, bx: &ParameterBox, limits: &Limits) -> Result<Certificate> {
    let m_max = bx.m_max.unwrap_or(bx.r_max);
    let bx = ParameterBox::new(bx.k, bx.r_max, Some(m_max))?;
    let mut frontier = Vec::new();
    let mut outcomes = Vec::new();
    for r in 1..=bx.r_max {
        for m in 1..=r.min(m_max) {
            let out = check_k_cr_with(s, set, bx.k, r, m, limits)?;
            frontier.push(FrontierPoint { r, m: Some(m), verdict: out.verdict });
            outcomes.push(out);
        }
    }
    check_monotone(&frontier, |a, b| a.r <= b.r && a.m <= b.m && a != b)?;
    let first = frontier.iter().position(|p| p.verdict.holds());
    finish(CertificateKind::KCr, bx.k, set, frontier, outcomes, first)
}

/// Holds at `a` must imply holds at every `b` with `le(a, b)`.
fn check_monotone(frontier: &[FrontierPoint], le: impl Fn(&FrontierPoint, &FrontierPoint) -> bool) -> Result<()> {
    for a in frontier.iter().filter(|p| p.verdict.holds()) {
        if let Some(b) = frontier.iter().find(|b| le(a, b) && !b.verdict.holds()) {
            return Err(Error::MonotonicityViolation(format!(
                "holds at r={} m={:?} but fails at r={} m={:?}",
                a.r, a.m, b.r, b.m
            )));
        }
    }
    Ok(())
}

fn finish(
    property: CertificateKind,
    k: usize,
    set: &SubsetMask,
    frontier: Vec<FrontierPoint>,
    mut outcomes: Vec<CheckOutcome>,
    first: Option<usize>,
) -> Result<Certificate> {
    let (r, m, verdict, outcome) = match first {
        Some(i) => (Some(frontier[i].r), frontier[i].m, Verdict::Holds, outcomes.swap_remove(i)),
        // no witness can ever land in the empty set
        None if set.is_empty() => (None, None, Verdict::Fails, outcomes.pop().expect("non-empty box")),
        None => (None, None, Verdict::Inconclusive, outcomes.pop().expect("non-empty box")),
    };
    Ok(Certificate { property, k, r, m, verdict, frontier, outcome: Some(outcome) })
}
