//! Per-subset verdicts for every property, one row per subset in mask order.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::largeness::{is_piecewise_syndetic_capped, is_syndetic, is_thick, pws_fastpath};
use crate::par;
use crate::richness::{check_k_scr_with, is_scr, Limits};
use crate::search::{minimal_r_cr_comm, minimal_rm_cr, ParameterBox};
use crate::semigroup::{Semigroup, Side};
use crate::subset::SubsetMask;

pub const SURVEY_ORDER_CAP: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SurveyBox {
    pub k: usize,
    pub rcap: usize,
    /// Defaults to `rcap`.
    pub mcap: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurveyRow {
    pub mask: String,
    pub labels: Vec<String>,
    pub syndetic: bool,
    pub thick_right: bool,
    pub thick_left: bool,
    /// Literal decomposition search (right side); `None` above the order cap.
    pub pws: Option<bool>,
    pub pws_fast: bool,
    pub scr: bool,
    /// k-SCR at `r = rcap`.
    pub kscr: bool,
    /// k-CR at some `(r, m)` with `r <= rcap`, `m <= mcap`.
    pub kcr: bool,
    /// Commutative k-CR at some `r <= rcap`; `None` for non-commutative semigroups.
    pub kcr_comm: Option<bool>,
}

pub const SURVEY_COLUMNS: [&str; 11] =
    ["mask", "labels", "syndetic", "thick_right", "thick_left", "pws", "pws_fast", "scr", "kscr", "kcr", "kcr_comm"];

fn row(s: &Semigroup, set: &SubsetMask, bx: &SurveyBox, limits: &Limits) -> Result<SurveyRow> {
    let pws = match is_piecewise_syndetic_capped(s, set, Side::Right, limits.pws_cap) {
        Ok((b, _)) => Some(b),
        Err(Error::CapExceeded { .. }) => None,
        Err(e) => return Err(e),
    };
    let pbox = ParameterBox::new(bx.k, bx.rcap, Some(bx.mcap.unwrap_or(bx.rcap).min(bx.rcap)))?;
    let kcr_comm = if s.is_commutative() {
        Some(minimal_r_cr_comm(s, set, bx.k, bx.rcap, limits)?.verdict.holds())
    } else {
        None
    };
    Ok(SurveyRow {
        mask: set.to_hex(),
        labels: set.labels(s).into_iter().map(String::from).collect(),
        syndetic: is_syndetic(s, set)?.0,
        thick_right: is_thick(s, set, Side::Right)?.0,
        thick_left: is_thick(s, set, Side::Left)?.0,
        pws,
        pws_fast: pws_fastpath(s, set, Side::Right)?,
        scr: is_scr(s, set)?.is_some(),
        kscr: check_k_scr_with(s, set, bx.k, bx.rcap, limits)?.verdict.holds(),
        kcr: minimal_rm_cr(s, set, &pbox, limits)?.verdict.holds(),
        kcr_comm,
    })
}

/// All `2^n` subsets of `s`, ascending by mask.
pub fn survey(s: &Semigroup, bx: &SurveyBox, limits: &Limits) -> Result<Vec<SurveyRow>> {
    let n = s.order();
    if n > SURVEY_ORDER_CAP {
        return Err(Error::CapExceeded { order: n, cap: SURVEY_ORDER_CAP });
    }
    ParameterBox::new(bx.k, bx.rcap, None)?;
    par::map_range(1 << n, |m| row(s, &SubsetMask::from_mask(s, m as u128)?, bx, limits)).into_iter().collect()
}

pub fn survey_csv(rows: &[SurveyRow]) -> String {
    let flag = |b: Option<bool>| b.map(|b| b.to_string()).unwrap_or_default();
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(SURVEY_COLUMNS).expect("in-memory csv");
    for r in rows {
        w.write_record([
            r.mask.clone(),
            r.labels.join(" "),
            r.syndetic.to_string(),
            r.thick_right.to_string(),
            r.thick_left.to_string(),
            flag(r.pws),
            r.pws_fast.to_string(),
            r.scr.to_string(),
            r.kscr.to_string(),
            r.kcr.to_string(),
            flag(r.kcr_comm),
        ])
        .expect("in-memory csv");
    }
    String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf-8")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::make_catalog;

    #[test]
    fn zadd4_extremes() {
        let s = make_catalog("zadd:4").unwrap();
        let rows = survey(&s, &SurveyBox { k: 2, rcap: 2, mcap: None }, &Limits::default()).unwrap();
        assert_eq!(rows.len(), 16);
        let full = &rows[15];
        assert_eq!(full.mask, "f");
        assert!(full.syndetic && full.thick_right && full.thick_left && full.pws_fast && full.scr && full.kscr && full.kcr);
        assert_eq!((full.pws, full.kcr_comm), (Some(true), Some(true)));
        let empty = &rows[0];
        assert!(!(empty.syndetic || empty.thick_right || empty.thick_left || empty.pws_fast || empty.scr || empty.kscr || empty.kcr));
        assert_eq!((empty.pws, empty.kcr_comm), (Some(false), Some(false)));
    }

    #[test]
    fn lz1_rows_and_csv() {
        let s = make_catalog("lz1:2").unwrap();
        let rows = survey(&s, &SurveyBox { k: 1, rcap: 1, mcap: None }, &Limits::default()).unwrap();
        assert_eq!(rows.len(), 8);
        assert!(rows.iter().all(|r| r.kcr_comm.is_none()));
        let text = survey_csv(&rows);
        assert_eq!(text.lines().count(), 9);
        assert_eq!(text.lines().next().unwrap(), SURVEY_COLUMNS.join(","));
    }
}
