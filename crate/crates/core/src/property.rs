use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::largeness::{is_piecewise_syndetic_capped, is_syndetic, is_thick};
use crate::richness::{
    check_cr_matrix_with, check_k_cr_comm_with, check_k_cr_with, check_k_scr_with, is_scr, CheckOutcome, Limits,
    Verdict,
};
use crate::semigroup::{Semigroup, Side};
use crate::subset::SubsetMask;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    Syndetic,
    Thick,
    Pws,
    Jset,
    Kcr,
    KcrComm,
    KcrMatrix,
    Kscr,
    Scr,
}

impl Property {
    pub const ALL: [Property; 9] = [
        Property::Syndetic,
        Property::Thick,
        Property::Pws,
        Property::Jset,
        Property::Kcr,
        Property::KcrComm,
        Property::KcrMatrix,
        Property::Kscr,
        Property::Scr,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::Syndetic => "syndetic",
            Property::Thick => "thick",
            Property::Pws => "pws",
            Property::Jset => "jset",
            Property::Kcr => "kcr",
            Property::KcrComm => "kcr-comm",
            Property::KcrMatrix => "kcr-matrix",
            Property::Kscr => "kscr",
            Property::Scr => "scr",
        }
    }

    /// Whether the verdict depends on a `(k, r)` family box.
    pub fn uses_families(self) -> bool {
        matches!(self, Property::Kcr | Property::KcrComm | Property::KcrMatrix | Property::Kscr | Property::Jset)
    }

    pub fn needs_commutative(self) -> bool {
        matches!(self, Property::KcrComm | Property::KcrMatrix | Property::Jset)
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Property> {
        Property::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown property `{s}`")))
    }
}

/// A property together with the box it is evaluated at.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Query {
    pub property: Property,
    pub k: usize,
    pub r: usize,
    pub m: usize,
    pub side: Side,
}

impl Query {
    pub fn new(property: Property) -> Query {
        Query { property, k: 1, r: 1, m: 1, side: Side::Right }
    }

    pub fn with_box(mut self, k: usize, r: usize, m: usize) -> Query {
        self.k = k;
        self.r = r;
        self.m = m;
        self
    }

    pub fn with_side(mut self, side: Side) -> Query {
        self.side = side;
        self
    }
}

fn plain(verdict: bool) -> CheckOutcome {
    CheckOutcome {
        k: 0,
        r: 0,
        m: None,
        verdict: Verdict::from_bool(verdict),
        counterexample: None,
        families_scanned: 0,
        families_pruned: 0,
    }
}

/// Runs the optimized checker for `q`. `Jset` needs an explicit family and is rejected here.
pub fn evaluate(s: &Semigroup, set: &SubsetMask, q: &Query, limits: &Limits) -> Result<CheckOutcome> {
    match q.property {
        Property::Syndetic => Ok(plain(is_syndetic(s, set)?.0)),
        Property::Thick => Ok(plain(is_thick(s, set, q.side)?.0)),
        Property::Pws => Ok(plain(is_piecewise_syndetic_capped(s, set, q.side, limits.pws_cap)?.0)),
        Property::Scr => Ok(plain(is_scr(s, set)?.is_some())),
        Property::Kscr => check_k_scr_with(s, set, q.k, q.r, limits),
        Property::Kcr => check_k_cr_with(s, set, q.k, q.r, q.m, limits),
        Property::KcrComm => check_k_cr_comm_with(s, set, q.k, q.r, limits),
        Property::KcrMatrix => check_cr_matrix_with(s, set, q.k, q.r, limits),
        Property::Jset => Err(Error::InvalidParameters("jset is checked against an explicit family".into())),
    }
}
