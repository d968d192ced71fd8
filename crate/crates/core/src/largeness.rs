//! Syndetic, thick and piecewise syndetic sets in a finite semigroup.

use crate::error::{Error, Result};
use crate::par;
use crate::semigroup::{Elem, Semigroup, Side};
use crate::subset::SubsetMask;

/// Largest order for the literal thick-and-syndetic decomposition search.
pub const DEFAULT_PWS_CAP: usize = 14;

/// Orders up to this get an exact minimum-size cover; larger ones a greedy cover pruned to inclusion-minimal.
const EXACT_COVER_MAX: usize = 24;

/// `A` is syndetic when finitely many left quotients `t^{-1}A` cover `S`.
///
/// Returns an inclusion-minimal cover `F`: of least size when the order is
/// small enough for exhaustive search (ties broken lexicographically), otherwise
/// the greedy cover with redundant members dropped.
pub fn is_syndetic(s: &Semigroup, set: &SubsetMask) -> Result<(bool, Option<SubsetMask>)> {
    set.check_bound(s)?;
    let quotients: Vec<SubsetMask> =
        s.elements().map(|t| s.quotient(set, t, Side::Left)).collect::<Result<_>>()?;
    let mut all = SubsetMask::empty(s);
    for q in &quotients {
        all = all.union(q);
    }
    if !all.is_full() {
        return Ok((false, None));
    }
    let greedy = greedy_cover(s, &quotients);
    let cover = if s.order() <= EXACT_COVER_MAX {
        exact_cover(s, &quotients, greedy.len())
    } else {
        prune_cover(s, &quotients, greedy)
    };
    Ok((true, Some(SubsetMask::from_elems(s, cover)?)))
}

fn covers(s: &Semigroup, quotients: &[SubsetMask], picks: &[Elem]) -> bool {
    let mut u = SubsetMask::empty(s);
    for &t in picks {
        u = u.union(&quotients[t]);
    }
    u.is_full()
}

fn greedy_cover(s: &Semigroup, quotients: &[SubsetMask]) -> Vec<Elem> {
    let mut covered = SubsetMask::empty(s);
    let mut picks = Vec::new();
    while !covered.is_full() {
        let t = s
            .elements()
            .max_by_key(|&t| (quotients[t].difference(&covered).len(), std::cmp::Reverse(t)))
            .expect("non-empty semigroup");
        covered = covered.union(&quotients[t]);
        picks.push(t);
    }
    picks.sort_unstable();
    picks
}

fn prune_cover(s: &Semigroup, quotients: &[SubsetMask], mut picks: Vec<Elem>) -> Vec<Elem> {
    let mut i = 0;
    while i < picks.len() {
        let mut without = picks.clone();
        without.remove(i);
        if covers(s, quotients, &without) {
            picks = without;
        } else {
            i += 1;
        }
    }
    picks
}

/// Least-size cover, lexicographically first among those; `bound` is a known cover size.
fn exact_cover(s: &Semigroup, quotients: &[SubsetMask], bound: usize) -> Vec<Elem> {
    let n = s.order();
    for size in 1..=bound {
        let mut combo: Vec<Elem> = (0..size).collect();
        loop {
            if covers(s, quotients, &combo) {
                return combo;
            }
            // next combination in lexicographic order
            let mut i = size;
            while i > 0 && combo[i - 1] == n - size + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            combo[i - 1] += 1;
            for j in i..size {
                combo[j] = combo[j - 1] + 1;
            }
        }
    }
    unreachable!("greedy cover of size {bound} exists")
}

/// `A` is thick when it contains a translate of every finite set; in a finite
/// semigroup that is `S x ⊆ A` (right) or `x S ⊆ A` (left) for some `x`.
/// Returns the least such `x`.
pub fn is_thick(s: &Semigroup, set: &SubsetMask, side: Side) -> Result<(bool, Option<Elem>)> {
    set.check_bound(s)?;
    let full = SubsetMask::full(s);
    for x in s.elements() {
        if s.translate(&full, x, side)?.is_subset(set) {
            return Ok((true, Some(x)));
        }
    }
    Ok((false, None))
}

/// Bit tables for orders up to 63.
struct SmallTables {
    /// `cols[y]`: every `t * y`. `Sy` is syndetic iff each `cols[y]` meets it.
    cols: Vec<u64>,
    /// `trans[x]`: the translate `S x` or `x S`.
    trans: Vec<u64>,
}

impl SmallTables {
    fn new(s: &Semigroup, side: Side) -> SmallTables {
        let n = s.order();
        let mut cols = vec![0u64; n];
        let mut trans = vec![0u64; n];
        for a in 0..n {
            for b in 0..n {
                cols[b] |= 1 << s.mul(a, b);
                let t = match side {
                    Side::Right => s.mul(b, a),
                    Side::Left => s.mul(a, b),
                };
                trans[a] |= 1 << t;
            }
        }
        SmallTables { cols, trans }
    }

    #[inline]
    fn syndetic(&self, m: u64) -> bool {
        self.cols.iter().all(|&c| c & m != 0)
    }

    #[inline]
    fn thick(&self, m: u64) -> bool {
        self.trans.iter().any(|&t| t & !m == 0)
    }
}

/// Literal definition: `A = Sy ∩ Th` with `Sy` syndetic and `Th` thick.
///
/// Elements outside `A` are assigned to Sy only, Th only or neither. Assignments
/// are scanned as base-3 numbers, the lowest outside element being the most
/// significant digit, with digit order neither < Sy-only < Th-only; the first
/// valid decomposition is returned.
pub fn is_piecewise_syndetic(s: &Semigroup, set: &SubsetMask, side: Side) -> Result<(bool, Option<(SubsetMask, SubsetMask)>)> {
    is_piecewise_syndetic_capped(s, set, side, DEFAULT_PWS_CAP)
}

pub fn is_piecewise_syndetic_capped(
    s: &Semigroup,
    set: &SubsetMask,
    side: Side,
    cap: usize,
) -> Result<(bool, Option<(SubsetMask, SubsetMask)>)> {
    set.check_bound(s)?;
    let n = s.order();
    if n > cap || n > 40 {
        return Err(Error::CapExceeded { order: n, cap: cap.min(40) });
    }
    let tables = SmallTables::new(s, side);
    let base = set.as_u64().expect("order <= 40");
    let outside: Vec<usize> = (0..n).filter(|&e| !set.contains(e)).collect();
    let free = outside.len();
    let total = 3u64.pow(free as u32);
    // split the scan on the leading digit(s) so workers get contiguous ranges
    let lead = free.min(4);
    let blocks = 3u64.pow(lead as u32);
    let per = total / blocks;
    let found = par::map_range(blocks as usize, |b| {
        let lo = b as u64 * per;
        (lo..lo + per).find_map(|code| {
            let (sy, th) = decode_assignment(code, &outside, base);
            (tables.syndetic(sy) && tables.thick(th)).then_some((sy, th))
        })
    });
    let hit = found.into_iter().flatten().next();
    Ok(match hit {
        Some((sy, th)) => (
            true,
            Some((SubsetMask::from_mask(s, sy as u128)?, SubsetMask::from_mask(s, th as u128)?)),
        ),
        None => (false, None),
    })
}

fn decode_assignment(mut code: u64, outside: &[usize], base: u64) -> (u64, u64) {
    let (mut sy, mut th) = (base, base);
    for &e in outside.iter().rev() {
        match code % 3 {
            1 => sy |= 1 << e,
            2 => th |= 1 << e,
            _ => {}
        }
        code /= 3;
    }
    (sy, th)
}

/// Quotient form, kept separate from the literal definition: the union of all
/// left quotients `t^{-1}A` (the largest finite union) is thick.
pub fn pws_fastpath(s: &Semigroup, set: &SubsetMask, side: Side) -> Result<bool> {
    set.check_bound(s)?;
    let mut u = SubsetMask::empty(s);
    for t in s.elements() {
        u = u.union(&s.quotient(set, t, Side::Left)?);
    }
    Ok(is_thick(s, &u, side)?.0)
}
