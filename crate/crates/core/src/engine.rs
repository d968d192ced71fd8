//! Sweep over canonical families using per-function witness masks.
//!
//! Every function gets a block of `width` words: the set of witnesses it
//! admits, one segment per column slot. A family admits a witness iff the AND
//! of its members' blocks is non-zero. Families are visited depth-first in
//! canonical order, so the intersection of a prefix is reused by all of its
//! extensions, and the first empty intersection met is the least
//! counterexample. The top-level branches (first function) run in parallel.

use std::sync::atomic::{AtomicU64, Ordering};

use crate::bitset::{and_into, any_set};
use crate::family::decode_function;
use crate::par;
use crate::semigroup::Elem;

pub(crate) struct MaskTable {
    funcs: u64,
    width: usize,
    data: Vec<u64>,
}

impl MaskTable {
    /// Fills the block of every function with `fill(values, block)`.
    pub fn build<F>(order: usize, r: usize, funcs: u64, width: usize, fill: F) -> MaskTable
    where
        F: Fn(&[Elem], &mut [u64]) + Sync + Send,
    {
        const CHUNK: u64 = 1024;
        let chunks = funcs.div_ceil(CHUNK) as usize;
        let parts = par::map_range(chunks, |c| {
            let lo = c as u64 * CHUNK;
            let hi = (lo + CHUNK).min(funcs);
            let mut out = vec![0u64; (hi - lo) as usize * width];
            for (f, block) in (lo..hi).zip(out.chunks_mut(width.max(1))) {
                fill(&decode_function(f, order, r), block);
            }
            out
        });
        MaskTable { funcs, width, data: parts.concat() }
    }

    #[inline]
    pub fn block(&self, f: u64) -> &[u64] {
        let w = self.width;
        &self.data[f as usize * w..(f as usize + 1) * w]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Sweep {
    /// Least family (function indices) whose intersection is empty.
    pub counterexample: Option<Vec<u64>>,
    /// Families visited in canonical order up to and including the counterexample.
    pub scanned: u128,
}

struct Branch {
    failure: Option<Vec<u64>>,
    scanned: u128,
}

const ABORTED: u64 = u64::MAX;

/// Least canonical family of at most `k` functions with no common witness.
pub(crate) fn first_failure(table: &MaskTable, k: usize) -> Sweep {
    let best = AtomicU64::new(ABORTED);
    let branches = par::map_range(table.funcs as usize, |f1| {
        let f1 = f1 as u64;
        if best.load(Ordering::Relaxed) < f1 {
            return Branch { failure: None, scanned: 0 };
        }
        let res = branch_failure(table, k, f1, &best);
        if res.failure.is_some() {
            best.fetch_min(f1, Ordering::Relaxed);
        }
        res
    });
    let mut scanned = 0u128;
    for b in branches {
        scanned += b.scanned;
        if b.failure.is_some() {
            return Sweep { counterexample: b.failure, scanned };
        }
    }
    Sweep { counterexample: None, scanned }
}

fn branch_failure(table: &MaskTable, k: usize, f1: u64, best: &AtomicU64) -> Branch {
    let w = table.width;
    let root = table.block(f1);
    if !any_set(root) {
        return Branch { failure: Some(vec![f1]), scanned: 1 };
    }
    let mut scanned = 1u128;
    if k == 1 {
        return Branch { failure: None, scanned };
    }
    let mut buf = vec![0u64; (k - 1) * w];
    let mut path = vec![f1];
    let mut ctx = Dfs { table, k, scanned: &mut scanned, path: &mut path, best, f1 };
    let failed = ctx.descend(root, &mut buf);
    Branch { failure: failed.then_some(path), scanned }
}

struct Dfs<'a> {
    table: &'a MaskTable,
    k: usize,
    scanned: &'a mut u128,
    path: &'a mut Vec<u64>,
    best: &'a AtomicU64,
    f1: u64,
}

impl Dfs<'_> {
    /// Visits all extensions of the current path; `true` when a failure was found
    /// (left in `path`).
    fn descend(&mut self, cur: &[u64], buf: &mut [u64]) -> bool {
        let w = self.table.width;
        let (next, rest) = buf.split_at_mut(w);
        let last = *self.path.last().unwrap();
        for g in last + 1..self.table.funcs {
            and_into(next, cur, self.table.block(g));
            *self.scanned += 1;
            self.path.push(g);
            if !any_set(next) {
                return true;
            }
            if self.path.len() < self.k && self.descend(next, rest) {
                return true;
            }
            self.path.pop();
            if *self.scanned & 0xfff == 0 && self.best.load(Ordering::Relaxed) < self.f1 {
                // an earlier branch already failed; this branch's result is unused
                return false;
            }
        }
        false
    }
}

/// Calls `visit(acc, family, intersection)` on every canonical family of at
/// most `k` functions. Branch accumulators come back in branch order.
pub(crate) fn visit_all<A, I, V>(table: &MaskTable, k: usize, init: I, visit: V) -> Vec<A>
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    V: Fn(&mut A, &[u64], &[u64]) + Sync + Send,
{
    par::map_range(table.funcs as usize, |f1| {
        let mut acc = init();
        let f1 = f1 as u64;
        let root = table.block(f1);
        let mut path = vec![f1];
        visit(&mut acc, &path, root);
        if k > 1 {
            let mut buf = vec![0u64; (k - 1) * table.width];
            walk(table, k, root, &mut buf, &mut path, &mut acc, &visit);
        }
        acc
    })
}

fn walk<A, V>(table: &MaskTable, k: usize, cur: &[u64], buf: &mut [u64], path: &mut Vec<u64>, acc: &mut A, visit: &V)
where
    V: Fn(&mut A, &[u64], &[u64]),
{
    let (next, rest) = buf.split_at_mut(table.width);
    let last = *path.last().unwrap();
    for g in last + 1..table.funcs {
        and_into(next, cur, table.block(g));
        path.push(g);
        visit(acc, path, next);
        if path.len() < k {
            walk(table, k, next, rest, path, acc, visit);
        }
        path.pop();
    }
}
