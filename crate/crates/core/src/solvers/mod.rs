//! Drivers that rebuild a realization for any admissible multiset in the
//! classes settled by the growth constructions, plus dispatch and a search
//! fallback for everything else.
//!
//! Most drivers are table coverage: pick the first stored row (in table
//! order) whose counts sit below the target with every difference a
//! multiple of its length and growable, then grow. The `{1, x, 2x}`
//! drivers also use x/2x swaps.

mod bound;
mod u123;
mod u1234;
mod u145;
mod x2x;

pub use bound::hr_bound;
pub use u123::solve_u123;
pub use u1234::solve_u1234;
pub use u145::solve_u145;
pub use x2x::{solve_136, solve_1x2x};

use std::collections::{BTreeSet, HashSet};

use serde::Serialize;

use crate::certificate::{Certificate, TraceStep};
use crate::error::Result;
use crate::growable::growth_points_for;
use crate::growth::{grow, multi_grow, GrowthSchedule};
use crate::multiset::{Admissibility, LengthMultiset};
use crate::search::{brute_force, default_brute_cap, local_search, Oracle, SearchConfig};
use crate::seeds::{table, SeedEntry};

/// Result of a solve.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum SolveOutcome {
    /// Built by replaying a construction.
    Solved { certificate: Certificate },
    NotAdmissible { verdict: Admissibility },
    /// No construction applies and fallback was not requested.
    OutOfProvenRange { reason: String },
    /// Handed to search; `certificate` is `None` when search failed.
    SearchFallback {
        reason: String,
        certificate: Option<Certificate>,
    },
}

impl SolveOutcome {
    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            SolveOutcome::Solved { certificate } => Some(certificate),
            SolveOutcome::SearchFallback { certificate, .. } => certificate.as_ref(),
            _ => None,
        }
    }

    pub fn is_solved(&self) -> bool {
        matches!(self, SolveOutcome::Solved { .. })
    }

    pub fn status(&self) -> &'static str {
        match self {
            SolveOutcome::Solved { .. } => "solved",
            SolveOutcome::NotAdmissible { .. } => "not_admissible",
            SolveOutcome::OutOfProvenRange { .. } => "out_of_proven_range",
            SolveOutcome::SearchFallback { certificate: Some(_), .. } => "search_fallback",
            SolveOutcome::SearchFallback { certificate: None, .. } => "search_failed",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SolveOptions {
    /// Search when no construction applies, instead of refusing.
    pub fallback: bool,
    pub search: SearchConfig,
    /// Largest order handed to brute force after local search fails.
    pub brute_cap: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self {
            fallback: false,
            search: SearchConfig::default(),
            brute_cap: default_brute_cap(),
        }
    }
}

/// Trace note for inputs whose realizability is known from results this
/// crate does not construct; those are always searched.
pub const EXTERNAL_TAG: &str = "external-theorem region";

pub(crate) fn multiset(pairs: &[(usize, usize)]) -> LengthMultiset {
    LengthMultiset::from_counts(pairs.iter().copied()).expect("positive lengths")
}

pub(crate) fn admissibility_gate(l: &LengthMultiset) -> Option<SolveOutcome> {
    let verdict = l.admissibility();
    (!verdict.is_admissible()).then_some(SolveOutcome::NotAdmissible { verdict })
}

/// Local search, then brute force if the order allows.
pub(crate) fn search_fallback(l: &LengthMultiset, opts: &SolveOptions, reason: String) -> Result<SolveOutcome> {
    let mut certificate = local_search(l, &opts.search)?;
    if certificate.is_none() && l.order() <= opts.brute_cap {
        if let Oracle::Found { certificate: c } = brute_force(l, None, opts.brute_cap)? {
            certificate = Some(c);
        }
    }
    let certificate = certificate.map(|c| c.with_step(TraceStep::new("fallback").note(reason.clone())));
    Ok(SolveOutcome::SearchFallback { reason, certificate })
}

pub(crate) fn external(l: &LengthMultiset, opts: &SolveOptions, why: &str) -> Result<SolveOutcome> {
    search_fallback(l, opts, format!("{EXTERNAL_TAG}: {why}"))
}

/// Refuses, or searches when the caller allowed fallback.
pub(crate) fn out_of_range(l: &LengthMultiset, opts: &SolveOptions, reason: String) -> Result<SolveOutcome> {
    if opts.fallback {
        search_fallback(l, opts, reason)
    } else {
        Ok(SolveOutcome::OutOfProvenRange { reason })
    }
}

/// Growth needed to take `seed` to `target`, or `None` when some count
/// would shrink, a difference is not a multiple of its length, or a length
/// that must grow has no registered point.
fn schedule_for(seed: &Certificate, target: &LengthMultiset) -> Option<Vec<(usize, usize)>> {
    let have = seed.multiset();
    let lengths: BTreeSet<usize> = target.underlying().into_iter().chain(have.underlying()).collect();
    let mut steps = Vec::new();
    for x in lengths {
        let (h, w) = (have.count(x), target.count(x));
        if w < h || (w - h) % x != 0 {
            return None;
        }
        if w > h {
            seed.grow_point(x)?;
            steps.push((x, (w - h) / x));
        }
    }
    Some(steps)
}

/// Node budget for [`regrow`].
const REGROW_BUDGET: usize = 4096;

/// Depth-first growth by `steps` (remaining `(x, count)`), trying every
/// actual grow point of the current path rather than only the carried ones.
/// Needed because a carried point can stop holding when an edge of length
/// `v/2` changes side.
fn regrow(
    cur: &Certificate,
    steps: &[(usize, usize)],
    budget: &mut usize,
    seen: &mut HashSet<Vec<usize>>,
) -> Result<Option<Certificate>> {
    if steps.iter().all(|&(_, n)| n == 0) {
        return Ok(Some(cur.clone()));
    }
    if *budget == 0 || !seen.insert(cur.path().vertices().to_vec()) {
        return Ok(None);
    }
    *budget -= 1;
    for (i, &(x, n)) in steps.iter().enumerate() {
        if n == 0 {
            continue;
        }
        let mut ms: Vec<usize> = cur.grow_points().iter().filter(|p| p.x == x).map(|p| p.m).collect();
        ms.extend(growth_points_for(cur.path(), x).into_iter().map(|p| p.m));
        let mut tried = BTreeSet::new();
        for m in ms {
            if !tried.insert(m) {
                continue;
            }
            let next = grow(cur, x, m)?;
            let mut rest = steps.to_vec();
            rest[i].1 -= 1;
            if let Some(c) = regrow(&next, &rest, budget, seen)? {
                return Ok(Some(c));
            }
        }
    }
    Ok(None)
}

/// Grows `seed` into a realization of `target`, if its registered points
/// allow. Growth runs by ascending length; if a point is lost on the way,
/// descending order is tried, then a bounded search over the actual grow
/// points of each intermediate path. Returns the schedule used.
pub fn grow_into(seed: &Certificate, target: &LengthMultiset) -> Result<Option<(Certificate, GrowthSchedule)>> {
    let Some(steps) = schedule_for(seed, target) else {
        return Ok(None);
    };
    let mut rev = steps.clone();
    rev.reverse();
    for order in [steps.clone(), rev] {
        let schedule = GrowthSchedule::new(order);
        if let Ok(c) = multi_grow(seed, &schedule) {
            return Ok(Some((c, schedule)));
        }
    }
    let mut budget = REGROW_BUDGET;
    let mut seen = HashSet::new();
    Ok(regrow(seed, &steps, &mut budget, &mut seen)?.map(|c| (c, GrowthSchedule::new(steps))))
}

/// First row of `tables` (in order) that grows into `target`.
pub(crate) fn cover(target: &LengthMultiset, tables: &[&str], driver: &str) -> Result<Option<Certificate>> {
    for id in tables {
        for entry in &table(id)?.entries {
            if schedule_for_entry(entry, target) {
                if let Some((c, schedule)) = grow_into(&entry.certificate()?, target)? {
                    let step = TraceStep::new(driver.to_string()).note(format!("{} grown by {}", entry.describe(), schedule));
                    return Ok(Some(c.with_step(step)));
                }
            }
        }
    }
    Ok(None)
}

/// Cheap pre-filter on counts before building a certificate.
fn schedule_for_entry(entry: &SeedEntry, target: &LengthMultiset) -> bool {
    let lengths: BTreeSet<usize> = target.underlying().into_iter().chain(entry.multiset.underlying()).collect();
    lengths.into_iter().all(|x| {
        let (h, w) = (entry.multiset.count(x), target.count(x));
        w >= h && (w - h) % x == 0 && (w == h || entry.grow_point(x).is_some())
    })
}

pub(crate) fn covered(
    l: &LengthMultiset,
    tables: &[&str],
    driver: &str,
    opts: &SolveOptions,
) -> Result<SolveOutcome> {
    match cover(l, tables, driver)? {
        Some(certificate) => Ok(SolveOutcome::Solved { certificate }),
        None => out_of_range(l, opts, format!("no row of {} grows into {{{l}}}", tables.join(", "))),
    }
}

/// Routes `l` by its underlying set.
pub fn solve(l: &LengthMultiset, opts: &SolveOptions) -> Result<SolveOutcome> {
    if let Some(o) = admissibility_gate(l) {
        return Ok(o);
    }
    let u = l.underlying();
    let c = |x| l.count(x);
    let within = |set: &[usize]| u.iter().all(|x| set.contains(x));
    if within(&[1, 2, 3, 4]) {
        return solve_u1234(c(1), c(2), c(3), c(4), opts);
    }
    if within(&[1, 4, 5]) {
        return solve_u145(c(1), c(4), c(5), opts);
    }
    if u.len() == 3 && u[0] == 1 && u[2] == 2 * u[1] {
        let x = u[1];
        return solve_1x2x(c(1), c(x), c(2 * x), x, opts);
    }
    if u.len() <= 2 {
        return external(l, opts, "at most two distinct lengths");
    }
    let v = l.order();
    if v <= 19 || v == 23 {
        return external(l, opts, "order settled by exhaustive computation");
    }
    if u[0] == 1 {
        let m = LengthMultiset::from_counts(l.iter().filter(|&(x, _)| x > 1))?;
        if c(1) >= hr_bound(&m)? {
            return external(l, opts, "enough 1s for the linear bound");
        }
    }
    out_of_range(l, opts, format!("no construction for underlying set {u:?}"))
}
