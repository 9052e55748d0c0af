//! Growing realizations: single grows, schedules, and the splice operations
//! that substitute runs created by repeated growth.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::certificate::{Certificate, TraceStep};
use crate::error::{Error, Result};
use crate::growable::{growth_points_for, is_growable_at, lengthened_edges, GrowPoint};
use crate::multiset::LengthMultiset;
use crate::path::{linear_diffs, HamPath};

/// Inserts `x` new vertices at grow point `(x, m)`.
///
/// Labels above `m` shift up by `x`; each lengthened edge `{y, z}` with
/// `y` in the window gets `y + x` inserted between its ends, keeping the
/// path's orientation. Registered grow points `(x', m')` move to
/// `m' + x` when `m' > m`, and `(x, m)` is added. Every relocated point is
/// re-checked: the relocation can fail when an edge of length close to
/// `v/2` changes side, in which case the length is rescanned (see
/// [`Relocation`]).
pub fn grow(cert: &Certificate, x: usize, m: usize) -> Result<Certificate> {
    let path = cert.path();
    if !is_growable_at(path, x, m)? {
        return Err(Error::NotGrowable { x, m });
    }
    let edges = lengthened_edges(path, x, m).expect("checked above");
    let embed = |y: usize| if y <= m { y } else { y + x };
    let verts = path.vertices();
    let mut out = Vec::with_capacity(verts.len() + x);
    let mut inserts = edges.iter().peekable();
    for (i, &h) in verts.iter().enumerate() {
        out.push(embed(h));
        if let Some(e) = inserts.next_if(|e| e.pos == i) {
            out.push(e.y + x);
        }
    }
    let path = HamPath::new(out)?;
    let mut points: Vec<GrowPoint> = cert
        .grow_points()
        .iter()
        .map(|p| GrowPoint::new(p.x, if p.m <= m { p.m } else { p.m + x }))
        .collect();
    points.push(GrowPoint::new(x, m));
    let moved = relocate(&path, &points);
    let mut multiset = cert.multiset().clone();
    multiset.insert(x, x);
    let mut trace = cert.trace().to_vec();
    trace.push(moved.annotate(TraceStep::new("grow").param("x", x).param("m", m)));
    Certificate::with_trace(path, multiset, moved.points, trace)
}

fn require_points(path: &HamPath, points: Vec<GrowPoint>, step: &'static str) -> Result<Vec<GrowPoint>> {
    for &point in &points {
        if !is_growable_at(path, point.x, point.m)? {
            return Err(Error::GrowPointLost { point, step });
        }
    }
    Ok(points)
}

/// Result of carrying a grow-point registry across an operation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Relocation {
    /// Registry valid on the new path.
    pub points: Vec<GrowPoint>,
    /// Carried points that no longer hold.
    pub lost: Vec<GrowPoint>,
    /// Replacements found by scanning for lengths whose points were lost.
    pub rescanned: Vec<GrowPoint>,
}

impl Relocation {
    fn annotate(&self, step: TraceStep) -> TraceStep {
        if self.lost.is_empty() {
            return step;
        }
        let show = |ps: &[GrowPoint]| ps.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" ");
        step.note(format!(
            "lost {}; rescanned {}",
            show(&self.lost),
            if self.rescanned.is_empty() { "none".to_string() } else { show(&self.rescanned) }
        ))
    }
}

/// Keeps the carried points that still hold; for each length that lost all
/// its points, takes the first point found by scanning, if any.
pub fn relocate(path: &HamPath, points: &[GrowPoint]) -> Relocation {
    let xs: BTreeSet<usize> = points.iter().map(|p| p.x).collect();
    let mut out = Relocation::default();
    for &p in points {
        let ok = 2 * p.x <= path.order() && p.m < path.order() && is_growable_at(path, p.x, p.m).unwrap_or(false);
        if ok {
            out.points.push(p);
        } else {
            out.lost.push(p);
        }
    }
    for x in xs {
        if !out.points.iter().any(|p| p.x == x) {
            if let Some(p) = growth_points_for(path, x).into_iter().next() {
                out.points.push(p);
                out.rescanned.push(p);
            }
        }
    }
    out
}

/// Ordered `(x, count)` growth steps; text form `x*count ...`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GrowthSchedule {
    pub steps: Vec<(usize, usize)>,
}

impl GrowthSchedule {
    pub fn new(steps: Vec<(usize, usize)>) -> Self {
        Self { steps }
    }

    /// The lengths added: `count * x` copies of each `x`.
    pub fn added(&self) -> LengthMultiset {
        let mut out = LengthMultiset::new();
        for &(x, n) in &self.steps {
            if x > 0 {
                out.insert(x, x * n);
            }
        }
        out
    }

    pub fn is_empty(&self) -> bool {
        self.steps.iter().all(|&(_, n)| n == 0)
    }
}

impl fmt::Display for GrowthSchedule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self.steps.iter().map(|(x, n)| format!("{x}*{n}")).collect();
        f.write_str(&terms.join(" "))
    }
}

impl FromStr for GrowthSchedule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut steps = Vec::new();
        for term in s.split_whitespace() {
            let (x, n) = term
                .split_once('*')
                .ok_or_else(|| Error::ScheduleSyntax(format!("expected x*count, got `{term}`")))?;
            let x: usize = x
                .parse()
                .map_err(|_| Error::ScheduleSyntax(format!("bad length in `{term}`")))?;
            let n: usize = n
                .parse()
                .map_err(|_| Error::ScheduleSyntax(format!("bad count in `{term}`")))?;
            if x == 0 {
                return Err(Error::ScheduleSyntax(format!("zero length in `{term}`")));
            }
            steps.push((x, n));
        }
        Ok(Self { steps })
    }
}

/// Applies a schedule left to right, each step reusing the certificate's
/// first registered grow point for its length.
pub fn multi_grow(cert: &Certificate, schedule: &GrowthSchedule) -> Result<Certificate> {
    let mut cur = cert.clone();
    for (index, &(x, n)) in schedule.steps.iter().enumerate() {
        if n == 0 {
            continue;
        }
        let wrap = |e: Error| Error::Schedule {
            index,
            source: Box::new(e),
        };
        let first = cur.grow_point(x).ok_or(Error::MissingGrowPoint { x }).map_err(wrap)?;
        for _ in 0..n {
            let m = if cur.grow_points().contains(&first) {
                first.m
            } else {
                cur.grow_point(x).ok_or(Error::MissingGrowPoint { x }).map_err(wrap)?.m
            };
            cur = grow(&cur, x, m).map_err(wrap)?;
        }
    }
    Ok(cur)
}

/// Start position of `run` in `verts` and whether it appears reversed.
fn locate_run(verts: &[usize], pos: &[usize], run: &[usize]) -> Option<(usize, bool)> {
    let n = run.len();
    let p = *pos.get(run[0])?;
    if p + n <= verts.len() && verts[p..p + n] == *run {
        return Some((p, false));
    }
    if p + 1 >= n && verts[p + 1 - n..=p].iter().rev().eq(run.iter()) {
        return Some((p + 1 - n, true));
    }
    None
}

/// Replaces each run (given by value, in its forward orientation) with the
/// paired replacement, reversing the replacement where the run is reversed.
fn substitute_runs(path: &HamPath, subs: &[(Vec<usize>, Vec<usize>)]) -> Result<HamPath> {
    let verts = path.vertices();
    let mut pos = vec![0; verts.len()];
    for (i, &h) in verts.iter().enumerate() {
        pos[h] = i;
    }
    let mut spans = Vec::with_capacity(subs.len());
    for (run, rep) in subs {
        let (start, rev) = locate_run(verts, &pos, run)
            .ok_or_else(|| Error::Splice(format!("run {run:?} not found")))?;
        let rep: Vec<usize> = if rev {
            rep.iter().rev().copied().collect()
        } else {
            rep.clone()
        };
        spans.push((start, run.len(), rep));
    }
    spans.sort_by_key(|s| s.0);
    let mut out = Vec::with_capacity(verts.len());
    let mut i = 0;
    for (start, len, rep) in spans {
        if start < i {
            return Err(Error::Splice("runs overlap".into()));
        }
        out.extend_from_slice(&verts[i..start]);
        out.extend(rep);
        i = start + len;
    }
    out.extend_from_slice(&verts[i..]);
    HamPath::new(out)
}

fn check_perfect(p: &HamPath) -> Result<()> {
    if p.is_perfect() {
        Ok(())
    } else {
        Err(Error::NotPerfect(format!("{:?}", p.vertices())))
    }
}

fn check_fits(diffs: &LengthMultiset, order: usize) -> Result<()> {
    match diffs.max_length() {
        Some(l) if l > order / 2 => Err(Error::LengthOverflow {
            length: l,
            max: order / 2,
            order,
        }),
        _ => Ok(()),
    }
}

/// Splices a perfect linear realization of `K` into a 1-growable
/// realization of `L`, giving a realization of `L ∪ K`.
///
/// Grows `|K|` times at the registered 1-point `m`, which leaves the run
/// `m, m+1, ..., m+|K|`, then replaces that run by `k_real + m`.
pub fn splice_perfect(cert: &Certificate, k_real: &HamPath) -> Result<Certificate> {
    check_perfect(k_real)?;
    let k = k_real.order() - 1;
    let m = cert.grow_point(1).ok_or(Error::MissingGrowPoint { x: 1 })?.m;
    let added = linear_diffs(k_real);
    let grown = multi_grow(cert, &GrowthSchedule::new(vec![(1, k)]))?;
    check_fits(&added, grown.order())?;
    let run: Vec<usize> = (m..=m + k).collect();
    let rep: Vec<usize> = k_real.vertices().iter().map(|&h| h + m).collect();
    let path = substitute_runs(grown.path(), &[(run, rep)])?;
    let moved = relocate(&path, grown.grow_points());
    let mut trace = grown.trace()[..cert.trace().len()].to_vec();
    trace.push(moved.annotate(TraceStep::new("splice_perfect").param("m", m).param("k", k)));
    Certificate::with_trace(path, cert.multiset().union(&added), moved.points, trace)
}

/// The two replacement sequences for [`even_grow`], before translation by
/// `m - 1`. `g` replaces the even run and `h` the odd one.
pub fn even_grow_sequences(y: usize, z: usize) -> (Vec<usize>, Vec<usize>) {
    let mut g = Vec::with_capacity(2 * y);
    for t in 1..y {
        if t % 2 == 1 {
            g.extend([t, y + t]);
        } else {
            g.extend([y + t, t]);
        }
    }
    g.extend([2 * y + z - 1, 2 * y + 2 * z - 1]);
    let mut h = Vec::with_capacity(2 * z);
    h.extend([0, y]);
    for t in 0..z - 1 {
        let (lo, hi) = (2 * y + t, 2 * y + z + t);
        if t % 2 == 0 {
            h.extend([lo, hi]);
        } else {
            h.extend([hi, lo]);
        }
    }
    (g, h)
}

/// Adds `{1^(y+z-4), y^(y+1), z^(z+1)}` to a 2-growable realization for
/// even `y, z`; the result is `y`-growable at `m+y-1` and `z`-growable at
/// `m+2y+z-2`, where `(2, m)` is the registered point used.
pub fn even_grow(cert: &Certificate, y: usize, z: usize) -> Result<Certificate> {
    if y < 2 || z < 2 || y % 2 == 1 || z % 2 == 1 {
        return Err(Error::InvalidParameters(format!(
            "even_grow needs even y, z >= 2, got y={y}, z={z}"
        )));
    }
    let m = cert.grow_point(2).ok_or(Error::MissingGrowPoint { x: 2 })?.m;
    if m == 0 {
        return Err(Error::Splice("2-point at 0 leaves no odd run".into()));
    }
    let n = y + z - 1;
    let grown = multi_grow(cert, &GrowthSchedule::new(vec![(2, n)]))?;
    let even: Vec<usize> = (0..=n).map(|j| m + 2 * j).collect();
    let odd: Vec<usize> = (0..=n).map(|j| m - 1 + 2 * j).collect();
    let (g, h) = even_grow_sequences(y, z);
    let shift = |s: Vec<usize>| -> Vec<usize> { s.into_iter().map(|e| e + m - 1).collect() };
    let path = substitute_runs(grown.path(), &[(even, shift(g)), (odd, shift(h))])?;
    let fresh = [GrowPoint::new(y, m + y - 1), GrowPoint::new(z, m + 2 * y + z - 2)];
    let fresh = require_points(&path, fresh.to_vec(), "even_grow")?;
    let moved = relocate(&path, grown.grow_points());
    let mut points = moved.points.clone();
    points.extend(fresh);
    let mut multiset = cert.multiset().clone();
    if y + z > 4 {
        multiset.insert(1, y + z - 4);
    }
    multiset.insert(y, y + 1);
    multiset.insert(z, z + 1);
    let mut trace = cert.trace().to_vec();
    trace.push(moved.annotate(TraceStep::new("even_grow").param("y", y).param("z", z).param("m", m)));
    Certificate::with_trace(path, multiset, points, trace)
}

/// Three `x`-grows at the registered point, then the middle pair of the
/// first `i` of the resulting four-term runs swapped. Adds
/// `{x^(3x-2i), (2x)^(2i)}`; every registered point is kept (shifted).
pub fn x2x_swap(cert: &Certificate, x: usize, i: usize) -> Result<Certificate> {
    if i > x {
        return Err(Error::InvalidParameters(format!("x2x swap count {i} exceeds x = {x}")));
    }
    let m = cert.grow_point(x).ok_or(Error::MissingGrowPoint { x })?.m;
    let grown = multi_grow(cert, &GrowthSchedule::new(vec![(x, 3)]))?;
    let subs: Vec<(Vec<usize>, Vec<usize>)> = (0..i)
        .map(|t| {
            let s = m + 1 - x + t;
            (vec![s, s + x, s + 2 * x, s + 3 * x], vec![s, s + 2 * x, s + x, s + 3 * x])
        })
        .collect();
    let path = substitute_runs(grown.path(), &subs)?;
    let moved = relocate(&path, grown.grow_points());
    let mut multiset = cert.multiset().clone();
    multiset.insert(x, 3 * x - 2 * i);
    multiset.insert(2 * x, 2 * i);
    let mut trace = cert.trace().to_vec();
    trace.push(moved.annotate(TraceStep::new("x2x_swap").param("x", x).param("i", i).param("m", m)));
    Certificate::with_trace(path, multiset, moved.points, trace)
}

/// Grows `k` times at the registered `x`-point, then replaces the `t`-th
/// of the `x` runs `s, s+x, ..., s+kx` (`s = m+1-x+t`) with
/// `x * parts[t] + s`. Each part is a perfect linear realization on `k+1`
/// vertices. Adds `x L_1 ∪ ... ∪ x L_x`.
pub fn perf_grow(cert: &Certificate, x: usize, parts: &[HamPath]) -> Result<Certificate> {
    if parts.len() != x {
        return Err(Error::InvalidParameters(format!(
            "perf_grow needs {x} parts, got {}",
            parts.len()
        )));
    }
    for p in parts {
        check_perfect(p)?;
    }
    let k = parts[0].order() - 1;
    if parts.iter().any(|p| p.order() != k + 1) {
        return Err(Error::InvalidParameters("parts differ in length".into()));
    }
    let m = cert.grow_point(x).ok_or(Error::MissingGrowPoint { x })?.m;
    let mut added = LengthMultiset::new();
    for p in parts {
        if k > 0 {
            added = added.union(&linear_diffs(p).scaled(x));
        }
    }
    let grown = multi_grow(cert, &GrowthSchedule::new(vec![(x, k)]))?;
    check_fits(&added, grown.order())?;
    let subs: Vec<(Vec<usize>, Vec<usize>)> = parts
        .iter()
        .enumerate()
        .map(|(t, p)| {
            let s = m + 1 - x + t;
            let run = (0..=k).map(|j| s + j * x).collect();
            let rep = p.vertices().iter().map(|&h| s + h * x).collect();
            (run, rep)
        })
        .collect();
    let path = substitute_runs(grown.path(), &subs)?;
    let moved = relocate(&path, grown.grow_points());
    let mut trace = cert.trace().to_vec();
    trace.push(moved.annotate(TraceStep::new("perf_grow").param("x", x).param("k", k).param("m", m)));
    Certificate::with_trace(path, cert.multiset().union(&added), moved.points, trace)
}
