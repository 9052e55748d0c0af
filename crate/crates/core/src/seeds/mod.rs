//! Stored seed realizations and their integrity checks.
//!
//! The data lives in `tables.txt`, compiled into the library and parsed on
//! first use. Each table covers one family of multisets; rows carry the
//! parameter tuple, the realization and its declared grow points.

use std::collections::BTreeSet;

use once_cell::sync::Lazy;
use serde::Serialize;

use crate::certificate::{Certificate, TraceStep};
use crate::error::{Error, Result};
use crate::growable::{growth_points_for, is_growable_at, GrowPoint};
use crate::multiset::LengthMultiset;
use crate::path::{cyclic_lengths, HamPath};

const DATA: &str = include_str!("tables.txt");
/// Rows found by computer search where the printed tables fall short; see
/// the header of the file.
const SUPPLEMENT: &str = include_str!("supplement.txt");

static TABLES: Lazy<Vec<SeedTable>> = Lazy::new(|| {
    let mut t = parse_tables(DATA).unwrap_or_else(|e| panic!("embedded seed data: {e}"));
    t.extend(parse_tables(SUPPLEMENT).unwrap_or_else(|e| panic!("embedded supplement: {e}")));
    t
});

/// One row of a seed table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeedEntry {
    pub table_id: String,
    /// Index of the ruled block the row sits in.
    pub block: usize,
    /// Class label (`r,s`), row name, or `None` for unlabeled rows.
    pub label: Option<String>,
    /// Residues of the key lengths' counts, one per modulus.
    pub congruence_key: Option<Vec<usize>>,
    pub moduli: Vec<usize>,
    /// Counts of the table's `cols` lengths.
    pub params: Vec<usize>,
    pub multiset: LengthMultiset,
    pub path: HamPath,
    pub declared_grow_points: Vec<GrowPoint>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub notes: Option<String>,
}

impl SeedEntry {
    /// A certificate for this row carrying only the declared grow points.
    pub fn certificate(&self) -> Result<Certificate> {
        let step = TraceStep::new("seed").note(self.describe());
        Ok(Certificate::with_trace(
            self.path.clone(),
            self.multiset.clone(),
            self.declared_grow_points.clone(),
            Vec::new(),
        )?
        .with_step(step))
    }

    /// `table/block/label` for messages.
    pub fn describe(&self) -> String {
        let label = match &self.label {
            Some(l) => l.clone(),
            None => format!("{{{}}}", self.multiset),
        };
        format!("{} block {} row {}", self.table_id, self.block, label)
    }

    /// Declared point for `x`, if any.
    pub fn grow_point(&self, x: usize) -> Option<GrowPoint> {
        self.declared_grow_points.iter().copied().find(|p| p.x == x)
    }
}

/// A parsed table.
#[derive(Clone, Debug, Serialize)]
pub struct SeedTable {
    pub id: String,
    pub about: String,
    pub lengths: Vec<usize>,
    pub cols: Vec<usize>,
    pub fixed: Vec<(usize, usize)>,
    pub grow: Vec<usize>,
    pub key: Vec<usize>,
    pub entries: Vec<SeedEntry>,
}

impl SeedTable {
    pub fn blocks(&self) -> usize {
        self.entries.iter().map(|e| e.block + 1).max().unwrap_or(0)
    }
}

pub fn tables() -> &'static [SeedTable] {
    &TABLES
}

pub fn table(id: &str) -> Result<&'static SeedTable> {
    TABLES
        .iter()
        .find(|t| t.id == id)
        .ok_or_else(|| Error::NoSuchSeed(format!("table `{id}`")))
}

pub fn all_entries() -> impl Iterator<Item = &'static SeedEntry> {
    TABLES.iter().flat_map(|t| t.entries.iter())
}

/// Which rows [`lookup_seed`] considers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Variant {
    /// First block of the first matching table.
    Main,
    /// A given block of the first matching table.
    Block(usize),
    /// A given block of a named table.
    Table(String, usize),
    /// A row name such as `g1`; the key is ignored.
    Named(String),
}

/// First row, in table order, whose table covers `underlying` and whose
/// congruence key equals `key`.
pub fn lookup_seed(underlying: &[usize], key: &[usize], variant: &Variant) -> Result<&'static SeedEntry> {
    let want: BTreeSet<usize> = underlying.iter().copied().collect();
    let covers = |t: &SeedTable| t.lengths.iter().copied().collect::<BTreeSet<_>>() == want;
    let not_found = || {
        Error::NoSuchSeed(format!(
            "lengths {underlying:?}, key {key:?}, variant {variant:?}"
        ))
    };
    match variant {
        Variant::Named(name) => TABLES
            .iter()
            .filter(|t| covers(t))
            .flat_map(|t| &t.entries)
            .find(|e| e.label.as_deref() == Some(name.as_str()))
            .ok_or_else(not_found),
        Variant::Table(id, block) => {
            let t = table(id)?;
            t.entries
                .iter()
                .find(|e| e.block == *block && e.congruence_key.as_deref() == Some(key))
                .ok_or_else(not_found)
        }
        Variant::Main | Variant::Block(_) => {
            let block = match variant {
                Variant::Block(b) => *b,
                _ => 0,
            };
            let t = TABLES
                .iter()
                .find(|t| covers(t) && !t.key.is_empty())
                .ok_or_else(not_found)?;
            t.entries
                .iter()
                .find(|e| e.block == block && e.congruence_key.as_deref() == Some(key))
                .ok_or_else(not_found)
        }
    }
}

/// Outcome of checking one entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeedCheck {
    pub entry: String,
    pub failures: Vec<String>,
}

impl SeedCheck {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SeedReport {
    pub checks: Vec<SeedCheck>,
}

impl SeedReport {
    pub fn failures(&self) -> impl Iterator<Item = &SeedCheck> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn all_passed(&self) -> bool {
        self.failures().next().is_none()
    }
}

/// Checks every stored entry.
pub fn verify_all_seeds() -> SeedReport {
    verify_entries(all_entries())
}

/// Checks the given entries: realization, declared grow points, class
/// label, order arithmetic, and key uniqueness within each table block.
pub fn verify_entries<'a, I>(entries: I) -> SeedReport
where
    I: IntoIterator<Item = &'a SeedEntry>,
{
    let mut seen: BTreeSet<(String, usize, Vec<usize>)> = BTreeSet::new();
    let mut checks = Vec::new();
    for e in entries {
        let mut failures = Vec::new();
        let actual = cyclic_lengths(&e.path);
        if actual != e.multiset {
            failures.push(format!("realizes {{{actual}}}, expected {{{}}}", e.multiset));
        }
        if e.path.order() != e.multiset.order() {
            failures.push(format!(
                "order {} but parameters give {}",
                e.path.order(),
                e.multiset.order()
            ));
        }
        for p in &e.declared_grow_points {
            match is_growable_at(&e.path, p.x, p.m) {
                Ok(true) => {}
                Ok(false) => {
                    let found = growth_points_for(&e.path, p.x);
                    failures.push(format!("not growable at {p}; {}-points are {found:?}", p.x));
                }
                Err(err) => failures.push(format!("grow point {p}: {err}")),
            }
        }
        if let Some(key) = &e.congruence_key {
            let computed: Vec<usize> = e
                .moduli
                .iter()
                .map(|&l| e.multiset.count(l) % l)
                .collect();
            if &computed != key {
                failures.push(format!("labelled class {key:?}, counts give {computed:?}"));
            }
            if !seen.insert((e.table_id.clone(), e.block, key.clone())) {
                failures.push(format!("class {key:?} repeated in block {}", e.block));
            }
        }
        checks.push(SeedCheck {
            entry: e.describe(),
            failures,
        });
    }
    SeedReport { checks }
}

fn parse_list(s: &str) -> Result<Vec<usize>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| Error::InvalidParameters(format!("bad number `{t}`")))
        })
        .collect()
}

fn parse_header(line: &str) -> Result<SeedTable> {
    let mut words = line.split_whitespace().skip(1);
    let id = words
        .next()
        .ok_or_else(|| Error::InvalidParameters("table without id".into()))?;
    let mut t = SeedTable {
        id: id.to_string(),
        about: String::new(),
        lengths: Vec::new(),
        cols: Vec::new(),
        fixed: Vec::new(),
        grow: Vec::new(),
        key: Vec::new(),
        entries: Vec::new(),
    };
    for w in words {
        let (k, v) = w
            .split_once('=')
            .ok_or_else(|| Error::InvalidParameters(format!("bad header field `{w}`")))?;
        match k {
            "lengths" => t.lengths = parse_list(v)?,
            "cols" => t.cols = parse_list(v)?,
            "grow" => t.grow = parse_list(v)?,
            "key" => t.key = parse_list(v)?,
            "fixed" => {
                for pair in v.split(',').filter(|p| !p.is_empty()) {
                    let (l, c) = pair
                        .split_once(':')
                        .ok_or_else(|| Error::InvalidParameters(format!("bad fixed `{pair}`")))?;
                    let l = parse_list(l)?[0];
                    let c = parse_list(c)?[0];
                    t.fixed.push((l, c));
                }
            }
            _ => return Err(Error::InvalidParameters(format!("unknown header field `{k}`"))),
        }
    }
    Ok(t)
}

fn parse_row(t: &SeedTable, block: usize, line: &str) -> Result<SeedEntry> {
    let bad = |msg: &str| Error::InvalidParameters(format!("{}: {msg}: `{line}`", t.id));
    let fields: Vec<&str> = line.split('|').map(str::trim).collect();
    if fields.len() < 4 {
        return Err(bad("expected at least four fields"));
    }
    let path: Vec<usize> = fields[1]
        .split_whitespace()
        .map(|s| s.parse().map_err(|_| bad("bad path")))
        .collect::<Result<_>>()?;
    let path = HamPath::new(path)?;
    let params = parse_list(fields[2])?;
    if params.len() != t.cols.len() {
        return Err(bad("parameter count"));
    }
    let mut multiset = LengthMultiset::from_counts(t.fixed.iter().copied())?;
    for (&l, &c) in t.cols.iter().zip(&params) {
        multiset.insert(l, c);
    }
    let cells: Vec<&str> = if fields[3].is_empty() {
        Vec::new()
    } else {
        fields[3].split(',').map(str::trim).collect()
    };
    if cells.len() != t.grow.len() {
        return Err(bad("grow column count"));
    }
    let mut declared_grow_points = Vec::new();
    for (&x, cell) in t.grow.iter().zip(cells) {
        match cell {
            "-" => {}
            "?" => {
                let p = growth_points_for(&path, x)
                    .into_iter()
                    .next()
                    .ok_or_else(|| bad("no grow point found for `?` cell"))?;
                declared_grow_points.push(p);
            }
            m => {
                let m = m.parse().map_err(|_| bad("bad grow point"))?;
                declared_grow_points.push(GrowPoint::new(x, m));
            }
        }
    }
    let label = match fields[0] {
        "." => None,
        l => Some(l.to_string()),
    };
    let congruence_key = match &label {
        Some(l) if !t.key.is_empty() && l.contains(',') => {
            let k = parse_list(l)?;
            if k.len() != t.key.len() {
                return Err(bad("class arity"));
            }
            Some(k)
        }
        _ => None,
    };
    let notes = fields.get(4).filter(|n| !n.is_empty()).map(|n| n.to_string());
    Ok(SeedEntry {
        table_id: t.id.clone(),
        block,
        label,
        congruence_key,
        moduli: t.key.clone(),
        params,
        multiset,
        path,
        declared_grow_points,
        notes,
    })
}

fn parse_tables(src: &str) -> Result<Vec<SeedTable>> {
    let mut out: Vec<SeedTable> = Vec::new();
    let mut block: Option<usize> = None;
    for raw in src.lines() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if line.starts_with("table ") {
            out.push(parse_header(line)?);
            block = None;
            continue;
        }
        let t = out
            .last_mut()
            .ok_or_else(|| Error::InvalidParameters("row before any table".into()))?;
        if let Some(about) = line.strip_prefix("about ") {
            t.about = about.to_string();
        } else if line == "block" {
            block = Some(block.map_or(0, |b| b + 1));
        } else {
            let entry = parse_row(t, block.unwrap_or(0), line)?;
            t.entries.push(entry);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lookup_examples() {
        let e = lookup_seed(&[1, 2, 3], &[0, 0], &Variant::Main).unwrap();
        assert_eq!(e.path.vertices(), &[2, 4, 1, 5, 3, 0, 6]);
        assert_eq!(e.params, vec![2, 3]);
        assert_eq!(e.multiset, "1 2^2 3^3".parse().unwrap());
        assert_eq!(
            e.declared_grow_points,
            vec![GrowPoint::new(1, 5), GrowPoint::new(2, 1), GrowPoint::new(3, 3)]
        );

        let e = lookup_seed(&[1, 4, 5], &[0, 0], &Variant::Main).unwrap();
        assert_eq!(e.path.vertices(), &[5, 9, 1, 6, 7, 2, 10, 3, 8, 4, 11, 0]);
        assert_eq!(
            e.declared_grow_points,
            vec![GrowPoint::new(1, 9), GrowPoint::new(4, 4), GrowPoint::new(5, 5)]
        );

        let e = lookup_seed(&[1, 3, 6], &[], &Variant::Named("g1".into())).unwrap();
        assert_eq!(e.path.vertices(), &[6, 5, 1, 4, 0, 3, 2]);
        assert_eq!(e.params, vec![2, 4, 0]);
        assert_eq!(e.grow_point(1), Some(GrowPoint::new(1, 4)));
        assert_eq!(e.grow_point(3), Some(GrowPoint::new(3, 2)));
    }

    #[test]
    fn lookup_misses() {
        assert!(lookup_seed(&[1, 2, 3], &[5, 5], &Variant::Main).is_err());
        assert!(lookup_seed(&[7, 8], &[0, 0], &Variant::Main).is_err());
        assert!(lookup_seed(&[1, 3, 6], &[], &Variant::Named("g9".into())).is_err());
        let e = lookup_seed(&[1, 2, 3], &[1, 0], &Variant::Block(1)).unwrap();
        assert_eq!(e.path.vertices(), &[7, 4, 2, 0, 3, 1, 6, 5]);
        let e = lookup_seed(&[1, 4, 5], &[0, 0], &Variant::Table("u145-a1".into(), 0)).unwrap();
        assert_eq!(e.path.vertices(), &[4, 9, 5, 0, 1, 6, 10, 3, 7, 2, 8]);
    }

    #[test]
    fn unprinted_grow_point_is_filled_by_scan() {
        let t = table("u234-bodd-extra").unwrap();
        let e = &t.entries[0];
        let p = e.grow_point(4).unwrap();
        assert!(is_growable_at(&e.path, 4, p.m).unwrap());
    }

    #[test]
    fn every_seed_passes() {
        let report = verify_all_seeds();
        let bad: Vec<_> = report.failures().collect();
        assert!(bad.is_empty(), "{bad:#?}");
        assert!(report.checks.len() > 150);
    }

    #[test]
    fn corrupted_entry_is_named() {
        let mut e = table("u123").unwrap().entries[0].clone();
        e.declared_grow_points[0] = GrowPoint::new(1, 0);
        let report = verify_entries([&e]);
        let bad: Vec<_> = report.failures().collect();
        assert_eq!(bad.len(), 1);
        assert!(bad[0].entry.contains("u123"));

        let mut e = table("u123").unwrap().entries[0].clone();
        e.path = HamPath::new(vec![0, 1, 2, 3, 4, 5, 6]).unwrap();
        assert!(!verify_entries([&e]).all_passed());
    }

    #[test]
    fn empty_store_gives_empty_report() {
        let report = verify_entries(std::iter::empty());
        assert!(report.checks.is_empty());
        assert!(report.all_passed());
    }

    #[test]
    fn parse_rejects_malformed_rows() {
        assert!(parse_tables("table t lengths=1 cols=1\n. | 0 1 | 1 |").is_ok());
        assert!(parse_tables("table t lengths=1 cols=1\n. | 0 1 | 1,2 |").is_err());
        assert!(parse_tables("table t lengths=1 cols=1\n. | 0 0 | 1 |").is_err());
        assert!(parse_tables(". | 0 1 | 1 |").is_err());
        assert!(parse_tables("table t bogus=1").is_err());
    }
}
