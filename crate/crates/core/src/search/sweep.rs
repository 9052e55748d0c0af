use rayon::prelude::*;
use serde::Serialize;

use super::{brute_force, local_search, Oracle, SearchConfig};
use crate::error::Result;
use crate::multiset::LengthMultiset;

/// Count vectors `(c_1, ..., c_k)` with a fixed sum, in descending
/// lexicographic order: `(n, 0, ..., 0)` first, `(0, ..., 0, n)` last.
#[derive(Clone, Debug)]
pub struct CountVectors {
    cur: Option<Vec<usize>>,
}

impl CountVectors {
    pub fn new(k: usize, sum: usize) -> Self {
        let cur = match k {
            0 if sum > 0 => None,
            0 => Some(Vec::new()),
            _ => {
                let mut c = vec![0; k];
                c[0] = sum;
                Some(c)
            }
        };
        Self { cur }
    }
}

impl Iterator for CountVectors {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.cur.take()?;
        let k = out.len();
        if k >= 2 {
            if let Some(j) = (0..k - 1).rev().find(|&j| out[j] > 0) {
                let mut c = out.clone();
                let tail: usize = c[j + 1..].iter().sum();
                c[j] -= 1;
                c[j + 1..].iter_mut().for_each(|x| *x = 0);
                c[j + 1] = tail + 1;
                self.cur = Some(c);
            }
        }
        Some(out)
    }
}

fn to_multiset(counts: &[usize]) -> LengthMultiset {
    LengthMultiset::from_counts(counts.iter().enumerate().map(|(i, &c)| (i + 1, c)))
        .expect("lengths start at 1")
}

/// Every multiset of size `v - 1` over `1..=v/2`, admissible or not.
pub fn enumerate_all(v: usize) -> impl Iterator<Item = LengthMultiset> {
    CountVectors::new(v / 2, v.saturating_sub(1)).map(|c| to_multiset(&c))
}

/// Admissible multisets of order `v`, in descending lexicographic order of
/// their count vectors `(c_1, ..., c_{v/2})`.
pub fn enumerate_admissible(v: usize) -> impl Iterator<Item = LengthMultiset> {
    enumerate_all(v).filter(|l| l.is_admissible())
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub v: usize,
    pub admissible_count: usize,
    pub realized: usize,
    /// Proven to have no realization (brute force exhausted the space).
    pub unrealizable: usize,
    /// Neither search concluded.
    pub unknown: usize,
    /// The unrealizable and unknown multisets, in enumeration order.
    pub open: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub definitive: bool,
    pub rows: Vec<SweepRow>,
}

impl SweepReport {
    pub fn unrealizable(&self) -> usize {
        self.rows.iter().map(|r| r.unrealizable).sum()
    }

    pub fn unknown(&self) -> usize {
        self.rows.iter().map(|r| r.unknown).sum()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Verdict {
    Realized,
    Unrealizable,
    Unknown,
}

/// Runs local search and then, in definitive mode, brute force on every
/// admissible multiset of each order `2..=v_max`.
pub fn sweep(v_max: usize, cfg: &SearchConfig, definitive: bool, cap: usize) -> Result<SweepReport> {
    cfg.validate()?;
    let mut report = SweepReport {
        definitive,
        rows: Vec::new(),
    };
    for v in 2..=v_max {
        let items: Vec<LengthMultiset> = enumerate_admissible(v).collect();
        let verdicts = items
            .par_iter()
            .map(|l| -> Result<Verdict> {
                if local_search(l, cfg)?.is_some() {
                    return Ok(Verdict::Realized);
                }
                if !definitive || v > cap {
                    return Ok(Verdict::Unknown);
                }
                Ok(match brute_force(l, None, cap)? {
                    Oracle::Found { .. } => Verdict::Realized,
                    Oracle::NoneExists => Verdict::Unrealizable,
                    Oracle::Exhausted { .. } => Verdict::Unknown,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let mut row = SweepRow {
            v,
            admissible_count: items.len(),
            ..SweepRow::default()
        };
        for (l, verdict) in items.iter().zip(verdicts) {
            match verdict {
                Verdict::Realized => row.realized += 1,
                Verdict::Unrealizable => {
                    row.unrealizable += 1;
                    row.open.push(l.to_string());
                }
                Verdict::Unknown => {
                    row.unknown += 1;
                    row.open.push(l.to_string());
                }
            }
        }
        report.rows.push(row);
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NecessityRow {
    pub v: usize,
    pub inadmissible: usize,
    /// Inadmissible multisets that brute force nonetheless realized.
    pub realized: usize,
    /// Inadmissible multisets the oracle could not settle.
    pub unsettled: usize,
}

/// Brute force over every inadmissible multiset of each order `2..=v_max`;
/// the divisor condition is necessary exactly when `realized` stays 0.
pub fn necessity_check(v_max: usize, cap: usize) -> Result<Vec<NecessityRow>> {
    (2..=v_max)
        .map(|v| {
            let items: Vec<LengthMultiset> = enumerate_all(v).filter(|l| !l.is_admissible()).collect();
            let verdicts = items
                .par_iter()
                .map(|l| brute_force(l, None, cap))
                .collect::<Result<Vec<_>>>()?;
            let realized = verdicts.iter().filter(|o| matches!(o, Oracle::Found { .. })).count();
            let unsettled = verdicts.iter().filter(|o| matches!(o, Oracle::Exhausted { .. })).count();
            Ok(NecessityRow {
                v,
                inadmissible: items.len(),
                realized,
                unsettled,
            })
        })
        .collect()
}
