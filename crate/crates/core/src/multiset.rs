//! Multisets of edge lengths and the divisor condition.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A multiset of positive edge lengths, stored as `length -> multiplicity`.
///
/// Zero multiplicities are never stored. The order of the complete graph the
/// multiset lives in is `size() + 1`.
///
/// The text form is a whitespace-separated list of `len` or `len^mult` terms,
/// e.g. `1^4 2 3^8 4`. Repeated terms accumulate.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LengthMultiset {
    counts: BTreeMap<usize, usize>,
}

impl LengthMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a multiset from `(length, multiplicity)` pairs. Pairs with a
    /// zero multiplicity are skipped; a zero length is an error.
    pub fn from_counts<I>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut out = Self::new();
        for (len, mult) in pairs {
            if len == 0 {
                return Err(Error::Multiset("lengths must be positive".into()));
            }
            out.insert(len, mult);
        }
        Ok(out)
    }

    /// Counts every element of `lengths` once.
    pub fn from_lengths<I: IntoIterator<Item = usize>>(lengths: I) -> Self {
        let mut out = Self::new();
        for len in lengths {
            out.insert(len, 1);
        }
        out
    }

    /// Adds `mult` copies of `len`.
    ///
    /// # Panics
    /// If `len` is zero.
    pub fn insert(&mut self, len: usize, mult: usize) {
        assert!(len > 0, "edge lengths are positive");
        if mult > 0 {
            *self.counts.entry(len).or_insert(0) += mult;
        }
    }

    /// Removes up to `mult` copies of `len`, returning how many were removed.
    pub fn remove(&mut self, len: usize, mult: usize) -> usize {
        let Some(c) = self.counts.get_mut(&len) else {
            return 0;
        };
        let taken = mult.min(*c);
        *c -= taken;
        if *c == 0 {
            self.counts.remove(&len);
        }
        taken
    }

    pub fn count(&self, len: usize) -> usize {
        self.counts.get(&len).copied().unwrap_or(0)
    }

    /// Total multiplicity.
    pub fn size(&self) -> usize {
        self.counts.values().sum()
    }

    /// Order `v` of the complete graph: one more than the size.
    pub fn order(&self) -> usize {
        self.size() + 1
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// The underlying set, ascending.
    pub fn underlying(&self) -> Vec<usize> {
        self.counts.keys().copied().collect()
    }

    pub fn max_length(&self) -> Option<usize> {
        self.counts.keys().next_back().copied()
    }

    /// `(length, multiplicity)` pairs in ascending length order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.counts.iter().map(|(&l, &c)| (l, c))
    }

    /// Multiset union (multiplicities add).
    pub fn union(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (l, c) in other.iter() {
            out.insert(l, c);
        }
        out
    }

    /// `sL = { s*y : y in L }`.
    pub fn scaled(&self, s: usize) -> Self {
        assert!(s > 0);
        Self {
            counts: self.counts.iter().map(|(&l, &c)| (l * s, c)).collect(),
        }
    }

    /// Size of the multiset intersection.
    pub fn intersection_size(&self, other: &Self) -> usize {
        self.iter().map(|(l, c)| c.min(other.count(l))).sum()
    }

    /// True when `self` is contained in `other` (multiplicities included).
    pub fn is_submultiset_of(&self, other: &Self) -> bool {
        self.iter().all(|(l, c)| other.count(l) >= c)
    }

    /// Every length is at most `floor(v/2)`.
    pub fn is_well_formed(&self) -> bool {
        self.max_length().is_none_or(|l| l <= self.order() / 2)
    }

    /// Number of elements of the multiset that are multiples of `d`.
    pub fn multiples_of(&self, d: usize) -> usize {
        self.iter().filter(|(l, _)| l % d == 0).map(|(_, c)| c).sum()
    }

    /// Checks the necessary condition for a cyclic realization to exist.
    pub fn admissibility(&self) -> Admissibility {
        let v = self.order();
        if let Some(max) = self.max_length() {
            if max > v / 2 {
                return Admissibility::TooLong {
                    length: max,
                    max: v / 2,
                };
            }
        }
        for d in 2..=v {
            if !v.is_multiple_of(d) {
                continue;
            }
            let multiples = self.multiples_of(d);
            if multiples > v - d {
                return Admissibility::DivisorViolation {
                    divisor: d,
                    multiples,
                    limit: v - d,
                };
            }
        }
        Admissibility::Admissible
    }

    pub fn is_admissible(&self) -> bool {
        self.admissibility().is_admissible()
    }
}

/// Verdict of [`LengthMultiset::admissibility`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Admissibility {
    Admissible,
    /// Some length exceeds `floor(v/2)`.
    TooLong { length: usize, max: usize },
    /// The smallest divisor `d` of `v` with more than `v - d` multiples of `d`.
    DivisorViolation {
        divisor: usize,
        multiples: usize,
        limit: usize,
    },
}

impl Admissibility {
    pub fn is_admissible(&self) -> bool {
        matches!(self, Admissibility::Admissible)
    }
}

impl fmt::Display for Admissibility {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Admissibility::Admissible => f.write_str("admissible"),
            Admissibility::TooLong { length, max } => {
                write!(f, "length {length} exceeds floor(v/2) = {max}")
            }
            Admissibility::DivisorViolation {
                divisor,
                multiples,
                limit,
            } => write!(
                f,
                "divisor {divisor}: {multiples} multiples of {divisor}, at most {limit} allowed"
            ),
        }
    }
}

impl fmt::Display for LengthMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (l, c) in self.iter() {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            if c == 1 {
                write!(f, "{l}")?;
            } else {
                write!(f, "{l}^{c}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for LengthMultiset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut out = Self::new();
        for term in s.split_whitespace() {
            let (len, mult) = match term.split_once('^') {
                Some((l, m)) => (l, m),
                None => (term, "1"),
            };
            let len: usize = len
                .parse()
                .map_err(|_| Error::Multiset(format!("bad length in term `{term}`")))?;
            let mult: usize = mult
                .parse()
                .map_err(|_| Error::Multiset(format!("bad multiplicity in term `{term}`")))?;
            if len == 0 {
                return Err(Error::Multiset(format!("zero length in term `{term}`")));
            }
            if mult == 0 {
                return Err(Error::Multiset(format!("zero multiplicity in term `{term}`")));
            }
            out.insert(len, mult);
        }
        Ok(out)
    }
}

impl Serialize for LengthMultiset {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for LengthMultiset {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
