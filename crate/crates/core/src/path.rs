//! Hamiltonian paths of `K_v` and their edge lengths.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::multiset::LengthMultiset;

/// Cyclic length of the edge `{a, b}` in `K_v`: `min(|a-b|, v-|a-b|)`.
pub fn edge_length(a: usize, b: usize, v: usize) -> Result<usize> {
    for vertex in [a, b] {
        if vertex >= v {
            return Err(Error::VertexOutOfRange { vertex, order: v });
        }
    }
    if a == b {
        return Err(Error::InvalidEdge { a, b });
    }
    Ok(cyclic_length(a, b, v))
}

/// [`edge_length`] without range checks.
#[inline]
pub(crate) fn cyclic_length(a: usize, b: usize, v: usize) -> usize {
    let d = a.abs_diff(b);
    d.min(v - d)
}

/// An ordering of all vertices `0..v` of `K_v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct HamPath {
    vertices: Vec<usize>,
}

impl HamPath {
    /// Validates that `vertices` is a permutation of `0..vertices.len()`.
    pub fn new(vertices: Vec<usize>) -> Result<Self> {
        let v = vertices.len();
        if v == 0 {
            return Err(Error::InvalidPath("empty".into()));
        }
        let mut seen = vec![false; v];
        for &h in &vertices {
            if h >= v {
                return Err(Error::InvalidPath(format!("label {h} >= order {v}")));
            }
            if std::mem::replace(&mut seen[h], true) {
                return Err(Error::InvalidPath(format!("label {h} repeated")));
            }
        }
        Ok(Self { vertices })
    }

    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.vertices
    }

    pub fn reversed(&self) -> Self {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        Self { vertices }
    }

    /// Consecutive pairs `(h_i, h_{i+1})`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices.windows(2).map(|w| (w[0], w[1]))
    }

    /// Edge-length sequence in path order.
    pub fn length_sequence(&self) -> Vec<usize> {
        let v = self.order();
        self.edges().map(|(a, b)| cyclic_length(a, b, v)).collect()
    }

    /// Starts at 0.
    pub fn is_standard(&self) -> bool {
        self.vertices[0] == 0
    }

    /// Starts at 0 and ends at `v - 1`.
    pub fn is_perfect(&self) -> bool {
        self.is_standard() && *self.vertices.last().unwrap() == self.order() - 1
    }
}

impl TryFrom<Vec<usize>> for HamPath {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<HamPath> for Vec<usize> {
    fn from(p: HamPath) -> Self {
        p.vertices
    }
}

/// The multiset of cyclic edge lengths along `path`.
pub fn cyclic_lengths(path: &HamPath) -> LengthMultiset {
    LengthMultiset::from_lengths(path.length_sequence())
}

/// Multiset of absolute differences `|h_i - h_{i+1}|` of `path`.
pub fn linear_diffs(path: &HamPath) -> LengthMultiset {
    linear_diffs_of(path.vertices())
}

/// Absolute differences of an arbitrary integer sequence (which need not be
/// a Hamiltonian path, e.g. a translate).
pub fn linear_diffs_of(seq: &[usize]) -> LengthMultiset {
    LengthMultiset::from_lengths(seq.windows(2).map(|w| w[0].abs_diff(w[1])))
}

/// `h + m`, elementwise.
pub fn translate(seq: &[usize], m: usize) -> Vec<usize> {
    seq.iter().map(|&h| h + m).collect()
}

/// Outcome of [`verify_realization`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verification {
    Realizes,
    /// The path order is not `|L| + 1`.
    OrderMismatch { path_order: usize, expected: usize },
    /// Right order, wrong lengths; carries what the path does realize.
    MultisetMismatch { actual: LengthMultiset },
}

impl Verification {
    pub fn holds(&self) -> bool {
        matches!(self, Verification::Realizes)
    }
}

/// Checks that `path` is a cyclic realization of `target`.
pub fn verify_realization(path: &HamPath, target: &LengthMultiset) -> Verification {
    if path.order() != target.order() {
        return Verification::OrderMismatch {
            path_order: path.order(),
            expected: target.order(),
        };
    }
    let actual = cyclic_lengths(path);
    if &actual == target {
        Verification::Realizes
    } else {
        Verification::MultisetMismatch { actual }
    }
}
