//! Growability: where a realization can absorb `x` new copies of length `x`.
//!
//! `m` is always a vertex *label*, never a position in the path. The check
//! embeds `K_v` into `K_{v+x}` by fixing labels `<= m` and shifting the rest
//! up by `x`, then looks at which edges got longer.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::path::{cyclic_length, HamPath};

/// A length `x` and a vertex label `m` at which a path is `x`-growable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GrowPoint {
    pub x: usize,
    pub m: usize,
}

impl GrowPoint {
    pub fn new(x: usize, m: usize) -> Self {
        Self { x, m }
    }
}

impl fmt::Display for GrowPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.m)
    }
}

/// One lengthened edge of a growable embedding: the path position of the
/// edge and its endpoint `y` in the window `(m-x, m]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Lengthened {
    /// The edge joins `path[pos]` and `path[pos + 1]`.
    pub pos: usize,
    pub y: usize,
}

fn check_range(v: usize, x: usize, m: usize) -> Result<()> {
    if x == 0 || 2 * x > v || m >= v {
        return Err(Error::GrowPointOutOfRange { x, m, order: v });
    }
    Ok(())
}

/// Lengthened edges for the `(x, m)` embedding, or `None` when the path is
/// not `x`-growable at `m`.
///
/// Every vertex `y` with `m - x < y <= m` must meet exactly one lengthened
/// edge and no other edge may lengthen. The partner of `y` may lie above
/// `m` or, for an edge whose length wraps around, below the window. This
/// needs `m >= x - 1` so that the window holds `x` labels.
pub(crate) fn lengthened_edges(path: &HamPath, x: usize, m: usize) -> Option<Vec<Lengthened>> {
    let v = path.order();
    if m + 1 < x {
        return None;
    }
    let lo = m + 1 - x;
    let embed = |y: usize| if y <= m { y } else { y + x };
    let mut hit = vec![false; x];
    let mut out = Vec::with_capacity(x);
    for (pos, (a, b)) in path.edges().enumerate() {
        if cyclic_length(embed(a), embed(b), v + x) == cyclic_length(a, b, v) {
            continue;
        }
        let in_window = |y: usize| (lo..=m).contains(&y);
        let y = match (in_window(a), in_window(b)) {
            (true, false) => a,
            (false, true) => b,
            _ => return None,
        };
        if std::mem::replace(&mut hit[y - lo], true) {
            return None;
        }
        out.push(Lengthened { pos, y });
    }
    (out.len() == x).then_some(out)
}

/// Whether `path` is `x`-growable at label `m`.
///
/// Errors when `x` is not in `1..=v/2` or `m` is not a label of `K_v`.
pub fn is_growable_at(path: &HamPath, x: usize, m: usize) -> Result<bool> {
    check_range(path.order(), x, m)?;
    Ok(lengthened_edges(path, x, m).is_some())
}

/// All `x`-grow points for one `x`, ascending in `m`.
pub fn growth_points_for(path: &HamPath, x: usize) -> Vec<GrowPoint> {
    let v = path.order();
    if x == 0 || 2 * x > v {
        return Vec::new();
    }
    (x - 1..v)
        .filter(|&m| lengthened_edges(path, x, m).is_some())
        .map(|m| GrowPoint { x, m })
        .collect()
}

/// Every grow point of `path`, sorted by `(x, m)`.
pub fn growth_points(path: &HamPath) -> Vec<GrowPoint> {
    (1..=path.order() / 2)
        .flat_map(|x| growth_points_for(path, x))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(v: &[usize]) -> HamPath {
        HamPath::new(v.to_vec()).unwrap()
    }

    /// Literal reading of the definition, written independently: count, for
    /// every vertex in the window, the incident edges whose length grows, and
    /// require that every growing edge has exactly one end in the window.
    fn oracle(p: &[usize], x: usize, m: usize) -> bool {
        let v = p.len();
        if m + 1 < x {
            return false;
        }
        let len = |a: usize, b: usize, n: usize| {
            let d = a.abs_diff(b);
            std::cmp::min(d, n - d)
        };
        let img = |y: usize| if y > m { y + x } else { y };
        let grown: Vec<(usize, usize)> = p
            .windows(2)
            .filter(|w| len(img(w[0]), img(w[1]), v + x) > len(w[0], w[1], v))
            .map(|w| (w[0], w[1]))
            .collect();
        let window: Vec<usize> = (m + 1 - x..=m).collect();
        let each_once = window
            .iter()
            .all(|&y| grown.iter().filter(|&&(a, b)| a == y || b == y).count() == 1);
        let all_touch = grown
            .iter()
            .all(|&(a, b)| window.contains(&a) != window.contains(&b));
        each_once && all_touch
    }

    #[test]
    fn three_growable_at_two() {
        let p = path(&[6, 4, 3, 0, 7, 1, 5, 2, 8]);
        assert_eq!(is_growable_at(&p, 3, 2), Ok(true));
    }

    #[test]
    fn five_points_of_the_fifteen_vertex_seed() {
        let p = path(&[0, 3, 6, 2, 1, 13, 10, 11, 14, 12, 9, 8, 5, 4, 7]);
        let pts = growth_points(&p);
        for (x, m) in [(1, 8), (1, 9), (2, 3), (3, 11), (4, 5)] {
            assert!(pts.contains(&GrowPoint::new(x, m)), "({x},{m}) missing from {pts:?}");
        }
        assert_eq!(is_growable_at(&p, 2, 3), Ok(true));
    }

    #[test]
    fn table_row_point() {
        let p = path(&[2, 5, 4, 1, 3, 0]);
        assert!(growth_points(&p).contains(&GrowPoint::new(1, 4)));
    }

    #[test]
    fn small_cases_match_oracle() {
        assert_eq!(is_growable_at(&path(&[0, 1, 2, 3]), 2, 0), Ok(oracle(&[0, 1, 2, 3], 2, 0)));
        assert_eq!(is_growable_at(&path(&[0, 1, 2, 3]), 2, 0), Ok(false));
        // In K_3 the image pair (0, 2) still has length 1, so nothing grows.
        assert_eq!(growth_points(&path(&[0, 1])), vec![]);
        assert!(!oracle(&[0, 1], 1, 0));
        assert!(!oracle(&[0, 1], 1, 1));
    }

    #[test]
    fn out_of_range() {
        let p = path(&[0, 1, 2, 3]);
        assert!(is_growable_at(&p, 0, 1).is_err());
        assert!(is_growable_at(&p, 3, 1).is_err());
        assert!(is_growable_at(&p, 1, 4).is_err());
    }

    #[test]
    fn exhaustive_double_scan_small_orders() {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for v in 2..=12 {
            for _ in 0..60 {
                let mut p: Vec<usize> = (0..v).collect();
                p.shuffle(&mut rng);
                let hp = path(&p);
                let pts = growth_points(&hp);
                for x in 1..=v / 2 {
                    for m in 0..v {
                        let expect = oracle(&p, x, m);
                        assert_eq!(pts.contains(&GrowPoint::new(x, m)), expect, "{p:?} ({x},{m})");
                        assert_eq!(is_growable_at(&hp, x, m), Ok(expect));
                    }
                }
            }
        }
    }
}
