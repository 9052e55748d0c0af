use serde::Serialize;

use crate::certificate::{Certificate, TraceStep};
use crate::error::{Error, Result};
use crate::growable::growth_points;
use crate::multiset::LengthMultiset;
use crate::path::HamPath;

pub const DEFAULT_BRUTE_CAP: usize = 14;

/// The brute-force cap: `BHR_BRUTE_CAP` if set to a number, else
/// [`DEFAULT_BRUTE_CAP`].
pub fn default_brute_cap() -> usize {
    std::env::var("BHR_BRUTE_CAP")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_BRUTE_CAP)
}

/// Verdict of [`brute_force`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Oracle {
    Found { certificate: Certificate },
    /// The whole search space was explored.
    NoneExists,
    /// The node budget ran out first.
    Exhausted { nodes: u64 },
}

struct Dfs {
    v: usize,
    rem: Vec<usize>,
    used: Vec<bool>,
    path: Vec<usize>,
    nodes: u64,
    budget: Option<u64>,
}

impl Dfs {
    /// `Some(true)` found, `Some(false)` subtree empty, `None` out of budget.
    fn go(&mut self) -> Option<bool> {
        if self.path.len() == self.v {
            return Some(true);
        }
        self.nodes += 1;
        if self.budget.is_some_and(|b| self.nodes > b) {
            return None;
        }
        let cur = *self.path.last().unwrap();
        for l in 1..self.rem.len() {
            if self.rem[l] == 0 {
                continue;
            }
            let up = (cur + l) % self.v;
            let down = (cur + self.v - l) % self.v;
            for next in [up, down] {
                if self.used[next] {
                    if up == down {
                        break;
                    }
                    continue;
                }
                self.rem[l] -= 1;
                self.used[next] = true;
                self.path.push(next);
                let r = self.go();
                if r != Some(false) {
                    return r;
                }
                self.path.pop();
                self.used[next] = false;
                self.rem[l] += 1;
                if up == down {
                    break;
                }
            }
        }
        Some(false)
    }
}

/// Exhaustive depth-first search for a realization of `target`.
///
/// Rotating every label by a constant mod `v`, or negating every label,
/// keeps all cyclic lengths, so the search fixes the first vertex at 0 and
/// the second at most `v/2`. Each step only tries the two neighbours
/// `cur ± l` for lengths `l` still unused.
///
/// Errors when the order exceeds `cap`. `budget` bounds the number of
/// search nodes.
pub fn brute_force(target: &LengthMultiset, budget: Option<u64>, cap: usize) -> Result<Oracle> {
    let v = target.order();
    if v > cap {
        return Err(Error::CapExceeded { order: v, cap });
    }
    if target.max_length().is_some_and(|l| l > v / 2) {
        return Ok(Oracle::NoneExists);
    }
    let mut rem = vec![0; v / 2 + 1];
    for (l, c) in target.iter() {
        rem[l] = c;
    }
    let mut used = vec![false; v];
    used[0] = true;
    let mut dfs = Dfs {
        v,
        rem,
        used,
        path: vec![0],
        nodes: 0,
        budget,
    };
    let found = if v == 1 {
        Some(true)
    } else {
        // Second vertex: the label l itself, for each available length.
        let mut res = Some(false);
        for l in 1..dfs.rem.len() {
            if dfs.rem[l] == 0 {
                continue;
            }
            dfs.rem[l] -= 1;
            dfs.used[l] = true;
            dfs.path.push(l);
            res = dfs.go();
            if res != Some(false) {
                break;
            }
            dfs.path.pop();
            dfs.used[l] = false;
            dfs.rem[l] += 1;
        }
        res
    };
    match found {
        Some(true) => {
            let path = HamPath::new(dfs.path)?;
            let points = growth_points(&path);
            let step = TraceStep::new("brute_force").param("nodes", dfs.nodes);
            let certificate = Certificate::with_trace(path, target.clone(), points, vec![step])?;
            Ok(Oracle::Found { certificate })
        }
        Some(false) => Ok(Oracle::NoneExists),
        None => Ok(Oracle::Exhausted { nodes: dfs.nodes }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ms(s: &str) -> LengthMultiset {
        s.parse().unwrap()
    }

    #[test]
    fn finds_and_refutes() {
        assert!(matches!(brute_force(&ms("1^2 2 3^3"), None, 14).unwrap(), Oracle::Found { .. }));
        assert_eq!(brute_force(&ms("2^5"), None, 14).unwrap(), Oracle::NoneExists);
        let Oracle::Found { certificate } = brute_force(&ms("3^6"), None, 14).unwrap() else {
            panic!("{{3^6}} is realizable")
        };
        assert_eq!(certificate.path().vertices()[..2], [0, 3]);
        assert!(matches!(brute_force(&ms("1"), None, 14).unwrap(), Oracle::Found { .. }));
        assert!(matches!(brute_force(&LengthMultiset::new(), None, 14).unwrap(), Oracle::Found { .. }));
    }

    #[test]
    fn cap_and_budget() {
        assert!(matches!(
            brute_force(&ms("1^20"), None, 14),
            Err(Error::CapExceeded { order: 21, cap: 14 })
        ));
        assert!(matches!(
            brute_force(&ms("2^6 4^5"), Some(3), 14).unwrap(),
            Oracle::Exhausted { .. } | Oracle::NoneExists
        ));
    }

    #[test]
    fn length_above_half_has_none() {
        assert_eq!(brute_force(&ms("1 3"), None, 14).unwrap(), Oracle::NoneExists);
    }
}
