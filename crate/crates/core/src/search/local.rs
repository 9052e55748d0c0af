use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::SearchConfig;
use crate::certificate::{Certificate, TraceStep};
use crate::error::{Error, Result};
use crate::growable::growth_points;
use crate::multiset::LengthMultiset;
use crate::path::{cyclic_length, HamPath};

/// One reconnection after cutting the edge `p[i], p[i+1]` into a prefix `A`
/// and a suffix `B`.
#[derive(Clone, Copy, Debug)]
enum Move {
    /// `A + rev(B)`: joins the two path ends.
    ReverseSuffix(usize),
    /// `rev(A) + B`: joins the two path starts.
    ReversePrefix(usize),
    /// `B + A`: joins the end of `B` to the start of `A`.
    Rotate(usize),
}

struct State<'a> {
    want: &'a [usize],
    have: Vec<usize>,
    path: Vec<usize>,
    score: usize,
}

impl<'a> State<'a> {
    fn new(want: &'a [usize], path: Vec<usize>) -> Self {
        let v = path.len();
        let mut have = vec![0; want.len()];
        for w in path.windows(2) {
            have[cyclic_length(w[0], w[1], v)] += 1;
        }
        let score = have.iter().zip(want).map(|(h, w)| h.min(w)).sum();
        Self { want, have, path, score }
    }

    fn len(&self, a: usize, b: usize) -> usize {
        cyclic_length(self.path[a], self.path[b], self.path.len())
    }

    /// Change in `|L ∩ L'|` from swapping one edge of length `r` for one of
    /// length `n`.
    fn delta(&self, r: usize, n: usize) -> isize {
        if r == n {
            return 0;
        }
        let gain = (self.have[n] < self.want[n]) as isize;
        let loss = (self.have[r] <= self.want[r]) as isize;
        gain - loss
    }

    fn lengths(&self, mv: Move) -> (usize, usize) {
        let last = self.path.len() - 1;
        match mv {
            Move::ReverseSuffix(i) => (self.len(i, i + 1), self.len(i, last)),
            Move::ReversePrefix(i) => (self.len(i, i + 1), self.len(0, i + 1)),
            Move::Rotate(i) => (self.len(i, i + 1), self.len(last, 0)),
        }
    }

    fn apply(&mut self, mv: Move) {
        let (r, n) = self.lengths(mv);
        let d = self.delta(r, n);
        self.score = (self.score as isize + d) as usize;
        self.have[r] -= 1;
        self.have[n] += 1;
        match mv {
            Move::ReverseSuffix(i) => self.path[i + 1..].reverse(),
            Move::ReversePrefix(i) => self.path[..=i].reverse(),
            Move::Rotate(i) => self.path.rotate_left(i + 1),
        }
    }
}

fn moves(v: usize) -> Vec<Move> {
    let mut out = Vec::with_capacity(3 * v);
    for i in 0..v.saturating_sub(1) {
        if i + 2 < v {
            out.push(Move::ReverseSuffix(i));
        }
        if i >= 1 {
            out.push(Move::ReversePrefix(i));
        }
        out.push(Move::Rotate(i));
    }
    out
}

/// One restart. Returns the realizing path and the number of moves made.
fn climb(want: &[usize], v: usize, cfg: &SearchConfig, restart: usize) -> Option<(Vec<usize>, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.rng_seed);
    rng.set_stream(restart as u64);
    let mut start: Vec<usize> = (0..v).collect();
    start.shuffle(&mut rng);
    let mut st = State::new(want, start);
    let target = v - 1;
    let all = moves(v);
    let mut best = Vec::with_capacity(all.len());
    let (mut stale, mut steps) = (0, 0);
    while st.score < target {
        if stale >= cfg.max_steps_per_restart || all.is_empty() {
            return None;
        }
        let mut top = isize::MIN;
        best.clear();
        for &mv in &all {
            let (r, n) = st.lengths(mv);
            let d = st.delta(r, n);
            if d > top {
                top = d;
                best.clear();
            }
            if d == top {
                best.push(mv);
            }
        }
        let mv = best[rng.gen_range(0..best.len())];
        st.apply(mv);
        steps += 1;
        if top > 0 {
            stale = 0;
        } else {
            stale += 1;
        }
    }
    Some((st.path, steps))
}

/// Hill-climbs on `|L ∩ L'|` from random Hamiltonian paths.
///
/// A move cuts one path edge and rejoins the two pieces another way, so it
/// replaces exactly one edge length. The best move is taken each step, with
/// ties (including sideways moves on a plateau) broken at random; a restart
/// happens after `max_steps_per_restart` moves without improvement.
/// Restart `k` draws from stream `k` of a ChaCha8 generator keyed by
/// `rng_seed`, and the lowest successful restart wins, so the result does
/// not depend on thread scheduling.
pub fn local_search(target: &LengthMultiset, cfg: &SearchConfig) -> Result<Option<Certificate>> {
    cfg.validate()?;
    let adm = target.admissibility();
    if !adm.is_admissible() {
        return Err(Error::NotAdmissible(adm.to_string()));
    }
    let v = target.order();
    let mut want = vec![0; v / 2 + 1];
    for (l, c) in target.iter() {
        want[l] = c;
    }
    let mut restart = 0;
    while restart < cfg.max_restarts {
        let batch = cfg.parallel_restarts.min(cfg.max_restarts - restart);
        let found = (restart..restart + batch)
            .into_par_iter()
            .map(|k| climb(&want, v, cfg, k).map(|r| (k, r)))
            .find_first(|r| r.is_some())
            .flatten();
        if let Some((k, (path, steps))) = found {
            let path = HamPath::new(path)?;
            let points = growth_points(&path);
            let step = TraceStep::new("local_search")
                .param("seed", cfg.rng_seed)
                .param("restart", k)
                .param("moves", steps);
            return Certificate::with_trace(path, target.clone(), points, vec![step]).map(Some);
        }
        restart += batch;
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ms(s: &str) -> LengthMultiset {
        s.parse().unwrap()
    }

    #[test]
    fn finds_small_realizations() {
        let cfg = SearchConfig::default();
        for s in ["1^2 2 3^3", "2^2 3^4", "1", "1^2", "3^6", "1^4 2^9 3^17 4"] {
            let c = local_search(&ms(s), &cfg).unwrap().unwrap_or_else(|| panic!("{s}"));
            assert_eq!(c.multiset(), &ms(s));
        }
    }

    #[test]
    fn rejects_inadmissible() {
        assert!(matches!(
            local_search(&ms("2^5"), &SearchConfig::default()),
            Err(Error::NotAdmissible(_))
        ));
    }

    #[test]
    fn deterministic_under_seed() {
        let cfg = SearchConfig {
            rng_seed: 11,
            ..SearchConfig::default()
        };
        let serial = SearchConfig {
            parallel_restarts: 1,
            ..cfg
        };
        let l = ms("1^3 2^4 3^5 4^2");
        let a = local_search(&l, &cfg).unwrap().unwrap();
        let b = local_search(&l, &cfg).unwrap().unwrap();
        let c = local_search(&l, &serial).unwrap().unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c);
    }

    #[test]
    fn moves_change_one_length() {
        let want = vec![0, 3, 2, 1];
        let mut st = State::new(&want, vec![0, 5, 1, 2, 6, 3, 4]);
        for mv in moves(7) {
            let before = st.path.clone();
            let (r, n) = st.lengths(mv);
            st.apply(mv);
            let fresh = State::new(&want, st.path.clone());
            assert_eq!(fresh.have, st.have, "{mv:?} (removed {r}, added {n})");
            assert_eq!(fresh.score, st.score);
            st = State::new(&want, before);
        }
    }
}
