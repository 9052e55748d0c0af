//! Regenerates `src/seeds/supplement.txt`.
//!
//! Walks every admissible multiset of the table-driven classes up to order
//! `VMAX` (default 40), smallest order first. Whenever a driver cannot grow
//! the multiset from its tables nor from a row already found here, a
//! realization of that multiset is found by local search and becomes a new
//! row, carrying the first grow point of each of its lengths.
//!
//! Usage: cargo run --release -p bhr-core --example supplement [VMAX] > supplement.txt

use bhr_core::search::local_search;
use bhr_core::solvers::{grow_into, solve_u123, solve_u1234, solve_u145};
use bhr_core::{growth_points_for, Certificate, GrowPoint, LengthMultiset, SearchConfig, SolveOptions, SolveOutcome};

const HEADER: &str = "\
# Supplementary seeds, same format as tables.txt.
#
# The printed constructions leave some admissible multisets unreached: a
# carried grow point can stop holding when an edge of length v/2 changes
# side, and a few count classes have no row with the needed grow point.
# Each row below realizes the smallest such multiset of its class, with the
# first grow point of every length it contains. Regenerate with
# `cargo run --release -p bhr-core --example supplement`.
";

struct Class {
    id: &'static str,
    lengths: &'static [usize],
    about: &'static str,
    /// Count vectors (over `lengths`) handled by the table drivers.
    targets: fn(usize) -> Vec<Vec<usize>>,
    solve: fn(&[usize], &SolveOptions) -> SolveOutcome,
}

fn counts(n: usize, k: usize, min: usize) -> Vec<Vec<usize>> {
    if k == 1 {
        return if n >= min { vec![vec![n]] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in min..=n {
        for mut rest in counts(n - first, k - 1, min) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn multiset(lengths: &[usize], c: &[usize]) -> LengthMultiset {
    LengthMultiset::from_counts(lengths.iter().copied().zip(c.iter().copied())).unwrap()
}

fn candidate(l: &LengthMultiset, seed: u64) -> Option<Certificate> {
    let cfg = SearchConfig {
        rng_seed: seed,
        ..SearchConfig::default()
    };
    let c = local_search(l, &cfg).ok()??;
    let points: Vec<GrowPoint> = l
        .underlying()
        .into_iter()
        .filter_map(|x| growth_points_for(c.path(), x).into_iter().next())
        .collect();
    Certificate::from_path(c.path().clone(), points).ok()
}

/// How many one-step extensions `l + {x^x}` (and all of them at once) the
/// row reaches.
fn robustness(c: &Certificate, l: &LengthMultiset) -> usize {
    let xs: Vec<usize> = c.grow_points().iter().map(|p| p.x).collect();
    let mut all = l.clone();
    let mut n = 0;
    for &x in &xs {
        let mut t = l.clone();
        t.insert(x, x);
        all.insert(x, x);
        n += grow_into(c, &t).ok().flatten().is_some() as usize;
    }
    n + grow_into(c, &all).ok().flatten().is_some() as usize
}

fn main() {
    let vmax: usize = std::env::args().nth(1).map_or(40, |s| s.parse().expect("VMAX"));
    let classes = [
        Class {
            id: "u123-supp",
            lengths: &[1, 2, 3],
            about: "computer-found realizations of {1^a,2^b,3^c}",
            targets: |n| counts(n, 3, 1),
            solve: |c, o| solve_u123(c[0], c[1], c[2], o).unwrap(),
        },
        Class {
            id: "u145-supp",
            lengths: &[1, 4, 5],
            about: "computer-found realizations of {1^a,4^b,5^c}",
            targets: |n| counts(n, 3, 1),
            solve: |c, o| solve_u145(c[0], c[1], c[2], o).unwrap(),
        },
        Class {
            id: "u1234-supp",
            lengths: &[1, 2, 3, 4],
            about: "computer-found realizations of {1^a,2^b,3^c,4^d}",
            targets: |n| counts(n, 4, 0),
            solve: |c, o| solve_u1234(c[0], c[1], c[2], c[3], o).unwrap(),
        },
    ];
    let opts = SolveOptions::default();
    print!("{HEADER}");
    for class in &classes {
        let mut rows: Vec<Certificate> = Vec::new();
        for n in 1..vmax {
            for c in (class.targets)(n) {
                let l = multiset(class.lengths, &c);
                if !l.is_admissible() || !matches!((class.solve)(&c, &opts), SolveOutcome::OutOfProvenRange { .. }) {
                    continue;
                }
                if rows.iter().any(|r| grow_into(r, &l).ok().flatten().is_some()) {
                    continue;
                }
                // First candidate with the best (points, robustness) score.
                let mut best: Option<((usize, usize), Certificate)> = None;
                for r in (0..32).filter_map(|s| candidate(&l, s)) {
                    let score = (r.grow_points().len(), robustness(&r, &l));
                    if best.as_ref().is_none_or(|(b, _)| score > *b) {
                        best = Some((score, r));
                    }
                }
                let best = best.map(|(_, r)| r);
                match best {
                    Some(r) => rows.push(r),
                    None => eprintln!("{}: no realization found for {{{l}}}", class.id),
                }
            }
        }
        let list = |xs: &[usize]| xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        println!();
        println!(
            "table {} lengths={} cols={} grow={}",
            class.id,
            list(class.lengths),
            list(class.lengths),
            list(class.lengths)
        );
        println!("about {}", class.about);
        for r in &rows {
            let path: Vec<String> = r.path().vertices().iter().map(|v| v.to_string()).collect();
            let params: Vec<usize> = class.lengths.iter().map(|&x| r.multiset().count(x)).collect();
            let ms: Vec<String> = class
                .lengths
                .iter()
                .map(|&x| r.grow_point(x).map_or("-".to_string(), |p| p.m.to_string()))
                .collect();
            println!(". | {} | {} | {}", path.join(" "), list(&params), ms.join(","));
        }
    }
}
