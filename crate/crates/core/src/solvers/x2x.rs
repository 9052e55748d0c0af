use super::{admissibility_gate, external, multiset, out_of_range, SolveOptions, SolveOutcome};
use crate::certificate::{Certificate, TraceStep};
use crate::error::{Error, Result};
use crate::families::seed_for_residue;
use crate::growth::{multi_grow, x2x_swap, GrowthSchedule};
use crate::multiset::LengthMultiset;
use crate::seeds::{lookup_seed, Variant};

/// One swap with `i` (if `i > 0`) to fix the class of the `2x` count, swaps
/// with `i = x` until `c` copies of `2x` are present, then plain growth of
/// `x` and then 1.
fn replay(seed: Certificate, x: usize, a: usize, b: usize, c: usize, i: usize) -> Result<Certificate> {
    let mut cur = seed;
    if i > 0 {
        cur = x2x_swap(&cur, x, i)?;
    }
    let have_c = cur.multiset().count(2 * x);
    if c < have_c || !(c - have_c).is_multiple_of(2 * x) {
        return Err(Error::InvalidParameters(format!("cannot reach {c} copies of {}", 2 * x)));
    }
    for _ in 0..(c - have_c) / (2 * x) {
        cur = x2x_swap(&cur, x, x)?;
    }
    let (have_a, have_b) = (cur.multiset().count(1), cur.multiset().count(x));
    if a < have_a || b < have_b || !(b - have_b).is_multiple_of(x) {
        return Err(Error::InvalidParameters(format!(
            "reached {{1^{have_a}, {x}^{have_b}}}, which does not grow into {{1^{a}, {x}^{b}}}"
        )));
    }
    multi_grow(&cur, &GrowthSchedule::new(vec![(x, (b - have_b) / x), (1, a - have_a)]))
}

fn finish(
    l: &LengthMultiset,
    built: Result<Certificate>,
    step: TraceStep,
    opts: &SolveOptions,
) -> Result<SolveOutcome> {
    match built {
        Ok(c) => Ok(SolveOutcome::Solved {
            certificate: c.with_step(step),
        }),
        Err(e) => out_of_range(l, opts, format!("construction failed: {e}")),
    }
}

/// `{1^a, 3^b, 6^c}` for `a >= 1` and `b >= 13 + c/2` (`c` even) or
/// `b >= 18 + (c-1)/2` (`c` odd).
///
/// Starts from `g1`-`g3` (even `c`) or `g4`-`g6` (odd `c`), choosing the
/// row whose count of 3 is congruent to `b + 2i` mod 3, where `2i` is the
/// remainder of `c` (less one when odd) mod 6.
pub fn solve_136(a: usize, b: usize, c: usize, opts: &SolveOptions) -> Result<SolveOutcome> {
    let l = multiset(&[(1, a), (3, b), (6, c)]);
    if let Some(o) = admissibility_gate(&l) {
        return Ok(o);
    }
    if a == 0 || b == 0 {
        return external(&l, opts, "at most two distinct lengths");
    }
    let (odd, base) = (c % 2 == 1, c % 2);
    let bound = if odd { 18 + (c - 1) / 2 } else { 13 + c / 2 };
    if b < bound {
        return out_of_range(&l, opts, format!("needs at least {bound} copies of 3"));
    }
    let i = ((c - base) / 2) % 3;
    let names = if odd { ["g4", "g5", "g6"] } else { ["g1", "g2", "g3"] };
    let want = (b + 2 * i) % 3;
    let mut pick = None;
    for name in names {
        let e = lookup_seed(&[1, 3, 6], &[], &Variant::Named(name.into()))?;
        if e.multiset.count(3) % 3 == want {
            pick = Some(e);
            break;
        }
    }
    let e = pick.ok_or_else(|| Error::NoSuchSeed(format!("{{1,3,6}} row with 3-count = {want} mod 3")))?;
    if e.multiset.count(1) > a {
        return out_of_range(&l, opts, format!("{} has more 1s than {{{l}}}", e.describe()));
    }
    let step = TraceStep::new("u136").param("i", i).note(e.describe());
    finish(&l, replay(e.certificate()?, 3, a, b, c, i), step, opts)
}

/// `{1^a, x^b, (2x)^c}` for `x >= 4`, `a >= x-2`, even `c` and
/// `b >= 5x - 2 + c/2`. Smaller `x` go to [`solve_136`] or search.
///
/// `i = (c/2) mod x`; the starting `{1,x}`-growable realization is the
/// closed-form one with `b' = b + 2i` mod `x`.
pub fn solve_1x2x(a: usize, b: usize, c: usize, x: usize, opts: &SolveOptions) -> Result<SolveOutcome> {
    if x == 0 {
        return Err(Error::InvalidParameters("x must be positive".into()));
    }
    let l = multiset(&[(1, a), (x, b), (2 * x, c)]);
    if let Some(o) = admissibility_gate(&l) {
        return Ok(o);
    }
    match x {
        1 | 2 => return external(&l, opts, "underlying set {1,2} or {1,2,4}"),
        3 => return solve_136(a, b, c, opts),
        _ => {}
    }
    if l.underlying().len() <= 2 && c > 0 {
        return external(&l, opts, "at most two distinct lengths");
    }
    if a + 2 < x || c % 2 == 1 || b + 2 < 5 * x + c / 2 {
        return out_of_range(
            &l,
            opts,
            format!("needs a >= {}, c even and b >= {}", x - 2, 5 * x - 2 + c / 2),
        );
    }
    let i = (c / 2) % x;
    let residue = (b + 2 * i) % x;
    let seed = seed_for_residue(x, residue)?;
    if seed.multiset().count(1) > a {
        // Only residue 1 needs x-1 ones, and then {1^(x-2), ...} fails the
        // divisor condition at d = x, so this is unreachable for admissible
        // input.
        return Err(Error::InvalidParameters(format!(
            "residue {residue} needs {} ones but a = {a}",
            seed.multiset().count(1)
        )));
    }
    let step = TraceStep::new("u1x2x").param("x", x).param("i", i).param("residue", residue);
    finish(&l, replay(seed, x, a, b, c, i), step, opts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path::cyclic_lengths;

    #[test]
    fn two_swap_route_136() {
        let o = solve_136(3, 18, 10, &SolveOptions::default()).unwrap();
        let c = o.certificate().unwrap();
        assert_eq!(
            c.path().vertices(),
            &[31, 30, 1, 4, 7, 13, 10, 16, 22, 19, 25, 28, 29, 0, 3, 6, 12, 9, 15, 21, 18, 24, 27, 26, 23, 20, 17, 11, 14, 8, 5, 2]
        );
    }

    #[test]
    fn other_136_routes() {
        let opts = SolveOptions::default();
        let o = solve_136(2, 13, 0, &opts).unwrap();
        assert_eq!(cyclic_lengths(o.certificate().unwrap().path()), multiset(&[(1, 2), (3, 13)]));
        assert!(matches!(solve_136(1, 18, 1, &opts).unwrap(), SolveOutcome::NotAdmissible { .. }));
        let o = solve_136(1, 19, 1, &opts).unwrap();
        assert!(o.certificate().unwrap().trace().iter().any(|t| t.note.as_deref().is_some_and(|n| n.contains("g4"))));
        assert!(matches!(solve_136(2, 12, 0, &opts).unwrap(), SolveOutcome::OutOfProvenRange { .. }));
        assert!(matches!(solve_136(1, 13, 0, &opts).unwrap(), SolveOutcome::NotAdmissible { .. }));
    }

    #[test]
    fn examples_1x2x() {
        let opts = SolveOptions::default();
        assert!(matches!(solve_1x2x(6, 39, 2, 8, &opts).unwrap(), SolveOutcome::NotAdmissible { .. }));
        assert!(matches!(solve_1x2x(7, 48, 16, 9, &opts).unwrap(), SolveOutcome::NotAdmissible { .. }));
        // (7, 54, 20, 9): i = 1, then one swap with i = x.
        for (a, b, c, x) in [(6, 38, 0, 8), (6, 40, 2, 8), (7, 54, 20, 9)] {
            let o = solve_1x2x(a, b, c, x, &opts).unwrap();
            assert!(o.is_solved(), "{a} {b} {c} {x}: {o:?}");
            assert_eq!(o.certificate().unwrap().multiset(), &multiset(&[(1, a), (x, b), (2 * x, c)]));
        }
        assert!(matches!(solve_1x2x(6, 37, 0, 8, &opts).unwrap(), SolveOutcome::OutOfProvenRange { .. }));
        assert!(matches!(solve_1x2x(6, 40, 3, 8, &opts).unwrap(), SolveOutcome::OutOfProvenRange { .. }));
    }

    #[test]
    fn residue_one_forcing() {
        // b + 2i = 1 mod x with a = x - 2 is never admissible.
        let opts = SolveOptions::default();
        for x in 4..=9 {
            for c in (0..=12).step_by(2) {
                let i = (c / 2) % x;
                let lo = 5 * x - 2 + c / 2;
                for b in lo..lo + x {
                    if (b + 2 * i) % x == 1 {
                        let o = solve_1x2x(x - 2, b, c, x, &opts).unwrap();
                        assert!(matches!(o, SolveOutcome::NotAdmissible { .. }), "x={x} b={b} c={c}");
                    }
                }
            }
        }
    }
}
