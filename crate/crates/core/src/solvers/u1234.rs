use super::{admissibility_gate, covered, external, multiset, solve_u123, SolveOptions, SolveOutcome};
use crate::error::Result;

/// `{1^a, 2^b, 3^c, 4^d}`.
///
/// Ladder, in order:
/// 1. at most two distinct lengths: searched (known result);
/// 2. `d = 0`: the `{1,2,3}` driver, or searched if a length is missing;
/// 3. underlying set `{1,2,4}`: searched (known result);
/// 4. `a >= 3`, or `a = 2` with `b >= 1`: searched (known result);
/// 5. `a = 2, b = 0`: `{3,4}`-growable rows of `{1^2, 3^c, 4^d}`, then the
///    single realization of `{1^2, 3, 4^4}`;
/// 6. `a = 1`, `b` even: rows of `{1, 3^c, 4^d}` grown by 2s, then rows of
///    `{1, 2^b, 3^c, 4^d}` with `b` even;
/// 7. `a = 1`, `b` odd: rows of `{1, 2^b, 3^c, 4^d}` with `b` odd;
/// 8. `a = 0`, `b` odd: rows of `{2^b, 3^c, 4^d}` with `b` odd, then the
///    4-growable `{2, 3, 4^8}`;
/// 9. `a = 0`, `b >= 2` even: rows of `{2^b, 3^c, 4^d}` with `b` even.
pub fn solve_u1234(a: usize, b: usize, c: usize, d: usize, opts: &SolveOptions) -> Result<SolveOutcome> {
    let l = multiset(&[(1, a), (2, b), (3, c), (4, d)]);
    if let Some(o) = admissibility_gate(&l) {
        return Ok(o);
    }
    if l.underlying().len() <= 2 {
        return external(&l, opts, "at most two distinct lengths");
    }
    if d == 0 {
        return solve_u123(a, b, c, opts);
    }
    if c == 0 {
        return external(&l, opts, "underlying set {1,2,4}");
    }
    if a >= 3 || (a == 2 && b >= 1) {
        return external(&l, opts, "a >= 3, or a = 2 with b >= 1");
    }
    let tables: &[&str] = match (a, b.is_multiple_of(2)) {
        (2, _) => &["u134-a2", "u134-a2-extra", "u1234-supp"],
        (1, true) => &["u1234-a1-b0", "u1234-a1-beven", "u1234-supp"],
        (1, false) => &["u1234-a1-bodd", "u1234-supp"],
        (_, false) => &["u234-bodd", "u234-bodd-extra", "u1234-supp"],
        (_, true) => &["u234-beven", "u1234-supp"],
    };
    covered(&l, tables, "u1234", opts)
}
