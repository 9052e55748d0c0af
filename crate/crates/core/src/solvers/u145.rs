use super::{admissibility_gate, covered, external, multiset, SolveOptions, SolveOutcome};
use crate::error::Result;

/// `{1^a, 4^b, 5^c}`.
///
/// `a >= 2`: the twenty `{1,4,5}`-growable rows of `{1^2, 4^b, 5^c}`, then
/// the `{1,5}`-, `5`- and `1`-growable exception rows of the same table,
/// then the `a >= 3` rows. `a = 1`: the `{4,5}`-growable rows of
/// `{1, 4^b, 5^c}` with the `{1, 4, 5^11}` extra, the 4-growable `c <= 5`
/// rows, and the single realization of `{1, 4^3, 5^5}`. Inputs with a zero
/// count have at most two lengths and are searched.
pub fn solve_u145(a: usize, b: usize, c: usize, opts: &SolveOptions) -> Result<SolveOutcome> {
    let l = multiset(&[(1, a), (4, b), (5, c)]);
    if let Some(o) = admissibility_gate(&l) {
        return Ok(o);
    }
    if a == 0 || b == 0 || c == 0 {
        return external(&l, opts, "at most two distinct lengths");
    }
    if a >= 2 {
        covered(&l, &["u145-a2", "u145-a3", "u145-supp"], "u145", opts)
    } else {
        covered(&l, &["u145-a1", "u145-a1-small", "u145-a1-extra", "u145-supp"], "u145", opts)
    }
}
