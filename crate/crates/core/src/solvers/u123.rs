use super::{admissibility_gate, covered, external, multiset, SolveOptions, SolveOutcome};
use crate::error::Result;

/// `{1^a, 2^b, 3^c}`.
///
/// With `a, b, c >= 1`: the six `{1,2,3}`-growable rows of `{1, 2^b, 3^c}`
/// cover `c >= 5` by congruence class mod `(2, 3)`; the second block of
/// `{1,2}`-growable rows and the 1-growable `{1, 2, 3^3}` handle
/// `b + c >= 4`; the 1-growable rows of `{1^a, 2^b, 3^c}` finish
/// `b + c < 4`. A zero count leaves at most two lengths, which is searched.
pub fn solve_u123(a: usize, b: usize, c: usize, opts: &SolveOptions) -> Result<SolveOutcome> {
    let l = multiset(&[(1, a), (2, b), (3, c)]);
    if let Some(o) = admissibility_gate(&l) {
        return Ok(o);
    }
    if a == 0 || b == 0 || c == 0 {
        return external(&l, opts, "at most two distinct lengths");
    }
    covered(&l, &["u123", "u123-small", "u123-supp"], "u123", opts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let opts = SolveOptions::default();
        let o = solve_u123(1, 2, 3, &opts).unwrap();
        let c = o.certificate().unwrap();
        assert_eq!(c.path().vertices(), &[2, 4, 1, 5, 3, 0, 6]);

        let o = solve_u123(5, 6, 9, &opts).unwrap();
        assert!(o.is_solved());
        assert_eq!(o.certificate().unwrap().multiset(), &multiset(&[(1, 5), (2, 6), (3, 9)]));

        let o = solve_u123(3, 1, 1, &opts).unwrap();
        assert_eq!(o.certificate().unwrap().path().vertices(), &[0, 5, 4, 1, 3, 2]);
    }

    #[test]
    fn two_lengths_are_searched() {
        let o = solve_u123(4, 0, 2, &SolveOptions::default()).unwrap();
        assert!(matches!(o, SolveOutcome::SearchFallback { certificate: Some(_), .. }));
    }
}
