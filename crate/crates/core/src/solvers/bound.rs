use crate::error::{Error, Result};
use crate::multiset::LengthMultiset;

/// Number of 1s that makes `M ∪ {1^s}` realizable for every larger `s`:
/// `3 x_k - 5 + (x_1 + ... + x_k)` over the underlying set `x_1 < ... < x_k`
/// of `M`. Multiplicities do not matter.
pub fn hr_bound(m: &LengthMultiset) -> Result<usize> {
    let u = m.underlying();
    match (u.first(), u.last()) {
        (Some(1), _) => Err(Error::InvalidParameters("the multiset must not contain length 1".into())),
        (Some(_), Some(&top)) => Ok(3 * top + u.iter().sum::<usize>() - 5),
        _ => Err(Error::InvalidParameters("empty multiset".into())),
    }
}
