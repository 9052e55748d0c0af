//! Closed-form `{1, x}`-growable realizations of `{1^a, x^b}` for every
//! `x >= 4` and every `b` in `x+1 ..= 2x`.

use serde::Serialize;

use crate::certificate::{Certificate, TraceStep};
use crate::error::{Error, Result};
use crate::growable::GrowPoint;
use crate::multiset::LengthMultiset;
use crate::path::HamPath;

/// The three fixed shapes: `{1^(x-1), x^(x+1)}`, `{1^(x-2), x^(x+2)}` and
/// `{1^(x-2), x^(2x)}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Basic {
    XPlus1,
    XPlus2,
    TwoX,
}

impl Basic {
    pub fn b(self, x: usize) -> usize {
        match self {
            Basic::XPlus1 => x + 1,
            Basic::XPlus2 => x + 2,
            Basic::TwoX => 2 * x,
        }
    }

    pub fn a(self, x: usize) -> usize {
        match self {
            Basic::XPlus1 => x - 1,
            _ => x - 2,
        }
    }
}

/// Decomposition of `(x, b)` for the three-block constructions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyParams {
    pub x: usize,
    pub b: usize,
    pub r: usize,
    pub s: usize,
}

impl FamilyParams {
    /// Solves for `(r, s)` given `x` and `b` in `x+3 ..= 2x-1`.
    pub fn derive(x: usize, b: usize) -> Result<Self> {
        let bad = || Error::InvalidParameters(format!("no three-block construction for x={x}, b={b}"));
        if x < 4 || b < x + 3 || b > 2 * x - 1 {
            return Err(bad());
        }
        // (offset of b above x + 2r, constant in x = 2r + 2s + c)
        let (off, c) = match (x.is_multiple_of(2), b % 2 == 1) {
            (true, true) => (3, 4),
            (true, false) => (4, 6),
            (false, true) => (4, 5),
            (false, false) => (3, 5),
        };
        let twice_r = b - x - off;
        if twice_r % 2 == 1 || x < c + twice_r {
            return Err(bad());
        }
        let r = twice_r / 2;
        let s = (x - c - twice_r) / 2;
        Ok(Self { x, b, r, s })
    }
}

fn certify(seq: Vec<usize>, x: usize, a: usize, b: usize, p1: usize, px: usize, step: TraceStep) -> Result<Certificate> {
    let path = HamPath::new(seq)?;
    let multiset = LengthMultiset::from_counts([(1, a), (x, b)])?;
    let points = vec![GrowPoint::new(1, p1), GrowPoint::new(x, px)];
    Certificate::with_trace(path, multiset, points, vec![step])
}

/// One of the three fixed shapes, for `x >= 4`.
pub fn construct_1x_basic(x: usize, which: Basic) -> Result<Certificate> {
    if x < 4 {
        return Err(Error::InvalidParameters(format!("x = {x} < 4")));
    }
    let even = x.is_multiple_of(2);
    let mut h = Vec::new();
    let (p1, px) = match (which, even) {
        (Basic::XPlus1, true) => {
            h.extend([1, x + 1, 0, 2 * x, x]);
            for j in 1..=x - 2 {
                let (lo, hi) = (x - j, 2 * x - j);
                h.extend(if j % 2 == 1 { [lo, hi] } else { [hi, lo] });
            }
            (1, x)
        }
        (Basic::XPlus1, false) => {
            h.extend([x, x + 1, 1, 0, 2 * x, x - 1, 2 * x - 1]);
            for j in 2..=x - 2 {
                let (lo, hi) = (x - j, 2 * x - j);
                h.extend(if j % 2 == 0 { [lo, hi] } else { [hi, lo] });
            }
            // Vertex 0 meets no lengthened edge at x-1, so the x-point is x.
            (2 * x - 1, x)
        }
        (Basic::XPlus2, true) => {
            h.extend([x, 2 * x, 0, x + 1, 1, x + 2, 2]);
            for t in 3..x {
                h.extend(if t % 2 == 1 { [t, x + t] } else { [x + t, t] });
            }
            (1, x)
        }
        (Basic::XPlus2, false) => {
            h.extend([0, x, x - 1, 2 * x, 2 * x - 1, x - 2, 2 * x - 2]);
            for j in 3..x {
                let (lo, hi) = (x - j, 2 * x - j);
                h.extend(if j % 2 == 1 { [lo, hi] } else { [hi, lo] });
            }
            (2 * x - 2, x - 1)
        }
        (Basic::TwoX, true) => {
            for t in 0..=x - 4 {
                let tri = [t, x + t, 2 * x + t];
                if t % 2 == 0 {
                    h.extend(tri);
                } else {
                    h.extend(tri.iter().rev());
                }
            }
            h.extend([x - 3, 2 * x - 3, 2 * x - 2, x - 2, 3 * x - 3, 3 * x - 2, x - 1, 2 * x - 1]);
            // 3x-3 fails the check; the only 1-point is 3x-4.
            (3 * x - 4, x - 1)
        }
        (Basic::TwoX, false) => {
            h.extend([3 * x - 2, x - 1, 2 * x - 1]);
            for t in 0..=x - 4 {
                let tri = [t, x + t, 2 * x + t];
                if t % 2 == 1 {
                    h.extend(tri);
                } else {
                    h.extend(tri.iter().rev());
                }
            }
            h.extend([x - 3, 2 * x - 3, 2 * x - 2, x - 2, 3 * x - 3]);
            (3 * x - 4, x)
        }
    };
    let step = TraceStep::new("family_basic").param("x", x).param("b", which.b(x));
    certify(h, x, which.a(x), which.b(x), p1, px, step)
}

/// `2r+1` triples `(low, low+x, low+2x)` with `low` running down from
/// `top`, alternating descending and ascending.
fn triples(h: &mut Vec<usize>, x: usize, r: usize, top: usize) {
    for q in 0..=2 * r {
        let low = top - q;
        let tri = [low + 2 * x, low + x, low];
        if q % 2 == 0 {
            h.extend(tri);
        } else {
            h.extend(tri.iter().rev());
        }
    }
}

/// `n` pairs `(low, low+x)` with `low` running up from `start`; the first
/// pair is ascending when `up_first`.
fn pairs(h: &mut Vec<usize>, x: usize, n: usize, start: usize, up_first: bool) {
    for p in 0..n {
        let (lo, hi) = (start + p, start + p + x);
        h.extend(if (p % 2 == 0) == up_first { [lo, hi] } else { [hi, lo] });
    }
}

/// `{1^(x-2), x^b}` for even `x >= 4` and `x+3 <= b <= 2x-1`.
pub fn construct_1x_even(x: usize, b: usize) -> Result<Certificate> {
    if x % 2 == 1 {
        return Err(Error::InvalidParameters(format!("x = {x} is odd")));
    }
    let FamilyParams { r, s, .. } = FamilyParams::derive(x, b)?;
    let mut h = Vec::new();
    let (p1, px) = if b % 2 == 1 {
        let v = 6 * r + 4 * s + 10;
        pairs(&mut h, x, 2 * s + 2, 2 * r + 1, true);
        triples(&mut h, x, r, 2 * r);
        h.extend([6 * r + 4 * s + 9, 2 * r + 2 * s + 3, 4 * r + 4 * s + 7]);
        (v - 2, x - 1)
    } else {
        pairs(&mut h, x, 2 * s + 1, 2 * r + 5, false);
        h.extend([
            2 * r + 2 * s + 6,
            4 * r + 4 * s + 12,
            4 * r + 4 * s + 13,
            2 * r + 2 * s + 7,
            1,
            4 * r + 2 * s + 10,
            2 * r + 4,
            2 * r + 3,
            4 * r + 2 * s + 9,
            0,
        ]);
        triples(&mut h, x, r, 2 * r + 2);
        (1, x)
    };
    let step = TraceStep::new("family_even").param("x", x).param("b", b).param("r", r).param("s", s);
    certify(h, x, x - 2, b, p1, px, step)
}

/// `{1^(x-2), x^b}` for odd `x >= 5` and `x+3 <= b <= 2x-1`.
pub fn construct_1x_odd(x: usize, b: usize) -> Result<Certificate> {
    if x.is_multiple_of(2) {
        return Err(Error::InvalidParameters(format!("x = {x} is even")));
    }
    let FamilyParams { r, s, .. } = FamilyParams::derive(x, b)?;
    let mut h = Vec::new();
    let v = if b % 2 == 1 {
        triples(&mut h, x, r, 2 * r);
        h.extend([
            6 * r + 4 * s + 12,
            2 * r + 2 * s + 4,
            4 * r + 4 * s + 9,
            4 * r + 4 * s + 8,
            2 * r + 2 * s + 3,
            6 * r + 4 * s + 11,
        ]);
        pairs(&mut h, x, 2 * s + 2, 2 * r + 1, false);
        6 * r + 4 * s + 13
    } else {
        pairs(&mut h, x, 2 * s + 3, 2 * r + 1, false);
        triples(&mut h, x, r, 2 * r);
        h.extend([6 * r + 4 * s + 11, 2 * r + 2 * s + 4, 4 * r + 4 * s + 9]);
        6 * r + 4 * s + 12
    };
    let step = TraceStep::new("family_odd").param("x", x).param("b", b).param("r", r).param("s", s);
    certify(h, x, x - 2, b, v - 2, x - 1, step)
}

/// The `{1,x}`-growable seed for any `b` in `x+1 ..= 2x`.
pub fn construct_1x(x: usize, b: usize) -> Result<Certificate> {
    if x < 4 {
        return Err(Error::InvalidParameters(format!("x = {x} < 4")));
    }
    match b {
        _ if b == x + 1 => construct_1x_basic(x, Basic::XPlus1),
        _ if b == x + 2 => construct_1x_basic(x, Basic::XPlus2),
        _ if b == 2 * x => construct_1x_basic(x, Basic::TwoX),
        _ if x.is_multiple_of(2) => construct_1x_even(x, b),
        _ => construct_1x_odd(x, b),
    }
}

/// The seed whose count of `x` is congruent to `residue` mod `x`. It
/// realizes `{1^(x-2), x^b'}`, except for residue 1, where it is
/// `{1^(x-1), x^(x+1)}`.
pub fn seed_for_residue(x: usize, residue: usize) -> Result<Certificate> {
    if x < 4 {
        return Err(Error::InvalidParameters(format!("x = {x} < 4")));
    }
    let r = residue % x;
    let b = if r == 0 { 2 * x } else { x + r };
    construct_1x(x, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::growable::is_growable_at;

    fn verts(c: &Certificate) -> &[usize] {
        c.path().vertices()
    }

    #[test]
    fn basic_examples() {
        assert_eq!(
            verts(&construct_1x_basic(8, Basic::XPlus1).unwrap()),
            &[1, 9, 0, 16, 8, 7, 15, 14, 6, 5, 13, 12, 4, 3, 11, 10, 2]
        );
        assert_eq!(
            verts(&construct_1x_basic(8, Basic::XPlus2).unwrap()),
            &[8, 16, 0, 9, 1, 10, 2, 3, 11, 12, 4, 5, 13, 14, 6, 7, 15]
        );
        assert_eq!(
            verts(&construct_1x_basic(8, Basic::TwoX).unwrap()),
            &[0, 8, 16, 17, 9, 1, 2, 10, 18, 19, 11, 3, 4, 12, 20, 5, 13, 14, 6, 21, 22, 7, 15]
        );
        assert_eq!(
            verts(&construct_1x_basic(9, Basic::XPlus1).unwrap()),
            &[9, 10, 1, 0, 18, 8, 17, 7, 16, 15, 6, 5, 14, 13, 4, 3, 12, 11, 2]
        );
        assert_eq!(
            verts(&construct_1x_basic(9, Basic::XPlus2).unwrap()),
            &[0, 9, 8, 18, 17, 7, 16, 6, 15, 14, 5, 4, 13, 12, 3, 2, 11, 10, 1]
        );
        assert_eq!(
            verts(&construct_1x_basic(9, Basic::TwoX).unwrap()),
            &[
                25, 8, 17, 18, 9, 0, 1, 10, 19, 20, 11, 2, 3, 12, 21, 22, 13, 4, 5, 14, 23, 6, 15,
                16, 7, 24
            ]
        );
    }

    #[test]
    fn three_block_examples() {
        let c = construct_1x_even(8, 13).unwrap();
        assert_eq!(verts(&c), &[3, 11, 12, 4, 5, 13, 14, 6, 18, 10, 2, 1, 9, 17, 16, 8, 0, 19, 7, 15]);
        assert_eq!(c.grow_points(), &[GrowPoint::new(1, 18), GrowPoint::new(8, 7)]);

        let c = construct_1x_even(10, 16).unwrap();
        assert_eq!(
            verts(&c),
            &[17, 7, 8, 18, 19, 9, 10, 20, 21, 11, 1, 16, 6, 5, 15, 0, 24, 14, 4, 3, 13, 23, 22, 12, 2]
        );
        assert_eq!(c.grow_points(), &[GrowPoint::new(1, 1), GrowPoint::new(10, 10)]);

        let c = construct_1x_odd(13, 21).unwrap();
        assert_eq!(
            verts(&c),
            &[
                30, 17, 4, 3, 16, 29, 28, 15, 2, 1, 14, 27, 26, 13, 0, 32, 12, 25, 24, 11, 31, 18,
                5, 6, 19, 20, 7, 8, 21, 22, 9, 10, 23
            ]
        );
        assert_eq!(c.grow_points(), &[GrowPoint::new(1, 31), GrowPoint::new(13, 12)]);

        let c = construct_1x_odd(9, 14).unwrap();
        assert_eq!(
            verts(&c),
            &[12, 3, 4, 13, 14, 5, 6, 15, 16, 7, 20, 11, 2, 1, 10, 19, 18, 9, 0, 21, 8, 17]
        );
        assert_eq!(c.grow_points(), &[GrowPoint::new(1, 20), GrowPoint::new(9, 8)]);
    }

    #[test]
    fn small_instances_verify() {
        for b in 9..=11 {
            let c = construct_1x_even(6, b).unwrap();
            assert_eq!(c.multiset(), &LengthMultiset::from_counts([(1, 4), (6, b)]).unwrap());
        }
        for b in 8..=9 {
            construct_1x_odd(5, b).unwrap();
        }
        construct_1x_even(4, 7).unwrap();
    }

    #[test]
    fn params_and_orders() {
        assert_eq!(FamilyParams::derive(8, 13).unwrap(), FamilyParams { x: 8, b: 13, r: 1, s: 1 });
        assert_eq!(FamilyParams::derive(13, 21).unwrap(), FamilyParams { x: 13, b: 21, r: 2, s: 2 });
        for (x, b, v) in [(8, 13, 20), (10, 16, 25), (13, 21, 33), (9, 14, 22)] {
            let FamilyParams { r, s, .. } = FamilyParams::derive(x, b).unwrap();
            let formula = match (x % 2, b % 2) {
                (0, 1) => 6 * r + 4 * s + 10,
                (0, _) => 6 * r + 4 * s + 15,
                (_, 1) => 6 * r + 4 * s + 13,
                _ => 6 * r + 4 * s + 12,
            };
            assert_eq!(formula, v);
            assert_eq!(construct_1x(x, b).unwrap().order(), v);
        }
    }

    #[test]
    fn rejections() {
        assert!(construct_1x_basic(3, Basic::XPlus1).is_err());
        assert!(construct_1x_even(4, 6).is_err());
        assert!(construct_1x_even(8, 16).is_err());
        assert!(construct_1x_even(7, 11).is_err());
        assert!(construct_1x_odd(9, 11).is_err());
        assert!(construct_1x_odd(9, 18).is_err());
        assert!(seed_for_residue(3, 0).is_err());
    }

    #[test]
    fn residues() {
        assert_eq!(seed_for_residue(8, 5).unwrap().multiset().count(8), 13);
        let c = seed_for_residue(9, 1).unwrap();
        assert_eq!(c.multiset(), &LengthMultiset::from_counts([(1, 8), (9, 10)]).unwrap());
        assert_eq!(seed_for_residue(7, 0).unwrap().multiset().count(7), 14);
    }

    #[test]
    fn sweep_all_x_up_to_fifty() {
        for x in 4..=50 {
            let mut seen = vec![false; x];
            for b in x + 1..=2 * x {
                let c = construct_1x(x, b).unwrap_or_else(|e| panic!("x={x} b={b}: {e}"));
                for p in c.grow_points() {
                    assert!(is_growable_at(c.path(), p.x, p.m).unwrap());
                }
                seen[b % x] = true;
            }
            assert!(seen.iter().all(|&s| s), "x={x}");
        }
    }
}
