//! Dense integer polynomials, coefficients low to high.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub(crate) type ZPoly = Vec<BigInt>;

pub(crate) fn trim(p: &mut ZPoly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

pub(crate) fn degree(p: &[BigInt]) -> usize {
    p.len().saturating_sub(1)
}

pub(crate) fn content(p: &[BigInt]) -> BigInt {
    p.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

/// Divides out the content and makes the leading coefficient positive.
pub(crate) fn primitive_part(p: &[BigInt]) -> ZPoly {
    let mut c = content(p);
    if c.is_zero() {
        return Vec::new();
    }
    if p.last().is_some_and(Signed::is_negative) {
        c = -c;
    }
    p.iter().map(|x| x / &c).collect()
}

pub(crate) fn mul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

/// Exact quotient `a / b` over `Z`, or `None` when `b` does not divide `a`.
pub(crate) fn exact_div(a: &[BigInt], b: &[BigInt]) -> Option<ZPoly> {
    assert!(!b.is_empty());
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let lead = b.last().unwrap();
    let mut rem = a.to_vec();
    let qlen = a.len() - b.len() + 1;
    let mut quot = vec![BigInt::zero(); qlen];
    for qi in (0..qlen).rev() {
        let top = &rem[qi + b.len() - 1];
        if top.is_zero() {
            continue;
        }
        let (c, r) = top.div_rem(lead);
        if !r.is_zero() {
            return None;
        }
        for (j, bj) in b.iter().enumerate() {
            rem[qi + j] -= &c * bj;
        }
        quot[qi] = c;
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return None;
    }
    trim(&mut quot);
    Some(quot)
}

/// Reduces every coefficient into the symmetric range `(-m/2, m/2]`.
pub(crate) fn symmetric_mod(p: &[BigInt], m: &BigInt) -> ZPoly {
    let half = m >> 1usize;
    let mut out: ZPoly = p
        .iter()
        .map(|c| {
            let r = c.mod_floor(m);
            if r > half {
                r - m
            } else {
                r
            }
        })
        .collect();
    trim(&mut out);
    out
}

/// A bound on the absolute value of every coefficient of every integer
/// divisor of `p` (Mignotte): `2^deg · ⌈‖p‖₂⌉`.
pub(crate) fn factor_coefficient_bound(p: &[BigInt]) -> BigInt {
    let norm_sq: BigInt = p.iter().map(|c| c * c).sum();
    let norm = norm_sq.sqrt() + BigInt::one();
    norm << degree(p)
}
