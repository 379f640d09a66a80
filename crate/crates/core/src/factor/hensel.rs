//! Quadratic Hensel lifting of a modular factorization.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::modp::{Fp, FpPoly};
use super::zpoly::{trim, ZPoly};

fn reduce(p: &[BigInt], m: &BigInt) -> ZPoly {
    let mut out: ZPoly = p.iter().map(|c| c.mod_floor(m)).collect();
    trim(&mut out);
    out
}

fn add(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ZPoly {
    let n = a.len().max(b.len());
    let zero = BigInt::zero();
    let out: ZPoly = (0..n)
        .map(|i| a.get(i).unwrap_or(&zero) + b.get(i).unwrap_or(&zero))
        .collect();
    reduce(&out, m)
}

fn sub(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ZPoly {
    let n = a.len().max(b.len());
    let zero = BigInt::zero();
    let out: ZPoly = (0..n)
        .map(|i| a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero))
        .collect();
    reduce(&out, m)
}

fn mul(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ZPoly {
    reduce(&super::zpoly::mul(a, b), m)
}

/// Division by a monic `b` modulo `m`.
fn div_rem_monic(a: &[BigInt], b: &[BigInt], m: &BigInt) -> (ZPoly, ZPoly) {
    debug_assert!(b.last().is_some_and(One::is_one));
    let mut rem = reduce(a, m);
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let qlen = rem.len() - b.len() + 1;
    let mut quot = vec![BigInt::zero(); qlen];
    for qi in (0..qlen).rev() {
        let c = rem[qi + b.len() - 1].mod_floor(m);
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            rem[qi + j] = (&rem[qi + j] - &c * bj).mod_floor(m);
        }
        quot[qi] = c;
    }
    rem.truncate(b.len() - 1);
    trim(&mut rem);
    trim(&mut quot);
    (quot, rem)
}

fn to_z(p: &[u64]) -> ZPoly {
    p.iter().map(|&c| BigInt::from(c)).collect()
}

struct Pair {
    g: ZPoly,
    h: ZPoly,
    s: ZPoly,
    t: ZPoly,
}

/// One step from `f ≡ g·h (mod m)` with `s·g + t·h ≡ 1 (mod m)` and `h`
/// monic to the same relations modulo `m²`.
fn step(f: &[BigInt], pair: Pair, m: &BigInt) -> Pair {
    let m2 = m * m;
    let Pair { g, h, s, t } = pair;
    let e = sub(f, &mul(&g, &h, &m2), &m2);
    let (q, r) = div_rem_monic(&mul(&s, &e, &m2), &h, &m2);
    let g_new = add(&add(&g, &mul(&t, &e, &m2), &m2), &mul(&q, &g, &m2), &m2);
    let h_new = add(&h, &r, &m2);

    let b = sub(
        &add(&mul(&s, &g_new, &m2), &mul(&t, &h_new, &m2), &m2),
        &[BigInt::one()],
        &m2,
    );
    let (c, d) = div_rem_monic(&mul(&s, &b, &m2), &h_new, &m2);
    let s_new = sub(&s, &d, &m2);
    let t_new = sub(&sub(&t, &mul(&t, &b, &m2), &m2), &mul(&c, &g_new, &m2), &m2);
    Pair {
        g: g_new,
        h: h_new,
        s: s_new,
        t: t_new,
    }
}

/// Lifts `f ≡ lc(f)·∏ factors (mod p)` to a factorization modulo `p^(2^k)`
/// at least `bound`. Factors must be monic, pairwise coprime mod `p`, and
/// `p` must not divide `lc(f)`.
///
/// Returns the lifted monic factors in input order and the final modulus.
pub(crate) fn lift(f: &[BigInt], fp: &Fp, factors: &[FpPoly], bound: &BigInt) -> (Vec<ZPoly>, BigInt) {
    let p = BigInt::from(fp.p);
    let mut steps = 0usize;
    let mut modulus = p.clone();
    while &modulus < bound {
        modulus = &modulus * &modulus;
        steps += 1;
    }

    let mut lifted = Vec::with_capacity(factors.len());
    let mut current: ZPoly = reduce(f, &modulus);
    for (i, u) in factors.iter().enumerate() {
        if i + 1 == factors.len() {
            // What is left is lc·u; strip the leading coefficient.
            let lc = current.last().cloned().unwrap_or_else(BigInt::zero);
            let inv = lc.modinv(&modulus).expect("leading coefficient is a unit mod p");
            lifted.push(reduce(
                &current.iter().map(|c| c * &inv).collect::<Vec<_>>(),
                &modulus,
            ));
            break;
        }
        let rest_mod_p = factors[i + 1..]
            .iter()
            .fold(vec![fp.reduce_int(current.last().unwrap())], |acc, v| {
                fp.poly_mul(&acc, v)
            });
        let (s, t) = fp.bezout(&rest_mod_p, u);
        let mut pair = Pair {
            g: to_z(&rest_mod_p),
            h: to_z(u),
            s: to_z(&s),
            t: to_z(&t),
        };
        let mut m = p.clone();
        for _ in 0..steps {
            pair = step(&current, pair, &m);
            m = &m * &m;
        }
        lifted.push(pair.h);
        current = pair.g;
    }
    (lifted, modulus)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factor::zpoly;

    #[test]
    fn lifts_quadratic_split() {
        // t^2 - 2 has roots 3 and 4 mod 7; lift to 7^8 and verify the product.
        let f: ZPoly = [-2, 0, 1].iter().map(|&c| BigInt::from(c)).collect();
        let fp = Fp::new(7);
        let (lifted, m) = lift(&f, &fp, &[vec![4, 1], vec![3, 1]], &BigInt::from(1_000_000));
        assert!(m >= BigInt::from(1_000_000));
        let prod = lifted.iter().fold(vec![BigInt::one()], |acc, g| zpoly::mul(&acc, g));
        assert_eq!(reduce(&prod, &m), reduce(&f, &m));
    }

    #[test]
    fn lifts_with_leading_coefficient() {
        // (2t - 1)(t - 2)(t + 3) = 2t^3 + t^2 - 13t + 6
        let f: ZPoly = [6, -13, 1, 2].iter().map(|&c| BigInt::from(c)).collect();
        let fp = crate::factor::modp::primes()
            .map(Fp::new)
            .find(|fp| fp.p != 2 && fp.is_squarefree(&fp.reduce_poly(&f)))
            .unwrap();
        let fs = fp.berlekamp(&fp.monic(&fp.reduce_poly(&f)));
        assert_eq!(fs.len(), 3);
        let (lifted, m) = lift(&f, &fp, &fs, &BigInt::from(10_000));
        let prod = lifted
            .iter()
            .fold(vec![BigInt::from(2)], |acc, g| zpoly::mul(&acc, g));
        assert_eq!(reduce(&prod, &m), reduce(&f, &m));
    }
}
