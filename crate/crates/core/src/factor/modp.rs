//! Polynomials over a small prime field and Berlekamp's factorization.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

pub(crate) type FpPoly = Vec<u64>;

#[derive(Debug, Clone, Copy)]
pub(crate) struct Fp {
    pub p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Self {
        Fp { p }
    }

    fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(!a.is_multiple_of(self.p));
        self.pow(a, self.p - 2)
    }

    pub fn reduce_int(&self, c: &BigInt) -> u64 {
        c.mod_floor(&BigInt::from(self.p)).to_u64().unwrap()
    }

    pub fn reduce_poly(&self, p: &[BigInt]) -> FpPoly {
        let mut out: FpPoly = p.iter().map(|c| self.reduce_int(c)).collect();
        trim(&mut out);
        out
    }

    pub fn poly_mul(&self, a: &[u64], b: &[u64]) -> FpPoly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = self.add(out[i + j], self.mul(x, y));
            }
        }
        trim(&mut out);
        out
    }

    pub fn poly_sub(&self, a: &[u64], b: &[u64]) -> FpPoly {
        let n = a.len().max(b.len());
        let mut out: FpPoly = (0..n)
            .map(|i| {
                self.sub(
                    a.get(i).copied().unwrap_or(0),
                    b.get(i).copied().unwrap_or(0),
                )
            })
            .collect();
        trim(&mut out);
        out
    }

    pub fn poly_scale(&self, a: &[u64], c: u64) -> FpPoly {
        let mut out: FpPoly = a.iter().map(|&x| self.mul(x, c)).collect();
        trim(&mut out);
        out
    }

    pub fn monic(&self, a: &[u64]) -> FpPoly {
        match a.last() {
            None => Vec::new(),
            Some(&lc) => self.poly_scale(a, self.inv(lc)),
        }
    }

    pub fn div_rem(&self, a: &[u64], b: &[u64]) -> (FpPoly, FpPoly) {
        assert!(!b.is_empty(), "division by zero polynomial mod p");
        let mut rem = a.to_vec();
        if a.len() < b.len() {
            return (Vec::new(), rem);
        }
        let inv = self.inv(*b.last().unwrap());
        let qlen = a.len() - b.len() + 1;
        let mut quot = vec![0u64; qlen];
        for qi in (0..qlen).rev() {
            let top = rem[qi + b.len() - 1];
            if top == 0 {
                continue;
            }
            let c = self.mul(top, inv);
            for (j, &bj) in b.iter().enumerate() {
                rem[qi + j] = self.sub(rem[qi + j], self.mul(c, bj));
            }
            quot[qi] = c;
        }
        rem.truncate(b.len() - 1);
        trim(&mut rem);
        trim(&mut quot);
        (quot, rem)
    }

    pub fn rem(&self, a: &[u64], b: &[u64]) -> FpPoly {
        self.div_rem(a, b).1
    }

    /// Monic gcd.
    pub fn gcd(&self, a: &[u64], b: &[u64]) -> FpPoly {
        let mut a = a.to_vec();
        let mut b = b.to_vec();
        while !b.is_empty() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    /// Returns `(s, t)` with `s·a + t·b = 1`, `deg s < deg b`, `deg t < deg a`.
    /// `a` and `b` must be coprime.
    pub fn bezout(&self, a: &[u64], b: &[u64]) -> (FpPoly, FpPoly) {
        let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
        let (mut s0, mut s1) = (vec![1u64], Vec::new());
        let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
        while !r1.is_empty() {
            let (q, r) = self.div_rem(&r0, &r1);
            let s2 = self.poly_sub(&s0, &self.poly_mul(&q, &s1));
            let t2 = self.poly_sub(&t0, &self.poly_mul(&q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        assert_eq!(r0.len(), 1, "bezout of non-coprime polynomials");
        let inv = self.inv(r0[0]);
        (self.poly_scale(&s0, inv), self.poly_scale(&t0, inv))
    }

    pub fn derivative(&self, a: &[u64]) -> FpPoly {
        let mut out: FpPoly = a
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| self.mul(c, i as u64 % self.p))
            .collect();
        trim(&mut out);
        out
    }

    pub fn is_squarefree(&self, a: &[u64]) -> bool {
        let d = self.derivative(a);
        !d.is_empty() && self.gcd(a, &d).len() == 1
    }

    /// Monic irreducible factors of a monic squarefree `f` of degree ≥ 1.
    ///
    /// Berlekamp's algorithm with exhaustive splitting over the field
    /// elements, which keeps the output deterministic.
    pub fn berlekamp(&self, f: &[u64]) -> Vec<FpPoly> {
        let n = f.len() - 1;
        if n == 1 {
            return vec![f.to_vec()];
        }
        // Rows of Q: x^(p·i) mod f.
        let xp = self.powmod_x(self.p, f);
        let mut q_rows: Vec<FpPoly> = Vec::with_capacity(n);
        let mut cur: FpPoly = vec![1];
        for _ in 0..n {
            q_rows.push(cur.clone());
            cur = self.rem(&self.poly_mul(&cur, &xp), f);
        }
        // Solve v·(Q - I) = 0: transpose into columns of a linear system.
        let mut m = vec![vec![0u64; n]; n];
        for (i, row) in q_rows.iter().enumerate() {
            for j in 0..n {
                let q = row.get(j).copied().unwrap_or(0);
                m[j][i] = if i == j { self.sub(q, 1) } else { q };
            }
        }
        let basis = self.nullspace(m, n);
        let r = basis.len();
        let mut factors = vec![f.to_vec()];
        if r == 1 {
            return factors;
        }
        'outer: for v in &basis {
            let mut v = v.clone();
            trim(&mut v);
            if v.len() <= 1 {
                continue;
            }
            for s in 0..self.p {
                let shifted = self.poly_sub(&v, &[s]);
                let mut next = Vec::with_capacity(factors.len() + 1);
                for u in factors.drain(..) {
                    if u.len() <= 2 {
                        next.push(u);
                        continue;
                    }
                    let g = self.gcd(&u, &shifted);
                    if g.len() > 1 && g.len() < u.len() {
                        let other = self.div_rem(&u, &g).0;
                        next.push(g);
                        next.push(self.monic(&other));
                    } else {
                        next.push(u);
                    }
                }
                factors = next;
                if factors.len() == r {
                    break 'outer;
                }
            }
        }
        debug_assert_eq!(factors.len(), r);
        factors.sort();
        factors
    }

    fn powmod_x(&self, mut e: u64, f: &[u64]) -> FpPoly {
        let mut base = self.rem(&[0, 1], f);
        let mut acc = self.rem(&[1], f);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.rem(&self.poly_mul(&acc, &base), f);
            }
            base = self.rem(&self.poly_mul(&base, &base), f);
            e >>= 1;
        }
        acc
    }

    /// Basis of `{x : m·x = 0}` for an `n`-column matrix.
    fn nullspace(&self, mut m: Vec<Vec<u64>>, n: usize) -> Vec<Vec<u64>> {
        let rows = m.len();
        let mut pivots: Vec<usize> = Vec::new();
        let mut r = 0;
        for c in 0..n {
            let Some(pr) = (r..rows).find(|&i| m[i][c] != 0) else {
                continue;
            };
            m.swap(r, pr);
            let inv = self.inv(m[r][c]);
            for x in m[r].iter_mut() {
                *x = self.mul(*x, inv);
            }
            for i in 0..rows {
                if i != r && m[i][c] != 0 {
                    let f = m[i][c];
                    for j in 0..n {
                        let sub = self.mul(f, m[r][j]);
                        m[i][j] = self.sub(m[i][j], sub);
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == rows {
                break;
            }
        }
        (0..n)
            .filter(|c| !pivots.contains(c))
            .map(|free| {
                let mut v = vec![0u64; n];
                v[free] = 1;
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = self.sub(0, m[row][free]);
                }
                v
            })
            .collect()
    }
}

pub(crate) fn trim(p: &mut FpPoly) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

pub(crate) fn primes() -> impl Iterator<Item = u64> {
    (2u64..).filter(|&n| (2..).take_while(|d| d * d <= n).all(|d| n % d != 0))
}
