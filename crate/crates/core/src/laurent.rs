//! Laurent polynomials over the rationals, the ring `Λ = Q[t, 1/t]`.
//!
//! Elements are stored densely as a coefficient run starting at `min_degree`.
//! `Λ` is a principal ideal domain whose units are the monomials `c·t^k`, so
//! every comparison between ideals goes through [`LaurentPoly::canon`], which
//! picks one representative per associate class.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Deref, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// An element of `Q[t, 1/t]`.
///
/// Invariant: a nonzero value has no leading or trailing zero coefficients, and
/// zero is the empty run at `min_degree = 0`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct LaurentPoly {
    coeffs: Vec<Rational>,
    min_degree: i64,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: Rational, exp: i64) -> Self {
        Self::from_coeffs(vec![c], exp)
    }

    /// Builds `Σ coeffs[i]·t^(min_degree + i)`, trimming zeros at both ends.
    pub fn from_coeffs(mut coeffs: Vec<Rational>, mut min_degree: i64) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        let lead_zeros = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead_zeros);
        min_degree += lead_zeros as i64;
        Self { coeffs, min_degree }
    }

    pub fn from_ints(coeffs: &[i64], min_degree: i64) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| rat(c)).collect(), min_degree)
    }

    pub fn from_bigints(coeffs: &[BigInt], min_degree: i64) -> Self {
        Self::from_coeffs(
            coeffs.iter().map(|c| Rational::from_integer(c.clone())).collect(),
            min_degree,
        )
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn min_degree(&self) -> i64 {
        self.min_degree
    }

    /// Highest exponent present; `0` for the zero polynomial.
    pub fn max_degree(&self) -> i64 {
        self.min_degree + self.coeffs.len().saturating_sub(1) as i64
    }

    /// Width of the exponent range, `max_degree - min_degree`. This is the
    /// Euclidean norm of `Λ`: units have span 0.
    pub fn span(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.min_degree == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// True for the units `c·t^k` of `Λ`.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn coeff(&self, exp: i64) -> Rational {
        let idx = exp - self.min_degree;
        if idx < 0 || idx as usize >= self.coeffs.len() {
            Rational::zero()
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Nonzero terms as `(exponent, coefficient)`, ascending.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &Rational)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.min_degree + i as i64, c))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
            min_degree: self.min_degree,
        }
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.clone(),
            min_degree: self.min_degree + k,
        }
    }

    /// `p(t) ↦ p(1/t)`.
    pub fn conj(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self {
            coeffs,
            min_degree: -self.max_degree(),
        }
    }

    pub fn eval(&self, x: &Rational) -> Result<Rational> {
        if x.is_zero() {
            return Err(Error::EvalAtZero);
        }
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        Ok(acc * pow_rational(x, self.min_degree))
    }

    /// Formal derivative `d/dt`.
    pub fn derivative(&self) -> Self {
        let coeffs = self
            .terms()
            .map(|(e, c)| (e - 1, c * rat(e)))
            .collect::<Vec<_>>();
        coeffs
            .into_iter()
            .fold(Self::zero(), |acc, (e, c)| acc + Self::monomial(c, e))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Splits `self = c·t^k·canon(self)` and returns `(c, k)`.
    ///
    /// For zero the unit is `(0, 0)`.
    pub fn unit_part(&self) -> (Rational, i64) {
        if self.is_zero() {
            return (Rational::zero(), 0);
        }
        let denom_lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let numer_gcd = self
            .coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c.numer()));
        let mut content = Rational::new(numer_gcd, denom_lcm);
        if self.coeffs.last().unwrap().is_negative() {
            content = -content;
        }
        (content, self.min_degree)
    }

    /// The canonical associate: integer-primitive, positive leading
    /// coefficient, lowest exponent zero.
    pub fn canon(&self) -> CanonicalPoly {
        if self.is_zero() {
            return CanonicalPoly(Self::zero());
        }
        let (c, k) = self.unit_part();
        let inv = c.recip();
        CanonicalPoly(Self {
            coeffs: self.coeffs.iter().map(|x| x * &inv).collect(),
            min_degree: self.min_degree - k,
        })
    }

    /// True when `self` and `other` generate the same ideal.
    pub fn associate(&self, other: &Self) -> bool {
        self.canon() == other.canon()
    }

    /// Euclidean division in `Λ` with respect to [`span`](Self::span):
    /// returns `(q, r)` with `self = q·d + r` and `span(r) < span(d)` (or `r = 0`).
    ///
    /// Panics if `d` is zero.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by the zero Laurent polynomial");
        if self.is_zero() {
            return (Self::zero(), Self::zero());
        }
        let (q0, r0) = poly_div_rem(&self.coeffs, &d.coeffs);
        (
            Self::from_coeffs(q0, self.min_degree - d.min_degree),
            Self::from_coeffs(r0, self.min_degree),
        )
    }

    /// True iff `self` divides `p` in `Λ`. Zero divides only zero.
    pub fn divides(&self, p: &Self) -> bool {
        if p.is_zero() {
            return true;
        }
        if self.is_zero() {
            return false;
        }
        p.div_rem(self).1.is_zero()
    }

    /// Exact quotient `self / d`. Reports the Euclidean remainder when `d`
    /// does not divide `self`.
    pub fn exact_div(&self, d: &Self) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::ZeroPolynomial("divisor"));
        }
        let (q, r) = self.div_rem(d);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NotDivisible { remainder: r })
        }
    }

    /// Canonical generator of the ideal `(self, other)`.
    pub fn gcd(&self, other: &Self) -> Result<CanonicalPoly> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdOfZeros);
        }
        let mut a = self.canon().into_poly();
        let mut b = other.canon().into_poly();
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r.canon().into_poly();
        }
        Ok(a.canon())
    }

    /// `(g, s, u)` with `s·self + u·other = g` and `g` the canonical gcd.
    /// When `other` is nonzero, `s` is reduced modulo `other / g`.
    pub fn xgcd(&self, other: &Self) -> Result<(CanonicalPoly, Self, Self)> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdOfZeros);
        }
        // Each triple (r, s, u) satisfies r = s·self + u·other; rescaling
        // a triple by a unit keeps r primitive without changing the ideal.
        let normalize = |(r, s, u): (Self, Self, Self)| {
            if r.is_zero() {
                return (r, s, u);
            }
            let (c, e) = r.unit_part();
            let inv = Self::monomial(c.recip(), -e);
            (&r * &inv, &s * &inv, &u * &inv)
        };
        let mut prev = normalize((self.clone(), Self::one(), Self::zero()));
        let mut cur = normalize((other.clone(), Self::zero(), Self::one()));
        while !cur.0.is_zero() {
            let q = prev.0.div_rem(&cur.0).0;
            let next = (&prev.0 - &(&q * &cur.0), &prev.1 - &(&q * &cur.1), &prev.2 - &(&q * &cur.2));
            prev = std::mem::replace(&mut cur, normalize(next));
        }
        let (g, mut s, mut u) = prev;
        if !other.is_zero() {
            let cofactor = other.exact_div(&g).expect("gcd divides its arguments");
            s = s.div_rem(&cofactor).1;
            u = (&g - &(&s * self)).exact_div(other).expect("Bezout identity");
        }
        Ok((CanonicalPoly(g), s, u))
    }
}

fn pow_rational(x: &Rational, e: i64) -> Rational {
    let base = if e < 0 { x.recip() } else { x.clone() };
    let mut acc = Rational::one();
    for _ in 0..e.unsigned_abs() {
        acc *= &base;
    }
    acc
}

/// Dense division in `Q[t]`, coefficient vectors low to high.
/// `b` must have a nonzero last entry.
pub(crate) fn poly_div_rem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let lead = b.last().expect("nonzero divisor");
    let inv = lead.recip();
    let mut rem: Vec<Rational> = a.to_vec();
    if a.len() < b.len() {
        return (Vec::new(), rem);
    }
    let qlen = a.len() - b.len() + 1;
    let mut quot = vec![Rational::zero(); qlen];
    for qi in (0..qlen).rev() {
        let top = &rem[qi + b.len() - 1];
        if top.is_zero() {
            continue;
        }
        let c = top * &inv;
        for (j, bj) in b.iter().enumerate() {
            rem[qi + j] -= &c * bj;
        }
        quot[qi] = c;
    }
    rem.truncate(b.len() - 1);
    (quot, rem)
}

/// A [`LaurentPoly`] in canonical form: zero, or integer coefficients with
/// content 1, positive leading coefficient and a nonzero constant term at
/// exponent 0.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CanonicalPoly(LaurentPoly);

impl CanonicalPoly {
    pub fn one() -> Self {
        CanonicalPoly(LaurentPoly::one())
    }

    pub fn degree(&self) -> usize {
        self.0.span()
    }

    pub fn as_poly(&self) -> &LaurentPoly {
        &self.0
    }

    pub fn into_poly(self) -> LaurentPoly {
        self.0
    }

    /// Integer coefficients, low to high.
    pub fn int_coeffs(&self) -> Vec<BigInt> {
        self.0.coeffs.iter().map(|c| c.to_integer()).collect()
    }

    /// `canon(conj(self))`.
    pub fn conj_canon(&self) -> CanonicalPoly {
        self.0.conj().canon()
    }

    /// True when `self` is associate to its conjugate.
    pub fn is_symmetric(&self) -> bool {
        self.conj_canon() == *self
    }
}

impl Deref for CanonicalPoly {
    type Target = LaurentPoly;

    fn deref(&self) -> &LaurentPoly {
        &self.0
    }
}

impl From<CanonicalPoly> for LaurentPoly {
    fn from(p: CanonicalPoly) -> Self {
        p.0
    }
}

/// Degree first, then coefficients compared from the leading term down.
impl Ord for CanonicalPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.coeffs.iter().rev().cmp(other.0.coeffs.iter().rev()))
    }
}

impl PartialOrd for CanonicalPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for CanonicalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.min_degree.min(rhs.min_degree);
        let hi = self.max_degree().max(rhs.max_degree());
        let mut coeffs = vec![Rational::zero(); (hi - lo + 1) as usize];
        for p in [self, rhs] {
            let off = (p.min_degree - lo) as usize;
            for (i, c) in p.coeffs.iter().enumerate() {
                coeffs[off + i] += c;
            }
        }
        LaurentPoly::from_coeffs(coeffs, lo)
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly::from_coeffs(coeffs, self.min_degree + rhs.min_degree)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            min_degree: self.min_degree,
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<LaurentPoly> for &'a LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self - rhs;
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |a, b| a + b)
    }
}

impl std::iter::Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::one(), |a, b| a * b)
    }
}
