//! Complete factorization of Laurent polynomials over `Q`.
//!
//! The pipeline is content removal, Yun's squarefree decomposition, then for
//! each squarefree part: Berlekamp modulo the smallest good prime, quadratic
//! Hensel lifting past twice the Mignotte bound, and Zassenhaus subset
//! recombination.

mod hensel;
mod modp;
mod zpoly;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::laurent::{CanonicalPoly, LaurentPoly, Rational};

use modp::Fp;
use zpoly::ZPoly;

/// Inputs above this degree are rejected; recombination is exponential in
/// the number of modular factors.
pub const MAX_FACTOR_DEGREE: usize = 128;

/// `unit · ∏ factor^multiplicity`, with `unit = coefficient · t^exponent`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredPoly {
    pub unit: (Rational, i64),
    pub factors: Vec<(CanonicalPoly, u32)>,
}

impl FactoredPoly {
    /// Multiplies everything back out.
    pub fn expand(&self) -> LaurentPoly {
        self.factors
            .iter()
            .map(|(f, m)| f.as_poly().pow(*m))
            .product::<LaurentPoly>()
            .scale(&self.unit.0)
            .shift(self.unit.1)
    }

    /// Number of irreducible factors counted with multiplicity.
    pub fn count(&self) -> usize {
        self.factors.iter().map(|(_, m)| *m as usize).sum()
    }
}

/// Yun's algorithm. Returns pairwise coprime squarefree canonical parts with
/// strictly increasing multiplicities whose weighted product is `canon(p)`.
pub fn squarefree_decompose(p: &LaurentPoly) -> Result<Vec<(CanonicalPoly, u32)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial("squarefree decomposition"));
    }
    let f = p.canon().into_poly();
    if f.span() == 0 {
        return Ok(Vec::new());
    }
    let df = f.derivative();
    let g = f.gcd(&df)?.into_poly();
    let mut c = f.exact_div(&g)?;
    let mut d = df.exact_div(&g)? - c.derivative();
    let mut out = Vec::new();
    let mut i = 1u32;
    while c.span() > 0 {
        let a = c.gcd(&d)?.into_poly();
        c = c.exact_div(&a)?;
        d = d.exact_div(&a)? - c.derivative();
        if a.span() > 0 {
            out.push((a.canon(), i));
        }
        i += 1;
    }
    Ok(out)
}

/// Irreducible factorization over `Q`, factors sorted by degree and then by
/// coefficients.
pub fn factor(p: &LaurentPoly) -> Result<FactoredPoly> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial("factor"));
    }
    let degree = p.span();
    if degree > MAX_FACTOR_DEGREE {
        return Err(Error::DegreeTooLarge {
            degree,
            limit: MAX_FACTOR_DEGREE,
        });
    }
    let mut factors = Vec::new();
    for (part, mult) in squarefree_decompose(p)? {
        for irr in factor_squarefree(&part.int_coeffs()) {
            factors.push((LaurentPoly::from_bigints(&irr, 0).canon(), mult));
        }
    }
    factors.sort();
    let product: LaurentPoly = factors
        .iter()
        .map(|(f, m)| f.as_poly().pow(*m))
        .product();
    let scale = p.leading_coeff().unwrap() / product.leading_coeff().unwrap();
    Ok(FactoredPoly {
        unit: (scale, p.min_degree()),
        factors,
    })
}

/// True iff `canon(p)` is irreducible over `Q`. Constants are rejected.
pub fn is_irreducible(p: &LaurentPoly) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial("irreducibility test"));
    }
    if p.span() == 0 {
        return Err(Error::ConstantPolynomial("irreducibility test"));
    }
    let f = factor(p)?;
    Ok(f.factors.len() == 1 && f.factors[0].1 == 1)
}

/// Irreducible factors of a primitive squarefree integer polynomial with
/// positive leading coefficient and nonzero constant term.
fn factor_squarefree(f: &[BigInt]) -> Vec<ZPoly> {
    let n = zpoly::degree(f);
    if n <= 1 {
        return vec![f.to_vec()];
    }
    let lc = f.last().unwrap().clone();
    let fp = modp::primes()
        .map(Fp::new)
        .find(|fp| fp.reduce_int(&lc) != 0 && fp.is_squarefree(&fp.reduce_poly(f)))
        .expect("a squarefree polynomial stays squarefree modulo all but finitely many primes");
    let modular = fp.berlekamp(&fp.monic(&fp.reduce_poly(f)));
    if modular.len() == 1 {
        return vec![f.to_vec()];
    }
    let bound = (zpoly::factor_coefficient_bound(f) * lc.abs()) << 1usize;
    let (lifted, modulus) = hensel::lift(f, &fp, &modular, &(bound + BigInt::one()));
    recombine(f, lifted, &modulus)
}

/// Zassenhaus recombination: try subsets of the lifted modular factors in
/// order of size, splitting off every true factor found.
fn recombine(f: &[BigInt], mut modular: Vec<ZPoly>, modulus: &BigInt) -> Vec<ZPoly> {
    let mut found = Vec::new();
    let mut remaining = f.to_vec();
    let mut size = 1;
    'grow: while 2 * size <= modular.len() {
        let lc = remaining.last().unwrap().clone();
        for subset in (0..modular.len()).combinations(size) {
            let candidate = subset
                .iter()
                .fold(vec![lc.clone()], |acc, &i| zpoly::mul(&acc, &modular[i]));
            let candidate = zpoly::primitive_part(&zpoly::symmetric_mod(&candidate, modulus));
            if candidate.len() < 2 {
                continue;
            }
            if let Some(quotient) = zpoly::exact_div(&remaining, &candidate) {
                found.push(candidate);
                remaining = quotient;
                for &i in subset.iter().rev() {
                    modular.remove(i);
                }
                continue 'grow;
            }
        }
        size += 1;
    }
    if zpoly::degree(&remaining) > 0 {
        found.push(zpoly::primitive_part(&remaining));
    }
    found
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn shown(f: &FactoredPoly) -> Vec<(String, u32)> {
        f.factors.iter().map(|(g, m)| (g.to_string(), *m)).collect()
    }

    #[test]
    fn squarefree_examples() {
        let sq = squarefree_decompose(&(p("t-2").pow(2) * p("2t-1"))).unwrap();
        let got: Vec<(String, u32)> = sq.iter().map(|(g, m)| (g.to_string(), *m)).collect();
        assert_eq!(got, [("2t - 1".to_string(), 1), ("t - 2".to_string(), 2)]);
        let sq = squarefree_decompose(&p("t^2-t+1")).unwrap();
        assert_eq!(sq, vec![(p("t^2-t+1").canon(), 1)]);
        assert!(squarefree_decompose(&p("1")).unwrap().is_empty());
        assert!(squarefree_decompose(&p("0")).is_err());
    }

    #[test]
    fn factors_t6_minus_1() {
        let f = factor(&p("t^6-1")).unwrap();
        assert_eq!(
            shown(&f),
            [
                ("t - 1".to_string(), 1),
                ("t + 1".to_string(), 1),
                ("t^2 - t + 1".to_string(), 1),
                ("t^2 + t + 1".to_string(), 1)
            ]
        );
        assert_eq!(f.expand(), p("t^6-1"));
    }

    #[test]
    fn factor_examples() {
        let f = factor(&p("2t^2-3t+2")).unwrap();
        assert_eq!(shown(&f), [("2t^2 - 3t + 2".to_string(), 1)]);
        let f = factor(&(p("t-2") * p("2t-1"))).unwrap();
        assert_eq!(shown(&f), [("t - 2".to_string(), 1), ("2t - 1".to_string(), 1)]);
    }

    #[test]
    fn unit_bookkeeping() {
        let q = p("-3/2 t^-2 + 3/2 t^4");
        let f = factor(&q).unwrap();
        assert_eq!(f.expand(), q);
        assert_eq!(f.unit, (crate::laurent::ratio(3, 2), -2));
        let c = factor(&p("-5 t^3")).unwrap();
        assert!(c.factors.is_empty());
        assert_eq!(c.expand(), p("-5t^3"));
    }

    #[test]
    fn irreducibility() {
        assert!(is_irreducible(&p("t^2-t+1")).unwrap());
        assert!(!is_irreducible(&p("t^2-1")).unwrap());
        assert!(is_irreducible(&p("t^4+1")).unwrap());
        assert!(!is_irreducible(&p("t^4+4")).unwrap());
        assert!(is_irreducible(&p("3")).is_err());
        assert!(is_irreducible(&p("0")).is_err());
    }

    #[test]
    fn swinnerton_dyer_style_recombination() {
        // t^4 - 10t^2 + 1 is irreducible but splits into linear or quadratic
        // factors modulo every prime.
        let f = factor(&p("t^4 - 10t^2 + 1")).unwrap();
        assert_eq!(f.factors.len(), 1);
        let g = p("t^4 - 10t^2 + 1") * p("t^2 - 2") * p("t^3 + t + 1");
        let f = factor(&g).unwrap();
        assert_eq!(f.factors.len(), 3);
        assert_eq!(f.expand(), g);
    }

    #[test]
    fn degree_guardrail() {
        let big = LaurentPoly::monomial(crate::laurent::rat(1), 200) - LaurentPoly::one();
        assert!(matches!(factor(&big), Err(Error::DegreeTooLarge { degree: 200, .. })));
    }

    #[test]
    fn repeated_and_large_coefficients() {
        let g = p("12t^2 - 7t + 1000003").pow(3) * p("t-1").pow(2) * p("t^5 + 2");
        let f = factor(&g).unwrap();
        assert_eq!(f.expand(), g);
        assert_eq!(
            f.factors.iter().map(|(_, m)| *m).collect::<Vec<_>>(),
            vec![2, 3, 1]
        );
    }
}
