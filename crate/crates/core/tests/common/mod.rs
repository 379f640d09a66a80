#![allow(dead_code)]

use proptest::prelude::*;
use spinobs::{CanonicalPoly, LambdaMatrix, LaurentPoly, ModuleEndo, TorsionModule};

pub fn p(s: &str) -> LaurentPoly {
    s.parse().unwrap()
}

/// Nonzero Laurent polynomials with small integer coefficients.
pub fn laurent(max_len: usize, bound: i64) -> impl Strategy<Value = LaurentPoly> {
    (prop::collection::vec(-bound..=bound, 1..=max_len), -3i64..=3)
        .prop_map(|(cs, k)| LaurentPoly::from_ints(&cs, k))
        .prop_filter("nonzero", |q| !q.is_zero())
}

/// Possibly zero, used for matrix entries and multipliers.
pub fn laurent_or_zero(max_len: usize, bound: i64) -> impl Strategy<Value = LaurentPoly> {
    (prop::collection::vec(-bound..=bound, 1..=max_len), -2i64..=2).prop_map(|(cs, k)| LaurentPoly::from_ints(&cs, k))
}

/// Ordinary polynomials of exact degree `1..=max_degree`.
pub fn nonunit(max_degree: usize, bound: i64) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec(-bound..=bound, 2..=max_degree + 1)
        .prop_map(|cs| LaurentPoly::from_ints(&cs, 0))
        .prop_filter("non-unit", |q| !q.is_zero() && q.canon().degree() >= 1)
}

pub fn module(max_summands: usize) -> impl Strategy<Value = TorsionModule> {
    prop::collection::vec(nonunit(4, 5), 1..=max_summands).prop_map(|gens| TorsionModule::new(gens).unwrap())
}

/// Entry `(j, k)` is a multiple of `p_j / gcd(p_j, p_k)`, the general shape
/// of a map `Λ/(p_k) → Λ/(p_j)`.
pub fn endo_of(m: TorsionModule) -> impl Strategy<Value = ModuleEndo> {
    let n = m.len();
    prop::collection::vec(laurent_or_zero(3, 3), n * n).prop_map(move |rs| {
        let ps = m.summands();
        let entries = (0..n * n)
            .map(|idx| {
                let (j, k) = (idx / n, idx % n);
                let g = ps[j].gcd(&ps[k]).unwrap();
                let step = ps[j].exact_div(&g).unwrap();
                &rs[idx] * &step
            })
            .collect();
        ModuleEndo::new(m.clone(), LambdaMatrix::from_entries(n, n, entries).unwrap()).unwrap()
    })
}

pub fn endo(max_summands: usize) -> impl Strategy<Value = ModuleEndo> {
    module(max_summands).prop_flat_map(endo_of)
}

/// A random invertible matrix over `Λ`: a product of elementary row
/// operations and unit scalings.
pub fn unimodular(n: usize) -> impl Strategy<Value = LambdaMatrix> {
    let op = (0..n.max(1), 0..n.max(1), laurent_or_zero(2, 2), -1i64..=1, prop::sample::select(vec![1i64, -1, 2, -3]));
    prop::collection::vec(op, 0..=6).prop_map(move |ops| {
        let mut u = LambdaMatrix::identity(n);
        for (i, j, q, k, c) in ops {
            if n == 0 {
                break;
            }
            let mut e = LambdaMatrix::identity(n);
            if i != j {
                e[(i, j)] = q;
            } else {
                e[(i, i)] = LaurentPoly::from_ints(&[c], k);
            }
            u = e.mul(&u).unwrap();
        }
        u
    })
}

pub fn product(ps: &[CanonicalPoly]) -> CanonicalPoly {
    ps.iter().map(|q| q.as_poly().clone()).product::<LaurentPoly>().canon()
}
