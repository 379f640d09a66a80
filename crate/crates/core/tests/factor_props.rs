mod common;

use common::{nonunit, p};
use proptest::prelude::*;
use spinobs::{factor, is_irreducible, squarefree_decompose, CanonicalPoly, LaurentPoly};

/// Exact quotient of integer polynomials (low degree first), if any.
fn int_div(a: &[i64], b: &[i64]) -> Option<Vec<i64>> {
    let mut rem = a.to_vec();
    let (da, db) = (a.len() - 1, b.len() - 1);
    let lc = *b.last().unwrap();
    let mut q = vec![0i64; da - db + 1];
    for i in (0..=da - db).rev() {
        let top = rem[i + db];
        if top % lc != 0 {
            return None;
        }
        q[i] = top / lc;
        for (j, &bj) in b.iter().enumerate() {
            rem[i + j] -= q[i] * bj;
        }
    }
    rem.iter().all(|&c| c == 0).then_some(q)
}

fn divisors(n: i64) -> Vec<i64> {
    let n = n.abs();
    (1..=n).filter(|d| n % d == 0).collect()
}

/// Smallest-degree primitive divisor of degree at least one, found by
/// enumerating every candidate inside the coefficient bound. Such a divisor
/// is irreducible.
fn smallest_factor(f: &[i64]) -> Option<Vec<i64>> {
    let deg = f.len() - 1;
    let norm = (f.iter().map(|c| c * c).sum::<i64>() as f64).sqrt().floor() as i64 + 1;
    for d in 1..=deg / 2 {
        let bound = (1i64 << d) * norm;
        for &lc in &divisors(*f.last().unwrap()) {
            for &c0 in &divisors(f[0]) {
                for sign in [1, -1] {
                    let mut cand = vec![0i64; d + 1];
                    cand[0] = sign * c0;
                    cand[d] = lc;
                    let inner = d.saturating_sub(1) as u32;
                    let span = 2 * bound + 1;
                    for idx in 0..span.pow(inner) {
                        let mut rest = idx;
                        for slot in cand.iter_mut().take(d).skip(1) {
                            *slot = rest % span - bound;
                            rest /= span;
                        }
                        if int_div(f, &cand).is_some() {
                            return Some(cand);
                        }
                    }
                }
            }
        }
    }
    None
}

/// Irreducible factors with multiplicity, by repeated trial division.
fn brute_force(f: &[i64]) -> Vec<CanonicalPoly> {
    let mut f = f.to_vec();
    let mut out = Vec::new();
    while f.len() > 1 {
        match smallest_factor(&f) {
            Some(g) => {
                f = int_div(&f, &g).unwrap();
                out.push(LaurentPoly::from_ints(&g, 0).canon());
            }
            None => {
                out.push(LaurentPoly::from_ints(&f, 0).canon());
                break;
            }
        }
    }
    out.sort();
    out
}

fn flat(p: &LaurentPoly) -> Vec<CanonicalPoly> {
    let f = factor(p).unwrap();
    let mut out: Vec<CanonicalPoly> = f
        .factors
        .iter()
        .flat_map(|(q, m)| std::iter::repeat_n(q.clone(), *m as usize))
        .collect();
    out.sort();
    out
}

fn int_coeffs(q: &LaurentPoly) -> Vec<i64> {
    q.canon().int_coeffs().iter().map(|c| i64::try_from(c).unwrap()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn matches_brute_force(q in nonunit(6, 2)) {
        prop_assert_eq!(flat(&q), brute_force(&int_coeffs(&q)));
    }

    #[test]
    fn matches_brute_force_on_products(a in nonunit(3, 3), b in nonunit(2, 3)) {
        let q = &a * &b;
        prop_assert_eq!(flat(&q), brute_force(&int_coeffs(&q)));
    }

    #[test]
    fn remultiplies(q in nonunit(8, 9), k in -3i64..=3) {
        let q = q.shift(k);
        let f = factor(&q).unwrap();
        prop_assert_eq!(f.expand(), q);
        for (i, (a, _)) in f.factors.iter().enumerate() {
            prop_assert!(a.degree() >= 1);
            for (b, _) in &f.factors[i + 1..] {
                prop_assert!(a.gcd(b).unwrap().is_one());
            }
        }
    }

    #[test]
    fn factors_of_a_product_are_the_union(a in nonunit(4, 4), b in nonunit(4, 4)) {
        let mut both = flat(&a);
        both.extend(flat(&b));
        both.sort();
        prop_assert_eq!(flat(&(&a * &b)), both);
    }

    #[test]
    fn squarefree_parts(a in nonunit(3, 4), b in nonunit(3, 4)) {
        let q = &(&a * &a) * &b;
        let parts = squarefree_decompose(&q).unwrap();
        let rebuilt: LaurentPoly = parts.iter().map(|(s, m)| s.as_poly().pow(*m)).product();
        prop_assert_eq!(rebuilt.canon(), q.canon());
        for (s, _) in &parts {
            prop_assert!(s.gcd(&s.derivative()).unwrap().is_one());
        }
    }
}

#[test]
fn cyclotomic_products() {
    let names: Vec<String> = factor(&p("t^6-1")).unwrap().factors.iter().map(|(q, _)| q.to_string()).collect();
    assert_eq!(names, ["t - 1", "t + 1", "t^2 - t + 1", "t^2 + t + 1"]);
    assert_eq!(factor(&p("t^12-1")).unwrap().count(), 6);
    assert!(is_irreducible(&p("t^4+t^3+t^2+t+1")).unwrap());
}
