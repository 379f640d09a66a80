mod common;

use common::{endo, laurent, nonunit, p};
use proptest::prelude::*;
use spinobs::{
    levine_check, obstruction_check, rat, seifert_to_alexander, spin, twist_spin, CanonicalPoly, LaurentPoly,
    ModuleChain,
};

fn chain() -> impl Strategy<Value = ModuleChain> {
    (2usize..=4).prop_flat_map(|n| {
        prop::collection::vec(endo(2), n - 1).prop_map(move |levels| ModuleChain::new(n, levels).unwrap())
    })
}

fn knot_poly() -> impl Strategy<Value = LaurentPoly> {
    nonunit(4, 4).prop_filter("nonzero at 1", |q| q.eval(&rat(1)).unwrap() != rat(0))
}

fn polys(qs: &[CanonicalPoly]) -> Vec<LaurentPoly> {
    qs.iter().map(|q| q.as_poly().clone()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn spin_output_is_a_closed_chain(c in chain()) {
        let r = spin(&c).unwrap();
        let n = c.n();
        prop_assert_eq!(r.qs.len(), n + 1);
        prop_assert!(r.qs[0].is_one() && r.qs[n].is_one());
        for i in 1..=n {
            prop_assert_eq!(&r.deltas[i - 1], &(r.qs[i].as_poly() * r.qs[i - 1].as_poly()).canon());
        }
        let v = obstruction_check(n, &polys(&r.deltas), true).unwrap();
        prop_assert!(v.passed);
        prop_assert_eq!(v.witness.as_ref(), Some(&r.qs));
        if r.symmetric {
            prop_assert!(obstruction_check(n, &polys(&r.deltas), false).unwrap().passed);
        }
    }

    #[test]
    fn one_twist_spins_are_trivial(ds in prop::collection::vec(knot_poly(), 1..=3)) {
        let r = twist_spin(&ds, 1).unwrap();
        prop_assert!(r.deltas.iter().all(|d| d.is_one()));
    }

    #[test]
    fn seifert_polynomials_are_symmetric(v in (0usize..=4).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(-3i64..=3, n), n))) {
        let d = seifert_to_alexander(&v).unwrap();
        if !d.is_zero() {
            prop_assert_eq!(d.conj_canon(), d);
        }
    }

    #[test]
    fn full_pass_implies_chain_pass(n in 1usize..=4, ds in prop::collection::vec(laurent(3, 3), 4)) {
        let ds = &ds[..n];
        let full = obstruction_check(n, ds, false).unwrap();
        let chain = obstruction_check(n, ds, true).unwrap();
        if full.passed {
            prop_assert!(chain.passed);
            prop_assert_eq!(&full.witness, &chain.witness);
        }
        prop_assert_eq!(full.clone(), obstruction_check(n, ds, false).unwrap());
    }

    #[test]
    fn single_polynomial(d in laurent(4, 4)) {
        let v = obstruction_check(1, std::slice::from_ref(&d), false).unwrap();
        prop_assert_eq!(v.passed, d.canon().is_one());
    }

    #[test]
    fn two_knots(a in laurent(3, 3), b in laurent(3, 3), same in any::<bool>()) {
        let b = if same { a.shift(2).scale(&rat(-3)) } else { b };
        let v = obstruction_check(2, &[a.clone(), b.clone()], false).unwrap();
        let expected = a.canon() == b.canon() && a.canon().is_symmetric();
        prop_assert_eq!(v.passed, expected);
    }

    #[test]
    fn symmetric_chains_pass(qs in prop::collection::vec(knot_poly(), 1..=2)) {
        // q = (1, q1, q2, conj q2, conj q1, 1) or its odd-length analogue.
        let mut chain = vec![LaurentPoly::one()];
        chain.extend(qs.iter().cloned());
        let mirrored: Vec<LaurentPoly> = qs.iter().rev().map(LaurentPoly::conj).collect();
        chain.extend(mirrored);
        chain.push(LaurentPoly::one());
        let n = chain.len() - 1;
        let deltas: Vec<LaurentPoly> = (1..=n).map(|i| &chain[i] * &chain[i - 1]).collect();
        let v = obstruction_check(n, &deltas, false).unwrap();
        prop_assert!(v.passed);
        prop_assert!(levine_check(n, &deltas).unwrap().passed);
    }
}

#[test]
fn twist_spins_of_the_trefoil() {
    let tref = p("t^2-t+1");
    let six = twist_spin(std::slice::from_ref(&tref), 6).unwrap();
    assert_eq!(six.deltas, vec![tref.canon(), tref.canon()]);
    assert!(six.symmetric);
    assert!(obstruction_check(2, &polys(&six.deltas), false).unwrap().passed);
    let two = twist_spin(&[tref], 2).unwrap();
    assert!(two.deltas.iter().all(|d| d.is_one()));
}
