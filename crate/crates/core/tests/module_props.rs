mod common;

use common::{endo, laurent_or_zero, module, nonunit, p, product, unimodular};
use proptest::prelude::*;
use spinobs::torsion::order_ideal_of_presentation;
use spinobs::{smith_normal_form, LambdaMatrix, LaurentPoly, ModuleEndo, TorsionModule};

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = LambdaMatrix> {
    prop::collection::vec(laurent_or_zero(3, 3), rows * cols)
        .prop_map(move |es| LambdaMatrix::from_entries(rows, cols, es).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn smith_form_is_a_unimodular_diagonalization(a in (1usize..=3, 1usize..=3).prop_flat_map(|(r, c)| matrix(r, c))) {
        let snf = smith_normal_form(&a);
        let d = snf.left.mul(&a).unwrap().mul(&snf.right).unwrap();
        prop_assert_eq!(&d, &snf.diagonal_matrix());
        prop_assert!(snf.left.determinant().unwrap().is_unit());
        prop_assert!(snf.right.determinant().unwrap().is_unit());
        let nz: Vec<_> = snf.diag.iter().filter(|x| !x.is_zero()).collect();
        for w in nz.windows(2) {
            prop_assert!(w[0].divides(w[1]));
        }
        prop_assert!(snf.diag.iter().skip(nz.len()).all(|x| x.is_zero()));
    }

    #[test]
    fn smith_diagonal_product_is_the_minor_gcd(a in (1usize..=3, 1usize..=3).prop_flat_map(|(r, c)| matrix(r, c))) {
        let snf = smith_normal_form(&a);
        let r = snf.rank();
        prop_assume!(r > 0);
        let minors = a.minors(r);
        let g = minors
            .iter()
            .filter(|m| !m.is_zero())
            .fold(LaurentPoly::zero(), |acc, m| if acc.is_zero() { m.clone() } else { acc.gcd(m).unwrap().into_poly() })
            .canon();
        prop_assert_eq!(product(&snf.diag[..r]), g);
        prop_assert!(a.minors(r + 1).iter().all(LaurentPoly::is_zero));
    }

    #[test]
    fn charpoly_matches_order_ideal(m in module(4)) {
        let v = m.vectorize();
        prop_assert_eq!(v.dim, m.dimension());
        prop_assert_eq!(v.t_action.charpoly().canon(), m.order_ideal());
        prop_assert!(v.t_action.is_invertible());
    }

    #[test]
    fn scrambled_presentations_keep_the_order_ideal(
        (m, u, w) in module(4).prop_flat_map(|m| { let n = m.len(); (Just(m), unimodular(n), unimodular(n)) })
    ) {
        let pres = u.mul(&m.presentation()).unwrap().mul(&w).unwrap();
        prop_assert_eq!(order_ideal_of_presentation(&pres).unwrap(), m.order_ideal());
        let rebuilt = TorsionModule::from_presentation(&pres).unwrap();
        prop_assert!(rebuilt.is_isomorphic(&m));
        prop_assert_eq!(rebuilt.order_ideal(), m.order_ideal());
    }

    #[test]
    fn primary_parts_multiply_back(m in module(3)) {
        let parts = m.primary_decomposition().unwrap();
        let orders: Vec<_> = parts.values().map(TorsionModule::order_ideal).collect();
        prop_assert_eq!(product(&orders), m.order_ideal());
    }

    #[test]
    fn kernel_and_cokernel_share_an_order_ideal(f in endo(3)) {
        let coker = f.coker_order_ideal().unwrap();
        let ker = f.ker_order_ideal().unwrap();
        let dual = f.dual_endo().unwrap();
        prop_assert_eq!(&ker, &coker);
        prop_assert_eq!(&dual.kernel_order_ideal(), &ker);
        prop_assert!(f.vectorized().unwrap().commutes());
        prop_assert!(dual.commutes());
        prop_assert_eq!(f.kernel_module().unwrap().order_ideal(), ker);
        prop_assert_eq!(f.coker_module().unwrap().order_ideal(), coker);
    }

    #[test]
    fn minus_identity_is_well_defined(f in endo(3)) {
        let g = f.minus_identity();
        prop_assert!(g.is_well_defined());
        prop_assert_eq!(g.ker_order_ideal().unwrap(), g.coker_order_ideal().unwrap());
        let sq = f.compose(&f).unwrap();
        prop_assert!(sq.is_well_defined());
    }

    /// For `M = Λ/(pq)` with coprime `p`, `q`: the part killed by `p` has
    /// order `p`, and the quotient by it has order `q`.
    #[test]
    fn killed_part_and_quotient(a in nonunit(3, 4), b in nonunit(3, 4)) {
        prop_assume!(a.gcd(&b).unwrap().is_one());
        let pq = &a * &b;
        let m = TorsionModule::new(vec![pq.clone()]).unwrap();
        let times_p = ModuleEndo::scalar(m, &a);
        let killed = times_p.ker_order_ideal().unwrap();
        prop_assert_eq!(&killed, &a.canon());
        let quotient = order_ideal_of_presentation(
            &LambdaMatrix::from_rows(vec![vec![pq.clone(), b.clone()]]).unwrap(),
        )
        .unwrap();
        prop_assert_eq!(&quotient, &b.canon());
        prop_assert_eq!((killed.as_poly() * quotient.as_poly()).canon(), pq.canon());
    }
}

#[test]
fn square_map_module() {
    let m = TorsionModule::new(vec![p("t-2"), p("t^2-4t+4")]).unwrap();
    let g = ModuleEndo::new(
        m,
        LambdaMatrix::from_rows(vec![vec![p("0"), p("0")], vec![p("t-2"), p("0")]]).unwrap(),
    )
    .unwrap();
    let sq = p("t^2-4t+4").canon();
    assert_eq!(g.ker_order_ideal().unwrap(), sq);
    assert_eq!(g.coker_order_ideal().unwrap(), sq);
    let dual = g.dual_endo().unwrap();
    assert_eq!(dual.kernel_order_ideal(), sq);
    assert_eq!(g.kernel_module().unwrap().invariant_factors(), vec![sq.clone()]);
    let lin = p("t-2").canon();
    assert_eq!(dual.kernel_module().unwrap().invariant_factors(), vec![lin.clone(), lin]);
}
