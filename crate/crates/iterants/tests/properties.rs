//! Property tests for the algebraic invariants.

use proptest::prelude::*;

use iterants::calculus::{
    commutator, discrete_derivative, verify_commutator_identity, SkewElement, TemporalFunction,
    TimeGrid,
};
use iterants::eigenform::{enclose, unfold, FormExpr};
use iterants::iterant::{IterantElement, IterantView};
use iterants::scalar::{Backend, Scalar};

fn rational() -> impl Strategy<Value = Scalar> {
    (-9i64..=9, 1i64..=9).prop_map(|(p, q)| Scalar::from_ratio(p, q).unwrap())
}

fn view() -> impl Strategy<Value = IterantView> {
    (rational(), rational()).prop_map(|(a, b)| IterantView::new(a, b).unwrap())
}

fn element() -> impl Strategy<Value = IterantElement> {
    (view(), view()).prop_map(|(even, odd)| IterantElement::new(even, odd).unwrap())
}

fn form_expr() -> impl Strategy<Value = FormExpr> {
    (0usize..=12, any::<bool>()).prop_map(|(depth, reentry)| {
        let mut e = if reentry {
            FormExpr::Reentry
        } else {
            FormExpr::Empty
        };
        for _ in 0..depth {
            e = enclose(e);
        }
        e
    })
}

fn series() -> impl Strategy<Value = TemporalFunction> {
    (1i64..=4, proptest::collection::vec(rational(), 4..=24)).prop_map(|(dt, samples)| {
        let grid = TimeGrid::new(Scalar::from_int(dt), samples.len() - 1).unwrap();
        TemporalFunction::new(grid, samples).unwrap()
    })
}

proptest! {
    #[test]
    fn swap_is_an_involution(v in view()) {
        prop_assert_eq!(v.swap().swap(), v);
    }

    #[test]
    fn eta_commutes_views_with_a_swap(v in view()) {
        let eta = IterantElement::eta(Backend::Exact);
        let lhs = eta.mul(&IterantElement::from_view(v.clone())).unwrap();
        let rhs = IterantElement::from_view(v.swap()).mul(&eta).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn complex_embedding_is_multiplicative(
        a in rational(), b in rational(), c in rational(), d in rational()
    ) {
        let lhs = IterantElement::from_complex(a.clone(), b.clone()).unwrap()
            .mul(&IterantElement::from_complex(c.clone(), d.clone()).unwrap()).unwrap();
        let re = a.mul(&c).unwrap().sub(&b.mul(&d).unwrap()).unwrap();
        let im = a.mul(&d).unwrap().add(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(lhs.clone(), IterantElement::from_complex(re.clone(), im.clone()).unwrap());
        // and the image is recognized
        prop_assert_eq!(lhs.to_complex(), Some((re, im)));
    }

    #[test]
    fn matrix_map_preserves_products(x in element(), y in element()) {
        prop_assert_eq!(
            x.mul(&y).unwrap().to_matrix(),
            x.to_matrix().mul(&y.to_matrix()).unwrap()
        );
        prop_assert_eq!(IterantElement::from_matrix(&x.to_matrix()), x);
    }

    #[test]
    fn element_text_and_json_round_trip(x in element()) {
        prop_assert_eq!(
            IterantElement::parse(&x.to_text(), Backend::Exact).unwrap(),
            x.clone()
        );
        prop_assert_eq!(IterantElement::from_json(&x.to_json().unwrap()).unwrap(), x);
    }

    #[test]
    fn bracket_text_round_trips(e in form_expr()) {
        prop_assert_eq!(FormExpr::parse(&e.render()).unwrap(), e);
    }

    #[test]
    fn unfold_composes_additively(depth in 0usize..=6, a in 0usize..=8, b in 0usize..=8) {
        let mut e = FormExpr::Reentry;
        for _ in 0..depth {
            e = enclose(e);
        }
        let nested = unfold(&unfold(&e, a).unwrap(), b).unwrap();
        prop_assert_eq!(nested, unfold(&e, a + b).unwrap());
    }

    #[test]
    fn commutator_identity_is_sample_exact(x in series()) {
        let report = verify_commutator_identity(&x).unwrap();
        prop_assert!(report.is_exact());
        // the coefficient is a square over dt: never negative
        prop_assert!(report.rows.iter().all(|r| !r.lhs.is_negative()));
    }

    #[test]
    fn power_zero_elements_commute(
        dt in 1i64..=4,
        pairs in proptest::collection::vec((rational(), rational()), 4..=24),
    ) {
        let grid = TimeGrid::new(Scalar::from_int(dt), pairs.len() - 1).unwrap();
        let (xs, ys): (Vec<_>, Vec<_>) = pairs.into_iter().unzip();
        let a = SkewElement::from_function(TemporalFunction::new(grid.clone(), xs).unwrap());
        let b = SkewElement::from_function(TemporalFunction::new(grid, ys).unwrap());
        prop_assert!(commutator(&a, &b).unwrap().is_zero());
    }

    #[test]
    fn product_validity_shrinks_by_the_shift_count(
        x in series(), a in 0u32..=2, b in 0u32..=2
    ) {
        let len = x.grid().len();
        let lhs = SkewElement::term(a, x.clone());
        let rhs = SkewElement::term(b, x.clone());
        let product = lhs.mul(&rhs).unwrap();
        let coeff = product.coefficient(a + b).unwrap();
        let invalid = coeff.samples().iter().filter(|s| s.is_none()).count();
        prop_assert_eq!(invalid, (b as usize).min(len));
        // invalid samples sit at the tail
        let first_invalid = coeff.samples().iter().position(|s| s.is_none());
        prop_assert_eq!(first_invalid, if invalid == 0 { None } else { Some(len - invalid) });
    }

    #[test]
    fn derivative_coefficient_matches_forward_difference(x in series()) {
        let d = discrete_derivative(&x).unwrap();
        let coeff = d.coefficient(1).unwrap();
        for index in 0..x.grid().len() - 1 {
            let expected = x.get(index + 1).unwrap()
                .sub(x.get(index).unwrap()).unwrap()
                .div(x.grid().dt()).unwrap();
            prop_assert_eq!(coeff.get(index), Some(&expected));
        }
        prop_assert_eq!(coeff.get(x.grid().len() - 1), None);
    }
}
