use proptest::prelude::*;

use hcf_core::frobenius::Family;
use hcf_core::series::{closed_form_series, geometric_ratio, LaurentPoly, RationalLaurentSeries};
use hcf_core::ManifoldSpec;

fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((0i32..8, -3i64..4), 0..5).prop_map(LaurentPoly::from_terms)
}

fn arb_series() -> impl Strategy<Value = RationalLaurentSeries> {
    (arb_poly(), prop::collection::vec(1i32..5, 0..3))
        .prop_map(|(p, d)| RationalLaurentSeries::new(p, d).expect("positive factors"))
}

const HI: i32 = 24;

proptest! {
    #[test]
    fn expansion_is_additive(a in arb_series(), b in arb_series()) {
        let sum = a.add(&b).expand(0, HI).unwrap();
        let (ea, eb) = (a.expand(0, HI).unwrap(), b.expand(0, HI).unwrap());
        let pointwise: Vec<i64> = ea.iter().zip(&eb).map(|(x, y)| x + y).collect();
        prop_assert_eq!(sum, pointwise);
    }

    #[test]
    fn expansion_is_multiplicative(a in arb_series(), b in arb_series()) {
        // both supports start at t^0, so the window determines the product
        let prod = a.mul(&b).expand(0, HI).unwrap();
        let (ea, eb) = (a.expand(0, HI).unwrap(), b.expand(0, HI).unwrap());
        let conv: Vec<i64> = (0..=HI as usize).map(|k| (0..=k).map(|i| ea[i] * eb[k - i]).sum()).collect();
        prop_assert_eq!(prod, conv);
    }

    #[test]
    fn geometric_times_factor(m in 1u32..10, step in 1i32..6) {
        let g = geometric_ratio(m, step).unwrap();
        prop_assert_eq!(g.mul(&LaurentPoly::one_minus(step)), LaurentPoly::one_minus(step * m as i32));
    }

    #[test]
    fn shift_moves_coefficients(a in arb_series(), k in 0i32..6) {
        let shifted = a.shift(k).expand(k, HI + k).unwrap();
        prop_assert_eq!(shifted, a.expand(0, HI).unwrap());
    }
}

#[test]
fn closed_forms_outside_even_projective_cases_have_nonnegative_coefficients() {
    for s in ManifoldSpec::catalogue() {
        let even_proj = s.family() != Family::Sphere && s.parameter() % 2 == 0;
        let c = closed_form_series(&s).expand(-10, 80).unwrap();
        if !even_proj {
            assert!(c.iter().all(|&x| x >= 0), "{}: {c:?}", s.name());
            assert!(c[..10].iter().all(|&x| x == 0), "{}: support below t^0", s.name());
        }
    }
}
