use hcf_core::bvring::{make_presentation, Element, Monomial, PresentedBVRing};
use hcf_core::ManifoldSpec;
use proptest::prelude::*;

const MANIFOLDS: &[&str] = &[
    "S2", "S3", "S4", "S5", "S6", "RP2", "RP3", "RP4", "RP5", "RP6", "RP7", "CP1", "CP2", "CP3",
    "CP4", "CP5", "HP1", "HP2", "HP3", "HP4",
];

fn ring(i: usize) -> PresentedBVRing {
    make_presentation(&MANIFOLDS[i % MANIFOLDS.len()].parse::<ManifoldSpec>().unwrap())
}

fn normal(r: &PresentedBVRing, a: u32, b: u32, c: u32) -> Option<Monomial> {
    r.reduce(a % (r.top + 1), b, c)
}

fn arb_monomial() -> impl Strategy<Value = (u32, u32, u32)> {
    (0u32..8, 0u32..6, 0u32..4)
}

fn bv_defect(r: &PresentedBVRing, m1: &Monomial, m2: &Monomial) -> Element {
    // [m1, m2] - Δ(m1 m2) + Δ(m1) m2 + m1 Δ(m2)
    let one = |m: &Monomial| Element::monomial(*m);
    let mut e = r.bracket(m1, m2);
    e.add_assign(&r.delta_element(&Element::from_option(r.normal_form(m1, m2))));
    e.add_assign(&r.mul(&r.delta(m1), &one(m2)));
    e.add_assign(&r.mul(&one(m1), &r.delta(m2)));
    e
}

#[test]
fn delta_squares_to_zero_on_every_small_monomial() {
    for i in 0..MANIFOLDS.len() {
        let r = ring(i);
        for m in r.basis_in_window(-200, 200, 8) {
            let dd = r.delta_element(&r.delta(&m));
            assert!(dd.is_zero(), "{}: Δ² ≠ 0 on {}", r.manifold, r.label(&m));
        }
    }
}

#[test]
fn delta_is_homogeneous() {
    for i in 0..MANIFOLDS.len() {
        let r = ring(i);
        for m in r.basis_in_window(-200, 200, 8) {
            for t in r.delta(&m).terms() {
                assert_eq!(r.tdeg(t), r.tdeg(&m) + 1);
                assert_eq!(t.hdeg() + 1, m.hdeg());
            }
        }
    }
}

proptest! {
    #[test]
    fn closed_form_matches_bv_formula(i in 0usize..20, x in arb_monomial(), y in arb_monomial()) {
        let r = ring(i);
        let (Some(m1), Some(m2)) = (normal(&r, x.0, x.1, x.2), normal(&r, y.0, y.1, y.2)) else {
            return Ok(());
        };
        let closed = r.delta_element(&Element::from_option(r.normal_form(&m1, &m2)));
        prop_assert_eq!(closed, r.delta_via_bv(&m1, &m2));
        prop_assert!(bv_defect(&r, &m1, &m2).is_zero());
    }

    #[test]
    fn recursive_delta_matches_closed_form(i in 0usize..20, x in arb_monomial()) {
        let r = ring(i);
        if let Some(m) = normal(&r, x.0, x.1, x.2) {
            prop_assert_eq!(r.delta_recursive(&m), r.delta(&m));
        }
    }

    #[test]
    fn bracket_is_symmetric(i in 0usize..20, x in arb_monomial(), y in arb_monomial()) {
        let r = ring(i);
        if let (Some(m1), Some(m2)) = (normal(&r, x.0, x.1, x.2), normal(&r, y.0, y.1, y.2)) {
            prop_assert_eq!(r.bracket(&m1, &m2), r.bracket(&m2, &m1));
        }
    }

    #[test]
    fn bracket_is_a_derivation(i in 0usize..20, x in arb_monomial(), y in arb_monomial(), z in arb_monomial()) {
        let r = ring(i);
        let (Some(a), Some(b), Some(c)) =
            (normal(&r, x.0, x.1, x.2), normal(&r, y.0, y.1, y.2), normal(&r, z.0, z.1, z.2))
        else {
            return Ok(());
        };
        let e = |m: &Monomial| Element::monomial(*m);
        let lhs = r.bracket_elements(&e(&a), &Element::from_option(r.normal_form(&b, &c)));
        let rhs = r.mul(&r.bracket(&a, &b), &e(&c)).sum(&r.mul(&e(&b), &r.bracket(&a, &c)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn bracket_satisfies_jacobi(i in 0usize..20, x in arb_monomial(), y in arb_monomial(), z in arb_monomial()) {
        let r = ring(i);
        let (Some(a), Some(b), Some(c)) =
            (normal(&r, x.0, x.1, x.2), normal(&r, y.0, y.1, y.2), normal(&r, z.0, z.1, z.2))
        else {
            return Ok(());
        };
        let e = |m: &Monomial| Element::monomial(*m);
        let mut sum = r.bracket_elements(&e(&a), &r.bracket(&b, &c));
        sum.add_assign(&r.bracket_elements(&e(&b), &r.bracket(&c, &a)));
        sum.add_assign(&r.bracket_elements(&e(&c), &r.bracket(&a, &b)));
        prop_assert!(sum.is_zero());
    }
}
