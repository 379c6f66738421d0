use hcf_core::bvring::make_presentation;
use hcf_core::connes::{classify_monomial, d1_matrix, E1Source, MonomialKind};
use hcf_core::f2::rank;
use hcf_core::ManifoldSpec;

const TDEG: (i32, i32) = (-12, 12);
const HDEG: usize = 8;

#[test]
fn d1_squares_to_zero() {
    for s in ManifoldSpec::catalogue() {
        let mut r = make_presentation(&s);
        for m in 2..=HDEG {
            for tdeg in TDEG.0..=TDEG.1 {
                let first = d1_matrix(&mut r, 2, m, tdeg).unwrap();
                let second = d1_matrix(&mut r, 1, m - 1, tdeg + 1).unwrap();
                assert!(second.mul(&first).is_zero(), "{} ({m}, {tdeg})", s.name());
            }
        }
    }
}

#[test]
fn survivors_count_the_rank_of_delta() {
    for s in ManifoldSpec::catalogue() {
        let mut r = make_presentation(&s);
        for m in 1..=HDEG {
            for tdeg in TDEG.0..=TDEG.1 {
                let alone = r
                    .basis_at(m, tdeg)
                    .iter()
                    .filter(|x| classify_monomial(&r, x) == MonomialKind::SurviveAlone)
                    .count();
                assert_eq!(alone, rank(&r.delta_matrix(m, tdeg).unwrap()), "{} ({m}, {tdeg})", s.name());
            }
        }
    }
}

#[test]
fn hit_classes_lie_in_the_image() {
    for s in ManifoldSpec::catalogue() {
        let mut r = make_presentation(&s);
        for m in 0..HDEG {
            for tdeg in TDEG.0..=TDEG.1 {
                let hit = r
                    .basis_at(m, tdeg)
                    .iter()
                    .filter(|x| classify_monomial(&r, x) == MonomialKind::Hit)
                    .count();
                assert_eq!(hit, rank(&r.delta_matrix(m + 1, tdeg - 1).unwrap()), "{} ({m}, {tdeg})", s.name());
            }
        }
    }
}
