//! The truncated total complex against the `E_2` series. For even projective
//! spaces this is the independent check that decides between the two series.

use hcf_core::bvring::make_presentation;
use hcf_core::connes::e2_series;
use hcf_core::hochschild::hcf::hcf_window;
use hcf_core::series::closed_form_series;
use hcf_core::{make_algebra, ManifoldSpec};

fn compare(name: &str, hi: i32) {
    let s: ManifoldSpec = name.parse().unwrap();
    let table = hcf_window(&make_algebra(&s), 0, hi, 2 * hi as usize).unwrap();
    assert!(!table.truncated, "{name}");
    let dims: Vec<i64> = table.dims().iter().map(|&d| d as i64).collect();
    let e2 = e2_series(&make_presentation(&s)).unwrap().expand(0, hi).unwrap();
    assert_eq!(dims, e2, "{name}: total complex against E2");
    let closed = closed_form_series(&s).expand(0, hi).unwrap();
    assert_ne!(dims, closed, "{name}: closed form");
}

#[test]
fn cp2_matches_e2() {
    compare("CP2", 12);
}

#[test]
fn hp2_matches_e2() {
    compare("HP2", 12);
}

#[test]
fn cp4_matches_e2() {
    compare("CP4", 10);
}
