//! Homology of the total complex of the `(b̌, B̌)` bicomplex over a finite
//! window of total degrees, with a certified cap on the number of columns.
//!
//! Column `p` holds `CH^m` shifted so that a cochain of internal shift `s`
//! sits in desuspended total degree `s + 2p - m`; the reported degree adds
//! `dim M`. The computation uses normalized cochains, on which both
//! differentials restrict.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::f2::{self, F2Matrix};
use crate::frobenius::FrobeniusAlgebra;

use super::cochain::CochainSpace;
use super::ops::{component_matrix, Frame, OpKind};
use super::HochschildError;

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct HcfTable {
    pub manifold: String,
    pub lo: i32,
    pub hi: i32,
    pub column_cap: usize,
    /// Smallest cap for which the truncation is exact on the window.
    pub required_cap: usize,
    pub truncated: bool,
    /// `(degree, dimension)` for each degree of the window.
    pub rows: Vec<(i32, usize)>,
}

impl HcfTable {
    pub fn dims(&self) -> Vec<usize> {
        self.rows.iter().map(|&(_, d)| d).collect()
    }
}

struct Layout {
    /// `shift -> [(p, m)]` for one total degree.
    pieces: BTreeMap<i32, Vec<(usize, usize)>>,
}

/// Minimal degree of a non-unit basis element, negated.
fn generator_degree(a: &FrobeniusAlgebra) -> i32 {
    (0..a.dim())
        .filter(|&i| i != a.unit())
        .map(|i| -a.degree(i))
        .min()
        .unwrap_or(0)
}

pub fn hcf_window(
    a: &FrobeniusAlgebra,
    lo: i32,
    hi: i32,
    column_cap: usize,
) -> Result<HcfTable, HochschildError> {
    let dim_m = a.dim_m();
    let required_cap = ((hi + 1).max(0) / 2) as usize;
    let mut table = HcfTable {
        manifold: a.name().to_string(),
        lo,
        hi,
        column_cap,
        required_cap,
        truncated: column_cap < required_cap,
        rows: Vec::new(),
    };
    if lo > hi {
        return Ok(table);
    }
    let g = generator_degree(a);
    if g < 2 {
        return Err(HochschildError::NotCertifiable(format!(
            "{}: normalized cochains of every Hochschild degree meet each total degree when generators have degree {}",
            a.name(),
            -g
        )));
    }
    // a normalized m-cochain has tdeg >= m (g - 1) - dim M
    let max_m = |tdeg: i32| -> Option<usize> {
        let room = tdeg + dim_m;
        (room >= 0).then(|| (room / (g - 1)) as usize)
    };
    let layout = |t: i32| -> Layout {
        let mut pieces: BTreeMap<i32, Vec<(usize, usize)>> = BTreeMap::new();
        for p in 0..=column_cap {
            let tdeg = t - 2 * p as i32;
            let Some(mm) = max_m(tdeg) else { break };
            for m in 0..=mm {
                pieces.entry(tdeg + m as i32).or_default().push((p, m));
            }
        }
        Layout { pieces }
    };
    let frame = Frame::new(a);
    let mut spaces: BTreeMap<(usize, i32), CochainSpace> = BTreeMap::new();
    let mut space = |m: usize, s: i32| -> CochainSpace {
        spaces
            .entry((m, s))
            .or_insert_with(|| CochainSpace::new(a, m, s, true))
            .clone()
    };
    // rank of D : Tot_t -> Tot_{t-1}, and dim Tot_t
    let mut cache: BTreeMap<i32, (usize, usize)> = BTreeMap::new();
    let mut stats = |t: i32| -> Result<(usize, usize), HochschildError> {
        if let Some(&v) = cache.get(&t) {
            return Ok(v);
        }
        let src = layout(t);
        let dst = layout(t - 1);
        let mut total_dim = 0;
        let mut total_rank = 0;
        for (&s, src_pieces) in &src.pieces {
            let src_spaces: Vec<CochainSpace> = src_pieces.iter().map(|&(_, m)| space(m, s)).collect();
            let dst_pieces = dst.pieces.get(&s).cloned().unwrap_or_default();
            let dst_spaces: Vec<CochainSpace> = dst_pieces.iter().map(|&(_, m)| space(m, s)).collect();
            let cols: usize = src_spaces.iter().map(CochainSpace::len).sum();
            let rows: usize = dst_spaces.iter().map(CochainSpace::len).sum();
            total_dim += cols;
            if cols == 0 || rows == 0 {
                continue;
            }
            let offsets = |sp: &[CochainSpace]| {
                sp.iter()
                    .scan(0, |acc, x| {
                        let o = *acc;
                        *acc += x.len();
                        Some(o)
                    })
                    .collect::<Vec<_>>()
            };
            let (col_off, row_off) = (offsets(&src_spaces), offsets(&dst_spaces));
            let mut d = F2Matrix::zeros(rows, cols);
            for (k, &(p, m)) in src_pieces.iter().enumerate() {
                let targets = [
                    (OpKind::Coboundary, Some((p, m + 1))),
                    (OpKind::Connes, (p >= 1 && m >= 1).then(|| (p - 1, m - 1))),
                ];
                for (kind, target) in targets {
                    let Some(target) = target else { continue };
                    let Some(j) = dst_pieces.iter().position(|&x| x == target) else {
                        continue;
                    };
                    let block = component_matrix(frame, kind, &src_spaces[k], &dst_spaces[j])?;
                    for r in 0..block.rows() {
                        for c in block.row(r).ones() {
                            d.flip(row_off[j] + r, col_off[k] + c);
                        }
                    }
                }
            }
            total_rank += f2::rank(&d);
        }
        cache.insert(t, (total_dim, total_rank));
        Ok((total_dim, total_rank))
    };
    for degree in lo..=hi {
        let t = degree - dim_m;
        let (dim, rank_out) = stats(t)?;
        let (_, rank_in) = stats(t + 1)?;
        table.rows.push((degree, dim - rank_out - rank_in));
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frobenius::{make_algebra, ManifoldSpec};

    #[test]
    fn empty_window() {
        let a = make_algebra(&ManifoldSpec::sphere(2).unwrap());
        let t = hcf_window(&a, 3, 2, 4).unwrap();
        assert!(t.rows.is_empty());
    }

    #[test]
    fn real_projective_is_not_certifiable() {
        let a = make_algebra(&ManifoldSpec::real_proj(3).unwrap());
        assert!(matches!(
            hcf_window(&a, 0, 6, 12),
            Err(HochschildError::NotCertifiable(_))
        ));
    }

    #[test]
    fn s2_low_degrees() {
        let a = make_algebra(&ManifoldSpec::sphere(2).unwrap());
        let t = hcf_window(&a, 0, 5, 12).unwrap();
        assert!(!t.truncated);
        assert_eq!(t.dims(), vec![1, 1, 2, 2, 3, 3]);
    }
}
