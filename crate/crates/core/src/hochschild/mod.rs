//! Hochschild cochains, the operators `b̌` and `B̌`, and Hochschild cohomology.

pub mod bar;
pub mod checks;
pub mod cochain;
pub mod hcf;
pub mod ops;
pub mod resolution;

use thiserror::Error;

use crate::f2::{F2Error, F2Matrix};
use crate::frobenius::{FrobeniusAlgebra, FrobeniusError};

pub use bar::{BarModel, HhComponent};
pub use cochain::{Chain, Cochain, CochainEval, CochainSpace};
pub use ops::{bracket, chain_b, chain_big_b, circle, connes_b, cup, evaluate_on_chain, hochschild_d};
pub use resolution::{Resolution, ResolutionModel};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HochschildError {
    #[error(transparent)]
    Frobenius(#[from] FrobeniusError),
    #[error(transparent)]
    Linear(#[from] F2Error),
    #[error("cochain piece (m = {m}, tdeg = {tdeg}) has {size} entries, over the budget of {budget}")]
    TooLarge {
        m: usize,
        tdeg: i32,
        size: usize,
        budget: usize,
    },
    #[error("cochain is not a cocycle in (m = {m}, tdeg = {tdeg})")]
    NotCocycle { m: usize, tdeg: i32 },
    #[error("cochain has entries outside the piece (m = {m}, tdeg = {tdeg})")]
    OutsideComponent { m: usize, tdeg: i32 },
    #[error("given classes are not a basis of HH in (m = {m}, tdeg = {tdeg})")]
    NotABasis { m: usize, tdeg: i32 },
    #[error("algebra is not a truncated polynomial algebra")]
    NotMonogenic,
    #[error("{0}")]
    NotCertifiable(String),
    #[error("generator {name} not found: HH^{m} in degree {tdeg} has dimension {dim}")]
    MissingGenerator {
        name: &'static str,
        m: usize,
        tdeg: i32,
        dim: usize,
    },
}

/// A way of computing `HH^*(A, A)` together with `Δ`, one bigraded piece
/// `(m, tdeg)` at a time.
pub trait HhModel {
    fn algebra(&self) -> &FrobeniusAlgebra;

    /// `dim HH^m` in topological degree `tdeg`.
    fn class_count(&mut self, m: usize, tdeg: i32) -> Result<usize, HochschildError>;

    /// Matrix of `Δ : HH^m_{tdeg} → HH^{m-1}_{tdeg+1}` in the model's bases.
    fn delta_matrix(&mut self, m: usize, tdeg: i32) -> Result<F2Matrix, HochschildError>;
}
