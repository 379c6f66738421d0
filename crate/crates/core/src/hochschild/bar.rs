//! Hochschild cohomology `HH^*(A, A)` computed directly on the (normalized or
//! full) bar cochain complex, one bigraded piece at a time.

use std::collections::BTreeMap;

use crate::f2::{self, Echelon, F2Matrix, F2Vector};
use crate::frobenius::FrobeniusAlgebra;

use super::cochain::{Cochain, CochainSpace};
use super::ops::{component_matrix, connes_b, Frame, OpKind};
use super::{HhModel, HochschildError};

/// One piece `HH^m` in a fixed topological degree.
#[derive(Clone, Debug)]
pub struct HhComponent {
    space: CochainSpace,
    reps: Vec<F2Vector>,
    labels: Vec<Option<String>>,
    reducer: Echelon,
    image: Vec<F2Vector>,
}

impl HhComponent {
    fn build(space: CochainSpace, d_out: &F2Matrix, d_in: &F2Matrix) -> Result<Self, HochschildError> {
        let kernel = f2::kernel_basis(d_out);
        let image = f2::image_basis(d_in);
        let reps = f2::subquotient_basis(&kernel, &image)?;
        Ok(Self::assemble(space, reps, &image))
    }

    fn assemble(space: CochainSpace, reps: Vec<F2Vector>, image: &[F2Vector]) -> Self {
        let mut reducer = Echelon::new(space.len(), reps.len());
        for v in image {
            reducer.insert(v, F2Vector::zeros(reps.len()));
        }
        for (i, r) in reps.iter().enumerate() {
            reducer.insert(r, F2Vector::unit(reps.len(), i));
        }
        let labels = vec![None; reps.len()];
        Self {
            space,
            reps,
            labels,
            reducer,
            image: image.to_vec(),
        }
    }

    pub fn m(&self) -> usize {
        self.space.m()
    }

    pub fn tdeg(&self) -> i32 {
        self.space.tdeg()
    }

    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    pub fn space(&self) -> &CochainSpace {
        &self.space
    }

    pub fn rep(&self, i: usize) -> Cochain {
        self.space.to_cochain(&self.reps[i])
    }

    pub fn label(&self, i: usize) -> Option<&str> {
        self.labels[i].as_deref()
    }

    /// Class coordinates of a cocycle in this piece.
    pub fn reduce(&self, c: &Cochain) -> Result<F2Vector, HochschildError> {
        let v = self.space.coordinates(c).ok_or(HochschildError::OutsideComponent {
            m: self.m(),
            tdeg: self.tdeg(),
        })?;
        self.reducer.coordinates(&v).ok_or(HochschildError::NotCocycle {
            m: self.m(),
            tdeg: self.tdeg(),
        })
    }

    /// True when `c` is a coboundary.
    pub fn is_trivial(&self, c: &Cochain) -> Result<bool, HochschildError> {
        Ok(self.reduce(c)?.is_zero())
    }

    /// Replaces the representatives by the given labelled cocycles, which must
    /// project to a basis of the piece.
    pub fn rebase(&mut self, classes: Vec<(String, Cochain)>) -> Result<(), HochschildError> {
        if classes.len() != self.dim() {
            return Err(HochschildError::NotABasis {
                m: self.m(),
                tdeg: self.tdeg(),
            });
        }
        let mut check = F2Matrix::zeros(self.dim(), self.dim());
        for (j, (_, c)) in classes.iter().enumerate() {
            let coords = self.reduce(c)?;
            for i in coords.ones() {
                check.set(i, j, true);
            }
        }
        if f2::rank(&check) != self.dim() {
            return Err(HochschildError::NotABasis {
                m: self.m(),
                tdeg: self.tdeg(),
            });
        }
        let image = std::mem::take(&mut self.image);
        let mut reps = Vec::with_capacity(classes.len());
        let mut labels = Vec::with_capacity(classes.len());
        for (label, c) in classes {
            reps.push(self.space.coordinates(&c).expect("reduced above"));
            labels.push(Some(label));
        }
        let space = self.space.clone();
        *self = Self::assemble(space, reps, &image);
        self.labels = labels;
        Ok(())
    }
}

/// Bar-complex backend with per-piece caching.
pub struct BarModel<'a> {
    alg: &'a FrobeniusAlgebra,
    normalized: bool,
    budget: usize,
    comps: BTreeMap<(usize, i32), HhComponent>,
}

impl<'a> BarModel<'a> {
    pub const DEFAULT_BUDGET: usize = 12_000;

    pub fn new(alg: &'a FrobeniusAlgebra) -> Self {
        Self::with_options(alg, true, Self::DEFAULT_BUDGET)
    }

    pub fn with_options(alg: &'a FrobeniusAlgebra, normalized: bool, budget: usize) -> Self {
        Self {
            alg,
            normalized,
            budget,
            comps: BTreeMap::new(),
        }
    }

    pub fn algebra(&self) -> &'a FrobeniusAlgebra {
        self.alg
    }

    pub fn is_normalized(&self) -> bool {
        self.normalized
    }

    fn space(&self, m: usize, shift: i32) -> Result<CochainSpace, HochschildError> {
        let tuples = self.alg.dim().checked_pow(m as u32).unwrap_or(usize::MAX);
        if tuples.saturating_mul(self.alg.dim()) > (1 << 26) {
            return Err(HochschildError::TooLarge {
                m,
                tdeg: shift - m as i32,
                size: tuples,
                budget: self.budget,
            });
        }
        let sp = CochainSpace::new(self.alg, m, shift, self.normalized);
        if sp.len() > self.budget {
            return Err(HochschildError::TooLarge {
                m,
                tdeg: shift - m as i32,
                size: sp.len(),
                budget: self.budget,
            });
        }
        Ok(sp)
    }

    /// Size of the cochain piece `(m, tdeg)`, without building anything else.
    pub fn space_len(&self, m: usize, tdeg: i32) -> usize {
        CochainSpace::new(self.alg, m, tdeg + m as i32, self.normalized).len()
    }

    pub fn component(&mut self, m: usize, tdeg: i32) -> Result<&HhComponent, HochschildError> {
        Ok(self.component_mut(m, tdeg)?)
    }

    pub fn component_mut(&mut self, m: usize, tdeg: i32) -> Result<&mut HhComponent, HochschildError> {
        if !self.comps.contains_key(&(m, tdeg)) {
            let shift = tdeg + m as i32;
            let frame = Frame::new(self.alg);
            let here = self.space(m, shift)?;
            let next = self.space(m + 1, shift)?;
            let d_out = component_matrix(frame, OpKind::Coboundary, &here, &next)?;
            let d_in = if m == 0 {
                F2Matrix::zeros(here.len(), 0)
            } else {
                let prev = self.space(m - 1, shift)?;
                component_matrix(frame, OpKind::Coboundary, &prev, &here)?
            };
            let comp = HhComponent::build(here, &d_out, &d_in)?;
            self.comps.insert((m, tdeg), comp);
        }
        Ok(self.comps.get_mut(&(m, tdeg)).expect("inserted"))
    }

    /// `Δ = [B̌]` on the class with coordinates `coords` in piece `(m, tdeg)`,
    /// as coordinates in `(m - 1, tdeg + 1)`.
    pub fn delta_coords(&mut self, m: usize, tdeg: i32, coords: &F2Vector) -> Result<F2Vector, HochschildError> {
        let dim = self.alg.dim();
        let src = self.component(m, tdeg)?;
        let mut rep = Cochain::zero(dim, m);
        for i in coords.ones() {
            rep.add_assign(&src.rep(i));
        }
        if m == 0 {
            return Ok(F2Vector::zeros(0));
        }
        let image = connes_b(self.alg, &rep)?.expect("positive arity");
        self.component(m - 1, tdeg + 1)?.reduce(&image)
    }
}

impl HhModel for BarModel<'_> {
    fn algebra(&self) -> &FrobeniusAlgebra {
        self.alg
    }

    fn class_count(&mut self, m: usize, tdeg: i32) -> Result<usize, HochschildError> {
        Ok(self.component(m, tdeg)?.dim())
    }

    fn delta_matrix(&mut self, m: usize, tdeg: i32) -> Result<F2Matrix, HochschildError> {
        let n = self.class_count(m, tdeg)?;
        if m == 0 {
            return Ok(F2Matrix::zeros(0, n));
        }
        let rows = self.class_count(m - 1, tdeg + 1)?;
        let mut cols = Vec::with_capacity(n);
        for i in 0..n {
            cols.push(self.delta_coords(m, tdeg, &F2Vector::unit(n, i))?);
        }
        Ok(F2Matrix::from_columns(rows, &cols))
    }
}
