//! Hochschild cochains `Hom(A^{⊗m}, A)` and chains `A^{⊗(m+1)}`.
//!
//! A cochain is stored densely: one `u32` mask per input tuple, tuples being
//! indexed in base `dim A` with the first argument most significant.

use crate::f2::F2Vector;
use crate::frobenius::{ones, FrobeniusAlgebra};

/// Something that can be evaluated on a tuple of basis indices.
pub trait CochainEval {
    fn arity(&self) -> usize;
    fn eval(&self, args: &[usize]) -> u32;
}

#[inline]
pub fn tuple_index(dim: usize, args: &[usize]) -> usize {
    args.iter().fold(0, |acc, &a| acc * dim + a)
}

/// Writes the digits of `index` (base `dim`, most significant first) into `out`.
#[inline]
pub fn tuple_digits(dim: usize, mut index: usize, out: &mut [usize]) {
    for slot in out.iter_mut().rev() {
        *slot = index % dim;
        index /= dim;
    }
}

/// A dense Hochschild cochain over an algebra of dimension `dim`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Cochain {
    dim: usize,
    m: usize,
    values: Vec<u32>,
}

impl Cochain {
    pub fn zero(dim: usize, m: usize) -> Self {
        Self {
            dim,
            m,
            values: vec![0; dim.pow(m as u32)],
        }
    }

    pub fn from_values(dim: usize, m: usize, values: Vec<u32>) -> Self {
        assert_eq!(values.len(), dim.pow(m as u32), "cochain value count");
        Self { dim, m, values }
    }

    /// Materializes a lazily evaluated cochain.
    pub fn from_eval(dim: usize, f: &impl CochainEval) -> Self {
        let m = f.arity();
        let mut args = vec![0; m];
        let values = (0..dim.pow(m as u32))
            .map(|t| {
                tuple_digits(dim, t, &mut args);
                f.eval(&args)
            })
            .collect();
        Self { dim, m, values }
    }

    /// The constant cochain in `CH^0` given by an element of `A`.
    pub fn element(dim: usize, mask: u32) -> Self {
        Self::from_values(dim, 0, vec![mask])
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn values(&self) -> &[u32] {
        &self.values
    }

    #[inline]
    pub fn values_mut(&mut self) -> &mut [u32] {
        &mut self.values
    }

    #[inline]
    pub fn at(&self, index: usize) -> u32 {
        self.values[index]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    pub fn add_assign(&mut self, other: &Cochain) {
        assert_eq!((self.dim, self.m), (other.dim, other.m));
        for (a, b) in self.values.iter_mut().zip(&other.values) {
            *a ^= *b;
        }
    }

    pub fn sum(&self, other: &Cochain) -> Cochain {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    /// Internal degree shift `s` (inputs of degree `w` go to degree `w + s`),
    /// or `None` for the zero cochain and for inhomogeneous cochains.
    pub fn shift(&self, a: &FrobeniusAlgebra) -> Option<i32> {
        let degs = tuple_degrees(a, self.m);
        let mut found = None;
        for (t, &v) in self.values.iter().enumerate() {
            for e in ones(v) {
                let s = a.degree(e) - degs[t];
                match found {
                    None => found = Some(s),
                    Some(prev) if prev != s => return None,
                    _ => {}
                }
            }
        }
        found
    }

    /// Topological degree `shift - m`.
    pub fn tdeg(&self, a: &FrobeniusAlgebra) -> Option<i32> {
        self.shift(a).map(|s| s - self.m as i32)
    }

    /// True when the cochain vanishes on every tuple containing the unit.
    pub fn is_normalized(&self, a: &FrobeniusAlgebra) -> bool {
        let mut args = vec![0; self.m];
        self.values.iter().enumerate().all(|(t, &v)| {
            tuple_digits(self.dim, t, &mut args);
            v == 0 || !args.contains(&a.unit())
        })
    }
}

impl CochainEval for Cochain {
    fn arity(&self) -> usize {
        self.m
    }

    #[inline]
    fn eval(&self, args: &[usize]) -> u32 {
        self.values[tuple_index(self.dim, args)]
    }
}

/// Total degree of every tuple of length `m`, indexed like cochain values.
pub fn tuple_degrees(a: &FrobeniusAlgebra, m: usize) -> Vec<i32> {
    let n = a.dim();
    let mut degs = vec![0i32];
    for _ in 0..m {
        degs = degs
            .iter()
            .flat_map(|&d| (0..n).map(move |e| d + a.degree(e)))
            .collect();
    }
    degs
}

/// One bigraded piece of the cochain complex: the `(tuple, output)` pairs of
/// internal shift `shift` in Hochschild degree `m`, optionally restricted to
/// normalized cochains (no unit among the inputs).
#[derive(Clone, Debug)]
pub struct CochainSpace {
    dim: usize,
    m: usize,
    shift: i32,
    normalized: bool,
    /// Global entry index `tuple * dim + output`, ascending.
    entries: Vec<u32>,
    /// Inverse of `entries` over all global indices (`u32::MAX` if absent).
    position: Vec<u32>,
}

impl CochainSpace {
    pub fn new(a: &FrobeniusAlgebra, m: usize, shift: i32, normalized: bool) -> Self {
        let n = a.dim();
        let degs = tuple_degrees(a, m);
        let mut position = vec![u32::MAX; degs.len() * n];
        let mut entries = Vec::new();
        let mut args = vec![0; m];
        for (t, &dt) in degs.iter().enumerate() {
            if normalized {
                tuple_digits(n, t, &mut args);
                if args.contains(&a.unit()) {
                    continue;
                }
            }
            for e in 0..n {
                if a.degree(e) - dt == shift {
                    let g = t * n + e;
                    position[g] = entries.len() as u32;
                    entries.push(g as u32);
                }
            }
        }
        Self {
            dim: n,
            m,
            shift,
            normalized,
            entries,
            position,
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn shift(&self) -> i32 {
        self.shift
    }

    pub fn tdeg(&self) -> i32 {
        self.shift - self.m as i32
    }

    pub fn is_normalized(&self) -> bool {
        self.normalized
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    /// Position of a global entry index, if it belongs to this space.
    #[inline]
    pub fn position(&self, global: usize) -> Option<usize> {
        match self.position.get(global) {
            Some(&p) if p != u32::MAX => Some(p as usize),
            _ => None,
        }
    }

    /// `(tuple index, output basis index)` of the `i`-th basis cochain.
    pub fn entry(&self, i: usize) -> (usize, usize) {
        let g = self.entries[i] as usize;
        (g / self.dim, g % self.dim)
    }

    /// Canonical basis cochain number `i`.
    pub fn basis_cochain(&self, i: usize) -> Cochain {
        let (t, e) = self.entry(i);
        let mut c = Cochain::zero(self.dim, self.m);
        c.values[t] = 1 << e;
        c
    }

    pub fn to_cochain(&self, v: &F2Vector) -> Cochain {
        assert_eq!(v.len(), self.len());
        let mut c = Cochain::zero(self.dim, self.m);
        for i in v.ones() {
            let (t, e) = self.entry(i);
            c.values[t] ^= 1 << e;
        }
        c
    }

    /// Coordinates of `c` in this space, or `None` if `c` has entries outside it.
    pub fn coordinates(&self, c: &Cochain) -> Option<F2Vector> {
        if c.m != self.m {
            return None;
        }
        let mut v = F2Vector::zeros(self.len());
        for (t, &mask) in c.values.iter().enumerate() {
            for e in ones(mask) {
                v.set(self.position(t * self.dim + e)?, true);
            }
        }
        Some(v)
    }
}

/// A Hochschild chain in `CH_k(A, A) = A^{⊗(k+1)}`, dense over basis tensors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Chain {
    dim: usize,
    degree: usize,
    values: F2Vector,
}

impl Chain {
    pub fn zero(dim: usize, degree: usize) -> Self {
        Self {
            dim,
            degree,
            values: F2Vector::zeros(dim.pow(degree as u32 + 1)),
        }
    }

    pub fn basis(dim: usize, tensor: &[usize]) -> Self {
        assert!(!tensor.is_empty());
        let mut c = Self::zero(dim, tensor.len() - 1);
        c.toggle(tensor);
        c
    }

    pub fn from_values(dim: usize, degree: usize, values: F2Vector) -> Self {
        assert_eq!(values.len(), dim.pow(degree as u32 + 1));
        Self {
            dim,
            degree,
            values,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn values(&self) -> &F2Vector {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_zero()
    }

    #[inline]
    pub fn toggle(&mut self, tensor: &[usize]) {
        debug_assert_eq!(tensor.len(), self.degree + 1);
        let i = tuple_index(self.dim, tensor);
        self.values.flip(i);
    }

    /// Toggles every tensor obtained by expanding mask-valued slots.
    pub fn toggle_masks(&mut self, slots: &[u32]) {
        let mut tensor = vec![0; slots.len()];
        self.expand_into(slots, 0, &mut tensor);
    }

    fn expand_into(&mut self, slots: &[u32], k: usize, tensor: &mut [usize]) {
        if k == slots.len() {
            self.toggle(tensor);
            return;
        }
        for e in ones(slots[k]) {
            tensor[k] = e;
            self.expand_into(slots, k + 1, tensor);
        }
    }

    /// Basis tensors present in the chain.
    pub fn tensors(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        let len = self.degree + 1;
        self.values.ones().map(move |i| {
            let mut t = vec![0; len];
            tuple_digits(self.dim, i, &mut t);
            t
        })
    }

    pub fn add_assign(&mut self, other: &Chain) {
        assert_eq!((self.dim, self.degree), (other.dim, other.degree));
        self.values.xor_assign(&other.values);
    }
}
