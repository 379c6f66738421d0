//! Hochschild cohomology of a truncated polynomial algebra `F2[x]/x^N` via
//! its 2-periodic bimodule resolution
//!
//! ```text
//!   ... → A⊗A --σ--> A⊗A --(X+Y)--> A⊗A → A,   σ = Σ_l X^l Y^{N-1-l},
//! ```
//!
//! with comparison maps to and from the bar resolution. Cohomology classes
//! live in the small complex `Hom(P_m, A) = A`; the operator `Δ` is computed
//! by transporting a class to the bar complex, applying `B̌` there, and
//! pulling back. Everything is lazy, so high Hochschild degrees stay cheap.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap, HashSet};

use crate::f2::F2Matrix;
use crate::frobenius::{FrobeniusAlgebra, MonogenicData};

use super::cochain::CochainEval;
use super::ops::{ConnesDual, Frame};
use super::{HhModel, HochschildError};

/// Element of `A⊗A = F2[X,Y]/(X^N, Y^N)`: bit `i * N + j` is `X^i Y^j`.
pub type Bimod = u64;

/// The resolution and its comparison maps for one algebra.
pub struct Resolution<'a> {
    alg: &'a FrobeniusAlgebra,
    data: MonogenicData,
    /// `iota[m]`: terms `(a_0, a_1..a_m, a_{m+1})` of the image of `e_m` in the bar resolution.
    iota: RefCell<Vec<Vec<Vec<u8>>>>,
    psi: RefCell<HashMap<Vec<u8>, Bimod>>,
}

impl<'a> Resolution<'a> {
    pub fn new(alg: &'a FrobeniusAlgebra) -> Result<Self, HochschildError> {
        let data = alg.monogenic().ok_or(HochschildError::NotMonogenic)?;
        if data.truncation > 8 {
            return Err(HochschildError::TooLarge {
                m: 0,
                tdeg: 0,
                size: data.truncation,
                budget: 8,
            });
        }
        Ok(Self {
            alg,
            data,
            iota: RefCell::new(vec![vec![vec![0, 0]]]),
            psi: RefCell::new(HashMap::new()),
        })
    }

    pub fn truncation(&self) -> usize {
        self.data.truncation
    }

    #[inline]
    fn bit(&self, i: usize, j: usize) -> Bimod {
        1 << (i * self.data.truncation + j)
    }

    fn terms(&self, v: Bimod) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.data.truncation;
        (0..n * n).filter(move |b| v >> b & 1 == 1).map(move |b| (b / n, b % n))
    }

    /// The differential `d : P_m → P_{m-1}` is multiplication by this element.
    pub fn differential(&self, m: usize) -> Bimod {
        assert!(m >= 1);
        let n = self.data.truncation;
        if m % 2 == 1 {
            self.bit(1, 0) | self.bit(0, 1)
        } else {
            (0..n).fold(0, |acc, l| acc | self.bit(l, n - 1 - l))
        }
    }

    pub fn mul(&self, a: Bimod, b: Bimod) -> Bimod {
        let n = self.data.truncation;
        let mut out = 0;
        for (i1, j1) in self.terms(a) {
            for (i2, j2) in self.terms(b) {
                if i1 + i2 < n && j1 + j2 < n {
                    out ^= self.bit(i1 + i2, j1 + j2);
                }
            }
        }
        out
    }

    /// Contracting homotopy `h : P_k → P_{k+1}`.
    pub fn homotopy(&self, k: usize, v: Bimod) -> Bimod {
        let n = self.data.truncation;
        let mut out = 0;
        for (i, j) in self.terms(v) {
            if k.is_multiple_of(2) {
                for l in 0..i {
                    if i - 1 - l + j < n {
                        out ^= self.bit(l, i - 1 - l + j);
                    }
                }
            } else if i == n - 1 {
                out ^= self.bit(0, j);
            }
        }
        out
    }

    /// Total x-exponent carried by the generator `e_m`.
    pub fn weight(&self, m: usize) -> usize {
        let n = self.data.truncation;
        (m / 2) * n + m % 2
    }

    /// Terms of `ι(e_m)` in the bar resolution, as exponent tuples of length `m + 2`.
    pub fn iota(&self, m: usize) -> std::cell::Ref<'_, Vec<Vec<u8>>> {
        {
            let mut cache = self.iota.borrow_mut();
            let n = self.data.truncation as u8;
            while cache.len() <= m {
                let k = cache.len();
                let d = self.differential(k);
                let mut acc: HashSet<Vec<u8>> = HashSet::new();
                for (i, j) in self.terms(d) {
                    for t in &cache[k - 1] {
                        let (i, j) = (i as u8, j as u8);
                        let last = t.len() - 1;
                        if t[0] + i >= n || t[last] + j >= n {
                            continue;
                        }
                        let mut s = Vec::with_capacity(t.len() + 1);
                        s.push(0);
                        s.push(t[0] + i);
                        s.extend_from_slice(&t[1..last]);
                        s.push(t[last] + j);
                        if !acc.remove(&s) {
                            acc.insert(s);
                        }
                    }
                }
                let mut next: Vec<Vec<u8>> = acc.into_iter().collect();
                next.sort_unstable();
                cache.push(next);
            }
        }
        std::cell::Ref::map(self.iota.borrow(), |c| &c[m])
    }

    /// `ψ(1[t_1|..|t_m]1) ∈ P_m`.
    pub fn psi(&self, t: &[u8]) -> Bimod {
        if t.is_empty() {
            return self.bit(0, 0);
        }
        if let Some(&v) = self.psi.borrow().get(t) {
            return v;
        }
        let n = self.data.truncation as u8;
        let m = t.len();
        let mut y = self.mul(self.bit(t[0] as usize, 0), self.psi(&t[1..]));
        let mut merged = Vec::with_capacity(m - 1);
        for i in 0..m - 1 {
            let e = t[i] + t[i + 1];
            if e >= n {
                continue;
            }
            merged.clear();
            merged.extend_from_slice(&t[..i]);
            merged.push(e);
            merged.extend_from_slice(&t[i + 2..]);
            y ^= self.psi(&merged);
        }
        y ^= self.mul(self.psi(&t[..m - 1]), self.bit(0, t[m - 1] as usize));
        let v = self.homotopy(m - 1, y);
        self.psi.borrow_mut().insert(t.to_vec(), v);
        v
    }

    /// `x^i φ x^j` summed over the terms of a `P_m` element, with `φ(e_m) = x^k`.
    fn evaluate(&self, v: Bimod, k: usize) -> u32 {
        let n = self.data.truncation;
        let mut out = 0;
        for (i, j) in self.terms(v) {
            if i + j + k < n {
                out ^= 1 << (i + j + k);
            }
        }
        out
    }

    /// The bar cochain `φ ∘ ψ` for `φ(e_m) = x^k`.
    pub fn bar_cochain(&self, m: usize, k: usize) -> SmallClassCochain<'_, 'a> {
        SmallClassCochain { res: self, m, k }
    }

    /// Pulls a bar cochain of arity `m` back along `ι`: the value on `e_m`.
    pub fn pull_back(&self, g: &impl CochainEval) -> u32 {
        let m = g.arity();
        let iota = self.iota(m);
        let mut args = vec![0usize; m];
        let mut out = 0;
        for t in iota.iter() {
            for (slot, &e) in args.iter_mut().zip(&t[1..=m]) {
                *slot = e as usize;
            }
            let v = g.eval(&args);
            if v == 0 {
                continue;
            }
            let lhs = 1u32 << t[0];
            let rhs = 1u32 << t[m + 1];
            out ^= self.alg.mul(self.alg.mul(lhs, v), rhs);
        }
        out
    }

    /// `δ : Hom(P_m, A) → Hom(P_{m+1}, A)` is multiplication by this element of `A`.
    pub fn small_differential(&self, m: usize) -> u32 {
        self.evaluate(self.differential(m + 1), 0)
    }

    /// Internal shift of the small cochain `e_m ↦ x^k`.
    pub fn shift(&self, m: usize, k: usize) -> i32 {
        self.data.generator_degree * (self.weight(m) as i32 - k as i32)
    }

    /// The exponent `k` of the unique small cochain of bidegree `(m, tdeg)`.
    pub fn exponent(&self, m: usize, tdeg: i32) -> Option<usize> {
        let g = self.data.generator_degree;
        let num = self.weight(m) as i32 * g - (tdeg + m as i32);
        (num >= 0 && num % g == 0 && ((num / g) as usize) < self.data.truncation).then(|| (num / g) as usize)
    }

    fn is_cocycle(&self, m: usize, k: usize) -> bool {
        self.alg.mul(self.small_differential(m), 1 << k) == 0
    }

    fn is_coboundary(&self, m: usize, k: usize) -> bool {
        if m == 0 {
            return false;
        }
        let mu = self.small_differential(m - 1);
        (0..self.data.truncation).any(|j| self.alg.mul(mu, 1 << j) == 1 << k)
    }

    /// Exponent of the class spanning `HH^m` in degree `tdeg`, if nonzero.
    pub fn class(&self, m: usize, tdeg: i32) -> Option<usize> {
        let k = self.exponent(m, tdeg)?;
        (self.is_cocycle(m, k) && !self.is_coboundary(m, k)).then_some(k)
    }

    /// Largest Hochschild degree with a nonzero cochain in topological degree `tdeg`.
    pub fn max_hdeg(&self, tdeg: i32) -> Option<usize> {
        max_hdeg(self.data, tdeg)
    }
}

/// Largest `m` with `Hom(P_m, A)` nonzero in topological degree `tdeg`, for
/// `F2[x]/x^N`; `None` when there is no such `m`.
pub fn max_hdeg(data: MonogenicData, tdeg: i32) -> Option<usize> {
    let (n, g) = (data.truncation as i32, data.generator_degree);
    assert!(g * n > 2, "degree window is unbounded for F2[x]/x^2 with |x| = -1");
    // minimum over k of the topological degree of e_m ↦ x^k; grows by gN - 2 every two steps
    let min_tdeg = |m: i32| g * ((m / 2) * n + m % 2 - (n - 1)) - m;
    let mut last = None;
    let mut m = 0;
    while min_tdeg(m) <= tdeg || min_tdeg(m + 1) <= tdeg {
        if min_tdeg(m) <= tdeg {
            last = Some(m as usize);
        }
        m += 1;
    }
    last
}

/// The bar cochain `φ ∘ ψ`.
pub struct SmallClassCochain<'r, 'a> {
    res: &'r Resolution<'a>,
    m: usize,
    k: usize,
}

impl CochainEval for SmallClassCochain<'_, '_> {
    fn arity(&self) -> usize {
        self.m
    }

    fn eval(&self, args: &[usize]) -> u32 {
        let t: Vec<u8> = args.iter().map(|&a| a as u8).collect();
        self.res.evaluate(self.res.psi(&t), self.k)
    }
}

/// Resolution backend: every piece is at most one-dimensional.
pub struct ResolutionModel<'a> {
    res: Resolution<'a>,
    delta: BTreeMap<(usize, i32), bool>,
}

impl<'a> ResolutionModel<'a> {
    pub fn new(alg: &'a FrobeniusAlgebra) -> Result<Self, HochschildError> {
        Ok(Self {
            res: Resolution::new(alg)?,
            delta: BTreeMap::new(),
        })
    }

    pub fn resolution(&self) -> &Resolution<'a> {
        &self.res
    }

    /// Whether `Δ` is nonzero on the class in `(m, tdeg)`.
    pub fn delta_nonzero(&mut self, m: usize, tdeg: i32) -> Result<bool, HochschildError> {
        if let Some(&d) = self.delta.get(&(m, tdeg)) {
            return Ok(d);
        }
        let value = match (m, self.res.class(m, tdeg)) {
            (0, _) | (_, None) => false,
            (_, Some(k)) => match self.res.class(m - 1, tdeg + 1) {
                None => false,
                Some(target) => {
                    let f = self.res.bar_cochain(m, k);
                    let bf = ConnesDual::new(Frame::new(self.res.alg), &f)?;
                    let pulled = self.res.pull_back(&bf);
                    let expected = self.res.exponent(m - 1, tdeg + 1).expect("class exists");
                    debug_assert_eq!(expected, target);
                    let rest = pulled & !(1 << target);
                    if crate::frobenius::ones(rest).any(|k| !self.res.is_coboundary(m - 1, k)) {
                        return Err(HochschildError::NotCocycle { m: m - 1, tdeg: tdeg + 1 });
                    }
                    pulled >> target & 1 == 1
                }
            },
        };
        self.delta.insert((m, tdeg), value);
        Ok(value)
    }
}

impl HhModel for ResolutionModel<'_> {
    fn algebra(&self) -> &FrobeniusAlgebra {
        self.res.alg
    }

    fn class_count(&mut self, m: usize, tdeg: i32) -> Result<usize, HochschildError> {
        Ok(usize::from(self.res.class(m, tdeg).is_some()))
    }

    fn delta_matrix(&mut self, m: usize, tdeg: i32) -> Result<F2Matrix, HochschildError> {
        let cols = self.class_count(m, tdeg)?;
        if m == 0 {
            return Ok(F2Matrix::zeros(0, cols));
        }
        let rows = self.class_count(m - 1, tdeg + 1)?;
        let mut out = F2Matrix::zeros(rows, cols);
        if rows == 1 && cols == 1 && self.delta_nonzero(m, tdeg)? {
            out.set(0, 0, true);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frobenius::{make_algebra, ManifoldSpec};
    use crate::hochschild::cochain::Cochain;
    use crate::hochschild::ops::hochschild_d;

    fn alg(name: &str) -> FrobeniusAlgebra {
        make_algebra(&name.parse::<ManifoldSpec>().unwrap())
    }

    #[test]
    fn homotopy_contracts() {
        for name in ["RP3", "RP2", "CP2", "S2"] {
            let a = alg(name);
            let r = Resolution::new(&a).unwrap();
            let n = r.truncation();
            for k in 1..6 {
                for i in 0..n {
                    for j in 0..n {
                        let v = r.bit(i, j);
                        let dh = r.mul(r.differential(k + 1), r.homotopy(k, v));
                        let hd = r.homotopy(k - 1, r.mul(r.differential(k), v));
                        assert_eq!(dh ^ hd, v, "{name} k={k} ({i},{j})");
                    }
                }
            }
        }
    }

    #[test]
    fn psi_small_class_is_cocycle() {
        let a = alg("RP3");
        let r = Resolution::new(&a).unwrap();
        for m in 1..5 {
            for k in 0..4 {
                let tdeg = r.shift(m, k) - m as i32;
                if r.class(m, tdeg).is_none() {
                    continue;
                }
                let f = Cochain::from_eval(4, &r.bar_cochain(m, k));
                assert!(hochschild_d(&a, &f).is_zero(), "m={m} k={k}");
                assert_eq!(r.pull_back(&f), 1 << k);
            }
        }
    }

    #[test]
    fn iota_is_a_chain_map() {
        let a = alg("CP2");
        let r = Resolution::new(&a).unwrap();
        let n = r.truncation() as u8;
        for m in 1..6 {
            // d_bar ι(e_m) as a multiset of length-(m+1) tensors
            let mut lhs: HashSet<Vec<u8>> = HashSet::new();
            let toggle = |s: &mut HashSet<Vec<u8>>, t: Vec<u8>| {
                if !s.remove(&t) {
                    s.insert(t);
                }
            };
            for t in r.iota(m).iter() {
                for i in 0..=m {
                    if t[i] + t[i + 1] >= n {
                        continue;
                    }
                    let mut u = t[..i].to_vec();
                    u.push(t[i] + t[i + 1]);
                    u.extend_from_slice(&t[i + 2..]);
                    toggle(&mut lhs, u);
                }
            }
            let mut rhs: HashSet<Vec<u8>> = HashSet::new();
            let prev = r.iota(m - 1).clone();
            for (i, j) in r.terms(r.differential(m)) {
                for t in &prev {
                    let last = t.len() - 1;
                    if t[0] as usize + i >= n as usize || t[last] as usize + j >= n as usize {
                        continue;
                    }
                    let mut u = t.clone();
                    u[0] += i as u8;
                    u[last] += j as u8;
                    toggle(&mut rhs, u);
                }
            }
            assert_eq!(lhs, rhs, "m={m}");
        }
    }

    #[test]
    fn max_hdeg_bounds() {
        let a = alg("S2");
        let data = a.monogenic().unwrap();
        assert_eq!(max_hdeg(data, 10), Some(12));
        assert_eq!(max_hdeg(data, -2), Some(0));
        assert_eq!(max_hdeg(data, -3), None);
    }
}
