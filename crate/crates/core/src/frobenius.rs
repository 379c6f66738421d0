//! Graded Frobenius algebras over F2: the mod-2 cohomology rings of spheres
//! and projective spaces together with their intersection pairings.
//!
//! Cohomology is graded in nonpositive degrees, so the generator of
//! `H*(KP^n)` sits in degree `-d` and the top class in degree `-dim M`.
//! Elements are handled as bit masks over the basis (at most 32 basis
//! elements), which is what the cochain code consumes in its inner loops.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::f2::{self, F2Matrix, F2Vector};
use crate::hochschild::Cochain;

/// Largest supported algebra dimension (elements are `u32` masks).
pub const MAX_DIM: usize = 32;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FrobeniusError {
    #[error("unsupported manifold {0}")]
    Unsupported(String),
    #[error("cannot parse manifold name {0:?} (expected S<k>, RP<n>, CP<n> or HP<n>)")]
    Parse(String),
    #[error("algebra dimension {0} exceeds the supported maximum of {MAX_DIM}")]
    TooLarge(usize),
    #[error("malformed algebra table: {0}")]
    Table(String),
    #[error("pairing is degenerate")]
    DegeneratePairing,
    #[error("functional has {got} coordinates, expected {expected}")]
    FunctionalLength { expected: usize, got: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    Sphere,
    RealProj,
    ComplexProj,
    QuatProj,
}

/// A sphere `S^k` or a projective space `KP^n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ManifoldSpec {
    family: Family,
    parameter: u32,
}

impl ManifoldSpec {
    pub fn new(family: Family, parameter: u32) -> Result<Self, FrobeniusError> {
        let spec = Self { family, parameter };
        match family {
            Family::Sphere if parameter < 2 => Err(FrobeniusError::Unsupported(spec.name())),
            Family::RealProj if parameter < 2 => Err(FrobeniusError::Unsupported(spec.name())),
            _ if parameter == 0 => Err(FrobeniusError::Unsupported(spec.name())),
            _ => Ok(spec),
        }
    }

    pub fn sphere(k: u32) -> Result<Self, FrobeniusError> {
        Self::new(Family::Sphere, k)
    }

    pub fn real_proj(n: u32) -> Result<Self, FrobeniusError> {
        Self::new(Family::RealProj, n)
    }

    pub fn complex_proj(n: u32) -> Result<Self, FrobeniusError> {
        Self::new(Family::ComplexProj, n)
    }

    pub fn quat_proj(n: u32) -> Result<Self, FrobeniusError> {
        Self::new(Family::QuatProj, n)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// `k` for spheres, `n` for projective spaces.
    pub fn parameter(&self) -> u32 {
        self.parameter
    }

    pub fn is_sphere(&self) -> bool {
        self.family == Family::Sphere
    }

    /// Real dimension of the division algebra (`None` for spheres).
    pub fn division_dim(&self) -> Option<i32> {
        match self.family {
            Family::Sphere => None,
            Family::RealProj => Some(1),
            Family::ComplexProj => Some(2),
            Family::QuatProj => Some(4),
        }
    }

    /// Minus the degree of the algebra generator `x`: `k` for `S^k`, `d` for `KP^n`.
    pub fn generator_degree(&self) -> i32 {
        self.division_dim().unwrap_or(self.parameter as i32)
    }

    /// Largest power of `x` that is nonzero in cohomology.
    pub fn top_power(&self) -> usize {
        match self.family {
            Family::Sphere => 1,
            _ => self.parameter as usize,
        }
    }

    pub fn dim_m(&self) -> i32 {
        self.generator_degree() * self.top_power() as i32
    }

    pub fn name(&self) -> String {
        let prefix = match self.family {
            Family::Sphere => "S",
            Family::RealProj => "RP",
            Family::ComplexProj => "CP",
            Family::QuatProj => "HP",
        };
        format!("{prefix}{}", self.parameter)
    }

    /// Every manifold covered by the closed-form series: `S^2..S^6`,
    /// `RP^2..RP^7`, `CP^1..CP^5`, `HP^1..HP^3`.
    pub fn catalogue() -> Vec<ManifoldSpec> {
        let mut out = Vec::new();
        out.extend((2..=6).map(|k| Self::sphere(k).unwrap()));
        out.extend((2..=7).map(|n| Self::real_proj(n).unwrap()));
        out.extend((1..=5).map(|n| Self::complex_proj(n).unwrap()));
        out.extend((1..=3).map(|n| Self::quat_proj(n).unwrap()));
        out
    }
}

impl fmt::Display for ManifoldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for ManifoldSpec {
    type Err = FrobeniusError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let (family, digits) = if let Some(r) = t.strip_prefix("RP") {
            (Family::RealProj, r)
        } else if let Some(r) = t.strip_prefix("CP") {
            (Family::ComplexProj, r)
        } else if let Some(r) = t.strip_prefix("HP") {
            (Family::QuatProj, r)
        } else if let Some(r) = t.strip_prefix('S') {
            (Family::Sphere, r)
        } else {
            return Err(FrobeniusError::Parse(s.to_string()));
        };
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(FrobeniusError::Parse(s.to_string()));
        }
        let parameter: u32 = digits
            .parse()
            .map_err(|_| FrobeniusError::Parse(s.to_string()))?;
        ManifoldSpec::new(family, parameter)
    }
}

/// A finite-dimensional graded algebra with a bilinear pairing.
///
/// The pairing is not required to be a Frobenius form at construction time,
/// so that defective algebras can be built and rejected by
/// [`check_frobenius`].
#[derive(Clone, Debug)]
pub struct FrobeniusAlgebra {
    name: String,
    basis_names: Vec<String>,
    degrees: Vec<i32>,
    /// `mult[i][j]` is the mask of `e_i * e_j`.
    mult: Vec<Vec<u32>>,
    unit: usize,
    pairing: F2Matrix,
    /// `pairing_masks[c]` is the mask of basis elements `e` with `<e_c, e> = 1`.
    pairing_masks: Vec<u32>,
    /// Columns of the inverse pairing matrix, when it exists.
    inverse_columns: Option<Vec<u32>>,
    dim_m: i32,
    monogenic: Option<MonogenicData>,
}

/// Data of an algebra of the form `F2[x]/x^N` with basis `1, x, ..., x^{N-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MonogenicData {
    /// `N`: number of basis elements.
    pub truncation: usize,
    /// Minus the degree of `x`.
    pub generator_degree: i32,
}

impl FrobeniusAlgebra {
    /// Generic constructor from tables. `products` lists triples `(i, j, k)`
    /// meaning `e_k` occurs in `e_i e_j`; `pairing` lists the pairs with
    /// `<e_i, e_j> = 1`.
    pub fn from_tables(
        name: &str,
        basis_names: Vec<String>,
        degrees: Vec<i32>,
        products: &[(usize, usize, usize)],
        unit: usize,
        pairing: &[(usize, usize)],
        dim_m: i32,
    ) -> Result<Self, FrobeniusError> {
        let n = basis_names.len();
        if n > MAX_DIM {
            return Err(FrobeniusError::TooLarge(n));
        }
        if degrees.len() != n || unit >= n {
            return Err(FrobeniusError::Table(
                "degree list or unit index inconsistent with basis".into(),
            ));
        }
        let mut mult = vec![vec![0u32; n]; n];
        for &(i, j, k) in products {
            if i >= n || j >= n || k >= n {
                return Err(FrobeniusError::Table(format!(
                    "product triple ({i}, {j}, {k}) out of range"
                )));
            }
            mult[i][j] ^= 1 << k;
        }
        let mut p = F2Matrix::zeros(n, n);
        for &(i, j) in pairing {
            if i >= n || j >= n {
                return Err(FrobeniusError::Table(format!(
                    "pairing entry ({i}, {j}) out of range"
                )));
            }
            p.flip(i, j);
        }
        Ok(Self::assemble(
            name.to_string(),
            basis_names,
            degrees,
            mult,
            unit,
            p,
            dim_m,
        ))
    }

    fn assemble(
        name: String,
        basis_names: Vec<String>,
        degrees: Vec<i32>,
        mult: Vec<Vec<u32>>,
        unit: usize,
        pairing: F2Matrix,
        dim_m: i32,
    ) -> Self {
        let n = basis_names.len();
        let pairing_masks = (0..n)
            .map(|c| (0..n).filter(|&e| pairing.get(c, e)).fold(0, |m, e| m | 1 << e))
            .collect();
        let inverse_columns = invert(&pairing).map(|inv| {
            (0..n)
                .map(|b| (0..n).filter(|&o| inv.get(o, b)).fold(0, |m, o| m | 1 << o))
                .collect()
        });
        let mut alg = Self {
            name,
            basis_names,
            degrees,
            mult,
            unit,
            pairing,
            pairing_masks,
            inverse_columns,
            dim_m,
            monogenic: None,
        };
        alg.monogenic = alg.detect_monogenic();
        alg
    }

    fn detect_monogenic(&self) -> Option<MonogenicData> {
        let n = self.dim();
        if self.unit != 0 || n < 2 {
            return None;
        }
        let g = -self.degrees[1];
        for i in 0..n {
            if self.degrees[i] != -(i as i32) * g {
                return None;
            }
            for j in 0..n {
                let expect = if i + j < n { 1u32 << (i + j) } else { 0 };
                if self.mult[i][j] != expect {
                    return None;
                }
            }
        }
        Some(MonogenicData {
            truncation: n,
            generator_degree: g,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.basis_names.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    #[inline]
    pub fn degree(&self, i: usize) -> i32 {
        self.degrees[i]
    }

    pub fn degrees(&self) -> &[i32] {
        &self.degrees
    }

    #[inline]
    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn dim_m(&self) -> i32 {
        self.dim_m
    }

    pub fn pairing(&self) -> &F2Matrix {
        &self.pairing
    }

    pub fn monogenic(&self) -> Option<MonogenicData> {
        self.monogenic
    }

    #[inline]
    pub fn mul_basis(&self, i: usize, j: usize) -> u32 {
        self.mult[i][j]
    }

    /// Product of two elements given as masks.
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        let mut out = 0;
        for i in ones(a) {
            for j in ones(b) {
                out ^= self.mult[i][j];
            }
        }
        out
    }

    #[inline]
    pub fn pair_basis(&self, i: usize, j: usize) -> bool {
        self.pairing.get(i, j)
    }

    /// `<a, b>` for masks.
    #[inline]
    pub fn pair(&self, a: u32, b: u32) -> bool {
        let mut acc = 0u32;
        for i in ones(a) {
            acc ^= (self.pairing_masks[i] & b).count_ones();
        }
        acc & 1 == 1
    }

    /// Mask of basis elements `e` with `<e_c, e> = 1`.
    #[inline]
    pub fn pairing_mask(&self, c: usize) -> u32 {
        self.pairing_masks[c]
    }

    /// Columns of the inverse pairing: the element `g` with `<e_b, g> = delta_{b c}`
    /// is `inverse_columns()[c]`.
    pub fn inverse_columns(&self) -> Result<&[u32], FrobeniusError> {
        self.inverse_columns
            .as_deref()
            .ok_or(FrobeniusError::DegeneratePairing)
    }

    /// Degree of a homogeneous mask, `None` for zero or inhomogeneous masks.
    pub fn mask_degree(&self, mask: u32) -> Option<i32> {
        let mut it = ones(mask).map(|i| self.degrees[i]);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn element_name(&self, mask: u32) -> String {
        if mask == 0 {
            return "0".into();
        }
        ones(mask)
            .map(|i| self.basis_names[i].as_str())
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// A copy of this algebra with a replaced pairing (used to plant defects).
    pub fn with_pairing(&self, name: &str, pairing: &[(usize, usize)]) -> Self {
        let n = self.dim();
        let mut p = F2Matrix::zeros(n, n);
        for &(i, j) in pairing {
            p.flip(i, j);
        }
        Self::assemble(
            name.to_string(),
            self.basis_names.clone(),
            self.degrees.clone(),
            self.mult.clone(),
            self.unit,
            p,
            self.dim_m,
        )
    }

    pub fn record(&self) -> AlgebraRecord {
        let n = self.dim();
        let mut products = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in ones(self.mult[i][j]) {
                    products.push([i, j, k]);
                }
            }
        }
        let pairing = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.pairing.get(i, j))
            .map(|(i, j)| [i, j])
            .collect();
        AlgebraRecord {
            name: self.name.clone(),
            basis: self.basis_names.clone(),
            degrees: self.degrees.clone(),
            unit: self.unit,
            products,
            pairing,
            dim_m: self.dim_m,
        }
    }
}

/// Iterator over set bit positions of a mask.
#[inline]
pub fn ones(mask: u32) -> impl Iterator<Item = usize> {
    let mut m = mask;
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(b)
        }
    })
}

fn invert(p: &F2Matrix) -> Option<F2Matrix> {
    let n = p.rows();
    let cols: Vec<F2Vector> = (0..n)
        .map(|c| f2::solve(p, &F2Vector::unit(n, c)))
        .collect::<Option<_>>()?;
    Some(F2Matrix::from_columns(n, &cols))
}

/// Serializable description of an algebra.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct AlgebraRecord {
    pub name: String,
    pub basis: Vec<String>,
    pub degrees: Vec<i32>,
    pub unit: usize,
    /// `[i, j, k]`: `e_k` occurs in `e_i e_j`.
    pub products: Vec<[usize; 3]>,
    /// `[i, j]`: `<e_i, e_j> = 1`.
    pub pairing: Vec<[usize; 2]>,
    pub dim_m: i32,
}

impl AlgebraRecord {
    pub fn to_text(&self) -> String {
        let mut s = format!("algebra {}\n", self.name);
        s += &format!("dim_m {}\n", self.dim_m);
        for (i, (b, d)) in self.basis.iter().zip(&self.degrees).enumerate() {
            s += &format!("basis {i} {b} degree {d}\n");
        }
        s += &format!("unit {}\n", self.unit);
        for [i, j, k] in &self.products {
            s += &format!(
                "mult {} * {} -> {}\n",
                self.basis[*i], self.basis[*j], self.basis[*k]
            );
        }
        for [i, j] in &self.pairing {
            s += &format!("pair <{}, {}> = 1\n", self.basis[*i], self.basis[*j]);
        }
        s
    }
}

/// `H*(M; F2)` with the cup product and intersection pairing.
pub fn make_algebra(spec: &ManifoldSpec) -> FrobeniusAlgebra {
    let n = spec.top_power();
    let g = spec.generator_degree();
    let names = (0..=n)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "x".to_string(),
            _ => format!("x^{i}"),
        })
        .collect();
    let degrees = (0..=n).map(|i| -(i as i32) * g).collect();
    let mut mult = vec![vec![0u32; n + 1]; n + 1];
    let mut pairing = F2Matrix::zeros(n + 1, n + 1);
    for i in 0..=n {
        for j in 0..=n {
            if i + j <= n {
                mult[i][j] = 1 << (i + j);
            }
            if i + j == n {
                pairing.set(i, j, true);
            }
        }
    }
    FrobeniusAlgebra::assemble(spec.name(), names, degrees, mult, 0, pairing, spec.dim_m())
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    /// First violating basis indices, when the check failed.
    pub witness: Option<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct FrobeniusReport {
    pub algebra: String,
    pub checks: Vec<CheckOutcome>,
}

impl FrobeniusReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn outcome(name: &'static str, witness: Option<Vec<usize>>) -> CheckOutcome {
    CheckOutcome {
        name,
        passed: witness.is_none(),
        witness,
    }
}

/// Checks associativity, unitality, symmetry, invariance, nondegeneracy and
/// degree compatibility of the pairing.
pub fn check_frobenius(a: &FrobeniusAlgebra) -> FrobeniusReport {
    let n = a.dim();
    let idx = || (0..n).flat_map(move |i| (0..n).map(move |j| (i, j)));

    let assoc = idx()
        .flat_map(|(i, j)| (0..n).map(move |k| (i, j, k)))
        .find(|&(i, j, k)| a.mul(a.mul_basis(i, j), 1 << k) != a.mul(1 << i, a.mul_basis(j, k)))
        .map(|(i, j, k)| vec![i, j, k]);

    let unital = (0..n)
        .find(|&i| a.mul_basis(a.unit, i) != 1 << i || a.mul_basis(i, a.unit) != 1 << i)
        .map(|i| vec![i]);

    let symmetric = idx()
        .find(|&(i, j)| a.pair_basis(i, j) != a.pair_basis(j, i))
        .map(|(i, j)| vec![i, j]);

    let invariant = idx()
        .flat_map(|(i, j)| (0..n).map(move |k| (i, j, k)))
        .find(|&(i, j, k)| a.pair(a.mul_basis(i, j), 1 << k) != a.pair(1 << i, a.mul_basis(j, k)))
        .map(|(i, j, k)| vec![i, j, k]);

    let nondegenerate = if f2::rank(a.pairing()) == n {
        None
    } else {
        Some(vec![f2::rank(a.pairing())])
    };

    let degrees = idx()
        .find(|&(i, j)| a.pair_basis(i, j) && a.degree(i) + a.degree(j) != -a.dim_m())
        .map(|(i, j)| vec![i, j]);

    FrobeniusReport {
        algebra: a.name().to_string(),
        checks: vec![
            outcome("associativity", assoc),
            outcome("unitality", unital),
            outcome("symmetry", symmetric),
            outcome("invariance", invariant),
            outcome("nondegeneracy", nondegenerate),
            outcome("degree_compatibility", degrees),
        ],
    }
}

/// A linear functional on `A^{⊗(m+1)}`, stored as its values on basis tensors
/// `(a_0, a_1, ..., a_m)` indexed in base `dim A` with `a_0` most significant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Functional {
    pub m: usize,
    pub values: F2Vector,
}

/// `f̃(a_0 ⊗ ... ⊗ a_m) = <a_0, f(a_1 ⊗ ... ⊗ a_m)>`.
pub fn tilde(a: &FrobeniusAlgebra, f: &Cochain) -> Functional {
    let n = a.dim();
    let block = f.values().len();
    let mut values = F2Vector::zeros(n * block);
    for a0 in 0..n {
        let pm = a.pairing_mask(a0);
        for (t, &v) in f.values().iter().enumerate() {
            if (pm & v).count_ones() & 1 == 1 {
                values.set(a0 * block + t, true);
            }
        }
    }
    Functional { m: f.m(), values }
}

/// The unique cochain whose tilde is `g`.
pub fn untilde(a: &FrobeniusAlgebra, g: &Functional) -> Result<Cochain, FrobeniusError> {
    let n = a.dim();
    let block = n.pow(g.m as u32);
    if g.values.len() != n * block {
        return Err(FrobeniusError::FunctionalLength {
            expected: n * block,
            got: g.values.len(),
        });
    }
    let inv = a.inverse_columns()?;
    let mut out = vec![0u32; block];
    for a0 in 0..n {
        for (t, o) in out.iter_mut().enumerate() {
            if g.values.get(a0 * block + t) {
                *o ^= inv[a0];
            }
        }
    }
    Ok(Cochain::from_values(n, g.m, out))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_names() {
        assert_eq!("S2".parse::<ManifoldSpec>().unwrap(), ManifoldSpec::sphere(2).unwrap());
        assert_eq!("HP3".parse::<ManifoldSpec>().unwrap().dim_m(), 12);
        assert!(matches!(
            "RP1".parse::<ManifoldSpec>(),
            Err(FrobeniusError::Unsupported(_))
        ));
        assert!(matches!(
            "S1".parse::<ManifoldSpec>(),
            Err(FrobeniusError::Unsupported(_))
        ));
        assert!(matches!("T2".parse::<ManifoldSpec>(), Err(FrobeniusError::Parse(_))));
        assert!(matches!("CP".parse::<ManifoldSpec>(), Err(FrobeniusError::Parse(_))));
    }

    #[test]
    fn sphere_s2_table() {
        let a = make_algebra(&ManifoldSpec::sphere(2).unwrap());
        assert_eq!(a.dim(), 2);
        assert_eq!(a.degrees(), &[0, -2]);
        assert!(a.pair_basis(0, 1) && a.pair_basis(1, 0));
        assert!(!a.pair_basis(0, 0) && !a.pair_basis(1, 1));
    }

    #[test]
    fn rp2_table() {
        let a = make_algebra(&ManifoldSpec::real_proj(2).unwrap());
        assert_eq!(a.dim(), 3);
        assert_eq!(a.degrees(), &[0, -1, -2]);
        assert!(a.pair_basis(1, 1));
    }

    #[test]
    fn cp1_is_s2() {
        let cp1 = make_algebra(&ManifoldSpec::complex_proj(1).unwrap()).record();
        let s2 = make_algebra(&ManifoldSpec::sphere(2).unwrap()).record();
        assert_eq!(
            (cp1.basis, cp1.degrees, cp1.products, cp1.pairing),
            (s2.basis, s2.degrees, s2.products, s2.pairing)
        );
    }

    #[test]
    fn built_ins_pass_all_checks() {
        for spec in ManifoldSpec::catalogue() {
            let r = check_frobenius(&make_algebra(&spec));
            assert!(r.all_pass(), "{spec}: {r:?}");
        }
    }

    #[test]
    fn zero_pairing_fails_nondegeneracy() {
        let a = make_algebra(&ManifoldSpec::sphere(3).unwrap()).with_pairing("zero", &[]);
        let r = check_frobenius(&a);
        assert!(!r.get("nondegeneracy").unwrap().passed);
        assert!(r.get("associativity").unwrap().passed);
    }

    #[test]
    fn planted_noninvariant_pairing_fails_invariance() {
        // <x^2, x^2> = 1 breaks <x * x, x^2> = <x, x * x^2>
        let a = make_algebra(&ManifoldSpec::real_proj(2).unwrap())
            .with_pairing("planted", &[(0, 2), (2, 0), (1, 1), (2, 2)]);
        let r = check_frobenius(&a);
        assert!(!r.get("invariance").unwrap().passed);
        assert!(r.get("nondegeneracy").unwrap().passed);
    }

    #[test]
    fn tilde_of_unit_on_s2() {
        let a = make_algebra(&ManifoldSpec::sphere(2).unwrap());
        let one = Cochain::from_values(2, 0, vec![1]);
        let g = tilde(&a, &one);
        assert_eq!(g.values.to_bits(), vec![0, 1]);
        let zero = Cochain::zero(2, 0);
        assert!(tilde(&a, &zero).values.is_zero());
    }

    #[test]
    fn tilde_of_ubar_on_rp2() {
        let a = make_algebra(&ManifoldSpec::real_proj(2).unwrap());
        // x^m -> m x^m
        let u = Cochain::from_values(3, 1, vec![0, 0b010, 0]);
        let g = tilde(&a, &u);
        // index (a0, a1) = a0 * 3 + a1; only (x, x) pairs to 1
        assert_eq!(g.values.ones().collect::<Vec<_>>(), vec![4]);
    }

    #[test]
    fn untilde_examples() {
        let a = make_algebra(&ManifoldSpec::sphere(2).unwrap());
        let g = Functional {
            m: 0,
            values: F2Vector::from_bits(&[1, 0]),
        };
        // <a0, f> = [a0 = 1] forces f = x
        assert_eq!(untilde(&a, &g).unwrap().values(), &[0b10]);
        let zero = Functional {
            m: 2,
            values: F2Vector::zeros(8),
        };
        assert!(untilde(&a, &zero).unwrap().is_zero());
    }
}
