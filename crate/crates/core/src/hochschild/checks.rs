//! Structural checks on the cochain level: the bicomplex identities,
//! adjointness under the pairing, the BV identity on cohomology, and the
//! location of the ring generators.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::frobenius::{FrobeniusAlgebra, ManifoldSpec};

use super::bar::BarModel;
use super::cochain::{tuple_digits, Chain, Cochain};
use super::ops::{self, SparseOp};
use super::HochschildError;

/// Outcome of one family of checks.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    pub cases: usize,
    pub violations: Vec<String>,
}

impl CheckReport {
    pub fn named(name: &str) -> Self {
        Self {
            name: name.to_string(),
            cases: 0,
            violations: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.violations.push(what());
        }
    }
}

/// How much of the cochain complex to cover.
#[derive(Clone, Copy, Debug)]
pub struct CheckScope {
    /// Every cochain of Hochschild degree `<= exhaustive_max_m` (via operator matrices).
    pub exhaustive_max_m: Option<usize>,
    pub samples: usize,
    pub sample_max_m: usize,
    pub seed: u64,
}

impl Default for CheckScope {
    fn default() -> Self {
        Self {
            exhaustive_max_m: Some(5),
            samples: 100,
            sample_max_m: 7,
            seed: 0x5eed,
        }
    }
}

pub fn random_cochain(rng: &mut impl Rng, dim: usize, m: usize) -> Cochain {
    let mask = if dim == 32 { u32::MAX } else { (1u32 << dim) - 1 };
    let values = (0..dim.pow(m as u32)).map(|_| rng.gen::<u32>() & mask).collect();
    Cochain::from_values(dim, m, values)
}

pub fn random_chain(rng: &mut impl Rng, dim: usize, degree: usize) -> Chain {
    let len = dim.pow(degree as u32 + 1);
    let mut z = Chain::zero(dim, degree);
    let mut t = vec![0; degree + 1];
    for i in 0..len {
        if rng.gen::<bool>() {
            tuple_digits(dim, i, &mut t);
            z.toggle(&t);
        }
    }
    z
}

/// `b̌² = 0`, `B̌² = 0` and `B̌b̌ + b̌B̌ = 0`.
pub fn bicomplex_check(a: &FrobeniusAlgebra, scope: CheckScope) -> Result<Vec<CheckReport>, HochschildError> {
    let mut dd = CheckReport::named("coboundary squared");
    let mut bb = CheckReport::named("connes squared");
    let mut anti = CheckReport::named("anticommutation");
    let describe = |op: &SparseOp, m: usize| {
        let row = op.first_nonzero_row().expect("nonzero");
        format!("m = {m}: nonzero entry in output row {row}")
    };
    if let Some(max_m) = scope.exhaustive_max_m {
        let d: Vec<SparseOp> = (0..=max_m + 1).map(|m| SparseOp::coboundary(a, m)).collect();
        let b: Vec<Option<SparseOp>> = (0..=max_m + 1)
            .map(|m| (m >= 1).then(|| SparseOp::connes(a, m)).transpose())
            .collect::<Result<_, _>>()?;
        for m in 0..=max_m {
            let op = d[m].then(&d[m + 1]);
            dd.record(op.is_zero(), || describe(&op, m));
            if m >= 2 {
                let op = b[m].as_ref().unwrap().then(b[m - 1].as_ref().unwrap());
                bb.record(op.is_zero(), || describe(&op, m));
            }
            let mut op = d[m].then(b[m + 1].as_ref().unwrap());
            if m >= 1 {
                op = op.add(&b[m].as_ref().unwrap().then(&d[m - 1]));
            }
            anti.record(op.is_zero(), || describe(&op, m));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(scope.seed);
    for i in 0..scope.samples {
        let m = i % (scope.sample_max_m + 1);
        let f = random_cochain(&mut rng, a.dim(), m);
        let df = ops::hochschild_d(a, &f);
        dd.record(ops::hochschild_d(a, &df).is_zero(), || format!("sample {i} (m = {m})"));
        let bf = ops::connes_b(a, &f)?;
        if let Some(bf) = &bf {
            if let Some(bbf) = ops::connes_b(a, bf)? {
                bb.record(bbf.is_zero(), || format!("sample {i} (m = {m})"));
            }
        }
        let mut sum = ops::connes_b(a, &df)?.expect("positive arity");
        if let Some(bf) = &bf {
            sum.add_assign(&ops::hochschild_d(a, bf));
        }
        anti.record(sum.is_zero(), || format!("sample {i} (m = {m})"));
    }
    Ok(vec![dd, bb, anti])
}

/// `<(b̌f)~, z> = <f~, b z>` and `<(B̌f)~, z> = <f~, B z>`.
pub fn duality_check(a: &FrobeniusAlgebra, scope: CheckScope) -> Result<Vec<CheckReport>, HochschildError> {
    let mut rb = CheckReport::named("coboundary adjoint");
    let mut rc = CheckReport::named("connes adjoint");
    let n = a.dim();
    if let Some(max_m) = scope.exhaustive_max_m {
        for m in 0..=max_m {
            let chains_up = basis_chains(n, m + 1);
            let b_images: Vec<Chain> = chains_up
                .iter()
                .map(|z| ops::chain_b(a, z).expect("positive degree"))
                .collect();
            let chains_down = if m >= 1 { basis_chains(n, m - 1) } else { Vec::new() };
            let big_b_images: Vec<Chain> = chains_down.iter().map(|z| ops::chain_big_b(a, z)).collect();
            for fi in 0..n.pow(m as u32) * n {
                let mut f = Cochain::zero(n, m);
                f.values_mut()[fi / n] = 1 << (fi % n);
                let df = ops::hochschild_d(a, &f);
                for (z, bz) in chains_up.iter().zip(&b_images) {
                    let ok = ops::evaluate_on_chain(a, &df, z) == ops::evaluate_on_chain(a, &f, bz);
                    rb.record(ok, || format!("m = {m}, basis cochain {fi}"));
                }
                if let Some(bf) = ops::connes_b(a, &f)? {
                    for (z, bz) in chains_down.iter().zip(&big_b_images) {
                        let ok = ops::evaluate_on_chain(a, &bf, z) == ops::evaluate_on_chain(a, &f, bz);
                        rc.record(ok, || format!("m = {m}, basis cochain {fi}"));
                    }
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(scope.seed);
    for i in 0..scope.samples {
        let m = i % (scope.sample_max_m + 1);
        let f = random_cochain(&mut rng, n, m);
        let z = random_chain(&mut rng, n, m + 1);
        let ok = ops::evaluate_on_chain(a, &ops::hochschild_d(a, &f), &z)
            == ops::evaluate_on_chain(a, &f, &ops::chain_b(a, &z).expect("positive degree"));
        rb.record(ok, || format!("sample {i} (m = {m})"));
        if let Some(bf) = ops::connes_b(a, &f)? {
            let z = random_chain(&mut rng, n, m - 1);
            let ok = ops::evaluate_on_chain(a, &bf, &z) == ops::evaluate_on_chain(a, &f, &ops::chain_big_b(a, &z));
            rc.record(ok, || format!("sample {i} (m = {m})"));
        }
    }
    Ok(vec![rb, rc])
}

fn basis_chains(n: usize, degree: usize) -> Vec<Chain> {
    let mut t = vec![0; degree + 1];
    (0..n.pow(degree as u32 + 1))
        .map(|i| {
            tuple_digits(n, i, &mut t);
            Chain::basis(n, &t)
        })
        .collect()
}

/// A class of `HH^*` given by a representative, with its bidegree.
#[derive(Clone, Debug)]
pub struct HhClass {
    pub m: usize,
    pub tdeg: i32,
    pub rep: Cochain,
    pub label: Option<String>,
}

/// All canonical classes with Hochschild degree `<= max_m`.
pub fn classes_up_to(model: &mut BarModel<'_>, max_m: usize) -> Result<Vec<HhClass>, HochschildError> {
    let a = model.algebra();
    let mut out = Vec::new();
    for m in 0..=max_m {
        for tdeg in tdeg_range(a, m) {
            let comp = model.component(m, tdeg)?;
            for i in 0..comp.dim() {
                out.push(HhClass {
                    m,
                    tdeg,
                    rep: comp.rep(i),
                    label: comp.label(i).map(str::to_string),
                });
            }
        }
    }
    Ok(out)
}

/// Topological degrees in which `CH^m` can be nonzero.
pub fn tdeg_range(a: &FrobeniusAlgebra, m: usize) -> std::ops::RangeInclusive<i32> {
    let lo = *a.degrees().iter().min().expect("nonempty basis");
    let hi = *a.degrees().iter().max().expect("nonempty basis");
    let m_i = m as i32;
    (lo - m_i * hi - m_i)..=(hi - m_i * lo - m_i)
}

/// `Δ(ab) = Δ(a) b + a Δ(b) + [a, b]` on all class pairs with `m_a, m_b <= max_m`.
pub fn bv_identity_check(model: &mut BarModel<'_>, max_m: usize) -> Result<CheckReport, HochschildError> {
    let a = model.algebra();
    let classes = classes_up_to(model, max_m)?;
    let mut report = CheckReport::named("bv identity");
    for (i, p) in classes.iter().enumerate() {
        for q in &classes[i..] {
            let m = p.m + q.m;
            if m == 0 {
                continue;
            }
            let mut sum = ops::connes_b(a, &ops::cup(a, &p.rep, &q.rep))?.expect("positive arity");
            if let Some(dp) = ops::connes_b(a, &p.rep)? {
                sum.add_assign(&ops::cup(a, &dp, &q.rep));
            }
            if let Some(dq) = ops::connes_b(a, &q.rep)? {
                sum.add_assign(&ops::cup(a, &p.rep, &dq));
            }
            sum.add_assign(&ops::bracket(a, &p.rep, &q.rep).expect("positive arity"));
            let coords = model.component(m - 1, p.tdeg + q.tdeg + 1)?.reduce(&sum)?;
            report.record(coords.is_zero(), || {
                format!(
                    "classes at (m, tdeg) = ({}, {}) and ({}, {})",
                    p.m, p.tdeg, q.m, q.tdeg
                )
            });
        }
    }
    Ok(report)
}

/// A located ring generator.
#[derive(Clone, Debug)]
pub struct Generator {
    pub name: &'static str,
    pub m: usize,
    pub tdeg: i32,
    pub rep: Cochain,
}

/// The explicit cochain `x^m ↦ m x^m` on `F2[x]/x^N`.
pub fn euler_cochain(a: &FrobeniusAlgebra) -> Result<Cochain, HochschildError> {
    let data = a.monogenic().ok_or(HochschildError::NotMonogenic)?;
    let values = (0..data.truncation).map(|i| if i % 2 == 1 { 1 << i } else { 0 }).collect();
    Ok(Cochain::from_values(a.dim(), 1, values))
}

/// Locates `x`, then `v` or `u`, then `t` (projective spaces only) as the
/// unique classes in their bidegrees.
pub fn locate_generators(model: &mut BarModel<'_>, spec: &ManifoldSpec) -> Result<Vec<Generator>, HochschildError> {
    let a = model.algebra();
    let g = spec.generator_degree();
    let mut out = vec![Generator {
        name: "x",
        m: 0,
        tdeg: -g,
        rep: Cochain::element(a.dim(), 0b10),
    }];
    let mut unique = |name: &'static str, m: usize, tdeg: i32| -> Result<Generator, HochschildError> {
        let comp = model.component(m, tdeg)?;
        if comp.dim() != 1 {
            return Err(HochschildError::MissingGenerator {
                name,
                m,
                tdeg,
                dim: comp.dim(),
            });
        }
        Ok(Generator {
            name,
            m,
            tdeg,
            rep: comp.rep(0),
        })
    };
    match spec.division_dim() {
        None => out.push(unique("v", 1, g - 1)?),
        Some(d) => {
            let n = spec.parameter() as i32;
            if n % 2 == 1 {
                out.push(unique("v", 1, d - 1)?);
            } else {
                out.push(unique("u", 1, -1)?);
            }
            out.push(unique("t", 2, d * (n + 1) - 2)?);
        }
    }
    Ok(out)
}

/// `B̌` of each located generator is a coboundary; for even projective
/// spaces this includes the explicit `x^m ↦ m x^m`.
pub fn generator_delta_check(model: &mut BarModel<'_>, spec: &ManifoldSpec) -> Result<CheckReport, HochschildError> {
    let a = model.algebra();
    let mut report = CheckReport::named("delta on generators");
    let mut reps: Vec<(String, usize, i32, Cochain)> = locate_generators(model, spec)?
        .into_iter()
        .map(|g| (g.name.to_string(), g.m, g.tdeg, g.rep))
        .collect();
    if spec.division_dim().is_some() && spec.parameter().is_multiple_of(2) {
        reps.push(("x^m -> m x^m".into(), 1, -1, euler_cochain(a)?));
    }
    for (name, m, tdeg, rep) in reps {
        match ops::connes_b(a, &rep)? {
            None => report.record(true, String::new),
            Some(image) => {
                let trivial = model.component(m - 1, tdeg + 1)?.is_trivial(&image)?;
                report.record(trivial, || format!("B̌({name}) is not a coboundary"));
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frobenius::make_algebra;

    fn alg(name: &str) -> FrobeniusAlgebra {
        make_algebra(&name.parse::<ManifoldSpec>().unwrap())
    }

    #[test]
    fn identities_hold_on_small_pieces() {
        let scope = CheckScope {
            exhaustive_max_m: Some(3),
            samples: 12,
            sample_max_m: 4,
            seed: 1,
        };
        for name in ["S2", "RP2"] {
            for r in bicomplex_check(&alg(name), scope).unwrap() {
                assert!(r.passed(), "{name}: {r:?}");
            }
            for r in duality_check(&alg(name), scope).unwrap() {
                assert!(r.passed(), "{name}: {r:?}");
            }
        }
    }

    #[test]
    fn planted_pairing_breaks_anticommutation() {
        let a = alg("RP2").with_pairing("RP2*", &[(0, 2), (2, 0), (1, 1), (2, 2)]);
        let scope = CheckScope {
            exhaustive_max_m: Some(2),
            samples: 0,
            sample_max_m: 0,
            seed: 0,
        };
        let reports = bicomplex_check(&a, scope).unwrap();
        assert!(!reports[2].passed());
    }

    #[test]
    fn euler_class_has_trivial_delta_on_rp2() {
        let a = alg("RP2");
        let u = euler_cochain(&a).unwrap();
        assert_eq!(u.values(), &[0, 2, 0]);
        // the only candidate term is <1, ū(x^2)> = 2
        assert!(ops::connes_b(&a, &u).unwrap().unwrap().is_zero());
    }
}
