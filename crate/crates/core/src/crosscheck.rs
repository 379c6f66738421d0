//! Comparison of brute-force `HH^*` with the closed-form presentations:
//! dimensions, monomial labels through cup products of located generators,
//! `Δ`, and the bracket on generators.

use serde::Serialize;

use crate::bvring::{Element, Monomial, PresentedBVRing};
use crate::f2::F2Vector;
use crate::frobenius::ManifoldSpec;
use crate::hochschild::checks::{locate_generators, tdeg_range, CheckReport, Generator};
use crate::hochschild::{bracket, cup, BarModel, Cochain, HhModel, HochschildError};

/// One bigraded piece of `HH^*`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HhRow {
    pub m: usize,
    pub tdeg: i32,
    pub dim: usize,
    pub expected: usize,
    pub labels: Vec<String>,
}

/// A located generator together with its index in the presentation (`x`, `w`, `t`).
fn generator_index(g: &Generator) -> usize {
    match g.name {
        "x" => 0,
        "t" => 2,
        _ => 1,
    }
}

fn power(model: &BarModel<'_>, g: &Cochain, e: u32, acc: Cochain) -> Cochain {
    (0..e).fold(acc, |acc, _| cup(model.algebra(), &acc, g))
}

/// Brute-force model whose pieces up to `max_m` carry monomial labels.
pub struct LabelledHh<'a> {
    pub model: BarModel<'a>,
    pub ring: PresentedBVRing,
    pub generators: Vec<Generator>,
    pub max_m: usize,
}

impl<'a> LabelledHh<'a> {
    pub fn model(&mut self) -> &mut BarModel<'a> {
        &mut self.model
    }

    /// Representative `x^a ⌣ w^b ⌣ t^c`.
    pub fn monomial_cochain(&self, x: &Monomial) -> Cochain {
        let dim = self.model.algebra().dim();
        let mut exps = [x.a, x.b, x.c];
        let mut rep = Cochain::element(dim, 1);
        for g in &self.generators {
            let i = generator_index(g);
            rep = power(&self.model, &g.rep, exps[i], rep);
            exps[i] = 0;
        }
        rep
    }

    /// Coordinates of an element of the presentation in the labelled basis of `(m, tdeg)`.
    pub fn coordinates(&self, m: usize, tdeg: i32, e: &Element) -> F2Vector {
        let basis = self.ring.basis_at(m, tdeg);
        let mut v = F2Vector::zeros(basis.len());
        for t in e.terms() {
            let i = basis.iter().position(|b| b == t).expect("homogeneous element");
            v.flip(i);
        }
        v
    }
}

/// Compares dimensions with monomial counts for every `m <= max_m`.
pub fn hh_rows(model: &mut BarModel<'_>, ring: &PresentedBVRing, max_m: usize) -> Result<Vec<HhRow>, HochschildError> {
    let a = model.algebra();
    let mut rows = Vec::new();
    for m in 0..=max_m {
        for tdeg in tdeg_range(a, m) {
            let dim = model.class_count(m, tdeg)?;
            let basis = ring.basis_at(m, tdeg);
            if dim > 0 || !basis.is_empty() {
                rows.push(HhRow {
                    m,
                    tdeg,
                    dim,
                    expected: basis.len(),
                    labels: basis.iter().map(|x| ring.label(x)).collect(),
                });
            }
        }
    }
    Ok(rows)
}

pub fn hh_count_check(rows: &[HhRow]) -> CheckReport {
    let mut report = CheckReport::named("hh dimensions vs monomial counts");
    for r in rows {
        report.record(r.dim == r.expected, || {
            format!("(m, tdeg) = ({}, {}): {} classes, {} monomials", r.m, r.tdeg, r.dim, r.expected)
        });
    }
    report
}

/// Locates the generators and replaces each canonical basis up to `max_m`
/// by the cup monomials of the presentation.
pub fn label_classes<'a>(model: BarModel<'a>, spec: &ManifoldSpec, max_m: usize) -> Result<LabelledHh<'a>, HochschildError> {
    let mut model = model;
    let generators = locate_generators(&mut model, spec)?;
    let mut out = LabelledHh {
        model,
        ring: crate::bvring::make_presentation(spec),
        generators,
        max_m,
    };
    let a = out.model.algebra();
    for m in 0..=max_m {
        for tdeg in tdeg_range(a, m) {
            let basis = out.ring.basis_at(m, tdeg);
            if basis.is_empty() {
                continue;
            }
            let classes: Vec<(String, Cochain)> = basis
                .iter()
                .map(|x| (out.ring.label(x), out.monomial_cochain(x)))
                .collect();
            out.model.component_mut(m, tdeg)?.rebase(classes)?;
        }
    }
    Ok(out)
}

/// One row of the `Δ` table: brute force against the closed form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeltaRow {
    pub m: usize,
    pub tdeg: i32,
    pub class: String,
    pub brute_force: String,
    pub closed_form: String,
    pub agree: bool,
}

fn render(ring: &PresentedBVRing, basis: &[Monomial], v: &F2Vector) -> String {
    let terms: Vec<String> = v.ones().map(|i| ring.label(&basis[i])).collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

pub fn delta_table(h: &mut LabelledHh<'_>) -> Result<Vec<DeltaRow>, HochschildError> {
    let mut rows = Vec::new();
    let a = h.model.algebra();
    for m in 1..=h.max_m {
        for tdeg in tdeg_range(a, m) {
            let basis = h.ring.basis_at(m, tdeg);
            let target = h.ring.basis_at(m - 1, tdeg + 1);
            for (i, x) in basis.iter().enumerate() {
                let brute = h.model.delta_coords(m, tdeg, &F2Vector::unit(basis.len(), i))?;
                let closed = h.coordinates(m - 1, tdeg + 1, &h.ring.delta(x));
                rows.push(DeltaRow {
                    m,
                    tdeg,
                    class: h.ring.label(x),
                    brute_force: render(&h.ring, &target, &brute),
                    closed_form: render(&h.ring, &target, &closed),
                    agree: brute == closed,
                });
            }
        }
    }
    Ok(rows)
}

/// One row of the bracket table on generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BracketRow {
    pub left: String,
    pub right: String,
    pub brute_force: String,
    pub table: String,
    pub agree: bool,
}

pub fn bracket_table(h: &mut LabelledHh<'_>) -> Result<Vec<BracketRow>, HochschildError> {
    let a = h.model.algebra();
    let mut rows = Vec::new();
    let gens = h.generators.clone();
    for (i, g) in gens.iter().enumerate() {
        for k in &gens[i..] {
            let m = g.m + k.m;
            let expected = h.ring.generator_bracket(generator_index(g), generator_index(k));
            let (brute, table) = match bracket(a, &g.rep, &k.rep) {
                None => ("0".to_string(), h.ring.element_label(&expected)),
                Some(c) => {
                    let (tm, tt) = (m - 1, g.tdeg + k.tdeg + 1);
                    if tm > h.max_m {
                        return Err(HochschildError::OutsideComponent { m: tm, tdeg: tt });
                    }
                    let target = h.ring.basis_at(tm, tt);
                    let coords = h.model.component(tm, tt)?.reduce(&c)?;
                    let closed = h.coordinates(tm, tt, &expected);
                    (render(&h.ring, &target, &coords), render(&h.ring, &target, &closed))
                }
            };
            rows.push(BracketRow {
                left: g.name.to_string(),
                right: k.name.to_string(),
                agree: brute == table,
                brute_force: brute,
                table,
            });
        }
    }
    Ok(rows)
}

fn generator_monomial(g: &Generator) -> Monomial {
    let mut e = [0; 3];
    e[generator_index(g)] = 1;
    Monomial::new(e[0], e[1], e[2])
}

/// Cup products of generators, brute force against the relations of the presentation.
pub fn product_table(h: &mut LabelledHh<'_>) -> Result<Vec<BracketRow>, HochschildError> {
    let a = h.model.algebra();
    let mut rows = Vec::new();
    let gens = h.generators.clone();
    for (i, g) in gens.iter().enumerate() {
        for k in &gens[i..] {
            let (m, tdeg) = (g.m + k.m, g.tdeg + k.tdeg);
            if m > h.max_m {
                return Err(HochschildError::OutsideComponent { m, tdeg });
            }
            let expected = Element::from_option(h.ring.normal_form(&generator_monomial(g), &generator_monomial(k)));
            let target = h.ring.basis_at(m, tdeg);
            let coords = h.model.component(m, tdeg)?.reduce(&cup(a, &g.rep, &k.rep))?;
            let brute = render(&h.ring, &target, &coords);
            let table = render(&h.ring, &target, &h.coordinates(m, tdeg, &expected));
            rows.push(BracketRow {
                left: g.name.to_string(),
                right: k.name.to_string(),
                agree: brute == table,
                brute_force: brute,
                table,
            });
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frobenius::make_algebra;

    #[test]
    fn rp2_tables() {
        let spec: ManifoldSpec = "RP2".parse().unwrap();
        let a = make_algebra(&spec);
        let mut h = label_classes(BarModel::new(&a), &spec, 4).unwrap();
        let rows = delta_table(&mut h).unwrap();
        assert!(rows.iter().all(|r| r.agree), "{rows:?}");
        assert!(rows.iter().any(|r| r.class == "u t" && r.brute_force == "t"));
        let br = bracket_table(&mut h).unwrap();
        assert!(br.iter().all(|r| r.agree), "{br:?}");
        assert!(br.iter().any(|r| r.left == "x" && r.right == "u" && r.brute_force == "x"));
    }

    #[test]
    fn generator_products() {
        for (name, square) in [("RP3", "0"), ("CP1", "t"), ("RP2", "0"), ("S2", "v^2"), ("HP1", "t")] {
            let spec: ManifoldSpec = name.parse().unwrap();
            let a = make_algebra(&spec);
            let mut h = label_classes(BarModel::new(&a), &spec, 4).unwrap();
            let rows = product_table(&mut h).unwrap();
            assert!(rows.iter().all(|r| r.agree), "{name}: {rows:?}");
            let w = rows.iter().find(|r| r.left == r.right && r.left != "x" && r.left != "t").unwrap();
            assert_eq!(w.brute_force, square, "{name}: {w:?}");
        }
    }

    #[test]
    fn counts_on_s3() {
        let spec: ManifoldSpec = "S3".parse().unwrap();
        let a = make_algebra(&spec);
        let mut model = BarModel::new(&a);
        let rows = hh_rows(&mut model, &crate::bvring::make_presentation(&spec), 5).unwrap();
        assert!(hh_count_check(&rows).passed());
        for m in 0..=5 {
            assert_eq!(rows.iter().filter(|r| r.m == m).map(|r| r.dim).sum::<usize>(), 2);
        }
    }
}
