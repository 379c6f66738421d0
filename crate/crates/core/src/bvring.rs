//! Closed-form presentations of `HH^*` of spheres and projective spaces as
//! BV rings, with monomial normal forms, `Δ`, and the bracket.
//!
//! * spheres `S^k`: `F2[x, v]/(x^2)`;
//! * `KP^n`, `n` odd: `F2[x, v, t]/(x^{n+1}, v^2 - ((n+1)/2) t x^{n-1})`;
//! * `KP^n`, `n` even: `F2[x, u, t]/(x^{n+1}, u^2, t x^n, u x^n)`.
//!
//! Monomials are written `x^a w^b t^c` where `w` is `v` or `u`.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::frobenius::ManifoldSpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RingCase {
    Sphere,
    OddProj,
    EvenProj,
}

/// A generator with its topological and Hochschild degrees.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratorInfo {
    pub name: &'static str,
    pub tdeg: i32,
    pub hdeg: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Monomial {
    pub a: u32,
    pub b: u32,
    pub c: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { a: 0, b: 0, c: 0 };

    pub fn new(a: u32, b: u32, c: u32) -> Self {
        Self { a, b, c }
    }

    pub fn hdeg(&self) -> usize {
        (self.b + 2 * self.c) as usize
    }
}

/// An F2-linear combination of normal-form monomials.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Element(BTreeSet<Monomial>);

impl Element {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(m: Monomial) -> Self {
        Self(BTreeSet::from([m]))
    }

    pub fn from_option(m: Option<Monomial>) -> Self {
        m.map_or_else(Self::zero, Self::monomial)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = &Monomial> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn toggle(&mut self, m: Monomial) {
        if !self.0.remove(&m) {
            self.0.insert(m);
        }
    }

    pub fn add_assign(&mut self, other: &Element) {
        for &m in &other.0 {
            self.toggle(m);
        }
    }

    pub fn sum(mut self, other: &Element) -> Element {
        self.add_assign(other);
        self
    }

    /// The single monomial if the element is one.
    pub fn as_monomial(&self) -> Option<Monomial> {
        (self.0.len() == 1).then(|| *self.0.iter().next().expect("one term"))
    }
}

/// One of the three presented BV rings.
#[derive(Clone, Debug, Serialize)]
pub struct PresentedBVRing {
    pub manifold: String,
    pub case: RingCase,
    /// Largest power of `x` that is nonzero.
    pub top: u32,
    pub x: GeneratorInfo,
    /// `v` or `u`.
    pub w: GeneratorInfo,
    pub t: Option<GeneratorInfo>,
    /// Coefficient of `t x^{n-1}` in `v^2` (odd projective case).
    pub v_square: bool,
    pub dim_m: i32,
}

pub fn make_presentation(spec: &ManifoldSpec) -> PresentedBVRing {
    let g = spec.generator_degree();
    let x = GeneratorInfo {
        name: "x",
        tdeg: -g,
        hdeg: 0,
    };
    match spec.division_dim() {
        None => PresentedBVRing {
            manifold: spec.name(),
            case: RingCase::Sphere,
            top: 1,
            x,
            w: GeneratorInfo {
                name: "v",
                tdeg: g - 1,
                hdeg: 1,
            },
            t: None,
            v_square: false,
            dim_m: spec.dim_m(),
        },
        Some(d) => {
            let n = spec.parameter();
            let odd = n % 2 == 1;
            PresentedBVRing {
                manifold: spec.name(),
                case: if odd { RingCase::OddProj } else { RingCase::EvenProj },
                top: n,
                x,
                w: if odd {
                    GeneratorInfo {
                        name: "v",
                        tdeg: d - 1,
                        hdeg: 1,
                    }
                } else {
                    GeneratorInfo {
                        name: "u",
                        tdeg: -1,
                        hdeg: 1,
                    }
                },
                t: Some(GeneratorInfo {
                    name: "t",
                    tdeg: d * (n as i32 + 1) - 2,
                    hdeg: 2,
                }),
                v_square: odd && n.div_ceil(2) % 2 == 1,
                dim_m: spec.dim_m(),
            }
        }
    }
}

impl PresentedBVRing {
    pub fn generators(&self) -> Vec<GeneratorInfo> {
        let mut g = vec![self.x, self.w];
        g.extend(self.t);
        g
    }

    pub fn tdeg(&self, m: &Monomial) -> i32 {
        let t = self.t.map_or(0, |t| t.tdeg);
        m.a as i32 * self.x.tdeg + m.b as i32 * self.w.tdeg + m.c as i32 * t
    }

    /// Normal form of `x^a w^b t^c` for arbitrary exponents, or `None` when it vanishes.
    pub fn reduce(&self, a: u32, b: u32, c: u32) -> Option<Monomial> {
        if c > 0 && self.t.is_none() {
            return None;
        }
        match self.case {
            RingCase::Sphere => (a <= 1).then(|| Monomial::new(a, b, c)),
            RingCase::OddProj => {
                if b >= 2 {
                    if !self.v_square {
                        return None;
                    }
                    // v^2 = t x^{n-1}
                    return self.reduce(a + self.top - 1, b - 2, c + 1);
                }
                (a <= self.top).then(|| Monomial::new(a, b, c))
            }
            RingCase::EvenProj => {
                let ok = b <= 1 && a <= self.top && ((b == 0 && c == 0) || a < self.top);
                ok.then(|| Monomial::new(a, b, c))
            }
        }
    }

    pub fn is_normal(&self, m: &Monomial) -> bool {
        self.reduce(m.a, m.b, m.c) == Some(*m)
    }

    /// Product of two normal-form monomials.
    pub fn normal_form(&self, m1: &Monomial, m2: &Monomial) -> Option<Monomial> {
        self.reduce(m1.a + m2.a, m1.b + m2.b, m1.c + m2.c)
    }

    pub fn mul(&self, e1: &Element, e2: &Element) -> Element {
        let mut out = Element::zero();
        for m1 in e1.terms() {
            for m2 in e2.terms() {
                if let Some(m) = self.normal_form(m1, m2) {
                    out.toggle(m);
                }
            }
        }
        out
    }

    fn mul_monomial(&self, e: &Element, m: &Monomial) -> Element {
        self.mul(e, &Element::monomial(*m))
    }

    /// Closed-form `Δ` on a normal-form monomial.
    pub fn delta(&self, m: &Monomial) -> Element {
        let Monomial { a, b, c } = *m;
        let image = match self.case {
            RingCase::Sphere => ((a * b) % 2 == 1).then(|| self.reduce(a - 1, b - 1, c)).flatten(),
            RingCase::OddProj => ((a * b) % 2 == 1).then(|| self.reduce(a - 1, 0, c)).flatten(),
            RingCase::EvenProj => (((a + c) * b) % 2 == 1).then(|| self.reduce(a, 0, c)).flatten(),
        };
        Element::from_option(image)
    }

    pub fn delta_element(&self, e: &Element) -> Element {
        let mut out = Element::zero();
        for m in e.terms() {
            out.add_assign(&self.delta(m));
        }
        out
    }

    /// The generator table: `[g, h]` for generator indices 0 = x, 1 = w, 2 = t.
    pub fn generator_bracket(&self, g: usize, h: usize) -> Element {
        let (g, h) = if g <= h { (g, h) } else { (h, g) };
        let one = Element::monomial(Monomial::ONE);
        match (self.case, g, h) {
            (RingCase::Sphere | RingCase::OddProj, 0, 1) => one,
            (RingCase::EvenProj, 0, 1) => Element::monomial(Monomial::new(1, 0, 0)),
            (RingCase::EvenProj, 1, 2) => Element::monomial(Monomial::new(0, 0, 1)),
            _ => Element::zero(),
        }
    }

    fn exponents(m: &Monomial) -> [u32; 3] {
        [m.a, m.b, m.c]
    }

    fn remove_one(m: &Monomial, g: usize) -> Monomial {
        let mut e = Self::exponents(m);
        e[g] -= 1;
        Monomial::new(e[0], e[1], e[2])
    }

    /// `[m1, m2]` by Leibniz expansion from the generator table, left slot first.
    pub fn bracket(&self, m1: &Monomial, m2: &Monomial) -> Element {
        let mut out = Element::zero();
        let (e1, e2) = (Self::exponents(m1), Self::exponents(m2));
        for g in 0..3 {
            if e1[g] % 2 == 0 {
                continue;
            }
            // [g · rest, m2] = [g, m2] rest + g [rest, m2]; the second sum is
            // accounted for by the other factors, and repeated factors pair up
            let rest1 = Self::remove_one(m1, g);
            for h in 0..3 {
                if e2[h] % 2 == 0 {
                    continue;
                }
                let gh = self.generator_bracket(g, h);
                if gh.is_zero() {
                    continue;
                }
                let rest2 = Self::remove_one(m2, h);
                let Some(rest) = self.reduce(rest1.a + rest2.a, rest1.b + rest2.b, rest1.c + rest2.c) else {
                    continue;
                };
                out.add_assign(&self.mul_monomial(&gh, &rest));
            }
        }
        out
    }

    pub fn bracket_elements(&self, e1: &Element, e2: &Element) -> Element {
        let mut out = Element::zero();
        for m1 in e1.terms() {
            for m2 in e2.terms() {
                out.add_assign(&self.bracket(m1, m2));
            }
        }
        out
    }

    /// `Δ` computed from `Δ(generator) = 0` and the BV formula, one generator at a time.
    pub fn delta_recursive(&self, m: &Monomial) -> Element {
        let e = Self::exponents(m);
        let Some(g) = (0..3).find(|&g| e[g] > 0) else {
            return Element::zero();
        };
        let gen = Self::unit_monomial(g);
        let rest = Self::remove_one(m, g);
        // Δ(g rest) = g Δ(rest) + [g, rest]
        let mut out = self.mul_monomial(&self.delta_recursive(&rest), &gen);
        out.add_assign(&self.bracket(&gen, &rest));
        out
    }

    fn unit_monomial(g: usize) -> Monomial {
        let mut e = [0; 3];
        e[g] = 1;
        Monomial::new(e[0], e[1], e[2])
    }

    /// `Δ(m1 m2) = Δ(m1) m2 + m1 Δ(m2) + [m1, m2]`.
    pub fn delta_via_bv(&self, m1: &Monomial, m2: &Monomial) -> Element {
        let mut out = self.mul_monomial(&self.delta_recursive(m1), m2);
        out.add_assign(&self.mul_monomial(&self.delta_recursive(m2), m1));
        out.add_assign(&self.bracket(m1, m2));
        out
    }

    /// Largest `b` to enumerate for a Hochschild degree bound.
    fn max_b(&self, hdeg_max: usize) -> u32 {
        match self.case {
            RingCase::Sphere => hdeg_max as u32,
            _ => 1.min(hdeg_max as u32),
        }
    }

    /// Normal-form monomials with `tdeg` in `[lo, hi]` and `hdeg <= hdeg_max`,
    /// ordered by Hochschild degree, then by the exponents of `x`, `w`, `t`.
    pub fn basis_in_window(&self, lo: i32, hi: i32, hdeg_max: usize) -> Vec<Monomial> {
        let mut out = Vec::new();
        let max_c = if self.t.is_some() { hdeg_max / 2 } else { 0 };
        for a in 0..=self.top {
            for b in 0..=self.max_b(hdeg_max) {
                for c in 0..=max_c as u32 {
                    let m = Monomial::new(a, b, c);
                    if m.hdeg() > hdeg_max || !self.is_normal(&m) {
                        continue;
                    }
                    let d = self.tdeg(&m);
                    if (lo..=hi).contains(&d) {
                        out.push(m);
                    }
                }
            }
        }
        out.sort_by_key(|m| (m.hdeg(), m.a, m.b, m.c));
        out
    }

    /// Normal-form monomials of Hochschild degree exactly `hdeg` (any degree).
    pub fn basis_in_hdeg(&self, hdeg: usize) -> Vec<Monomial> {
        let mut out = Vec::new();
        for b in 0..=self.max_b(hdeg) {
            if (hdeg as u32) < b || (hdeg as u32 - b) % 2 == 1 {
                continue;
            }
            let c = (hdeg as u32 - b) / 2;
            for a in 0..=self.top {
                let m = Monomial::new(a, b, c);
                if self.is_normal(&m) {
                    out.push(m);
                }
            }
        }
        out.sort_by_key(|m| (m.a, m.b, m.c));
        out
    }

    pub fn label(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for (name, e) in [("x", m.a), (self.w.name, m.b), ("t", m.c)] {
            match e {
                0 => {}
                1 => parts.push(name.to_string()),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join(" ")
        }
    }

    pub fn element_label(&self, e: &Element) -> String {
        if e.is_zero() {
            return "0".into();
        }
        e.terms().map(|m| self.label(m)).collect::<Vec<_>>().join(" + ")
    }

    /// Parses a label such as `x^2 v t`.
    pub fn parse_monomial(&self, s: &str) -> Option<Monomial> {
        let mut e = [0u32; 3];
        let s = s.trim();
        if s == "1" {
            return Some(Monomial::ONE);
        }
        for part in s.split_whitespace() {
            let (name, exp) = match part.split_once('^') {
                Some((n, k)) => (n, k.parse().ok()?),
                None => (part, 1),
            };
            let g = match name {
                "x" => 0,
                "t" if self.t.is_some() => 2,
                n if n == self.w.name => 1,
                _ => return None,
            };
            e[g] += exp;
        }
        Some(Monomial::new(e[0], e[1], e[2]))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x^{} w^{} t^{}", self.a, self.b, self.c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(name: &str) -> PresentedBVRing {
        make_presentation(&name.parse().unwrap())
    }

    fn m(a: u32, b: u32, c: u32) -> Monomial {
        Monomial::new(a, b, c)
    }

    #[test]
    fn presentation_degrees() {
        let r = ring("S3");
        assert_eq!((r.x.tdeg, r.x.hdeg), (-3, 0));
        assert_eq!((r.w.tdeg, r.w.hdeg), (2, 1));
        assert_eq!(r.reduce(2, 0, 0), None);
        let r = ring("CP3");
        assert!(!r.v_square);
        assert_eq!(r.normal_form(&m(0, 1, 0), &m(0, 1, 0)), None);
        let r = ring("RP2");
        assert_eq!(r.case, RingCase::EvenProj);
        assert_eq!(r.normal_form(&m(0, 1, 0), &m(0, 1, 0)), None);
        assert_eq!(r.reduce(2, 0, 1), None);
        assert_eq!(r.reduce(2, 1, 0), None);
        assert_eq!(r.reduce(2, 0, 0), Some(m(2, 0, 0)));
    }

    #[test]
    fn v_square_rewrites_when_coefficient_is_odd() {
        // (1 + 1) / 2 = 1
        let r = ring("CP1");
        assert!(r.v_square);
        assert_eq!(r.normal_form(&m(0, 1, 0), &m(0, 1, 0)), Some(m(0, 0, 1)));
        // RP3: (3 + 1) / 2 = 2
        let r = ring("RP3");
        assert_eq!(r.normal_form(&m(0, 1, 0), &m(0, 1, 0)), None);
        let r = ring("RP5");
        assert_eq!(r.normal_form(&m(1, 1, 0), &m(0, 1, 0)), Some(m(5, 0, 1)));
    }

    #[test]
    fn truncation() {
        let r = ring("CP3");
        assert_eq!(r.normal_form(&m(1, 0, 0), &m(3, 0, 0)), None);
    }

    #[test]
    fn closed_form_delta() {
        let r = ring("RP3");
        assert_eq!(r.delta(&m(1, 1, 2)), Element::monomial(m(0, 0, 2)));
        let r = ring("RP2");
        assert_eq!(r.delta(&m(0, 1, 1)), Element::monomial(m(0, 0, 1)));
        assert!(r.delta(&m(1, 1, 1)).is_zero());
        let r = ring("S2");
        assert_eq!(r.delta(&m(1, 1, 0)), Element::monomial(Monomial::ONE));
        assert!(r.delta(&m(1, 2, 0)).is_zero());
    }

    #[test]
    fn bracket_table() {
        let r = ring("S4");
        for b in 0..6 {
            let expect = if b % 2 == 1 { Element::monomial(m(0, b - 1, 0)) } else { Element::zero() };
            assert_eq!(r.bracket(&m(1, 0, 0), &m(0, b, 0)), expect);
        }
        let r = ring("CP2");
        assert_eq!(r.bracket(&m(0, 1, 0), &m(0, 0, 1)), Element::monomial(m(0, 0, 1)));
        assert_eq!(r.bracket(&m(1, 0, 0), &m(0, 1, 0)), Element::monomial(m(1, 0, 0)));
        assert!(r.bracket(&m(1, 0, 0), &m(0, 0, 3)).is_zero());
    }

    #[test]
    fn delta_via_bv_examples() {
        let r = ring("S2");
        assert_eq!(r.delta_via_bv(&m(1, 0, 0), &m(0, 1, 0)), Element::monomial(Monomial::ONE));
        assert!(r.delta_via_bv(&m(0, 1, 0), &m(0, 1, 0)).is_zero());
        let r = ring("RP2");
        assert_eq!(r.delta_via_bv(&m(1, 0, 0), &m(0, 1, 0)), Element::monomial(m(1, 0, 0)));
    }

    #[test]
    fn window_enumeration() {
        let r = ring("S2");
        let labels: Vec<String> = r.basis_in_window(-2, 2, 2).iter().map(|x| r.label(x)).collect();
        assert_eq!(labels, ["1", "x", "v", "x v", "v^2", "x v^2"]);
        assert!(r.basis_in_window(3, 2, 4).is_empty());
        let r = ring("RP3");
        let at: Vec<Monomial> = r
            .basis_in_window(2, 2, 2)
            .into_iter()
            .filter(|x| x.hdeg() == 2)
            .collect();
        assert_eq!(at, vec![m(0, 0, 1)]);
    }

    #[test]
    fn labels_round_trip() {
        let r = ring("RP4");
        for x in r.basis_in_window(-40, 40, 5) {
            assert_eq!(r.parse_monomial(&r.label(&x)), Some(x));
        }
    }
}
