//! Rational Laurent series `N(t) / Π (1 - t^k)` with integer coefficients,
//! their windowed expansions, and the closed-form Poincaré series of string
//! homology for spheres and projective spaces.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::frobenius::ManifoldSpec;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeriesError {
    #[error("denominator factor (1 - t^{0}) must have a positive exponent")]
    BadFactor(i32),
    #[error("geometric sum needs at least one term and a nonzero step")]
    BadGeometric,
    #[error("series has coefficient {coefficient} at negative exponent {exponent}")]
    NegativeSupport { exponent: i32, coefficient: i64 },
    #[error("window [{lo}, {hi}] is empty")]
    EmptyWindow { lo: i32, hi: i32 },
}

/// A Laurent polynomial with integer coefficients; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly(BTreeMap<i32, i64>);

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn monomial(exp: i32, coeff: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i32, i64)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exp: i32, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let c = self.0.entry(exp).or_insert(0);
        *c += coeff;
        if *c == 0 {
            self.0.remove(&exp);
        }
    }

    pub fn coeff(&self, exp: i32) -> i64 {
        self.0.get(&exp).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.0.iter().map(|(&e, &c)| (e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.0.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.0.keys().next_back().copied()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (e, -c)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    pub fn shift(&self, k: i32) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (e + k, c)))
    }

    /// `1 - t^k`.
    pub fn one_minus(k: i32) -> Self {
        Self::from_terms([(0, 1), (k, -1)])
    }
}

/// `Σ_{j=0}^{m-1} t^{step·j}`, the finite geometric sum written as a ratio
/// `(1 - t^{m·step}) / (1 - t^{step})`.
pub fn geometric_ratio(m: u32, step: i32) -> Result<LaurentPoly, SeriesError> {
    if m == 0 || step == 0 {
        return Err(SeriesError::BadGeometric);
    }
    Ok(LaurentPoly::from_terms((0..m as i32).map(|j| (step * j, 1))))
}

/// `numerator / Π_k (1 - t^k)` over a sorted multiset of positive `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalLaurentSeries {
    numerator: LaurentPoly,
    denominator: Vec<i32>,
}

impl RationalLaurentSeries {
    pub fn new(numerator: LaurentPoly, mut denominator: Vec<i32>) -> Result<Self, SeriesError> {
        if let Some(&k) = denominator.iter().find(|&&k| k <= 0) {
            return Err(SeriesError::BadFactor(k));
        }
        denominator.sort_unstable();
        Ok(Self {
            numerator,
            denominator,
        })
    }

    pub fn zero() -> Self {
        Self::polynomial(LaurentPoly::zero())
    }

    pub fn polynomial(p: LaurentPoly) -> Self {
        Self {
            numerator: p,
            denominator: Vec::new(),
        }
    }

    /// `t^e / Π_k (1 - t^k)`.
    pub fn monomial_over(e: i32, denominator: &[i32]) -> Result<Self, SeriesError> {
        Self::new(LaurentPoly::monomial(e, 1), denominator.to_vec())
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &[i32] {
        &self.denominator
    }

    /// Factors of `of` not accounted for by `have`, as multisets.
    fn missing(of: &[i32], have: &[i32]) -> Vec<i32> {
        let mut pool: BTreeMap<i32, usize> = BTreeMap::new();
        for &k in have {
            *pool.entry(k).or_default() += 1;
        }
        let mut out = Vec::new();
        for &k in of {
            match pool.get_mut(&k) {
                Some(n) if *n > 0 => *n -= 1,
                _ => out.push(k),
            }
        }
        out
    }

    fn times_factors(p: &LaurentPoly, factors: &[i32]) -> LaurentPoly {
        factors
            .iter()
            .fold(p.clone(), |acc, &k| acc.mul(&LaurentPoly::one_minus(k)))
    }

    pub fn add(&self, other: &Self) -> Self {
        let extra_for_self = Self::missing(&other.denominator, &self.denominator);
        let extra_for_other = Self::missing(&self.denominator, &other.denominator);
        let mut denominator = self.denominator.clone();
        denominator.extend(&extra_for_self);
        denominator.sort_unstable();
        let numerator = Self::times_factors(&self.numerator, &extra_for_self)
            .add(&Self::times_factors(&other.numerator, &extra_for_other));
        Self {
            numerator,
            denominator,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut denominator = self.denominator.clone();
        denominator.extend(&other.denominator);
        denominator.sort_unstable();
        Self {
            numerator: self.numerator.mul(&other.numerator),
            denominator,
        }
    }

    pub fn mul_poly(&self, p: &LaurentPoly) -> Self {
        Self {
            numerator: self.numerator.mul(p),
            denominator: self.denominator.clone(),
        }
    }

    pub fn shift(&self, k: i32) -> Self {
        Self {
            numerator: self.numerator.shift(k),
            denominator: self.denominator.clone(),
        }
    }

    /// Coefficients of `t^lo, …, t^hi`.
    pub fn expand(&self, lo: i32, hi: i32) -> Result<Vec<i64>, SeriesError> {
        if lo > hi {
            return Err(SeriesError::EmptyWindow { lo, hi });
        }
        let Some(start) = self.numerator.min_exp() else {
            return Ok(vec![0; (hi - lo + 1) as usize]);
        };
        let base = start.min(lo);
        let len = (hi - base + 1) as usize;
        let mut c = vec![0i64; len];
        for (e, v) in self.numerator.terms() {
            if e <= hi {
                c[(e - base) as usize] += v;
            }
        }
        for &k in &self.denominator {
            let k = k as usize;
            for i in k..len {
                c[i] += c[i - k];
            }
        }
        Ok(c[(lo - base) as usize..].to_vec())
    }

    /// Fails if any coefficient at a negative exponent is nonzero.
    pub fn check_nonnegative_support(&self) -> Result<(), SeriesError> {
        let Some(start) = self.numerator.min_exp() else {
            return Ok(());
        };
        if start >= 0 {
            return Ok(());
        }
        for (i, &c) in self.expand(start, -1)?.iter().enumerate() {
            if c != 0 {
                return Err(SeriesError::NegativeSupport {
                    exponent: start + i as i32,
                    coefficient: c,
                });
            }
        }
        Ok(())
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            if i == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let a = c.unsigned_abs();
            let power = if e == 1 { "t".to_string() } else { format!("t^{e}") };
            match (e, a) {
                (0, _) => write!(f, "{a}")?,
                (_, 1) => write!(f, "{power}")?,
                _ => write!(f, "{a} {power}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Display for RationalLaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.numerator)?;
        if !self.denominator.is_empty() {
            write!(f, " / (")?;
            for k in &self.denominator {
                if *k == 1 {
                    write!(f, "(1 - t)")?;
                } else {
                    write!(f, "(1 - t^{k})")?;
                }
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// First exponent at which two expansions disagree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub exponent: i32,
    pub left: i64,
    pub right: i64,
}

/// `Ok(None)` when the expansions agree on `[lo, hi]`.
pub fn equal_in_window(
    s1: &RationalLaurentSeries,
    s2: &RationalLaurentSeries,
    lo: i32,
    hi: i32,
) -> Result<Option<Mismatch>, SeriesError> {
    let (e1, e2) = (s1.expand(lo, hi)?, s2.expand(lo, hi)?);
    Ok(e1
        .iter()
        .zip(&e2)
        .enumerate()
        .find(|(_, (a, b))| a != b)
        .map(|(i, (&left, &right))| Mismatch {
            exponent: lo + i as i32,
            left,
            right,
        }))
}

/// A windowed expansion, as emitted in JSON.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Expansion {
    pub lo: i32,
    pub hi: i32,
    pub coefficients: Vec<i64>,
}

impl Expansion {
    pub fn of(s: &RationalLaurentSeries, lo: i32, hi: i32) -> Result<Self, SeriesError> {
        Ok(Self {
            lo,
            hi,
            coefficients: s.expand(lo, hi)?,
        })
    }
}

/// `α_{d,n} = t^{-d-1} + t^{2dn-3}/(1-t^2)` and
/// `β_{d,n} = t^{d(2n+1)-3} + (1 + t^{2dn-2} + t^{-1})/(1-t^2)`.
pub fn alpha_beta(d: i32, n: i32) -> (RationalLaurentSeries, RationalLaurentSeries) {
    let alpha = RationalLaurentSeries {
        numerator: LaurentPoly::monomial(-d - 1, 1)
            .mul(&LaurentPoly::one_minus(2))
            .add(&LaurentPoly::monomial(2 * d * n - 3, 1)),
        denominator: vec![2],
    };
    let beta = RationalLaurentSeries {
        numerator: LaurentPoly::monomial(d * (2 * n + 1) - 3, 1)
            .mul(&LaurentPoly::one_minus(2))
            .add(&LaurentPoly::from_terms([(0, 1), (2 * d * n - 2, 1), (-1, 1)])),
        denominator: vec![2],
    };
    (alpha, beta)
}

fn over(numerator: LaurentPoly, denominator: Vec<i32>) -> RationalLaurentSeries {
    RationalLaurentSeries::new(numerator, denominator).expect("positive factors")
}

/// The closed-form Poincaré series of `H^{S^1}_*(LM; F2)`.
pub fn closed_form_series(spec: &ManifoldSpec) -> RationalLaurentSeries {
    let Some(d) = spec.division_dim() else {
        let k = spec.parameter() as i32;
        // (1/(1 - t^{2(k-1)})) (t^{k-1} + (1 + t^{2k-1})/(1 - t^2))
        let inner = over(LaurentPoly::monomial(k - 1, 1), vec![])
            .add(&over(LaurentPoly::from_terms([(0, 1), (2 * k - 1, 1)]), vec![2]));
        return inner.mul(&over(LaurentPoly::one(), vec![2 * (k - 1)]));
    };
    let dim = spec.parameter() as i32;
    let geometric = |m: i32| geometric_ratio(m as u32, -2 * d).expect("m >= 1");
    if dim % 2 == 1 {
        let n = (dim - 1) / 2;
        let lead = over(LaurentPoly::monomial(d * (2 * n + 1), 1), vec![d * (2 * n + 2) - 2]);
        let tail = over(LaurentPoly::monomial(-1, 1), vec![])
            .add(&over(LaurentPoly::from_terms([(d - 1, 1), (-d, 1)]), vec![2]));
        lead.mul_poly(&geometric(n + 1)).mul(&tail)
    } else {
        let n = dim / 2;
        let lead = over(LaurentPoly::monomial(2 * d * n, 1), vec![2 * d * (2 * n + 1) - 4]);
        let (alpha, beta) = alpha_beta(d, n);
        let inner = alpha.mul_poly(&geometric(n)).add(&beta.mul_poly(&geometric(n + 1)));
        lead.mul(&inner)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(num: &[(i32, i64)], den: &[i32]) -> RationalLaurentSeries {
        RationalLaurentSeries::new(LaurentPoly::from_terms(num.iter().copied()), den.to_vec()).unwrap()
    }

    #[test]
    fn expansion_examples() {
        assert_eq!(s(&[(0, 1)], &[1, 2]).expand(0, 5).unwrap(), vec![1, 1, 2, 2, 3, 3]);
        assert_eq!(s(&[(3, 1)], &[]).expand(0, 4).unwrap(), vec![0, 0, 0, 1, 0]);
        let x = s(&[(0, 1)], &[2]).mul(&s(&[(0, 1), (2, -1)], &[]));
        assert_eq!(x.expand(-3, 10).unwrap(), {
            let mut v = vec![0; 14];
            v[3] = 1;
            v
        });
        let y = s(&[(-1, 1)], &[]).mul(&s(&[(3, 1)], &[2]));
        assert_eq!(equal_in_window(&y, &s(&[(2, 1)], &[2]), -5, 30).unwrap(), None);
    }

    #[test]
    fn add_uses_common_denominators() {
        let a = s(&[(0, 1)], &[2]);
        let b = s(&[(1, 1)], &[2, 3]);
        let sum = a.add(&b);
        assert_eq!(sum.denominator(), &[2, 3]);
        let (ea, eb, es) = (a.expand(0, 20).unwrap(), b.expand(0, 20).unwrap(), sum.expand(0, 20).unwrap());
        for i in 0..21 {
            assert_eq!(es[i], ea[i] + eb[i]);
        }
        assert_eq!(a.add(&RationalLaurentSeries::zero()), a);
    }

    #[test]
    fn geometric_sums() {
        assert_eq!(geometric_ratio(2, -2).unwrap(), LaurentPoly::from_terms([(0, 1), (-2, 1)]));
        assert_eq!(geometric_ratio(1, 5).unwrap(), LaurentPoly::one());
        assert_eq!(
            geometric_ratio(3, -4).unwrap(),
            LaurentPoly::from_terms([(0, 1), (-4, 1), (-8, 1)])
        );
        assert!(geometric_ratio(0, 1).is_err());
    }

    #[test]
    fn mismatch_witness() {
        let w = equal_in_window(&s(&[(0, 1)], &[1]), &s(&[(0, 1)], &[2]), 0, 2).unwrap();
        assert_eq!(
            w,
            Some(Mismatch {
                exponent: 1,
                left: 1,
                right: 0
            })
        );
    }

    #[test]
    fn alpha_beta_small() {
        let (a, b) = alpha_beta(1, 1);
        assert_eq!(a.denominator(), &[2]);
        assert_eq!(b.denominator(), &[2]);
        let a_ref = s(&[(-2, 1)], &[]).add(&s(&[(-1, 1)], &[2]));
        assert_eq!(equal_in_window(&a, &a_ref, -5, 30).unwrap(), None);
        let b_ref = s(&[(0, 1)], &[]).add(&s(&[(0, 2), (-1, 1)], &[2]));
        assert_eq!(equal_in_window(&b, &b_ref, -5, 30).unwrap(), None);
    }

    #[test]
    fn sphere_closed_form() {
        let t = closed_form_series(&"S2".parse().unwrap());
        assert_eq!(t.expand(0, 5).unwrap(), vec![1, 1, 2, 2, 3, 3]);
        t.check_nonnegative_support().unwrap();
    }

    #[test]
    fn negative_support_is_reported() {
        let bad = s(&[(-2, 1), (0, 1)], &[2]);
        assert_eq!(
            bad.check_nonnegative_support(),
            Err(SeriesError::NegativeSupport {
                exponent: -2,
                coefficient: 1
            })
        );
        assert!(s(&[(0, 1), (3, -1)], &[2]).check_nonnegative_support().is_ok());
    }

    #[test]
    fn rendering() {
        assert_eq!(s(&[(-1, 1), (0, 2), (3, -1)], &[4, 2]).to_string(), "(t^-1 + 2 - t^3) / ((1 - t^2)(1 - t^4))");
        assert_eq!(RationalLaurentSeries::zero().to_string(), "(0)");
    }
}
