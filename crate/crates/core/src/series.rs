//! Rational generating functions in `u^{-1}` with odd numerator and even
//! denominator, the shape of every character series handled here.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::GaussianRational;

/// `(a_0 u^{-1} + a_1 u^{-3} + …) / (1 + c_1 u^{-2} + c_2 u^{-4} + …)`.
///
/// `denominator[0]` is always exactly 1. Equality is equality of rational
/// functions.
#[derive(Clone, Serialize, Deserialize)]
#[serde(try_from = "RawSeries", into = "RawSeries")]
pub struct RationalSeries {
    numerator: Vec<GaussianRational>,
    denominator: Vec<GaussianRational>,
}

#[derive(Serialize, Deserialize)]
struct RawSeries {
    numerator: Vec<GaussianRational>,
    denominator: Vec<GaussianRational>,
}

impl TryFrom<RawSeries> for RationalSeries {
    type Error = Error;
    fn try_from(raw: RawSeries) -> Result<Self> {
        RationalSeries::new(raw.numerator, raw.denominator)
    }
}

impl From<RationalSeries> for RawSeries {
    fn from(s: RationalSeries) -> Self {
        RawSeries {
            numerator: s.numerator,
            denominator: s.denominator,
        }
    }
}

fn trim(v: &mut Vec<GaussianRational>, keep: usize) {
    while v.len() > keep && v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

impl RationalSeries {
    /// An empty denominator means 1.
    pub fn new(mut numerator: Vec<GaussianRational>, mut denominator: Vec<GaussianRational>) -> Result<Self> {
        if denominator.is_empty() {
            denominator.push(GaussianRational::one());
        }
        if !denominator[0].is_one() {
            return Err(Error::InvalidSeries(format!(
                "denominator constant term must be 1, got {}",
                denominator[0]
            )));
        }
        trim(&mut numerator, 0);
        trim(&mut denominator, 1);
        Ok(RationalSeries { numerator, denominator })
    }

    /// From full Laurent coefficient lists in powers `u^0, u^{-1}, u^{-2}, …`.
    /// Rejects even powers in the numerator and odd powers in the denominator.
    pub fn from_laurent(num: &[GaussianRational], den: &[GaussianRational]) -> Result<Self> {
        if let Some(k) = num.iter().step_by(2).position(|c| !c.is_zero()) {
            return Err(Error::InvalidSeries(format!("numerator has a u^-{} term", 2 * k)));
        }
        if let Some(k) = den.iter().skip(1).step_by(2).position(|c| !c.is_zero()) {
            return Err(Error::InvalidSeries(format!("denominator has a u^-{} term", 2 * k + 1)));
        }
        Self::new(
            num.iter().skip(1).step_by(2).cloned().collect(),
            den.iter().step_by(2).cloned().collect(),
        )
    }

    pub fn zero() -> Self {
        RationalSeries {
            numerator: Vec::new(),
            denominator: vec![GaussianRational::one()],
        }
    }

    pub fn numerator(&self) -> &[GaussianRational] {
        &self.numerator
    }

    pub fn denominator(&self) -> &[GaussianRational] {
        &self.denominator
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_empty()
    }

    /// Coefficients of `u^{-1}, u^{-3}, …, u^{-2·order-1}`.
    pub fn expand(&self, order: usize) -> Vec<GaussianRational> {
        let mut out: Vec<GaussianRational> = Vec::with_capacity(order + 1);
        for k in 0..=order {
            let mut c = self.numerator.get(k).cloned().unwrap_or_else(GaussianRational::zero);
            for j in 1..self.denominator.len().min(k + 1) {
                c -= &(&self.denominator[j] * &out[k - j]);
            }
            out.push(c);
        }
        out
    }
}

fn convolve(a: &[GaussianRational], b: &[GaussianRational]) -> Vec<GaussianRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![GaussianRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += &(x * y);
        }
    }
    trim(&mut out, 0);
    out
}

/// Free-function form of [`RationalSeries::expand`].
pub fn series_expand(s: &RationalSeries, order: usize) -> Vec<GaussianRational> {
    s.expand(order)
}

/// Multiplies two even power series `1 + f_2 u^{-2} + …` given by their
/// coefficient lists after the leading 1.
pub fn even_series_product(f: &[GaussianRational], g: &[GaussianRational]) -> Vec<GaussianRational> {
    let one = [GaussianRational::one()];
    let a: Vec<_> = one.iter().chain(f).cloned().collect();
    let b: Vec<_> = one.iter().chain(g).cloned().collect();
    let mut prod = convolve(&a, &b);
    trim(&mut prod, 1);
    prod.remove(0);
    prod
}

impl PartialEq for RationalSeries {
    fn eq(&self, other: &Self) -> bool {
        convolve(&self.numerator, &other.denominator) == convolve(&other.numerator, &self.denominator)
    }
}

impl Eq for RationalSeries {}

impl fmt::Debug for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn render_sum(coeffs: &[GaussianRational], power: impl Fn(usize) -> usize) -> String {
    let mut out = String::new();
    for (k, c) in coeffs.iter().enumerate() {
        let p = power(k);
        let body = match p {
            0 => String::new(),
            1 => "u^-1".to_string(),
            p => format!("u^-{p}"),
        };
        crate::poly::push_term(&mut out, c, &body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// `(5*u^-1) / (1 + 4*u^-2)`.
impl fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = render_sum(&self.numerator, |k| 2 * k + 1);
        let den = render_sum(&self.denominator, |k| 2 * k);
        write!(f, "({num}) / ({den})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(v: i64) -> GaussianRational {
        GaussianRational::from_int(v)
    }

    #[test]
    fn expansions() {
        let s = RationalSeries::new(vec![g(1)], vec![]).unwrap();
        assert_eq!(s.expand(2), vec![g(1), g(0), g(0)]);
        let s = RationalSeries::new(vec![g(2)], vec![g(1), g(1)]).unwrap();
        assert_eq!(s.expand(2), vec![g(2), g(-2), g(2)]);
        assert!(RationalSeries::zero().expand(4).iter().all(Zero::is_zero));
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(RationalSeries::new(vec![g(1)], vec![g(2)]).is_err());
        assert!(RationalSeries::from_laurent(&[g(1)], &[g(1)]).is_err());
        assert!(RationalSeries::from_laurent(&[g(0), g(1)], &[g(1), g(3)]).is_err());
        let ok = RationalSeries::from_laurent(&[g(0), g(5)], &[g(1), g(0), g(4)]).unwrap();
        assert_eq!(ok.numerator(), &[g(5)]);
        assert_eq!(ok.denominator(), &[g(1), g(4)]);
    }

    #[test]
    fn rational_function_equality() {
        // 2u^-1 / (1 + u^-2) == (2u^-1 + 2u^-3) / (1 + 2u^-2 + u^-4)
        let a = RationalSeries::new(vec![g(2)], vec![g(1), g(1)]).unwrap();
        let b = RationalSeries::new(vec![g(2), g(2)], vec![g(1), g(2), g(1)]).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, RationalSeries::zero());
        assert_eq!(RationalSeries::zero(), RationalSeries::new(vec![], vec![g(1), g(7)]).unwrap());
    }

    #[test]
    fn display() {
        let s = RationalSeries::new(vec![g(5)], vec![g(1), g(4)]).unwrap();
        assert_eq!(s.to_string(), "(5*u^-1) / (1 + 4*u^-2)");
    }

    #[test]
    fn json_roundtrip_rejects_bad_denominator() {
        let s = RationalSeries::new(vec![g(5)], vec![g(1), g(4)]).unwrap();
        let text = serde_json::to_string(&s).unwrap();
        let back: RationalSeries = serde_json::from_str(&text).unwrap();
        assert_eq!(back, s);
        assert!(serde_json::from_str::<RationalSeries>(r#"{"numerator":[],"denominator":["2"]}"#).is_err());
    }
}
