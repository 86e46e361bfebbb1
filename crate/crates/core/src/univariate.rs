//! Dense univariate polynomials over Q(i) and exact root extraction in Q(i).

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::GaussianRational;

/// `coeffs[k]` is the coefficient of `T^k`; no trailing zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<GaussianRational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<GaussianRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly {
            coeffs: vec![GaussianRational::one()],
        }
    }

    /// `T - a`.
    pub fn linear(a: &GaussianRational) -> Self {
        UniPoly::new(vec![-a, GaussianRational::one()])
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&GaussianRational> {
        self.coeffs.last()
    }

    pub fn monic(&self) -> Result<Self> {
        let lc = self.leading().ok_or(Error::ZeroInput)?.inv()?;
        Ok(UniPoly {
            coeffs: self.coeffs.iter().map(|c| c * &lc).collect(),
        })
    }

    pub fn eval(&self, t: &GaussianRational) -> GaussianRational {
        let mut acc = GaussianRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * t) + c;
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = GaussianRational::zero();
        UniPoly::new(
            (0..n)
                .map(|k| self.coeffs.get(k).unwrap_or(&z) + other.coeffs.get(k).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![GaussianRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        UniPoly::new(out)
    }

    pub fn derivative(&self) -> Self {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * &GaussianRational::from_int(k as i64))
                .collect(),
        )
    }

    /// Euclidean division `self = q * d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let lc_inv = d.leading().expect("nonzero").inv()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![GaussianRational::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let top = rem.len() - 1;
            let c = &rem[top] * &lc_inv;
            let shift = top - dd;
            if !c.is_zero() {
                for (k, dc) in d.coeffs.iter().enumerate() {
                    rem[shift + k] -= &(dc * &c);
                }
            }
            quot[shift] = c;
            rem.pop();
        }
        Ok((UniPoly::new(quot), UniPoly::new(rem)))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic().unwrap_or_else(|_| Self::zero())
    }

    /// `self / gcd(self, self')`, monic.
    pub fn squarefree_part(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroInput);
        }
        let g = self.gcd(&self.derivative());
        let (q, _) = self.div_rem(&g)?;
        q.monic()
    }

    /// All roots lying in Q(i), with multiplicity, sorted canonically.
    /// The second component is the monic cofactor carrying the roots outside
    /// Q(i) (1 when the polynomial splits).
    pub fn roots_in_field(&self) -> Result<(Vec<(GaussianRational, usize)>, UniPoly)> {
        let mut rest = self.monic()?;
        let mut found = Vec::new();
        for r in squarefree_roots(&rest.squarefree_part()?) {
            let lin = UniPoly::linear(&r);
            let mut mult = 0;
            loop {
                let (q, rem) = rest.div_rem(&lin)?;
                if !rem.is_zero() {
                    break;
                }
                rest = q;
                mult += 1;
            }
            found.push((r, mult));
        }
        found.sort();
        Ok((found, rest))
    }
}

/// Roots in Q(i) of a monic squarefree polynomial.
///
/// Every such root of `p` is `γ / D` for a Gaussian integer `γ`, where `D` is
/// the lcm of the coefficient denominators (the substitution `T = S/D` turns
/// `p` into a monic polynomial over Z[i], which is integrally closed). Floating
/// point locates candidates; every accepted root is verified exactly, and the
/// polynomial is deflated after each hit so nothing is reported twice.
fn squarefree_roots(p: &UniPoly) -> Vec<GaussianRational> {
    let mut out = Vec::new();
    let mut rest = p.clone();
    for _round in 0..4 {
        let Some(deg) = rest.degree() else { break };
        if deg == 0 {
            break;
        }
        if deg == 1 {
            out.push(-&rest.coeffs[0]);
            break;
        }
        let scale = denominator_lcm(&rest);
        let mut progress = false;
        for (re, im) in approximate_roots(&rest) {
            for cand in gaussian_candidates(re, im, &scale) {
                if rest.eval(&cand).is_zero() {
                    let (q, _) = rest.div_rem(&UniPoly::linear(&cand)).expect("linear divisor");
                    rest = q;
                    out.push(cand);
                    progress = true;
                    break;
                }
            }
        }
        if !progress {
            break;
        }
    }
    out
}

fn denominator_lcm(p: &UniPoly) -> BigInt {
    let mut l = BigInt::one();
    for c in &p.coeffs {
        l = l.lcm(c.re().denom()).lcm(c.im().denom());
    }
    l
}

fn gaussian_candidates(re: f64, im: f64, scale: &BigInt) -> Vec<GaussianRational> {
    let s = crate::scalar::rational_to_f64(&BigRational::from_integer(scale.clone()));
    let (a, b) = (re * s, im * s);
    if !a.is_finite() || !b.is_finite() || a.abs() > 1e15 || b.abs() > 1e15 {
        return Vec::new();
    }
    let (a0, b0) = (a.round() as i64, b.round() as i64);
    let mut out = Vec::new();
    for da in [0i64, -1, 1] {
        for db in [0i64, -1, 1] {
            let num = GaussianRational::complex(a0 + da, b0 + db);
            out.push(&num * &GaussianRational::real(BigRational::new(BigInt::one(), scale.clone())));
        }
    }
    out
}

/// Durand-Kerner iteration on a monic polynomial.
fn approximate_roots(p: &UniPoly) -> Vec<(f64, f64)> {
    type C = (f64, f64);
    let mul = |a: C, b: C| (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0);
    let sub = |a: C, b: C| (a.0 - b.0, a.1 - b.1);
    let div = |a: C, b: C| {
        let n = b.0 * b.0 + b.1 * b.1;
        ((a.0 * b.0 + a.1 * b.1) / n, (a.1 * b.0 - a.0 * b.1) / n)
    };
    let coeffs: Vec<C> = p.coeffs.iter().map(GaussianRational::to_f64_pair).collect();
    let deg = coeffs.len() - 1;
    let eval = |z: C| coeffs.iter().rev().fold((0.0, 0.0), |acc, &c| {
        let t = mul(acc, z);
        (t.0 + c.0, t.1 + c.1)
    });
    let radius = 1.0 + coeffs[..deg].iter().map(|c| c.0.hypot(c.1)).fold(0.0, f64::max);
    let mut z: Vec<C> = (0..deg)
        .map(|k| {
            let ang = 0.4 + 2.0 * std::f64::consts::PI * k as f64 / deg as f64;
            (radius * 0.5 * ang.cos(), radius * 0.5 * ang.sin())
        })
        .collect();
    for _ in 0..500 {
        let mut delta = 0.0f64;
        for k in 0..deg {
            let mut den = (1.0, 0.0);
            for j in 0..deg {
                if j != k {
                    den = mul(den, sub(z[k], z[j]));
                }
            }
            if den.0 == 0.0 && den.1 == 0.0 {
                den = (1e-12, 0.0);
            }
            let step = div(eval(z[k]), den);
            z[k] = sub(z[k], step);
            delta = delta.max(step.0.hypot(step.1));
        }
        if delta < 1e-14 * radius {
            break;
        }
    }
    z
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `T^2 - 2*T + 1`.
impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            let body = match k {
                0 => String::new(),
                1 => "T".to_string(),
                k => format!("T^{k}"),
            };
            crate::poly::push_term(&mut out, c, &body);
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> GaussianRational {
        s.parse().unwrap()
    }

    fn from_roots(roots: &[&str]) -> UniPoly {
        roots.iter().fold(UniPoly::one(), |acc, r| acc.mul(&UniPoly::linear(&g(r))))
    }

    #[test]
    fn finds_gaussian_rational_roots_with_multiplicity() {
        let p = from_roots(&["1/2", "1/2", "-3i", "2+i", "-7/3"]);
        let (roots, rest) = p.roots_in_field().unwrap();
        assert_eq!(rest, UniPoly::one());
        let mut expected = vec![(g("1/2"), 2), (g("-3i"), 1), (g("2+i"), 1), (g("-7/3"), 1)];
        expected.sort();
        assert_eq!(roots, expected);
    }

    #[test]
    fn reports_irrational_cofactor() {
        // (T^2 - 2)(T - 1)
        let p = UniPoly::new(vec![g("-2"), g("0"), g("1")]).mul(&UniPoly::linear(&g("1")));
        let (roots, rest) = p.roots_in_field().unwrap();
        assert_eq!(roots, vec![(g("1"), 1)]);
        assert_eq!(rest.degree(), Some(2));
    }

    #[test]
    fn gcd_and_squarefree() {
        let p = from_roots(&["1", "1", "2"]);
        assert_eq!(p.squarefree_part().unwrap(), from_roots(&["1", "2"]));
        assert_eq!(p.gcd(&from_roots(&["1", "3"])), from_roots(&["1"]));
    }

    #[test]
    fn display() {
        assert_eq!(from_roots(&["1", "1"]).to_string(), "T^2 - 2*T + 1");
    }
}
