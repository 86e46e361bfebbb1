//! Sparse multivariate polynomials over Q(i).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::GaussianRational;

/// Largest supported number of variables. Tensor splittings realize both
/// factors as disjoint variable blocks, so this bounds `m + n` as well.
pub const MAX_VARS: usize = 12;

/// Dense exponent vector. The derived order is lexicographic with `x1` most
/// significant, which is a monomial order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial([u8; MAX_VARS]);

impl Monomial {
    pub fn one() -> Self {
        Monomial([0; MAX_VARS])
    }

    pub fn var(i: usize) -> Self {
        let mut m = Self::one();
        m.0[i] = 1;
        m
    }

    pub fn from_exponents(exps: &[u8]) -> Self {
        let mut m = Self::one();
        m.0[..exps.len()].copy_from_slice(exps);
        m
    }

    pub fn exponent(&self, i: usize) -> u8 {
        self.0[i]
    }

    pub fn exponents(&self, arity: usize) -> &[u8] {
        &self.0[..arity]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| u32::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = *self;
        for (o, e) in out.0.iter_mut().zip(other.0.iter()) {
            *o = o.checked_add(*e).expect("exponent overflow");
        }
        out
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Self) -> Option<Self> {
        let mut out = *self;
        for (o, e) in out.0.iter_mut().zip(other.0.iter()) {
            *o = o.checked_sub(*e)?;
        }
        Some(out)
    }

    fn with_exponent(mut self, i: usize, e: u8) -> Self {
        self.0[i] = e;
        self
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &self.0[..])
    }
}

/// A polynomial in `x1..x_arity`. No zero coefficient is ever stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    arity: usize,
    terms: BTreeMap<Monomial, GaussianRational>,
}

impl MultiPoly {
    pub fn zero(arity: usize) -> Self {
        assert!(arity <= MAX_VARS, "arity {arity} exceeds {MAX_VARS}");
        MultiPoly {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, GaussianRational::one())
    }

    pub fn constant(arity: usize, c: GaussianRational) -> Self {
        let mut p = Self::zero(arity);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(), c);
        }
        p
    }

    /// The variable `x_{i+1}` (0-based index).
    pub fn var(arity: usize, i: usize) -> Self {
        assert!(i < arity, "variable index {i} out of range for arity {arity}");
        let mut p = Self::zero(arity);
        p.terms.insert(Monomial::var(i), GaussianRational::one());
        p
    }

    pub fn monomial(arity: usize, m: Monomial, c: GaussianRational) -> Self {
        let mut p = Self::zero(arity);
        p.add_term(m, c);
        p
    }

    pub fn from_terms(arity: usize, terms: impl IntoIterator<Item = (Monomial, GaussianRational)>) -> Self {
        let mut p = Self::zero(arity);
        for (m, c) in terms {
            debug_assert!(m.0[arity..].iter().all(|&e| e == 0));
            p.add_term(m, c);
        }
        p
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, GaussianRational> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> GaussianRational {
        self.terms.get(m).cloned().unwrap_or_else(GaussianRational::zero)
    }

    /// `Some(c)` when the polynomial is the constant `c` (including 0).
    pub fn as_constant(&self) -> Option<GaussianRational> {
        match self.terms.len() {
            0 => Some(GaussianRational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_arity(&self, other: &Self) -> Result<()> {
        if self.arity == other.arity {
            Ok(())
        } else {
            Err(Error::ArityMismatch {
                left: self.arity,
                right: other.arity,
            })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let mut out = Self::zero(self.arity);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn add_assign_ref(&mut self, other: &Self) {
        assert_eq!(self.arity, other.arity, "arity mismatch");
        for (m, c) in &other.terms {
            self.add_term(*m, c.clone());
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &Self, c: &GaussianRational) {
        assert_eq!(self.arity, other.arity, "arity mismatch");
        if c.is_zero() {
            return;
        }
        for (m, v) in &other.terms {
            self.add_term(*m, v * c);
        }
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.arity);
        }
        MultiPoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.arity);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Lex-leading term.
    pub fn leading(&self) -> Option<(&Monomial, &GaussianRational)> {
        self.terms.iter().next_back()
    }

    /// The homogeneous component of total degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> Self {
        MultiPoly {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    pub fn eval(&self, point: &[GaussianRational]) -> Result<GaussianRational> {
        if point.len() != self.arity {
            return Err(Error::LengthMismatch {
                expected: self.arity,
                got: point.len(),
            });
        }
        let mut powers: Vec<Vec<GaussianRational>> = vec![vec![GaussianRational::one()]; self.arity];
        let mut acc = GaussianRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, table) in powers.iter_mut().enumerate() {
                let e = usize::from(m.0[i]);
                while table.len() <= e {
                    let next = table.last().expect("nonempty") * &point[i];
                    table.push(next);
                }
                if e > 0 {
                    t *= &table[e];
                }
            }
            acc += &t;
        }
        Ok(acc)
    }

    /// Substitutes `x_{i+1} := images[i]`; the result has the images' arity.
    pub fn compose(&self, images: &[MultiPoly]) -> Result<Self> {
        if images.len() != self.arity {
            return Err(Error::LengthMismatch {
                expected: self.arity,
                got: images.len(),
            });
        }
        let target = images.first().map_or(0, MultiPoly::arity);
        if let Some(bad) = images.iter().find(|p| p.arity != target) {
            return Err(Error::ArityMismatch {
                left: target,
                right: bad.arity,
            });
        }
        let mut powers: Vec<Vec<MultiPoly>> = vec![vec![MultiPoly::one(target)]; self.arity];
        let mut acc = MultiPoly::zero(target);
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant(target, c.clone());
            for (i, table) in powers.iter_mut().enumerate() {
                let e = usize::from(m.0[i]);
                while table.len() <= e {
                    let next = table.last().expect("nonempty") * &images[i];
                    table.push(next);
                }
                if e > 0 {
                    t = &t * &table[e];
                }
            }
            acc.add_assign_ref(&t);
        }
        Ok(acc)
    }

    /// Partial derivative in `x_{i+1}`.
    pub fn derivative(&self, i: usize) -> Self {
        let mut out = Self::zero(self.arity);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e > 0 {
                out.add_term(m.with_exponent(i, e - 1), c * &GaussianRational::from_int(i64::from(e)));
            }
        }
        out
    }

    /// Variables renamed by `perm`: `x_{i+1} ↦ x_{perm[i]+1}`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.arity);
        let mut out = Self::zero(self.arity);
        for (m, c) in &self.terms {
            let mut n = Monomial::one();
            for (i, &p) in perm.iter().enumerate() {
                n.0[p] = m.0[i];
            }
            out.add_term(n, c.clone());
        }
        out
    }

    /// Same polynomial viewed in arity `new_arity`, variables shifted by `offset`.
    pub fn embed(&self, new_arity: usize, offset: usize) -> Self {
        assert!(offset + self.arity <= new_arity && new_arity <= MAX_VARS);
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut n = Monomial::one();
            n.0[offset..offset + self.arity].copy_from_slice(&m.0[..self.arity]);
            terms.insert(n, c.clone());
        }
        MultiPoly { arity: new_arity, terms }
    }

    /// Restricts to variables `start..start+len`; `None` if another variable occurs.
    pub fn restrict(&self, start: usize, len: usize) -> Option<Self> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            for (i, &e) in m.0[..self.arity].iter().enumerate() {
                if e != 0 && !(start..start + len).contains(&i) {
                    return None;
                }
            }
            let mut n = Monomial::one();
            n.0[..len].copy_from_slice(&m.0[start..start + len]);
            terms.insert(n, c.clone());
        }
        Some(MultiPoly { arity: len, terms })
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Result<Option<Self>> {
        self.check_arity(d)?;
        let (lm, lc) = d.leading().ok_or(Error::DivisionByZero)?;
        let lc_inv = lc.inv()?;
        if let Some(c) = d.as_constant() {
            return Ok(Some(self.scale(&c.inv()?)));
        }
        let mut rem = self.clone();
        let mut quot = Self::zero(self.arity);
        while let Some((m, c)) = rem.leading() {
            let Some(qm) = m.div(lm) else {
                return Ok(None);
            };
            let qc = c * &lc_inv;
            for (dm, dc) in &d.terms {
                rem.add_term(dm.mul(&qm), -(dc * &qc));
            }
            quot.add_term(qm, qc);
        }
        Ok(Some(quot))
    }

    /// Invariance under every permutation of the variables (adjacent
    /// transpositions generate the symmetric group).
    pub fn is_symmetric(&self) -> bool {
        (0..self.arity.saturating_sub(1)).all(|i| {
            let mut perm: Vec<usize> = (0..self.arity).collect();
            perm.swap(i, i + 1);
            &self.permute(&perm) == self
        })
    }

    /// Fraction-free (Bareiss) determinant of a square polynomial matrix.
    pub fn determinant(matrix: &[Vec<MultiPoly>], arity: usize) -> Result<MultiPoly> {
        let n = matrix.len();
        if n == 0 {
            return Ok(MultiPoly::one(arity));
        }
        let mut a: Vec<Vec<MultiPoly>> = matrix.to_vec();
        if a.iter().any(|row| row.len() != n) {
            return Err(Error::Malformed("determinant of a non-square matrix".into()));
        }
        let mut sign = GaussianRational::one();
        let mut prev = MultiPoly::one(arity);
        for k in 0..n.saturating_sub(1) {
            if a[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                    return Ok(MultiPoly::zero(arity));
                };
                a.swap(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = num
                        .div_exact(&prev)?
                        .ok_or_else(|| Error::Malformed("inexact Bareiss division".into()))?;
                }
            }
            prev = a[k][k].clone();
        }
        Ok(a[n - 1][n - 1].scale(&sign))
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Renders a monomial `x1*x2^3`; the empty string for 1.
pub(crate) fn monomial_text(m: &Monomial, arity: usize, var: &str) -> String {
    let mut parts = Vec::new();
    for i in 0..arity {
        match m.0[i] {
            0 => {}
            1 => parts.push(format!("{var}{}", i + 1)),
            e => parts.push(format!("{var}{}^{e}", i + 1)),
        }
    }
    parts.join("*")
}

/// Appends `coeff*body` to a signed sum, as in `a - b + 3/2*c`.
pub(crate) fn push_term(out: &mut String, coeff: &GaussianRational, body: &str) {
    let (negative, magnitude) = if coeff.is_real() && coeff.re() < &num_rational::BigRational::zero() {
        (true, -coeff)
    } else {
        (false, coeff.clone())
    };
    let coeff_text = if magnitude.is_real() {
        magnitude.to_string()
    } else {
        format!("({magnitude})")
    };
    let term = match (body.is_empty(), magnitude.is_one()) {
        (true, _) => coeff_text,
        (false, true) => body.to_string(),
        (false, false) => format!("{coeff_text}*{body}"),
    };
    if out.is_empty() {
        if negative {
            out.push('-');
        }
    } else {
        out.push_str(if negative { " - " } else { " + " });
    }
    out.push_str(&term);
}

/// `x1^2 - 3/2*x1*x2 + (1+i)*x3`; terms in descending lex order.
impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (m, c) in self.terms.iter().rev() {
            push_term(&mut out, c, &monomial_text(m, self.arity, "x"));
        }
        f.write_str(&out)
    }
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.try_add(rhs).expect("arity mismatch")
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.arity, rhs.arity, "arity mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.try_mul(rhs).expect("arity mismatch")
    }
}

impl<'a> Neg for &'a MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: &MultiPoly) -> MultiPoly {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, i: usize) -> MultiPoly {
        MultiPoly::var(n, i)
    }

    fn c(n: usize, v: i64) -> MultiPoly {
        MultiPoly::constant(n, GaussianRational::from_int(v))
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let p = &x(2, 0) + &x(2, 1);
        let q = &p - &x(2, 1);
        assert_eq!(q, x(2, 0));
        assert_eq!(q.len(), 1);
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn exact_division() {
        let a = &x(2, 0) + &x(2, 1);
        let b = &x(2, 0) - &x(2, 1);
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&a).unwrap(), Some(b.clone()));
        assert_eq!(x(2, 0).div_exact(&a).unwrap(), None);
        assert!(prod.div_exact(&MultiPoly::zero(2)).is_err());
    }

    #[test]
    fn bareiss_matches_cofactor() {
        let n = 3;
        let m = vec![
            vec![x(n, 0), x(n, 1), c(n, 1)],
            vec![x(n, 1), x(n, 2), x(n, 0)],
            vec![c(n, 2), x(n, 0), x(n, 1)],
        ];
        let cof = |a: &MultiPoly, b: &MultiPoly, cc: &MultiPoly, d: &MultiPoly| &(a * d) - &(b * cc);
        let expected = &(&(&m[0][0] * &cof(&m[1][1], &m[1][2], &m[2][1], &m[2][2]))
            - &(&m[0][1] * &cof(&m[1][0], &m[1][2], &m[2][0], &m[2][2])))
            + &(&m[0][2] * &cof(&m[1][0], &m[1][1], &m[2][0], &m[2][1]));
        assert_eq!(MultiPoly::determinant(&m, n).unwrap(), expected);
    }

    #[test]
    fn bareiss_with_pivoting() {
        let n = 2;
        let m = vec![vec![MultiPoly::zero(n), x(n, 0)], vec![x(n, 1), c(n, 3)]];
        assert_eq!(MultiPoly::determinant(&m, n).unwrap(), -(&x(n, 0) * &x(n, 1)));
    }

    #[test]
    fn compose_and_eval_agree() {
        let p = &(&x(2, 0) * &x(2, 0)) - &x(2, 1);
        let images = vec![&x(1, 0) + &c(1, 1), c(1, 2)];
        let q = p.compose(&images).unwrap();
        let at = [GaussianRational::from_int(3)];
        let direct = p
            .eval(&[GaussianRational::from_int(4), GaussianRational::from_int(2)])
            .unwrap();
        assert_eq!(q.eval(&at).unwrap(), direct);
    }

    #[test]
    fn derivative_and_symmetry() {
        let p = &(&x(2, 0) * &x(2, 1)) + &(&x(2, 0) * &x(2, 0));
        assert_eq!(p.derivative(0), &x(2, 1) + &(&c(2, 2) * &x(2, 0)));
        assert!(!p.is_symmetric());
        assert!((&x(3, 0) * &(&x(3, 1) + &x(3, 2)) + &x(3, 1) * &x(3, 2)).is_symmetric());
    }

    #[test]
    fn display() {
        let p = &(&x(2, 0) * &x(2, 1)) - &c(2, 3);
        assert_eq!(p.to_string(), "x1*x2 - 3");
        assert_eq!((&x(2, 0) + &x(2, 1)).to_string(), "x1 + x2");
        assert_eq!(MultiPoly::zero(1).to_string(), "0");
    }
}
