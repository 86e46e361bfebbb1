//! Graded tensor products `U(h_m) ⊗ U(h_n)`.
//!
//! Keys are pairs of subset masks; coefficients are polynomials in
//! `m + n` variables, the first `m` belonging to the left factor.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::poly::{monomial_text, push_term, Monomial, MultiPoly, MAX_VARS};
use crate::scalar::GaussianRational;
use crate::uh::{basis_product, shift_poly, UhElement};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TensorElement {
    left: usize,
    right: usize,
    terms: BTreeMap<(u32, u32), MultiPoly>,
}

/// Sign convention for swapping tensor factors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FlipConvention {
    /// `a ⊗ b ↦ b ⊗ a`.
    Plain,
    /// `a ⊗ b ↦ (-1)^{p(a)p(b)} b ⊗ a`.
    Koszul,
}

impl fmt::Display for FlipConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FlipConvention::Plain => "plain",
            FlipConvention::Koszul => "koszul",
        })
    }
}

fn mask_monomial_at(mask: u32, offset: usize) -> Monomial {
    let mut exps = [0u8; MAX_VARS];
    let mut rest = mask;
    while rest != 0 {
        let b = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        exps[offset + b] = 1;
    }
    Monomial::from_exponents(&exps)
}

impl TensorElement {
    pub fn zero(left: usize, right: usize) -> Self {
        assert!(left + right <= MAX_VARS, "tensor arity exceeds {MAX_VARS}");
        TensorElement {
            left,
            right,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(left: usize, right: usize) -> Self {
        let mut t = Self::zero(left, right);
        t.add_term((0, 0), MultiPoly::one(left + right));
        t
    }

    pub fn arities(&self) -> (usize, usize) {
        (self.left, self.right)
    }

    pub fn terms(&self) -> &BTreeMap<(u32, u32), MultiPoly> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, key: (u32, u32), p: MultiPoly) {
        if p.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(p);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                o.get_mut().add_assign_ref(&p);
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if (self.left, self.right) == (other.left, other.right) {
            Ok(())
        } else {
            Err(Error::ArityMismatch {
                left: self.left + self.right,
                right: other.left + other.right,
            })
        }
    }

    /// `a ⊗ b`.
    pub fn from_pair(a: &UhElement, b: &UhElement) -> Self {
        let (m, n) = (a.arity(), b.arity());
        let mut out = Self::zero(m, n);
        for (s, p) in a.terms() {
            let pe = p.embed(m + n, 0);
            for (t, q) in b.terms() {
                out.add_term((*s, *t), &pe * &q.embed(m + n, m));
            }
        }
        out
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        let mut out = Self::zero(self.left, self.right);
        for (k, p) in &self.terms {
            out.add_term(*k, p.scale(c));
        }
        out
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (k, p) in &other.terms {
            out.add_term(*k, p.clone());
        }
        Ok(out)
    }

    /// `(a⊗b)(c⊗d) = (-1)^{p(b)p(c)} ac ⊗ bd`.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(self.left, self.right);
        for ((a, b), p) in &self.terms {
            for ((c, d), q) in &other.terms {
                let (neg_l, common_l, mask_l) = basis_product(*a, *c);
                let (neg_r, common_r, mask_r) = basis_product(*b, *d);
                let koszul = b.count_ones() % 2 == 1 && c.count_ones() % 2 == 1;
                let negate = neg_l ^ neg_r ^ koszul;
                let shift = mask_monomial_at(common_l, 0).mul(&mask_monomial_at(common_r, self.left));
                out.add_term((mask_l, mask_r), shift_poly(&(p * q), &shift, negate));
            }
        }
        Ok(out)
    }

    /// `U(h_m) ⊗ U(h_n) → U(h_n) ⊗ U(h_m)`.
    pub fn flip(&self, convention: FlipConvention) -> Self {
        let (m, n) = (self.left, self.right);
        let perm: Vec<usize> = (0..m + n).map(|i| if i < m { i + n } else { i - m }).collect();
        let mut out = Self::zero(n, m);
        for ((a, b), p) in &self.terms {
            let negate = convention == FlipConvention::Koszul && a.count_ones() % 2 == 1 && b.count_ones() % 2 == 1;
            let q = p.permute(&perm);
            out.add_term((*b, *a), if negate { -q } else { q });
        }
        out
    }

    /// Parity of a homogeneous element (zero counts as even).
    pub fn parity(&self) -> Option<u8> {
        let mut seen = None;
        for (a, b) in self.terms.keys() {
            let p = ((a.count_ones() + b.count_ones()) % 2) as u8;
            match seen {
                None => seen = Some(p),
                Some(q) if q != p => return None,
                _ => {}
            }
        }
        Some(seen.unwrap_or(0))
    }

    /// `ξ_1⊗1`-style rendering: left part, `(x)` separator, right part.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let n = self.left + self.right;
        for ((a, b), p) in &self.terms {
            let side = |mask: u32, len: usize| -> String {
                let v: Vec<String> = (0..len).filter(|i| mask >> i & 1 == 1).map(|i| format!("xi{}", i + 1)).collect();
                if v.is_empty() {
                    "1".to_string()
                } else {
                    v.join("*")
                }
            };
            for (m, c) in p.terms().iter().rev() {
                let lx = monomial_text(&Monomial::from_exponents(&m.exponents(n)[..self.left]), self.left, "x");
                let rx = monomial_text(&Monomial::from_exponents(&m.exponents(n)[self.left..]), self.right, "x");
                let join = |x: String, xi: String| {
                    if x.is_empty() {
                        xi
                    } else if xi == "1" {
                        x
                    } else {
                        format!("{x}*{xi}")
                    }
                };
                let body = format!(
                    "[{} (x) {}]",
                    join(lx, side(*a, self.left)),
                    join(rx, side(*b, self.right))
                );
                push_term(&mut out, c, &body);
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// Rewrites `a ∈ U(h_{n1+n2})` in `U(h_{n1}) ⊗ U(h_{n2})`:
/// `ξ_k ↦ ξ_k ⊗ 1` for `k ≤ n1` and `ξ_{n1+k} ↦ 1 ⊗ ξ_k`.
pub fn split_embed(a: &UhElement, n1: usize, n2: usize) -> Result<TensorElement> {
    if n1 == 0 || n2 == 0 || n1 + n2 != a.arity() {
        return Err(Error::InvalidSplit {
            left: n1,
            right: n2,
            n: a.arity(),
        });
    }
    let low = (1u32 << n1) - 1;
    let mut out = TensorElement::zero(n1, n2);
    for (s, p) in a.terms() {
        out.add_term((s & low, s >> n1), p.clone());
    }
    Ok(out)
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TensorElement[{}|{}]({})", self.left, self.right, self.render())
    }
}

impl<'a> Add<&'a TensorElement> for &'a TensorElement {
    type Output = TensorElement;
    fn add(self, rhs: &TensorElement) -> TensorElement {
        self.try_add(rhs).expect("arity mismatch")
    }
}

impl<'a> Neg for &'a TensorElement {
    type Output = TensorElement;
    fn neg(self) -> TensorElement {
        self.scale(&-GaussianRational::from_int(1))
    }
}

impl<'a> Sub<&'a TensorElement> for &'a TensorElement {
    type Output = TensorElement;
    fn sub(self, rhs: &TensorElement) -> TensorElement {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a TensorElement> for &'a TensorElement {
    type Output = TensorElement;
    fn mul(self, rhs: &TensorElement) -> TensorElement {
        self.try_mul(rhs).expect("arity mismatch")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedding_examples() {
        let xi1 = UhElement::xi(2, 0);
        let xi2 = UhElement::xi(2, 1);
        let one1 = UhElement::one(1);
        let e1 = UhElement::xi(1, 0);
        assert_eq!(split_embed(&xi1, 1, 1).unwrap(), TensorElement::from_pair(&e1, &one1));
        assert_eq!(split_embed(&(&xi1 * &xi2), 1, 1).unwrap(), TensorElement::from_pair(&e1, &e1));
        assert!(split_embed(&xi1, 2, 1).is_err());
        assert!(split_embed(&xi1, 0, 2).is_err());
    }

    #[test]
    fn koszul_rule() {
        let e = UhElement::xi(1, 0);
        let one = UhElement::one(1);
        let a = TensorElement::from_pair(&one, &e);
        let b = TensorElement::from_pair(&e, &one);
        // (1⊗ξ)(ξ⊗1) = -ξ⊗ξ, (ξ⊗1)(1⊗ξ) = ξ⊗ξ
        assert_eq!(&a * &b, -&TensorElement::from_pair(&e, &e));
        assert_eq!(&b * &a, TensorElement::from_pair(&e, &e));
    }

    #[test]
    fn flip_signs() {
        let e = UhElement::xi(1, 0);
        let t = TensorElement::from_pair(&e, &e);
        assert_eq!(t.flip(FlipConvention::Plain), t);
        assert_eq!(t.flip(FlipConvention::Koszul), -&t);
        let x = UhElement::x(2, 0);
        let u = TensorElement::from_pair(&x, &UhElement::one(1));
        let f = u.flip(FlipConvention::Plain);
        assert_eq!(f, TensorElement::from_pair(&UhElement::one(1), &x));
    }
}
