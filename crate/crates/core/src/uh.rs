//! The superalgebra U(h): odd generators `ξ_1..ξ_n` with `ξ_i^2 = x_i`
//! central and `ξ_i ξ_j = -ξ_j ξ_i` for `i != j`.
//!
//! An element is a map from subsets `S ⊆ {1..n}` (bitmask, bit `i-1` for
//! `ξ_i`) to polynomial coefficients; the basis element for `S` is the
//! ascending product `ξ_{s_1} ξ_{s_2} ⋯`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::poly::{monomial_text, push_term, Monomial, MultiPoly, MAX_VARS};
use crate::scalar::GaussianRational;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UhElement {
    arity: usize,
    terms: BTreeMap<u32, MultiPoly>,
}

/// Sign and central factor of `ξ_S · ξ_T`: the sign counts pairs
/// `(a ∈ S, b ∈ T)` with `a > b`, and every `c ∈ S ∩ T` contributes `x_c`.
pub fn basis_product(s: u32, t: u32) -> (bool, u32, u32) {
    let mut inversions = 0u32;
    let mut rest = t;
    while rest != 0 {
        let b = rest.trailing_zeros();
        rest &= rest - 1;
        inversions += (s >> (b + 1)).count_ones();
    }
    (inversions % 2 == 1, s & t, s ^ t)
}

fn mask_monomial(mask: u32) -> Monomial {
    let mut exps = [0u8; MAX_VARS];
    for (i, e) in exps.iter_mut().enumerate() {
        if mask >> i & 1 == 1 {
            *e = 1;
        }
    }
    Monomial::from_exponents(&exps)
}

/// `sign * x^m * p`.
pub(crate) fn shift_poly(p: &MultiPoly, m: &Monomial, negate: bool) -> MultiPoly {
    MultiPoly::from_terms(
        p.arity(),
        p.terms()
            .iter()
            .map(|(k, c)| (k.mul(m), if negate { -c } else { c.clone() })),
    )
}

impl UhElement {
    pub fn zero(arity: usize) -> Self {
        assert!(arity <= MAX_VARS, "arity {arity} exceeds {MAX_VARS}");
        UhElement {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(arity: usize) -> Self {
        Self::from_poly(MultiPoly::one(arity))
    }

    pub fn scalar(arity: usize, c: GaussianRational) -> Self {
        Self::from_poly(MultiPoly::constant(arity, c))
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        let mut e = Self::zero(p.arity());
        e.add_term(0, p);
        e
    }

    /// `ξ_{i+1}` (0-based index).
    pub fn xi(arity: usize, i: usize) -> Self {
        assert!(i < arity, "generator index {i} out of range for arity {arity}");
        let mut e = Self::zero(arity);
        e.add_term(1 << i, MultiPoly::one(arity));
        e
    }

    /// `x_{i+1}` (0-based index).
    pub fn x(arity: usize, i: usize) -> Self {
        Self::from_poly(MultiPoly::var(arity, i))
    }

    pub fn from_terms(arity: usize, terms: impl IntoIterator<Item = (u32, MultiPoly)>) -> Result<Self> {
        let mut e = Self::zero(arity);
        for (mask, p) in terms {
            if p.arity() != arity {
                return Err(Error::ArityMismatch {
                    left: arity,
                    right: p.arity(),
                });
            }
            if arity < 32 && mask >> arity != 0 {
                return Err(Error::Malformed(format!("subset mask {mask:#b} exceeds arity {arity}")));
            }
            e.add_term(mask, p);
        }
        Ok(e)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn terms(&self) -> &BTreeMap<u32, MultiPoly> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, mask: u32) -> MultiPoly {
        self.terms.get(&mask).cloned().unwrap_or_else(|| MultiPoly::zero(self.arity))
    }

    pub fn add_term(&mut self, mask: u32, p: MultiPoly) {
        if p.is_zero() {
            return;
        }
        match self.terms.entry(mask) {
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
        for (m, p) in &other.terms {
            out.add_term(*m, p.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (m, p) in &other.terms {
            out.add_term(*m, -p);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let mut out = Self::zero(self.arity);
        for (s, p) in &self.terms {
            for (t, q) in &other.terms {
                let (negate, common, mask) = basis_product(*s, *t);
                let pq = p * q;
                out.add_term(mask, shift_poly(&pq, &mask_monomial(common), negate));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        let mut out = Self::zero(self.arity);
        for (m, p) in &self.terms {
            out.add_term(*m, p.scale(c));
        }
        out
    }

    pub fn mul_poly(&self, q: &MultiPoly) -> Self {
        let mut out = Self::zero(self.arity);
        for (m, p) in &self.terms {
            out.add_term(*m, p * q);
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.arity), |acc, _| &acc * self)
    }

    /// `(even, odd)` by subset parity.
    pub fn parity_split(&self) -> (Self, Self) {
        let mut even = Self::zero(self.arity);
        let mut odd = Self::zero(self.arity);
        for (m, p) in &self.terms {
            if m.count_ones() % 2 == 0 {
                even.terms.insert(*m, p.clone());
            } else {
                odd.terms.insert(*m, p.clone());
            }
        }
        (even, odd)
    }

    pub fn even_part(&self) -> Self {
        self.parity_split().0
    }

    pub fn odd_part(&self) -> Self {
        self.parity_split().1
    }

    /// Parity of a homogeneous element; `None` for mixed elements. Zero
    /// counts as even.
    pub fn parity(&self) -> Option<u8> {
        let mut seen = None;
        for m in self.terms.keys() {
            let p = (m.count_ones() % 2) as u8;
            match seen {
                None => seen = Some(p),
                Some(q) if q != p => return None,
                _ => {}
            }
        }
        Some(seen.unwrap_or(0))
    }

    /// `[a, b] = ab - (-1)^{p(a)p(b)} ba`, extended bilinearly over the
    /// parity split.
    pub fn super_commutator(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let (ae, ao) = self.parity_split();
        let (be, bo) = other.parity_split();
        let mut out = Self::zero(self.arity);
        for (a, pa) in [(&ae, 0u8), (&ao, 1)] {
            for (b, pb) in [(&be, 0u8), (&bo, 1)] {
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                let ab = a.try_mul(b)?;
                let ba = b.try_mul(a)?;
                let term = if pa & pb == 1 { &ab + &ba } else { &ab - &ba };
                out = &out + &term;
            }
        }
        Ok(out)
    }

    /// Degree of `x^α ξ_S` is `2|α| + |S|`.
    pub fn max_degree(&self) -> Option<u32> {
        self.terms
            .iter()
            .filter_map(|(m, p)| p.total_degree().map(|d| 2 * d + m.count_ones()))
            .max()
    }

    /// All terms of maximal degree.
    pub fn top_term(&self) -> Result<Self> {
        let top = self.max_degree().ok_or(Error::ZeroInput)?;
        let mut out = Self::zero(self.arity);
        for (m, p) in &self.terms {
            let k = m.count_ones();
            if top >= k && (top - k) % 2 == 0 {
                out.add_term(*m, p.homogeneous_part((top - k) / 2));
            }
        }
        Ok(out)
    }

    /// Evaluates every coefficient at `x = s`.
    pub fn substitute_x(&self, s: &[GaussianRational]) -> Result<Self> {
        if s.len() != self.arity {
            return Err(Error::LengthMismatch {
                expected: self.arity,
                got: s.len(),
            });
        }
        let mut out = Self::zero(self.arity);
        for (m, p) in &self.terms {
            out.add_term(*m, MultiPoly::constant(self.arity, p.eval(s)?));
        }
        Ok(out)
    }

    /// Applies `f` to every coefficient polynomial.
    pub fn map_coeffs(&self, mut f: impl FnMut(&MultiPoly) -> MultiPoly) -> Self {
        let mut out = Self::zero(self.arity);
        for (m, p) in &self.terms {
            out.add_term(*m, f(p));
        }
        out
    }

    /// The polynomial when the element is ξ-free.
    pub fn as_poly(&self) -> Option<MultiPoly> {
        match self.terms.len() {
            0 => Some(MultiPoly::zero(self.arity)),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    /// Coordinates `c_i` of an element `Σ c_i ξ_i`; `None` for other shapes.
    pub fn linear_coordinates(&self) -> Option<Vec<MultiPoly>> {
        let mut out = vec![MultiPoly::zero(self.arity); self.arity];
        for (m, p) in &self.terms {
            if m.count_ones() != 1 {
                return None;
            }
            out[m.trailing_zeros() as usize] = p.clone();
        }
        Some(out)
    }

    pub fn from_linear_coordinates(coords: &[MultiPoly]) -> Self {
        let arity = coords.len();
        let mut out = Self::zero(arity);
        for (i, c) in coords.iter().enumerate() {
            out.add_term(1 << i, c.clone());
        }
        out
    }

    /// Parses the canonical text form for a given arity.
    pub fn parse(text: &str, arity: usize) -> Result<Self> {
        if arity > MAX_VARS {
            return Err(Error::ArityTooLarge(arity));
        }
        UhParser {
            src: text.as_bytes(),
            pos: 0,
            arity,
        }
        .parse()
    }

    /// Canonical text: terms by subset mask, then descending exponent order,
    /// e.g. `x1*x2 - xi1*xi2`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (mask, p) in &self.terms {
            let xi: Vec<String> = (0..self.arity)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| format!("xi{}", i + 1))
                .collect();
            let xi = xi.join("*");
            for (m, c) in p.terms().iter().rev() {
                let xs = monomial_text(m, self.arity, "x");
                let body = match (xs.is_empty(), xi.is_empty()) {
                    (true, _) => xi.clone(),
                    (false, true) => xs,
                    (false, false) => format!("{xs}*{xi}"),
                };
                push_term(&mut out, c, &body);
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for UhElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for UhElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UhElement[{}]({})", self.arity, self.render())
    }
}

/// Recursive-descent parser for sums of products such as
/// `3/2*x1^2*xi2 - (1+i)*xi1*xi3 + 4`.
struct UhParser<'a> {
    src: &'a [u8],
    pos: usize,
    arity: usize,
}

impl<'a> UhParser<'a> {
    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ' | b'\t' | b'\n' | b'\r')) {
            self.pos += 1;
        }
    }

    fn err(&self, reason: &str) -> Error {
        Error::parse(self.pos, reason)
    }

    fn number(&mut self) -> Result<u64> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .ok()
            .filter(|s| !s.is_empty())
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::parse(start, "expected a number"))
    }

    fn index(&mut self) -> Result<usize> {
        let at = self.pos;
        let i = self.number()?;
        if i == 0 || i > self.arity as u64 {
            return Err(Error::parse(at, format!("index {i} outside 1..={}", self.arity)));
        }
        Ok(i as usize - 1)
    }

    /// A rational literal `p` or `p/q`, or a parenthesized scalar.
    fn coefficient(&mut self) -> Result<GaussianRational> {
        if self.peek() == Some(b'(') {
            self.pos += 1;
            let start = self.pos;
            while self.peek().is_some_and(|c| c != b')') {
                self.pos += 1;
            }
            if self.peek() != Some(b')') {
                return Err(self.err("unclosed parenthesis"));
            }
            let inner = std::str::from_utf8(&self.src[start..self.pos]).map_err(|_| self.err("invalid UTF-8"))?;
            self.pos += 1;
            return inner.parse().map_err(|e| match e {
                Error::Parse { pos, reason } => Error::parse(start + pos, reason),
                other => other,
            });
        }
        let start = self.pos;
        self.number()?;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            self.number()?;
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).map_err(|_| self.err("invalid UTF-8"))?;
        text.parse().map_err(|e| match e {
            Error::Parse { pos, reason } => Error::parse(start + pos, reason),
            other => other,
        })
    }

    fn factor(&mut self) -> Result<UhElement> {
        match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                if self.peek() == Some(b'i') {
                    self.pos += 1;
                    let i = self.index()?;
                    Ok(UhElement::xi(self.arity, i))
                } else {
                    let i = self.index()?;
                    let mut e = 1u64;
                    if self.peek() == Some(b'^') {
                        self.pos += 1;
                        e = self.number()?;
                        if e > 200 {
                            return Err(self.err("exponent too large"));
                        }
                    }
                    Ok(UhElement::x(self.arity, i).pow(e as u32))
                }
            }
            Some(b'0'..=b'9' | b'(') => Ok(UhElement::scalar(self.arity, self.coefficient()?)),
            _ => Err(self.err("expected a factor")),
        }
    }

    fn term(&mut self) -> Result<UhElement> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            if self.peek() != Some(b'*') {
                return Ok(acc);
            }
            self.pos += 1;
            self.skip_ws();
            let f = self.factor()?;
            if acc.max_degree().unwrap_or(0) + f.max_degree().unwrap_or(0) > 400 {
                return Err(self.err("term degree too large"));
            }
            acc = &acc * &f;
        }
    }

    fn parse(mut self) -> Result<UhElement> {
        let mut acc = UhElement::zero(self.arity);
        self.skip_ws();
        let mut first = true;
        loop {
            self.skip_ws();
            let negative = match self.peek() {
                Some(b'-') => {
                    self.pos += 1;
                    true
                }
                Some(b'+') if !first => {
                    self.pos += 1;
                    false
                }
                None if !first => return Ok(acc),
                _ if first => false,
                _ => return Err(self.err("expected '+' or '-'")),
            };
            self.skip_ws();
            let t = self.term()?;
            acc = if negative { &acc - &t } else { &acc + &t };
            first = false;
        }
    }
}

impl<'a> Add<&'a UhElement> for &'a UhElement {
    type Output = UhElement;
    fn add(self, rhs: &UhElement) -> UhElement {
        self.try_add(rhs).expect("arity mismatch")
    }
}

impl<'a> Sub<&'a UhElement> for &'a UhElement {
    type Output = UhElement;
    fn sub(self, rhs: &UhElement) -> UhElement {
        self.try_sub(rhs).expect("arity mismatch")
    }
}

impl<'a> Mul<&'a UhElement> for &'a UhElement {
    type Output = UhElement;
    fn mul(self, rhs: &UhElement) -> UhElement {
        self.try_mul(rhs).expect("arity mismatch")
    }
}

impl<'a> Neg for &'a UhElement {
    type Output = UhElement;
    fn neg(self) -> UhElement {
        self.map_coeffs(|p| -p)
    }
}

impl Neg for UhElement {
    type Output = UhElement;
    fn neg(self) -> UhElement {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<UhElement> for UhElement {
            type Output = UhElement;
            fn $m(self, rhs: UhElement) -> UhElement {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a UhElement> for UhElement {
            type Output = UhElement;
            fn $m(self, rhs: &UhElement) -> UhElement {
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

    fn xi(n: usize, i: usize) -> UhElement {
        UhElement::xi(n, i - 1)
    }

    fn x(n: usize, i: usize) -> UhElement {
        UhElement::x(n, i - 1)
    }

    #[test]
    fn defining_relations() {
        assert_eq!(&xi(2, 1) * &xi(2, 1), x(2, 1));
        assert_eq!(&xi(2, 2) * &xi(2, 1), -(&xi(2, 1) * &xi(2, 2)));
        let s = &xi(2, 1) + &xi(2, 2);
        assert_eq!(&s * &s, &x(2, 1) + &x(2, 2));
    }

    #[test]
    fn commutators() {
        let two = GaussianRational::from_int(2);
        assert_eq!(xi(2, 1).super_commutator(&xi(2, 1)).unwrap(), x(2, 1).scale(&two));
        assert!(xi(2, 1).super_commutator(&xi(2, 2)).unwrap().is_zero());
        assert!(x(2, 1).super_commutator(&xi(2, 2)).unwrap().is_zero());
        assert!(UhElement::xi(2, 0).try_mul(&UhElement::xi(3, 0)).is_err());
    }

    #[test]
    fn split_and_top() {
        let a = &(&x(2, 1) - &xi(2, 1)) * &(&x(2, 2) + &xi(2, 2));
        let (e, o) = a.parity_split();
        assert_eq!(e, &(&x(2, 1) * &x(2, 2)) - &(&xi(2, 1) * &xi(2, 2)));
        assert_eq!(o, &(&x(2, 1) * &xi(2, 2)) - &(&x(2, 2) * &xi(2, 1)));
        assert_eq!((&x(1, 1) + &xi(1, 1)).top_term().unwrap(), x(1, 1));
        assert_eq!(e.top_term().unwrap(), &x(2, 1) * &x(2, 2));
        assert_eq!(UhElement::zero(2).top_term(), Err(Error::ZeroInput));
    }

    #[test]
    fn substitution() {
        let s = [GaussianRational::from_int(3), GaussianRational::from_int(5)];
        let a = &x(2, 1) * &xi(2, 2);
        assert_eq!(a.substitute_x(&s).unwrap(), xi(2, 2).scale(&s[0]));
        assert!(a.substitute_x(&s[..1]).is_err());
    }

    #[test]
    fn render_and_parse() {
        let z1 = &(&x(2, 1) * &x(2, 2)) - &(&xi(2, 1) * &xi(2, 2));
        assert_eq!(z1.render(), "x1*x2 - xi1*xi2");
        assert_eq!(UhElement::parse("x1*x2 - xi1*xi2", 2).unwrap(), z1);
        assert_eq!(UhElement::parse("xi2*xi1", 2).unwrap(), &xi(2, 2) * &xi(2, 1));
        let weird = UhElement::parse("-(1+i)*x1^2*xi2 + 3/2 - xi1", 2).unwrap();
        assert_eq!(UhElement::parse(&weird.render(), 2).unwrap(), weird);
        assert_eq!(UhElement::parse("0", 3).unwrap(), UhElement::zero(3));
        for bad in ["", "x0", "x3", "xi", "1 +", "x1 x2", "(1+i", "+x1", "x1^"] {
            assert!(UhElement::parse(bad, 2).is_err(), "{bad:?}");
        }
    }
}
