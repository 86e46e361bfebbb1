//! Exact Gaussian rationals, the base field Q(i) of every computation.
//!
//! Values are always stored reduced (`BigRational` normalizes on
//! construction), so structural equality is value equality.

use std::cmp::Ordering;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer, MapAccess, Visitor};
use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An element `re + im*i` of Q(i).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    re: BigRational,
    im: BigRational,
}

pub type Q = BigRational;

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianRational { re, im }
    }

    pub fn real(re: BigRational) -> Self {
        GaussianRational {
            re,
            im: BigRational::zero(),
        }
    }

    pub fn from_int(v: i64) -> Self {
        Self::real(BigRational::from_integer(BigInt::from(v)))
    }

    /// `num/den`; panics if `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        Self::real(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn complex(re: i64, im: i64) -> Self {
        GaussianRational {
            re: BigRational::from_integer(BigInt::from(re)),
            im: BigRational::from_integer(BigInt::from(im)),
        }
    }

    pub fn i() -> Self {
        Self::complex(0, 1)
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianRational {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    /// `|a|^2 = a * conj(a)`, a nonnegative rational.
    pub fn norm(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.im.is_zero() {
            return Ok(Self::real(self.re.recip()));
        }
        let n = self.norm();
        Ok(GaussianRational {
            re: &self.re / &n,
            im: -(&self.im / &n),
        })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
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

    /// Exact square root in Q(i), if one exists.
    ///
    /// The returned root has positive real part, or zero real part and
    /// nonnegative imaginary part.
    pub fn sqrt(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.im.is_zero() {
            return if self.re.is_positive() {
                rational_sqrt(&self.re).map(Self::real)
            } else {
                rational_sqrt(&-&self.re).map(|r| GaussianRational {
                    re: BigRational::zero(),
                    im: r,
                })
            };
        }
        // (x + y i)^2 = a + b i  =>  x^2 = (a + m)/2, y^2 = (m - a)/2, m = |a + b i|
        let m = rational_sqrt(&self.norm())?;
        let two = BigRational::from_integer(BigInt::from(2));
        let x = rational_sqrt(&((&self.re + &m) / &two))?;
        let y_abs = rational_sqrt(&((&m - &self.re) / &two))?;
        let y = if self.im.is_negative() { -y_abs } else { y_abs };
        let root = GaussianRational { re: x, im: y };
        debug_assert_eq!(&(&root * &root), self);
        Some(root)
    }

    /// Parses a comma-separated list of scalars, e.g. `"1,0,3,-1,-1"`.
    pub fn parse_list(text: &str) -> Result<Vec<Self>> {
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return Ok(Vec::new());
        }
        let mut out = Vec::new();
        let mut offset = 0;
        for part in trimmed.split(',') {
            let v = part.parse::<Self>().map_err(|e| match e {
                Error::Parse { pos, reason } => Error::parse(offset + pos, reason),
                other => other,
            })?;
            out.push(v);
            offset += part.len() + 1;
        }
        Ok(out)
    }

    /// Lowest-terms text of one rational part, `p` or `p/q`.
    pub fn rational_text(q: &BigRational) -> String {
        if q.denom().is_one() {
            q.numer().to_string()
        } else {
            format!("{}/{}", q.numer(), q.denom())
        }
    }

    /// Approximate value, for seeding exact searches only.
    pub(crate) fn to_f64_pair(&self) -> (f64, f64) {
        (rational_to_f64(&self.re), rational_to_f64(&self.im))
    }
}

pub(crate) fn rational_to_f64(q: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or_else(|| {
        let n = q.numer().to_f64().unwrap_or(f64::MAX);
        let d = q.denom().to_f64().unwrap_or(f64::MAX);
        n / d
    })
}

fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    if &(&n * &n) == q.numer() && &(&d * &d) == q.denom() {
        Some(BigRational::new(n, d))
    } else {
        None
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        GaussianRational {
            re: BigRational::zero(),
            im: BigRational::zero(),
        }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        Self::real(BigRational::one())
    }
    fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }
}

impl From<i64> for GaussianRational {
    fn from(v: i64) -> Self {
        Self::from_int(v)
    }
}

impl From<BigRational> for GaussianRational {
    fn from(v: BigRational) -> Self {
        Self::real(v)
    }
}

/// Lexicographic on `(re, im)`. This is a canonical total order for sorting
/// multisets; it is not compatible with the field operations.
impl Ord for GaussianRational {
    fn cmp(&self, other: &Self) -> Ordering {
        self.re.cmp(&other.re).then_with(|| self.im.cmp(&other.im))
    }
}

impl PartialOrd for GaussianRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<'a> Add<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re + &rhs.re,
            im: if self.im.is_zero() && rhs.im.is_zero() {
                BigRational::zero()
            } else {
                &self.im + &rhs.im
            },
        }
    }
}

impl<'a> Sub<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re - &rhs.re,
            im: if self.im.is_zero() && rhs.im.is_zero() {
                BigRational::zero()
            } else {
                &self.im - &rhs.im
            },
        }
    }
}

impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        match (self.im.is_zero(), rhs.im.is_zero()) {
            (true, true) => GaussianRational::real(&self.re * &rhs.re),
            (true, false) => GaussianRational {
                re: &self.re * &rhs.re,
                im: &self.re * &rhs.im,
            },
            (false, true) => GaussianRational {
                re: &self.re * &rhs.re,
                im: &self.im * &rhs.re,
            },
            (false, false) => GaussianRational {
                re: &self.re * &rhs.re - &self.im * &rhs.im,
                im: &self.re * &rhs.im + &self.im * &rhs.re,
            },
        }
    }
}

impl<'a> Neg for &'a GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational {
            re: -self.re,
            im: -self.im,
        }
    }
}

/// Panics on division by zero; use [`GaussianRational::checked_div`] for a
/// fallible variant.
impl<'a> Div<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn div(self, rhs: &GaussianRational) -> GaussianRational {
        self.checked_div(rhs).expect("division by zero")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, rhs: &GaussianRational) -> GaussianRational {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<GaussianRational> for &'a GaussianRational {
            type Output = GaussianRational;
            fn $m(self, rhs: GaussianRational) -> GaussianRational {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl<'a> AddAssign<&'a GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re += &rhs.re;
        if !rhs.im.is_zero() {
            self.im += &rhs.im;
        }
    }
}

impl AddAssign for GaussianRational {
    fn add_assign(&mut self, rhs: GaussianRational) {
        *self += &rhs;
    }
}

impl<'a> SubAssign<&'a GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        self.re -= &rhs.re;
        if !rhs.im.is_zero() {
            self.im -= &rhs.im;
        }
    }
}

impl SubAssign for GaussianRational {
    fn sub_assign(&mut self, rhs: GaussianRational) {
        *self -= &rhs;
    }
}

impl<'a> MulAssign<&'a GaussianRational> for GaussianRational {
    fn mul_assign(&mut self, rhs: &GaussianRational) {
        *self = &*self * rhs;
    }
}

impl MulAssign for GaussianRational {
    fn mul_assign(&mut self, rhs: GaussianRational) {
        *self = &*self * &rhs;
    }
}

impl Sum for GaussianRational {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        let mut acc = Self::zero();
        for v in iter {
            acc += &v;
        }
        acc
    }
}

impl<'a> Sum<&'a GaussianRational> for GaussianRational {
    fn sum<I: Iterator<Item = &'a GaussianRational>>(iter: I) -> Self {
        let mut acc = Self::zero();
        for v in iter {
            acc += v;
        }
        acc
    }
}

impl Product for GaussianRational {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        let mut acc = Self::one();
        for v in iter {
            acc *= &v;
        }
        acc
    }
}

impl<'a> Product<&'a GaussianRational> for GaussianRational {
    fn product<I: Iterator<Item = &'a GaussianRational>>(iter: I) -> Self {
        let mut acc = Self::one();
        for v in iter {
            acc *= v;
        }
        acc
    }
}

/// Canonical text: `3`, `-1/2`, `i`, `-2i`, `1/2+3i`, `1-i`.
impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let im_text = |q: &BigRational| -> String {
            if q.is_one() {
                "i".to_string()
            } else if (-q).is_one() {
                "-i".to_string()
            } else {
                format!("{}i", Self::rational_text(q))
            }
        };
        if self.im.is_zero() {
            write!(f, "{}", Self::rational_text(&self.re))
        } else if self.re.is_zero() {
            write!(f, "{}", im_text(&self.im))
        } else {
            let im = im_text(&self.im);
            if im.starts_with('-') {
                write!(f, "{}{}", Self::rational_text(&self.re), im)
            } else {
                write!(f, "{}+{}", Self::rational_text(&self.re), im)
            }
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Hand-rolled scanner for the scalar literal grammar
///
/// ```text
/// RAT   := INT | INT "/" POSINT
/// GAUSS := RAT | RAT ("+"|"-") RAT "i" | RAT "i"
/// ```
///
/// A bare `i` (optionally signed, or after `RAT +`) stands for coefficient 1.
struct ScalarParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> ScalarParser<'a> {
    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ' | b'\t')) {
            self.pos += 1;
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if self.pos == start {
            None
        } else {
            // ASCII digits only, always valid UTF-8.
            std::str::from_utf8(&self.src[start..self.pos]).ok()
        }
    }

    /// Unsigned rational; `None` if no digits at the cursor.
    fn unsigned_rat(&mut self) -> Result<Option<BigRational>> {
        let Some(num) = self.digits() else {
            return Ok(None);
        };
        let num: BigInt = num.parse().map_err(|_| Error::parse(self.pos, "bad integer"))?;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let at = self.pos;
            let den = self
                .digits()
                .ok_or_else(|| Error::parse(at, "expected denominator"))?;
            let den: BigInt = den.parse().map_err(|_| Error::parse(at, "bad integer"))?;
            if den.is_zero() {
                return Err(Error::parse(at, "zero denominator"));
            }
            return Ok(Some(BigRational::new(num, den)));
        }
        Ok(Some(BigRational::from_integer(num)))
    }

    fn sign(&mut self) -> Option<bool> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Some(true)
            }
            Some(b'+') => {
                self.pos += 1;
                Some(false)
            }
            _ => None,
        }
    }

    fn parse(mut self) -> Result<GaussianRational> {
        self.skip_ws();
        let negative = self.sign() == Some(true);
        self.skip_ws();
        let first = self.unsigned_rat()?;
        let apply = |q: BigRational, neg: bool| if neg { -q } else { q };
        let mut re = BigRational::zero();
        let mut im = BigRational::zero();
        match (first, self.peek()) {
            (None, Some(b'i')) => {
                self.pos += 1;
                im = apply(BigRational::one(), negative);
            }
            (None, _) => return Err(Error::parse(self.pos, "expected a number")),
            (Some(q), Some(b'i')) => {
                self.pos += 1;
                im = apply(q, negative);
            }
            (Some(q), _) => {
                re = apply(q, negative);
                self.skip_ws();
                if let Some(neg) = self.sign() {
                    self.skip_ws();
                    let at = self.pos;
                    let q = self.unsigned_rat()?.unwrap_or_else(BigRational::one);
                    if self.peek() != Some(b'i') {
                        return Err(Error::parse(at, "expected imaginary part ending in 'i'"));
                    }
                    self.pos += 1;
                    im = apply(q, neg);
                }
            }
        }
        self.skip_ws();
        if self.pos != self.src.len() {
            return Err(Error::parse(self.pos, "trailing characters"));
        }
        Ok(GaussianRational { re, im })
    }
}

impl FromStr for GaussianRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ScalarParser {
            src: s.as_bytes(),
            pos: 0,
        }
        .parse()
    }
}

impl Serialize for GaussianRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("GaussianRational", 2)?;
        st.serialize_field("re", &Self::rational_text(&self.re))?;
        st.serialize_field("im", &Self::rational_text(&self.im))?;
        st.end()
    }
}

fn parse_rat_field<E: de::Error>(s: &str) -> std::result::Result<BigRational, E> {
    let v: GaussianRational = s.parse().map_err(E::custom)?;
    if !v.is_real() {
        return Err(E::custom("component must be rational"));
    }
    Ok(v.re)
}

/// Accepts the canonical object form or a scalar literal string.
impl<'de> Deserialize<'de> for GaussianRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = GaussianRational;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a scalar literal or {\"re\":..,\"im\":..}")
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Self::Value, E> {
                v.parse().map_err(E::custom)
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Self::Value, E> {
                Ok(GaussianRational::from_int(v))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Self::Value, E> {
                Ok(GaussianRational::real(BigRational::from_integer(BigInt::from(v))))
            }

            fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> std::result::Result<Self::Value, A::Error> {
                let mut re = None;
                let mut im = None;
                while let Some(key) = map.next_key::<String>()? {
                    let text: String = map.next_value()?;
                    match key.as_str() {
                        "re" if re.is_none() => re = Some(parse_rat_field(&text)?),
                        "im" if im.is_none() => im = Some(parse_rat_field(&text)?),
                        other => return Err(de::Error::custom(format!("unexpected key {other:?}"))),
                    }
                }
                Ok(GaussianRational {
                    re: re.ok_or_else(|| de::Error::missing_field("re"))?,
                    im: im.unwrap_or_else(BigRational::zero),
                })
            }
        }
        deserializer.deserialize_any(V)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> GaussianRational {
        s.parse().unwrap()
    }

    #[test]
    fn basic_identities() {
        assert_eq!(g("1+i") * g("1-i"), g("2"));
        assert_eq!(g("i").inv().unwrap(), g("-i"));
        assert_eq!(g("1/2") + g("1/3"), g("5/6"));
        assert_eq!(GaussianRational::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn conj_norm_is_real() {
        let a = g("3/4-5/7i");
        let p = &a * &a.conj();
        assert!(p.is_real());
        assert_eq!(p.re(), &a.norm());
    }

    #[test]
    fn grammar() {
        assert_eq!(g("-3"), GaussianRational::from_int(-3));
        assert_eq!(g("2/4"), GaussianRational::ratio(1, 2));
        assert_eq!(g("1/2-3/4i"), GaussianRational::new(Q::new(1.into(), 2.into()), Q::new((-3).into(), 4.into())));
        assert_eq!(g("5i"), GaussianRational::complex(0, 5));
        assert_eq!(g("-i"), GaussianRational::complex(0, -1));
        assert_eq!(g(" 1 + i "), GaussianRational::complex(1, 1));
        for bad in ["", "/2", "1/0", "1/-2", "1+2", "i1", "1 2", "--1", "1/2/3", "x"] {
            assert!(bad.parse::<GaussianRational>().is_err(), "{bad:?} should be rejected");
        }
    }

    #[test]
    fn display_roundtrip() {
        for s in ["0", "3", "-1/2", "i", "-i", "2i", "1/2+3i", "1-i", "-7/3-2/5i"] {
            assert_eq!(g(s).to_string(), s);
            assert_eq!(g(&g(s).to_string()), g(s));
        }
    }

    #[test]
    fn json_form() {
        let v = g("1/2-i");
        let text = serde_json::to_string(&v).unwrap();
        assert_eq!(text, r#"{"re":"1/2","im":"-1"}"#);
        let back: GaussianRational = serde_json::from_str(&text).unwrap();
        assert_eq!(back, v);
        let lit: GaussianRational = serde_json::from_str("\"3+4i\"").unwrap();
        assert_eq!(lit, GaussianRational::complex(3, 4));
        assert!(serde_json::from_str::<GaussianRational>(r#"{"re":"i"}"#).is_err());
    }

    #[test]
    fn square_roots() {
        assert_eq!(g("9/4").sqrt(), Some(g("3/2")));
        assert_eq!(g("-4").sqrt(), Some(g("2i")));
        assert_eq!(g("2i").sqrt(), Some(g("1+i")));
        assert_eq!(g("3+4i").sqrt(), Some(g("2+i")));
        assert_eq!(g("2").sqrt(), None);
        let r = g("-5-12i").sqrt().unwrap();
        assert_eq!(&r * &r, g("-5-12i"));
    }

    #[test]
    fn list_parse() {
        let v = GaussianRational::parse_list("1,0,3,-1,-1").unwrap();
        assert_eq!(v.len(), 5);
        assert!(GaussianRational::parse_list("").unwrap().is_empty());
        assert!(GaussianRational::parse_list("1,,2").is_err());
    }
}
