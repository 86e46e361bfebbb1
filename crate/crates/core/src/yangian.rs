//! The super Yangian YQ(1) through its images in U(h): generator images,
//! relation checks, the coproduct diagram, one-dimensional modules `Γ_f`,
//! twists and weight spaces.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::check::Check;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::meataxe::algebra_closure;
use crate::modules::{Label, SuperModule};
use crate::scalar::GaussianRational;
use crate::tensor::{split_embed, FlipConvention, TensorElement};
use crate::uh::UhElement;
use crate::univariate::UniPoly;
use crate::wgen::{phi, u, z};

type G = GaussianRational;

/// `T^{(m)}_{i,j}` with `i, j ∈ {1, -1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawYGen", into = "RawYGen")]
pub struct YGen {
    i: i8,
    j: i8,
    m: usize,
}

#[derive(Serialize, Deserialize)]
struct RawYGen {
    i: i64,
    j: i64,
    m: usize,
}

impl TryFrom<RawYGen> for YGen {
    type Error = Error;
    fn try_from(r: RawYGen) -> Result<Self> {
        let sign = |v: i64| match v {
            1 => Ok(1i8),
            -1 => Ok(-1i8),
            _ => Err(Error::Malformed(format!("Yangian index must be 1 or -1, got {v}"))),
        };
        Ok(YGen::new(sign(r.i)?, sign(r.j)?, r.m))
    }
}

impl From<YGen> for RawYGen {
    fn from(g: YGen) -> Self {
        RawYGen {
            i: g.i.into(),
            j: g.j.into(),
            m: g.m,
        }
    }
}

/// `p(1) = 0`, `p(-1) = 1`.
pub fn index_parity(i: i8) -> u8 {
    u8::from(i < 0)
}

impl YGen {
    pub fn new(i: i8, j: i8, m: usize) -> Self {
        assert!(i.abs() == 1 && j.abs() == 1, "Yangian indices are 1 or -1");
        YGen { i, j, m }
    }

    pub fn i(&self) -> i8 {
        self.i
    }

    pub fn j(&self) -> i8 {
        self.j
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn parity(&self) -> u8 {
        (index_parity(self.i) + index_parity(self.j)) % 2
    }

    /// Every generator of order at most `order`.
    pub fn all(order: usize) -> Vec<YGen> {
        let mut out = Vec::new();
        for m in 0..=order {
            for i in [1, -1] {
                for j in [1, -1] {
                    out.push(YGen::new(i, j, m));
                }
            }
        }
        out
    }
}

impl fmt::Display for YGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T^({})_{{{},{}}}", self.m, self.i, self.j)
    }
}

impl FromStr for YGen {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::parse(0, format!("expected T^(m)_{{i,j}}, got {s:?}"));
        let rest = s.trim().strip_prefix("T^(").ok_or_else(bad)?;
        let (m, rest) = rest.split_once(")_{").ok_or_else(bad)?;
        let inner = rest.strip_suffix('}').ok_or_else(bad)?;
        let (i, j) = inner.split_once(',').ok_or_else(bad)?;
        let idx = |t: &str| match t.trim() {
            "1" => Ok(1i8),
            "-1" => Ok(-1i8),
            _ => Err(bad()),
        };
        Ok(YGen::new(idx(i)?, idx(j)?, m.parse().map_err(|_| bad())?))
    }
}

fn sign_of(negative: bool) -> G {
    G::from_int(if negative { -1 } else { 1 })
}

/// Images `φ_n(T^{(m)}_{i,j})` with the `u_k(d)` computed once.
#[derive(Clone, Debug)]
pub struct YangianImages {
    n: usize,
    u_even: Vec<UhElement>,
    u_odd: Vec<UhElement>,
}

impl YangianImages {
    pub fn new(n: usize) -> Self {
        YangianImages {
            n,
            u_even: (0..=n).map(|k| u(n, k, 0)).collect(),
            u_odd: (0..=n).map(|k| u(n, k, 1)).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `(1,1,m) ↦ (-1)^m u_m(0)`, `(-1,1,m) ↦ (-1)^m u_m(1)`, and
    /// `T^{(m)}_{-i,-j} = (-1)^m T^{(m)}_{i,j}` for the other two.
    pub fn image(&self, g: YGen) -> UhElement {
        let m = g.m;
        if m > self.n {
            return UhElement::zero(self.n);
        }
        let odd_m = m % 2 == 1;
        match (g.i, g.j) {
            (1, 1) => self.u_even[m].scale(&sign_of(odd_m)),
            (-1, 1) => self.u_odd[m].scale(&sign_of(odd_m)),
            // (-1)^m · (-1)^m u_m(d)
            (-1, -1) => self.u_even[m].clone(),
            _ => self.u_odd[m].clone(),
        }
    }

    pub fn t(&self, i: i8, j: i8, m: usize) -> UhElement {
        self.image(YGen::new(i, j, m))
    }

    /// `η_i = (-½)^i ad^i(T^{(2)}_{1,1})(T^{(1)}_{1,-1})`.
    pub fn eta(&self, i: usize) -> UhElement {
        let t2 = self.t(1, 1, 2);
        let mut e = self.t(1, -1, 1);
        let c = G::ratio(-1, 2);
        for _ in 0..i {
            e = t2.super_commutator(&e).expect("equal arity").scale(&c);
        }
        e
    }

    /// `Z_{2i} = ½[η_0, η_{2i}]`.
    pub fn z_central(&self, two_i: usize) -> UhElement {
        assert!(two_i % 2 == 0, "Z is indexed by even integers");
        self.eta(0)
            .super_commutator(&self.eta(two_i))
            .expect("equal arity")
            .scale(&G::ratio(1, 2))
    }
}

pub fn phi_image(g: YGen, n: usize) -> UhElement {
    YangianImages::new(n).image(g)
}

pub fn eta(i: usize, n: usize) -> UhElement {
    YangianImages::new(n).eta(i)
}

pub fn z_central(two_i: usize, n: usize) -> UhElement {
    YangianImages::new(n).z_central(two_i)
}

fn bracket(a: &UhElement, b: &UhElement) -> UhElement {
    a.super_commutator(b).expect("equal arity")
}

/// The defining relation for `T^{(m±1)}_{i,j}` and `T^{(r∓1)}_{k,l}` on
/// `φ_n` images.
pub fn check_rtt_with(img: &YangianImages, m: usize, r: usize, idx: [i8; 4]) -> Check {
    let [i, j, k, l] = idx;
    let mut check = Check::new("rtt-relation")
        .param("n", img.n())
        .param("m", m)
        .param("r", r)
        .param("ijkl", format!("{i},{j},{k},{l}"));
    assert!(m >= 1 && r >= 1, "orders start at 1");
    let t = |a: i8, b: i8, o: usize| img.t(a, b, o);
    let (pi, pk, pl) = (index_parity(i), index_parity(k), index_parity(l));
    let lhs_sign = sign_of((pi * pk + pi * pl + pk * pl) % 2 == 1);
    let lhs = (&bracket(&t(i, j, m + 1), &t(k, l, r - 1)) - &bracket(&t(i, j, m - 1), &t(k, l, r + 1))).scale(&lhs_sign);
    let direct = &(&(&t(k, j, m) * &t(i, l, r - 1)) + &(&t(k, j, m - 1) * &t(i, l, r)))
        - &(&(&t(k, j, r - 1) * &t(i, l, m)) + &(&t(k, j, r) * &t(i, l, m - 1)));
    let crossed = &(&(&t(-k, j, m - 1) * &t(-i, l, r)) - &(&t(-k, j, m) * &t(-i, l, r - 1)))
        + &(&(&t(k, -j, r - 1) * &t(i, -l, m)) - &(&t(k, -j, r) * &t(i, -l, m - 1)));
    let rhs = &direct + &crossed.scale(&sign_of((pk + pl) % 2 == 1));
    check.require(lhs == rhs, || format!("lhs {lhs} != rhs {rhs}"));
    check
}

pub fn check_rtt(n: usize, m: usize, r: usize, idx: [i8; 4]) -> Check {
    check_rtt_with(&YangianImages::new(n), m, r, idx)
}

/// The commutator identities for `[T^{(2k)}_{1,1}, η_i]`: the three-term
/// recursion for `i ≥ 2` and the two base cases.
pub fn check_threeterms_with(img: &YangianImages, k: usize, i: usize) -> Check {
    let mut check = Check::new("threeterms").param("n", img.n()).param("k", k).param("i", i);
    let t2k = img.t(1, 1, 2 * k);
    let two = G::from_int(2);
    let lhs = bracket(&t2k, &img.eta(i));
    let rhs = match i {
        0 => img.t(1, -1, 2 * k).scale(&two),
        1 => {
            let e0 = img.eta(0);
            &(&img.t(1, -1, 2 * k + 1).scale(&-&two) - &bracket(&t2k, &e0)) + &(&t2k * &e0).scale(&two)
        }
        _ => {
            let a = bracket(&img.t(1, 1, 2 * k + 2), &img.eta(i - 2));
            let e1 = img.eta(i - 1);
            &(&a - &bracket(&t2k, &e1)) + &(&t2k * &e1).scale(&two)
        }
    };
    check.require(lhs == rhs, || format!("[T^({})_{{1,1}}, eta_{i}] = {lhs}, expected {rhs}", 2 * k));
    check
}

pub fn check_threeterms(n: usize, k: usize, i: usize) -> Check {
    check_threeterms_with(&YangianImages::new(n), k, i)
}

/// The auxiliary identities behind the three-term recursion:
/// `[T^{(2)}_{1,1}, T^{(2k+1)}_{1,-1}] = 2T^{(2k+2)}_{1,-1}`,
/// `[T^{(2)}_{1,1}, T^{(2k)}_{1,-1}] = 2T^{(2k+1)}_{1,-1} + 2T^{(2k)}_{1,-1} - 2T^{(2k)}_{1,1}T^{(1)}_{1,-1}`
/// and `[T^{(2)}_{1,1}, T^{(2k)}_{1,1}] = 0`.
pub fn check_step_identities(img: &YangianImages, k: usize) -> Check {
    let mut check = Check::new("step-identities").param("n", img.n()).param("k", k);
    let two = G::from_int(2);
    let t2 = img.t(1, 1, 2);
    let a = bracket(&t2, &img.t(1, -1, 2 * k + 1));
    let b = img.t(1, -1, 2 * k + 2).scale(&two);
    check.require(a == b, || format!("odd step at k = {k}: {a} vs {b}"));
    if k >= 1 {
        let a = bracket(&t2, &img.t(1, -1, 2 * k));
        let b = (&(&img.t(1, -1, 2 * k + 1) + &img.t(1, -1, 2 * k)) - &(&img.t(1, 1, 2 * k) * &img.t(1, -1, 1))).scale(&two);
        check.require(a == b, || format!("even step at k = {k}: {a} vs {b}"));
    }
    let c = bracket(&t2, &img.t(1, 1, 2 * k));
    check.require(c.is_zero(), || format!("[T^(2), T^({})] = {c}", 2 * k));
    check
}

/// `φ_n(T^{(m)}_{-i,-j}) = (-1)^m φ_n(T^{(m)}_{i,j})` for `m ≤ mmax`.
pub fn check_sign_symmetry(img: &YangianImages, mmax: usize) -> Check {
    let mut check = Check::new("index-negation").param("n", img.n()).param("mmax", mmax);
    for g in YGen::all(mmax) {
        let a = img.image(YGen::new(-g.i, -g.j, g.m));
        let b = img.image(g).scale(&sign_of(g.m % 2 == 1));
        check.require(a == b, || format!("{g}: {a} vs {b}"));
    }
    check
}

/// `η_i = φ_i` and `Z_{2i} = z_{2i}` for `i ≤ n-1`.
pub fn check_eta_images(img: &YangianImages) -> Result<Check> {
    let n = img.n();
    let mut check = Check::new("eta-images").param("n", n);
    for i in 0..n {
        let (a, b) = (img.eta(i), phi(n, i));
        check.require(a == b, || format!("eta_{i} = {a}, phi_{i} = {b}"));
        let (a, b) = (img.z_central(2 * i), z(n, 2 * i)?);
        check.require(a == b, || format!("Z_{} = {a}, z_{} = {b}", 2 * i, 2 * i));
    }
    Ok(check)
}

/// `(φ_m ⊗ φ_n)(Δ T^{(r)}_{i,j})` with
/// `Δ T^{(r)}_{i,j} = Σ_s Σ_k (-1)^{(p(i)+p(k))(p(j)+p(k))} T^{(s)}_{i,k} ⊗ T^{(r-s)}_{k,j}`.
pub fn coproduct_image(g: YGen, left: &YangianImages, right: &YangianImages) -> TensorElement {
    let mut out = TensorElement::zero(left.n(), right.n());
    for s in 0..=g.m {
        for k in [1i8, -1] {
            let e = (index_parity(g.i) + index_parity(k)) * (index_parity(g.j) + index_parity(k)) % 2;
            let a = left.t(g.i, k, s);
            let b = right.t(k, g.j, g.m - s);
            if a.is_zero() || b.is_zero() {
                continue;
            }
            let term = TensorElement::from_pair(&a, &b);
            out = if e == 1 { &out - &term } else { &out + &term };
        }
    }
    out
}

/// Which flip conventions make `flip ∘ split ∘ φ_{m+n} = (φ_m ⊗ φ_n) ∘ Δ`
/// on the generators `(1,1,k)` and `(-1,1,k)`, `k ≤ order`.
///
/// The check holds when exactly one convention works; it is recorded as
/// the constant `flip`.
pub fn check_diagram(m: usize, n: usize, order: usize) -> Result<Check> {
    let mut check = Check::new("coproduct-diagram").param("m", m).param("n", n).param("order", order);
    let (left, right, total) = (YangianImages::new(m), YangianImages::new(n), YangianImages::new(m + n));
    let mut works = [true, true];
    let conventions = [FlipConvention::Plain, FlipConvention::Koszul];
    let mut first_failure = [None, None];
    for k in 0..=order {
        for i in [1i8, -1] {
            let g = YGen::new(i, 1, k);
            let expected = coproduct_image(g, &left, &right);
            let split = split_embed(&total.image(g), n, m)?;
            for (c, conv) in conventions.iter().enumerate() {
                let got = split.flip(*conv);
                if got != expected {
                    works[c] = false;
                    first_failure[c].get_or_insert_with(|| format!("{conv} flip fails at {g}: {got} vs {expected}"));
                }
            }
        }
    }
    let selected = match works {
        [true, false] => "plain",
        [false, true] => "koszul",
        [true, true] => "both",
        [false, false] => "none",
    };
    check = check.constant("flip", selected);
    match works {
        [true, false] | [false, true] => {}
        [true, true] => check.fail("both flip conventions commute; the instance does not separate them"),
        [false, false] => check.fail(first_failure[1].clone().unwrap_or_default()),
    }
    Ok(check)
}

/// `f(u) = 1 + f_2 u^{-2} + f_4 u^{-4} + …`, stored as `[f_2, f_4, …]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GammaF {
    coeffs: Vec<G>,
}

impl GammaF {
    pub fn new(mut coeffs: Vec<G>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        GammaF { coeffs }
    }

    pub fn one() -> Self {
        GammaF { coeffs: Vec::new() }
    }

    /// `Π (1 + t_i u^{-2})`.
    pub fn from_roots(t: &[G]) -> Self {
        let sigma = crate::symmetric::elementary_symmetric_all(t);
        GammaF::new(sigma[1..].to_vec())
    }

    pub fn coeffs(&self) -> &[G] {
        &self.coeffs
    }

    /// `f_{2k}`, with `f_0 = 1`.
    pub fn coefficient(&self, k: usize) -> G {
        if k == 0 {
            G::one()
        } else {
            self.coeffs.get(k - 1).cloned().unwrap_or_else(G::zero)
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        GammaF::new(crate::series::even_series_product(&self.coeffs, &other.coeffs))
    }

    /// Product truncated after `u^{-2k}`.
    pub fn mul_truncated(&self, other: &Self, k: usize) -> Self {
        let mut p = self.mul(other).coeffs;
        p.truncate(k);
        GammaF::new(p)
    }
}

impl fmt::Display for GammaF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = "1".to_string();
        for (k, c) in self.coeffs.iter().enumerate() {
            crate::poly::push_term(&mut out, c, &format!("u^-{}", 2 * k + 2));
        }
        f.write_str(&out)
    }
}

/// Scalar of `g` on `Γ_f`: `f_{2k}` for `T^{(2k)}_{1,1}` and
/// `T^{(2k)}_{-1,-1}`, zero for odd orders and off-diagonal generators.
pub fn gamma_action(f: &GammaF, g: YGen) -> G {
    if g.i == g.j && g.m % 2 == 0 {
        f.coefficient(g.m / 2)
    } else {
        G::zero()
    }
}

/// Actions of all `T^{(m)}_{i,j}` with `m ≤ order` on a graded space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YModule {
    parities: Vec<u8>,
    order: usize,
    actions: BTreeMap<YGen, Matrix>,
}

impl YModule {
    pub fn new(parities: Vec<u8>, order: usize, actions: BTreeMap<YGen, Matrix>) -> Result<Self> {
        let base = SuperModule::new(parities.clone(), actions.iter().map(|(g, a)| (Label::T(*g), a.clone())).collect())?;
        for g in YGen::all(order) {
            if !actions.contains_key(&g) {
                return Err(Error::InvalidSpec(format!("missing action of {g}")));
            }
        }
        let _ = base;
        Ok(YModule {
            parities,
            order,
            actions,
        })
    }

    /// The pullback of a W(Q(n))-module along `φ_n`, using its `u_k(d)`
    /// actions (zero beyond `k = n`).
    pub fn from_w_module(w: &SuperModule, n: usize, order: usize) -> Result<Self> {
        let d = w.dim();
        let zero = Matrix::zeros(d, d);
        let u_act = |k: usize, dd: u8| -> Result<Matrix> {
            if k > n {
                Ok(zero.clone())
            } else {
                w.require(&Label::U(k, dd)).cloned()
            }
        };
        let mut actions = BTreeMap::new();
        for g in YGen::all(order) {
            let sign = sign_of(g.m % 2 == 1);
            let a = match (g.i, g.j) {
                (1, 1) => u_act(g.m, 0)?.scale(&sign),
                (-1, 1) => u_act(g.m, 1)?.scale(&sign),
                (-1, -1) => u_act(g.m, 0)?,
                _ => u_act(g.m, 1)?,
            };
            actions.insert(g, a);
        }
        YModule::new(w.parities().to_vec(), order, actions)
    }

    /// `Γ_f` as a `(1|0)`-dimensional module.
    pub fn gamma(f: &GammaF, order: usize) -> Self {
        let actions = YGen::all(order)
            .into_iter()
            .map(|g| (g, Matrix::scalar(1, gamma_action(f, g))))
            .collect();
        YModule {
            parities: vec![0],
            order,
            actions,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn dim(&self) -> usize {
        self.parities.len()
    }

    pub fn parities(&self) -> &[u8] {
        &self.parities
    }

    pub fn actions(&self) -> &BTreeMap<YGen, Matrix> {
        &self.actions
    }

    pub fn action(&self, g: YGen) -> Result<&Matrix> {
        self.actions
            .get(&g)
            .ok_or_else(|| Error::InvalidSpec(format!("{g} exceeds the truncation order {}", self.order)))
    }

    /// As a [`SuperModule`] with `T` labels.
    pub fn to_super_module(&self) -> SuperModule {
        SuperModule::new(
            self.parities.clone(),
            self.actions.iter().map(|(g, a)| (Label::T(*g), a.clone())).collect(),
        )
        .expect("actions were validated")
    }

    /// `M ⊗ Γ_f` through the coproduct:
    /// `T^{(r)}_{i,j} ↦ Σ_s Σ_k (-1)^{(p(i)+p(k))(p(j)+p(k))} T^{(s)}_{i,k} · γ_f(T^{(r-s)}_{k,j})`.
    pub fn twist(&self, f: &GammaF) -> Self {
        let d = self.dim();
        let mut actions = BTreeMap::new();
        for g in YGen::all(self.order) {
            let mut acc = Matrix::zeros(d, d);
            for s in 0..=g.m {
                for k in [1i8, -1] {
                    let c = gamma_action(f, YGen::new(k, g.j, g.m - s));
                    if c.is_zero() {
                        continue;
                    }
                    let e = (index_parity(g.i) + index_parity(k)) * (index_parity(g.j) + index_parity(k)) % 2;
                    let term = self.actions[&YGen::new(g.i, k, s)].scale(&(&c * &sign_of(e == 1)));
                    acc = &acc + &term;
                }
            }
            actions.insert(g, acc);
        }
        YModule {
            parities: self.parities.clone(),
            order: self.order,
            actions,
        }
    }

    /// Matrix of `η_i`, built from the `T` actions.
    pub fn eta_action(&self, i: usize) -> Result<Matrix> {
        let t2 = self.action(YGen::new(1, 1, 2))?;
        let mut e = self.action(YGen::new(1, -1, 1))?.clone();
        let c = G::ratio(-1, 2);
        for _ in 0..i {
            e = t2.commutator(&e).scale(&c);
        }
        Ok(e)
    }

    /// Matrix of `Z_{2i} = ½[η_0, η_{2i}]` (both odd, so an anticommutator).
    pub fn z_central_action(&self, two_i: usize) -> Result<Matrix> {
        Ok(self.eta_action(0)?.anticommutator(&self.eta_action(two_i)?).scale(&G::ratio(1, 2)))
    }
}

/// A weight `θ = (θ_1, …, θ_K)` of the commuting family `T^{(2k)}_{1,1}`,
/// `k = 1..K`, and a basis of its generalized eigenspace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSpace {
    pub theta: Vec<G>,
    pub basis: Vec<Vec<G>>,
}

impl WeightSpace {
    pub fn weight(&self) -> GammaF {
        GammaF::new(self.theta.clone())
    }
}

/// Simultaneous generalized eigenspaces of `T^{(2k)}_{1,1}`,
/// `1 ≤ k ≤ order/2`.
pub fn weight_decomposition(m: &YModule) -> Result<Vec<WeightSpace>> {
    let d = m.dim();
    let ops: Vec<&Matrix> = (1..=m.order / 2).map(|k| m.action(YGen::new(1, 1, 2 * k))).collect::<Result<_>>()?;
    for (a, x) in ops.iter().enumerate() {
        for (b, y) in ops.iter().enumerate().skip(a + 1) {
            if !x.commutator(y).is_zero() {
                return Err(Error::NotCommuting(format!("T^({})_{{1,1}} and T^({})_{{1,1}}", 2 * a + 2, 2 * b + 2)));
            }
        }
    }
    let identity: Vec<Vec<G>> = (0..d)
        .map(|i| (0..d).map(|j| if i == j { G::one() } else { G::zero() }).collect())
        .collect();
    let mut spaces = vec![WeightSpace {
        theta: Vec::new(),
        basis: identity,
    }];
    for op in ops {
        let mut next = Vec::new();
        for space in spaces {
            let b = Matrix::from_columns(d, &space.basis);
            // restriction of op to the invariant subspace: solve B R = op B
            let image = op * &b;
            let r = restrict(&b, &image)?;
            let (roots, rest) = r.char_poly().roots_in_field()?;
            if rest.degree() != Some(0) {
                return Err(Error::EigenvaluesOutsideField(format!("characteristic factor {rest}")));
            }
            for (lambda, mult) in roots {
                let shifted = &r - &Matrix::scalar(r.rows(), lambda.clone());
                let kernel = shifted.pow(mult as u32).nullspace();
                let basis = kernel.iter().map(|c| b.mul_vec(c)).collect();
                let mut theta = space.theta.clone();
                theta.push(lambda);
                next.push(WeightSpace { theta, basis });
            }
        }
        spaces = next;
    }
    spaces.sort_by(|a, b| a.theta.cmp(&b.theta));
    Ok(spaces)
}

/// The matrix `R` with `B R = image`, for `B` of full column rank.
fn restrict(b: &Matrix, image: &Matrix) -> Result<Matrix> {
    let k = b.cols();
    let mut cols = Vec::with_capacity(k);
    let bt = b.transpose();
    let gram = (&bt * b).inverse()?;
    let proj = &gram * &bt;
    for j in 0..image.cols() {
        let c = proj.mul_vec(&image.column(j));
        if b.mul_vec(&c) != image.column(j) {
            return Err(Error::RelationViolation("subspace is not invariant".into()));
        }
        cols.push(c);
    }
    Ok(Matrix::from_columns(k, &cols))
}

/// A linear recurrence `v_m = -Σ_{i=1}^q c_i v_{m-i}` valid for `m ≥ onset`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Recurrence {
    pub coeffs: Vec<G>,
    pub onset: usize,
}

/// The minimal-order recurrence, with the smallest onset for that order.
///
/// An order-`q` candidate is accepted only when the equations from the
/// onset onward outnumber the unknowns by at least two and determine the
/// coefficients uniquely; orders up to `⌊len/2⌋ - 1` are tried.
pub fn find_recurrence(values: &[G]) -> Option<Recurrence> {
    let len = values.len();
    for q in 0..(len / 2) {
        for onset in q..len {
            let equations = len - onset;
            if equations < q + 2 {
                break;
            }
            // v_m + Σ c_i v_{m-i} = 0 for m = onset..len
            let rows: Vec<Vec<G>> = (onset..len)
                .map(|mm| {
                    let mut row: Vec<G> = (1..=q).map(|i| values[mm - i].clone()).collect();
                    row.push(-&values[mm]);
                    row
                })
                .collect();
            let aug = Matrix::from_rows(rows).ok()?;
            let coeff = aug.submatrix(&(0..equations).collect::<Vec<_>>(), &(0..q).collect::<Vec<_>>());
            let rank = coeff.rank();
            if rank != q || aug.rank() != q {
                continue;
            }
            let (r, pivots) = aug.rref();
            let mut c = vec![G::zero(); q];
            for (row, &p) in pivots.iter().enumerate() {
                if p < q {
                    c[p] = r.get(row, q).clone();
                }
            }
            return Some(Recurrence { coeffs: c, onset });
        }
    }
    None
}

/// `n = max(2p+1, 2q)` and `P(T) = Σ_j (-1)^j σ_j T^{n-j}` with
/// `σ_{2k+1} = a_k` and `σ_{2k} = c_k` (`σ_0 = 1`); any root multiset of
/// `P` is a parameter vector with the given character.
pub fn chi_inverse(a: &[G], c: &[G]) -> (usize, UniPoly) {
    let n = (2 * a.len()).saturating_sub(1).max(2 * c.len());
    let sigma = |j: usize| -> G {
        if j == 0 {
            G::one()
        } else if j % 2 == 1 {
            a.get(j / 2).cloned().unwrap_or_else(G::zero)
        } else {
            c.get(j / 2 - 1).cloned().unwrap_or_else(G::zero)
        }
    };
    let mut coeffs = vec![G::zero(); n + 1];
    for j in 0..=n {
        coeffs[n - j] = &sigma(j) * &sign_of(j % 2 == 1);
    }
    (n, UniPoly::new(coeffs))
}

/// The unital algebra generated by `η_0` and `T^{(2i)}_{1,1}`, `i ≤ n`,
/// equals the one generated by all W-generators.
pub fn check_generation(w: &SuperModule, n: usize) -> Result<Check> {
    let mut check = Check::new("eta0-and-even-T-generate").param("n", n);
    let y = YModule::from_w_module(w, n, 2 * n)?;
    let mut small = vec![y.action(YGen::new(1, -1, 1))?.clone()];
    for i in 1..=n {
        small.push(y.action(YGen::new(1, 1, 2 * i))?.clone());
    }
    let all: Vec<Matrix> = crate::modules::w_labels(n)
        .iter()
        .map(|l| w.require(l).cloned())
        .collect::<Result<_>>()?;
    let d = w.dim();
    let a = algebra_closure(&small, d).len();
    let b = algebra_closure(&all, d).len();
    check = check.constant("dim", a);
    check.require(a == b, || format!("generated dimensions {a} vs {b}"));
    Ok(check)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(text: &str, n: usize) -> UhElement {
        UhElement::parse(text, n).unwrap()
    }

    #[test]
    fn images() {
        assert!(phi_image(YGen::new(1, 1, 3), 2).is_zero());
        assert_eq!(phi_image(YGen::new(1, 1, 1), 2), el("-x1 - x2", 2));
        assert_eq!(phi_image(YGen::new(1, -1, 1), 3), el("xi1 + xi2 + xi3", 3));
        assert_eq!(phi_image(YGen::new(1, 1, 0), 2), UhElement::one(2));
        assert!(phi_image(YGen::new(1, -1, 0), 2).is_zero());
        assert_eq!(eta(1, 2), el("x2*xi1 - x1*xi2", 2));
        assert_eq!(z_central(0, 3), el("x1 + x2 + x3", 3));
    }

    #[test]
    fn ygen_text() {
        let g: YGen = "T^(3)_{1,-1}".parse().unwrap();
        assert_eq!(g, YGen::new(1, -1, 3));
        assert_eq!(g.parity(), 1);
        let json = serde_json::to_string(&g).unwrap();
        assert_eq!(json, r#"{"i":1,"j":-1,"m":3}"#);
        assert!(serde_json::from_str::<YGen>(r#"{"i":2,"j":1,"m":0}"#).is_err());
    }

    #[test]
    fn gamma_products() {
        let a = G::from_int(3);
        let b = G::from_int(5);
        let f = GammaF::new(vec![a.clone()]);
        let g = GammaF::new(vec![b.clone()]);
        let fg = YModule::gamma(&f, 4).twist(&g);
        assert_eq!(fg.action(YGen::new(1, 1, 2)).unwrap(), &Matrix::scalar(1, &a + &b));
        assert_eq!(fg.action(YGen::new(1, 1, 4)).unwrap(), &Matrix::scalar(1, &a * &b));
        assert_eq!(fg, YModule::gamma(&f.mul(&g), 4));
        assert_eq!(gamma_action(&f, YGen::new(1, 1, 3)), G::zero());
        assert_eq!(gamma_action(&GammaF::one(), YGen::new(1, 1, 0)), G::one());
    }

    #[test]
    fn recurrences() {
        let alt: Vec<G> = (0..8).map(|k| G::from_int(if k % 2 == 0 { 2 } else { -2 })).collect();
        let r = find_recurrence(&alt).unwrap();
        assert_eq!(r.coeffs, vec![G::one()]);
        let zeros = vec![G::zero(); 6];
        assert_eq!(find_recurrence(&zeros).unwrap().coeffs, Vec::<G>::new());
        let (n, p) = chi_inverse(&[G::from_int(2)], &[G::one()]);
        assert_eq!(n, 2);
        assert_eq!(p.to_string(), "T^2 - 2*T + 1");
        let (n, p) = chi_inverse(&[], &[]);
        assert_eq!((n, p), (0, UniPoly::one()));
        let (n, p) = chi_inverse(&[G::from_int(7)], &[]);
        assert_eq!((n, p.to_string()), (1, "T - 7".to_string()));
    }
}
