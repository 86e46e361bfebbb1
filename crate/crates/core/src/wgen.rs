//! Generators `φ_k`, `z_k`, `u_k(d)` of the principal W-algebra of Q(n),
//! realized inside U(h), and the symbolic identities relating them.

use std::ops::RangeInclusive;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::check::Check;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::poly::{Monomial, MultiPoly, MAX_VARS};
use crate::scalar::GaussianRational;
use crate::symmetric::{elementary_symmetric_poly, power_sum_poly};
use crate::tensor::{split_embed, TensorElement};
use crate::uh::UhElement;

/// The operator `T` acting on coordinate vectors in the basis `ξ_1..ξ_n`:
/// zero diagonal, `t_ij = x_j` above it and `-x_j` below it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransferMatrix {
    n: usize,
    entries: Vec<Vec<MultiPoly>>,
}

impl TransferMatrix {
    pub fn new(n: usize) -> Self {
        let entries = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| match i.cmp(&j) {
                        std::cmp::Ordering::Less => MultiPoly::var(n, j),
                        std::cmp::Ordering::Greater => -MultiPoly::var(n, j),
                        std::cmp::Ordering::Equal => MultiPoly::zero(n),
                    })
                    .collect()
            })
            .collect();
        TransferMatrix { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[Vec<MultiPoly>] {
        &self.entries
    }

    pub fn entry(&self, i: usize, j: usize) -> &MultiPoly {
        &self.entries[i][j]
    }

    /// `T·c`.
    pub fn apply(&self, c: &[MultiPoly]) -> Vec<MultiPoly> {
        self.entries
            .iter()
            .map(|row| {
                let mut acc = MultiPoly::zero(self.n);
                for (t, v) in row.iter().zip(c) {
                    if !t.is_zero() && !v.is_zero() {
                        acc.add_assign_ref(&(t * v));
                    }
                }
                acc
            })
            .collect()
    }
}

pub fn transfer_matrix(n: usize) -> TransferMatrix {
    TransferMatrix::new(n)
}

/// Coordinate vectors of `φ_0, …, φ_kmax`.
pub fn phi_coords_list(n: usize, kmax: usize) -> Vec<Vec<MultiPoly>> {
    let t = TransferMatrix::new(n);
    let mut out = vec![vec![MultiPoly::one(n); n]];
    for _ in 0..kmax {
        let next = t.apply(out.last().expect("nonempty"));
        out.push(next);
    }
    out
}

/// `φ_0, …, φ_kmax`.
pub fn phi_list(n: usize, kmax: usize) -> Vec<UhElement> {
    phi_coords_list(n, kmax)
        .iter()
        .map(|c| UhElement::from_linear_coordinates(c))
        .collect()
}

/// `φ_k = T^k(ξ_1 + ⋯ + ξ_n)`.
pub fn phi(n: usize, k: usize) -> UhElement {
    phi_list(n, k).pop().expect("nonempty")
}

fn half() -> GaussianRational {
    GaussianRational::ratio(1, 2)
}

/// `½[φ_0, φ_k]`.
fn z_even_from(phi0: &UhElement, phik: &UhElement) -> UhElement {
    phi0.super_commutator(phik).expect("equal arity").scale(&half())
}

/// Odd `z_k` as the even part of a sum of products of `k+1` factors
/// `x_i ± ξ_i`, evaluated by multiplication in U(h).
fn z_odd_product(n: usize, k: usize) -> UhElement {
    let len = k + 1;
    let mut out = UhElement::zero(n);
    for subset in ascending_subsets(n, len) {
        let mut prod = UhElement::one(n);
        for (j, &i) in subset.iter().enumerate() {
            // factor j+1 of k+1 carries (-1)^{k+1-(j+1)} on ξ
            let sign = if (len - j - 1) % 2 == 0 { 1 } else { -1 };
            let factor = &UhElement::x(n, i) + &UhElement::xi(n, i).scale(&GaussianRational::from_int(sign));
            prod = &prod * &factor;
        }
        out = &out + &prod;
    }
    out.even_part()
}

/// `z_k`: the alternating product formula for odd `k ≤ n-1`, `½[φ_0, φ_k]`
/// for even `k`.
pub fn z(n: usize, k: usize) -> Result<UhElement> {
    if k % 2 == 1 {
        if k + 1 > n {
            return Err(Error::OddIndexOutOfRange { k, n });
        }
        Ok(z_odd_product(n, k))
    } else {
        let phis = phi_list(n, k);
        Ok(z_even_from(&phis[0], &phis[k]))
    }
}

/// Increasing index tuples of length `k` drawn from `0..n`.
fn ascending_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    subsets_of(&(0..n).collect::<Vec<_>>(), k)
}

fn subsets_of(pool: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(pool: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..pool.len() {
            if pool.len() - i < k - cur.len() {
                break;
            }
            cur.push(pool[i]);
            rec(pool, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(pool, k, 0, &mut cur, &mut out);
    out
}

/// `u_k(d)` over the 1-based index interval `range`.
///
/// Each ascending `k`-subset contributes `Π_j (x_{i_j} + (-1)^{k-j} ξ_{i_j})`;
/// the product of distinct linear factors is expanded term by term, and
/// the part of parity `d` is kept. `u_0(0) = 1`, `u_0(1) = 0`, and
/// `u_k = 0` when `k` exceeds the interval length.
pub fn u_gen(n: usize, k: usize, d: u8, range: RangeInclusive<usize>) -> Result<UhElement> {
    let (start, end) = (*range.start(), *range.end());
    if start == 0 || end > n || start > end + 1 || n > MAX_VARS {
        return Err(Error::InvalidRange { start, end, n });
    }
    assert!(d < 2, "parity must be 0 or 1");
    let pool: Vec<usize> = (start - 1..end).collect();
    let mut out = UhElement::zero(n);
    if k > pool.len() {
        return Ok(out);
    }
    for subset in subsets_of(&pool, k) {
        for chosen in 0u32..1 << k {
            if chosen.count_ones() % 2 != d as u32 {
                continue;
            }
            let mut exps = [0u8; MAX_VARS];
            let mut mask = 0u32;
            let mut negative = false;
            for (j, &i) in subset.iter().enumerate() {
                if chosen >> j & 1 == 1 {
                    mask |= 1 << i;
                    negative ^= (k - j - 1) % 2 == 1;
                } else {
                    exps[i] = 1;
                }
            }
            let c = GaussianRational::from_int(if negative { -1 } else { 1 });
            out.add_term(mask, MultiPoly::monomial(n, Monomial::from_exponents(&exps), c));
        }
    }
    Ok(out)
}

/// `u_k(d)` over the full interval `[1, n]`.
pub fn u(n: usize, k: usize, d: u8) -> UhElement {
    if n == 0 {
        return if k == 0 && d == 0 { UhElement::one(0) } else { UhElement::zero(0) };
    }
    u_gen(n, k, d, 1..=n).expect("full range")
}

/// `φ_0..φ_{n-1}`, `z_0..z_{n-1}` and `u_k(0), u_k(1)` for `k = 0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawGenSet", into = "RawGenSet")]
pub struct WGenSet {
    n: usize,
    phi: Vec<UhElement>,
    z: Vec<UhElement>,
    u_even: Vec<UhElement>,
    u_odd: Vec<UhElement>,
}

#[derive(Serialize, Deserialize)]
struct RawGenSet {
    n: usize,
    phi: Vec<String>,
    z: Vec<String>,
    u_even: Vec<String>,
    u_odd: Vec<String>,
}

impl TryFrom<RawGenSet> for WGenSet {
    type Error = Error;
    fn try_from(raw: RawGenSet) -> Result<Self> {
        let n = raw.n;
        if n == 0 || n > MAX_VARS {
            return Err(Error::Malformed(format!("generator set arity {n}")));
        }
        if raw.phi.len() != n || raw.z.len() != n || raw.u_even.len() != n + 1 || raw.u_odd.len() != n + 1 {
            return Err(Error::Malformed("generator list lengths do not match n".into()));
        }
        let parse = |v: Vec<String>| v.iter().map(|s| UhElement::parse(s, n)).collect::<Result<Vec<_>>>();
        Ok(WGenSet {
            n,
            phi: parse(raw.phi)?,
            z: parse(raw.z)?,
            u_even: parse(raw.u_even)?,
            u_odd: parse(raw.u_odd)?,
        })
    }
}

impl From<WGenSet> for RawGenSet {
    fn from(g: WGenSet) -> Self {
        let render = |v: &[UhElement]| v.iter().map(UhElement::render).collect();
        RawGenSet {
            n: g.n,
            phi: render(&g.phi),
            z: render(&g.z),
            u_even: render(&g.u_even),
            u_odd: render(&g.u_odd),
        }
    }
}

impl WGenSet {
    pub fn new(n: usize) -> Self {
        assert!((1..=MAX_VARS).contains(&n), "arity {n} out of range");
        let phi = phi_list(n, n - 1);
        let z = (0..n)
            .map(|k| {
                if k % 2 == 0 {
                    z_even_from(&phi[0], &phi[k])
                } else {
                    z_odd_product(n, k)
                }
            })
            .collect();
        WGenSet {
            n,
            phi,
            z,
            u_even: (0..=n).map(|k| u(n, k, 0)).collect(),
            u_odd: (0..=n).map(|k| u(n, k, 1)).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn phi(&self) -> &[UhElement] {
        &self.phi
    }

    pub fn z(&self) -> &[UhElement] {
        &self.z
    }

    pub fn u_even(&self) -> &[UhElement] {
        &self.u_even
    }

    pub fn u_odd(&self) -> &[UhElement] {
        &self.u_odd
    }

    /// `u_k(d)`, zero beyond `k = n`.
    pub fn u(&self, k: usize, d: u8) -> UhElement {
        let list = if d == 0 { &self.u_even } else { &self.u_odd };
        list.get(k).cloned().unwrap_or_else(|| UhElement::zero(self.n))
    }

    /// Every generator with its display label.
    pub fn labelled(&self) -> Vec<(String, &UhElement)> {
        let mut out = Vec::new();
        for (k, p) in self.phi.iter().enumerate() {
            out.push((format!("phi_{k}"), p));
        }
        for (k, p) in self.z.iter().enumerate() {
            out.push((format!("z_{k}"), p));
        }
        for (k, p) in self.u_even.iter().enumerate() {
            out.push((format!("u_{k}(0)"), p));
        }
        for (k, p) in self.u_odd.iter().enumerate() {
            out.push((format!("u_{k}(1)"), p));
        }
        out
    }
}

/// `[φ_i, φ_j]` for `0 ≤ i, j ≤ n-1`, as polynomials.
pub fn gram_matrix(n: usize) -> Vec<Vec<MultiPoly>> {
    let phis = phi_list(n, n.saturating_sub(1));
    phis.iter()
        .map(|a| {
            phis.iter()
                .map(|b| a.super_commutator(b).expect("equal arity").as_poly().expect("bracket of odd linear elements is central"))
                .collect()
        })
        .collect()
}

/// Outcome of the Gram determinant factorization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramDet {
    pub holds: bool,
    /// `det Γ / (p² x_1⋯x_n)` when that quotient is a constant.
    pub constant: Option<GaussianRational>,
    pub determinant: MultiPoly,
}

/// Checks `det Γ = c · Π_{i<j}(x_i + x_j)² · x_1⋯x_n` with `c ≠ 0`.
///
/// Entries with `i + j` odd vanish, so the determinant is computed as the
/// product of the determinants of the even-index and odd-index blocks; the
/// vanishing is checked first and the full matrix is used otherwise.
pub fn verify_gram_det(n: usize) -> Result<GramDet> {
    let g = gram_matrix(n);
    let checkerboard = (0..n).all(|i| (0..n).all(|j| (i + j) % 2 == 0 || g[i][j].is_zero()));
    let determinant = if checkerboard {
        let block = |parity: usize| -> Vec<Vec<MultiPoly>> {
            let idx: Vec<usize> = (0..n).filter(|i| i % 2 == parity).collect();
            idx.iter().map(|&i| idx.iter().map(|&j| g[i][j].clone()).collect()).collect()
        };
        &MultiPoly::determinant(&block(0), n)? * &MultiPoly::determinant(&block(1), n)?
    } else {
        MultiPoly::determinant(&g, n)?
    };
    let mut divisor = MultiPoly::one(n);
    for i in 0..n {
        divisor = &divisor * &MultiPoly::var(n, i);
        for j in i + 1..n {
            let s = &MultiPoly::var(n, i) + &MultiPoly::var(n, j);
            divisor = &(&divisor * &s) * &s;
        }
    }
    let constant = determinant.div_exact(&divisor)?.and_then(|q| q.as_constant());
    Ok(GramDet {
        holds: constant.as_ref().is_some_and(|c| !c.is_zero()),
        constant,
        determinant,
    })
}

/// `[φ_i, φ_j] = (-1)^i 2 z_{i+j}` for `i + j` even and `0` otherwise, for
/// `0 ≤ i, j ≤ imax`, with every `z_{i+j}` taken as `½[φ_0, φ_{i+j}]`.
pub fn check_oddrel(n: usize, imax: usize) -> Check {
    let mut check = Check::new("phi-anticommutator").param("n", n).param("imax", imax);
    let phis = phi_list(n, 2 * imax);
    for i in 0..=imax {
        for j in 0..=imax {
            let lhs = phis[i].super_commutator(&phis[j]).expect("equal arity");
            let rhs = if (i + j) % 2 == 0 {
                let zk = z_even_from(&phis[0], &phis[i + j]);
                zk.scale(&GaussianRational::from_int(if i % 2 == 0 { 2 } else { -2 }))
            } else {
                UhElement::zero(n)
            };
            check.require(lhs == rhs, || format!("[phi_{i}, phi_{j}] = {lhs}, expected {rhs}"));
        }
    }
    check
}

/// `u_k(d) = Σ_{e+f=d} Σ_{a+b=k} (-1)^{eb} u⁺_a(e) ⊗ u⁻_b(f)` in
/// `U(h_split) ⊗ U(h_{n-split})`, for all `k ≤ n` and both parities.
pub fn check_decomposition(n: usize, split_at: usize) -> Result<Check> {
    let mut check = Check::new("tensor-decomposition").param("n", n).param("split", split_at);
    let (n1, n2) = (split_at, n.checked_sub(split_at).unwrap_or(0));
    if n1 == 0 || n2 == 0 {
        return Err(Error::InvalidSplit { left: n1, right: n2, n });
    }
    let left: Vec<[UhElement; 2]> = (0..=n1).map(|a| [u(n1, a, 0), u(n1, a, 1)]).collect();
    let right: Vec<[UhElement; 2]> = (0..=n2).map(|b| [u(n2, b, 0), u(n2, b, 1)]).collect();
    for k in 0..=n {
        for d in 0..2u8 {
            let lhs = split_embed(&u(n, k, d), n1, n2)?;
            let mut rhs = TensorElement::zero(n1, n2);
            for e in 0..2usize {
                let f = (d as usize + e) % 2;
                for a in 0..=k.min(n1) {
                    let b = k - a;
                    if b > n2 {
                        continue;
                    }
                    let term = TensorElement::from_pair(&left[a][e], &right[b][f]);
                    rhs = if e * b % 2 == 1 { &rhs - &term } else { &rhs + &term };
                }
            }
            check.require(lhs == rhs, || format!("u_{k}({d}): split {lhs}, expected {rhs}"));
        }
    }
    Ok(check)
}

/// Polynomial of a ξ-free element.
fn central(a: &UhElement) -> Option<MultiPoly> {
    a.as_poly()
}

/// For even `k`: `z_k` is S_n-invariant and
/// `z_k(x_1, …, x_{n-2}, t, -t) = z_k(x_1, …, x_{n-2})`.
pub fn check_q_symmetry(n: usize, k: usize) -> Result<Check> {
    let mut check = Check::new("q-symmetry").param("n", n).param("k", k);
    if k % 2 == 1 || n < 2 {
        return Err(Error::Malformed(format!("q-symmetry needs even k and n >= 2 (k = {k}, n = {n})")));
    }
    let zk = z(n, k)?;
    let Some(p) = central(&zk) else {
        check.fail(format!("z_{k} is not central: {zk}"));
        return Ok(check);
    };
    check.require(p.is_symmetric(), || format!("z_{k} is not symmetric: {p}"));
    let m = n - 1;
    let mut images: Vec<MultiPoly> = (0..n - 2).map(|i| MultiPoly::var(m, i)).collect();
    images.push(MultiPoly::var(m, m - 1));
    images.push(-MultiPoly::var(m, m - 1));
    let substituted = p.compose(&images)?;
    let expected = if n == 2 {
        MultiPoly::zero(m)
    } else {
        central(&z(n - 2, k)?).expect("even z is central").embed(m, 0)
    };
    check.require(substituted == expected, || {
        format!("z_{k}(.., t, -t) = {substituted}, expected {expected}")
    });
    Ok(check)
}

/// Top terms: `z̄_k = σ_{k+1}` for odd `k`; even `z_k` is ξ-free,
/// homogeneous of degree `2k+2`, and equal to its top term.
pub fn check_leading_terms(n: usize) -> Check {
    let mut check = Check::new("leading-terms").param("n", n);
    let gens = WGenSet::new(n);
    for (k, zk) in gens.z().iter().enumerate() {
        let Ok(top) = zk.top_term() else {
            check.fail(format!("z_{k} vanishes"));
            continue;
        };
        let degree = zk.max_degree();
        check.require(degree == Some(2 * k as u32 + 2), || format!("z_{k} has degree {degree:?}"));
        if k % 2 == 1 {
            let sigma = UhElement::from_poly(elementary_symmetric_poly(n, k + 1));
            check.require(top == sigma, || format!("top term of z_{k} is {top}, expected {sigma}"));
        } else {
            check.require(central(zk).is_some(), || format!("z_{k} is not ξ-free"));
            check.require(&top == zk, || format!("z_{k} differs from its top term"));
        }
    }
    check
}

/// The `n` functions `z_0, z_2, …, z_{2⌊(n-1)/2⌋}` and `σ_2, σ_4, …, σ_{2⌊n/2⌋}`.
pub fn independence_family(n: usize) -> Vec<(String, MultiPoly)> {
    let mut out = Vec::new();
    let phis = phi_list(n, 2 * ((n - 1) / 2));
    for k in 0..=(n - 1) / 2 {
        let zk = z_even_from(&phis[0], &phis[2 * k]);
        out.push((format!("z_{}", 2 * k), central(&zk).expect("even z is central")));
    }
    for k in 1..=n / 2 {
        out.push((format!("sigma_{}", 2 * k), elementary_symmetric_poly(n, 2 * k)));
    }
    out
}

/// Jacobian determinant of [`independence_family`] at `point`; a nonzero
/// value certifies algebraic independence.
pub fn check_jacobian_independence(n: usize, point: &[GaussianRational]) -> Result<Check> {
    if point.len() != n {
        return Err(Error::LengthMismatch { expected: n, got: point.len() });
    }
    let family = independence_family(n);
    let rows = family
        .iter()
        .map(|(_, f)| (0..n).map(|i| f.derivative(i).eval(point)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let det = Matrix::from_rows(rows)?.det();
    let point_text: Vec<String> = point.iter().map(ToString::to_string).collect();
    let mut check = Check::new("jacobian-independence")
        .param("n", n)
        .param("point", point_text.join(","))
        .constant("det", &det);
    check.require(!det.is_zero(), || "Jacobian determinant vanishes".to_string());
    Ok(check)
}

/// On `x_2 = -x_1` the first two coordinates of `φ_k` agree, `1 ≤ k ≤ kmax`.
pub fn check_phi_antidiagonal(n: usize, kmax: usize) -> Result<Check> {
    let mut check = Check::new("phi-coordinates-on-x1=-x2").param("n", n).param("kmax", kmax);
    if n < 2 {
        return Err(Error::Malformed("needs n >= 2".into()));
    }
    let mut images: Vec<MultiPoly> = (0..n).map(|i| MultiPoly::var(n, i)).collect();
    images[1] = -MultiPoly::var(n, 0);
    for (k, c) in phi_coords_list(n, kmax).iter().enumerate().skip(1) {
        let a = c[0].compose(&images)?;
        let b = c[1].compose(&images)?;
        check.require(a == b, || format!("phi_{k}: {a} vs {b}"));
    }
    Ok(check)
}

/// `z_{2k} = -Σ_{i=1}^k σ_{2i} z_{2k-2i} + σ_{2k+1}` symbolically for
/// `2k ≤ n-1`, plus `z_0 = Σ x_i` and `z_2 = ⅓(Σ x_i³ - (Σ x_i)³)`.
pub fn check_z_recursion(n: usize) -> Check {
    let mut check = Check::new("z-recursion").param("n", n);
    let kmax = (n - 1) / 2;
    let phis = phi_list(n, 2 * kmax.max(1));
    let direct: Vec<MultiPoly> = (0..=kmax.max(1))
        .map(|k| central(&z_even_from(&phis[0], &phis[2 * k])).expect("even z is central"))
        .collect();
    let sigma = |a: usize| elementary_symmetric_poly(n, a);
    let mut rec: Vec<MultiPoly> = Vec::new();
    for k in 0..=kmax.max(1) {
        let mut v = sigma(2 * k + 1);
        for i in 1..=k {
            v = &v - &(&sigma(2 * i) * &rec[k - i]);
        }
        rec.push(v);
    }
    for k in 0..=kmax {
        check.require(direct[k] == rec[k], || format!("z_{}: {} vs {}", 2 * k, direct[k], rec[k]));
    }
    let p1 = power_sum_poly(n, 1);
    check.require(direct[0] == p1, || format!("z_0 = {}", direct[0]));
    let closed = (&power_sum_poly(n, 3) - &p1.pow(3)).scale(&GaussianRational::ratio(1, 3));
    check.require(direct[1] == closed, || format!("z_2 = {}, closed form {closed}", direct[1]));
    check
}

/// Odd `z_k` from the product formula equals `u_{k+1}(0)`, `k ≤ n-1`.
pub fn check_odd_z_matches_u(n: usize) -> Check {
    let mut check = Check::new("odd-z-equals-u").param("n", n);
    for k in (1..n).step_by(2) {
        let a = z_odd_product(n, k);
        let b = u(n, k + 1, 0);
        check.require(a == b, || format!("z_{k} = {a}, u_{}(0) = {b}", k + 1));
    }
    check
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(text: &str, n: usize) -> UhElement {
        UhElement::parse(text, n).unwrap()
    }

    #[test]
    fn small_generators() {
        assert_eq!(transfer_matrix(1).entries(), &[vec![MultiPoly::zero(1)]]);
        let t = transfer_matrix(3);
        assert_eq!(t.entry(1, 0), &-MultiPoly::var(3, 0));
        assert_eq!(t.entry(1, 2), &MultiPoly::var(3, 2));
        assert_eq!(phi(2, 1), el("x2*xi1 - x1*xi2", 2));
        assert_eq!(phi(2, 2), el("-x1*x2*xi1 - x1*x2*xi2", 2));
        assert_eq!(z(2, 1).unwrap(), el("x1*x2 - xi1*xi2", 2));
        assert_eq!(z(2, 2).unwrap(), el("-x1^2*x2 - x1*x2^2", 2));
        assert!(z(2, 3).is_err());
        assert_eq!(u(3, 1, 1), phi(3, 0));
        assert_eq!(u(3, 0, 0), UhElement::one(3));
        assert!(u(3, 0, 1).is_zero());
        assert!(u(3, 4, 0).is_zero());
    }

    #[test]
    fn gram_small() {
        let g = gram_matrix(2);
        assert!(g[0][1].is_zero());
        let r = verify_gram_det(1).unwrap();
        assert_eq!(r.constant, Some(GaussianRational::from_int(2)));
        let r = verify_gram_det(2).unwrap();
        assert!(r.holds);
        assert_eq!(r.constant, Some(GaussianRational::from_int(4)));
    }

    #[test]
    fn subset_ranges() {
        assert!(u_gen(3, 1, 0, 0..=2).is_err());
        assert!(u_gen(3, 1, 0, 2..=4).is_err());
        assert_eq!(u_gen(3, 1, 1, 2..=3).unwrap(), el("xi2 + xi3", 3));
    }
}
