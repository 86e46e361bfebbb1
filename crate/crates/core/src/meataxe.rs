//! Exact irreducibility, module type and intertwiners for graded matrix
//! modules.
//!
//! Graded submodules are exactly the subspaces invariant under the action
//! matrices together with the grading involution `J`, so every test below
//! runs on the unital algebra `B` generated by those matrices.
//!
//! * `dim B = d²` certifies absolute simplicity (Burnside). Words in the
//!   generators that stay independent after reduction modulo a prime are
//!   independent over Q(i), so the full-rank case is certified in `F_p`.
//! * Otherwise the radical of the trace form `tr(xy)` on `B` is the
//!   Jacobson radical (characteristic 0); when nonzero, `rad(B)·V` is a
//!   proper graded submodule.
//! * Otherwise `B` is semisimple and not the full matrix algebra, so the
//!   commutant of `B` is larger than the scalars; an eigenspace of a
//!   commutant element with an eigenvalue in Q(i) is a proper submodule.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Span};
use crate::modules::{Label, SuperModule};
use crate::scalar::GaussianRational;

type G = GaussianRational;

/// Verdict of [`is_simple`]; a reducible module carries the basis of a
/// proper nonzero graded submodule, made of homogeneous vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Simplicity {
    SimpleM,
    SimpleQ,
    Reducible(Vec<Vec<G>>),
}

impl Simplicity {
    pub fn is_simple(&self) -> bool {
        !matches!(self, Simplicity::Reducible(_))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum ModuleType {
    M,
    Q,
}

fn vec_of(m: &Matrix) -> Vec<G> {
    m.data().to_vec()
}

/// Basis of the unital algebra generated by `gens` (all `d × d`).
pub fn algebra_closure(gens: &[Matrix], d: usize) -> Vec<Matrix> {
    let mut span = Span::new(d * d);
    let mut independent_gens = Span::new(d * d);
    let gens: Vec<&Matrix> = gens.iter().filter(|g| independent_gens.insert(&vec_of(g))).collect();
    let mut basis = vec![Matrix::identity(d)];
    span.insert(&vec_of(&basis[0]));
    let mut next = 0;
    while next < basis.len() && span.dim() < d * d {
        let b = basis[next].clone();
        next += 1;
        for g in &gens {
            let p = &b * *g;
            if span.insert(&vec_of(&p)) {
                basis.push(p);
                if span.dim() == d * d {
                    break;
                }
            }
        }
    }
    basis
}

/// Arithmetic modulo `P = 119·2^23 + 1`, with `i ↦ 3^{(P-1)/4}`.
mod modp {
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use num_traits::{ToPrimitive, Zero};

    use super::{Matrix, G};

    const P: u64 = 998_244_353;

    fn pow(mut b: u64, mut e: u64) -> u64 {
        let mut acc = 1;
        b %= P;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b % P;
            }
            b = b * b % P;
            e >>= 1;
        }
        acc
    }

    fn inv(x: u64) -> u64 {
        pow(x, P - 2)
    }

    fn reduce_int(x: &BigInt) -> u64 {
        let p = BigInt::from(P);
        (((x % &p) + &p) % &p).to_u64().expect("residue fits")
    }

    fn reduce_rational(q: &BigRational) -> Option<u64> {
        let d = reduce_int(q.denom());
        (d != 0).then(|| reduce_int(q.numer()) * inv(d) % P)
    }

    fn reduce(g: &G) -> Option<u64> {
        let i = pow(3, (P - 1) / 4);
        let re = reduce_rational(g.re())?;
        let im = if g.im().is_zero() { 0 } else { reduce_rational(g.im())? };
        Some((re + i * im) % P)
    }

    fn mul(a: &[u64], b: &[u64], d: usize) -> Vec<u64> {
        let mut out = vec![0u64; d * d];
        for r in 0..d {
            for k in 0..d {
                let x = a[r * d + k];
                if x == 0 {
                    continue;
                }
                for c in 0..d {
                    out[r * d + c] = (out[r * d + c] + x * b[k * d + c]) % P;
                }
            }
        }
        out
    }

    /// Reduced echelon rows keyed by pivot.
    struct Echelon {
        rows: Vec<(usize, Vec<u64>)>,
    }

    impl Echelon {
        fn insert(&mut self, v: &[u64]) -> bool {
            let mut v = v.to_vec();
            for (pivot, row) in &self.rows {
                let c = v[*pivot];
                if c != 0 {
                    for (x, y) in v.iter_mut().zip(row) {
                        *x = (*x + (P - c) * y) % P;
                    }
                }
            }
            let Some(pivot) = v.iter().position(|&x| x != 0) else {
                return false;
            };
            let s = inv(v[pivot]);
            for x in v.iter_mut() {
                *x = *x * s % P;
            }
            for (_, row) in self.rows.iter_mut() {
                let c = row[pivot];
                if c != 0 {
                    for (x, y) in row.iter_mut().zip(&v) {
                        *x = (*x + (P - c) * y) % P;
                    }
                }
            }
            self.rows.push((pivot, v));
            true
        }
    }

    /// Whether the words in `gens` span all `d × d` matrices modulo `P`;
    /// false when some entry has a denominator divisible by `P`.
    pub fn spans_full_matrix_algebra(gens: &[Matrix], d: usize) -> bool {
        let Some(gens) = gens
            .iter()
            .map(|g| g.data().iter().map(reduce).collect::<Option<Vec<u64>>>())
            .collect::<Option<Vec<_>>>()
        else {
            return false;
        };
        let mut span = Echelon { rows: Vec::new() };
        let identity: Vec<u64> = (0..d * d).map(|k| u64::from(k / d == k % d)).collect();
        span.insert(&identity);
        let mut words = vec![identity];
        let mut next = 0;
        while next < words.len() && span.rows.len() < d * d {
            let w = words[next].clone();
            next += 1;
            for g in &gens {
                let p = mul(&w, g, d);
                if span.insert(&p) {
                    words.push(p);
                }
            }
        }
        span.rows.len() == d * d
    }
}

fn generators(m: &SuperModule, labels: &[Label]) -> Result<Vec<Matrix>> {
    let mut out: Vec<Matrix> = labels.iter().map(|l| m.require(l).cloned()).collect::<Result<_>>()?;
    out.push(m.grading());
    Ok(out)
}

/// Solutions `X` (spanned by `start`) of `X a = sign(a) · b X` for every
/// pair `(a, b, sign)`.
fn solve_twisted(start: Vec<Matrix>, pairs: &[(&Matrix, &Matrix, bool)]) -> Vec<Matrix> {
    let mut basis = start;
    for (a, b, negate) in pairs {
        if basis.is_empty() {
            break;
        }
        let images: Vec<Vec<G>> = basis
            .iter()
            .map(|x| {
                let ba = &(*b * x);
                let rhs = if *negate { -ba } else { ba.clone() };
                vec_of(&(&(x * *a) - &rhs))
            })
            .collect();
        let rows = images[0].len();
        let combos = Matrix::from_columns(rows, &images).nullspace();
        basis = combos
            .iter()
            .map(|c| {
                let mut acc = Matrix::zeros(basis[0].rows(), basis[0].cols());
                for (cj, xj) in c.iter().zip(&basis) {
                    if !cj.is_zero() {
                        acc = &acc + &xj.scale(cj);
                    }
                }
                acc
            })
            .collect();
    }
    basis
}

/// Elementary matrices `E_ij` (rows indexed by `to`, columns by `from`)
/// of the requested parity.
fn graded_elementary(to: &[u8], from: &[u8], parity: u8) -> Vec<Matrix> {
    let mut out = Vec::new();
    for (i, pi) in to.iter().enumerate() {
        for (j, pj) in from.iter().enumerate() {
            if (pi + pj) % 2 == parity {
                let mut e = Matrix::zeros(to.len(), from.len());
                e.set(i, j, G::one());
                out.push(e);
            }
        }
    }
    out
}

/// Basis of the homogeneous intertwiners `X: M → N` of parity `parity`,
/// `X a_M = (-1)^{parity·p(a)} a_N X` for every label.
pub fn intertwiner_space(m: &SuperModule, n: &SuperModule, labels: &[Label], parity: u8) -> Result<Vec<Matrix>> {
    let mut pairs = Vec::new();
    for l in labels {
        pairs.push((m.require(l)?, n.require(l)?, parity * l.parity() == 1));
    }
    let start = graded_elementary(n.parities(), m.parities(), parity);
    Ok(solve_twisted(start, &pairs))
}

/// An invertible element of the span of `basis`, trying the basis and
/// then points on the moment curve.
fn invertible_in(basis: &[Matrix]) -> Option<Matrix> {
    if let Some(x) = basis.iter().find(|x| x.is_square() && x.is_invertible()) {
        return Some(x.clone());
    }
    if basis.len() < 2 {
        return None;
    }
    let d = basis[0].rows();
    for t in 1..=(d * basis.len() + 1) as i64 {
        let mut acc = Matrix::zeros(d, basis[0].cols());
        let mut c = G::one();
        for x in basis {
            acc = &acc + &x.scale(&c);
            c = &c * &G::from_int(t);
        }
        if acc.is_square() && acc.is_invertible() {
            return Some(acc);
        }
    }
    None
}

/// Homogeneous isomorphisms `M → N` on `labels`, searched separately by
/// parity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Intertwiners {
    pub even: Option<Matrix>,
    pub odd: Option<Matrix>,
}

impl Intertwiners {
    pub fn any(&self) -> bool {
        self.even.is_some() || self.odd.is_some()
    }
}

pub fn find_intertwiner(m: &SuperModule, n: &SuperModule, labels: &[Label]) -> Result<Intertwiners> {
    if m.dim() != n.dim() {
        return Ok(Intertwiners { even: None, odd: None });
    }
    let even = invertible_in(&intertwiner_space(m, n, labels, 0)?);
    let odd = invertible_in(&intertwiner_space(m, n, labels, 1)?);
    Ok(Intertwiners { even, odd })
}

/// Whether `x` is an invertible intertwiner `M → N` of parity `parity`.
pub fn is_intertwiner(x: &Matrix, m: &SuperModule, n: &SuperModule, labels: &[Label], parity: u8) -> Result<bool> {
    if x.rows() != n.dim() || x.cols() != m.dim() || !x.is_square() || !x.is_invertible() {
        return Ok(false);
    }
    let (jm, jn) = (m.grading(), n.grading());
    let graded = if parity == 0 { x * &jm == &jn * x } else { x * &jm == -&(&jn * x) };
    if !graded {
        return Ok(false);
    }
    for l in labels {
        let lhs = x * m.require(l)?;
        let rhs = n.require(l)? * x;
        let ok = if parity * l.parity() == 1 { lhs == -&rhs } else { lhs == rhs };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Homogeneous basis of a `J`-invariant subspace given by any spanning set.
fn homogeneous_basis(vectors: &[Vec<G>], parities: &[u8]) -> Vec<Vec<G>> {
    let mut span = Span::new(parities.len());
    for v in vectors {
        for p in 0..2u8 {
            let part: Vec<G> = v
                .iter()
                .zip(parities)
                .map(|(x, &q)| if q == p { x.clone() } else { G::zero() })
                .collect();
            span.insert(&part);
        }
    }
    span.basis().to_vec()
}

/// A proper nonzero graded submodule, if one exists with a basis over Q(i).
fn find_witness(m: &SuperModule, gens: &[Matrix], algebra: &[Matrix]) -> Result<Vec<Vec<G>>> {
    let d = m.dim();
    let tr: Vec<Vec<G>> = algebra
        .iter()
        .map(|a| algebra.iter().map(|b| (a * b).trace()).collect())
        .collect();
    let radical = Matrix::from_rows(tr)?.nullspace();
    if !radical.is_empty() {
        let mut image = Vec::new();
        for c in &radical {
            let mut r = Matrix::zeros(d, d);
            for (cj, bj) in c.iter().zip(algebra) {
                if !cj.is_zero() {
                    r = &r + &bj.scale(cj);
                }
            }
            image.extend((0..d).map(|j| r.column(j)));
        }
        return Ok(homogeneous_basis(&image, m.parities()));
    }
    let pairs: Vec<(&Matrix, &Matrix, bool)> = gens.iter().map(|g| (g, g, false)).collect();
    let commutant = solve_twisted(graded_elementary(m.parities(), m.parities(), 0), &pairs);
    for c in commutant.iter().filter(|c| c.as_scalar().is_none()) {
        let (roots, _) = c.char_poly().roots_in_field()?;
        if let Some((lambda, _)) = roots.first() {
            let kernel = (c - &Matrix::scalar(d, lambda.clone())).nullspace();
            return Ok(homogeneous_basis(&kernel, m.parities()));
        }
    }
    Err(Error::SplittingFieldRequired)
}

/// Decides whether `m`, restricted to `labels`, is a simple supermodule.
pub fn is_simple(m: &SuperModule, labels: &[Label]) -> Result<Simplicity> {
    let d = m.dim();
    if d == 0 {
        return Err(Error::ZeroInput);
    }
    let gens = generators(m, labels)?;
    if !modp::spans_full_matrix_algebra(&gens, d) {
        let algebra = algebra_closure(&gens, d);
        if algebra.len() < d * d {
            return find_witness(m, &gens, &algebra).map(Simplicity::Reducible);
        }
    }
    let odd = intertwiner_space(m, m, labels, 1)?;
    let q_type = odd.first().is_some_and(|x| {
        let sq = x * x;
        sq.as_scalar().is_some_and(|c| !c.is_zero())
    });
    Ok(if q_type { Simplicity::SimpleQ } else { Simplicity::SimpleM })
}

/// Type of a simple module; an error for reducible input.
pub fn module_type(m: &SuperModule, labels: &[Label]) -> Result<ModuleType> {
    match is_simple(m, labels)? {
        Simplicity::SimpleM => Ok(ModuleType::M),
        Simplicity::SimpleQ => Ok(ModuleType::Q),
        Simplicity::Reducible(_) => Err(Error::InvalidSpec("module type is defined for simple modules only".into())),
    }
}

/// Extends a homogeneous basis of a subspace by standard basis vectors.
fn extend_basis(sub: &[Vec<G>], d: usize) -> Vec<Vec<G>> {
    let mut span = Span::new(d);
    let mut out = Vec::new();
    for v in sub {
        if span.insert(v) {
            out.push(v.clone());
        }
    }
    for i in 0..d {
        let mut e = vec![G::zero(); d];
        e[i] = G::one();
        if span.insert(&e) {
            out.push(e);
        }
    }
    out
}

/// Submodule on `sub` (homogeneous basis) and the corresponding quotient.
pub fn sub_and_quotient(m: &SuperModule, sub: &[Vec<G>]) -> Result<(SuperModule, SuperModule)> {
    let full = extend_basis(sub, m.dim());
    m.split_along(&full, sub.len())
}

/// Composition factors on `labels`, bottom first.
pub fn composition_factors(m: &SuperModule, labels: &[Label]) -> Result<Vec<SuperModule>> {
    let m = m.restrict(labels);
    match is_simple(&m, labels)? {
        Simplicity::Reducible(w) => {
            let (sub, quo) = sub_and_quotient(&m, &w)?;
            let mut out = composition_factors(&sub, labels)?;
            out.extend(composition_factors(&quo, labels)?);
            Ok(out)
        }
        _ => Ok(vec![m]),
    }
}

/// Whether the submodule spanned by `sub` has a graded complement, found as
/// an even projection onto it commuting with every action.
pub fn has_complement(m: &SuperModule, labels: &[Label], sub: &[Vec<G>]) -> Result<bool> {
    let d = m.dim();
    let k = sub.len();
    let basis = extend_basis(sub, d);
    let p = Matrix::from_columns(d, &basis);
    let pinv = p.inverse()?;
    let endo = intertwiner_space(m, m, labels, 0)?;
    if endo.is_empty() {
        return Ok(false);
    }
    // in the adapted basis the projection is [[I, *], [0, 0]]
    let conj: Vec<Matrix> = endo.iter().map(|x| &(&pinv * x) * &p).collect();
    let mut rows = Vec::new();
    for i in 0..d {
        for j in 0..d {
            if i < k && j >= k {
                continue;
            }
            let mut row: Vec<G> = conj.iter().map(|x| x.get(i, j).clone()).collect();
            row.push(if i == j && i < k { G::one() } else { G::zero() });
            rows.push(row);
        }
    }
    let aug = Matrix::from_rows(rows)?;
    let coeff = aug.submatrix(&(0..aug.rows()).collect::<Vec<_>>(), &(0..endo.len()).collect::<Vec<_>>());
    Ok(coeff.rank() == aug.rank())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modules::{build_v, RootVector};

    fn g(s: &str) -> G {
        s.parse().unwrap()
    }

    #[test]
    fn uniserial_is_reducible() {
        // even nilpotent action on (2|0): the line e_1 is the only submodule
        let n = Matrix::from_rows(vec![vec![g("0"), g("1")], vec![g("0"), g("0")]]).unwrap();
        let m = SuperModule::bare(vec![0, 0]).with_action(Label::Z(0), n).unwrap();
        match is_simple(&m, &[Label::Z(0)]).unwrap() {
            Simplicity::Reducible(w) => assert_eq!(w, vec![vec![g("1"), g("0")]]),
            other => panic!("{other:?}"),
        }
        let w = vec![vec![g("1"), g("0")]];
        assert!(!has_complement(&m, &[Label::Z(0)], &w).unwrap());
    }

    #[test]
    fn clifford_types() {
        let one = build_v(&RootVector::new(vec![g("1")]));
        assert_eq!(is_simple(&one, &[Label::Xi(0)]).unwrap(), Simplicity::SimpleQ);
        let two = build_v(&RootVector::new(vec![g("1"), g("2")]));
        let labels = [Label::Xi(0), Label::Xi(1)];
        assert_eq!(is_simple(&two, &labels).unwrap(), Simplicity::SimpleM);
        let shifted = two.parity_shift();
        let found = find_intertwiner(&two, &shifted, &labels).unwrap();
        assert!(found.even.is_none());
        let found = find_intertwiner(&one, &one.parity_shift(), &[Label::Xi(0)]).unwrap();
        assert!(found.even.is_some() && found.odd.is_some());
    }

    #[test]
    fn modular_rank_matches_exact() {
        for roots in [vec![g("1"), g("2")], vec![g("1"), g("i"), g("3")], vec![g("1/2"), g("0")]] {
            let m = build_v(&RootVector::new(roots.clone()));
            let labels: Vec<Label> = (0..roots.len()).map(Label::Xi).collect();
            let gens = generators(&m, &labels).unwrap();
            let d = m.dim();
            assert_eq!(modp::spans_full_matrix_algebra(&gens, d), algebra_closure(&gens, d).len() == d * d);
        }
    }

    #[test]
    fn splitting_field_needed() {
        // an even operator with eigenvalues ±√2 on (2|0)
        let a = Matrix::from_rows(vec![vec![g("0"), g("2")], vec![g("1"), g("0")]]).unwrap();
        let m = SuperModule::bare(vec![0, 0]).with_action(Label::Z(0), a).unwrap();
        assert_eq!(is_simple(&m, &[Label::Z(0)]), Err(Error::SplittingFieldRequired));
    }
}
