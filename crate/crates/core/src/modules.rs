//! Graded matrix modules: the Clifford modules `V(s)` and their
//! restriction to the W-algebra.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::GaussianRational;
use crate::uh::UhElement;
use crate::wgen::WGenSet;
use crate::yangian::YGen;

type G = GaussianRational;

/// Name of an acting generator. Indices of `ξ` are stored 0-based and
/// displayed 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    Xi(usize),
    Phi(usize),
    Z(usize),
    U(usize, u8),
    T(YGen),
    Eta(usize),
    ZCentral(usize),
}

impl Label {
    pub fn parity(&self) -> u8 {
        match self {
            Label::Xi(_) | Label::Phi(_) | Label::Eta(_) => 1,
            Label::Z(_) | Label::ZCentral(_) => 0,
            Label::U(_, d) => *d,
            Label::T(g) => g.parity(),
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Xi(i) => write!(f, "xi_{}", i + 1),
            Label::Phi(k) => write!(f, "phi_{k}"),
            Label::Z(k) => write!(f, "z_{k}"),
            Label::U(k, d) => write!(f, "u_{k}({d})"),
            Label::T(g) => write!(f, "{g}"),
            Label::Eta(k) => write!(f, "eta_{k}"),
            Label::ZCentral(k) => write!(f, "Z_{k}"),
        }
    }
}

impl FromStr for Label {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::parse(0, format!("unknown generator label {s:?}"));
        let index = |t: &str| t.parse::<usize>().map_err(|_| bad());
        if s.starts_with("T^") {
            return s.parse::<YGen>().map(Label::T);
        }
        if let Some(rest) = s.strip_prefix("xi_") {
            let i = index(rest)?;
            return if i == 0 { Err(bad()) } else { Ok(Label::Xi(i - 1)) };
        }
        if let Some(rest) = s.strip_prefix("phi_") {
            return Ok(Label::Phi(index(rest)?));
        }
        if let Some(rest) = s.strip_prefix("eta_") {
            return Ok(Label::Eta(index(rest)?));
        }
        if let Some(rest) = s.strip_prefix("z_") {
            return Ok(Label::Z(index(rest)?));
        }
        if let Some(rest) = s.strip_prefix("Z_") {
            return Ok(Label::ZCentral(index(rest)?));
        }
        if let Some(rest) = s.strip_prefix("u_") {
            let (k, d) = rest.strip_suffix(')').and_then(|r| r.split_once('(')).ok_or_else(bad)?;
            let d = match d {
                "0" => 0,
                "1" => 1,
                _ => return Err(bad()),
            };
            return Ok(Label::U(index(k)?, d));
        }
        Err(bad())
    }
}

impl Serialize for Label {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Label {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Chosen square roots `r_i` of the parameters `s_i = r_i²`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RootVector {
    roots: Vec<G>,
}

impl RootVector {
    pub fn new(roots: Vec<G>) -> Self {
        RootVector { roots }
    }

    pub fn roots(&self) -> &[G] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn s(&self) -> Vec<G> {
        self.roots.iter().map(|r| r * r).collect()
    }

    /// Number of nonzero coordinates.
    pub fn m(&self) -> usize {
        self.roots.iter().filter(|r| !r.is_zero()).count()
    }

    pub fn is_regular(&self) -> bool {
        self.m() == self.len()
    }

    /// `s_i + s_j ≠ 0` for all `i ≠ j`.
    pub fn is_typical(&self) -> bool {
        let s = self.s();
        (0..s.len()).all(|i| (i + 1..s.len()).all(|j| !(&s[i] + &s[j]).is_zero()))
    }
}

/// A finite-dimensional module over a superalgebra, given by a basis of
/// homogeneous vectors and the matrices of named generators.
///
/// An action of parity `p` maps basis vector `b` into vectors of parity
/// `parity(b) + p`; this is checked on construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperModule {
    parities: Vec<u8>,
    actions: BTreeMap<Label, Matrix>,
}

impl SuperModule {
    pub fn new(parities: Vec<u8>, actions: BTreeMap<Label, Matrix>) -> Result<Self> {
        let m = SuperModule {
            parities,
            actions: BTreeMap::new(),
        };
        actions.into_iter().try_fold(m, |m, (l, a)| m.with_action(l, a))
    }

    /// The zero-action module on the given graded basis.
    pub fn bare(parities: Vec<u8>) -> Self {
        SuperModule {
            parities,
            actions: BTreeMap::new(),
        }
    }

    pub fn with_action(mut self, label: Label, a: Matrix) -> Result<Self> {
        let d = self.dim();
        if a.rows() != d || a.cols() != d {
            return Err(Error::RelationViolation(format!(
                "{label} has shape {}x{}, module has dimension {d}",
                a.rows(),
                a.cols()
            )));
        }
        let p = label.parity();
        for i in 0..d {
            for j in 0..d {
                if !a.get(i, j).is_zero() && (self.parities[i] + self.parities[j] + p) % 2 != 0 {
                    return Err(Error::RelationViolation(format!("{label} does not respect the grading")));
                }
            }
        }
        self.actions.insert(label, a);
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.parities.len()
    }

    /// `(even, odd)` dimensions.
    pub fn dims(&self) -> (usize, usize) {
        let odd = self.parities.iter().filter(|&&p| p == 1).count();
        (self.dim() - odd, odd)
    }

    pub fn parities(&self) -> &[u8] {
        &self.parities
    }

    /// The grading involution `J`, `+1` on even and `-1` on odd vectors.
    pub fn grading(&self) -> Matrix {
        let v: Vec<G> = self
            .parities
            .iter()
            .map(|&p| G::from_int(if p == 0 { 1 } else { -1 }))
            .collect();
        Matrix::diag(&v)
    }

    pub fn actions(&self) -> &BTreeMap<Label, Matrix> {
        &self.actions
    }

    pub fn action(&self, label: &Label) -> Option<&Matrix> {
        self.actions.get(label)
    }

    /// The action of `label`, or an error naming the missing generator.
    pub fn require(&self, label: &Label) -> Result<&Matrix> {
        self.action(label)
            .ok_or_else(|| Error::InvalidSpec(format!("module has no action for {label}")))
    }

    pub fn labels(&self) -> Vec<Label> {
        self.actions.keys().copied().collect()
    }

    /// The module restricted to `labels` (missing labels are skipped).
    pub fn restrict(&self, labels: &[Label]) -> Self {
        SuperModule {
            parities: self.parities.clone(),
            actions: labels
                .iter()
                .filter_map(|l| self.actions.get(l).map(|a| (*l, a.clone())))
                .collect(),
        }
    }

    /// The same actions with the grading reversed.
    pub fn parity_shift(&self) -> Self {
        SuperModule {
            parities: self.parities.iter().map(|p| 1 - p).collect(),
            actions: self.actions.clone(),
        }
    }

    /// The submodule spanned by the leading `k` vectors of the homogeneous
    /// basis `basis` (columns), together with the quotient by it.
    ///
    /// Fails unless every action preserves that span.
    pub fn split_along(&self, basis: &[Vec<G>], k: usize) -> Result<(Self, Self)> {
        let d = self.dim();
        let p = Matrix::from_columns(d, basis);
        let pinv = p.inverse()?;
        let par: Vec<u8> = basis.iter().map(|v| vector_parity(v, &self.parities)).collect::<Result<_>>()?;
        let mut sub = SuperModule::bare(par[..k].to_vec());
        let mut quo = SuperModule::bare(par[k..].to_vec());
        for (l, a) in &self.actions {
            let c = &(&pinv * a) * &p;
            for i in k..d {
                for j in 0..k {
                    if !c.get(i, j).is_zero() {
                        return Err(Error::RelationViolation(format!("{l} does not preserve the subspace")));
                    }
                }
            }
            let top: Vec<usize> = (0..k).collect();
            let bottom: Vec<usize> = (k..d).collect();
            sub = sub.with_action(*l, c.submatrix(&top, &top))?;
            quo = quo.with_action(*l, c.submatrix(&bottom, &bottom))?;
        }
        Ok((sub, quo))
    }
}

/// Parity of a homogeneous vector.
pub(crate) fn vector_parity(v: &[G], parities: &[u8]) -> Result<u8> {
    let mut seen = None;
    for (x, &p) in v.iter().zip(parities) {
        if x.is_zero() {
            continue;
        }
        match seen {
            None => seen = Some(p),
            Some(q) if q != p => return Err(Error::Malformed("inhomogeneous vector".into())),
            _ => {}
        }
    }
    seen.ok_or(Error::ZeroInput)
}

/// Clifford matrices for the listed generator indices, paired consecutively
/// into 2-dimensional blocks combined by a Jordan–Wigner product; an odd
/// leftover is paired with a dummy generator of root 1 whose action is
/// dropped. Returns the number of blocks and the matrix of each index.
fn clifford_blocks(roots: &[G], indices: &[usize]) -> (usize, BTreeMap<usize, Matrix>) {
    let blocks = indices.len().div_ceil(2);
    let g = Matrix::diag(&[G::one(), -G::one()]);
    let id2 = Matrix::identity(2);
    let embed = |block: usize, local: &Matrix| -> Matrix {
        let mut out = Matrix::identity(1);
        for b in 0..blocks {
            let factor = match b.cmp(&block) {
                std::cmp::Ordering::Less => &g,
                std::cmp::Ordering::Equal => local,
                std::cmp::Ordering::Greater => &id2,
            };
            out = out.kron(factor);
        }
        out
    };
    let mut out = BTreeMap::new();
    for (pos, &i) in indices.iter().enumerate() {
        let r = &roots[i];
        let local = if pos % 2 == 0 {
            Matrix::from_rows(vec![vec![G::zero(), r.clone()], vec![r.clone(), G::zero()]])
        } else {
            let ri = r * &G::i();
            Matrix::from_rows(vec![vec![G::zero(), ri.clone()], vec![-ri, G::zero()]])
        }
        .expect("2x2");
        out.insert(i, embed(pos / 2, &local));
    }
    (blocks, out)
}

fn tensor_parities(blocks: usize) -> Vec<u8> {
    (0..1usize << blocks).map(|v| (v.count_ones() % 2) as u8).collect()
}

/// `V(s)` from chosen roots: nonzero generators act through Clifford
/// blocks, generators with root 0 act by 0, and the dimension is
/// `2^⌈m/2⌉`.
pub fn build_v(roots: &RootVector) -> SuperModule {
    let r = roots.roots();
    let nonzero: Vec<usize> = (0..r.len()).filter(|&i| !r[i].is_zero()).collect();
    let (blocks, mats) = clifford_blocks(r, &nonzero);
    let parities = tensor_parities(blocks);
    let d = parities.len();
    let mut actions = BTreeMap::new();
    for i in 0..r.len() {
        actions.insert(Label::Xi(i), mats.get(&i).cloned().unwrap_or_else(|| Matrix::zeros(d, d)));
    }
    SuperModule::new(parities, actions).expect("Clifford blocks respect the grading")
}

/// The `(1|1)`-dimensional module of a pair of roots, kept 2-dimensional
/// even when both roots vanish.
pub fn build_v_pair(r1: &G, r2: &G) -> SuperModule {
    let roots = [r1.clone(), r2.clone()];
    let (_, mats) = clifford_blocks(&roots, &[0, 1]);
    let actions = mats.into_iter().map(|(i, m)| (Label::Xi(i), m)).collect();
    SuperModule::new(vec![0, 1], actions).expect("Clifford blocks respect the grading")
}

/// Checks `ξ_i ξ_j + ξ_j ξ_i = 2 δ_ij s_i` on the `ξ` actions of `m`.
pub fn check_clifford(m: &SuperModule, s: &[G]) -> Result<()> {
    let d = m.dim();
    let xi: Vec<&Matrix> = (0..s.len()).map(|i| m.require(&Label::Xi(i))).collect::<Result<_>>()?;
    for i in 0..s.len() {
        for j in i..s.len() {
            let lhs = xi[i].anticommutator(xi[j]);
            let rhs = if i == j {
                Matrix::scalar(d, &s[i] * &G::from_int(2))
            } else {
                Matrix::zeros(d, d)
            };
            if lhs != rhs {
                return Err(Error::RelationViolation(format!(
                    "xi_{} xi_{} + xi_{} xi_{} != {}",
                    i + 1,
                    j + 1,
                    j + 1,
                    i + 1,
                    if i == j { "2 s_i" } else { "0" }
                )));
            }
        }
    }
    Ok(())
}

/// Evaluates elements of U(h) on a module through its `ξ` matrices after
/// substituting `x = s`.
pub struct Evaluator<'a> {
    xi: Vec<&'a Matrix>,
    s: Vec<G>,
    dim: usize,
    products: BTreeMap<u32, Matrix>,
}

impl<'a> Evaluator<'a> {
    pub fn new(m: &'a SuperModule, s: &[G]) -> Result<Self> {
        let xi = (0..s.len()).map(|i| m.require(&Label::Xi(i))).collect::<Result<_>>()?;
        let mut products = BTreeMap::new();
        products.insert(0, Matrix::identity(m.dim()));
        Ok(Evaluator {
            xi,
            s: s.to_vec(),
            dim: m.dim(),
            products,
        })
    }

    /// Ascending product `ξ_{s_1} ξ_{s_2} ⋯` for the subset `mask`.
    fn product(&mut self, mask: u32) -> Matrix {
        if let Some(p) = self.products.get(&mask) {
            return p.clone();
        }
        let top = 31 - mask.leading_zeros();
        let rest = self.product(mask & !(1 << top));
        let p = &rest * self.xi[top as usize];
        self.products.insert(mask, p.clone());
        p
    }

    pub fn eval(&mut self, a: &UhElement) -> Result<Matrix> {
        if a.arity() != self.s.len() {
            return Err(Error::ArityMismatch {
                left: a.arity(),
                right: self.s.len(),
            });
        }
        let mut out = Matrix::zeros(self.dim, self.dim);
        for (mask, p) in a.terms() {
            let c = p.eval(&self.s)?;
            if !c.is_zero() {
                out = &out + &self.product(*mask).scale(&c);
            }
        }
        Ok(out)
    }
}

/// Adds the actions of every generator in `gens` to a module carrying
/// Clifford `ξ` actions for the parameters `s`.
pub fn w_action(m: &SuperModule, gens: &WGenSet, s: &[G]) -> Result<SuperModule> {
    if s.len() != gens.n() {
        return Err(Error::LengthMismatch {
            expected: gens.n(),
            got: s.len(),
        });
    }
    check_clifford(m, s)?;
    let mut ev = Evaluator::new(m, s)?;
    let mut out = m.clone();
    for (k, p) in gens.phi().iter().enumerate() {
        out = out.with_action(Label::Phi(k), ev.eval(p)?)?;
    }
    for (k, z) in gens.z().iter().enumerate() {
        out = out.with_action(Label::Z(k), ev.eval(z)?)?;
    }
    for k in 0..=gens.n() {
        for d in 0..2u8 {
            out = out.with_action(Label::U(k, d), ev.eval(&gens.u(k, d))?)?;
        }
    }
    Ok(out)
}

/// The labels of the W-generators of `W(Q(n))`.
pub fn w_labels(n: usize) -> Vec<Label> {
    let mut out: Vec<Label> = (0..n).map(Label::Phi).collect();
    out.extend((0..n).map(Label::Z));
    for k in 0..=n {
        out.push(Label::U(k, 0));
        out.push(Label::U(k, 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> G {
        s.parse().unwrap()
    }

    #[test]
    fn label_round_trip() {
        for text in ["xi_1", "phi_0", "z_3", "u_2(0)", "u_0(1)", "eta_2", "Z_4", "T^(3)_{1,-1}"] {
            let l: Label = text.parse().unwrap();
            assert_eq!(l.to_string(), text);
        }
        for bad in ["xi_0", "u_2(2)", "phi_", "w_1", "T^(1)_{2,1}"] {
            assert!(bad.parse::<Label>().is_err(), "{bad}");
        }
    }

    #[test]
    fn n2_matrices() {
        let v = build_v(&RootVector::new(vec![g("3"), g("5")]));
        assert_eq!(v.dims(), (1, 1));
        let xi1 = Matrix::from_rows(vec![vec![g("0"), g("3")], vec![g("3"), g("0")]]).unwrap();
        let xi2 = Matrix::from_rows(vec![vec![g("0"), g("5i")], vec![g("-5i"), g("0")]]).unwrap();
        assert_eq!(v.action(&Label::Xi(0)), Some(&xi1));
        assert_eq!(v.action(&Label::Xi(1)), Some(&xi2));
    }

    #[test]
    fn dimensions_and_relations() {
        let roots = RootVector::new(vec![g("1"), g("0"), g("2"), g("1+i"), g("-3")]);
        let v = build_v(&roots);
        assert_eq!(v.dim(), 4);
        check_clifford(&v, &roots.s()).unwrap();
        let trivial = build_v(&RootVector::new(vec![g("0"), g("0")]));
        assert_eq!(trivial.dims(), (1, 0));
        let one = build_v(&RootVector::new(vec![g("1")]));
        assert_eq!(one.dims(), (1, 1));
    }

    #[test]
    fn w_action_n2_scalars() {
        let roots = RootVector::new(vec![g("1"), g("2")]);
        let s = roots.s();
        let v = w_action(&build_v(&roots), &WGenSet::new(2), &s).unwrap();
        assert_eq!(v.action(&Label::Z(0)), Some(&Matrix::scalar(2, g("5"))));
        // z'_1 = diag(s1 s2 + r1 r2 i, s1 s2 - r1 r2 i)
        assert_eq!(v.action(&Label::U(2, 0)), Some(&Matrix::diag(&[g("4+2i"), g("4-2i")])));
    }
}
