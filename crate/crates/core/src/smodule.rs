//! The simple W-modules `S(t, λ)`, their isomorphism test, the core
//! representation and the atypical composition series at `n = 2`.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::central::{core, z_values};
use crate::check::Check;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::meataxe::{has_complement, is_simple, sub_and_quotient, Simplicity};
use crate::modules::{build_v, build_v_pair, w_action, w_labels, Label, RootVector, SuperModule};
use crate::scalar::GaussianRational;
use crate::symmetric::elementary_symmetric_all;
use crate::wgen::WGenSet;
use crate::yangian::{GammaF, YGen, YModule};

type G = GaussianRational;

/// `S(t, λ) = ℂ^{⊠r} ⊠ Γ_{t_1} ⊠ … ⊠ Γ_{t_p} ⊠ V(λ)` for `W(Q(n))`,
/// `n = r + 2p + q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawSpec", into = "RawSpec")]
pub struct SModuleSpec {
    r: usize,
    t: Vec<G>,
    lambda_roots: RootVector,
}

#[derive(Serialize, Deserialize)]
struct RawSpec {
    #[serde(default)]
    r: usize,
    #[serde(default)]
    t: Vec<G>,
    #[serde(default)]
    lambda_roots: Vec<G>,
}

impl TryFrom<RawSpec> for SModuleSpec {
    type Error = Error;
    fn try_from(raw: RawSpec) -> Result<Self> {
        SModuleSpec::new(raw.r, raw.t, RootVector::new(raw.lambda_roots))
    }
}

impl From<SModuleSpec> for RawSpec {
    fn from(s: SModuleSpec) -> Self {
        RawSpec {
            r: s.r,
            t: s.t,
            lambda_roots: s.lambda_roots.roots().to_vec(),
        }
    }
}

impl SModuleSpec {
    /// Requires `t_i ≠ 0` and `λ` regular and typical.
    pub fn new(r: usize, t: Vec<G>, lambda_roots: RootVector) -> Result<Self> {
        if t.iter().any(Zero::is_zero) {
            return Err(Error::InvalidSpec("every t_i must be nonzero".into()));
        }
        if !lambda_roots.is_regular() {
            return Err(Error::InvalidSpec("every lambda_i must be nonzero".into()));
        }
        if !lambda_roots.is_typical() {
            return Err(Error::InvalidSpec("lambda_i + lambda_j must be nonzero for i != j".into()));
        }
        if r + 2 * t.len() + lambda_roots.len() == 0 {
            return Err(Error::InvalidSpec("n = r + 2p + q must be positive".into()));
        }
        Ok(SModuleSpec { r, t, lambda_roots })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn t(&self) -> &[G] {
        &self.t
    }

    pub fn lambda_roots(&self) -> &RootVector {
        &self.lambda_roots
    }

    pub fn lambda(&self) -> Vec<G> {
        self.lambda_roots.s()
    }

    pub fn p(&self) -> usize {
        self.t.len()
    }

    pub fn q(&self) -> usize {
        self.lambda_roots.len()
    }

    pub fn n(&self) -> usize {
        self.r + 2 * self.p() + self.q()
    }
}

/// The `W(Q(q))`-module `V(λ)` with its u-actions, or for `q = 0` the
/// one-dimensional module with `u_0(0) = 1`.
fn lambda_module(spec: &SModuleSpec, gens: Option<&WGenSet>) -> Result<SuperModule> {
    let Some(gens) = gens.filter(|_| spec.q() > 0) else {
        return SuperModule::new(
            vec![0],
            BTreeMap::from([
                (Label::U(0, 0), Matrix::identity(1)),
                (Label::U(0, 1), Matrix::zeros(1, 1)),
            ]),
        );
    };
    if gens.n() != spec.q() {
        return Err(Error::LengthMismatch {
            expected: spec.q(),
            got: gens.n(),
        });
    }
    w_action(&build_v(spec.lambda_roots()), gens, &spec.lambda())
}

pub fn build_s(spec: &SModuleSpec) -> Result<SuperModule> {
    build_s_from(spec, lambda_module(spec, q_gens(spec).as_ref())?)
}

fn q_gens(spec: &SModuleSpec) -> Option<WGenSet> {
    (spec.q() > 0).then(|| WGenSet::new(spec.q()))
}

/// `u_k(d) = Σ_{2a+j=k} σ_a(t) u⁻_j(d)` with `u⁻` the actions of the
/// length-`q` W-algebra on `V(λ)`; then `φ_i = (-½)^i ad^i(u_2(0))(u_1(1))`,
/// `z_{2i} = ½[φ_0, φ_{2i}]` and `z_{2i+1} = u_{2i+2}(0)`.
pub fn build_s_with(spec: &SModuleSpec, gens: &WGenSet) -> Result<SuperModule> {
    build_s_from(spec, lambda_module(spec, Some(gens))?)
}

fn build_s_from(spec: &SModuleSpec, base: SuperModule) -> Result<SuperModule> {
    let (n, q, d) = (spec.n(), spec.q(), base.dim());
    let sigma = elementary_symmetric_all(spec.t());
    let mut out = SuperModule::bare(base.parities().to_vec());
    let mut u: BTreeMap<(usize, u8), Matrix> = BTreeMap::new();
    for k in 0..=n {
        for dd in 0..2u8 {
            let mut acc = Matrix::zeros(d, d);
            for (a, s) in sigma.iter().enumerate() {
                if 2 * a > k || k - 2 * a > q {
                    continue;
                }
                acc = &acc + &base.require(&Label::U(k - 2 * a, dd))?.scale(s);
            }
            u.insert((k, dd), acc);
        }
    }
    let zero = Matrix::zeros(d, d);
    let u2 = u.get(&(2, 0)).cloned().unwrap_or_else(|| zero.clone());
    let half = G::ratio(-1, 2);
    let mut phi = vec![u[&(1, 1)].clone()];
    for _ in 1..n {
        let next = u2.commutator(phi.last().expect("nonempty")).scale(&half);
        phi.push(next);
    }
    for (k, a) in phi.iter().enumerate() {
        out = out.with_action(Label::Phi(k), a.clone())?;
    }
    for k in 0..n {
        let z = if k % 2 == 0 {
            phi[0].anticommutator(&phi[k]).scale(&G::ratio(1, 2))
        } else {
            u.get(&(k + 1, 0)).cloned().unwrap_or_else(|| zero.clone())
        };
        out = out.with_action(Label::Z(k), z)?;
    }
    for ((k, dd), a) in u {
        out = out.with_action(Label::U(k, dd), a)?;
    }
    Ok(out)
}

/// For `q = 0`: `u_k(0)` acts by `σ_{k/2}(t)` for even `k ≤ 2p` and by 0
/// otherwise; every `u_k(1)` acts by 0.
pub fn check_one_dimensional_table(spec: &SModuleSpec, module: &SuperModule) -> Result<Check> {
    let mut check = Check::new("one-dimensional-action-table")
        .param("r", spec.r())
        .param("t", join(spec.t()));
    if spec.q() != 0 {
        return Err(Error::InvalidSpec("the action table applies to q = 0".into()));
    }
    let sigma = elementary_symmetric_all(spec.t());
    check.require(module.dim() == 1, || format!("dimension {}", module.dim()));
    for k in 0..=spec.n() {
        let expected = if k % 2 == 0 {
            sigma.get(k / 2).cloned().unwrap_or_else(G::zero)
        } else {
            G::zero()
        };
        let got = module.require(&Label::U(k, 0))?.as_scalar();
        check.require(got.as_ref() == Some(&expected), || format!("u_{k}(0) acts by {got:?}, expected {expected}"));
        let odd = module.require(&Label::U(k, 1))?;
        check.require(odd.is_zero(), || format!("u_{k}(1) acts nontrivially"));
    }
    Ok(check)
}

fn join(v: &[G]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

/// Both isomorphism tests for `S(t, λ)` and `S(t', λ')`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoComparison {
    /// `r = r'`, `t` a permutation of `t'`, `λ` a permutation of `λ'`.
    pub multiset: bool,
    /// `tr u_k(0)` agree for `k ≤ n`; absent when `n ≠ n'`.
    pub trace: Option<bool>,
}

impl IsoComparison {
    pub fn consistent(&self) -> bool {
        self.trace.is_none_or(|t| t == self.multiset)
    }
}

fn sorted(mut v: Vec<G>) -> Vec<G> {
    v.sort();
    v
}

/// `tr u_k(0)` on `S(t, λ)` for `k = 0..=n`, read off the built module.
pub fn trace_vector(module: &SuperModule, n: usize) -> Result<Vec<G>> {
    (0..=n).map(|k| Ok(module.require(&Label::U(k, 0))?.trace())).collect()
}

pub fn iso_class_s(a: &SModuleSpec, b: &SModuleSpec) -> Result<IsoComparison> {
    let multiset = a.r == b.r && sorted(a.t.clone()) == sorted(b.t.clone()) && sorted(a.lambda()) == sorted(b.lambda());
    let trace = if a.n() == b.n() {
        Some(trace_vector(&build_s(a)?, a.n())? == trace_vector(&build_s(b)?, b.n())?)
    } else {
        None
    };
    Ok(IsoComparison { multiset, trace })
}

/// `V(c(s))` with canonical square roots, as a W-module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreRepresentation {
    pub roots: RootVector,
    pub module: SuperModule,
}

pub fn core_representation(s: &[G]) -> Result<CoreRepresentation> {
    let c = core(s);
    let roots: Vec<G> = c
        .values()
        .iter()
        .map(|v| v.sqrt().ok_or_else(|| Error::NoExactSqrt(v.to_string())))
        .collect::<Result<_>>()?;
    let roots = RootVector::new(roots);
    let module = if roots.is_empty() {
        SuperModule::bare(vec![0])
    } else {
        w_action(&build_v(&roots), &WGenSet::new(roots.len()), &roots.s())?
    };
    Ok(CoreRepresentation { roots, module })
}

/// A one-dimensional composition factor `Γ_t` or `ΠΓ_t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factor {
    pub parity: u8,
    /// The scalar `t` by which `z'_1 = u_2(0)` acts.
    pub z1: G,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompositionSeries {
    /// Submodule first.
    pub factors: Vec<Factor>,
    pub split: bool,
}

fn factor_of(m: &SuperModule) -> Result<Factor> {
    let z1 = m
        .require(&Label::U(2, 0))?
        .as_scalar()
        .ok_or_else(|| Error::RelationViolation("z'_1 is not scalar on a factor".into()))?;
    Ok(Factor {
        parity: m.parities()[0],
        z1,
    })
}

/// The `n = 2` module with roots `(r, sign·i·r)`, so `s = (r², -r²)`.
/// At `r = 0` the module is `ℂ ⊕ Πℂ`.
pub fn composition_series_n2(root: &G, sign: i8) -> Result<CompositionSeries> {
    if sign.abs() != 1 {
        return Err(Error::InvalidSpec("sign must be 1 or -1".into()));
    }
    let r2 = &(root * &G::i()) * &G::from_int(sign.into());
    let base = if root.is_zero() {
        build_v_pair(root, &r2)
    } else {
        build_v(&RootVector::new(vec![root.clone(), r2.clone()]))
    };
    let s = vec![root * root, &r2 * &r2];
    let labels = w_labels(2);
    let module = w_action(&base, &WGenSet::new(2), &s)?.restrict(&labels);
    let witness = match is_simple(&module, &labels)? {
        Simplicity::Reducible(w) => w,
        _ => return Err(Error::InvalidSpec("module is simple; not of the atypical shape".into())),
    };
    if witness.len() != 1 || module.dim() != 2 {
        return Err(Error::InvalidSpec("expected a two-dimensional module with a line submodule".into()));
    }
    let (sub, quo) = sub_and_quotient(&module, &witness)?;
    Ok(CompositionSeries {
        factors: vec![factor_of(&sub)?, factor_of(&quo)?],
        split: has_complement(&module, &labels, &witness)?,
    })
}

/// `S(t, λ)` and `V(λ) ⊗ Γ_f` with `f = Π(1 + t_i u^{-2})` have the same
/// Yangian actions up to order `order`.
pub fn compare_s_with_twist(spec: &SModuleSpec, order: usize) -> Result<Check> {
    let mut check = Check::new("s-equals-twist")
        .param("t", join(spec.t()))
        .param("lambda_roots", join(spec.lambda_roots().roots()))
        .param("order", order);
    let lhs = YModule::from_w_module(&build_s(spec)?, spec.n(), order)?;
    let base = lambda_module(spec, q_gens(spec).as_ref())?;
    let rhs = YModule::from_w_module(&base, spec.q(), order)?.twist(&GammaF::from_roots(spec.t()));
    for g in YGen::all(order) {
        let (a, b) = (lhs.action(g)?, rhs.action(g)?);
        check.require(a == b, || format!("{g} differs"));
    }
    Ok(check)
}

/// The explicit even isomorphism `D = diag(r_2 + r_1 i, r_1 + r_2 i)` from
/// `V(s_1, s_2)` to `V(s_2, s_1)`.
pub fn swap_intertwiner(r1: &G, r2: &G) -> Matrix {
    let i = G::i();
    Matrix::diag(&[r2 + &(r1 * &i), r1 + &(r2 * &i)])
}

/// `S(t, λ)` is simple on the W-labels, of type Q iff `q` is odd, of
/// dimension `2^{⌈q/2⌉}`, with even `z_{2k}` acting by `z_{2k}(λ)`.
pub fn check_s_simple(spec: &SModuleSpec) -> Result<Check> {
    let mut check = Check::new("s-module-simple")
        .param("r", spec.r())
        .param("t", join(spec.t()))
        .param("lambda_roots", join(spec.lambda_roots().roots()));
    let m = build_s(spec)?;
    let labels = w_labels(spec.n());
    let q = spec.q();
    let dim = 1usize << q.div_ceil(2);
    check.require(m.dim() == dim, || format!("dimension {} != {dim}", m.dim()));
    let verdict = is_simple(&m, &labels)?;
    let expected = if q % 2 == 1 { Simplicity::SimpleQ } else { Simplicity::SimpleM };
    check.require(verdict == expected, || format!("verdict {verdict:?}, expected {expected:?}"));
    let z = z_values(&spec.lambda(), spec.n());
    for k in (0..spec.n()).step_by(2) {
        let action = m.require(&Label::Z(k))?.as_scalar();
        check.require(action.as_ref() == Some(&z[k / 2]), || format!("z_{k} acts as {action:?}, expected {}", z[k / 2]));
    }
    Ok(check)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> G {
        s.parse().unwrap()
    }

    #[test]
    fn gamma_t_as_s() {
        let spec = SModuleSpec::new(0, vec![g("7")], RootVector::new(vec![])).unwrap();
        let m = build_s(&spec).unwrap();
        for l in [Label::Phi(0), Label::Phi(1), Label::Z(0)] {
            assert!(m.require(&l).unwrap().is_zero(), "{l}");
        }
        assert_eq!(m.require(&Label::Z(1)).unwrap(), &Matrix::scalar(1, g("7")));
        assert!(check_one_dimensional_table(&spec, &m).unwrap().holds);
    }

    #[test]
    fn atypical_n2() {
        let c = composition_series_n2(&G::from_int(1), 1).unwrap();
        assert_eq!(
            c.factors,
            vec![Factor { parity: 1, z1: g("0") }, Factor { parity: 0, z1: g("-2") }]
        );
        assert!(!c.split);
        let c = composition_series_n2(&G::zero(), 1).unwrap();
        assert!(c.split);
        assert!(c.factors.iter().all(|f| f.z1.is_zero()));
    }

    #[test]
    fn p0_matches_v() {
        let roots = RootVector::new(vec![g("1"), g("2")]);
        let spec = SModuleSpec::new(0, vec![], roots.clone()).unwrap();
        let v = w_action(&build_v(&roots), &WGenSet::new(2), &roots.s()).unwrap();
        assert_eq!(build_s(&spec).unwrap(), v.restrict(&w_labels(2)));
    }
}
