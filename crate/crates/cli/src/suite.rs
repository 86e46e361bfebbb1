//! The verification suites behind `verify`.
//!
//! Each suite draws its random instances from its own ChaCha stream of the
//! configured seed, so a suite's records do not depend on which other
//! suites run.

use std::collections::BTreeMap;
use std::time::Instant;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wq_core::central::{char_series, compare_central, core, z_values};
use wq_core::meataxe::{composition_factors, find_intertwiner, is_intertwiner, is_simple, Simplicity};
use wq_core::modules::{build_v, check_clifford, w_action, w_labels, Label, RootVector, SuperModule};
use wq_core::smodule::{
    build_s, check_one_dimensional_table, check_s_simple, compare_s_with_twist, composition_series_n2,
    iso_class_s, swap_intertwiner, Factor, SModuleSpec,
};
use wq_core::symmetric::elementary_symmetric_all;
use wq_core::wgen::{self, WGenSet};
use wq_core::yangian::{
    check_diagram, check_eta_images, check_generation, check_rtt_with, check_sign_symmetry,
    check_step_identities, check_threeterms_with, chi_inverse, find_recurrence, weight_decomposition, GammaF,
    YModule, YangianImages,
};
use wq_core::{Check, GaussianRational as G, Monomial, MultiPoly, Result, UhElement, UniPoly};

use crate::cache::Cache;
use crate::config::{Suite, SuiteConfig};
use crate::report::{Record, Report};

/// Random instances over small Gaussian integers.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        Sampler { rng }
    }

    pub fn range(&mut self, lo: usize, hi: usize) -> usize {
        self.rng.gen_range(lo..=hi)
    }

    pub fn coin(&mut self) -> bool {
        self.rng.gen_bool(0.5)
    }

    pub fn gaussian(&mut self, bound: i64) -> G {
        G::complex(self.rng.gen_range(-bound..=bound), self.rng.gen_range(-bound..=bound))
    }

    pub fn nonzero(&mut self, bound: i64) -> G {
        loop {
            let v = self.gaussian(bound);
            if !v.is_zero() {
                return v;
            }
        }
    }

    pub fn values(&mut self, n: usize, bound: i64) -> Vec<G> {
        (0..n).map(|_| self.gaussian(bound)).collect()
    }

    /// Nonzero roots whose squares are pairwise non-opposite.
    pub fn typical_roots(&mut self, n: usize) -> RootVector {
        loop {
            let r = RootVector::new((0..n).map(|_| self.nonzero(4)).collect());
            if r.is_typical() {
                return r;
            }
        }
    }

    /// A random element with up to three terms, exponents at most 2.
    pub fn uh_element(&mut self, n: usize) -> UhElement {
        let mut out = UhElement::zero(n);
        for _ in 0..self.range(1, 3) {
            let mask = self.rng.gen_range(0..1u32 << n);
            let exps: Vec<u8> = (0..n).map(|_| self.rng.gen_range(0..=2)).collect();
            let p = MultiPoly::monomial(n, Monomial::from_exponents(&exps), self.nonzero(3));
            out = &out + &UhElement::from_terms(n, [(mask, p)]).expect("matching arity");
        }
        out
    }

    pub fn homogeneous_uh(&mut self, n: usize, parity: u8) -> UhElement {
        let (even, odd) = self.uh_element(n).parity_split();
        if parity == 0 {
            even
        } else {
            odd
        }
    }

    pub fn s_spec(&mut self, p: usize, q: usize, r: usize) -> SModuleSpec {
        let t = (0..p).map(|_| self.nonzero(4)).collect();
        SModuleSpec::new(r, t, self.typical_roots(q)).expect("sampled spec is valid")
    }
}

/// Collects timed records for one suite.
pub struct Recorder<'a> {
    suite: Suite,
    records: &'a mut Vec<Record>,
}

impl Recorder<'_> {
    /// Runs `f`; an error becomes a failed record of `identity`.
    pub fn run(&mut self, identity: &str, params: &[(&str, String)], f: impl FnOnce() -> Result<Check>) {
        let start = Instant::now();
        let check = f().unwrap_or_else(|e| {
            let mut c = Check::new(identity);
            for (k, v) in params {
                c = c.param(k, v);
            }
            c.fail(format!("error: {e}"));
            c
        });
        let ms = start.elapsed().as_millis() as u64;
        self.records.push(Record::from_check(self.suite.name(), check, ms));
    }
}

pub fn run(config: &SuiteConfig, cache: &Cache) -> Report {
    let mut records = Vec::new();
    let mut gens = GenStore {
        cache,
        sets: BTreeMap::new(),
    };
    for suite in Suite::ALL {
        if !config.runs(suite) {
            continue;
        }
        let mut sampler = Sampler::new(config.seed, suite as u64);
        let mut rec = Recorder {
            suite,
            records: &mut records,
        };
        match suite {
            Suite::Uh => uh_suite(config, &mut sampler, &mut rec),
            Suite::Wgen => wgen_suite(config, &mut sampler, &mut rec),
            Suite::Modules => modules_suite(config, &mut sampler, &mut rec, &mut gens),
            Suite::Yangian => yangian_suite(config, &mut sampler, &mut rec, &mut gens),
        }
    }
    Report::new(config.clone(), records)
}

/// Generator sets by arity, through the cache.
pub struct GenStore<'a> {
    cache: &'a Cache,
    sets: BTreeMap<usize, WGenSet>,
}

impl<'a> GenStore<'a> {
    pub fn new(cache: &'a Cache) -> Self {
        GenStore {
            cache,
            sets: BTreeMap::new(),
        }
    }

    pub fn get(&mut self, n: usize) -> &WGenSet {
        self.sets.entry(n).or_insert_with(|| self.cache.gens(n))
    }

    /// `V(s)` with its W-actions.
    pub fn v_module(&mut self, roots: &RootVector) -> Result<SuperModule> {
        w_action(&build_v(roots), self.get(roots.len()), &roots.s())
    }
}

fn text(v: &[G]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

// ---------------------------------------------------------------- uh

pub fn check_clifford_relations(n: usize) -> Check {
    let mut check = Check::new("clifford-relations").param("n", n);
    for i in 0..n {
        let xi = UhElement::xi(n, i);
        let sq = &xi * &xi;
        check.require(sq == UhElement::x(n, i), || format!("xi{}^2 = {sq}", i + 1));
        for j in 0..n {
            let xj = UhElement::x(n, j);
            check.require(&xi * &xj == &xj * &xi, || format!("x{} does not commute with xi{}", j + 1, i + 1));
            if i != j {
                let xj = UhElement::xi(n, j);
                let anti = &(&xi * &xj) + &(&xj * &xi);
                check.require(anti.is_zero(), || format!("xi{} xi{} + xi{} xi{} = {anti}", i + 1, j + 1, j + 1, i + 1));
            }
        }
    }
    check
}

pub fn check_associativity(a: &UhElement, b: &UhElement, c: &UhElement) -> Check {
    let mut check = Check::new("associativity").param("a", a).param("b", b).param("c", c);
    let (l, r) = (&(a * b) * c, a * &(b * c));
    check.require(l == r, || format!("(ab)c = {l}, a(bc) = {r}"));
    check
}

/// `[a,[b,c]] = [[a,b],c] + (-1)^{|a||b|}[b,[a,c]]` for homogeneous inputs.
pub fn check_super_jacobi(a: &UhElement, b: &UhElement, c: &UhElement) -> Result<Check> {
    let mut check = Check::new("super-jacobi").param("a", a).param("b", b).param("c", c);
    let pa = a.parity().unwrap_or(0);
    let pb = b.parity().unwrap_or(0);
    let lhs = a.super_commutator(&b.super_commutator(c)?)?;
    let first = a.super_commutator(b)?.super_commutator(c)?;
    let second = b.super_commutator(&a.super_commutator(c)?)?;
    let rhs = if pa * pb == 1 { &first - &second } else { &first + &second };
    check.require(lhs == rhs, || format!("{lhs} vs {rhs}"));
    Ok(check)
}

pub fn check_render_roundtrip(a: &UhElement) -> Result<Check> {
    let mut check = Check::new("render-parse-roundtrip").param("element", a);
    let back = UhElement::parse(&a.render(), a.arity())?;
    check.require(&back == a, || format!("reparsed as {back}"));
    Ok(check)
}

fn uh_suite(config: &SuiteConfig, s: &mut Sampler, rec: &mut Recorder) {
    for n in 1..=config.n_max {
        rec.run("clifford-relations", &[], || Ok(check_clifford_relations(n)));
        for _ in 0..config.trials.div_ceil(4) {
            let (a, b, c) = (s.uh_element(n), s.uh_element(n), s.uh_element(n));
            rec.run("associativity", &[], || Ok(check_associativity(&a, &b, &c)));
            let pa = s.range(0, 1) as u8;
            let pb = s.range(0, 1) as u8;
            let pc = s.range(0, 1) as u8;
            let (a, b, c) = (s.homogeneous_uh(n, pa), s.homogeneous_uh(n, pb), s.homogeneous_uh(n, pc));
            rec.run("super-jacobi", &[], || check_super_jacobi(&a, &b, &c));
            rec.run("render-parse-roundtrip", &[], || check_render_roundtrip(&a));
        }
    }
}

// ---------------------------------------------------------------- wgen

/// `det Γ = c · p² · x_1⋯x_n` with `c` a nonzero constant, recorded.
pub fn check_gram(n: usize) -> Result<Check> {
    let r = wgen::verify_gram_det(n)?;
    let mut check = Check::new("gram-determinant").param("n", n);
    if let Some(c) = &r.constant {
        check = check.constant("c", c);
    }
    check.require(r.holds, || "det / (p^2 x1...xn) is not a nonzero constant".to_string());
    Ok(check)
}

/// Jacobian certificate at the first of up to `attempts` random points
/// where the determinant is nonzero; a zero is inconclusive, not a
/// refutation.
pub fn check_jacobian_sampled(n: usize, s: &mut Sampler, attempts: usize) -> Result<Check> {
    let mut last = None;
    for _ in 0..attempts {
        let point: Vec<G> = (0..n).map(|_| s.nonzero(5)).collect();
        let c = wgen::check_jacobian_independence(n, &point)?;
        if c.holds {
            return Ok(c);
        }
        last = Some(c);
    }
    Ok(last.expect("at least one attempt"))
}

fn wgen_suite(config: &SuiteConfig, s: &mut Sampler, rec: &mut Recorder) {
    for n in 1..=config.n_max {
        rec.run("phi-anticommutator", &[("n", n.to_string())], || Ok(wgen::check_oddrel(n, n - 1)));
        if n <= 5 {
            rec.run("gram-determinant", &[("n", n.to_string())], || check_gram(n));
        }
        for split in 1..n {
            rec.run("tensor-decomposition", &[("n", n.to_string()), ("split", split.to_string())], || {
                wgen::check_decomposition(n, split)
            });
        }
        rec.run("z-recursion", &[], || Ok(wgen::check_z_recursion(n)));
        rec.run("odd-z-equals-u", &[], || Ok(wgen::check_odd_z_matches_u(n)));
        rec.run("leading-terms", &[], || Ok(wgen::check_leading_terms(n)));
        if n >= 2 {
            for k in [0, 2, 4] {
                rec.run("q-symmetry", &[("n", n.to_string()), ("k", k.to_string())], || {
                    wgen::check_q_symmetry(n, k)
                });
            }
            rec.run("phi-coordinates-on-x1=-x2", &[("n", n.to_string())], || {
                wgen::check_phi_antidiagonal(n, 2 * n)
            });
        }
        rec.run("jacobian-independence", &[("n", n.to_string())], || check_jacobian_sampled(n, s, 5));
    }
}

// ---------------------------------------------------------------- modules

/// `V(s)` for typical regular `s` is simple on the W-labels, of type Q iff
/// `n` is odd, of dimension `2^{⌈n/2⌉}`.
pub fn check_v_simple(roots: &RootVector, gens: &mut GenStore) -> Result<Check> {
    let n = roots.len();
    let mut check = Check::new("v-simple").param("n", n).param("roots", text(roots.roots()));
    let m = gens.v_module(roots)?;
    let dim = 1usize << n.div_ceil(2);
    check.require(m.dim() == dim, || format!("dimension {} != {dim}", m.dim()));
    let verdict = is_simple(&m, &w_labels(n))?;
    let expected = if n % 2 == 0 { Simplicity::SimpleM } else { Simplicity::SimpleQ };
    check.require(verdict == expected, || format!("{verdict:?}, expected {expected:?}"));
    Ok(check)
}

pub fn check_v_clifford(roots: &RootVector) -> Result<Check> {
    let mut check = Check::new("v-clifford").param("roots", text(roots.roots()));
    let m = build_v(roots);
    check_clifford(&m, &roots.s())?;
    let dim = 1usize << roots.m().div_ceil(2);
    check.require(m.dim() == dim, || format!("dimension {} != {dim}", m.dim()));
    Ok(check)
}

/// Factors of the atypical `n = 2` module with roots `(r, i r)`, and of the
/// reversed module with roots `(i r, -r)`, against `-s² ± s`.
pub fn check_atypical(r: &G) -> Result<Check> {
    let mut check = Check::new("atypical-composition-series").param("root", r);
    let s = r * r;
    let s2 = &s * &s;
    let plus = &s - &s2;
    let minus = -(&s2 + &s);
    let c = composition_series_n2(r, 1)?;
    let zero = r.is_zero();
    let expected = vec![
        Factor { parity: 1, z1: plus.clone() },
        Factor { parity: 0, z1: minus.clone() },
    ];
    check.require(zero || c.factors == expected, || format!("factors {:?}", c.factors));
    check.require(c.split == zero, || format!("split = {}", c.split));
    if zero {
        check.require(c.factors.iter().all(|f| f.z1.is_zero()), || format!("factors {:?}", c.factors));
        let mut parities: Vec<u8> = c.factors.iter().map(|f| f.parity).collect();
        parities.sort();
        check.require(parities == [0, 1], || format!("parities {parities:?}"));
    } else {
        let rev = composition_series_n2(&(r * &G::i()), 1)?;
        let expected = vec![Factor { parity: 1, z1: minus }, Factor { parity: 0, z1: plus }];
        check.require(rev.factors == expected, || format!("reversed factors {:?}", rev.factors));
        check.require(!rev.split, || "reversed module splits".to_string());
    }
    Ok(check)
}

/// The explicit `D` intertwines `V(s_1, s_2)` and `V(s_2, s_1)`.
pub fn check_swap_d(roots: &RootVector, gens: &mut GenStore) -> Result<Check> {
    let (r1, r2) = (roots.roots()[0].clone(), roots.roots()[1].clone());
    let mut check = Check::new("swap-intertwiner").param("roots", text(roots.roots()));
    let a = gens.v_module(roots)?;
    let b = gens.v_module(&RootVector::new(vec![r2.clone(), r1.clone()]))?;
    let d = swap_intertwiner(&r1, &r2);
    check.require(d.is_invertible(), || "D is singular".to_string());
    check.require(is_intertwiner(&d, &a, &b, &w_labels(2), 0)?, || "D does not intertwine".to_string());
    Ok(check)
}

/// Intertwiners between `V(s)` and `V(σ_i s)` for every adjacent
/// transposition `σ_i`.
pub fn check_transpositions(roots: &RootVector, gens: &mut GenStore) -> Result<Check> {
    let n = roots.len();
    let mut check = Check::new("transposition-intertwiner").param("roots", text(roots.roots()));
    let a = gens.v_module(roots)?;
    let labels = w_labels(n);
    for i in 0..n - 1 {
        let mut swapped = roots.roots().to_vec();
        swapped.swap(i, i + 1);
        let b = gens.v_module(&RootVector::new(swapped))?;
        let found = find_intertwiner(&a, &b, &labels)?;
        check.require(found.any(), || format!("no intertwiner for transposition {}", i + 1));
    }
    Ok(check)
}

/// For atypical `(r, i r)` and its swap, composition factors agree up to
/// an overall parity shift; which case occurs is recorded.
pub fn check_atypical_swap(r: &G, gens: &mut GenStore) -> Result<Check> {
    let mut check = Check::new("atypical-swap-factors").param("root", r);
    let ri = r * &G::i();
    let labels = w_labels(2);
    let summary = |m: &SuperModule| -> Result<Vec<(u8, String)>> {
        let mut f = Vec::new();
        for x in composition_factors(m, &labels)? {
            let z = x.require(&Label::U(2, 0))?.as_scalar().map(|c| c.to_string()).unwrap_or_default();
            f.push((x.parities()[0], z));
        }
        f.sort();
        Ok(f)
    };
    let a = summary(&gens.v_module(&RootVector::new(vec![r.clone(), ri.clone()]))?)?;
    let b = summary(&gens.v_module(&RootVector::new(vec![ri, r.clone()]))?)?;
    let mut flipped: Vec<(u8, String)> = b.iter().map(|(p, z)| (1 - p, z.clone())).collect();
    flipped.sort();
    let case = if a == b {
        "same"
    } else if a == flipped {
        "shifted"
    } else {
        "neither"
    };
    check = check.constant("parity", case);
    check.require(case != "neither", || format!("{a:?} vs {b:?}"));
    Ok(check)
}

/// Core equality, odd power sums to `2n` and rational equality of `χ(u)`
/// agree.
pub fn check_central_pair(s: &[G], t: &[G]) -> Check {
    let c = compare_central(s, t);
    let mut check = Check::new("central-character-criteria")
        .param("s", text(s))
        .param("t", text(t))
        .constant("equal", c.core);
    check.require(c.consistent(), || format!("{c:?}"));
    check
}

/// `χ_s` expanded to `u^{-17}` equals the recursion values; for regular
/// typical `s` the minimal recurrence is the even part of the denominator.
pub fn check_char_series(s: &[G], reduced: bool) -> Check {
    let mut check = Check::new("char-series").param("s", text(s));
    let series = char_series(s);
    let expansion = series.expand(8);
    let z = z_values(s, 8);
    check.require(expansion == z, || format!("expansion {} vs {}", text(&expansion), text(&z)));
    if reduced {
        let rec = find_recurrence(&z);
        let den = &series.denominator()[1..];
        match rec {
            Some(r) => {
                check = check.constant("onset", r.onset);
                check.require(r.coeffs == den, || format!("recurrence {} vs sigma {}", text(&r.coeffs), text(den)));
            }
            None => check.fail("no recurrence found"),
        }
    }
    check
}

pub fn check_core_example() -> Check {
    let mut check = Check::new("core-example");
    let s: Vec<G> = [1, 0, 3, -1, -1].iter().map(|&v| G::from_int(v)).collect();
    let c = core(&s);
    let expected = [G::from_int(-1), G::from_int(3)];
    check.require(c.values() == expected, || format!("core {}", text(c.values())));
    check
}

/// `S(t, λ)`: simple, of the expected type and dimension; for `q = 0` the
/// one-dimensional action table.
pub fn check_s_spec(spec: &SModuleSpec) -> Result<Check> {
    let mut check = check_s_simple(spec)?;
    if spec.q() == 0 {
        let table = check_one_dimensional_table(spec, &build_s(spec)?)?;
        if !table.holds {
            check.fail(table.witness.unwrap_or_default());
        }
    }
    Ok(check)
}

/// The trace test agrees with the multiset test.
pub fn check_iso_pair(a: &SModuleSpec, b: &SModuleSpec) -> Result<Check> {
    let iso = iso_class_s(a, b)?;
    let mut check = Check::new("s-isomorphism-criteria")
        .param("a", serde_json::to_string(a).unwrap_or_default())
        .param("b", serde_json::to_string(b).unwrap_or_default())
        .constant("isomorphic", iso.multiset);
    check.require(iso.consistent(), || format!("{iso:?}"));
    Ok(check)
}

/// A spec with the same shape as `a`: a permutation of it, or one value
/// replaced.
pub fn iso_partner(a: &SModuleSpec, s: &mut Sampler) -> SModuleSpec {
    let mut t = a.t().to_vec();
    let mut l = a.lambda_roots().roots().to_vec();
    t.reverse();
    let shift = 1.min(l.len());
    l.rotate_left(shift);
    if s.coin() {
        // negating a root keeps λ; changing a value breaks the multiset
        if let Some(x) = l.first_mut() {
            *x = -x.clone();
        }
    } else if !t.is_empty() && s.coin() {
        t[0] = &t[0] + &G::from_int(1);
    } else if !l.is_empty() {
        loop {
            let cand = s.nonzero(4);
            let mut trial = l.clone();
            trial[0] = cand;
            if RootVector::new(trial.clone()).is_typical() {
                l = trial;
                break;
            }
        }
    }
    SModuleSpec::new(a.r(), t.clone(), RootVector::new(l)).unwrap_or_else(|_| SModuleSpec::new(a.r(), t, a.lambda_roots().clone()).expect("valid"))
}

fn random_spec(s: &mut Sampler, n_cap: usize) -> SModuleSpec {
    loop {
        let p = s.range(0, 2);
        let q = s.range(0, 3);
        let r = s.range(0, 1);
        let n = r + 2 * p + q;
        if n == 0 || n > n_cap {
            continue;
        }
        return s.s_spec(p, q, r);
    }
}

fn modules_suite(config: &SuiteConfig, s: &mut Sampler, rec: &mut Recorder, gens: &mut GenStore) {
    let half = config.trials.div_ceil(2);
    for n in 1..=(config.n_max + 2).min(8) {
        for zeros in 0..=n.min(2) {
            let mut roots: Vec<G> = (0..n).map(|_| s.nonzero(5)).collect();
            for r in roots.iter_mut().take(zeros) {
                *r = G::zero();
            }
            let roots = RootVector::new(roots);
            rec.run("v-clifford", &[], || check_v_clifford(&roots));
        }
    }
    for n in 2..=config.n_max {
        for _ in 0..config.trials {
            let roots = s.typical_roots(n);
            rec.run("v-simple", &[("roots", text(roots.roots()))], || check_v_simple(&roots, gens));
        }
    }
    for _ in 0..half {
        let r = s.nonzero(5);
        rec.run("atypical-composition-series", &[("root", r.to_string())], || check_atypical(&r));
    }
    rec.run("atypical-composition-series", &[("root", "0".into())], || check_atypical(&G::zero()));
    for _ in 0..half.div_ceil(2) {
        let r = s.nonzero(4);
        rec.run("atypical-swap-factors", &[("root", r.to_string())], || check_atypical_swap(&r, gens));
    }
    if config.n_max >= 2 {
        for _ in 0..half {
            let roots = s.typical_roots(2);
            rec.run("swap-intertwiner", &[("roots", text(roots.roots()))], || check_swap_d(&roots, gens));
        }
    }
    for n in 2..=config.n_max.min(4) {
        for _ in 0..half.div_ceil(2) {
            let roots = s.typical_roots(n);
            rec.run("transposition-intertwiner", &[("roots", text(roots.roots()))], || {
                check_transpositions(&roots, gens)
            });
        }
    }
    rec.run("core-example", &[], || Ok(check_core_example()));
    for _ in 0..config.trials * 5 / 2 {
        let n = s.range(1, config.n_max);
        let a = s.values(n, 3);
        let b = if s.coin() {
            let mut b = a.clone();
            b.reverse();
            let x = s.nonzero(3);
            b.insert(s.range(0, b.len()), -x.clone());
            b.push(x);
            b.push(G::zero());
            b
        } else {
            let m = s.range(1, config.n_max);
            s.values(m, 3)
        };
        rec.run("central-character-criteria", &[], || Ok(check_central_pair(&a, &b)));
    }
    for _ in 0..config.trials {
        let n = s.range(1, config.n_max);
        if s.coin() {
            let a = s.values(n, 3);
            rec.run("char-series", &[], || Ok(check_char_series(&a, false)));
        } else {
            let a = s.typical_roots(n).s();
            rec.run("char-series", &[], || Ok(check_char_series(&a, true)));
        }
    }
    for _ in 0..half {
        let spec = random_spec(s, config.n_max.max(1));
        rec.run("s-module-simple", &[], || check_s_spec(&spec));
    }
    for _ in 0..config.trials {
        let a = random_spec(s, config.n_max.max(1));
        let b = iso_partner(&a, s);
        rec.run("s-isomorphism-criteria", &[], || check_iso_pair(&a, &b));
    }
}

// ---------------------------------------------------------------- yangian

/// The defining relation on `φ_n` images for all 16 index tuples at
/// `(m, r)`.
pub fn check_rtt_all(img: &YangianImages, m: usize, r: usize) -> Check {
    let mut check = Check::new("rtt-relation").param("n", img.n()).param("m", m).param("r", r);
    for i in [1i8, -1] {
        for j in [1i8, -1] {
            for k in [1i8, -1] {
                for l in [1i8, -1] {
                    let c = check_rtt_with(img, m, r, [i, j, k, l]);
                    if !c.holds {
                        check.fail(format!("({i},{j},{k},{l}): {}", c.witness.unwrap_or_default()));
                    }
                }
            }
        }
    }
    check
}

/// `Γ_f ⊗ Γ_g = Γ_{fg}` on all generators up to `order`.
pub fn check_gamma_product(f: &GammaF, g: &GammaF, order: usize) -> Check {
    let mut check = Check::new("gamma-product").param("f", f).param("g", g);
    let lhs = YModule::gamma(f, order).twist(g);
    let rhs = YModule::gamma(&f.mul(g), order);
    check.require(lhs == rhs, || format!("Gamma_f (x) Gamma_g differs from Gamma_fg = Gamma_{}", f.mul(g)));
    check
}

/// On `V(s)`: twisting is multiplicative, trivial for `f = 1`, and keeps
/// `Z_{2i}` at the scalar `z_{2i}(s)`.
pub fn check_twist_properties(
    roots: &RootVector,
    f: &GammaF,
    g: &GammaF,
    order: usize,
    gens: &mut GenStore,
) -> Result<Check> {
    let n = roots.len();
    let mut check = Check::new("twist-properties").param("roots", text(roots.roots())).param("f", f).param("g", g);
    let m = YModule::from_w_module(&gens.v_module(roots)?, n, order)?;
    check.require(m.twist(&GammaF::one()) == m, || "twist by 1 changes actions".to_string());
    let tw = m.twist(f);
    check.require(tw.twist(g) == m.twist(&f.mul(g)), || "twist is not multiplicative".to_string());
    let z = z_values(&roots.s(), n + 1);
    for (i, zv) in z.iter().enumerate() {
        let a = tw.z_central_action(2 * i)?;
        check.require(a.as_scalar().as_ref() == Some(zv), || format!("Z_{} is not {zv}", 2 * i));
    }
    Ok(check)
}

/// `P(M ⊗ Γ_f) = P(M)·f` with matching weight-space dimensions.
pub fn check_weight_shift(m: &YModule, f: &GammaF) -> Result<Check> {
    let mut check = Check::new("weight-shift").param("f", f).param("dim", m.dim());
    let k = m.order() / 2;
    let base = weight_decomposition(m)?;
    let shifted = weight_decomposition(&m.twist(f))?;
    let mut expected: Vec<(GammaF, usize)> = base.iter().map(|w| (w.weight().mul_truncated(f, k), w.basis.len())).collect();
    let mut got: Vec<(GammaF, usize)> = shifted.iter().map(|w| (w.weight(), w.basis.len())).collect();
    expected.sort();
    got.sort();
    check.require(got == expected, || format!("weights {got:?}, expected {expected:?}"));
    Ok(check)
}

/// `chi_inverse` applied to the odd and even elementary symmetric values of
/// `s` returns `Π (T - s_i)`.
pub fn check_chi_inverse(s: &[G]) -> Check {
    let mut check = Check::new("chi-inverse").param("s", text(s));
    let sigma = elementary_symmetric_all(s);
    let a: Vec<G> = sigma.iter().skip(1).step_by(2).cloned().collect();
    let c: Vec<G> = sigma.iter().skip(2).step_by(2).cloned().collect();
    let (n, p) = chi_inverse(&a, &c);
    let expected = s.iter().fold(UniPoly::one(), |acc, v| acc.mul(&UniPoly::new(vec![-v.clone(), G::from_int(1)])));
    check.require(n == s.len(), || format!("n = {n}"));
    check.require(p == expected, || format!("P = {p}, expected {expected}"));
    check
}

/// All diagram instances `m + n ≤ total` at `order` select the same flip
/// convention; one record per split plus a summary.
pub fn diagram_records(total: usize, order: usize, rec: &mut Recorder) {
    let mut selected: Vec<String> = Vec::new();
    for size in 2..=total {
        for m in 1..size {
            let n = size - m;
            let mut flip = None;
            rec.run("coproduct-diagram", &[("m", m.to_string()), ("n", n.to_string())], || {
                let c = check_diagram(m, n, order)?;
                flip = c.constants.get("flip").cloned();
                Ok(c)
            });
            selected.extend(flip);
        }
    }
    rec.run("flip-convention", &[], || {
        let mut check = Check::new("flip-convention").param("total", total).param("order", order);
        let mut distinct = selected.clone();
        distinct.sort();
        distinct.dedup();
        if let [one] = distinct.as_slice() {
            check = check.constant("flip", one);
            check.require(one == "plain" || one == "koszul", || format!("selected {one}"));
        } else {
            check.fail(format!("conventions {distinct:?}"));
        }
        Ok(check)
    });
}

fn yangian_suite(config: &SuiteConfig, s: &mut Sampler, rec: &mut Recorder, gens: &mut GenStore) {
    let order = config.order();
    for n in 1..=config.n_max.min(3) {
        let img = YangianImages::new(n);
        for m in 1..=5 {
            for r in 1..=5 {
                rec.run("rtt-relation", &[], || Ok(check_rtt_all(&img, m, r)));
            }
        }
    }
    for n in 1..=config.n_max {
        let img = YangianImages::new(n);
        rec.run("index-negation", &[], || Ok(check_sign_symmetry(&img, 2 * n)));
        if n <= 5 {
            rec.run("eta-images", &[("n", n.to_string())], || check_eta_images(&img));
        }
        if n <= 4 {
            for k in 0..=3 {
                for i in 0..=4 {
                    rec.run("threeterms", &[], || Ok(check_threeterms_with(&img, k, i)));
                }
                rec.run("step-identities", &[], || Ok(check_step_identities(&img, k)));
            }
        }
    }
    diagram_records(config.n_max.min(5), 5, rec);
    for _ in 0..config.trials {
        let (lf, lg) = (s.range(0, 3), s.range(0, 3));
        let f = GammaF::new(s.values(lf, 3));
        let g = GammaF::new(s.values(lg, 3));
        rec.run("gamma-product", &[], || Ok(check_gamma_product(&f, &g, order)));
    }
    for p in 0..=2 {
        for q in 0..=3 {
            let r = usize::from(p + q == 0);
            let spec = s.s_spec(p, q, r);
            rec.run("s-equals-twist", &[], || compare_s_with_twist(&spec, 2 * spec.n() + 2));
        }
    }
    for n in 1..=config.n_max.min(3) {
        let roots = s.typical_roots(n);
        let f = GammaF::new(s.values(2, 3));
        let g = GammaF::new(s.values(2, 3));
        rec.run("twist-properties", &[("roots", text(roots.roots()))], || {
            check_twist_properties(&roots, &f, &g, 2 * n + 2, gens)
        });
    }
    for n in 1..=config.n_max.min(2) {
        let roots = s.typical_roots(n);
        let f = GammaF::new(s.values(2, 3));
        rec.run("weight-shift", &[("roots", text(roots.roots()))], || {
            let m = YModule::from_w_module(&gens.v_module(&roots)?, n, 2 * n + 2)?;
            check_weight_shift(&m, &f)
        });
    }
    for n in 1..=config.n_max.min(4) {
        let roots = s.typical_roots(n);
        rec.run("eta0-and-even-T-generate", &[("roots", text(roots.roots()))], || {
            check_generation(&gens.v_module(&roots)?, n)
        });
    }
    for _ in 0..config.trials.div_ceil(2) {
        let n = s.range(1, config.n_max);
        let v = s.values(n, 4);
        rec.run("chi-inverse", &[], || Ok(check_chi_inverse(&v)));
    }
}
