//! One pass/fail line per acceptance criterion, each with its runtime
//! bound. Run with `cargo test -p wq-cli --test acceptance -- --nocapture`.

use std::process::Command;
use std::time::{Duration, Instant};

use wq_cli::suite::{
    check_atypical, check_char_series, check_central_pair, check_core_example, check_gamma_product, check_gram,
    check_iso_pair, check_rtt_all, check_s_spec, check_swap_d, check_transpositions, check_v_simple, iso_partner,
    GenStore, Sampler,
};
use wq_cli::Cache;
use wq_core::central::core;
use wq_core::smodule::{compare_s_with_twist, SModuleSpec};
use wq_core::wgen::{check_decomposition, check_leading_terms, check_odd_z_matches_u, check_oddrel, check_phi_antidiagonal, check_q_symmetry, check_z_recursion};
use wq_core::yangian::{
    check_diagram, check_eta_images, check_sign_symmetry, check_step_identities, check_threeterms_with, GammaF, YGen,
    YModule,
};
use wq_core::{Check, GaussianRational as G, YangianImages};

const SEED: u64 = 20_240_601;

type Outcome = Result<String, String>;

fn holds(c: Check) -> Result<(), String> {
    if c.holds {
        Ok(())
    } else {
        Err(format!("{} {:?}: {}", c.identity, c.parameters, c.witness.unwrap_or_default()))
    }
}

fn holds_r(c: wq_core::Result<Check>) -> Result<(), String> {
    holds(c.map_err(|e| e.to_string())?)
}

fn anticommutators() -> Outcome {
    for n in 1..=6 {
        holds(check_oddrel(n, n - 1))?;
    }
    Ok("n <= 6, 0 <= i,j <= n-1".into())
}

fn gram() -> Outcome {
    let mut constants = Vec::new();
    for n in 1..=5 {
        let c = check_gram(n).map_err(|e| e.to_string())?;
        let constant = c.constants.get("c").cloned().unwrap_or_default();
        holds(c)?;
        constants.push(constant);
    }
    if constants[1] != "4" {
        return Err(format!("n = 2 constant is {}", constants[1]));
    }
    Ok(format!("constants {}", constants.join(", ")))
}

fn decomposition() -> Outcome {
    let mut count = 0;
    for n in 2..=6 {
        for split in 1..n {
            holds_r(check_decomposition(n, split))?;
            count += 1;
        }
    }
    Ok(format!("{count} splits, k <= n, both parities"))
}

fn recursion() -> Outcome {
    for n in 1..=6 {
        holds(check_z_recursion(n))?;
        holds(check_odd_z_matches_u(n))?;
    }
    Ok("n <= 6".into())
}

fn symmetry_and_leading_terms() -> Outcome {
    for n in 1..=6 {
        holds(check_leading_terms(n))?;
        if n >= 2 {
            for k in [0, 2, 4] {
                holds_r(check_q_symmetry(n, k))?;
            }
            holds_r(check_phi_antidiagonal(n, 2 * n))?;
        }
    }
    Ok("n <= 6".into())
}

fn typical_simple(store: &mut GenStore) -> Outcome {
    let mut s = Sampler::new(SEED, 6);
    for n in 2..=6 {
        for _ in 0..20 {
            let roots = s.typical_roots(n);
            holds_r(check_v_simple(&roots, store))?;
        }
    }
    Ok("100 modules, type M for even n, Q for odd n".into())
}

fn atypical() -> Outcome {
    let mut s = Sampler::new(SEED, 7);
    for _ in 0..10 {
        holds_r(check_atypical(&s.nonzero(5)))?;
    }
    holds_r(check_atypical(&G::from_int(0)))?;
    Ok("10 random s plus s = 0".into())
}

fn intertwiners(store: &mut GenStore) -> Outcome {
    let mut s = Sampler::new(SEED, 8);
    for _ in 0..10 {
        let roots = s.typical_roots(2);
        holds_r(check_swap_d(&roots, store))?;
    }
    for n in 2..=4 {
        for _ in 0..3 {
            let roots = s.typical_roots(n);
            holds_r(check_transpositions(&roots, store))?;
        }
    }
    Ok("10 explicit D, 9 transposition searches".into())
}

fn cores() -> Outcome {
    holds(check_core_example())?;
    let s: Vec<G> = [1, 0, 3, -1, -1].iter().map(|&v| G::from_int(v)).collect();
    let mut c = core(&s).values().to_vec();
    let mut expected = vec![G::from_int(3), G::from_int(-1)];
    c.sort();
    expected.sort();
    if c != expected {
        return Err(format!("core {c:?}"));
    }
    let mut r = Sampler::new(SEED, 9);
    let mut equal = 0;
    for _ in 0..50 {
        let n = r.range(1, 6);
        let a = r.values(n, 3);
        let b = if n <= 3 && r.coin() {
            let mut b = a.clone();
            b.reverse();
            let x = r.nonzero(3);
            let at = r.range(0, b.len());
            b.insert(at, -x.clone());
            b.push(x);
            b.push(G::from_int(0));
            b
        } else {
            let m = r.range(1, 6);
            r.values(m, 3)
        };
        let c = check_central_pair(&a, &b);
        if c.constants.get("equal").map(String::as_str) == Some("true") {
            equal += 1;
        }
        holds(c)?;
    }
    Ok(format!("50 pairs, {equal} with equal characters"))
}

fn series() -> Outcome {
    let mut r = Sampler::new(SEED, 10);
    for _ in 0..20 {
        let n = r.range(1, 6);
        holds(check_char_series(&r.typical_roots(n).s(), true))?;
        holds(check_char_series(&r.values(n, 3), false))?;
    }
    Ok("20 typical s with recurrence, 20 arbitrary s".into())
}

fn s_modules() -> Outcome {
    let mut r = Sampler::new(SEED, 11);
    let spec = |r: &mut Sampler, force_q0: bool| -> SModuleSpec {
        loop {
            let p = r.range(0, 2);
            let q = if force_q0 { 0 } else { r.range(0, 3) };
            let rr = r.range(0, 1);
            if rr + 2 * p + q > 0 {
                return r.s_spec(p, q, rr);
            }
        }
    };
    for i in 0..10 {
        let a = spec(&mut r, i % 2 == 0);
        holds_r(check_s_spec(&a))?;
    }
    let mut iso = 0;
    for _ in 0..20 {
        let a = spec(&mut r, false);
        let b = iso_partner(&a, &mut r);
        let c = check_iso_pair(&a, &b).map_err(|e| e.to_string())?;
        if c.constants.get("isomorphic").map(String::as_str) == Some("true") {
            iso += 1;
        }
        holds(c)?;
    }
    Ok(format!("10 specs, 20 pairs ({iso} isomorphic)"))
}

fn yangian_relations(store: &mut GenStore) -> Outcome {
    for n in 1..=3 {
        let img = YangianImages::new(n);
        for m in 1..=5 {
            for r in 1..=5 {
                holds(check_rtt_all(&img, m, r))?;
            }
        }
    }
    for n in 1..=5 {
        let img = YangianImages::new(n);
        holds(check_sign_symmetry(&img, 2 * n + 2))?;
        holds_r(check_eta_images(&img))?;
        if n <= 4 {
            for k in 0..=3 {
                for i in 0..=4 {
                    holds(check_threeterms_with(&img, k, i))?;
                }
                holds(check_step_identities(&img, k))?;
            }
        }
    }
    let mut s = Sampler::new(SEED, 12);
    for n in 1..=3 {
        let roots = s.typical_roots(n);
        let w = store.v_module(&roots).map_err(|e| e.to_string())?;
        let y = YModule::from_w_module(&w, n, 2 * n + 2).map_err(|e| e.to_string())?;
        for g in YGen::all(2 * n + 2) {
            let a = y.action(g).map_err(|e| e.to_string())?;
            let b = y.action(YGen::new(-g.i(), -g.j(), g.m())).map_err(|e| e.to_string())?;
            let expected = if g.m() % 2 == 0 { b.clone() } else { -b };
            if a != &expected {
                return Err(format!("index negation fails on V({}) at {g}", roots.len()));
            }
        }
    }
    Ok("images n <= 5, module actions n <= 3".into())
}

fn diagram() -> Outcome {
    let mut flips = Vec::new();
    for total in 2..=5 {
        for m in 1..total {
            let c = check_diagram(m, total - m, 5).map_err(|e| e.to_string())?;
            flips.push(c.constants.get("flip").cloned().unwrap_or_default());
            holds(c)?;
        }
    }
    flips.sort();
    flips.dedup();
    match flips.as_slice() {
        [one] if one == "plain" || one == "koszul" => Ok(format!("flip = {one}")),
        other => Err(format!("conventions {other:?}")),
    }
}

fn twists() -> Outcome {
    let mut s = Sampler::new(SEED, 14);
    for _ in 0..20 {
        let (lf, lg) = (s.range(0, 3), s.range(0, 3));
        let f = GammaF::new(s.values(lf, 3));
        let g = GammaF::new(s.values(lg, 3));
        holds(check_gamma_product(&f, &g, 12))?;
    }
    let mut shapes = 0;
    for p in 0..=2 {
        for q in 0..=3 {
            for r in 0..=1 {
                if p + q + r == 0 {
                    continue;
                }
                let spec = s.s_spec(p, q, r);
                holds_r(compare_s_with_twist(&spec, 2 * spec.n() + 2))?;
                shapes += 1;
            }
        }
    }
    Ok(format!("20 products, {shapes} S shapes"))
}

fn full_verify() -> Outcome {
    let out = Command::new(env!("CARGO_BIN_EXE_wq"))
        .args(["verify", "--suite", "all", "--n-max", "6"])
        .env_remove("WQ_CACHE_DIR")
        .output()
        .map_err(|e| e.to_string())?;
    let text = String::from_utf8_lossy(&out.stdout);
    let last = text.lines().rev().find(|l| !l.starts_with(' ')).unwrap_or_default().to_string();
    match out.status.code() {
        Some(0) => Ok(last),
        code => Err(format!("exit {code:?}: {last}")),
    }
}

type Run = fn(&mut GenStore) -> Outcome;

#[test]
fn acceptance() {
    let cache = Cache::disabled();
    let mut store = GenStore::new(&cache);
    let criteria: [(&str, u64, Run); 15] = [
        ("odd anticommutator relations", 60, |_| anticommutators()),
        ("Gram determinant constant", 180, |_| gram()),
        ("tensor decomposition of u_k(d)", 120, |_| decomposition()),
        ("z recursion and closed forms", 60, |_| recursion()),
        ("Q-symmetry and leading terms", 60, |_| symmetry_and_leading_terms()),
        ("typical V(s) simple with type and dimension", 120, typical_simple),
        ("atypical n = 2 composition series", 30, |_| atypical()),
        ("swap and transposition intertwiners", 120, intertwiners),
        ("cores and central characters", 60, |_| cores()),
        ("character series and recurrence", 60, |_| series()),
        ("S(t, lambda) simplicity, table, isomorphism", 120, |_| s_modules()),
        ("Yangian relations on images", 300, yangian_relations),
        ("coproduct diagram flip convention", 120, |_| diagram()),
        ("Gamma products and S as twist", 60, |_| twists()),
        ("verify --suite all --n-max 6", 600, |_| full_verify()),
    ];
    let mut failures = Vec::new();
    for (k, (title, bound, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = run(&mut store);
        let elapsed = start.elapsed();
        let bound = Duration::from_secs(bound);
        let line = match (&result, elapsed <= bound) {
            (Ok(detail), true) => format!("PASS {:>2} {title}: {detail}", k + 1),
            (Ok(detail), false) => format!("FAIL {:>2} {title}: over time bound ({detail})", k + 1),
            (Err(e), _) => format!("FAIL {:>2} {title}: {e}", k + 1),
        };
        println!("{line} [{:.1}s / {}s]", elapsed.as_secs_f64(), bound.as_secs());
        if !line.starts_with("PASS") {
            failures.push(line);
        }
    }
    assert!(failures.is_empty(), "{failures:#?}");
}
