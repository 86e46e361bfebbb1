//! Command definitions and their execution.
//!
//! Every command produces an [`Outcome`]: the text to print and the exit
//! code (0 pass, 1 a mathematical check failed, 2 usage or parse error).

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use wq_core::central::{char_series, core, z_values};
use wq_core::meataxe::{composition_factors, is_simple, Simplicity};
use wq_core::modules::{w_labels, Label, RootVector, SuperModule};
use wq_core::smodule::{build_s, iso_class_s, SModuleSpec};
use wq_core::yangian::{check_diagram, chi_inverse, find_recurrence, weight_decomposition, GammaF, YModule};
use wq_core::{Check, GaussianRational as G, MAX_VARS};

use crate::cache::Cache;
use crate::config::{SuiteConfig, SuiteSelection};
use crate::report::{Report, SCHEMA};
use crate::suite::{self, check_rtt_all, GenStore};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Largest `n` accepted by commands that expand generators.
pub const N_LIMIT: usize = 8;

#[derive(Parser, Debug)]
#[command(name = "wq", version, about = "Exact computations in the principal W-algebra of Q(n) and the super Yangian YQ(1)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the output here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Generator cache directory; overrides WQ_CACHE_DIR.
    #[arg(long)]
    pub cache_dir: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print φ_k, z_k and u_k(d) for W(Q(n)).
    Gens {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Run verification suites.
    Verify {
        #[arg(long, default_value = "all")]
        suite: SuiteSelection,
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        /// Yangian truncation order (default 2·n_max + 2).
        #[arg(long)]
        order: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        /// Compare cached generator sets with fresh ones.
        #[arg(long)]
        check_cache: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Build and analyse V(s) or S(t, λ).
    #[command(subcommand)]
    Module(ModuleCommand),
    /// The core of s.
    Core {
        #[arg(long, allow_hyphen_values = true)]
        s: String,
        #[command(flatten)]
        common: Common,
    },
    /// The central character series of V(s) and its recurrence.
    Char {
        #[arg(long, allow_hyphen_values = true)]
        s: String,
        #[arg(long, default_value_t = 8)]
        order: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Decide whether two S(t, λ) specs (JSON) are isomorphic.
    Iso {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[command(flatten)]
        common: Common,
    },
    /// Images of YQ(1) in W(Q(n)) and its modules.
    #[command(subcommand)]
    Yangian(YangianCommand),
}

#[derive(Subcommand, Debug)]
pub enum ModuleCommand {
    /// V(s) from square roots r_i of s_i.
    V {
        #[arg(long, allow_hyphen_values = true)]
        roots: String,
        /// Yangian truncation order for the weight analysis (default 2n + 2).
        #[arg(long)]
        order: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// S(t, λ) with n = r + 2p + q.
    S {
        #[arg(long, default_value_t = 0)]
        r: usize,
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        t: String,
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        lambda_roots: String,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Subcommand, Debug)]
pub enum YangianCommand {
    /// Relations on φ_n images and the coproduct diagram for splits of n.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        order_max: usize,
        #[command(flatten)]
        common: Common,
    },
    /// The coproduct diagram for one split.
    Diagram {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 5)]
        order: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Weights of V(s) and of V(s) ⊗ Γ_f.
    Twist {
        #[arg(long, allow_hyphen_values = true)]
        roots: String,
        /// Coefficients f_2, f_4, … of f.
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        f: String,
        #[arg(long)]
        order: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// A polynomial whose roots have the given central character.
    ChiInverse {
        /// σ_1, σ_3, …
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        a: String,
        /// σ_2, σ_4, …
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        c: String,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub output: String,
    pub out: Option<PathBuf>,
}

fn usage(msg: impl std::fmt::Display) -> Outcome {
    Outcome {
        code: EXIT_USAGE,
        output: format!("error: {msg}\n"),
        out: None,
    }
}

fn scalars(text: &str) -> Result<Vec<G>, Outcome> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    G::parse_list(text).map_err(usage)
}

fn emit(common: &Common, code: i32, value: Value, text: String) -> Outcome {
    let output = match common.format {
        Format::Json => {
            let mut v = value;
            if let Value::Object(map) = &mut v {
                map.insert("schema".into(), json!(SCHEMA));
            }
            format!("{}\n", serde_json::to_string_pretty(&v).expect("serializable"))
        }
        Format::Text => text,
    };
    Outcome {
        code,
        output,
        out: common.out.clone(),
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn strings(v: &[G]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn list(v: &[G]) -> String {
    format!("({})", strings(v).join(", "))
}

pub fn execute(cli: Cli) -> Outcome {
    match cli.command {
        Command::Gens { n, common } => gens(n, &common),
        Command::Verify {
            suite,
            n_max,
            order,
            seed,
            trials,
            check_cache,
            common,
        } => {
            let config = SuiteConfig {
                n_max,
                order,
                seed,
                trials,
                suites: suite,
            };
            verify(&config, check_cache, &common)
        }
        Command::Module(ModuleCommand::V { roots, order, common }) => module_v(&roots, order, &common),
        Command::Module(ModuleCommand::S { r, t, lambda_roots, common }) => module_s(r, &t, &lambda_roots, &common),
        Command::Core { s, common } => core_cmd(&s, &common),
        Command::Char { s, order, common } => char_cmd(&s, order, &common),
        Command::Iso { a, b, common } => iso(&a, &b, &common),
        Command::Yangian(YangianCommand::Verify { n, order_max, common }) => yangian_verify(n, order_max, &common),
        Command::Yangian(YangianCommand::Diagram { m, n, order, common }) => diagram(m, n, order, &common),
        Command::Yangian(YangianCommand::Twist { roots, f, order, common }) => twist(&roots, &f, order, &common),
        Command::Yangian(YangianCommand::ChiInverse { a, c, common }) => chi_inverse_cmd(&a, &c, &common),
    }
}

fn gens(n: usize, common: &Common) -> Outcome {
    if n == 0 || n > N_LIMIT.min(MAX_VARS) {
        return usage(format!("--n must be between 1 and {N_LIMIT}"));
    }
    let set = Cache::resolve(common.cache_dir.clone()).gens(n);
    let mut text = String::new();
    for (name, e) in set.labelled() {
        text.push_str(&format!("{name} = {e}\n"));
    }
    emit(common, EXIT_PASS, json!({ "gens": to_value(&set) }), text)
}

fn verify(config: &SuiteConfig, check_cache: bool, common: &Common) -> Outcome {
    if config.n_max == 0 || config.n_max > N_LIMIT {
        return usage(format!("--n-max must be between 1 and {N_LIMIT}"));
    }
    let cache = Cache::resolve(common.cache_dir.clone());
    let mut report = suite::run(config, &cache);
    if check_cache {
        let mut records = report.records.clone();
        for n in 1..=config.n_max {
            if let Some(ok) = cache.verify(n) {
                let mut c = Check::new("cache-matches-fresh").param("n", n);
                c.require(ok, || "cached generators differ from a fresh computation".to_string());
                records.push(crate::report::Record::from_check("cache", c, 0));
            }
        }
        report = Report::new(config.clone(), records);
    }
    let code = if report.passed() { EXIT_PASS } else { EXIT_FAIL };
    let text = report.to_text();
    emit(common, code, to_value(&report), text)
}

fn factor_summary(m: &SuperModule) -> Value {
    let (d0, d1) = m.dims();
    let mut v = json!({ "dims": [d0, d1] });
    if let Some(z) = m.action(&Label::U(2, 0)).and_then(|a| a.as_scalar()) {
        v["z_1"] = json!(z.to_string());
    }
    v
}

fn simplicity_value(verdict: &Simplicity) -> &'static str {
    match verdict {
        Simplicity::SimpleM => "SimpleM",
        Simplicity::SimpleQ => "SimpleQ",
        Simplicity::Reducible(_) => "Reducible",
    }
}

/// Dimensions, simplicity, factors, central character and core of a
/// W(Q(n))-module.
fn analyse(m: &SuperModule, n: usize, s: &[G]) -> Result<(Value, String), wq_core::Error> {
    let labels = w_labels(n);
    let verdict = is_simple(m, &labels)?;
    let (d0, d1) = m.dims();
    let series = char_series(s);
    let c = core(s);
    let mut value = json!({
        "n": n,
        "dims": [d0, d1],
        "simplicity": simplicity_value(&verdict),
        "central_character": to_value(&series),
        "central_character_text": series.to_string(),
        "core": strings(c.values()),
    });
    let mut text = format!(
        "n = {n}\ndims = ({d0}|{d1})\nsimplicity = {}\nchi(u) = {series}\ncore = {}\n",
        simplicity_value(&verdict),
        list(c.values())
    );
    if let Simplicity::Reducible(w) = &verdict {
        let factors = composition_factors(m, &labels)?;
        value["witness"] = json!(w.iter().map(|v| strings(v)).collect::<Vec<_>>());
        value["factors"] = Value::Array(factors.iter().map(factor_summary).collect());
        text.push_str("factors (submodule first):\n");
        for f in &factors {
            let (a, b) = f.dims();
            let z = f.action(&Label::U(2, 0)).and_then(|x| x.as_scalar());
            match z {
                Some(z) => text.push_str(&format!("  ({a}|{b}) z_1 = {z}\n")),
                None => text.push_str(&format!("  ({a}|{b})\n")),
            }
        }
    }
    Ok((value, text))
}

fn module_v(roots: &str, order: Option<usize>, common: &Common) -> Outcome {
    let roots = match scalars(roots) {
        Ok(r) => RootVector::new(r),
        Err(o) => return o,
    };
    let n = roots.len();
    if n == 0 || n > N_LIMIT {
        return usage(format!("--roots must list between 1 and {N_LIMIT} values"));
    }
    let cache = Cache::resolve(common.cache_dir.clone());
    let mut store = GenStore::new(&cache);
    let result = store.v_module(&roots).and_then(|m| {
        let (mut value, mut text) = analyse(&m, n, &roots.s())?;
        value["roots"] = json!(strings(roots.roots()));
        value["s"] = json!(strings(&roots.s()));
        let y = YModule::from_w_module(&m, n, order.unwrap_or(2 * n + 2))?;
        match weight_decomposition(&y) {
            Ok(ws) => {
                let weights: Vec<Value> = ws
                    .iter()
                    .map(|w| json!({ "theta": w.weight().to_string(), "dim": w.basis.len() }))
                    .collect();
                text.push_str("weights:\n");
                for w in &ws {
                    text.push_str(&format!("  {} (dim {})\n", w.weight(), w.basis.len()));
                }
                value["weights"] = Value::Array(weights);
            }
            Err(e) => {
                value["weights_error"] = json!(e.to_string());
                text.push_str(&format!("weights: {e}\n"));
            }
        }
        Ok((value, text))
    });
    match result {
        Ok((value, text)) => emit(common, EXIT_PASS, value, text),
        Err(e) => usage(e),
    }
}

fn module_s(r: usize, t: &str, lambda_roots: &str, common: &Common) -> Outcome {
    let (t, l) = match (scalars(t), scalars(lambda_roots)) {
        (Ok(t), Ok(l)) => (t, l),
        (Err(o), _) | (_, Err(o)) => return o,
    };
    let spec = match SModuleSpec::new(r, t, RootVector::new(l)) {
        Ok(s) => s,
        Err(e) => return usage(e),
    };
    if spec.n() > N_LIMIT || spec.q() > N_LIMIT {
        return usage(format!("n = r + 2p + q must be at most {N_LIMIT}"));
    }
    let result = build_s(&spec).and_then(|m| {
        let (mut value, mut text) = analyse(&m, spec.n(), &spec.lambda())?;
        value["spec"] = to_value(&spec);
        let f = GammaF::from_roots(spec.t());
        value["f"] = json!(f.to_string());
        text.push_str(&format!("f(u) = {f}\n"));
        Ok((value, text))
    });
    match result {
        Ok((value, text)) => emit(common, EXIT_PASS, value, text),
        Err(e) => usage(e),
    }
}

fn core_cmd(s: &str, common: &Common) -> Outcome {
    let s = match scalars(s) {
        Ok(s) => s,
        Err(o) => return o,
    };
    let c = core(&s);
    emit(
        common,
        EXIT_PASS,
        json!({ "s": strings(&s), "core": strings(c.values()), "length": c.len() }),
        format!("{}\n", list(c.values())),
    )
}

fn char_cmd(s: &str, order: usize, common: &Common) -> Outcome {
    let s = match scalars(s) {
        Ok(s) => s,
        Err(o) => return o,
    };
    let series = char_series(&s);
    let expansion = series.expand(order);
    let direct = z_values(&s, order);
    let rec = find_recurrence(&expansion);
    let code = if expansion == direct { EXIT_PASS } else { EXIT_FAIL };
    let mut text = format!("chi(u) = {series}\nexpansion = [{}]\n", strings(&expansion).join(", "));
    match &rec {
        Some(r) => text.push_str(&format!("recurrence = [{}] from index {}\n", strings(&r.coeffs).join(", "), r.onset)),
        None => text.push_str("recurrence = none\n"),
    }
    let value = json!({
        "s": strings(&s),
        "series": to_value(&series),
        "series_text": series.to_string(),
        "expansion": strings(&expansion),
        "recurrence": rec.as_ref().map(|r| json!({ "coeffs": strings(&r.coeffs), "onset": r.onset })),
    });
    emit(common, code, value, text)
}

fn iso(a: &str, b: &str, common: &Common) -> Outcome {
    let parse = |t: &str| serde_json::from_str::<SModuleSpec>(t).map_err(usage);
    let (a, b) = match (parse(a), parse(b)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(o), _) | (_, Err(o)) => return o,
    };
    if a.n() > N_LIMIT || b.n() > N_LIMIT {
        return usage(format!("n must be at most {N_LIMIT}"));
    }
    match iso_class_s(&a, &b) {
        Ok(iso) => {
            let code = if iso.consistent() { EXIT_PASS } else { EXIT_FAIL };
            let trace = match iso.trace {
                Some(t) => t.to_string(),
                None => "n/a (different n)".to_string(),
            };
            let text = format!("isomorphic = {}\ntrace test = {trace}\n", iso.multiset);
            emit(common, code, json!({ "isomorphic": iso.multiset, "trace": iso.trace }), text)
        }
        Err(e) => usage(e),
    }
}

fn report_outcome(checks: Vec<Check>, suite_name: &str, config: SuiteConfig, common: &Common) -> Outcome {
    let records = checks
        .into_iter()
        .map(|c| crate::report::Record::from_check(suite_name, c, 0))
        .collect();
    let report = Report::new(config, records);
    let code = if report.passed() { EXIT_PASS } else { EXIT_FAIL };
    let text = report.to_text();
    emit(common, code, to_value(&report.without_timings()), text)
}

fn yangian_verify(n: usize, order_max: usize, common: &Common) -> Outcome {
    if n == 0 || n > N_LIMIT.min(5) {
        return usage("--n must be between 1 and 5");
    }
    if order_max == 0 {
        return usage("--order-max must be positive");
    }
    let img = wq_core::YangianImages::new(n);
    let mut checks = Vec::new();
    for m in 1..=order_max {
        for r in 1..=order_max {
            checks.push(check_rtt_all(&img, m, r));
        }
    }
    checks.push(wq_core::yangian::check_sign_symmetry(&img, 2 * n));
    match wq_core::yangian::check_eta_images(&img) {
        Ok(c) => checks.push(c),
        Err(e) => return usage(e),
    }
    for k in 0..=order_max / 2 {
        for i in 0..=order_max {
            checks.push(wq_core::yangian::check_threeterms_with(&img, k, i));
        }
    }
    let mut flips = Vec::new();
    for m in 1..n {
        match check_diagram(m, n - m, order_max) {
            Ok(c) => {
                flips.extend(c.constants.get("flip").cloned());
                checks.push(c);
            }
            Err(e) => return usage(e),
        }
    }
    flips.sort();
    flips.dedup();
    if !flips.is_empty() {
        let mut c = Check::new("flip-convention").param("n", n).param("order", order_max);
        if let [one] = flips.as_slice() {
            c = c.constant("flip", one);
        } else {
            c.fail(format!("conventions {flips:?}"));
        }
        checks.push(c);
    }
    let config = SuiteConfig {
        n_max: n,
        order: Some(order_max),
        trials: 0,
        suites: "yangian".parse().expect("valid"),
        ..SuiteConfig::default()
    };
    report_outcome(checks, "yangian", config, common)
}

fn diagram(m: usize, n: usize, order: usize, common: &Common) -> Outcome {
    if m == 0 || n == 0 || m + n > N_LIMIT {
        return usage(format!("--m and --n must be positive with m + n at most {N_LIMIT}"));
    }
    match check_diagram(m, n, order) {
        Ok(c) => {
            let config = SuiteConfig {
                n_max: m + n,
                order: Some(order),
                trials: 0,
                suites: "yangian".parse().expect("valid"),
                ..SuiteConfig::default()
            };
            report_outcome(vec![c], "yangian", config, common)
        }
        Err(e) => usage(e),
    }
}

fn twist(roots: &str, f: &str, order: Option<usize>, common: &Common) -> Outcome {
    let (roots, f) = match (scalars(roots), scalars(f)) {
        (Ok(r), Ok(f)) => (RootVector::new(r), GammaF::new(f)),
        (Err(o), _) | (_, Err(o)) => return o,
    };
    let n = roots.len();
    if n == 0 || n > N_LIMIT {
        return usage(format!("--roots must list between 1 and {N_LIMIT} values"));
    }
    let order = order.unwrap_or(2 * n + 2);
    let cache = Cache::resolve(common.cache_dir.clone());
    let mut store = GenStore::new(&cache);
    let result = store.v_module(&roots).and_then(|w| {
        let m = YModule::from_w_module(&w, n, order)?;
        let check = suite::check_weight_shift(&m, &f)?;
        let tw = m.twist(&f);
        let weights: Vec<(String, usize)> = weight_decomposition(&tw)?
            .iter()
            .map(|w| (w.weight().to_string(), w.basis.len()))
            .collect();
        Ok((check, weights))
    });
    match result {
        Ok((check, weights)) => {
            let code = if check.holds { EXIT_PASS } else { EXIT_FAIL };
            let mut text = format!("f(u) = {f}\nweights of V(s) (x) Gamma_f:\n");
            for (w, d) in &weights {
                text.push_str(&format!("  {w} (dim {d})\n"));
            }
            text.push_str(&format!("P(M (x) Gamma_f) = P(M) f: {}\n", check.holds));
            let value = json!({
                "f": f.to_string(),
                "weights": weights.iter().map(|(w, d)| json!({ "theta": w, "dim": d })).collect::<Vec<_>>(),
                "check": to_value(&check),
            });
            emit(common, code, value, text)
        }
        Err(e) => usage(e),
    }
}

fn chi_inverse_cmd(a: &str, c: &str, common: &Common) -> Outcome {
    let (a, c) = match (scalars(a), scalars(c)) {
        (Ok(a), Ok(c)) => (a, c),
        (Err(o), _) | (_, Err(o)) => return o,
    };
    let (n, p) = chi_inverse(&a, &c);
    emit(
        common,
        EXIT_PASS,
        json!({ "n": n, "polynomial": p.to_string(), "coefficients": strings(p.coeffs()) }),
        format!("n = {n}\nP(T) = {p}\n"),
    )
}
