//! Identity suites: seeded sweeps over the library that produce pass/fail
//! reports with deterministic JSON.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::scalar::{format_scalar, frac, Scalar};
use crate::bethe::{continue_qboson, solve_phase};
use crate::error::{Error, Result};
use crate::fock::{bethe_state, creation_operators_commute, oracle_pairing, Model, SectorBasis};
use crate::miwa::{schur_in_miwa, supersymmetric_times, MiwaCoords};
use crate::partitions::{b_lambda, partitions_of, partitions_up_to};
use crate::phase_model::{
    correlation_am, giambelli_check, matrix_integral_constant_term, miwa_cauchy_sum, scalar_product, vandermonde_scaling_check,
    BoxSpec, CorrelationMode, ScalarMode, SignConvention,
};
use crate::qboson_model::{graded_disagreements, hl_cauchy_window, hl_sum_site_normalized, scalar_product_q, QBosonSpec, QScalarMode};
use crate::symfunc::{
    big_schur_eval, c_tilde_inverse_check, classical_limit_check, hall_littlewood_eval, kostka_tables, schur_eval,
    supersymmetric_schur_eval, supersymmetric_skew_expansion, PointSet,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum SuiteName {
    PhaseScalar,
    PhaseCorr,
    HlCauchy,
    QbosonModes,
    Kostka,
    Supersym,
    Giambelli,
    OracleCross,
    MatrixIntegral,
    Bethe,
}
crate::phase_model::string_enum!(SuiteName {
    PhaseScalar => "phase-scalar",
    PhaseCorr => "phase-corr",
    HlCauchy => "hl-cauchy",
    QbosonModes => "qboson-modes",
    Kostka => "kostka",
    Supersym => "supersym",
    Giambelli => "giambelli",
    OracleCross => "oracle-cross",
    MatrixIntegral => "matrix-integral",
    Bethe => "bethe",
});

impl SuiteName {
    pub const ALL: [SuiteName; 10] = [
        SuiteName::PhaseScalar,
        SuiteName::PhaseCorr,
        SuiteName::HlCauchy,
        SuiteName::QbosonModes,
        SuiteName::Kostka,
        SuiteName::Supersym,
        SuiteName::Giambelli,
        SuiteName::OracleCross,
        SuiteName::MatrixIntegral,
        SuiteName::Bethe,
    ];

    pub fn parse(s: &str) -> Result<Self> {
        s.parse().map_err(|_| Error::UnknownSuite(s.to_string()))
    }
}

/// Upper bounds on problem size. The desk-scale defaults can be raised
/// through `QTAU_MAX_SIZE`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub n: usize,
    pub m: usize,
    pub degree: usize,
}

pub const MAX_SIZE_ENV: &str = "QTAU_MAX_SIZE";

impl Caps {
    pub const DESK: Caps = Caps { n: 4, m: 6, degree: 8 };

    /// `QTAU_MAX_SIZE=k` lifts every cap to `k`.
    pub fn from_override(value: Option<&str>) -> Result<Caps> {
        match value {
            None => Ok(Caps::DESK),
            Some(v) => {
                let k: usize = v.trim().parse().map_err(|_| Error::Parse { input: v.to_string(), reason: "expected a size".into() })?;
                Ok(Caps { n: k, m: k, degree: k })
            }
        }
    }

    pub fn from_env() -> Result<Caps> {
        Caps::from_override(std::env::var(MAX_SIZE_ENV).ok().as_deref())
    }

    pub fn check(&self, name: &'static str, value: usize, cap: usize) -> Result<()> {
        if value > cap {
            return Err(Error::SizeCap { name, value, cap });
        }
        Ok(())
    }

    pub fn check_nm(&self, n: usize, m: usize) -> Result<()> {
        self.check("N", n, self.n)?;
        self.check("M", m, self.m)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteConfig {
    pub suite: SuiteName,
    pub n_max: usize,
    pub m_max: usize,
    pub cutoff: usize,
    pub q_values: Vec<Scalar>,
    pub seed: u64,
    pub trials: usize,
    pub out: Option<PathBuf>,
}

impl SuiteConfig {
    /// Defaults sized to each suite's acceptance sweep.
    pub fn defaults(suite: SuiteName) -> Self {
        let (n_max, m_max, cutoff, trials) = match suite {
            SuiteName::PhaseScalar => (3, 4, 0, 20),
            SuiteName::PhaseCorr => (2, 3, 0, 10),
            SuiteName::HlCauchy => (3, 6, 6, 1),
            SuiteName::QbosonModes => (2, 3, 0, 5),
            SuiteName::Kostka => (0, 0, 6, 1),
            SuiteName::Supersym => (3, 0, 6, 10),
            SuiteName::Giambelli => (3, 0, 8, 20),
            SuiteName::OracleCross => (3, 3, 0, 10),
            SuiteName::MatrixIntegral => (2, 0, 6, 3),
            SuiteName::Bethe => (3, 6, 0, 10),
        };
        SuiteConfig {
            suite,
            n_max,
            m_max,
            cutoff,
            q_values: vec![frac(1, 4), frac(1, 3), frac(2, 5)],
            seed: 0,
            trials,
            out: None,
        }
    }

    pub fn validate(&self, caps: &Caps) -> Result<()> {
        caps.check_nm(self.n_max, self.m_max)?;
        caps.check("cutoff", self.cutoff, caps.degree)?;
        for q in &self.q_values {
            if q < &Scalar::zero() || q >= &Scalar::one() {
                return Err(Error::Parse { input: format_scalar(q), reason: "Q must lie in [0, 1)".into() });
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub paper_ref: String,
    pub pass: bool,
    pub detail: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub suite: String,
    pub seed: u64,
    pub checks: Vec<Check>,
    pub all_pass: bool,
}

impl Report {
    pub fn new(suite: &str, seed: u64) -> Self {
        Report { suite: suite.to_string(), seed, checks: Vec::new(), all_pass: true }
    }

    pub fn push(&mut self, name: impl Into<String>, paper_ref: &str, pass: bool, detail: Value) {
        self.all_pass &= pass;
        self.checks.push(Check { name: name.into(), paper_ref: paper_ref.to_string(), pass, detail });
    }

    pub fn exit_code(&self) -> i32 {
        if self.all_pass {
            0
        } else {
            1
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Text,
}
crate::phase_model::string_enum!(ReportFormat { Json => "json", Text => "text" });

pub fn emit_report(report: &Report, format: ReportFormat) -> Result<String> {
    match format {
        ReportFormat::Json => Ok(serde_json::to_string_pretty(report)? + "\n"),
        ReportFormat::Text => {
            let w_name = report.checks.iter().map(|c| c.name.chars().count()).max().unwrap_or(0);
            let w_ref = report.checks.iter().map(|c| c.paper_ref.chars().count()).max().unwrap_or(0);
            let mut out = String::new();
            for c in &report.checks {
                let verdict = if c.pass { "PASS" } else { "FAIL" };
                let pad_name = w_name - c.name.chars().count();
                let pad_ref = w_ref - c.paper_ref.chars().count();
                let _ = writeln!(out, "{verdict}  {}{}  {}{}  {}", c.name, " ".repeat(pad_name), c.paper_ref, " ".repeat(pad_ref), c.detail);
            }
            let _ = writeln!(out, "suite {} seed {}: {}", report.suite, report.seed, if report.all_pass { "all pass" } else { "FAILURES" });
            Ok(out)
        }
    }
}

pub fn write_report(report: &Report, format: ReportFormat, path: &Path) -> Result<()> {
    std::fs::write(path, emit_report(report, format)?)?;
    Ok(())
}

/// Seeded generators for random rational inputs.
pub mod sample {
    use super::*;

    pub fn rng(seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }

    /// A nonzero rational `p/q` with `|p| ≤ 9`, `1 ≤ q ≤ 7`.
    pub fn scalar(rng: &mut impl Rng) -> Scalar {
        loop {
            let p: i64 = rng.gen_range(-9..=9);
            if p != 0 {
                return frac(p, rng.gen_range(1..=7));
            }
        }
    }

    /// `n` pairwise distinct nonzero rationals.
    pub fn points(rng: &mut impl Rng, n: usize) -> PointSet {
        let mut v: Vec<Scalar> = Vec::with_capacity(n);
        while v.len() < n {
            let s = scalar(rng);
            if !v.contains(&s) {
                v.push(s);
            }
        }
        PointSet::new(v)
    }

    /// A rational in `(0, 1)`.
    pub fn q(rng: &mut impl Rng) -> Scalar {
        let den: i64 = rng.gen_range(2..=9);
        frac(rng.gen_range(1..den), den)
    }

    /// Miwa coordinates with small rational entries `t_1..t_n`.
    pub fn times(rng: &mut impl Rng, n: usize) -> MiwaCoords {
        MiwaCoords::new((0..n).map(|_| frac(rng.gen_range(-3..=3), rng.gen_range(1..=4))).collect())
    }
}

fn s(x: &Scalar) -> Value {
    Value::String(format_scalar(x))
}

fn p(x: &PointSet) -> Value {
    serde_json::to_value(x).unwrap_or(Value::Null)
}

/// Records the first failing trial of a sweep, or the trial count.
struct Sweep {
    trials: usize,
    failure: Option<Value>,
}

impl Sweep {
    fn new() -> Self {
        Sweep { trials: 0, failure: None }
    }

    fn record(&mut self, ok: bool, detail: impl FnOnce() -> Value) {
        self.trials += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(detail());
        }
    }

    fn finish(self, report: &mut Report, name: String, paper_ref: &str) {
        let pass = self.failure.is_none();
        let detail = self.failure.unwrap_or_else(|| json!({ "trials": self.trials }));
        report.push(name, paper_ref, pass, detail);
    }
}

fn error_detail(e: &Error) -> Value {
    json!({ "error": e.to_string() })
}

pub fn run_suite(config: &SuiteConfig) -> Result<Report> {
    let mut report = Report::new(config.suite.as_str(), config.seed);
    let mut rng = sample::rng(config.seed);
    match config.suite {
        SuiteName::PhaseScalar => phase_scalar(config, &mut rng, &mut report)?,
        SuiteName::PhaseCorr => phase_corr(config, &mut rng, &mut report)?,
        SuiteName::HlCauchy => hl_cauchy(config, &mut report)?,
        SuiteName::QbosonModes => qboson_modes(config, &mut rng, &mut report)?,
        SuiteName::Kostka => kostka(config, &mut report),
        SuiteName::Supersym => supersym(config, &mut rng, &mut report)?,
        SuiteName::Giambelli => giambelli(config, &mut rng, &mut report),
        SuiteName::OracleCross => oracle_cross(config, &mut rng, &mut report)?,
        SuiteName::MatrixIntegral => matrix_integral(config, &mut rng, &mut report)?,
        SuiteName::Bethe => bethe(config, &mut report),
    }
    Ok(report)
}

fn phase_scalar(cfg: &SuiteConfig, rng: &mut ChaCha8Rng, report: &mut Report) -> Result<()> {
    for n in 1..=cfg.n_max {
        for m in 0..=cfg.m_max {
            let b = BoxSpec::new(n, m);
            let mut sweep = Sweep::new();
            for _ in 0..cfg.trials {
                let (x, y) = (sample::points(rng, n), sample::points(rng, n));
                let det = scalar_product(&x, &y, b, ScalarMode::Det)?;
                let sum = scalar_product(&x, &y, b, ScalarMode::SchurSum)?;
                sweep.record(det == sum, || json!({ "x": p(&x), "y": p(&y), "det": s(&det), "schur_sum": s(&sum) }));
            }
            sweep.finish(report, format!("det = schur_sum N={n} M={m}"), "scalar-product/determinant");
        }
        let mut sweep = Sweep::new();
        for _ in 0..cfg.trials {
            let (y, q) = (sample::points(rng, n), sample::scalar(rng));
            sweep.record(vandermonde_scaling_check(&y, &q)?, || json!({ "y": p(&y), "q": s(&q) }));
        }
        sweep.finish(report, format!("vandermonde scaling N={n}"), "vandermonde-scaling");
    }
    Ok(())
}

fn phase_corr(cfg: &SuiteConfig, rng: &mut ChaCha8Rng, report: &mut Report) -> Result<()> {
    for n in 1..=cfg.n_max {
        for m in 0..=cfg.m_max {
            let b = BoxSpec::new(n, m);
            let mut oracle_sweep = Sweep::new();
            let mut ratios: Vec<Scalar> = Vec::new();
            let mut skew_failure: Option<Value> = None;
            for _ in 0..cfg.trials {
                let (x, y) = (sample::points(rng, n), sample::points(rng, n - 1));
                for site in 0..=m {
                    let det = correlation_am(&x, &y, site, b, CorrelationMode::Det)?;
                    let oracle = oracle_pairing(&Model::Phase, m, &x, &y, Some(site))?;
                    oracle_sweep.record(det == oracle, || {
                        json!({ "x": p(&x), "y": p(&y), "m": site, "det": s(&det), "oracle": s(&oracle) })
                    });
                    let skew = correlation_am(&x, &y, site, b, CorrelationMode::SkewSum)?;
                    if det.is_zero() || skew.is_zero() {
                        if det != skew && skew_failure.is_none() {
                            skew_failure = Some(json!({ "x": p(&x), "y": p(&y), "m": site, "det": s(&det), "skew_sum": s(&skew) }));
                        }
                    } else {
                        ratios.push(&skew / &det);
                    }
                }
            }
            oracle_sweep.finish(report, format!("A_m det = oracle N={n} M={m}"), "correlation/determinant");
            let constant = ratios.windows(2).all(|w| w[0] == w[1]);
            let factor = ratios.first().cloned().unwrap_or_else(Scalar::one);
            let pass = skew_failure.is_none() && constant;
            let detail = skew_failure.unwrap_or_else(|| json!({ "factor": s(&factor), "samples": ratios.len(), "constant": constant }));
            report.push(format!("A_m skew_sum / det constant N={n} M={m}"), "correlation/skew-schur-sum", pass, detail);
        }
    }
    Ok(())
}

fn hl_cauchy(cfg: &SuiteConfig, report: &mut Report) -> Result<()> {
    for n in 1..=cfg.n_max {
        for (m, q) in (1..=cfg.m_max).flat_map(|m| cfg.q_values.iter().map(move |q| (m, q))) {
            let d = m.min(cfg.cutoff);
            let bad = hl_cauchy_window(n, m, q, d)?;
            report.push(
                format!("HL Cauchy window N={n} M={m} Q={}", format_scalar(q)),
                "cauchy-identity/hall-littlewood",
                bad.is_empty(),
                json!({ "degree": d, "differing_degrees": bad }),
            );
        }
    }
    Ok(())
}

fn qboson_modes(cfg: &SuiteConfig, rng: &mut ChaCha8Rng, report: &mut Report) -> Result<()> {
    for n in 1..=cfg.n_max {
        for m in 0..=cfg.m_max {
            let mut oracle = Sweep::new();
            let mut graded = Sweep::new();
            let mut limit = Sweep::new();
            for q in &cfg.q_values {
                let spec = QBosonSpec::new(n, m, q.clone());
                for _ in 0..cfg.trials {
                    let (x, y) = (sample::points(rng, n), sample::points(rng, n));
                    let hl = hl_sum_site_normalized(&x, &y, &spec)?;
                    let o = oracle_pairing(&Model::QBoson(q.clone()), m, &x, &y, None)?;
                    oracle.record(hl == o, || json!({ "x": p(&x), "y": p(&y), "q": s(q), "hl_sum": s(&hl), "oracle": s(&o) }));
                    for mode in [QScalarMode::DetQuotient, QScalarMode::BigSchur, QScalarMode::TwistedSchur] {
                        match graded_disagreements(&x, &y, &spec, QScalarMode::HlSum, mode, m) {
                            Ok(bad) => graded.record(bad.is_empty(), || {
                                json!({ "x": p(&x), "y": p(&y), "q": s(q), "mode": mode.as_str(), "differing_degrees": bad })
                            }),
                            Err(e) => graded.record(false, || error_detail(&e)),
                        }
                    }
                }
            }
            let phase_spec = QBosonSpec::new(n, m, Scalar::zero());
            for _ in 0..cfg.trials {
                let (x, y) = (sample::points(rng, n), sample::points(rng, n));
                let phase = scalar_product(&x, &y, BoxSpec::new(n, m), ScalarMode::Det)?;
                for mode in QScalarMode::ALL {
                    let v = scalar_product_q(&x, &y, &phase_spec, mode)?;
                    limit.record(v == phase, || json!({ "x": p(&x), "y": p(&y), "mode": mode.as_str(), "value": s(&v), "phase": s(&phase) }));
                }
            }
            oracle.finish(report, format!("normalized hl_sum = oracle N={n} M={m}"), "scalar-product/hall-littlewood");
            graded.finish(report, format!("modes agree through degree {m} N={n} M={m}"), "scalar-product/q-determinant");
            limit.finish(report, format!("Q=0 reduces to phase N={n} M={m}"), "phase-limit");
        }
    }
    Ok(())
}

fn kostka(cfg: &SuiteConfig, report: &mut Report) {
    for d in 1..=cfg.cutoff {
        let t = kostka_tables(d);
        let size = json!({ "partitions": t.order.len() });
        report.push(format!("K unitriangular d={d}"), "kostka-foulkes", t.is_unitriangular(), size.clone());
        report.push(format!("K K^-1 = 1 d={d}"), "kostka-foulkes", t.inverse_is_exact(), size.clone());
        report.push(format!("K(1) = tableau count d={d}"), "kostka-foulkes/classical", classical_limit_check(d), size.clone());
        report.push(format!("c~ K b^-1 K^T = 1 d={d}"), "big-schur-expansion/indices", c_tilde_inverse_check(d), size);
    }
}

fn supersym(cfg: &SuiteConfig, rng: &mut ChaCha8Rng, report: &mut Report) -> Result<()> {
    let shapes = partitions_up_to(cfg.cutoff, usize::MAX);
    for n in 1..=cfg.n_max {
        let mut sweep = Sweep::new();
        for _ in 0..cfg.trials {
            let (y, q) = (sample::points(rng, n), sample::q(rng));
            let beta = y.scaled(&-q.clone());
            let t = supersymmetric_times(&y, &beta, cfg.cutoff.max(1));
            for lam in &shapes {
                let big = big_schur_eval(lam, &y, &q);
                let susy = supersymmetric_schur_eval(lam, &y, &beta)?;
                let miwa = schur_in_miwa(lam, &t)?;
                let skew = supersymmetric_skew_expansion(lam, &y, &beta);
                sweep.record(big == susy && susy == miwa && miwa == skew, || {
                    json!({
                        "lambda": lam.to_string(), "y": p(&y), "q": s(&q),
                        "big_schur": s(&big), "supersymmetric": s(&susy), "miwa": s(&miwa), "skew_expansion": s(&skew),
                    })
                });
            }
        }
        sweep.finish(report, format!("S(y;Q) = s(y/-Qy) = s(T) |y|={n} |λ|<={}", cfg.cutoff), "supersymmetric-schur");
    }
    Ok(())
}

fn giambelli(cfg: &SuiteConfig, rng: &mut ChaCha8Rng, report: &mut Report) {
    let sets: Vec<PointSet> = (0..cfg.trials)
        .map(|_| {
            let n = rng.gen_range(1..=cfg.n_max.max(1));
            sample::points(rng, n)
        })
        .collect();
    for d in 0..=cfg.cutoff {
        let mut sweep = Sweep::new();
        for lam in partitions_of(d) {
            for y in &sets {
                sweep.record(giambelli_check(y, &lam), || json!({ "lambda": lam.to_string(), "y": p(y) }));
            }
        }
        sweep.finish(report, format!("Giambelli |λ|={d}"), "plucker/giambelli");
    }
}

fn oracle_cross(cfg: &SuiteConfig, rng: &mut ChaCha8Rng, report: &mut Report) -> Result<()> {
    for n in 1..=cfg.n_max {
        for m in 0..=cfg.m_max {
            let b = BoxSpec::new(n, m);
            let mut pair = Sweep::new();
            let mut coeffs = Sweep::new();
            let basis = SectorBasis::new(m, n);
            for _ in 0..cfg.trials {
                let (x, y) = (sample::points(rng, n), sample::points(rng, n));
                let det = scalar_product(&x, &y, b, ScalarMode::Det)?;
                let sum = scalar_product(&x, &y, b, ScalarMode::SchurSum)?;
                let o = oracle_pairing(&Model::Phase, m, &x, &y, None)?;
                pair.record(det == o && sum == o, || json!({ "x": p(&x), "y": p(&y), "det": s(&det), "schur_sum": s(&sum), "oracle": s(&o) }));
                let v = bethe_state(&Model::Phase, m, &y);
                let ok = basis.partitions(n).iter().zip(&v).all(|(lam, c)| c == &schur_eval(lam, &y));
                coeffs.record(ok, || json!({ "y": p(&y) }));
            }
            pair.finish(report, format!("phase oracle = det = schur_sum N={n} M={m}"), "scalar-product/oracle");
            coeffs.finish(report, format!("phase Bethe coefficients = s_µ N={n} M={m}"), "bethe-state/schur-expansion");
            if n <= 2 {
                let mut q_pair = Sweep::new();
                let mut q_coeffs = Sweep::new();
                for q in &cfg.q_values {
                    let spec = QBosonSpec::new(n, m, q.clone());
                    let model = Model::QBoson(q.clone());
                    let (x, y) = (sample::points(rng, n), sample::points(rng, n));
                    let hl = hl_sum_site_normalized(&x, &y, &spec)?;
                    let o = oracle_pairing(&model, m, &x, &y, None)?;
                    q_pair.record(hl == o, || json!({ "x": p(&x), "y": p(&y), "q": s(q), "hl_sum": s(&hl), "oracle": s(&o) }));
                    let v = bethe_state(&model, m, &y);
                    let ok = basis
                        .partitions(n)
                        .iter()
                        .zip(&v)
                        .all(|(lam, c)| c == &(b_lambda(lam).eval(q) * hall_littlewood_eval(lam, &y, q)));
                    q_coeffs.record(ok, || json!({ "y": p(&y), "q": s(q) }));
                }
                q_pair.finish(report, format!("q-boson oracle = normalized hl_sum N={n} M={m}"), "scalar-product/hall-littlewood");
                q_coeffs.finish(report, format!("q-boson Bethe coefficients = b_µ P_µ N={n} M={m}"), "bethe-state/hall-littlewood");
            }
        }
    }
    let (y1, y2) = (sample::scalar(rng), sample::scalar(rng));
    let bound = cfg.n_max.max(2);
    for m in 0..=cfg.m_max {
        let models = std::iter::once(Model::Phase).chain(cfg.q_values.first().cloned().map(Model::QBoson));
        for model in models {
            let label = match &model {
                Model::Phase => "phase".to_string(),
                Model::QBoson(q) => format!("qboson Q={}", format_scalar(q)),
            };
            report.push(
                format!("[B(y1), B(y2)] = 0 {label} M={m}"),
                "monodromy/commutation",
                creation_operators_commute(&model, m, bound, &y1, &y2),
                json!({ "y1": s(&y1), "y2": s(&y2), "sectors": bound - 1 }),
            );
        }
    }
    Ok(())
}

fn matrix_integral(cfg: &SuiteConfig, rng: &mut ChaCha8Rng, report: &mut Report) -> Result<()> {
    for n in 1..=cfg.n_max.min(2) {
        let mut plus = Sweep::new();
        let mut minus = Sweep::new();
        for _ in 0..cfg.trials {
            let (t, tp) = (sample::times(rng, cfg.cutoff), sample::times(rng, cfg.cutoff));
            let sum = miwa_cauchy_sum(n, &t, &tp, cfg.cutoff)?;
            let vp = matrix_integral_constant_term(n, &t, &tp, cfg.cutoff, SignConvention::Plus)?;
            let vm = matrix_integral_constant_term(n, &t, &tp, cfg.cutoff, SignConvention::Minus)?;
            let times = |c: &MiwaCoords| Value::Array(c.times().iter().map(s).collect());
            plus.record(vp == sum, || json!({ "t": times(&t), "t'": times(&tp), "constant_term": s(&vp), "schur_sum": s(&sum) }));
            minus.record(vm != sum, || json!({ "t": times(&t), "t'": times(&tp), "constant_term": s(&vm), "schur_sum": s(&sum) }));
        }
        plus.finish(report, format!("constant term = Σ s(t)s(t') n={n} cutoff={} [plus]", cfg.cutoff), "matrix-integral");
        minus.finish(report, format!("minus convention differs n={n} cutoff={}", cfg.cutoff), "matrix-integral");
    }
    Ok(())
}

/// Up to `limit` increasing quantum-number sets from `0..period`.
fn quantum_number_sets(n: usize, period: usize, limit: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut cur: Vec<i64> = (0..n as i64).collect();
    loop {
        out.push(cur.clone());
        if out.len() >= limit {
            return out;
        }
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if (cur[i] as usize) < period - n + i {
                cur[i] += 1;
                for j in i + 1..n {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
    }
}

pub const RESIDUAL_TOL: f64 = 1e-10;
pub const UNIT_ROOT_TOL: f64 = 1e-12;

fn bethe(cfg: &SuiteConfig, report: &mut Report) {
    for n in 1..=cfg.n_max {
        for m in 0..=cfg.m_max {
            let mut worst = 0.0_f64;
            let mut failure: Option<Value> = None;
            for qn in quantum_number_sets(n, n + m + 1, cfg.trials.max(1)) {
                match solve_phase(n, m, &qn) {
                    Ok(r) => {
                        worst = worst.max(r.residual);
                        let unit = n > 1
                            || qn.iter().all(|&k| {
                                let exact = num_complex::Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * k as f64 / (m + 1) as f64);
                                r.roots.iter().any(|z| (z - exact).norm() < UNIT_ROOT_TOL)
                            });
                        if (r.residual >= RESIDUAL_TOL || !unit) && failure.is_none() {
                            failure = Some(json!({ "quantum_numbers": qn, "residual": r.residual, "unit_roots": unit }));
                        }
                    }
                    Err(e) => failure = failure.or(Some(error_detail(&e))),
                }
            }
            let pass = failure.is_none();
            report.push(
                format!("phase residual N={n} M={m}"),
                "bethe-equations/phase",
                pass,
                failure.unwrap_or_else(|| json!({ "max_residual": worst })),
            );
            let qn: Vec<i64> = (0..n as i64).collect();
            let (pass, detail) = match continue_qboson(n, m, &qn, 0.3, 6) {
                Ok(path) => {
                    let worst = path.iter().map(|s| s.roots.residual).fold(0.0, f64::max);
                    let branches = path.iter().all(|s| s.branch_consistent);
                    (worst < RESIDUAL_TOL && branches, json!({ "max_residual": worst, "branch_consistent": branches, "steps": path.len() - 1 }))
                }
                Err(e) => (false, error_detail(&e)),
            };
            report.push(format!("q-boson continuation 0 -> 0.3 N={n} M={m}"), "bethe-equations/q-boson", pass, detail);
        }
    }
}

/// Runs a suite twice and compares the serialized reports.
pub fn determinism_check(config: &SuiteConfig) -> Result<bool> {
    let a = emit_report(&run_suite(config)?, ReportFormat::Json)?;
    let b = emit_report(&run_suite(config)?, ReportFormat::Json)?;
    Ok(a == b)
}

/// Parses a comma-separated list of Q values, keeping the defaults when empty.
pub fn parse_q_values(s: &str) -> Result<Vec<Scalar>> {
    let v = crate::algebra::scalar::parse_scalar_list(s)?;
    Ok(if v.is_empty() { vec![frac(1, 4), frac(1, 3), frac(2, 5)] } else { v })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_report_serialization() {
        let r = Report::new("kostka", 0);
        let j: Value = serde_json::from_str(&emit_report(&r, ReportFormat::Json).unwrap()).unwrap();
        assert_eq!(j["checks"], json!([]));
        assert_eq!(j["all_pass"], json!(true));
    }

    #[test]
    fn failing_check_sets_exit_code() {
        let mut r = Report::new("kostka", 0);
        r.push("a", "x", true, Value::Null);
        r.push("b", "x", false, Value::Null);
        assert!(!r.all_pass);
        assert_eq!(r.exit_code(), 1);
        let text = emit_report(&r, ReportFormat::Text).unwrap();
        assert_eq!(text.lines().count(), 3);
    }

    #[test]
    fn unknown_suite() {
        assert!(matches!(SuiteName::parse("nope"), Err(Error::UnknownSuite(_))));
    }

    #[test]
    fn caps() {
        let mut c = SuiteConfig::defaults(SuiteName::PhaseScalar);
        c.n_max = 5;
        assert!(matches!(c.validate(&Caps::DESK), Err(Error::SizeCap { .. })));
        assert!(c.validate(&Caps::from_override(Some("9")).unwrap()).is_ok());
    }

    #[test]
    fn quantum_number_enumeration() {
        assert_eq!(quantum_number_sets(2, 4, 10), vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(quantum_number_sets(1, 3, 2), vec![vec![0], vec![1]]);
    }

    #[test]
    fn kostka_suite_small() {
        let mut c = SuiteConfig::defaults(SuiteName::Kostka);
        c.cutoff = 4;
        let r = run_suite(&c).unwrap();
        assert!(r.all_pass, "{r:?}");
    }

    #[test]
    fn oracle_cross_small() {
        let mut c = SuiteConfig::defaults(SuiteName::OracleCross);
        c.n_max = 2;
        c.m_max = 2;
        let r = run_suite(&c).unwrap();
        assert!(r.all_pass, "{}", emit_report(&r, ReportFormat::Text).unwrap());
    }
}
