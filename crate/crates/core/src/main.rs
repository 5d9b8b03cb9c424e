use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use qtau::algebra::scalar::{format_scalar, parse_scalar, Scalar};
use qtau::bethe::{residual, solve_phase, solve_qboson, BetheRoots};
use qtau::fock::{bethe_state, dual_bethe_state, oracle_pairing, Model, ModelKind, SectorBasis};
use qtau::partitions::occupation_from_partition;
use qtau::phase_model::{correlation_am, scalar_product, BoxSpec, CorrelationMode, ScalarMode};
use qtau::qboson_model::{graded_disagreements, hl_sum_site_normalized, scalar_product_q, QBosonSpec, QScalarMode};
use qtau::suite::{emit_report, parse_q_values, run_suite, Caps, ReportFormat, SuiteConfig, SuiteName};
use qtau::symfunc::{kostka_tables, PointSet};
use qtau::{Error, Result};

#[derive(Parser)]
#[command(name = "qtau", version, about = "Exact scalar products, correlation functions and identity suites for the phase and q-boson chains")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Sizes {
    /// Number of particles (defaults to the number of x points)
    #[arg(long)]
    n: Option<usize>,
    /// Box width / largest site index
    #[arg(long)]
    m: usize,
}

#[derive(Args, Clone)]
struct Output {
    /// Write the JSON result here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Phase-chain scalar product
    Scalar {
        #[command(flatten)]
        sizes: Sizes,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        /// det, schur_sum or all
        #[arg(long, default_value = "all")]
        mode: String,
        #[command(flatten)]
        output: Output,
    },
    /// q-boson scalar product
    Qscalar {
        #[command(flatten)]
        sizes: Sizes,
        #[arg(long)]
        q: String,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        /// hl_sum, det_quotient, big_schur, twisted_schur or all
        #[arg(long, default_value = "all")]
        mode: String,
        #[command(flatten)]
        output: Output,
    },
    /// Phase-chain correlation function with an insertion at site m
    Corr {
        #[command(flatten)]
        sizes: Sizes,
        /// Site of the inserted creation operator
        #[arg(long)]
        site: usize,
        #[arg(long)]
        x: String,
        /// N − 1 points
        #[arg(long)]
        y: String,
        /// det, skew_sum or all
        #[arg(long, default_value = "all")]
        mode: String,
        #[command(flatten)]
        output: Output,
    },
    /// Brute-force pairing in the occupation basis, compared with the closed forms
    Oracle {
        #[arg(long, default_value = "phase")]
        model: ModelKind,
        #[command(flatten)]
        sizes: Sizes,
        #[arg(long)]
        q: Option<String>,
        #[arg(long)]
        x: String,
        #[arg(long, default_value = "")]
        y: String,
        /// Insert a creation operator at this site (phase chain)
        #[arg(long)]
        insert: Option<usize>,
        #[command(flatten)]
        output: Output,
    },
    /// Solve the Bethe equations
    Bethe {
        #[arg(long, default_value = "phase")]
        model: ModelKind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        /// Comma-separated quantum numbers (default 0..N-1)
        #[arg(long)]
        qn: Option<String>,
        /// Deformation parameter (q-boson), reached by continuation from 0
        #[arg(long, default_value = "0")]
        q: f64,
        /// Continuation steps for the q-boson solve
        #[arg(long, default_value_t = 6)]
        steps: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Kostka-Foulkes tables of one weight
    Kostka {
        /// Weight of the partitions
        #[arg(long)]
        cutoff: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Run an identity suite
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        cutoff: Option<usize>,
        /// Comma-separated Q values
        #[arg(long)]
        q: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value = "json")]
        format: ReportFormat,
    },
    /// Bethe-state coefficient tables over the occupation basis
    Expand {
        #[arg(long, default_value = "phase")]
        model: ModelKind,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        q: Option<String>,
        #[arg(long)]
        y: String,
        /// Also print the dual (bra) coefficients at these points
        #[arg(long)]
        x: Option<String>,
        #[command(flatten)]
        output: Output,
    },
}

struct Outcome {
    body: String,
    ok: bool,
    out: Option<PathBuf>,
}

impl Outcome {
    fn json(v: Value, ok: bool, out: &Output) -> Result<Self> {
        Ok(Outcome { body: serde_json::to_string_pretty(&v)? + "\n", ok, out: out.out.clone() })
    }
}

fn s(x: &Scalar) -> Value {
    Value::String(format_scalar(x))
}

fn points(arg: &str, what: &'static str, expected: Option<usize>) -> Result<PointSet> {
    let p = PointSet::parse(arg)?;
    if let Some(n) = expected {
        p.require_len(what, n)?;
    }
    Ok(p)
}

fn model_of(kind: ModelKind, q: Option<&str>) -> Result<Model> {
    match kind {
        ModelKind::Phase => Ok(Model::Phase),
        ModelKind::QBoson => {
            let q = q.ok_or_else(|| Error::Parse { input: String::new(), reason: "--q is required for the q-boson chain".into() })?;
            Ok(Model::QBoson(parse_scalar(q)?))
        }
    }
}

fn roots_json(r: &BetheRoots) -> Value {
    json!({ "roots": r.roots.iter().map(|z| [z.re, z.im]).collect::<Vec<_>>(), "residual": r.residual })
}

fn run(cmd: Command, caps: &Caps) -> Result<Outcome> {
    match cmd {
        Command::Scalar { sizes, x, y, mode, output } => {
            let x = points(&x, "x", sizes.n)?;
            let n = x.len();
            let y = points(&y, "y", Some(n))?;
            caps.check_nm(n, sizes.m)?;
            let b = BoxSpec::new(n, sizes.m);
            let modes = if mode == "all" { vec![ScalarMode::Det, ScalarMode::SchurSum] } else { vec![mode.parse()?] };
            let mut values = serde_json::Map::new();
            let mut seen = Vec::new();
            for md in modes {
                let v = scalar_product(&x, &y, b, md)?;
                values.insert(md.as_str().into(), s(&v));
                seen.push(v);
            }
            let agree = seen.windows(2).all(|w| w[0] == w[1]);
            Outcome::json(json!({ "n": n, "m": sizes.m, "x": x, "y": y, "values": values, "agree": agree }), agree, &output)
        }
        Command::Qscalar { sizes, q, x, y, mode, output } => {
            let x = points(&x, "x", sizes.n)?;
            let n = x.len();
            let y = points(&y, "y", Some(n))?;
            caps.check_nm(n, sizes.m)?;
            let spec = QBosonSpec::new(n, sizes.m, parse_scalar(&q)?);
            let modes: Vec<QScalarMode> = if mode == "all" { QScalarMode::ALL.to_vec() } else { vec![mode.parse()?] };
            let mut values = serde_json::Map::new();
            let mut graded = serde_json::Map::new();
            let mut ok = true;
            for md in &modes {
                values.insert(md.as_str().into(), s(&scalar_product_q(&x, &y, &spec, *md)?));
                if *md != QScalarMode::HlSum {
                    let bad = graded_disagreements(&x, &y, &spec, QScalarMode::HlSum, *md, sizes.m)?;
                    ok &= bad.is_empty();
                    graded.insert(md.as_str().into(), json!(bad));
                }
            }
            let body = json!({
                "n": n, "m": sizes.m, "q": s(&spec.q), "x": x, "y": y,
                "values": values,
                "site_normalized_hl_sum": s(&hl_sum_site_normalized(&x, &y, &spec)?),
                "graded_window": sizes.m,
                "differing_degrees_vs_hl_sum": graded,
            });
            Outcome::json(body, ok, &output)
        }
        Command::Corr { sizes, site, x, y, mode, output } => {
            let x = points(&x, "x", sizes.n)?;
            let n = x.len();
            let y = points(&y, "y", Some(n.saturating_sub(1)))?;
            caps.check_nm(n, sizes.m)?;
            let b = BoxSpec::new(n, sizes.m);
            let modes = if mode == "all" { vec![CorrelationMode::Det, CorrelationMode::SkewSum] } else { vec![mode.parse()?] };
            let mut values = serde_json::Map::new();
            let mut seen = Vec::new();
            for md in modes {
                let v = correlation_am(&x, &y, site, b, md)?;
                values.insert(md.as_str().into(), s(&v));
                seen.push(v);
            }
            let oracle = oracle_pairing(&Model::Phase, sizes.m, &x, &y, Some(site))?;
            let agree = seen.iter().all(|v| v == &oracle);
            let body = json!({
                "n": n, "m": sizes.m, "site": site, "x": x, "y": y,
                "values": values, "oracle": s(&oracle), "agree": agree,
            });
            Outcome::json(body, agree, &output)
        }
        Command::Oracle { model, sizes, q, x, y, insert, output } => {
            let model = model_of(model, q.as_deref())?;
            let x = points(&x, "x", sizes.n)?;
            let n = x.len();
            let y = points(&y, "y", Some(n - usize::from(insert.is_some()).min(n)))?;
            caps.check_nm(n, sizes.m)?;
            let value = oracle_pairing(&model, sizes.m, &x, &y, insert)?;
            let b = BoxSpec::new(n, sizes.m);
            let mut formulas = serde_json::Map::new();
            match (&model, insert) {
                (Model::Phase, None) => {
                    for md in [ScalarMode::Det, ScalarMode::SchurSum] {
                        formulas.insert(md.as_str().into(), s(&scalar_product(&x, &y, b, md)?));
                    }
                }
                (Model::Phase, Some(site)) => {
                    for md in [CorrelationMode::Det, CorrelationMode::SkewSum] {
                        formulas.insert(md.as_str().into(), s(&correlation_am(&x, &y, site, b, md)?));
                    }
                }
                (Model::QBoson(q), None) => {
                    let spec = QBosonSpec::new(n, sizes.m, q.clone());
                    formulas.insert("site_normalized_hl_sum".into(), s(&hl_sum_site_normalized(&x, &y, &spec)?));
                }
                (Model::QBoson(_), Some(_)) => {}
            }
            let target = s(&value);
            let verdict = formulas.values().all(|v| v == &target);
            let body = json!({
                "model": match &model { Model::Phase => "phase", Model::QBoson(_) => "qboson" },
                "n": n, "m": sizes.m, "x": x, "y": y, "insertion": insert,
                "pairing": target, "formulas": formulas, "agree": verdict,
            });
            Outcome::json(body, verdict, &output)
        }
        Command::Bethe { model, n, m, qn, q, steps, output } => {
            caps.check_nm(n, m)?;
            let qn: Vec<i64> = match qn {
                Some(list) => list
                    .split(',')
                    .filter(|t| !t.trim().is_empty())
                    .map(|t| t.trim().parse().map_err(|_| Error::Parse { input: t.to_string(), reason: "expected an integer".into() }))
                    .collect::<Result<_>>()?,
                None => (0..n as i64).collect(),
            };
            let phase = solve_phase(n, m, &qn)?;
            let roots = match model {
                ModelKind::Phase => phase,
                ModelKind::QBoson => {
                    let mut cur = phase;
                    for k in 1..=steps.max(1) {
                        cur = solve_qboson(n, m, q * k as f64 / steps.max(1) as f64, &cur)?;
                    }
                    cur
                }
            };
            let res = residual(model, m, q, &roots.roots);
            let ok = res < qtau::suite::RESIDUAL_TOL;
            let mut body = roots_json(&roots);
            body["model"] = json!(model.as_str());
            body["n"] = json!(n);
            body["m"] = json!(m);
            body["q"] = json!(q);
            body["quantum_numbers"] = json!(qn);
            Outcome::json(body, ok, &output)
        }
        Command::Kostka { cutoff, output } => {
            caps.check("cutoff", cutoff, caps.degree)?;
            let t = kostka_tables(cutoff);
            let ok = t.is_unitriangular() && t.inverse_is_exact();
            Outcome::json(serde_json::to_value(&*t)?, ok, &output)
        }
        Command::Verify { suite, n, m, cutoff, q, seed, trials, out, format } => {
            let name = SuiteName::parse(&suite)?;
            let mut cfg = SuiteConfig::defaults(name);
            cfg.n_max = n.unwrap_or(cfg.n_max);
            cfg.m_max = m.unwrap_or(cfg.m_max);
            cfg.cutoff = cutoff.unwrap_or(cfg.cutoff);
            cfg.trials = trials.unwrap_or(cfg.trials);
            cfg.seed = seed;
            if let Some(q) = q {
                cfg.q_values = parse_q_values(&q)?;
            }
            cfg.out = out.clone();
            cfg.validate(caps)?;
            let report = run_suite(&cfg)?;
            Ok(Outcome { body: emit_report(&report, format)?, ok: report.all_pass, out })
        }
        Command::Expand { model, m, q, y, x, output } => {
            let model = model_of(model, q.as_deref())?;
            let y = PointSet::parse(&y)?;
            let n = y.len();
            caps.check_nm(n, m)?;
            let ket = bethe_state(&model, m, &y);
            let bra = match &x {
                Some(x) => Some(dual_bethe_state(&model, m, &points(x, "x", Some(n))?)),
                None => None,
            };
            let basis = SectorBasis::new(m, n);
            let rows: Vec<Value> = basis
                .partitions(n)
                .iter()
                .enumerate()
                .map(|(i, lam)| {
                    let occ = occupation_from_partition(lam, n, m).map(|o| o.0).unwrap_or_default();
                    let mut row = json!({ "partition": lam.to_string(), "occupation": occ, "ket": s(&ket[i]) });
                    if let Some(bra) = &bra {
                        row["bra"] = s(&bra[i]);
                    }
                    row
                })
                .collect();
            Outcome::json(json!({ "n": n, "m": m, "y": y, "x": x, "coefficients": rows }), true, &output)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let caps = match Caps::from_env() {
        Ok(c) => c,
        Err(e) => {
            eprintln!("qtau: {e}");
            return ExitCode::from(2);
        }
    };
    match run(cli.command, &caps) {
        Ok(outcome) => {
            match &outcome.out {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, &outcome.body) {
                        eprintln!("qtau: cannot write {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                }
                None => print!("{}", outcome.body),
            }
            ExitCode::from(if outcome.ok { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("qtau: {e}");
            ExitCode::from(2)
        }
    }
}
