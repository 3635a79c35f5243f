use std::fmt::{Display, Write};
use std::time::Instant;

use cfdyn::arith::{ArithError, Complex, ComplexLiteral, FloatComplex};
use cfdyn::cf::{
    check_choice, check_convergence, check_determinants, check_identity, check_unit_circle,
    convergent_value, convergents, determinants, expand, identity_residuals, ChoiceFunction,
};
use cfdyn::diamond::{check_cover, check_w2_images, classify_cell, verify_partition_lemma};
use cfdyn::natext::{
    big_f_branch, big_f_diamond, build_psi, check_trapping, natext_sets, v_contains,
    verify_bijectivity, verify_psi,
};
use cfdyn::regions::{Carrier, EqualityOptions};
use cfdyn::report::{CheckReport, Status, SubCheck};
use serde::Serialize;

use crate::args::{Algorithm, Cli, Command, ExpandArgs, Format, Suite};
use crate::config::VerifyConfig;
use crate::render::render;
use crate::CliError;

/// What a command produced: the bytes to emit and the outcome that decides
/// the exit status.
#[derive(Debug)]
pub struct Output {
    pub text: String,
    pub status: Status,
}

impl Output {
    fn ok(text: String) -> Self {
        Output {
            text,
            status: Status::Pass,
        }
    }
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    let format = cli.format;
    match &cli.command {
        Command::Expand(a) => cmd_expand(a, format.unwrap_or(Format::Text)),
        Command::Convergents(a) => cmd_convergents(a, format.unwrap_or(Format::Text)),
        Command::Classify { w } => cmd_classify(w, format.unwrap_or(Format::Text)),
        Command::Orbit { z, w, steps } => cmd_orbit(z, w, *steps, format.unwrap_or(Format::Text)),
        Command::Verify {
            suite,
            samples,
            seed,
            epsilon,
        } => {
            let mut cfg = VerifyConfig::load()?;
            cfg.samples = samples.unwrap_or(cfg.samples);
            cfg.seed = seed.unwrap_or(cfg.seed);
            cfg.epsilon = epsilon.unwrap_or(cfg.epsilon);
            cmd_verify(*suite, &cfg, cli.timings, format.unwrap_or(Format::Json))
        }
        Command::Render { figure } => Ok(Output::ok(render(*figure)?)),
    }
}

pub fn parse_literal(s: &str) -> Result<ComplexLiteral, CliError> {
    s.parse().map_err(|e| match e {
        ArithError::Parse(token) => CliError::Parse {
            input: s.to_string(),
            token,
        },
        other => CliError::Compute(other.to_string()),
    })
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("plain data");
    s.push('\n');
    s
}

fn choice(a: Algorithm) -> ChoiceFunction {
    match a {
        Algorithm::Diamond => ChoiceFunction::Diamond,
        Algorithm::Hurwitz => ChoiceFunction::Hurwitz,
    }
}

fn algorithm_name(a: Algorithm) -> &'static str {
    choice(a).name()
}

#[derive(Serialize)]
struct ConvergentView {
    index: i64,
    p: String,
    q: String,
}

#[derive(Serialize)]
struct ExpansionView {
    input: String,
    carrier: &'static str,
    algorithm: &'static str,
    digits: Vec<String>,
    remainders: Vec<String>,
    terminated: bool,
    convergents: Vec<ConvergentView>,
    residuals: Vec<f64>,
}

fn expansion_view<T: Carrier>(
    input: &str,
    z: &Complex<T>,
    a: &ExpandArgs,
) -> Result<ExpansionView, CliError>
where
    Complex<T>: Display,
{
    let exp = expand(z, &choice(a.algorithm), a.steps as usize)
        .map_err(|e| CliError::Compute(e.to_string()))?;
    let convs = convergents(&exp.digits)
        .into_iter()
        .map(|c| ConvergentView {
            index: c.index,
            p: c.p.to_string(),
            q: c.q.to_string(),
        })
        .collect();
    Ok(ExpansionView {
        input: input.to_string(),
        carrier: if T::EXACT { "exact" } else { "float" },
        algorithm: algorithm_name(a.algorithm),
        digits: exp.digits.iter().map(|d| d.to_string()).collect(),
        remainders: exp.remainders.iter().map(|r| r.to_string()).collect(),
        terminated: exp.terminated,
        residuals: identity_residuals(z, &exp),
        convergents: convs,
    })
}

fn cmd_expand(a: &ExpandArgs, format: Format) -> Result<Output, CliError> {
    let lit = parse_literal(&a.z)?;
    let view = if lit.exact {
        expansion_view(&a.z, &lit.value, a)?
    } else {
        expansion_view(&a.z, &lit.to_float(), a)?
    };
    if format == Format::Json {
        return Ok(Output::ok(json(&view)));
    }
    let mut t = String::new();
    let _ = writeln!(
        t,
        "z = {} ({}, {})",
        view.input, view.carrier, view.algorithm
    );
    let _ = writeln!(t, "digits: [{}]", view.digits.join(", "));
    let _ = writeln!(t, "terminated: {}", view.terminated);
    for (n, d) in view.digits.iter().enumerate() {
        let c = &view.convergents[n + 2];
        let _ = write!(
            t,
            "n={n} a={d} z={} p={} q={}",
            view.remainders[n], c.p, c.q
        );
        if let Some(r) = view.residuals.get(n) {
            let _ = write!(t, " residual={r:e}");
        }
        t.push('\n');
    }
    Ok(Output::ok(t))
}

#[derive(Serialize)]
struct ConvergentRow {
    index: i64,
    p: String,
    q: String,
    value: Option<String>,
}

#[derive(Serialize)]
struct ConvergentsView {
    input: String,
    algorithm: &'static str,
    convergents: Vec<ConvergentRow>,
    determinants: Vec<String>,
}

fn cmd_convergents(a: &ExpandArgs, format: Format) -> Result<Output, CliError> {
    let lit = parse_literal(&a.z)?;
    let digits = if lit.exact {
        expand(&lit.value, &choice(a.algorithm), a.steps as usize).map(|e| e.digits)
    } else {
        expand(&lit.to_float(), &choice(a.algorithm), a.steps as usize).map(|e| e.digits)
    }
    .map_err(|e| CliError::Compute(e.to_string()))?;
    let convs = convergents(&digits);
    let view = ConvergentsView {
        input: a.z.clone(),
        algorithm: algorithm_name(a.algorithm),
        convergents: convs
            .iter()
            .map(|c| ConvergentRow {
                index: c.index,
                p: c.p.to_string(),
                q: c.q.to_string(),
                value: convergent_value(c).map(|v| v.to_string()),
            })
            .collect(),
        determinants: determinants(&convs).iter().map(|d| d.to_string()).collect(),
    };
    if format == Format::Json {
        return Ok(Output::ok(json(&view)));
    }
    let mut t = String::new();
    for (c, d) in view.convergents.iter().skip(1).zip(&view.determinants) {
        let v = c.value.as_deref().unwrap_or("inf");
        let _ = writeln!(t, "n={} p={} q={} p/q={v} det={d}", c.index, c.p, c.q);
    }
    Ok(Output::ok(t))
}

#[derive(Serialize)]
struct ClassifyView {
    input: String,
    dih: String,
    k: u8,
}

fn cmd_classify(w: &str, format: Format) -> Result<Output, CliError> {
    let lit = parse_literal(w)?;
    let cell = if lit.exact {
        classify_cell(&lit.value)
    } else {
        classify_cell(&lit.to_float())
    };
    let cell = cell.map_err(|e| CliError::Domain(e.to_string()))?;
    let view = ClassifyView {
        input: w.to_string(),
        dih: cell.g.name(),
        k: cell.k,
    };
    Ok(Output::ok(match format {
        Format::Json => json(&view),
        Format::Text => format!("{}: {} W{}\n", view.input, view.dih, view.k),
    }))
}

#[derive(Serialize)]
struct OrbitStep {
    n: usize,
    z: String,
    w: String,
    in_v: bool,
    in_psi: bool,
    in_d: bool,
    /// The branch applied to reach step `n + 1`.
    #[serde(skip_serializing_if = "Option::is_none")]
    branch: Option<&'static str>,
}

#[derive(Serialize, Default)]
struct FirstEntry {
    v: Option<usize>,
    psi: Option<usize>,
    d: Option<usize>,
}

#[derive(Serialize)]
struct OrbitView {
    z: String,
    w: String,
    steps: usize,
    first_entry: FirstEntry,
    #[serde(skip_serializing_if = "Option::is_none")]
    stopped: Option<String>,
    trace: Vec<OrbitStep>,
}

fn cmd_orbit(z: &str, w: &str, steps: usize, format: Format) -> Result<Output, CliError> {
    let zl = parse_literal(z)?;
    let wl = parse_literal(w)?;
    if wl.exact {
        return Err(CliError::RationalW(w.to_string()));
    }
    let (mut zc, mut wc): (FloatComplex, FloatComplex) = (zl.to_float(), wl.to_float());
    if zc == wc {
        return Err(CliError::Domain("z and w must differ".into()));
    }
    let eps = VerifyConfig::load()?.epsilon;
    let psi = build_psi()
        .map_err(|e| CliError::Compute(e.to_string()))?
        .product_set();
    let d = &natext_sets().d;
    let mut first = FirstEntry::default();
    let mut trace = Vec::with_capacity(steps + 1);
    let mut stopped = None;
    for n in 0..=steps {
        let step = OrbitStep {
            n,
            z: zc.to_string(),
            w: wc.to_string(),
            in_v: v_contains(&zc, &wc),
            in_psi: psi.contains_f64(&zc, &wc, eps),
            in_d: d.contains_f64(&zc, &wc, eps),
            branch: (n < steps).then(|| big_f_branch(&wc).label()),
        };
        for (flag, slot) in [
            (step.in_v, &mut first.v),
            (step.in_psi, &mut first.psi),
            (step.in_d, &mut first.d),
        ] {
            if flag && slot.is_none() {
                *slot = Some(n);
            }
        }
        trace.push(step);
        if n == steps {
            break;
        }
        match big_f_diamond(&zc, &wc) {
            Ok((z1, w1)) if z1.is_finite() && w1.is_finite() => (zc, wc) = (z1, w1),
            Ok(_) => {
                stopped = Some(format!("left the finite plane after step {n}"));
                break;
            }
            Err(e) => {
                stopped = Some(format!("{e} at step {n}"));
                break;
            }
        }
    }
    if let Some(last) = trace.last_mut() {
        if stopped.is_some() {
            last.branch = None;
        }
    }
    let view = OrbitView {
        z: z.to_string(),
        w: w.to_string(),
        steps,
        first_entry: first,
        stopped,
        trace,
    };
    if format == Format::Json {
        return Ok(Output::ok(json(&view)));
    }
    let show = |o: Option<usize>| o.map_or("none".to_string(), |n| n.to_string());
    let mut t = String::new();
    let _ = writeln!(
        t,
        "first entry: V {} Psi {} D {}",
        show(view.first_entry.v),
        show(view.first_entry.psi),
        show(view.first_entry.d)
    );
    if let Some(s) = &view.stopped {
        let _ = writeln!(t, "stopped: {s}");
    }
    let mark = |b: bool, c: &'static str| if b { c } else { "-" };
    for s in &view.trace {
        let _ = writeln!(
            t,
            "{:>4} {:<4} {}{}{} z={} w={}",
            s.n,
            s.branch.unwrap_or(""),
            mark(s.in_v, "V"),
            mark(s.in_psi, "P"),
            mark(s.in_d, "D"),
            s.z,
            s.w
        );
    }
    Ok(Output::ok(t))
}

fn suite_name(s: Suite) -> &'static str {
    match s {
        Suite::Partition => "partition",
        Suite::Bijectivity => "bijectivity",
        Suite::Trapping => "trapping",
        Suite::Psi => "psi",
        Suite::Identities => "identities",
    }
}

/// Runs one suite. The report records `samples` and `seed` as used.
pub fn verify_report(suite: Suite, cfg: &VerifyConfig, timings: bool) -> CheckReport {
    let start = Instant::now();
    let opts = EqualityOptions {
        grid: cfg.grid,
        random: cfg.samples,
        seed: cfg.seed,
        epsilon: cfg.epsilon,
        ..EqualityOptions::default()
    };
    let (n, seed, eps) = (cfg.samples, cfg.seed, cfg.epsilon);
    let mut extra = None;
    let checks: Vec<SubCheck> = match suite {
        Suite::Partition => {
            let mut v = verify_partition_lemma(&opts);
            v.push(check_w2_images(n, seed, eps).unwrap_or_else(|e| {
                SubCheck::new(
                    "T^-1 of sampled W2 points",
                    Status::Inconclusive,
                    e.to_string(),
                )
            }));
            v.push(check_cover(n, seed, eps));
            v
        }
        Suite::Bijectivity => verify_bijectivity(&opts, n, seed, eps),
        Suite::Psi => {
            let (psi, v) = verify_psi(&opts, n, seed, eps);
            if let Some(p) = psi {
                extra = Some(serde_json::json!({
                    "stabilized_at": p.stabilized_at,
                    "pieces": p.history,
                }));
            }
            v
        }
        // one orbit per ten samples: each runs up to 700 steps
        Suite::Trapping => check_trapping((n / 10).max(1), seed, 200, 500, eps),
        Suite::Identities => {
            let (det, unit) = check_determinants(1000, 30, seed);
            extra = Some(serde_json::json!({
                "determinant": unit.as_ref().map(|u| u.to_string()),
                "stated_determinant": "1",
                "matches_statement": unit.as_ref().map(|u| u.to_string() == "1"),
            }));
            let mut v = vec![det, check_identity(200, 15, seed, 1e-9)];
            v.extend(check_convergence(200, 60, seed, 1e-8, 1e6, 0.99));
            v.push(check_choice(10 * n, seed, 50.0));
            v.push(check_unit_circle(1000, seed));
            v
        }
    };
    let mut report = CheckReport::new(suite_name(suite), checks, n, seed);
    report.extra = extra;
    if timings {
        report.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    }
    report
}

fn cmd_verify(
    suite: Suite,
    cfg: &VerifyConfig,
    timings: bool,
    format: Format,
) -> Result<Output, CliError> {
    let report = verify_report(suite, cfg, timings);
    let text = match format {
        Format::Json => json(&report),
        Format::Text => {
            let mut t = format!("{}: {:?}\n", report.check, report.status);
            for s in &report.subchecks {
                let _ = writeln!(t, "  {:?} {}: {}", s.status, s.name, s.detail);
            }
            t
        }
    };
    Ok(Output {
        text,
        status: report.status,
    })
}

/// The documented exit status for an outcome.
pub fn exit_code(status: Status) -> u8 {
    match status {
        Status::Pass => 0,
        Status::Fail => 1,
        Status::Inconclusive => 3,
    }
}
