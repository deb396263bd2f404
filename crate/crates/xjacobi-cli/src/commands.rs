//! Subcommand implementations. Each returns an [`Outcome`]: the JSON result with
//! its `pass` verdict, an optional CSV rendering and optional `(η, value)` samples.

use serde_json::{json, Map, Value};
use xjacobi::exec::Strategy;
use xjacobi::jacobi::{jacobi, verify_contiguous_identities, IdentityReport, JacobiParams, LambdaPair};
use xjacobi::orthocheck::{self, cross_ortho, exceptional_zero_count, gram, gram_r_jacobi, GramReport};
use xjacobi::potentials::{self, build_potential, fd_spectrum, FdGrid};
use xjacobi::quadrature::QuadConfig;
use xjacobi::rational::{int, parse_rat, to_f64, Rat};
use xjacobi::seeds::{self, classify, classify_derived, is_admissible, SeedType};
use xjacobi::sle::{csle_sweep, heine_residual_xr, heine_sweep};
use xjacobi::xconstruct::{
    grid_samples, parse_sign, verify_decompositions, verify_pd_identities, xm_jacobi, xr_jacobi, SigmaPair, XrFamily,
};
use xjacobi::{Error, RatPoly};

use crate::output::{self as out, error_json, error_kind};
use crate::{Cli, Command};

/// What a command produced.
pub struct Outcome {
    /// JSON result (always includes `"command"` and `"pass"`).
    pub json: Value,
    /// Every check passed.
    pub pass: bool,
    /// CSV rendering, for commands that have one.
    pub csv: Option<String>,
    /// `(η, value)` samples for `--dump-samples`.
    pub samples: Option<Vec<(f64, f64)>>,
}

/// Usage problems and library precondition errors; both exit with status 2.
#[derive(Debug)]
pub enum CommandError {
    /// Malformed or unsupported arguments.
    Usage(String),
    /// An error raised by the library.
    Lib(Error),
}

impl From<Error> for CommandError {
    fn from(e: Error) -> Self {
        CommandError::Lib(e)
    }
}

impl CommandError {
    /// The stderr JSON report.
    pub fn to_json(&self) -> Value {
        match self {
            CommandError::Usage(m) => error_json("usage", m),
            CommandError::Lib(e) => error_json(error_kind(e), &e.to_string()),
        }
    }
}

type CmdResult = Result<Outcome, CommandError>;

fn r(s: &str) -> Result<Rat, CommandError> {
    Ok(parse_rat(s)?)
}

fn positive_pair(lm: &str, lp: &str) -> Result<LambdaPair, CommandError> {
    Ok(LambdaPair::positive(r(lm)?, r(lp)?)?)
}

fn sign(s: &str) -> Result<i32, CommandError> {
    let t = s.trim();
    let t = t.strip_suffix('1').unwrap_or(t);
    let mut c = t.chars();
    match (c.next(), c.next()) {
        (Some(ch), None) => Ok(parse_sign(ch)?),
        _ => Err(CommandError::Usage(format!("'{s}' is not a sign (expected + or -)"))),
    }
}

fn finish(command: &str, mut body: Map<String, Value>, pass: bool) -> Outcome {
    body.insert("command".into(), Value::String(command.into()));
    body.insert("pass".into(), Value::Bool(pass));
    Outcome { json: Value::Object(body), pass, csv: None, samples: None }
}

fn object(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(m) => m,
        _ => Map::new(),
    }
}

fn sample_poly(p: &RatPoly, lo: f64, hi: f64) -> Vec<(f64, f64)> {
    let f = p.to_f64();
    (0..=200).map(|k| lo + (hi - lo) * k as f64 / 200.0).map(|x| (x, f.eval(x))).collect()
}

fn quad_config(cli: &Cli) -> QuadConfig {
    let mut cfg = QuadConfig::from_env();
    if let Some(l) = cli.quad_levels {
        cfg.levels = l;
    }
    cfg
}

fn strategy(cli: &Cli) -> Strategy {
    if cli.sequential {
        Strategy::Sequential
    } else {
        Strategy::default()
    }
}

/// Dispatches one parsed command line.
pub fn run(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::Jacobi { n, alpha, beta } => cmd_jacobi(*n, alpha, beta),
        Command::Xmjacobi { m, n, alpha, beta } => cmd_xmjacobi(*m, *n, alpha, beta),
        Command::Xr { family, m, v, lam_minus, lam_plus } => cmd_xr(family, *m, *v, lam_minus, lam_plus),
        Command::Classify { sigma_minus, sigma_plus, sigma_inf, m, lam_minus, lam_plus } => {
            cmd_classify(sigma_minus, sigma_plus, sigma_inf, *m, lam_minus, lam_plus)
        }
        Command::Spectrum { lam_minus, lam_plus } => cmd_spectrum(lam_minus, lam_plus),
        Command::Gram { family, m, lam_minus, lam_plus } => cmd_gram(cli, family, *m, lam_minus, lam_plus),
        Command::CrossOrtho { alpha, beta, n, m } => cmd_cross(cli, alpha, beta, *n, m),
        Command::Zeros { m, n, alpha, beta } => cmd_zeros(*m, *n, alpha, beta),
        Command::Identities { nmax, samples } => cmd_identities(cli, *nmax, *samples),
        Command::Residuals { case, lams } => cmd_residuals(cli, case, lams),
        Command::Potential { seed, lam_minus, lam_plus, fd } => cmd_potential(cli, seed.as_deref(), lam_minus, lam_plus, fd.as_deref()),
        Command::Batch => Err(CommandError::Usage("batch cannot be nested".into())),
    }
}

fn cmd_jacobi(n: usize, alpha: &str, beta: &str) -> CmdResult {
    let prm = JacobiParams::new(r(alpha)?, r(beta)?);
    let p = jacobi(n, &prm)?;
    let body = json!({
        "inputs": { "n": n, "alpha": out::rat(&prm.alpha), "beta": out::rat(&prm.beta) },
        "coefficients": out::poly(&p),
        "degree": p.degree(),
    });
    let mut o = finish("jacobi", object(body), p.degree() == Some(n));
    o.samples = Some(sample_poly(&p, -1.0, 1.0));
    Ok(o)
}

fn cmd_xmjacobi(m: usize, n: usize, alpha: &str, beta: &str) -> CmdResult {
    let prm = JacobiParams::new(r(alpha)?, r(beta)?);
    let x = xm_jacobi(m, n, &prm)?;
    let lc = x.poly.leading_coeff().cloned();
    let ok = lc.as_ref() == Some(&x.leading);
    let body = json!({
        "inputs": { "m": m, "n": n, "alpha": out::rat(&prm.alpha), "beta": out::rat(&prm.beta) },
        "coefficients": out::poly(&x.poly),
        "degree": x.poly.degree(),
        "leading_closed_form": out::rat(&x.leading),
        "leading_matches": ok,
    });
    let mut o = finish("xmjacobi", object(body), ok);
    o.samples = Some(sample_poly(&x.poly, -1.0, 1.0));
    Ok(o)
}

fn cmd_xr(family: &str, m: usize, v: usize, lm: &str, lp: &str) -> CmdResult {
    let fam = XrFamily::parse(family)?;
    let lam = positive_pair(lm, lp)?;
    let x = xr_jacobi(fam, m, v, &lam)?;
    let seed = classify_derived(fam.seed_sigma(), m, &lam)?;
    let eps = seeds::spectrum(&lam)?.energies[v].clone();
    let residual_zero = heine_residual_xr(&x, &seed, &eps)?.is_zero();
    let body = json!({
        "inputs": { "family": family, "m": m, "v": v, "lam_minus": out::rat(lam.minus()), "lam_plus": out::rat(lam.plus()) },
        "coefficients": out::poly(&x.poly),
        "degree": x.poly.degree(),
        "kappa": [x.kappa_minus, x.kappa_plus],
        "seed": { "type": seed.type_tag.to_string(), "coefficients": out::poly(&seed.poly()?) },
        "energy": out::rat(&eps),
        "heine_residual_zero": residual_zero,
    });
    let mut o = finish("xr", object(body), residual_zero);
    o.samples = Some(sample_poly(&x.poly, 1.0, 11.0));
    Ok(o)
}

fn cmd_classify(sm: &str, sp: &str, si: &str, m: usize, lm: &str, lp: &str) -> CmdResult {
    let sigma = SigmaPair::new(sign(sm)?, sign(sp)?)?;
    let sinf = sign(si)?;
    let lam = positive_pair(lm, lp)?;
    let spec = classify(sigma, sinf, m, &lam)?;
    let derived = classify_derived(sigma, m, &lam).ok();
    let consistent = derived.as_ref().map(|d| d.type_tag == spec.type_tag && d.sigma_inf == sinf);
    let adm = is_admissible(&spec);
    let prm = spec.jacobi_params();
    let body = json!({
        "inputs": { "sigma_minus": sigma.minus(), "sigma_plus": sigma.plus(), "sigma_inf": sinf, "m": m,
                    "lam_minus": out::rat(lam.minus()), "lam_plus": out::rat(lam.plus()) },
        "type": spec.type_tag.to_string(),
        "energy": out::rat(&spec.energy),
        "jacobi_indexes": { "alpha": out::rat(&prm.alpha), "beta": out::rat(&prm.beta) },
        "derived_sigma_inf": derived.as_ref().map(|d| d.sigma_inf),
        "consistent_with_derived_sign": consistent,
        "admissibility": {
            "admissible": adm.admissible,
            "energy_below": adm.energy_below,
            "zero_count": adm.zero_count,
            "nodeless": adm.nodeless,
            "ff_usable": adm.ff_usable,
            "klein_prediction": adm.klein_prediction,
            "endpoint_zero": adm.endpoint_zero,
            "diagnostics": adm.diagnostics,
        },
    });
    Ok(finish("classify", object(body), consistent != Some(false)))
}

fn cmd_spectrum(lm: &str, lp: &str) -> CmdResult {
    let lam = positive_pair(lm, lp)?;
    let s = seeds::spectrum(&lam)?;
    let schr: Vec<Rat> = s.energies.iter().map(potentials::schrodinger_energy).collect();
    let body = json!({
        "inputs": { "lam_minus": out::rat(lam.minus()), "lam_plus": out::rat(lam.plus()) },
        "v_max": s.v_max,
        "energies": out::rats(&s.energies),
        "schrodinger_energies": out::rats(&schr),
        "borderline": s.borderline,
    });
    let mut csv = String::from("v,energy,schrodinger_energy\n");
    for (v, (e, es)) in s.energies.iter().zip(&schr).enumerate() {
        csv.push_str(&format!("{v},{},{}\n", xjacobi::rational::fmt_rat(e), xjacobi::rational::fmt_rat(es)));
    }
    let mut o = finish("spectrum", object(body), true);
    o.csv = Some(csv);
    Ok(o)
}

fn gram_json(g: &GramReport, cli: &Cli) -> (Map<String, Value>, bool) {
    let tol_off = cli.tol_offdiag.unwrap_or(orthocheck::OFF_DIAGONAL_TOL);
    let tol_err = cli.tol_error.unwrap_or(orthocheck::ERROR_TOL);
    let positive = g.norms.iter().all(|&n| n > 0.0 && n.is_finite());
    let pass = positive && g.max_off_diagonal < tol_off && g.max_error < tol_err;
    let body = json!({
        "labels": g.labels,
        "matrix": out::matrix(&g.matrix),
        "norms": out::floats(&g.norms),
        "errors": out::matrix(&g.errors),
        "max_off_diagonal": out::float(g.max_off_diagonal),
        "max_error": out::float(g.max_error),
        "convergent": g.convergent,
        "tolerances": { "off_diagonal": out::float(tol_off), "error": out::float(tol_err) },
    });
    (object(body), pass)
}

fn cmd_gram(cli: &Cli, family: &str, m: usize, lm: &str, lp: &str) -> CmdResult {
    let lam = positive_pair(lm, lp)?;
    let cfg = quad_config(cli);
    let g = match family {
        "r" | "r-jacobi" => gram_r_jacobi(&lam, &cfg, strategy(cli))?,
        f => gram(XrFamily::parse(f)?, m, &lam, &cfg, strategy(cli))?,
    };
    let (mut body, pass) = gram_json(&g, cli);
    body.insert(
        "inputs".into(),
        json!({ "family": family, "m": m, "lam_minus": out::rat(lam.minus()), "lam_plus": out::rat(lam.plus()),
                "quad_levels": cfg.levels }),
    );
    let mut o = finish("gram", body, pass);
    o.csv = Some(out::csv_matrix(&g.labels, &g.matrix));
    Ok(o)
}

fn cmd_cross(cli: &Cli, alpha: &str, beta: &str, n: usize, ms: &[usize]) -> CmdResult {
    let (a, b) = (r(alpha)?, r(beta)?);
    let cfg = quad_config(cli);
    let g = cross_ortho(&a, &b, n, ms, &cfg, strategy(cli))?;
    let (mut body, pass) = gram_json(&g, cli);
    body.insert(
        "inputs".into(),
        json!({ "alpha": out::rat(&a), "beta": out::rat(&b), "n": n, "m": ms, "quad_levels": cfg.levels }),
    );
    let mut o = finish("cross-ortho", body, pass);
    o.csv = Some(out::csv_matrix(&g.labels, &g.matrix));
    Ok(o)
}

fn cmd_zeros(m: usize, n: usize, alpha: &str, beta: &str) -> CmdResult {
    let (a, b) = (r(alpha)?, r(beta)?);
    let z = exceptional_zero_count(m, n, &a, &b)?;
    let in_range = int(m as i64) < (&a - &b + int(1)) / int(2);
    let pass = (z.left, z.inside, z.right) == (m, n, 0);
    let body = json!({
        "inputs": { "m": m, "n": n, "alpha": out::rat(&a), "beta": out::rat(&b) },
        "left": z.left,
        "inside": z.inside,
        "right": z.right,
        "at_endpoints": z.at_endpoints,
        "complex": z.complex,
        "claim_applies": in_range,
    });
    Ok(finish("zeros", object(body), pass))
}

fn report_json(r: &IdentityReport) -> Value {
    let failures: Vec<Value> = r
        .failures
        .iter()
        .take(20)
        .map(|f| {
            json!({ "identity": f.identity, "n": f.n, "alpha": out::rat(&f.params.alpha),
                    "beta": out::rat(&f.params.beta), "detail": f.detail })
        })
        .collect();
    json!({ "checked": r.checked, "skipped": r.skipped, "failed": r.failures.len(), "failures": failures, "pass": r.pass() })
}

fn cmd_identities(cli: &Cli, nmax: usize, samples: usize) -> CmdResult {
    let st = strategy(cli);
    let jp: Vec<JacobiParams> = grid_samples(samples, false).iter().map(|l| l.jacobi_params()).collect();
    let contiguous = verify_contiguous_identities(nmax, &jp, st);
    let pd = verify_pd_identities(nmax, &grid_samples(samples, false), st);
    let dec = verify_decompositions(nmax, &grid_samples(samples, true), st);
    let pass = contiguous.pass() && pd.pass() && dec.pass();
    let body = json!({
        "inputs": { "nmax": nmax, "samples": samples },
        "contiguous": report_json(&contiguous),
        "determinants": report_json(&pd),
        "decompositions": report_json(&dec),
    });
    Ok(finish("identities", object(body), pass))
}

fn cmd_residuals(cli: &Cli, case: &str, lams: &[String]) -> CmdResult {
    let lams: Vec<LambdaPair> = if lams.is_empty() {
        vec![
            LambdaPair::from_fracs(11, 2, 1, 2)?,
            LambdaPair::from_fracs(13, 2, 1, 2)?,
            LambdaPair::from_fracs(13, 2, 3, 2)?,
        ]
    } else {
        lams.iter()
            .map(|s| {
                let (a, b) = s.split_once(',').ok_or_else(|| CommandError::Usage(format!("'{s}' is not λ-,λ+")))?;
                positive_pair(a, b)
            })
            .collect::<Result<_, _>>()?
    };
    let st = strategy(cli);
    let mut body = Map::new();
    let mut pass = true;
    let (heine, csle) = match case {
        "heine" => (true, false),
        "csle" => (false, true),
        "all" => (true, true),
        other => return Err(CommandError::Usage(format!("unknown residual case '{other}' (heine, csle, all)"))),
    };
    if heine {
        let rep = heine_sweep(&lams, st);
        pass &= rep.pass();
        body.insert("heine".into(), report_json(&rep));
    }
    if csle {
        let rep = csle_sweep(&lams, 3, st);
        pass &= rep.pass();
        body.insert("csle".into(), report_json(&rep));
    }
    let inputs: Vec<Value> = lams.iter().map(|l| json!([out::rat(l.minus()), out::rat(l.plus())])).collect();
    body.insert("inputs".into(), json!({ "case": case, "lam": inputs }));
    Ok(finish("residuals", body, pass))
}

fn cmd_potential(cli: &Cli, seed: Option<&str>, lm: &str, lp: &str, fd: Option<&[String]>) -> CmdResult {
    let lam = positive_pair(lm, lp)?;
    let seed_spec = match seed {
        None => None,
        Some(s) => {
            let (t, m) = s.split_once(',').ok_or_else(|| CommandError::Usage(format!("seed '{s}' is not type,m")))?;
            let tag = SeedType::parse(t)?;
            let m: usize = m.trim().parse().map_err(|_| CommandError::Usage(format!("seed degree '{m}'")))?;
            Some(classify(tag.sigma(), tag.sigma_inf(), m, &lam)?)
        }
    };
    let spec = build_potential(&lam, seed_spec.as_ref())?;
    let (h, g) = potentials::hg_params(&lam);
    let analytic = spec.analytic_energies().unwrap_or_default();
    let mut pass = spec.vanishes_at_infinity();
    if spec.deformation.is_none() {
        pass &= potentials::liouville_identity_holds(&lam);
    }
    let mut body = object(json!({
        "inputs": { "lam_minus": out::rat(lam.minus()), "lam_plus": out::rat(lam.plus()), "seed": seed },
        "h": out::rat(&h),
        "g": out::rat(&g),
        "v_eta": { "numerator": out::poly(spec.v_eta.num()), "denominator": out::poly(spec.v_eta.den()) },
        "vanishes_at_infinity": spec.vanishes_at_infinity(),
        "analytic_energies": out::rats(&analytic),
        "diagnostics": spec.diagnostics,
    }));
    if let Some(d) = &spec.deformation {
        body.insert("seed_type".into(), Value::String(d.seed.type_tag.to_string()));
        body.insert("single_level".into(), Value::Bool(d.single_level));
    }
    if let Some(fd) = fd {
        let parse_f = |s: &String| s.parse::<f64>().map_err(|_| CommandError::Usage(format!("'{s}' is not a number")));
        let n: usize = fd[2].parse().map_err(|_| CommandError::Usage(format!("'{}' is not an interval count", fd[2])))?;
        let grid = FdGrid { r_min: parse_f(&fd[0])?, r_max: parse_f(&fd[1])?, n };
        let k = analytic.len().max(1);
        let s = fd_spectrum(&spec, grid, k)?;
        let tol = cli.tol_energy.unwrap_or(1e-4);
        let rel: Vec<f64> = s
            .extrapolated
            .iter()
            .zip(&analytic)
            .map(|(x, e)| potentials::relative_error(*x, to_f64(e)))
            .collect();
        let within: Vec<bool> = rel.iter().map(|&e| e <= tol).collect();
        pass &= within.iter().all(|&b| b);
        body.insert(
            "fd".into(),
            json!({
                "grid": { "r_min": out::float(grid.r_min), "r_max": out::float(grid.r_max), "n": grid.n },
                "coarse": out::floats(&s.coarse),
                "fine": out::floats(&s.fine),
                "extrapolated": out::floats(&s.extrapolated),
                "relative_error": out::floats(&rel),
                "within_tolerance": within,
                "tolerance": out::float(tol),
            }),
        );
    }
    let samples: Vec<(f64, f64)> = (1..=200).map(|k| 1.0 + 0.1 * k as f64).map(|eta| (eta, spec.eval_eta(eta))).collect();
    let mut o = finish("potential", body, pass);
    o.samples = Some(samples);
    Ok(o)
}
