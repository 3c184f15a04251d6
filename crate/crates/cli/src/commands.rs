use std::path::PathBuf;

use clap::Args;
use rayon::prelude::*;
use serde_json::{json, Value};

use lenticulus_core::algnum::{largest_real_root_above_one, RatInterval};
use lenticulus_core::betashift::{
    dynamical_degree, dynamical_degree_f64, parry_polynomial, renyi_expansion,
    renyi_expansion_float, BetaExpansion, ExpansionStatus, GOLDEN_MEAN,
};
use lenticulus_core::equidist::{discrepancy, orbit_convergence_scan, Discrepancy};
use lenticulus_core::measures::{
    abc_factorize, constants as limit_constants, dobrowolski_formula, lenticular_measure, mahler as measure,
    mahler_bounded, salem_bound_check, schinzel_bound, schinzel_c_tilde, Bounded,
};
use lenticulus_core::rewrite::{convolution_residuals, growth_rate, u_beta_coeffs};
use lenticulus_core::rouche::{c_n, find_lenticulus, h_n, LenticulusOptions, ParryUpper};
use lenticulus_core::trinomial::{
    irreducible_structure, mahler_gn_from, modulus_expansion, roots, zjn_expansion, ModulusForm,
};
use lenticulus_core::{AlgebraicNumber, Dyadic, Error, IntPolynomial};

use crate::config::RunConfig;
use crate::output::{num, Format, Report, Table};
use crate::{CliError, Outcome};

type CmdResult = Result<Outcome, CliError>;

#[derive(Args, Debug)]
pub struct PolyArgs {
    /// Ascending coefficients (`-1,1,0,1`) or monomials (`x^3+x-1`).
    #[arg(long)]
    pub poly: String,
}

/// β given as a root of a polynomial, or as a float.
#[derive(Args, Debug)]
pub struct BaseArgs {
    /// Polynomial with β as a root.
    #[arg(long, conflicts_with = "value", required_unless_present = "value")]
    pub poly: Option<String>,
    /// Isolating interval `lo,hi` for β; by default the largest real root above 1.
    #[arg(long, requires = "poly")]
    pub root_in: Option<String>,
    /// β as a float; digits are then uncertified.
    #[arg(long)]
    pub value: Option<f64>,
}

#[derive(Args, Debug)]
pub struct ExpandArgs {
    #[command(flatten)]
    pub base: BaseArgs,
    /// Number of leading digits to print.
    #[arg(long, default_value_t = 200)]
    pub prefix: usize,
}

#[derive(Args, Debug)]
pub struct TrinomialArgs {
    #[arg(long)]
    pub n: usize,
}

#[derive(Args, Debug)]
pub struct LenticulusArgs {
    /// Minimal polynomial of β.
    #[arg(long, conflicts_with_all = ["n", "exponents"])]
    pub poly: Option<String>,
    /// Isolating interval `lo,hi` for β; by default the largest real root above 1.
    #[arg(long, requires = "poly")]
    pub root_in: Option<String>,
    /// Use f = −1 + z + z^n.
    #[arg(long, conflicts_with = "exponents")]
    pub n: Option<usize>,
    /// Exponents `1,n,m_1,…` of a finite Parry Upper function.
    #[arg(long)]
    pub exponents: Option<String>,
}

#[derive(Args, Debug)]
pub struct FractureArgs {
    /// `P_β`, vanishing at `1/β`.
    #[arg(long)]
    pub poly: String,
    /// Isolating interval for `β` as a root of the reciprocal of `P`.
    #[arg(long)]
    pub root_in: Option<String>,
    /// Number of coefficients `b_r`.
    #[arg(long, default_value_t = 200)]
    pub order: usize,
}

#[derive(Args, Debug)]
pub struct FileArgs {
    /// One polynomial per line; blank lines and `#` comments are skipped.
    #[arg(long)]
    pub file: PathBuf,
}

#[derive(Args, Debug)]
pub struct EquidistArgs {
    #[arg(long, required_unless_present = "scan")]
    pub file: Option<PathBuf>,
    /// Comma-separated n for a scan over the orbits of θ_n⁻¹.
    #[arg(long, conflicts_with = "file")]
    pub scan: Option<String>,
    #[arg(long, default_value_t = 256)]
    pub grid: usize,
}

fn parse_poly(s: &str) -> Result<IntPolynomial, Error> {
    s.parse()
}

fn parse_list(s: &str) -> Result<Vec<usize>, Error> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad integer {t:?} in list")))
        })
        .collect()
}

fn bounded(b: &Bounded) -> Value {
    json!({ "value": b.value, "error": b.error })
}

fn algebraic_root(poly: &IntPolynomial, root_in: Option<&str>) -> Result<AlgebraicNumber, Error> {
    match root_in {
        Some(r) => {
            let iv: RatInterval = r.parse()?;
            AlgebraicNumber::new(poly, iv.lo, iv.hi)
        }
        None => largest_real_root_above_one(poly)
            .ok_or_else(|| Error::Precondition(format!("{poly} has no real root above 1"))),
    }
}

enum Base {
    Exact(AlgebraicNumber),
    Float(f64),
}

fn base(args: &BaseArgs) -> Result<Base, Error> {
    match (&args.poly, args.value) {
        (Some(p), _) => Ok(Base::Exact(algebraic_root(&parse_poly(p)?, args.root_in.as_deref())?)),
        (None, Some(v)) => Ok(Base::Float(v)),
        (None, None) => Err(Error::Precondition("give --poly or --value".into())),
    }
}

fn decimal(a: &AlgebraicNumber, bits: u32) -> String {
    a.refine(bits).0.to_decimal(30)
}

fn status_json(exp: &BetaExpansion) -> Value {
    match exp.status {
        ExpansionStatus::Finite(n) => json!({ "kind": "finite", "length": n }),
        ExpansionStatus::EventuallyPeriodic { preperiod, period } => {
            json!({ "kind": "eventually_periodic", "preperiod": preperiod, "period": period })
        }
        ExpansionStatus::HorizonExceeded(h) => json!({ "kind": "horizon_exceeded", "horizon": h }),
    }
}

pub fn expand(cfg: &RunConfig, args: &ExpandArgs) -> CmdResult {
    let bits = cfg.precision_bits;
    let (exp, beta_str, beta_err, dyg) = match base(&args.base)? {
        Base::Exact(b) => {
            let exp = renyi_expansion(&b, cfg.horizon)?;
            let dyg = if b.to_f64() <= GOLDEN_MEAN { dynamical_degree(&b).ok() } else { None };
            (exp, decimal(&b, bits), 2f64.powi(-(bits as i32)), dyg)
        }
        Base::Float(v) => {
            let d = Dyadic::from_f64(v).ok_or_else(|| Error::Precondition("β must be finite".into()))?;
            let exp = renyi_expansion_float(&d, bits, cfg.horizon)?;
            (exp, num(v), 0.0, dynamical_degree_f64(v).ok())
        }
    };
    let (preperiod, period) = match exp.status {
        ExpansionStatus::Finite(n) => (Some(n), Some(0)),
        ExpansionStatus::EventuallyPeriodic { preperiod, period } => (Some(preperiod), Some(period)),
        ExpansionStatus::HorizonExceeded(_) => (None, None),
    };
    let parry = if exp.is_parry() { parry_polynomial(&exp).ok() } else { None };
    let digits: Vec<u32> = exp.computed_digits().into_iter().take(args.prefix).collect();
    let body = json!({
        "beta": beta_str,
        "beta_error": beta_err,
        "certified": exp.is_certified(),
        "word": exp.word.to_string(),
        "digits_prefix": digits,
        "status": status_json(&exp),
        "preperiod": preperiod,
        "period": period,
        "parry_polynomial": parry.as_ref().map(|p| serde_json::to_value(&p.poly).expect("serializable")),
        "parry_degree": parry.as_ref().map(|p| p.degree()),
        "dyg": dyg,
    });
    Ok(Outcome::ok(Report::new("expand", body, None), Format::Json))
}

pub fn dyg(cfg: &RunConfig, args: &BaseArgs) -> CmdResult {
    let body = match base(args)? {
        Base::Exact(b) => json!({
            "beta": decimal(&b, cfg.precision_bits),
            "mode": "exact",
            "dyg": dynamical_degree(&b)?,
        }),
        Base::Float(v) => json!({ "beta": num(v), "mode": "float", "dyg": dynamical_degree_f64(v)? }),
    };
    Ok(Outcome::ok(Report::new("dyg", body, None), Format::Json))
}

pub fn trinomial(cfg: &RunConfig, args: &TrinomialArgs) -> CmdResult {
    let n = args.n;
    let rs = roots(n, cfg.precision_bits)?;
    let mut table = Table::new(&["n", "j", "re", "im", "modulus", "D_modulus", "tl_bound", "regime"]);
    let mut rows = Vec::new();
    for j in 1..=rs.upper_count() {
        let z = rs.z(j)?;
        let d = modulus_expansion(n, j, ModulusForm::Order1).ok();
        let regime = zjn_expansion(n, j).ok().map(|e| {
            let mut s = e.value.regime.name().to_string();
            if e.in_transition() {
                s.push_str("+transition");
            }
            s
        });
        table.push(vec![
            n.to_string(),
            j.to_string(),
            num(z.re),
            num(z.im),
            num(z.norm()),
            d.map(|d| num(d.development)).unwrap_or_default(),
            d.map(|d| num(d.terminant_bound)).unwrap_or_default(),
            regime.clone().unwrap_or_default(),
        ]);
        rows.push(json!({
            "j": j, "re": z.re, "im": z.im, "modulus": z.norm(),
            "D_modulus": d.map(|d| d.development),
            "tl_bound": d.map(|d| d.terminant_bound),
            "regime": regime,
        }));
    }
    let m = mahler_gn_from(&rs);
    let body = json!({
        "n": n,
        "theta": decimal(&rs.theta, cfg.precision_bits),
        "theta_error": 2f64.powi(-(cfg.precision_bits as i32)),
        "structure": serde_json::to_value(irreducible_structure(n)?).expect("serializable"),
        "lenticular_count": rs.lenticular_count(),
        "mahler": m.exact,
        "mahler_approximant": m.approximant,
        "roots": rows,
    });
    Ok(Outcome::ok(Report::new("trinomial", body, Some(table)), Format::Csv))
}

pub fn lenticulus(cfg: &RunConfig, args: &LenticulusArgs) -> CmdResult {
    let (f, n) = if let Some(n) = args.n {
        (ParryUpper::trinomial(n), n)
    } else {
        let mut f = if let Some(e) = &args.exponents {
            ParryUpper::from_exponents(parse_list(e)?)?
        } else if let Some(p) = &args.poly {
            let beta = algebraic_root(&parse_poly(p)?, args.root_in.as_deref())?;
            ParryUpper::from_expansion(&renyi_expansion(&beta, cfg.horizon)?)?
        } else {
            return Err(Error::Precondition("give --poly, --n or --exponents".into()).into());
        };
        let n = f.dyg()?;
        (f, n)
    };
    let opts = LenticulusOptions {
        unsafe_small_n: cfg.unsafe_small_n,
    };
    let lent = find_lenticulus(&f, n, cfg.precision_bits, opts)?;
    let zeros: Vec<Value> = lent
        .zeros
        .iter()
        .map(|z| {
            json!({
                "j": z.j,
                "re": z.omega.re,
                "im": z.omega.im,
                "residual": z.residual,
                "certified": z.disk.certified,
                "margin": z.disk.margin,
            })
        })
        .collect();
    let failures: Vec<Value> = lent
        .failures
        .iter()
        .map(|f| json!({ "j": f.j, "reason": f.reason }))
        .collect();
    let cn = c_n(n).ok();
    let body = json!({
        "n": n,
        "beta": lent.beta,
        "J_n": lent.j_n,
        "H_n": h_n(n).ok(),
        "c_n": cn.as_ref().map(|c| c.from_roots),
        "c_n_asymptotic": cn.as_ref().map(|c| json!({
            "value": c.asymptotic.development,
            "error": c.asymptotic.terminant_bound,
        })),
        "size": lent.size(),
        "lenticular_measure": lenticular_measure(&lent).ok(),
        "zeros": zeros,
        "failures": failures,
        "notes": lent.notes,
    });
    let mut table = Table::new(&["j", "re", "im", "residual", "certified"]);
    for z in &lent.zeros {
        table.push(vec![
            z.j.to_string(),
            num(z.omega.re),
            num(z.omega.im),
            num(z.residual),
            z.disk.certified.to_string(),
        ]);
    }
    // The real zero 1/β needs no disk; only the complex ones are certified.
    let uncertified = lent.complex_zeros().filter(|z| !z.disk.certified).count();
    let problem = if !lent.failures.is_empty() || uncertified > 0 {
        Some(format!(
            "{} detection failures, {} uncertified disks",
            lent.failures.len(),
            uncertified
        ))
    } else {
        None
    };
    Ok(Outcome {
        report: Report::new("lenticulus", body, Some(table)),
        default_format: Format::Json,
        uncertified: problem,
    })
}

pub fn mahler(cfg: &RunConfig, args: &PolyArgs) -> CmdResult {
    let p = parse_poly(&args.poly)?;
    let r = measure(&p)?;
    let m = mahler_bounded(&p, cfg.precision_bits)?;
    let abc = abc_factorize(&p).ok().map(|f| {
        json!({ "a": f.a.to_string(), "b": f.b.to_string(), "c": f.c.to_string() })
    });
    let body = json!({
        "poly": p.to_string(),
        "degree": p.deg(),
        "mahler": bounded(&m),
        "house": r.house,
        "weil_height": r.weil_height,
        "class": serde_json::to_value(r.class).expect("serializable"),
        "abc": abc,
    });
    Ok(Outcome::ok(Report::new("mahler", body, None), Format::Json))
}

pub fn fracture(cfg: &RunConfig, args: &FractureArgs) -> CmdResult {
    let p = parse_poly(&args.poly)?;
    let mut rec = p.reciprocal();
    if rec.leading() < 0.into() {
        rec = -rec;
    }
    let beta = algebraic_root(&rec, args.root_in.as_deref())?;
    let exp = renyi_expansion(&beta, cfg.horizon)?;
    if !exp.is_parry() {
        return Err(Error::Precondition("β is not a Parry number within the horizon".into()).into());
    }
    let u = u_beta_coeffs(&p, &exp.word, args.order)?;
    let b = u.known();
    let res = convolution_residuals(&p, &exp.word, b, args.order)?;
    let mut table = Table::new(&["r", "t_r", "b_r", "p_r", "residual"]);
    for (r, d) in res.iter().enumerate() {
        let t = if r == 0 { "-1".to_string() } else { exp.word.t(r).unwrap_or(0).to_string() };
        table.push(vec![r.to_string(), t, b[r].to_string(), p.coeff(r).to_string(), d.to_string()]);
    }
    let body = json!({
        "poly": p.to_string(),
        "beta": decimal(&beta, cfg.precision_bits),
        "word": exp.word.to_string(),
        "order": args.order,
        "growth_rate": growth_rate(b, args.order / 2, args.order),
        "max_abs_residual": res.iter().map(|d| d.magnitude().clone()).max().map(|m| m.to_string()),
    });
    Ok(Outcome::ok(Report::new("fracture", body, Some(table)), Format::Csv))
}

pub fn constants(cfg: &RunConfig) -> Outcome {
    let c = limit_constants();
    let named: [(&str, &Bounded); 15] = [
        ("Lambda", &c.lambda),
        ("Lambda_series", &c.lambda_series),
        ("Lambda_r", &c.lambda_r),
        ("mu_r", &c.mu_r),
        ("kappa", &c.kappa),
        ("a_max", &c.a_max),
        ("S", &c.opening_angle),
        ("c", &c.c),
        ("c_lent", &c.c_lent),
        ("jump", &c.jump),
        ("Lambda_r_mu_r", &c.lambda_r_mu_r),
        ("Lambda_r_over_mu_r", &c.lambda_r_over_mu_r),
        ("Lambda_over_6", &c.lambda_over_six),
        ("dobrowolski_slope", &c.dobrowolski_slope),
        ("kappa_over_1_plus_kappa", &c.kappa_over_one_plus_kappa),
    ];
    let mut body = serde_json::Map::new();
    let mut table = Table::new(&["name", "value", "error"]);
    for (k, b) in named {
        body.insert(k.into(), bounded(b));
        table.push(vec![k.into(), num(b.value), num(b.error)]);
    }
    let eta = cfg.eta;
    let extra = [
        ("dobrowolski_formula_eta", dobrowolski_formula(eta as f64)),
        ("schinzel_c_tilde", schinzel_c_tilde()),
    ];
    for (k, v) in extra {
        let b = Bounded { value: v, error: 8.0 * f64::EPSILON * v.abs() };
        body.insert(k.into(), bounded(&b));
        table.push(vec![k.into(), num(b.value), num(b.error)]);
    }
    if let Ok(v) = schinzel_bound(1, eta) {
        let b = Bounded { value: v, error: 8.0 * f64::EPSILON * v };
        body.insert("schinzel_bound_deg1".into(), bounded(&b));
        table.push(vec!["schinzel_bound_deg1".into(), num(b.value), num(b.error)]);
    }
    body.insert("eta".into(), json!(eta));
    Outcome::ok(Report::new("constants", Value::Object(body), Some(table)), Format::Json)
}

fn read_polys(path: &PathBuf) -> Result<Vec<(String, IntPolynomial)>, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let mut out = Vec::new();
    for line in text.lines() {
        let t = line.split('#').next().unwrap_or("").trim();
        if t.is_empty() {
            continue;
        }
        out.push((t.to_string(), parse_poly(t)?));
    }
    Ok(out)
}

pub fn salem_scan(_cfg: &RunConfig, args: &FileArgs) -> CmdResult {
    let polys = read_polys(&args.file)?;
    let results: Vec<_> = polys.par_iter().map(|(_, p)| salem_bound_check(p)).collect();
    let mut table = Table::new(&["poly", "beta", "dyg", "threshold", "passes", "error"]);
    let mut rows = Vec::new();
    for ((src, _), r) in polys.iter().zip(results) {
        match r {
            Ok(c) => {
                table.push(vec![
                    src.clone(),
                    num(c.beta),
                    c.dyg.to_string(),
                    num(c.threshold),
                    c.passes.to_string(),
                    String::new(),
                ]);
                rows.push(json!({ "poly": src, "check": serde_json::to_value(c).expect("serializable") }));
            }
            Err(e) => {
                table.push(vec![src.clone(), String::new(), String::new(), String::new(), String::new(), e.to_string()]);
                rows.push(json!({ "poly": src, "error": e.to_string() }));
            }
        }
    }
    Ok(Outcome::ok(Report::new("salem-scan", json!({ "results": rows }), Some(table)), Format::Json))
}

fn disc_cells(d: &Discrepancy) -> Vec<String> {
    vec![d.m.to_string(), num(d.eps), num(d.sigma), num(d.sup_disc), num(d.ratio)]
}

pub fn equidist(_cfg: &RunConfig, args: &EquidistArgs) -> CmdResult {
    if let Some(s) = &args.scan {
        let rows = orbit_convergence_scan(&parse_list(s)?, args.grid)?;
        let mut table = Table::new(&["n", "house", "m", "eps", "sigma", "sup_disc", "ratio"]);
        for r in &rows {
            let mut cells = vec![r.n.to_string(), num(r.house)];
            cells.extend(disc_cells(&r.discrepancy));
            table.push(cells);
        }
        let body = json!({ "grid": args.grid, "rows": serde_json::to_value(&rows).expect("serializable") });
        return Ok(Outcome::ok(Report::new("equidist", body, Some(table)), Format::Csv));
    }
    let path = args.file.as_ref().expect("clap requires --file or --scan");
    let polys = read_polys(path)?;
    let results = polys
        .par_iter()
        .map(|(_, p)| discrepancy(p, args.grid))
        .collect::<Result<Vec<_>, Error>>()?;
    let mut table = Table::new(&["poly", "m", "eps", "sigma", "sup_disc", "ratio"]);
    let mut rows = Vec::new();
    for ((src, _), d) in polys.iter().zip(&results) {
        let mut cells = vec![src.clone()];
        cells.extend(disc_cells(d));
        table.push(cells);
        rows.push(json!({ "poly": src, "discrepancy": serde_json::to_value(d).expect("serializable") }));
    }
    let body = json!({ "grid": args.grid, "rows": rows });
    Ok(Outcome::ok(Report::new("equidist", body, Some(table)), Format::Csv))
}
