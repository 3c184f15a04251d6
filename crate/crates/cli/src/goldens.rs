//! Deterministic table of reference quantities with their target values.

use serde_json::{json, Value};

use lenticulus_core::betashift::{dynamical_degree, parry_polynomial, renyi_expansion};
use lenticulus_core::equidist::discrepancy;
use lenticulus_core::measures::{constants, dobrowolski_formula, schinzel_c_tilde};
use lenticulus_core::rouche::{h_n, j_n, JnMode};
use lenticulus_core::trinomial::{roots, theta_n_f64};
use lenticulus_core::{algnum::largest_real_root_above_one, IntPolynomial};

use crate::config::RunConfig;
use crate::output::{num, Format, Report, Table};
use crate::{CliError, Outcome};

struct Row {
    group: &'static str,
    quantity: String,
    value: f64,
    expected: f64,
    tolerance: f64,
}

impl Row {
    fn passes(&self) -> bool {
        (self.value - self.expected).abs() <= self.tolerance
    }
}

fn row(group: &'static str, quantity: impl Into<String>, value: f64, expected: f64, tolerance: f64) -> Row {
    Row {
        group,
        quantity: quantity.into(),
        value,
        expected,
        tolerance,
    }
}

fn beta_rows(out: &mut Vec<Row>, name: &str, coeffs: &[i64], degree: f64, dyg: f64, horizon: usize) -> Result<(), CliError> {
    let p = IntPolynomial::from_i64(coeffs);
    let beta = largest_real_root_above_one(&p).expect("Salem polynomial has a root above 1");
    let exp = renyi_expansion(&beta, horizon)?;
    let parry = parry_polynomial(&exp)?;
    out.push(row("expansion", format!("{name} Parry degree"), parry.degree() as f64, degree, 0.0));
    out.push(row("expansion", format!("{name} dyg"), dynamical_degree(&beta)? as f64, dyg, 0.0));
    Ok(())
}

pub fn goldens(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let c = constants();
    let mut rows = vec![
        row("constants", "kappa", c.kappa.value, 0.171573, 1e-5),
        row("constants", "a_max", c.a_max.value, 5.87433, 1e-3),
        row("constants", "S", c.opening_angle.value, 0.171784, 1e-5),
        row("constants", "Lambda", c.lambda.value, 1.38135, 1e-4),
        row("constants", "Lambda_r", c.lambda_r.value, 1.16302, 1e-4),
        row("constants", "mu_r", c.mu_r.value, 0.992337, 1e-5),
        row("constants", "Lambda_r mu_r", c.lambda_r_mu_r.value, 1.15411, 1e-4),
        row("constants", "Lambda_r / mu_r", c.lambda_r_over_mu_r.value, 1.172, 1e-3),
        row("constants", "c", c.c.value, 1.76274, 1e-4),
        row("constants", "exp(-2c)/(1-exp(-c))", c.jump.value, 0.0355344, 1e-6),
        row("constants", "Lambda/6", c.lambda_over_six.value, 0.230225, 1e-5),
        row("constants", "kappa/(1+kappa)", c.kappa_over_one_plus_kappa.value, 0.146447, 1e-6),
    ];
    beta_rows(&mut rows, "Lehmer", &[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1], 75.0, 12.0, cfg.horizon)?;
    beta_rows(&mut rows, "Salem 1.2806", &[1, 0, 0, -1, -1, -1, 0, 0, 1], 20.0, 7.0, cfg.horizon)?;
    for (n, v, tol) in [(2, 1.618034, 1e-6), (5, 1.324718, 1e-6), (31, 1.08544, 1e-4), (259, 1.016126, 1e-5)] {
        rows.push(row("trinomial", format!("1/theta_{n}"), 1.0 / theta_n_f64(n), v, tol));
    }
    for n in [12usize, 71, 260] {
        let rs = roots(n, 53)?;
        let want = 1 + 2 * (n / 6);
        rows.push(row("trinomial", format!("lenticular count n={n}"), rs.lenticular_count() as f64, want as f64, 0.0));
    }
    rows.push(row("rouche", "J_615", j_n(615, JnMode::FromRoots)? as f64, 17.0, 0.0));
    rows.push(row("rouche", "H_615", h_n(615)? as f64, 12.0, 0.0));
    let l32 = 32f64.ln();
    rows.push(row("rouche", "(Log 32 - LogLog 32)/32", (l32 - l32.ln()) / 32.0, 0.0694628, 1e-6));
    rows.push(row("minorants", "dobrowolski n=259", dobrowolski_formula(259.0), 1.14843, 1e-4));
    rows.push(row("minorants", "c_tilde", schinzel_c_tilde(), 0.0375522, 1e-6));
    let mut sups = Vec::new();
    for n in [50usize, 200, 800] {
        let d = discrepancy(&IntPolynomial::trinomial(n), 256)?;
        sups.push(d.sup_disc);
        rows.push(Row {
            group: "equidist",
            quantity: format!("sup_disc G_{n}"),
            value: d.sup_disc,
            expected: f64::NAN,
            tolerance: f64::NAN,
        });
    }
    let decreasing = sups.windows(2).all(|w| w[1] < w[0]);
    rows.push(row("equidist", "sup_disc decreasing", f64::from(u8::from(decreasing)), 1.0, 0.0));

    let mut table = Table::new(&["group", "quantity", "value", "expected", "tolerance", "pass"]);
    let mut json_rows: Vec<Value> = Vec::new();
    for r in &rows {
        let reported = !r.expected.is_nan();
        let pass = if reported { r.passes().to_string() } else { String::new() };
        table.push(vec![
            r.group.into(),
            r.quantity.clone(),
            num(r.value),
            if reported { num(r.expected) } else { String::new() },
            if reported { num(r.tolerance) } else { String::new() },
            pass,
        ]);
        json_rows.push(json!({
            "group": r.group,
            "quantity": r.quantity,
            "value": r.value,
            "expected": reported.then_some(r.expected),
            "tolerance": reported.then_some(r.tolerance),
            "pass": reported.then(|| r.passes()),
        }));
    }
    let body = json!({ "rows": json_rows });
    Ok(Outcome::ok(Report::new("goldens", body, Some(table)), Format::Csv))
}
