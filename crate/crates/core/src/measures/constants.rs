//! Limit constants of Mahler measures, by quadrature of log-sine integrals.

use std::f64::consts::PI;
use std::sync::OnceLock;

use serde::Serialize;

use crate::rouche::{a_max, c_limit, minimum_gap_constant, opening_angle, KAPPA};

/// A computed value and a bound on its numerical error.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Bounded {
    pub value: f64,
    pub error: f64,
}

/// Romberg integration: trapezoid panels doubled until successive
/// extrapolants agree to `tol`. Returns the value and the last difference.
pub fn romberg(f: impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> Bounded {
    const LEVELS: usize = 24;
    let mut rows: Vec<Vec<f64>> = Vec::with_capacity(LEVELS);
    let h0 = b - a;
    rows.push(vec![0.5 * h0 * (f(a) + f(b))]);
    let mut best = Bounded {
        value: rows[0][0],
        error: f64::INFINITY,
    };
    for k in 1..LEVELS {
        let m = 1usize << (k - 1);
        let h = h0 / (2 * m) as f64;
        let mid: f64 = (0..m).map(|i| f(a + (2 * i + 1) as f64 * h)).sum();
        let mut row = vec![0.5 * rows[k - 1][0] + h * mid];
        for l in 1..=k {
            let p = 4f64.powi(l as i32);
            let v = row[l - 1] + (row[l - 1] - rows[k - 1][l - 1]) / (p - 1.0);
            row.push(v);
        }
        let err = (row[k] - rows[k - 1][k - 1]).abs();
        best = Bounded {
            value: row[k],
            error: err,
        };
        rows.push(row);
        if err < tol && k >= 4 {
            break;
        }
    }
    best
}

/// Trapezoid-only variant with a Steffensen (Aitken Δ²) estimate of the
/// limit from the last three panel refinements.
pub fn trapezoid_steffensen(f: impl Fn(f64) -> f64, a: f64, b: f64, levels: u32) -> Bounded {
    let mut t = Vec::new();
    let mut m = 1usize;
    let mut cur = 0.5 * (b - a) * (f(a) + f(b));
    t.push(cur);
    for _ in 0..levels {
        let h = (b - a) / (2 * m) as f64;
        let mid: f64 = (0..m).map(|i| f(a + (2 * i + 1) as f64 * h)).sum();
        cur = 0.5 * cur + h * mid;
        t.push(cur);
        m *= 2;
    }
    let k = t.len();
    if k < 3 {
        return Bounded {
            value: cur,
            error: f64::INFINITY,
        };
    }
    let (x0, x1, x2) = (t[k - 3], t[k - 2], t[k - 1]);
    let den = x2 - 2.0 * x1 + x0;
    let acc = if den.abs() > 0.0 { x2 - (x2 - x1).powi(2) / den } else { x2 };
    Bounded {
        value: acc,
        error: (acc - x2).abs(),
    }
}

/// `∫₀^b Log(2 sin(x/2)) dx` for `0 < b ≤ π`, splitting off `∫₀^b Log x`.
pub fn log_sine_integral(b: f64) -> Bounded {
    let smooth = |x: f64| {
        if x < 1e-4 {
            // Log(2 sin(x/2)/x) = −x²/24 − x⁴/2880 + …
            -x * x / 24.0 - x.powi(4) / 2880.0
        } else {
            (2.0 * (x / 2.0).sin() / x).ln()
        }
    };
    let r = romberg(smooth, 0.0, b, 1e-14);
    Bounded {
        value: b * b.ln() - b + r.value,
        error: r.error,
    }
}

/// `L(2, χ₃) = (ζ(2, 1/3) − ζ(2, 2/3))/9`.
pub fn l2_chi3() -> f64 {
    (hurwitz_zeta2(1.0 / 3.0) - hurwitz_zeta2(2.0 / 3.0)) / 9.0
}

/// `ζ(2, a)` by Euler–Maclaurin summation.
fn hurwitz_zeta2(a: f64) -> f64 {
    const N: usize = 30;
    // B_2, B_4, …, B_16.
    const B: [f64; 8] = [
        1.0 / 6.0,
        -1.0 / 30.0,
        1.0 / 42.0,
        -1.0 / 30.0,
        5.0 / 66.0,
        -691.0 / 2730.0,
        7.0 / 6.0,
        -3617.0 / 510.0,
    ];
    let head: f64 = (0..N).map(|k| (k as f64 + a).powi(-2)).sum();
    let x = N as f64 + a;
    // For s = 2 the j-th correction is B_{2j} x^{−2j−1}.
    let corr: f64 = B
        .iter()
        .enumerate()
        .map(|(j, b)| b * x.powi(-(2 * j as i32) - 3))
        .sum();
    head + 1.0 / x + 0.5 / (x * x) + corr
}

/// Every constant with its error bound.
#[derive(Clone, Debug, Serialize)]
pub struct Constants {
    /// `Λ = exp(−(1/π)∫₀^{π/3} Log(2 sin(x/2)) dx)`.
    pub lambda: Bounded,
    /// `Λ` from `exp((3√3/4π) L(2, χ₃))`.
    pub lambda_series: Bounded,
    pub lambda_r: Bounded,
    pub mu_r: Bounded,
    pub kappa: Bounded,
    pub a_max: Bounded,
    /// `S = 2 arcsin(κ/2)`.
    pub opening_angle: Bounded,
    pub c: Bounded,
    /// `c_lent = c − π/a_max`.
    pub c_lent: Bounded,
    /// `e^{−2c}/(1 − e^{−c})`.
    pub jump: Bounded,
    pub lambda_r_mu_r: Bounded,
    pub lambda_r_over_mu_r: Bounded,
    pub lambda_over_six: Bounded,
    /// `Λ_r μ_r S/(2π)`.
    pub dobrowolski_slope: Bounded,
    pub kappa_over_one_plus_kappa: Bounded,
}

fn log_mu_integrand(x: f64) -> f64 {
    let s = (x / 2.0).sin();
    if s < 1e-9 {
        // (8s + O(s²))/(8s) → 1.
        return 0.0;
    }
    let disc = (1.0 - 12.0 * s + 4.0 * s * s).max(0.0);
    ((1.0 + 2.0 * s - disc.sqrt()) / (8.0 * s)).ln()
}

/// `∫₀^S F(x) dx` for the `μ_r` integrand. The substitution
/// `x = S(1 − u²)` removes the square-root behaviour at `x = S`, where the
/// discriminant vanishes.
fn mu_integral() -> Bounded {
    let s = opening_angle();
    romberg(|u| 2.0 * s * u * log_mu_integrand(s * (1.0 - u * u)), 0.0, 1.0, 1e-14)
}

fn compute() -> Constants {
    let exact = |v: f64| Bounded { value: v, error: 4.0 * f64::EPSILON * v.abs() };
    let li = log_sine_integral(PI / 3.0);
    let lambda = (-li.value / PI).exp();
    let l2 = l2_chi3();
    let lambda_series = (3.0 * 3f64.sqrt() / (4.0 * PI) * l2).exp();
    let s = opening_angle();
    let lr_i = log_sine_integral(s);
    let lambda_r = (-lr_i.value / PI).exp();
    let mu_i = mu_integral();
    let mu_r = (-mu_i.value / PI).exp();
    let e_l = lambda * li.error / PI;
    let e_lr = lambda_r * lr_i.error / PI;
    let e_mu = mu_r * mu_i.error / PI;
    let am = a_max();
    let c = c_limit();
    Constants {
        lambda: Bounded { value: lambda, error: e_l },
        lambda_series: Bounded { value: lambda_series, error: 1e-14 },
        lambda_r: Bounded { value: lambda_r, error: e_lr },
        mu_r: Bounded { value: mu_r, error: e_mu },
        kappa: exact(KAPPA),
        a_max: Bounded { value: am, error: 1e-9 },
        opening_angle: exact(s),
        c: exact(c),
        c_lent: Bounded { value: c - PI / am, error: 1e-9 },
        jump: exact(minimum_gap_constant()),
        lambda_r_mu_r: Bounded { value: lambda_r * mu_r, error: e_lr * mu_r + e_mu * lambda_r },
        lambda_r_over_mu_r: Bounded {
            value: lambda_r / mu_r,
            error: e_lr / mu_r + e_mu * lambda_r / (mu_r * mu_r),
        },
        lambda_over_six: Bounded { value: lambda / 6.0, error: e_l / 6.0 },
        dobrowolski_slope: Bounded {
            value: lambda_r * mu_r * s / (2.0 * PI),
            error: (e_lr * mu_r + e_mu * lambda_r) * s / (2.0 * PI),
        },
        kappa_over_one_plus_kappa: exact(KAPPA / (1.0 + KAPPA)),
    }
}

/// The constants, computed once per process.
pub fn constants() -> &'static Constants {
    static CELL: OnceLock<Constants> = OnceLock::new();
    CELL.get_or_init(compute)
}

/// `Λ = 1.38135…`, the limit of `M(G_n)`.
pub fn lambda_constant() -> f64 {
    constants().lambda.value
}

pub fn lambda_r() -> f64 {
    constants().lambda_r.value
}

pub fn mu_r() -> f64 {
    constants().mu_r.value
}
