//! The indices `J_n`, `H_n`, the constant `c_n` and the refined radii
//! `π/a_{j,n}`.

use std::f64::consts::PI;

use serde::Serialize;

use super::kappa::{a_max, KAPPA};
use crate::error::{Error, Result};
use crate::trinomial::{roots, AsymptoticValue, SectorPlan, TrinomialRootSet};

/// Smallest degree for which `J_n` is defined.
pub const N1: usize = 195;
/// Smallest degree of the asymptotic regime of `H_n` and of the zero-free
/// region.
pub const N2: usize = 260;

fn need(n: usize, min: usize, what: &str) -> Result<()> {
    if n < min {
        return Err(Error::Precondition(format!(
            "{what} needs n ≥ {min} (the condition ensures existence), got n = {n}"
        )));
    }
    Ok(())
}

/// How to obtain `J_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum JnMode {
    /// Largest `j` with `|−1 + z_{j,n}|/|z_{j,n}| ≤ κ` on numeric roots.
    FromRoots,
    /// `⌊(n/π) arcsin(κ/2) + κ Log κ/(π√(4 − κ²))⌋`.
    Asymptotic,
}

/// `|−1 + z|/|z|`.
pub fn distance_ratio(z: num_complex::Complex64) -> f64 {
    (z - 1.0).norm() / z.norm()
}

/// `J_n` from a computed root set.
pub fn j_n_from(rs: &TrinomialRootSet) -> Result<usize> {
    need(rs.n, N1, "J_n")?;
    let mut last = None;
    for j in 1..=rs.n / 6 {
        if distance_ratio(rs.z(j)?) <= KAPPA {
            last = Some(j);
        }
    }
    last.ok_or_else(|| Error::Certification(format!("no root of G_{} satisfies the κ bound", rs.n)))
}

/// `J_n` by the asymptotic formula.
pub fn j_n_asymptotic(n: usize) -> Result<usize> {
    need(n, N1, "J_n")?;
    let k = KAPPA;
    let v = n as f64 / PI * (k / 2.0).asin() + k * k.ln() / (PI * (4.0 - k * k).sqrt());
    Ok(v.floor() as usize)
}

/// `J_n` in the requested mode.
pub fn j_n(n: usize, mode: JnMode) -> Result<usize> {
    match mode {
        JnMode::FromRoots => {
            need(n, N1, "J_n")?;
            j_n_from(&roots(n, 53)?)
        }
        JnMode::Asymptotic => j_n_asymptotic(n),
    }
}

/// `H_n := ⌊(n/2π)(2 arcsin(κ/2) − κ²/(1 − κ)) − 1⌋`.
///
/// Meaningful for `n ≥ 260`; it evaluates for `n ≥ 195`.
pub fn h_n(n: usize) -> Result<usize> {
    need(n, N1, "H_n")?;
    let k = KAPPA;
    let v = n as f64 / (2.0 * PI) * (2.0 * (k / 2.0).asin() - k * k / (1.0 - k)) - 1.0;
    Ok(v.floor() as usize)
}

/// `(1 − c/n)^{2n} / ((1 − c/n) − (1 − c/n)^n)`.
pub fn minimum_gap(n: usize, c_n: f64) -> f64 {
    let r = 1.0 - c_n / n as f64;
    let rn = r.powi(n as i32);
    rn * rn / (r - rn)
}

/// `H_n` by its definition: the largest `j ≥ ⌈v_n⌉` with
/// `arg z_{J_n,n} − arg z_{j,n} ≥ (1 − c_n/n)^{2n}/((1 − c_n/n) − (1 − c_n/n)^n)`.
pub fn h_n_from(rs: &TrinomialRootSet) -> Result<usize> {
    need(rs.n, N1, "H_n")?;
    let jn = j_n_from(rs)?;
    let c = c_n_from(rs)?.from_roots;
    let gap = minimum_gap(rs.n, c);
    let lo = SectorPlan::new(rs.n)?.v_n.ceil() as usize;
    let aj = rs.z(jn)?.arg();
    let mut best = None;
    for j in lo..=jn {
        if aj - rs.z(j)?.arg() >= gap {
            best = Some(j);
        }
    }
    best.ok_or_else(|| Error::Certification(format!("no H_n candidate for n = {}", rs.n)))
}

/// `c_n` from `|z_{J_n,n}| = 1 − c_n/n`, and its development.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct CnValue {
    pub n: usize,
    pub from_roots: f64,
    /// `−Log κ (1 + 1/n)` with terminant `(LogLog n/Log n)²/n`.
    pub asymptotic: AsymptoticValue,
}

pub fn c_n_from(rs: &TrinomialRootSet) -> Result<CnValue> {
    let jn = j_n_from(rs)?;
    let n = rs.n;
    let nf = n as f64;
    let l = nf.ln();
    Ok(CnValue {
        n,
        from_roots: nf * (1.0 - rs.z(jn)?.norm()),
        asymptotic: AsymptoticValue::new(-KAPPA.ln() * (1.0 + 1.0 / nf), (l.ln() / l).powi(2) / nf),
    })
}

pub fn c_n(n: usize) -> Result<CnValue> {
    need(n, N1, "c_n")?;
    c_n_from(&roots(n, 53)?)
}

/// `B_{j,n} = 2 sin(πj/n)(1 − Log(2 sin(πj/n))/n)`.
pub fn b_jn(n: usize, j: usize) -> f64 {
    let s = 2.0 * (PI * j as f64 / n as f64).sin();
    s * (1.0 - s.ln() / n as f64)
}

/// The smaller root `W = e^{D}` of `2B W² − (B + 1) W + 1 = 0`.
pub fn refined_w(b: f64) -> Result<f64> {
    let disc = 1.0 - 6.0 * b + b * b;
    if !(b > 0.0) || disc < 0.0 {
        return Err(Error::OutOfRange(format!(
            "B = {b} exceeds 3 − 2√2: the refined radius exists only up to J_n"
        )));
    }
    Ok((1.0 + b - disc.sqrt()) / (4.0 * b))
}

/// `π/a_{j,n}` with its terminant, for `⌈v_n⌉ ≤ j ≤ J_n`.
///
/// At `j = J_n`, `a_{J_n,n} = a_max` by definition; the radius of the
/// refined disk is `|z_{j,n}| · (π/a_{j,n}) / n`.
pub fn refined_radius(rs: &TrinomialRootSet, j: usize) -> Result<AsymptoticValue> {
    let n = rs.n;
    let jn = j_n_from(rs)?;
    let lo = SectorPlan::new(n)?.v_n.ceil() as usize;
    if j < lo || j > jn {
        return Err(Error::OutOfRange(format!(
            "refined radii are defined for ⌈v_n⌉ = {lo} ≤ j ≤ J_n = {jn}, got j = {j}"
        )));
    }
    if j == jn {
        return Ok(AsymptoticValue::new(PI / a_max(), 0.0));
    }
    let b = b_jn(n, j);
    let d = refined_w(b)?.ln();
    let nf = n as f64;
    let l = nf.ln();
    let ratio = (-3.0 + (-d).exp() + 2.0 * d.exp()) / (4.0 - (-d).exp() - 2.0 * d.exp());
    let tl = (2.0 / nf) / b * ratio * (l.ln() / l).powi(2);
    Ok(AsymptoticValue::new(d, tl.abs()))
}

/// The `j`-independent tail majorant `(1/(7π)) (LogLog n)²/(Log n)³`.
pub fn refined_radius_majorant(n: usize) -> f64 {
    let l = (n as f64).ln();
    l.ln().powi(2) / l.powi(3) / (7.0 * PI)
}
