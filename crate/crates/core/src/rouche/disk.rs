//! Rouché circles around the roots of `G_n` and their numeric certificates.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use serde::Serialize;

use super::kappa::a_max;
use crate::error::{Error, Result};

/// What a disk is used for.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub enum DiskKind {
    /// Real disk around `θ_n` of radius `t_{0,n}/n`.
    Real,
    /// Around `z_{1,n}` with radius `π|z_{1,n}|/(n a_max)`, for `n ≥ 32`.
    First,
    /// Around a bump-sector root, `j ≤ ⌊v_n⌋`.
    Bump,
    /// Around a main-sector root.
    Main,
    /// Guard disk of the zero-free region, radius `π|z|/(n s_{j,n})`.
    Guard(f64),
}

/// A circle `|z − center| = radius` and the outcome of its certificate.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RoucheDisk {
    pub j: usize,
    pub center: Complex64,
    pub radius: f64,
    pub kind: DiskKind,
    pub certified: bool,
    /// Lower bound of `|G_n(z)| − |z|^{2n−1}/(1 − |z|^{n−1})` on the circle.
    pub margin: f64,
    /// Circle point with the smallest sampled margin when not certified.
    pub violation: Option<Complex64>,
}

impl RoucheDisk {
    pub fn new(j: usize, center: Complex64, radius: f64, kind: DiskKind) -> Self {
        RoucheDisk {
            j,
            center,
            radius,
            kind,
            certified: false,
            margin: f64::NAN,
            violation: None,
        }
    }

    /// The disk `D(z, π|z|/(n a))`.
    pub fn around(j: usize, z: Complex64, n: usize, a: f64, kind: DiskKind) -> Self {
        Self::new(j, z, PI * z.norm() / (n as f64 * a), kind)
    }

    /// The lenticular disk `D(z_{j,n}, π|z_{j,n}|/(n a_max))`.
    pub fn lenticular(j: usize, z: Complex64, n: usize, kind: DiskKind) -> Self {
        Self::around(j, z, n, a_max(), kind)
    }

    pub fn contains(&self, z: Complex64) -> bool {
        (z - self.center).norm() < self.radius
    }
}

/// `|z|^{2n−1}/(1 − |z|^{n−1})`, the bound on `|f − G_n|` for a Parry Upper
/// function of dynamical degree `n`.
pub fn rouche_lhs(r: f64, n: usize) -> f64 {
    let rn1 = r.powi(n as i32 - 1);
    r.powi(2 * n as i32 - 1) / (1.0 - rn1)
}

fn g_n(z: Complex64, n: usize) -> Complex64 {
    z.powi(n as i32) + z - 1.0
}

const MIN_SAMPLES: usize = 256;
const MAX_SAMPLES: usize = 1 << 18;

/// Certifies `|z|^{2n−1}/(1 − |z|^{n−1}) < |G_n(z)|` on the circle of `disk`.
///
/// The circle is sampled at `N ≥ 256` equally spaced points. Between two
/// samples the margin can drop by at most `L·h/2`, where `h = 2π/N` and `L`
/// bounds its derivative in the angle through `|G_n′| ≤ 1 + nR^{n−1}` and the
/// derivative of the left side at `R = |center| + radius`. `N` is doubled
/// until the bound certifies or the sampled margin is negative.
pub fn rouche_certify(disk: &RoucheDisk, n: usize) -> Result<RoucheDisk> {
    let r_max = disk.center.norm() + disk.radius;
    if !(r_max < 1.0) {
        return Err(Error::Precondition(format!(
            "Rouché disk must lie inside |z| < 1 (|center| + radius = {r_max})"
        )));
    }
    let nf = n as f64;
    let dg = 1.0 + nf * r_max.powi(n as i32 - 1);
    let rn1 = r_max.powi(n as i32 - 1);
    let dlhs = {
        let num = (2.0 * nf - 1.0) * r_max.powi(2 * n as i32 - 2) * (1.0 - rn1)
            + (nf - 1.0) * r_max.powi(n as i32 - 2) * r_max.powi(2 * n as i32 - 1);
        num / (1.0 - rn1).powi(2)
    };
    let lip = (dg + dlhs) * disk.radius;
    let mut samples = MIN_SAMPLES;
    loop {
        let h = TAU / samples as f64;
        let mut worst = f64::INFINITY;
        let mut worst_at = disk.center;
        for k in 0..samples {
            let z = disk.center + Complex64::from_polar(disk.radius, k as f64 * h);
            let m = g_n(z, n).norm() - rouche_lhs(z.norm(), n);
            if m < worst {
                worst = m;
                worst_at = z;
            }
        }
        let bound = worst - lip * h / 2.0;
        let mut out = disk.clone();
        if worst <= 0.0 {
            out.certified = false;
            out.margin = worst;
            out.violation = Some(worst_at);
            return Ok(out);
        }
        if bound > 0.0 {
            out.certified = true;
            out.margin = bound;
            out.violation = None;
            return Ok(out);
        }
        if samples >= MAX_SAMPLES {
            out.certified = false;
            out.margin = bound;
            out.violation = Some(worst_at);
            return Ok(out);
        }
        samples *= 2;
    }
}

/// Winding number of `f` around 0 along the circle of `disk`, from `samples`
/// points (argument principle).
pub fn winding_number(f: impl Fn(Complex64) -> Complex64, disk: &RoucheDisk, samples: usize) -> i64 {
    let h = TAU / samples as f64;
    let mut total = 0.0;
    let mut prev = f(disk.center + disk.radius);
    for k in 1..=samples {
        let z = disk.center + Complex64::from_polar(disk.radius, k as f64 * h);
        let w = f(z);
        total += (w / prev).arg();
        prev = w;
    }
    (total / TAU).round() as i64
}
