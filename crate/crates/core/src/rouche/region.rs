//! The zero-free domain `D_n`, the thickness `e(s)` of the annulus left by a
//! section, and the oscillation of `|G_n|` on the circle `|z| = 1 − c_n/n`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use super::indices::{c_n_from, h_n, j_n_from, N2};
use super::kappa::a_max;
use crate::error::{Error, Result};
use crate::trinomial::{roots, theta_n_f64, Logs, TrinomialRootSet};

/// `s_{j,n} = a_max [1 + a_max² (j − J_n)²/(π² J_n²)]^{−1/2}`.
pub fn guard_parameter(j: usize, j_n: usize) -> f64 {
    let a = a_max();
    let d = (j as f64 - j_n as f64) / (PI * j_n as f64);
    a / (1.0 + a * a * d * d).sqrt()
}

/// The geometry of `D_n`, computed once per `n`.
#[derive(Clone, Debug)]
pub struct ZeroFreeRegion {
    pub n: usize,
    pub j_n: usize,
    pub h_n: usize,
    pub c_n: f64,
    pub theta: f64,
    /// `(center, radius)` of every excluded disk in the upper half plane,
    /// the real one first.
    pub excluded: Vec<(Complex64, f64)>,
}

impl ZeroFreeRegion {
    pub fn new(n: usize) -> Result<Self> {
        if n < N2 {
            return Err(Error::Precondition(format!(
                "the zero-free region is established for n ≥ 260, got n = {n}"
            )));
        }
        Self::from_roots(&roots(n, 53)?)
    }

    pub fn from_roots(rs: &TrinomialRootSet) -> Result<Self> {
        let n = rs.n;
        if n < N2 {
            return Err(Error::Precondition(format!(
                "the zero-free region is established for n ≥ 260, got n = {n}"
            )));
        }
        let j_n = j_n_from(rs)?;
        let h_n = h_n(n)?;
        let c_n = c_n_from(rs)?.from_roots;
        let nf = n as f64;
        let theta = rs.theta_f64();
        let mut excluded = vec![(Complex64::new(theta, 0.0), Logs::of(n).ratio2() / nf)];
        let a = a_max();
        for j in 1..=j_n {
            let z = rs.z(j)?;
            excluded.push((z, PI * z.norm() / (nf * a)));
        }
        for j in j_n + 1..=(2 * j_n + 1).saturating_sub(h_n) {
            let z = rs.z(j)?;
            excluded.push((z, PI * z.norm() / (nf * guard_parameter(j, j_n))));
        }
        Ok(ZeroFreeRegion {
            n,
            j_n,
            h_n,
            c_n,
            theta,
            excluded,
        })
    }

    /// Outer radius `1 − c_n/n`.
    pub fn outer_radius(&self) -> f64 {
        1.0 - self.c_n / self.n as f64
    }

    /// Membership in `D_n` (symmetric in the real axis).
    pub fn contains(&self, z: Complex64) -> bool {
        let w = Complex64::new(z.re, z.im.abs());
        w.norm() < self.outer_radius() && self.excluded.iter().all(|&(c, r)| (w - c).norm() > r)
    }
}

/// True iff `z ∈ D_n`, where no Parry Upper function of dynamical degree
/// `n ≥ 260` vanishes.
pub fn zero_free_region(n: usize, z: Complex64) -> Result<bool> {
    Ok(ZeroFreeRegion::new(n)?.contains(z))
}

/// `δ_n = min{(1 − θ_{n−1})², |Z|^{2n−1}/(1 − |Z|^{n−1})}` with
/// `|Z| = θ_n (1 − π/(n a_max))`.
pub fn delta_n(n: usize) -> Result<f64> {
    if n < 3 {
        return Err(Error::Precondition("δ_n needs n ≥ 3".into()));
    }
    let t1 = 1.0 - theta_n_f64(n - 1);
    let z = theta_n_f64(n) * (1.0 - PI / (n as f64 * a_max()));
    let t2 = z.powi(2 * n as i32 - 1) / (1.0 - z.powi(n as i32 - 1));
    Ok((t1 * t1).min(t2))
}

/// `e(s) = 1 − (1 − 2(n−1)(s − δ_n)/((n−1)(s² + s) + 2(m_s − n)))^{1/(n−1)}`.
pub fn section_thickness(n: usize, s: usize, m_s: usize, delta_n: f64) -> Result<f64> {
    let (nf, sf) = (n as f64, s as f64);
    if n < 3 || !(sf > delta_n) {
        return Err(Error::Precondition(format!("e(s) needs n ≥ 3 and s > δ_n = {delta_n}")));
    }
    if m_s < s * (n - 1) + n {
        return Err(Error::Precondition(format!(
            "m_s = {m_s} violates the gap bound m_s ≥ s(n − 1) + n = {}",
            s * (n - 1) + n
        )));
    }
    let inner = 1.0
        - 2.0 * (nf - 1.0) * (sf - delta_n) / ((nf - 1.0) * (sf * sf + sf) + 2.0 * (m_s as f64 - nf));
    if !(inner > 0.0) {
        return Err(Error::OutOfRange(format!("inner expression {inner} of e(s) is not positive")));
    }
    Ok(1.0 - inner.powf(1.0 / (nf - 1.0)))
}

/// `|G_n(z_{J_n,n} e^{−2ikπ/n})|` against `2|k|π/n`.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct SuccessiveMinimum {
    pub k: i64,
    pub value: f64,
    pub predicted: f64,
}

/// The successive minima for `|k| ≤ J_n − H_n + 1`.
pub fn successive_minima(rs: &TrinomialRootSet) -> Result<Vec<SuccessiveMinimum>> {
    let n = rs.n;
    let j_n = j_n_from(rs)?;
    let kmax = (j_n + 1).saturating_sub(h_n(n)?) as i64;
    let zj = rs.z(j_n)?;
    let nf = n as f64;
    Ok((-kmax..=kmax)
        .map(|k| {
            let z = zj * Complex64::from_polar(1.0, -2.0 * PI * k as f64 / nf);
            SuccessiveMinimum {
                k,
                value: (z.powi(n as i32) + z - 1.0).norm(),
                predicted: 2.0 * PI * k.unsigned_abs() as f64 / nf,
            }
        })
        .collect())
}

/// Arguments in `(0, π/3)` of the local minima of `φ ↦ |G_n(r e^{iφ})|`,
/// sampled on `samples` points.
pub fn circle_minima(n: usize, r: f64, samples: usize) -> Vec<f64> {
    let h = PI / 3.0 / samples as f64;
    let g = |k: usize| {
        let z = Complex64::from_polar(r, k as f64 * h);
        (z.powi(n as i32) + z - 1.0).norm()
    };
    let vals: Vec<f64> = (0..=samples).map(g).collect();
    (1..samples)
        .filter(|&k| vals[k] < vals[k - 1] && vals[k] <= vals[k + 1])
        .map(|k| k as f64 * h)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rouche::disk::winding_number;
    use crate::rouche::lenticulus::eval_section;

    #[test]
    fn region_membership() {
        let n = 260;
        let d = ZeroFreeRegion::new(n).unwrap();
        assert!(!d.contains(Complex64::new(d.theta, 0.0)));
        assert!(d.contains(Complex64::new(0.5, 0.0)));
        let r = 1.0 - d.c_n / (2.0 * n as f64);
        assert!(!d.contains(Complex64::new(r, 0.0)));
        assert!(!d.contains(Complex64::from_polar(r, 0.05)));
        assert!(zero_free_region(259, Complex64::new(0.5, 0.0)).is_err());
        // Conjugate symmetry.
        let z = Complex64::from_polar(0.97, 0.1);
        assert_eq!(d.contains(z), d.contains(z.conj()));
        assert_eq!(d.excluded.len(), 1 + 2 * d.j_n + 1 - d.h_n);
    }

    #[test]
    fn no_zero_of_a_section_in_the_region() {
        // f = −1 + z + z^n + z^{2n−1} + z^{3n−2}: its zeros in |z| < 1 − c_n/n
        // avoid D_n.
        let n = 260;
        let d = ZeroFreeRegion::new(n).unwrap();
        let exps = [1, n, 2 * n - 1, 3 * n - 2];
        let r = d.outer_radius();
        let mut least = f64::INFINITY;
        for k in 0..4000 {
            let z = Complex64::from_polar(r * 0.9999, PI * k as f64 / 4000.0);
            if d.contains(z) {
                least = least.min(eval_section(&exps, z).0.norm());
            }
        }
        assert!(least > 1e-3, "{least}");
    }

    #[test]
    fn guard_parameters() {
        assert!((guard_parameter(17, 17) - a_max()).abs() < 1e-15);
        assert!(guard_parameter(20, 17) < guard_parameter(18, 17));
    }

    #[test]
    fn thickness() {
        let n = 260;
        let dn = delta_n(n).unwrap();
        assert!(dn > 0.0 && dn < 1.0);
        let mut prev = 1.0;
        for s in [10usize, 100, 1000] {
            let e = section_thickness(n, s, s * (n - 1) + n, dn).unwrap();
            assert!(e > 0.0 && e < prev, "s = {s}: {e}");
            prev = e;
        }
        assert!(prev < 1e-2);
        assert!(section_thickness(n, 10, 10, dn).is_err());
        for n in [260usize, 600] {
            let v = delta_n(n).unwrap().ln() / n as f64;
            assert!(v.abs() < 0.05, "n = {n}: {v}");
        }
    }

    #[test]
    fn oscillation_at_615() {
        let n = 615;
        let rs = roots(n, 53).unwrap();
        let tl = Logs::of(n).ratio2() / n as f64;
        let zj = rs.z(j_n_from(&rs).unwrap()).unwrap().norm();
        for m in successive_minima(&rs).unwrap() {
            // G_n(z_J e^{−2ikπ/n}) = z_J (e^{−2ikπ/n} − 1) exactly; the gap
            // to 2|k|π/n is |k|·2πc_n/n², within twice the O-term here.
            let exact = zj * 2.0 * (PI * m.k.unsigned_abs() as f64 / n as f64).sin();
            assert!((m.value - exact).abs() < 1e-12);
            assert!((m.value - m.predicted).abs() < 2.0 * tl, "{m:?}");
        }
        let r = 1.0 - c_n_from(&rs).unwrap().from_roots / n as f64;
        let mins = circle_minima(n, r, 20_000);
        let jn = j_n_from(&rs).unwrap();
        for j in 1..=jn {
            let a = rs.z(j).unwrap().arg();
            assert!(
                mins.iter().any(|&m| (m - a).abs() < 2.0 * PI / n as f64),
                "no minimum near arg z_{j}"
            );
        }
    }

    #[test]
    fn section_zero_count_is_one() {
        let n = 260;
        let rs = roots(n, 53).unwrap();
        let exps = [1, n, 2 * n - 1, 3 * n - 2, 4 * n - 3];
        for j in 1..=j_n_from(&rs).unwrap() {
            let d = crate::rouche::RoucheDisk::lenticular(
                j,
                rs.z(j).unwrap(),
                n,
                crate::rouche::DiskKind::Main,
            );
            assert_eq!(winding_number(|z| eval_section(&exps, z).0, &d, 2048), 1, "j = {j}");
        }
    }
}
