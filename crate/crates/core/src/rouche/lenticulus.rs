//! Parry Upper functions and their lenticular zeros.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use super::disk::{rouche_certify, DiskKind, RoucheDisk};
use super::indices::{distance_ratio, N1};
use super::kappa::KAPPA;
use crate::betashift::{BetaExpansion, DigitWord};
use crate::error::{Error, Result};
use crate::trinomial::{roots, SectorPlan, TrinomialRootSet};

/// Smallest dynamical degree for which the first-root disk certifies.
pub const SALEM_N: usize = 32;

/// Where the coefficients of `f(z) = −1 + Σ t_i z^i` come from.
#[derive(Clone, Debug)]
pub enum ParrySource {
    /// The digits of `d_β(1)`.
    Expansion(DigitWord),
    /// `−1 + z + z^n + z^{m_1} + … + z^{m_k}` with the listed exponents
    /// `1, n, m_1, …, m_k`.
    Exponents(Vec<usize>),
}

/// A Parry Upper function with `{0, 1}` digits.
#[derive(Clone, Debug)]
pub struct ParryUpper {
    source: ParrySource,
    /// Known exponents with coefficient 1, increasing.
    exponents: Vec<usize>,
    /// All exponents are known (the function is a polynomial).
    complete: bool,
    /// How far the expansion has been scanned.
    scanned: usize,
}

impl ParryUpper {
    /// `f(z) = −1 + z + z^n + Σ z^{m_q}` from an explicit exponent list
    /// (which must start with 1 and be strictly increasing).
    pub fn from_exponents(exponents: Vec<usize>) -> Result<Self> {
        if exponents.first() != Some(&1) || exponents.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Precondition(
                "exponents must start with 1 and increase strictly".into(),
            ));
        }
        Ok(ParryUpper {
            source: ParrySource::Exponents(exponents.clone()),
            exponents,
            complete: true,
            scanned: usize::MAX,
        })
    }

    /// `f_β` from a beta expansion whose digits are all 0 or 1.
    pub fn from_expansion(exp: &BetaExpansion) -> Result<Self> {
        Self::from_word(exp.word.clone())
    }

    pub fn from_word(word: DigitWord) -> Result<Self> {
        if word.get(0) != Some(1) {
            return Err(Error::Precondition("the first digit t_1 must be 1".into()));
        }
        let mut f = ParryUpper {
            complete: word.is_finite(),
            source: ParrySource::Expansion(word),
            exponents: Vec::new(),
            scanned: 0,
        };
        f.scan_to(4096)?;
        Ok(f)
    }

    /// `G_n` itself.
    pub fn trinomial(n: usize) -> Self {
        Self::from_exponents(vec![1, n]).expect("valid exponents")
    }

    pub fn source(&self) -> &ParrySource {
        &self.source
    }

    fn scan_to(&mut self, limit: usize) -> Result<()> {
        let ParrySource::Expansion(w) = &self.source else {
            return Ok(());
        };
        let end = w.finite_length();
        while self.scanned < limit {
            if end.is_some_and(|e| self.scanned >= e) {
                self.complete = true;
                self.scanned = usize::MAX;
                return Ok(());
            }
            match w.get(self.scanned) {
                Some(0) => {}
                Some(1) => self.exponents.push(self.scanned + 1),
                Some(d) => {
                    return Err(Error::Precondition(format!(
                        "digit {d} at position {}: only {{0, 1}} digits are supported",
                        self.scanned + 1
                    )))
                }
                None => return Err(Error::HorizonExceeded(self.scanned)),
            }
            self.scanned += 1;
        }
        Ok(())
    }

    /// The `q`-th exponent (`q = 0` is the exponent 1), extending the scan of
    /// an infinite expansion as needed. `None` past the last term.
    pub fn exponent(&mut self, q: usize) -> Result<Option<usize>> {
        while q >= self.exponents.len() && !self.complete {
            let next = self.scanned.saturating_mul(2).max(64);
            self.scan_to(next)?;
        }
        Ok(self.exponents.get(q).copied())
    }

    /// Coefficient of `z^i` (`−1` at `i = 0`).
    pub fn coefficient(&mut self, i: usize) -> Result<i64> {
        if i == 0 {
            return Ok(-1);
        }
        if !self.complete {
            self.scan_to(i)?;
        }
        Ok(self.exponents.binary_search(&i).is_ok() as i64)
    }

    /// `n`, the second exponent.
    pub fn dyg(&mut self) -> Result<usize> {
        self.exponent(1)?
            .ok_or_else(|| Error::Precondition("f has no term beyond z".into()))
    }

    /// Exponents of the section `S_s = −1 + z + z^n + z^{m_1} + … + z^{m_s}`.
    pub fn section_exponents(&mut self, s: usize) -> Result<Vec<usize>> {
        self.exponent(s + 1)?;
        Ok(self.exponents.iter().take(s + 2).copied().collect())
    }

    /// Number of terms beyond `−1` if finite.
    pub fn term_count(&self) -> Option<usize> {
        self.complete.then_some(self.exponents.len())
    }

    /// Bound on `|f(z) − S_s(z)|` for `|z| ≤ r < 1`, from the gap condition
    /// `m_{q+1} − m_q ≥ n − 1`: `r^{m_{s+1}}/(1 − r^{n−1})`.
    pub fn tail_bound(&mut self, s: usize, r: f64) -> Result<f64> {
        let n = self.dyg()?;
        Ok(match self.exponent(s + 2)? {
            None => 0.0,
            Some(m) => r.powi(m as i32) / (1.0 - r.powi(n as i32 - 1)),
        })
    }

    /// Minimal gappiness `m_{q+1} − m_q ≥ n − 1` on the first `count`
    /// exponents beyond `z^n`.
    pub fn gap_condition_holds(&mut self, count: usize) -> Result<bool> {
        let n = self.dyg()?;
        self.exponent(count + 1)?;
        Ok(self
            .exponents
            .iter()
            .skip(1)
            .take(count + 1)
            .collect::<Vec<_>>()
            .windows(2)
            .all(|w| w[1] - w[0] >= n - 1))
    }
}

/// `(S(z), S′(z))` for `S = −1 + Σ z^e`.
pub fn eval_section(exps: &[usize], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(-1.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &e in exps {
        let ze1 = z.powi(e as i32 - 1);
        p += ze1 * z;
        dp += ze1 * e as f64;
    }
    (p, dp)
}

/// A detected zero `ω_{j,n}` (upper half plane; its conjugate is implied).
#[derive(Clone, Debug, Serialize)]
pub struct LenticularZero {
    pub j: usize,
    pub omega: Complex64,
    /// Bound on `|f(ω)|`: section residual plus tail bound.
    pub residual: f64,
    /// Order `s` of the section used.
    pub section: usize,
    pub disk: RoucheDisk,
}

/// A disk in which no zero could be certified.
#[derive(Clone, Debug, Serialize)]
pub struct DetectionFailure {
    pub j: usize,
    pub reason: String,
}

/// The detected zeros of `f` near `1`.
#[derive(Clone, Debug, Serialize)]
pub struct Lenticulus {
    pub n: usize,
    /// `β = 1/ω_0`.
    pub beta: f64,
    pub j_n: usize,
    /// `ω_0 = 1/β` first, then `ω_{j,n}` for `j ≥ 1`.
    pub zeros: Vec<LenticularZero>,
    pub failures: Vec<DetectionFailure>,
    pub notes: Vec<String>,
}

impl Lenticulus {
    /// The roots of `G_n` inside the unit disk, which form the lenticulus of
    /// the trinomial itself. Disks are the root clusters.
    pub fn of_trinomial(rs: &TrinomialRootSet) -> Self {
        let n = rs.n;
        let theta = rs.theta_f64();
        let zero = |j: usize, omega: Complex64, radius: f64, kind| {
            let mut disk = RoucheDisk::new(j, omega, radius, kind);
            disk.margin = radius;
            LenticularZero {
                j,
                omega,
                residual: (omega.powi(n as i32) + omega - 1.0).norm(),
                section: 0,
                disk,
            }
        };
        let mut zeros = vec![zero(0, Complex64::new(theta, 0.0), 0.0, DiskKind::Real)];
        for (i, c) in rs.upper_roots.iter().enumerate() {
            let z = c.center();
            if z.norm() < 1.0 && z.arg() < std::f64::consts::FRAC_PI_3 - 1e-12 {
                zeros.push(zero(i + 1, z, c.radius, DiskKind::Main));
            }
        }
        Lenticulus {
            n,
            beta: 1.0 / theta,
            j_n: zeros.len() - 1,
            zeros,
            failures: Vec::new(),
            notes: vec!["roots of G_n inside the unit disk".into()],
        }
    }

    /// `|L_β|`, counting conjugates.
    pub fn size(&self) -> usize {
        self.zeros.iter().map(|z| if z.j == 0 { 1 } else { 2 }).sum()
    }

    /// Upper-half-plane zeros `ω_{j,n}`, `j ≥ 1`.
    pub fn complex_zeros(&self) -> impl Iterator<Item = &LenticularZero> {
        self.zeros.iter().filter(|z| z.j > 0)
    }
}

/// Options for [`find_lenticulus`].
#[derive(Clone, Copy, Debug, Default)]
pub struct LenticulusOptions {
    /// Run the `J_n` machinery below `n = 195`.
    pub unsafe_small_n: bool,
}

const NEWTON_STEPS: usize = 200;

/// Smallest section order with tail bound at most `budget` on `|z| ≤ r`.
fn section_order(f: &mut ParryUpper, r: f64, budget: f64) -> Result<usize> {
    let mut s = 0;
    loop {
        if f.tail_bound(s, r)? <= budget {
            return Ok(s);
        }
        s += 1;
        if s > 1_000_000 {
            return Err(Error::NoConvergence("section order search".into()));
        }
    }
}

/// Newton's method on `S` from `start`, kept inside `disk`.
fn newton_in_disk(exps: &[usize], start: Complex64, disk: &RoucheDisk) -> std::result::Result<Complex64, String> {
    let mut z = start;
    for _ in 0..NEWTON_STEPS {
        let (p, dp) = eval_section(exps, z);
        if dp.norm() == 0.0 {
            return Err("vanishing derivative in Newton iteration".into());
        }
        let step = p / dp;
        z -= step;
        if !disk.contains(z) {
            return Err(format!("Newton iterate {z} escaped the disk"));
        }
        if step.norm() <= 4.0 * f64::EPSILON * z.norm() {
            return Ok(z);
        }
    }
    Err("Newton iteration did not converge".into())
}

fn solve_in_disk(
    f: &ParryUpper,
    disk: RoucheDisk,
    n: usize,
) -> std::result::Result<LenticularZero, DetectionFailure> {
    let j = disk.j;
    let fail = |reason: String| DetectionFailure { j, reason };
    let disk = rouche_certify(&disk, n).map_err(|e| fail(e.to_string()))?;
    if !disk.certified {
        return Err(fail(format!("Rouché certificate fails (margin {:e})", disk.margin)));
    }
    let mut f = f.clone();
    let r = disk.center.norm() + disk.radius;
    let s = section_order(&mut f, r, (1e-3 * disk.margin).min(1e-14)).map_err(|e| fail(e.to_string()))?;
    let exps = f.section_exponents(s).map_err(|e| fail(e.to_string()))?;
    let omega = newton_in_disk(&exps, disk.center, &disk).map_err(fail)?;
    let (p, _) = eval_section(&exps, omega);
    let tail = f.tail_bound(s, omega.norm()).map_err(|e| fail(e.to_string()))?;
    Ok(LenticularZero {
        j,
        omega,
        residual: p.norm() + tail,
        section: s,
        disk,
    })
}

/// The real zero `1/β` of `f` in `(0, 1)`, by bisection on a section.
fn real_zero(f: &mut ParryUpper, rs: &TrinomialRootSet) -> Result<LenticularZero> {
    let n = rs.n;
    let theta = rs.theta_f64();
    let l = (n as f64).ln();
    let radius = (l.ln() / l).powi(2) / n as f64;
    let s = section_order(f, theta + radius, 1e-17)?;
    let exps = f.section_exponents(s)?;
    let val = |x: f64| eval_section(&exps, Complex64::new(x, 0.0)).0.re;
    let (mut a, mut b) = (0.0f64, 1.0f64);
    for _ in 0..200 {
        let m = 0.5 * (a + b);
        if val(m) < 0.0 {
            a = m;
        } else {
            b = m;
        }
    }
    let x = 0.5 * (a + b);
    let mut disk = RoucheDisk::new(0, Complex64::new(theta, 0.0), radius, DiskKind::Real);
    if disk.center.norm() + disk.radius < 1.0 {
        disk = rouche_certify(&disk, n)?;
    }
    Ok(LenticularZero {
        j: 0,
        omega: Complex64::new(x, 0.0),
        residual: val(x).abs() + f.tail_bound(s, x)?,
        section: s,
        disk,
    })
}

/// Largest `j ≤ ⌊n/6⌋` with `|−1 + z_{j,n}|/|z_{j,n}| ≤ κ`, without the
/// range check on `n`.
fn j_n_any(rs: &TrinomialRootSet) -> usize {
    (1..=rs.n / 6)
        .filter(|&j| distance_ratio(rs.upper_roots[j - 1].center()) <= KAPPA)
        .max()
        .unwrap_or(0)
}

fn kind_for(j: usize, n: usize) -> DiskKind {
    let vn = SectorPlan::new(n).map(|p| p.v_n.floor() as usize).unwrap_or(0);
    if j == 1 && n < N1 {
        DiskKind::First
    } else if j <= vn {
        DiskKind::Bump
    } else {
        DiskKind::Main
    }
}

/// Zeros of `f` in the Rouché disks `D(z_{j,n}, π|z_{j,n}|/(n a_max))`.
///
/// For `n ≥ 195` every `j = 1..J_n` is tried. For `32 ≤ n < 195` only the
/// first disk is used, and below 32 only `1/β` is returned, unless
/// `unsafe_small_n` is set.
pub fn find_lenticulus(
    f: &ParryUpper,
    n: usize,
    bits: u32,
    opts: LenticulusOptions,
) -> Result<Lenticulus> {
    let mut f = f.clone();
    let d = f.dyg()?;
    if d != n {
        return Err(Error::Inconsistent(format!(
            "f has dynamical degree {d} (exponent of its third term), not {n}"
        )));
    }
    if n < 2 {
        return Err(Error::Precondition("n must be at least 2".into()));
    }
    let rs = roots(n, bits)?;
    let mut notes = Vec::new();
    let upper: Vec<usize> = if n >= N1 || opts.unsafe_small_n {
        if n < N1 {
            notes.push(format!("n = {n} < 195: J_n machinery used outside its range"));
        }
        (1..=j_n_any(&rs)).collect()
    } else if n >= SALEM_N {
        notes.push(format!("n = {n} < 195: first-root mode, only ω_1 is sought"));
        vec![1]
    } else {
        notes.push(format!(
            "n = {n} < 32: no Rouché disk is certified, the lenticulus is {{1/β}}"
        ));
        Vec::new()
    };
    let j_n = if n >= N1 || opts.unsafe_small_n { j_n_any(&rs) } else { 0 };
    let zero0 = real_zero(&mut f, &rs)?;
    let results: Vec<_> = upper
        .par_iter()
        .map(|&j| {
            let disk = RoucheDisk::lenticular(j, rs.upper_roots[j - 1].center(), n, kind_for(j, n));
            solve_in_disk(&f, disk, n)
        })
        .collect();
    let mut zeros = vec![zero0];
    let mut failures = Vec::new();
    for r in results {
        match r {
            Ok(z) => zeros.push(z),
            Err(e) => failures.push(e),
        }
    }
    Ok(Lenticulus {
        n,
        beta: 1.0 / zeros[0].omega.re,
        j_n,
        zeros,
        failures,
        notes,
    })
}

/// The zero `ω_{1,n}` of `f` in `D(z_{1,n}, π|z_{1,n}|/(n a_max))`, `n ≥ 32`.
pub fn salem_first_root(f: &ParryUpper, n: usize) -> Result<Complex64> {
    if n < SALEM_N {
        return Err(Error::Precondition(format!(
            "the first-root certificate needs n ≥ 32, got n = {n}"
        )));
    }
    let mut g = f.clone();
    if g.dyg()? != n {
        return Err(Error::Inconsistent(format!(
            "f has dynamical degree {}, not {n}",
            g.dyg()?
        )));
    }
    let rs = roots(n, 53)?;
    let disk = RoucheDisk::lenticular(1, rs.z(1)?, n, DiskKind::First);
    solve_in_disk(f, disk, n)
        .map(|z| z.omega)
        .map_err(|e| Error::Certification(format!("j = {}: {}", e.j, e.reason)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algnum::{isolate_real_roots, IntPolynomial, RatInterval};
    use crate::betashift::renyi_expansion;

    fn synthetic(n: usize, terms: usize) -> ParryUpper {
        let mut e = vec![1, n];
        let mut m = 2 * n - 1;
        for _ in 0..terms {
            e.push(m);
            m += n - 1;
        }
        ParryUpper::from_exponents(e).unwrap()
    }

    #[test]
    fn parry_upper_from_expansion() {
        let p = IntPolynomial::from_i64(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]);
        let beta = isolate_real_roots(&p, &RatInterval::ints(1, 2)).remove(0);
        let e = renyi_expansion(&beta, 200).unwrap();
        let mut f = ParryUpper::from_expansion(&e).unwrap();
        assert_eq!(f.dyg().unwrap(), 12);
        let ex: Vec<usize> = (0..8).map(|q| f.exponent(q).unwrap().unwrap()).collect();
        assert_eq!(ex, vec![1, 12, 31, 44, 63, 86, 105, 118]);
        assert!(f.gap_condition_holds(50).unwrap());
        assert_eq!(f.coefficient(31).unwrap(), 1);
        assert_eq!(f.coefficient(30).unwrap(), 0);
        assert!(f.tail_bound(3, 0.9).unwrap() > 0.0);
    }

    #[test]
    fn trinomial_lenticulus_is_its_roots() {
        let n = 260;
        let f = ParryUpper::trinomial(n);
        let l = find_lenticulus(&f, n, 53, LenticulusOptions::default()).unwrap();
        let rs = roots(n, 53).unwrap();
        assert!(l.failures.is_empty(), "{:?}", l.failures);
        assert_eq!(l.size(), 1 + 2 * l.j_n);
        for z in l.complex_zeros() {
            assert!((z.omega - rs.z(z.j).unwrap()).norm() < 1e-12);
        }
        assert!((l.beta - 1.0 / rs.theta_f64()).abs() < 1e-12);
    }

    #[test]
    fn synthetic_dyg_260() {
        let n = 260;
        let f = synthetic(n, 12);
        let l = find_lenticulus(&f, n, 53, LenticulusOptions::default()).unwrap();
        assert!(l.failures.is_empty(), "{:?}", l.failures);
        assert_eq!(l.size(), 1 + 2 * l.j_n);
        for z in &l.zeros {
            assert!(z.j == 0 || z.disk.contains(z.omega));
            assert!(z.residual < 1e-10, "j = {}: {}", z.j, z.residual);
        }
    }

    #[test]
    fn mode_gating() {
        let f = synthetic(12, 3);
        let l = find_lenticulus(&f, 12, 53, LenticulusOptions::default()).unwrap();
        assert_eq!(l.zeros.len(), 1);
        assert!(!l.notes.is_empty());
        assert!(salem_first_root(&synthetic(31, 3), 31).is_err());
        let f = synthetic(40, 5);
        let w = salem_first_root(&f, 40).unwrap();
        let z1 = roots(40, 53).unwrap().z(1).unwrap();
        assert!((w - z1).norm() < std::f64::consts::PI / (40.0 * super::super::kappa::a_max()));
        assert!(find_lenticulus(&f, 41, 53, LenticulusOptions::default()).is_err());
    }
}
