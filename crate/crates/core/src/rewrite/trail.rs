//! Rewriting trails between the `β`-representations of 1 given by `P_β` and
//! by `f_β`.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use super::series::{digit, normalized};
use crate::algnum::IntPolynomial;
use crate::betashift::DigitWord;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TrailDirection {
    /// `A_q P = S_q + X^{q+1} Σ h_{q,j} X^j`, `A_q(0) = −1`.
    PtoF,
    /// `A′_q S_s = −P + X^{q+1} Σ h′_{q,j} X^j`, `A′_q(0) = 1`.
    StoP,
}

#[derive(Clone, Debug, Serialize)]
pub struct RewritingTrail {
    pub direction: TrailDirection,
    /// `A_1, …, A_Q`.
    pub a: Vec<IntPolynomial>,
    /// `(h_{q,0}, …)` for `q = 1..Q`, each padded to the tuple length.
    pub h_rows: Vec<Vec<BigInt>>,
    /// The real zero `γ_s⁻¹ ∈ (0, 1)` of the section, for [`TrailDirection::StoP`].
    pub gamma_inv: Option<f64>,
}

/// `S_q = −1 + t_1 X + … + t_q X^q`.
pub fn digit_section(t: &DigitWord, q: usize) -> Result<IntPolynomial> {
    let mut c = vec![-BigInt::one()];
    for r in 1..=q {
        c.push(digit(t, r)?);
    }
    Ok(IntPolynomial::new(c))
}

/// `(lhs − rhs)/X^{q+1}` as a tuple of `len` integers, failing if the
/// difference has a nonzero coefficient below `X^{q+1}` or a degree beyond
/// the tuple.
fn remainder_tuple(diff: &IntPolynomial, q: usize, len: usize) -> Result<Vec<BigInt>> {
    for i in 0..=q {
        if !diff.coeff(i).is_zero() {
            return Err(Error::Inconsistent(format!(
                "trail identity fails at q = {q}: coefficient {i} is {}",
                diff.coeff(i)
            )));
        }
    }
    if !diff.is_zero() && diff.deg() >= q + 1 + len {
        return Err(Error::Inconsistent(format!(
            "remainder at q = {q} has degree {} beyond the {len}-tuple",
            diff.deg()
        )));
    }
    Ok((0..len).map(|j| diff.coeff(q + 1 + j)).collect())
}

fn with_term(a: &IntPolynomial, c: BigInt, k: usize) -> IntPolynomial {
    a + &IntPolynomial::monomial(c, k)
}

/// The trail from `P` to `f_β`: `A_{q+1} = A_q + (t_{q+1} − h_{q,0}) X^{q+1}`,
/// starting from `A_0 = −1`. Every identity is checked exactly.
pub fn trail_p_to_f(p: &IntPolynomial, t: &DigitWord, q_max: usize) -> Result<RewritingTrail> {
    if q_max == 0 {
        return Err(Error::Precondition("Q must be at least 1".into()));
    }
    let p = normalized(p)?;
    let d = p.deg();
    let mut a = IntPolynomial::constant(-BigInt::one());
    let mut h0 = -p.coeff(1);
    let (mut polys, mut rows) = (Vec::new(), Vec::new());
    for q in 1..=q_max {
        a = with_term(&a, digit(t, q)? - &h0, q);
        let diff = &(&a * &p) - &digit_section(t, q)?;
        let h = remainder_tuple(&diff, q, d)?;
        h0 = h[0].clone();
        polys.push(a.clone());
        rows.push(h);
    }
    Ok(RewritingTrail {
        direction: TrailDirection::PtoF,
        a: polys,
        h_rows: rows,
        gamma_inv: None,
    })
}

/// Real zero of `S` in `(0, 1)` by bisection; `S(0) = −1 < 0` and `S(1) > 0`
/// are required.
fn section_root(s: &IntPolynomial) -> Result<f64> {
    if !(s.eval_f64(1.0) > 0.0) {
        return Err(Error::Precondition(format!("section {s} has no real zero in (0, 1)")));
    }
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    for _ in 0..200 {
        let m = 0.5 * (lo + hi);
        if s.eval_f64(m) < 0.0 {
            lo = m;
        } else {
            hi = m;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// The trail from the section `S_s` (degree `s` in the digits) to `P`:
/// `A′_{q+1} = A′_q + h′_{q,0} X^{q+1}`, starting from `A′_0 = 1`.
pub fn trail_s_to_p(p: &IntPolynomial, t: &DigitWord, s: usize, q_max: usize) -> Result<RewritingTrail> {
    if q_max == 0 || s == 0 {
        return Err(Error::Precondition("s and Q must be at least 1".into()));
    }
    let p = normalized(p)?;
    let sec = digit_section(t, s)?;
    let gamma_inv = section_root(&sec)?;
    let len = s.max(p.deg());
    let mut a = IntPolynomial::one();
    let mut h0 = p.coeff(1) + sec.coeff(1);
    let (mut polys, mut rows) = (Vec::new(), Vec::new());
    for q in 1..=q_max {
        a = with_term(&a, h0.clone(), q);
        let diff = &(&a * &sec) + &p;
        let h = remainder_tuple(&diff, q, len)?;
        h0 = h[0].clone();
        polys.push(a.clone());
        rows.push(h);
    }
    Ok(RewritingTrail {
        direction: TrailDirection::StoP,
        a: polys,
        h_rows: rows,
        gamma_inv: Some(gamma_inv),
    })
}

impl RewritingTrail {
    /// `Σ_j h_{q,j} x^j` for the stored row `q` (1-based).
    pub fn h_value(&self, q: usize, x: f64) -> f64 {
        self.h_rows[q - 1]
            .iter()
            .rev()
            .fold(0.0, |acc, h| acc * x + h.to_f64().unwrap_or(f64::NAN))
    }

    /// `x^{q+1} Σ_j h′_{q,j} x^j` at `x = γ_s⁻¹`, which equals `P(γ_s⁻¹)`.
    pub fn residual(&self, q: usize) -> Option<f64> {
        let x = self.gamma_inv?;
        Some(x.powi(q as i32 + 1) * self.h_value(q, x))
    }
}

/// `g_{q,j}(x) = x^{−j} Σ_{i > q, i ≡ q+1+j (mod d)} t_i x^{i−(q+1)}`,
/// summed over `terms` digits past `q`.
pub fn g_qj(t: &DigitWord, d: usize, q: usize, j: usize, x: f64, terms: usize) -> Result<f64> {
    let mut s = 0.0;
    let mut i = q + 1 + j;
    while i <= q + terms {
        let ti = digit(t, i)?;
        if !ti.is_zero() {
            s += ti.to_f64().unwrap() * x.powi((i - q - 1 - j) as i32);
        }
        i += d;
    }
    Ok(s)
}

/// Comparison of the integers `h_{q,j}` of a `P → f` trail with the series
/// values `g_{q,j}(β⁻¹)`.
#[derive(Clone, Debug, Serialize)]
pub struct TrailTailCheck {
    /// `max_q |Σ_j h_{q,j} x^j − Σ_j g_{q,j}(x) x^j|`.
    pub combined: f64,
    /// `max_{q,j} |h_{q,j} − g_{q,j}(x)|`.
    pub componentwise: f64,
    /// `(q, j, h_{q,j}, g_{q,j}(x))` at the worst component.
    pub worst: (usize, usize, i64, f64),
}

pub fn check_trail_tails(trail: &RewritingTrail, t: &DigitWord, beta_inv: f64, q_max: usize) -> Result<TrailTailCheck> {
    let d = trail.h_rows.first().map_or(0, |r| r.len());
    let terms = (40.0 / -beta_inv.log10()).ceil() as usize + d;
    let mut out = TrailTailCheck {
        combined: 0.0,
        componentwise: 0.0,
        worst: (0, 0, 0, 0.0),
    };
    for q in 1..=q_max.min(trail.h_rows.len()) {
        let mut gsum = 0.0;
        for j in 0..d {
            let g = g_qj(t, d, q, j, beta_inv, terms)?;
            gsum += g * beta_inv.powi(j as i32);
            let h = trail.h_rows[q - 1][j].to_i64().unwrap_or(i64::MAX);
            let e = (h as f64 - g).abs();
            if e > out.componentwise {
                out.componentwise = e;
                out.worst = (q, j, h, g);
            }
        }
        out.combined = out.combined.max((trail.h_value(q, beta_inv) + 0.0 - gsum).abs());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rewrite::series::tests::lehmer_word;

    fn lehmer() -> IntPolynomial {
        IntPolynomial::from_i64(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1])
    }

    #[test]
    fn p_to_f_trail() {
        let p = lehmer();
        let w = lehmer_word();
        let tr = trail_p_to_f(&p, &w, 50).unwrap();
        // A_1 = −1 + (a_1 + 1) X and h_{1,d−1} = a_1 + 1.
        assert_eq!(tr.a[0], IntPolynomial::from_i64(&[-1, 2]));
        assert_eq!(tr.h_rows[0][9], BigInt::from(2));
        for (q, a) in tr.a.iter().enumerate() {
            let q = q + 1;
            assert_eq!(a.coeff(0), -BigInt::one());
            assert!(a.deg() <= q);
            let h = IntPolynomial::new(tr.h_rows[q - 1].clone()).shift_up(q + 1);
            assert_eq!(&(a * &p) - &digit_section(&w, q).unwrap(), h);
        }
        assert!(trail_p_to_f(&p, &w, 0).is_err());
    }

    #[test]
    fn tails_agree_in_sum() {
        let p = lehmer();
        let w = lehmer_word();
        let tr = trail_p_to_f(&p, &w, 20).unwrap();
        let beta_inv = 1.0 / 1.176_280_818_259_917_5;
        let c = check_trail_tails(&tr, &w, beta_inv, 20).unwrap();
        assert!(c.combined < 1e-8, "{c:?}");
        // Integer h against real g: componentwise they differ.
        assert!(c.componentwise > 1e-3, "{c:?}");
    }

    #[test]
    fn s_to_p_trail() {
        let p = lehmer();
        let w = lehmer_word();
        let tr = trail_s_to_p(&p, &w, 12, 20).unwrap();
        assert_eq!(tr.a[0], IntPolynomial::from_i64(&[1, 2]));
        let sec = digit_section(&w, 12).unwrap();
        for (q, a) in tr.a.iter().enumerate() {
            let q = q + 1;
            assert_eq!(a.coeff(0), BigInt::one());
            let h = IntPolynomial::new(tr.h_rows[q - 1].clone()).shift_up(q + 1);
            assert_eq!(&(a * &sec) + &p, h);
        }
        let x = tr.gamma_inv.unwrap();
        let d = p.deg();
        assert!((tr.residual(d + 1).unwrap() - p.eval_f64(x)).abs() < 1e-12);
        // Longer sections: the residual P(γ_s⁻¹) shrinks.
        let exps = [12usize, 31, 63, 118];
        let res: Vec<f64> = exps
            .iter()
            .map(|&s| trail_s_to_p(&p, &w, s, d + 1).unwrap().residual(d + 1).unwrap().abs())
            .collect();
        assert!(res.windows(2).all(|r| r[1] < r[0]), "{res:?}");
    }

    #[test]
    fn trinomial_section() {
        // f = G_n: the section S_n is G_n and γ_n⁻¹ = θ_n.
        let n = 12;
        let mut d = vec![1];
        d.extend(std::iter::repeat_n(0, n - 2));
        d.push(1);
        let w = DigitWord::finite(d);
        let p = IntPolynomial::from_i64(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]);
        let tr = trail_s_to_p(&p, &w, n, 12).unwrap();
        let th = crate::trinomial::theta_n_f64(n);
        assert!((tr.gamma_inv.unwrap() - th).abs() < 1e-14);
        assert!((tr.residual(11).unwrap() - p.eval_f64(th)).abs() < 1e-12);
    }
}
