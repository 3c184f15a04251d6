use std::f64::consts::TAU;

use num_bigint::Sign;
use num_complex::Complex64;
use num_traits::Zero;
use proptest::prelude::*;

use lenticulus_core::algnum::{isolate_real_roots, sturm_count, RatInterval};
use lenticulus_core::betashift::{
    beta_from_digits, c_word, dynamical_degree, is_admissible, parry_polynomial, renyi_expansion,
};
use lenticulus_core::measures::mahler;
use lenticulus_core::rewrite::{convolution_residuals, u_beta_coeffs};
use lenticulus_core::trinomial::theta_n_inverse;
use lenticulus_core::{AngularProfile, IntPolynomial};

fn small_poly(max_deg: usize) -> impl Strategy<Value = IntPolynomial> {
    (prop::collection::vec(-3i64..=3, 1..=max_deg), 1i64..=3)
        .prop_map(|(mut c, lead)| {
            c.push(lead);
            IntPolynomial::from_i64(&c)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn exact_division_inverts_multiplication(a in small_poly(6), b in small_poly(5)) {
        let prod = &a * &b;
        prop_assert_eq!(prod.div_exact(&b), Some(a.clone()));
        let g = a.gcd(&prod);
        prop_assert!(g.divides(&a));
        prop_assert!(g.divides(&prod));
    }

    #[test]
    fn sturm_count_matches_isolation(p in small_poly(7)) {
        let q = p.squarefree_part();
        prop_assume!(q.deg() > 0);
        let bound = 1 + q.height().to_string().parse::<i64>().unwrap();
        let range = RatInterval::ints(-bound, bound);
        let isolated = isolate_real_roots(&q, &range);
        let counted = sturm_count(&q, &range.lo, &range.hi);
        prop_assert_eq!(isolated.len(), counted);
        for r in &isolated {
            prop_assert!(q.eval_f64(r.to_f64()).abs() < 1e-6 * (1.0 + q.height().to_string().parse::<f64>().unwrap()));
        }
    }

    #[test]
    fn mahler_measure_is_multiplicative(a in small_poly(5), b in small_poly(5)) {
        prop_assume!(!a.coeff(0).is_zero() && !b.coeff(0).is_zero());
        let ma = mahler(&a).unwrap().mahler;
        let mb = mahler(&b).unwrap().mahler;
        let mab = mahler(&(&a * &b)).unwrap().mahler;
        prop_assert!(ma >= 1.0 - 1e-9);
        prop_assert!((mab - ma * mb).abs() <= 1e-7 * mab);
    }

    #[test]
    fn sector_counts_are_additive(
        p in small_poly(8),
        cuts in prop::collection::vec(0.0..TAU, 1..5),
        start in 0.0..TAU,
    ) {
        prop_assume!(!p.coeff(0).is_zero());
        let prof = AngularProfile::new(&p).unwrap();
        let mut pts = cuts.clone();
        pts.sort_by(f64::total_cmp);
        let mut edges = vec![start];
        edges.extend(pts.iter().map(|c| start + c));
        edges.push(start + TAU);
        let total: usize = edges.windows(2).map(|w| prof.n_f(w[0], w[1])).sum();
        prop_assert_eq!(total, prof.degree());
        prop_assert_eq!(prof.n_f(start, start + TAU), p.deg());
    }

    #[test]
    fn rotation_moves_sector_counts(
        k in 2usize..30,
        c in 2i64..5,
        omega in 0.0..TAU,
        phi in 0.0..TAU,
        len in 0.0..TAU,
    ) {
        let p = IntPolynomial::from_i64(&[-c]) + IntPolynomial::monomial(1, k);
        let prof = AngularProfile::new(&p).unwrap();
        let gap = |a: f64| {
            prof.angles.iter().map(|&x| {
                let d = (x + omega - a).rem_euclid(TAU);
                d.min(TAU - d)
            }).fold(f64::INFINITY, f64::min)
        };
        prop_assume!(gap(phi + omega) > 1e-9 && gap(phi + omega + len) > 1e-9);
        let rot = prof.rotated(omega);
        prop_assert_eq!(rot.n_f(phi + omega, phi + omega + len), prof.n_f(phi, phi + len));
    }

    #[test]
    fn points_on_the_circle_are_equidistributed(k in 8usize..200) {
        let roots: Vec<Complex64> = (0..k).map(|m| Complex64::from_polar(1.0, TAU * m as f64 / k as f64)).collect();
        let prof = AngularProfile::from_roots(IntPolynomial::cyclotomic(1), &roots);
        for m in 0..k {
            let a = TAU * (m as f64 + 0.5) / k as f64;
            prop_assert_eq!(prof.n_f(0.0, a), m + 1);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn trinomial_bases_roundtrip_through_their_words(n in 3usize..60) {
        let beta = theta_n_inverse(n).unwrap();
        let exp = renyi_expansion(&beta, 10_000).unwrap();
        prop_assert_eq!(exp.word.get(0), Some(1));
        let back = beta_from_digits(&exp.word).unwrap();
        prop_assert!((back.to_f64() - beta.to_f64()).abs() < 1e-12);
        let c = c_word(&exp.word).unwrap();
        prop_assert!(is_admissible(&exp.word, &c) || exp.word.is_finite());
        prop_assert_eq!(dynamical_degree(&beta).unwrap(), n);
        let parry = parry_polynomial(&exp).unwrap();
        let mut minpoly = lenticulus_core::trinomial::theta_minpoly(n).unwrap().reciprocal();
        if minpoly.leading().sign() == Sign::Minus {
            minpoly = -minpoly;
        }
        prop_assert!(minpoly.divides(&parry.poly));
    }

    #[test]
    fn u_beta_convolution_vanishes(n in 3usize..40, order in 20usize..120) {
        let beta = theta_n_inverse(n).unwrap();
        let exp = renyi_expansion(&beta, 10_000).unwrap();
        let mut p = lenticulus_core::trinomial::theta_minpoly(n).unwrap().reciprocal();
        if p.leading().sign() == Sign::Minus {
            p = -p;
        }
        let u = u_beta_coeffs(&p, &exp.word, order).unwrap();
        let res = convolution_residuals(&p, &exp.word, u.known(), order).unwrap();
        prop_assert!(res.iter().all(Zero::is_zero));
    }
}
