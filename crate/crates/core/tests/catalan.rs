use tqft::catalan::*;
use tqft::eco::CountTable;
use tqft::scalar::{frac, int};
use tqft::toprec::{catalan_local_curve, toprec_run};
use tqft::Error;

#[test]
fn f_series_small_coefficients() {
    let f01 = f_series(0, 1, 12).unwrap();
    let catalan = [1, 2, 5, 14, 42, 132];
    for (m, c) in (1..=6).zip(catalan) {
        assert_eq!(f01[&vec![2 * m]], frac(c, 2 * m as i64));
    }
    assert!(!f01.contains_key(&vec![3]));
    let f11 = f_series(1, 1, 4).unwrap();
    assert_eq!(f11.keys().next(), Some(&vec![4]));
    assert_eq!(f11[&vec![4]], frac(1, 4));
    let f02 = f_series(0, 2, 3).unwrap();
    assert_eq!(f02.keys().next(), Some(&vec![1, 1]));
    assert_eq!(f02[&vec![1, 1]], int(1));
}

#[test]
fn xt_substitution_identities() {
    let x = XtSubstitution::x_of_t();
    // x (t^2 - 1) = 2 (t^2 + 1)
    let lhs = x.mul(&RatFunc::poly(Poly::from_ints(&[-1, 0, 1])));
    assert_eq!(lhs, RatFunc::poly(Poly::from_ints(&[2, 0, 2])));
    // x -> 2 as t -> oo: equal leading coefficients ratio
    assert_eq!(x.numerator().degree(), x.denominator().degree());
    assert_eq!(x.numerator().lead() / x.denominator().lead(), int(2));
    // poles at t = 1 and t = -1
    assert!(x.eval(&int(1)).is_err());
    assert!(x.eval(&int(-1)).is_err());
    // the expansion branch: t = -1 at u = 0 and x(t(u)) = 1/u
    let xt = xt_substitution(10).unwrap();
    assert_eq!(xt.t_power(1).unwrap().coeff(0).unwrap(), int(-1));
    let t = xt.t_power(1).unwrap();
    let z = xt.t_power(0).unwrap().sub(&t).scale(&int(-1)).mul(&xt.t_power(0).unwrap().add(&t).inv(11).unwrap());
    // z = (t-1)/(t+1) and 1/z = w
    assert_eq!(z.mul(xt.inverse_z()).sub(&xt.t_power(0).unwrap()).valuation(), None);
    assert_eq!(XtSubstitution::dt_dx().mul(&x.derivative()), RatFunc::constant(int(1)));
}

#[test]
fn laurent_polynomial_shapes() {
    let mut table = CountTable::new();
    for (g, n) in [(0, 3), (1, 1), (1, 2), (0, 4)] {
        let (f, report) = f_polynomial_with(&mut table, g, n, FIT_SIZE_GUARD).unwrap();
        let top = 6 * g as i64 - 6 + 3 * n as i64;
        assert!(f.is_symmetric());
        assert_eq!(f.top_degree(), Some(top));
        assert!(report.surplus_per_variable >= SURPLUS);
        for (e, _) in f.homogeneous_part(top).terms() {
            assert!(e.iter().all(|k| k.rem_euclid(2) == 1), "({g},{n}) top exponent {e:?}");
        }
    }
    // (0,3): the top part is a multiple of t1 t2 t3
    let f03 = f_polynomial(0, 3).unwrap();
    let top: Vec<_> = f03.homogeneous_part(3).terms().map(|(e, c)| (e.clone(), c.clone())).collect();
    assert_eq!(top, vec![(vec![1, 1, 1], frac(-1, 16))]);
}

#[test]
fn unstable_and_guarded_fits_are_rejected() {
    assert!(matches!(f_polynomial(0, 2), Err(Error::Input(_))));
    assert!(matches!(f_polynomial(0, 6), Err(Error::Guard(_))));
    assert!(matches!(f_polynomial(0, 5), Err(Error::Guard(_))));
}

#[test]
fn oracle_base_cases() {
    assert_eq!(dvv_oracle(0, &[0, 0, 0]), int(1));
    assert_eq!(dvv_oracle(1, &[1]), frac(1, 24));
    assert_eq!(dvv_oracle(0, &[0, 0, 0, 1]), int(1));
    assert_eq!(dvv_oracle(0, &[0, 0, 0, 0, 2]), int(1));
    assert_eq!(dvv_oracle(0, &[0, 0, 1, 1, 0]), int(2));
    assert_eq!(dvv_oracle(1, &[0, 2]), frac(1, 24));
    assert_eq!(dvv_oracle(2, &[4]), frac(1, 1152));
    assert_eq!(dvv_oracle(2, &[2, 3]), frac(29, 5760));
    assert_eq!(dvv_oracle(0, &[0, 0]), int(0));
    assert_eq!(dvv_oracle(1, &[2]), int(0));
}

#[test]
fn intersection_numbers_match_oracle() {
    let mut table = CountTable::new();
    for (g, n) in [(0, 3), (1, 1), (0, 4), (1, 2), (2, 1), (1, 3)] {
        let (f, _) = f_polynomial_with(&mut table, g, n, FIT_SIZE_GUARD).unwrap();
        let it = intersections_from_polynomial(g, n, &f).unwrap();
        for d in dimension_profiles(g, n) {
            assert_eq!(it.get(&d), dvv_oracle(g, &d), "({g},{n}) {d:?}");
        }
    }
}

#[test]
fn toprec_leading_poles_give_the_same_numbers() {
    let tr = toprec_run(&catalan_local_curve(20), 3).unwrap();
    let mut table = CountTable::new();
    for (g, n) in [(0, 3), (1, 1), (0, 4), (1, 2), (2, 1), (1, 3)] {
        let (f, _) = f_polynomial_with(&mut table, g, n, FIT_SIZE_GUARD).unwrap();
        let from_f = intersections_from_polynomial(g, n, &f).unwrap();
        for disc in 0..2 {
            let from_tr = intersections_from_toprec(&tr, g, n, disc).unwrap();
            assert_eq!(from_tr, from_f, "({g},{n}) disc {disc}");
        }
    }
}

#[test]
fn toprec_matches_derivatives_of_f() {
    // the recursion kernel carries no 1/2, so W_{g,n} = 2^(2g-2+n) d..dF on principal parts
    let tr = toprec_run(&catalan_local_curve(16), 1).unwrap();
    for (g, n) in [(1, 1), (0, 3)] {
        let pp = principal_part_at_branch(g, &f_polynomial(g, n).unwrap()).unwrap();
        let w = tr.get(g, n).unwrap();
        assert_eq!(pp.num_terms(), w.num_terms());
        for (e, c) in pp.terms() {
            assert_eq!(w.plain_coefficient(e), &c[0] * int(2), "({g},{n}) {e:?}");
        }
    }
}

#[test]
fn unstable_terms_match_counts() {
    let mut table = CountTable::new();
    assert!(f01_matches_counts(&mut table, 24).unwrap());
    assert!(f02_matches_counts(&mut table, 12).unwrap());
}

#[test]
fn wkb_residuals_vanish() {
    let report = wkb_report(2).unwrap();
    assert_eq!(report.len(), 3);
    assert!(report.iter().all(|o| o.vanishes && o.residual.is_none()));
    let r = wkb_residual(3).unwrap();
    assert!(r.iter().all(RatFunc::is_zero));
}

#[test]
fn wkb_detects_a_wrong_unstable_term() {
    // drop the F_{0,2} contribution
    let s = WkbSeries::from_derivatives(vec![s0_prime(), RatFunc::zero()]).unwrap();
    assert!(s.residual(0).unwrap().is_zero());
    assert!(!s.residual(1).unwrap().is_zero());
    assert!(s.residual(2).is_err());
    assert!(matches!(wkb_residual(9), Err(Error::Guard(_))));
}

#[test]
fn semiclassical_relation() {
    // S_0'^2 + x S_0' + 1 = 0
    let y = s0_prime();
    let r = y.mul(&y).add(&XtSubstitution::x_of_t().mul(&y)).add(&RatFunc::constant(int(1)));
    assert!(r.is_zero());
}

#[test]
fn rational_function_arithmetic() {
    let a = RatFunc::new(Poly::from_ints(&[-1, 0, 1]), Poly::from_ints(&[1, 1])).unwrap();
    assert_eq!(a, RatFunc::poly(Poly::from_ints(&[-1, 1])));
    let b = RatFunc::monomial(-2, int(3));
    assert_eq!(b.mul(&RatFunc::monomial(2, int(1))), RatFunc::constant(int(3)));
    assert_eq!(b.derivative(), RatFunc::monomial(-3, int(-6)));
    assert_eq!(a.sub(&a), RatFunc::zero());
    assert!(a.div(&RatFunc::zero()).is_err());
    assert_eq!(b.eval(&int(2)).unwrap(), frac(3, 4));
}

#[test]
fn laurent_json_round_trip() {
    let f = f_polynomial(1, 1).unwrap();
    let text = serde_json::to_string(&f.to_spec()).unwrap();
    let back = LaurentPolynomial::from_spec(&serde_json::from_str(&text).unwrap()).unwrap();
    assert_eq!(back, f);
    let rec = intersection_numbers(1, 1).unwrap().records();
    let text = serde_json::to_string(&rec).unwrap();
    assert_eq!(text, r#"[{"g":1,"n":1,"d":[1],"value":"1/24"}]"#);
}
