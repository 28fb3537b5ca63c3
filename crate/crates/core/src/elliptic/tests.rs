use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::*;
use crate::arith::{int_pow, q_int, RootExt, Q};
use crate::error::Error;

#[test]
fn eisenstein_first_coefficients() {
    let e4 = eisenstein_series(4, 5).unwrap();
    let e6 = eisenstein_series(6, 5).unwrap();
    assert_eq!(e4.coeff(1), Some(&q_int(240)));
    assert_eq!(e6.coeff(1), Some(&q_int(-504)));
    for w in [4, 6, 8, 10, 12, 14] {
        assert!(eisenstein_series(w, 3).unwrap().coeff(0).unwrap().is_one());
    }
    assert!(matches!(eisenstein_series(5, 3), Err(Error::BadWeight(5))));
    assert!(matches!(eisenstein_series(2, 3), Err(Error::BadWeight(2))));
}

#[test]
fn delta_from_e4_e6() {
    let e4 = eisenstein_series(4, 10).unwrap();
    let e6 = eisenstein_series(6, 10).unwrap();
    let d = e4.pow(3).sub(&e6.pow(2));
    assert!(d.coeff(0).unwrap().is_zero());
    assert_eq!(d.coeff(1), Some(&q_int(1728)));
    let tau: Vec<i64> = vec![0, 1, -24, 252, -1472, 4830, -6048, -16744, 84480, -113643];
    let delta = delta(10);
    for (n, t) in tau.iter().enumerate() {
        assert_eq!(delta.coeff(n), Some(&q_int(*t)));
    }
    let e4 = eisenstein_series(4, 80).unwrap();
    let e6 = eisenstein_series(6, 80).unwrap();
    let via_eisenstein = e4.pow(3).sub(&e6.pow(2)).scale(&(q_int(1) / q_int(1728)));
    assert_eq!(super::delta(80).coeffs(), via_eisenstein.coeffs());
}

#[test]
fn products_agree_on_rational_and_integral_paths() {
    let e4 = eisenstein_series(4, 40).unwrap();
    let half = e4.scale(&(q_int(1) / q_int(2)));
    assert_eq!(half.mul(&e4).scale(&q_int(2)), e4.mul(&e4));
    assert_eq!(e4.pow(0).mul(&e4), e4.mul(&e4.pow(0)));
}

// dim M_w from the generating function 1/((1-x^4)(1-x^6)).
fn dim_oracle(w: i64) -> usize {
    (0..=w / 6).filter(|b| (w - 6 * b) % 4 == 0).count()
}

#[test]
fn dimension_formula_against_monomial_count() {
    for w in (0..=120).step_by(2) {
        assert_eq!(modular_dim(w), dim_oracle(w), "weight {w}");
    }
    for w in (12..=60).step_by(2) {
        let basis = cusp_space_basis(w, 12).unwrap();
        assert_eq!(basis.len(), cusp_dim(w), "weight {w}");
        for (i, f) in basis.iter().enumerate() {
            assert!(f.coeff(0).unwrap().is_zero());
            for j in 0..basis.len() {
                let expect = if i == j { Q::one() } else { Q::zero() };
                assert_eq!(f.coeff(j + 1), Some(&expect));
            }
        }
    }
}

#[test]
fn cusp_basis_examples() {
    let b12 = cusp_space_basis(12, 10).unwrap();
    assert_eq!(b12.len(), 1);
    assert_eq!(b12[0], delta(10));
    assert!(cusp_space_basis(10, 10).unwrap().is_empty());
    assert_eq!(cusp_space_basis(26, 10).unwrap().len(), 1);
}

#[test]
fn hecke_t2_on_delta() {
    let d = delta(60);
    let t2 = hecke_tp(&d, 2).unwrap();
    assert_eq!(t2.prec(), 30);
    assert_eq!(t2, d.truncate(30).scale(&q_int(-24)));
    let z = QSeries::zero(12, 20);
    assert!(hecke_tp(&z, 3).unwrap().is_zero());
    assert!(matches!(hecke_tp(&d.truncate(1), 2), Err(Error::Truncation { .. })));
}

#[test]
fn hecke_t3_weight16_constant_ratio() {
    let f = cusp_space_basis(16, 90).unwrap().remove(0);
    let t3 = hecke_tp(&f, 3).unwrap();
    let ratio = t3.coeff(1).unwrap() / f.coeff(1).unwrap();
    for n in 1..30 {
        assert_eq!(t3.coeff(n).unwrap(), &(&ratio * f.coeff(n).unwrap()), "n = {n}");
    }
}

#[test]
fn hecke_operators_commute() {
    let f = cusp_space_basis(24, 36).unwrap().remove(1);
    let a = hecke_tp(&hecke_tp(&f, 2).unwrap(), 3).unwrap();
    let b = hecke_tp(&hecke_tp(&f, 3).unwrap(), 2).unwrap();
    assert_eq!(a, b);
}

#[test]
fn eigenforms_and_gates() {
    for (two_k, a2) in [(18, -528), (22, -288), (26, -48)] {
        let f = eigenform(two_k, 40).unwrap();
        assert!(f.is_normalized());
        assert_eq!(f.a(2), Some(&q_int(a2)));
        let k = f.k as u32;
        assert_eq!(f.a(6).unwrap(), &(f.a(2).unwrap() * f.a(3).unwrap()));
        assert_eq!(
            f.a(4).unwrap(),
            &(f.a(2).unwrap() * f.a(2).unwrap() - Q::from_integer(int_pow(2, 2 * k - 1)))
        );
    }
    assert_eq!(eigenform(12, 20).unwrap_err(), Error::ParityGate { two_k: 12, k: 6 });
    assert_eq!(eigenform(20, 20).unwrap_err(), Error::ParityGate { two_k: 20, k: 10 });
    assert_eq!(eigenform(30, 20).unwrap_err(), Error::DimensionGate { two_k: 30, dim: 2 });
    assert_eq!(eigenform(14, 20).unwrap_err(), Error::DimensionGate { two_k: 14, dim: 0 });
}

#[test]
fn non_eigen_series_rejected() {
    let basis = cusp_space_basis(24, 30).unwrap();
    let g = basis[0].add(&basis[1]);
    assert!(matches!(Eigenform::from_series(12, g), Err(Error::NotEigen { .. })));
}

#[test]
fn satake_power_sum_examples() {
    let f = eigenform(18, 40).unwrap();
    for p in [2u64, 3, 5, 7] {
        let s = f.satake(p).unwrap().power_sums(3);
        assert_eq!(s[0], RootExt::rational(p, q_int(2)));
        let expect_s1 = RootExt::half_power(p, 1 - 2 * f.k).scale(f.ap(p).unwrap());
        assert_eq!(s[1], expect_s1);
        assert_eq!(s[2], &(&s[1] * &s[1]) - &RootExt::rational(p, q_int(2)));
    }
}

// t_m = p^{m(k-1/2)} s_m satisfies t_{m+1} = a(p) t_m - p^{2k-1} t_{m-1} over Z.
#[test]
fn satake_scaled_power_sums_are_integral() {
    for two_k in [18, 22, 26] {
        let f = eigenform(two_k, 40).unwrap();
        for p in [2u64, 3, 5] {
            let ap = f.ap(p).unwrap().to_integer();
            let pk = int_pow(p, (2 * f.k - 1) as u32);
            let mut t: Vec<BigInt> = vec![BigInt::from(2), ap.clone()];
            for m in 1..8 {
                let next = &ap * &t[m] - &pk * &t[m - 1];
                t.push(next);
            }
            let sums = f.satake(p).unwrap().power_sums(8);
            for (m, s) in sums.iter().enumerate() {
                let scaled = &RootExt::half_power(p, m as i64 * (2 * f.k - 1)) * s;
                assert_eq!(scaled, RootExt::rational(p, Q::from_integer(t[m].clone())), "m = {m}");
                if m % 2 == 0 {
                    assert!(s.is_rational());
                }
            }
        }
    }
}

#[test]
fn ramanujan_gate_cases() {
    let f = eigenform(18, 128).unwrap();
    let r = ramanujan_gate(&f, 100).unwrap();
    assert!(r.passed());
    assert_eq!(r.checked.len(), 25);

    let mut coeffs = vec![Q::zero(); 10];
    coeffs[1] = Q::one();
    coeffs[2] = q_int(1_000_000);
    let fake = Eigenform::from_series_unchecked(9, QSeries::new(18, coeffs));
    let r = ramanujan_gate(&fake, 7).unwrap();
    assert_eq!(r.violation, Some(2));
    assert_eq!(r.ensure(), Err(Error::Ramanujan { p: 2 }));

    let r = ramanujan_gate(&f, 1).unwrap();
    assert!(r.passed() && r.checked.is_empty());
}

#[test]
fn qseries_text_roundtrip() {
    let f = eigenform(22, 12).unwrap();
    let text = f.series().to_text();
    assert!(text.starts_with("# format: qseries v1\nweight=22\ntruncation=12\n0:0/1\n1:1/1\n2:-288/1\n"));
    assert_eq!(&QSeries::from_text(&text).unwrap(), f.series());
    assert!(QSeries::from_text("weight=4\ntruncation=2\n0:1/1\n").is_err());
}

#[test]
fn truncation_rule_is_min() {
    let a = eisenstein_series(4, 10).unwrap();
    let b = eisenstein_series(6, 7).unwrap();
    assert_eq!(a.mul(&b).prec(), 7);
    assert_eq!(a.add(&b).prec(), 7);
    assert_eq!(a.mul(&b).weight, 10);
}
