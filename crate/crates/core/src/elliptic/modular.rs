use num_traits::Zero;

use super::QSeries;
use crate::arith::{bernoulli, int_pow, is_prime, q_int, sigma, Q};
use crate::error::{Error, Result};

/// E_w = 1 - (2w / B_w) sum sigma_{w-1}(n) q^n.
pub fn eisenstein_series(weight: i64, prec: usize) -> Result<QSeries> {
    if weight < 4 || weight % 2 != 0 {
        return Err(Error::BadWeight(weight));
    }
    let c = -q_int(2 * weight) / bernoulli(weight as usize);
    let coeffs = (0..prec)
        .map(|n| {
            if n == 0 {
                q_int(1)
            } else {
                &c * Q::from_integer(sigma(weight as u32 - 1, n as u64))
            }
        })
        .collect();
    Ok(QSeries::new(weight, coeffs))
}

/// Dimension of M_w(SL_2(Z)).
pub fn modular_dim(weight: i64) -> usize {
    if weight < 0 || weight % 2 != 0 || weight == 2 {
        return 0;
    }
    let base = (weight / 12) as usize;
    if weight % 12 == 2 {
        base
    } else {
        base + 1
    }
}

/// Dimension of S_w(SL_2(Z)).
pub fn cusp_dim(weight: i64) -> usize {
    if weight < 12 {
        0
    } else {
        modular_dim(weight) - 1
    }
}

/// Delta = q prod (1 - q^n)^24 = q (eta^3 / q^(1/8))^8, using the sparse
/// expansion prod (1 - q^n)^3 = sum_j (-1)^j (2j+1) q^(j(j+1)/2).
pub fn delta(prec: usize) -> QSeries {
    let mut cube = vec![Q::zero(); prec];
    let mut j = 0usize;
    while j * (j + 1) / 2 < prec {
        let sign = if j.is_multiple_of(2) { 1 } else { -1 };
        cube[j * (j + 1) / 2] = q_int(sign * (2 * j as i64 + 1));
        j += 1;
    }
    let cube = QSeries::new(0, cube);
    let mut acc = QSeries::new(0, {
        let mut v = vec![Q::zero(); prec];
        if prec > 1 {
            v[1] = q_int(1);
        }
        v
    });
    for _ in 0..8 {
        acc = acc.mul(&cube);
    }
    QSeries::new(12, acc.coeffs().to_vec())
}

/// Reduced echelon basis of S_w built from Delta^c E_4^a E_6^b. Element i has
/// leading term q^(i+1) and vanishing coefficients at the other leading
/// positions.
pub fn cusp_space_basis(weight: i64, prec: usize) -> Result<Vec<QSeries>> {
    if weight % 2 != 0 {
        return Err(Error::BadWeight(weight));
    }
    let dim = cusp_dim(weight);
    if dim == 0 {
        return Ok(Vec::new());
    }
    if prec <= dim {
        return Err(Error::Truncation { needed: dim + 1, available: prec });
    }
    let d = delta(prec);
    let e4 = eisenstein_series(4, prec)?;
    let e6 = eisenstein_series(6, prec)?;
    let mut basis = Vec::with_capacity(dim);
    let mut c = 1;
    while 12 * c <= weight {
        let rest = weight - 12 * c;
        if rest == 0 {
            basis.push(d.pow(c as u32));
        } else if modular_dim(rest) == 1 {
            // M_rest is spanned by E_rest
            basis.push(d.pow(c as u32).mul(&eisenstein_series(rest, prec)?));
        } else if rest != 2 {
            let b = if rest % 4 == 2 { 1 } else { 0 };
            let a = (rest - 6 * b) / 4;
            basis.push(d.pow(c as u32).mul(&e4.pow(a as u32)).mul(&e6.pow(b as u32)));
        }
        c += 1;
    }
    debug_assert_eq!(basis.len(), dim);
    // leading terms are q^1, q^2, ... so the elimination is triangular
    for i in 0..dim {
        let lead = basis[i].coeff(i + 1).unwrap().clone();
        basis[i] = basis[i].scale(&lead.recip());
        for j in 0..dim {
            if j != i {
                let factor = basis[j].coeff(i + 1).unwrap().clone();
                if !factor.is_zero() {
                    basis[j] = basis[j].sub(&basis[i].scale(&factor));
                }
            }
        }
    }
    Ok(basis.into_iter().map(|f| QSeries::new(weight, f.coeffs().to_vec())).collect())
}

/// Level-one Hecke operator: b(n) = a(pn) + p^(w-1) a(n/p). The result has
/// floor(prec/p) coefficients.
pub fn hecke_tp(f: &QSeries, p: u64) -> Result<QSeries> {
    assert!(is_prime(p), "{p} is not prime");
    let p_us = p as usize;
    let out = f.prec() / p_us;
    if out == 0 {
        return Err(Error::Truncation { needed: p_us, available: f.prec() });
    }
    let pw = Q::from_integer(int_pow(p, (f.weight - 1) as u32));
    let coeffs = (0..out)
        .map(|n| {
            let mut b = f.coeff(p_us * n).unwrap().clone();
            if n % p_us == 0 {
                b += &pw * f.coeff(n / p_us).unwrap();
            }
            b
        })
        .collect();
    Ok(QSeries::new(f.weight, coeffs))
}
