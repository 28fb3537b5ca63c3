use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::{cusp_dim, cusp_space_basis, hecke_tp, QSeries};
use crate::arith::{int_pow, primes_up_to, q_int, RootExt, Q};
use crate::error::{Error, Result};

/// Normalized Hecke eigenform f in S_{2k}(SL_2(Z)) with rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Eigenform {
    /// k, with f of weight 2k.
    pub k: i64,
    series: QSeries,
    ap: BTreeMap<u64, Q>,
}

const HECKE_CHECK_PRIMES: u64 = 13;

/// The unique normalized eigenform of weight `two_k`, which must have
/// k = two_k/2 odd and a one-dimensional cusp space.
pub fn eigenform(two_k: i64, prec: usize) -> Result<Eigenform> {
    if two_k % 2 != 0 || two_k < 4 {
        return Err(Error::BadWeight(two_k));
    }
    let k = two_k / 2;
    if k % 2 == 0 {
        return Err(Error::ParityGate { two_k, k });
    }
    let dim = cusp_dim(two_k);
    if dim != 1 {
        return Err(Error::DimensionGate { two_k, dim });
    }
    let basis = cusp_space_basis(two_k, prec)?;
    Eigenform::from_series(k, basis.into_iter().next().unwrap())
}

impl Eigenform {
    /// Normalizes `series` to a(1) = 1 and verifies the eigen-ratio for
    /// every p <= 13 the precision allows.
    pub fn from_series(k: i64, series: QSeries) -> Result<Self> {
        let a1 = series.coeff(1).cloned().ok_or(Error::Truncation { needed: 2, available: series.prec() })?;
        if a1.is_zero() {
            return Err(Error::ZeroLeading);
        }
        let f = Self::from_series_unchecked(k, series.scale(&a1.recip()));
        for p in primes_up_to(HECKE_CHECK_PRIMES) {
            if f.series.prec() < 2 * p as usize {
                break;
            }
            let tf = hecke_tp(&f.series, p)?;
            let lambda = f.series.coeff(p as usize).unwrap();
            for n in 0..tf.prec() {
                if tf.coeff(n).unwrap() != &(lambda * f.series.coeff(n).unwrap()) {
                    return Err(Error::NotEigen { p, n });
                }
            }
        }
        Ok(f)
    }

    /// Wraps a series without normalizing or checking anything; for
    /// constructing deliberately broken inputs.
    pub fn from_series_unchecked(k: i64, series: QSeries) -> Self {
        let ap = primes_up_to(series.prec().saturating_sub(1) as u64)
            .into_iter()
            .map(|p| (p, series.coeff(p as usize).unwrap().clone()))
            .collect();
        Eigenform { k, series: QSeries::new(2 * k, series.coeffs().to_vec()), ap }
    }

    pub fn weight(&self) -> i64 {
        2 * self.k
    }

    pub fn series(&self) -> &QSeries {
        &self.series
    }

    pub fn a(&self, n: usize) -> Option<&Q> {
        self.series.coeff(n)
    }

    pub fn ap(&self, p: u64) -> Result<&Q> {
        self.ap.get(&p).ok_or(Error::Truncation { needed: p as usize + 1, available: self.series.prec() })
    }

    pub fn satake(&self, p: u64) -> Result<SatakeSymbol> {
        SatakeSymbol::new(self, p)
    }
}

/// Power sums s_m = alpha_p^m + alpha_p^(-m) of the Satake parameter defined
/// by a(p) = p^(k-1/2) (alpha_p + 1/alpha_p), as elements of Q(sqrt p).
#[derive(Debug, Clone)]
pub struct SatakeSymbol {
    pub p: u64,
    pub k: i64,
    s1: RootExt,
}

impl SatakeSymbol {
    pub fn new(f: &Eigenform, p: u64) -> Result<Self> {
        let ap = f.ap(p)?;
        // p^(1/2 - k) = p^(-k) sqrt(p)
        let s1 = RootExt::half_power(p, 1 - 2 * f.k).scale(ap);
        Ok(SatakeSymbol { p, k: f.k, s1 })
    }

    /// s_0 .. s_upto via s_{m+1} = s_1 s_m - s_{m-1}.
    pub fn power_sums(&self, upto: usize) -> Vec<RootExt> {
        let mut out = vec![RootExt::rational(self.p, q_int(2))];
        if upto >= 1 {
            out.push(self.s1.clone());
        }
        for m in 1..upto {
            let next = &(&self.s1 * &out[m]) - &out[m - 1];
            out.push(next);
        }
        out
    }

    pub fn power_sum(&self, m: usize) -> RootExt {
        self.power_sums(m).pop().unwrap()
    }
}

pub fn satake_power_sum(f: &Eigenform, p: u64, m: usize) -> Result<RootExt> {
    Ok(f.satake(p)?.power_sum(m))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RamanujanReport {
    pub k: i64,
    pub bound: u64,
    pub checked: Vec<u64>,
    pub violation: Option<u64>,
}

impl RamanujanReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }

    pub fn ensure(&self) -> Result<()> {
        match self.violation {
            Some(p) => Err(Error::Ramanujan { p }),
            None => Ok(()),
        }
    }
}

/// Checks a(p)^2 <= 4 p^(2k-1) for all primes p <= bound.
pub fn ramanujan_gate(f: &Eigenform, bound: u64) -> Result<RamanujanReport> {
    let mut checked = Vec::new();
    let mut violation = None;
    for p in primes_up_to(bound) {
        let ap = f.ap(p)?;
        let lhs = ap * ap;
        let rhs = Q::from_integer(int_pow(p, (2 * f.k - 1) as u32) * 4);
        checked.push(p);
        if lhs > rhs {
            violation = Some(p);
            break;
        }
    }
    Ok(RamanujanReport { k: f.k, bound, checked, violation })
}

impl Eigenform {
    pub fn is_normalized(&self) -> bool {
        self.a(1).map(One::is_one).unwrap_or(false)
    }
}
