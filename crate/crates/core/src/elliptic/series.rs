use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use crate::arith::{fmt_q, parse_q, Q};
use crate::error::{Error, Result};

/// Truncated q-expansion sum_{n < prec} a(n) q^n with exact coefficients.
///
/// Binary operations truncate to the smaller precision; nothing is ever
/// padded with zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QSeries {
    pub weight: i64,
    coeffs: Vec<Q>,
}

impl QSeries {
    pub fn new(weight: i64, coeffs: Vec<Q>) -> Self {
        QSeries { weight, coeffs }
    }

    pub fn zero(weight: i64, prec: usize) -> Self {
        QSeries { weight, coeffs: vec![Q::zero(); prec] }
    }

    /// Number of known coefficients: q^0 .. q^(prec-1).
    pub fn prec(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, n: usize) -> Option<&Q> {
        self.coeffs.get(n)
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn truncate(&self, prec: usize) -> Self {
        QSeries { weight: self.weight, coeffs: self.coeffs[..prec.min(self.prec())].to_vec() }
    }

    pub fn scale(&self, c: &Q) -> Self {
        QSeries { weight: self.weight, coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.prec().min(other.prec());
        let coeffs = (0..n).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect();
        QSeries { weight: self.weight, coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Q::from_integer(1.into())))
    }

    /// Cauchy product; weights add. Sums run over the nonzero coefficients
    /// of the sparser factor, in integers when both factors are integral.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.prec().min(other.prec());
        let (sparse, dense) = {
            let nz = |s: &Self| s.coeffs[..n].iter().filter(|c| !c.is_zero()).count();
            if nz(self) <= nz(other) {
                (self, other)
            } else {
                (other, self)
            }
        };
        let support: Vec<usize> = (0..n).filter(|&j| !sparse.coeffs[j].is_zero()).collect();
        let integral = |s: &Self| s.coeffs[..n].iter().all(|c| c.is_integer());
        let coeffs = if integral(sparse) && integral(dense) {
            let a: Vec<BigInt> = sparse.coeffs[..n].iter().map(|c| c.to_integer()).collect();
            let b: Vec<BigInt> = dense.coeffs[..n].iter().map(|c| c.to_integer()).collect();
            (0..n)
                .into_par_iter()
                .map(|i| {
                    let mut s = BigInt::zero();
                    for &j in support.iter().take_while(|&&j| j <= i) {
                        if !b[i - j].is_zero() {
                            s += &a[j] * &b[i - j];
                        }
                    }
                    Q::from_integer(s)
                })
                .collect()
        } else {
            (0..n)
                .into_par_iter()
                .map(|i| {
                    let mut s = Q::zero();
                    for &j in support.iter().take_while(|&&j| j <= i) {
                        if !dense.coeffs[i - j].is_zero() {
                            s += &sparse.coeffs[j] * &dense.coeffs[i - j];
                        }
                    }
                    s
                })
                .collect()
        };
        QSeries { weight: self.weight + other.weight, coeffs }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = QSeries::new(0, {
            let mut v = vec![Q::zero(); self.prec()];
            if !v.is_empty() {
                v[0] = Q::from_integer(1.into());
            }
            v
        });
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Index of the first nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Text form: header lines, then one `n:num/den` entry per coefficient.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "# format: qseries v1").unwrap();
        writeln!(s, "weight={}", self.weight).unwrap();
        writeln!(s, "truncation={}", self.prec()).unwrap();
        for (n, c) in self.coeffs.iter().enumerate() {
            writeln!(s, "{}:{}", n, fmt_q(c)).unwrap();
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let bad = |m: &str| Error::Parse(format!("qseries: {m}"));
        let mut lines = text.lines().filter(|l| !l.starts_with('#') && !l.trim().is_empty());
        let weight = lines
            .next()
            .and_then(|l| l.strip_prefix("weight="))
            .and_then(|w| w.parse().ok())
            .ok_or_else(|| bad("missing weight"))?;
        let prec: usize = lines
            .next()
            .and_then(|l| l.strip_prefix("truncation="))
            .and_then(|w| w.parse().ok())
            .ok_or_else(|| bad("missing truncation"))?;
        let mut coeffs = Vec::with_capacity(prec);
        for (i, line) in lines.enumerate() {
            let (n, c) = line.split_once(':').ok_or_else(|| bad(line))?;
            if n.parse::<usize>().ok() != Some(i) {
                return Err(bad("entries out of order"));
            }
            coeffs.push(parse_q(c).ok_or_else(|| bad(line))?);
        }
        if coeffs.len() != prec {
            return Err(bad("entry count does not match truncation"));
        }
        Ok(QSeries { weight, coeffs })
    }
}
