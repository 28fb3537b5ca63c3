use std::fmt;
use std::fmt::Write as _;

use num_traits::Zero;

use crate::arith::{fmt_q, parse_q, RootExt, Q};
use crate::error::{Error, Result};

/// Symmetric Laurent polynomial sum_m c_m (X^m + X^-m) with the m = 0 term
/// counted once. Coefficients lie in Q(sqrt p) for the prime p the
/// polynomial belongs to. Trailing zero coefficients are trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymLaurent {
    p: u64,
    coeffs: Vec<RootExt>,
}

impl SymLaurent {
    pub fn new(p: u64, mut coeffs: Vec<RootExt>) -> Self {
        assert!(coeffs.iter().all(|c| c.radicand() == p), "coefficients must lie in Q(sqrt {p})");
        while coeffs.last().is_some_and(RootExt::is_zero) {
            coeffs.pop();
        }
        SymLaurent { p, coeffs }
    }

    pub fn from_rational(p: u64, coeffs: Vec<Q>) -> Self {
        Self::new(p, coeffs.into_iter().map(|c| RootExt::rational(p, c)).collect())
    }

    pub fn one(p: u64) -> Self {
        SymLaurent { p, coeffs: vec![RootExt::one(p)] }
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == RootExt::one(self.p)
    }

    /// Highest m with c_m != 0 (0 for constants and for the zero polynomial).
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, m: usize) -> RootExt {
        self.coeffs.get(m).cloned().unwrap_or_else(|| RootExt::zero(self.p))
    }

    pub fn coeffs(&self) -> &[RootExt] {
        &self.coeffs
    }

    /// Coefficient of X^j in the expanded Laurent polynomial.
    pub fn laurent_coeff(&self, j: i64) -> RootExt {
        self.coeff(j.unsigned_abs() as usize)
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().all(RootExt::is_rational)
    }

    /// Evaluates at a Satake parameter given its power sums
    /// s_m = alpha^m + alpha^-m, m = 0..=degree.
    pub fn eval_power_sums(&self, sums: &[RootExt]) -> RootExt {
        assert!(sums.len() > self.degree(), "need power sums up to {}", self.degree());
        let mut acc = RootExt::zero(self.p);
        for (m, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            acc = if m == 0 { acc + c.clone() } else { acc + c * &sums[m] };
        }
        acc
    }

    /// Evaluates at X = p^(half_exp / 2).
    pub fn eval_half_power(&self, half_exp: i64) -> RootExt {
        let p = self.p;
        let sums: Vec<RootExt> = (0..=self.degree() as i64)
            .map(|m| RootExt::half_power(p, m * half_exp) + RootExt::half_power(p, -m * half_exp))
            .collect();
        self.eval_power_sums(&sums)
    }

    /// Text form: header with the prime, then `m rational surd` per
    /// coefficient c_m = rational + surd * sqrt(p).
    pub fn to_text(&self) -> String {
        let mut s = String::from("# format: sym-laurent v1\n");
        writeln!(s, "p={}", self.p).unwrap();
        for (m, c) in self.coeffs.iter().enumerate() {
            writeln!(s, "{m} {} {}", fmt_q(&c.rational), fmt_q(&c.surd)).unwrap();
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.starts_with('#') && !l.trim().is_empty());
        let p: u64 = lines
            .next()
            .and_then(|l| l.strip_prefix("p="))
            .and_then(|v| v.parse().ok())
            .ok_or_else(|| Error::Parse("sym-laurent: missing p".into()))?;
        let mut coeffs = Vec::new();
        for line in lines {
            let bad = || Error::Parse(format!("sym-laurent line {line:?}"));
            let f: Vec<&str> = line.split_whitespace().collect();
            if f.len() != 3 || f[0].parse::<usize>().ok() != Some(coeffs.len()) {
                return Err(bad());
            }
            coeffs.push(RootExt::new(p, parse_q(f[1]).ok_or_else(bad)?, parse_q(f[2]).ok_or_else(bad)?));
        }
        Ok(SymLaurent::new(p, coeffs))
    }
}

impl fmt::Display for SymLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (m, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let c = if c.surd.is_zero() { c.rational.to_string() } else { format!("({c})") };
            match m {
                0 => write!(f, "{c}")?,
                _ => write!(f, "{c}*(X^{m} + X^-{m})")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}
