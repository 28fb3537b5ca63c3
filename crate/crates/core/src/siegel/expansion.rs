use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::Zero;
use rayon::prelude::*;

use super::{eisenstein_coeff, reduced, reduced_indices, FourierIndex};
use crate::arith::{fmt_q, parse_q, Q};
use crate::elliptic::QSeries;
use crate::error::{Error, Result};

/// Anything that can report degree-2 Fourier coefficients.
pub trait FourierCoefficients: Sync {
    fn weight(&self) -> i64;

    /// `None` when T is outside the known range. Coefficients at indices
    /// that are not positive semi-definite are zero.
    fn coefficient(&self, t: &FourierIndex) -> Result<Option<Q>>;
}

/// Finite table of coefficients on GL_2(Z)-reduced indices with
/// n + m <= trace_bound. Reduced indices in range but absent from the table
/// have coefficient zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SiegelExpansion {
    pub weight: i64,
    pub trace_bound: i64,
    table: BTreeMap<FourierIndex, Q>,
}

impl SiegelExpansion {
    pub fn new(weight: i64, trace_bound: i64, table: BTreeMap<FourierIndex, Q>) -> Result<Self> {
        for t in table.keys() {
            if !t.is_reduced() || !t.is_psd() || t.trace() > trace_bound {
                return Err(Error::OutOfRange(*t));
            }
        }
        Ok(SiegelExpansion { weight, trace_bound, table })
    }

    pub fn empty(weight: i64, trace_bound: i64) -> Self {
        SiegelExpansion { weight, trace_bound, table: BTreeMap::new() }
    }

    pub fn table(&self) -> &BTreeMap<FourierIndex, Q> {
        &self.table
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.table.values().all(Zero::is_zero)
    }

    pub fn get(&self, t: &FourierIndex) -> Result<Q> {
        self.coefficient(t)?.ok_or(Error::OutOfRange(*t))
    }

    /// Text form: version line, header, then `n r m num/den` sorted by (n, r, m).
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "# format: siegel-expansion v1").unwrap();
        writeln!(s, "group=Sp4").unwrap();
        writeln!(s, "weight={}", self.weight).unwrap();
        writeln!(s, "trace_bound={}", self.trace_bound).unwrap();
        for (t, c) in &self.table {
            writeln!(s, "{} {} {} {}", t.n, t.r, t.m, fmt_q(c)).unwrap();
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let bad = |m: &str| Error::Parse(format!("siegel expansion: {m}"));
        let mut lines = text.lines().filter(|l| !l.starts_with('#') && !l.trim().is_empty());
        let mut header = |key: &str| -> Result<String> {
            lines
                .next()
                .and_then(|l| l.strip_prefix(key))
                .and_then(|l| l.strip_prefix('='))
                .map(str::to_string)
                .ok_or_else(|| bad(&format!("missing {key}")))
        };
        if header("group")? != "Sp4" {
            return Err(bad("group must be Sp4"));
        }
        let weight = header("weight")?.parse().map_err(|_| bad("weight"))?;
        let trace_bound = header("trace_bound")?.parse().map_err(|_| bad("trace_bound"))?;
        let mut table = BTreeMap::new();
        for line in lines {
            let f: Vec<&str> = line.split_whitespace().collect();
            if f.len() != 4 {
                return Err(bad(line));
            }
            let num = |s: &str| s.parse::<i64>().map_err(|_| bad(line));
            let t = FourierIndex::new(num(f[0])?, num(f[1])?, num(f[2])?);
            table.insert(t, parse_q(f[3]).ok_or_else(|| bad(line))?);
        }
        SiegelExpansion::new(weight, trace_bound, table)
    }
}

impl FourierCoefficients for SiegelExpansion {
    fn weight(&self) -> i64 {
        self.weight
    }

    fn coefficient(&self, t: &FourierIndex) -> Result<Option<Q>> {
        if !t.is_psd() {
            return Ok(Some(Q::zero()));
        }
        let red = reduced(t)?;
        if red.trace() > self.trace_bound {
            return Ok(None);
        }
        Ok(Some(self.table.get(&red).cloned().unwrap_or_else(Q::zero)))
    }
}

/// The degree-2 Siegel Eisenstein series of a given weight, evaluated on
/// demand (unbounded range).
#[derive(Debug, Clone, Copy)]
pub struct SiegelEisenstein {
    pub weight: i64,
}

impl FourierCoefficients for SiegelEisenstein {
    fn weight(&self) -> i64 {
        self.weight
    }

    fn coefficient(&self, t: &FourierIndex) -> Result<Option<Q>> {
        if !t.is_psd() {
            return Ok(Some(Q::zero()));
        }
        eisenstein_coeff(self.weight, t).map(Some)
    }
}

/// Tabulates any coefficient source on all reduced indices up to a trace
/// bound.
pub fn tabulate<F: FourierCoefficients>(src: &F, trace_bound: i64, definite_only: bool) -> Result<SiegelExpansion> {
    let idx = reduced_indices(trace_bound, definite_only);
    let values: Vec<Q> = idx
        .par_iter()
        .map(|t| src.coefficient(t)?.ok_or(Error::OutOfRange(*t)))
        .collect::<Result<_>>()?;
    Ok(SiegelExpansion {
        weight: src.weight(),
        trace_bound,
        table: idx.into_iter().zip(values).collect(),
    })
}

/// Eisenstein series of weight l tabulated on every reduced index of trace
/// at most `trace_bound`.
pub fn eisenstein_expansion(weight: i64, trace_bound: i64) -> Result<SiegelExpansion> {
    tabulate(&SiegelEisenstein { weight }, trace_bound, false)
}

/// Siegel Phi-operator: sum_n A((n,0,0)) q^n for n <= trace_bound.
pub fn phi_operator(f: &SiegelExpansion) -> QSeries {
    let coeffs = (0..=f.trace_bound.max(0))
        .map(|n| f.coefficient(&FourierIndex::new(n, 0, 0)).unwrap().unwrap_or_else(Q::zero))
        .collect();
    QSeries::new(f.weight, coeffs)
}
