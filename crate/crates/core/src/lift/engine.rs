use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::Zero;
use rayon::prelude::*;

use super::local::{disc_primes, index_split, local_key, local_poly};
use crate::arith::{dirichlet_l_neg, RootExt, Q};
use crate::elliptic::{ramanujan_gate, Eigenform};
use crate::error::{Error, Result};
use crate::siegel::{
    eisenstein_coeff_lnorm, reduced_by_disc, reduced_indices, FourierCoefficients, FourierIndex, SiegelExpansion,
};

/// Source of Satake power sums alpha_p^m + alpha_p^-m in Q(sqrt p), together
/// with the half-weight k of the lift formula.
pub trait SatakeSource: Sync {
    fn k(&self) -> i64;
    fn power_sums(&self, p: u64, upto: usize) -> Result<Vec<RootExt>>;
}

impl SatakeSource for Eigenform {
    fn k(&self) -> i64 {
        self.k
    }

    fn power_sums(&self, p: u64, upto: usize) -> Result<Vec<RootExt>> {
        Ok(self.satake(p)?.power_sums(upto))
    }
}

/// The substitution alpha_p = p^(k-1/2), under which the lift formula
/// collapses to the Eisenstein coefficient of weight k+1.
#[derive(Debug, Clone, Copy)]
pub struct EisensteinDegeneration {
    pub k: i64,
}

impl SatakeSource for EisensteinDegeneration {
    fn k(&self) -> i64 {
        self.k
    }

    fn power_sums(&self, p: u64, upto: usize) -> Result<Vec<RootExt>> {
        let x = 2 * self.k - 1;
        Ok((0..=upto as i64).map(|m| RootExt::half_power(p, m * x) + RootExt::half_power(p, -m * x)).collect())
    }
}

/// Which primes enter the local product of the coefficient formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ProductReading {
    /// Every prime dividing D_T.
    AllDiscPrimes,
    /// Primes dividing the conductor f_T.
    Conductor,
    /// Primes dividing the fundamental discriminant of T.
    Fundamental,
}

impl ProductReading {
    pub const ALL: [ProductReading; 3] =
        [ProductReading::AllDiscPrimes, ProductReading::Conductor, ProductReading::Fundamental];

    fn primes(&self, t: &FourierIndex) -> Result<Vec<u64>> {
        let (d, f) = index_split(t)?;
        Ok(disc_primes(t)
            .into_iter()
            .filter(|&p| match self {
                ProductReading::AllDiscPrimes => true,
                ProductReading::Conductor => f % p == 0,
                ProductReading::Fundamental => d % p as i64 == 0,
            })
            .collect())
    }
}

/// Primes and local polynomial degrees used for one coefficient.
pub type Provenance = Vec<(u64, usize)>;

/// L(1-k, chi_T) f_T^(k-1/2) prod_p F_p(T; alpha_p), with each prime's
/// contribution p^(b(k-1/2)) F_p(T; alpha_p) required to be rational.
pub fn lift_formula<S: SatakeSource>(src: &S, t: &FourierIndex, reading: ProductReading) -> Result<(Q, Provenance)> {
    let k = src.k();
    let (d, _) = index_split(t)?;
    let mut acc = dirichlet_l_neg(k as u32, d);
    let mut provenance = Vec::new();
    for p in reading.primes(t)? {
        let key = local_key(t, p)?;
        let poly = local_poly(&key)?;
        let sums = src.power_sums(p, poly.degree())?;
        let value = RootExt::half_power(p, key.conductor_ord as i64 * (2 * k - 1)) * poly.eval_power_sums(&sums);
        let value = value.as_rational().ok_or(Error::HalfPowerResidue { t: *t, p })?;
        acc *= value;
        provenance.push((p, poly.degree()));
    }
    Ok((acc, provenance))
}

/// The degree-2 lift of a normalized Hecke eigenform f in S_2k with k odd;
/// it has weight k+1 and is supported on positive definite indices.
#[derive(Debug, Clone)]
pub struct Lift {
    f: Eigenform,
}

impl Lift {
    /// Checks the parity gate and the Ramanujan bound at every prime the
    /// eigenform's precision covers.
    pub fn new(f: &Eigenform) -> Result<Self> {
        if f.k % 2 == 0 {
            return Err(Error::ParityGate { two_k: 2 * f.k, k: f.k });
        }
        ramanujan_gate(f, f.series().prec().saturating_sub(1) as u64)?.ensure()?;
        Ok(Lift { f: f.clone() })
    }

    pub fn eigenform(&self) -> &Eigenform {
        &self.f
    }

    pub fn weight(&self) -> i64 {
        self.f.k + 1
    }

    pub fn coeff(&self, t: &FourierIndex) -> Result<Q> {
        self.coeff_with_provenance(t).map(|(c, _)| c)
    }

    pub fn coeff_with_provenance(&self, t: &FourierIndex) -> Result<(Q, Provenance)> {
        lift_formula(&self.f, t, ProductReading::AllDiscPrimes)
    }

    /// Coefficients on all reduced positive definite T with trace at most
    /// `trace_bound`; other reduced indices in range have coefficient zero.
    pub fn expand(&self, trace_bound: i64) -> Result<LiftExpansion> {
        let idx = reduced_indices(trace_bound, true);
        if idx.is_empty() {
            return Err(Error::EmptyExpansion(trace_bound));
        }
        let values: Vec<(Q, Provenance)> =
            idx.par_iter().map(|t| self.coeff_with_provenance(t)).collect::<Result<_>>()?;
        if values.iter().all(|(c, _)| c.is_zero()) {
            return Err(Error::Structural(format!("lift vanishes up to trace {trace_bound}")));
        }
        let mut table = BTreeMap::new();
        let mut provenance = BTreeMap::new();
        for (t, (c, prov)) in idx.into_iter().zip(values) {
            table.insert(t, c);
            provenance.insert(t, prov);
        }
        Ok(LiftExpansion { expansion: SiegelExpansion::new(self.weight(), trace_bound, table)?, provenance })
    }
}

impl FourierCoefficients for Lift {
    fn weight(&self) -> i64 {
        Lift::weight(self)
    }

    fn coefficient(&self, t: &FourierIndex) -> Result<Option<Q>> {
        if !t.is_positive_definite() {
            return Ok(Some(Q::zero()));
        }
        self.coeff(t).map(Some)
    }
}

/// A lift expansion together with, per index, the primes interpolated and
/// the degrees of their local polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftExpansion {
    pub expansion: SiegelExpansion,
    pub provenance: BTreeMap<FourierIndex, Provenance>,
}

impl LiftExpansion {
    pub fn provenance_text(&self) -> String {
        let mut s = String::from("# format: lift-provenance v1\n");
        writeln!(s, "weight={}", self.expansion.weight).unwrap();
        writeln!(s, "trace_bound={}", self.expansion.trace_bound).unwrap();
        for (t, prov) in &self.provenance {
            write!(s, "{} {} {} :", t.n, t.r, t.m).unwrap();
            for (p, deg) in prov {
                write!(s, " p={p},deg={deg}").unwrap();
            }
            s.push('\n');
        }
        s
    }
}

pub fn lift_coeff(f: &Eigenform, t: &FourierIndex) -> Result<Q> {
    Lift::new(f)?.coeff(t)
}

pub fn lift_expand(f: &Eigenform, trace_bound: i64) -> Result<LiftExpansion> {
    Lift::new(f)?.expand(trace_bound)
}

/// Outcome of substituting alpha_p = p^(k-1/2) for one index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegenerationReport {
    pub k: i64,
    pub checked: usize,
    /// For each product reading, the first index where it fails.
    pub readings: Vec<(ProductReading, Option<FourierIndex>)>,
}

impl DegenerationReport {
    pub fn holds(&self, reading: ProductReading) -> bool {
        self.readings.iter().any(|(r, fail)| *r == reading && fail.is_none())
    }
}

/// Checks that the lift formula at alpha_p = p^(k-1/2) equals the
/// L-normalized Eisenstein coefficient of weight k+1 on every reduced T with
/// D_T <= disc_bound, under each product reading.
pub fn degeneration_check(k: i64, disc_bound: i64) -> Result<DegenerationReport> {
    let src = EisensteinDegeneration { k };
    let idx = reduced_by_disc(disc_bound);
    let expected: Vec<Q> = idx.par_iter().map(|t| eisenstein_coeff_lnorm(k + 1, t)).collect::<Result<_>>()?;
    let mut readings = Vec::new();
    for reading in ProductReading::ALL {
        let got: Vec<Q> = idx.par_iter().map(|t| lift_formula(&src, t, reading).map(|x| x.0)).collect::<Result<_>>()?;
        let fail = idx.iter().zip(got.iter().zip(&expected)).find(|(_, (g, e))| g != e).map(|(t, _)| *t);
        readings.push((reading, fail));
    }
    Ok(DegenerationReport { k, checked: idx.len(), readings })
}
