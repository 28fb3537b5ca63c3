use std::collections::BTreeMap;

use num_traits::Zero;
use rayon::prelude::*;

use super::{reduced_indices, FourierCoefficients, FourierIndex, SiegelExpansion};
use crate::arith::{int_pow, is_prime, Q};
use crate::error::{Error, Result};

fn lookup<F: FourierCoefficients>(f: &F, t: FourierIndex) -> Result<Q> {
    f.coefficient(&t)?.ok_or(Error::OutOfRange(t))
}

/// Coefficient at T of F | T(p) for the degree-2 level-one Hecke operator
/// T(p) = Gamma diag(1,1,p,p) Gamma:
///
///   a(pT) + p^(w-2) sum_{L} a(T[L]/p) + p^(2w-3) a(T/p),
///
/// where L runs over the p+1 index-p sublattices of Z^2 and terms with a
/// non-half-integral argument vanish.
pub fn hecke_coefficient<F: FourierCoefficients>(f: &F, p: u64, t: &FourierIndex) -> Result<Q> {
    let pi = p as i64;
    let w = f.weight();
    let mut acc = lookup(f, t.scale(pi))?;
    let mut middle = Q::zero();
    // sublattice spanned by (p, 0), (0, 1)
    if t.m % pi == 0 {
        middle += lookup(f, FourierIndex::new(t.n * pi, t.r, t.m / pi))?;
    }
    // sublattices spanned by (1, lambda), (0, p), in the y-variable
    for lambda in 0..pi {
        let head = t.n + t.r * lambda + t.m * lambda * lambda;
        if head % pi == 0 {
            middle += lookup(f, FourierIndex::new(head / pi, t.r + 2 * t.m * lambda, t.m * pi))?;
        }
    }
    acc += Q::from_integer(int_pow(p, (w - 2) as u32)) * middle;
    if let Some(q) = t.divide(pi) {
        acc += Q::from_integer(int_pow(p, (2 * w - 3) as u32)) * lookup(f, q)?;
    }
    Ok(acc)
}

/// Applies T(p) to an expansion; the image is known up to trace bound
/// floor(trace_bound / p).
pub fn hecke_tp_degree2(f: &SiegelExpansion, p: u64) -> Result<SiegelExpansion> {
    assert!(is_prime(p), "{p} is not prime");
    let out_bound = f.trace_bound / p as i64;
    if out_bound < 1 {
        return Err(Error::Truncation { needed: p as usize, available: f.trace_bound.max(0) as usize });
    }
    let idx = reduced_indices(out_bound, false);
    let values: Vec<Q> = idx.par_iter().map(|t| hecke_coefficient(f, p, t)).collect::<Result<_>>()?;
    let table: BTreeMap<_, _> = idx.into_iter().zip(values).collect();
    SiegelExpansion::new(f.weight, out_bound, table)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenRatio {
    /// Common ratio A'(T)/A(T), if any coefficient was nonzero.
    pub ratio: Option<Q>,
    /// Number of indices with A(T) != 0 that were compared.
    pub compared: usize,
    /// First index breaking proportionality.
    pub mismatch: Option<FourierIndex>,
}

impl EigenRatio {
    pub fn is_constant(&self) -> bool {
        self.mismatch.is_none() && self.ratio.is_some()
    }
}

/// Compares `image` against `original` on every index of `image`'s table.
pub fn eigen_ratio(original: &SiegelExpansion, image: &SiegelExpansion) -> Result<EigenRatio> {
    let mut ratio: Option<Q> = None;
    let mut compared = 0;
    for (t, after) in image.table() {
        let before = original.get(t)?;
        if before.is_zero() {
            if !after.is_zero() {
                return Ok(EigenRatio { ratio, compared, mismatch: Some(*t) });
            }
            continue;
        }
        let r = after / &before;
        compared += 1;
        match &ratio {
            None => ratio = Some(r),
            Some(r0) if *r0 != r => return Ok(EigenRatio { ratio, compared, mismatch: Some(*t) }),
            _ => {}
        }
    }
    Ok(EigenRatio { ratio, compared, mismatch: None })
}
