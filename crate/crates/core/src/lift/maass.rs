use num_traits::Zero;

use crate::arith::{divisors, int_pow, Q};
use crate::error::{Error, Result};
use crate::siegel::{reduced, reduced_indices, FourierCoefficients, FourierIndex, SiegelExpansion};

/// Result of testing the Maass relations with one exponent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaassExponentResult {
    pub exponent: i64,
    /// Indices whose right-hand side lay in range.
    pub checked: usize,
    /// Checked indices where the relation is not a tautology.
    pub nontrivial: usize,
    pub first_failure: Option<FourierIndex>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaassReport {
    pub weight: i64,
    pub results: Vec<MaassExponentResult>,
}

impl MaassReport {
    pub fn passing(&self) -> Vec<i64> {
        self.results.iter().filter(|r| r.first_failure.is_none()).map(|r| r.exponent).collect()
    }

    /// The single exponent under which every relation holds.
    pub fn consistent(&self) -> Option<i64> {
        match self.passing()[..] {
            [e] => Some(e),
            _ => None,
        }
    }

    pub fn ensure(&self) -> Result<i64> {
        self.consistent().ok_or_else(|| {
            Error::Structural(format!(
                "Maass relations: exponents passing {:?} among {:?}",
                self.passing(),
                self.results.iter().map(|r| r.exponent).collect::<Vec<_>>()
            ))
        })
    }
}

/// Evaluates A(n,r,m) = sum_{d | gcd(n,r,m)} d^e A(nm/d^2, r/d, 1). Returns
/// `None` when a right-hand index is outside the known range, otherwise
/// whether the relation holds and whether it was a tautology.
pub fn maass_relation<F: FourierCoefficients>(f: &F, t: &FourierIndex, exponent: i64) -> Result<Option<(bool, bool)>> {
    let Some(lhs) = f.coefficient(t)? else { return Ok(None) };
    let red = reduced(t)?;
    let mut rhs = Q::zero();
    let mut trivial = true;
    for d in divisors(t.content() as u64) {
        let di = d as i64;
        let idx = FourierIndex::new(t.n * t.m / (di * di), t.r / di, 1);
        let Some(a) = f.coefficient(&idx)? else { return Ok(None) };
        if d > 1 || reduced(&idx)? != red {
            trivial = false;
        }
        rhs += Q::from_integer(int_pow(d, exponent as u32)) * a;
    }
    Ok(Some((lhs == rhs, trivial)))
}

/// Tests the Maass relations on every reduced positive definite index of F
/// with exponents k-1, k, k+1 and reports which are consistent.
pub fn maass_check(f: &SiegelExpansion, k: i64) -> Result<MaassReport> {
    let idx = reduced_indices(f.trace_bound, true);
    let mut results = Vec::new();
    for exponent in [k - 1, k, k + 1] {
        let mut res = MaassExponentResult { exponent, checked: 0, nontrivial: 0, first_failure: None };
        for t in &idx {
            let Some((ok, trivial)) = maass_relation(f, t, exponent)? else { continue };
            res.checked += 1;
            res.nontrivial += usize::from(!trivial);
            if !ok && res.first_failure.is_none() {
                res.first_failure = Some(*t);
            }
        }
        results.push(res);
    }
    Ok(MaassReport { weight: f.weight, results })
}
