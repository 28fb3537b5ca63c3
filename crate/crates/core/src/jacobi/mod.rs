//! Fourier-Jacobi layer for degree 2: scalar indices S = m, theta series,
//! theta components of Siegel expansions and their reconstruction.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::Zero;
use rayon::prelude::*;

use crate::arith::{fmt_q, parse_q, q_frac, q_int, Q};
use crate::error::{Error, Result};
use crate::siegel::{cohen_h, FourierCoefficients, FourierIndex, SiegelEisenstein, SiegelExpansion};

/// Scalar Jacobi index S = m >= 1; X is one-dimensional for degree 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct JacobiIndex {
    pub m: i64,
}

impl JacobiIndex {
    pub fn new(m: i64) -> Result<Self> {
        if m < 1 {
            return Err(Error::UnsupportedIndex(m));
        }
        Ok(JacobiIndex { m })
    }

    pub fn dim_x(&self) -> i64 {
        1
    }

    /// Denominator 4m of all theta exponents.
    pub fn offset_denominator(&self) -> i64 {
        4 * self.m
    }
}

/// Coset xi = j / (2m) of the lattice Z in the dual.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coset {
    pub j: i64,
    pub m: i64,
}

impl Coset {
    pub fn value(&self) -> Q {
        q_frac(self.j, 2 * self.m)
    }

    /// sigma_S(xi, xi) = m xi^2 = j^2 / 4m.
    pub fn sigma(&self) -> Q {
        q_frac(self.j * self.j, 4 * self.m)
    }

    pub fn parse(s: JacobiIndex, text: &str) -> Result<Self> {
        let x = parse_q(text).ok_or_else(|| Error::Parse(format!("coset {text:?}")))?;
        let j = x * q_int(2 * s.m);
        if !j.is_integer() {
            return Err(Error::Parse(format!("{text} is not in (1/{})Z", 2 * s.m)));
        }
        let j = i64::try_from(j.to_integer()).map_err(|_| Error::Parse(text.into()))?;
        Ok(Coset { j: j.rem_euclid(2 * s.m), m: s.m })
    }
}

/// Which coset set labels the theta decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CosetConvention {
    /// xi with the off-diagonal entry S xi semi-integral: 2m cosets.
    SemiIntegral,
    /// xi with S xi integral, the literal dual lattice: m cosets.
    DualLattice,
}

pub fn dual_cosets_with(s: JacobiIndex, convention: CosetConvention) -> Vec<Coset> {
    let step = match convention {
        CosetConvention::SemiIntegral => 1,
        CosetConvention::DualLattice => 2,
    };
    (0..2 * s.m).step_by(step).map(|j| Coset { j, m: s.m }).collect()
}

/// The 2m cosets j/(2m), 0 <= j < 2m.
pub fn dual_cosets(s: JacobiIndex) -> Vec<Coset> {
    dual_cosets_with(s, CosetConvention::SemiIntegral)
}

/// Theta series of a coset as a two-variable table: for nu in xi + Z the
/// term q^(m nu^2) zeta^(2 m nu), stored by (4m * exponent, 2m nu) = (r^2, r).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaSeries {
    pub s: JacobiIndex,
    pub xi: Coset,
    pub terms: BTreeMap<(i64, i64), Q>,
}

impl ThetaSeries {
    /// Specialization u = 0 as a series in q^(1/4m).
    pub fn at_u_zero(&self) -> BTreeMap<i64, Q> {
        let mut out: BTreeMap<i64, Q> = BTreeMap::new();
        for ((e, _), c) in &self.terms {
            *out.entry(*e).or_insert_with(Q::zero) += c;
        }
        out
    }

    pub fn lowest_exponent(&self) -> Option<Q> {
        self.terms.keys().map(|(e, _)| *e).min().map(|e| q_frac(e, 4 * self.s.m))
    }
}

/// All lattice points nu in xi + Z with exponent m nu^2 <= max_exponent.
pub fn theta_series(s: JacobiIndex, xi: Coset, max_exponent: i64) -> ThetaSeries {
    let two_m = 2 * s.m;
    let bound = 4 * s.m * max_exponent;
    let mut terms = BTreeMap::new();
    let mut r = xi.j.rem_euclid(two_m);
    while r * r <= bound {
        terms.insert((r * r, r), q_int(1));
        r += two_m;
    }
    let mut r = xi.j.rem_euclid(two_m) - two_m;
    while r * r <= bound {
        terms.insert((r * r, r), q_int(1));
        r -= two_m;
    }
    ThetaSeries { s, xi, terms }
}

/// The (S, xi)-component sum_N A(S_{xi,N}) q^(N - sigma(xi,xi)) with
/// S_{xi,N} = (m, j, N); the coefficient is keyed by the exponent numerator
/// 4mN - j^2 over the denominator 4m.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaComponent {
    pub s: JacobiIndex,
    pub xi: Coset,
    pub weight: i64,
    /// Largest N included; larger N were truncated.
    pub n_max: i64,
    pub coeffs: BTreeMap<i64, Q>,
}

impl ThetaComponent {
    pub fn coefficient_at_n(&self, n: i64) -> Option<&Q> {
        self.coeffs.get(&(4 * self.s.m * n - self.xi.j * self.xi.j))
    }

    pub fn constant_term(&self) -> Q {
        self.coeffs.get(&0).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.values().all(Zero::is_zero)
    }

    /// Weight of the component, l - dim(X)/2.
    pub fn component_weight(&self) -> Q {
        q_int(self.weight) - q_frac(self.s.dim_x(), 2)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::from("# format: fj-component v1\n");
        writeln!(s, "S={}", self.s.m).unwrap();
        writeln!(s, "xi={}", fmt_q(&self.xi.value())).unwrap();
        writeln!(s, "offset_denominator={}", self.s.offset_denominator()).unwrap();
        writeln!(s, "weight={}", self.weight).unwrap();
        writeln!(s, "n_max={}", self.n_max).unwrap();
        for (e, c) in &self.coeffs {
            writeln!(s, "{e} : {}", fmt_q(c)).unwrap();
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let bad = |m: &str| Error::Parse(format!("fj component: {m}"));
        let mut lines = text.lines().filter(|l| !l.starts_with('#') && !l.trim().is_empty());
        let mut header = |key: &str| -> Result<String> {
            lines
                .next()
                .and_then(|l| l.strip_prefix(key))
                .and_then(|l| l.strip_prefix('='))
                .map(str::to_string)
                .ok_or_else(|| bad(&format!("missing {key}")))
        };
        let s = JacobiIndex::new(header("S")?.parse().map_err(|_| bad("S"))?)?;
        let xi = Coset::parse(s, &header("xi")?)?;
        if header("offset_denominator")? != s.offset_denominator().to_string() {
            return Err(bad("offset_denominator"));
        }
        let weight = header("weight")?.parse().map_err(|_| bad("weight"))?;
        let n_max = header("n_max")?.parse().map_err(|_| bad("n_max"))?;
        let mut coeffs = BTreeMap::new();
        for line in lines {
            let (e, c) = line.split_once(" : ").ok_or_else(|| bad(line))?;
            coeffs.insert(e.parse().map_err(|_| bad(line))?, parse_q(c).ok_or_else(|| bad(line))?);
        }
        Ok(ThetaComponent { s, xi, weight, n_max, coeffs })
    }
}

/// Component from any coefficient source, for N = ceil(sigma) ..= n_max.
pub fn fj_component_upto<F: FourierCoefficients>(f: &F, s: JacobiIndex, xi: Coset, n_max: i64) -> Result<ThetaComponent> {
    let j2 = xi.j * xi.j;
    let n_min = (j2 + 4 * s.m - 1).div_euclid(4 * s.m);
    let ns: Vec<i64> = (n_min..=n_max).collect();
    let values: Vec<Q> = ns
        .par_iter()
        .map(|&n| {
            let t = FourierIndex::new(s.m, xi.j, n);
            f.coefficient(&t)?.ok_or(Error::OutOfRange(t))
        })
        .collect::<Result<_>>()?;
    let coeffs = ns.iter().map(|n| 4 * s.m * n - j2).zip(values).collect();
    Ok(ThetaComponent { s, xi, weight: f.weight(), n_max, coeffs })
}

/// Component of a finite expansion, truncated at N = trace_bound - m so that
/// every index used lies in range.
pub fn fj_component(f: &SiegelExpansion, s: JacobiIndex, xi: Coset) -> Result<ThetaComponent> {
    fj_component_upto(f, s, xi, f.trace_bound - s.m)
}

/// Comparison of one component with the Cohen-Eisenstein pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentMatch {
    pub xi: Coset,
    /// Common ratio component / H(k, .), if any value was nonzero.
    pub scalar: Option<Q>,
    pub checked: usize,
    pub first_mismatch: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EisenComponentReport {
    pub k: i64,
    pub s: JacobiIndex,
    pub n_max: i64,
    /// Weight l(k) - dim(X)/2 of the components.
    pub component_weight: Q,
    pub components: Vec<ComponentMatch>,
}

impl EisenComponentReport {
    pub fn passed(&self) -> bool {
        self.component_weight == q_int(self.k) + q_frac(1, 2)
            && self.components.iter().all(|c| c.first_mismatch.is_none() && c.scalar.is_some())
    }
}

/// For S = 1, the components of the weight-(k+1) Siegel Eisenstein series
/// at xi = 0 and xi = 1/2 are proportional to H(k, 4N) and H(k, 4N-1).
pub fn eisenstein_fj_check(k: i64, s: JacobiIndex, n_max: i64) -> Result<EisenComponentReport> {
    if s.m != 1 {
        return Err(Error::UnsupportedIndex(s.m));
    }
    let src = SiegelEisenstein { weight: k + 1 };
    let mut components = Vec::new();
    for xi in dual_cosets(s) {
        let comp = fj_component_upto(&src, s, xi, n_max)?;
        let mut scalar: Option<Q> = None;
        let mut first_mismatch = None;
        let mut checked = 0;
        for (&e, a) in &comp.coeffs {
            let h = cohen_h(k as u32, e as u64);
            checked += 1;
            let n = (e + xi.j * xi.j) / 4;
            match (&scalar, h.is_zero()) {
                (_, true) if a.is_zero() => {}
                (_, true) => first_mismatch = first_mismatch.or(Some(n)),
                (None, false) => scalar = Some(a / &h),
                (Some(c), false) if *a != c * &h => first_mismatch = first_mismatch.or(Some(n)),
                _ => {}
            }
        }
        components.push(ComponentMatch { xi, scalar, checked, first_mismatch });
    }
    Ok(EisenComponentReport {
        k,
        s,
        n_max,
        component_weight: q_int(k + 1) - q_frac(s.dim_x(), 2),
        components,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReconstructionReport {
    pub s: JacobiIndex,
    pub n_max: i64,
    pub checked: usize,
    /// (N, r) pairs whose component term lies past the truncation.
    pub uncovered: usize,
    /// (N, r) pairs receiving contributions from more than one coset.
    pub collisions: usize,
    pub first_mismatch: Option<FourierIndex>,
}

impl ReconstructionReport {
    pub fn passed(&self) -> bool {
        self.collisions == 0 && self.first_mismatch.is_none()
    }
}

/// Re-expands sum_xi F_{S,xi}(tau) theta_xi(tau, u) and compares each
/// coefficient of q^N zeta^r with A((m, r, N)).
pub fn reconstruct_fj_with(f: &SiegelExpansion, s: JacobiIndex, convention: CosetConvention) -> Result<ReconstructionReport> {
    let n_max = f.trace_bound - s.m;
    let den = 4 * s.m;
    let mut sum: BTreeMap<(i64, i64), (Q, usize)> = BTreeMap::new();
    let cosets = dual_cosets_with(s, convention);
    for &xi in &cosets {
        if n_max < 0 {
            break;
        }
        let comp = fj_component(f, s, xi)?;
        let theta = theta_series(s, xi, n_max);
        for (&e, c) in &comp.coeffs {
            for (&(te, r), tc) in &theta.terms {
                let total = e + te;
                if total % den != 0 {
                    return Err(Error::Structural(format!("non-integral exponent {total}/{den}")));
                }
                let n = total / den;
                if n > n_max {
                    continue;
                }
                let entry = sum.entry((n, r)).or_insert_with(|| (Q::zero(), 0));
                entry.0 += c * tc;
                entry.1 += 1;
            }
        }
    }
    let mut checked = 0;
    let mut uncovered = 0;
    let mut first_mismatch = None;
    for n in 0..=n_max {
        let mut r = 0;
        while r * r <= den * n {
            for r in if r == 0 { vec![0] } else { vec![r, -r] } {
                let t = FourierIndex::new(s.m, r, n);
                let want = f.coefficient(&t)?.ok_or(Error::OutOfRange(t))?;
                // components list every N up to their truncation, zeros
                // included, so a missing entry lies beyond it
                let zero = (Q::zero(), 0);
                let got = match sum.get(&(n, r)) {
                    Some((got, _)) => got,
                    None if cosets.iter().any(|c| c.j == r.rem_euclid(2 * s.m)) => {
                        uncovered += 1;
                        continue;
                    }
                    // no coset represents this class, so the sum has no term
                    None => &zero.0,
                };
                checked += 1;
                if want != *got && first_mismatch.is_none() {
                    first_mismatch = Some(t);
                }
            }
            r += 1;
        }
    }
    let collisions = sum.values().filter(|(_, count)| *count > 1).count();
    Ok(ReconstructionReport { s, n_max, checked, uncovered, collisions, first_mismatch })
}

pub fn reconstruct_fj(f: &SiegelExpansion, s: JacobiIndex) -> Result<ReconstructionReport> {
    reconstruct_fj_with(f, s, CosetConvention::SemiIntegral)
}

#[cfg(test)]
mod tests;
