use std::collections::HashMap;
use std::path::PathBuf;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::Zero;
use rayon::prelude::*;

use super::SymLaurent;
use crate::arith::{
    dirichlet_l_neg, discriminant_split, factor, is_fundamental, kronecker, ord, solve_exact, RootExt, Solution, Q,
};
use crate::error::{Error, Result};
use crate::siegel::{eisenstein_coeff_lnorm, FourierIndex};

/// Environment variable naming an optional on-disk cache of local polynomials.
pub const CACHE_DIR_ENV: &str = "IKEDA_CACHE_DIR";

/// Smallest ladder weight k'; the Eisenstein weight is k' + 1 = 10.
pub const BASE_WEIGHT: i64 = 9;

/// Splits -D_T = fundamental * conductor^2 for positive definite T.
pub fn index_split(t: &FourierIndex) -> Result<(i64, u64)> {
    if !t.is_positive_definite() {
        return Err(Error::NotPositiveDefinite(*t));
    }
    let split = discriminant_split(1, t.disc() as u64);
    let f = split.conductor_int().expect("-D_T = 0, 1 mod 4 has integral conductor");
    Ok((split.fundamental, f))
}

/// Primes dividing D_T, in increasing order.
pub fn disc_primes(t: &FourierIndex) -> Vec<u64> {
    factor(t.disc() as u64).into_iter().map(|(p, _)| p).collect()
}

/// Data at p that determines the local polynomial of T: the p-orders of
/// content(T) and of the conductor, and chi_{fundamental}(p).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LocalKey {
    pub p: u64,
    pub content_ord: u32,
    pub conductor_ord: u32,
    pub chi: i8,
}

pub fn local_key(t: &FourierIndex, p: u64) -> Result<LocalKey> {
    let (d, f) = index_split(t)?;
    Ok(LocalKey {
        p,
        content_ord: ord(p, t.content() as u64),
        conductor_ord: ord(p, f),
        chi: kronecker(d, p)? as i8,
    })
}

/// A reduced-size index with the given local key whose conductor is a
/// power of p, so its Eisenstein coefficients carry no other local factor.
pub fn local_representative(key: &LocalKey) -> FourierIndex {
    let p = key.p as i64;
    let fundamental = (3..)
        .map(|x: i64| -x)
        .find(|&d| is_fundamental(d) && kronecker(d, key.p).unwrap() as i8 == key.chi)
        .unwrap();
    let primitive_disc = -fundamental * p.pow(2 * (key.conductor_ord - key.content_ord));
    let primitive = if primitive_disc % 4 == 0 {
        FourierIndex::new(1, 0, primitive_disc / 4)
    } else {
        FourierIndex::new(1, 1, (primitive_disc + 1) / 4)
    };
    primitive.scale(p.pow(key.content_ord))
}

/// Weights k', k'+2, ... of a sampling ladder; the sampled Eisenstein
/// series has weight k'+1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WeightLadder {
    pub start: i64,
    pub len: usize,
}

impl WeightLadder {
    pub fn weights(&self) -> Vec<i64> {
        (0..self.len as i64).map(|i| self.start + 2 * i).collect()
    }

    /// The ladder of the same length starting right after this one.
    pub fn next_disjoint(&self) -> WeightLadder {
        WeightLadder { start: self.start + 2 * self.len as i64, len: self.len }
    }
}

/// Primary and disjoint secondary ladder for interpolating at (T, p): one
/// sample more than the unknown count bound ord_p(f_T * content) + 1.
pub fn ladders(t: &FourierIndex, p: u64) -> Result<(WeightLadder, WeightLadder)> {
    let key = local_key(t, p)?;
    let first = WeightLadder { start: BASE_WEIGHT, len: (key.conductor_ord + key.content_ord) as usize + 2 };
    Ok((first, first.next_disjoint()))
}

/// L-normalized Eisenstein coefficients of one index at several weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompatibleFamilySample {
    pub t: FourierIndex,
    /// (k', coefficient of E_{k'+1} with the global constant stripped).
    pub samples: Vec<(i64, Q)>,
}

impl CompatibleFamilySample {
    pub fn collect(t: &FourierIndex, ladder: &WeightLadder) -> Result<Self> {
        let samples = ladder
            .weights()
            .into_par_iter()
            .map(|k| Ok((k, eisenstein_coeff_lnorm(k + 1, t)?)))
            .collect::<Result<_>>()?;
        Ok(CompatibleFamilySample { t: *t, samples })
    }
}

/// Rational local factor p^(b(k-1/2)) F_p(p^(k-1/2)), b = ord_p(conductor).
pub fn local_factor_at_weight(conductor_ord: u32, poly: &SymLaurent, k: i64) -> Result<Q> {
    let p = poly.prime();
    let x = 2 * k - 1;
    let v = RootExt::half_power(p, conductor_ord as i64 * x) * poly.eval_half_power(x);
    v.as_rational().cloned().ok_or(Error::Inconsistent { p, k })
}

/// Target values F_p(T; p^(k'-1/2)) in Q(sqrt p), one per sample, with
/// L(1-k', chi) and the other primes' local factors divided out.
fn local_targets(t: &FourierIndex, p: u64, family: &CompatibleFamilySample) -> Result<Vec<(i64, RootExt)>> {
    if family.t != *t {
        return Err(Error::Structural(format!("sample family belongs to {} not {t}", family.t)));
    }
    let (d, _) = index_split(t)?;
    let key = local_key(t, p)?;
    let others: Vec<(LocalKey, Arc<SymLaurent>)> = disc_primes(t)
        .into_iter()
        .filter(|&q| q != p)
        .map(|q| {
            let k = local_key(t, q)?;
            Ok((k, local_poly(&k)?))
        })
        .collect::<Result<_>>()?;
    let mut seen = std::collections::BTreeSet::new();
    family
        .samples
        .iter()
        .map(|(k, a)| {
            if !seen.insert(*k) {
                return Err(Error::Structural(format!("weight {k} sampled twice")));
            }
            let l = dirichlet_l_neg(*k as u32, d);
            if l.is_zero() {
                return Err(Error::Inconsistent { p, k: *k });
            }
            let mut rest = a / l;
            for (qk, poly) in &others {
                let fq = local_factor_at_weight(qk.conductor_ord, poly, *k)?;
                if fq.is_zero() {
                    return Err(Error::Inconsistent { p: qk.p, k: *k });
                }
                rest /= fq;
            }
            let scaled = RootExt::half_power(p, -(key.conductor_ord as i64) * (2 * k - 1)).scale(&rest);
            Ok((*k, scaled))
        })
        .collect()
}

/// Solves sum_j c_j B_j(k') = target(k') for c_j in Q(sqrt p). Each c_j
/// splits as u_j + v_j sqrt(p) and each equation as rational and surd
/// parts, giving an exact rational system.
fn solve_split(p: u64, rows: Vec<(i64, Vec<RootExt>, RootExt)>) -> Result<Vec<RootExt>> {
    let unknowns = rows.first().map_or(0, |r| 2 * r.1.len());
    let root = RootExt::half_power(p, 1);
    let mut a: Vec<Vec<Q>> = Vec::new();
    let mut b = Vec::new();
    let mut weight_of_row = Vec::new();
    for (k, basis, rhs) in rows {
        let cols: Vec<RootExt> = basis.iter().flat_map(|e| [e.clone(), e * &root]).collect();
        a.push(cols.iter().map(|c| c.rational.clone()).collect());
        b.push(rhs.rational.clone());
        a.push(cols.iter().map(|c| c.surd.clone()).collect());
        b.push(rhs.surd.clone());
        weight_of_row.extend([k, k]);
    }
    match solve_exact(&a, &b) {
        Solution::Unique(x) => Ok(x.chunks(2).map(|uv| RootExt::new(p, uv[0].clone(), uv[1].clone())).collect()),
        Solution::Inconsistent(row) => Err(Error::Inconsistent { p, k: weight_of_row[row] }),
        Solution::Underdetermined(rank) => Err(Error::Underdetermined { p, unknowns, rank }),
    }
}

/// Recovers F_p(T; X) in the symmetric basis from a compatible family. The
/// system has one more sample than unknowns and must be satisfied exactly.
pub fn interpolate_local_poly(t: &FourierIndex, p: u64, family: &CompatibleFamilySample) -> Result<SymLaurent> {
    let b = local_key(t, p)?.conductor_ord as i64;
    if family.samples.len() < b as usize + 2 {
        return Err(Error::Underdetermined { p, unknowns: 2 * (b as usize + 1), rank: 2 * family.samples.len() });
    }
    let rows = local_targets(t, p, family)?
        .into_iter()
        .map(|(k, target)| {
            let x = 2 * k - 1;
            let basis = (0..=b)
                .map(|m| match m {
                    0 => RootExt::one(p),
                    _ => RootExt::half_power(p, m * x) + RootExt::half_power(p, -m * x),
                })
                .collect();
            (k, basis, target)
        })
        .collect();
    Ok(SymLaurent::new(p, solve_split(p, rows)?))
}

/// Ladder long enough to determine the full Laurent basis X^-b .. X^b with
/// one spare sample.
pub fn unconstrained_ladder(t: &FourierIndex, p: u64) -> Result<WeightLadder> {
    let b = local_key(t, p)?.conductor_ord as usize;
    Ok(WeightLadder { start: BASE_WEIGHT, len: 2 * b + 2 })
}

/// Interpolates in the full Laurent basis X^-b .. X^b with no symmetry
/// imposed, then demands c_j = c_-j.
pub fn interpolate_unconstrained(t: &FourierIndex, p: u64, family: &CompatibleFamilySample) -> Result<SymLaurent> {
    let b = local_key(t, p)?.conductor_ord as i64;
    let rows = local_targets(t, p, family)?
        .into_iter()
        .map(|(k, target)| {
            let x = 2 * k - 1;
            (k, (-b..=b).map(|j| RootExt::half_power(p, j * x)).collect(), target)
        })
        .collect();
    let c = solve_split(p, rows)?;
    let at = |j: i64| &c[(j + b) as usize];
    if (1..=b).any(|j| at(j) != at(-j)) {
        return Err(Error::Asymmetric { p });
    }
    Ok(SymLaurent::new(p, (0..=b).map(|j| at(j).clone()).collect()))
}

type Cache = Mutex<HashMap<LocalKey, Arc<SymLaurent>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn disk_path(key: &LocalKey) -> Option<PathBuf> {
    let dir = std::env::var_os(CACHE_DIR_ENV)?;
    Some(PathBuf::from(dir).join(format!(
        "ftilde-p{}-a{}-b{}-chi{}.txt",
        key.p, key.content_ord, key.conductor_ord, key.chi
    )))
}

/// Accepts a stored polynomial only if it reproduces one fresh sample.
fn load_verified(key: &LocalKey, rep: &FourierIndex) -> Option<SymLaurent> {
    let text = std::fs::read_to_string(disk_path(key)?).ok()?;
    let poly = SymLaurent::from_text(&text).ok().filter(|poly| poly.prime() == key.p)?;
    let k = BASE_WEIGHT;
    let (d, _) = index_split(rep).ok()?;
    let expected = eisenstein_coeff_lnorm(k + 1, rep).ok()?;
    let got = dirichlet_l_neg(k as u32, d) * local_factor_at_weight(key.conductor_ord, &poly, k).ok()?;
    (got == expected).then_some(poly)
}

fn compute(key: &LocalKey) -> Result<SymLaurent> {
    let rep = local_representative(key);
    if let Some(poly) = load_verified(key, &rep) {
        return Ok(poly);
    }
    let (ladder, _) = ladders(&rep, key.p)?;
    let family = CompatibleFamilySample::collect(&rep, &ladder)?;
    let poly = interpolate_local_poly(&rep, key.p, &family)?;
    if let Some(path) = disk_path(key) {
        // the disk cache is an optimisation; failing to write it is harmless
        let _ = std::fs::create_dir_all(path.parent().unwrap()).and_then(|_| std::fs::write(&path, poly.to_text()));
    }
    Ok(poly)
}

/// Local polynomial for a key, interpolated once from its representative
/// and then shared. Concurrent first requests may both compute; the first
/// stored value wins and results are identical anyway.
pub fn local_poly(key: &LocalKey) -> Result<Arc<SymLaurent>> {
    if let Some(hit) = cache().lock().unwrap().get(key) {
        return Ok(hit.clone());
    }
    let poly = Arc::new(compute(key)?);
    Ok(cache().lock().unwrap().entry(*key).or_insert(poly).clone())
}

/// Report of the two-ladder interpolation test at one (T, p).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InterpolationReport {
    pub t: FourierIndex,
    pub p: u64,
    pub key: LocalKey,
    pub poly: SymLaurent,
    pub ladders_agree: bool,
    pub symmetric: bool,
    pub matches_local_key: bool,
}

impl InterpolationReport {
    pub fn passed(&self) -> bool {
        self.ladders_agree && self.symmetric && self.matches_local_key
    }
}

/// Interpolates F_p(T; X) directly from T on two disjoint ladders, reruns
/// the primary ladder without imposing symmetry, and compares with the
/// polynomial cached for T's local key.
pub fn interpolation_check(t: &FourierIndex, p: u64) -> Result<InterpolationReport> {
    let key = local_key(t, p)?;
    let (la, lb) = ladders(t, p)?;
    let fa = CompatibleFamilySample::collect(t, &la)?;
    let fb = CompatibleFamilySample::collect(t, &lb)?;
    let poly = interpolate_local_poly(t, p, &fa)?;
    let other = interpolate_local_poly(t, p, &fb)?;
    let free_family = CompatibleFamilySample::collect(t, &unconstrained_ladder(t, p)?)?;
    let symmetric = match interpolate_unconstrained(t, p, &free_family) {
        Ok(free) => free == poly,
        Err(Error::Asymmetric { .. }) => false,
        Err(e) => return Err(e),
    };
    let matches_local_key = *local_poly(&key)? == poly;
    Ok(InterpolationReport { t: *t, p, key, ladders_agree: poly == other, symmetric, matches_local_key, poly })
}
