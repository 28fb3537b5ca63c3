use std::collections::HashMap;
use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{bernoulli, factor, q_frac, q_int, Q};
use crate::error::{Error, Result};

fn legendre(a: i64, p: u64) -> i32 {
    let a = a.rem_euclid(p as i64) as u64;
    if a == 0 {
        return 0;
    }
    let (mut base, mut e, mut acc) = (a as u128, (p - 1) / 2, 1u128);
    let m = p as u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    if acc == 1 {
        1
    } else {
        -1
    }
}

/// Kronecker symbol (D/m) for a discriminant D = 0, 1 (mod 4) and m >= 1.
pub fn kronecker(d: i64, m: u64) -> Result<i32> {
    if !matches!(d.rem_euclid(4), 0 | 1) {
        return Err(Error::BadDiscriminant(d));
    }
    Ok(kronecker_unchecked(d, m))
}

pub(crate) fn kronecker_unchecked(d: i64, m: u64) -> i32 {
    let mut acc = 1;
    for (p, e) in factor(m) {
        let s = if p == 2 {
            match d.rem_euclid(8) {
                1 | 7 => 1,
                3 | 5 => -1,
                _ => 0,
            }
        } else {
            legendre(d, p)
        };
        if e % 2 == 1 || s == 0 {
            acc *= s;
        }
        if acc == 0 {
            break;
        }
    }
    acc
}

/// `fundamental * conductor^2 = d` with `fundamental` equal to 1 or a
/// fundamental discriminant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscriminantSplit {
    pub d: u64,
    pub k_odd: bool,
    pub fundamental: i64,
    pub conductor: Q,
}

impl DiscriminantSplit {
    /// Conductor as an integer; `None` when it is a proper fraction, which
    /// happens only for signed values = 2, 3 (mod 4).
    pub fn conductor_int(&self) -> Option<u64> {
        if self.conductor.is_integer() {
            u64::try_from(self.conductor.to_integer()).ok()
        } else {
            None
        }
    }
}

/// Splits a nonzero signed integer s as fundamental * conductor^2.
pub fn fundamental_discriminant(s: i64) -> (i64, Q) {
    assert!(s != 0, "zero has no discriminant");
    let mut core = 1u64;
    let mut square = 1u64;
    for (p, e) in factor(s.unsigned_abs()) {
        if e % 2 == 1 {
            core *= p;
        }
        square *= p.pow(e / 2);
    }
    let signed_core = s.signum() * core as i64;
    if signed_core == 1 {
        (1, q_int(square))
    } else if signed_core.rem_euclid(4) == 1 {
        (signed_core, q_int(square))
    } else {
        (4 * signed_core, q_frac(square as i64, 2))
    }
}

/// Discriminant of Q(sqrt((-1)^k d)) and the conductor f with (-1)^k d = D f^2.
pub fn discriminant_split(k: i64, d: u64) -> DiscriminantSplit {
    assert!(d >= 1);
    let k_odd = k.rem_euclid(2) == 1;
    let signed = if k_odd { -(d as i64) } else { d as i64 };
    let (fundamental, conductor) = fundamental_discriminant(signed);
    DiscriminantSplit { d, k_odd, fundamental, conductor }
}

static L_CACHE: RwLock<Option<HashMap<(u32, i64), Q>>> = RwLock::new(None);

/// L(1-k, chi_D) for a fundamental discriminant D (or D = 1), computed from
/// generalized Bernoulli numbers as -B_{k,chi}/k.
pub fn dirichlet_l_neg(k: u32, d: i64) -> Q {
    assert!(k >= 1);
    if d == 1 && k == 1 {
        // zeta(0)
        return q_frac(-1, 2);
    }
    let chi_minus_one = if d > 0 { 1 } else { -1 };
    let parity = if k.is_multiple_of(2) { 1 } else { -1 };
    if chi_minus_one != parity {
        return Q::zero();
    }
    if let Some(v) = L_CACHE.read().unwrap().as_ref().and_then(|m| m.get(&(k, d))) {
        return v.clone();
    }
    let value = -generalized_bernoulli(k as usize, d) / q_int(k);
    L_CACHE
        .write()
        .unwrap()
        .get_or_insert_with(HashMap::new)
        .insert((k, d), value.clone());
    value
}

// B_{k,chi} = f^(k-1) sum_{a=1}^{f} chi(a) B_k(a/f)
//           = sum_j C(k,j) B_j f^(j-1) sum_a chi(a) a^(k-j).
fn generalized_bernoulli(k: usize, d: i64) -> Q {
    let f = d.unsigned_abs();
    let mut power_sums = vec![BigInt::zero(); k + 1];
    for a in 1..=f {
        let chi = kronecker_unchecked(d, a);
        if chi == 0 {
            continue;
        }
        let mut pw = BigInt::one();
        let big_a = BigInt::from(a);
        for slot in power_sums.iter_mut() {
            if chi > 0 {
                *slot += &pw;
            } else {
                *slot -= &pw;
            }
            pw *= &big_a;
        }
    }
    let mut acc = Q::zero();
    let mut binom = BigInt::one();
    let fq = q_int(f);
    for j in 0..=k {
        let b = bernoulli(j);
        if !b.is_zero() {
            let fpow = super::q_pow(&fq, j as i64 - 1);
            acc += Q::from_integer(binom.clone()) * b * fpow * Q::from_integer(power_sums[k - j].clone());
        }
        binom = binom * BigInt::from(k - j) / BigInt::from(j + 1);
    }
    acc
}

/// True for 1 and for fundamental discriminants.
pub fn is_fundamental(d: i64) -> bool {
    if d == 1 {
        return true;
    }
    fundamental_discriminant(d) == (d, Q::one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{bernoulli_poly_eval, q_pow};
    use proptest::prelude::*;

    #[test]
    fn kronecker_examples() {
        for m in 1..50 {
            assert_eq!(kronecker(1, m).unwrap(), 1);
        }
        assert_eq!(kronecker(-4, 3).unwrap(), -1);
        assert_eq!(kronecker(-3, 3).unwrap(), 0);
        assert_eq!(kronecker(-4, 5).unwrap(), 1);
        assert_eq!(kronecker(5, 2).unwrap(), -1);
        assert!(matches!(kronecker(2, 3), Err(Error::BadDiscriminant(2))));
        assert!(kronecker(-5, 3).is_err());
    }

    #[test]
    fn kronecker_period() {
        for d in [-3i64, -4, -7, -8, 5, 8, 12, -15, 21] {
            let n = d.unsigned_abs();
            for m in 1..60 {
                assert_eq!(kronecker(d, m).unwrap(), kronecker(d, m + n).unwrap(), "D={d} m={m}");
            }
        }
    }

    proptest! {
        #[test]
        fn kronecker_multiplicative(a in 1u64..10_000, b in 1u64..10_000, idx in 0usize..8) {
            let d = [-3i64, -4, -7, -8, 5, 12, -23, 40][idx];
            prop_assert_eq!(
                kronecker(d, a * b).unwrap(),
                kronecker(d, a).unwrap() * kronecker(d, b).unwrap()
            );
        }
    }

    #[test]
    fn split_examples() {
        let s = discriminant_split(1, 4);
        assert_eq!((s.fundamental, s.conductor.clone()), (-4, q_int(1)));
        let s = discriminant_split(2, 4);
        assert_eq!((s.fundamental, s.conductor.clone()), (1, q_int(2)));
        let s = discriminant_split(3, 12);
        assert_eq!((s.fundamental, s.conductor_int()), (-3, Some(2)));
        // (-1)^k d = 3 is 3 mod 4: conductor 1/2
        let s = discriminant_split(2, 3);
        assert_eq!((s.fundamental, s.conductor.clone()), (12, q_frac(1, 2)));
        assert_eq!(s.conductor_int(), None);
    }

    #[test]
    fn split_roundtrip_both_parities() {
        for d in 1..=10_000u64 {
            for k in [1i64, 2] {
                let s = discriminant_split(k, d);
                let signed = if k == 1 { -(d as i64) } else { d as i64 };
                assert_eq!(q_int(s.fundamental) * &s.conductor * &s.conductor, q_int(signed));
                assert!(is_fundamental(s.fundamental), "{}", s.fundamental);
                assert!(s.conductor > Q::zero());
            }
        }
    }

    // Character-sum definition evaluated directly with the Bernoulli polynomial.
    fn gen_bernoulli_oracle(k: usize, d: i64) -> Q {
        let f = d.unsigned_abs();
        let fq = q_int(f);
        let mut s = Q::zero();
        for a in 1..=f {
            let chi = kronecker(d, a).unwrap();
            if chi != 0 {
                s += q_int(chi) * bernoulli_poly_eval(k, &(q_int(a) / &fq));
            }
        }
        q_pow(&fq, k as i64 - 1) * s
    }

    #[test]
    fn l_values() {
        assert_eq!(dirichlet_l_neg(12, 1), q_frac(691, 32760));
        assert_eq!(dirichlet_l_neg(1, -4), q_frac(1, 2));
        assert_eq!(dirichlet_l_neg(1, -3), q_frac(1, 3));
        // known H(3,3) = L(-2, chi_-3) = -2/9
        assert_eq!(dirichlet_l_neg(3, -3), q_frac(-2, 9));
        assert!(dirichlet_l_neg(2, -4).is_zero());
        assert!(dirichlet_l_neg(3, 5).is_zero());
        assert_eq!(dirichlet_l_neg(1, 1), q_frac(-1, 2));
    }

    #[test]
    fn l_values_match_oracle_and_zeta() {
        for k in 2..=20usize {
            assert_eq!(dirichlet_l_neg(k as u32, 1), -bernoulli(k) / q_int(k as u64));
        }
        for d in [-3i64, -4, -7, -8, -11, -15, -20, -23, 5, 8, 12, 13] {
            for k in 1..=9usize {
                let expect = if (d > 0) == (k % 2 == 0) {
                    -gen_bernoulli_oracle(k, d) / q_int(k as u64)
                } else {
                    Q::zero()
                };
                assert_eq!(dirichlet_l_neg(k as u32, d), expect, "k={k} D={d}");
            }
        }
    }
}
