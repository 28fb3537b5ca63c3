//! Exact arithmetic: rationals, elementary number theory, Bernoulli numbers,
//! quadratic characters and their L-values at negative integers.

mod bernoulli;
mod character;
mod linalg;
mod surd;

pub use bernoulli::{bernoulli, bernoulli_poly_eval};
pub use character::{
    dirichlet_l_neg, discriminant_split, fundamental_discriminant, is_fundamental, kronecker, DiscriminantSplit,
};
pub use linalg::{solve_exact, Solution};
pub use surd::RootExt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact rational number, always stored reduced with positive denominator.
pub type Q = BigRational;

pub fn q_int<T: Into<BigInt>>(n: T) -> Q {
    Q::from_integer(n.into())
}

pub fn q_frac(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

/// `base^exp` for a possibly negative exponent.
pub fn q_pow(base: &Q, exp: i64) -> Q {
    if exp >= 0 {
        num_traits::pow(base.clone(), exp as usize)
    } else {
        num_traits::pow(base.recip(), (-exp) as usize)
    }
}

pub fn int_pow(base: u64, exp: u32) -> BigInt {
    num_traits::pow(BigInt::from(base), exp as usize)
}

/// Renders as `numerator/denominator`, denominator always present.
pub fn fmt_q(x: &Q) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

pub fn parse_q(s: &str) -> Option<Q> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim().parse::<BigInt>().ok()?, d.trim().parse::<BigInt>().ok()?),
        None => (s.trim().parse::<BigInt>().ok()?, BigInt::one()),
    };
    if d.is_zero() {
        return None;
    }
    Some(Q::new(n, d))
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn primes_up_to(bound: u64) -> Vec<u64> {
    (2..=bound).filter(|&n| is_prime(n)).collect()
}

/// Prime factorization by trial division, primes ascending.
pub fn factor(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut ds = vec![1u64];
    for (p, e) in factor(n) {
        let cur = ds.clone();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            ds.extend(cur.iter().map(|d| d * pk));
        }
    }
    ds.sort_unstable();
    ds
}

/// p-adic valuation of a nonzero integer.
pub fn ord(p: u64, n: u64) -> u32 {
    debug_assert!(n != 0);
    let mut n = n;
    let mut e = 0;
    while n.is_multiple_of(p) {
        n /= p;
        e += 1;
    }
    e
}

pub fn moebius(n: u64) -> i64 {
    let f = factor(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Divisor power sum sigma_s(n).
pub fn sigma(s: u32, n: u64) -> BigInt {
    divisors(n).into_iter().map(|d| int_pow(d, s)).sum()
}

pub fn gcd(a: i64, b: i64) -> i64 {
    num_integer::gcd(a, b)
}

pub fn isqrt(n: u64) -> u64 {
    num_integer::Roots::sqrt(&n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factor_and_divisors() {
        assert_eq!(factor(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(factor(1), vec![]);
        assert_eq!(sigma(1, 6), BigInt::from(12));
        assert_eq!(moebius(30), -1);
        assert_eq!(moebius(12), 0);
    }

    #[test]
    fn rational_text_roundtrip() {
        let x = q_frac(-65520, 691);
        assert_eq!(fmt_q(&x), "-65520/691");
        assert_eq!(parse_q("-65520/691"), Some(x));
        assert_eq!(fmt_q(&q_int(3)), "3/1");
        assert_eq!(parse_q("1/0"), None);
    }
}
