use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{q_int, q_pow, Q};

/// Element `rational + surd * sqrt(p)` of the field Q(sqrt p), p a prime.
///
/// Half-integral powers of p (Satake parameters, `p^(k-1/2)`) live here.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RootExt {
    p: u64,
    pub rational: Q,
    pub surd: Q,
}

impl RootExt {
    pub fn new(p: u64, rational: Q, surd: Q) -> Self {
        RootExt { p, rational, surd }
    }

    pub fn rational(p: u64, q: Q) -> Self {
        RootExt { p, rational: q, surd: Q::zero() }
    }

    pub fn zero(p: u64) -> Self {
        Self::rational(p, Q::zero())
    }

    pub fn one(p: u64) -> Self {
        Self::rational(p, Q::one())
    }

    /// p^(half_exp / 2).
    pub fn half_power(p: u64, half_exp: i64) -> Self {
        let pq = q_int(p);
        if half_exp.rem_euclid(2) == 0 {
            Self::rational(p, q_pow(&pq, half_exp / 2))
        } else {
            // p^((e-1)/2) * sqrt(p)
            Self::new(p, Q::zero(), q_pow(&pq, (half_exp - 1) / 2))
        }
    }

    pub fn radicand(&self) -> u64 {
        self.p
    }

    pub fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.surd.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.surd.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Q> {
        self.is_rational().then_some(&self.rational)
    }

    /// Galois conjugate a - b sqrt p.
    pub fn conj(&self) -> Self {
        RootExt { p: self.p, rational: self.rational.clone(), surd: -self.surd.clone() }
    }

    /// a^2 - p b^2.
    pub fn norm(&self) -> Q {
        &self.rational * &self.rational - q_int(self.p) * &self.surd * &self.surd
    }

    pub fn inv(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        let c = self.conj();
        Some(RootExt { p: self.p, rational: c.rational / &n, surd: c.surd / n })
    }

    pub fn scale(&self, q: &Q) -> Self {
        RootExt { p: self.p, rational: &self.rational * q, surd: &self.surd * q }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.p);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.p, other.p, "mixing Q(sqrt {}) and Q(sqrt {})", self.p, other.p);
    }
}

impl<'a> Add<&'a RootExt> for &'a RootExt {
    type Output = RootExt;
    fn add(self, o: &RootExt) -> RootExt {
        self.check(o);
        RootExt { p: self.p, rational: &self.rational + &o.rational, surd: &self.surd + &o.surd }
    }
}

impl<'a> Sub<&'a RootExt> for &'a RootExt {
    type Output = RootExt;
    fn sub(self, o: &RootExt) -> RootExt {
        self.check(o);
        RootExt { p: self.p, rational: &self.rational - &o.rational, surd: &self.surd - &o.surd }
    }
}

impl<'a> Mul<&'a RootExt> for &'a RootExt {
    type Output = RootExt;
    fn mul(self, o: &RootExt) -> RootExt {
        self.check(o);
        let rational = &self.rational * &o.rational + q_int(self.p) * &self.surd * &o.surd;
        let surd = &self.rational * &o.surd + &self.surd * &o.rational;
        RootExt { p: self.p, rational, surd }
    }
}

impl Add for RootExt {
    type Output = RootExt;
    fn add(self, o: RootExt) -> RootExt {
        &self + &o
    }
}

impl Sub for RootExt {
    type Output = RootExt;
    fn sub(self, o: RootExt) -> RootExt {
        &self - &o
    }
}

impl Mul for RootExt {
    type Output = RootExt;
    fn mul(self, o: RootExt) -> RootExt {
        &self * &o
    }
}

impl Neg for RootExt {
    type Output = RootExt;
    fn neg(self) -> RootExt {
        RootExt { p: self.p, rational: -self.rational, surd: -self.surd }
    }
}

impl fmt::Display for RootExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.surd.is_zero() {
            write!(f, "{}", self.rational)
        } else {
            write!(f, "{} + {}*sqrt({})", self.rational, self.surd, self.p)
        }
    }
}
