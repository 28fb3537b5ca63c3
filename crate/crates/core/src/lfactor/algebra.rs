use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Monomial alpha^alpha beta^beta p^(half_p/2) chi^chi, where chi is a
/// symbolic sign (chi^2 = 1). In degeneration checks the alpha slot carries
/// the auxiliary variable P = p^k instead.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SymMonomial {
    pub alpha: i32,
    pub beta: i32,
    pub half_p: i32,
    pub chi: u8,
}

impl SymMonomial {
    pub const ONE: SymMonomial = SymMonomial { alpha: 0, beta: 0, half_p: 0, chi: 0 };

    pub fn new(alpha: i32, beta: i32, half_p: i32, chi: bool) -> Self {
        SymMonomial { alpha, beta, half_p, chi: chi as u8 }
    }

    pub fn alpha(e: i32) -> Self {
        Self::new(e, 0, 0, false)
    }

    pub fn beta(e: i32) -> Self {
        Self::new(0, e, 0, false)
    }

    /// p^(half_exp / 2).
    pub fn p_half(half_exp: i32) -> Self {
        Self::new(0, 0, half_exp, false)
    }

    pub fn chi() -> Self {
        Self::new(0, 0, 0, true)
    }

    pub fn inv(&self) -> Self {
        SymMonomial { alpha: -self.alpha, beta: -self.beta, half_p: -self.half_p, chi: self.chi }
    }

    pub fn pow(&self, e: i32) -> Self {
        SymMonomial {
            alpha: self.alpha * e,
            beta: self.beta * e,
            half_p: self.half_p * e,
            chi: (self.chi as i32 * e).rem_euclid(2) as u8,
        }
    }
}

impl Mul for SymMonomial {
    type Output = SymMonomial;

    fn mul(self, o: SymMonomial) -> SymMonomial {
        SymMonomial {
            alpha: self.alpha + o.alpha,
            beta: self.beta + o.beta,
            half_p: self.half_p + o.half_p,
            chi: (self.chi + o.chi) % 2,
        }
    }
}

impl fmt::Display for SymMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.chi == 1 {
            parts.push("chi".to_string());
        }
        if self.alpha != 0 {
            parts.push(format!("a^{}", self.alpha));
        }
        if self.beta != 0 {
            parts.push(format!("b^{}", self.beta));
        }
        if self.half_p != 0 {
            if self.half_p % 2 == 0 {
                parts.push(format!("p^{}", self.half_p / 2));
            } else {
                parts.push(format!("p^({}/2)", self.half_p));
            }
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

/// Finite multiset of monomials, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SatakeMultiset {
    entries: Vec<SymMonomial>,
}

impl SatakeMultiset {
    pub fn new(mut entries: Vec<SymMonomial>) -> Self {
        entries.sort();
        SatakeMultiset { entries }
    }

    pub fn entries(&self) -> &[SymMonomial] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Image under mu -> mu^-1.
    pub fn inverse(&self) -> Self {
        Self::new(self.entries.iter().map(SymMonomial::inv).collect())
    }

    pub fn is_self_dual(&self) -> bool {
        self.inverse() == *self
    }

    pub fn map(&self, f: impl Fn(&SymMonomial) -> SymMonomial) -> Self {
        Self::new(self.entries.iter().map(f).collect())
    }

    /// Entries of `self` and `other` with multiplicities subtracted:
    /// (only in self, only in other).
    pub fn difference(&self, other: &Self) -> (Vec<SymMonomial>, Vec<SymMonomial>) {
        let mut count: BTreeMap<SymMonomial, i64> = BTreeMap::new();
        for m in &self.entries {
            *count.entry(*m).or_default() += 1;
        }
        for m in &other.entries {
            *count.entry(*m).or_default() -= 1;
        }
        let mut left = Vec::new();
        let mut right = Vec::new();
        for (m, c) in count {
            for _ in 0..c.max(0) {
                left.push(m);
            }
            for _ in 0..(-c).max(0) {
                right.push(m);
            }
        }
        (left, right)
    }
}

impl FromIterator<SymMonomial> for SatakeMultiset {
    fn from_iter<I: IntoIterator<Item = SymMonomial>>(iter: I) -> Self {
        Self::new(iter.into_iter().collect())
    }
}

/// Integer combination of monomials (an element of the group ring).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SymPoly(BTreeMap<SymMonomial, BigInt>);

impl SymPoly {
    pub fn zero() -> Self {
        SymPoly(BTreeMap::new())
    }

    pub fn monomial(m: SymMonomial, c: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(m, BigInt::from(c));
        p
    }

    pub fn one() -> Self {
        Self::monomial(SymMonomial::ONE, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0.get(&SymMonomial::ONE).is_some_and(One::is_one)
    }

    pub fn terms(&self) -> &BTreeMap<SymMonomial, BigInt> {
        &self.0
    }

    fn add_term(&mut self, m: SymMonomial, c: BigInt) {
        let e = self.0.entry(m).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.0.remove(&m);
        }
    }

    pub fn add(&self, o: &SymPoly) -> SymPoly {
        let mut out = self.clone();
        for (m, c) in &o.0 {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn mul(&self, o: &SymPoly) -> SymPoly {
        let mut out = SymPoly::zero();
        for (m1, c1) in &self.0 {
            for (m2, c2) in &o.0 {
                out.add_term(*m1 * *m2, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.0.iter().map(|(m, c)| format!("{c}*{m}")).collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Polynomial in t = p^-s with SymPoly coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerFactor {
    coeffs: Vec<SymPoly>,
}

impl EulerFactor {
    pub fn one() -> Self {
        EulerFactor { coeffs: vec![SymPoly::one()] }
    }

    /// 1 - mu t.
    pub fn linear(mu: SymMonomial) -> Self {
        EulerFactor { coeffs: vec![SymPoly::one(), SymPoly::monomial(mu, -1)] }
    }

    /// prod_{mu} (1 - mu t).
    pub fn from_multiset(s: &SatakeMultiset) -> Self {
        s.entries().iter().fold(Self::one(), |acc, mu| acc.mul(&Self::linear(*mu)))
    }

    pub fn coeffs(&self) -> &[SymPoly] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.iter().rposition(|c| !c.is_zero()).unwrap_or(0)
    }

    pub fn constant_term_is_one(&self) -> bool {
        self.coeffs.first().is_some_and(SymPoly::is_one)
    }

    pub fn mul(&self, o: &EulerFactor) -> EulerFactor {
        let mut coeffs = vec![SymPoly::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        while coeffs.len() > 1 && coeffs.last().is_some_and(SymPoly::is_zero) {
            coeffs.pop();
        }
        EulerFactor { coeffs }
    }

    pub fn product<'a>(factors: impl IntoIterator<Item = &'a EulerFactor>) -> EulerFactor {
        factors.into_iter().fold(Self::one(), |acc, f| acc.mul(f))
    }

    /// Lowest t-degree where two factors differ.
    pub fn first_difference(&self, o: &EulerFactor) -> Option<usize> {
        let n = self.coeffs.len().max(o.coeffs.len());
        let zero = SymPoly::zero();
        (0..n).find(|&i| self.coeffs.get(i).unwrap_or(&zero) != o.coeffs.get(i).unwrap_or(&zero))
    }
}
