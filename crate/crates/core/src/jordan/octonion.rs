use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::arith::Q;

/// Oriented lines of the Fano plane: for each (i, j, k), e_i e_j = e_k and
/// cyclic shifts; reversing the order flips the sign.
pub const FANO_TRIPLES: [(usize, usize, usize); 7] =
    [(1, 2, 3), (1, 4, 5), (1, 7, 6), (2, 4, 6), (2, 5, 7), (3, 4, 7), (3, 6, 5)];

/// Signed product table of basis elements: e_i e_j = sign * e_index.
const fn table() -> [[(i8, u8); 8]; 8] {
    let mut t = [[(0i8, 0u8); 8]; 8];
    let mut i = 0;
    while i < 8 {
        t[0][i] = (1, i as u8);
        t[i][0] = (1, i as u8);
        if i > 0 {
            t[i][i] = (-1, 0);
        }
        i += 1;
    }
    let mut l = 0;
    while l < 7 {
        let (a, b, c) = FANO_TRIPLES[l];
        let cyc = [(a, b, c), (b, c, a), (c, a, b)];
        let mut s = 0;
        while s < 3 {
            let (p, q, r) = cyc[s];
            t[p][q] = (1, r as u8);
            t[q][p] = (-1, r as u8);
            s += 1;
        }
        l += 1;
    }
    t
}

const TABLE: [[(i8, u8); 8]; 8] = table();

/// Octonion with rational coordinates over e_0 = 1, e_1 .. e_7.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Octonion(pub [Q; 8]);

impl Octonion {
    pub fn zero() -> Self {
        Octonion(std::array::from_fn(|_| Q::zero()))
    }

    pub fn one() -> Self {
        Self::basis(0)
    }

    pub fn real(q: Q) -> Self {
        let mut o = Self::zero();
        o.0[0] = q;
        o
    }

    pub fn basis(i: usize) -> Self {
        let mut o = Self::zero();
        o.0[i] = Q::one();
        o
    }

    pub fn re(&self) -> Q {
        self.0[0].clone()
    }

    /// 2 Re(x) e_0 - x.
    pub fn conj(&self) -> Self {
        Octonion(std::array::from_fn(|i| if i == 0 { self.0[0].clone() } else { -&self.0[i] }))
    }

    /// Sum of squared coordinates, equal to x conj(x).
    pub fn norm(&self) -> Q {
        self.0.iter().map(|c| c * c).sum()
    }

    /// Re(x conj(y)), the coordinate dot product.
    pub fn inner(&self, y: &Octonion) -> Q {
        self.0.iter().zip(&y.0).map(|(a, b)| a * b).sum()
    }

    pub fn scale(&self, l: &Q) -> Self {
        Octonion(std::array::from_fn(|i| &self.0[i] * l))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer())
    }
}

impl Mul for &Octonion {
    type Output = Octonion;

    fn mul(self, y: &Octonion) -> Octonion {
        let mut out = Octonion::zero();
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.0.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let (sign, k) = TABLE[i][j];
                let term = a * b;
                if sign > 0 {
                    out.0[k as usize] += term;
                } else {
                    out.0[k as usize] -= term;
                }
            }
        }
        out
    }
}

impl Mul for Octonion {
    type Output = Octonion;

    fn mul(self, y: Octonion) -> Octonion {
        &self * &y
    }
}

impl Mul<&Octonion> for Octonion {
    type Output = Octonion;

    fn mul(self, y: &Octonion) -> Octonion {
        &self * y
    }
}

impl Add for &Octonion {
    type Output = Octonion;

    fn add(self, y: &Octonion) -> Octonion {
        Octonion(std::array::from_fn(|i| &self.0[i] + &y.0[i]))
    }
}

impl Sub for &Octonion {
    type Output = Octonion;

    fn sub(self, y: &Octonion) -> Octonion {
        Octonion(std::array::from_fn(|i| &self.0[i] - &y.0[i]))
    }
}

impl Neg for &Octonion {
    type Output = Octonion;

    fn neg(self) -> Octonion {
        Octonion(std::array::from_fn(|i| -&self.0[i]))
    }
}

impl fmt::Display for Octonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| if i == 0 { c.to_string() } else { format!("{c}e{i}") })
            .collect();
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}
