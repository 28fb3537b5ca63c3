//! Rational octonions and the exceptional Jordan algebra of 3x3 octonion
//! hermitian matrices: Freudenthal determinant, trace pairing, positivity.

mod octonion;

pub use octonion::{Octonion, FANO_TRIPLES};

use std::fmt;

use num_traits::{One, Zero};

use crate::arith::{q_int, Q};

/// Hermitian matrix
///
/// ```text
/// [ a    z    y* ]
/// [ z*   b    x  ]
/// [ y    x*   c  ]
/// ```
///
/// with a, b, c rational and x, y, z octonions (`*` is conjugation).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JordanElement {
    pub a: Q,
    pub b: Q,
    pub c: Q,
    pub x: Octonion,
    pub y: Octonion,
    pub z: Octonion,
}

impl JordanElement {
    pub fn new(a: Q, b: Q, c: Q, x: Octonion, y: Octonion, z: Octonion) -> Self {
        JordanElement { a, b, c, x, y, z }
    }

    pub fn diag(a: Q, b: Q, c: Q) -> Self {
        Self::new(a, b, c, Octonion::zero(), Octonion::zero(), Octonion::zero())
    }

    pub fn zero() -> Self {
        Self::diag(Q::zero(), Q::zero(), Q::zero())
    }

    pub fn identity() -> Self {
        Self::diag(Q::one(), Q::one(), Q::one())
    }

    pub fn scale(&self, l: &Q) -> Self {
        Self::new(&self.a * l, &self.b * l, &self.c * l, self.x.scale(l), self.y.scale(l), self.z.scale(l))
    }

    pub fn trace(&self) -> Q {
        &self.a + &self.b + &self.c
    }

    /// Cyclic relabelling of the three diagonal slots.
    pub fn rotate(&self) -> Self {
        Self::new(
            self.b.clone(),
            self.c.clone(),
            self.a.clone(),
            self.y.clone(),
            self.z.clone(),
            self.x.clone(),
        )
    }

    /// Swap of the last two diagonal slots (a transposition of rows and
    /// columns 2 and 3).
    pub fn swap_last(&self) -> Self {
        Self::new(
            self.a.clone(),
            self.c.clone(),
            self.b.clone(),
            self.x.conj(),
            self.z.conj(),
            self.y.conj(),
        )
    }

    /// Experimental: all entries integral over the order Z e_0 + ... + Z e_7.
    /// This order is not maximal; the semi-integral lattice of the
    /// exceptional group is not modelled.
    pub fn is_integral_experimental(&self) -> bool {
        [&self.a, &self.b, &self.c].iter().all(|q| q.is_integer())
            && [&self.x, &self.y, &self.z].iter().all(|o| o.is_integral())
    }
}

/// Freudenthal cubic form abc - a N(x) - b N(y) - c N(z) + 2 Re((xy)z).
///
/// Re((xy)z) is insensitive to bracketing and to cyclic order, so the
/// trilinear term is well defined; on real entries this is the ordinary
/// 3x3 determinant.
pub fn jordan_det(t: &JordanElement) -> Q {
    let xyz = (&t.x * &t.y) * &t.z;
    &t.a * &t.b * &t.c - &t.a * t.x.norm() - &t.b * t.y.norm() - &t.c * t.z.norm() + q_int(2) * xyz.re()
}

/// Trace form tr(X o Y): diagonal products plus twice the real inner
/// products of matching off-diagonal entries.
pub fn trace_pair(s: &JordanElement, t: &JordanElement) -> Q {
    &s.a * &t.a
        + &s.b * &t.b
        + &s.c * &t.c
        + q_int(2) * (s.x.inner(&t.x) + s.y.inner(&t.y) + s.z.inner(&t.z))
}

/// Nested minors criterion: a > 0, ab - N(z) > 0 and det > 0.
pub fn is_positive(t: &JordanElement) -> bool {
    t.a > Q::zero() && &t.a * &t.b - t.z.norm() > Q::zero() && jordan_det(t) > Q::zero()
}

impl fmt::Display for JordanElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[ {} | {} | {}* ]", self.a, self.z, self.y)?;
        writeln!(f, "[ {}* | {} | {} ]", self.z, self.b, self.x)?;
        write!(f, "[ {} | {}* | {} ]", self.y, self.x, self.c)
    }
}
