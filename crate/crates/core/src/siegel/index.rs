use std::fmt;

use crate::error::{Error, Result};

/// Half-integral matrix T = [n, r/2; r/2, m], i.e. the binary form
/// n x^2 + r xy + m y^2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FourierIndex {
    pub n: i64,
    pub r: i64,
    pub m: i64,
}

impl FourierIndex {
    pub const ZERO: FourierIndex = FourierIndex { n: 0, r: 0, m: 0 };

    pub const fn new(n: i64, r: i64, m: i64) -> Self {
        FourierIndex { n, r, m }
    }

    /// D_T = det(2T) = 4nm - r^2.
    pub fn disc(&self) -> i64 {
        4 * self.n * self.m - self.r * self.r
    }

    pub fn content(&self) -> i64 {
        crate::arith::gcd(crate::arith::gcd(self.n, self.r), self.m)
    }

    pub fn trace(&self) -> i64 {
        self.n + self.m
    }

    pub fn is_psd(&self) -> bool {
        self.n >= 0 && self.m >= 0 && self.disc() >= 0
    }

    /// Membership in L+.
    pub fn is_positive_definite(&self) -> bool {
        self.n > 0 && self.disc() > 0
    }

    pub fn rank(&self) -> u8 {
        if *self == Self::ZERO {
            0
        } else if self.disc() == 0 {
            1
        } else {
            2
        }
    }

    pub fn scale(&self, c: i64) -> Self {
        FourierIndex::new(c * self.n, c * self.r, c * self.m)
    }

    /// T/c when the quotient is again half-integral.
    pub fn divide(&self, c: i64) -> Option<Self> {
        (self.n % c == 0 && self.r % c == 0 && self.m % c == 0)
            .then(|| FourierIndex::new(self.n / c, self.r / c, self.m / c))
    }

    /// 0 <= r <= n <= m.
    pub fn is_reduced(&self) -> bool {
        0 <= self.r && self.r <= self.n && self.n <= self.m
    }
}

impl fmt::Display for FourierIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.n, self.r, self.m)
    }
}

/// Integer 2x2 matrix of determinant +-1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Unimodular(pub [[i64; 2]; 2]);

impl Unimodular {
    pub const IDENTITY: Unimodular = Unimodular([[1, 0], [0, 1]]);

    pub fn det(&self) -> i64 {
        let [[a, b], [c, d]] = self.0;
        a * d - b * c
    }

    pub fn mul(&self, o: &Unimodular) -> Unimodular {
        let a = self.0;
        let b = o.0;
        let mut out = [[0; 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        Unimodular(out)
    }

    /// tU T U.
    pub fn act(&self, t: &FourierIndex) -> FourierIndex {
        let [[a, b], [c, d]] = self.0;
        let (n, r, m) = (t.n, t.r, t.m);
        FourierIndex {
            n: n * a * a + r * a * c + m * c * c,
            r: 2 * n * a * b + r * (a * d + b * c) + 2 * m * c * d,
            m: n * b * b + r * b * d + m * d * d,
        }
    }
}

/// Gauss reduction of a positive semi-definite form: returns the reduced
/// representative 0 <= r <= n <= m of the GL_2(Z)-orbit and U with
/// tU T U reduced.
pub fn reduce_index(t: &FourierIndex) -> Result<(FourierIndex, Unimodular)> {
    if !t.is_psd() {
        return Err(Error::Indefinite(*t));
    }
    let mut cur = *t;
    let mut u = Unimodular::IDENTITY;
    loop {
        if cur.n > cur.m {
            let s = Unimodular([[0, 1], [1, 0]]);
            cur = s.act(&cur);
            u = u.mul(&s);
        }
        if cur.n == 0 {
            break;
        }
        // bring r into (-n, n]
        let two_n = 2 * cur.n;
        let shift = (cur.r + cur.n - 1).div_euclid(two_n);
        if shift != 0 {
            let s = Unimodular([[1, -shift], [0, 1]]);
            cur = s.act(&cur);
            u = u.mul(&s);
        }
        if cur.n <= cur.m {
            break;
        }
    }
    if cur.r < 0 {
        let s = Unimodular([[-1, 0], [0, 1]]);
        cur = s.act(&cur);
        u = u.mul(&s);
    }
    debug_assert!(cur.is_reduced(), "{t} -> {cur}");
    Ok((cur, u))
}

/// Reduced representative only.
pub fn reduced(t: &FourierIndex) -> Result<FourierIndex> {
    reduce_index(t).map(|(r, _)| r)
}

/// All reduced positive semi-definite indices with n + m <= trace_bound,
/// sorted.
pub fn reduced_indices(trace_bound: i64, definite_only: bool) -> Vec<FourierIndex> {
    let mut out = Vec::new();
    for n in 0..=trace_bound / 2 {
        for m in n..=(trace_bound - n) {
            for r in 0..=n {
                let t = FourierIndex::new(n, r, m);
                if if definite_only { t.is_positive_definite() } else { t.is_psd() } {
                    out.push(t);
                }
            }
        }
    }
    out.sort();
    out
}

/// All reduced positive definite indices with D_T <= disc_bound, sorted.
pub fn reduced_by_disc(disc_bound: i64) -> Vec<FourierIndex> {
    let mut out = Vec::new();
    // reduced forms satisfy D_T >= 3 n m >= 3 n^2
    let mut n = 1;
    while 3 * n * n <= disc_bound {
        for r in 0..=n {
            let mut m = n;
            while 4 * n * m - r * r <= disc_bound {
                out.push(FourierIndex::new(n, r, m));
                m += 1;
            }
        }
        n += 1;
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn disc_enumeration_matches_trace_enumeration() {
        let by_trace: Vec<_> = reduced_indices(80, true).into_iter().filter(|t| t.disc() <= 60).collect();
        assert_eq!(reduced_by_disc(60), by_trace);
        assert_eq!(reduced_by_disc(2), vec![]);
        assert_eq!(reduced_by_disc(3), vec![FourierIndex::new(1, 1, 1)]);
    }

    #[test]
    fn reduction_examples() {
        let t = FourierIndex::new(1, 1, 1);
        assert_eq!(reduce_index(&t).unwrap(), (t, Unimodular::IDENTITY));
        assert_eq!(reduced(&FourierIndex::new(1, 2, 2)).unwrap(), FourierIndex::new(1, 0, 1));
        assert_eq!(reduced(&FourierIndex::new(5, 3, 2)).unwrap(), reduced(&FourierIndex::new(2, 3, 5)).unwrap());
        assert_eq!(reduced(&FourierIndex::new(3, 0, 0)).unwrap(), FourierIndex::new(0, 0, 3));
        assert_eq!(reduced(&FourierIndex::new(4, 4, 1)).unwrap(), FourierIndex::new(0, 0, 1));
        assert_eq!(reduced(&FourierIndex::new(1, -1, 1)).unwrap(), FourierIndex::new(1, 1, 1));
        assert!(matches!(reduce_index(&FourierIndex::new(1, 3, 1)), Err(Error::Indefinite(_))));
        assert!(reduce_index(&FourierIndex::new(-1, 0, -1)).is_err());
    }

    #[test]
    fn transform_is_recorded() {
        for t in [FourierIndex::new(7, 13, 9), FourierIndex::new(2, 4, 2), FourierIndex::new(9, -17, 10)] {
            let (red, u) = reduce_index(&t).unwrap();
            assert_eq!(u.act(&t), red);
            assert_eq!(u.det().abs(), 1);
        }
    }

    // Brute force: reduced forms of a fixed discriminant are pairwise
    // inequivalent, so distinct reduced forms never collide.
    #[test]
    fn reduced_forms_are_fixed_points() {
        for t in reduced_indices(30, false) {
            assert_eq!(reduced(&t).unwrap(), t);
        }
    }

    fn small_unimodular() -> impl Strategy<Value = Unimodular> {
        prop::collection::vec(
            prop::sample::select(vec![
                Unimodular([[0, 1], [1, 0]]),
                Unimodular([[1, 1], [0, 1]]),
                Unimodular([[1, -1], [0, 1]]),
                Unimodular([[1, 0], [1, 1]]),
                Unimodular([[-1, 0], [0, 1]]),
            ]),
            0..8,
        )
        .prop_map(|v| v.iter().fold(Unimodular::IDENTITY, |acc, s| acc.mul(s)))
    }

    proptest! {
        #[test]
        fn orbit_invariants(n in 0i64..40, m in 0i64..40, r0 in -40i64..40, u in small_unimodular()) {
            let t = FourierIndex::new(n, r0, m);
            prop_assume!(t.is_psd());
            let moved = u.act(&t);
            let (a, b) = (reduced(&t).unwrap(), reduced(&moved).unwrap());
            prop_assert_eq!(a, b);
            prop_assert_eq!(a.disc(), t.disc());
            prop_assert_eq!(a.content(), t.content());
            prop_assert!(a.is_reduced());
        }
    }
}
