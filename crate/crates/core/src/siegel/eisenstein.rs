use num_traits::Zero;

use super::{reduced, FourierIndex};
use crate::arith::{
    bernoulli, dirichlet_l_neg, discriminant_split, divisors, int_pow, kronecker, moebius, q_int, sigma, Q,
};
use crate::error::{Error, Result};

/// Cohen's number H(r, N): zeta(1-2r) at N = 0, and for -N = D f^2 with D
/// fundamental, L(1-r, chi_D) sum_{d|f} mu(d) chi_D(d) d^(r-1) sigma_{2r-1}(f/d).
/// Zero when N = 1, 2 (mod 4).
pub fn cohen_h(r: u32, big_n: u64) -> Q {
    assert!(r >= 1);
    if big_n == 0 {
        return -bernoulli(2 * r as usize) / q_int(2 * r);
    }
    if !matches!(big_n % 4, 0 | 3) {
        return Q::zero();
    }
    let split = discriminant_split(1, big_n);
    let d = split.fundamental;
    let f = split.conductor_int().expect("-N = 0,1 mod 4 has integral conductor");
    let l = dirichlet_l_neg(r, d);
    if l.is_zero() {
        return l;
    }
    let mut sum = Q::zero();
    for e in divisors(f) {
        let mu = moebius(e);
        if mu == 0 {
            continue;
        }
        let chi = kronecker(d, e).unwrap();
        if chi == 0 {
            continue;
        }
        let term = int_pow(e, r - 1) * sigma(2 * r - 1, f / e) * (mu * chi as i64);
        sum += Q::from_integer(term);
    }
    l * sum
}

fn check_weight(weight: i64) -> Result<()> {
    if weight < 4 || weight % 2 != 0 {
        Err(Error::BadWeight(weight))
    } else {
        Ok(())
    }
}

/// C_l = 2 / (zeta(1-l) zeta(3-2l)); the Siegel Eisenstein series of weight l
/// normalized to A(0) = 1 has A(T) = C_l * (L-normalized coefficient).
pub fn eisenstein_normalizer(weight: i64) -> Result<Q> {
    check_weight(weight)?;
    let l = weight as usize;
    let zeta_1 = -bernoulli(l) / q_int(l as u64);
    let zeta_3 = cohen_h(weight as u32 - 1, 0);
    Ok(q_int(2) / (zeta_1 * zeta_3))
}

/// sum_{d | content(T)} d^(l-1) H(l-1, D_T/d^2) for T != 0.
///
/// For primitive T this is L(1-k, chi_{D_T}) times a divisor sum, k = l-1;
/// it is the Eisenstein coefficient with the global constant stripped.
pub fn eisenstein_coeff_lnorm(weight: i64, t: &FourierIndex) -> Result<Q> {
    check_weight(weight)?;
    if !t.is_psd() {
        return Err(Error::Indefinite(*t));
    }
    if *t == FourierIndex::ZERO {
        return Err(Error::NotPositiveDefinite(*t));
    }
    let r = weight as u32 - 1;
    let disc = t.disc() as u64;
    let mut acc = Q::zero();
    for d in divisors(t.content() as u64) {
        acc += Q::from_integer(int_pow(d, r)) * cohen_h(r, disc / (d * d));
    }
    Ok(acc)
}

/// Fourier coefficient of the degree-2 Siegel Eisenstein series of weight l,
/// normalized so that A(0) = 1.
pub fn eisenstein_coeff(weight: i64, t: &FourierIndex) -> Result<Q> {
    check_weight(weight)?;
    let red = reduced(t)?;
    match red.rank() {
        0 => Ok(q_int(1)),
        1 => {
            // rank one: the degree-1 Eisenstein coefficient at c = content
            let c = red.m as u64;
            let l = weight as usize;
            Ok(-q_int(2 * weight) / bernoulli(l) * Q::from_integer(sigma(weight as u32 - 1, c)))
        }
        _ => Ok(eisenstein_normalizer(weight)? * eisenstein_coeff_lnorm(weight, &red)?),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{q_frac, Q};

    #[test]
    fn cohen_h_examples() {
        for r in [3u32, 5, 9, 11] {
            assert_eq!(cohen_h(r, 0), -bernoulli(2 * r as usize) / q_int(2 * r));
            assert_eq!(cohen_h(r, 3), dirichlet_l_neg(r, -3));
        }
        assert!(cohen_h(11, 1).is_zero());
        assert!(cohen_h(11, 2).is_zero());
        assert!(cohen_h(11, 5).is_zero());
        // classical H(2, N) with r = 2 vanishes for -N fundamental (parity)
        assert!(cohen_h(2, 3).is_zero());
        // tabulated: H(3,3) = -2/9, H(3,4) = -1/2, H(3,7) = -16/7
        assert_eq!(cohen_h(3, 3), q_frac(-2, 9));
        assert_eq!(cohen_h(3, 4), q_frac(-1, 2));
        assert_eq!(cohen_h(3, 7), q_frac(-16, 7));
    }

    // Tabulated coefficients of the degree-2 Eisenstein series of weight 4.
    #[test]
    fn eisenstein_weight4_known_values() {
        assert_eq!(eisenstein_coeff(4, &FourierIndex::new(1, 1, 1)).unwrap(), q_int(13440));
        assert_eq!(eisenstein_coeff(4, &FourierIndex::new(1, 0, 1)).unwrap(), q_int(30240));
        assert_eq!(eisenstein_coeff(4, &FourierIndex::new(1, 1, 2)).unwrap(), q_int(138240));
        assert_eq!(eisenstein_coeff(4, &FourierIndex::new(1, 0, 2)).unwrap(), q_int(181440));
        assert_eq!(eisenstein_coeff(4, &FourierIndex::new(1, 0, 0)).unwrap(), q_int(240));
    }

    #[test]
    fn eisenstein_examples() {
        assert_eq!(eisenstein_coeff(12, &FourierIndex::ZERO).unwrap(), Q::from_integer(1.into()));
        assert_eq!(eisenstein_coeff(12, &FourierIndex::new(1, 0, 0)).unwrap(), q_frac(65520, 691));
        let t = FourierIndex::new(1, 1, 1);
        assert_eq!(eisenstein_coeff_lnorm(12, &t).unwrap(), dirichlet_l_neg(11, -3));
        assert_eq!(
            eisenstein_coeff(12, &t).unwrap(),
            eisenstein_normalizer(12).unwrap() * dirichlet_l_neg(11, -3)
        );
        assert!(matches!(eisenstein_coeff(12, &FourierIndex::new(1, 5, 1)), Err(Error::Indefinite(_))));
        assert!(matches!(eisenstein_coeff(11, &t), Err(Error::BadWeight(11))));
    }

    // The uniform divisor-sum formula also covers rank one, with
    // H(l-1, 0) = zeta(3-2l): check it against the degree-1 branch.
    #[test]
    fn rank_one_consistent_with_uniform_formula() {
        for weight in [4i64, 6, 10, 12] {
            for c in 1..12 {
                let t = FourierIndex::new(0, 0, c);
                let uniform = eisenstein_normalizer(weight).unwrap() * eisenstein_coeff_lnorm(weight, &t).unwrap();
                assert_eq!(eisenstein_coeff(weight, &t).unwrap(), uniform);
            }
        }
    }
}
