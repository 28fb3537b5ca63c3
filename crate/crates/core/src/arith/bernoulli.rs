use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{q_int, Q};

// Grows on demand; values for n < len are final.
static TABLE: RwLock<Vec<Q>> = RwLock::new(Vec::new());

/// Bernoulli number B_n with the convention B_1 = -1/2.
pub fn bernoulli(n: usize) -> Q {
    if let Some(b) = TABLE.read().unwrap().get(n) {
        return b.clone();
    }
    let mut table = TABLE.write().unwrap();
    if table.len() <= n {
        *table = akiyama_tanigawa(n.max(2 * table.len()).max(16));
    }
    table[n].clone()
}

// Produces B_0..=B_n. The algorithm natively yields B_1 = +1/2.
fn akiyama_tanigawa(n: usize) -> Vec<Q> {
    let mut row: Vec<Q> = Vec::with_capacity(n + 1);
    let mut out = Vec::with_capacity(n + 1);
    for m in 0..=n {
        row.push(Q::new(BigInt::one(), BigInt::from(m + 1)));
        for j in (1..=m).rev() {
            let diff = &row[j - 1] - &row[j];
            row[j - 1] = diff * q_int(j as u64);
        }
        out.push(row[0].clone());
    }
    if n >= 1 {
        out[1] = -out[1].clone();
    }
    out
}

/// Evaluates the Bernoulli polynomial B_k(x) = sum_j C(k,j) B_j x^(k-j).
pub fn bernoulli_poly_eval(k: usize, x: &Q) -> Q {
    let mut acc = Q::zero();
    let mut binom = BigInt::one();
    for j in 0..=k {
        let term = Q::from_integer(binom.clone()) * bernoulli(j) * num_traits::pow(x.clone(), k - j);
        acc += term;
        binom = binom * BigInt::from(k - j) / BigInt::from(j + 1);
    }
    acc
}
