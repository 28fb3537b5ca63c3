use num_traits::Zero;

use super::Q;

/// Outcome of solving an exact, possibly overdetermined, linear system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solution {
    Unique(Vec<Q>),
    /// Index of the first original row that contradicts the others.
    Inconsistent(usize),
    /// Rank of the coefficient matrix, smaller than the unknown count.
    Underdetermined(usize),
}

/// Gauss-Jordan elimination over Q on `rows * x = rhs`. Every row takes
/// part, so a unique answer satisfies all equations exactly.
pub fn solve_exact(rows: &[Vec<Q>], rhs: &[Q]) -> Solution {
    assert_eq!(rows.len(), rhs.len());
    let unknowns = rows.first().map_or(0, Vec::len);
    let mut m: Vec<(Vec<Q>, Q, usize)> =
        rows.iter().zip(rhs).enumerate().map(|(i, (r, b))| (r.clone(), b.clone(), i)).collect();
    let mut rank = 0;
    for col in 0..unknowns {
        let Some(piv) = (rank..m.len()).find(|&i| !m[i].0[col].is_zero()) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = m[rank].0[col].recip();
        let (row, b, _) = &mut m[rank];
        row.iter_mut().for_each(|x| *x *= &inv);
        *b *= &inv;
        let (pivot_row, pivot_b) = (m[rank].0.clone(), m[rank].1.clone());
        for (i, (row, b, _)) in m.iter_mut().enumerate() {
            if i == rank || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x -= &f * y;
            }
            *b -= &f * &pivot_b;
        }
        rank += 1;
    }
    if let Some((_, _, orig)) = m[rank..].iter().find(|(_, b, _)| !b.is_zero()) {
        return Solution::Inconsistent(*orig);
    }
    if rank < unknowns {
        return Solution::Underdetermined(rank);
    }
    Solution::Unique(m[..unknowns].iter().map(|(_, b, _)| b.clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{q_frac, q_int};

    fn qs(v: &[i64]) -> Vec<Q> {
        v.iter().map(|&x| q_int(x)).collect()
    }

    #[test]
    fn overdetermined_consistent() {
        let rows = vec![qs(&[1, 1]), qs(&[1, -1]), qs(&[2, 3])];
        let sol = solve_exact(&rows, &[q_int(3), q_int(1), q_int(7)]);
        assert_eq!(sol, Solution::Unique(vec![q_int(2), q_int(1)]));
    }

    #[test]
    fn detects_inconsistency_and_rank_loss() {
        let rows = vec![qs(&[1, 1]), qs(&[1, -1]), qs(&[2, 3])];
        assert_eq!(solve_exact(&rows, &[q_int(3), q_int(1), q_int(8)]), Solution::Inconsistent(2));
        let rows = vec![qs(&[1, 2]), qs(&[2, 4])];
        assert_eq!(solve_exact(&rows, &[q_int(1), q_int(2)]), Solution::Underdetermined(1));
    }

    #[test]
    fn rational_entries() {
        let rows = vec![vec![q_frac(1, 2), q_frac(1, 3)], vec![q_frac(1, 4), q_frac(-1, 5)]];
        let x = [q_int(6), q_int(-10)];
        let rhs: Vec<Q> = rows.iter().map(|r| &r[0] * &x[0] + &r[1] * &x[1]).collect();
        assert_eq!(solve_exact(&rows, &rhs), Solution::Unique(x.to_vec()));
    }
}
