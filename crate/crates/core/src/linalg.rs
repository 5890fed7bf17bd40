//! Small exact linear algebra over ℚ.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Rank of a matrix given by rows.
pub fn rank(rows: &[Vec<BigRational>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows.to_vec();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..ncols {
        let Some(piv) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, piv);
        let pivot = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = &row[c] / &pivot[c];
                for (x, y) in row[c..ncols].iter_mut().zip(&pivot[c..ncols]) {
                    *x -= &f * y;
                }
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

/// Solves `sum_j x_j * cols[j] = v` for a square system given by its columns.
/// Returns `None` if the columns are linearly dependent.
pub fn solve_columns(cols: &[Vec<BigRational>], v: &[BigRational]) -> Option<Vec<BigRational>> {
    let n = v.len();
    debug_assert_eq!(cols.len(), n);
    // Augmented matrix, row i = (cols[0][i], ..., cols[n-1][i], v[i]).
    let mut m: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            let mut row: Vec<BigRational> = cols.iter().map(|c| c[i].clone()).collect();
            row.push(v[i].clone());
            row
        })
        .collect();
    for c in 0..n {
        let piv = (c..n).find(|&i| !m[i][c].is_zero())?;
        m.swap(c, piv);
        let p = m[c][c].clone();
        for x in m[c][c..].iter_mut() {
            *x /= &p;
        }
        let pivot = m[c].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != c && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row[c..].iter_mut().zip(&pivot[c..]) {
                    *x -= &f * y;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

/// Sum of absolute values.
pub fn l1_norm(x: &[BigRational]) -> BigRational {
    x.iter().fold(BigRational::zero(), |acc, v| acc + v.abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn rank_and_solve() {
        let rows = vec![
            vec![q(1), q(2), q(3)],
            vec![q(2), q(4), q(6)],
            vec![q(0), q(1), q(1)],
        ];
        assert_eq!(rank(&rows), 2);
        let cols = vec![vec![q(2), q(1)], vec![q(1), q(3)]];
        let x = solve_columns(&cols, &[q(5), q(10)]).unwrap();
        assert_eq!(x, vec![q(1), q(3)]);
        let dep = vec![vec![q(1), q(2)], vec![q(2), q(4)]];
        assert!(solve_columns(&dep, &[q(1), q(1)]).is_none());
    }
}
