//! Dense exact Gaussian elimination over a quadratic field.

use crate::error::Result;
use crate::scalar::Surd;

/// Reduces `rows` to reduced row echelon form in place, pivots scaled to 1.
/// Returns the pivot columns; zero rows are dropped.
pub fn rref(rows: &mut Vec<Vec<Surd>>, ncols: usize) -> Result<Vec<usize>> {
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..ncols {
        let Some(found) = (next..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(next, found);
        let inv = rows[next][col].inverse()?;
        for x in rows[next].iter_mut() {
            *x = x.try_mul(&inv)?;
        }
        let pivot_row = rows[next].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == next || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x = x.try_sub(&factor.try_mul(p)?)?;
                }
            }
        }
        pivots.push(col);
        next += 1;
        if next == rows.len() {
            break;
        }
    }
    rows.truncate(next);
    Ok(pivots)
}

pub fn rank(rows: &[Vec<Surd>], ncols: usize) -> Result<usize> {
    let mut work = rows.to_vec();
    Ok(rref(&mut work, ncols)?.len())
}

/// Basis of `{x : A x = 0}`, itself in reduced row echelon form
/// (each vector has a leading 1 in a distinct column).
pub fn nullspace(rows: &[Vec<Surd>], ncols: usize) -> Result<Vec<Vec<Surd>>> {
    let mut work = rows.to_vec();
    let pivots = rref(&mut work, ncols)?;
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    let mut kernel = Vec::with_capacity(free.len());
    for &f in &free {
        let mut v = vec![Surd::zero(); ncols];
        v[f] = Surd::one();
        for (row, &p) in work.iter().zip(&pivots) {
            v[p] = -&row[f];
        }
        kernel.push(v);
    }
    rref(&mut kernel, ncols)?;
    Ok(kernel)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(xs: &[i64]) -> Vec<Surd> {
        xs.iter().map(|&x| Surd::from_integer(x)).collect()
    }

    fn apply(rows: &[Vec<Surd>], v: &[Surd]) -> Vec<Surd> {
        rows.iter()
            .map(|r| {
                r.iter()
                    .zip(v)
                    .fold(Surd::zero(), |acc, (a, b)| &acc + &(a * b))
            })
            .collect()
    }

    #[test]
    fn kernel_of_rank_one_matrix() {
        let m = vec![row(&[1, 2, 3]), row(&[2, 4, 6])];
        let k = nullspace(&m, 3).unwrap();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(apply(&m, v).iter().all(Surd::is_zero));
        }
        assert_eq!(rank(&m, 3).unwrap(), 1);
    }

    #[test]
    fn kernel_over_sqrt_two() {
        let r2 = Surd::sqrt(2);
        // [1, -sqrt2] has kernel spanned by (sqrt2, 1) ~ (1, 1/sqrt2)
        let m = vec![vec![Surd::one(), -&r2]];
        let k = nullspace(&m, 2).unwrap();
        assert_eq!(k.len(), 1);
        assert_eq!(k[0][0], Surd::one());
        assert_eq!(k[0][1], "1/2*sqrt(2)".parse().unwrap());
    }

    #[test]
    fn full_rank_has_empty_kernel() {
        let m = vec![row(&[1, 1]), row(&[1, -1]), row(&[0, 0])];
        assert!(nullspace(&m, 2).unwrap().is_empty());
        assert_eq!(nullspace(&[], 2).unwrap().len(), 2);
    }
}
