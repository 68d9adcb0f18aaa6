//! Dense linear algebra over a field.

use crate::field::Field;

/// Row-reduces in place; returns the pivot columns.
pub fn row_reduce<F: Field>(rows: &mut [Vec<F>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().unwrap();
        for x in rows[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for k in 0..ncols {
                    let v = rows[r][k].clone();
                    rows[i][k] = rows[i][k].clone() - f.clone() * v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Basis of `{v : A v = 0}` for an `m x ncols` matrix given by rows.
pub fn kernel<F: Field>(rows: &[Vec<F>], ncols: usize, desc: &F::Desc) -> Vec<Vec<F>> {
    let mut a = rows.to_vec();
    let pivots = row_reduce(&mut a, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![F::zero(desc); ncols];
            v[f] = F::one(desc);
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -a[r][f].clone();
            }
            v
        })
        .collect()
}

pub fn rank<F: Field>(rows: &[Vec<F>], ncols: usize) -> usize {
    let mut a = rows.to_vec();
    row_reduce(&mut a, ncols).len()
}

/// One solution of `A x = b`, or `None` when inconsistent.
pub fn solve<F: Field>(rows: &[Vec<F>], rhs: &[F], ncols: usize, desc: &F::Desc) -> Option<Vec<F>> {
    let mut aug: Vec<Vec<F>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut v = r.clone();
            v.push(b.clone());
            v
        })
        .collect();
    let pivots = row_reduce(&mut aug, ncols + 1);
    if pivots.contains(&ncols) {
        return None;
    }
    let mut x = vec![F::zero(desc); ncols];
    for (r, &p) in pivots.iter().enumerate() {
        x[p] = aug[r][ncols].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rational, RationalField};

    fn q(n: i64) -> Rational {
        Rational::from_i64(&RationalField, n)
    }

    #[test]
    fn kernel_of_rank_one_matrix() {
        let a = vec![vec![q(1), q(2), q(3)], vec![q(2), q(4), q(6)]];
        let k = kernel(&a, 3, &RationalField);
        assert_eq!(k.len(), 2);
        for v in &k {
            for row in &a {
                let dot = row
                    .iter()
                    .zip(v)
                    .fold(q(0), |acc, (x, y)| acc + x.clone() * y.clone());
                assert!(dot.is_zero());
            }
        }
        assert_eq!(rank(&a, 3), 1);
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let f = PrimeField::new(5).unwrap();
        let e = |v| f.element(v);
        let a = vec![vec![e(1), e(1)], vec![e(1), e(4)]];
        let x = solve(&a, &[e(2), e(0)], 2, &f).unwrap();
        assert!((x[0] + x[1] - e(2)).is_zero());
        assert!((x[0] + e(4) * x[1]).is_zero());
        let b = vec![vec![e(1), e(1)], vec![e(2), e(2)]];
        assert!(solve(&b, &[e(1), e(3)], 2, &f).is_none());
    }
}
