//! Matrices with polynomial entries.

use std::collections::HashMap;
use std::fmt;

use crate::field::Field;
use crate::poly::{same_ring, Polynomial, RingRef};

#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix<F: Field> {
    rows: usize,
    cols: usize,
    ring: RingRef<F>,
    entries: Vec<Polynomial<F>>,
}

impl<F: Field> PolyMatrix<F> {
    pub fn zero(ring: &RingRef<F>, rows: usize, cols: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            ring: ring.clone(),
            entries: vec![Polynomial::zero(ring); rows * cols],
        }
    }

    pub fn identity(ring: &RingRef<F>, n: usize) -> Self {
        let mut m = Self::zero(ring, n, n);
        for i in 0..n {
            m.set(i, i, Polynomial::one(ring));
        }
        m
    }

    /// Builds from row-major entries; panics on length or ring mismatch.
    pub fn from_rows(ring: &RingRef<F>, rows: Vec<Vec<Polynomial<F>>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged matrix");
            for p in row {
                assert!(same_ring(p.ring(), ring), "ring mismatch");
                entries.push(p);
            }
        }
        PolyMatrix {
            rows: r,
            cols: c,
            ring: ring.clone(),
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn ring(&self) -> &RingRef<F> {
        &self.ring
    }

    pub fn get(&self, r: usize, c: usize) -> &Polynomial<F> {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, p: Polynomial<F>) {
        self.entries[r * self.cols + c] = p;
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), &Polynomial<F>)> {
        let cols = self.cols;
        self.entries
            .iter()
            .enumerate()
            .map(move |(k, p)| ((k / cols, k % cols), p))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|p| p.is_zero())
    }

    pub fn mul(&self, other: &PolyMatrix<F>) -> PolyMatrix<F> {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Self::zero(&self.ring, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Polynomial::zero(&self.ring);
                for k in 0..self.cols {
                    let (a, b) = (self.get(i, k), other.get(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    fn zip_with(&self, other: &PolyMatrix<F>, f: impl Fn(&Polynomial<F>, &Polynomial<F>) -> Polynomial<F>) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "dimension mismatch");
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            ring: self.ring.clone(),
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    pub fn add(&self, other: &PolyMatrix<F>) -> Self {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &PolyMatrix<F>) -> Self {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, p: &Polynomial<F>) -> Self {
        self.map(|e| e * p)
    }

    pub fn map(&self, f: impl Fn(&Polynomial<F>) -> Polynomial<F>) -> Self {
        let entries: Vec<_> = self.entries.iter().map(f).collect();
        let ring = entries.first().map_or(self.ring.clone(), |p| p.ring().clone());
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            ring,
            entries,
        }
    }

    pub fn rebase(&self, target: &RingRef<F>, var_map: &[usize]) -> Self {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            ring: target.clone(),
            entries: self.entries.iter().map(|p| p.rebase(target, var_map)).collect(),
        }
    }

    /// Determinant by Laplace expansion along rows, memoized on column sets.
    pub fn det(&self) -> Polynomial<F> {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let all: Vec<usize> = (0..self.rows).collect();
        self.minor_det(&all, &all)
    }

    fn minor_det(&self, rows: &[usize], cols: &[usize]) -> Polynomial<F> {
        let n = rows.len();
        if n == 0 {
            return Polynomial::one(&self.ring);
        }
        let mut memo: HashMap<u64, Polynomial<F>> = HashMap::new();
        self.laplace(rows, cols, 0, (1u64 << n) - 1, &mut memo)
    }

    // `mask` selects the still-unused positions of `cols`; row `depth` is expanded.
    fn laplace(
        &self,
        rows: &[usize],
        cols: &[usize],
        depth: usize,
        mask: u64,
        memo: &mut HashMap<u64, Polynomial<F>>,
    ) -> Polynomial<F> {
        if depth == rows.len() {
            return Polynomial::one(&self.ring);
        }
        if let Some(p) = memo.get(&mask) {
            return p.clone();
        }
        let mut acc = Polynomial::zero(&self.ring);
        let mut sign_pos = 0;
        for (ci, &c) in cols.iter().enumerate() {
            if mask & (1 << ci) == 0 {
                continue;
            }
            let e = self.get(rows[depth], c);
            if !e.is_zero() {
                let sub = self.laplace(rows, cols, depth + 1, mask & !(1 << ci), memo);
                let term = e * &sub;
                acc = if sign_pos % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            sign_pos += 1;
        }
        memo.insert(mask, acc.clone());
        acc
    }

    /// Classical adjugate: `self * adj = det * I`.
    pub fn adjugate(&self) -> PolyMatrix<F> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut out = Self::zero(&self.ring, n, n);
        for i in 0..n {
            for j in 0..n {
                let rs: Vec<usize> = (0..n).filter(|&r| r != i).collect();
                let cs: Vec<usize> = (0..n).filter(|&c| c != j).collect();
                let m = self.minor_det(&rs, &cs);
                out.set(j, i, if (i + j) % 2 == 0 { m } else { -&m });
            }
        }
        out
    }
}

impl<F: Field> fmt::Display for PolyMatrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
        }
        write!(f, "]")
    }
}

impl<F: Field> fmt::Debug for PolyMatrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Rational, RationalField};
    use crate::poly::PolyRing;

    #[test]
    fn determinant_and_adjugate() {
        let r = PolyRing::<Rational>::standard("a", 4, RationalField);
        let v = |i| Polynomial::var(&r, i);
        let m = PolyMatrix::from_rows(&r, vec![vec![v(0), v(1)], vec![v(2), v(3)]]);
        assert_eq!(m.det().to_string(), "-a2*a3 + a1*a4");
        let adj = m.adjugate();
        let prod = m.mul(&adj);
        let expect = PolyMatrix::identity(&r, 2).scale(&m.det());
        assert_eq!(prod, expect);
    }

    #[test]
    fn three_by_three_det_matches_permutation_expansion() {
        let r = PolyRing::<Rational>::standard("a", 9, RationalField);
        let v = |i| Polynomial::var(&r, i);
        let rows: Vec<Vec<_>> = (0..3).map(|i| (0..3).map(|j| v(3 * i + j)).collect()).collect();
        let m = PolyMatrix::from_rows(&r, rows);
        let perms = [
            ([0, 1, 2], 1),
            ([0, 2, 1], -1),
            ([1, 0, 2], -1),
            ([1, 2, 0], 1),
            ([2, 0, 1], 1),
            ([2, 1, 0], -1),
        ];
        let mut expect = Polynomial::zero(&r);
        for (p, s) in perms {
            let t = &(&v(p[0]) * &v(3 + p[1])) * &v(6 + p[2]);
            expect = if s > 0 { &expect + &t } else { &expect - &t };
        }
        assert_eq!(m.det(), expect);
    }
}
