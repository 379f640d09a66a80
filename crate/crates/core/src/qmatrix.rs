//! Dense matrices over `Q`: row reduction, nullspaces and characteristic
//! polynomials. This is the vector-space side used to cross-check the
//! module computations done over `Λ`.

use std::fmt;

use num_traits::{One, Zero};

use crate::laurent::{LaurentPoly, Rational};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        QMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let prod = a * &rhs[(k, j)];
                    out[(i, j)] += prod;
                }
            }
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (QMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            for j in 0..m.cols {
                m.data.swap(r * m.cols + j, pr * m.cols + j);
            }
            let inv = m[(r, c)].recip();
            for j in 0..m.cols {
                m[(r, j)] = &m[(r, j)] * &inv;
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in 0..m.cols {
                    let delta = &f * &m[(r, j)];
                    m[(i, j)] -= delta;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Nullspace basis as the columns of the returned matrix, in the standard
    /// RREF parametrization: column `k` has a 1 at the `k`-th free variable and
    /// 0 at every other free variable. Also returns the free-variable indices.
    pub fn nullspace(&self) -> (QMatrix, Vec<usize>) {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = QMatrix::zeros(self.cols, free.len());
        for (k, &f) in free.iter().enumerate() {
            basis[(f, k)] = Rational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                basis[(pc, k)] = -r[(row, f)].clone();
            }
        }
        (basis, free)
    }

    /// Characteristic polynomial `det(t·I - self)`, by reduction to upper
    /// Hessenberg form followed by the standard recurrence.
    pub fn charpoly(&self) -> LaurentPoly {
        assert_eq!(self.rows, self.cols, "charpoly of a non-square matrix");
        let n = self.rows;
        let h = self.hessenberg();
        // p[m] is the charpoly of the leading m×m block.
        let mut p: Vec<LaurentPoly> = vec![LaurentPoly::one()];
        for m in 0..n {
            let lin = LaurentPoly::t() - LaurentPoly::constant(h[(m, m)].clone());
            let mut next = &lin * &p[m];
            let mut prod = Rational::one();
            for i in (0..m).rev() {
                prod *= &h[(i + 1, i)];
                if prod.is_zero() {
                    break;
                }
                let coeff = &prod * &h[(i, m)];
                next -= &p[i].scale(&coeff);
            }
            p.push(next);
        }
        p.pop().unwrap()
    }

    /// Similar upper Hessenberg matrix.
    fn hessenberg(&self) -> QMatrix {
        let n = self.rows;
        let mut h = self.clone();
        for c in 0..n.saturating_sub(2) {
            let Some(i) = (c + 1..n).find(|&i| !h[(i, c)].is_zero()) else {
                continue;
            };
            if i != c + 1 {
                for j in 0..n {
                    h.data.swap(i * n + j, (c + 1) * n + j);
                }
                for r in 0..n {
                    h.data.swap(r * n + i, r * n + c + 1);
                }
            }
            let piv_inv = h[(c + 1, c)].recip();
            for r in c + 2..n {
                if h[(r, c)].is_zero() {
                    continue;
                }
                let u = &h[(r, c)] * &piv_inv;
                for j in 0..n {
                    let delta = &u * &h[(c + 1, j)];
                    h[(r, j)] -= delta;
                }
                for k in 0..n {
                    let delta = &u * &h[(k, r)];
                    h[(k, c + 1)] += delta;
                }
            }
        }
        h
    }

    /// Restricts `self` to an invariant subspace spanned by the columns of
    /// `basis`, which must be in the form returned by [`nullspace`]: the
    /// coordinates of a vector in that subspace are its entries at `free`.
    ///
    /// [`nullspace`]: QMatrix::nullspace
    pub fn restrict(&self, basis: &QMatrix, free: &[usize]) -> QMatrix {
        let image = self.mul(basis);
        let k = free.len();
        let mut out = QMatrix::zeros(k, k);
        for (a, &f) in free.iter().enumerate() {
            for b in 0..k {
                out[(a, b)] = image[(f, b)].clone();
            }
        }
        debug_assert_eq!(basis.mul(&out), image, "subspace is not invariant");
        out
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }
}

impl std::ops::Index<(usize, usize)> for QMatrix {
    type Output = Rational;

    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for QMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::rat;

    fn q(rows: &[&[i64]]) -> QMatrix {
        QMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
    }

    /// Leibniz expansion of det(tI - A), independent of the Hessenberg route.
    fn charpoly_by_permutations(a: &QMatrix) -> LaurentPoly {
        use itertools::Itertools;
        let n = a.rows();
        let entry = |i: usize, j: usize| {
            let c = LaurentPoly::constant(-a[(i, j)].clone());
            if i == j {
                c + LaurentPoly::t()
            } else {
                c
            }
        };
        (0..n)
            .permutations(n)
            .map(|perm| {
                let inversions = (0..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .filter(|&(i, j)| perm[i] > perm[j])
                    .count();
                let term: LaurentPoly = (0..n).map(|i| entry(i, perm[i])).product();
                if inversions % 2 == 0 {
                    term
                } else {
                    -term
                }
            })
            .sum()
    }

    #[test]
    fn charpoly_small_cases() {
        assert!(QMatrix::zeros(0, 0).charpoly().is_one());
        let a = q(&[&[2]]);
        assert_eq!(a.charpoly(), "t-2".parse().unwrap());
        let c = q(&[&[0, -1], &[1, 1]]);
        assert_eq!(c.charpoly(), "t^2-t+1".parse().unwrap());
    }

    #[test]
    fn charpoly_matches_leibniz() {
        let mats = [
            q(&[&[1, 2, 0, -1], &[0, 0, 3, 1], &[4, -2, 1, 0], &[1, 1, 1, 1]]),
            q(&[&[0, 0, 0, 5], &[0, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0]]),
            q(&[&[3, 0, 0], &[0, 3, 0], &[0, 0, 3]]),
            q(&[&[0, 1, 0], &[0, 0, 0], &[2, 0, 0]]),
        ];
        for m in &mats {
            assert_eq!(m.charpoly(), charpoly_by_permutations(m), "{m}");
        }
    }

    #[test]
    fn nullspace_and_restriction() {
        let f = q(&[&[1, 2, 3], &[2, 4, 6]]);
        let (basis, free) = f.nullspace();
        assert_eq!(basis.cols(), 2);
        assert_eq!(free, vec![1, 2]);
        assert!(f.mul(&basis).data.iter().all(Zero::is_zero));

        // t acting on ker(F) where F commutes with T.
        let t = q(&[&[2, 0], &[0, 3]]);
        let fm = q(&[&[0, 0], &[0, 1]]);
        let (kb, kf) = fm.nullspace();
        assert_eq!(t.restrict(&kb, &kf), q(&[&[2]]));
        assert_eq!(q(&[&[1, 2], &[2, 4]]).rank(), 1);
        assert!(t.is_invertible());
    }
}
