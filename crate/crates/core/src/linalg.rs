//! Matrices over `Λ = Q[t, 1/t]`: Smith normal form and determinants.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::laurent::{CanonicalPoly, LaurentPoly, Rational};

/// Dense row-major matrix of Laurent polynomials.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LambdaMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<LaurentPoly>,
}

impl LambdaMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        LambdaMatrix {
            rows,
            cols,
            entries: vec![LaurentPoly::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = LaurentPoly::one();
        }
        m
    }

    pub fn diagonal(diag: &[LaurentPoly]) -> Self {
        let mut m = Self::zeros(diag.len(), diag.len());
        for (i, d) in diag.iter().enumerate() {
            m[(i, i)] = d.clone();
        }
        m
    }

    pub fn from_entries(rows: usize, cols: usize, entries: Vec<LaurentPoly>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(LambdaMatrix { rows, cols, entries })
    }

    /// Builds a matrix from rows; `cols` is needed only when there are no rows.
    pub fn from_rows(rows: Vec<Vec<LaurentPoly>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged matrix rows".into()));
        }
        Ok(LambdaMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[LaurentPoly] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[LaurentPoly] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
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

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let prod = a * &rhs[(k, j)];
                    out[(i, j)] += &prod;
                }
            }
        }
        Ok(out)
    }

    /// Entrywise map.
    pub fn map(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> Self {
        LambdaMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    /// `[self | other]`.
    pub fn hconcat(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::Dimension("hconcat of matrices with different heights".into()));
        }
        let mut out = Self::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
            for j in 0..other.cols {
                out[(i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        Ok(out)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row[dst] -= q · row[src]`.
    fn row_axpy(&mut self, dst: usize, src: usize, q: &LaurentPoly) {
        for j in 0..self.cols {
            let delta = q * &self[(src, j)];
            self[(dst, j)] -= &delta;
        }
    }

    /// `col[dst] -= q · col[src]`.
    fn col_axpy(&mut self, dst: usize, src: usize, q: &LaurentPoly) {
        for i in 0..self.rows {
            let delta = &self[(i, src)] * q;
            self[(i, dst)] -= &delta;
        }
    }

    fn scale_row(&mut self, i: usize, u: &LaurentPoly) {
        for j in 0..self.cols {
            self[(i, j)] = &self[(i, j)] * u;
        }
    }

    /// Replaces rows `a`, `b` by `w[0]·a + w[1]·b` and `w[2]·a + w[3]·b`.
    fn mix_rows(&mut self, a: usize, b: usize, w: &[LaurentPoly; 4]) {
        for j in 0..self.cols {
            let (x, y) = (self[(a, j)].clone(), self[(b, j)].clone());
            self[(a, j)] = &(&w[0] * &x) + &(&w[1] * &y);
            self[(b, j)] = &(&w[2] * &x) + &(&w[3] * &y);
        }
    }

    /// Column analogue of [`mix_rows`](Self::mix_rows).
    fn mix_cols(&mut self, a: usize, b: usize, w: &[LaurentPoly; 4]) {
        for i in 0..self.rows {
            let (x, y) = (self[(i, a)].clone(), self[(i, b)].clone());
            self[(i, a)] = &(&w[0] * &x) + &(&w[1] * &y);
            self[(i, b)] = &(&w[2] * &x) + &(&w[3] * &y);
        }
    }

    fn scale_col(&mut self, j: usize, u: &LaurentPoly) {
        for i in 0..self.rows {
            self[(i, j)] = &self[(i, j)] * u;
        }
    }

    /// Exact determinant by Bareiss fraction-free elimination.
    pub fn determinant(&self) -> Result<LaurentPoly> {
        if !self.is_square() {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(LaurentPoly::one());
        }
        let mut m = self.clone();
        let mut negate = false;
        let mut prev = LaurentPoly::one();
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                let Some(r) = (k + 1..n).find(|&r| !m[(r, k)].is_zero()) else {
                    return Ok(LaurentPoly::zero());
                };
                m.swap_rows(k, r);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&m[(i, j)] * &m[(k, k)]) - &(&m[(i, k)] * &m[(k, j)]);
                    m[(i, j)] = num.exact_div(&prev).expect("Bareiss division is exact");
                }
                m[(i, k)] = LaurentPoly::zero();
            }
            prev = m[(k, k)].clone();
        }
        let det = m[(n - 1, n - 1)].clone();
        Ok(if negate { -det } else { det })
    }

    /// Every `k×k` minor, for small matrices.
    pub fn minors(&self, k: usize) -> Vec<LaurentPoly> {
        use itertools::Itertools;
        let mut out = Vec::new();
        for rs in (0..self.rows).combinations(k) {
            for cs in (0..self.cols).combinations(k) {
                let sub: Vec<LaurentPoly> = rs
                    .iter()
                    .flat_map(|&i| cs.iter().map(move |&j| (i, j)))
                    .map(|(i, j)| self[(i, j)].clone())
                    .collect();
                let m = LambdaMatrix::from_entries(k, k, sub).unwrap();
                out.push(m.determinant().unwrap());
            }
        }
        out
    }
}

impl std::ops::Index<(usize, usize)> for LambdaMatrix {
    type Output = LaurentPoly;

    fn index(&self, (i, j): (usize, usize)) -> &LaurentPoly {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for LambdaMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut LaurentPoly {
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Display for LambdaMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|e| e.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// The unit `u` making `u·p` integer-primitive with lowest exponent zero
/// jointly over `ps`, or `None` if all are zero or `u` would be 1.
fn normalizing_unit<'a>(ps: impl Iterator<Item = &'a LaurentPoly>) -> Option<LaurentPoly> {
    let mut numer = BigInt::zero();
    let mut denom = BigInt::one();
    let mut low: Option<i64> = None;
    for p in ps.filter(|p| !p.is_zero()) {
        for c in p.coeffs() {
            numer = numer.gcd(c.numer());
            denom = denom.lcm(c.denom());
        }
        low = Some(low.map_or(p.min_degree(), |l| l.min(p.min_degree())));
    }
    let low = low?;
    let scale = Rational::new(denom, numer);
    (low != 0 || !scale.is_one()).then(|| LaurentPoly::monomial(scale, -low))
}

/// `left · A · right = diag(diag, 0, …)` with `left`, `right` unimodular.
#[derive(Clone, Debug)]
pub struct SmithForm {
    /// Nonzero invariant factors in divisibility order; `diag.len()` is the rank.
    pub diag: Vec<CanonicalPoly>,
    pub left: LambdaMatrix,
    pub right: LambdaMatrix,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diag.len()
    }

    /// The diagonal matrix with the shape of the original input.
    pub fn diagonal_matrix(&self) -> LambdaMatrix {
        let mut d = LambdaMatrix::zeros(self.left.rows, self.right.rows);
        for (i, p) in self.diag.iter().enumerate() {
            d[(i, i)] = p.as_poly().clone();
        }
        d
    }

    /// Invariant factors that are not units.
    pub fn nonunit_factors(&self) -> Vec<CanonicalPoly> {
        self.diag.iter().filter(|p| !p.is_one()).cloned().collect()
    }
}

/// Smith normal form over `Λ`, using the span as Euclidean norm.
///
/// Pivot: nonzero entry of least span in the active block, first in
/// row-major order. Each pivot row is rescaled by a unit so that the
/// diagonal entry is canonical.
pub fn smith_normal_form(a: &LambdaMatrix) -> SmithForm {
    let mut left = LambdaMatrix::identity(a.rows);
    let mut right = LambdaMatrix::identity(a.cols);
    let diag = reduce(a, Some((&mut left, &mut right)));
    SmithForm { diag, left, right }
}

/// The nonzero invariant factors alone, skipping the transforms, whose
/// coefficients grow much faster than the diagonal.
pub fn invariant_factors(a: &LambdaMatrix) -> Vec<CanonicalPoly> {
    reduce(a, None)
}

enum Step {
    /// `entry = q·pivot`.
    Divides(LaurentPoly),
    /// Determinant-one `[[s, u], [-entry/g, pivot/g]]` sending
    /// `(pivot, entry)` to `(g, 0)`.
    Mix([LaurentPoly; 4]),
}

fn bezout_step(pivot: &LaurentPoly, entry: &LaurentPoly) -> Step {
    let (q, r) = entry.div_rem(pivot);
    if r.is_zero() {
        return Step::Divides(q);
    }
    let (g, s, u) = pivot.xgcd(entry).expect("pivot is nonzero");
    let x = -entry.exact_div(&g).expect("gcd divides");
    let y = pivot.exact_div(&g).expect("gcd divides");
    Step::Mix([s, u, x, y])
}

fn reduce(a: &LambdaMatrix, mut track: Option<(&mut LambdaMatrix, &mut LambdaMatrix)>) -> Vec<CanonicalPoly> {
    let (m, n) = (a.rows, a.cols);
    let mut b = a.clone();
    let mut diag = Vec::new();
    macro_rules! left {
        ($op:ident($($arg:expr),*)) => {
            if let Some((l, _)) = track.as_mut() {
                l.$op($($arg),*);
            }
        };
    }
    macro_rules! right {
        ($op:ident($($arg:expr),*)) => {
            if let Some((_, r)) = track.as_mut() {
                r.$op($($arg),*);
            }
        };
    }

    for k in 0..m.min(n) {
        loop {
            let pivot = (k..m)
                .flat_map(|i| (k..n).map(move |j| (i, j)))
                .filter(|&(i, j)| !b[(i, j)].is_zero())
                .min_by_key(|&(i, j)| (b[(i, j)].span(), i, j));
            let Some((pi, pj)) = pivot else {
                return diag;
            };
            b.swap_rows(k, pi);
            left!(swap_rows(k, pi));
            b.swap_cols(k, pj);
            right!(swap_cols(k, pj));

            // Column k, then row k. A non-divisible entry is merged with the
            // pivot by a 2×2 Bezout step that leaves the gcd on the diagonal.
            let mut clean = true;
            for i in k + 1..m {
                if b[(i, k)].is_zero() {
                    continue;
                }
                match bezout_step(&b[(k, k)], &b[(i, k)]) {
                    Step::Divides(q) => {
                        b.row_axpy(i, k, &q);
                        left!(row_axpy(i, k, &q));
                    }
                    Step::Mix(w) => {
                        b.mix_rows(k, i, &w);
                        left!(mix_rows(k, i, &w));
                        clean = false;
                    }
                }
            }
            for j in k + 1..n {
                if b[(k, j)].is_zero() {
                    continue;
                }
                match bezout_step(&b[(k, k)], &b[(k, j)]) {
                    Step::Divides(q) => {
                        b.col_axpy(j, k, &q);
                        right!(col_axpy(j, k, &q));
                    }
                    Step::Mix(w) => {
                        b.mix_cols(k, j, &w);
                        right!(mix_cols(k, j, &w));
                        clean = false;
                    }
                }
            }
            clean &= (k + 1..m).all(|i| b[(i, k)].is_zero());
            for i in k..m {
                if let Some(u) = normalizing_unit(b.row(i).iter()) {
                    b.scale_row(i, &u);
                    left!(scale_row(i, &u));
                }
            }
            for j in k..n {
                if let Some(u) = normalizing_unit((k..m).map(|i| &b[(i, j)])) {
                    b.scale_col(j, &u);
                    right!(scale_col(j, &u));
                }
            }
            if !clean {
                continue;
            }
            let offender = (k + 1..m)
                .flat_map(|i| (k + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| !b[(k, k)].divides(&b[(i, j)]));
            match offender {
                Some((i, _)) => {
                    let minus_one = LaurentPoly::constant(-Rational::one());
                    b.row_axpy(k, i, &minus_one);
                    left!(row_axpy(k, i, &minus_one));
                }
                None => break,
            }
        }
        let (c, e) = b[(k, k)].unit_part();
        debug_assert!(!c.is_zero());
        let unit_inv = LaurentPoly::monomial(c.recip(), -e);
        b.scale_row(k, &unit_inv);
        left!(scale_row(k, &unit_inv));
        diag.push(b[(k, k)].canon());
    }
    diag
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn mat(rows: &[&[&str]]) -> LambdaMatrix {
        LambdaMatrix::from_rows(rows.iter().map(|r| r.iter().map(|s| p(s)).collect()).collect())
            .unwrap()
    }

    fn check(a: &LambdaMatrix, s: &SmithForm) {
        let prod = s.left.mul(a).unwrap().mul(&s.right).unwrap();
        assert_eq!(prod, s.diagonal_matrix());
        assert!(s.left.determinant().unwrap().is_unit());
        assert!(s.right.determinant().unwrap().is_unit());
        for w in s.diag.windows(2) {
            assert!(w[0].divides(&w[1]));
        }
    }

    #[test]
    fn smith_examples() {
        let a = LambdaMatrix::diagonal(&[p("t-2"), p("t-2").pow(2)]);
        let s = smith_normal_form(&a);
        check(&a, &s);
        assert_eq!(s.diag, vec![p("t-2").canon(), p("t-2").pow(2).canon()]);

        let a = mat(&[&["t-1", "1"], &["0", "t-1"]]);
        let s = smith_normal_form(&a);
        check(&a, &s);
        assert_eq!(s.diag, vec![CanonicalPoly::one(), p("t-1").pow(2).canon()]);

        let a = LambdaMatrix::zeros(2, 2);
        let s = smith_normal_form(&a);
        check(&a, &s);
        assert_eq!(s.rank(), 0);
    }

    #[test]
    fn smith_rectangular_and_laurent() {
        let a = mat(&[&["t-1", "t"]]);
        let s = smith_normal_form(&a);
        check(&a, &s);
        assert_eq!(s.diag, vec![CanonicalPoly::one()]);

        let a = mat(&[&["t^-1 - 2", "3t"], &["t^2 - 4t + 4", "0"], &["1/2", "t^-3"]]);
        let s = smith_normal_form(&a);
        check(&a, &s);
        assert_eq!(s.rank(), 2);
    }

    #[test]
    fn smith_needs_divisibility_fix() {
        // diag(t-2, 2t-1) has invariant factors 1, (t-2)(2t-1).
        let a = LambdaMatrix::diagonal(&[p("t-2"), p("2t-1")]);
        let s = smith_normal_form(&a);
        check(&a, &s);
        assert_eq!(s.diag, vec![CanonicalPoly::one(), (p("t-2") * p("2t-1")).canon()]);
    }

    #[test]
    fn determinants() {
        let a = mat(&[&["t-1", "1"], &["-t", "t-1"]]);
        assert_eq!(a.determinant().unwrap(), p("t^2-t+1"));
        assert!(LambdaMatrix::identity(3).determinant().unwrap().is_one());
        let r = mat(&[&["t", "2", "t^-1"], &["1", "t", "3"], &["t", "2", "t^-1"]]);
        assert!(r.determinant().unwrap().is_zero());
        let z = mat(&[&["0", "1"], &["1", "0"]]);
        assert_eq!(z.determinant().unwrap(), p("-1"));
        assert!(matches!(
            LambdaMatrix::zeros(2, 3).determinant(),
            Err(Error::NonSquare { rows: 2, cols: 3 })
        ));
        assert!(LambdaMatrix::zeros(0, 0).determinant().unwrap().is_one());
    }

    #[test]
    fn determinant_matches_cofactor_expansion() {
        let a = mat(&[
            &["t", "1", "0", "2t^-1"],
            &["3", "t^2", "-1", "0"],
            &["0", "t-1", "t", "1"],
            &["1", "0", "2", "t+1"],
        ]);
        fn cofactor(m: &LambdaMatrix) -> LaurentPoly {
            let n = m.rows();
            if n == 1 {
                return m[(0, 0)].clone();
            }
            (0..n)
                .map(|j| {
                    let sub: Vec<LaurentPoly> = (1..n)
                        .flat_map(|i| (0..n).filter(move |&c| c != j).map(move |c| (i, c)))
                        .map(|(i, c)| m[(i, c)].clone())
                        .collect();
                    let minor = cofactor(&LambdaMatrix::from_entries(n - 1, n - 1, sub).unwrap());
                    let term = &m[(0, j)] * &minor;
                    if j % 2 == 0 {
                        term
                    } else {
                        -term
                    }
                })
                .sum()
        }
        assert_eq!(a.determinant().unwrap(), cofactor(&a));
        assert!(!cofactor(&a).coeffs().iter().all(Zero::is_zero));
    }
}
