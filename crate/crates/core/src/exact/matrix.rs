use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense integer matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(IntMatrix { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, entries: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows of machine integers. All rows must have the
    /// same length.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != cols {
                return Err(Error::Shape(format!("row {i} has {} entries, expected {cols}", row.len())));
            }
            entries.extend(row.iter().map(|&x| BigInt::from(x)));
        }
        Ok(IntMatrix { rows: rows.len(), cols, entries })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn mul(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] += a * &rhs[(k, j)];
                }
            }
        }
        Ok(out)
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<BigInt> {
        if self.rows != self.cols {
            return Err(Error::Shape(format!("determinant of a {}x{} matrix", self.rows, self.cols)));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                    Some(i) => {
                        a.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)]) / &prev;
                    a[(i, j)] = v;
                }
            }
            prev = a[(k, k)].clone();
        }
        Ok(sign * &a[(n - 1, n - 1)])
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

    /// row[dst] += k * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        for j in 0..self.cols {
            let v = k * &self[(src, j)];
            self[(dst, j)] += v;
        }
    }

    /// col[dst] += k * col[src]
    fn add_col_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        for i in 0..self.rows {
            let v = k * &self[(i, src)];
            self[(i, dst)] += v;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = -&self[(r, j)];
            self[(r, j)] = v;
        }
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Smith normal form `D = U·M·V` with unimodular `U`, `V`.
#[derive(Clone, Debug)]
pub struct SmithForm {
    /// `min(rows, cols)` non-negative entries, each dividing the next, zeros last.
    pub diagonal: Vec<BigInt>,
    pub left: IntMatrix,
    pub right: IntMatrix,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diagonal.iter().take_while(|d| !d.is_zero()).count()
    }

    /// The full diagonal matrix `D` with the shape of the input.
    pub fn diagonal_matrix(&self) -> IntMatrix {
        let mut d = IntMatrix::zeros(self.left.rows(), self.right.cols());
        for (i, x) in self.diagonal.iter().enumerate() {
            d[(i, i)] = x.clone();
        }
        d
    }
}

/// Smallest nonzero |entry| in the block `[t.., t..]`.
fn smallest_in_block(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..a.rows {
        for j in t..a.cols {
            let x = &a[(i, j)];
            if x.is_zero() {
                continue;
            }
            if best.map_or(true, |(bi, bj)| x.abs() < a[(bi, bj)].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

/// Smallest nonzero |entry| in row `t` and column `t` from the pivot onward.
fn smallest_in_cross(a: &IntMatrix, t: usize) -> (usize, usize) {
    let mut best = (t, t);
    let consider = |i: usize, j: usize, best: &mut (usize, usize)| {
        let x = &a[(i, j)];
        if !x.is_zero() && (a[*best].is_zero() || x.abs() < a[*best].abs()) {
            *best = (i, j);
        }
    };
    for i in t..a.rows {
        consider(i, t, &mut best);
    }
    for j in t..a.cols {
        consider(t, j, &mut best);
    }
    best
}

/// Smith normal form by repeated Euclidean pivoting.
pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let (rows, cols) = (m.rows, m.cols);
    let mut a = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    for t in 0..rows.min(cols) {
        let Some((pi, pj)) = smallest_in_block(&a, t) else {
            break;
        };
        a.swap_rows(t, pi);
        u.swap_rows(t, pi);
        a.swap_cols(t, pj);
        v.swap_cols(t, pj);

        loop {
            let (pi, pj) = smallest_in_cross(&a, t);
            a.swap_rows(t, pi);
            u.swap_rows(t, pi);
            a.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let mut remainder = false;
            for i in t + 1..rows {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let q = -a[(i, t)].div_floor(&a[(t, t)]);
                a.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                remainder |= !a[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let q = -a[(t, j)].div_floor(&a[(t, t)]);
                a.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                remainder |= !a[(t, j)].is_zero();
            }
            if remainder {
                continue;
            }

            // Row and column are clear; the pivot must divide the rest of the block.
            let offender = (t + 1..rows).find(|&i| {
                (t + 1..cols).any(|j| !a[(i, j)].is_multiple_of(&a[(t, t)]))
            });
            match offender {
                Some(i) => {
                    let one = BigInt::one();
                    a.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }

        if a[(t, t)].is_negative() {
            a.negate_row(t);
            u.negate_row(t);
        }
    }

    let diagonal = (0..rows.min(cols)).map(|i| a[(i, i)].clone()).collect();
    SmithForm { diagonal, left: u, right: v }
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;
    use proptest::prelude::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    /// Invariant factors from determinantal divisors: `s_k = d_k / d_{k-1}`
    /// where `d_k` is the gcd of all k×k minors.
    fn invariant_factors_by_minors(m: &IntMatrix) -> Vec<BigInt> {
        let k_max = m.rows().min(m.cols());
        let mut out = Vec::new();
        let mut prev = BigInt::one();
        for k in 1..=k_max {
            let mut g = BigInt::zero();
            for rs in (0..m.rows()).combinations(k) {
                for cs in (0..m.cols()).combinations(k) {
                    let minor = IntMatrix::new(
                        k,
                        k,
                        rs.iter().flat_map(|&i| cs.iter().map(move |&j| (i, j))).map(|ij| m[ij].clone()).collect(),
                    )
                    .unwrap();
                    g = g.gcd(&minor.determinant().unwrap());
                }
            }
            if g.is_zero() {
                out.extend(std::iter::repeat(BigInt::zero()).take(k_max - k + 1));
                break;
            }
            out.push(&g / &prev);
            prev = g;
        }
        out
    }

    #[test]
    fn identity() {
        let s = smith_normal_form(&IntMatrix::identity(2));
        assert_eq!(s.diagonal, big(&[1, 1]));
    }

    #[test]
    fn frozen_examples_match_minor_oracle() {
        let cases: [(&[[i64; 2]; 2], &[i64]); 2] = [(&[[2, 0], [0, 3]], &[1, 6]), (&[[2, 4], [2, 4]], &[2, 0])];
        for (rows, want) in cases {
            let m = IntMatrix::from_rows(rows).unwrap();
            assert_eq!(invariant_factors_by_minors(&m), big(want));
            assert_eq!(smith_normal_form(&m).diagonal, big(want));
        }
    }

    #[test]
    fn rectangular_and_empty() {
        let m = IntMatrix::from_rows(&[[2, 4, 4], [-6, 6, 12]]).unwrap();
        let s = smith_normal_form(&m);
        assert_eq!(s.diagonal, invariant_factors_by_minors(&m));
        assert_eq!(s.left.mul(&m).unwrap().mul(&s.right).unwrap(), s.diagonal_matrix());
        let z = IntMatrix::zeros(0, 3);
        assert!(smith_normal_form(&z).diagonal.is_empty());
    }

    #[test]
    fn shape_errors() {
        assert!(IntMatrix::new(2, 2, big(&[1, 2, 3])).is_err());
        assert!(IntMatrix::from_rows(&[vec![1, 2], vec![3]]).is_err());
        let a = IntMatrix::identity(2);
        let b = IntMatrix::zeros(3, 1);
        assert!(a.mul(&b).is_err());
        assert!(b.determinant().is_err());
    }

    #[test]
    fn bareiss_determinant() {
        let m = IntMatrix::from_rows(&[[0, 2, 1], [3, -1, 4], [5, 9, -2]]).unwrap();
        // cofactor expansion along the first row
        let want = -2 * (3 * -2 - 4 * 5) + (3 * 9 - -5);
        assert_eq!(m.determinant().unwrap(), BigInt::from(want));
    }

    fn small_matrix() -> impl Strategy<Value = IntMatrix> {
        (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-9i64..=9, r * c)
                .prop_map(move |v| IntMatrix::new(r, c, big(&v)).unwrap())
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn snf_contract(m in small_matrix()) {
            let s = smith_normal_form(&m);
            prop_assert_eq!(s.left.mul(&m).unwrap().mul(&s.right).unwrap(), s.diagonal_matrix());
            prop_assert_eq!(s.left.determinant().unwrap().abs(), BigInt::one());
            prop_assert_eq!(s.right.determinant().unwrap().abs(), BigInt::one());
            for w in s.diagonal.windows(2) {
                prop_assert!(!w[0].is_negative());
                if w[0].is_zero() {
                    prop_assert!(w[1].is_zero());
                } else {
                    prop_assert!(w[1].is_multiple_of(&w[0]));
                }
            }
            prop_assert_eq!(&s.diagonal, &invariant_factors_by_minors(&m));
            if m.rows() == m.cols() {
                let det = m.determinant().unwrap();
                if !det.is_zero() {
                    let prod: BigInt = s.diagonal.iter().product();
                    prop_assert_eq!(prod, det.abs());
                }
            }
        }
    }
}
