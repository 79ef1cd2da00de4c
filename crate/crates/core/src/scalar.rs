//! Exact rational scalars and the dense linear algebra used by every other module.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// An exact rational number. `BigRational` keeps itself reduced with a positive
/// denominator, so structural equality is exact equality.
pub type Scalar = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid scalar literal `{0}`")]
    BadScalar(String),
}

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Scalar {
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p/q"` or `"p"`. Non-canonical input such as `"2/4"` is accepted and reduced.
pub fn parse_scalar(s: &str) -> Result<Scalar, LinalgError> {
    let t = s.trim();
    let bad = || LinalgError::BadScalar(s.to_string());
    match t.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Scalar::new(p, q))
        }
        None => Ok(Scalar::from_integer(BigInt::from_str(t).map_err(|_| bad())?)),
    }
}

/// Canonical text form: `"p/q"`, with `q` omitted when it is 1.
pub fn format_scalar(x: &Scalar) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Dense row-major matrix over [`Scalar`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(format_scalar).collect();
            write!(f, "[{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self, LinalgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(LinalgError::DimensionMismatch("ragged rows".into()));
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    /// Builds a `rows × cols` matrix from its columns. The explicit row count
    /// keeps zero-column matrices well-shaped.
    pub fn from_columns(rows: usize, columns: &[Vec<Scalar>]) -> Result<Self, LinalgError> {
        let mut m = Self::zeros(rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(LinalgError::DimensionMismatch(format!(
                    "column {c} has length {} but {rows} rows were requested",
                    col.len()
                )));
            }
            for (r, x) in col.iter().enumerate() {
                m.set(r, c, x.clone());
            }
        }
        Ok(m)
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
            .expect("rectangular literal")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: Scalar) {
        self.data[r * self.cols + c] = x;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + a * b;
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, x: &[Scalar]) -> Result<Vec<Scalar>, LinalgError> {
        if self.cols != x.len() {
            return Err(LinalgError::DimensionMismatch(format!(
                "{}x{} matrix applied to vector of length {}",
                self.rows,
                self.cols,
                x.len()
            )));
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(x)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    /// Reduced row echelon form with leftmost-column, topmost-row pivoting.
    /// Returns the reduced matrix and its pivot columns.
    fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m.get(row, col).recip();
            for c in col..m.cols {
                let v = m.get(row, c) * &inv;
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let factor = m.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for c in col..m.cols {
                    let v = m.get(r, c) - &factor * m.get(row, c);
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the null space; one vector per free column, in column order,
    /// with that free variable set to 1 and the other free variables 0.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![Scalar::zero(); self.cols];
                x[f] = Scalar::one();
                for (i, &p) in pivots.iter().enumerate() {
                    x[p] = -r.get(i, f).clone();
                }
                x
            })
            .collect()
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, Scalar::one());
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots.iter().take(n).enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j).clone());
            }
        }
        Some(inv)
    }
}

/// Solves `a · x = b` exactly. Returns `None` when the system is inconsistent;
/// free variables are set to zero.
pub fn solve(a: &Matrix, b: &[Scalar]) -> Result<Option<Vec<Scalar>>, LinalgError> {
    if a.rows() != b.len() {
        return Err(LinalgError::DimensionMismatch(format!(
            "matrix has {} rows but right-hand side has length {}",
            a.rows(),
            b.len()
        )));
    }
    let n = a.cols();
    let mut aug = Matrix::zeros(a.rows(), n + 1);
    for (r, br) in b.iter().enumerate() {
        for c in 0..n {
            aug.set(r, c, a.get(r, c).clone());
        }
        aug.set(r, n, br.clone());
    }
    let (red, pivots) = aug.rref();
    if pivots.last() == Some(&n) {
        return Ok(None);
    }
    let mut x = vec![Scalar::zero(); n];
    for (i, &p) in pivots.iter().enumerate() {
        x[p] = red.get(i, n).clone();
    }
    Ok(Some(x))
}

pub fn is_invertible(a: &Matrix) -> bool {
    a.is_square() && a.rank() == a.rows()
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Largest absolute numerator or denominator; used to keep random trials small.
pub fn height(x: &Scalar) -> BigInt {
    std::cmp::max(x.numer().abs(), x.denom().clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| int(x)).collect()
    }

    // Substitution oracle: A·x recomputed by hand.
    fn substitute(a: &Matrix, x: &[Scalar]) -> Vec<Scalar> {
        (0..a.rows())
            .map(|r| (0..a.cols()).map(|c| a.get(r, c) * &x[c]).sum())
            .collect()
    }

    #[test]
    fn solve_identity() {
        let x = solve(&Matrix::identity(2), &v(&[3, 5])).unwrap().unwrap();
        assert_eq!(x, v(&[3, 5]));
    }

    #[test]
    fn solve_inconsistent_zero_row() {
        assert_eq!(solve(&Matrix::zeros(1, 1), &v(&[1])).unwrap(), None);
    }

    #[test]
    fn solve_diagonal() {
        let a = Matrix::from_i64(&[&[2, 0], &[0, 4]]);
        let b = v(&[1, 1]);
        let x = solve(&a, &b).unwrap().unwrap();
        assert_eq!(x, vec![ratio(1, 2), ratio(1, 4)]);
        assert_eq!(substitute(&a, &x), b);
    }

    #[test]
    fn solve_free_variables_are_zero() {
        let a = Matrix::from_i64(&[&[0, 1, 1]]);
        let x = solve(&a, &v(&[2])).unwrap().unwrap();
        assert_eq!(x, v(&[0, 2, 0]));
    }

    #[test]
    fn solve_dimension_mismatch() {
        assert!(matches!(
            solve(&Matrix::identity(2), &v(&[1])),
            Err(LinalgError::DimensionMismatch(_))
        ));
    }

    #[test]
    fn invertibility() {
        assert!(is_invertible(&Matrix::identity(3)));
        assert!(!is_invertible(&Matrix::zeros(2, 3)));
        assert!(!is_invertible(&Matrix::from_i64(&[&[1, 2], &[2, 4]])));
        assert!(is_invertible(&Matrix::zeros(0, 0)));
    }

    #[test]
    fn inverse_round_trip() {
        let a = Matrix::from_i64(&[&[1, 2], &[3, 4]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), Matrix::identity(2));
        assert!(Matrix::from_i64(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let a = Matrix::from_i64(&[&[1, 2, 3], &[2, 4, 6]]);
        let k = a.kernel();
        assert_eq!(k.len(), 2);
        for x in k {
            assert!(is_zero_vec(&a.mul_vec(&x).unwrap()));
        }
    }

    #[test]
    fn scalar_text_form() {
        assert_eq!(format_scalar(&ratio(2, 4)), "1/2");
        assert_eq!(format_scalar(&ratio(-6, 3)), "-2");
        assert_eq!(parse_scalar("-3/6").unwrap(), ratio(-1, 2));
        assert_eq!(parse_scalar("7").unwrap(), int(7));
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("x").is_err());
    }
}
