//! Dense matrices over the rationals with exact elimination.
//!
//! Forward elimination is fraction-free: each row is scaled to integer
//! entries first and pivots are processed Bareiss-style, so no rounding
//! ever happens and the reduced echelon form is the canonical one.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::LinalgError;

pub type Scalar = BigRational;

/// Row-major dense matrix over `BigRational`.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl std::fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "RationalMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self[(r, c)].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl std::ops::Index<(usize, usize)> for RationalMatrix {
    type Output = Scalar;
    fn index(&self, (r, c): (usize, usize)) -> &Scalar {
        &self.entries[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Scalar {
        &mut self.entries[r * self.cols + c]
    }
}

impl RationalMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RationalMatrix { rows, cols, entries: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    /// Builds a matrix from row vectors; all rows must share one length.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self, LinalgError> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(LinalgError::RaggedRows);
        }
        Ok(RationalMatrix { rows: nrows, cols: ncols, entries: rows.into_iter().flatten().collect() })
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn rows_vec(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn scale(&self, factor: &Scalar) -> Self {
        let entries = self.entries.iter().map(|e| e * factor).collect();
        RationalMatrix { rows: self.rows, cols: self.cols, entries }
    }

    pub fn add(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(LinalgError::ShapeMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        Ok(RationalMatrix { rows: self.rows, cols: self.cols, entries })
    }

    pub fn mul(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::ShapeMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let mut out = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a * b;
                    let cell = &mut out[(i, j)];
                    *cell = &*cell + prod;
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>, LinalgError> {
        if self.cols != v.len() {
            return Err(LinalgError::ShapeMismatch { left: (self.rows, self.cols), right: (v.len(), 1) });
        }
        let mut out = vec![Scalar::zero(); self.rows];
        for (r, slot) in out.iter_mut().enumerate() {
            let mut acc = Scalar::zero();
            for c in 0..self.cols {
                let a = &self[(r, c)];
                if !a.is_zero() && !v[c].is_zero() {
                    acc += a * &v[c];
                }
            }
            *slot = acc;
        }
        Ok(out)
    }

    /// Square-and-multiply power; `pow(0)` is the identity.
    pub fn pow(&self, mut e: usize) -> Result<Self, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let mut acc = Self::identity(self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Submatrix selected by explicit row and column index lists.
    pub fn submatrix(&self, row_idx: &[usize], col_idx: &[usize]) -> Self {
        let mut out = Self::zero(row_idx.len(), col_idx.len());
        for (i, &r) in row_idx.iter().enumerate() {
            for (j, &c) in col_idx.iter().enumerate() {
                out[(i, j)] = self[(r, c)].clone();
            }
        }
        out
    }

    /// Kronecker product; block `(i,j)` of the result is `self[i,j] * other`.
    pub fn kronecker(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = &other[(k, l)];
                        if !b.is_zero() {
                            out[(i * other.rows + k, j * other.cols + l)] = a * b;
                        }
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out[(c, r)] = self[(r, c)].clone();
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let ech = self.echelon();
        (ech.reduced(), ech.pivots)
    }

    fn echelon(&self) -> Echelon {
        Echelon::compute(self)
    }

    /// Basis of the right kernel, one vector per free column, in reduced
    /// echelon order. Deterministic for fixed input.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let (red, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![Scalar::zero(); self.cols];
            v[free] = Scalar::one();
            for (r, &p) in pivots.iter().enumerate() {
                let coeff = &red[(r, free)];
                if !coeff.is_zero() {
                    v[p] = -coeff.clone();
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Solves `self * x = rhs`; `None` when inconsistent.
    pub fn solve(&self, rhs: &[Scalar]) -> Result<Option<Vec<Scalar>>, LinalgError> {
        if rhs.len() != self.rows {
            return Err(LinalgError::ShapeMismatch { left: (self.rows, self.cols), right: (rhs.len(), 1) });
        }
        let mut aug = Self::zero(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug[(r, c)] = self[(r, c)].clone();
            }
            aug[(r, self.cols)] = rhs[r].clone();
        }
        let (red, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = red[(r, self.cols)].clone();
        }
        Ok(Some(x))
    }

    /// Inverse of a square matrix; `None` when singular.
    pub fn inverse(&self) -> Result<Option<Self>, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut aug = Self::zero(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug[(r, c)] = self[(r, c)].clone();
            }
            aug[(r, n + r)] = Scalar::one();
        }
        let (red, pivots) = aug.rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| i != p) {
            return Ok(None);
        }
        let mut inv = Self::zero(n, n);
        for r in 0..n {
            for c in 0..n {
                inv[(r, c)] = red[(r, n + c)].clone();
            }
        }
        Ok(Some(inv))
    }
}

/// Intermediate state of fraction-free forward elimination.
struct Echelon {
    /// Integer working rows after forward elimination, pivot rows first.
    rows: Vec<Vec<BigInt>>,
    cols: usize,
    pivots: Vec<usize>,
}

impl Echelon {
    fn compute(m: &RationalMatrix) -> Echelon {
        // Clearing denominators row by row keeps the row space intact and
        // lets the elimination run over integers.
        let mut work: Vec<Vec<BigInt>> = (0..m.nrows())
            .map(|r| clear_denominators(m.row(r)))
            .collect();
        let cols = m.ncols();
        let mut pivots = Vec::new();
        let mut next_row = 0;
        for col in 0..cols {
            let Some(pivot_row) = (next_row..work.len()).find(|&r| !work[r][col].is_zero()) else {
                continue;
            };
            work.swap(next_row, pivot_row);
            let pivot = work[next_row][col].clone();
            for r in next_row + 1..work.len() {
                if work[r][col].is_zero() {
                    continue;
                }
                let factor = work[r][col].clone();
                for c in col..cols {
                    let val = &work[r][c] * &pivot - &factor * &work[next_row][c];
                    work[r][c] = val;
                }
                normalize_int_row(&mut work[r]);
            }
            pivots.push(col);
            next_row += 1;
        }
        Echelon { rows: work, cols, pivots }
    }

    /// Back-substitutes and rescales to the canonical reduced form.
    fn reduced(&self) -> RationalMatrix {
        let k = self.pivots.len();
        let mut red: Vec<Vec<Scalar>> = self.rows[..k]
            .iter()
            .map(|row| row.iter().map(|v| Scalar::from(v.clone())).collect())
            .collect();
        for i in (0..k).rev() {
            let p = self.pivots[i];
            let inv = red[i][p].recip();
            for c in p..self.cols {
                let v = std::mem::replace(&mut red[i][c], Scalar::zero());
                red[i][c] = v * &inv;
            }
            for r in 0..i {
                let factor = red[r][p].clone();
                if factor.is_zero() {
                    continue;
                }
                for c in p..self.cols {
                    let sub = &red[i][c] * &factor;
                    red[r][c] -= sub;
                }
            }
        }
        let mut out = RationalMatrix::zero(k, self.cols);
        for (r, row) in red.into_iter().enumerate() {
            for (c, v) in row.into_iter().enumerate() {
                out[(r, c)] = v;
            }
        }
        out
    }
}

fn clear_denominators(row: &[Scalar]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for e in row {
        if !e.is_zero() {
            lcm = num_integer::lcm(lcm, e.denom().clone());
        }
    }
    let mut out: Vec<BigInt> = row.iter().map(|e| e.numer() * (&lcm / e.denom())).collect();
    normalize_int_row(&mut out);
    out
}

/// Divides an integer row by the gcd of its entries (sign-normalized so the
/// first nonzero entry is positive); keeps Bareiss growth in check.
fn normalize_int_row(row: &mut [BigInt]) {
    let mut gcd = BigInt::zero();
    for v in row.iter() {
        if !v.is_zero() {
            gcd = num_integer::gcd(gcd, v.abs());
        }
    }
    if gcd.is_zero() || gcd.is_one() {
        if let Some(first) = row.iter().find(|v| !v.is_zero()) {
            if first.is_negative() {
                for v in row.iter_mut() {
                    *v = -std::mem::take(v);
                }
            }
        }
        return;
    }
    let negate = row.iter().find(|v| !v.is_zero()).map(|v| v.is_negative()).unwrap_or(false);
    for v in row.iter_mut() {
        let mut q = std::mem::take(v) / &gcd;
        if negate {
            q = -q;
        }
        *v = q;
    }
}

pub fn rational(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Scalar {
    Scalar::from(BigInt::from(n))
}
