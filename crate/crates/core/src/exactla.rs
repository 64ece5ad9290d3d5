//! Dense exact linear algebra over [`Scalar`].
//!
//! Everything is Gauss-Jordan elimination over the field. Rows are scanned
//! for zeros before any arithmetic, which keeps the cost proportional to the
//! number of nonzero entries for the sparse matrices produced by braidings.

use std::fmt;
use std::ops::Mul;

use crate::scalars::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinAlgError {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular { kernel_witness: Vec<Scalar> },
    #[error("dimension mismatch: {0}")]
    Shape(String),
}

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|s| s.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Scalar::one();
        }
        m
    }

    pub fn diagonal(entries: &[Scalar]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, e) in entries.iter().enumerate() {
            m.data[i * n + i] = e.clone();
        }
        m
    }

    /// Builds a matrix from rows; all rows must have the same length.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        Matrix {
            rows: r,
            cols: c,
            data,
        }
    }

    /// Convenience for tests and small literals.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Scalar::from_int(v)).collect())
                .collect(),
        )
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

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn get_mut(&mut self, r: usize, c: usize) -> &mut Scalar {
        &mut self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        t
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn mul_mat(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "incompatible shapes");
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        out.data[r * other.cols + c] += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                let mut acc = Scalar::zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &Self) -> Self {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut out = Self::zeros(rows, cols);
        for r1 in 0..self.rows {
            for c1 in 0..self.cols {
                let a = self.get(r1, c1);
                if a.is_zero() {
                    continue;
                }
                for r2 in 0..other.rows {
                    for c2 in 0..other.cols {
                        let b = other.get(r2, c2);
                        if !b.is_zero() {
                            out.set(r1 * other.rows + r2, c1 * other.cols + c2, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    /// Stacks `self` on top of `other`.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn rank(&self) -> usize {
        rref(self).rank
    }
}

impl Mul<&Matrix> for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.mul_mat(rhs)
    }
}

/// Reduced row-echelon form: `matrix` holds only the `rank` nonzero rows.
#[derive(Debug, Clone)]
pub struct Rref {
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

/// Gauss-Jordan elimination on a list of rows of length `cols`.
///
/// Returns the nonzero rows of the reduced echelon form and their pivot
/// columns. Zero input rows are discarded.
pub fn rref_rows(rows: Vec<Vec<Scalar>>, cols: usize) -> (Vec<Vec<Scalar>>, Vec<usize>) {
    let mut rows: Vec<Vec<Scalar>> = rows
        .into_iter()
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .collect();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows.len() {
            break;
        }
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = rows[rank][col]
            .inverse()
            .expect("pivot is nonzero by construction");
        if !inv.is_one() {
            for x in rows[rank][col..].iter_mut() {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
        }
        let nz: Vec<usize> = (col..cols).filter(|&c| !rows[rank][c].is_zero()).collect();
        let pivot_row = std::mem::take(&mut rows[rank]);
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for &c in &nz {
                let t = &f * &pivot_row[c];
                row[c] -= &t;
            }
        }
        rows[rank] = pivot_row;
        pivots.push(col);
        rank += 1;
    }
    rows.truncate(rank);
    (rows, pivots)
}

pub fn rref(m: &Matrix) -> Rref {
    let (rows, pivots) = rref_rows(m.to_rows(), m.cols);
    let rank = rows.len();
    let matrix = if rows.is_empty() {
        Matrix::zeros(0, m.cols)
    } else {
        Matrix::from_rows(rows)
    };
    Rref {
        matrix,
        rank,
        pivots,
    }
}

/// A subspace of `Scalar^ambient_dim`, stored as an RREF basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    pub ambient_dim: usize,
    pub basis: Vec<Vec<Scalar>>,
    pub pivot_columns: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Vec::new(),
            pivot_columns: Vec::new(),
        }
    }

    /// The span of the given vectors.
    pub fn span(ambient_dim: usize, vectors: Vec<Vec<Scalar>>) -> Self {
        let (basis, pivot_columns) = rref_rows(vectors, ambient_dim);
        Subspace {
            ambient_dim,
            basis,
            pivot_columns,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Reduces `v` against the echelon basis; zero iff `v` lies in the subspace.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut v = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivot_columns) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (x, b) in v.iter_mut().zip(row) {
                if !b.is_zero() {
                    *x -= &(&f * b);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }
}

/// Null space of `m` (vectors `v` with `m v = 0`).
pub fn kernel(m: &Matrix) -> Subspace {
    let r = rref(m);
    let cols = m.cols;
    let mut is_pivot = vec![false; cols];
    for &p in &r.pivots {
        is_pivot[p] = true;
    }
    let mut vecs = Vec::new();
    for free in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![Scalar::zero(); cols];
        v[free] = Scalar::one();
        for (i, &p) in r.pivots.iter().enumerate() {
            let e = r.matrix.get(i, free);
            if !e.is_zero() {
                v[p] = -e;
            }
        }
        vecs.push(v);
    }
    let k = Subspace::span(cols, vecs);
    debug_assert_eq!(r.rank + k.dim(), cols, "rank-nullity violated");
    k
}

/// Column space of `m`.
pub fn image(m: &Matrix) -> Subspace {
    let t = m.transpose();
    let s = Subspace::span(m.rows, t.to_rows());
    debug_assert_eq!(s.dim() + kernel(m).dim(), m.cols, "rank-nullity violated");
    s
}

/// Result of solving `m x = b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solution {
    Unique(Vec<Scalar>),
    Multiple {
        particular: Vec<Scalar>,
        kernel: Subspace,
    },
    NoSolution,
}

pub fn solve(m: &Matrix, b: &[Scalar]) -> Solution {
    assert_eq!(m.rows, b.len(), "right-hand side has wrong length");
    let aug: Vec<Vec<Scalar>> = (0..m.rows)
        .map(|r| {
            let mut row = m.row(r).to_vec();
            row.push(b[r].clone());
            row
        })
        .collect();
    let (rows, pivots) = rref_rows(aug, m.cols + 1);
    if pivots.last() == Some(&m.cols) {
        return Solution::NoSolution;
    }
    let mut x = vec![Scalar::zero(); m.cols];
    for (row, &p) in rows.iter().zip(&pivots) {
        x[p] = row[m.cols].clone();
    }
    let k = kernel(m);
    if k.dim() == 0 {
        Solution::Unique(x)
    } else {
        Solution::Multiple {
            particular: x,
            kernel: k,
        }
    }
}

pub fn invert(m: &Matrix) -> Result<Matrix, LinAlgError> {
    if m.rows != m.cols {
        return Err(LinAlgError::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let n = m.rows;
    let aug: Vec<Vec<Scalar>> = (0..n)
        .map(|r| {
            let mut row = m.row(r).to_vec();
            row.extend((0..n).map(|c| if c == r { Scalar::one() } else { Scalar::zero() }));
            row
        })
        .collect();
    let (rows, pivots) = rref_rows(aug, 2 * n);
    if pivots.len() < n || pivots[n - 1] >= n {
        let k = kernel(m);
        return Err(LinAlgError::Singular {
            kernel_witness: k.basis[0].clone(),
        });
    }
    Ok(Matrix::from_rows(
        rows.into_iter().map(|r| r[n..].to_vec()).collect(),
    ))
}

/// Coordinates on `ambient / K`, using the non-pivot standard coordinates
/// of `K`'s echelon basis as the complement.
#[derive(Debug, Clone)]
pub struct QuotientCoords {
    k: Subspace,
    free: Vec<usize>,
}

impl QuotientCoords {
    pub fn dim(&self) -> usize {
        self.free.len()
    }

    /// The standard basis indices spanning the chosen complement.
    pub fn complement_indices(&self) -> &[usize] {
        &self.free
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        let r = self.k.reduce(v);
        self.free.iter().map(|&i| r[i].clone()).collect()
    }
}

pub fn quotient_coords(ambient_dim: usize, k: &Subspace) -> QuotientCoords {
    assert_eq!(k.ambient_dim, ambient_dim);
    let mut is_pivot = vec![false; ambient_dim];
    for &p in &k.pivot_columns {
        is_pivot[p] = true;
    }
    QuotientCoords {
        k: k.clone(),
        free: (0..ambient_dim).filter(|&i| !is_pivot[i]).collect(),
    }
}
