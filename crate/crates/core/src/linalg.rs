//! Exact rational linear algebra: matrices over `Q` and canonical subspaces.
//!
//! Subspaces are stored as reduced row-echelon bases, which makes equality,
//! ordering and hashing structural: two subspaces are equal as sets of
//! vectors exactly when their representations are equal. That is what lets
//! the rest of the crate deduplicate subspaces inside ordered sets.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// Exact rational scalar: arbitrary-precision numerator and positive
/// denominator, always in lowest terms (guaranteed by the representation).
pub type Rat = BigRational;

/// Shorthand for an integer scalar.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

/// Shorthand for the fraction `p/q`.
pub fn ratio(p: i64, q: i64) -> Rat {
    Rat::new(p.into(), q.into())
}

/// Dense row-major matrix of rationals.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.at(r, c))?;
            }
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rat>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must be rows*cols");
        Matrix { rows, cols, data }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix::new(rows, cols, vec![Rat::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Rat::one();
        }
        m
    }

    /// Builds a matrix from integer entries, row by row.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row.iter().map(|&n| rat(n)));
        }
        Matrix::new(r, c, data)
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        Matrix::new(r, c, data)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Rat {
        &self.data[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Rat {
        &mut self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Rat>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *t.at_mut(c, r) = self.at(r, c).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let mut out = Matrix::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.at(k, c);
                    if !b.is_zero() {
                        *out.at_mut(r, c) += a * b;
                    }
                }
            }
        }
        out
    }

    /// Stacks `other` below `self`.
    pub fn stack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix::new(self.rows + other.rows, self.cols, data)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Reduced row-echelon form with zero rows dropped. Pivot entries are 1,
    /// all other entries in a pivot column are 0, pivot columns strictly
    /// increase. The output is the unique canonical basis of the row space.
    pub fn rref(&self) -> Matrix {
        let mut m = self.clone();
        let mut pivot_row = 0usize;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let mut sel = None;
            for r in pivot_row..m.rows {
                if !m.at(r, col).is_zero() {
                    sel = Some(r);
                    break;
                }
            }
            let Some(sel) = sel else { continue };
            m.swap_rows(pivot_row, sel);
            let inv = m.at(pivot_row, col).recip();
            for c in col..m.cols {
                let v = m.at(pivot_row, c) * &inv;
                *m.at_mut(pivot_row, c) = v;
            }
            for r in 0..m.rows {
                if r == pivot_row || m.at(r, col).is_zero() {
                    continue;
                }
                let factor = m.at(r, col).clone();
                for c in col..m.cols {
                    let v = m.at(r, c) - &factor * m.at(pivot_row, c);
                    *m.at_mut(r, c) = v;
                }
            }
            pivot_row += 1;
        }
        m.data.truncate(pivot_row * m.cols);
        m.rows = pivot_row;
        m
    }

    pub fn rank(&self) -> usize {
        self.rref().rows
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// Gauss-Jordan inverse.
    pub fn inverse(&self) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::SingularMatrix);
        }
        let n = self.rows;
        let mut aug = Matrix::zero(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                *aug.at_mut(r, c) = self.at(r, c).clone();
            }
            *aug.at_mut(r, n + r) = Rat::one();
        }
        let red = aug.rref();
        if red.rows < n {
            return Err(Error::SingularMatrix);
        }
        // Left half must be the identity.
        for r in 0..n {
            for c in 0..n {
                let want = if r == c { Rat::one() } else { Rat::zero() };
                if *red.at(r, c) != want {
                    return Err(Error::SingularMatrix);
                }
            }
        }
        let mut out = Matrix::zero(n, n);
        for r in 0..n {
            for c in 0..n {
                *out.at_mut(r, c) = red.at(r, n + c).clone();
            }
        }
        Ok(out)
    }

    /// Basis of the right kernel `{x : m·x = 0}`, returned as rows.
    pub fn kernel_rows(&self) -> Matrix {
        let red = self.rref();
        let mut pivots = Vec::new();
        let mut col = 0usize;
        for r in 0..red.rows {
            while col < red.cols && red.at(r, col).is_zero() {
                col += 1;
            }
            if col < red.cols {
                pivots.push(col);
                col += 1;
            }
        }
        let pivot_set: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &p in &pivots {
                v[p] = true;
            }
            v
        };
        let mut rows = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free] {
                continue;
            }
            let mut x = vec![Rat::zero(); self.cols];
            x[free] = Rat::one();
            for (r, &p) in pivots.iter().enumerate() {
                x[p] = -red.at(r, free).clone();
            }
            rows.push(x);
        }
        if rows.is_empty() {
            Matrix::zero(0, self.cols)
        } else {
            Matrix::from_rows(rows)
        }
    }

    /// Basis of the left kernel `{w : w·m = 0}`, returned as rows.
    pub fn left_kernel_rows(&self) -> Matrix {
        self.transpose().kernel_rows()
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    /// Dimension of the fixed space `{v : v·m = v}`.
    pub fn fixed_space_dim(&self) -> usize {
        assert_eq!(self.rows, self.cols);
        let mut d = self.clone();
        for i in 0..self.rows {
            *d.at_mut(i, i) -= Rat::one();
        }
        self.rows - d.rank()
    }
}

/// Row-vector times matrix.
pub fn apply_row(v: &[Rat], m: &Matrix) -> Vec<Rat> {
    assert_eq!(v.len(), m.rows());
    let mut out = vec![Rat::zero(); m.cols()];
    for (k, a) in v.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for c in 0..m.cols() {
            let b = m.at(k, c);
            if !b.is_zero() {
                out[c] += a * b;
            }
        }
    }
    out
}

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    assert_eq!(a.len(), b.len());
    let mut s = Rat::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            s += x * y;
        }
    }
    s
}

pub fn is_zero_vec(v: &[Rat]) -> bool {
    v.iter().all(|x| x.is_zero())
}

/// Solves `x · m = v` for a matrix `m` with independent rows. Returns `None`
/// when `v` is outside the row space.
pub fn solve_left(m: &Matrix, v: &[Rat]) -> Option<Vec<Rat>> {
    assert_eq!(v.len(), m.cols());
    let k = m.rows();
    // Augment the transposed system m^T x^T = v^T and reduce.
    let mut aug = Matrix::zero(m.cols(), k + 1);
    for r in 0..m.cols() {
        for c in 0..k {
            *aug.at_mut(r, c) = m.at(c, r).clone();
        }
        *aug.at_mut(r, k) = v[r].clone();
    }
    let red = aug.rref();
    let mut x = vec![Rat::zero(); k];
    for r in 0..red.rows() {
        let mut col = 0;
        while col <= k && red.at(r, col).is_zero() {
            col += 1;
        }
        if col == k {
            return None; // row (0 … 0 | 1): inconsistent
        }
        if col > k {
            continue;
        }
        x[col] = red.at(r, k).clone();
        // Independent rows of m mean every variable column is a pivot, so
        // back-substitution is just reading the augmented column.
        for c in col + 1..k {
            if !red.at(r, c).is_zero() {
                // Dependent rows: fall back to rejecting.
                return None;
            }
        }
    }
    if apply_row(&x, m) == v { Some(x) } else { None }
}

/// A subspace of `Q^n` in canonical form: the basis matrix is in reduced
/// row-echelon form with full row rank. The zero subspace is the `0×n`
/// matrix, so the ambient dimension is always part of the value.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in Q^{}: {:?})", self.dim(), self.ambient, self.basis)
    }
}

impl Subspace {
    /// Canonicalizes a spanning set given as matrix rows.
    pub fn from_spanning(rows: &Matrix) -> Subspace {
        Subspace { ambient: rows.cols(), basis: rows.rref() }
    }

    pub fn from_vectors(ambient: usize, vectors: &[Vec<Rat>]) -> Subspace {
        if vectors.is_empty() {
            return Subspace::zero(ambient);
        }
        Subspace::from_spanning(&Matrix::from_rows(vectors.to_vec()))
    }

    pub fn zero(ambient: usize) -> Subspace {
        Subspace { ambient, basis: Matrix::zero(0, ambient) }
    }

    pub fn full(ambient: usize) -> Subspace {
        Subspace { ambient, basis: Matrix::identity(ambient) }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, got: other.ambient });
        }
        Ok(())
    }

    /// Canonical intersection. `dim(a∩b) = dim a + dim b − dim(a+b)` holds.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        if self.is_full() {
            return Ok(other.clone());
        }
        if other.is_full() {
            return Ok(self.clone());
        }
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.ambient));
        }
        let stacked = self.basis.stack(&other.basis);
        let left_null = stacked.left_kernel_rows();
        let a = self.basis.rows();
        let mut rows = Vec::new();
        for r in 0..left_null.rows() {
            let w = left_null.row(r);
            let v = apply_row(&w[..a], &self.basis);
            rows.push(v);
        }
        Ok(Subspace::from_vectors(self.ambient, &rows))
    }

    /// Smallest subspace containing both (row-stack and reduce).
    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        Ok(Subspace::from_spanning(&self.basis.stack(&other.basis)))
    }

    /// Image `{v·g : v ∈ self}` under an invertible matrix, in canonical form.
    pub fn apply(&self, g: &Matrix) -> Result<Subspace> {
        if g.rows() != self.ambient || g.cols() != self.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, got: g.rows() });
        }
        if !g.is_invertible() {
            return Err(Error::SingularMatrix);
        }
        Ok(Subspace::from_spanning(&self.basis.mul(g)))
    }

    /// The subspace mapped onto `self` by `g`, i.e. `self·g⁻¹`.
    pub fn preimage_in(&self, g: &Matrix) -> Result<Subspace> {
        self.apply(&g.inverse()?)
    }

    /// Membership test for a single vector.
    pub fn contains_vector(&self, v: &[Rat]) -> bool {
        assert_eq!(v.len(), self.ambient);
        if is_zero_vec(v) {
            return true;
        }
        if self.is_zero() {
            return false;
        }
        // With an RREF basis the coefficients are read off the pivot columns.
        self.coords_of(v).is_some()
    }

    /// Coefficients of `v` in the canonical basis, if `v` lies in the subspace.
    pub fn coords_of(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(v.len(), self.ambient);
        let mut coeffs = Vec::with_capacity(self.dim());
        let mut residual = v.to_vec();
        for r in 0..self.basis.rows() {
            let mut col = 0;
            while col < self.ambient && self.basis.at(r, col).is_zero() {
                col += 1;
            }
            let c = residual[col].clone();
            if !c.is_zero() {
                for j in col..self.ambient {
                    let delta = &c * self.basis.at(r, j);
                    residual[j] -= delta;
                }
            }
            coeffs.push(c);
        }
        if is_zero_vec(&residual) {
            Some(coeffs)
        } else {
            None
        }
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        (0..other.basis.rows()).all(|r| self.contains_vector(other.basis.row(r)))
    }

    /// Orthogonal complement with respect to the standard inner product.
    pub fn orthogonal_complement(&self) -> Subspace {
        if self.is_zero() {
            return Subspace::full(self.ambient);
        }
        Subspace { ambient: self.ambient, basis: self.basis.kernel_rows().rref() }
    }
}

/// Runs row reduction on `domain` while applying the same row operations to
/// `carried`. Used to canonicalize a partial isomorphism given as matched
/// (domain row, image row) pairs. The domain rows must be independent.
pub fn reduce_with_carried(domain: &Matrix, carried: &Matrix) -> (Matrix, Matrix) {
    assert_eq!(domain.rows(), carried.rows());
    let n = domain.cols();
    let joint = {
        let mut rows = Vec::with_capacity(domain.rows());
        for r in 0..domain.rows() {
            let mut row = domain.row(r).to_vec();
            row.extend(carried.row(r).iter().cloned());
            rows.push(row);
        }
        if rows.is_empty() {
            Matrix::zero(0, n + carried.cols())
        } else {
            Matrix::from_rows(rows)
        }
    };
    // Pivots can only appear in the domain block because its rows are
    // independent, so plain RREF on the joint matrix does the job.
    let red = joint.rref();
    assert_eq!(red.rows(), domain.rows(), "domain rows must be independent");
    let mut dom_rows = Vec::new();
    let mut car_rows = Vec::new();
    for r in 0..red.rows() {
        dom_rows.push(red.row(r)[..n].to_vec());
        car_rows.push(red.row(r)[n..].to_vec());
    }
    if dom_rows.is_empty() {
        (Matrix::zero(0, n), Matrix::zero(0, carried.cols()))
    } else {
        (Matrix::from_rows(dom_rows), Matrix::from_rows(car_rows))
    }
}
