//! Dense complex matrices: the carrier of every morphism in the engine.
//!
//! A morphism `X -> Y` is a `dim(Y) x dim(X)` matrix. Tensor products are
//! Kronecker products with row-major leg order, so the leftmost strand of a
//! diagram is the most significant index. Associators are identities under
//! this flattening.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use nalgebra::DMatrix;
use num_complex::Complex;

use crate::error::{Error, Result};

pub type C64 = Complex<f64>;

/// Entrywise equality tolerance used unless a caller overrides it.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Singular-value threshold for rank decisions.
pub const RANK_THRESHOLD: f64 = 1e-7;

pub const ZERO: C64 = C64::new(0.0, 0.0);
pub const ONE: C64 = C64::new(1.0, 0.0);

pub fn c64(re: f64) -> C64 {
    C64::new(re, 0.0)
}

#[derive(Clone, PartialEq)]
pub struct Matrix {
    inner: DMatrix<C64>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows(), self.cols())?;
        for r in 0..self.rows() {
            write!(f, "  ")?;
            for c in 0..self.cols() {
                let z = self.get(r, c);
                write!(f, "{:+.4}{:+.4}i ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            inner: DMatrix::from_element(rows, cols, ZERO),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            inner: DMatrix::identity(n, n),
        }
    }

    /// 1x1 matrix, i.e. a scalar endomorphism of the unit.
    pub fn scalar(z: C64) -> Self {
        Self {
            inner: DMatrix::from_element(1, 1, z),
        }
    }

    pub fn from_row_major(rows: usize, cols: usize, entries: &[C64]) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                op: "from_row_major",
                left: (rows, cols),
                right: (entries.len(), 1),
            });
        }
        Ok(Self {
            inner: DMatrix::from_row_slice(rows, cols, entries),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        Self {
            inner: DMatrix::from_fn(rows, cols, |r, c| f(r, c)),
        }
    }

    pub(crate) fn from_inner(inner: DMatrix<C64>) -> Self {
        Self { inner }
    }

    pub(crate) fn inner(&self) -> &DMatrix<C64> {
        &self.inner
    }

    pub fn rows(&self) -> usize {
        self.inner.nrows()
    }

    pub fn cols(&self) -> usize {
        self.inner.ncols()
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows(), self.cols())
    }

    pub fn is_square(&self) -> bool {
        self.rows() == self.cols()
    }

    pub fn get(&self, r: usize, c: usize) -> C64 {
        self.inner[(r, c)]
    }

    pub fn set(&mut self, r: usize, c: usize, z: C64) {
        self.inner[(r, c)] = z;
    }

    pub fn entries_row_major(&self) -> Vec<C64> {
        let mut out = Vec::with_capacity(self.rows() * self.cols());
        for r in 0..self.rows() {
            for c in 0..self.cols() {
                out.push(self.inner[(r, c)]);
            }
        }
        out
    }

    /// `self ∘ rhs`: apply `rhs` first, then `self`.
    pub fn compose(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols() != rhs.rows() {
            return Err(Error::DimensionMismatch {
                op: "compose",
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        Ok(Self {
            inner: &self.inner * &rhs.inner,
        })
    }

    /// Kronecker product; `self` is the left strand.
    pub fn tensor(&self, rhs: &Matrix) -> Matrix {
        Self {
            inner: self.inner.kronecker(&rhs.inner),
        }
    }

    pub fn try_add(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.shape() != rhs.shape() {
            return Err(Error::DimensionMismatch {
                op: "add",
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        Ok(Self {
            inner: &self.inner + &rhs.inner,
        })
    }

    pub fn try_sub(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.shape() != rhs.shape() {
            return Err(Error::DimensionMismatch {
                op: "sub",
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        Ok(Self {
            inner: &self.inner - &rhs.inner,
        })
    }

    pub fn scale(&self, z: C64) -> Matrix {
        Self {
            inner: &self.inner * z,
        }
    }

    pub fn adjoint(&self) -> Matrix {
        Self {
            inner: self.inner.adjoint(),
        }
    }

    pub fn transpose(&self) -> Matrix {
        Self {
            inner: self.inner.transpose(),
        }
    }

    pub fn conj(&self) -> Matrix {
        Self {
            inner: self.inner.map(|z| z.conj()),
        }
    }

    pub fn trace(&self) -> C64 {
        self.inner.diagonal().iter().fold(ZERO, |acc, z| acc + z)
    }

    pub fn max_abs(&self) -> f64 {
        self.inner.iter().fold(0.0, |m, z| m.max(z.norm()))
    }

    /// `‖self − other‖_max`; infinite when the shapes differ.
    pub fn deviation(&self, other: &Matrix) -> f64 {
        if self.shape() != other.shape() {
            return f64::INFINITY;
        }
        self.inner
            .iter()
            .zip(other.inner.iter())
            .fold(0.0, |m, (a, b)| m.max((a - b).norm()))
    }

    /// Scale-free comparison `‖self − other‖_max / max(1, ‖self‖_max)`.
    pub fn relative_deviation(&self, other: &Matrix) -> f64 {
        self.deviation(other) / self.max_abs().max(1.0)
    }

    pub fn approx_eq(&self, other: &Matrix, tol: f64) -> bool {
        self.deviation(other) <= tol
    }

    pub fn direct_sum(&self, rhs: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.rows() + rhs.rows(), self.cols() + rhs.cols());
        out.set_block(0, 0, self);
        out.set_block(self.rows(), self.cols(), rhs);
        out
    }

    pub fn set_block(&mut self, row: usize, col: usize, block: &Matrix) {
        self.inner
            .view_mut((row, col), (block.rows(), block.cols()))
            .copy_from(&block.inner);
    }

    pub fn add_block(&mut self, row: usize, col: usize, block: &Matrix) {
        let mut view = self.inner.view_mut((row, col), (block.rows(), block.cols()));
        view += &block.inner;
    }

    pub fn block(&self, row: usize, col: usize, rows: usize, cols: usize) -> Matrix {
        Self {
            inner: self.inner.view((row, col), (rows, cols)).into_owned(),
        }
    }

    pub fn column(&self, c: usize) -> Matrix {
        self.block(0, c, self.rows(), 1)
    }

    /// Matrix whose columns are the given column vectors.
    pub fn from_columns(rows: usize, columns: &[Matrix]) -> Matrix {
        let mut out = Matrix::zeros(rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            out.set_block(0, c, col);
        }
        out
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch {
                op: "inverse",
                left: self.shape(),
                right: self.shape(),
            });
        }
        if self.rows() == 0 {
            return Ok(self.clone());
        }
        let sv = self.singular_values();
        let smallest = sv.last().copied().unwrap_or(0.0);
        if smallest <= RANK_THRESHOLD * sv[0].max(1.0) {
            return Err(Error::Singular);
        }
        self.inner
            .clone()
            .try_inverse()
            .map(Matrix::from_inner)
            .ok_or(Error::Singular)
    }

    /// Singular values in descending order.
    pub fn singular_values(&self) -> Vec<f64> {
        if self.rows() == 0 || self.cols() == 0 {
            return Vec::new();
        }
        let mut sv: Vec<f64> = self.inner.clone().svd(false, false).singular_values.iter().copied().collect();
        sv.sort_by(|a, b| b.total_cmp(a));
        sv
    }

    pub fn rank(&self, threshold: f64) -> usize {
        self.singular_values().iter().filter(|&&s| s > threshold).count()
    }

    /// Orthonormal basis (as columns) of the null space.
    pub fn kernel_basis(&self, threshold: f64) -> Matrix {
        let n = self.cols();
        if n == 0 {
            return Matrix::zeros(0, 0);
        }
        // nalgebra's complex SVD returns unreliable singular vectors on
        // structured rank-deficient input; the values alone are fine.
        let nullity = n - self.rank(threshold);
        let gram = &self.adjoint() * self;
        let (_, vectors) = gram.hermitian_eigen();
        vectors.block(0, 0, n, nullity)
    }

    /// Least-squares solution of `self · x = rhs`; errors if the residual is not small.
    pub fn solve_linear(&self, rhs: &Matrix, tol: f64) -> Result<Matrix> {
        if self.rows() != rhs.rows() {
            return Err(Error::DimensionMismatch {
                op: "solve_linear",
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        let n = self.cols();
        let r = self.rank(RANK_THRESHOLD);
        let (values, vectors) = (&self.adjoint() * self).hermitian_eigen();
        let range = vectors.block(0, n - r, n, r);
        let inv = Matrix::from_fn(r, r, |i, j| if i == j { c64(1.0 / values[n - r + i]) } else { ZERO });
        let x = &(&(&range * &inv) * &range.adjoint()) * &(&self.adjoint() * rhs);
        let residual = self.compose(&x)?.deviation(rhs);
        if residual > tol.max(RANK_THRESHOLD) {
            return Err(Error::Singular);
        }
        Ok(x)
    }

    /// Eigen-decomposition of a Hermitian matrix: ascending eigenvalues, orthonormal eigenvector columns.
    pub fn hermitian_eigen(&self) -> (Vec<f64>, Matrix) {
        let n = self.rows();
        if n == 0 {
            return (Vec::new(), Matrix::zeros(0, 0));
        }
        let h = (&self.inner + self.inner.adjoint()) * c64(0.5);
        let eig = h.symmetric_eigen();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
        let values = order.iter().map(|&k| eig.eigenvalues[k]).collect();
        let vectors = Matrix::from_fn(n, n, |r, c| eig.eigenvectors[(r, order[c])]);
        (values, vectors)
    }

    /// Orthonormal basis of the column span of `self`, strongest directions first.
    pub fn column_space(&self, threshold: f64) -> Matrix {
        let m = self.rows();
        if m == 0 || self.cols() == 0 {
            return Matrix::zeros(m, 0);
        }
        let r = self.rank(threshold);
        let (_, vectors) = (self * &self.adjoint()).hermitian_eigen();
        let cols: Vec<Matrix> = (0..r).map(|k| vectors.column(m - 1 - k)).collect();
        Matrix::from_columns(m, &cols)
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        self.try_add(rhs).expect("matrix addition shape")
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        self.try_sub(rhs).expect("matrix subtraction shape")
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.compose(rhs).expect("matrix product shape")
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        self.scale(c64(-1.0))
    }
}

/// Frobenius inner product `tr(a · b†)`.
pub fn trace_pairing(a: &Matrix, b: &Matrix) -> C64 {
    a.inner
        .iter()
        .zip(b.inner.iter())
        .fold(ZERO, |acc, (x, y)| acc + x * y.conj())
}

/// Modified Gram–Schmidt under the trace pairing. Vectors whose residual norm
/// drops below `threshold` are discarded.
pub fn gram_schmidt(vectors: &[Matrix], threshold: f64) -> Vec<Matrix> {
    let mut basis: Vec<Matrix> = Vec::new();
    for v in vectors {
        let mut w = v.clone();
        for b in &basis {
            let coeff = trace_pairing(&w, b);
            w = &w - &b.scale(coeff);
        }
        let norm = libm::sqrt(trace_pairing(&w, &w).re);
        if norm > threshold {
            basis.push(w.scale(c64(1.0 / norm)));
        }
    }
    basis
}

/// The flip `X ⊗ Y -> Y ⊗ X` for `dim X = p`, `dim Y = q`.
pub fn swap(p: usize, q: usize) -> Matrix {
    let mut out = Matrix::zeros(p * q, p * q);
    for a in 0..p {
        for b in 0..q {
            out.set(b * p + a, a * q + b, ONE);
        }
    }
    out
}

/// Permutation of tensor legs: output leg `j` is input leg `perm[j]`.
pub fn leg_permutation(dims: &[usize], perm: &[usize]) -> Matrix {
    assert_eq!(dims.len(), perm.len(), "leg permutation arity");
    let total: usize = dims.iter().product();
    let out_dims: Vec<usize> = perm.iter().map(|&p| dims[p]).collect();
    let mut out = Matrix::zeros(total, total);
    let mut index = vec![0usize; dims.len()];
    for flat in 0..total {
        let mut rest = flat;
        for k in (0..dims.len()).rev() {
            index[k] = rest % dims[k];
            rest /= dims[k];
        }
        let mut target = 0;
        for (j, &p) in perm.iter().enumerate() {
            target = target * out_dims[j] + index[p];
        }
        out.set(target, flat, ONE);
    }
    out
}

/// Tensor product of a list of matrices, left to right.
pub fn tensor_all(factors: &[&Matrix]) -> Matrix {
    factors
        .iter()
        .fold(Matrix::identity(1), |acc, f| acc.tensor(f))
}

/// `(I_p ⊗ a ⊗ I_q) · m` without forming the Kronecker product.
pub fn apply_local(p: usize, a: &Matrix, q: usize, m: &Matrix) -> Matrix {
    let (ar, ac) = a.shape();
    assert_eq!(m.rows(), p * ac * q, "apply_local shape");
    let cols = m.cols();
    let mut out = Matrix::zeros(p * ar * q, cols);
    let mut stage = DMatrix::from_element(ac, q * cols, ZERO);
    for x in 0..p {
        for y in 0..ac {
            for z in 0..q {
                for c in 0..cols {
                    stage[(y, z * cols + c)] = m.inner[((x * ac + y) * q + z, c)];
                }
            }
        }
        let product = &a.inner * &stage;
        for r in 0..ar {
            for z in 0..q {
                for c in 0..cols {
                    out.inner[((x * ar + r) * q + z, c)] = product[(r, z * cols + c)];
                }
            }
        }
    }
    out
}

/// `m · (I_p ⊗ a ⊗ I_q)` without forming the Kronecker product.
pub fn apply_local_right(m: &Matrix, p: usize, a: &Matrix, q: usize) -> Matrix {
    apply_local(p, &a.transpose(), q, &m.transpose()).transpose()
}

/// Trace over the first tensor leg of dimension `d`.
pub fn partial_trace_first(d: usize, m: &Matrix) -> Matrix {
    let n = m.rows() / d;
    assert_eq!(m.shape(), (d * n, d * n), "partial trace shape");
    let mut out = Matrix::zeros(n, n);
    for a in 0..d {
        out.add_block(0, 0, &m.block(a * n, a * n, n, n));
    }
    out
}

/// Inclusion/projection pair splitting an idempotent.
#[derive(Clone, Debug)]
pub struct SplitPair {
    pub sub_dim: usize,
    /// `ambient x sub_dim`, orthonormal columns.
    pub inclusion: Matrix,
    /// `sub_dim x ambient`.
    pub projection: Matrix,
}

/// Splits an idempotent `e` as `inclusion ∘ projection`, with
/// `projection ∘ inclusion = id`.
pub fn split_idempotent(e: &Matrix, tol: f64) -> Result<SplitPair> {
    if !e.is_square() {
        return Err(Error::DimensionMismatch {
            op: "split_idempotent",
            left: e.shape(),
            right: e.shape(),
        });
    }
    let n = e.rows();
    if n == 0 {
        return Ok(SplitPair {
            sub_dim: 0,
            inclusion: Matrix::zeros(0, 0),
            projection: Matrix::zeros(0, 0),
        });
    }
    let defect = (e * e).deviation(e);
    if defect > tol {
        return Err(Error::NotIdempotent { defect });
    }
    // A genuine idempotent has singular values 0 or >= 1.
    let sv = e.singular_values();
    if let Some(&bad) = sv.iter().find(|&&s| s > RANK_THRESHOLD && s < 0.5) {
        return Err(Error::RankUnstable { value: bad });
    }
    let inclusion = e.column_space(0.5);
    let projection = &inclusion.adjoint() * e;
    Ok(SplitPair {
        sub_dim: inclusion.cols(),
        inclusion,
        projection,
    })
}
