//! Dense real linear algebra primitives.
//!
//! Everything here is deterministic: the pivoted Householder factorization
//! uses a fixed pivot rule (largest remaining column norm, lowest index on
//! ties) and every returned basis is sign-normalized so that the first
//! nonzero entry of each column is positive. Identical inputs therefore give
//! bit-identical outputs.

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::real::Real;

/// Dense matrix in row-major order.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Real> Matrix<F> {
    /// Builds a matrix from row-major data; rejects NaN/infinite entries.
    pub fn new(rows: usize, cols: usize, data: Vec<F>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "matrix data length {} does not match {}x{}",
                data.len(),
                rows,
                cols
            )));
        }
        if data.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite("matrix entry is NaN or infinite".into()));
        }
        Ok(Matrix { rows, cols, data })
    }

    /// All-zero matrix.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    /// Identity matrix.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = F::one();
        }
        m
    }

    /// Builds a matrix entry-wise; the generator must yield finite values.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Single-column matrix from a vector.
    pub fn column_vector(x: &[F]) -> Self {
        Matrix { rows: x.len(), cols: 1, data: x.to_vec() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> F {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    /// Row `i` as a slice.
    #[inline]
    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    #[inline]
    fn row_mut(&mut self, i: usize) -> &mut [F] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Column `j` as an owned vector.
    pub fn col(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn transpose(&self) -> Matrix<F> {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j);
            }
        }
        t
    }

    /// `self * rhs`.
    pub fn matmul(&self, rhs: &Matrix<F>) -> Result<Matrix<F>> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            let lhs_row = self.row(i);
            let out_row = out.row_mut(i);
            for (k, &a) in lhs_row.iter().enumerate() {
                if a == F::zero() {
                    continue;
                }
                let rhs_row = rhs.row(k);
                for (o, &b) in out_row.iter_mut().zip(rhs_row) {
                    *o = *o + a * b;
                }
            }
        }
        Ok(out)
    }

    /// `self * x`.
    pub fn matvec(&self, x: &[F]) -> Result<Vec<F>> {
        if x.len() != self.cols {
            return Err(Error::Dimension(format!(
                "matvec: {}x{} times vector of length {}",
                self.rows,
                self.cols,
                x.len()
            )));
        }
        Ok((0..self.rows).map(|i| dot(self.row(i), x)).collect())
    }

    /// `selfᵀ * x` without forming the transpose.
    pub fn t_matvec(&self, x: &[F]) -> Result<Vec<F>> {
        if x.len() != self.rows {
            return Err(Error::Dimension(format!(
                "t_matvec: {}x{} transposed times vector of length {}",
                self.rows,
                self.cols,
                x.len()
            )));
        }
        let mut out = vec![F::zero(); self.cols];
        for (i, &xi) in x.iter().enumerate() {
            if xi == F::zero() {
                continue;
            }
            for (o, &a) in out.iter_mut().zip(self.row(i)) {
                *o = *o + xi * a;
            }
        }
        Ok(out)
    }

    /// Column-wise concatenation `[self rhs]`.
    pub fn hstack(&self, rhs: &Matrix<F>) -> Result<Matrix<F>> {
        if self.rows != rhs.rows {
            return Err(Error::Dimension(format!(
                "hstack: {} rows vs {} rows",
                self.rows, rhs.rows
            )));
        }
        let mut out = Matrix::zeros(self.rows, self.cols + rhs.cols);
        for i in 0..self.rows {
            let row = out.row_mut(i);
            row[..self.cols].copy_from_slice(self.row(i));
            row[self.cols..].copy_from_slice(rhs.row(i));
        }
        Ok(out)
    }

    pub fn max_abs(&self) -> F {
        self.data.iter().fold(F::zero(), |m, &v| m.max(v.abs()))
    }

    pub fn frobenius_norm(&self) -> F {
        self.data.iter().map(|&v| v * v).sum::<F>().sqrt()
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }
}

#[inline]
pub(crate) fn dot<F: Real>(a: &[F], b: &[F]) -> F {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).fold(F::zero(), |s, (&x, &y)| s + x * y)
}

/// Matrix with orthonormal columns (`BᵀB = I` within tolerance).
#[derive(Debug, Clone, PartialEq)]
pub struct OrthonormalBasis<F> {
    mat: Matrix<F>,
}

impl<F: Real> OrthonormalBasis<F> {
    /// Validates orthonormality before wrapping.
    pub fn new(mat: Matrix<F>) -> Result<Self> {
        if mat.cols() > mat.rows() {
            return Err(Error::Dimension(format!(
                "basis has more columns ({}) than ambient dimension ({})",
                mat.cols(),
                mat.rows()
            )));
        }
        let dev = gram_identity_deviation(&mat);
        if dev > F::ortho_tol() {
            return Err(Error::Numerical(format!(
                "columns not orthonormal: max |BᵀB - I| = {dev}"
            )));
        }
        Ok(OrthonormalBasis { mat })
    }

    /// Wraps a matrix known to be orthonormal by construction.
    pub(crate) fn new_unchecked(mat: Matrix<F>) -> Self {
        debug_assert!(gram_identity_deviation(&mat) <= F::ortho_tol());
        OrthonormalBasis { mat }
    }

    pub fn ambient_dim(&self) -> usize {
        self.mat.rows()
    }

    pub fn basis_dim(&self) -> usize {
        self.mat.cols()
    }

    pub fn matrix(&self) -> &Matrix<F> {
        &self.mat
    }

    pub fn into_matrix(self) -> Matrix<F> {
        self.mat
    }

    /// `Bᵀx`: coordinates of `x` in this basis.
    pub fn transpose_apply(&self, x: &[F]) -> Result<Vec<F>> {
        self.mat.t_matvec(x)
    }

    /// `Bc`: embeds coordinates back into the ambient space.
    pub fn apply(&self, c: &[F]) -> Result<Vec<F>> {
        self.mat.matvec(c)
    }

    /// Orthogonal projection `BBᵀx` onto the spanned subspace.
    pub fn project(&self, x: &[F]) -> Result<Vec<F>> {
        let c = self.transpose_apply(x)?;
        self.apply(&c)
    }
}

fn gram_identity_deviation<F: Real>(b: &Matrix<F>) -> F {
    let m = b.cols();
    let mut worst = F::zero();
    for j in 0..m {
        for l in j..m {
            let mut s = F::zero();
            for i in 0..b.rows() {
                s = s + b.get(i, j) * b.get(i, l);
            }
            let target = if j == l { F::one() } else { F::zero() };
            worst = worst.max((s - target).abs());
        }
    }
    worst
}

// ---------------------------------------------------------------------------
// Householder QR with column pivoting
// ---------------------------------------------------------------------------

/// Pivoted QR factorization `A P = Q R`.
///
/// Reflectors are stored below the diagonal (implicit unit leading entry),
/// `R` on and above it, in pivoted column order.
pub(crate) struct PivotedQr<F> {
    fac: Matrix<F>,
    taus: Vec<F>,
    rank: usize,
}

pub(crate) fn pivoted_qr<F: Real>(a: &Matrix<F>) -> PivotedQr<F> {
    let m = a.rows();
    let q = a.cols();
    let mut fac = a.clone();
    let mut taus: Vec<F> = Vec::with_capacity(m.min(q));
    let mut tol = F::zero();

    for j in 0..m.min(q) {
        // Exact norms of the trailing columns; recomputing (rather than
        // downdating) keeps the pivot order independent of rounding drift.
        let mut best = j;
        let mut best_norm2 = F::zero();
        for c in j..q {
            let mut s = F::zero();
            for i in j..m {
                let v = fac.get(i, c);
                s = s + v * v;
            }
            if s > best_norm2 {
                best_norm2 = s;
                best = c;
            }
        }
        let best_norm = best_norm2.sqrt();
        if j == 0 {
            // Relative rank cutoff anchored at the largest pivot magnitude.
            tol = F::of(m.max(q) as f64) * F::epsilon() * best_norm;
        }
        if best_norm <= tol {
            break;
        }
        fac.swap_cols(j, best);

        let x0 = fac.get(j, j);
        let alpha = if x0 >= F::zero() { -best_norm } else { best_norm };
        let v0 = x0 - alpha;
        // vᵀv with the leading entry unscaled
        let vnorm2 = v0 * v0 + (best_norm2 - x0 * x0).max(F::zero());
        let tau = F::of(2.0) * v0 * v0 / vnorm2;

        // Scale the stored reflector so its leading entry is 1.
        for i in j + 1..m {
            let v = fac.get(i, j) / v0;
            fac.set(i, j, v);
        }
        fac.set(j, j, alpha);
        // Apply H = I - tau v vᵀ to the trailing columns: w = vᵀA, A -= tau v wᵀ.
        if j + 1 < q {
            let mut w: Vec<F> = fac.row(j)[j + 1..].to_vec();
            for i in j + 1..m {
                let vi = fac.get(i, j);
                let row = &fac.row(i)[j + 1..];
                for (wc, &aic) in w.iter_mut().zip(row) {
                    *wc = *wc + vi * aic;
                }
            }
            for (aj, &wc) in fac.row_mut(j)[j + 1..].iter_mut().zip(&w) {
                *aj = *aj - tau * wc;
            }
            for i in j + 1..m {
                let vi = fac.get(i, j);
                let t = tau * vi;
                let row = &mut fac.row_mut(i)[j + 1..];
                for (aic, &wc) in row.iter_mut().zip(&w) {
                    *aic = *aic - t * wc;
                }
            }
        }
        taus.push(tau);
    }

    let rank = taus.len();
    PivotedQr { fac, taus, rank }
}

impl<F: Real> PivotedQr<F> {
    pub(crate) fn rank(&self) -> usize {
        self.rank
    }

    /// Overwrites `y` with `Qᵀy`.
    pub(crate) fn apply_qt(&self, y: &mut [F]) {
        let m = self.fac.rows();
        debug_assert_eq!(y.len(), m);
        for (j, &tau) in self.taus.iter().enumerate() {
            let mut w = y[j];
            for i in j + 1..m {
                w = w + self.fac.get(i, j) * y[i];
            }
            let t = tau * w;
            y[j] = y[j] - t;
            for i in j + 1..m {
                y[i] = y[i] - t * self.fac.get(i, j);
            }
        }
    }

    /// Columns `start..start + count` of the full `Q` factor.
    pub(crate) fn q_columns(&self, start: usize, count: usize) -> Matrix<F> {
        let m = self.fac.rows();
        debug_assert!(start + count <= m);
        let mut out = Matrix::zeros(m, count);
        for (l, col) in (start..start + count).enumerate() {
            out.set(col, l, F::one());
        }
        // Q e = H_0 (H_1 (... (H_{r-1} e)))
        for (j, &tau) in self.taus.iter().enumerate().rev() {
            let mut w = out.row(j).to_vec();
            for i in j + 1..m {
                let vi = self.fac.get(i, j);
                if vi == F::zero() {
                    continue;
                }
                for (wc, &oc) in w.iter_mut().zip(out.row(i)) {
                    *wc = *wc + vi * oc;
                }
            }
            for (oc, &wc) in out.row_mut(j).iter_mut().zip(&w) {
                *oc = *oc - tau * wc;
            }
            for i in j + 1..m {
                let vi = self.fac.get(i, j);
                let t = tau * vi;
                for (oc, &wc) in out.row_mut(i).iter_mut().zip(&w) {
                    *oc = *oc - t * wc;
                }
            }
        }
        out
    }
}

/// Flips basis columns so the first nonzero entry of each is positive.
fn fix_column_signs<F: Real>(b: &mut Matrix<F>) {
    for j in 0..b.cols() {
        let mut flip = false;
        for i in 0..b.rows() {
            let v = b.get(i, j);
            if v != F::zero() {
                flip = v < F::zero();
                break;
            }
        }
        if flip {
            for i in 0..b.rows() {
                let v = b.get(i, j);
                b.set(i, j, -v);
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Public operations
// ---------------------------------------------------------------------------

/// Orthonormal basis of a `target_dim`-dimensional subspace of `span(M)ᵖᵉʳᵖ`.
///
/// The requested dimension may be anything up to `n - rank(M)`; rank is
/// decided by the pivoted factorization with a relative cutoff.
pub fn orthonormal_null_basis<F: Real>(
    m: &Matrix<F>,
    target_dim: usize,
) -> Result<OrthonormalBasis<F>> {
    let n = m.rows();
    if n == 0 {
        return Err(Error::Dimension("empty matrix".into()));
    }
    let qr = pivoted_qr(m);
    let rank = qr.rank();
    if target_dim > n - rank {
        return Err(Error::Dimension(format!(
            "requested null-space dimension {} exceeds {} (n = {}, rank = {})",
            target_dim,
            n - rank,
            n,
            rank
        )));
    }
    let mut b = qr.q_columns(rank, target_dim);
    fix_column_signs(&mut b);
    Ok(OrthonormalBasis::new_unchecked(b))
}

/// Orthonormal basis of the column space of `M` (dimension = numerical rank).
pub(crate) fn column_space_basis<F: Real>(m: &Matrix<F>) -> OrthonormalBasis<F> {
    let qr = pivoted_qr(m);
    let mut b = qr.q_columns(0, qr.rank());
    fix_column_signs(&mut b);
    OrthonormalBasis::new_unchecked(b)
}

/// Orthonormal basis of `span(V)ᵖᵉʳᵖ`, so that `[V A]` is square orthonormal.
pub fn complement_basis<F: Real>(v: &OrthonormalBasis<F>) -> Result<OrthonormalBasis<F>> {
    orthonormal_null_basis(v.matrix(), v.ambient_dim() - v.basis_dim())
}

/// `tr(H P)` where `H` projects onto the column space of `x` and `P` is the
/// matrix of `sigma`.
///
/// Computed from an orthonormal column-space basis, so rank-deficient designs
/// are handled; `hat_trace(x, identity)` equals `rank(x)`.
pub fn hat_trace<F: Real>(x: &Matrix<F>, sigma: &Permutation) -> Result<F> {
    if sigma.len() != x.rows() {
        return Err(Error::Dimension(format!(
            "permutation length {} does not match {} rows",
            sigma.len(),
            x.rows()
        )));
    }
    let basis = column_space_basis(x);
    Ok(hat_trace_with(&basis, sigma))
}

/// `tr(H P)` reusing a precomputed column-space basis.
pub(crate) fn hat_trace_with<F: Real>(basis: &OrthonormalBasis<F>, sigma: &Permutation) -> F {
    let b = basis.matrix();
    let mut tr = F::zero();
    // tr(B Bᵀ P) = Σ_v ⟨B[σ(v), ·], B[v, ·]⟩
    for v in 0..b.rows() {
        tr = tr + dot(b.row(sigma.image(v)), b.row(v));
    }
    tr
}

/// Minimum of `‖y - Mc‖²` over coefficient vectors `c`.
///
/// Evaluated through the pivoted factorization (orthogonal projection), which
/// stays valid when `M` is rank-deficient. Always nonnegative.
pub fn least_squares_rss<F: Real>(m: &Matrix<F>, y: &[F]) -> Result<F> {
    if y.len() != m.rows() {
        return Err(Error::Dimension(format!(
            "response length {} does not match {} rows",
            y.len(),
            m.rows()
        )));
    }
    if m.rows() == 0 {
        return Err(Error::Dimension("empty matrix".into()));
    }
    if y.iter().any(|v| !v.is_finite()) {
        return Err(Error::NonFinite("response entry is NaN or infinite".into()));
    }
    let qr = pivoted_qr(m);
    let mut work = y.to_vec();
    qr.apply_qt(&mut work);
    let rss = work[qr.rank()..]
        .iter()
        .fold(F::zero(), |s, &v| s + v * v);
    Ok(rss.max(F::zero()))
}
