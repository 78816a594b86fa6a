//! Small dense complex-matrix kernels.
//!
//! Everything in the crate lives on 2×2 and 4×4 complex matrices plus 3×3
//! real correlation matrices, so the kernels here favour plain loops over a
//! general linear-algebra dependency. The Hermitian eigensolver is a cyclic
//! complex Jacobi iteration and the 3×3 SVD is one-sided (Hestenes) Jacobi.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex64;
use thiserror::Error;

pub type C64 = Complex64;

const ZERO: C64 = C64::new(0.0, 0.0);
const ONE: C64 = C64::new(1.0, 0.0);

/// Relative threshold on the off-diagonal Frobenius norm that ends a Jacobi sweep.
const JACOBI_TOL: f64 = 1e-14;
const MAX_SWEEPS: usize = 64;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MatrixError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: String, found: String },
    #[error("matrix is not Hermitian (deviation {deviation:.3e})")]
    NotHermitian { deviation: f64 },
}

/// Row-major dense complex matrix.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<C64>,
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                let z = self[(i, j)];
                write!(f, "{:+.6}{:+.6}i  ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl ComplexMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = ONE;
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<C64>) -> Result<Self, MatrixError> {
        if rows * cols != data.len() {
            return Err(MatrixError::DimensionMismatch {
                expected: format!("{} entries", rows * cols),
                found: format!("{} entries", data.len()),
            });
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_real(rows: usize, cols: usize, data: &[f64]) -> Result<Self, MatrixError> {
        Self::from_vec(rows, cols, data.iter().map(|&x| C64::new(x, 0.0)).collect())
    }

    pub fn diag(values: &[C64]) -> Self {
        let mut m = Self::zeros(values.len(), values.len());
        for (i, &v) in values.iter().enumerate() {
            m[(i, i)] = v;
        }
        m
    }

    pub fn diag_real(values: &[f64]) -> Self {
        let v: Vec<C64> = values.iter().map(|&x| C64::new(x, 0.0)).collect();
        Self::diag(&v)
    }

    /// Rank-one projector |v⟩⟨v|.
    pub fn projector(v: &[C64]) -> Self {
        let n = v.len();
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = v[i] * v[j].conj();
            }
        }
        m
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

    pub fn as_slice(&self) -> &[C64] {
        &self.data
    }

    pub fn column(&self, j: usize) -> Vec<C64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn scale(&self, s: C64) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|&z| z * s).collect() }
    }

    pub fn scale_real(&self, s: f64) -> Self {
        self.scale(C64::new(s, 0.0))
    }

    pub fn adjoint(&self) -> Self {
        let mut m = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(j, i)] = self[(i, j)].conj();
            }
        }
        m
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(j, i)] = self[(i, j)];
            }
        }
        m
    }

    pub fn trace(&self) -> C64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    pub fn frob_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// ‖M − M†‖_F, or infinity for non-square input.
    pub fn hermiticity_deviation(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        let mut acc = 0.0;
        for i in 0..self.rows {
            for j in 0..self.cols {
                acc += (self[(i, j)] - self[(j, i)].conj()).norm_sqr();
            }
        }
        acc.sqrt()
    }

    /// Hermitian within `tol·max(1, ‖M‖_F)`.
    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermiticity_deviation() <= tol * self.frob_norm().max(1.0)
    }

    fn check_dims(&self, rows: usize, cols: usize) -> Result<(), MatrixError> {
        if self.rows != rows || self.cols != cols {
            return Err(MatrixError::DimensionMismatch {
                expected: format!("{rows}x{cols}"),
                found: format!("{}x{}", self.rows, self.cols),
            });
        }
        Ok(())
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = C64;
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        let mut out = ComplexMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == ZERO {
                    continue;
                }
                for j in 0..rhs.cols {
                    out.data[i * rhs.cols + j] += a * rhs.data[k * rhs.cols + j];
                }
            }
        }
        out
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix sum dimension mismatch");
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix difference dimension mismatch");
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

/// Pauli matrix σ_k for k = 0 (identity), 1 (x), 2 (y), 3 (z).
pub fn pauli(k: usize) -> ComplexMatrix {
    let (a, b, c, d) = match k {
        0 => (ONE, ZERO, ZERO, ONE),
        1 => (ZERO, ONE, ONE, ZERO),
        2 => (ZERO, C64::new(0.0, -1.0), C64::new(0.0, 1.0), ZERO),
        3 => (ONE, ZERO, ZERO, -ONE),
        _ => panic!("pauli index {k} out of range 0..=3"),
    };
    ComplexMatrix { rows: 2, cols: 2, data: vec![a, b, c, d] }
}

/// Kronecker product a ⊗ b.
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let rows = a.rows * b.rows;
    let cols = a.cols * b.cols;
    let mut out = ComplexMatrix::zeros(rows, cols);
    for i in 0..a.rows {
        for j in 0..a.cols {
            let s = a[(i, j)];
            for k in 0..b.rows {
                for l in 0..b.cols {
                    out[(i * b.rows + k, j * b.cols + l)] = s * b[(k, l)];
                }
            }
        }
    }
    out
}

pub fn commutator(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    &(a * b) - &(b * a)
}

pub fn frob_norm(m: &ComplexMatrix) -> f64 {
    m.frob_norm()
}

/// tr_B of a two-qubit operator: (tr_B m)_{ij} = Σ_k m_{(i,k),(j,k)}.
pub fn partial_trace_b(m: &ComplexMatrix) -> Result<ComplexMatrix, MatrixError> {
    m.check_dims(4, 4)?;
    let mut out = ComplexMatrix::zeros(2, 2);
    for i in 0..2 {
        for j in 0..2 {
            out[(i, j)] = (0..2).map(|k| m[(2 * i + k, 2 * j + k)]).sum();
        }
    }
    Ok(out)
}

/// tr_A of a two-qubit operator: (tr_A m)_{ij} = Σ_k m_{(k,i),(k,j)}.
pub fn partial_trace_a(m: &ComplexMatrix) -> Result<ComplexMatrix, MatrixError> {
    m.check_dims(4, 4)?;
    let mut out = ComplexMatrix::zeros(2, 2);
    for i in 0..2 {
        for j in 0..2 {
            out[(i, j)] = (0..2).map(|k| m[(2 * k + i, 2 * k + j)]).sum();
        }
    }
    Ok(out)
}

/// Transpose on the B factor: m_{(i,k),(j,l)} ↦ m_{(i,l),(j,k)}.
pub fn partial_transpose_b(m: &ComplexMatrix) -> Result<ComplexMatrix, MatrixError> {
    m.check_dims(4, 4)?;
    let mut out = ComplexMatrix::zeros(4, 4);
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    out[(2 * i + k, 2 * j + l)] = m[(2 * i + l, 2 * j + k)];
                }
            }
        }
    }
    Ok(out)
}

/// Exchange the two qubits: m_{(i,k),(j,l)} ↦ m_{(k,i),(l,j)}.
pub fn swap_subsystems(m: &ComplexMatrix) -> Result<ComplexMatrix, MatrixError> {
    m.check_dims(4, 4)?;
    let mut out = ComplexMatrix::zeros(4, 4);
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    out[(2 * k + i, 2 * l + j)] = m[(2 * i + k, 2 * j + l)];
                }
            }
        }
    }
    Ok(out)
}

/// Eigendecomposition of a Hermitian matrix: `m = V diag(values) V†`.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    /// Ascending.
    pub values: Vec<f64>,
    /// Columns are the eigenvectors, in the order of `values`.
    pub vectors: ComplexMatrix,
}

impl HermitianEigen {
    pub fn reconstruct(&self) -> ComplexMatrix {
        let d = ComplexMatrix::diag_real(&self.values);
        &(&self.vectors * &d) * &self.vectors.adjoint()
    }

    pub fn min(&self) -> f64 {
        self.values[0]
    }

    pub fn max(&self) -> f64 {
        *self.values.last().expect("non-empty spectrum")
    }
}

/// Hermitian eigensolver (cyclic complex Jacobi).
///
/// Fails when `m` is not square or deviates from Hermitian by more than
/// `tol·max(1, ‖m‖_F)`. Eigenvalues come back ascending; each eigenvector is
/// phase-fixed so its first non-negligible component is real and positive,
/// and clusters of equal eigenvalues are ordered lexicographically by vector.
pub fn herm_eig(m: &ComplexMatrix, tol: f64) -> Result<HermitianEigen, MatrixError> {
    if !m.is_square() {
        return Err(MatrixError::DimensionMismatch {
            expected: "square matrix".into(),
            found: format!("{}x{}", m.rows, m.cols),
        });
    }
    let deviation = m.hermiticity_deviation();
    if deviation > tol * m.frob_norm().max(1.0) {
        return Err(MatrixError::NotHermitian { deviation });
    }
    let n = m.rows;
    // Work on the exactly Hermitian part.
    let mut a = ComplexMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            a[(i, j)] = (m[(i, j)] + m[(j, i)].conj()) * 0.5;
        }
    }
    let mut v = ComplexMatrix::identity(n);
    let scale = a.frob_norm();

    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(&a) <= JACOBI_TOL * scale {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                jacobi_rotate(&mut a, &mut v, p, q);
            }
        }
    }

    let mut pairs: Vec<(f64, Vec<C64>)> = (0..n)
        .map(|k| (a[(k, k)].re, normalize_phase(v.column(k))))
        .collect();
    sort_eigenpairs(&mut pairs, 1e-12 * scale.max(1.0));

    let mut vectors = ComplexMatrix::zeros(n, n);
    for (k, (_, vec)) in pairs.iter().enumerate() {
        for i in 0..n {
            vectors[(i, k)] = vec[i];
        }
    }
    Ok(HermitianEigen { values: pairs.into_iter().map(|(w, _)| w).collect(), vectors })
}

fn off_diagonal_norm(a: &ComplexMatrix) -> f64 {
    let mut acc = 0.0;
    for i in 0..a.rows {
        for j in 0..a.cols {
            if i != j {
                acc += a[(i, j)].norm_sqr();
            }
        }
    }
    acc.sqrt()
}

/// Zero a[p][q] with the unitary W = diag(1, e^{-iφ})·R(θ) acting on (p, q).
fn jacobi_rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    let h = apq.norm();
    if h == 0.0 {
        return;
    }
    let phase = apq / h;
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    let theta = (aqq - app) / (2.0 * h);
    let t = if theta >= 0.0 {
        1.0 / (theta + (theta * theta + 1.0).sqrt())
    } else {
        -1.0 / (-theta + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    let ph = phase.conj();
    let w00 = C64::new(c, 0.0);
    let w01 = C64::new(s, 0.0);
    let w10 = ph * (-s);
    let w11 = ph * c;
    let n = a.rows;

    // A ← A W
    for i in 0..n {
        let aip = a[(i, p)];
        let aiq = a[(i, q)];
        a[(i, p)] = aip * w00 + aiq * w10;
        a[(i, q)] = aip * w01 + aiq * w11;
    }
    // A ← W† A
    for j in 0..n {
        let apj = a[(p, j)];
        let aqj = a[(q, j)];
        a[(p, j)] = w00.conj() * apj + w10.conj() * aqj;
        a[(q, j)] = w01.conj() * apj + w11.conj() * aqj;
    }
    a[(p, q)] = ZERO;
    a[(q, p)] = ZERO;
    a[(p, p)] = C64::new(a[(p, p)].re, 0.0);
    a[(q, q)] = C64::new(a[(q, q)].re, 0.0);
    // V ← V W
    for i in 0..n {
        let vip = v[(i, p)];
        let viq = v[(i, q)];
        v[(i, p)] = vip * w00 + viq * w10;
        v[(i, q)] = vip * w01 + viq * w11;
    }
}

fn normalize_phase(mut vec: Vec<C64>) -> Vec<C64> {
    let biggest = vec.iter().map(|z| z.norm()).fold(0.0, f64::max);
    if let Some(pivot) = vec.iter().copied().find(|z| z.norm() > 1e-8 * biggest) {
        let rot = pivot.conj() / pivot.norm();
        for z in vec.iter_mut() {
            *z *= rot;
        }
    }
    vec
}

fn sort_eigenpairs(pairs: &mut [(f64, Vec<C64>)], tie_tol: f64) {
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut start = 0;
    while start < pairs.len() {
        let mut end = start + 1;
        while end < pairs.len() && pairs[end].0 - pairs[end - 1].0 <= tie_tol {
            end += 1;
        }
        if end - start > 1 {
            pairs[start..end].sort_by(|a, b| lex_cmp(&a.1, &b.1));
        }
        start = end;
    }
}

fn lex_cmp(a: &[C64], b: &[C64]) -> std::cmp::Ordering {
    for (x, y) in a.iter().zip(b) {
        let ord = x.re.total_cmp(&y.re).then(x.im.total_cmp(&y.im));
        if ord != std::cmp::Ordering::Equal {
            // Reverse so that vectors with the larger leading component come first.
            return ord.reverse();
        }
    }
    std::cmp::Ordering::Equal
}

/// e^{−iht} for Hermitian `h`, built from its eigendecomposition.
pub fn herm_exp(h: &ComplexMatrix, t: f64) -> Result<ComplexMatrix, MatrixError> {
    let eig = herm_eig(h, 1e-10)?;
    let phases: Vec<C64> = eig.values.iter().map(|&w| C64::from_polar(1.0, -w * t)).collect();
    let d = ComplexMatrix::diag(&phases);
    Ok(&(&eig.vectors * &d) * &eig.vectors.adjoint())
}

/// Real 3×3 matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct RealMatrix3(pub [[f64; 3]; 3]);

impl RealMatrix3 {
    pub const ZERO: Self = Self([[0.0; 3]; 3]);

    pub fn identity() -> Self {
        Self::diag([1.0, 1.0, 1.0])
    }

    pub fn diag(d: [f64; 3]) -> Self {
        let mut m = Self::ZERO;
        for i in 0..3 {
            m.0[i][i] = d[i];
        }
        m
    }

    pub fn from_columns(cols: [[f64; 3]; 3]) -> Self {
        let mut m = Self::ZERO;
        for (j, col) in cols.iter().enumerate() {
            for i in 0..3 {
                m.0[i][j] = col[i];
            }
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.0[i][j]
    }

    pub fn column(&self, j: usize) -> [f64; 3] {
        [self.0[0][j], self.0[1][j], self.0[2][j]]
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::ZERO;
        for i in 0..3 {
            for j in 0..3 {
                m.0[i][j] = self.0[j][i];
            }
        }
        m
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut m = Self::ZERO;
        for i in 0..3 {
            for j in 0..3 {
                m.0[i][j] = (0..3).map(|k| self.0[i][k] * rhs.0[k][j]).sum();
            }
        }
        m
    }

    pub fn mul_vec(&self, v: [f64; 3]) -> [f64; 3] {
        let mut out = [0.0; 3];
        for (i, o) in out.iter_mut().enumerate() {
            *o = (0..3).map(|k| self.0[i][k] * v[k]).sum();
        }
        out
    }

    pub fn det(&self) -> f64 {
        let m = &self.0;
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }

    pub fn frob_norm(&self) -> f64 {
        self.0.iter().flatten().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.0
            .iter()
            .flatten()
            .zip(other.0.iter().flatten())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

/// Singular value decomposition `t = u·diag(s)·vᵀ`.
#[derive(Debug, Clone, Copy)]
pub struct Svd3 {
    pub u: RealMatrix3,
    /// Nonnegative, descending.
    pub s: [f64; 3],
    pub v: RealMatrix3,
}

/// One-sided Jacobi SVD of a 3×3 real matrix.
///
/// Columns of `t` are rotated pairwise until mutually orthogonal; the
/// accumulated rotations form `v`, the column norms are the singular values,
/// and the normalised columns form `u`. Columns of `u` belonging to vanishing
/// singular values are completed to an orthonormal basis.
pub fn svd3(t: &RealMatrix3) -> Svd3 {
    let mut w = t.0;
    let mut v = RealMatrix3::identity().0;
    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..3 {
            for q in (p + 1)..3 {
                let (mut alpha, mut beta, mut gamma) = (0.0, 0.0, 0.0);
                for row in &w {
                    alpha += row[p] * row[p];
                    beta += row[q] * row[q];
                    gamma += row[p] * row[q];
                }
                if gamma.abs() <= f64::EPSILON * (alpha * beta).sqrt() || gamma == 0.0 {
                    continue;
                }
                rotated = true;
                let zeta = (beta - alpha) / (2.0 * gamma);
                let tan = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let c = 1.0 / (1.0 + tan * tan).sqrt();
                let s = c * tan;
                for row in w.iter_mut().chain(v.iter_mut()) {
                    let (a, b) = (row[p], row[q]);
                    row[p] = c * a - s * b;
                    row[q] = s * a + c * b;
                }
            }
        }
        if !rotated {
            break;
        }
    }

    let norms: [f64; 3] = std::array::from_fn(|j| (0..3).map(|i| w[i][j] * w[i][j]).sum::<f64>().sqrt());
    let mut order = [0usize, 1, 2];
    order.sort_by(|&a, &b| norms[b].total_cmp(&norms[a]));

    let scale = norms[order[0]];
    let mut s = [0.0; 3];
    let mut u_cols: Vec<[f64; 3]> = Vec::with_capacity(3);
    let mut v_cols = [[0.0; 3]; 3];
    let mut pending = Vec::new();
    for (k, &j) in order.iter().enumerate() {
        s[k] = norms[j];
        v_cols[k] = [v[0][j], v[1][j], v[2][j]];
        if norms[j] > 1e-300 && norms[j] > 1e-15 * scale {
            u_cols.push([w[0][j] / norms[j], w[1][j] / norms[j], w[2][j] / norms[j]]);
        } else {
            pending.push(k);
            u_cols.push([0.0; 3]);
        }
    }
    for k in pending {
        let others: Vec<[f64; 3]> =
            (0..3).filter(|&i| i != k && u_cols[i] != [0.0; 3]).map(|i| u_cols[i]).collect();
        u_cols[k] = complete_basis(&others);
    }
    Svd3 {
        u: RealMatrix3::from_columns([u_cols[0], u_cols[1], u_cols[2]]),
        s,
        v: RealMatrix3::from_columns(v_cols),
    }
}

/// A unit vector orthogonal to every vector in `basis` (at most two of them).
fn complete_basis(basis: &[[f64; 3]]) -> [f64; 3] {
    if basis.len() == 2 {
        return normalize3(cross(basis[0], basis[1]));
    }
    let mut best = [0.0; 3];
    let mut best_norm = -1.0;
    for e in 0..3 {
        let mut cand = [0.0; 3];
        cand[e] = 1.0;
        for b in basis {
            let d = dot(cand, *b);
            for i in 0..3 {
                cand[i] -= d * b[i];
            }
        }
        let n = norm3(cand);
        if n > best_norm + 1e-12 {
            best_norm = n;
            best = cand;
        }
    }
    normalize3(best)
}

pub(crate) fn dot(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub(crate) fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

pub(crate) fn norm3(a: [f64; 3]) -> f64 {
    dot(a, a).sqrt()
}

fn normalize3(a: [f64; 3]) -> [f64; 3] {
    let n = norm3(a);
    [a[0] / n, a[1] / n, a[2] / n]
}
