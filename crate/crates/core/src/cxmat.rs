//! Dense complex linear algebra sized for few-qubit states.
//!
//! Everything here is row-major and square; the largest matrix in the
//! library is 32x32 (the dilated five-mode state), so no sparse or
//! blocked storage is used. Hermitian eigenvalues come from a cyclic
//! Jacobi sweep, which is unconditionally stable at these sizes.

use num_complex::Complex64;

use crate::Error;

/// Complex scalar used for all amplitudes and matrix entries.
pub type C64 = Complex64;

/// Hermiticity / trace tolerance used by validation checks.
pub const HERM_TOL: f64 = 1e-12;
/// Eigenvalues above this (negative) floor count as positive semidefinite.
pub const PSD_TOL: f64 = -1e-10;
/// Jacobi convergence threshold on the largest off-diagonal modulus.
const JACOBI_TOL: f64 = 1e-14;

/// Dense square complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    entries: Vec<C64>,
}

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Self {
        assert!(dim > 0, "dimension must be positive");
        Self {
            dim,
            entries: vec![C64::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.set(i, i, C64::new(1.0, 0.0));
        }
        m
    }

    /// Build from a row-major slice of entries; length must be `dim²`.
    pub fn from_rows(dim: usize, entries: &[C64]) -> Result<Self, Error> {
        if entries.len() != dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim,
                got: entries.len(),
            });
        }
        Ok(Self {
            dim,
            entries: entries.to_vec(),
        })
    }

    /// Build from real entries (imaginary parts zero).
    pub fn from_real(dim: usize, entries: &[f64]) -> Result<Self, Error> {
        let cx: Vec<C64> = entries.iter().map(|&r| C64::new(r, 0.0)).collect();
        Self::from_rows(dim, &cx)
    }

    pub fn diagonal(values: &[f64]) -> Self {
        let mut m = Self::zeros(values.len());
        for (i, &v) in values.iter().enumerate() {
            m.set(i, i, C64::new(v, 0.0));
        }
        m
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> C64 {
        self.entries[i * self.dim + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: C64) {
        self.entries[i * self.dim + j] = v;
    }

    #[inline]
    pub fn add_assign_at(&mut self, i: usize, j: usize, v: C64) {
        self.entries[i * self.dim + j] += v;
    }

    pub fn entries(&self) -> &[C64] {
        &self.entries
    }

    pub fn trace(&self) -> C64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        let mut out = Self::zeros(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                out.set(i, j, self.get(j, i).conj());
            }
        }
        out
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "matmul dimension mismatch");
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let aik = self.get(i, k);
                if aik.norm_sqr() == 0.0 {
                    continue;
                }
                for j in 0..n {
                    out.add_assign_at(i, j, aik * other.get(k, j));
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "add dimension mismatch");
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        Self {
            dim: self.dim,
            entries,
        }
    }

    pub fn scale(&self, s: f64) -> Self {
        let entries = self.entries.iter().map(|e| e * s).collect();
        Self {
            dim: self.dim,
            entries,
        }
    }

    /// Largest elementwise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim, other.dim);
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        for i in 0..self.dim {
            for j in i..self.dim {
                if (self.get(i, j) - self.get(j, i).conj()).norm() > tol {
                    return false;
                }
            }
        }
        true
    }

    /// Determinant of a 2x2 Hermitian matrix: `m00·m11 − |m01|²`.
    pub fn det2(&self) -> Result<f64, Error> {
        if self.dim != 2 {
            return Err(Error::NotTwoByTwo);
        }
        if !self.is_hermitian(HERM_TOL) {
            return Err(Error::NotHermitian);
        }
        Ok(self.get(0, 0).re * self.get(1, 1).re - self.get(0, 1).norm_sqr())
    }

    /// Eigenvalues of a Hermitian matrix, ascending, by cyclic Jacobi
    /// rotations. Converged when the largest off-diagonal modulus drops
    /// below 1e-14.
    pub fn hermitian_eigenvalues(&self) -> Result<Vec<f64>, Error> {
        if !self.is_hermitian(HERM_TOL) {
            return Err(Error::NotHermitian);
        }
        let n = self.dim;
        let mut a = self.clone();
        // Symmetrize round-off so the iteration preserves Hermiticity exactly.
        for i in 0..n {
            for j in (i + 1)..n {
                let avg = (a.get(i, j) + a.get(j, i).conj()) * 0.5;
                a.set(i, j, avg);
                a.set(j, i, avg.conj());
            }
            let d = a.get(i, i).re;
            a.set(i, i, C64::new(d, 0.0));
        }
        for _sweep in 0..200 {
            let mut off_max = 0.0f64;
            for p in 0..n {
                for q in (p + 1)..n {
                    off_max = off_max.max(a.get(p, q).norm());
                }
            }
            if off_max < JACOBI_TOL {
                break;
            }
            for p in 0..n {
                for q in (p + 1)..n {
                    jacobi_rotate(&mut a, p, q);
                }
            }
        }
        let mut eig: Vec<f64> = (0..n).map(|i| a.get(i, i).re).collect();
        eig.sort_by(|x, y| x.partial_cmp(y).unwrap());
        Ok(eig)
    }
}

/// One complex Jacobi rotation annihilating the (p, q) entry.
///
/// The 2x2 pivot block is phase-rotated to a real symmetric block and
/// then eliminated by a classical Givens rotation; the combined unitary
/// is applied as `A ← U† A U`.
fn jacobi_rotate(a: &mut ComplexMatrix, p: usize, q: usize) {
    let apq = a.get(p, q);
    let r = apq.norm();
    if r < 1e-300 {
        return;
    }
    let phase = apq / r; // e^{i phi}
    let app = a.get(p, p).re;
    let aqq = a.get(q, q).re;
    let tau = (aqq - app) / (2.0 * r);
    let sign = if tau >= 0.0 { 1.0 } else { -1.0 };
    let t = -sign / (tau.abs() + (1.0 + tau * tau).sqrt());
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;

    // U restricted to (p,q): [[c, -s], [s e^{-i phi}, c e^{-i phi}]]
    let upp = C64::new(c, 0.0);
    let upq = C64::new(-s, 0.0);
    let uqp = phase.conj() * s;
    let uqq = phase.conj() * c;

    let n = a.dim();
    // A <- A U (columns p, q)
    for i in 0..n {
        let aip = a.get(i, p);
        let aiq = a.get(i, q);
        a.set(i, p, aip * upp + aiq * uqp);
        a.set(i, q, aip * upq + aiq * uqq);
    }
    // A <- U† A (rows p, q)
    for j in 0..n {
        let apj = a.get(p, j);
        let aqj = a.get(q, j);
        a.set(p, j, upp.conj() * apj + uqp.conj() * aqj);
        a.set(q, j, upq.conj() * apj + uqq.conj() * aqj);
    }
    // Clean the annihilated pair and diagonal round-off.
    a.set(p, q, C64::new(0.0, 0.0));
    a.set(q, p, C64::new(0.0, 0.0));
    let dp = a.get(p, p).re;
    let dq = a.get(q, q).re;
    a.set(p, p, C64::new(dp, 0.0));
    a.set(q, q, C64::new(dq, 0.0));
}

/// Kronecker product with `a`'s indices most significant.
pub fn tensor(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let (da, db) = (a.dim(), b.dim());
    let mut out = ComplexMatrix::zeros(da * db);
    for ia in 0..da {
        for ja in 0..da {
            let va = a.get(ia, ja);
            if va.norm_sqr() == 0.0 {
                continue;
            }
            for ib in 0..db {
                for jb in 0..db {
                    out.set(ia * db + ib, ja * db + jb, va * b.get(ib, jb));
                }
            }
        }
    }
    out
}

/// Complex amplitude vector over an ordered n-qubit register,
/// most-significant qubit first.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    n_qubits: usize,
    amplitudes: Vec<C64>,
}

impl PureState {
    /// Build a normalized state; errors if `Σ|amp|²` is not 1 within 1e-12.
    pub fn new(n_qubits: usize, amplitudes: Vec<C64>) -> Result<Self, Error> {
        if amplitudes.len() != 1 << n_qubits {
            return Err(Error::DimensionMismatch {
                expected: 1 << n_qubits,
                got: amplitudes.len(),
            });
        }
        let norm: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum();
        if (norm - 1.0).abs() > 1e-12 {
            return Err(Error::NotNormalized);
        }
        Ok(Self {
            n_qubits,
            amplitudes,
        })
    }

    /// Computational basis state |index⟩.
    pub fn basis(n_qubits: usize, index: usize) -> Self {
        let mut amplitudes = vec![C64::new(0.0, 0.0); 1 << n_qubits];
        amplitudes[index] = C64::new(1.0, 0.0);
        Self {
            n_qubits,
            amplitudes,
        }
    }

    #[inline]
    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    #[inline]
    pub fn amplitude(&self, index: usize) -> C64 {
        self.amplitudes[index]
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amplitudes
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes
            .iter()
            .map(|a| a.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Outer product |ψ⟩⟨ψ| as a density matrix with all-qubit dims.
    pub fn projector(&self) -> DensityMatrix {
        let d = self.amplitudes.len();
        let mut m = ComplexMatrix::zeros(d);
        for i in 0..d {
            for j in 0..d {
                m.set(i, j, self.amplitudes[i] * self.amplitudes[j].conj());
            }
        }
        DensityMatrix {
            matrix: m,
            subsystem_dims: vec![2; self.n_qubits],
        }
    }
}

/// Hermitian, unit-trace matrix over a tensor product of subsystems.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
    subsystem_dims: Vec<usize>,
}

impl DensityMatrix {
    /// Validates Hermiticity and unit trace (1e-12). Positivity is a
    /// separate, eigenvalue-costing check: see [`DensityMatrix::validate`].
    pub fn new(matrix: ComplexMatrix, subsystem_dims: Vec<usize>) -> Result<Self, Error> {
        let prod: usize = subsystem_dims.iter().product();
        if prod != matrix.dim() {
            return Err(Error::DimensionMismatch {
                expected: matrix.dim(),
                got: prod,
            });
        }
        if !matrix.is_hermitian(HERM_TOL) {
            return Err(Error::InvalidDensityMatrix("not Hermitian".into()));
        }
        let tr = matrix.trace();
        if (tr.re - 1.0).abs() > HERM_TOL || tr.im.abs() > HERM_TOL {
            return Err(Error::InvalidDensityMatrix(format!(
                "trace {} + {}i != 1",
                tr.re, tr.im
            )));
        }
        Ok(Self {
            matrix,
            subsystem_dims,
        })
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn subsystem_dims(&self) -> &[usize] {
        &self.subsystem_dims
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    /// Full validity check: Hermitian, trace 1, all eigenvalues ≥ −1e-10.
    pub fn validate(&self) -> Result<(), Error> {
        let eig = self.matrix.hermitian_eigenvalues()?;
        if let Some(&min) = eig.first() {
            if min < PSD_TOL {
                return Err(Error::InvalidDensityMatrix(format!(
                    "negative eigenvalue {min}"
                )));
            }
        }
        let tr = self.matrix.trace();
        if (tr.re - 1.0).abs() > HERM_TOL {
            return Err(Error::InvalidDensityMatrix("trace != 1".into()));
        }
        Ok(())
    }

    /// Trace out every subsystem not listed in `keep`; the kept
    /// subsystems stay in their original order.
    pub fn partial_trace(&self, keep: &[usize]) -> Result<DensityMatrix, Error> {
        let k = self.subsystem_dims.len();
        if keep.is_empty() {
            return Err(Error::SubsystemOutOfRange);
        }
        let mut keep_sorted = keep.to_vec();
        keep_sorted.sort_unstable();
        keep_sorted.dedup();
        if keep_sorted.len() != keep.len() || *keep_sorted.last().unwrap() >= k {
            return Err(Error::SubsystemOutOfRange);
        }

        let kept_dims: Vec<usize> = keep_sorted
            .iter()
            .map(|&s| self.subsystem_dims[s])
            .collect();
        let out_dim: usize = kept_dims.iter().product();
        let mut out = ComplexMatrix::zeros(out_dim);

        let dim = self.matrix.dim();
        let mut digits_i = vec![0usize; k];
        let mut digits_j = vec![0usize; k];
        for i in 0..dim {
            decompose(i, &self.subsystem_dims, &mut digits_i);
            for j in 0..dim {
                decompose(j, &self.subsystem_dims, &mut digits_j);
                // Only terms whose traced-out digits coincide survive.
                let mut diagonal_env = true;
                for s in 0..k {
                    if !keep_sorted.contains(&s) && digits_i[s] != digits_j[s] {
                        diagonal_env = false;
                        break;
                    }
                }
                if !diagonal_env {
                    continue;
                }
                let oi = compose(&keep_sorted, &kept_dims, &digits_i);
                let oj = compose(&keep_sorted, &kept_dims, &digits_j);
                out.add_assign_at(oi, oj, self.matrix.get(i, j));
            }
        }
        DensityMatrix::new(out, kept_dims)
    }

    /// Single-subsystem reduction.
    pub fn reduced(&self, subsystem: usize) -> Result<DensityMatrix, Error> {
        self.partial_trace(&[subsystem])
    }

    /// tr(ρ²), real by Hermiticity.
    pub fn purity(&self) -> f64 {
        let n = self.matrix.dim();
        let mut acc = 0.0;
        for i in 0..n {
            for j in 0..n {
                acc += (self.matrix.get(i, j) * self.matrix.get(j, i)).re;
            }
        }
        acc
    }
}

#[inline]
fn decompose(mut index: usize, dims: &[usize], out: &mut [usize]) {
    for s in (0..dims.len()).rev() {
        out[s] = index % dims[s];
        index /= dims[s];
    }
}

#[inline]
fn compose(keep: &[usize], kept_dims: &[usize], digits: &[usize]) -> usize {
    let mut idx = 0;
    for (pos, &s) in keep.iter().enumerate() {
        idx = idx * kept_dims[pos] + digits[s];
    }
    idx
}
