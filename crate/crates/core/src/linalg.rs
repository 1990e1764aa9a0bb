//! Dense symmetric matrix kernel.
//!
//! Everything downstream (bounds, SDP barriers, polar engines) reduces to
//! eigendecompositions, PSD square roots, pseudoinverses and Cholesky
//! factorizations of small dense symmetric matrices. The eigensolver is a
//! cyclic Jacobi sweep: slow in the asymptotic sense, but robust and very
//! accurate at the orders handled here (n ≤ 64).

use crate::tol;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum LinalgError {
    #[error("jacobi sweep did not converge: off-diagonal residual {off_diag:.3e}")]
    NonConvergence { off_diag: f64 },
    #[error("matrix is not positive semidefinite: λ_min = {lambda_min:.6e}")]
    NotPsd { lambda_min: f64 },
    #[error("matrix is not positive definite: pivot {index} is {pivot:.6e}")]
    NotPositiveDefinite { index: usize, pivot: f64 },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

/// Dense symmetric matrix, row-major, symmetrized on construction.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(n: usize) -> Self {
        SymMatrix { n, data: vec![0.0; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = 1.0;
        }
        m
    }

    pub fn diag(values: &[f64]) -> Self {
        let n = values.len();
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = values[i];
        }
        m
    }

    /// Builds from an arbitrary square array, averaging (i,j) and (j,i).
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> f64) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in 0..=i {
                let v = 0.5 * (f(i, j) + f(j, i));
                m.data[i * n + j] = v;
                m.data[j * n + i] = v;
            }
        }
        m
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Self {
        let n = rows.len();
        Self::from_fn(n, |i, j| rows[i][j])
    }

    /// Rank-one matrix v vᵀ.
    pub fn outer(v: &[f64]) -> Self {
        Self::from_fn(v.len(), |i, j| v[i] * v[j])
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    /// Sets both (i,j) and (j,i).
    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.n + j] = v;
        self.data[j * self.n + i] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0.0)
    }

    pub fn diagonal(&self) -> Vec<f64> {
        (0..self.n).map(|i| self.get(i, i)).collect()
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn norm_max(&self) -> f64 {
        self.data.iter().fold(0.0, |a, &v| a.max(v.abs()))
    }

    pub fn norm_frobenius(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    pub fn scale(&self, s: f64) -> Self {
        SymMatrix { n: self.n, data: self.data.iter().map(|v| v * s).collect() }
    }

    pub fn add(&self, other: &SymMatrix) -> Self {
        assert_eq!(self.n, other.n);
        SymMatrix {
            n: self.n,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &SymMatrix) -> Self {
        assert_eq!(self.n, other.n);
        SymMatrix {
            n: self.n,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    /// Frobenius inner product ⟨self, other⟩.
    pub fn inner(&self, other: &SymMatrix) -> f64 {
        assert_eq!(self.n, other.n);
        self.data.iter().zip(&other.data).map(|(a, b)| a * b).sum()
    }

    pub fn apply(&self, v: &[f64]) -> Vec<f64> {
        assert_eq!(v.len(), self.n);
        let mut out = vec![0.0; self.n];
        for i in 0..self.n {
            let row = &self.data[i * self.n..(i + 1) * self.n];
            out[i] = row.iter().zip(v).map(|(a, b)| a * b).sum();
        }
        out
    }

    /// xᵀ·self·x.
    pub fn quadratic_form(&self, x: &[f64]) -> f64 {
        self.apply(x).iter().zip(x).map(|(a, b)| a * b).sum()
    }

    /// self · M · self for symmetric M; the result is symmetric.
    pub fn congruence(&self, m: &SymMatrix) -> SymMatrix {
        assert_eq!(self.n, m.n);
        let n = self.n;
        // tmp = self * m
        let mut tmp = vec![0.0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == 0.0 {
                    continue;
                }
                for j in 0..n {
                    tmp[i * n + j] += a * m.data[k * n + j];
                }
            }
        }
        let mut out = SymMatrix::zeros(n);
        for i in 0..n {
            for j in 0..=i {
                let mut s = 0.0;
                for k in 0..n {
                    s += tmp[i * n + k] * self.data[k * n + j];
                }
                out.data[i * n + j] = s;
                out.data[j * n + i] = s;
            }
        }
        out
    }

    /// self · Diag(d) · self; the result is symmetric.
    pub fn scaled_congruence(&self, d: &[f64]) -> SymMatrix {
        assert_eq!(self.n, d.len());
        let n = self.n;
        let mut out = SymMatrix::zeros(n);
        for i in 0..n {
            for j in 0..=i {
                let mut s = 0.0;
                for k in 0..n {
                    s += self.data[i * n + k] * d[k] * self.data[k * n + j];
                }
                out.data[i * n + j] = s;
                out.data[j * n + i] = s;
            }
        }
        out
    }

    /// Principal submatrix on the given (sorted) index set.
    pub fn principal_submatrix(&self, idx: &[usize]) -> SymMatrix {
        SymMatrix::from_fn(idx.len(), |i, j| self.get(idx[i], idx[j]))
    }

    pub fn eigen(&self) -> Result<EigenDecomposition, LinalgError> {
        eigen_sym(self)
    }

    pub fn cholesky(&self) -> Result<CholeskyFactor, LinalgError> {
        cholesky(self)
    }
}

/// Eigenvalues ascending, with `eigenvector(k)` paired to `eigenvalues[k]`.
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    pub eigenvalues: Vec<f64>,
    /// Row-major n×n orthogonal matrix; column k is the k-th eigenvector.
    q: Vec<f64>,
    n: usize,
}

impl EigenDecomposition {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn lambda_min(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn lambda_max(&self) -> f64 {
        self.eigenvalues[self.n - 1]
    }

    pub fn eigenvector(&self, k: usize) -> Vec<f64> {
        (0..self.n).map(|i| self.q[i * self.n + k]).collect()
    }

    /// Q Diag(f(λ)) Qᵀ.
    pub fn map_eigenvalues(&self, f: impl Fn(f64) -> f64) -> SymMatrix {
        let n = self.n;
        let vals: Vec<f64> = self.eigenvalues.iter().map(|&l| f(l)).collect();
        let mut out = SymMatrix::zeros(n);
        for i in 0..n {
            for j in 0..=i {
                let mut s = 0.0;
                for k in 0..n {
                    s += self.q[i * n + k] * vals[k] * self.q[j * n + k];
                }
                out.data[i * n + j] = s;
                out.data[j * n + i] = s;
            }
        }
        out
    }

    /// Max-norm of QᵀQ − I; a solver health check.
    pub fn orthogonality_residual(&self) -> f64 {
        let n = self.n;
        let mut worst = 0.0f64;
        for a in 0..n {
            for b in a..n {
                let mut s = 0.0;
                for i in 0..n {
                    s += self.q[i * n + a] * self.q[i * n + b];
                }
                if a == b {
                    s -= 1.0;
                }
                worst = worst.max(s.abs());
            }
        }
        worst
    }
}

/// Cyclic Jacobi eigendecomposition of a symmetric matrix.
///
/// Threshold sweeping as in the classical formulation: the first sweeps
/// skip rotations below a shrinking threshold, later sweeps annihilate
/// every off-diagonal entry. Converges when the off-diagonal Frobenius
/// norm drops below `EIGEN_CONV · ‖M‖_F`.
pub fn eigen_sym(m: &SymMatrix) -> Result<EigenDecomposition, LinalgError> {
    let n = m.n;
    if n == 0 {
        return Ok(EigenDecomposition { eigenvalues: vec![], q: vec![], n: 0 });
    }
    let mut a = m.data.clone();
    let mut q = vec![0.0; n * n];
    for i in 0..n {
        q[i * n + i] = 1.0;
    }
    let frob = m.norm_frobenius();
    let target = tol::EIGEN_CONV * frob;

    let off_diag_norm = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in (i + 1)..n {
                let v = a[i * n + j];
                s += 2.0 * v * v;
            }
        }
        s.sqrt()
    };

    let mut off = off_diag_norm(&a);
    if off <= target || frob == 0.0 {
        return Ok(sorted_decomposition(n, a, q));
    }

    for sweep in 0..tol::EIGEN_MAX_SWEEPS {
        // Shrinking rotation threshold for the first sweeps, zero afterwards.
        let thresh = if sweep < 3 { 0.2 * off * off / ((n * n) as f64) } else { 0.0 };
        for p in 0..n - 1 {
            for qq in (p + 1)..n {
                let apq = a[p * n + qq];
                if apq.abs() * apq.abs() <= thresh {
                    continue;
                }
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[qq * n + qq];
                let theta = 0.5 * (aqq - app) / apq;
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    let sign = if theta >= 0.0 { 1.0 } else { -1.0 };
                    sign / (theta.abs() + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);

                a[p * n + p] = app - t * apq;
                a[qq * n + qq] = aqq + t * apq;
                a[p * n + qq] = 0.0;
                a[qq * n + p] = 0.0;
                for j in 0..n {
                    if j == p || j == qq {
                        continue;
                    }
                    let ajp = a[j * n + p];
                    let ajq = a[j * n + qq];
                    let new_p = ajp - s * (ajq + tau * ajp);
                    let new_q = ajq + s * (ajp - tau * ajq);
                    a[j * n + p] = new_p;
                    a[p * n + j] = new_p;
                    a[j * n + qq] = new_q;
                    a[qq * n + j] = new_q;
                }
                for j in 0..n {
                    let qjp = q[j * n + p];
                    let qjq = q[j * n + qq];
                    q[j * n + p] = qjp - s * (qjq + tau * qjp);
                    q[j * n + qq] = qjq + s * (qjp - tau * qjq);
                }
            }
        }
        off = off_diag_norm(&a);
        if off <= target {
            return Ok(sorted_decomposition(n, a, q));
        }
    }
    Err(LinalgError::NonConvergence { off_diag: off })
}

fn sorted_decomposition(n: usize, a: Vec<f64>, q: Vec<f64>) -> EigenDecomposition {
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[i * n + i].partial_cmp(&a[j * n + j]).unwrap());
    let eigenvalues: Vec<f64> = order.iter().map(|&k| a[k * n + k]).collect();
    let mut qs = vec![0.0; n * n];
    for (new_k, &old_k) in order.iter().enumerate() {
        for i in 0..n {
            qs[i * n + new_k] = q[i * n + old_k];
        }
    }
    EigenDecomposition { eigenvalues, q: qs, n }
}

/// Unique PSD square root. Eigenvalues in `[−TOL_PSD, 0]` are clamped to
/// zero; anything more negative is an error carrying λ_min. Positive
/// eigenvalues below the pseudoinverse rank cutoff are zeroed as well, so
/// rank decisions agree between the square root and `pinv` (the square
/// root would otherwise lift noise-level eigenvalues above the cutoff).
pub fn psd_sqrt(m: &SymMatrix) -> Result<SymMatrix, LinalgError> {
    let eig = eigen_sym(m)?;
    let lmin = eig.lambda_min();
    if lmin < -tol::TOL_PSD {
        return Err(LinalgError::NotPsd { lambda_min: lmin });
    }
    let cutoff = tol::RANK_TOL * eig.lambda_max().max(0.0) * m.n as f64;
    Ok(eig.map_eigenvalues(|l| if l <= cutoff { 0.0 } else { l.sqrt() }))
}

/// Moore–Penrose pseudoinverse via the spectral decomposition; eigenvalues
/// with |λ| ≤ RANK_TOL · max|λ| · n are treated as zero.
pub fn pinv(m: &SymMatrix) -> Result<SymMatrix, LinalgError> {
    let eig = eigen_sym(m)?;
    let scale = eig
        .eigenvalues
        .iter()
        .fold(0.0f64, |a, &l| a.max(l.abs()));
    let cutoff = tol::RANK_TOL * scale * m.n as f64;
    Ok(eig.map_eigenvalues(|l| if l.abs() <= cutoff { 0.0 } else { 1.0 / l }))
}

/// Lower-triangular Cholesky factor of a positive definite matrix.
#[derive(Debug, Clone)]
pub struct CholeskyFactor {
    n: usize,
    /// Row-major lower triangle (upper part zero).
    l: Vec<f64>,
}

pub fn cholesky(m: &SymMatrix) -> Result<CholeskyFactor, LinalgError> {
    let n = m.n;
    let mut l = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..=i {
            let mut s = m.get(i, j);
            for k in 0..j {
                s -= l[i * n + k] * l[j * n + k];
            }
            if i == j {
                if s <= 0.0 {
                    return Err(LinalgError::NotPositiveDefinite { index: i, pivot: s });
                }
                l[i * n + i] = s.sqrt();
            } else {
                l[i * n + j] = s / l[j * n + j];
            }
        }
    }
    Ok(CholeskyFactor { n, l })
}

impl CholeskyFactor {
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.l[i * self.n + j]
    }

    /// log det M = 2 Σ log L_ii.
    pub fn logdet(&self) -> f64 {
        (0..self.n).map(|i| self.l[i * self.n + i].ln()).sum::<f64>() * 2.0
    }

    /// Solves M x = b.
    pub fn solve(&self, b: &[f64]) -> Vec<f64> {
        let n = self.n;
        let mut y = b.to_vec();
        for i in 0..n {
            for k in 0..i {
                y[i] -= self.l[i * n + k] * y[k];
            }
            y[i] /= self.l[i * n + i];
        }
        for i in (0..n).rev() {
            for k in (i + 1)..n {
                y[i] -= self.l[k * n + i] * y[k];
            }
            y[i] /= self.l[i * n + i];
        }
        y
    }

    /// M⁻¹ as a symmetric matrix.
    pub fn inverse(&self) -> SymMatrix {
        let n = self.n;
        let mut out = SymMatrix::zeros(n);
        let mut e = vec![0.0; n];
        for j in 0..n {
            e[j] = 1.0;
            let col = self.solve(&e);
            e[j] = 0.0;
            for i in 0..n {
                out.data[i * n + j] = col[i];
            }
        }
        // Symmetrize away the solve round-off.
        for i in 0..n {
            for j in 0..i {
                let v = 0.5 * (out.data[i * n + j] + out.data[j * n + i]);
                out.data[i * n + j] = v;
                out.data[j * n + i] = v;
            }
        }
        out
    }
}

/// A / (−λ_min(A)) so that λ_min of the result is −1; A with −λ_min below
/// the zero threshold is passed through as the zero matrix.
///
/// Returns the scaled matrix together with −λ_min(A) (0.0 when treated as
/// zero) so callers can flag near-zero inputs in diagnostics.
pub fn normalize_tilde(a: &SymMatrix) -> Result<(SymMatrix, f64), LinalgError> {
    if a.is_zero() {
        return Ok((a.clone(), 0.0));
    }
    let eig = eigen_sym(a)?;
    let neg_lmin = -eig.lambda_min();
    if neg_lmin <= tol::TILDE_ZERO {
        return Ok((SymMatrix::zeros(a.n), 0.0));
    }
    Ok((a.scale(1.0 / neg_lmin), neg_lmin))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b} (tol {tol})");
    }

    #[test]
    fn eigen_diagonal_sorted() {
        let m = SymMatrix::diag(&[3.0, 1.0, 2.0]);
        let e = m.eigen().unwrap();
        assert_eq!(e.eigenvalues, vec![1.0, 2.0, 3.0]);
    }

    #[test]
    fn eigen_two_by_two_swap() {
        // [[0,1],[1,0]] has eigenvalues ∓1 (characteristic λ² − 1).
        let m = SymMatrix::from_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]);
        let e = m.eigen().unwrap();
        assert_close(e.eigenvalues[0], -1.0, 1e-12);
        assert_close(e.eigenvalues[1], 1.0, 1e-12);
    }

    #[test]
    fn eigen_triangle_spectrum() {
        // Adjacency of K₃: eigenvalues −1, −1, 2.
        let m = SymMatrix::from_fn(3, |i, j| if i == j { 0.0 } else { 1.0 });
        let e = m.eigen().unwrap();
        assert_close(e.eigenvalues[0], -1.0, 1e-12);
        assert_close(e.eigenvalues[1], -1.0, 1e-12);
        assert_close(e.eigenvalues[2], 2.0, 1e-12);
    }

    #[test]
    fn eigen_reconstruction_residuals() {
        let m = SymMatrix::from_fn(6, |i, j| ((i * 7 + j * 3) % 11) as f64 - 5.0);
        let e = m.eigen().unwrap();
        assert!(e.orthogonality_residual() <= 1e-10);
        let rebuilt = e.map_eigenvalues(|l| l);
        assert!(rebuilt.sub(&m).norm_max() <= 1e-9 * (1.0 + m.norm_max()));
    }

    #[test]
    fn psd_sqrt_known_two_by_two() {
        // [[2,1],[1,2]] has eigenvalues 1 and 3; the square root is
        // [[(√3+1)/2, (√3−1)/2], [(√3−1)/2, (√3+1)/2]].
        let m = SymMatrix::from_rows(&[vec![2.0, 1.0], vec![1.0, 2.0]]);
        let r = psd_sqrt(&m).unwrap();
        let s3 = 3.0f64.sqrt();
        assert_close(r.get(0, 0), (s3 + 1.0) / 2.0, 1e-12);
        assert_close(r.get(0, 1), (s3 - 1.0) / 2.0, 1e-12);
        let sq = r.congruence(&SymMatrix::identity(2));
        assert!(sq.sub(&m).norm_max() <= 1e-10);
    }

    #[test]
    fn psd_sqrt_identity_and_singular_diag() {
        let i3 = SymMatrix::identity(3);
        assert!(psd_sqrt(&i3).unwrap().sub(&i3).norm_max() <= 1e-14);
        let d = SymMatrix::diag(&[4.0, 0.0]);
        let r = psd_sqrt(&d).unwrap();
        assert!(r.sub(&SymMatrix::diag(&[2.0, 0.0])).norm_max() <= 1e-12);
    }

    #[test]
    fn psd_sqrt_rejects_indefinite() {
        let m = SymMatrix::diag(&[1.0, -0.5]);
        match psd_sqrt(&m) {
            Err(LinalgError::NotPsd { lambda_min }) => assert_close(lambda_min, -0.5, 1e-12),
            other => panic!("expected NotPsd, got {other:?}"),
        }
    }

    #[test]
    fn pinv_diag() {
        let m = SymMatrix::diag(&[2.0, 0.0]);
        let p = pinv(&m).unwrap();
        assert!(p.sub(&SymMatrix::diag(&[0.5, 0.0])).norm_max() <= 1e-12);
    }

    #[test]
    fn pinv_penrose_identities() {
        let m = SymMatrix::from_fn(5, |i, j| ((i + j) % 4) as f64);
        let p = pinv(&m).unwrap();
        // M P M = M and P M P = P.
        let mp = general_product(&m, &p);
        let mpm = product_sym(&mp, &m);
        assert!(mpm.sub(&m).norm_max() <= 1e-8 * (1.0 + m.norm_max()));
        let pm = general_product(&p, &m);
        let pmp = product_sym(&pm, &p);
        assert!(pmp.sub(&p).norm_max() <= 1e-8 * (1.0 + p.norm_max()));
    }

    #[test]
    fn cholesky_hand_factorization() {
        // [[4,2],[2,5]] = LLᵀ with L = [[2,0],[1,2]].
        let m = SymMatrix::from_rows(&[vec![4.0, 2.0], vec![2.0, 5.0]]);
        let c = cholesky(&m).unwrap();
        assert_close(c.get(0, 0), 2.0, 1e-14);
        assert_close(c.get(1, 0), 1.0, 1e-14);
        assert_close(c.get(1, 1), 2.0, 1e-14);
        let d = SymMatrix::diag(&[4.0, 9.0]);
        let cd = cholesky(&d).unwrap();
        assert_close(cd.get(0, 0), 2.0, 1e-14);
        assert_close(cd.get(1, 1), 3.0, 1e-14);
    }

    #[test]
    fn cholesky_reports_pivot() {
        let m = SymMatrix::from_rows(&[vec![1.0, 2.0], vec![2.0, 1.0]]);
        match cholesky(&m) {
            Err(LinalgError::NotPositiveDefinite { index, .. }) => assert_eq!(index, 1),
            other => panic!("expected NotPositiveDefinite, got {other:?}"),
        }
    }

    #[test]
    fn cholesky_solve_and_inverse() {
        let m = SymMatrix::from_fn(4, |i, j| if i == j { 4.0 } else { 1.0 / (1.0 + (i + j) as f64) });
        let c = cholesky(&m).unwrap();
        let b = vec![1.0, -2.0, 0.5, 3.0];
        let x = c.solve(&b);
        let back = m.apply(&x);
        for (u, v) in back.iter().zip(&b) {
            assert_close(*u, *v, 1e-10);
        }
        let inv = c.inverse();
        let prod = general_product(&m, &inv);
        for i in 0..4 {
            for j in 0..4 {
                assert_close(prod[i * 4 + j], if i == j { 1.0 } else { 0.0 }, 1e-10);
            }
        }
    }

    #[test]
    fn normalize_tilde_zero_passthrough() {
        let z = SymMatrix::zeros(3);
        let (t, s) = normalize_tilde(&z).unwrap();
        assert!(t.is_zero());
        assert_eq!(s, 0.0);
    }

    #[test]
    fn normalize_tilde_k2() {
        let a = SymMatrix::from_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]);
        let (t, s) = normalize_tilde(&a).unwrap();
        assert_close(s, 1.0, 1e-12);
        assert!(t.sub(&a).norm_max() <= 1e-12);
        let e = t.eigen().unwrap();
        assert_close(e.lambda_min(), -1.0, 1e-12);
    }

    // Plain row-major product helpers for test-side verification.
    fn general_product(a: &SymMatrix, b: &SymMatrix) -> Vec<f64> {
        let n = a.order();
        let mut out = vec![0.0; n * n];
        for i in 0..n {
            for k in 0..n {
                for j in 0..n {
                    out[i * n + j] += a.get(i, k) * b.get(k, j);
                }
            }
        }
        out
    }

    fn product_sym(raw: &[f64], b: &SymMatrix) -> SymMatrix {
        let n = b.order();
        SymMatrix::from_fn(n, |i, j| {
            (0..n).map(|k| raw[i * n + k] * b.get(k, j)).sum()
        })
    }
}
