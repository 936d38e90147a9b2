//! Dense complex linear algebra kernel.
//!
//! Everything in this crate runs on small dense matrices (d ≤ 64), so the
//! representation is a flat row-major `Vec<Complex64>`. Hermitian
//! eigendecomposition is delegated to nalgebra's tridiagonal QR behind the
//! [`hermitian_eig`] contract; the operator norm goes through the Hermitian
//! dilation `[[0, M], [M†, 0]]` whose top eigenvalue is the largest singular
//! value of `M`.

use nalgebra::DMatrix;
use num_complex::Complex;

use crate::error::{Error, Result};

/// Double-precision complex scalar used throughout the crate.
pub type Complex64 = Complex<f64>;

/// Absolute tolerance for `‖A − A†‖_max` when a Hermitian input is required.
pub const HERMITICITY_TOL: f64 = 1e-10;

/// Dense complex matrix in row-major order.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Complex64>,
}

impl ComplexMatrix {
    /// Build a matrix from row-major entries, rejecting NaN/Inf.
    pub fn new(rows: usize, cols: usize, entries: Vec<Complex64>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Empty {
                what: "matrix dimensions",
            });
        }
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: entries.len(),
            });
        }
        let m = Self {
            rows,
            cols,
            entries,
        };
        m.check_finite()?;
        Ok(m)
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Complex64::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim, dim);
        for i in 0..dim {
            m.entries[i * dim + i] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self {
            rows,
            cols,
            entries,
        }
    }

    /// Diagonal matrix from real entries.
    pub fn from_real_diag(diag: &[f64]) -> Self {
        let d = diag.len();
        let mut m = Self::zeros(d, d);
        for (i, &v) in diag.iter().enumerate() {
            m.entries[i * d + i] = Complex64::new(v, 0.0);
        }
        m
    }

    /// Outer product |u⟩⟨v|.
    pub fn outer(u: &[Complex64], v: &[Complex64]) -> Self {
        Self::from_fn(u.len(), v.len(), |i, j| u[i] * v[j].conj())
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

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row * self.cols + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Complex64) {
        self.entries[row * self.cols + col] = value;
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn column(&self, col: usize) -> Vec<Complex64> {
        (0..self.rows).map(|i| self.get(i, col)).collect()
    }

    fn check_finite(&self) -> Result<()> {
        for i in 0..self.rows {
            for j in 0..self.cols {
                let z = self.get(i, j);
                if !z.re.is_finite() || !z.im.is_finite() {
                    return Err(Error::NonFinite { row: i, col: j });
                }
            }
        }
        Ok(())
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).conj())
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matmul dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.entries[idx] += a * other.get(k, j);
                }
            }
        }
        out
    }

    pub fn matvec(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(self.cols, v.len(), "matvec dimension mismatch");
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * v[j]).sum())
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        Self {
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a - b)
            .collect();
        Self {
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|z| z * factor).collect(),
        }
    }

    pub fn trace(&self) -> Complex64 {
        debug_assert!(self.is_square());
        (0..self.rows).map(|i| self.get(i, i)).sum()
    }

    /// Max entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.entries.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Max entrywise modulus of the difference.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.sub(other).max_abs()
    }

    /// `‖A − A†‖_max`; zero for exactly Hermitian matrices.
    pub fn hermiticity_error(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        let mut worst: f64 = 0.0;
        for i in 0..self.rows {
            for j in i..self.cols {
                worst = worst.max((self.get(i, j) - self.get(j, i).conj()).norm());
            }
        }
        worst
    }

    /// Hermitian part `(A + A†)/2`.
    pub fn hermitian_part(&self) -> Self {
        debug_assert!(self.is_square());
        Self::from_fn(self.rows, self.cols, |i, j| {
            (self.get(i, j) + self.get(j, i).conj()) * 0.5
        })
    }

    /// `‖U†U − I‖_max` for square matrices.
    pub fn unitarity_error(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        self.dagger()
            .matmul(self)
            .max_abs_diff(&Self::identity(self.rows))
    }

    /// Submatrix picked by explicit row and column index lists.
    pub fn submatrix(&self, row_idx: &[usize], col_idx: &[usize]) -> Self {
        Self::from_fn(row_idx.len(), col_idx.len(), |i, j| {
            self.get(row_idx[i], col_idx[j])
        })
    }

    fn to_nalgebra(&self) -> DMatrix<Complex64> {
        DMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j))
    }
}

/// Eigendecomposition of a Hermitian matrix, eigenvalues descending.
#[derive(Debug, Clone)]
pub struct HermitianEigensystem {
    /// Real eigenvalues, sorted descending.
    pub eigenvalues: Vec<f64>,
    /// Unitary matrix whose column `k` is the eigenvector of `eigenvalues[k]`.
    pub eigenvectors: ComplexMatrix,
}

impl HermitianEigensystem {
    /// `V diag(λ) V†`, for reconstruction checks.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let d = self.eigenvalues.len();
        let mut out = ComplexMatrix::zeros(d, d);
        for (k, &lambda) in self.eigenvalues.iter().enumerate() {
            let v = self.eigenvectors.column(k);
            for i in 0..d {
                for j in 0..d {
                    let cur = out.get(i, j);
                    out.set(i, j, cur + v[i] * v[j].conj() * lambda);
                }
            }
        }
        out
    }
}

fn require_hermitian(a: &ComplexMatrix) -> Result<()> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch {
            expected: a.rows(),
            found: a.cols(),
        });
    }
    a.check_finite()?;
    let asym = a.hermiticity_error();
    if asym > HERMITICITY_TOL {
        return Err(Error::NotHermitian {
            max_asymmetry: asym,
            tol: HERMITICITY_TOL,
        });
    }
    Ok(())
}

/// Eigendecomposition of a Hermitian matrix with eigenvalues sorted descending.
pub fn hermitian_eig(a: &ComplexMatrix) -> Result<HermitianEigensystem> {
    require_hermitian(a)?;
    let d = a.rows();
    // Symmetrize exactly so QR sees a Hermitian input even when the caller's
    // matrix carries asymmetry at the tolerance floor.
    let se = a.hermitian_part().to_nalgebra().symmetric_eigen();

    let mut order: Vec<usize> = (0..d).collect();
    order.sort_by(|&i, &j| se.eigenvalues[j].total_cmp(&se.eigenvalues[i]));

    let eigenvalues: Vec<f64> = order.iter().map(|&k| se.eigenvalues[k]).collect();
    let eigenvectors = ComplexMatrix::from_fn(d, d, |i, j| se.eigenvectors[(i, order[j])]);
    Ok(HermitianEigensystem {
        eigenvalues,
        eigenvectors,
    })
}

/// Largest singular value, computed as the top eigenvalue of the Hermitian
/// dilation `[[0, M], [M†, 0]]`.
pub fn operator_norm(m: &ComplexMatrix) -> Result<f64> {
    m.check_finite()?;
    let (r, c) = (m.rows(), m.cols());
    let n = r + c;
    let mut h = ComplexMatrix::zeros(n, n);
    for i in 0..r {
        for j in 0..c {
            let z = m.get(i, j);
            h.set(i, r + j, z);
            h.set(r + j, i, z.conj());
        }
    }
    let eig = hermitian_eig(&h)?;
    Ok(eig.eigenvalues[0].max(0.0))
}

/// Largest eigenvalue of a Hermitian matrix.
pub fn max_eigenvalue(a: &ComplexMatrix) -> Result<f64> {
    Ok(hermitian_eig(a)?.eigenvalues[0])
}

/// Kronecker (tensor) product; index convention is big-endian over (A, B),
/// i.e. row `i_a·rows(b) + i_b`.
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let (ra, ca) = (a.rows(), a.cols());
    let (rb, cb) = (b.rows(), b.cols());
    ComplexMatrix::from_fn(ra * rb, ca * cb, |i, j| {
        a.get(i / rb, j / cb) * b.get(i % rb, j % cb)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn pauli_x() -> ComplexMatrix {
        ComplexMatrix::new(2, 2, vec![c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)]).unwrap()
    }

    #[test]
    fn eig_identity() {
        let eig = hermitian_eig(&ComplexMatrix::identity(2)).unwrap();
        assert!((eig.eigenvalues[0] - 1.0).abs() < 1e-12);
        assert!((eig.eigenvalues[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn eig_diagonal_descending() {
        let a = ComplexMatrix::from_real_diag(&[3.0, -1.0]);
        let eig = hermitian_eig(&a).unwrap();
        assert_eq!(eig.eigenvalues, vec![3.0, -1.0]);
        // eigenvectors are a permutation of the standard basis
        for j in 0..2 {
            let v = eig.eigenvectors.column(j);
            let mags: Vec<f64> = v.iter().map(|z| z.norm()).collect();
            assert!((mags.iter().cloned().fold(0.0, f64::max) - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn eig_pauli_x() {
        let eig = hermitian_eig(&pauli_x()).unwrap();
        assert!((eig.eigenvalues[0] - 1.0).abs() < 1e-10);
        assert!((eig.eigenvalues[1] + 1.0).abs() < 1e-10);
        // reconstruction and 2x2 closed form: |±⟩ components have modulus 1/√2
        assert!(eig.reconstruct().max_abs_diff(&pauli_x()) < 1e-10);
        let inv_sqrt2 = std::f64::consts::FRAC_1_SQRT_2;
        for j in 0..2 {
            for z in eig.eigenvectors.column(j) {
                assert!((z.norm() - inv_sqrt2).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn eig_rejects_non_hermitian() {
        let a = ComplexMatrix::new(2, 2, vec![c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)])
            .unwrap();
        assert!(matches!(
            hermitian_eig(&a),
            Err(Error::NotHermitian { .. })
        ));
    }

    #[test]
    fn rejects_non_finite() {
        let res = ComplexMatrix::new(1, 1, vec![c(f64::NAN, 0.0)]);
        assert!(matches!(res, Err(Error::NonFinite { .. })));
    }

    #[test]
    fn operator_norm_scalar() {
        let m = ComplexMatrix::new(1, 1, vec![c(0.5, 0.0)]).unwrap();
        assert!((operator_norm(&m).unwrap() - 0.5).abs() < 1e-12);
    }

    #[test]
    fn operator_norm_unit_row() {
        let inv_sqrt2 = std::f64::consts::FRAC_1_SQRT_2;
        let m = ComplexMatrix::new(1, 2, vec![c(inv_sqrt2, 0.0), c(inv_sqrt2, 0.0)]).unwrap();
        assert!((operator_norm(&m).unwrap() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn operator_norm_of_unitary_is_one() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for d in 2..=5 {
            let u = states::haar_unitary_with(d, &mut rng);
            assert!((operator_norm(&u).unwrap() - 1.0).abs() < 1e-10);
        }
    }

    #[test]
    fn max_eigenvalue_projector_cases() {
        let p0 = ComplexMatrix::from_real_diag(&[1.0, 0.0]);
        assert!((max_eigenvalue(&p0).unwrap() - 1.0).abs() < 1e-12);

        let zero = ComplexMatrix::zeros(3, 3);
        assert!(max_eigenvalue(&zero).unwrap().abs() < 1e-12);

        // |0⟩⟨0| + |+⟩⟨+| has top eigenvalue 1 + |⟨0|+⟩| = 1 + 1/√2
        let plus = [c(std::f64::consts::FRAC_1_SQRT_2, 0.0); 2];
        let sum = p0.add(&ComplexMatrix::outer(&plus, &plus));
        let expect = 1.0 + std::f64::consts::FRAC_1_SQRT_2;
        assert!((max_eigenvalue(&sum).unwrap() - expect).abs() < 1e-10);
    }

    #[test]
    fn kron_identity_and_diag() {
        let i4 = kron(&ComplexMatrix::identity(2), &ComplexMatrix::identity(2));
        assert!(i4.max_abs_diff(&ComplexMatrix::identity(4)) < 1e-15);

        let sz = ComplexMatrix::from_real_diag(&[1.0, -1.0]);
        let zz = kron(&sz, &sz);
        let expect = ComplexMatrix::from_real_diag(&[1.0, -1.0, -1.0, 1.0]);
        assert!(zz.max_abs_diff(&expect) < 1e-15);
    }

    #[test]
    fn kron_basis_projectors() {
        let p0 = ComplexMatrix::from_real_diag(&[1.0, 0.0]);
        let p1 = ComplexMatrix::from_real_diag(&[0.0, 1.0]);
        let p01 = kron(&p0, &p1);
        let mut expect = ComplexMatrix::zeros(4, 4);
        expect.set(1, 1, c(1.0, 0.0));
        assert!(p01.max_abs_diff(&expect) < 1e-15);
    }

    #[test]
    fn random_hermitian_reconstruction() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for d in 2..=8 {
            for _ in 0..20 {
                let a = states::random_hermitian_with(d, &mut rng);
                let eig = hermitian_eig(&a).unwrap();
                assert!(eig.reconstruct().max_abs_diff(&a) < 1e-10);
                assert!(eig.eigenvectors.unitarity_error() < 1e-10);
                for w in eig.eigenvalues.windows(2) {
                    assert!(w[0] >= w[1]);
                }
            }
        }
    }

    #[test]
    fn operator_norm_matches_gram_route() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..40 {
            let m = states::random_complex_with(4, 3, &mut rng);
            let direct = operator_norm(&m).unwrap();
            let gram = max_eigenvalue(&m.dagger().matmul(&m)).unwrap().max(0.0);
            assert!((direct - gram.sqrt()).abs() < 1e-10);
        }
    }

    #[test]
    fn submatrix_of_unitary_bounded_by_one() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..20 {
            let u = states::haar_unitary_with(4, &mut rng);
            let m = u.submatrix(&[0, 2], &[1, 2, 3]);
            assert!(operator_norm(&m).unwrap() <= 1.0 + 1e-10);
        }
    }

    #[test]
    fn kron_spectrum_is_pairwise_products() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let a = states::random_hermitian_with(2, &mut rng);
        let b = states::random_hermitian_with(3, &mut rng);
        let sa = hermitian_eig(&a).unwrap().eigenvalues;
        let sb = hermitian_eig(&b).unwrap().eigenvalues;
        let mut products: Vec<f64> = sa
            .iter()
            .flat_map(|&x| sb.iter().map(move |&y| x * y))
            .collect();
        let mut spectrum = hermitian_eig(&kron(&a, &b)).unwrap().eigenvalues;
        products.sort_by(f64::total_cmp);
        spectrum.sort_by(f64::total_cmp);
        for (p, s) in products.iter().zip(&spectrum) {
            assert!((p - s).abs() < 1e-9);
        }
    }
}
