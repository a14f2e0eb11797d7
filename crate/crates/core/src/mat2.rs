//! Exact 2x2 complex linear algebra: the carrier for layer propagators,
//! fundamental matrices, and the monodromy matrix.

use num_complex::Complex64;

use crate::error::Error;
use crate::tol;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexMat2 {
    pub m11: Complex64,
    pub m12: Complex64,
    pub m21: Complex64,
    pub m22: Complex64,
}

impl ComplexMat2 {
    pub fn new(m11: Complex64, m12: Complex64, m21: Complex64, m22: Complex64) -> Self {
        Self { m11, m12, m21, m22 }
    }

    pub fn identity() -> Self {
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        Self::new(one, zero, zero, one)
    }

    pub fn det(&self) -> Complex64 {
        self.m11 * self.m22 - self.m12 * self.m21
    }

    pub fn trace(&self) -> Complex64 {
        self.m11 + self.m22
    }

    pub fn mul(&self, rhs: &ComplexMat2) -> ComplexMat2 {
        ComplexMat2::new(
            self.m11 * rhs.m11 + self.m12 * rhs.m21,
            self.m11 * rhs.m12 + self.m12 * rhs.m22,
            self.m21 * rhs.m11 + self.m22 * rhs.m21,
            self.m21 * rhs.m12 + self.m22 * rhs.m22,
        )
    }

    pub fn apply(&self, v: [Complex64; 2]) -> [Complex64; 2] {
        [
            self.m11 * v[0] + self.m12 * v[1],
            self.m21 * v[0] + self.m22 * v[1],
        ]
    }

    pub fn scale(&self, s: Complex64) -> ComplexMat2 {
        ComplexMat2::new(self.m11 * s, self.m12 * s, self.m21 * s, self.m22 * s)
    }

    pub fn sub(&self, rhs: &ComplexMat2) -> ComplexMat2 {
        ComplexMat2::new(
            self.m11 - rhs.m11,
            self.m12 - rhs.m12,
            self.m21 - rhs.m21,
            self.m22 - rhs.m22,
        )
    }

    pub fn inverse(&self) -> Option<ComplexMat2> {
        let det = self.det();
        if det.norm() == 0.0 {
            return None;
        }
        Some(ComplexMat2::new(
            self.m22 / det,
            -self.m12 / det,
            -self.m21 / det,
            self.m11 / det,
        ))
    }

    pub fn frobenius_norm(&self) -> f64 {
        (self.m11.norm_sqr() + self.m12.norm_sqr() + self.m21.norm_sqr() + self.m22.norm_sqr())
            .sqrt()
    }

    /// `T diag(d1, d2) T^-1` for `T` with the given columns.
    pub fn from_eigenpairs(
        columns: [[Complex64; 2]; 2],
        diag: [Complex64; 2],
    ) -> Option<ComplexMat2> {
        let t = ComplexMat2::new(columns[0][0], columns[1][0], columns[0][1], columns[1][1]);
        let t_inv = t.inverse()?;
        let d = ComplexMat2::new(
            diag[0],
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, 0.0),
            diag[1],
        );
        Some(t.mul(&d).mul(&t_inv))
    }
}

/// Eigenvalues and unit eigenvectors, ordered by ascending modulus with ties
/// broken by ascending principal argument. The decaying Floquet mode is
/// therefore always index 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenPair {
    pub values: [Complex64; 2],
    pub vectors: [[Complex64; 2]; 2],
}

/// Closed-form spectral decomposition of a 2x2 complex matrix.
///
/// Fails with [`Error::DegenerateSpectrum`] when the two eigenvalues are
/// closer than [`tol::EIGEN_DEGENERACY`] relative to their size, which for
/// monodromy matrices signals a band edge.
pub fn eigen_decompose(m: &ComplexMat2) -> Result<EigenPair, Error> {
    eigen_decompose_with_det(m, m.det())
}

/// [`eigen_decompose`] with the determinant supplied externally, for
/// matrices whose determinant is known analytically (e.g. unimodular
/// monodromy matrices, where forming it from the entries cancels badly).
pub fn eigen_decompose_with_det(m: &ComplexMat2, det: Complex64) -> Result<EigenPair, Error> {
    let tr = m.trace();
    let half_tr = tr * 0.5;
    let disc = half_tr * half_tr - det;
    let root = disc.sqrt();
    // The root nearer -half_tr suffers cancellation; recover it from the
    // product of the roots instead.
    let l1 = if (half_tr + root).norm() >= (half_tr - root).norm() {
        half_tr + root
    } else {
        half_tr - root
    };
    let l2 = if l1.norm() == 0.0 { -root } else { det / l1 };
    if (l1 - l2).norm() <= tol::EIGEN_DEGENERACY * (l1.norm() + l2.norm()) {
        return Err(Error::DegenerateSpectrum);
    }
    let (first, second) = if order_before(l1, l2) { (l1, l2) } else { (l2, l1) };
    Ok(EigenPair {
        values: [first, second],
        vectors: [eigenvector(m, first), eigenvector(m, second)],
    })
}

fn order_before(a: Complex64, b: Complex64) -> bool {
    let (na, nb) = (a.norm(), b.norm());
    if (na - nb).abs() > tol::EIGEN_DEGENERACY * (na + nb) {
        na < nb
    } else {
        a.arg() < b.arg()
    }
}

/// Unit eigenvector for a known eigenvalue, phase-fixed so the
/// largest-modulus component is real positive (ties pick the first).
fn eigenvector(m: &ComplexMat2, lambda: Complex64) -> [Complex64; 2] {
    // Rows of (M - lambda I) are both orthogonal complements of v; take the
    // candidate built from whichever row has the larger norm.
    let c1 = [m.m12, lambda - m.m11];
    let c2 = [lambda - m.m22, m.m21];
    let n1 = c1[0].norm_sqr() + c1[1].norm_sqr();
    let n2 = c2[0].norm_sqr() + c2[1].norm_sqr();
    let v = if n1 >= n2 { c1 } else { c2 };
    let norm = (v[0].norm_sqr() + v[1].norm_sqr()).sqrt();
    let lead = if v[0].norm() >= v[1].norm() { v[0] } else { v[1] };
    let phase = lead / lead.norm();
    [v[0] / (phase * norm), v[1] / (phase * norm)]
}
