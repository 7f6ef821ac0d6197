//! Numerical spectra of algebra elements through the left regular
//! representation. Eigenvalues are always computed on the float embedding;
//! exact characteristic polynomials are out of scope.

use nalgebra::linalg::Schur;
use num_complex::Complex64;

use super::{left_regular, linalg, AlgElement};

pub const DEFAULT_SPECTRUM_TOL: f64 = 1e-9;

#[derive(Debug, Clone)]
pub struct Spectrum {
    /// Raw eigenvalue list of the left regular matrix (length = dim).
    pub raw: Vec<Complex64>,
    /// Eigenvalues merged within the tolerance, with multiplicities.
    pub merged: Vec<(Complex64, usize)>,
    /// Whether the element is normal (a a* = a* a, checked exactly).
    /// Multiplicities of non-normal inputs are not reliable.
    pub normal: bool,
    pub tol: f64,
}

impl Spectrum {
    /// Distinct eigenvalues as a set (the merged list without counts).
    pub fn values(&self) -> Vec<Complex64> {
        self.merged.iter().map(|(z, _)| *z).collect()
    }

    /// True when the merged spectrum equals `expected` as a set within tol.
    pub fn matches_set(&self, expected: &[Complex64]) -> bool {
        let close = |a: Complex64, b: Complex64| (a - b).norm() <= self.tol.max(1e-12) * 10.0;
        self.merged
            .iter()
            .all(|(z, _)| expected.iter().any(|w| close(*z, *w)))
            && expected
                .iter()
                .all(|w| self.merged.iter().any(|(z, _)| close(*z, *w)))
    }
}

/// Eigenvalues of embed(left_regular(a)), merged within `tol`.
pub fn spectrum(a: &AlgElement, tol: f64) -> Spectrum {
    let normal = a.is_normal();
    let mat = linalg::embed_matrix(&left_regular(a));
    let n = mat.nrows();
    let raw: Vec<Complex64> = if n == 0 {
        Vec::new()
    } else {
        let schur = Schur::try_new(mat, 1e-13, 0).expect("Schur iteration did not converge");
        schur
            .eigenvalues()
            .expect("complex Schur always yields eigenvalues")
            .iter()
            .cloned()
            .collect()
    };
    // greedy clustering against the running means; adjacent-only merging
    // after sorting would split clusters when float noise interleaves
    // conjugate pairs
    let mut merged: Vec<(Complex64, usize)> = Vec::new();
    for z in &raw {
        match merged
            .iter_mut()
            .find(|(w, _)| (*z - *w).norm() <= tol)
        {
            Some((w, count)) => {
                *w = (*w * (*count as f64) + *z) / ((*count + 1) as f64);
                *count += 1;
            }
            None => merged.push((*z, 1)),
        }
    }
    merged.sort_by(|a, b| {
        (a.0.re, a.0.im)
            .partial_cmp(&(b.0.re, b.0.im))
            .expect("eigenvalues are finite")
    });
    Spectrum {
        raw,
        merged,
        normal,
        tol,
    }
}
