//! Exact Gaussian elimination over the cyclotomic fields, plus the float-side
//! numerical rank and Gram positivity checks.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::exactnum::CycloNum;

/// Reduced row echelon form in place; returns the pivot column indices.
/// All arithmetic is exact field arithmetic.
pub fn rref(mat: &mut Vec<Vec<CycloNum>>) -> Vec<usize> {
    let rows = mat.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = mat[0].len();
    let mut pivots = Vec::new();
    let mut r = 0usize;
    for c in 0..cols {
        // Prefer a pivot with few nonzero basis coordinates to keep the
        // fractions small.
        let mut best: Option<(usize, usize)> = None;
        for i in r..rows {
            if !mat[i][c].is_zero() {
                let w = mat[i][c].coeffs().iter().filter(|x| !num_traits::Zero::is_zero(*x)).count();
                if best.map_or(true, |(_, bw)| w < bw) {
                    best = Some((i, w));
                    if w == 1 {
                        break;
                    }
                }
            }
        }
        let Some((p, _)) = best else { continue };
        mat.swap(r, p);
        let inv = mat[r][c].checked_inv().expect("pivot is nonzero");
        for j in c..cols {
            if !mat[r][j].is_zero() {
                mat[r][j] = &mat[r][j] * &inv;
            }
        }
        for i in 0..rows {
            if i != r && !mat[i][c].is_zero() {
                let f = mat[i][c].clone();
                for j in c..cols {
                    if !mat[r][j].is_zero() {
                        mat[i][j] = &mat[i][j] - &(&f * &mat[r][j]);
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

pub fn rank_exact(mut mat: Vec<Vec<CycloNum>>) -> usize {
    rref(&mut mat).len()
}

/// Basis of the solution space of M x = 0, with M given by rows.
pub fn nullspace(mat: &[Vec<CycloNum>], cols: usize) -> Vec<Vec<CycloNum>> {
    let mut m: Vec<Vec<CycloNum>> = mat
        .iter()
        .filter(|row| row.iter().any(|c| !c.is_zero()))
        .cloned()
        .collect();
    let pivots = rref(&mut m);
    let pivot_of_col: Vec<Option<usize>> = {
        let mut v = vec![None; cols];
        for (r, &c) in pivots.iter().enumerate() {
            v[c] = Some(r);
        }
        v
    };
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_of_col[free].is_some() {
            continue;
        }
        let mut vec = vec![CycloNum::zero(); cols];
        vec[free] = CycloNum::one();
        for (c, p) in pivot_of_col.iter().enumerate() {
            if let Some(r) = p {
                vec[c] = -&m[*r][free];
            }
        }
        basis.push(vec);
    }
    basis
}

/// Solves M x = b exactly; returns None when inconsistent. With multiple
/// solutions, free variables are set to zero.
pub fn solve(mat: &[Vec<CycloNum>], rhs: &[CycloNum]) -> Option<Vec<CycloNum>> {
    assert_eq!(mat.len(), rhs.len());
    if mat.is_empty() {
        return Some(Vec::new());
    }
    let cols = mat[0].len();
    let mut aug: Vec<Vec<CycloNum>> = mat
        .iter()
        .zip(rhs.iter())
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.contains(&cols) {
        return None; // a pivot in the augmented column means inconsistency
    }
    let mut x = vec![CycloNum::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug[r][cols].clone();
    }
    Some(x)
}

/// Numerical rank via pivoted elimination on the float embedding.
pub fn rank_float(rows: &[Vec<Complex64>], tol: f64) -> usize {
    let nrows = rows.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = rows[0].len();
    let mut m: Vec<Vec<Complex64>> = rows.to_vec();
    let mut rank = 0usize;
    let mut row = 0usize;
    for col in 0..ncols {
        // partial pivoting by magnitude
        let mut best = row;
        let mut best_norm = 0.0f64;
        for i in row..nrows {
            let n = m[i][col].norm();
            if n > best_norm {
                best_norm = n;
                best = i;
            }
        }
        if best_norm <= tol {
            continue;
        }
        m.swap(row, best);
        let pivot = m[row][col];
        for i in (row + 1)..nrows {
            let f = m[i][col] / pivot;
            if f.norm() == 0.0 {
                continue;
            }
            for j in col..ncols {
                let sub = f * m[row][j];
                m[i][j] -= sub;
            }
        }
        rank += 1;
        row += 1;
        if row == nrows {
            break;
        }
    }
    rank
}

pub fn embed_matrix(mat: &[Vec<CycloNum>]) -> DMatrix<Complex64> {
    let nrows = mat.len();
    let ncols = if nrows == 0 { 0 } else { mat[0].len() };
    DMatrix::from_fn(nrows, ncols, |i, j| mat[i][j].embed())
}

/// Smallest eigenvalue of the Hermitian part of `m`; used for Gram
/// positive-semidefiniteness checks.
pub fn min_hermitian_eigenvalue(m: &DMatrix<Complex64>) -> f64 {
    let herm = (m + m.adjoint()) * Complex64::new(0.5, 0.0);
    let eig = herm.symmetric_eigen();
    eig.eigenvalues.iter().cloned().fold(f64::INFINITY, f64::min)
}

/// Exact product of dense matrices over the scalar field.
pub fn mat_mul_exact(a: &[Vec<CycloNum>], b: &[Vec<CycloNum>]) -> Vec<Vec<CycloNum>> {
    let n = a.len();
    let k = b.len();
    let m = if k == 0 { 0 } else { b[0].len() };
    let mut out = vec![vec![CycloNum::zero(); m]; n];
    for i in 0..n {
        for l in 0..k {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..m {
                if !b[l][j].is_zero() {
                    out[i][j] = &out[i][j] + &(&a[i][l] * &b[l][j]);
                }
            }
        }
    }
    out
}
