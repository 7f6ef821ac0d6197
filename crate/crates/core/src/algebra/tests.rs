use num_complex::Complex64;
use num_traits::Zero;

use super::linalg::{embed_matrix, mat_mul_exact, rank_exact, rank_float};
use super::spectrum::spectrum;
use super::*;
use crate::exactnum::{rat, rat_int, CycloNum};

fn kp_algebra() -> Algebra {
    Algebra::multimatrix(
        &[1, 1, 1, 1, 2],
        8,
        Some(
            ["e1", "e2", "e3", "e4", "E11", "E12", "E21", "E22"]
                .iter()
                .map(|s| s.to_string())
                .collect(),
        ),
    )
}

/// Test-only oracle: the block-diagonal dense matrix realization of a
/// multimatrix algebra. Multiplication is matrix multiplication and the
/// involution is the conjugate transpose, independent of the sparse
/// structure-tensor path under test.
struct DenseRealization {
    block_sizes: Vec<usize>,
    n: usize,
}

impl DenseRealization {
    fn new(block_sizes: &[usize]) -> Self {
        DenseRealization {
            block_sizes: block_sizes.to_vec(),
            n: block_sizes.iter().sum(),
        }
    }

    fn realize(&self, x: &AlgElement) -> Vec<Vec<CycloNum>> {
        let mut mat = vec![vec![CycloNum::zero(); self.n]; self.n];
        for (idx, c) in x.coeffs().iter() {
            let mut rem = *idx as usize;
            let mut corner = 0usize;
            for &d in &self.block_sizes {
                if rem < d * d {
                    let (i, j) = (rem / d, rem % d);
                    mat[corner + i][corner + j] = &mat[corner + i][corner + j] + c;
                    break;
                }
                rem -= d * d;
                corner += d;
            }
        }
        mat
    }

    fn conj_transpose(&self, m: &[Vec<CycloNum>]) -> Vec<Vec<CycloNum>> {
        let mut out = vec![vec![CycloNum::zero(); self.n]; self.n];
        for i in 0..self.n {
            for j in 0..self.n {
                out[j][i] = m[i][j].conj();
            }
        }
        out
    }
}

#[test]
fn kp_multimatrix_shape() {
    let a = kp_algebra();
    assert_eq!(a.dim(), 8);
    let unit = a.unit_element();
    let expected = a.element_from_terms(
        [0u32, 1, 2, 3, 4, 7]
            .iter()
            .map(|&i| (i, CycloNum::one())),
    );
    assert_eq!(unit, expected);
}

#[test]
fn sekine_shaped_multimatrix_dimension() {
    for n in 2..=5usize {
        let mut blocks = vec![1usize; n * n];
        blocks.push(n);
        let a = Algebra::multimatrix(&blocks, 2 * n as u32, None);
        assert_eq!(a.dim(), 2 * n * n);
    }
}

#[test]
fn matrix_unit_relations() {
    let a = kp_algebra();
    let e12 = a.basis_element(5);
    let e21 = a.basis_element(6);
    let e11 = a.basis_element(4);
    assert_eq!(&e12 * &e21, e11);
    // e2 * e3 = 0 across scalar blocks
    assert!((&a.basis_element(1) * &a.basis_element(2)).is_zero());
}

#[test]
fn star_examples() {
    let a = kp_algebra();
    // star(E12) = E21 (coefficient conjugated; here the coefficient is i)
    let x = a.basis_element(5).scale(&CycloNum::i());
    let expected = a.basis_element(6).scale(&-CycloNum::i());
    assert_eq!(x.star(), expected);
    // a * unit = a
    let y = a
        .basis_element(0)
        .scale_rat(&rat(2, 3))
        .checked_add(&a.basis_element(5).scale(&CycloNum::i()))
        .unwrap();
    assert_eq!(&y * &a.unit_element(), y);
}

#[test]
fn star_against_dense_realization() {
    // (e1 + i E12)* = e1 - i E21, with the dense block-matrix realization as
    // the independent oracle.
    let a = kp_algebra();
    let realizer = DenseRealization::new(&[1, 1, 1, 1, 2]);
    let x = a
        .basis_element(0)
        .checked_add(&a.basis_element(5).scale(&CycloNum::i()))
        .unwrap();
    let starred = x.star();
    let expected = a
        .basis_element(0)
        .checked_sub(&a.basis_element(6).scale(&CycloNum::i()))
        .unwrap();
    assert_eq!(starred, expected);
    assert_eq!(
        realizer.realize(&starred),
        realizer.conj_transpose(&realizer.realize(&x))
    );
}

#[test]
fn multiplication_against_dense_realization() {
    let a = kp_algebra();
    let realizer = DenseRealization::new(&[1, 1, 1, 1, 2]);
    let x = a
        .element_from_terms([
            (0, CycloNum::from_rat(rat(1, 2))),
            (5, CycloNum::i()),
            (7, CycloNum::from_int(3)),
        ]);
    let y = a
        .element_from_terms([
            (4, CycloNum::root_of_unity(8, 1)),
            (6, CycloNum::from_int(-2)),
            (1, CycloNum::one()),
        ]);
    let prod = &x * &y;
    let oracle = mat_mul_exact(&realizer.realize(&x), &realizer.realize(&y));
    assert_eq!(realizer.realize(&prod), oracle);
}

#[test]
fn tensor_product_basics() {
    let a = kp_algebra();
    let t = Algebra::tensor(&a, &a);
    assert_eq!(t.dim(), 64);
    // unit_A (x) unit_A = unit_{A(x)A}
    let mut unit = SparseVec::new();
    for (i, ci) in a.unit_vec().iter() {
        for (j, cj) in a.unit_vec().iter() {
            unit.add_term(i * 8 + j, ci * cj);
        }
    }
    assert_eq!(t.unit_vec(), &unit);
    // (e1 (x) E12)(e1 (x) E21) = e1 (x) E11, matrix-unit oracle
    let x = t.basis_element(5); // e1 (x) E12
    let y = t.basis_element(6); // e1 (x) E21
    assert_eq!(&x * &y, t.basis_element(4));
}

#[test]
fn left_regular_examples() {
    let a = kp_algebra();
    let id = left_regular(&a.unit_element());
    for i in 0..8 {
        for j in 0..8 {
            assert_eq!(id[i][j].is_one(), i == j);
            if i != j {
                assert!(id[i][j].is_zero());
            }
        }
    }
    // left_regular(e1) is the rank-1 projection onto span(e1)
    let p = left_regular(&a.basis_element(0));
    assert_eq!(rank_exact(p.clone()), 1);
    assert!(p[0][0].is_one());
    // left_regular(E12): E21 -> E11, E22 -> E12, kills the rest
    let l = left_regular(&a.basis_element(5));
    let e12 = &a.basis_element(5);
    assert_eq!(e12 * &a.basis_element(6), a.basis_element(4));
    assert_eq!(e12 * &a.basis_element(7), a.basis_element(5));
    for j in [0u32, 1, 2, 3, 4, 5] {
        assert!((e12 * &a.basis_element(j)).is_zero());
    }
    assert!(l[4][6].is_one() && l[5][7].is_one());
}

#[test]
fn left_regular_is_multiplicative() {
    let a = kp_algebra();
    let x = a.element_from_terms([(0, CycloNum::i()), (5, CycloNum::from_int(2))]);
    let y = a.element_from_terms([(6, CycloNum::one()), (3, CycloNum::from_rat(rat(1, 3)))]);
    let lhs = left_regular(&(&x * &y));
    let rhs = mat_mul_exact(&left_regular(&x), &left_regular(&y));
    assert_eq!(lhs, rhs);
}

#[test]
fn structure_axioms_on_kp_algebra() {
    let a = kp_algebra();
    let dim = a.dim() as u32;
    // associativity on all basis triples
    for i in 0..dim {
        for j in 0..dim {
            for k in 0..dim {
                let bi = a.basis_element(i);
                let bj = a.basis_element(j);
                let bk = a.basis_element(k);
                assert_eq!(&(&bi * &bj) * &bk, &bi * &(&bj * &bk));
            }
        }
    }
    // star is involutive and anti-multiplicative on all basis pairs
    for i in 0..dim {
        let b = a.basis_element(i);
        assert_eq!(b.star().star(), b);
        for j in 0..dim {
            let c = a.basis_element(j);
            assert_eq!((&b * &c).star(), &c.star() * &b.star());
        }
    }
}

#[test]
fn spectrum_examples() {
    let a = kp_algebra();
    let s = spectrum(&a.unit_element(), 1e-9);
    assert!(s.normal);
    assert_eq!(s.merged.len(), 1);
    assert!((s.merged[0].0 - Complex64::new(1.0, 0.0)).norm() < 1e-9);
    assert_eq!(s.merged[0].1, 8);

    let two = &a.unit_element() + &a.unit_element();
    let s2 = spectrum(&two, 1e-9);
    assert!(s2.matches_set(&[Complex64::new(2.0, 0.0)]));

    // scaling: spectrum(2a) = 2 spectrum(a) for a = e1 + i E12 + ...
    let x = a.element_from_terms([(0, CycloNum::from_int(1)), (4, CycloNum::from_int(-1))]);
    let sx = spectrum(&x, 1e-9);
    let s2x = spectrum(&x.scale(&CycloNum::from_int(2)), 1e-9);
    for ((z, _), (w, _)) in sx.merged.iter().zip(s2x.merged.iter()) {
        assert!((*w - *z * 2.0).norm() < 1e-8);
    }
}

#[test]
fn rank_float_examples() {
    // zero vectors -> 0
    let zeros = vec![vec![Complex64::zero(); 5]; 3];
    assert_eq!(rank_float(&zeros, 1e-9), 0);
    // dim-many independent basis vectors -> dim
    let eye: Vec<Vec<Complex64>> = (0..6)
        .map(|i| {
            let mut row = vec![Complex64::zero(); 6];
            row[i] = Complex64::new(1.0, 0.0);
            row
        })
        .collect();
    assert_eq!(rank_float(&eye, 1e-9), 6);
    // exact rank on the same data agrees
    let a = kp_algebra();
    let mat = left_regular(&a.basis_element(0));
    let fr = rank_float(
        &embed_matrix(&mat)
            .row_iter()
            .map(|r| r.iter().cloned().collect())
            .collect::<Vec<_>>(),
        1e-9,
    );
    assert_eq!(fr, rank_exact(mat));
}

#[test]
fn algebra_mismatch_is_an_error() {
    let a = kp_algebra();
    let b = Algebra::multimatrix(&[2, 1], 4, None);
    let x = a.basis_element(0);
    let y = b.basis_element(0);
    assert!(matches!(
        x.checked_mul(&y),
        Err(crate::error::Error::AlgebraMismatch)
    ));
}

#[test]
fn exact_solver_roundtrip() {
    // Small inhomogeneous system over Q(zeta_8).
    let i = CycloNum::i();
    let mat = vec![
        vec![CycloNum::one(), i.clone()],
        vec![i.clone(), CycloNum::from_int(-1)],
        vec![CycloNum::from_int(2), CycloNum::from_int(1)],
    ];
    let x_true = vec![CycloNum::from_rat(rat(1, 2)), CycloNum::root_of_unity(8, 1)];
    let rhs: Vec<CycloNum> = (0..3)
        .map(|r| {
            let mut acc = CycloNum::zero();
            for c in 0..2 {
                acc = &acc + &(&mat[r][c] * &x_true[c]);
            }
            acc
        })
        .collect();
    let sol = super::linalg::solve(&mat, &rhs).expect("consistent system");
    assert_eq!(sol, x_true);
    // nullspace of a rank-1 2x2 system has dimension 1
    let m2 = vec![vec![CycloNum::one(), i.clone()]];
    let ns = super::linalg::nullspace(&m2, 2);
    assert_eq!(ns.len(), 1);
    let dot = &ns[0][0] + &(&i * &ns[0][1]);
    assert!(dot.is_zero());
}

#[test]
fn scale_by_rational_is_exact() {
    let a = kp_algebra();
    let x = a.basis_element(4);
    let y = x.scale_rat(&rat_int(3)).scale_rat(&rat(1, 3));
    assert_eq!(y, x);
}
