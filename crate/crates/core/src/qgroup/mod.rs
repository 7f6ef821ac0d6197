//! Finite quantum groups as an [`Algebra`] together with coproduct, counit,
//! antipode and Haar functional, plus the exact axiom verifiers.

pub mod dual;
pub mod fixture;
pub mod kp;
pub mod sekine;

use std::collections::BTreeMap;
use std::sync::Arc;

use rayon::prelude::*;

use crate::algebra::linalg::{embed_matrix, min_hermitian_eigenvalue, rank_float, solve};
use crate::algebra::{AlgElement, Algebra, Functional, LinearMap, SparseVec};
use crate::exactnum::CycloNum;
use crate::report::Report;

pub use dual::{counit_support_idempotent, dual, dual_of_verified, structurally_equal};
pub use kp::build_kp;
pub use sekine::build_sekine;

/// Upper bound on the dimension for the quantum-cancellation rank check.
pub const CANCELLATION_DIM_BOUND: usize = 32;
/// From this dimension on (the Sekine n = 5 group) the coproduct
/// multiplicativity check samples pairs instead of walking all of them.
pub const FULL_PAIRWISE_DIM_BOUND: usize = 50;
const SAMPLED_PAIRS: usize = 200;

struct QgInner {
    name: String,
    algebra: Algebra,
    tensor_sq: Algebra,
    delta: LinearMap,
    counit: Functional,
    antipode: LinearMap,
    haar: Functional,
}

/// Immutable quantum group handle; cheap to clone.
#[derive(Clone)]
pub struct QuantumGroup {
    inner: Arc<QgInner>,
}

impl std::fmt::Debug for QuantumGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "QuantumGroup({}, dim={})", self.name(), self.dim())
    }
}

impl QuantumGroup {
    pub fn new(
        name: impl Into<String>,
        algebra: Algebra,
        delta_cols: Vec<SparseVec>,
        counit: Vec<CycloNum>,
        antipode_cols: Vec<SparseVec>,
        haar: Vec<CycloNum>,
    ) -> QuantumGroup {
        let tensor_sq = Algebra::tensor(&algebra, &algebra);
        let delta = LinearMap::new(algebra.clone(), tensor_sq.clone(), delta_cols);
        let counit = Functional::new(algebra.clone(), counit);
        let antipode = LinearMap::new(algebra.clone(), algebra.clone(), antipode_cols);
        let haar = Functional::new(algebra.clone(), haar);
        QuantumGroup {
            inner: Arc::new(QgInner {
                name: name.into(),
                algebra,
                tensor_sq,
                delta,
                counit,
                antipode,
                haar,
            }),
        }
    }

    pub fn name(&self) -> &str {
        &self.inner.name
    }

    pub fn algebra(&self) -> &Algebra {
        &self.inner.algebra
    }

    pub fn tensor_sq(&self) -> &Algebra {
        &self.inner.tensor_sq
    }

    pub fn delta(&self) -> &LinearMap {
        &self.inner.delta
    }

    pub fn counit(&self) -> &Functional {
        &self.inner.counit
    }

    pub fn antipode(&self) -> &LinearMap {
        &self.inner.antipode
    }

    pub fn haar(&self) -> &Functional {
        &self.inner.haar
    }

    pub fn dim(&self) -> usize {
        self.inner.algebra.dim()
    }

    /// Exact Haar value of an element.
    pub fn haar_of(&self, x: &AlgElement) -> CycloNum {
        self.inner.haar.apply(x)
    }

    /// Tensor-square element 1 (x) a.
    pub fn one_tensor(&self, a: &AlgElement) -> AlgElement {
        let d = self.dim() as u32;
        let mut v = SparseVec::new();
        for (u, cu) in self.algebra().unit_vec().iter() {
            for (i, ci) in a.coeffs().iter() {
                v.add_term(u * d + i, cu * ci);
            }
        }
        self.tensor_sq().element_from(v)
    }

    /// Tensor-square element a (x) 1.
    pub fn tensor_one(&self, a: &AlgElement) -> AlgElement {
        let d = self.dim() as u32;
        let mut v = SparseVec::new();
        for (i, ci) in a.coeffs().iter() {
            for (u, cu) in self.algebra().unit_vec().iter() {
                v.add_term(i * d + u, ci * cu);
            }
        }
        self.tensor_sq().element_from(v)
    }

    /// Tensor-square element a (x) b.
    pub fn elem_tensor(&self, a: &AlgElement, b: &AlgElement) -> AlgElement {
        let d = self.dim() as u32;
        let mut v = SparseVec::new();
        for (i, ci) in a.coeffs().iter() {
            for (j, cj) in b.coeffs().iter() {
                v.add_term(i * d + j, ci * cj);
            }
        }
        self.tensor_sq().element_from(v)
    }
}

/// Deterministic PRNG for the sampled multiplicativity check; reports must be
/// reproducible run to run.
pub(crate) struct SplitMix64(u64);

impl SplitMix64 {
    pub(crate) fn new(seed: u64) -> Self {
        SplitMix64(seed)
    }

    pub(crate) fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }
}

fn tensor_pair(d: u32, pair: u32) -> (u32, u32) {
    (pair / d, pair % d)
}

/// (Delta (x) id) Delta(b) and (id (x) Delta) Delta(b) as triple-index maps.
fn coassoc_sides(
    g: &QuantumGroup,
    b: u32,
) -> (
    BTreeMap<(u32, u32, u32), CycloNum>,
    BTreeMap<(u32, u32, u32), CycloNum>,
) {
    let d = g.dim() as u32;
    let mut lhs: BTreeMap<(u32, u32, u32), CycloNum> = BTreeMap::new();
    let mut rhs: BTreeMap<(u32, u32, u32), CycloNum> = BTreeMap::new();
    let add = |m: &mut BTreeMap<(u32, u32, u32), CycloNum>, k: (u32, u32, u32), v: CycloNum| {
        if v.is_zero() {
            return;
        }
        let slot = m.entry(k).or_insert_with(CycloNum::zero);
        *slot = &*slot + &v;
        if slot.is_zero() {
            m.remove(&k);
        }
    };
    for (pair, c) in g.delta().column(b).iter() {
        let (x, y) = tensor_pair(d, *pair);
        for (pair2, c2) in g.delta().column(x).iter() {
            let (p, q) = tensor_pair(d, *pair2);
            add(&mut lhs, (p, q, y), c * c2);
        }
        for (pair2, c2) in g.delta().column(y).iter() {
            let (p, q) = tensor_pair(d, *pair2);
            add(&mut rhs, (x, p, q), c * c2);
        }
    }
    (lhs, rhs)
}

/// Exact verification of the Hopf *-algebra axioms. Every law is checked on
/// basis elements; multiplicativity of the coproduct runs over all basis
/// pairs up to dimension 50 and over all diagonal pairs plus 200 seeded
/// random pairs beyond that.
pub fn verify_hopf(g: &QuantumGroup) -> Report {
    let mut report = Report::new(format!("hopf axioms: {}", g.name()));
    let d = g.dim() as u32;
    let alg = g.algebra();

    // coassociativity
    let bad: Vec<u32> = (0..d)
        .into_par_iter()
        .filter(|&b| {
            let (lhs, rhs) = coassoc_sides(g, b);
            lhs != rhs
        })
        .collect();
    report.push(
        "coassociativity",
        bad.is_empty(),
        fail_detail(alg, &bad),
    );

    // counit laws
    let mut bad_left = Vec::new();
    let mut bad_right = Vec::new();
    for b in 0..d {
        let mut left = SparseVec::new();
        let mut right = SparseVec::new();
        for (pair, c) in g.delta().column(b).iter() {
            let (x, y) = tensor_pair(d, *pair);
            left.add_term(y, c * g.counit().weight(x));
            right.add_term(x, c * g.counit().weight(y));
        }
        let expected = SparseVec::singleton(b, CycloNum::one());
        if left != expected {
            bad_left.push(b);
        }
        if right != expected {
            bad_right.push(b);
        }
    }
    report.push("counit left law", bad_left.is_empty(), fail_detail(alg, &bad_left));
    report.push("counit right law", bad_right.is_empty(), fail_detail(alg, &bad_right));

    // antipode laws: m(S (x) id)Delta = eps(.)1 = m(id (x) S)Delta
    let mut bad_s_left = Vec::new();
    let mut bad_s_right = Vec::new();
    for b in 0..d {
        let mut left = SparseVec::new();
        let mut right = SparseVec::new();
        for (pair, c) in g.delta().column(b).iter() {
            let (x, y) = tensor_pair(d, *pair);
            for (p, cs) in g.antipode().column(x).iter() {
                let scale = c * cs;
                alg.for_each_mult_term(*p, y, &mut |k, v| left.add_term(k, v * &scale));
            }
            for (q, cs) in g.antipode().column(y).iter() {
                let scale = c * cs;
                alg.for_each_mult_term(x, *q, &mut |k, v| right.add_term(k, v * &scale));
            }
        }
        let expected = alg.unit_vec().scale(g.counit().weight(b));
        if left != expected {
            bad_s_left.push(b);
        }
        if right != expected {
            bad_s_right.push(b);
        }
    }
    report.push("antipode left law", bad_s_left.is_empty(), fail_detail(alg, &bad_s_left));
    report.push("antipode right law", bad_s_right.is_empty(), fail_detail(alg, &bad_s_right));

    // Delta is unital
    let delta_unit = g.delta().apply(&alg.unit_element());
    let unit_sq = g.tensor_sq().unit_element();
    report.push("coproduct unital", delta_unit == unit_sq, String::new());

    // Delta is a homomorphism
    let pairs: Vec<(u32, u32)> = if g.dim() < FULL_PAIRWISE_DIM_BOUND {
        (0..d).flat_map(|i| (0..d).map(move |j| (i, j))).collect()
    } else {
        let mut rng = SplitMix64::new(0x5e1f_c0de_2026_0808);
        let mut ps: Vec<(u32, u32)> = (0..d).map(|i| (i, i)).collect();
        for _ in 0..SAMPLED_PAIRS {
            ps.push(((rng.next() % d as u64) as u32, (rng.next() % d as u64) as u32));
        }
        ps
    };
    let mode = if g.dim() < FULL_PAIRWISE_DIM_BOUND {
        "all basis pairs"
    } else {
        "diagonal pairs + 200 seeded random pairs"
    };
    let bad_pairs: Vec<(u32, u32)> = pairs
        .par_iter()
        .filter(|&&(i, j)| {
            let prod = alg.mult_basis(i, j);
            let lhs = g.delta().apply(&alg.element_from(prod));
            let rhs = g.delta().apply(&alg.basis_element(i))
                * g.delta().apply(&alg.basis_element(j));
            lhs != rhs
        })
        .cloned()
        .collect();
    report.push(
        "coproduct multiplicative",
        bad_pairs.is_empty(),
        if bad_pairs.is_empty() {
            format!("checked on {mode}")
        } else {
            format!(
                "first failing pair ({}, {})",
                alg.label(bad_pairs[0].0),
                alg.label(bad_pairs[0].1)
            )
        },
    );

    // Delta commutes with the involution
    let bad_star: Vec<u32> = (0..d)
        .into_par_iter()
        .filter(|&b| {
            let lhs = g.delta().apply(&alg.basis_element(b).star());
            let rhs = g.delta().apply(&alg.basis_element(b)).star();
            lhs != rhs
        })
        .collect();
    report.push(
        "coproduct *-homomorphism",
        bad_star.is_empty(),
        fail_detail(alg, &bad_star),
    );

    report
}

/// Exact left/right invariance of the Haar functional on every basis
/// element, the state normalization, and numerical positivity of the Gram
/// matrix [h(b_i* b_j)].
pub fn verify_haar(g: &QuantumGroup) -> Report {
    verify_haar_with_tol(g, 1e-9)
}

pub fn verify_haar_with_tol(g: &QuantumGroup, tol: f64) -> Report {
    let mut report = Report::new(format!("haar state: {}", g.name()));
    let d = g.dim() as u32;
    let alg = g.algebra();

    let unit_val = g.haar_of(&alg.unit_element());
    report.push("h(unit) = 1", unit_val.is_one(), format!("h(1) = {unit_val}"));

    let mut bad_left = Vec::new();
    let mut bad_right = Vec::new();
    for b in 0..d {
        let mut left = SparseVec::new(); // (h (x) id) Delta(b)
        let mut right = SparseVec::new(); // (id (x) h) Delta(b)
        for (pair, c) in g.delta().column(b).iter() {
            let (x, y) = tensor_pair(d, *pair);
            left.add_term(y, c * g.haar().weight(x));
            right.add_term(x, c * g.haar().weight(y));
        }
        let expected = alg.unit_vec().scale(g.haar().weight(b));
        if left != expected {
            bad_left.push(b);
        }
        if right != expected {
            bad_right.push(b);
        }
    }
    report.push("left invariance", bad_left.is_empty(), fail_detail(alg, &bad_left));
    report.push("right invariance", bad_right.is_empty(), fail_detail(alg, &bad_right));

    // h(x*) = conj(h(x)) on basis elements
    let bad_star: Vec<u32> = (0..d)
        .filter(|&b| {
            g.haar_of(&alg.basis_element(b).star()) != g.haar_of(&alg.basis_element(b)).conj()
        })
        .collect();
    report.push("h(x*) = conj h(x)", bad_star.is_empty(), fail_detail(alg, &bad_star));

    // positivity: Gram matrix of h on the basis is PSD within tol
    let gram: Vec<Vec<CycloNum>> = (0..d)
        .into_par_iter()
        .map(|i| {
            let bi_star = alg.basis_element(i).star();
            (0..d)
                .map(|j| g.haar_of(&(&bi_star * &alg.basis_element(j))))
                .collect()
        })
        .collect();
    let min_eig = min_hermitian_eigenvalue(&embed_matrix(&gram));
    report.push(
        "gram positive semidefinite",
        min_eig >= -tol,
        format!("min eigenvalue {min_eig:.3e}, tol {tol:.1e}"),
    );

    report
}

/// Numerical check of the quantum cancellation rules: both spans
/// {(1 (x) b_i) Delta(b_j)} and {(b_i (x) 1) Delta(b_j)} must have full rank
/// dim^2. Skipped above the configured dimension bound.
pub fn verify_cancellation(g: &QuantumGroup, tol: f64) -> Report {
    let mut report = Report::new(format!("cancellation rules: {}", g.name()));
    if g.dim() > CANCELLATION_DIM_BOUND {
        report.skip(
            "span ranks",
            format!(
                "dim {} above the rank-check bound {}",
                g.dim(),
                CANCELLATION_DIM_BOUND
            ),
        );
        return report;
    }
    let d = g.dim() as u32;
    let full = (g.dim() * g.dim()) as usize;
    let deltas: Vec<AlgElement> = (0..d)
        .map(|j| g.delta().apply(&g.algebra().basis_element(j)))
        .collect();
    for (name, left_side) in [("(1 (x) a) Delta(b)", true), ("(a (x) 1) Delta(b)", false)] {
        let rows: Vec<Vec<num_complex::Complex64>> = (0..d)
            .into_par_iter()
            .flat_map_iter(|i| {
                let bi = g.algebra().basis_element(i);
                let factor = if left_side {
                    g.one_tensor(&bi)
                } else {
                    g.tensor_one(&bi)
                };
                deltas
                    .iter()
                    .map(move |dj| (&factor * dj).embed_dense())
                    .collect::<Vec<_>>()
            })
            .collect();
        let rank = rank_float(&rows, tol);
        report.push(
            format!("rank of span {name}"),
            rank == full,
            format!("rank {rank} of {full}"),
        );
    }
    report
}

/// True iff flip . Delta = Delta exactly on every basis element.
pub fn verify_cocommutative(g: &QuantumGroup) -> bool {
    let d = g.dim() as u32;
    (0..d).all(|b| {
        let col = g.delta().column(b);
        let flipped: SparseVec = col
            .iter()
            .map(|(pair, c)| {
                let (x, y) = tensor_pair(d, *pair);
                (y * d + x, c.clone())
            })
            .collect();
        &flipped == col
    })
}

/// Dimension of the space of right-invariant normalized functionals, i.e.
/// solutions of {(phi (x) id) Delta = phi(.) 1, phi(unit) = 1}. A Haar state
/// exists and is unique exactly when this is 1.
pub fn invariant_functional_space_dim(g: &QuantumGroup) -> usize {
    let d = g.dim();
    let du = d as u32;
    // Unknowns phi_0..phi_{d-1}; homogeneous equations indexed by (b, k):
    // sum_j phi_j Delta(b)[(j,k)] - phi_b unit_k = 0.
    let mut rows: Vec<Vec<CycloNum>> = Vec::new();
    for b in 0..du {
        let col = g.delta().column(b);
        for k in 0..du {
            let mut row = vec![CycloNum::zero(); d];
            for (pair, c) in col.iter() {
                let (x, y) = tensor_pair(du, *pair);
                if y == k {
                    row[x as usize] = &row[x as usize] + c;
                }
            }
            let u = g.algebra().unit_vec().get(k);
            if !u.is_zero() {
                row[b as usize] = &row[b as usize] - &u;
            }
            if row.iter().any(|c| !c.is_zero()) {
                rows.push(row);
            }
        }
    }
    crate::algebra::linalg::nullspace(&rows, d).len()
}

/// Solves the right-invariance system and normalizes; used by tests to
/// confirm the built-in Haar is the unique invariant state.
pub fn solve_invariant_functional(g: &QuantumGroup) -> Option<Vec<CycloNum>> {
    let d = g.dim();
    let du = d as u32;
    let mut rows: Vec<Vec<CycloNum>> = Vec::new();
    let mut rhs: Vec<CycloNum> = Vec::new();
    for b in 0..du {
        let col = g.delta().column(b);
        for k in 0..du {
            let mut row = vec![CycloNum::zero(); d];
            for (pair, c) in col.iter() {
                let (x, y) = tensor_pair(du, *pair);
                if y == k {
                    row[x as usize] = &row[x as usize] + c;
                }
            }
            let u = g.algebra().unit_vec().get(k);
            if !u.is_zero() {
                row[b as usize] = &row[b as usize] - &u;
            }
            rows.push(row);
            rhs.push(CycloNum::zero());
        }
    }
    // normalization phi(unit) = 1
    let mut norm_row = vec![CycloNum::zero(); d];
    for (k, c) in g.algebra().unit_vec().iter() {
        norm_row[*k as usize] = c.clone();
    }
    rows.push(norm_row);
    rhs.push(CycloNum::one());
    solve(&rows, &rhs)
}

fn fail_detail(alg: &Algebra, bad: &[u32]) -> String {
    if bad.is_empty() {
        String::new()
    } else {
        format!(
            "{} failing basis elements, first {}",
            bad.len(),
            alg.label(bad[0])
        )
    }
}
