//! The dual of a finite quantum group: every structure map is the transpose
//! of one on the primal side. Multiplication dualizes the coproduct, the
//! coproduct dualizes multiplication, the unit is the counit, the counit is
//! evaluation at the unit, the antipode transposes, the involution is
//! omega*(a) = conj(omega(S(a)*)), and the Haar state evaluates at the
//! counit-support idempotent.

use std::collections::BTreeMap;

use crate::algebra::{AlgElement, Algebra, SparseVec};
use crate::error::{Error, Result};
use crate::exactnum::CycloNum;

use super::{verify_hopf, QuantumGroup};

/// The unique minimal idempotent p with x p = eps(x) p for every x and
/// eps(p) = 1 (the support projection of the counit). Solved as an exact
/// linear system.
pub fn counit_support_idempotent(g: &QuantumGroup) -> Result<AlgElement> {
    let d = g.dim();
    let du = d as u32;
    let alg = g.algebra();
    let mut rows: Vec<Vec<CycloNum>> = Vec::new();
    let mut rhs: Vec<CycloNum> = Vec::new();
    for x in 0..du {
        let eps_x = g.counit().weight(x).clone();
        // row block: (b_x p)_k - eps(x) p_k = 0 for every k
        let mut block: Vec<Vec<CycloNum>> = vec![vec![CycloNum::zero(); d]; d];
        for j in 0..du {
            alg.for_each_mult_term(x, j, &mut |k, c| {
                block[k as usize][j as usize] = &block[k as usize][j as usize] + c;
            });
        }
        for k in 0..d {
            if !eps_x.is_zero() {
                block[k][k] = &block[k][k] - &eps_x;
            }
            if block[k].iter().any(|c| !c.is_zero()) {
                rows.push(std::mem::take(&mut block[k]));
                rhs.push(CycloNum::zero());
            }
        }
    }
    let mut norm = vec![CycloNum::zero(); d];
    for (k, w) in g.counit().weights().iter().enumerate() {
        norm[k] = w.clone();
    }
    rows.push(norm);
    rhs.push(CycloNum::one());
    let p = crate::algebra::linalg::solve(&rows, &rhs).ok_or_else(|| {
        Error::VerificationFailed("counit has no support idempotent".into())
    })?;
    let elem = alg.element_from_terms(
        p.into_iter()
            .enumerate()
            .map(|(k, c)| (k as u32, c)),
    );
    // sanity: p must be idempotent
    if &elem * &elem != elem {
        return Err(Error::VerificationFailed(
            "counit support solution is not idempotent".into(),
        ));
    }
    Ok(elem)
}

/// Builds the dual quantum group. The input must pass the Hopf axiom
/// verification; the dual of a failing structure is meaningless.
pub fn dual(g: &QuantumGroup) -> Result<QuantumGroup> {
    let hopf = verify_hopf(g);
    if !hopf.all_passed() {
        let first = hopf
            .failures()
            .next()
            .map(|e| e.name.clone())
            .unwrap_or_default();
        return Err(Error::VerificationFailed(format!(
            "dual() requires a verified quantum group; {} failed on {}",
            g.name(),
            first
        )));
    }
    dual_of_verified(g)
}

/// The dual construction without the verification pass, for callers that
/// have just run [`verify_hopf`] themselves.
pub fn dual_of_verified(g: &QuantumGroup) -> Result<QuantumGroup> {
    let d = g.dim();
    let du = d as u32;
    let alg = g.algebra();

    // multiplication = transpose of the coproduct
    let mut mult: BTreeMap<(u32, u32), SparseVec> = BTreeMap::new();
    for k in 0..du {
        for (pairidx, c) in g.delta().column(k).iter() {
            let (i, j) = (pairidx / du, pairidx % du);
            mult.entry((i, j))
                .or_insert_with(SparseVec::new)
                .add_term(k, c.clone());
        }
    }

    // unit = counit
    let unit: SparseVec = g
        .counit()
        .weights()
        .iter()
        .enumerate()
        .map(|(k, c)| (k as u32, c.clone()))
        .collect();

    // star: (b^i)*(b_j) = conj(b^i(S(b_j)*)) = sum_k S_{kj} conj(T_{ik})
    let mut star_rows: Vec<Vec<(u32, CycloNum)>> = vec![Vec::new(); d];
    for k in 0..du {
        for (i, t) in alg.star_basis(k).iter() {
            star_rows[*i as usize].push((k, t.clone()));
        }
    }
    let mut antipode_rows: Vec<Vec<(u32, CycloNum)>> = vec![Vec::new(); d];
    for j in 0..du {
        for (k, s) in g.antipode().column(j).iter() {
            antipode_rows[*k as usize].push((j, s.clone()));
        }
    }
    let star_basis: Vec<SparseVec> = (0..d)
        .map(|i| {
            let mut v = SparseVec::new();
            for (k, t) in &star_rows[i] {
                let tc = t.conj();
                for (j, s) in &antipode_rows[*k as usize] {
                    v.add_term(*j, s * &tc);
                }
            }
            v
        })
        .collect();

    let labels: Vec<String> = alg.labels().iter().map(|l| format!("{l}^")).collect();
    let dual_alg = Algebra::from_structure(labels, alg.conductor(), mult, unit, star_basis);

    // coproduct = transpose of multiplication
    let mut delta_cols = vec![SparseVec::new(); d];
    for (i, j, vec) in alg
        .mult_entries()
        .expect("group algebras carry an explicit structure tensor")
    {
        for (k, c) in vec.iter() {
            delta_cols[*k as usize].add_term(i * du + j, c.clone());
        }
    }

    // counit = evaluation at the unit of the primal algebra
    let counit: Vec<CycloNum> = (0..du).map(|i| alg.unit_vec().get(i)).collect();

    // antipode = transpose
    let mut antipode_cols = vec![SparseVec::new(); d];
    for j in 0..du {
        for (k, s) in g.antipode().column(j).iter() {
            antipode_cols[*k as usize].add_term(j, s.clone());
        }
    }

    // Haar = evaluation at the counit-support idempotent
    let p = counit_support_idempotent(g)?;
    let haar: Vec<CycloNum> = (0..du).map(|i| p.coeff(i)).collect();

    Ok(QuantumGroup::new(
        format!("dual({})", g.name()),
        dual_alg,
        delta_cols,
        counit,
        antipode_cols,
        haar,
    ))
}

/// Structural identity of all defining tensors under the canonical basis
/// identification (labels are ignored). Used for the biduality check.
pub fn structurally_equal(a: &QuantumGroup, b: &QuantumGroup) -> bool {
    if a.dim() != b.dim() || a.algebra().conductor() != b.algebra().conductor() {
        return false;
    }
    let collect = |g: &QuantumGroup| -> Option<BTreeMap<(u32, u32), SparseVec>> {
        g.algebra()
            .mult_entries()
            .map(|it| it.map(|(i, j, v)| ((i, j), v.clone())).collect())
    };
    let (Some(ma), Some(mb)) = (collect(a), collect(b)) else {
        return false;
    };
    if ma != mb || a.algebra().unit_vec() != b.algebra().unit_vec() {
        return false;
    }
    let d = a.dim() as u32;
    (0..d).all(|i| {
        a.algebra().star_basis(i) == b.algebra().star_basis(i)
            && a.delta().column(i) == b.delta().column(i)
            && a.antipode().column(i) == b.antipode().column(i)
            && a.counit().weight(i) == b.counit().weight(i)
            && a.haar().weight(i) == b.haar().weight(i)
    })
}
