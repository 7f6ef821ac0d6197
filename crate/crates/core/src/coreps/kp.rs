//! Irreducible corepresentations of the Kac-Paljutkin quantum group: the
//! Z_2 x Z_2 family of group-like elements and the two-dimensional
//! fundamental representation X^(a,lambda) with lambda an eighth root of
//! unity.

use crate::algebra::AlgElement;
use crate::error::{Error, Result};
use crate::exactnum::{rat, CycloNum};
use crate::qgroup::kp::{E1, E11, E12, E2, E21, E22, E3, E4};
use crate::qgroup::QuantumGroup;

use super::{Corep, IrrepCatalog};

/// The four group-like elements, a group isomorphic to Z_2 x Z_2. The first
/// is the unit (trivial representation).
pub fn kp_grouplikes(g: &QuantumGroup) -> [AlgElement; 4] {
    let alg = g.algebra();
    let one = CycloNum::one;
    let neg = || -CycloNum::one();
    let elem = |coeffs: [(u32, CycloNum); 6]| alg.element_from_terms(coeffs);
    [
        alg.unit_element(),
        elem([
            (E1, one()),
            (E2, one()),
            (E3, one()),
            (E4, one()),
            (E11, neg()),
            (E22, neg()),
        ]),
        elem([
            (E1, one()),
            (E2, neg()),
            (E3, neg()),
            (E4, one()),
            (E11, one()),
            (E22, neg()),
        ]),
        elem([
            (E1, one()),
            (E2, neg()),
            (E3, neg()),
            (E4, one()),
            (E11, neg()),
            (E22, one()),
        ]),
    ]
}

fn check_fundamental_params(a: i8) -> Result<()> {
    if a != 1 && a != -1 {
        return Err(Error::InvalidParameter(format!(
            "fundamental representation parameter a must be +1 or -1, got {a}"
        )));
    }
    Ok(())
}

/// The fundamental representation X^(a,lambda) with lambda = zeta_8^j:
/// X11 = 1 (+) a (+) -a (+) -1, X22 = 1 (+) -a (+) a (+) -1,
/// X12 = lambda E12 + i a lambda E21, X21 = conj(lambda) E12 - i a conj(lambda) E21.
pub fn kp_fundamental(g: &QuantumGroup, a: i8, j: u8) -> Result<Corep> {
    check_fundamental_params(a)?;
    let alg = g.algebra();
    let sa = CycloNum::from_int(a as i64);
    let lambda = CycloNum::root_of_unity(8, (j % 8) as i64);
    let lbar = lambda.conj();
    let i = CycloNum::i();
    let x11 = alg.element_from_terms([
        (E1, CycloNum::one()),
        (E2, sa.clone()),
        (E3, -&sa),
        (E4, -CycloNum::one()),
    ]);
    let x22 = alg.element_from_terms([
        (E1, CycloNum::one()),
        (E2, -&sa),
        (E3, sa.clone()),
        (E4, -CycloNum::one()),
    ]);
    let x12 = alg.element_from_terms([(E12, lambda.clone()), (E21, &(&i * &sa) * &lambda)]);
    let x21 = alg.element_from_terms([(E12, lbar.clone()), (E21, -&(&(&i * &sa) * &lbar))]);
    Ok(Corep::new(g.clone(), 2, vec![x11, x12, x21, x22]))
}

/// The generation property: the eight closed-form combinations of the matrix
/// coefficients reproduce the canonical basis exactly.
pub fn kp_generation_check(g: &QuantumGroup, a: i8, j: u8) -> Result<bool> {
    let x = kp_fundamental(g, a, j)?;
    let alg = g.algebra();
    let quarter = rat(1, 4);
    let half = rat(1, 2);
    let sa = CycloNum::from_int(a as i64);
    let i = CycloNum::i();
    let ia = &i * &sa;
    let lambda = CycloNum::root_of_unity(8, (j % 8) as i64);
    let lbar = lambda.conj();

    let x11 = x.entry(0, 0);
    let x12 = x.entry(0, 1);
    let x21 = x.entry(1, 0);
    let x22 = x.entry(1, 1);

    let sq = &(x11 * x11) + &(x11 * x22);
    let diff_sq = &(x11 * x11) - &(x11 * x22);
    let sum = x11 + x22;
    let diff = x11 - x22;

    let e1 = &sq.scale_rat(&quarter) + &sum.scale_rat(&quarter);
    let e4 = &sq.scale_rat(&quarter) - &sum.scale_rat(&quarter);
    let e2 = &diff_sq.scale_rat(&quarter) + &diff.scale_rat(&quarter).scale(&sa);
    let e3 = &diff_sq.scale_rat(&quarter) - &diff.scale_rat(&quarter).scale(&sa);
    let e11 = (&(x12 * &x12.star()) + &(x12 * x21).scale(&ia)).scale_rat(&half);
    let e22 = (&(x12 * &x12.star()) - &(x12 * x21).scale(&ia)).scale_rat(&half);
    let e12 = (&x12.scale(&lbar) + &x21.scale(&lambda)).scale_rat(&half);
    let e21 = (&x12.scale(&lbar) - &x21.scale(&lambda)).scale(&-&ia).scale_rat(&half);

    Ok(e1 == alg.basis_element(E1)
        && e2 == alg.basis_element(E2)
        && e3 == alg.basis_element(E3)
        && e4 == alg.basis_element(E4)
        && e11 == alg.basis_element(E11)
        && e22 == alg.basis_element(E22)
        && e12 == alg.basis_element(E12)
        && e21 == alg.basis_element(E21))
}

/// The complete catalog: four group-likes plus the fundamental
/// representation (parameters a = 1, lambda = zeta_8).
pub fn kp_catalog(g: &QuantumGroup) -> IrrepCatalog {
    let [g1, g2, g3, g4] = kp_grouplikes(g);
    let x = kp_fundamental(g, 1, 1).expect("default parameters are valid");
    IrrepCatalog {
        group: g.clone(),
        items: vec![
            ("g1".into(), Corep::one_dim(g.clone(), g1)),
            ("g2".into(), Corep::one_dim(g.clone(), g2)),
            ("g3".into(), Corep::one_dim(g.clone(), g3)),
            ("g4".into(), Corep::one_dim(g.clone(), g4)),
            ("X".into(), x),
        ],
    }
}
