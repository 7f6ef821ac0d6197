//! The eight-dimensional Kac-Paljutkin quantum group.
//!
//! Underlying algebra: C + C + C + C + M_2(C) with basis e1..e4, E11, E12,
//! E21, E22 and conductor 8 (the scalars need the imaginary unit, and the
//! default fundamental representation parameter is an eighth root of unity).

use crate::algebra::{Algebra, SparseVec};
use crate::exactnum::{rat, CycloNum};

use super::QuantumGroup;

pub const E1: u32 = 0;
pub const E2: u32 = 1;
pub const E3: u32 = 2;
pub const E4: u32 = 3;
pub const E11: u32 = 4;
pub const E12: u32 = 5;
pub const E21: u32 = 6;
pub const E22: u32 = 7;

pub fn kp_algebra() -> Algebra {
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

pub fn build_kp() -> QuantumGroup {
    let alg = kp_algebra();
    let one = CycloNum::one;
    let half = || CycloNum::from_rat(rat(1, 2));
    let i = CycloNum::i;
    let ih = || &i() * &half(); // i/2

    let pair = |x: u32, y: u32| x * 8 + y;
    let col = |terms: Vec<(u32, u32, CycloNum)>| -> SparseVec {
        terms
            .into_iter()
            .map(|(x, y, c)| (pair(x, y), c))
            .collect()
    };

    let delta = vec![
        // Delta(e1)
        col(vec![
            (E1, E1, one()),
            (E2, E2, one()),
            (E3, E3, one()),
            (E4, E4, one()),
            (E11, E11, half()),
            (E12, E12, half()),
            (E21, E21, half()),
            (E22, E22, half()),
        ]),
        // Delta(e2)
        col(vec![
            (E1, E2, one()),
            (E2, E1, one()),
            (E3, E4, one()),
            (E4, E3, one()),
            (E11, E22, half()),
            (E22, E11, half()),
            (E12, E21, -ih()),
            (E21, E12, ih()),
        ]),
        // Delta(e3)
        col(vec![
            (E1, E3, one()),
            (E3, E1, one()),
            (E2, E4, one()),
            (E4, E2, one()),
            (E11, E22, half()),
            (E22, E11, half()),
            (E12, E21, ih()),
            (E21, E12, -ih()),
        ]),
        // Delta(e4)
        col(vec![
            (E1, E4, one()),
            (E4, E1, one()),
            (E2, E3, one()),
            (E3, E2, one()),
            (E11, E11, half()),
            (E22, E22, half()),
            (E12, E12, -half()),
            (E21, E21, -half()),
        ]),
        // Delta(E11)
        col(vec![
            (E1, E11, one()),
            (E11, E1, one()),
            (E2, E22, one()),
            (E22, E2, one()),
            (E3, E22, one()),
            (E22, E3, one()),
            (E4, E11, one()),
            (E11, E4, one()),
        ]),
        // Delta(E12)
        col(vec![
            (E1, E12, one()),
            (E12, E1, one()),
            (E2, E21, i()),
            (E21, E2, -i()),
            (E3, E21, -i()),
            (E21, E3, i()),
            (E4, E12, -one()),
            (E12, E4, -one()),
        ]),
        // Delta(E21)
        col(vec![
            (E1, E21, one()),
            (E21, E1, one()),
            (E2, E12, -i()),
            (E12, E2, i()),
            (E3, E12, i()),
            (E12, E3, -i()),
            (E4, E21, -one()),
            (E21, E4, -one()),
        ]),
        // Delta(E22)
        col(vec![
            (E1, E22, one()),
            (E22, E1, one()),
            (E2, E11, one()),
            (E11, E2, one()),
            (E3, E11, one()),
            (E11, E3, one()),
            (E4, E22, one()),
            (E22, E4, one()),
        ]),
    ];

    // counit picks the first scalar coordinate
    let mut counit = vec![CycloNum::zero(); 8];
    counit[E1 as usize] = CycloNum::one();

    // antipode is the transpose map: fixes e_i, swaps E12 and E21
    let antipode = (0..8u32)
        .map(|j| {
            let target = match j {
                E12 => E21,
                E21 => E12,
                other => other,
            };
            SparseVec::singleton(target, CycloNum::one())
        })
        .collect();

    // Haar: (1/8)(x1 + x2 + x3 + x4 + 2(c11 + c22))
    let mut haar = vec![CycloNum::zero(); 8];
    for e in [E1, E2, E3, E4] {
        haar[e as usize] = CycloNum::from_rat(rat(1, 8));
    }
    for e in [E11, E22] {
        haar[e as usize] = CycloNum::from_rat(rat(1, 4));
    }

    QuantumGroup::new("kp", alg, delta, counit, antipode, haar)
}
