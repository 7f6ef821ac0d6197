use super::*;
use crate::qgroup::kp::{E1, E11, E2, E22, E3, E4};
use crate::qgroup::sekine::SekineIndex;
use crate::qgroup::{build_kp, build_sekine, dual};

#[test]
fn kp_grouplikes_are_grouplike_unitaries() {
    let g = build_kp();
    let gl = kp_grouplikes(&g);
    assert_eq!(gl[0], g.algebra().unit_element());
    for (k, x) in gl.iter().enumerate() {
        // Delta(g) = g (x) g, eps(g) = 1, g* g = unit
        assert_eq!(g.delta().apply(x), g.elem_tensor(x, x), "element {k}");
        assert!(g.counit().apply(x).is_one(), "element {k}");
        assert_eq!(&x.star() * x, g.algebra().unit_element(), "element {k}");
    }
    // componentwise product oracle: third * fourth = second
    assert_eq!(&gl[2] * &gl[3], gl[1]);
}

#[test]
fn kp_fundamental_entries_and_schur_norm() {
    let g = build_kp();
    let x = kp_fundamental(&g, 1, 1).unwrap();
    // X11 = 1 (+) a (+) -a (+) -1 (+) 0_2 with a = 1
    let expected = g.algebra().element_from_terms([
        (E1, CycloNum::one()),
        (E2, CycloNum::one()),
        (E3, -CycloNum::one()),
        (E4, -CycloNum::one()),
    ]);
    assert_eq!(x.entry(0, 0), &expected);
    let r = is_corep(&x);
    assert!(r.all(), "{r:?}");
    assert!(is_unitary(&x.conjugate()));
    // h(chi* chi) = 1
    let chi = x.trace();
    assert!(g.haar_of(&(&chi.star() * &chi)).is_one());
    assert!(is_irreducible(&x));
}

#[test]
fn kp_generation_property_for_all_parameters() {
    let g = build_kp();
    for a in [1i8, -1] {
        for j in [0u8, 1, 3, 5] {
            assert!(kp_generation_check(&g, a, j).unwrap(), "a={a}, j={j}");
            assert!(is_corep(&kp_fundamental(&g, a, j).unwrap()).all());
        }
    }
    assert!(kp_fundamental(&g, 2, 0).is_err());
}

#[test]
fn corep_identity_fails_on_swapped_entries() {
    let g = build_kp();
    let x = kp_fundamental(&g, 1, 1).unwrap();
    let swapped = Corep::new(
        g.clone(),
        2,
        vec![
            x.entry(0, 0).clone(),
            x.entry(1, 0).clone(), // u12 <-> u21
            x.entry(0, 1).clone(),
            x.entry(1, 1).clone(),
        ],
    );
    assert!(!is_corep(&swapped).corep_identity);
}

#[test]
fn kp_char_power_cases() {
    let g = build_kp();
    let x = kp_fundamental(&g, 1, 1).unwrap();
    let alg = g.algebra();
    let two = CycloNum::from_int(2);
    let m2 = -CycloNum::from_int(2);
    let odd_expected = alg.element_from_terms([(E1, two.clone()), (E4, m2.clone())]);
    let scalars_2 = alg.element_from_terms([
        (E1, two.clone()),
        (E2, two.clone()),
        (E3, two.clone()),
        (E4, two.clone()),
    ]);
    let mod4_expected = &scalars_2 + &alg.element_from_terms([(E11, m2.clone()), (E22, m2.clone())]);
    let mod8_expected = &scalars_2 + &alg.element_from_terms([(E11, two.clone()), (E22, two.clone())]);
    for k in 0..=12u64 {
        let chi = x.power(k).trace();
        match k % 8 {
            _ if k % 2 == 1 => assert_eq!(chi, odd_expected, "k={k}"),
            2 | 6 => assert_eq!(chi, scalars_2, "k={k}"),
            4 => assert_eq!(chi, mod4_expected, "k={k}"),
            0 => assert_eq!(chi, mod8_expected, "k={k}"),
            _ => unreachable!(),
        }
        assert!(chi.is_self_adjoint(), "k={k}");
    }
    // power 0 is the identity grid with trace d * unit
    let id = x.power(0);
    assert!(id.is_diagonal());
    assert_eq!(id.trace(), alg.unit_element().scale(&two));
}

#[test]
fn corep_power_monoid_law() {
    let g = build_kp();
    let x = kp_fundamental(&g, -1, 1).unwrap();
    for (j, k) in [(1u64, 2u64), (3, 4), (2, 6)] {
        let lhs = x.power(j + k);
        let rhs = x.power(j).matmul(&x.power(k));
        for i in 0..2 {
            for l in 0..2 {
                assert_eq!(lhs.entry(i, l), rhs.entry(i, l));
            }
        }
    }
}

#[test]
fn sekine_one_dim_reps() {
    let g = build_sekine(5).unwrap();
    // rho_0^+ is the unit
    let rho0p = sekine_one_dim(&g, OneDimKind::Rho, 0, Sign::Plus).unwrap();
    assert_eq!(rho0p, g.algebra().unit_element());
    // all rho_l^+- are group-like unitaries
    for l in 0..5 {
        for sign in [Sign::Plus, Sign::Minus] {
            let r = sekine_one_dim(&g, OneDimKind::Rho, l, sign).unwrap();
            assert_eq!(g.delta().apply(&r), g.elem_tensor(&r, &r), "rho{l}{:?}", sign);
            assert!(g.counit().apply(&r).is_one());
            assert_eq!(&r.star() * &r, g.algebra().unit_element());
        }
    }
    // sigma exists only for even n
    assert!(sekine_one_dim(&g, OneDimKind::Sigma, 0, Sign::Plus).is_err());
    assert!(sekine_one_dim(&g, OneDimKind::Rho, 9, Sign::Plus).is_err());

    let g4 = build_sekine(4).unwrap();
    for l in 0..4 {
        for sign in [Sign::Plus, Sign::Minus] {
            let s = sekine_one_dim(&g4, OneDimKind::Sigma, l, sign).unwrap();
            assert_eq!(g4.delta().apply(&s), g4.elem_tensor(&s, &s), "sigma{l}{:?}", sign);
            assert!(g4.counit().apply(&s).is_one());
        }
    }
}

#[test]
fn sekine_two_dim_matrix_coefficients() {
    let n = 5;
    let g = build_sekine(n).unwrap();
    let ix = SekineIndex { n };
    let x = sekine_two_dim(&g, 2, 1).unwrap();
    // X12 = sum_i eta^{-iv} E(i, i+u)
    let expected: AlgElement = g.algebra().element_from_terms(
        (0..n as i64).map(|i| (ix.mat(i, i + 2), ix.eta(-i))),
    );
    assert_eq!(x.entry(0, 1), &expected);
    let r = is_corep(&x);
    assert!(r.all(), "{r:?}");
    assert!(is_irreducible(&x));
    // range errors
    assert!(sekine_two_dim(&g, 5, 1).is_err());
    assert!(sekine_two_dim(&g, 0, 0).is_err());
    assert!(sekine_two_dim(&g, 0, 3).is_err());
}

#[test]
fn sekine_even_powers_are_diagonal() {
    let n = 5;
    let g = build_sekine(n).unwrap();
    for (u, v) in [(0u32, 1u32), (1, 1), (3, 2)] {
        let x = sekine_two_dim(&g, u, v).unwrap();
        for k in [2u64, 4, 6] {
            assert!(x.power(k).is_diagonal(), "(u,v,k) = ({u},{v},{k})");
        }
        assert!(!x.power(3).is_diagonal());
    }
}

#[test]
fn intertwiner_dimensions() {
    let g = build_sekine(5).unwrap();
    let x01 = sekine_two_dim(&g, 0, 1).unwrap();
    let x11 = sekine_two_dim(&g, 1, 1).unwrap();
    let x02 = sekine_two_dim(&g, 0, 2).unwrap();
    assert_eq!(intertwiners(&x01, &x01).len(), 1);
    assert_eq!(intertwiners(&x01, &x11).len(), 0);
    assert_eq!(intertwiners(&x01, &x02).len(), 0);
    assert!(!equivalent(&x01, &x11));
    // direct sum doubles the commutant column
    let sum = x01.direct_sum(&x01);
    assert_eq!(intertwiners(&x01, &sum).len(), 2);
    assert_eq!(intertwiners(&sum, &sum).len(), 4);
    assert!(!is_irreducible(&sum));
}

#[test]
fn completeness_kp_and_small_sekine() {
    let g = build_kp();
    let cat = kp_catalog(&g);
    assert_eq!(cat.sum_of_squares(), 8);
    let report = verify_complete(&cat);
    assert!(report.all_passed(), "{report}");

    let g3 = build_sekine(3).unwrap();
    let cat3 = sekine_catalog(&g3);
    // odd n: 2n one-dim + n(n-1)/2 two-dim
    assert_eq!(cat3.items.len(), 6 + 3);
    assert_eq!(cat3.sum_of_squares(), 18);
    let r3 = verify_complete(&cat3);
    assert!(r3.all_passed(), "{r3}");

    let g4 = build_sekine(4).unwrap();
    let cat4 = sekine_catalog(&g4);
    // even n: 4n one-dim + n(n-2)/2 two-dim; 16 + 16 = 32
    assert_eq!(cat4.items.len(), 16 + 4);
    assert_eq!(cat4.sum_of_squares(), 32);
    let r4 = verify_complete(&cat4);
    assert!(r4.all_passed(), "{r4}");
}

#[test]
fn sekine5_catalog_counts() {
    let g = build_sekine(5).unwrap();
    let cat = sekine_catalog(&g);
    // 2*5 one-dim + 5*4/2 = 10 two-dim: 10 + 4*10 = 50
    assert_eq!(cat.items.len(), 20);
    assert_eq!(cat.sum_of_squares(), 50);
}

#[test]
fn dual_fundamental_is_a_unitary_corep() {
    let n = 3;
    let g = build_sekine(n).unwrap();
    let gd = dual(&g).unwrap();
    let ix = SekineIndex { n };
    let xhat = dual_fundamental(&gd, n);
    let r = is_corep(&xhat);
    assert!(r.all(), "{r:?}");
    // chi(Xhat) = sum_i E^(i,i)
    let expected: AlgElement = gd.algebra().element_from_terms(
        (0..n as i64).map(|i| (ix.mat(i, i), CycloNum::one())),
    );
    assert_eq!(xhat.trace(), expected);
    // dual counit on the entries picks the Kronecker delta
    for i in 0..n as usize {
        for j in 0..n as usize {
            let val = gd.counit().apply(xhat.entry(i, j));
            assert_eq!(val.is_one(), i == j);
            if i != j {
                assert!(val.is_zero());
            }
        }
    }
    let cat = dual_catalog(&gd, n);
    assert_eq!(cat.sum_of_squares(), 2 * (n * n) as usize);
    let report = verify_complete(&cat);
    assert!(report.all_passed(), "{report}");
}

#[test]
fn trace_is_trace_like_on_diagonal_grids() {
    let g = build_sekine(5).unwrap();
    let x = sekine_two_dim(&g, 1, 2).unwrap();
    let p = x.power(2);
    let q = x.power(4);
    assert!(p.is_diagonal() && q.is_diagonal());
    assert_eq!(p.matmul(&q).trace(), q.matmul(&p).trace());
}

#[test]
fn resolve_rep_aliases() {
    let g = build_kp();
    let cat = kp_catalog(&g);
    assert!(resolve_rep(&cat, "fundamental").is_ok());
    assert!(resolve_rep(&cat, "X").is_ok());
    assert!(resolve_rep(&cat, "nope").is_err());
    let json = cat.to_json();
    assert_eq!(json.as_array().unwrap().len(), 5);
}

#[test]
fn catalog_characters_conjugate_within_catalog() {
    // chi of the conjugate fundamental equals chi(X)* and stays in the span
    let g = build_kp();
    let x = kp_fundamental(&g, 1, 1).unwrap();
    assert_eq!(x.conjugate().trace(), x.trace().star());
}
