//! Irreducible corepresentations of the Sekine groups and their duals.
//!
//! For odd n: 2n one-dimensional representations rho_l^+- and n(n-1)/2
//! two-dimensional ones X^(u,v), u in Z_n, 1 <= v <= (n-1)/2. For even n the
//! sigma_l^+- family joins (4n one-dimensional) and v runs to n/2 - 1. The
//! dual has the n^2 dual-basis group-likes e^(i,j) and one n-dimensional
//! fundamental representation with entries E^(i,j).

use crate::algebra::AlgElement;
use crate::error::{Error, Result};
use crate::exactnum::CycloNum;
use crate::qgroup::sekine::SekineIndex;
use crate::qgroup::QuantumGroup;

use super::{Corep, IrrepCatalog};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn scalar(self) -> CycloNum {
        match self {
            Sign::Plus => CycloNum::one(),
            Sign::Minus => -CycloNum::one(),
        }
    }

    pub fn suffix(self) -> &'static str {
        match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OneDimKind {
    Rho,
    Sigma,
}

fn sekine_n(g: &QuantumGroup) -> u32 {
    let dim = g.dim();
    let n = ((dim / 2) as f64).sqrt().round() as u32;
    assert_eq!(2 * (n * n) as usize, dim, "not a Sekine-shaped group");
    n
}

/// Largest admissible v-index for the two-dimensional family.
pub fn two_dim_v_max(n: u32) -> u32 {
    if n % 2 == 1 {
        (n - 1) / 2
    } else {
        n / 2 - 1
    }
}

/// rho_l^+- = sum_{i,j} eta^{il} e_(i,j) +- sum_i E(i, i+l); for even n also
/// sigma_l^+- = sum_{i,j} (-1)^j eta^{il} e_(i,j) +- sum_i (-1)^i E(i, i+l).
pub fn sekine_one_dim(g: &QuantumGroup, kind: OneDimKind, l: u32, sign: Sign) -> Result<AlgElement> {
    let n = sekine_n(g);
    if l >= n {
        return Err(Error::InvalidParameter(format!(
            "index l must lie in 0..{n}, got {l}"
        )));
    }
    if kind == OneDimKind::Sigma && n % 2 == 1 {
        return Err(Error::InvalidParameter(
            "the sigma family exists only for even n".into(),
        ));
    }
    let ix = SekineIndex { n };
    let s = sign.scalar();
    let nn = n as i64;
    let ll = l as i64;
    let mut terms: Vec<(u32, CycloNum)> = Vec::new();
    for i in 0..nn {
        for j in 0..nn {
            let mut c = ix.eta(i * ll);
            if kind == OneDimKind::Sigma && j % 2 == 1 {
                c = -c;
            }
            terms.push((ix.e(i, j), c));
        }
    }
    for i in 0..nn {
        let mut c = s.clone();
        if kind == OneDimKind::Sigma && i % 2 == 1 {
            c = -c;
        }
        terms.push((ix.mat(i, i + ll), c));
    }
    Ok(g.algebra().element_from_terms(terms))
}

/// The two-dimensional irreducible X^(u,v):
/// X11 = sum eta^{iu+jv} e_(i,j), X12 = sum_i eta^{-iv} E(i,i+u),
/// X21 = sum_i eta^{iv} E(i,i+u), X22 = sum eta^{iu-jv} e_(i,j).
pub fn sekine_two_dim(g: &QuantumGroup, u: u32, v: u32) -> Result<Corep> {
    let n = sekine_n(g);
    let vmax = two_dim_v_max(n);
    if u >= n || v == 0 || v > vmax {
        return Err(Error::InvalidParameter(format!(
            "two-dimensional family needs u in 0..{n} and v in 1..={vmax}, got (u,v) = ({u},{v})"
        )));
    }
    let ix = SekineIndex { n };
    let nn = n as i64;
    let (uu, vv) = (u as i64, v as i64);
    let mut x11 = Vec::new();
    let mut x22 = Vec::new();
    for i in 0..nn {
        for j in 0..nn {
            x11.push((ix.e(i, j), ix.eta(i * uu + j * vv)));
            x22.push((ix.e(i, j), ix.eta(i * uu - j * vv)));
        }
    }
    let mut x12 = Vec::new();
    let mut x21 = Vec::new();
    for i in 0..nn {
        x12.push((ix.mat(i, i + uu), ix.eta(-i * vv)));
        x21.push((ix.mat(i, i + uu), ix.eta(i * vv)));
    }
    let alg = g.algebra();
    Ok(Corep::new(
        g.clone(),
        2,
        vec![
            alg.element_from_terms(x11),
            alg.element_from_terms(x12),
            alg.element_from_terms(x21),
            alg.element_from_terms(x22),
        ],
    ))
}

/// Complete catalog of KP_n per the parity of n.
pub fn sekine_catalog(g: &QuantumGroup) -> IrrepCatalog {
    let n = sekine_n(g);
    let mut items: Vec<(String, Corep)> = Vec::new();
    for l in 0..n {
        for sign in [Sign::Plus, Sign::Minus] {
            let rho = sekine_one_dim(g, OneDimKind::Rho, l, sign).expect("in range");
            items.push((format!("rho{l}{}", sign.suffix()), Corep::one_dim(g.clone(), rho)));
        }
    }
    if n % 2 == 0 {
        for l in 0..n {
            for sign in [Sign::Plus, Sign::Minus] {
                let sigma = sekine_one_dim(g, OneDimKind::Sigma, l, sign).expect("in range");
                items.push((
                    format!("sigma{l}{}", sign.suffix()),
                    Corep::one_dim(g.clone(), sigma),
                ));
            }
        }
    }
    for u in 0..n {
        for v in 1..=two_dim_v_max(n) {
            let x = sekine_two_dim(g, u, v).expect("in range");
            items.push((format!("X({u},{v})"), x));
        }
    }
    IrrepCatalog {
        group: g.clone(),
        items,
    }
}

/// The n-dimensional fundamental representation of the dual, with entries
/// the dual basis functionals E^(i,j).
pub fn dual_fundamental(gd: &QuantumGroup, n: u32) -> Corep {
    assert_eq!(gd.dim(), 2 * (n * n) as usize, "dual of a Sekine group");
    let ix = SekineIndex { n };
    let mut entries = Vec::with_capacity((n * n) as usize);
    for i in 0..n as i64 {
        for j in 0..n as i64 {
            entries.push(gd.algebra().basis_element(ix.mat(i, j)));
        }
    }
    Corep::new(gd.clone(), n as usize, entries)
}

/// Complete catalog of the dual: the n^2 dual-basis group-likes e^(i,j) and
/// the fundamental representation.
pub fn dual_catalog(gd: &QuantumGroup, n: u32) -> IrrepCatalog {
    let ix = SekineIndex { n };
    let mut items: Vec<(String, Corep)> = Vec::new();
    for i in 0..n as i64 {
        for j in 0..n as i64 {
            items.push((
                format!("e^({i},{j})"),
                Corep::one_dim(gd.clone(), gd.algebra().basis_element(ix.e(i, j))),
            ));
        }
    }
    items.push(("Xhat".into(), dual_fundamental(gd, n)));
    IrrepCatalog {
        group: gd.clone(),
        items,
    }
}
