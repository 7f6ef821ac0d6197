//! The Sekine family KP_n: the 2n^2-dimensional algebra
//! (+)_{i,j in Z_n} C e_(i,j)  (+)  M_n(C)
//! with the convolution-style coproduct driven by eta = e^{2 i pi / n}.
//!
//! Basis layout: e_(i,j) at index i*n + j for i, j in Z_n, then the matrix
//! units E(r,c) at index n^2 + r*n + c with r, c in Z_n (all E-indices are
//! taken mod n).

use crate::algebra::{Algebra, SparseVec};
use crate::error::{Error, Result};
use crate::exactnum::{CycloNum, Rat};

use super::QuantumGroup;

/// Index helpers for the Sekine basis layout.
#[derive(Clone, Copy)]
pub struct SekineIndex {
    pub n: u32,
}

impl SekineIndex {
    pub fn e(&self, i: i64, j: i64) -> u32 {
        let n = self.n as i64;
        (i.rem_euclid(n) * n + j.rem_euclid(n)) as u32
    }

    pub fn mat(&self, r: i64, c: i64) -> u32 {
        let n = self.n as i64;
        (n * n + r.rem_euclid(n) * n + c.rem_euclid(n)) as u32
    }

    /// eta^k as an exact element of Q(zeta_{2n}).
    pub fn eta(&self, k: i64) -> CycloNum {
        CycloNum::root_of_unity(2 * self.n, 2 * k)
    }

    /// 2 cos(k pi / n) = zeta_{2n}^k + zeta_{2n}^{-k}, exact.
    pub fn two_cos_half(&self, k: i64) -> CycloNum {
        CycloNum::two_cos(2 * self.n, k)
    }
}

pub fn sekine_algebra(n: u32) -> Algebra {
    let mut blocks = vec![1usize; (n * n) as usize];
    blocks.push(n as usize);
    let mut labels = Vec::with_capacity((2 * n * n) as usize);
    for i in 0..n {
        for j in 0..n {
            labels.push(format!("e({i},{j})"));
        }
    }
    for r in 0..n {
        for c in 0..n {
            labels.push(format!("E({r},{c})"));
        }
    }
    Algebra::multimatrix(&blocks, 2 * n, Some(labels))
}

pub fn build_sekine(n: u32) -> Result<QuantumGroup> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "the Sekine family starts at n = 2, got {n}"
        )));
    }
    let alg = sekine_algebra(n);
    let ix = SekineIndex { n };
    let dim = alg.dim() as u32;
    let nn = n as i64;
    let pair = |x: u32, y: u32| x * dim + y;
    let inv_n = CycloNum::from_rat(Rat::new(1.into(), nn.into()));

    let mut delta: Vec<SparseVec> = Vec::with_capacity(dim as usize);
    // Delta(e_(i,j)) = sum_{k,l} e_(k,l) (x) e_(i-k,j-l)
    //                + (1/n) sum_{k,l} eta^{i(k-l)} E(k,l) (x) E(k+j,l+j)
    for i in 0..nn {
        for j in 0..nn {
            let mut col = SparseVec::new();
            for k in 0..nn {
                for l in 0..nn {
                    col.add_term(pair(ix.e(k, l), ix.e(i - k, j - l)), CycloNum::one());
                    col.add_term(
                        pair(ix.mat(k, l), ix.mat(k + j, l + j)),
                        &ix.eta(i * (k - l)) * &inv_n,
                    );
                }
            }
            delta.push(col);
        }
    }
    // Delta(E_(i,j)) = sum_{k,l} eta^{k(i-j)} e_(-k,-l) (x) E(i-l,j-l)
    //                + sum_{k,l} eta^{k(j-i)} E(i-l,j-l) (x) e_(k,l)
    for i in 0..nn {
        for j in 0..nn {
            let mut col = SparseVec::new();
            for k in 0..nn {
                for l in 0..nn {
                    col.add_term(
                        pair(ix.e(-k, -l), ix.mat(i - l, j - l)),
                        ix.eta(k * (i - j)),
                    );
                    col.add_term(
                        pair(ix.mat(i - l, j - l), ix.e(k, l)),
                        ix.eta(k * (j - i)),
                    );
                }
            }
            delta.push(col);
        }
    }

    // counit picks the coefficient of e_(0,0)
    let mut counit = vec![CycloNum::zero(); dim as usize];
    counit[ix.e(0, 0) as usize] = CycloNum::one();

    // antipode: S(e_(i,j)) = e_(-i,-j), S(E(i,j)) = E(j,i)
    let mut antipode: Vec<SparseVec> = Vec::with_capacity(dim as usize);
    for i in 0..nn {
        for j in 0..nn {
            antipode.push(SparseVec::singleton(ix.e(-i, -j), CycloNum::one()));
        }
    }
    for i in 0..nn {
        for j in 0..nn {
            antipode.push(SparseVec::singleton(ix.mat(j, i), CycloNum::one()));
        }
    }

    // Haar: 1/(2n^2) on each e_(i,j), 1/(2n) on each diagonal E(i,i)
    let mut haar = vec![CycloNum::zero(); dim as usize];
    let w_e = CycloNum::from_rat(Rat::new(1.into(), (2 * nn * nn).into()));
    let w_m = CycloNum::from_rat(Rat::new(1.into(), (2 * nn).into()));
    for i in 0..nn {
        for j in 0..nn {
            haar[ix.e(i, j) as usize] = w_e.clone();
        }
        haar[ix.mat(i, i) as usize] = w_m.clone();
    }

    Ok(QuantumGroup::new(
        format!("sekine:{n}"),
        alg,
        delta,
        counit,
        antipode,
        haar,
    ))
}
