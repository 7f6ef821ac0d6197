//! The Gelfand space of the commutative character algebra
//! C_n = alg{rho_1^+, rho_1^-, chi(X^(0,1))} with weights derived from Haar
//! values of its minimal idempotents, plus the report comparing them against
//! the uniform-weight measure display.
//!
//! Points carry coordinates (a, b, c) with a = omega(rho_1^-),
//! ab = omega(rho_1^+), c = omega(chi(X^(0,1))). The scalar-block points have
//! b = +1, a an n-th root of unity and c = 2cos(2 pi t / n) with t and -t
//! merged; the matrix-block points have b = -1, a = -eta^j and c = 0.


use crate::algebra::AlgElement;
use crate::coreps::{sekine_one_dim, sekine_two_dim, OneDimKind, Sign};
use crate::error::{Error, Result};
use crate::exactnum::{rat_int, CycloNum, Rat};
use crate::qgroup::sekine::SekineIndex;
use crate::qgroup::QuantumGroup;

#[derive(Clone)]
pub struct OmegaPoint {
    /// omega(rho_1^-)
    pub a: CycloNum,
    /// sign coordinate; omega(rho_1^+) = a * b
    pub b: i8,
    /// omega(chi(X^(0,1)))
    pub c: CycloNum,
    /// Haar value of the minimal idempotent carrying this character.
    pub weight: Rat,
    pub idempotent: AlgElement,
}

pub struct OmegaSpace {
    pub n: u32,
    pub points: Vec<OmegaPoint>,
    pub rho_plus: AlgElement,
    pub rho_minus: AlgElement,
    pub chi01: AlgElement,
}

impl OmegaSpace {
    pub fn total_mass(&self) -> Rat {
        self.points.iter().map(|p| p.weight.clone()).sum()
    }

    /// Point value of the monomial rho_1^+^{d1} rho_1^-^{d2} chi^{d3}.
    pub fn point_value(&self, p: &OmegaPoint, d1: u64, d2: u64, d3: u64) -> CycloNum {
        let ab = if p.b == 1 { p.a.clone() } else { -&p.a };
        &(&ab.pow(d1) * &p.a.pow(d2)) * &p.c.pow(d3)
    }

    /// Exact Haar value of the same monomial, computed in the algebra.
    pub fn haar_value(&self, g: &QuantumGroup, d1: u64, d2: u64, d3: u64) -> CycloNum {
        let m = &(&self.rho_plus.pow(d1) * &self.rho_minus.pow(d2)) * &self.chi01.pow(d3);
        g.haar_of(&m)
    }

    /// Sum over points of weight * point value.
    pub fn integral(&self, d1: u64, d2: u64, d3: u64) -> CycloNum {
        let mut acc = CycloNum::zero();
        for p in &self.points {
            acc = &acc + &self.point_value(p, d1, d2, d3).scale(&p.weight);
        }
        acc
    }

    /// Checks h(monomial) = sum of weighted point values for every monomial
    /// in the three generators of total degree <= max_deg; returns the first
    /// failing exponent triple. Generator powers are computed once.
    pub fn verify_monomials(&self, g: &QuantumGroup, max_deg: u64) -> Option<(u64, u64, u64)> {
        let d = max_deg as usize;
        let powers = |x: &AlgElement| -> Vec<AlgElement> {
            let mut out = vec![g.algebra().unit_element()];
            for i in 1..=d {
                out.push(&out[i - 1] * x);
            }
            out
        };
        let p1 = powers(&self.rho_plus);
        let p2 = powers(&self.rho_minus);
        let p3 = powers(&self.chi01);
        for d1 in 0..=d {
            for d2 in 0..=(d - d1) {
                let partial = &p1[d1] * &p2[d2];
                for d3 in 0..=(d - d1 - d2) {
                    if d1 + d2 + d3 == 0 {
                        continue;
                    }
                    let m = &partial * &p3[d3];
                    if g.haar_of(&m) != self.integral(d1 as u64, d2 as u64, d3 as u64) {
                        return Some((d1 as u64, d2 as u64, d3 as u64));
                    }
                }
            }
        }
        None
    }
}

/// Builds the Gelfand space of C_n from minimal idempotents and certifies
/// each point exactly: the idempotents are self-adjoint, orthogonal, sum to
/// the unit, and each is a simultaneous eigenvector of the three generators
/// with the reported coordinates.
pub fn omega_space(g: &QuantumGroup) -> Result<OmegaSpace> {
    let n = ((g.dim() / 2) as f64).sqrt().round() as u32;
    if 2 * (n * n) as usize != g.dim() {
        return Err(Error::InvalidParameter(
            "the Gelfand decomposition applies to the Sekine groups".into(),
        ));
    }
    if n < 3 {
        return Err(Error::InvalidParameter(
            "the character algebra needs n >= 3 (no two-dimensional family below)".into(),
        ));
    }
    let ix = SekineIndex { n };
    let nn = n as i64;
    let alg = g.algebra();
    let rho_plus = sekine_one_dim(g, OneDimKind::Rho, 1, Sign::Plus)?;
    let rho_minus = sekine_one_dim(g, OneDimKind::Rho, 1, Sign::Minus)?;
    let chi01 = sekine_two_dim(g, 0, 1)?.trace();

    let mut points = Vec::new();

    // scalar-block points: s in Z_n and t-classes {t, n-t}
    for s in 0..nn {
        let mut t = 0i64;
        while t <= nn / 2 {
            let class: Vec<i64> = if t == 0 || 2 * t == nn {
                vec![t]
            } else {
                vec![t, nn - t]
            };
            let idem = alg.element_from_terms(
                class.iter().map(|&tt| (ix.e(s, tt), CycloNum::one())),
            );
            let weight = Rat::new((class.len() as i64).into(), (2 * nn * nn).into());
            points.push(OmegaPoint {
                a: ix.eta(s),
                b: 1,
                c: &ix.eta(t) + &ix.eta(-t), // 2 cos(2 pi t / n)
                weight,
                idempotent: idem,
            });
            t += 1;
        }
    }

    // matrix-block points: spectral projectors of the cyclic shift,
    // pi_j = (1/n) sum_m eta^{-jm} sum_r E(r, r+m)
    for j in 0..nn {
        let mut terms = Vec::new();
        for m in 0..nn {
            let c = ix.eta(-j * m).scale(&Rat::new(1.into(), nn.into()));
            for r in 0..nn {
                terms.push((ix.mat(r, r + m), c.clone()));
            }
        }
        let idem = alg.element_from_terms(terms);
        points.push(OmegaPoint {
            a: -&ix.eta(j),
            b: -1,
            c: CycloNum::zero(),
            weight: Rat::new(1.into(), (2 * nn).into()),
            idempotent: idem,
        });
    }

    let space = OmegaSpace {
        n,
        points,
        rho_plus,
        rho_minus,
        chi01,
    };
    certify(g, &space)?;
    Ok(space)
}

fn certify(g: &QuantumGroup, space: &OmegaSpace) -> Result<()> {
    let alg = g.algebra();
    let mut sum = alg.zero_element();
    for (i, p) in space.points.iter().enumerate() {
        let q = &p.idempotent;
        if &(q * q) != q || &q.star() != q {
            return Err(Error::VerificationFailed(format!(
                "point {i}: not a self-adjoint idempotent"
            )));
        }
        let ab = if p.b == 1 { p.a.clone() } else { -&p.a };
        if &(&space.rho_minus * q) != &q.scale(&p.a)
            || &(&space.rho_plus * q) != &q.scale(&ab)
            || &(&space.chi01 * q) != &q.scale(&p.c)
        {
            return Err(Error::VerificationFailed(format!(
                "point {i}: generator eigenvalues do not match the coordinates"
            )));
        }
        if g.haar_of(q) != CycloNum::from_rat(p.weight.clone()) {
            return Err(Error::VerificationFailed(format!(
                "point {i}: weight differs from the Haar value of the idempotent"
            )));
        }
        sum = &sum + q;
    }
    if sum != alg.unit_element() {
        return Err(Error::VerificationFailed(
            "idempotents do not resolve the identity".into(),
        ));
    }
    for (i, p) in space.points.iter().enumerate() {
        for (j, q) in space.points.iter().enumerate() {
            if i != j && !(&p.idempotent * &q.idempotent).is_zero() {
                return Err(Error::VerificationFailed(format!(
                    "idempotents {i} and {j} are not orthogonal"
                )));
            }
        }
    }
    Ok(())
}

/// Comparison against the uniform-weight measure display: the display puts
/// mass 1_{4Z}(n)/(2n(p+1)) + (1-1_{4Z}(n))/(2n(p+2)) on every b = +1 point
/// of the product space (with a stand-alone c = 0 column when the cosine
/// list misses it), p = floor(n/2). The second moment of chi(X^(0,1)) then
/// comes out wrong: at n = 3 the uniform sum is 5/6 against the exact Haar
/// value 1.
pub struct UniformWeightReport {
    pub n: u32,
    pub uniform_weight: Rat,
    pub uniform_point_count: usize,
    pub exact_second_moment: Rat,
    pub uniform_second_moment_sum: Rat,
    pub agrees: bool,
}

pub fn uniform_weight_report(g: &QuantumGroup, space: &OmegaSpace) -> UniformWeightReport {
    let n = space.n as i64;
    let p = n / 2;
    let uniform_weight = if n % 4 == 0 {
        Rat::new(1.into(), (2 * n * (p + 1)).into())
    } else {
        Rat::new(1.into(), (2 * n * (p + 2)).into())
    };

    // the display's b = +1 section: {eta^s} x {2cos(2 pi t/n), t in Z_n} u {0}
    let ix = SekineIndex { n: space.n };
    let mut c_values: Vec<CycloNum> = Vec::new();
    for t in 0..=n / 2 {
        c_values.push(&ix.eta(t) + &ix.eta(-t));
    }
    if !c_values.iter().any(|c| c.is_zero()) {
        c_values.push(CycloNum::zero());
    }
    let uniform_point_count = (n as usize) * c_values.len();

    // E[c^2] under the uniform display (b = -1 points contribute zero);
    // single squared cosines are irrational, their sum over the class list
    // is a full Galois orbit sum and lands in Q.
    let mut acc = CycloNum::zero();
    for c in &c_values {
        acc = &acc + &(c * c);
    }
    let acc = acc
        .as_rat()
        .expect("the summed squared cosine values form a rational Galois sum");
    let uniform_second_moment_sum = &(&acc * &uniform_weight) * &rat_int(n);

    let exact = space
        .haar_value(g, 0, 0, 2)
        .as_rat()
        .expect("the second character moment is rational");

    UniformWeightReport {
        n: space.n,
        uniform_weight,
        uniform_point_count,
        exact_second_moment: exact.clone(),
        uniform_second_moment_sum: uniform_second_moment_sum.clone(),
        agrees: exact == uniform_second_moment_sum,
    }
}
