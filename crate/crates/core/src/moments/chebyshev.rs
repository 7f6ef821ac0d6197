//! Character-space decompositions: the Chebyshev-style span identity for
//! chi(X^(u,v)) in terms of chi(X^(0,1)), and the case analysis expressing
//! chi((X^(u,v))^k) inside the span of catalog characters.

use crate::algebra::AlgElement;
use crate::coreps::{sekine_one_dim, sekine_two_dim, two_dim_v_max, OneDimKind, Sign};
use crate::error::{Error, Result};
use crate::exactnum::{rat, CycloNum};
use crate::qgroup::sekine::SekineIndex;
use crate::qgroup::QuantumGroup;

/// Coefficients of the monic integer polynomial 2 T_v(x/2) (little-endian),
/// via the recurrence D_0 = 2, D_1 = x, D_{v+1} = x D_v - D_{v-1}.
pub fn monic_chebyshev(v: usize) -> Vec<i64> {
    let mut d0: Vec<i64> = vec![2];
    let mut d1: Vec<i64> = vec![0, 1];
    if v == 0 {
        return d0;
    }
    for _ in 1..v {
        let mut next = vec![0i64; d1.len() + 1];
        for (j, c) in d1.iter().enumerate() {
            next[j + 1] += c;
        }
        for (j, c) in d0.iter().enumerate() {
            next[j] -= c;
        }
        d0 = std::mem::replace(&mut d1, next);
    }
    d1
}

/// The span identity for chi(X^(u,v)): with d = monic_chebyshev(v),
/// chi(X^(u,v)) = rho_u^+ ( sum_{j>=1} d_j chi(X^(0,1))^j + (d_0/2)(rho_0^+ + rho_0^-) ).
/// For odd v the constant term vanishes; for even v it is (-1)^{v/2}.
pub struct ChebyshevDecomposition {
    pub u: u32,
    pub v: u32,
    pub poly: Vec<i64>,
    /// Coefficient of (rho_0^+ + rho_0^-), i.e. d_0 / 2.
    pub constant: i64,
    pub lhs: AlgElement,
    pub rhs: AlgElement,
    pub verified: bool,
}

pub fn chebyshev_decompose(g: &QuantumGroup, u: u32, v: u32) -> Result<ChebyshevDecomposition> {
    let x_uv = sekine_two_dim(g, u, v)?;
    let x01 = sekine_two_dim(g, 0, 1)?;
    let chi01 = x01.trace();
    let rho_u = sekine_one_dim(g, OneDimKind::Rho, u, Sign::Plus)?;
    let rho0p = sekine_one_dim(g, OneDimKind::Rho, 0, Sign::Plus)?;
    let rho0m = sekine_one_dim(g, OneDimKind::Rho, 0, Sign::Minus)?;

    let poly = monic_chebyshev(v as usize);
    assert!(poly[0] % 2 == 0, "constant coefficient of 2T_v(x/2) is even");
    let constant = poly[0] / 2;
    let mut combo = (&rho0p + &rho0m).scale(&CycloNum::from_int(constant));
    for (j, c) in poly.iter().enumerate().skip(1) {
        if *c != 0 {
            combo = &combo + &chi01.pow(j as u64).scale(&CycloNum::from_int(*c));
        }
    }
    let rhs = &rho_u * &combo;
    let lhs = x_uv.trace();
    let verified = lhs == rhs;
    Ok(ChebyshevDecomposition {
        u,
        v,
        poly,
        constant,
        lhs,
        rhs,
        verified,
    })
}

/// One term of a character-span combination: a catalog label with an exact
/// coefficient.
pub type SpanCombination = Vec<(String, CycloNum)>;

pub struct PowerDecomposition {
    pub u: u32,
    pub v: u32,
    pub k: u64,
    pub case: &'static str,
    pub combination: SpanCombination,
    pub lhs: AlgElement,
    pub rhs: AlgElement,
    pub verified: bool,
}

fn rho(g: &QuantumGroup, l: i64, sign: Sign) -> AlgElement {
    let n = ((g.dim() / 2) as f64).sqrt().round() as u32;
    sekine_one_dim(g, OneDimKind::Rho, (l.rem_euclid(n as i64)) as u32, sign).expect("in range")
}

fn sigma(g: &QuantumGroup, l: i64, sign: Sign) -> AlgElement {
    let n = ((g.dim() / 2) as f64).sqrt().round() as u32;
    sekine_one_dim(g, OneDimKind::Sigma, (l.rem_euclid(n as i64)) as u32, sign).expect("in range")
}

/// Expresses chi((X^(u,v))^k) in the span of catalog characters:
/// - n not dividing kv, reduced index w <= floor((n-1)/2):
///     chi(X^(ku, w)) + [k even] cos(k u v pi/n) (rho_{ku}^+ - rho_{ku}^-);
/// - n even with kv = n/2 mod n:
///     sigma_{ku}^+ + sigma_{ku}^- + [k even] cos(k u v pi/n) (rho_{ku}^+ - rho_{ku}^-);
/// - n | kv: rho_{ku}^+ + rho_{ku}^- for odd k, 2 rho_{ku}^s with
///   s = sign((-1)^{au}), kv = an, for even k.
/// The rho-correction coefficient is the matrix-block coefficient of the
/// even character (see [`super::closed_forms::sekine_char_closed_form`]);
/// every identity is verified by exact expansion against the matrix-power
/// trace.
pub fn char_power_decompose(g: &QuantumGroup, u: u32, v: u32, k: u64) -> Result<PowerDecomposition> {
    let n = ((g.dim() / 2) as f64).sqrt().round() as u32;
    if v == 0 || v > two_dim_v_max(n) || u >= n {
        return Err(Error::InvalidParameter(format!(
            "(u, v) = ({u}, {v}) out of range for n = {n}"
        )));
    }
    let ix = SekineIndex { n };
    let nn = n as i64;
    let kv = (k as i64 * v as i64).rem_euclid(nn);
    let ku = (k as i64 * u as i64).rem_euclid(nn);
    let lhs = sekine_two_dim(g, u, v)?.power(k).trace();
    // cos(k u v pi / n), the even-power matrix-block half-coefficient
    let rho_correction = ix
        .two_cos_half(k as i64 * (u as i64) * (v as i64))
        .scale(&rat(1, 2));

    let (case, combination, rhs): (&'static str, SpanCombination, AlgElement) = if kv == 0 {
        let a = (k as i64 * v as i64) / nn;
        if k % 2 == 1 {
            let rhs = &rho(g, ku, Sign::Plus) + &rho(g, ku, Sign::Minus);
            (
                "rho-sum (odd power, n | kv)",
                vec![
                    (format!("rho{ku}+"), CycloNum::one()),
                    (format!("rho{ku}-"), CycloNum::one()),
                ],
                rhs,
            )
        } else {
            let s = if (a * u as i64) % 2 == 0 { Sign::Plus } else { Sign::Minus };
            let rhs = rho(g, ku, s).scale(&CycloNum::from_int(2));
            (
                "doubled rho (even power, n | kv)",
                vec![(format!("rho{ku}{}", s.suffix()), CycloNum::from_int(2))],
                rhs,
            )
        }
    } else {
        let w = kv.min(nn - kv);
        let (head, mut combo, mut rhs): (&'static str, SpanCombination, AlgElement) =
            if n % 2 == 0 && w == nn / 2 {
                (
                    "sigma-sum (kv = n/2 mod n)",
                    vec![
                        (format!("sigma{ku}+"), CycloNum::one()),
                        (format!("sigma{ku}-"), CycloNum::one()),
                    ],
                    &sigma(g, ku, Sign::Plus) + &sigma(g, ku, Sign::Minus),
                )
            } else {
                (
                    "two-dimensional plus rho correction",
                    vec![(format!("X({ku},{w})"), CycloNum::one())],
                    sekine_two_dim(g, ku as u32, w as u32)?.trace(),
                )
            };
        if k % 2 == 0 && !rho_correction.is_zero() {
            rhs = &rhs
                + &(&rho(g, ku, Sign::Plus) - &rho(g, ku, Sign::Minus)).scale(&rho_correction);
            combo.push((format!("rho{ku}+"), rho_correction.clone()));
            combo.push((format!("rho{ku}-"), -&rho_correction));
        }
        (head, combo, rhs)
    };

    let verified = lhs == rhs;
    Ok(PowerDecomposition {
        u,
        v,
        k,
        case,
        combination,
        lhs,
        rhs,
        verified,
    })
}
