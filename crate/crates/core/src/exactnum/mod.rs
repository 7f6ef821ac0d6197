//! Exact scalar arithmetic: arbitrary-precision rationals and elements of the
//! cyclotomic fields Q(zeta_m), the scalar tower for every structure constant
//! in the workbench.
//!
//! A [`CycloNum`] is stored as its coordinate vector in the power basis
//! 1, zeta, ..., zeta^{phi(m)-1} of Q[x]/Phi_m(x). Reduction modulo the m-th
//! cyclotomic polynomial makes the representation canonical, so equality is
//! coefficient-wise (after lifting to a common conductor). Floats appear only
//! in [`CycloNum::embed`].

pub mod field;

use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::config;
use crate::error::{Error, Result};
use field::{euler_phi, field, poly_mul, poly_xgcd};

/// Exact rational scalar. `num_rational::BigRational` already maintains the
/// canonical form (gcd-reduced, positive denominator).
pub type Rat = num_rational::BigRational;

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Canonical "p/q" rendering with the sign on the numerator.
pub fn format_rat(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Accepts "p/q" or a bare integer "p".
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let parse_int = |t: &str| -> Result<BigInt> {
        t.trim()
            .parse::<BigInt>()
            .map_err(|_| Error::InvalidParameter(format!("bad rational: {s:?}")))
    };
    match s.split_once('/') {
        Some((p, q)) => {
            let den = parse_int(q)?;
            if den.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(Rat::new(parse_int(p)?, den))
        }
        None => Ok(Rat::from_integer(parse_int(s)?)),
    }
}

/// Element of Q(zeta_m) in canonical power-basis coordinates.
#[derive(Clone)]
pub struct CycloNum {
    m: u32,
    coeffs: Vec<Rat>,
}

impl CycloNum {
    pub fn zero() -> Self {
        CycloNum {
            m: 1,
            coeffs: vec![Rat::zero()],
        }
    }

    pub fn one() -> Self {
        CycloNum {
            m: 1,
            coeffs: vec![Rat::one()],
        }
    }

    pub fn from_rat(r: Rat) -> Self {
        CycloNum {
            m: 1,
            coeffs: vec![r],
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(rat_int(n))
    }

    /// zeta_m^k, reduced to canonical form.
    pub fn root_of_unity(m: u32, k: i64) -> Self {
        assert!(m >= 1);
        let f = field(m);
        let kk = k.rem_euclid(m as i64) as usize;
        CycloNum {
            m,
            coeffs: f.power_row(kk),
        }
    }

    /// The imaginary unit as zeta_4.
    pub fn i() -> Self {
        Self::root_of_unity(4, 1)
    }

    /// 2 cos(2 pi k / m) = zeta_m^k + zeta_m^{-k}, exact.
    pub fn two_cos(m: u32, k: i64) -> Self {
        &Self::root_of_unity(m, k) + &Self::root_of_unity(m, -k)
    }

    pub fn conductor(&self) -> u32 {
        self.m
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// Some(r) iff the value lies in Q (canonical form is a constant).
    pub fn as_rat(&self) -> Option<Rat> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn is_real(&self) -> bool {
        self.conj() == *self
    }

    /// Lifts into Q(zeta_target); target must be a multiple of the conductor.
    pub fn lift(&self, target: u32) -> Result<CycloNum> {
        if target == self.m {
            return Ok(self.clone());
        }
        if target % self.m != 0 {
            return Err(Error::InvalidParameter(format!(
                "cannot lift conductor {} into {}",
                self.m, target
            )));
        }
        let bound = config::max_conductor();
        if target as u64 > bound {
            return Err(Error::ConductorOverflow {
                requested: target as u64,
                bound,
            });
        }
        let step = (target / self.m) as usize;
        let f = field(target);
        let mut acc = vec![Rat::zero(); f.phi];
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                f.add_power(&mut acc, k * step, c);
            }
        }
        Ok(CycloNum {
            m: target,
            coeffs: acc,
        })
    }

    fn common(&self, other: &CycloNum) -> Result<(CycloNum, CycloNum)> {
        if self.m == other.m {
            return Ok((self.clone(), other.clone()));
        }
        let l = num_integer::lcm(self.m as u64, other.m as u64);
        let bound = config::max_conductor();
        if l > bound || l > u32::MAX as u64 {
            return Err(Error::ConductorOverflow {
                requested: l,
                bound,
            });
        }
        Ok((self.lift(l as u32)?, other.lift(l as u32)?))
    }

    pub fn checked_add(&self, other: &CycloNum) -> Result<CycloNum> {
        let (mut a, b) = self.common(other)?;
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs.iter()) {
            *x += y;
        }
        Ok(a)
    }

    pub fn checked_sub(&self, other: &CycloNum) -> Result<CycloNum> {
        let (mut a, b) = self.common(other)?;
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs.iter()) {
            *x -= y;
        }
        Ok(a)
    }

    pub fn checked_mul(&self, other: &CycloNum) -> Result<CycloNum> {
        // rational factors scale coefficient-wise, no reduction needed
        if let Some(r) = self.as_rat() {
            return Ok(if r.is_zero() {
                CycloNum::zero()
            } else {
                other.scale(&r)
            });
        }
        if let Some(r) = other.as_rat() {
            return Ok(if r.is_zero() {
                CycloNum::zero()
            } else {
                self.scale(&r)
            });
        }
        let (a, b) = self.common(other)?;
        let f = field(a.m);
        let at: Vec<(usize, &Rat)> = a
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        let bt: Vec<(usize, &Rat)> = b
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        // sparse path: accumulate term products through the reduction rows
        if at.len() * bt.len() <= 4 * f.phi + 8 {
            let mut acc = vec![Rat::zero(); f.phi];
            for (i, ci) in &at {
                for (j, cj) in &bt {
                    f.add_power(&mut acc, i + j, &(*ci * *cj));
                }
            }
            return Ok(CycloNum { m: a.m, coeffs: acc });
        }
        Ok(CycloNum {
            m: a.m,
            coeffs: f.reduce(&poly_mul(&a.coeffs, &b.coeffs)),
        })
    }

    pub fn checked_div(&self, other: &CycloNum) -> Result<CycloNum> {
        self.checked_mul(&other.checked_inv()?)
    }

    /// Multiplicative inverse via the extended Euclidean algorithm in Q[x]
    /// against Phi_m.
    pub fn checked_inv(&self) -> Result<CycloNum> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // Fast path: rational values invert coefficient-free.
        if let Some(r) = self.as_rat() {
            return Ok(CycloNum {
                m: self.m,
                coeffs: {
                    let mut c = vec![Rat::zero(); self.coeffs.len()];
                    c[0] = Rat::one() / r;
                    c
                },
            });
        }
        let f = field(self.m);
        let (g, s, _) = poly_xgcd(&self.coeffs, &f.modulus);
        debug_assert!(g.len() == 1 && g[0].is_one(), "Phi_m is irreducible over Q");
        Ok(CycloNum {
            m: self.m,
            coeffs: f.reduce(&s),
        })
    }

    /// Complex conjugation, the image of zeta under zeta -> zeta^{m-1}.
    pub fn conj(&self) -> CycloNum {
        if self.m <= 2 {
            return self.clone();
        }
        let f = field(self.m);
        let mut acc = vec![Rat::zero(); f.phi];
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let e = ((self.m as usize) - k) % self.m as usize;
                f.add_power(&mut acc, e, c);
            }
        }
        CycloNum {
            m: self.m,
            coeffs: acc,
        }
    }

    pub fn scale(&self, r: &Rat) -> CycloNum {
        CycloNum {
            m: self.m,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    pub fn pow(&self, mut e: u64) -> CycloNum {
        let mut base = self.clone();
        let mut acc = CycloNum::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Numerical embedding zeta_m -> e^{2 pi i / m}.
    pub fn embed(&self) -> Complex64 {
        let mut z = Complex64::new(0.0, 0.0);
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let theta = 2.0 * std::f64::consts::PI * (k as f64) / (self.m as f64);
            let coef = c.to_f64().unwrap_or(f64::NAN);
            z += Complex64::new(theta.cos(), theta.sin()) * coef;
        }
        z
    }

    /// Sum of an iterator of values; zero for an empty iterator.
    pub fn sum<'a, I: IntoIterator<Item = &'a CycloNum>>(iter: I) -> CycloNum {
        let mut acc = CycloNum::zero();
        for x in iter {
            acc = &acc + x;
        }
        acc
    }
}

impl PartialEq for CycloNum {
    fn eq(&self, other: &Self) -> bool {
        if self.m == other.m {
            return self.coeffs == other.coeffs;
        }
        match self.common(other) {
            Ok((a, b)) => a.coeffs == b.coeffs,
            Err(_) => false,
        }
    }
}

impl Eq for CycloNum {}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl std::ops::$trait<&CycloNum> for &CycloNum {
            type Output = CycloNum;
            fn $method(self, rhs: &CycloNum) -> CycloNum {
                self.$checked(rhs).expect("cyclotomic arithmetic failed")
            }
        }
        impl std::ops::$trait for CycloNum {
            type Output = CycloNum;
            fn $method(self, rhs: CycloNum) -> CycloNum {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);
forward_binop!(Div, div, checked_div);

impl std::ops::Neg for &CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        CycloNum {
            m: self.m,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl std::ops::Neg for CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        -&self
    }
}

impl fmt::Display for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rat() {
            return write!(f, "{}", format_rat(&r));
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            if k == 0 {
                write!(f, "{}", format_rat(&mag))?;
            } else {
                if !mag.is_one() {
                    write!(f, "{}*", format_rat(&mag))?;
                }
                if k == 1 {
                    write!(f, "z{}", self.m)?;
                } else {
                    write!(f, "z{}^{}", self.m, k)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloNum({self})")
    }
}

impl Serialize for CycloNum {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            m: u32,
            coeffs: Vec<&'a str>,
        }
        let rendered: Vec<String> = self.coeffs.iter().map(format_rat).collect();
        let repr = Repr {
            m: self.m,
            coeffs: rendered.iter().map(|s| s.as_str()).collect(),
        };
        repr.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CycloNum {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            m: u32,
            coeffs: Vec<String>,
        }
        let repr = Repr::deserialize(deserializer)?;
        if repr.m < 1 {
            return Err(D::Error::custom("conductor must be positive"));
        }
        if repr.coeffs.len() != euler_phi(repr.m) as usize {
            return Err(D::Error::custom(format!(
                "expected {} coefficients for conductor {}, got {}",
                euler_phi(repr.m),
                repr.m,
                repr.coeffs.len()
            )));
        }
        let coeffs = repr
            .coeffs
            .iter()
            .map(|s| parse_rat(s).map_err(|e| D::Error::custom(e.to_string())))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(CycloNum { m: repr.m, coeffs })
    }
}

/// Untagged scalar rendering used by the fixture format: rationals as a bare
/// "p/q" string, proper cyclotomics as the { "m", "coeffs" } object.
pub fn scalar_to_json(x: &CycloNum) -> serde_json::Value {
    match x.as_rat() {
        Some(r) => serde_json::Value::String(format_rat(&r)),
        None => serde_json::to_value(x).expect("scalar serialization"),
    }
}

pub fn scalar_from_json(v: &serde_json::Value) -> Result<CycloNum> {
    match v {
        serde_json::Value::String(s) => Ok(CycloNum::from_rat(parse_rat(s)?)),
        other => {
            serde_json::from_value(other.clone()).map_err(|e| Error::Fixture(e.to_string()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zeta(m: u32, k: i64) -> CycloNum {
        CycloNum::root_of_unity(m, k)
    }

    fn assert_embeds_close(x: &CycloNum, re: f64, im: f64, tol: f64) {
        let z = x.embed();
        assert!(
            (z.re - re).abs() <= tol && (z.im - im).abs() <= tol,
            "embed({x}) = {z}, wanted ({re}, {im})"
        );
    }

    #[test]
    fn zeta3_squared_reduces() {
        // zeta_3 * zeta_3 = -1 - zeta_3 by Phi_3 = x^2 + x + 1.
        let z = zeta(3, 1);
        let sq = &z * &z;
        let expected = &CycloNum::from_int(-1) - &z;
        assert_eq!(sq, expected);
    }

    #[test]
    fn zeta4_plus_conjugate_vanishes() {
        let z = zeta(4, 1);
        assert!((&z + &z.conj()).is_zero());
    }

    #[test]
    fn zeta8_squared_equals_zeta4() {
        // Oracle: the float embedding agrees to 15 digits, and the exact
        // canonical forms coincide after lifting to conductor 8.
        let lhs = zeta(8, 1).pow(2);
        let rhs = zeta(4, 1);
        let (le, re) = (lhs.embed(), rhs.embed());
        assert!((le - re).norm() < 1e-15);
        assert_eq!(lhs, rhs);
        assert_eq!(rhs.lift(8).unwrap(), lhs);
    }

    #[test]
    fn conjugation_examples() {
        // conj(zeta_4) = -zeta_4 (i.e. zeta_4^3 reduced).
        assert_eq!(zeta(4, 1).conj(), -zeta(4, 1));
        // conj fixes rationals.
        let r = CycloNum::from_rat(rat(-7, 3));
        assert_eq!(r.conj(), r);
        // conj(zeta_5 + 2 zeta_5^3) = zeta_5^4 + 2 zeta_5^2; float oracle.
        let x = &zeta(5, 1) + &zeta(5, 3).scale(&rat_int(2));
        let c = x.conj();
        let expected = &zeta(5, 4) + &zeta(5, 2).scale(&rat_int(2));
        assert_eq!(c, expected);
        let z = x.embed();
        let w = c.embed();
        assert!((z.re - w.re).abs() < 1e-12 && (z.im + w.im).abs() < 1e-12);
    }

    #[test]
    fn embedding_examples() {
        assert_embeds_close(&zeta(4, 1), 0.0, 1.0, 1e-12);
        // Sum of the nontrivial cube roots of unity is -1.
        assert_embeds_close(&(&zeta(3, 1) + &zeta(3, 2)), -1.0, 0.0, 1e-12);
        // 2cos(2pi/5) = golden ratio minus one; oracle is direct cosine.
        let x = CycloNum::two_cos(5, 1);
        let oracle = 2.0 * (2.0 * std::f64::consts::PI / 5.0).cos();
        assert!((oracle - 0.618_033_988_7).abs() < 1e-9);
        assert_embeds_close(&x, oracle, 0.0, 1e-9);
    }

    #[test]
    fn division_and_errors() {
        let x = &zeta(8, 3) + &CycloNum::from_rat(rat(1, 2));
        let q = x.checked_div(&x).unwrap();
        assert!(q.is_one());
        assert!(matches!(
            x.checked_div(&CycloNum::zero()),
            Err(Error::DivisionByZero)
        ));
        // Conductor lift overflow.
        let a = zeta(99991, 1);
        let b = zeta(99989, 1);
        assert!(matches!(
            a.checked_add(&b),
            Err(Error::ConductorOverflow { .. })
        ));
    }

    #[test]
    fn canonical_form_is_unique() {
        // Construct 1 + zeta_8 along two routes; difference must be all-zero
        // coefficients, not merely "equal".
        let a = &zeta(8, 1) + &CycloNum::one();
        let b = &(&zeta(8, 5).scale(&rat_int(-1)) + &CycloNum::one()) + &CycloNum::zero();
        let diff = &a - &b;
        assert!(diff.coeffs().iter().all(num_traits::Zero::is_zero));
    }

    #[test]
    fn embed_of_conj_is_conjugate_of_embed() {
        for (m, k) in [(3, 1), (5, 2), (8, 3), (12, 7)] {
            let x = &zeta(m, k).scale(&rat(3, 7)) + &zeta(m, 1);
            let a = x.conj().embed();
            let b = x.embed().conj();
            assert!((a - b).norm() < 1e-12);
        }
    }

    #[test]
    fn scalar_json_roundtrip() {
        let x = &zeta(8, 1).scale(&rat(1, 2)) + &CycloNum::from_rat(rat(-3, 4));
        let v = scalar_to_json(&x);
        assert_eq!(scalar_from_json(&v).unwrap(), x);
        let r = CycloNum::from_rat(rat(-3, 4));
        let v = scalar_to_json(&r);
        assert!(v.is_string());
        assert_eq!(scalar_from_json(&v).unwrap(), r);
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn build(m: u32, cs: &[(i64, i64)]) -> CycloNum {
            let mut acc = CycloNum::zero();
            for (k, (p, q)) in cs.iter().enumerate() {
                let term = CycloNum::root_of_unity(m, k as i64).scale(&rat(*p, *q));
                acc = &acc + &term;
            }
            acc
        }

        type Coeffs = Vec<(i64, i64)>;

        fn arb_triple() -> impl Strategy<Value = (u32, Coeffs, Coeffs, Coeffs)> {
            prop::sample::select(vec![3u32, 4, 5, 8, 12]).prop_flat_map(|m| {
                let phi = euler_phi(m) as usize;
                let v = || proptest::collection::vec((-6i64..=6, 1i64..=4), phi);
                (Just(m), v(), v(), v())
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(48))]

            #[test]
            fn field_axioms((m, ca, cb, cc) in arb_triple()) {
                let x = build(m, &ca);
                let y = build(m, &cb);
                let z = build(m, &cc);
                // Associativity and distributivity, exactly.
                prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
                prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
                prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
                // Inverses.
                if !y.is_zero() {
                    prop_assert!((&(&x / &y) * &y) == x);
                }
            }

            #[test]
            fn conj_is_involutive_automorphism((m, ca, cb, _cc) in arb_triple()) {
                let x = build(m, &ca);
                let y = build(m, &cb);
                prop_assert_eq!(x.conj().conj(), x.clone());
                prop_assert_eq!((&x * &y).conj(), &x.conj() * &y.conj());
                prop_assert_eq!((&x + &y).conj(), &x.conj() + &y.conj());
            }
        }
    }
}
