//! Dense rational polynomial helpers and the per-conductor cyclotomic field
//! registry. Polynomials are little-endian coefficient vectors over Q.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};

use super::Rat;

pub fn euler_phi(m: u32) -> u32 {
    let mut n = m;
    let mut result = m;
    let mut p = 2u32;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

pub fn divisors(m: u32) -> Vec<u32> {
    let mut ds = Vec::new();
    let mut d = 1;
    while d * d <= m {
        if m % d == 0 {
            ds.push(d);
            if d != m / d {
                ds.push(m / d);
            }
        }
        d += 1;
    }
    ds.sort_unstable();
    ds
}

pub fn trim(p: &mut Vec<Rat>) {
    while p.len() > 1 && p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
}

pub fn poly_is_zero(p: &[Rat]) -> bool {
    p.iter().all(|c| c.is_zero())
}

pub fn poly_deg(p: &[Rat]) -> usize {
    let mut d = p.len();
    while d > 1 && p[d - 1].is_zero() {
        d -= 1;
    }
    d - 1
}

pub fn poly_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    if poly_is_zero(a) || poly_is_zero(b) {
        return vec![Rat::zero()];
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            if cb.is_zero() {
                continue;
            }
            out[i + j] += ca * cb;
        }
    }
    trim(&mut out);
    out
}

/// Long division: returns (quotient, remainder) with deg(r) < deg(d).
pub fn poly_divmod(num: &[Rat], den: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let dd = poly_deg(den);
    assert!(!poly_is_zero(den), "polynomial division by zero");
    let mut rem: Vec<Rat> = num.to_vec();
    trim(&mut rem);
    if poly_deg(&rem) < dd || poly_is_zero(&rem) {
        return (vec![Rat::zero()], rem);
    }
    let lead = den[dd].clone();
    let mut quot = vec![Rat::zero(); poly_deg(&rem) - dd + 1];
    for k in (0..quot.len()).rev() {
        let nd = poly_deg(&rem);
        if nd < dd + k || rem[dd + k].is_zero() {
            continue;
        }
        let c = &rem[dd + k] / &lead;
        for (j, dj) in den.iter().enumerate().take(dd + 1) {
            if !dj.is_zero() {
                let delta = &c * dj;
                rem[j + k] -= delta;
            }
        }
        quot[k] = c;
    }
    trim(&mut rem);
    trim(&mut quot);
    (quot, rem)
}

pub fn poly_mod(num: &[Rat], den: &[Rat]) -> Vec<Rat> {
    poly_divmod(num, den).1
}

/// Extended Euclid over Q[x]: gcd(a, b) = g together with s, t such that
/// s*a + t*b = g. The gcd is normalized monic.
pub fn poly_xgcd(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>, Vec<Rat>) {
    let mut r0 = a.to_vec();
    let mut r1 = b.to_vec();
    trim(&mut r0);
    trim(&mut r1);
    let mut s0 = vec![Rat::one()];
    let mut s1 = vec![Rat::zero()];
    let mut t0 = vec![Rat::zero()];
    let mut t1 = vec![Rat::one()];
    while !poly_is_zero(&r1) {
        let (q, r) = poly_divmod(&r0, &r1);
        let s = poly_sub(&s0, &poly_mul(&q, &s1));
        let t = poly_sub(&t0, &poly_mul(&q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    let lead = r0[poly_deg(&r0)].clone();
    if !lead.is_one() && !lead.is_zero() {
        let inv = Rat::one() / lead;
        for c in r0.iter_mut().chain(s0.iter_mut()).chain(t0.iter_mut()) {
            *c *= &inv;
        }
    }
    (r0, s0, t0)
}

pub fn poly_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    trim(&mut out);
    out
}

/// Per-conductor data: the m-th cyclotomic polynomial, its degree, and a
/// monomial reduction table for fast multiplication.
pub struct CycloField {
    pub m: u32,
    pub phi: usize,
    /// Monic, integer-coefficient Phi_m, little-endian, length phi+1.
    pub modulus: Vec<Rat>,
    /// rows[e] = canonical coordinates of zeta^e, for e up to
    /// max(2 phi - 2, m - 1); only built for moderate conductors.
    rows: Option<Vec<Vec<Rat>>>,
}

/// Conductors above this bound skip the reduction table and use long
/// division; practical constructions stay far below it.
const ROW_TABLE_MAX_CONDUCTOR: u32 = 2048;

impl CycloField {
    fn with_rows(m: u32, phi: usize, modulus: Vec<Rat>) -> Self {
        let rows = if m <= ROW_TABLE_MAX_CONDUCTOR {
            let count = (2 * phi).max(m as usize);
            let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(count);
            for e in 0..count {
                if e < phi {
                    let mut r = vec![Rat::zero(); phi];
                    r[e] = Rat::one();
                    rows.push(r);
                } else {
                    // zeta^e = zeta * zeta^{e-1}, reduced by the modulus row
                    let prev = &rows[e - 1];
                    let mut shifted = vec![Rat::zero(); phi + 1];
                    for (i, c) in prev.iter().enumerate() {
                        shifted[i + 1] = c.clone();
                    }
                    let lead = std::mem::replace(&mut shifted[phi], Rat::zero());
                    let mut r: Vec<Rat> = shifted[..phi].to_vec();
                    if !lead.is_zero() {
                        for (i, c) in modulus.iter().enumerate().take(phi) {
                            if !c.is_zero() {
                                r[i] -= &lead * c;
                            }
                        }
                    }
                    rows.push(r);
                }
            }
            Some(rows)
        } else {
            None
        };
        CycloField {
            m,
            phi,
            modulus,
            rows,
        }
    }

    /// Canonical coordinates of zeta^e, from the table when available.
    pub fn power_row(&self, e: usize) -> Vec<Rat> {
        if let Some(rows) = &self.rows {
            if e < rows.len() {
                return rows[e].clone();
            }
        }
        let mut poly = vec![Rat::zero(); e + 1];
        poly[e] = Rat::one();
        self.reduce(&poly)
    }

    /// Accumulates c * zeta^e into canonical coordinates.
    pub fn add_power(&self, acc: &mut [Rat], e: usize, c: &Rat) {
        if c.is_zero() {
            return;
        }
        if e < self.phi {
            acc[e] += c;
            return;
        }
        if let Some(rows) = &self.rows {
            if e < rows.len() {
                for (i, r) in rows[e].iter().enumerate() {
                    if !r.is_zero() {
                        acc[i] += c * r;
                    }
                }
                return;
            }
        }
        let row = self.power_row(e);
        for (i, r) in row.iter().enumerate() {
            if !r.is_zero() {
                acc[i] += c * r;
            }
        }
    }

    /// Reduces an arbitrary polynomial in zeta_m to the canonical power basis
    /// 1, zeta, ..., zeta^{phi-1}.
    pub fn reduce(&self, poly: &[Rat]) -> Vec<Rat> {
        let deg = poly_deg(poly);
        if deg < self.phi {
            let mut r = poly.to_vec();
            r.resize(self.phi, Rat::zero());
            return r;
        }
        if let Some(rows) = &self.rows {
            if deg < rows.len() {
                let mut out = poly[..self.phi.min(poly.len())].to_vec();
                out.resize(self.phi, Rat::zero());
                for (e, c) in poly.iter().enumerate().skip(self.phi) {
                    if !c.is_zero() {
                        for (i, r) in rows[e].iter().enumerate() {
                            if !r.is_zero() {
                                out[i] += c * r;
                            }
                        }
                    }
                }
                return out;
            }
        }
        let mut r = poly_mod(poly, &self.modulus);
        r.resize(self.phi, Rat::zero());
        r
    }
}

fn x_pow_minus_one(m: u32) -> Vec<Rat> {
    let mut p = vec![Rat::zero(); m as usize + 1];
    p[0] = -Rat::one();
    p[m as usize] = Rat::one();
    p
}

/// Phi_m by iterated exact division of x^m - 1 by Phi_d over proper divisors d.
fn cyclotomic_poly(m: u32, cache: &mut HashMap<u32, Vec<Rat>>) -> Vec<Rat> {
    if let Some(p) = cache.get(&m) {
        return p.clone();
    }
    let mut num = x_pow_minus_one(m);
    for d in divisors(m) {
        if d == m {
            continue;
        }
        let phi_d = cyclotomic_poly(d, cache);
        let (q, r) = poly_divmod(&num, &phi_d);
        debug_assert!(poly_is_zero(&r), "x^m-1 must be divisible by Phi_d");
        num = q;
    }
    cache.insert(m, num.clone());
    num
}

static REGISTRY: OnceLock<Mutex<HashMap<u32, Arc<CycloField>>>> = OnceLock::new();

pub fn field(m: u32) -> Arc<CycloField> {
    assert!(m >= 1, "conductor must be positive");
    let reg = REGISTRY.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = reg.lock().expect("cyclotomic registry poisoned");
    if let Some(f) = guard.get(&m) {
        return Arc::clone(f);
    }
    let mut cache: HashMap<u32, Vec<Rat>> = guard
        .iter()
        .map(|(k, v)| (*k, v.modulus.clone()))
        .collect();
    let modulus = cyclotomic_poly(m, &mut cache);
    let f = Arc::new(CycloField::with_rows(m, euler_phi(m) as usize, modulus));
    let out = Arc::clone(guard.entry(m).or_insert(f));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn int_coeffs(p: &[Rat]) -> Vec<i64> {
        p.iter().map(|c| c.to_i64().unwrap()).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(int_coeffs(&field(1).modulus), vec![-1, 1]);
        assert_eq!(int_coeffs(&field(2).modulus), vec![1, 1]);
        assert_eq!(int_coeffs(&field(3).modulus), vec![1, 1, 1]);
        assert_eq!(int_coeffs(&field(4).modulus), vec![1, 0, 1]);
        assert_eq!(int_coeffs(&field(5).modulus), vec![1, 1, 1, 1, 1]);
        assert_eq!(int_coeffs(&field(6).modulus), vec![1, -1, 1]);
        assert_eq!(int_coeffs(&field(8).modulus), vec![1, 0, 0, 0, 1]);
        assert_eq!(int_coeffs(&field(12).modulus), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn phi_agrees_with_degree() {
        for m in 1..=64 {
            assert_eq!(poly_deg(&field(m).modulus) as u32, euler_phi(m), "m={m}");
        }
    }

    #[test]
    fn xgcd_inverts_modulo_phi() {
        // zeta_5 + 1 is a unit; g should be 1.
        let f = field(5);
        let a = vec![Rat::one(), Rat::one()];
        let (g, s, _) = poly_xgcd(&a, &f.modulus);
        assert_eq!(poly_deg(&g), 0);
        assert!(g[0].is_one());
        let prod = f.reduce(&poly_mul(&s, &a));
        assert!(prod[0].is_one());
        assert!(prod[1..].iter().all(|c| c.is_zero()));
    }
}
