//! Reference classical laws with exact closed-form mixed moments E[Z^k Zbar^l].

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exactnum::{rat, CycloNum, Rat};

pub fn binomial(n: u64, k: u64) -> Rat {
    if k > n {
        return Rat::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k.min(n - k) {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    Rat::new(num, den)
}

/// A classical reference distribution with an exact mixed-moment evaluator.
#[derive(Debug, Clone)]
pub enum RefDist {
    /// Finite atomic law: rational weights on exact (real) atoms.
    Atoms(Vec<(CycloNum, Rat)>),
    /// Arcsine law on [-2, 2].
    Arcsine,
    /// Rotation-invariant law on the disk of radius alpha with
    /// E[Z^k Zbar^l] = delta_{kl} (alpha/2)^{2k} binom(2k, k).
    CArcsine(Rat),
    /// Uniform law on radius * T (radius an exact real scalar).
    UniformCircle(CycloNum),
    /// Rational convex combination of laws.
    Mixture(Vec<(Rat, RefDist)>),
}

impl RefDist {
    pub fn dirac(x: CycloNum) -> RefDist {
        RefDist::Atoms(vec![(x, Rat::one())])
    }

    pub fn dirac_int(x: i64) -> RefDist {
        Self::dirac(CycloNum::from_int(x))
    }

    /// mu_0 = delta_2.
    pub fn mu0() -> RefDist {
        Self::dirac_int(2)
    }

    /// mu_1 = (1/8) delta_{-2} + (3/4) delta_0 + (1/8) delta_2.
    pub fn mu1() -> RefDist {
        RefDist::Atoms(vec![
            (CycloNum::from_int(-2), rat(1, 8)),
            (CycloNum::zero(), rat(3, 4)),
            (CycloNum::from_int(2), rat(1, 8)),
        ])
    }

    /// mu_2 = (1/2) delta_0 + (1/2) delta_2.
    pub fn mu2() -> RefDist {
        RefDist::Atoms(vec![
            (CycloNum::zero(), rat(1, 2)),
            (CycloNum::from_int(2), rat(1, 2)),
        ])
    }

    /// mu_4 = (1/2) delta_{-2} + (1/2) delta_2.
    pub fn mu4() -> RefDist {
        RefDist::Atoms(vec![
            (CycloNum::from_int(-2), rat(1, 2)),
            (CycloNum::from_int(2), rat(1, 2)),
        ])
    }

    /// Law of the normalized dual trace (1/n) chi(Xhat^k):
    /// odd k: gcd(n,k)/(2n^2) (delta_{-1} + delta_1) + (1 - gcd(n,k)/n^2) delta_0;
    /// even k: the moments are gcd(n, k, mk/2)/n, giving atoms
    /// (gcd(n,k) +- gcd(n,k/2))/(2n) at +-1 and 1 - gcd(n,k)/n at 0.
    pub fn dual_normalized(n: u64, k: u64) -> RefDist {
        if k % 2 == 1 {
            let g = num_integer::gcd(n, k) as i64;
            let n2 = (n * n) as i64;
            RefDist::Atoms(vec![
                (CycloNum::from_int(-1), rat(g, 2 * n2)),
                (CycloNum::from_int(1), rat(g, 2 * n2)),
                (CycloNum::zero(), &Rat::one() - &rat(g, n2)),
            ])
        } else {
            let even = num_integer::gcd(n, k) as i64;
            let odd = num_integer::gcd(n, k / 2) as i64;
            let n = n as i64;
            RefDist::Atoms(vec![
                (CycloNum::from_int(1), rat(even + odd, 2 * n)),
                (CycloNum::from_int(-1), rat(even - odd, 2 * n)),
                (CycloNum::zero(), &Rat::one() - &rat(even, n)),
            ])
        }
    }

    /// (1/2) delta_0 + (1/2) C-arcsine(2): the odd-power limit for u >= 1.
    pub fn half_zero_half_carcsine() -> RefDist {
        RefDist::Mixture(vec![
            (rat(1, 2), RefDist::dirac(CycloNum::zero())),
            (rat(1, 2), RefDist::CArcsine(rat(2, 1))),
        ])
    }

    /// (1/2) delta_0 + (1/2) arcsine(-2,2): the odd-power limit for u = 0.
    pub fn half_zero_half_arcsine() -> RefDist {
        RefDist::Mixture(vec![
            (rat(1, 2), RefDist::dirac(CycloNum::zero())),
            (rat(1, 2), RefDist::Arcsine),
        ])
    }

    /// (1/2) U(radius T) + (1/2) C-arcsine(2): the even-power law for u >= 1;
    /// the limit takes radius = 2.
    pub fn half_circle_half_carcsine(radius: CycloNum) -> RefDist {
        RefDist::Mixture(vec![
            (rat(1, 2), RefDist::UniformCircle(radius)),
            (rat(1, 2), RefDist::CArcsine(rat(2, 1))),
        ])
    }

    /// (1/2) delta_atom + (1/2) arcsine(-2,2): the even-power law for u = 0;
    /// the limit takes atom = 2.
    pub fn half_dirac_half_arcsine(atom: CycloNum) -> RefDist {
        RefDist::Mixture(vec![
            (rat(1, 2), RefDist::dirac(atom)),
            (rat(1, 2), RefDist::Arcsine),
        ])
    }

    /// Exact mixed moment E[Z^k Zbar^l].
    pub fn moment(&self, k: u64, l: u64) -> CycloNum {
        match self {
            RefDist::Atoms(atoms) => {
                let mut acc = CycloNum::zero();
                for (x, w) in atoms {
                    let v = &x.pow(k) * &x.conj().pow(l);
                    acc = &acc + &v.scale(w);
                }
                acc
            }
            RefDist::Arcsine => {
                if (k + l) % 2 == 1 {
                    CycloNum::zero()
                } else {
                    CycloNum::from_rat(binomial(k + l, (k + l) / 2))
                }
            }
            RefDist::CArcsine(alpha) => {
                if k != l {
                    CycloNum::zero()
                } else {
                    let half = alpha / &rat(2, 1);
                    let mut pw = Rat::one();
                    for _ in 0..2 * k {
                        pw *= &half;
                    }
                    CycloNum::from_rat(pw * binomial(2 * k, k))
                }
            }
            RefDist::UniformCircle(radius) => {
                if k != l {
                    CycloNum::zero()
                } else {
                    (radius * &radius.conj()).pow(k)
                }
            }
            RefDist::Mixture(parts) => {
                let mut acc = CycloNum::zero();
                for (w, d) in parts {
                    acc = &acc + &d.moment(k, l).scale(w);
                }
                acc
            }
        }
    }

    /// Human-readable tag for reports.
    pub fn describe(&self) -> String {
        match self {
            RefDist::Atoms(atoms) => {
                let parts: Vec<String> = atoms
                    .iter()
                    .map(|(x, w)| format!("{}*d[{}]", crate::exactnum::format_rat(w), x))
                    .collect();
                parts.join(" + ")
            }
            RefDist::Arcsine => "arcsine(-2,2)".into(),
            RefDist::CArcsine(a) => format!("c-arcsine({})", crate::exactnum::format_rat(a)),
            RefDist::UniformCircle(r) => format!("uniform-circle({r})"),
            RefDist::Mixture(parts) => {
                let ps: Vec<String> = parts
                    .iter()
                    .map(|(w, d)| format!("{}*[{}]", crate::exactnum::format_rat(w), d.describe()))
                    .collect();
                ps.join(" + ")
            }
        }
    }
}
