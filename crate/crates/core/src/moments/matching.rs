//! Distribution matching, the pairwise asymptotic-independence analysis, and
//! convergence scans over the Sekine family index.

use std::collections::BTreeMap;

use crate::coreps::two_dim_v_max;
use crate::error::{Error, Result};
use crate::exactnum::CycloNum;
use crate::qgroup::sekine::SekineIndex;

use super::closed_forms::{char_word_moment, dual_normalized_trace_moment, CharFactor};
use super::refdist::RefDist;
use super::{MomentTable, MomentWord};

#[derive(Debug, Clone)]
pub struct MatchRow {
    pub word: MomentWord,
    pub value: CycloNum,
    pub reference: CycloNum,
    /// Some(outcome) when the exact-equality rule applied (both sides
    /// rational, or the two exact values already coincide).
    pub exact: Option<bool>,
    pub deviation: f64,
    pub ok: bool,
}

#[derive(Debug, Clone)]
pub struct MatchReport {
    pub element: String,
    pub dist: String,
    pub tol: f64,
    pub rows: Vec<MatchRow>,
    pub all_match: bool,
    pub worst_deviation: f64,
}

/// Compares a moment table against a reference law word by word. Exact
/// equality is demanded whenever both sides are rational (and granted when
/// the two exact scalars already coincide); otherwise the float embeddings
/// must agree within `tol`.
pub fn match_distribution(
    table: &MomentTable,
    dist: &RefDist,
    max_order: usize,
    tol: f64,
) -> MatchReport {
    let mut rows = Vec::new();
    let mut all_match = true;
    let mut worst = 0.0f64;
    for (word, value) in &table.entries {
        if word.len() > max_order {
            continue;
        }
        let reference = dist.moment(word.plain_count() as u64, word.star_count() as u64);
        let exact_eq = value == &reference;
        let deviation = (value.embed() - reference.embed()).norm();
        let both_rational = value.as_rat().is_some() && reference.as_rat().is_some();
        let (exact, ok) = if exact_eq {
            (Some(true), true)
        } else if both_rational {
            (Some(false), false)
        } else {
            (None, deviation <= tol)
        };
        if !ok {
            all_match = false;
        }
        worst = worst.max(deviation);
        rows.push(MatchRow {
            word: word.clone(),
            value: value.clone(),
            reference,
            exact,
            deviation,
            ok,
        });
    }
    MatchReport {
        element: table.element.clone(),
        dist: dist.describe(),
        tol,
        rows,
        all_match,
        worst_deviation: worst,
    }
}

// ---------------------------------------------------------------------------
// Pairwise asymptotic independence
// ---------------------------------------------------------------------------

/// The pair chi((X^(a,b))^k)^e, chi((X^(c,d))^l)^f; e, f are stars when set.
#[derive(Debug, Clone, Copy)]
pub struct PairwiseParams {
    pub a: u32,
    pub b: u32,
    pub k: u64,
    pub e_star: bool,
    pub c: u32,
    pub d: u32,
    pub l: u64,
    pub f_star: bool,
}

impl PairwiseParams {
    fn x_factor(&self) -> CharFactor {
        CharFactor {
            u: self.a as i64,
            v: self.b as i64,
            k: self.k,
            star: self.e_star,
        }
    }

    fn y_factor(&self) -> CharFactor {
        CharFactor {
            u: self.c as i64,
            v: self.d as i64,
            k: self.l,
            star: self.f_star,
        }
    }
}

#[derive(Debug, Clone)]
pub struct PairwiseReport {
    pub params: PairwiseParams,
    /// The published limit display delta_{ka,lc} delta_{{e,f},{1,*}} (delta_{kb,ld} + 2*[k,l even]).
    pub displayed_limit: i64,
    /// Ground-truth limit; differs from the display only when a = c = 0,
    /// where the characters are self-adjoint and the e/f distinction
    /// collapses (the subtracted product E[X]E[Y] no longer vanishes).
    pub true_limit: i64,
    pub degenerate: bool,
    /// Exact finite-n cumulants, one per requested n.
    pub finite: Vec<(u32, CycloNum)>,
    /// Engine value equals the explicit two-argument closed form at every n.
    pub formula_agrees: bool,
    /// Substituting cos -> 1 in the closed form reproduces `true_limit`.
    pub algebraic_limit_agrees: bool,
    /// The proposition's trichotomy: independent iff ka != lc, or e = f, or
    /// (k or l odd and kb != ld).
    pub trichotomy_independent: bool,
    /// Zero/nonzero verdicts of the finite-n cumulants.
    pub finite_zero: Vec<bool>,
}

fn indicator(x: bool) -> i64 {
    if x {
        1
    } else {
        0
    }
}

/// kappa_n(X, Y) = E[XY] - E[X]E[Y], through the closed-form word engine.
pub fn pairwise_cumulant_exact(n: u32, p: &PairwiseParams) -> CycloNum {
    let exy = char_word_moment(n, &[p.x_factor(), p.y_factor()]);
    let ex = char_word_moment(n, &[p.x_factor()]);
    let ey = char_word_moment(n, &[p.y_factor()]);
    &exy - &(&ex * &ey)
}

/// The same cumulant from the explicit two-argument formula (full modular
/// indicators, exact cosines); the second route of the dual check.
pub fn pairwise_cumulant_formula(n: u32, p: &PairwiseParams) -> CycloNum {
    let ix = SekineIndex { n };
    let div = |x: i64| x.rem_euclid(n as i64) == 0;
    let (ka, kb) = (p.k as i64 * p.a as i64, p.k as i64 * p.b as i64);
    let (lc, ld) = (p.l as i64 * p.c as i64, p.l as i64 * p.d as i64);
    let eps_e = if p.e_star { -1 } else { 1 };
    let eps_f = if p.f_star { -1 } else { 1 };
    let both_even = p.k % 2 == 0 && p.l % 2 == 0;
    let half = crate::exactnum::rat(1, 2);
    let ck = ix.two_cos_half(p.k as i64 * (p.a as i64) * (p.b as i64)); // 2cos(k a b pi/n)
    let cl = ix.two_cos_half(p.l as i64 * (p.c as i64) * (p.d as i64));

    let mut exy = CycloNum::zero();
    if div(eps_e * ka + eps_f * lc) {
        let mut count = 0i64;
        for s1 in [1i64, -1] {
            for s2 in [1i64, -1] {
                if div(s1 * kb + s2 * ld) {
                    count += 1;
                }
            }
        }
        exy = CycloNum::from_rat(crate::exactnum::rat(count, 2));
        if both_even {
            exy = &exy + &(&ck * &cl).scale(&half);
        }
    }
    let single = |ku_shift: i64, kv: i64, even: bool, cos: &CycloNum| -> CycloNum {
        let mut e = CycloNum::from_int(indicator(div(ku_shift) && div(kv)));
        if even && div(ku_shift) {
            e = &e + &cos.scale(&half);
        }
        e
    };
    let ex = single(ka, kb, p.k % 2 == 0, &ck);
    let ey = single(lc, ld, p.l % 2 == 0, &cl);
    &exy - &(&ex * &ey)
}

/// Ground-truth algebraic limit (cos -> 1) of the cumulant.
pub fn pairwise_limit_true(p: &PairwiseParams) -> i64 {
    let (ka, kb) = (p.k * p.a as u64, p.k * p.b as u64);
    let (lc, ld) = (p.l * p.c as u64, p.l * p.d as u64);
    let both_even = p.k % 2 == 0 && p.l % 2 == 0;
    let cond_a = if p.e_star != p.f_star {
        ka == lc
    } else {
        ka + lc == 0
    };
    if !cond_a {
        return 0;
    }
    let base = indicator(kb == ld) + 2 * indicator(both_even);
    base - indicator(p.a == 0 && p.c == 0 && both_even)
}

/// The published limit display, as printed.
pub fn pairwise_limit_displayed(p: &PairwiseParams) -> i64 {
    let (ka, kb) = (p.k * p.a as u64, p.k * p.b as u64);
    let (lc, ld) = (p.l * p.c as u64, p.l * p.d as u64);
    let both_even = p.k % 2 == 0 && p.l % 2 == 0;
    indicator(ka == lc)
        * indicator(p.e_star != p.f_star)
        * (indicator(kb == ld) + 2 * indicator(both_even))
}

/// Evaluates the closed-form limit and exact finite-n cumulants for the pair
/// and reports the verdict against the proposition's trichotomy.
pub fn pairwise_independence(p: &PairwiseParams, n_list: &[u32]) -> Result<PairwiseReport> {
    if p.b == 0 || p.d == 0 || p.k == 0 || p.l == 0 {
        return Err(Error::InvalidParameter(
            "pairwise analysis needs b, d >= 1 and k, l >= 1".into(),
        ));
    }
    let mut finite = Vec::new();
    let mut formula_agrees = true;
    for &n in n_list {
        if p.b > two_dim_v_max(n) || p.d > two_dim_v_max(n) || p.a >= n || p.c >= n {
            return Err(Error::InvalidParameter(format!(
                "parameters out of the two-dimensional range at n = {n}"
            )));
        }
        let kappa = pairwise_cumulant_exact(n, p);
        if kappa != pairwise_cumulant_formula(n, p) {
            formula_agrees = false;
        }
        finite.push((n, kappa));
    }
    let displayed_limit = pairwise_limit_displayed(p);
    let true_limit = pairwise_limit_true(p);
    let degenerate = p.a == 0 && p.c == 0;

    // algebraic limit of the closed form: replace each cosine by 1, i.e.
    // evaluate the formula with the limit indicators
    let (ka, kb) = (p.k * p.a as u64, p.k * p.b as u64);
    let (lc, ld) = (p.l * p.c as u64, p.l * p.d as u64);
    let both_even = p.k % 2 == 0 && p.l % 2 == 0;
    let cond_a = if p.e_star != p.f_star {
        ka == lc
    } else {
        ka + lc == 0
    };
    let alg_limit = if cond_a {
        (indicator(kb == ld) + 2 * indicator(both_even))
            - indicator(p.a == 0) * indicator(p.c == 0) * indicator(both_even)
    } else {
        0
    };
    let algebraic_limit_agrees = alg_limit == true_limit;

    let trichotomy_independent = ka != lc
        || p.e_star == p.f_star
        || ((p.k % 2 == 1 || p.l % 2 == 1) && kb != ld);
    let finite_zero = finite.iter().map(|(_, k)| k.is_zero()).collect();
    Ok(PairwiseReport {
        params: *p,
        displayed_limit,
        true_limit,
        degenerate,
        finite,
        formula_agrees,
        algebraic_limit_agrees,
        trichotomy_independent,
        finite_zero,
    })
}

// ---------------------------------------------------------------------------
// Asymptotic scans
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy)]
pub enum ScanFamily {
    /// chi((X^(u,v))^k) over the Sekine family index n.
    SekineCharPower { u: u32, v: u32, k: u64 },
    /// (1/n) chi(Xhat^k) on the dual side.
    DualNormalizedTrace { k: u64 },
}

impl ScanFamily {
    pub fn describe(&self) -> String {
        match self {
            ScanFamily::SekineCharPower { u, v, k } => format!("chi(X({u},{v})^{k})"),
            ScanFamily::DualNormalizedTrace { k } => format!("(1/n) chi(Xhat^{k})"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct ScanRow {
    pub n: u32,
    pub word: MomentWord,
    pub value: CycloNum,
    pub limit: CycloNum,
    pub deviation: f64,
}

#[derive(Debug, Clone)]
pub struct ScanReport {
    pub family: String,
    pub dist: String,
    pub rows: Vec<ScanRow>,
    /// Smallest scanned n with exact agreement, per word, when one exists.
    pub first_exact: BTreeMap<MomentWord, Option<u32>>,
}

impl ScanReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,word,value,limit,deviation\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{:.3e}\n",
                r.n, r.word, r.value, r.limit, r.deviation
            ));
        }
        out
    }
}

/// Per-n moment tables of a family against a limit law: exact values, exact
/// limits, float deviations, and the first n achieving exact agreement.
pub fn asymptotic_scan(
    family: &ScanFamily,
    dist: &RefDist,
    max_order: usize,
    n_list: &[u32],
) -> Result<ScanReport> {
    asymptotic_scan_with(family, |_| dist.clone(), max_order, n_list)
}

/// Like [`asymptotic_scan`] with a reference law depending on the scanned
/// index, e.g. the gcd-atom laws of the normalized dual traces.
pub fn asymptotic_scan_with(
    family: &ScanFamily,
    law_of_n: impl Fn(u32) -> RefDist,
    max_order: usize,
    n_list: &[u32],
) -> Result<ScanReport> {
    let mut rows = Vec::new();
    let mut first_exact: BTreeMap<MomentWord, Option<u32>> = BTreeMap::new();
    let mut dist_desc = String::new();
    for &n in n_list {
        if n < 2 {
            return Err(Error::InvalidParameter("scan needs n >= 2".into()));
        }
        let dist = law_of_n(n);
        if dist_desc.is_empty() {
            dist_desc = dist.describe();
        }
        for total in 1..=max_order {
            for plain in (0..=total).rev() {
                let star = total - plain;
                let word = MomentWord::powers(plain, star);
                let value = match family {
                    ScanFamily::SekineCharPower { u, v, k } => {
                        if *v == 0 || *v > two_dim_v_max(n) || *u >= n {
                            return Err(Error::InvalidParameter(format!(
                                "(u,v) = ({u},{v}) not in range at n = {n}"
                            )));
                        }
                        let mut factors = Vec::new();
                        for _ in 0..plain {
                            factors.push(CharFactor::plain(*u as i64, *v as i64, *k));
                        }
                        for _ in 0..star {
                            factors.push(CharFactor::starred(*u as i64, *v as i64, *k));
                        }
                        char_word_moment(n, &factors)
                    }
                    ScanFamily::DualNormalizedTrace { k } => CycloNum::from_rat(
                        dual_normalized_trace_moment(n as u64, *k, total as u64),
                    ),
                };
                let limit = dist.moment(plain as u64, star as u64);
                let deviation = (value.embed() - limit.embed()).norm();
                let slot = first_exact.entry(word.clone()).or_insert(None);
                if slot.is_none() && value == limit {
                    *slot = Some(n);
                }
                rows.push(ScanRow {
                    n,
                    word,
                    value,
                    limit,
                    deviation,
                });
            }
        }
    }
    Ok(ScanReport {
        family: family.describe(),
        dist: dist_desc,
        rows,
        first_exact,
    })
}
