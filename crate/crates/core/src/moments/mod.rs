//! *-distributions under the Haar state: moment words and tables, joint
//! moments and classical cumulants over set partitions, reference laws with
//! exact moment evaluators, the closed-form moment formulas, the Chebyshev
//! span decompositions, the Gelfand space of the character algebra, and the
//! distribution-matching and asymptotic-scan reports.

pub mod chebyshev;
pub mod closed_forms;
pub mod matching;
pub mod omega;
pub mod partitions;
pub mod refdist;

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use crate::algebra::AlgElement;
use crate::error::{Error, Result};
use crate::exactnum::{format_rat, scalar_to_json, CycloNum};
use crate::qgroup::QuantumGroup;

pub use chebyshev::{char_power_decompose, chebyshev_decompose, monic_chebyshev};
pub use closed_forms::{
    char_word_moment, closed_form_dual_moments, closed_form_kp_joint, closed_form_sekine_even,
    closed_form_sekine_moments, dual_char_power_closed_form, dual_normalized_trace_moment,
    kp_char_power_element, kp_power_class, kp_power_law, sekine_char_closed_form,
    sekine_char_moment_table, CharFactor,
};
pub use matching::{asymptotic_scan, match_distribution, pairwise_independence, MatchReport, PairwiseParams, PairwiseReport, ScanFamily, ScanReport};
pub use omega::{omega_space, uniform_weight_report, OmegaSpace};
pub use partitions::set_partitions;
pub use refdist::RefDist;

/// Hard cap on the word length of a moment table.
pub const MAX_WORD_ORDER: usize = 16;
/// Cap on the number of arguments of a classical cumulant (Bell-number sum).
pub const MAX_CUMULANT_ARGS: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Letter {
    Plain,
    Star,
}

/// A word in a and a*: the exponent pattern of a *-moment.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct MomentWord(pub Vec<Letter>);

impl MomentWord {
    /// Canonical word a^k (a*)^l.
    pub fn powers(k: usize, l: usize) -> Self {
        let mut v = vec![Letter::Plain; k];
        v.extend(std::iter::repeat(Letter::Star).take(l));
        MomentWord(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn plain_count(&self) -> usize {
        self.0.iter().filter(|&&l| l == Letter::Plain).count()
    }

    pub fn star_count(&self) -> usize {
        self.len() - self.plain_count()
    }

    /// The word of the adjoint: reverse and flip every letter.
    pub fn adjoint(&self) -> MomentWord {
        MomentWord(
            self.0
                .iter()
                .rev()
                .map(|l| match l {
                    Letter::Plain => Letter::Star,
                    Letter::Star => Letter::Plain,
                })
                .collect(),
        )
    }

    /// Parses "aa*a" style strings.
    pub fn parse(s: &str) -> Result<MomentWord> {
        let mut letters = Vec::new();
        for ch in s.chars() {
            match ch {
                'a' => letters.push(Letter::Plain),
                '*' => {
                    let last = letters.last_mut().ok_or_else(|| {
                        Error::InvalidParameter(format!("stray star in word {s:?}"))
                    })?;
                    if *last == Letter::Star {
                        return Err(Error::InvalidParameter(format!(
                            "double star in word {s:?}"
                        )));
                    }
                    *last = Letter::Star;
                }
                _ => {
                    return Err(Error::InvalidParameter(format!(
                        "word letters are 'a' and '*', got {ch:?} in {s:?}"
                    )))
                }
            }
        }
        Ok(MomentWord(letters))
    }

    pub fn evaluate(&self, a: &AlgElement) -> Vec<AlgElement> {
        let star = a.star();
        self.0
            .iter()
            .map(|l| match l {
                Letter::Plain => a.clone(),
                Letter::Star => star.clone(),
            })
            .collect()
    }
}

impl fmt::Display for MomentWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for l in &self.0 {
            match l {
                Letter::Plain => write!(f, "a")?,
                Letter::Star => write!(f, "a*")?,
            }
        }
        Ok(())
    }
}

/// Exact Haar moment of a product, left-to-right association. The empty
/// product is the unit, so the value is 1.
pub fn haar_moment(g: &QuantumGroup, factors: &[AlgElement]) -> CycloNum {
    let mut prod = g.algebra().unit_element();
    for f in factors {
        prod = &prod * f;
    }
    g.haar_of(&prod)
}

/// Joint moment of a family: the Haar value of the ordered product.
pub fn joint_moment(g: &QuantumGroup, elements: &[AlgElement]) -> CycloNum {
    haar_moment(g, elements)
}

/// All *-moments of `a` up to `max_order`. Normal elements are indexed by
/// the canonical words a^k (a*)^l; non-normal elements get every word.
#[derive(Debug, Clone)]
pub struct MomentTable {
    pub element: String,
    pub max_order: usize,
    pub normal: bool,
    pub entries: BTreeMap<MomentWord, CycloNum>,
}

impl MomentTable {
    pub fn get(&self, word: &MomentWord) -> Option<&CycloNum> {
        self.entries.get(word)
    }

    /// Value of an arbitrary word; for normal elements this canonicalizes to
    /// the (k, l) representative.
    pub fn value_of(&self, word: &MomentWord) -> Option<&CycloNum> {
        if self.normal {
            self.entries
                .get(&MomentWord::powers(word.plain_count(), word.star_count()))
        } else {
            self.entries.get(word)
        }
    }

    /// MomentTable JSON: { element, max_order, moments: [{word, value}] }.
    pub fn to_json(&self) -> Value {
        let moments: Vec<Value> = self
            .entries
            .iter()
            .map(|(w, v)| {
                let value = match v.as_rat() {
                    Some(r) => json!({ "rational": format_rat(&r) }),
                    None => scalar_to_json(v),
                };
                json!({ "word": w.to_string(), "value": value })
            })
            .collect();
        json!({
            "element": self.element,
            "max_order": self.max_order,
            "moments": moments,
        })
    }
}

pub fn star_moments(
    g: &QuantumGroup,
    a: &AlgElement,
    descriptor: &str,
    max_order: usize,
) -> Result<MomentTable> {
    if max_order > MAX_WORD_ORDER {
        return Err(Error::InvalidParameter(format!(
            "max order {max_order} above the cap {MAX_WORD_ORDER}"
        )));
    }
    let normal = a.is_normal();
    let mut entries = BTreeMap::new();
    if normal {
        let star = a.star();
        // row of powers a^k (a*)^l computed incrementally
        let mut pow_a = vec![g.algebra().unit_element()];
        for _ in 0..max_order {
            pow_a.push(pow_a.last().unwrap() * a);
        }
        for k in 0..=max_order {
            let mut acc = pow_a[k].clone();
            for l in 0..=(max_order - k) {
                if k + l >= 1 {
                    entries.insert(MomentWord::powers(k, l), g.haar_of(&acc));
                }
                if k + l < max_order {
                    acc = &acc * &star;
                }
            }
        }
    } else {
        // all words of length 1..=max_order (exponential; the cap guards it)
        for len in 1..=max_order {
            for mask in 0u64..(1u64 << len) {
                let letters: Vec<Letter> = (0..len)
                    .map(|i| {
                        if mask & (1 << i) != 0 {
                            Letter::Star
                        } else {
                            Letter::Plain
                        }
                    })
                    .collect();
                let word = MomentWord(letters);
                let value = haar_moment(g, &word.evaluate(a));
                entries.insert(word, value);
            }
        }
    }
    Ok(MomentTable {
        element: descriptor.to_string(),
        max_order,
        normal,
        entries,
    })
}

/// Classical joint cumulant over set partitions with Moebius weights:
/// kappa(a_1..a_r) = sum_pi (|pi|-1)! (-1)^{|pi|-1} prod_B h(prod_{i in B} a_i).
/// The family must commute pairwise (checked exactly).
pub fn cumulant(g: &QuantumGroup, elements: &[AlgElement]) -> Result<CycloNum> {
    let r = elements.len();
    if r == 0 {
        return Err(Error::InvalidParameter("cumulant of an empty family".into()));
    }
    if r > MAX_CUMULANT_ARGS {
        return Err(Error::InvalidParameter(format!(
            "cumulant arity {r} above the cap {MAX_CUMULANT_ARGS}"
        )));
    }
    for i in 0..r {
        for j in (i + 1)..r {
            if !elements[i].commutes_with(&elements[j]) {
                return Err(Error::NonCommuting(format!(
                    "arguments {i} and {j} do not commute"
                )));
            }
        }
    }
    let mut acc = CycloNum::zero();
    for partition in set_partitions(r) {
        let blocks = partition.len();
        // (|pi|-1)! (-1)^{|pi|-1}
        let mut weight: i64 = 1;
        for m in 1..blocks {
            weight *= m as i64;
        }
        if (blocks - 1) % 2 == 1 {
            weight = -weight;
        }
        let mut prod = CycloNum::from_int(weight);
        for block in &partition {
            let factors: Vec<AlgElement> = block.iter().map(|&i| elements[i].clone()).collect();
            prod = &prod * &haar_moment(g, &factors);
        }
        acc = &acc + &prod;
    }
    Ok(acc)
}

/// Moment reconstruction from cumulants: sum over partitions of the product
/// of block cumulants. Used as the consistency oracle for [`cumulant`].
pub fn moment_from_cumulants(g: &QuantumGroup, elements: &[AlgElement]) -> Result<CycloNum> {
    let r = elements.len();
    let mut acc = CycloNum::zero();
    for partition in set_partitions(r) {
        let mut prod = CycloNum::one();
        for block in &partition {
            let factors: Vec<AlgElement> = block.iter().map(|&i| elements[i].clone()).collect();
            prod = &prod * &cumulant(g, &factors)?;
        }
        acc = &acc + &prod;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests;
