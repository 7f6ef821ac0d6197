//! Corepresentation matrices over a quantum group: the catalogs of the
//! Kac-Paljutkin and Sekine groups and their duals, matrix powers and traces,
//! intertwiner spaces, irreducibility and equivalence, and completeness
//! certification by dimension count plus Schur orthogonality.

pub mod kp;
pub mod sekine;

use serde_json::{json, Value};

use crate::algebra::linalg::nullspace;
use crate::algebra::AlgElement;
use crate::error::{Error, Result};
use crate::exactnum::{scalar_to_json, CycloNum};
use crate::qgroup::QuantumGroup;
use crate::report::Report;

pub use kp::{kp_catalog, kp_fundamental, kp_generation_check, kp_grouplikes};
pub use sekine::{
    dual_catalog, dual_fundamental, sekine_catalog, sekine_one_dim, sekine_two_dim,
    two_dim_v_max, OneDimKind, Sign,
};

/// Default cap on matrix powers; moment orders never need more.
pub const DEFAULT_MAX_POWER: u64 = 64;

/// Square grid of algebra elements. Constructed grids are corepresentation
/// candidates; powers of a corepresentation are grids but generally not
/// corepresentations themselves.
#[derive(Clone)]
pub struct Corep {
    group: QuantumGroup,
    d: usize,
    entries: Vec<AlgElement>, // row-major d x d
}

impl Corep {
    pub fn new(group: QuantumGroup, d: usize, entries: Vec<AlgElement>) -> Self {
        assert_eq!(entries.len(), d * d);
        Corep { group, d, entries }
    }

    /// One-dimensional grid from a single element.
    pub fn one_dim(group: QuantumGroup, g: AlgElement) -> Self {
        Corep {
            group,
            d: 1,
            entries: vec![g],
        }
    }

    pub fn identity_grid(group: &QuantumGroup, d: usize) -> Self {
        let mut entries = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                entries.push(if i == j {
                    group.algebra().unit_element()
                } else {
                    group.algebra().zero_element()
                });
            }
        }
        Corep::new(group.clone(), d, entries)
    }

    pub fn group(&self) -> &QuantumGroup {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn entry(&self, i: usize, j: usize) -> &AlgElement {
        &self.entries[i * self.d + j]
    }

    pub fn matmul(&self, other: &Corep) -> Corep {
        assert_eq!(self.d, other.d, "grid dimensions must agree");
        let d = self.d;
        let mut entries = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                let mut acc = self.group.algebra().zero_element();
                for k in 0..d {
                    acc = &acc + &(self.entry(i, k) * other.entry(k, j));
                }
                entries.push(acc);
            }
        }
        Corep::new(self.group.clone(), d, entries)
    }

    /// Exact matrix power in M_d(A); power 0 is the identity grid.
    pub fn power(&self, k: u64) -> Corep {
        assert!(k <= DEFAULT_MAX_POWER, "power above the configured cap");
        let mut acc = Corep::identity_grid(&self.group, self.d);
        for _ in 0..k {
            acc = acc.matmul(self);
        }
        acc
    }

    /// chi(M) = sum of the diagonal entries.
    pub fn trace(&self) -> AlgElement {
        let mut acc = self.group.algebra().zero_element();
        for i in 0..self.d {
            acc = &acc + self.entry(i, i);
        }
        acc
    }

    /// Entry-wise star (the conjugate corepresentation grid).
    pub fn conjugate(&self) -> Corep {
        Corep::new(
            self.group.clone(),
            self.d,
            self.entries.iter().map(|e| e.star()).collect(),
        )
    }

    /// Block direct sum with another grid over the same group.
    pub fn direct_sum(&self, other: &Corep) -> Corep {
        let d = self.d + other.d;
        let zero = self.group.algebra().zero_element();
        let mut entries = vec![zero; d * d];
        for i in 0..self.d {
            for j in 0..self.d {
                entries[i * d + j] = self.entry(i, j).clone();
            }
        }
        for i in 0..other.d {
            for j in 0..other.d {
                entries[(self.d + i) * d + (self.d + j)] = other.entry(i, j).clone();
            }
        }
        Corep::new(self.group.clone(), d, entries)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.d).all(|i| (0..self.d).all(|j| i == j || self.entry(i, j).is_zero()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorepReport {
    pub corep_identity: bool,
    pub counit_identity: bool,
    pub unitary: bool,
    pub invertible: bool,
}

impl CorepReport {
    pub fn all(&self) -> bool {
        self.corep_identity && self.counit_identity && self.unitary && self.invertible
    }
}

/// Exact check of the corepresentation identity, the counit identity,
/// unitarity, and invertibility in M_d(A).
pub fn is_corep(u: &Corep) -> CorepReport {
    let g = u.group();
    let d = u.dim();
    let mut corep_identity = true;
    let mut counit_identity = true;
    for i in 0..d {
        for j in 0..d {
            let lhs = g.delta().apply(u.entry(i, j));
            let mut rhs = g.tensor_sq().zero_element();
            for k in 0..d {
                rhs = &rhs + &g.elem_tensor(u.entry(i, k), u.entry(k, j));
            }
            if lhs != rhs {
                corep_identity = false;
            }
            let eps = g.counit().apply(u.entry(i, j));
            let expected = if i == j {
                CycloNum::one()
            } else {
                CycloNum::zero()
            };
            if eps != expected {
                counit_identity = false;
            }
        }
    }
    let unitary = is_unitary(u);
    let invertible = unitary || has_exact_inverse(u);
    CorepReport {
        corep_identity,
        counit_identity,
        unitary,
        invertible,
    }
}

/// U U* = U* U = identity grid, exactly (entry-wise both orders).
pub fn is_unitary(u: &Corep) -> bool {
    let g = u.group();
    let d = u.dim();
    let unit = g.algebra().unit_element();
    let zero = g.algebra().zero_element();
    for i in 0..d {
        for j in 0..d {
            let mut row = zero.clone();
            let mut col = zero.clone();
            for k in 0..d {
                row = &row + &(u.entry(i, k) * &u.entry(j, k).star());
                col = &col + &(&u.entry(k, i).star() * u.entry(k, j));
            }
            let expected = if i == j { &unit } else { &zero };
            if &row != expected || &col != expected {
                return false;
            }
        }
    }
    true
}

/// Solves U X = I exactly in M_d(A) and confirms X U = I.
fn has_exact_inverse(u: &Corep) -> bool {
    let g = u.group();
    let d = u.dim();
    let dim = g.dim();
    let unknowns = d * d * dim;
    // x[(k, j, c)] = coefficient of basis c in X_{kj}
    let xi = |k: usize, j: usize, c: usize| k * d * dim + j * dim + c;
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for i in 0..d {
        for j in 0..d {
            // sum_k U_{ik} X_{kj} = delta_{ij} 1
            let mut coeff_rows = vec![vec![CycloNum::zero(); unknowns]; dim];
            for k in 0..d {
                for c in 0..dim {
                    let prod = u.entry(i, k) * &g.algebra().basis_element(c as u32);
                    for (t, v) in prod.coeffs().iter() {
                        let slot = &mut coeff_rows[*t as usize][xi(k, j, c)];
                        *slot = &*slot + v;
                    }
                }
            }
            let unit = g.algebra().unit_vec();
            for (t, row) in coeff_rows.into_iter().enumerate() {
                rows.push(row);
                rhs.push(if i == j {
                    unit.get(t as u32)
                } else {
                    CycloNum::zero()
                });
            }
        }
    }
    let Some(sol) = crate::algebra::linalg::solve(&rows, &rhs) else {
        return false;
    };
    let mut inv_entries: Vec<AlgElement> = Vec::with_capacity(d * d);
    for k in 0..d {
        for j in 0..d {
            inv_entries.push(g.algebra().element_from_terms(
                (0..dim).map(|c| (c as u32, sol[xi(k, j, c)].clone())),
            ));
        }
    }
    let inv = Corep::new(u.group().clone(), d, inv_entries);
    let id = Corep::identity_grid(u.group(), d);
    let left = inv.matmul(u);
    (0..d).all(|i| (0..d).all(|j| left.entry(i, j) == id.entry(i, j)))
}

/// Exact basis of the intertwiner space Hom(U, V) = {T : (T (x) 1) U = V (T (x) 1)},
/// scalar d_V x d_U matrices over the cyclotomic field.
pub fn intertwiners(u: &Corep, v: &Corep) -> Vec<Vec<Vec<CycloNum>>> {
    assert!(
        u.group().algebra().same_as(v.group().algebra()),
        "intertwiners need a common group"
    );
    let g = u.group();
    let dim = g.dim();
    let (du, dv) = (u.dim(), v.dim());
    let unknowns = dv * du;
    let ti = |r: usize, c: usize| r * du + c;
    let mut rows = Vec::new();
    for i in 0..dv {
        for j in 0..du {
            // sum_c T_{ic} U_{cj} - sum_r V_{ir} T_{rj} = 0
            let mut coeff_rows = vec![vec![CycloNum::zero(); unknowns]; dim];
            for c in 0..du {
                for (t, val) in u.entry(c, j).coeffs().iter() {
                    let slot = &mut coeff_rows[*t as usize][ti(i, c)];
                    *slot = &*slot + val;
                }
            }
            for r in 0..dv {
                for (t, val) in v.entry(i, r).coeffs().iter() {
                    let slot = &mut coeff_rows[*t as usize][ti(r, j)];
                    *slot = &*slot - val;
                }
            }
            for row in coeff_rows {
                if row.iter().any(|c| !c.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    nullspace(&rows, unknowns)
        .into_iter()
        .map(|flat| {
            (0..dv)
                .map(|r| (0..du).map(|c| flat[ti(r, c)].clone()).collect())
                .collect()
        })
        .collect()
}

pub fn is_irreducible(u: &Corep) -> bool {
    intertwiners(u, u).len() == 1
}

/// Equivalence test for irreducible corepresentations: a nonzero intertwiner
/// space decides over the exact field, no numerical thresholds.
pub fn equivalent(u: &Corep, v: &Corep) -> bool {
    !intertwiners(u, v).is_empty()
}

/// A claimed-complete family of irreducible unitary corepresentations.
#[derive(Clone)]
pub struct IrrepCatalog {
    pub group: QuantumGroup,
    pub items: Vec<(String, Corep)>,
}

impl IrrepCatalog {
    pub fn find(&self, label: &str) -> Option<&Corep> {
        self.items
            .iter()
            .find(|(l, _)| l == label)
            .map(|(_, c)| c)
    }

    pub fn labels(&self) -> Vec<&str> {
        self.items.iter().map(|(l, _)| l.as_str()).collect()
    }

    pub fn sum_of_squares(&self) -> usize {
        self.items.iter().map(|(_, c)| c.dim() * c.dim()).sum()
    }

    /// Catalog export as a JSON list of {label, d, entries}; each entry is a
    /// basis-coefficient map keyed by the basis labels.
    pub fn to_json(&self) -> Value {
        let alg = self.group.algebra();
        Value::Array(
            self.items
                .iter()
                .map(|(label, c)| {
                    let entries: Vec<Value> = c
                        .entries
                        .iter()
                        .map(|e| {
                            let mut map = serde_json::Map::new();
                            for (k, v) in e.coeffs().iter() {
                                map.insert(alg.label(*k).to_string(), scalar_to_json(v));
                            }
                            Value::Object(map)
                        })
                        .collect();
                    json!({ "label": label, "d": c.dim(), "entries": entries })
                })
                .collect(),
        )
    }
}

/// Completeness certificate: every entry is a unitary corepresentation, the
/// squared dimensions sum to dim(A), characters are Schur-orthonormal, and
/// distinct entries admit no intertwiners.
pub fn verify_complete(catalog: &IrrepCatalog) -> Report {
    let g = &catalog.group;
    let mut report = Report::new(format!("completeness: {}", g.name()));
    let mut all_corep = true;
    let mut first_bad = String::new();
    for (label, c) in &catalog.items {
        let r = is_corep(c);
        if !(r.all()) {
            all_corep = false;
            if first_bad.is_empty() {
                first_bad = label.clone();
            }
        }
    }
    report.push(
        "all entries are unitary corepresentations",
        all_corep,
        first_bad,
    );

    let total = catalog.sum_of_squares();
    report.push(
        "sum of squared dimensions",
        total == g.dim(),
        format!("sum d^2 = {total}, dim = {}", g.dim()),
    );

    let chars: Vec<AlgElement> = catalog.items.iter().map(|(_, c)| c.trace()).collect();
    let mut ortho_ok = true;
    let mut ortho_detail = String::new();
    for (a, xa) in chars.iter().enumerate() {
        for (b, xb) in chars.iter().enumerate() {
            let val = g.haar_of(&(xa * &xb.star()));
            let expected = if a == b {
                CycloNum::one()
            } else {
                CycloNum::zero()
            };
            if val != expected {
                ortho_ok = false;
                if ortho_detail.is_empty() {
                    ortho_detail = format!(
                        "h(chi_{} chi_{}*) = {}",
                        catalog.items[a].0, catalog.items[b].0, val
                    );
                }
            }
        }
    }
    report.push("character orthonormality", ortho_ok, ortho_detail);

    let mut inequivalent = true;
    let mut pair_detail = String::new();
    for a in 0..catalog.items.len() {
        for b in (a + 1)..catalog.items.len() {
            let dim = intertwiners(&catalog.items[a].1, &catalog.items[b].1).len();
            if dim != 0 {
                inequivalent = false;
                if pair_detail.is_empty() {
                    pair_detail = format!(
                        "intertwiner space of ({}, {}) has dimension {dim}",
                        catalog.items[a].0, catalog.items[b].0
                    );
                }
            }
        }
    }
    report.push("pairwise inequivalent", inequivalent, pair_detail);
    report
}

/// Looks up a catalog corepresentation by label, accepting the CLI alias
/// "fundamental" for the distinguished generator.
pub fn resolve_rep<'a>(catalog: &'a IrrepCatalog, label: &str) -> Result<&'a Corep> {
    let wanted = match label {
        "fundamental" => match catalog.group.name() {
            n if n.starts_with("dual(") => "Xhat",
            "kp" => "X",
            _ => label,
        },
        other => other,
    };
    catalog.find(wanted).ok_or_else(|| {
        Error::InvalidParameter(format!(
            "unknown representation {label:?}; catalog has {:?}",
            catalog.labels()
        ))
    })
}

#[cfg(test)]
mod tests;
