//! Finite-dimensional *-algebras over Q(zeta_m) given by sparse structure
//! tensors, with multimatrix constructors, tensor products, linear maps and
//! functionals, the left regular representation, and numerical spectra.
//!
//! An [`Algebra`] owns the structure constants c_{ij}^k as a sparse tensor
//! (i, j) -> sparse vector, the unit vector, and the basis image of the
//! involution. Tensor products keep their factors and derive products on the
//! fly: flattening the tensor-square structure tensor of a dual Sekine group
//! would hold tens of millions of entries.

pub mod linalg;
pub mod spectrum;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::exactnum::{CycloNum, Rat};

/// Sparse coefficient vector over a basis; zero entries are never stored.
#[derive(Clone, Default, PartialEq, Eq, Debug)]
pub struct SparseVec {
    entries: BTreeMap<u32, CycloNum>,
}

impl SparseVec {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(idx: u32, val: CycloNum) -> Self {
        let mut v = Self::new();
        v.add_term(idx, val);
        v
    }

    pub fn get(&self, idx: u32) -> CycloNum {
        self.entries.get(&idx).cloned().unwrap_or_else(CycloNum::zero)
    }

    pub fn add_term(&mut self, idx: u32, val: CycloNum) {
        if val.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.entries.entry(idx) {
            Entry::Vacant(e) => {
                e.insert(val);
            }
            Entry::Occupied(mut e) => {
                let sum = &*e.get() + &val;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &SparseVec, c: &CycloNum) {
        if c.is_zero() {
            return;
        }
        for (k, v) in other.iter() {
            self.add_term(*k, v * c);
        }
    }

    pub fn scale(&self, c: &CycloNum) -> SparseVec {
        let mut out = SparseVec::new();
        out.add_scaled(self, c);
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = (&u32, &CycloNum)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = u32> + '_ {
        self.entries.keys().copied()
    }

    /// Dense complex embedding of length `dim`.
    pub fn embed_dense(&self, dim: usize) -> Vec<Complex64> {
        let mut out = vec![Complex64::new(0.0, 0.0); dim];
        for (k, v) in self.iter() {
            out[*k as usize] = v.embed();
        }
        out
    }
}

impl FromIterator<(u32, CycloNum)> for SparseVec {
    fn from_iter<T: IntoIterator<Item = (u32, CycloNum)>>(iter: T) -> Self {
        let mut v = SparseVec::new();
        for (k, c) in iter {
            v.add_term(k, c);
        }
        v
    }
}

enum Kind {
    /// Explicit structure tensor.
    Direct {
        mult: BTreeMap<(u32, u32), SparseVec>,
    },
    /// Lazy tensor product; products and star are derived from the factors.
    Tensor { left: Algebra, right: Algebra },
}

struct AlgebraInner {
    dim: usize,
    conductor: u32,
    labels: Vec<String>,
    label_index: BTreeMap<String, u32>,
    kind: Kind,
    unit: SparseVec,
    /// star(b_j) = sum_k star_basis[j][k] b_k; scalars conjugate separately.
    star_basis: Vec<SparseVec>,
}

/// Immutable finite-dimensional *-algebra handle; cheap to clone.
#[derive(Clone)]
pub struct Algebra {
    inner: Arc<AlgebraInner>,
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Algebra(dim={}, m={})", self.dim(), self.conductor())
    }
}

impl Algebra {
    pub fn from_structure(
        labels: Vec<String>,
        conductor: u32,
        mult: BTreeMap<(u32, u32), SparseVec>,
        unit: SparseVec,
        star_basis: Vec<SparseVec>,
    ) -> Algebra {
        let dim = labels.len();
        assert_eq!(star_basis.len(), dim, "star must cover the whole basis");
        let label_index = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i as u32))
            .collect();
        Algebra {
            inner: Arc::new(AlgebraInner {
                dim,
                conductor,
                labels,
                label_index,
                kind: Kind::Direct { mult },
                unit,
                star_basis,
            }),
        }
    }

    /// Multimatrix algebra: one block per entry of `block_sizes`, basis given
    /// by matrix units in row-major order, star = transpose within the block.
    pub fn multimatrix(block_sizes: &[usize], conductor: u32, labels: Option<Vec<String>>) -> Algebra {
        assert!(!block_sizes.is_empty(), "block_sizes must be nonempty");
        let dim: usize = block_sizes.iter().map(|d| d * d).sum();
        let labels = labels.unwrap_or_else(|| default_multimatrix_labels(block_sizes));
        assert_eq!(labels.len(), dim, "label count must equal the dimension");

        let mut mult: BTreeMap<(u32, u32), SparseVec> = BTreeMap::new();
        let mut unit = SparseVec::new();
        let mut star_basis = vec![SparseVec::new(); dim];
        let mut offset = 0usize;
        for &d in block_sizes {
            let idx = |i: usize, j: usize| (offset + i * d + j) as u32;
            for i in 0..d {
                for j in 0..d {
                    for l in 0..d {
                        // E_{ij} E_{jl} = E_{il}
                        mult.insert(
                            (idx(i, j), idx(j, l)),
                            SparseVec::singleton(idx(i, l), CycloNum::one()),
                        );
                    }
                    star_basis[idx(i, j) as usize] =
                        SparseVec::singleton(idx(j, i), CycloNum::one());
                }
                unit.add_term(idx(i, i), CycloNum::one());
            }
            offset += d * d;
        }
        Algebra::from_structure(labels, conductor, mult, unit, star_basis)
    }

    /// Algebraic tensor product with basis the ordered pairs, componentwise
    /// product and star.
    pub fn tensor(left: &Algebra, right: &Algebra) -> Algebra {
        let dim = left.dim() * right.dim();
        let conductor = num_integer::lcm(left.conductor(), right.conductor());
        let dr = right.dim() as u32;
        let mut labels = Vec::with_capacity(dim);
        for a in left.labels() {
            for b in right.labels() {
                labels.push(format!("{a}(x){b}"));
            }
        }
        let mut unit = SparseVec::new();
        for (i, ci) in left.inner.unit.iter() {
            for (j, cj) in right.inner.unit.iter() {
                unit.add_term(i * dr + j, ci * cj);
            }
        }
        let mut star_basis = Vec::with_capacity(dim);
        for i in 0..left.dim() as u32 {
            for j in 0..right.dim() as u32 {
                let mut v = SparseVec::new();
                for (k1, c1) in left.inner.star_basis[i as usize].iter() {
                    for (k2, c2) in right.inner.star_basis[j as usize].iter() {
                        v.add_term(k1 * dr + k2, c1 * c2);
                    }
                }
                star_basis.push(v);
            }
        }
        let label_index = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i as u32))
            .collect();
        Algebra {
            inner: Arc::new(AlgebraInner {
                dim,
                conductor,
                labels,
                label_index,
                kind: Kind::Tensor {
                    left: left.clone(),
                    right: right.clone(),
                },
                unit,
                star_basis,
            }),
        }
    }

    pub fn dim(&self) -> usize {
        self.inner.dim
    }

    pub fn conductor(&self) -> u32 {
        self.inner.conductor
    }

    pub fn labels(&self) -> &[String] {
        &self.inner.labels
    }

    pub fn label(&self, i: u32) -> &str {
        &self.inner.labels[i as usize]
    }

    pub fn index_of_label(&self, label: &str) -> Option<u32> {
        self.inner.label_index.get(label).copied()
    }

    pub fn tensor_factors(&self) -> Option<(&Algebra, &Algebra)> {
        match &self.inner.kind {
            Kind::Tensor { left, right } => Some((left, right)),
            Kind::Direct { .. } => None,
        }
    }

    pub fn same_as(&self, other: &Algebra) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.dim() == other.dim()
                && self.conductor() == other.conductor()
                && self.inner.labels == other.inner.labels)
    }

    fn check_same(&self, other: &Algebra) -> Result<()> {
        if self.same_as(other) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    /// Invokes `f` with every term of b_i * b_j.
    pub fn for_each_mult_term(&self, i: u32, j: u32, f: &mut dyn FnMut(u32, &CycloNum)) {
        match &self.inner.kind {
            Kind::Direct { mult } => {
                if let Some(v) = mult.get(&(i, j)) {
                    for (k, c) in v.iter() {
                        f(*k, c);
                    }
                }
            }
            Kind::Tensor { left, right } => {
                let dr = right.dim() as u32;
                let (i1, i2) = (i / dr, i % dr);
                let (j1, j2) = (j / dr, j % dr);
                left.for_each_mult_term(i1, j1, &mut |k1, c1| {
                    right.for_each_mult_term(i2, j2, &mut |k2, c2| {
                        let prod = c1 * c2;
                        if !prod.is_zero() {
                            f(k1 * dr + k2, &prod);
                        }
                    });
                });
            }
        }
    }

    pub fn mult_basis(&self, i: u32, j: u32) -> SparseVec {
        let mut out = SparseVec::new();
        self.for_each_mult_term(i, j, &mut |k, c| out.add_term(k, c.clone()));
        out
    }

    /// Iterates the explicit structure-tensor entries. Only direct algebras
    /// carry one; tensor products derive products from their factors.
    pub fn mult_entries(&self) -> Option<impl Iterator<Item = (u32, u32, &SparseVec)>> {
        match &self.inner.kind {
            Kind::Direct { mult } => Some(mult.iter().map(|((i, j), v)| (*i, *j, v))),
            Kind::Tensor { .. } => None,
        }
    }

    fn mult_entry_count(&self) -> Option<usize> {
        match &self.inner.kind {
            Kind::Direct { mult } => Some(mult.len()),
            Kind::Tensor { .. } => None,
        }
    }

    pub fn unit_vec(&self) -> &SparseVec {
        &self.inner.unit
    }

    pub fn star_basis(&self, j: u32) -> &SparseVec {
        &self.inner.star_basis[j as usize]
    }

    pub fn zero_element(&self) -> AlgElement {
        AlgElement {
            algebra: self.clone(),
            coeffs: SparseVec::new(),
        }
    }

    pub fn unit_element(&self) -> AlgElement {
        AlgElement {
            algebra: self.clone(),
            coeffs: self.inner.unit.clone(),
        }
    }

    pub fn basis_element(&self, i: u32) -> AlgElement {
        assert!((i as usize) < self.dim());
        AlgElement {
            algebra: self.clone(),
            coeffs: SparseVec::singleton(i, CycloNum::one()),
        }
    }

    pub fn element_from(&self, coeffs: SparseVec) -> AlgElement {
        debug_assert!(coeffs.support().all(|k| (k as usize) < self.dim()));
        AlgElement {
            algebra: self.clone(),
            coeffs,
        }
    }

    pub fn element_from_terms<I: IntoIterator<Item = (u32, CycloNum)>>(&self, terms: I) -> AlgElement {
        self.element_from(terms.into_iter().collect())
    }
}

/// Element of an [`Algebra`]: a sparse coefficient vector plus the handle.
#[derive(Clone)]
pub struct AlgElement {
    algebra: Algebra,
    coeffs: SparseVec,
}

impl AlgElement {
    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn coeffs(&self) -> &SparseVec {
        &self.coeffs
    }

    pub fn coeff(&self, i: u32) -> CycloNum {
        self.coeffs.get(i)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn checked_add(&self, other: &AlgElement) -> Result<AlgElement> {
        self.algebra.check_same(&other.algebra)?;
        let mut coeffs = self.coeffs.clone();
        coeffs.add_scaled(&other.coeffs, &CycloNum::one());
        Ok(self.algebra.element_from(coeffs))
    }

    pub fn checked_sub(&self, other: &AlgElement) -> Result<AlgElement> {
        self.algebra.check_same(&other.algebra)?;
        let mut coeffs = self.coeffs.clone();
        coeffs.add_scaled(&other.coeffs, &-CycloNum::one());
        Ok(self.algebra.element_from(coeffs))
    }

    pub fn checked_mul(&self, other: &AlgElement) -> Result<AlgElement> {
        self.algebra.check_same(&other.algebra)?;
        let mut acc = SparseVec::new();
        // For sparse structure tensors it is cheaper to walk the tensor and
        // look the factors up than to probe every support pair.
        let pairs = self.coeffs.len() * other.coeffs.len();
        if let Some(entries) = self
            .algebra
            .mult_entry_count()
            .filter(|&count| count < pairs)
            .and_then(|_| self.algebra.mult_entries())
        {
            for (i, j, vec) in entries {
                let Some(ci) = self.coeffs.entries.get(&i) else {
                    continue;
                };
                let Some(cj) = other.coeffs.entries.get(&j) else {
                    continue;
                };
                let c = ci * cj;
                if !c.is_zero() {
                    acc.add_scaled(vec, &c);
                }
            }
            return Ok(self.algebra.element_from(acc));
        }
        for (i, ci) in self.coeffs.iter() {
            for (j, cj) in other.coeffs.iter() {
                let c = ci * cj;
                if c.is_zero() {
                    continue;
                }
                self.algebra
                    .for_each_mult_term(*i, *j, &mut |k, v| acc.add_term(k, v * &c));
            }
        }
        Ok(self.algebra.element_from(acc))
    }

    /// The involution: conjugate coefficients against the basis star images.
    pub fn star(&self) -> AlgElement {
        let mut acc = SparseVec::new();
        for (j, c) in self.coeffs.iter() {
            acc.add_scaled(self.algebra.star_basis(*j), &c.conj());
        }
        self.algebra.element_from(acc)
    }

    pub fn scale(&self, c: &CycloNum) -> AlgElement {
        self.algebra.element_from(self.coeffs.scale(c))
    }

    pub fn scale_rat(&self, r: &Rat) -> AlgElement {
        self.scale(&CycloNum::from_rat(r.clone()))
    }

    pub fn pow(&self, e: u64) -> AlgElement {
        let mut acc = self.algebra.unit_element();
        let mut base = self.clone();
        let mut e = e;
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

    pub fn commutes_with(&self, other: &AlgElement) -> bool {
        (self * other) == (other * self)
    }

    /// a a* = a* a, exactly.
    pub fn is_normal(&self) -> bool {
        let s = self.star();
        (self * &s) == (&s * self)
    }

    pub fn is_self_adjoint(&self) -> bool {
        self.star() == *self
    }

    pub fn embed_dense(&self) -> Vec<Complex64> {
        self.coeffs.embed_dense(self.algebra.dim())
    }
}

impl PartialEq for AlgElement {
    fn eq(&self, other: &Self) -> bool {
        self.algebra.same_as(&other.algebra) && self.coeffs == other.coeffs
    }
}

impl Eq for AlgElement {}

macro_rules! forward_elem_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl std::ops::$trait<&AlgElement> for &AlgElement {
            type Output = AlgElement;
            fn $method(self, rhs: &AlgElement) -> AlgElement {
                self.$checked(rhs).expect("algebra mismatch")
            }
        }
        impl std::ops::$trait for AlgElement {
            type Output = AlgElement;
            fn $method(self, rhs: AlgElement) -> AlgElement {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_elem_binop!(Add, add, checked_add);
forward_elem_binop!(Sub, sub, checked_sub);
forward_elem_binop!(Mul, mul, checked_mul);

impl std::ops::Neg for &AlgElement {
    type Output = AlgElement;
    fn neg(self) -> AlgElement {
        self.scale(&-CycloNum::one())
    }
}

impl fmt::Display for AlgElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if c.is_one() {
                write!(f, "{}", self.algebra.label(*i))?;
            } else {
                write!(f, "({})*{}", c, self.algebra.label(*i))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for AlgElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgElement({self})")
    }
}

/// Linear map between algebras, one sparse column per source basis element.
#[derive(Clone)]
pub struct LinearMap {
    source: Algebra,
    target: Algebra,
    cols: Vec<SparseVec>,
}

impl LinearMap {
    pub fn new(source: Algebra, target: Algebra, cols: Vec<SparseVec>) -> Self {
        assert_eq!(cols.len(), source.dim(), "one column per source basis element");
        LinearMap {
            source,
            target,
            cols,
        }
    }

    pub fn source(&self) -> &Algebra {
        &self.source
    }

    pub fn target(&self) -> &Algebra {
        &self.target
    }

    pub fn column(&self, j: u32) -> &SparseVec {
        &self.cols[j as usize]
    }

    pub fn apply(&self, x: &AlgElement) -> AlgElement {
        debug_assert!(x.algebra().same_as(&self.source));
        let mut acc = SparseVec::new();
        for (j, c) in x.coeffs().iter() {
            acc.add_scaled(&self.cols[*j as usize], c);
        }
        self.target.element_from(acc)
    }
}

/// Linear functional as a dense row vector of exact scalars.
#[derive(Clone)]
pub struct Functional {
    algebra: Algebra,
    weights: Vec<CycloNum>,
}

impl Functional {
    pub fn new(algebra: Algebra, weights: Vec<CycloNum>) -> Self {
        assert_eq!(weights.len(), algebra.dim());
        Functional { algebra, weights }
    }

    pub fn from_terms<I: IntoIterator<Item = (u32, CycloNum)>>(algebra: Algebra, terms: I) -> Self {
        let mut weights = vec![CycloNum::zero(); algebra.dim()];
        for (i, c) in terms {
            weights[i as usize] = c;
        }
        Functional { algebra, weights }
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn weight(&self, i: u32) -> &CycloNum {
        &self.weights[i as usize]
    }

    pub fn weights(&self) -> &[CycloNum] {
        &self.weights
    }

    pub fn apply(&self, x: &AlgElement) -> CycloNum {
        debug_assert!(x.algebra().same_as(&self.algebra));
        let mut acc = CycloNum::zero();
        for (i, c) in x.coeffs().iter() {
            let w = &self.weights[*i as usize];
            if !w.is_zero() {
                acc = &acc + &(c * w);
            }
        }
        acc
    }
}

/// Matrix of x -> a*x in the algebra basis, exact, column j = a * b_j.
pub fn left_regular(a: &AlgElement) -> Vec<Vec<CycloNum>> {
    let dim = a.algebra().dim();
    let mut mat = vec![vec![CycloNum::zero(); dim]; dim];
    for j in 0..dim as u32 {
        let col = a * &a.algebra().basis_element(j);
        for (k, c) in col.coeffs().iter() {
            mat[*k as usize][j as usize] = c.clone();
        }
    }
    mat
}

fn default_multimatrix_labels(block_sizes: &[usize]) -> Vec<String> {
    let matrix_blocks = block_sizes.iter().filter(|&&d| d > 1).count();
    let mut labels = Vec::new();
    let mut scalar_count = 0usize;
    let mut matrix_count = 0usize;
    for &d in block_sizes {
        if d == 1 {
            scalar_count += 1;
            labels.push(format!("e{scalar_count}"));
        } else {
            matrix_count += 1;
            for i in 1..=d {
                for j in 1..=d {
                    if matrix_blocks == 1 {
                        labels.push(format!("E{i}{j}"));
                    } else {
                        labels.push(format!("M{matrix_count}:E{i}{j}"));
                    }
                }
            }
        }
    }
    labels
}

#[cfg(test)]
mod tests;
