//! JSON fixture format for algebras and quantum groups.
//!
//! The algebra section is
//! `{ "dim", "labels", "m", "mult": [[i,j,k,coeff],...], "unit": [[k,coeff],...],
//!    "star": [[i,j,coeff],...] }`
//! where `star` rows say star(b_j) contains coeff * b_i (scalars are
//! conjugated on application). A quantum-group fixture extends it with
//! `"delta": [[src,t1,t2,coeff],...]`, `"counit"`, `"antipode"` (same triple
//! shape as `star`) and `"haar"`. Coefficients are bare "p/q" strings for
//! rationals and `{ "m", "coeffs" }` objects otherwise. All sections are
//! emitted in sorted index order, so identical inputs serialize identically.

use std::collections::BTreeMap;
use std::path::Path;

use serde_json::{json, Value};

use crate::algebra::{Algebra, SparseVec};
use crate::error::{Error, Result};
use crate::exactnum::{scalar_from_json, scalar_to_json, CycloNum};

use super::QuantumGroup;

fn vec_entries(v: &SparseVec) -> Value {
    Value::Array(
        v.iter()
            .map(|(k, c)| json!([k, scalar_to_json(c)]))
            .collect(),
    )
}

fn matrix_entries<'a, I: Iterator<Item = (u32, &'a SparseVec)>>(cols: I) -> Value {
    let mut rows = Vec::new();
    for (j, col) in cols {
        for (i, c) in col.iter() {
            rows.push(json!([i, j, scalar_to_json(c)]));
        }
    }
    Value::Array(rows)
}

pub fn algebra_to_json(alg: &Algebra) -> Result<Value> {
    let mult_iter = alg.mult_entries().ok_or_else(|| {
        Error::InvalidParameter("only direct algebras serialize to fixtures".into())
    })?;
    let mut mult_rows = Vec::new();
    for (i, j, v) in mult_iter {
        for (k, c) in v.iter() {
            mult_rows.push(json!([i, j, k, scalar_to_json(c)]));
        }
    }
    let star = matrix_entries((0..alg.dim() as u32).map(|j| (j, alg.star_basis(j))));
    Ok(json!({
        "dim": alg.dim(),
        "m": alg.conductor(),
        "labels": alg.labels(),
        "mult": Value::Array(mult_rows),
        "unit": vec_entries(alg.unit_vec()),
        "star": star,
    }))
}

pub fn group_to_json(g: &QuantumGroup) -> Result<Value> {
    let mut root = algebra_to_json(g.algebra())?;
    let obj = root.as_object_mut().expect("algebra fixture is an object");
    let d = g.dim() as u32;
    let mut delta_rows = Vec::new();
    for src in 0..d {
        for (pair, c) in g.delta().column(src).iter() {
            delta_rows.push(json!([src, pair / d, pair % d, scalar_to_json(c)]));
        }
    }
    obj.insert("name".into(), json!(g.name()));
    obj.insert("delta".into(), Value::Array(delta_rows));
    obj.insert(
        "counit".into(),
        Value::Array(
            g.counit()
                .weights()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| json!([k, scalar_to_json(c)]))
                .collect(),
        ),
    );
    obj.insert(
        "antipode".into(),
        matrix_entries((0..d).map(|j| (j, g.antipode().column(j)))),
    );
    obj.insert(
        "haar".into(),
        Value::Array(
            g.haar()
                .weights()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| json!([k, scalar_to_json(c)]))
                .collect(),
        ),
    );
    Ok(root)
}

fn field<'a>(v: &'a Value, name: &str) -> Result<&'a Value> {
    v.get(name)
        .ok_or_else(|| Error::Fixture(format!("missing field {name:?}")))
}

fn as_u32(v: &Value, what: &str) -> Result<u32> {
    v.as_u64()
        .and_then(|x| u32::try_from(x).ok())
        .ok_or_else(|| Error::Fixture(format!("{what} must be a small nonnegative integer")))
}

fn parse_vec(v: &Value, dim: usize, what: &str) -> Result<SparseVec> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Fixture(format!("{what} must be an array")))?;
    let mut out = SparseVec::new();
    for row in arr {
        let pair = row
            .as_array()
            .filter(|r| r.len() == 2)
            .ok_or_else(|| Error::Fixture(format!("{what} rows must be [index, coeff]")))?;
        let k = as_u32(&pair[0], what)?;
        if k as usize >= dim {
            return Err(Error::Fixture(format!("{what} index {k} out of range")));
        }
        out.add_term(k, scalar_from_json(&pair[1])?);
    }
    Ok(out)
}

fn parse_cols(v: &Value, dim: usize, what: &str) -> Result<Vec<SparseVec>> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Fixture(format!("{what} must be an array")))?;
    let mut cols = vec![SparseVec::new(); dim];
    for row in arr {
        let triple = row
            .as_array()
            .filter(|r| r.len() == 3)
            .ok_or_else(|| Error::Fixture(format!("{what} rows must be [i, j, coeff]")))?;
        let i = as_u32(&triple[0], what)?;
        let j = as_u32(&triple[1], what)?;
        if i as usize >= dim || j as usize >= dim {
            return Err(Error::Fixture(format!("{what} index out of range")));
        }
        cols[j as usize].add_term(i, scalar_from_json(&triple[2])?);
    }
    Ok(cols)
}

pub fn algebra_from_json(v: &Value) -> Result<Algebra> {
    let dim = field(v, "dim")?
        .as_u64()
        .ok_or_else(|| Error::Fixture("dim must be an integer".into()))? as usize;
    let m = as_u32(field(v, "m")?, "m")?;
    if m == 0 {
        return Err(Error::Fixture("conductor must be positive".into()));
    }
    let labels: Vec<String> = serde_json::from_value(field(v, "labels")?.clone())
        .map_err(|e| Error::Fixture(format!("labels: {e}")))?;
    if labels.len() != dim {
        return Err(Error::Fixture("labels length must equal dim".into()));
    }
    let mult_arr = field(v, "mult")?
        .as_array()
        .ok_or_else(|| Error::Fixture("mult must be an array".into()))?;
    let mut mult: BTreeMap<(u32, u32), SparseVec> = BTreeMap::new();
    for row in mult_arr {
        let q = row
            .as_array()
            .filter(|r| r.len() == 4)
            .ok_or_else(|| Error::Fixture("mult rows must be [i, j, k, coeff]".into()))?;
        let i = as_u32(&q[0], "mult")?;
        let j = as_u32(&q[1], "mult")?;
        let k = as_u32(&q[2], "mult")?;
        if [i, j, k].iter().any(|&x| x as usize >= dim) {
            return Err(Error::Fixture("mult index out of range".into()));
        }
        mult.entry((i, j))
            .or_insert_with(SparseVec::new)
            .add_term(k, scalar_from_json(&q[3])?);
    }
    let unit = parse_vec(field(v, "unit")?, dim, "unit")?;
    let star = parse_cols(field(v, "star")?, dim, "star")?;
    Ok(Algebra::from_structure(labels, m, mult, unit, star))
}

pub fn group_from_json(v: &Value) -> Result<QuantumGroup> {
    let alg = algebra_from_json(v)?;
    let dim = alg.dim();
    let d = dim as u32;
    let delta_arr = field(v, "delta")?
        .as_array()
        .ok_or_else(|| Error::Fixture("delta must be an array".into()))?;
    let mut delta = vec![SparseVec::new(); dim];
    for row in delta_arr {
        let q = row
            .as_array()
            .filter(|r| r.len() == 4)
            .ok_or_else(|| Error::Fixture("delta rows must be [src, t1, t2, coeff]".into()))?;
        let src = as_u32(&q[0], "delta")?;
        let t1 = as_u32(&q[1], "delta")?;
        let t2 = as_u32(&q[2], "delta")?;
        if [src, t1, t2].iter().any(|&x| x as usize >= dim) {
            return Err(Error::Fixture("delta index out of range".into()));
        }
        delta[src as usize].add_term(t1 * d + t2, scalar_from_json(&q[3])?);
    }
    let counit_vec = parse_vec(field(v, "counit")?, dim, "counit")?;
    let counit: Vec<CycloNum> = (0..d).map(|k| counit_vec.get(k)).collect();
    let antipode = parse_cols(field(v, "antipode")?, dim, "antipode")?;
    let haar_vec = parse_vec(field(v, "haar")?, dim, "haar")?;
    let haar: Vec<CycloNum> = (0..d).map(|k| haar_vec.get(k)).collect();
    let name = v
        .get("name")
        .and_then(|n| n.as_str())
        .unwrap_or("file")
        .to_string();
    Ok(QuantumGroup::new(name, alg, delta, counit, antipode, haar))
}

pub fn write_group(g: &QuantumGroup, path: &Path) -> Result<()> {
    let v = group_to_json(g)?;
    std::fs::write(path, serde_json::to_string_pretty(&v)? + "\n")?;
    Ok(())
}

pub fn read_group(path: &Path) -> Result<QuantumGroup> {
    let text = std::fs::read_to_string(path)?;
    let v: Value = serde_json::from_str(&text)?;
    group_from_json(&v)
}
