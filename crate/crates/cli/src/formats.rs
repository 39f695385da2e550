//! JSON file formats: algebras, Lie–Yamaguti tensors, sections, subspaces and
//! graph structures.

use std::collections::HashSet;

use leibniz_forge::courant::{Bivector, OneForm, Section, TwoForm, VectorField};
use leibniz_forge::lie_yamaguti::LieYamaguti;
use leibniz_forge::linalg::{format_rational, int, parse_rational, Matrix, Rational};
use leibniz_forge::poly::Poly;
use leibniz_forge::subspace::Subspace;
use leibniz_forge::StructureAlgebra;
use num_traits::Zero;
use serde::Deserialize;
use serde_json::{json, Map, Value};

use crate::error::CliError;
use crate::poly_expr::parse_poly_expr;

fn semantic(msg: impl Into<String>) -> CliError {
    CliError::Semantic(msg.into())
}

/// A rational given as "p/q", an integer string, or a JSON integer.
pub fn rational_from_json(v: &Value, context: &str) -> Result<Rational, CliError> {
    match v {
        Value::String(s) => parse_rational(s).map_err(|_| semantic(format!("{context}: invalid rational `{s}`"))),
        Value::Number(n) => match n.as_i64() {
            Some(i) => Ok(int(i)),
            None => Err(semantic(format!("{context}: `{n}` is not exact; write rationals as \"p/q\""))),
        },
        other => Err(semantic(format!("{context}: expected a rational, found {other}"))),
    }
}

pub fn rational_json(r: &Rational) -> Value {
    Value::String(format_rational(r))
}

pub fn vector_json(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(rational_json).collect())
}

pub fn matrix_json(m: &Matrix) -> Value {
    Value::Array((0..m.rows()).map(|r| vector_json(m.row(r))).collect())
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraFile {
    name: Option<String>,
    dim: usize,
    basis: Vec<String>,
    products: Vec<ProductEntry>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ProductEntry {
    left: String,
    right: String,
    result: Map<String, Value>,
}

pub fn parse_algebra(text: &str) -> Result<StructureAlgebra, CliError> {
    let file: AlgebraFile = serde_json::from_str(text)?;
    let n = file.dim;
    if file.basis.len() != n {
        return Err(semantic(format!("dim is {n} but {} basis labels are given", file.basis.len())));
    }
    let index = |label: &str, entry: usize| {
        file.basis
            .iter()
            .position(|b| b == label)
            .ok_or_else(|| semantic(format!("products[{entry}]: unknown basis label `{label}`")))
    };
    let mut seen = HashSet::new();
    let mut constants = vec![Rational::zero(); n * n * n];
    for (e, p) in file.products.iter().enumerate() {
        let (i, j) = (index(&p.left, e)?, index(&p.right, e)?);
        if !seen.insert((i, j)) {
            return Err(semantic(format!("products[{e}]: duplicate entry for ({}, {})", p.left, p.right)));
        }
        for (label, value) in &p.result {
            let k = index(label, e)?;
            constants[(i * n + j) * n + k] = rational_from_json(value, &format!("products[{e}].result.{label}"))?;
        }
    }
    let name = file.name.unwrap_or_else(|| "algebra".to_string());
    Ok(StructureAlgebra::new(name, file.basis, constants)?)
}

pub fn algebra_json(a: &StructureAlgebra) -> Value {
    let names = a.basis_names();
    let n = a.dim();
    let mut products = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let row = a.basis_product(i, j);
            if row.iter().all(Zero::is_zero) {
                continue;
            }
            let mut result = Map::new();
            for (k, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    result.insert(names[k].clone(), rational_json(c));
                }
            }
            products.push(json!({"left": names[i], "right": names[j], "result": result}));
        }
    }
    json!({"name": a.name(), "dim": n, "basis": names, "products": products})
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct LyFile {
    dim: usize,
    #[serde(default)]
    binary: Vec<Vec<Value>>,
    #[serde(default)]
    ternary: Vec<Vec<Value>>,
}

fn ly_entries(
    rows: &[Vec<Value>],
    arity: usize,
    dim: usize,
    field: &str,
) -> Result<Vec<(Vec<usize>, Rational)>, CliError> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for (e, row) in rows.iter().enumerate() {
        if row.len() != arity + 1 {
            return Err(semantic(format!("{field}[{e}]: expected {arity} indices and a value")));
        }
        let idx: Vec<usize> = row[..arity]
            .iter()
            .map(|v| match v.as_u64() {
                Some(i) if (i as usize) < dim => Ok(i as usize),
                _ => Err(semantic(format!("{field}[{e}]: index {v} out of range 0..{dim}"))),
            })
            .collect::<Result<_, _>>()?;
        if !seen.insert(idx.clone()) {
            return Err(semantic(format!("{field}[{e}]: duplicate entry {idx:?}")));
        }
        out.push((idx, rational_from_json(&row[arity], &format!("{field}[{e}]"))?));
    }
    Ok(out)
}

pub fn parse_ly(text: &str) -> Result<LieYamaguti, CliError> {
    let file: LyFile = serde_json::from_str(text)?;
    let n = file.dim;
    let b: Vec<_> = ly_entries(&file.binary, 3, n, "binary")?.into_iter().map(|(i, c)| (i[0], i[1], i[2], c)).collect();
    let t: Vec<_> =
        ly_entries(&file.ternary, 4, n, "ternary")?.into_iter().map(|(i, c)| (i[0], i[1], i[2], i[3], c)).collect();
    Ok(LieYamaguti::from_entries(n, &b, &t)?)
}

pub fn ly_json(l: &LieYamaguti) -> Value {
    let n = l.dim();
    let mut binary = Vec::new();
    for (idx, c) in l.binary_constants().iter().enumerate() {
        if !c.is_zero() {
            binary.push(json!([idx / (n * n), (idx / n) % n, idx % n, format_rational(c)]));
        }
    }
    let mut ternary = Vec::new();
    for (idx, c) in l.ternary_constants().iter().enumerate() {
        if !c.is_zero() {
            ternary.push(json!([idx / (n * n * n), (idx / (n * n)) % n, (idx / n) % n, idx % n, format_rational(c)]));
        }
    }
    json!({"dim": n, "binary": binary, "ternary": ternary})
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SectionFile {
    vars: Vec<String>,
    #[serde(default)]
    vector_field: Map<String, Value>,
    #[serde(default)]
    one_form: Map<String, Value>,
}

fn components(map: &Map<String, Value>, vars: &[String], field: &str) -> Result<Vec<Poly>, CliError> {
    let n = vars.len();
    let mut out = vec![Poly::zero(n); n];
    for (key, value) in map {
        let i =
            vars.iter().position(|v| v == key).ok_or_else(|| semantic(format!("{field}: unknown variable `{key}`")))?;
        let text = value.as_str().ok_or_else(|| semantic(format!("{field}.{key}: expected a polynomial string")))?;
        out[i] = parse_poly_expr(text, vars)?;
    }
    Ok(out)
}

fn check_vars(vars: &[String]) -> Result<(), CliError> {
    let distinct: HashSet<&String> = vars.iter().collect();
    if vars.is_empty() || distinct.len() != vars.len() {
        return Err(semantic("vars must be a non-empty list of distinct names"));
    }
    Ok(())
}

pub fn parse_section(text: &str) -> Result<(Vec<String>, Section), CliError> {
    let file: SectionFile = serde_json::from_str(text)?;
    check_vars(&file.vars)?;
    let vf = VectorField::new(components(&file.vector_field, &file.vars, "vector_field")?)?;
    let form = OneForm::new(components(&file.one_form, &file.vars, "one_form")?)?;
    Ok((file.vars, Section::new(vf, form)?))
}

fn poly_map(polys: &[Poly], vars: &[String]) -> Value {
    let mut m = Map::new();
    for (v, p) in vars.iter().zip(polys) {
        m.insert(v.clone(), Value::String(p.format_with(vars)));
    }
    Value::Object(m)
}

pub fn section_json(s: &Section, vars: &[String]) -> Value {
    json!({
        "vars": vars,
        "vector_field": poly_map(s.vf.components(), vars),
        "one_form": poly_map(s.form.components(), vars),
    })
}

pub fn poly_json(p: &Poly, vars: &[String]) -> Value {
    Value::String(p.format_with(vars))
}

/// Structure whose graph is tested by `courant graph`.
pub enum GraphInput {
    Bivector(Bivector),
    TwoForm(TwoForm),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphFile {
    vars: Vec<String>,
    bivector: Option<Map<String, Value>>,
    two_form: Option<Map<String, Value>>,
}

fn skew_entries(map: &Map<String, Value>, vars: &[String], field: &str) -> Result<Vec<(usize, usize, Poly)>, CliError> {
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    for (key, value) in map {
        let (a, b) = key
            .split_once(',')
            .ok_or_else(|| semantic(format!("{field}: key `{key}` must have the form \"xi,xj\"")))?;
        let pos = |name: &str| {
            vars.iter()
                .position(|v| v == name.trim())
                .ok_or_else(|| semantic(format!("{field}: unknown variable `{}`", name.trim())))
        };
        let (i, j) = (pos(a)?, pos(b)?);
        if i == j {
            return Err(semantic(format!("{field}: diagonal entry `{key}`")));
        }
        if !seen.insert((i.min(j), i.max(j))) {
            return Err(semantic(format!("{field}: duplicate entry `{key}`")));
        }
        let text = value.as_str().ok_or_else(|| semantic(format!("{field}.{key}: expected a polynomial string")))?;
        out.push((i, j, parse_poly_expr(text, vars)?));
    }
    Ok(out)
}

pub fn parse_graph(text: &str) -> Result<(Vec<String>, GraphInput), CliError> {
    let file: GraphFile = serde_json::from_str(text)?;
    check_vars(&file.vars)?;
    let n = file.vars.len();
    match (&file.bivector, &file.two_form) {
        (Some(m), None) => {
            let entries = skew_entries(m, &file.vars, "bivector")?;
            Ok((file.vars, GraphInput::Bivector(Bivector::from_entries(n, entries)?)))
        }
        (None, Some(m)) => {
            let entries = skew_entries(m, &file.vars, "two_form")?;
            Ok((file.vars, GraphInput::TwoForm(TwoForm::from_entries(n, entries)?)))
        }
        _ => Err(semantic("exactly one of `bivector` and `two_form` must be given")),
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SubspaceFile {
    basis: Vec<Vec<Value>>,
}

/// Spanning vectors for an ideal in an algebra of dimension `dim`.
pub fn parse_subspace(text: &str, dim: usize) -> Result<Subspace, CliError> {
    let file: SubspaceFile = serde_json::from_str(text)?;
    let mut vectors = Vec::new();
    for (e, row) in file.basis.iter().enumerate() {
        if row.len() != dim {
            return Err(semantic(format!("basis[{e}]: expected {dim} entries, found {}", row.len())));
        }
        vectors.push(
            row.iter()
                .enumerate()
                .map(|(k, v)| rational_from_json(v, &format!("basis[{e}][{k}]")))
                .collect::<Result<Vec<_>, _>>()?,
        );
    }
    Ok(Subspace::span(dim, vectors)?)
}

/// Comma-separated rationals, e.g. "0,1/2,-3".
pub fn parse_vector(text: &str) -> Result<Vec<Rational>, CliError> {
    text.split(',')
        .map(|t| parse_rational(t).map_err(|_| semantic(format!("invalid rational `{}` in `{text}`", t.trim()))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    const LEIBNIZ2: &str = r#"{"name": "leibniz2", "dim": 2, "basis": ["e1", "e2"],
        "products": [{"left": "e2", "right": "e2", "result": {"e1": "1"}}]}"#;

    #[test]
    fn algebra_examples() {
        let a = parse_algebra(r#"{"dim":1,"basis":["e1"],"products":[]}"#).unwrap();
        assert_eq!(a.dim(), 1);
        assert!(a.constants().iter().all(Zero::is_zero));

        let a = parse_algebra(LEIBNIZ2).unwrap();
        assert_eq!(a, leibniz_forge::corpus::leibniz2());

        let dup = r#"{"dim":1,"basis":["e1"],"products":[
            {"left":"e1","right":"e1","result":{}},{"left":"e1","right":"e1","result":{}}]}"#;
        assert!(matches!(parse_algebra(dup), Err(CliError::Semantic(m)) if m.contains("duplicate")));
        let unknown = r#"{"dim":1,"basis":["e1"],"products":[{"left":"e2","right":"e1","result":{}}]}"#;
        assert!(matches!(parse_algebra(unknown), Err(CliError::Semantic(m)) if m.contains("e2")));
        let float = r#"{"dim":1,"basis":["e1"],"products":[{"left":"e1","right":"e1","result":{"e1":0.5}}]}"#;
        assert!(matches!(parse_algebra(float), Err(CliError::Semantic(_))));
        assert!(matches!(parse_algebra("{\n\"dim\": }"), Err(CliError::Json { line: 2, .. })));
    }

    #[test]
    fn algebra_round_trip() {
        for a in leibniz_forge::corpus::leibniz_corpus().into_iter().take(6) {
            let text = algebra_json(&a).to_string();
            assert_eq!(parse_algebra(&text).unwrap(), a);
        }
    }

    #[test]
    fn ly_round_trip() {
        let l = leibniz_forge::lie_yamaguti::ly_from_leibniz(&leibniz_forge::corpus::hemi_gl(1)).unwrap();
        assert_eq!(parse_ly(&ly_json(&l).to_string()).unwrap(), l);
        assert!(parse_ly(r#"{"dim":2,"binary":[[0,1,0,"1"],[0,1,0,"2"]]}"#).is_err());
        assert!(parse_ly(r#"{"dim":2,"binary":[[0,2,0,"1"]]}"#).is_err());
    }

    #[test]
    fn section_round_trip() {
        let text = r#"{"vars":["x1","x2"],"vector_field":{"x2":"x1"},"one_form":{"x1":"1/2*x2^2 - 3"}}"#;
        let (vars, s) = parse_section(text).unwrap();
        assert_eq!(s.vf.component(1), &Poly::var(2, 0));
        let (_, again) = parse_section(&section_json(&s, &vars).to_string()).unwrap();
        assert_eq!(again, s);
        assert!(parse_section(r#"{"vars":["x1"],"one_form":{"x2":"1"}}"#).is_err());
    }

    #[test]
    fn graph_and_subspace() {
        let (_, g) = parse_graph(r#"{"vars":["x1","x2","x3"],"bivector":{"x1,x2":"x3","x3,x1":"x2"}}"#).unwrap();
        match g {
            GraphInput::Bivector(b) => assert_eq!(b.get(0, 2), -&Poly::var(3, 1)),
            GraphInput::TwoForm(_) => panic!("expected a bivector"),
        }
        assert!(parse_graph(r#"{"vars":["x1"]}"#).is_err());
        let s = parse_subspace(r#"{"basis":[["1","0"]]}"#, 2).unwrap();
        assert_eq!(s.dim(), 1);
        assert!(parse_subspace(r#"{"basis":[["1"]]}"#, 2).is_err());
        assert_eq!(parse_vector("0, 1/2").unwrap(), vec![int(0), leibniz_forge::linalg::rat(1, 2)]);
    }
}
