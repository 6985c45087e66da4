//! JSON documents for Hom-groups, modules, algebras and complex windows.
//!
//! Scalars may be written as JSON integers or as strings such as `"-3/2"`;
//! exported scalars are always strings so that no precision is lost.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::algebra::HomAlgebra;
use crate::complex::{ComplexWindow, Direction};
use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec};
use crate::homgroup::{HomGroup, RawGroupEndo, RawHomGroup};
use crate::linalg::to_dense;
use crate::matrix::Matrix;
use crate::module::{ActionModule, Flavor};

/// What a document describes, decided by its keys.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DocumentKind {
    HomGroup,
    GroupEndo,
    Module,
    Algebra,
    Window,
}

pub fn document_kind(doc: &Value) -> Result<DocumentKind> {
    let obj = doc
        .as_object()
        .ok_or_else(|| Error::parse("document must be a JSON object"))?;
    let has = |k: &str| obj.contains_key(k);
    if has("flavor") {
        Ok(DocumentKind::Module)
    } else if has("constants") {
        Ok(DocumentKind::Algebra)
    } else if has("differentials") {
        Ok(DocumentKind::Window)
    } else if has("endo") {
        Ok(DocumentKind::GroupEndo)
    } else if has("alpha") && has("mul") {
        Ok(DocumentKind::HomGroup)
    } else {
        Err(Error::parse(
            "unrecognised document: no distinguishing keys",
        ))
    }
}

pub fn parse_json(text: &str) -> Result<Value> {
    Ok(serde_json::from_str(text)?)
}

pub fn raw_hom_group(doc: &Value) -> Result<RawHomGroup> {
    Ok(RawHomGroup::deserialize(doc)?)
}

pub fn raw_group_endo(doc: &Value) -> Result<RawGroupEndo> {
    Ok(RawGroupEndo::deserialize(doc)?)
}

/// Parses and verifies a Hom-group document.
pub fn read_hom_group(doc: &Value) -> Result<HomGroup> {
    HomGroup::new(&raw_hom_group(doc)?)
}

pub fn hom_group_to_json(g: &HomGroup) -> Value {
    serde_json::to_value(g.to_raw()).expect("plain tables serialize")
}

/// The `"field"` entry of a module, algebra or window document, if any.
pub fn document_field(doc: &Value) -> Result<Option<FieldSpec>> {
    match doc.get("field") {
        None | Some(Value::Null) => Ok(None),
        Some(v) => {
            if let Some(s) = v.as_str() {
                FieldSpec::parse_flag(s).map(Some)
            } else {
                Ok(Some(FieldSpec::deserialize(v)?))
            }
        }
    }
}

fn scalar<F: Field>(field: &F, v: &Value) -> Result<F::Elem> {
    match v {
        Value::Number(n) => field.parse(&n.to_string()),
        Value::String(s) => field.parse(s),
        other => Err(Error::parse(format!("expected a scalar, found {other}"))),
    }
}

fn dense_matrix<F: Field>(field: &F, v: &Value, what: &str) -> Result<Matrix<F>> {
    let rows = v
        .as_array()
        .ok_or_else(|| Error::parse(format!("{what} must be a list of rows")))?;
    let rows = rows
        .iter()
        .map(|r| {
            r.as_array()
                .ok_or_else(|| Error::parse(format!("{what} row must be a list")))?
                .iter()
                .map(|x| scalar(field, x))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(field, rows)
}

fn matrix_family<F: Field>(
    field: &F,
    v: Option<&Value>,
    what: &str,
) -> Result<Option<Vec<Matrix<F>>>> {
    match v {
        None | Some(Value::Null) => Ok(None),
        Some(v) => v
            .as_array()
            .ok_or_else(|| Error::parse(format!("{what} must be a list of matrices")))?
            .iter()
            .map(|m| dense_matrix(field, m, what))
            .collect::<Result<Vec<_>>>()
            .map(Some),
    }
}

fn render_matrix<F: Field>(m: &Matrix<F>) -> Value {
    Value::Array(
        m.to_dense()
            .iter()
            .map(|r| {
                Value::Array(
                    r.iter()
                        .map(|x| Value::String(m.field().render(x)))
                        .collect(),
                )
            })
            .collect(),
    )
}

/// Module document:
/// `{"field", "flavor", "dim", "beta": [[s]], "left": [[[s]]], "right": [[[s]]]}`
/// with `left[g]` the matrix of `g·` and `right[g]` the matrix of `·g`.
pub fn read_module<F: Field>(field: &F, doc: &Value) -> Result<ActionModule<F>> {
    let flavor = Flavor::deserialize(
        doc.get("flavor")
            .ok_or_else(|| Error::parse("module document needs a flavor"))?,
    )?;
    let beta = dense_matrix(
        field,
        doc.get("beta")
            .ok_or_else(|| Error::parse("module document needs beta"))?,
        "beta",
    )?;
    if let Some(d) = doc.get("dim") {
        let d = d
            .as_u64()
            .ok_or_else(|| Error::parse("dim must be a non-negative integer"))?;
        if d as usize != beta.rows() {
            return Err(Error::shape(format!("dim {d} disagrees with beta")));
        }
    }
    let left = matrix_family(field, doc.get("left"), "left")?;
    let right = matrix_family(field, doc.get("right"), "right")?;
    ActionModule::new(field, beta, left, right, flavor)
}

pub fn module_to_json<F: Field>(m: &ActionModule<F>) -> Value {
    let family = |f: Option<&[Matrix<F>]>| {
        f.map_or(Value::Null, |f| {
            Value::Array(f.iter().map(render_matrix).collect())
        })
    };
    let mut doc = json!({
        "field": m.field().spec().to_string(),
        "flavor": m.flavor(),
        "dim": m.dim(),
        "beta": render_matrix(m.beta()),
    });
    if let Some(l) = m.left_family() {
        doc["left"] = family(Some(l));
    }
    if let Some(r) = m.right_family() {
        doc["right"] = family(Some(r));
    }
    doc
}

/// Algebra document: `{"dim", "field", "constants": [[[s]]], "alpha": [[s]],
/// "unit": [s]}` where `constants[i][j]` is `e_i e_j`.
pub fn read_algebra<F: Field>(field: &F, doc: &Value) -> Result<HomAlgebra<F>> {
    let get = |k: &str| {
        doc.get(k)
            .ok_or_else(|| Error::parse(format!("algebra document needs {k}")))
    };
    let constants = get("constants")?
        .as_array()
        .ok_or_else(|| Error::parse("constants must be a list"))?
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| Error::parse("constants rows must be lists"))?
                .iter()
                .map(|v| {
                    v.as_array()
                        .ok_or_else(|| Error::parse("products must be coordinate lists"))?
                        .iter()
                        .map(|x| scalar(field, x))
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let alpha = dense_matrix(field, get("alpha")?, "alpha")?;
    let unit = get("unit")?
        .as_array()
        .ok_or_else(|| Error::parse("unit must be a list"))?
        .iter()
        .map(|x| scalar(field, x))
        .collect::<Result<Vec<_>>>()?;
    let a = HomAlgebra::new(field, constants, alpha, unit)?;
    if let Some(d) = doc.get("dim").and_then(Value::as_u64) {
        if d as usize != a.dim() {
            return Err(Error::shape(format!("dim {d} disagrees with constants")));
        }
    }
    Ok(a)
}

pub fn algebra_to_json<F: Field>(a: &HomAlgebra<F>) -> Value {
    let f = a.field();
    let render =
        |v: &[F::Elem]| Value::Array(v.iter().map(|x| Value::String(f.render(x))).collect());
    json!({
        "dim": a.dim(),
        "field": f.spec().to_string(),
        "constants": a.constants_dense().iter().map(|row| row.iter().map(|v| render(v)).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "alpha": render_matrix(a.alpha_matrix()),
        "unit": render(&to_dense(f, a.dim(), a.unit())),
    })
}

/// Window export: `{"direction", "field", "dims", "differentials"}` with each
/// differential a row-major list of `[row, col, "scalar"]` triplets.
pub fn window_to_json<F: Field>(w: &ComplexWindow<F>) -> Value {
    json!({
        "direction": w.direction(),
        "field": w.field().spec().to_string(),
        "dims": w.dims(),
        "differentials": w.differentials().iter().map(|m| {
            m.rendered_triplets()
                .into_iter()
                .map(|(r, c, s)| json!([r, c, s]))
                .collect::<Vec<_>>()
        }).collect::<Vec<_>>(),
    })
}

pub fn read_window<F: Field>(field: &F, doc: &Value) -> Result<ComplexWindow<F>> {
    let direction = Direction::deserialize(
        doc.get("direction")
            .ok_or_else(|| Error::parse("window needs a direction"))?,
    )?;
    let dims = Vec::<usize>::deserialize(
        doc.get("dims")
            .ok_or_else(|| Error::parse("window needs dims"))?,
    )?;
    let diffs = doc
        .get("differentials")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::parse("window needs a differentials list"))?;
    if dims.is_empty() || diffs.len() + 1 != dims.len() {
        return Err(Error::shape(format!(
            "{} differentials for {} degrees",
            diffs.len(),
            dims.len()
        )));
    }
    let differentials = diffs
        .iter()
        .enumerate()
        .map(|(n, list)| {
            let (rows, cols) = match direction {
                Direction::Cochain => (dims[n + 1], dims[n]),
                Direction::Chain => (dims[n], dims[n + 1]),
            };
            let triplets = list
                .as_array()
                .ok_or_else(|| Error::parse("differential must be a triplet list"))?
                .iter()
                .map(|t| {
                    let t = t
                        .as_array()
                        .filter(|t| t.len() == 3)
                        .ok_or_else(|| Error::parse("triplet must be [row, col, scalar]"))?;
                    let idx = |v: &Value| {
                        v.as_u64()
                            .map(|x| x as usize)
                            .ok_or_else(|| Error::parse("triplet index must be an integer"))
                    };
                    Ok((idx(&t[0])?, idx(&t[1])?, scalar(field, &t[2])?))
                })
                .collect::<Result<Vec<_>>>()?;
            Matrix::from_triplets(field, rows, cols, triplets)
        })
        .collect::<Result<Vec<_>>>()?;
    ComplexWindow::from_parts(field, direction, dims, differentials)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{assemble_window, Builder};
    use crate::field::{PrimeField, Rationals};
    use crate::homgroup::{twist_group, Group};
    use crate::linalg::betti_numbers;
    use crate::module::kg_dual;

    #[test]
    fn kinds() {
        let g = parse_json(r#"{"order":1,"mul":[[0]],"alpha":[0],"inv":[0],"unit":0}"#).unwrap();
        assert_eq!(document_kind(&g).unwrap(), DocumentKind::HomGroup);
        let e = parse_json(r#"{"order":1,"mul":[[0]],"endo":[0],"inv":[0],"unit":0}"#).unwrap();
        assert_eq!(document_kind(&e).unwrap(), DocumentKind::GroupEndo);
        assert!(document_kind(&parse_json("[1]").unwrap()).is_err());
    }

    #[test]
    fn module_round_trip() {
        let g = twist_group(&Group::cyclic(3), &[0, 2, 1]).unwrap();
        let m = kg_dual(&g, &Rationals);
        let doc = module_to_json(&m);
        assert_eq!(read_module(&Rationals, &doc).unwrap(), m);
        assert_eq!(document_field(&doc).unwrap(), Some(FieldSpec::Rational));
    }

    #[test]
    fn module_with_fraction_entries() {
        let doc =
            parse_json(r#"{"flavor":"dual_left","beta":[["1/2"]],"left":[[["1/2"]]]}"#).unwrap();
        let m = read_module(&Rationals, &doc).unwrap();
        assert_eq!(m.beta().get(0, 0), Rationals.parse("1/2").unwrap());
        let bad = parse_json(r#"{"flavor":"dual_left","beta":[[1]]}"#).unwrap();
        assert!(matches!(
            read_module(&Rationals, &bad),
            Err(Error::MissingAction { .. })
        ));
    }

    #[test]
    fn window_round_trip_preserves_betti() {
        let f = PrimeField::new(2).unwrap();
        let g = crate::homgroup::HomGroup::from_group(&Group::cyclic(2));
        let m = ActionModule::trivial(&f, 2, Flavor::DualLeft);
        let w = assemble_window(
            &Builder::DualLeft {
                group: g,
                module: m,
            },
            4,
        )
        .unwrap();
        let doc = window_to_json(&w);
        let back = read_window(&f, &doc).unwrap();
        assert_eq!(back.differentials(), w.differentials());
        assert_eq!(betti_numbers(&back), betti_numbers(&w));
    }

    #[test]
    fn algebra_round_trip() {
        let g = twist_group(&Group::cyclic(3), &[0, 2, 1]).unwrap();
        let a = crate::algebra::group_algebra(&g, &Rationals);
        assert_eq!(read_algebra(&Rationals, &algebra_to_json(&a)).unwrap(), a);
    }
}
