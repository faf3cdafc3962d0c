//! JSON input formats: algebras as named-basis bracket tables,
//! subalgebras as spans, representations as per-generator matrices.
//! All numeric entries are Scalar strings; floats never appear.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::matrix::Matrix;
use crate::rep::{forms_module, ideal_quotient_rep, Representation};
use crate::scalar::Scalar;
use crate::subspace::Subspace;

#[derive(Serialize, Deserialize)]
pub struct BracketEntry {
    pub x: String,
    pub y: String,
    /// Coordinates of [x, y] keyed by basis name; omitted names are zero.
    pub value: BTreeMap<String, String>,
}

#[derive(Serialize, Deserialize)]
pub struct AlgebraFile {
    pub dim: usize,
    pub basis: Vec<String>,
    #[serde(default)]
    pub brackets: Vec<BracketEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub real_structure: Option<Vec<Vec<String>>>,
}

#[derive(Serialize, Deserialize)]
pub struct SubalgebraFile {
    pub span: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
pub struct RepresentationFile {
    #[serde(rename = "dim_M")]
    pub dim_m: usize,
    /// Action matrices keyed by basis name; omitted names act by zero.
    pub action: BTreeMap<String, Vec<Vec<String>>>,
}

fn parse_scalar(raw: &str, context: &str) -> Result<Scalar> {
    raw.parse::<Scalar>()
        .map_err(|_| Error::Parse(format!("bad scalar {raw:?} in {context}")))
}

fn parse_matrix(rows: &[Vec<String>], nrows: usize, ncols: usize, context: &str) -> Result<Matrix> {
    if rows.len() != nrows || rows.iter().any(|r| r.len() != ncols) {
        return Err(Error::Dimension(format!(
            "{context} must be a {nrows} x {ncols} matrix"
        )));
    }
    let mut out = Vec::with_capacity(nrows);
    for row in rows {
        let mut parsed = Vec::with_capacity(ncols);
        for cell in row {
            parsed.push(parse_scalar(cell, context)?);
        }
        out.push(parsed);
    }
    Ok(Matrix::from_rows(out))
}

impl AlgebraFile {
    pub fn into_algebra(self) -> Result<LieAlgebra> {
        let n = self.dim;
        if self.basis.len() != n {
            return Err(Error::Dimension(format!(
                "dim is {n} but the basis lists {} names",
                self.basis.len()
            )));
        }
        let mut index: BTreeMap<&str, usize> = BTreeMap::new();
        for (i, name) in self.basis.iter().enumerate() {
            if name.is_empty() || index.insert(name, i).is_some() {
                return Err(Error::Invalid(format!("basis name {name:?} empty or repeated")));
            }
        }
        let lookup = |name: &str| -> Result<usize> {
            index
                .get(name)
                .copied()
                .ok_or_else(|| Error::Invalid(format!("unknown basis name {name:?}")))
        };
        let mut table = vec![vec![Scalar::zero(); n]; n * n];
        let mut given = vec![false; n * n];
        for entry in &self.brackets {
            let i = lookup(&entry.x)?;
            let j = lookup(&entry.y)?;
            let context = format!("bracket [{}, {}]", entry.x, entry.y);
            let mut value = vec![Scalar::zero(); n];
            for (name, raw) in &entry.value {
                value[lookup(name)?] = parse_scalar(raw, &context)?;
            }
            if i == j {
                if value.iter().any(|c| !c.is_zero()) {
                    return Err(Error::Invalid(format!("{context} must vanish")));
                }
                continue;
            }
            if given[i * n + j] {
                return Err(Error::Invalid(format!("duplicate {context}")));
            }
            given[i * n + j] = true;
            table[i * n + j] = value;
        }
        // fill unstated mirror pairs by antisymmetry; check stated ones
        for i in 0..n {
            for j in 0..n {
                if i == j || !given[i * n + j] {
                    continue;
                }
                let negated: Vec<Scalar> = table[i * n + j].iter().map(|c| -c).collect();
                if given[j * n + i] {
                    if table[j * n + i] != negated {
                        return Err(Error::Antisymmetry(i, j));
                    }
                } else {
                    table[j * n + i] = negated;
                    given[j * n + i] = true;
                }
            }
        }
        let real_structure = match &self.real_structure {
            Some(rows) => Some(parse_matrix(rows, n, n, "real_structure")?),
            None => None,
        };
        Ok(LieAlgebra::from_table(self.basis, table, real_structure))
    }
}

impl SubalgebraFile {
    pub fn into_subspace(self, ambient: usize) -> Result<Subspace> {
        let mut rows = Vec::with_capacity(self.span.len());
        for (k, raw_row) in self.span.iter().enumerate() {
            if raw_row.len() != ambient {
                return Err(Error::Dimension(format!(
                    "span row {k} has length {} but the algebra has dimension {ambient}",
                    raw_row.len()
                )));
            }
            let mut row = Vec::with_capacity(ambient);
            for cell in raw_row {
                row.push(parse_scalar(cell, "span")?);
            }
            rows.push(row);
        }
        Ok(Subspace::from_rows(ambient, rows))
    }
}

impl RepresentationFile {
    pub fn into_representation(self, g: &LieAlgebra) -> Result<Representation> {
        let m = self.dim_m;
        let mut action = vec![Matrix::zero(m, m); g.dim()];
        for (name, rows) in &self.action {
            let i = g
                .name_index(name)
                .ok_or_else(|| Error::Invalid(format!("unknown basis name {name:?}")))?;
            action[i] = parse_matrix(rows, m, m, &format!("action of {name}"))?;
        }
        Ok(Representation::new(g.dim(), m, action))
    }
}

pub fn load_algebra(path: &Path) -> Result<LieAlgebra> {
    let text = std::fs::read_to_string(path)?;
    let file: AlgebraFile = serde_json::from_str(&text)?;
    file.into_algebra()
}

pub fn load_subspace(path: &Path, ambient: usize) -> Result<Subspace> {
    let text = std::fs::read_to_string(path)?;
    let file: SubalgebraFile = serde_json::from_str(&text)?;
    file.into_subspace(ambient)
}

pub fn load_representation(path: &Path, g: &LieAlgebra) -> Result<Representation> {
    let text = std::fs::read_to_string(path)?;
    let file: RepresentationFile = serde_json::from_str(&text)?;
    file.into_representation(g)
}

/// Builtin representation names: `trivial`, `adjoint`, `quotient:g/v`,
/// `dual:<spec>`, `forms:<p>:<spec>`; anything else is read as a path.
pub fn resolve_representation(
    g: &LieAlgebra,
    v: Option<&Subspace>,
    spec: &str,
) -> Result<Representation> {
    match spec {
        "trivial" => Ok(Representation::trivial(g.dim(), 1)),
        "adjoint" => Ok(Representation::adjoint(g)),
        "quotient:g/v" => {
            let v = v.ok_or_else(|| {
                Error::Invalid("quotient coefficients need a subalgebra".into())
            })?;
            ideal_quotient_rep(g, v)
        }
        _ => {
            if let Some(rest) = spec.strip_prefix("dual:") {
                return Ok(resolve_representation(g, v, rest)?.dual());
            }
            if let Some(rest) = spec.strip_prefix("forms:") {
                let (p_raw, inner) = rest.split_once(':').ok_or_else(|| {
                    Error::Invalid(format!("forms spec {spec:?} needs forms:<p>:<rep>"))
                })?;
                let p: usize = p_raw
                    .parse()
                    .map_err(|_| Error::Invalid(format!("bad forms degree {p_raw:?}")))?;
                let base = resolve_representation(g, v, inner)?;
                return Ok(forms_module(&base, p, &Representation::trivial(g.dim(), 1)));
            }
            if let Some(rest) = spec.strip_prefix("quotient:") {
                return Err(Error::Invalid(format!(
                    "unknown quotient spec {rest:?}; only quotient:g/v is built in"
                )));
            }
            load_representation(Path::new(spec), g)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::sl2;

    fn sl2_json() -> String {
        serde_json::json!({
            "dim": 3,
            "basis": ["h", "e", "f"],
            "brackets": [
                {"x": "h", "y": "e", "value": {"e": "2"}},
                {"x": "h", "y": "f", "value": {"f": "-2"}},
                {"x": "e", "y": "f", "value": {"h": "1"}}
            ],
            "real_structure": [
                ["-1", "0", "0"],
                ["0", "0", "-1"],
                ["0", "-1", "0"]
            ]
        })
        .to_string()
    }

    #[test]
    fn algebra_round_trip_matches_builtin() {
        let file: AlgebraFile = serde_json::from_str(&sl2_json()).unwrap();
        let g = file.into_algebra().unwrap();
        let builtin = sl2();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(g.bracket_basis(i, j), builtin.bracket_basis(i, j));
            }
        }
        assert_eq!(g.real_structure(), builtin.real_structure());
        assert!(g.check_jacobi().is_none());
    }

    #[test]
    fn malformed_scalar_names_the_token() {
        let raw = serde_json::json!({
            "dim": 1,
            "basis": ["x"],
            "brackets": [{"x": "x", "y": "x", "value": {"x": "1//2"}}]
        })
        .to_string();
        let file: AlgebraFile = serde_json::from_str(&raw).unwrap();
        let err = file.into_algebra().unwrap_err();
        assert!(err.to_string().contains("1//2"), "{err}");
    }

    #[test]
    fn duplicate_and_inconsistent_pairs_rejected() {
        let dup = serde_json::json!({
            "dim": 2,
            "basis": ["a", "b"],
            "brackets": [
                {"x": "a", "y": "b", "value": {"b": "1"}},
                {"x": "a", "y": "b", "value": {"b": "2"}}
            ]
        });
        let file: AlgebraFile = serde_json::from_value(dup).unwrap();
        assert!(file.into_algebra().is_err());

        let bad_mirror = serde_json::json!({
            "dim": 2,
            "basis": ["a", "b"],
            "brackets": [
                {"x": "a", "y": "b", "value": {"b": "1"}},
                {"x": "b", "y": "a", "value": {"b": "1"}}
            ]
        });
        let file: AlgebraFile = serde_json::from_value(bad_mirror).unwrap();
        assert!(matches!(file.into_algebra(), Err(Error::Antisymmetry(_, _))));

        // a consistent mirror is fine
        let good_mirror = serde_json::json!({
            "dim": 2,
            "basis": ["a", "b"],
            "brackets": [
                {"x": "a", "y": "b", "value": {"b": "1"}},
                {"x": "b", "y": "a", "value": {"b": "-1"}}
            ]
        });
        let file: AlgebraFile = serde_json::from_value(good_mirror).unwrap();
        assert!(file.into_algebra().is_ok());
    }

    #[test]
    fn subspace_and_rep_files() {
        let g = sl2();
        let sub: SubalgebraFile = serde_json::from_value(serde_json::json!({
            "span": [["1", "0", "0"], ["0", "1", "0"]]
        }))
        .unwrap();
        let v = sub.into_subspace(3).unwrap();
        assert_eq!(v.dim(), 2);

        let rep: RepresentationFile = serde_json::from_value(serde_json::json!({
            "dim_M": 1,
            "action": {"h": [["2"]]}
        }))
        .unwrap();
        let r = rep.into_representation(&g).unwrap();
        assert_eq!(r.act(&[Scalar::one(), Scalar::zero(), Scalar::zero()])[(0, 0)],
            Scalar::from_int(2));

        let short: SubalgebraFile =
            serde_json::from_value(serde_json::json!({"span": [["1", "0"]]})).unwrap();
        assert!(short.into_subspace(3).is_err());
    }

    #[test]
    fn builtin_rep_specs() {
        let g = sl2();
        let v = Subspace::from_rows(
            3,
            vec![
                vec![Scalar::one(), Scalar::zero(), Scalar::zero()],
                vec![Scalar::zero(), Scalar::one(), Scalar::zero()],
            ],
        );
        assert_eq!(resolve_representation(&g, None, "trivial").unwrap().dim_m, 1);
        assert_eq!(resolve_representation(&g, None, "adjoint").unwrap().dim_m, 3);
        assert_eq!(
            resolve_representation(&g, None, "dual:adjoint").unwrap().dim_m,
            3
        );
        assert_eq!(
            resolve_representation(&g, None, "forms:2:adjoint").unwrap().dim_m,
            3
        );
        // borel is not an ideal, so the quotient coefficients are refused
        assert!(resolve_representation(&g, Some(&v), "quotient:g/v").is_err());
        assert!(resolve_representation(&g, None, "quotient:g/v").is_err());
        // heisenberg center is an ideal
        let h = crate::lie::heisenberg();
        let center = Subspace::from_rows(
            3,
            vec![vec![Scalar::zero(), Scalar::zero(), Scalar::one()]],
        );
        let q = resolve_representation(&h, Some(&center), "quotient:g/v").unwrap();
        assert_eq!(q.dim_m, 2);
    }
}
