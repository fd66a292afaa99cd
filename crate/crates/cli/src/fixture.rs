//! Fixture files: finite algebras as JSON, with optional gradings and
//! distinguished elements or subspaces.
//!
//! Scalars are stored as strings in the canonical lowest-terms form that
//! `Scalar::render` produces, so a loaded file saves back byte for byte.
//! Structure triples use 0-based indices.  Grading keys are the degrees as
//! decimal strings.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use alg_core::algebra::{AlgebraKind, FinAlgebra, StructureEntry};
use alg_core::grading::ZGrading;
use alg_core::subspace::Subspace;
use alg_core::{AlgError, FieldTower, Matrix, Result, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDesc {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
}

impl FieldDesc {
    pub fn of(field: FieldTower) -> FieldDesc {
        match field {
            FieldTower::Q => FieldDesc {
                kind: "Q".into(),
                p: None,
            },
            FieldTower::Fp(p) => FieldDesc {
                kind: "Fp".into(),
                p: Some(p),
            },
            FieldTower::Ext => FieldDesc {
                kind: "tower".into(),
                p: None,
            },
        }
    }

    pub fn tower(&self) -> Result<FieldTower> {
        match (self.kind.as_str(), self.p) {
            ("Q", None) => Ok(FieldTower::Q),
            ("Fp", Some(p)) => Ok(FieldTower::Fp(p)),
            ("tower", None) => Ok(FieldTower::Ext),
            _ => Err(AlgError::Parse(format!(
                "unrecognized field descriptor: kind {:?}, p {:?}",
                self.kind, self.p
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Fixture {
    pub name: String,
    pub field: FieldDesc,
    pub dim: usize,
    pub kind: String,
    pub structure: Vec<(usize, usize, usize, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub involution: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grading: Option<BTreeMap<String, Vec<Vec<String>>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elements: Option<BTreeMap<String, Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subspaces: Option<BTreeMap<String, Vec<Vec<String>>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

/// A fixture after validation: the algebra is built, the grading checked,
/// and every distinguished element and subspace parsed.
#[derive(Debug, Clone)]
pub struct BuiltFixture {
    pub name: String,
    pub algebra: FinAlgebra,
    pub grading: Option<ZGrading>,
    pub elements: BTreeMap<String, Vec<Scalar>>,
    pub subspaces: BTreeMap<String, Subspace>,
}

impl Fixture {
    pub fn load(path: &Path) -> Result<Fixture> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| AlgError::Parse(format!("{}: {e}", path.display())))?;
        serde_json::from_str(&text)
            .map_err(|e| AlgError::Parse(format!("{}: {e}", path.display())))
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.canonical_json())
            .map_err(|e| AlgError::Parse(format!("{}: {e}", path.display())))
    }

    pub fn canonical_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("fixture serialization");
        s.push('\n');
        s
    }

    pub fn build(&self) -> Result<BuiltFixture> {
        let field = self.field.tower()?;
        let kind = match self.kind.as_str() {
            "lie" => AlgebraKind::Lie,
            "associative" => AlgebraKind::Associative,
            other => return Err(AlgError::Parse(format!("unrecognized kind {other:?}"))),
        };
        let mut entries = Vec::with_capacity(self.structure.len());
        for (i, j, k, c) in &self.structure {
            entries.push(StructureEntry {
                i: *i,
                j: *j,
                k: *k,
                c: Scalar::parse(c, field)?,
            });
        }
        let involution = match &self.involution {
            None => None,
            Some(rows) => Some(parse_matrix(rows, self.dim, field)?),
        };
        let unit = match &self.unit {
            None => None,
            Some(v) => Some(parse_vector(v, self.dim, field)?),
        };
        let algebra = FinAlgebra::build(
            self.dim,
            kind,
            field,
            entries,
            involution,
            unit,
            self.labels.clone(),
        )?;
        let grading = match &self.grading {
            None => None,
            Some(parts) => {
                let mut components = Vec::new();
                for (deg, rows) in parts {
                    let d: i64 = deg
                        .parse()
                        .map_err(|_| AlgError::Parse(format!("bad degree key {deg:?}")))?;
                    let mut basis = Vec::with_capacity(rows.len());
                    for row in rows {
                        basis.push(parse_vector(row, self.dim, field)?);
                    }
                    components.push((d, basis));
                }
                Some(ZGrading::new(&algebra, components)?)
            }
        };
        let mut elements = BTreeMap::new();
        if let Some(els) = &self.elements {
            for (name, row) in els {
                elements.insert(name.clone(), parse_vector(row, self.dim, field)?);
            }
        }
        let mut subspaces = BTreeMap::new();
        if let Some(subs) = &self.subspaces {
            for (name, rows) in subs {
                let mut basis = Vec::with_capacity(rows.len());
                for row in rows {
                    basis.push(parse_vector(row, self.dim, field)?);
                }
                subspaces.insert(name.clone(), Subspace::from_rows(self.dim, field, basis)?);
            }
        }
        Ok(BuiltFixture {
            name: self.name.clone(),
            algebra,
            grading,
            elements,
            subspaces,
        })
    }

    /// Serializes an algebra in canonical form.  Scalars render in lowest
    /// terms, structure triples are emitted in basis order with zero entries
    /// dropped.
    pub fn from_parts(
        name: &str,
        alg: &FinAlgebra,
        grading: Option<&ZGrading>,
        elements: &[(&str, Vec<Scalar>)],
        subspaces: &[(&str, Vec<Vec<Scalar>>)],
    ) -> Fixture {
        let structure = alg
            .structure_entries()
            .map(|e| (e.i, e.j, e.k, e.c.render()))
            .collect();
        let involution = alg.involution().map(render_matrix);
        let unit = alg.unit().map(render_vector);
        let grading = grading.map(|g| {
            let mut parts = BTreeMap::new();
            for d in g.support() {
                let rows = g
                    .part(d)
                    .map(|s| s.basis_rows().map(render_vector).collect())
                    .unwrap_or_default();
                parts.insert(d.to_string(), rows);
            }
            parts
        });
        let elements = if elements.is_empty() {
            None
        } else {
            Some(
                elements
                    .iter()
                    .map(|(n, v)| (n.to_string(), render_vector(v)))
                    .collect(),
            )
        };
        let subspaces = if subspaces.is_empty() {
            None
        } else {
            Some(
                subspaces
                    .iter()
                    .map(|(n, rows)| {
                        (
                            n.to_string(),
                            rows.iter().map(|r| render_vector(r)).collect(),
                        )
                    })
                    .collect(),
            )
        };
        Fixture {
            name: name.to_string(),
            field: FieldDesc::of(alg.field()),
            dim: alg.dim(),
            kind: alg.kind().as_str().to_string(),
            structure,
            involution,
            unit,
            grading,
            elements,
            subspaces,
            labels: alg.labels().map(|ls| ls.to_vec()),
        }
    }
}

fn parse_vector(row: &[String], dim: usize, field: FieldTower) -> Result<Vec<Scalar>> {
    if row.len() != dim {
        return Err(AlgError::DimensionMismatch(format!(
            "vector of length {} in a dimension {} fixture",
            row.len(),
            dim
        )));
    }
    row.iter().map(|s| Scalar::parse(s, field)).collect()
}

fn parse_matrix(rows: &[Vec<String>], dim: usize, field: FieldTower) -> Result<Matrix> {
    if rows.len() != dim {
        return Err(AlgError::DimensionMismatch(format!(
            "matrix with {} rows in a dimension {} fixture",
            rows.len(),
            dim
        )));
    }
    let mut parsed = Vec::with_capacity(dim);
    for row in rows {
        parsed.push(parse_vector(row, dim, field)?);
    }
    Matrix::from_rows(parsed, dim, field)
}

fn render_vector(v: &[Scalar]) -> Vec<String> {
    v.iter().map(|c| c.render()).collect()
}

fn render_matrix(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|r| render_vector(m.row(r))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alg_core::constructors;

    #[test]
    fn sl2_round_trips_bytes() {
        let alg = constructors::sl(2, FieldTower::Q).unwrap();
        let fx = Fixture::from_parts("sl2", &alg, None, &[], &[]);
        let text = fx.canonical_json();
        let back: Fixture = serde_json::from_str(&text).unwrap();
        assert_eq!(back, fx);
        assert_eq!(back.canonical_json(), text);
        let built = back.build().unwrap();
        assert_eq!(built.algebra.dim(), 3);
        assert_eq!(built.algebra, alg);
    }

    #[test]
    fn bad_structure_triple_is_reported() {
        let alg = constructors::sl(2, FieldTower::Q).unwrap();
        let mut fx = Fixture::from_parts("sl2", &alg, None, &[], &[]);
        fx.structure.push((0, 0, 0, "1".into()));
        let err = fx.build().unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains('0'), "diagnostic names the triple: {msg}");
    }

    #[test]
    fn unknown_field_kind_is_rejected() {
        let desc = FieldDesc {
            kind: "R".into(),
            p: None,
        };
        assert!(desc.tower().is_err());
    }

    #[test]
    fn grading_and_subspaces_survive() {
        let alg = constructors::sl(2, FieldTower::Fp(5)).unwrap();
        let field = FieldTower::Fp(5);
        let comps = constructors::sl_block_components(2, &[1, 1], field);
        let g = ZGrading::new(&alg, comps.clone()).unwrap();
        let e12 = comps
            .iter()
            .find(|(d, _)| *d == 1)
            .map(|(_, rows)| rows[0].clone())
            .unwrap();
        let fx = Fixture::from_parts(
            "sl2_f5",
            &alg,
            Some(&g),
            &[("nil", e12.clone())],
            &[("inner-e", vec![e12.clone()])],
        );
        let built = fx.build().unwrap();
        assert!(built.grading.is_some());
        assert_eq!(built.elements["nil"], e12);
        assert!(built.subspaces["inner-e"].contains(&e12));
        let text = fx.canonical_json();
        let back: Fixture = serde_json::from_str(&text).unwrap();
        assert_eq!(back.canonical_json(), text);
    }
}
