//! JSON algebra files: field descriptor, structure constants as sparse
//! (i, j, k, value) entries, and optional form, involution and unit.
//! Scalars are stored as exact strings ("num/den", "a+b*sqrt(d)").

use crate::algebra::{Algebra, Element};
use crate::constructors::named;
use crate::error::{Error, Result};
use crate::fields::{Field, Scalar};
use crate::linalg::Matrix;
use serde::{Deserialize, Serialize};
use std::path::Path;

/// A unit given as a basis index or as a full coordinate vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum UnitSpec {
    Index(usize),
    Vector(Vec<String>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub name: String,
    pub dimension: usize,
    pub field: Field,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub structure: Vec<(usize, usize, usize, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub form: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub involution: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<UnitSpec>,
}

fn matrix_rows(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(Scalar::to_string).collect()).collect()
}

fn parse_matrix(field: Field, n: usize, rows: &[Vec<String>], what: &str) -> Result<Matrix> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(Error::Parse(format!("{what} must be {n}×{n}")));
    }
    let rows = rows
        .iter()
        .map(|r| r.iter().map(|s| Scalar::parse(field, s)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(field, rows)
}

impl AlgebraFile {
    pub fn from_algebra(alg: &Algebra) -> AlgebraFile {
        let n = alg.dim();
        let mut structure = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let c = alg.structure(i, j, k);
                    if !c.is_zero() {
                        structure.push((i, j, k, c.to_string()));
                    }
                }
            }
        }
        let unit = alg.unit().ok().map(|e| {
            let support: Vec<usize> = (0..n).filter(|&i| !e.coords[i].is_zero()).collect();
            match support.as_slice() {
                [i] if e.coords[*i].is_one() => UnitSpec::Index(*i),
                _ => UnitSpec::Vector(e.coords.iter().map(Scalar::to_string).collect()),
            }
        });
        AlgebraFile {
            name: alg.name().to_string(),
            dimension: n,
            field: alg.field(),
            labels: Some(alg.labels().to_vec()),
            structure,
            form: alg.form().ok().map(matrix_rows),
            involution: alg.involution().ok().map(matrix_rows),
            unit,
        }
    }

    pub fn to_algebra(&self) -> Result<Algebra> {
        let (f, n) = (self.field, self.dimension);
        let entries = self
            .structure
            .iter()
            .map(|(i, j, k, s)| Ok((*i, *j, *k, Scalar::parse(f, s)?)))
            .collect::<Result<Vec<_>>>()?;
        let mut alg = Algebra::from_entries(self.name.clone(), f, n, &entries)?;
        if let Some(rows) = &self.form {
            alg = alg.with_form(parse_matrix(f, n, rows, "form")?)?;
        }
        if let Some(rows) = &self.involution {
            alg = alg.with_involution(parse_matrix(f, n, rows, "involution")?)?;
        }
        match &self.unit {
            Some(UnitSpec::Index(i)) if *i >= n => {
                return Err(Error::Parse(format!("unit index {i} out of range")));
            }
            Some(UnitSpec::Index(i)) => alg = alg.with_unit(Element::basis(f, n, *i))?,
            Some(UnitSpec::Vector(v)) => {
                let coords = v.iter().map(|s| Scalar::parse(f, s)).collect::<Result<Vec<_>>>()?;
                alg = alg.with_unit(Element::new(coords))?;
            }
            None => {}
        }
        if let Some(labels) = &self.labels {
            alg = alg.with_labels(labels.clone())?;
        }
        Ok(alg)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<AlgebraFile> {
        Ok(serde_json::from_str(s)?)
    }
}

pub fn load_algebra(path: &Path) -> Result<Algebra> {
    AlgebraFile::from_json(&std::fs::read_to_string(path)?)?.to_algebra()
}

pub fn save_algebra(alg: &Algebra, path: &Path) -> Result<()> {
    std::fs::write(path, AlgebraFile::from_algebra(alg).to_json())?;
    Ok(())
}

/// An existing file path is loaded; anything else is looked up as a named
/// algebra over `field`.
pub fn resolve_algebra(name_or_path: &str, field: Field) -> Result<Algebra> {
    let p = Path::new(name_or_path);
    if p.is_file() {
        load_algebra(p)
    } else {
        named(name_or_path, field)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_is_exact() {
        let cases = [
            ("pseudo-octonion", Field::quadratic(3).unwrap()),
            ("zorn", Field::Rationals),
            ("para:4", Field::quadratic(3).unwrap()),
            ("parazorn:2:3", Field::prime(7).unwrap()),
            ("matrix:2", Field::Rationals),
        ];
        for (name, f) in cases {
            let a = named(name, f).unwrap();
            let file = AlgebraFile::from_algebra(&a);
            let back = AlgebraFile::from_json(&file.to_json()).unwrap();
            assert_eq!(back, file);
            let b = back.to_algebra().unwrap();
            assert_eq!(a, b, "{name}");
            assert_eq!(a.labels(), b.labels());
            assert_eq!(AlgebraFile::from_algebra(&b).to_json(), file.to_json());
        }
    }

    #[test]
    fn rejects_malformed() {
        let bad = r#"{"name":"x","dimension":2,"field":{"field":"Q"},"structure":[[0,0,0,"1/0"]]}"#;
        assert!(matches!(AlgebraFile::from_json(bad).unwrap().to_algebra(), Err(Error::Parse(_))));
        let bad = r#"{"name":"x","dimension":1,"field":{"field":"Q"},"structure":[[0,0,5,"1"]]}"#;
        assert!(AlgebraFile::from_json(bad).unwrap().to_algebra().is_err());
        assert!(AlgebraFile::from_json("{").is_err());
    }
}
