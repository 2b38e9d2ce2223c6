//! On-disk formats: Hopf algebras, R-matrices and bilinear forms as JSON
//! with exact fraction strings. No floats anywhere.
//!
//! The algebra format stores structure constants indexed the obvious way:
//! `mul[i][j][k]` is the coefficient of `e_k` in `eᵢeⱼ`, `comul[i][j][k]`
//! the coefficient of `eⱼ⊗e_k` in `Δ(eᵢ)`, `antipode[i][j]` the
//! coefficient of `eⱼ` in `S(eᵢ)`; `unit` and `counit` are plain arrays.
//! Scalars are decimal strings `"n"` or `"n/d"`.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;
use ydl_core::cqt::BilinearForm;
use ydl_core::hopf::{HopfAlgebra, HopfError};
use ydl_core::linmap::LinearMap;
use ydl_core::qt::RMatrix;
use ydl_core::scalar::{FieldSpec, Scalar};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("parse error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("bad field spec {0:?} (expected \"rational\" or \"prime p\")")]
    BadField(String),
    #[error("bad scalar at {location}: {value:?}")]
    BadScalar { location: String, value: String },
    #[error("shape error: {what}")]
    Shape { what: String },
    #[error(
        "axiom {axiom} failed on load (witness input {input:?}); use unchecked mode to load anyway"
    )]
    Axiom {
        axiom: String,
        input: Option<String>,
    },
    #[error("{0}")]
    Hopf(String),
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct AlgebraFile {
    pub field: String,
    pub dim: usize,
    pub basis_names: Vec<String>,
    /// `mul[i][j][k]` = coefficient of `e_k` in `eᵢ·eⱼ`.
    pub mul: Vec<Vec<Vec<String>>>,
    pub unit: Vec<String>,
    /// `comul[i][j][k]` = coefficient of `eⱼ⊗e_k` in `Δ(eᵢ)`.
    pub comul: Vec<Vec<Vec<String>>>,
    pub counit: Vec<String>,
    /// `antipode[i][j]` = coefficient of `eⱼ` in `S(eᵢ)`.
    pub antipode: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RMatrixFile {
    /// `r[i][j]` = coefficient of `eᵢ⊗eⱼ` in R.
    pub r: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ZetaFile {
    /// `zeta[i][j]` = ζ(eᵢ, eⱼ).
    pub zeta: Vec<Vec<String>>,
}

pub fn parse_field_spec(s: &str) -> Result<FieldSpec, FormatError> {
    let s = s.trim();
    if s == "rational" {
        return Ok(FieldSpec::Rational);
    }
    if let Some(p) = s.strip_prefix("prime") {
        let p: u64 = p
            .trim()
            .parse()
            .map_err(|_| FormatError::BadField(s.to_string()))?;
        return FieldSpec::Prime(p)
            .validate()
            .map_err(|_| FormatError::BadField(s.to_string()));
    }
    Err(FormatError::BadField(s.to_string()))
}

fn parse_scalar(field: FieldSpec, location: String, value: &str) -> Result<Scalar, FormatError> {
    field
        .parse_scalar(value)
        .map_err(|_| FormatError::BadScalar {
            location,
            value: value.to_string(),
        })
}

fn expect_len<T>(what: &str, v: &[T], n: usize) -> Result<(), FormatError> {
    if v.len() != n {
        return Err(FormatError::Shape {
            what: format!("{what} has length {}, expected {n}", v.len()),
        });
    }
    Ok(())
}

impl AlgebraFile {
    /// Shape-checks all arrays against `dim` and builds the structure
    /// maps; validation of the Hopf axioms is the caller's choice.
    pub fn to_hopf(&self, unchecked: bool) -> Result<HopfAlgebra, FormatError> {
        let field = parse_field_spec(&self.field)?;
        let n = self.dim;
        expect_len("basis_names", &self.basis_names, n)?;
        expect_len("mul", &self.mul, n)?;
        expect_len("unit", &self.unit, n)?;
        expect_len("comul", &self.comul, n)?;
        expect_len("counit", &self.counit, n)?;
        expect_len("antipode", &self.antipode, n)?;

        let mut mul_grid = vec![vec![field.zero(); n * n]; n];
        for (i, plane) in self.mul.iter().enumerate() {
            expect_len(&format!("mul[{i}]"), plane, n)?;
            for (j, row) in plane.iter().enumerate() {
                expect_len(&format!("mul[{i}][{j}]"), row, n)?;
                for (k, s) in row.iter().enumerate() {
                    mul_grid[k][i * n + j] = parse_scalar(field, format!("mul[{i}][{j}][{k}]"), s)?;
                }
            }
        }
        let mut comul_grid = vec![vec![field.zero(); n]; n * n];
        for (i, plane) in self.comul.iter().enumerate() {
            expect_len(&format!("comul[{i}]"), plane, n)?;
            for (j, row) in plane.iter().enumerate() {
                expect_len(&format!("comul[{i}][{j}]"), row, n)?;
                for (k, s) in row.iter().enumerate() {
                    comul_grid[j * n + k][i] =
                        parse_scalar(field, format!("comul[{i}][{j}][{k}]"), s)?;
                }
            }
        }
        let mut unit = Vec::with_capacity(n);
        for (i, s) in self.unit.iter().enumerate() {
            unit.push(parse_scalar(field, format!("unit[{i}]"), s)?);
        }
        let mut counit = Vec::with_capacity(n);
        for (i, s) in self.counit.iter().enumerate() {
            counit.push(parse_scalar(field, format!("counit[{i}]"), s)?);
        }
        let mut s_grid = vec![vec![field.zero(); n]; n];
        for (i, row) in self.antipode.iter().enumerate() {
            expect_len(&format!("antipode[{i}]"), row, n)?;
            for (j, s) in row.iter().enumerate() {
                s_grid[j][i] = parse_scalar(field, format!("antipode[{i}][{j}]"), s)?;
            }
        }

        let mul = LinearMap::from_rows(field, &mul_grid).with_legs(vec![n, n], vec![n]);
        let comul = LinearMap::from_rows(field, &comul_grid).with_legs(vec![n], vec![n, n]);
        let unit = LinearMap::column_vector(field, &unit);
        let counit = LinearMap::row_vector(field, &counit);
        let antipode = LinearMap::from_rows(field, &s_grid);

        let raw = HopfAlgebra::from_parts_unchecked(
            field,
            self.basis_names.clone(),
            mul,
            unit,
            comul,
            counit,
            antipode,
        );
        if unchecked {
            return Ok(raw);
        }
        raw.validate().map_err(|e| match e {
            HopfError::Axiom(rep) => FormatError::Axiom {
                axiom: rep.axiom_id,
                input: rep.witness.and_then(|w| w.input),
            },
            HopfError::Shape { what } => FormatError::Shape { what },
            other => FormatError::Hopf(other.to_string()),
        })
    }

    pub fn from_hopf(h: &HopfAlgebra) -> Self {
        let n = h.dim();
        let mul = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        (0..n)
                            .map(|k| h.mul().entry(k, i * n + j).to_string())
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let comul = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        (0..n)
                            .map(|k| h.comul().entry(j * n + k, i).to_string())
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let antipode = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| h.antipode().entry(j, i).to_string())
                    .collect()
            })
            .collect();
        AlgebraFile {
            field: h.field().to_string(),
            dim: n,
            basis_names: h.basis_names().to_vec(),
            mul,
            unit: (0..n).map(|i| h.unit().entry(i, 0).to_string()).collect(),
            comul,
            counit: (0..n).map(|i| h.counit().entry(0, i).to_string()).collect(),
            antipode,
        }
    }
}

pub fn load_hopf(path: &Path, unchecked: bool) -> Result<HopfAlgebra, FormatError> {
    let text = fs::read_to_string(path).map_err(|source| FormatError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let file: AlgebraFile = serde_json::from_str(&text)?;
    file.to_hopf(unchecked)
}

pub fn save_hopf(h: &HopfAlgebra, path: &Path) -> Result<(), FormatError> {
    let file = AlgebraFile::from_hopf(h);
    let text = serde_json::to_string_pretty(&file)?;
    fs::write(path, text).map_err(|source| FormatError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn parse_grid(
    field: FieldSpec,
    what: &str,
    n: usize,
    grid: &[Vec<String>],
) -> Result<Vec<Vec<Scalar>>, FormatError> {
    expect_len(what, grid, n)?;
    let mut out = Vec::with_capacity(n);
    for (i, row) in grid.iter().enumerate() {
        expect_len(&format!("{what}[{i}]"), row, n)?;
        let mut parsed = Vec::with_capacity(n);
        for (j, s) in row.iter().enumerate() {
            parsed.push(parse_scalar(field, format!("{what}[{i}][{j}]"), s)?);
        }
        out.push(parsed);
    }
    Ok(out)
}

pub fn load_r_matrix(h: &HopfAlgebra, path: &Path) -> Result<RMatrix, FormatError> {
    let text = fs::read_to_string(path).map_err(|source| FormatError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let file: RMatrixFile = serde_json::from_str(&text)?;
    let grid = parse_grid(h.field(), "r", h.dim(), &file.r)?;
    RMatrix::from_grid(h, &grid).map_err(|e| FormatError::Shape {
        what: e.to_string(),
    })
}

pub fn load_zeta(h: &HopfAlgebra, path: &Path) -> Result<BilinearForm, FormatError> {
    let text = fs::read_to_string(path).map_err(|source| FormatError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let file: ZetaFile = serde_json::from_str(&text)?;
    let grid = parse_grid(h.field(), "zeta", h.dim(), &file.zeta)?;
    BilinearForm::from_grid(h, &grid).map_err(|e| FormatError::Shape {
        what: e.to_string(),
    })
}
