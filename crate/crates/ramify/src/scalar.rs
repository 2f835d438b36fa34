//! Exact scalars, vectors and matrices as JSON.
//!
//! ℚ and 𝔽_p elements are strings (`"3"`, `"-1/2"`); elements of 𝔽_p[t]/(f)
//! are arrays of coefficient strings, constant term first. Prime-field
//! representatives must be canonical (`0 ≤ v < p`).

use num_bigint::BigInt;
use ramify_core::{FieldSpec, Matrix, Scalar};
use serde::{Deserialize, Serialize};

use crate::error::RunError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarDoc {
    Text(String),
    Coefficients(Vec<String>),
}

pub type VectorDoc = Vec<ScalarDoc>;
pub type MatrixDoc = Vec<Vec<ScalarDoc>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum FieldDoc {
    Rationals,
    Prime {
        p: u64,
    },
    /// `𝔽_p[t]/(modulus)`, coefficients constant term first, monic.
    Extension {
        p: u64,
        modulus: Vec<u64>,
    },
}

impl FieldDoc {
    pub fn spec(&self) -> Result<FieldSpec, RunError> {
        let f = match self {
            FieldDoc::Rationals => FieldSpec::Rationals,
            FieldDoc::Prime { p } => FieldSpec::prime(*p)?,
            FieldDoc::Extension { p, modulus } => FieldSpec::extension(*p, modulus)?,
        };
        Ok(f)
    }

    pub fn of(f: FieldSpec) -> FieldDoc {
        match f {
            FieldSpec::Rationals => FieldDoc::Rationals,
            FieldSpec::Prime(p) => FieldDoc::Prime { p },
            FieldSpec::Extension(e) => FieldDoc::Extension {
                p: e.p(),
                modulus: e.modulus().to_vec(),
            },
        }
    }
}

fn prime_value(p: u64, s: &str) -> Result<u64, RunError> {
    let v: u64 = s
        .parse()
        .map_err(|_| RunError::Schema(format!("{s:?} is not a canonical element of F_{p}")))?;
    if v >= p {
        return Err(RunError::Schema(format!("{v} is not a canonical element of F_{p}")));
    }
    Ok(v)
}

pub fn parse_scalar(f: FieldSpec, x: &ScalarDoc) -> Result<Scalar, RunError> {
    match (f, x) {
        (FieldSpec::Rationals, ScalarDoc::Text(s)) => {
            let (num, den) = match s.split_once('/') {
                Some((n, d)) => (n, d),
                None => (s.as_str(), "1"),
            };
            let bad = || RunError::Schema(format!("{s:?} is not a rational number"));
            let num: BigInt = num.parse().map_err(|_| bad())?;
            let den: BigInt = den.parse().map_err(|_| bad())?;
            if den == BigInt::from(0) {
                return Err(bad());
            }
            Ok(f.rational(num, den)?)
        }
        (FieldSpec::Prime(p), ScalarDoc::Text(s)) => Ok(Scalar::Prime(prime_value(p, s)?)),
        (FieldSpec::Extension(e), ScalarDoc::Coefficients(cs)) => {
            if cs.len() != e.degree() {
                return Err(RunError::Schema(format!(
                    "extension element needs {} coefficients, found {}",
                    e.degree(),
                    cs.len()
                )));
            }
            let coords = cs
                .iter()
                .map(|c| prime_value(e.p(), c).map(Scalar::Prime))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(f.from_prime_coordinates(&coords)?)
        }
        (FieldSpec::Extension(_), ScalarDoc::Text(s)) => Err(RunError::Schema(format!(
            "{s:?}: elements of {f} are coefficient arrays"
        ))),
        (_, ScalarDoc::Coefficients(_)) => Err(RunError::Schema(format!("coefficient array given for an element of {f}"))),
    }
}

pub fn format_scalar(f: FieldSpec, x: &Scalar) -> ScalarDoc {
    match f {
        FieldSpec::Extension(_) => {
            ScalarDoc::Coefficients(f.prime_coordinates(x).iter().map(ToString::to_string).collect())
        }
        _ => ScalarDoc::Text(x.to_string()),
    }
}

pub fn parse_vector(f: FieldSpec, v: &[ScalarDoc], len: usize, what: &str) -> Result<Vec<Scalar>, RunError> {
    if v.len() != len {
        return Err(RunError::Schema(format!("{what}: expected length {len}, found {}", v.len())));
    }
    v.iter().map(|x| parse_scalar(f, x).map_err(|e| e.at(what))).collect()
}

pub fn format_vector(f: FieldSpec, v: &[Scalar]) -> VectorDoc {
    v.iter().map(|x| format_scalar(f, x)).collect()
}

pub fn parse_matrix(f: FieldSpec, m: &MatrixDoc, rows: usize, cols: usize, what: &str) -> Result<Matrix, RunError> {
    if m.len() != rows {
        return Err(RunError::Schema(format!("{what}: expected {rows} rows, found {}", m.len())));
    }
    let mut data = Vec::with_capacity(rows * cols);
    for (i, row) in m.iter().enumerate() {
        data.extend(parse_vector(f, row, cols, &format!("{what} row {i}"))?);
    }
    Ok(Matrix::from_data(f, rows, cols, data)?)
}

pub fn format_matrix(m: &Matrix) -> MatrixDoc {
    (0..m.rows()).map(|i| format_vector(m.field(), m.row(i))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips() {
        let q = FieldSpec::Rationals;
        let x = parse_scalar(q, &ScalarDoc::Text("-6/4".into())).unwrap();
        assert_eq!(format_scalar(q, &x), ScalarDoc::Text("-3/2".into()));
        let f9 = FieldDoc::Extension { p: 3, modulus: vec![1, 0, 1] }.spec().unwrap();
        let t = f9.generator().unwrap();
        let doc = format_scalar(f9, &t);
        assert_eq!(doc, ScalarDoc::Coefficients(vec!["0".into(), "1".into()]));
        assert_eq!(parse_scalar(f9, &doc).unwrap(), t);
    }

    #[test]
    fn rejects_non_canonical_and_malformed() {
        let f5 = FieldSpec::prime(5).unwrap();
        for s in ["5", "-1", "x", "1/2"] {
            assert!(parse_scalar(f5, &ScalarDoc::Text(s.into())).is_err(), "{s}");
        }
        assert!(parse_scalar(FieldSpec::Rationals, &ScalarDoc::Text("1/0".into())).is_err());
        let err = serde_json::from_str::<FieldDoc>(r#"{"kind":"prime","p":5,"q":1}"#);
        assert!(err.is_err());
    }
}
