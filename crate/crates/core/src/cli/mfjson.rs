use serde::{Deserialize, Serialize};

use crate::algebra::{Field, PolyMatrix, PolyRing};
use crate::error::{MfError, Result};
use crate::mf::{mf_verify, MatrixFactorization};

/// The interchange form of a matrix factorization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MfJson {
    pub characteristic: u64,
    pub variables: Vec<String>,
    pub f: String,
    #[serde(rename = "A")]
    pub a: Vec<Vec<String>>,
    #[serde(rename = "B")]
    pub b: Vec<Vec<String>>,
}

/// The entries of a morphism (X, Y), read in the source's ring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphismJson {
    #[serde(rename = "X")]
    pub x: Vec<Vec<String>>,
    #[serde(rename = "Y")]
    pub y: Vec<Vec<String>>,
}

fn invalid(e: serde_json::Error) -> MfError {
    MfError::InvalidInput(format!("JSON: {e}"))
}

/// One MFJSON object or an array of them.
pub fn parse_documents(text: &str) -> Result<Vec<MfJson>> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(invalid)?;
    match value {
        serde_json::Value::Array(items) => items
            .into_iter()
            .map(|v| serde_json::from_value(v).map_err(invalid))
            .collect(),
        v => Ok(vec![serde_json::from_value(v).map_err(invalid)?]),
    }
}

pub fn parse_morphism(text: &str) -> Result<MorphismJson> {
    serde_json::from_str(text).map_err(invalid)
}

impl MfJson {
    pub fn from_factorization<F: Field>(m: &MatrixFactorization<F>) -> Self {
        let (f, a, b) = m.to_strings();
        MfJson {
            characteristic: m.field().characteristic(),
            variables: m.ring().var_names().to_vec(),
            f,
            a,
            b,
        }
    }

    pub fn ring<F: Field>(&self, field: &F) -> Result<PolyRing<F>> {
        if field.characteristic() != self.characteristic {
            return Err(MfError::InvalidInput(format!(
                "characteristic {} does not match {}",
                self.characteristic,
                field.characteristic()
            )));
        }
        Ok(PolyRing::with_names(field.clone(), self.variables.clone()))
    }

    fn check_square(&self) -> Result<usize> {
        let n = self.a.len();
        let square = |m: &Vec<Vec<String>>| m.len() == n && m.iter().all(|r| r.len() == n);
        if !square(&self.a) || !square(&self.b) {
            return Err(MfError::ShapeMismatch(
                "A and B must be square of equal size".into(),
            ));
        }
        Ok(n)
    }

    /// Whether AB = BA = fI holds, without building a factorization.
    pub fn satisfies_identity<F: Field>(&self, field: &F) -> Result<bool> {
        self.check_square()?;
        let ring = self.ring(field)?;
        let f = ring.parse(&self.f)?;
        let a = PolyMatrix::parse(&ring, &self.a)?;
        let b = PolyMatrix::parse(&ring, &self.b)?;
        Ok(mf_verify(&f, &a, &b))
    }

    pub fn to_factorization<F: Field>(&self, field: &F) -> Result<MatrixFactorization<F>> {
        self.check_square()?;
        MatrixFactorization::parse(self.ring(field)?, &self.f, &self.a, &self.b)
    }
}
