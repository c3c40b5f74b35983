//! Algebra presentations: a module dimension plus binary structure constants.

use serde::{Deserialize, Serialize};

use crate::{Error, Operation, Result, Scalar};

/// A finite-dimensional algebra given by its structure constants, i.e. a
/// binary operation over a module of dimension `dim`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawAlgebraSpec")]
pub struct AlgebraSpec {
    dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    mu: Operation,
}

#[derive(Deserialize)]
struct RawAlgebraSpec {
    dim: usize,
    #[serde(default)]
    name: Option<String>,
    mu: Operation,
}

impl TryFrom<RawAlgebraSpec> for AlgebraSpec {
    type Error = Error;
    fn try_from(raw: RawAlgebraSpec) -> Result<AlgebraSpec> {
        let spec = AlgebraSpec::new(raw.name, raw.mu)?;
        if spec.dim != raw.dim {
            return Err(Error::DimMismatch(raw.dim, spec.dim));
        }
        Ok(spec)
    }
}

impl AlgebraSpec {
    pub fn new(name: Option<String>, mu: Operation) -> Result<Self> {
        if mu.degree() != 2 {
            return Err(Error::NotBinary(mu.degree()));
        }
        Ok(AlgebraSpec {
            dim: mu.dim(),
            name,
            mu,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn mu(&self) -> &Operation {
        &self.mu
    }
}

/// The one-dimensional model: `m = 1`, every operation is a single rational.
pub fn scalar_model() -> AlgebraSpec {
    let mu = Operation::from_ints(1, 2, &[1]).unwrap();
    AlgebraSpec::new(Some("scalar".into()), mu).unwrap()
}

/// Dual numbers K[e]/(e^2) on the basis (1, e):
/// `1*1 = 1`, `1*e = e*1 = e`, `e*e = 0`.
pub fn dual_numbers() -> AlgebraSpec {
    let mut mu = Operation::zero(2, 2).unwrap();
    mu.set_coeff(&[0, 0], 0, Scalar::one());
    mu.set_coeff(&[0, 1], 1, Scalar::one());
    mu.set_coeff(&[1, 0], 1, Scalar::one());
    AlgebraSpec::new(Some("dual numbers".into()), mu).unwrap()
}

/// 2x2 matrix algebra on the basis (E11, E12, E21, E22), with
/// `E_ij E_kl = delta_jk E_il`.
pub fn matrix_algebra_2() -> AlgebraSpec {
    let names: [(usize, usize); 4] = [(0, 0), (0, 1), (1, 0), (1, 1)];
    let mut mu = Operation::zero(4, 2).unwrap();
    for (a, &(i, j)) in names.iter().enumerate() {
        for (b, &(k, l)) in names.iter().enumerate() {
            if j == k {
                let c = names.iter().position(|&u| u == (i, l)).unwrap();
                mu.set_coeff(&[a, b], c, Scalar::one());
            }
        }
    }
    AlgebraSpec::new(Some("mat2".into()), mu).unwrap()
}

/// A fixed seeded non-associative binary operation in dimension 2, for
/// deformation demos.
pub fn nonassociative_demo() -> AlgebraSpec {
    let mu = Operation::random(2, 2, 2024, 2).unwrap();
    AlgebraSpec::new(Some("nonassoc-d2".into()), mu).unwrap()
}
