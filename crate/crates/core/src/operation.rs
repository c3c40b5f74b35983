//! Multilinear operations on a finite-dimensional module, with the partial
//! compositions of the endomorphism operad.
//!
//! An [`Operation`] of degree `n` over a module of dimension `d` is a dense
//! tensor `f[j1,...,jn; k]`: the `e_k`-coefficient of `f(e_{j1},...,e_{jn})`
//! in the fixed basis. Flat layout (fixed so serialized operations are
//! portable bit-exactly): the output index `k` varies fastest, the input
//! indices from `j1` (slowest) to `jn`:
//!
//! ```text
//! flat(j1,...,jn; k) = ((...(j1*d + j2)*d + ...)*d + jn)*d + k
//! ```
//!
//! The reduced degree is `|f| = deg f - 1` (so `|f| = -1` for degree 0);
//! sign exponents are integer products reduced mod 2, with negative reduced
//! degrees handled by ordinary integer parity.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::rng::Lcg;
use crate::scalar::Scalar;
use crate::{Error, Result};

/// `dim^(degree+1)` with overflow checking.
pub(crate) fn tensor_len(dim: usize, degree: usize) -> Result<usize> {
    let exp = u32::try_from(degree)
        .ok()
        .and_then(|e| e.checked_add(1))
        .ok_or(Error::SizeOverflow { dim, degree })?;
    dim.checked_pow(exp)
        .ok_or(Error::SizeOverflow { dim, degree })
}

/// True iff `(-1)^e = -1` for an integer exponent `e` (which may be negative).
pub fn sign_is_negative(e: i64) -> bool {
    e.rem_euclid(2) == 1
}

/// A homogeneous element of the endomorphism operad: a multilinear map
/// `L^(⊗n) -> L` stored as an exact coefficient tensor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawOperation")]
pub struct Operation {
    dim: usize,
    degree: usize,
    coeffs: Vec<Scalar>,
}

#[derive(Deserialize)]
struct RawOperation {
    dim: usize,
    degree: usize,
    coeffs: Vec<Scalar>,
}

impl TryFrom<RawOperation> for Operation {
    type Error = Error;
    fn try_from(raw: RawOperation) -> Result<Operation> {
        Operation::new(raw.dim, raw.degree, raw.coeffs)
    }
}

impl Operation {
    /// Validates the shape and normalizes nothing further: `Scalar` values
    /// are already reduced.
    pub fn new(dim: usize, degree: usize, coeffs: Vec<Scalar>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDim);
        }
        let want = tensor_len(dim, degree)?;
        if coeffs.len() != want {
            return Err(Error::CoeffLength {
                got: coeffs.len(),
                want,
            });
        }
        Ok(Operation {
            dim,
            degree,
            coeffs,
        })
    }

    /// Convenience constructor from small integers, in the flat layout.
    pub fn from_ints(dim: usize, degree: usize, coeffs: &[i64]) -> Result<Self> {
        Self::new(
            dim,
            degree,
            coeffs.iter().map(|&c| Scalar::from(c)).collect(),
        )
    }

    pub fn zero(dim: usize, degree: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDim);
        }
        let len = tensor_len(dim, degree)?;
        Ok(Operation {
            dim,
            degree,
            coeffs: vec![Scalar::zero(); len],
        })
    }

    /// The operad unit: the identity map in degree 1.
    pub fn unit(dim: usize) -> Result<Self> {
        let mut op = Operation::zero(dim, 1)?;
        for j in 0..dim {
            op.coeffs[j * dim + j] = Scalar::one();
        }
        Ok(op)
    }

    /// Deterministic pseudo-random operation with integer coefficients in
    /// `[-bound, bound]`, drawn from the documented generator seeded with
    /// `seed` (one draw per flat index, ascending).
    pub fn random(dim: usize, degree: usize, seed: u64, bound: u64) -> Result<Self> {
        if bound == 0 {
            return Err(Error::ZeroBound);
        }
        let mut rng = Lcg::new(seed);
        Self::random_from(&mut rng, dim, degree, bound)
    }

    /// Same draw, continuing an existing stream.
    pub fn random_from(rng: &mut Lcg, dim: usize, degree: usize, bound: u64) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDim);
        }
        if bound == 0 {
            return Err(Error::ZeroBound);
        }
        let len = tensor_len(dim, degree)?;
        let coeffs = (0..len).map(|_| Scalar::from(rng.next_coeff(bound))).collect();
        Ok(Operation {
            dim,
            degree,
            coeffs,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// `|f| = deg f - 1`; may be `-1`.
    pub fn reduced_degree(&self) -> i64 {
        self.degree as i64 - 1
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Scalar> {
        self.coeffs
    }

    pub fn coeff(&self, inputs: &[usize], output: usize) -> &Scalar {
        assert_eq!(inputs.len(), self.degree);
        let mut idx = 0usize;
        for &j in inputs {
            debug_assert!(j < self.dim);
            idx = idx * self.dim + j;
        }
        &self.coeffs[idx * self.dim + output]
    }

    pub fn set_coeff(&mut self, inputs: &[usize], output: usize, value: Scalar) {
        assert_eq!(inputs.len(), self.degree);
        let mut idx = 0usize;
        for &j in inputs {
            idx = idx * self.dim + j;
        }
        self.coeffs[idx * self.dim + output] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    /// Largest absolute coefficient value; zero for the zero operation.
    pub fn max_abs_coeff(&self) -> Scalar {
        let mut best = Scalar::zero();
        for c in &self.coeffs {
            let a = c.abs();
            if a > best {
                best = a;
            }
        }
        best
    }

    pub fn scale(&self, s: &Scalar) -> Operation {
        Operation {
            dim: self.dim,
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    fn check_same_shape(&self, other: &Operation) {
        assert_eq!(self.dim, other.dim, "operation dimension mismatch");
        assert_eq!(self.degree, other.degree, "operation degree mismatch");
    }

    pub(crate) fn check_same_dim(&self, other: &Operation) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimMismatch(self.dim, other.dim));
        }
        Ok(())
    }

    /// Exact multilinear evaluation in the fixed basis.
    pub fn apply(&self, args: &[Vec<Scalar>]) -> Result<Vec<Scalar>> {
        if args.len() != self.degree {
            return Err(Error::Arity {
                want: self.degree,
                got: args.len(),
            });
        }
        for a in args {
            if a.len() != self.dim {
                return Err(Error::VectorLength {
                    got: a.len(),
                    want: self.dim,
                });
            }
        }
        let d = self.dim;
        let n = self.degree;
        let mut out = vec![Scalar::zero(); d];
        let mut digits = vec![0usize; n];
        let blocks = tensor_len(d, n)? / d;
        for flat in 0..blocks {
            // decode flat into (j1,...,jn), j1 slowest
            let mut rem = flat;
            for t in (0..n).rev() {
                digits[t] = rem % d;
                rem /= d;
            }
            let mut weight = Scalar::one();
            let mut zero = false;
            for (t, &j) in digits.iter().enumerate() {
                if args[t][j].is_zero() {
                    zero = true;
                    break;
                }
                weight = &weight * &args[t][j];
            }
            if zero {
                continue;
            }
            let base = flat * d;
            for (k, o) in out.iter_mut().enumerate() {
                o.add_mul(&self.coeffs[base + k], &weight);
            }
        }
        Ok(out)
    }

    /// Unsigned substitution `f o (1^i ⊗ g ⊗ 1^(|f|-i))`: plugs `g` into the
    /// input block starting at slot `i` of `f`, without the composition sign.
    pub(crate) fn compose_raw(&self, g: &Operation, i: usize) -> Result<Operation> {
        self.check_same_dim(g)?;
        if self.degree == 0 {
            return Err(Error::NoSlots);
        }
        let max = self.reduced_degree();
        if (i as i64) > max {
            return Err(Error::CompositionRange {
                index: i,
                max,
                degree: self.degree,
            });
        }
        let d = self.dim;
        let m = self.degree;
        let n = g.degree;
        let p = m + n - 1;
        let mut out = Operation::zero(d, p)?;

        let prefix = tensor_len(d, i)? / d; // d^i
        let mid = tensor_len(d, n)? / d; // d^n
        let suffix = tensor_len(d, m - 1 - i)? / d; // d^(m-1-i)

        for a in 0..prefix {
            for mb in 0..mid {
                let g_base = mb * d;
                for b in 0..suffix {
                    let out_base = ((a * mid + mb) * suffix + b) * d;
                    for s in 0..d {
                        let gc = &g.coeffs[g_base + s];
                        if gc.is_zero() {
                            continue;
                        }
                        let f_base = ((a * d + s) * suffix + b) * d;
                        for k in 0..d {
                            let fc = &self.coeffs[f_base + k];
                            if fc.is_zero() {
                                continue;
                            }
                            out.coeffs[out_base + k].add_mul(fc, gc);
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Partial composition `f ∘_i g = (-1)^(i*|g|) f o (1^i ⊗ g ⊗ 1^(|f|-i))`
    /// for `0 <= i <= |f|`. The sign exponent uses the reduced degree `|g|`,
    /// which may be `-1`.
    pub fn compose_at(&self, g: &Operation, i: usize) -> Result<Operation> {
        let raw = self.compose_raw(g, i)?;
        if sign_is_negative(i as i64 * g.reduced_degree()) {
            Ok(-&raw)
        } else {
            Ok(raw)
        }
    }

    /// Up to `limit` nonzero entries rendered as `[j1,...,jn;k] = value`.
    pub fn nonzero_entries(&self, limit: usize) -> Vec<String> {
        let d = self.dim;
        let n = self.degree;
        let mut out = Vec::new();
        for (flat, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let k = flat % d;
            let mut rem = flat / d;
            let mut digits = vec![0usize; n];
            for t in (0..n).rev() {
                digits[t] = rem % d;
                rem /= d;
            }
            let inputs: Vec<String> = digits.iter().map(|j| j.to_string()).collect();
            out.push(format!("[{};{}] = {}", inputs.join(","), k, c));
            if out.len() == limit {
                break;
            }
        }
        out
    }
}

impl fmt::Display for Operation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0 (dim {}, degree {})", self.dim, self.degree);
        }
        let entries = self.nonzero_entries(8);
        let more = if entries.len() == 8 { ", ..." } else { "" };
        write!(
            f,
            "dim {}, degree {}: {}{}",
            self.dim,
            self.degree,
            entries.join(", "),
            more
        )
    }
}

impl Add for &Operation {
    type Output = Operation;
    fn add(self, rhs: &Operation) -> Operation {
        self.check_same_shape(rhs);
        Operation {
            dim: self.dim,
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Operation {
    type Output = Operation;
    fn sub(self, rhs: &Operation) -> Operation {
        self.check_same_shape(rhs);
        Operation {
            dim: self.dim,
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &Operation {
    type Output = Operation;
    fn neg(self) -> Operation {
        Operation {
            dim: self.dim,
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}
