//! The coboundary operator of a binary operation, its explicit Hochschild
//! expansion, and exact cochain-complex linear algebra.
//!
//! Conventions. The coboundary is `delta f = -[f, mu]` (degree +1). For the
//! endomorphism operad this expands to the Hochschild form
//!
//! ```text
//! delta f = mu o (1 ⊗ f)
//!         - sum_{i=0..|f|} (-1)^i f o (1^i ⊗ mu ⊗ 1^(|f|-i))
//!         + (-1)^|f| mu o (f ⊗ 1)
//! ```
//!
//! with reduced degree `|f|` in the signs; at `|f| = -1` the middle sum is
//! empty and the last sign is `-1`. For arbitrary (non-associative) `mu`
//! the square is `delta(delta f) = [f, mu^2]`, so `delta^2 = 0` exactly
//! when `mu` is associative; the quotient machinery below requires that.

use serde::{Deserialize, Serialize};

use crate::flows::{associator, bracket};
use crate::linalg::{Matrix, RowSpan};
use crate::operation::{sign_is_negative, tensor_len};
use crate::{AlgebraSpec, Error, Operation, Result, Scalar};

/// Default cap on `rows * cols` of an assembled coboundary matrix.
pub const DEFAULT_ENTRY_CAP: usize = 10_000_000;

fn check_binary(mu: &Operation) -> Result<()> {
    if mu.degree() != 2 {
        return Err(Error::NotBinary(mu.degree()));
    }
    Ok(())
}

/// Error payload for a non-associative operation where a complex is needed.
fn not_associative(mu: &Operation) -> Result<()> {
    let a2 = associator(mu)?;
    if a2.is_zero() {
        Ok(())
    } else {
        Err(Error::NotAssociative {
            entries: a2.nonzero_entries(8),
        })
    }
}

/// The coboundary `delta f = -[f, mu]`, of degree `deg f + 1`.
///
/// For degree-0 operations, where the bracket is not defined, the value is
/// the two-term Hochschild expansion `mu o (1 ⊗ f) - mu o (f ⊗ 1)`.
pub fn coboundary(mu: &Operation, f: &Operation) -> Result<Operation> {
    check_binary(mu)?;
    mu.check_same_dim(f)?;
    if f.degree() == 0 {
        return Ok(&mu.compose_raw(f, 1)? - &mu.compose_raw(f, 0)?);
    }
    Ok(-&bracket(f, mu)?)
}

/// The explicit Hochschild expansion of the coboundary; agrees with
/// [`coboundary`] on every input and serves as its independent route.
pub fn hochschild_coboundary(mu: &Operation, f: &Operation) -> Result<Operation> {
    check_binary(mu)?;
    mu.check_same_dim(f)?;
    let rf = f.reduced_degree();
    let mut acc = mu.compose_raw(f, 1)?;
    for i in 0..f.degree() {
        let term = f.compose_raw(mu, i)?;
        if sign_is_negative(i as i64) {
            acc = &acc + &term;
        } else {
            acc = &acc - &term;
        }
    }
    let last = mu.compose_raw(f, 0)?;
    if sign_is_negative(rf) {
        acc = &acc - &last;
    } else {
        acc = &acc + &last;
    }
    Ok(acc)
}

/// The matrix of `delta : C^n -> C^(n+1)` in the standard tensor basis.
#[derive(Debug, Clone)]
pub struct CoboundaryMatrix {
    pub n: usize,
    pub matrix: Matrix,
}

impl CoboundaryMatrix {
    pub fn rows(&self) -> usize {
        self.matrix.rows()
    }

    pub fn cols(&self) -> usize {
        self.matrix.cols()
    }
}

/// The `j`-th standard basis cochain of `C^n`.
pub fn basis_cochain(dim: usize, degree: usize, j: usize) -> Result<Operation> {
    let len = tensor_len(dim, degree)?;
    let mut coeffs = vec![Scalar::zero(); len];
    coeffs[j] = Scalar::one();
    Operation::new(dim, degree, coeffs)
}

fn matrix_entries(dim: usize, n: usize, cap: usize) -> Result<usize> {
    let rows = tensor_len(dim, n + 1)?;
    let cols = tensor_len(dim, n)?;
    let entries = rows
        .checked_mul(cols)
        .ok_or(Error::SizeOverflow { dim, degree: n })?;
    if entries > cap {
        return Err(Error::ResourceCap { entries, cap });
    }
    Ok(entries)
}

/// Assembles the coboundary matrix; column `j` is the vectorized coboundary
/// of the `j`-th basis cochain.
pub fn coboundary_matrix(mu: &Operation, n: usize) -> Result<CoboundaryMatrix> {
    coboundary_matrix_capped(mu, n, DEFAULT_ENTRY_CAP)
}

pub fn coboundary_matrix_capped(mu: &Operation, n: usize, cap: usize) -> Result<CoboundaryMatrix> {
    check_binary(mu)?;
    let d = mu.dim();
    matrix_entries(d, n, cap)?;
    let rows = tensor_len(d, n + 1)?;
    let cols = tensor_len(d, n)?;
    let mut columns = Vec::with_capacity(cols);
    for j in 0..cols {
        let e = basis_cochain(d, n, j)?;
        columns.push(coboundary(mu, &e)?.into_coeffs());
    }
    Ok(CoboundaryMatrix {
        n,
        matrix: Matrix::from_columns(rows, &columns),
    })
}

/// Whether `delta f = 0`; meaningful for any binary `mu`.
pub fn is_cocycle(mu: &Operation, f: &Operation) -> Result<bool> {
    Ok(coboundary(mu, f)?.is_zero())
}

/// Solves `delta x = f` exactly and returns a witness preimage, or `None`.
/// Requires an associative `mu` (otherwise the complex is not defined) and
/// `deg f >= 1`: by convention the only coboundary in `C^0` is zero and
/// there is no `C^(-1)` witness to return.
pub fn is_coboundary(mu: &Operation, f: &Operation) -> Result<Option<Operation>> {
    is_coboundary_capped(mu, f, DEFAULT_ENTRY_CAP)
}

pub fn is_coboundary_capped(
    mu: &Operation,
    f: &Operation,
    cap: usize,
) -> Result<Option<Operation>> {
    check_binary(mu)?;
    mu.check_same_dim(f)?;
    not_associative(mu)?;
    if f.degree() == 0 {
        return Err(Error::DegreeTooLow { min: 1, got: 0 });
    }
    let n = f.degree() - 1;
    let cb = coboundary_matrix_capped(mu, n, cap)?;
    match cb.matrix.solve(f.coeffs()) {
        None => Ok(None),
        Some(x) => Ok(Some(Operation::new(mu.dim(), n, x)?)),
    }
}

/// Canonical cocycle representatives whose classes form a basis of `H^n`.
///
/// The choice is deterministic: the kernel basis of `delta_n` is reduced
/// against the echelon span of `Im delta_(n-1)`; every vector with a
/// nonzero remainder contributes its normalized remainder.
pub fn cohomology_basis(mu: &Operation, n: usize) -> Result<Vec<Operation>> {
    cohomology_basis_capped(mu, n, DEFAULT_ENTRY_CAP)
}

pub fn cohomology_basis_capped(mu: &Operation, n: usize, cap: usize) -> Result<Vec<Operation>> {
    check_binary(mu)?;
    not_associative(mu)?;
    let d = mu.dim();
    let delta_n = coboundary_matrix_capped(mu, n, cap)?;
    let kernel = delta_n.matrix.kernel_basis();
    let mut span = RowSpan::new();
    if n > 0 {
        let delta_prev = coboundary_matrix_capped(mu, n - 1, cap)?;
        for j in 0..delta_prev.cols() {
            span.insert(&delta_prev.matrix.column(j));
        }
    }
    let mut reps = Vec::new();
    for v in kernel {
        if let Some(r) = span.insert(&v) {
            reps.push(Operation::new(d, n, r)?);
        }
    }
    Ok(reps)
}

/// Exact dimension and rank table of the complex of an associative algebra.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyReport {
    pub algebra: Option<String>,
    /// `(n, dim H^n)` for `n = 0..=n_max`.
    pub dims: Vec<(usize, usize)>,
    /// `(n, rank delta_n, dim Ker delta_n)` for `n = 0..=n_max`.
    pub ranks: Vec<(usize, usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub representatives: Option<Vec<(usize, Vec<Operation>)>>,
}

/// Computes `dim H^n = dim Ker delta_n - rank delta_(n-1)` for
/// `n = 0..=n_max`, with `rank delta_(-1) = 0`, by fraction-free rank
/// computation. Errors on a non-associative `mu` (naming nonzero associator
/// entries) and pre-checks the entry cap for every requested degree.
pub fn cohomology_dimensions(algebra: &AlgebraSpec, n_max: usize) -> Result<CohomologyReport> {
    cohomology_dimensions_capped(algebra, n_max, DEFAULT_ENTRY_CAP)
}

pub fn cohomology_dimensions_capped(
    algebra: &AlgebraSpec,
    n_max: usize,
    cap: usize,
) -> Result<CohomologyReport> {
    let mu = algebra.mu();
    not_associative(mu)?;
    for n in 0..=n_max {
        matrix_entries(algebra.dim(), n, cap)?;
    }
    let mut ranks = Vec::with_capacity(n_max + 1);
    let mut dims = Vec::with_capacity(n_max + 1);
    let mut prev_rank = 0usize;
    for n in 0..=n_max {
        let cb = coboundary_matrix_capped(mu, n, cap)?;
        let rank = cb.matrix.rank_fraction_free();
        let nullity = cb.cols() - rank;
        ranks.push((n, rank, nullity));
        assert!(
            nullity >= prev_rank,
            "Im delta must lie in Ker delta for an associative operation"
        );
        dims.push((n, nullity - prev_rank));
        prev_rank = rank;
    }
    Ok(CohomologyReport {
        algebra: algebra.name().map(String::from),
        dims,
        ranks,
        representatives: None,
    })
}
