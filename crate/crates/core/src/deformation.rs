//! Deformation calculus for a pair of binary operations.
//!
//! For a ground operation `mu` and a measured operation `mu0 = mu + omega`,
//! write `d x = [x, mu]` and `∇x = d x + [x, omega] = [x, mu0]`, and let
//! `A = mu^2`, `A0 = mu0^2` be the associators. The implemented identities:
//!
//! ```text
//! Omega := A0 - A = d omega + (1/2)[omega, omega]      (Maurer-Cartan)
//! ∇A0   = d A0 + [A0, omega] = 0                       (Bianchi; holds for every pair)
//! ∇^2 f = [f, A0]
//! mu^2 ∘ mu = mu ∘ mu^2,  (mu^2 ∘ mu) ∘ mu = mu^2 ∘ mu^2   (Albert identities)
//! ```
//!
//! The gauge system `∇Omega = 0`, `∇Omega† = J`, `∇J = [Omega†, Omega]`
//! needs `d^2 = 0`, so the ground operation must be associative there. The
//! dual `Omega†` is pluggable: the built-in modes are `±Omega`, and a custom
//! degree-3 operation may be supplied.

use serde::{Deserialize, Serialize};

use crate::flows::{associator, bracket, total_compose};
use crate::{Error, Operation, Result, Scalar};

/// A ground operation together with its measured deformation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeformationPair {
    mu: Operation,
    mu0: Operation,
    omega: Operation,
}

impl DeformationPair {
    pub fn new(mu: Operation, mu0: Operation) -> Result<Self> {
        check_binary_pair(&mu, &mu0)?;
        let omega = &mu0 - &mu;
        Ok(DeformationPair { mu, mu0, omega })
    }

    pub fn from_omega(mu: Operation, omega: Operation) -> Result<Self> {
        check_binary_pair(&mu, &omega)?;
        let mu0 = &mu + &omega;
        Ok(DeformationPair { mu, mu0, omega })
    }

    pub fn mu(&self) -> &Operation {
        &self.mu
    }

    pub fn mu0(&self) -> &Operation {
        &self.mu0
    }

    pub fn omega(&self) -> &Operation {
        &self.omega
    }
}

fn check_binary_pair(a: &Operation, b: &Operation) -> Result<()> {
    if a.degree() != 2 {
        return Err(Error::NotBinary(a.degree()));
    }
    if b.degree() != 2 {
        return Err(Error::NotBinary(b.degree()));
    }
    a.check_same_dim(b)
}

/// `d omega + (1/2)[omega, omega]` with `d omega = [omega, mu]`; equals the
/// associator change `mu0^2 - mu^2` (the Maurer-Cartan identity).
pub fn curvature(mu: &Operation, omega: &Operation) -> Result<Operation> {
    check_binary_pair(mu, omega)?;
    let d_omega = bracket(omega, mu)?;
    let half_sq = bracket(omega, omega)?.scale(&Scalar::from_fraction(1, 2)?);
    Ok(&d_omega + &half_sq)
}

/// `∇f = d f + [f, omega] = [f, mu] + [f, omega]`; requires `deg f >= 1`.
pub fn covariant_derivative(mu: &Operation, omega: &Operation, f: &Operation) -> Result<Operation> {
    check_binary_pair(mu, omega)?;
    Ok(&bracket(f, mu)? + &bracket(f, omega)?)
}

/// `d A0 + [A0, omega]`; identically zero for every pair, which is the
/// power-associativity constraint in disguise. Computed, not assumed.
pub fn bianchi_residual(pair: &DeformationPair) -> Result<Operation> {
    let a0 = associator(&pair.mu0)?;
    covariant_derivative(&pair.mu, &pair.omega, &a0)
}

/// `(mu^2 ∘ mu - mu ∘ mu^2, (mu^2 ∘ mu) ∘ mu - mu^2 ∘ mu^2)`; both vanish
/// for every binary operation.
pub fn albert_residuals(mu: &Operation) -> Result<(Operation, Operation)> {
    if mu.degree() != 2 {
        return Err(Error::NotBinary(mu.degree()));
    }
    let a2 = associator(mu)?;
    let left = total_compose(&a2, mu)?;
    let first = &left - &total_compose(mu, &a2)?;
    let second = &total_compose(&left, mu)? - &total_compose(&a2, &a2)?;
    Ok((first, second))
}

/// `(A0 - A) - (d omega + (1/2)[omega, omega])`; identically zero.
pub fn mc_residual(pair: &DeformationPair) -> Result<Operation> {
    let a = associator(&pair.mu)?;
    let a0 = associator(&pair.mu0)?;
    let omega_exact = &a0 - &a;
    Ok(&omega_exact - &curvature(&pair.mu, &pair.omega)?)
}

/// The dual ansatz for the gauge equations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DualMode {
    /// `Omega† = Omega`.
    SelfDual,
    /// `Omega† = -Omega`.
    AntiSelfDual,
    /// A caller-supplied degree-3 operation.
    Custom(Operation),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DualModeName {
    SelfDual,
    AntiSelfDual,
    Custom,
}

impl DualMode {
    pub fn name(&self) -> DualModeName {
        match self {
            DualMode::SelfDual => DualModeName::SelfDual,
            DualMode::AntiSelfDual => DualModeName::AntiSelfDual,
            DualMode::Custom(_) => DualModeName::Custom,
        }
    }

    fn dual_of(&self, omega_curv: &Operation) -> Result<Operation> {
        match self {
            DualMode::SelfDual => Ok(omega_curv.clone()),
            DualMode::AntiSelfDual => Ok(-omega_curv),
            DualMode::Custom(op) => {
                if op.degree() != 3 {
                    return Err(Error::DegreeMismatch {
                        want: 3,
                        got: op.degree(),
                    });
                }
                omega_curv.check_same_dim(op)?;
                Ok(op.clone())
            }
        }
    }
}

/// An operation with its largest absolute coefficient, for report output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OpEntry {
    pub operation: Operation,
    pub max_abs_coeff: Scalar,
}

impl From<Operation> for OpEntry {
    fn from(operation: Operation) -> Self {
        let max_abs_coeff = operation.max_abs_coeff();
        OpEntry {
            operation,
            max_abs_coeff,
        }
    }
}

/// Associators, curvature, and residuals of a deformation pair. The gauge
/// fields are present only when the ground operation is associative.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeformationReport {
    pub ground_associative: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub dual_mode: Option<DualModeName>,
    #[serde(rename = "A")]
    pub a: OpEntry,
    #[serde(rename = "A0")]
    pub a0: OpEntry,
    #[serde(rename = "Omega")]
    pub omega: OpEntry,
    pub mc_residual: OpEntry,
    pub bianchi_residual: OpEntry,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub dual: Option<OpEntry>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub current: Option<OpEntry>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub current_definitional: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub gauge_residual_1: Option<OpEntry>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub gauge_residual_2: Option<OpEntry>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub conservation_residual: Option<OpEntry>,
}

fn report_base(pair: &DeformationPair) -> Result<(DeformationReport, Operation)> {
    let a = associator(&pair.mu)?;
    let a0 = associator(&pair.mu0)?;
    let omega_curv = &a0 - &a;
    let report = DeformationReport {
        ground_associative: a.is_zero(),
        dual_mode: None,
        a: a.into(),
        a0: a0.into(),
        omega: omega_curv.clone().into(),
        mc_residual: mc_residual(pair)?.into(),
        bianchi_residual: bianchi_residual(pair)?.into(),
        dual: None,
        current: None,
        current_definitional: None,
        gauge_residual_1: None,
        gauge_residual_2: None,
        conservation_residual: None,
    };
    Ok((report, omega_curv))
}

/// Curvature and Maurer-Cartan/Bianchi residuals only; valid for any ground
/// operation.
pub fn basic_report(pair: &DeformationPair) -> Result<DeformationReport> {
    Ok(report_base(pair)?.0)
}

/// The full gauge report: `residual_1 = ∇Omega`, `residual_2 = ∇Omega† - J`
/// (with `J = ∇Omega†` when no current is supplied), and the conservation
/// residual `∇J - [Omega†, Omega]`. Errors when the ground operation is not
/// associative, since the gauge system presumes `d^2 = 0`.
pub fn gauge_residuals(
    pair: &DeformationPair,
    dual_mode: &DualMode,
    current: Option<&Operation>,
) -> Result<DeformationReport> {
    let (mut report, omega_curv) = report_base(pair)?;
    if !report.ground_associative {
        return Err(Error::NotAssociative {
            entries: report.a.operation.nonzero_entries(8),
        });
    }
    let dual = dual_mode.dual_of(&omega_curv)?;
    let nabla = |x: &Operation| covariant_derivative(&pair.mu, &pair.omega, x);

    let nabla_dual = nabla(&dual)?;
    let (j, definitional) = match current {
        None => (nabla_dual.clone(), true),
        Some(j) => {
            if j.degree() != dual.degree() + 1 {
                return Err(Error::DegreeMismatch {
                    want: dual.degree() + 1,
                    got: j.degree(),
                });
            }
            j.check_same_dim(&dual)?;
            (j.clone(), false)
        }
    };

    report.dual_mode = Some(dual_mode.name());
    report.gauge_residual_1 = Some(nabla(&omega_curv)?.into());
    report.gauge_residual_2 = Some((&nabla_dual - &j).into());
    report.conservation_residual = Some((&nabla(&j)? - &bracket(&dual, &omega_curv)?).into());
    report.dual = Some(dual.into());
    report.current = Some(j.into());
    report.current_definitional = Some(definitional);
    Ok(report)
}
