//! Time evolution of operations under the linear flow generated by
//! bracketing with a degree-1 cocycle.
//!
//! The flow is `df/dt = lambda [h, f]` for a degree-1 cocycle `h` of an
//! associative binary operation. Everything stays exact up to the matrix of
//! `ad_h = [h, .]` on the relevant cochain space; the matrix is then
//! converted to binary64 and integrated with the classical 4th-order
//! Runge-Kutta scheme at a fixed step. No adaptivity, so trajectories are
//! deterministic across runs.

use serde::{Deserialize, Serialize};

use crate::cohomology::{coboundary, coboundary_matrix};
use crate::deformation::{curvature, DeformationPair};
use crate::flows::{associator, bracket};
use crate::linalg::Matrix;
use crate::{Error, Operation, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Rk4,
}

/// Integration parameters. `lambda` is the single real rate constant the
/// flow is scaled by.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DynamicsConfig {
    pub lambda: f64,
    pub t_end: f64,
    pub dt: f64,
    pub method: Method,
}

impl DynamicsConfig {
    pub fn new(lambda: f64, t_end: f64, dt: f64) -> Result<Self> {
        let cfg = DynamicsConfig {
            lambda,
            t_end,
            dt,
            method: Method::Rk4,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if !self.lambda.is_finite() {
            return Err(Error::BadConfig("lambda must be finite"));
        }
        if !(self.dt.is_finite() && self.dt > 0.0) {
            return Err(Error::BadConfig("dt must be positive and finite"));
        }
        if !(self.t_end.is_finite() && self.t_end >= 0.0) {
            return Err(Error::BadConfig("t_end must be nonnegative and finite"));
        }
        Ok(())
    }
}

/// A sampled trajectory of one operation shape in binary64.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Trajectory {
    pub dim: usize,
    pub degree: usize,
    pub times: Vec<f64>,
    pub states: Vec<Vec<f64>>,
}

/// Exact matrix of `f -> [h, f]` on `C^n` (`n >= 1`), one bracket per basis
/// cochain.
pub fn ad_matrix(h: &Operation, n: usize) -> Result<Matrix> {
    if n == 0 {
        return Err(Error::DegreeTooLow { min: 1, got: 0 });
    }
    let d = h.dim();
    let cols = crate::operation::tensor_len(d, n)?;
    let mut columns = Vec::with_capacity(cols);
    for j in 0..cols {
        let e = crate::cohomology::basis_cochain(d, n, j)?;
        columns.push(bracket(h, &e)?.into_coeffs());
    }
    Ok(Matrix::from_columns(cols, &columns))
}

fn check_flow_inputs(mu: &Operation, h: &Operation) -> Result<()> {
    if mu.degree() != 2 {
        return Err(Error::NotBinary(mu.degree()));
    }
    mu.check_same_dim(h)?;
    if h.degree() != 1 {
        return Err(Error::DegreeMismatch {
            want: 1,
            got: h.degree(),
        });
    }
    let a2 = associator(mu)?;
    if !a2.is_zero() {
        return Err(Error::NotAssociative {
            entries: a2.nonzero_entries(8),
        });
    }
    if !coboundary(mu, h)?.is_zero() {
        return Err(Error::NotCocycle);
    }
    Ok(())
}

fn rk4(matrix: &[Vec<f64>], y0: Vec<f64>, config: &DynamicsConfig) -> Trajectory {
    let k = y0.len();
    let apply = |y: &[f64]| -> Vec<f64> {
        let mut out = vec![0.0; k];
        for (i, row) in matrix.iter().enumerate() {
            let mut acc = 0.0;
            for (a, b) in row.iter().zip(y) {
                acc += a * b;
            }
            out[i] = config.lambda * acc;
        }
        out
    };
    let steps = ((config.t_end / config.dt) + 1e-9).floor() as usize;
    let mut times = Vec::with_capacity(steps + 1);
    let mut states = Vec::with_capacity(steps + 1);
    let mut y = y0;
    times.push(0.0);
    states.push(y.clone());
    let dt = config.dt;
    for step in 1..=steps {
        let k1 = apply(&y);
        let y2: Vec<f64> = y.iter().zip(&k1).map(|(a, b)| a + 0.5 * dt * b).collect();
        let k2 = apply(&y2);
        let y3: Vec<f64> = y.iter().zip(&k2).map(|(a, b)| a + 0.5 * dt * b).collect();
        let k3 = apply(&y3);
        let y4: Vec<f64> = y.iter().zip(&k3).map(|(a, b)| a + dt * b).collect();
        let k4 = apply(&y4);
        for i in 0..k {
            y[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        }
        times.push(step as f64 * dt);
        states.push(y.clone());
    }
    Trajectory {
        dim: 0,
        degree: 0,
        times,
        states,
    }
}

fn float_matrix(m: &Matrix) -> Vec<Vec<f64>> {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m.get(i, j).to_f64()).collect())
        .collect()
}

/// Integrates `df/dt = lambda [h, f]` from `f0`. Requires an associative
/// `mu`, a degree-1 cocycle `h`, and `deg f0 >= 1`.
pub fn heisenberg_flow(
    mu: &Operation,
    h: &Operation,
    f0: &Operation,
    config: &DynamicsConfig,
) -> Result<Trajectory> {
    config.validate()?;
    check_flow_inputs(mu, h)?;
    mu.check_same_dim(f0)?;
    if f0.degree() == 0 {
        return Err(Error::DegreeTooLow { min: 1, got: 0 });
    }
    let gen = ad_matrix(h, f0.degree())?;
    let y0: Vec<f64> = f0.coeffs().iter().map(|c| c.to_f64()).collect();
    let mut traj = rk4(&float_matrix(&gen), y0, config);
    traj.dim = f0.dim();
    traj.degree = f0.degree();
    Ok(traj)
}

/// Integrates the same flow for the curvature `d omega + (1/2)[omega, omega]`
/// of a deformation pair, taken at the flow's ground operation.
pub fn curvature_flow(
    mu: &Operation,
    h: &Operation,
    pair: &DeformationPair,
    config: &DynamicsConfig,
) -> Result<Trajectory> {
    mu.check_same_dim(pair.mu())?;
    let omega0 = curvature(mu, pair.omega())?;
    heisenberg_flow(mu, h, &omega0, config)
}

/// Sup-norm of `delta(state)` at every sample, using the exact coboundary
/// matrix converted to binary64.
pub fn cocycle_defect_trace(mu: &Operation, traj: &Trajectory) -> Result<Vec<f64>> {
    let cb = coboundary_matrix(mu, traj.degree)?;
    let m = float_matrix(&cb.matrix);
    Ok(traj
        .states
        .iter()
        .map(|y| {
            m.iter()
                .map(|row| {
                    row.iter()
                        .zip(y)
                        .map(|(a, b)| a * b)
                        .sum::<f64>()
                        .abs()
                })
                .fold(0.0, f64::max)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra;
    use crate::cohomology::cohomology_basis;
    use crate::rng::Lcg;
    use crate::Scalar;

    fn dual_derivation() -> Operation {
        Operation::from_ints(2, 1, &[0, 0, 0, 1]).unwrap()
    }

    fn sup_diff(a: &[f64], b: &[f64]) -> f64 {
        a.iter()
            .zip(b)
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max)
    }

    /// Seeded integer combination of a kernel basis; a degree-n cocycle.
    fn random_cocycle(mu: &Operation, n: usize, seed: u64) -> Operation {
        let cb = crate::cohomology::coboundary_matrix(mu, n).unwrap();
        let basis = cb.matrix.kernel_basis();
        let mut rng = Lcg::new(seed);
        loop {
            let mut acc = Operation::zero(mu.dim(), n).unwrap();
            for v in &basis {
                let w = Scalar::from(rng.next_coeff(3));
                let op = Operation::new(mu.dim(), n, v.clone()).unwrap();
                acc = &acc + &op.scale(&w);
            }
            if !acc.is_zero() {
                return acc;
            }
        }
    }

    #[test]
    fn zero_rate_is_constant() {
        let spec = algebra::dual_numbers();
        let h = dual_derivation();
        let f0 = Operation::random(2, 2, 40, 3).unwrap();
        let cfg = DynamicsConfig::new(0.0, 1.0, 0.01).unwrap();
        let traj = heisenberg_flow(spec.mu(), &h, &f0, &cfg).unwrap();
        for s in &traj.states {
            assert_eq!(s, &traj.states[0]);
        }
    }

    #[test]
    fn scalar_model_is_static() {
        // H^1 = 0: the only degree-1 cocycle is zero, and its flow is constant
        let spec = algebra::scalar_model();
        assert!(cohomology_basis(spec.mu(), 1).unwrap().is_empty());
        let h = Operation::zero(1, 1).unwrap();
        let f0 = Operation::from_ints(1, 2, &[5]).unwrap();
        let cfg = DynamicsConfig::new(1.0, 1.0, 0.01).unwrap();
        let traj = heisenberg_flow(spec.mu(), &h, &f0, &cfg).unwrap();
        for s in &traj.states {
            assert_eq!(s, &traj.states[0]);
        }
        // a nonzero degree-1 operation is not a cocycle there
        let h_bad = Operation::from_ints(1, 1, &[1]).unwrap();
        assert_eq!(
            heisenberg_flow(spec.mu(), &h_bad, &f0, &cfg).unwrap_err(),
            Error::NotCocycle
        );
    }

    #[test]
    fn flow_of_mu_itself_is_constant() {
        // [h, mu] = -delta h = 0 for a cocycle h, so mu is a fixed point
        let spec = algebra::dual_numbers();
        let h = dual_derivation();
        let bracket_hm = bracket(&h, spec.mu()).unwrap();
        assert!(bracket_hm.is_zero());
        let cfg = DynamicsConfig::new(1.0, 1.0, 1e-3).unwrap();
        let traj = heisenberg_flow(spec.mu(), &h, spec.mu(), &cfg).unwrap();
        let last = traj.states.last().unwrap();
        assert!(sup_diff(last, &traj.states[0]) < 1e-12);
    }

    #[test]
    fn precondition_errors() {
        let spec = algebra::dual_numbers();
        let f0 = Operation::random(2, 2, 41, 3).unwrap();
        let cfg = DynamicsConfig::new(1.0, 1.0, 0.01).unwrap();
        // not a cocycle
        let h_bad = Operation::from_ints(2, 1, &[0, 1, 0, 0]).unwrap();
        assert_eq!(
            heisenberg_flow(spec.mu(), &h_bad, &f0, &cfg).unwrap_err(),
            Error::NotCocycle
        );
        // non-associative ground operation
        let bad = algebra::nonassociative_demo();
        let h = Operation::zero(2, 1).unwrap();
        assert!(matches!(
            heisenberg_flow(bad.mu(), &h, &f0, &cfg).unwrap_err(),
            Error::NotAssociative { .. }
        ));
        // wrong generator degree
        let h2 = Operation::random(2, 2, 42, 2).unwrap();
        assert!(matches!(
            heisenberg_flow(spec.mu(), &h2, &f0, &cfg).unwrap_err(),
            Error::DegreeMismatch { want: 1, .. }
        ));
        // bad config
        assert!(DynamicsConfig::new(1.0, 1.0, 0.0).is_err());
        assert!(DynamicsConfig::new(f64::NAN, 1.0, 0.1).is_err());
    }

    #[test]
    fn cocycle_preservation() {
        let spec = algebra::dual_numbers();
        let h = dual_derivation();
        let f0 = random_cocycle(spec.mu(), 2, 50);
        assert!(crate::cohomology::is_cocycle(spec.mu(), &f0).unwrap());
        let cfg = DynamicsConfig::new(1.0, 1.0, 1e-3).unwrap();
        let traj = heisenberg_flow(spec.mu(), &h, &f0, &cfg).unwrap();
        let defects = cocycle_defect_trace(spec.mu(), &traj).unwrap();
        assert!(defects.iter().all(|d| *d < 1e-9), "max defect {:?}", defects.iter().cloned().fold(0.0, f64::max));
    }

    #[test]
    fn flow_is_linear_in_the_state() {
        let spec = algebra::dual_numbers();
        let h = dual_derivation();
        let cfg = DynamicsConfig::new(1.0, 0.5, 1e-3).unwrap();
        let f0 = Operation::random(2, 2, 51, 3).unwrap();
        let g0 = Operation::random(2, 2, 52, 3).unwrap();
        let combo = &f0.scale(&Scalar::from(2)) + &g0.scale(&Scalar::from(-3));
        let tf = heisenberg_flow(spec.mu(), &h, &f0, &cfg).unwrap();
        let tg = heisenberg_flow(spec.mu(), &h, &g0, &cfg).unwrap();
        let tc = heisenberg_flow(spec.mu(), &h, &combo, &cfg).unwrap();
        let last = tc.states.last().unwrap();
        let expect: Vec<f64> = tf
            .states
            .last()
            .unwrap()
            .iter()
            .zip(tg.states.last().unwrap())
            .map(|(a, b)| 2.0 * a - 3.0 * b)
            .collect();
        assert!(sup_diff(last, &expect) < 1e-9);
    }

    #[test]
    fn fourth_order_convergence() {
        let spec = algebra::dual_numbers();
        let h = dual_derivation();
        let f0 = Operation::random(2, 2, 53, 3).unwrap();
        let run = |dt: f64| {
            let cfg = DynamicsConfig::new(1.0, 1.0, dt).unwrap();
            heisenberg_flow(spec.mu(), &h, &f0, &cfg)
                .unwrap()
                .states
                .last()
                .unwrap()
                .clone()
        };
        let reference = run(0.005);
        let e1 = sup_diff(&run(0.05), &reference);
        let e2 = sup_diff(&run(0.025), &reference);
        assert!(e1 > 1e-12, "step error too small to measure: {e1}");
        let factor = e1 / e2;
        assert!(
            (12.0..=20.0).contains(&factor),
            "convergence factor {factor} (e1 {e1}, e2 {e2})"
        );
    }

    #[test]
    fn curvature_flow_basics() {
        let spec = algebra::dual_numbers();
        let h = dual_derivation();
        let cfg = DynamicsConfig::new(1.0, 1.0, 1e-3).unwrap();

        // zero curvature stays zero
        let pair = DeformationPair::new(spec.mu().clone(), spec.mu().clone()).unwrap();
        let traj = curvature_flow(spec.mu(), &h, &pair, &cfg).unwrap();
        assert!(traj.states.iter().all(|s| s.iter().all(|x| *x == 0.0)));

        // a cocycle deformation gives a curvature with zero coboundary,
        // and the defect stays below tolerance along the flow
        let omega = random_cocycle(spec.mu(), 2, 54);
        let pair = DeformationPair::from_omega(spec.mu().clone(), omega).unwrap();
        let omega_curv = curvature(pair.mu(), pair.omega()).unwrap();
        assert!(!omega_curv.is_zero());
        assert!(crate::cohomology::is_cocycle(spec.mu(), &omega_curv).unwrap());
        let traj = curvature_flow(spec.mu(), &h, &pair, &cfg).unwrap();
        let defects = cocycle_defect_trace(spec.mu(), &traj).unwrap();
        assert!(defects.iter().all(|d| *d < 1e-9));
    }

    #[test]
    fn single_point_trajectory() {
        let spec = algebra::dual_numbers();
        let h = dual_derivation();
        let f0 = Operation::random(2, 2, 55, 3).unwrap();
        let cfg = DynamicsConfig::new(1.0, 0.0, 0.5).unwrap();
        let traj = heisenberg_flow(spec.mu(), &h, &f0, &cfg).unwrap();
        assert_eq!(traj.times, vec![0.0]);
        assert_eq!(traj.states.len(), 1);
    }

    #[test]
    fn trajectory_json_round_trip() {
        let spec = algebra::dual_numbers();
        let h = dual_derivation();
        let f0 = Operation::random(2, 2, 56, 3).unwrap();
        let cfg = DynamicsConfig::new(0.5, 0.1, 0.01).unwrap();
        let traj = heisenberg_flow(spec.mu(), &h, &f0, &cfg).unwrap();
        let text = serde_json::to_string(&traj).unwrap();
        let back: Trajectory = serde_json::from_str(&text).unwrap();
        assert_eq!(back, traj);
    }
}
