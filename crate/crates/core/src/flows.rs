//! Operadic flows of order 1 to 3, the cup product, Gerstenhaber brackets,
//! and the variation operators.
//!
//! Sign conventions. Formulas mix the full degree (written `f`) and the
//! reduced degree (`|f| = f - 1`); each operator records which one it uses:
//!
//! ```text
//! <h|f>      = sum_{0 <= i <= |h|} h ∘_i f
//! <h|fg>     = sum_{0 <= i <= |h|-1, i+f <= j <= |f|+|h|} (h ∘_i f) ∘_j g
//! <h|fgb>    = sum_{0 <= i <= |h|-2, i+f <= j <= |h|+|f|-1, j+g <= k <= |h|+|f|+|g|}
//!              ((h ∘_i f) ∘_j g) ∘_k b
//! f ⌣ g      = (-1)^f (mu ∘_0 f) ∘_f g                      (full degree f)
//! mu^2       = <mu|mu>                                      (the associator)
//! [f,g]      = <f|g> - (-1)^(|f||g|) <g|f>                  (reduced degrees)
//! J(f,g,h)   = (-1)^(|f||h|) [[f,g],h] + (-1)^(|g||f|) [[g,h],f]
//!              + (-1)^(|h||g|) [[h,f],g]
//! var<f|g>   = d<f|g> - <f|dg> - (-1)^|g| <df|g>            (d = coboundary)
//! var<h|fg>  = d<h|fg> - <h|f dg> - (-1)^|g| <h|df g> - (-1)^(|g|+|f|) <dh|fg>
//! var_cup    = d(f⌣g) - f⌣dg - (-1)^g df⌣g                  (full degree g)
//! ```
//!
//! With these definitions the variation laws carry a uniform reduced-degree
//! prefactor, `(-1)^|g| var = <...>` in all three orders, and the cup
//! associator satisfies `(f⌣g)⌣h - f⌣(g⌣h) = (-1)^g <mu^2|fgh>`.
//!
//! Empty index sets produce the zero operation of the formally correct
//! degree; a formally negative degree is an error.

use crate::cohomology::coboundary;
use crate::operation::sign_is_negative;
use crate::{Error, Operation, Result};

/// The index set a flow sums over.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroundSimplex {
    Order1(Vec<usize>),
    Order2(Vec<(usize, usize)>),
    Order3(Vec<(usize, usize, usize)>),
}

impl GroundSimplex {
    /// `{i : 0 <= i <= |h|}` for an order-1 flow out of degree `deg_h`.
    pub fn flow1(deg_h: usize) -> Self {
        GroundSimplex::Order1((0..deg_h).collect())
    }

    /// `{(i, j) : 0 <= i <= |h|-1, i+f <= j <= |f|+|h|}`.
    pub fn flow2(deg_h: usize, deg_f: usize) -> Self {
        let rh = deg_h as i64 - 1;
        let rf = deg_f as i64 - 1;
        let mut pairs = Vec::new();
        for i in 0..=rh - 1 {
            for j in i + deg_f as i64..=rf + rh {
                pairs.push((i as usize, j as usize));
            }
        }
        GroundSimplex::Order2(pairs)
    }

    /// `{(i, j, k) : 0 <= i <= |h|-2, i+f <= j <= |h|+|f|-1, j+g <= k <= |h|+|f|+|g|}`.
    pub fn flow3(deg_h: usize, deg_f: usize, deg_g: usize) -> Self {
        let rh = deg_h as i64 - 1;
        let rf = deg_f as i64 - 1;
        let rg = deg_g as i64 - 1;
        let mut triples = Vec::new();
        for i in 0..=rh - 2 {
            for j in i + deg_f as i64..=rh + rf - 1 {
                for k in j + deg_g as i64..=rh + rf + rg {
                    triples.push((i as usize, j as usize, k as usize));
                }
            }
        }
        GroundSimplex::Order3(triples)
    }

    pub fn order(&self) -> u8 {
        match self {
            GroundSimplex::Order1(_) => 1,
            GroundSimplex::Order2(_) => 2,
            GroundSimplex::Order3(_) => 3,
        }
    }

    pub fn len(&self) -> usize {
        match self {
            GroundSimplex::Order1(v) => v.len(),
            GroundSimplex::Order2(v) => v.len(),
            GroundSimplex::Order3(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

fn signed(op: Operation, negative: bool) -> Operation {
    if negative {
        -&op
    } else {
        op
    }
}

/// Total composition `<h|f> = sum_i h ∘_i f`, degree `deg h + |f|`.
/// A degree-0 left factor is rejected: the target degree can be negative.
pub fn total_compose(h: &Operation, f: &Operation) -> Result<Operation> {
    h.check_same_dim(f)?;
    if h.degree() == 0 {
        return Err(Error::EmptyFlow);
    }
    let mut acc = h.compose_at(f, 0)?;
    for i in 1..h.degree() {
        acc = &acc + &h.compose_at(f, i)?;
    }
    Ok(acc)
}

/// Order-2 flow `<h|fg>`, degree `deg h + |f| + |g|`.
pub fn flow2(h: &Operation, f: &Operation, g: &Operation) -> Result<Operation> {
    h.check_same_dim(f)?;
    h.check_same_dim(g)?;
    let target = h.degree() as i64 + f.reduced_degree() + g.reduced_degree();
    let GroundSimplex::Order2(pairs) = GroundSimplex::flow2(h.degree(), f.degree()) else {
        unreachable!()
    };
    if target < 0 {
        return Err(Error::NegativeDegree);
    }
    let mut acc = Operation::zero(h.dim(), target as usize)?;
    for (i, j) in pairs {
        acc = &acc + &h.compose_at(f, i)?.compose_at(g, j)?;
    }
    Ok(acc)
}

/// Order-3 flow `<h|fgb>`, degree `deg h + |f| + |g| + |b|`.
pub fn flow3(h: &Operation, f: &Operation, g: &Operation, b: &Operation) -> Result<Operation> {
    h.check_same_dim(f)?;
    h.check_same_dim(g)?;
    h.check_same_dim(b)?;
    let target =
        h.degree() as i64 + f.reduced_degree() + g.reduced_degree() + b.reduced_degree();
    let GroundSimplex::Order3(triples) =
        GroundSimplex::flow3(h.degree(), f.degree(), g.degree())
    else {
        unreachable!()
    };
    if target < 0 {
        return Err(Error::NegativeDegree);
    }
    let mut acc = Operation::zero(h.dim(), target as usize)?;
    for (i, j, k) in triples {
        acc = &acc
            + &h
                .compose_at(f, i)?
                .compose_at(g, j)?
                .compose_at(b, k)?;
    }
    Ok(acc)
}

/// Cup product `f ⌣ g = (-1)^f (mu ∘_0 f) ∘_f g`, degree `deg f + deg g`.
/// The sign and the slot use the full degree of `f`.
pub fn cup(mu: &Operation, f: &Operation, g: &Operation) -> Result<Operation> {
    if mu.degree() != 2 {
        return Err(Error::NotBinary(mu.degree()));
    }
    mu.check_same_dim(f)?;
    mu.check_same_dim(g)?;
    let inner = mu.compose_at(f, 0)?.compose_at(g, f.degree())?;
    Ok(signed(inner, sign_is_negative(f.degree() as i64)))
}

/// The associator `mu^2 = <mu|mu>`, a degree-3 operation; zero iff the
/// binary operation is associative.
pub fn associator(mu: &Operation) -> Result<Operation> {
    if mu.degree() != 2 {
        return Err(Error::NotBinary(mu.degree()));
    }
    total_compose(mu, mu)
}

/// Gerstenhaber bracket `[f,g] = <f|g> - (-1)^(|f||g|) <g|f>`.
/// Both arguments must have degree at least 1.
pub fn bracket(f: &Operation, g: &Operation) -> Result<Operation> {
    let fg = total_compose(f, g)?;
    let gf = total_compose(g, f)?;
    let neg = sign_is_negative(f.reduced_degree() * g.reduced_degree());
    Ok(&fg - &signed(gf, neg))
}

/// Jacobiator `J(f,g,h)`; identically zero (graded Lie admissibility).
pub fn jacobiator(f: &Operation, g: &Operation, h: &Operation) -> Result<Operation> {
    let rf = f.reduced_degree();
    let rg = g.reduced_degree();
    let rh = h.reduced_degree();
    let t1 = signed(bracket(&bracket(f, g)?, h)?, sign_is_negative(rf * rh));
    let t2 = signed(bracket(&bracket(g, h)?, f)?, sign_is_negative(rg * rf));
    let t3 = signed(bracket(&bracket(h, f)?, g)?, sign_is_negative(rh * rg));
    Ok(&(&t1 + &t2) + &t3)
}

/// Variation of the order-1 flow:
/// `d<f|g> - <f|dg> - (-1)^|g| <df|g>` with `d` the coboundary at `mu`.
pub fn variation_flow1(mu: &Operation, f: &Operation, g: &Operation) -> Result<Operation> {
    let t1 = coboundary(mu, &total_compose(f, g)?)?;
    let t2 = total_compose(f, &coboundary(mu, g)?)?;
    let t3 = signed(
        total_compose(&coboundary(mu, f)?, g)?,
        sign_is_negative(g.reduced_degree()),
    );
    Ok(&(&t1 - &t2) - &t3)
}

/// Variation of the order-2 flow:
/// `d<h|fg> - <h|f dg> - (-1)^|g| <h|df g> - (-1)^(|g|+|f|) <dh|fg>`.
pub fn variation_flow2(
    mu: &Operation,
    h: &Operation,
    f: &Operation,
    g: &Operation,
) -> Result<Operation> {
    let rf = f.reduced_degree();
    let rg = g.reduced_degree();
    let t1 = coboundary(mu, &flow2(h, f, g)?)?;
    let t2 = flow2(h, f, &coboundary(mu, g)?)?;
    let t3 = signed(flow2(h, &coboundary(mu, f)?, g)?, sign_is_negative(rg));
    let t4 = signed(
        flow2(&coboundary(mu, h)?, f, g)?,
        sign_is_negative(rg + rf),
    );
    Ok(&(&(&t1 - &t2) - &t3) - &t4)
}

/// Variation of the cup product:
/// `d(f⌣g) - f⌣dg - (-1)^g df⌣g` (full degree of `g` in the sign).
pub fn variation_cup(mu: &Operation, f: &Operation, g: &Operation) -> Result<Operation> {
    let t1 = coboundary(mu, &cup(mu, f, g)?)?;
    let t2 = cup(mu, f, &coboundary(mu, g)?)?;
    let t3 = signed(
        cup(mu, &coboundary(mu, f)?, g)?,
        sign_is_negative(g.degree() as i64),
    );
    Ok(&(&t1 - &t2) - &t3)
}
