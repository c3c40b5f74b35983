//! Index regions of the operad composition relations.
//!
//! For operations `h` and `f`, the pairs `(i, j)` addressing an iterated
//! composition `(h ∘_i f) ∘_j g` split into three regions on which the
//! relations take different shapes (reduced degrees `|h| = deg h - 1`,
//! `|f| = deg f - 1`; `f` below denotes the full degree):
//!
//! ```text
//! B: 1 <= i <= |h|,      0 <= j <= i - 1
//! A: 0 <= i <= |h|,      i <= j <= i + |f|
//! G: 0 <= i <= |h| - 1,  i + f <= j <= |f| + |h|
//! ```
//!
//! The three regions are disjoint and cover `{0..=|h|} x {0..=|h|+|f|}`.
//! The relations themselves:
//!
//! ```text
//! (h ∘_i f) ∘_j g = (-1)^(|f||g|) (h ∘_j g) ∘_(i+|g|) f    on B
//! (h ∘_i f) ∘_j g = h ∘_i (f ∘_(j-i) g)                    on A
//! (h ∘_i f) ∘_j g = (-1)^(|f||g|) (h ∘_(j-|f|) g) ∘_i f    on G
//! ```

use crate::operation::sign_is_negative;
use crate::{Error, Operation, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RegionKind {
    B,
    A,
    G,
}

impl RegionKind {
    pub fn name(self) -> &'static str {
        match self {
            RegionKind::B => "B",
            RegionKind::A => "A",
            RegionKind::G => "G",
        }
    }
}

/// One of the three regions for fixed degrees, with its pairs enumerated in
/// lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexRegion {
    pub kind: RegionKind,
    pub pairs: Vec<(usize, usize)>,
}

/// Enumerates the region of the given kind for `deg h = deg_h >= 1` and
/// `deg f = deg_f >= 0`.
pub fn region(kind: RegionKind, deg_h: usize, deg_f: usize) -> Result<IndexRegion> {
    if deg_h == 0 {
        return Err(Error::NoSlots);
    }
    let rh = deg_h as i64 - 1; // |h|
    let rf = deg_f as i64 - 1; // |f|
    let mut pairs = Vec::new();
    let mut push = |i: i64, j_lo: i64, j_hi: i64| {
        for j in j_lo.max(0)..=j_hi {
            pairs.push((i as usize, j as usize));
        }
    };
    match kind {
        RegionKind::B => {
            for i in 1..=rh {
                push(i, 0, i - 1);
            }
        }
        RegionKind::A => {
            for i in 0..=rh {
                push(i, i, i + rf);
            }
        }
        RegionKind::G => {
            for i in 0..=rh - 1 {
                push(i, i + deg_f as i64, rf + rh);
            }
        }
    }
    Ok(IndexRegion { kind, pairs })
}

/// The residual of one composition relation instance.
#[derive(Debug, Clone)]
pub struct RelationResidual {
    pub kind: RegionKind,
    pub i: usize,
    pub j: usize,
    pub residual: Operation,
}

/// Computes `(h ∘_i f) ∘_j g  -  rhs(kind, i, j)` for every pair of every
/// region. All residuals vanish exactly in the endomorphism operad.
pub fn composition_relation_residuals(
    h: &Operation,
    f: &Operation,
    g: &Operation,
) -> Result<Vec<RelationResidual>> {
    h.check_same_dim(f)?;
    h.check_same_dim(g)?;
    let rf = f.reduced_degree();
    let rg = g.reduced_degree();
    let sign_fg = sign_is_negative(rf * rg);
    let mut out = Vec::new();
    for kind in [RegionKind::B, RegionKind::A, RegionKind::G] {
        for &(i, j) in &region(kind, h.degree(), f.degree())?.pairs {
            let lhs = h.compose_at(f, i)?.compose_at(g, j)?;
            let rhs = match kind {
                RegionKind::B => {
                    let slot = (i as i64 + rg) as usize;
                    let r = h.compose_at(g, j)?.compose_at(f, slot)?;
                    if sign_fg {
                        -&r
                    } else {
                        r
                    }
                }
                RegionKind::A => h.compose_at(&f.compose_at(g, j - i)?, i)?,
                RegionKind::G => {
                    let slot = (j as i64 - rf) as usize;
                    let r = h.compose_at(g, slot)?.compose_at(f, i)?;
                    if sign_fg {
                        -&r
                    } else {
                        r
                    }
                }
            };
            out.push(RelationResidual {
                kind,
                i,
                j,
                residual: &lhs - &rhs,
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::Lcg;
    use crate::Scalar;

    fn pairs(kind: RegionKind, dh: usize, df: usize) -> Vec<(usize, usize)> {
        region(kind, dh, df).unwrap().pairs
    }

    #[test]
    fn region_examples() {
        assert_eq!(
            pairs(RegionKind::B, 3, 2),
            vec![(1, 0), (2, 0), (2, 1)]
        );
        assert_eq!(pairs(RegionKind::G, 2, 2), vec![(0, 2)]);
        assert_eq!(pairs(RegionKind::A, 1, 1), vec![(0, 0)]);
        // empty regions are legal
        assert!(pairs(RegionKind::B, 1, 3).is_empty());
        assert!(pairs(RegionKind::G, 1, 2).is_empty());
    }

    #[test]
    fn disjoint_cover() {
        // every (i, j) in the rectangle lies in exactly one region
        for dh in 1..=5usize {
            for df in 0..=5usize {
                let rh = dh as i64 - 1;
                let rf = df as i64 - 1;
                let b = pairs(RegionKind::B, dh, df);
                let a = pairs(RegionKind::A, dh, df);
                let g = pairs(RegionKind::G, dh, df);
                let mut all: Vec<(usize, usize)> =
                    b.iter().chain(&a).chain(&g).copied().collect();
                let total = all.len();
                all.sort_unstable();
                all.dedup();
                assert_eq!(all.len(), total, "regions overlap at dh={dh} df={df}");
                let mut rect = Vec::new();
                for i in 0..=rh {
                    for j in 0..=(rh + rf).max(-1) {
                        rect.push((i as usize, j as usize));
                    }
                }
                rect.sort_unstable();
                assert_eq!(all, rect, "cover fails at dh={dh} df={df}");
            }
        }
    }

    #[test]
    fn scalar_model_relations() {
        // h = f = g = 1, all degree 2: both sides agree on every region pair
        let one = Operation::from_ints(1, 2, &[1]).unwrap();
        for r in composition_relation_residuals(&one, &one, &one).unwrap() {
            assert!(r.residual.is_zero(), "{:?} ({},{})", r.kind, r.i, r.j);
        }
    }

    #[test]
    fn unit_inner_operand() {
        let mut rng = Lcg::new(3);
        let h = Operation::random_from(&mut rng, 2, 3, 3).unwrap();
        let f = Operation::random_from(&mut rng, 2, 2, 3).unwrap();
        let u = Operation::unit(2).unwrap();
        for r in composition_relation_residuals(&h, &f, &u).unwrap() {
            assert!(r.residual.is_zero());
        }
    }

    #[test]
    fn random_triples_satisfy_relations() {
        let mut rng = Lcg::new(42);
        for _ in 0..50 {
            let dh = 1 + rng.next_index(3);
            let df = 1 + rng.next_index(3);
            let dg = 1 + rng.next_index(3);
            let h = Operation::random_from(&mut rng, 2, dh, 3).unwrap();
            let f = Operation::random_from(&mut rng, 2, df, 3).unwrap();
            let g = Operation::random_from(&mut rng, 2, dg, 3).unwrap();
            for r in composition_relation_residuals(&h, &f, &g).unwrap() {
                assert!(
                    r.residual.is_zero(),
                    "kind {:?} (i,j)=({},{}) degrees ({dh},{df},{dg})",
                    r.kind,
                    r.i,
                    r.j
                );
            }
        }
    }

    #[test]
    fn relations_cover_degree_zero_inner() {
        // degree-0 third operand exercises the |g| = -1 branch of B
        let mut rng = Lcg::new(8);
        let h = Operation::random_from(&mut rng, 2, 3, 3).unwrap();
        let f = Operation::random_from(&mut rng, 2, 2, 3).unwrap();
        let v = Operation::new(
            2,
            0,
            vec![Scalar::from(2), Scalar::from(-1)],
        )
        .unwrap();
        for r in composition_relation_residuals(&h, &f, &v).unwrap() {
            assert!(r.residual.is_zero());
        }
    }
}
