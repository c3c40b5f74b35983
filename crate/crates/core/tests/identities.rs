//! Cross-module invariants on arbitrary inputs.

use proptest::prelude::*;

use opcalc_core::flows::{bracket, jacobiator, total_compose};
use opcalc_core::verify::{run_suite, SuiteConfig};
use opcalc_core::{Operation, Scalar};

#[test]
fn suite_green_at_both_dims() {
    for dim in [1, 2] {
        let checks = run_suite(&SuiteConfig {
            dim,
            max_degree: 3,
            trials: 25,
            seed: 7,
        })
        .unwrap();
        for c in checks {
            assert!(
                c.passed,
                "dim {dim}: {} has residual {}",
                c.name, c.max_abs_residual
            );
        }
    }
}

fn arb_scalar() -> impl Strategy<Value = Scalar> {
    (any::<i64>(), 1..=10_000i64).prop_map(|(n, d)| Scalar::from_fraction(n, d).unwrap())
}

fn arb_operation(dim: usize, degree: usize) -> impl Strategy<Value = Operation> {
    let len = dim.pow(degree as u32 + 1);
    proptest::collection::vec(-50..=50i64, len)
        .prop_map(move |cs| Operation::from_ints(dim, degree, &cs).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scalar_json_round_trip(s in arb_scalar()) {
        let text = serde_json::to_string(&s).unwrap();
        let back: Scalar = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, s);
    }

    #[test]
    fn operation_json_round_trip(op in (1..=2usize, 0..=3usize)
        .prop_flat_map(|(d, n)| arb_operation(d, n)))
    {
        let text = serde_json::to_string(&op).unwrap();
        let back: Operation = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, op);
    }

    #[test]
    fn jacobi_identity(
        (f, g, h) in (1..=3usize, 1..=3usize, 1..=3usize).prop_flat_map(|(a, b, c)| {
            (arb_operation(2, a), arb_operation(2, b), arb_operation(2, c))
        })
    ) {
        prop_assert!(jacobiator(&f, &g, &h).unwrap().is_zero());
    }

    #[test]
    fn graded_antisymmetry(
        (f, g) in (1..=3usize, 1..=3usize).prop_flat_map(|(a, b)| {
            (arb_operation(2, a), arb_operation(2, b))
        })
    ) {
        // [f,g] = -(-1)^(|f||g|) [g,f]
        let fg = bracket(&f, &g).unwrap();
        let gf = bracket(&g, &f).unwrap();
        let sign = (f.reduced_degree() * g.reduced_degree()).rem_euclid(2) == 1;
        let expect = if sign { gf.clone() } else { -&gf };
        prop_assert_eq!(fg, expect);
    }

    #[test]
    fn degree_bookkeeping_and_unit(
        (f, g, i) in (1..=3usize, 0..=3usize).prop_flat_map(|(a, b)| {
            (arb_operation(2, a), arb_operation(2, b), 0..a)
        })
    ) {
        let c = f.compose_at(&g, i).unwrap();
        prop_assert_eq!(c.degree(), f.degree() + g.degree() - 1);
        let u = Operation::unit(2).unwrap();
        prop_assert_eq!(f.compose_at(&u, i).unwrap(), f.clone());
        prop_assert_eq!(u.compose_at(&f, 0).unwrap(), f);
    }

    #[test]
    fn flow_degree_neutrality(
        (h, f) in (1..=3usize, 1..=3usize).prop_flat_map(|(a, b)| {
            (arb_operation(2, a), arb_operation(2, b))
        })
    ) {
        // deg <h|f> = deg h + |f|: the flow operator carries reduced weight 0
        let t = total_compose(&h, &f).unwrap();
        prop_assert_eq!(t.degree() as i64, h.degree() as i64 + f.reduced_degree());
    }
}
