use majent::entropy::{pseudo_additivity_residual, sharma_mittal, EntropyParams, Param};
use majent::lattice::{join, meet};
use majent::simplex::{MajorizationOrder, ProbabilityDistribution};
use proptest::prelude::*;

fn full_support(max_dim: usize) -> impl Strategy<Value = ProbabilityDistribution> {
    prop::collection::vec(0.05f64..1.0, 2..=max_dim)
        .prop_map(|raw| ProbabilityDistribution::normalized(raw).unwrap())
}

fn weights(n: usize) -> impl Strategy<Value = ProbabilityDistribution> {
    prop::collection::vec(0.05f64..1.0, n)
        .prop_map(|raw| ProbabilityDistribution::normalized(raw).unwrap())
}

/// Two full-support distributions of the same dimension.
fn pair(
    max_dim: usize,
) -> impl Strategy<Value = (ProbabilityDistribution, ProbabilityDistribution)> {
    (2..=max_dim).prop_flat_map(|n| (weights(n), weights(n)))
}

fn params() -> impl Strategy<Value = EntropyParams> {
    (-3.0f64..6.0, -2.0f64..5.0)
        .prop_filter_map("admissible", |(a, b)| EntropyParams::from_values(a, b).ok())
}

fn value(p: &ProbabilityDistribution, prm: &EntropyParams) -> f64 {
    sharma_mittal(p, prm).unwrap().value
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    /// Majorization reverses the entropy order for `α ≥ 0` and keeps it for
    /// `α < 0`.
    #[test]
    fn entropy_is_monotone_along_majorization((p, q) in pair(6), prm in params()) {
        let order = p.compare(&q);
        let (sp, sq) = (value(&p, &prm), value(&q, &prm));
        let tol = 1e-9 * sp.abs().max(sq.abs()).max(1.0);
        let alpha = prm.alpha_value();
        if order == MajorizationOrder::MajorizedBy {
            if alpha >= 0.0 {
                prop_assert!(sp >= sq - tol, "{prm}: {sp} < {sq}");
            } else {
                prop_assert!(sp <= sq + tol, "{prm}: {sp} > {sq}");
            }
        }
    }

    #[test]
    fn meet_and_join_bracket_entropy((p, q) in pair(6), prm in params()) {
        let m = meet(&p, &q);
        let j = join(&p, &q);
        prop_assume!(prm.alpha_value() >= 0.0 || j.has_full_support());
        let (sm, sj, sp) = (value(&m, &prm), value(&j, &prm), value(&p, &prm));
        let tol = 1e-9 * sm.abs().max(sj.abs()).max(1.0);
        if prm.alpha_value() >= 0.0 {
            prop_assert!(sm >= sp - tol && sp >= sj - tol);
        } else {
            prop_assert!(sm <= sp + tol && sp <= sj + tol);
        }
    }

    #[test]
    fn uniform_and_point_mass_are_extremes(p in full_support(6), prm in params()) {
        if prm.alpha_value() > 0.0 {
            let n = p.dim();
            let s = value(&p, &prm);
            let top = value(&ProbabilityDistribution::uniform(n), &prm);
            prop_assert!(s <= top + 1e-9 * top.abs().max(1.0));
            prop_assert!(value(&ProbabilityDistribution::deterministic(n), &prm).abs() <= 1e-15);
        }
    }

    #[test]
    fn pseudo_additivity(p in full_support(4), q in full_support(4), a in 0.2f64..4.0, b in -1.0f64..4.0) {
        let prm = EntropyParams::from_values(a, b).unwrap();
        let r = pseudo_additivity_residual(&p, &q, &prm).unwrap();
        prop_assert!(r.abs() <= 1e-10, "{prm}: residual {r}");
    }

    #[test]
    fn tagged_limits_match_nearby_values(p in full_support(5), a in 0.3f64..4.0) {
        prop_assume!((a - 1.0).abs() > 0.05);
        let limit = EntropyParams::new(Param::Finite(a), Param::Limit1).unwrap();
        let near = EntropyParams::from_values(a, 1.0 + 1e-9).unwrap();
        prop_assert!((value(&p, &limit) - value(&p, &near)).abs() <= 1e-8);
        let tsallis = EntropyParams::new(Param::Finite(a), Param::LimitAlpha).unwrap();
        let near = EntropyParams::from_values(a, a + 1e-9).unwrap();
        prop_assert!((value(&p, &tsallis) - value(&p, &near)).abs() <= 1e-8);
    }
}
