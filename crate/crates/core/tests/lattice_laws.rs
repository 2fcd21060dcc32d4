use majent::lattice::{flatten_counted, join, join_exact, meet, meet_exact, pre_join};
use majent::simplex::{ExactDistribution, MajorizationOrder, ProbabilityDistribution};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

const EPS: f64 = 1e-12;

fn distribution(max_dim: usize) -> impl Strategy<Value = ProbabilityDistribution> {
    prop::collection::vec(prop_oneof![1 => Just(0.0), 6 => 0.0f64..1.0], 1..=max_dim)
        .prop_filter_map("needs positive mass", |raw| {
            if raw.iter().sum::<f64>() > 1e-6 {
                ProbabilityDistribution::normalized(raw).ok()
            } else {
                None
            }
        })
}

fn exact_distribution(max_dim: usize) -> impl Strategy<Value = ExactDistribution> {
    prop::collection::vec(0u32..20, 1..=max_dim).prop_filter_map("needs positive mass", |raw| {
        let total: u32 = raw.iter().sum();
        if total == 0 {
            return None;
        }
        let weights = raw
            .into_iter()
            .map(|k| BigRational::new(BigInt::from(k), BigInt::from(total)))
            .collect();
        ExactDistribution::new(weights).ok()
    })
}

fn close(a: &ProbabilityDistribution, b: &ProbabilityDistribution) -> bool {
    let n = a.dim().max(b.dim());
    let (a, b) = (a.pad(n).unwrap(), b.pad(n).unwrap());
    a.weights()
        .iter()
        .zip(b.weights())
        .all(|(x, y)| (x - y).abs() <= 1e-12)
}

fn below(a: &ProbabilityDistribution, b: &ProbabilityDistribution) -> bool {
    matches!(
        a.compare(b),
        MajorizationOrder::MajorizedBy | MajorizationOrder::Equal
    )
}

fn exact_below(a: &ExactDistribution, b: &ExactDistribution) -> bool {
    matches!(
        a.compare(b),
        MajorizationOrder::MajorizedBy | MajorizationOrder::Equal
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn meet_and_join_commute(p in distribution(8), q in distribution(8)) {
        prop_assert!(close(&meet(&p, &q), &meet(&q, &p)));
        prop_assert!(close(&join(&p, &q), &join(&q, &p)));
    }

    #[test]
    fn meet_and_join_are_idempotent(p in distribution(8)) {
        prop_assert!(close(&meet(&p, &p), &p));
        prop_assert!(close(&join(&p, &p), &p));
    }

    #[test]
    fn absorption(p in distribution(8), q in distribution(8)) {
        prop_assert!(close(&meet(&p, &join(&p, &q)), &p));
        prop_assert!(close(&join(&p, &meet(&p, &q)), &p));
    }

    #[test]
    fn bounds(p in distribution(8), q in distribution(8)) {
        let m = meet(&p, &q);
        let j = join(&p, &q);
        prop_assert!(below(&m, &p) && below(&m, &q));
        prop_assert!(below(&p, &j) && below(&q, &j));
    }

    #[test]
    fn meet_is_greatest_lower_bound(p in distribution(6), q in distribution(6), r in distribution(6)) {
        let m = meet(&p, &q);
        if below(&r, &p) && below(&r, &q) {
            prop_assert!(below(&r, &m));
        }
        let j = join(&p, &q);
        if below(&p, &r) && below(&q, &r) {
            prop_assert!(below(&j, &r));
        }
    }

    #[test]
    fn comparable_pairs_collapse(p in distribution(8), q in distribution(8)) {
        if below(&p, &q) {
            prop_assert!(close(&meet(&p, &q), &p));
            prop_assert!(close(&join(&p, &q), &q));
        }
    }

    #[test]
    fn exact_lattice_agrees_with_float(p in exact_distribution(6), q in exact_distribution(6), r in exact_distribution(6)) {
        let m = meet_exact(&p, &q);
        let j = join_exact(&p, &q);
        prop_assert!(exact_below(&m, &p) && exact_below(&m, &q));
        prop_assert!(exact_below(&p, &j) && exact_below(&q, &j));
        if exact_below(&r, &p) && exact_below(&r, &q) {
            prop_assert!(exact_below(&r, &m));
        }
        if exact_below(&p, &r) && exact_below(&q, &r) {
            prop_assert!(exact_below(&j, &r));
        }
        let (pf, qf) = (p.to_f64(), q.to_f64());
        prop_assert!(close(&meet(&pf, &qf), &m.to_f64()));
        prop_assert!(close(&join(&pf, &qf), &j.to_f64()));
    }

    #[test]
    fn flatten_needs_fewer_passes_than_dimension(p in distribution(8), q in distribution(8)) {
        let w = pre_join(&p, &q);
        let (flat, passes) = flatten_counted(&w);
        prop_assert!(passes < w.dim().max(2));
        prop_assert!(flat.weights().windows(2).all(|x| x[0] >= x[1]));
        // Flattening only raises the Lorenz curve to its concave majorant.
        let lw: Vec<f64> = w.entries().iter().scan(0.0, |s, x| { *s += x; Some(*s) }).collect();
        for (a, b) in flat.lorenz().partials().iter().zip(&lw) {
            prop_assert!(*a >= b - EPS);
        }
    }

    #[test]
    fn compare_is_a_partial_order(p in distribution(6), q in distribution(6), r in distribution(6)) {
        prop_assert_eq!(p.compare(&p), MajorizationOrder::Equal);
        prop_assert_eq!(p.compare(&q), q.compare(&p).reverse());
        if below(&p, &q) && below(&q, &r) {
            prop_assert!(below(&p, &r));
        }
        let n = p.dim().max(q.dim());
        prop_assert!(below(&ProbabilityDistribution::uniform(n), &p));
        prop_assert!(below(&p, &ProbabilityDistribution::deterministic(n)));
    }

    #[test]
    fn padding_preserves_order(p in distribution(6), q in distribution(6), extra in 0usize..4) {
        let n = p.dim().max(q.dim()) + extra;
        prop_assert_eq!(p.pad(n).unwrap().compare(&q.pad(n).unwrap()), p.compare(&q));
    }

    #[test]
    fn tensor_product_is_monotone(p in distribution(4), q in distribution(4), r in distribution(4)) {
        if below(&p, &q) {
            prop_assert!(below(&p.tensor_product(&r), &q.tensor_product(&r)));
        }
        let t = p.tensor_product(&r);
        prop_assert_eq!(t.dim(), p.dim() * r.dim());
        prop_assert!((t.weights().iter().sum::<f64>() - 1.0).abs() <= 1e-9);
    }

    #[test]
    fn lorenz_curve_is_concave(p in distribution(8)) {
        let l = p.lorenz();
        let inc = l.increments();
        prop_assert!(inc.windows(2).all(|w| w[0] >= w[1] - EPS));
        prop_assert!((l.partials().last().unwrap() - 1.0).abs() <= 1e-9);
    }
}
