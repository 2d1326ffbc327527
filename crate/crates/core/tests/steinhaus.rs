use proptest::prelude::*;
use tilekit::steinhaus::{evaluate, translate_sum, FejerSumFunction, HalfBase};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn translate_sums_approach_two(x in 0.0f64..1.0) {
        let f = FejerSumFunction::default();
        for n in [100u64, 1000, 10_000] {
            let err = (translate_sum(&f, x, n) - 2.0).abs();
            prop_assert!(err * n as f64 <= 100.0, "x={} N={} err={}", x, n, err);
        }
    }

    #[test]
    fn positive_everywhere(x in -1000.0f64..1000.0) {
        prop_assert!(evaluate(&FejerSumFunction::default(), x) > 0.0);
    }
}

#[test]
fn commensurable_half_bases_vanish_together() {
    let f = FejerSumFunction::new(HalfBase::Rational { num: 1, den: 2 }, HalfBase::Rational { num: 1, den: 4 }).unwrap();
    assert!(evaluate(&f, 4.0) < 1e-30);
    assert!((translate_sum(&f, 0.3, 10_000) - 2.0).abs() < 1e-2);
}
