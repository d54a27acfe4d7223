use proptest::prelude::*;
use trigspline::harmonic::period_points;
use trigspline::{
    attach_samples, build_bspline_first_kind, build_spline, compute_coeffs, make_grid,
    max_relative_coeff_diff, spline_via_convolution_first, spline_via_convolution_second, GridId,
    SplineConfig, Truncation,
};

fn grid_id() -> impl Strategy<Value = GridId> {
    prop_oneof![Just(GridId::Zero), Just(GridId::One)]
}

fn data() -> impl Strategy<Value = Vec<f64>> {
    prop_oneof![Just(3usize), Just(5), Just(7), Just(9), Just(13)]
        .prop_flat_map(|n| prop::collection::vec(-10.0f64..10.0, n))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn spline_interpolates(values in data(), i1 in grid_id(), i2 in grid_id(), r in 0u32..6) {
        let s = attach_samples(make_grid(i2, values.len()).unwrap(), values.clone()).unwrap();
        let cfg = SplineConfig::new(i1, i2, r, values.len(), Truncation::new(300).unwrap()).unwrap();
        let st = build_spline(&cfg, &s).unwrap();
        for (t, f) in s.grid().nodes().iter().zip(&values) {
            prop_assert!((st.eval(*t) - f).abs() <= 1e-9 * (1.0 + f.abs()));
        }
    }

    #[test]
    fn convolution_routes_agree(values in data(), i1 in grid_id(), i2 in grid_id(), r in 1u32..5) {
        let s = attach_samples(make_grid(i2, values.len()).unwrap(), values).unwrap();
        let cfg = SplineConfig::new(i1, i2, r, s.len(), Truncation::new(100).unwrap()).unwrap();
        let direct = build_spline(&cfg, &s).unwrap();
        prop_assert!(max_relative_coeff_diff(&direct, &spline_via_convolution_first(&cfg, &s).unwrap()) <= 1e-10);
        prop_assert!(max_relative_coeff_diff(&direct, &spline_via_convolution_second(&cfg, &s).unwrap()) <= 1e-10);
    }

    #[test]
    fn transform_round_trip(values in data(), variant in grid_id()) {
        let s = attach_samples(make_grid(variant, values.len()).unwrap(), values.clone()).unwrap();
        let c = compute_coeffs(&s);
        for (t, f) in s.grid().nodes().iter().zip(&values) {
            prop_assert!((c.eval(*t) - f).abs() <= 1e-10);
        }
    }

    #[test]
    fn bspline_is_even_and_positive_for_r_at_least_1(r in 1u32..4, half in 1usize..7) {
        let nodes = 2 * half + 1;
        let br = build_bspline_first_kind::<f64>(r, nodes, Truncation::new(400).unwrap()).unwrap();
        prop_assert!(!br.has_sine_terms());
        for t in period_points::<f64>(64) {
            prop_assert!((br.eval(t) - br.eval(-t)).abs() <= 1e-12);
            prop_assert!(br.eval(t) > -2e-3);
        }
    }
}
