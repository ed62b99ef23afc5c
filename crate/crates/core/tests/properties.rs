use dini_core::fmt::num;
use dini_core::rayleigh::{rayleigh, smallest_zero_bounds, BoundTarget, Method, RayleighFamily};
use dini_core::special::{cross_w, log_derivative, normalized, CrossMode};
use dini_core::zeros::{interlacing_chain, ZeroFinder};
use dini_core::{FunctionId, Order, SeriesConfig};
use proptest::prelude::*;

fn o(nu: f64) -> Order {
    Order::new(nu).unwrap()
}

fn poch(a: f64, n: u32) -> f64 {
    (0..n).map(|i| a + i as f64).product()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn numbers_round_trip(v in proptest::num::f64::NORMAL | proptest::num::f64::SUBNORMAL | proptest::num::f64::ZERO) {
        prop_assert_eq!(num(v).parse::<f64>().unwrap(), v);
    }

    #[test]
    fn cross_product_modes_agree(nu in -0.9f64..5.0, x in 0.01f64..10.0) {
        let cfg = SeriesConfig::default();
        let a = cross_w(o(nu), x, CrossMode::Series, &cfg).unwrap().value;
        let b = cross_w(o(nu), x, CrossMode::Combination, &cfg).unwrap().value;
        prop_assert!((a - b).abs() <= 1e-12 * a.abs().max(1.0), "{} vs {}", a, b);
    }

    #[test]
    fn normalized_families_are_even_and_one_at_the_origin(nu in -0.95f64..6.0, x in 0.0f64..8.0) {
        let cfg = SeriesConfig::default();
        for f in [FunctionId::CalJ, FunctionId::CalI, FunctionId::CalD, FunctionId::Lambda, FunctionId::CalW] {
            prop_assert_eq!(normalized(f, o(nu), 0.0, &cfg).unwrap().value, 1.0);
            let a = normalized(f, o(nu), x, &cfg).unwrap().value;
            let b = normalized(f, o(nu), -x, &cfg).unwrap().value;
            prop_assert!((a - b).abs() <= 1e-15 * a.abs().max(1.0));
        }
    }

    #[test]
    fn low_order_rayleigh_sums_match_closed_forms(nu in -0.99f64..20.0) {
        let eta2 = rayleigh(RayleighFamily::Eta, o(nu), 1, Method::Recursion).unwrap().value;
        let zeta4 = rayleigh(RayleighFamily::Zeta, o(nu), 1, Method::Recursion).unwrap().value;
        let zeta8 = rayleigh(RayleighFamily::Zeta, o(nu), 2, Method::Recursion).unwrap().value;
        let want8 = (5.0 * nu + 17.0) / (256.0 * poch(nu + 1.0, 3) * poch(nu + 1.0, 5));
        prop_assert!((eta2 - 3.0 / (4.0 * (nu + 1.0))).abs() <= 1e-13 * eta2);
        prop_assert!((zeta4 - 1.0 / (16.0 * poch(nu + 1.0, 3))).abs() <= 1e-13 * zeta4);
        prop_assert!((zeta8 - want8).abs() <= 1e-13 * want8);
    }

    #[test]
    fn euler_rayleigh_bounds_bracket_the_smallest_zero(nu in -0.9f64..8.0, m in 1usize..6) {
        for target in [BoundTarget::Alpha1, BoundTarget::Gamma1, BoundTarget::J1] {
            let (lo, hi) = smallest_zero_bounds(target, o(nu), m).unwrap();
            let kind = target.family().zero_kind();
            let z = ZeroFinder::global().table(kind, o(nu), 1).unwrap().get(1);
            let zp = z.powi(target.family().power() as i32);
            prop_assert!(lo < zp && zp < hi, "{:?} m={}: {} {} {}", target, m, lo, zp, hi);
        }
    }

    #[test]
    fn zeros_interlace(nu in -0.95f64..6.0) {
        let r = interlacing_chain(o(nu), 6).unwrap();
        prop_assert!(r.pass, "{:?}", r.violations);
    }

    #[test]
    fn cross_product_decreases_in_log_before_its_first_zero(nu in -0.9f64..6.0, f in 0.01f64..0.99) {
        let g = ZeroFinder::global().table(dini_core::zeros::ZeroKind::Cross, o(nu), 1).unwrap().get(1);
        let ld = log_derivative(FunctionId::CalW, o(nu), f * g, &SeriesConfig::default()).unwrap();
        prop_assert!(ld < 0.0);
    }
}
