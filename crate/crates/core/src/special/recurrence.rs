//! Large-argument evaluation: Miller's backward recurrence for the pair
//! (J_nu, J_{nu+1}) and a continued fraction for I_{nu+1}/I_nu.

use super::gamma::ln_gamma_pos;
use super::series::{eval_x, Kernel};
use super::SeriesConfig;

/// Above this argument the J pair comes from backward recurrence.
pub const MILLER_CROSSOVER: f64 = 8.0;

const RESCALE: f64 = 1e250;

/// (J_nu(x), J_{nu+1}(x)) for x > 0.
pub fn bessel_j_pair(nu: f64, x: f64) -> (f64, f64) {
    if x > MILLER_CROSSOVER {
        return miller_j_pair(nu, x);
    }
    let cfg = SeriesConfig::default();
    let lk = |v: f64| -v * std::f64::consts::LN_2 - ln_gamma_pos(v + 1.0);
    let j0 = eval_x(Kernel::J, nu, nu, lk(nu), x, 0, &cfg).map(|r| r.value);
    let j1 = eval_x(Kernel::J, nu + 1.0, nu + 1.0, lk(nu + 1.0), x, 0, &cfg).map(|r| r.value);
    match (j0, j1) {
        (Ok(a), Ok(b)) => (a, b),
        _ => miller_j_pair(nu, x),
    }
}

/// Backward recurrence normalized by the Neumann series
/// (x/2)^nu / Gamma(nu+1) = J_nu + sum_{k>=1} (nu+2k) h_k J_{nu+2k},
/// h_1 = 1, h_{k+1} = h_k (nu+k)/(k+1).
pub fn miller_j_pair(nu: f64, x: f64) -> (f64, f64) {
    let mut m = (x + 15.0 * x.cbrt() + 40.0).ceil() as usize;
    if m % 2 == 1 {
        m += 1;
    }
    let half = m / 2;
    let mut h = vec![0.0; half + 1];
    if half >= 1 {
        h[1] = 1.0;
    }
    for k in 1..half {
        h[k + 1] = h[k] * (nu + k as f64) / (k as f64 + 1.0);
    }
    let mut above = 0.0; // f_{k+1}
    let mut cur = 1e-30; // f_k
    let mut norm = 0.0;
    let mut f1 = 0.0;
    let two_over_x = 2.0 / x;
    for k in (1..=m).rev() {
        let prev = (nu + k as f64) * two_over_x * cur - above;
        above = cur;
        cur = prev;
        let idx = k - 1;
        if idx == 1 {
            f1 = cur;
        }
        if idx >= 2 && idx % 2 == 0 {
            norm += (nu + idx as f64) * h[idx / 2] * cur;
        }
        if cur.abs() > RESCALE {
            cur /= RESCALE;
            above /= RESCALE;
            norm /= RESCALE;
            f1 /= RESCALE;
        }
    }
    norm += cur;
    let lead = (nu * (0.5 * x).ln() - ln_gamma_pos(nu + 1.0)).exp();
    let scale = lead / norm;
    (cur * scale, f1 * scale)
}

/// I_{nu+1}(x) / I_nu(x) for x > 0, by the modified Lentz method.
pub fn bessel_i_ratio(nu: f64, x: f64) -> f64 {
    let tiny = 1e-300;
    let b = |j: usize| 2.0 * (nu + j as f64) / x;
    let mut f = b(1);
    let mut c = f;
    let mut d = 0.0;
    for j in 2..200_000 {
        d += b(j);
        if d.abs() < tiny {
            d = tiny;
        }
        c = b(j) + 1.0 / c;
        if c.abs() < tiny {
            c = tiny;
        }
        d = 1.0 / d;
        let delta = c * d;
        f *= delta;
        if (delta - 1.0).abs() < 1e-16 {
            break;
        }
    }
    1.0 / f
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    #[test]
    fn miller_matches_series_in_overlap() {
        let cfg = SeriesConfig::default();
        for nu in [-0.9, -0.5, 0.0, 0.5, 1.0, 2.5, 5.0] {
            for x in [2.0, 5.0, 7.5, 8.0] {
                let (a, b) = miller_j_pair(nu, x);
                let lk = |v: f64| -v * std::f64::consts::LN_2 - ln_gamma_pos(v + 1.0);
                let sa = eval_x(Kernel::J, nu, nu, lk(nu), x, 0, &cfg).unwrap().value;
                let sb = eval_x(Kernel::J, nu + 1.0, nu + 1.0, lk(nu + 1.0), x, 0, &cfg)
                    .unwrap()
                    .value;
                let scale = sa.abs().max(sb.abs());
                assert!((a - sa).abs() <= 1e-13 * scale, "J_{nu}({x}): {a} vs {sa}");
                assert!((b - sb).abs() <= 1e-13 * scale, "J_{}({x}): {b} vs {sb}", nu + 1.0);
            }
        }
    }

    #[test]
    fn miller_beats_series_cancellation() {
        // mpmath: J_{-0.9}(10)
        let (a, _) = miller_j_pair(-0.9, 10.0);
        assert!(rel(a, -0.084_111_954_598_880_71) < 1e-14);
    }

    #[test]
    fn half_order_is_elementary() {
        for x in [12.0, 50.0, 333.3, 4000.0] {
            let (a, b) = miller_j_pair(0.5, x);
            let c = (2.0 / (std::f64::consts::PI * x)).sqrt();
            let want_a = c * x.sin();
            let want_b = c * (x.sin() / x - x.cos());
            assert!((a - want_a).abs() <= 1e-12 * c, "{x}");
            assert!((b - want_b).abs() <= 1e-12 * c, "{x}");
        }
    }

    #[test]
    fn i_ratio_small_and_large() {
        // I_1/I_0 at 1 and at 30, mpmath
        assert!(rel(bessel_i_ratio(0.0, 1.0), 0.446_389_965_896_534_5) < 1e-14);
        assert!(rel(bessel_i_ratio(0.0, 30.0), 0.983_189_555_365_336_1) < 1e-14);
        // I_{1/2} = sqrt(2/(pi x)) sinh x, I_{3/2} = sqrt(2/(pi x)) (cosh x - sinh x / x)
        let x = 7.0f64;
        let want = (x.cosh() - x.sinh() / x) / x.sinh();
        assert!(rel(bessel_i_ratio(0.5, x), want) < 1e-14);
    }
}
