//! Evaluation of J, I, the Dini functions d and xi, the cross-product W,
//! and their normalized forms, from ascending power series.

mod gamma;
mod recurrence;
mod series;

use std::fmt;
use std::str::FromStr;

use crate::error::{domain, Error, Result};

pub use gamma::{log_gamma, pochhammer};
pub use recurrence::{bessel_i_ratio, bessel_j_pair, miller_j_pair, MILLER_CROSSOVER};
pub use series::CompensatedSum;

pub(crate) use gamma::ln_gamma_pos;
pub(crate) use series::{eval_x, sum_in_y, Kernel};

/// Largest |x| accepted by the public series evaluators.
pub const SERIES_ENVELOPE: f64 = 40.0;

/// Relative distance to a zero below which log-derivatives are refused.
pub const POLE_GUARD: f64 = 1e-8;

/// Bessel order, restricted to nu > -1.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct Order(f64);

impl Order {
    pub fn new(nu: f64) -> Result<Self> {
        if !nu.is_finite() || nu <= -1.0 {
            return domain(format!("order must be finite and > -1, got {nu}"));
        }
        Ok(Order(nu))
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

impl TryFrom<f64> for Order {
    type Error = Error;
    fn try_from(nu: f64) -> Result<Self> {
        Order::new(nu)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SeriesConfig {
    pub rel_tol: f64,
    pub max_terms: usize,
    pub compensated: bool,
}

impl Default for SeriesConfig {
    fn default() -> Self {
        SeriesConfig { rel_tol: 1e-15, max_terms: 400, compensated: true }
    }
}

impl SeriesConfig {
    pub fn new(rel_tol: f64, max_terms: usize, compensated: bool) -> Result<Self> {
        if !(rel_tol > 0.0) || max_terms < 8 {
            return domain("rel_tol must be positive and max_terms at least 8");
        }
        Ok(SeriesConfig { rel_tol, max_terms, compensated })
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EvalResult {
    pub value: f64,
    pub terms_used: usize,
    pub cancellation_digits: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FunctionId {
    J,
    I,
    D,
    Xi,
    W,
    CalJ,
    CalI,
    CalD,
    Lambda,
    CalW,
}

impl FunctionId {
    pub const ALL: [FunctionId; 10] = [
        FunctionId::J,
        FunctionId::I,
        FunctionId::D,
        FunctionId::Xi,
        FunctionId::W,
        FunctionId::CalJ,
        FunctionId::CalI,
        FunctionId::CalD,
        FunctionId::Lambda,
        FunctionId::CalW,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            FunctionId::J => "J",
            FunctionId::I => "I",
            FunctionId::D => "d",
            FunctionId::Xi => "xi",
            FunctionId::W => "W",
            FunctionId::CalJ => "calJ",
            FunctionId::CalI => "calI",
            FunctionId::CalD => "calD",
            FunctionId::Lambda => "lambda",
            FunctionId::CalW => "calW",
        }
    }

    pub fn is_normalized(self) -> bool {
        matches!(
            self,
            FunctionId::CalJ
                | FunctionId::CalI
                | FunctionId::CalD
                | FunctionId::Lambda
                | FunctionId::CalW
        )
    }

    /// The normalized family sharing this one's series.
    pub fn normalized(self) -> FunctionId {
        match self {
            FunctionId::J | FunctionId::CalJ => FunctionId::CalJ,
            FunctionId::I | FunctionId::CalI => FunctionId::CalI,
            FunctionId::D | FunctionId::CalD => FunctionId::CalD,
            FunctionId::Xi | FunctionId::Lambda => FunctionId::Lambda,
            FunctionId::W | FunctionId::CalW => FunctionId::CalW,
        }
    }

    pub(crate) fn kernel(self) -> Kernel {
        match self.normalized() {
            FunctionId::CalJ => Kernel::J,
            FunctionId::CalI => Kernel::I,
            FunctionId::CalD => Kernel::D,
            FunctionId::Lambda => Kernel::Xi,
            _ => Kernel::W,
        }
    }

    /// Leading power s in `K x^s (1 + ...)`.
    pub(crate) fn shift(self, nu: f64) -> f64 {
        match self {
            _ if self.is_normalized() => 0.0,
            FunctionId::W => 2.0 * nu + 1.0,
            _ => nu,
        }
    }

    /// ln K.
    pub(crate) fn log_prefactor(self, nu: f64) -> f64 {
        let ln2 = std::f64::consts::LN_2;
        match self {
            _ if self.is_normalized() => 0.0,
            FunctionId::W => -2.0 * nu * ln2 - ln_gamma_pos(nu + 1.0) - ln_gamma_pos(nu + 2.0),
            _ => -nu * ln2 - ln_gamma_pos(nu + 1.0),
        }
    }
}

impl fmt::Display for FunctionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for FunctionId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        FunctionId::ALL
            .into_iter()
            .find(|f| f.tag() == s)
            .ok_or_else(|| Error::Domain(format!("unknown function tag '{s}'")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CrossMode {
    Series,
    Combination,
}

fn check_envelope(x: f64) -> Result<()> {
    if !x.is_finite() || x.abs() > SERIES_ENVELOPE {
        return domain(format!("|x| must be at most {SERIES_ENVELOPE}, got {x}"));
    }
    Ok(())
}

fn raw(f: FunctionId, nu: Order, x: f64, k: u32, cfg: &SeriesConfig) -> Result<EvalResult> {
    let v = nu.get();
    eval_x(f.kernel(), v, f.shift(v), f.log_prefactor(v), x, k, cfg)
}

/// Value of any of the ten families.
pub fn evaluate(f: FunctionId, nu: Order, x: f64, cfg: &SeriesConfig) -> Result<EvalResult> {
    check_envelope(x)?;
    raw(f, nu, x, 0, cfg)
}

/// J_nu(x) or I_nu(x).
pub fn bessel(f: FunctionId, nu: Order, x: f64, cfg: &SeriesConfig) -> Result<EvalResult> {
    match f {
        FunctionId::J | FunctionId::I => evaluate(f, nu, x, cfg),
        _ => domain(format!("bessel takes J or I, not {f}")),
    }
}

/// d_nu(x) or xi_nu(x) from the merged single series.
pub fn dini(f: FunctionId, nu: Order, x: f64, cfg: &SeriesConfig) -> Result<EvalResult> {
    match f {
        FunctionId::D | FunctionId::Xi => evaluate(f, nu, x, cfg),
        _ => domain(format!("dini takes d or xi, not {f}")),
    }
}

/// d_nu = J_nu - x J_{nu+1} and xi_nu = I_nu + x I_{nu+1} from two Bessel series.
pub fn dini_combination(f: FunctionId, nu: Order, x: f64, cfg: &SeriesConfig) -> Result<EvalResult> {
    let (b, sign) = match f {
        FunctionId::D => (FunctionId::J, -1.0),
        FunctionId::Xi => (FunctionId::I, 1.0),
        _ => return domain(format!("dini takes d or xi, not {f}")),
    };
    let lo = bessel(b, nu, x, cfg)?;
    let hi = bessel(b, Order::new(nu.get() + 1.0)?, x, cfg)?;
    combine(lo, hi, |a, c| a + sign * x * c, lo.value.abs() + (x * hi.value).abs())
}

fn combine(
    a: EvalResult,
    b: EvalResult,
    op: impl Fn(f64, f64) -> f64,
    magnitude: f64,
) -> Result<EvalResult> {
    let value = op(a.value, b.value);
    let extra = series::cancellation_digits(magnitude, value);
    Ok(EvalResult {
        value,
        terms_used: a.terms_used.max(b.terms_used),
        cancellation_digits: a.cancellation_digits.max(b.cancellation_digits) + extra,
    })
}

/// W_nu(x) = J_{nu+1} I_nu + J_nu I_{nu+1}.
pub fn cross_w(nu: Order, x: f64, mode: CrossMode, cfg: &SeriesConfig) -> Result<EvalResult> {
    match mode {
        CrossMode::Series => evaluate(FunctionId::W, nu, x, cfg),
        CrossMode::Combination => {
            let up = Order::new(nu.get() + 1.0)?;
            let i0 = bessel(FunctionId::I, nu, x, cfg)?;
            let i1 = bessel(FunctionId::I, up, x, cfg)?;
            // The ascending J series loses digits that I then amplifies.
            let (j0, j1, j_digits, j_terms) = if x > 0.0 {
                let (a, b) = miller_j_pair(nu.get(), x);
                (a, b, 0.0, 0)
            } else {
                let a = bessel(FunctionId::J, nu, x, cfg)?;
                let b = bessel(FunctionId::J, up, x, cfg)?;
                let digits = a.cancellation_digits.max(b.cancellation_digits);
                (a.value, b.value, digits, a.terms_used.max(b.terms_used))
            };
            let a = j1 * i0.value;
            let b = j0 * i1.value;
            let value = a + b;
            Ok(EvalResult {
                value,
                terms_used: j_terms.max(i0.terms_used).max(i1.terms_used),
                cancellation_digits: j_digits
                    .max(i0.cancellation_digits)
                    .max(i1.cancellation_digits)
                    + series::cancellation_digits(a.abs() + b.abs(), value),
            })
        }
    }
}

/// One of the five normalized families; exactly 1 at the origin.
pub fn normalized(f: FunctionId, nu: Order, x: f64, cfg: &SeriesConfig) -> Result<EvalResult> {
    if !f.is_normalized() {
        return domain(format!("{f} is not a normalized family"));
    }
    evaluate(f, nu, x, cfg)
}

/// k-th derivative (k = 1 or 2) of any family, differentiated term-wise.
pub fn derivative(
    f: FunctionId,
    nu: Order,
    x: f64,
    k: u32,
    cfg: &SeriesConfig,
) -> Result<EvalResult> {
    if !(1..=2).contains(&k) {
        return domain(format!("derivative order must be 1 or 2, got {k}"));
    }
    check_envelope(x)?;
    raw(f, nu, x, k, cfg)
}

/// x f'(x) / f(x).
pub fn log_derivative(f: FunctionId, nu: Order, x: f64, cfg: &SeriesConfig) -> Result<f64> {
    check_envelope(x)?;
    let g = f.normalized();
    let s = f.shift(nu.get());
    if x == 0.0 {
        return Ok(s);
    }
    let v = raw(g, nu, x, 0, cfg)?.value;
    let d = raw(g, nu, x, 1, cfg)?.value;
    if v == 0.0 || (v / d).abs() < POLE_GUARD * x.abs() {
        return Err(Error::Pole { x });
    }
    Ok(s + x * d / v)
}

/// f(x) - 1 for a normalized family, summed without forming 1 + small.
pub fn normalized_minus_one(f: FunctionId, nu: Order, x: f64, cfg: &SeriesConfig) -> Result<f64> {
    if !f.is_normalized() {
        return domain(format!("{f} is not a normalized family"));
    }
    check_envelope(x)?;
    if x == 0.0 {
        return Ok(0.0);
    }
    let k = f.kernel();
    let y = x.abs().powi(k.power() as i32);
    Ok(sum_in_y(k, nu.get(), y, 1, |_| 1.0, cfg)?.sum)
}

/// The normalized derivative of W, equal to 1 at the origin:
/// 2^{2nu} Gamma(nu+1) Gamma(nu+2) x^{-2nu} W'(x) / (2nu+1).
pub fn cross_w_prime_normalized(nu: Order, x: f64, cfg: &SeriesConfig) -> Result<f64> {
    let v = nu.get();
    if v == -0.5 {
        return domain("the W' normalization divides by 2nu+1");
    }
    check_envelope(x)?;
    let y = x.abs().powi(4);
    let s = 2.0 * v + 1.0;
    let out = sum_in_y(Kernel::W, v, y, 0, |n| s + 4.0 * n as f64, cfg)?;
    Ok(out.sum / s)
}

/// 1/(calW_nu(t^{1/4})) building blocks: (calW, d calW / dt) as series in t.
pub fn cross_w_in_t(nu: Order, t: f64, cfg: &SeriesConfig) -> Result<(f64, f64)> {
    if !(t >= 0.0) || !t.is_finite() {
        return domain(format!("t must be nonnegative, got {t}"));
    }
    let v = nu.get();
    let f = sum_in_y(Kernel::W, v, t, 0, |_| 1.0, cfg)?.sum;
    let d = if t == 0.0 {
        Kernel::W.ratio(v, 0)
    } else {
        sum_in_y(Kernel::W, v, t, 1, |n| n as f64, cfg)?.sum / t
    };
    Ok((f, d))
}

/// Mittag-Leffler form of x f'(x)/f(x) for calD, lambda and calW, summed
/// over the given positive zeros. Returns (value, bound on omitted terms).
pub fn mittag_leffler(f: FunctionId, x: f64, zeros: &[f64]) -> Result<(f64, f64)> {
    let (p, c, sign) = match f {
        FunctionId::CalD => (2, 2.0, -1.0),
        FunctionId::Lambda => (2, 2.0, 1.0),
        FunctionId::CalW => (4, 4.0, -1.0),
        _ => return domain(format!("no Mittag-Leffler form for {f}")),
    };
    let last = *zeros.last().ok_or_else(|| Error::Domain("empty zero list".into()))?;
    let xp = x.abs().powi(p);
    if xp >= last.powi(p) {
        return domain("x must lie below the last tabulated zero");
    }
    let sum: CompensatedSum = zeros
        .iter()
        .map(|z| {
            let zp = z.powi(p);
            let den = if sign < 0.0 { zp - xp } else { zp + xp };
            sign * c * xp / den
        })
        .collect();
    let tail = c * xp * crate::zeros::tail_bound(last, p as f64)
        / (1.0 - xp / last.powi(p)).max(f64::MIN_POSITIVE);
    Ok((sum.value(), tail))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> SeriesConfig {
        SeriesConfig::default()
    }

    fn o(nu: f64) -> Order {
        Order::new(nu).unwrap()
    }

    #[test]
    fn order_rejects_minus_one() {
        assert!(Order::new(-1.0).is_err());
        assert!(Order::new(f64::NAN).is_err());
        assert!(Order::new(-0.999).is_ok());
    }

    #[test]
    fn tags_round_trip() {
        for f in FunctionId::ALL {
            assert_eq!(f.tag().parse::<FunctionId>().unwrap(), f);
        }
        assert!("K".parse::<FunctionId>().is_err());
    }

    #[test]
    fn origin_values() {
        assert_eq!(bessel(FunctionId::J, o(0.0), 0.0, &cfg()).unwrap().value, 1.0);
        assert_eq!(bessel(FunctionId::I, o(0.0), 0.0, &cfg()).unwrap().value, 1.0);
        assert_eq!(dini(FunctionId::D, o(0.0), 0.0, &cfg()).unwrap().value, 1.0);
        assert_eq!(dini(FunctionId::Xi, o(0.0), 0.0, &cfg()).unwrap().value, 1.0);
        assert_eq!(cross_w(o(0.0), 0.0, CrossMode::Series, &cfg()).unwrap().value, 0.0);
        for f in [
            FunctionId::CalJ,
            FunctionId::CalI,
            FunctionId::CalD,
            FunctionId::Lambda,
            FunctionId::CalW,
        ] {
            for nu in [-0.9, 0.0, 2.5] {
                assert_eq!(normalized(f, o(nu), 0.0, &cfg()).unwrap().value, 1.0);
            }
        }
    }

    #[test]
    fn negative_order_at_origin_is_singular() {
        assert!(bessel(FunctionId::J, o(-0.5), 0.0, &cfg()).is_err());
        assert_eq!(bessel(FunctionId::J, o(0.5), 0.0, &cfg()).unwrap().value, 0.0);
    }

    #[test]
    fn j0_at_one() {
        // 20-term direct sum of the J_0 series
        let mut s = 0.0;
        let mut t = 1.0;
        for n in 0..20 {
            s += t;
            t *= -0.25 / ((n as f64 + 1.0) * (n as f64 + 1.0));
        }
        let v = bessel(FunctionId::J, o(0.0), 1.0, &cfg()).unwrap().value;
        assert!((v - s).abs() < 1e-15);
        assert!((v - 0.765_197_686_557_966_6).abs() < 1e-15);
    }

    #[test]
    fn w0_at_one() {
        let c = cross_w(o(0.0), 1.0, CrossMode::Combination, &cfg()).unwrap().value;
        assert!((c - 0.989_591_470_008_667_4).abs() < 1e-15);
        assert!((c - 0.98962).abs() < 5e-5);
    }

    #[test]
    fn dini_sign_change_between_1_2_and_1_3() {
        let a = dini(FunctionId::D, o(0.0), 1.2, &cfg()).unwrap().value;
        let b = dini(FunctionId::D, o(0.0), 1.3, &cfg()).unwrap().value;
        assert!(a > 0.0 && b < 0.0);
    }

    #[test]
    fn merged_dini_matches_combination() {
        for nu in [-0.9, -0.5, 0.0, 1.0, 2.5, 5.0] {
            for x in [0.3, 1.0, 3.0, 6.5, 9.0] {
                for f in [FunctionId::D, FunctionId::Xi] {
                    let a = dini(f, o(nu), x, &cfg()).unwrap().value;
                    let b = dini_combination(f, o(nu), x, &cfg()).unwrap().value;
                    assert!((a - b).abs() <= 1e-12 * a.abs().max(1.0), "{f} {nu} {x}: {a} {b}");
                }
            }
        }
    }

    #[test]
    fn cross_w_modes_agree() {
        for nu in [-0.9, -0.5, 0.0, 0.5, 1.0, 2.5, 5.0] {
            for x in [0.5, 1.0, 2.0, 5.0, 7.5, 10.0] {
                let a = cross_w(o(nu), x, CrossMode::Series, &cfg()).unwrap().value;
                let b = cross_w(o(nu), x, CrossMode::Combination, &cfg()).unwrap().value;
                assert!((a - b).abs() <= 1e-12 * a.abs().max(1.0), "{nu} {x}: {a} {b}");
            }
        }
    }

    #[test]
    fn parity() {
        for f in [FunctionId::CalD, FunctionId::Lambda, FunctionId::CalW, FunctionId::CalJ] {
            for x in [0.3, 1.7, 4.2] {
                let a = normalized(f, o(0.7), x, &cfg()).unwrap().value;
                let b = normalized(f, o(0.7), -x, &cfg()).unwrap().value;
                assert_eq!(a, b);
            }
        }
        // integer order: J_1 is odd
        let a = bessel(FunctionId::J, o(1.0), 2.0, &cfg()).unwrap().value;
        let b = bessel(FunctionId::J, o(1.0), -2.0, &cfg()).unwrap().value;
        assert_eq!(a, -b);
        assert!(bessel(FunctionId::J, o(0.5), -2.0, &cfg()).is_err());
    }

    #[test]
    fn derivatives_at_origin_vanish() {
        for nu in [-0.5, 0.0, 3.0] {
            let w = derivative(FunctionId::CalW, o(nu), 0.0, 1, &cfg()).unwrap().value;
            let d = derivative(FunctionId::CalD, o(nu), 0.0, 1, &cfg()).unwrap().value;
            assert_eq!(w, 0.0);
            assert_eq!(d, 0.0);
        }
        // calD''(0) = 2 c_1 = -3/(2(nu+1))
        let d2 = derivative(FunctionId::CalD, o(1.0), 0.0, 2, &cfg()).unwrap().value;
        assert!((d2 + 0.75).abs() < 1e-15);
    }

    #[test]
    fn derivative_matches_finite_difference() {
        let h = 1e-5;
        for f in FunctionId::ALL {
            for nu in [0.0, 1.0, 2.5] {
                for x in [0.5, 1.5, 4.0] {
                    let fd = (evaluate(f, o(nu), x + h, &cfg()).unwrap().value
                        - evaluate(f, o(nu), x - h, &cfg()).unwrap().value)
                        / (2.0 * h);
                    let d = derivative(f, o(nu), x, 1, &cfg()).unwrap().value;
                    assert!((fd - d).abs() < 1e-6, "{f} {nu} {x}: {fd} {d}");
                }
            }
        }
    }

    #[test]
    fn dini_derivative_formula() {
        // d' = (nu/x - x) J_nu + (nu - 1) J_{nu+1}
        for nu in [-0.5, 0.0, 2.0] {
            for x in [0.7, 3.3] {
                let j0 = bessel(FunctionId::J, o(nu), x, &cfg()).unwrap().value;
                let j1 = bessel(FunctionId::J, o(nu + 1.0), x, &cfg()).unwrap().value;
                let want = (nu / x - x) * j0 + (nu - 1.0) * j1;
                let got = derivative(FunctionId::D, o(nu), x, 1, &cfg()).unwrap().value;
                assert!((got - want).abs() < 1e-13, "{nu} {x}");
            }
        }
    }

    #[test]
    fn log_derivative_basics() {
        assert_eq!(log_derivative(FunctionId::CalW, o(1.0), 0.0, &cfg()).unwrap(), 0.0);
        assert_eq!(log_derivative(FunctionId::J, o(2.0), 0.0, &cfg()).unwrap(), 2.0);
        for x in [0.1, 1.0, 5.0] {
            assert!(log_derivative(FunctionId::Lambda, o(0.0), x, &cfg()).unwrap() > 0.0);
        }
        // x J_0'/J_0 = -x J_1/J_0
        let x = 1.3;
        let j0 = bessel(FunctionId::J, o(0.0), x, &cfg()).unwrap().value;
        let j1 = bessel(FunctionId::J, o(1.0), x, &cfg()).unwrap().value;
        let ld = log_derivative(FunctionId::J, o(0.0), x, &cfg()).unwrap();
        assert!((ld + x * j1 / j0).abs() < 1e-14);
    }

    #[test]
    fn log_derivative_refuses_poles() {
        let j01 = 2.404_825_557_695_772_8;
        assert!(matches!(
            log_derivative(FunctionId::CalJ, o(0.0), j01, &cfg()),
            Err(Error::Pole { .. })
        ));
    }

    #[test]
    fn minus_one_series() {
        for f in [FunctionId::CalD, FunctionId::Lambda, FunctionId::CalW] {
            let x = 0.8;
            let a = normalized(f, o(0.3), x, &cfg()).unwrap().value - 1.0;
            let b = normalized_minus_one(f, o(0.3), x, &cfg()).unwrap();
            assert!((a - b).abs() < 1e-15);
        }
        let tiny = normalized_minus_one(FunctionId::CalD, o(0.0), 1e-6, &cfg()).unwrap();
        assert!((tiny / -0.75e-12 - 1.0).abs() < 1e-9);
    }

    #[test]
    fn w_prime_normalized_matches_derivative() {
        for nu in [0.0, 1.0, 2.5] {
            let x = 1.7;
            let v = nu;
            let c = (2.0 * v * std::f64::consts::LN_2
                + ln_gamma_pos(v + 1.0)
                + ln_gamma_pos(v + 2.0))
            .exp();
            let wp = derivative(FunctionId::W, o(nu), x, 1, &cfg()).unwrap().value;
            let want = c * x.powf(-2.0 * v) * wp / (2.0 * v + 1.0);
            let got = cross_w_prime_normalized(o(nu), x, &cfg()).unwrap();
            assert!((got - want).abs() < 1e-13 * want.abs().max(1.0), "{nu}");
        }
        assert_eq!(cross_w_prime_normalized(o(0.0), 0.0, &cfg()).unwrap(), 1.0);
    }

    #[test]
    fn t_series_matches_x_series() {
        let x: f64 = 1.9;
        let (w, dw) = cross_w_in_t(o(0.4), x.powi(4), &cfg()).unwrap();
        let want = normalized(FunctionId::CalW, o(0.4), x, &cfg()).unwrap().value;
        assert!((w - want).abs() < 1e-15);
        // d/dt = (d/dx) / (4 x^3)
        let dx = derivative(FunctionId::CalW, o(0.4), x, 1, &cfg()).unwrap().value;
        assert!((dw - dx / (4.0 * x.powi(3))).abs() < 1e-15);
    }

    #[test]
    fn envelope_is_enforced() {
        assert!(bessel(FunctionId::J, o(0.0), 40.5, &cfg()).is_err());
        assert!(bessel(FunctionId::J, o(0.0), 40.0, &cfg()).is_ok());
    }

    #[test]
    fn config_validation() {
        assert!(SeriesConfig::new(0.0, 100, true).is_err());
        assert!(SeriesConfig::new(1e-15, 4, true).is_err());
        assert!(SeriesConfig::new(1e-12, 8, false).is_ok());
    }

    #[test]
    fn cancellation_is_reported() {
        let r = bessel(FunctionId::J, o(0.0), 30.0, &cfg()).unwrap();
        assert!(r.cancellation_digits > 10.0);
        let r = bessel(FunctionId::I, o(0.0), 30.0, &cfg()).unwrap();
        assert_eq!(r.cancellation_digits, 0.0);
    }
}
