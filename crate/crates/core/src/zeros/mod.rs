//! Positive zeros of J, d, W and of the derivatives d', calD' and W',
//! bracketed by interlacing and refined by bisection then Newton.

mod refine;

use std::collections::HashMap;
use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock, RwLock};

use crate::error::{domain, Error, Result};
use crate::report::{Checker, ClaimId, VerificationReport};
use crate::special::{bessel_i_ratio, bessel_j_pair, CompensatedSum, Order};

pub use refine::refine;

pub const DEFAULT_TOL: f64 = 1e-12;
pub const MIN_TOL: f64 = 1e-13;
/// Relative slack on the asymptotic spacing pi used by the tail bounds.
pub const SPACING_SLACK: f64 = 0.05;

/// Which function's zeros a table holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ZeroKind {
    /// j_{nu,n}
    BesselJ,
    /// alpha_{nu,n}, zeros of d_nu
    Dini,
    /// gamma_{nu,n}, zeros of W_nu
    Cross,
    /// zeros of d'_nu (nu > 0)
    DiniPrime,
    /// zeros of calD'_nu
    CalDPrime,
    /// gamma'_{nu,n}, zeros of W'_nu
    CrossPrime,
}

impl ZeroKind {
    pub const ALL: [ZeroKind; 6] = [
        ZeroKind::BesselJ,
        ZeroKind::Dini,
        ZeroKind::Cross,
        ZeroKind::DiniPrime,
        ZeroKind::CalDPrime,
        ZeroKind::CrossPrime,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            ZeroKind::BesselJ => "J",
            ZeroKind::Dini => "dini",
            ZeroKind::Cross => "cross",
            ZeroKind::DiniPrime => "dini-prime",
            ZeroKind::CalDPrime => "calD-prime",
            ZeroKind::CrossPrime => "W-prime",
        }
    }
}

impl fmt::Display for ZeroKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for ZeroKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ZeroKind::ALL
            .into_iter()
            .find(|k| k.tag() == s)
            .ok_or_else(|| Error::Domain(format!("unknown zero family '{s}'")))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ZeroTable {
    pub kind: ZeroKind,
    pub nu: f64,
    pub zeros: Vec<f64>,
    /// |f(zero)| in the representation used for rooting.
    pub residuals: Vec<f64>,
    /// |f'(zero)| in the same representation.
    pub slopes: Vec<f64>,
    pub tol: f64,
}

impl ZeroTable {
    pub fn len(&self) -> usize {
        self.zeros.len()
    }

    pub fn is_empty(&self) -> bool {
        self.zeros.is_empty()
    }

    /// n-th zero, 1-based.
    pub fn get(&self, n: usize) -> f64 {
        self.zeros[n - 1]
    }

    pub fn last(&self) -> f64 {
        *self.zeros.last().expect("tables are never empty")
    }

    /// Bound on the absolute error of the i-th (0-based) zero.
    pub fn error_bound(&self, i: usize) -> f64 {
        let z = self.zeros[i];
        let slope = self.slopes[i].max(f64::MIN_POSITIVE);
        (self.residuals[i] / slope).max(4.0 * f64::EPSILON * z)
    }

    /// sum_{n <= N} z_n^{-p} and a bound on the omitted tail plus the error
    /// propagated from the zeros.
    pub fn power_sum(&self, p: f64) -> (f64, f64) {
        let mut s = CompensatedSum::new();
        let mut prop = 0.0;
        for (i, z) in self.zeros.iter().enumerate() {
            let t = z.powf(-p);
            s.add(t);
            prop += p * t * self.error_bound(i) / z;
        }
        let sum = s.value();
        (sum, tail_bound(self.last(), p) + prop + 16.0 * f64::EPSILON * sum)
    }

    pub fn prefix(&self, count: usize) -> ZeroTable {
        ZeroTable {
            kind: self.kind,
            nu: self.nu,
            zeros: self.zeros[..count].to_vec(),
            residuals: self.residuals[..count].to_vec(),
            slopes: self.slopes[..count].to_vec(),
            tol: self.tol,
        }
    }

    pub fn write_csv<W: Write>(&self, mut w: W) -> io::Result<()> {
        writeln!(w, "index,zero,residual")?;
        for (i, (z, r)) in self.zeros.iter().zip(&self.residuals).enumerate() {
            writeln!(w, "{},{},{}", i + 1, crate::fmt::num(*z), crate::fmt::num(*r))?;
        }
        Ok(())
    }

    pub fn to_csv(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("csv is utf-8")
    }
}

/// Upper bound on sum_{n > N} z_n^{-p} given z_N = last, p > 1, using
/// spacing at least pi (1 - SPACING_SLACK) beyond the last zero.
pub fn tail_bound(last: f64, p: f64) -> f64 {
    let delta = std::f64::consts::PI * (1.0 - SPACING_SLACK);
    last.powf(1.0 - p) / ((p - 1.0) * delta)
}

/// f and f' in the representation used for rooting; all representations
/// have the same sign and the same zeros as the named function for x > 0.
pub(crate) fn target(kind: ZeroKind, nu: f64, x: f64) -> (f64, f64) {
    let (j0, j1) = bessel_j_pair(nu, x);
    let dj0 = nu / x * j0 - j1;
    let dj1 = j0 - (nu + 1.0) / x * j1;
    let d = j0 - x * j1;
    let d1 = (nu / x - x) * j0 + (nu - 1.0) * j1;
    let d2 = (-nu / (x * x) - 1.0) * j0 + (nu / x - x) * dj0 + (nu - 1.0) * dj1;
    match kind {
        ZeroKind::BesselJ => (j0, dj0),
        ZeroKind::Dini => (d, d1),
        ZeroKind::DiniPrime => (d1, d2),
        ZeroKind::CalDPrime => (x * d1 - nu * d, x * d2 + (1.0 - nu) * d1),
        ZeroKind::Cross | ZeroKind::CrossPrime => {
            let r = bessel_i_ratio(nu, x);
            let w = j1 + r * j0;
            let p = 2.0 * j0 - w / x;
            if kind == ZeroKind::Cross {
                (w, p)
            } else {
                let q = 2.0 * (2.0 * nu / x * j0 - j1 + r * j0) - p / x + w / (x * x);
                (p, q)
            }
        }
    }
}

/// Sign of the rooted function just right of the origin.
fn sign_at_origin(kind: ZeroKind, nu: f64) -> f64 {
    match kind {
        ZeroKind::CrossPrime if nu <= -0.5 => -1.0,
        _ => 1.0,
    }
}

/// Zero tables memoized per (family, order); published tables never change.
pub struct ZeroFinder {
    tol: f64,
    cache: RwLock<HashMap<(ZeroKind, u64), Arc<ZeroTable>>>,
}

impl ZeroFinder {
    pub fn new(tol: f64) -> Result<Self> {
        if !(tol >= MIN_TOL) || !tol.is_finite() {
            return domain(format!("tolerance must be at least {MIN_TOL}, got {tol}"));
        }
        Ok(ZeroFinder { tol, cache: RwLock::new(HashMap::new()) })
    }

    /// Process-wide finder at the default tolerance.
    pub fn global() -> &'static ZeroFinder {
        Self::shared(DEFAULT_TOL).expect("default tolerance is valid")
    }

    /// Process-wide finder for a given tolerance.
    pub fn shared(tol: f64) -> Result<&'static ZeroFinder> {
        static FINDERS: OnceLock<Mutex<HashMap<u64, &'static ZeroFinder>>> = OnceLock::new();
        let map = FINDERS.get_or_init(|| Mutex::new(HashMap::new()));
        let mut map = map.lock().expect("finder registry poisoned");
        if let Some(f) = map.get(&tol.to_bits()) {
            return Ok(f);
        }
        let f: &'static ZeroFinder = Box::leak(Box::new(ZeroFinder::new(tol)?));
        map.insert(tol.to_bits(), f);
        Ok(f)
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    /// The first `count` zeros of `kind` at order `nu`.
    pub fn table(&self, kind: ZeroKind, nu: Order, count: usize) -> Result<Arc<ZeroTable>> {
        if count == 0 {
            return domain("count must be at least 1");
        }
        let v = nu.get();
        if kind == ZeroKind::DiniPrime && v <= 0.0 {
            return domain(format!("zeros of d' are only covered for nu > 0, got {v}"));
        }
        let key = (kind, v.to_bits());
        let existing = self.cache.read().expect("zero cache poisoned").get(&key).cloned();
        if let Some(t) = &existing {
            if t.len() >= count {
                return Ok(if t.len() == count { t.clone() } else { Arc::new(t.prefix(count)) });
            }
        }
        let mut table = match existing {
            Some(t) => (*t).clone(),
            None => ZeroTable {
                kind,
                nu: v,
                zeros: Vec::with_capacity(count),
                residuals: Vec::with_capacity(count),
                slopes: Vec::with_capacity(count),
                tol: self.tol,
            },
        };
        self.extend(&mut table, count)?;
        let table = Arc::new(table);
        let mut cache = self.cache.write().expect("zero cache poisoned");
        let keep = match cache.get(&key) {
            Some(t) if t.len() >= table.len() => t.clone(),
            _ => {
                cache.insert(key, table.clone());
                table
            }
        };
        Ok(if keep.len() == count { keep } else { Arc::new(keep.prefix(count)) })
    }

    fn extend(&self, t: &mut ZeroTable, count: usize) -> Result<()> {
        let nu = t.nu;
        let order = Order::new(nu)?;
        let kind = t.kind;
        let f = |x: f64| target(kind, nu, x);
        let s0 = sign_at_origin(kind, nu);
        // dependency tables for interlacing brackets
        let deps = match kind {
            ZeroKind::BesselJ => None,
            ZeroKind::Dini => Some(self.table(ZeroKind::BesselJ, order, count)?),
            ZeroKind::Cross => Some(self.table(ZeroKind::BesselJ, order, count + 1)?),
            ZeroKind::DiniPrime => Some(self.table(ZeroKind::Dini, order, count)?),
            ZeroKind::CalDPrime => Some(self.table(ZeroKind::Dini, order, count + 1)?),
            ZeroKind::CrossPrime => Some(self.table(ZeroKind::Cross, order, count + 1)?),
        };
        while t.len() < count {
            let n = t.len() + 1;
            let (a, b) = match (kind, &deps) {
                (ZeroKind::BesselJ, _) => {
                    let start = t.zeros.last().copied().unwrap_or(0.0);
                    scan_bracket(&f, nu, n, start, s0)?
                }
                (ZeroKind::Dini | ZeroKind::DiniPrime, Some(d)) => {
                    (if n == 1 { 0.0 } else { d.get(n - 1) }, d.get(n))
                }
                (ZeroKind::Cross | ZeroKind::CalDPrime, Some(d)) => (d.get(n), d.get(n + 1)),
                (ZeroKind::CrossPrime, Some(d)) => {
                    if nu > -0.5 {
                        (if n == 1 { 0.0 } else { d.get(n - 1) }, d.get(n))
                    } else {
                        (d.get(n), d.get(n + 1))
                    }
                }
                _ => unreachable!("dependency table missing"),
            };
            let sa = if a == 0.0 { s0 } else { f(a).0.signum() };
            let sb = f(b).0.signum();
            if sa == sb || sa == 0.0 {
                return Err(Error::Bracket(format!(
                    "{kind} zero {n} at nu = {nu}: no sign change on ({a}, {b})"
                )));
            }
            let (z, res, slope) = refine(&f, a, b, sa, self.tol)?;
            if let Some(&prev) = t.zeros.last() {
                if z <= prev {
                    return Err(Error::Bracket(format!("{kind} zero {n} not increasing")));
                }
            }
            t.zeros.push(z);
            t.residuals.push(res);
            t.slopes.push(slope);
        }
        Ok(())
    }
}

/// Walks right from `start` until J changes sign, within the McMahon-type
/// window (n + nu/2 - 1/4) pi + pi/2, widened up to three times.
fn scan_bracket(
    f: &impl Fn(f64) -> (f64, f64),
    nu: f64,
    n: usize,
    start: f64,
    s0: f64,
) -> Result<(f64, f64)> {
    let pi = std::f64::consts::PI;
    let step = pi / 8.0;
    let mut limit = (n as f64 + nu / 2.0 - 0.25) * pi + pi / 2.0;
    let mut lo = start;
    let mut slo = if start == 0.0 { s0 } else { f(start + step).0.signum() };
    if start > 0.0 {
        lo = start + step;
    }
    for _ in 0..=3 {
        while lo < limit {
            let hi = lo + step;
            let shi = f(hi).0.signum();
            if shi != slo && shi != 0.0 {
                return Ok((lo, hi));
            }
            if shi == 0.0 {
                return Ok((lo, hi + step));
            }
            lo = hi;
            slo = shi;
        }
        limit += pi / 2.0;
    }
    Err(Error::Bracket(format!("J zero {n} at nu = {nu} not found below {limit}")))
}

/// j_{nu,1..count}.
pub fn bessel_j_zeros(nu: Order, count: usize, tol: f64) -> Result<Arc<ZeroTable>> {
    ZeroFinder::shared(tol)?.table(ZeroKind::BesselJ, nu, count)
}

/// alpha_{nu,1..count}, zeros of the Dini function d_nu.
pub fn dini_zeros(nu: Order, count: usize, tol: f64) -> Result<Arc<ZeroTable>> {
    ZeroFinder::shared(tol)?.table(ZeroKind::Dini, nu, count)
}

/// gamma_{nu,1..count}, zeros of W_nu.
pub fn cross_zeros(nu: Order, count: usize, tol: f64) -> Result<Arc<ZeroTable>> {
    ZeroFinder::shared(tol)?.table(ZeroKind::Cross, nu, count)
}

/// Zeros of d', calD' or W'.
pub fn derivative_zeros(which: ZeroKind, nu: Order, count: usize, tol: f64) -> Result<Arc<ZeroTable>> {
    match which {
        ZeroKind::DiniPrime | ZeroKind::CalDPrime | ZeroKind::CrossPrime => {
            ZeroFinder::shared(tol)?.table(which, nu, count)
        }
        _ => domain(format!("{which} is not a derivative family")),
    }
}

/// First zero of J_nu without touching any cache.
pub(crate) fn first_j_zero(nu: f64, tol: f64) -> Result<f64> {
    let f = |x: f64| target(ZeroKind::BesselJ, nu, x);
    let (a, b) = scan_bracket(&f, nu, 1, 0.0, 1.0)?;
    Ok(refine(&f, a, b, 1.0, tol)?.0)
}

fn lemma_gap(nu: f64) -> Result<f64> {
    let j = first_j_zero(nu, MIN_TOL)?;
    Ok(j * j - 8.0 * (nu + 1.0))
}

/// The root nu_0 in (1, 2) of j_{nu,1}^2 = 8 (nu + 1).
pub fn nu0(tol: f64) -> Result<f64> {
    if !(tol >= 1e-12) {
        return domain(format!("tolerance must be at least 1e-12, got {tol}"));
    }
    let (mut lo, mut hi) = (1.0, 2.0);
    let (flo, fhi) = (lemma_gap(lo)?, lemma_gap(hi)?);
    if !(flo < 0.0 && fhi > 0.0) {
        return Err(Error::Bracket(format!(
            "j^2 - 8(nu+1) is {flo} at 1 and {fhi} at 2; expected a sign change"
        )));
    }
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if lemma_gap(mid)? < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// nu_0 at the default tolerance, computed once.
pub fn nu0_cached() -> Result<f64> {
    static NU0: OnceLock<std::result::Result<f64, Error>> = OnceLock::new();
    NU0.get_or_init(|| nu0(1e-12)).clone()
}

/// Checks alpha_n < j_n < gamma_n < alpha_{n+1} < j_{n+1} for n <= count.
pub fn interlacing_chain(nu: Order, count: usize) -> Result<VerificationReport> {
    let mut ch = Checker::new(ClaimId::Thm2);
    chain_into(&mut ch, nu, count)?;
    Ok(ch.finish())
}

pub(crate) fn chain_into(ch: &mut Checker, nu: Order, count: usize) -> Result<()> {
    if count == 0 {
        return domain("count must be at least 1");
    }
    let zf = ZeroFinder::global();
    let a = zf.table(ZeroKind::Dini, nu, count + 1)?;
    let j = zf.table(ZeroKind::BesselJ, nu, count + 1)?;
    let g = zf.table(ZeroKind::Cross, nu, count)?;
    for n in 1..=count {
        let chain = [a.get(n), j.get(n), g.get(n), a.get(n + 1), j.get(n + 1)];
        let gap = chain.windows(2).map(|w| w[1] - w[0]).fold(f64::INFINITY, f64::min);
        ch.check(&[("nu", nu.get()), ("n", n as f64)], gap, gap > 1e-6);
    }
    ch.note("margin is the smallest gap in the chain; required > 1e-6");
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn o(nu: f64) -> Order {
        Order::new(nu).unwrap()
    }

    fn zf() -> &'static ZeroFinder {
        ZeroFinder::global()
    }

    // mpmath, 30 digits
    const ALPHA0: [f64; 5] = [
        1.255_783_711_794_593_6,
        4.079_477_710_797_353,
        7.155_799_174_643_981,
        10.270_985_361_938_866,
        13.398_397_486_413_835,
    ];
    const GAMMA0: [f64; 5] = [
        3.196_220_616_582_541_3,
        6.306_437_047_688_424,
        9.439_499_137_876_405,
        12.577_130_640_430_655,
        15.716_438_526_807_485,
    ];

    #[test]
    fn first_bessel_zero() {
        let t = bessel_j_zeros(o(0.0), 1, 1e-12).unwrap();
        assert!((t.get(1) - 2.404_825_557_695_772_8).abs() < 1e-12);
    }

    #[test]
    fn half_order_zeros_are_multiples_of_pi() {
        let t = zf().table(ZeroKind::BesselJ, o(0.5), 40).unwrap();
        for (i, z) in t.zeros.iter().enumerate() {
            let want = (i + 1) as f64 * std::f64::consts::PI;
            assert!((z - want).abs() < 1e-11 * want, "{i}: {z}");
        }
    }

    #[test]
    fn reference_zeros() {
        let a = zf().table(ZeroKind::Dini, o(0.0), 5).unwrap();
        let g = zf().table(ZeroKind::Cross, o(0.0), 5).unwrap();
        for i in 0..5 {
            assert!((a.zeros[i] - ALPHA0[i]).abs() < 1e-11, "alpha {i}");
            assert!((g.zeros[i] - GAMMA0[i]).abs() < 1e-11, "gamma {i}");
        }
        let cases = [
            (ZeroKind::BesselJ, 1.0, 3.831_705_970_207_512_5),
            (ZeroKind::Dini, 1.0, 1.841_183_781_340_659_3),
            (ZeroKind::Cross, 1.0, 4.610_899_879_049_056),
            (ZeroKind::BesselJ, 2.0, 5.135_622_301_840_683),
            (ZeroKind::Dini, 2.0, 2.299_910_330_228_411),
            (ZeroKind::Cross, 2.0, 5.905_678_235_420_523),
            (ZeroKind::BesselJ, 5.0, 8.771_483_815_959_954),
            (ZeroKind::Dini, 5.0, 3.340_550_752_180_135_4),
            (ZeroKind::Cross, 5.0, 9.525_701_355_671_723),
            (ZeroKind::BesselJ, -0.9, 0.647_830_880_750_377_2),
            (ZeroKind::Dini, -0.9, 0.369_937_294_270_784_4),
            (ZeroKind::Cross, -0.9, 1.389_441_194_787_397_5),
            (ZeroKind::Dini, -0.5, 0.860_333_589_019_379_7),
            (ZeroKind::Cross, -0.5, 2.365_020_372_431_352),
            (ZeroKind::Cross, 0.5, 3.926_602_312_047_919),
            (ZeroKind::CrossPrime, 0.0, 2.107_988_124_967_216_3),
            (ZeroKind::CrossPrime, 1.0, 3.674_416_568_090_339),
            (ZeroKind::CrossPrime, 2.0, 5.024_402_730_130_646),
            (ZeroKind::CrossPrime, -0.9, 3.868_093_223_654_453),
            (ZeroKind::CrossPrime, -0.5, 4.590_768_858_506_829),
        ];
        for (kind, nu, want) in cases {
            let got = zf().table(kind, o(nu), 1).unwrap().get(1);
            assert!((got - want).abs() < 1e-11 * want.max(1.0), "{kind} {nu}: {got} vs {want}");
        }
    }

    #[test]
    fn dini_zeros_at_half_order() {
        // d_{1/2} zeros are (n - 1/2) pi
        let t = zf().table(ZeroKind::Dini, o(0.5), 20).unwrap();
        for (i, z) in t.zeros.iter().enumerate() {
            let want = (i as f64 + 0.5) * std::f64::consts::PI;
            assert!((z - want).abs() < 1e-11 * want);
        }
    }

    #[test]
    fn tables_are_increasing_with_small_residuals() {
        for kind in ZeroKind::ALL {
            let nu = 1.5;
            let t = zf().table(kind, o(nu), 30).unwrap();
            assert!(t.zeros.windows(2).all(|w| w[1] > w[0]), "{kind}");
            for i in 0..t.len() {
                let bound = 10.0 * t.tol * t.zeros[i].max(1.0) * t.slopes[i];
                assert!(t.residuals[i] <= bound, "{kind} {i}");
            }
        }
    }

    #[test]
    fn spacing_tends_to_pi() {
        let t = zf().table(ZeroKind::BesselJ, o(2.0), 300).unwrap();
        let gap = t.get(300) - t.get(299);
        assert!((gap - std::f64::consts::PI).abs() < 1e-4);
    }

    #[test]
    fn dini_prime_requires_positive_order() {
        assert!(matches!(
            derivative_zeros(ZeroKind::DiniPrime, o(0.0), 3, 1e-12),
            Err(Error::Domain(_))
        ));
        let t = derivative_zeros(ZeroKind::DiniPrime, o(0.5), 5, 1e-12).unwrap();
        let a = dini_zeros(o(0.5), 5, 1e-12).unwrap();
        for n in 1..=5 {
            let lo = if n == 1 { 0.0 } else { a.get(n - 1) };
            assert!(lo < t.get(n) && t.get(n) < a.get(n));
        }
    }

    #[test]
    fn tolerance_floor() {
        assert!(ZeroFinder::new(1e-14).is_err());
        assert!(bessel_j_zeros(o(0.0), 1, 1e-14).is_err());
    }

    #[test]
    fn csv_layout() {
        let t = zf().table(ZeroKind::BesselJ, o(0.0), 2).unwrap();
        let csv = t.to_csv();
        let lines: Vec<_> = csv.lines().collect();
        assert_eq!(lines[0], "index,zero,residual");
        assert!(lines[1].starts_with("1,2.40482555769577"));
        assert_eq!(lines.len(), 3);
    }

    #[test]
    fn nu0_lies_in_unit_interval() {
        let v = nu0_cached().unwrap();
        assert!((v - 1.447_424_708_278_501).abs() < 1e-9);
        let j = first_j_zero(v, MIN_TOL).unwrap();
        assert!((j * j - 8.0 * (v + 1.0)).abs() <= 1e-9);
        let j1 = first_j_zero(1.0, MIN_TOL).unwrap();
        let j2 = first_j_zero(2.0, MIN_TOL).unwrap();
        assert!(j1 * j1 < 16.0 && j2 * j2 > 24.0);
    }

    #[test]
    fn chain_for_two_orders() {
        for nu in [2.0, -0.5] {
            let r = interlacing_chain(o(nu), 8).unwrap();
            assert!(r.pass, "{nu}: {r:?}");
            assert_eq!(r.points_checked, 8);
            assert!(r.min_margin.unwrap() > 1e-6);
        }
    }

    #[test]
    fn tail_bound_dominates_half_order_tail() {
        // zeros of J_{1/2} are n pi; sum_{n>N} (n pi)^{-2} < tail_bound
        let n = 100.0f64;
        let exact: f64 = (101..200_000).map(|k| (k as f64 * std::f64::consts::PI).powi(-2)).sum();
        let b = tail_bound(n * std::f64::consts::PI, 2.0);
        assert!(exact < b && b < 1.2 * exact);
    }
}
