//! Rayleigh functions: sums of reciprocal powers of the zeros of J, d and W,
//! by closed form, by the Euler-Rayleigh recursion on Taylor coefficients,
//! and by direct summation over computed zeros.

use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;

use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::special::{pochhammer, Kernel, Order};
use crate::zeros::{ZeroFinder, ZeroKind};

/// Deepest recursion order served.
pub const MAX_RECURSION: usize = 12;
/// Zeros used by the direct route.
pub const DIRECT_ZEROS: usize = 2000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RayleighFamily {
    /// eta_{2m}: zeros of d_nu
    Eta,
    /// zeta_{4m}: zeros of W_nu
    Zeta,
    /// sigma^{(2m)}: zeros of J_nu
    Sigma,
}

impl RayleighFamily {
    pub fn tag(self) -> &'static str {
        match self {
            RayleighFamily::Eta => "eta",
            RayleighFamily::Zeta => "zeta",
            RayleighFamily::Sigma => "sigma",
        }
    }

    /// Power of the zeros in the first sum.
    pub fn power(self) -> u32 {
        match self {
            RayleighFamily::Zeta => 4,
            _ => 2,
        }
    }

    fn kernel(self) -> Kernel {
        match self {
            RayleighFamily::Eta => Kernel::D,
            RayleighFamily::Zeta => Kernel::W,
            RayleighFamily::Sigma => Kernel::J,
        }
    }

    /// Family of zeros the sums run over.
    pub fn zero_kind(self) -> ZeroKind {
        match self {
            RayleighFamily::Eta => ZeroKind::Dini,
            RayleighFamily::Zeta => ZeroKind::Cross,
            RayleighFamily::Sigma => ZeroKind::BesselJ,
        }
    }
}

impl fmt::Display for RayleighFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for RayleighFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "eta" => Ok(RayleighFamily::Eta),
            "zeta" => Ok(RayleighFamily::Zeta),
            "sigma" => Ok(RayleighFamily::Sigma),
            _ => domain(format!("unknown Rayleigh family '{s}'")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Closed,
    Recursion,
    Direct,
}

impl Method {
    pub fn tag(self) -> &'static str {
        match self {
            Method::Closed => "closed",
            Method::Recursion => "recursion",
            Method::Direct => "direct",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "closed" => Ok(Method::Closed),
            "recursion" => Ok(Method::Recursion),
            "direct" => Ok(Method::Direct),
            _ => domain(format!("unknown method '{s}'")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RayleighValue {
    pub family: RayleighFamily,
    pub nu: f64,
    pub m: usize,
    pub value: f64,
    pub method: Method,
    /// Bound on the omitted tail for direct sums, 0 otherwise.
    pub tail_err: f64,
}

pub const CSV_HEADER: &str = "family,nu,m,method,value,tail_err";

impl RayleighValue {
    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.family,
            crate::fmt::num(self.nu),
            self.m,
            self.method,
            crate::fmt::num(self.value),
            crate::fmt::num(self.tail_err)
        )
    }
}

pub fn write_csv<W: Write>(mut w: W, rows: &[RayleighValue]) -> io::Result<()> {
    writeln!(w, "{CSV_HEADER}")?;
    for r in rows {
        writeln!(w, "{}", r.csv_row())?;
    }
    Ok(())
}

/// Taylor coefficients a_1, a_2, ... of an entire function with a_0 = 1.
#[derive(Clone, Debug, PartialEq)]
pub struct CoeffSeq {
    pub a: Vec<f64>,
}

impl CoeffSeq {
    pub fn new(a: Vec<f64>) -> Self {
        CoeffSeq { a }
    }

    /// Coefficients in z = x^p of the normalized function whose zeros define
    /// `family`.
    pub fn for_family(family: RayleighFamily, nu: Order, count: usize) -> Self {
        let mut c = family.kernel().coefficients(nu.get(), count + 1);
        c.remove(0);
        CoeffSeq { a: c }
    }
}

/// S_n = -n a_n - sum_{i<n} a_i S_{n-i}, for n = 1..m.
pub fn euler_rayleigh(coeffs: &CoeffSeq, m: usize) -> Result<Vec<f64>> {
    if coeffs.a.len() < m {
        return Err(Error::Length { needed: m, got: coeffs.a.len() });
    }
    let a = |i: usize| coeffs.a[i - 1];
    let mut s: Vec<f64> = Vec::with_capacity(m);
    for n in 1..=m {
        let mut v = -(n as f64) * a(n);
        for i in 1..n {
            v -= a(i) * s[n - i - 1];
        }
        s.push(v);
    }
    Ok(s)
}

fn closed(family: RayleighFamily, nu: f64, m: usize) -> Option<f64> {
    match (family, m) {
        (RayleighFamily::Eta, 1) => Some(3.0 / (4.0 * (nu + 1.0))),
        (RayleighFamily::Sigma, 1) => Some(1.0 / (4.0 * (nu + 1.0))),
        (RayleighFamily::Zeta, 1) => Some(1.0 / (16.0 * pochhammer(nu + 1.0, 3))),
        (RayleighFamily::Zeta, 2) => {
            Some((5.0 * nu + 17.0) / (256.0 * pochhammer(nu + 1.0, 3) * pochhammer(nu + 1.0, 5)))
        }
        _ => None,
    }
}

/// The m-th Rayleigh function of `family` at order nu.
pub fn rayleigh(family: RayleighFamily, nu: Order, m: usize, method: Method) -> Result<RayleighValue> {
    if m == 0 {
        return domain("m must be at least 1");
    }
    let v = nu.get();
    let (value, tail_err) = match method {
        Method::Closed => (
            closed(family, v, m)
                .ok_or_else(|| Error::NoClosedForm(format!("{family} of order {m}")))?,
            0.0,
        ),
        Method::Recursion => (recursion_values(family, nu, m)?[m - 1], 0.0),
        Method::Direct => {
            let t = ZeroFinder::global().table(family.zero_kind(), nu, DIRECT_ZEROS)?;
            t.power_sum((family.power() as usize * m) as f64)
        }
    };
    Ok(RayleighValue { family, nu: v, m, value, method, tail_err })
}

/// All Rayleigh values of orders 1..=m by recursion.
pub fn recursion_values(family: RayleighFamily, nu: Order, m: usize) -> Result<Vec<f64>> {
    if m > MAX_RECURSION {
        return domain(format!("recursion is served up to order {MAX_RECURSION}, asked for {m}"));
    }
    euler_rayleigh(&CoeffSeq::for_family(family, nu, m), m)
}

pub fn eta(nu: Order, m: usize, method: Method) -> Result<RayleighValue> {
    rayleigh(RayleighFamily::Eta, nu, m, method)
}

pub fn zeta(nu: Order, m: usize, method: Method) -> Result<RayleighValue> {
    rayleigh(RayleighFamily::Zeta, nu, m, method)
}

pub fn sigma(nu: Order, m: usize) -> Result<RayleighValue> {
    rayleigh(RayleighFamily::Sigma, nu, m, Method::Recursion)
}

/// Smallest zero whose power the bounds refer to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundTarget {
    Alpha1,
    Gamma1,
    J1,
}

impl BoundTarget {
    pub fn family(self) -> RayleighFamily {
        match self {
            BoundTarget::Alpha1 => RayleighFamily::Eta,
            BoundTarget::Gamma1 => RayleighFamily::Zeta,
            BoundTarget::J1 => RayleighFamily::Sigma,
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            BoundTarget::Alpha1 => "alpha1",
            BoundTarget::Gamma1 => "gamma1",
            BoundTarget::J1 => "j1",
        }
    }
}

impl FromStr for BoundTarget {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "alpha1" => Ok(BoundTarget::Alpha1),
            "gamma1" => Ok(BoundTarget::Gamma1),
            "j1" => Ok(BoundTarget::J1),
            _ => domain(format!("unknown bound target '{s}'")),
        }
    }
}

/// Euler-Rayleigh bounds R_m^{-1/m} < z^p < R_m / R_{m+1} on the p-th power
/// of the smallest zero.
pub fn smallest_zero_bounds(target: BoundTarget, nu: Order, m: usize) -> Result<(f64, f64)> {
    if m == 0 {
        return domain("m must be at least 1");
    }
    let r = recursion_values(target.family(), nu, m + 1)?;
    Ok((r[m - 1].powf(-1.0 / m as f64), r[m - 1] / r[m]))
}

/// A_k = alpha_1^2 eta_{2k+2} - eta_{2k}, k = 1..n.
pub fn sequence_a(nu: Order, n: usize) -> Result<Vec<f64>> {
    let z = ZeroFinder::global().table(ZeroKind::Dini, nu, 1)?.get(1);
    shifted_differences(RayleighFamily::Eta, nu, n, z * z)
}

/// B_k = gamma_1^4 zeta_{4k+4} - zeta_{4k}, k = 1..n.
pub fn sequence_b(nu: Order, n: usize) -> Result<Vec<f64>> {
    let z = ZeroFinder::global().table(ZeroKind::Cross, nu, 1)?.get(1);
    shifted_differences(RayleighFamily::Zeta, nu, n, z.powi(4))
}

fn shifted_differences(family: RayleighFamily, nu: Order, n: usize, zp: f64) -> Result<Vec<f64>> {
    if n == 0 {
        return domain("n must be at least 1");
    }
    let r = recursion_values(family, nu, n + 1)?;
    Ok((1..=n).map(|k| zp * r[k] - r[k - 1]).collect())
}
