//! Ascending power series shared by every function family.
//!
//! Each family is `K * x^s * sum_n c_n y^n` with `y = x^p`, `c_0 = 1` and
//! `c_{n+1} / c_n` given in closed form by [`Kernel::ratio`].

use super::{EvalResult, SeriesConfig};
use crate::error::{domain, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Kernel {
    J,
    I,
    D,
    Xi,
    W,
}

impl Kernel {
    pub(crate) fn power(self) -> u32 {
        match self {
            Kernel::W => 4,
            _ => 2,
        }
    }

    /// `c_{n+1} / c_n`.
    pub(crate) fn ratio(self, nu: f64, n: usize) -> f64 {
        let n = n as f64;
        let base = (n + 1.0) * (nu + n + 1.0);
        match self {
            Kernel::J => -0.25 / base,
            Kernel::I => 0.25 / base,
            Kernel::D => -(2.0 * n + 3.0) / (4.0 * (2.0 * n + 1.0) * base),
            Kernel::Xi => (2.0 * n + 3.0) / (4.0 * (2.0 * n + 1.0) * base),
            Kernel::W => -1.0 / (16.0 * base * (nu + 2.0 * n + 2.0) * (nu + 2.0 * n + 3.0)),
        }
    }

    pub(crate) fn coefficients(self, nu: f64, count: usize) -> Vec<f64> {
        let mut c = Vec::with_capacity(count);
        let mut t = 1.0;
        for n in 0..count {
            c.push(t);
            t *= self.ratio(nu, n);
        }
        c
    }
}

/// Neumaier's variant of compensated summation.
#[derive(Clone, Copy, Debug, Default)]
pub struct CompensatedSum {
    sum: f64,
    comp: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, v: f64) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.comp += (self.sum - t) + v;
        } else {
            self.comp += (v - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

impl FromIterator<f64> for CompensatedSum {
    fn from_iter<T: IntoIterator<Item = f64>>(iter: T) -> Self {
        let mut s = CompensatedSum::new();
        for v in iter {
            s.add(v);
        }
        s
    }
}

pub(crate) struct SeriesSum {
    pub sum: f64,
    pub terms: usize,
    pub max_abs: f64,
}

/// Sums `sum_{n >= start} w(n) c_n y^n`.
pub(crate) fn sum_in_y(
    kernel: Kernel,
    nu: f64,
    y: f64,
    start: usize,
    weight: impl Fn(usize) -> f64,
    cfg: &SeriesConfig,
) -> Result<SeriesSum> {
    let mut t = 1.0;
    for n in 0..start {
        t *= kernel.ratio(nu, n) * y;
    }
    let mut comp = CompensatedSum::new();
    let mut plain = 0.0;
    let mut max_abs = 0.0f64;
    let mut small = 0;
    for n in start..start + cfg.max_terms {
        let term = t * weight(n);
        comp.add(term);
        plain += term;
        max_abs = max_abs.max(term.abs());
        let sum = if cfg.compensated { comp.value() } else { plain };
        if !sum.is_finite() {
            return domain("series overflow");
        }
        if term.abs() <= cfg.rel_tol * sum.abs() {
            small += 1;
            if small >= 2 {
                return Ok(SeriesSum { sum, terms: n - start + 1, max_abs });
            }
        } else {
            small = 0;
        }
        t *= kernel.ratio(nu, n) * y;
    }
    Err(Error::Convergence(cfg.max_terms))
}

/// (a)(a-1)...(a-k+1)
pub(crate) fn falling(a: f64, k: u32) -> f64 {
    (0..k).fold(1.0, |p, i| p * (a - i as f64))
}

pub(crate) fn cancellation_digits(max_abs: f64, value: f64) -> f64 {
    if max_abs == 0.0 {
        0.0
    } else if value == 0.0 {
        f64::INFINITY
    } else {
        (max_abs / value.abs()).log10().max(0.0)
    }
}

/// k-th derivative in x of `exp(log_k) * x^s * sum c_n x^{pn}`.
pub(crate) fn eval_x(
    kernel: Kernel,
    nu: f64,
    s: f64,
    log_k: f64,
    x: f64,
    k: u32,
    cfg: &SeriesConfig,
) -> Result<EvalResult> {
    let p = kernel.power() as f64;
    if !x.is_finite() {
        return domain("x must be finite");
    }
    if x == 0.0 {
        return eval_at_origin(kernel, nu, s, log_k, k, cfg);
    }
    if x < 0.0 {
        if s.fract() != 0.0 {
            return domain(format!("x^{s} is not real for x < 0"));
        }
        let mut r = eval_x(kernel, nu, s, log_k, -x, k, cfg)?;
        if (s as i64 + k as i64) % 2 != 0 {
            r.value = -r.value;
        }
        return Ok(r);
    }
    let y = x.powf(p);
    let out = sum_in_y(kernel, nu, y, 0, |n| falling(s + p * n as f64, k), cfg)?;
    let pref = (log_k + (s - k as f64) * x.ln()).exp();
    Ok(EvalResult {
        value: out.sum * pref,
        terms_used: out.terms,
        cancellation_digits: cancellation_digits(out.max_abs, out.sum),
    })
}

fn eval_at_origin(
    kernel: Kernel,
    nu: f64,
    s: f64,
    log_k: f64,
    k: u32,
    cfg: &SeriesConfig,
) -> Result<EvalResult> {
    let p = kernel.power() as f64;
    let mut c = 1.0;
    for n in 0..cfg.max_terms {
        let e = s + p * n as f64 - k as f64;
        let w = falling(s + p * n as f64, k);
        if w != 0.0 {
            if e < 0.0 {
                return domain(format!("function is singular at x = 0 for nu = {nu}"));
            }
            if e == 0.0 {
                return Ok(EvalResult {
                    value: c * w * log_k.exp(),
                    terms_used: n + 1,
                    cancellation_digits: 0.0,
                });
            }
        }
        if e > 0.0 {
            break;
        }
        c *= kernel.ratio(nu, n);
    }
    Ok(EvalResult { value: 0.0, terms_used: 1, cancellation_digits: 0.0 })
}
