//! Absolute monotonicity of logarithmic derivatives and quotients of the
//! normalized cross-product.

use super::monotone::{check_differences, stencils, MAX_DIFF_ORDER};
use super::util::{cfg, first, ln_norm, o, table};
use super::{next_order, GridSpec};
use crate::error::Result;
use crate::rayleigh::{recursion_values, RayleighFamily, DIRECT_ZEROS, MAX_RECURSION};
use crate::report::{ClaimId, Checker, VerificationReport};
use crate::special::{cross_w_in_t, log_derivative, pochhammer, FunctionId};
use crate::zeros::ZeroKind;

/// Rayleigh orders whose positivity is checked.
pub const POSITIVE_ORDERS: usize = 8;
/// Tolerance on h_nu(0) and on the truncated series of x calW'/calW.
pub const ORIGIN_TOL: f64 = 1e-10;

pub(super) fn verify(claim: ClaimId, g: &GridSpec) -> Result<VerificationReport> {
    let mut ch = Checker::new(claim);
    match claim {
        ClaimId::Thm5 => theorem5(&mut ch, g)?,
        ClaimId::Thm6 => theorem6(&mut ch, g)?,
        ClaimId::Cor61 => corollary(&mut ch, g)?,
        _ => unreachable!("not an absolute monotonicity claim"),
    }
    Ok(ch.finish())
}

fn theorem5(ch: &mut Checker, g: &GridSpec) -> Result<()> {
    ch.note("forward differences in x with step gamma_1/64 on (0, 0.9 gamma_1)");
    for &nu in &g.nu_values {
        let gamma = first(ZeroKind::Cross, nu)?;
        let g4 = gamma.powi(4);
        let zeta = recursion_values(RayleighFamily::Zeta, o(nu)?, MAX_RECURSION)?;
        for (m, z) in zeta.iter().take(POSITIVE_ORDERS).enumerate() {
            ch.strict(&[("nu", nu), ("m", (m + 1) as f64)], z * g4.powi(m as i32 + 1));
        }
        let x = 0.5 * gamma;
        let lhs = -log_derivative(FunctionId::CalW, o(nu)?, x, &cfg())?;
        let x4 = x.powi(4);
        let series: f64 = zeta.iter().rev().fold(0.0, |acc, z| (acc + z) * x4) * 4.0;
        let err = (lhs - series).abs() / lhs.abs();
        ch.check(&[("nu", nu), ("x", x), ("series", 1.0)], ORIGIN_TOL - err, err <= ORIGIN_TOL);

        let end = 0.9 * gamma;
        let (h, bases) = stencils(end, &g.fractions);
        for base in bases {
            let vals = (0..=MAX_DIFF_ORDER)
                .map(|i| Ok(-log_derivative(FunctionId::CalW, o(nu)?, base + i as f64 * h, &cfg())?))
                .collect::<Result<Vec<f64>>>()?;
            check_differences(ch, &[("nu", nu), ("x", base)], &vals);
        }
    }
    Ok(())
}

/// calW_t / calW at t = x^4.
fn log_rate(nu: f64, t: f64) -> Result<(f64, f64)> {
    let (w, wt) = cross_w_in_t(o(nu)?, t, &cfg())?;
    Ok((w, wt / w))
}

/// h_nu(0) computed from the first 2000 zeros: sum gamma^-4 - 1/(16 (nu+1)_3),
/// with the tail bound of the sum.
pub fn h_at_origin(nu: f64) -> Result<(f64, f64)> {
    let t = table(ZeroKind::Cross, nu, DIRECT_ZEROS)?;
    let (s, tail) = t.power_sum(4.0);
    Ok((s - 1.0 / (16.0 * pochhammer(nu + 1.0, 3)), tail))
}

fn theorem6(ch: &mut Checker, g: &GridSpec) -> Result<()> {
    ch.note(
        "mu is the next grid order above nu; positive constant factors of g and q are dropped; \
         fn 0..3 are f, g, h, q",
    );
    for &nu in &g.nu_values {
        let mu = next_order(nu);
        let p_nu = 1.0 / (16.0 * pochhammer(nu + 1.0, 3));
        let p_mu = 1.0 / (16.0 * pochhammer(mu + 1.0, 3));
        let c = p_mu - p_nu;

        let (h0, tail) = h_at_origin(nu)?;
        let err = h0.abs() - tail;
        ch.check(&[("nu", nu), ("origin", 1.0)], ORIGIN_TOL - err, err <= ORIGIN_TOL);
        let (_, l0) = log_rate(nu, 0.0)?;
        let h0_series = -p_nu - l0;
        ch.check(&[("nu", nu), ("origin", 2.0)], ORIGIN_TOL - h0_series.abs(), h0_series.abs() <= ORIGIN_TOL);

        let end = 0.9 * first(ZeroKind::Cross, nu)?.powi(4);
        let (h, bases) = stencils(end, &g.fractions);
        for base in std::iter::once(0.0).chain(bases) {
            let mut fv = Vec::new();
            let mut gv = Vec::new();
            let mut hv = Vec::new();
            let mut qv = Vec::new();
            for i in 0..=MAX_DIFF_ORDER {
                let t = base + i as f64 * h;
                let (wn, ln) = log_rate(nu, t)?;
                let (wm, lm) = log_rate(mu, t)?;
                fv.push(c + lm - ln);
                gv.push((c * t).exp() * wm / wn);
                hv.push(-p_nu - ln);
                qv.push((-p_nu * t).exp() / wn);
            }
            for (k, vals) in [fv, gv, hv, qv].iter().enumerate() {
                check_differences(ch, &[("nu", nu), ("mu", mu), ("t", base), ("fn", k as f64)], vals);
            }
        }
    }
    Ok(())
}

fn corollary(ch: &mut Checker, g: &GridSpec) -> Result<()> {
    ch.note("checked in normalized form: ln calW <= -x^4/(16 (nu+1)_3)");
    for &nu in &g.nu_values {
        let gamma = first(ZeroKind::Cross, nu)?;
        let p = 16.0 * pochhammer(nu + 1.0, 3);
        for &f in &g.fractions {
            let x = f * gamma;
            let bound = -x.powi(4) / p;
            let lw = ln_norm(FunctionId::CalW, nu, x)?;
            ch.non_strict(&[("nu", nu), ("x", x)], (bound - lw) / bound.abs());
        }
    }
    Ok(())
}
