//! Redheffer-type bounds for the normalized Dini, modified Dini, Bessel and
//! cross-product functions.

use super::util::{ln_norm, ln_redheffer, table};
use super::GridSpec;
use crate::error::Result;
use crate::report::{ClaimId, Checker, VerificationReport};
use crate::special::{pochhammer, FunctionId};
use crate::zeros::ZeroKind;

/// Largest n at which the hypotheses on Psi and Omega are scanned.
pub const HYPOTHESIS_SCAN: usize = 50;
/// Upper end of the order window for the Dini upper bound.
pub const THM7B_UPPER: f64 = 8.0;
/// Largest accepted gap between a log ratio near the origin and its exponent.
pub const SHARPNESS_TOL: f64 = 1e-3;
/// Largest accepted gap between the extrapolated limit of Q and 3 r^2/(8(nu+1)).
pub const BETA_TOL: f64 = 1e-6;
/// Radii used for the modified Dini bound besides alpha_1.
pub const THM8_RADII: [f64; 2] = [1.0, 3.0];

/// The positive root of nu - nu^2 + 14 = 0.
pub fn thm7d_upper_order() -> f64 {
    (1.0 + 57f64.sqrt()) / 2.0
}

pub(super) fn verify(claim: ClaimId, g: &GridSpec) -> Result<VerificationReport> {
    let mut ch = Checker::new(claim);
    ch.note("every function involved is even, so only x > 0 is sampled");
    match claim {
        ClaimId::Thm7a => dini_lower(&mut ch, g)?,
        ClaimId::Thm7b => dini_upper(&mut ch, g)?,
        ClaimId::Thm7c => cross_lower(&mut ch, g)?,
        ClaimId::Thm7d => cross_upper(&mut ch, g)?,
        ClaimId::Thm8 => modified_dini(&mut ch, g)?,
        ClaimId::Redheffer56 => bessel_bounds(&mut ch, g, false)?,
        ClaimId::Thm9 => bessel_bounds(&mut ch, g, true)?,
        _ => unreachable!("not a Redheffer-type claim"),
    }
    Ok(ch.finish())
}

/// Non-strict lhs <= rhs on logarithms, relative to the size of rhs.
fn log_le(ch: &mut Checker, params: &[(&str, f64)], lhs: f64, rhs: f64) {
    ch.non_strict(params, (rhs - lhs) / rhs.abs().max(lhs.abs()).max(f64::MIN_POSITIVE));
}

fn sharpness(ch: &mut Checker, params: &[(&str, f64)], ratio: f64, want: f64) {
    let err = (ratio - want).abs();
    ch.check(params, SHARPNESS_TOL - err, err <= SHARPNESS_TOL);
}

/// min over n <= count of the scanned quantity, or None if one is negative.
fn scan(values: impl Iterator<Item = f64>) -> Option<f64> {
    let mut lo = f64::INFINITY;
    for v in values {
        if v < 0.0 {
            return None;
        }
        lo = lo.min(v);
    }
    Some(lo)
}

fn dini_lower(ch: &mut Checker, g: &GridSpec) -> Result<()> {
    ch.note(format!("Psi(n) >= 0 verified up to n = {}; larger n is assumed", g.count));
    for &nu in &g.nu_values {
        let t = table(ZeroKind::Dini, nu, g.count + 1)?;
        let a1 = t.get(1);
        let psi = (1..=g.count).map(|n| {
            let (an, an1) = (t.get(n), t.get(n + 1));
            an1 * an1 - a1 * an - an * an1
        });
        let Some(psi_min) = scan(psi) else {
            ch.note(format!("Psi(n) < 0 for some n at nu = {nu}; hypothesis fails, order skipped"));
            continue;
        };
        let delta = a1.min(psi_min.sqrt());
        for &f in &g.fractions {
            let x = f * delta;
            let lower = ln_redheffer(a1 * a1, x * x);
            let ld = ln_norm(FunctionId::CalD, nu, x)?;
            log_le(ch, &[("nu", nu), ("x", x)], lower, ld);
        }
    }
    Ok(())
}

fn dini_upper(ch: &mut Checker, g: &GridSpec) -> Result<()> {
    for &nu in &g.nu_values {
        let a = table(ZeroKind::Dini, nu, 1)?.get(1);
        let m = 3.0 * a * a / (8.0 * (nu + 1.0));
        for &f in &g.fractions {
            let x = f * a;
            let ld = ln_norm(FunctionId::CalD, nu, x)?;
            log_le(ch, &[("nu", nu), ("x", x)], ld, m * ln_redheffer(a * a, x * x));
        }
        let x = a / 100.0;
        let ratio = ln_norm(FunctionId::CalD, nu, x)? / ln_redheffer(a * a, x * x);
        sharpness(ch, &[("nu", nu), ("x", x), ("sharp", 1.0)], ratio, m);
    }
    Ok(())
}

fn cross_lower(ch: &mut Checker, g: &GridSpec) -> Result<()> {
    ch.note(format!(
        "Omega(n) >= 0 verified up to n = {}; larger n is assumed; \
         the radius is min(gamma_1, sqrt(Omega), Omega^(1/4))",
        g.count
    ));
    for &nu in &g.nu_values {
        let t = table(ZeroKind::Cross, nu, g.count + 1)?;
        let g1 = t.get(1);
        let omega = (1..=g.count).map(|n| {
            let (gn, gn1) = (t.get(n).powi(2), t.get(n + 1).powi(2));
            gn1 * gn1 - g1 * g1 * gn - gn * gn1
        });
        let Some(om) = scan(omega) else {
            ch.note(format!("Omega(n) < 0 for some n at nu = {nu}; hypothesis fails, order skipped"));
            continue;
        };
        let eps = g1.min(om.sqrt()).min(om.sqrt().sqrt());
        for &f in &g.fractions {
            let x = f * eps;
            let lower = ln_redheffer(g1.powi(4), x.powi(4));
            let lw = ln_norm(FunctionId::CalW, nu, x)?;
            log_le(ch, &[("nu", nu), ("x", x)], lower, lw);
        }
    }
    Ok(())
}

fn cross_upper(ch: &mut Checker, g: &GridSpec) -> Result<()> {
    for &nu in &g.nu_values {
        let g4 = table(ZeroKind::Cross, nu, 1)?.get(1).powi(4);
        let n = g4 / (32.0 * pochhammer(nu + 1.0, 3));
        let gamma = g4.sqrt().sqrt();
        for &f in &g.fractions {
            let x = f * gamma;
            let lw = ln_norm(FunctionId::CalW, nu, x)?;
            log_le(ch, &[("nu", nu), ("x", x)], lw, n * ln_redheffer(g4, x.powi(4)));
        }
        let x = gamma / 100.0;
        let ratio = ln_norm(FunctionId::CalW, nu, x)? / ln_redheffer(g4, x.powi(4));
        sharpness(ch, &[("nu", nu), ("x", x), ("sharp", 1.0)], ratio, n);
    }
    Ok(())
}

/// ln lambda(x) / ln((r^2 + x^2)/(r^2 - x^2)).
pub fn q_ratio(nu: f64, r: f64, x: f64) -> Result<f64> {
    Ok(ln_norm(FunctionId::Lambda, nu, x)? / -ln_redheffer(r * r, x * x))
}

/// lim_{x -> 0} Q by Richardson extrapolation from x = r/1000 and 2r/1000.
pub fn q_limit(nu: f64, r: f64) -> Result<f64> {
    let h = r * 1e-3;
    Ok((4.0 * q_ratio(nu, r, h)? - q_ratio(nu, r, 2.0 * h)?) / 3.0)
}

fn modified_dini(ch: &mut Checker, g: &GridSpec) -> Result<()> {
    ch.note(
        "the upper exponent is the limit of Q at the origin, which equals 3 r^2/(8(nu+1)); \
         the stated 3 alpha_1^2/(8(nu+1)) agrees only for r = alpha_1",
    );
    let mut fr = g.fractions.clone();
    fr.sort_by(f64::total_cmp);
    for &nu in &g.nu_values {
        let a = table(ZeroKind::Dini, nu, 1)?.get(1);
        for r in std::iter::once(a).chain(THM8_RADII) {
            let beta = q_limit(nu, r)?;
            let want = 3.0 * r * r / (8.0 * (nu + 1.0));
            let err = (beta - want).abs() / want.max(1.0);
            ch.check(&[("nu", nu), ("r", r), ("limit", 1.0)], BETA_TOL - err, err <= BETA_TOL);
            let mut prev: Option<f64> = None;
            for &f in &fr {
                let x = f * r;
                let params = [("nu", nu), ("r", r), ("x", x)];
                let ll = ln_norm(FunctionId::Lambda, nu, x)?;
                let lr = -ln_redheffer(r * r, x * x);
                ch.strict(&params, ll / (ll + lr));
                log_le(ch, &params, ll, beta * lr);
                let q = ll / lr;
                if let Some(p) = prev {
                    ch.non_strict(&params, (p - q) / beta);
                }
                prev = Some(q);
            }
            let x = 0.01 * r;
            let q = q_ratio(nu, r, x)?;
            ch.strict(&[("nu", nu), ("r", r), ("x", x), ("sharp", 1.0)], (q - 0.99 * beta) / beta);
        }
    }
    Ok(())
}

fn bessel_bounds(ch: &mut Checker, g: &GridSpec, above_nu0: bool) -> Result<()> {
    for &nu in &g.nu_values {
        let j = table(ZeroKind::BesselJ, nu, 1)?.get(1);
        let j2 = j * j;
        let (beta, gamma) = if above_nu0 {
            (1.0, 1.0 / (nu + 2.0))
        } else {
            (j2 / (8.0 * (nu + 1.0)), j2 / (8.0 * (nu + 1.0) * (nu + 2.0)))
        };
        for &f in &g.fractions {
            let x = f * j;
            let lr = ln_redheffer(j2, x * x);
            let lj = ln_norm(FunctionId::CalJ, nu, x)?;
            let lj1 = ln_norm(FunctionId::CalJ, nu + 1.0, x)?;
            log_le(ch, &[("nu", nu), ("x", x), ("ine", 1.0)], lj, beta * lr);
            log_le(ch, &[("nu", nu), ("x", x), ("ine", 2.0)], -gamma * lr, lj1 - lj);
        }
    }
    Ok(())
}
