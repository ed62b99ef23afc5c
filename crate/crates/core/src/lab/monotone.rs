//! Sign pattern, monotonicity, log-concavity and absolute monotonicity of
//! the normalized cross-product.

use super::util::{cfg, cross_parts, first, forward_differences, o, table};
use super::{next_order, GridSpec};
use crate::error::Result;
use crate::report::{ClaimId, Checker, VerificationReport};
use crate::special::{cross_w_in_t, log_derivative, normalized_minus_one, FunctionId};
use crate::zeros::ZeroKind;

/// Tolerance on forward differences that should be nonnegative.
pub(crate) const DIFF_SLACK: f64 = 1e-9;
/// Highest forward-difference order checked.
pub(crate) const MAX_DIFF_ORDER: usize = 6;

pub(super) fn verify(claim: ClaimId, g: &GridSpec) -> Result<VerificationReport> {
    let mut ch = Checker::new(claim);
    match claim {
        ClaimId::Thm1a => sign_pattern(&mut ch, g)?,
        ClaimId::Thm1b => decreasing(&mut ch, g)?,
        ClaimId::Thm1c | ClaimId::Thm1d => concavity(&mut ch, g, claim == ClaimId::Thm1d)?,
        ClaimId::Thm1e => order_monotone(&mut ch, g)?,
        ClaimId::Thm1f => t_absolute(&mut ch, g)?,
        _ => unreachable!("not a monotonicity claim"),
    }
    Ok(ch.finish())
}

/// Points f (gamma_{k} + ...) across (gamma_k, gamma_{k+1}), gamma_0 = 0.
fn interval_points(zeros: &[f64], k: usize, fractions: &[f64]) -> Vec<f64> {
    let lo = if k == 0 { 0.0 } else { zeros[k - 1] };
    let hi = zeros[k];
    fractions.iter().map(|f| lo + f * (hi - lo)).collect()
}

fn sign_pattern(ch: &mut Checker, g: &GridSpec) -> Result<()> {
    ch.note("calW is even, so samples on x > 0 cover S_1 and its mirror");
    for &nu in &g.nu_values {
        let t = table(ZeroKind::Cross, nu, g.count + 1)?;
        for k in 0..=g.count {
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            for x in interval_points(&t.zeros, k, &g.fractions) {
                let c = cross_parts(nu, x);
                ch.strict(&[("nu", nu), ("k", k as f64), ("x", x)], sign * c.w / c.scale);
            }
        }
    }
    Ok(())
}

fn decreasing(ch: &mut Checker, g: &GridSpec) -> Result<()> {
    for &nu in &g.nu_values {
        let gamma = first(ZeroKind::Cross, nu)?;
        for &f in &g.fractions {
            let x = f * gamma;
            let ld = log_derivative(FunctionId::CalW, o(nu)?, x, &cfg())?;
            ch.strict(&[("nu", nu), ("x", x)], -ld);
        }
    }
    Ok(())
}

fn concavity(ch: &mut Checker, g: &GridSpec, plain: bool) -> Result<()> {
    ch.note("second derivatives taken analytically from the Bessel pair");
    for &nu in &g.nu_values {
        let t = table(ZeroKind::Cross, nu, 2 * g.count + 1)?;
        let s = 2.0 * nu + 1.0;
        for k in (0..=2 * g.count).step_by(2) {
            for x in interval_points(&t.zeros, k, &g.fractions) {
                let c = cross_parts(nu, x);
                let pw = c.p / c.w;
                let qw = c.q / c.w;
                // (ln W)'' = q/w - (p/w)^2
                let lw2 = qw - pw * pw;
                let lw2_scale = qw.abs() + pw * pw;
                let params = [("nu", nu), ("k", k as f64), ("x", x)];
                if plain {
                    ch.strict(&params, -lw2 / lw2_scale);
                    continue;
                }
                let lc2 = s / (x * x) + lw2;
                let lc2_scale = s.abs() / (x * x) + lw2_scale;
                ch.strict(&params, -lc2 / lc2_scale);
                // (x calW'/calW)' = calW'/calW + x (ln calW)''
                let geo = -s / x + pw + x * lc2;
                let geo_scale = s.abs() / x + pw.abs() + x * lc2_scale;
                ch.strict(&params, -geo / geo_scale);
            }
        }
    }
    Ok(())
}

fn order_monotone(ch: &mut Checker, g: &GridSpec) -> Result<()> {
    ch.note("monotonicity in nu checked between adjacent grid orders on the smaller order's (0, gamma_1)");
    let mut nus = g.nu_values.clone();
    nus.sort_by(f64::total_cmp);
    nus.dedup();
    if nus.len() == 1 {
        nus.push(next_order(nus[0]));
    }
    for pair in nus.windows(2) {
        let (n1, n2) = (pair[0], pair[1]);
        let gamma = first(ZeroKind::Cross, n1)?;
        for &f in &g.fractions {
            let x = f * gamma;
            let params = [("nu1", n1), ("nu2", n2), ("x", x)];
            let m1 = normalized_minus_one(FunctionId::CalW, o(n1)?, x, &cfg())?;
            let m2 = normalized_minus_one(FunctionId::CalW, o(n2)?, x, &cfg())?;
            ch.non_strict(&params, (m2 - m1) / m1.abs().max(f64::MIN_POSITIVE));
            let l1 = log_derivative(FunctionId::CalW, o(n1)?, x, &cfg())?;
            let l2 = log_derivative(FunctionId::CalW, o(n2)?, x, &cfg())?;
            ch.non_strict(&params, (l2 - l1) / l1.abs().max(f64::MIN_POSITIVE));
        }
    }
    Ok(())
}

/// Checks forward differences of orders 0..=6 of `vals` (order 0 is the value).
pub(crate) fn check_differences(ch: &mut Checker, params: &[(&str, f64)], vals: &[f64]) {
    let mut p: Vec<(&str, f64)> = params.to_vec();
    p.push(("order", 0.0));
    let last = p.len() - 1;
    ch.check(&p, vals[0] / vals[0].abs().max(1.0), vals[0] >= -DIFF_SLACK);
    for (k, (d, scale)) in forward_differences(vals, MAX_DIFF_ORDER).into_iter().enumerate() {
        p[last].1 = (k + 1) as f64;
        let margin = d / scale.max(1.0);
        ch.check(&p, margin, margin >= -DIFF_SLACK);
    }
}

/// Samples base + i h for i = 0..=6 at each fraction of the room left below
/// `end` for a seven-point stencil.
pub(crate) fn stencils(end: f64, fractions: &[f64]) -> (f64, Vec<f64>) {
    let h = end / 0.9 / 64.0;
    let room = end - MAX_DIFF_ORDER as f64 * h;
    (h, fractions.iter().map(|f| f * room).collect())
}

fn t_absolute(ch: &mut Checker, g: &GridSpec) -> Result<()> {
    ch.note("forward differences in t = x^4 with step gamma_1^4/64 on (0, 0.9 gamma_1^4)");
    for &nu in &g.nu_values {
        let end = 0.9 * first(ZeroKind::Cross, nu)?.powi(4);
        let (h, bases) = stencils(end, &g.fractions);
        for base in bases {
            let mut phi = Vec::with_capacity(MAX_DIFF_ORDER + 1);
            let mut psi = Vec::with_capacity(MAX_DIFF_ORDER + 1);
            for i in 0..=MAX_DIFF_ORDER {
                let (w, wt) = cross_w_in_t(o(nu)?, base + i as f64 * h, &cfg())?;
                phi.push(-wt / w);
                psi.push(1.0 / w);
            }
            check_differences(ch, &[("nu", nu), ("t", base), ("fn", 0.0)], &phi);
            check_differences(ch, &[("nu", nu), ("t", base), ("fn", 1.0)], &psi);
        }
    }
    Ok(())
}
