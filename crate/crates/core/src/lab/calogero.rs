//! Calogero-type identities for the zeros, the Dini differential equation,
//! the limit of d''/d' at a zero, and the product form of W'.

use super::util::{cfg, o, table};
use super::GridSpec;
use crate::error::{domain, Error, Result};
use crate::report::{ClaimId, Checker, VerificationReport};
use crate::special::{cross_w_prime_normalized, derivative, evaluate, CompensatedSum, FunctionId};
use crate::zeros::{tail_bound, target, ZeroKind, ZeroTable};

/// Zeros used for every truncated sum and product here.
pub const CALOGERO_ZEROS: usize = 2000;
/// The ODE check samples x = f * ODE_SPAN.
pub const ODE_SPAN: f64 = 10.0;
/// Largest accepted ODE residual relative to the size of its terms.
pub const ODE_TOL: f64 = 1e-8;
/// Largest accepted error in the limit of d''/d' at a zero.
pub const LIMIT_TOL: f64 = 1e-6;
/// Relative distance from x^2 = 2nu - 1 inside which the ODE is not sampled.
pub const RING_MARGIN: f64 = 1e-3;

pub(super) fn verify(claim: ClaimId, g: &GridSpec) -> Result<VerificationReport> {
    let mut ch = Checker::new(claim);
    match claim {
        ClaimId::Thm4Id1 | ClaimId::Thm4Id2 | ClaimId::Thm4Id3 => {
            ch.note(format!("sums truncated at {CALOGERO_ZEROS} zeros with bounded tails"));
            for &nu in &g.nu_values {
                for k in 1..=g.count {
                    let (lhs, rhs, bound) = match claim {
                        ClaimId::Thm4Id1 => identity1(nu, k)?,
                        ClaimId::Thm4Id2 => identity2(nu, k)?,
                        _ => identity3(nu, k)?,
                    };
                    let diff = (lhs - rhs).abs();
                    let scale = lhs.abs().max(rhs.abs()).max(f64::MIN_POSITIVE);
                    ch.check(&[("nu", nu), ("k", k as f64)], (bound - diff) / scale, diff <= bound);
                }
            }
        }
        ClaimId::DiniOde => ode(&mut ch, g)?,
        ClaimId::LimitEq => limit(&mut ch, g)?,
        ClaimId::WprimeProduct => wprime_product(&mut ch, g)?,
        _ => unreachable!("not an identity claim"),
    }
    Ok(ch.finish())
}

/// Largest relative error bound over a table.
fn rel_error(t: &ZeroTable) -> f64 {
    (0..t.len()).map(|i| t.error_bound(i) / t.zeros[i]).fold(0.0, f64::max)
}

/// sum_{n != k} 1/(z_n^p - z_k^p) with (sum, tail bound, sum of |terms|).
fn excluded_sum(t: &ZeroTable, k: usize, p: i32) -> (f64, f64, f64) {
    let zk = t.get(k).powi(p);
    let mut s = CompensatedSum::new();
    let mut abs = 0.0;
    for (i, z) in t.zeros.iter().enumerate() {
        if i + 1 != k {
            let v = 1.0 / (z.powi(p) - zk);
            s.add(v);
            abs += v.abs();
        }
    }
    let last = t.last();
    let tail = tail_bound(last, p as f64) / (1.0 - zk / last.powi(p));
    (s.value(), tail, abs)
}

fn ring_fraction(alpha2: f64, nu: f64) -> Result<f64> {
    let den = alpha2 - 2.0 * nu + 1.0;
    if den.abs() <= RING_MARGIN * alpha2 {
        return Err(Error::Singularity { x: alpha2.sqrt() });
    }
    Ok((alpha2 + 2.0 * nu - 1.0) / den)
}

/// Sum over n != k of 1/(alpha_n^2 - alpha_k^2) against its closed form.
/// Returns (truncated lhs, rhs, allowed difference).
pub fn identity1(nu: f64, k: usize) -> Result<(f64, f64, f64)> {
    let t = table(ZeroKind::Dini, nu, CALOGERO_ZEROS)?;
    let a2 = t.get(k).powi(2);
    let (lhs, tail, abs) = excluded_sum(&t, k, 2);
    let rhs = (2.0 * nu + 1.0 - ring_fraction(a2, nu)?) / (4.0 * a2);
    // each term moves by 2 |t_n| times the relative error of the zeros involved
    let prop = 4.0 * rel_error(&t) * (abs * a2.max(1.0) + rhs.abs());
    Ok((lhs, rhs, tail + prop + 64.0 * f64::EPSILON * (abs + rhs.abs())))
}

/// Sum over n != k of 1/(alpha_n^4 - alpha_k^4) against its closed form.
pub fn identity2(nu: f64, k: usize) -> Result<(f64, f64, f64)> {
    let t = table(ZeroKind::Dini, nu, CALOGERO_ZEROS)?;
    let a2 = t.get(k).powi(2);
    let (lhs, tail, abs) = excluded_sum(&t, k, 4);
    // sum 1/(alpha_n^2 + alpha_k^2) = eta_2 - alpha_k^2 sum alpha_n^-2 / (alpha_n^2 + alpha_k^2)
    let mut rest = CompensatedSum::new();
    for z in &t.zeros {
        let z2 = z * z;
        rest.add(1.0 / (z2 * (z2 + a2)));
    }
    let eta2 = 3.0 / (4.0 * (nu + 1.0));
    let inner = eta2 - a2 * rest.value();
    let front = (2.0 * nu + 3.0 - ring_fraction(a2, nu)?) / (8.0 * a2 * a2);
    let rhs = front - inner / (2.0 * a2);
    let inner_tail = 0.5 * tail_bound(t.last(), 4.0);
    let size = abs + front.abs() + inner.abs() / a2;
    let prop = 8.0 * rel_error(&t) * size * a2.max(1.0);
    Ok((lhs, rhs, tail + inner_tail + prop + 64.0 * f64::EPSILON * size))
}

/// Sum over n != k of 1/(gamma_n^4 - gamma_k^4) against the sum over the
/// zeros of W'.
pub fn identity3(nu: f64, k: usize) -> Result<(f64, f64, f64)> {
    if nu <= -0.5 {
        return domain("the W' identity needs nu > -1/2");
    }
    let t = table(ZeroKind::Cross, nu, CALOGERO_ZEROS)?;
    let tp = table(ZeroKind::CrossPrime, nu, CALOGERO_ZEROS)?;
    let g4 = t.get(k).powi(4);
    let (lhs, tail, abs) = excluded_sum(&t, k, 4);
    let mut inner = CompensatedSum::new();
    let mut inner_abs = 0.0;
    for z in &tp.zeros {
        let v = 4.0 * g4 / (z.powi(4) - g4);
        inner.add(v);
        inner_abs += v.abs();
    }
    let rhs = (2.0 * nu + 5.0 + inner.value()) / (8.0 * g4);
    let last = tp.last();
    let inner_tail = 0.5 * tail_bound(last, 4.0) / (1.0 - g4 / last.powi(4));
    let size = abs + (2.0 * nu + 5.0 + inner_abs) / (8.0 * g4);
    let prop = 8.0 * rel_error(&t).max(rel_error(&tp)) * size * g4.max(1.0);
    Ok((lhs, rhs, tail + inner_tail + prop + 64.0 * f64::EPSILON * size))
}

/// Residual of x^2(x^2-2nu+1)d'' - x(x^2+2nu-1)d' + [(x^2-nu^2)(x^2-2nu+1) + 2(1-nu)x^2]d
/// at x > 0, with the sum of the magnitudes of its three terms.
pub fn dini_ode_residual(nu: f64, x: f64) -> Result<(f64, f64)> {
    if !(x > 0.0) {
        return domain(format!("the ODE is sampled at x > 0, got {x}"));
    }
    let ring = 2.0 * nu - 1.0;
    if (x * x - ring).abs() <= RING_MARGIN * ring.abs() {
        return Err(Error::Singularity { x });
    }
    let order = o(nu)?;
    let d0 = evaluate(FunctionId::D, order, x, &cfg())?.value;
    let d1 = derivative(FunctionId::D, order, x, 1, &cfg())?.value;
    let d2 = derivative(FunctionId::D, order, x, 2, &cfg())?.value;
    let x2 = x * x;
    let a = x2 * (x2 - ring) * d2;
    let b = -x * (x2 + ring) * d1;
    let c = ((x2 - nu * nu) * (x2 - ring) + 2.0 * (1.0 - nu) * x2) * d0;
    Ok((a + b + c, a.abs() + b.abs() + c.abs()))
}

fn ode(ch: &mut Checker, g: &GridSpec) -> Result<()> {
    ch.note("the bracketed d term enters with a plus sign, the form the Dini function satisfies");
    for &nu in &g.nu_values {
        for &f in &g.fractions {
            let x = f * ODE_SPAN;
            match dini_ode_residual(nu, x) {
                Ok((r, scale)) => {
                    let rel = r.abs() / scale.max(f64::MIN_POSITIVE);
                    ch.check(&[("nu", nu), ("x", x)], ODE_TOL - rel, rel <= ODE_TOL);
                }
                Err(Error::Singularity { .. }) => {
                    ch.note("points on the singular ring x^2 = 2nu - 1 are skipped");
                }
                Err(e) => return Err(e),
            }
        }
    }
    Ok(())
}

/// (d''/d' at alpha_k, the closed form) for k = 1..=count.
pub fn limit_values(nu: f64, count: usize) -> Result<Vec<(f64, f64)>> {
    let t = table(ZeroKind::Dini, nu, count)?;
    t.zeros
        .iter()
        .map(|&a| {
            let (d1, d2) = target(ZeroKind::DiniPrime, nu, a);
            let a2 = a * a;
            Ok((d2 / d1, ring_fraction(a2, nu)? / a))
        })
        .collect()
}

fn limit(ch: &mut Checker, g: &GridSpec) -> Result<()> {
    for &nu in &g.nu_values {
        for (k, (got, want)) in limit_values(nu, g.count)?.into_iter().enumerate() {
            let err = (got - want).abs() / want.abs().max(1.0);
            ch.check(&[("nu", nu), ("k", (k + 1) as f64)], LIMIT_TOL - err, err <= LIMIT_TOL);
        }
    }
    Ok(())
}

/// Truncated product over the zeros of W' at z, with a bound on its distance
/// from the full product.
pub fn wprime_product_at(nu: f64, z: f64) -> Result<(f64, f64)> {
    if nu <= -0.5 {
        return domain("the W' product needs nu > -1/2");
    }
    let t = table(ZeroKind::CrossPrime, nu, CALOGERO_ZEROS)?;
    let z4 = z.powi(4);
    let rel = rel_error(&t);
    let mut prod = 1.0;
    let mut prop = 0.0;
    for g in &t.zeros {
        let r = z4 / g.powi(4);
        prod *= 1.0 - r;
        prop += 4.0 * rel * r / (1.0 - r).abs().max(f64::MIN_POSITIVE);
    }
    let last = t.last();
    let tau = z4 * tail_bound(last, 4.0) / (1.0 - z4 / last.powi(4));
    let n = t.len() as f64;
    Ok((prod, prod.abs() * (tau.exp_m1() + prop + 4.0 * n * f64::EPSILON)))
}

fn wprime_product(ch: &mut Checker, g: &GridSpec) -> Result<()> {
    ch.note("x = f * gamma'_2 so each sample range crosses the first zero of W'");
    for &nu in &g.nu_values {
        let reach = table(ZeroKind::CrossPrime, nu, 2)?.get(2);
        for &f in &g.fractions {
            let z = f * reach;
            let series = cross_w_prime_normalized(o(nu)?, z, &cfg())?;
            let (prod, bound) = wprime_product_at(nu, z)?;
            let allowed = bound + 1e-10;
            let diff = (series - prod).abs();
            ch.check(&[("nu", nu), ("x", z)], (allowed - diff) / series.abs().max(1.0), diff <= allowed);
        }
    }
    Ok(())
}
