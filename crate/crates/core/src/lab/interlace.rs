//! Interlacing of zeros and the bounds it implies.

use super::util::{first, ln_norm, ln_redheffer, o, table};
use super::GridSpec;
use crate::error::Result;
use crate::report::{ClaimId, Checker, VerificationReport};
use crate::special::FunctionId;
use crate::zeros::{chain_into, first_j_zero, nu0_cached, target, ZeroKind, DEFAULT_TOL};

/// Samples per bracket when counting sign changes.
pub(crate) const SIGN_SAMPLES: usize = 256;

pub(super) fn verify(claim: ClaimId, g: &GridSpec) -> Result<VerificationReport> {
    let mut ch = Checker::new(claim);
    match claim {
        ClaimId::Thm2 => {
            for &nu in &g.nu_values {
                chain_into(&mut ch, o(nu)?, g.count)?;
            }
        }
        ClaimId::Cor21 => sandwiches(&mut ch, g)?,
        ClaimId::Thm3 => derivative_interlacing(&mut ch, g)?,
        ClaimId::Lemma2 => lemma2(&mut ch, g)?,
        _ => unreachable!("not an interlacing claim"),
    }
    Ok(ch.finish())
}

fn sandwiches(ch: &mut Checker, g: &GridSpec) -> Result<()> {
    ch.note(
        "ine 4 marks the comparison of the first two sandwiches; \
         every member is even in x, so on (-j_1, 0) the same-direction sandwich is checked; \
         the stated reversal of the last one cannot hold for even functions",
    );
    for &nu in &g.nu_values {
        let alpha = first(ZeroKind::Dini, nu)?;
        let j = first(ZeroKind::BesselJ, nu)?;
        for &f in &g.fractions {
            for sign in [1.0, -1.0] {
                // ln D + ln lambda - ln calW < 0 < ln(a^4/(a^4-x^4)) + that
                let x = sign * f * alpha;
                let params = [("nu", nu), ("x", x), ("ine", 1.0)];
                let (ld, ll, lw) = (
                    ln_norm(FunctionId::CalD, nu, x)?,
                    ln_norm(FunctionId::Lambda, nu, x)?,
                    ln_norm(FunctionId::CalW, nu, x)?,
                );
                let x4 = x.powi(4);
                let lift1 = -(-x4 / alpha.powi(4)).ln_1p();
                let scale = ld.abs() + ll.abs() + lw.abs() + lift1;
                let gap1 = lw - ld - ll;
                ch.strict(&params, gap1 / scale);
                ch.strict(&params, (lift1 - gap1) / scale);

                let (lj, li) = (ln_norm(FunctionId::CalJ, nu, x)?, ln_norm(FunctionId::CalI, nu, x)?);
                let lift2 = -(-x4 / j.powi(4)).ln_1p();
                // the remark: J I >= D lambda and the first upper bound is the sharper one
                let cmp = [("nu", nu), ("x", x), ("ine", 4.0)];
                ch.non_strict(&cmp, (lj + li - ld - ll) / scale);
                ch.non_strict(&cmp, (lift2 + lj + li - lift1 - ld - ll) / scale);

                let x = sign * f * j;
                let x4 = x.powi(4);
                let (lj, li, lw) = (
                    ln_norm(FunctionId::CalJ, nu, x)?,
                    ln_norm(FunctionId::CalI, nu, x)?,
                    ln_norm(FunctionId::CalW, nu, x)?,
                );
                let lift2 = -(-x4 / j.powi(4)).ln_1p();
                let scale = lj.abs() + li.abs() + lw.abs() + lift2;
                let gap2 = lw - lj - li;
                ch.strict(&[("nu", nu), ("x", x), ("ine", 2.0)], gap2 / scale);
                ch.strict(&[("nu", nu), ("x", x), ("ine", 2.0)], (lift2 - gap2) / scale);

                let ratio = li - lj;
                let lower = x * x / (2.0 * (nu + 1.0));
                let upper = -j * j / (4.0 * (nu + 1.0)) * ln_redheffer(j * j, x * x);
                let scale = ratio.abs() + lower + upper;
                ch.strict(&[("nu", nu), ("x", x), ("ine", 3.0)], (ratio - lower) / scale);
                ch.strict(&[("nu", nu), ("x", x), ("ine", 3.0)], (upper - ratio) / scale);
            }
        }
    }
    Ok(())
}

/// Sign changes of `f` on the open interval (a, b).
fn sign_changes(f: impl Fn(f64) -> f64, a: f64, b: f64) -> usize {
    let mut prev = 0.0;
    let mut changes = 0;
    for i in 0..SIGN_SAMPLES {
        let v = f(a + (b - a) * (i as f64 + 0.5) / SIGN_SAMPLES as f64);
        if v != 0.0 {
            if prev != 0.0 && v.signum() != prev {
                changes += 1;
            }
            prev = v.signum();
        }
    }
    changes
}

fn count_check(ch: &mut Checker, params: &[(&str, f64)], got: usize, want: usize) {
    ch.check(params, if got == want { 1.0 } else { -1.0 }, got == want);
}

fn derivative_interlacing(ch: &mut Checker, g: &GridSpec) -> Result<()> {
    ch.note("zeros counted by sign changes on 256 interior samples per bracket");
    for &nu in &g.nu_values {
        let n = g.count;
        let alpha = table(ZeroKind::Dini, nu, n + 1)?;
        let gamma = table(ZeroKind::Cross, nu, n + 1)?;
        // zeros of calD' are those of x d' - nu d
        let h = |x: f64| target(ZeroKind::CalDPrime, nu, x).0;
        // zeros of calW' are those of x W' - (2nu + 1) W
        let w = |x: f64| {
            let (w, p) = target(ZeroKind::Cross, nu, x);
            x * p - (2.0 * nu + 1.0) * w
        };
        let dp = |x: f64| target(ZeroKind::DiniPrime, nu, x).0;
        count_check(ch, &[("nu", nu), ("part", 1.0), ("k", 0.0)], sign_changes(h, 0.0, alpha.get(1)), 0);
        count_check(ch, &[("nu", nu), ("part", 2.0), ("k", 0.0)], sign_changes(w, 0.0, gamma.get(1)), 0);
        for k in 1..=n {
            let a = [("nu", nu), ("part", 1.0), ("k", k as f64)];
            count_check(ch, &a, sign_changes(h, alpha.get(k), alpha.get(k + 1)), 1);
            let b = [("nu", nu), ("part", 2.0), ("k", k as f64)];
            count_check(ch, &b, sign_changes(w, gamma.get(k), gamma.get(k + 1)), 1);
            if nu > 0.0 {
                let lo = if k == 1 { 0.0 } else { alpha.get(k - 1) };
                let c = [("nu", nu), ("part", 3.0), ("k", k as f64)];
                count_check(ch, &c, sign_changes(dp, lo, alpha.get(k)), 1);
            }
        }
        if nu <= 0.0 {
            ch.note("the d' part applies only to nu > 0 and is skipped below");
        }
    }
    Ok(())
}

fn lemma2(ch: &mut Checker, g: &GridSpec) -> Result<()> {
    let nu0 = nu0_cached()?;
    ch.note(format!("nu0 = {}", crate::fmt::num(nu0)));
    ch.strict(&[("nu0", nu0)], (nu0 - 1.0).min(2.0 - nu0));
    let j0 = first_j_zero(nu0, DEFAULT_TOL)?;
    let scale = 8.0 * (nu0 + 1.0);
    let resid = (j0 * j0 - scale).abs() / scale;
    ch.check(&[("nu0", nu0), ("root", 1.0)], 1e-9 - resid, resid <= 1e-9);
    let mut nus = g.nu_values.clone();
    nus.extend([nu0 - 0.01, nu0 + 0.01]);
    for nu in nus {
        let j = first(ZeroKind::BesselJ, nu)?;
        let gap = (8.0 * (nu + 1.0) - j * j) / (8.0 * (nu + 1.0));
        let margin = if nu <= nu0 { gap } else { -gap };
        ch.non_strict(&[("nu", nu)], margin);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lab::verify_default;

    #[test]
    fn interlacing_claims_pass() {
        for c in [ClaimId::Thm2, ClaimId::Cor21, ClaimId::Thm3, ClaimId::Lemma2] {
            let r = verify_default(c).unwrap();
            assert!(r.pass, "{c}: {:?}", &r.violations[..r.violations.len().min(3)]);
        }
    }

    #[test]
    fn ratio_bounds_at_half_the_first_zero() {
        let j = first(ZeroKind::BesselJ, 0.0).unwrap();
        let x = 0.5 * j;
        let r = ln_norm(FunctionId::CalI, 0.0, x).unwrap() - ln_norm(FunctionId::CalJ, 0.0, x).unwrap();
        assert!(r > x * x / 2.0);
        assert!(r < j * j / 4.0 * ((j * j + x * x) / (j * j - x * x)).ln());
    }

    #[test]
    fn sign_changes_of_sine() {
        assert_eq!(sign_changes(f64::sin, 0.1, 10.0), 3);
    }
}
