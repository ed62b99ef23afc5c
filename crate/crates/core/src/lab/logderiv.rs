//! Two-sided bounds on the logarithmic derivatives of the normalized Dini
//! function and cross-product in terms of Rayleigh sums.

use std::sync::Arc;

use super::util::{cfg, o, table};
use super::GridSpec;
use crate::error::{domain, Result};
use crate::rayleigh::{recursion_values, sequence_a, sequence_b, RayleighFamily};
use crate::report::{ClaimId, Checker, VerificationReport};
use crate::special::{log_derivative, pochhammer, CompensatedSum, FunctionId};
use crate::zeros::{tail_bound, ZeroKind, ZeroTable};

/// Zeros summed for the remainder term.
pub const REMAINDER_ZEROS: usize = 2000;
/// Largest n accepted.
pub const MAX_DEPTH: usize = 4;
/// Endpoint fractions and tolerance of the sharpness checks.
pub const NEAR_ZERO: f64 = 0.999;
pub const NEAR_ORIGIN: f64 = 0.01;
pub const SHARP_TOL: f64 = 1e-2;
/// Rounding allowance of the literal middle expression, in units of eps
/// times the size of the cancelling terms.
pub const LITERAL_SLACK: f64 = 4096.0;

/// Everything the sandwich at one (family, nu, n) needs.
pub struct Sandwich {
    /// 2 for the Dini function, 4 for the cross-product.
    pub p: i32,
    /// 4(nu+1)/3 or 16 (nu+1)_3.
    pub c: f64,
    pub n: usize,
    pub nu: f64,
    family: FunctionId,
    zeros: Arc<ZeroTable>,
    /// A_1..A_{n+1} or B_1..B_{n+1}.
    seq: Vec<f64>,
    /// Rayleigh sums of orders 1..=n+1.
    sums: Vec<f64>,
}

impl Sandwich {
    pub fn new(claim: ClaimId, nu: f64, n: usize) -> Result<Self> {
        if n == 0 || n > MAX_DEPTH {
            return domain(format!("n must lie in 1..={MAX_DEPTH}, got {n}"));
        }
        let order = o(nu)?;
        let (p, c, family, kind, rf, seq) = match claim {
            ClaimId::Thm10 => (
                2,
                4.0 * (nu + 1.0) / 3.0,
                FunctionId::CalD,
                ZeroKind::Dini,
                RayleighFamily::Eta,
                sequence_a(order, n + 1)?,
            ),
            ClaimId::Thm11 => (
                4,
                16.0 * pochhammer(nu + 1.0, 3),
                FunctionId::CalW,
                ZeroKind::Cross,
                RayleighFamily::Zeta,
                sequence_b(order, n + 1)?,
            ),
            _ => return domain(format!("{claim} is not a logarithmic-derivative bound")),
        };
        Ok(Sandwich {
            p,
            c,
            n,
            nu,
            family,
            zeros: table(kind, nu, REMAINDER_ZEROS)?,
            seq,
            sums: recursion_values(rf, order, n + 1)?,
        })
    }

    fn z1p(&self) -> f64 {
        self.zeros.get(1).powi(self.p)
    }

    fn top(&self) -> i32 {
        self.p * (self.n as i32 + 1)
    }

    /// Lower constant as defined from the first n terms of the sequence.
    pub fn lower(&self) -> f64 {
        let z = self.z1p();
        let partial: f64 = (1..=self.n).map(|m| self.seq[m - 1] * z.powi(m as i32)).sum();
        (1.0 - z / self.c - partial) / z.powi(self.n as i32 + 1)
    }

    /// The same constant as z_1^{-p(n+1)} minus the Rayleigh sum of order n+1.
    pub fn lower_from_sums(&self) -> f64 {
        self.z1p().powi(-(self.n as i32 + 1)) - self.sums[self.n]
    }

    pub fn upper(&self) -> f64 {
        self.seq[self.n]
    }

    /// The middle expression -(c/p) x f'(x)/f(x) / x^p.
    pub fn middle(&self, x: f64) -> Result<f64> {
        let ld = log_derivative(self.family, o(self.nu)?, x, &cfg())?;
        Ok(-self.c / self.p as f64 * ld / x.powi(self.p))
    }

    /// R_{pn}(x) = z_1^p + c sum_{m<=n} seq_m x^{pm}.
    pub fn polynomial(&self, x: f64) -> f64 {
        let xp = x.powi(self.p);
        let s: f64 = (1..=self.n).map(|m| self.seq[m - 1] * xp.powi(m as i32)).sum();
        self.z1p() + self.c * s
    }

    /// The remainder ((z_1^p - x^p) middle - R) / (c x^{p(n+1)}) formed
    /// literally, with an estimate of its rounding error.
    pub fn remainder_literal(&self, x: f64) -> Result<(f64, f64)> {
        let head = (self.z1p() - x.powi(self.p)) * self.middle(x)?;
        let r = self.polynomial(x);
        let den = self.c * x.powi(self.top());
        let err = LITERAL_SLACK * f64::EPSILON * (head.abs() + r.abs()) / den;
        Ok(((head - r) / den, err))
    }

    /// The remainder summed over the zeros, with a bound on the omitted tail.
    pub fn remainder(&self, x: f64) -> (f64, f64) {
        let z1 = self.z1p();
        let xp = x.powi(self.p);
        let mut s = CompensatedSum::new();
        for z in &self.zeros.zeros[1..] {
            let zp = z.powi(self.p);
            s.add((z1 - zp) / (zp.powi(self.n as i32 + 1) * (zp - xp)));
        }
        (s.value(), tail_bound(self.zeros.last(), self.top() as f64))
    }

    /// (z_1^p - x^p) times the middle expression; tends to c at the first zero.
    pub fn residue(&self, x: f64) -> Result<f64> {
        Ok((self.z1p() - x.powi(self.p)) * self.middle(x)?)
    }
}

pub(super) fn verify(claim: ClaimId, g: &GridSpec) -> Result<VerificationReport> {
    let mut ch = Checker::new(claim);
    if g.count > MAX_DEPTH {
        return domain(format!("n must lie in 1..={MAX_DEPTH}, got {}", g.count));
    }
    ch.note(
        "the sandwich is checked on the remainder summed over 2000 zeros; \
         the literal middle expression is compared with it within its rounding error; \
         N is read as n; part 0 sandwich, 1 literal, 2 lower constant, 3 sharpness, 4 residue",
    );
    for &nu in &g.nu_values {
        for n in 1..=g.count {
            let s = Sandwich::new(claim, nu, n)?;
            let (a, b) = (s.lower(), s.upper());
            let width = b - a;
            let base = [("nu", nu), ("n", n as f64)];
            let with = |x: f64, part: f64| [base[0], base[1], ("x", x), ("part", part)];

            let alt = s.lower_from_sums();
            let err = (a - alt).abs() / width.abs();
            ch.check(&with(0.0, 2.0), 1e-6 - err, err <= 1e-6);
            ch.strict(&with(0.0, 0.0), width / width.abs().max(b.abs()));

            let z1 = s.zeros.get(1);
            for &f in &g.fractions {
                let x = f * z1;
                let (r, tail) = s.remainder(x);
                let p = with(x, 0.0);
                ch.strict(&p, (r - a - tail) / width);
                ch.strict(&p, (b - r) / width);
                let (lit, err) = s.remainder_literal(x)?;
                let diff = (lit - r).abs();
                let allowed = err + tail;
                ch.check(&with(x, 1.0), (allowed - diff) / width, diff <= allowed);
            }
            for (f, target) in [(NEAR_ZERO, a), (NEAR_ORIGIN, b)] {
                let x = f * z1;
                let gap = (s.remainder(x).0 - target).abs() / width;
                ch.check(&with(x, 3.0), SHARP_TOL - gap, gap <= SHARP_TOL);
            }
            let x = NEAR_ZERO * z1;
            let gap = (s.residue(x)? - s.c).abs() / s.c;
            ch.check(&with(x, 4.0), SHARP_TOL - gap, gap <= SHARP_TOL);
        }
    }
    Ok(ch.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lab::verify_default;

    #[test]
    fn dini_sandwich_at_half_the_first_zero() {
        let s = Sandwich::new(ClaimId::Thm10, 0.0, 1).unwrap();
        let x = 0.5 * s.zeros.get(1);
        let mid = s.middle(x).unwrap();
        let den = s.z1p() - x * x;
        let lo = (s.polynomial(x) + s.c * s.lower() * x.powi(4)) / den;
        let hi = (s.polynomial(x) + s.c * s.upper() * x.powi(4)) / den;
        assert!(lo < mid && mid < hi, "{lo} {mid} {hi}");
    }

    #[test]
    fn second_sequence_starts_from_zeta() {
        let s = Sandwich::new(ClaimId::Thm11, 0.0, 1).unwrap();
        let g4 = s.z1p();
        let z4 = 1.0 / 96.0;
        let z8 = 17.0 / 184320.0;
        assert!((s.seq[0] - (g4 * z8 - z4)).abs() < 1e-14);
    }

    #[test]
    fn remainder_matches_the_literal_form_where_it_is_well_conditioned() {
        let s = Sandwich::new(ClaimId::Thm10, 0.5, 1).unwrap();
        let x = 0.6 * s.zeros.get(1);
        let (lit, _) = s.remainder_literal(x).unwrap();
        let (r, _) = s.remainder(x);
        assert!((lit - r).abs() < 1e-9 * r.abs(), "{lit} {r}");
    }

    #[test]
    fn log_derivative_bounds_pass() {
        for c in [ClaimId::Thm10, ClaimId::Thm11] {
            let r = verify_default(c).unwrap();
            assert!(r.pass, "{c}: {:?}", &r.violations[..r.violations.len().min(3)]);
        }
    }
}
