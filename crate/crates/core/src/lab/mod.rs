//! Numerical verification of the interlacing properties, identities, bounds
//! and Redheffer-type inequalities satisfied by Dini functions and the
//! Bessel cross-product.

mod absmono;
mod calogero;
mod interlace;
mod logderiv;
mod monotone;
mod redheffer;

use rayon::prelude::*;

use crate::error::{domain, Error, Result};
use crate::report::{ClaimId, VerificationReport};
use crate::special::Order;
use crate::zeros::nu0_cached;

pub use calogero::{dini_ode_residual, identity1, identity2, identity3, limit_values};
pub use redheffer::{thm7d_upper_order, THM7B_UPPER};

/// Orders sampled by default, before each claim's window is applied.
pub const DEFAULT_NU: [f64; 7] = [-0.9, -0.5, 0.0, 0.5, 1.0, 2.0, 5.0];

/// Fractions 0.05, 0.10, ..., 0.95 of a claim's domain endpoint.
pub fn default_fractions() -> Vec<f64> {
    (1..20).map(|i| i as f64 * 0.05).collect()
}

/// Parameter grid for one claim.
#[derive(Clone, Debug, PartialEq)]
pub struct GridSpec {
    pub nu_values: Vec<f64>,
    /// Fractions of the relevant endpoint, each in (0, 1).
    pub fractions: Vec<f64>,
    /// Claim-specific count: zero indices, Calogero k, or Rayleigh depth n.
    pub count: usize,
}

impl GridSpec {
    /// The default grid for `claim`, restricted to its window.
    pub fn default_for(claim: ClaimId) -> Result<Self> {
        let w = window(claim)?;
        Ok(GridSpec {
            nu_values: DEFAULT_NU.iter().copied().filter(|&v| w.contains(v)).collect(),
            fractions: default_fractions(),
            count: default_count(claim),
        })
    }

    fn validate(&self, claim: ClaimId) -> Result<()> {
        if self.nu_values.is_empty() {
            return domain("the grid has no orders");
        }
        if self.fractions.iter().any(|&f| !(f > 0.0 && f < 1.0)) {
            return domain("grid fractions must lie in (0, 1)");
        }
        if self.count == 0 {
            return domain("count must be at least 1");
        }
        let w = window(claim)?;
        for &nu in &self.nu_values {
            Order::new(nu)?;
            if !w.contains(nu) {
                return Err(Error::Hypothesis(format!("{claim} needs nu in {w}, got {nu}")));
            }
        }
        Ok(())
    }
}

/// Admissible orders for a claim.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Window {
    pub lo: f64,
    pub lo_closed: bool,
    pub hi: f64,
    pub hi_closed: bool,
}

impl Window {
    const ALL: Window = Window { lo: -1.0, lo_closed: false, hi: f64::INFINITY, hi_closed: false };

    pub fn contains(&self, nu: f64) -> bool {
        let above = if self.lo_closed { nu >= self.lo } else { nu > self.lo };
        let below = if self.hi_closed { nu <= self.hi } else { nu < self.hi };
        above && below
    }
}

impl std::fmt::Display for Window {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{}{}, {}{}",
            if self.lo_closed { '[' } else { '(' },
            crate::fmt::num(self.lo),
            if self.hi.is_infinite() { "inf".to_string() } else { crate::fmt::num(self.hi) },
            if self.hi_closed { ']' } else { ')' }
        )
    }
}

pub fn window(claim: ClaimId) -> Result<Window> {
    let from = |lo: f64, closed: bool| Window { lo, lo_closed: closed, ..Window::ALL };
    Ok(match claim {
        ClaimId::Thm1d => from(-0.5, true),
        ClaimId::Thm4Id3 | ClaimId::WprimeProduct => from(-0.5, false),
        ClaimId::Thm7b => Window { hi: THM7B_UPPER, ..Window::ALL },
        ClaimId::Thm7d => Window { hi: thm7d_upper_order(), ..Window::ALL },
        ClaimId::Redheffer56 => Window { hi: nu0_cached()?, hi_closed: true, ..Window::ALL },
        ClaimId::Thm9 => from(nu0_cached()?, true),
        _ => Window::ALL,
    })
}

fn default_count(claim: ClaimId) -> usize {
    match claim {
        ClaimId::Thm1a | ClaimId::Thm1c | ClaimId::Thm1d => 6,
        ClaimId::Thm2 | ClaimId::Thm3 => 8,
        ClaimId::Thm4Id1 | ClaimId::Thm4Id2 | ClaimId::Thm4Id3 => 2,
        ClaimId::Thm10 | ClaimId::Thm11 => 2,
        ClaimId::LimitEq => 5,
        ClaimId::Thm7a | ClaimId::Thm7c => redheffer::HYPOTHESIS_SCAN,
        _ => 1,
    }
}

/// Checks one claim over a grid.
pub fn verify(claim: ClaimId, grid: &GridSpec) -> Result<VerificationReport> {
    grid.validate(claim)?;
    let g = grid;
    match claim {
        ClaimId::Thm1a
        | ClaimId::Thm1b
        | ClaimId::Thm1c
        | ClaimId::Thm1d
        | ClaimId::Thm1e
        | ClaimId::Thm1f => monotone::verify(claim, g),
        ClaimId::Thm2 | ClaimId::Cor21 | ClaimId::Thm3 | ClaimId::Lemma2 => {
            interlace::verify(claim, g)
        }
        ClaimId::Thm4Id1
        | ClaimId::Thm4Id2
        | ClaimId::Thm4Id3
        | ClaimId::DiniOde
        | ClaimId::LimitEq
        | ClaimId::WprimeProduct => calogero::verify(claim, g),
        ClaimId::Thm5 | ClaimId::Thm6 | ClaimId::Cor61 => absmono::verify(claim, g),
        ClaimId::Thm7a
        | ClaimId::Thm7b
        | ClaimId::Thm7c
        | ClaimId::Thm7d
        | ClaimId::Thm8
        | ClaimId::Redheffer56
        | ClaimId::Thm9 => redheffer::verify(claim, g),
        ClaimId::Thm10 | ClaimId::Thm11 => logderiv::verify(claim, g),
    }
}

/// Checks a claim on its default grid.
pub fn verify_default(claim: ClaimId) -> Result<VerificationReport> {
    verify(claim, &GridSpec::default_for(claim)?)
}

/// Runs every listed claim on its default grid in parallel; results come
/// back sorted by claim.
pub fn run_suite(claims: &[ClaimId]) -> Vec<(ClaimId, Result<VerificationReport>)> {
    let mut out: Vec<_> = claims.par_iter().map(|&c| (c, verify_default(c))).collect();
    out.sort_by_key(|(c, _)| *c);
    out
}

/// Claims thm1a to thm1f at one order.
pub fn verify_theorem1(nu: f64, fractions: &[f64]) -> Result<Vec<VerificationReport>> {
    let claims = [
        ClaimId::Thm1a,
        ClaimId::Thm1b,
        ClaimId::Thm1c,
        ClaimId::Thm1d,
        ClaimId::Thm1e,
        ClaimId::Thm1f,
    ];
    let mut out = Vec::new();
    for c in claims {
        if !window(c)?.contains(nu) {
            continue;
        }
        let mut g = GridSpec::default_for(c)?;
        g.nu_values = if c == ClaimId::Thm1e { vec![nu, next_order(nu)] } else { vec![nu] };
        g.fractions = fractions.to_vec();
        out.push(verify(c, &g)?);
    }
    Ok(out)
}

fn next_order(nu: f64) -> f64 {
    DEFAULT_NU.iter().copied().find(|&v| v > nu).unwrap_or(nu + 1.0)
}

/// Shared helpers for the claim modules.
pub(crate) mod util {
    use crate::special::{
        bessel_i_ratio, bessel_j_pair, normalized_minus_one, FunctionId, Order, SeriesConfig,
    };
    use crate::zeros::{target, ZeroFinder, ZeroKind, ZeroTable};
    use crate::{Error, Result};
    use std::sync::Arc;

    pub fn o(nu: f64) -> Result<Order> {
        Order::new(nu)
    }

    pub fn cfg() -> SeriesConfig {
        SeriesConfig::default()
    }

    pub fn table(kind: ZeroKind, nu: f64, count: usize) -> Result<Arc<ZeroTable>> {
        ZeroFinder::global().table(kind, Order::new(nu)?, count)
    }

    pub fn first(kind: ZeroKind, nu: f64) -> Result<f64> {
        Ok(table(kind, nu, 1)?.get(1))
    }

    /// Forward differences of orders 1..=k at the first sample, each with the
    /// sum of |binomial * value| as its rounding scale.
    pub fn forward_differences(vals: &[f64], k: usize) -> Vec<(f64, f64)> {
        let mut out = Vec::with_capacity(k);
        for order in 1..=k {
            let mut diff = 0.0;
            let mut scale = 0.0;
            let mut binom = 1.0;
            for i in 0..=order {
                let sign = if (order - i) % 2 == 0 { 1.0 } else { -1.0 };
                diff += sign * binom * vals[i];
                scale += binom * vals[i].abs();
                binom = binom * (order - i) as f64 / (i + 1) as f64;
            }
            out.push((diff, scale));
        }
        out
    }

    /// ln((c - y) / (c + y)) without forming the ratio.
    pub fn ln_redheffer(c: f64, y: f64) -> f64 {
        (-2.0 * y / (c + y)).ln_1p()
    }

    /// ln f(x) for a normalized family, accurate when f is close to 1.
    pub fn ln_norm(f: FunctionId, nu: f64, x: f64) -> Result<f64> {
        let m = normalized_minus_one(f, o(nu)?, x, &cfg())?;
        if m <= -1.0 {
            return Err(Error::Domain(format!("{f} is not positive at x = {x}")));
        }
        Ok(m.ln_1p())
    }

    /// W / I_nu, W' / I_nu and W'' / I_nu at x > 0, with |J_{nu+1}| + |r J_nu|
    /// as the size of the cancelling terms in the first.
    #[derive(Clone, Copy, Debug)]
    pub struct CrossParts {
        pub w: f64,
        pub p: f64,
        pub q: f64,
        pub scale: f64,
    }

    pub fn cross_parts(nu: f64, x: f64) -> CrossParts {
        let (w, p) = target(ZeroKind::Cross, nu, x);
        let (_, q) = target(ZeroKind::CrossPrime, nu, x);
        let (j0, j1) = bessel_j_pair(nu, x);
        let r = bessel_i_ratio(nu, x);
        CrossParts { w, p, q, scale: j1.abs() + (r * j0).abs() }
    }
}
