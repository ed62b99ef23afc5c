//! Bracketed root refinement: bisection to a narrow interval, then
//! safeguarded Newton.

use crate::error::{Error, Result};

const BISECT_WIDTH: f64 = 0.25;
const MAX_STEPS: usize = 200;

/// Root of f on (a, b) where f has sign `sa` just right of a and the
/// opposite sign at b. Returns (root, |f(root)|, |f'(root)|).
pub fn refine(
    f: &impl Fn(f64) -> (f64, f64),
    a: f64,
    b: f64,
    sa: f64,
    tol: f64,
) -> Result<(f64, f64, f64)> {
    let (mut lo, mut hi) = (a, b);
    let step_tol = |x: f64| tol * x.abs().max(1.0);
    let mut iters = 0;
    while hi - lo > BISECT_WIDTH {
        let mid = 0.5 * (lo + hi);
        if f(mid).0.signum() == sa {
            lo = mid;
        } else {
            hi = mid;
        }
        iters += 1;
    }
    // Newton while it stays inside the bracket and halves the step before last,
    // else bisect.
    let mut x = 0.5 * (lo + hi);
    let mut last_step = hi - lo;
    let mut older_step = last_step;
    let mut converged = false;
    while iters < MAX_STEPS {
        iters += 1;
        let (v, d) = f(x);
        if v == 0.0 {
            converged = true;
            break;
        }
        if v.signum() == sa {
            lo = x;
        } else {
            hi = x;
        }
        let newton = x - v / d;
        let inside = newton.is_finite() && newton > lo && newton < hi;
        if newton.is_finite() && (newton - x).abs() <= step_tol(x) {
            if inside {
                x = newton;
            }
            converged = true;
            break;
        }
        let next = if inside && 2.0 * (newton - x).abs() <= older_step {
            newton
        } else {
            0.5 * (lo + hi)
        };
        older_step = last_step;
        last_step = (next - x).abs();
        x = next;
        if hi - lo <= step_tol(lo) {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::Convergence(iters));
    }
    let (v, d) = f(x);
    let res = v.abs();
    let slope = d.abs();
    if res > 10.0 * tol * x.max(1.0) * slope {
        // one more Newton step usually settles a borderline residual
        let y = x - v / d;
        let (vy, dy) = f(y);
        if y.is_finite() && vy.abs() <= 10.0 * tol * y.max(1.0) * dy.abs() {
            return Ok((y, vy.abs(), dy.abs()));
        }
        return Err(Error::Convergence(iters));
    }
    Ok((x, res, slope))
}
