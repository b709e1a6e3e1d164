//! Scalar root finding: Brent's method and a bracketed Newton iteration.

/// Brent's method on a bracketing interval. `fa` and `fb` must have
/// opposite signs. Returns the root to the requested absolute tolerance.
pub fn brent<F: FnMut(f64) -> f64>(
    mut f: F,
    mut a: f64,
    mut b: f64,
    xtol: f64,
    max_iter: usize,
) -> Option<f64> {
    let mut fa = f(a);
    let mut fb = f(b);
    if fa == 0.0 {
        return Some(a);
    }
    if fb == 0.0 {
        return Some(b);
    }
    if fa.signum() == fb.signum() {
        return None;
    }
    let mut c = a;
    let mut fc = fa;
    let mut d = b - a;
    let mut e = d;
    for _ in 0..max_iter {
        if fb.signum() == fc.signum() {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol1 = 2.0 * f64::EPSILON * b.abs() + 0.5 * xtol;
        let xm = 0.5 * (c - b);
        if xm.abs() <= tol1 || fb == 0.0 {
            return Some(b);
        }
        if e.abs() >= tol1 && fa.abs() > fb.abs() {
            let s = fb / fa;
            let (mut p, mut q);
            if a == c {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                let q0 = fa / fc;
                let r = fb / fc;
                p = s * (2.0 * xm * q0 * (q0 - r) - (b - a) * (r - 1.0));
                q = (q0 - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if p > 0.0 {
                q = -q;
            }
            p = p.abs();
            if 2.0 * p < (3.0 * xm * q - (tol1 * q).abs()).min((e * q).abs()) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        if d.abs() > tol1 {
            b += d;
        } else {
            b += tol1.copysign(xm);
        }
        fb = f(b);
    }
    Some(b)
}

/// Newton iteration constrained to a bracket, falling back to bisection
/// whenever the Newton step leaves the bracket or stalls. `f` returns the
/// value and its derivative. The bracket endpoints must straddle the root.
pub fn newton_bracketed<F: FnMut(f64) -> (f64, f64)>(
    mut f: F,
    mut lo: f64,
    mut hi: f64,
    mut x: f64,
    xtol: f64,
    max_iter: usize,
) -> Option<f64> {
    let (flo, _) = f(lo);
    if flo == 0.0 {
        return Some(lo);
    }
    let increasing = flo < 0.0;
    if !(lo..=hi).contains(&x) {
        x = 0.5 * (lo + hi);
    }
    for _ in 0..max_iter {
        let (v, dv) = f(x);
        if v == 0.0 {
            return Some(x);
        }
        if v > 0.0 {
            if increasing {
                hi = x;
            } else {
                lo = x;
            }
        } else if increasing {
            lo = x;
        } else {
            hi = x;
        }
        let mut next = x - v / dv;
        if !next.is_finite() || next <= lo || next >= hi {
            next = 0.5 * (lo + hi);
        }
        if (next - x).abs() <= xtol {
            return Some(next);
        }
        x = next;
        if hi - lo <= xtol {
            return Some(0.5 * (lo + hi));
        }
    }
    Some(x)
}

/// Expand a tentative bracket geometrically until `f` changes sign.
/// Returns the bracketing pair, or None when expansion hits `limit`.
pub fn expand_bracket<F: FnMut(f64) -> f64>(
    mut f: F,
    x0: f64,
    step0: f64,
    limit: f64,
) -> Option<(f64, f64)> {
    let f0 = f(x0);
    if f0 == 0.0 {
        return Some((x0, x0));
    }
    let mut step = step0;
    let mut prev = x0;
    let mut fprev = f0;
    for _ in 0..200 {
        let x = prev + step;
        let x = if step > 0.0 { x.min(limit) } else { x.max(limit) };
        let fx = f(x);
        if fx.signum() != fprev.signum() {
            return if step > 0.0 {
                Some((prev, x))
            } else {
                Some((x, prev))
            };
        }
        if x == limit {
            return None;
        }
        prev = x;
        fprev = fx;
        step *= 1.6;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn brent_on_cubic() {
        let r = brent(|x| x * x * x - 2.0, 0.0, 2.0, 1e-14, 100).unwrap();
        assert!((r - 2f64.powf(1.0 / 3.0)).abs() < 1e-12);
    }

    #[test]
    fn newton_with_bracket_protection() {
        // derivative misleads near 0; bracket keeps it in range
        let r = newton_bracketed(
            |x| ((x - 1.5).tanh(), 1.0 / (x - 1.5).cosh().powi(2)),
            0.0,
            10.0,
            9.0,
            1e-14,
            200,
        )
        .unwrap();
        assert!((r - 1.5).abs() < 1e-12);
    }
}
