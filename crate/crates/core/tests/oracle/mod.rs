//! Independent oracles shared by the integration and acceptance tests.
#![allow(dead_code)]

use std::f64::consts::FRAC_PI_2;

/// Primality by trial division.
pub fn trial_division(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Tanh-sinh quadrature of `f(x, dist_lo, dist_hi)` over `[a, b]`, where the
/// distances to the endpoints are passed separately so the integrand can
/// evaluate endpoint singularities without cancellation.
fn tanh_sinh(f: impl Fn(f64, f64, f64) -> f64, a: f64, b: f64) -> f64 {
    let half = 0.5 * (b - a);
    let mut prev = f64::NAN;
    for level in 3..=12 {
        let h = 1.0 / (1u32 << level) as f64;
        let steps = (4.0 / h) as i64;
        let mut sum = 0.0;
        for k in -steps..=steps {
            let t = k as f64 * h;
            let u = FRAC_PI_2 * t.sinh();
            let cu = u.cosh();
            let weight = half * FRAC_PI_2 * t.cosh() / (cu * cu);
            // 1 - tanh|u| = 2 / (e^{2|u|} + 1)
            let tail = half * 2.0 / ((2.0 * u.abs()).exp() + 1.0);
            if tail == 0.0 || weight == 0.0 {
                continue;
            }
            let (x, lo, hi) = if u >= 0.0 {
                (b - tail, b - a - tail, tail)
            } else {
                (a + tail, tail, b - a - tail)
            };
            sum += weight * f(x, lo, hi);
        }
        let est = sum * h;
        if (est - prev).abs() < 1e-13 * est.abs().max(1.0) {
            return est;
        }
        prev = est;
    }
    prev
}

/// `li(x)` for `x ≥ 2` directly from its principal-value definition.
///
/// The excised neighbourhood `(1 − δ, 1 + δ)` is paired as `u = 1 ∓ s`, so
/// `∫_0^2 du / ln u = ∫_0^1 [1/ln(1 − s) + 1/ln(1 + s)] ds`, which is finite.
/// The remainder `∫_2^x du / ln u` is proper.
pub fn li_oracle(x: f64) -> f64 {
    assert!(x >= 2.0, "oracle covers x ≥ 2");
    let paired = tanh_sinh(
        |_, s, one_minus_s| {
            if s < 1e-4 {
                // 1/ln(1 − s) + 1/ln(1 + s) = 1 + s²/12 + O(s⁴)
                return 1.0 + s * s / 12.0;
            }
            let below = if s < 0.5 {
                (-s).ln_1p()
            } else {
                one_minus_s.ln()
            };
            1.0 / below + 1.0 / s.ln_1p()
        },
        0.0,
        1.0,
    );
    let tail = if x > 2.0 {
        tanh_sinh(|u, _, _| 1.0 / u.ln(), 2.0, x)
    } else {
        0.0
    };
    paired + tail
}
