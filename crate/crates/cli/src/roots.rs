//! Approximate complex roots of a characteristic polynomial.

use num_complex::Complex64;
use tvsat::linalg::CharPoly;
use tvsat::FieldContext;

const MAX_ITER: usize = 2000;

/// Durand–Kerner iteration on the complex embedding of a monic polynomial.
/// Roots come back sorted by argument, then modulus.
pub fn approximate_roots(ctx: &FieldContext, cp: &CharPoly) -> Vec<Complex64> {
    let n = cp.degree();
    if n == 0 {
        return Vec::new();
    }
    let coeffs: Vec<Complex64> = cp
        .coeffs()
        .iter()
        .map(|c| {
            let z = ctx.embed_complex(c, 20);
            Complex64::new(z.re_f64(), z.im_f64())
        })
        .collect();
    let eval = |x: Complex64| coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * x + c);
    let radius = 1.0 + coeffs[..n].iter().map(|c| c.norm()).fold(0.0, f64::max);
    let seed = Complex64::from_polar(1.0, 0.4);
    let mut z: Vec<Complex64> = (0..n).map(|k| seed.powu(k as u32) * (0.5 * radius)).collect();
    for _ in 0..MAX_ITER {
        let mut delta = 0.0f64;
        for i in 0..n {
            let denom = (0..n).filter(|&j| j != i).fold(Complex64::new(1.0, 0.0), |acc, j| acc * (z[i] - z[j]));
            if denom.norm() == 0.0 {
                z[i] += Complex64::new(1e-9, 1e-9);
                delta = f64::INFINITY;
                continue;
            }
            let step = eval(z[i]) / denom;
            z[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-15 {
            break;
        }
    }
    z.sort_by(|a, b| {
        let key = |c: &Complex64| (round(c.arg(), 9), round(c.norm(), 9));
        key(a).partial_cmp(&key(b)).unwrap_or(std::cmp::Ordering::Equal)
    });
    z
}

fn round(x: f64, digits: i32) -> f64 {
    let s = 10f64.powi(digits);
    (x * s).round() / s
}

/// `re ± im·i` at `digits` decimals, with negative zero suppressed.
pub fn format_complex(z: Complex64, digits: usize) -> String {
    let clean = |x: f64| {
        let r = round(x, digits as i32);
        if r == 0.0 {
            0.0
        } else {
            r
        }
    };
    let (re, im) = (clean(z.re), clean(z.im));
    let sign = if im < 0.0 { '-' } else { '+' };
    format!("{re:.digits$} {sign} {:.digits$}i", im.abs())
}
