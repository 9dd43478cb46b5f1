//! Satellites with nonzero winding number, assembled from wheels.

use super::formulas::{gamma, winding_zero_satellite};
use super::{CompanionData, PatternId, TVModule};
use crate::error::{Error, Result};
use crate::linalg::ExactMatrix;
use crate::recoupling::{lambda_coef, mu};
use crate::scalars::{FieldContext, Scalar};
use crate::wheels::{orbit_reps, period, rotate, w_construction, NWheel, Slot};

fn check_colors(ctx: &FieldContext, a: &[u32], c: u32) -> Result<()> {
    let cd = ctx.colors();
    match a.iter().chain([&c]).find(|&&x| !cd.is_color(x)) {
        Some(&x) => Err(Error::NotAColor(i64::from(x), ctx.p())),
        None => Ok(()),
    }
}

fn mu_inv(ctx: &FieldContext, i: u32) -> Scalar {
    mu(ctx, i).inv().expect("μ is a unit")
}

/// Slot `i` of a pattern wheel carries `σ^i(â)`; `f` maps it to the scalar.
fn scalar_wheel(ctx: &FieldContext, a: &[u32], f: impl Fn(&[u32]) -> Result<Scalar>) -> Result<NWheel> {
    let n = period(a);
    let mut v = a.to_vec();
    let (mut values, mut labels) = (Vec::with_capacity(n), Vec::with_capacity(n));
    for _ in 0..n {
        values.push(f(&v)?);
        labels.push(format!("{v:?}"));
        v = rotate(&v);
    }
    Ok(NWheel::scalars(ctx, values, labels))
}

/// The pattern wheel `W(P; â, c)`, with `n(â)` slots.
pub fn pattern_wheels(ctx: &FieldContext, pattern: PatternId, a: &[u32], c: u32) -> Result<NWheel> {
    let w = pattern.winding();
    if w == 0 {
        return Err(Error::WheelShape(format!("pattern {pattern} has winding number zero")));
    }
    if a.len() != w {
        return Err(Error::WheelShape(format!("pattern {pattern} needs {w} colors, got {}", a.len())));
    }
    check_colors(ctx, a, c)?;
    if pattern.uncolored_only() && c != 0 {
        return Err(Error::UnsupportedColoring(format!("pattern {pattern} is only available with meridian color 0")));
    }
    let cd = ctx.colors();
    let zero = NWheel::zero(ctx, period(a));
    match pattern {
        PatternId::D(_) => unreachable!("winding zero handled above"),
        PatternId::Meridian if a[0] != c => Ok(zero),
        PatternId::Meridian => scalar_wheel(ctx, a, |_| Ok(ctx.one())),
        PatternId::F10 if !cd.tset().contains(&a[0]) => Ok(zero),
        PatternId::F10 => scalar_wheel(ctx, a, |v| gamma(ctx, v[0])),
        PatternId::P21 if !cd.admissible(a[0], a[1], c) => Ok(zero),
        PatternId::P21 => scalar_wheel(ctx, a, |v| {
            let nu = &mu(ctx, v[0]) * &lambda_coef(ctx, v[0], v[1], c)?;
            nu.inv()
        }),
        PatternId::P31 | PatternId::T31 if !cd.parity_and_bound(a[0], a[1], a[2]) => Ok(zero),
        PatternId::P31 => scalar_wheel(ctx, a, |v| Ok(mu_inv(ctx, v[0]))),
        PatternId::T31 => scalar_wheel(ctx, a, |v| Ok(&mu(ctx, v[1]) * &mu_inv(ctx, v[2]))),
    }
}

/// `⊕_{â∈𝒪^w} 𝕊(𝕎(C,â) ⊗ pattern(â))`, flattened.
fn assemble(
    ctx: &FieldContext,
    companion: &CompanionData,
    w: usize,
    c: u32,
    note: String,
    pattern: impl Fn(&[u32]) -> Result<NWheel>,
) -> Result<TVModule> {
    let mut acc = ExactMatrix::zeros(ctx, 0, 0);
    for orbit in orbit_reps(ctx, w) {
        let rep = &orbit.representative;
        let pw = pattern(rep)?;
        if pw.is_zero() {
            continue;
        }
        let gs = rep.iter().map(|&x| companion.module(x).map(|m| m.matrix().clone())).collect::<Result<Vec<_>>>()?;
        let cw = w_construction(ctx, &gs, orbit.period)?;
        let prod = cw.tensor(&pw)?;
        if prod.is_zero() {
            continue;
        }
        let s = prod.s_operator(ctx);
        let tag = rep.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        let labels = (0..s.rows()).map(|k| format!("({tag})#{k}")).collect();
        acc = acc.dsum(&s.with_basis(labels)?);
    }
    TVModule::flattened(c, acc, note)
}

/// `Z(C⋆P, c)` for a built-in pattern; winding zero dispatches to the twisted-double sum.
pub fn satellite_main(ctx: &FieldContext, companion: &CompanionData, pattern: PatternId, c: u32) -> Result<TVModule> {
    match pattern {
        PatternId::D(k) => winding_zero_satellite(ctx, companion, k, c),
        _ => assemble(ctx, companion, pattern.winding(), c, format!("pattern {pattern}"), |a| {
            pattern_wheels(ctx, pattern, a, c)
        }),
    }
}

/// `Z(C⋆M_K, c)` for the meridian pattern whose embellishment is knotted as `summand`.
///
/// Its 1-wheel at `â = (a)` is `⊕_{b∈A(a,c)} Z(K,b)`, so the result is a
/// connected sum computed through the wheel machinery.
pub fn satellite_meridian_sum(
    ctx: &FieldContext,
    companion: &CompanionData,
    summand: &CompanionData,
    c: u32,
) -> Result<TVModule> {
    let cd = ctx.colors();
    assemble(ctx, companion, 1, c, "meridian pattern with knotted embellishment".into(), |a| {
        check_colors(ctx, a, c)?;
        let mut m = ExactMatrix::zeros(ctx, 0, 0);
        for b in cd.a_set(a[0], c) {
            m = m.dsum(summand.module(b)?.matrix());
        }
        NWheel::new(vec![Slot { dim: m.rows(), label: format!("[{}]", a[0]) }], vec![m])
    })
}
