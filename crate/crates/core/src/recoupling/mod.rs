//! Colors, admissibility and the closed-form recoupling scalars.

mod colors;
pub mod tl;

use std::collections::HashMap;
use std::sync::RwLock;

pub use colors::ColorData;
pub use tl::{tl_oracle, Network, TlOracle};

use crate::error::{Error, Result};
use crate::scalars::{FieldContext, Scalar};

/// Per-context memo tables. Readers share, inserts are serialized.
#[derive(Default)]
pub(crate) struct Memo {
    qfact: RwLock<Vec<Scalar>>,
    theta: RwLock<HashMap<[u32; 3], Scalar>>,
    tet: RwLock<HashMap<[u32; 6], Scalar>>,
}

fn sign(odd: bool) -> i64 {
    if odd {
        -1
    } else {
        1
    }
}

/// The quantum integer `[n] = (A^{2n} − A^{−2n}) / (A² − A^{−2})`, expanded as
/// `A^{2(n−1)} + A^{2(n−3)} + … + A^{−2(n−1)}` so no division is needed.
pub fn qint(ctx: &FieldContext, n: i64) -> Scalar {
    let m = n.abs();
    let mut acc = ctx.zero();
    for k in 0..m {
        acc += &ctx.a_pow(2 * (m - 1) - 4 * k);
    }
    if n < 0 {
        -acc
    } else {
        acc
    }
}

/// `[n]! = [1][2]…[n]`, with `[0]! = 1`.
pub fn qfact(ctx: &FieldContext, n: u32) -> Scalar {
    let n = n as usize;
    if let Some(v) = ctx.memo.qfact.read().unwrap().get(n) {
        return v.clone();
    }
    let mut table = ctx.memo.qfact.write().unwrap();
    if table.is_empty() {
        table.push(ctx.one());
    }
    while table.len() <= n {
        let k = table.len();
        let next = table[k - 1].clone() * qint(ctx, k as i64);
        table.push(next);
    }
    table[n].clone()
}

/// Value of the unknot colored `c`: `(−1)^c [c+1]`.
pub fn delta(ctx: &FieldContext, c: u32) -> Scalar {
    let v = qint(ctx, c as i64 + 1);
    if c % 2 == 1 {
        -v
    } else {
        v
    }
}

/// Twist eigenvalue `μ_i = (−1)^i A^{i² + 2i}`.
pub fn mu(ctx: &FieldContext, i: u32) -> Scalar {
    let i = i as i64;
    &ctx.int(sign(i % 2 == 1)) * &ctx.a_pow(i * i + 2 * i)
}

/// Vertex twist coefficient `λ^{ab}_c`.
pub fn lambda_coef(ctx: &FieldContext, a: u32, b: u32, c: u32) -> Result<Scalar> {
    require_admissible(ctx, a, b, c)?;
    let (a, b, c) = (a as i64, b as i64, c as i64);
    let e = (a * (a + 2) + b * (b + 2) - c * (c + 2)) / 2;
    Ok(&ctx.int(sign(((a + b - c) / 2) % 2 != 0)) * &ctx.a_pow(e))
}

/// Colored Hopf link `H(a,t) = (−1)^{a+t} [(a+1)(t+1)]`.
pub fn hopf(ctx: &FieldContext, a: u32, t: u32) -> Scalar {
    let v = qint(ctx, (a as i64 + 1) * (t as i64 + 1));
    if (a + t) % 2 == 1 {
        -v
    } else {
        v
    }
}

/// Coefficients `η Δ_c` of the surgery element, one per color.
pub fn omega_coeffs(ctx: &FieldContext) -> Vec<Scalar> {
    let eta = ctx.eta();
    ctx.colors().colors().iter().map(|&c| &eta * &delta(ctx, c)).collect()
}

pub(crate) fn require_admissible(ctx: &FieldContext, a: u32, b: u32, c: u32) -> Result<()> {
    let cd = ctx.colors();
    for x in [a, b, c] {
        if !cd.is_color(x) {
            return Err(Error::NotAColor(x as i64, ctx.p()));
        }
    }
    if cd.admissible(a, b, c) {
        Ok(())
    } else {
        Err(Error::Inadmissible(a, b, c))
    }
}

/// Theta network with edges `a, b, c`.
pub fn theta(ctx: &FieldContext, a: u32, b: u32, c: u32) -> Result<Scalar> {
    require_admissible(ctx, a, b, c)?;
    let mut key = [a, b, c];
    key.sort_unstable();
    if let Some(v) = ctx.memo.theta.read().unwrap().get(&key) {
        return Ok(v.clone());
    }
    let x = (a + b - c) / 2;
    let y = (b + c - a) / 2;
    let z = (c + a - b) / 2;
    let num = qfact(ctx, x + y + z + 1) * qfact(ctx, x) * qfact(ctx, y) * qfact(ctx, z);
    let den = qfact(ctx, x + y) * qfact(ctx, y + z) * qfact(ctx, z + x);
    let mut v = num.try_div(&den)?;
    if (x + y + z) % 2 == 1 {
        v = -v;
    }
    ctx.memo.theta.write().unwrap().insert(key, v.clone());
    Ok(v)
}

/// Tetrahedral network. Edges `t` and `c` are opposite; the vertices are
/// `{t,i1,j1}`, `{t,i2,j2}`, `{c,i1,i2}` and `{c,j1,j2}`.
pub fn tet(ctx: &FieldContext, t: u32, i1: u32, i2: u32, c: u32, j1: u32, j2: u32) -> Result<Scalar> {
    let verts = [[t, i1, j1], [t, i2, j2], [c, i1, i2], [c, j1, j2]];
    for v in &verts {
        require_admissible(ctx, v[0], v[1], v[2])?;
    }
    let key = [t, i1, i2, c, j1, j2];
    if let Some(v) = ctx.memo.tet.read().unwrap().get(&key) {
        return Ok(v.clone());
    }
    let a: Vec<u32> = verts.iter().map(|v| v.iter().sum::<u32>() / 2).collect();
    let b = [(i1 + i2 + j1 + j2) / 2, (t + c + i2 + j1) / 2, (t + c + i1 + j2) / 2];
    let mut inner = ctx.one();
    for &ai in &a {
        for &bj in &b {
            inner *= &qfact(ctx, bj - ai);
        }
    }
    let mut edges = ctx.one();
    for e in key {
        edges *= &qfact(ctx, e);
    }
    let lo = *a.iter().max().unwrap();
    let hi = *b.iter().min().unwrap();
    let mut sum = ctx.zero();
    for s in lo..=hi {
        let mut den = ctx.one();
        for &ai in &a {
            den *= &qfact(ctx, s - ai);
        }
        for &bj in &b {
            den *= &qfact(ctx, bj - s);
        }
        let term = qfact(ctx, s + 1).try_div(&den)?;
        if s % 2 == 1 {
            sum -= &term;
        } else {
            sum += &term;
        }
    }
    let v = (inner * sum).try_div(&edges)?;
    ctx.memo.tet.write().unwrap().insert(key, v.clone());
    Ok(v)
}

/// Dimension count for a genus-`g` surface with one point colored `c`:
/// admissible colorings of a caterpillar spine with `g` tadpoles.
pub fn verlinde_dim(ctx: &FieldContext, g: u32, c: u32) -> u128 {
    let cd = ctx.colors();
    if !cd.is_color(c) {
        return 0;
    }
    if g == 0 {
        return u128::from(c == 0);
    }
    let cols = cd.colors();
    let tadpole: Vec<u128> = cols.iter().map(|&y| cd.adiag(y).len() as u128).collect();
    // f[z] = colorings of a chain of k tadpoles hanging off an edge colored z
    let mut f = tadpole.clone();
    for _ in 1..g {
        f = cols
            .iter()
            .map(|&z| {
                let mut total = 0;
                for (iy, &y) in cols.iter().enumerate() {
                    for (iw, &w) in cols.iter().enumerate() {
                        if cd.admissible(z, y, w) {
                            total += tadpole[iy] * f[iw];
                        }
                    }
                }
                total
            })
            .collect();
    }
    f[cd.index_of(c).unwrap()]
}

#[cfg(test)]
mod tests;
