//! Closed formulas: twisted doubles, winding-zero satellites, connected
//! sums, the F10 pattern and the trace/bracket basis change.

use super::{CompanionData, TVModule};
use crate::error::Result;
use crate::linalg::ExactMatrix;
use crate::recoupling::{delta, hopf, mu, tet, theta};
use crate::scalars::{FieldContext, Scalar};

/// `μ_t^k` for any integer `k`, without inverting.
pub fn mu_pow(ctx: &FieldContext, t: u32, k: i64) -> Scalar {
    let n = i128::from(ctx.root_order());
    let t = i128::from(t);
    let e = (i128::from(k) * (t * t + 2 * t)).rem_euclid(n) as i64;
    let s = if t % 2 == 1 && k % 2 != 0 { ctx.int(-1) } else { ctx.one() };
    &s * &ctx.a_pow(e)
}

/// The matrix over `i, j ∈ A(c)` with entries
/// `ηκ⁻³ (Δ_iμ_i/θ(i,i,c)) Σ_{t∈A(i,j)} μ_t^k w(t) Tet(t,i,i,c,j,j)/θ(i,j,t)`.
fn twisted_matrix(ctx: &FieldContext, k: i64, c: u32, weight: impl Fn(u32) -> Scalar) -> Result<ExactMatrix> {
    let cd = ctx.colors();
    let idx = cd.adiag(c);
    let pre = ctx.eta_kappa_inv3()?;
    let weights: Vec<Scalar> = cd.colors().iter().map(|&t| &mu_pow(ctx, t, k) * &weight(t)).collect();
    let mut rows = Vec::with_capacity(idx.len());
    for &i in &idx {
        let row_factor = (&(&pre * &delta(ctx, i)) * &mu(ctx, i)).try_div(&theta(ctx, i, i, c)?)?;
        let mut row = Vec::with_capacity(idx.len());
        for &j in &idx {
            let mut sum = ctx.zero();
            for t in cd.a_set(i, j) {
                let w = &weights[cd.index_of(t).expect("color")];
                if w.is_zero() {
                    continue;
                }
                let term = (w * &tet(ctx, t, i, i, c, j, j)?).try_div(&theta(ctx, i, j, t)?)?;
                sum += &term;
            }
            row.push(&row_factor * &sum);
        }
        rows.push(row);
    }
    let labels = idx.iter().map(|i| format!("e{i}")).collect();
    ExactMatrix::from_rows(ctx, rows)?.with_basis(labels)
}

/// `Z(C⋆D(k), c)` from the companion's bracket vector `C_t`.
pub fn double_module(ctx: &FieldContext, k: i64, companion: &CompanionData, c: u32) -> Result<TVModule> {
    let brackets = companion.brackets()?;
    let cd = ctx.colors();
    let m = twisted_matrix(ctx, k, c, |t| brackets[cd.index_of(t).expect("color")].clone())?;
    TVModule::flattened(c, m, format!("twisted double D({k})"))
}

/// The unflattened matrix of the `D(k)` pattern with its axis colored `a`.
pub fn dk_pattern_matrix(ctx: &FieldContext, k: i64, a: u32, c: u32) -> Result<ExactMatrix> {
    twisted_matrix(ctx, k, c, |t| hopf(ctx, a, t))
}

/// `Z(C⋆D(k), c)` as the trace-weighted sum of pattern matrices.
pub fn winding_zero_satellite(ctx: &FieldContext, companion: &CompanionData, k: i64, c: u32) -> Result<TVModule> {
    let traces = companion.traces()?;
    let cd = ctx.colors();
    let n = cd.adiag(c).len();
    let mut acc = ExactMatrix::zeros(ctx, n, n);
    for (&a, ca) in cd.colors().iter().zip(traces) {
        if !ca.is_zero() {
            acc = acc.add(&dk_pattern_matrix(ctx, k, a, c)?.scale(ca))?;
        }
    }
    let labels = cd.adiag(c).iter().map(|i| format!("e{i}")).collect();
    TVModule::flattened(c, acc.with_basis(labels)?, format!("winding-zero pattern D({k})"))
}

/// `⊕_{(i,j): {c,i,j} admissible} Z(K₁,i) ⊗ Z(K₂,j)`.
pub fn connect_sum(ctx: &FieldContext, k1: &CompanionData, k2: &CompanionData, c: u32) -> Result<TVModule> {
    let mut acc = ExactMatrix::zeros(ctx, 0, 0);
    for (i, j) in ctx.colors().pairs(c) {
        let (a, b) = (k1.module(i)?, k2.module(j)?);
        if a.dim() == 0 || b.dim() == 0 {
            continue;
        }
        acc = acc.dsum(&a.matrix().tensor(b.matrix()));
    }
    TVModule::flattened(c, acc, "connected sum".into())
}

/// The F10 coefficient
/// `γ_a = ((−1)^{a/2} A^{−a(a+2)/2} / θ(a,a,a)) Σ_t μ_tΔ_t Tet(t,a,a,a,a,a)/θ(a,a,t)`.
pub fn gamma(ctx: &FieldContext, a: u32) -> Result<Scalar> {
    let cd = ctx.colors();
    let mut sum = ctx.zero();
    for t in cd.a_set(a, a) {
        let term = (&(&mu(ctx, t) * &delta(ctx, t)) * &tet(ctx, t, a, a, a, a, a)?).try_div(&theta(ctx, a, a, t)?)?;
        sum += &term;
    }
    let a = i64::from(a);
    let sign = if (a / 2) % 2 == 1 { ctx.int(-1) } else { ctx.one() };
    let pre = (&sign * &ctx.a_pow(-a * (a + 2) / 2)).try_div(&theta(ctx, a as u32, a as u32, a as u32)?)?;
    Ok(&pre * &sum)
}

/// `Z(C⋆F10) = ⊕_{a∈𝒯} γ_a Z(C,a)`, flattened.
pub fn f10_pattern(ctx: &FieldContext, companion: &CompanionData) -> Result<TVModule> {
    let mut acc = ExactMatrix::zeros(ctx, 0, 0);
    for a in ctx.colors().tset() {
        let z = companion.module(a)?;
        if z.dim() > 0 {
            acc = acc.dsum(&z.matrix().scale(&gamma(ctx, a)?));
        }
    }
    TVModule::flattened(0, acc, "pattern F10".into())
}

/// Trace vector `C(a)` to bracket vector `C_t = Σ_a H(a,t) C(a)`.
pub fn traces_to_brackets(ctx: &FieldContext, traces: &[Scalar]) -> Vec<Scalar> {
    let cols = ctx.colors().colors();
    cols.iter()
        .map(|&t| {
            cols.iter()
                .zip(traces)
                .fold(ctx.zero(), |acc, (&a, x)| if x.is_zero() { acc } else { &acc + &(&hopf(ctx, a, t) * x) })
        })
        .collect()
}

/// Bracket vector to trace vector, `C(i) = η² Σ_j H(i,j) C_j`.
pub fn brackets_to_traces(ctx: &FieldContext, brackets: &[Scalar]) -> Vec<Scalar> {
    let e2 = ctx.eta_square();
    traces_to_brackets(ctx, brackets).into_iter().map(|x| &e2 * &x).collect()
}

/// The matrix `ηH` indexed by colors.
pub fn eta_hopf_matrix(ctx: &FieldContext) -> ExactMatrix {
    let cols = ctx.colors().colors();
    let eta = ctx.eta();
    let rows = cols.iter().map(|&a| cols.iter().map(|&t| &eta * &hopf(ctx, a, t)).collect()).collect();
    ExactMatrix::from_rows(ctx, rows).expect("square")
}
