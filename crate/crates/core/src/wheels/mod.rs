//! n-wheels: cyclic sequences of linear maps `u_i : U_i → U_{i+1 mod n}`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{ExactMatrix, MatrixRepr};
use crate::scalars::FieldContext;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Slot {
    pub dim: usize,
    pub label: String,
}

#[derive(Clone, Debug)]
pub struct NWheel {
    slots: Vec<Slot>,
    maps: Vec<ExactMatrix>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WheelRepr {
    pub n: usize,
    pub slots: Vec<Slot>,
    pub maps: Vec<MatrixRepr>,
}

/// A cyclic orbit of color vectors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColorOrbit {
    /// Lexicographically least member.
    pub representative: Vec<u32>,
    /// Least `e > 0` with `σ^e(â) = â`.
    pub period: usize,
    pub size: usize,
}

impl NWheel {
    pub fn new(slots: Vec<Slot>, maps: Vec<ExactMatrix>) -> Result<Self> {
        let n = slots.len();
        if n == 0 || maps.len() != n {
            return Err(Error::WheelShape(format!("{} slots but {} maps", n, maps.len())));
        }
        for (i, m) in maps.iter().enumerate() {
            let next = &slots[(i + 1) % n];
            if m.cols() != slots[i].dim || m.rows() != next.dim {
                return Err(Error::WheelShape(format!(
                    "map {i} is {}x{}, expected {}x{}",
                    m.rows(),
                    m.cols(),
                    next.dim,
                    slots[i].dim
                )));
            }
        }
        Ok(NWheel { slots, maps })
    }

    /// All slots zero-dimensional.
    pub fn zero(ctx: &FieldContext, n: usize) -> Self {
        let slots = (0..n).map(|i| Slot { dim: 0, label: format!("U{i}") }).collect();
        NWheel { slots, maps: vec![ExactMatrix::zeros(ctx, 0, 0); n] }
    }

    /// A wheel of `1×1` maps.
    pub fn scalars(ctx: &FieldContext, values: Vec<crate::Scalar>, labels: Vec<String>) -> Self {
        let slots = labels.into_iter().map(|label| Slot { dim: 1, label }).collect();
        let maps = values.into_iter().map(|v| ExactMatrix::scalar(ctx, v)).collect();
        NWheel { slots, maps }
    }

    pub fn len(&self) -> usize {
        self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.slots.iter().all(|s| s.dim == 0)
    }

    pub fn slots(&self) -> &[Slot] {
        &self.slots
    }

    pub fn maps(&self) -> &[ExactMatrix] {
        &self.maps
    }

    /// `û_i = u_{i−1} ∘ … ∘ u_{i+1} ∘ u_i`, an endomorphism of `U_i`.
    pub fn hat(&self, i: usize) -> Result<ExactMatrix> {
        let n = self.len();
        let mut acc = self.maps[i % n].clone();
        for k in 1..n {
            acc = self.maps[(i + k) % n].mul(&acc)?;
        }
        Ok(acc)
    }

    /// Restricts every slot to the stable image of its `û_i`.
    pub fn flat(&self) -> Result<NWheel> {
        let n = self.len();
        let mut bases = Vec::with_capacity(n);
        for i in 0..n {
            let h = self.hat(i)?;
            let d = h.rows();
            let power = h.pow(d as u32)?;
            let idx = power.independent_columns();
            if idx.is_empty() {
                return Ok(NWheel::zero_like(self));
            }
            bases.push(power.select_columns(&idx));
        }
        let mut maps = Vec::with_capacity(n);
        for i in 0..n {
            let image = self.maps[i].mul(&bases[i])?;
            maps.push(bases[(i + 1) % n].solve(&image)?);
        }
        let slots =
            self.slots.iter().zip(&bases).map(|(s, b)| Slot { dim: b.cols(), label: s.label.clone() }).collect();
        NWheel::new(slots, maps)
    }

    fn zero_like(w: &NWheel) -> NWheel {
        let z = w.maps[0].like(0, 0);
        let slots = w.slots.iter().map(|s| Slot { dim: 0, label: s.label.clone() }).collect();
        NWheel { slots, maps: vec![z; w.len()] }
    }

    /// Slotwise and mapwise tensor product.
    pub fn tensor(&self, other: &NWheel) -> Result<NWheel> {
        if self.len() != other.len() {
            return Err(Error::WheelShape(format!("lengths {} and {} differ", self.len(), other.len())));
        }
        if self.is_zero() || other.is_zero() {
            return Ok(NWheel::zero_like(self));
        }
        let slots = self
            .slots
            .iter()
            .zip(&other.slots)
            .map(|(a, b)| Slot { dim: a.dim * b.dim, label: format!("{}⊗{}", a.label, b.label) })
            .collect();
        let maps = self.maps.iter().zip(&other.maps).map(|(a, b)| a.tensor(b)).collect();
        NWheel::new(slots, maps)
    }

    /// Re-indexes so that new slot `i` is old slot `i + k`.
    pub fn shift(&self, k: usize) -> NWheel {
        let n = self.len();
        let slots = (0..n).map(|i| self.slots[(i + k) % n].clone()).collect();
        let maps = (0..n).map(|i| self.maps[(i + k) % n].clone()).collect();
        NWheel { slots, maps }
    }

    /// The block-cyclic endomorphism of `⊕ U_i` sending slot `i` to slot `i+1` by `u_i`.
    pub fn s_operator(&self, ctx: &FieldContext) -> ExactMatrix {
        let n = self.len();
        let offsets: Vec<usize> = self
            .slots
            .iter()
            .scan(0, |acc, s| {
                let o = *acc;
                *acc += s.dim;
                Some(o)
            })
            .collect();
        let total: usize = self.slots.iter().map(|s| s.dim).sum();
        let mut out = ExactMatrix::zeros(ctx, total, total);
        for i in 0..n {
            let (ro, co) = (offsets[(i + 1) % n], offsets[i]);
            let m = &self.maps[i];
            for r in 0..m.rows() {
                for c in 0..m.cols() {
                    let x = m.get(r, c);
                    if !x.is_zero() {
                        out.set(ro + r, co + c, x.clone());
                    }
                }
            }
        }
        let labels = self.slots.iter().flat_map(|s| (0..s.dim).map(move |k| format!("{}[{k}]", s.label))).collect();
        out.with_basis(labels).expect("label count matches")
    }

    pub fn to_repr(&self) -> WheelRepr {
        WheelRepr {
            n: self.len(),
            slots: self.slots.clone(),
            maps: self.maps.iter().map(ExactMatrix::to_repr).collect(),
        }
    }

    pub fn from_repr(ctx: &FieldContext, r: &WheelRepr) -> Result<Self> {
        if r.n != r.slots.len() {
            return Err(Error::Malformed("wheel length does not match slot count".into()));
        }
        let maps = r.maps.iter().map(|m| ExactMatrix::from_repr(ctx, m)).collect::<Result<Vec<_>>>()?;
        NWheel::new(r.slots.clone(), maps)
    }
}

/// The wheel `𝕎({g_i})` on `w` slots, folded to its first `period` slots.
///
/// Slot `i` is `V_{−i} ⊗ V_{−i+1} ⊗ … ⊗ V_{−i+w−1}` (indices mod `w`) and
/// `w_i(α_first ⊗ … ⊗ α_last) = g_{−i−1}(α_last) ⊗ α_first ⊗ …`.
pub fn w_construction(ctx: &FieldContext, gs: &[ExactMatrix], period: usize) -> Result<NWheel> {
    let w = gs.len();
    if w == 0 || period == 0 || w % period != 0 {
        return Err(Error::WheelShape(format!("cannot fold {w} factors to period {period}")));
    }
    for (i, g) in gs.iter().enumerate() {
        if !g.is_square() {
            return Err(Error::WheelShape(format!("factor {i} is not an endomorphism")));
        }
        if gs[(i + period) % w] != *g {
            return Err(Error::WheelShape(format!("factors are not {period}-periodic")));
        }
    }
    let dims: Vec<usize> = gs.iter().map(ExactMatrix::rows).collect();
    let factor = |i: usize, k: usize| (k + w - i % w) % w;
    let slot_dims = |i: usize| (0..w).map(|k| dims[factor(i, k)]).collect::<Vec<_>>();
    let total: usize = dims.iter().product();

    let mut slots = Vec::with_capacity(period);
    let mut maps = Vec::with_capacity(period);
    for i in 0..period {
        let src = slot_dims(i);
        let dst = slot_dims(i + 1);
        let label = (0..w).map(|k| format!("V{}", factor(i, k))).collect::<Vec<_>>().join("⊗");
        slots.push(Slot { dim: total, label });
        let g = &gs[factor(i, w - 1)];
        let mut m = ExactMatrix::zeros(ctx, total, total);
        if total > 0 {
            for col in 0..total {
                let x = unrank(col, &src);
                let (last, rest) = x.split_last().unwrap();
                for y in 0..g.rows() {
                    let v = g.get(y, *last);
                    if v.is_zero() {
                        continue;
                    }
                    let mut target = Vec::with_capacity(w);
                    target.push(y);
                    target.extend_from_slice(rest);
                    m.set(rank(&target, &dst), col, v.clone());
                }
            }
        }
        maps.push(m);
    }
    NWheel::new(slots, maps)
}

fn unrank(mut idx: usize, dims: &[usize]) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for k in (0..dims.len()).rev() {
        out[k] = idx % dims[k];
        idx /= dims[k];
    }
    out
}

fn rank(x: &[usize], dims: &[usize]) -> usize {
    x.iter().zip(dims).fold(0, |acc, (&xi, &d)| acc * d + xi)
}

/// Cyclic rotation `σ(a_0, …, a_{n−1}) = (a_{n−1}, a_0, …, a_{n−2})`.
pub fn rotate(a: &[u32]) -> Vec<u32> {
    let mut v = Vec::with_capacity(a.len());
    if let Some((last, init)) = a.split_last() {
        v.push(*last);
        v.extend_from_slice(init);
    }
    v
}

pub fn period(a: &[u32]) -> usize {
    let n = a.len();
    (1..=n).find(|&e| n % e == 0 && (0..n).all(|i| a[i] == a[(i + e) % n])).unwrap_or(n)
}

/// One lexicographically least representative per cyclic orbit of `𝒞^w`.
pub fn orbit_reps(ctx: &FieldContext, w: usize) -> Vec<ColorOrbit> {
    let colors = ctx.colors().colors();
    let k = colors.len();
    let mut out = Vec::new();
    let mut idx = vec![0usize; w];
    loop {
        let a: Vec<u32> = idx.iter().map(|&i| colors[i]).collect();
        let mut least = true;
        let mut r = a.clone();
        for _ in 1..w {
            r = rotate(&r);
            if r < a {
                least = false;
                break;
            }
        }
        if least {
            let per = period(&a);
            out.push(ColorOrbit { representative: a, period: per, size: per });
        }
        // odometer increment, last position fastest
        let mut pos = w;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < k {
                break;
            }
            idx[pos] = 0;
        }
    }
}
