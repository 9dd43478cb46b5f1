//! The knot calculus: modules `Z_p(K,c)` of expression-built knots.

pub mod cache;
mod expr;
mod formulas;
mod satellite;

use std::collections::HashMap;
use std::path::PathBuf;
use std::sync::{Arc, Mutex};

use serde::{Deserialize, Serialize};

pub use expr::{KnotExpr, PatternId};
pub use formulas::{
    brackets_to_traces, connect_sum, dk_pattern_matrix, double_module, eta_hopf_matrix, f10_pattern, gamma, mu_pow,
    traces_to_brackets, winding_zero_satellite,
};
pub use satellite::{pattern_wheels, satellite_main, satellite_meridian_sum};

use crate::error::{Error, Result};
use crate::linalg::{CharPoly, ExactMatrix, MatrixRepr};
use crate::recoupling::{delta, verlinde_dim};
use crate::scalars::{FieldContext, Scalar, ScalarRepr};

/// A flat module `Z(K,c)`: an invertible matrix, or the empty one.
#[derive(Clone, Debug)]
pub struct TVModule {
    color: u32,
    matrix: ExactMatrix,
    note: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TVModuleRepr {
    pub color: u32,
    pub note: String,
    /// Absent when the module is not available at this color.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<MatrixRepr>,
}

impl TVModule {
    /// Applies `flat` to `m`.
    pub fn flattened(color: u32, m: ExactMatrix, note: String) -> Result<Self> {
        Ok(TVModule { color, matrix: m.flat()?, note })
    }

    pub fn color(&self) -> u32 {
        self.color
    }

    pub fn matrix(&self) -> &ExactMatrix {
        &self.matrix
    }

    /// Which formula produced the module.
    pub fn note(&self) -> &str {
        &self.note
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn charpoly(&self) -> Result<CharPoly> {
        self.matrix.charpoly()
    }

    /// `Trace(Z^d)` for `d = 1..=count`, from the characteristic polynomial.
    pub fn power_traces(&self, count: usize) -> Result<Vec<Scalar>> {
        Ok(self.charpoly()?.power_traces(count))
    }

    pub fn to_repr(&self) -> TVModuleRepr {
        TVModuleRepr { color: self.color, note: self.note.clone(), matrix: Some(self.matrix.to_repr()) }
    }
}

/// Everything later formulas need to know about a knot used as a companion.
#[derive(Clone, Debug)]
pub struct CompanionData {
    expr: String,
    p: u32,
    colors: Vec<u32>,
    modules: Vec<std::result::Result<TVModule, String>>,
    traces: Option<Vec<Scalar>>,
    brackets: Option<Vec<Scalar>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompanionRepr {
    pub expr: String,
    pub p: u32,
    pub root_order: u32,
    pub modules: Vec<TVModuleRepr>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub traces: Option<Vec<ScalarRepr>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub brackets: Option<Vec<ScalarRepr>>,
}

impl CompanionData {
    /// Builds from per-color modules (or the reason one is missing); the
    /// trace and bracket vectors exist only when every color is present.
    pub fn new(ctx: &FieldContext, expr: String, modules: Vec<std::result::Result<TVModule, String>>) -> Result<Self> {
        let colors = ctx.colors().colors().to_vec();
        if modules.len() != colors.len() {
            return Err(Error::Dimension(format!("{} modules for {} colors", modules.len(), colors.len())));
        }
        let traces = modules
            .iter()
            .map(|m| m.as_ref().ok().map(|m| m.matrix.trace()).transpose())
            .collect::<Result<Option<Vec<_>>>>()?;
        let brackets = traces.as_ref().map(|t| traces_to_brackets(ctx, t));
        Ok(CompanionData { expr, p: ctx.p(), colors, modules, traces, brackets })
    }

    /// Canonical expression string.
    pub fn expr(&self) -> &str {
        &self.expr
    }

    pub fn module(&self, c: u32) -> Result<&TVModule> {
        let i = self.colors.binary_search(&c).map_err(|_| Error::NotAColor(i64::from(c), self.p))?;
        self.modules[i].as_ref().map_err(|why| Error::UnsupportedColoring(format!("{} at color {c}: {why}", self.expr)))
    }

    /// `C(a) = Trace Z(K,a)`, one entry per color.
    pub fn traces(&self) -> Result<&[Scalar]> {
        self.traces.as_deref().ok_or_else(|| self.missing())
    }

    /// Zero-writhe colored evaluations `C_t`.
    pub fn brackets(&self) -> Result<&[Scalar]> {
        self.brackets.as_deref().ok_or_else(|| self.missing())
    }

    fn missing(&self) -> Error {
        let c = self.modules.iter().position(|m| m.is_err()).map_or(0, |i| self.colors[i]);
        match self.module(c) {
            Err(e) => e,
            Ok(_) => Error::UnsupportedColoring(self.expr.clone()),
        }
    }

    pub fn cover_invariant(&self, d: usize) -> Result<Scalar> {
        require_positive(d)?;
        Ok(self.module(0)?.power_traces(d)?.pop().expect("d >= 1"))
    }

    /// `η Σ_c Δ_c Trace(Z(K,c)^d)`.
    pub fn branched_invariant(&self, ctx: &FieldContext, d: usize) -> Result<Scalar> {
        require_positive(d)?;
        let mut sum = ctx.zero();
        for &c in &self.colors {
            let tr = self.module(c)?.power_traces(d)?.pop().expect("d >= 1");
            sum += &(&delta(ctx, c) * &tr);
        }
        Ok(&ctx.eta() * &sum)
    }

    pub fn genus_bound_check(&self, ctx: &FieldContext, c: u32, g: u32) -> Result<GenusReport> {
        let rank = self.module(c)?.matrix.rank();
        let bound = verlinde_dim(ctx, g, c);
        Ok(GenusReport { rank, bound, satisfied: rank as u128 <= bound })
    }

    pub fn to_repr(&self, ctx: &FieldContext) -> CompanionRepr {
        let modules = self
            .modules
            .iter()
            .zip(&self.colors)
            .map(|(m, &c)| match m {
                Ok(m) => m.to_repr(),
                Err(why) => TVModuleRepr { color: c, note: why.clone(), matrix: None },
            })
            .collect();
        let reprs = |v: &Option<Vec<Scalar>>| v.as_ref().map(|v| v.iter().map(Scalar::to_repr).collect());
        CompanionRepr {
            expr: self.expr.clone(),
            p: ctx.p(),
            root_order: ctx.root_order(),
            modules,
            traces: reprs(&self.traces),
            brackets: reprs(&self.brackets),
        }
    }

    pub fn from_repr(ctx: &FieldContext, r: &CompanionRepr) -> Result<Self> {
        if r.p != ctx.p() || r.root_order != ctx.root_order() {
            return Err(Error::Malformed(format!("data is for p = {}, N = {}", r.p, r.root_order)));
        }
        let modules = r
            .modules
            .iter()
            .map(|m| match &m.matrix {
                Some(x) => {
                    Ok(Ok(TVModule { color: m.color, matrix: ExactMatrix::from_repr(ctx, x)?, note: m.note.clone() }))
                }
                None => Ok(Err(m.note.clone())),
            })
            .collect::<Result<Vec<_>>>()?;
        if r.modules.iter().map(|m| m.color).ne(ctx.colors().colors().iter().copied()) {
            return Err(Error::Malformed("module colors do not match the level".into()));
        }
        let data = CompanionData::new(ctx, r.expr.clone(), modules)?;
        let back = |v: &Option<Vec<ScalarRepr>>| {
            v.as_ref().map(|v| v.iter().map(|s| ctx.scalar_from_repr(s)).collect::<Result<Vec<_>>>()).transpose()
        };
        if back(&r.traces)? != data.traces || back(&r.brackets)? != data.brackets {
            return Err(Error::Malformed("stored trace data disagrees with the modules".into()));
        }
        Ok(data)
    }
}

fn require_positive(d: usize) -> Result<()> {
    if d == 0 {
        Err(Error::InvalidConfiguration("cover degree must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// Outcome of comparing `rank Z(K,c)` with the genus-`g` dimension count.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GenusReport {
    pub rank: usize,
    pub bound: u128,
    pub satisfied: bool,
}

/// Evaluates knot expressions with an in-memory and an optional on-disk cache.
pub struct Engine<'a> {
    ctx: &'a FieldContext,
    cache_dir: Option<PathBuf>,
    memo: Mutex<HashMap<String, Arc<CompanionData>>>,
}

impl<'a> Engine<'a> {
    pub fn new(ctx: &'a FieldContext) -> Self {
        Engine { ctx, cache_dir: None, memo: Mutex::new(HashMap::new()) }
    }

    pub fn with_cache_dir(mut self, dir: impl Into<PathBuf>) -> Self {
        self.cache_dir = Some(dir.into());
        self
    }

    pub fn context(&self) -> &FieldContext {
        self.ctx
    }

    pub fn compute(&self, expr: &KnotExpr) -> Result<Arc<CompanionData>> {
        let key = expr.to_string();
        if let Some(hit) = self.memo.lock().unwrap().get(&key) {
            return Ok(hit.clone());
        }
        let data = match self.load(&key) {
            Some(d) => d,
            None => {
                let d = self.evaluate(expr, key.clone())?;
                self.store(&d)?;
                d
            }
        };
        let data = Arc::new(data);
        self.memo.lock().unwrap().insert(key, data.clone());
        Ok(data)
    }

    fn cache_key(&self, expr: &str) -> String {
        cache::key(expr, self.ctx.p(), self.ctx.root_order())
    }

    /// Unreadable or stale entries are ignored and later overwritten.
    fn load(&self, expr: &str) -> Option<CompanionData> {
        let dir = self.cache_dir.as_ref()?;
        let body = cache::read(dir, &self.cache_key(expr))?;
        let repr: CompanionRepr = serde_json::from_str(&body).ok()?;
        (repr.expr == expr).then_some(())?;
        CompanionData::from_repr(self.ctx, &repr).ok()
    }

    fn store(&self, data: &CompanionData) -> Result<()> {
        if let Some(dir) = &self.cache_dir {
            let body = serde_json::to_string(&data.to_repr(self.ctx))?;
            cache::write(dir, &self.cache_key(&data.expr), &body)?;
        }
        Ok(())
    }

    fn evaluate(&self, expr: &KnotExpr, key: String) -> Result<CompanionData> {
        let ctx = self.ctx;
        let colors = ctx.colors().colors().to_vec();
        let per_color = |f: &dyn Fn(u32) -> Result<TVModule>| -> Result<Vec<std::result::Result<TVModule, String>>> {
            colors
                .iter()
                .map(|&c| match f(c) {
                    Ok(m) => Ok(Ok(m)),
                    Err(Error::UnsupportedColoring(why)) => Ok(Err(why)),
                    Err(e) => Err(e),
                })
                .collect()
        };
        let modules = match expr {
            KnotExpr::Unknot => per_color(&|c| {
                let n = usize::from(c == 0);
                TVModule::flattened(c, ExactMatrix::identity(ctx, n).with_basis(vec!["1".into(); n])?, "unknot".into())
            })?,
            KnotExpr::Double(k, companion) => {
                let comp = self.compute(companion)?;
                per_color(&|c| double_module(ctx, *k, &comp, c))?
            }
            KnotExpr::Sum(a, b) => {
                let (a, b) = (self.compute(a)?, self.compute(b)?);
                per_color(&|c| connect_sum(ctx, &a, &b, c))?
            }
            KnotExpr::Sat(companion, pattern) => {
                let comp = self.compute(companion)?;
                per_color(&|c| match pattern {
                    PatternId::F10 if c == 0 => f10_pattern(ctx, &comp),
                    _ if pattern.uncolored_only() && c != 0 => Err(Error::UnsupportedColoring(format!(
                        "pattern {pattern} is only available with meridian color 0"
                    ))),
                    _ => satellite_main(ctx, &comp, *pattern, c),
                })?
            }
        };
        CompanionData::new(ctx, key, modules)
    }

    pub fn module(&self, expr: &KnotExpr, c: u32) -> Result<TVModule> {
        self.compute(expr)?.module(c).cloned()
    }

    /// `Trace Z(K,0)^d`, the invariant of the `d`-fold cyclic cover.
    pub fn cover_invariant(&self, expr: &KnotExpr, d: usize) -> Result<Scalar> {
        self.compute(expr)?.cover_invariant(d)
    }

    /// Invariant of the `d`-fold branched cyclic cover.
    pub fn branched_invariant(&self, expr: &KnotExpr, d: usize) -> Result<Scalar> {
        self.compute(expr)?.branched_invariant(self.ctx, d)
    }

    pub fn genus_bound_check(&self, expr: &KnotExpr, c: u32, g: u32) -> Result<GenusReport> {
        self.compute(expr)?.genus_bound_check(self.ctx, c, g)
    }
}

/// Evaluates `expr` without a persistent cache.
pub fn compute_all(ctx: &FieldContext, expr: &KnotExpr) -> Result<CompanionData> {
    Engine::new(ctx).compute(expr).map(|d| (*d).clone())
}

pub fn cover_invariant(ctx: &FieldContext, expr: &KnotExpr, d: usize) -> Result<Scalar> {
    Engine::new(ctx).cover_invariant(expr, d)
}

pub fn branched_invariant(ctx: &FieldContext, expr: &KnotExpr, d: usize) -> Result<Scalar> {
    Engine::new(ctx).branched_invariant(expr, d)
}

pub fn genus_bound_check(ctx: &FieldContext, expr: &KnotExpr, c: u32, g: u32) -> Result<GenusReport> {
    Engine::new(ctx).genus_bound_check(expr, c, g)
}

/// `Z(U,c)`: the `1×1` identity at `c = 0`, empty otherwise.
pub fn unknot_module(ctx: &FieldContext, c: u32) -> Result<TVModule> {
    compute_all(ctx, &KnotExpr::Unknot)?.module(c).cloned()
}
