//! Monic polynomials in `x` with field coefficients.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalars::{FieldContext, Scalar, ScalarRepr};

/// Monic polynomial, coefficients lowest degree first.
#[derive(Clone, PartialEq, Eq)]
pub struct CharPoly {
    coeffs: Vec<Scalar>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharPolyRepr {
    pub var: String,
    pub monic: bool,
    pub coeffs: Vec<ScalarRepr>,
}

impl CharPoly {
    /// Builds from coefficients (lowest first); the last one must be 1.
    pub fn from_coeffs(coeffs: Vec<Scalar>) -> Result<Self> {
        match coeffs.last() {
            Some(c) if c.is_one() => Ok(CharPoly { coeffs }),
            _ => Err(Error::Malformed("polynomial is not monic".into())),
        }
    }

    pub fn one(ctx: &FieldContext) -> Self {
        CharPoly { coeffs: vec![ctx.one()] }
    }

    /// `x − r`.
    pub fn linear(ctx: &FieldContext, root: &Scalar) -> Self {
        CharPoly { coeffs: vec![-root, ctx.one()] }
    }

    /// `x^k − r`.
    pub fn binomial(ctx: &FieldContext, k: usize, r: &Scalar) -> Self {
        let mut coeffs = vec![ctx.zero(); k + 1];
        coeffs[0] = -r;
        coeffs[k] = ctx.one();
        CharPoly { coeffs }
    }

    pub fn from_roots(ctx: &FieldContext, roots: &[Scalar]) -> Self {
        expand_product(&roots.iter().map(|r| Self::linear(ctx, r)).collect::<Vec<_>>())
            .unwrap_or_else(|| Self::one(ctx))
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn constant_term(&self) -> &Scalar {
        &self.coeffs[0]
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = self.coeffs.last().unwrap().clone();
        for c in self.coeffs.iter().rev().skip(1) {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn mul(&self, other: &Self) -> Self {
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += &(a * b);
                }
            }
        }
        CharPoly { coeffs: out }
    }

    /// Remainder of division by a monic polynomial.
    pub fn rem(&self, divisor: &Self) -> Vec<Scalar> {
        let mut r = self.coeffs.clone();
        let d = divisor.degree();
        while r.len() > d {
            let lead = r.pop().unwrap();
            if lead.is_zero() {
                continue;
            }
            let shift = r.len() - d;
            for (j, c) in divisor.coeffs[..d].iter().enumerate() {
                r[shift + j] -= &(&lead * c);
            }
        }
        r
    }

    /// Exact quotient by a monic divisor, if it divides.
    pub fn divide(&self, divisor: &Self) -> Option<Self> {
        if divisor.degree() > self.degree() {
            return None;
        }
        let mut r = self.coeffs.clone();
        let d = divisor.degree();
        let zero = r[0].zero_like();
        let mut q = vec![zero; self.degree() - d + 1];
        for k in (0..q.len()).rev() {
            let lead = r[k + d].clone();
            if lead.is_zero() {
                continue;
            }
            for (j, c) in divisor.coeffs.iter().enumerate() {
                r[k + j] -= &(&lead * c);
            }
            q[k] = lead;
        }
        r.iter().all(Scalar::is_zero).then_some(CharPoly { coeffs: q })
    }

    pub fn is_divisible_by(&self, divisor: &Self) -> bool {
        self.rem(divisor).iter().all(Scalar::is_zero)
    }

    /// Power sums `tr(M^k)` for `k = 1..=count` of any matrix with this
    /// characteristic polynomial, by Newton's identities.
    pub fn power_traces(&self, count: usize) -> Vec<Scalar> {
        let n = self.degree();
        let c = &self.coeffs;
        let zero = c[0].zero_like();
        let mut p: Vec<Scalar> = Vec::with_capacity(count + 1);
        p.push(zero.clone());
        for k in 1..=count {
            // p_k + c_{n-1} p_{k-1} + … + c_{n-k+1} p_1 + k c_{n-k} = 0   (k ≤ n)
            // p_k + c_{n-1} p_{k-1} + … + c_0 p_{k-n} = 0                  (k > n)
            let mut s = zero.clone();
            for i in 1..k.min(n + 1) {
                s += &(&c[n - i] * &p[k - i]);
            }
            if k <= n {
                s += &c[n - k].mul_int(k as i64);
            }
            p.push(-s);
        }
        p.remove(0);
        p
    }

    /// Coefficients `(r_1, …, r_n)` with `s_k = r_1 s_{k−1} + … + r_n s_{k−n}`.
    pub fn recursion_coefficients(&self) -> Vec<Scalar> {
        let n = self.degree();
        (1..=n).map(|i| -&self.coeffs[n - i]).collect()
    }

    /// The polynomial in `x^k`: `f(x) ↦ f(x^k)`.
    pub fn compose_power(&self, k: usize) -> Self {
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; self.degree() * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i * k] = c.clone();
        }
        CharPoly { coeffs: out }
    }

    pub fn to_repr(&self) -> CharPolyRepr {
        CharPolyRepr { var: "x".into(), monic: true, coeffs: self.coeffs.iter().map(Scalar::to_repr).collect() }
    }

    pub fn from_repr(ctx: &FieldContext, r: &CharPolyRepr) -> Result<Self> {
        let coeffs = r.coeffs.iter().map(|c| ctx.scalar_from_repr(c)).collect::<Result<Vec<_>>>()?;
        Self::from_coeffs(coeffs)
    }
}

/// Exact evaluation at `candidate`; true when it is a root.
pub fn charpoly_root_check(cp: &CharPoly, candidate: &Scalar) -> bool {
    cp.eval(candidate).is_zero()
}

/// Product of monic factors; `None` for an empty list.
pub fn expand_product(factors: &[CharPoly]) -> Option<CharPoly> {
    let (first, rest) = factors.split_first()?;
    Some(rest.iter().fold(first.clone(), |acc, f| acc.mul(f)))
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mono = match k {
                0 => String::new(),
                1 => "x".into(),
                _ => format!("x^{k}"),
            };
            if mono.is_empty() {
                write!(f, "({c})")?;
            } else if c.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "({c})·{mono}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CharPoly({self})")
    }
}

/// `det(x·I − M)` via reduction to upper Hessenberg form.
pub(super) fn charpoly_hessenberg(mut h: Vec<Vec<Scalar>>, zero: &Scalar) -> CharPoly {
    let n = h.len();
    let one = zero.pow(0).expect("x^0");
    for m in 1..n.saturating_sub(1) {
        let Some(piv) = (m..n).find(|&i| !h[i][m - 1].is_zero()) else {
            continue;
        };
        if piv != m {
            h.swap(piv, m);
            for row in h.iter_mut() {
                row.swap(piv, m);
            }
        }
        let inv = h[m][m - 1].inv().expect("pivot is nonzero");
        for i in m + 1..n {
            if h[i][m - 1].is_zero() {
                continue;
            }
            let u = &h[i][m - 1] * &inv;
            let (head, tail) = h.split_at_mut(i);
            for (t, x) in tail[0].iter_mut().zip(&head[m]) {
                if !x.is_zero() {
                    *t -= &(&u * x);
                }
            }
            for row in h.iter_mut() {
                if !row[i].is_zero() {
                    let d = &u * &row[i];
                    row[m] += &d;
                }
            }
        }
    }
    // p_m = (x − h_mm) p_{m−1} − Σ_i (h_{m,m−1}…h_{m−i+1,m−i}) h_{m−i,m} p_{m−i−1}
    let mut polys: Vec<Vec<Scalar>> = vec![vec![one.clone()]];
    for m in 0..n {
        let prev = &polys[m];
        let mut next = vec![zero.clone(); m + 2];
        for (k, c) in prev.iter().enumerate() {
            next[k + 1] += c;
            next[k] -= &(c * &h[m][m]);
        }
        let mut t = one.clone();
        for i in 1..=m {
            t = &t * &h[m - i + 1][m - i];
            if t.is_zero() {
                break;
            }
            let f = &t * &h[m - i][m];
            if f.is_zero() {
                continue;
            }
            for (k, c) in polys[m - i].iter().enumerate() {
                next[k] -= &(&f * c);
            }
        }
        polys.push(next);
    }
    CharPoly { coeffs: polys.pop().unwrap() }
}
