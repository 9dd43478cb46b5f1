//! Brute-force Temperley–Lieb evaluation of small colored networks.
//!
//! Jones–Wenzl idempotents are expanded into planar diagrams and composed
//! directly, so the results are independent of the closed formulas.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::scalars::{FieldContext, Scalar};

/// Largest color the oracle accepts.
pub const ORACLE_MAX_COLOR: u32 = 4;

/// Closed networks the oracle can evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Network {
    Unknot(u32),
    Theta(u32, u32, u32),
    /// Same edge layout as [`crate::recoupling::tet`].
    Tet(u32, u32, u32, u32, u32, u32),
    Hopf(u32, u32),
    /// A colored unknot with a single positive curl.
    Curl(u32),
}

/// A planar matching between `n` bottom and `m` top points. Bottom points are
/// `0..n`, top points `n..n+m`, both left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Diagram {
    n: u8,
    m: u8,
    partner: Vec<u8>,
}

impl Diagram {
    fn identity(k: usize) -> Self {
        let mut partner = vec![0u8; 2 * k];
        for i in 0..k {
            partner[i] = (k + i) as u8;
            partner[k + i] = i as u8;
        }
        Diagram { n: k as u8, m: k as u8, partner }
    }

    /// `self` on top of `below`; returns the diagram and the number of closed loops.
    fn after(&self, below: &Diagram) -> (Diagram, usize) {
        debug_assert_eq!(below.m, self.n);
        let (n, mid, k) = (below.n as usize, below.m as usize, self.m as usize);
        let mut partner = vec![0u8; n + k];
        let mut seen_mid = vec![false; mid];

        // Walk from an outer point until reaching another outer point.
        // Location: Lower(point of `below`) or Upper(point of `self`).
        let walk = |start_lower: bool, start: usize, seen: &mut Vec<bool>| -> usize {
            let mut lower = start_lower;
            let mut pt = start;
            loop {
                if lower {
                    let q = below.partner[pt] as usize;
                    if q < n {
                        return q;
                    }
                    let j = q - n;
                    seen[j] = true;
                    // enter `self` at its bottom point j
                    lower = false;
                    pt = j;
                } else {
                    let q = self.partner[pt] as usize;
                    if q >= mid {
                        return n + (q - mid);
                    }
                    seen[q] = true;
                    lower = true;
                    pt = n + q;
                }
            }
        };

        for (b, slot) in partner[..n].iter_mut().enumerate() {
            *slot = walk(true, b, &mut seen_mid) as u8;
        }
        for t in 0..k {
            partner[n + t] = walk(false, mid + t, &mut seen_mid) as u8;
        }
        let mut loops = 0;
        for j in 0..mid {
            if seen_mid[j] {
                continue;
            }
            loops += 1;
            let mut cur = j;
            loop {
                seen_mid[cur] = true;
                let up = self.partner[cur] as usize;
                debug_assert!(up < mid);
                seen_mid[up] = true;
                let down = below.partner[n + up] as usize - n;
                if seen_mid[down] {
                    break;
                }
                cur = down;
            }
        }
        (Diagram { n: n as u8, m: k as u8, partner }, loops)
    }

    /// Side-by-side juxtaposition, `self` on the left.
    fn beside(&self, right: &Diagram) -> Diagram {
        let (n1, m1, n2, m2) = (self.n as usize, self.m as usize, right.n as usize, right.m as usize);
        let n = n1 + n2;
        let left_map = |x: usize| if x < n1 { x } else { n + (x - n1) };
        let right_map = |x: usize| if x < n2 { n1 + x } else { n + m1 + (x - n2) };
        let mut partner = vec![0u8; n + m1 + m2];
        for x in 0..n1 + m1 {
            partner[left_map(x)] = left_map(self.partner[x] as usize) as u8;
        }
        for x in 0..n2 + m2 {
            partner[right_map(x)] = right_map(right.partner[x] as usize) as u8;
        }
        Diagram { n: n as u8, m: (m1 + m2) as u8, partner }
    }

    /// Closes an endomorphism by joining top point `i` to bottom point `i`.
    fn closure_loops(&self) -> usize {
        let n = self.n as usize;
        let mut seen = vec![false; 2 * n];
        let mut loops = 0;
        for s in 0..2 * n {
            if seen[s] {
                continue;
            }
            loops += 1;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                let y = self.partner[x] as usize;
                seen[y] = true;
                x = if y < n { y + n } else { y - n };
            }
        }
        loops
    }
}

/// A linear combination of diagrams with the same boundary.
#[derive(Clone, Debug)]
struct Elem {
    n: usize,
    m: usize,
    terms: HashMap<Diagram, Scalar>,
}

/// Caches the idempotents and powers of the loop value for one context.
pub struct TlOracle<'a> {
    ctx: &'a FieldContext,
    loop_powers: Vec<Scalar>,
    jw: Vec<Elem>,
}

impl<'a> TlOracle<'a> {
    pub fn new(ctx: &'a FieldContext) -> Self {
        let delta = -(&ctx.a_pow(2) + &ctx.a_pow(-2));
        let mut loop_powers = vec![ctx.one()];
        for k in 1..=4 * ORACLE_MAX_COLOR as usize {
            loop_powers.push(&loop_powers[k - 1] * &delta);
        }
        let mut o = TlOracle { ctx, loop_powers, jw: Vec::new() };
        o.build_idempotents();
        o
    }

    fn loop_power(&self, k: usize) -> Scalar {
        self.loop_powers.get(k).cloned().unwrap_or_else(|| {
            let delta = &self.loop_powers[1];
            (0..k).fold(self.ctx.one(), |acc, _| &acc * delta)
        })
    }

    fn single(&self, d: Diagram) -> Elem {
        let (n, m) = (d.n as usize, d.m as usize);
        let mut terms = HashMap::new();
        terms.insert(d, self.ctx.one());
        Elem { n, m, terms }
    }

    fn identity(&self, k: usize) -> Elem {
        self.single(Diagram::identity(k))
    }

    fn add_scaled(&self, acc: &mut Elem, x: &Elem, s: &Scalar) {
        for (d, c) in &x.terms {
            let v = c * s;
            match acc.terms.get_mut(d) {
                Some(e) => *e += &v,
                None => {
                    acc.terms.insert(d.clone(), v);
                }
            }
        }
        acc.terms.retain(|_, c| !c.is_zero());
    }

    /// `top ∘ bottom`.
    fn compose(&self, top: &Elem, bottom: &Elem) -> Elem {
        assert_eq!(top.n, bottom.m);
        let mut terms: HashMap<Diagram, Scalar> = HashMap::new();
        for (d2, c2) in &top.terms {
            for (d1, c1) in &bottom.terms {
                let (d, loops) = d2.after(d1);
                let mut v = c1 * c2;
                if loops > 0 {
                    v = &v * &self.loop_power(loops);
                }
                match terms.get_mut(&d) {
                    Some(e) => *e += &v,
                    None => {
                        terms.insert(d, v);
                    }
                }
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Elem { n: bottom.n, m: top.m, terms }
    }

    fn tensor(&self, left: &Elem, right: &Elem) -> Elem {
        let mut terms = HashMap::new();
        for (d1, c1) in &left.terms {
            for (d2, c2) in &right.terms {
                terms.insert(d1.beside(d2), c1 * c2);
            }
        }
        Elem { n: left.n + right.n, m: left.m + right.m, terms }
    }

    fn trace(&self, x: &Elem) -> Scalar {
        assert_eq!(x.n, x.m);
        let mut acc = self.ctx.zero();
        for (d, c) in &x.terms {
            acc += &(c * &self.loop_power(d.closure_loops()));
        }
        acc
    }

    /// `e_i` on `k` strands: caps strands `i` and `i+1` below, cups them above.
    fn hook(&self, k: usize, i: usize) -> Elem {
        let mut d = Diagram::identity(k);
        d.partner[i] = (i + 1) as u8;
        d.partner[i + 1] = i as u8;
        d.partner[k + i] = (k + i + 1) as u8;
        d.partner[k + i + 1] = (k + i) as u8;
        self.single(d)
    }

    /// Wenzl's recursion, with loop values computed by the Chebyshev recursion.
    /// Stops early when a loop value vanishes, which happens only past the
    /// largest color of the level.
    fn build_idempotents(&mut self) {
        let delta = self.loop_powers[1].clone();
        let mut cheb = vec![self.ctx.one(), delta.clone()];
        for k in 2..=ORACLE_MAX_COLOR as usize + 1 {
            let next = &(&delta * &cheb[k - 1]) - &cheb[k - 2];
            cheb.push(next);
        }
        self.jw = vec![self.identity(0), self.identity(1)];
        for n in 1..ORACLE_MAX_COLOR as usize {
            let lifted = self.tensor(&self.jw[n], &self.identity(1));
            let mid = self.compose(&self.hook(n + 1, n - 1), &lifted);
            let sandwich = self.compose(&lifted, &mid);
            let Ok(ratio) = cheb[n - 1].try_div(&cheb[n]) else {
                break;
            };
            let mut next = lifted.clone();
            self.add_scaled(&mut next, &sandwich, &-ratio);
            self.jw.push(next);
        }
    }

    fn idempotent(&self, k: u32) -> &Elem {
        &self.jw[k as usize]
    }

    /// `a ⊗ b → c`, capping the innermost `(a+b−c)/2` strands.
    fn merge(&self, a: u32, b: u32, c: u32) -> Elem {
        let (a, b, c) = (a as usize, b as usize, c as usize);
        let x = (a + b - c) / 2;
        let n = a + b;
        let mut partner = vec![0u8; n + c];
        for k in 0..x {
            partner[a - 1 - k] = (a + k) as u8;
            partner[a + k] = (a - 1 - k) as u8;
        }
        let through: Vec<usize> = (0..a - x).chain(a + x..n).collect();
        for (t, &bpt) in through.iter().enumerate() {
            partner[bpt] = (n + t) as u8;
            partner[n + t] = bpt as u8;
        }
        self.single(Diagram { n: n as u8, m: c as u8, partner })
    }

    /// `c → a ⊗ b`, the reflection of [`Self::merge`].
    fn split(&self, c: u32, a: u32, b: u32) -> Elem {
        let m = self.merge(a, b, c);
        let d = m.terms.keys().next().unwrap();
        let (n, top) = (d.n as usize, d.m as usize);
        let flip = |x: usize| if x < n { top + x } else { x - n };
        let mut partner = vec![0u8; n + top];
        for x in 0..n + top {
            partner[flip(x)] = flip(d.partner[x] as usize) as u8;
        }
        self.single(Diagram { n: top as u8, m: n as u8, partner })
    }

    /// Positive crossing on strands `i, i+1` of `k`: `A·1 + A⁻¹·e_i`.
    fn crossing(&self, k: usize, i: usize) -> Elem {
        let mut x = self.identity(k);
        for c in x.terms.values_mut() {
            *c = self.ctx.a_pow(1);
        }
        let hook = self.hook(k, i);
        self.add_scaled(&mut x, &hook, &self.ctx.a_pow(-1));
        x
    }

    /// Bundle of `a` strands passing over a bundle of `b` strands, left to right.
    fn bundle_crossing(&self, a: u32, b: u32) -> Elem {
        let (a, b) = (a as usize, b as usize);
        let k = a + b;
        let mut acc = self.identity(k);
        for s in (0..a).rev() {
            for pos in s..s + b {
                acc = self.compose(&self.crossing(k, pos), &acc);
            }
        }
        acc
    }

    fn with_idempotents(&self, x: &Elem, below: &[u32]) -> Elem {
        let mut p = self.identity(0);
        for &c in below {
            p = self.tensor(&p, self.idempotent(c));
        }
        self.compose(x, &p)
    }

    fn check(&self, colors: &[u32]) -> Result<()> {
        let built = self.jw.len() as u32 - 1;
        match colors.iter().find(|&&c| c > built) {
            Some(c) if *c > ORACLE_MAX_COLOR => {
                Err(Error::OracleLimit(format!("color {c} exceeds {ORACLE_MAX_COLOR}")))
            }
            Some(c) => Err(Error::OracleLimit(format!("no Jones-Wenzl idempotent of size {c} at this level"))),
            None => Ok(()),
        }
    }

    fn check_triple(&self, a: u32, b: u32, c: u32) -> Result<()> {
        let parity = (a + b + c) % 2 == 0;
        if parity && a <= b + c && b <= a + c && c <= a + b {
            Ok(())
        } else {
            Err(Error::Inadmissible(a, b, c))
        }
    }

    pub fn evaluate(&self, net: &Network) -> Result<Scalar> {
        match *net {
            Network::Unknot(c) => {
                self.check(&[c])?;
                Ok(self.trace(self.idempotent(c)))
            }
            Network::Theta(a, b, c) => {
                self.check(&[a, b, c])?;
                self.check_triple(a, b, c)?;
                let up = self.compose(&self.split(c, a, b), self.idempotent(c));
                let mid = self.with_idempotents(&self.merge(a, b, c), &[a, b]);
                let x = self.compose(self.idempotent(c), &self.compose(&mid, &up));
                Ok(self.trace(&x))
            }
            Network::Tet(t, i1, i2, c, j1, j2) => {
                self.check(&[t, i1, i2, c, j1, j2])?;
                for [x, y, z] in [[t, i1, j1], [t, i2, j2], [c, i1, i2], [c, j1, j2]] {
                    self.check_triple(x, y, z)?;
                }
                let mut x = self.idempotent(c).clone();
                x = self.compose(&self.split(c, i1, i2), &x);
                x = self.compose(&self.tensor(self.idempotent(i1), self.idempotent(i2)), &x);
                let step = self.tensor(&self.split(i1, j1, t), &self.identity(i2 as usize));
                x = self.compose(&step, &x);
                let jws =
                    self.tensor(&self.tensor(self.idempotent(j1), self.idempotent(t)), &self.identity(i2 as usize));
                x = self.compose(&jws, &x);
                let step = self.tensor(&self.identity(j1 as usize), &self.merge(t, i2, j2));
                x = self.compose(&step, &x);
                let jws = self.tensor(&self.identity(j1 as usize), self.idempotent(j2));
                x = self.compose(&jws, &x);
                x = self.compose(&self.merge(j1, j2, c), &x);
                Ok(self.trace(&x))
            }
            Network::Hopf(a, t) => {
                self.check(&[a, t])?;
                let both = self.tensor(self.idempotent(a), self.idempotent(t));
                let twice = self.compose(&self.bundle_crossing(t, a), &self.bundle_crossing(a, t));
                Ok(self.trace(&self.compose(&twice, &both)))
            }
            Network::Curl(c) => {
                self.check(&[c])?;
                let k = c as usize;
                let cup = self.tensor(&self.identity(k), &self.split(0, c, c));
                let cap = self.tensor(&self.identity(k), &self.merge(c, c, 0));
                let cross = self.tensor(&self.bundle_crossing(c, c), &self.identity(k));
                let lower = self.compose(&cup, self.idempotent(c));
                let kink = self.compose(&cap, &self.compose(&cross, &lower));
                Ok(self.trace(&kink))
            }
        }
    }
}

/// One-shot evaluation; prefer [`TlOracle`] when evaluating many networks.
pub fn tl_oracle(ctx: &FieldContext, net: &Network) -> Result<Scalar> {
    TlOracle::new(ctx).evaluate(net)
}
