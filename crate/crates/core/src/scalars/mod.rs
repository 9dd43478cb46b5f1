//! The coefficient field: Q(A) with A a primitive N-th root of unity,
//! extended by η with η² = −(A² − A⁻²)²/p.

mod cyclo;
mod embed;
mod serial;

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub(crate) use cyclo::{Cyclo, CycloField};
pub use embed::ComplexApprox;
pub use serial::ScalarRepr;

use crate::error::{Error, Result};
use crate::recoupling::{self, ColorData, Memo};

#[derive(Debug)]
pub(crate) struct Field {
    pub p: u32,
    pub cyc: CycloField,
    pub eta_square: Cyclo,
    /// η itself when it already lies in Q(A).
    pub eta_in_base: Option<Cyclo>,
}

/// An element `base + eta·η` of the coefficient field.
#[derive(Clone)]
pub struct Scalar {
    field: Arc<Field>,
    base: Cyclo,
    eta: Cyclo,
}

/// Level, root order, colors and the caches shared by every computation at
/// that level. Immutable apart from initialize-once caches.
pub struct FieldContext {
    field: Arc<Field>,
    colors: ColorData,
    kappa_inv3: OnceLock<Option<Scalar>>,
    pub(crate) memo: Memo,
}

impl fmt::Debug for FieldContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldContext").field("p", &self.p()).field("root_order", &self.root_order()).finish()
    }
}

/// Builds the context for level `p`. The root order defaults to `2p`;
/// `4p` may be requested for odd `p`.
pub fn make_context(p: i64, root_order: Option<i64>) -> Result<FieldContext> {
    if p < 3 {
        return Err(Error::InvalidLevel(p));
    }
    if p > 200 {
        return Err(Error::InvalidConfiguration(format!("level p = {p} is too large")));
    }
    let order = match root_order {
        None => 2 * p,
        Some(n) if n == 2 * p => n,
        Some(n) if n == 4 * p && p % 2 == 1 => n,
        Some(n) => {
            return Err(Error::InvalidConfiguration(format!(
                "root order {n} not allowed at p = {p} (use {}{})",
                2 * p,
                if p % 2 == 1 { format!(" or {}", 4 * p) } else { String::new() }
            )))
        }
    };
    let p = p as u32;
    let cyc = CycloField::new(order as u32);

    // η² = −(A² − A⁻²)² / p
    let d = cyc.sub(&cyc.root_power(2), &cyc.root_power(-2));
    let d2 = cyc.mul(&d, &d);
    let minus_inv_p = cyc.rational(&BigRational::new(BigInt::from(-1), BigInt::from(p)));
    let eta_square = cyc.mul(&d2, &minus_inv_p);
    debug_assert!(!eta_square.is_zero());

    let eta_in_base = sqrt_minus_p(&cyc, p).map(|r| {
        let inv_p = cyc.rational(&BigRational::new(BigInt::one(), BigInt::from(p)));
        let cand = cyc.mul(&cyc.mul(&d, &r), &inv_p);
        debug_assert_eq!(cyc.mul(&cand, &cand), eta_square);
        if embed::real_part_sign(&cyc, &cand) < 0 {
            cyc.neg(&cand)
        } else {
            cand
        }
    });

    let field = Arc::new(Field { p, cyc, eta_square, eta_in_base });
    let colors = ColorData::new(p);
    Ok(FieldContext { field, colors, kappa_inv3: OnceLock::new(), memo: Memo::default() })
}

/// An exact square root of −p inside Q(ζ_N) if one exists.
///
/// Q(√d) sits inside Q(ζ_N) exactly when its discriminant divides N; the
/// root is then a product of quadratic Gauss sums, ζ₈-expressions and ζ₄.
fn sqrt_minus_p(cyc: &CycloField, p: u32) -> Option<Cyclo> {
    let n = cyc.order;
    let (square, free) = squarefree_split(p);
    let mut root = cyc.integer(BigInt::from(square));
    // sign of root², tracked as the factors are multiplied in
    let mut positive = true;
    for q in prime_factors(free) {
        if q == 2 {
            if n % 8 != 0 {
                return None;
            }
            let z = (n / 8) as i64;
            let sqrt2 = cyc.add(&cyc.root_power(z), &cyc.root_power(-z));
            root = cyc.mul(&root, &sqrt2);
            continue;
        }
        if n % q != 0 {
            return None;
        }
        // quadratic Gauss sum, squares to (−1)^((q−1)/2)·q
        let step = (n / q) as i64;
        let mut g = cyc.zero();
        for k in 0..q as i64 {
            g = cyc.add(&g, &cyc.root_power(step * k * k));
        }
        root = cyc.mul(&root, &g);
        if q % 4 == 3 {
            positive = !positive;
        }
    }
    if positive {
        if n % 4 != 0 {
            return None;
        }
        root = cyc.mul(&root, &cyc.root_power((n / 4) as i64));
    }
    let check = cyc.mul(&root, &root);
    (check == cyc.integer(BigInt::from(-(p as i64)))).then_some(root)
}

fn prime_factors(mut m: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut q = 2;
    while q * q <= m {
        if m % q == 0 {
            out.push(q);
            while m % q == 0 {
                m /= q;
            }
        }
        q += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

fn squarefree_split(mut m: u32) -> (u32, u32) {
    let mut square = 1;
    let mut free = 1;
    let mut q = 2;
    while q * q <= m {
        while m % (q * q) == 0 {
            m /= q * q;
            square *= q;
        }
        if m % q == 0 {
            m /= q;
            free *= q;
        }
        q += 1;
    }
    (square, free * m)
}

impl FieldContext {
    pub fn p(&self) -> u32 {
        self.field.p
    }

    /// N, the multiplicative order of A.
    pub fn root_order(&self) -> u32 {
        self.field.cyc.order
    }

    /// Degree of the cyclotomic modulus.
    pub fn degree(&self) -> usize {
        self.field.cyc.degree
    }

    /// Coefficients of Φ_N, lowest degree first.
    pub fn modulus(&self) -> Vec<BigInt> {
        self.field.cyc.modulus.clone()
    }

    pub fn colors(&self) -> &ColorData {
        &self.colors
    }

    /// True when η had to be realized inside Q(A).
    pub fn eta_in_base_field(&self) -> bool {
        self.field.eta_in_base.is_some()
    }

    fn wrap(&self, base: Cyclo) -> Scalar {
        Scalar { eta: self.field.cyc.zero(), base, field: self.field.clone() }
    }

    pub fn zero(&self) -> Scalar {
        self.wrap(self.field.cyc.zero())
    }

    pub fn one(&self) -> Scalar {
        self.int(1)
    }

    pub fn int(&self, n: i64) -> Scalar {
        self.wrap(self.field.cyc.integer(BigInt::from(n)))
    }

    pub fn rational(&self, q: &BigRational) -> Scalar {
        self.wrap(self.field.cyc.rational(q))
    }

    /// `A^k`, any integer `k`.
    pub fn a_pow(&self, k: i64) -> Scalar {
        self.wrap(self.field.cyc.root_power(k))
    }

    /// Builds `Σ coeffs[k]·A^k` (any length; reduced modulo Φ_N).
    pub fn poly_in_a(&self, coeffs: &[BigRational]) -> Scalar {
        let mut acc = self.zero();
        for (k, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc += &(&self.a_pow(k as i64) * &self.rational(c));
            }
        }
        acc
    }

    pub fn eta(&self) -> Scalar {
        match &self.field.eta_in_base {
            Some(e) => self.wrap(e.clone()),
            None => Scalar {
                base: self.field.cyc.zero(),
                eta: self.field.cyc.integer(BigInt::one()),
                field: self.field.clone(),
            },
        }
    }

    pub fn eta_square(&self) -> Scalar {
        self.wrap(self.field.eta_square.clone())
    }

    /// κ⁻³ = (η · Σ_c μ_c Δ_c²)⁻¹, cached.
    ///
    /// κ³ is the bracket of the +1-framed unknot colored ω (η included), so
    /// that ηκ⁻³ = (Σ_c μ_c Δ_c²)⁻¹; this is the normalization under which
    /// Z₅(F8) has eigenvalues A and A⁻¹.
    pub fn kappa_inv3(&self) -> Result<Scalar> {
        self.kappa_inv3
            .get_or_init(|| {
                let sum = self.anomaly_sum();
                (&sum * &self.eta()).inv().ok()
            })
            .clone()
            .ok_or(Error::AnomalyDegenerate)
    }

    /// ηκ⁻³, the prefactor of every surgery-derived matrix.
    pub fn eta_kappa_inv3(&self) -> Result<Scalar> {
        Ok(&self.eta() * &self.kappa_inv3()?)
    }

    /// Σ_c μ_c Δ_c².
    pub fn anomaly_sum(&self) -> Scalar {
        let mut sum = self.zero();
        for &c in self.colors.colors() {
            let d = recoupling::delta(self, c);
            sum += &(&recoupling::mu(self, c) * &(&d * &d));
        }
        sum
    }

    /// Evaluates at A = exp(2πi/N), η > 0, to `digits` decimal digits.
    pub fn embed_complex(&self, x: &Scalar, digits: u32) -> ComplexApprox {
        embed::embed(&self.field, x, digits.max(1))
    }

    pub fn scalar_from_repr(&self, r: &ScalarRepr) -> Result<Scalar> {
        serial::from_repr(self, r)
    }
}

impl Scalar {
    /// Zero in the same field as `self`.
    pub fn zero_like(&self) -> Scalar {
        let zero = self.field.cyc.zero();
        Scalar { field: self.field.clone(), base: zero.clone(), eta: zero }
    }

    pub fn is_zero(&self) -> bool {
        self.base.is_zero() && self.eta.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.base.is_one() && self.eta.is_zero()
    }

    /// Coefficients of the A-polynomial part, lowest degree first.
    pub fn base_coeffs(&self) -> Vec<BigRational> {
        (0..self.base.num.len()).map(|k| self.base.rational_coefficient(k)).collect()
    }

    /// Coefficients of the η part, lowest degree first.
    pub fn eta_coeffs(&self) -> Vec<BigRational> {
        (0..self.eta.num.len()).map(|k| self.eta.rational_coefficient(k)).collect()
    }

    pub fn has_eta_part(&self) -> bool {
        !self.eta.is_zero()
    }

    pub fn root_order(&self) -> u32 {
        self.field.cyc.order
    }

    fn with(&self, base: Cyclo, eta: Cyclo) -> Scalar {
        Scalar { field: self.field.clone(), base, eta }
    }

    pub fn inv(&self) -> Result<Scalar> {
        let cyc = &self.field.cyc;
        if self.eta.is_zero() {
            let b = cyc.inv(&self.base).ok_or(Error::Division)?;
            return Ok(self.with(b, cyc.zero()));
        }
        // (a + bη)⁻¹ = (a − bη) / (a² − b²η²)
        let a2 = cyc.mul(&self.base, &self.base);
        let b2 = cyc.mul(&self.eta, &self.eta);
        let norm = cyc.sub(&a2, &cyc.mul(&b2, &self.field.eta_square));
        if norm.is_zero() {
            return Err(Error::DegenerateExtension);
        }
        let ninv = cyc.inv(&norm).ok_or(Error::Division)?;
        Ok(self.with(cyc.mul(&self.base, &ninv), cyc.neg(&cyc.mul(&self.eta, &ninv))))
    }

    pub fn mul_int(&self, k: i64) -> Scalar {
        let cyc = &self.field.cyc;
        let k = cyc.integer(BigInt::from(k));
        self.with(cyc.mul(&self.base, &k), cyc.mul(&self.eta, &k))
    }

    pub fn try_div(&self, other: &Scalar) -> Result<Scalar> {
        Ok(self * &other.inv()?)
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, k: i64) -> Result<Scalar> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = self.with(self.field.cyc.integer(BigInt::one()), self.field.cyc.zero());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    pub fn to_repr(&self) -> ScalarRepr {
        serial::to_repr(self)
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.field.cyc.order == other.field.cyc.order && self.base == other.base && self.eta == other.eta
    }
}

impl Eq for Scalar {}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        let cyc = &self.field.cyc;
        self.with(cyc.add(&self.base, &rhs.base), cyc.add(&self.eta, &rhs.eta))
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        let cyc = &self.field.cyc;
        self.with(cyc.sub(&self.base, &rhs.base), cyc.sub(&self.eta, &rhs.eta))
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        let cyc = &self.field.cyc;
        if self.eta.is_zero() && rhs.eta.is_zero() {
            return self.with(cyc.mul(&self.base, &rhs.base), cyc.zero());
        }
        let ac = cyc.mul(&self.base, &rhs.base);
        let bd = cyc.mul(&self.eta, &rhs.eta);
        let ad = cyc.mul(&self.base, &rhs.eta);
        let bc = cyc.mul(&self.eta, &rhs.base);
        self.with(cyc.add(&ac, &cyc.mul(&bd, &self.field.eta_square)), cyc.add(&ad, &bc))
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        let cyc = &self.field.cyc;
        self.with(cyc.neg(&self.base), cyc.neg(&self.eta))
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

fn fmt_poly(coeffs: &[BigRational], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let mut first = true;
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if first {
            if c.is_negative() {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
        }
        first = false;
        let mono = match k {
            0 => String::new(),
            1 => "A".to_string(),
            _ => format!("A^{k}"),
        };
        if mono.is_empty() {
            write!(f, "{mag}")?;
        } else if mag.is_one() {
            write!(f, "{mono}")?;
        } else {
            write!(f, "{mag}·{mono}")?;
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for Scalar {
    /// Polynomial in A with the η part factored, e.g. `(1 - A^2)·η + A^4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let base = self.base_coeffs();
        if self.eta.is_zero() {
            return fmt_poly(&base, f);
        }
        write!(f, "(")?;
        fmt_poly(&self.eta_coeffs(), f)?;
        write!(f, ")·η")?;
        if !self.base.is_zero() {
            write!(f, " + ")?;
            fmt_poly(&base, f)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({self})")
    }
}

#[cfg(test)]
mod tests;
