//! Complex embedding A ↦ exp(2πi/N), η ↦ its positive real root, carried out
//! in binary fixed point so that any requested precision is honoured.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{Cyclo, CycloField, Field, Scalar};

/// Decimal approximation of a complex number, rounded to `digits` places.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexApprox {
    pub re: String,
    pub im: String,
    pub digits: u32,
}

impl ComplexApprox {
    pub fn re_f64(&self) -> f64 {
        self.re.parse().unwrap_or(f64::NAN)
    }

    pub fn im_f64(&self) -> f64 {
        self.im.parse().unwrap_or(f64::NAN)
    }

    pub fn abs_f64(&self) -> f64 {
        self.re_f64().hypot(self.im_f64())
    }
}

struct Fixed {
    bits: u64,
    /// cos and sin of 2πk/N scaled by 2^bits.
    table: Vec<(BigInt, BigInt)>,
}

fn atan_inv(x: u32, bits: u64) -> BigInt {
    // atan(1/x) = Σ (−1)^k / ((2k+1) x^(2k+1))
    let one = BigInt::one() << bits;
    let x = BigInt::from(x);
    let x2 = &x * &x;
    let mut power = &one / &x;
    let mut sum = BigInt::zero();
    let mut k = 0u32;
    while !power.is_zero() {
        let term = &power / BigInt::from(2 * k + 1);
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        power /= &x2;
        k += 1;
    }
    sum
}

fn pi(bits: u64) -> BigInt {
    // Machin: π = 16 atan(1/5) − 4 atan(1/239)
    atan_inv(5, bits) * 16 - atan_inv(239, bits) * 4
}

fn cos_sin(theta: &BigInt, bits: u64) -> (BigInt, BigInt) {
    let one = BigInt::one() << bits;
    let mut term = one.clone();
    let mut cos = one;
    let mut sin = BigInt::zero();
    let mut n = 1u64;
    loop {
        term = (&term * theta) >> bits;
        term /= n;
        if term.is_zero() {
            break;
        }
        match n % 4 {
            1 => sin += &term,
            2 => cos -= &term,
            3 => sin -= &term,
            _ => cos += &term,
        }
        n += 1;
    }
    (cos, sin)
}

impl Fixed {
    fn new(order: u32, bits: u64) -> Self {
        let theta = (pi(bits) * 2) / BigInt::from(order);
        let (c, s) = cos_sin(&theta, bits);
        let mut table = Vec::with_capacity(order as usize);
        let mut cur = (BigInt::one() << bits, BigInt::zero());
        for _ in 0..order {
            table.push(cur.clone());
            let re = (&cur.0 * &c - &cur.1 * &s) >> bits;
            let im = (&cur.0 * &s + &cur.1 * &c) >> bits;
            cur = (re, im);
        }
        Fixed { bits, table }
    }

    fn eval(&self, x: &Cyclo) -> (BigInt, BigInt) {
        let mut re = BigInt::zero();
        let mut im = BigInt::zero();
        for (k, c) in x.num.iter().enumerate() {
            if !c.is_zero() {
                re += c * &self.table[k].0;
                im += c * &self.table[k].1;
            }
        }
        (re / &x.den, im / &x.den)
    }

    fn mul(&self, a: &(BigInt, BigInt), b: &(BigInt, BigInt)) -> (BigInt, BigInt) {
        ((&a.0 * &b.0 - &a.1 * &b.1) >> self.bits, (&a.0 * &b.1 + &a.1 * &b.0) >> self.bits)
    }
}

fn guard_bits(digits: u32) -> u64 {
    (digits as u64) * 7 / 2 + 64
}

fn to_decimal(v: &BigInt, bits: u64, digits: u32) -> String {
    let scale = BigInt::from(10u32).pow(digits);
    let scaled = v * &scale;
    let half = BigInt::one() << (bits - 1);
    let rounded = if scaled.is_negative() { -((-scaled + &half) >> bits) } else { (scaled + &half) >> bits };
    let neg = rounded.is_negative();
    let digits_str = rounded.abs().to_string();
    let d = digits as usize;
    let padded = format!("{:0>width$}", digits_str, width = d + 1);
    let (int, frac) = padded.split_at(padded.len() - d);
    let sign = if neg { "-" } else { "" };
    if d == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{frac}")
    }
}

pub(super) fn embed(field: &Field, x: &Scalar, digits: u32) -> ComplexApprox {
    let bits = guard_bits(digits);
    let fx = Fixed::new(field.cyc.order, bits);
    let mut v = fx.eval(&x.base);
    if !x.eta.is_zero() {
        // η² embeds to a positive real; η is its positive square root
        let (e2, _) = fx.eval(&field.eta_square);
        let eta = (e2 << bits).sqrt();
        let w = fx.eval(&x.eta);
        let term = fx.mul(&w, &(eta, BigInt::zero()));
        v = (v.0 + term.0, v.1 + term.1);
    }
    ComplexApprox { re: to_decimal(&v.0, bits, digits), im: to_decimal(&v.1, bits, digits), digits }
}

/// Sign of the real part of a base-field element at A = exp(2πi/N).
pub(super) fn real_part_sign(cyc: &CycloField, x: &Cyclo) -> i32 {
    let fx = Fixed::new(cyc.order, 128);
    let (re, _) = fx.eval(x);
    if re.is_negative() {
        -1
    } else if re.is_zero() {
        0
    } else {
        1
    }
}
