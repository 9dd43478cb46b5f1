//! Elements of Q(ζ_N) stored as an integer coefficient vector over a common
//! positive denominator, reduced modulo the cyclotomic polynomial Φ_N.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arithmetic tables for one cyclotomic field.
#[derive(Debug)]
pub(crate) struct CycloField {
    pub order: u32,
    pub degree: usize,
    /// Φ_N, lowest degree first, monic.
    pub modulus: Vec<BigInt>,
    /// `x^k mod Φ_N` for `k < powers.len()`.
    powers: Vec<Vec<BigInt>>,
}

/// Canonical element: `num[k] / den` is the coefficient of `A^k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Cyclo {
    pub num: Vec<BigInt>,
    pub den: BigInt,
}

/// Φ_n with integer coefficients, lowest degree first.
pub(crate) fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    // x^n - 1 = Π_{d | n} Φ_d
    let mut poly: Vec<BigInt> = vec![BigInt::zero(); n as usize + 1];
    poly[0] = BigInt::from(-1);
    poly[n as usize] = BigInt::one();
    for d in 1..n {
        if n % d == 0 {
            poly = exact_div_monic(&poly, &cyclotomic_polynomial(d));
        }
    }
    poly
}

fn exact_div_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qlen = rem.len() - dd;
    let mut quot = vec![BigInt::zero(); qlen];
    for k in (0..qlen).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[k + j] -= &c * dj;
        }
        quot[k] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

impl CycloField {
    pub fn new(order: u32) -> Self {
        let modulus = cyclotomic_polynomial(order);
        let degree = modulus.len() - 1;
        let count = (order as usize).max(2 * degree);
        let mut powers = Vec::with_capacity(count);
        let mut cur = vec![BigInt::zero(); degree];
        cur[0] = BigInt::one();
        for _ in 0..count {
            powers.push(cur.clone());
            // multiply by x
            let top = cur[degree - 1].clone();
            for j in (1..degree).rev() {
                cur[j] = cur[j - 1].clone();
            }
            cur[0] = BigInt::zero();
            if !top.is_zero() {
                for j in 0..degree {
                    cur[j] -= &top * &modulus[j];
                }
            }
        }
        CycloField { order, degree, modulus, powers }
    }

    pub fn zero(&self) -> Cyclo {
        Cyclo { num: vec![BigInt::zero(); self.degree], den: BigInt::one() }
    }

    pub fn integer(&self, n: BigInt) -> Cyclo {
        let mut z = self.zero();
        z.num[0] = n;
        z
    }

    pub fn rational(&self, q: &BigRational) -> Cyclo {
        let mut z = self.zero();
        z.num[0] = q.numer().clone();
        z.den = q.denom().clone();
        z.normalize();
        z
    }

    /// `A^k` for any integer `k`.
    pub fn root_power(&self, k: i64) -> Cyclo {
        let e = k.rem_euclid(self.order as i64) as usize;
        Cyclo { num: self.powers[e].clone(), den: BigInt::one() }
    }

    /// Reduces an arbitrary-length integer vector modulo Φ_N.
    pub fn reduce(&self, mut coeffs: Vec<BigInt>, den: BigInt) -> Cyclo {
        let d = self.degree;
        if coeffs.len() > d {
            for k in (d..coeffs.len()).rev() {
                let c = std::mem::take(&mut coeffs[k]);
                if c.is_zero() {
                    continue;
                }
                if k < self.powers.len() {
                    for (j, pj) in self.powers[k].iter().enumerate() {
                        if !pj.is_zero() {
                            coeffs[j] += &c * pj;
                        }
                    }
                } else {
                    // x^k = x^(k-d) * x^d ; push down one step at a time
                    for j in 0..d {
                        coeffs[k - d + j] -= &c * &self.modulus[j];
                    }
                }
            }
            coeffs.truncate(d);
        }
        coeffs.resize(d, BigInt::zero());
        let mut out = Cyclo { num: coeffs, den };
        out.normalize();
        out
    }

    pub fn add(&self, x: &Cyclo, y: &Cyclo) -> Cyclo {
        if x.is_zero() {
            return y.clone();
        }
        if y.is_zero() {
            return x.clone();
        }
        if x.den == y.den {
            let num = x.num.iter().zip(&y.num).map(|(a, b)| a + b).collect();
            let mut out = Cyclo { num, den: x.den.clone() };
            out.normalize();
            return out;
        }
        let num = x.num.iter().zip(&y.num).map(|(a, b)| a * &y.den + b * &x.den).collect();
        let mut out = Cyclo { num, den: &x.den * &y.den };
        out.normalize();
        out
    }

    pub fn neg(&self, x: &Cyclo) -> Cyclo {
        Cyclo { num: x.num.iter().map(|a| -a).collect(), den: x.den.clone() }
    }

    pub fn sub(&self, x: &Cyclo, y: &Cyclo) -> Cyclo {
        self.add(x, &self.neg(y))
    }

    pub fn mul(&self, x: &Cyclo, y: &Cyclo) -> Cyclo {
        if x.is_zero() || y.is_zero() {
            return self.zero();
        }
        if let Some(s) = x.as_integer_scalar() {
            return self.scale(y, s, &x.den);
        }
        if let Some(s) = y.as_integer_scalar() {
            return self.scale(x, s, &y.den);
        }
        let d = self.degree;
        let mut prod = vec![BigInt::zero(); 2 * d - 1];
        for (i, a) in x.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.num.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        self.reduce(prod, &x.den * &y.den)
    }

    fn scale(&self, x: &Cyclo, s: &BigInt, den: &BigInt) -> Cyclo {
        let mut out = Cyclo { num: x.num.iter().map(|a| a * s).collect(), den: &x.den * den };
        out.normalize();
        out
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against Φ_N.
    pub fn inv(&self, x: &Cyclo) -> Option<Cyclo> {
        if x.is_zero() {
            return None;
        }
        let to_q = |v: &[BigInt], den: &BigInt| -> Vec<BigRational> {
            v.iter().map(|c| BigRational::new(c.clone(), den.clone())).collect()
        };
        let mut r0 = to_q(&self.modulus, &BigInt::one());
        let mut r1 = to_q(&x.num, &x.den);
        trim_q(&mut r1);
        let mut s0: Vec<BigRational> = vec![];
        let mut s1: Vec<BigRational> = vec![BigRational::one()];
        while !r1.is_empty() {
            let (q, r) = divrem_q(&r0, &r1);
            let s2 = sub_q(&s0, &mul_q(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        // r0 is a nonzero constant because Φ_N is irreducible
        debug_assert_eq!(r0.len(), 1);
        let c = r0[0].clone();
        let inv: Vec<BigRational> = s0.iter().map(|a| a / &c).collect();
        let den = inv.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let num = inv.iter().map(|q| q.numer() * (&den / q.denom())).collect();
        Some(self.reduce(num, den))
    }
}

impl Cyclo {
    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(Zero::is_zero)
    }

    /// Returns the numerator constant when the element is rational.
    fn as_integer_scalar(&self) -> Option<&BigInt> {
        if self.num[1..].iter().all(Zero::is_zero) {
            Some(&self.num[0])
        } else {
            None
        }
    }

    pub fn rational_coefficient(&self, k: usize) -> BigRational {
        BigRational::new(self.num[k].clone(), self.den.clone())
    }

    pub fn normalize(&mut self) {
        if self.is_zero() {
            self.den = BigInt::one();
            return;
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                break;
            }
            if !c.is_zero() {
                g = g.gcd(c);
            }
        }
        if self.den.is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for c in self.num.iter_mut() {
                *c = &*c / &g;
            }
            self.den = &self.den / &g;
        }
    }
}

fn trim_q(v: &mut Vec<BigRational>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

fn sub_q(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out: Vec<BigRational> = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
            let y = b.get(i).cloned().unwrap_or_else(BigRational::zero);
            x - y
        })
        .collect();
    trim_q(&mut out);
    out
}

fn mul_q(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim_q(&mut out);
    out
}

fn divrem_q(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem = a.to_vec();
    trim_q(&mut rem);
    let db = b.len() - 1;
    let lead = b[db].clone();
    if rem.len() < b.len() {
        return (vec![], rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + db] / &lead;
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            rem[k + j] -= &c * bj;
        }
        quot[k] = c;
    }
    trim_q(&mut rem);
    trim_q(&mut quot);
    (quot, rem)
}
