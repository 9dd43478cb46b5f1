//! JSON form of scalars: rational coefficients, lowest degree first, with
//! trailing zeros trimmed.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{FieldContext, Scalar};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScalarRepr {
    pub base: Vec<[String; 2]>,
    pub eta: Vec<[String; 2]>,
}

fn encode(coeffs: Vec<BigRational>) -> Vec<[String; 2]> {
    let mut out: Vec<[String; 2]> = coeffs.iter().map(|c| [c.numer().to_string(), c.denom().to_string()]).collect();
    while out.last().is_some_and(|c| c[0] == "0") {
        out.pop();
    }
    out
}

fn decode(v: &[[String; 2]]) -> Result<Vec<BigRational>> {
    v.iter()
        .map(|[n, d]| {
            let n: BigInt = n.parse().map_err(|_| Error::Malformed(format!("bad numerator `{n}`")))?;
            let d: BigInt = d.parse().map_err(|_| Error::Malformed(format!("bad denominator `{d}`")))?;
            if d.is_zero() {
                return Err(Error::Malformed("zero denominator".into()));
            }
            Ok(BigRational::new(n, d))
        })
        .collect()
}

pub(super) fn to_repr(x: &Scalar) -> ScalarRepr {
    ScalarRepr { base: encode(x.base_coeffs()), eta: encode(x.eta_coeffs()) }
}

pub(super) fn from_repr(ctx: &FieldContext, r: &ScalarRepr) -> Result<Scalar> {
    let base = ctx.poly_in_a(&decode(&r.base)?);
    let eta = ctx.poly_in_a(&decode(&r.eta)?);
    Ok(&base + &(&eta * &ctx.eta()))
}
