//! Exact arithmetic kernel.

pub mod fixed;
pub mod parse;
pub mod quad;
pub mod sigma;
pub mod tau;

pub use fixed::{Complex, Real};
pub use parse::parse_quad;
pub use quad::{QuadElem, Radicand};
pub use sigma::CyclotomicSigma;
pub use tau::TauElem;

use num_bigint::BigInt;
pub use num_rational::BigRational;
use serde_json::{json, Value};

use crate::error::{Error, Result};

/// `num/den` as a reduced [`BigRational`].
pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(num.into(), den.into())
}

/// Always writes the denominator: `3/1`, `2/3`.
pub fn fraction_string(x: &BigRational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// `{"num": "...", "den": "..."}`.
pub fn rational_to_json(x: &BigRational) -> Value {
    json!({ "num": x.numer().to_string(), "den": x.denom().to_string() })
}

pub fn rational_from_json(v: &Value) -> Result<BigRational> {
    let field = |name: &str| -> Result<BigInt> {
        v.get(name)
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Parse(format!("missing string field `{name}`")))?
            .parse::<BigInt>()
            .map_err(|e| Error::Parse(e.to_string()))
    };
    let den = field("den")?;
    if den <= BigInt::from(0) {
        return Err(Error::Parse("denominator must be positive".into()));
    }
    Ok(BigRational::new(field("num")?, den))
}
