//! Exact rational scalars. All arithmetic in the crate goes through
//! [`Rat`]; floating point is never used.

use crate::error::{Error, Result};
use num::BigRational;
use num::{One, Signed, Zero};
use std::str::FromStr;

pub type Rat = BigRational;

/// `n/d` as an exact rational.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}

/// The integer `n` as an exact rational.
pub fn rint(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

pub fn is_integer(r: &Rat) -> bool {
    r.is_integer()
}

/// Parses `"p/q"` or a plain integer string.
pub fn parse_rat(s: &str) -> Result<Rat> {
    Rat::from_str(s.trim()).map_err(|_| Error::ParseRational(s.to_string()))
}

/// Renders in the same `"p/q"` (or plain integer) form that `parse_rat` accepts.
pub fn rat_str(r: &Rat) -> String {
    r.to_string()
}

pub fn rat_zero() -> Rat {
    Rat::zero()
}

pub fn rat_one() -> Rat {
    Rat::one()
}

pub fn rat_abs(r: &Rat) -> Rat {
    r.abs()
}
