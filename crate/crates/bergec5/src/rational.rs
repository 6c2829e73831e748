//! Exact rational arithmetic used by the identity and inequality checkers.
//!
//! All equality/inequality decisions in this crate are made in exact
//! arithmetic; floating point only appears in reports for display.

use num::{BigInt, BigRational, ToPrimitive, Zero};

pub type Rational = BigRational;

/// Rational from an integer.
pub fn rat_int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Rational `num / den`; `den` must be nonzero.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Average `3m/n` style quantities, defined as 0 for an empty vertex set.
pub fn rat_div_or_zero(num: i64, den: i64) -> Rational {
    if den == 0 {
        Rational::zero()
    } else {
        rat(num, den)
    }
}

/// Compact display: `p` when integral, else `p/q`.
pub fn rat_str(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rat_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}
