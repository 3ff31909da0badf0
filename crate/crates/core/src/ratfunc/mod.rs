//! Exact arithmetic in the field `Q(m, u, v)`.
//!
//! Every symbolic coefficient in the diagram calculus lives here: `m` is the
//! division-algebra dimension of the exceptional series (the same slot holds
//! the symbolic dimension `n` for the classical families), while `u` and `v`
//! are the spectral parameters of the Yang-Baxter equation.

mod gcd;
mod parse;
mod poly;
mod rf;

pub use gcd::{poly_gcd, sign_normalize};
pub use parse::{parse_ratfunc, ParseError};
pub use poly::{Expo, Mono, MultiPoly, NVARS, VAR_NAMES};
pub use rf::{RatFuncError, RationalFunc};

use num_rational::BigRational;

/// Variable indices into the global ring.
pub const VAR_SERIES: usize = 0;
pub const VAR_U: usize = 1;
pub const VAR_V: usize = 2;

/// Convenience: the series parameter (`m` or `n`) as a polynomial.
pub fn series_param() -> MultiPoly {
    MultiPoly::var(VAR_SERIES)
}

/// Convenience: rational-function shorthand used throughout the crate.
pub fn rf_m() -> RationalFunc {
    RationalFunc::var(VAR_SERIES)
}

pub fn rf_u() -> RationalFunc {
    RationalFunc::var(VAR_U)
}

pub fn rf_v() -> RationalFunc {
    RationalFunc::var(VAR_V)
}

pub fn rf_int(c: i64) -> RationalFunc {
    RationalFunc::from_int(c)
}

/// Evaluation point builder (unused variables default to zero).
pub fn point(m: BigRational, u: BigRational, v: BigRational) -> [BigRational; NVARS] {
    [m, u, v]
}

pub fn int_point(m: i64, u_num: i64, u_den: i64, v_num: i64, v_den: i64) -> [BigRational; NVARS] {
    [
        BigRational::from_integer(m.into()),
        BigRational::new(u_num.into(), u_den.into()),
        BigRational::new(v_num.into(), v_den.into()),
    ]
}
