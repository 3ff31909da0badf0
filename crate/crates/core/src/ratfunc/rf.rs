//! The field `Q(m, u, v)` of rational functions: exact ratios of integer
//! multivariate polynomials kept in reduced canonical form.

use super::gcd::poly_gcd;
use super::poly::{MultiPoly, NVARS, VAR_NAMES};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RatFuncError {
    #[error("division by zero rational function")]
    DivisionByZero,
    #[error("denominator vanishes at the evaluation point")]
    PoleAtPoint,
}

/// A rational function in canonical form.
///
/// Invariants: the denominator is nonzero with positive graded-lex leading
/// coefficient, and gcd(numerator, denominator) is 1 (including integer
/// content). Equality is therefore structural.
#[derive(Clone, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub struct RationalFunc {
    num: MultiPoly,
    den: MultiPoly,
}

impl RationalFunc {
    /// Build and canonicalize `num/den`. Panics on zero denominator; use
    /// [`RationalFunc::checked_new`] for fallible construction.
    pub fn new(num: MultiPoly, den: MultiPoly) -> Self {
        Self::checked_new(num, den).expect("zero denominator")
    }

    pub fn checked_new(num: MultiPoly, den: MultiPoly) -> Result<Self, RatFuncError> {
        if den.is_zero() {
            return Err(RatFuncError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RationalFunc {
                num: MultiPoly::zero(),
                den: MultiPoly::one(),
            });
        }
        let g = poly_gcd(&num, &den);
        let mut n = num.exact_div(&g);
        let mut d = den.exact_div(&g);
        if d.leading_sign() < 0 {
            n = n.neg_ref();
            d = d.neg_ref();
        }
        Ok(RationalFunc { num: n, den: d })
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        RationalFunc {
            num: p,
            den: MultiPoly::one(),
        }
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_poly(MultiPoly::int(c))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::new(MultiPoly::int(num), MultiPoly::int(den))
    }

    pub fn from_rational(q: &BigRational) -> Self {
        Self::new(
            MultiPoly::constant(q.numer().clone()),
            MultiPoly::constant(q.denom().clone()),
        )
    }

    /// The i-th indeterminate as a rational function.
    pub fn var(i: usize) -> Self {
        Self::from_poly(MultiPoly::var(i))
    }

    pub fn zero() -> Self {
        Self::from_poly(MultiPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(MultiPoly::one())
    }

    pub fn numerator(&self) -> &MultiPoly {
        &self.num
    }

    pub fn denominator(&self) -> &MultiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        let num = &(&self.num * &other.den) + &(&self.den * &other.num);
        let den = &self.den * &other.den;
        Self::new(num, den)
    }

    pub fn sub_ref(&self, other: &Self) -> Self {
        let num = &(&self.num * &other.den) - &(&self.den * &other.num);
        let den = &self.den * &other.den;
        Self::new(num, den)
    }

    pub fn neg_ref(&self) -> Self {
        RationalFunc {
            num: self.num.neg_ref(),
            den: self.den.clone(),
        }
    }

    /// Multiply with cross-cancellation to keep intermediate sizes down.
    pub fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let g1 = poly_gcd(&self.num, &other.den);
        let g2 = poly_gcd(&other.num, &self.den);
        let n1 = self.num.exact_div(&g1);
        let d2 = other.den.exact_div(&g1);
        let n2 = other.num.exact_div(&g2);
        let d1 = self.den.exact_div(&g2);
        Self::new(n1.mul_ref(&n2), d1.mul_ref(&d2))
    }

    pub fn div_ref(&self, other: &Self) -> Result<Self, RatFuncError> {
        if other.is_zero() {
            return Err(RatFuncError::DivisionByZero);
        }
        Ok(self.mul_ref(&RationalFunc::checked_new(
            other.den.clone(),
            other.num.clone(),
        )?))
    }

    pub fn inv(&self) -> Result<Self, RatFuncError> {
        RationalFunc::checked_new(self.den.clone(), self.num.clone())
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.mul_ref(&Self::from_int(c))
    }

    /// Substitute a polynomial for variable `i` in numerator and denominator.
    pub fn substitute(&self, i: usize, value: &MultiPoly) -> Self {
        Self::new(
            self.num.substitute(i, value),
            self.den.substitute(i, value),
        )
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, point: &[BigRational; NVARS]) -> Result<BigRational, RatFuncError> {
        let d = self.den.eval(point);
        if d.is_zero() {
            return Err(RatFuncError::PoleAtPoint);
        }
        Ok(self.num.eval(point) / d)
    }

    /// Approximate f64 evaluation (used only for reporting).
    pub fn eval_f64(&self, point: &[f64; NVARS]) -> f64 {
        let ev = |p: &MultiPoly| -> f64 {
            p.terms
                .iter()
                .map(|(m, c)| {
                    let mut t = bigint_to_f64(c);
                    for i in 0..NVARS {
                        t *= point[i].powi(m.0[i] as i32);
                    }
                    t
                })
                .sum::<f64>()
        };
        ev(&self.num) / ev(&self.den)
    }

    pub fn to_string_with(&self, names: &[&str; NVARS]) -> String {
        if self.den.is_one() {
            self.num.to_string_with(names)
        } else {
            format!(
                "({})/({})",
                self.num.to_string_with(names),
                self.den.to_string_with(names)
            )
        }
    }
}

fn bigint_to_f64(c: &BigInt) -> f64 {
    use num_traits::ToPrimitive;
    c.to_f64().unwrap_or(f64::NAN)
}

impl fmt::Display for RationalFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_with(&VAR_NAMES))
    }
}

impl Add for &RationalFunc {
    type Output = RationalFunc;
    fn add(self, rhs: &RationalFunc) -> RationalFunc {
        self.add_ref(rhs)
    }
}

impl Sub for &RationalFunc {
    type Output = RationalFunc;
    fn sub(self, rhs: &RationalFunc) -> RationalFunc {
        self.sub_ref(rhs)
    }
}

impl Mul for &RationalFunc {
    type Output = RationalFunc;
    fn mul(self, rhs: &RationalFunc) -> RationalFunc {
        self.mul_ref(rhs)
    }
}

impl Div for &RationalFunc {
    type Output = RationalFunc;
    fn div(self, rhs: &RationalFunc) -> RationalFunc {
        self.div_ref(rhs).expect("division by zero rational function")
    }
}

impl Neg for &RationalFunc {
    type Output = RationalFunc;
    fn neg(self) -> RationalFunc {
        self.neg_ref()
    }
}

impl Zero for RationalFunc {
    fn zero() -> Self {
        RationalFunc::zero()
    }
    fn is_zero(&self) -> bool {
        RationalFunc::is_zero(self)
    }
}

impl Add for RationalFunc {
    type Output = RationalFunc;
    fn add(self, rhs: RationalFunc) -> RationalFunc {
        self.add_ref(&rhs)
    }
}

impl One for RationalFunc {
    fn one() -> Self {
        RationalFunc::one()
    }
}

impl Mul for RationalFunc {
    type Output = RationalFunc;
    fn mul(self, rhs: RationalFunc) -> RationalFunc {
        self.mul_ref(&rhs)
    }
}

impl Serialize for RationalFunc {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for RationalFunc {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        super::parse::parse_ratfunc(&text).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m() -> RationalFunc {
        RationalFunc::var(0)
    }
    fn u() -> RationalFunc {
        RationalFunc::var(1)
    }
    fn int(c: i64) -> RationalFunc {
        RationalFunc::from_int(c)
    }

    #[test]
    fn inverse_pair_cancels() {
        // (4+u)/(4-u) * (4-u)/(4+u) = 1
        let a = RationalFunc::new(
            (&int(4) + &u()).num.clone(),
            (&int(4) - &u()).num.clone(),
        );
        let b = a.inv().unwrap();
        assert!(a.mul_ref(&b).is_one());
    }

    #[test]
    fn substitution_reduces() {
        // 2u/(n-2-u) with n -> 3m+3 gives 2u/(3m+1-u)
        let rf = RationalFunc::new(
            (&int(2) * &u()).num.clone(),
            (&(&m() - &int(2)) - &u()).num.clone(),
        );
        let n_series = (&(&int(3) * &m()) + &int(3)).num.clone();
        let sub = rf.substitute(0, &n_series);
        let expect = RationalFunc::new(
            (&int(2) * &u()).num.clone(),
            (&(&(&int(3) * &m()) + &int(1)) - &u()).num.clone(),
        );
        assert_eq!(sub, expect);
    }

    #[test]
    fn lemma_coefficient_sum() {
        // -m/(2m+4) + 1/(2m+4) = (1-m)/(2m+4)
        let den = (&(&int(2) * &m()) + &int(4)).num.clone();
        let a = RationalFunc::new(m().neg_ref().num.clone(), den.clone());
        let b = RationalFunc::new(MultiPoly::one(), den.clone());
        let expect = RationalFunc::new((&int(1) - &m()).num.clone(), den);
        assert_eq!(a.add_ref(&b), expect);
    }

    #[test]
    fn eval_exact() {
        // (4+u)/(4-u) at u=2 -> 3
        let a = RationalFunc::new(
            (&int(4) + &u()).num.clone(),
            (&int(4) - &u()).num.clone(),
        );
        let pt = [
            BigRational::zero(),
            BigRational::from_integer(2.into()),
            BigRational::zero(),
        ];
        assert_eq!(a.eval(&pt).unwrap(), BigRational::from_integer(3.into()));
    }

    #[test]
    fn eval_derived_coefficient() {
        // (4m+8)u/(2m-u) at m=8, u=4 -> 40*4/(16-4) = 160/12 = 40/3
        let num = (&(&(&int(4) * &m()) + &int(8)) * &u()).num.clone();
        let den = (&(&int(2) * &m()) - &u()).num.clone();
        let f = RationalFunc::new(num, den);
        let pt = [
            BigRational::from_integer(8.into()),
            BigRational::from_integer(4.into()),
            BigRational::zero(),
        ];
        assert_eq!(
            f.eval(&pt).unwrap(),
            BigRational::new(40.into(), 3.into())
        );
    }

    #[test]
    fn eval_pole() {
        // 1/(2m-u) at u = 2m (say m=3, u=6)
        let den = (&(&int(2) * &m()) - &u()).num.clone();
        let f = RationalFunc::new(MultiPoly::one(), den);
        let pt = [
            BigRational::from_integer(3.into()),
            BigRational::from_integer(6.into()),
            BigRational::zero(),
        ];
        assert_eq!(f.eval(&pt), Err(RatFuncError::PoleAtPoint));
    }
}
