//! Multivariate polynomials with arbitrary-precision integer coefficients.
//!
//! The indeterminate set is fixed to three variables. Variable 0 is the
//! series parameter (printed `m` for the exceptional families, `n` for the
//! classical ones), variables 1 and 2 are the spectral parameters `u`, `v`.
//! Terms are kept in canonical graded-lexicographic order with no zero
//! coefficients stored.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Number of indeterminates in the global ring.
pub const NVARS: usize = 3;

/// Default print names for the three indeterminates.
pub const VAR_NAMES: [&str; NVARS] = ["m", "u", "v"];

/// Exponent vector of a monomial.
pub type Expo = [u16; NVARS];

/// Monomial key ordered graded-lexicographically (total degree first,
/// then exponents of variable 0, 1, 2).
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct Mono(pub Expo);

impl Mono {
    pub fn one() -> Self {
        Mono([0; NVARS])
    }

    pub fn var(i: usize) -> Self {
        let mut e = [0; NVARS];
        e[i] = 1;
        Mono(e)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        let mut e = [0; NVARS];
        for i in 0..NVARS {
            e[i] = self.0[i] + other.0[i];
        }
        Mono(e)
    }

    pub fn divides(&self, other: &Mono) -> bool {
        (0..NVARS).all(|i| self.0[i] <= other.0[i])
    }

    /// Quotient monomial; caller must ensure `self` divides `other`.
    pub fn div(other: &Mono, den: &Mono) -> Mono {
        let mut e = [0; NVARS];
        for i in 0..NVARS {
            e[i] = other.0[i] - den.0[i];
        }
        Mono(e)
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A multivariate polynomial in `Z[m, u, v]`.
#[derive(Clone, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub struct MultiPoly {
    /// Canonical term map; no zero coefficients are stored.
    pub terms: BTreeMap<Mono, BigInt>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono::one(), c);
        }
        MultiPoly { terms }
    }

    pub fn int(c: i64) -> Self {
        Self::constant(BigInt::from(c))
    }

    /// The i-th indeterminate (0 = m/n, 1 = u, 2 = v).
    pub fn var(i: usize) -> Self {
        assert!(i < NVARS);
        let mut terms = BTreeMap::new();
        terms.insert(Mono::var(i), BigInt::one());
        MultiPoly { terms }
    }

    pub fn monomial(c: BigInt, e: Expo) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono(e), c);
        }
        MultiPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Mono::one())
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.contains_key(&Mono::one()))
    }

    /// Leading (graded-lex greatest) monomial and coefficient.
    pub fn leading(&self) -> Option<(&Mono, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> u32 {
        self.leading().map(|(m, _)| m.total_degree()).unwrap_or(0)
    }

    /// Degree in variable `i`.
    pub fn degree_in(&self, i: usize) -> u16 {
        self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0)
    }

    pub fn uses_var(&self, i: usize) -> bool {
        self.terms.keys().any(|m| m.0[i] > 0)
    }

    fn insert_term(&mut self, m: Mono, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_ref(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_term(*m, c.clone());
        }
        out
    }

    pub fn sub_ref(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_term(*m, -c.clone());
        }
        out
    }

    pub fn neg_ref(&self) -> MultiPoly {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, -c.clone()))
                .collect(),
        }
    }

    pub fn mul_ref(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.insert_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, k)| (*m, k * c)).collect(),
        }
    }

    pub fn mul_mono(&self, mono: &Mono, c: &BigInt) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.mul(mono), k * c))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> MultiPoly {
        let mut out = MultiPoly::one();
        for _ in 0..n {
            out = out.mul_ref(self);
        }
        out
    }

    /// Greatest common divisor of all integer coefficients (non-negative).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divide all coefficients by an integer; must divide exactly.
    pub fn div_int(&self, d: &BigInt) -> MultiPoly {
        assert!(!d.is_zero());
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let (q, r) = c.div_rem(d);
                    assert!(r.is_zero(), "non-exact integer division in MultiPoly");
                    (*m, q)
                })
                .collect(),
        }
    }

    /// Exact polynomial division; panics if `den` does not divide `self`.
    pub fn exact_div(&self, den: &MultiPoly) -> MultiPoly {
        assert!(!den.is_zero(), "exact_div by zero polynomial");
        let mut rem = self.clone();
        let mut quo = MultiPoly::zero();
        let (dlm, dlc) = {
            let (m, c) = den.leading().unwrap();
            (*m, c.clone())
        };
        while !rem.is_zero() {
            let (rlm, rlc) = {
                let (m, c) = rem.leading().unwrap();
                (*m, c.clone())
            };
            assert!(
                dlm.divides(&rlm),
                "non-exact polynomial division (monomial)"
            );
            let (q, r) = rlc.div_rem(&dlc);
            assert!(r.is_zero(), "non-exact polynomial division (coefficient)");
            let qm = Mono::div(&rlm, &dlm);
            quo.insert_term(qm, q.clone());
            rem = rem.sub_ref(&den.mul_mono(&qm, &q));
        }
        quo
    }

    /// Substitute a polynomial for variable `i`.
    pub fn substitute(&self, i: usize, value: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut rest = m.0;
            let e = rest[i];
            rest[i] = 0;
            let term = MultiPoly::monomial(c.clone(), rest).mul_ref(&value.pow(e as u32));
            out = out.add_ref(&term);
        }
        out
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, point: &[BigRational; NVARS]) -> BigRational {
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = BigRational::from(c.clone());
            for i in 0..NVARS {
                for _ in 0..m.0[i] {
                    t *= &point[i];
                }
            }
            acc += t;
        }
        acc
    }

    /// Sign of the leading coefficient: +1, 0 or -1.
    pub fn leading_sign(&self) -> i32 {
        match self.leading() {
            None => 0,
            Some((_, c)) => {
                if c.is_negative() {
                    -1
                } else {
                    1
                }
            }
        }
    }

    /// Render with custom variable names.
    pub fn to_string_with(&self, names: &[&str; NVARS]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push('-');
            } else {
                out.push('+');
            }
            let is_const_mono = m.total_degree() == 0;
            if !abs.is_one() || is_const_mono {
                out.push_str(&abs.to_string());
            }
            for i in 0..NVARS {
                match m.0[i] {
                    0 => {}
                    1 => out.push_str(names[i]),
                    e => {
                        out.push_str(names[i]);
                        out.push('^');
                        out.push_str(&e.to_string());
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_with(&VAR_NAMES))
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.add_ref(rhs)
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.sub_ref(rhs)
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.mul_ref(rhs)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m() -> MultiPoly {
        MultiPoly::var(0)
    }
    fn u() -> MultiPoly {
        MultiPoly::var(1)
    }

    #[test]
    fn add_collects_terms() {
        // (m+2) + (m+2) = 2m+4
        let p = &m() + &MultiPoly::int(2);
        let s = &p + &p;
        assert_eq!(s, &MultiPoly::int(2) * &p);
    }

    #[test]
    fn mul_annihilator() {
        let p = &m() + &MultiPoly::int(2);
        assert!(p.mul_ref(&MultiPoly::zero()).is_zero());
    }

    #[test]
    fn difference_of_squares() {
        // (u+4)(u-4) = u^2 - 16
        let a = &u() + &MultiPoly::int(4);
        let b = &u() - &MultiPoly::int(4);
        let expect = &u().pow(2) - &MultiPoly::int(16);
        assert_eq!(a.mul_ref(&b), expect);
    }

    #[test]
    fn exact_division_roundtrip() {
        let a = &(&m() + &MultiPoly::int(1)) * &(&u() - &m());
        let q = a.exact_div(&(&m() + &MultiPoly::int(1)));
        assert_eq!(q, &u() - &m());
    }

    #[test]
    fn substitution() {
        // n -> 3m+3 inside n - 2: gives 3m + 1
        let n_minus_2 = &MultiPoly::var(0) - &MultiPoly::int(2);
        let sub = n_minus_2.substitute(0, &(&(&MultiPoly::int(3) * &m()) + &MultiPoly::int(3)));
        assert_eq!(sub, &(&MultiPoly::int(3) * &m()) + &MultiPoly::int(1));
    }
}
