//! One-variable Laurent polynomials in `q`, the output ring for link
//! invariants (`q^2 = cd = t`). The Burau oracle also reuses this type with
//! the variable read as `t` internally, inflating exponents on the way out.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Default)]
pub struct QPoly {
    terms: BTreeMap<i64, BigRational>,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl QPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(rat(1), 0)
    }

    pub fn monomial(coeff: BigRational, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        Self { terms }
    }

    pub fn int_monomial(coeff: i64, exp: i64) -> Self {
        Self::monomial(rat(coeff), exp)
    }

    pub fn from_terms(it: impl IntoIterator<Item = (i64, BigRational)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in it {
            Self::insert(&mut p.terms, e, c);
        }
        p
    }

    pub fn from_int_terms(terms: &[(i64, i64)]) -> Self {
        Self::from_terms(terms.iter().map(|&(e, c)| (e, rat(c))))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).map(|c| c.is_one()).unwrap_or(false)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: i64) -> BigRational {
        self.terms.get(&exp).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    fn insert(terms: &mut BTreeMap<i64, BigRational>, exp: i64, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        match terms.get_mut(&exp) {
            Some(c) => {
                *c += coeff;
                if c.is_zero() {
                    terms.remove(&exp);
                }
            }
            None => {
                terms.insert(exp, coeff);
            }
        }
    }

    pub fn add_ref(&self, rhs: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            Self::insert(&mut terms, *e, c.clone());
        }
        Self { terms }
    }

    pub fn sub_ref(&self, rhs: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            Self::insert(&mut terms, *e, -c.clone());
        }
        Self { terms }
    }

    pub fn neg_ref(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }

    pub fn mul_ref(&self, rhs: &Self) -> Self {
        let mut terms = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                Self::insert(&mut terms, e1 + e2, c1 * c2);
            }
        }
        Self { terms }
    }

    pub fn scale(&self, by: &BigRational) -> Self {
        if by.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c * by)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc.mul_ref(self);
        }
        acc
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Substitute `q -> q^-1`.
    pub fn invert_var(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Substitute `q -> -q` (negates odd-degree coefficients).
    pub fn negate_var(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (*e, if e.rem_euclid(2) == 1 { -c.clone() } else { c.clone() }))
                .collect(),
        }
    }

    /// Substitute `q -> q^m` for positive `m` (used to read a `t`-polynomial
    /// in `q` via `t = q^2`).
    pub fn inflate(&self, m: i64) -> Self {
        assert!(m > 0);
        Self {
            terms: self.terms.iter().map(|(e, c)| (e * m, c.clone())).collect(),
        }
    }

    /// Exact division; `Err(NotDivisible)` when no Laurent quotient exists.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let shift = self.min_exp().unwrap() - divisor.min_exp().unwrap();
        let p = self.shift(-self.min_exp().unwrap());
        let q = divisor.shift(-divisor.min_exp().unwrap());
        let (qdeg, qlead) = q.terms.iter().next_back().expect("divisor nonzero");
        let (qdeg, qlead) = (*qdeg, qlead.clone());
        let mut rem = p;
        let mut quo = Self::zero();
        while !rem.is_zero() {
            let (rdeg, rlead) = rem.terms.iter().next_back().expect("rem nonzero");
            let d = rdeg - qdeg;
            if d < 0 {
                return Err(Error::NotDivisible(format!("{self} by {divisor}")));
            }
            let t = Self::monomial(rlead / &qlead, d);
            rem = rem.sub_ref(&t.mul_ref(&q));
            quo = quo.add_ref(&t);
        }
        Ok(quo.shift(shift))
    }

    /// True iff `self == other` or `self == -other` after some shift `q^k`,
    /// i.e. equality up to units of the Laurent ring.
    pub fn eq_up_to_units(&self, other: &Self) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        let k = self.min_exp().unwrap() - other.min_exp().unwrap();
        let shifted = other.shift(k);
        *self == shifted || *self == shifted.neg_ref()
    }

    /// Canonical representative of the `±q^k` unit orbit: centered on zero
    /// when centering produces a (anti)palindromic polynomial, otherwise
    /// shifted so the lowest exponent is zero; sign fixed so the leading
    /// coefficient is positive.
    pub fn canonical_unit_form(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let lo = self.min_exp().unwrap();
        let hi = self.max_exp().unwrap();
        let centered = if (lo + hi) % 2 == 0 {
            let c = self.shift(-(lo + hi) / 2);
            let inv = c.invert_var();
            if inv == c || inv == c.neg_ref() {
                Some(c)
            } else {
                None
            }
        } else {
            None
        };
        let p = centered.unwrap_or_else(|| self.shift(-lo));
        let lead = p.terms.iter().next_back().map(|(_, c)| c.clone()).unwrap();
        if lead.is_negative() {
            p.neg_ref()
        } else {
            p
        }
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        self.add_ref(rhs)
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        self.sub_ref(rhs)
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        self.mul_ref(rhs)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        self.neg_ref()
    }
}

impl fmt::Display for QPoly {
    /// Terms sorted by exponent, rendered as `q^k`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            let t = match (*e, c) {
                (0, c) => format!("{c}"),
                (1, c) if c.is_one() => "q".to_string(),
                (1, c) if (-c).is_one() => "-q".to_string(),
                (1, c) => format!("{c}*q"),
                (e, c) if c.is_one() => format!("q^{e}"),
                (e, c) if (-c).is_one() => format!("-q^{e}"),
                (e, c) => format!("{c}*q^{e}"),
            };
            if first {
                write!(f, "{t}")?;
                first = false;
            } else if let Some(stripped) = t.strip_prefix('-') {
                write!(f, " - {stripped}")?;
            } else {
                write!(f, " + {t}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly({self})")
    }
}
