//! Sparse Laurent polynomials in the variables `U`, `V`, `M` over exact rationals.
//!
//! Every scalar in this crate lives in one ring. The generator-image parameters
//! are `c = U^2` and `d = V^2`, so `sqrt(cd) = UV` and `sqrt(c/d) = U*V^-1` are
//! genuine monomials, and `M` packages the free parameter of the first
//! coefficient family as `M = a + c + d - 1`, keeping its reciprocal a monomial
//! as well. With those substitutions no square root or denominator survives
//! anywhere in the algebra.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::qpoly::QPoly;

/// Exponent vector `(e_U, e_V, e_M)` of a monomial `U^a V^b M^c`.
pub type Exp = (i64, i64, i64);

/// A Laurent polynomial in `U`, `V`, `M` with `BigRational` coefficients.
///
/// Invariant: no stored coefficient is zero; the zero polynomial is the empty
/// term map, so equality of values is equality of maps.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Exp, BigRational>,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::monomial(rat(n), (0, 0, 0))
    }

    pub fn from_rational(r: BigRational) -> Self {
        Self::monomial(r, (0, 0, 0))
    }

    /// Single term `coeff * U^e.0 V^e.1 M^e.2` (empty if `coeff == 0`).
    pub fn monomial(coeff: BigRational, exp: Exp) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        Self { terms }
    }

    /// Integer-coefficient monomial, the common case when transcribing
    /// generator coefficients.
    pub fn int_monomial(coeff: i64, exp: Exp) -> Self {
        Self::monomial(rat(coeff), exp)
    }

    /// `(UV)^k`.
    pub fn uv_pow(k: i64) -> Self {
        Self::int_monomial(1, (k, k, 0))
    }

    /// `M^k`.
    pub fn m_pow(k: i64) -> Self {
        Self::int_monomial(1, (0, 0, k))
    }

    /// `(U V^-1)^k = sqrt(c/d)^k`.
    pub fn u_over_v_pow(k: i64) -> Self {
        Self::int_monomial(1, (k, -k, 0))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&(0, 0, 0))
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exp, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exp: Exp) -> BigRational {
        self.terms.get(&exp).cloned().unwrap_or_else(BigRational::zero)
    }

    fn insert(terms: &mut BTreeMap<Exp, BigRational>, exp: Exp, coeff: BigRational) {
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
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (*e, -c.clone()))
                .collect(),
        }
    }

    pub fn mul_ref(&self, rhs: &Self) -> Self {
        let mut terms = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let exp = (e1.0 + e2.0, e1.1 + e2.1, e1.2 + e2.2);
                Self::insert(&mut terms, exp, c1 * c2);
            }
        }
        Self { terms }
    }

    pub fn scale(&self, by: &BigRational) -> Self {
        if by.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (*e, c * by))
                .collect(),
        }
    }

    pub fn scale_int(&self, by: i64) -> Self {
        self.scale(&rat(by))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc.mul_ref(self);
        }
        acc
    }

    /// Componentwise minimum exponent over all terms, `(0,0,0)` for zero.
    fn min_exps(&self) -> Exp {
        let mut it = self.terms.keys();
        let first = match it.next() {
            Some(e) => *e,
            None => return (0, 0, 0),
        };
        it.fold(first, |acc, e| {
            (acc.0.min(e.0), acc.1.min(e.1), acc.2.min(e.2))
        })
    }

    /// Splits off the monomial content so all exponents become nonnegative:
    /// `self = U^s.0 V^s.1 M^s.2 * poly` with each variable's minimum exponent
    /// in `poly` equal to zero.
    fn normalized(&self) -> (Self, Exp) {
        let s = self.min_exps();
        let poly = Self {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| ((e.0 - s.0, e.1 - s.1, e.2 - s.2), c.clone()))
                .collect(),
        };
        (poly, s)
    }

    /// Exact division in the Laurent ring: returns `r` with `r * divisor == self`.
    ///
    /// Both operands are shifted to ordinary polynomials first; a quotient of
    /// two min-degree-zero polynomials is again an ordinary polynomial, so
    /// plain leading-term division (lex order) decides divisibility.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let (p, ps) = self.normalized();
        let (q, qs) = divisor.normalized();
        let (qlead_exp, qlead_coeff) = q.terms.iter().next_back().expect("divisor nonzero");
        let mut rem = p;
        let mut quo = Self::zero();
        while !rem.is_zero() {
            let (rlead_exp, rlead_coeff) = rem.terms.iter().next_back().expect("rem nonzero");
            let d = (
                rlead_exp.0 - qlead_exp.0,
                rlead_exp.1 - qlead_exp.1,
                rlead_exp.2 - qlead_exp.2,
            );
            if d.0 < 0 || d.1 < 0 || d.2 < 0 {
                return Err(Error::NotDivisible(format!(
                    "remainder leading term U^{} V^{} M^{} not divisible",
                    rlead_exp.0, rlead_exp.1, rlead_exp.2
                )));
            }
            let t = Self::monomial(rlead_coeff / qlead_coeff, d);
            rem = rem.sub_ref(&t.mul_ref(&q));
            quo = quo.add_ref(&t);
        }
        let shift = Self::int_monomial(1, (ps.0 - qs.0, ps.1 - qs.1, ps.2 - qs.2));
        Ok(quo.mul_ref(&shift))
    }

    /// True iff every term has `e_U == e_V` and `e_M == 0`, i.e. the value lies
    /// in the subring generated by `(UV)^±1`.
    pub fn is_balanced(&self) -> bool {
        self.terms.keys().all(|e| e.0 == e.1 && e.2 == 0)
    }

    /// Collapses a balanced polynomial to a one-variable polynomial in
    /// `q = UV` (so `q^2 = cd`).
    pub fn to_q(&self) -> Result<QPoly> {
        if !self.is_balanced() {
            return Err(Error::NotBalanced(format!("{self}")));
        }
        Ok(QPoly::from_terms(
            self.terms.iter().map(|(e, c)| (e.0, c.clone())),
        ))
    }

    /// The parameter substitution `c -> 1/d, d -> 1/c`, realized on variables
    /// as `U -> V^-1, V -> U^-1` (an involution; `M` is untouched).
    pub fn swap_uv_inverse(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| ((-e.1, -e.0, e.2), c.clone()))
                .collect(),
        }
    }

    /// Evaluates at rational points `U = u, V = v, M = m` (all nonzero, since
    /// negative exponents occur).
    pub fn eval(&self, u: &BigRational, v: &BigRational, m: &BigRational) -> Result<BigRational> {
        if u.is_zero() || v.is_zero() || m.is_zero() {
            return Err(Error::IndexOutOfRange(
                "evaluation point must have nonzero coordinates".into(),
            ));
        }
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            acc += c * int_pow(u, e.0) * int_pow(v, e.1) * int_pow(m, e.2);
        }
        Ok(acc)
    }
}

fn int_pow(base: &BigRational, exp: i64) -> BigRational {
    if exp >= 0 {
        num_traits::pow::pow(base.clone(), exp as usize)
    } else {
        num_traits::pow::pow(base.recip(), (-exp) as usize)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.add_ref(rhs)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.sub_ref(rhs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.mul_ref(rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.neg_ref()
    }
}

fn fmt_var(out: &mut String, name: &str, e: i64) {
    if e == 0 {
        return;
    }
    if !out.is_empty() {
        out.push('*');
    }
    out.push_str(name);
    if e != 1 {
        out.push('^');
        out.push_str(&e.to_string());
    }
}

fn fmt_term(exp: &Exp, coeff: &BigRational) -> String {
    let mut vars = String::new();
    fmt_var(&mut vars, "U", exp.0);
    fmt_var(&mut vars, "V", exp.1);
    fmt_var(&mut vars, "M", exp.2);
    if vars.is_empty() {
        format!("{coeff}")
    } else if coeff.is_one() {
        vars
    } else if (-coeff).is_one() {
        format!("-{vars}")
    } else {
        format!("{coeff}*{vars}")
    }
}

impl fmt::Display for LaurentPoly {
    /// Terms sorted graded-lexicographically on `(e_U, e_V, e_M)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut keys: Vec<&Exp> = self.terms.keys().collect();
        keys.sort_by_key(|e| (e.0 + e.1 + e.2, e.0, e.1, e.2));
        let mut first = true;
        for e in keys {
            let c = &self.terms[e];
            let t = fmt_term(e, c);
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

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn u() -> LaurentPoly {
        LaurentPoly::int_monomial(1, (1, 0, 0))
    }

    fn v() -> LaurentPoly {
        LaurentPoly::int_monomial(1, (0, 1, 0))
    }

    #[test]
    fn cancellation() {
        let p = &(&u() + &v()) + &(&u() - &v());
        assert_eq!(p, u().scale_int(2));
    }

    #[test]
    fn exponent_addition() {
        let uv_inv = LaurentPoly::int_monomial(1, (1, -1, 0));
        let uv = LaurentPoly::uv_pow(1);
        assert_eq!(&uv_inv * &uv, LaurentPoly::int_monomial(1, (2, 0, 0)));
    }

    #[test]
    fn distributivity_expansion() {
        // (1 - U^2)(1 - V^2) == 1 - U^2 - V^2 + U^2 V^2 as term maps
        let one = LaurentPoly::one();
        let u2 = LaurentPoly::int_monomial(1, (2, 0, 0));
        let v2 = LaurentPoly::int_monomial(1, (0, 2, 0));
        let lhs = &(&one - &u2) * &(&one - &v2);
        let rhs = &(&(&one - &u2) - &v2) + &(&u2 * &v2);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn exact_div_constructed_product() {
        let f = &LaurentPoly::one() + &LaurentPoly::uv_pow(2); // 1 + U^2V^2
        let uv = LaurentPoly::uv_pow(1);
        let p = &f * &uv;
        assert_eq!(p.exact_div(&f).unwrap(), uv);
        assert_eq!(uv.exact_div(&uv).unwrap(), LaurentPoly::one());
    }

    #[test]
    fn exact_div_by_monomial_always_succeeds() {
        // monomials are units in the Laurent ring
        let f = &LaurentPoly::one() + &LaurentPoly::uv_pow(2);
        let q = f.exact_div(&LaurentPoly::uv_pow(1)).unwrap();
        assert_eq!(q, &LaurentPoly::uv_pow(-1) + &LaurentPoly::uv_pow(1));
    }

    #[test]
    fn exact_div_remainder_nonzero() {
        // UV is not a multiple of the two-term divisor 1 + U^2V^2
        let f = &LaurentPoly::one() + &LaurentPoly::uv_pow(2);
        assert!(matches!(
            LaurentPoly::uv_pow(1).exact_div(&f),
            Err(Error::NotDivisible(_))
        ));
    }

    #[test]
    fn exact_div_zero_divisor() {
        assert_eq!(
            LaurentPoly::one().exact_div(&LaurentPoly::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn balanced_predicate() {
        assert!((&LaurentPoly::one() + &LaurentPoly::uv_pow(2)).is_balanced());
        assert!(!LaurentPoly::u_over_v_pow(1).is_balanced());
        assert!(LaurentPoly::zero().is_balanced());
    }

    #[test]
    fn to_q_collapses_uv() {
        let p = &LaurentPoly::one() + &LaurentPoly::uv_pow(2);
        assert_eq!(p.to_q().unwrap(), QPoly::from_int_terms(&[(0, 1), (2, 1)]));
        let p = &LaurentPoly::uv_pow(-1) + &LaurentPoly::uv_pow(1);
        assert_eq!(p.to_q().unwrap(), QPoly::from_int_terms(&[(-1, 1), (1, 1)]));
        let bad = LaurentPoly::int_monomial(1, (1, 2, 0));
        assert!(matches!(bad.to_q(), Err(Error::NotBalanced(_))));
    }

    #[test]
    fn swap_uv_inverse_is_involution() {
        let p = &(&u() - &v().pow(3)) + &LaurentPoly::m_pow(2);
        assert_eq!(p.swap_uv_inverse().swap_uv_inverse(), p);
    }

    #[test]
    fn display_order_is_graded_lex() {
        let p = &(&LaurentPoly::uv_pow(-1) + &LaurentPoly::uv_pow(1)).neg_ref()
            + &LaurentPoly::from_int(3);
        assert_eq!(format!("{p}"), "-U^-1*V^-1 + 3 - U*V");
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        proptest::collection::vec(((-3i64..=3, -3i64..=3, -2i64..=2), -4i64..=4), 0..6).prop_map(
            |terms| {
                let mut p = LaurentPoly::zero();
                for (e, c) in terms {
                    p = p.add_ref(&LaurentPoly::int_monomial(c, e));
                }
                p
            },
        )
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn exact_div_recovers_factor(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            let p = &a * &b;
            prop_assert_eq!(p.exact_div(&b).unwrap(), a);
        }

        #[test]
        fn to_q_is_multiplicative(a in arb_poly(), b in arb_poly()) {
            // restrict to balanced inputs by symmetrizing the exponents
            let bal = |p: &LaurentPoly| {
                let mut out = LaurentPoly::zero();
                for (e, c) in p.terms() {
                    out = out.add_ref(&LaurentPoly::monomial(c.clone(), (e.0, e.0, 0)));
                }
                out
            };
            let (a, b) = (bal(&a), bal(&b));
            let lhs = (&a * &b).to_q().unwrap();
            let rhs = &a.to_q().unwrap() * &b.to_q().unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
