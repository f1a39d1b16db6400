//! Exact integer Laurent polynomials on a half-integer exponent grid.
//!
//! Exponents are stored as twice their value (`exp2`), so `t^{1/2}` and
//! `t^{-3}` are both representable exactly; coefficients are arbitrary
//! precision. The canonical text form lists terms by increasing exponent as
//! `c*t^e`, prints half-integer exponents as fractions (`t^-1/2`), joins
//! terms with ` + ` / ` - `, and renders the zero polynomial as `0`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Laurent polynomial with integer coefficients; keys are twice the
/// exponent, zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> LaurentPoly {
        LaurentPoly::default()
    }

    pub fn one() -> LaurentPoly {
        LaurentPoly::term(1, 0)
    }

    /// The monomial `coeff · t^{exp2/2}`.
    pub fn term(coeff: impl Into<BigInt>, exp2: i64) -> LaurentPoly {
        let c: BigInt = coeff.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp2, c);
        }
        LaurentPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Iterates `(exp2, coefficient)` by increasing exponent.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, exp2: i64) -> BigInt {
        self.terms.get(&exp2).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn min_exp2(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp2(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    fn insert_add(terms: &mut BTreeMap<i64, BigInt>, exp2: i64, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = terms.entry(exp2).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            terms.remove(&exp2);
        }
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut terms = self.terms.clone();
        for (&e, c) in &other.terms {
            Self::insert_add(&mut terms, e, c);
        }
        LaurentPoly { terms }
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut terms = BTreeMap::new();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &other.terms {
                Self::insert_add(&mut terms, e1 + e2, &(c1 * c2));
            }
        }
        LaurentPoly { terms }
    }

    /// Multiplies by the monomial `coeff · t^{exp2/2}`.
    pub fn mul_term(&self, coeff: impl Into<BigInt>, exp2: i64) -> LaurentPoly {
        self.mul(&LaurentPoly::term(coeff, exp2))
    }

    pub fn pow(&self, k: u32) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// The substitution `t ↦ t⁻¹`.
    pub fn invert_variable(&self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Value at `t = 1`: the coefficient sum.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Exact quotient, or `None` when `self` is not a multiple of `other`.
    ///
    /// Long division from the top exponent. For an exact quotient q the
    /// bottom exponents satisfy min(self) = min(other) + min(q), so any
    /// quotient term below that bound proves inexactness and stops the loop.
    pub fn div_exact(&self, other: &LaurentPoly) -> Option<LaurentPoly> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        let quot_min = self.min_exp2()? - other.min_exp2()?;
        let lead_exp = other.max_exp2()?;
        let lead_coeff = other.terms[&lead_exp].clone();
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero();
        while !rem.is_zero() {
            let e = rem.max_exp2()?;
            let q_exp = e - lead_exp;
            if q_exp < quot_min {
                return None;
            }
            let c = &rem.terms[&e];
            if (c % &lead_coeff) != BigInt::zero() {
                return None;
            }
            let q_term = LaurentPoly::term(c / &lead_coeff, q_exp);
            rem = rem.sub(&q_term.mul(other));
            quot = quot.add(&q_term);
        }
        Some(quot)
    }
}

fn format_exp2(exp2: i64) -> String {
    if exp2 % 2 == 0 {
        (exp2 / 2).to_string()
    } else {
        format!("{exp2}/2")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (&e, c)) in self.terms.iter().enumerate() {
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "{}*t^{}", c.magnitude(), format_exp2(e))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(terms: &[(i64, i64)]) -> LaurentPoly {
        terms.iter().fold(LaurentPoly::zero(), |acc, &(c, e)| {
            acc.add(&LaurentPoly::term(c, e))
        })
    }

    #[test]
    fn display_canonical() {
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(LaurentPoly::one().to_string(), "1*t^0");
        // Ascending exponents, magnitudes after the separators.
        let p = poly(&[(1, 2), (1, 6), (-1, 8)]);
        assert_eq!(p.to_string(), "1*t^1 + 1*t^3 - 1*t^4");
        let q = poly(&[(-1, -5), (2, -1), (3, 0)]);
        assert_eq!(q.to_string(), "-1*t^-5/2 + 2*t^-1/2 + 3*t^0");
        assert_eq!(LaurentPoly::term(-4, 3).to_string(), "-4*t^3/2");
    }

    #[test]
    fn arithmetic() {
        let one_plus_t = poly(&[(1, 0), (1, 2)]);
        let one_minus_t = poly(&[(1, 0), (-1, 2)]);
        assert_eq!(one_plus_t.mul(&one_minus_t), poly(&[(1, 0), (-1, 4)]));
        assert!(one_plus_t.sub(&one_plus_t).is_zero());
        assert_eq!(one_plus_t.pow(2), poly(&[(1, 0), (2, 2), (1, 4)]));
        assert_eq!(
            poly(&[(2, -2), (1, 4)]).invert_variable(),
            poly(&[(2, 2), (1, -4)])
        );
        assert_eq!(poly(&[(2, -2), (3, 4)]).eval_at_one(), BigInt::from(5));
    }

    #[test]
    fn cancellation_removes_terms() {
        let p = poly(&[(1, 0)]).add(&poly(&[(-1, 0)]));
        assert!(p.is_zero());
        assert_eq!(p, LaurentPoly::zero());
    }

    #[test]
    fn exact_division() {
        let a = poly(&[(1, 0), (-2, 2), (3, 6)]);
        let b = poly(&[(2, -4), (1, 0), (1, 2)]);
        let prod = a.mul(&b);
        assert_eq!(prod.div_exact(&b), Some(a.clone()));
        assert_eq!(prod.div_exact(&a), Some(b));

        // 1 - t² over 1 + t.
        let quot = poly(&[(1, 0), (-1, 4)])
            .div_exact(&poly(&[(1, 0), (1, 2)]))
            .unwrap();
        assert_eq!(quot, poly(&[(1, 0), (-1, 2)]));
    }

    #[test]
    fn inexact_division_detected() {
        let one = LaurentPoly::one();
        let one_plus_t = poly(&[(1, 0), (1, 2)]);
        assert_eq!(one.div_exact(&one_plus_t), None);
        // Coefficient non-divisibility.
        assert_eq!(poly(&[(3, 0)]).div_exact(&poly(&[(2, 0)])), None);
        assert_eq!(one.div_exact(&LaurentPoly::zero()), None);
        assert_eq!(
            LaurentPoly::zero().div_exact(&one),
            Some(LaurentPoly::zero())
        );
    }
}
