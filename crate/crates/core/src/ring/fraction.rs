use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Signed};

use super::{Coeff, LaurentPoly, RingError};

/// Unreduced fraction of Laurent polynomials.
///
/// Equality is cross-multiplication (`a/b == c/d` iff `a*d == c*b`); no
/// multivariate gcd is attempted. Construction normalizes the cheap parts:
/// unit monomials and integer content are cancelled, the denominator's lowest
/// term is made positive, and a full exact division is tried once so that
/// fractions which happen to be polynomials carry denominator 1.
#[derive(Clone, Eq)]
pub struct Fraction {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Fraction {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, RingError> {
        if den.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        if num.nvars() != den.nvars() {
            return Err(RingError::VarMismatch { left: num.nvars(), right: den.nvars() });
        }
        let mut f = Fraction { num, den };
        f.normalize();
        Ok(f)
    }

    pub fn from_laurent(p: LaurentPoly) -> Self {
        let one = LaurentPoly::one(p.nvars());
        Fraction { num: p, den: one }
    }

    pub fn zero(nvars: usize) -> Self {
        Self::from_laurent(LaurentPoly::zero(nvars))
    }

    pub fn one(nvars: usize) -> Self {
        Self::from_laurent(LaurentPoly::one(nvars))
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = LaurentPoly::one(self.den.nvars());
            return;
        }
        // Unit monomial on the denominator: shift both sides.
        let md = self.den.min_exps();
        if md.iter().any(|&x| x != 0) {
            let neg: Vec<i32> = md.iter().map(|x| -x).collect();
            self.num = self.num.shifted(&neg);
            self.den = self.den.shifted(&neg);
        }
        // Integer content.
        let g = self.num.int_content().gcd(&self.den.int_content());
        if !g.is_one() {
            self.num = self.num.div_int_exact(&g);
            self.den = self.den.div_int_exact(&g);
        }
        // Sign: lowest denominator term positive.
        if self.den.terms().next().is_some_and(|(_, c)| c.is_negative()) {
            self.num = self.num.negated();
            self.den = self.den.negated();
        }
        if self.den.is_one() {
            return;
        }
        // Fold fractions that are secretly polynomials.
        if let Ok(q) = self.num.exact_div(&self.den) {
            self.num = q;
            self.den = LaurentPoly::one(self.den.nvars());
        }
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self, RingError> {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        Fraction::new(num, &self.den * &rhs.den)
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self, RingError> {
        let num = &(&self.num * &rhs.den) - &(&rhs.num * &self.den);
        Fraction::new(num, &self.den * &rhs.den)
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, RingError> {
        Fraction::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }

    pub fn negated(&self) -> Self {
        Fraction { num: self.num.negated(), den: self.den.clone() }
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inv(&self) -> Result<Self, RingError> {
        Fraction::new(self.den.clone(), self.num.clone())
    }

    pub fn mul_laurent(&self, p: &LaurentPoly) -> Self {
        Fraction::new(&self.num * p, self.den.clone()).expect("denominator unchanged")
    }

    /// Clear to a Laurent polynomial by exact division; `NonDivisible` when the
    /// fraction is not integral.
    pub fn into_laurent(&self) -> Result<LaurentPoly, RingError> {
        if self.den.is_one() {
            Ok(self.num.clone())
        } else {
            self.num.exact_div(&self.den)
        }
    }

    /// Apply `merge_vars` to numerator and denominator.
    pub fn merge_vars(&self) -> Result<Self, RingError> {
        Fraction::new(self.num.merge_vars(), self.den.merge_vars())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "num": self.num.to_json(), "den": self.den.to_json() })
    }
}

/// Mathematical equality by cross-multiplication.
impl PartialEq for Fraction {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Add for &Fraction {
    type Output = Fraction;
    fn add(self, rhs: Self) -> Fraction {
        self.checked_add(rhs).expect("fraction addition")
    }
}

impl Sub for &Fraction {
    type Output = Fraction;
    fn sub(self, rhs: Self) -> Fraction {
        self.checked_sub(rhs).expect("fraction subtraction")
    }
}

impl Mul for &Fraction {
    type Output = Fraction;
    fn mul(self, rhs: Self) -> Fraction {
        self.checked_mul(rhs).expect("fraction multiplication")
    }
}

impl Neg for &Fraction {
    type Output = Fraction;
    fn neg(self) -> Fraction {
        self.negated()
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Coeff for Fraction {
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        self.negated()
    }
    fn is_zero(&self) -> bool {
        Fraction::is_zero(self)
    }
}
