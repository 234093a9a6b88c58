use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Coeff, RingError};

/// Exponent vector of a monomial; entries may be negative. Length always
/// equals the ambient variable count of the containing polynomial. The
/// derived `Ord` on `Vec<i32>` is lexicographic, which fixes the canonical
/// term order everywhere (printing, JSON, leading terms).
pub type ExpVec = Vec<i32>;

/// Sparse multivariate Laurent polynomial with `BigInt` coefficients.
///
/// Invariants: no stored coefficient is zero, every exponent vector has
/// length `nvars`, and terms iterate in ascending lexicographic order.
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<ExpVec, BigInt>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::int(nvars, 1)
    }

    pub fn int(nvars: usize, c: i64) -> Self {
        Self::constant(nvars, BigInt::from(c))
    }

    pub fn constant(nvars: usize, c: BigInt) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    /// The variable `z_idx` (0-based slot).
    pub fn var(nvars: usize, idx: usize) -> Self {
        Self::var_pow(nvars, idx, 1)
    }

    /// `z_idx^e` for any integer exponent.
    pub fn var_pow(nvars: usize, idx: usize, e: i32) -> Self {
        assert!(idx < nvars, "variable index {idx} out of range for {nvars} variables");
        let mut exps = vec![0; nvars];
        exps[idx] = e;
        Self::monomial(nvars, exps, BigInt::one())
    }

    pub fn monomial(nvars: usize, exps: ExpVec, coef: BigInt) -> Self {
        assert_eq!(exps.len(), nvars);
        let mut p = Self::zero(nvars);
        if !coef.is_zero() {
            p.terms.insert(exps, coef);
        }
        p
    }

    pub fn from_terms<I>(nvars: usize, iter: I) -> Self
    where
        I: IntoIterator<Item = (ExpVec, BigInt)>,
    {
        let mut p = Self::zero(nvars);
        for (e, c) in iter {
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(e, c)| e.iter().all(|&x| x == 0) && c.is_one())
    }

    /// Iterate terms in ascending lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&ExpVec, &BigInt)> {
        self.terms.iter()
    }

    /// The single term `(exps, coef)` if the polynomial is a monomial.
    pub fn as_monomial(&self) -> Option<(&ExpVec, &BigInt)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    fn add_term(&mut self, exps: ExpVec, coef: BigInt) {
        debug_assert_eq!(exps.len(), self.nvars);
        if coef.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(coef);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coef;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_vars(&self, rhs: &Self) -> Result<(), RingError> {
        if self.nvars == rhs.nvars {
            Ok(())
        } else {
            Err(RingError::VarMismatch { left: self.nvars, right: rhs.nvars })
        }
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self, RingError> {
        self.check_vars(rhs)?;
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self, RingError> {
        self.check_vars(rhs)?;
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, RingError> {
        self.check_vars(rhs)?;
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: ExpVec = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn negated(&self) -> Self {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect();
        LaurentPoly { nvars: self.nvars, terms }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one(self.nvars);
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                out = &out * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        out
    }

    /// Scale by an integer.
    pub fn scaled_int(&self, k: i64) -> Self {
        if k == 0 {
            return Self::zero(self.nvars);
        }
        let k = BigInt::from(k);
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), c * &k)).collect();
        LaurentPoly { nvars: self.nvars, terms }
    }

    /// Shift every exponent vector by `delta` (multiply by the monomial z^delta).
    pub fn shifted(&self, delta: &[i32]) -> Self {
        assert_eq!(delta.len(), self.nvars);
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.iter().zip(delta).map(|(x, d)| x + d).collect(), c.clone()))
            .collect();
        LaurentPoly { nvars: self.nvars, terms }
    }

    /// Per-variable minimum exponent over all terms. Zero vector for the zero
    /// polynomial.
    pub fn min_exps(&self) -> ExpVec {
        let mut m = vec![i32::MAX; self.nvars];
        for e in self.terms.keys() {
            for (slot, &x) in m.iter_mut().zip(e) {
                *slot = (*slot).min(x);
            }
        }
        if self.terms.is_empty() {
            m.fill(0);
        }
        m
    }

    /// gcd of all coefficients (positive; zero for the zero polynomial).
    pub fn int_content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divide every coefficient by `d`, which must divide each exactly.
    pub fn div_int_exact(&self, d: &BigInt) -> Self {
        assert!(!d.is_zero());
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let (q, r) = c.div_rem(d);
                assert!(r.is_zero(), "integer content division must be exact");
                (e.clone(), q)
            })
            .collect();
        LaurentPoly { nvars: self.nvars, terms }
    }

    /// Exact division in the Laurent ring: returns `q` with `q * rhs == self`,
    /// or an error when no such `q` exists.
    ///
    /// Both operands are shifted to the ordinary polynomial ring (nonnegative
    /// exponents, trivial monomial content) and divided by cancelling leading
    /// terms in lexicographic order; any failure of monomial or coefficient
    /// divisibility along the way proves non-divisibility.
    pub fn exact_div(&self, rhs: &Self) -> Result<Self, RingError> {
        self.check_vars(rhs)?;
        if rhs.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero(self.nvars));
        }
        let ma = self.min_exps();
        let mb = rhs.min_exps();
        let neg = |v: &[i32]| -> ExpVec { v.iter().map(|x| -x).collect() };
        let a = self.shifted(&neg(&ma));
        let b = rhs.shifted(&neg(&mb));

        let (lead_b, lc_b) = b.terms.iter().next_back().expect("nonzero divisor");
        let lead_b = lead_b.clone();
        let lc_b = lc_b.clone();

        let mut rem = a;
        let mut quot = Self::zero(self.nvars);
        while !rem.is_zero() {
            let (lead_r, lc_r) = rem.terms.iter().next_back().expect("nonzero remainder");
            if lead_r.iter().zip(&lead_b).any(|(r, b)| r < b) {
                return Err(RingError::NonDivisible);
            }
            let (qc, qr) = lc_r.div_rem(&lc_b);
            if !qr.is_zero() {
                return Err(RingError::NonDivisible);
            }
            let qe: ExpVec = lead_r.iter().zip(&lead_b).map(|(r, b)| r - b).collect();
            let t = Self::monomial(self.nvars, qe, qc);
            rem = &rem - &(&t * &b);
            quot = &quot + &t;
        }

        // self/rhs = (a/b) * z^(ma - mb)
        let delta: ExpVec = ma.iter().zip(&mb).map(|(x, y)| x - y).collect();
        Ok(quot.shifted(&delta))
    }

    /// Collapse all variables onto a single `z`: each exponent vector maps to
    /// the sum of its entries. Ring homomorphism.
    pub fn merge_vars(&self) -> Self {
        let mut out = Self::zero(1);
        for (e, c) in &self.terms {
            out.add_term(vec![e.iter().map(|&x| x as i64).sum::<i64>() as i32], c.clone());
        }
        out
    }

    /// Rewrite `z^-4 -> t` on a single-variable polynomial: exponent `e` maps
    /// to `-e/4`. Errors when some exponent is not divisible by 4.
    pub fn t_rewrite(&self) -> Result<Self, RingError> {
        assert_eq!(self.nvars, 1, "t-rewrite applies to merged single-variable polynomials");
        let mut out = Self::zero(1);
        for (e, c) in &self.terms {
            if e[0].rem_euclid(4) != 0 {
                return Err(RingError::NotInImage { exponent: e[0] as i64 });
            }
            out.add_term(vec![-(e[0] / 4)], c.clone());
        }
        Ok(out)
    }

    /// Substitute `z -> z^-1` on every variable (exponent negation).
    pub fn invert_vars(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.iter().map(|&x| -x).collect(), c.clone()))
            .collect();
        LaurentPoly { nvars: self.nvars, terms }
    }

    /// Unit-canonical representative: divide by the unique `+-monomial` unit
    /// so the per-variable minimum exponent is zero and the lexicographically
    /// lowest term has a positive coefficient.
    pub fn unit_canonical(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let m = self.min_exps();
        let mut out = self.shifted(&m.iter().map(|x| -x).collect::<Vec<_>>());
        if out.terms.iter().next().is_some_and(|(_, c)| c.is_negative()) {
            out = out.negated();
        }
        out
    }

    /// True when `self == u * rhs` for a unit `u = +-monomial`.
    pub fn units_equal(&self, rhs: &Self) -> bool {
        if self.nvars != rhs.nvars {
            return false;
        }
        self.unit_canonical() == rhs.unit_canonical()
    }

    /// Canonical text form: ascending lex terms, explicit coefficients and
    /// exponents, e.g. `-1*z1^-2*z2^0 + 1*z1^2*z2^0`.
    pub fn canonical_text(&self, vars: &[&str]) -> String {
        assert_eq!(vars.len(), self.nvars);
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::with_capacity(self.terms.len());
        for (e, c) in &self.terms {
            let mut s = c.to_string();
            for (name, x) in vars.iter().zip(e) {
                s.push_str(&format!("*{name}^{x}"));
            }
            parts.push(s);
        }
        parts.join(" + ")
    }

    /// Human form: descending lex terms, units and zero exponents elided,
    /// e.g. `t - 1 + t^-1`.
    pub fn pretty(&self, vars: &[&str]) -> String {
        assert_eq!(vars.len(), self.nvars);
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.magnitude().to_string();
            let mono: Vec<String> = vars
                .iter()
                .zip(e)
                .filter(|(_, &x)| x != 0)
                .map(|(name, &x)| if x == 1 { (*name).to_string() } else { format!("{name}^{x}") })
                .collect();
            let mono = mono.join("*");
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if mono.is_empty() {
                out.push_str(&abs);
            } else if abs == "1" {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{abs}*{mono}"));
            }
        }
        out
    }

    /// JSON form: sorted list of `{"exp": [..], "coef": "decimal"}`.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(e, c)| {
                serde_json::json!({
                    "exp": e,
                    "coef": c.to_string(),
                })
            })
            .collect();
        serde_json::Value::Array(terms)
    }

    /// Default display names `z1..zN` (or `t` when a single variable is more
    /// naturally read that way; callers pick via `canonical_text`/`pretty`).
    pub fn default_var_names(nvars: usize) -> Vec<String> {
        (1..=nvars).map(|i| format!("z{i}")).collect()
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = Self::default_var_names(self.nvars);
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        write!(f, "{}", self.canonical_text(&refs))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: Self) -> LaurentPoly {
        self.checked_add(rhs).expect("variable count mismatch in +")
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: Self) -> LaurentPoly {
        self.checked_sub(rhs).expect("variable count mismatch in -")
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: Self) -> LaurentPoly {
        self.checked_mul(rhs).expect("variable count mismatch in *")
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.negated()
    }
}

impl Coeff for LaurentPoly {
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
        LaurentPoly::is_zero(self)
    }
}
