//! Link invariants from braid closures: the Markov-trace scalar through both
//! computation routes, the framed invariant tau, the multivariable
//! Alexander-Conway polynomial, and an independent single-variable oracle
//! from textbook reduced Burau matrices.
//!
//! The framing correction is per component: tau multiplies the trace scalar
//! by `(-z_c^2)^(w_c)` for every closure component, `z_c` the component's
//! color variable and `w_c` its self-writhe. With the pivotal partial
//! supertrace this makes tau exactly invariant under conjugation and both
//! stabilizations; the Alexander-Conway polynomial is tau cleared to a
//! Laurent polynomial and normalized up to units.

use std::fmt;

use crate::braid::{BraidError, Color, ColoredBraid};
use crate::matrix::Mat;
use crate::ring::{Fraction, LaurentPoly, RingError};
use crate::schurweyl::{multiplicity_trace_sum, SchurError};
use crate::tensorrep::{partial_supertrace_keep_first, represent, TensorError};

#[derive(Clone, Debug)]
pub enum InvError {
    Braid(BraidError),
    Tensor(TensorError),
    Schur(SchurError),
    Ring(RingError),
    /// Strands of one closure component carry different colors; the closure
    /// has no consistent coloring.
    ComponentColors { component: Vec<usize> },
    /// The two computation routes disagreed; a convention bug, surfaced loudly.
    PathMismatch { tensor: Box<Fraction>, exterior: Box<Fraction> },
    /// The scalar did not clear to a Laurent polynomial.
    NonDivisible { value: Box<Fraction> },
}

impl fmt::Display for InvError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvError::Braid(e) => write!(f, "{e}"),
            InvError::Tensor(e) => write!(f, "{e}"),
            InvError::Schur(e) => write!(f, "{e}"),
            InvError::Ring(e) => write!(f, "{e}"),
            InvError::ComponentColors { component } => {
                write!(f, "strands {component:?} form one closure component but carry different colors")
            }
            InvError::PathMismatch { tensor, exterior } => {
                write!(f, "tensor path {tensor} != exterior path {exterior}")
            }
            InvError::NonDivisible { value } => {
                write!(f, "invariant scalar {value} did not clear to a Laurent polynomial")
            }
        }
    }
}

impl std::error::Error for InvError {}

impl From<BraidError> for InvError {
    fn from(e: BraidError) -> Self {
        InvError::Braid(e)
    }
}
impl From<TensorError> for InvError {
    fn from(e: TensorError) -> Self {
        InvError::Tensor(e)
    }
}
impl From<SchurError> for InvError {
    fn from(e: SchurError) -> Self {
        InvError::Schur(e)
    }
}
impl From<RingError> for InvError {
    fn from(e: RingError) -> Self {
        InvError::Ring(e)
    }
}

/// Which route computes the Markov scalar.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TracePath {
    /// Full 2^N tensor computation (exponential, exact).
    Tensor,
    /// Reduced-matrix multiplicity computation (polynomial, exact).
    Exterior,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Provenance {
    TensorPath,
    ExteriorPath,
    Oracle,
}

/// A computed invariant: the raw scalar and, when it clears, the canonical
/// Laurent form (unit-normalized: zero minimal exponents, positive lowest
/// coefficient).
#[derive(Clone, Debug)]
pub struct InvariantValue {
    pub raw: Fraction,
    pub canonical: Option<LaurentPoly>,
    pub nvars: usize,
    pub provenance: Provenance,
}

impl InvariantValue {
    fn new(raw: Fraction, provenance: Provenance) -> Self {
        let canonical = raw.into_laurent().ok().map(|p| p.unit_canonical());
        InvariantValue { nvars: raw.nvars(), raw, canonical, provenance }
    }
}

/// `<str_{2..N}(pi(beta))>`: the scalar by which the partial quantum
/// supertrace acts on the first factor.
pub fn markov_scalar(braid: &ColoredBraid, path: TracePath) -> Result<Fraction, InvError> {
    match path {
        TracePath::Tensor => {
            let rep = represent(braid);
            let s = partial_supertrace_keep_first(&rep.op, braid.colors())?;
            Ok(Fraction::from_laurent(s))
        }
        TracePath::Exterior => Ok(multiplicity_trace_sum(braid)?),
    }
}

/// Both routes, with an exact agreement check.
pub fn markov_scalar_both(braid: &ColoredBraid) -> Result<Fraction, InvError> {
    let tensor = markov_scalar(braid, TracePath::Tensor)?;
    let exterior = markov_scalar(braid, TracePath::Exterior)?;
    if tensor != exterior {
        return Err(InvError::PathMismatch {
            tensor: Box::new(tensor),
            exterior: Box::new(exterior),
        });
    }
    Ok(exterior)
}

/// Verify colors are constant on closure components and return the
/// per-component color and self-writhe.
fn component_color_writhes(braid: &ColoredBraid) -> Result<Vec<(Color, i64)>, InvError> {
    let closure = braid.closure();
    let colors = braid.colors();
    let mut out = Vec::with_capacity(closure.components.len());
    for (cycle, &w) in closure.components.iter().zip(&closure.writhes) {
        let c0 = colors[cycle[0] - 1];
        if cycle.iter().any(|&s| colors[s - 1] != c0) {
            return Err(InvError::ComponentColors { component: cycle.clone() });
        }
        out.push((c0, w));
    }
    Ok(out)
}

/// The framing correction `prod_c (-z_c^2)^(w_c)` as a unit monomial.
pub fn framing_correction(braid: &ColoredBraid, nvars: usize) -> Result<LaurentPoly, InvError> {
    let data = component_color_writhes(braid)?;
    let mut exps = vec![0i32; nvars];
    let mut negative = false;
    for (color, w) in data {
        exps[color.var - 1] += 2 * w as i32;
        if w.rem_euclid(2) == 1 {
            negative = !negative;
        }
    }
    let coef = if negative { -1 } else { 1 };
    Ok(LaurentPoly::monomial(nvars, exps, coef.into()))
}

/// The framed link invariant `tau = <str> * prod_c (-z_c^2)^(w_c)`.
pub fn tau(braid: &ColoredBraid, path: TracePath) -> Result<InvariantValue, InvError> {
    let scalar = markov_scalar(braid, path)?;
    let corr = framing_correction(braid, scalar.nvars())?;
    let provenance = match path {
        TracePath::Tensor => Provenance::TensorPath,
        TracePath::Exterior => Provenance::ExteriorPath,
    };
    Ok(InvariantValue::new(scalar.mul_laurent(&corr), provenance))
}

/// The conjugation-invariant normalization `tau / (z_c1^2 - z_c1^-2)`
/// (modified trace): independent of which strand the partial trace keeps.
pub fn tau_modified(braid: &ColoredBraid, path: TracePath) -> Result<Fraction, InvError> {
    let t = tau(braid, path)?;
    let c1 = braid.colors()[0];
    let nvars = t.raw.nvars();
    let d = &crate::tensorrep::color_var_pow(c1, 2, nvars)
        - &crate::tensorrep::color_var_pow(c1, -2, nvars);
    Ok(&t.raw * &Fraction::new(LaurentPoly::one(nvars), d)?)
}

/// The multivariable Alexander-Conway polynomial of the closure, up to units:
/// tau cleared to a Laurent polynomial. A clearing failure signals a
/// convention error and is surfaced, never masked.
pub fn alexander_conway(braid: &ColoredBraid, path: TracePath) -> Result<InvariantValue, InvError> {
    let value = tau(braid, path)?;
    if value.canonical.is_none() {
        return Err(InvError::NonDivisible { value: Box::new(value.raw) });
    }
    Ok(value)
}

/// Collapse a canonical multivariable value onto the single Burau variable:
/// merge all variables, unit-normalize, rewrite `z^-4 -> t`.
pub fn specialize_to_t(p: &LaurentPoly) -> Result<LaurentPoly, InvError> {
    let merged = p.merge_vars().unit_canonical();
    Ok(merged.t_rewrite()?.unit_canonical())
}

/// Symmetric display form in t: exponents centered when the span is even.
pub fn balanced_t_form(p: &LaurentPoly) -> LaurentPoly {
    assert_eq!(p.nvars(), 1);
    if p.is_zero() {
        return p.clone();
    }
    let canon = p.unit_canonical();
    let max = canon.terms().map(|(e, _)| e[0]).max().unwrap_or(0);
    if max % 2 == 0 {
        canon.shifted(&[-max / 2])
    } else {
        canon
    }
}

/// Textbook reduced Burau matrix of one generator, over `Z[t, t^-1]`.
fn reduced_burau_gen(pos: usize, sign: i8, width: usize) -> Mat<LaurentPoly> {
    let n = width - 1;
    let t = LaurentPoly::var(1, 0);
    let tinv = LaurentPoly::var_pow(1, 0, -1);
    let one = LaurentPoly::one(1);
    let mut m = Mat::identity(n, one.clone(), LaurentPoly::zero(1));
    let i = pos - 1; // 0-based row of e_pos
    if sign > 0 {
        // e_{i-1} -> e_{i-1} + t e_i ; e_i -> -t e_i ; e_{i+1} -> e_i + e_{i+1}
        if i >= 1 {
            m[(i - 1, i)] = t.clone();
        }
        m[(i, i)] = t.negated();
        if i + 1 < n {
            m[(i + 1, i)] = one;
        }
    } else {
        // e_{i-1} -> e_{i-1} + e_i ; e_i -> -t^-1 e_i ; e_{i+1} -> t^-1 e_i + e_{i+1}
        if i >= 1 {
            m[(i - 1, i)] = one;
        }
        m[(i, i)] = tinv.negated();
        if i + 1 < n {
            m[(i + 1, i)] = tinv;
        }
    }
    m
}

/// Reduced Burau word matrix, independent of the quantum pipeline.
pub fn reduced_burau_matrix(braid: &ColoredBraid) -> Mat<LaurentPoly> {
    let n = braid.width() - 1;
    let mut m = Mat::identity(n, LaurentPoly::one(1), LaurentPoly::zero(1));
    for c in braid.word() {
        m = m.matmul(&reduced_burau_gen(c.pos, c.sign, braid.width()));
    }
    m
}

/// Independent Alexander oracle:
/// `Delta = det(rb(beta) - I) (1 - t) / (1 - t^N)` up to units, from the
/// textbook reduced Burau representation.
pub fn oracle_burau_determinant(braid: &ColoredBraid) -> Result<InvariantValue, InvError> {
    let width = braid.width();
    if width == 1 {
        return Ok(InvariantValue::new(Fraction::one(1), Provenance::Oracle));
    }
    let rb = reduced_burau_matrix(braid);
    let id = Mat::identity(width - 1, LaurentPoly::one(1), LaurentPoly::zero(1));
    let det = rb.sub(&id).det_bareiss(1);
    let t = LaurentPoly::var(1, 0);
    let num = &det * &(&LaurentPoly::one(1) - &t);
    let den = &LaurentPoly::one(1) - &t.pow(width as u32);
    let delta = num.exact_div(&den)?;
    Ok(InvariantValue::new(Fraction::from_laurent(delta), Provenance::Oracle))
}

/// Unit equality of two invariant values (`a = +-monomial * b`). Values that
/// do not clear to polynomials are compared as fractions up to units via
/// cross multiplication of canonical parts.
pub fn units_equal(a: &InvariantValue, b: &InvariantValue) -> bool {
    match (&a.canonical, &b.canonical) {
        (Some(p), Some(q)) => p.units_equal(q),
        _ => {
            let lhs = &a.raw.num().unit_canonical() * &b.raw.den().unit_canonical();
            let rhs = &b.raw.num().unit_canonical() * &a.raw.den().unit_canonical();
            lhs.units_equal(&rhs)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::parse_braid_word;

    fn uncolored(width: usize, text: &str) -> ColoredBraid {
        ColoredBraid::uncolored(width, parse_braid_word(text, width).unwrap())
    }

    fn tpoly(pairs: &[(i32, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(1, pairs.iter().map(|&(e, c)| (vec![e], c.into())))
    }

    #[test]
    fn markov_scalar_width1_identity() {
        let b = uncolored(1, "");
        assert!(markov_scalar(&b, TracePath::Tensor).unwrap().is_one());
        assert!(markov_scalar(&b, TracePath::Exterior).unwrap().is_one());
    }

    #[test]
    fn markov_scalar_identity_vanishes() {
        for n in [2usize, 3] {
            let b = uncolored(n, "");
            assert!(markov_scalar(&b, TracePath::Tensor).unwrap().is_zero());
            assert!(markov_scalar(&b, TracePath::Exterior).unwrap().is_zero());
        }
    }

    #[test]
    fn markov_scalar_single_crossing() {
        let b = uncolored(2, "1");
        let want = Fraction::from_laurent(LaurentPoly::var_pow(1, 0, -2).negated());
        assert_eq!(markov_scalar_both(&b).unwrap(), want);
    }

    #[test]
    fn tau_unknot_presentations_agree() {
        // four presentations of the unknot
        let presentations = [
            uncolored(1, ""),
            uncolored(2, "1"),
            uncolored(2, "-1"),
            uncolored(3, "1 2"),
        ];
        for b in &presentations {
            let v = tau(b, TracePath::Exterior).unwrap();
            assert!(v.raw.is_one(), "tau = {} for width {}", v.raw, b.width());
        }
    }

    #[test]
    fn tau_identity_width2_is_zero() {
        let b = uncolored(2, "");
        assert!(tau(&b, TracePath::Exterior).unwrap().raw.is_zero());
    }

    #[test]
    fn trefoil_both_paths() {
        let b = uncolored(2, "1 1 1");
        let want = tpoly(&[(-4, 1), (0, -1), (4, 1)]); // z^-4 - 1 + z^4
        for path in [TracePath::Tensor, TracePath::Exterior] {
            let v = alexander_conway(&b, path).unwrap();
            assert!(v.canonical.as_ref().unwrap().units_equal(&want), "path {path:?}");
            let t = specialize_to_t(v.canonical.as_ref().unwrap()).unwrap();
            assert!(t.units_equal(&tpoly(&[(1, 1), (0, -1), (-1, 1)])));
        }
    }

    #[test]
    fn oracle_named_values() {
        // unknot
        let v = oracle_burau_determinant(&uncolored(2, "1")).unwrap();
        assert!(v.canonical.as_ref().unwrap().is_one());
        // 2-component unlink: zero
        let v = oracle_burau_determinant(&uncolored(2, "")).unwrap();
        assert!(v.canonical.as_ref().unwrap().is_zero());
        // trefoil
        let v = oracle_burau_determinant(&uncolored(2, "1 1 1")).unwrap();
        assert!(v.canonical.as_ref().unwrap().units_equal(&tpoly(&[(1, 1), (0, -1), (-1, 1)])));
        // figure eight
        let v = oracle_burau_determinant(&uncolored(3, "1 -2 1 -2")).unwrap();
        assert!(v.canonical.as_ref().unwrap().units_equal(&tpoly(&[(1, 1), (0, -3), (-1, 1)])));
        // Hopf link, single variable
        let v = oracle_burau_determinant(&uncolored(2, "1 1")).unwrap();
        assert!(v.canonical.as_ref().unwrap().units_equal(&tpoly(&[(1, 1), (0, -1)])));
    }

    #[test]
    fn figure_eight_pipeline_matches_oracle() {
        let b = uncolored(3, "1 -2 1 -2");
        let v = alexander_conway(&b, TracePath::Exterior).unwrap();
        let t = specialize_to_t(v.canonical.as_ref().unwrap()).unwrap();
        let oracle = oracle_burau_determinant(&b).unwrap();
        assert!(t.units_equal(oracle.canonical.as_ref().unwrap()));
        // and the tensor route agrees exactly with the exterior route
        let w = alexander_conway(&b, TracePath::Tensor).unwrap();
        assert_eq!(v.raw, w.raw);
    }

    #[test]
    fn units_equal_cases() {
        let p = tpoly(&[(0, 1), (2, 3)]);
        let shifted = &p * &LaurentPoly::monomial(1, vec![-5], (-1).into());
        let a = InvariantValue::new(Fraction::from_laurent(p.clone()), Provenance::Oracle);
        let b = InvariantValue::new(Fraction::from_laurent(shifted), Provenance::Oracle);
        assert!(units_equal(&a, &b));
        let doubled = InvariantValue::new(Fraction::from_laurent(p.scaled_int(2)), Provenance::Oracle);
        assert!(!units_equal(&a, &doubled));
        let z1 = InvariantValue::new(Fraction::zero(1), Provenance::Oracle);
        let z2 = InvariantValue::new(Fraction::zero(1), Provenance::Oracle);
        assert!(units_equal(&z1, &z2));
    }

    #[test]
    fn mirror_flips_t() {
        let b = uncolored(2, "1 1 1");
        let mirror = uncolored(2, "-1 -1 -1");
        let v = oracle_burau_determinant(&b).unwrap().canonical.unwrap();
        let w = oracle_burau_determinant(&mirror).unwrap().canonical.unwrap();
        assert!(v.invert_vars().units_equal(&w));
    }

    #[test]
    fn conjugation_invariance_small() {
        let b = uncolored(3, "1 2 2");
        let base = tau(&b, TracePath::Exterior).unwrap();
        for g in [1i64, 2, -1, -2] {
            let c = b.conjugate(g).unwrap();
            let v = tau(&c, TracePath::Exterior).unwrap();
            assert_eq!(base.raw, v.raw, "conjugator {g}");
        }
    }

    #[test]
    fn stabilization_invariance_small() {
        let b = uncolored(3, "1 -2 1 -2");
        let base = tau(&b, TracePath::Exterior).unwrap();
        for sign in [1i8, -1] {
            let s = b.stabilize(sign);
            let v = tau(&s, TracePath::Exterior).unwrap();
            assert_eq!(base.raw, v.raw, "stabilization {sign}");
        }
    }

    #[test]
    fn split_link_vanishes() {
        // sigma_1 at width 3: unknot plus split unknot
        let b = uncolored(3, "1");
        assert!(tau(&b, TracePath::Exterior).unwrap().raw.is_zero());
        assert!(oracle_burau_determinant(&b).unwrap().canonical.unwrap().is_zero());
    }

    #[test]
    fn colored_conjugation_needs_modified_trace() {
        // two components with distinct variables: tau itself moves with the
        // kept strand, the modified trace does not
        let word = parse_braid_word("1 1", 2).unwrap();
        let b = ColoredBraid::new(2, word, vec![Color::new(1, 0), Color::new(2, 0)]).unwrap();
        let conj = b.conjugate(1).unwrap();
        let t1 = tau_modified(&b, TracePath::Exterior).unwrap();
        let t2 = tau_modified(&conj, TracePath::Exterior).unwrap();
        assert_eq!(t1, t2);
    }
}
