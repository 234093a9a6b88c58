//! Two-factor decomposition machinery: the intertwiners between
//! `V_{z1,n} (x) V_{z2,m}` and `V_{z1z2,n+m} (+) V_{z1z2,n+m+1}`, the summand
//! projectors, their partial supertraces, the spectral decomposition of the
//! equal-color crossing, and the (modified-dimension) ambidextrous identity.
//!
//! Basis orders: the tensor side is `(v(x)v, v(x)Xv, Xv(x)v, Xv(x)Xv)`; the
//! direct sum side is `(w1, Xw1, w2, Xw2)` with `w1` spanning the summand of
//! weight `n+m+1`. `P0` projects onto the `w1` summand (the basis the
//! formulas introduce first); with the plain parity-signed partial traces
//! this choice reproduces the four projector trace scalars exactly.

use std::fmt;

use crate::braid::Color;
use crate::matrix::Mat;
use crate::ring::{Fraction, LaurentPoly};
use crate::tensorrep::{color_var_pow, flip_gate, r_matrix};

#[derive(Clone, Debug, PartialEq)]
pub enum DecompError {
    /// A partial supertrace remainder was not a scalar multiple of the
    /// identity; an implementation inconsistency, not a user error.
    NotProportional { detail: String },
}

impl fmt::Display for DecompError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DecompError::NotProportional { detail } => {
                write!(f, "partial supertrace not proportional to the identity: {detail}")
            }
        }
    }
}

impl std::error::Error for DecompError {}

/// The pair of mutually inverse intertwiners, as row-convention matrices:
/// `phi` maps the direct sum to the tensor product, `psi` the other way.
pub struct IntertwinerPair {
    pub phi: Mat<Fraction>,
    pub psi: Mat<Fraction>,
    pub c1: Color,
    pub c2: Color,
    pub nvars: usize,
}

/// `gamma = (z1^2 z2^2 - z1^-2 z2^-2)^-1`.
pub fn gamma(c1: Color, c2: Color, nvars: usize) -> Fraction {
    let z12 = &color_var_pow(c1, 2, nvars) * &color_var_pow(c2, 2, nvars);
    let z12i = &color_var_pow(c1, -2, nvars) * &color_var_pow(c2, -2, nvars);
    Fraction::new(LaurentPoly::one(nvars), &z12 - &z12i).expect("symbolic gamma")
}

/// Populate phi and psi from their eight defining formulas. Weights enter
/// only through the sign `(-1)^n` of the first color.
pub fn intertwiners(c1: Color, c2: Color, nvars: usize) -> IntertwinerPair {
    let g = gamma(c1, c2, nvars);
    let zero = Fraction::zero(nvars);
    let one = Fraction::one(nvars);
    let z1 = |e: i32| Fraction::from_laurent(color_var_pow(c1, e, nvars));
    let z2 = |e: i32| Fraction::from_laurent(color_var_pow(c2, e, nvars));
    let disc1 = &z1(2) - &z1(-2);
    let disc2 = &z2(2) - &z2(-2);
    let sign_n = |f: Fraction| if c1.weight.rem_euclid(2) == 0 { f } else { f.negated() };

    // rows (w1, Xw1, w2, Xw2) -> columns (vv, vXv, Xvv, XvXv)
    let mut phi = Mat::filled(4, 4, zero.clone());
    phi[(0, 0)] = one.clone();
    phi[(1, 1)] = sign_n(z1(-1));
    phi[(1, 2)] = z2(1);
    phi[(2, 1)] = &(&z2(1) * &disc1) * &g;
    phi[(2, 2)] = sign_n((&(&z1(-1) * &disc2) * &g).negated());
    phi[(3, 3)] = one.clone();

    // rows (vv, vXv, Xvv, XvXv) -> columns (w1, Xw1, w2, Xw2)
    let mut psi = Mat::filled(4, 4, zero);
    psi[(0, 0)] = one.clone();
    psi[(1, 1)] = sign_n(&(&z1(-1) * &disc2) * &g);
    psi[(1, 2)] = z2(1);
    psi[(2, 1)] = &(&z2(1) * &disc1) * &g;
    psi[(2, 2)] = sign_n(z1(-1).negated());
    psi[(3, 3)] = one;

    IntertwinerPair { phi, psi, c1, c2, nvars }
}

impl IntertwinerPair {
    /// `phi o P_a o psi` as an operator on the tensor product
    /// (row convention: psi, then the projector, then phi).
    pub fn projector_sandwich(&self, which: usize) -> Mat<Fraction> {
        let mut proj = Mat::filled(4, 4, Fraction::zero(self.nvars));
        let (lo, hi) = if which == 0 { (0, 1) } else { (2, 3) };
        proj[(lo, lo)] = Fraction::one(self.nvars);
        proj[(hi, hi)] = Fraction::one(self.nvars);
        self.psi.matmul(&proj).matmul(&self.phi)
    }

    /// `psi o phi` on the direct sum and `phi o psi` on the tensor product,
    /// as row-convention products.
    pub fn compositions(&self) -> (Mat<Fraction>, Mat<Fraction>) {
        (self.phi.matmul(&self.psi), self.psi.matmul(&self.phi))
    }
}

/// Plain partial supertrace over the second factor of a 4x4 two-factor
/// operator: returns the scalar on the first factor.
pub fn str2(f: &Mat<Fraction>, nvars: usize) -> Result<Fraction, DecompError> {
    let _ = nvars;
    // index = 2*(first bit) + (second bit)
    let diag = |x: usize, xp: usize, r: usize| f[(2 * x + r, 2 * xp + r)].clone();
    let e = |x: usize, xp: usize| &diag(x, xp, 0) - &diag(x, xp, 1);
    let off_ok = e(0, 1).is_zero() && e(1, 0).is_zero();
    let (a, b) = (e(0, 0), e(1, 1));
    if !off_ok || a != b {
        return Err(DecompError::NotProportional {
            detail: format!("str2 remainder diag ({a}, {b})"),
        });
    }
    Ok(a)
}

/// Plain partial supertrace over the first factor.
pub fn str1(f: &Mat<Fraction>, nvars: usize) -> Result<Fraction, DecompError> {
    let _ = nvars;
    let diag = |r: usize, rp: usize, x: usize| f[(2 * x + r, 2 * x + rp)].clone();
    let e = |r: usize, rp: usize| &diag(r, rp, 0) - &diag(r, rp, 1);
    let off_ok = e(0, 1).is_zero() && e(1, 0).is_zero();
    let (a, b) = (e(0, 0), e(1, 1));
    if !off_ok || a != b {
        return Err(DecompError::NotProportional {
            detail: format!("str1 remainder diag ({a}, {b})"),
        });
    }
    Ok(a)
}

/// The four projector trace scalars.
pub struct ProjectorTraces {
    pub str2_p0: Fraction,
    pub str2_p1: Fraction,
    pub str1_p0: Fraction,
    pub str1_p1: Fraction,
}

/// Compute `str_a(phi P_b psi)` for all four combinations, verifying each is
/// a multiple of the identity on the surviving factor.
pub fn projector_traces(
    c1: Color,
    c2: Color,
    nvars: usize,
) -> Result<ProjectorTraces, DecompError> {
    let pair = intertwiners(c1, c2, nvars);
    let p0 = pair.projector_sandwich(0);
    let p1 = pair.projector_sandwich(1);
    Ok(ProjectorTraces {
        str2_p0: str2(&p0, nvars)?,
        str2_p1: str2(&p1, nvars)?,
        str1_p0: str1(&p0, nvars)?,
        str1_p1: str1(&p1, nvars)?,
    })
}

/// The printed values of the four scalars:
/// `str2(phi P0 psi) = z2^2 (z1^2 - z1^-2) gamma` and
/// `str1(phi P0 psi) = z1^-2 (z2^2 - z2^-2) gamma`, with the P1 versions
/// negated.
pub fn expected_projector_traces(c1: Color, c2: Color, nvars: usize) -> ProjectorTraces {
    let g = gamma(c1, c2, nvars);
    let z1 = |e: i32| Fraction::from_laurent(color_var_pow(c1, e, nvars));
    let z2 = |e: i32| Fraction::from_laurent(color_var_pow(c2, e, nvars));
    let s2 = &(&z2(2) * &(&z1(2) - &z1(-2))) * &g;
    let s1 = &(&z1(-2) * &(&z2(2) - &z2(-2))) * &g;
    ProjectorTraces {
        str2_p0: s2.clone(),
        str2_p1: s2.negated(),
        str1_p0: s1.clone(),
        str1_p1: s1.negated(),
    }
}

/// Report from the spectral decomposition check at equal colors.
#[derive(Clone, Debug)]
pub struct SpectralReport {
    pub ok: bool,
    pub detail: String,
}

/// Verify, at equal colors `(z, n)`:
/// - `z^2 phi P0 psi - z^-2 phi P1 psi` equals `z^2 (P R)^-1` (up to the
///   `(-1)^n` basis gauge of the odd vectors when the weight is odd);
/// - its square is `z^4 phi P0 psi + z^-4 phi P1 psi`;
/// - both it and its inverse have second-factor supertrace `z^2`.
pub fn spectral_check(c: Color) -> SpectralReport {
    let nvars = c.var;
    let pair = intertwiners(c, c, nvars);
    let p0 = pair.projector_sandwich(0);
    let p1 = pair.projector_sandwich(1);
    let z2 = Fraction::from_laurent(color_var_pow(c, 2, nvars));
    let z2i = Fraction::from_laurent(color_var_pow(c, -2, nvars));
    let s = p0.scale(&z2).sub(&p1.scale(&z2i));

    // z^2 (P R)^-1, the inverse crossing built from the explicit R^-1
    let mut gauged = flip_gate(nvars)
        .matmul(&r_matrix(c, c, false, nvars))
        .map(|p| Fraction::from_laurent(p.clone()))
        .scale(&z2);
    // parity gauge for odd weights: Xv -> -Xv on the first factor
    if c.weight.rem_euclid(2) == 1 {
        for (i, j) in [(1usize, 2usize), (2, 1)] {
            gauged[(i, j)] = gauged[(i, j)].negated();
        }
    }
    let mut failures = Vec::new();
    if s != gauged {
        failures.push("crossing != z^2 (PR)^-1".to_string());
    }
    let s2m = s.matmul(&s);
    let z4 = &z2 * &z2;
    let z4i = &z2i * &z2i;
    let want = p0.scale(&z4).add(&p1.scale(&z4i));
    if s2m != want {
        failures.push("square != z^4 phi P0 psi + z^-4 phi P1 psi".to_string());
    }
    match str2(&s, nvars) {
        Ok(a) if a == z2 => {}
        Ok(a) => failures.push(format!("str2(crossing) = {a}, want z^2")),
        Err(e) => failures.push(e.to_string()),
    }
    // inverse of the decomposition: z^-2 phi P0 psi - z^2 phi P1 psi
    let sinv = p0.scale(&z2i).sub(&p1.scale(&z2));
    match str2(&sinv, nvars) {
        Ok(a) if a == z2 => {}
        Ok(a) => failures.push(format!("str2(inverse crossing) = {a}, want z^2")),
        Err(e) => failures.push(e.to_string()),
    }
    if failures.is_empty() {
        SpectralReport { ok: true, detail: "spectral decomposition holds".into() }
    } else {
        SpectralReport { ok: false, detail: failures.join("; ") }
    }
}
