//! The 2^N tensor representation: Clifford generators on the bitstring basis,
//! the images of the quantum-group generators X, Y, G, t, colored R-matrices,
//! the braid groupoid representation, and (partial) supertraces.
//!
//! Conventions fixed here and relied on everywhere:
//! - basis states are bitstrings, bit `i` = 1 means factor `i` carries `Xv`;
//!   bit 1 is the leftmost factor and the most significant bit;
//! - operators act on row vectors, words compose left to right;
//! - a positive crossing on colors `(a, b)` is `-a^-3 b^-1` times the graded
//!   flip composed after the colored R-matrix; the negative crossing is its
//!   exact inverse;
//! - the full supertrace is the plain parity-signed trace, while the partial
//!   supertrace keeping the first factor inserts the pivotal scalar `z^-2`
//!   for each traced factor (the quantum trace for gl(1|1)). This is what
//!   makes both crossing signs Markov-compatible.

mod operator;

pub use operator::{factor_bit, state_parity, SuperOp};

use std::fmt;

use crate::braid::{Color, ColoredBraid};
use crate::matrix::Mat;
use crate::ring::LaurentPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TensorError {
    /// A partial supertrace remainder was not a multiple of the identity.
    NotProportional { detail: String },
}

impl fmt::Display for TensorError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TensorError::NotProportional { detail } => {
                write!(f, "partial supertrace is not proportional to the identity: {detail}")
            }
        }
    }
}

impl std::error::Error for TensorError {}

/// Clifford generator kind: `Create(i)` sets bit i (a_i), `Annihilate(i)`
/// clears it (b_i).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CliffordGen {
    Create(usize),
    Annihilate(usize),
}

/// Apply a Clifford generator to a basis state. Returns the signed image or
/// None when the state is annihilated. The sign is `(-1)^(s_1 + .. + s_{i-1})`.
pub fn clifford_apply(gen: CliffordGen, state: usize, n: usize) -> Option<(i8, usize)> {
    let i = match gen {
        CliffordGen::Create(i) | CliffordGen::Annihilate(i) => i,
    };
    assert!(i >= 1 && i <= n, "factor index out of range");
    let bit = 1 << (n - i);
    let occupied = state & bit != 0;
    match gen {
        CliffordGen::Create(_) if occupied => None,
        CliffordGen::Annihilate(_) if !occupied => None,
        _ => {
            let prefix = (state >> (n - i + 1)).count_ones();
            let sign = if prefix.is_multiple_of(2) { 1 } else { -1 };
            Some((sign, state ^ bit))
        }
    }
}

/// The generator as a sparse operator with a scalar coefficient.
pub fn clifford_op(gen: CliffordGen, coeff: &LaurentPoly, n: usize) -> SuperOp {
    let mut op = SuperOp::zero(n, coeff.nvars());
    for s in 0..1usize << n {
        if let Some((sign, t)) = clifford_apply(gen, s, n) {
            let v = if sign > 0 { coeff.clone() } else { coeff.negated() };
            op.add_to_entry(s, t, v);
        }
    }
    op
}

/// Monomial `z_var^e` in the ambient ring (1-based color variable id).
pub fn color_var_pow(c: Color, e: i32, nvars: usize) -> LaurentPoly {
    LaurentPoly::var_pow(nvars, c.var - 1, e)
}

/// Coefficient of `a_i` in X: `z_1^-1 .. z_{i-1}^-1 z_{i+1} .. z_N`.
fn x_coefficient(colors: &[Color], i: usize, nvars: usize) -> LaurentPoly {
    let mut exps = vec![0i32; nvars];
    for (k, c) in colors.iter().enumerate() {
        let k = k + 1;
        if k < i {
            exps[c.var - 1] -= 1;
        } else if k > i {
            exps[c.var - 1] += 1;
        }
    }
    LaurentPoly::monomial(nvars, exps, 1.into())
}

/// Images of the quantum-group generators on the colored tensor product.
pub struct UqglGens {
    pub x: SuperOp,
    pub y: SuperOp,
    pub g: SuperOp,
    pub t: SuperOp,
}

/// Build X, Y, G, t as sparse operators over the Laurent ring:
/// X sums the creation operators with their strand-product coefficients,
/// Y pairs annihilation with the extra `(z_i^2 - z_i^-2)`, t is the scalar
/// `z_1 .. z_N`, and G is diagonal with entries `sum(n_i) + popcount`.
pub fn uqgl_generators(colors: &[Color], nvars: usize) -> UqglGens {
    let n = colors.len();
    let mut x = SuperOp::zero(n, nvars);
    let mut y = SuperOp::zero(n, nvars);
    for i in 1..=n {
        let xi = x_coefficient(colors, i, nvars);
        let zi2 = color_var_pow(colors[i - 1], 2, nvars);
        let zi2i = color_var_pow(colors[i - 1], -2, nvars);
        let yi = &xi * &(&zi2 - &zi2i);
        x = x.add(&clifford_op(CliffordGen::Create(i), &xi, n));
        y = y.add(&clifford_op(CliffordGen::Annihilate(i), &yi, n));
    }
    let mut t_exps = vec![0i32; nvars];
    for c in colors {
        t_exps[c.var - 1] += 1;
    }
    let t = SuperOp::scalar(n, &LaurentPoly::monomial(nvars, t_exps, 1.into()));
    let lambda: i64 = colors.iter().map(|c| c.weight).sum();
    let mut g = SuperOp::zero(n, nvars);
    for s in 0..1usize << n {
        let w = lambda + s.count_ones() as i64;
        g.add_to_entry(s, s, LaurentPoly::int(nvars, w));
    }
    UqglGens { x, y, g, t }
}

/// Normalized colored R-matrix (or its inverse) on the two-factor basis
/// `(v(x)v, v(x)Xv, Xv(x)v, Xv(x)Xv)`, row convention.
///
/// Entries are forced by the universal R-matrix evaluated with the module
/// actions used by `uqgl_generators`; the off-diagonal is
/// `-(z2^2 - z2^-2) z1 z2` (and `+(z2^2 - z2^-2) z1^-1 z2^-1` for the
/// inverse), the unique choice commuting with the X, Y, G, t images.
pub fn r_matrix(c1: Color, c2: Color, positive: bool, nvars: usize) -> Mat<LaurentPoly> {
    let zero = LaurentPoly::zero(nvars);
    let mut m = Mat::filled(4, 4, zero);
    let z1 = |e: i32| color_var_pow(c1, e, nvars);
    let z2 = |e: i32| color_var_pow(c2, e, nvars);
    if positive {
        m[(0, 0)] = LaurentPoly::one(nvars);
        m[(1, 1)] = z1(2);
        m[(2, 2)] = z2(2);
        m[(3, 3)] = &z1(2) * &z2(2);
        m[(1, 2)] = (&(&z2(2) - &z2(-2)) * &(&z1(1) * &z2(1))).negated();
    } else {
        m[(0, 0)] = LaurentPoly::one(nvars);
        m[(1, 1)] = z1(-2);
        m[(2, 2)] = z2(-2);
        m[(3, 3)] = &z1(-2) * &z2(-2);
        m[(1, 2)] = &(&z2(2) - &z2(-2)) * &(&z1(-1) * &z2(-1));
    }
    m
}

/// The graded flip `x (x) y -> (-1)^(|x||y|) y (x) x` as a 4x4 gate.
pub fn flip_gate(nvars: usize) -> Mat<LaurentPoly> {
    let zero = LaurentPoly::zero(nvars);
    let one = LaurentPoly::one(nvars);
    let mut p = Mat::filled(4, 4, zero);
    p[(0, 0)] = one.clone();
    p[(1, 2)] = one.clone();
    p[(2, 1)] = one.clone();
    p[(3, 3)] = one.negated();
    p
}

/// Local 4x4 matrix of one crossing, with the normalization scalar included.
/// `(ca, cb)` are the colors currently at positions `(i, i+1)`; a positive
/// crossing applies the R-matrix then the graded flip, scaled by
/// `-ca^-3 cb^-1`; the negative crossing is the exact inverse of the positive
/// crossing at swapped colors.
pub fn crossing_gate(ca: Color, cb: Color, positive: bool, nvars: usize) -> Mat<LaurentPoly> {
    if positive {
        let scalar = color_var_pow(ca, -3, nvars).negated();
        let scalar = &scalar * &color_var_pow(cb, -1, nvars);
        r_matrix(ca, cb, true, nvars).matmul(&flip_gate(nvars)).scale(&scalar)
    } else {
        let scalar = color_var_pow(cb, 3, nvars).negated();
        let scalar = &scalar * &color_var_pow(ca, 1, nvars);
        flip_gate(nvars).matmul(&r_matrix(cb, ca, false, nvars)).scale(&scalar)
    }
}

/// A braid represented on the 2^N space, with its color bookkeeping.
pub struct Represented {
    pub op: SuperOp,
    pub source_colors: Vec<Color>,
    pub target_colors: Vec<Color>,
    /// Scalar by which the operator acts on the vacuum `v (x) .. (x) v`;
    /// the product of the crossing normalizations.
    pub vacuum: LaurentPoly,
}

/// Compose the crossing gates of the word in reading order.
pub fn represent(braid: &ColoredBraid) -> Represented {
    represent_in(braid, braid.nvars())
}

/// Same, in an explicitly sized ambient ring (so operators from different
/// braids can be compared).
pub fn represent_in(braid: &ColoredBraid, nvars: usize) -> Represented {
    let n = braid.width();
    let mut op = SuperOp::identity(n, nvars);
    let mut colors = braid.colors().to_vec();
    let mut vacuum = LaurentPoly::one(nvars);
    for c in braid.word() {
        let (ca, cb) = (colors[c.pos - 1], colors[c.pos]);
        let gate = crossing_gate(ca, cb, c.sign > 0, nvars);
        vacuum = &vacuum * &gate[(0, 0)];
        op = op.then_gate(c.pos, &gate);
        colors.swap(c.pos - 1, c.pos);
    }
    Represented { op, source_colors: braid.colors().to_vec(), target_colors: colors, vacuum }
}

/// Plain full supertrace: trace over the even part minus trace over the odd
/// part.
pub fn supertrace(op: &SuperOp) -> LaurentPoly {
    let mut acc = LaurentPoly::zero(op.nvars());
    for s in 0..op.dim() {
        if let Some(v) = op.entry(s, s) {
            acc = if state_parity(s) == 0 { &acc + v } else { &acc - v };
        }
    }
    acc
}

/// Quantum partial supertrace over factors 2..N, keeping the first factor:
/// the parity-signed partial trace times the pivotal scalar `z_j^-2` per
/// traced factor. Verifies the 2x2 remainder is a multiple of the identity
/// and returns that scalar.
#[allow(clippy::needless_range_loop)]
pub fn partial_supertrace_keep_first(
    op: &SuperOp,
    source_colors: &[Color],
) -> Result<LaurentPoly, TensorError> {
    let n = op.factors();
    assert_eq!(source_colors.len(), n);
    let nvars = op.nvars();
    if n == 1 {
        let e00 = op.entry(0, 0).cloned().unwrap_or_else(|| LaurentPoly::zero(nvars));
        let e11 = op.entry(1, 1).cloned().unwrap_or_else(|| LaurentPoly::zero(nvars));
        let off = op.entry(0, 1).is_none_or(|v| v.is_zero())
            && op.entry(1, 0).is_none_or(|v| v.is_zero());
        if !off || e00 != e11 {
            return Err(TensorError::NotProportional {
                detail: format!("width-1 operator has [v,v]={e00}, [Xv,Xv]={e11}"),
            });
        }
        return Ok(e00);
    }
    let rest = 1usize << (n - 1);
    let top = n - 1; // shift of the first-factor bit
    let mut block = [
        [LaurentPoly::zero(nvars), LaurentPoly::zero(nvars)],
        [LaurentPoly::zero(nvars), LaurentPoly::zero(nvars)],
    ];
    for x in 0..2usize {
        for xp in 0..2usize {
            let mut acc = LaurentPoly::zero(nvars);
            for r in 0..rest {
                let row = (x << top) | r;
                let col = (xp << top) | r;
                if let Some(v) = op.entry(row, col) {
                    acc = if r.count_ones() % 2 == 0 { &acc + v } else { &acc - v };
                }
            }
            block[x][xp] = acc;
        }
    }
    if !block[0][1].is_zero() || !block[1][0].is_zero() || block[0][0] != block[1][1] {
        return Err(TensorError::NotProportional {
            detail: format!(
                "remainder [[{}, {}], [{}, {}]]",
                block[0][0], block[0][1], block[1][0], block[1][1]
            ),
        });
    }
    let mut pivot_exps = vec![0i32; nvars];
    for c in &source_colors[1..] {
        pivot_exps[c.var - 1] -= 2;
    }
    Ok(&block[0][0] * &LaurentPoly::monomial(nvars, pivot_exps, 1.into()))
}
