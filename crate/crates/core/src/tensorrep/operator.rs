use std::collections::BTreeMap;

use crate::matrix::Mat;
use crate::ring::{Coeff, LaurentPoly};

/// Sparse parity-graded operator on the 2^N bitstring basis.
///
/// Basis states are indices `0..2^N`; bit `i` of a state (1-based factor `i`,
/// leftmost factor = most significant bit) is 1 when that factor carries `Xv`.
/// Row convention: `rows[s]` maps a source state to the coefficients of its
/// image, and "first f then g" is `f.then(&g)`.
#[derive(Clone, PartialEq, Debug)]
pub struct SuperOp {
    factors: usize,
    nvars: usize,
    rows: Vec<BTreeMap<usize, LaurentPoly>>,
}

/// Parity of a basis state: popcount mod 2 (`v` even, `Xv` odd).
pub fn state_parity(state: usize) -> u32 {
    state.count_ones() & 1
}

/// Bit of factor `i` (1-based, leftmost = most significant) in a width-`n` state.
pub fn factor_bit(state: usize, i: usize, n: usize) -> usize {
    (state >> (n - i)) & 1
}

impl SuperOp {
    pub fn zero(factors: usize, nvars: usize) -> Self {
        SuperOp { factors, nvars, rows: vec![BTreeMap::new(); 1 << factors] }
    }

    pub fn identity(factors: usize, nvars: usize) -> Self {
        let mut op = Self::zero(factors, nvars);
        for s in 0..op.dim() {
            op.rows[s].insert(s, LaurentPoly::one(nvars));
        }
        op
    }

    /// Scalar multiple of the identity.
    pub fn scalar(factors: usize, value: &LaurentPoly) -> Self {
        let mut op = Self::zero(factors, value.nvars());
        if !value.is_zero() {
            for s in 0..op.dim() {
                op.rows[s].insert(s, value.clone());
            }
        }
        op
    }

    pub fn factors(&self) -> usize {
        self.factors
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn dim(&self) -> usize {
        1 << self.factors
    }

    pub fn entry(&self, row: usize, col: usize) -> Option<&LaurentPoly> {
        self.rows[row].get(&col)
    }

    pub fn add_to_entry(&mut self, row: usize, col: usize, value: LaurentPoly) {
        if value.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.rows[row].entry(col) {
            Entry::Vacant(v) => {
                v.insert(value);
            }
            Entry::Occupied(mut o) => {
                let s = o.get().add(&value);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// Nonzero image coefficients of one source state.
    pub fn row(&self, source: usize) -> impl Iterator<Item = (usize, &LaurentPoly)> {
        self.rows[source].iter().map(|(c, v)| (*c, v))
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &LaurentPoly)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |(c, v)| (r, *c, v)))
    }

    pub fn num_entries(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn is_zero_op(&self) -> bool {
        self.rows.iter().all(|r| r.is_empty())
    }

    /// Composite "first self, then g".
    pub fn then(&self, g: &SuperOp) -> SuperOp {
        assert_eq!(self.factors, g.factors);
        let mut out = SuperOp::zero(self.factors, self.nvars);
        for (s, row) in self.rows.iter().enumerate() {
            for (t, a) in row {
                for (u, b) in &g.rows[*t] {
                    out.add_to_entry(s, *u, a * b);
                }
            }
        }
        out
    }

    /// Composite "first self, then the 4x4 gate on factors (i, i+1)".
    /// The gate is indexed by local states `(bit_i << 1) | bit_{i+1}`.
    pub fn then_gate(&self, i: usize, gate: &Mat<LaurentPoly>) -> SuperOp {
        assert!(i >= 1 && i < self.factors);
        assert_eq!((gate.rows(), gate.cols()), (4, 4));
        let n = self.factors;
        let hi = n - i; // shift of bit i
        let lo = n - i - 1; // shift of bit i+1
        let mut out = SuperOp::zero(self.factors, self.nvars);
        for (s, row) in self.rows.iter().enumerate() {
            for (t, a) in row {
                let local = (factor_bit(*t, i, n) << 1) | factor_bit(*t, i + 1, n);
                let cleared = t & !((1 << hi) | (1 << lo));
                for local_out in 0..4 {
                    let g = &gate[(local, local_out)];
                    if g.is_zero() {
                        continue;
                    }
                    let u = cleared | ((local_out >> 1) << hi) | ((local_out & 1) << lo);
                    out.add_to_entry(s, u, a * g);
                }
            }
        }
        out
    }

    pub fn add(&self, g: &SuperOp) -> SuperOp {
        assert_eq!(self.factors, g.factors);
        let mut out = self.clone();
        for (r, c, v) in g.entries() {
            out.add_to_entry(r, c, v.clone());
        }
        out
    }

    pub fn sub(&self, g: &SuperOp) -> SuperOp {
        assert_eq!(self.factors, g.factors);
        let mut out = self.clone();
        for (r, c, v) in g.entries() {
            out.add_to_entry(r, c, v.negated());
        }
        out
    }

    pub fn scale(&self, s: &LaurentPoly) -> SuperOp {
        let mut out = SuperOp::zero(self.factors, self.nvars);
        if s.is_zero() {
            return out;
        }
        for (r, c, v) in self.entries() {
            out.add_to_entry(r, c, v * s);
        }
        out
    }

    /// Every entry connects states of equal popcount.
    pub fn preserves_popcount(&self) -> bool {
        self.entries().all(|(r, c, _)| r.count_ones() == c.count_ones())
    }

    /// Operator parity: all entries shift popcount by the same value mod 2.
    /// Returns None for the zero operator or mixed parity.
    pub fn parity(&self) -> Option<u32> {
        let mut it = self.entries();
        let first = it.next()?;
        let p = (state_parity(first.0) + state_parity(first.1)) & 1;
        for (r, c, _) in it {
            if (state_parity(r) + state_parity(c)) & 1 != p {
                return None;
            }
        }
        Some(p)
    }
}
