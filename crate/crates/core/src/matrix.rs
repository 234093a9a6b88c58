//! Small dense matrices over an exact coefficient ring.
//!
//! Matrices act on row vectors: `entry(i, j)` is the coefficient of basis
//! vector `j` in the image of basis vector `i`, and the matrix of "first f,
//! then g" is `f * g`. That matches how braid words compose left to right.

use crate::ring::{Coeff, Fraction, LaurentPoly};

#[derive(Clone, PartialEq, Debug)]
pub struct Mat<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Coeff> Mat<S> {
    pub fn filled(rows: usize, cols: usize, zero: S) -> Self {
        Mat { rows, cols, data: vec![zero; rows * cols] }
    }

    pub fn from_rows(rows_data: Vec<Vec<S>>) -> Self {
        let rows = rows_data.len();
        let cols = rows_data.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(rows * cols);
        for r in rows_data {
            assert_eq!(r.len(), cols, "ragged matrix rows");
            data.extend(r);
        }
        Mat { rows, cols, data }
    }

    pub fn identity(n: usize, one: S, zero: S) -> Self {
        let mut m = Self::filled(n, n, zero);
        for i in 0..n {
            m[(i, i)] = one.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Matrix product `self * rhs` ("first self, then rhs" on row vectors).
    pub fn matmul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matmul");
        let mut out: Vec<Option<S>> = vec![None; self.rows * rhs.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a.mul(b);
                    let slot = &mut out[i * rhs.cols + j];
                    *slot = Some(match slot.take() {
                        Some(acc) => acc.add(&prod),
                        None => prod,
                    });
                }
            }
        }
        let zero = self.zero_like();
        Mat {
            rows: self.rows,
            cols: rhs.cols,
            data: out.into_iter().map(|v| v.unwrap_or_else(|| zero.clone())).collect(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a.add(b)).collect();
        Mat { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a.sub(b)).collect();
        Mat { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: &S) -> Self {
        let data = self.data.iter().map(|a| a.mul(s)).collect();
        Mat { rows: self.rows, cols: self.cols, data }
    }

    pub fn map<T: Coeff>(&self, f: impl Fn(&S) -> T) -> Mat<T> {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self[(i, j)].clone());
            }
        }
        Mat { rows: self.cols, cols: self.rows, data }
    }

    /// Row vector times matrix.
    pub fn row_apply(&self, v: &[S]) -> Vec<S> {
        assert_eq!(v.len(), self.rows);
        let zero = self.zero_like();
        let mut out = vec![zero; self.cols];
        for (i, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for j in 0..self.cols {
                let m = &self[(i, j)];
                if !m.is_zero() {
                    out[j] = out[j].add(&x.mul(m));
                }
            }
        }
        out
    }

    /// Cofactor-expansion determinant; fine for the small sizes used in tests
    /// and compound matrices.
    pub fn det_cofactor(&self) -> S {
        assert!(self.is_square());
        let n = self.rows;
        match n {
            0 => panic!("det_cofactor needs a nonempty matrix; handle 0x0 at the call site"),
            1 => self[(0, 0)].clone(),
            _ => {
                let mut acc: Option<S> = None;
                for j in 0..n {
                    let a = &self[(0, j)];
                    if a.is_zero() {
                        continue;
                    }
                    let minor = self.submatrix_skipping(0, j);
                    let mut term = a.mul(&minor.det_cofactor());
                    if j % 2 == 1 {
                        term = term.neg();
                    }
                    acc = Some(match acc {
                        Some(s) => s.add(&term),
                        None => term,
                    });
                }
                acc.unwrap_or_else(|| self.zero_like())
            }
        }
    }

    fn submatrix_skipping(&self, skip_row: usize, skip_col: usize) -> Self {
        let mut data = Vec::with_capacity((self.rows - 1) * (self.cols - 1));
        for i in 0..self.rows {
            if i == skip_row {
                continue;
            }
            for j in 0..self.cols {
                if j == skip_col {
                    continue;
                }
                data.push(self[(i, j)].clone());
            }
        }
        Mat { rows: self.rows - 1, cols: self.cols - 1, data }
    }

    /// Minor on explicit row/column index subsets (ascending order).
    pub fn minor(&self, row_idx: &[usize], col_idx: &[usize]) -> Self {
        let mut data = Vec::with_capacity(row_idx.len() * col_idx.len());
        for &i in row_idx {
            for &j in col_idx {
                data.push(self[(i, j)].clone());
            }
        }
        Mat { rows: row_idx.len(), cols: col_idx.len(), data }
    }

    fn zero_like(&self) -> S {
        let probe = self.data.first().expect("empty matrix has no coefficient context");
        probe.sub(probe)
    }
}

impl<S> std::ops::Index<(usize, usize)> for Mat<S> {
    type Output = S;
    fn index(&self, (i, j): (usize, usize)) -> &S {
        &self.data[i * self.cols + j]
    }
}

impl<S> std::ops::IndexMut<(usize, usize)> for Mat<S> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut S {
        &mut self.data[i * self.cols + j]
    }
}

/// Ascending lists of all k-element subsets of `0..n`, lexicographic.
pub fn subsets_lex(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..=n.saturating_sub(k) {
            cur.push(i);
            rec(i + 1, n, k - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

impl Mat<LaurentPoly> {
    /// Fraction-free Bareiss determinant over the Laurent ring. Every interior
    /// division is exact by the Bareiss identity.
    pub fn det_bareiss(&self, nvars: usize) -> LaurentPoly {
        assert!(self.is_square());
        let n = self.rows;
        if n == 0 {
            return LaurentPoly::one(nvars);
        }
        let mut m = self.clone();
        let mut sign_flip = false;
        let mut prev = LaurentPoly::one(nvars);
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                let Some(swap) = (k + 1..n).find(|&i| !m[(i, k)].is_zero()) else {
                    return LaurentPoly::zero(nvars);
                };
                for j in 0..n {
                    let a = m[(k, j)].clone();
                    let b = m[(swap, j)].clone();
                    m[(k, j)] = b;
                    m[(swap, j)] = a;
                }
                sign_flip = !sign_flip;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = &(&m[(i, j)] * &m[(k, k)]) - &(&m[(i, k)] * &m[(k, j)]);
                    m[(i, j)] = t.exact_div(&prev).expect("Bareiss division is exact");
                }
                m[(i, k)] = LaurentPoly::zero(nvars);
            }
            prev = m[(k, k)].clone();
        }
        let det = m[(n - 1, n - 1)].clone();
        if sign_flip {
            det.negated()
        } else {
            det
        }
    }
}

impl Mat<Fraction> {
    /// Determinant of a fraction matrix: clear each row to a Laurent row,
    /// run Bareiss, divide the cleared factors back out.
    pub fn det(&self, nvars: usize) -> Fraction {
        assert!(self.is_square());
        let n = self.rows;
        if n == 0 {
            return Fraction::one(nvars);
        }
        let mut cleared = Mat::filled(n, n, LaurentPoly::zero(nvars));
        let mut factor = LaurentPoly::one(nvars);
        for i in 0..n {
            // lcm-ish: denominators here are powers of a common base, so the
            // divide shortcut keeps the factor small.
            let mut d = LaurentPoly::one(nvars);
            for j in 0..n {
                let den = self[(i, j)].den();
                if den.is_one() || d.exact_div(den).is_ok() {
                    continue;
                }
                if let Ok(q) = den.exact_div(&d) {
                    d = &d * &q;
                } else {
                    d = &d * den;
                }
            }
            for j in 0..n {
                let e = &self[(i, j)];
                cleared[(i, j)] = e.num() * &d.exact_div(e.den()).expect("row lcm divides");
            }
            factor = &factor * &d;
        }
        Fraction::new(cleared.det_bareiss(nvars), factor).expect("cleared factor nonzero")
    }
}
