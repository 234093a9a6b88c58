//! Braid words with per-strand colors, closure bookkeeping and Markov moves.
//!
//! A width-N braid word is a sequence of signed generators; positions are
//! 1-based and `pos` ranges over `1..=N-1`. Strands are named by the position
//! they occupy at the bottom, and each strand carries a color `(var, weight)`
//! that travels with it through the crossings.

use std::fmt;

/// Strand color: the index of the formal variable `z_var` it carries (1-based
/// in the CLI syntax, stored as given) plus an integer weight.
///
/// Weights are restricted to integers because the two-factor intertwiners
/// contain the sign (-1)^n.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Color {
    pub var: usize,
    pub weight: i64,
}

impl Color {
    pub fn new(var: usize, weight: i64) -> Self {
        Color { var, weight }
    }
}

/// One signed crossing: `pos` in `1..=width-1`, `sign` is +1 or -1.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Crossing {
    pub pos: usize,
    pub sign: i8,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BraidError {
    Syntax { token: String },
    Range { value: i64, width: usize },
    ColorCount { expected: usize, got: usize },
}

impl fmt::Display for BraidError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BraidError::Syntax { token } => write!(f, "cannot read braid letter {token:?}"),
            BraidError::Range { value, width } => {
                write!(f, "generator {value} out of range for width {width}")
            }
            BraidError::ColorCount { expected, got } => {
                write!(f, "expected {expected} strand colors, got {got}")
            }
        }
    }
}

impl std::error::Error for BraidError {}

/// Parse a whitespace-separated braid word: integer `k` maps to
/// `(pos = |k|, sign = sgn k)`. Zero and out-of-range letters are rejected.
pub fn parse_braid_word(text: &str, width: usize) -> Result<Vec<Crossing>, BraidError> {
    let mut word = Vec::new();
    for token in text.split_whitespace() {
        let value: i64 = token
            .parse()
            .map_err(|_| BraidError::Syntax { token: token.to_string() })?;
        let pos = value.unsigned_abs() as usize;
        if value == 0 || pos >= width {
            return Err(BraidError::Range { value, width });
        }
        word.push(Crossing { pos, sign: if value > 0 { 1 } else { -1 } });
    }
    Ok(word)
}

/// A braid word together with the bottom strand colors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredBraid {
    width: usize,
    word: Vec<Crossing>,
    colors: Vec<Color>,
}

/// Closure data: the induced permutation (bottom position -> top position),
/// its cycles as components, and the per-component self-writhe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureData {
    pub perm: Vec<usize>,
    pub components: Vec<Vec<usize>>,
    pub writhes: Vec<i64>,
}

impl ColoredBraid {
    pub fn new(width: usize, word: Vec<Crossing>, colors: Vec<Color>) -> Result<Self, BraidError> {
        assert!(width >= 1);
        if colors.len() != width {
            return Err(BraidError::ColorCount { expected: width, got: colors.len() });
        }
        for c in &word {
            if c.pos == 0 || c.pos >= width {
                return Err(BraidError::Range {
                    value: c.pos as i64 * c.sign as i64,
                    width,
                });
            }
        }
        Ok(ColoredBraid { width, word, colors })
    }

    /// All strands share variable 1 with weight 0.
    pub fn uncolored(width: usize, word: Vec<Crossing>) -> Self {
        Self::new(width, word, vec![Color::new(1, 0); width]).expect("uniform colors")
    }

    pub fn from_text(width: usize, text: &str, colors: Option<Vec<Color>>) -> Result<Self, BraidError> {
        let word = parse_braid_word(text, width)?;
        match colors {
            Some(c) => Self::new(width, word, c),
            None => Ok(Self::uncolored(width, word)),
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn word(&self) -> &[Crossing] {
        &self.word
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    /// Number of ring variables needed for this braid's colors.
    pub fn nvars(&self) -> usize {
        self.colors.iter().map(|c| c.var).max().unwrap_or(1)
    }

    pub fn is_uniform_variable(&self) -> bool {
        self.colors.iter().all(|c| c.var == self.colors[0].var)
    }

    /// Bottom position -> top position.
    pub fn permutation(&self) -> Vec<usize> {
        let mut strand_at: Vec<usize> = (1..=self.width).collect();
        for c in &self.word {
            strand_at.swap(c.pos - 1, c.pos);
        }
        let mut perm = vec![0; self.width];
        for (top_pos, &strand) in strand_at.iter().enumerate() {
            perm[strand - 1] = top_pos + 1;
        }
        perm
    }

    /// Colors at the top of the braid, indexed by position.
    pub fn top_colors(&self) -> Vec<Color> {
        let mut cur = self.colors.clone();
        for c in &self.word {
            cur.swap(c.pos - 1, c.pos);
        }
        cur
    }

    /// Components (cycles of the closure permutation) and per-component
    /// self-writhes: each crossing contributes its sign to a component's
    /// writhe exactly when both crossing strands belong to that component.
    pub fn closure(&self) -> ClosureData {
        let perm = self.permutation();
        // cycles, each starting at its smallest strand
        let mut seen = vec![false; self.width];
        let mut components = Vec::new();
        let mut comp_of = vec![0usize; self.width];
        for start in 1..=self.width {
            if seen[start - 1] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut s = start;
            while !seen[s - 1] {
                seen[s - 1] = true;
                comp_of[s - 1] = components.len();
                cycle.push(s);
                s = perm[s - 1];
            }
            components.push(cycle);
        }
        let mut writhes = vec![0i64; components.len()];
        let mut strand_at: Vec<usize> = (1..=self.width).collect();
        for c in &self.word {
            let (s1, s2) = (strand_at[c.pos - 1], strand_at[c.pos]);
            if comp_of[s1 - 1] == comp_of[s2 - 1] {
                writhes[comp_of[s1 - 1]] += c.sign as i64;
            }
            strand_at.swap(c.pos - 1, c.pos);
        }
        ClosureData { perm, components, writhes }
    }

    /// Signed crossing count between each unordered pair of distinct
    /// components. Test oracle for the writhe bookkeeping.
    pub fn pairwise_linking(&self) -> Vec<((usize, usize), i64)> {
        let closure = self.closure();
        let mut comp_of = vec![0usize; self.width];
        for (ci, cyc) in closure.components.iter().enumerate() {
            for &s in cyc {
                comp_of[s - 1] = ci;
            }
        }
        let mut acc = std::collections::BTreeMap::new();
        let mut strand_at: Vec<usize> = (1..=self.width).collect();
        for c in &self.word {
            let (s1, s2) = (strand_at[c.pos - 1], strand_at[c.pos]);
            let (a, b) = (comp_of[s1 - 1], comp_of[s2 - 1]);
            if a != b {
                let key = (a.min(b), a.max(b));
                *acc.entry(key).or_insert(0i64) += c.sign as i64;
            }
            strand_at.swap(c.pos - 1, c.pos);
        }
        acc.into_iter().collect()
    }

    /// Markov conjugation by the signed generator `g` (`|g|` in range):
    /// the word becomes `g w g^-1` and the bottom colors are permuted so the
    /// inner word still sees its own colors.
    pub fn conjugate(&self, g: i64) -> Result<Self, BraidError> {
        let pos = g.unsigned_abs() as usize;
        if g == 0 || pos >= self.width {
            return Err(BraidError::Range { value: g, width: self.width });
        }
        let sign = if g > 0 { 1i8 } else { -1 };
        let mut word = Vec::with_capacity(self.word.len() + 2);
        word.push(Crossing { pos, sign });
        word.extend(self.word.iter().copied());
        word.push(Crossing { pos, sign: -sign });
        let mut colors = self.colors.clone();
        colors.swap(pos - 1, pos);
        Ok(ColoredBraid { width: self.width, word, colors })
    }

    /// Markov stabilization: widen by one strand and append the crossing
    /// `(width, sign)`. The new strand copies the color of the strand it
    /// joins (the one at the old last position after the word).
    pub fn stabilize(&self, sign: i8) -> Self {
        assert!(sign == 1 || sign == -1);
        let top = self.top_colors();
        let joined = top[self.width - 1];
        let mut colors = self.colors.clone();
        colors.push(joined);
        let mut word = self.word.clone();
        word.push(Crossing { pos: self.width, sign });
        ColoredBraid { width: self.width + 1, word, colors }
    }

    /// Reassign colors so every strand of a component shares that component's
    /// color. Needed for closure invariants with per-component variables.
    pub fn with_component_colors(&self, per_component: &[Color]) -> Self {
        let closure = self.closure();
        assert_eq!(per_component.len(), closure.components.len());
        let mut colors = self.colors.clone();
        for (ci, cyc) in closure.components.iter().enumerate() {
            for &s in cyc {
                colors[s - 1] = per_component[ci];
            }
        }
        ColoredBraid { width: self.width, word: self.word.clone(), colors }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_reading_order() {
        let w = parse_braid_word("1 1 1", 2).unwrap();
        assert_eq!(w, vec![
            Crossing { pos: 1, sign: 1 },
            Crossing { pos: 1, sign: 1 },
            Crossing { pos: 1, sign: 1 }
        ]);
    }

    #[test]
    fn parse_empty_is_identity() {
        assert_eq!(parse_braid_word("", 3).unwrap(), vec![]);
    }

    #[test]
    fn parse_range_error() {
        assert_eq!(parse_braid_word("3", 2), Err(BraidError::Range { value: 3, width: 2 }));
        assert_eq!(parse_braid_word("0", 2), Err(BraidError::Range { value: 0, width: 2 }));
        assert!(matches!(parse_braid_word("x", 2), Err(BraidError::Syntax { .. })));
    }

    #[test]
    fn closure_identity_braid() {
        let b = ColoredBraid::uncolored(3, vec![]);
        let c = b.closure();
        assert_eq!(c.components.len(), 3);
        assert_eq!(c.writhes, vec![0, 0, 0]);
    }

    #[test]
    fn closure_trefoil_word() {
        let b = ColoredBraid::from_text(2, "1 1 1", None).unwrap();
        let c = b.closure();
        assert_eq!(c.components.len(), 1);
        assert_eq!(c.writhes, vec![3]);
    }

    #[test]
    fn closure_two_components_no_self_writhe() {
        let b = ColoredBraid::from_text(2, "1 1", None).unwrap();
        let c = b.closure();
        assert_eq!(c.components.len(), 2);
        assert_eq!(c.writhes, vec![0, 0]);
    }

    #[test]
    fn conjugate_shape() {
        let b = ColoredBraid::from_text(2, "1", None).unwrap();
        let c = b.conjugate(1).unwrap();
        let word: Vec<i64> = c.word().iter().map(|x| x.pos as i64 * x.sign as i64).collect();
        assert_eq!(word, vec![1, 1, -1]);
    }

    #[test]
    fn stabilize_shapes() {
        let id1 = ColoredBraid::uncolored(1, vec![]);
        let s = id1.stabilize(1);
        assert_eq!(s.width(), 2);
        let word: Vec<i64> = s.word().iter().map(|x| x.pos as i64 * x.sign as i64).collect();
        assert_eq!(word, vec![1]);

        let tre = ColoredBraid::from_text(2, "1 1 1", None).unwrap();
        let s = tre.stabilize(-1);
        assert_eq!(s.width(), 3);
        let word: Vec<i64> = s.word().iter().map(|x| x.pos as i64 * x.sign as i64).collect();
        assert_eq!(word, vec![1, 1, 1, -2]);
    }

    #[test]
    fn writhe_sum_matches_pairwise_decomposition() {
        let b = ColoredBraid::from_text(3, "1 2 -1 2 1 1", None).unwrap();
        let closure = b.closure();
        let total: i64 = b.word().iter().map(|c| c.sign as i64).sum();
        let self_sum: i64 = closure.writhes.iter().sum();
        let inter: i64 = b.pairwise_linking().iter().map(|(_, s)| s).sum();
        assert_eq!(self_sum, total - inter);
    }

    #[test]
    fn conjugation_preserves_components_and_writhe_multiset() {
        let b = ColoredBraid::from_text(3, "1 2 2 -1", None).unwrap();
        for g in [1i64, 2, -1, -2] {
            let c = b.conjugate(g).unwrap().closure();
            let orig = b.closure();
            assert_eq!(c.components.len(), orig.components.len());
            let mut w1 = c.writhes.clone();
            let mut w2 = orig.writhes.clone();
            w1.sort();
            w2.sort();
            assert_eq!(w1, w2);
        }
    }

    #[test]
    fn stabilization_writhe_bookkeeping() {
        // The stabilizing crossing joins the new strand into an existing
        // component, so it is a self-crossing there: the affected writhe
        // moves by the stabilization sign and everything else is unchanged.
        let b = ColoredBraid::from_text(3, "1 -2 1 -2", None).unwrap();
        for sign in [1i8, -1] {
            let s = b.stabilize(sign);
            let cs = s.closure();
            let cb = b.closure();
            assert_eq!(cs.components.len(), cb.components.len());
            let total_b: i64 = cb.writhes.iter().sum();
            let total_s: i64 = cs.writhes.iter().sum();
            assert_eq!(total_s, total_b + sign as i64);
        }
    }
}
