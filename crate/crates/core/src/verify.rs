//! The identity battery: every explicit identity the library is built on,
//! runnable as one report. Used by the `verify` CLI command and the
//! acceptance suite.

use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::braid::{Color, ColoredBraid, Crossing};
use crate::decomp;
use crate::invariant::{self, TracePath};
use crate::ring::{Fraction, LaurentPoly};
use crate::tensorrep::{
    partial_supertrace_keep_first, represent, represent_in, uqgl_generators, SuperOp,
};

#[derive(Clone, Debug)]
pub struct BatteryConfig {
    /// Width used by the randomized trace and Markov checks.
    pub width: usize,
    /// Sample count per randomized check.
    pub samples: usize,
    pub seed: u64,
    /// Run only the identity with this id.
    pub only: Option<String>,
}

impl Default for BatteryConfig {
    fn default() -> Self {
        BatteryConfig { width: 4, samples: 25, seed: 7, only: None }
    }
}

#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub id: &'static str,
    pub pass: bool,
    pub detail: String,
    pub millis: u128,
}

pub const IDENTITY_IDS: [&str; 8] =
    ["hopf", "braid", "phipsi", "ambiproj", "spectral", "crossing", "trace", "markov"];

/// Random braid word of the given length.
pub fn random_word(rng: &mut StdRng, width: usize, len: usize) -> Vec<Crossing> {
    (0..len)
        .map(|_| Crossing {
            pos: rng.gen_range(1..width),
            sign: if rng.gen_bool(0.5) { 1 } else { -1 },
        })
        .collect()
}

/// Color every closure component with its own variable and a random weight.
pub fn random_component_coloring(rng: &mut StdRng, braid: &ColoredBraid) -> ColoredBraid {
    let comps = braid.closure().components.len();
    let per: Vec<Color> =
        (1..=comps).map(|v| Color::new(v, rng.gen_range(-3..=3))).collect();
    braid.with_component_colors(&per)
}

/// Uniform-variable coloring with a random weight.
pub fn random_uniform_coloring(rng: &mut StdRng, braid: &ColoredBraid) -> ColoredBraid {
    let w = rng.gen_range(-3..=3);
    let colors = vec![Color::new(1, w); braid.width()];
    ColoredBraid::new(braid.width(), braid.word().to_vec(), colors).expect("uniform colors")
}

fn sym_colors(n: usize, rng: &mut StdRng) -> Vec<Color> {
    (1..=n).map(|i| Color::new(i, rng.gen_range(-3..=3))).collect()
}

fn check_hopf(rng: &mut StdRng) -> (bool, String) {
    for n in 2..=4usize {
        let colors = sym_colors(n, rng);
        let gens = uqgl_generators(&colors, n);
        if !gens.x.then(&gens.x).is_zero_op() || !gens.y.then(&gens.y).is_zero_op() {
            return (false, format!("X^2 or Y^2 nonzero at width {n}"));
        }
        let anti = gens.x.then(&gens.y).add(&gens.y.then(&gens.x));
        let t2 = gens.t.then(&gens.t);
        let mut exps = vec![0i32; n];
        for c in &colors {
            exps[c.var - 1] -= 2;
        }
        let t2inv = SuperOp::scalar(n, &LaurentPoly::monomial(n, exps, 1.into()));
        if anti != t2.sub(&t2inv) {
            return (false, format!("{{X,Y}} != t^2 - t^-2 at width {n}"));
        }
        let gx = gens.x.then(&gens.g).sub(&gens.g.then(&gens.x));
        if gx != gens.x {
            return (false, format!("[G,X] != X at width {n}"));
        }
        let gy = gens.y.then(&gens.g).sub(&gens.g.then(&gens.y));
        if gy != gens.y.scale(&LaurentPoly::int(n, -1)) {
            return (false, format!("[G,Y] != -Y at width {n}"));
        }
    }
    (true, "X^2 = Y^2 = 0, {X,Y} = t^2 - t^-2, [G,X] = X, [G,Y] = -Y for widths 2-4".into())
}

fn check_braid_relations(rng: &mut StdRng) -> (bool, String) {
    let mut cases = 0;
    for n in 3..=4usize {
        let colors = sym_colors(n, rng);
        let make = |word: Vec<Crossing>| {
            ColoredBraid::new(n, word, colors.clone()).expect("valid word")
        };
        for i in 1..n - 1 {
            let lhs = make(vec![
                Crossing { pos: i, sign: 1 },
                Crossing { pos: i + 1, sign: 1 },
                Crossing { pos: i, sign: 1 },
            ]);
            let rhs = make(vec![
                Crossing { pos: i + 1, sign: 1 },
                Crossing { pos: i, sign: 1 },
                Crossing { pos: i + 1, sign: 1 },
            ]);
            let l = represent_in(&lhs, n);
            let r = represent_in(&rhs, n);
            if l.op != r.op || l.target_colors != r.target_colors {
                return (false, format!("adjacent relation fails at width {n}, position {i}"));
            }
            cases += 1;
        }
        for i in 1..n {
            for j in 1..n {
                if (i as i64 - j as i64).abs() >= 2 {
                    let lhs = make(vec![Crossing { pos: i, sign: 1 }, Crossing { pos: j, sign: 1 }]);
                    let rhs = make(vec![Crossing { pos: j, sign: 1 }, Crossing { pos: i, sign: 1 }]);
                    if represent_in(&lhs, n).op != represent_in(&rhs, n).op {
                        return (false, format!("distant commutation fails at ({i},{j})"));
                    }
                    cases += 1;
                }
            }
        }
        for i in 1..n {
            let w = make(vec![Crossing { pos: i, sign: 1 }, Crossing { pos: i, sign: -1 }]);
            if represent_in(&w, n).op != SuperOp::identity(n, n) {
                return (false, format!("inverse pair not identity at position {i}"));
            }
            cases += 1;
        }
    }
    (true, format!("colored braid relations, {cases} instances at widths 3-4"))
}

fn check_phipsi(rng: &mut StdRng) -> (bool, String) {
    for _ in 0..8 {
        let c1 = Color::new(1, rng.gen_range(-3..=3));
        let c2 = Color::new(2, rng.gen_range(-3..=3));
        let pair = decomp::intertwiners(c1, c2, 2);
        let (phi_psi, psi_phi) = pair.compositions();
        let id = crate::matrix::Mat::identity(4, Fraction::one(2), Fraction::zero(2));
        if phi_psi != id || psi_phi != id {
            return (false, format!("compositions fail at weights ({}, {})", c1.weight, c2.weight));
        }
    }
    (true, "phi and psi compose to identities on both sides".into())
}

fn check_ambiproj(rng: &mut StdRng) -> (bool, String) {
    for _ in 0..8 {
        let c1 = Color::new(1, rng.gen_range(-3..=3));
        let c2 = Color::new(2, rng.gen_range(-3..=3));
        let got = match decomp::projector_traces(c1, c2, 2) {
            Ok(g) => g,
            Err(e) => return (false, e.to_string()),
        };
        let want = decomp::expected_projector_traces(c1, c2, 2);
        if got.str2_p0 != want.str2_p0
            || got.str2_p1 != want.str2_p1
            || got.str1_p0 != want.str1_p0
            || got.str1_p1 != want.str1_p1
        {
            return (false, format!("projector traces differ at weights ({}, {})", c1.weight, c2.weight));
        }
    }
    (true, "all four projector supertrace scalars match the closed forms".into())
}

fn check_spectral(_rng: &mut StdRng) -> (bool, String) {
    for w in -3..=3i64 {
        let rep = decomp::spectral_check(Color::new(1, w));
        if !rep.ok {
            return (false, format!("weight {w}: {}", rep.detail));
        }
    }
    (true, "spectral decomposition of the equal-color crossing, weights -3..3".into())
}

fn check_crossing(_rng: &mut StdRng) -> (bool, String) {
    // str_q2 of the bare crossing: z^2 for positive, z^-2 for negative;
    // composed with the -z^-4 normalization this gives -z^-2 and -z^2.
    let c = Color::new(1, 0);
    let word = |s: i8| vec![Crossing { pos: 1, sign: s }];
    for (sign, vac_unscale, want_exp) in [(1i8, 4i32, 2i32), (-1, -4, -2)] {
        let b = ColoredBraid::new(2, word(sign), vec![c, c]).expect("width 2");
        let rep = represent(&b);
        let unscale = LaurentPoly::monomial(1, vec![vac_unscale], (-1).into());
        let bare = rep.op.scale(&unscale);
        match partial_supertrace_keep_first(&bare, b.colors()) {
            Ok(s) => {
                if s != LaurentPoly::var_pow(1, 0, want_exp) {
                    return (false, format!("crossing sign {sign}: got {s}"));
                }
            }
            Err(e) => return (false, e.to_string()),
        }
    }
    let b = ColoredBraid::new(2, word(1), vec![c, c]).expect("width 2");
    match invariant::markov_scalar(&b, TracePath::Tensor) {
        Ok(s) if s == Fraction::from_laurent(LaurentPoly::var_pow(1, 0, -2).negated()) => {}
        Ok(s) => return (false, format!("normalized crossing trace {s}, want -z^-2")),
        Err(e) => return (false, e.to_string()),
    }
    (true, "str_q2(PR) = z^2, str_q2((PR)^-1) = z^-2, <str(pi)> = -z^-2".into())
}

fn check_trace_theorem(rng: &mut StdRng, width: usize, samples: usize) -> (bool, String) {
    let mut done = 0;
    for w in 3..=width.max(3) {
        for _ in 0..samples {
            let len = rng.gen_range(0..=10);
            let word = random_word(rng, w, len);
            let b = ColoredBraid::uncolored(w, word);
            let b = random_component_coloring(rng, &b);
            match invariant::markov_scalar_both(&b) {
                Ok(_) => done += 1,
                Err(e) => {
                    let word: Vec<i64> =
                        b.word().iter().map(|c| c.pos as i64 * c.sign as i64).collect();
                    return (false, format!("width {w}, word {word:?}: {e}"));
                }
            }
        }
    }
    (true, format!("tensor and reduced-matrix scalars agree exactly on {done} random colored braids"))
}

fn check_markov(rng: &mut StdRng, width: usize, samples: usize) -> (bool, String) {
    let max_width = width.clamp(2, 4);
    let mut conj = 0;
    let mut stab = 0;
    for _ in 0..samples {
        let w = rng.gen_range(2..=max_width);
        let len = rng.gen_range(0..=8);
        let word = random_word(rng, w, len);
        let base = random_uniform_coloring(rng, &ColoredBraid::uncolored(w, word));
        let val = match invariant::tau(&base, TracePath::Exterior) {
            Ok(v) => v,
            Err(e) => return (false, format!("tau failed: {e}")),
        };
        let g_abs = rng.gen_range(1..w) as i64;
        let g = if rng.gen_bool(0.5) { g_abs } else { -g_abs };
        let c = base.conjugate(g).expect("conjugator in range");
        match invariant::tau(&c, TracePath::Exterior) {
            Ok(v) if v.raw == val.raw => conj += 1,
            Ok(v) => {
                return (false, format!("conjugation by {g} changed tau: {} -> {}", val.raw, v.raw))
            }
            Err(e) => return (false, format!("tau on conjugate failed: {e}")),
        }
        let sign = if rng.gen_bool(0.5) { 1i8 } else { -1 };
        let s = base.stabilize(sign);
        match invariant::tau(&s, TracePath::Exterior) {
            Ok(v) if v.raw == val.raw => stab += 1,
            Ok(v) => {
                return (false, format!("stabilization {sign} changed tau: {} -> {}", val.raw, v.raw))
            }
            Err(e) => return (false, format!("tau on stabilization failed: {e}")),
        }
        // colored multi-component case: the modified trace is the
        // conjugation invariant
        let colored = random_component_coloring(rng, &base);
        let t1 = invariant::tau_modified(&colored, TracePath::Exterior);
        let t2 = colored
            .conjugate(g)
            .ok()
            .and_then(|cc| invariant::tau_modified(&cc, TracePath::Exterior).ok());
        match (t1, t2) {
            (Ok(a), Some(b)) if a == b => {}
            _ => return (false, "modified trace not conjugation invariant".into()),
        }
    }
    (true, format!("{conj} conjugations and {stab} stabilizations leave tau fixed exactly"))
}

/// Run the battery, honoring the `only` filter.
pub fn run_battery(cfg: &BatteryConfig) -> Vec<IdentityReport> {
    let mut rng = StdRng::seed_from_u64(cfg.seed);
    let mut out = Vec::new();
    for id in IDENTITY_IDS {
        if let Some(only) = &cfg.only {
            if only != id {
                continue;
            }
        }
        let start = Instant::now();
        let (pass, detail) = match id {
            "hopf" => check_hopf(&mut rng),
            "braid" => check_braid_relations(&mut rng),
            "phipsi" => check_phipsi(&mut rng),
            "ambiproj" => check_ambiproj(&mut rng),
            "spectral" => check_spectral(&mut rng),
            "crossing" => check_crossing(&mut rng),
            "trace" => check_trace_theorem(&mut rng, cfg.width, cfg.samples),
            "markov" => check_markov(&mut rng, cfg.width, cfg.samples.max(1)),
            _ => unreachable!(),
        };
        out.push(IdentityReport { id, pass, detail, millis: start.elapsed().as_millis() });
    }
    out
}
