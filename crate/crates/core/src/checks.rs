//! Property suites over the diagram algebras and the invariants. Each suite
//! checks a family of exact identities and reports the first few failures
//! with both sides printed.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::algebra::{AtlElement, Basis, Element, VtlElement};
use crate::arrow::{ArrowGenerator, ArrowTangle, CuspConvention};
use crate::braid::{
    random_classical_word, random_equivalent, random_word, rho_a, rho_f, BraidWord, Letter,
};
use crate::invariants::{arrow_polynomial, f_polynomial};
use crate::oracle::{arrow_state_sum, f_state_sum, Mode};
use crate::rings::{ArrowPoly, LaurentPoly};
use crate::tangle::{Endpoint, FlatTangle};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    /// Defining relations of the virtual Temperley-Lieb algebra.
    PresentationVtl,
    /// Defining relations of the arrow Temperley-Lieb algebra.
    PresentationAtl,
    /// Consequences of the defining relations used to build the bases.
    Derived,
    /// Markov trace axioms on the virtual Temperley-Lieb tower.
    MarkovF,
    /// Markov trace axioms on the arrow Temperley-Lieb tower.
    MarkovA,
    /// Braid group relations map to equal algebra elements.
    Representation,
    /// On planar words the arrow trace reduces to the flat trace.
    TlRestriction,
    /// Position-difference labelling of parity tangles.
    Parity,
    /// Algebra pipeline against the state-sum oracle.
    Oracle,
    /// Invariance under random relations and Markov moves.
    Invariance,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::PresentationVtl,
        Suite::PresentationAtl,
        Suite::Derived,
        Suite::MarkovF,
        Suite::MarkovA,
        Suite::Representation,
        Suite::TlRestriction,
        Suite::Parity,
        Suite::Oracle,
        Suite::Invariance,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::PresentationVtl => "presentation-vtl",
            Suite::PresentationAtl => "presentation-atl",
            Suite::Derived => "derived",
            Suite::MarkovF => "markov-f",
            Suite::MarkovA => "markov-a",
            Suite::Representation => "representation",
            Suite::TlRestriction => "tl-restriction",
            Suite::Parity => "parity",
            Suite::Oracle => "oracle",
            Suite::Invariance => "invariance",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown suite {0:?}")]
pub struct UnknownSuite(pub String);

impl FromStr for Suite {
    type Err = UnknownSuite;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| UnknownSuite(s.to_string()))
    }
}

#[derive(Debug, Clone)]
pub struct CheckConfig {
    pub max_n: usize,
    pub seed: u64,
    /// Random samples per strand count (or in total for word-based suites).
    pub samples: usize,
    /// Random moves per word in the invariance suite.
    pub moves: usize,
    /// Labels of `F_i` used by the arrow suites.
    pub convention: CuspConvention,
    pub mode: Mode,
}

impl CheckConfig {
    pub fn new(max_n: usize, seed: u64) -> Self {
        Self {
            max_n,
            seed,
            samples: 200,
            moves: 6,
            convention: CuspConvention::STANDARD,
            mode: Mode::Parallel,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub identity: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: Suite,
    pub checked: usize,
    pub failed: usize,
    pub counterexamples: Vec<Counterexample>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "pass" } else { "FAIL" };
        writeln!(
            f,
            "{}: {status} ({} identities checked, {} failed)",
            self.suite, self.checked, self.failed
        )?;
        for c in &self.counterexamples {
            writeln!(f, "  counterexample: {}", c.identity)?;
            writeln!(f, "    lhs: {}", c.lhs)?;
            writeln!(f, "    rhs: {}", c.rhs)?;
        }
        Ok(())
    }
}

const KEPT_COUNTEREXAMPLES: usize = 3;

#[derive(Default)]
struct Tally {
    checked: usize,
    failed: usize,
    counterexamples: Vec<Counterexample>,
}

impl Tally {
    fn check<T: PartialEq + fmt::Display>(
        &mut self,
        identity: impl FnOnce() -> String,
        lhs: &T,
        rhs: &T,
    ) {
        self.checked += 1;
        if lhs != rhs {
            self.fail(identity(), lhs.to_string(), rhs.to_string());
        }
    }

    fn fail(&mut self, identity: String, lhs: String, rhs: String) {
        self.failed += 1;
        if self.counterexamples.len() < KEPT_COUNTEREXAMPLES {
            self.counterexamples
                .push(Counterexample { identity, lhs, rhs });
        }
    }

    fn report(self, suite: Suite) -> Report {
        Report {
            suite,
            checked: self.checked,
            failed: self.failed,
            counterexamples: self.counterexamples,
        }
    }
}

pub fn run(suite: Suite, cfg: &CheckConfig) -> Report {
    let mut t = Tally::default();
    match suite {
        Suite::PresentationVtl => presentation_vtl(&mut t, cfg),
        Suite::PresentationAtl => presentation_atl(&mut t, cfg),
        Suite::Derived => derived(&mut t, cfg),
        Suite::MarkovF => markov_f(&mut t, cfg),
        Suite::MarkovA => markov_a(&mut t, cfg),
        Suite::Representation => representation(&mut t, cfg),
        Suite::TlRestriction => tl_restriction(&mut t, cfg),
        Suite::Parity => parity(&mut t, cfg),
        Suite::Oracle => oracle(&mut t, cfg),
        Suite::Invariance => return fuzz(cfg.samples, cfg.moves, cfg.seed, cfg.max_n),
    }
    t.report(suite)
}

fn prod<B: Basis>(n: usize, xs: &[&Element<B>]) -> Element<B> {
    Element::product(n, xs.iter().copied()).expect("factors share a strand count")
}

fn rng_for(cfg: &CheckConfig, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(cfg.seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

fn pairs_at_distance(n: usize, close: bool) -> impl Iterator<Item = (usize, usize)> {
    (1..n)
        .flat_map(move |i| (1..n).map(move |j| (i, j)))
        .filter(move |&(i, j)| {
            if close {
                i.abs_diff(j) == 1
            } else {
                i.abs_diff(j) >= 2
            }
        })
}

fn presentation_vtl(t: &mut Tally, cfg: &CheckConfig) {
    for n in 2..=cfg.max_n.max(2) {
        let e: Vec<VtlElement> = (0..n)
            .map(|i| VtlElement::cup_cap(i.max(1), n).unwrap())
            .collect();
        let v: Vec<VtlElement> = (0..n)
            .map(|i| VtlElement::virtual_crossing(i.max(1), n).unwrap())
            .collect();
        let one = VtlElement::one(n);
        let z = LaurentPoly::d();
        for i in 1..n {
            t.check(
                || format!("E_{i}^2 = z E_{i} (n={n})"),
                &prod(n, &[&e[i], &e[i]]),
                &e[i].scale(&z),
            );
            t.check(
                || format!("v_{i}^2 = 1 (n={n})"),
                &prod(n, &[&v[i], &v[i]]),
                &one,
            );
            t.check(
                || format!("E_{i} v_{i} = E_{i} (n={n})"),
                &prod(n, &[&e[i], &v[i]]),
                &e[i],
            );
            t.check(
                || format!("v_{i} E_{i} = E_{i} (n={n})"),
                &prod(n, &[&v[i], &e[i]]),
                &e[i],
            );
        }
        for (i, j) in pairs_at_distance(n, false) {
            t.check(
                || format!("E_{i} E_{j} = E_{j} E_{i} (n={n})"),
                &prod(n, &[&e[i], &e[j]]),
                &prod(n, &[&e[j], &e[i]]),
            );
            t.check(
                || format!("v_{i} v_{j} = v_{j} v_{i} (n={n})"),
                &prod(n, &[&v[i], &v[j]]),
                &prod(n, &[&v[j], &v[i]]),
            );
            t.check(
                || format!("v_{i} E_{j} = E_{j} v_{i} (n={n})"),
                &prod(n, &[&v[i], &e[j]]),
                &prod(n, &[&e[j], &v[i]]),
            );
        }
        for (i, j) in pairs_at_distance(n, true) {
            t.check(
                || format!("E_{i} v_{j} E_{i} = E_{i} (n={n})"),
                &prod(n, &[&e[i], &v[j], &e[i]]),
                &e[i],
            );
            t.check(
                || format!("v_{i} v_{j} v_{i} = v_{j} v_{i} v_{j} (n={n})"),
                &prod(n, &[&v[i], &v[j], &v[i]]),
                &prod(n, &[&v[j], &v[i], &v[j]]),
            );
            t.check(
                || format!("v_{i} v_{j} E_{i} = E_{j} v_{i} v_{j} (n={n})"),
                &prod(n, &[&v[i], &v[j], &e[i]]),
                &prod(n, &[&e[j], &v[i], &v[j]]),
            );
        }
    }
}

/// Arrow generators on `n` strands; index 0 is unused padding.
struct AtlGens {
    n: usize,
    f: Vec<AtlElement>,
    w: Vec<AtlElement>,
    t: Vec<AtlElement>,
    t_inv: Vec<AtlElement>,
    one: AtlElement,
}

impl AtlGens {
    fn new(n: usize, conv: CuspConvention) -> Self {
        let gen = |k: ArrowGenerator| {
            AtlElement::basis(ArrowTangle::generator_with(k, n, conv).expect("index in range"))
        };
        let between =
            |k: fn(usize) -> ArrowGenerator| (0..n).map(|i| gen(k(i.max(1)))).collect::<Vec<_>>();
        let along =
            |k: fn(usize) -> ArrowGenerator| (0..=n).map(|j| gen(k(j.max(1)))).collect::<Vec<_>>();
        Self {
            n,
            f: between(ArrowGenerator::F),
            w: between(ArrowGenerator::W),
            t: along(ArrowGenerator::T),
            t_inv: along(ArrowGenerator::TInv),
            one: AtlElement::one(n),
        }
    }

    /// `t_j^m`.
    fn t_pow(&self, j: usize, m: i32) -> AtlElement {
        let base = if m >= 0 { &self.t[j] } else { &self.t_inv[j] };
        base.pow(m.unsigned_abs()).expect("same strand count")
    }

    fn p(&self, xs: &[&AtlElement]) -> AtlElement {
        prod(self.n, xs)
    }
}

fn presentation_atl(t: &mut Tally, cfg: &CheckConfig) {
    for n in 2..=cfg.max_n.max(2) {
        let g = AtlGens::new(n, cfg.convention);
        let (f, w, tt, ti) = (&g.f, &g.w, &g.t, &g.t_inv);
        for j in 1..=n {
            t.check(
                || format!("t_{j} t_{j}^-1 = 1 (n={n})"),
                &g.p(&[&tt[j], &ti[j]]),
                &g.one,
            );
            t.check(
                || format!("t_{j}^-1 t_{j} = 1 (n={n})"),
                &g.p(&[&ti[j], &tt[j]]),
                &g.one,
            );
            for k in j + 1..=n {
                t.check(
                    || format!("t_{j} t_{k} = t_{k} t_{j} (n={n})"),
                    &g.p(&[&tt[j], &tt[k]]),
                    &g.p(&[&tt[k], &tt[j]]),
                );
            }
        }
        for i in 1..n {
            t.check(
                || format!("w_{i}^2 = 1 (n={n})"),
                &g.p(&[&w[i], &w[i]]),
                &g.one,
            );
            t.check(
                || format!("w_{i} t_{i} = t_{} w_{i} (n={n})", i + 1),
                &g.p(&[&w[i], &tt[i]]),
                &g.p(&[&tt[i + 1], &w[i]]),
            );
            t.check(
                || format!("w_{i} t_{} = t_{i} w_{i} (n={n})", i + 1),
                &g.p(&[&w[i], &tt[i + 1]]),
                &g.p(&[&tt[i], &w[i]]),
            );
            for m in -4..=4 {
                let tm = g.t_pow(i, m);
                t.check(
                    || format!("F_{i} t_{i}^{m} F_{i} = z_{} F_{i} (n={n})", m.abs()),
                    &g.p(&[&f[i], &tm, &f[i]]),
                    &f[i].scale(&ArrowPoly::zigzag_factor(m.unsigned_abs())),
                );
            }
            t.check(
                || format!("F_{i} w_{i} = F_{i} t_{i} (n={n})"),
                &g.p(&[&f[i], &w[i]]),
                &g.p(&[&f[i], &tt[i]]),
            );
            t.check(
                || format!("F_{i} t_{i} = F_{i} t_{}^-1 (n={n})", i + 1),
                &g.p(&[&f[i], &tt[i]]),
                &g.p(&[&f[i], &ti[i + 1]]),
            );
            t.check(
                || format!("w_{i} F_{i} = t_{i}^-1 F_{i} (n={n})"),
                &g.p(&[&w[i], &f[i]]),
                &g.p(&[&ti[i], &f[i]]),
            );
            t.check(
                || format!("t_{i}^-1 F_{i} = t_{} F_{i} (n={n})", i + 1),
                &g.p(&[&ti[i], &f[i]]),
                &g.p(&[&tt[i + 1], &f[i]]),
            );
            for j in (1..=n).filter(|&j| j != i && j != i + 1) {
                t.check(
                    || format!("w_{i} t_{j} = t_{j} w_{i} (n={n})"),
                    &g.p(&[&w[i], &tt[j]]),
                    &g.p(&[&tt[j], &w[i]]),
                );
                t.check(
                    || format!("F_{i} t_{j} = t_{j} F_{i} (n={n})"),
                    &g.p(&[&f[i], &tt[j]]),
                    &g.p(&[&tt[j], &f[i]]),
                );
            }
        }
        for (i, j) in pairs_at_distance(n, false) {
            t.check(
                || format!("w_{i} w_{j} = w_{j} w_{i} (n={n})"),
                &g.p(&[&w[i], &w[j]]),
                &g.p(&[&w[j], &w[i]]),
            );
            t.check(
                || format!("F_{i} F_{j} = F_{j} F_{i} (n={n})"),
                &g.p(&[&f[i], &f[j]]),
                &g.p(&[&f[j], &f[i]]),
            );
            t.check(
                || format!("F_{i} w_{j} = w_{j} F_{i} (n={n})"),
                &g.p(&[&f[i], &w[j]]),
                &g.p(&[&w[j], &f[i]]),
            );
        }
        for (i, j) in pairs_at_distance(n, true) {
            t.check(
                || format!("w_{i} w_{j} w_{i} = w_{j} w_{i} w_{j} (n={n})"),
                &g.p(&[&w[i], &w[j], &w[i]]),
                &g.p(&[&w[j], &w[i], &w[j]]),
            );
            t.check(
                || format!("F_{i} w_{j} F_{i} = F_{i} (n={n})"),
                &g.p(&[&f[i], &w[j], &f[i]]),
                &f[i],
            );
            t.check(
                || format!("w_{i} w_{j} F_{i} = F_{j} w_{i} w_{j} (n={n})"),
                &g.p(&[&w[i], &w[j], &f[i]]),
                &g.p(&[&f[j], &w[i], &w[j]]),
            );
        }
    }
}

fn derived(t: &mut Tally, cfg: &CheckConfig) {
    for n in 2..=cfg.max_n.max(2) {
        let x: Vec<VtlElement> = (0..n)
            .map(|i| VtlElement::cup_cap(i.max(1), n).unwrap())
            .collect();
        let y: Vec<VtlElement> = (0..n)
            .map(|i| VtlElement::virtual_crossing(i.max(1), n).unwrap())
            .collect();
        let p = |xs: &[&VtlElement]| prod(n, xs);
        for (i, j) in pairs_at_distance(n, true) {
            t.check(
                || format!("E_{i} E_{j} v_{i} v_{j} = E_{i} (n={n})"),
                &p(&[&x[i], &x[j], &y[i], &y[j]]),
                &x[i],
            );
            t.check(
                || format!("E_{i} E_{j} E_{i} = E_{i} (n={n})"),
                &p(&[&x[i], &x[j], &x[i]]),
                &x[i],
            );
            t.check(
                || format!("E_{i} E_{j} = v_{j} v_{i} E_{j} (n={n})"),
                &p(&[&x[i], &x[j]]),
                &p(&[&y[j], &y[i], &x[j]]),
            );
        }
        for i in (1..n).filter(|i| i + 2 < n) {
            t.check(
                || {
                    format!(
                        "v_{} v_{} v_{i} v_{} E_{i} E_{} = E_{i} E_{} (n={n})",
                        i + 1,
                        i + 2,
                        i + 1,
                        i + 2,
                        i + 2
                    )
                },
                &p(&[&y[i + 1], &y[i + 2], &y[i], &y[i + 1], &x[i], &x[i + 2]]),
                &p(&[&x[i], &x[i + 2]]),
            );
        }

        let g = AtlGens::new(n, cfg.convention);
        let (f, w, tt, ti) = (&g.f, &g.w, &g.t, &g.t_inv);
        for i in (1..n).filter(|i| i + 1 < n) {
            let (a, b) = (i + 1, i + 2);
            let lhs = g.p(&[&f[i], &f[a], &w[i], &w[a]]);
            t.check(
                || format!("F_{i} F_{a} w_{i} w_{a} = F_{i} t_{b}^-1 (n={n})"),
                &lhs,
                &g.p(&[&f[i], &ti[b]]),
            );
            t.check(
                || format!("F_{i} t_{b}^-1 = t_{b}^-1 F_{i} (n={n})"),
                &g.p(&[&f[i], &ti[b]]),
                &g.p(&[&ti[b], &f[i]]),
            );
            let lhs = g.p(&[&w[a], &w[i], &f[a], &f[i]]);
            t.check(
                || format!("w_{a} w_{i} F_{a} F_{i} = t_{b} F_{i} (n={n})"),
                &lhs,
                &g.p(&[&tt[b], &f[i]]),
            );
            t.check(
                || format!("t_{b} F_{i} = F_{i} t_{b} (n={n})"),
                &g.p(&[&tt[b], &f[i]]),
                &g.p(&[&f[i], &tt[b]]),
            );
        }
        for i in 2..n {
            let a = i - 1;
            let lhs = g.p(&[&f[i], &f[a], &w[i], &w[a]]);
            t.check(
                || format!("F_{i} F_{a} w_{i} w_{a} = F_{i} t_{a} (n={n})"),
                &lhs,
                &g.p(&[&f[i], &tt[a]]),
            );
            t.check(
                || format!("F_{i} t_{a} = t_{a} F_{i} (n={n})"),
                &g.p(&[&f[i], &tt[a]]),
                &g.p(&[&tt[a], &f[i]]),
            );
            let lhs = g.p(&[&w[a], &w[i], &f[a], &f[i]]);
            t.check(
                || format!("w_{a} w_{i} F_{a} F_{i} = t_{a}^-1 F_{i} (n={n})"),
                &lhs,
                &g.p(&[&ti[a], &f[i]]),
            );
            t.check(
                || format!("t_{a}^-1 F_{i} = F_{i} t_{a}^-1 (n={n})"),
                &g.p(&[&ti[a], &f[i]]),
                &g.p(&[&f[i], &ti[a]]),
            );
        }
        for (i, j) in pairs_at_distance(n, true) {
            t.check(
                || format!("F_{i} F_{j} F_{i} = F_{i} (n={n})"),
                &g.p(&[&f[i], &f[j], &f[i]]),
                &f[i],
            );
        }
        for i in (1..n).filter(|i| i + 2 < n) {
            t.check(
                || {
                    format!(
                        "w_{} w_{} w_{i} w_{} F_{i} F_{} = F_{i} F_{} (n={n})",
                        i + 1,
                        i + 2,
                        i + 1,
                        i + 2,
                        i + 2
                    )
                },
                &g.p(&[&w[i + 1], &w[i + 2], &w[i], &w[i + 1], &f[i], &f[i + 2]]),
                &g.p(&[&f[i], &f[i + 2]]),
            );
        }
    }
}

/// Items (2) to (4) of the Markov trace axioms for one element `x` on `n`
/// strands: the trace of `x` equals the trace on `n + 1` strands of `x`
/// times each stabilizing word.
fn markov_items<B: Basis>(t: &mut Tally, x: &Element<B>, label: &str) {
    let n = x.n();
    let m = n + 1;
    let tr = |e: &Element<B>| e.trace().expect("closure of a valid diagram");
    let base = tr(x);
    let xe = x.embed();
    let s = |i| Element::<B>::crossing_pos(i, m).unwrap();
    let s_inv = |i| Element::<B>::crossing_neg(i, m).unwrap();
    let v = |i| Element::<B>::virtual_crossing(i, m).unwrap();

    let mut words: Vec<(String, Vec<Element<B>>)> = vec![
        (format!("S_{n}"), vec![s(n)]),
        (format!("S_{n}^-1"), vec![s_inv(n)]),
        (format!("v_{n}"), vec![v(n)]),
    ];
    if n >= 2 {
        let k = n - 1;
        words.push((format!("S_{n}^-1 v_{k} S_{n}"), vec![s_inv(n), v(k), s(n)]));
        words.push((
            format!("v_{n} v_{k} S_{k} v_{n} S_{k}^-1 v_{k} v_{n}"),
            vec![v(n), v(k), s(k), v(n), s_inv(k), v(k), v(n)],
        ));
    }
    for (name, factors) in words {
        let mut y = xe.clone();
        for f in &factors {
            y = y.mul(f).expect("same strand count");
        }
        t.check(
            || format!("T_{n}({label}) = T_{m}({label} {name})"),
            &base,
            &tr(&y),
        );
    }
}

fn commutes<B: Basis>(t: &mut Tally, x: &Element<B>, y: &Element<B>, label: &str) {
    let xy = x.mul(y).unwrap().trace().unwrap();
    let yx = y.mul(x).unwrap().trace().unwrap();
    t.check(|| format!("T(xy) = T(yx) for {label}"), &xy, &yx);
}

/// A uniformly random perfect matching of the `2n` boundary points.
pub fn random_flat_tangle(n: usize, rng: &mut impl Rng) -> FlatTangle {
    let mut pts: Vec<Endpoint> = (1..=n)
        .flat_map(|p| [Endpoint::new(0, p), Endpoint::new(1, p)])
        .collect();
    pts.shuffle(rng);
    FlatTangle::new(n, pts.chunks(2).map(|c| (c[0], c[1]))).expect("a perfect matching")
}

/// Random labels in `[-bound, bound]` obeying the parity rule.
pub fn random_arrow_tangle(n: usize, bound: i64, rng: &mut impl Rng) -> ArrowTangle {
    let base = random_flat_tangle(n, rng);
    let labels: Vec<i64> = base
        .pairs()
        .iter()
        .map(|(x, y)| {
            let odd = x.side == y.side;
            loop {
                let l = rng.gen_range(-bound..=bound);
                if (l.rem_euclid(2) == 1) == odd {
                    break l;
                }
            }
        })
        .collect();
    ArrowTangle::from_pair_labels(base, &labels).expect("labels satisfy parity")
}

fn random_laurent(rng: &mut impl Rng) -> LaurentPoly {
    LaurentPoly::from_terms(
        (0..rng.gen_range(1..=3)).map(|_| (rng.gen_range(-4..=4), rng.gen_range(-3i64..=3))),
    )
}

fn random_arrow_poly(rng: &mut impl Rng) -> ArrowPoly {
    let mut p = ArrowPoly::from(random_laurent(rng));
    if rng.gen_bool(0.5) {
        p = p * ArrowPoly::zigzag_factor(rng.gen_range(1..=3));
    }
    p
}

/// Sum of up to four random basis diagrams with small random coefficients.
pub fn random_vtl_element(n: usize, rng: &mut impl Rng) -> VtlElement {
    let mut x = VtlElement::zero(n);
    for _ in 0..rng.gen_range(1..=4) {
        let term = VtlElement::term(random_flat_tangle(n, rng), random_laurent(rng));
        x = x.add(&term).unwrap();
    }
    x
}

pub fn random_atl_element(n: usize, rng: &mut impl Rng) -> AtlElement {
    let mut x = AtlElement::zero(n);
    for _ in 0..rng.gen_range(1..=4) {
        let term = AtlElement::term(random_arrow_tangle(n, 5, rng), random_arrow_poly(rng));
        x = x.add(&term).unwrap();
    }
    x
}

fn markov_f(t: &mut Tally, cfg: &CheckConfig) {
    let mut rng = rng_for(cfg, 1);
    for n in 1..=cfg.max_n {
        let basis = FlatTangle::enumerate(n).expect("max-n within enumeration limit");
        for e in &basis {
            markov_items(t, &VtlElement::basis(e.clone()), &e.to_string());
        }
        for a in &basis {
            for b in &basis {
                let (x, y) = (VtlElement::basis(a.clone()), VtlElement::basis(b.clone()));
                commutes(t, &x, &y, &format!("x={a}, y={b}"));
            }
        }
    }
    let big = cfg.max_n + 1;
    for _ in 0..cfg.samples / 10 {
        let x = random_vtl_element(big, &mut rng);
        markov_items(t, &x, "random x");
    }
    for k in 0..cfg.samples {
        let n = 1 + k % cfg.max_n.max(1);
        let x = random_vtl_element(n, &mut rng);
        let y = random_vtl_element(n, &mut rng);
        commutes(t, &x, &y, &format!("x={x}, y={y}"));
    }
}

/// Random arrow tangles per strand count, at least 500.
fn arrow_samples(cfg: &CheckConfig) -> usize {
    cfg.samples.max(500)
}

fn markov_a(t: &mut Tally, cfg: &CheckConfig) {
    let mut rng = rng_for(cfg, 2);
    for n in 1..=cfg.max_n {
        for _ in 0..arrow_samples(cfg) {
            let a = random_arrow_tangle(n, 5, &mut rng);
            let b = random_arrow_tangle(n, 5, &mut rng);
            markov_items(t, &AtlElement::basis(a.clone()), &a.to_string());
            commutes(
                t,
                &AtlElement::basis(a.clone()),
                &AtlElement::basis(b.clone()),
                &format!("x={a}, y={b}"),
            );
        }
    }
    for k in 0..cfg.samples {
        let n = 1 + k % cfg.max_n.max(1);
        let x = random_atl_element(n, &mut rng);
        let y = random_atl_element(n, &mut rng);
        commutes(t, &x, &y, &format!("x={x}, y={y}"));
    }
    for _ in 0..cfg.samples / 10 {
        let x = random_atl_element(cfg.max_n + 1, &mut rng);
        markov_items(t, &x, "random x");
    }
}

/// Both sides of every defining relation of the virtual braid group on
/// `n` strands.
pub fn braid_relation_instances(n: usize) -> Vec<(String, Vec<Letter>, Vec<Letter>)> {
    let s = Letter::sigma;
    let si = Letter::sigma_inv;
    let tau = Letter::Tau;
    let mut out = Vec::new();
    for i in 1..n {
        out.push((format!("s{i} s{i}' = 1"), vec![s(i), si(i)], vec![]));
        out.push((format!("s{i}' s{i} = 1"), vec![si(i), s(i)], vec![]));
        out.push((format!("t{i} t{i} = 1"), vec![tau(i), tau(i)], vec![]));
    }
    let all = |i| [s(i), si(i), tau(i)];
    for (i, j) in pairs_at_distance(n, false) {
        for a in all(i) {
            for b in all(j) {
                out.push((format!("{a} {b} = {b} {a}"), vec![a, b], vec![b, a]));
            }
        }
    }
    for (i, j) in pairs_at_distance(n, true) {
        for x in [s, si, tau] {
            let (a, b) = (x(i), x(j));
            out.push((
                format!("{a} {b} {a} = {b} {a} {b}"),
                vec![a, b, a],
                vec![b, a, b],
            ));
        }
        for x in [s, si] {
            out.push((
                format!("t{i} t{j} {} = {} t{i} t{j}", x(i), x(j)),
                vec![tau(i), tau(j), x(i)],
                vec![x(j), tau(i), tau(j)],
            ));
        }
    }
    out
}

fn representation(t: &mut Tally, cfg: &CheckConfig) {
    for n in 2..=cfg.max_n.max(2) {
        for (name, l, r) in braid_relation_instances(n) {
            let l = BraidWord::new(n, l).unwrap();
            let r = BraidWord::new(n, r).unwrap();
            t.check(|| format!("rho_f: {name} (n={n})"), &rho_f(&l), &rho_f(&r));
            t.check(|| format!("rho_a: {name} (n={n})"), &rho_a(&l), &rho_a(&r));
        }
        for i in 1..n {
            let one_f = VtlElement::one(n);
            let one_a = AtlElement::one(n);
            let pf = VtlElement::crossing_pos(i, n).unwrap();
            let qf = VtlElement::crossing_neg(i, n).unwrap();
            let pa = AtlElement::crossing_pos(i, n).unwrap();
            let qa = AtlElement::crossing_neg(i, n).unwrap();
            t.check(
                || format!("S_{i} S_{i}^-1 = 1 in VTL_{n}"),
                &pf.mul(&qf).unwrap(),
                &one_f,
            );
            t.check(
                || format!("S_{i}^-1 S_{i} = 1 in VTL_{n}"),
                &qf.mul(&pf).unwrap(),
                &one_f,
            );
            t.check(
                || format!("S_{i} S_{i}^-1 = 1 in ATL_{n}"),
                &pa.mul(&qa).unwrap(),
                &one_a,
            );
            t.check(
                || format!("S_{i}^-1 S_{i} = 1 in ATL_{n}"),
                &qa.mul(&pa).unwrap(),
                &one_a,
            );
        }
    }
    let mut rng = rng_for(cfg, 3);
    for k in 0..cfg.samples {
        let n = 2 + k % cfg.max_n.saturating_sub(1).max(1);
        let w = random_word(n, rng.gen_range(0..=8), &mut rng);
        let (f, a) = (rho_f(&w), rho_a(&w));
        t.check(
            || format!("forget(rho_a(w)) = rho_f(w) for {w}"),
            &a.forget(),
            &f,
        );
        let cut = rng.gen_range(0..=w.len());
        let left = BraidWord::new(n, w.letters()[..cut].to_vec()).unwrap();
        let right = BraidWord::new(n, w.letters()[cut..].to_vec()).unwrap();
        t.check(
            || format!("rho_f(uv) = rho_f(u) rho_f(v) for {w} cut at {cut}"),
            &f,
            &rho_f(&left).mul(&rho_f(&right)).unwrap(),
        );
        t.check(
            || format!("rho_a(uv) = rho_a(u) rho_a(v) for {w} cut at {cut}"),
            &a,
            &rho_a(&left).mul(&rho_a(&right)).unwrap(),
        );
        let c = random_classical_word(n, rng.gen_range(0..=8), &mut rng);
        let planar = rho_f(&c).terms().all(|(e, _)| e.is_non_crossing());
        t.check(|| format!("rho_f({c}) is planar"), &planar, &true);
    }
}

fn tl_restriction(t: &mut Tally, cfg: &CheckConfig) {
    let mut rng = rng_for(cfg, 4);
    for k in 0..cfg.samples {
        let n = 2 + k % cfg.max_n.saturating_sub(1).max(1);
        let len = rng.gen_range(0..=12);
        let idx: Vec<usize> = (0..len).map(|_| rng.gen_range(1..n)).collect();
        let mut x = VtlElement::one(n);
        let mut y = AtlElement::one(n);
        for &i in &idx {
            x = x.mul(&VtlElement::cup_cap(i, n).unwrap()).unwrap();
            let f = ArrowTangle::generator_with(ArrowGenerator::F(i), n, cfg.convention).unwrap();
            y = y.mul(&AtlElement::basis(f)).unwrap();
        }
        let word = || {
            let text: Vec<String> = idx.iter().map(|i| format!("E_{i}")).collect();
            format!("T^a(iota({})) = T^f (n={n})", text.join(" "))
        };
        let ta = y.trace_a().unwrap();
        t.check(word, &ta, &ArrowPoly::from(x.trace_f()));
    }
    for k in 0..cfg.samples / 2 {
        let n = 1 + k % cfg.max_n.max(1);
        let w = random_classical_word(n, rng.gen_range(0..=8), &mut rng);
        let a = arrow_polynomial(&w);
        t.check(
            || format!("arrow({w}) has no z_k"),
            &a.has_zigzag_variables(),
            &false,
        );
        t.check(
            || format!("arrow({w}) = f({w})"),
            &a,
            &ArrowPoly::from(f_polynomial(&w)),
        );
    }
}

fn parity(t: &mut Tally, cfg: &CheckConfig) {
    for n in 1..=cfg.max_n {
        let tangles: Vec<FlatTangle> = FlatTangle::enumerate(n)
            .expect("max-n within enumeration limit")
            .into_iter()
            .filter(FlatTangle::is_parity_tangle)
            .collect();
        let iota = |e: &FlatTangle| ArrowTangle::iota_nu(e).expect("parity tangle");
        for e in &tangles {
            let z = iota(e).closure_zigzags().unwrap();
            t.check(
                || format!("closure of iota({e}) has no zigzags"),
                &z.iter().all(|&k| k == 0),
                &true,
            );
            for e2 in &tangles {
                let (p, _) = e.multiply(e2).unwrap();
                let (q, trace) = iota(e).multiply(&iota(e2)).unwrap();
                t.check(
                    || format!("{e} * {e2} is a parity tangle"),
                    &p.is_parity_tangle(),
                    &true,
                );
                if p.is_parity_tangle() {
                    t.check(
                        || format!("iota({e} * {e2}) = iota({e}) * iota({e2})"),
                        &iota(&p),
                        &q,
                    );
                }
                t.check(
                    || format!("iota({e}) iota({e2}) closes cycles without zigzags"),
                    &trace.cycle_zigzags.iter().all(|&k| k == 0),
                    &true,
                );
            }
        }
    }
}

/// Random words with at most `max_c` classical crossings; every third word
/// is classical and every third purely virtual.
pub fn oracle_word(k: usize, max_n: usize, max_c: usize, rng: &mut impl Rng) -> BraidWord {
    let n = 1 + k % max_n.max(1);
    let len = rng.gen_range(0..=max_c + 4);
    let w = match k % 3 {
        0 => random_word(n, len, rng),
        1 => random_classical_word(n, len.min(max_c), rng),
        _ => BraidWord::new(
            n,
            (0..len)
                .filter(|_| n >= 2)
                .map(|_| Letter::Tau(rng.gen_range(1..n)))
                .collect(),
        )
        .unwrap(),
    };
    let mut letters = Vec::new();
    let mut c = 0;
    for &l in w.letters() {
        if l.is_classical() {
            if c == max_c {
                continue;
            }
            c += 1;
        }
        letters.push(l);
    }
    BraidWord::new(n, letters).unwrap()
}

fn oracle(t: &mut Tally, cfg: &CheckConfig) {
    let mut rng = rng_for(cfg, 5);
    for k in 0..cfg.samples {
        let w = oracle_word(k, cfg.max_n, 10, &mut rng);
        let f = f_state_sum(&w, cfg.mode)
            .expect("within crossing limit")
            .value;
        let a = arrow_state_sum(&w, cfg.mode)
            .expect("within crossing limit")
            .value;
        t.check(|| format!("f({w}) = state sum"), &f_polynomial(&w), &f);
        t.check(
            || format!("arrow({w}) = state sum"),
            &arrow_polynomial(&w),
            &a,
        );
    }
}

/// Applies `moves` random relations and Markov moves to each of `words`
/// random words and compares both invariants before and after. A failure
/// records the starting word and the replayable move log.
pub fn fuzz(words: usize, moves: usize, seed: u64, max_n: usize) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = Tally::default();
    for k in 0..words {
        let n = 1 + k % max_n.max(1);
        let w = random_word(n, rng.gen_range(0..=8), &mut rng);
        let s: u64 = rng.gen();
        let (w2, log) = random_equivalent(&w, s, moves);
        let context = || {
            let steps: Vec<String> = log.iter().map(|m| m.to_string()).collect();
            format!("{w} -> {w2} via seed {s}: [{}]", steps.join("; "))
        };
        t.check(
            || format!("f unchanged: {}", context()),
            &f_polynomial(&w),
            &f_polynomial(&w2),
        );
        t.check(
            || format!("arrow unchanged: {}", context()),
            &arrow_polynomial(&w),
            &arrow_polynomial(&w2),
        );
    }
    t.report(Suite::Invariance)
}

/// Runs the arrow presentation suite under each sign convention for the
/// cusps of `F_i` and returns the conventions that pass.
pub fn passing_conventions(max_n: usize, seed: u64) -> Vec<CuspConvention> {
    CuspConvention::all_signs()
        .into_iter()
        .filter(|&c| {
            let cfg = CheckConfig {
                convention: c,
                ..CheckConfig::new(max_n, seed)
            };
            run(Suite::PresentationAtl, &cfg).passed()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick(max_n: usize) -> CheckConfig {
        CheckConfig {
            samples: 20,
            ..CheckConfig::new(max_n, 1)
        }
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn small_suites_pass() {
        for s in Suite::ALL {
            let r = run(s, &quick(3));
            assert!(r.passed(), "{r}");
            assert!(r.checked > 0, "{s}");
        }
    }

    #[test]
    fn only_standard_convention_passes() {
        assert_eq!(passing_conventions(3, 0), vec![CuspConvention::STANDARD]);
    }

    #[test]
    fn failures_are_reported() {
        let mut t = Tally::default();
        t.check(|| "1 = 2".into(), &1, &2);
        t.check(|| "1 = 1".into(), &1, &1);
        let r = t.report(Suite::Derived);
        assert!(!r.passed());
        assert_eq!(r.checked, 2);
        assert!(r.to_string().contains("lhs: 1"));
    }
}
