//! Brute-force state sums on the closed braid diagram.
//!
//! Independent of the tangle and algebra modules: every smoothing state of
//! the classical crossings is laid out as a port graph over the stacked
//! letters plus the closure arcs, and its loops are traced directly.

use std::collections::BTreeMap;

use rayon::prelude::*;
use thiserror::Error;

use crate::braid::{BraidWord, Letter};
use crate::rings::{ArrowPoly, LaurentPoly, ZigzagMonomial};

/// Largest number of classical crossings accepted.
pub const MAX_CROSSINGS: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{crossings} classical crossings exceed the limit of {max}")]
    TooManyCrossings { crossings: usize, max: usize },
    #[error("loop has odd signed cusp sum {0}")]
    OddH(i64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    Sequential,
    /// Splits the states across the current rayon pool.
    #[default]
    Parallel,
}

/// A state sum together with the number of states it visited.
#[derive(Debug, Clone, PartialEq)]
pub struct StateSum<P> {
    pub value: P,
    pub states: u64,
}

/// One smoothing state: bit `k` set means crossing `k` is replaced by the
/// cup-cap pair, clear means by two parallel strands.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SmoothingState {
    pub bits: u32,
}

impl SmoothingState {
    /// Exponent of `A` in the state weight: identity smoothing of a positive
    /// crossing weighs `A`, its cup-cap smoothing `A^-1`; negative crossings
    /// are the other way round.
    pub fn weight_exponent(&self, signs: &[bool]) -> i32 {
        signs
            .iter()
            .enumerate()
            .map(|(k, &positive)| {
                let cupcap = self.bits >> k & 1 == 1;
                if positive != cupcap {
                    1
                } else {
                    -1
                }
            })
            .sum()
    }

    pub fn weight(&self, signs: &[bool]) -> LaurentPoly {
        LaurentPoly::a_pow(self.weight_exponent(signs))
    }
}

/// Cusp labels carried by the cup and the cap of a cup-cap smoothing.
const CUP_LABEL: i64 = 1;
const CAP_LABEL: i64 = 1;

#[derive(Clone, Copy)]
struct Edge {
    to: u32,
    /// Signed cusp count picked up when leaving through this port.
    cusps: i64,
}

/// Port layout: point `(level, pos)` for `level in 0..=len`, each with an
/// upper and a lower port.
struct Diagram {
    n: usize,
    base: Vec<Edge>,
    crossings: Vec<(usize, usize, bool)>,
}

impl Diagram {
    fn new(w: &BraidWord) -> Self {
        let n = w.n();
        let levels = w.len() + 1;
        let dummy = Edge { to: 0, cusps: 0 };
        let mut d = Self {
            n,
            base: vec![dummy; 2 * levels * n],
            crossings: Vec::new(),
        };
        for p in 0..n {
            join(
                &mut d.base,
                port(n, 0, p, true),
                port(n, levels - 1, p, false),
                0,
            );
        }
        for (k, letter) in w.letters().iter().enumerate() {
            for p in 0..n {
                join(
                    &mut d.base,
                    port(n, k, p, false),
                    port(n, k + 1, p, true),
                    0,
                );
            }
            match *letter {
                Letter::Tau(i) => {
                    let i = i - 1;
                    join(
                        &mut d.base,
                        port(n, k, i, false),
                        port(n, k + 1, i + 1, true),
                        0,
                    );
                    join(
                        &mut d.base,
                        port(n, k, i + 1, false),
                        port(n, k + 1, i, true),
                        0,
                    );
                }
                Letter::Sigma { i, positive } => d.crossings.push((k, i - 1, positive)),
            }
        }
        d
    }

    fn smoothed(&self, state: SmoothingState, ports: &mut Vec<Edge>) {
        ports.clear();
        ports.extend_from_slice(&self.base);
        for (bit, &(k, i, _)) in self.crossings.iter().enumerate() {
            if state.bits >> bit & 1 == 1 {
                join(
                    ports,
                    port(self.n, k, i, false),
                    port(self.n, k, i + 1, false),
                    CUP_LABEL,
                );
                join(
                    ports,
                    port(self.n, k + 1, i, true),
                    port(self.n, k + 1, i + 1, true),
                    CAP_LABEL,
                );
            }
        }
    }

    /// Signed cusp sum of every loop.
    fn loops(ports: &[Edge], seen: &mut Vec<bool>, out: &mut Vec<i64>) {
        seen.clear();
        seen.resize(ports.len(), false);
        out.clear();
        for start in 0..ports.len() {
            if seen[start] {
                continue;
            }
            let mut h = 0;
            let mut p = start;
            loop {
                seen[p] = true;
                let e = ports[p];
                h += e.cusps;
                let q = e.to as usize;
                seen[q] = true;
                p = q ^ 1;
                if p == start {
                    break;
                }
            }
            out.push(h);
        }
    }
}

fn port(n: usize, level: usize, pos: usize, upper: bool) -> usize {
    2 * (level * n + pos) + usize::from(!upper)
}

/// Connects two ports; `rightward` cusps are gained going from `a` to `b`.
fn join(ports: &mut [Edge], a: usize, b: usize, rightward: i64) {
    ports[a] = Edge {
        to: b as u32,
        cusps: rightward,
    };
    ports[b] = Edge {
        to: a as u32,
        cusps: -rightward,
    };
}

/// Per-state summary: weight exponent, loop count with zero zigzags, and
/// the sorted nonzero zigzag counts.
type Key = (i32, u32, Vec<u32>);

fn tally(w: &BraidWord, mode: Mode, arrow: bool) -> Result<(BTreeMap<Key, i64>, u64), OracleError> {
    let diagram = Diagram::new(w);
    let c = diagram.crossings.len();
    if c > MAX_CROSSINGS {
        return Err(OracleError::TooManyCrossings {
            crossings: c,
            max: MAX_CROSSINGS,
        });
    }
    let signs: Vec<bool> = diagram.crossings.iter().map(|x| x.2).collect();
    let total: u64 = 1 << c;

    let run = |range: std::ops::Range<u64>| -> Result<BTreeMap<Key, i64>, OracleError> {
        let mut acc = BTreeMap::new();
        let mut ports = Vec::new();
        let mut seen = Vec::new();
        let mut hs = Vec::new();
        for bits in range {
            let state = SmoothingState { bits: bits as u32 };
            diagram.smoothed(state, &mut ports);
            Diagram::loops(&ports, &mut seen, &mut hs);
            let mut zeros = 0;
            let mut zz = Vec::new();
            for &h in &hs {
                if h % 2 != 0 {
                    return Err(OracleError::OddH(h));
                }
                let z = (h.unsigned_abs() / 2) as u32;
                if z == 0 || !arrow {
                    zeros += 1;
                } else {
                    zz.push(z);
                }
            }
            zz.sort_unstable();
            *acc.entry((state.weight_exponent(&signs), zeros, zz))
                .or_insert(0) += 1;
        }
        Ok(acc)
    };

    let merged = match mode {
        Mode::Sequential => run(0..total)?,
        Mode::Parallel => {
            const CHUNK: u64 = 1 << 10;
            let chunks = total.div_ceil(CHUNK);
            (0..chunks)
                .into_par_iter()
                .map(|k| run(k * CHUNK..((k + 1) * CHUNK).min(total)))
                .try_reduce(BTreeMap::new, |mut a, b| {
                    for (key, v) in b {
                        *a.entry(key).or_insert(0) += v;
                    }
                    Ok(a)
                })?
        }
    };
    Ok((merged, total))
}

/// `(-A^3)^(-writhe)`.
fn writhe_factor(w: &BraidWord) -> LaurentPoly {
    let wr = w.writhe();
    let sign = if wr % 2 == 0 { 1 } else { -1 };
    LaurentPoly::monomial(sign, (-3 * wr) as i32)
}

/// Writhe-normalized bracket with loop value `-A^2 - A^-2`.
pub fn f_state_sum(w: &BraidWord, mode: Mode) -> Result<StateSum<LaurentPoly>, OracleError> {
    let (counts, states) = tally(w, mode, false)?;
    let mut value = LaurentPoly::zero();
    for ((e, loops, _), k) in counts {
        value = value + LaurentPoly::monomial(k, e) * LaurentPoly::d_power(loops);
    }
    Ok(StateSum {
        value: value * writhe_factor(w),
        states,
    })
}

/// Writhe-normalized arrow bracket: a loop with signed cusp sum `h`
/// contributes `z_{|h|/2}`, with `z_0 = -A^2 - A^-2`.
pub fn arrow_state_sum(w: &BraidWord, mode: Mode) -> Result<StateSum<ArrowPoly>, OracleError> {
    let (counts, states) = tally(w, mode, true)?;
    let mut value = ArrowPoly::zero();
    for ((e, zeros, zz), k) in counts {
        let mono = ZigzagMonomial::new(zz).expect("zero counts are tallied separately");
        let coeff = LaurentPoly::monomial(k, e) * LaurentPoly::d_power(zeros);
        value = value + ArrowPoly::term(mono, coeff);
    }
    Ok(StateSum {
        value: value * ArrowPoly::from(writhe_factor(w)),
        states,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(s: &str) -> BraidWord {
        BraidWord::parse(s).unwrap()
    }

    #[test]
    fn unknots() {
        let d = LaurentPoly::d();
        for s in ["-n 1", "-n 2 s1", "-n 2 s1'", "-n 2 t1"] {
            let w = word(s);
            assert_eq!(f_state_sum(&w, Mode::Sequential).unwrap().value, d, "{s}");
            assert_eq!(
                arrow_state_sum(&w, Mode::Sequential).unwrap().value,
                ArrowPoly::from(d.clone()),
                "{s}"
            );
        }
    }

    #[test]
    fn state_count() {
        let w = word("-n 3 s1 s2 t1 s1' s2");
        assert_eq!(f_state_sum(&w, Mode::Sequential).unwrap().states, 16);
        assert_eq!(
            f_state_sum(&word("-n 2 t1"), Mode::Sequential)
                .unwrap()
                .states,
            1
        );
    }

    #[test]
    fn sequential_equals_parallel() {
        let w = word("-n 3 s1 s1 t2 s2' s1 t1 s2 s2 s1' t2 s1 s2 s1'");
        assert_eq!(
            arrow_state_sum(&w, Mode::Sequential).unwrap(),
            arrow_state_sum(&w, Mode::Parallel).unwrap()
        );
    }

    #[test]
    fn guard() {
        let w = BraidWord::new(2, vec![Letter::sigma(1); 25]).unwrap();
        assert_eq!(
            f_state_sum(&w, Mode::Sequential),
            Err(OracleError::TooManyCrossings {
                crossings: 25,
                max: MAX_CROSSINGS
            })
        );
    }

    #[test]
    fn smoothing_weights() {
        let signs = [true, false];
        assert_eq!(SmoothingState { bits: 0b00 }.weight_exponent(&signs), 0);
        assert_eq!(SmoothingState { bits: 0b01 }.weight_exponent(&signs), -2);
        assert_eq!(SmoothingState { bits: 0b10 }.weight_exponent(&signs), 2);
        assert_eq!(
            SmoothingState { bits: 0b01 }.weight(&signs),
            LaurentPoly::a_pow(-2)
        );
    }
}
