//! Arrow flat n-tangles: flat tangles whose pairs carry integer cusp labels.
//!
//! A label on a same-side pair is odd, a label on a through pair is even. When
//! tangles are composed, labels along an arc are summed with a running sign
//! that flips each time the walk passes a same-side pair, and each closed
//! cycle contributes `z_k` with `k = |h| / 2` for its signed cusp sum `h`.

use std::fmt;
use std::str::FromStr;

use crate::tangle::{parse_pair, split_pairs, Endpoint, Factor, FlatTangle, Step, TangleError};

/// Cup and cap labels of the `F_i` generator.
///
/// [`CuspConvention::STANDARD`] is the only assignment for which the full
/// relation set of the arrow algebra holds; the others exist so tests can
/// confirm that.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CuspConvention {
    pub cup: i64,
    pub cap: i64,
}

impl CuspConvention {
    pub const STANDARD: Self = Self { cup: 1, cap: 1 };

    /// The four sign choices `{+-1} x {+-1}`.
    pub fn all_signs() -> [Self; 4] {
        [
            Self { cup: 1, cap: 1 },
            Self { cup: 1, cap: -1 },
            Self { cup: -1, cap: 1 },
            Self { cup: -1, cap: -1 },
        ]
    }
}

/// Label magnitude of `t_j`: one full zigzag.
pub const T_LABEL: i64 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArrowGenerator {
    Identity,
    /// Cup-cap `F_i`.
    F(usize),
    /// Virtual crossing `w_i`.
    W(usize),
    /// `t_j`: strand `j` labelled `+2`.
    T(usize),
    /// `t_j^-1`: strand `j` labelled `-2`.
    TInv(usize),
}

/// Labels of the product arcs and the zigzag counts of the closed cycles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArrowCompositionTrace {
    pub arc_labels: Vec<((Endpoint, Endpoint), i64)>,
    pub cycle_zigzags: Vec<u32>,
}

/// An arrow flat n-tangle.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArrowTangle {
    base: FlatTangle,
    // indexed by boundary slot; both ends of a pair hold its label
    labels: Vec<i64>,
}

impl ArrowTangle {
    /// Labels `base` from `(pair, label)` entries. Pairs may be given with
    /// their ends in either order.
    pub fn new(
        base: FlatTangle,
        labels: impl IntoIterator<Item = ((Endpoint, Endpoint), i64)>,
    ) -> Result<Self, TangleError> {
        let mut slots = vec![None; 2 * base.n()];
        for ((x, y), label) in labels {
            if base.partner(x) != y {
                return Err(TangleError::InvalidMatching(format!(
                    "{x}-{y} is not a pair of {base}"
                )));
            }
            slots[base.slot_of(x)] = Some(label);
            slots[base.slot_of(y)] = Some(label);
        }
        let mut out = vec![0; slots.len()];
        for (x, y) in base.pairs() {
            let label = slots[base.slot_of(x)]
                .ok_or_else(|| TangleError::MissingLabel(format!("{x}-{y}")))?;
            check_parity(x, y, label)?;
            out[base.slot_of(x)] = label;
            out[base.slot_of(y)] = label;
        }
        Ok(Self { base, labels: out })
    }

    /// Labels in the order of [`FlatTangle::pairs`].
    pub fn from_pair_labels(base: FlatTangle, labels: &[i64]) -> Result<Self, TangleError> {
        let pairs = base.pairs();
        if labels.len() != pairs.len() {
            return Err(TangleError::MissingLabel(format!(
                "{} labels for {} pairs",
                labels.len(),
                pairs.len()
            )));
        }
        Self::new(base, pairs.into_iter().zip(labels.iter().copied()))
    }

    /// All through strands, labelled 0.
    pub fn identity(n: usize) -> Self {
        Self::unlabelled(FlatTangle::identity(n))
    }

    /// A base tangle with label 0 on through pairs. Same-side pairs get the
    /// label given by `same_side`.
    fn with_default_labels(
        base: FlatTangle,
        same_side: impl Fn(Endpoint, Endpoint) -> i64,
    ) -> Self {
        let mut labels = vec![0; 2 * base.n()];
        for (x, y) in base.pairs() {
            let l = if x.side == y.side { same_side(x, y) } else { 0 };
            labels[base.slot_of(x)] = l;
            labels[base.slot_of(y)] = l;
        }
        Self { base, labels }
    }

    fn unlabelled(base: FlatTangle) -> Self {
        Self::with_default_labels(base, |_, _| unreachable!("no same-side pairs"))
    }

    pub fn generator(kind: ArrowGenerator, n: usize) -> Result<Self, TangleError> {
        Self::generator_with(kind, n, CuspConvention::STANDARD)
    }

    pub fn generator_with(
        kind: ArrowGenerator,
        n: usize,
        conv: CuspConvention,
    ) -> Result<Self, TangleError> {
        match kind {
            ArrowGenerator::Identity => Ok(Self::identity(n)),
            ArrowGenerator::F(i) => {
                let base = FlatTangle::cup_cap(i, n)?;
                Ok(Self::with_default_labels(base, |x, _| {
                    if x.side == 0 {
                        conv.cup
                    } else {
                        conv.cap
                    }
                }))
            }
            ArrowGenerator::W(i) => Ok(Self::unlabelled(FlatTangle::crossing(i, n)?)),
            ArrowGenerator::T(j) => Self::twist(j, n, T_LABEL),
            ArrowGenerator::TInv(j) => Self::twist(j, n, -T_LABEL),
        }
    }

    fn twist(j: usize, n: usize, label: i64) -> Result<Self, TangleError> {
        if j == 0 || j > n {
            return Err(TangleError::IndexOutOfRange { index: j, n });
        }
        let mut t = Self::identity(n);
        for p in [Endpoint::new(0, j), Endpoint::new(1, j)] {
            let s = t.base.slot_of(p);
            t.labels[s] = label;
        }
        Ok(t)
    }

    pub fn n(&self) -> usize {
        self.base.n()
    }

    pub fn base(&self) -> &FlatTangle {
        &self.base
    }

    /// Drops the labels.
    pub fn forget(&self) -> FlatTangle {
        self.base.clone()
    }

    /// Label of the pair containing `p`.
    pub fn label(&self, p: Endpoint) -> i64 {
        self.labels[self.base.slot_of(p)]
    }

    /// `(pair, label)` in canonical pair order.
    pub fn labelled_pairs(&self) -> Vec<((Endpoint, Endpoint), i64)> {
        self.base
            .pairs()
            .into_iter()
            .map(|(x, y)| ((x, y), self.label(x)))
            .collect()
    }

    /// Stacks `self` on `rhs`, computing arc labels and cycle zigzag counts.
    pub fn multiply(&self, rhs: &Self) -> Result<(Self, ArrowCompositionTrace), TangleError> {
        if self.n() != rhs.n() {
            return Err(TangleError::SizeMismatch(self.n(), rhs.n()));
        }
        let n = self.n();
        let gluing = self.base.glue(&rhs.base);
        let label_of = |s: &Step| match s.factor {
            Factor::Left => self.label(s.from),
            Factor::Right => rhs.label(s.from),
        };

        let mut partner = vec![0u16; 2 * n];
        let mut labels = vec![0i64; 2 * n];
        let mut arc_labels = Vec::with_capacity(n);
        for walk in &gluing.arcs {
            let a = walk[0].from;
            let b = walk[walk.len() - 1].to;
            let g = signed_sum(walk, label_of);
            let (sa, sb) = (crate::tangle::slot(n, a), crate::tangle::slot(n, b));
            partner[sa] = sb as u16;
            partner[sb] = sa as u16;
            labels[sa] = g;
            labels[sb] = g;
            arc_labels.push(((a, b), g));
        }
        let mut cycle_zigzags = Vec::with_capacity(gluing.cycles.len());
        for walk in &gluing.cycles {
            cycle_zigzags.push(zigzags(signed_sum(walk, label_of))?);
        }
        cycle_zigzags.sort_unstable();
        let product = Self {
            base: FlatTangle::from_partner(n, partner),
            labels,
        };
        debug_assert!(product
            .labelled_pairs()
            .iter()
            .all(|&((x, y), l)| check_parity(x, y, l).is_ok()));
        Ok((
            product,
            ArrowCompositionTrace {
                arc_labels,
                cycle_zigzags,
            },
        ))
    }

    /// Zigzag count of every cycle in the closure, sorted.
    pub fn closure_zigzags(&self) -> Result<Vec<u32>, TangleError> {
        let mut out = self
            .base
            .closure_walks()
            .iter()
            .map(|walk| zigzags(signed_sum(walk, |s| self.label(s.from))))
            .collect::<Result<Vec<_>, _>>()?;
        out.sort_unstable();
        Ok(out)
    }

    /// Signed cusp sums `h` of the closure cycles, in anchoring order.
    pub fn closure_cusp_sums(&self) -> Vec<i64> {
        self.base
            .closure_walks()
            .iter()
            .map(|walk| signed_sum(walk, |s| self.label(s.from)))
            .collect()
    }

    /// Adds a through strand labelled 0.
    pub fn include(&self) -> Self {
        let base = self.base.include();
        let n = self.n();
        let mut labels = vec![0; 2 * (n + 1)];
        for ((x, y), l) in self.labelled_pairs() {
            labels[base.slot_of(x)] = l;
            labels[base.slot_of(y)] = l;
        }
        Self { base, labels }
    }

    /// Labels a parity tangle by position differences: `|d - b|` on a
    /// same-side pair `{(a,b),(a,d)}`, `d - b` on a through pair
    /// `{(0,b),(1,d)}`.
    pub fn iota_nu(base: &FlatTangle) -> Result<Self, TangleError> {
        if !base.is_parity_tangle() {
            return Err(TangleError::NotParityTangle);
        }
        let mut labels = vec![0; 2 * base.n()];
        for (x, y) in base.pairs() {
            let l = if x.side == y.side {
                x.pos.abs_diff(y.pos) as i64
            } else {
                // listing order puts the side-0 end first
                y.pos as i64 - x.pos as i64
            };
            labels[base.slot_of(x)] = l;
            labels[base.slot_of(y)] = l;
        }
        Ok(Self {
            base: base.clone(),
            labels,
        })
    }
}

/// `sum_i parity_c(i) * label(i)` along a walk, where the cumulated parity of
/// a step is the product of the parities of the earlier steps, or of the
/// earlier steps and itself when the step runs against the boundary order.
pub(crate) fn signed_sum(walk: &[Step], label_of: impl Fn(&Step) -> i64) -> i64 {
    let mut sign = 1;
    let mut sum = 0;
    for step in walk {
        if step.is_forward() {
            sum += sign * label_of(step);
            sign *= step.parity();
        } else {
            sign *= step.parity();
            sum += sign * label_of(step);
        }
    }
    sum
}

fn zigzags(h: i64) -> Result<u32, TangleError> {
    if h % 2 != 0 {
        return Err(TangleError::OddH(h));
    }
    Ok((h.unsigned_abs() / 2) as u32)
}

fn check_parity(x: Endpoint, y: Endpoint, label: i64) -> Result<(), TangleError> {
    let odd = label.rem_euclid(2) == 1;
    if (x.side == y.side) != odd {
        return Err(TangleError::ParityViolation {
            pair: format!("{x}-{y}"),
            label,
        });
    }
    Ok(())
}

impl fmt::Debug for ArrowTangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ArrowTangle(n={}, {self})", self.n())
    }
}

/// `[(0,1)-(0,2):1,(0,3)-(1,2):-6,(1,1)-(1,3):3]`
impl fmt::Display for ArrowTangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, ((x, y), l)) in self.labelled_pairs().into_iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}-{y}:{l}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for ArrowTangle {
    type Err = TangleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut pairs = Vec::new();
        let mut labels = Vec::new();
        for p in split_pairs(s)? {
            let (x, y, label) = parse_pair(p)?;
            let label = label.ok_or_else(|| TangleError::MissingLabel(p.to_string()))?;
            pairs.push((x, y));
            labels.push(((x, y), label));
        }
        let base = FlatTangle::new(pairs.len(), pairs)?;
        ArrowTangle::new(base, labels)
    }
}
