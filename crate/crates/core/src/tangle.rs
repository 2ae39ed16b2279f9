//! Flat virtual n-tangles: perfect matchings of the `2n` boundary points
//! `{0,1} x {1..n}`, composed by stacking side 1 of the left factor onto
//! side 0 of the right factor.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TangleError {
    #[error("invalid matching: {0}")]
    InvalidMatching(String),
    #[error("endpoint ({side},{pos}) out of range for n = {n}")]
    OutOfRange { side: u8, pos: usize, n: usize },
    #[error("generator index {index} out of range for n = {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("strand counts differ: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("enumeration of {0}-tangles is capped at n = 6")]
    TooLarge(usize),
    #[error("label {label} on pair {pair} has the wrong parity")]
    ParityViolation { pair: String, label: i64 },
    #[error("no label given for pair {0}")]
    MissingLabel(String),
    #[error("tangle is not in the parity subalgebra")]
    NotParityTangle,
    #[error("internal error: odd cusp sum {0} on a closed cycle")]
    OddH(i64),
    #[error("cannot parse tangle: {0}")]
    Parse(String),
}

/// A boundary point `(side, position)` of an n-tangle.
///
/// The `Ord` impl is the boundary order
/// `(0,1) < (0,2) < ... < (0,n) < (1,n) < ... < (1,1)`, which is what fixes
/// traversal directions for arrow labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Endpoint {
    pub side: u8,
    pub pos: usize,
}

impl Endpoint {
    pub const fn new(side: u8, pos: usize) -> Self {
        Self { side, pos }
    }

    fn order_key(&self) -> (u8, isize) {
        if self.side == 0 {
            (0, self.pos as isize)
        } else {
            (1, -(self.pos as isize))
        }
    }

    /// Plain `(side, pos)` order used for canonical listings.
    pub(crate) fn listing_key(&self) -> (u8, usize) {
        (self.side, self.pos)
    }
}

impl Ord for Endpoint {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order_key().cmp(&other.order_key())
    }
}

impl PartialOrd for Endpoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Endpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.side, self.pos)
    }
}

/// Which factor of a product a traversal step runs through.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Factor {
    Left,
    Right,
}

/// One pair traversed during a walk, in the coordinates of its own tangle.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Step {
    pub factor: Factor,
    pub from: Endpoint,
    pub to: Endpoint,
}

impl Step {
    /// True when the pair is entered at its smaller endpoint.
    pub fn is_forward(&self) -> bool {
        self.from < self.to
    }

    /// `-1` for a pair with both ends on one side, `+1` for a through pair.
    pub fn parity(&self) -> i64 {
        if self.from.side == self.to.side {
            -1
        } else {
            1
        }
    }
}

/// Result of gluing two tangles: the `n` open arcs (each walked from its
/// smaller boundary point) and the closed cycles (each anchored at its
/// smallest interface position and entered through the left factor).
pub(crate) struct Gluing {
    pub arcs: Vec<Vec<Step>>,
    pub cycles: Vec<Vec<Step>>,
}

/// Summary of a flat product: the arcs of the product and the number of
/// closed curves that were removed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompositionTrace {
    pub arcs: Vec<(Endpoint, Endpoint)>,
    pub cycle_count: usize,
}

/// Generator kinds of the virtual Temperley-Lieb algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FlatGenerator {
    Identity,
    /// Cup-cap `E_i`.
    E(usize),
    /// Virtual crossing `v_i`.
    V(usize),
}

/// A flat virtual n-tangle, stored as a partner table over the `2n` boundary
/// slots. Slot `pos - 1` is `(0,pos)` and slot `n + pos - 1` is `(1,pos)`.
/// The table is a canonical form, so derived equality and hashing are
/// equality of matchings.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FlatTangle {
    n: usize,
    partner: Vec<u16>,
}

impl FlatTangle {
    pub fn new(
        n: usize,
        pairs: impl IntoIterator<Item = (Endpoint, Endpoint)>,
    ) -> Result<Self, TangleError> {
        if n == 0 {
            return Err(TangleError::InvalidMatching("n must be at least 1".into()));
        }
        let mut partner = vec![u16::MAX; 2 * n];
        for (x, y) in pairs {
            for p in [x, y] {
                if p.side > 1 || p.pos == 0 || p.pos > n {
                    return Err(TangleError::OutOfRange {
                        side: p.side,
                        pos: p.pos,
                        n,
                    });
                }
            }
            if x == y {
                return Err(TangleError::InvalidMatching(format!(
                    "{x} paired with itself"
                )));
            }
            let (sx, sy) = (slot(n, x), slot(n, y));
            for (s, p) in [(sx, x), (sy, y)] {
                if partner[s] != u16::MAX {
                    return Err(TangleError::InvalidMatching(format!("{p} used twice")));
                }
            }
            partner[sx] = sy as u16;
            partner[sy] = sx as u16;
        }
        if let Some(s) = partner.iter().position(|&p| p == u16::MAX) {
            return Err(TangleError::InvalidMatching(format!(
                "{} is not matched",
                endpoint(n, s)
            )));
        }
        Ok(Self { n, partner })
    }

    pub(crate) fn from_partner(n: usize, partner: Vec<u16>) -> Self {
        debug_assert_eq!(partner.len(), 2 * n);
        Self { n, partner }
    }

    pub fn identity(n: usize) -> Self {
        let partner = (0..2 * n)
            .map(|s| {
                if s < n {
                    (s + n) as u16
                } else {
                    (s - n) as u16
                }
            })
            .collect();
        Self { n, partner }
    }

    /// `E_i`: cup `(0,i)-(0,i+1)`, cap `(1,i)-(1,i+1)`, other strands straight.
    pub fn cup_cap(i: usize, n: usize) -> Result<Self, TangleError> {
        check_index(i, n)?;
        let mut t = Self::identity(n);
        t.link(Endpoint::new(0, i), Endpoint::new(0, i + 1));
        t.link(Endpoint::new(1, i), Endpoint::new(1, i + 1));
        Ok(t)
    }

    /// `v_i`: strands `i` and `i+1` exchange places.
    pub fn crossing(i: usize, n: usize) -> Result<Self, TangleError> {
        check_index(i, n)?;
        let mut t = Self::identity(n);
        t.link(Endpoint::new(0, i), Endpoint::new(1, i + 1));
        t.link(Endpoint::new(0, i + 1), Endpoint::new(1, i));
        Ok(t)
    }

    pub fn generator(kind: FlatGenerator, n: usize) -> Result<Self, TangleError> {
        match kind {
            FlatGenerator::Identity => Ok(Self::identity(n)),
            FlatGenerator::E(i) => Self::cup_cap(i, n),
            FlatGenerator::V(i) => Self::crossing(i, n),
        }
    }

    fn link(&mut self, x: Endpoint, y: Endpoint) {
        let (sx, sy) = (slot(self.n, x), slot(self.n, y));
        self.partner[sx] = sy as u16;
        self.partner[sy] = sx as u16;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn partner(&self, p: Endpoint) -> Endpoint {
        endpoint(self.n, self.partner[slot(self.n, p)] as usize)
    }

    pub(crate) fn slot_of(&self, p: Endpoint) -> usize {
        slot(self.n, p)
    }

    /// The pairs in canonical listing order: each pair written with its
    /// `(side, pos)`-smaller end first, pairs sorted by that end.
    pub fn pairs(&self) -> Vec<(Endpoint, Endpoint)> {
        let mut out = Vec::with_capacity(self.n);
        let mut order: Vec<usize> = (0..2 * self.n).collect();
        order.sort_by_key(|&s| endpoint(self.n, s).listing_key());
        for s in order {
            let t = self.partner[s] as usize;
            let (x, y) = (endpoint(self.n, s), endpoint(self.n, t));
            if x.listing_key() < y.listing_key() {
                out.push((x, y));
            }
        }
        out
    }

    /// Glues `self` (left) on top of `rhs` (right) and walks every strand.
    pub(crate) fn glue(&self, rhs: &Self) -> Gluing {
        let n = self.n;
        // visited flags: left slots 0..2n, right slots 2n..4n
        let mut seen = vec![false; 4 * n];
        let mut arcs = Vec::with_capacity(n);
        let mut starts: Vec<(Factor, Endpoint)> = (1..=n)
            .map(|p| (Factor::Left, Endpoint::new(0, p)))
            .chain((1..=n).map(|p| (Factor::Right, Endpoint::new(1, p))))
            .collect();
        starts.sort_by_key(|&(_, e)| e);
        for (factor, start) in starts {
            let key = |f: Factor, e: Endpoint| match f {
                Factor::Left => slot(n, e),
                Factor::Right => 2 * n + slot(n, e),
            };
            if seen[key(factor, start)] {
                continue;
            }
            let mut walk = Vec::new();
            let (mut f, mut at) = (factor, start);
            loop {
                let t = match f {
                    Factor::Left => self,
                    Factor::Right => rhs,
                };
                let to = t.partner(at);
                seen[key(f, at)] = true;
                seen[key(f, to)] = true;
                walk.push(Step {
                    factor: f,
                    from: at,
                    to,
                });
                match (f, to.side) {
                    (Factor::Left, 1) => {
                        f = Factor::Right;
                        at = Endpoint::new(0, to.pos);
                    }
                    (Factor::Right, 0) => {
                        f = Factor::Left;
                        at = Endpoint::new(1, to.pos);
                    }
                    _ => break,
                }
            }
            arcs.push(walk);
        }

        let mut cycles = Vec::new();
        for b in 1..=n {
            let start = Endpoint::new(1, b);
            if seen[slot(n, start)] {
                continue;
            }
            let mut walk = Vec::new();
            let mut at = start;
            loop {
                let to = self.partner(at);
                debug_assert_eq!(to.side, 1);
                seen[slot(n, at)] = true;
                seen[slot(n, to)] = true;
                walk.push(Step {
                    factor: Factor::Left,
                    from: at,
                    to,
                });
                let enter = Endpoint::new(0, to.pos);
                let back = rhs.partner(enter);
                debug_assert_eq!(back.side, 0);
                seen[2 * n + slot(n, enter)] = true;
                seen[2 * n + slot(n, back)] = true;
                walk.push(Step {
                    factor: Factor::Right,
                    from: enter,
                    to: back,
                });
                at = Endpoint::new(1, back.pos);
                if at == start {
                    break;
                }
            }
            cycles.push(walk);
        }
        Gluing { arcs, cycles }
    }

    /// Cycles of the closure, each started at `(0,b)` for its smallest
    /// position `b` and walked through `self` only; the closing arcs
    /// `(1,b) -> (0,b)` are implicit.
    pub(crate) fn closure_walks(&self) -> Vec<Vec<Step>> {
        let n = self.n;
        let mut seen = vec![false; 2 * n];
        let mut cycles = Vec::new();
        for b in 1..=n {
            let start = Endpoint::new(0, b);
            if seen[slot(n, start)] {
                continue;
            }
            let mut walk = Vec::new();
            let mut at = start;
            loop {
                let to = self.partner(at);
                seen[slot(n, at)] = true;
                seen[slot(n, to)] = true;
                walk.push(Step {
                    factor: Factor::Left,
                    from: at,
                    to,
                });
                at = Endpoint::new(1 - to.side, to.pos);
                if at == start {
                    break;
                }
            }
            cycles.push(walk);
        }
        cycles
    }

    /// Stacks `self` on `rhs`. Returns the product tangle and the number of
    /// closed curves produced by the gluing.
    pub fn multiply(&self, rhs: &Self) -> Result<(Self, CompositionTrace), TangleError> {
        if self.n != rhs.n {
            return Err(TangleError::SizeMismatch(self.n, rhs.n));
        }
        let g = self.glue(rhs);
        let mut partner = vec![0u16; 2 * self.n];
        let mut arcs = Vec::with_capacity(self.n);
        for walk in &g.arcs {
            let a = walk[0].from;
            let b = walk[walk.len() - 1].to;
            let (sa, sb) = (slot(self.n, a), slot(self.n, b));
            partner[sa] = sb as u16;
            partner[sb] = sa as u16;
            arcs.push((a, b));
        }
        Ok((
            Self::from_partner(self.n, partner),
            CompositionTrace {
                arcs,
                cycle_count: g.cycles.len(),
            },
        ))
    }

    /// Number of closed curves after joining `(0,i)` to `(1,i)` for every `i`.
    pub fn closure_loops(&self) -> usize {
        let n = self.n;
        let mut seen = vec![false; n];
        let mut loops = 0;
        for b in 0..n {
            if seen[b] {
                continue;
            }
            loops += 1;
            let mut s = b;
            loop {
                let t = self.partner[s] as usize;
                seen[t % n] = true;
                seen[s % n] = true;
                // jump across the closing arc
                s = if t < n { t + n } else { t - n };
                if s == b {
                    break;
                }
            }
        }
        loops
    }

    /// Adds a through strand `(0,n+1)-(1,n+1)`.
    pub fn include(&self) -> Self {
        let n = self.n;
        let pairs = self.pairs().into_iter().chain(std::iter::once((
            Endpoint::new(0, n + 1),
            Endpoint::new(1, n + 1),
        )));
        Self::new(n + 1, pairs).expect("inclusion of a valid tangle is valid")
    }

    /// True iff no two pairs interleave in the boundary order.
    pub fn is_non_crossing(&self) -> bool {
        // Each pair as an interval of ranks in the boundary order; a matching
        // is non-crossing iff the pairs nest like brackets.
        let n = self.n;
        let mut by_rank: Vec<usize> = (0..2 * n).collect();
        by_rank.sort_by_key(|&s| endpoint(n, s));
        let mut stack: Vec<usize> = Vec::new();
        for s in by_rank {
            let t = self.partner[s] as usize;
            if stack.last() == Some(&t) {
                stack.pop();
            } else {
                stack.push(s);
            }
        }
        stack.is_empty()
    }

    /// Membership in the parity subalgebra: every same-side pair joins
    /// positions of different parity, every through pair positions of equal
    /// parity.
    pub fn is_parity_tangle(&self) -> bool {
        self.pairs().iter().all(|(x, y)| {
            let diff = x.pos.abs_diff(y.pos);
            if x.side == y.side {
                diff % 2 == 1
            } else {
                diff % 2 == 0
            }
        })
    }

    /// All `(2n-1)!!` flat n-tangles, for `1 <= n <= 6`.
    pub fn enumerate(n: usize) -> Result<Vec<Self>, TangleError> {
        if n == 0 {
            return Err(TangleError::InvalidMatching("n must be at least 1".into()));
        }
        if n > 6 {
            return Err(TangleError::TooLarge(n));
        }
        let mut out = Vec::new();
        let mut partner = vec![u16::MAX; 2 * n];
        enumerate_rec(n, &mut partner, &mut out);
        Ok(out)
    }
}

fn enumerate_rec(n: usize, partner: &mut Vec<u16>, out: &mut Vec<FlatTangle>) {
    let Some(first) = partner.iter().position(|&p| p == u16::MAX) else {
        out.push(FlatTangle::from_partner(n, partner.clone()));
        return;
    };
    for other in first + 1..2 * n {
        if partner[other] != u16::MAX {
            continue;
        }
        partner[first] = other as u16;
        partner[other] = first as u16;
        enumerate_rec(n, partner, out);
        partner[first] = u16::MAX;
        partner[other] = u16::MAX;
    }
}

fn check_index(i: usize, n: usize) -> Result<(), TangleError> {
    if i == 0 || i >= n {
        Err(TangleError::IndexOutOfRange { index: i, n })
    } else {
        Ok(())
    }
}

pub(crate) fn slot(n: usize, p: Endpoint) -> usize {
    p.side as usize * n + p.pos - 1
}

pub(crate) fn endpoint(n: usize, s: usize) -> Endpoint {
    if s < n {
        Endpoint::new(0, s + 1)
    } else {
        Endpoint::new(1, s - n + 1)
    }
}

impl fmt::Debug for FlatTangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FlatTangle(n={}, {self})", self.n)
    }
}

/// `[(0,1)-(0,2),(0,3)-(1,2),(1,1)-(1,3)]`
impl fmt::Display for FlatTangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, (x, y)) in self.pairs().iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}-{y}")?;
        }
        write!(f, "]")
    }
}

/// Parses one `(a,b)-(c,d)` pair with an optional `:label` suffix.
pub(crate) fn parse_pair(s: &str) -> Result<(Endpoint, Endpoint, Option<i64>), TangleError> {
    let err = || TangleError::Parse(s.to_string());
    let (body, label) = match s.split_once(':') {
        Some((b, l)) => (b, Some(l.trim().parse::<i64>().map_err(|_| err())?)),
        None => (s, None),
    };
    let (x, y) = body.split_once(")-(").ok_or_else(err)?;
    let point = |t: &str| -> Result<Endpoint, TangleError> {
        let t = t.trim().trim_start_matches('(').trim_end_matches(')');
        let (a, b) = t.split_once(',').ok_or_else(err)?;
        let side: u8 = a.trim().parse().map_err(|_| err())?;
        let pos: usize = b.trim().parse().map_err(|_| err())?;
        Ok(Endpoint::new(side, pos))
    };
    Ok((point(x)?, point(y)?, label))
}

/// Splits `[p1,p2,...]` into pair strings.
pub(crate) fn split_pairs(s: &str) -> Result<Vec<&str>, TangleError> {
    let inner = s
        .trim()
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| TangleError::Parse(s.to_string()))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    // pairs are separated by commas that follow a ')' or a label
    let mut parts = Vec::new();
    let mut depth = 0;
    let mut start = 0;
    for (k, ch) in inner.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(inner[start..k].trim());
                start = k + 1;
            }
            _ => {}
        }
    }
    parts.push(inner[start..].trim());
    Ok(parts)
}

impl FromStr for FlatTangle {
    type Err = TangleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts = split_pairs(s)?;
        let mut pairs = Vec::with_capacity(parts.len());
        for p in parts {
            let (x, y, label) = parse_pair(p)?;
            if label.is_some() {
                return Err(TangleError::Parse(p.to_string()));
            }
            pairs.push((x, y));
        }
        FlatTangle::new(pairs.len(), pairs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ep(side: u8, pos: usize) -> Endpoint {
        Endpoint::new(side, pos)
    }

    pub(crate) fn fig_2_2() -> FlatTangle {
        FlatTangle::new(
            3,
            [
                (ep(0, 1), ep(0, 2)),
                (ep(0, 3), ep(1, 2)),
                (ep(1, 3), ep(1, 1)),
            ],
        )
        .unwrap()
    }

    #[test]
    fn boundary_order() {
        let mut pts = vec![ep(1, 1), ep(0, 2), ep(1, 3), ep(0, 1), ep(0, 3), ep(1, 2)];
        pts.sort();
        assert_eq!(
            pts,
            vec![ep(0, 1), ep(0, 2), ep(0, 3), ep(1, 3), ep(1, 2), ep(1, 1)]
        );
    }

    #[test]
    fn construction_and_text_form() {
        let t = fig_2_2();
        assert_eq!(t.to_string(), "[(0,1)-(0,2),(0,3)-(1,2),(1,1)-(1,3)]");
        assert_eq!(t.to_string().parse::<FlatTangle>().unwrap(), t);
        let id = FlatTangle::new(1, [(ep(0, 1), ep(1, 1))]).unwrap();
        assert_eq!(id, FlatTangle::identity(1));
    }

    #[test]
    fn construction_errors() {
        let reuse = FlatTangle::new(
            2,
            [
                (ep(0, 1), ep(0, 2)),
                (ep(0, 1), ep(1, 1)),
                (ep(1, 2), ep(1, 1)),
            ],
        );
        assert!(matches!(reuse, Err(TangleError::InvalidMatching(_))));
        let missing = FlatTangle::new(2, [(ep(0, 1), ep(0, 2))]);
        assert!(matches!(missing, Err(TangleError::InvalidMatching(_))));
        let range = FlatTangle::new(1, [(ep(0, 1), ep(1, 2))]);
        assert!(matches!(range, Err(TangleError::OutOfRange { .. })));
    }

    #[test]
    fn generators() {
        assert_eq!(
            FlatTangle::cup_cap(1, 2).unwrap().pairs(),
            vec![(ep(0, 1), ep(0, 2)), (ep(1, 1), ep(1, 2))]
        );
        assert_eq!(
            FlatTangle::crossing(1, 2).unwrap().pairs(),
            vec![(ep(0, 1), ep(1, 2)), (ep(0, 2), ep(1, 1))]
        );
        assert_eq!(
            FlatTangle::identity(3).pairs(),
            (1..=3).map(|j| (ep(0, j), ep(1, j))).collect::<Vec<_>>()
        );
        assert!(matches!(
            FlatTangle::cup_cap(2, 2),
            Err(TangleError::IndexOutOfRange { .. })
        ));
        assert!(FlatTangle::crossing(0, 3).is_err());
    }

    #[test]
    fn products_of_generators() {
        let e1 = FlatTangle::cup_cap(1, 2).unwrap();
        let v1 = FlatTangle::crossing(1, 2).unwrap();
        let (p, tr) = e1.multiply(&e1).unwrap();
        assert_eq!((p, tr.cycle_count), (e1.clone(), 1));
        let (p, tr) = v1.multiply(&v1).unwrap();
        assert_eq!((p, tr.cycle_count), (FlatTangle::identity(2), 0));

        let e1 = FlatTangle::cup_cap(1, 3).unwrap();
        let v2 = FlatTangle::crossing(2, 3).unwrap();
        let (a, t1) = e1.multiply(&v2).unwrap();
        let (b, t2) = a.multiply(&e1).unwrap();
        assert_eq!(b, e1);
        assert_eq!(t1.cycle_count + t2.cycle_count, 0);
        assert_eq!(t2.arcs.len(), 3);

        assert!(matches!(
            e1.multiply(&FlatTangle::identity(2)),
            Err(TangleError::SizeMismatch(3, 2))
        ));
    }

    #[test]
    fn closure_loop_counts() {
        assert_eq!(fig_2_2().closure_loops(), 1);
        assert_eq!(FlatTangle::identity(4).closure_loops(), 4);
        assert_eq!(FlatTangle::cup_cap(1, 2).unwrap().closure_loops(), 1);
        assert_eq!(FlatTangle::crossing(1, 2).unwrap().closure_loops(), 1);
    }

    #[test]
    fn closure_walks_agree_with_loop_count() {
        for n in 1..=4 {
            for t in FlatTangle::enumerate(n).unwrap() {
                assert_eq!(t.closure_walks().len(), t.closure_loops());
            }
        }
    }

    #[test]
    fn inclusion() {
        assert_eq!(FlatTangle::identity(2).include(), FlatTangle::identity(3));
        assert_eq!(
            FlatTangle::cup_cap(1, 2).unwrap().include(),
            FlatTangle::cup_cap(1, 3).unwrap()
        );
        let big = fig_2_2().include();
        assert_eq!(big.n(), 4);
        assert_eq!(big.partner(ep(0, 4)), ep(1, 4));
        assert_eq!(big.partner(ep(0, 3)), ep(1, 2));
    }

    #[test]
    fn crossing_predicate() {
        assert!(FlatTangle::cup_cap(1, 2).unwrap().is_non_crossing());
        assert!(!FlatTangle::crossing(1, 2).unwrap().is_non_crossing());
        assert!(!fig_2_2().is_non_crossing());
        assert!(FlatTangle::identity(5).is_non_crossing());
    }

    #[test]
    fn parity_predicate() {
        assert!(FlatTangle::cup_cap(1, 2).unwrap().is_parity_tangle());
        assert!(!FlatTangle::crossing(1, 2).unwrap().is_parity_tangle());
        assert!(FlatTangle::identity(4).is_parity_tangle());
    }

    #[test]
    fn enumeration_counts() {
        let counts: Vec<usize> = (1..=5)
            .map(|n| FlatTangle::enumerate(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 3, 15, 105, 945]);
        assert!(matches!(
            FlatTangle::enumerate(7),
            Err(TangleError::TooLarge(7))
        ));
    }

    #[test]
    fn identity_is_neutral() {
        for t in FlatTangle::enumerate(3).unwrap() {
            let id = FlatTangle::identity(3);
            let (l, tl) = id.multiply(&t).unwrap();
            let (r, tr) = t.multiply(&id).unwrap();
            assert_eq!((l, tl.cycle_count), (t.clone(), 0));
            assert_eq!((r, tr.cycle_count), (t, 0));
        }
    }
}
