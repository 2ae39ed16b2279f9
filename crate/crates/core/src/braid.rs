//! Virtual braid words, the defining relations of the virtual braid group,
//! virtual Markov moves, and the representations into the diagram algebras.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::algebra::{AlgebraError, AtlElement, Basis, Element, VtlElement};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("generator index {index} out of range for {n} strands")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("relation {relation:?} does not match at position {site}")]
    NoMatch { relation: Relation, site: usize },
    #[error("move not applicable: {0}")]
    NotApplicable(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Letter {
    /// `sigma_i` (positive) or `sigma_i^-1`.
    Sigma { i: usize, positive: bool },
    /// Virtual crossing `tau_i`; an involution.
    Tau(usize),
}

impl Letter {
    pub fn index(&self) -> usize {
        match *self {
            Letter::Sigma { i, .. } | Letter::Tau(i) => i,
        }
    }

    pub fn inverse(&self) -> Self {
        match *self {
            Letter::Sigma { i, positive } => Letter::Sigma {
                i,
                positive: !positive,
            },
            Letter::Tau(i) => Letter::Tau(i),
        }
    }

    pub fn sigma(i: usize) -> Self {
        Letter::Sigma { i, positive: true }
    }

    pub fn sigma_inv(i: usize) -> Self {
        Letter::Sigma { i, positive: false }
    }

    pub fn is_classical(&self) -> bool {
        matches!(self, Letter::Sigma { .. })
    }

    fn with_index(&self, i: usize) -> Self {
        match *self {
            Letter::Sigma { positive, .. } => Letter::Sigma { i, positive },
            Letter::Tau(_) => Letter::Tau(i),
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Letter::Sigma { i, positive: true } => write!(f, "s{i}"),
            Letter::Sigma { i, positive: false } => write!(f, "s{i}'"),
            Letter::Tau(i) => write!(f, "t{i}"),
        }
    }
}

impl FromStr for Letter {
    type Err = BraidError;

    fn from_str(tok: &str) -> Result<Self, Self::Err> {
        let err = || BraidError::Syntax(format!("bad token {tok:?}"));
        let (kind, rest) = tok.split_at(tok.chars().next().ok_or_else(err)?.len_utf8());
        let (digits, inverse) = match rest.strip_suffix('\'') {
            Some(d) => (d, true),
            None => (rest, false),
        };
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err());
        }
        let i: usize = digits.parse().map_err(|_| err())?;
        match (kind, inverse) {
            ("s", _) => Ok(Letter::Sigma {
                i,
                positive: !inverse,
            }),
            ("t", false) => Ok(Letter::Tau(i)),
            ("t", true) => Err(BraidError::Syntax(format!(
                "{tok:?}: virtual crossings are involutions, write t{i}"
            ))),
            _ => Err(err()),
        }
    }
}

/// A word in the generators of the virtual braid group on `n` strands.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    n: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn new(n: usize, letters: Vec<Letter>) -> Result<Self, BraidError> {
        if n == 0 {
            return Err(BraidError::Syntax("strand count must be at least 1".into()));
        }
        if let Some(l) = letters.iter().find(|l| l.index() == 0 || l.index() >= n) {
            return Err(BraidError::IndexOutOfRange {
                index: l.index(),
                n,
            });
        }
        Ok(Self { n, letters })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            n,
            letters: Vec::new(),
        }
    }

    /// Parses space-separated letters on an explicit strand count.
    pub fn from_letters(n: usize, text: &str) -> Result<Self, BraidError> {
        let letters = text
            .split_whitespace()
            .map(str::parse)
            .collect::<Result<Vec<Letter>, _>>()?;
        Self::new(n, letters)
    }

    /// Parses the full grammar `-n <int> <letters...>`.
    pub fn parse(text: &str) -> Result<Self, BraidError> {
        let mut toks = text.split_whitespace();
        let mut n = None;
        let mut letters = Vec::new();
        while let Some(tok) = toks.next() {
            if tok == "-n" {
                let v = toks
                    .next()
                    .ok_or_else(|| BraidError::Syntax("-n needs a value".into()))?;
                n = Some(
                    v.parse::<usize>()
                        .map_err(|_| BraidError::Syntax(format!("bad strand count {v:?}")))?,
                );
            } else {
                letters.push(tok.parse()?);
            }
        }
        let n = n.ok_or_else(|| BraidError::Syntax("missing -n <strands>".into()))?;
        Self::new(n, letters)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Letters only, without the strand count.
    pub fn letters_text(&self) -> String {
        self.letters
            .iter()
            .map(Letter::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Sum of the signs of the classical letters.
    pub fn writhe(&self) -> i64 {
        self.letters
            .iter()
            .map(|l| match l {
                Letter::Sigma { positive: true, .. } => 1,
                Letter::Sigma {
                    positive: false, ..
                } => -1,
                Letter::Tau(_) => 0,
            })
            .sum()
    }

    pub fn classical_crossings(&self) -> usize {
        self.letters.iter().filter(|l| l.is_classical()).count()
    }

    pub fn is_classical(&self) -> bool {
        self.letters.iter().all(Letter::is_classical)
    }

    pub fn inverse(&self) -> Self {
        Self {
            n: self.n,
            letters: self.letters.iter().rev().map(Letter::inverse).collect(),
        }
    }

    pub fn concat(&self, rhs: &Self) -> Result<Self, BraidError> {
        if self.n != rhs.n {
            return Err(BraidError::NotApplicable(format!(
                "strand counts differ: {} vs {}",
                self.n, rhs.n
            )));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&rhs.letters);
        Ok(Self { n: self.n, letters })
    }

    /// Rewrites the letters at `site` with one defining relation. If the
    /// left side matches it is replaced by the right side, otherwise a
    /// matching right side is replaced by the left side.
    pub fn apply_relation(&self, site: usize, relation: Relation) -> Result<Self, BraidError> {
        let no_match = || BraidError::NoMatch { relation, site };
        if site > self.letters.len() {
            return Err(no_match());
        }
        let w = &self.letters;
        let at = |k: usize| w.get(site + k).copied();
        let (consumed, replacement): (usize, Vec<Letter>) = match relation {
            Relation::Cancel(x) => {
                if x.index() == 0 || x.index() >= self.n {
                    return Err(BraidError::IndexOutOfRange {
                        index: x.index(),
                        n: self.n,
                    });
                }
                if at(0) == Some(x) && at(1) == Some(x.inverse()) {
                    (2, vec![])
                } else {
                    (0, vec![x, x.inverse()])
                }
            }
            Relation::FarCommute => match (at(0), at(1)) {
                (Some(a), Some(b)) if a.index().abs_diff(b.index()) >= 2 => (2, vec![b, a]),
                _ => return Err(no_match()),
            },
            Relation::SigmaBraid | Relation::TauBraid => match (at(0), at(1), at(2)) {
                (Some(a), Some(b), Some(c))
                    if a == c
                        && a.index().abs_diff(b.index()) == 1
                        && same_kind(a, b)
                        && matches!(
                            (relation, a),
                            (Relation::SigmaBraid, Letter::Sigma { .. })
                                | (Relation::TauBraid, Letter::Tau(_))
                        ) =>
                {
                    (3, vec![b, a, b])
                }
                _ => return Err(no_match()),
            },
            Relation::Mixed => match (at(0), at(1), at(2)) {
                // tau_i tau_j sigma_i -> sigma_j tau_i tau_j
                (Some(Letter::Tau(i)), Some(Letter::Tau(j)), Some(s @ Letter::Sigma { .. }))
                    if s.index() == i && i.abs_diff(j) == 1 =>
                {
                    (3, vec![s.with_index(j), Letter::Tau(i), Letter::Tau(j)])
                }
                // sigma_j tau_i tau_j -> tau_i tau_j sigma_i
                (Some(s @ Letter::Sigma { .. }), Some(Letter::Tau(i)), Some(Letter::Tau(j)))
                    if s.index() == j && i.abs_diff(j) == 1 =>
                {
                    (3, vec![Letter::Tau(i), Letter::Tau(j), s.with_index(i)])
                }
                _ => return Err(no_match()),
            },
        };
        let mut letters = w[..site].to_vec();
        letters.extend(replacement);
        letters.extend_from_slice(&w[site + consumed..]);
        Ok(Self { n: self.n, letters })
    }

    /// Applies a virtual Markov move.
    ///
    /// `Up` stabilization-type moves append the move's suffix and add a
    /// strand; `Down` removes that suffix, provided the rest of the word
    /// lives on one strand fewer. Conjugation `Up` by `a` gives `a w a^-1`
    /// and `Down` gives `a^-1 w a`.
    pub fn markov_move(&self, mv: &MarkovMove, dir: Direction) -> Result<Self, BraidError> {
        if let MarkovMove::Conjugate(a) = mv {
            let a = BraidWord::new(self.n, a.clone())
                .map_err(|e| BraidError::NotApplicable(e.to_string()))?;
            let (l, r) = match dir {
                Direction::Up => (a.clone(), a.inverse()),
                Direction::Down => (a.inverse(), a),
            };
            return l.concat(self)?.concat(&r);
        }
        match dir {
            Direction::Up => {
                let n = self.n;
                let suffix = mv.suffix(n).ok_or_else(|| {
                    BraidError::NotApplicable(format!("{mv:?} needs at least 2 strands"))
                })?;
                let mut letters = self.letters.clone();
                letters.extend(suffix);
                Ok(Self { n: n + 1, letters })
            }
            Direction::Down => {
                let na = |m: &str| BraidError::NotApplicable(m.to_string());
                if self.n < 2 {
                    return Err(na("cannot remove the last strand"));
                }
                let n = self.n - 1;
                let suffix = mv.suffix(n).ok_or_else(|| na("too few strands"))?;
                if !self.letters.ends_with(&suffix) {
                    return Err(na("word does not end with the move's suffix"));
                }
                let prefix = &self.letters[..self.letters.len() - suffix.len()];
                if prefix.iter().any(|l| l.index() >= n) {
                    return Err(na("prefix uses the last strand"));
                }
                Ok(Self {
                    n,
                    letters: prefix.to_vec(),
                })
            }
        }
    }
}

fn same_kind(a: Letter, b: Letter) -> bool {
    match (a, b) {
        (Letter::Sigma { positive: p, .. }, Letter::Sigma { positive: q, .. }) => p == q,
        (Letter::Tau(_), Letter::Tau(_)) => true,
        _ => false,
    }
}

/// `-n <strands> <letters>`
impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "-n {}", self.n)?;
        for l in &self.letters {
            write!(f, " {l}")?;
        }
        Ok(())
    }
}

impl FromStr for BraidWord {
    type Err = BraidError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s)
    }
}

/// Defining relations of the virtual braid group, plus free cancellation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    /// `x x^-1 = 1`; for `x = tau_i` this is `tau_i^2 = 1`.
    Cancel(Letter),
    /// `x y = y x` for letters at distance at least 2.
    FarCommute,
    /// `s_i s_j s_i = s_j s_i s_j`, `|i-j| = 1`, all letters of one sign.
    SigmaBraid,
    /// `t_i t_j t_i = t_j t_i t_j`, `|i-j| = 1`.
    TauBraid,
    /// `t_i t_j s_i = s_j t_i t_j`, `|i-j| = 1`, either sign of `s`.
    Mixed,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum MarkovMove {
    Conjugate(Vec<Letter>),
    /// Append `sigma_n`.
    StabPos,
    /// Append `sigma_n^-1`.
    StabNeg,
    /// Append `tau_n`.
    StabTau,
    /// Append `sigma_n^-1 tau_{n-1} sigma_n`.
    MoveC,
    /// Append `tau_n tau_{n-1} sigma_{n-1} tau_n sigma_{n-1}^-1 tau_{n-1} tau_n`.
    MoveD,
}

impl MarkovMove {
    /// Letters appended to a word on `n` strands.
    fn suffix(&self, n: usize) -> Option<Vec<Letter>> {
        use Letter::Tau;
        let s = Letter::sigma;
        let si = Letter::sigma_inv;
        match self {
            MarkovMove::Conjugate(_) => None,
            MarkovMove::StabPos => Some(vec![s(n)]),
            MarkovMove::StabNeg => Some(vec![si(n)]),
            MarkovMove::StabTau => Some(vec![Tau(n)]),
            MarkovMove::MoveC if n >= 2 => Some(vec![si(n), Tau(n - 1), s(n)]),
            MarkovMove::MoveD if n >= 2 => Some(vec![
                Tau(n),
                Tau(n - 1),
                s(n - 1),
                Tau(n),
                si(n - 1),
                Tau(n - 1),
                Tau(n),
            ]),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Up,
    Down,
}

/// One recorded step of [`random_equivalent`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MoveRecord {
    Relation { site: usize, relation: Relation },
    Markov { mv: MarkovMove, dir: Direction },
}

impl fmt::Display for MoveRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MoveRecord::Relation { site, relation } => write!(f, "relation {relation:?} at {site}"),
            MoveRecord::Markov {
                mv: MarkovMove::Conjugate(a),
                dir,
            } => {
                let text: Vec<String> = a.iter().map(Letter::to_string).collect();
                write!(f, "conjugate {dir:?} by [{}]", text.join(" "))
            }
            MoveRecord::Markov { mv, dir } => write!(f, "markov {mv:?} {dir:?}"),
        }
    }
}

impl MoveRecord {
    pub fn apply(&self, w: &BraidWord) -> Result<BraidWord, BraidError> {
        match self {
            MoveRecord::Relation { site, relation } => w.apply_relation(*site, *relation),
            MoveRecord::Markov { mv, dir } => w.markov_move(mv, *dir),
        }
    }
}

/// Replays a move log.
pub fn replay(w: &BraidWord, log: &[MoveRecord]) -> Result<BraidWord, BraidError> {
    log.iter().try_fold(w.clone(), |acc, m| m.apply(&acc))
}

/// Applies `steps` random relations and Markov moves, chosen from a
/// ChaCha stream seeded with `seed`. The closure of the result is
/// equivalent to the closure of `w`; the log replays it exactly.
pub fn random_equivalent(w: &BraidWord, seed: u64, steps: usize) -> (BraidWord, Vec<MoveRecord>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cur = w.clone();
    let mut log = Vec::with_capacity(steps);
    for _ in 0..steps {
        let candidates = candidate_moves(&cur, &mut rng);
        let (next, record) = candidates
            .choose(&mut rng)
            .cloned()
            .expect("conjugation is always available");
        cur = next;
        log.push(record);
    }
    (cur, log)
}

fn random_letter(n: usize, rng: &mut impl Rng) -> Letter {
    let i = rng.gen_range(1..n);
    match rng.gen_range(0..3) {
        0 => Letter::sigma(i),
        1 => Letter::sigma_inv(i),
        _ => Letter::Tau(i),
    }
}

/// Every applicable move from a small random menu.
fn candidate_moves(w: &BraidWord, rng: &mut impl Rng) -> Vec<(BraidWord, MoveRecord)> {
    let mut out = Vec::new();
    let mut push = |rec: MoveRecord| {
        if let Ok(next) = rec.apply(w) {
            out.push((next, rec));
        }
    };
    for site in 0..w.len() {
        for relation in [
            Relation::FarCommute,
            Relation::SigmaBraid,
            Relation::TauBraid,
            Relation::Mixed,
        ] {
            push(MoveRecord::Relation { site, relation });
        }
        let x = w.letters[site];
        if w.letters.get(site + 1) == Some(&x.inverse()) {
            push(MoveRecord::Relation {
                site,
                relation: Relation::Cancel(x),
            });
        }
    }
    if w.n >= 2 {
        let site = rng.gen_range(0..=w.len());
        push(MoveRecord::Relation {
            site,
            relation: Relation::Cancel(random_letter(w.n, rng)),
        });
        let conj = vec![random_letter(w.n, rng)];
        push(MoveRecord::Markov {
            mv: MarkovMove::Conjugate(conj),
            dir: Direction::Up,
        });
    } else {
        push(MoveRecord::Markov {
            mv: MarkovMove::Conjugate(vec![]),
            dir: Direction::Up,
        });
    }
    for mv in [
        MarkovMove::StabPos,
        MarkovMove::StabNeg,
        MarkovMove::StabTau,
        MarkovMove::MoveC,
        MarkovMove::MoveD,
    ] {
        for dir in [Direction::Up, Direction::Down] {
            push(MoveRecord::Markov {
                mv: mv.clone(),
                dir,
            });
        }
    }
    out
}

/// Random word with letters drawn uniformly from `sigma^+-1` and `tau`.
pub fn random_word(n: usize, len: usize, rng: &mut impl Rng) -> BraidWord {
    let letters = if n >= 2 {
        (0..len).map(|_| random_letter(n, rng)).collect()
    } else {
        Vec::new()
    };
    BraidWord { n, letters }
}

/// Random word without virtual crossings.
pub fn random_classical_word(n: usize, len: usize, rng: &mut impl Rng) -> BraidWord {
    let letters = if n >= 2 {
        (0..len)
            .map(|_| Letter::Sigma {
                i: rng.gen_range(1..n),
                positive: rng.gen_bool(0.5),
            })
            .collect()
    } else {
        Vec::new()
    };
    BraidWord { n, letters }
}

/// Image of a single letter: `sigma_i -> -A^-2 1 - A^-4 U_i`,
/// `sigma_i^-1 -> -A^2 1 - A^4 U_i`, `tau_i -> virtual crossing`.
pub fn letter_image<B: Basis>(l: Letter, n: usize) -> Result<Element<B>, AlgebraError> {
    match l {
        Letter::Sigma { i, positive: true } => Element::crossing_pos(i, n),
        Letter::Sigma { i, positive: false } => Element::crossing_neg(i, n),
        Letter::Tau(i) => Element::virtual_crossing(i, n),
    }
}

/// Left fold of the letter images.
pub fn rho<B: Basis>(w: &BraidWord) -> Element<B> {
    let mut acc = Element::<B>::one(w.n);
    for &l in &w.letters {
        let g = letter_image::<B>(l, w.n).expect("letters are in range");
        acc = acc.mul(&g).expect("same strand count");
    }
    acc
}

/// Representation into the virtual Temperley-Lieb algebra.
pub fn rho_f(w: &BraidWord) -> VtlElement {
    rho(w)
}

/// Representation into the arrow Temperley-Lieb algebra.
pub fn rho_a(w: &BraidWord) -> AtlElement {
    rho(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::LaurentPoly;
    use crate::tangle::FlatTangle;

    fn word(s: &str) -> BraidWord {
        BraidWord::parse(s).unwrap()
    }

    #[test]
    fn parsing() {
        let w = word("-n 2 s1 s1 s1");
        assert_eq!(w.n(), 2);
        assert_eq!(w.letters(), &[Letter::sigma(1); 3]);
        let w = word("-n 3 t1 s2' t2");
        assert_eq!(
            w.letters(),
            &[Letter::Tau(1), Letter::sigma_inv(2), Letter::Tau(2)]
        );
        assert_eq!(w.to_string(), "-n 3 t1 s2' t2");
        assert_eq!(
            BraidWord::parse("-n 2 s5"),
            Err(BraidError::IndexOutOfRange { index: 5, n: 2 })
        );
        assert!(matches!(
            BraidWord::parse("-n 2 t1'"),
            Err(BraidError::Syntax(_))
        ));
        assert!(matches!(
            BraidWord::parse("-n 2 x1"),
            Err(BraidError::Syntax(_))
        ));
        assert!(matches!(BraidWord::parse("s1"), Err(BraidError::Syntax(_))));
        assert!(matches!(
            BraidWord::parse("-n 2 s"),
            Err(BraidError::Syntax(_))
        ));
        assert!(matches!(
            BraidWord::parse("-n 2 s0"),
            Err(BraidError::IndexOutOfRange { .. })
        ));
        assert_eq!(word("-n 1").len(), 0);
    }

    #[test]
    fn writhe() {
        assert_eq!(word("-n 2 s1 s1 s1").writhe(), 3);
        assert_eq!(word("-n 2 t1").writhe(), 0);
        assert_eq!(word("-n 2 s1 s1'").writhe(), 0);
    }

    #[test]
    fn relations() {
        let w = word("-n 2 t1 t1");
        let r = w
            .apply_relation(0, Relation::Cancel(Letter::Tau(1)))
            .unwrap();
        assert!(r.is_empty());
        let back = r
            .apply_relation(0, Relation::Cancel(Letter::Tau(1)))
            .unwrap();
        assert_eq!(back, w);

        let w = word("-n 3 s1 s2 s1");
        assert_eq!(
            w.apply_relation(0, Relation::SigmaBraid).unwrap(),
            word("-n 3 s2 s1 s2")
        );
        let w = word("-n 3 t1 t2 s1");
        let r = w.apply_relation(0, Relation::Mixed).unwrap();
        assert_eq!(r, word("-n 3 s2 t1 t2"));
        assert_eq!(r.apply_relation(0, Relation::Mixed).unwrap(), w);

        let w = word("-n 4 s1 t3");
        assert_eq!(
            w.apply_relation(0, Relation::FarCommute).unwrap(),
            word("-n 4 t3 s1")
        );
        assert!(matches!(
            word("-n 3 s1 s2").apply_relation(0, Relation::FarCommute),
            Err(BraidError::NoMatch { .. })
        ));
        assert!(word("-n 3 s1 s2' s1")
            .apply_relation(0, Relation::SigmaBraid)
            .is_err());
    }

    #[test]
    fn markov_moves() {
        let w = word("-n 2 s1");
        let up = w.markov_move(&MarkovMove::StabPos, Direction::Up).unwrap();
        assert_eq!(up, word("-n 3 s1 s2"));
        assert_eq!(
            up.markov_move(&MarkovMove::StabPos, Direction::Down)
                .unwrap(),
            w
        );

        let c = w.markov_move(&MarkovMove::MoveC, Direction::Up).unwrap();
        assert_eq!(c, word("-n 3 s1 s2' t1 s2"));
        assert_eq!(
            c.markov_move(&MarkovMove::MoveC, Direction::Down).unwrap(),
            w
        );

        let d = w.markov_move(&MarkovMove::MoveD, Direction::Up).unwrap();
        assert_eq!(d, word("-n 3 s1 t2 t1 s1 t2 s1' t1 t2"));

        let conj = w
            .markov_move(&MarkovMove::Conjugate(vec![Letter::Tau(1)]), Direction::Up)
            .unwrap();
        assert_eq!(conj, word("-n 2 t1 s1 t1"));

        assert!(word("-n 3 s2 s2")
            .markov_move(&MarkovMove::StabPos, Direction::Down)
            .is_err());
        assert!(word("-n 1")
            .markov_move(&MarkovMove::MoveC, Direction::Up)
            .is_err());
    }

    #[test]
    fn representation_images() {
        let s1 = rho_f(&word("-n 2 s1"));
        let mut expect =
            VtlElement::laurent_term(FlatTangle::identity(2), LaurentPoly::monomial(-1, -2));
        expect = expect
            .add(&VtlElement::laurent_term(
                FlatTangle::cup_cap(1, 2).unwrap(),
                LaurentPoly::monomial(-1, -4),
            ))
            .unwrap();
        assert_eq!(s1, expect);
        assert_eq!(
            rho_f(&word("-n 2 t1")),
            VtlElement::virtual_crossing(1, 2).unwrap()
        );
        assert_eq!(rho_f(&word("-n 2 s1 s1'")), VtlElement::one(2));
        assert_eq!(rho_a(&word("-n 2 s1' s1")), AtlElement::one(2));
        assert_eq!(
            rho_a(&word("-n 2 t1")),
            AtlElement::virtual_crossing(1, 2).unwrap()
        );
    }

    #[test]
    fn random_equivalent_is_reproducible() {
        let w = word("-n 3 s1 t2 s2'");
        assert_eq!(random_equivalent(&w, 5, 0).0, w);
        let (a, log) = random_equivalent(&w, 11, 6);
        let (b, _) = random_equivalent(&w, 11, 6);
        assert_eq!(a, b);
        assert_eq!(log.len(), 6);
        assert_eq!(replay(&w, &log).unwrap(), a);
    }
}
