//! Exact coefficient rings.
//!
//! [`LaurentPoly`] is `Z[A, A^-1]`, the ring of the f-polynomial. [`ArrowPoly`]
//! is `Z[A, A^-1, z_1, z_2, ...]`, the ring of the arrow polynomial. The loop
//! value `d = -A^2 - A^-2` plays the role of both `z` and `z_0`; neither is
//! ever stored as a variable.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("polynomial is not divisible by -A^2 - A^-2")]
    NotDivisible,
}

/// Minimal ring interface shared by the two coefficient rings, used to make
/// the diagram algebras generic over their scalars.
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_assign_ref(&mut self, rhs: &Self);
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;
    /// Image of a Laurent polynomial under the canonical inclusion.
    fn from_laurent(p: LaurentPoly) -> Self;
}

// ---------------------------------------------------------------------------
// Laurent polynomials
// ---------------------------------------------------------------------------

/// Element of `Z[A, A^-1]` in sparse form: exponents strictly ascending and
/// no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: Vec<(i32, BigInt)>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c * A^e`.
    pub fn monomial(c: impl Into<BigInt>, e: i32) -> Self {
        let c = c.into();
        if c.is_zero() {
            Self::zero()
        } else {
            Self {
                terms: vec![(e, c)],
            }
        }
    }

    /// `A^e`.
    pub fn a_pow(e: i32) -> Self {
        Self::monomial(1, e)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// The loop value `d = -A^2 - A^-2`.
    pub fn d() -> Self {
        Self {
            terms: vec![(-2, BigInt::from(-1)), (2, BigInt::from(-1))],
        }
    }

    /// Builds a polynomial from arbitrary `(exponent, coefficient)` pairs,
    /// merging repeated exponents.
    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (i32, C)>) -> Self {
        let mut acc: BTreeMap<i32, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            *acc.entry(e).or_default() += c.into();
        }
        Self::from_map(acc)
    }

    fn from_map(map: BTreeMap<i32, BigInt>) -> Self {
        Self {
            terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl ExactSizeIterator<Item = (i32, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, e: i32) -> BigInt {
        self.terms
            .binary_search_by_key(&e, |(x, _)| *x)
            .map(|k| self.terms[k].1.clone())
            .unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exponent(&self) -> Option<i32> {
        self.terms.first().map(|(e, _)| *e)
    }

    pub fn max_exponent(&self) -> Option<i32> {
        self.terms.last().map(|(e, _)| *e)
    }

    /// Multiplies by `A^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `(-A^2 - A^-2)^k`.
    pub fn d_power(k: u32) -> Self {
        Self::d().pow(k)
    }

    /// Exact quotient by `d = -A^2 - A^-2`.
    ///
    /// Since `d = -A^-2 (1 + A^4)`, this divides `-A^2 p` by `1 + A^4` with
    /// long division from the lowest exponent upward.
    pub fn exact_div_by_d(&self) -> Result<Self, RingError> {
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let mut rem: BTreeMap<i32, BigInt> = self.terms.iter().map(|(e, c)| (e + 2, -c)).collect();
        let top = self.max_exponent().unwrap() + 2;
        let mut quotient = BTreeMap::new();
        while let Some((&e, _)) = rem.iter().next() {
            if e + 4 > top {
                return Err(RingError::NotDivisible);
            }
            let c = rem.remove(&e).unwrap();
            let next = rem.entry(e + 4).or_default();
            *next -= &c;
            if next.is_zero() {
                rem.remove(&(e + 4));
            }
            quotient.insert(e, c);
        }
        Ok(Self::from_map(quotient))
    }

    fn merge(&self, rhs: &Self, negate_rhs: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &rhs.terms;
        let sign = |c: &BigInt| if negate_rhs { -c } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((b[j].0, sign(&b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_rhs {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(e, c)| (*e, sign(c))));
        Self { terms: out }
    }

    fn product(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut acc: BTreeMap<i32, BigInt> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                *acc.entry(e1 + e2).or_default() += c1 * c2;
            }
        }
        Self::from_map(acc)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

/// Writes `c*A^e` terms in ascending exponent order, e.g. `-A^-2 - A^2`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let unit = abs.is_one();
            match *e {
                0 => write!(f, "{abs}")?,
                1 if unit => write!(f, "A")?,
                1 => write!(f, "{abs}A")?,
                _ if unit => write!(f, "A^{e}")?,
                _ => write!(f, "{abs}A^{e}")?,
            }
        }
        Ok(())
    }
}

impl Zero for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
}

impl One for LaurentPoly {
    fn one() -> Self {
        LaurentPoly::one()
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

impl Ring for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn one() -> Self {
        LaurentPoly::one()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn add_assign_ref(&mut self, rhs: &Self) {
        *self = self.merge(rhs, false);
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self.product(rhs)
    }
    fn negated(&self) -> Self {
        -self
    }
    fn from_laurent(p: LaurentPoly) -> Self {
        p
    }
}

// ---------------------------------------------------------------------------
// Zigzag monomials and arrow polynomials
// ---------------------------------------------------------------------------

/// Product `z_{k_1} z_{k_2} ...` with every `k_i >= 1`, stored as a sorted
/// multiset of indices. The empty monomial is `1`.
///
/// Ordered by length first, then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ZigzagMonomial(Vec<u32>);

impl ZigzagMonomial {
    pub fn one() -> Self {
        Self(Vec::new())
    }

    /// Monomial from a list of indices. Returns `None` if any index is zero,
    /// since `z_0` is never a variable.
    pub fn new(mut indices: Vec<u32>) -> Option<Self> {
        if indices.contains(&0) {
            return None;
        }
        indices.sort_unstable();
        Some(Self(indices))
    }

    pub fn variable(k: u32) -> Option<Self> {
        Self::new(vec![k])
    }

    pub fn indices(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut v = Vec::with_capacity(self.0.len() + rhs.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < rhs.0.len() {
            if self.0[i] <= rhs.0[j] {
                v.push(self.0[i]);
                i += 1;
            } else {
                v.push(rhs.0[j]);
                j += 1;
            }
        }
        v.extend_from_slice(&self.0[i..]);
        v.extend_from_slice(&rhs.0[j..]);
        Self(v)
    }
}

impl Ord for ZigzagMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for ZigzagMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ZigzagMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ZigzagMonomial({self})")
    }
}

impl fmt::Display for ZigzagMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        let mut k = 0;
        while k < self.0.len() {
            let idx = self.0[k];
            let run = self.0[k..].iter().take_while(|&&x| x == idx).count();
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if run == 1 {
                write!(f, "z{idx}")?;
            } else {
                write!(f, "z{idx}^{run}")?;
            }
            k += run;
        }
        Ok(())
    }
}

/// Element of `Z[A, A^-1, z_1, z_2, ...]`: a map from zigzag monomials to
/// nonzero Laurent coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ArrowPoly {
    terms: BTreeMap<ZigzagMonomial, LaurentPoly>,
}

impl ArrowPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        LaurentPoly::one().into()
    }

    /// `p * m`.
    pub fn term(m: ZigzagMonomial, p: LaurentPoly) -> Self {
        let mut terms = BTreeMap::new();
        if !p.is_zero() {
            terms.insert(m, p);
        }
        Self { terms }
    }

    /// `z_k` for `k >= 1`, and `-A^2 - A^-2` for `k = 0`.
    pub fn zigzag_factor(k: u32) -> Self {
        match ZigzagMonomial::variable(k) {
            Some(m) => Self::term(m, LaurentPoly::one()),
            None => LaurentPoly::d().into(),
        }
    }

    /// Product of [`ArrowPoly::zigzag_factor`] over a multiset of zigzag
    /// counts. Zero counts become powers of `d`.
    pub fn zigzag_product(counts: &[u32]) -> Self {
        let zeros = counts.iter().filter(|&&k| k == 0).count() as u32;
        let m = ZigzagMonomial::new(counts.iter().copied().filter(|&k| k > 0).collect())
            .expect("zero counts filtered");
        Self::term(m, LaurentPoly::d_power(zeros))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&ZigzagMonomial, &LaurentPoly)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &ZigzagMonomial) -> LaurentPoly {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// True iff some monomial involves a `z_k` with `k >= 1`.
    pub fn has_zigzag_variables(&self) -> bool {
        self.terms.keys().any(|m| !m.is_one())
    }

    /// The Laurent polynomial this element equals, if it has no `z_k`.
    pub fn as_laurent(&self) -> Option<LaurentPoly> {
        if self.has_zigzag_variables() {
            None
        } else {
            Some(self.coeff(&ZigzagMonomial::one()))
        }
    }

    /// Substitutes `z_k -> -A^2 - A^-2` for every `k >= 1`. This is a ring
    /// homomorphism onto `Z[A, A^-1]`.
    pub fn forget_zigzags(&self) -> LaurentPoly {
        let mut acc = LaurentPoly::zero();
        for (m, p) in &self.terms {
            let t = p * &LaurentPoly::d_power(m.degree() as u32);
            acc = &acc + &t;
        }
        acc
    }

    /// Divides every coefficient by `d`.
    pub fn exact_div_by_d(&self) -> Result<Self, RingError> {
        let mut terms = BTreeMap::new();
        for (m, p) in &self.terms {
            terms.insert(m.clone(), p.exact_div_by_d()?);
        }
        Ok(Self { terms })
    }

    fn add_term(&mut self, m: ZigzagMonomial, p: &LaurentPoly) {
        if p.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(p.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + p;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn product(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (m1, p1) in &self.terms {
            for (m2, p2) in &rhs.terms {
                out.add_term(m1.mul(m2), &(p1 * p2));
            }
        }
        out
    }
}

impl From<LaurentPoly> for ArrowPoly {
    fn from(p: LaurentPoly) -> Self {
        Self::term(ZigzagMonomial::one(), p)
    }
}

impl fmt::Debug for ArrowPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ArrowPoly({self})")
    }
}

/// Writes `(p)*z1*z2` terms in canonical monomial order.
impl fmt::Display for ArrowPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, p)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if m.is_one() {
                if self.terms.len() > 1 && p.len() > 1 {
                    write!(f, "({p})")?;
                } else {
                    write!(f, "{p}")?;
                }
            } else if p.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "({p})*{m}")?;
            }
        }
        Ok(())
    }
}

impl Zero for ArrowPoly {
    fn zero() -> Self {
        ArrowPoly::zero()
    }
    fn is_zero(&self) -> bool {
        ArrowPoly::is_zero(self)
    }
}

impl One for ArrowPoly {
    fn one() -> Self {
        ArrowPoly::one()
    }
}

impl Ring for ArrowPoly {
    fn zero() -> Self {
        ArrowPoly::zero()
    }
    fn one() -> Self {
        ArrowPoly::one()
    }
    fn is_zero(&self) -> bool {
        ArrowPoly::is_zero(self)
    }
    fn add_assign_ref(&mut self, rhs: &Self) {
        for (m, p) in &rhs.terms {
            self.add_term(m.clone(), p);
        }
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self.product(rhs)
    }
    fn negated(&self) -> Self {
        -self
    }
    fn from_laurent(p: LaurentPoly) -> Self {
        p.into()
    }
}

// ---------------------------------------------------------------------------
// Operator impls
// ---------------------------------------------------------------------------

macro_rules! ring_ops {
    ($t:ty) => {
        impl Add<&$t> for &$t {
            type Output = $t;
            fn add(self, rhs: &$t) -> $t {
                let mut out = self.clone();
                Ring::add_assign_ref(&mut out, rhs);
                out
            }
        }
        impl Add for $t {
            type Output = $t;
            fn add(self, rhs: $t) -> $t {
                &self + &rhs
            }
        }
        impl AddAssign<&$t> for $t {
            fn add_assign(&mut self, rhs: &$t) {
                Ring::add_assign_ref(self, rhs);
            }
        }
        impl Sub<&$t> for &$t {
            type Output = $t;
            fn sub(self, rhs: &$t) -> $t {
                self + &(-rhs)
            }
        }
        impl Sub for $t {
            type Output = $t;
            fn sub(self, rhs: $t) -> $t {
                &self - &rhs
            }
        }
        impl Mul<&$t> for &$t {
            type Output = $t;
            fn mul(self, rhs: &$t) -> $t {
                Ring::mul_ref(self, rhs)
            }
        }
        impl Mul for $t {
            type Output = $t;
            fn mul(self, rhs: $t) -> $t {
                Ring::mul_ref(&self, &rhs)
            }
        }
        impl Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                -&self
            }
        }
    };
}

ring_ops!(LaurentPoly);
ring_ops!(ArrowPoly);

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for &ArrowPoly {
    type Output = ArrowPoly;
    fn neg(self) -> ArrowPoly {
        ArrowPoly {
            terms: self.terms.iter().map(|(m, p)| (m.clone(), -p)).collect(),
        }
    }
}

// ---------------------------------------------------------------------------
// JSON encoding
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct LaurentTerm {
    e: i32,
    c: String,
}

#[derive(Serialize, Deserialize)]
struct ArrowTerm {
    m: Vec<u32>,
    p: LaurentPoly,
}

/// `[{"e": exponent, "c": "coefficient"}, ...]` in ascending exponent order.
impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<LaurentTerm> = self
            .terms
            .iter()
            .map(|(e, c)| LaurentTerm {
                e: *e,
                c: c.to_string(),
            })
            .collect();
        terms.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let terms = Vec::<LaurentTerm>::deserialize(d)?;
        let mut parsed = Vec::with_capacity(terms.len());
        for t in terms {
            let c: BigInt = t.c.parse().map_err(D::Error::custom)?;
            parsed.push((t.e, c));
        }
        Ok(Self::from_terms(parsed))
    }
}

/// `[{"m": [k, ...], "p": <LaurentPoly>}, ...]` in canonical monomial order.
impl Serialize for ArrowPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<ArrowTerm> = self
            .terms
            .iter()
            .map(|(m, p)| ArrowTerm {
                m: m.indices().to_vec(),
                p: p.clone(),
            })
            .collect();
        terms.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ArrowPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let terms = Vec::<ArrowTerm>::deserialize(d)?;
        let mut out = ArrowPoly::zero();
        for t in terms {
            let zeros = t.m.iter().filter(|&&k| k == 0).count() as u32;
            let m = ZigzagMonomial::new(t.m.into_iter().filter(|&k| k > 0).collect())
                .expect("zero indices filtered");
            out.add_term(m, &(&t.p * &LaurentPoly::d_power(zeros)));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i32, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn additive_inverse_cancels() {
        assert!((lp(&[(2, 1)]) + lp(&[(2, -1)])).is_zero());
    }

    #[test]
    fn like_terms_merge() {
        assert_eq!(
            lp(&[(1, 1), (-1, 1)]) + lp(&[(1, 1)]),
            lp(&[(1, 2), (-1, 1)])
        );
    }

    #[test]
    fn zigzag_terms_group_by_monomial() {
        let z1 = ZigzagMonomial::variable(1).unwrap();
        let a = ArrowPoly::term(z1.clone(), LaurentPoly::a_pow(1));
        let b = ArrowPoly::term(z1.clone(), LaurentPoly::a_pow(-1));
        assert_eq!(a + b, ArrowPoly::term(z1, lp(&[(1, 1), (-1, 1)])));
    }

    #[test]
    fn inverse_scalar_identity() {
        // -A^-2 * d - A^-4 = 1
        let lhs = &(&LaurentPoly::monomial(-1, -2) * &LaurentPoly::d()) - &LaurentPoly::a_pow(-4);
        assert!(lhs.is_one());
    }

    #[test]
    fn free_commutative_variables() {
        let p = ArrowPoly::zigzag_factor(2) * ArrowPoly::zigzag_factor(1);
        let m = ZigzagMonomial::new(vec![1, 2]).unwrap();
        assert_eq!(p, ArrowPoly::term(m, LaurentPoly::one()));
    }

    #[test]
    fn d_squared() {
        assert_eq!(
            LaurentPoly::d() * LaurentPoly::d(),
            lp(&[(-4, 1), (0, 2), (4, 1)])
        );
    }

    #[test]
    fn d_powers() {
        assert!(LaurentPoly::d_power(0).is_one());
        assert_eq!(LaurentPoly::d_power(1), lp(&[(2, -1), (-2, -1)]));
        assert_eq!(LaurentPoly::d_power(2), lp(&[(4, 1), (0, 2), (-4, 1)]));
        let mut acc = LaurentPoly::one();
        for k in 0..=12 {
            assert_eq!(LaurentPoly::d_power(k), acc);
            acc = &acc * &LaurentPoly::d();
        }
    }

    #[test]
    fn zigzag_factor_values() {
        assert_eq!(ArrowPoly::zigzag_factor(0), LaurentPoly::d().into());
        assert!(ArrowPoly::zigzag_factor(1).has_zigzag_variables());
        assert_eq!(
            ArrowPoly::zigzag_factor(2),
            ArrowPoly::term(ZigzagMonomial::variable(2).unwrap(), LaurentPoly::one())
        );
        assert!(ZigzagMonomial::variable(0).is_none());
    }

    #[test]
    fn division_by_d() {
        assert!(LaurentPoly::d().exact_div_by_d().unwrap().is_one());
        assert_eq!(
            LaurentPoly::d_power(2).exact_div_by_d().unwrap(),
            LaurentPoly::d()
        );
        assert_eq!(
            LaurentPoly::a_pow(1).exact_div_by_d(),
            Err(RingError::NotDivisible)
        );
        assert!(LaurentPoly::zero().exact_div_by_d().unwrap().is_zero());
        assert_eq!(
            lp(&[(0, 1), (4, 1)]).exact_div_by_d().unwrap(),
            lp(&[(2, -1)])
        );
        assert_eq!(
            lp(&[(0, 1), (2, 1)]).exact_div_by_d(),
            Err(RingError::NotDivisible)
        );
    }

    #[test]
    fn display_is_ascending() {
        assert_eq!(LaurentPoly::d().to_string(), "-A^-2 - A^2");
        assert_eq!(lp(&[(1, 2), (-1, 1)]).to_string(), "A^-1 + 2A");
        assert_eq!(LaurentPoly::d_power(2).to_string(), "A^-4 + 2 + A^4");
        let p = ArrowPoly::from(LaurentPoly::d())
            + ArrowPoly::zigzag_factor(1) * ArrowPoly::zigzag_factor(1);
        assert_eq!(p.to_string(), "(-A^-2 - A^2) + z1^2");
    }

    #[test]
    fn monomial_order_is_length_then_lex() {
        let a = ZigzagMonomial::new(vec![5]).unwrap();
        let b = ZigzagMonomial::new(vec![1, 1]).unwrap();
        let c = ZigzagMonomial::new(vec![1, 2]).unwrap();
        assert!(ZigzagMonomial::one() < a && a < b && b < c);
    }

    #[test]
    fn json_shapes() {
        let p = lp(&[(-2, -1), (2, -1)]);
        assert_eq!(
            serde_json::to_string(&p).unwrap(),
            r#"[{"e":-2,"c":"-1"},{"e":2,"c":"-1"}]"#
        );
        let q = ArrowPoly::zigzag_factor(2);
        assert_eq!(
            serde_json::to_string(&q).unwrap(),
            r#"[{"m":[2],"p":[{"e":0,"c":"1"}]}]"#
        );
    }

    #[test]
    fn big_coefficients_do_not_overflow() {
        let p = lp(&[(1, i64::MAX), (0, i64::MAX)]);
        let sq = &p * &p;
        let expect: BigInt = BigInt::from(i64::MAX) * BigInt::from(i64::MAX) * 2;
        assert_eq!(sq.coeff(1), expect);
    }
}
