//! Free modules over tangle bases with the diagrammatic multiplication:
//! [`VtlElement`] over `Z[A, A^-1]` and [`AtlElement`] over the arrow ring.

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::arrow::{ArrowGenerator, ArrowTangle};
use crate::rings::{ArrowPoly, LaurentPoly, Ring};
use crate::tangle::{FlatTangle, TangleError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("strand counts differ: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error(transparent)]
    Tangle(#[from] TangleError),
}

/// A basis of diagrams closed under stacking.
pub trait Basis: Clone + Ord + fmt::Display + fmt::Debug + Send + Sync {
    type Coeff: Ring + Serialize;

    fn strands(&self) -> usize;
    fn identity(n: usize) -> Self;
    /// Stacked product and the scalar factor contributed by closed cycles.
    fn compose(&self, rhs: &Self) -> Result<(Self, Self::Coeff), TangleError>;
    /// Value of the closure trace on a single diagram.
    fn closure_value(&self) -> Result<Self::Coeff, TangleError>;
    fn include(&self) -> Self;
    /// Cup-cap generator at `i`.
    fn cup_cap(i: usize, n: usize) -> Result<Self, TangleError>;
    /// Virtual crossing generator at `i`.
    fn virtual_crossing(i: usize, n: usize) -> Result<Self, TangleError>;
}

impl Basis for FlatTangle {
    type Coeff = LaurentPoly;

    fn strands(&self) -> usize {
        self.n()
    }
    fn identity(n: usize) -> Self {
        FlatTangle::identity(n)
    }
    fn compose(&self, rhs: &Self) -> Result<(Self, LaurentPoly), TangleError> {
        let (p, tr) = self.multiply(rhs)?;
        Ok((p, LaurentPoly::d_power(tr.cycle_count as u32)))
    }
    fn closure_value(&self) -> Result<LaurentPoly, TangleError> {
        Ok(LaurentPoly::d_power(self.closure_loops() as u32))
    }
    fn include(&self) -> Self {
        FlatTangle::include(self)
    }
    fn cup_cap(i: usize, n: usize) -> Result<Self, TangleError> {
        FlatTangle::cup_cap(i, n)
    }
    fn virtual_crossing(i: usize, n: usize) -> Result<Self, TangleError> {
        FlatTangle::crossing(i, n)
    }
}

impl Basis for ArrowTangle {
    type Coeff = ArrowPoly;

    fn strands(&self) -> usize {
        self.n()
    }
    fn identity(n: usize) -> Self {
        ArrowTangle::identity(n)
    }
    fn compose(&self, rhs: &Self) -> Result<(Self, ArrowPoly), TangleError> {
        let (p, tr) = self.multiply(rhs)?;
        Ok((p, ArrowPoly::zigzag_product(&tr.cycle_zigzags)))
    }
    fn closure_value(&self) -> Result<ArrowPoly, TangleError> {
        Ok(ArrowPoly::zigzag_product(&self.closure_zigzags()?))
    }
    fn include(&self) -> Self {
        ArrowTangle::include(self)
    }
    fn cup_cap(i: usize, n: usize) -> Result<Self, TangleError> {
        ArrowTangle::generator(ArrowGenerator::F(i), n)
    }
    fn virtual_crossing(i: usize, n: usize) -> Result<Self, TangleError> {
        ArrowTangle::generator(ArrowGenerator::W(i), n)
    }
}

/// A linear combination of n-diagrams with nonzero coefficients.
#[derive(Clone, PartialEq)]
pub struct Element<B: Basis> {
    n: usize,
    terms: BTreeMap<B, B::Coeff>,
}

/// Element of the virtual Temperley-Lieb algebra over `Z[A, A^-1]`.
pub type VtlElement = Element<FlatTangle>;
/// Element of the arrow Temperley-Lieb algebra over the arrow ring.
pub type AtlElement = Element<ArrowTangle>;

impl<B: Basis> Element<B> {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::basis(B::identity(n))
    }

    pub fn basis(b: B) -> Self {
        Self::term(b, B::Coeff::one())
    }

    pub fn term(b: B, c: B::Coeff) -> Self {
        let mut out = Self::zero(b.strands());
        out.add_term(b, &c);
        out
    }

    /// `c * 1`.
    pub fn scalar(n: usize, c: B::Coeff) -> Self {
        Self::term(B::identity(n), c)
    }

    /// `c * b` for a Laurent scalar.
    pub fn laurent_term(b: B, c: LaurentPoly) -> Self {
        Self::term(b, B::Coeff::from_laurent(c))
    }

    pub fn cup_cap(i: usize, n: usize) -> Result<Self, AlgebraError> {
        Ok(Self::basis(B::cup_cap(i, n)?))
    }

    pub fn virtual_crossing(i: usize, n: usize) -> Result<Self, AlgebraError> {
        Ok(Self::basis(B::virtual_crossing(i, n)?))
    }

    /// Image of a positive classical crossing: `-A^-2 * 1 - A^-4 * U_i`
    /// with `U_i` the cup-cap generator.
    pub fn crossing_pos(i: usize, n: usize) -> Result<Self, AlgebraError> {
        let mut out = Self::laurent_term(B::identity(n), LaurentPoly::monomial(-1, -2));
        out.add_term(
            B::cup_cap(i, n)?,
            &B::Coeff::from_laurent(LaurentPoly::monomial(-1, -4)),
        );
        Ok(out)
    }

    /// Inverse of [`Element::crossing_pos`]: `-A^2 * 1 - A^4 * U_i`.
    pub fn crossing_neg(i: usize, n: usize) -> Result<Self, AlgebraError> {
        let mut out = Self::laurent_term(B::identity(n), LaurentPoly::monomial(-1, 2));
        out.add_term(
            B::cup_cap(i, n)?,
            &B::Coeff::from_laurent(LaurentPoly::monomial(-1, 4)),
        );
        Ok(out)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&B, &B::Coeff)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, b: &B) -> B::Coeff {
        self.terms.get(b).cloned().unwrap_or_else(B::Coeff::zero)
    }

    fn add_term(&mut self, b: B, c: &B::Coeff) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(b) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                o.get_mut().add_assign_ref(c);
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_size(&self, rhs: &Self) -> Result<(), AlgebraError> {
        if self.n != rhs.n {
            Err(AlgebraError::SizeMismatch(self.n, rhs.n))
        } else {
            Ok(())
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        self.check_size(rhs)?;
        let mut out = self.clone();
        for (b, c) in &rhs.terms {
            out.add_term(b.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        self.add(&rhs.scale(&B::Coeff::one().negated()))
    }

    pub fn scale(&self, c: &B::Coeff) -> Self {
        let mut out = Self::zero(self.n);
        for (b, x) in &self.terms {
            out.add_term(b.clone(), &x.mul_ref(c));
        }
        out
    }

    /// Bilinear extension of diagram stacking.
    pub fn mul(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        self.check_size(rhs)?;
        let mut out = Self::zero(self.n);
        for (b1, c1) in &self.terms {
            for (b2, c2) in &rhs.terms {
                let (b, factor) = b1.compose(b2)?;
                let c = c1.mul_ref(c2).mul_ref(&factor);
                out.add_term(b, &c);
            }
        }
        Ok(out)
    }

    /// Left-to-right product of a list of same-size elements; the empty
    /// product is `1`.
    pub fn product<'a>(
        n: usize,
        factors: impl IntoIterator<Item = &'a Self>,
    ) -> Result<Self, AlgebraError>
    where
        B: 'a,
    {
        let mut acc = Self::one(n);
        for f in factors {
            acc = acc.mul(f)?;
        }
        Ok(acc)
    }

    pub fn pow(&self, k: u32) -> Result<Self, AlgebraError> {
        let mut acc = Self::one(self.n);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// The closure trace, extended linearly.
    pub fn trace(&self) -> Result<B::Coeff, AlgebraError> {
        let mut acc = B::Coeff::zero();
        for (b, c) in &self.terms {
            acc.add_assign_ref(&c.mul_ref(&b.closure_value()?));
        }
        Ok(acc)
    }

    /// Termwise inclusion into the algebra on `n + 1` strands.
    pub fn embed(&self) -> Self {
        Self {
            n: self.n + 1,
            terms: self
                .terms
                .iter()
                .map(|(b, c)| (b.include(), c.clone()))
                .collect(),
        }
    }
}

impl VtlElement {
    /// Trace on the virtual Temperley-Lieb algebra.
    pub fn trace_f(&self) -> LaurentPoly {
        self.trace().expect("flat closure cannot fail")
    }
}

impl AtlElement {
    /// Trace on the arrow algebra.
    pub fn trace_a(&self) -> Result<ArrowPoly, AlgebraError> {
        self.trace()
    }

    /// The forgetful map to the virtual Temperley-Lieb algebra: drops labels
    /// and sends every `z_k` to `-A^2 - A^-2`.
    pub fn forget(&self) -> VtlElement {
        let mut out = VtlElement::zero(self.n);
        for (b, c) in &self.terms {
            out.add_term(b.forget(), &c.forget_zigzags());
        }
        out
    }

    /// Arrow generator `F_i`, `w_i`, `t_j`, `t_j^-1` or `1` as an element.
    pub fn generator(kind: ArrowGenerator, n: usize) -> Result<Self, AlgebraError> {
        Ok(Self::basis(ArrowTangle::generator(kind, n)?))
    }
}

impl<B: Basis> fmt::Debug for Element<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element(n={}, {self})", self.n)
    }
}

/// `(c1)*[tangle1] + (c2)*[tangle2] + ...`
impl<B: Basis> fmt::Display for Element<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (b, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*{b}")?;
        }
        Ok(())
    }
}

/// `[{"tangle": "<text form>", "coeff": <ring JSON>}, ...]`
impl<B: Basis> Serialize for Element<B> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry<'a, C> {
            tangle: String,
            coeff: &'a C,
        }
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (b, c) in &self.terms {
            seq.serialize_element(&Entry {
                tangle: b.to_string(),
                coeff: c,
            })?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tangle::Endpoint;

    fn d() -> LaurentPoly {
        LaurentPoly::d()
    }

    #[test]
    fn e_squared_is_d_e() {
        let e1 = VtlElement::cup_cap(1, 2).unwrap();
        assert_eq!(e1.mul(&e1).unwrap(), e1.scale(&d()));
    }

    #[test]
    fn f_times_z1_f() {
        let f1 = AtlElement::cup_cap(1, 2).unwrap();
        let z1f = f1.scale(&ArrowPoly::zigzag_factor(1));
        let expect = f1.scale(&(ArrowPoly::zigzag_factor(1) * ArrowPoly::from(d())));
        assert_eq!(f1.mul(&z1f).unwrap(), expect);
    }

    #[test]
    fn identity_is_neutral() {
        let x = VtlElement::crossing_pos(1, 3)
            .unwrap()
            .add(&VtlElement::virtual_crossing(2, 3).unwrap())
            .unwrap();
        assert_eq!(x.mul(&VtlElement::one(3)).unwrap(), x);
        assert_eq!(VtlElement::one(3).mul(&x).unwrap(), x);
    }

    #[test]
    fn traces() {
        let single_loop = FlatTangle::new(
            3,
            [
                (Endpoint::new(0, 1), Endpoint::new(0, 2)),
                (Endpoint::new(0, 3), Endpoint::new(1, 2)),
                (Endpoint::new(1, 3), Endpoint::new(1, 1)),
            ],
        )
        .unwrap();
        assert_eq!(VtlElement::basis(single_loop).trace_f(), d());
        assert_eq!(VtlElement::one(3).trace_f(), LaurentPoly::d_power(3));
        assert_eq!(VtlElement::crossing_pos(1, 2).unwrap().trace_f(), d());
        assert_eq!(
            AtlElement::one(2).trace_a().unwrap(),
            LaurentPoly::d_power(2).into()
        );
        assert_eq!(
            AtlElement::virtual_crossing(1, 2)
                .unwrap()
                .trace_a()
                .unwrap(),
            d().into()
        );
    }

    #[test]
    fn embedding_scales_trace_by_d() {
        let x = VtlElement::crossing_pos(1, 2).unwrap();
        assert_eq!(x.embed().trace_f(), &x.trace_f() * &d());
        assert_eq!(
            VtlElement::cup_cap(1, 2).unwrap().embed(),
            VtlElement::cup_cap(1, 3).unwrap()
        );
    }

    #[test]
    fn forget_substitutes_d() {
        let z1f = AtlElement::cup_cap(1, 2)
            .unwrap()
            .scale(&ArrowPoly::zigzag_factor(1));
        assert_eq!(z1f.forget(), VtlElement::cup_cap(1, 2).unwrap().scale(&d()));
        assert_eq!(AtlElement::one(3).forget(), VtlElement::one(3));
    }

    #[test]
    fn crossing_inverse() {
        for n in 2..=4 {
            for i in 1..n {
                let p = VtlElement::crossing_pos(i, n).unwrap();
                let q = VtlElement::crossing_neg(i, n).unwrap();
                assert_eq!(p.mul(&q).unwrap(), VtlElement::one(n));
                let p = AtlElement::crossing_pos(i, n).unwrap();
                let q = AtlElement::crossing_neg(i, n).unwrap();
                assert_eq!(q.mul(&p).unwrap(), AtlElement::one(n));
            }
        }
    }

    #[test]
    fn size_mismatch() {
        let a = VtlElement::one(2);
        let b = VtlElement::one(3);
        assert_eq!(a.mul(&b), Err(AlgebraError::SizeMismatch(2, 3)));
        assert_eq!(a.add(&b), Err(AlgebraError::SizeMismatch(2, 3)));
    }

    #[test]
    fn json_shape() {
        let e = VtlElement::cup_cap(1, 2).unwrap().scale(&d());
        assert_eq!(
            serde_json::to_string(&e).unwrap(),
            r#"[{"tangle":"[(0,1)-(0,2),(1,1)-(1,2)]","coeff":[{"e":-2,"c":"-1"},{"e":2,"c":"-1"}]}]"#
        );
    }
}
