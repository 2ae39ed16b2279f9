//! The f-polynomial and the arrow polynomial of a braid closure, computed
//! as the closure trace of the braid's image in the diagram algebra.

use serde::Serialize;

use crate::braid::{rho_a, rho_f, BraidWord};
use crate::rings::{ArrowPoly, LaurentPoly, RingError};

/// Trace of `rho_f(w)`. The unknot evaluates to `-A^2 - A^-2`.
pub fn f_polynomial(w: &BraidWord) -> LaurentPoly {
    rho_f(w).trace_f()
}

/// Trace of `rho_a(w)`.
pub fn arrow_polynomial(w: &BraidWord) -> ArrowPoly {
    rho_a(w)
        .trace_a()
        .expect("closure zigzag sums of valid arrow tangles are even")
}

/// Values that can be renormalized so the unknot maps to `1`.
pub trait Normalize: Sized {
    fn normalized(&self) -> Result<Self, RingError>;
}

impl Normalize for LaurentPoly {
    fn normalized(&self) -> Result<Self, RingError> {
        self.exact_div_by_d()
    }
}

impl Normalize for ArrowPoly {
    fn normalized(&self) -> Result<Self, RingError> {
        self.exact_div_by_d()
    }
}

/// Divides an invariant value once by `d`.
pub fn normalized<P: Normalize>(p: &P) -> Result<P, RingError> {
    p.normalized()
}

/// The JSON result envelope.
#[derive(Debug, Clone, Serialize)]
pub struct InvariantReport {
    pub n: usize,
    pub word: String,
    pub writhe: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub f: Option<LaurentPoly>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub arrow: Option<ArrowPoly>,
    pub normalized: bool,
}

impl InvariantReport {
    pub fn compute(
        w: &BraidWord,
        want_f: bool,
        want_arrow: bool,
        normalize: bool,
    ) -> Result<Self, RingError> {
        let norm_f = |p: LaurentPoly| if normalize { p.normalized() } else { Ok(p) };
        let norm_a = |p: ArrowPoly| if normalize { p.normalized() } else { Ok(p) };
        Ok(Self {
            n: w.n(),
            word: w.letters_text(),
            writhe: w.writhe(),
            f: want_f.then(|| norm_f(f_polynomial(w))).transpose()?,
            arrow: want_arrow
                .then(|| norm_a(arrow_polynomial(w)))
                .transpose()?,
            normalized: normalize,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(s: &str) -> BraidWord {
        BraidWord::parse(s).unwrap()
    }

    #[test]
    fn unknots() {
        for w in ["-n 1", "-n 2 s1", "-n 2 s1'", "-n 2 t1"] {
            let w = word(w);
            assert_eq!(f_polynomial(&w), LaurentPoly::d(), "{w}");
            assert_eq!(arrow_polynomial(&w), LaurentPoly::d().into(), "{w}");
            assert!(normalized(&f_polynomial(&w)).unwrap().is_one());
        }
    }

    #[test]
    fn two_component_unlink() {
        let w = word("-n 2");
        assert_eq!(f_polynomial(&w), LaurentPoly::d_power(2));
        assert_eq!(normalized(&f_polynomial(&w)).unwrap(), LaurentPoly::d());
    }

    #[test]
    fn classical_words_have_no_zigzags() {
        let w = word("-n 3 s1 s2' s1 s2'");
        let a = arrow_polynomial(&w);
        assert!(!a.has_zigzag_variables());
        assert_eq!(a.as_laurent().unwrap(), f_polynomial(&w));
    }

    #[test]
    fn normalize_rejects_units() {
        assert_eq!(
            normalized(&LaurentPoly::a_pow(1)),
            Err(RingError::NotDivisible)
        );
    }
}
