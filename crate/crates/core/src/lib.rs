//! Virtual and arrow Temperley-Lieb algebras, the representations of the
//! virtual braid group into them, and their closure traces. The traces give
//! the f-polynomial and the arrow polynomial of a virtual link presented as
//! a braid closure.
//!
//! ```
//! use vtl::{arrow_polynomial, f_polynomial, BraidWord};
//!
//! let w: BraidWord = "-n 2 s1 s1 t1".parse().unwrap();
//! assert_eq!(f_polynomial(&w).to_string(), "A^-12 - A^-6 - A^-4 - A^-2");
//! assert!(arrow_polynomial(&w).has_zigzag_variables());
//! ```
//!
//! Modules, bottom up:
//!
//! - [`rings`]: `Z[A, A^-1]` and `Z[A, A^-1, z_1, z_2, ...]` with exact
//!   big-integer coefficients.
//! - [`tangle`]: flat virtual tangles and their composition.
//! - [`arrow`]: labelled tangles with cumulated-parity cusp bookkeeping.
//! - [`algebra`]: linear combinations of tangles, traces, embeddings.
//! - [`braid`]: virtual braid words, relations, Markov moves, `rho`.
//! - [`invariants`]: the two polynomials.
//! - [`oracle`]: brute-force state sums used as ground truth.
//! - [`checks`]: property suites shared by the CLI and the tests.
//! - [`cli`]: the `vtl` command.

pub mod algebra;
pub mod arrow;
pub mod braid;
pub mod checks;
pub mod cli;
pub mod invariants;
pub mod oracle;
pub mod rings;
pub mod tangle;

pub use algebra::{AlgebraError, AtlElement, VtlElement};
pub use arrow::{ArrowGenerator, ArrowTangle, CuspConvention};
pub use braid::{BraidError, BraidWord, Direction, Letter, MarkovMove, Relation};
pub use invariants::{arrow_polynomial, f_polynomial, normalized};
pub use rings::{ArrowPoly, LaurentPoly, RingError, ZigzagMonomial};
pub use tangle::{Endpoint, FlatGenerator, FlatTangle, TangleError};
