//! Exact computation of Conway and Alexander polynomials, linking pairings in
//! the infinite cyclic cover, and derived-link invariants from Seifert data.
//!
//! Input is the block Seifert data (g, m, M, V, A) of an (m+1)-component
//! link: the Seifert form M on a symplectic basis of the cut surface, the
//! linking rows V of the banded components with that basis, and the Seifert
//! form A on the band curves. From these the crate computes, with exact
//! integer and rational arithmetic throughout:
//!
//! - potential functions and Conway polynomials of the link and of the knot
//!   obtained by cutting the bands ([`invariants::conway_link`],
//!   [`invariants::conway_knot`]);
//! - the matrix of linking pairings in the infinite cyclic cover and its
//!   Taylor expansion around t = 1 ([`invariants::pairing_matrix`],
//!   [`invariants::taylor_pairing`]);
//! - derived classes, iterated derivatives, and the alpha/beta invariants
//!   ([`derivation`]);
//! - verified identities: the factorization of the link's Conway polynomial,
//!   the Taylor/alpha correspondence, the series expansion of the inverse
//!   Alexander matrix, leading-coefficient statements, the beta reduction
//!   law, and Cochran's expansion of the eta function.
//!
//! All values are immutable and all functions are pure; everything can be
//! shared freely across threads.

pub mod arith;
pub mod cli;
pub mod derivation;
pub mod document;
pub mod invariants;
pub mod report;
pub mod seifert;

#[cfg(test)]
pub(crate) mod testkit;

pub use arith::{
    ConwayPoly, ExactDiv, Int, LaurentPoly, Matrix, Rat, RationalFunction, Ring, TruncatedSeries,
};
pub use report::{Check, VerificationReport, Witness};
pub use seifert::{BasisClass, SeifertData, ValidationError, Violation};
