//! Computable core of the link-volume calculation for the prism manifolds
//! `M_n`, the double branched covers of the links `L_n`.
//!
//! The crate is layered bottom-up:
//!
//! * [`exact`]: rationals, integer matrices with Smith normal form, and a
//!   bounded solver for integrality of affine ratios.
//! * [`slopes`]: slopes on a torus, intersection numbers and constrained
//!   slope enumeration.
//! * [`seifert`]: Seifert symbols, normal forms, Euler numbers, first
//!   homology and the two fibrations of `M_n`.
//! * [`orbifold`]: 2-orbifolds, orbifold Euler characteristic,
//!   Riemann–Hurwitz and the horizontal-surface degree equation.
//! * [`montesinos`]: Montesinos links and their double branched covers.
//! * [`braid`]: braid words for twisted torus knots and closure invariants.
//! * [`audit`]: representation counting, complexity bookkeeping and the
//!   end-to-end prism verification pipeline.

pub mod audit;
pub mod braid;
pub mod error;
pub mod exact;
pub mod montesinos;
pub mod orbifold;
pub mod seifert;
pub mod slopes;

pub use audit::{
    complexity, count_representations, degree_bound_for_budget, prism_verify, CoverCertificate,
    GroupPresentation, PrismEntry, PrismReport, RepresentationFilter, Status, VolumeConstant,
};
pub use braid::BraidWord;
pub use error::{Error, Result};
pub use exact::{bounded_diophantine, smith_normal_form, AffineRatio, IntMatrix, Rational, SmithForm};
pub use montesinos::MontesinosLink;
pub use orbifold::{Orbifold2D, SurfaceData};
pub use seifert::{BaseClass, Fiber, SeifertSymbol};
pub use slopes::Slope;
