//! Exact arithmetic: rationals, integer matrices and Smith normal form, and
//! integrality search for affine ratios over a finite domain.

mod diophantine;
mod matrix;
mod rational;

pub use diophantine::{bounded_diophantine, AffineRatio};
pub use matrix::{smith_normal_form, IntMatrix, SmithForm};
pub use rational::{rational_arith, ArithOp, Rational};
