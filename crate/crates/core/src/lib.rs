//! Exact computations in Coxeter groups, their Iwahori–Hecke algebras, and
//! the affine Weyl group of `GL_n` twisted by a superbasic element.
//!
//! * [`coxeter`]: geometric realization over `Q(2cos(pi/M))`, lengths,
//!   reduced words, roots and inversion sets.
//! * [`hecke`]: `T`-basis multiplication, supports `D(x, y)` and the
//!   recursive bound `D'(x, y)`.
//! * [`affine`]: affine permutations, the twist `beta`, the sums `S_k`,
//!   the linear bound `f` and the finite candidate sets built from it.
//! * [`verify`]: invariant suites over enumerated balls.

pub mod affine;
pub mod cli;
pub mod coxeter;
pub mod error;
pub mod group;
pub mod hecke;
pub mod laurent;
pub mod scalar;
pub mod verify;

pub use error::{Error, Result};
