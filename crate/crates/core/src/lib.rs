//! Exact Diophantine-approximation toolkit over the rational function field
//! `K = Q(t)`.
//!
//! The base geometry is `Y = P^1` with `L = O(1)`, so the places of `K` are
//! the monic irreducible polynomials in `t` together with the place at
//! infinity, and `deg(p)` is the polynomial degree (1 for infinity).  Every
//! quantity is computed in exact rational arithmetic: absolute values are
//! stored as exponents of a fixed constant `0 < c < 1`, so results are
//! independent of `c` until they are rendered multiplicatively.
//!
//! Module map:
//!
//! * [`funfield`] — polynomials, rational functions, places, valuations,
//!   absolute-value exponents, the product formula, and the expression
//!   parser/printer.
//! * [`heights`] — canonical projective points and their heights.
//! * [`completion`] — truncated Laurent/Puiseux expansions at a place,
//!   Newton lifting of algebraic targets, continued fractions at infinity.
//! * [`localmetrics`] — projective distance functions, metrics on `O(1)`,
//!   Weil functions, and empirical equivalence checks.
//! * [`approx`] — approximation sequences, the alpha estimator, and
//!   exhaustive Roth exponent scans.
//! * [`subspace`] — subspace-theorem instance evaluation, bounded-height
//!   point enumeration, and exceptional-locus extraction.
//! * [`positivity`] — volume functions, `beta`, `gamma_eff`, Seshadri
//!   constants, vanishing-sequence construction, and the trichotomy report.
//!
//! The `parallel` feature (on by default) runs the large enumeration scans
//! on a rayon pool; disabling it falls back to the sequential path.  Both
//! paths merge results deterministically and produce identical output.

pub mod approx;
pub mod completion;
pub mod error;
pub mod funfield;
pub mod heights;
pub mod localmetrics;
pub mod positivity;
pub mod subspace;

pub(crate) mod exec;
pub(crate) mod scanfast;

pub use error::{Error, Result};
pub use funfield::{AbsConfig, Coeff, LogMag, Place, Poly, RatFunc};
pub use heights::{HeightValue, ProjPoint};
