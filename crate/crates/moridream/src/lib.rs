//! Exact-arithmetic criteria for the Mori dreamness of blowups of projective
//! 3-space along smooth curves.
//!
//! Everything is decided over the integers and rationals (plus real
//! quadratic surds for cone boundaries); there is no floating point and no
//! tolerance anywhere. The crate is organized around the objects the
//! criteria consume:
//!
//! * [`pell`] — a total decision procedure for `x^2 - D y^2 = N` with
//!   machine-checkable certificates;
//! * [`k3`] — the rank-2 Picard lattice of a quartic surface through a
//!   `(g, d)` curve, its discriminant and cone of curves;
//! * [`blowup`] — rank-2 intersection theory on the blowup itself: divisor
//!   and curve classes, effective/movable/nef cones, flip-step counts;
//! * [`linkage`] — liaison arithmetic, rigidity, chamber structure, and the
//!   hypothesis checkers for the linkage obstruction;
//! * [`hilbert`] — catalogs of Hilbert-scheme components carrying verdicts;
//! * [`classify`] — the verdict engine dispatching over evidence.
//!
//! All operations are pure functions of their arguments and safe for
//! unlimited concurrent use.

pub mod blowup;
pub mod classify;
pub mod curve;
pub mod hilbert;
pub mod k3;
pub mod linkage;
pub mod pell;
pub mod surd;

mod arith;
pub mod citations;

pub use curve::CurveNumerics;
pub use surd::QuadraticSurd;
