//! Exact computations around the entropy geometry of algebraic `Z^d` shift
//! systems on zero-dimensional groups.
//!
//! A system here is a closed shift-invariant subgroup of
//! `((Z/qZ)^s)^{Z^d}` cut out by finitely many Laurent-polynomial
//! relations, the archetype being the three-dot system
//! `{x in F_2^{Z^2} : x(n) + x(n+e1) + x(n+e2) = 0}`.
//! The crate computes, with integer/rational arithmetic only:
//!
//! * Newton polytopes of relation polynomials, their primitive outward
//!   normals and lattice edge lengths ([`polytope`]);
//! * the non-expansive direction geometry of a principal system, either a
//!   finite set of directions (`d = 2`) or a rational cone complex
//!   (`d = 3`) ([`polytope`]);
//! * exact solution counts, ranks and projection dimensions of the induced
//!   `F_p`-linear constraint systems on finite windows ([`fpsolve`]);
//! * Haar-measure half-space, directional and lexicographic entropies,
//!   both in closed form and as stabilizing window estimates ([`entropy`]);
//! * machine-checkable mutual-disjointness certificates for families of
//!   such systems ([`disjoint`]).
//!
//! Everything is deterministic and exact; every entropy is a rational
//! multiple of `log p` and is reported as such.

pub mod disjoint;
pub mod entropy;
pub mod fpsolve;
pub mod laurent;
pub mod polytope;
pub mod shiftsys;

pub use laurent::LaurentPoly;
pub use shiftsys::{Presentation, Region};
