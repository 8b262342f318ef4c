//! Exact-arithmetic computation of Ehrhart polynomials, delta-vectors
//! (h*-vectors), and coefficient sign patterns of integral convex polytopes,
//! together with constructors for the catalogue of polytope families whose
//! Ehrhart polynomials have negative coefficients.
//!
//! Everything is exact: rational arithmetic throughout, three independent
//! lattice-point counting strategies that cross-check each other, and a
//! verification suite ([`verify`]) that replays the bundled catalogue of
//! known polynomials end to end.
//!
//! - [`exactmath`]: rationals, polynomials, binomials, interpolation
//! - [`polytope`]: V-polytopes, exact facet enumeration, products
//! - [`counting`]: lattice-point counts of dilates, three strategies
//! - [`ehrhart`]: polynomial recovery, delta transforms, sign patterns,
//!   positive-real-root counts
//! - [`families`]: the catalogue constructors and closed forms
//! - [`verify`]: the end-to-end check suite backing `verify-paper`

pub mod counting;
pub mod ehrhart;
pub mod error;
pub mod exactmath;
pub mod families;
mod linalg;
pub mod polytope;
pub mod report;
pub mod verify;

pub use error::{Error, Result};
