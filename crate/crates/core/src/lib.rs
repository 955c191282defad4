//! Verification toolkit for the classical ruler-and-compass readings of
//! Fourth-Dynasty pyramid geometry.
//!
//! The crate is organized as five small engines:
//!
//! - [`geom`] — a pure 2D kernel (points, lines, circles, angles) with an
//!   explicit tolerance policy;
//! - [`classical`] — sphere metrics, cube duplication, sphere cubature, the
//!   iterative angle trisector with its convergence trace, and the
//!   consecutive-leg Pythagorean triple generator;
//! - [`dsl`] — a tiny script language for ruler-and-compass constructions,
//!   with assertions and SVG rendering;
//! - [`metrology`] — monument measurement datasets and a relative-error claim
//!   evaluation engine;
//! - [`cli`] — the `pyramidion` command-line front end.
//!
//! Bundled reference data (the Lehner/Petrie/Edwards dataset, the claim
//! registry, and the `.geo` script corpus) lives in [`bundled`].

pub mod bundled;
pub mod classical;
pub mod cli;
pub mod dsl;
pub mod geom;
pub mod metrology;

pub use classical::{SphereMetrics, TrisectionTrace, Triple};
pub use geom::{Angle, Circle, Line, Point, Tolerance};
pub use metrology::{Claim, ClaimResult, Dataset, Measurement, Unit};
