//! Exact polyhedral and lattice-point computations for the cones of
//! transversal polymatroids.
//!
//! The crate is organized bottom-up:
//!
//! - [`polymatroid`]: presentations, base enumeration, the exchange axiom,
//!   and canonical forms under relabeling.
//! - [`geometry`]: exact integer linear algebra, facet enumeration by the
//!   double description method, extreme rays.
//! - [`lp`]: an exact simplex feasibility test for cone membership, used as
//!   an oracle independent of the facet description.
//! - [`cyclic`]: closed-form facet normals for the cyclic presentation
//!   `{1,2},{2,3},…,{n,1}` and a harness that checks them against
//!   [`geometry::facet_enumeration`].
//! - [`gorenstein`]: lattice points in cone slices, Hilbert functions,
//!   h-vectors and canonical-module generators.
//! - [`normaliz`]: the classic Normaliz matrix input format.
//! - [`classify`]: enumeration of presentations up to symmetry and the
//!   Gorenstein classification driver.
//! - [`cli`]: structured run reports shared by the `polycone` binary.

pub mod classify;
pub mod cli;
pub mod cyclic;
pub mod error;
pub mod geometry;
pub mod gorenstein;
pub mod lp;
pub mod normaliz;
pub mod polymatroid;

pub use error::{Error, Result};
pub use geometry::{ConeDescription, Halfspace, IntVector};
pub use gorenstein::HilbertSummary;
pub use polymatroid::{BaseSet, LatticePoint, Presentation};
