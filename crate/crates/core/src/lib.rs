//! Metric geometry of bounded convex domains.
//!
//! The crate computes the Hilbert metric of the unit ball and of convex
//! polygons, the hyperbolic metric of the disk, ball and half-plane, the
//! Apollonian and Möbius metrics, and the special functions (`μ`, `φ_K`,
//! `c(K)`) that enter the Hölder bound for quasiregular maps of the disk.
//! Every identity and inequality linking these quantities is exposed as a
//! checkable residual or margin, see [`verify`].
//!
//! Planar routines take [`num_complex::Complex64`] points; routines valid
//! in every dimension take coordinate slices.

pub mod error;
pub mod geom;
pub mod hilbert;
pub mod holder;
pub mod hyperbolic;
pub mod polygon;
pub mod related;
pub mod report;
pub mod sample;
pub mod special;
pub mod vecn;
pub mod verify;

pub use error::{GeomError, Result, EPS_BND, EPS_DEG};
pub use hilbert::ConvexDomain;
pub use num_complex::Complex64;
pub use polygon::ConvexPolygon;
pub use report::MetricReport;
