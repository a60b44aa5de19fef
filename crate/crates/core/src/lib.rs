//! Numerical laboratory for the 2D Stokes system with mixed
//! Dirichlet/traction boundary conditions on polygonal domains.
//!
//! The crate discretizes the mixed problem with a Taylor-Hood pair,
//! constructs discrete Green functions from mollified point loads, provides a
//! constructive right inverse of the divergence with controlled boundary
//! vanishing, and exposes the quantitative checks (Korn coercivity,
//! Ahlfors-David regularity, logarithmic Green bounds, weak-L2 norms,
//! symmetry, representation formula) as computable reports.

pub mod bogovskii;
pub mod dense;
pub mod error;
pub mod fem;
pub mod geometry;
pub mod green;
pub mod mesh;
pub mod norms;
pub mod quadrature;
pub mod report;
pub mod verify;

pub use error::{Error, Result};
pub use geometry::{BoundaryDecomposition, BoundaryLabel, LocalDomain, PolygonalDomain, Vec2};
pub use mesh::TriangleMesh;
