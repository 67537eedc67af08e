//! Projective points, homogeneous forms, incidence, Galois orbits and
//! linear systems of plane curves.

mod form;
mod incidence;
mod orbits;
mod point;
mod system;

pub use form::{monomials, HomForm, Monomial};
pub use incidence::{collinear, conic_through, det3, line_through};
pub use orbits::{pick_orbits, Orbit, OrbitSet};
pub use point::{enumerate_projective, ProjPoint, ENUMERATION_GUARD};
pub use system::{linear_system, restructure_quintic_basis, taylor_conditions, vanishes_to_order, LinearSystemBasis};
