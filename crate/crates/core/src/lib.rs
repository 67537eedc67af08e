//! Anticanonical algebraic-geometry codes on del Pezzo surfaces of degree
//! 4, 5 and 6 with Picard rank one over small finite fields.
//!
//! The crate builds the surfaces (plane blow-up models in degrees 5 and 6,
//! intersections of two quadrics in degree 4), enumerates their rational
//! points, emits generator matrices of the anticanonical codes, computes
//! exact minimum distances and weight distributions, and synthesizes the
//! order-five automorphism of the degree-5 surface as a monomial code
//! automorphism.

pub mod codes;
pub mod cremona;
pub mod error;
pub mod geom;
pub mod gf;
pub mod linalg;
pub mod picard;
pub mod surfaces;

pub use error::{Error, Result};
pub use gf::{Fe, Field, FieldCtx};
