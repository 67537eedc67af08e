//! The three surface families, their rational points and anticanonical
//! codes, and the pencil-of-quadrics type classifier.

mod dp4;
mod dp5;
mod dp6;
mod model;
mod pencil;

pub use dp4::{
    crt, dp4_code, enumerate_surface_points, flynn_build, flynn_from_data, flynn_quadrics, from_quadrics,
    parse_quadric_file, FlynnData, QuadricModelDP4, F8_QUADRICS,
};
pub use dp5::{build_dp5, from_orbits as dp5_from_orbits, dp5_code, dp5_embed, PlaneModelDP5};
pub use dp6::{base_conic, build_dp6, from_orbits as dp6_from_orbits, dp6_code, PlaneModelDP6};
pub use model::{ModelFile, SurfaceModel};
pub use pencil::{discriminant_form, polar_matrix, verify_pencil_type};
