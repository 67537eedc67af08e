//! A built surface of any of the three degrees, and its JSON file form.

use serde::{Deserialize, Serialize};

use super::dp4::{dp4_code, flynn_from_data, from_quadrics, QuadricModelDP4};
use super::dp5::{dp5_code, PlaneModelDP5};
use super::dp6::{dp6_code, PlaneModelDP6};
use crate::codes::LinearCode;
use crate::error::{Error, Result};
use crate::geom::{HomForm, OrbitSet};
use crate::gf::{field_with_modulus, Field, Poly};
use crate::picard::{degree4_frobenius, SurfaceType};

#[derive(Clone, Debug)]
pub enum SurfaceModel {
    Dp4(QuadricModelDP4),
    Dp5(PlaneModelDP5),
    Dp6(PlaneModelDP6),
}

impl SurfaceModel {
    pub fn degree(&self) -> u32 {
        match self {
            SurfaceModel::Dp4(_) => 4,
            SurfaceModel::Dp5(_) => 5,
            SurfaceModel::Dp6(_) => 6,
        }
    }

    pub fn field(&self) -> &Field {
        match self {
            SurfaceModel::Dp4(m) => &m.field,
            SurfaceModel::Dp5(m) => &m.field,
            SurfaceModel::Dp6(m) => &m.field,
        }
    }

    pub fn q(&self) -> u64 {
        self.field().order() as u64
    }

    pub fn seed(&self) -> u64 {
        match self {
            SurfaceModel::Dp4(m) => m.seed,
            SurfaceModel::Dp5(m) => m.seed,
            SurfaceModel::Dp6(m) => m.seed,
        }
    }

    pub fn point_count(&self) -> usize {
        match self {
            SurfaceModel::Dp4(m) => m.points.len(),
            SurfaceModel::Dp5(m) => m.point_count(),
            SurfaceModel::Dp6(m) => m.point_count(),
        }
    }

    pub fn surface_type(&self) -> Option<SurfaceType> {
        match self {
            SurfaceModel::Dp4(m) => m.surface_type,
            SurfaceModel::Dp5(_) => Some(SurfaceType::Five7),
            SurfaceModel::Dp6(_) => Some(SurfaceType::Six6),
        }
    }

    /// Trace of Frobenius on the geometric Picard lattice.
    pub fn trace(&self) -> Result<i64> {
        match self {
            SurfaceModel::Dp4(m) => Ok(degree4_frobenius(&m.pencil_type)?.trace()),
            SurfaceModel::Dp5(_) => Ok(SurfaceType::Five7.trace()),
            SurfaceModel::Dp6(_) => Ok(SurfaceType::Six6.trace()),
        }
    }

    pub fn code(&self) -> Result<LinearCode> {
        match self {
            SurfaceModel::Dp4(m) => dp4_code(m),
            SurfaceModel::Dp5(m) => dp5_code(m),
            SurfaceModel::Dp6(m) => dp6_code(m),
        }
    }

    pub fn to_file(&self) -> ModelFile {
        match self {
            SurfaceModel::Dp4(m) => {
                let f = &m.field;
                ModelFile::Dp4 {
                    p: f.characteristic(),
                    modulus: f.modulus().to_vec(),
                    seed: m.seed,
                    pencil_type: m.pencil_type.clone(),
                    qa: m.qa.to_text(f),
                    qb: m.qb.to_text(f),
                    flynn: m.flynn.as_ref().map(|d| FlynnFile {
                        factors: d.factors.iter().map(|g| poly_coeffs(f, g)).collect(),
                        delta: poly_coeffs(f, &d.delta),
                    }),
                }
            }
            SurfaceModel::Dp5(m) => plane_file(5, &m.field, &m.orbits, &m.basis),
            SurfaceModel::Dp6(m) => plane_file(6, &m.field, &m.orbits, &m.basis.forms),
        }
    }

    /// Rebuilds the model and checks it against the stored data.
    pub fn from_file(file: &ModelFile) -> Result<SurfaceModel> {
        match file {
            ModelFile::Dp4 { p, modulus, seed, pencil_type, qa, qb, flynn } => {
                let field = field_with_modulus(*p, modulus)?;
                let qa = HomForm::parse(&field, 5, qa)?;
                let qb = HomForm::parse(&field, 5, qb)?;
                let mut m = match flynn {
                    Some(fl) => {
                        let factors =
                            fl.factors.iter().map(|c| poly_from(&field, c)).collect::<Result<Vec<_>>>()?;
                        flynn_from_data(&field, &factors, &poly_from(&field, &fl.delta)?)?
                    }
                    None => from_quadrics(&field, qa.clone(), qb.clone(), *seed)?,
                };
                if m.qa != qa || m.qb != qb || &m.pencil_type != pencil_type {
                    return Err(Error::Verification("stored quadrics or type disagree with the rebuilt model".into()));
                }
                m.seed = *seed;
                Ok(SurfaceModel::Dp4(m))
            }
            ModelFile::Plane { degree, p, modulus, seed, orbit_params, basis } => {
                let field = field_with_modulus(*p, modulus)?;
                // orbit degrees and the degree of their common field
                let (degrees, common): (&[u32], u32) = match degree {
                    5 => (&[5], 5),
                    6 => (&[2, 3], 6),
                    d => return Err(Error::InvalidParameters(format!("plane model of degree {d}"))),
                };
                let big = crate::gf::make_field(*p, field.degree() * common)?;
                let ts: Vec<_> = orbit_params.iter().map(|c| big.from_coeffs(c)).collect::<Result<Vec<_>>>()?;
                let orbits = OrbitSet::from_parameters(&field, degrees, &ts, *seed)?;
                let stored = basis.iter().map(|s| HomForm::parse(&field, 3, s)).collect::<Result<Vec<_>>>()?;
                let model = if *degree == 5 {
                    SurfaceModel::Dp5(super::dp5::from_orbits(field, orbits)?)
                } else {
                    SurfaceModel::Dp6(super::dp6::from_orbits(field, orbits)?)
                };
                let rebuilt = match &model {
                    SurfaceModel::Dp5(m) => m.basis.clone(),
                    SurfaceModel::Dp6(m) => m.basis.forms.clone(),
                    SurfaceModel::Dp4(_) => unreachable!(),
                };
                if rebuilt != stored {
                    return Err(Error::Verification("stored basis disagrees with the rebuilt model".into()));
                }
                Ok(model)
            }
        }
    }
}

fn poly_coeffs(f: &Field, g: &Poly) -> Vec<Vec<u32>> {
    g.coeffs().iter().map(|&c| f.coeffs(c)).collect()
}

fn poly_from(f: &Field, c: &[Vec<u32>]) -> Result<Poly> {
    Ok(Poly::from_coeffs(c.iter().map(|v| f.from_coeffs(v)).collect::<Result<Vec<_>>>()?))
}

fn plane_file(degree: u32, f: &Field, orbits: &OrbitSet, basis: &[HomForm]) -> ModelFile {
    ModelFile::Plane {
        degree,
        p: f.characteristic(),
        modulus: f.modulus().to_vec(),
        seed: orbits.seed,
        orbit_params: orbits.orbits.iter().map(|o| orbits.big.coeffs(o.t)).collect(),
        basis: basis.iter().map(|g| g.to_text(f)).collect(),
    }
}

/// On-disk model. Field elements are coefficient vectors over the prime
/// field, constant term first; forms use the `HomForm` text format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ModelFile {
    Plane {
        degree: u32,
        p: u32,
        modulus: Vec<u32>,
        seed: u64,
        /// Orbit parameters `t` in the common extension field.
        orbit_params: Vec<Vec<u32>>,
        basis: Vec<String>,
    },
    Dp4 {
        p: u32,
        modulus: Vec<u32>,
        seed: u64,
        pencil_type: String,
        qa: String,
        qb: String,
        flynn: Option<FlynnFile>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlynnFile {
    pub factors: Vec<Vec<Vec<u32>>>,
    pub delta: Vec<Vec<u32>>,
}
