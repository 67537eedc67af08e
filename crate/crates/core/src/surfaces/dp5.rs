//! Degree 5: the plane blown up at a Galois orbit of five points on the
//! conic `xz = y^2`, with the conic contracted.

use super::dp6::base_conic;
use crate::codes::LinearCode;
use crate::error::{Error, Result};
use crate::geom::{enumerate_projective, linear_system, pick_orbits, restructure_quintic_basis, HomForm, OrbitSet, ProjPoint};
use crate::gf::{field_of_order, Field};

#[derive(Clone, Debug)]
pub struct PlaneModelDP5 {
    pub field: Field,
    pub orbits: OrbitSet,
    pub conic: HomForm,
    /// `f_1 h_C, ..., f_5 h_C, h_Q`: cubics through the orbit times the
    /// conic, then one quintic not divisible by the conic.
    pub basis: Vec<HomForm>,
    /// All of P^2(F_q) in canonical order.
    pub plane: Vec<ProjPoint>,
    /// Indices into `plane` of the rational conic points; the first is kept.
    pub conic_indices: Vec<usize>,
    pub seed: u64,
}

pub fn build_dp5(q: u64, seed: u64) -> Result<PlaneModelDP5> {
    if q < 3 {
        return Err(Error::InvalidParameters(format!("degree 5 requires q >= 3 (got q = {q})")));
    }
    let field = field_of_order(q)?;
    let orbits = pick_orbits(&field, &[5], seed)?;
    from_orbits(field, orbits)
}

pub fn from_orbits(field: Field, orbits: OrbitSet) -> Result<PlaneModelDP5> {
    let quintics = linear_system(&orbits, 5, &[(0, 2)])?;
    if quintics.dim() != 6 {
        return Err(Error::Dimension(format!("quintic system has dimension {}, expected 6", quintics.dim())));
    }
    let cubics = linear_system(&orbits, 3, &[(0, 1)])?;
    if cubics.dim() != 5 {
        return Err(Error::Dimension(format!("cubic system has dimension {}, expected 5", cubics.dim())));
    }
    let conic = base_conic(&field);
    let basis = restructure_quintic_basis(&field, &quintics, &conic, &cubics)?;
    let plane = enumerate_projective(&field, 2)?;
    let mut conic_indices = Vec::new();
    for (i, p) in plane.iter().enumerate() {
        if conic.eval(&field, p.coords())?.is_zero() {
            conic_indices.push(i);
        }
    }
    let q = field.order() as usize;
    if conic_indices.len() != q + 1 {
        return Err(Error::PointCount { expected: q + 1, got: conic_indices.len() });
    }
    let seed = orbits.seed;
    Ok(PlaneModelDP5 { field, orbits, conic, basis, plane, conic_indices, seed })
}

impl PlaneModelDP5 {
    pub fn q(&self) -> u64 {
        self.field.order() as u64
    }

    /// The kept conic point `r_1`.
    pub fn kept_conic_point(&self) -> &ProjPoint {
        &self.plane[self.conic_indices[0]]
    }

    /// Plane points whose columns survive puncturing, in column order.
    pub fn columns(&self) -> Vec<ProjPoint> {
        let drop = &self.conic_indices[1..];
        self.plane.iter().enumerate().filter(|(i, _)| !drop.contains(i)).map(|(_, p)| p.clone()).collect()
    }

    pub fn point_count(&self) -> usize {
        self.plane.len() - self.conic_indices.len() + 1
    }

    /// Values of the basis at a plane point.
    pub fn eval(&self, p: &[crate::gf::Fe]) -> Result<Vec<crate::gf::Fe>> {
        self.basis.iter().map(|g| g.eval(&self.field, p)).collect()
    }
}

/// Evaluation of the basis at all of P^2(F_q), punctured at every rational
/// conic point but the first.
pub fn dp5_code(m: &PlaneModelDP5) -> Result<LinearCode> {
    let f = &m.field;
    let rows = m
        .basis
        .iter()
        .map(|g| m.plane.iter().map(|p| g.eval(f, p.coords())).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let full = LinearCode::from_rows(f.clone(), rows, format!("degree-5 surface over GF({}), seed {}", m.q(), m.seed))?;
    let code = full.puncture(&m.conic_indices[1..])?;
    if code.dim() != 6 {
        return Err(Error::RankDeficient { expected: 6, got: code.dim() });
    }
    Ok(code)
}

/// Images of the plane points under the basis: the rational points of the
/// anticanonical model in P^5, in order of first appearance.
pub fn dp5_embed(m: &PlaneModelDP5) -> Result<Vec<ProjPoint>> {
    let mut out: Vec<ProjPoint> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for p in &m.plane {
        let img = ProjPoint::new(&m.field, m.eval(p.coords())?)?;
        if seen.insert(img.clone()) {
            out.push(img);
        }
    }
    let q = m.q() as usize;
    if out.len() != q * q + 1 {
        return Err(Error::PointCount { expected: q * q + 1, got: out.len() });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q3_model() {
        let m = build_dp5(3, 0).unwrap();
        assert_eq!(m.basis.len(), 6);
        for g in &m.basis[..5] {
            assert!(g.divrem(&m.field, &m.conic).unwrap().1.is_zero());
        }
        assert!(!m.basis[5].divrem(&m.field, &m.conic).unwrap().1.is_zero());
        let c = dp5_code(&m).unwrap();
        assert_eq!((c.len(), c.dim()), (10, 6));
        let pts = dp5_embed(&m).unwrap();
        assert_eq!(pts.len(), 10);
    }
}
