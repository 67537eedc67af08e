//! Degree 6: the plane blown up at a conjugate pair and a conjugate triple
//! on the conic `xz = y^2`, with the line through the pair and the conic
//! contracted.

use crate::codes::LinearCode;
use crate::error::{Error, Result};
use crate::geom::{enumerate_projective, line_through, linear_system, pick_orbits, HomForm, LinearSystemBasis, OrbitSet, ProjPoint};
use crate::gf::{field_of_order, Fe, Field};

#[derive(Clone, Debug)]
pub struct PlaneModelDP6 {
    pub field: Field,
    /// Orbit 0 has size 2 (triple points), orbit 1 size 3 (double points).
    pub orbits: OrbitSet,
    pub line: HomForm,
    pub conic: HomForm,
    pub basis: LinearSystemBasis,
    pub l_rep: ProjPoint,
    pub c_rep: ProjPoint,
    /// Rational points of the plane off the line and the conic.
    pub points: Vec<ProjPoint>,
    pub seed: u64,
}

/// `xz - y^2`.
pub fn base_conic(f: &Field) -> HomForm {
    HomForm::parse_expr(f, 3, "z", "x0*x2 - x1^2").expect("fixed conic parses")
}

pub fn build_dp6(q: u64, seed: u64) -> Result<PlaneModelDP6> {
    if q < 4 {
        return Err(Error::InvalidParameters(format!(
            "degree 6 requires q >= 4: the evaluation map is only injective for q >= 4 (got q = {q})"
        )));
    }
    let field = field_of_order(q)?;
    let orbits = pick_orbits(&field, &[2, 3], seed)?;
    from_orbits(field, orbits)
}

/// Builds the model from a fixed orbit configuration.
pub fn from_orbits(field: Field, orbits: OrbitSet) -> Result<PlaneModelDP6> {
    let q = field.order() as u64;
    let big = &orbits.big;
    let pair = &orbits.orbits[0].points;
    let line_big = line_through(big, &pair[0], &pair[1])?;
    let line = HomForm::from_vector(
        3,
        1,
        &line_big
            .to_vector()
            .iter()
            .map(|&c| orbits.tower.restrict(c).ok_or_else(|| Error::Verification("line through the pair is not rational".into())))
            .collect::<Result<Vec<Fe>>>()?,
    );
    let conic = base_conic(&field);
    let basis = linear_system(&orbits, 6, &[(0, 3), (1, 2)])?;
    if basis.dim() != 7 {
        return Err(Error::Dimension(format!("sextic system has dimension {}, expected 7", basis.dim())));
    }
    let plane = enumerate_projective(&field, 2)?;
    let on = |g: &HomForm, p: &ProjPoint| g.eval(&field, p.coords()).map(|v| v.is_zero());
    let mut points = Vec::new();
    let (mut l_rep, mut c_rep) = (None, None);
    for p in plane {
        let (in_l, in_c) = (on(&line, &p)?, on(&conic, &p)?);
        if in_l && in_c {
            return Err(Error::Verification("line and conic share a rational point".into()));
        }
        if in_l {
            l_rep.get_or_insert(p);
        } else if in_c {
            c_rep.get_or_insert(p);
        } else {
            points.push(p);
        }
    }
    let expected = (q * q - q + 1) as usize;
    if points.len() + 2 != expected {
        return Err(Error::PointCount { expected, got: points.len() + 2 });
    }
    let seed = orbits.seed;
    Ok(PlaneModelDP6 {
        field,
        orbits,
        line,
        conic,
        basis,
        l_rep: l_rep.ok_or_else(|| Error::Verification("line has no rational point".into()))?,
        c_rep: c_rep.ok_or_else(|| Error::Verification("conic has no rational point".into()))?,
        points,
        seed,
    })
}

impl PlaneModelDP6 {
    pub fn q(&self) -> u64 {
        self.field.order() as u64
    }

    /// Rational points of the surface: the plane points plus the two
    /// contracted curves.
    pub fn point_count(&self) -> usize {
        self.points.len() + 2
    }

    /// Evaluation points in column order.
    pub fn columns(&self) -> Vec<ProjPoint> {
        let mut cols = self.points.clone();
        cols.push(self.l_rep.clone());
        cols.push(self.c_rep.clone());
        cols
    }
}

/// Sextic basis evaluated at the plane points, then at the line and conic
/// representatives (each standing in for its contracted point up to a fixed
/// nonzero scalar).
pub fn dp6_code(m: &PlaneModelDP6) -> Result<LinearCode> {
    let f = &m.field;
    let cols = m.columns();
    let rows = m
        .basis
        .forms
        .iter()
        .map(|g| cols.iter().map(|p| g.eval(f, p.coords())).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    if (0..cols.len()).any(|j| rows.iter().all(|r| r[j].is_zero())) {
        return Err(Error::Verification("zero column: the anticanonical system has a base point".into()));
    }
    let code = LinearCode::from_rows(f.clone(), rows, format!("degree-6 surface over GF({}), seed {}", m.q(), m.seed))?;
    if code.dim() != 7 {
        return Err(Error::RankDeficient { expected: 7, got: code.dim() });
    }
    Ok(code)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_q_rejected() {
        assert!(matches!(build_dp6(3, 0), Err(Error::InvalidParameters(_))));
    }

    #[test]
    fn q4_model() {
        let m = build_dp6(4, 0).unwrap();
        assert_eq!(m.basis.dim(), 7);
        assert_eq!(m.point_count(), 13);
        let c = dp6_code(&m).unwrap();
        assert_eq!((c.len(), c.dim()), (13, 7));
    }
}
