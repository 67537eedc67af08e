//! Lines and conics through points of the plane.

use super::form::{monomials, HomForm};
use super::point::ProjPoint;
use crate::error::{Error, Result};
use crate::gf::{Fe, FieldCtx};
use crate::linalg::Matrix;

pub fn det3(f: &FieldCtx, a: &[Fe], b: &[Fe], c: &[Fe]) -> Fe {
    let minor = |i: usize, j: usize| f.sub(f.mul(b[i], c[j]), f.mul(b[j], c[i]));
    let t0 = f.mul(a[0], minor(1, 2));
    let t1 = f.mul(a[1], minor(0, 2));
    let t2 = f.mul(a[2], minor(0, 1));
    f.add(f.sub(t0, t1), t2)
}

pub fn collinear(f: &FieldCtx, p: &ProjPoint, q: &ProjPoint, r: &ProjPoint) -> bool {
    det3(f, p.coords(), q.coords(), r.coords()).is_zero()
}

/// The line through two distinct plane points, leading coefficient one.
pub fn line_through(f: &FieldCtx, p: &ProjPoint, q: &ProjPoint) -> Result<HomForm> {
    if p == q {
        return Err(Error::Degenerate("line through coincident points".into()));
    }
    let (a, b) = (p.coords(), q.coords());
    let cross = [
        f.sub(f.mul(a[1], b[2]), f.mul(a[2], b[1])),
        f.sub(f.mul(a[2], b[0]), f.mul(a[0], b[2])),
        f.sub(f.mul(a[0], b[1]), f.mul(a[1], b[0])),
    ];
    Ok(HomForm::linear(&cross).normalized(f))
}

/// The conic through five plane points, no three collinear.
pub fn conic_through(f: &FieldCtx, pts: &[ProjPoint]) -> Result<HomForm> {
    if pts.len() != 5 {
        return Err(Error::Degenerate(format!("{} points given for a conic", pts.len())));
    }
    for i in 0..5 {
        for j in i + 1..5 {
            for k in j + 1..5 {
                if collinear(f, &pts[i], &pts[j], &pts[k]) {
                    return Err(Error::Degenerate("three of the five points are collinear".into()));
                }
            }
        }
    }
    let mons = monomials(3, 2);
    let rows = pts
        .iter()
        .map(|p| {
            mons.iter()
                .map(|m| HomForm::monomial(m, f.one()).eval(f, p.coords()))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let ker = Matrix::from_rows(rows).kernel(f);
    if ker.len() != 1 {
        return Err(Error::Degenerate("conic through the points is not unique".into()));
    }
    Ok(HomForm::from_vector(3, 2, &ker[0]).normalized(f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::make_field;

    #[test]
    fn coordinate_line() {
        let f = make_field(5, 1).unwrap();
        let p = ProjPoint::parse(&f, "1:0:0").unwrap();
        let q = ProjPoint::parse(&f, "0:1:0").unwrap();
        assert_eq!(line_through(&f, &p, &q).unwrap(), HomForm::var(&f, 3, 2));
        assert!(collinear(&f, &p, &q, &ProjPoint::parse(&f, "1:1:0").unwrap()));
        assert!(line_through(&f, &p, &p).is_err());
    }

    #[test]
    fn conic_on_parabola() {
        let f = make_field(7, 1).unwrap();
        let pts: Vec<ProjPoint> =
            (1..=5).map(|t| ProjPoint::new(&f, vec![f.one(), f.from_int(t), f.from_int(t * t)]).unwrap()).collect();
        let c = conic_through(&f, &pts).unwrap();
        // y^2 - xz, leading monomial x*z in grlex order
        let want = HomForm::parse_expr(&f, 3, "z", "x0*x2 - x1^2").unwrap();
        assert_eq!(c, want);
        let mut bad = pts.clone();
        bad[4] = ProjPoint::parse(&f, "0:1:0").unwrap();
        bad[3] = ProjPoint::parse(&f, "1:0:0").unwrap();
        bad[2] = ProjPoint::parse(&f, "1:1:0").unwrap();
        assert!(conic_through(&f, &bad).is_err());
    }
}
