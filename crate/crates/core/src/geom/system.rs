//! Linear systems of plane curves with assigned multiple base points.

use serde::{Deserialize, Serialize};

use super::form::{monomials, HomForm};
use super::orbits::OrbitSet;
use super::point::ProjPoint;
use crate::error::{Error, Result};
use crate::gf::{make_field, Fe, FieldCtx};
use crate::linalg::Matrix;

/// Basis of a linear system over GF(q), in reduced row echelon form with
/// respect to the graded-lex monomial order (greatest monomial first).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearSystemBasis {
    pub nvars: usize,
    pub degree: u32,
    pub forms: Vec<HomForm>,
}

impl LinearSystemBasis {
    pub fn dim(&self) -> usize {
        self.forms.len()
    }

    fn matrix(&self) -> Matrix {
        Matrix::from_rows(self.forms.iter().map(|g| g.to_vector()).collect())
    }

    /// Whether `g` lies in the span of the basis.
    pub fn contains(&self, f: &FieldCtx, g: &HomForm) -> bool {
        if g.nvars() != self.nvars || g.degree() != self.degree {
            return false;
        }
        let mut rows = self.matrix().to_rows();
        rows.push(g.to_vector());
        Matrix::from_rows(rows).rank(f) == self.dim()
    }
}

fn binom_mod(f: &FieldCtx, n: u32, k: u32) -> Fe {
    if k > n {
        return Fe::ZERO;
    }
    let mut c: u64 = 1;
    for i in 0..k as u64 {
        c = c * (n as u64 - i) / (i + 1);
    }
    f.from_int((c % f.characteristic() as u64) as i64)
}

/// Linear functionals on the coefficient vector (ordered by
/// [`monomials`]) whose joint vanishing means the form vanishes to order
/// at least `mult` at `p`. They are the coefficients of the Taylor
/// expansion at `p` in the affine chart of its leading coordinate, so
/// small characteristic is handled without formal derivatives.
pub fn taylor_conditions(f: &FieldCtx, degree: u32, p: &ProjPoint, mult: u32) -> Vec<Vec<Fe>> {
    let c = p.coords();
    let n = c.len();
    let lead = c.iter().position(|x| !x.is_zero()).expect("normalized point");
    let local: Vec<usize> = (0..n).filter(|&j| j != lead).collect();
    let mons = monomials(n, degree);
    let mut out = Vec::new();
    for total in 0..mult {
        for a in monomials(local.len(), total) {
            let row = mons
                .iter()
                .map(|e| {
                    let mut v = f.one();
                    for (slot, &j) in local.iter().enumerate() {
                        let (ej, aj) = (e[j] as u32, a[slot] as u32);
                        let b = binom_mod(f, ej, aj);
                        if b.is_zero() {
                            return Fe::ZERO;
                        }
                        v = f.mul(v, f.mul(b, f.pow(c[j], (ej - aj) as i64).unwrap()));
                    }
                    v
                })
                .collect();
            out.push(row);
        }
    }
    out
}

/// Whether `g` vanishes to order at least `mult` at `p`.
pub fn vanishes_to_order(f: &FieldCtx, g: &HomForm, p: &ProjPoint, mult: u32) -> bool {
    let v = g.to_vector();
    taylor_conditions(f, g.degree(), p, mult)
        .iter()
        .all(|row| row.iter().zip(&v).fold(Fe::ZERO, |acc, (&a, &b)| f.add(acc, f.mul(a, b))).is_zero())
}

/// Plane forms of `degree` over GF(q) vanishing to order `mult` along the
/// whole orbit, for each `(orbit index, mult)` condition.
///
/// Conditions are imposed at one representative per orbit in GF(q^L) and
/// Weil-restricted down to the prime field: the unknowns are the prime-field
/// coordinates of each GF(q) coefficient.
pub fn linear_system(set: &OrbitSet, degree: u32, conditions: &[(usize, u32)]) -> Result<LinearSystemBasis> {
    let base = &set.base;
    let big = &set.big;
    let fp = make_field(base.characteristic(), 1)?;
    let mq = base.degree() as usize;
    let nmon = monomials(3, degree).len();
    // embedded power basis of GF(q) over GF(p)
    let gen = set.tower.embed(base.generator());
    let mut basis = vec![big.one()];
    for k in 1..mq {
        basis.push(big.mul(basis[k - 1], gen));
    }

    let mut rows: Vec<Vec<Fe>> = Vec::new();
    for &(idx, mult) in conditions {
        let orbit = set.orbits.get(idx).ok_or_else(|| Error::InvalidParameters(format!("no orbit {idx}")))?;
        if mult == 0 {
            return Err(Error::InvalidParameters("multiplicity must be positive".into()));
        }
        for functional in taylor_conditions(big, degree, &orbit.points[0], mult) {
            let mut block = vec![vec![Fe::ZERO; nmon * mq]; big.degree() as usize];
            for (mon, &l) in functional.iter().enumerate() {
                for (k, &b) in basis.iter().enumerate() {
                    for (r, digit) in big.coeffs(big.mul(l, b)).into_iter().enumerate() {
                        block[r][mon * mq + k] = fp.from_int(digit as i64);
                    }
                }
            }
            rows.extend(block);
        }
    }

    let vectors: Vec<Vec<Fe>> = if rows.is_empty() {
        (0..nmon).map(|i| (0..nmon).map(|j| if i == j { base.one() } else { base.zero() }).collect()).collect()
    } else {
        Matrix::from_rows(rows)
            .kernel(&fp)
            .into_iter()
            .map(|v| {
                (0..nmon)
                    .map(|mon| {
                        let digits: Vec<u32> = v[mon * mq..(mon + 1) * mq].iter().map(|d| d.index()).collect();
                        base.from_coeffs(&digits).expect("residues are in range")
                    })
                    .collect()
            })
            .collect()
    };
    if vectors.is_empty() {
        return Ok(LinearSystemBasis { nvars: 3, degree, forms: Vec::new() });
    }
    let (r, _) = Matrix::from_rows(vectors).rref(base);
    Ok(LinearSystemBasis { nvars: 3, degree, forms: r.to_rows().iter().map(|v| HomForm::from_vector(3, degree, v)).collect() })
}

/// Rewrites the quintic system as `{f_1 h_C, ..., f_5 h_C, h_Q}`: the
/// cubic basis times the conic, completed by the first echelon form of the
/// quintic system independent of those products.
pub fn restructure_quintic_basis(
    f: &FieldCtx,
    quintics: &LinearSystemBasis,
    h_c: &HomForm,
    cubics: &LinearSystemBasis,
) -> Result<Vec<HomForm>> {
    let mut out: Vec<HomForm> = cubics.forms.iter().map(|c| c.mul(f, h_c)).collect();
    for g in &out {
        if !quintics.contains(f, g) {
            return Err(Error::Verification("cubic times conic is not in the quintic system".into()));
        }
    }
    let current_rank = |forms: &[HomForm]| Matrix::from_rows(forms.iter().map(|g| g.to_vector()).collect()).rank(f);
    let r = current_rank(&out);
    if r != out.len() {
        return Err(Error::RankDeficient { expected: out.len(), got: r });
    }
    let h_q = quintics
        .forms
        .iter()
        .find(|g| {
            let mut trial = out.clone();
            trial.push((*g).clone());
            current_rank(&trial) == trial.len()
        })
        .ok_or_else(|| Error::Verification("no quintic completes the basis".into()))?
        .clone();
    let (_, rem) = h_q.divrem(f, h_c)?;
    if rem.is_zero() {
        return Err(Error::Verification("completing quintic contains the conic".into()));
    }
    out.push(h_q);
    if out.len() != quintics.dim() {
        return Err(Error::Dimension(format!("restructured basis has {} forms, system has {}", out.len(), quintics.dim())));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::pick_orbits;
    use crate::gf::field_of_order;

    #[test]
    fn triple_point_in_characteristic_two() {
        // Over GF(2) every formal second partial of x^2 z vanishes, yet the
        // curve only has a double point at (0:0:1).
        let f = field_of_order(2).unwrap();
        let p = ProjPoint::parse(&f, "0:0:1").unwrap();
        let x3 = HomForm::parse_expr(&f, 3, "z", "x0^3").unwrap();
        let x2z = HomForm::parse_expr(&f, 3, "z", "x0^2*x2").unwrap();
        assert!(vanishes_to_order(&f, &x3, &p, 3));
        assert!(!vanishes_to_order(&f, &x2z, &p, 3));
        assert!(vanishes_to_order(&f, &x2z, &p, 2));
    }

    #[test]
    fn dimensions() {
        let f = field_of_order(3).unwrap();
        let s = pick_orbits(&f, &[5], 0).unwrap();
        assert_eq!(linear_system(&s, 5, &[(0, 2)]).unwrap().dim(), 6);
        assert_eq!(linear_system(&s, 3, &[(0, 1)]).unwrap().dim(), 5);
        let f4 = field_of_order(4).unwrap();
        let s6 = pick_orbits(&f4, &[2, 3], 0).unwrap();
        assert_eq!(linear_system(&s6, 6, &[(0, 3), (1, 2)]).unwrap().dim(), 7);
    }
}
