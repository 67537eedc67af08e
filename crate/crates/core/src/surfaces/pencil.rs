//! Frobenius type of a pencil of quadrics in P^4 from its singular members.
//!
//! The five singular members are the roots of a binary quintic: the
//! determinant of `t Sa - Sb` in odd characteristic, the half-determinant
//! `Q_t(v(t))` (with `v` the Pfaffian radical vector of the polar form) in
//! characteristic two. Each irreducible factor of degree `d` gives the
//! `d` in `d[e]`; `e` records whether the two rulings of the rank-4 cone
//! over the residue field are defined there: by the square class of the
//! discriminant in odd characteristic, by the Arf invariant in
//! characteristic two.

use crate::error::{Error, Result};
use crate::geom::HomForm;
use crate::gf::{extension, roots, factor_poly, Fe, Field, FieldCtx, Poly};
use crate::linalg::Matrix;

/// Coefficient of `x_i x_j` (`i <= j`) of a quadratic form.
fn coeff(q: &HomForm, i: usize, j: usize) -> Fe {
    let mut e = vec![0u8; q.nvars()];
    e[i] += 1;
    e[j] += 1;
    q.coeff(&e)
}

/// Polar matrix `B(x, y) = Q(x + y) - Q(x) - Q(y)`.
pub fn polar_matrix(f: &FieldCtx, q: &HomForm) -> Matrix {
    let n = q.nvars();
    let mut m = Matrix::zeros(n, n);
    for i in 0..n {
        m[(i, i)] = f.add(coeff(q, i, i), coeff(q, i, i));
        for j in i + 1..n {
            m[(i, j)] = coeff(q, i, j);
            m[(j, i)] = coeff(q, i, j);
        }
    }
    m
}

fn check_quadric(q: &HomForm) -> Result<()> {
    if q.nvars() != 5 || q.degree() != 2 {
        return Err(Error::InvalidParameters(format!("expected a quadric in 5 variables, got degree {} in {}", q.degree(), q.nvars())));
    }
    Ok(())
}

/// `t a - b` entrywise as polynomials in `t`.
fn pencil_entries(f: &FieldCtx, a: &Matrix, b: &Matrix) -> Vec<Vec<Poly>> {
    (0..a.rows())
        .map(|i| (0..a.cols()).map(|j| Poly::from_coeffs(vec![f.neg(b[(i, j)]), a[(i, j)]])).collect())
        .collect()
}

fn poly_det(f: &FieldCtx, m: &[Vec<Poly>]) -> Poly {
    // Laplace expansion along the first row; n = 5 here.
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = Poly::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Poly>> =
            m[1..].iter().map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, p)| p.clone()).collect()).collect();
        let term = m[0][j].mul(f, &poly_det(f, &minor));
        acc = if j % 2 == 0 { acc.add(f, &term) } else { acc.sub(f, &term) };
    }
    acc
}

fn pfaffian4(f: &FieldCtx, m: &[Vec<Poly>], idx: &[usize]) -> Poly {
    let e = |a: usize, b: usize| &m[idx[a]][idx[b]];
    e(0, 1).mul(f, e(2, 3)).sub(f, &e(0, 2).mul(f, e(1, 3))).add(f, &e(0, 3).mul(f, e(1, 2)))
}

/// The binary quintic vanishing at the singular members, dehomogenized at
/// `mu = 1`; a degree below five means roots at `t = infinity`.
pub fn discriminant_form(f: &FieldCtx, qa: &HomForm, qb: &HomForm) -> Result<Poly> {
    check_quadric(qa)?;
    check_quadric(qb)?;
    let entries = pencil_entries(f, &polar_matrix(f, qa), &polar_matrix(f, qb));
    let p = if f.characteristic() != 2 {
        poly_det(f, &entries)
    } else {
        // v_i = Pf of the polar matrix with row and column i removed
        let v: Vec<Poly> = (0..5)
            .map(|i| {
                let idx: Vec<usize> = (0..5).filter(|&k| k != i).collect();
                pfaffian4(f, &entries, &idx)
            })
            .collect();
        let mut acc = Poly::zero();
        for i in 0..5 {
            for j in i..5 {
                let c = Poly::from_coeffs(vec![f.neg(coeff(qb, i, j)), coeff(qa, i, j)]);
                acc = acc.add(f, &c.mul(f, &v[i]).mul(f, &v[j]));
            }
        }
        acc
    };
    if p.is_zero() {
        return Err(Error::SingularPencil("every member of the pencil is singular".into()));
    }
    Ok(p)
}

/// A singular member `t0 Qa - Qb` (or `Qa` when `t0` is infinite) over
/// the residue field `ext` and its rulings sign.
fn member_sign(ext: &Field, embed: impl Fn(Fe) -> Fe, qa: &HomForm, qb: &HomForm, t0: Option<Fe>) -> Result<i32> {
    let f: &FieldCtx = ext;
    let qa_e = qa.map_coeffs(&embed);
    let qb_e = qb.map_coeffs(&embed);
    let q = match t0 {
        Some(t) => qa_e.scale(f, t).sub(f, &qb_e)?,
        None => qa_e,
    };
    let b = polar_matrix(f, &q);
    let rank = b.rank(f);
    if f.characteristic() != 2 {
        if rank != 4 {
            return Err(Error::SingularPencil(format!("singular member with radical dim {} > 1", 5 - rank)));
        }
        for skip in 0..5 {
            let idx: Vec<usize> = (0..5).filter(|&k| k != skip).collect();
            let minor = Matrix::from_rows(idx.iter().map(|&i| idx.iter().map(|&j| b[(i, j)]).collect()).collect());
            let d = minor.det(f);
            if !d.is_zero() {
                return Ok(if f.is_square(d)? { 1 } else { -1 });
            }
        }
        unreachable!("a rank-4 symmetric matrix has a nonzero principal 4x4 minor");
    }
    if rank != 4 {
        return Err(Error::SingularPencil(format!("singular member with radical dim {} > 1", 5 - rank)));
    }
    // Symplectic basis of a coordinate complement of the radical.
    let bil = |x: &[Fe], y: &[Fe]| -> Fe {
        let mut s = f.zero();
        for i in 0..5 {
            for j in 0..5 {
                s = f.add(s, f.mul(x[i], f.mul(b[(i, j)], y[j])));
            }
        }
        s
    };
    let kernel = b.kernel(f);
    // dropping a coordinate on which the radical is nonzero leaves a complement
    let lead = kernel[0].iter().position(|x| !x.is_zero()).expect("nonzero radical vector");
    let mut rest: Vec<Vec<Fe>> = (0..5)
        .filter(|&i| i != lead)
        .map(|i| {
            let mut e = vec![f.zero(); 5];
            e[i] = f.one();
            e
        })
        .collect();
    let mut arf = f.zero();
    for _ in 0..2 {
        let e = rest.remove(0);
        let pos = rest
            .iter()
            .position(|w| !bil(&e, w).is_zero())
            .ok_or_else(|| Error::SingularPencil("degenerate quotient form".into()))?;
        let w = rest.remove(pos);
        let s = f.inv(bil(&e, &w))?;
        let fv: Vec<Fe> = w.iter().map(|&x| f.mul(x, s)).collect();
        for r in rest.iter_mut() {
            let (c1, c2) = (bil(r, &fv), bil(r, &e));
            for k in 0..5 {
                r[k] = f.add(r[k], f.add(f.mul(c1, e[k]), f.mul(c2, fv[k])));
            }
        }
        arf = f.add(arf, f.mul(q.eval(f, &e)?, q.eval(f, &fv)?));
    }
    Ok(if f.trace(arf).is_zero() { 1 } else { -1 })
}

/// Pencil type `d_1[e_1]...d_r[e_r]`, factors sorted by degree descending.
pub fn verify_pencil_type(f: &Field, qa: &HomForm, qb: &HomForm) -> Result<String> {
    let p = discriminant_form(f, qa, qb)?;
    let at_infinity = 5 - p.deg();
    let mut factors: Vec<(Poly, usize)> = if p.deg() == 0 { Vec::new() } else { factor_poly(f, &p)? };
    if factors.iter().any(|(_, m)| *m > 1) || at_infinity > 1 {
        return Err(Error::SingularPencil("repeated singular member: the base locus is singular".into()));
    }
    factors.sort_by(|a, b| b.0.deg().cmp(&a.0.deg()).then_with(|| a.0.canonical_cmp(&b.0)));
    let mut parts: Vec<(usize, i32)> = Vec::new();
    for (g, _) in &factors {
        let d = g.deg() as u32;
        let (ext, tower) = extension(f, d)?;
        let g_e = g.map(|c| tower.embed(c));
        let t0 = *roots(&ext, &g_e)?.first().ok_or_else(|| Error::Verification("irreducible factor without root".into()))?;
        parts.push((d as usize, member_sign(&ext, |c| tower.embed(c), qa, qb, Some(t0))?));
    }
    if at_infinity == 1 {
        parts.push((1, member_sign(f, |c| c, qa, qb, None)?));
    }
    Ok(parts.iter().map(|(d, e)| format!("{d}[{e}]")).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::field_of_order;

    fn quadric(f: &FieldCtx, s: &str) -> HomForm {
        HomForm::parse_expr(f, 5, "z", s).unwrap()
    }

    #[test]
    fn diagonal_pencil_is_split() {
        // sum x_i^2 and sum a_i x_i^2 with distinct rational a_i: five
        // rational singular members
        let f = field_of_order(11).unwrap();
        let qa = quadric(&f, "x0^2 + x1^2 + x2^2 + x3^2 + x4^2");
        let qb = quadric(&f, "x1^2 + 2*x2^2 + 3*x3^2 + 4*x4^2");
        let t = verify_pencil_type(&f, &qa, &qb).unwrap();
        assert_eq!(t.matches("1[").count(), 5);
        assert_eq!(verify_pencil_type(&f, &qb, &qa).unwrap().len(), t.len());
    }

    #[test]
    fn cone_is_rejected() {
        let f = field_of_order(5).unwrap();
        let qa = quadric(&f, "x0^2 + x1^2");
        let qb = quadric(&f, "x2^2 + x3^2");
        assert!(verify_pencil_type(&f, &qa, &qb).is_err());
    }
}
