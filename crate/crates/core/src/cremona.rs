//! The order-five automorphism of the degree-5 surface.
//!
//! The Cremona map `Phi` sends the orbit configuration to the split surface
//! `X_0` (the plane blown up at the four coordinate-like points), where the
//! order-five automorphism is the linear map `D` induced by
//! `delta(x:y:z) = (x(z-y) : z(x-y) : xz)`. Transporting `D` back through
//! the change of basis `g -> B` gives `A`, which must come out rational.
//!
//! Everything before `A` lives in GF(q^5); `A` is restricted to GF(q).

use serde::{Deserialize, Serialize};

use crate::codes::{LinearCode, MonomialMap};
use crate::error::{Error, Result};
use crate::geom::{line_through, HomForm, ProjPoint};
use crate::gf::{Fe, Field, FieldCtx};
use crate::linalg::Matrix;
use crate::surfaces::{dp5_code, dp5_embed, PlaneModelDP5};

/// The linear action of `delta` on the cubics through the four points.
pub const D_MATRIX: [[i64; 6]; 6] = [
    [1, -1, -1, 0, 0, 0],
    [1, -1, 0, 0, 1, 0],
    [0, 0, 0, -1, -1, 1],
    [0, 1, 0, 0, -1, 1],
    [0, 0, 0, 0, 1, 0],
    [0, 1, 0, 0, 0, 0],
];

/// Lines `l_ij` through the relabeled orbit points, 1-based as in the
/// formulas: `lines[i][j]` for `i < j`.
#[derive(Clone, Debug)]
pub struct Phi {
    /// `p_i` is orbit point `step * (i - 1) mod 5`.
    pub step: usize,
    pub points: Vec<ProjPoint>,
    lines: Vec<Vec<Option<HomForm>>>,
    pub u: Fe,
    pub v: Fe,
    pub w: Fe,
}

impl Phi {
    pub fn line(&self, i: usize, j: usize) -> &HomForm {
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        self.lines[a][b].as_ref().expect("1 <= i < j <= 5")
    }

    /// The three cubic components of the map.
    pub fn components(&self, f: &FieldCtx) -> [HomForm; 3] {
        let l = |i, j| self.line(i, j);
        [
            HomForm::product(f, &[l(1, 2), l(1, 4), l(3, 5)]).scale(f, self.u),
            HomForm::product(f, &[l(1, 2), l(1, 3), l(4, 5)]).scale(f, self.v),
            HomForm::product(f, &[l(1, 3), l(1, 4), l(2, 5)]).scale(f, self.w),
        ]
    }

    pub fn eval(&self, f: &FieldCtx, x: &[Fe]) -> Result<Vec<Fe>> {
        self.components(f).iter().map(|c| c.eval(f, x)).collect()
    }
}

#[derive(Clone, Debug)]
pub struct CremonaData {
    /// GF(q^5), where the orbit lives.
    pub big: Field,
    pub phi: Phi,
    pub alphas: [Fe; 3],
    pub g_basis: Vec<HomForm>,
    /// `g_i = sum_j G_ij B_j`; `M` is its inverse, sending `g` to `B`.
    pub m: Matrix,
    /// Normalized: first nonzero entry one; entries in GF(q).
    pub a: Matrix,
    /// Scalar `c` with `(cA)^5 = I`, when GF(q) has one.
    pub unit_scale: Option<Fe>,
}

/// The six cubics `y_0, ..., y_5` through the four base points of `X_0`.
pub fn s0_cubics(f: &FieldCtx) -> Vec<HomForm> {
    let x = |i| HomForm::var(f, 3, i);
    let (x0, x1, x2) = (x(0), x(1), x(2));
    let diff = |a: &HomForm, b: &HomForm| a.sub(f, b).expect("same shape");
    vec![
        HomForm::product(f, &[&x0, &x1, &diff(&x0, &x2)]),
        HomForm::product(f, &[&x0, &x2, &diff(&x0, &x1)]),
        HomForm::product(f, &[&x0, &x1, &diff(&x1, &x2)]),
        HomForm::product(f, &[&x1, &x2, &diff(&x1, &x0)]),
        HomForm::product(f, &[&x0, &x2, &diff(&x2, &x1)]),
        HomForm::product(f, &[&x1, &x2, &diff(&x2, &x0)]),
    ]
}

/// `delta` as three quadrics.
pub fn delta_map(f: &FieldCtx) -> Vec<HomForm> {
    let x = |i| HomForm::var(f, 3, i);
    let (x0, x1, x2) = (x(0), x(1), x(2));
    vec![
        x0.mul(f, &x2.sub(f, &x1).expect("linear")),
        x2.mul(f, &x0.sub(f, &x1).expect("linear")),
        x0.mul(f, &x2),
    ]
}

pub fn d_matrix(f: &FieldCtx) -> Matrix {
    Matrix::from_rows(D_MATRIX.iter().map(|r| r.iter().map(|&c| f.from_int(c)).collect()).collect())
}

/// Whether two lists of forms agree up to one common nonzero scalar
/// (all 2x2 cross products vanish).
pub fn proportional(f: &FieldCtx, a: &[HomForm], b: &[HomForm]) -> Result<bool> {
    if a.len() != b.len() || a.iter().all(|g| g.is_zero()) || b.iter().all(|g| g.is_zero()) {
        return Ok(false);
    }
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            if a[i].mul(f, &b[j]) != a[j].mul(f, &b[i]) {
                return Ok(false);
            }
        }
        if a[i].is_zero() != b[i].is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Builds `Phi` for the labeling `p_i = orbit[step * (i-1) mod 5]`, with
/// `u = 1` and `v, w` forced by `Phi((p_1 p_5)) = (1:1:1)`.
pub fn build_phi(m: &PlaneModelDP5, step: usize) -> Result<Phi> {
    if !(1..5).contains(&step) {
        return Err(Error::InvalidParameters(format!("relabeling step {step} not in 1..=4")));
    }
    let big = &m.orbits.big;
    let orbit = &m.orbits.orbits[0].points;
    if orbit.len() != 5 {
        return Err(Error::InvalidParameters("degree-5 model needs one orbit of size 5".into()));
    }
    let points: Vec<ProjPoint> = (0..5).map(|i| orbit[(step * i) % 5].clone()).collect();
    let mut lines = vec![vec![None; 6]; 6];
    for i in 1..=5 {
        for j in i + 1..=5 {
            lines[i][j] = Some(line_through(big, &points[i - 1], &points[j - 1])?);
        }
    }
    let mut phi = Phi { step, points, lines, u: big.one(), v: big.one(), w: big.one() };
    let at = |i, j, k: usize| phi.line(i, j).eval(big, phi.points[k - 1].coords());
    let a = big.mul(big.mul(at(1, 2, 5)?, at(1, 4, 5)?), at(3, 5, 1)?);
    let b = big.mul(big.mul(at(1, 2, 5)?, at(1, 3, 5)?), at(4, 5, 1)?);
    let c = big.mul(big.mul(at(1, 3, 5)?, at(1, 4, 5)?), at(2, 5, 1)?);
    if a.is_zero() || b.is_zero() || c.is_zero() {
        return Err(Error::Degenerate("a defining line evaluation vanishes".into()));
    }
    phi.v = big.div(a, b)?;
    phi.w = big.div(a, c)?;
    Ok(phi)
}

/// `(alpha_0, alpha_1, alpha_2)` by exact division of the three quadratic
/// combinations by `l15 l23`, `l15 l34`, `l15 l24`.
pub fn build_alphas(f: &FieldCtx, phi: &Phi) -> Result<[Fe; 3]> {
    let l = |i, j| phi.line(i, j);
    let pair = |i, j, k, m| l(i, j).mul(f, l(k, m));
    let combos = [
        (pair(1, 2, 3, 5).scale(f, phi.u).sub(f, &pair(1, 3, 2, 5).scale(f, phi.w))?, pair(1, 5, 2, 3)),
        (pair(1, 4, 3, 5).scale(f, phi.u).sub(f, &pair(1, 3, 4, 5).scale(f, phi.v))?, pair(1, 5, 3, 4)),
        (pair(1, 2, 4, 5).scale(f, phi.v).sub(f, &pair(1, 4, 2, 5).scale(f, phi.w))?, pair(1, 5, 2, 4)),
    ];
    let mut out = [Fe::ZERO; 3];
    for (k, (num, den)) in combos.iter().enumerate() {
        let quot = num.div_exact(f, den)?;
        out[k] = quot.coeff(&[0, 0, 0]);
    }
    if out.iter().any(|a| a.is_zero()) {
        return Err(Error::Degenerate("an alpha vanishes".into()));
    }
    Ok(out)
}

/// The six quintics `g_0, ..., g_5`.
pub fn build_g_basis(f: &FieldCtx, phi: &Phi, alphas: &[Fe; 3]) -> Vec<HomForm> {
    let l = |i, j| phi.line(i, j);
    let (u, v, w) = (phi.u, phi.v, phi.w);
    let [a0, a1, a2] = *alphas;
    let c = |x: Fe, y: Fe, z: Fe, neg: bool| {
        let s = f.mul(f.mul(x, y), z);
        if neg {
            f.neg(s)
        } else {
            s
        }
    };
    vec![
        HomForm::product(f, &[l(1, 2), l(1, 4), l(2, 3), l(3, 5), l(4, 5)]).scale(f, c(a0, u, v, false)),
        HomForm::product(f, &[l(1, 2), l(1, 4), l(2, 5), l(3, 5), l(3, 4)]).scale(f, c(a1, u, w, false)),
        HomForm::product(f, &[l(1, 2), l(1, 3), l(2, 4), l(3, 5), l(4, 5)]).scale(f, c(a2, u, v, false)),
        HomForm::product(f, &[l(1, 2), l(1, 3), l(3, 4), l(2, 5), l(4, 5)]).scale(f, c(a1, v, w, true)),
        HomForm::product(f, &[l(1, 3), l(1, 4), l(2, 4), l(2, 5), l(3, 5)]).scale(f, c(a2, u, w, true)),
        HomForm::product(f, &[l(1, 3), l(1, 4), l(2, 3), l(2, 5), l(4, 5)]).scale(f, c(a0, v, w, true)),
    ]
}

/// `M = G^{-1}` where row `i` of `G` holds the coordinates of `g_i` in the
/// model's basis `B` (embedded into GF(q^5)).
pub fn build_m(m: &PlaneModelDP5, g: &[HomForm]) -> Result<Matrix> {
    let big = &m.orbits.big;
    let tower = &m.orbits.tower;
    let b_rows = Matrix::from_rows(m.basis.iter().map(|h| h.map_coeffs(|c| tower.embed(c)).to_vector()).collect());
    let mut rows = Vec::with_capacity(g.len());
    for (i, gi) in g.iter().enumerate() {
        let coords = b_rows
            .solve_left(big, &gi.to_vector())
            .ok_or_else(|| Error::Verification(format!("g_{i} is not in the quintic system")))?;
        rows.push(coords);
    }
    let gm = Matrix::from_rows(rows);
    if gm.det(big).is_zero() {
        return Err(Error::Verification("the g forms are linearly dependent".into()));
    }
    gm.inverse(big)
}

/// `A = M D M^{-1}` acting on `B`-coordinate column vectors, normalized and
/// restricted to GF(q). Fails when the labeling does not make it rational.
pub fn build_a(m: &PlaneModelDP5, mm: &Matrix) -> Result<Matrix> {
    let big = &m.orbits.big;
    let a = mm.mul(big, &d_matrix(big))?.mul(big, &mm.inverse(big)?)?;
    let rows = a.to_rows();
    let lead = rows.iter().flatten().copied().find(|c| !c.is_zero()).ok_or_else(|| Error::Verification("A is zero".into()))?;
    let inv = big.inv(lead)?;
    let mut out = Vec::with_capacity(6);
    for r in rows {
        let mut row = Vec::with_capacity(6);
        for c in r {
            let c = m
                .orbits
                .tower
                .restrict(big.mul(c, inv))
                .ok_or_else(|| Error::Verification("A has an entry outside GF(q)".into()))?;
            row.push(c);
        }
        out.push(row);
    }
    Ok(Matrix::from_rows(out))
}

fn matrix_pow(f: &FieldCtx, a: &Matrix, e: u32) -> Result<Matrix> {
    let mut acc = Matrix::identity(f, a.rows());
    for _ in 0..e {
        acc = acc.mul(f, a)?;
    }
    Ok(acc)
}

/// `c` with `A^5 = c I`, or `None` if `A^5` is not scalar.
pub fn fifth_power_scalar(f: &FieldCtx, a: &Matrix) -> Result<Option<Fe>> {
    let p = matrix_pow(f, a, 5)?;
    let c = p[(0, 0)];
    let scalar = Matrix::identity(f, a.rows()).scale(f, c);
    Ok(if !c.is_zero() && p == scalar { Some(c) } else { None })
}

/// Runs the whole pipeline, trying the four cyclic labelings of the orbit
/// in turn and keeping the first that makes `A` rational.
pub fn synthesize(m: &PlaneModelDP5) -> Result<CremonaData> {
    let big = m.orbits.big.clone();
    let f = &m.field;
    let s0 = s0_cubics(&big);
    let mut last = Error::Verification("no labeling tried".into());
    for step in 1..5 {
        let phi = match build_phi(m, step) {
            Ok(p) => p,
            Err(e) => {
                last = e;
                continue;
            }
        };
        let alphas = build_alphas(&big, &phi)?;
        let g_basis = build_g_basis(&big, &phi, &alphas);
        // S_0 o Phi = l12 l13 l14 l15 * g, exactly
        let composed: Vec<HomForm> = s0.iter().map(|y| y.compose(&big, &phi.components(&big))).collect::<Result<_>>()?;
        let common = HomForm::product(&big, &[phi.line(1, 2), phi.line(1, 3), phi.line(1, 4), phi.line(1, 5)]);
        for (c, g) in composed.iter().zip(&g_basis) {
            if *c != common.mul(&big, g) {
                return Err(Error::Verification("S0 o Phi does not factor through the g forms".into()));
            }
        }
        let mm = build_m(m, &g_basis)?;
        let a = match build_a(m, &mm) {
            Ok(a) => a,
            Err(e) => {
                last = e;
                continue;
            }
        };
        let c = fifth_power_scalar(f, &a)?.ok_or_else(|| Error::Verification("A^5 is not scalar".into()))?;
        // a fifth root of c^{-1}, if any
        let target = f.inv(c)?;
        let unit_scale = f.elements().filter(|x| !x.is_zero()).find(|&x| f.pow(x, 5).ok() == Some(target));
        return Ok(CremonaData { big, phi, alphas, g_basis, m: mm, a, unit_scale });
    }
    Err(last)
}

impl CremonaData {
    /// `A` rescaled to satisfy `A^5 = I` when possible.
    pub fn unit_a(&self, f: &FieldCtx) -> Matrix {
        match self.unit_scale {
            Some(s) => self.a.scale(f, s),
            None => self.a.clone(),
        }
    }
}

/// Where `a` sends each point of a set it preserves.
pub fn point_permutation(f: &FieldCtx, a: &Matrix, points: &[ProjPoint]) -> Result<Vec<usize>> {
    let index: std::collections::HashMap<&ProjPoint, usize> = points.iter().enumerate().map(|(i, p)| (p, i)).collect();
    points
        .iter()
        .map(|p| {
            let img = ProjPoint::new(f, a.mul_vec(f, p.coords()))?;
            index.get(&img).copied().ok_or_else(|| Error::Verification("A does not preserve the point set".into()))
        })
        .collect()
}

/// The monomial map a linear automorphism `a` induces on a code whose
/// columns it permutes up to scalars. With `a c_j = s_j c_pi(j)`, the
/// message map `m -> m a^{-1}` sends position `j` to `pi(j)` with scale
/// `1 / s_j`.
pub fn induced_monomial(f: &FieldCtx, a: &Matrix, code: &LinearCode) -> Result<MonomialMap> {
    let n = code.len();
    let cols: Vec<Vec<Fe>> = (0..n).map(|j| code.column(j)).collect();
    let index: std::collections::HashMap<ProjPoint, usize> =
        cols.iter().enumerate().map(|(j, c)| Ok((ProjPoint::new(f, c.clone())?, j))).collect::<Result<_>>()?;
    if index.len() != n {
        return Err(Error::Verification("code has proportional columns".into()));
    }
    let mut perm = Vec::with_capacity(n);
    let mut scales = Vec::with_capacity(n);
    for c in &cols {
        let img = a.mul_vec(f, c);
        let k = *index
            .get(&ProjPoint::new(f, img.clone())?)
            .ok_or_else(|| Error::Verification("image column is not a column of the code".into()))?;
        let lead = cols[k].iter().position(|x| !x.is_zero()).expect("nonzero column");
        // img = s * cols[k]
        let s = f.div(img[lead], cols[k][lead])?;
        perm.push(k);
        scales.push(f.inv(s)?);
    }
    MonomialMap::new(perm, scales)
}

/// Outcome of the full check for one model.
#[derive(Clone, Debug)]
pub struct Auto5Report {
    pub data: CremonaData,
    pub map: MonomialMap,
    pub order: u64,
    pub perm_order: u64,
    pub fixed_points: usize,
    pub is_automorphism: bool,
}

/// Synthesizes `A`, checks it on `X(F_q)` and on the code.
pub fn auto5(m: &PlaneModelDP5) -> Result<Auto5Report> {
    let f = &m.field;
    let data = synthesize(m)?;
    let a = data.unit_a(f);
    let pts = dp5_embed(m)?;
    let perm = point_permutation(f, &a, &pts)?;
    let fixed_points = perm.iter().enumerate().filter(|&(i, &p)| i == p).count();
    let q = m.q() as usize;
    if (fixed_points % 5) != (q * q + 1) % 5 {
        return Err(Error::Verification(format!("{fixed_points} fixed points on a set of {} under an order-5 map", q * q + 1)));
    }
    let code = dp5_code(m)?;
    let map = induced_monomial(f, &a, &code)?;
    let is_automorphism = code.is_automorphism(&map)?;
    Ok(Auto5Report { order: map.order(f), perm_order: map.perm_order(), fixed_points, is_automorphism, map, data })
}

/// JSON form of the automorphism: matrix entries and scales as coefficient
/// vectors over the prime field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Auto5Json {
    pub p: u32,
    pub modulus: Vec<u32>,
    pub a: Vec<Vec<Vec<u32>>>,
    pub perm: Vec<usize>,
    pub scales: Vec<Vec<u32>>,
    pub order: u64,
}

impl Auto5Report {
    pub fn to_json(&self, f: &Field) -> Auto5Json {
        Auto5Json {
            p: f.characteristic(),
            modulus: f.modulus().to_vec(),
            a: self.data.unit_a(f).to_rows().iter().map(|r| r.iter().map(|&c| f.coeffs(c)).collect()).collect(),
            perm: self.map.perm.clone(),
            scales: self.map.scales.iter().map(|&c| f.coeffs(c)).collect(),
            order: self.order,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surfaces::build_dp5;

    #[test]
    fn d_intertwines_delta() {
        let f = crate::gf::field_of_order(7).unwrap();
        let s0 = s0_cubics(&f);
        let d = d_matrix(&f);
        let d_s0: Vec<HomForm> = (0..6)
            .map(|i| {
                (0..6).fold(HomForm::zero(3, 3), |acc, j| acc.add(&f, &s0[j].scale(&f, d[(i, j)])).unwrap())
            })
            .collect();
        let s0_delta: Vec<HomForm> = s0.iter().map(|y| y.compose(&f, &delta_map(&f)).unwrap()).collect();
        assert!(proportional(&f, &s0_delta, &d_s0).unwrap());
    }

    #[test]
    fn phi_conditions() {
        let m = build_dp5(4, 0).unwrap();
        let big = &m.orbits.big;
        let phi = build_phi(&m, 1).unwrap();
        let p1 = phi.points[0].coords();
        let p5 = phi.points[4].coords();
        // points of (p1 p5) other than p1, p5 go to (1:1:1)
        for lam in [big.one(), big.from_int(1), big.generator()] {
            let x: Vec<Fe> = (0..3).map(|k| big.add(big.mul(lam, p1[k]), p5[k])).collect();
            let img = ProjPoint::new(big, phi.eval(big, &x).unwrap()).unwrap();
            assert_eq!(img.coords(), &[big.one(); 3]);
        }
        // (p1 p2) is contracted
        let p2 = phi.points[1].coords();
        let imgs: Vec<ProjPoint> = [big.one(), big.generator()]
            .iter()
            .map(|&lam| {
                let x: Vec<Fe> = (0..3).map(|k| big.add(big.mul(lam, p1[k]), p2[k])).collect();
                ProjPoint::new(big, phi.eval(big, &x).unwrap()).unwrap()
            })
            .collect();
        assert_eq!(imgs[0], imgs[1]);
    }

    #[test]
    fn alphas_scale_with_uvw() {
        let m = build_dp5(3, 0).unwrap();
        let big = &m.orbits.big;
        let phi = build_phi(&m, 1).unwrap();
        let a = build_alphas(big, &phi).unwrap();
        let lam = big.generator();
        let mut scaled = phi.clone();
        scaled.u = big.mul(lam, phi.u);
        scaled.v = big.mul(lam, phi.v);
        scaled.w = big.mul(lam, phi.w);
        let b = build_alphas(big, &scaled).unwrap();
        for k in 0..3 {
            assert_eq!(b[k], big.mul(lam, a[k]));
        }
    }

    #[test]
    fn order_five_over_small_fields() {
        for q in [3, 4, 5] {
            let m = build_dp5(q, 0).unwrap();
            let r = auto5(&m).unwrap();
            assert!(r.is_automorphism, "q = {q}");
            assert_eq!(r.order, 5, "q = {q}");
            assert_eq!(r.perm_order, 5, "q = {q}");
        }
    }
}
