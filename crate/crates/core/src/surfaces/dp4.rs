//! Degree 4: intersections of two quadrics in P^4, built by Flynn's
//! method from a squarefree quintic `f = f_1...f_r` and a twist `delta`.

use super::pencil::verify_pencil_type;
use crate::codes::LinearCode;
use crate::error::{Error, Result};
use crate::geom::{enumerate_projective, HomForm, ProjPoint};
use crate::gf::{field_of_order, field_with_modulus, poly::monic_irreducibles, Fe, Field, FieldCtx, Poly};
use crate::picard::{degree4_frobenius, parse_pencil, SurfaceType};

#[derive(Clone, Debug)]
pub struct QuadricModelDP4 {
    pub field: Field,
    /// Classified pencil type, e.g. `3[-1]2[-1]`.
    pub pencil_type: String,
    pub surface_type: Option<SurfaceType>,
    /// Flynn data when the model was built that way.
    pub flynn: Option<FlynnData>,
    /// The two quadrics cutting out the surface.
    pub qa: HomForm,
    pub qb: HomForm,
    pub points: Vec<ProjPoint>,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlynnData {
    pub factors: Vec<Poly>,
    pub f: Poly,
    pub delta: Poly,
    /// `Q_0, ..., Q_4`; the surface is `Q_3 = Q_4 = 0`.
    pub quadrics: Vec<HomForm>,
}

/// Whether `a` is a non-square in `F_q[x]/<g>` for irreducible `g`.
fn is_nonsquare_mod(f: &FieldCtx, a: &Poly, g: &Poly) -> Result<bool> {
    let r = a.rem(f, g)?;
    if r.is_zero() {
        return Ok(false);
    }
    let e = ((f.order() as u128).pow(g.deg() as u32) - 1) / 2;
    let p = r.powmod(f, e, g);
    Ok(p != Poly::one(f))
}

/// Residues of degree below `d` in canonical order.
fn residues(f: &FieldCtx, d: usize) -> impl Iterator<Item = Poly> + '_ {
    let q = f.order() as u64;
    (0..q.pow(d as u32)).map(move |idx| {
        let mut c = vec![Fe::ZERO; d];
        let mut r = idx;
        for i in (0..d).rev() {
            c[i] = f.element((r % q) as u32);
            r /= q;
        }
        Poly::from_coeffs(c)
    })
}

/// `delta * (x_0 + x_1 x + ... + x_4 x^4)^2 = sum Q_k x^k` in `F_q[x]/<f>`.
pub fn flynn_quadrics(f: &FieldCtx, modulus: &Poly, delta: &Poly) -> Result<Vec<HomForm>> {
    if modulus.deg() != 5 {
        return Err(Error::InvalidParameters("f must have degree 5".into()));
    }
    let mut qs = vec![HomForm::zero(5, 2); 5];
    let mut xpow = Poly::one(f);
    let mut powers = Vec::new();
    for _ in 0..9 {
        powers.push(delta.mulmod(f, &xpow, modulus));
        xpow = xpow.mul(f, &Poly::x(f));
    }
    for i in 0..5 {
        for j in i..5 {
            let r = &powers[i + j];
            let mult = if i == j { f.one() } else { f.from_int(2) };
            let mut e = vec![0u8; 5];
            e[i] += 1;
            e[j] += 1;
            for (k, q) in qs.iter_mut().enumerate() {
                let c = f.mul(mult, r.coeff(k));
                if !c.is_zero() {
                    *q = q.add(f, &HomForm::monomial(&e, c))?;
                }
            }
        }
    }
    Ok(qs)
}

/// Flynn's construction from explicit irreducible factors and a twist
/// `delta` in `F_q[x]/<f>` (all factors get sign `-1`).
pub fn flynn_from_data(field: &Field, factors: &[Poly], delta: &Poly) -> Result<QuadricModelDP4> {
    let f: &FieldCtx = field;
    if f.characteristic() == 2 {
        return Err(Error::EvenCharacteristic("Flynn's construction only works in odd characteristic"));
    }
    let factors: Vec<Poly> = factors.iter().map(|g| g.monic(f)).collect();
    for (i, g) in factors.iter().enumerate() {
        if !crate::gf::poly::is_irreducible(f, g) {
            return Err(Error::InvalidParameters(format!("factor {} is not irreducible", g.to_text(f))));
        }
        if factors[..i].contains(g) {
            return Err(Error::InvalidParameters("factors are not distinct".into()));
        }
        if !is_nonsquare_mod(f, delta, g)? {
            return Err(Error::InvalidParameters(format!("delta is a square modulo {}", g.to_text(f))));
        }
    }
    let modulus = factors.iter().fold(Poly::one(f), |acc, g| acc.mul(f, g));
    let delta = delta.rem(f, &modulus)?;
    let quadrics = flynn_quadrics(f, &modulus, &delta)?;
    let mut degrees: Vec<usize> = factors.iter().map(|g| g.deg()).collect();
    degrees.sort_by(|a, b| b.cmp(a));
    let expected: String = degrees.iter().map(|d| format!("{d}[-1]")).collect();
    let (qa, qb) = (quadrics[3].clone(), quadrics[4].clone());
    let model = from_quadrics(field, qa, qb, 0)?;
    if model.pencil_type != expected {
        return Err(Error::Verification(format!("pencil type {} differs from the requested {expected}", model.pencil_type)));
    }
    Ok(QuadricModelDP4 { flynn: Some(FlynnData { factors, f: modulus, delta, quadrics }), ..model })
}

/// Seeded choice: the factors are the first distinct monic irreducibles of
/// the required degrees from offsets given by the digits of `seed`, and `delta_i = x mod f_i`
/// unless that is a square, in which case the first non-square residue.
pub fn flynn_build(q: u64, t: SurfaceType, seed: u64) -> Result<QuadricModelDP4> {
    let pencil = t.pencil().ok_or_else(|| Error::InvalidParameters(format!("{} is not a degree-4 type", t.label())))?;
    let field = field_of_order(q)?;
    if field.characteristic() == 2 {
        return Err(Error::EvenCharacteristic("Flynn's construction only works in odd characteristic"));
    }
    if t == SurfaceType::Four1 && q <= 3 {
        return Err(Error::InvalidParameters(format!(
            "type {} does not exist over GF({q}): there are not enough non-squares",
            t.label()
        )));
    }
    let f: &FieldCtx = &field;
    let mut factors: Vec<Poly> = Vec::new();
    // the seed is read in mixed radix, one digit per factor
    let mut digits = seed;
    for (d, _) in parse_pencil(pencil)? {
        let cands = monic_irreducibles(f, d);
        let start = (digits % cands.len() as u64) as usize;
        digits /= cands.len() as u64;
        let pick = (0..cands.len())
            .map(|k| &cands[(start + k) % cands.len()])
            .find(|g| !factors.contains(g))
            .ok_or_else(|| Error::InvalidParameters(format!("not enough irreducibles of degree {d}")))?;
        factors.push(pick.clone());
    }
    let x = Poly::x(f);
    let mut deltas = Vec::new();
    for g in &factors {
        let d = if is_nonsquare_mod(f, &x, g)? {
            x.rem(f, g)?
        } else {
            let mut found = None;
            for r in residues(f, g.deg()) {
                if is_nonsquare_mod(f, &r, g)? {
                    found = Some(r);
                    break;
                }
            }
            found.expect("every finite field of odd order has non-squares")
        };
        deltas.push(d);
    }
    let delta = crt(f, &factors, &deltas)?;
    let mut m = flynn_from_data(&field, &factors, &delta)?;
    m.seed = seed;
    Ok(m)
}

/// The element of `F_q[x]/<prod g_i>` congruent to `r_i` modulo each `g_i`.
pub fn crt(f: &FieldCtx, moduli: &[Poly], residues: &[Poly]) -> Result<Poly> {
    let total = moduli.iter().fold(Poly::one(f), |acc, g| acc.mul(f, g));
    let mut acc = Poly::zero();
    for (g, r) in moduli.iter().zip(residues) {
        let (cofactor, rem) = total.divrem(f, g)?;
        debug_assert!(rem.is_zero());
        let inv = cofactor.rem(f, g)?.invmod(f, g)?;
        let e = cofactor.mul(f, &inv.mulmod(f, r, g));
        acc = acc.add(f, &e);
    }
    acc.rem(f, &total)
}

/// Classifies the pencil, enumerates the rational points and checks their
/// number against the Frobenius trace of the type.
pub fn from_quadrics(field: &Field, qa: HomForm, qb: HomForm, seed: u64) -> Result<QuadricModelDP4> {
    let pencil_type = verify_pencil_type(field, &qa, &qb)?;
    let points = enumerate_surface_points(&[qa.clone(), qb.clone()], field)?;
    let q = field.order() as i64;
    let trace = degree4_frobenius(&pencil_type)?.trace();
    let expected = q * q + q * trace + 1;
    if points.len() as i64 != expected {
        return Err(Error::PointCount { expected: expected as usize, got: points.len() });
    }
    Ok(QuadricModelDP4 {
        field: field.clone(),
        surface_type: SurfaceType::from_pencil(&pencil_type),
        pencil_type,
        flynn: None,
        qa,
        qb,
        points,
        seed,
    })
}

/// Points of P^4(F_q) on which every quadric vanishes, canonical order.
pub fn enumerate_surface_points(quadrics: &[HomForm], f: &FieldCtx) -> Result<Vec<ProjPoint>> {
    let mut out = Vec::new();
    for p in enumerate_projective(f, 4)? {
        let mut on = true;
        for g in quadrics {
            if !g.eval(f, p.coords())?.is_zero() {
                on = false;
                break;
            }
        }
        if on {
            out.push(p);
        }
    }
    Ok(out)
}

impl QuadricModelDP4 {
    pub fn q(&self) -> u64 {
        self.field.order() as u64
    }
}

/// Generator matrix whose columns are the coordinates of the points.
pub fn dp4_code(m: &QuadricModelDP4) -> Result<LinearCode> {
    let rows = (0..5).map(|i| m.points.iter().map(|p| p.coords()[i]).collect()).collect();
    let code = LinearCode::from_rows(
        m.field.clone(),
        rows,
        format!("degree-4 surface of type {} over GF({}), seed {}", m.pencil_type, m.q(), m.seed),
    )?;
    if code.dim() != 5 {
        return Err(Error::RankDeficient { expected: 5, got: code.dim() });
    }
    Ok(code)
}

/// The two quadrics of the degree-4 example over GF(8).
pub const F8_QUADRICS: &str = include_str!("../../fixtures/f8_quadrics.txt");

/// Reads a pair of quadrics. Format: a `field p c_0,c_1,...` line giving
/// the modulus (constant term first; the generator is written `z`), then
/// two lines `Name = expression`. `#` starts a comment.
pub fn parse_quadric_file(text: &str) -> Result<(Field, HomForm, HomForm)> {
    let mut field: Option<Field> = None;
    let mut forms = Vec::new();
    for line in text.lines() {
        let line = line.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("field") {
            let mut it = rest.split_whitespace();
            let p: u32 = it.next().and_then(|s| s.parse().ok()).ok_or_else(|| Error::Parse("bad field line".into()))?;
            field = Some(match it.next() {
                Some(m) => field_with_modulus(p, &crate::gf::poly::parse_residues(m, p)?)?,
                None => field_of_order(p as u64)?,
            });
            continue;
        }
        let f = field.as_ref().ok_or_else(|| Error::Parse("quadric before the field line".into()))?;
        let expr = line.split_once('=').map_or(line, |(_, e)| e);
        forms.push(HomForm::parse_expr(f, 5, "z", expr)?);
    }
    let field = field.ok_or_else(|| Error::Parse("missing field line".into()))?;
    if forms.len() != 2 {
        return Err(Error::Parse(format!("expected two quadrics, found {}", forms.len())));
    }
    let qb = forms.pop().unwrap();
    let qa = forms.pop().unwrap();
    Ok((field, qa, qb))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn crt_recovers_residues() {
        let f = field_of_order(5).unwrap();
        let g2 = Poly::parse(&f, "2,4,1").unwrap();
        let g3 = Poly::parse(&f, "3,3,0,1").unwrap();
        let r2 = Poly::parse(&f, "1,3").unwrap();
        let r3 = Poly::parse(&f, "4,0,2").unwrap();
        let d = crt(&f, &[g2.clone(), g3.clone()], &[r2.clone(), r3.clone()]).unwrap();
        assert_eq!(d.rem(&f, &g2).unwrap(), r2);
        assert_eq!(d.rem(&f, &g3).unwrap(), r3);
    }

    #[test]
    fn even_characteristic_rejected() {
        assert!(matches!(flynn_build(8, SurfaceType::Four3, 0), Err(Error::EvenCharacteristic(_))));
        assert!(flynn_build(3, SurfaceType::Four1, 0).is_err());
    }
}
