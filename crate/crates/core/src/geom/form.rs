//! Sparse homogeneous forms in a fixed number of variables.
//!
//! Coefficients are plain [`Fe`] values; the field is always passed
//! explicitly, so the same form type serves GF(q) and its extensions.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{Fe, FieldCtx};

pub type Monomial = Vec<u8>;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HomForm {
    nvars: usize,
    degree: u32,
    #[serde(with = "term_list")]
    terms: BTreeMap<Monomial, Fe>,
}

// JSON map keys must be strings, so terms travel as a list of pairs.
mod term_list {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(t: &BTreeMap<Monomial, Fe>, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(t.iter())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BTreeMap<Monomial, Fe>, D::Error> {
        Ok(Vec::<(Monomial, Fe)>::deserialize(d)?.into_iter().collect())
    }
}

/// All monomials of `degree` in `nvars` variables, greatest first in the
/// graded-lex order (`x0 > x1 > ...`).
pub fn monomials(nvars: usize, degree: u32) -> Vec<Monomial> {
    fn rec(prefix: &mut Vec<u8>, left: u32, nvars: usize, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == nvars {
            prefix.push(left as u8);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=left).rev() {
            prefix.push(e as u8);
            rec(prefix, left - e, nvars, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if nvars == 0 {
        return out;
    }
    rec(&mut Vec::with_capacity(nvars), degree, nvars, &mut out);
    out
}

impl HomForm {
    pub fn zero(nvars: usize, degree: u32) -> Self {
        HomForm { nvars, degree, terms: BTreeMap::new() }
    }

    pub fn monomial(exps: &[u8], c: Fe) -> Self {
        let mut f = HomForm::zero(exps.len(), exps.iter().map(|&e| e as u32).sum());
        if !c.is_zero() {
            f.terms.insert(exps.to_vec(), c);
        }
        f
    }

    /// The coordinate function `x_i`.
    pub fn var(f: &FieldCtx, nvars: usize, i: usize) -> Self {
        let mut e = vec![0u8; nvars];
        e[i] = 1;
        HomForm::monomial(&e, f.one())
    }

    /// Linear form `sum c_i x_i`.
    pub fn linear(coeffs: &[Fe]) -> Self {
        let n = coeffs.len();
        let mut f = HomForm::zero(n, 1);
        for (i, &c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                let mut e = vec![0u8; n];
                e[i] = 1;
                f.terms.insert(e, c);
            }
        }
        f
    }

    /// Form with the given coefficients on `monomials(nvars, degree)`.
    pub fn from_vector(nvars: usize, degree: u32, coeffs: &[Fe]) -> Self {
        let mons = monomials(nvars, degree);
        assert_eq!(mons.len(), coeffs.len(), "coefficient vector length");
        let terms = mons.into_iter().zip(coeffs).filter(|(_, c)| !c.is_zero()).map(|(m, &c)| (m, c)).collect();
        HomForm { nvars, degree, terms }
    }

    pub fn to_vector(&self) -> Vec<Fe> {
        monomials(self.nvars, self.degree).iter().map(|m| self.coeff(m)).collect()
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &[u8]) -> Fe {
        self.terms.get(m).copied().unwrap_or(Fe::ZERO)
    }

    /// Terms, greatest monomial first.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, Fe)> {
        self.terms.iter().rev().map(|(m, &c)| (m, c))
    }

    pub fn leading(&self) -> Option<(&Monomial, Fe)> {
        self.terms.iter().next_back().map(|(m, &c)| (m, c))
    }

    fn check(&self, o: &HomForm) -> Result<()> {
        if self.nvars != o.nvars || self.degree != o.degree {
            return Err(Error::Dimension(format!(
                "forms of shape ({},{}) and ({},{})",
                self.nvars, self.degree, o.nvars, o.degree
            )));
        }
        Ok(())
    }

    pub fn add(&self, f: &FieldCtx, o: &HomForm) -> Result<HomForm> {
        self.check(o)?;
        let mut out = self.clone();
        for (m, &c) in &o.terms {
            out.add_term(f, m, c);
        }
        Ok(out)
    }

    pub fn sub(&self, f: &FieldCtx, o: &HomForm) -> Result<HomForm> {
        self.add(f, &o.scale(f, f.neg(f.one())))
    }

    fn add_term(&mut self, f: &FieldCtx, m: &[u8], c: Fe) {
        let v = f.add(self.coeff(m), c);
        if v.is_zero() {
            self.terms.remove(m);
        } else {
            self.terms.insert(m.to_vec(), v);
        }
    }

    pub fn scale(&self, f: &FieldCtx, c: Fe) -> HomForm {
        if c.is_zero() {
            return HomForm::zero(self.nvars, self.degree);
        }
        HomForm {
            nvars: self.nvars,
            degree: self.degree,
            terms: self.terms.iter().map(|(m, &a)| (m.clone(), f.mul(a, c))).collect(),
        }
    }

    pub fn mul(&self, f: &FieldCtx, o: &HomForm) -> HomForm {
        assert_eq!(self.nvars, o.nvars, "variable count");
        let mut out = HomForm::zero(self.nvars, self.degree + o.degree);
        for (a, &ca) in &self.terms {
            for (b, &cb) in &o.terms {
                let m: Monomial = a.iter().zip(b).map(|(x, y)| x + y).collect();
                out.add_term(f, &m, f.mul(ca, cb));
            }
        }
        out
    }

    pub fn product(f: &FieldCtx, factors: &[&HomForm]) -> HomForm {
        let mut it = factors.iter();
        let first = (*it.next().expect("at least one factor")).clone();
        it.fold(first, |acc, g| acc.mul(f, g))
    }

    pub fn pow(&self, f: &FieldCtx, e: u32) -> HomForm {
        let mut acc = HomForm::monomial(&vec![0; self.nvars], f.one());
        for _ in 0..e {
            acc = acc.mul(f, self);
        }
        acc
    }

    /// Value at the coordinate vector `x`.
    pub fn eval(&self, f: &FieldCtx, x: &[Fe]) -> Result<Fe> {
        if x.len() != self.nvars {
            return Err(Error::Dimension(format!("{} coordinates for a form in {} variables", x.len(), self.nvars)));
        }
        // powers[i][e] = x_i^e
        let d = self.degree as usize;
        let powers: Vec<Vec<Fe>> = x
            .iter()
            .map(|&xi| {
                let mut v = Vec::with_capacity(d + 1);
                let mut acc = f.one();
                for _ in 0..=d {
                    v.push(acc);
                    acc = f.mul(acc, xi);
                }
                v
            })
            .collect();
        let mut s = Fe::ZERO;
        for (m, &c) in &self.terms {
            let mut t = c;
            for (i, &e) in m.iter().enumerate() {
                t = f.mul(t, powers[i][e as usize]);
            }
            s = f.add(s, t);
        }
        Ok(s)
    }

    /// Applies `g` to every coefficient (embeddings, Frobenius).
    pub fn map_coeffs(&self, g: impl Fn(Fe) -> Fe) -> HomForm {
        HomForm {
            nvars: self.nvars,
            degree: self.degree,
            terms: self.terms.iter().map(|(m, &c)| (m.clone(), g(c))).filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    /// Substitutes forms of a common degree for the variables.
    pub fn compose(&self, f: &FieldCtx, subs: &[HomForm]) -> Result<HomForm> {
        if subs.len() != self.nvars {
            return Err(Error::Dimension("substitution arity".into()));
        }
        let inner_nvars = subs[0].nvars;
        let inner_deg = subs[0].degree;
        let mut out = HomForm::zero(inner_nvars, self.degree * inner_deg);
        for (m, &c) in &self.terms {
            let mut t = HomForm::monomial(&vec![0; inner_nvars], c);
            for (i, &e) in m.iter().enumerate() {
                for _ in 0..e {
                    t = t.mul(f, &subs[i]);
                }
            }
            out = out.add(f, &t)?;
        }
        Ok(out)
    }

    /// Rescales so that the leading coefficient is one.
    pub fn normalized(&self, f: &FieldCtx) -> HomForm {
        match self.leading() {
            Some((_, c)) => self.scale(f, f.inv(c).unwrap()),
            None => self.clone(),
        }
    }

    /// Division by a single form: `(quotient, remainder)` with no term of
    /// the remainder divisible by the leading monomial of `d`. The
    /// remainder vanishes exactly when `d` divides `self`.
    pub fn divrem(&self, f: &FieldCtx, d: &HomForm) -> Result<(HomForm, HomForm)> {
        let (lm, lc) = d.leading().ok_or(Error::DivisionByZero)?;
        let (lm, lc) = (lm.clone(), lc);
        if d.nvars != self.nvars {
            return Err(Error::Dimension("variable count".into()));
        }
        let lc_inv = f.inv(lc)?;
        let qdeg = self.degree.checked_sub(d.degree);
        let mut q = HomForm::zero(self.nvars, qdeg.unwrap_or(0));
        let mut r = HomForm::zero(self.nvars, self.degree);
        let mut p = self.clone();
        while let Some((m, c)) = p.leading().map(|(m, c)| (m.clone(), c)) {
            let divisible = qdeg.is_some() && m.iter().zip(&lm).all(|(a, b)| a >= b);
            if divisible {
                let qm: Monomial = m.iter().zip(&lm).map(|(a, b)| a - b).collect();
                let qc = f.mul(c, lc_inv);
                let t = HomForm::monomial(&qm, qc);
                q.add_term(f, &qm, qc);
                p = p.sub(f, &t.mul(f, d))?;
            } else {
                r.add_term(f, &m, c);
                p.terms.remove(&m);
            }
        }
        Ok((q, r))
    }

    /// Exact quotient; errors if `d` does not divide `self`.
    pub fn div_exact(&self, f: &FieldCtx, d: &HomForm) -> Result<HomForm> {
        let (q, r) = self.divrem(f, d)?;
        if !r.is_zero() {
            return Err(Error::Verification("division leaves a nonzero remainder".into()));
        }
        Ok(q)
    }

    /// `"degree; e0.e1.e2=c; ..."`, greatest monomial first.
    pub fn to_text(&self, f: &FieldCtx) -> String {
        let mut s = format!("{}", self.degree);
        for (m, c) in self.terms() {
            let e: Vec<String> = m.iter().map(|e| e.to_string()).collect();
            let _ = write!(s, "; {}={}", e.join("."), f.format(c));
        }
        s
    }

    pub fn parse(f: &FieldCtx, nvars: usize, s: &str) -> Result<HomForm> {
        let mut parts = s.split(';');
        let degree: u32 = parts
            .next()
            .and_then(|d| d.trim().parse().ok())
            .ok_or_else(|| Error::Parse(format!("missing degree in {s:?}")))?;
        let mut out = HomForm::zero(nvars, degree);
        for part in parts {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let (mon, c) = part.split_once('=').ok_or_else(|| Error::Parse(format!("bad term {part:?}")))?;
            let m: Monomial = mon
                .split('.')
                .map(|e| e.trim().parse::<u8>().map_err(|_| Error::Parse(format!("bad exponent in {part:?}"))))
                .collect::<Result<_>>()?;
            if m.len() != nvars || m.iter().map(|&e| e as u32).sum::<u32>() != degree {
                return Err(Error::Parse(format!("monomial {mon:?} does not fit degree {degree}")));
            }
            out.add_term(f, &m, f.parse(c)?);
        }
        Ok(out)
    }

    /// Parses a polynomial expression such as `z^2*x0^2 + x0*x4 + 3*x1*x2`.
    /// `gen` names the field generator; variables are `x0, x1, ...`.
    pub fn parse_expr(f: &FieldCtx, nvars: usize, gen: &str, s: &str) -> Result<HomForm> {
        let bad = |t: &str| Error::Parse(format!("bad factor {t:?}"));
        let mut terms: Vec<(Monomial, Fe)> = Vec::new();
        let cleaned = s.replace('-', "+-");
        for raw in cleaned.split('+') {
            let mut t = raw.trim();
            if t.is_empty() {
                continue;
            }
            let mut c = f.one();
            if let Some(rest) = t.strip_prefix('-') {
                c = f.neg(c);
                t = rest.trim();
            }
            let mut m = vec![0u8; nvars];
            for factor in t.split('*') {
                let factor = factor.trim();
                let (base, exp) = match factor.split_once('^') {
                    Some((b, e)) => (b.trim(), e.trim().parse::<u32>().map_err(|_| bad(factor))?),
                    None => (factor, 1),
                };
                if base == gen {
                    c = f.mul(c, f.pow(f.generator(), exp as i64)?);
                } else if let Some(idx) = base.strip_prefix('x') {
                    let i: usize = idx.parse().map_err(|_| bad(factor))?;
                    if i >= nvars {
                        return Err(bad(factor));
                    }
                    m[i] += exp as u8;
                } else {
                    let n: i64 = base.parse().map_err(|_| bad(factor))?;
                    c = f.mul(c, f.pow(f.from_int(n), exp as i64)?);
                }
            }
            terms.push((m, c));
        }
        let degree = terms.first().map_or(0, |(m, _)| m.iter().map(|&e| e as u32).sum());
        let mut out = HomForm::zero(nvars, degree);
        for (m, c) in terms {
            if m.iter().map(|&e| e as u32).sum::<u32>() != degree {
                return Err(Error::Parse("expression is not homogeneous".into()));
            }
            out.add_term(f, &m, c);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::make_field;

    #[test]
    fn monomial_order() {
        let m = monomials(3, 2);
        assert_eq!(m.len(), 6);
        assert_eq!(m[0], vec![2, 0, 0]);
        assert_eq!(m[1], vec![1, 1, 0]);
        assert_eq!(m[5], vec![0, 0, 2]);
        assert_eq!(monomials(3, 5).len(), 21);
        assert_eq!(monomials(5, 2).len(), 15);
    }

    #[test]
    fn division() {
        let f = make_field(5, 1).unwrap();
        let x = HomForm::var(&f, 3, 0);
        let y = HomForm::var(&f, 3, 1);
        let z = HomForm::var(&f, 3, 2);
        let a = x.add(&f, &y).unwrap();
        let b = y.sub(&f, &z).unwrap().mul(&f, &x);
        let p = a.mul(&f, &b);
        assert_eq!(p.div_exact(&f, &a).unwrap(), b);
        let (_, r) = p.add(&f, &z.pow(&f, 3)).unwrap().divrem(&f, &a).unwrap();
        assert!(!r.is_zero());
    }

    #[test]
    fn text_roundtrip_and_expr() {
        let f = make_field(5, 1).unwrap();
        let q3 = HomForm::parse_expr(&f, 5, "z", "x1^2 + 2*x0*x2 + 2*x3^2 + 4*x2*x4 + 2*x3*x4 + x4^2").unwrap();
        assert_eq!(HomForm::parse(&f, 5, &q3.to_text(&f)).unwrap(), q3);
        assert_eq!(q3.coeff(&[1, 0, 1, 0, 0]), f.from_int(2));
        let g = make_field(2, 3).unwrap();
        let t = HomForm::parse_expr(&g, 2, "z", "z^3*x0^2 + x0*x1").unwrap();
        assert_eq!(t.coeff(&[2, 0]), g.pow(g.generator(), 3).unwrap());
    }
}
