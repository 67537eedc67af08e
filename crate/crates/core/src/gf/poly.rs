//! Dense univariate polynomials over a [`FieldCtx`].

use std::cmp::Ordering;

use super::field::{Fe, FieldCtx};
use crate::error::{Error, Result};

/// Coefficients constant term first, no trailing zeros. The zero polynomial
/// has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Fe>,
}

impl Poly {
    pub fn from_coeffs(mut coeffs: Vec<Fe>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: Fe) -> Self {
        Poly::from_coeffs(vec![c])
    }

    pub fn one(f: &FieldCtx) -> Self {
        Poly::constant(f.one())
    }

    pub fn x(f: &FieldCtx) -> Self {
        Poly::from_coeffs(vec![f.zero(), f.one()])
    }

    /// Monic linear polynomial `x - a`.
    pub fn linear(f: &FieldCtx, a: Fe) -> Self {
        Poly::from_coeffs(vec![f.neg(a), f.one()])
    }

    pub fn coeffs(&self) -> &[Fe] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Fe {
        self.coeffs.get(i).copied().unwrap_or(Fe::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lead(&self) -> Fe {
        self.coeffs.last().copied().unwrap_or(Fe::ZERO)
    }

    pub fn is_one(&self, f: &FieldCtx) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == f.one()
    }

    pub fn add(&self, f: &FieldCtx, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| f.add(self.coeff(i), o.coeff(i))).collect())
    }

    pub fn sub(&self, f: &FieldCtx, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| f.sub(self.coeff(i), o.coeff(i))).collect())
    }

    pub fn scale(&self, f: &FieldCtx, c: Fe) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn mul(&self, f: &FieldCtx, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Fe::ZERO; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in o.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Poly::from_coeffs(out)
    }

    pub fn monic(&self, f: &FieldCtx) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let inv = f.inv(self.lead()).expect("nonzero lead");
        self.scale(f, inv)
    }

    pub fn divrem(&self, f: &FieldCtx, d: &Poly) -> Result<(Poly, Poly)> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let dd = d.deg();
        if self.coeffs.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let inv = f.inv(d.lead())?;
        let mut r = self.coeffs.clone();
        let mut q = vec![Fe::ZERO; r.len() - dd];
        for k in (dd..r.len()).rev() {
            let c = f.mul(r[k], inv);
            if c.is_zero() {
                continue;
            }
            q[k - dd] = c;
            for (i, &b) in d.coeffs.iter().enumerate() {
                r[k - dd + i] = f.sub(r[k - dd + i], f.mul(c, b));
            }
        }
        r.truncate(dd);
        Ok((Poly::from_coeffs(q), Poly::from_coeffs(r)))
    }

    pub fn rem(&self, f: &FieldCtx, d: &Poly) -> Result<Poly> {
        Ok(self.divrem(f, d)?.1)
    }

    pub fn mulmod(&self, f: &FieldCtx, o: &Poly, m: &Poly) -> Poly {
        self.mul(f, o).rem(f, m).expect("nonzero modulus")
    }

    pub fn powmod(&self, f: &FieldCtx, mut e: u128, m: &Poly) -> Poly {
        let mut base = self.rem(f, m).expect("nonzero modulus");
        let mut acc = Poly::one(f).rem(f, m).unwrap();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mulmod(f, &base, m);
            }
            base = base.mulmod(f, &base, m);
            e >>= 1;
        }
        acc
    }

    /// Monic gcd.
    pub fn gcd(&self, f: &FieldCtx, o: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let r = a.rem(f, &b).unwrap();
            a = b;
            b = r;
        }
        a.monic(f)
    }

    /// `(g, s, t)` with `s*self + t*o = g`, `g` monic.
    pub fn ext_gcd(&self, f: &FieldCtx, o: &Poly) -> (Poly, Poly, Poly) {
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (Poly::one(f), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), Poly::one(f));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(f, &r1).unwrap();
            let s2 = s0.sub(f, &q.mul(f, &s1));
            let t2 = t0.sub(f, &q.mul(f, &t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s2;
            t0 = t1;
            t1 = t2;
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = f.inv(r0.lead()).unwrap();
        (r0.scale(f, inv), s0.scale(f, inv), t0.scale(f, inv))
    }

    /// Inverse of `self` modulo `m`.
    pub fn invmod(&self, f: &FieldCtx, m: &Poly) -> Result<Poly> {
        let (g, s, _) = self.ext_gcd(f, m);
        if !g.is_one(f) {
            return Err(Error::DivisionByZero);
        }
        s.rem(f, m)
    }

    pub fn derivative(&self, f: &FieldCtx) -> Poly {
        Poly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| f.mul(f.from_int(i as i64), c))
                .collect(),
        )
    }

    pub fn eval(&self, f: &FieldCtx, x: Fe) -> Fe {
        self.coeffs.iter().rev().fold(Fe::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// Maps coefficients through `g` (e.g. a field embedding).
    pub fn map(&self, g: impl Fn(Fe) -> Fe) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|&c| g(c)).collect())
    }

    /// Canonical order: by degree, then coefficient vectors lexicographically
    /// (constant term first, canonical element order).
    pub fn canonical_cmp(&self, o: &Poly) -> Ordering {
        self.coeffs.len().cmp(&o.coeffs.len()).then_with(|| self.coeffs.cmp(&o.coeffs))
    }

    /// Text form over a prime field: residues, constant term first.
    pub fn to_text(&self, f: &FieldCtx) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.coeffs.iter().map(|&c| f.format(c)).collect::<Vec<_>>().join(if f.degree() == 1 { "," } else { ";" })
    }

    /// Parses `"2,4,1"` (x^2+4x+2) over a prime field. Extension-field
    /// coefficients are separated by `;` and written as residue lists.
    pub fn parse(f: &FieldCtx, s: &str) -> Result<Poly> {
        let s = s.trim();
        if f.degree() == 1 {
            let r = parse_residues(s, f.characteristic())?;
            return Ok(Poly::from_coeffs(r.iter().map(|&c| f.from_int(c as i64)).collect()));
        }
        let cs: Result<Vec<Fe>> = s.split(';').map(|t| f.parse(t)).collect();
        Ok(Poly::from_coeffs(cs?))
    }
}

pub fn format_residues(r: &[u32]) -> String {
    r.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
}

pub fn parse_residues(s: &str, p: u32) -> Result<Vec<u32>> {
    s.split(',')
        .map(|t| {
            let v: i64 = t.trim().parse().map_err(|_| Error::Parse(format!("bad residue {t:?}")))?;
            Ok(v.rem_euclid(p as i64) as u32)
        })
        .collect()
}

/// Rabin's irreducibility test.
pub fn is_irreducible(f: &FieldCtx, g: &Poly) -> bool {
    let Some(n) = g.degree() else { return false };
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    // Cheap rejection: a root in the ground field (includes x | g).
    if f.order() <= 256 && f.elements().any(|a| g.eval(f, a).is_zero()) {
        return false;
    }
    let q = f.order() as u128;
    let g = g.monic(f);
    let x = Poly::x(f);
    // x^(q^k) mod g for k = 0..=n
    let mut pows = vec![x.rem(f, &g).unwrap()];
    for k in 1..=n {
        let next = pows[k - 1].powmod(f, q, &g);
        pows.push(next);
    }
    if pows[n] != pows[0] {
        return false;
    }
    let mut r = 2;
    let mut m = n;
    let mut primes = Vec::new();
    while m > 1 {
        if m % r == 0 {
            primes.push(r);
            while m % r == 0 {
                m /= r;
            }
        }
        r += 1;
    }
    primes.iter().all(|&r| {
        let h = pows[n / r].sub(f, &x);
        g.gcd(f, &h).is_one(f)
    })
}

/// All monic irreducible polynomials of degree `d`, in canonical order.
pub fn monic_irreducibles(f: &FieldCtx, d: usize) -> Vec<Poly> {
    let q = f.order() as u64;
    let total = q.pow(d as u32);
    let mut out = Vec::new();
    for idx in 0..total {
        // constant term is the most significant digit so that the sequence is
        // in canonical (lexicographic, constant first) order.
        let mut coeffs = vec![Fe::ZERO; d + 1];
        let mut r = idx;
        for i in (0..d).rev() {
            coeffs[i] = f.element((r % q) as u32);
            r /= q;
        }
        coeffs[d] = f.one();
        let p = Poly::from_coeffs(coeffs);
        if is_irreducible(f, &p) {
            out.push(p);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::make_field;

    #[test]
    fn divrem_roundtrip() {
        let f = make_field(5, 1).unwrap();
        let a = Poly::parse(&f, "1,3,0,0,4,1").unwrap();
        let b = Poly::parse(&f, "2,4,1").unwrap();
        let (q, r) = a.divrem(&f, &b).unwrap();
        assert_eq!(q.mul(&f, &b).add(&f, &r), a);
        assert!(r.deg() < 2);
    }

    #[test]
    fn irreducible_counts() {
        // Number of monic irreducibles of degree d over GF(q) (necklace count).
        let f = make_field(3, 1).unwrap();
        assert_eq!(monic_irreducibles(&f, 1).len(), 3);
        assert_eq!(monic_irreducibles(&f, 2).len(), 3);
        assert_eq!(monic_irreducibles(&f, 3).len(), 8);
        assert_eq!(monic_irreducibles(&f, 4).len(), 18);
        let g = make_field(2, 2).unwrap();
        assert_eq!(monic_irreducibles(&g, 2).len(), 6);
    }

    #[test]
    fn ext_gcd_identity() {
        let f = make_field(7, 1).unwrap();
        let a = Poly::parse(&f, "1,2,3,1").unwrap();
        let b = Poly::parse(&f, "5,0,1").unwrap();
        let (g, s, t) = a.ext_gcd(&f, &b);
        assert_eq!(s.mul(&f, &a).add(&f, &t.mul(&f, &b)), g);
    }

    #[test]
    fn text_format() {
        let f = make_field(5, 1).unwrap();
        let p = Poly::parse(&f, "2,4,1").unwrap();
        assert_eq!(p.to_text(&f), "2,4,1");
        assert_eq!(p.eval(&f, f.from_int(1)), f.from_int(2));
    }
}
