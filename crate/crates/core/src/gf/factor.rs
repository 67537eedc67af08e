//! Factorization of univariate polynomials over finite fields:
//! square-free split, distinct-degree split, then Cantor–Zassenhaus
//! equal-degree splitting driven by a fixed-seed generator.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::field::{Fe, FieldCtx};
use super::poly::Poly;
use crate::error::{Error, Result};

const SEED: u64 = 0x6470_636f_6465_7321;

/// Irreducible monic factors with multiplicities, sorted canonically.
pub fn factor_poly(f: &FieldCtx, g: &Poly) -> Result<Vec<(Poly, usize)>> {
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut out: Vec<(Poly, usize)> = Vec::new();
    for (sf, mult) in squarefree(f, &g.monic(f)) {
        for (d, part) in distinct_degree(f, &sf) {
            for factor in equal_degree(f, &part, d, &mut rng) {
                out.push((factor, mult));
            }
        }
    }
    // merge repeated factors (can arise from p-th root recursion)
    out.sort_by(|a, b| a.0.canonical_cmp(&b.0));
    let mut merged: Vec<(Poly, usize)> = Vec::new();
    for (p, m) in out {
        match merged.last_mut() {
            Some(last) if last.0 == p => last.1 += m,
            _ => merged.push((p, m)),
        }
    }
    Ok(merged)
}

/// Distinct roots of `g` in `f`, in canonical order.
pub fn roots(f: &FieldCtx, g: &Poly) -> Result<Vec<Fe>> {
    Ok(factor_poly(f, g)?
        .into_iter()
        .filter(|(p, _)| p.deg() == 1)
        .map(|(p, _)| f.neg(p.coeff(0)))
        .collect())
}

/// Square-free decomposition of a monic polynomial: pairs `(s_i, i)` with
/// `g = prod s_i^i` and each `s_i` square-free.
fn squarefree(f: &FieldCtx, g: &Poly) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    if g.deg() == 0 {
        return out;
    }
    let p = f.characteristic() as usize;
    let dg = g.derivative(f);
    if dg.is_zero() {
        for (s, m) in squarefree(f, &pth_root(f, g)) {
            out.push((s, m * p));
        }
        return out;
    }
    let mut c = g.gcd(f, &dg);
    let mut w = g.divrem(f, &c).unwrap().0;
    let mut i = 1;
    while w.deg() > 0 {
        let y = w.gcd(f, &c);
        let z = w.divrem(f, &y).unwrap().0;
        if z.deg() > 0 {
            out.push((z.monic(f), i));
        }
        i += 1;
        w = y;
        c = c.divrem(f, &w).unwrap().0;
    }
    if c.deg() > 0 {
        for (s, m) in squarefree(f, &pth_root(f, &c.monic(f))) {
            out.push((s, m * p));
        }
    }
    out
}

/// `h` with `h^p = g`, assuming `g` is a polynomial in `x^p`.
fn pth_root(f: &FieldCtx, g: &Poly) -> Poly {
    let p = f.characteristic() as usize;
    // Inverse Frobenius on coefficients: a -> a^(p^(m-1)).
    let m = f.degree();
    let root = |a: Fe| f.frobenius(a, f.characteristic() as u64, m - 1).unwrap();
    Poly::from_coeffs(g.coeffs().iter().step_by(p).map(|&c| root(c)).collect())
}

fn distinct_degree(f: &FieldCtx, g: &Poly) -> Vec<(usize, Poly)> {
    let q = f.order() as u128;
    let x = Poly::x(f);
    let mut out = Vec::new();
    let mut h = g.clone();
    let mut xp = x.clone();
    let mut d = 0;
    while h.deg() >= 2 * (d + 1) {
        d += 1;
        xp = xp.powmod(f, q, &h);
        let gd = h.gcd(f, &xp.sub(f, &x));
        if gd.deg() > 0 {
            h = h.divrem(f, &gd).unwrap().0;
            xp = xp.rem(f, &h).unwrap();
            out.push((d, gd));
        }
    }
    if h.deg() > 0 {
        out.push((h.deg(), h.monic(f)));
    }
    out
}

fn equal_degree(f: &FieldCtx, g: &Poly, d: usize, rng: &mut ChaCha8Rng) -> Vec<Poly> {
    let n = g.deg();
    if n == d {
        return vec![g.monic(f)];
    }
    loop {
        let a = random_poly(f, n, rng);
        let b = splitting_map(f, &a, d, g);
        let h = if f.characteristic() == 2 {
            g.gcd(f, &b)
        } else {
            g.gcd(f, &b.sub(f, &Poly::one(f)))
        };
        if h.deg() > 0 && h.deg() < n {
            let other = g.divrem(f, &h).unwrap().0;
            let mut out = equal_degree(f, &h, d, rng);
            out.extend(equal_degree(f, &other.monic(f), d, rng));
            return out;
        }
    }
}

fn random_poly(f: &FieldCtx, n: usize, rng: &mut ChaCha8Rng) -> Poly {
    Poly::from_coeffs((0..n).map(|_| f.element(rng.gen_range(0..f.order()))).collect())
}

/// Odd characteristic: `a^((Q^d - 1)/2)`, computed as the norm-like product
/// `a^(1 + Q + ... + Q^(d-1))` raised to `(Q-1)/2` to keep exponents small.
/// Characteristic two: the trace `a + a^2 + ... + a^(2^(m d - 1))`.
fn splitting_map(f: &FieldCtx, a: &Poly, d: usize, g: &Poly) -> Poly {
    let q = f.order() as u128;
    if f.characteristic() == 2 {
        let steps = f.degree() as usize * d;
        let mut t = a.rem(f, g).unwrap();
        let mut acc = t.clone();
        for _ in 1..steps {
            t = t.mulmod(f, &t, g);
            acc = acc.add(f, &t);
        }
        return acc;
    }
    let mut conj = a.rem(f, g).unwrap();
    let mut prod = conj.clone();
    for _ in 1..d {
        conj = conj.powmod(f, q, g);
        prod = prod.mulmod(f, &conj, g);
    }
    prod.powmod(f, (q - 1) / 2, g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::{make_field, poly::monic_irreducibles};

    fn product(f: &FieldCtx, fs: &[(Poly, usize)]) -> Poly {
        let mut acc = Poly::one(f);
        for (p, m) in fs {
            for _ in 0..*m {
                acc = acc.mul(f, p);
            }
        }
        acc
    }

    #[test]
    fn x2_minus_1() {
        let f = make_field(5, 1).unwrap();
        let g = Poly::parse(&f, "4,0,1").unwrap();
        let fs = factor_poly(&f, &g).unwrap();
        let want = vec![(Poly::parse(&f, "1,1").unwrap(), 1), (Poly::parse(&f, "4,1").unwrap(), 1)];
        assert_eq!(fs, want);
    }

    #[test]
    fn quintic_from_worked_example() {
        let f = make_field(5, 1).unwrap();
        let g = Poly::parse(&f, "1,3,0,0,4,1").unwrap();
        let fs = factor_poly(&f, &g).unwrap();
        assert_eq!(
            fs,
            vec![(Poly::parse(&f, "2,4,1").unwrap(), 1), (Poly::parse(&f, "3,3,0,1").unwrap(), 1)]
        );
    }

    #[test]
    fn zero_is_error() {
        let f = make_field(5, 1).unwrap();
        assert_eq!(factor_poly(&f, &Poly::zero()).unwrap_err(), Error::ZeroPolynomial);
    }

    #[test]
    fn moduli_are_irreducible() {
        for (p, m) in [(2, 3), (3, 4), (5, 3), (2, 6), (7, 2)] {
            let big = make_field(p, m).unwrap();
            let fp = make_field(p, 1).unwrap();
            let g = Poly::from_coeffs(big.modulus().iter().map(|&c| fp.from_int(c as i64)).collect());
            assert_eq!(factor_poly(&fp, &g).unwrap(), vec![(g.clone(), 1)]);
        }
    }

    #[test]
    fn repeated_and_inseparable_factors() {
        for (p, m) in [(2, 1), (3, 1), (2, 2), (3, 2)] {
            let f = make_field(p, m).unwrap();
            let a = &monic_irreducibles(&f, 1)[1];
            let b = &monic_irreducibles(&f, 2)[0];
            let input = vec![(a.clone(), p as usize + 1), (b.clone(), p as usize)];
            let g = product(&f, &input);
            let mut want = input.clone();
            want.sort_by(|x, y| x.0.canonical_cmp(&y.0));
            assert_eq!(factor_poly(&f, &g).unwrap(), want, "GF({p}^{m})");
        }
    }

    #[test]
    fn splits_over_extension() {
        let f = make_field(3, 2).unwrap();
        let g = Poly::parse(&f, "1;0;1").unwrap(); // x^2 + 1 splits in GF(9)
        let r = roots(&f, &g).unwrap();
        assert_eq!(r.len(), 2);
        for x in r {
            assert!(g.eval(&f, x).is_zero());
        }
    }
}
