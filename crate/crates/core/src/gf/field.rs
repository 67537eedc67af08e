//! Table-backed arithmetic in GF(p^m).
//!
//! Elements are stored as `Fe`, an index into the field. The index of the
//! element with coefficient vector `(c_0, ..., c_{m-1})` (constant term first,
//! in the power basis of the modulus) is `sum c_i p^(m-1-i)`, so comparing
//! indices compares coefficient vectors lexicographically, constant term
//! first. This is the canonical element order used for every deterministic
//! choice in the crate.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::poly::{self, Poly};
use crate::error::{Error, Result};

/// Largest supported field order. Log/exp/Zech tables are kept in memory.
pub const MAX_ORDER: u32 = 1 << 22;
/// Fields at most this large also carry full addition/multiplication tables.
pub const SMALL_ORDER: u32 = 256;

const NONE: u32 = u32::MAX;

/// A field element, meaningful only together with the [`FieldCtx`] it came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct Fe(pub(crate) u32);

impl Fe {
    pub const ZERO: Fe = Fe(0);

    #[inline]
    pub fn index(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// Shared handle to a field.
pub type Field = Arc<FieldCtx>;

/// An immutable finite field GF(p^m) with its defining modulus.
pub struct FieldCtx {
    p: u32,
    m: u32,
    order: u32,
    modulus: Vec<u32>,
    weights: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
    zech: Vec<u32>,
    neg_one_log: u32,
    add_tab: Vec<u8>,
    mul_tab: Vec<u8>,
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}) mod [{}]", self.p, self.m, poly::format_residues(&self.modulus))
    }
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.modulus == other.modulus
    }
}

impl Eq for FieldCtx {}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits a prime power `q` into `(p, m)`.
pub fn prime_power(q: u64) -> Result<(u32, u32)> {
    if q < 2 {
        return Err(Error::NotPrimePower(q));
    }
    let mut p = 2;
    while q % p != 0 {
        p += 1;
    }
    let mut m = 0;
    let mut r = q;
    while r % p == 0 {
        r /= p;
        m += 1;
    }
    if r != 1 {
        return Err(Error::NotPrimePower(q));
    }
    Ok((p as u32, m))
}

fn check_order(p: u32, m: u32) -> Result<u32> {
    if !is_prime(p as u64) || p >= 1 << 16 {
        return Err(Error::NotPrime(p as u64));
    }
    if m == 0 || m > 30 {
        return Err(Error::DegreeOutOfRange(m));
    }
    let order = (p as u128).pow(m);
    if order > MAX_ORDER as u128 {
        return Err(Error::FieldTooLarge { order, limit: MAX_ORDER });
    }
    Ok(order as u32)
}

/// Builds GF(p^m) using the lexicographically smallest monic irreducible
/// polynomial of degree `m` (coefficients compared constant term first).
/// For `m = 1` the modulus is `x` and elements are residues mod p.
pub fn make_field(p: u32, m: u32) -> Result<Field> {
    check_order(p, m)?;
    if m == 1 {
        return FieldCtx::build(p, vec![0, 1]);
    }
    let fp = make_field(p, 1)?;
    let mut digits = vec![0u32; m as usize];
    loop {
        // digits[0] is the most significant position: constant term.
        let mut coeffs: Vec<Fe> = digits.iter().map(|&c| Fe(c)).collect();
        coeffs.push(Fe(1));
        let cand = Poly::from_coeffs(coeffs);
        if poly::is_irreducible(&fp, &cand) {
            let mut modulus = digits.clone();
            modulus.push(1);
            return FieldCtx::build(p, modulus);
        }
        let mut i = m as usize;
        loop {
            if i == 0 {
                unreachable!("an irreducible polynomial of every degree exists");
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < p {
                break;
            }
            digits[i] = 0;
        }
    }
}

/// Builds a field from an explicit modulus (residues, constant term first).
pub fn field_with_modulus(p: u32, modulus: &[u32]) -> Result<Field> {
    if modulus.len() < 2 || *modulus.last().unwrap() != 1 {
        return Err(Error::Parse("modulus must be monic of degree >= 1".into()));
    }
    let m = (modulus.len() - 1) as u32;
    check_order(p, m)?;
    if modulus.iter().any(|&c| c >= p) {
        return Err(Error::Parse("modulus coefficient out of range".into()));
    }
    if m > 1 {
        let fp = make_field(p, 1)?;
        let f = Poly::from_coeffs(modulus.iter().map(|&c| Fe(c)).collect());
        if !poly::is_irreducible(&fp, &f) {
            return Err(Error::NotIrreducible);
        }
        FieldCtx::build(p, modulus.to_vec())
    } else {
        // Any linear modulus gives the same residue arithmetic.
        FieldCtx::build(p, vec![0, 1])
    }
}

impl FieldCtx {
    fn build(p: u32, modulus: Vec<u32>) -> Result<Field> {
        let m = (modulus.len() - 1) as u32;
        let order = check_order(p, m)?;
        let weights: Vec<u32> = (0..m).map(|i| p.pow(m - 1 - i)).collect();
        let mut ctx = FieldCtx {
            p,
            m,
            order,
            modulus,
            weights,
            exp: Vec::new(),
            log: Vec::new(),
            zech: Vec::new(),
            neg_one_log: 0,
            add_tab: Vec::new(),
            mul_tab: Vec::new(),
        };
        ctx.build_tables();
        Ok(Arc::new(ctx))
    }

    fn digits_of(&self, a: u32) -> Vec<u32> {
        self.weights.iter().map(|&w| (a / w) % self.p).collect()
    }

    fn index_of(&self, digits: &[u32]) -> u32 {
        digits.iter().zip(&self.weights).map(|(&d, &w)| d * w).sum()
    }

    fn vec_mul(&self, a: u32, b: u32) -> u32 {
        let p = self.p as u64;
        let m = self.m as usize;
        if m == 1 {
            return ((a as u64 * b as u64) % p) as u32;
        }
        let da = self.digits_of(a);
        let db = self.digits_of(b);
        let mut prod = vec![0u64; 2 * m - 1];
        for i in 0..m {
            for j in 0..m {
                prod[i + j] = (prod[i + j] + da[i] as u64 * db[j] as u64) % p;
            }
        }
        for k in (m..2 * m - 1).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for i in 0..m {
                let sub = c * self.modulus[i] as u64 % p;
                prod[k - m + i] = (prod[k - m + i] + p - sub) % p;
            }
        }
        let d: Vec<u32> = prod[..m].iter().map(|&c| c as u32).collect();
        self.index_of(&d)
    }

    fn build_tables(&mut self) {
        let n = self.order - 1;
        let one = self.weights[0];
        let mut exp = vec![0u32; 2 * n as usize];
        let mut log = vec![NONE; self.order as usize];
        // Primitive element: first candidate in canonical order whose order
        // is not a proper divisor of n.
        let mut primes = Vec::new();
        let mut r = n;
        let mut d = 2;
        while d * d <= r {
            if r % d == 0 {
                primes.push(d);
                while r % d == 0 {
                    r /= d;
                }
            }
            d += 1;
        }
        if r > 1 {
            primes.push(r);
        }
        let vec_pow = |g: u32, mut e: u32| {
            let (mut acc, mut b) = (one, g);
            while e > 0 {
                if e & 1 == 1 {
                    acc = self.vec_mul(acc, b);
                }
                b = self.vec_mul(b, b);
                e >>= 1;
            }
            acc
        };
        let g = (1..self.order)
            .find(|&g| primes.iter().all(|&r| vec_pow(g, n / r) != one))
            .expect("the multiplicative group is cyclic");
        // Walk the powers of g on digit vectors to avoid per-step allocation.
        let m = self.m as usize;
        let p64 = self.p as u64;
        let gd: Vec<u64> = self.digits_of(g).into_iter().map(u64::from).collect();
        let mut x: Vec<u64> = self.digits_of(one).into_iter().map(u64::from).collect();
        let mut prod = vec![0u64; 2 * m - 1];
        for k in 0..n {
            exp[k as usize] = x.iter().zip(&self.weights).map(|(&d, &w)| d as u32 * w).sum();
            prod.iter_mut().for_each(|c| *c = 0);
            for i in 0..m {
                if x[i] == 0 {
                    continue;
                }
                for j in 0..m {
                    prod[i + j] += x[i] * gd[j];
                }
            }
            for k2 in (m..2 * m - 1).rev() {
                let c = prod[k2] % p64;
                if c == 0 {
                    continue;
                }
                for i in 0..m {
                    prod[k2 - m + i] += (p64 - c) * self.modulus[i] as u64;
                }
            }
            for i in 0..m {
                x[i] = prod[i] % p64;
            }
        }
        for k in 0..n {
            exp[(k + n) as usize] = exp[k as usize];
            log[exp[k as usize] as usize] = k;
        }
        self.exp = exp;
        self.log = log;
        let mut zech = vec![NONE; n as usize];
        for d in 0..n {
            // adding one only changes the constant-term digit
            let e = self.exp[d as usize];
            let c0 = e / one;
            let s = e - c0 * one + ((c0 + 1) % self.p) * one;
            if s != 0 {
                zech[d as usize] = self.log[s as usize];
            }
        }
        self.zech = zech;
        self.neg_one_log = if self.p == 2 { 0 } else { n / 2 };
        if self.order <= SMALL_ORDER {
            let q = self.order as usize;
            let mut add = vec![0u8; q * q];
            let mut mul = vec![0u8; q * q];
            for a in 0..q {
                for b in 0..q {
                    add[a * q + b] = self.add(Fe(a as u32), Fe(b as u32)).0 as u8;
                    mul[a * q + b] = self.mul(Fe(a as u32), Fe(b as u32)).0 as u8;
                }
            }
            self.add_tab = add;
            self.mul_tab = mul;
        }
    }

    #[inline]
    pub fn characteristic(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.m
    }

    #[inline]
    pub fn order(&self) -> u32 {
        self.order
    }

    /// Modulus residues, constant term first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    #[inline]
    pub fn zero(&self) -> Fe {
        Fe(0)
    }

    #[inline]
    pub fn one(&self) -> Fe {
        Fe(self.weights[0])
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> Fe {
        let r = n.rem_euclid(self.p as i64) as u32;
        Fe(r * self.weights[0])
    }

    /// Element with the given coefficient vector (constant term first).
    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<Fe> {
        if coeffs.len() > self.m as usize || coeffs.iter().any(|&c| c >= self.p) {
            return Err(Error::Parse(format!("bad coefficient vector {coeffs:?} for {self:?}")));
        }
        let mut d = coeffs.to_vec();
        d.resize(self.m as usize, 0);
        Ok(Fe(self.index_of(&d)))
    }

    pub fn coeffs(&self, a: Fe) -> Vec<u32> {
        self.digits_of(a.0)
    }

    /// Class of the polynomial variable: the generator of the power basis.
    pub fn generator(&self) -> Fe {
        if self.m == 1 {
            // Residue of x modulo x.
            Fe(0)
        } else {
            Fe(self.weights[1])
        }
    }

    /// A fixed primitive element (generator of the multiplicative group).
    pub fn primitive(&self) -> Fe {
        Fe(self.exp[1])
    }

    pub fn element(&self, index: u32) -> Fe {
        assert!(index < self.order, "element index out of range");
        Fe(index)
    }

    /// All elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = Fe> {
        (0..self.order).map(Fe)
    }

    /// Prime-field residue if `a` lies in the prime subfield.
    pub fn as_prime(&self, a: Fe) -> Option<u32> {
        if a.0 % self.weights[0] == 0 {
            Some(a.0 / self.weights[0])
        } else {
            None
        }
    }

    #[inline]
    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        if a.0 == 0 {
            return b;
        }
        if b.0 == 0 {
            return a;
        }
        let n = self.order - 1;
        let la = self.log[a.0 as usize];
        let lb = self.log[b.0 as usize];
        let d = if lb >= la { lb - la } else { lb + n - la };
        let z = self.zech[d as usize];
        if z == NONE {
            Fe(0)
        } else {
            Fe(self.exp[(la + z) as usize])
        }
    }

    #[inline]
    pub fn neg(&self, a: Fe) -> Fe {
        if a.0 == 0 || self.p == 2 {
            return a;
        }
        let l = self.log[a.0 as usize] + self.neg_one_log;
        Fe(self.exp[l as usize])
    }

    #[inline]
    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        if a.0 == 0 || b.0 == 0 {
            return Fe(0);
        }
        let l = self.log[a.0 as usize] + self.log[b.0 as usize];
        Fe(self.exp[l as usize])
    }

    pub fn inv(&self, a: Fe) -> Result<Fe> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        let n = self.order - 1;
        let l = self.log[a.0 as usize];
        Ok(Fe(self.exp[((n - l) % n) as usize]))
    }

    pub fn div(&self, a: Fe, b: Fe) -> Result<Fe> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^e`; negative exponents invert first.
    pub fn pow(&self, a: Fe, e: i64) -> Result<Fe> {
        if e == 0 {
            return Ok(self.one());
        }
        if a.0 == 0 {
            return if e > 0 { Ok(Fe(0)) } else { Err(Error::DivisionByZero) };
        }
        let n = (self.order - 1) as i128;
        let l = self.log[a.0 as usize] as i128;
        let k = (l * (e as i128)).rem_euclid(n);
        Ok(Fe(self.exp[k as usize]))
    }

    /// `a^(base_q^k)`. `base_q` must be a power of the characteristic.
    pub fn frobenius(&self, a: Fe, base_q: u64, k: u32) -> Result<Fe> {
        let (p, _) = prime_power(base_q).map_err(|_| Error::IncompatibleBase(base_q))?;
        if p != self.p {
            return Err(Error::IncompatibleBase(base_q));
        }
        if a.0 == 0 {
            return Ok(a);
        }
        let n = (self.order - 1) as u128;
        let mut e: u128 = 1;
        let b = base_q as u128 % n;
        for _ in 0..k {
            e = e * b % n;
        }
        let l = self.log[a.0 as usize] as u128;
        Ok(Fe(self.exp[(l * e % n) as usize]))
    }

    /// Quadratic-residue test in odd characteristic: `a^((|F|-1)/2) == 1`.
    pub fn is_square(&self, a: Fe) -> Result<bool> {
        if self.p == 2 {
            return Err(Error::EvenCharacteristic("square classes"));
        }
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        let half = ((self.order - 1) / 2) as i64;
        Ok(self.pow(a, half)? == self.one())
    }

    /// Smallest `k >= 1` with `a^(q^k) == a`, where `q = p^base_exp`.
    pub fn degree_over(&self, a: Fe, base_exp: u32) -> u32 {
        let q = (self.p as u64).pow(base_exp);
        let mut x = a;
        for k in 1..=self.m {
            x = self.frobenius(x, q, 1).expect("base is a power of p");
            if x == a {
                return k;
            }
        }
        self.m
    }

    /// Absolute trace to the prime field.
    pub fn trace(&self, a: Fe) -> Fe {
        let mut s = Fe(0);
        let mut x = a;
        for _ in 0..self.m {
            s = self.add(s, x);
            x = self.frobenius(x, self.p as u64, 1).unwrap();
        }
        s
    }

    /// Addition table (row-major, `order x order`) for fields of order <= 256.
    pub fn add_table(&self) -> Option<&[u8]> {
        (!self.add_tab.is_empty()).then_some(&self.add_tab[..])
    }

    /// Multiplication table, same layout as [`Self::add_table`].
    pub fn mul_table(&self) -> Option<&[u8]> {
        (!self.mul_tab.is_empty()).then_some(&self.mul_tab[..])
    }

    /// Text form: comma-separated residues, constant term first.
    pub fn format(&self, a: Fe) -> String {
        poly::format_residues(&self.coeffs(a))
    }

    pub fn parse(&self, s: &str) -> Result<Fe> {
        let r = poly::parse_residues(s, self.p)?;
        if r.len() > self.m as usize {
            // Allow trailing zeros beyond the degree.
            if r[self.m as usize..].iter().any(|&c| c != 0) {
                return Err(Error::Parse(format!("element {s:?} has too many coefficients")));
            }
            return self.from_coeffs(&r[..self.m as usize]);
        }
        self.from_coeffs(&r)
    }
}

/// A field element bundled with its field, for context-checked arithmetic.
#[derive(Clone)]
pub struct FieldElem {
    pub field: Field,
    pub value: Fe,
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.field.format(self.value))
    }
}

impl PartialEq for FieldElem {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value && *self.field == *other.field
    }
}

impl FieldElem {
    pub fn new(field: &Field, value: Fe) -> Self {
        FieldElem { field: field.clone(), value }
    }

    fn same(&self, other: &FieldElem) -> Result<()> {
        if Arc::ptr_eq(&self.field, &other.field) || *self.field == *other.field {
            Ok(())
        } else {
            Err(Error::MixedFields)
        }
    }

    pub fn add(&self, other: &FieldElem) -> Result<FieldElem> {
        self.same(other)?;
        Ok(FieldElem::new(&self.field, self.field.add(self.value, other.value)))
    }

    pub fn sub(&self, other: &FieldElem) -> Result<FieldElem> {
        self.same(other)?;
        Ok(FieldElem::new(&self.field, self.field.sub(self.value, other.value)))
    }

    pub fn mul(&self, other: &FieldElem) -> Result<FieldElem> {
        self.same(other)?;
        Ok(FieldElem::new(&self.field, self.field.mul(self.value, other.value)))
    }

    pub fn div(&self, other: &FieldElem) -> Result<FieldElem> {
        self.same(other)?;
        Ok(FieldElem::new(&self.field, self.field.div(self.value, other.value)?))
    }

    pub fn inv(&self) -> Result<FieldElem> {
        Ok(FieldElem::new(&self.field, self.field.inv(self.value)?))
    }

    pub fn pow(&self, e: i64) -> Result<FieldElem> {
        Ok(FieldElem::new(&self.field, self.field.pow(self.value, e)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_basics() {
        let f = make_field(5, 1).unwrap();
        assert_eq!(f.order(), 5);
        assert_eq!(f.modulus(), &[0, 1]);
        let two = f.from_int(2);
        assert_eq!(f.inv(two).unwrap(), f.from_int(3));
        assert_eq!(f.pow(two, 4).unwrap(), f.one());
        assert!(f.is_square(f.from_int(4)).unwrap());
        assert!(!f.is_square(f.from_int(2)).unwrap());
    }

    #[test]
    fn gf25_group_order() {
        let f = make_field(5, 2).unwrap();
        assert_eq!(f.order(), 25);
        for a in f.elements().skip(1) {
            assert_eq!(f.pow(a, 24).unwrap(), f.one());
        }
        // x^2 + x + 1 is the lexicographically first irreducible quadratic mod 5.
        assert_eq!(f.modulus(), &[1, 1, 1]);
        let g = f.primitive();
        assert!(!f.is_square(g).unwrap());
        let a5 = f.frobenius(g, 5, 1).unwrap();
        assert_eq!(a5, f.pow(g, 5).unwrap());
        assert_ne!(a5, g);
    }

    #[test]
    fn gf8_modulus_and_inverse() {
        let f = make_field(2, 3).unwrap();
        assert_eq!(f.modulus(), &[1, 0, 1, 1]);
        let z = f.generator();
        assert_eq!(f.mul(z, f.inv(z).unwrap()), f.one());
        assert!(f.is_square(z).is_err());
    }

    #[test]
    fn errors() {
        assert_eq!(make_field(6, 1).unwrap_err(), Error::NotPrime(6));
        assert_eq!(make_field(5, 0).unwrap_err(), Error::DegreeOutOfRange(0));
        assert_eq!(make_field(5, 31).unwrap_err(), Error::DegreeOutOfRange(31));
        assert!(matches!(make_field(2, 30).unwrap_err(), Error::FieldTooLarge { .. }));
        let f = make_field(5, 1).unwrap();
        assert_eq!(f.inv(f.zero()).unwrap_err(), Error::DivisionByZero);
        assert_eq!(f.frobenius(f.one(), 3, 1).unwrap_err(), Error::IncompatibleBase(3));
        let g = make_field(7, 1).unwrap();
        let a = FieldElem::new(&f, f.one());
        let b = FieldElem::new(&g, g.one());
        assert_eq!(a.add(&b).unwrap_err(), Error::MixedFields);
        assert!(field_with_modulus(2, &[1, 0, 0, 1]).is_err());
    }

    #[test]
    fn canonical_order_matches_coefficients() {
        let f = make_field(3, 2).unwrap();
        let elems: Vec<Vec<u32>> = f.elements().map(|a| f.coeffs(a)).collect();
        let mut sorted = elems.clone();
        sorted.sort();
        assert_eq!(elems, sorted);
        assert_eq!(f.coeffs(f.one()), vec![1, 0]);
        assert_eq!(f.parse("2,1").unwrap(), f.from_coeffs(&[2, 1]).unwrap());
    }

    #[test]
    fn log_tables_agree_with_schoolbook_product() {
        for (p, m) in [(2, 4), (3, 3), (5, 2), (7, 2)] {
            let f = make_field(p, m).unwrap();
            for a in f.elements() {
                for b in f.elements() {
                    assert_eq!(f.mul(a, b).0, f.vec_mul(a.0, b.0));
                    let (da, db) = (f.coeffs(a), f.coeffs(b));
                    let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                    assert_eq!(f.coeffs(f.add(a, b)), sum);
                }
            }
        }
    }

    #[test]
    fn prime_power_split() {
        assert_eq!(prime_power(9).unwrap(), (3, 2));
        assert_eq!(prime_power(8).unwrap(), (2, 3));
        assert!(prime_power(12).is_err());
    }
}
