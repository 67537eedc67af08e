use std::collections::HashMap;
use std::sync::Arc;

use super::factor::roots;
use super::field::{Fe, Field};
use super::poly::Poly;
use crate::error::{Error, Result};

/// Embedding of a subfield into an extension, fixed by the image of the
/// subfield's power-basis generator.
#[derive(Clone, Debug)]
pub struct TowerMap {
    pub sub: Field,
    pub sup: Field,
    pub gen_image: Fe,
    images: Vec<Fe>,
    preimages: HashMap<Fe, Fe>,
}

impl TowerMap {
    /// The image of the generator is the root of `sub`'s modulus in `sup`
    /// that comes first in canonical order.
    pub fn new(sub: &Field, sup: &Field) -> Result<TowerMap> {
        if sub.characteristic() != sup.characteristic() || sup.degree() % sub.degree() != 0 {
            return Err(Error::NoEmbedding(format!("{sub:?} into {sup:?}")));
        }
        let gen_image = if sub.degree() == 1 {
            sup.zero()
        } else {
            let modulus = Poly::from_coeffs(sub.modulus().iter().map(|&c| sup.from_int(c as i64)).collect());
            *roots(sup, &modulus)?
                .first()
                .ok_or_else(|| Error::NoEmbedding("modulus has no root".into()))?
        };
        let mut images = Vec::with_capacity(sub.order() as usize);
        for a in sub.elements() {
            let cs = sub.coeffs(a);
            let mut acc = sup.zero();
            let mut pw = sup.one();
            for c in cs {
                acc = sup.add(acc, sup.mul(sup.from_int(c as i64), pw));
                pw = sup.mul(pw, gen_image);
            }
            images.push(acc);
        }
        let preimages = sub.elements().zip(images.iter()).map(|(a, &b)| (b, a)).collect();
        Ok(TowerMap { sub: Arc::clone(sub), sup: Arc::clone(sup), gen_image, images, preimages })
    }

    #[inline]
    pub fn embed(&self, a: Fe) -> Fe {
        self.images[a.index() as usize]
    }

    /// Preimage of `b` if it lies in the subfield.
    pub fn restrict(&self, b: Fe) -> Option<Fe> {
        self.preimages.get(&b).copied()
    }

    pub fn contains(&self, b: Fe) -> bool {
        self.preimages.contains_key(&b)
    }

    /// Order of the subfield, i.e. the `q` for Frobenius relative to it.
    pub fn base_order(&self) -> u64 {
        self.sub.order() as u64
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::make_field;

    #[test]
    fn unital_and_prime_subfield() {
        let f5 = make_field(5, 1).unwrap();
        let f25 = make_field(5, 2).unwrap();
        let t = TowerMap::new(&f5, &f25).unwrap();
        assert_eq!(t.embed(f5.zero()), f25.zero());
        assert_eq!(t.embed(f5.one()), f25.one());
        assert_eq!(t.embed(f5.from_int(3)), f25.from_int(3));
    }

    #[test]
    fn modulus_vanishes_at_generator_image() {
        let f25 = make_field(5, 2).unwrap();
        let big = make_field(5, 6).unwrap();
        let t = TowerMap::new(&f25, &big).unwrap();
        let m = Poly::from_coeffs(f25.modulus().iter().map(|&c| big.from_int(c as i64)).collect());
        assert!(m.eval(&big, t.gen_image).is_zero());
        // ring homomorphism on all pairs
        for a in f25.elements() {
            for b in f25.elements() {
                assert_eq!(t.embed(f25.mul(a, b)), big.mul(t.embed(a), t.embed(b)));
                assert_eq!(t.embed(f25.add(a, b)), big.add(t.embed(a), t.embed(b)));
            }
            assert_eq!(t.restrict(t.embed(a)), Some(a));
        }
    }

    #[test]
    fn incompatible_degrees() {
        let a = make_field(2, 2).unwrap();
        let b = make_field(2, 3).unwrap();
        assert!(TowerMap::new(&a, &b).is_err());
    }
}
