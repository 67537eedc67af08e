//! Exact arithmetic in GF(p^m): fields, embeddings, polynomials and
//! polynomial factorization.

mod factor;
mod field;
pub mod poly;
mod tower;

pub use factor::{factor_poly, roots};
pub use field::{
    field_with_modulus, is_prime, make_field, prime_power, Fe, Field, FieldCtx, FieldElem, MAX_ORDER,
    SMALL_ORDER,
};
pub use poly::Poly;
pub use tower::TowerMap;

/// The field GF(q) for a prime power `q`.
pub fn field_of_order(q: u64) -> crate::Result<Field> {
    let (p, m) = prime_power(q)?;
    make_field(p, m)
}

/// GF(q^k) together with the embedding of GF(q) into it.
pub fn extension(base: &Field, k: u32) -> crate::Result<(Field, TowerMap)> {
    let big = make_field(base.characteristic(), base.degree() * k)?;
    let map = TowerMap::new(base, &big)?;
    Ok((big, map))
}
