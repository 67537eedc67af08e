use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{Fe, FieldCtx};

/// Largest `|F|^r` accepted by [`enumerate_projective`].
pub const ENUMERATION_GUARD: u64 = 100_000_000;

/// A projective point, normalized so its first nonzero coordinate is one.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ProjPoint {
    coords: Vec<Fe>,
}

impl ProjPoint {
    pub fn new(f: &FieldCtx, coords: Vec<Fe>) -> Result<ProjPoint> {
        let lead = coords
            .iter()
            .copied()
            .find(|c| !c.is_zero())
            .ok_or_else(|| Error::Degenerate("all-zero coordinate vector".into()))?;
        let inv = f.inv(lead)?;
        Ok(ProjPoint { coords: coords.into_iter().map(|c| f.mul(c, inv)).collect() })
    }

    pub fn coords(&self) -> &[Fe] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len() - 1
    }

    /// Coordinatewise map followed by renormalization.
    pub fn map(&self, f: &FieldCtx, g: impl Fn(Fe) -> Fe) -> ProjPoint {
        ProjPoint::new(f, self.coords.iter().map(|&c| g(c)).collect()).expect("map of a point stays nonzero")
    }

    pub fn to_text(&self, f: &FieldCtx) -> String {
        self.coords.iter().map(|&c| f.format(c)).collect::<Vec<_>>().join(":")
    }

    pub fn parse(f: &FieldCtx, s: &str) -> Result<ProjPoint> {
        let coords: Result<Vec<Fe>> = s.split(':').map(|c| f.parse(c.trim())).collect();
        ProjPoint::new(f, coords?)
    }
}

/// All points of P^r over `f`, grouped by the position of the leading one,
/// then lexicographically in the remaining coordinates.
pub fn enumerate_projective(f: &FieldCtx, r: usize) -> Result<Vec<ProjPoint>> {
    let q = f.order() as u64;
    let size = (q as u128).pow(r as u32);
    if size > ENUMERATION_GUARD as u128 {
        return Err(Error::Guard(format!("P^{r} over a field of order {q} has too many points")));
    }
    let mut out = Vec::new();
    for lead in 0..=r {
        let free = r - lead;
        let count = q.pow(free as u32);
        for idx in 0..count {
            let mut coords = vec![Fe::ZERO; r + 1];
            coords[lead] = f.one();
            let mut rem = idx;
            for pos in (lead + 1..=r).rev() {
                coords[pos] = f.element((rem % q) as u32);
                rem /= q;
            }
            out.push(ProjPoint { coords });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::make_field;

    #[test]
    fn p1_over_f2() {
        let f = make_field(2, 1).unwrap();
        let pts = enumerate_projective(&f, 1).unwrap();
        let txt: Vec<String> = pts.iter().map(|p| p.to_text(&f)).collect();
        assert_eq!(txt, ["1:0", "1:1", "0:1"]);
    }

    #[test]
    fn counts_and_guard() {
        let f5 = make_field(5, 1).unwrap();
        assert_eq!(enumerate_projective(&f5, 2).unwrap().len(), 31);
        let f9 = make_field(3, 2).unwrap();
        assert_eq!(enumerate_projective(&f9, 4).unwrap().len(), 7381);
        let big = make_field(2, 20).unwrap();
        assert!(matches!(enumerate_projective(&big, 2), Err(Error::Guard(_))));
    }

    #[test]
    fn normalization() {
        let f = make_field(7, 1).unwrap();
        let p = ProjPoint::new(&f, vec![f.zero(), f.from_int(3), f.from_int(6)]).unwrap();
        assert_eq!(p.to_text(&f), "0:1:2");
        assert_eq!(ProjPoint::parse(&f, "0:3:6").unwrap(), p);
        assert!(ProjPoint::new(&f, vec![f.zero(); 3]).is_err());
    }
}
