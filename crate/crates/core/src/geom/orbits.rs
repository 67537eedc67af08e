//! Galois orbits of points on the conic `xz = y^2`.
//!
//! All orbits of one configuration live in a single extension GF(q^L),
//! `L` the lcm of the orbit degrees, with one fixed embedding of GF(q).

use serde::{Deserialize, Serialize};

use super::incidence::collinear;
use super::point::ProjPoint;
use crate::error::{Error, Result};
use crate::gf::{make_field, Fe, Field, TowerMap};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Orbit {
    pub degree: u32,
    /// Parameter of the representative `(1 : t : t^2)`, in the common field.
    pub t: Fe,
    /// The representative followed by its successive Frobenius conjugates.
    pub points: Vec<ProjPoint>,
}

#[derive(Clone, Debug)]
pub struct OrbitSet {
    pub base: Field,
    pub big: Field,
    pub tower: TowerMap,
    pub orbits: Vec<Orbit>,
    pub seed: u64,
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl OrbitSet {
    pub fn q(&self) -> u64 {
        self.base.order() as u64
    }

    /// `[GF(q^L) : GF(q)]`.
    pub fn big_degree(&self) -> u32 {
        self.big.degree() / self.base.degree()
    }

    /// `a^(q^k)` in the common field.
    pub fn frob(&self, a: Fe, k: u32) -> Fe {
        self.big.frobenius(a, self.q(), k).expect("q is a power of the characteristic")
    }

    /// All orbit points in order: orbit by orbit, conjugates in Frobenius order.
    pub fn all_points(&self) -> Vec<ProjPoint> {
        self.orbits.iter().flat_map(|o| o.points.iter().cloned()).collect()
    }

    /// Rebuilds the set from recorded orbit parameters (for model replay).
    pub fn from_parameters(base: &Field, degrees: &[u32], ts: &[Fe], seed: u64) -> Result<OrbitSet> {
        let (big, tower) = common_field(base, degrees)?;
        let mut set = OrbitSet { base: base.clone(), big, tower, orbits: Vec::new(), seed };
        for (&d, &t) in degrees.iter().zip(ts) {
            let orbit = set.orbit_of(d, t)?;
            set.orbits.push(orbit);
        }
        set.check_general_position()?;
        Ok(set)
    }

    fn orbit_of(&self, d: u32, t: Fe) -> Result<Orbit> {
        if self.big.degree_over(t, self.base.degree()) != d {
            return Err(Error::InvalidParameters(format!("orbit parameter does not have degree {d}")));
        }
        let points = (0..d)
            .map(|k| {
                let s = self.frob(t, k);
                ProjPoint::new(&self.big, vec![self.big.one(), s, self.big.mul(s, s)])
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Orbit { degree: d, t, points })
    }

    fn check_general_position(&self) -> Result<()> {
        let pts = self.all_points();
        for i in 0..pts.len() {
            for j in i + 1..pts.len() {
                if pts[i] == pts[j] {
                    return Err(Error::Degenerate("repeated orbit point".into()));
                }
                for k in j + 1..pts.len() {
                    if collinear(&self.big, &pts[i], &pts[j], &pts[k]) {
                        return Err(Error::Degenerate("three orbit points are collinear".into()));
                    }
                }
            }
        }
        Ok(())
    }
}

fn common_field(base: &Field, degrees: &[u32]) -> Result<(Field, TowerMap)> {
    if degrees.is_empty() || degrees.contains(&0) {
        return Err(Error::InvalidParameters(format!("orbit degrees {degrees:?}")));
    }
    let l = degrees.iter().fold(1, |acc, &d| acc / gcd(acc, d) * d);
    let big = make_field(base.characteristic(), base.degree() * l)?;
    let tower = TowerMap::new(base, &big)?;
    Ok((big, tower))
}

/// Picks one orbit of each requested degree on `xz = y^2`. The parameter
/// `t` is the first element of exact degree `d` over GF(q) met when
/// scanning GF(q^d) in canonical order starting at index `seed mod q^d`.
pub fn pick_orbits(base: &Field, degrees: &[u32], seed: u64) -> Result<OrbitSet> {
    let (big, tower) = common_field(base, degrees)?;
    let mut set = OrbitSet { base: base.clone(), big: big.clone(), tower, orbits: Vec::new(), seed };
    let m = base.degree();
    for &d in degrees {
        let small = if d * m == big.degree() { big.clone() } else { make_field(base.characteristic(), m * d)? };
        let into_big = if small.degree() == big.degree() { None } else { Some(TowerMap::new(&small, &big)?) };
        let order = small.order() as u64;
        let start = seed % order;
        let taken: Vec<ProjPoint> = set.all_points();
        let mut found = None;
        for step in 0..order {
            let idx = ((start + step) % order) as u32;
            let t = small.element(idx);
            if small.degree_over(t, m) != d {
                continue;
            }
            let t_big = into_big.as_ref().map_or(t, |e| e.embed(t));
            let orbit = set.orbit_of(d, t_big)?;
            if orbit.points.iter().any(|p| taken.contains(p)) {
                continue;
            }
            found = Some(orbit);
            break;
        }
        let orbit = found.ok_or_else(|| Error::Degenerate(format!("no point of degree {d} on the conic")))?;
        set.orbits.push(orbit);
    }
    set.check_general_position()?;
    Ok(set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::field_of_order;

    #[test]
    fn degree_six_configuration() {
        let f = field_of_order(4).unwrap();
        let s = pick_orbits(&f, &[2, 3], 0).unwrap();
        assert_eq!(s.big_degree(), 6);
        let sizes: Vec<usize> = s.orbits.iter().map(|o| o.points.len()).collect();
        assert_eq!(sizes, [2, 3]);
        for p in s.all_points() {
            let c = p.coords();
            assert_eq!(s.big.mul(c[0], c[2]), s.big.mul(c[1], c[1]));
        }
    }

    #[test]
    fn orbit_closes_under_frobenius() {
        let f = field_of_order(3).unwrap();
        let s = pick_orbits(&f, &[5], 7).unwrap();
        let o = &s.orbits[0];
        assert_eq!(o.points.len(), 5);
        assert_eq!(s.frob(o.t, 5), o.t);
        let again = OrbitSet::from_parameters(&f, &[5], &[o.t], 7).unwrap();
        assert_eq!(again.orbits[0].points, o.points);
    }
}
