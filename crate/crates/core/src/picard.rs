//! The geometric Picard lattice in the E-basis, Frobenius actions and the
//! type tables of del Pezzo surfaces of degree 4, 5 and 6.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::int::{self, IntMatrix};

/// A divisor class `c_0 E_0 + c_1 E_1 + ... + c_r E_r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DivClass(pub Vec<i64>);

impl DivClass {
    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// `E_i` in a lattice with `r` blown-up points.
    pub fn e(r: usize, i: usize) -> DivClass {
        let mut v = vec![0; r + 1];
        v[i] = 1;
        DivClass(v)
    }

    /// `K = -3 E_0 + sum E_i`.
    pub fn canonical(r: usize) -> DivClass {
        let mut v = vec![1; r + 1];
        v[0] = -3;
        DivClass(v)
    }

    pub fn add(&self, o: &DivClass) -> DivClass {
        DivClass(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &DivClass) -> DivClass {
        DivClass(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i64) -> DivClass {
        DivClass(self.0.iter().map(|a| a * k).collect())
    }
}

/// `a_0 b_0 - sum_{i>=1} a_i b_i`.
pub fn intersect(a: &DivClass, b: &DivClass) -> Result<i64> {
    if a.rank() != b.rank() {
        return Err(Error::Dimension(format!("classes of rank {} and {}", a.rank(), b.rank())));
    }
    Ok(a.0[0] * b.0[0] - a.0[1..].iter().zip(&b.0[1..]).map(|(x, y)| x * y).sum::<i64>())
}

/// Arithmetic genus from `2p_a - 2 = D.(D+K)`.
pub fn adjunction_genus(d: &DivClass, k: &DivClass) -> Result<i64> {
    let n = intersect(d, &d.add(k))?;
    if n % 2 != 0 {
        return Err(Error::InvalidParameters(format!("D.(D+K) = {n} is odd")));
    }
    Ok(n / 2 + 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Basis {
    /// The blow-up basis `E_0, ..., E_r`.
    E,
    /// An orthonormal-shape basis `F_0, ..., F_r` with `F_0^2 = 1`, `F_i^2 = -1`.
    F,
}

/// Frobenius acting on column coordinate vectors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrobAction {
    pub matrix: IntMatrix,
    pub basis: Basis,
}

impl FrobAction {
    pub fn trace(&self) -> i64 {
        int::trace(&self.matrix)
    }

    pub fn rank(&self) -> usize {
        self.matrix.len()
    }

    /// Both bases used here have Gram matrix `diag(1, -1, ..., -1)`.
    pub fn preserves_form(&self) -> bool {
        let n = self.rank();
        let j: IntMatrix = (0..n).map(|i| (0..n).map(|k| if i != k { 0 } else if i == 0 { 1 } else { -1 }).collect()).collect();
        let m = &self.matrix;
        int::mul(&int::mul(&int::transpose(m), &j), m) == j
    }

    /// `K` has coordinates `(-3, 1, ..., 1)` in both bases.
    pub fn fixes_canonical(&self) -> bool {
        let k = DivClass::canonical(self.rank() - 1);
        int::mul_vec(&self.matrix, &k.0) == k.0
    }

    /// Rank of the invariant sublattice (the Picard rank over GF(q)).
    pub fn invariant_rank(&self) -> usize {
        let n = self.rank();
        let m: IntMatrix =
            (0..n).map(|i| (0..n).map(|k| self.matrix[i][k] - i64::from(i == k)).collect()).collect();
        n - int::rank(&m)
    }

    pub fn charpoly(&self) -> Vec<i64> {
        int::charpoly(&self.matrix)
    }

    pub fn apply(&self, d: &DivClass) -> DivClass {
        DivClass(int::mul_vec(&self.matrix, &d.0))
    }
}

/// `#X(F_q) = q^2 + q Tr(sigma^*) + 1`.
pub fn predicted_points(q: u64, f: &FrobAction) -> i64 {
    let q = q as i64;
    q * q + q * f.trace() + 1
}

/// Frobenius on the degree-6 surface in the basis `F_0..F_3`.
pub fn degree6_frobenius() -> FrobAction {
    FrobAction {
        matrix: vec![vec![2, 1, 1, 1], vec![-1, -1, -1, 0], vec![-1, 0, -1, -1], vec![-1, -1, 0, -1]],
        basis: Basis::F,
    }
}

/// Frobenius on the degree-5 surface in the basis `F_0..F_4`.
pub fn degree5_frobenius() -> FrobAction {
    FrobAction {
        matrix: vec![
            vec![2, 1, 1, 1, 0],
            vec![0, 0, 0, 0, 1],
            vec![-1, 0, -1, -1, 0],
            vec![-1, -1, 0, -1, 0],
            vec![-1, -1, -1, 0, 0],
        ],
        basis: Basis::F,
    }
}

/// Basis of the orthogonal complement of `sub` shaped like
/// `(+1, -1, ..., -1)`: first the `(-1)`-classes `F` with `K.F = -1`,
/// picked greedily in ascending lexicographic order of E-coordinates among
/// classes with entries in `[-3, 3]`, then the `+1` class with positive
/// `E_0` coefficient. Sufficient for the lattices met here, not general.
pub fn orthogonal_basis(sub: &[DivClass]) -> Result<Vec<DivClass>> {
    let rank = sub.first().map(|d| d.rank()).ok_or_else(|| Error::InvalidParameters("empty sublattice".into()))?;
    let r = rank - 1;
    let k = DivClass::canonical(r);
    let need = rank - sub.len();
    let mut box_classes = Vec::new();
    let mut v = vec![-3i64; rank];
    loop {
        box_classes.push(DivClass(v.clone()));
        let mut i = rank;
        loop {
            if i == 0 {
                break;
            }
            i -= 1;
            v[i] += 1;
            if v[i] <= 3 {
                break;
            }
            v[i] = -3;
        }
        if v.iter().all(|&x| x == -3) {
            break;
        }
    }
    let orth = |c: &DivClass, picked: &[DivClass]| -> Result<bool> {
        for s in sub.iter().chain(picked) {
            if intersect(c, s)? != 0 {
                return Ok(false);
            }
        }
        Ok(true)
    };
    let mut picked: Vec<DivClass> = Vec::new();
    while picked.len() + 1 < need {
        let mut next = None;
        for c in &box_classes {
            if intersect(c, c)? == -1 && intersect(&k, c)? == -1 && orth(c, &picked)? {
                next = Some(c.clone());
                break;
            }
        }
        picked.push(next.ok_or_else(|| Error::Degenerate("no further (-1)-class in the search box".into()))?);
    }
    let f0 = box_classes
        .iter()
        .find(|c| c.0[0] > 0 && intersect(c, c).ok() == Some(1) && orth(c, &picked).unwrap_or(false))
        .cloned()
        .ok_or_else(|| Error::Degenerate("no +1 class in the search box".into()))?;
    let mut out = vec![f0];
    out.extend(picked);
    Ok(out)
}

/// Integer part of `2 sqrt(q)` computed exactly.
pub fn floor_two_sqrt(q: u64) -> u64 {
    let n = 4 * q;
    let mut s = (n as f64).sqrt() as u64;
    while s * s > n {
        s -= 1;
    }
    while (s + 1) * (s + 1) <= n {
        s += 1;
    }
    s
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    /// Hasse–Weil–Serre bound for a genus-one curve: `q + 1 + floor(2 sqrt q)`.
    pub hws: u64,
    /// Points on an anticanonical curve that is not absolutely irreducible.
    pub reducible_cap: u64,
}

pub fn bounds(q: u64) -> Bounds {
    Bounds { hws: q + 1 + floor_two_sqrt(q), reducible_cap: 2 }
}

pub fn griesmer_sum(q: u64, k: u32, d: u64) -> u64 {
    (0..k).map(|i| d.div_ceil(q.pow(i))).sum()
}

pub fn griesmer_feasible(q: u64, n: u64, k: u32, d: u64) -> bool {
    griesmer_sum(q, k, d) <= n
}

/// Frobenius type of a Picard-rank-one surface.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SurfaceType {
    Six6,
    Five7,
    Four1,
    Four2,
    Four3,
}

impl SurfaceType {
    pub fn degree(self) -> u32 {
        match self {
            SurfaceType::Six6 => 6,
            SurfaceType::Five7 => 5,
            _ => 4,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            SurfaceType::Six6 => "6_6",
            SurfaceType::Five7 => "5_7",
            SurfaceType::Four1 => "4_1",
            SurfaceType::Four2 => "4_2",
            SurfaceType::Four3 => "4_3",
        }
    }

    pub fn parse(s: &str) -> Result<SurfaceType> {
        match s.trim().replace(['_', '₁', '₂', '₃'], "").as_str() {
            "66" => Ok(SurfaceType::Six6),
            "57" => Ok(SurfaceType::Five7),
            "41" => Ok(SurfaceType::Four1),
            "42" => Ok(SurfaceType::Four2),
            "43" => Ok(SurfaceType::Four3),
            _ => Err(Error::Parse(format!("unknown surface type {s:?}"))),
        }
    }

    pub fn trace(self) -> i64 {
        match self {
            SurfaceType::Six6 => -1,
            SurfaceType::Five7 => 0,
            SurfaceType::Four1 => -2,
            SurfaceType::Four2 => 0,
            SurfaceType::Four3 => 1,
        }
    }

    pub fn picard_rank(self) -> u32 {
        1
    }

    /// Pencil type `d_1[e_1]...d_r[e_r]` for degree 4.
    pub fn pencil(self) -> Option<&'static str> {
        match self {
            SurfaceType::Four1 => Some("2[-1]1[-1]1[-1]1[-1]"),
            SurfaceType::Four2 => Some("4[-1]1[-1]"),
            SurfaceType::Four3 => Some("3[-1]2[-1]"),
            _ => None,
        }
    }

    pub fn from_pencil(s: &str) -> Option<SurfaceType> {
        [SurfaceType::Four1, SurfaceType::Four2, SurfaceType::Four3].into_iter().find(|t| t.pencil() == Some(s))
    }

    pub fn predicted_points(self, q: u64) -> i64 {
        let q = q as i64;
        q * q + q * self.trace() + 1
    }
}

/// `(n, k, d)` with `d` the proven lower bound (exact for the tabled cases).
pub fn expected_parameters(t: SurfaceType, q: u64) -> Result<(u64, u32, u64)> {
    let s = floor_two_sqrt(q);
    let invalid = |why: &str| Err(Error::InvalidParameters(format!("{} over GF({q}): {why}", t.label())));
    match t {
        SurfaceType::Six6 => {
            if q < 4 {
                return invalid("degree 6 requires q >= 4");
            }
            // Over GF(4) no maximal elliptic curve lies in |-K|, so d = 5.
            let d = if q == 4 { 5 } else { q * q - 2 * q - s };
            Ok((q * q - q + 1, 7, d))
        }
        SurfaceType::Five7 => {
            if q < 3 {
                return invalid("degree 5 requires q >= 3");
            }
            Ok((q * q + 1, 6, q * q - q - s))
        }
        SurfaceType::Four1 => {
            if q <= 3 {
                return invalid("type 4_1 does not exist for q <= 3 (too few non-squares)");
            }
            Ok((q * q - 2 * q + 1, 5, q * q - 3 * q - s))
        }
        SurfaceType::Four2 => {
            if q < 3 {
                return invalid("degree 4 requires q >= 3");
            }
            Ok((q * q + 1, 5, q * q - q - s))
        }
        SurfaceType::Four3 => {
            if q < 3 {
                return invalid("degree 4 requires q >= 3");
            }
            Ok((q * q + q + 1, 5, q * q - s))
        }
    }
}

/// One row of a type table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeRow {
    pub label: String,
    /// Weyl class representative (degrees 5, 6) or pencil type (degree 4).
    pub class: String,
    /// Characteristic polynomial as `(n, multiplicity)` pairs of
    /// cyclotomic factors `Phi_n`.
    pub cyclotomic: Vec<(u32, u32)>,
    pub trace: i64,
    pub picard_rank: u32,
    /// Action in the E-basis.
    pub matrix: IntMatrix,
}

fn reflection(r: usize, alpha: &DivClass) -> IntMatrix {
    // s(x) = x + (x.alpha) alpha, columns are images of E_j
    let cols: Vec<Vec<i64>> = (0..=r)
        .map(|j| {
            let e = DivClass::e(r, j);
            e.add(&alpha.scale(intersect(&e, alpha).unwrap())).0
        })
        .collect();
    int::transpose(&cols)
}

fn simple_roots(r: usize) -> Vec<DivClass> {
    let mut roots = Vec::new();
    let mut a1 = vec![0; r + 1];
    a1[0] = 1;
    a1[1] = -1;
    a1[2] = -1;
    a1[3] = -1;
    roots.push(DivClass(a1));
    for i in 1..r {
        let mut a = vec![0; r + 1];
        a[i] = 1;
        a[i + 1] = -1;
        roots.push(DivClass(a));
    }
    roots
}

/// Product `s_{w[0]} s_{w[1]} ...` of simple reflections (1-based).
fn weyl_word(r: usize, word: &[usize]) -> IntMatrix {
    let roots = simple_roots(r);
    word.iter().fold(int::identity(r + 1), |acc, &i| int::mul(&acc, &reflection(r, &roots[i - 1])))
}

fn word_name(word: &[usize]) -> String {
    if word.is_empty() {
        "Id".into()
    } else {
        word.iter().map(|i| format!("s{i}")).collect()
    }
}

/// Types of degree-6 surfaces.
pub fn table_degree6() -> Vec<TypeRow> {
    let rows: [(&str, &[usize], &[(u32, u32)], i64, u32); 6] = [
        ("6_1", &[], &[(1, 4)], 4, 4),
        ("6_2", &[1], &[(1, 3), (2, 1)], 2, 3),
        ("6_3", &[2], &[(1, 3), (2, 1)], 2, 3),
        ("6_4", &[2, 3], &[(1, 2), (3, 1)], 1, 2),
        ("6_5", &[1, 2], &[(1, 2), (2, 2)], 0, 2),
        ("6_6", &[1, 2, 3], &[(1, 1), (2, 1), (3, 1)], -1, 1),
    ];
    rows.iter()
        .map(|(label, word, cyc, trace, rank)| TypeRow {
            label: label.to_string(),
            class: word_name(word),
            cyclotomic: cyc.to_vec(),
            trace: *trace,
            picard_rank: *rank,
            matrix: weyl_word(3, word),
        })
        .collect()
}

/// Types of degree-5 surfaces.
pub fn table_degree5() -> Vec<TypeRow> {
    let rows: [(&str, &[usize], &[(u32, u32)], i64, u32); 7] = [
        ("5_1", &[], &[(1, 5)], 5, 5),
        ("5_2", &[2], &[(1, 4), (2, 1)], 3, 4),
        ("5_3", &[2, 3], &[(1, 3), (3, 1)], 2, 3),
        ("5_4", &[2, 4], &[(1, 3), (2, 2)], 1, 3),
        ("5_5", &[2, 3, 1], &[(1, 2), (2, 1), (3, 1)], 0, 2),
        ("5_6", &[2, 3, 4], &[(1, 2), (2, 1), (4, 1)], 1, 2),
        ("5_7", &[2, 3, 4, 1], &[(1, 1), (5, 1)], 0, 1),
    ];
    rows.iter()
        .map(|(label, word, cyc, trace, rank)| TypeRow {
            label: label.to_string(),
            class: word_name(word),
            cyclotomic: cyc.to_vec(),
            trace: *trace,
            picard_rank: *rank,
            matrix: weyl_word(4, word),
        })
        .collect()
}

/// Frobenius on the E-basis of a degree-4 surface from its action on the
/// ten conic classes `C_i = E_0 - E_i`, `C'_i = -K - C_i`, given by a
/// pencil type: cycles of the pairs `{C_i, C'_i}` of the listed lengths;
/// `[-1]` swaps `C` and `C'` when the cycle closes.
pub fn degree4_frobenius(pencil: &str) -> Result<FrobAction> {
    let cycles = parse_pencil(pencil)?;
    let r = 5;
    let k = DivClass::canonical(r);
    let minus_k = k.scale(-1);
    let c = |i: usize| DivClass::e(r, 0).sub(&DivClass::e(r, i + 1));
    // image of C_i as (target pair, primed?)
    let mut image: Vec<(usize, bool)> = vec![(0, false); 5];
    let mut start = 0;
    for &(len, eps) in &cycles {
        for j in 0..len {
            let i = start + j;
            if j + 1 < len {
                image[i] = (i + 1, false);
            } else {
                image[i] = (start, eps < 0);
            }
        }
        start += len;
    }
    let sigma_c: Vec<DivClass> =
        image.iter().map(|&(t, primed)| if primed { minus_k.sub(&c(t)) } else { c(t) }).collect();
    // B_0 = (-K + sum C_i)/2 and E_0 = sum C_i - B_0.
    let sum_sc = sigma_c.iter().fold(DivClass(vec![0; r + 1]), |a, b| a.add(b));
    let twice_b0 = minus_k.add(&sum_sc);
    if twice_b0.0.iter().any(|x| x % 2 != 0) {
        return Err(Error::Verification("image of B_0 is not integral".into()));
    }
    let sigma_b0 = DivClass(twice_b0.0.iter().map(|x| x / 2).collect());
    let sigma_e0 = sum_sc.sub(&sigma_b0);
    let mut cols = vec![sigma_e0.0.clone()];
    for sc in &sigma_c {
        cols.push(sigma_e0.sub(sc).0);
    }
    Ok(FrobAction { matrix: int::transpose(&cols), basis: Basis::E })
}

/// Parses `"3[-1]2[-1]"` into `[(3, -1), (2, -1)]`.
pub fn parse_pencil(s: &str) -> Result<Vec<(usize, i32)>> {
    let bad = || Error::Parse(format!("bad pencil type {s:?}"));
    let mut out = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        let open = rest.find('[').ok_or_else(bad)?;
        let close = rest.find(']').ok_or_else(bad)?;
        let d: usize = rest[..open].parse().map_err(|_| bad())?;
        let e: i32 = rest[open + 1..close].parse().map_err(|_| bad())?;
        if d == 0 || (e != 1 && e != -1) {
            return Err(bad());
        }
        out.push((d, e));
        rest = &rest[close + 1..];
    }
    if out.iter().map(|x| x.0).sum::<usize>() != 5 {
        return Err(bad());
    }
    Ok(out)
}

/// Types of degree-4 surfaces of Picard rank one.
pub fn table_degree4() -> Vec<TypeRow> {
    let rows: [(SurfaceType, &[(u32, u32)]); 3] = [
        (SurfaceType::Four1, &[(1, 1), (2, 3), (4, 1)]),
        (SurfaceType::Four2, &[(1, 1), (2, 1), (8, 1)]),
        (SurfaceType::Four3, &[(1, 1), (2, 1), (4, 1), (6, 1)]),
    ];
    rows.iter()
        .map(|(t, cyc)| TypeRow {
            label: t.label().into(),
            class: t.pencil().unwrap().into(),
            cyclotomic: cyc.to_vec(),
            trace: t.trace(),
            picard_rank: 1,
            matrix: degree4_frobenius(t.pencil().unwrap()).expect("tabled pencil types are valid").matrix,
        })
        .collect()
}

/// Cyclotomic polynomial `Phi_n` with integer coefficients, constant first.
pub fn cyclotomic(n: u32) -> Vec<i64> {
    // x^n - 1 divided by Phi_d for every proper divisor d.
    let mut p = vec![0i64; n as usize + 1];
    p[0] = -1;
    p[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            p = poly_div_exact(&p, &cyclotomic(d));
        }
    }
    p
}

pub fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_div_exact(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lead = *b.last().unwrap();
    let mut q = vec![0; a.len() - db];
    for k in (db..r.len()).rev() {
        let c = r[k] / lead;
        q[k - db] = c;
        for (i, &x) in b.iter().enumerate() {
            r[k - db + i] -= c * x;
        }
    }
    assert!(r.iter().all(|&x| x == 0), "inexact cyclotomic division");
    q
}

/// `prod Phi_n^m` for the given factors.
pub fn cyclotomic_product(factors: &[(u32, u32)]) -> Vec<i64> {
    let mut acc = vec![1];
    for &(n, m) in factors {
        for _ in 0..m {
            acc = poly_mul(&acc, &cyclotomic(n));
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_degree() {
        for (r, d) in [(3, 6), (4, 5), (5, 4)] {
            let k = DivClass::canonical(r);
            assert_eq!(intersect(&k, &k).unwrap(), d);
        }
        assert_eq!(intersect(&DivClass::e(3, 1), &DivClass::e(3, 2)).unwrap(), 0);
        assert!(intersect(&DivClass::e(3, 1), &DivClass::e(4, 1)).is_err());
    }

    #[test]
    fn genera() {
        let k = DivClass::canonical(5);
        assert_eq!(adjunction_genus(&k.scale(-1), &k).unwrap(), 1);
        assert_eq!(adjunction_genus(&DivClass::e(5, 1), &k).unwrap(), 0);
        let conic = DivClass(vec![2, -1, -1, -1, -1, -1]);
        assert_eq!(adjunction_genus(&conic, &k).unwrap(), 0);
    }

    #[test]
    fn isqrt_and_bounds() {
        assert_eq!(bounds(4).hws, 9);
        assert_eq!(bounds(5).hws, 10);
        assert_eq!(floor_two_sqrt(9), 6);
        assert_eq!(griesmer_sum(4, 7, 5), 12);
        assert!(griesmer_feasible(4, 13, 7, 5));
        assert_eq!(griesmer_sum(4, 7, 6), 13);
        assert!(!griesmer_feasible(4, 13, 7, 7));
    }

    #[test]
    fn cyclotomics() {
        assert_eq!(cyclotomic(1), vec![-1, 1]);
        assert_eq!(cyclotomic(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic(8), vec![1, 0, 0, 0, 1]);
    }

    #[test]
    fn table_rows_are_consistent() {
        for row in table_degree6().iter().chain(&table_degree5()).chain(&table_degree4()) {
            let a = FrobAction { matrix: row.matrix.clone(), basis: Basis::E };
            assert!(a.preserves_form(), "{}", row.label);
            assert!(a.fixes_canonical(), "{}", row.label);
            assert_eq!(a.trace(), row.trace, "{}", row.label);
            assert_eq!(a.invariant_rank() as u32, row.picard_rank, "{}", row.label);
            assert_eq!(a.charpoly(), cyclotomic_product(&row.cyclotomic), "{}", row.label);
        }
    }

    #[test]
    fn frobenius_in_f_basis() {
        for (a, r, tr) in [(degree6_frobenius(), 3, -1), (degree5_frobenius(), 4, 0)] {
            assert!(a.preserves_form());
            assert!(a.fixes_canonical());
            assert_eq!(a.trace(), tr);
            assert_eq!(a.invariant_rank(), 1);
            assert_eq!(a.rank(), r + 1);
        }
        assert_eq!(predicted_points(4, &degree6_frobenius()), 13);
        assert_eq!(predicted_points(3, &degree5_frobenius()), 10);
    }

    #[test]
    fn f_bases() {
        // degree 6: contract the line through p1, p2 and the conic through all five
        let line = DivClass(vec![1, -1, -1, 0, 0, 0]);
        let conic = DivClass(vec![2, -1, -1, -1, -1, -1]);
        let b = orthogonal_basis(&[line, conic.clone()]).unwrap();
        assert_eq!(b.len(), 4);
        assert_eq!(b[0], DivClass(vec![3, -2, -1, -1, -1, -1]));
        assert_eq!(b[1], DivClass(vec![1, -1, 0, -1, 0, 0]));
        assert_eq!(b[2], DivClass(vec![1, -1, 0, 0, -1, 0]));
        assert_eq!(b[3], DivClass(vec![1, -1, 0, 0, 0, -1]));
        // degree 5: contract only the conic
        let b5 = orthogonal_basis(&[conic]).unwrap();
        assert_eq!(b5.len(), 5);
        assert_eq!(b5[0], DivClass(vec![3, -2, -1, -1, -1, -1]));
        for i in 1..5 {
            let mut v = vec![1, -1, 0, 0, 0, 0];
            v[i + 1] = -1;
            assert_eq!(b5[i], DivClass(v));
        }
    }

    #[test]
    fn parameters() {
        assert_eq!(expected_parameters(SurfaceType::Six6, 7).unwrap(), (43, 7, 30));
        assert_eq!(expected_parameters(SurfaceType::Six6, 4).unwrap(), (13, 7, 5));
        assert_eq!(expected_parameters(SurfaceType::Five7, 9).unwrap(), (82, 6, 66));
        assert_eq!(expected_parameters(SurfaceType::Four1, 5).unwrap(), (16, 5, 6));
        assert!(expected_parameters(SurfaceType::Four1, 3).is_err());
        assert!(expected_parameters(SurfaceType::Six6, 3).is_err());
    }

    #[test]
    fn pencil_strings() {
        assert_eq!(parse_pencil("3[-1]2[-1]").unwrap(), vec![(3, -1), (2, -1)]);
        assert!(parse_pencil("3[-1]1[-1]").is_err());
        assert_eq!(SurfaceType::from_pencil("4[-1]1[-1]"), Some(SurfaceType::Four2));
    }
}
