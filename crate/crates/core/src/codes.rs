//! Linear codes over GF(q): dimension, exact minimum distance by exhaustive
//! enumeration, weight distributions, puncturing and monomial automorphisms.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{Fe, Field, FieldCtx};
use crate::linalg::Matrix;

/// Maximum number of projective codewords the exhaustive search will visit.
pub const CODEWORD_GUARD: u64 = 1_000_000_000;

/// A linear code given by a generator matrix with independent rows.
#[derive(Clone, Debug)]
pub struct LinearCode {
    pub field: Field,
    gen: Matrix,
    pub provenance: String,
}

impl LinearCode {
    /// Keeps `gen` as given when its rows are independent; otherwise
    /// replaces it by its reduced echelon form.
    pub fn new(field: Field, gen: Matrix, provenance: impl Into<String>) -> Result<LinearCode> {
        if gen.cols() == 0 {
            return Err(Error::Dimension("code of length 0".into()));
        }
        let rank = gen.rank(&field);
        if rank == 0 {
            return Err(Error::Degenerate("zero generator matrix".into()));
        }
        let gen = if rank == gen.rows() { gen } else { gen.rref(&field).0 };
        Ok(LinearCode { field, gen, provenance: provenance.into() })
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<Fe>>, provenance: impl Into<String>) -> Result<LinearCode> {
        if rows.is_empty() {
            return Err(Error::Degenerate("no generator rows".into()));
        }
        LinearCode::new(field, Matrix::from_rows(rows), provenance)
    }

    pub fn generator(&self) -> &Matrix {
        &self.gen
    }

    pub fn len(&self) -> usize {
        self.gen.cols()
    }

    pub fn is_empty(&self) -> bool {
        self.gen.cols() == 0
    }

    pub fn dim(&self) -> usize {
        self.gen.rows()
    }

    pub fn q(&self) -> u64 {
        self.field.order() as u64
    }

    /// Reduced echelon generator and its pivot columns.
    pub fn reduce(&self) -> (Matrix, Vec<usize>) {
        self.gen.rref(&self.field)
    }

    pub fn column(&self, j: usize) -> Vec<Fe> {
        self.gen.column(j)
    }

    /// Codeword `m * G`.
    pub fn encode(&self, message: &[Fe]) -> Result<Vec<Fe>> {
        if message.len() != self.dim() {
            return Err(Error::Dimension(format!("message of length {} for dimension {}", message.len(), self.dim())));
        }
        Ok(self.gen.transpose().mul_vec(&self.field, message))
    }

    pub fn projective_codewords(&self) -> u64 {
        let q = self.q() as u128;
        let total = (q.pow(self.dim() as u32) - 1) / (q - 1);
        total.min(u64::MAX as u128) as u64
    }

    /// Weight distribution over one representative per projective class of
    /// nonzero codewords; multiply counts by `q - 1` for all codewords.
    pub fn weight_distribution(&self) -> Result<WeightDistribution> {
        let total = self.projective_codewords();
        if total > CODEWORD_GUARD {
            return Err(Error::Guard(format!("{total} projective codewords exceed {CODEWORD_GUARD}")));
        }
        let hist = match (self.field.add_table(), self.field.mul_table()) {
            (Some(at), Some(mt)) => {
                let q = self.field.order() as usize;
                let mul = |a: u32, b: u32| mt[a as usize * q + b as usize] as u32;
                let add = |a: u32, b: u32| at[a as usize * q + b as usize] as u32;
                histogram(self, add, mul)
            }
            _ => {
                let f: &FieldCtx = &self.field;
                histogram(self, |a, b| f.add(Fe(a), Fe(b)).0, |a, b| f.mul(Fe(a), Fe(b)).0)
            }
        };
        let counts: BTreeMap<usize, u64> = hist.into_iter().enumerate().filter(|&(_, c)| c > 0).collect();
        if counts.contains_key(&0) {
            return Err(Error::RankDeficient { expected: self.dim(), got: self.gen.rank(&self.field) });
        }
        Ok(WeightDistribution { q: self.q(), counts })
    }

    pub fn min_distance(&self) -> Result<usize> {
        Ok(self.weight_distribution()?.min_weight())
    }

    /// Removes the listed columns.
    pub fn puncture(&self, positions: &[usize]) -> Result<LinearCode> {
        let n = self.len();
        if let Some(&bad) = positions.iter().find(|&&p| p >= n) {
            return Err(Error::InvalidParameters(format!("position {bad} out of range for length {n}")));
        }
        let keep: Vec<usize> = (0..n).filter(|j| !positions.contains(j)).collect();
        if keep.is_empty() {
            return Err(Error::Degenerate("puncturing removes every column".into()));
        }
        let rows = (0..self.dim()).map(|i| keep.iter().map(|&j| self.gen[(i, j)]).collect()).collect();
        LinearCode::from_rows(
            self.field.clone(),
            rows,
            format!("{}; punctured at {} positions", self.provenance, positions.len()),
        )
    }

    /// Whether every transformed generator row stays in the code.
    pub fn is_automorphism(&self, m: &MonomialMap) -> Result<bool> {
        if m.len() != self.len() {
            return Err(Error::Dimension(format!("map on {} columns, code of length {}", m.len(), self.len())));
        }
        let mut rows = self.gen.to_rows();
        for i in 0..self.dim() {
            rows.push(m.apply(&self.field, self.gen.row(i))?);
        }
        Ok(Matrix::from_rows(rows).rank(&self.field) == self.dim())
    }

    /// Rows of digits as printed for prime fields, e.g. `"0101..."`.
    pub fn to_digit_rows(&self) -> Result<Vec<String>> {
        if self.field.degree() != 1 || self.field.order() > 10 {
            return Err(Error::InvalidParameters("digit rows need a prime field of order at most 10".into()));
        }
        Ok((0..self.dim()).map(|i| self.gen.row(i).iter().map(|a| a.index().to_string()).collect()).collect())
    }

    pub fn to_json(&self) -> CodeJson {
        CodeJson {
            p: self.field.characteristic(),
            modulus: self.field.modulus().to_vec(),
            n: self.len(),
            k: self.dim(),
            provenance: self.provenance.clone(),
            rows: (0..self.dim()).map(|i| self.gen.row(i).iter().map(|&a| self.field.coeffs(a)).collect()).collect(),
        }
    }

    pub fn from_json(j: &CodeJson) -> Result<LinearCode> {
        let field = crate::gf::field_with_modulus(j.p, &j.modulus)?;
        let rows = j
            .rows
            .iter()
            .map(|r| r.iter().map(|c| field.from_coeffs(c)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        LinearCode::from_rows(field, rows, j.provenance.clone())
    }
}

/// Serialized code: explicit field modulus and coefficient vectors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeJson {
    pub p: u32,
    /// Modulus coefficients, constant term first.
    pub modulus: Vec<u32>,
    pub n: usize,
    pub k: usize,
    pub provenance: String,
    /// `rows[i][j]` is the coefficient vector of `G[i][j]`.
    pub rows: Vec<Vec<Vec<u32>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightDistribution {
    pub q: u64,
    /// Weight -> number of projective codewords of that weight.
    pub counts: BTreeMap<usize, u64>,
}

impl WeightDistribution {
    pub fn min_weight(&self) -> usize {
        *self.counts.keys().next().expect("a nonzero code has codewords")
    }

    pub fn max_weight(&self) -> usize {
        *self.counts.keys().next_back().expect("a nonzero code has codewords")
    }

    pub fn projective_total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// Counts over all nonzero codewords.
    pub fn full_counts(&self) -> BTreeMap<usize, u64> {
        self.counts.iter().map(|(&w, &c)| (w, c * (self.q - 1))).collect()
    }
}

// Messages are enumerated with the first nonzero entry equal to one. Work
// is split by the leading position and the first free digit; within a block
// an odometer keeps partial sums so a codeword costs one vector addition.
fn histogram<A, M>(code: &LinearCode, add: A, mul: M) -> Vec<u64>
where
    A: Fn(u32, u32) -> u32 + Sync,
    M: Fn(u32, u32) -> u32 + Sync,
{
    let k = code.dim();
    let n = code.len();
    let q = code.field.order();
    let one = code.field.one().0;
    let rows: Vec<Vec<u32>> = (0..k).map(|i| code.gen.row(i).iter().map(|a| a.0).collect()).collect();
    // scaled[i][c] = c * row i
    let scaled: Vec<Vec<Vec<u32>>> =
        rows.iter().map(|r| (0..q).map(|c| r.iter().map(|&a| mul(c, a)).collect()).collect()).collect();

    let mut blocks: Vec<(Vec<u32>, Vec<usize>)> = Vec::new();
    for lead in 0..k {
        let base: Vec<u32> = scaled[lead][one as usize].clone();
        let free: Vec<usize> = (lead + 1..k).collect();
        if free.len() >= 2 {
            for c in 0..q {
                let v: Vec<u32> = base.iter().zip(&scaled[free[0]][c as usize]).map(|(&a, &b)| add(a, b)).collect();
                blocks.push((v, free[1..].to_vec()));
            }
        } else {
            blocks.push((base, free));
        }
    }

    blocks
        .par_iter()
        .map(|(base, free)| {
            let mut hist = vec![0u64; n + 1];
            let weight = |v: &[u32]| v.iter().filter(|&&a| a != 0).count();
            let Some((&last, outer)) = free.split_last() else {
                hist[weight(base)] += 1;
                return hist;
            };
            let m = outer.len();
            // partial[l] = base + sum_{t < l} digit[t] * row(outer[t])
            let mut partial: Vec<Vec<u32>> = vec![base.clone(); m + 1];
            let mut digits = vec![0u32; m];
            let inner = &scaled[last];
            loop {
                let p = &partial[m];
                for c in 0..q as usize {
                    let s = &inner[c];
                    let w = (0..n).filter(|&j| add(p[j], s[j]) != 0).count();
                    hist[w] += 1;
                }
                let mut l = m;
                loop {
                    if l == 0 {
                        return hist;
                    }
                    l -= 1;
                    digits[l] += 1;
                    if digits[l] < q {
                        break;
                    }
                    digits[l] = 0;
                }
                let s = &scaled[outer[l]][digits[l] as usize];
                let next: Vec<u32> = partial[l].iter().zip(s).map(|(&a, &b)| add(a, b)).collect();
                for t in l + 1..=m {
                    partial[t].copy_from_slice(&next);
                }
            }
        })
        .reduce(
            || vec![0u64; n + 1],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        )
}

/// Column permutation with scaling: `c'[perm[j]] = scales[j] * c[j]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonomialMap {
    pub perm: Vec<usize>,
    pub scales: Vec<Fe>,
}

impl MonomialMap {
    pub fn new(perm: Vec<usize>, scales: Vec<Fe>) -> Result<MonomialMap> {
        let n = perm.len();
        if scales.len() != n {
            return Err(Error::Dimension(format!("{} scales for {} columns", scales.len(), n)));
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidParameters("perm is not a bijection".into()));
            }
        }
        if scales.iter().any(|s| s.is_zero()) {
            return Err(Error::InvalidParameters("zero scale".into()));
        }
        Ok(MonomialMap { perm, scales })
    }

    pub fn identity(f: &FieldCtx, n: usize) -> MonomialMap {
        MonomialMap { perm: (0..n).collect(), scales: vec![f.one(); n] }
    }

    pub fn scalar(n: usize, lambda: Fe) -> MonomialMap {
        MonomialMap { perm: (0..n).collect(), scales: vec![lambda; n] }
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    pub fn apply(&self, f: &FieldCtx, c: &[Fe]) -> Result<Vec<Fe>> {
        if c.len() != self.len() {
            return Err(Error::Dimension(format!("vector of length {} for a map on {}", c.len(), self.len())));
        }
        let mut out = vec![Fe::ZERO; c.len()];
        for j in 0..c.len() {
            out[self.perm[j]] = f.mul(self.scales[j], c[j]);
        }
        Ok(out)
    }

    /// `self` after `other`.
    pub fn compose(&self, f: &FieldCtx, other: &MonomialMap) -> Result<MonomialMap> {
        if self.len() != other.len() {
            return Err(Error::Dimension("maps of different lengths".into()));
        }
        let perm = other.perm.iter().map(|&p| self.perm[p]).collect();
        let scales = (0..self.len()).map(|j| f.mul(self.scales[other.perm[j]], other.scales[j])).collect();
        Ok(MonomialMap { perm, scales })
    }

    /// Order in the monomial group: each permutation cycle of length `L`
    /// whose scales multiply to `s` contributes `L * ord(s)`.
    pub fn order(&self, f: &FieldCtx) -> u64 {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut order = 1u64;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let (mut j, mut len, mut s) = (start, 0u64, f.one());
            while !seen[j] {
                seen[j] = true;
                s = f.mul(s, self.scales[j]);
                j = self.perm[j];
                len += 1;
            }
            let mut ord = 1u64;
            let mut x = s;
            while x != f.one() {
                x = f.mul(x, s);
                ord += 1;
            }
            order = lcm(order, len * ord);
        }
        order
    }

    /// Order of the underlying permutation.
    pub fn perm_order(&self) -> u64 {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut order = 1u64;
        for start in 0..n {
            let (mut j, mut len) = (start, 0u64);
            while !seen[j] {
                seen[j] = true;
                j = self.perm[j];
                len += 1;
            }
            if len > 0 {
                order = lcm(order, len);
            }
        }
        order
    }

    pub fn fixed_points(&self) -> usize {
        self.perm.iter().enumerate().filter(|&(i, &p)| i == p).count()
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    let (mut x, mut y) = (a, b);
    while y != 0 {
        (x, y) = (y, x % y);
    }
    a / x * b
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ReferenceKind {
    /// The record before the tabled code improved on it.
    Prior,
    /// Parameters stated to be attained by the tabled code.
    Attained,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReferenceEntry {
    pub n: usize,
    pub k: usize,
    pub q: u64,
    pub d: usize,
    pub kind: ReferenceKind,
}

#[derive(Deserialize)]
struct Snapshot {
    entries: Vec<ReferenceEntry>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Beats,
    Attains,
    Below,
    NoReferenceData,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Beats => "beats",
            Verdict::Attains => "attains",
            Verdict::Below => "below",
            Verdict::NoReferenceData => "no reference data",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Comparison {
    pub prior_best: Option<usize>,
    pub verdict: Verdict,
}

pub fn best_known_snapshot() -> Vec<ReferenceEntry> {
    let s: Snapshot = serde_json::from_str(include_str!("../fixtures/best_known.json")).expect("snapshot parses");
    s.entries
}

/// Compares a computed minimum distance with the shipped snapshot.
pub fn compare_best_known(n: usize, k: usize, q: u64, computed_d: usize) -> Comparison {
    let Some(e) = best_known_snapshot().into_iter().find(|e| e.n == n && e.k == k && e.q == q) else {
        return Comparison { prior_best: None, verdict: Verdict::NoReferenceData };
    };
    let verdict = match computed_d.cmp(&e.d) {
        std::cmp::Ordering::Greater => Verdict::Beats,
        std::cmp::Ordering::Equal => Verdict::Attains,
        std::cmp::Ordering::Less => Verdict::Below,
    };
    Comparison { prior_best: Some(e.d), verdict }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::field_of_order;

    fn fe(f: &FieldCtx, v: &[i64]) -> Vec<Fe> {
        v.iter().map(|&x| f.from_int(x)).collect()
    }

    #[test]
    fn repetition_code() {
        let f = field_of_order(5).unwrap();
        let c = LinearCode::from_rows(f.clone(), vec![fe(&f, &[1; 7])], "rep").unwrap();
        assert_eq!(c.min_distance().unwrap(), 7);
        assert_eq!(c.weight_distribution().unwrap().projective_total(), 1);
    }

    #[test]
    fn hamming_code() {
        let f = field_of_order(2).unwrap();
        let rows = vec![
            fe(&f, &[1, 0, 0, 0, 0, 1, 1]),
            fe(&f, &[0, 1, 0, 0, 1, 0, 1]),
            fe(&f, &[0, 0, 1, 0, 1, 1, 0]),
            fe(&f, &[0, 0, 0, 1, 1, 1, 1]),
        ];
        let c = LinearCode::from_rows(f, rows, "hamming").unwrap();
        let wd = c.weight_distribution().unwrap();
        assert_eq!(wd.counts, BTreeMap::from([(3, 7), (4, 7), (7, 1)]));
    }

    #[test]
    fn dependent_rows_are_reduced() {
        let f = field_of_order(3).unwrap();
        let c = LinearCode::from_rows(f.clone(), vec![fe(&f, &[1, 2, 0]), fe(&f, &[2, 1, 0])], "dup").unwrap();
        assert_eq!(c.dim(), 1);
        let id = LinearCode::new(f.clone(), Matrix::identity(&f, 3), "id").unwrap();
        assert_eq!(id.dim(), 3);
        assert!(LinearCode::from_rows(f.clone(), vec![fe(&f, &[0, 0])], "zero").is_err());
    }

    #[test]
    fn scalar_maps() {
        let f = field_of_order(7).unwrap();
        let c = LinearCode::new(f.clone(), Matrix::identity(&f, 2), "id").unwrap();
        let id = MonomialMap::identity(&f, 2);
        assert!(c.is_automorphism(&id).unwrap());
        assert_eq!(id.order(&f), 1);
        let two = MonomialMap::scalar(2, f.from_int(2));
        assert!(c.is_automorphism(&two).unwrap());
        assert_eq!(two.order(&f), 3);
        let swap = MonomialMap::new(vec![1, 0], vec![f.from_int(3), f.one()]).unwrap();
        assert_eq!(swap.order(&f), 12);
        assert!(MonomialMap::new(vec![0, 0], vec![f.one(), f.one()]).is_err());
    }

    #[test]
    fn snapshot_verdicts() {
        assert_eq!(compare_best_known(65, 6, 8, 51), Comparison { prior_best: Some(50), verdict: Verdict::Beats });
        assert_eq!(compare_best_known(82, 6, 9, 66).verdict, Verdict::Beats);
        assert_eq!(compare_best_known(31, 5, 5, 21).verdict, Verdict::Attains);
        assert_eq!(compare_best_known(10, 6, 3, 3).verdict, Verdict::NoReferenceData);
    }
}
