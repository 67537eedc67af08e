//! Property tests of structural invariants.

use dpcodes::codes::{LinearCode, MonomialMap};
use dpcodes::cremona::{induced_monomial, synthesize};
use dpcodes::gf::{field_of_order, Fe, Field};
use dpcodes::picard::{griesmer_sum, SurfaceType};
use dpcodes::surfaces::{build_dp5, build_dp6, dp5_code, flynn_build};
use proptest::prelude::*;

fn field(q: u64) -> Field {
    field_of_order(q).unwrap()
}

fn elem(f: &Field, i: u32) -> Fe {
    f.element(i % f.order())
}

/// Minimum nonzero weight over every message, straight from `encode`.
fn brute_distance(c: &LinearCode) -> usize {
    let f = &c.field;
    let q = f.order() as u64;
    let k = c.dim();
    (1..q.pow(k as u32))
        .map(|mut idx| {
            let msg: Vec<Fe> = (0..k)
                .map(|_| {
                    let e = f.element((idx % q) as u32);
                    idx /= q;
                    e
                })
                .collect();
            c.encode(&msg).unwrap().iter().filter(|x| !x.is_zero()).count()
        })
        .min()
        .unwrap()
}

fn small_code() -> impl Strategy<Value = LinearCode> {
    (prop::sample::select(vec![2u64, 3, 4, 5]), 1usize..=3, 3usize..=8)
        .prop_flat_map(|(q, k, n)| (Just(q), Just(k), prop::collection::vec(0u32..25, k * n)))
        .prop_filter_map("rank", |(q, k, entries)| {
            let f = field(q);
            let n = entries.len() / k;
            let rows = entries.chunks(n).map(|r| r.iter().map(|&i| elem(&f, i)).collect()).collect();
            let c = LinearCode::from_rows(f, rows, "random").ok()?;
            // nonzero columns keep the code projective enough for the checks
            (c.dim() == k && (0..n).all(|j| c.column(j).iter().any(|x| !x.is_zero()))).then_some(c)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(q in prop::sample::select(vec![4u64, 8, 9, 25, 27, 49]), a in 0u32..64, b in 0u32..64, c in 0u32..64) {
        let f = field(q);
        let (a, b, c) = (elem(&f, a), elem(&f, b), elem(&f, c));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.sub(f.add(a, b), b), a);
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
        }
        let p = f.characteristic() as u64;
        prop_assert_eq!(
            f.frobenius(f.add(a, b), p, 1).unwrap(),
            f.add(f.frobenius(a, p, 1).unwrap(), f.frobenius(b, p, 1).unwrap())
        );
    }

    #[test]
    fn distance_matches_brute_force(c in small_code()) {
        let d = c.min_distance().unwrap();
        prop_assert_eq!(d, brute_distance(&c));
        let wd = c.weight_distribution().unwrap();
        let (q, k, n) = (c.q(), c.dim(), c.len());
        prop_assert_eq!(wd.min_weight(), d);
        prop_assert_eq!(wd.projective_total(), (q.pow(k as u32) - 1) / (q - 1));
        prop_assert!(d <= n - k + 1);
        prop_assert!(n as u64 >= griesmer_sum(q, k as u32, d as u64));
    }

    #[test]
    fn puncturing_loses_at_most_one(c in small_code(), pos in 0usize..8) {
        let pos = pos % c.len();
        if let Ok(p) = c.puncture(&[pos]) {
            prop_assert_eq!(p.len(), c.len() - 1);
            if p.dim() == c.dim() {
                prop_assert!(p.min_distance().unwrap() + 1 >= c.min_distance().unwrap());
            }
        }
    }

    #[test]
    fn monomial_orders_and_scalars(
        q in prop::sample::select(vec![3u64, 4, 5, 7]),
        perm in Just((0..6).collect::<Vec<usize>>()).prop_shuffle(),
        s in prop::collection::vec(1u32..49, 6),
        c in small_code(),
    ) {
        let f = field(q);
        let scales: Vec<Fe> = s.iter().map(|&i| f.element(1 + i % (f.order() - 1))).collect();
        let m = MonomialMap::new(perm, scales).unwrap();
        let mut acc = MonomialMap::identity(&f, 6);
        for _ in 0..m.order(&f) {
            acc = m.compose(&f, &acc).unwrap();
        }
        prop_assert_eq!(acc, MonomialMap::identity(&f, 6));

        // global scalars never change the verdict
        let g = &c.field;
        let n = c.len();
        let shift = MonomialMap::new((0..n).map(|j| (j + 1) % n).collect(), vec![g.one(); n]).unwrap();
        let lam = MonomialMap::scalar(n, g.element(g.order() - 1));
        prop_assert_eq!(
            c.is_automorphism(&shift).unwrap(),
            c.is_automorphism(&lam.compose(g, &shift).unwrap()).unwrap()
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn point_count_law(seed in 0u64..1000, q in prop::sample::select(vec![4u64, 5, 7, 8])) {
        let m5 = build_dp5(q, seed).unwrap();
        prop_assert_eq!(m5.point_count() as u64, q * q + 1);
        let m6 = build_dp6(q, seed).unwrap();
        prop_assert_eq!(m6.point_count() as u64, q * q - q + 1);
        if q % 2 == 1 {
            for t in [SurfaceType::Four1, SurfaceType::Four2, SurfaceType::Four3] {
                let m = flynn_build(q, t, seed).unwrap();
                prop_assert_eq!(m.points.len() as i64, t.predicted_points(q));
            }
        }
    }

    #[test]
    fn automorphism_fixed_points(seed in 0u64..1000, q in prop::sample::select(vec![3u64, 4, 5, 7])) {
        let m = build_dp5(q, seed).unwrap();
        let r = dpcodes::cremona::auto5(&m).unwrap();
        prop_assert!(r.is_automorphism);
        prop_assert_eq!(r.perm_order, 5);
        prop_assert_eq!(r.fixed_points as u64 % 5, (q * q + 1) % 5);
    }

    /// Rescaling the basis conjugates `A` but permutes the columns the same way.
    #[test]
    fn rescaled_basis_same_permutation(seed in 0u64..1000, s in prop::collection::vec(0u32..100, 6)) {
        let mut m = build_dp5(5, seed).unwrap();
        let f = m.field.clone();
        let before = {
            let d = synthesize(&m).unwrap();
            induced_monomial(&f, &d.unit_a(&f), &dp5_code(&m).unwrap()).unwrap().perm
        };
        for (g, &k) in m.basis.iter_mut().zip(&s) {
            *g = g.scale(&f, f.element(1 + k % 4));
        }
        let d = synthesize(&m).unwrap();
        let after = induced_monomial(&f, &d.unit_a(&f), &dp5_code(&m).unwrap()).unwrap().perm;
        prop_assert_eq!(before, after);
    }
}
