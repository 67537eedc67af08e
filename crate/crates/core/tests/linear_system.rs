//! Linear systems checked against a substitution oracle: a form vanishes to
//! order `m` at `p` iff, after `x = p X0 + e1 X1 + e2 X2`, no monomial of
//! total degree below `m` in `X1, X2` survives.

use dpcodes::geom::{linear_system, pick_orbits, HomForm, OrbitSet};
use dpcodes::gf::{field_of_order, Fe, FieldCtx};
use dpcodes::surfaces::{base_conic, build_dp5, build_dp6};

fn vanishes_by_substitution(big: &FieldCtx, g: &HomForm, p: &[Fe], m: u32) -> bool {
    let lead = p.iter().position(|x| !x.is_zero()).unwrap();
    // two unit directions completing p to a frame
    let dirs: Vec<usize> = (0..3).filter(|&i| i != lead).collect();
    let subs: Vec<HomForm> = (0..3)
        .map(|i| {
            let mut c = vec![big.zero(); 3];
            c[0] = p[i];
            for (k, &d) in dirs.iter().enumerate() {
                if d == i {
                    c[k + 1] = big.one();
                }
            }
            HomForm::linear(&c)
        })
        .collect();
    let h = g.compose(big, &subs).unwrap();
    let ok = h.terms().all(|(mon, c)| c.is_zero() || (mon[1] + mon[2]) as u32 >= m);
    ok
}

fn check_system(set: &OrbitSet, degree: u32, conds: &[(usize, u32)]) -> usize {
    let sys = linear_system(set, degree, conds).unwrap();
    for g in &sys.forms {
        let lifted = g.map_coeffs(|c| set.tower.embed(c));
        for &(idx, m) in conds {
            for p in &set.orbits[idx].points {
                assert!(vanishes_by_substitution(&set.big, &lifted, p.coords(), m), "{} at {:?}", g.to_text(&set.base), p);
            }
        }
    }
    sys.dim()
}

#[test]
fn quintic_and_cubic_systems_of_five_conic_points() {
    for q in [3u64, 4, 5, 7, 8, 9] {
        let f = field_of_order(q).unwrap();
        for seed in 0..3 {
            let set = pick_orbits(&f, &[5], seed).unwrap();
            assert_eq!(check_system(&set, 5, &[(0, 2)]), 21 - 15, "q={q}");
            assert_eq!(check_system(&set, 3, &[(0, 1)]), 10 - 5, "q={q}");
            // only the conic passes through all five
            assert_eq!(check_system(&set, 2, &[(0, 1)]), 1);
            // the doubled conic is forced even though the count predicts zero
            let sys = linear_system(&set, 4, &[(0, 2)]).unwrap();
            let c = base_conic(&f);
            assert!(sys.contains(&f, &c.mul(&f, &c)));
            assert_eq!(check_system(&set, 4, &[(0, 2)]), 1);
        }
    }
}

#[test]
fn mixed_orbit_systems() {
    for q in [3u64, 4, 5, 7] {
        let f = field_of_order(q).unwrap();
        let set = pick_orbits(&f, &[2, 3], 1).unwrap();
        assert_eq!(check_system(&set, 3, &[(0, 1), (1, 1)]), 5);
        assert_eq!(check_system(&set, 4, &[(0, 2), (1, 1)]), 15 - 6 - 3);
        assert_eq!(check_system(&set, 6, &[(0, 2), (1, 2)]), 28 - 15);
    }
}

#[test]
fn built_models_use_vanishing_bases() {
    let m = build_dp5(7, 2).unwrap();
    for g in &m.basis {
        let lifted = g.map_coeffs(|c| m.orbits.tower.embed(c));
        for p in &m.orbits.orbits[0].points {
            assert!(vanishes_by_substitution(&m.orbits.big, &lifted, p.coords(), 2));
        }
    }
    let m6 = build_dp6(5, 2).unwrap();
    for g in &m6.basis.forms {
        let lifted = g.map_coeffs(|c| m6.orbits.tower.embed(c));
        for p in m6.orbits.all_points() {
            assert!(vanishes_by_substitution(&m6.orbits.big, &lifted, p.coords(), 1));
        }
    }
}
