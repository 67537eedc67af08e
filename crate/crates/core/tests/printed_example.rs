//! The worked degree-4 example over GF(5), checked against the printed
//! generator matrix.

use std::collections::BTreeSet;

use dpcodes::codes::LinearCode;
use dpcodes::geom::ProjPoint;
use dpcodes::gf::{field_of_order, Poly};
use dpcodes::surfaces::{dp4_code, flynn_from_data};

const G: [&str; 5] = [
    "1304331312042123303230102114231",
    "0000000001111222233334444412320",
    "0012224441123012301221113413110",
    "1340130140331020400141231111100",
    "1111111111111111111111111100000",
];

fn printed_code() -> LinearCode {
    let f = field_of_order(5).unwrap();
    let rows = G.iter().map(|r| r.bytes().map(|b| f.from_int((b - b'0') as i64)).collect()).collect();
    LinearCode::from_rows(f, rows, "printed").unwrap()
}

#[test]
fn printed_matrix_has_stated_parameters() {
    let c = printed_code();
    assert_eq!((c.len(), c.dim(), c.min_distance().unwrap()), (31, 5, 21));
}

#[test]
fn printed_columns_are_the_surface_points() {
    let f = field_of_order(5).unwrap();
    let f2 = Poly::parse(&f, "2,4,1").unwrap();
    let f3 = Poly::parse(&f, "3,3,0,1").unwrap();
    let m = flynn_from_data(&f, &[f2, f3], &Poly::x(&f)).unwrap();
    let printed = printed_code();
    let cols: BTreeSet<ProjPoint> = (0..31).map(|j| ProjPoint::new(&f, printed.column(j)).unwrap()).collect();
    assert_eq!(cols.len(), 31);
    for p in &cols {
        assert!(m.qa.eval(&f, p.coords()).unwrap().is_zero());
        assert!(m.qb.eval(&f, p.coords()).unwrap().is_zero());
    }
    let ours: BTreeSet<ProjPoint> = m.points.iter().cloned().collect();
    assert_eq!(cols, ours);
    // same points, so the same code up to column order and scaling
    let wd_ours = dp4_code(&m).unwrap().weight_distribution().unwrap();
    assert_eq!(wd_ours, printed.weight_distribution().unwrap());
}
