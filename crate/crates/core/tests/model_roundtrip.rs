use dpcodes::picard::SurfaceType;
use dpcodes::surfaces::{build_dp5, build_dp6, flynn_build, ModelFile, SurfaceModel};

fn replay(m: SurfaceModel) {
    let json = serde_json::to_string(&m.to_file()).unwrap();
    let file: ModelFile = serde_json::from_str(&json).unwrap();
    let back = SurfaceModel::from_file(&file).unwrap();
    assert_eq!(back.degree(), m.degree());
    assert_eq!(back.seed(), m.seed());
    assert_eq!(back.code().unwrap().generator(), m.code().unwrap().generator());
    assert_eq!(serde_json::to_string(&back.to_file()).unwrap(), json);
}

#[test]
fn every_degree_replays_from_json() {
    replay(SurfaceModel::Dp5(build_dp5(7, 3).unwrap()));
    replay(SurfaceModel::Dp5(build_dp5(4, 1).unwrap()));
    replay(SurfaceModel::Dp6(build_dp6(5, 3).unwrap()));
    replay(SurfaceModel::Dp6(build_dp6(8, 0).unwrap()));
    for t in [SurfaceType::Four1, SurfaceType::Four2, SurfaceType::Four3] {
        replay(SurfaceModel::Dp4(flynn_build(7, t, 2).unwrap()));
    }
}

#[test]
fn tampered_basis_is_rejected() {
    let m = SurfaceModel::Dp5(build_dp5(5, 0).unwrap());
    let mut v = serde_json::to_value(m.to_file()).unwrap();
    let basis = v.pointer_mut("/basis/0").unwrap();
    *basis = serde_json::Value::String("x0^5".into());
    let file: ModelFile = serde_json::from_value(v).unwrap();
    assert!(SurfaceModel::from_file(&file).is_err());
}
