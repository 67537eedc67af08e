//! The ten acceptance criteria. Each runs independently, never panics, and
//! reports its findings line by line.

use std::collections::{BTreeSet, HashSet};
use std::fmt::Write as _;

use dpcodes::codes::{compare_best_known, LinearCode, MonomialMap, Verdict};
use dpcodes::cremona::{auto5, fifth_power_scalar};
use dpcodes::geom::HomForm;
use dpcodes::gf::{field_of_order, Fe, FieldCtx, Poly};
use dpcodes::picard::{
    bounds, cyclotomic_product, degree5_frobenius, degree6_frobenius, table_degree4, table_degree5, table_degree6, Basis,
    FrobAction, SurfaceType,
};
use dpcodes::surfaces::{
    build_dp5, build_dp6, flynn_build, flynn_from_data, from_quadrics, parse_quadric_file, SurfaceModel, F8_QUADRICS,
};
use dpcodes::Result;

pub const CRITERIA: u32 = 10;

/// Parameter table for degree 4: `(q, type, Some((n, d)))`, `None` where
/// the type does not exist.
pub const DEGREE4_TABLE: &[(u64, SurfaceType, Option<(u64, u64)>)] = &[
    (3, SurfaceType::Four1, None),
    (3, SurfaceType::Four2, Some((10, 3))),
    (3, SurfaceType::Four3, Some((13, 6))),
    (5, SurfaceType::Four1, Some((16, 6))),
    (5, SurfaceType::Four2, Some((26, 16))),
    (5, SurfaceType::Four3, Some((31, 21))),
    (7, SurfaceType::Four1, Some((36, 23))),
    (7, SurfaceType::Four2, Some((50, 37))),
    (7, SurfaceType::Four3, Some((57, 44))),
    (9, SurfaceType::Four1, Some((64, 48))),
    (9, SurfaceType::Four2, Some((82, 66))),
    (9, SurfaceType::Four3, Some((91, 75))),
];

/// `(q, n, d)` for degree 5 (`k = 6`).
pub const DEGREE5_TABLE: &[(u64, u64, u64)] = &[(3, 10, 3), (4, 17, 8), (5, 26, 16), (7, 50, 37), (8, 65, 51), (9, 82, 66)];

/// `(q, n, d)` for degree 6 (`k = 7`).
pub const DEGREE6_TABLE: &[(u64, u64, u64)] = &[(4, 13, 5), (5, 21, 11), (7, 43, 30), (8, 57, 43), (9, 73, 57)];

/// The worked degree-4 example over GF(5).
pub const F5_F2: &str = "2,4,1";
pub const F5_F3: &str = "3,3,0,1";
pub const F5_Q3: &str = "x1^2 + 2*x0*x2 + 2*x3^2 + 4*x2*x4 + 2*x3*x4 + x4^2";
pub const F5_Q4: &str =
    "2*x1*x2 + x2^2 + 2*x0*x3 + 2*x1*x3 + 2*x2*x3 + x3^2 + 2*x0*x4 + 2*x1*x4 + 2*x2*x4 + x3*x4 + 4*x4^2";

/// Seeds tried when a table entry must be met by some seed-built surface.
pub const SEED_SEARCH: u64 = 16;

#[derive(Clone, Debug)]
pub struct CriterionReport {
    pub id: u32,
    pub title: &'static str,
    pub passed: bool,
    pub details: Vec<String>,
}

impl CriterionReport {
    /// The one-line verdict.
    pub fn line(&self) -> String {
        format!("criterion {:>2}: {} - {}", self.id, if self.passed { "PASS" } else { "FAIL" }, self.title)
    }

    pub fn report(&self) -> String {
        let mut s = self.line() + "\n";
        for d in &self.details {
            writeln!(s, "    {d}").unwrap();
        }
        s
    }
}

struct Log {
    passed: bool,
    details: Vec<String>,
}

impl Log {
    fn new() -> Log {
        Log { passed: true, details: Vec::new() }
    }

    fn check(&mut self, ok: bool, msg: String) {
        self.passed &= ok;
        self.details.push(format!("{} {msg}", if ok { "ok  " } else { "FAIL" }));
    }

    /// Records an error from a step that should have succeeded.
    fn attempt<T>(&mut self, what: &str, r: Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.check(false, format!("{what}: {e}"));
                None
            }
        }
    }
}

pub fn title(id: u32) -> &'static str {
    match id {
        1 => "worked degree-4 example over GF(5)",
        2 => "degree-4 parameter table",
        3 => "GF(8) quadric fixture",
        4 => "degree-5 parameter table and best-known verdicts",
        5 => "degree-6 parameters",
        6 => "point-count law",
        7 => "section bound on every weight",
        8 => "order-5 automorphism",
        9 => "distance oracle equivalence",
        10 => "Frobenius table metadata",
        _ => "unknown criterion",
    }
}

pub fn run_criterion(id: u32) -> CriterionReport {
    let mut log = Log::new();
    match id {
        1 => c1(&mut log),
        2 => c2(&mut log),
        3 => c3(&mut log),
        4 => c4(&mut log),
        5 => c5(&mut log),
        6 => c6(&mut log),
        7 => c7(&mut log),
        8 => c8(&mut log),
        9 => c9(&mut log),
        10 => c10(&mut log),
        _ => log.check(false, format!("no criterion {id}")),
    }
    CriterionReport { id, title: title(id), passed: log.passed, details: log.details }
}

pub fn run_all() -> Vec<CriterionReport> {
    (1..=CRITERIA).map(run_criterion).collect()
}

fn params(code: &LinearCode) -> Result<(usize, usize, usize)> {
    Ok((code.len(), code.dim(), code.min_distance()?))
}

fn fmt3((n, k, d): (usize, usize, usize)) -> String {
    format!("[{n},{k},{d}]")
}

fn c1(log: &mut Log) {
    let Some(field) = log.attempt("GF(5)", field_of_order(5)) else { return };
    let f: &FieldCtx = &field;
    let parse = |s: &str| Poly::parse(f, s);
    let (Some(f2), Some(f3)) = (log.attempt("f2", parse(F5_F2)), log.attempt("f3", parse(F5_F3))) else { return };
    let Some(m) = log.attempt("Flynn model", flynn_from_data(&field, &[f2, f3], &Poly::x(f))) else { return };
    let fl = m.flynn.as_ref().expect("built from Flynn data");
    for (name, text, got) in [("Q3", F5_Q3, &fl.quadrics[3]), ("Q4", F5_Q4, &fl.quadrics[4])] {
        if let Some(want) = log.attempt(name, HomForm::parse_expr(f, 5, "z", text)) {
            log.check(*got == want, format!("{name} = {}", got.to_text(f)));
        }
    }
    log.check(m.points.len() == 31, format!("{} rational points", m.points.len()));
    if let Some(p) = log.attempt("code", SurfaceModel::Dp4(m).code().and_then(|c| params(&c))) {
        log.check(p == (31, 5, 21), fmt3(p));
    }
}

fn c2(log: &mut Log) {
    for &(q, t, tabled) in DEGREE4_TABLE {
        let Some((n, d)) = tabled else {
            let r = flynn_build(q, t, 0);
            log.check(r.is_err(), format!("q={q} {}: rejected ({})", t.label(), r.err().map_or("built".into(), |e| e.to_string())));
            continue;
        };
        let mut seen = BTreeSet::new();
        let mut hit = None;
        for seed in 0..SEED_SEARCH {
            let r = flynn_build(q, t, seed).and_then(|m| params(&SurfaceModel::Dp4(m).code()?));
            match r {
                Ok(p) if p == (n as usize, 5, d as usize) => {
                    hit = Some(seed);
                    break;
                }
                Ok(p) => {
                    seen.insert(fmt3(p));
                }
                Err(e) => {
                    seen.insert(format!("error: {e}"));
                }
            }
        }
        let want = format!("[{n},5,{d}]");
        match hit {
            Some(seed) => log.check(true, format!("q={q} {}: {want} at seed {seed}", t.label())),
            None => log.check(
                false,
                format!("q={q} {}: no seed in 0..{SEED_SEARCH} gives {want}; got {}", t.label(), seen.into_iter().collect::<Vec<_>>().join(", ")),
            ),
        }
    }
}

fn c3(log: &mut Log) {
    let Some((field, qa, qb)) = log.attempt("fixture", parse_quadric_file(F8_QUADRICS)) else { return };
    let Some(m) = log.attempt("surface", from_quadrics(&field, qa, qb, 0)) else { return };
    log.check(m.pencil_type == "3[-1]2[-1]", format!("pencil type {}", m.pencil_type));
    if let Some(p) = log.attempt("code", SurfaceModel::Dp4(m).code().and_then(|c| params(&c))) {
        log.check(p == (73, 5, 59), fmt3(p));
    }
}

fn c4(log: &mut Log) {
    for &(q, n, d) in DEGREE5_TABLE {
        let Some(p) = log.attempt(&format!("q={q}"), build_dp5(q, 0).and_then(|m| params(&SurfaceModel::Dp5(m).code()?)))
        else {
            continue;
        };
        log.check(p == (n as usize, 6, d as usize), format!("q={q}: {}", fmt3(p)));
        if q == 8 || q == 9 {
            let c = compare_best_known(p.0, p.1, q, p.2);
            let prior = if q == 8 { 50 } else { 65 };
            log.check(
                c.verdict == Verdict::Beats && c.prior_best == Some(prior),
                format!("q={q}: {} prior {}", c.verdict, c.prior_best.map_or("-".into(), |x| x.to_string())),
            );
        }
    }
}

fn c5(log: &mut Log) {
    for &(q, n, d) in DEGREE6_TABLE {
        let seeds: &[u64] = if q == 4 { &[0] } else { &[0, 1, 2] };
        for &seed in seeds {
            let r = build_dp6(q, seed).and_then(|m| params(&SurfaceModel::Dp6(m).code()?));
            if let Some(p) = log.attempt(&format!("q={q} seed {seed}"), r) {
                log.check(p == (n as usize, 7, d as usize), format!("q={q} seed {seed}: {}", fmt3(p)));
            }
        }
    }
}

/// Every (degree, q, type) built in the tables, as a seeded builder.
fn all_configurations() -> Vec<(String, Box<dyn Fn(u64) -> Result<SurfaceModel>>)> {
    let mut v: Vec<(String, Box<dyn Fn(u64) -> Result<SurfaceModel>>)> = Vec::new();
    for &(q, t, tabled) in DEGREE4_TABLE {
        if tabled.is_some() {
            v.push((format!("degree 4 q={q} {}", t.label()), Box::new(move |s| flynn_build(q, t, s).map(SurfaceModel::Dp4))));
        }
    }
    for &(q, _, _) in DEGREE5_TABLE {
        v.push((format!("degree 5 q={q}"), Box::new(move |s| build_dp5(q, s).map(SurfaceModel::Dp5))));
    }
    for &(q, _, _) in DEGREE6_TABLE {
        v.push((format!("degree 6 q={q}"), Box::new(move |s| build_dp6(q, s).map(SurfaceModel::Dp6))));
    }
    v
}

fn c6(log: &mut Log) {
    for (name, build) in all_configurations() {
        for seed in 0..3 {
            let Some(m) = log.attempt(&format!("{name} seed {seed}"), build(seed)) else { continue };
            let Some(tr) = log.attempt(&name, m.trace()) else { continue };
            let allowed: &[i64] = match m.degree() {
                6 => &[-1],
                5 => &[0],
                _ => &[-2, 0, 1],
            };
            let q = m.q() as i64;
            let want = q * q + q * tr + 1;
            let got = m.point_count() as i64;
            log.check(
                allowed.contains(&tr) && got == want,
                format!("{name} seed {seed}: {got} points, q^2 + q({tr}) + 1 = {want}"),
            );
        }
    }
}

fn c7(log: &mut Log) {
    let mut codes: Vec<(String, Result<LinearCode>)> =
        all_configurations().into_iter().map(|(name, b)| (name, b(0).and_then(|m| m.code()))).collect();
    let f8 = parse_quadric_file(F8_QUADRICS)
        .and_then(|(f, a, b)| from_quadrics(&f, a, b, 0))
        .and_then(|m| SurfaceModel::Dp4(m).code());
    codes.push(("GF(8) fixture".into(), f8));
    for (name, code) in codes {
        let Some(code) = log.attempt(&name, code) else { continue };
        let Some(wd) = log.attempt(&name, code.weight_distribution()) else { continue };
        let floor = code.len() as i64 - bounds(code.q()).hws as i64;
        let low = wd.counts.keys().copied().min().unwrap_or(0);
        log.check(low as i64 >= floor, format!("{name}: lowest weight {low} >= {floor}"));
    }
}

fn c8(log: &mut Log) {
    for q in [3u64, 4, 5] {
        let Some(m) = log.attempt(&format!("q={q} model"), build_dp5(q, 0)) else { continue };
        let Some(r) = log.attempt(&format!("q={q} pipeline"), auto5(&m)) else { continue };
        let f: &FieldCtx = &m.field;
        let scalar = fifth_power_scalar(f, &r.data.a).ok().flatten();
        log.check(scalar.is_some(), format!("q={q}: A rational, A^5 = c I"));
        log.check(
            r.order == 5 && r.is_automorphism,
            format!("q={q}: monomial map of order {} (permutation order {}), automorphism: {}", r.order, r.perm_order, r.is_automorphism),
        );
        let Some(code) = log.attempt("code", SurfaceModel::Dp5(m.clone()).code()) else { continue };
        let mut maps: HashSet<MonomialMap> = HashSet::new();
        let mut all_auto = true;
        let mut power = MonomialMap::identity(f, code.len());
        for _ in 0..5 {
            for lam in f.elements().filter(|x| !x.is_zero()) {
                let Ok(g) = MonomialMap::scalar(code.len(), lam).compose(f, &power) else {
                    all_auto = false;
                    continue;
                };
                all_auto &= code.is_automorphism(&g).unwrap_or(false);
                maps.insert(g);
            }
            power = match r.map.compose(f, &power) {
                Ok(p) => p,
                Err(_) => break,
            };
        }
        let want = 5 * (q as usize - 1);
        log.check(maps.len() == want && all_auto, format!("q={q}: {} distinct automorphisms, expected {want}", maps.len()));
    }
}

/// `n - max` over all sections of the number of columns where it vanishes,
/// by direct evaluation of every projective message.
pub fn vanishing_oracle(code: &LinearCode) -> usize {
    let f: &FieldCtx = &code.field;
    let k = code.dim();
    let n = code.len();
    let cols: Vec<Vec<Fe>> = (0..n).map(|j| code.column(j)).collect();
    let q = f.order() as u64;
    let mut best = 0;
    // messages with first nonzero entry one
    for lead in 0..k {
        let tail = k - lead - 1;
        for idx in 0..q.pow(tail as u32) {
            let mut msg = vec![Fe::ZERO; k];
            msg[lead] = f.one();
            let mut r = idx;
            for slot in msg.iter_mut().skip(lead + 1) {
                *slot = f.element((r % q) as u32);
                r /= q;
            }
            let zeros = cols
                .iter()
                .filter(|c| c.iter().zip(&msg).fold(f.zero(), |acc, (&a, &b)| f.add(acc, f.mul(a, b))).is_zero())
                .count();
            best = best.max(zeros);
        }
    }
    n - best
}

fn c9(log: &mut Log) {
    let cases: [(&str, Result<LinearCode>); 2] = [
        ("degree 5 q=3", build_dp5(3, 0).and_then(|m| SurfaceModel::Dp5(m).code())),
        ("degree 6 q=4", build_dp6(4, 0).and_then(|m| SurfaceModel::Dp6(m).code())),
    ];
    for (name, code) in cases {
        let Some(code) = log.attempt(name, code) else { continue };
        let Some(d) = log.attempt(name, code.min_distance()) else { continue };
        let oracle = vanishing_oracle(&code);
        log.check(d == oracle, format!("{name}: enumeration d={d}, vanishing-column oracle d={oracle}"));
    }
}

fn c10(log: &mut Log) {
    let tables = [("degree 6", table_degree6()), ("degree 5", table_degree5()), ("degree 4", table_degree4())];
    for (name, rows) in tables {
        for r in rows {
            let a = FrobAction { matrix: r.matrix.clone(), basis: Basis::E };
            let ok = a.preserves_form()
                && a.fixes_canonical()
                && a.trace() == r.trace
                && a.charpoly() == cyclotomic_product(&r.cyclotomic)
                && a.invariant_rank() as u32 == r.picard_rank;
            log.check(ok, format!("{name} {} ({}): trace {}, rank {}", r.label, r.class, a.trace(), a.invariant_rank()));
        }
    }
    for (name, a, tr) in [("degree-6 matrix", degree6_frobenius(), -1), ("degree-5 matrix", degree5_frobenius(), 0)] {
        log.check(
            a.preserves_form() && a.fixes_canonical() && a.trace() == tr,
            format!("{name}: trace {}, preserves form {}, fixes K {}", a.trace(), a.preserves_form(), a.fixes_canonical()),
        );
    }
}
