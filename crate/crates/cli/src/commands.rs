//! The subcommands. Each returns its full stdout text and an exit code so
//! runs are reproducible and testable without a process boundary.

use std::fmt::Write as _;
use std::path::Path;

use dpcodes::codes::{compare_best_known, LinearCode, Verdict};
use dpcodes::cremona::auto5;
use dpcodes::gf::{field_of_order, Poly};
use dpcodes::picard::{bounds, expected_parameters, table_degree4, table_degree5, table_degree6, SurfaceType, TypeRow};
use dpcodes::surfaces::{
    build_dp5, build_dp6, flynn_build, flynn_from_data, from_quadrics, parse_quadric_file, verify_pencil_type, ModelFile,
    SurfaceModel,
};
use dpcodes::{Error, Result};

use crate::acceptance;
use crate::config::{Cli, Command, Emit, RunConfig, Source, SurfaceArgs};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION: i32 = 1;
pub const EXIT_GUARD: i32 = 2;
pub const EXIT_INVALID: i32 = 3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Outcome {
        Outcome { stdout, code: EXIT_OK }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Guard(_) | Error::FieldTooLarge { .. } => EXIT_GUARD,
        Error::Verification(_) | Error::PointCount { .. } | Error::RankDeficient { .. } => EXIT_VERIFICATION,
        _ => EXIT_INVALID,
    }
}

/// Runs a parsed command line. Errors become an `error: ...` line and the
/// matching exit code.
pub fn run(cli: &Cli) -> Outcome {
    let res = match &cli.command {
        Command::Build(a) => with_config(a, cmd_build),
        Command::Code(a) => with_config(a, cmd_code),
        Command::Mindist(a) => with_config(a, cmd_mindist),
        Command::Wdist(a) => with_config(a, cmd_wdist),
        Command::Tables { degree } => cmd_tables(*degree),
        Command::Verify { criterion, .. } => Ok(cmd_verify(*criterion)),
        Command::Auto5 { q, seed, emit } => cmd_auto5(*q, *seed, *emit),
        Command::Pencil { file } => cmd_pencil(file),
    };
    res.unwrap_or_else(|e| Outcome { stdout: format!("error: {e}\n"), code: exit_code(&e) })
}

fn with_config(a: &SurfaceArgs, f: fn(&RunConfig) -> Result<Outcome>) -> Result<Outcome> {
    f(&RunConfig::from_args(a)?)
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::InvalidParameters(format!("cannot read {}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::InvalidParameters(format!("cannot write {}: {e}", path.display())))
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("plain data serializes") + "\n"
}

fn parse_delta(f: &dpcodes::FieldCtx, s: &str) -> Result<Poly> {
    if s.trim() == "x" {
        Ok(Poly::x(f))
    } else {
        Poly::parse(f, s)
    }
}

pub fn build_model(cfg: &RunConfig) -> Result<SurfaceModel> {
    match &cfg.source {
        Source::ModelFile(path) => {
            let file: ModelFile =
                serde_json::from_str(&read(path)?).map_err(|e| Error::Parse(format!("model file: {e}")))?;
            SurfaceModel::from_file(&file)
        }
        Source::Seeded { degree: 4, q, surface_type, seed } => Ok(SurfaceModel::Dp4(flynn_build(*q, *surface_type, *seed)?)),
        Source::Seeded { degree: 5, q, seed, .. } => Ok(SurfaceModel::Dp5(build_dp5(*q, *seed)?)),
        Source::Seeded { q, seed, .. } => Ok(SurfaceModel::Dp6(build_dp6(*q, *seed)?)),
        Source::Flynn { q, surface_type, factors, delta } => {
            let field = field_of_order(*q)?;
            let mut polys = Vec::new();
            for (d, s) in factors {
                let g = Poly::parse(&field, s)?;
                if g.deg() != *d {
                    return Err(Error::InvalidParameters(format!("--f{d} {s:?} has degree {}", g.deg())));
                }
                polys.push(g);
            }
            let m = flynn_from_data(&field, &polys, &parse_delta(&field, delta)?)?;
            if let Some(t) = surface_type {
                if m.surface_type != Some(*t) {
                    return Err(Error::InvalidParameters(format!(
                        "factors give pencil type {}, not type {}",
                        m.pencil_type,
                        t.label()
                    )));
                }
            }
            Ok(SurfaceModel::Dp4(m))
        }
    }
}

fn describe(m: &SurfaceModel) -> Result<String> {
    let mut s = format!("degree {} surface over GF({}), seed {}", m.degree(), m.q(), m.seed());
    match (m, m.surface_type()) {
        (SurfaceModel::Dp4(d), Some(t)) => write!(s, ", type {} ({})", t.label(), d.pencil_type).unwrap(),
        (SurfaceModel::Dp4(d), None) => write!(s, ", pencil type {}", d.pencil_type).unwrap(),
        (_, Some(t)) => write!(s, ", type {}", t.label()).unwrap(),
        _ => {}
    }
    writeln!(s).unwrap();
    writeln!(s, "points: {} (trace {})", m.point_count(), m.trace()?).unwrap();
    Ok(s)
}

fn cmd_build(cfg: &RunConfig) -> Result<Outcome> {
    let m = build_model(cfg)?;
    let code = m.code()?;
    let mut out = describe(&m)?;
    writeln!(out, "n={} k={}", code.len(), code.dim()).unwrap();
    let json = to_json(&m.to_file());
    match &cfg.out {
        Some(p) => {
            write(p, &json)?;
            writeln!(out, "model written to {}", p.display()).unwrap();
        }
        None => out.push_str(&json),
    }
    Ok(Outcome::ok(out))
}

fn emit_code(code: &LinearCode, emit: Option<Emit>) -> Result<String> {
    let prime = code.generator().rows() > 0 && code.to_digit_rows().is_ok();
    match emit.unwrap_or(if prime { Emit::Matrix } else { Emit::Json }) {
        Emit::Matrix => {
            let rows = code.to_digit_rows().map_err(|_| {
                Error::InvalidParameters("matrix output needs a prime field of order at most 10; use --emit json".into())
            })?;
            Ok(rows.join("\n") + "\n")
        }
        Emit::Json => Ok(to_json(&code.to_json())),
    }
}

fn cmd_code(cfg: &RunConfig) -> Result<Outcome> {
    let m = build_model(cfg)?;
    let code = m.code()?;
    let text = emit_code(&code, cfg.emit)?;
    let mut out = format!("[{},{}] {}\n", code.len(), code.dim(), code.provenance);
    match &cfg.out {
        Some(p) => {
            write(p, &text)?;
            writeln!(out, "generator written to {}", p.display()).unwrap();
        }
        None => out.push_str(&text),
    }
    Ok(Outcome::ok(out))
}

/// Lower bound the distance must meet: the tabled value for typed
/// surfaces, the section bound otherwise.
fn required_distance(m: &SurfaceModel, n: usize) -> u64 {
    match m.surface_type().and_then(|t| expected_parameters(t, m.q()).ok()) {
        Some((_, _, d)) => d,
        None => (n as u64).saturating_sub(bounds(m.q()).hws),
    }
}

fn distance_line(n: usize, k: usize, q: u64, d: usize) -> String {
    let c = compare_best_known(n, k, q, d);
    match (c.verdict, c.prior_best) {
        (Verdict::Beats, Some(p)) => format!("d={d} beats prior {p}"),
        (Verdict::Attains, Some(p)) => format!("d={d} attains best known {p}"),
        (Verdict::Below, Some(p)) => format!("d={d} below best known {p}"),
        _ => format!("d={d}"),
    }
}

fn cmd_mindist(cfg: &RunConfig) -> Result<Outcome> {
    let m = build_model(cfg)?;
    let code = m.code()?;
    let d = code.min_distance()?;
    let (n, k) = (code.len(), code.dim());
    let mut out = describe(&m)?;
    writeln!(out, "[{n},{k},{d}]").unwrap();
    writeln!(out, "{}", distance_line(n, k, m.q(), d)).unwrap();
    let need = required_distance(&m, n);
    let code_ok = (d as u64) >= need;
    if !code_ok {
        writeln!(out, "expected d >= {need}").unwrap();
    }
    Ok(Outcome { stdout: out, code: if code_ok { EXIT_OK } else { EXIT_VERIFICATION } })
}

fn cmd_wdist(cfg: &RunConfig) -> Result<Outcome> {
    let m = build_model(cfg)?;
    let code = m.code()?;
    let wd = code.weight_distribution()?;
    let mut out = describe(&m)?;
    writeln!(out, "[{},{},{}]", code.len(), code.dim(), wd.min_weight()).unwrap();
    writeln!(out, "weight count").unwrap();
    for (w, c) in wd.full_counts() {
        writeln!(out, "{w} {c}").unwrap();
    }
    Ok(Outcome::ok(out))
}

fn type_table(rows: &[TypeRow]) -> String {
    let mut s = String::from("type  class                 charpoly                trace  rank\n");
    for r in rows {
        let cyc: String = r
            .cyclotomic
            .iter()
            .map(|&(n, e)| if e == 1 { format!("P{n}") } else { format!("P{n}^{e}") })
            .collect::<Vec<_>>()
            .join(" ");
        writeln!(s, "{:<5} {:<21} {:<23} {:>5} {:>5}", r.label, r.class, cyc, r.trace, r.picard_rank).unwrap();
    }
    s
}

fn cmd_tables(degree: u32) -> Result<Outcome> {
    let mut out = String::new();
    let row = |out: &mut String, q: u64, label: &str, tabled: Option<(u64, u64)>, built: Option<Result<(usize, usize, usize)>>| {
        match (tabled, built) {
            (None, _) => writeln!(out, "{q:>2}  {label:<4}").unwrap(),
            (Some((pn, pd)), Some(Ok((n, k, d)))) => {
                let mark = if (n as u64, d as u64) == (pn, pd) { "" } else { "  (differs)" };
                writeln!(out, "{q:>2}  {label:<4}  [{n},{k},{d}]  tabled [{pn},{k},{pd}]{mark}").unwrap()
            }
            (Some((pn, pd)), Some(Err(e))) => writeln!(out, "{q:>2}  {label:<4}  error: {e}  tabled [{pn},_,{pd}]").unwrap(),
            (Some(_), None) => unreachable!(),
        }
    };
    let params = |m: Result<SurfaceModel>| -> Result<(usize, usize, usize)> {
        let c = m?.code()?;
        Ok((c.len(), c.dim(), c.min_distance()?))
    };
    writeln!(out, " q  type  computed       tabled").unwrap();
    match degree {
        4 => {
            for &(q, t, tabled) in acceptance::DEGREE4_TABLE {
                let built = tabled.map(|_| params(flynn_build(q, t, 0).map(SurfaceModel::Dp4)));
                row(&mut out, q, t.label(), tabled, built);
            }
            out.push('\n');
            out.push_str(&type_table(&table_degree4()));
        }
        5 => {
            for &(q, n, d) in acceptance::DEGREE5_TABLE {
                let built = params(build_dp5(q, 0).map(SurfaceModel::Dp5));
                row(&mut out, q, SurfaceType::Five7.label(), Some((n, d)), Some(built));
            }
            out.push('\n');
            out.push_str(&type_table(&table_degree5()));
        }
        6 => {
            for &(q, n, d) in acceptance::DEGREE6_TABLE {
                let built = params(build_dp6(q, 0).map(SurfaceModel::Dp6));
                row(&mut out, q, SurfaceType::Six6.label(), Some((n, d)), Some(built));
            }
            out.push('\n');
            out.push_str(&type_table(&table_degree6()));
        }
        d => return Err(Error::InvalidParameters(format!("no table for degree {d}"))),
    }
    Ok(Outcome::ok(out))
}

fn cmd_verify(criterion: Option<u32>) -> Outcome {
    let ids: Vec<u32> = match criterion {
        Some(c) => vec![c],
        None => (1..=acceptance::CRITERIA).collect(),
    };
    let mut out = String::new();
    let mut ok = true;
    for id in ids {
        let r = acceptance::run_criterion(id);
        ok &= r.passed;
        out.push_str(&r.report());
    }
    Outcome { stdout: out, code: if ok { EXIT_OK } else { EXIT_VERIFICATION } }
}

fn cmd_auto5(q: u64, seed: u64, emit: Option<Emit>) -> Result<Outcome> {
    let m = build_dp5(q, seed)?;
    let r = auto5(&m)?;
    let f = &m.field;
    if emit == Some(Emit::Json) {
        return Ok(Outcome::ok(to_json(&r.to_json(f))));
    }
    let mut out = format!("degree 5 surface over GF({q}), seed {seed}\nA =\n");
    for row in r.data.unit_a(f).to_rows() {
        writeln!(out, "  {}", row.iter().map(|&c| f.format(c)).collect::<Vec<_>>().join(" ")).unwrap();
    }
    writeln!(out, "permutation: {}", cycles(&r.map.perm)).unwrap();
    writeln!(out, "scales: {}", r.map.scales.iter().map(|&c| f.format(c)).collect::<Vec<_>>().join(" ")).unwrap();
    writeln!(out, "fixed points: {}", r.fixed_points).unwrap();
    writeln!(out, "order {}, automorphism: {}", r.order, if r.is_automorphism { "yes" } else { "no" }).unwrap();
    let code = if r.is_automorphism && r.order == 5 { EXIT_OK } else { EXIT_VERIFICATION };
    Ok(Outcome { stdout: out, code })
}

/// Cycle notation, fixed points omitted, 0-based columns.
fn cycles(perm: &[usize]) -> String {
    let mut seen = vec![false; perm.len()];
    let mut parts = Vec::new();
    for s in 0..perm.len() {
        if seen[s] || perm[s] == s {
            continue;
        }
        let mut c = Vec::new();
        let mut j = s;
        while !seen[j] {
            seen[j] = true;
            c.push(j.to_string());
            j = perm[j];
        }
        parts.push(format!("({})", c.join(" ")));
    }
    if parts.is_empty() {
        "()".into()
    } else {
        parts.concat()
    }
}

fn cmd_pencil(file: &Path) -> Result<Outcome> {
    let (field, qa, qb) = parse_quadric_file(&read(file)?)?;
    let t = match verify_pencil_type(&field, &qa, &qb) {
        Ok(t) => t,
        Err(e @ Error::SingularPencil(_)) => {
            return Ok(Outcome { stdout: format!("rejected: {e}\n"), code: EXIT_INVALID });
        }
        Err(e) => return Err(e),
    };
    let mut out = format!("pencil type {t}\n");
    let m = from_quadrics(&field, qa, qb, 0)?;
    let code = SurfaceModel::Dp4(m).code()?;
    let d = code.min_distance()?;
    writeln!(out, "[{},{},{}]", code.len(), code.dim(), d).unwrap();
    Ok(Outcome::ok(out))
}
