//! `gmepw`: command line front end. Reads and writes versioned JSON documents; exit code 0 on
//! success, 1 when a mathematical identity fails, 2 on bad input.

use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use gm_epw::correspondence::{dim_report, dualize, gm_to_lagrangian, hyperplane_section_lagrangian, lagrangian_to_gm, LagrangianData, A1};
use gm_epw::epw::{hyperplane, stratum_poly_on_line, y_dual_stratum, y_stratum, z_stratum, LineKind};
use gm_epw::exterior::MultiVector;
use gm_epw::fibration::{fibration1_fiber, fibration2_fiber, FiberReport};
use gm_epw::fixtures;
use gm_epw::gm::{DiscriminantOnLine, GmData, Membership};
use gm_epw::io::{emit, parse, parse_multivector, parse_vector, parse_vectors, poly_json, vec_json, Document};
use gm_epw::random::{random_nonzero_vec, random_subspace, rng};
use gm_epw::rat::format_rat;
use gm_epw::{Error, Rat, Subspace};

#[derive(Parser)]
#[command(name = "gmepw", version, about = "Exact computations with GM data, Lagrangian data and EPW strata")]
struct Cli {
    /// Write output here instead of standard output.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Y,
    Z,
}

#[derive(Clone, Copy, ValueEnum)]
enum A1Flag {
    #[value(name = "0")]
    Zero,
    #[value(name = "1")]
    One,
}

#[derive(Subcommand)]
enum Command {
    /// Check symmetry and the Plücker identities of GM data and report its type.
    Validate { input: Option<PathBuf> },
    /// GM data to Lagrangian data.
    ToLagrangian { input: Option<PathBuf> },
    /// Lagrangian data to canonical GM data.
    FromLagrangian {
        /// Overrides the A1 tag of the input.
        #[arg(long, value_enum)]
        a1: Option<A1Flag>,
        input: Option<PathBuf>,
    },
    /// The dual Lagrangian A^⊥.
    Dualize { input: Option<PathBuf> },
    /// dim(A ∩ Λ³V5) and the predicted dimension.
    DimReport { input: Option<PathBuf> },
    /// Y-strata of points of P(V6).
    EpwPoint {
        /// Six comma-separated rationals; repeatable.
        #[arg(long = "point")]
        points: Vec<String>,
        /// Add this many random points.
        #[arg(long, default_value_t = 0)]
        random: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        input: Option<PathBuf>,
    },
    /// Strata of hyperplanes ker f in the dual sextic.
    EpwDualPoint {
        /// The functional f, six comma-separated rationals; repeatable.
        #[arg(long = "hyperplane")]
        hyperplanes: Vec<String>,
        input: Option<PathBuf>,
    },
    /// Degree certificate of Y_A on a line or Z_A on a pencil of planes.
    EpwLine {
        #[arg(long, value_enum)]
        kind: Kind,
        /// `base;dir` for y, `u1;u2;u3;u4` for z. Random when omitted.
        #[arg(long)]
        vectors: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Parameters at which membership is cross-checked.
        #[arg(long, default_value_t = 20)]
        samples: usize,
        input: Option<PathBuf>,
    },
    /// Z-strata of planes V3 ⊂ V6.
    ZetaPlane {
        /// Three vectors `u;v;w`; repeatable.
        #[arg(long = "plane")]
        planes: Vec<String>,
        input: Option<PathBuf>,
    },
    /// det q(v) along a line, divided by the Plücker factor.
    DiscLine {
        /// `va;vb`. Random when omitted.
        #[arg(long)]
        line: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        input: Option<PathBuf>,
    },
    /// First quadric fibration over points of P(V5); CSV output.
    Fib1 {
        /// Five or six comma-separated rationals; repeatable.
        #[arg(long = "point")]
        points: Vec<String>,
        #[arg(long, default_value_t = 0)]
        random: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        input: Option<PathBuf>,
    },
    /// Second quadric fibration over planes of V5; CSV output.
    Fib2 {
        /// Three vectors `u;v;w` of V5; repeatable.
        #[arg(long = "plane")]
        planes: Vec<String>,
        #[arg(long, default_value_t = 0)]
        random: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        input: Option<PathBuf>,
    },
    /// Points of the Grassmannian hull.
    HullSample {
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: u64,
        input: Option<PathBuf>,
    },
    /// Opposite GM data: ordinary to special and back.
    Opposite { input: Option<PathBuf> },
    /// Lagrangian of a hyperplane section, for η0 ∈ Λ³V5.
    HyperplaneUpdate {
        /// `e125 + e134` or 20 comma-separated coordinates.
        #[arg(long)]
        eta0: String,
        input: Option<PathBuf>,
    },
    /// Invariant suite on the built-in fixtures.
    Selftest,
    /// Emit a built-in fixture.
    Fixture {
        /// Fixture name; `list` prints the names.
        name: String,
        /// Emit the Lagrangian data instead of GM data.
        #[arg(long)]
        lagrangian: bool,
    },
}

enum Failure {
    Violation(String),
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_violation() {
            Failure::Violation(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

type Res<T> = Result<T, Failure>;

fn input_err<T>(msg: impl Into<String>) -> Res<T> {
    Err(Failure::Input(msg.into()))
}

fn read_doc(path: &Option<PathBuf>) -> Res<Document> {
    let text = match path {
        Some(p) if p.as_os_str() != "-" => fs::read_to_string(p).map_err(|e| Failure::Input(format!("{}: {e}", p.display())))?,
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(|e| Failure::Input(format!("stdin: {e}")))?;
            s
        }
    };
    Ok(parse(&text)?)
}

fn read_gm(path: &Option<PathBuf>) -> Res<GmData> {
    match read_doc(path)? {
        Document::Gm(d) => Ok(d),
        other => input_err(format!("expected gm_data, found {}", other.kind())),
    }
}

/// Lagrangian data, converting GM data when given.
fn read_lagrangian(path: &Option<PathBuf>) -> Res<LagrangianData> {
    match read_doc(path)? {
        Document::Lagrangian(l) => Ok(l),
        Document::Gm(d) => Ok(gm_to_lagrangian(&d)?),
        other => input_err(format!("expected lagrangian_data or gm_data, found {}", other.kind())),
    }
}

fn csv_vec(v: &[Rat]) -> String {
    v.iter().map(format_rat).collect::<Vec<_>>().join(" ")
}

fn v5_vector(s: &str) -> Res<Vec<Rat>> {
    let n = s.split(',').count();
    let mut v = parse_vector(s, if n == 5 { 5 } else { 6 })?;
    if v.len() == 5 {
        v.push(Rat::from_integer(0.into()));
    }
    Ok(v)
}

fn plane(s: &str, v5_only: bool) -> Res<Subspace> {
    let vs: Vec<Vec<Rat>> = if v5_only { s.split(';').map(v5_vector).collect::<Res<_>>()? } else { parse_vectors(s, 6)? };
    let p = Subspace::span(&vs, 6);
    if vs.len() != 3 || p.dim() != 3 {
        return input_err(format!("'{s}' does not span a 3-dimensional subspace"));
    }
    Ok(p)
}

fn random_v5_plane(r: &mut gm_epw::random::TestRng) -> Subspace {
    let s = random_subspace(r, 5, 3);
    let rows: Vec<Vec<Rat>> = s
        .basis_vecs()
        .into_iter()
        .map(|mut v| {
            v.push(Rat::from_integer(0.into()));
            v
        })
        .collect();
    Subspace::span(&rows, 6)
}

fn report(v: Value) -> String {
    emit(&Document::Report(v))
}

const CSV_HEADER: &str = "query,sigma_level,stratum,ambient,corank,agree\n";

fn csv_row(query: String, f: &FiberReport) -> String {
    format!("{query},{},{},{},{},{}\n", f.sigma_level, f.stratum, f.ambient, f.corank, f.agree)
}

fn gm_fixture(name: &str) -> Option<GmData> {
    fixtures::gm_fixtures().into_iter().find(|(n, _)| *n == name).map(|(_, d)| d)
}

fn run(cmd: Command) -> Res<(String, bool)> {
    let ok = |s: String| Ok((s, true));
    match cmd {
        Command::Validate { input } => {
            let d = read_gm(&input)?;
            let t = d.validate()?;
            ok(report(json!({ "valid": true, "type": t.name(), "n": d.n(), "dim_w": d.dim_w() })))
        }
        Command::ToLagrangian { input } => ok(emit(&Document::Lagrangian(gm_to_lagrangian(&read_gm(&input)?)?))),
        Command::FromLagrangian { a1, input } => {
            let mut ld = read_lagrangian(&input)?;
            match a1 {
                Some(A1Flag::Zero) => ld.a1 = A1::Zero,
                Some(A1Flag::One) => ld.a1 = A1::One,
                None => {}
            }
            ok(emit(&Document::Gm(lagrangian_to_gm(&ld)?)))
        }
        Command::Dualize { input } => ok(emit(&Document::Lagrangian(dualize(&read_lagrangian(&input)?)?))),
        Command::DimReport { input } => {
            let r = dim_report(&read_lagrangian(&input)?)?;
            ok(report(json!({
                "dim_a_cap_l3v5": r.dim_a_cap_l3v5,
                "predicted_n": r.predicted_n,
                "gm_type": r.gm_type.name(),
                "degenerate": r.degenerate,
            })))
        }
        Command::EpwPoint { points, random, seed, input } => {
            let ld = read_lagrangian(&input)?;
            let mut vs: Vec<Vec<Rat>> = points.iter().map(|p| parse_vector(p, 6)).collect::<Result<_, _>>()?;
            let mut r = rng(seed);
            vs.extend((0..random).map(|_| random_nonzero_vec(&mut r, 6)));
            let rows = vs
                .iter()
                .map(|v| Ok(json!({ "point": vec_json(v), "y_stratum": y_stratum(&ld.a, v)? })))
                .collect::<Res<Vec<_>>>()?;
            ok(report(json!({ "points": rows })))
        }
        Command::EpwDualPoint { hyperplanes, input } => {
            let ld = read_lagrangian(&input)?;
            let rows = hyperplanes
                .iter()
                .map(|h| {
                    let f = parse_vector(h, 6)?;
                    Ok(json!({ "hyperplane": vec_json(&f), "y_dual_stratum": y_dual_stratum(&ld.a, &hyperplane(&f)?)? }))
                })
                .collect::<Res<Vec<_>>>()?;
            ok(report(json!({ "hyperplanes": rows })))
        }
        Command::EpwLine { kind, vectors, seed, samples, input } => {
            let ld = read_lagrangian(&input)?;
            let (k, count) = match kind {
                Kind::Y => (LineKind::Y, 2),
                Kind::Z => (LineKind::Z, 4),
            };
            let vs = match vectors {
                Some(s) => parse_vectors(&s, 6)?,
                None => {
                    let mut r = rng(seed);
                    (0..count).map(|_| random_nonzero_vec(&mut r, 6)).collect()
                }
            };
            if vs.len() != count {
                return input_err(format!("{} vectors needed, found {}", count, vs.len()));
            }
            ok(emit(&Document::Certificate(stratum_poly_on_line(&ld.a, k, &vs, samples)?)))
        }
        Command::ZetaPlane { planes, input } => {
            let ld = read_lagrangian(&input)?;
            let rows = planes
                .iter()
                .map(|p| {
                    let v3 = plane(p, false)?;
                    Ok(json!({ "plane": gm_epw::io::subspace_json(&v3), "z_stratum": z_stratum(&ld.a, &v3)? }))
                })
                .collect::<Res<Vec<_>>>()?;
            ok(report(json!({ "planes": rows })))
        }
        Command::DiscLine { line, seed, input } => {
            let d = read_gm(&input)?;
            let (va, vb) = match line {
                Some(s) => {
                    let vs = parse_vectors(&s, 6)?;
                    if vs.len() != 2 {
                        return input_err("a line needs two vectors `va;vb`");
                    }
                    (vs[0].clone(), vs[1].clone())
                }
                None => {
                    let mut r = rng(seed);
                    (random_nonzero_vec(&mut r, 6), GmData::random_point_off_v5(&mut r))
                }
            };
            let body = match d.discriminant_on_line(&va, &vb)? {
                DiscriminantOnLine::WholeLine => json!({ "va": vec_json(&va), "vb": vec_json(&vb), "whole_line": true }),
                DiscriminantOnLine::Curve { det_poly, plucker_mult, expected_mult, dis_poly } => json!({
                    "va": vec_json(&va),
                    "vb": vec_json(&vb),
                    "whole_line": false,
                    "det_poly": poly_json(&det_poly),
                    "plucker_mult": plucker_mult,
                    "expected_mult": expected_mult,
                    "dis_poly": poly_json(&dis_poly),
                    "dis_degree": dis_poly.degree(),
                }),
            };
            ok(report(body))
        }
        Command::Fib1 { points, random, seed, input } => {
            let ld = read_lagrangian(&input)?;
            let mut vs: Vec<Vec<Rat>> = points.iter().map(|p| v5_vector(p)).collect::<Res<_>>()?;
            let mut r = rng(seed);
            vs.extend((0..random).map(|_| {
                let mut v = random_nonzero_vec(&mut r, 5);
                v.push(Rat::from_integer(0.into()));
                v
            }));
            let mut out = String::from(CSV_HEADER);
            let mut all = true;
            for v in &vs {
                let f = fibration1_fiber(&ld, v)?;
                all &= f.agree;
                out.push_str(&csv_row(csv_vec(v), &f));
            }
            Ok((out, all))
        }
        Command::Fib2 { planes, random, seed, input } => {
            let ld = read_lagrangian(&input)?;
            let mut ps: Vec<Subspace> = planes.iter().map(|p| plane(p, true)).collect::<Res<_>>()?;
            let mut r = rng(seed);
            ps.extend((0..random).map(|_| random_v5_plane(&mut r)));
            let mut out = String::from(CSV_HEADER);
            let mut all = true;
            for p in &ps {
                let f = fibration2_fiber(&ld, p)?;
                all &= f.agree;
                let q = p.basis_vecs().iter().map(|v| csv_vec(v)).collect::<Vec<_>>().join(";");
                out.push_str(&csv_row(q, &f));
            }
            Ok((out, all))
        }
        Command::HullSample { seed, count, input } => {
            let d = read_gm(&input)?;
            let mut rows = Vec::new();
            let mut all = true;
            for s in seed..seed + count {
                let w = d.hull_point_sample(s)?;
                let m = d.membership(&w)?;
                all &= m != Membership::Off;
                let name = match m {
                    Membership::OnX => "on_x",
                    Membership::OnHullOnly => "on_hull",
                    Membership::Off => "off",
                };
                rows.push(json!({ "seed": s, "point": vec_json(&w), "membership": name }));
            }
            Ok((report(json!({ "points": rows })), all))
        }
        Command::Opposite { input } => ok(emit(&Document::Gm(read_gm(&input)?.opposite()?))),
        Command::HyperplaneUpdate { eta0, input } => {
            let ld = read_lagrangian(&input)?;
            let eta: MultiVector = parse_multivector(&eta0, 6, 3)?;
            let a = hyperplane_section_lagrangian(&ld.a, &eta.coords)?;
            ok(emit(&Document::Lagrangian(LagrangianData::new(a, ld.a1)?)))
        }
        Command::Selftest => {
            let results = gm_epw::selftest::run();
            let mut out = format!("{:<20} {:<6} {:>8}  detail\n", "check", "result", "ms");
            let mut all = true;
            for c in &results {
                all &= c.passed;
                out.push_str(&format!("{:<20} {:<6} {:>8}  {}\n", c.name, if c.passed { "pass" } else { "FAIL" }, c.millis, c.detail));
            }
            let passed = results.iter().filter(|c| c.passed).count();
            out.push_str(&format!("{passed}/{} checks passed\n", results.len()));
            Ok((out, all))
        }
        Command::Fixture { name, lagrangian } => {
            if name == "list" {
                let mut out = String::new();
                for (n, _) in fixtures::gm_fixtures() {
                    out.push_str(&format!("{n}\tgm_data\n"));
                }
                for (n, _) in fixtures::lagrangian_fixtures() {
                    if gm_fixture(n).is_none() {
                        out.push_str(&format!("{n}\tlagrangian_data\n"));
                    }
                }
                return ok(out);
            }
            if let Some(d) = gm_fixture(&name) {
                return if lagrangian { ok(emit(&Document::Lagrangian(gm_to_lagrangian(&d)?))) } else { ok(emit(&Document::Gm(d.canonical()?))) };
            }
            match fixtures::lagrangian_fixtures().into_iter().find(|(n, _)| *n == name) {
                Some((_, l)) => ok(emit(&Document::Lagrangian(l))),
                None => input_err(format!("unknown fixture '{name}'; try `gmepw fixture list`")),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((text, all_ok)) => {
            let written = match &cli.output {
                Some(p) => fs::write(p, &text).map_err(|e| format!("{}: {e}", p.display())),
                None => std::io::stdout().write_all(text.as_bytes()).map_err(|e| e.to_string()),
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            if all_ok {
                ExitCode::SUCCESS
            } else {
                eprintln!("error: an identity failed; see output");
                ExitCode::from(1)
            }
        }
        Err(Failure::Violation(m)) => {
            eprintln!("violation: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Input(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}

