use std::fmt::Write as _;
use std::io::Read;
use std::time::Instant;

use num_complex::Complex64;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use slicefiber::bundle::{self, BaseClass, TotalElement};
use slicefiber::harmonic::{self, BoundaryTrace, HarmonicPoly, PlanarPath};
use slicefiber::hull::{self, SliceHull};
use slicefiber::roots::{self, Root};
use slicefiber::series::{self, QPowerSeries, SlicePair};
use slicefiber::verify::{self, Bound};
use slicefiber::zeros::{self, SlicePolynomial, ZeroData, ZeroSet};
use slicefiber::{quat, sampling, Error, Frame, ImaginaryUnit, Quaternion, UnitQuaternion};

use crate::{BundleCommand, Cli, Command, Failure, Format, Input};

/// Every command path with the library operations it exposes.
#[cfg(test)]
pub const COMMANDS: &[(&str, &[&str])] = &[
    ("eval", &["QPowerSeries::eval"]),
    ("split", &["QPowerSeries::split"]),
    (
        "extend",
        &[
            "SlicePair::reassemble",
            "SlicePair::extend",
            "SlicePair::eval_slice",
        ],
    ),
    (
        "representation",
        &["series::represent_from_slice", "series::representation"],
    ),
    (
        "dcomp",
        &["QPowerSeries::d_components", "DComponents::recombine"],
    ),
    ("star", &["QPowerSeries::star_product"]),
    ("bullet", &["QPowerSeries::bullet_product"]),
    ("derivative", &["QPowerSeries::derivative"]),
    (
        "roundtrip",
        &["series::roundtrip_pq", "QPowerSeries::coeff_distance"],
    ),
    ("slice-identities", &["series::slice_identities_check"]),
    (
        "rotate",
        &["quat::rotate", "quat::rotate_frame", "Frame::shifted"],
    ),
    (
        "conjugate",
        &[
            "harmonic::conjugate_harmonic",
            "harmonic::path_independence_residual",
        ],
    ),
    ("schwarz", &["harmonic::schwarz_complex"]),
    (
        "schwarz-q",
        &[
            "harmonic::quaternionic_schwarz_coeffs",
            "harmonic::quaternionic_schwarz_eval",
        ],
    ),
    ("bundle project", &["bundle::project"]),
    ("bundle section", &["bundle::section"]),
    ("bundle trivialize", &["bundle::trivialize"]),
    ("bundle compat", &["bundle::compatibility_residual"]),
    ("bundle add", &["bundle::add"]),
    (
        "bundle deriv",
        &["bundle::deriv_total", "BaseClass::derivative"],
    ),
    ("bundle rotate", &["bundle::rotate_total"]),
    (
        "bundle fiber",
        &["bundle::fiber_of", "sampling::fibonacci_frames"],
    ),
    (
        "bundle rotation-identity",
        &["bundle::rotation_identity_residual"],
    ),
    ("zeros", &["zeros::component_zero_sets", "zeros::is_psrb"]),
    (
        "reconstruct",
        &[
            "zeros::reconstruct_from_zero_data",
            "zeros::zero_bundle_project",
        ],
    ),
    ("psrb", &["zeros::is_psrb"]),
    ("slice-zeros", &["zeros::slice_zero_set"]),
    ("hull", &["hull::convex_hull_2d"]),
    ("skull", &["zeros::skull", "sampling::fibonacci_sphere"]),
    ("gauss-lucas", &["zeros::gauss_lucas_check"]),
    ("gamma", &["zeros::morphism_gamma"]),
    (
        "uniqueness",
        &[
            "zeros::bullet_uniqueness_check",
            "zeros::solve_bullet_factor",
            "zeros::bullet_unit_factor",
        ],
    ),
    ("roots", &["roots::complex_roots"]),
    ("verify", &["verify::run_all"]),
];

const DEFAULT_SLICES: usize = 64;

fn read<T: DeserializeOwned>(input: &Input) -> Result<T, Failure> {
    let text = match input.input.as_deref() {
        Some(path) if path.as_os_str() != "-" => std::fs::read_to_string(path)
            .map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?,
        _ => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::Parse(format!("stdin: {e}")))?;
            s
        }
    };
    Ok(serde_json::from_str(&text)?)
}

fn to_json<T: Serialize>(value: &T) -> Result<String, Failure> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

fn json_only(cli: &Cli, name: &str) -> Result<(), Failure> {
    if cli.format == Format::Csv {
        return Err(Failure::Parse(format!(
            "{name} has structured output; csv is available for zeros, slice-zeros, roots, hull and skull"
        )));
    }
    Ok(())
}

fn roots_csv(out: &mut String, prefix: &str, set: &[Root]) {
    for r in set {
        let _ = writeln!(out, "{prefix}{},{},{}", r.z.re, r.z.im, r.mult);
    }
}

fn slice_count(cli: &Cli, given: Option<usize>) -> Result<usize, Failure> {
    let m = given.or(cli.samples).unwrap_or(DEFAULT_SLICES);
    if m == 0 {
        return Err(Failure::Domain(Error::InvalidInput(
            "slices must be at least 1".into(),
        )));
    }
    Ok(m)
}

/// Rebuilds a path through its validating constructor.
fn checked_path(p: &PlanarPath) -> Result<PlanarPath, Failure> {
    Ok(PlanarPath::new(p.vertices().to_vec(), p.rho())?)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SeriesFrame {
    series: QPowerSeries,
    frame: Frame,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ExtendIn {
    pair: SlicePair,
    #[serde(default)]
    points: Vec<Quaternion>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RepresentationIn {
    series: QPowerSeries,
    i: ImaginaryUnit,
    target: ImaginaryUnit,
    x: f64,
    y: f64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct DcompIn {
    series: QPowerSeries,
    frame: Frame,
    #[serde(default)]
    at: Option<[f64; 2]>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ProductIn {
    f: QPowerSeries,
    g: QPowerSeries,
    #[serde(default)]
    frame: Option<Frame>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RoundtripIn {
    series: QPowerSeries,
    frame: Frame,
    points: Vec<Quaternion>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SliceIdentitiesIn {
    series: QPowerSeries,
    frame: Frame,
    z: Complex64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RotateIn {
    u: UnitQuaternion,
    #[serde(default)]
    points: Vec<Quaternion>,
    #[serde(default)]
    frame: Option<Frame>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ConjugateIn {
    u: HarmonicPoly,
    path: PlanarPath,
    #[serde(default)]
    other: Option<PlanarPath>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SchwarzIn {
    trace: BoundaryTrace,
    z: Complex64,
    #[serde(default)]
    lambda: f64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SchwarzQIn {
    a: BoundaryTrace,
    c: BoundaryTrace,
    frame: Frame,
    nmax: usize,
    #[serde(default)]
    at: Option<Quaternion>,
    #[serde(default)]
    lambda1: f64,
    #[serde(default)]
    lambda2: f64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SectionIn {
    frame: Frame,
    class: BaseClass,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TrivializeIn {
    u: UnitQuaternion,
    class: BaseClass,
    frame: Frame,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CompatIn {
    u: UnitQuaternion,
    v: UnitQuaternion,
    class: BaseClass,
    frame: Frame,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PairIn {
    x: TotalElement,
    y: TotalElement,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RotateTotalIn {
    u: UnitQuaternion,
    x: TotalElement,
    #[serde(default)]
    points: Vec<Quaternion>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FiberIn {
    class: BaseClass,
    frames: usize,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PolyFrame {
    polynomial: SlicePolynomial,
    frame: Frame,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ReconstructIn {
    zero_data: ZeroData,
    degree: usize,
    #[serde(default)]
    strict: bool,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SliceZerosIn {
    polynomial: SlicePolynomial,
    slice: ImaginaryUnit,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SkullIn {
    polynomial: SlicePolynomial,
    #[serde(default)]
    slices: Option<usize>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GammaIn {
    polynomial: SlicePolynomial,
    frame: Frame,
    #[serde(default)]
    slices: Option<usize>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct UniquenessIn {
    f: SlicePolynomial,
    g: SlicePolynomial,
    frame1: Frame,
    frame2: Frame,
    #[serde(default)]
    c1: Option<Complex64>,
    #[serde(default)]
    c2: Option<Complex64>,
}

pub fn run(cli: &Cli) -> Result<String, Failure> {
    match &cli.command {
        Command::Eval { at, input } => {
            json_only(cli, "eval")?;
            let f: QPowerSeries = read(input)?;
            to_json(&f.eval(*at)?)
        }
        Command::Split(input) => {
            json_only(cli, "split")?;
            let SeriesFrame { series, frame } = read(input)?;
            to_json(&series.split(&frame))
        }
        Command::Extend(input) => {
            json_only(cli, "extend")?;
            let ExtendIn { pair, points } = read(input)?;
            let values = points
                .iter()
                .map(|q| pair.extend(*q))
                .collect::<slicefiber::Result<Vec<_>>>()?;
            to_json(&json!({ "series": pair.reassemble()?, "values": values }))
        }
        Command::Representation(input) => {
            json_only(cli, "representation")?;
            let r: RepresentationIn = read(input)?;
            to_json(&series::represent_from_slice(
                &r.series, &r.i, &r.target, r.x, r.y,
            )?)
        }
        Command::Dcomp(input) => {
            json_only(cli, "dcomp")?;
            let DcompIn { series, frame, at } = read(input)?;
            let d = series.d_components(&frame);
            match at {
                None => to_json(&d),
                Some([x, y]) => {
                    let value = d.recombine(x, y);
                    to_json(&json!({ "components": d, "value": value }))
                }
            }
        }
        Command::Star(input) => {
            json_only(cli, "star")?;
            let p: ProductIn = read(input)?;
            to_json(&p.f.star_product(&p.g)?)
        }
        Command::Bullet(input) => {
            json_only(cli, "bullet")?;
            let p: ProductIn = read(input)?;
            let frame = p
                .frame
                .ok_or_else(|| Failure::Parse("bullet needs a frame".into()))?;
            to_json(&p.f.bullet_product(&p.g, &frame)?)
        }
        Command::Derivative(input) => {
            json_only(cli, "derivative")?;
            let f: QPowerSeries = read(input)?;
            to_json(&f.derivative())
        }
        Command::Roundtrip(input) => {
            json_only(cli, "roundtrip")?;
            let r: RoundtripIn = read(input)?;
            let pq = series::roundtrip_pq(&r.series, &r.frame, &r.points)?;
            let pair = r.series.split(&r.frame);
            let qp = pair.reassemble()?.split(&r.frame);
            let qp = coeff_gap(&pair.f1, &qp.f1).max(coeff_gap(&pair.f2, &qp.f2));
            to_json(&json!({ "pq": pq, "qp": qp }))
        }
        Command::SliceIdentities(input) => {
            json_only(cli, "slice-identities")?;
            let r: SliceIdentitiesIn = read(input)?;
            to_json(&series::slice_identities_check(&r.series, &r.frame, r.z)?)
        }
        Command::Rotate(input) => {
            json_only(cli, "rotate")?;
            let r: RotateIn = read(input)?;
            let points: Vec<Quaternion> = r.points.iter().map(|w| quat::rotate(&r.u, *w)).collect();
            let frame = r.frame.map(|fr| quat::rotate_frame(&r.u, &fr));
            let shifted = frame.map(|fr| fr.shifted());
            to_json(&json!({ "points": points, "frame": frame, "shifted": shifted }))
        }
        Command::Conjugate(input) => {
            json_only(cli, "conjugate")?;
            let r: ConjugateIn = read(input)?;
            let path = checked_path(&r.path)?;
            let value = harmonic::conjugate_harmonic(&r.u, &path);
            let residual = match &r.other {
                None => None,
                Some(other) => Some(harmonic::path_independence_residual(
                    &r.u,
                    &path,
                    &checked_path(other)?,
                )?),
            };
            to_json(&json!({ "value": value, "path_independence": residual }))
        }
        Command::Schwarz(input) => {
            json_only(cli, "schwarz")?;
            let r: SchwarzIn = read(input)?;
            to_json(&harmonic::schwarz_complex(&r.trace, r.z, r.lambda)?)
        }
        Command::SchwarzQ(input) => {
            json_only(cli, "schwarz-q")?;
            let r: SchwarzQIn = read(input)?;
            let series = harmonic::quaternionic_schwarz_coeffs(&r.a, &r.c, &r.frame, r.nmax)?;
            let value = match r.at {
                None => None,
                Some(q) => Some(harmonic::quaternionic_schwarz_eval(
                    &r.a, &r.c, &r.frame, q, r.lambda1, r.lambda2,
                )?),
            };
            to_json(&json!({ "series": series, "value": value }))
        }
        Command::Bundle(op) => {
            json_only(cli, "bundle")?;
            run_bundle(op)
        }
        Command::Zeros(input) => {
            let PolyFrame { polynomial, frame } = read(input)?;
            let zd = zeros::component_zero_sets(&polynomial, &frame)?;
            match cli.format {
                Format::Json => {
                    to_json(&json!({ "zero_data": zd, "psrb": zeros::is_psrb(&polynomial) }))
                }
                Format::Csv => {
                    let mut out = String::from("set,re,im,mult\n");
                    for (id, set) in zd.sets() {
                        match set {
                            ZeroSet::Roots(r) => roots_csv(&mut out, &format!("{id},"), r),
                            ZeroSet::IdenticallyZero => {
                                let _ = writeln!(out, "{id},,,");
                            }
                        }
                    }
                    Ok(out)
                }
            }
        }
        Command::Reconstruct(input) => {
            json_only(cli, "reconstruct")?;
            let r: ReconstructIn = read(input)?;
            let f = if r.strict {
                zeros::zero_bundle_project(&r.zero_data, r.degree)?
            } else {
                zeros::reconstruct_from_zero_data(&r.zero_data, r.degree)?
            };
            to_json(&f)
        }
        Command::Psrb(input) => {
            json_only(cli, "psrb")?;
            let f: SlicePolynomial = read(input)?;
            to_json(&zeros::is_psrb(&f))
        }
        Command::SliceZeros(input) => {
            let r: SliceZerosIn = read(input)?;
            let set = zeros::slice_zero_set(&r.polynomial, r.slice)?;
            match cli.format {
                Format::Json => to_json(&set),
                Format::Csv => {
                    let mut out = String::from("re,im,mult\n");
                    roots_csv(&mut out, "", &set);
                    Ok(out)
                }
            }
        }
        Command::Hull(input) => {
            let points: Vec<[f64; 2]> = read(input)?;
            if let Some(p) = points
                .iter()
                .find(|p| !(p[0].is_finite() && p[1].is_finite()))
            {
                return Err(Failure::Domain(Error::InvalidInput(format!(
                    "non-finite point {p:?}"
                ))));
            }
            let polygon = hull::convex_hull_2d(&points);
            match cli.format {
                Format::Json => to_json(&polygon),
                Format::Csv => {
                    let mut out = String::from("x,y\n");
                    for [x, y] in polygon {
                        let _ = writeln!(out, "{x},{y}");
                    }
                    Ok(out)
                }
            }
        }
        Command::Skull(input) => {
            let r: SkullIn = read(input)?;
            let slices = sampling::fibonacci_sphere(slice_count(cli, r.slices)?);
            let hulls = zeros::skull(&r.polynomial, &slices)?;
            match cli.format {
                Format::Json => to_json(&hulls),
                Format::Csv => Ok(hulls_csv(&hulls)),
            }
        }
        Command::GaussLucas(input) => {
            json_only(cli, "gauss-lucas")?;
            let PolyFrame { polynomial, frame } = read(input)?;
            let report = zeros::gauss_lucas_check(&polynomial, &frame)?;
            to_json(&json!({ "report": report, "holds": report.holds() }))
        }
        Command::Gamma(input) => {
            json_only(cli, "gamma")?;
            let r: GammaIn = read(input)?;
            let slices = sampling::fibonacci_sphere(slice_count(cli, r.slices)?);
            to_json(&zeros::morphism_gamma(&r.polynomial, &r.frame, &slices)?)
        }
        Command::Uniqueness(input) => {
            json_only(cli, "uniqueness")?;
            let r: UniquenessIn = read(input)?;
            let solved1 = zeros::solve_bullet_factor(&r.f, &r.g, &r.frame1);
            let solved2 = zeros::solve_bullet_factor(&r.f, &r.g, &r.frame2);
            let c1 = r.c1.or(solved1).unwrap_or_default();
            let c2 = r.c2.or(solved2).unwrap_or_default();
            let check = zeros::bullet_uniqueness_check(&r.f, &r.g, &r.frame1, &r.frame2, c1, c2);
            to_json(&json!({
                "solved": [solved1, solved2],
                "products": [
                    zeros::bullet_unit_factor(&r.g, &r.frame1, c1),
                    zeros::bullet_unit_factor(&r.g, &r.frame2, c2),
                ],
                "check": check,
                "consistent": check.consistent(),
            }))
        }
        Command::Roots(input) => {
            let coeffs: Vec<Complex64> = read(input)?;
            let set = roots::complex_roots(&coeffs)?;
            match cli.format {
                Format::Json => to_json(&set),
                Format::Csv => {
                    let mut out = String::from("re,im,mult\n");
                    roots_csv(&mut out, "", &set);
                    Ok(out)
                }
            }
        }
        Command::Verify => run_verify(cli),
    }
}

fn coeff_gap(a: &[Complex64], b: &[Complex64]) -> f64 {
    (0..a.len().max(b.len()))
        .map(|n| {
            let x = a.get(n).copied().unwrap_or_default();
            let y = b.get(n).copied().unwrap_or_default();
            (x - y).norm()
        })
        .fold(0.0, f64::max)
}

fn hulls_csv(hulls: &[SliceHull]) -> String {
    let mut out = String::from("slice,ix,iy,iz,x,y\n");
    for (k, h) in hulls.iter().enumerate() {
        let [a, b, c] = h.slice.vector();
        for [x, y] in &h.polygon {
            let _ = writeln!(out, "{k},{a},{b},{c},{x},{y}");
        }
    }
    out
}

fn run_bundle(op: &BundleCommand) -> Result<String, Failure> {
    match op {
        BundleCommand::Project(input) => {
            let x: TotalElement = read(input)?;
            let x = TotalElement::new(x.a.rep(), x.c.rep(), x.frame, x.rho)?;
            to_json(&bundle::project(&x))
        }
        BundleCommand::Section(input) => {
            let r: SectionIn = read(input)?;
            to_json(&bundle::section(&r.frame, &r.class))
        }
        BundleCommand::Trivialize(input) => {
            let r: TrivializeIn = read(input)?;
            to_json(&bundle::trivialize(&r.u, &r.class, &r.frame))
        }
        BundleCommand::Compat(input) => {
            let r: CompatIn = read(input)?;
            to_json(&bundle::compatibility_residual(
                &r.u, &r.v, &r.class, &r.frame,
            ))
        }
        BundleCommand::Add(input) => {
            let r: PairIn = read(input)?;
            to_json(&bundle::add(&r.x, &r.y)?)
        }
        BundleCommand::Deriv(input) => {
            let x: TotalElement = read(input)?;
            let base = bundle::project(&x).derivative();
            to_json(&json!({ "total": bundle::deriv_total(&x), "base": base }))
        }
        BundleCommand::Rotate(input) => {
            let r: RotateTotalIn = read(input)?;
            to_json(&bundle::rotate_total(&r.u, &r.x))
        }
        BundleCommand::Fiber(input) => {
            let r: FiberIn = read(input)?;
            if r.frames == 0 {
                return Err(Failure::Domain(Error::InvalidInput(
                    "frames must be at least 1".into(),
                )));
            }
            to_json(&bundle::fiber_of(
                &r.class,
                &sampling::fibonacci_frames(r.frames),
            ))
        }
        BundleCommand::RotationIdentity(input) => {
            let r: RotateTotalIn = read(input)?;
            to_json(&bundle::rotation_identity_residual(&r.u, &r.x, &r.points)?)
        }
    }
}

fn run_verify(cli: &Cli) -> Result<String, Failure> {
    json_only(cli, "verify")?;
    let config = cli.run_config();
    config.validate()?;
    let start = Instant::now();
    let report = verify::run_all(&config)?;
    // Timing is nondeterministic, so it goes to stderr only.
    for s in &report.suites {
        eprintln!(
            "suite {} {}: {} max residual {:.3e} in {:.3}s (budget {}s)",
            s.id,
            s.name,
            if s.passed { "PASS" } else { "FAIL" },
            s.max_residual(),
            s.seconds,
            s.budget_seconds,
        );
        for c in s.checks.iter().filter(|c| !c.passed) {
            let rel = match c.bound {
                Bound::AtMost => "<=",
                Bound::AtLeast => ">=",
            };
            eprintln!(
                "    {} = {:.3e}, required {rel} {:e}",
                c.name, c.value, c.tolerance
            );
        }
    }
    eprintln!("total {:.3}s", start.elapsed().as_secs_f64());
    let out = to_json(&json!({
        "seed": report.seed,
        "passed": report.passed,
        "suites": report.suites.iter().map(|s| json!({
            "id": s.id,
            "name": s.name,
            "passed": s.passed,
            "max_residual": s.max_residual(),
            "checks": s.checks,
        })).collect::<Vec<Value>>(),
    }))?;
    if report.passed {
        Ok(out)
    } else {
        Err(Failure::Verification(out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;
    use slicefiber::bundle::HarmonicClass;

    fn leaf_paths(cmd: &clap::Command, prefix: &str, out: &mut Vec<String>) {
        for sub in cmd.get_subcommands() {
            let path = if prefix.is_empty() {
                sub.get_name().to_string()
            } else {
                format!("{prefix} {}", sub.get_name())
            };
            if sub.has_subcommands() {
                leaf_paths(sub, &path, out);
            } else {
                out.push(path);
            }
        }
    }

    #[test]
    fn table_matches_the_parser() {
        let mut parsed = Vec::new();
        leaf_paths(&Cli::command(), "", &mut parsed);
        parsed.retain(|p| p != "help" && !p.ends_with(" help"));
        let mut table: Vec<String> = COMMANDS.iter().map(|(c, _)| c.to_string()).collect();
        parsed.sort();
        table.sort();
        assert_eq!(parsed, table);
    }

    #[test]
    fn every_operation_is_reachable() {
        let operations = [
            "QPowerSeries::eval",
            "QPowerSeries::split",
            "QPowerSeries::derivative",
            "QPowerSeries::star_product",
            "QPowerSeries::bullet_product",
            "QPowerSeries::d_components",
            "SlicePair::reassemble",
            "SlicePair::extend",
            "series::representation",
            "series::slice_identities_check",
            "series::roundtrip_pq",
            "quat::rotate",
            "quat::rotate_frame",
            "harmonic::conjugate_harmonic",
            "harmonic::path_independence_residual",
            "harmonic::schwarz_complex",
            "harmonic::quaternionic_schwarz_coeffs",
            "harmonic::quaternionic_schwarz_eval",
            "bundle::project",
            "bundle::section",
            "bundle::trivialize",
            "bundle::compatibility_residual",
            "bundle::add",
            "bundle::deriv_total",
            "bundle::rotate_total",
            "bundle::fiber_of",
            "bundle::rotation_identity_residual",
            "zeros::component_zero_sets",
            "zeros::reconstruct_from_zero_data",
            "zeros::zero_bundle_project",
            "zeros::is_psrb",
            "zeros::bullet_unit_factor",
            "zeros::solve_bullet_factor",
            "zeros::bullet_uniqueness_check",
            "zeros::slice_zero_set",
            "zeros::skull",
            "zeros::gauss_lucas_check",
            "zeros::morphism_gamma",
            "hull::convex_hull_2d",
            "roots::complex_roots",
            "verify::run_all",
        ];
        for op in operations {
            assert!(
                COMMANDS.iter().any(|(_, ops)| ops.contains(&op)),
                "{op} has no command"
            );
        }
    }

    #[test]
    fn class_types_round_trip_through_json() {
        let class = HarmonicClass::new(&HarmonicPoly::re_power(2));
        let text = serde_json::to_string(&class).unwrap();
        assert_eq!(serde_json::from_str::<HarmonicClass>(&text).unwrap(), class);
    }
}
