//! Randomized verification suites, shared by the acceptance tests and the
//! `verify` command. Every suite draws from its own seeded stream, so a
//! report depends only on the [`RunConfig`].

use std::collections::BTreeMap;
use std::time::Instant;

use num_complex::Complex64;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::bundle::{self, BaseClass, TotalElement};
use crate::error::{Error, Result};
use crate::harmonic::{self, BoundaryTrace, HarmonicPoly, PlanarPath};
use crate::hull;
use crate::quadrature::is_power_of_two;
use crate::quat::{Frame, ImaginaryUnit, Quaternion};
use crate::roots;
use crate::sampling::{self, SeededRng};
use crate::series::{self, SlicePair};
use crate::zeros::{self, SlicePolynomial, ZeroSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Csv,
}

/// Settings of a verification run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub seed: u64,
    /// Overrides the instance count of every random suite.
    pub samples: Option<usize>,
    /// Boundary samples for the Schwarz suite.
    pub quadrature_n: usize,
    /// Tolerance overrides by check name.
    pub tolerances: BTreeMap<String, f64>,
    pub output_format: OutputFormat,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            seed: 20240601,
            samples: None,
            quadrature_n: 256,
            tolerances: BTreeMap::new(),
            output_format: OutputFormat::Json,
        }
    }
}

/// `(name, default tolerance, bound)` for every check.
pub const CHECKS: &[(&str, f64, Bound)] = &[
    ("roundtrip_pq", 1e-10, Bound::AtMost),
    ("roundtrip_qp", 1e-10, Bound::AtMost),
    ("representation", 1e-10, Bound::AtMost),
    ("conjugate", 1e-10, Bound::AtMost),
    ("path_independence", 1e-10, Bound::AtMost),
    ("schwarz_coeffs", 1e-12, Bound::AtMost),
    ("schwarz_eval", 1e-9, Bound::AtMost),
    ("bundle_section", 1e-10, Bound::AtMost),
    ("bundle_trivialize", 1e-10, Bound::AtMost),
    ("bundle_compatibility", 1e-10, Bound::AtMost),
    ("bundle_additivity", 1e-10, Bound::AtMost),
    ("bundle_derivative", 1e-10, Bound::AtMost),
    ("bundle_rotation", 1e-10, Bound::AtMost),
    ("zeros_roundtrip", 1e-9, Bound::AtMost),
    ("zeros_confusable_pair", 0.0, Bound::AtMost),
    ("zeros_perturbation", 1e-6, Bound::AtLeast),
    ("gauss_lucas_component", 0.0, Bound::AtMost),
    ("gauss_lucas_slice", 0.0, Bound::AtMost),
    ("gamma", 1e-9, Bound::AtMost),
    ("hull_oracle", 0.0, Bound::AtMost),
    ("derivative_fd", 1e-8, Bound::AtMost),
    ("root_residual", 1e-9, Bound::AtMost),
    ("slice_identities", 1e-12, Bound::AtMost),
    ("star_associativity", 1e-12, Bound::AtMost),
    ("frame_rotation", 1e-12, Bound::AtMost),
];

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.samples == Some(0) {
            return Err(Error::InvalidInput("samples must be at least 1".into()));
        }
        if self.quadrature_n < 16 || !is_power_of_two(self.quadrature_n) {
            return Err(Error::InvalidInput(format!(
                "quadrature_n must be a power of two >= 16, got {}",
                self.quadrature_n
            )));
        }
        for (name, tol) in &self.tolerances {
            if !CHECKS.iter().any(|(n, _, _)| n == name) {
                return Err(Error::InvalidInput(format!(
                    "unknown tolerance name {name}"
                )));
            }
            if !(tol.is_finite() && *tol >= 0.0) {
                return Err(Error::InvalidInput(format!(
                    "tolerance {name} must be finite and >= 0"
                )));
            }
        }
        Ok(())
    }

    fn tolerance(&self, name: &str) -> (f64, Bound) {
        let (_, default, bound) = CHECKS
            .iter()
            .find(|(n, _, _)| *n == name)
            .unwrap_or_else(|| panic!("unregistered check {name}"));
        (
            self.tolerances.get(name).copied().unwrap_or(*default),
            *bound,
        )
    }

    fn count(&self, default: usize) -> usize {
        self.samples.unwrap_or(default)
    }
}

/// Whether the measured value must stay below or above the tolerance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Bound {
    AtMost,
    AtLeast,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    /// Worst observed value: the largest residual, or the smallest margin
    /// for lower bounds. Counts of failures are reported as plain numbers.
    pub value: f64,
    pub tolerance: f64,
    pub bound: Bound,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub id: usize,
    pub name: String,
    pub checks: Vec<Check>,
    pub passed: bool,
    #[serde(skip)]
    pub seconds: f64,
    #[serde(skip)]
    pub budget_seconds: f64,
}

impl SuiteReport {
    pub fn max_residual(&self) -> f64 {
        self.checks
            .iter()
            .filter(|c| c.bound == Bound::AtMost)
            .map(|c| c.value)
            .fold(0.0, f64::max)
    }

    pub fn within_budget(&self) -> bool {
        self.seconds <= self.budget_seconds
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub seed: u64,
    pub suites: Vec<SuiteReport>,
    pub passed: bool,
}

struct Suite<'a> {
    config: &'a RunConfig,
    checks: Vec<Check>,
}

impl<'a> Suite<'a> {
    fn new(config: &'a RunConfig) -> Self {
        Suite {
            config,
            checks: Vec::new(),
        }
    }

    fn record(&mut self, name: &str, value: f64) {
        let (tolerance, bound) = self.config.tolerance(name);
        let passed = match bound {
            Bound::AtMost => value <= tolerance,
            Bound::AtLeast => value >= tolerance,
        };
        self.checks.push(Check {
            name: name.to_string(),
            value,
            tolerance,
            bound,
            passed,
        });
    }
}

/// A suite: id, name, runtime budget in seconds and body.
type SuiteFn = fn(&mut Suite, &mut SeededRng) -> Result<()>;

const SUITES: &[(usize, &str, f64, SuiteFn)] = &[
    (1, "round-trip identities", 5.0, suite_roundtrip),
    (2, "representation formula", 2.0, suite_representation),
    (3, "conjugate harmonic", 2.0, suite_conjugate),
    (4, "quaternionic schwarz", 5.0, suite_schwarz),
    (5, "bundle identities", 10.0, suite_bundle),
    (6, "zero-data bundle", 10.0, suite_zeros),
    (7, "gauss-lucas and gamma", 10.0, suite_gauss_lucas),
    (8, "oracle equivalences", 5.0, suite_oracles),
    (9, "algebraic identities", 5.0, suite_algebra),
];

/// Ids and names of all suites.
pub fn suite_names() -> Vec<(usize, &'static str)> {
    SUITES.iter().map(|(id, name, _, _)| (*id, *name)).collect()
}

fn suite_rng(seed: u64, id: usize) -> SeededRng {
    sampling::rng(seed.wrapping_add((id as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)))
}

/// Runs one suite by id.
pub fn run_suite(config: &RunConfig, id: usize) -> Result<SuiteReport> {
    config.validate()?;
    let (_, name, budget, body) = SUITES
        .iter()
        .find(|s| s.0 == id)
        .ok_or_else(|| Error::InvalidInput(format!("no suite {id}")))?;
    let mut rng = suite_rng(config.seed, id);
    let mut suite = Suite::new(config);
    let start = Instant::now();
    body(&mut suite, &mut rng)?;
    let seconds = start.elapsed().as_secs_f64();
    let passed = suite.checks.iter().all(|c| c.passed);
    Ok(SuiteReport {
        id,
        name: name.to_string(),
        checks: suite.checks,
        passed,
        seconds,
        budget_seconds: *budget,
    })
}

/// Runs every suite in order.
pub fn run_all(config: &RunConfig) -> Result<Report> {
    let suites = SUITES
        .iter()
        .map(|s| run_suite(config, s.0))
        .collect::<Result<Vec<_>>>()?;
    let passed = suites.iter().all(|s| s.passed);
    Ok(Report {
        seed: config.seed,
        suites,
        passed,
    })
}

fn random_complex_poly(rng: &mut SeededRng, degree: usize, radius: f64) -> Vec<Complex64> {
    (0..=degree)
        .map(|n| sampling::complex(rng) * radius.powi(-(n as i32)))
        .collect()
}

fn point_in_disk(rng: &mut SeededRng, r: f64) -> Complex64 {
    loop {
        let z = sampling::complex(rng);
        if z.norm() <= 1.0 {
            return z * r;
        }
    }
}

fn suite_roundtrip(s: &mut Suite, rng: &mut SeededRng) -> Result<()> {
    let mut pq: f64 = 0.0;
    let mut qp: f64 = 0.0;
    for _ in 0..s.config.count(200) {
        let degree = rng.gen_range(0..=16);
        let radius = rng.gen_range(0.5..2.0);
        let f = sampling::series(rng, degree, radius);
        let fr = sampling::frame(rng);
        let points: Vec<Quaternion> = (0..50)
            .map(|_| sampling::point_in_ball(rng, 0.9 * radius))
            .collect();
        pq = pq.max(series::roundtrip_pq(&f, &fr, &points)?);

        let g = SlicePair {
            frame: fr,
            radius,
            f1: random_complex_poly(rng, degree, radius),
            f2: random_complex_poly(rng, degree, radius),
        };
        for _ in 0..50 {
            let z = point_in_disk(rng, 0.9 * radius);
            let back = g.extend(fr.i().embed(z))?;
            qp = qp.max(back.distance(&g.eval_slice(z)));
        }
    }
    s.record("roundtrip_pq", pq);
    s.record("roundtrip_qp", qp);
    Ok(())
}

fn suite_representation(s: &mut Suite, rng: &mut SeededRng) -> Result<()> {
    let mut worst: f64 = 0.0;
    for _ in 0..s.config.count(1000) {
        let degree = rng.gen_range(0..=16);
        let radius = rng.gen_range(0.5..2.0);
        let f = sampling::series(rng, degree, radius);
        let i = sampling::imaginary_unit(rng);
        let k = sampling::imaginary_unit(rng);
        let z = point_in_disk(rng, 0.9 * radius);
        let value = series::represent_from_slice(&f, &i, &k, z.re, z.im)?;
        worst = worst.max(value.distance(&f.eval(k.embed(z))?));
    }
    s.record("representation", worst);
    Ok(())
}

fn random_polyline(
    rng: &mut SeededRng,
    start: [f64; 2],
    end: Option<[f64; 2]>,
) -> Result<PlanarPath> {
    let inner = rng.gen_range(1..=4);
    let mut vertices = vec![start];
    for _ in 0..inner {
        let z = point_in_disk(rng, 0.9);
        vertices.push([z.re, z.im]);
    }
    if let Some(e) = end {
        vertices.push(e);
    }
    PlanarPath::new(vertices, 1.0)
}

fn suite_conjugate(s: &mut Suite, rng: &mut SeededRng) -> Result<()> {
    let mut conj: f64 = 0.0;
    let mut indep: f64 = 0.0;
    let per_power = s.config.count(50);
    for n in 0..=8 {
        let u = HarmonicPoly::re_power(n);
        for _ in 0..per_power {
            let path = random_polyline(rng, [0.0, 0.0], None)?;
            let [x, y] = path.end();
            let exact = Complex64::new(x, y).powi(n as i32).im;
            conj = conj.max((harmonic::conjugate_harmonic(&u, &path) - exact).abs());
        }
    }
    for _ in 0..per_power {
        let degree = rng.gen_range(0..=8);
        let u = sampling::harmonic(rng, degree);
        let a = point_in_disk(rng, 0.9);
        let b = point_in_disk(rng, 0.9);
        let p1 = random_polyline(rng, [a.re, a.im], Some([b.re, b.im]))?;
        let p2 = random_polyline(rng, [a.re, a.im], Some([b.re, b.im]))?;
        indep = indep.max(harmonic::path_independence_residual(&u, &p1, &p2)?);
    }
    s.record("conjugate", conj);
    s.record("path_independence", indep);
    Ok(())
}

fn suite_schwarz(s: &mut Suite, rng: &mut SeededRng) -> Result<()> {
    const DEGREE: usize = 32;
    let n = s.config.quadrature_n;
    let instances = s.config.count(10);
    let points_per = (100 / instances).max(1);
    let mut coeff_err: f64 = 0.0;
    let mut eval_err: f64 = 0.0;
    for _ in 0..instances {
        let a = sampling::harmonic(rng, DEGREE);
        let c = sampling::harmonic(rng, DEGREE);
        let fr = sampling::frame(rng);
        let ta = BoundaryTrace::of_harmonic(&a, 1.0, n)?;
        let tc = BoundaryTrace::of_harmonic(&c, 1.0, n)?;
        let u = harmonic::quaternionic_schwarz_coeffs(&ta, &tc, &fr, DEGREE)?;
        for k in 0..=DEGREE {
            let (mut za, mut zc) = (a.coeffs()[k], c.coeffs()[k]);
            if k == 0 {
                za = Complex64::new(za.re, 0.0);
                zc = Complex64::new(zc.re, 0.0);
            }
            coeff_err = coeff_err.max(u.coeff(k).distance(&fr.assemble(za, zc)));
        }
        let (l1, l2) = (rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        let [_, iq, _, ij] = fr.basis();
        for _ in 0..points_per {
            let q = sampling::point_in_ball(rng, 0.9);
            let kernel = harmonic::quaternionic_schwarz_eval(&ta, &tc, &fr, q, l1, l2)?;
            let series = u.eval(q)? + iq * l1 + ij * l2;
            eval_err = eval_err.max(kernel.distance(&series));
        }
    }
    s.record("schwarz_coeffs", coeff_err);
    s.record("schwarz_eval", eval_err);
    Ok(())
}

fn random_element(rng: &mut SeededRng, fr: Frame, degree: usize) -> Result<TotalElement> {
    let a = sampling::harmonic(rng, degree);
    let c = sampling::harmonic(rng, degree);
    TotalElement::new(&a, &c, fr, 1.0)
}

fn suite_bundle(s: &mut Suite, rng: &mut SeededRng) -> Result<()> {
    let count = s.config.count(100);
    let (mut sec, mut triv, mut compat, mut add, mut der, mut rot) =
        (0f64, 0f64, 0f64, 0f64, 0f64, 0f64);
    for _ in 0..count {
        let degree = rng.gen_range(1..=10);
        let radius = rng.gen_range(0.5..2.0);
        let f = BaseClass::new(&sampling::series(rng, degree, radius));
        let fr = sampling::frame(rng);
        let u = sampling::unit_quaternion(rng);
        let v = sampling::unit_quaternion(rng);
        sec = sec.max(bundle::project(&bundle::section(&fr, &f)).distance(&f));
        triv = triv.max(bundle::project(&bundle::trivialize(&u, &f, &fr)).distance(&f));
        compat = compat.max(bundle::compatibility_residual(&u, &v, &f, &fr));

        let x = random_element(rng, fr, degree)?;
        let other_degree = rng.gen_range(1..=10);
        let y = random_element(rng, fr, other_degree)?;
        let sum = bundle::project(&bundle::add(&x, &y)?);
        add = add.max(sum.distance(&bundle::project(&x).add(&bundle::project(&y))));
        let d = bundle::project(&bundle::deriv_total(&x));
        der = der.max(d.distance(&bundle::project(&x).derivative()));
        let points: Vec<Quaternion> = (0..10).map(|_| sampling::point_in_ball(rng, 0.9)).collect();
        rot = rot.max(bundle::rotation_identity_residual(&u, &x, &points)?);
    }
    s.record("bundle_section", sec);
    s.record("bundle_trivialize", triv);
    s.record("bundle_compatibility", compat);
    s.record("bundle_additivity", add);
    s.record("bundle_derivative", der);
    s.record("bundle_rotation", rot);
    Ok(())
}

/// Random PSRB polynomial of the given degree with a nonzero second
/// component relative to `fr`.
fn random_psrb(rng: &mut SeededRng, degree: usize, fr: &Frame) -> Result<SlicePolynomial> {
    loop {
        let f = sampling::slice_polynomial(rng, degree);
        if zeros::is_psrb(&f) && zeros::component_zero_sets(&f, fr)?.s2 != ZeroSet::IdenticallyZero
        {
            return Ok(f);
        }
    }
}

/// `(q² − 1) + c (q − 1) e₂`.
pub fn confusable_polynomial(c: f64) -> SlicePolynomial {
    SlicePolynomial::new(vec![
        Quaternion::new(-1.0, 0.0, -c, 0.0),
        Quaternion::new(0.0, 0.0, c, 0.0),
    ])
    .expect("degree two")
}

fn suite_zeros(s: &mut Suite, rng: &mut SeededRng) -> Result<()> {
    let count = s.config.count(100);
    let mut round: f64 = 0.0;
    let mut min_change = f64::INFINITY;
    for _ in 0..count {
        let degree = rng.gen_range(3..=6);
        let fr = sampling::frame(rng);
        let f = random_psrb(rng, degree, &fr)?;
        let zd = zeros::component_zero_sets(&f, &fr)?;
        let err = match zeros::zero_bundle_project(&zd, degree) {
            Ok(back) => back.coeff_distance(&f),
            Err(_) => f64::INFINITY,
        };
        round = round.max(err);

        let mut lower = f.lower().to_vec();
        let k = rng.gen_range(0..lower.len());
        let dir = sampling::quaternion(rng);
        lower[k] += dir * (1e-4 / dir.norm());
        let g = SlicePolynomial::new(lower)?;
        min_change = min_change.min(zeros::component_zero_sets(&g, &fr)?.distance(&zd));
    }
    s.record("zeros_roundtrip", round);
    s.record("zeros_perturbation", min_change);

    // The two confusable polynomials agree on C(i) and differ on C(j); each is
    // recovered from its own data; the bullet relation holds on one frame only.
    let fr = Frame::standard();
    let one = confusable_polynomial(1.0);
    let seven = confusable_polynomial(7.0);
    let zd1 = zeros::component_zero_sets(&one, &fr)?;
    let zd7 = zeros::component_zero_sets(&seven, &fr)?;
    let mut failures = 0usize;
    failures += usize::from(!(zd1.s1.same_as(&zd7.s1, 1e-9) && zd1.s2.same_as(&zd7.s2, 1e-9)));
    failures += usize::from(zd1.same_as(&zd7, 1e-9));
    for (f, zd) in [(&one, &zd1), (&seven, &zd7)] {
        let ok = zeros::reconstruct_from_zero_data(zd, 2).map(|b| b.coeff_distance(f) <= 1e-9);
        failures += usize::from(ok != Ok(true));
    }
    let other = Frame::new(ImaginaryUnit::E2, ImaginaryUnit::E3)?;
    let check = zeros::bullet_uniqueness_check(
        &seven,
        &one,
        &fr,
        &other,
        Complex64::new(7.0, 0.0),
        Complex64::new(1.0, 0.0),
    );
    failures += usize::from(!(check.first && !check.second && check.consistent()));
    s.record("zeros_confusable_pair", failures as f64);
    Ok(())
}

/// `m ⁎ g` with `m` real with real roots and `g` random: zero sets are
/// nonempty on every slice.
fn product_with_real_roots(
    rng: &mut SeededRng,
    real_roots: usize,
    degree: usize,
) -> Result<SlicePolynomial> {
    let roots: Vec<Complex64> = (0..real_roots)
        .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), 0.0))
        .collect();
    let m: Vec<Quaternion> = crate::cpoly::from_roots(&roots)
        .iter()
        .map(|c| Quaternion::real(c.re))
        .collect();
    let g = sampling::slice_polynomial(rng, degree).coeffs();
    let mut coeffs = vec![Quaternion::ZERO; m.len() + g.len() - 1];
    for (k, a) in m.iter().enumerate() {
        for (l, b) in g.iter().enumerate() {
            coeffs[k + l] += *a * *b;
        }
    }
    SlicePolynomial::from_monic(coeffs)
}

fn suite_gauss_lucas(s: &mut Suite, rng: &mut SeededRng) -> Result<()> {
    let count = s.config.count(200);
    let (mut component, mut slice) = (0usize, 0usize);
    for k in 0..count {
        let degree = rng.gen_range(1..=8);
        let f = if k % 2 == 0 {
            sampling::real_slice_polynomial(rng, degree)
        } else {
            sampling::slice_polynomial(rng, degree)
        };
        let fr = sampling::frame(rng);
        let rep = zeros::gauss_lucas_check(&f, &fr)?;
        component += usize::from(!rep.component);
        slice += usize::from(rep.slice == Some(false));
    }
    s.record("gauss_lucas_component", component as f64);
    s.record("gauss_lucas_slice", slice as f64);

    let slices = sampling::fibonacci_sphere(8);
    let mut worst: f64 = 0.0;
    let mut done = 0;
    while done < s.config.count(50) {
        let (real_roots, degree) = (rng.gen_range(1..=2), rng.gen_range(3..=4));
        let f = product_with_real_roots(rng, real_roots, degree)?;
        let fr = sampling::frame(rng);
        match zeros::morphism_gamma(&f, &fr, &slices) {
            Ok(out) => {
                let penalty = if out.component_containment {
                    0.0
                } else {
                    f64::INFINITY
                };
                worst = worst.max(out.residual).max(penalty);
                done += 1;
            }
            // f′ outside PSRB: outside the domain of Γ, draw again.
            Err(Error::NotInPbsrb) => continue,
            Err(_) => {
                worst = f64::INFINITY;
                done += 1;
            }
        }
    }
    s.record("gamma", worst);
    Ok(())
}

/// Extreme points by the O(n³) edge test: `(p, q)` is a hull edge iff every
/// other point lies strictly to its left.
pub fn brute_force_extreme_points(points: &[[f64; 2]]) -> Vec<[f64; 2]> {
    let mut out: Vec<[f64; 2]> = Vec::new();
    for (a, p) in points.iter().enumerate() {
        for (b, q) in points.iter().enumerate() {
            if a == b {
                continue;
            }
            let edge = points
                .iter()
                .enumerate()
                .all(|(c, r)| c == a || c == b || hull::cross(*p, *q, *r) > 0.0);
            if edge {
                out.push(*p);
                out.push(*q);
            }
        }
    }
    out.sort_by(|x, y| x[0].total_cmp(&y[0]).then(x[1].total_cmp(&y[1])));
    out.dedup();
    out
}

fn suite_oracles(s: &mut Suite, rng: &mut SeededRng) -> Result<()> {
    let mut mismatches = 0usize;
    for _ in 0..s.config.count(20) {
        let pts: Vec<[f64; 2]> = (0..100)
            .map(|_| [rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)])
            .collect();
        let mut fast = hull::convex_hull_2d(&pts);
        fast.sort_by(|x, y| x[0].total_cmp(&y[0]).then(x[1].total_cmp(&y[1])));
        mismatches += usize::from(fast != brute_force_extreme_points(&pts));
    }
    s.record("hull_oracle", mismatches as f64);

    const H: f64 = 1e-5;
    let mut fd: f64 = 0.0;
    for _ in 0..s.config.count(100) {
        let degree = rng.gen_range(1..=8);
        let f = sampling::series(rng, degree, 1.0);
        let df = f.derivative();
        for _ in 0..10 {
            let q = sampling::point_in_ball(rng, 0.5);
            let h = Quaternion::real(H);
            let approx = (f.eval(q + h)? - f.eval(q - h)?) / (2.0 * H);
            fd = fd.max(approx.distance(&df.eval(q)?));
        }
    }
    s.record("derivative_fd", fd);

    let mut res: f64 = 0.0;
    for _ in 0..s.config.count(500) {
        let degree = rng.gen_range(1..=12);
        let p: Vec<Complex64> = (0..=degree).map(|_| sampling::complex(rng)).collect();
        for r in roots::complex_roots(&p)? {
            let scale = (1.0 + r.z.norm()).powi(degree);
            res = res.max(crate::cpoly::eval(&p, r.z).norm() / scale);
        }
    }
    s.record("root_residual", res);
    Ok(())
}

fn suite_algebra(s: &mut Suite, rng: &mut SeededRng) -> Result<()> {
    let count = s.config.count(100);
    let (mut ident, mut assoc, mut frames) = (0f64, 0f64, 0f64);
    for _ in 0..count {
        let degrees = [
            rng.gen_range(0..=8),
            rng.gen_range(0..=8),
            rng.gen_range(0..=8),
        ];
        let f = sampling::series(rng, degrees[0], 1.0);
        let fr = sampling::frame(rng);
        let z = point_in_disk(rng, 0.9);
        let r = series::slice_identities_check(&f, &fr, z)?;
        ident = ident.max(r.plus).max(r.minus);

        let g = sampling::series(rng, degrees[1], 1.0);
        let h = sampling::series(rng, degrees[2], 1.0);
        let left = f.star_product(&g)?.star_product(&h)?;
        let right = f.star_product(&g.star_product(&h)?)?;
        assoc = assoc.max(left.coeff_distance(&right));

        let u = sampling::unit_quaternion(rng);
        let rotated = crate::quat::rotate_frame(&u, &fr);
        frames = frames
            .max(rotated.gram_defect())
            .max((rotated.orientation() - 1.0).abs());
        let back = crate::quat::rotate_frame(&u.conj(), &rotated);
        frames = frames.max(back.distance(&fr));
    }
    s.record("slice_identities", ident);
    s.record("star_associativity", assoc);
    s.record("frame_rotation", frames);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn brute_force_matches_small_cases() {
        let pts = [[0.0, 0.0], [1.0, 0.0], [0.0, 1.0], [0.2, 0.2]];
        assert_eq!(
            brute_force_extreme_points(&pts),
            vec![[0.0, 0.0], [0.0, 1.0], [1.0, 0.0]]
        );
    }

    #[test]
    fn config_validation() {
        let mut c = RunConfig::default();
        assert!(c.validate().is_ok());
        c.quadrature_n = 100;
        assert!(c.validate().is_err());
        c.quadrature_n = 64;
        c.tolerances.insert("nonsense".into(), 1.0);
        assert!(c.validate().is_err());
        c.tolerances.clear();
        c.samples = Some(0);
        assert!(c.validate().is_err());
    }

    #[test]
    fn every_check_is_recorded_once() {
        let config = RunConfig {
            samples: Some(2),
            ..RunConfig::default()
        };
        let report = run_all(&config).unwrap();
        let mut names: Vec<&str> = report
            .suites
            .iter()
            .flat_map(|s| s.checks.iter().map(|c| c.name.as_str()))
            .collect();
        names.sort();
        let mut expected: Vec<&str> = CHECKS.iter().map(|c| c.0).collect();
        expected.sort();
        assert_eq!(names, expected);
    }

    #[test]
    fn unreachable_tolerance_fails() {
        let mut config = RunConfig {
            samples: Some(2),
            ..RunConfig::default()
        };
        config.tolerances.insert("roundtrip_pq".into(), 1e-30);
        let r = run_suite(&config, 1).unwrap();
        assert!(!r.passed);
    }
}
