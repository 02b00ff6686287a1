//! Harmonic polynomials on the disk, conjugate harmonics by line integral,
//! and Schwarz reconstructions from circle traces (complex and quaternionic).

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::cpoly;
use crate::error::{Error, Result};
use crate::quadrature::{circle_angles, is_power_of_two, GaussLegendre};
use crate::quat::{Frame, Quaternion};
use crate::series::{QPowerSeries, MAX_DEGREE};

/// Gauss–Legendre points per polyline segment.
pub const SEGMENT_NODES: usize = 16;

/// Step of the central differences used for black-box harmonic functions.
pub const FD_STEP: f64 = 1e-6;

/// `u(x, y) = Re Σ cₙ (x + iy)ⁿ`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(from = "Vec<Complex64>", into = "Vec<Complex64>")]
pub struct HarmonicPoly {
    coeffs: Vec<Complex64>,
}

impl From<Vec<Complex64>> for HarmonicPoly {
    fn from(coeffs: Vec<Complex64>) -> Self {
        HarmonicPoly::new(coeffs)
    }
}

impl From<HarmonicPoly> for Vec<Complex64> {
    fn from(h: HarmonicPoly) -> Self {
        h.coeffs
    }
}

impl HarmonicPoly {
    pub fn new(coeffs: Vec<Complex64>) -> Self {
        let coeffs = if coeffs.is_empty() {
            vec![Complex64::new(0.0, 0.0)]
        } else {
            coeffs
        };
        HarmonicPoly { coeffs }
    }

    /// `Re zⁿ`.
    pub fn re_power(n: usize) -> Self {
        let mut c = vec![Complex64::new(0.0, 0.0); n + 1];
        c[n] = Complex64::new(1.0, 0.0);
        HarmonicPoly::new(c)
    }

    pub fn constant(value: f64) -> Self {
        HarmonicPoly::new(vec![Complex64::new(value, 0.0)])
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn value(&self, x: f64, y: f64) -> f64 {
        cpoly::eval(&self.coeffs, Complex64::new(x, y)).re
    }

    /// `(u_x, u_y) = (Re p′, −Im p′)`.
    pub fn gradient(&self, x: f64, y: f64) -> (f64, f64) {
        let d = cpoly::eval(&cpoly::derivative(&self.coeffs), Complex64::new(x, y));
        (d.re, -d.im)
    }

    /// Closed-form conjugate `Im p(z) − Im p(0)`, vanishing at the origin.
    pub fn conjugate_exact(&self, x: f64, y: f64) -> f64 {
        cpoly::eval(&self.coeffs, Complex64::new(x, y)).im - self.coeffs[0].im
    }

    /// `u_x`, again the real part of a polynomial.
    pub fn x_partial(&self) -> HarmonicPoly {
        HarmonicPoly::new(cpoly::derivative(&self.coeffs))
    }

    /// Representative vanishing at the origin. The imaginary part of the
    /// constant term does not affect `u` and is dropped too, so equal
    /// classes have equal coefficient lists.
    pub fn normalized(&self) -> HarmonicPoly {
        let mut c = self.coeffs.clone();
        c[0] = Complex64::new(0.0, 0.0);
        HarmonicPoly::new(c)
    }

    pub fn add(&self, other: &HarmonicPoly) -> HarmonicPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = Complex64::new(0.0, 0.0);
        HarmonicPoly::new(
            (0..n)
                .map(|k| {
                    self.coeffs.get(k).copied().unwrap_or(zero)
                        + other.coeffs.get(k).copied().unwrap_or(zero)
                })
                .collect(),
        )
    }

    pub fn scale(&self, s: f64) -> HarmonicPoly {
        HarmonicPoly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Largest coefficient difference, ignoring the irrelevant `Im c₀`.
    pub fn coeff_distance(&self, other: &HarmonicPoly) -> f64 {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = Complex64::new(0.0, 0.0);
        (0..n)
            .map(|k| {
                let mut d = self.coeffs.get(k).copied().unwrap_or(zero)
                    - other.coeffs.get(k).copied().unwrap_or(zero);
                if k == 0 {
                    d.im = 0.0;
                }
                d.norm()
            })
            .fold(0.0, f64::max)
    }

    /// Five-point finite-difference Laplacian with step `h`.
    pub fn laplacian_fd(&self, x: f64, y: f64, h: f64) -> f64 {
        let c = self.value(x, y);
        (self.value(x + h, y) + self.value(x - h, y) + self.value(x, y + h) + self.value(x, y - h)
            - 4.0 * c)
            / (h * h)
    }
}

/// A polyline inside the disk of radius `rho`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PlanarPath {
    vertices: Vec<[f64; 2]>,
    rho: f64,
}

impl PlanarPath {
    pub fn new(vertices: Vec<[f64; 2]>, rho: f64) -> Result<Self> {
        if !(rho > 0.0) {
            return Err(Error::InvalidPath(format!(
                "disk radius must be positive, got {rho}"
            )));
        }
        if vertices.len() < 2 {
            return Err(Error::InvalidPath(
                "a path needs at least two vertices".into(),
            ));
        }
        for (index, v) in vertices.iter().enumerate() {
            if !(v[0].hypot(v[1]) < rho) {
                return Err(Error::PathOutsideDomain { index, rho });
            }
        }
        Ok(PlanarPath { vertices, rho })
    }

    /// Straight segment from `a` to `b`.
    pub fn segment(a: [f64; 2], b: [f64; 2], rho: f64) -> Result<Self> {
        PlanarPath::new(vec![a, b], rho)
    }

    pub fn vertices(&self) -> &[[f64; 2]] {
        &self.vertices
    }

    pub fn rho(&self) -> f64 {
        self.rho
    }

    pub fn start(&self) -> [f64; 2] {
        self.vertices[0]
    }

    pub fn end(&self) -> [f64; 2] {
        self.vertices[self.vertices.len() - 1]
    }

    /// `∫ (P dx + Q dy)` along the polyline, Gauss–Legendre per segment.
    fn line_integral<F: Fn(f64, f64) -> (f64, f64)>(&self, field: F) -> f64 {
        let rule = GaussLegendre::new(SEGMENT_NODES);
        self.vertices
            .windows(2)
            .map(|seg| {
                let [x0, y0] = seg[0];
                let [x1, y1] = seg[1];
                let (dx, dy) = (x1 - x0, y1 - y0);
                rule.integrate(0.0, 1.0, |t| {
                    let (p, q) = field(x0 + t * dx, y0 + t * dy);
                    p * dx + q * dy
                })
            })
            .sum()
    }
}

/// Conjugate harmonic `v(x, y) = ∫ −u_y dx + u_x dy` along `path`, so that
/// `v` vanishes at the start of the path.
pub fn conjugate_harmonic(u: &HarmonicPoly, path: &PlanarPath) -> f64 {
    path.line_integral(|x, y| {
        let (ux, uy) = u.gradient(x, y);
        (-uy, ux)
    })
}

/// Same integral for a black-box harmonic function, with central
/// differences of step [`FD_STEP`]. Accuracy is limited to roughly `1e-9`.
pub fn conjugate_harmonic_fn<F: Fn(f64, f64) -> f64>(u: F, path: &PlanarPath) -> f64 {
    let h = FD_STEP;
    path.line_integral(|x, y| {
        let ux = (u(x + h, y) - u(x - h, y)) / (2.0 * h);
        let uy = (u(x, y + h) - u(x, y - h)) / (2.0 * h);
        (-uy, ux)
    })
}

/// `|∫_A − ∫_B|` for two paths with common endpoints.
pub fn path_independence_residual(
    u: &HarmonicPoly,
    path_a: &PlanarPath,
    path_b: &PlanarPath,
) -> Result<f64> {
    const ENDPOINT_TOL: f64 = 1e-12;
    let same = |p: [f64; 2], q: [f64; 2]| (p[0] - q[0]).hypot(p[1] - q[1]) <= ENDPOINT_TOL;
    if !same(path_a.start(), path_b.start()) || !same(path_a.end(), path_b.end()) {
        return Err(Error::EndpointMismatch);
    }
    Ok((conjugate_harmonic(u, path_a) - conjugate_harmonic(u, path_b)).abs())
}

/// Samples `u(ρ cos tₖ, ρ sin tₖ)` at `tₖ = 2πk/N`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawTrace", into = "RawTrace")]
pub struct BoundaryTrace {
    rho: f64,
    samples: Vec<f64>,
}

#[derive(Serialize, Deserialize)]
struct RawTrace {
    rho: f64,
    samples: Vec<f64>,
}

impl TryFrom<RawTrace> for BoundaryTrace {
    type Error = Error;
    fn try_from(raw: RawTrace) -> Result<Self> {
        BoundaryTrace::new(raw.rho, raw.samples)
    }
}

impl From<BoundaryTrace> for RawTrace {
    fn from(t: BoundaryTrace) -> Self {
        RawTrace {
            rho: t.rho,
            samples: t.samples,
        }
    }
}

impl BoundaryTrace {
    pub fn new(rho: f64, samples: Vec<f64>) -> Result<Self> {
        if !(rho > 0.0) || !rho.is_finite() {
            return Err(Error::InvalidTrace(format!(
                "radius must be positive, got {rho}"
            )));
        }
        let n = samples.len();
        if n < 16 || !is_power_of_two(n) {
            return Err(Error::InvalidTrace(format!(
                "sample count must be a power of two >= 16, got {n}"
            )));
        }
        Ok(BoundaryTrace { rho, samples })
    }

    pub fn from_fn<F: Fn(f64, f64) -> f64>(rho: f64, n: usize, u: F) -> Result<Self> {
        let samples = circle_angles(n)
            .map(|t| u(rho * t.cos(), rho * t.sin()))
            .collect();
        BoundaryTrace::new(rho, samples)
    }

    pub fn of_harmonic(u: &HarmonicPoly, rho: f64, n: usize) -> Result<Self> {
        BoundaryTrace::from_fn(rho, n, |x, y| u.value(x, y))
    }

    pub fn rho(&self) -> f64 {
        self.rho
    }

    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    fn mean(&self) -> f64 {
        self.samples.iter().sum::<f64>() / self.samples.len() as f64
    }

    /// `(1/π) ∫ (ρe^{it})^{-n} u dt` by the trapezoid rule, `n ≥ 1`.
    fn mode(&self, n: usize) -> Complex64 {
        let scale = 2.0 / (self.samples.len() as f64 * self.rho.powi(n as i32));
        circle_angles(self.samples.len())
            .zip(&self.samples)
            .map(|(t, u)| Complex64::from_polar(*u, -(n as f64) * t))
            .sum::<Complex64>()
            * scale
    }
}

/// Schwarz integral `(1/2π) ∫ u(ρe^{it}) (ρe^{it} + z)/(ρe^{it} − z) dt + iλ`.
pub fn schwarz_complex(trace: &BoundaryTrace, z: Complex64, lambda: f64) -> Result<Complex64> {
    let rho = trace.rho;
    if !(z.norm() < rho) {
        return Err(Error::OutOfDomain {
            norm: z.norm(),
            radius: rho,
        });
    }
    let n = trace.samples.len() as f64;
    let sum: Complex64 = circle_angles(trace.samples.len())
        .zip(&trace.samples)
        .map(|(t, u)| {
            let w = Complex64::from_polar(rho, t);
            (w + z) / (w - z) * u
        })
        .sum();
    Ok(sum / n + Complex64::new(0.0, lambda))
}

fn check_pair(a: &BoundaryTrace, c: &BoundaryTrace) -> Result<()> {
    if a.samples.len() != c.samples.len() || a.rho != c.rho {
        return Err(Error::TraceMismatch);
    }
    Ok(())
}

/// Coefficients of the quaternionic Schwarz series on `B⁴(0, ρ)`:
/// `u₀ = (1/2π) ∫ (a + c j) dt` and `uₙ = (1/π) ∫ (ρe^{it})^{-n} (a + c j) dt`,
/// where `e^{it}` lives in the slice of `fr.i()`.
pub fn quaternionic_schwarz_coeffs(
    a: &BoundaryTrace,
    c: &BoundaryTrace,
    fr: &Frame,
    nmax: usize,
) -> Result<QPowerSeries> {
    check_pair(a, c)?;
    if nmax > MAX_DEGREE {
        return Err(Error::DegreeCap {
            degree: nmax,
            cap: MAX_DEGREE,
        });
    }
    let mut coeffs = Vec::with_capacity(nmax + 1);
    coeffs.push(fr.assemble(Complex64::new(a.mean(), 0.0), Complex64::new(c.mean(), 0.0)));
    for n in 1..=nmax {
        coeffs.push(fr.assemble(a.mode(n), c.mode(n)));
    }
    QPowerSeries::new(a.rho, coeffs)
}

/// Upper bound on the number of kernel series terms per sample.
const KERNEL_MAX_TERMS: usize = 100_000;

/// Evaluates the quaternionic Schwarz integral at `q` directly: for each
/// sample the kernel `1 + Σₙ qⁿ 2(ρe^{itₖ})^{-n}` is summed until its terms
/// drop below machine precision, multiplied on the right by `aₖ + cₖ j`, and
/// averaged. Adds `λ₁ i + λ₂ ij`.
pub fn quaternionic_schwarz_eval(
    a: &BoundaryTrace,
    c: &BoundaryTrace,
    fr: &Frame,
    q: Quaternion,
    lambda1: f64,
    lambda2: f64,
) -> Result<Quaternion> {
    check_pair(a, c)?;
    let rho = a.rho;
    let norm = q.norm();
    if !(norm < rho) {
        return Err(Error::OutOfDomain { norm, radius: rho });
    }
    let ratio = norm / rho;
    let terms = if ratio == 0.0 {
        0
    } else {
        ((f64::EPSILON * 1e-3).ln() / ratio.ln()).ceil() as usize
    }
    .min(KERNEL_MAX_TERMS);

    let i = fr.i();
    let j = fr.j().as_quaternion();
    let n = a.samples.len();
    let mut total = Quaternion::ZERO;
    for ((t, av), cv) in circle_angles(n).zip(&a.samples).zip(&c.samples) {
        let w_inv = i.embed(Complex64::from_polar(1.0 / rho, -t));
        let mut kernel = Quaternion::ONE;
        let mut power = Quaternion::ONE;
        let mut w_power = Quaternion::ONE;
        for _ in 0..terms {
            power = power * q;
            w_power = w_power * w_inv;
            kernel += power * w_power * 2.0;
        }
        total += kernel * (Quaternion::real(*av) + j * *cv);
    }
    let [_, iq, _, ij] = fr.basis();
    Ok(total / n as f64 + iq * lambda1 + ij * lambda2)
}
