//! Monic slice regular polynomials, their slice-restricted zero sets, and the
//! zero-data bundle: four component zero sets on two slices, the
//! reconstruction of a polynomial from them, slice hulls and Gauss–Lucas.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::cpoly;
use crate::error::{Error, Result, ZeroSetId};
use crate::hull::{self, SliceHull};
use crate::quat::{Frame, ImaginaryUnit, Quaternion};
use crate::roots::{self, Root};
use crate::series::QPowerSeries;

/// Singular values below this (relative to the largest) count as zero.
pub const RANK_TOL: f64 = 1e-10;
/// A component whose coefficients are all below this (relative to the
/// polynomial's largest coefficient) is identically zero.
pub const ZERO_COMPONENT_TOL: f64 = 1e-12;
/// A root `z` of `f₁` is a common zero when `|f₂(z)|` is below this and
/// `f₂` has a root within [`roots::CLUSTER_RADIUS`] of `z`.
pub const COMMON_ZERO_TOL: f64 = 1e-8;
/// Largest acceptable residual of the reconstruction system.
pub const RECONSTRUCTION_TOL: f64 = 1e-8;
/// Inflation of hulls in containment checks.
pub const HULL_TOL: f64 = 1e-9;

/// `f(q) = a₀ + q a₁ + ⋯ + qⁿ⁻¹ aₙ₋₁ + qⁿ`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Quaternion>", into = "Vec<Quaternion>")]
pub struct SlicePolynomial {
    lower: Vec<Quaternion>,
}

impl TryFrom<Vec<Quaternion>> for SlicePolynomial {
    type Error = Error;
    fn try_from(full: Vec<Quaternion>) -> Result<Self> {
        SlicePolynomial::from_monic(full)
    }
}

impl From<SlicePolynomial> for Vec<Quaternion> {
    fn from(p: SlicePolynomial) -> Self {
        p.coeffs()
    }
}

impl SlicePolynomial {
    /// From the coefficients below the leading `1`.
    pub fn new(lower: Vec<Quaternion>) -> Result<Self> {
        if lower.is_empty() {
            return Err(Error::InvalidInput(
                "polynomial degree must be at least 1".into(),
            ));
        }
        if lower.len() > crate::series::MAX_DEGREE {
            return Err(Error::DegreeCap {
                degree: lower.len(),
                cap: crate::series::MAX_DEGREE,
            });
        }
        if lower.iter().any(|c| !c.is_finite()) {
            return Err(Error::InvalidInput("non-finite coefficient".into()));
        }
        Ok(SlicePolynomial { lower })
    }

    /// From the full coefficient list, whose last entry must be `1`.
    pub fn from_monic(mut full: Vec<Quaternion>) -> Result<Self> {
        match full.pop() {
            Some(lead) if lead.distance(&Quaternion::ONE) <= 1e-12 => SlicePolynomial::new(full),
            _ => Err(Error::InvalidInput(
                "polynomial must be monic: last coefficient 1".into(),
            )),
        }
    }

    pub fn degree(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self) -> &[Quaternion] {
        &self.lower
    }

    /// All coefficients including the leading `1`.
    pub fn coeffs(&self) -> Vec<Quaternion> {
        let mut c = self.lower.clone();
        c.push(Quaternion::ONE);
        c
    }

    pub fn eval(&self, q: Quaternion) -> Quaternion {
        self.coeffs()
            .iter()
            .rev()
            .fold(Quaternion::ZERO, |acc, a| q * acc + *a)
    }

    pub fn to_series(&self, radius: f64) -> Result<QPowerSeries> {
        QPowerSeries::new(radius, self.coeffs())
    }

    /// `f′/n`, monic of degree `n − 1`; `None` for degree one.
    pub fn monic_derivative(&self) -> Option<SlicePolynomial> {
        let n = self.degree();
        if n < 2 {
            return None;
        }
        let lower = (1..n)
            .map(|k| self.lower[k] * (k as f64 / n as f64))
            .collect();
        Some(SlicePolynomial { lower })
    }

    /// The monic `f` of degree `n + 1` with `f′ = (n + 1)·self` and `f(0) = a₀`.
    pub fn monic_antiderivative(&self, a0: Quaternion) -> SlicePolynomial {
        let m = (self.degree() + 1) as f64;
        let mut lower = vec![a0];
        lower.extend(
            self.lower
                .iter()
                .enumerate()
                .map(|(k, c)| *c * (m / (k as f64 + 1.0))),
        );
        SlicePolynomial { lower }
    }

    pub fn coeff_distance(&self, other: &SlicePolynomial) -> f64 {
        coeff_distance(&self.coeffs(), &other.coeffs())
    }
}

fn coeff_distance(a: &[Quaternion], b: &[Quaternion]) -> f64 {
    let n = a.len().max(b.len());
    (0..n)
        .map(|k| {
            let x = a.get(k).copied().unwrap_or(Quaternion::ZERO);
            let y = b.get(k).copied().unwrap_or(Quaternion::ZERO);
            x.distance(&y)
        })
        .fold(0.0, f64::max)
}

/// A component zero set, or the marker for an identically zero component.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(from = "Option<Vec<Root>>", into = "Option<Vec<Root>>")]
pub enum ZeroSet {
    Roots(Vec<Root>),
    IdenticallyZero,
}

impl From<Option<Vec<Root>>> for ZeroSet {
    fn from(o: Option<Vec<Root>>) -> Self {
        match o {
            Some(r) => ZeroSet::Roots(r),
            None => ZeroSet::IdenticallyZero,
        }
    }
}

impl From<ZeroSet> for Option<Vec<Root>> {
    fn from(z: ZeroSet) -> Self {
        match z {
            ZeroSet::Roots(r) => Some(r),
            ZeroSet::IdenticallyZero => None,
        }
    }
}

impl ZeroSet {
    pub fn roots(&self) -> Option<&[Root]> {
        match self {
            ZeroSet::Roots(r) => Some(r),
            ZeroSet::IdenticallyZero => None,
        }
    }

    /// Hausdorff distance of the point sets; `∞` if exactly one side is the
    /// identically-zero marker or exactly one side is empty.
    pub fn distance(&self, other: &ZeroSet) -> f64 {
        match (self, other) {
            (ZeroSet::IdenticallyZero, ZeroSet::IdenticallyZero) => 0.0,
            (ZeroSet::Roots(a), ZeroSet::Roots(b)) => roots::root_set_distance(a, b),
            _ => f64::INFINITY,
        }
    }

    pub fn same_as(&self, other: &ZeroSet, tol: f64) -> bool {
        match (self, other) {
            (ZeroSet::IdenticallyZero, ZeroSet::IdenticallyZero) => true,
            (ZeroSet::Roots(a), ZeroSet::Roots(b)) => roots::same_multiset(a, b, tol),
            _ => false,
        }
    }

    fn monic(&self) -> Option<Vec<Complex64>> {
        self.roots().map(|r| cpoly::from_roots(&roots::expand(r)))
    }
}

/// The four component zero sets of a polynomial relative to a frame
/// `(i, j)`: `s1`, `s2` on `C(i)` from the split along `j`; `s3`, `s4` on
/// `C(j)` from the split along `ij`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ZeroData {
    pub frame: Frame,
    pub s1: ZeroSet,
    pub s2: ZeroSet,
    pub s3: ZeroSet,
    pub s4: ZeroSet,
}

impl ZeroData {
    pub fn sets(&self) -> [(ZeroSetId, &ZeroSet); 4] {
        [
            (ZeroSetId::S1, &self.s1),
            (ZeroSetId::S2, &self.s2),
            (ZeroSetId::S3, &self.s3),
            (ZeroSetId::S4, &self.s4),
        ]
    }

    /// Largest Hausdorff distance between corresponding sets, `∞` on a
    /// frame mismatch.
    pub fn distance(&self, other: &ZeroData) -> f64 {
        if self.frame.distance(&other.frame) > crate::quat::FRAME_TOL {
            return f64::INFINITY;
        }
        self.sets()
            .iter()
            .zip(other.sets().iter())
            .map(|((_, a), (_, b))| a.distance(b))
            .fold(0.0, f64::max)
    }

    pub fn same_as(&self, other: &ZeroData, tol: f64) -> bool {
        self.frame.distance(&other.frame) <= crate::quat::FRAME_TOL
            && self
                .sets()
                .iter()
                .zip(other.sets().iter())
                .all(|((_, a), (_, b))| a.same_as(b, tol))
    }
}

/// Whether the vector parts of the coefficients span `R³`.
pub fn is_psrb_coeffs(coeffs: &[Quaternion]) -> bool {
    if coeffs.len() < 3 {
        return false;
    }
    let m = DMatrix::from_fn(3, coeffs.len(), |r, c| coeffs[c].vector()[r]);
    let sv = m.singular_values();
    let max = sv.max();
    max > 0.0 && sv.iter().filter(|s| **s > RANK_TOL * max.max(1.0)).count() == 3
}

pub fn is_psrb(f: &SlicePolynomial) -> bool {
    is_psrb_coeffs(f.lower())
}

pub fn is_psrb_series(f: &QPowerSeries) -> bool {
    is_psrb_coeffs(f.coeffs())
}

/// Complex coefficient lists of `f|C(i) = f₁ + f₂ j`.
fn split_coeffs(coeffs: &[Quaternion], fr: &Frame) -> (Vec<Complex64>, Vec<Complex64>) {
    coeffs.iter().map(|a| fr.split(*a)).unzip()
}

fn coeff_scale(coeffs: &[Quaternion]) -> f64 {
    coeffs.iter().map(|a| a.norm()).fold(0.0, f64::max)
}

/// Zero set of a component, trailing noise dropped.
fn component_zero_set(p: &[Complex64], scale: f64) -> Result<ZeroSet> {
    let mut end = p.len();
    while end > 0 && p[end - 1].norm() <= ZERO_COMPONENT_TOL * scale {
        end -= 1;
    }
    match end {
        0 => Ok(ZeroSet::IdenticallyZero),
        1 => Ok(ZeroSet::Roots(Vec::new())),
        _ => Ok(ZeroSet::Roots(roots::complex_roots(&p[..end])?)),
    }
}

fn zero_data_of(coeffs: &[Quaternion], fr: &Frame) -> Result<ZeroData> {
    let scale = coeff_scale(coeffs).max(f64::MIN_POSITIVE);
    let (f1, f2) = split_coeffs(coeffs, fr);
    let (g1, g2) = split_coeffs(coeffs, &fr.shifted());
    Ok(ZeroData {
        frame: *fr,
        s1: component_zero_set(&f1, scale)?,
        s2: component_zero_set(&f2, scale)?,
        s3: component_zero_set(&g1, scale)?,
        s4: component_zero_set(&g2, scale)?,
    })
}

/// The four component zero sets of `f` relative to `fr`.
///
/// On `C(i)`, `f − i f i = 2 f₁` and `f + i f i = 2 f₂ j`, so `s1` holds the
/// roots of `f₁` and `s2` those of `f₂`; likewise `s3`, `s4` on `C(j)`.
pub fn component_zero_sets(f: &SlicePolynomial, fr: &Frame) -> Result<ZeroData> {
    zero_data_of(&f.coeffs(), fr)
}

/// Rebuilds the monic polynomial of degree `degree` from its zero data,
/// without checking membership in PSRB.
///
/// `f₁` is the monic polynomial of `s1`. Then `f₂ = c·m₂` with `m₂` monic
/// from `s2` (or `f₂ = 0`), and `c` solves the real-linear least squares
/// system making the `C(j)` components equal `m₃` and `c′·m₄`.
pub fn reconstruct_from_zero_data(zd: &ZeroData, degree: usize) -> Result<SlicePolynomial> {
    if degree == 0 {
        return Err(Error::InvalidInput(
            "polynomial degree must be at least 1".into(),
        ));
    }
    let f1 = zd
        .s1
        .monic()
        .ok_or(Error::IdenticallyZeroComponent(ZeroSetId::S1))?;
    if f1.len() != degree + 1 {
        return Err(Error::InvalidInput(format!(
            "s1 has total multiplicity {}, expected {degree}",
            f1.len() - 1
        )));
    }
    let m3 = zd
        .s3
        .monic()
        .ok_or(Error::IdenticallyZeroComponent(ZeroSetId::S3))?;
    if m3.len() != degree + 1 {
        return Err(Error::InconsistentData {
            residual: f64::INFINITY,
        });
    }
    let m2 = zd.s2.monic();
    let m4 = zd.s4.monic();
    if m2.as_ref().is_some_and(|m| m.len() > degree)
        || m4.as_ref().is_some_and(|m| m.len() > degree)
    {
        return Err(Error::InconsistentData {
            residual: f64::INFINITY,
        });
    }

    let fr = zd.frame;
    let shifted = fr.shifted();
    let zero = Complex64::new(0.0, 0.0);
    let candidate = |c: Complex64| -> Vec<Quaternion> {
        (0..=degree)
            .map(|k| {
                let b = m2
                    .as_ref()
                    .map(|m| m.get(k).copied().unwrap_or(zero) * c)
                    .unwrap_or(zero);
                fr.assemble(f1[k], b)
            })
            .collect()
    };
    // Components on C(j) as functions of c, sampled at 0, 1 and i.
    let comps = |c: Complex64| split_coeffs(&candidate(c), &shifted);
    let (g1_0, g2_0) = comps(zero);
    let (g1_re, g2_re) = comps(Complex64::new(1.0, 0.0));
    let (g1_im, g2_im) = comps(Complex64::new(0.0, 1.0));

    // Unknowns: Re c, Im c, then Re c′, Im c′ when s4 has roots.
    let unknown_count = if m2.is_some() { 2 } else { 0 } + if m4.is_some() { 2 } else { 0 };
    let cp_col = if m2.is_some() { 2 } else { 0 };
    let rows = 4 * (degree + 1);
    let mut a = DMatrix::<f64>::zeros(rows, unknown_count.max(1));
    let mut b = DVector::<f64>::zeros(rows);
    for k in 0..=degree {
        // g1(c) − m3 = 0
        let r = 4 * k;
        let rhs = m3[k] - g1_0[k];
        b[r] = rhs.re;
        b[r + 1] = rhs.im;
        if m2.is_some() {
            let d_re = g1_re[k] - g1_0[k];
            let d_im = g1_im[k] - g1_0[k];
            a[(r, 0)] = d_re.re;
            a[(r + 1, 0)] = d_re.im;
            a[(r, 1)] = d_im.re;
            a[(r + 1, 1)] = d_im.im;
        }
        // g2(c) − c′ m4 = 0
        let rhs = -g2_0[k];
        b[r + 2] = rhs.re;
        b[r + 3] = rhs.im;
        if m2.is_some() {
            let d_re = g2_re[k] - g2_0[k];
            let d_im = g2_im[k] - g2_0[k];
            a[(r + 2, 0)] = d_re.re;
            a[(r + 3, 0)] = d_re.im;
            a[(r + 2, 1)] = d_im.re;
            a[(r + 3, 1)] = d_im.im;
        }
        if let Some(m4) = &m4 {
            let m = m4.get(k).copied().unwrap_or(zero);
            // −c′·m with c′ = p + i s
            a[(r + 2, cp_col)] = -m.re;
            a[(r + 3, cp_col)] = -m.im;
            a[(r + 2, cp_col + 1)] = m.im;
            a[(r + 3, cp_col + 1)] = -m.re;
        }
    }

    let x = if unknown_count == 0 {
        DVector::zeros(1)
    } else {
        let svd = a.clone().svd(true, true);
        let smax = svd.singular_values.max();
        if svd
            .singular_values
            .iter()
            .any(|s| *s <= RANK_TOL * smax.max(1.0))
        {
            return Err(Error::AmbiguousData);
        }
        svd.solve(&b, 0.0)
            .map_err(|e| Error::InvalidInput(e.to_string()))?
    };
    let c = if m2.is_some() {
        Complex64::new(x[0], x[1])
    } else {
        zero
    };
    let residual = (&a * &x - &b).amax();
    let scale = b.amax().max(1.0);
    if residual > RECONSTRUCTION_TOL * scale {
        return Err(Error::InconsistentData { residual });
    }
    SlicePolynomial::from_monic(candidate(c))
}

/// Strict bundle projection: reconstructs, then requires PSRB membership and
/// that the result reproduces the given zero data.
pub fn zero_bundle_project(zd: &ZeroData, degree: usize) -> Result<SlicePolynomial> {
    let f = reconstruct_from_zero_data(zd, degree)?;
    if !is_psrb(&f) {
        return Err(Error::NotPsrb);
    }
    let back = component_zero_sets(&f, &zd.frame)?;
    let residual = back.distance(zd);
    if residual > 1e-6 {
        return Err(Error::InconsistentData { residual });
    }
    Ok(f)
}

/// `g •_{fr} (1 + c j)`: components `(g₁, c·g₂)`.
pub fn bullet_unit_factor(g: &SlicePolynomial, fr: &Frame, c: Complex64) -> SlicePolynomial {
    let coeffs = g
        .coeffs()
        .iter()
        .map(|a| {
            let (z1, z2) = fr.split(*a);
            fr.assemble(z1, z2 * c)
        })
        .collect();
    SlicePolynomial::from_monic(coeffs).expect("leading coefficient is untouched")
}

/// The `c` with `f = g •_{fr} (1 + c j)` within `1e-10`, if any. When both
/// second components vanish every `c` works and `1` is returned.
pub fn solve_bullet_factor(
    f: &SlicePolynomial,
    g: &SlicePolynomial,
    fr: &Frame,
) -> Option<Complex64> {
    if f.degree() != g.degree() {
        return None;
    }
    let (f1, f2) = split_coeffs(&f.coeffs(), fr);
    let (g1, g2) = split_coeffs(&g.coeffs(), fr);
    if f1.iter().zip(&g1).any(|(a, b)| (a - b).norm() > 1e-10) {
        return None;
    }
    let norm2: f64 = g2.iter().map(|z| z.norm_sqr()).sum();
    let c = if norm2 <= 1e-24 {
        Complex64::new(1.0, 0.0)
    } else {
        g2.iter()
            .zip(&f2)
            .map(|(b, a)| b.conj() * a)
            .sum::<Complex64>()
            / norm2
    };
    let fits = g2.iter().zip(&f2).all(|(b, a)| (a - b * c).norm() <= 1e-10);
    fits.then_some(c)
}

/// Outcome of testing `f = g • (1 + c₁ j₁)` and `f = g • (1 + c₂ j₂)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BulletCheck {
    pub first: bool,
    pub second: bool,
    /// `f = g` coefficientwise within `1e-10`.
    pub coincide: bool,
}

impl BulletCheck {
    /// Both relations hold; then `f` and `g` must coincide.
    pub fn both_hold(&self) -> bool {
        self.first && self.second
    }

    /// No contradiction with uniqueness.
    pub fn consistent(&self) -> bool {
        !self.both_hold() || self.coincide
    }
}

pub fn bullet_uniqueness_check(
    f: &SlicePolynomial,
    g: &SlicePolynomial,
    fr1: &Frame,
    fr2: &Frame,
    c1: Complex64,
    c2: Complex64,
) -> BulletCheck {
    let holds = |fr: &Frame, c: Complex64| {
        f.degree() == g.degree() && f.coeff_distance(&bullet_unit_factor(g, fr, c)) <= 1e-10
    };
    BulletCheck {
        first: holds(fr1, c1),
        second: holds(fr2, c2),
        coincide: f.degree() == g.degree() && f.coeff_distance(g) <= 1e-10,
    }
}

fn slice_zero_set_coeffs(coeffs: &[Quaternion], i: ImaginaryUnit) -> Result<Vec<Root>> {
    let fr = Frame::completing(i);
    let scale = coeff_scale(coeffs).max(f64::MIN_POSITIVE);
    let (f1, f2) = split_coeffs(coeffs, &fr);
    let first = match component_zero_set(&f1, scale)? {
        ZeroSet::Roots(r) => r,
        // Only the zero polynomial; no finite zero set to report.
        ZeroSet::IdenticallyZero => return Ok(Vec::new()),
    };
    Ok(match component_zero_set(&f2, scale)? {
        ZeroSet::IdenticallyZero => first,
        // The value test alone admits points where f₂ is merely small.
        ZeroSet::Roots(second) => first
            .into_iter()
            .filter(|r| {
                cpoly::eval(&f2, r.z).norm() <= COMMON_ZERO_TOL
                    && second
                        .iter()
                        .any(|s| (s.z - r.z).norm() <= roots::CLUSTER_RADIUS)
            })
            .collect(),
    })
}

/// `Z_f ∩ C(i)` in the slice coordinates `x + y i`.
pub fn slice_zero_set(f: &SlicePolynomial, i: ImaginaryUnit) -> Result<Vec<Root>> {
    slice_zero_set_coeffs(&f.coeffs(), i)
}

fn points(roots: &[Root]) -> Vec<[f64; 2]> {
    roots.iter().map(|r| [r.z.re, r.z.im]).collect()
}

/// `Kull(Z_f ∩ C(i))`.
pub fn slice_hull(f: &SlicePolynomial, i: ImaginaryUnit) -> Result<SliceHull> {
    Ok(SliceHull::of_points(i, &points(&slice_zero_set(f, i)?)))
}

/// Per-slice hulls over a sample of `S²`; their union approximates SKull.
pub fn skull(f: &SlicePolynomial, slices: &[ImaginaryUnit]) -> Result<Vec<SliceHull>> {
    slices.iter().map(|i| slice_hull(f, *i)).collect()
}

/// Outcome of the Gauss–Lucas containments on one frame.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GaussLucasReport {
    /// Roots of each component of `f′` lie in the hull of the roots of the
    /// matching component of `f`.
    pub component: bool,
    /// `Z_{f′} ∩ C(i) ⊆ Kull(Z_f ∩ C(i))`; `None` when either set is empty.
    pub slice: Option<bool>,
}

impl GaussLucasReport {
    pub fn holds(&self) -> bool {
        self.component && self.slice.unwrap_or(true)
    }
}

fn component_gauss_lucas(p: &[Complex64], scale: f64) -> Result<bool> {
    let set = match component_zero_set(p, scale)? {
        ZeroSet::Roots(r) if !r.is_empty() => r,
        _ => return Ok(true),
    };
    let hull = hull::convex_hull_2d(&points(&set));
    let dp = cpoly::derivative(p);
    let dset = match component_zero_set(&dp, scale)? {
        ZeroSet::Roots(r) => r,
        ZeroSet::IdenticallyZero => return Ok(true),
    };
    Ok(dset
        .iter()
        .all(|r| hull::hull_contains(&hull, [r.z.re, r.z.im], HULL_TOL)))
}

pub fn gauss_lucas_check(f: &SlicePolynomial, fr: &Frame) -> Result<GaussLucasReport> {
    let coeffs = f.coeffs();
    let scale = coeff_scale(&coeffs);
    let (f1, f2) = split_coeffs(&coeffs, fr);
    let component = component_gauss_lucas(&f1, scale)? && component_gauss_lucas(&f2, scale)?;
    let slice = match f.monic_derivative() {
        None => None,
        Some(d) => {
            let zf = slice_zero_set(f, fr.i())?;
            let zd = slice_zero_set(&d, fr.i())?;
            if zf.is_empty() || zd.is_empty() {
                None
            } else {
                let hull = hull::convex_hull_2d(&points(&zf));
                Some(
                    zd.iter()
                        .all(|r| hull::hull_contains(&hull, [r.z.re, r.z.im], HULL_TOL)),
                )
            }
        }
    };
    Ok(GaussLucasReport { component, slice })
}

/// Both routes through the morphism `Γ` for `f` with `f′ ∈ PSRB`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GammaOutput {
    /// `Γ₁` applied to the zero data of `f′/n`: hulls on `C(i)` and `C(j)`.
    pub hull_pair: (SliceHull, SliceHull),
    /// `Γ₂` applied to `f′`: sampled SKull of `f`.
    pub skull: Vec<SliceHull>,
    /// Largest Hausdorff distance between the two routes.
    pub residual: f64,
    /// Roots of every component of `f′` lie in the hull of the matching
    /// component of `f`.
    pub component_containment: bool,
}

/// `Γ₁` goes through the zero data of `f′/n` and its reconstruction; `Γ₂`
/// uses `f′` directly. Both integrate with the constant term of `f`, which
/// `f′` does not determine. The residual compares `Γ₁`'s hulls with `Γ₂`'s
/// on `C(i)` and `C(j)` and the sampled hulls of both antiderivatives.
pub fn morphism_gamma(
    f: &SlicePolynomial,
    fr: &Frame,
    slices: &[ImaginaryUnit],
) -> Result<GammaOutput> {
    let d = f.monic_derivative().ok_or(Error::NotInPbsrb)?;
    if !is_psrb(&d) {
        return Err(Error::NotInPbsrb);
    }
    let a0 = f.lower()[0];

    // Γ₁ after the zero-data projection.
    let zd = component_zero_sets(&d, fr)?;
    let recovered = zero_bundle_project(&zd, d.degree())?.monic_antiderivative(a0);
    let hull_pair = (
        slice_hull(&recovered, fr.i())?,
        slice_hull(&recovered, fr.j())?,
    );

    // Γ₂ on f′ itself.
    let direct = d.monic_antiderivative(a0);
    let mut all: Vec<ImaginaryUnit> = vec![fr.i(), fr.j()];
    all.extend_from_slice(slices);
    let direct_hulls = skull(&direct, &all)?;
    let recovered_hulls = skull(&recovered, slices)?;

    let mut residual = hull::hausdorff(&hull_pair.0.polygon, &direct_hulls[0].polygon).max(
        hull::hausdorff(&hull_pair.1.polygon, &direct_hulls[1].polygon),
    );
    for (a, b) in recovered_hulls.iter().zip(&direct_hulls[2..]) {
        residual = residual.max(hull::hausdorff(&a.polygon, &b.polygon));
    }

    let coeffs = f.coeffs();
    let scale = coeff_scale(&coeffs);
    let mut component_containment = true;
    for frame in [*fr, fr.shifted()] {
        let (p1, p2) = split_coeffs(&coeffs, &frame);
        component_containment &=
            component_gauss_lucas(&p1, scale)? && component_gauss_lucas(&p2, scale)?;
    }

    Ok(GammaOutput {
        hull_pair,
        skull: direct_hulls[2..].to_vec(),
        residual,
        component_containment,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling;

    fn q(w: f64, x: f64, y: f64, z: f64) -> Quaternion {
        Quaternion::new(w, x, y, z)
    }

    /// `(q²−1) + c(q−1)e2`.
    fn confusable_pair(c: f64) -> SlicePolynomial {
        SlicePolynomial::new(vec![q(-1.0, 0.0, -c, 0.0), q(0.0, 0.0, c, 0.0)]).unwrap()
    }

    fn real_roots(set: &ZeroSet) -> Vec<f64> {
        set.roots().unwrap().iter().map(|r| r.z.re).collect()
    }

    #[test]
    fn psrb_examples() {
        let basis =
            SlicePolynomial::new(vec![Quaternion::E1, Quaternion::E2, Quaternion::E3]).unwrap();
        assert!(is_psrb(&basis));
        let real =
            SlicePolynomial::new(vec![Quaternion::real(1.0), Quaternion::real(2.0)]).unwrap();
        assert!(!is_psrb(&real));
        let plane = SlicePolynomial::new(vec![
            Quaternion::E1,
            Quaternion::E2,
            Quaternion::E1 + Quaternion::E2,
        ])
        .unwrap();
        assert!(!is_psrb(&plane));
    }

    #[test]
    fn component_sets_examples() {
        let fr = Frame::standard();
        let real = SlicePolynomial::new(vec![Quaternion::real(-1.0), Quaternion::ZERO]).unwrap();
        let zd = component_zero_sets(&real, &fr).unwrap();
        assert_eq!(zd.s2, ZeroSet::IdenticallyZero);
        assert_eq!(zd.s4, ZeroSet::IdenticallyZero);
        for s in [&zd.s1, &zd.s3] {
            let r = real_roots(s);
            assert!((r[0] + 1.0).abs() < 1e-12 && (r[1] - 1.0).abs() < 1e-12);
        }

        let zd = component_zero_sets(&confusable_pair(1.0), &fr).unwrap();
        let r = real_roots(&zd.s1);
        assert!((r[0] + 1.0).abs() < 1e-12 && (r[1] - 1.0).abs() < 1e-12);
        let r = real_roots(&zd.s2);
        assert_eq!(r.len(), 1);
        assert!((r[0] - 1.0).abs() < 1e-12);

        let linear = SlicePolynomial::new(vec![Quaternion::real(-0.5)]).unwrap();
        let zd = component_zero_sets(&linear, &fr).unwrap();
        assert!((zd.s1.roots().unwrap()[0].z.re - 0.5).abs() < 1e-15);
        assert_eq!(zd.s2, ZeroSet::IdenticallyZero);
    }

    #[test]
    fn confusable_pair_reconstruction() {
        let fr = Frame::standard();
        for c in [1.0, 7.0] {
            let f = confusable_pair(c);
            let zd = component_zero_sets(&f, &fr).unwrap();
            let back = reconstruct_from_zero_data(&zd, 2).unwrap();
            assert!(back.coeff_distance(&f) <= 1e-9, "c = {c}");
            // Not PSRB: the strict projection refuses it.
            assert_eq!(zero_bundle_project(&zd, 2), Err(Error::NotPsrb));
        }
        let one = component_zero_sets(&confusable_pair(1.0), &fr).unwrap();
        let seven = component_zero_sets(&confusable_pair(7.0), &fr).unwrap();
        // Same data on C(i), different on C(j).
        assert!(one.s1.same_as(&seven.s1, 1e-9) && one.s2.same_as(&seven.s2, 1e-9));
        assert!(!one.same_as(&seven, 1e-9));
    }

    #[test]
    fn random_psrb_round_trip() {
        let mut rng = sampling::rng(11);
        for _ in 0..40 {
            let deg = 3 + (rand::Rng::gen_range(&mut rng, 0..4));
            let f = sampling::slice_polynomial(&mut rng, deg);
            let fr = sampling::frame(&mut rng);
            let zd = component_zero_sets(&f, &fr).unwrap();
            let back = zero_bundle_project(&zd, deg).unwrap();
            assert!(
                back.coeff_distance(&f) <= 1e-9,
                "{}",
                back.coeff_distance(&f)
            );
        }
    }

    #[test]
    fn degree_mismatch_is_rejected() {
        let zd = component_zero_sets(&confusable_pair(1.0), &Frame::standard()).unwrap();
        assert!(matches!(
            reconstruct_from_zero_data(&zd, 3),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn bullet_examples() {
        let fr1 = Frame::standard();
        let fr2 = Frame::new(ImaginaryUnit::E2, ImaginaryUnit::E3).unwrap();
        let f = confusable_pair(1.0);
        let one = Complex64::new(1.0, 0.0);
        let same = bullet_uniqueness_check(&f, &f, &fr1, &fr2, one, one);
        assert!(same.both_hold() && same.coincide);

        let g = confusable_pair(7.0);
        assert_eq!(bullet_unit_factor(&f, &fr1, Complex64::new(7.0, 0.0)), g);
        let c = solve_bullet_factor(&g, &f, &fr1).unwrap();
        assert!((c - 7.0).norm() < 1e-12);
        assert_eq!(solve_bullet_factor(&g, &f, &fr2), None);
        let check = bullet_uniqueness_check(&g, &f, &fr1, &fr2, Complex64::new(7.0, 0.0), one);
        assert!(check.first && !check.second && !check.coincide && check.consistent());
    }

    #[test]
    fn slice_zero_set_examples() {
        let sq = SlicePolynomial::new(vec![Quaternion::real(-1.0), Quaternion::ZERO]).unwrap();
        let r = slice_zero_set(&sq, ImaginaryUnit::E3).unwrap();
        assert_eq!(r.len(), 2);
        let r = slice_zero_set(&confusable_pair(1.0), ImaginaryUnit::E1).unwrap();
        assert_eq!(r.len(), 1);
        assert!((r[0].z - 1.0).norm() < 1e-12);
        let sphere = SlicePolynomial::new(vec![Quaternion::real(1.0), Quaternion::ZERO]).unwrap();
        let i = ImaginaryUnit::normalize([1.0, 2.0, -0.5]).unwrap();
        let r = slice_zero_set(&sphere, i).unwrap();
        assert!((r[0].z - Complex64::new(0.0, -1.0)).norm() < 1e-12);
        assert!((r[1].z - Complex64::new(0.0, 1.0)).norm() < 1e-12);
    }

    #[test]
    fn skull_examples() {
        let sq = SlicePolynomial::new(vec![Quaternion::real(-1.0), Quaternion::ZERO]).unwrap();
        let hulls = skull(&sq, &sampling::fibonacci_sphere(16)).unwrap();
        for h in &hulls {
            assert_eq!(h.polygon.len(), 2);
            assert!((h.polygon[0][0] + 1.0).abs() < 1e-12 && (h.polygon[1][0] - 1.0).abs() < 1e-12);
        }
        // Generic quaternionic coefficients: empty slice zero set.
        let f = SlicePolynomial::new(vec![q(0.3, 1.0, 0.0, 0.0), q(0.0, 0.0, 1.0, 0.5)]).unwrap();
        let h = slice_hull(&f, ImaginaryUnit::E1).unwrap();
        assert!(h.is_empty());
    }

    #[test]
    fn gauss_lucas_examples() {
        let cubic = SlicePolynomial::new(vec![
            Quaternion::ZERO,
            Quaternion::real(-1.0),
            Quaternion::ZERO,
        ])
        .unwrap();
        let rep = gauss_lucas_check(&cubic, &Frame::standard()).unwrap();
        assert_eq!(rep.slice, Some(true));
        assert!(rep.holds());
        let sq = SlicePolynomial::new(vec![Quaternion::ZERO, Quaternion::ZERO]).unwrap();
        assert!(gauss_lucas_check(&sq, &Frame::standard()).unwrap().holds());
    }

    /// `f₁` has roots `{s, 0.6, 2}` and `f₂` roots `{s, 2w − s}` for a
    /// critical point `w` of `f₁`: `Z_f ∩ C(i) = {s}` while `w` is a zero of
    /// `f′` on the same slice.
    #[test]
    fn slice_level_containment_can_fail() {
        let s = Complex64::new(-1.0, 0.0);
        let f1 = cpoly::from_roots(&[s, Complex64::new(0.6, 0.0), Complex64::new(2.0, 0.0)]);
        let crit = roots::complex_roots(&cpoly::derivative(&f1)).unwrap();
        let w = crit[0].z;
        let f2 = cpoly::from_roots(&[s, w * 2.0 - s]);
        let fr = Frame::standard();
        let coeffs: Vec<Quaternion> = (0..4)
            .map(|k| fr.assemble(f1[k], f2.get(k).copied().unwrap_or_default()))
            .collect();
        let f = SlicePolynomial::from_monic(coeffs).unwrap();
        let rep = gauss_lucas_check(&f, &fr).unwrap();
        assert!(rep.component);
        assert_eq!(rep.slice, Some(false));
    }

    /// Isolated zeros of `p`: each non-real root `x + yi` of the real
    /// polynomial `p ⁎ pᶜ` gives a sphere `x + yS`, and `p(x + yI) = α + Iβ`
    /// vanishes at `I = −αβ⁻¹`.
    fn isolated_zeros(p: &SlicePolynomial) -> Vec<Quaternion> {
        let c = p.coeffs();
        let mut sym = vec![Complex64::new(0.0, 0.0); 2 * c.len() - 1];
        for (k, a) in c.iter().enumerate() {
            for (l, b) in c.iter().enumerate() {
                sym[k + l] += Complex64::new((*a * b.conj()).w, 0.0);
            }
        }
        let mut out = Vec::new();
        for r in roots::complex_roots(&sym).unwrap() {
            if r.z.im <= 1e-9 {
                continue;
            }
            let e1 = ImaginaryUnit::E1;
            let vp = p.eval(e1.embed(r.z));
            let vm = p.eval(e1.embed(r.z.conj()));
            let alpha = (vp + vm) * 0.5;
            let beta = e1.as_quaternion() * (vm - vp) * 0.5;
            let unit = -(alpha * beta.inverse().unwrap());
            if unit.w.abs() < 1e-8 && (unit.norm() - 1.0).abs() < 1e-8 {
                out.push(Quaternion::real(r.z.re) + unit * r.z.im);
            }
        }
        out
    }

    /// `f = (q² − 0.01)·g`: `f′` has an isolated zero near the origin, off
    /// the real axis on one slice `C(J)`, where `Z_f ∩ C(J) = {±0.1}`.
    #[test]
    fn close_real_roots_break_slice_level_containment() {
        let g = SlicePolynomial::new(vec![
            q(0.4, 0.3, -0.2, 0.5),
            q(-0.1, 0.6, 0.2, -0.3),
            q(0.2, -0.4, 0.7, 0.1),
        ])
        .unwrap();
        let m = SlicePolynomial::new(vec![Quaternion::real(-0.01), Quaternion::ZERO]).unwrap();
        let prod = m
            .to_series(1.0)
            .unwrap()
            .star_product(&g.to_series(1.0).unwrap())
            .unwrap();
        let f = SlicePolynomial::from_monic(prod.coeffs().to_vec()).unwrap();
        let d = f.monic_derivative().unwrap();
        assert!(is_psrb(&d));

        let z = isolated_zeros(&d)
            .into_iter()
            .min_by(|a, b| a.norm().total_cmp(&b.norm()))
            .unwrap();
        assert!(d.eval(z).norm() < 1e-12);
        assert!(z.norm() < 0.1 && z.vector_norm() > 1e-4);
        let unit = crate::quat::imaginary_unit_of(z).unwrap();

        let zf = slice_zero_set(&f, unit).unwrap();
        assert_eq!(zf.len(), 2);
        assert!(zf
            .iter()
            .all(|r| r.z.im.abs() < 1e-12 && (r.z.re.abs() - 0.1).abs() < 1e-12));
        let rep = gauss_lucas_check(&f, &Frame::completing(unit)).unwrap();
        assert!(rep.component);
        assert_eq!(rep.slice, Some(false));
    }

    #[test]
    fn gamma_commutes() {
        let mut rng = sampling::rng(5);
        let m = SlicePolynomial::new(vec![Quaternion::real(-0.25), Quaternion::ZERO]).unwrap();
        let g = sampling::slice_polynomial(&mut rng, 3);
        let prod = m
            .to_series(1.0)
            .unwrap()
            .star_product(&g.to_series(1.0).unwrap())
            .unwrap();
        let f = SlicePolynomial::from_monic(prod.coeffs().to_vec()).unwrap();
        let fr = sampling::frame(&mut rng);
        let out = morphism_gamma(&f, &fr, &sampling::fibonacci_sphere(8)).unwrap();
        assert!(out.residual <= 1e-9, "{}", out.residual);
        assert!(out.component_containment);
        assert!(!out.hull_pair.0.is_empty());

        let real = SlicePolynomial::new(vec![
            Quaternion::real(1.0),
            Quaternion::ZERO,
            Quaternion::real(2.0),
        ])
        .unwrap();
        assert_eq!(morphism_gamma(&real, &fr, &[]), Err(Error::NotInPbsrb));
    }

    #[test]
    fn json_shapes() {
        let f = confusable_pair(1.0);
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(
            s,
            "[[-1.0,0.0,-1.0,0.0],[0.0,0.0,1.0,0.0],[1.0,0.0,0.0,0.0]]"
        );
        let back: SlicePolynomial = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
        assert!(serde_json::from_str::<SlicePolynomial>("[[1,0,0,0],[2,0,0,0]]").is_err());

        let zd = component_zero_sets(
            &SlicePolynomial::new(vec![Quaternion::real(-1.0), Quaternion::ZERO]).unwrap(),
            &Frame::standard(),
        )
        .unwrap();
        let s = serde_json::to_string(&zd).unwrap();
        assert!(s.contains("\"s2\":null"));
        let back: ZeroData = serde_json::from_str(&s).unwrap();
        assert_eq!(back, zd);
    }
}
