//! Real quaternions, imaginary units, orthonormal frames and the rotation
//! action `q ↦ u q ū` of the unit sphere `S³`.
//!
//! Basis relations: `e1² = e2² = e3² = -1`, `e1 e2 = -e2 e1 = e3` and
//! cyclically.

use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Below this norm a vector part is treated as zero.
pub const EPS_VEC: f64 = 1e-12;

/// Tolerance used when validating unit vectors, frames and unit quaternions.
pub const FRAME_TOL: f64 = 1e-12;

/// A real quaternion `w + x e1 + y e2 + z e3`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(from = "[f64; 4]", into = "[f64; 4]")]
pub struct Quaternion {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl From<[f64; 4]> for Quaternion {
    fn from(a: [f64; 4]) -> Self {
        Quaternion::new(a[0], a[1], a[2], a[3])
    }
}

impl From<Quaternion> for [f64; 4] {
    fn from(q: Quaternion) -> Self {
        [q.w, q.x, q.y, q.z]
    }
}

impl From<f64> for Quaternion {
    fn from(r: f64) -> Self {
        Quaternion::real(r)
    }
}

impl Quaternion {
    pub const ZERO: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 0.0);
    pub const ONE: Quaternion = Quaternion::new(1.0, 0.0, 0.0, 0.0);
    pub const E1: Quaternion = Quaternion::new(0.0, 1.0, 0.0, 0.0);
    pub const E2: Quaternion = Quaternion::new(0.0, 0.0, 1.0, 0.0);
    pub const E3: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 1.0);

    #[inline]
    pub const fn new(w: f64, x: f64, y: f64, z: f64) -> Self {
        Quaternion { w, x, y, z }
    }

    #[inline]
    pub const fn real(r: f64) -> Self {
        Quaternion::new(r, 0.0, 0.0, 0.0)
    }

    #[inline]
    pub const fn pure(v: [f64; 3]) -> Self {
        Quaternion::new(0.0, v[0], v[1], v[2])
    }

    /// Vector (imaginary) part.
    #[inline]
    pub fn vector(&self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    #[inline]
    pub fn vector_norm(&self) -> f64 {
        (self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }

    #[inline]
    pub fn conj(&self) -> Self {
        Quaternion::new(self.w, -self.x, -self.y, -self.z)
    }

    #[inline]
    pub fn norm_sq(&self) -> f64 {
        self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z
    }

    #[inline]
    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    /// Euclidean inner product in `R⁴`.
    #[inline]
    pub fn dot(&self, other: &Quaternion) -> f64 {
        self.w * other.w + self.x * other.x + self.y * other.y + self.z * other.z
    }

    /// Multiplicative inverse; `None` for the zero quaternion.
    pub fn inverse(&self) -> Option<Self> {
        let n2 = self.norm_sq();
        if n2 == 0.0 {
            None
        } else {
            Some(self.conj() / n2)
        }
    }

    /// `‖a − b‖` in `R⁴`.
    #[inline]
    pub fn distance(&self, other: &Quaternion) -> f64 {
        (*self - *other).norm()
    }

    pub fn is_finite(&self) -> bool {
        self.w.is_finite() && self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    /// Splits `q = x + I_q y` with `y ≥ 0`; `None` for the unit when the
    /// vector part is below [`EPS_VEC`].
    pub fn slice_coordinates(&self) -> (f64, f64, Option<ImaginaryUnit>) {
        let y = self.vector_norm();
        if y <= EPS_VEC {
            (self.w, 0.0, None)
        } else {
            let v = self.vector();
            let unit = ImaginaryUnit([v[0] / y, v[1] / y, v[2] / y]);
            (self.w, y, Some(unit))
        }
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    #[inline]
    fn add(self, o: Quaternion) -> Quaternion {
        Quaternion::new(self.w + o.w, self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl AddAssign for Quaternion {
    #[inline]
    fn add_assign(&mut self, o: Quaternion) {
        *self = *self + o;
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    #[inline]
    fn sub(self, o: Quaternion) -> Quaternion {
        Quaternion::new(self.w - o.w, self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl SubAssign for Quaternion {
    #[inline]
    fn sub_assign(&mut self, o: Quaternion) {
        *self = *self - o;
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    #[inline]
    fn neg(self) -> Quaternion {
        Quaternion::new(-self.w, -self.x, -self.y, -self.z)
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;
    #[inline]
    fn mul(self, o: Quaternion) -> Quaternion {
        qmul(self, o)
    }
}

impl MulAssign for Quaternion {
    #[inline]
    fn mul_assign(&mut self, o: Quaternion) {
        *self = qmul(*self, o);
    }
}

impl Mul<f64> for Quaternion {
    type Output = Quaternion;
    #[inline]
    fn mul(self, s: f64) -> Quaternion {
        Quaternion::new(self.w * s, self.x * s, self.y * s, self.z * s)
    }
}

impl Mul<Quaternion> for f64 {
    type Output = Quaternion;
    #[inline]
    fn mul(self, q: Quaternion) -> Quaternion {
        q * self
    }
}

impl Div<f64> for Quaternion {
    type Output = Quaternion;
    #[inline]
    fn div(self, s: f64) -> Quaternion {
        Quaternion::new(self.w / s, self.x / s, self.y / s, self.z / s)
    }
}

impl std::iter::Sum for Quaternion {
    fn sum<I: Iterator<Item = Quaternion>>(iter: I) -> Self {
        iter.fold(Quaternion::ZERO, |acc, q| acc + q)
    }
}

/// Hamilton product.
#[inline]
pub fn qmul(a: Quaternion, b: Quaternion) -> Quaternion {
    Quaternion::new(
        a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
        a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
        a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
        a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
    )
}

#[inline]
fn dot3(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

#[inline]
fn cross3(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

#[inline]
fn norm3(a: [f64; 3]) -> f64 {
    dot3(a, a).sqrt()
}

/// A point of the sphere `S²` of unit pure quaternions; squares to `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "[f64; 3]", into = "[f64; 3]")]
pub struct ImaginaryUnit([f64; 3]);

impl TryFrom<[f64; 3]> for ImaginaryUnit {
    type Error = Error;
    fn try_from(v: [f64; 3]) -> Result<Self> {
        ImaginaryUnit::new(v)
    }
}

impl From<ImaginaryUnit> for [f64; 3] {
    fn from(u: ImaginaryUnit) -> Self {
        u.0
    }
}

impl ImaginaryUnit {
    pub const E1: ImaginaryUnit = ImaginaryUnit([1.0, 0.0, 0.0]);
    pub const E2: ImaginaryUnit = ImaginaryUnit([0.0, 1.0, 0.0]);
    pub const E3: ImaginaryUnit = ImaginaryUnit([0.0, 0.0, 1.0]);

    /// Accepts a vector that is already of unit length (within [`FRAME_TOL`]).
    pub fn new(v: [f64; 3]) -> Result<Self> {
        let n = norm3(v);
        if !n.is_finite() || (n - 1.0).abs() > FRAME_TOL {
            return Err(Error::InvalidInput(format!(
                "imaginary unit must have norm 1, got {n}"
            )));
        }
        Ok(ImaginaryUnit(v))
    }

    /// Normalizes an arbitrary nonzero vector.
    pub fn normalize(v: [f64; 3]) -> Result<Self> {
        let n = norm3(v);
        if !(n > EPS_VEC) || !n.is_finite() {
            return Err(Error::DegenerateVector(n));
        }
        Ok(ImaginaryUnit([v[0] / n, v[1] / n, v[2] / n]))
    }

    #[inline]
    pub fn vector(&self) -> [f64; 3] {
        self.0
    }

    #[inline]
    pub fn as_quaternion(&self) -> Quaternion {
        Quaternion::pure(self.0)
    }

    #[inline]
    pub fn dot(&self, other: &ImaginaryUnit) -> f64 {
        dot3(self.0, other.0)
    }

    /// Embeds `re + im·i` of the slice `C(i)` into `H`.
    #[inline]
    pub fn embed(&self, z: Complex64) -> Quaternion {
        Quaternion::new(z.re, z.im * self.0[0], z.im * self.0[1], z.im * self.0[2])
    }

    /// Inverse of [`embed`](Self::embed) for quaternions lying in `C(i)`;
    /// other components are discarded by orthogonal projection.
    #[inline]
    pub fn project(&self, q: Quaternion) -> Complex64 {
        Complex64::new(q.w, dot3(q.vector(), self.0))
    }

    pub fn neg(&self) -> ImaginaryUnit {
        ImaginaryUnit([-self.0[0], -self.0[1], -self.0[2]])
    }

    /// A unit vector orthogonal to `self`, chosen deterministically from the
    /// standard basis vector least aligned with it.
    pub fn orthogonal_completion(&self) -> ImaginaryUnit {
        let v = self.0;
        let mut best = 0;
        for k in 1..3 {
            if v[k].abs() < v[best].abs() {
                best = k;
            }
        }
        let mut e = [0.0; 3];
        e[best] = 1.0;
        let d = dot3(e, v);
        let w = [e[0] - d * v[0], e[1] - d * v[1], e[2] - d * v[2]];
        let n = norm3(w);
        ImaginaryUnit([w[0] / n, w[1] / n, w[2] / n])
    }
}

/// An ordered orthonormal pair `(i, j)` of imaginary units; `{1, i, j, ij}` is
/// then an orthonormal basis of `H` with `(i, j, ij)` positively oriented.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawFrame", into = "RawFrame")]
pub struct Frame {
    i: ImaginaryUnit,
    j: ImaginaryUnit,
}

#[derive(Serialize, Deserialize)]
struct RawFrame {
    i: [f64; 3],
    j: [f64; 3],
}

impl TryFrom<RawFrame> for Frame {
    type Error = Error;
    fn try_from(raw: RawFrame) -> Result<Self> {
        Frame::new(ImaginaryUnit::new(raw.i)?, ImaginaryUnit::new(raw.j)?)
    }
}

impl From<Frame> for RawFrame {
    fn from(f: Frame) -> Self {
        RawFrame {
            i: f.i.vector(),
            j: f.j.vector(),
        }
    }
}

impl Frame {
    pub fn new(i: ImaginaryUnit, j: ImaginaryUnit) -> Result<Self> {
        let d = i.dot(&j);
        if d.abs() > FRAME_TOL {
            return Err(Error::InvalidFrame(format!("<i, j> = {d:e}, expected 0")));
        }
        let ij = cross3(i.vector(), j.vector());
        let det = dot3(ij, ij);
        if det <= FRAME_TOL {
            return Err(Error::InvalidFrame(format!(
                "det[i | j | ij] = {det:e} is not positive"
            )));
        }
        Ok(Frame { i, j })
    }

    /// The standard frame `(e1, e2)`.
    pub fn standard() -> Frame {
        Frame {
            i: ImaginaryUnit::E1,
            j: ImaginaryUnit::E2,
        }
    }

    /// `(i, j)` for a given `i`, with `j` the deterministic orthogonal completion.
    pub fn completing(i: ImaginaryUnit) -> Frame {
        Frame {
            i,
            j: i.orthogonal_completion(),
        }
    }

    #[inline]
    pub fn i(&self) -> ImaginaryUnit {
        self.i
    }

    #[inline]
    pub fn j(&self) -> ImaginaryUnit {
        self.j
    }

    /// The product `ij` as an imaginary unit.
    pub fn ij(&self) -> ImaginaryUnit {
        let q = self.i.as_quaternion() * self.j.as_quaternion();
        ImaginaryUnit(q.vector())
    }

    /// The frame `(j, ij)` used for the second slice `C(j)`.
    pub fn shifted(&self) -> Frame {
        Frame {
            i: self.j,
            j: self.ij(),
        }
    }

    /// The basis `{1, i, j, ij}` as quaternions.
    pub fn basis(&self) -> [Quaternion; 4] {
        [
            Quaternion::ONE,
            self.i.as_quaternion(),
            self.j.as_quaternion(),
            self.ij().as_quaternion(),
        ]
    }

    /// Maximum deviation of the Gram matrix of `{1, i, j, ij}` from the identity.
    pub fn gram_defect(&self) -> f64 {
        let b = self.basis();
        let mut worst: f64 = 0.0;
        for r in 0..4 {
            for c in 0..4 {
                let target = if r == c { 1.0 } else { 0.0 };
                worst = worst.max((b[r].dot(&b[c]) - target).abs());
            }
        }
        worst
    }

    /// `det[i | j | ij]`.
    pub fn orientation(&self) -> f64 {
        let ij = self.ij().vector();
        let (i, j) = (self.i.vector(), self.j.vector());
        dot3(i, cross3(j, ij))
    }

    /// Euclidean distance of the pairs viewed as points of `R⁶`.
    pub fn distance(&self, other: &Frame) -> f64 {
        let (a, b) = (self.i.vector(), other.i.vector());
        let (c, d) = (self.j.vector(), other.j.vector());
        let mut s = 0.0;
        for k in 0..3 {
            s += (a[k] - b[k]).powi(2) + (c[k] - d[k]).powi(2);
        }
        s.sqrt()
    }

    /// Coordinates `(α, β, γ, δ)` of `q = α + βi + γj + δ ij`.
    pub fn coordinates(&self, q: Quaternion) -> [f64; 4] {
        let b = self.basis();
        [q.w, q.dot(&b[1]), q.dot(&b[2]), q.dot(&b[3])]
    }

    /// Writes `q = z1 + z2 j` with `z1, z2 ∈ C(i)`.
    pub fn split(&self, q: Quaternion) -> (Complex64, Complex64) {
        let [a, b, c, d] = self.coordinates(q);
        (Complex64::new(a, b), Complex64::new(c, d))
    }

    /// Inverse of [`split`](Self::split): `z1 + z2 j`.
    pub fn assemble(&self, z1: Complex64, z2: Complex64) -> Quaternion {
        self.i.embed(z1) + self.i.embed(z2) * self.j.as_quaternion()
    }
}

/// A point of `S³`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Quaternion", into = "Quaternion")]
pub struct UnitQuaternion(Quaternion);

impl TryFrom<Quaternion> for UnitQuaternion {
    type Error = Error;
    fn try_from(q: Quaternion) -> Result<Self> {
        UnitQuaternion::new(q)
    }
}

impl From<UnitQuaternion> for Quaternion {
    fn from(u: UnitQuaternion) -> Self {
        u.0
    }
}

impl UnitQuaternion {
    pub const IDENTITY: UnitQuaternion = UnitQuaternion(Quaternion::ONE);

    pub fn new(q: Quaternion) -> Result<Self> {
        let n = q.norm();
        if !n.is_finite() || (n - 1.0).abs() > FRAME_TOL {
            return Err(Error::NotUnit(n));
        }
        Ok(UnitQuaternion(q))
    }

    pub fn normalize(q: Quaternion) -> Result<Self> {
        let n = q.norm();
        if !(n > EPS_VEC) || !n.is_finite() {
            return Err(Error::DegenerateVector(n));
        }
        Ok(UnitQuaternion(q / n))
    }

    #[inline]
    pub fn quaternion(&self) -> Quaternion {
        self.0
    }

    #[inline]
    pub fn conj(&self) -> UnitQuaternion {
        UnitQuaternion(self.0.conj())
    }

    /// Group product, renormalized to stay on `S³`.
    pub fn compose(&self, other: &UnitQuaternion) -> UnitQuaternion {
        let q = self.0 * other.0;
        UnitQuaternion(q / q.norm())
    }
}

/// `I_q = 𝐪 / ‖𝐪‖` for a quaternion with nonzero vector part.
pub fn imaginary_unit_of(q: Quaternion) -> Result<ImaginaryUnit> {
    ImaginaryUnit::normalize(q.vector())
}

/// `u w ū`.
#[inline]
pub fn rotate(u: &UnitQuaternion, w: Quaternion) -> Quaternion {
    u.0 * w * u.0.conj()
}

fn rotate_unit(u: &UnitQuaternion, v: ImaginaryUnit) -> ImaginaryUnit {
    let r = rotate(u, v.as_quaternion()).vector();
    // Renormalize away rounding so repeated actions stay within tolerance.
    let n = norm3(r);
    ImaginaryUnit([r[0] / n, r[1] / n, r[2] / n])
}

/// `R_u(i, j) = (u i ū, u j ū)`.
pub fn rotate_frame(u: &UnitQuaternion, fr: &Frame) -> Frame {
    Frame {
        i: rotate_unit(u, fr.i),
        j: rotate_unit(u, fr.j),
    }
}
