//! The harmonic-pair bundle over slice regular functions on a ball.
//!
//! Total space: triples `([a], [c], (i, j))` of harmonic classes (modulo real
//! constants) and a frame. Base space: slice regular functions modulo
//! quaternionic constants. The projection builds `F = a + i ã`,
//! `G = c + i c̃` from conjugate harmonics and extends `F + G j` off the slice.
//! Classes are stored as canonical representatives vanishing at the origin,
//! so class equality is a coefficient comparison.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::harmonic::HarmonicPoly;
use crate::quat::{rotate, rotate_frame, Frame, Quaternion, UnitQuaternion, FRAME_TOL};
use crate::series::{QPowerSeries, SlicePair};

/// `[a]`: a harmonic polynomial modulo real constants.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(from = "HarmonicPoly", into = "HarmonicPoly")]
pub struct HarmonicClass(HarmonicPoly);

impl From<HarmonicPoly> for HarmonicClass {
    fn from(h: HarmonicPoly) -> Self {
        HarmonicClass::new(&h)
    }
}

impl From<HarmonicClass> for HarmonicPoly {
    fn from(c: HarmonicClass) -> Self {
        c.0
    }
}

impl HarmonicClass {
    pub fn new(h: &HarmonicPoly) -> Self {
        let mut c = h.normalized().coeffs().to_vec();
        while c.len() > 1 && c[c.len() - 1] == Complex64::new(0.0, 0.0) {
            c.pop();
        }
        HarmonicClass(HarmonicPoly::new(c))
    }

    pub fn zero() -> Self {
        HarmonicClass(HarmonicPoly::constant(0.0))
    }

    pub fn rep(&self) -> &HarmonicPoly {
        &self.0
    }

    pub fn distance(&self, other: &HarmonicClass) -> f64 {
        self.0.coeff_distance(&other.0)
    }
}

/// `[f]`: a series modulo quaternionic constants, represented with `a₀ = 0`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(from = "QPowerSeries", into = "QPowerSeries")]
pub struct BaseClass(QPowerSeries);

impl From<QPowerSeries> for BaseClass {
    fn from(f: QPowerSeries) -> Self {
        BaseClass::new(&f)
    }
}

impl From<BaseClass> for QPowerSeries {
    fn from(c: BaseClass) -> Self {
        c.0
    }
}

impl BaseClass {
    pub fn new(f: &QPowerSeries) -> Self {
        let mut coeffs = f.coeffs().to_vec();
        coeffs[0] = Quaternion::ZERO;
        while coeffs.len() > 1 && coeffs[coeffs.len() - 1] == Quaternion::ZERO {
            coeffs.pop();
        }
        BaseClass(QPowerSeries::new(f.radius(), coeffs).expect("same shape as a valid series"))
    }

    pub fn rep(&self) -> &QPowerSeries {
        &self.0
    }

    pub fn distance(&self, other: &BaseClass) -> f64 {
        self.0.coeff_distance(&other.0)
    }

    /// `[f] + [g] = [f + g]`.
    pub fn add(&self, other: &BaseClass) -> BaseClass {
        let n = self.0.coeffs().len().max(other.0.coeffs().len());
        let coeffs = (0..n).map(|k| self.0.coeff(k) + other.0.coeff(k)).collect();
        let radius = self.0.radius().min(other.0.radius());
        BaseClass::new(&QPowerSeries::new(radius, coeffs).expect("sum of valid series"))
    }

    /// `[f]′ = [f′]`.
    pub fn derivative(&self) -> BaseClass {
        BaseClass::new(&self.0.derivative())
    }
}

/// `([a], [c], (i, j))` over the disk of radius `rho`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TotalElement {
    pub a: HarmonicClass,
    pub c: HarmonicClass,
    pub frame: Frame,
    #[serde(default = "unit_radius")]
    pub rho: f64,
}

fn unit_radius() -> f64 {
    1.0
}

impl TotalElement {
    pub fn new(a: &HarmonicPoly, c: &HarmonicPoly, frame: Frame, rho: f64) -> Result<Self> {
        if !(rho > 0.0) || !rho.is_finite() {
            return Err(Error::InvalidInput(format!(
                "radius must be positive, got {rho}"
            )));
        }
        Ok(TotalElement {
            a: HarmonicClass::new(a),
            c: HarmonicClass::new(c),
            frame,
            rho,
        })
    }

    /// Max coefficient distance of the class representatives plus the frame
    /// distance in `R⁶`.
    pub fn distance(&self, other: &TotalElement) -> f64 {
        self.a.distance(&other.a).max(self.c.distance(&other.c)) + self.frame.distance(&other.frame)
    }
}

/// Holomorphic functions `F = a + i ã` and `G = c + i c̃` on the slice,
/// conjugates taken from the origin.
fn holomorphic_pair(el: &TotalElement) -> SlicePair {
    let conj_free = |h: &HarmonicPoly| {
        // Re p + i (Im p − Im p(0)) = p − i Im p(0).
        let mut c = h.coeffs().to_vec();
        c[0] = Complex64::new(c[0].re, 0.0);
        c
    };
    SlicePair {
        frame: el.frame,
        radius: el.rho,
        f1: conj_free(el.a.rep()),
        f2: conj_free(el.c.rep()),
    }
}

/// Bundle projection `([a], [c], (i, j)) ↦ [P_{i,j}(F + G j)]`.
pub fn project(el: &TotalElement) -> BaseClass {
    let f = holomorphic_pair(el)
        .reassemble()
        .expect("degree bounded by the class representatives");
    BaseClass::new(&f)
}

/// `φ_u([f], (i, j)) = ([D₁], [D₃], (u i ū, u j ū))` with the D-components
/// taken relative to the rotated frame.
pub fn trivialize(u: &UnitQuaternion, fcl: &BaseClass, fr: &Frame) -> TotalElement {
    let rotated = rotate_frame(u, fr);
    let d = fcl.rep().d_components(&rotated);
    TotalElement {
        a: HarmonicClass::new(&d.d1),
        c: HarmonicClass::new(&d.d3),
        frame: rotated,
        rho: fcl.rep().radius(),
    }
}

/// Section `S_{i,j}([f]) = φ_1([f], (i, j))`.
pub fn section(fr: &Frame, fcl: &BaseClass) -> TotalElement {
    trivialize(&UnitQuaternion::IDENTITY, fcl, fr)
}

/// Distance between `φ_u([f], fr)` and `φ_v([f], R_{v̄u}(fr))`.
pub fn compatibility_residual(
    u: &UnitQuaternion,
    v: &UnitQuaternion,
    fcl: &BaseClass,
    fr: &Frame,
) -> f64 {
    let lhs = trivialize(u, fcl, fr);
    let p = v.conj().compose(u);
    let rhs = trivialize(v, fcl, &rotate_frame(&p, fr));
    lhs.distance(&rhs)
}

/// `([a + p], [c + r], (i, j))`; both elements must share the frame.
pub fn add(x: &TotalElement, y: &TotalElement) -> Result<TotalElement> {
    if x.frame.distance(&y.frame) > FRAME_TOL {
        return Err(Error::FrameMismatch);
    }
    Ok(TotalElement {
        a: HarmonicClass::new(&x.a.rep().add(y.a.rep())),
        c: HarmonicClass::new(&x.c.rep().add(y.c.rep())),
        frame: x.frame,
        rho: x.rho.min(y.rho),
    })
}

/// `([a_x], [c_x], (i, j))`.
pub fn deriv_total(x: &TotalElement) -> TotalElement {
    TotalElement {
        a: HarmonicClass::new(&x.a.rep().x_partial()),
        c: HarmonicClass::new(&x.c.rep().x_partial()),
        frame: x.frame,
        rho: x.rho,
    }
}

/// `([a], [c], (u i ū, u j ū))`.
pub fn rotate_total(u: &UnitQuaternion, x: &TotalElement) -> TotalElement {
    TotalElement {
        a: x.a.clone(),
        c: x.c.clone(),
        frame: rotate_frame(u, &x.frame),
        rho: x.rho,
    }
}

/// The fiber over `[f]` sampled at the given frames.
pub fn fiber_of(fcl: &BaseClass, frames: &[Frame]) -> Vec<TotalElement> {
    frames.iter().map(|fr| section(fr, fcl)).collect()
}

/// Checks `P(R_u(A)) = [P_{uiū,ujū}[u Q_{i,j}[P(A)] ū]]` pointwise.
///
/// The right side is evaluated by sampling the rotated slice function
/// `w ↦ u·f(ū w u)·ū` and extending it with the extension formula; both sides
/// are compared after subtracting their value at the origin.
pub fn rotation_identity_residual(
    u: &UnitQuaternion,
    x: &TotalElement,
    points: &[Quaternion],
) -> Result<f64> {
    let lhs = project(&rotate_total(u, x));
    let f = project(x);
    let rotated = rotate_frame(u, &x.frame);
    let uc = u.conj();
    let slice_fn = |w: Complex64| -> Quaternion {
        let q = rotate(&uc, rotated.i().embed(w));
        rotate(u, f.rep().eval_unchecked(q))
    };
    let extend = |q: Quaternion| -> Quaternion {
        let (xr, y, unit) = q.slice_coordinates();
        match unit {
            None => slice_fn(Complex64::new(xr, 0.0)),
            Some(iq) => {
                let ii = iq.as_quaternion() * rotated.i().as_quaternion();
                let gm = slice_fn(Complex64::new(xr, -y));
                let gp = slice_fn(Complex64::new(xr, y));
                ((Quaternion::ONE + ii) * gm + (Quaternion::ONE - ii) * gp) * 0.5
            }
        }
    };
    let rhs0 = extend(Quaternion::ZERO);
    let lhs0 = lhs.rep().eval(Quaternion::ZERO)?;
    let mut worst: f64 = 0.0;
    for q in points {
        let l = lhs.rep().eval(*q)? - lhs0;
        let r = extend(*q) - rhs0;
        worst = worst.max(l.distance(&r));
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quat::ImaginaryUnit;

    fn series(coeffs: Vec<Quaternion>) -> QPowerSeries {
        QPowerSeries::new(1.0, coeffs).unwrap()
    }

    fn element(a: HarmonicPoly, c: HarmonicPoly) -> TotalElement {
        TotalElement::new(&a, &c, Frame::standard(), 1.0).unwrap()
    }

    #[test]
    fn project_examples() {
        let zero = HarmonicPoly::constant(0.0);
        let p = project(&element(HarmonicPoly::re_power(1), zero.clone()));
        assert_eq!(p.rep().coeffs(), &[Quaternion::ZERO, Quaternion::ONE]);
        let p = project(&element(zero.clone(), HarmonicPoly::re_power(1)));
        assert_eq!(p.rep().coeffs(), &[Quaternion::ZERO, Quaternion::E2]);
        let p = project(&element(zero.clone(), zero));
        assert!(p.rep().coeffs().iter().all(|c| *c == Quaternion::ZERO));
    }

    #[test]
    fn trivialize_examples() {
        let id = BaseClass::new(&series(vec![Quaternion::ZERO, Quaternion::ONE]));
        let t = trivialize(&UnitQuaternion::IDENTITY, &id, &Frame::standard());
        assert_eq!(t.a, HarmonicClass::new(&HarmonicPoly::re_power(1)));
        assert_eq!(t.c, HarmonicClass::zero());
        assert_eq!(t.frame, Frame::standard());

        let u = UnitQuaternion::normalize(Quaternion::new(0.3, -0.4, 0.5, 0.1)).unwrap();
        let zero = BaseClass::new(&series(vec![Quaternion::ZERO]));
        let t = trivialize(&u, &zero, &Frame::standard());
        assert_eq!(t.a.rep().value(0.2, 0.3), 0.0);
        assert_eq!(t.frame, rotate_frame(&u, &Frame::standard()));

        let f = BaseClass::new(&series(vec![
            Quaternion::new(1.0, 2.0, 3.0, 4.0),
            Quaternion::new(0.5, -0.2, 0.1, 0.9),
            Quaternion::new(-0.3, 0.7, 0.2, -0.6),
        ]));
        let back = project(&trivialize(&u, &f, &Frame::standard()));
        assert!(back.distance(&f) <= 1e-10);
    }

    #[test]
    fn section_examples() {
        let sq = BaseClass::new(&series(vec![
            Quaternion::ZERO,
            Quaternion::ZERO,
            Quaternion::ONE,
        ]));
        let s = section(&Frame::standard(), &sq);
        assert_eq!(s.a, HarmonicClass::new(&HarmonicPoly::re_power(2)));
        let zero = BaseClass::new(&series(vec![Quaternion::ZERO]));
        let s = section(&Frame::standard(), &zero);
        assert_eq!(s.a, HarmonicClass::zero());
        assert_eq!(s.c, HarmonicClass::zero());
    }

    #[test]
    fn compatibility_examples() {
        let f = BaseClass::new(&series(vec![
            Quaternion::ZERO,
            Quaternion::new(0.5, -0.2, 0.1, 0.9),
            Quaternion::new(-0.3, 0.7, 0.2, -0.6),
        ]));
        let u = UnitQuaternion::normalize(Quaternion::new(0.3, -0.4, 0.5, 0.1)).unwrap();
        let fr = Frame::standard();
        assert_eq!(compatibility_residual(&u, &u, &f, &fr), 0.0);
        let lhs = trivialize(&u, &f, &fr);
        let rhs = trivialize(&UnitQuaternion::IDENTITY, &f, &rotate_frame(&u, &fr));
        assert!(lhs.distance(&rhs) <= 1e-15);
    }

    #[test]
    fn operations() {
        let a = element(HarmonicPoly::re_power(2), HarmonicPoly::re_power(1));
        let zero = element(HarmonicPoly::constant(0.0), HarmonicPoly::constant(0.0));
        assert_eq!(add(&a, &zero).unwrap().a, a.a);
        let doubled = add(&a, &a).unwrap();
        assert_eq!(
            doubled.a,
            HarmonicClass::new(&HarmonicPoly::re_power(2).scale(2.0))
        );
        let other = TotalElement::new(
            &HarmonicPoly::re_power(1),
            &HarmonicPoly::constant(0.0),
            Frame::new(ImaginaryUnit::E2, ImaginaryUnit::E3).unwrap(),
            1.0,
        )
        .unwrap();
        assert_eq!(add(&a, &other), Err(Error::FrameMismatch));

        let d = deriv_total(&element(
            HarmonicPoly::re_power(2),
            HarmonicPoly::constant(3.0),
        ));
        assert_eq!(
            d.a,
            HarmonicClass::new(&HarmonicPoly::re_power(1).scale(2.0))
        );
        assert_eq!(d.c, HarmonicClass::zero());

        let u = UnitQuaternion::normalize(Quaternion::new(0.3, -0.4, 0.5, 0.1)).unwrap();
        assert_eq!(rotate_total(&UnitQuaternion::IDENTITY, &a), a);
        let back = rotate_total(&u.conj(), &rotate_total(&u, &a));
        assert!(back.distance(&a) <= 1e-12);
    }

    #[test]
    fn rotation_identity_holds() {
        let a = element(
            HarmonicPoly::new(vec![
                Complex64::new(0.0, 0.0),
                Complex64::new(0.4, -0.3),
                Complex64::new(0.2, 0.5),
            ]),
            HarmonicPoly::new(vec![Complex64::new(0.0, 0.0), Complex64::new(-0.1, 0.8)]),
        );
        let u = UnitQuaternion::normalize(Quaternion::new(0.3, -0.4, 0.5, 0.1)).unwrap();
        let pts = [
            Quaternion::new(0.1, 0.2, -0.3, 0.1),
            Quaternion::new(-0.5, 0.1, 0.2, 0.3),
            Quaternion::real(0.4),
        ];
        assert!(rotation_identity_residual(&u, &a, &pts).unwrap() <= 1e-12);
    }

    #[test]
    fn intrinsic_fibers_have_zero_c() {
        let f = BaseClass::new(&series(vec![
            Quaternion::ZERO,
            Quaternion::real(2.0),
            Quaternion::real(-0.5),
        ]));
        let frames = crate::sampling::fibonacci_frames(12);
        for el in fiber_of(&f, &frames) {
            assert!(el.c.rep().coeffs().iter().all(|c| c.norm() < 1e-15));
            assert!(project(&el).distance(&f) <= 1e-10);
        }
    }

    #[test]
    fn normalization_is_idempotent() {
        let h = HarmonicPoly::new(vec![Complex64::new(2.0, 1.0), Complex64::new(0.5, 0.5)]);
        let once = HarmonicClass::new(&h);
        assert_eq!(HarmonicClass::new(once.rep()), once);
        let f = series(vec![Quaternion::new(1.0, 2.0, 3.0, 4.0), Quaternion::E1]);
        let once = BaseClass::new(&f);
        assert_eq!(BaseClass::new(once.rep()), once);
    }

    #[test]
    fn total_element_json() {
        let el = element(HarmonicPoly::re_power(1), HarmonicPoly::constant(0.0));
        let s = serde_json::to_string(&el).unwrap();
        let back: TotalElement = serde_json::from_str(&s).unwrap();
        assert_eq!(back, el);
        let parsed: TotalElement = serde_json::from_str(
            r#"{"a":[[5,0],[1,0]],"c":[[0,0]],"frame":{"i":[1,0,0],"j":[0,1,0]}}"#,
        )
        .unwrap();
        assert_eq!(parsed.a, HarmonicClass::new(&HarmonicPoly::re_power(1)));
        assert_eq!(parsed.rho, 1.0);
    }
}
