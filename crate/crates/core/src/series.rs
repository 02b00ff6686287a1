//! Slice regular functions on a ball `B⁴(0, ρ)` as truncated power series
//! `f(q) = Σ qⁿ aₙ` with quaternion coefficients on the right.
//!
//! Restricting to a slice `C(i)` and splitting each coefficient in the basis
//! `{1, i, j, ij}` gives two holomorphic functions `f₁, f₂` with
//! `f|C(i) = f₁ + f₂ j`. Extension back to `H` is the operator
//!
//! ```text
//! P[g](x + I y) = ½ [ (1 + I i) g(x − y i) + (1 − I i) g(x + y i) ]
//! ```
//!
//! Everything is exact at coefficient level; point evaluation is only used
//! for the identities that compare the two routes.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::cpoly;
use crate::error::{Error, Result};
use crate::harmonic::HarmonicPoly;
use crate::quat::{Frame, ImaginaryUnit, Quaternion};

/// Largest truncation degree an operation may produce.
pub const MAX_DEGREE: usize = 64;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawSeries", into = "RawSeries")]
pub struct QPowerSeries {
    radius: f64,
    coeffs: Vec<Quaternion>,
}

#[derive(Serialize, Deserialize)]
struct RawSeries {
    radius: f64,
    coeffs: Vec<Quaternion>,
}

impl TryFrom<RawSeries> for QPowerSeries {
    type Error = Error;
    fn try_from(raw: RawSeries) -> Result<Self> {
        QPowerSeries::new(raw.radius, raw.coeffs)
    }
}

impl From<QPowerSeries> for RawSeries {
    fn from(s: QPowerSeries) -> Self {
        RawSeries {
            radius: s.radius,
            coeffs: s.coeffs,
        }
    }
}

impl QPowerSeries {
    pub fn new(radius: f64, coeffs: Vec<Quaternion>) -> Result<Self> {
        if !(radius > 0.0) || !radius.is_finite() {
            return Err(Error::InvalidSeries(format!(
                "radius must be positive, got {radius}"
            )));
        }
        if coeffs.is_empty() {
            return Err(Error::InvalidSeries("coefficient list is empty".into()));
        }
        if coeffs.len() - 1 > MAX_DEGREE {
            return Err(Error::DegreeCap {
                degree: coeffs.len() - 1,
                cap: MAX_DEGREE,
            });
        }
        if coeffs.iter().any(|c| !c.is_finite()) {
            return Err(Error::InvalidSeries("non-finite coefficient".into()));
        }
        Ok(QPowerSeries { radius, coeffs })
    }

    pub fn zero(radius: f64) -> Result<Self> {
        QPowerSeries::new(radius, vec![Quaternion::ZERO])
    }

    #[inline]
    pub fn radius(&self) -> f64 {
        self.radius
    }

    #[inline]
    pub fn coeffs(&self) -> &[Quaternion] {
        &self.coeffs
    }

    /// Truncation degree `N`.
    #[inline]
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient `aₙ`, zero past the truncation degree.
    pub fn coeff(&self, n: usize) -> Quaternion {
        self.coeffs.get(n).copied().unwrap_or(Quaternion::ZERO)
    }

    /// Evaluates `Σ qⁿ aₙ` by Horner's scheme, powers of `q` on the left.
    pub fn eval(&self, q: Quaternion) -> Result<Quaternion> {
        let norm = q.norm();
        if !(norm < self.radius) {
            return Err(Error::OutOfDomain {
                norm,
                radius: self.radius,
            });
        }
        Ok(self.eval_unchecked(q))
    }

    pub(crate) fn eval_unchecked(&self, q: Quaternion) -> Quaternion {
        self.coeffs
            .iter()
            .rev()
            .fold(Quaternion::ZERO, |acc, a| q * acc + *a)
    }

    /// Splitting with respect to `fr`: `aₙ = f1ₙ + f2ₙ j` with `f1ₙ, f2ₙ ∈ C(i)`.
    pub fn split(&self, fr: &Frame) -> SlicePair {
        let (f1, f2) = self.coeffs.iter().map(|a| fr.split(*a)).unzip();
        SlicePair {
            frame: *fr,
            radius: self.radius,
            f1,
            f2,
        }
    }

    /// Cullen derivative: coefficients `(n + 1) aₙ₊₁`.
    pub fn derivative(&self) -> QPowerSeries {
        let coeffs = if self.coeffs.len() <= 1 {
            vec![Quaternion::ZERO]
        } else {
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(n, a)| *a * n as f64)
                .collect()
        };
        QPowerSeries {
            radius: self.radius,
            coeffs,
        }
    }

    /// ⁎-product: `cₙ = Σ aₖ bₙ₋ₖ`, on the smaller of the two balls.
    pub fn star_product(&self, other: &QPowerSeries) -> Result<QPowerSeries> {
        let degree = self.degree() + other.degree();
        if degree > MAX_DEGREE {
            return Err(Error::DegreeCap {
                degree,
                cap: MAX_DEGREE,
            });
        }
        let mut coeffs = vec![Quaternion::ZERO; degree + 1];
        for (k, a) in self.coeffs.iter().enumerate() {
            for (m, b) in other.coeffs.iter().enumerate() {
                coeffs[k + m] += *a * *b;
            }
        }
        QPowerSeries::new(self.radius.min(other.radius), coeffs)
    }

    /// •-product relative to `fr`: `P[f₁g₁ + f₂g₂ j]`.
    pub fn bullet_product(&self, other: &QPowerSeries, fr: &Frame) -> Result<QPowerSeries> {
        let degree = self.degree() + other.degree();
        if degree > MAX_DEGREE {
            return Err(Error::DegreeCap {
                degree,
                cap: MAX_DEGREE,
            });
        }
        let f = self.split(fr);
        let g = other.split(fr);
        let pair = SlicePair {
            frame: *fr,
            radius: self.radius.min(other.radius),
            f1: cpoly::mul(&f.f1, &g.f1),
            f2: cpoly::mul(&f.f2, &g.f2),
        };
        pair.reassemble()
    }

    /// Real components `D₁..D₄` of the restriction to the slice of `fr`.
    pub fn d_components(&self, fr: &Frame) -> DComponents {
        let pair = self.split(fr);
        let minus_i = Complex64::new(0.0, -1.0);
        DComponents {
            frame: *fr,
            d1: HarmonicPoly::new(pair.f1.clone()),
            d2: HarmonicPoly::new(pair.f1.iter().map(|c| c * minus_i).collect()),
            d3: HarmonicPoly::new(pair.f2.clone()),
            d4: HarmonicPoly::new(pair.f2.iter().map(|c| c * minus_i).collect()),
        }
    }

    /// Largest coefficient distance to `other` (missing coefficients are zero).
    pub fn coeff_distance(&self, other: &QPowerSeries) -> f64 {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n)
            .map(|k| self.coeff(k).distance(&other.coeff(k)))
            .fold(0.0, f64::max)
    }
}

/// Restriction of a series to the slice of a frame, `f|C(i) = f₁ + f₂ j`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SlicePair {
    pub frame: Frame,
    pub radius: f64,
    pub f1: Vec<Complex64>,
    pub f2: Vec<Complex64>,
}

impl SlicePair {
    /// `aₙ = f1ₙ + f2ₙ j`.
    pub fn reassemble(&self) -> Result<QPowerSeries> {
        let n = self.f1.len().max(self.f2.len()).max(1);
        let zero = Complex64::new(0.0, 0.0);
        let coeffs = (0..n)
            .map(|k| {
                let a = self.f1.get(k).copied().unwrap_or(zero);
                let b = self.f2.get(k).copied().unwrap_or(zero);
                self.frame.assemble(a, b)
            })
            .collect();
        QPowerSeries::new(self.radius, coeffs)
    }

    /// `g(z) = f₁(z) + f₂(z) j` at a point `z` of `C(i)`.
    pub fn eval_slice(&self, z: Complex64) -> Quaternion {
        self.frame
            .assemble(cpoly::eval(&self.f1, z), cpoly::eval(&self.f2, z))
    }

    /// The extension operator `P_{i,j}[g]` evaluated at `q`.
    pub fn extend(&self, q: Quaternion) -> Result<Quaternion> {
        let norm = q.norm();
        if !(norm < self.radius) {
            return Err(Error::OutOfDomain {
                norm,
                radius: self.radius,
            });
        }
        let (x, y, unit) = q.slice_coordinates();
        let unit = match unit {
            // Near-real point: y = 0 and both terms coincide.
            None => return Ok(self.eval_slice(Complex64::new(x, 0.0))),
            Some(u) => u,
        };
        let i = self.frame.i().as_quaternion();
        let ii = unit.as_quaternion() * i;
        let g_minus = self.eval_slice(Complex64::new(x, -y));
        let g_plus = self.eval_slice(Complex64::new(x, y));
        Ok(((Quaternion::ONE + ii) * g_minus + (Quaternion::ONE - ii) * g_plus) * 0.5)
    }
}

/// Real components of the slice restriction:
/// `Q[f] = D₁ + D₂ i + D₃ j + D₄ ij`, each `Dₖ` the real part of a
/// complex polynomial in `z = x + y i`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DComponents {
    pub frame: Frame,
    pub d1: HarmonicPoly,
    pub d2: HarmonicPoly,
    pub d3: HarmonicPoly,
    pub d4: HarmonicPoly,
}

impl DComponents {
    /// `D₁ + D₂ i + D₃ j + D₄ ij` at `(x, y)`.
    pub fn recombine(&self, x: f64, y: f64) -> Quaternion {
        let [one, i, j, ij] = self.frame.basis();
        one * self.d1.value(x, y)
            + i * self.d2.value(x, y)
            + j * self.d3.value(x, y)
            + ij * self.d4.value(x, y)
    }
}

/// Residuals of the two slice identities at a point of `C(i)`:
/// `plus = ‖(f + i f i) − 2 f₂ j‖` and `minus = ‖(f − i f i) − 2 f₁‖`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SliceIdentityResidual {
    pub plus: f64,
    pub minus: f64,
}

pub fn slice_identities_check(
    f: &QPowerSeries,
    fr: &Frame,
    z: Complex64,
) -> Result<SliceIdentityResidual> {
    let i = fr.i();
    let value = f.eval(i.embed(z))?;
    let iq = i.as_quaternion();
    let ifi = iq * value * iq;
    let pair = f.split(fr);
    let f1 = i.embed(cpoly::eval(&pair.f1, z));
    let f2j = i.embed(cpoly::eval(&pair.f2, z)) * fr.j().as_quaternion();
    Ok(SliceIdentityResidual {
        plus: (value + ifi - f2j * 2.0).norm(),
        minus: (value - ifi - f1 * 2.0).norm(),
    })
}

/// Reconstructs `f(x + target·y)` from the two values `f(x ± i y)` on the slice `C(i)`.
pub fn representation(
    value_plus: Quaternion,
    value_minus: Quaternion,
    i: &ImaginaryUnit,
    target: &ImaginaryUnit,
) -> Quaternion {
    let ti = target.as_quaternion() * i.as_quaternion();
    (value_plus + value_minus) * 0.5 + ti * (value_minus - value_plus) * 0.5
}

/// Evaluates [`representation`] for a series, sampling it on `C(i)`.
pub fn represent_from_slice(
    f: &QPowerSeries,
    i: &ImaginaryUnit,
    target: &ImaginaryUnit,
    x: f64,
    y: f64,
) -> Result<Quaternion> {
    let plus = f.eval(i.embed(Complex64::new(x, y)))?;
    let minus = f.eval(i.embed(Complex64::new(x, -y)))?;
    Ok(representation(plus, minus, i, target))
}

/// `max ‖P[Q[f]](q) − f(q)‖` over the given points.
pub fn roundtrip_pq(f: &QPowerSeries, fr: &Frame, points: &[Quaternion]) -> Result<f64> {
    let pair = f.split(fr);
    let mut worst: f64 = 0.0;
    for q in points {
        let direct = f.eval(*q)?;
        worst = worst.max(pair.extend(*q)?.distance(&direct));
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quat::{imaginary_unit_of, ImaginaryUnit};

    fn series(coeffs: Vec<Quaternion>) -> QPowerSeries {
        QPowerSeries::new(1.0, coeffs).unwrap()
    }

    fn identity_map() -> QPowerSeries {
        series(vec![Quaternion::ZERO, Quaternion::ONE])
    }

    #[test]
    fn eval_examples() {
        let id2 = QPowerSeries::new(2.0, vec![Quaternion::ZERO, Quaternion::ONE]).unwrap();
        assert_eq!(id2.eval(Quaternion::E2).unwrap(), Quaternion::E2);
        // e2·e2·e1 = −e1
        let f = series(vec![Quaternion::ONE, Quaternion::ZERO, Quaternion::E1]);
        assert_eq!(
            f.eval(Quaternion::E2 * 0.5).unwrap(),
            Quaternion::ONE - Quaternion::E1 * 0.25
        );
        let f = QPowerSeries::new(2.0, vec![Quaternion::ONE, Quaternion::ZERO, Quaternion::E1])
            .unwrap();
        assert_eq!(
            f.eval(Quaternion::E2).unwrap(),
            Quaternion::ONE - Quaternion::E1
        );
        assert!(matches!(
            identity_map().eval(Quaternion::E3),
            Err(Error::OutOfDomain { .. })
        ));
    }

    #[test]
    fn split_examples() {
        let fr = Frame::standard();
        let p = series(vec![Quaternion::E1]).split(&fr);
        assert_eq!(p.f1, vec![Complex64::new(0.0, 1.0)]);
        assert_eq!(p.f2, vec![Complex64::new(0.0, 0.0)]);
        let p = series(vec![Quaternion::E3]).split(&fr);
        assert_eq!(p.f1, vec![Complex64::new(0.0, 0.0)]);
        assert_eq!(p.f2, vec![Complex64::new(0.0, 1.0)]);
    }

    #[test]
    fn extend_examples() {
        let fr = Frame::standard();
        let g = identity_map().split(&fr);
        let v = g.extend(Quaternion::E2 * 0.999).unwrap();
        assert!(v.distance(&(Quaternion::E2 * 0.999)) < 1e-15);
        let c = Quaternion::new(0.3, -0.1, 0.7, 0.2);
        let g = series(vec![c]).split(&fr);
        assert!(
            g.extend(Quaternion::new(0.1, 0.2, -0.3, 0.4))
                .unwrap()
                .distance(&c)
                < 1e-15
        );
        let f = series(vec![Quaternion::E2, Quaternion::E3, Quaternion::ONE]);
        let g = f.split(&fr);
        let x = 0.4;
        let direct = g.eval_slice(Complex64::new(x, 0.0));
        assert!(g.extend(Quaternion::real(x)).unwrap().distance(&direct) < 1e-15);
    }

    #[test]
    fn representation_examples() {
        let f = QPowerSeries::new(2.0, vec![Quaternion::ZERO, Quaternion::ONE]).unwrap();
        let v = represent_from_slice(&f, &ImaginaryUnit::E1, &ImaginaryUnit::E2, 0.0, 1.0).unwrap();
        assert!(v.distance(&Quaternion::E2) < 1e-15);
        let g = series(vec![Quaternion::E2, Quaternion::E3, Quaternion::E1]);
        let i = imaginary_unit_of(Quaternion::new(0.0, 1.0, 2.0, -1.0)).unwrap();
        let direct = g.eval(i.embed(Complex64::new(0.2, 0.3))).unwrap();
        let v = represent_from_slice(&g, &i, &i, 0.2, 0.3).unwrap();
        assert!(v.distance(&direct) < 1e-15);
        let c = Quaternion::new(1.0, 2.0, 3.0, 4.0);
        let v = representation(c, c, &i, &ImaginaryUnit::E3);
        assert_eq!(v, c);
    }

    #[test]
    fn d_components_examples() {
        let fr = Frame::standard();
        let d = series(vec![Quaternion::E2]).d_components(&fr);
        assert_eq!(d.d3.value(0.3, 0.4), 1.0);
        for h in [&d.d1, &d.d2, &d.d4] {
            assert_eq!(h.value(0.3, 0.4), 0.0);
        }
        let real = series(vec![
            Quaternion::real(1.0),
            Quaternion::real(-2.0),
            Quaternion::real(0.5),
        ]);
        let d = real.d_components(&fr);
        assert_eq!(d.d3.value(0.1, 0.7), 0.0);
        assert_eq!(d.d4.value(0.1, 0.7), 0.0);
        assert!(d.d2.value(0.1, 0.7).abs() > 0.0);
    }

    #[test]
    fn slice_identity_assignment() {
        let fr = Frame::standard();
        let j = series(vec![Quaternion::E2]);
        let z = Complex64::new(0.2, 0.1);
        let r = slice_identities_check(&j, &fr, z).unwrap();
        assert_eq!((r.plus, r.minus), (0.0, 0.0));
        // e1·e2·e1 = e2, so f + ifi = 2j for f ≡ j.
        let iq = Quaternion::E1;
        assert_eq!(
            Quaternion::E2 + iq * Quaternion::E2 * iq,
            Quaternion::E2 * 2.0
        );
        let one = series(vec![Quaternion::ONE]);
        assert_eq!(
            Quaternion::ONE - iq * Quaternion::ONE * iq,
            Quaternion::real(2.0)
        );
        let r = slice_identities_check(&one, &fr, z).unwrap();
        assert_eq!((r.plus, r.minus), (0.0, 0.0));
    }

    #[test]
    fn star_product_examples() {
        let f = series(vec![Quaternion::ZERO, Quaternion::E2]);
        let g = series(vec![Quaternion::ZERO, Quaternion::E1]);
        assert_eq!(
            f.star_product(&g).unwrap().coeffs(),
            &[Quaternion::ZERO, Quaternion::ZERO, -Quaternion::E3]
        );
        assert_eq!(
            g.star_product(&f).unwrap().coeffs(),
            &[Quaternion::ZERO, Quaternion::ZERO, Quaternion::E3]
        );
        let h = series(vec![Quaternion::new(1.0, 2.0, 3.0, 4.0), Quaternion::E3]);
        assert_eq!(h.star_product(&series(vec![Quaternion::ONE])).unwrap(), h);
        let big = series(vec![Quaternion::ONE; 40]);
        assert!(matches!(
            big.star_product(&big),
            Err(Error::DegreeCap { .. })
        ));
    }

    #[test]
    fn bullet_product_examples() {
        let fr = Frame::standard();
        let f = series(vec![
            -Quaternion::ONE - Quaternion::E2,
            Quaternion::E2,
            Quaternion::ONE,
        ]);
        let h = series(vec![Quaternion::ONE + Quaternion::E2 * 7.0]);
        let g = f.bullet_product(&h, &fr).unwrap();
        let expected = [
            -Quaternion::ONE - Quaternion::E2 * 7.0,
            Quaternion::E2 * 7.0,
            Quaternion::ONE,
        ];
        assert_eq!(g.coeffs(), &expected);
        let unit_j = series(vec![Quaternion::ONE + Quaternion::E2]);
        assert_eq!(f.bullet_product(&unit_j, &fr).unwrap(), f);
        let intrinsic = series(vec![Quaternion::real(0.5), Quaternion::real(-1.0)]);
        let h = series(vec![Quaternion::ONE + Quaternion::E2 * 3.0]);
        assert_eq!(intrinsic.bullet_product(&h, &fr).unwrap(), intrinsic);
    }

    #[test]
    fn derivative_examples() {
        let f = series(vec![
            Quaternion::real(5.0),
            Quaternion::ZERO,
            Quaternion::ONE,
        ]);
        assert_eq!(
            f.derivative().coeffs(),
            &[Quaternion::ZERO, Quaternion::real(2.0)]
        );
        let c = series(vec![Quaternion::E3]);
        assert_eq!(c.derivative().coeffs(), &[Quaternion::ZERO]);
    }

    #[test]
    fn roundtrip_of_square() {
        let f = series(vec![Quaternion::ZERO, Quaternion::ZERO, Quaternion::ONE]);
        let pts = [
            Quaternion::new(0.1, 0.2, 0.3, 0.4),
            Quaternion::new(-0.5, 0.0, 0.6, 0.0),
            Quaternion::real(0.3),
        ];
        assert!(roundtrip_pq(&f, &Frame::standard(), &pts).unwrap() <= 1e-12);
        let c = series(vec![Quaternion::new(1.0, 2.0, 3.0, 4.0)]);
        assert!(roundtrip_pq(&c, &Frame::standard(), &pts).unwrap() <= 4.0 * f64::EPSILON);
    }

    #[test]
    fn json_shape() {
        let f: QPowerSeries =
            serde_json::from_str(r#"{"radius":1,"coeffs":[[0,0,0,0],[1,0,0,0]]}"#).unwrap();
        assert_eq!(f, identity_map());
        assert!(
            serde_json::from_str::<QPowerSeries>(r#"{"radius":0,"coeffs":[[0,0,0,0]]}"#).is_err()
        );
    }
}
