//! Seeded random instances and deterministic sphere grids.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::harmonic::HarmonicPoly;
use crate::quat::{Frame, ImaginaryUnit, Quaternion, UnitQuaternion};
use crate::series::QPowerSeries;
use crate::zeros::SlicePolynomial;

pub type SeededRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Components uniform in `[-1, 1]`.
pub fn quaternion<R: Rng>(rng: &mut R) -> Quaternion {
    Quaternion::new(
        rng.gen_range(-1.0..1.0),
        rng.gen_range(-1.0..1.0),
        rng.gen_range(-1.0..1.0),
        rng.gen_range(-1.0..1.0),
    )
}

pub fn complex<R: Rng>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
}

/// Uniform on `S³`.
pub fn unit_quaternion<R: Rng>(rng: &mut R) -> UnitQuaternion {
    loop {
        let q = Quaternion::new(
            rng.sample(StandardNormal),
            rng.sample(StandardNormal),
            rng.sample(StandardNormal),
            rng.sample(StandardNormal),
        );
        if q.norm() > 1e-6 {
            return UnitQuaternion::normalize(q).expect("nonzero");
        }
    }
}

/// Uniform on `S²`.
pub fn imaginary_unit<R: Rng>(rng: &mut R) -> ImaginaryUnit {
    loop {
        let v = [
            rng.sample(StandardNormal),
            rng.sample(StandardNormal),
            rng.sample(StandardNormal),
        ];
        if let Ok(u) = ImaginaryUnit::normalize(v) {
            return u;
        }
    }
}

/// A random frame: the standard frame under a random rotation.
pub fn frame<R: Rng>(rng: &mut R) -> Frame {
    let u = unit_quaternion(rng);
    crate::quat::rotate_frame(&u, &Frame::standard())
}

/// Uniform in the ball of radius `r` in `R⁴`.
pub fn point_in_ball<R: Rng>(rng: &mut R, r: f64) -> Quaternion {
    loop {
        let q = quaternion(rng);
        if q.norm() <= 1.0 {
            return q * r;
        }
    }
}

/// Series of the given degree on `B⁴(0, radius)` with `aₙ` scaled by
/// `radius⁻ⁿ`, so values stay of order one on the ball.
pub fn series<R: Rng>(rng: &mut R, degree: usize, radius: f64) -> QPowerSeries {
    let coeffs = (0..=degree)
        .map(|n| quaternion(rng) * radius.powi(-(n as i32)))
        .collect();
    QPowerSeries::new(radius, coeffs).expect("valid random series")
}

/// Series with real coefficients.
pub fn intrinsic_series<R: Rng>(rng: &mut R, degree: usize, radius: f64) -> QPowerSeries {
    let coeffs = (0..=degree)
        .map(|n| Quaternion::real(rng.gen_range(-1.0..1.0) * radius.powi(-(n as i32))))
        .collect();
    QPowerSeries::new(radius, coeffs).expect("valid random series")
}

pub fn harmonic<R: Rng>(rng: &mut R, degree: usize) -> HarmonicPoly {
    HarmonicPoly::new((0..=degree).map(|_| complex(rng)).collect())
}

/// Monic polynomial with random quaternion lower coefficients.
pub fn slice_polynomial<R: Rng>(rng: &mut R, degree: usize) -> SlicePolynomial {
    let coeffs = (0..degree).map(|_| quaternion(rng)).collect();
    SlicePolynomial::new(coeffs).expect("degree >= 1")
}

/// Monic polynomial with real coefficients.
pub fn real_slice_polynomial<R: Rng>(rng: &mut R, degree: usize) -> SlicePolynomial {
    let coeffs = (0..degree)
        .map(|_| Quaternion::real(rng.gen_range(-1.0..1.0)))
        .collect();
    SlicePolynomial::new(coeffs).expect("degree >= 1")
}

/// `m` points of `S²` on a Fibonacci spiral.
pub fn fibonacci_sphere(m: usize) -> Vec<ImaginaryUnit> {
    let golden = std::f64::consts::PI * (3.0 - 5f64.sqrt());
    (0..m)
        .map(|k| {
            let z = 1.0 - (2.0 * k as f64 + 1.0) / m as f64;
            let r = (1.0 - z * z).max(0.0).sqrt();
            let phi = golden * k as f64;
            ImaginaryUnit::normalize([r * phi.cos(), r * phi.sin(), z]).expect("unit vector")
        })
        .collect()
}

/// Fibonacci grid for `i`, each completed to a frame by a fixed rule.
pub fn fibonacci_frames(m: usize) -> Vec<Frame> {
    fibonacci_sphere(m)
        .into_iter()
        .map(Frame::completing)
        .collect()
}
