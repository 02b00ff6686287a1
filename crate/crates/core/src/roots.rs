//! Durand–Kerner simultaneous iteration for complex polynomial roots.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::cpoly;
use crate::error::{Error, Result};

pub const MAX_ITERATIONS: usize = 500;
/// Stop once every update is below this (relative to `1 + |z|`).
pub const STEP_TOL: f64 = 1e-13;
/// Roots closer than this are merged into one root with multiplicity.
pub const CLUSTER_RADIUS: f64 = 1e-7;

/// Irrational offset so that no initial guess sits on a symmetry axis.
const ANGLE_OFFSET: f64 = 0.4;

/// A root and its multiplicity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(from = "[f64; 3]", into = "[f64; 3]")]
pub struct Root {
    pub z: Complex64,
    pub mult: usize,
}

impl From<[f64; 3]> for Root {
    fn from(a: [f64; 3]) -> Self {
        Root {
            z: Complex64::new(a[0], a[1]),
            mult: a[2].max(1.0) as usize,
        }
    }
}

impl From<Root> for [f64; 3] {
    fn from(r: Root) -> Self {
        [r.z.re, r.z.im, r.mult as f64]
    }
}

/// All roots of `Σ cₙ zⁿ` (ascending coefficients) with multiplicities,
/// sorted by real then imaginary part.
pub fn complex_roots(coeffs: &[Complex64]) -> Result<Vec<Root>> {
    let raw = raw_roots(coeffs)?;
    Ok(cluster(&raw))
}

/// Roots repeated according to multiplicity, without clustering.
pub fn raw_roots(coeffs: &[Complex64]) -> Result<Vec<Complex64>> {
    if coeffs.len() < 2 {
        return Err(Error::InvalidInput(
            "polynomial degree must be at least 1".into(),
        ));
    }
    let lead = coeffs[coeffs.len() - 1];
    if lead.norm() == 0.0 || !lead.is_finite() {
        return Err(Error::DegenerateLeadingCoefficient);
    }
    let monic: Vec<Complex64> = coeffs.iter().map(|c| c / lead).collect();
    let n = monic.len() - 1;
    if n == 1 {
        return Ok(vec![-monic[0]]);
    }

    let radius = 1.0 + cpoly::max_abs(&monic[..n]);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let angle = 2.0 * std::f64::consts::PI * k as f64 / n as f64 + ANGLE_OFFSET;
            Complex64::from_polar(radius, angle)
        })
        .collect();

    for _ in 0..MAX_ITERATIONS {
        let mut converged = true;
        for k in 0..n {
            let zk = z[k];
            let mut denom = Complex64::new(1.0, 0.0);
            for (m, zm) in z.iter().enumerate() {
                if m != k {
                    denom *= zk - zm;
                }
            }
            if denom.norm() == 0.0 {
                // Coincident iterates: nudge apart and keep going.
                z[k] = zk + Complex64::new(1e-10, 1e-10) * (1.0 + zk.norm());
                converged = false;
                continue;
            }
            let step = cpoly::eval(&monic, zk) / denom;
            z[k] = zk - step;
            if step.norm() > STEP_TOL * (1.0 + zk.norm()) {
                converged = false;
            }
        }
        if converged {
            break;
        }
    }

    let deriv = cpoly::derivative(&monic);
    for zk in z.iter_mut() {
        *zk = polish(&monic, &deriv, *zk);
    }
    Ok(z)
}

/// A few guarded Newton steps; only improvements are kept.
fn polish(p: &[Complex64], dp: &[Complex64], z0: Complex64) -> Complex64 {
    let mut z = z0;
    let mut r = cpoly::eval(p, z).norm();
    for _ in 0..3 {
        let d = cpoly::eval(dp, z);
        if d.norm() == 0.0 || r == 0.0 {
            break;
        }
        let cand = z - cpoly::eval(p, z) / d;
        let rc = cpoly::eval(p, cand).norm();
        if rc < r && (cand - z).norm() < 1e-6 * (1.0 + z.norm()) {
            z = cand;
            r = rc;
        } else {
            break;
        }
    }
    z
}

/// Single-linkage clustering at [`CLUSTER_RADIUS`]; each cluster becomes its
/// centroid with the cluster size as multiplicity.
pub fn cluster(points: &[Complex64]) -> Vec<Root> {
    let n = points.len();
    let mut label: Vec<usize> = (0..n).collect();
    fn find(label: &mut [usize], mut a: usize) -> usize {
        while label[a] != a {
            label[a] = label[label[a]];
            a = label[a];
        }
        a
    }
    for a in 0..n {
        for b in (a + 1)..n {
            if (points[a] - points[b]).norm() <= CLUSTER_RADIUS {
                let (ra, rb) = (find(&mut label, a), find(&mut label, b));
                if ra != rb {
                    label[rb] = ra;
                }
            }
        }
    }
    let mut groups: Vec<(usize, Complex64, usize)> = Vec::new();
    for a in 0..n {
        let r = find(&mut label, a);
        match groups.iter_mut().find(|g| g.0 == r) {
            Some(g) => {
                g.1 += points[a];
                g.2 += 1;
            }
            None => groups.push((r, points[a], 1)),
        }
    }
    let mut roots: Vec<Root> = groups
        .into_iter()
        .map(|(_, sum, count)| Root {
            z: sum / count as f64,
            mult: count,
        })
        .collect();
    roots.sort_by(|a, b| a.z.re.total_cmp(&b.z.re).then(a.z.im.total_cmp(&b.z.im)));
    roots
}

/// Roots listed with repetition.
pub fn expand(roots: &[Root]) -> Vec<Complex64> {
    roots
        .iter()
        .flat_map(|r| std::iter::repeat_n(r.z, r.mult))
        .collect()
}

pub fn total_multiplicity(roots: &[Root]) -> usize {
    roots.iter().map(|r| r.mult).sum()
}

/// Hausdorff distance between two root multisets (as point sets).
pub fn root_set_distance(a: &[Root], b: &[Root]) -> f64 {
    let pa: Vec<[f64; 2]> = a.iter().map(|r| [r.z.re, r.z.im]).collect();
    let pb: Vec<[f64; 2]> = b.iter().map(|r| [r.z.re, r.z.im]).collect();
    crate::hull::hausdorff(&pa, &pb)
}

/// Multiset equality: same multiplicities, positions within `tol`.
pub fn same_multiset(a: &[Root], b: &[Root], tol: f64) -> bool {
    if a.len() != b.len() || total_multiplicity(a) != total_multiplicity(b) {
        return false;
    }
    let mut used = vec![false; b.len()];
    'outer: for ra in a {
        for (k, rb) in b.iter().enumerate() {
            if !used[k] && ra.mult == rb.mult && (ra.z - rb.z).norm() <= tol {
                used[k] = true;
                continue 'outer;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn re(v: &[f64]) -> Vec<Complex64> {
        v.iter().map(|x| Complex64::new(*x, 0.0)).collect()
    }

    #[test]
    fn difference_of_squares() {
        let r = complex_roots(&re(&[-1.0, 0.0, 1.0])).unwrap();
        assert_eq!(r.len(), 2);
        assert!((r[0].z + 1.0).norm() < 1e-14 && (r[1].z - 1.0).norm() < 1e-14);
        assert!(r.iter().all(|x| x.mult == 1));
    }

    #[test]
    fn expanded_cubic() {
        let p = cpoly::from_roots(&re(&[1.0, 2.0, 3.0]));
        let r = complex_roots(&p).unwrap();
        for (k, root) in r.iter().enumerate() {
            assert!((root.z - (k as f64 + 1.0)).norm() < 1e-10);
            assert!(cpoly::eval(&p, root.z).norm() < 1e-12);
        }
    }

    #[test]
    fn double_root_at_origin() {
        let r = complex_roots(&re(&[0.0, 0.0, 1.0])).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].mult, 2);
        assert!(r[0].z.norm() < 1e-7);
    }

    #[test]
    fn spherical_pair_on_slice() {
        let r = complex_roots(&re(&[1.0, 0.0, 1.0])).unwrap();
        assert!((r[0].z - Complex64::new(0.0, -1.0)).norm() < 1e-14);
        assert!((r[1].z - Complex64::new(0.0, 1.0)).norm() < 1e-14);
    }

    #[test]
    fn degenerate_leading_coefficient() {
        assert_eq!(
            complex_roots(&re(&[1.0, 2.0, 0.0])),
            Err(Error::DegenerateLeadingCoefficient)
        );
        assert!(complex_roots(&re(&[1.0])).is_err());
    }

    #[test]
    fn multiset_comparison() {
        let a = complex_roots(&re(&[-2.0, 1.0, 1.0])).unwrap();
        let b = complex_roots(&cpoly::from_roots(&re(&[1.0, -2.0]))).unwrap();
        assert!(same_multiset(&a, &b, 1e-9));
        let c = complex_roots(&re(&[-2.1, 1.0, 1.0])).unwrap();
        assert!(!same_multiset(&a, &c, 1e-9));
    }
}
