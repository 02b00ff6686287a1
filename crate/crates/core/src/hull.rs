//! Planar convex hulls (Andrew's monotone chain) and per-slice hulls.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::quat::ImaginaryUnit;

/// `(b − a) × (c − a)`; positive for a counter-clockwise turn.
#[inline]
pub fn cross(a: [f64; 2], b: [f64; 2], c: [f64; 2]) -> f64 {
    (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
}

fn lex(a: &[f64; 2], b: &[f64; 2]) -> Ordering {
    a[0].total_cmp(&b[0]).then(a[1].total_cmp(&b[1]))
}

/// Extreme points of the convex hull in counter-clockwise order, starting
/// from the lexicographically smallest. Collinear boundary points are
/// dropped; degenerate inputs give an empty list, one point or the two
/// endpoints of a segment.
pub fn convex_hull_2d(points: &[[f64; 2]]) -> Vec<[f64; 2]> {
    let mut pts: Vec<[f64; 2]> = points.to_vec();
    pts.sort_by(lex);
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let mut lower: Vec<[f64; 2]> = Vec::with_capacity(pts.len());
    for p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], *p) <= 0.0 {
            lower.pop();
        }
        lower.push(*p);
    }
    let mut upper: Vec<[f64; 2]> = Vec::with_capacity(pts.len());
    for p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], *p) <= 0.0 {
            upper.pop();
        }
        upper.push(*p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    if lower.len() == 2 && lower[0] == lower[1] {
        lower.pop();
    }
    lower
}

/// Whether `p` lies in the hull polygon inflated by `tol`.
pub fn hull_contains(polygon: &[[f64; 2]], p: [f64; 2], tol: f64) -> bool {
    match polygon.len() {
        0 => false,
        1 => dist(polygon[0], p) <= tol,
        2 => segment_distance(polygon[0], polygon[1], p) <= tol,
        n => {
            let mut inside = true;
            for k in 0..n {
                let a = polygon[k];
                let b = polygon[(k + 1) % n];
                if cross(a, b, p) < 0.0 {
                    inside = false;
                    break;
                }
            }
            inside || (0..n).any(|k| segment_distance(polygon[k], polygon[(k + 1) % n], p) <= tol)
        }
    }
}

fn dist(a: [f64; 2], b: [f64; 2]) -> f64 {
    (a[0] - b[0]).hypot(a[1] - b[1])
}

fn segment_distance(a: [f64; 2], b: [f64; 2], p: [f64; 2]) -> f64 {
    let (dx, dy) = (b[0] - a[0], b[1] - a[1]);
    let len2 = dx * dx + dy * dy;
    if len2 == 0.0 {
        return dist(a, p);
    }
    let t = (((p[0] - a[0]) * dx + (p[1] - a[1]) * dy) / len2).clamp(0.0, 1.0);
    dist([a[0] + t * dx, a[1] + t * dy], p)
}

/// Symmetric Hausdorff distance of two finite point sets; `0` for two empty
/// sets and `∞` when exactly one is empty.
pub fn hausdorff(a: &[[f64; 2]], b: &[[f64; 2]]) -> f64 {
    match (a.is_empty(), b.is_empty()) {
        (true, true) => return 0.0,
        (true, false) | (false, true) => return f64::INFINITY,
        _ => {}
    }
    let one_way = |x: &[[f64; 2]], y: &[[f64; 2]]| {
        x.iter()
            .map(|p| y.iter().map(|q| dist(*p, *q)).fold(f64::INFINITY, f64::min))
            .fold(0.0, f64::max)
    };
    one_way(a, b).max(one_way(b, a))
}

/// Convex hull of a zero set inside the slice `C(slice)`, in the slice
/// coordinates `x + y·slice`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SliceHull {
    pub slice: ImaginaryUnit,
    pub polygon: Vec<[f64; 2]>,
}

impl SliceHull {
    pub fn of_points(slice: ImaginaryUnit, points: &[[f64; 2]]) -> Self {
        SliceHull {
            slice,
            polygon: convex_hull_2d(points),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.polygon.is_empty()
    }

    pub fn contains(&self, p: [f64; 2], tol: f64) -> bool {
        hull_contains(&self.polygon, p, tol)
    }
}
