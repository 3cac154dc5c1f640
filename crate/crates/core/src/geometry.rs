//! n-dimensional geometric primitives: points, circles through point
//! triples, and projections onto circular arcs.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Index;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Scale-invariant collinearity threshold: a triple counts as collinear
/// when its triangle area is below `COLLINEAR_AREA_FACTOR * max_side^2`.
pub(crate) const COLLINEAR_AREA_FACTOR: f64 = 1e-12;

/// Orthonormality tolerance for a circle's plane basis.
const BASIS_TOL: f64 = 1e-12;

/// A point in n-dimensional Euclidean space. Coordinates are always finite.
#[derive(Clone, Debug, PartialEq)]
pub struct Point {
    coords: Vec<f64>,
}

impl Point {
    /// Builds a point, rejecting empty coordinate vectors and non-finite values.
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::EmptyPoint);
        }
        for (index, &value) in coords.iter().enumerate() {
            if !value.is_finite() {
                return Err(Error::NonFiniteCoordinate { index, value });
            }
        }
        Ok(Point { coords })
    }

    pub fn from_slice(coords: &[f64]) -> Result<Self> {
        Self::new(coords.to_vec())
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub(crate) fn from_coords_unchecked(coords: Vec<f64>) -> Self {
        Point { coords }
    }
}

impl Index<usize> for Point {
    type Output = f64;

    fn index(&self, i: usize) -> &f64 {
        &self.coords[i]
    }
}

/// A degree of monotonicity: a nonnegative real or positive infinity.
///
/// Infinity is an ordinary value here (a straight chain with no backtracking
/// has infinite degree), so `Degree` is totally ordered and `min` against a
/// finite value returns the finite value. NaN is rejected at construction.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Degree(f64);

impl Degree {
    pub const ZERO: Degree = Degree(0.0);
    pub const INFINITE: Degree = Degree(f64::INFINITY);

    pub fn new(value: f64) -> Result<Self> {
        if value.is_nan() || value < 0.0 {
            return Err(Error::InvalidDegree(value));
        }
        Ok(Degree(value))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn is_finite(self) -> bool {
        self.0.is_finite()
    }

    pub fn is_infinite(self) -> bool {
        self.0.is_infinite()
    }

    pub fn min(self, other: Degree) -> Degree {
        if self.0 <= other.0 {
            self
        } else {
            other
        }
    }
}

impl Eq for Degree {}

impl PartialOrd for Degree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Degree {
    fn cmp(&self, other: &Self) -> Ordering {
        // Total order: construction forbids NaN.
        self.0.partial_cmp(&other.0).expect("degree is never NaN")
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_infinite() {
            write!(f, "inf")
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl FromStr for Degree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "inf" {
            return Ok(Degree::INFINITE);
        }
        let value: f64 = s.parse().map_err(|_| Error::InvalidDegree(f64::NAN))?;
        Degree::new(value)
    }
}

/// A circle embedded in n-space: center, radius, and an orthonormal pair
/// `(u, v)` spanning the circle's plane. Every point of the circle is
/// `center + radius*(cos t * u + sin t * v)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Circle {
    center: Point,
    radius: f64,
    u: Vec<f64>,
    v: Vec<f64>,
}

impl Circle {
    /// Validates that `u` and `v` are unit length and orthogonal (within 1e-12)
    /// and match the center's dimension.
    pub fn new(center: Point, radius: f64, u: Vec<f64>, v: Vec<f64>) -> Result<Self> {
        let n = center.dim();
        if u.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: u.len() });
        }
        if v.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: v.len() });
        }
        if !radius.is_finite() || radius < 0.0 {
            return Err(Error::InvalidDegree(radius));
        }
        if (norm(&u) - 1.0).abs() > BASIS_TOL
            || (norm(&v) - 1.0).abs() > BASIS_TOL
            || dot(&u, &v).abs() > BASIS_TOL
        {
            return Err(Error::NotOrthonormal);
        }
        Ok(Circle { center, radius, u, v })
    }

    pub fn center(&self) -> &Point {
        &self.center
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn basis(&self) -> (&[f64], &[f64]) {
        (&self.u, &self.v)
    }

    /// The circle point at angle `theta` in the `(u, v)` plane.
    pub fn point_at(&self, theta: f64) -> Point {
        let (cos_t, sin_t) = (theta.cos(), theta.sin());
        let coords = self
            .center
            .coords()
            .iter()
            .zip(self.u.iter().zip(self.v.iter()))
            .map(|(&c, (&ui, &vi))| c + self.radius * (cos_t * ui + sin_t * vi))
            .collect();
        Point::from_coords_unchecked(coords)
    }

    /// Coordinates of `p` in the circle's plane, relative to the center.
    fn plane_coords(&self, p: &Point) -> (f64, f64) {
        let t = sub(p.coords(), self.center.coords());
        (dot(&t, &self.u), dot(&t, &self.v))
    }

    /// Angle of `p` in the `(u, v)` plane. Meaningful for points away from
    /// the center axis.
    fn angle_of(&self, p: &Point) -> f64 {
        let (x, y) = self.plane_coords(p);
        y.atan2(x)
    }
}

pub(crate) fn sub(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

/// Euclidean distance without a dimension check; callers guarantee equal dims.
pub(crate) fn dist_unchecked(a: &Point, b: &Point) -> f64 {
    a.coords()
        .iter()
        .zip(b.coords())
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

/// Euclidean distance between two points of equal dimension.
pub fn distance(a: &Point, b: &Point) -> Result<f64> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch { expected: a.dim(), found: b.dim() });
    }
    Ok(dist_unchecked(a, b))
}

/// Circumradius of a triangle from its side lengths.
///
/// Uses the classical radius formula `R = abc / (4 * area)` with the area
/// factors sorted before multiplication, which stays accurate for needle
/// triangles. Degenerate triangles (zero area, collinear) yield an infinite
/// degree; side lengths that violate the triangle inequality beyond rounding
/// tolerance are rejected.
pub fn heron_circumradius(a: f64, b: f64, c: f64) -> Result<Degree> {
    for &side in &[a, b, c] {
        if !side.is_finite() || side < 0.0 {
            return Err(Error::NegativeSideLength(side));
        }
    }
    // Sort descending: x >= y >= z.
    let mut s = [a, b, c];
    s.sort_by(|p, q| q.partial_cmp(p).unwrap());
    let [x, y, z] = s;
    if x == 0.0 {
        // All three points coincide; nothing constrains a ball.
        return Ok(Degree::INFINITE);
    }
    let slack = z - (x - y);
    if slack < -1e-9 * x {
        return Err(Error::TriangleInequality { a, b, c });
    }
    // Stable Heron product; the slack factor is clamped so rounding noise
    // cannot drive the radicand negative.
    let radicand = (x + (y + z)) * slack.max(0.0) * (z + (x - y)) * (x + (y - z));
    let area = 0.25 * radicand.sqrt();
    if area < COLLINEAR_AREA_FACTOR * x * x {
        return Ok(Degree::INFINITE);
    }
    Degree::new(x * y * z / (4.0 * area))
}

/// Circle through three pairwise distinct, non-collinear points in n-space.
///
/// The triple always lies in a 2D affine plane; an orthonormal basis for it
/// comes from Gram-Schmidt on `p2 - p1` and `p3 - p1` (with one
/// re-orthogonalization pass). Subtracting the circle equations of the three
/// points pairwise cancels the squared radius and leaves a linear system for
/// the planar center, which maps back to n-space.
pub fn circumcircle(p1: &Point, p2: &Point, p3: &Point) -> Result<Circle> {
    let n = p1.dim();
    for p in [p2, p3] {
        if p.dim() != n {
            return Err(Error::DimensionMismatch { expected: n, found: p.dim() });
        }
    }
    let d21 = sub(p2.coords(), p1.coords());
    let d31 = sub(p3.coords(), p1.coords());
    let x2 = norm(&d21);
    if x2 == 0.0 {
        return Err(Error::DegenerateGeometry("coincident points"));
    }
    let u: Vec<f64> = d21.iter().map(|&c| c / x2).collect();
    let mut w = d31.clone();
    for _ in 0..2 {
        let proj = dot(&w, &u);
        for (wi, &ui) in w.iter_mut().zip(&u) {
            *wi -= proj * ui;
        }
    }
    let y3 = norm(&w);
    let max_side = x2.max(norm(&d31)).max(dist_unchecked(p2, p3));
    // Planar coordinates: p1 = (0, 0), p2 = (x2, 0), p3 = (x3, y3).
    if 0.5 * x2 * y3 < COLLINEAR_AREA_FACTOR * max_side * max_side {
        return Err(Error::DegenerateGeometry("collinear points"));
    }
    let v: Vec<f64> = w.iter().map(|&c| c / y3).collect();
    let x3 = dot(&d31, &u);
    let cx = 0.5 * x2;
    let cy = (x3 * x3 + y3 * y3 - x2 * x3) / (2.0 * y3);
    let radius = cx.hypot(cy);
    let center = Point::from_coords_unchecked(
        p1.coords()
            .iter()
            .zip(u.iter().zip(v.iter()))
            .map(|(&c, (&ui, &vi))| c + cx * ui + cy * vi)
            .collect(),
    );
    Circle::new(center, radius, u, v)
}

fn wrap_angle(theta: f64) -> f64 {
    theta.rem_euclid(std::f64::consts::TAU)
}

/// Closest point to `x` on the arc of `circle` running from `arc_from` to
/// `arc_to` on the side that does not contain `excluded`.
///
/// `x` is projected onto the circle's plane, then radially onto the circle;
/// if the radial projection falls off the arc it is clamped to the arc
/// endpoint nearest to `x`. When `x` projects onto the circle's center the
/// radial direction is undefined and the arc midpoint is returned.
pub fn project_onto_arc(
    x: &Point,
    circle: &Circle,
    arc_from: &Point,
    arc_to: &Point,
    excluded: &Point,
) -> Point {
    let tau = std::f64::consts::TAU;
    let th_from = circle.angle_of(arc_from);
    let th_to = circle.angle_of(arc_to);
    let th_ex = circle.angle_of(excluded);

    // Counterclockwise sweep from `arc_from` to `arc_to`; pick whichever arc
    // leaves `excluded` on the other side.
    let ccw_sweep = wrap_angle(th_to - th_from);
    let (start, sweep) = if wrap_angle(th_ex - th_from) <= ccw_sweep {
        (th_to, tau - ccw_sweep)
    } else {
        (th_from, ccw_sweep)
    };

    let (xu, xv) = circle.plane_coords(x);
    if xu.hypot(xv) <= 1e-15 * circle.radius().max(1.0) {
        return circle.point_at(start + 0.5 * sweep);
    }
    let th_x = xv.atan2(xu);
    if wrap_angle(th_x - start) <= sweep + 1e-12 {
        return circle.point_at(th_x);
    }
    // Off the arc: keep the nearer endpoint, measured in the ambient space.
    if dist_unchecked(x, arc_from) <= dist_unchecked(x, arc_to) {
        arc_from.clone()
    } else {
        arc_to.clone()
    }
}
