//! Chain smoothing filters: the sphere-preserving recursive filter and
//! moving-average baselines, behind one configuration type.

use crate::error::{Error, Result};
use crate::geometry::{circumcircle, dot, project_onto_arc, sub, Degree, Point};
use crate::monotonicity::{triple_degree_unchecked, Chain};

/// Which filter to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FilterMethod {
    SpherePreserving,
    MovingAverage,
}

/// Filter selection plus the moving-average window width (ignored by the
/// sphere-preserving filter).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FilterConfig {
    pub method: FilterMethod,
    pub window: usize,
}

impl FilterConfig {
    pub fn sphere_preserving() -> Self {
        FilterConfig { method: FilterMethod::SpherePreserving, window: 3 }
    }

    pub fn moving_average(window: usize) -> Self {
        FilterConfig { method: FilterMethod::MovingAverage, window }
    }

    pub fn apply(&self, chain: &Chain) -> Result<Chain> {
        match self.method {
            FilterMethod::SpherePreserving => Ok(sp_filter(chain)),
            FilterMethod::MovingAverage => ma_filter(chain, self.window),
        }
    }
}

/// Centered moving average with an odd window. Near the boundary the window
/// shrinks symmetrically to the available points, so the output has the same
/// length as the input and the first and last points pass through unchanged.
pub fn ma_filter(chain: &Chain, window: usize) -> Result<Chain> {
    if window % 2 == 0 {
        return Err(Error::EvenWindow(window));
    }
    let Some(dim) = chain.dim() else {
        return Ok(chain.clone());
    };
    let pts = chain.points();
    let m = pts.len();
    let half = window / 2;
    let mut out = Vec::with_capacity(m);
    for i in 0..m {
        let h = half.min(i).min(m - 1 - i);
        let mut acc = vec![0.0; dim];
        for q in &pts[i - h..=i + h] {
            for (s, &c) in acc.iter_mut().zip(q.coords()) {
                *s += c;
            }
        }
        let count = (2 * h + 1) as f64;
        for s in &mut acc {
            *s /= count;
        }
        out.push(Point::from_coords_unchecked(acc));
    }
    Ok(Chain::from_points_unchecked(out))
}

/// Degree of monotonicity of the five samples `a, b, x, c, d`: the minimum
/// over the three consecutive triples that involve the middle sample.
pub fn five_point_degree(a: &Point, b: &Point, x: &Point, c: &Point, d: &Point) -> Degree {
    let n = a.dim();
    for p in [b, x, c, d] {
        assert_eq!(p.dim(), n, "five_point_degree requires equal dimensions");
    }
    five_point_degree_unchecked(a, b, x, c, d)
}

fn five_point_degree_unchecked(a: &Point, b: &Point, x: &Point, c: &Point, d: &Point) -> Degree {
    triple_degree_unchecked(a, b, x)
        .min(triple_degree_unchecked(b, x, c))
        .min(triple_degree_unchecked(x, c, d))
}

/// Candidate replacement for `x`: its projection onto the arc of the circle
/// through `p`, `q`, `other` that runs from `p` to `q` on the side away from
/// `other`. When the triple is degenerate the circle becomes a line and the
/// candidate is the orthogonal projection of `x` onto the segment `p q`.
fn arc_candidate(x: &Point, p: &Point, q: &Point, other: &Point) -> Point {
    match circumcircle(p, q, other) {
        Ok(circle) => project_onto_arc(x, &circle, p, q, other),
        Err(_) => project_onto_segment(x, p, q),
    }
}

fn project_onto_segment(x: &Point, p: &Point, q: &Point) -> Point {
    let d = sub(q.coords(), p.coords());
    let len_sq = dot(&d, &d);
    if len_sq == 0.0 {
        return p.clone();
    }
    let t = (dot(&sub(x.coords(), p.coords()), &d) / len_sq).clamp(0.0, 1.0);
    Point::from_coords_unchecked(
        p.coords()
            .iter()
            .zip(&d)
            .map(|(&pi, &di)| pi + t * di)
            .collect(),
    )
}

/// One step of the sphere-preserving filter.
///
/// Builds two candidates for the middle sample: the projection of `x` onto
/// the arc `b c` of the circle through `a, b, c`, and onto the arc `b c` of
/// the circle through `b, c, d`. Returns whichever of `x` and the two
/// projections maximizes the five-point degree, preferring `x`, then the
/// first projection, on exact ties. Because `x` itself stays in the
/// candidate set the chosen point never has a smaller five-point degree.
pub fn sp_step(a: &Point, b: &Point, x: &Point, c: &Point, d: &Point) -> Point {
    let n = a.dim();
    for p in [b, x, c, d] {
        assert_eq!(p.dim(), n, "sp_step requires equal dimensions");
    }
    let x1 = arc_candidate(x, b, c, a);
    let x2 = arc_candidate(x, b, c, d);
    let mut best = (five_point_degree_unchecked(a, b, x, c, d), x);
    for cand in [&x1, &x2] {
        let r = five_point_degree_unchecked(a, b, cand, c, d);
        if r > best.0 {
            best = (r, cand);
        }
    }
    best.1.clone()
}

/// Sphere-preserving recursive filter: one left-to-right pass replacing each
/// interior sample with the output of [`sp_step`] on its two already-filtered
/// predecessors and its two raw successors. The first two and last two
/// samples pass through unchanged; chains shorter than five points are
/// returned as-is. The degree of monotonicity of the output is never below
/// the input's.
pub fn sp_filter(chain: &Chain) -> Chain {
    let pts = chain.points();
    let m = pts.len();
    if m < 5 {
        return chain.clone();
    }
    let mut out = pts.to_vec();
    for i in 2..=m - 3 {
        let next = sp_step(&out[i - 2], &out[i - 1], &pts[i], &pts[i + 1], &pts[i + 2]);
        out[i] = next;
    }
    Chain::from_points_unchecked(out)
}
