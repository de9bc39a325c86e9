//! Polygons given by vertex coordinates: the exact shoelace oracle and the
//! Edfu error report built on it.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::area::{edfu_area_bounds, SideQuad};
use super::bounds::{sqrt_bounds, Bounds};
use super::report::{ErrorReport, WORKING_DIGITS};
use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: impl Into<Rational>, y: impl Into<Rational>) -> Self {
        Point {
            x: x.into(),
            y: y.into(),
        }
    }

    fn minus(&self, other: &Point) -> (Rational, Rational) {
        (&self.x - &other.x, &self.y - &other.y)
    }
}

fn cross(o: &Point, a: &Point, b: &Point) -> Rational {
    let (ax, ay) = a.minus(o);
    let (bx, by) = b.minus(o);
    ax * by - ay * bx
}

fn dot(o: &Point, a: &Point, b: &Point) -> Rational {
    let (ax, ay) = a.minus(o);
    let (bx, by) = b.minus(o);
    ax * bx + ay * by
}

/// `p` lies on the closed segment `ab`, given that the three are collinear.
fn within_box(a: &Point, b: &Point, p: &Point) -> bool {
    let between = |u: &Rational, v: &Rational, w: &Rational| u.min(v) <= w && w <= u.max(v);
    between(&a.x, &b.x, &p.x) && between(&a.y, &b.y, &p.y)
}

fn segments_touch(a: &Point, b: &Point, c: &Point, d: &Point) -> bool {
    let d1 = cross(a, b, c);
    let d2 = cross(a, b, d);
    let d3 = cross(c, d, a);
    let d4 = cross(c, d, b);
    let opposite = |u: &Rational, v: &Rational| {
        (u.is_positive() && v.is_negative()) || (u.is_negative() && v.is_positive())
    };
    if opposite(&d1, &d2) && opposite(&d3, &d4) {
        return true;
    }
    (d1.is_zero() && within_box(a, b, c))
        || (d2.is_zero() && within_box(a, b, d))
        || (d3.is_zero() && within_box(c, d, a))
        || (d4.is_zero() && within_box(c, d, b))
}

/// A simple polygon, vertices in order (either orientation).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolygonCoords {
    vertices: Vec<Point>,
}

impl PolygonCoords {
    /// Rejects fewer than three vertices, repeated consecutive vertices, and
    /// any pair of edges that meet other than at their shared corner.
    pub fn new(vertices: Vec<Point>) -> Result<Self> {
        let n = vertices.len();
        if n < 3 {
            return Err(Error::TooFewVertices(n));
        }
        let edge = |i: usize| (&vertices[i], &vertices[(i + 1) % n]);
        for i in 0..n {
            let (a, b) = edge(i);
            if a == b {
                return Err(Error::SelfIntersecting(i, i));
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                let (a, b) = edge(i);
                let (c, d) = edge(j);
                if j == i + 1 || (i == 0 && j == n - 1) {
                    // adjacent edges share one corner; they must not fold back
                    let (corner, p, r) = if j == i + 1 { (b, a, d) } else { (a, b, c) };
                    if cross(corner, p, r).is_zero() && dot(corner, p, r).is_positive() {
                        return Err(Error::SelfIntersecting(i, j));
                    }
                } else if segments_touch(a, b, c, d) {
                    return Err(Error::SelfIntersecting(i, j));
                }
            }
        }
        Ok(PolygonCoords { vertices })
    }

    pub fn from_pairs<T: Into<Rational> + Clone>(pairs: &[(T, T)]) -> Result<Self> {
        Self::new(
            pairs
                .iter()
                .map(|(x, y)| Point::new(x.clone(), y.clone()))
                .collect(),
        )
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Squared side lengths, in vertex order starting with the first edge.
    pub fn squared_sides(&self) -> Vec<Rational> {
        let n = self.vertices.len();
        (0..n)
            .map(|i| {
                let (dx, dy) = self.vertices[(i + 1) % n].minus(&self.vertices[i]);
                dx.square() + dy.square()
            })
            .collect()
    }

    /// Twice the signed area; positive for counter-clockwise order.
    pub fn doubled_signed_area(&self) -> Rational {
        let n = self.vertices.len();
        (0..n)
            .map(|i| {
                let p = &self.vertices[i];
                let q = &self.vertices[(i + 1) % n];
                &p.x * &q.y - &q.x * &p.y
            })
            .sum()
    }

    /// Four corners, all right angles.
    pub fn is_rectangle(&self) -> bool {
        let n = self.vertices.len();
        n == 4
            && (0..n).all(|i| {
                let prev = &self.vertices[(i + n - 1) % n];
                let next = &self.vertices[(i + 1) % n];
                dot(&self.vertices[i], prev, next).is_zero()
            })
    }
}

impl FromStr for PolygonCoords {
    type Err = Error;

    /// `x,y;x,y;...` with rational coordinates, e.g. `0,0;3,0;3,4`.
    fn from_str(s: &str) -> Result<Self> {
        let mut points = Vec::new();
        for pair in s.split(';').filter(|p| !p.trim().is_empty()) {
            let (x, y) = pair
                .split_once(',')
                .ok_or_else(|| Error::parse(s, format!("vertex {pair:?} is not x,y")))?;
            points.push(Point::new(x.parse::<Rational>()?, y.parse::<Rational>()?));
        }
        PolygonCoords::new(points)
    }
}

impl fmt::Display for PolygonCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .vertices
            .iter()
            .map(|p| format!("{},{}", p.x, p.y))
            .collect();
        f.write_str(&parts.join(";"))
    }
}

/// Shoelace area, always non-negative.
pub fn exact_polygon_area(p: &PolygonCoords) -> Rational {
    p.doubled_signed_area().abs() * Rational::frac(1, 2)
}

/// Side lengths of a triangle or quadrilateral in cyclic order; a
/// triangle gets a zero fourth side.
pub fn side_length_bounds(p: &PolygonCoords) -> Result<[Bounds; 4]> {
    let squares = p.squared_sides();
    if !(3..=4).contains(&squares.len()) {
        return Err(Error::Invalid(format!(
            "the Edfu rule needs 3 or 4 vertices, got {}",
            squares.len()
        )));
    }
    let mut sides: Vec<Bounds> = squares
        .iter()
        .map(|s| sqrt_bounds(s, WORKING_DIGITS))
        .collect::<Result<_>>()?;
    if sides.len() == 3 {
        sides.push(Bounds::exact(Rational::zero()));
    }
    Ok(sides.try_into().expect("four sides"))
}

/// The side quadrilateral read off a polygon, when all its sides are rational.
pub fn exact_side_quad(p: &PolygonCoords) -> Result<Option<SideQuad>> {
    let sides = side_length_bounds(p)?;
    let exact: Option<Vec<Rational>> = sides.iter().map(|b| b.as_exact().cloned()).collect();
    exact.map(|s| SideQuad::from_slice(&s)).transpose()
}

/// The Edfu rule applied to the polygon's side lengths, against the
/// shoelace area. Irrational sides are enclosed to 40 decimal places.
pub fn edfu_error_report(p: &PolygonCoords) -> Result<ErrorReport> {
    let sides = side_length_bounds(p)?;
    let historical = edfu_area_bounds(&sides);
    Ok(ErrorReport::new(
        historical,
        Bounds::exact(exact_polygon_area(p)),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::area::{edfu_area, triangle_area_two_sides};

    fn poly(pts: &[(i64, i64)]) -> Result<PolygonCoords> {
        PolygonCoords::from_pairs(pts)
    }

    #[test]
    fn shoelace_examples() {
        let unit = poly(&[(0, 0), (1, 0), (1, 1), (0, 1)]).unwrap();
        assert_eq!(exact_polygon_area(&unit), Rational::one());
        let tri = poly(&[(0, 0), (3, 0), (3, 4)]).unwrap();
        assert_eq!(exact_polygon_area(&tri), Rational::from(6));
        let rev = poly(&[(3, 4), (3, 0), (0, 0)]).unwrap();
        assert_eq!(exact_polygon_area(&rev), Rational::from(6));
        assert!(tri.doubled_signed_area().is_positive());
        assert!(rev.doubled_signed_area().is_negative());
    }

    #[test]
    fn rejects_invalid_polygons() {
        assert_eq!(poly(&[(0, 0), (1, 0)]), Err(Error::TooFewVertices(2)));
        // bow tie
        assert!(matches!(
            poly(&[(0, 0), (2, 2), (2, 0), (0, 2)]),
            Err(Error::SelfIntersecting(..))
        ));
        // collinear "triangle"
        assert!(poly(&[(0, 0), (1, 0), (2, 0)]).is_err());
        // repeated vertex
        assert!(poly(&[(0, 0), (0, 0), (1, 0), (0, 1)]).is_err());
        // vertex touching a far edge
        assert!(poly(&[(0, 0), (4, 0), (4, 4), (2, 0)]).is_err());
        // a straight angle is fine
        assert!(poly(&[(0, 0), (1, 0), (2, 0), (2, 2)]).is_ok());
    }

    #[test]
    fn parse_and_render() {
        let p: PolygonCoords = "0,0; 3,0; 3,4".parse().unwrap();
        assert_eq!(p.to_string(), "0,0;3,0;3,4");
        let p: PolygonCoords = "0,0;1/2,0;1/2,1/3".parse().unwrap();
        assert_eq!(exact_polygon_area(&p), Rational::frac(1, 12));
        assert!("0,0;1".parse::<PolygonCoords>().is_err());
    }

    #[test]
    fn edfu_report_examples() {
        let rect = poly(&[(0, 0), (5, 0), (5, 2), (0, 2)]).unwrap();
        let r = edfu_error_report(&rect).unwrap();
        assert!(r.is_exact());
        assert!(r.error_is_zero());
        assert!(rect.is_rectangle());

        let tri = poly(&[(0, 0), (3, 0), (3, 4)]).unwrap();
        let r = edfu_error_report(&tri).unwrap();
        assert_eq!(r.historical, Bounds::exact(Rational::from(8)));
        assert_eq!(r.exact, Bounds::exact(Rational::from(6)));
        assert_eq!(r.abs_error, Bounds::exact(Rational::from(2)));
        let sq = exact_side_quad(&tri).unwrap().unwrap();
        assert_eq!(edfu_area(&sq), Rational::from(8));
    }

    #[test]
    fn irrational_sides_still_certified() {
        let kite = poly(&[(0, 0), (2, -1), (5, 0), (2, 1)]).unwrap();
        let r = edfu_error_report(&kite).unwrap();
        assert!(!r.is_exact());
        assert!(r.strictly_overestimates());
        assert!(exact_side_quad(&kite).unwrap().is_none());
    }

    #[test]
    fn right_angle_reading_matches_shoelace() {
        for (a, b) in [(3, 4), (1, 1), (7, 2), (10, 13)] {
            let tri = poly(&[(0, 0), (a, 0), (0, b)]).unwrap();
            assert_eq!(
                triangle_area_two_sides(&Rational::from(a), &Rational::from(b)).unwrap(),
                exact_polygon_area(&tri)
            );
        }
    }

    #[test]
    fn rejects_pentagon_for_edfu() {
        let pent = poly(&[(0, 0), (2, 0), (3, 1), (1, 3), (-1, 1)]).unwrap();
        assert!(edfu_error_report(&pent).is_err());
    }
}
