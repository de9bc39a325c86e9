//! Area and volume rules of the scribes and surveyors.

use serde::Serialize;

use super::bounds::{pi_bounds, sqrt_bounds, Bounds};
use super::report::{ErrorReport, WORKING_DIGITS};
use crate::error::{Error, Result};
use crate::rational::Rational;

fn positive(what: &'static str, x: &Rational) -> Result<()> {
    if x.is_positive() {
        Ok(())
    } else {
        Err(Error::NonPositive {
            what,
            value: x.to_string(),
        })
    }
}

fn non_negative(what: &'static str, x: &Rational) -> Result<()> {
    if x.is_negative() {
        Err(Error::Negative {
            what,
            value: x.to_string(),
        })
    } else {
        Ok(())
    }
}

/// The circle is replaced by the square on eight ninths of its diameter.
pub fn circle_area_egyptian(diameter: &Rational) -> Result<Rational> {
    positive("diameter", diameter)?;
    Ok((Rational::frac(8, 9) * diameter).square())
}

/// The value of π implied by the circle rule: `4 · (8/9)² = 256/81`.
pub fn implied_pi() -> Rational {
    Rational::frac(256, 81)
}

/// `256/81` against π.
pub fn implied_pi_error() -> ErrorReport {
    ErrorReport::new(Bounds::exact(implied_pi()), pi_bounds())
}

/// π as used in other traditions, for comparison with the Egyptian value.
pub fn pi_comparisons() -> Vec<(&'static str, ErrorReport)> {
    vec![
        ("egyptian", implied_pi_error()),
        ("babylonian", ErrorReport::new(Bounds::exact(Rational::from(3)), pi_bounds())),
        ("roman", ErrorReport::new(Bounds::exact(Rational::from(4)), pi_bounds())),
    ]
}

pub fn square_area(side: &Rational) -> Result<Rational> {
    positive("side", side)?;
    Ok(side.square())
}

pub fn rect_area(width: &Rational, height: &Rational) -> Result<Rational> {
    positive("width", width)?;
    positive("height", height)?;
    Ok(width * height)
}

/// Half of base times height.
pub fn triangle_area(base: &Rational, height: &Rational) -> Result<Rational> {
    positive("base", base)?;
    positive("height", height)?;
    Ok(base * height * Rational::frac(1, 2))
}

/// Half the product of two sides. Exact when the sides meet at a right
/// angle, an over-estimate otherwise.
pub fn triangle_area_two_sides(s1: &Rational, s2: &Rational) -> Result<Rational> {
    positive("side", s1)?;
    positive("side", s2)?;
    Ok(s1 * s2 * Rational::frac(1, 2))
}

/// Mean of the parallel sides times the height. One parallel side may be
/// zero, which gives a triangle.
pub fn trapezoid_area(p1: &Rational, p2: &Rational, height: &Rational) -> Result<Rational> {
    non_negative("parallel side", p1)?;
    non_negative("parallel side", p2)?;
    if p1.is_zero() && p2.is_zero() {
        return Err(Error::Invalid("both parallel sides are zero".into()));
    }
    positive("height", height)?;
    Ok((p1 + p2) * Rational::frac(1, 2) * height)
}

/// A quadrilateral known only by its four sides, in cyclic order, so the
/// opposite pairs are `(a, c)` and `(b, d)`. One side may be zero, which
/// is how a triangle is recorded.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SideQuad {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
}

impl SideQuad {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Result<Self> {
        for s in [&a, &b, &c, &d] {
            non_negative("side", s)?;
        }
        let zeros = [&a, &b, &c, &d].iter().filter(|s| s.is_zero()).count();
        if zeros > 1 {
            return Err(Error::Invalid(format!(
                "at most one side may be zero, got {zeros}"
            )));
        }
        Ok(SideQuad { a, b, c, d })
    }

    pub fn from_slice(sides: &[Rational]) -> Result<Self> {
        match sides {
            [a, b, c, d] => Self::new(a.clone(), b.clone(), c.clone(), d.clone()),
            [a, b, c] => Self::new(a.clone(), b.clone(), c.clone(), Rational::zero()),
            _ => Err(Error::Invalid(format!(
                "expected 3 or 4 sides, got {}",
                sides.len()
            ))),
        }
    }

    pub fn is_triangle(&self) -> bool {
        [&self.a, &self.b, &self.c, &self.d].iter().any(|s| s.is_zero())
    }
}

/// The Edfu rule: product of the means of the two pairs of opposite sides.
pub fn edfu_area(q: &SideQuad) -> Rational {
    let half = Rational::frac(1, 2);
    (&q.a + &q.c) * &half * ((&q.b + &q.d) * &half)
}

/// The same area reached by cutting along each diagonal, estimating both
/// triangles by half the product of their sides, and averaging the two cuts.
pub fn edfu_area_via_diagonal_split(q: &SideQuad) -> Rational {
    let half = Rational::frac(1, 2);
    let ab = triangle_two_sides_lenient(&q.a, &q.b);
    let cd = triangle_two_sides_lenient(&q.c, &q.d);
    let bc = triangle_two_sides_lenient(&q.b, &q.c);
    let da = triangle_two_sides_lenient(&q.d, &q.a);
    ((ab + cd) + (bc + da)) * half
}

// half product, allowing the zero side of a degenerate quadrilateral
fn triangle_two_sides_lenient(s1: &Rational, s2: &Rational) -> Rational {
    s1 * s2 * Rational::frac(1, 2)
}

/// The Edfu rule evaluated on enclosed side lengths.
pub(crate) fn edfu_area_bounds(sides: &[Bounds; 4]) -> Bounds {
    let half = Rational::frac(1, 2);
    sides[0]
        .add(&sides[2])
        .scale(&half)
        .mul(&sides[1].add(&sides[3]).scale(&half))
}

/// Leg times half the base, as in the medieval rule, against the true area
/// `(base/4)·√(4·leg² − base²)`.
pub fn gerbert_isoceles_area(leg: &Rational, base: &Rational) -> Result<ErrorReport> {
    positive("leg", leg)?;
    non_negative("base", base)?;
    if !(leg * Rational::from(2) > *base) {
        return Err(Error::NotATriangle(
            leg.to_string(),
            leg.to_string(),
            base.to_string(),
        ));
    }
    let historical = leg * base * Rational::frac(1, 2);
    let radicand = Rational::from(4) * leg.square() - base.square();
    let root = sqrt_bounds(&radicand, WORKING_DIGITS)?;
    let exact = root.scale(&(base * Rational::frac(1, 4)));
    Ok(ErrorReport::new(Bounds::exact(historical), exact))
}

/// Floor area times length.
pub fn granary_volume(floor_area: &Rational, length: &Rational) -> Result<Rational> {
    positive("floor area", floor_area)?;
    positive("length", length)?;
    Ok(floor_area * length)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::frac(n, d)
    }

    fn quad(a: i64, b: i64, c: i64, d: i64) -> SideQuad {
        SideQuad::new(q(a, 1), q(b, 1), q(c, 1), q(d, 1)).unwrap()
    }

    #[test]
    fn circle_rule() {
        assert_eq!(circle_area_egyptian(&q(9, 1)).unwrap(), q(64, 1));
        assert_eq!(circle_area_egyptian(&q(1, 1)).unwrap(), q(64, 81));
        assert_eq!(circle_area_egyptian(&q(2, 1)).unwrap(), q(256, 81));
        assert!(circle_area_egyptian(&Rational::zero()).is_err());
        assert!(circle_area_egyptian(&q(-1, 1)).is_err());
    }

    #[test]
    fn pi_error() {
        let r = implied_pi_error();
        assert_eq!(r.historical, Bounds::exact(q(256, 81)));
        assert_eq!(r.historical.render(6), "256/81");
        assert_eq!(q(256, 81).to_decimal(6), "3.160494");
        let target = Rational::from_decimal_str("0.018901").unwrap();
        let tol = Rational::from_decimal_str("0.000005").unwrap();
        assert!((r.abs_error.lo() - &target).abs() < tol);
        assert!((r.abs_error.hi() - &target).abs() < tol);
        assert!(r.strictly_overestimates());
    }

    #[test]
    fn pi_comparison_signs() {
        let cmp = pi_comparisons();
        assert_eq!(cmp[1].1.abs_error.render(4), "-0.1416");
        assert_eq!(cmp[2].1.abs_error.render(4), "0.8584");
    }

    #[test]
    fn rectangles_and_squares() {
        assert_eq!(square_area(&q(1, 1)).unwrap(), q(1, 1));
        assert_eq!(rect_area(&q(3, 1), &q(4, 1)).unwrap(), q(12, 1));
        let side = q(8, 9) * q(9, 1);
        assert_eq!(square_area(&side).unwrap(), q(64, 1));
        assert!(rect_area(&q(0, 1), &q(4, 1)).is_err());
        assert!(square_area(&q(-2, 1)).is_err());
    }

    #[test]
    fn triangles() {
        assert_eq!(triangle_area(&q(4, 1), &q(3, 1)).unwrap(), q(6, 1));
        assert_eq!(triangle_area(&q(1, 1), &q(2, 1)).unwrap(), q(1, 1));
        assert_eq!(triangle_area(&q(10, 1), &q(10, 1)).unwrap(), q(50, 1));
        assert!(triangle_area(&q(0, 1), &q(1, 1)).is_err());

        assert_eq!(triangle_area_two_sides(&q(3, 1), &q(4, 1)).unwrap(), q(6, 1));
        assert_eq!(triangle_area_two_sides(&q(1, 1), &q(1, 1)).unwrap(), q(1, 2));
        // isoceles 5, 5, 6: true area 12 from height 4
        let two_side = triangle_area_two_sides(&q(5, 1), &q(5, 1)).unwrap();
        let true_area = triangle_area(&q(6, 1), &q(4, 1)).unwrap();
        assert_eq!((two_side.clone(), true_area.clone()), (q(25, 2), q(12, 1)));
        assert!(two_side > true_area);
    }

    #[test]
    fn trapezoids() {
        assert_eq!(trapezoid_area(&q(3, 1), &q(3, 1), &q(2, 1)).unwrap(), q(6, 1));
        assert_eq!(trapezoid_area(&q(4, 1), &q(0, 1), &q(3, 1)).unwrap(), q(6, 1));
        assert_eq!(
            trapezoid_area(&q(4, 1), &q(0, 1), &q(3, 1)).unwrap(),
            triangle_area(&q(4, 1), &q(3, 1)).unwrap()
        );
        assert_eq!(trapezoid_area(&q(6, 1), &q(4, 1), &q(20, 1)).unwrap(), q(100, 1));
        assert!(trapezoid_area(&q(0, 1), &q(0, 1), &q(2, 1)).is_err());
        assert!(trapezoid_area(&q(-1, 1), &q(2, 1), &q(2, 1)).is_err());
        assert!(trapezoid_area(&q(1, 1), &q(2, 1), &q(0, 1)).is_err());
    }

    #[test]
    fn edfu_examples() {
        assert_eq!(edfu_area(&quad(10, 10, 10, 10)), q(100, 1));
        assert_eq!(edfu_area(&quad(3, 4, 3, 4)), q(12, 1));
        assert_eq!(edfu_area(&quad(3, 4, 5, 0)), q(8, 1));
        for sq in [quad(10, 10, 10, 10), quad(3, 4, 3, 4), quad(3, 4, 5, 0)] {
            assert_eq!(edfu_area_via_diagonal_split(&sq), edfu_area(&sq));
        }
        assert!(SideQuad::new(q(3, 1), q(0, 1), q(5, 1), q(0, 1)).is_err());
        assert!(SideQuad::new(q(-3, 1), q(1, 1), q(5, 1), q(1, 1)).is_err());
        assert!(SideQuad::from_slice(&[q(3, 1), q(4, 1), q(5, 1)]).unwrap().is_triangle());
    }

    #[test]
    fn gerbert_rule() {
        let r = gerbert_isoceles_area(&q(5, 1), &q(6, 1)).unwrap();
        assert_eq!((r.historical.clone(), r.exact.clone()), (Bounds::exact(q(15, 1)), Bounds::exact(q(12, 1))));
        let r = gerbert_isoceles_area(&q(5, 1), &q(8, 1)).unwrap();
        assert_eq!((r.historical.clone(), r.exact.clone()), (Bounds::exact(q(20, 1)), Bounds::exact(q(12, 1))));
        let r = gerbert_isoceles_area(&q(5, 1), &Rational::zero()).unwrap();
        assert!(r.error_is_zero());
        assert!(r.historical.as_exact().unwrap().is_zero());
        // equilateral: irrational exact area, still an over-estimate
        let r = gerbert_isoceles_area(&q(2, 1), &q(2, 1)).unwrap();
        assert!(!r.exact.is_exact());
        assert_eq!(r.exact.render(12), "1.732050807569");
        assert!(r.strictly_overestimates());
        assert!(gerbert_isoceles_area(&q(1, 1), &q(2, 1)).is_err());
    }

    #[test]
    fn granary() {
        assert_eq!(granary_volume(&q(1, 1), &q(1, 1)).unwrap(), q(1, 1));
        let floor = square_area(&q(8, 1)).unwrap();
        assert_eq!(granary_volume(&floor, &q(10, 1)).unwrap(), q(640, 1));
        assert_eq!(granary_volume(&q(64, 81), &q(9, 1)).unwrap(), q(64, 9));
        assert!(granary_volume(&q(0, 1), &q(1, 1)).is_err());
    }

    fn side() -> impl Strategy<Value = Rational> {
        (1i64..1000, 1i64..50).prop_map(|(n, d)| q(n, d))
    }

    proptest! {
        #[test]
        fn diagonal_split_identity(a in side(), b in side(), c in side(), d in side()) {
            let sq = SideQuad::new(a, b, c, d).unwrap();
            prop_assert_eq!(edfu_area_via_diagonal_split(&sq), edfu_area(&sq));
        }

        #[test]
        fn circle_ratio_is_constant(d in side()) {
            let ratio = circle_area_egyptian(&d).unwrap().checked_div(&d.square()).unwrap();
            prop_assert_eq!(ratio, q(64, 81));
        }

        #[test]
        fn gerbert_never_under(leg in 1i64..200, base in 0i64..400) {
            prop_assume!(2 * leg > base);
            let r = gerbert_isoceles_area(&q(leg, 1), &q(base, 1)).unwrap();
            prop_assert!(r.overestimates());
        }
    }
}
