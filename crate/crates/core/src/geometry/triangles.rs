//! Right triangles with rational sides, starting from the rope-stretchers' 3-4-5.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Whether the sides form a right triangle: the two smaller squares sum to
/// the largest. Sides that do not form a proper triangle are an error.
pub fn is_right_triangle(a: &Rational, b: &Rational, c: &Rational) -> Result<bool> {
    let mut sides = [a.clone(), b.clone(), c.clone()];
    sides.sort();
    let [x, y, z] = &sides;
    if !x.is_positive() || &(x + y) <= z {
        return Err(Error::NotATriangle(a.to_string(), b.to_string(), c.to_string()));
    }
    Ok(x.square() + y.square() == z.square())
}

/// A primitive Pythagorean triple `a < b < c`.
pub type Triple = (u64, u64, u64);

/// Every primitive triple with perimeter at most `perimeter_limit`, ordered
/// by perimeter and then by the shortest side.
pub fn rational_right_triangles(perimeter_limit: u64) -> Result<Vec<Triple>> {
    if perimeter_limit < 12 {
        return Err(Error::Invalid(format!(
            "perimeter limit must be at least 12, got {perimeter_limit}"
        )));
    }
    let mut out = Vec::new();
    // Euclid: m > n > 0, coprime, opposite parity; perimeter 2m(m + n)
    let mut m = 2u64;
    while 2 * m * (m + 1) <= perimeter_limit {
        for n in 1..m {
            if (m - n) % 2 == 0 || m.gcd(&n) != 1 {
                continue;
            }
            let perimeter = 2 * m * (m + n);
            if perimeter > perimeter_limit {
                break;
            }
            let odd_leg = m * m - n * n;
            let even_leg = 2 * m * n;
            out.push((odd_leg.min(even_leg), odd_leg.max(even_leg), m * m + n * n));
        }
        m += 1;
    }
    out.sort_by_key(|&(a, b, c)| (a + b + c, a));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn right_angle_checks() {
        assert!(is_right_triangle(&r(3), &r(4), &r(5)).unwrap());
        assert!(is_right_triangle(&r(5), &r(3), &r(4)).unwrap());
        assert!(!is_right_triangle(&r(1), &r(1), &r(1)).unwrap());
        assert!(is_right_triangle(&r(5), &r(12), &r(13)).unwrap());
        assert!(is_right_triangle(&Rational::frac(3, 2), &r(2), &Rational::frac(5, 2)).unwrap());
        assert!(is_right_triangle(&r(1), &r(2), &r(3)).is_err());
        assert!(is_right_triangle(&r(0), &r(2), &r(2)).is_err());
        assert!(is_right_triangle(&r(1), &r(1), &r(5)).is_err());
    }

    #[test]
    fn triples() {
        assert_eq!(rational_right_triangles(12).unwrap(), vec![(3, 4, 5)]);
        assert_eq!(rational_right_triangles(30).unwrap(), vec![(3, 4, 5), (5, 12, 13)]);
        assert!(rational_right_triangles(11).is_err());
        let many = rational_right_triangles(200).unwrap();
        assert!(many.contains(&(8, 15, 17)));
        assert!(many.contains(&(20, 21, 29)));
    }
}
