// The 3-4-5 triangle and the other primitive right triangles.

use rhind::geometry::{is_right_triangle, rational_right_triangles, triangle_area_two_sides};
use rhind::Rational;

fn main() {
    let r = Rational::from;
    for (a, b, c) in [(3, 4, 5), (5, 12, 13), (1, 1, 1), (6, 8, 10)] {
        println!("{a}, {b}, {c}: right = {}", is_right_triangle(&r(a), &r(b), &r(c)).unwrap());
    }
    let half: Rational = "3/2".parse().unwrap();
    println!("3/2, 2, 5/2: right = {}", is_right_triangle(&half, &r(2), &"5/2".parse().unwrap()).unwrap());

    println!("\nprimitive triples with perimeter <= 100:");
    for (a, b, c) in rational_right_triangles(100).unwrap() {
        let area = triangle_area_two_sides(&r(a as i64), &r(b as i64)).unwrap();
        println!("  ({a}, {b}, {c})  perimeter {:>3}  area {area}", a + b + c);
    }
}
