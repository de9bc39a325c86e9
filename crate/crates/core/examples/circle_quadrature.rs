// The circle as the square on 8/9 of its diameter, and the pi it implies.

use rhind::geometry::{circle_area_egyptian, implied_pi, pi_comparisons};
use rhind::Rational;

fn main() {
    for d in [1, 2, 9, 18] {
        let a = circle_area_egyptian(&Rational::from(d)).expect("area");
        println!("diameter {d:>2}: area {a}");
    }
    println!("\nimplied pi = {} ~ {}", implied_pi(), implied_pi().to_decimal(6));
    for (name, report) in pi_comparisons() {
        let r = report.record();
        println!("{name:<10} value {:<7} error {:>19}  relative {}", r.historical, r.abs_error, r.rel_error);
    }
}
