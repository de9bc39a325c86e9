// Ten shares of 10 differing by 1/8, and the ladder 7, 49, 343, 2401, 16807.

use rhind::arith::{decompose, DecompositionPolicy};
use rhind::equations::{arithmetic_shares, geometric_ladder, ladder_closed_form};
use rhind::Rational;

fn main() {
    let policy = DecompositionPolicy::default();
    let shares = arithmetic_shares(10, &Rational::from(10), &Rational::frac(1, 8)).expect("shares");
    for (i, s) in shares.iter().enumerate() {
        let form = decompose(s, &policy).expect("decompose");
        println!("share {:>2}: {:<6} {}", i + 1, s.to_string(), form);
    }
    let total: Rational = shares.iter().sum();
    println!("total {total}\n");

    let ladder = geometric_ladder(7, 5).expect("ladder");
    for t in &ladder.terms {
        println!("7^{} = {:>6}  {}", t.exponent, t.value.to_string(), t.label);
    }
    println!("sum {} (closed form {})", ladder.sum, ladder_closed_form(7, 5));
}
