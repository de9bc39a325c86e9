// Sharing 1, 3, 6, 7, 8 and 9 loaves among 10 men, with and without the 2/3 sign.

use rhind::arith::{divide_loaves, sequem_complete, DecompositionPolicy, SequemMode};
use rhind::Rational;

fn main() {
    let policy = DecompositionPolicy::default();
    let plain = policy.clone().with_two_thirds(false);
    for loaves in [1, 3, 6, 7, 8, 9] {
        let share = divide_loaves(loaves, 10, &policy).expect("share");
        let unit_only = divide_loaves(loaves, 10, &plain).expect("share");
        println!("{loaves:>2} loaves / 10 men: {:<22} | {unit_only}", share.to_string());
    }

    // what completes 2/3 + 1/30 to one?
    let written = "2/3 + 1/30";
    let given: Rational = written.parse().expect("sum");
    let rest = sequem_complete(&given, &Rational::one(), SequemMode::Additive).expect("sequem");
    let rest_form = rhind::arith::decompose(&rest, &policy).expect("decompose");
    println!("\n{written} + {rest_form} = 1");
}
