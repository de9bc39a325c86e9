// "A quantity and its seventh make 19": the direct solution and the scribe's
// false position.

use rhind::arith::{decompose, DecompositionPolicy};
use rhind::equations::{convenient_guess, solve_hau, solve_hau_false_position, HauProblem};
use rhind::Rational;

fn main() {
    let p = HauProblem::from_terms(&[Rational::one(), Rational::frac(1, 7)], Rational::from(19))
        .expect("problem");
    let x = solve_hau(&p).expect("solution");
    let form = decompose(&x, &DecompositionPolicy::default()).expect("decompose");
    println!("{} x = {}  =>  x = {x} = {form}", p.multiplier(), p.target());

    let guess = convenient_guess(&p);
    let trace = solve_hau_false_position(&p, &guess).expect("trace");
    println!("\nfalse position from {guess}:");
    print!("{}", trace.render_text(&p));
    assert_eq!(trace.answer, x);

    // any guess lands on the same answer
    for g in [1, 2, 14, 100] {
        let t = solve_hau_false_position(&p, &Rational::from(g)).expect("trace");
        println!("guess {g:>3}: factor {:<8} answer {}", t.factor.to_string(), t.answer);
    }
    println!("check: {}", p.is_solved_by(&x));
}
