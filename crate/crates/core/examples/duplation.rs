// Multiplication and division by doubling.

use rhind::arith::{duplation_divide, duplation_multiply};

fn main() {
    let t = duplation_multiply(13, 12).unwrap();
    print!("{}", t.render_text());
    println!("rows used: {:?}\n", t.selected_powers());

    let d = duplation_divide(19, 8).unwrap();
    println!("19 / 8 = {} + {} = {}", d.quotient, d.remainder, d.value());

    let t = duplation_multiply(80, 80).unwrap();
    println!("80 x 80 = {} ({} doublings)", t.product, t.rows.len() - 1);
}
