// The Edfu field rule: products of the means of opposite sides. Exact on
// rectangles, too large everywhere else.

use rhind::campaign::{diagonal_split_campaign, edfu_campaign};
use rhind::geometry::{edfu_area, edfu_error_report, PolygonCoords, SideQuad};
use rhind::Rational;

fn main() {
    let q = |a, b, c, d| SideQuad::new(Rational::from(a), Rational::from(b), Rational::from(c), Rational::from(d)).unwrap();
    println!("sides 10,10,10,10 -> {}", edfu_area(&q(10, 10, 10, 10)));
    println!("sides 3,4,3,4     -> {}", edfu_area(&q(3, 4, 3, 4)));
    println!("sides 3,4,5,0     -> {}", edfu_area(&q(3, 4, 5, 0)));

    let triangle: PolygonCoords = "0,0;3,0;3,4".parse().unwrap();
    println!("\n3-4-5 triangle as a four-sided field:");
    print!("{}", edfu_error_report(&triangle).unwrap().render_text());

    let kite: PolygonCoords = "0,0;2,-1;5,0;2,1".parse().unwrap();
    println!("\nkite {kite} (irrational sides):");
    print!("{}", edfu_error_report(&kite).unwrap().render_text());

    let seed = 2024;
    let c = edfu_campaign(seed, 1000, 50).unwrap();
    println!(
        "\nseed {seed}: {} quadrilaterals, all over-estimated: {}, zero error exactly on the {} rectangles: {}",
        c.cases.len(),
        c.all_overestimate(),
        c.rectangle_count(),
        c.zero_exactly_on_rectangles()
    );
    println!("diagonal-split identity held on {}/500 side quads", diagonal_split_campaign(seed, 500));
}
