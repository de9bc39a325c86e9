// Pyramid slopes in seked, each of base, height and seked from the other two,
// plus heights from shadows.

use rhind::geometry::{seked_cotangent, shadow_height, SekedSpec, DEFAULT_PARTS};
use rhind::Rational;

fn main() {
    let r = Rational::from;
    let spec = SekedSpec::from_base_height(r(360), r(250), DEFAULT_PARTS).unwrap();
    println!("base 360, height 250 -> seked {} palms (~{})", spec.seked, spec.seked.to_decimal(2));
    println!("cotangent of the face: {}", seked_cotangent(&spec.seked, DEFAULT_PARTS).unwrap());

    let back = SekedSpec::from_base_seked(r(360), spec.seked.clone(), DEFAULT_PARTS).unwrap();
    println!("base 360, seked {} -> height {}", spec.seked, back.height);
    let base = SekedSpec::from_height_seked(r(250), spec.seked.clone(), DEFAULT_PARTS).unwrap();
    println!("height 250, seked {} -> base {}", spec.seked, base.base);

    let steep = SekedSpec::from_base_height(r(2), r(1), DEFAULT_PARTS).unwrap();
    println!("45 degrees: seked {}", steep.seked);

    let h = shadow_height(&r(100), &r(2), &r(1)).unwrap();
    println!("\nshadow 100, stick 2 casting 1 -> height {h}");
}
