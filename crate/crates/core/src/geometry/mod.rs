//! Area, volume and slope rules, each paired with an exact modern value.

mod area;
mod bounds;
mod polygon;
mod report;
mod seked;
mod triangles;

pub use area::{
    circle_area_egyptian, edfu_area, edfu_area_via_diagonal_split, gerbert_isoceles_area,
    granary_volume, implied_pi, implied_pi_error, pi_comparisons, rect_area, square_area,
    trapezoid_area, triangle_area, triangle_area_two_sides, SideQuad,
};
pub use bounds::{is_rational_square, pi_bounds, sqrt_bounds, Bounds};
pub use polygon::{
    edfu_error_report, exact_polygon_area, exact_side_quad, side_length_bounds, Point,
    PolygonCoords,
};
pub use report::{ErrorReport, ReportRecord, DEFAULT_DIGITS};
pub use seked::{
    seked_cotangent, seked_from, seked_to_base, seked_to_height, shadow_height, SekedSpec,
    DEFAULT_PARTS,
};
pub use triangles::{is_right_triangle, rational_right_triangles, Triple};
