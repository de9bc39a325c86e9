//! Seeded random campaigns that pit the historical rules against their oracles.
//!
//! Every campaign is a pure function of its seed; case `i` draws from its own
//! ChaCha stream, so cases can be evaluated in any order or in parallel.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::geometry::{
    edfu_area, edfu_area_via_diagonal_split, edfu_error_report, exact_polygon_area, PolygonCoords,
    SideQuad,
};
use crate::rational::Rational;

/// Independent generator for case `index` of a campaign.
pub fn case_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn cross(o: (i64, i64), a: (i64, i64), b: (i64, i64)) -> i64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

/// Strict convex hull, counter-clockwise (Andrew's monotone chain).
fn convex_hull(mut pts: Vec<(i64, i64)>) -> Vec<(i64, i64)> {
    pts.sort_unstable();
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let mut hull: Vec<(i64, i64)> = Vec::with_capacity(2 * pts.len());
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &(i64, i64)>> = if pass == 0 {
            Box::new(pts.iter())
        } else {
            Box::new(pts.iter().rev())
        };
        for &p in iter {
            while hull.len() >= start + 2
                && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0
            {
                hull.pop();
            }
            hull.push(p);
        }
        hull.pop();
    }
    hull
}

/// A convex quadrilateral with integer corners in `[-extent, extent]²`,
/// no three corners collinear.
pub fn random_convex_quad<R: Rng>(rng: &mut R, extent: i64) -> PolygonCoords {
    loop {
        let pts: Vec<(i64, i64)> = (0..4)
            .map(|_| (rng.gen_range(-extent..=extent), rng.gen_range(-extent..=extent)))
            .collect();
        let hull = convex_hull(pts);
        if hull.len() == 4 {
            return PolygonCoords::from_pairs(&hull).expect("strictly convex hull is simple");
        }
    }
}

/// An axis-aligned rectangle with integer corners.
pub fn random_axis_rectangle<R: Rng>(rng: &mut R, extent: i64) -> PolygonCoords {
    let x = rng.gen_range(-extent..extent);
    let y = rng.gen_range(-extent..extent);
    let w = rng.gen_range(1..=extent);
    let h = rng.gen_range(1..=extent);
    PolygonCoords::from_pairs(&[(x, y), (x + w, y), (x + w, y + h), (x, y + h)])
        .expect("rectangle is simple")
}

/// A side quadrilateral with positive rational sides.
pub fn random_side_quad<R: Rng>(rng: &mut R) -> SideQuad {
    let mut side = || Rational::frac(rng.gen_range(1..=10_000), rng.gen_range(1..=100));
    SideQuad::new(side(), side(), side(), side()).expect("positive sides")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdfuCase {
    pub polygon: String,
    pub is_rectangle: bool,
    pub historical: String,
    pub exact: Rational,
    pub overestimates: bool,
    pub zero_error: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdfuCampaign {
    pub seed: u64,
    pub cases: Vec<EdfuCase>,
}

impl EdfuCampaign {
    /// Over-estimation held on every case.
    pub fn all_overestimate(&self) -> bool {
        self.cases.iter().all(|c| c.overestimates)
    }

    /// The error was zero on exactly the rectangles.
    pub fn zero_exactly_on_rectangles(&self) -> bool {
        self.cases.iter().all(|c| c.zero_error == c.is_rectangle)
    }

    pub fn rectangle_count(&self) -> usize {
        self.cases.iter().filter(|c| c.is_rectangle).count()
    }
}

fn edfu_case(p: &PolygonCoords) -> Result<EdfuCase> {
    let report = edfu_error_report(p)?;
    Ok(EdfuCase {
        polygon: p.to_string(),
        is_rectangle: p.is_rectangle(),
        historical: report.historical.render(report.digits),
        exact: exact_polygon_area(p),
        overestimates: report.overestimates(),
        zero_error: report.error_is_zero(),
    })
}

/// `count` random convex quadrilaterals followed by `rectangles` constructed
/// axis-aligned rectangles, each run through the Edfu rule and the shoelace oracle.
pub fn edfu_campaign(seed: u64, count: usize, rectangles: usize) -> Result<EdfuCampaign> {
    let cases = (0..count + rectangles)
        .into_par_iter()
        .map(|i| {
            let mut rng = case_rng(seed, i as u64);
            let p = if i < count {
                random_convex_quad(&mut rng, 50)
            } else {
                random_axis_rectangle(&mut rng, 50)
            };
            edfu_case(&p)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(EdfuCampaign { seed, cases })
}

/// How many of `count` random side quadrilaterals satisfy the diagonal-split identity.
pub fn diagonal_split_campaign(seed: u64, count: usize) -> usize {
    (0..count)
        .into_par_iter()
        .filter(|&i| {
            let q = random_side_quad(&mut case_rng(seed, i as u64));
            edfu_area_via_diagonal_split(&q) == edfu_area(&q)
        })
        .count()
}
