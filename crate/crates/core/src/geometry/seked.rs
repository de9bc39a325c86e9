//! Pyramid slopes measured in seked: horizontal run, in palms, per cubit of rise.
//! Any one of base, height and seked follows from the other two.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Palms in a royal cubit.
pub const DEFAULT_PARTS: u32 = 7;

fn positive(what: &'static str, x: &Rational) -> Result<()> {
    if x.is_positive() {
        Ok(())
    } else {
        Err(Error::NonPositive {
            what,
            value: x.to_string(),
        })
    }
}

fn parts_ok(parts: u32) -> Result<Rational> {
    if parts == 0 {
        return Err(Error::NonPositive {
            what: "parts per unit",
            value: "0".into(),
        });
    }
    Ok(Rational::from(parts))
}

/// `(base / 2) / height × parts`.
pub fn seked_from(base: &Rational, height: &Rational, parts: u32) -> Result<Rational> {
    positive("base", base)?;
    positive("height", height)?;
    let parts = parts_ok(parts)?;
    Ok((base * Rational::frac(1, 2)).checked_div(height)? * parts)
}

pub fn seked_to_height(base: &Rational, seked: &Rational, parts: u32) -> Result<Rational> {
    positive("base", base)?;
    positive("seked", seked)?;
    let parts = parts_ok(parts)?;
    (base * Rational::frac(1, 2) * parts).checked_div(seked)
}

pub fn seked_to_base(height: &Rational, seked: &Rational, parts: u32) -> Result<Rational> {
    positive("height", height)?;
    positive("seked", seked)?;
    let parts = parts_ok(parts)?;
    Ok(Rational::from(2) * height * seked.checked_div(&parts)?)
}

/// The seked as a pure ratio: the cotangent of the face's inclination to the base.
pub fn seked_cotangent(seked: &Rational, parts: u32) -> Result<Rational> {
    if seked.is_negative() {
        return Err(Error::Negative {
            what: "seked",
            value: seked.to_string(),
        });
    }
    seked.checked_div(&parts_ok(parts)?)
}

/// A square pyramid's base side, height and seked, kept consistent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SekedSpec {
    pub base: Rational,
    pub height: Rational,
    pub parts_per_unit: u32,
    pub seked: Rational,
}

impl SekedSpec {
    pub fn from_base_height(base: Rational, height: Rational, parts: u32) -> Result<Self> {
        let seked = seked_from(&base, &height, parts)?;
        Ok(SekedSpec {
            base,
            height,
            parts_per_unit: parts,
            seked,
        })
    }

    pub fn from_base_seked(base: Rational, seked: Rational, parts: u32) -> Result<Self> {
        let height = seked_to_height(&base, &seked, parts)?;
        Ok(SekedSpec {
            base,
            height,
            parts_per_unit: parts,
            seked,
        })
    }

    pub fn from_height_seked(height: Rational, seked: Rational, parts: u32) -> Result<Self> {
        let base = seked_to_base(&height, &seked, parts)?;
        Ok(SekedSpec {
            base,
            height,
            parts_per_unit: parts,
            seked,
        })
    }

    pub fn is_consistent(&self) -> bool {
        seked_from(&self.base, &self.height, self.parts_per_unit)
            .is_ok_and(|s| s == self.seked)
    }

    pub fn cotangent(&self) -> Rational {
        seked_cotangent(&self.seked, self.parts_per_unit).expect("valid spec")
    }
}

/// Height of an object from its shadow, by similar triangles with a reference
/// stick: `object_shadow × reference_height / reference_shadow`.
pub fn shadow_height(
    object_shadow: &Rational,
    reference_height: &Rational,
    reference_shadow: &Rational,
) -> Result<Rational> {
    if object_shadow.is_negative() {
        return Err(Error::Negative {
            what: "shadow",
            value: object_shadow.to_string(),
        });
    }
    positive("reference height", reference_height)?;
    if reference_shadow.is_zero() {
        return Err(Error::DivisionByZero);
    }
    positive("reference shadow", reference_shadow)?;
    (object_shadow * reference_height).checked_div(reference_shadow)
}
