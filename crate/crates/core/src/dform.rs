//! Stadia and the seams of pita-forms and D-forms.
//!
//! A stadium boundary is measured by arc length from the midpoint of its
//! bottom straight side, counterclockwise: bottom side, right cap, top side,
//! left cap. In a [`SeamPairing`] the second boundary is measured clockwise,
//! so the two arc lengths of a zip both increase.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{IconError, Result};
use crate::scalar::Scalar;
use crate::unroll::TemplatePiece;

/// Relative tolerance for perimeter and position comparisons.
pub const SEAM_TOL: f64 = 1e-9;

/// Rectangle of length `h` between two half disks of radius `r`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Stadium<T> {
    pub h: T,
    pub r: T,
}

impl<T: Scalar> Stadium<T> {
    pub fn new(h: T, r: T) -> Result<Self> {
        if !(h >= T::zero()) || !h.is_finite() {
            return Err(IconError::InvalidStadium(format!("h must be >= 0, got {h}")));
        }
        if !(r > T::zero()) || !r.is_finite() {
            return Err(IconError::InvalidStadium(format!("r must be > 0, got {r}")));
        }
        Ok(Self { h, r })
    }

    pub fn perimeter(&self) -> T {
        stadium_perimeter(self)
    }

    /// Arc-length positions of the two cap midpoints.
    pub fn cap_midpoints(&self) -> [T; 2] {
        let quarter = self.perimeter() / T::lit(4.0);
        [quarter, quarter * T::lit(3.0)]
    }

    /// Arc-length positions of the two straight-side midpoints.
    pub fn side_midpoints(&self) -> [T; 2] {
        [T::zero(), self.perimeter() / T::lit(2.0)]
    }

    fn congruent(&self, other: &Self) -> bool {
        let tol = T::lit(SEAM_TOL) * self.perimeter();
        (self.h - other.h).abs() <= tol && (self.r - other.r).abs() <= tol
    }
}

pub fn stadium_perimeter<T: Scalar>(st: &Stadium<T>) -> T {
    T::lit(2.0) * st.h + T::lit(2.0) * T::PI() * st.r
}

/// Factor `f` with `perimeter_b * f == perimeter_a`.
pub fn isoperimetric_scale<T: Scalar>(perimeter_a: T, perimeter_b: T) -> Result<T> {
    for p in [perimeter_a, perimeter_b] {
        if !(p > T::zero()) {
            return Err(IconError::NonPositive(p.to_f64_lossy()));
        }
    }
    Ok(perimeter_a / perimeter_b)
}

/// What a seam zips up to, where that is known.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SeamNote {
    /// The boundary is folded exactly in half onto itself.
    FlatFold,
    /// Cap midpoints on side midpoints with `h = pi r`: the mm (4,1)-icon.
    DualSphericon,
    /// Cap midpoints on side midpoints with `h > pi r`.
    FourFaceDie,
    /// Cap midpoints on side midpoints with `h < pi r`.
    RocksOnCurvedSurface,
}

impl fmt::Display for SeamNote {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SeamNote::FlatFold => "degenerate flat fold",
            SeamNote::DualSphericon => "the mm (4,1)-icon (dual sphericon)",
            SeamNote::FourFaceDie => "stable on one of its four semi-circular faces",
            SeamNote::RocksOnCurvedSurface => "rocks on its curved surface",
        })
    }
}

/// Stitch correspondence between two boundaries (or one boundary and itself).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SeamPairing<T> {
    /// `(s_a, s_b)`: `s_a` counterclockwise on the first boundary, `s_b`
    /// clockwise on the second, both unwrapped (they may exceed the perimeter).
    pub pairs: Vec<(T, T)>,
    /// Arc-length positions where an open seam ends; empty for a closed seam.
    pub endpoints: Vec<T>,
    pub perimeter: T,
    pub offset: T,
    pub note: Option<SeamNote>,
}

impl<T: Scalar> SeamPairing<T> {
    /// Largest `|ds_a - ds_b| / ds_a` over consecutive stitches.
    pub fn zip_mismatch(&self) -> T {
        self.pairs
            .windows(2)
            .map(|w| {
                let da = w[1].0 - w[0].0;
                let db = w[1].1 - w[0].1;
                (da - db).abs() / da
            })
            .fold(T::zero(), T::max)
    }

    pub fn is_monotone(&self) -> bool {
        self.pairs.windows(2).all(|w| w[1].0 > w[0].0 && w[1].1 > w[0].1)
    }

    /// Counterclockwise position of `s_b` on its boundary, in `[0, perimeter)`.
    pub fn position_b(&self, s_b: T) -> T {
        wrap(-s_b, self.perimeter)
    }

    pub fn zipped_length(&self) -> T {
        match (self.pairs.first(), self.pairs.last()) {
            (Some(a), Some(b)) => b.0 - a.0,
            _ => T::zero(),
        }
    }
}

fn wrap<T: Scalar>(s: T, p: T) -> T {
    let w = s % p;
    if w < T::zero() {
        w + p
    } else {
        w
    }
}

/// Distance from `s` to the nearest multiple of `period`.
fn off_grid<T: Scalar>(s: T, period: T) -> T {
    let w = wrap(s, period);
    w.min(period - w)
}

fn samples_along<T: Scalar>(length: T, samples: usize) -> Result<Vec<T>> {
    if samples < 2 {
        return Err(IconError::InvalidSpec(format!("need at least 2 samples, got {samples}")));
    }
    let step = length / T::from_usize_lossy(samples - 1);
    Ok((0..samples).map(|i| step * T::from_usize_lossy(i)).collect())
}

/// Zips the boundary of `st` to itself from `start` in both directions.
///
/// The seam ends at `start` and `start + P/2`. Starting exactly at a cap or
/// side midpoint folds the stadium flat, which is flagged rather than refused.
pub fn pita_seam<T: Scalar>(st: &Stadium<T>, start: T, samples: usize) -> Result<SeamPairing<T>> {
    let st = Stadium::new(st.h, st.r)?;
    let p = st.perimeter();
    if !(start >= T::zero() && start < p) {
        return Err(IconError::InvalidSpec(format!("seam start {start} outside [0, {p})")));
    }
    let half = p / T::lit(2.0);
    let steps = samples_along(half, samples)?;
    let back = p - start;
    let pairs = steps.iter().map(|&s| (start + s, back + s)).collect();
    // every midpoint is a multiple of P/4 from the origin
    let flat = off_grid(start, p / T::lit(4.0)) <= T::lit(SEAM_TOL) * p;
    Ok(SeamPairing {
        pairs,
        endpoints: vec![start, start + half],
        perimeter: p,
        offset: start,
        note: flat.then_some(SeamNote::FlatFold),
    })
}

/// What joining two congruent stadia with `offset` gives, if it is one of
/// the symmetric cases.
pub fn symmetric_attachment<T: Scalar>(a: &Stadium<T>, b: &Stadium<T>, offset: T) -> Option<SeamNote> {
    if !a.congruent(b) {
        return None;
    }
    let p = a.perimeter();
    let tol = T::lit(SEAM_TOL) * p;
    let half = p / T::lit(2.0);
    if off_grid(offset, half) <= tol {
        return Some(SeamNote::FlatFold);
    }
    if off_grid(offset - p / T::lit(4.0), half) > tol {
        return None;
    }
    let pi_r = T::PI() * a.r;
    Some(if (a.h - pi_r).abs() <= tol {
        SeamNote::DualSphericon
    } else if a.h > pi_r {
        SeamNote::FourFaceDie
    } else {
        SeamNote::RocksOnCurvedSurface
    })
}

/// Zips two stadia of equal perimeter along their whole boundaries, point
/// `s` of `a` to point `s + offset` of `b`.
pub fn dform_seam<T: Scalar>(a: &Stadium<T>, b: &Stadium<T>, offset: T, samples: usize) -> Result<SeamPairing<T>> {
    for st in [a, b] {
        Stadium::new(st.h, st.r)?;
        if st.h.is_zero() {
            return Err(IconError::InvalidStadium("a circle (h = 0) cannot be D-formed".into()));
        }
    }
    let (pa, pb) = (a.perimeter(), b.perimeter());
    if (pa - pb).abs() > T::lit(SEAM_TOL) * pa.max(pb) {
        return Err(IconError::IsoperimetryViolation { a: pa.to_f64_lossy(), b: pb.to_f64_lossy() });
    }
    let offset = wrap(offset, pb);
    let pairs = samples_along(pa, samples)?.into_iter().map(|s| (s, s + offset)).collect();
    Ok(SeamPairing { pairs, endpoints: Vec::new(), perimeter: pa, offset, note: symmetric_attachment(a, b, offset) })
}

/// A template piece relaxed into the stadium with the same perimeter and caps.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RelaxedStadium<T> {
    pub stadium: Stadium<T>,
    /// `h / (pi r)`.
    pub ratio: T,
}

pub fn relax_to_stadium<T: Scalar>(piece: &TemplatePiece<T>) -> Result<RelaxedStadium<T>> {
    let caps = piece.caps();
    let [i, j] = caps[..] else {
        return Err(IconError::NoCaps);
    };
    let (ra, rb) = (
        piece.boundary[i].geometry.radius().ok_or(IconError::NoCaps)?,
        piece.boundary[j].geometry.radius().ok_or(IconError::NoCaps)?,
    );
    if (ra - rb).abs() > T::lit(SEAM_TOL) * ra {
        return Err(IconError::NoCaps);
    }
    let r = ra;
    let pi_r = T::PI() * r;
    let h = (piece.boundary_length() - pi_r - pi_r) / T::lit(2.0);
    Ok(RelaxedStadium { stadium: Stadium::new(h, r)?, ratio: h / pi_r })
}
