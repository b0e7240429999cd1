use serde::{Deserialize, Serialize};

use crate::geom::Vec2;
use crate::profile::{Band, BandKind, IconSpec};
use crate::scalar::Scalar;
use crate::twistglue::Side;

use super::element::{BoundaryElement, Element, SeamSource};

/// Flat shape of half a band (180 degrees of revolution).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub enum Development<T> {
    /// Annulus sector centred on the cone apex; `inner_radius` is zero for a
    /// cone that reaches the axis and for flat disks.
    Sector { inner_radius: T, outer_radius: T, angle: T },
    Rectangle { width: T, height: T },
}

pub fn unroll_band_half<T: Scalar>(band: &Band<T>) -> Development<T> {
    match band.sine_ratio() {
        None => Development::Rectangle { width: T::PI() * band.rho0, height: band.slant },
        Some(c) => Development::Sector {
            inner_radius: band.apex_distance_s0.min(band.apex_distance_s1),
            outer_radius: band.apex_distance_s0.max(band.apex_distance_s1),
            angle: T::PI() * c,
        },
    }
}

/// A developed half-band in its own frame, boundary counterclockwise.
#[derive(Clone, Debug)]
pub(crate) struct Patch<T> {
    pub side: Side,
    pub band: u32,
    pub elements: Vec<BoundaryElement<T>>,
}

/// Develops half-band `b` of `side`.
///
/// The half is parameterised by azimuth `alpha in [0, pi]` and `u in [0, 1]`
/// from profile vertex `b` to `b + 1`. Seen from outside, `(d/dalpha, d/du)`
/// is clockwise on side A and counterclockwise on side B (whose azimuth runs
/// through `y <= 0`); the development is reflected where needed so that its
/// Jacobian agrees, and side B loops are then reversed so every patch ends up
/// counterclockwise with outward faces up.
pub(crate) fn develop_patch<T: Scalar>(spec: &IconSpec<T>, bands: &[Band<T>], side: Side, b: u32) -> Patch<T> {
    let frame = spec.frame();
    let band = &bands[b as usize];
    let pi = T::PI();
    let np = frame.point_count();
    let shift = match side {
        Side::A => 0,
        Side::B => np - 2 * spec.k_mod(),
    };
    let global = |i: u32| (i + shift) % np;
    let (i0, i1) = (frame.profile_point(b), frame.profile_point(b + 1));
    let ids = [i0, i1, frame.mirror_point(i1), frame.mirror_point(i0)].map(global);
    let (e0, e1) = frame.band_edges(b);

    let (c, reflect) = match band.sine_ratio() {
        None => (None, side == Side::B),
        Some(c) => {
            let growing = band.apex_distance_s1 > band.apex_distance_s0;
            (Some(c), growing == (side == Side::B))
        }
    };
    // corners c0..c3 and the two rims, in the side-A loop order
    let (corners, bottom, top) = match c {
        Some(c) => {
            let (s0, s1) = (band.apex_distance_s0, band.apex_distance_s1);
            let sweep = pi * c;
            let o = Vec2::new(T::zero(), T::zero());
            (
                [Vec2::polar(s0, T::zero()), Vec2::polar(s1, T::zero()), Vec2::polar(s1, sweep), Vec2::polar(s0, sweep)],
                Element::Arc { center: o, radius: s1, start_angle: T::zero(), sweep },
                Element::Arc { center: o, radius: s0, start_angle: sweep, sweep: -sweep },
            )
        }
        None => {
            let w = pi * band.rho0;
            let h = band.slant;
            let p = [Vec2::new(T::zero(), T::zero()), Vec2::new(T::zero(), -h), Vec2::new(w, -h), Vec2::new(w, T::zero())];
            (p, Element::Segment { start: p[1], end: p[2] }, Element::Segment { start: p[3], end: p[0] })
        }
    };

    let edge = |from: usize, to: usize, source: SeamSource, geometry: Element<T>| BoundaryElement {
        geometry,
        source,
        start_id: ids[from],
        end_id: ids[to],
    };
    let mut elements = vec![edge(0, 1, SeamSource::Cut { side, edge: e0 }, Element::Segment { start: corners[0], end: corners[1] })];
    if band.rho1 > T::zero() {
        elements.push(edge(1, 2, SeamSource::Rim { side, profile_vertex: b + 1 }, bottom));
    }
    elements.push(edge(2, 3, SeamSource::Cut { side, edge: e1 }, Element::Segment { start: corners[2], end: corners[3] }));
    if band.rho0 > T::zero() {
        elements.push(edge(3, 0, SeamSource::Rim { side, profile_vertex: b }, top));
    }

    if reflect {
        for e in &mut elements {
            e.geometry = e.geometry.reflected();
        }
    }
    if side == Side::B {
        elements = elements.iter().rev().map(BoundaryElement::reversed).collect();
    }
    if band.kind == BandKind::FlatDiskOrAnnulus && e0 == e1 {
        merge_diameter(&mut elements);
    }
    Patch { side, band: b, elements }
}

/// Joins the two radii of a half disk into the single polygon edge they came from.
fn merge_diameter<T: Scalar>(elements: &mut Vec<BoundaryElement<T>>) {
    let n = elements.len();
    let is_cut = |e: &BoundaryElement<T>| matches!(e.source, SeamSource::Cut { .. });
    let Some(i) = (0..n).find(|&i| is_cut(&elements[i]) && is_cut(&elements[(i + 1) % n])) else {
        return;
    };
    let (a, b) = (elements[i], elements[(i + 1) % n]);
    let merged = BoundaryElement {
        geometry: Element::Segment { start: a.geometry.start(), end: b.geometry.end() },
        source: a.source,
        start_id: a.start_id,
        end_id: b.end_id,
    };
    elements[i] = merged;
    elements.remove((i + 1) % n);
}
