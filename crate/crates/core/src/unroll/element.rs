use serde::{Deserialize, Serialize};

use crate::geom::{Rigid2, Vec2};
use crate::scalar::Scalar;
use crate::twistglue::Side;

/// A straight segment or a circular arc, placed in the template plane.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub enum Element<T> {
    Segment { start: Vec2<T>, end: Vec2<T> },
    /// Counterclockwise for positive `sweep` (radians).
    Arc { center: Vec2<T>, radius: T, start_angle: T, sweep: T },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Turn {
    Left,
    Right,
    Straight,
}

impl<T: Scalar> Element<T> {
    pub fn start(&self) -> Vec2<T> {
        match *self {
            Element::Segment { start, .. } => start,
            Element::Arc { center, radius, start_angle, .. } => center + Vec2::polar(radius, start_angle),
        }
    }

    pub fn end(&self) -> Vec2<T> {
        match *self {
            Element::Segment { end, .. } => end,
            Element::Arc { center, radius, start_angle, sweep } => {
                center + Vec2::polar(radius, start_angle + sweep)
            }
        }
    }

    pub fn length(&self) -> T {
        match *self {
            Element::Segment { start, end } => (end - start).norm(),
            Element::Arc { radius, sweep, .. } => radius * sweep.abs(),
        }
    }

    pub fn midpoint(&self) -> Vec2<T> {
        let half = T::lit(0.5);
        match *self {
            Element::Segment { start, end } => (start + end) * half,
            Element::Arc { center, radius, start_angle, sweep } => {
                center + Vec2::polar(radius, start_angle + sweep * half)
            }
        }
    }

    /// Unit tangent at the midpoint, in the direction of travel.
    pub fn mid_tangent(&self) -> Vec2<T> {
        match *self {
            Element::Segment { start, end } => {
                let d = end - start;
                d * (T::one() / d.norm())
            }
            Element::Arc { start_angle, sweep, .. } => {
                let a = start_angle + sweep * T::lit(0.5);
                let t = Vec2::new(-a.sin(), a.cos());
                if sweep < T::zero() {
                    -t
                } else {
                    t
                }
            }
        }
    }

    pub fn turn(&self) -> Turn {
        match *self {
            Element::Segment { .. } => Turn::Straight,
            Element::Arc { sweep, .. } if sweep > T::zero() => Turn::Left,
            Element::Arc { .. } => Turn::Right,
        }
    }

    pub fn radius(&self) -> Option<T> {
        match *self {
            Element::Segment { .. } => None,
            Element::Arc { radius, .. } => Some(radius),
        }
    }

    pub fn sweep(&self) -> Option<T> {
        match *self {
            Element::Segment { .. } => None,
            Element::Arc { sweep, .. } => Some(sweep),
        }
    }

    /// Whether this is an arc of half a turn, up to a few ulps.
    pub fn is_semicircle(&self) -> bool {
        match *self {
            Element::Segment { .. } => false,
            Element::Arc { sweep, .. } => {
                (sweep.abs() - T::PI()).abs() <= T::lit(64.0) * T::epsilon() * T::PI()
            }
        }
    }

    pub fn reversed(&self) -> Self {
        match *self {
            Element::Segment { start, end } => Element::Segment { start: end, end: start },
            Element::Arc { center, radius, start_angle, sweep } => {
                Element::Arc { center, radius, start_angle: start_angle + sweep, sweep: -sweep }
            }
        }
    }

    /// Mirror image in the x-axis.
    pub fn reflected(&self) -> Self {
        let flip = |p: Vec2<T>| Vec2::new(p.x, -p.y);
        match *self {
            Element::Segment { start, end } => Element::Segment { start: flip(start), end: flip(end) },
            Element::Arc { center, radius, start_angle, sweep } => {
                Element::Arc { center: flip(center), radius, start_angle: -start_angle, sweep: -sweep }
            }
        }
    }

    pub fn transformed(&self, m: &Rigid2<T>) -> Self {
        match *self {
            Element::Segment { start, end } => Element::Segment { start: m.apply(start), end: m.apply(end) },
            Element::Arc { center, radius, start_angle, sweep } => {
                Element::Arc { center: m.apply(center), radius, start_angle: start_angle + m.angle, sweep }
            }
        }
    }

    /// Contribution `1/2 * integral(x dy - y dx)` to the enclosed area.
    pub fn green_area(&self) -> T {
        let half = T::lit(0.5);
        match *self {
            Element::Segment { start, end } => half * start.cross(end),
            Element::Arc { center, radius, start_angle, sweep } => {
                let (a0, a1) = (start_angle, start_angle + sweep);
                half * (radius * center.x * (a1.sin() - a0.sin()) - radius * center.y * (a1.cos() - a0.cos())
                    + radius * radius * sweep)
            }
        }
    }

    /// Axis-aligned bounds `(min, max)`, including arc extremes.
    pub fn bounds(&self) -> (Vec2<T>, Vec2<T>) {
        let (a, b) = (self.start(), self.end());
        let mut lo = Vec2::new(a.x.min(b.x), a.y.min(b.y));
        let mut hi = Vec2::new(a.x.max(b.x), a.y.max(b.y));
        if let Element::Arc { center, radius, start_angle, sweep } = *self {
            let (from, to) = if sweep >= T::zero() {
                (start_angle, start_angle + sweep)
            } else {
                (start_angle + sweep, start_angle)
            };
            let quarter = T::FRAC_PI_2();
            let mut q = (from / quarter).ceil();
            while q * quarter <= to {
                let p = center + Vec2::polar(radius, q * quarter);
                lo = Vec2::new(lo.x.min(p.x), lo.y.min(p.y));
                hi = Vec2::new(hi.x.max(p.x), hi.y.max(p.y));
                q = q + T::one();
            }
        }
        (lo, hi)
    }
}

/// Which curve of the icon a template boundary element is sewn along.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SeamSource {
    /// Half of the vertex circle at `profile_vertex` on one half of the cut solid.
    Rim { side: Side, profile_vertex: u32 },
    /// Polygon edge `edge` (numbered in the frame of `side`) on the cut plane,
    /// left open where a ring of surface had to be cut to lie flat.
    Cut { side: Side, edge: u32 },
}

/// One element of a piece boundary and the cut-plane points it joins.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundaryElement<T> {
    pub geometry: Element<T>,
    pub source: SeamSource,
    /// Boundary point ids (`0..2n`, see `PolygonFrame`) of the assembled icon.
    pub start_id: u32,
    pub end_id: u32,
}

impl<T: Scalar> BoundaryElement<T> {
    pub(crate) fn reversed(&self) -> Self {
        Self { geometry: self.geometry.reversed(), start_id: self.end_id, end_id: self.start_id, ..*self }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ElementRef {
    pub piece: usize,
    pub element: usize,
}

/// Which element a boundary element is sewn to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeamLabel {
    pub id: u32,
    /// `true` for the first of the two mates in piece/chain order.
    pub first: bool,
    pub mate: ElementRef,
    /// The mates run in opposite directions when both boundaries are
    /// walked counterclockwise (the usual case for a proper fold).
    pub reversed: bool,
}

impl SeamLabel {
    pub fn text(&self) -> String {
        format!("seam-{}-{}", self.id, if self.first { 'a' } else { 'b' })
    }
}

/// Where to begin sewing: an arrow pointing at `position` from inside the piece.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct StartMarker<T> {
    pub position: Vec2<T>,
    /// Unit vector pointing into the piece.
    pub inward: Vec2<T>,
    pub element: usize,
}

/// A half of one band of the solid, as it appears inside a piece.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatchRef {
    pub side: Side,
    pub band: u32,
}

/// Flat development of one smooth surface of an icon.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TemplatePiece<T> {
    /// Half-bands in the order they are chained together.
    pub patches: Vec<PatchRef>,
    /// Counterclockwise boundary loop.
    pub boundary: Vec<BoundaryElement<T>>,
    /// Parallel to `boundary`.
    pub seam_labels: Vec<SeamLabel>,
    pub start_marker: StartMarker<T>,
}

impl<T: Scalar> TemplatePiece<T> {
    /// Distance between the end of each element and the start of the next, maximised.
    pub fn closure_gap(&self) -> T {
        let n = self.boundary.len();
        (0..n)
            .map(|i| self.boundary[i].geometry.end().distance(self.boundary[(i + 1) % n].geometry.start()))
            .fold(T::zero(), T::max)
    }

    pub fn area(&self) -> T {
        self.boundary.iter().map(|e| e.geometry.green_area()).fold(T::zero(), |a, b| a + b)
    }

    pub fn boundary_length(&self) -> T {
        self.boundary.iter().map(|e| e.geometry.length()).fold(T::zero(), |a, b| a + b)
    }

    pub fn bounds(&self) -> (Vec2<T>, Vec2<T>) {
        let inf = T::infinity();
        self.boundary.iter().map(|e| e.geometry.bounds()).fold(
            (Vec2::new(inf, inf), Vec2::new(-inf, -inf)),
            |(lo, hi), (a, b)| (Vec2::new(lo.x.min(a.x), lo.y.min(a.y)), Vec2::new(hi.x.max(b.x), hi.y.max(b.y))),
        )
    }

    /// Boundary elements that are half turns of a vertex circle.
    pub fn caps(&self) -> Vec<usize> {
        (0..self.boundary.len())
            .filter(|&i| self.boundary[i].geometry.is_semicircle())
            .collect()
    }
}
