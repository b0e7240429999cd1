//! Rotational profiles of regular polygons and the cone bands they sweep.
//!
//! The polygon lives in the xz-plane, centred at the origin, and is revolved
//! about the z-axis. Its boundary is indexed by `2n` points at angles
//! `pi * i / n` measured from +z towards +x: vertices and edge midpoints
//! alternate, so a rotation by `2 pi k / n` is the index shift `i -> i + 2k`.
//! Indices `0..=n` form the meridian on the `x >= 0` side.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{IconError, Result};
use crate::scalar::{cos_sin_pi_frac, Scalar};

/// Which symmetry axis of the polygon is used as the axis of revolution.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Axis {
    /// Through two opposite vertices (even n).
    #[serde(rename = "vv")]
    Vv,
    /// Through the midpoints of two opposite edges (even n).
    #[serde(rename = "mm")]
    Mm,
    /// Through a vertex and the midpoint of the opposite edge (odd n).
    #[serde(rename = "odd")]
    Odd,
}

impl Axis {
    /// The only axis available for odd `n`; `None` when the caller must choose.
    pub fn default_for(n: u32) -> Option<Axis> {
        (n % 2 == 1).then_some(Axis::Odd)
    }

    pub fn is_consistent_with(self, n: u32) -> bool {
        match self {
            Axis::Odd => n % 2 == 1,
            Axis::Vv | Axis::Mm => n.is_multiple_of(2),
        }
    }

    pub fn axes_for(n: u32) -> &'static [Axis] {
        if n % 2 == 1 {
            &[Axis::Odd]
        } else {
            &[Axis::Vv, Axis::Mm]
        }
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axis::Vv => "vv",
            Axis::Mm => "mm",
            Axis::Odd => "odd",
        })
    }
}

impl FromStr for Axis {
    type Err = IconError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "vv" => Ok(Axis::Vv),
            "mm" => Ok(Axis::Mm),
            "odd" => Ok(Axis::Odd),
            other => Err(IconError::InvalidSpec(format!("unknown axis '{other}'"))),
        }
    }
}

/// Recipe for one (N,k)-icon.
///
/// `side` is the polygon side length in mm. For odd and mm icons the cap
/// semicircles have radius `side / 2`; the circumradius is
/// `side / (2 sin(pi/n))`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct IconSpec<T> {
    pub n: u32,
    pub k: u32,
    pub axis: Axis,
    pub side: T,
    pub segments: u32,
}

impl<T: Scalar> IconSpec<T> {
    pub fn new(n: u32, k: u32, axis: Axis, side: T, segments: u32) -> Result<Self> {
        let spec = Self { n, k, axis, side, segments };
        spec.validate()?;
        Ok(spec)
    }

    /// Spec with side length `2 r`, i.e. cap radius `r` for odd and mm icons.
    pub fn with_cap_radius(n: u32, k: u32, axis: Axis, r: T, segments: u32) -> Result<Self> {
        Self::new(n, k, axis, r + r, segments)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 3 {
            return Err(IconError::InvalidSpec(format!("n must be >= 3, got {}", self.n)));
        }
        if !self.axis.is_consistent_with(self.n) {
            return Err(IconError::ParityMismatch { n: self.n, axis: self.axis });
        }
        if !(self.side > T::zero()) || !self.side.is_finite() {
            return Err(IconError::InvalidSpec(format!("side must be positive, got {}", self.side)));
        }
        if self.segments < 8 || !self.segments.is_multiple_of(2) {
            return Err(IconError::InvalidSpec(format!(
                "segments must be even and >= 8, got {}",
                self.segments
            )));
        }
        Ok(())
    }

    /// Twist steps reduced modulo `n`.
    pub fn k_mod(&self) -> u32 {
        self.k % self.n
    }

    pub fn frame(&self) -> PolygonFrame {
        PolygonFrame::new(self.n, self.axis)
    }

    pub fn circumradius(&self) -> T {
        let (_, s) = cos_sin_pi_frac::<T>(1, self.n as usize);
        self.side / (s + s)
    }

    pub fn apothem(&self) -> T {
        let (c, _) = cos_sin_pi_frac::<T>(1, self.n as usize);
        self.circumradius() * c
    }

    /// Twist angle `2 pi k / n` in radians.
    pub fn twist_angle(&self) -> T {
        T::lit(2.0) * T::PI() * T::from_usize_lossy(self.k_mod() as usize)
            / T::from_usize_lossy(self.n as usize)
    }
}

/// Combinatorial indexing of the polygon boundary for one axis choice.
///
/// Vertices and edges are numbered clockwise (as seen with +x right, +z up)
/// starting from the top of the polygon.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PolygonFrame {
    pub n: u32,
    pub axis: Axis,
}

impl PolygonFrame {
    pub fn new(n: u32, axis: Axis) -> Self {
        Self { n, axis }
    }

    fn parity(&self) -> u32 {
        u32::from(self.axis == Axis::Mm)
    }

    /// Number of boundary points (vertices plus edge midpoints).
    pub fn point_count(&self) -> u32 {
        2 * self.n
    }

    pub fn is_vertex_point(&self, i: u32) -> bool {
        (i + self.parity()).is_multiple_of(2)
    }

    pub fn vertex_point(&self, v: u32) -> u32 {
        (2 * v + self.parity()) % (2 * self.n)
    }

    pub fn point_vertex(&self, i: u32) -> Option<u32> {
        self.is_vertex_point(i)
            .then(|| ((i + 2 * self.n - self.parity()) % (2 * self.n)) / 2)
    }

    /// Boundary point mirrored across the axis (`x -> -x`).
    pub fn mirror_point(&self, i: u32) -> u32 {
        (2 * self.n - i % (2 * self.n)) % (2 * self.n)
    }

    pub fn mirror_vertex(&self, v: u32) -> u32 {
        self.point_vertex(self.mirror_point(self.vertex_point(v))).expect("vertex mirrors to vertex")
    }

    pub fn edge_midpoint(&self, e: u32) -> u32 {
        (2 * e + 1 - self.parity()) % (2 * self.n)
    }

    /// Endpoint vertices of edge `e`, in boundary order.
    pub fn edge_endpoints(&self, e: u32) -> (u32, u32) {
        let n = self.n;
        match self.axis {
            Axis::Mm => ((e + n - 1) % n, e % n),
            _ => (e % n, (e + 1) % n),
        }
    }

    pub fn mirror_edge(&self, e: u32) -> u32 {
        let n = self.n;
        match self.axis {
            Axis::Mm => (n - e % n) % n,
            _ => n - 1 - e % n,
        }
    }

    /// Whether edge `e` crosses the axis of revolution (it sweeps a flat disk).
    pub fn edge_crosses_axis(&self, e: u32) -> bool {
        self.mirror_edge(e) == e % self.n
    }

    /// Number of profile bands, i.e. edges on the `x >= 0` side.
    pub fn band_count(&self) -> u32 {
        match self.axis {
            Axis::Vv => self.n / 2,
            Axis::Odd => self.n.div_ceil(2),
            Axis::Mm => self.n / 2 + 1,
        }
    }

    pub fn edge_band(&self, e: u32) -> u32 {
        (e % self.n).min(self.mirror_edge(e))
    }

    /// The polygon edges a band is swept by: `x > 0` copy first.
    pub fn band_edges(&self, b: u32) -> (u32, u32) {
        (b, self.mirror_edge(b))
    }

    pub fn profile_vertex_count(&self) -> u32 {
        self.band_count() + 1
    }

    /// Meridian index (boundary point in `0..=n`) of profile vertex `p`.
    pub fn profile_point(&self, p: u32) -> u32 {
        let n = self.n;
        match self.axis {
            Axis::Vv => 2 * p,
            Axis::Odd => (2 * p).min(n),
            Axis::Mm => {
                if p == 0 {
                    0
                } else {
                    (2 * p - 1).min(n)
                }
            }
        }
    }

    /// Polygon vertex at profile vertex `p`, if it is one (and not an edge midpoint).
    pub fn profile_polygon_vertex(&self, p: u32) -> Option<u32> {
        self.point_vertex(self.profile_point(p))
    }

    /// Whether profile vertex `p` lies off the axis and so traces a vertex circle.
    pub fn profile_has_circle(&self, p: u32) -> bool {
        let i = self.profile_point(p);
        i != 0 && i != self.n
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProfileVertex<T> {
    /// Position along the axis (mm).
    pub z: T,
    /// Distance from the axis (mm).
    pub rho: T,
}

/// Half cross-section of the solid of revolution, listed from top to bottom.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Profile<T> {
    pub n: u32,
    pub axis: Axis,
    pub side: T,
    pub vertices: Vec<ProfileVertex<T>>,
}

impl<T: Scalar> Profile<T> {
    pub fn frame(&self) -> PolygonFrame {
        PolygonFrame::new(self.n, self.axis)
    }
}

/// Coordinates `(z, rho)` of boundary point `i` of the meridian (`0..=n`).
///
/// Points `i` and `n - i` are computed from the same trigonometric values so
/// the profile is exactly mirror-symmetric where the polygon is.
pub(crate) fn meridian_point<T: Scalar>(spec_n: u32, axis: Axis, side: T, i: u32) -> ProfileVertex<T> {
    let frame = PolygonFrame::new(spec_n, axis);
    let n = spec_n as usize;
    let (c1, s1) = cos_sin_pi_frac::<T>(1, n);
    let circumradius = side / (s1 + s1);
    let radius = if frame.is_vertex_point(i) { circumradius } else { circumradius * c1 };
    let i = i as usize;
    let folded = i.min(n - i);
    let (c, s) = cos_sin_pi_frac::<T>(folded, n);
    let z = if 2 * i == n {
        T::zero()
    } else if folded == i {
        radius * c
    } else {
        -(radius * c)
    };
    ProfileVertex { z, rho: radius * s }
}

pub fn make_profile<T: Scalar>(spec: &IconSpec<T>) -> Result<Profile<T>> {
    spec.validate()?;
    let frame = spec.frame();
    let vertices = (0..frame.profile_vertex_count())
        .map(|p| meridian_point(spec.n, spec.axis, spec.side, frame.profile_point(p)))
        .collect();
    Ok(Profile { n: spec.n, axis: spec.axis, side: spec.side, vertices })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum BandKind {
    ConeFrustum,
    Cylinder,
    FlatDiskOrAnnulus,
    ApexCone,
}

/// Surface swept by one profile segment.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Band<T> {
    pub z0: T,
    pub rho0: T,
    pub z1: T,
    pub rho1: T,
    pub kind: BandKind,
    pub slant: T,
    /// Distance from the cone apex to the rim at `rho0`; infinite for cylinders.
    pub apex_distance_s0: T,
    pub apex_distance_s1: T,
}

impl<T: Scalar> Band<T> {
    pub fn from_endpoints(a: ProfileVertex<T>, b: ProfileVertex<T>) -> Self {
        let slant = (b.z - a.z).hypot(b.rho - a.rho);
        let kind = if a.z == b.z {
            BandKind::FlatDiskOrAnnulus
        } else if a.rho == b.rho {
            BandKind::Cylinder
        } else if a.rho.is_zero() || b.rho.is_zero() {
            BandKind::ApexCone
        } else {
            BandKind::ConeFrustum
        };
        let (s0, s1) = match kind {
            BandKind::Cylinder => (T::infinity(), T::infinity()),
            BandKind::FlatDiskOrAnnulus => (a.rho, b.rho),
            _ => {
                let dr = (b.rho - a.rho).abs();
                (a.rho * slant / dr, b.rho * slant / dr)
            }
        };
        Self {
            z0: a.z,
            rho0: a.rho,
            z1: b.z,
            rho1: b.rho,
            kind,
            slant,
            apex_distance_s0: s0,
            apex_distance_s1: s1,
        }
    }

    /// `rho / s`, the sine of the cone half-angle; `None` for cylinders.
    pub fn sine_ratio(&self) -> Option<T> {
        match self.kind {
            BandKind::Cylinder => None,
            BandKind::FlatDiskOrAnnulus => Some(T::one()),
            _ => Some((self.rho1 - self.rho0).abs() / self.slant),
        }
    }

    /// Lateral area of the full band (frustum formula).
    pub fn lateral_area(&self) -> T {
        T::PI() * (self.rho0 + self.rho1) * self.slant
    }

    /// Volume swept between the two rims and the axis (signed by `z1 - z0`).
    pub fn frustum_volume(&self) -> T {
        T::PI() / T::lit(3.0)
            * (self.z0 - self.z1)
            * (self.rho0 * self.rho0 + self.rho0 * self.rho1 + self.rho1 * self.rho1)
    }

    pub fn mid_z(&self) -> T {
        (self.z0 + self.z1) / T::lit(2.0)
    }
}

pub fn band_geometry<T: Scalar>(profile: &Profile<T>) -> Vec<Band<T>> {
    profile.vertices.windows(2).map(|w| Band::from_endpoints(w[0], w[1])).collect()
}

/// A twist value in the canonical range, with `k = 0` marked degenerate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalTwist {
    pub k: u32,
    pub degenerate: bool,
}

/// Twist values unique up to chirality: `0 <= k < n/2` for odd `n`,
/// `0 <= k <= n/4` for even `n`.
pub fn canonical_twists(n: u32, axis: Axis) -> Result<Vec<CanonicalTwist>> {
    if n < 3 {
        return Err(IconError::InvalidSpec(format!("n must be >= 3, got {n}")));
    }
    if !axis.is_consistent_with(n) {
        return Err(IconError::ParityMismatch { n, axis });
    }
    let k_max = if n % 2 == 1 { (n - 1) / 2 } else { n / 4 };
    Ok((0..=k_max).map(|k| CanonicalTwist { k, degenerate: k == 0 }).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{PI, SQRT_2};

    fn spec(n: u32, axis: Axis, side: f64) -> IconSpec<f64> {
        IconSpec::new(n, 1, axis, side, 16).unwrap()
    }

    #[test]
    fn square_vv_is_a_bicone() {
        let r = 1.5;
        let p = make_profile(&spec(4, Axis::Vv, SQRT_2 * r)).unwrap();
        assert_eq!(p.vertices.len(), 3);
        assert!((p.vertices[0].z - r).abs() < 1e-12 && p.vertices[0].rho == 0.0);
        assert!(p.vertices[1].z == 0.0 && (p.vertices[1].rho - r).abs() < 1e-12);
        assert!((p.vertices[2].z + r).abs() < 1e-12 && p.vertices[2].rho == 0.0);
    }

    #[test]
    fn square_mm_is_a_cylinder_of_equal_height_and_diameter() {
        let r = 2.0;
        let p = make_profile(&spec(4, Axis::Mm, 2.0 * r)).unwrap();
        let rho: Vec<f64> = p.vertices.iter().map(|v| v.rho).collect();
        assert_eq!(rho.len(), 4);
        assert!(rho[0] == 0.0 && rho[3] == 0.0);
        assert!((rho[1] - r).abs() < 1e-12 && (rho[2] - r).abs() < 1e-12);
        assert!((p.vertices[0].z - p.vertices[3].z - 2.0 * r).abs() < 1e-12);
        let kinds: Vec<_> = band_geometry(&p).iter().map(|b| b.kind).collect();
        assert_eq!(
            kinds,
            [BandKind::FlatDiskOrAnnulus, BandKind::Cylinder, BandKind::FlatDiskOrAnnulus]
        );
    }

    #[test]
    fn hexagon_mm_vertex_circles() {
        let r = 3.0;
        let p = make_profile(&spec(6, Axis::Mm, r)).unwrap();
        let expected = [0.0, r / 2.0, r, r / 2.0, 0.0];
        for (v, e) in p.vertices.iter().zip(expected) {
            assert!((v.rho - e).abs() < 1e-12, "{} vs {}", v.rho, e);
        }
    }

    #[test]
    fn triangle_has_one_apex_cone() {
        let r = 1.0f64;
        let p = make_profile(&IconSpec::new(3, 1, Axis::Odd, 2.0 * r, 8).unwrap()).unwrap();
        let bands = band_geometry(&p);
        let cones: Vec<_> = bands.iter().filter(|b| b.kind == BandKind::ApexCone).collect();
        assert_eq!(cones.len(), 1);
        assert!((cones[0].slant - 2.0 * r).abs() < 1e-12);
        assert!((cones[0].rho1 - r).abs() < 1e-12);
        assert_eq!(bands[1].kind, BandKind::FlatDiskOrAnnulus);
    }

    #[test]
    fn octagon_mm_bands_unroll_to_pi_over_root_two() {
        // Octagon with side 2 and vertices at 22.5 + 45 j degrees, built directly.
        let side = 2.0;
        let big_r = side / (2.0 * (PI / 8.0).sin());
        let rho_a = big_r * (PI / 8.0).sin();
        let rho_b = big_r * (3.0 * PI / 8.0).sin();
        let dz = big_r * ((PI / 8.0).cos() - (3.0 * PI / 8.0).cos());
        // similar triangles: apex distance s = rho * slant / (rho_b - rho_a)
        let slant = dz.hypot(rho_b - rho_a);
        let s_a = rho_a * slant / (rho_b - rho_a);
        let oracle_angle = PI * rho_a / s_a;
        assert!((oracle_angle - PI / SQRT_2).abs() < 1e-12);

        let p = make_profile(&spec(8, Axis::Mm, side)).unwrap();
        let bands = band_geometry(&p);
        assert_eq!(bands[2].kind, BandKind::Cylinder);
        for b in [bands[1], bands[3]] {
            assert_eq!(b.kind, BandKind::ConeFrustum);
            let angle = PI * b.rho0 / b.apex_distance_s0;
            assert!((angle - oracle_angle).abs() < 1e-12);
            let angle1 = PI * b.rho1 / b.apex_distance_s1;
            assert!((angle1 - oracle_angle).abs() < 1e-12);
        }
    }

    #[test]
    fn canonical_ranges() {
        let ks = |n, a| -> Vec<u32> { canonical_twists(n, a).unwrap().iter().map(|t| t.k).collect() };
        assert_eq!(ks(3, Axis::Odd), [0, 1]);
        assert_eq!(ks(22, Axis::Mm), [0, 1, 2, 3, 4, 5]);
        assert_eq!(ks(4, Axis::Vv), [0, 1]);
        assert!(canonical_twists(4, Axis::Odd).is_err());
        assert!(canonical_twists(5, Axis::Odd).unwrap()[0].degenerate);
    }

    #[test]
    fn rejects_bad_specs() {
        assert!(matches!(
            IconSpec::new(4, 1, Axis::Odd, 1.0, 16),
            Err(IconError::ParityMismatch { .. })
        ));
        assert!(IconSpec::new(5, 1, Axis::Vv, 1.0, 16).is_err());
        assert!(IconSpec::new(2, 1, Axis::Vv, 1.0, 16).is_err());
        assert!(IconSpec::new(4, 1, Axis::Vv, 0.0, 16).is_err());
        assert!(IconSpec::new(4, 1, Axis::Vv, 1.0, 9).is_err());
        assert!(IconSpec::new(4, 1, Axis::Vv, 1.0, 6).is_err());
    }

    #[test]
    fn frame_indexing_round_trips() {
        for n in 3..20 {
            for &axis in Axis::axes_for(n) {
                let f = PolygonFrame::new(n, axis);
                for v in 0..n {
                    assert_eq!(f.point_vertex(f.vertex_point(v)), Some(v));
                    assert_eq!(f.mirror_vertex(f.mirror_vertex(v)), v);
                }
                for e in 0..n {
                    let (a, b) = f.edge_endpoints(e);
                    let (pa, pb) = (f.vertex_point(a), f.vertex_point(b));
                    assert_eq!((pa + 1) % (2 * n), f.edge_midpoint(e));
                    assert_eq!((pa + 2) % (2 * n), pb);
                    assert!(f.edge_band(e) < f.band_count());
                }
                let crossing = (0..n).filter(|&e| f.edge_crosses_axis(e)).count();
                let expected = match axis {
                    Axis::Vv => 0,
                    Axis::Odd => 1,
                    Axis::Mm => 2,
                };
                assert_eq!(crossing, expected);
            }
        }
    }
}
