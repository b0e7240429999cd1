use std::collections::{BTreeMap, HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::geom::Vec3;
use crate::mesh::TriMesh;
use crate::profile::{meridian_point, IconSpec, ProfileVertex};
use crate::scalar::{cos_sin_pi_frac, Scalar};

use super::gluing::build_gluing;

/// Which half of the cut solid a piece of surface came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    /// `y >= 0`, left in place.
    A,
    /// `y <= 0`, rotated by the twist.
    B,
}

impl Side {
    pub const BOTH: [Side; 2] = [Side::A, Side::B];
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CurveKind {
    Closed,
    Open { endpoints: [u32; 2] },
}

/// One semicircle of a vertex circle, as it was before regluing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ArcSource {
    pub side: Side,
    pub profile_vertex: u32,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EdgeCurve {
    /// Mesh vertex ids along the curve; a closed curve repeats its first id at the end.
    pub vertices: Vec<u32>,
    pub kind: CurveKind,
    pub arcs: Vec<ArcSource>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SurfaceKind {
    /// Bounded by two edge curves; its mid-line closes up.
    Traceable,
    Other,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SurfaceComponent {
    pub kind: SurfaceKind,
    pub triangle_count: usize,
    /// Indices into `IconMesh::edge_curves` of the curves bounding it.
    pub bounding_curves: Vec<usize>,
}

/// Watertight mesh of an (N,k)-icon with its edges and smooth surfaces tagged.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IconMesh<T> {
    pub spec: IconSpec<T>,
    pub mesh: TriMesh<T>,
    pub edge_curves: Vec<EdgeCurve>,
    /// Component id of every triangle.
    pub triangle_component: Vec<u32>,
    pub components: Vec<SurfaceComponent>,
}

impl<T: Scalar> IconMesh<T> {
    pub fn closed_curve_count(&self) -> usize {
        self.edge_curves.iter().filter(|c| c.kind == CurveKind::Closed).count()
    }

    pub fn open_curve_count(&self) -> usize {
        self.edge_curves.len() - self.closed_curve_count()
    }

    pub fn component_count(&self, kind: SurfaceKind) -> usize {
        self.components.iter().filter(|c| c.kind == kind).count()
    }

    /// Polyline length of an edge curve.
    pub fn curve_length(&self, curve: usize) -> T {
        self.edge_curves[curve]
            .vertices
            .windows(2)
            .map(|w| (self.mesh.vertices[w[1] as usize] - self.mesh.vertices[w[0] as usize]).norm())
            .fold(T::zero(), |a, b| a + b)
    }

    /// Maps a point of the assembled icon back into the unrotated frame of `side`.
    pub fn to_side_frame(&self, side: Side, p: Vec3<T>) -> Vec3<T> {
        match side {
            Side::A => p,
            Side::B => p.rotated_about_y(self.spec.twist_angle()),
        }
    }
}

struct HalfGrid {
    /// `ids[i][s]` for meridian index `i` and azimuth step `s`.
    ids: Vec<Vec<u32>>,
}

/// Cuts the solid of revolution along the xz-plane, turns the `y <= 0` half
/// by `2 pi k / n` about the y-axis and reglues it.
///
/// Both halves share the `2n` cut-plane boundary vertices (polygon vertices
/// and edge midpoints), so the result is closed by construction.
pub fn synthesize_mesh<T: Scalar>(spec: &IconSpec<T>) -> Result<IconMesh<T>> {
    spec.validate()?;
    let gluing = build_gluing(spec);
    let frame = spec.frame();
    let n = spec.n;
    let h = spec.segments / 2;
    let meridian: Vec<ProfileVertex<T>> =
        (0..=n).map(|i| meridian_point(n, spec.axis, spec.side, i)).collect();

    let mut vertices = Vec::new();
    for g in 0..frame.point_count() {
        let (i, sign) = if g <= n { (g, T::one()) } else { (2 * n - g, -T::one()) };
        let m = meridian[i as usize];
        vertices.push(Vec3::new(sign * m.rho, T::zero(), m.z));
    }

    let azimuth: Vec<(T, T)> = (0..=h).map(|s| cos_sin_pi_frac::<T>(s as usize, h as usize)).collect();
    let theta = spec.twist_angle();

    let mut build_half = |side: Side| -> HalfGrid {
        let seam = |q: u32| match side {
            Side::A => q,
            Side::B => gluing.b_point_to_a(q),
        };
        let mut ids = Vec::with_capacity(n as usize + 1);
        for i in 0..=n {
            let m = meridian[i as usize];
            let mut row = Vec::with_capacity(h as usize + 1);
            for s in 0..=h {
                let id = if i == 0 || i == n || s == 0 {
                    seam(i)
                } else if s == h {
                    seam(2 * n - i)
                } else {
                    let (c, sn) = azimuth[s as usize];
                    let p = match side {
                        Side::A => Vec3::new(m.rho * c, m.rho * sn, m.z),
                        Side::B => Vec3::new(m.rho * c, -(m.rho * sn), m.z).rotated_about_y(-theta),
                    };
                    vertices.push(p);
                    (vertices.len() - 1) as u32
                };
                row.push(id);
            }
            ids.push(row);
        }
        HalfGrid { ids }
    };
    let grid_a = build_half(Side::A);
    let grid_b = build_half(Side::B);

    let mut triangles = Vec::new();
    for (side, grid) in [(Side::A, &grid_a), (Side::B, &grid_b)] {
        for i in 0..n as usize {
            for s in 0..h as usize {
                let a = grid.ids[i][s];
                let b = grid.ids[i + 1][s];
                let c = grid.ids[i + 1][s + 1];
                let d = grid.ids[i][s + 1];
                let tris = match side {
                    Side::A => [[a, b, c], [a, c, d]],
                    Side::B => [[a, c, b], [a, d, c]],
                };
                for t in tris {
                    if t[0] != t[1] && t[1] != t[2] && t[0] != t[2] {
                        triangles.push(t);
                    }
                }
            }
        }
    }
    let mesh = TriMesh { vertices, triangles };

    let mut arcs = Vec::new();
    for (side, grid) in [(Side::A, &grid_a), (Side::B, &grid_b)] {
        for p in 0..frame.profile_vertex_count() {
            if frame.profile_has_circle(p) {
                let i = frame.profile_point(p) as usize;
                arcs.push((ArcSource { side, profile_vertex: p }, grid.ids[i].clone()));
            }
        }
    }
    let edge_curves = chain_arcs(&arcs);
    let (triangle_component, components) = label_components(&mesh, &edge_curves);

    Ok(IconMesh { spec: *spec, mesh, edge_curves, triangle_component, components })
}

/// Joins semicircle polylines that share endpoint vertices into maximal curves.
fn chain_arcs(arcs: &[(ArcSource, Vec<u32>)]) -> Vec<EdgeCurve> {
    let mut at_vertex: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for (idx, (_, poly)) in arcs.iter().enumerate() {
        at_vertex.entry(poly[0]).or_default().push(idx);
        at_vertex.entry(*poly.last().unwrap()).or_default().push(idx);
    }
    let other_arc = |v: u32, current: usize| -> Option<usize> {
        at_vertex[&v].iter().copied().find(|&a| a != current)
    };

    let mut used = vec![false; arcs.len()];
    let mut curves = Vec::new();
    for start in 0..arcs.len() {
        if used[start] {
            continue;
        }
        // Walk backwards to an open end, if there is one.
        let mut first = start;
        let mut entry = arcs[start].1[0];
        while let Some(prev) = other_arc(entry, first) {
            if prev == start {
                break;
            }
            let poly = &arcs[prev].1;
            entry = if poly[0] == entry { *poly.last().unwrap() } else { poly[0] };
            first = prev;
        }
        // `entry` is the end of `first` the walk arrived through; walk forward from it.
        let mut vertices = vec![entry];
        let mut sources = Vec::new();
        let mut current = first;
        let mut at = entry;
        loop {
            used[current] = true;
            sources.push(arcs[current].0);
            let poly = &arcs[current].1;
            if poly[0] == at {
                vertices.extend_from_slice(&poly[1..]);
            } else {
                vertices.extend(poly.iter().rev().skip(1));
            }
            at = *vertices.last().unwrap();
            match other_arc(at, current) {
                Some(next) if !used[next] => current = next,
                _ => break,
            }
        }
        let kind = if vertices.len() > 1 && vertices[0] == *vertices.last().unwrap() {
            CurveKind::Closed
        } else {
            CurveKind::Open { endpoints: [vertices[0], *vertices.last().unwrap()] }
        };
        curves.push(EdgeCurve { vertices, kind, arcs: sources });
    }
    curves
}

/// Flood fills triangles across every mesh edge that is not on an edge curve.
fn label_components<T: Scalar>(
    mesh: &TriMesh<T>,
    curves: &[EdgeCurve],
) -> (Vec<u32>, Vec<SurfaceComponent>) {
    let key = |a: u32, b: u32| (a.min(b), a.max(b));
    let mut crease: HashMap<(u32, u32), usize> = HashMap::new();
    for (ci, c) in curves.iter().enumerate() {
        for w in c.vertices.windows(2) {
            crease.insert(key(w[0], w[1]), ci);
        }
    }
    let mut edge_tris: HashMap<(u32, u32), Vec<usize>> = HashMap::new();
    for (ti, t) in mesh.triangles.iter().enumerate() {
        for i in 0..3 {
            edge_tris.entry(key(t[i], t[(i + 1) % 3])).or_default().push(ti);
        }
    }

    let unset = u32::MAX;
    let mut label = vec![unset; mesh.triangles.len()];
    let mut sizes = Vec::new();
    for seed in 0..mesh.triangles.len() {
        if label[seed] != unset {
            continue;
        }
        let id = sizes.len() as u32;
        let mut count = 0;
        let mut queue = VecDeque::from([seed]);
        label[seed] = id;
        while let Some(ti) = queue.pop_front() {
            count += 1;
            let t = mesh.triangles[ti];
            for i in 0..3 {
                let e = key(t[i], t[(i + 1) % 3]);
                if crease.contains_key(&e) {
                    continue;
                }
                for &nb in &edge_tris[&e] {
                    if label[nb] == unset {
                        label[nb] = id;
                        queue.push_back(nb);
                    }
                }
            }
        }
        sizes.push(count);
    }

    let mut bounding: Vec<Vec<usize>> = vec![Vec::new(); sizes.len()];
    for (e, &ci) in &crease {
        for &ti in &edge_tris[e] {
            let comp = &mut bounding[label[ti] as usize];
            if !comp.contains(&ci) {
                comp.push(ci);
            }
        }
    }
    let components = sizes
        .into_iter()
        .zip(bounding)
        .map(|(triangle_count, mut bounding_curves)| {
            bounding_curves.sort_unstable();
            let kind = if bounding_curves.len() == 2 { SurfaceKind::Traceable } else { SurfaceKind::Other };
            SurfaceComponent { kind, triangle_count, bounding_curves }
        })
        .collect();
    (label, components)
}

/// Signed-tetrahedron volume of the icon mesh.
pub fn mesh_volume<T: Scalar>(mesh: &IconMesh<T>) -> Result<T> {
    mesh.mesh.volume()
}

/// Discrete Gauss–Bonnet total: sum over vertices of `2 pi - angle sum`.
pub fn total_angle_defect<T: Scalar>(mesh: &IconMesh<T>) -> Result<T> {
    mesh.mesh.total_angle_defect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::profile::Axis;
    use std::f64::consts::PI;

    fn icon(n: u32, k: u32, axis: Axis, side: f64, segments: u32) -> IconMesh<f64> {
        synthesize_mesh(&IconSpec::new(n, k, axis, side, segments).unwrap()).unwrap()
    }

    #[test]
    fn sphericon_has_one_surface_and_two_open_edges() {
        let m = icon(4, 1, Axis::Vv, 2f64.sqrt(), 32);
        m.mesh.check_closed_manifold().unwrap();
        assert_eq!(m.mesh.euler_characteristic(), 2);
        assert_eq!(m.open_curve_count(), 2);
        assert_eq!(m.closed_curve_count(), 0);
        assert_eq!(m.components.len(), 1);
        assert_eq!(m.components[0].kind, SurfaceKind::Traceable);
    }

    #[test]
    fn dual_sphericon_has_two_surfaces_and_one_closed_edge() {
        let m = icon(4, 1, Axis::Mm, 2.0, 32);
        assert_eq!(m.closed_curve_count(), 1);
        assert_eq!(m.open_curve_count(), 0);
        assert_eq!(m.component_count(SurfaceKind::Other), 2);
        assert_eq!(m.component_count(SurfaceKind::Traceable), 0);
    }

    #[test]
    fn trisphericon_has_one_s_shaped_edge_and_two_vertices() {
        let m = icon(3, 1, Axis::Odd, 2.0, 32);
        assert_eq!(m.edge_curves.len(), 1);
        let CurveKind::Open { endpoints } = m.edge_curves[0].kind else { panic!("expected open edge") };
        assert_ne!(endpoints[0], endpoints[1]);
        assert_eq!(m.components.len(), 1);
        assert_eq!(m.components[0].kind, SurfaceKind::Other);
    }

    #[test]
    fn bicone_volume_matches_cone_formula() {
        let m = icon(4, 0, Axis::Vv, 2f64.sqrt(), 1024);
        let exact = 2.0 * PI / 3.0;
        let v = mesh_volume(&m).unwrap();
        assert!((v - exact).abs() / exact < 1e-4, "{v}");
    }

    #[test]
    fn twist_preserves_volume() {
        let v0 = mesh_volume(&icon(4, 0, Axis::Vv, 2f64.sqrt(), 64)).unwrap();
        let v1 = mesh_volume(&icon(4, 1, Axis::Vv, 2f64.sqrt(), 64)).unwrap();
        assert!((v0 - v1).abs() / v0 < 1e-12);
    }

    #[test]
    fn cylinder_volume() {
        let v = mesh_volume(&icon(4, 0, Axis::Mm, 2.0, 1024)).unwrap();
        assert!((v - 2.0 * PI).abs() / (2.0 * PI) < 1e-4);
    }

    #[test]
    fn seam_vertices_of_rotated_half_coincide() {
        let spec = IconSpec::new(7, 2, Axis::Odd, 1.3, 16).unwrap();
        let g = build_gluing(&spec);
        let m = synthesize_mesh(&spec).unwrap();
        for q in 0..14u32 {
            let i = if q <= 7 { q } else { 14 - q };
            let mp = meridian_point(7, Axis::Odd, 1.3, i);
            let sign = if q <= 7 { 1.0 } else { -1.0 };
            let local = Vec3::new(sign * mp.rho, 0.0, mp.z);
            let moved = local.rotated_about_y(-spec.twist_angle());
            let target = m.mesh.vertices[g.b_point_to_a(q) as usize];
            assert!((moved - target).norm() < 1e-12);
        }
    }

    #[test]
    fn defect_is_four_pi() {
        let m = icon(5, 2, Axis::Odd, 1.0, 24);
        assert!((total_angle_defect(&m).unwrap() - 4.0 * PI).abs() < 1e-10);
    }

    #[test]
    fn f32_mesh_is_closed() {
        let spec = IconSpec::<f32>::new(6, 1, Axis::Mm, 1.0, 32).unwrap();
        let m = synthesize_mesh(&spec).unwrap();
        m.mesh.check_closed_manifold().unwrap();
        assert!(m.mesh.volume().unwrap() > 0.0);
    }
}
