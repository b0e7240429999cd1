//! Edge and surface counts of (N,k)-icons, and their pita-form / D-form status.
//!
//! Counts are computed two ways: closed-form gcd expressions, and a purely
//! combinatorial trace of how the semicircles and half-bands of the cut
//! solid are reassembled by the gluing.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{IconError, Result};
use crate::profile::{Axis, IconSpec, PolygonFrame};
use crate::scalar::Scalar;
use crate::twistglue::GluingMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct FeatureCount {
    pub closed_edges: u32,
    /// Edges running between two distinct endpoints.
    pub open_edges: u32,
    pub traceable_surfaces: u32,
    pub other_surfaces: u32,
}

impl FeatureCount {
    pub fn surfaces(&self) -> u32 {
        self.traceable_surfaces + self.other_surfaces
    }

    pub fn edges(&self) -> u32 {
        self.closed_edges + self.open_edges
    }
}

impl fmt::Display for FeatureCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {}, {})",
            self.closed_edges, self.open_edges, self.traceable_surfaces, self.other_surfaces
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum DesignationKind {
    PitaForm,
    DForm,
    Neither,
}

impl fmt::Display for DesignationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DesignationKind::PitaForm => "PITA_FORM",
            DesignationKind::DForm => "D_FORM",
            DesignationKind::Neither => "NEITHER",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Designation {
    pub kind: DesignationKind,
    pub reason: String,
}

fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Rejects arguments outside the domain of the count formulas.
///
/// A twist of a multiple of `pi` (for even `n`) or of `2 pi` maps the cut
/// half onto itself, so nothing is actually cut open.
pub fn check_twist(n: u32, k: u32, axis: Axis) -> Result<()> {
    if n < 3 {
        return Err(IconError::InvalidSpec(format!("n must be >= 3, got {n}")));
    }
    if !axis.is_consistent_with(n) {
        return Err(IconError::ParityMismatch { n, axis });
    }
    let period = if n.is_multiple_of(2) { n / 2 } else { n };
    if k.is_multiple_of(period) {
        return Err(IconError::DegenerateTwist { n, k });
    }
    Ok(())
}

/// Closed-form counts.
pub fn feature_counts_formula(n: u32, k: u32, axis: Axis) -> Result<FeatureCount> {
    check_twist(n, k, axis)?;
    Ok(match axis {
        Axis::Odd => {
            let g = gcd(n, k % n);
            FeatureCount {
                closed_edges: (g - 1) / 2,
                open_edges: 1,
                traceable_surfaces: (g - 1) / 2,
                other_surfaces: 1,
            }
        }
        Axis::Vv => {
            let g = gcd(n / 2, k % n);
            FeatureCount { closed_edges: g - 1, open_edges: 2, traceable_surfaces: g, other_surfaces: 0 }
        }
        Axis::Mm => {
            let g = gcd(n / 2, k % n);
            FeatureCount { closed_edges: g, open_edges: 0, traceable_surfaces: g - 1, other_surfaces: 2 }
        }
    })
}

struct DisjointSet {
    parent: Vec<usize>,
}

impl DisjointSet {
    fn new(len: usize) -> Self {
        Self { parent: (0..len).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Counts obtained by tracing the gluing combinatorially.
///
/// Each vertex circle of the profile is split into two semicircles (one per
/// half) and each band into two half-bands. Semicircles are linked through
/// their reglued endpoints into closed or open edges; half-bands are linked
/// through glued cut-face edges into surfaces. A surface bounded by two
/// distinct edges is an annulus and can be traced round; one bounded by a
/// single edge is a disk.
pub fn feature_counts_trace_for(n: u32, k: u32, axis: Axis) -> Result<FeatureCount> {
    check_twist(n, k, axis)?;
    let frame = PolygonFrame::new(n, axis);
    let gluing = GluingMap::new(n, k, axis);
    let bands = frame.band_count() as usize;
    let half_band = |side_b: bool, band: u32| band as usize + if side_b { bands } else { 0 };

    let mut surfaces = DisjointSet::new(2 * bands);
    for j in 0..n {
        let b_edge = gluing.face_pairing[j as usize];
        surfaces.union(half_band(false, frame.edge_band(j)), half_band(true, frame.edge_band(b_edge)));
    }

    let mut joints = DisjointSet::new(n as usize);
    // (global endpoint, adjacent half-bands) per semicircle
    let mut arcs: Vec<(u32, [usize; 2])> = Vec::new();
    for side_b in [false, true] {
        for p in 0..frame.profile_vertex_count() {
            if !frame.profile_has_circle(p) {
                continue;
            }
            let v = frame.profile_polygon_vertex(p).expect("circle at a polygon vertex");
            let (mut a, mut b) = (v, frame.mirror_vertex(v));
            if side_b {
                a = gluing.b_vertex_to_a(a);
                b = gluing.b_vertex_to_a(b);
            }
            joints.union(a as usize, b as usize);
            arcs.push((a, [half_band(side_b, p - 1), half_band(side_b, p)]));
        }
    }

    let mut arcs_per_curve = vec![0u32; n as usize];
    for &(a, _) in &arcs {
        let root = joints.find(a as usize);
        arcs_per_curve[root] += 1;
    }
    let mut joints_per_curve = vec![0u32; n as usize];
    for v in 0..n as usize {
        let root = joints.find(v);
        if arcs_per_curve[root] > 0 {
            joints_per_curve[root] += 1;
        }
    }

    let mut count = FeatureCount::default();
    for root in 0..n as usize {
        if arcs_per_curve[root] == 0 {
            continue;
        }
        if arcs_per_curve[root] == joints_per_curve[root] {
            count.closed_edges += 1;
        } else {
            count.open_edges += 1;
        }
    }

    let mut bounding: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); 2 * bands];
    for &(a, sides) in &arcs {
        let curve = joints.find(a as usize);
        for hb in sides {
            let root = surfaces.find(hb);
            bounding[root].insert(curve);
        }
    }
    for (hb, curves) in bounding.iter().enumerate() {
        if surfaces.find(hb) != hb {
            continue;
        }
        if curves.len() == 2 {
            count.traceable_surfaces += 1;
        } else {
            count.other_surfaces += 1;
        }
    }
    Ok(count)
}

pub fn feature_counts_trace<T: Scalar>(spec: &IconSpec<T>) -> Result<FeatureCount> {
    feature_counts_trace_for(spec.n, spec.k, spec.axis)
}

/// Pita-form: one surface and one edge between two distinct endpoints.
/// D-form: two surfaces and one closed edge.
pub fn designation_from_counts(c: &FeatureCount) -> Designation {
    if c.surfaces() == 1 && c.open_edges == 1 && c.closed_edges == 0 {
        Designation {
            kind: DesignationKind::PitaForm,
            reason: "one surface and one edge running between two distinct endpoints".into(),
        }
    } else if c.surfaces() == 2 && c.closed_edges == 1 && c.open_edges == 0 {
        Designation { kind: DesignationKind::DForm, reason: "two surfaces and one closed edge".into() }
    } else {
        Designation {
            kind: DesignationKind::Neither,
            reason: format!(
                "{} surface(s), {} closed and {} open edge(s)",
                c.surfaces(),
                c.closed_edges,
                c.open_edges
            ),
        }
    }
}

pub fn designate(n: u32, k: u32, axis: Axis) -> Result<Designation> {
    Ok(designation_from_counts(&feature_counts_formula(n, k, axis)?))
}
