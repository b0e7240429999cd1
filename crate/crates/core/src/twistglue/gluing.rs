use serde::{Deserialize, Serialize};

use crate::profile::{Axis, IconSpec, PolygonFrame};
use crate::scalar::Scalar;

/// How the two cut faces are identified after twisting.
///
/// Side A is the `y >= 0` half and stays in place; side B (`y <= 0`) is
/// rotated so that its cut-face edge `j + k` lands on A's edge `j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GluingMap {
    pub n: u32,
    pub k: u32,
    pub axis: Axis,
    /// `face_pairing[j]` is the side-B edge glued to side-A edge `j`.
    pub face_pairing: Vec<u32>,
    /// `vertex_pairing[v]` is the side-B vertex identified with side-A vertex `v`.
    pub vertex_pairing: Vec<u32>,
}

impl GluingMap {
    pub fn new(n: u32, k: u32, axis: Axis) -> Self {
        let k = k % n;
        Self {
            n,
            k,
            axis,
            face_pairing: (0..n).map(|j| (j + k) % n).collect(),
            vertex_pairing: (0..n).map(|v| (v + k) % n).collect(),
        }
    }

    pub fn frame(&self) -> PolygonFrame {
        PolygonFrame::new(self.n, self.axis)
    }

    /// Position (in side-A indexing) of side-B vertex `q` after regluing.
    pub fn b_vertex_to_a(&self, q: u32) -> u32 {
        (q + self.n - self.k) % self.n
    }

    /// Position (in side-A indexing) of side-B boundary point `q`.
    pub fn b_point_to_a(&self, q: u32) -> u32 {
        let m = 2 * self.n;
        (q + m - 2 * self.k) % m
    }

    /// The side-A edge that side-B edge `e` is glued to.
    pub fn b_edge_to_a(&self, e: u32) -> u32 {
        (e + self.n - self.k) % self.n
    }

    /// Cycle decomposition of the edge pairing viewed as a permutation of `0..n`.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.n as usize];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start as usize] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut j = start;
            while !seen[j as usize] {
                seen[j as usize] = true;
                cycle.push(j);
                j = self.face_pairing[j as usize];
            }
            out.push(cycle);
        }
        out
    }

    /// Composition `other ∘ self` of the two edge pairings.
    pub fn compose(&self, other: &GluingMap) -> Vec<u32> {
        self.face_pairing.iter().map(|&j| other.face_pairing[j as usize]).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.face_pairing.iter().enumerate().all(|(j, &p)| j as u32 == p)
    }
}

pub fn build_gluing<T: Scalar>(spec: &IconSpec<T>) -> GluingMap {
    GluingMap::new(spec.n, spec.k, spec.axis)
}
