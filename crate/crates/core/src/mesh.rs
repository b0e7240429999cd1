//! Indexed triangle meshes and the closed-surface measures used as oracles.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{IconError, Result};
use crate::geom::Vec3;
use crate::scalar::Scalar;

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct TriMesh<T> {
    pub vertices: Vec<Vec3<T>>,
    /// Counterclockwise when seen from outside.
    pub triangles: Vec<[u32; 3]>,
}

/// Per-edge usage of a triangle soup, keyed by `(min, max)` vertex id.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EdgeUse {
    pub forward: u32,
    pub backward: u32,
}

impl<T: Scalar> TriMesh<T> {
    pub fn edge_uses(&self) -> HashMap<(u32, u32), EdgeUse> {
        let mut uses: HashMap<(u32, u32), EdgeUse> = HashMap::new();
        for t in &self.triangles {
            for i in 0..3 {
                let (a, b) = (t[i], t[(i + 1) % 3]);
                let u = uses.entry((a.min(b), a.max(b))).or_default();
                if a < b {
                    u.forward += 1;
                } else {
                    u.backward += 1;
                }
            }
        }
        uses
    }

    /// Checks that every edge borders exactly two consistently oriented
    /// triangles and that no triangle repeats a vertex.
    pub fn check_closed_manifold(&self) -> Result<()> {
        let nv = self.vertices.len() as u32;
        for (i, t) in self.triangles.iter().enumerate() {
            if t.iter().any(|&v| v >= nv) {
                return Err(IconError::NonManifold(format!("triangle {i} references a missing vertex")));
            }
            if t[0] == t[1] || t[1] == t[2] || t[0] == t[2] {
                return Err(IconError::NonManifold(format!("triangle {i} is degenerate")));
            }
        }
        for ((a, b), u) in self.edge_uses() {
            if u.forward != 1 || u.backward != 1 {
                return Err(IconError::NonManifold(format!(
                    "edge ({a}, {b}) used {} times forward and {} times backward",
                    u.forward, u.backward
                )));
            }
        }
        Ok(())
    }

    pub fn edge_count(&self) -> usize {
        self.edge_uses().len()
    }

    /// `V - E + F`, counting only vertices referenced by some triangle.
    pub fn euler_characteristic(&self) -> i64 {
        let mut used = vec![false; self.vertices.len()];
        for t in &self.triangles {
            for &v in t {
                used[v as usize] = true;
            }
        }
        let v = used.iter().filter(|&&u| u).count() as i64;
        v - self.edge_count() as i64 + self.triangles.len() as i64
    }

    fn corners(&self, t: &[u32; 3]) -> [Vec3<T>; 3] {
        [
            self.vertices[t[0] as usize],
            self.vertices[t[1] as usize],
            self.vertices[t[2] as usize],
        ]
    }

    /// Enclosed volume by the signed tetrahedron sum.
    pub fn volume(&self) -> Result<T> {
        self.check_closed_manifold()?;
        let six = T::lit(6.0);
        let sum = self
            .triangles
            .iter()
            .map(|t| {
                let [a, b, c] = self.corners(t);
                a.dot(b.cross(c))
            })
            .fold(T::zero(), |acc, v| acc + v);
        Ok(sum / six)
    }

    pub fn surface_area(&self) -> T {
        self.triangles
            .iter()
            .map(|t| {
                let [a, b, c] = self.corners(t);
                (b - a).cross(c - a).norm() / T::lit(2.0)
            })
            .fold(T::zero(), |acc, v| acc + v)
    }

    /// Per-vertex angle defect `2 pi - sum of incident corner angles`.
    pub fn angle_defects(&self) -> Vec<T> {
        let mut sums = vec![T::zero(); self.vertices.len()];
        let mut touched = vec![false; self.vertices.len()];
        for t in &self.triangles {
            let p = self.corners(t);
            for i in 0..3 {
                let u = p[(i + 1) % 3] - p[i];
                let v = p[(i + 2) % 3] - p[i];
                let angle = u.cross(v).norm().atan2(u.dot(v));
                sums[t[i] as usize] = sums[t[i] as usize] + angle;
                touched[t[i] as usize] = true;
            }
        }
        let two_pi = T::PI() + T::PI();
        sums.iter()
            .zip(&touched)
            .map(|(&s, &used)| if used { two_pi - s } else { T::zero() })
            .collect()
    }

    pub fn total_angle_defect(&self) -> Result<T> {
        self.check_closed_manifold()?;
        Ok(self.angle_defects().into_iter().fold(T::zero(), |a, b| a + b))
    }

    /// Outward unit normal of triangle `i` (zero for degenerate triangles).
    pub fn triangle_normal(&self, i: usize) -> Vec3<T> {
        let [a, b, c] = self.corners(&self.triangles[i]);
        let n = (b - a).cross(c - a);
        let len = n.norm();
        if len > T::zero() {
            n * (T::one() / len)
        } else {
            n
        }
    }

    /// Axis-aligned unit cube `[0,1]^3` with outward winding.
    pub fn unit_cube() -> Self {
        let v = |x: f64, y: f64, z: f64| Vec3::new(T::lit(x), T::lit(y), T::lit(z));
        let vertices = vec![
            v(0., 0., 0.),
            v(1., 0., 0.),
            v(1., 1., 0.),
            v(0., 1., 0.),
            v(0., 0., 1.),
            v(1., 0., 1.),
            v(1., 1., 1.),
            v(0., 1., 1.),
        ];
        let quads = [[0, 3, 2, 1], [4, 5, 6, 7], [0, 1, 5, 4], [1, 2, 6, 5], [2, 3, 7, 6], [3, 0, 4, 7]];
        let triangles = quads
            .iter()
            .flat_map(|q| [[q[0], q[1], q[2]], [q[0], q[2], q[3]]])
            .collect();
        Self { vertices, triangles }
    }
}
