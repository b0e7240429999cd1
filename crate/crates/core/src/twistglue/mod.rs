//! Cut–twist–reglue construction of (N,k)-icon meshes.

mod gluing;
mod synth;

pub use gluing::{build_gluing, GluingMap};
pub use synth::{
    mesh_volume, synthesize_mesh, total_angle_defect, ArcSource, CurveKind, EdgeCurve, IconMesh, Side,
    SurfaceComponent, SurfaceKind,
};
