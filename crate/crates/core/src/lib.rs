//! Generalized sphericons ((N,k)-icons): construction, classification,
//! developable templates, and the stadium seams of pita-forms and D-forms.
//!
//! Geometry is generic over [`Scalar`] (`f32` or `f64`); the `*64` aliases
//! below cover the common case.

// `!(x > 0)` is how parameters reject NaN along with the out-of-range values
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod classify;
pub mod dform;
pub mod error;
pub mod format;
pub mod geom;
pub mod mesh;
pub mod profile;
pub mod scalar;
pub mod twistglue;
pub mod unroll;

pub use classify::{
    designate, feature_counts_formula, feature_counts_trace, feature_counts_trace_for, Designation,
    DesignationKind, FeatureCount,
};
pub use dform::{
    dform_seam, isoperimetric_scale, pita_seam, relax_to_stadium, stadium_perimeter, SeamNote, SeamPairing, Stadium,
};
pub use error::{IconError, Result};
pub use profile::{band_geometry, canonical_twists, make_profile, Axis, Band, BandKind, IconSpec, Profile};
pub use scalar::Scalar;
pub use twistglue::{build_gluing, mesh_volume, synthesize_mesh, total_angle_defect, GluingMap, IconMesh};
pub use unroll::{assemble_templates, emit_svg, template_arc_lengths, unroll_band_half, SvgOptions, TemplatePiece};

pub type IconSpec64 = IconSpec<f64>;
pub type IconSpec32 = IconSpec<f32>;
pub type Profile64 = Profile<f64>;
pub type Band64 = Band<f64>;
pub type IconMesh64 = IconMesh<f64>;
pub type IconMesh32 = IconMesh<f32>;
pub type TriMesh64 = mesh::TriMesh<f64>;
pub type TemplatePiece64 = TemplatePiece<f64>;
pub type Stadium64 = Stadium<f64>;
pub type SeamPairing64 = SeamPairing<f64>;
