//! Flat paper templates: each smooth surface of an icon unrolled into one
//! piece bounded by exact segments and circular arcs.

mod assemble;
mod develop;
mod element;
mod svg;

pub use assemble::{assemble_templates, template_arc_lengths};
pub use develop::{unroll_band_half, Development};
pub use element::{
    BoundaryElement, Element, ElementRef, PatchRef, SeamLabel, SeamSource, StartMarker, TemplatePiece, Turn,
};
pub use svg::{emit_svg, SvgOptions};
