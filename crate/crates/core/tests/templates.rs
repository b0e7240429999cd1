use std::fs;
use std::path::PathBuf;

use nkicon::unroll::SeamSource;
use nkicon::{assemble_templates, emit_svg, synthesize_mesh, Axis, IconSpec, SvgOptions};

fn golden(name: &str, actual: &str) {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        fs::create_dir_all(path.parent().unwrap()).unwrap();
        fs::write(&path, actual).unwrap();
        return;
    }
    let expected = fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("{}: {e} (run with UPDATE_GOLDEN=1 to create)", path.display()));
    assert_eq!(actual, expected, "{name} differs from its golden file");
}

#[test]
fn golden_layouts() {
    let cases = [
        ("trisphericon_r30.svg", 3, Axis::Odd),
        ("sphericon_vv4_r30.svg", 4, Axis::Vv),
        ("dual_sphericon_mm4_r30.svg", 4, Axis::Mm),
        ("hexasphericon_mm6_r30.svg", 6, Axis::Mm),
        ("octasphericon_mm8_r30.svg", 8, Axis::Mm),
    ];
    for (name, n, axis) in cases {
        let spec = IconSpec::with_cap_radius(n, 1, axis, 30.0f64, 64).unwrap();
        let svg = emit_svg(&assemble_templates(&spec).unwrap(), &SvgOptions::default()).unwrap();
        golden(name, &svg);
    }
}

#[test]
fn trisphericon_sheet_is_120mm_square() {
    let spec = IconSpec::with_cap_radius(3, 1, Axis::Odd, 30.0f64, 64).unwrap();
    let pieces = assemble_templates(&spec).unwrap();
    let (lo, hi) = pieces[0].bounds();
    assert!((hi.x - lo.x - 120.0).abs() < 1e-9 && (hi.y - lo.y - 120.0).abs() < 1e-9);
    let opts = SvgOptions::default();
    let svg = emit_svg(&pieces, &opts).unwrap();
    let width = 120.0 + 2.0 * opts.margin;
    assert!(svg.contains(&format!(r#"width="{width}mm" height="{width}mm""#)));
}

/// Every boundary element is sewn to exactly one other, so the template
/// outlines add up to twice the edges of the icon plus both sides of any
/// cut that opened a ring of surface.
#[test]
fn boundary_rolls_back_up_to_the_edge_curves() {
    for (n, k, axis) in [(3, 1, Axis::Odd), (4, 1, Axis::Vv), (6, 1, Axis::Mm), (8, 1, Axis::Mm), (9, 2, Axis::Odd), (12, 3, Axis::Vv)] {
        let spec = IconSpec::new(n, k, axis, 5.0f64, 2048).unwrap();
        let pieces = assemble_templates(&spec).unwrap();
        let mesh = synthesize_mesh(&spec).unwrap();
        let curves: f64 = (0..mesh.edge_curves.len()).map(|i| mesh.curve_length(i)).sum();
        let mut rims = 0.0;
        let mut cuts = 0.0;
        for e in pieces.iter().flat_map(|p| &p.boundary) {
            match e.source {
                SeamSource::Rim { .. } => rims += e.geometry.length(),
                SeamSource::Cut { .. } => cuts += e.geometry.length(),
            }
        }
        let total: f64 = pieces.iter().map(|p| p.boundary_length()).sum();
        assert!((total - rims - cuts).abs() < 1e-9 * total);
        assert!((rims - 2.0 * curves).abs() / rims < 1e-5, "({n},{k}) {axis}: {rims} vs {}", 2.0 * curves);
    }
}
