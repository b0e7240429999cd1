//! Mesh file formats.

use std::fmt::Write as _;

use nkicon::format::sig9;
use nkicon::geom::Vec3;
use nkicon::mesh::TriMesh;
use nkicon::twistglue::CurveKind;
use nkicon::IconMesh64;

/// Binary STL, little endian, with a fixed header so output is reproducible.
pub fn write_stl(mesh: &TriMesh<f64>, title: &str) -> Vec<u8> {
    let mut out = Vec::with_capacity(84 + 50 * mesh.triangles.len());
    let mut header = [b' '; 80];
    let title = title.as_bytes();
    let len = title.len().min(80);
    header[..len].copy_from_slice(&title[..len]);
    out.extend_from_slice(&header);
    out.extend_from_slice(&(mesh.triangles.len() as u32).to_le_bytes());
    let put = |out: &mut Vec<u8>, v: Vec3<f64>| {
        for c in [v.x, v.y, v.z] {
            out.extend_from_slice(&(c as f32).to_le_bytes());
        }
    };
    for (i, t) in mesh.triangles.iter().enumerate() {
        put(&mut out, mesh.triangle_normal(i));
        for &v in t {
            put(&mut out, mesh.vertices[v as usize]);
        }
        out.extend_from_slice(&[0, 0]);
    }
    out
}

#[derive(Debug, thiserror::Error)]
#[error("malformed STL: {0}")]
pub struct StlError(String);

/// Reads binary STL, merging bit-identical vertices.
pub fn read_stl(bytes: &[u8]) -> Result<TriMesh<f64>, StlError> {
    if bytes.len() < 84 {
        return Err(StlError(format!("{} bytes is shorter than the header", bytes.len())));
    }
    let count = u32::from_le_bytes(bytes[80..84].try_into().expect("4 bytes")) as usize;
    let expected = 84 + 50 * count;
    if bytes.len() != expected {
        return Err(StlError(format!("{count} triangles need {expected} bytes, got {}", bytes.len())));
    }
    let mut ids = std::collections::HashMap::new();
    let mut mesh = TriMesh { vertices: Vec::new(), triangles: Vec::with_capacity(count) };
    let f = |at: usize| f32::from_le_bytes(bytes[at..at + 4].try_into().expect("4 bytes"));
    for t in 0..count {
        let base = 84 + 50 * t + 12;
        let mut tri = [0u32; 3];
        for (c, slot) in tri.iter_mut().enumerate() {
            let at = base + 12 * c;
            let key = [f(at).to_bits(), f(at + 4).to_bits(), f(at + 8).to_bits()];
            *slot = *ids.entry(key).or_insert_with(|| {
                mesh.vertices.push(Vec3::new(f64::from(f(at)), f64::from(f(at + 4)), f64::from(f(at + 8))));
                (mesh.vertices.len() - 1) as u32
            });
        }
        mesh.triangles.push(tri);
    }
    Ok(mesh)
}

/// Wavefront OBJ: one `o` per smooth surface, then every edge curve as an `l`
/// polyline in its own group (closed curves repeat their first vertex).
pub fn write_obj(icon: &IconMesh64, title: &str) -> String {
    let mut out = format!("# {title}\n");
    for v in &icon.mesh.vertices {
        writeln!(out, "v {} {} {}", sig9(v.x), sig9(v.y), sig9(v.z)).unwrap();
    }
    for (c, component) in icon.components.iter().enumerate() {
        writeln!(out, "o surface-{c}").unwrap();
        writeln!(out, "# {:?}, {} triangles", component.kind, component.triangle_count).unwrap();
        for (t, tri) in icon.mesh.triangles.iter().enumerate() {
            if icon.triangle_component[t] as usize == c {
                writeln!(out, "f {} {} {}", tri[0] + 1, tri[1] + 1, tri[2] + 1).unwrap();
            }
        }
    }
    for (i, curve) in icon.edge_curves.iter().enumerate() {
        let kind = match curve.kind {
            CurveKind::Closed => "closed",
            CurveKind::Open { .. } => "open",
        };
        writeln!(out, "g edge-curve-{i}").unwrap();
        writeln!(out, "# {kind}").unwrap();
        let ids: Vec<String> = curve.vertices.iter().map(|v| (v + 1).to_string()).collect();
        writeln!(out, "l {}", ids.join(" ")).unwrap();
    }
    out
}
