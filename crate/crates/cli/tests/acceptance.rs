//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fail.

use std::f64::consts::{PI, SQRT_2};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use nkicon::classify::{designate, feature_counts_formula, feature_counts_trace_for};
use nkicon::dform::{dform_seam, pita_seam, relax_to_stadium, Stadium};
use nkicon::profile::{canonical_twists, make_profile};
use nkicon::twistglue::SurfaceKind;
use nkicon::{
    assemble_templates, emit_svg, synthesize_mesh, Axis, DesignationKind, FeatureCount, IconSpec64, SvgOptions,
};
use nkicon_cli::export::read_stl;
use nkicon_cli::{run_mesh, MeshFormat};

type Check = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

fn within(start: Instant, limit: Duration) -> Result<Duration, String> {
    let t = start.elapsed();
    ensure(t < limit, format!("took {t:?}, limit {limit:?}"))?;
    Ok(t)
}

fn nonzero_twists(n: u32, axis: Axis) -> Vec<u32> {
    canonical_twists(n, axis).unwrap().into_iter().filter(|t| !t.degenerate).map(|t| t.k).collect()
}

fn fc(c: u32, o: u32, t: u32, s: u32) -> FeatureCount {
    FeatureCount { closed_edges: c, open_edges: o, traceable_surfaces: t, other_surfaces: s }
}

fn known_forms() -> Check {
    let start = Instant::now();
    for (n, k, axis, want) in [(4, 1, Axis::Vv, fc(0, 2, 1, 0)), (4, 1, Axis::Mm, fc(1, 0, 0, 2)), (3, 1, Axis::Odd, fc(0, 1, 0, 1))] {
        let formula = feature_counts_formula(n, k, axis).map_err(|e| e.to_string())?;
        let trace = feature_counts_trace_for(n, k, axis).map_err(|e| e.to_string())?;
        let m = synthesize_mesh(&IconSpec64::new(n, k, axis, 1.0, 16).unwrap()).map_err(|e| e.to_string())?;
        let mesh = fc(
            m.closed_curve_count() as u32,
            m.open_curve_count() as u32,
            m.component_count(SurfaceKind::Traceable) as u32,
            m.component_count(SurfaceKind::Other) as u32,
        );
        ensure(
            formula == want && trace == want && mesh == want,
            format!("({n},{k}) {axis}: formula {formula}, trace {trace}, mesh {mesh}, want {want}"),
        )?;
    }
    let t = within(start, Duration::from_secs(1))?;
    Ok(format!("3 forms exact (formula, trace and mesh) in {t:.2?}"))
}

fn formula_matches_oracle() -> Check {
    let start = Instant::now();
    let mut cases = 0;
    for n in 3..=60 {
        for &axis in Axis::axes_for(n) {
            for k in nonzero_twists(n, axis) {
                let f = feature_counts_formula(n, k, axis).map_err(|e| e.to_string())?;
                let t = feature_counts_trace_for(n, k, axis).map_err(|e| e.to_string())?;
                ensure(f == t, format!("({n},{k}) {axis}: formula {f} vs trace {t}"))?;
                cases += 1;
            }
        }
    }
    let t = within(start, Duration::from_secs(10))?;
    Ok(format!("{cases} cases agree in {t:.2?}"))
}

fn designation_corollaries() -> Check {
    let d = |n, k, axis| designate(n, k, axis).map(|d| d.kind).map_err(|e| e.to_string());
    let mut odd = 0;
    for n in (3..=60).step_by(2) {
        for k in nonzero_twists(n, Axis::Odd) {
            if gcd(n, k) == 1 {
                ensure(d(n, k, Axis::Odd)? == DesignationKind::PitaForm, format!("({n},{k}) not a pita-form"))?;
                odd += 1;
            }
        }
    }
    ensure(d(9, 3, Axis::Odd)? == DesignationKind::Neither, "(9,3) is not NEITHER")?;
    for k in 1..=5 {
        ensure(d(22, k, Axis::Mm)? == DesignationKind::DForm, format!("mm (22,{k}) is not a D-form"))?;
    }
    Ok(format!("{odd} coprime odd icons are pita-forms, (9,3) neither, mm (22,1..5) D-forms"))
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn gauss_bonnet() -> Check {
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    for (n, k, axis) in [(3, 1, Axis::Odd), (4, 1, Axis::Vv), (4, 1, Axis::Mm), (6, 1, Axis::Mm), (8, 1, Axis::Mm)] {
        let m = synthesize_mesh(&IconSpec64::new(n, k, axis, 20.0, 512).unwrap()).map_err(|e| e.to_string())?;
        let defect = m.mesh.total_angle_defect().map_err(|e| e.to_string())?;
        let err = rel(defect, 4.0 * PI);
        ensure(err < 1e-6, format!("({n},{k}) {axis}: total defect {defect}"))?;
        worst = worst.max(err);
    }
    let t = within(start, Duration::from_secs(30))?;
    Ok(format!("5 meshes at 512 segments, worst relative error {worst:.1e}, {t:.2?}"))
}

/// `2 pi * centroid distance * area` of the half cross-section, via the
/// shoelace first moment.
fn pappus_volume(spec: &IconSpec64) -> f64 {
    let profile = make_profile(spec).unwrap();
    // closed polygon: the profile from top to bottom, then back up the axis
    let pts: Vec<(f64, f64)> = profile.vertices.iter().map(|v| (v.rho, v.z)).collect();
    let mut moment = 0.0;
    for i in 0..pts.len() {
        let (x0, y0) = pts[i];
        let (x1, y1) = pts[(i + 1) % pts.len()];
        let cross = x0 * y1 - x1 * y0;
        moment += (x0 + x1) * cross / 6.0;
    }
    2.0 * PI * moment.abs()
}

fn volume_conservation() -> Check {
    let mut worst_twist: f64 = 0.0;
    let mut worst_oracle: f64 = 0.0;
    for n in [4, 6, 8] {
        for &axis in Axis::axes_for(n) {
            let base = IconSpec64::new(n, 0, axis, 20.0, 1024).unwrap();
            let exact = pappus_volume(&base);
            let volumes: Vec<f64> = canonical_twists(n, axis)
                .unwrap()
                .into_iter()
                .map(|t| synthesize_mesh(&IconSpec64 { k: t.k, ..base }).unwrap().mesh.volume().unwrap())
                .collect();
            for &v in &volumes {
                worst_twist = worst_twist.max(rel(v, volumes[0]));
                worst_oracle = worst_oracle.max(rel(v, exact));
            }
        }
    }
    ensure(worst_twist < 1e-6, format!("twist changes volume by {worst_twist:.1e}"))?;
    ensure(worst_oracle < 1e-3, format!("mesh vs Pappus volume off by {worst_oracle:.1e}"))?;
    Ok(format!("across twists {worst_twist:.1e}, vs Pappus {worst_oracle:.1e} (segments 1024)"))
}

fn template_exactness() -> Check {
    let r = 1.0;
    let pieces = |n, axis| assemble_templates(&IconSpec64::with_cap_radius(n, 1, axis, r, 16).unwrap()).unwrap();
    let close = |a: f64, b: f64| (a - b).abs() <= 1e-12 * b.abs().max(1.0);

    let tri = pieces(3, Axis::Odd);
    ensure(tri.len() == 1 && tri[0].boundary.len() == 4, "trisphericon is not one piece of four arcs")?;
    let mut arcs: Vec<(f64, f64)> = tri[0]
        .boundary
        .iter()
        .map(|e| (e.geometry.radius().unwrap_or(f64::NAN), e.geometry.sweep().unwrap_or(f64::NAN).abs()))
        .collect();
    arcs.sort_by(|a, b| a.0.total_cmp(&b.0));
    let want = [(r, PI), (r, PI), (2.0 * r, PI / 2.0), (2.0 * r, PI / 2.0)];
    ensure(
        arcs.iter().zip(want).all(|(a, w)| close(a.0, w.0) && close(a.1, w.1)),
        format!("trisphericon arcs {arcs:?}"),
    )?;

    // hexagon with cap radius r/2, i.e. side r
    let hex = assemble_templates(&IconSpec64::new(6, 1, Axis::Mm, r, 16).unwrap()).unwrap();
    for p in &hex {
        let cap = p.boundary[p.caps()[0]].geometry.length();
        let mut sectors: Vec<f64> = p
            .boundary
            .iter()
            .filter(|e| e.geometry.radius().is_some() && !e.geometry.is_semicircle())
            .map(|e| e.geometry.length())
            .collect();
        sectors.sort_by(f64::total_cmp);
        ensure(sectors.len() == 4, "hexagon piece needs four sector arcs")?;
        ensure(
            close(sectors[0], cap) && close(sectors[1], cap) && close(sectors[2], 2.0 * cap) && close(sectors[3], 2.0 * cap),
            format!("hexagon arcs {sectors:?}, cap {cap}"),
        )?;
    }

    let oct = pieces(8, Axis::Mm);
    let outer = (1.0 + SQRT_2) * PI * r;
    for p in &oct {
        for e in &p.boundary {
            let g = &e.geometry;
            match g.sweep() {
                Some(s) if !g.is_semicircle() => ensure(close(s.abs(), PI / SQRT_2), format!("sector angle {s}"))?,
                None => ensure(close(g.length(), outer), format!("rectangle side {}", g.length()))?,
                _ => {}
            }
        }
        let n_outer = p.boundary.iter().filter(|e| e.geometry.radius().is_some() && close(e.geometry.length(), outer)).count();
        ensure(n_outer == 2, format!("{n_outer} outer arcs of length (1+sqrt 2) pi r"))?;
    }
    Ok("Fig 6 arcs, hexagon 2:1:1 arcs, octagon pi/sqrt2 sectors and (1+sqrt2) pi r sides exact to 1e-12".into())
}

fn appendix_ratios() -> Check {
    let ratios = |n| -> Result<Vec<f64>, String> {
        let spec = IconSpec64::with_cap_radius(n, 1, Axis::Mm, 1.0, 16).unwrap();
        assemble_templates(&spec)
            .unwrap()
            .iter()
            .map(|p| relax_to_stadium(p).map(|s| s.ratio).map_err(|e| e.to_string()))
            .collect()
    };
    let oct = ratios(8)?;
    let want8 = 3.0 + 2.0 * SQRT_2;
    ensure(oct.iter().all(|&x| (x - want8).abs() < 1e-9), format!("mm(8,1) ratio {oct:?}, want {want8}"))?;
    let dec = ratios(10)?;
    let printed = 8.1447;
    ensure(
        dec.iter().all(|&x| (x - printed).abs() < 1e-3),
        format!("mm(8,1) ratio {:.10} ok; mm(10,1) ratio {:.4} vs printed {printed}", oct[0], dec[0]),
    )?;
    Ok(format!("mm(8,1) {:.10}, mm(10,1) {:.4}", oct[0], dec[0]))
}

fn seam_properties() -> Check {
    let fig12 = Stadium::new(50.0, 1.5).unwrap();
    ensure(rel(fig12.perimeter(), 100.0 + 3.0 * PI) < 1e-9, "Fig 12 perimeter")?;
    let mut seams = 0;
    for (h, r) in [(50.0, 1.5), (PI, 1.0), (4.0, 1.0), (0.5, 3.0)] {
        let st = Stadium::new(h, r).unwrap();
        let p = st.perimeter();
        for i in 0..16 {
            let s = pita_seam(&st, p * (i as f64 + 0.37) / 16.0, 257).map_err(|e| e.to_string())?;
            ensure(s.is_monotone() && s.zip_mismatch() < 1e-9, format!("pita seam ({h},{r}) #{i}"))?;
            ensure((s.endpoints[1] - s.endpoints[0] - p / 2.0).abs() < 1e-9, "pita endpoints not P/2 apart")?;
            let d = dform_seam(&st, &st, p * i as f64 / 16.0, 257).map_err(|e| e.to_string())?;
            ensure(d.is_monotone() && d.zip_mismatch() < 1e-9, format!("D-form seam ({h},{r}) #{i}"))?;
            seams += 2;
        }
    }
    Ok(format!("{seams} seams isometric, pita ends P/2 apart, Fig 12 perimeter {:.9}", fig12.perimeter()))
}

fn file_integrity() -> Check {
    let mut files = 0;
    for (n, k, axis) in [(3, 1, Axis::Odd), (4, 1, Axis::Vv), (4, 1, Axis::Mm), (6, 1, Axis::Mm), (8, 1, Axis::Mm), (9, 2, Axis::Odd)] {
        let spec = IconSpec64::new(n, k, axis, 20.0, 128).unwrap();
        let a = run_mesh(&spec, MeshFormat::Stl).map_err(|e| e.to_string())?;
        let b = run_mesh(&spec, MeshFormat::Stl).map_err(|e| e.to_string())?;
        ensure(a.bytes == b.bytes, format!("({n},{k}) {axis}: STL not reproducible"))?;
        let back = read_stl(&a.bytes).map_err(|e| e.to_string())?;
        back.check_closed_manifold().map_err(|e| format!("({n},{k}) {axis}: {e}"))?;
        ensure(back.euler_characteristic() == 2, format!("({n},{k}) {axis}: V-E+F != 2"))?;
        ensure(back.triangles.len() == a.triangles, "STL triangle count")?;

        let pieces = assemble_templates(&spec).map_err(|e| e.to_string())?;
        for p in &pieces {
            ensure(p.closure_gap() < 1e-9, format!("({n},{k}) {axis}: template gap {}", p.closure_gap()))?;
        }
        let svg = emit_svg(&pieces, &SvgOptions::default()).map_err(|e| e.to_string())?;
        ensure(svg == emit_svg(&pieces, &SvgOptions::default()).unwrap(), "SVG not reproducible")?;
        ensure(svg.matches(" Z\"").count() == pieces.len(), "SVG outline not closed")?;
        files += 2;
    }
    // and through the binary
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut outputs = Vec::new();
    for run in 0..2 {
        let path = dir.path().join(format!("run{run}.svg"));
        let status = Command::new(env!("CARGO_BIN_EXE_nkicon"))
            .args(["template", "--n", "6", "--k", "1", "--axis", "mm", "--out"])
            .arg(&path)
            .status()
            .map_err(|e| e.to_string())?;
        ensure(status.success(), "nkicon template failed")?;
        outputs.push(std::fs::read(&path).map_err(|e| e.to_string())?);
    }
    ensure(outputs[0] == outputs[1], "CLI SVG runs differ")?;
    Ok(format!("{files} STL/SVG outputs closed, manifold and byte-identical across runs"))
}

type Criterion = (&'static str, fn() -> Check);

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("known-form classification", known_forms),
        ("formula equals trace oracle", formula_matches_oracle),
        ("designation corollaries", designation_corollaries),
        ("discrete Gauss-Bonnet", gauss_bonnet),
        ("volume conservation", volume_conservation),
        ("template exactness", template_exactness),
        ("appendix ratios", appendix_ratios),
        ("seam properties", seam_properties),
        ("file integrity", file_integrity),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("acceptance {}: PASS {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("acceptance {}: FAIL {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
