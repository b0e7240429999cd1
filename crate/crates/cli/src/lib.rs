//! Library side of the `nkicon` command: each `run_*` function produces the
//! bytes of one output file plus whatever is reported on the terminal.

pub mod export;

use std::f64::consts::PI;

use serde::Serialize;

use nkicon::classify::{check_twist, designation_from_counts, feature_counts_formula, feature_counts_trace_for};
use nkicon::format::sig9;
use nkicon::profile::canonical_twists;
use nkicon::{
    assemble_templates, dform_seam, emit_svg, pita_seam, synthesize_mesh, Axis, DesignationKind, FeatureCount,
    IconError, IconSpec64, SeamPairing64, Stadium64, SvgOptions, TemplatePiece64,
};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Degenerate(IconError),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Degenerate(_) => 3,
            CliError::Io(_) => 4,
        }
    }
}

impl From<IconError> for CliError {
    fn from(e: IconError) -> Self {
        match e {
            IconError::InvalidSpec(_)
            | IconError::ParityMismatch { .. }
            | IconError::NonPositive(_)
            | IconError::InvalidStadium(_) => CliError::Usage(e.to_string()),
            _ => CliError::Degenerate(e),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// Resolves the axis for `n`, defaulting to the only choice for odd `n`.
pub fn resolve_axis(n: u32, axis: Option<Axis>) -> CliResult<Axis> {
    match axis.or_else(|| Axis::default_for(n)) {
        Some(a) if a.is_consistent_with(n) => Ok(a),
        Some(a) => Err(IconError::ParityMismatch { n, axis: a }.into()),
        None => Err(CliError::Usage(format!("n = {n} is even: choose --axis vv or --axis mm"))),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassifyReport {
    pub n: u32,
    pub k: u32,
    pub axis: Axis,
    pub counts: FeatureCount,
    pub designation: DesignationKind,
    pub reason: String,
}

pub fn run_classify(n: u32, k: u32, axis: Axis) -> CliResult<ClassifyReport> {
    let counts = feature_counts_formula(n, k, axis)?;
    let d = designation_from_counts(&counts);
    Ok(ClassifyReport { n, k, axis, counts, designation: d.kind, reason: d.reason })
}

pub fn classify_json(report: &ClassifyReport) -> String {
    to_json(report)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurveyRow {
    pub n: u32,
    pub k: u32,
    pub axis: Axis,
    pub formula: FeatureCount,
    pub trace: FeatureCount,
    pub designation: DesignationKind,
}

impl SurveyRow {
    pub fn matches(&self) -> bool {
        self.formula == self.trace
    }
}

/// Every canonical `(n, k, axis)` with `3 <= n <= n_max` and a non-trivial twist.
pub fn run_survey(n_max: u32) -> CliResult<Vec<SurveyRow>> {
    if n_max < 3 {
        return Err(CliError::Usage(format!("--n-max must be >= 3, got {n_max}")));
    }
    let mut rows = Vec::new();
    for n in 3..=n_max {
        for &axis in Axis::axes_for(n) {
            for t in canonical_twists(n, axis)? {
                if t.degenerate || check_twist(n, t.k, axis).is_err() {
                    continue;
                }
                let formula = feature_counts_formula(n, t.k, axis)?;
                let trace = feature_counts_trace_for(n, t.k, axis)?;
                let designation = designation_from_counts(&formula).kind;
                rows.push(SurveyRow { n, k: t.k, axis, formula, trace, designation });
            }
        }
    }
    Ok(rows)
}

pub fn survey_csv(rows: &[SurveyRow]) -> CliResult<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "n", "k", "axis", "closed_edges", "open_edges", "traceable_surfaces", "other_surfaces", "trace_closed_edges",
        "trace_open_edges", "trace_traceable_surfaces", "trace_other_surfaces", "match", "designation",
    ])
    .map_err(csv_io)?;
    for r in rows {
        let (f, t) = (r.formula, r.trace);
        w.write_record([
            r.n.to_string(),
            r.k.to_string(),
            r.axis.to_string(),
            f.closed_edges.to_string(),
            f.open_edges.to_string(),
            f.traceable_surfaces.to_string(),
            f.other_surfaces.to_string(),
            t.closed_edges.to_string(),
            t.open_edges.to_string(),
            t.traceable_surfaces.to_string(),
            t.other_surfaces.to_string(),
            r.matches().to_string(),
            r.designation.to_string(),
        ])
        .map_err(csv_io)?;
    }
    w.into_inner().map_err(|e| CliError::Io(e.into_error()))
}

/// Pretty JSON with every float cut to 9 significant digits, matching the
/// text outputs.
pub fn to_json<T: Serialize>(value: &T) -> String {
    fn round(v: &mut serde_json::Value) {
        match v {
            serde_json::Value::Number(x) if x.is_f64() => {
                let r: f64 = sig9(x.as_f64().expect("is_f64")).parse().expect("sig9 parses");
                *v = serde_json::json!(r);
            }
            serde_json::Value::Array(a) => a.iter_mut().for_each(round),
            serde_json::Value::Object(o) => o.values_mut().for_each(round),
            _ => {}
        }
    }
    let mut v = serde_json::to_value(value).expect("plain data serializes");
    round(&mut v);
    serde_json::to_string_pretty(&v).expect("plain data serializes") + "\n"
}

fn csv_io(e: csv::Error) -> CliError {
    CliError::Io(std::io::Error::other(e))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MeshFormat {
    Stl,
    Obj,
}

#[derive(Clone, Debug)]
pub struct MeshOutput {
    pub bytes: Vec<u8>,
    pub volume: f64,
    pub angle_defect: f64,
    pub triangles: usize,
    /// `None` when the twist does not cut anything open.
    pub classification: Option<ClassifyReport>,
    pub warning: Option<String>,
}

impl MeshOutput {
    /// Plain `key value` lines with 9 significant digits.
    pub fn summary(&self) -> String {
        let mut s = format!(
            "triangles {}\nvolume {}\nangle_defect {}\nangle_defect_over_4pi {}\n",
            self.triangles,
            sig9(self.volume),
            sig9(self.angle_defect),
            sig9(self.angle_defect / (4.0 * PI))
        );
        if let Some(c) = &self.classification {
            let f = c.counts;
            s += &format!(
                "closed_edges {}\nopen_edges {}\ntraceable_surfaces {}\nother_surfaces {}\ndesignation {}\n",
                f.closed_edges, f.open_edges, f.traceable_surfaces, f.other_surfaces, c.designation
            );
        }
        s
    }
}

fn title(spec: &IconSpec64) -> String {
    format!("nkicon ({},{}) {} side {}", spec.n, spec.k, spec.axis, sig9(spec.side))
}

pub fn run_mesh(spec: &IconSpec64, format: MeshFormat) -> CliResult<MeshOutput> {
    let icon = synthesize_mesh(spec)?;
    let volume = icon.mesh.volume()?;
    let angle_defect = icon.mesh.total_angle_defect()?;
    let (classification, warning) = match check_twist(spec.n, spec.k, spec.axis) {
        Ok(()) => (Some(run_classify(spec.n, spec.k, spec.axis)?), None),
        Err(e) => (None, Some(format!("{e}; exporting the uncut solid without classification"))),
    };
    let bytes = match format {
        MeshFormat::Stl => export::write_stl(&icon.mesh, &title(spec)),
        MeshFormat::Obj => export::write_obj(&icon, &title(spec)).into_bytes(),
    };
    Ok(MeshOutput { bytes, volume, angle_defect, triangles: icon.mesh.triangles.len(), classification, warning })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TemplateFormat {
    Svg,
    Json,
}

#[derive(Clone, Debug)]
pub struct TemplateOutput {
    pub text: String,
    pub pieces: Vec<TemplatePiece64>,
    pub classification: ClassifyReport,
    pub warning: Option<String>,
}

#[derive(Serialize)]
struct TemplateJson<'a> {
    n: u32,
    k: u32,
    axis: Axis,
    side: f64,
    designation: DesignationKind,
    pieces: &'a [TemplatePiece64],
}

pub fn run_template(spec: &IconSpec64, format: TemplateFormat, options: &SvgOptions) -> CliResult<TemplateOutput> {
    let classification = run_classify(spec.n, spec.k, spec.axis)?;
    let pieces = assemble_templates(spec)?;
    let warning = (classification.designation == DesignationKind::Neither).then(|| {
        format!(
            "({},{}) {} is neither a pita-form nor a D-form: {} pieces",
            spec.n,
            spec.k,
            spec.axis,
            pieces.len()
        )
    });
    let text = match format {
        TemplateFormat::Svg => emit_svg(&pieces, options)?,
        TemplateFormat::Json => {
            let doc = TemplateJson {
                n: spec.n,
                k: spec.k,
                axis: spec.axis,
                side: spec.side,
                designation: classification.designation,
                pieces: &pieces,
            };
            to_json(&doc)
        }
    };
    Ok(TemplateOutput { text, pieces, classification, warning })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeamFormat {
    Csv,
    Json,
}

/// A pita-form seam when `offset` is `None`, otherwise a D-form seam between
/// `a` and `b` (which defaults to a copy of `a`).
pub fn run_stadium_seam(
    a: &Stadium64,
    b: Option<&Stadium64>,
    start: f64,
    offset: Option<f64>,
    samples: usize,
) -> CliResult<SeamPairing64> {
    Ok(match offset {
        None => pita_seam(a, start, samples)?,
        Some(offset) => dform_seam(a, b.unwrap_or(a), offset, samples)?,
    })
}

pub fn seam_csv(seam: &SeamPairing64) -> CliResult<Vec<u8>> {
    let mut out = format!("# perimeter {}\n# offset {}\n", sig9(seam.perimeter), sig9(seam.offset));
    if !seam.endpoints.is_empty() {
        let ends: Vec<String> = seam.endpoints.iter().map(|&e| sig9(e)).collect();
        out += &format!("# endpoints {}\n", ends.join(" "));
    }
    if let Some(note) = seam.note {
        out += &format!("# note {note}\n");
    }
    let mut w = csv::Writer::from_writer(out.into_bytes());
    w.write_record(["s_a", "s_b"]).map_err(csv_io)?;
    for &(a, b) in &seam.pairs {
        w.write_record([sig9(a), sig9(b)]).map_err(csv_io)?;
    }
    w.into_inner().map_err(|e| CliError::Io(e.into_error()))
}

pub fn seam_json(seam: &SeamPairing64) -> String {
    to_json(seam)
}
