use std::collections::{BTreeMap, HashMap};

use crate::classify::check_twist;
use crate::error::Result;
use crate::geom::{Rigid2, Vec2};
use crate::profile::{band_geometry, make_profile, IconSpec};
use crate::scalar::Scalar;
use crate::twistglue::Side;

use super::develop::{develop_patch, Patch};
use super::element::{BoundaryElement, ElementRef, PatchRef, SeamLabel, SeamSource, StartMarker, TemplatePiece};

/// `(patch, element)` inside one component.
type Slot = (usize, usize);

/// Two cut elements on opposite sides with the same endpoints.
#[derive(Clone, Copy, Debug)]
struct Glue {
    a: Slot,
    b: Slot,
}

impl Glue {
    fn other(&self, patch: usize) -> Slot {
        if self.a.0 == patch {
            self.b
        } else {
            self.a
        }
    }

    fn own(&self, patch: usize) -> Slot {
        if self.a.0 == patch {
            self.a
        } else {
            self.b
        }
    }
}

/// Unrolls every smooth surface of the icon into one flat piece.
///
/// The half-bands of a surface form a chain (or a ring) through the cut-plane
/// gluings. The half-band nearest mid-height is laid down first and the rest
/// are attached outwards in both directions; a ring is left open at the
/// gluing farthest from that root.
pub fn assemble_templates<T: Scalar>(spec: &IconSpec<T>) -> Result<Vec<TemplatePiece<T>>> {
    check_twist(spec.n, spec.k, spec.axis)?;
    let bands = band_geometry(&make_profile(spec)?);
    let patches: Vec<Patch<T>> = Side::BOTH
        .iter()
        .flat_map(|&side| (0..bands.len() as u32).map(move |b| (side, b)))
        .map(|(side, b)| develop_patch(spec, &bands, side, b))
        .collect();

    let glues = find_glues(&patches);
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); patches.len()];
    for (g, glue) in glues.iter().enumerate() {
        incident[glue.a.0].push(g);
        incident[glue.b.0].push(g);
    }

    let mut seen = vec![false; patches.len()];
    let mut chains = Vec::new();
    for start in 0..patches.len() {
        if seen[start] {
            continue;
        }
        let (nodes, links, ring) = walk_chain(start, &glues, &incident);
        for &p in &nodes {
            seen[p] = true;
        }
        chains.push((nodes, links, ring));
    }

    let mut pieces: Vec<TemplatePiece<T>> = chains
        .into_iter()
        .map(|(nodes, links, ring)| {
            let scale = spec.side;
            lay_out(&patches, &bands, &glues, &nodes, &links, ring, scale)
        })
        .collect();
    label_seams(&mut pieces);
    Ok(pieces)
}

fn find_glues<T: Scalar>(patches: &[Patch<T>]) -> Vec<Glue> {
    let mut open: BTreeMap<(u32, u32), Slot> = BTreeMap::new();
    let mut glues = Vec::new();
    for (p, patch) in patches.iter().enumerate() {
        for (i, e) in patch.elements.iter().enumerate() {
            if !matches!(e.source, SeamSource::Cut { .. }) {
                continue;
            }
            let key = (e.start_id.min(e.end_id), e.start_id.max(e.end_id));
            match open.remove(&key) {
                Some(a) => {
                    let other = &patches[a.0].elements[a.1];
                    debug_assert!(patches[a.0].side != patch.side);
                    debug_assert!(other.start_id == e.end_id && other.end_id == e.start_id);
                    glues.push(Glue { a, b: (p, i) });
                }
                None => {
                    open.insert(key, (p, i));
                }
            }
        }
    }
    debug_assert!(open.is_empty(), "unmatched cut edges {open:?}");
    glues
}

/// Orders the patches of the component containing `start` along its gluings.
///
/// Returns the patches, the gluing between each consecutive pair (and from the
/// last back to the first for a ring), and whether it is a ring. Chains start
/// at their lower end in (side, band) order.
fn walk_chain(start: usize, glues: &[Glue], incident: &[Vec<usize>]) -> (Vec<usize>, Vec<usize>, bool) {
    let mut component = vec![start];
    let mut stack = vec![start];
    while let Some(p) = stack.pop() {
        for &g in &incident[p] {
            let q = glues[g].other(p).0;
            if !component.contains(&q) {
                component.push(q);
                stack.push(q);
            }
        }
    }
    let ring = component.iter().all(|&p| incident[p].len() == 2);
    let first = component
        .iter()
        .copied()
        .filter(|&p| ring || incident[p].len() < 2)
        .min()
        .expect("component is not empty");

    let mut nodes = vec![first];
    let mut links = Vec::new();
    let mut cur = first;
    let mut prev = None;
    while let Some(g) = incident[cur].iter().copied().find(|&g| Some(g) != prev) {
        links.push(g);
        let next = glues[g].other(cur).0;
        if next == first {
            break;
        }
        nodes.push(next);
        prev = Some(g);
        cur = next;
    }
    (nodes, links, ring)
}

fn lay_out<T: Scalar>(
    patches: &[Patch<T>],
    bands: &[crate::profile::Band<T>],
    glues: &[Glue],
    nodes: &[usize],
    links: &[usize],
    ring: bool,
    scale: T,
) -> TemplatePiece<T> {
    let len = nodes.len();
    let height = |p: usize| bands[patches[p].band as usize].mid_z().abs();
    let lowest = nodes.iter().map(|&p| height(p)).fold(T::infinity(), T::min);
    let tol = T::lit(1e-9) * scale;
    let root = (0..len).find(|&i| height(nodes[i]) <= lowest + tol).unwrap_or(0);

    // which links stay glued, and the attachment order outwards from the root
    let (forward, backward) = if ring { (len / 2, (len - 1) / 2) } else { (len - 1 - root, root) };
    let cut = ring.then(|| links[(root + forward) % len]);
    let mut placed: Vec<Option<Vec<BoundaryElement<T>>>> = vec![None; len];
    placed[root] = Some(patches[nodes[root]].elements.clone());
    let attach = |from: usize, to: usize, link: usize, placed: &mut Vec<Option<Vec<BoundaryElement<T>>>>| {
        let glue = &glues[link];
        let (fp, tp) = (nodes[from], nodes[to]);
        let fixed = placed[from].as_ref().expect("attached in order")[glue.own(fp).1];
        let moving = patches[tp].elements[glue.other(fp).1];
        let m = Rigid2::matching(
            moving.geometry.end(),
            moving.geometry.start(),
            fixed.geometry.start(),
            fixed.geometry.end(),
        );
        placed[to] = Some(
            patches[tp]
                .elements
                .iter()
                .map(|e| BoundaryElement { geometry: e.geometry.transformed(&m), ..*e })
                .collect(),
        );
    };
    for step in 1..=forward {
        let (from, to) = ((root + step - 1) % len, (root + step) % len);
        attach(from, to, links[from], &mut placed);
    }
    for step in 1..=backward {
        let (from, to) = ((root + len - step + 1) % len, (root + len - step) % len);
        attach(from, to, links[to], &mut placed);
    }
    let placed: Vec<Vec<BoundaryElement<T>>> = placed.into_iter().map(|p| p.expect("every patch placed")).collect();

    // glued partner of each element, by position within `nodes`
    let index: HashMap<usize, usize> = nodes.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let mut partner: HashMap<Slot, Slot> = HashMap::new();
    for &g in links {
        if Some(g) == cut {
            continue;
        }
        let (a, b) = (glues[g].a, glues[g].b);
        let (a, b) = ((index[&a.0], a.1), (index[&b.0], b.1));
        partner.insert(a, b);
        partner.insert(b, a);
    }

    // walk the outer boundary, starting at the first cap if there is one
    let slots: Vec<Slot> = (0..len).flat_map(|i| (0..placed[i].len()).map(move |j| (i, j))).collect();
    let free: Vec<Slot> = slots.iter().copied().filter(|s| !partner.contains_key(s)).collect();
    let start = free
        .iter()
        .copied()
        .find(|&(i, j)| placed[i][j].geometry.is_semicircle())
        .unwrap_or(free[0]);
    let mut boundary = Vec::with_capacity(free.len());
    let mut slot = start;
    loop {
        boundary.push(placed[slot.0][slot.1]);
        let mut next = (slot.0, (slot.1 + 1) % placed[slot.0].len());
        while let Some(&(i, j)) = partner.get(&next) {
            next = (i, (j + 1) % placed[i].len());
        }
        if next == start {
            break;
        }
        slot = next;
        assert!(boundary.len() <= free.len(), "boundary walk does not close");
    }
    debug_assert_eq!(boundary.len(), free.len(), "piece boundary is not a single loop");

    let start_marker = StartMarker { position: boundary[0].geometry.start(), inward: Vec2::new(T::zero(), T::zero()), element: 0 };
    TemplatePiece {
        patches: nodes.iter().map(|&p| PatchRef { side: patches[p].side, band: patches[p].band }).collect(),
        boundary,
        seam_labels: Vec::new(),
        start_marker,
    }
}

fn seam_key<T>(e: &BoundaryElement<T>) -> (u8, u32, u32, u32) {
    match e.source {
        SeamSource::Rim { side, profile_vertex } => (0, side as u32, profile_vertex, 0),
        SeamSource::Cut { .. } => (1, e.start_id.min(e.end_id), e.start_id.max(e.end_id), 0),
    }
}

/// Pairs every boundary element with its mate and places the start markers.
fn label_seams<T: Scalar>(pieces: &mut [TemplatePiece<T>]) {
    let mut groups: HashMap<(u8, u32, u32, u32), Vec<ElementRef>> = HashMap::new();
    let mut order = Vec::new();
    for (p, piece) in pieces.iter().enumerate() {
        for (i, e) in piece.boundary.iter().enumerate() {
            let key = seam_key(e);
            let group = groups.entry(key).or_default();
            if group.is_empty() {
                order.push(key);
            }
            group.push(ElementRef { piece: p, element: i });
        }
    }
    let mut labels: Vec<Vec<Option<SeamLabel>>> = pieces.iter().map(|p| vec![None; p.boundary.len()]).collect();
    for (id, key) in order.iter().enumerate() {
        let group = &groups[key];
        assert_eq!(group.len(), 2, "seam {key:?} has {} elements", group.len());
        let (a, b) = (group[0], group[1]);
        let ea = &pieces[a.piece].boundary[a.element];
        let eb = &pieces[b.piece].boundary[b.element];
        let reversed = ea.start_id == eb.end_id;
        labels[a.piece][a.element] = Some(SeamLabel { id: id as u32, first: true, mate: b, reversed });
        labels[b.piece][b.element] = Some(SeamLabel { id: id as u32, first: false, mate: a, reversed });
    }
    for (p, piece) in pieces.iter_mut().enumerate() {
        piece.seam_labels = labels[p].iter().map(|l| l.expect("every element is mated")).collect();
    }

    let is_cap = |r: &ElementRef, pieces: &[TemplatePiece<T>]| pieces[r.piece].boundary[r.element].geometry.is_semicircle();
    for p in 0..pieces.len() {
        let piece = &pieces[p];
        let element = (0..piece.boundary.len())
            .find(|&i| {
                let mate = piece.seam_labels[i].mate;
                is_cap(&mate, pieces) && !piece.boundary[i].geometry.is_semicircle()
            })
            .or_else(|| (0..piece.boundary.len()).find(|&i| is_cap(&piece.seam_labels[i].mate, pieces)))
            .unwrap_or(0);
        let g = piece.boundary[element].geometry;
        let t = g.mid_tangent();
        pieces[p].start_marker = StartMarker { position: g.midpoint(), inward: Vec2::new(-t.y, t.x), element };
    }
}

/// Lengths of the boundary elements of a piece, in chain order.
pub fn template_arc_lengths<T: Scalar>(piece: &TemplatePiece<T>) -> Vec<T> {
    piece.boundary.iter().map(|e| e.geometry.length()).collect()
}
