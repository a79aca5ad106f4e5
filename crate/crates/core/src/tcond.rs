//! T(q) via jasmine witnesses.
//!
//! A jasmine with h petals around an interior vertex over `v ∈ Θ` is read off
//! the link of `v`: a closed walk that alternates Θ-darts (spokes) and
//! tip-darts (corners). Every spoke must be a piece, i.e. its Θ-edge has at
//! least two Γ-preimages, which is what keeps the diagram reduced.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complex::{ComplexVertex, LinkVertex, TriangleComplex};
use crate::format::PresentationFile;
use crate::graph::{has_immersed_closed_walk, Dart, Vertex};
use crate::pieces::PieceWalk;
use crate::presentation::Presentation;

pub const DEFAULT_MAX_Q: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

/// Immersed length-2 path `dart_in · dart_out` through a Γ-vertex over the centre.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Corner {
    pub lift: Vertex,
    pub dart_in: Dart,
    pub dart_out: Dart,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Spoke {
    /// Θ-dart leaving the centre, shared by consecutive corners.
    pub theta_dart: Dart,
    pub preimage_count: usize,
}

/// Corner `i` leaves along spoke `i`; corner `i + 1` arrives back along it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JasmineWitness {
    pub vertex: Vertex,
    pub corners: Vec<Corner>,
    pub spokes: Vec<Spoke>,
}

impl JasmineWitness {
    pub fn h(&self) -> usize {
        self.corners.len()
    }

    pub fn to_record(&self, p: &Presentation) -> WitnessRecord {
        WitnessRecord {
            vertex: p.theta().vertex_id(self.vertex).to_string(),
            h: self.h(),
            corners: self
                .corners
                .iter()
                .map(|c| {
                    let (component, lift) = p.gamma_vertex_label(c.lift);
                    CornerRecord {
                        component: component.to_string(),
                        tip_vertex_lift: lift.to_string(),
                        dart_in: p.gamma_dart_name(c.dart_in),
                        dart_out: p.gamma_dart_name(c.dart_out),
                    }
                })
                .collect(),
            spokes: self
                .spokes
                .iter()
                .map(|s| SpokeRecord {
                    theta_edge: p.theta().edge_id(s.theta_dart.edge()).to_string(),
                    preimage_count: s.preimage_count,
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessRecord {
    pub vertex: String,
    pub h: usize,
    pub corners: Vec<CornerRecord>,
    pub spokes: Vec<SpokeRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CornerRecord {
    pub component: String,
    pub tip_vertex_lift: String,
    pub dart_in: String,
    pub dart_out: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpokeRecord {
    pub theta_edge: String,
    pub preimage_count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TVerdict {
    Violated(JasmineWitness),
    /// One-sided: no jasmine witness exists, which does not rule out other diagrams.
    NoJasmineWitness,
}

/// Arcs `spoke_in -> spoke_out` between good Θ-darts at one vertex.
struct CornerGraph {
    darts: Vec<Dart>,
    arcs: Vec<Vec<(usize, Corner)>>,
}

fn corner_graph(c: &TriangleComplex<'_>, v: Vertex) -> CornerGraph {
    let p = c.presentation();
    let link = c.link_at(ComplexVertex::Theta(v)).expect("theta vertex");
    let good = |t: Dart| p.preimage_count(t.edge()) >= 2;
    let mut slot = HashMap::new();
    let mut darts = Vec::new();
    for kind in &link.kinds {
        if let LinkVertex::ThetaDart(t) = *kind {
            if good(t) {
                slot.insert(t, darts.len());
                darts.push(t);
            }
        }
    }
    let mut arcs = vec![Vec::new(); darts.len()];
    // link edges grouped by their tip-dart end, in link edge order
    let mut at_lift: Vec<(Vertex, Vec<Dart>)> = Vec::new();
    for &g in &link.gamma_darts {
        let a = p.gamma().tail(g);
        match at_lift.iter_mut().find(|(b, _)| *b == a) {
            Some((_, gs)) => gs.push(g),
            None => at_lift.push((a, vec![g])),
        }
    }
    for (a, gs) in &at_lift {
        for &back in gs {
            for &out in gs {
                if back == out {
                    continue;
                }
                if let (Some(&i), Some(&j)) = (slot.get(&p.image(back)), slot.get(&p.image(out))) {
                    arcs[i].push((j, Corner { lift: *a, dart_in: back.reverse(), dart_out: out }));
                }
            }
        }
    }
    for list in &mut arcs {
        list.sort_by_key(|(j, c)| (*j, c.dart_in, c.dart_out));
    }
    CornerGraph { darts, arcs }
}

/// First closed walk of length `h` (by start, then arc order) in the corner graph.
fn closed_walk(cg: &CornerGraph, h: usize) -> Option<Vec<(usize, Corner)>> {
    let n = cg.darts.len();
    for s in 0..n {
        // back[k][x]: a walk of exactly k arcs leads from x to s
        let mut back = vec![vec![false; n]; h + 1];
        back[0][s] = true;
        for k in 1..=h {
            for x in 0..n {
                back[k][x] = cg.arcs[x].iter().any(|&(y, _)| back[k - 1][y]);
            }
        }
        if !back[h][s] {
            continue;
        }
        let mut walk = Vec::with_capacity(h);
        let mut x = s;
        for k in (0..h).rev() {
            let &(y, corner) = cg.arcs[x].iter().find(|&&(y, _)| back[k][y]).expect("reachable");
            walk.push((x, corner));
            x = y;
        }
        return Some(walk);
    }
    None
}

fn check_q(q: usize, min: usize, max: usize) -> Result<(), TError> {
    if q < min {
        return Err(TError::InvalidParameter(format!("q must be at least {min}, got {q}")));
    }
    if q > max {
        return Err(TError::InvalidParameter(format!("q above the supported maximum {max}: {q}")));
    }
    Ok(())
}

/// Searches Θ-vertices in id order and, per vertex, petal counts `3 <= h < q` ascending.
pub fn find_t_witness(c: &TriangleComplex<'_>, q: usize) -> Result<Option<JasmineWitness>, TError> {
    find_t_witness_with(c, q, DEFAULT_MAX_Q)
}

pub fn find_t_witness_with(c: &TriangleComplex<'_>, q: usize, max_q: usize) -> Result<Option<JasmineWitness>, TError> {
    check_q(q, 3, max_q)?;
    let p = c.presentation();
    for v in p.theta().vertices() {
        let cg = corner_graph(c, v);
        if cg.darts.is_empty() {
            continue;
        }
        for h in 3..q {
            if let Some(walk) = closed_walk(&cg, h) {
                // the spoke after corner i is the target of arc i
                let corners: Vec<Corner> = walk.iter().map(|&(_, c)| c).collect();
                let spokes = corners
                    .iter()
                    .map(|c| {
                        let t = p.image(c.dart_out);
                        Spoke { theta_dart: t, preimage_count: p.preimage_count(t.edge()) }
                    })
                    .collect();
                return Ok(Some(JasmineWitness { vertex: v, corners, spokes }));
            }
        }
    }
    Ok(None)
}

pub fn check_t(c: &TriangleComplex<'_>, q: usize) -> Result<TVerdict, TError> {
    Ok(match find_t_witness(c, q)? {
        Some(w) => TVerdict::Violated(w),
        None => TVerdict::NoJasmineWitness,
    })
}

/// Four-petal jasmine built from a piece of length at least two: the two lifts
/// meet the centre (head of the first piece edge) in corners that are glued
/// alternately, each petal sharing a piece edge with its neighbours.
pub fn witness_from_long_piece(p: &Presentation, piece: &PieceWalk) -> Result<JasmineWitness, TError> {
    if piece.len() < 2 {
        return Err(TError::InvalidParameter(format!("piece of length {} is too short", piece.len())));
    }
    let gamma = p.gamma();
    let (d1, e1, d2, e2) = (piece.first[0], piece.first[1], piece.second[0], piece.second[1]);
    let consistent = d1 != d2
        && p.image(d1) == p.image(d2)
        && p.image(e1) == p.image(e2)
        && gamma.head(d1) == gamma.tail(e1)
        && gamma.head(d2) == gamma.tail(e2)
        && e1 != d1.reverse();
    if !consistent {
        return Err(TError::InvalidParameter("not a pair of distinct lifts".into()));
    }
    let one = Corner { lift: gamma.head(d1), dart_in: d1, dart_out: e1 };
    let two = Corner { lift: gamma.head(d2), dart_in: e2.reverse(), dart_out: d2.reverse() };
    let spoke = |g: Dart| Spoke { theta_dart: p.image(g), preimage_count: p.preimage_count(p.image(g).edge()) };
    Ok(JasmineWitness {
        vertex: p.theta().head(p.image(d1)),
        corners: vec![one, two, one, two],
        spokes: vec![spoke(e1), spoke(d2.reverse()), spoke(e1), spoke(d2.reverse())],
    })
}

/// Link girth bound forced by T(q) at every Θ-vertex: for q = 4 no immersed
/// closed walks of length 2 or 6, for larger q girth at least 2q.
pub fn necessary_link_girth(c: &TriangleComplex<'_>, q: usize) -> Result<bool, TError> {
    check_q(q, 4, usize::MAX)?;
    let p = c.presentation();
    Ok(p.theta().vertices().all(|v| {
        let link = c.link_at(ComplexVertex::Theta(v)).expect("theta vertex");
        if q == 4 {
            !has_immersed_closed_walk(&link.graph, 2) && !has_immersed_closed_walk(&link.graph, 6)
        } else {
            link.girth().is_none_or(|g| g >= 2 * q)
        }
    }))
}

/// Checks a witness record against raw presentation records, without using
/// the search code or the validated graph model.
pub fn validate_witness(file: &PresentationFile, w: &WitnessRecord, q: usize) -> Result<(), String> {
    let h = w.h;
    if !(3..q).contains(&h) {
        return Err(format!("h = {h} outside 3..{q}"));
    }
    if w.corners.len() != h || w.spokes.len() != h {
        return Err(format!("{} corners and {} spokes for h = {h}", w.corners.len(), w.spokes.len()));
    }
    let theta_ends: HashMap<&str, [&str; 2]> = file
        .theta
        .edges
        .iter()
        .map(|e| (e.id.as_str(), [e.ends[0].as_str(), e.ends[1].as_str()]))
        .collect();
    // (Γ tail, Γ head, Θ edge, Θ tail, Θ head) of a named dart
    type DartInfo<'a> = (&'a str, &'a str, &'a str, &'a str, &'a str);
    let dart = |comp: &str, name: &str| -> Result<DartInfo<'_>, String> {
        let c = file.gamma.iter().find(|c| c.name == comp).ok_or(format!("no component {comp}"))?;
        let (id, forward) = match name.strip_suffix('+') {
            Some(id) => (id, true),
            None => (name.strip_suffix('-').ok_or(format!("bad dart {name}"))?, false),
        };
        let e = c.edges.iter().find(|e| e.id == id).ok_or(format!("no edge {id} in {comp}"))?;
        let t = theta_ends.get(e.image.as_str()).ok_or(format!("no theta edge {}", e.image))?;
        let (a, b) = if forward { (&e.ends[0], &e.ends[1]) } else { (&e.ends[1], &e.ends[0]) };
        let (x, y) = if forward == e.aligned { (t[0], t[1]) } else { (t[1], t[0]) };
        Ok((a.as_str(), b.as_str(), e.image.as_str(), x, y))
    };
    let flip = |name: &str| match name.strip_suffix('+') {
        Some(id) => format!("{id}-"),
        None => format!("{}+", name.trim_end_matches('-')),
    };
    for (i, c) in w.corners.iter().enumerate() {
        let (_, into, _, _, at_in) = dart(&c.component, &c.dart_in)?;
        let (from, _, out_edge, centre, out_head) = dart(&c.component, &c.dart_out)?;
        if into != c.tip_vertex_lift || from != c.tip_vertex_lift {
            return Err(format!("corner {i} does not pass through {}", c.tip_vertex_lift));
        }
        if flip(&c.dart_in) == c.dart_out {
            return Err(format!("corner {i} backtracks"));
        }
        if centre != w.vertex || at_in != w.vertex {
            return Err(format!("corner {i} is not over {}", w.vertex));
        }
        let s = &w.spokes[i];
        if out_edge != s.theta_edge {
            return Err(format!("corner {i} leaves along {out_edge}, spoke says {}", s.theta_edge));
        }
        let next = &w.corners[(i + 1) % h];
        let (back_tail, _, back_edge, back_from, back_to) = dart(&next.component, &flip(&next.dart_in))?;
        if back_tail != next.tip_vertex_lift || back_edge != out_edge || (back_from, back_to) != (centre, out_head) {
            return Err(format!("corners {i} and {} do not share spoke {}", (i + 1) % h, s.theta_edge));
        }
        let count = file.gamma.iter().flat_map(|c| &c.edges).filter(|e| e.image == s.theta_edge).count();
        if count != s.preimage_count || count < 2 {
            return Err(format!("spoke {} has {count} preimages (claimed {})", s.theta_edge, s.preimage_count));
        }
    }
    Ok(())
}
