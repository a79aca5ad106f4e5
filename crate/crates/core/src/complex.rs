//! The non-thickened complex: Θ with a simplicial cone over each component,
//! triangulated with one triangle per Γ-edge, and the links of its vertices.

use std::fmt::{self, Write as _};
use std::sync::OnceLock;

use thiserror::Error;

use crate::graph::{girth, Dart, SerreGraph, Vertex};
use crate::presentation::Presentation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ComplexVertex {
    Theta(Vertex),
    /// Cone tip over the component with this index.
    Tip(usize),
}

/// Triangle spanned by a Γ-edge and its cone tip.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Triangle {
    pub gamma_edge: usize,
    pub tip: usize,
    pub theta_edge: usize,
    /// Θ-vertices under the two ends of the Γ-edge.
    pub base: [Vertex; 2],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LinkVertex {
    /// A Θ-dart leaving the owner.
    ThetaDart(Dart),
    /// The cone edge from the owner up to its tip, through this global Γ-vertex.
    TipDart(Vertex),
    /// At a tip owner: the cone edge down to this global Γ-vertex.
    ConeDart(Vertex),
}

#[derive(Debug, Clone)]
pub struct LinkGraph {
    pub owner: ComplexVertex,
    pub graph: SerreGraph,
    pub kinds: Vec<LinkVertex>,
    /// Triangle of each link edge.
    pub triangles: Vec<usize>,
    /// Γ-dart (global) whose corner each link edge records; for Θ owners the
    /// edge runs from the tip-dart at `tail(g)` to the Θ-dart `f(g)`.
    pub gamma_darts: Vec<Dart>,
    /// For tip owners: link vertex i is local vertex i of the component and
    /// link edge j is local edge j, with matching orientation.
    pub tip_isomorphism: Option<(Vec<Vertex>, Vec<Dart>)>,
}

impl LinkGraph {
    pub fn girth(&self) -> Option<usize> {
        girth(&self.graph)
    }

    /// Two-colouring check; returns false if some edge joins equal colours.
    pub fn is_bipartite(&self) -> bool {
        let g = &self.graph;
        let mut colour = vec![None; g.vertex_count()];
        for s in g.vertices() {
            if colour[s.0].is_some() {
                continue;
            }
            colour[s.0] = Some(false);
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                let c = colour[v.0].unwrap();
                for &d in g.out_darts(v) {
                    let w = g.head(d);
                    match colour[w.0] {
                        None => {
                            colour[w.0] = Some(!c);
                            stack.push(w);
                        }
                        Some(x) if x == c => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }

    /// No loops and no parallel edges.
    pub fn is_simple(&self) -> bool {
        let g = &self.graph;
        g.vertices().all(|v| {
            let mut heads: Vec<Vertex> = g.out_darts(v).iter().map(|&d| g.head(d)).collect();
            let n = heads.len();
            heads.sort();
            heads.dedup();
            heads.len() == n && !heads.contains(&v)
        })
    }

    /// A path with `len` edges (so `len + 1` vertices).
    pub fn is_path(&self, len: usize) -> bool {
        let g = &self.graph;
        g.edge_count() == len
            && g.vertex_count() == len + 1
            && g.is_connected()
            && g.vertices().all(|v| g.degree(v) <= 2)
    }
}

#[derive(Debug)]
pub struct TriangleComplex<'p> {
    base: &'p Presentation,
    triangles: Vec<Triangle>,
    links: Vec<OnceLock<LinkGraph>>,
}

pub fn build_complex(p: &Presentation) -> TriangleComplex<'_> {
    let gamma = p.gamma();
    let triangles = (0..gamma.edge_count())
        .map(|e| {
            let g = Dart::forward(e);
            Triangle {
                gamma_edge: e,
                tip: p.component_of_dart(g),
                theta_edge: p.image(g).edge(),
                base: [p.vertex_image(gamma.tail(g)), p.vertex_image(gamma.head(g))],
            }
        })
        .collect();
    let n = p.theta().vertex_count() + p.components().len();
    TriangleComplex { base: p, triangles, links: (0..n).map(|_| OnceLock::new()).collect() }
}

impl<'p> TriangleComplex<'p> {
    pub fn presentation(&self) -> &'p Presentation {
        self.base
    }

    pub fn triangles(&self) -> &[Triangle] {
        &self.triangles
    }

    pub fn tip_count(&self) -> usize {
        self.base.components().len()
    }

    /// One cone edge per Γ-vertex.
    pub fn tip_edge_count(&self) -> usize {
        self.base.gamma().vertex_count()
    }

    /// Θ-vertices in id order, then tips in component order.
    pub fn vertices(&self) -> Vec<ComplexVertex> {
        self.base
            .theta()
            .vertices()
            .map(ComplexVertex::Theta)
            .chain((0..self.tip_count()).map(ComplexVertex::Tip))
            .collect()
    }

    pub fn vertex_name(&self, v: ComplexVertex) -> String {
        match v {
            ComplexVertex::Theta(v) => self.base.theta().vertex_id(v).to_string(),
            ComplexVertex::Tip(i) => format!("tip:{}", self.base.components()[i].name),
        }
    }

    /// Θ-vertex id, or `tip:<component>`.
    pub fn vertex(&self, name: &str) -> Result<ComplexVertex, ComplexError> {
        if let Some(v) = self.base.theta().vertex(name) {
            return Ok(ComplexVertex::Theta(v));
        }
        name.strip_prefix("tip:")
            .and_then(|c| self.base.components().iter().position(|comp| comp.name == c))
            .map(ComplexVertex::Tip)
            .ok_or_else(|| ComplexError::UnknownVertex(name.to_string()))
    }

    fn slot(&self, v: ComplexVertex) -> Option<usize> {
        let n = self.base.theta().vertex_count();
        match v {
            ComplexVertex::Theta(v) if v.0 < n => Some(v.0),
            ComplexVertex::Tip(i) if i < self.tip_count() => Some(n + i),
            _ => None,
        }
    }

    pub fn link_at(&self, v: ComplexVertex) -> Result<&LinkGraph, ComplexError> {
        let slot = self.slot(v).ok_or_else(|| ComplexError::UnknownVertex(format!("{v:?}")))?;
        Ok(self.links[slot].get_or_init(|| match v {
            ComplexVertex::Theta(v) => self.theta_link(v),
            ComplexVertex::Tip(i) => self.tip_link(i),
        }))
    }

    pub fn link_named(&self, name: &str) -> Result<&LinkGraph, ComplexError> {
        self.link_at(self.vertex(name)?)
    }

    fn theta_link(&self, v: Vertex) -> LinkGraph {
        let p = self.base;
        let (theta, gamma) = (p.theta(), p.gamma());
        let mut graph = SerreGraph::new();
        let mut kinds = Vec::new();
        let mut theta_slot = vec![usize::MAX; theta.dart_count()];
        for &t in theta.out_darts(v) {
            theta_slot[t.0] = graph.add_vertex(format!("theta:{}", theta.dart_name(t))).expect("fresh").0;
            kinds.push(LinkVertex::ThetaDart(t));
        }
        let mut tip_slot = vec![usize::MAX; gamma.vertex_count()];
        for a in gamma.vertices().filter(|&a| p.vertex_image(a) == v) {
            let (comp, id) = p.gamma_vertex_label(a);
            tip_slot[a.0] = graph.add_vertex(format!("tip:{comp}/{id}")).expect("fresh").0;
            kinds.push(LinkVertex::TipDart(a));
        }
        let (mut triangles, mut gamma_darts) = (Vec::new(), Vec::new());
        for g in gamma.darts().filter(|&g| tip_slot[gamma.tail(g).0] != usize::MAX) {
            let (a, t) = (Vertex(tip_slot[gamma.tail(g).0]), Vertex(theta_slot[p.image(g).0]));
            let comp = &p.components()[p.component_of_dart(g)].name;
            graph.add_edge(format!("{comp}/{}", p.gamma_dart_name(g)), a, t).expect("fresh");
            triangles.push(g.edge());
            gamma_darts.push(g);
        }
        LinkGraph {
            owner: ComplexVertex::Theta(v),
            graph,
            kinds,
            triangles,
            gamma_darts,
            tip_isomorphism: None,
        }
    }

    fn tip_link(&self, i: usize) -> LinkGraph {
        let p = self.base;
        let comp = &p.components()[i].graph;
        let mut graph = SerreGraph::new();
        for v in comp.vertices() {
            graph.add_vertex(comp.vertex_id(v)).expect("fresh");
        }
        for e in 0..comp.edge_count() {
            let [a, b] = comp.ends(e);
            graph.add_edge(comp.edge_id(e), a, b).expect("fresh");
        }
        let vertices: Vec<Vertex> = comp.vertices().collect();
        let darts: Vec<Dart> = (0..comp.edge_count()).map(Dart::forward).collect();
        LinkGraph {
            owner: ComplexVertex::Tip(i),
            kinds: vertices.iter().map(|&v| LinkVertex::ConeDart(p.global_vertex(i, v))).collect(),
            triangles: (0..comp.edge_count()).map(|e| p.global_dart(i, Dart::forward(e)).edge()).collect(),
            gamma_darts: darts.iter().map(|&d| p.global_dart(i, d)).collect(),
            graph,
            tip_isomorphism: Some((vertices, darts)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkGirth {
    pub vertex: String,
    pub girth: Option<usize>,
}

pub fn link_girth_report(c: &TriangleComplex<'_>) -> Vec<LinkGirth> {
    c.vertices()
        .into_iter()
        .map(|v| LinkGirth {
            vertex: c.vertex_name(v),
            girth: c.link_at(v).expect("own vertex").girth(),
        })
        .collect()
}

/// Structural checks every link must pass; returns a description of the first failure.
pub fn check_link_invariants(c: &TriangleComplex<'_>) -> Result<(), String> {
    let p = c.presentation();
    let mut base_corners = 0;
    for v in c.vertices() {
        let link = c.link_at(v).map_err(|e| e.to_string())?;
        let name = c.vertex_name(v);
        match v {
            ComplexVertex::Theta(_) => {
                base_corners += link.graph.edge_count();
                if !link.is_bipartite() {
                    return Err(format!("link at {name} is not bipartite"));
                }
                if !link.is_simple() {
                    return Err(format!("link at {name} has parallel edges"));
                }
            }
            ComplexVertex::Tip(i) => {
                let comp = &p.components()[i].graph;
                let (vs, ds) = link.tip_isomorphism.as_ref().ok_or("tip link without isomorphism")?;
                let ok = vs.len() == link.graph.vertex_count()
                    && ds.len() == link.graph.edge_count()
                    && ds.iter().enumerate().all(|(j, &d)| {
                        let ld = Dart::forward(j);
                        comp.tail(d) == vs[link.graph.tail(ld).0] && comp.head(d) == vs[link.graph.head(ld).0]
                    })
                    && vs.len() == comp.vertex_count()
                    && ds.len() == comp.edge_count();
                if !ok {
                    return Err(format!("tip link at {name} is not isomorphic to its component"));
                }
            }
        }
    }
    if base_corners != 2 * c.triangles().len() {
        return Err(format!("{base_corners} base corners for {} triangles", c.triangles().len()));
    }
    Ok(())
}

struct Dot<'a>(&'a str, &'a SerreGraph);

impl fmt::Display for Dot<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Dot(name, g) = *self;
        writeln!(f, "graph {} {{", quote(name))?;
        for v in g.vertices() {
            writeln!(f, "  n{} [label={}];", v.0, quote(g.vertex_id(v)))?;
        }
        for e in 0..g.edge_count() {
            let [a, b] = g.ends(e);
            writeln!(f, "  n{} -- n{} [label={}];", a.0, b.0, quote(g.edge_id(e)))?;
        }
        writeln!(f, "}}")
    }
}

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for ch in s.chars() {
        if ch == '"' || ch == '\\' {
            out.push('\\');
        }
        out.push(ch);
    }
    out.push('"');
    out
}

pub fn link_to_dot(c: &TriangleComplex<'_>, link: &LinkGraph) -> String {
    Dot(&format!("link {}", c.vertex_name(link.owner)), &link.graph).to_string()
}

/// The 1-skeleton: Θ plus one cone edge per Γ-vertex.
pub fn skeleton_to_dot(c: &TriangleComplex<'_>) -> String {
    let p = c.presentation();
    let theta = p.theta();
    let mut out = String::from("graph \"skeleton\" {\n");
    for v in theta.vertices() {
        let _ = writeln!(out, "  v{} [label={}];", v.0, quote(theta.vertex_id(v)));
    }
    for (i, comp) in p.components().iter().enumerate() {
        let _ = writeln!(out, "  t{i} [label={}, shape=box];", quote(&format!("tip:{}", comp.name)));
    }
    for e in 0..theta.edge_count() {
        let [a, b] = theta.ends(e);
        let _ = writeln!(out, "  v{} -- v{} [label={}];", a.0, b.0, quote(theta.edge_id(e)));
    }
    for a in p.gamma().vertices() {
        let (comp, id) = p.gamma_vertex_label(a);
        let _ = writeln!(
            out,
            "  v{} -- t{} [label={}, style=dashed];",
            p.vertex_image(a).0,
            p.component_of(a),
            quote(&format!("{comp}/{id}"))
        );
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::presentation::subdivide;

    fn girths(c: &TriangleComplex<'_>) -> Vec<(String, Option<usize>)> {
        link_girth_report(c).into_iter().map(|r| (r.vertex, r.girth)).collect()
    }

    #[test]
    fn sizes() {
        let id = fixtures::identity_triangle();
        let c = build_complex(&id);
        assert_eq!((c.triangles().len(), c.tip_count(), c.tip_edge_count()), (3, 1, 3));
        let f5 = fixtures::figure5();
        let c = build_complex(&f5);
        assert_eq!((c.triangles().len(), c.tip_count(), c.tip_edge_count()), (10, 2, 8));
        let hex = fixtures::identity_hexagon();
        assert_eq!(build_complex(&hex).triangles().len(), 6);
    }

    #[test]
    fn wheel_u4_link_is_k32() {
        let p = fixtures::figure5();
        let c = build_complex(&p);
        let link = c.link_named("u4").unwrap();
        let theta_side = link.kinds.iter().filter(|k| matches!(k, LinkVertex::ThetaDart(_))).count();
        let tip_side = link.kinds.iter().filter(|k| matches!(k, LinkVertex::TipDart(_))).count();
        assert_eq!((theta_side, tip_side, link.graph.edge_count()), (3, 2, 6));
        assert!(link.is_bipartite() && link.is_simple());
        assert_eq!(link.girth(), Some(4));
    }

    #[test]
    fn wheel_girths() {
        let p = fixtures::figure5();
        let c = build_complex(&p);
        // u2 meets Γ₁ in {u2u3, u2u4} and Γ₂ in {u2u1, u2u4}: its link is a path
        assert_eq!(
            girths(&c),
            [
                ("u1".into(), Some(4)),
                ("u2".into(), None),
                ("u3".into(), Some(4)),
                ("u4".into(), Some(4)),
                ("tip:g1".into(), Some(3)),
                ("tip:g2".into(), Some(3)),
            ]
        );
        assert!(c.link_named("u2").unwrap().is_path(4));
        check_link_invariants(&c).unwrap();
    }

    #[test]
    fn identity_links() {
        let p = fixtures::identity_triangle();
        let c = build_complex(&p);
        for v in ["u1", "u2", "u3"] {
            assert!(c.link_named(v).unwrap().is_path(2));
        }
        assert_eq!(c.link_named("tip:g1").unwrap().girth(), Some(3));
        assert!(c.link_named("nope").is_err());
        check_link_invariants(&c).unwrap();
    }

    #[test]
    fn subdivision_vertices_have_path_links() {
        let p = subdivide(&fixtures::figure5(), 3);
        let c = build_complex(&p);
        let original = fixtures::figure5();
        for r in link_girth_report(&c) {
            if r.vertex.starts_with("tip:") || original.theta().vertex(&r.vertex).is_some() {
                continue;
            }
            assert_eq!(r.girth, None, "{}", r.vertex);
            assert!(c.link_named(&r.vertex).unwrap().is_path(2));
        }
    }

    #[test]
    fn links_are_memoized() {
        let p = fixtures::figure5();
        let c = build_complex(&p);
        let a = c.link_named("u4").unwrap() as *const LinkGraph;
        let b = c.link_named("u4").unwrap() as *const LinkGraph;
        assert_eq!(a, b);
    }

    #[test]
    fn dot_output() {
        let p = fixtures::figure5();
        let c = build_complex(&p);
        let dot = link_to_dot(&c, c.link_named("u4").unwrap());
        assert!(dot.starts_with("graph \"link u4\" {\n"));
        assert_eq!(dot.matches(" -- ").count(), 6);
        let sk = skeleton_to_dot(&c);
        assert_eq!(sk.matches(" -- ").count(), 6 + 8);
    }
}
