//! Seeded random presentations for property tests.
//!
//! Θ is a random connected multigraph with at most six edges (loops and
//! parallel edges allowed). Each component is either an embedded cycle of Θ or
//! the folded wedge of one or two cyclically reduced closed walks, so every
//! component immerses and has a nonempty cycle core.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::format::{ComponentRecord, GammaEdgeRecord, PresentationFile, ThetaEdgeRecord, ThetaRecord};
use crate::graph::{Dart, SerreGraph, Vertex};
use crate::presentation::Presentation;

#[derive(Debug, Clone, Copy)]
pub struct CorpusLimits {
    pub max_theta_vertices: usize,
    pub max_theta_edges: usize,
    pub max_components: usize,
    pub max_component_edges: usize,
    pub max_walk_len: usize,
}

impl Default for CorpusLimits {
    fn default() -> Self {
        CorpusLimits {
            max_theta_vertices: 4,
            max_theta_edges: 6,
            max_components: 3,
            max_component_edges: 10,
            max_walk_len: 7,
        }
    }
}

/// `count` valid presentations drawn deterministically from `seed`.
pub fn corpus(seed: u64, count: usize) -> Vec<Presentation> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let limits = CorpusLimits::default();
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        if let Some(file) = random_file(&mut rng, &limits) {
            if let Ok((p, _)) = Presentation::from_file(&file, true) {
                out.push(p);
            }
        }
    }
    out
}

pub fn random_presentation(seed: u64) -> Presentation {
    corpus(seed, 1).pop().expect("one sample")
}

pub fn random_file<R: Rng>(rng: &mut R, limits: &CorpusLimits) -> Option<PresentationFile> {
    let nv = rng.gen_range(1..=limits.max_theta_vertices);
    let ne = rng.gen_range(nv..=limits.max_theta_edges.max(nv));
    let mut theta = SerreGraph::new();
    for i in 0..nv {
        theta.add_vertex(format!("u{i}")).ok()?;
    }
    for i in 1..nv {
        let j = rng.gen_range(0..i);
        theta.add_edge(format!("x{}", i - 1), Vertex(j), Vertex(i)).ok()?;
    }
    for k in nv - 1..ne {
        let (a, b) = (rng.gen_range(0..nv), rng.gen_range(0..nv));
        theta.add_edge(format!("x{k}"), Vertex(a), Vertex(b)).ok()?;
    }
    let components = rng.gen_range(1..=limits.max_components);
    let mut gamma = Vec::new();
    for c in 0..components {
        let walks: Vec<Vec<Dart>> = if rng.gen_bool(0.4) {
            vec![embedded_cycle(rng, &theta)?]
        } else {
            let k = rng.gen_range(1..=2);
            (0..k).map(|_| reduced_closed_walk(rng, &theta, limits.max_walk_len)).collect::<Option<_>>()?
        };
        let folded = fold_wedge(&theta, &walks);
        if folded.len() > limits.max_component_edges {
            return None;
        }
        gamma.push(component_record(&theta, format!("g{c}"), &folded));
    }
    let theta = ThetaRecord {
        edges: (0..theta.edge_count())
            .map(|e| {
                let [a, b] = theta.ends(e);
                ThetaEdgeRecord {
                    ends: [theta.vertex_id(a).to_string(), theta.vertex_id(b).to_string()],
                    id: theta.edge_id(e).to_string(),
                }
            })
            .collect(),
        vertices: theta.vertices().map(|v| theta.vertex_id(v).to_string()).collect(),
    };
    let mut file = PresentationFile { gamma, theta };
    file.sort();
    Some(file)
}

fn step<R: Rng>(rng: &mut R, g: &SerreGraph, from: Vertex, avoid: Option<Dart>) -> Option<Dart> {
    let options: Vec<Dart> = g.out_darts(from).iter().copied().filter(|&d| Some(d) != avoid).collect();
    options.choose(rng).copied()
}

/// A cyclically reduced closed walk, found by rejection sampling.
fn reduced_closed_walk<R: Rng>(rng: &mut R, g: &SerreGraph, max_len: usize) -> Option<Vec<Dart>> {
    let darts: Vec<Dart> = g.darts().collect();
    for _ in 0..200 {
        let len = rng.gen_range(1..=max_len);
        let mut walk = vec![*darts.choose(rng)?];
        while walk.len() < len {
            let last = *walk.last().unwrap();
            match step(rng, g, g.head(last), Some(last.reverse())) {
                Some(d) => walk.push(d),
                None => break,
            }
        }
        let (first, last) = (walk[0], *walk.last().unwrap());
        if walk.len() == len && g.head(last) == g.tail(first) && last != first.reverse() {
            return Some(walk);
        }
    }
    None
}

/// A simple cycle of `g`, read off a non-backtracking walk at its first repeated vertex.
fn embedded_cycle<R: Rng>(rng: &mut R, g: &SerreGraph) -> Option<Vec<Dart>> {
    for _ in 0..50 {
        let start = Vertex(rng.gen_range(0..g.vertex_count()));
        let mut seen = vec![start];
        let mut walk: Vec<Dart> = Vec::new();
        loop {
            let avoid = walk.last().map(|d| d.reverse());
            let Some(d) = step(rng, g, *seen.last().unwrap(), avoid) else { break };
            walk.push(d);
            let h = g.head(d);
            if let Some(pos) = seen.iter().position(|&v| v == h) {
                return Some(walk[pos..].to_vec());
            }
            seen.push(h);
        }
    }
    None
}

/// Stallings folding of the wedge of `walks` (as cycles sharing a base vertex).
/// Returns the edges as `(tail, head, image of the tail->head dart)`.
fn fold_wedge(theta: &SerreGraph, walks: &[Vec<Dart>]) -> Vec<(usize, usize, Dart)> {
    let mut parent = vec![0usize];
    let mut edges = Vec::new();
    for w in walks {
        // rotate so each petal starts at the wedge point over the same Θ-vertex
        let base = theta.tail(walks[0][0]);
        let Some(r) = w.iter().position(|&d| theta.tail(d) == base) else { continue };
        let w: Vec<Dart> = w[r..].iter().chain(&w[..r]).copied().collect();
        let mut prev = 0;
        for (i, &d) in w.iter().enumerate() {
            let next = if i + 1 == w.len() {
                0
            } else {
                parent.push(parent.len());
                parent.len() - 1
            };
            edges.push(Some((prev, next, d)));
            prev = next;
        }
    }
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    'fold: loop {
        let mut seen = std::collections::HashMap::new();
        for i in 0..edges.len() {
            let Some((a, b, d)) = edges[i] else { continue };
            for (t, h, img) in [(a, b, d), (b, a, d.reverse())] {
                let key = (find(&mut parent, t), img);
                match seen.get(&key) {
                    Some(&(j, hj)) if j != i => {
                        let (x, y) = (find(&mut parent, h), find(&mut parent, hj));
                        parent[x] = y;
                        edges[i] = None;
                        continue 'fold;
                    }
                    _ => {
                        seen.insert(key, (i, h));
                    }
                }
            }
        }
        break;
    }
    edges
        .into_iter()
        .flatten()
        .map(|(a, b, d)| (find(&mut parent, a), find(&mut parent, b), d))
        .collect()
}

fn component_record(theta: &SerreGraph, name: String, edges: &[(usize, usize, Dart)]) -> ComponentRecord {
    let mut vertices: Vec<usize> = edges.iter().flat_map(|&(a, b, _)| [a, b]).collect();
    vertices.sort_unstable();
    vertices.dedup();
    ComponentRecord {
        edges: edges
            .iter()
            .enumerate()
            .map(|(i, &(a, b, d))| GammaEdgeRecord {
                aligned: d.is_forward(),
                ends: [format!("y{a}"), format!("y{b}")],
                id: format!("e{i}"),
                image: theta.edge_id(d.edge()).to_string(),
            })
            .collect(),
        name,
        vertices: vertices.iter().map(|v| format!("y{v}")).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::to_canonical_json;

    #[test]
    fn corpus_is_deterministic_and_within_limits() {
        let a = corpus(7, 40);
        let b = corpus(7, 40);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(to_canonical_json(&x.to_file()), to_canonical_json(&y.to_file()));
            assert!(x.theta().dart_count() <= 12);
            assert!((1..=3).contains(&x.components().len()));
            assert!(x.components().iter().all(|c| c.graph.edge_count() <= 10));
        }
    }

    #[test]
    fn folding_identifies_shared_prefixes() {
        let mut theta = SerreGraph::new();
        let o = theta.add_vertex("o").unwrap();
        theta.add_edge("a", o, o).unwrap();
        theta.add_edge("b", o, o).unwrap();
        let (a, b) = (Dart::forward(0), Dart::forward(1));
        // a b and a b^-1 share the first edge after folding
        let folded = fold_wedge(&theta, &[vec![a, b], vec![a, b.reverse()]]);
        assert_eq!(folded.len(), 3);
        // an immersed cycle is already folded, proper powers included
        assert_eq!(fold_wedge(&theta, &[vec![a, b, a, b]]).len(), 4);
        assert_eq!(fold_wedge(&theta, &[vec![a, b], vec![a, b]]).len(), 2);
    }
}
