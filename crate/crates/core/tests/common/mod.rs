//! Brute-force oracles. Each one recomputes a quantity from first principles
//! without calling the search code it is compared against.

#![allow(dead_code)]

use std::collections::HashMap;

use gsc::format::PresentationFile;
use gsc::graph::{Dart, SerreGraph, Vertex};
use gsc::Presentation;

/// Number of Γ-walks over a Θ dart sequence, by plain path enumeration.
pub fn naive_lift_count(p: &Presentation, theta_path: &[Dart]) -> usize {
    fn extend(p: &Presentation, at: Vertex, rest: &[Dart]) -> usize {
        let Some((&t, rest)) = rest.split_first() else { return 1 };
        p.gamma()
            .out_darts(at)
            .iter()
            .filter(|&&g| p.image(g) == t)
            .map(|&g| extend(p, p.gamma().head(g), rest))
            .sum()
    }
    let gamma = p.gamma();
    gamma
        .darts()
        .filter(|&g| p.image(g) == theta_path[0])
        .map(|g| extend(p, gamma.head(g), &theta_path[1..]))
        .sum()
}

/// Fewest pieces whose cyclic concatenation is `image`, over every rotation and
/// every set of cut points.
pub fn exhaustive_cover(p: &Presentation, image: &[Dart]) -> Option<usize> {
    let n = image.len();
    let mut best: Option<usize> = None;
    for r in 0..n {
        let rotated: Vec<Dart> = (0..n).map(|i| image[(r + i) % n]).collect();
        for mask in 0u32..(1 << (n - 1)) {
            let mut parts = Vec::new();
            let mut start = 0;
            for i in 1..n {
                if mask & (1 << (i - 1)) != 0 {
                    parts.push(&rotated[start..i]);
                    start = i;
                }
            }
            parts.push(&rotated[start..]);
            if parts.iter().all(|part| naive_lift_count(p, part) >= 2) {
                best = Some(best.map_or(parts.len(), |b| b.min(parts.len())));
            }
        }
    }
    best
}

/// Minimum total weight over simple cycles (loops and parallel pairs
/// included), by exhaustive DFS.
pub fn brute_min_cycle(g: &SerreGraph, weight: &dyn Fn(usize) -> u64) -> Option<u64> {
    fn dfs(
        g: &SerreGraph,
        weight: &dyn Fn(usize) -> u64,
        start: Vertex,
        first: Dart,
        at: Vertex,
        total: u64,
        visited: &mut Vec<bool>,
        best: &mut Option<u64>,
    ) {
        for &d in g.out_darts(at) {
            let h = g.head(d);
            let w = total + weight(d.edge());
            if h == start && d.edge() != first.edge() {
                *best = Some(best.map_or(w, |b| b.min(w)));
            } else if !visited[h.0] && h != start {
                visited[h.0] = true;
                dfs(g, weight, start, first, h, w, visited, best);
                visited[h.0] = false;
            }
        }
    }
    let mut best = None;
    for s in g.vertices() {
        for &d in g.out_darts(s) {
            let h = g.head(d);
            let w = weight(d.edge());
            if h == s {
                best = Some(best.map_or(w, |b: u64| b.min(w)));
                continue;
            }
            let mut visited = vec![false; g.vertex_count()];
            visited[s.0] = true;
            visited[h.0] = true;
            dfs(g, weight, s, d, h, w, &mut visited, &mut best);
        }
    }
    best
}

/// Girth of a multigraph given as an edge list, by deleting each edge and
/// finding the shortest path between its ends.
pub fn edge_list_girth(n: usize, edges: &[(usize, usize)]) -> Option<usize> {
    let mut best: Option<usize> = None;
    for (skip, &(a, b)) in edges.iter().enumerate() {
        if a == b {
            return Some(1);
        }
        let mut dist = vec![usize::MAX; n];
        dist[a] = 0;
        let mut queue = std::collections::VecDeque::from([a]);
        while let Some(x) = queue.pop_front() {
            for (i, &(u, v)) in edges.iter().enumerate() {
                if i == skip {
                    continue;
                }
                for (from, to) in [(u, v), (v, u)] {
                    if from == x && dist[to] == usize::MAX {
                        dist[to] = dist[x] + 1;
                        queue.push_back(to);
                    }
                }
            }
        }
        if dist[b] != usize::MAX {
            best = Some(best.map_or(dist[b] + 1, |g| g.min(dist[b] + 1)));
        }
    }
    best
}

/// Link girths at every Θ-vertex, rebuilt from the raw records: one link
/// vertex per Θ-dart at the vertex and per Γ-vertex over it, one link edge per
/// Γ-dart starting over it.
pub fn record_link_girths(file: &PresentationFile) -> Vec<(String, Option<usize>)> {
    let theta: HashMap<&str, (&str, &str)> =
        file.theta.edges.iter().map(|e| (e.id.as_str(), (e.ends[0].as_str(), e.ends[1].as_str()))).collect();
    let mut out = Vec::new();
    for v in &file.theta.vertices {
        let mut ids: HashMap<String, usize> = HashMap::new();
        let mut edges = Vec::new();
        let mut id = |key: String| {
            let n = ids.len();
            *ids.entry(key).or_insert(n)
        };
        for comp in &file.gamma {
            for e in &comp.edges {
                let (x, y) = theta[e.image.as_str()];
                // each Γ-dart with the orientation of its Θ-dart
                for (gt, forward) in [(&e.ends[0], e.aligned), (&e.ends[1], !e.aligned)] {
                    let tail = if forward { x } else { y };
                    if tail == v {
                        let tip = id(format!("tip {}/{}", comp.name, gt));
                        let dart = id(format!("theta {} {}", e.image, forward));
                        edges.push((tip, dart));
                    }
                }
            }
        }
        out.push((v.clone(), edge_list_girth(ids.len(), &edges)));
    }
    for comp in &file.gamma {
        let idx: HashMap<&str, usize> = comp.vertices.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
        let edges: Vec<(usize, usize)> =
            comp.edges.iter().map(|e| (idx[e.ends[0].as_str()], idx[e.ends[1].as_str()])).collect();
        out.push((format!("tip:{}", comp.name), edge_list_girth(comp.vertices.len(), &edges)));
    }
    out
}

/// Whether some Θ-vertex link has a closed walk of length `2h`, `3 <= h < q`,
/// alternating Θ-dart and tip-dart vertices, non-backtracking at tip-darts and
/// with every Θ-dart on a piece edge. Plain DFS over link darts.
pub fn brute_jasmine_exists(p: &Presentation, q: usize) -> bool {
    let c = gsc::build_complex(p);
    let gamma = p.gamma();
    let mut preimages = vec![0usize; p.theta().edge_count()];
    for e in 0..gamma.edge_count() {
        preimages[p.image(Dart::forward(e)).edge()] += 1;
    }
    for v in p.theta().vertices() {
        let link = c.link_at(gsc::ComplexVertex::Theta(v)).unwrap();
        let g = &link.graph;
        let good = |x: Vertex| match link.kinds[x.0] {
            gsc::complex::LinkVertex::ThetaDart(t) => preimages[t.edge()] >= 2,
            _ => true,
        };
        let is_tip = |x: Vertex| matches!(link.kinds[x.0], gsc::complex::LinkVertex::TipDart(_));
        fn walk(
            g: &SerreGraph,
            start: Vertex,
            at: Vertex,
            last: Option<Dart>,
            left: usize,
            good: &dyn Fn(Vertex) -> bool,
            is_tip: &dyn Fn(Vertex) -> bool,
        ) -> bool {
            if left == 0 {
                return at == start;
            }
            g.out_darts(at).iter().any(|&d| {
                let backtrack = last == Some(d.reverse());
                if backtrack && is_tip(at) {
                    return false;
                }
                let h = g.head(d);
                good(h) && walk(g, start, h, Some(d), left - 1, good, is_tip)
            })
        }
        for h in 3..q {
            for s in g.vertices().filter(|&s| !is_tip(s) && good(s)) {
                if walk(g, s, s, None, 2 * h, &good, &is_tip) {
                    return true;
                }
            }
        }
    }
    false
}

/// All immersed Θ-walks of exactly `len` darts.
pub fn theta_walks(p: &Presentation, len: usize) -> Vec<Vec<Dart>> {
    let theta = p.theta();
    let mut out: Vec<Vec<Dart>> = theta.darts().map(|d| vec![d]).collect();
    for _ in 1..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                let last = *w.last().unwrap();
                theta
                    .out_darts(theta.head(last))
                    .iter()
                    .filter(move |&&d| d != last.reverse())
                    .map(move |&d| {
                        let mut w = w.clone();
                        w.push(d);
                        w
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
    }
    out
}
