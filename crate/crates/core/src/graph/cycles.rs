use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap, VecDeque};
use std::ops::Add;

use num_traits::Zero;

use super::{ClosedWalk, Dart, SerreGraph, Vertex};

/// Length of the shortest immersed closed walk, `None` for a forest.
///
/// A loop has length 1 and a pair of parallel edges length 2. One BFS per root;
/// every non-tree edge `{a, b}` closes a walk of length `d(a) + d(b) + 1` that
/// contains a cycle, and the bound is attained when the root lies on a shortest cycle.
pub fn girth(g: &SerreGraph) -> Option<usize> {
    let n = g.vertex_count();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent_edge = vec![usize::MAX; n];
    for root in g.vertices() {
        dist.fill(usize::MAX);
        parent_edge.fill(usize::MAX);
        dist[root.0] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &d in g.out_darts(v) {
                let w = g.head(d);
                if dist[w.0] == usize::MAX {
                    dist[w.0] = dist[v.0] + 1;
                    parent_edge[w.0] = d.edge();
                    queue.push_back(w);
                }
            }
        }
        for e in 0..g.edge_count() {
            let [a, b] = g.ends(e);
            if dist[a.0] == usize::MAX || parent_edge[a.0] == e || parent_edge[b.0] == e {
                continue;
            }
            let len = dist[a.0] + dist[b.0] + 1;
            if best.is_none_or(|b| len < b) {
                best = Some(len);
            }
        }
    }
    best
}

/// Iteratively removes vertices of degree at most one. What remains is the
/// union of all immersed cycles; empty exactly for forests.
pub fn prune_cycle_core(g: &SerreGraph) -> SerreGraph {
    g.induced(&core_vertices(g)).0
}

pub fn core_vertices(g: &SerreGraph) -> Vec<bool> {
    let mut degree: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut keep = vec![true; g.vertex_count()];
    let mut stack: Vec<Vertex> = g.vertices().filter(|v| degree[v.0] <= 1).collect();
    while let Some(v) = stack.pop() {
        if !keep[v.0] {
            continue;
        }
        keep[v.0] = false;
        for &d in g.out_darts(v) {
            let w = g.head(d);
            if keep[w.0] {
                degree[w.0] -= 1;
                if degree[w.0] <= 1 {
                    stack.push(w);
                }
            }
        }
    }
    keep
}

/// Minimum total weight of an immersed closed walk for strictly positive edge
/// weights, together with a realizing injective cycle.
///
/// One Dijkstra run per root; every non-tree edge closes a candidate cycle
/// through the lowest common ancestor of its ends.
pub fn min_weight_cycle<W, F>(g: &SerreGraph, weight: F) -> Option<(W, ClosedWalk)>
where
    W: Clone + Ord + Add<Output = W> + Zero,
    F: Fn(usize) -> W,
{
    let weights: Vec<W> = (0..g.edge_count()).map(&weight).collect();
    debug_assert!(weights.iter().all(|w| *w > W::zero()), "weights must be positive");
    let n = g.vertex_count();
    let mut best: Option<(W, Vec<Dart>)> = None;
    for root in g.vertices() {
        let mut dist: Vec<Option<W>> = vec![None; n];
        let mut parent: Vec<Option<Dart>> = vec![None; n];
        let mut done = vec![false; n];
        let mut heap = BinaryHeap::new();
        dist[root.0] = Some(W::zero());
        heap.push(Reverse((W::zero(), root.0)));
        while let Some(Reverse((dv, v))) = heap.pop() {
            if done[v] {
                continue;
            }
            done[v] = true;
            for &d in g.out_darts(Vertex(v)) {
                let w = g.head(d).0;
                let cand = dv.clone() + weights[d.edge()].clone();
                if !done[w] && dist[w].as_ref().is_none_or(|cur| cand < *cur) {
                    dist[w] = Some(cand.clone());
                    parent[w] = Some(d);
                    heap.push(Reverse((cand, w)));
                }
            }
        }
        let path_to = |mut v: Vertex| {
            let mut path = Vec::new();
            while let Some(d) = parent[v.0] {
                path.push(d);
                v = g.tail(d);
            }
            path.reverse();
            path
        };
        for e in 0..g.edge_count() {
            let [a, b] = g.ends(e);
            if dist[a.0].is_none() || parent[a.0].map(|d| d.edge()) == Some(e) || parent[b.0].map(|d| d.edge()) == Some(e) {
                continue;
            }
            let (pa, pb) = (path_to(a), path_to(b));
            let common = pa.iter().zip(&pb).take_while(|(x, y)| x == y).count();
            let mut cycle: Vec<Dart> = pa[common..].to_vec();
            cycle.push(Dart::forward(e));
            cycle.extend(pb[common..].iter().rev().map(|d| d.reverse()));
            let total = cycle
                .iter()
                .fold(W::zero(), |acc, d| acc + weights[d.edge()].clone());
            if best.as_ref().is_none_or(|(bw, _)| total < *bw) {
                best = Some((total, cycle));
            }
        }
    }
    best.map(|(w, darts)| {
        let walk = ClosedWalk::new(g, darts).expect("extracted cycle is closed");
        debug_assert!(walk.is_immersed());
        (w, walk)
    })
}

/// Lexicographically minimal rotation over both orientations.
pub fn canonical_cycle(darts: &[Dart]) -> Vec<Dart> {
    let n = darts.len();
    let reversed: Vec<Dart> = darts.iter().rev().map(|d| d.reverse()).collect();
    let mut best: Option<Vec<Dart>> = None;
    for seq in [darts, &reversed[..]] {
        for r in 0..n {
            let rot: Vec<Dart> = seq[r..].iter().chain(&seq[..r]).copied().collect();
            if best.as_ref().is_none_or(|b| rot < *b) {
                best = Some(rot);
            }
        }
    }
    best.unwrap_or_default()
}

/// All immersed closed walks of length at most `max_len`, up to rotation and
/// reversal, each in canonical form. Ordered by length, then lexicographically.
pub fn enumerate_immersed_cycles(g: &SerreGraph, max_len: usize) -> Vec<ClosedWalk> {
    let mut found: BTreeSet<(usize, Vec<Dart>)> = BTreeSet::new();
    let mut path = Vec::with_capacity(max_len);
    for d0 in g.darts() {
        path.clear();
        path.push(d0);
        extend_cycles(g, max_len, &mut path, &mut found);
    }
    found
        .into_iter()
        .map(|(_, darts)| ClosedWalk::new(g, darts).expect("enumerated walks are closed"))
        .collect()
}

// Walks whose first dart is the minimal dart index; every cycle has such a rotation.
fn extend_cycles(g: &SerreGraph, max_len: usize, path: &mut Vec<Dart>, found: &mut BTreeSet<(usize, Vec<Dart>)>) {
    let first = path[0];
    let last = *path.last().unwrap();
    if g.head(last) == g.tail(first) && first != last.reverse() {
        found.insert((path.len(), canonical_cycle(path)));
    }
    if path.len() == max_len {
        return;
    }
    for &d in g.out_darts(g.head(last)) {
        if d == last.reverse() || d < first {
            continue;
        }
        path.push(d);
        extend_cycles(g, max_len, path, found);
        path.pop();
    }
}

/// Whether an immersed closed walk of length exactly `len` exists.
pub fn has_immersed_closed_walk(g: &SerreGraph, len: usize) -> bool {
    if len == 0 {
        return false;
    }
    let m = g.dart_count();
    for d0 in g.darts() {
        let mut cur = vec![false; m];
        cur[d0.0] = true;
        for _ in 1..len {
            let mut next = vec![false; m];
            for d in g.darts().filter(|d| cur[d.0]) {
                for &e in g.out_darts(g.head(d)) {
                    if e != d.reverse() {
                        next[e.0] = true;
                    }
                }
            }
            cur = next;
        }
        if g.darts().any(|d| cur[d.0] && g.head(d) == g.tail(d0) && d0 != d.reverse()) {
            return true;
        }
    }
    false
}
