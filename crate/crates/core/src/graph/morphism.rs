use super::{Dart, SerreGraph, Vertex};

/// A graph homomorphism given on darts; the vertex map is induced by tails.
#[derive(Clone, Copy, Debug)]
pub struct GraphMorphism<'a> {
    source: &'a SerreGraph,
    target: &'a SerreGraph,
    dart_map: &'a [Dart],
}

impl<'a> GraphMorphism<'a> {
    /// Returns `None` unless `dart_map` commutes with reversal and is tail-compatible.
    pub fn new(source: &'a SerreGraph, target: &'a SerreGraph, dart_map: &'a [Dart]) -> Option<Self> {
        if dart_map.len() != source.dart_count()
            || dart_map.iter().any(|d| d.0 >= target.dart_count())
        {
            return None;
        }
        if source.darts().any(|d| dart_map[d.reverse().0] != dart_map[d.0].reverse()) {
            return None;
        }
        let m = GraphMorphism { source, target, dart_map };
        for v in source.vertices() {
            let mut images = source.out_darts(v).iter().map(|&d| target.tail(dart_map[d.0]));
            if let Some(first) = images.next() {
                if images.any(|w| w != first) {
                    return None;
                }
            }
        }
        Some(m)
    }

    pub fn source(&self) -> &'a SerreGraph {
        self.source
    }

    pub fn target(&self) -> &'a SerreGraph {
        self.target
    }

    pub fn image(&self, d: Dart) -> Dart {
        self.dart_map[d.0]
    }

    /// Induced vertex image; `None` for isolated vertices.
    pub fn vertex_image(&self, v: Vertex) -> Option<Vertex> {
        self.source.out_darts(v).first().map(|&d| self.target.tail(self.dart_map[d.0]))
    }

    /// Local injectivity: distinct darts at a common vertex have distinct images.
    pub fn is_immersion(&self) -> bool {
        self.source.vertices().all(|v| self.injective_at(v))
    }

    pub fn injective_at(&self, v: Vertex) -> bool {
        let mut images: Vec<Dart> = self.source.out_darts(v).iter().map(|&d| self.image(d)).collect();
        let n = images.len();
        images.sort_unstable();
        images.dedup();
        images.len() == n
    }
}
