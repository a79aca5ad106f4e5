//! Isosceles triangle metrics on the complex and the link condition.
//!
//! Verdicts use exact angles only; side lengths are floating point and appear
//! in reports and sanity checks.

mod angle;

pub use angle::{AngleQ, ParseAngleError};

use num_traits::{Float, FloatConst, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complex::{ComplexError, ComplexVertex, LinkGraph, TriangleComplex};
use crate::graph::min_weight_cycle;

pub type Angle = AngleQ<i64>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MetricError {
    #[error("unknown preset `{0}` (expected one of {})", PRESETS.join(", "))]
    UnknownPreset(String),
    #[error("invalid angles: {0}")]
    InvalidAngles(String),
}

pub const PRESETS: [&str; 4] = ["3,6-euclidean", "4,5-euclidean", "3,7-hyperbolic", "4,5-hyperbolic"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Model {
    Euclidean,
    Hyperbolic,
}

/// Every 2-cell is the same isosceles triangle: apex `tip` at the cone tip,
/// `base` at both Θ-vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MetricSpec {
    model: Model,
    tip: Angle,
    base: Angle,
}

impl MetricSpec {
    pub fn new(model: Model, tip: Angle, base: Angle) -> Result<Self, MetricError> {
        let open = |a: Angle| a > Angle::zero() && a < Angle::pi();
        if !open(tip) || !open(base) {
            return Err(MetricError::InvalidAngles(format!("angles {tip}, {base} must lie strictly between 0 and pi")));
        }
        let sum = tip + base * 2;
        match model {
            Model::Euclidean if sum != Angle::pi() => {
                Err(MetricError::InvalidAngles(format!("euclidean angle sum is {sum}, not pi")))
            }
            Model::Hyperbolic if sum >= Angle::pi() => {
                Err(MetricError::InvalidAngles(format!("hyperbolic angle sum {sum} is not below pi")))
            }
            _ => Ok(MetricSpec { model, tip, base }),
        }
    }

    pub fn preset(name: &str) -> Result<Self, MetricError> {
        let (model, tip, base) = match name {
            "3,6-euclidean" => (Model::Euclidean, Angle::new(2, 3), Angle::new(1, 6)),
            "4,5-euclidean" => (Model::Euclidean, Angle::new(1, 2), Angle::new(1, 4)),
            "3,7-hyperbolic" => (Model::Hyperbolic, Angle::new(2, 3), Angle::new(1, 7)),
            "4,5-hyperbolic" => (Model::Hyperbolic, Angle::new(1, 2), Angle::new(1, 5)),
            _ => return Err(MetricError::UnknownPreset(name.to_string())),
        };
        MetricSpec::new(model, tip, base)
    }

    /// Preset used for the pair `(p, q)` unless overridden.
    pub fn default_preset_name(p: usize, q: usize) -> Option<&'static str> {
        match (p, q) {
            (3, 6) => Some("3,6-euclidean"),
            (4, 5) => Some("4,5-euclidean"),
            (3, 7) => Some("3,7-hyperbolic"),
            _ => None,
        }
    }

    pub fn model(&self) -> Model {
        self.model
    }

    pub fn tip_angle(&self) -> Angle {
        self.tip
    }

    pub fn base_angle(&self) -> Angle {
        self.base
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Sides<F> {
    pub leg: F,
    pub base: F,
}

pub type Sides64 = Sides<f64>;
pub type Sides32 = Sides<f32>;

/// Isosceles realization with apex `tip`. Euclidean legs are normalized to 1;
/// hyperbolic triangles are determined by their angles (curvature −1).
pub fn realize_sides<F: Float + FloatConst>(spec: &MetricSpec) -> Sides<F> {
    let tip: F = spec.tip.to_radians();
    let base: F = spec.base.to_radians();
    let two = F::one() + F::one();
    match spec.model {
        Model::Euclidean => Sides { leg: F::one(), base: two * (tip / two).sin() },
        Model::Hyperbolic => {
            let cosh_base = (tip.cos() + base.cos().powi(2)) / base.sin().powi(2);
            let cosh_leg = base.cos() * (F::one() + tip.cos()) / (tip.sin() * base.sin());
            Sides { leg: cosh_leg.acosh(), base: cosh_base.acosh() }
        }
    }
}

/// Angles (in radians: apex, base) of the isosceles triangle with these sides,
/// by the law of cosines of the model.
pub fn angles_from_sides<F: Float>(model: Model, sides: &Sides<F>) -> (F, F) {
    let (l, b) = (sides.leg, sides.base);
    let two = F::one() + F::one();
    match model {
        Model::Euclidean => {
            let tip = ((two * l * l - b * b) / (two * l * l)).acos();
            let base = (b / (two * l)).acos();
            (tip, base)
        }
        Model::Hyperbolic => {
            let tip = ((l.cosh() * l.cosh() - b.cosh()) / (l.sinh() * l.sinh())).acos();
            let base = ((l.cosh() * b.cosh() - l.cosh()) / (l.sinh() * b.sinh())).acos();
            (tip, base)
        }
    }
}

/// Area of one triangle as a multiple of π: the angle defect. Zero exactly for
/// Euclidean specs.
pub fn gauss_bonnet_area(spec: &MetricSpec) -> Angle {
    Angle::pi() - spec.tip - spec.base * 2
}

/// A link with every edge weighted by its corner angle.
#[derive(Debug, Clone)]
pub struct GeometricLink<'c> {
    pub link: &'c LinkGraph,
    pub weights: Vec<Angle>,
}

pub fn geometric_link<'c>(
    c: &'c TriangleComplex<'_>,
    v: ComplexVertex,
    spec: &MetricSpec,
) -> Result<GeometricLink<'c>, ComplexError> {
    let link = c.link_at(v)?;
    let w = match v {
        ComplexVertex::Tip(_) => spec.tip,
        ComplexVertex::Theta(_) => spec.base,
    };
    Ok(GeometricLink { link, weights: vec![w; link.graph.edge_count()] })
}

impl GeometricLink<'_> {
    /// Lightest cycle and its exact total.
    pub fn min_cycle(&self) -> Option<(Angle, Vec<String>)> {
        min_weight_cycle(&self.link.graph, |e| self.weights[e]).map(|(w, c)| (w, c.names(&self.link.graph)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexCheck {
    pub vertex: String,
    /// `None` when the link has no cycle.
    pub min_cycle_total: Option<Angle>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cycle: Option<Vec<String>>,
    pub status: Status,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LinkConditionReport {
    pub model: Model,
    pub tip_angle: Angle,
    pub base_angle: Angle,
    pub sides: Sides64,
    pub per_vertex: Vec<VertexCheck>,
    pub overall: Status,
}

impl LinkConditionReport {
    pub fn passed(&self) -> bool {
        self.overall == Status::Pass
    }

    pub fn first_failure(&self) -> Option<&VertexCheck> {
        self.per_vertex.iter().find(|v| v.status == Status::Fail)
    }
}

/// Every cycle in every geometric link has length at least 2π (equality passes).
pub fn verify_link_condition(c: &TriangleComplex<'_>, spec: &MetricSpec) -> LinkConditionReport {
    let per_vertex: Vec<VertexCheck> = c
        .vertices()
        .into_iter()
        .map(|v| {
            let g = geometric_link(c, v, spec).expect("own vertex");
            let min = g.min_cycle();
            let status = match &min {
                Some((total, _)) if *total < Angle::full_turn() => Status::Fail,
                _ => Status::Pass,
            };
            VertexCheck {
                vertex: c.vertex_name(v),
                min_cycle_total: min.as_ref().map(|(t, _)| *t),
                cycle: min.filter(|_| status == Status::Fail).map(|(_, names)| names),
                status,
            }
        })
        .collect();
    let overall = if per_vertex.iter().all(|v| v.status == Status::Pass) { Status::Pass } else { Status::Fail };
    LinkConditionReport {
        model: spec.model,
        tip_angle: spec.tip,
        base_angle: spec.base,
        sides: realize_sides(spec),
        per_vertex,
        overall,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::build_complex;
    use crate::fixtures;

    #[test]
    fn presets() {
        let s = MetricSpec::preset("3,6-euclidean").unwrap();
        assert_eq!((s.tip_angle(), s.base_angle()), (Angle::new(2, 3), Angle::new(1, 6)));
        let s = MetricSpec::preset("4,5-euclidean").unwrap();
        assert_eq!((s.tip_angle(), s.base_angle()), (Angle::new(1, 2), Angle::new(1, 4)));
        let s = MetricSpec::preset("3,7-hyperbolic").unwrap();
        assert!(s.tip_angle() + s.base_angle() * 2 < Angle::pi());
        assert_eq!(MetricSpec::preset("5,5-spherical"), Err(MetricError::UnknownPreset("5,5-spherical".into())));
    }

    #[test]
    fn invalid_angles() {
        assert!(MetricSpec::new(Model::Euclidean, Angle::new(1, 2), Angle::new(1, 5)).is_err());
        assert!(MetricSpec::new(Model::Hyperbolic, Angle::new(2, 3), Angle::new(1, 6)).is_err());
        assert!(MetricSpec::new(Model::Hyperbolic, Angle::new(0, 1), Angle::new(1, 6)).is_err());
    }

    #[test]
    fn euclidean_sides() {
        let s: Sides64 = realize_sides(&MetricSpec::preset("3,6-euclidean").unwrap());
        assert!((s.leg - 1.0).abs() < 1e-12 && (s.base - 3f64.sqrt()).abs() < 1e-12);
        let eq = MetricSpec::new(Model::Euclidean, Angle::new(1, 3), Angle::new(1, 3)).unwrap();
        let s: Sides64 = realize_sides(&eq);
        assert!((s.leg - 1.0).abs() < 1e-12 && (s.base - 1.0).abs() < 1e-12);
        let s: Sides32 = realize_sides(&eq);
        assert!((s.base - 1.0).abs() < 1e-6);
    }

    #[test]
    fn hyperbolic_base_side_regression() {
        // cot²(π/5) = (3 + √5)/(5 − √5) = 1 + 2/√5
        let oracle = (1.0 + 2.0 / 5f64.sqrt()).acosh();
        let s: Sides64 = realize_sides(&MetricSpec::preset("4,5-hyperbolic").unwrap());
        assert!((s.base - oracle).abs() < 1e-12);
        assert!((s.base.cosh() - 1.894427191).abs() < 1e-9);
    }

    #[test]
    fn angle_round_trip() {
        for name in PRESETS {
            let spec = MetricSpec::preset(name).unwrap();
            let (tip, base) = angles_from_sides(spec.model(), &realize_sides::<f64>(&spec));
            assert!((tip - spec.tip_angle().to_radians::<f64>()).abs() < 1e-9, "{name}");
            assert!((base - spec.base_angle().to_radians::<f64>()).abs() < 1e-9, "{name}");
        }
    }

    #[test]
    fn defects() {
        let area = |n| gauss_bonnet_area(&MetricSpec::preset(n).unwrap());
        assert_eq!(area("3,6-euclidean"), Angle::zero());
        assert_eq!(area("3,7-hyperbolic"), Angle::new(1, 21));
        assert_eq!(area("4,5-hyperbolic"), Angle::new(1, 10));
    }

    #[test]
    fn wheel_fails_at_u_vertices() {
        let p = fixtures::figure5();
        let c = build_complex(&p);
        let r = verify_link_condition(&c, &MetricSpec::preset("3,6-euclidean").unwrap());
        assert!(!r.passed());
        let u4 = r.per_vertex.iter().find(|v| v.vertex == "u4").unwrap();
        assert_eq!(u4.min_cycle_total, Some(Angle::new(2, 3)));
        assert_eq!(u4.cycle.as_ref().map(Vec::len), Some(4));
    }

    #[test]
    fn identity_passes_with_equality() {
        let p = fixtures::identity_triangle();
        let c = build_complex(&p);
        let r = verify_link_condition(&c, &MetricSpec::preset("3,6-euclidean").unwrap());
        assert!(r.passed());
        let tip = r.per_vertex.iter().find(|v| v.vertex == "tip:g1").unwrap();
        assert_eq!(tip.min_cycle_total, Some(Angle::full_turn()));
        let hex = fixtures::identity_hexagon();
        let c = build_complex(&hex);
        let r = verify_link_condition(&c, &MetricSpec::preset("3,6-euclidean").unwrap());
        assert!(r.passed());
        assert_eq!(r.per_vertex.last().unwrap().min_cycle_total, Some(Angle::new(4, 1)));
    }

    #[test]
    fn geometric_weights() {
        let p = fixtures::figure5();
        let c = build_complex(&p);
        let spec = MetricSpec::preset("3,6-euclidean").unwrap();
        let tip = geometric_link(&c, ComplexVertex::Tip(0), &spec).unwrap();
        assert!(tip.weights.iter().all(|&w| w == Angle::new(2, 3)));
        let v = geometric_link(&c, c.vertex("u1").unwrap(), &spec).unwrap();
        assert!(v.weights.iter().all(|&w| w == Angle::new(1, 6)));
    }

    #[test]
    fn report_json_shape() {
        let p = fixtures::identity_triangle();
        let c = build_complex(&p);
        let r = verify_link_condition(&c, &MetricSpec::preset("3,6-euclidean").unwrap());
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["tip_angle"], "2/3 pi");
        assert_eq!(json["base_angle"], "1/6 pi");
        assert_eq!(json["overall"], "pass");
        assert_eq!(json["model"], "euclidean");
        let back: LinkConditionReport = serde_json::from_value(json).unwrap();
        assert_eq!(back, r);
    }
}
