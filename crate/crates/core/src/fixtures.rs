//! Small reference presentations, shipped as canonical JSON.

use crate::format::{parse, ParseOptions};
use crate::presentation::Presentation;

/// Θ = Γ = triangle, identity map.
pub const IDENTITY_TRIANGLE: &str = include_str!("../tests/fixtures/identity_triangle.json");
/// Θ = Γ = hexagon, identity map.
pub const IDENTITY_HEXAGON: &str = include_str!("../tests/fixtures/identity_hexagon.json");
/// Wheel Θ on u1..u4 (hub u4); Γ₁ = Θ minus {u1,u2}, Γ₂ = Θ minus {u2,u3}.
pub const FIGURE5: &str = include_str!("../tests/fixtures/figure5.json");
/// Rose with loops a, b, c, d; triangles reading abc and abd.
pub const ROSE_PIECES: &str = include_str!("../tests/fixtures/rose_pieces.json");
/// Rose with loops a, b; a hexagon reading ababab.
pub const ROSE_POWER: &str = include_str!("../tests/fixtures/rose_power.json");
/// Hexagon wrapping twice around a triangle.
pub const DOUBLE_COVER: &str = include_str!("../tests/fixtures/double_cover.json");

pub const ALL: [(&str, &str); 6] = [
    ("identity_triangle", IDENTITY_TRIANGLE),
    ("identity_hexagon", IDENTITY_HEXAGON),
    ("figure5", FIGURE5),
    ("rose_pieces", ROSE_PIECES),
    ("rose_power", ROSE_POWER),
    ("double_cover", DOUBLE_COVER),
];

fn load(text: &str) -> Presentation {
    parse(text.as_bytes(), ParseOptions::default()).expect("bundled fixture is valid").presentation
}

pub fn identity_triangle() -> Presentation {
    load(IDENTITY_TRIANGLE)
}

pub fn identity_hexagon() -> Presentation {
    load(IDENTITY_HEXAGON)
}

pub fn figure5() -> Presentation {
    load(FIGURE5)
}

pub fn rose_pieces() -> Presentation {
    load(ROSE_PIECES)
}

pub fn rose_power() -> Presentation {
    load(ROSE_POWER)
}

pub fn double_cover() -> Presentation {
    load(DOUBLE_COVER)
}

/// The inclusion `Γ₁ ⊔ Γ₂ → Θ` of the wheel fixture is an immersion.
pub fn wheel_inclusion_is_immersion() -> bool {
    figure5().immersion().is_immersion()
}
