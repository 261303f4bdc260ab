#![allow(dead_code)]

use gkz_core::json::parse_config;
use gkz_core::PointConfiguration;

/// The shipped example configurations, except the larger nested triangles.
pub fn small_examples() -> Vec<(&'static str, PointConfiguration)> {
    [
        ("quadratic", include_str!("../../../../configs/quadratic.json")),
        ("cubic", include_str!("../../../../configs/cubic.json")),
        ("quartic", include_str!("../../../../configs/quartic.json")),
        ("square", include_str!("../../../../configs/square.json")),
        ("one_x_x2_y", include_str!("../../../../configs/one_x_x2_y.json")),
        ("pentagon", include_str!("../../../../configs/pentagon.json")),
        ("unit_triangle", include_str!("../../../../configs/unit_triangle.json")),
        ("mother", include_str!("../../../../configs/mother.json")),
    ]
    .into_iter()
    .map(|(name, text)| (name, parse_config(text).unwrap()))
    .collect()
}

pub fn example(name: &str) -> PointConfiguration {
    small_examples()
        .into_iter()
        .find(|(n, _)| *n == name)
        .map(|(_, c)| c)
        .unwrap()
}
