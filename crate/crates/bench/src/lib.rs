//! Fixture configurations shared by the benchmarks.

use gkz_core::PointConfiguration;

pub fn interval(len: usize) -> PointConfiguration {
    PointConfiguration::interval(len).expect("interval")
}

pub fn pentagon() -> PointConfiguration {
    PointConfiguration::with_default_labels(vec![
        vec![0, 0],
        vec![1, 0],
        vec![2, 0],
        vec![0, 1],
        vec![1, 1],
    ])
    .expect("pentagon")
}

/// Outer triangle with a shrunken homothetic copy inside.
pub fn two_nested_triangles() -> PointConfiguration {
    PointConfiguration::with_default_labels(vec![
        vec![0, 0],
        vec![4, 0],
        vec![0, 4],
        vec![1, 1],
        vec![2, 1],
        vec![1, 2],
    ])
    .expect("nested triangles")
}
