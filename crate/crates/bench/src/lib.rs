//! Shared inputs for the criterion benches.

use staircase_core::Shape;

/// Shapes the benches sweep over, smallest first.
pub fn bench_shapes() -> Vec<Shape> {
    ["", "1", "2,1", "3,2,1", "4,4,2,1"]
        .iter()
        .map(|s| s.parse().expect("valid shape"))
        .collect()
}
