//! Small hand-checked instances used throughout the tests and examples.

use crate::interval::IntervalRealization;

/// Nine intervals over `1..=18`; its endpoint sequence is
/// `000011011001001111` and it has three improperly nested intervals.
pub fn nine_intervals() -> IntervalRealization {
    IntervalRealization::new(vec![
        (1, 6),
        (2, 5),
        (3, 9),
        (4, 8),
        (7, 12),
        (10, 18),
        (11, 15),
        (13, 17),
        (14, 16),
    ])
    .expect("fixture is valid")
}

/// Seven arcs on a circle of 14 positions as raw `(start, end)` pairs read
/// clockwise; arcs 4 and 7 wrap past the anchor.
pub fn seven_arcs() -> Vec<(f64, f64)> {
    vec![
        (1.0, 3.0),
        (4.0, 7.0),
        (5.0, 8.0),
        (6.0, 2.0),
        (9.0, 14.0),
        (11.0, 12.0),
        (13.0, 10.0),
    ]
}
