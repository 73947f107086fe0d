//! Shared fixtures for the benchmarks.

use caesura::Surjection;

/// The outer and inner surjections of the worked composition pair.
pub fn composition_pair() -> (Surjection, Surjection) {
    let u = "(2,3,2,1)".parse().expect("valid");
    let v = "(4,3,4,1,2)".parse().expect("valid");
    (u, v)
}

/// A long surjection whose table has several caesuras.
pub fn long_surjection() -> Surjection {
    "(4,3,1,2,1,3,5,2)".parse().expect("valid")
}
