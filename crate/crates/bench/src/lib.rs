//! Inputs for the benchmarks.

use sapprox::format::DeciderSpec;
use sapprox::{build_space, Rational, SApproxSpace, SetFunction, Universe};

fn labels(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

/// A set function on `n` elements with small pseudo-random rational values.
pub fn set_function(n: usize, seed: u64) -> SetFunction {
    let w = Universe::new(labels("w", n)).expect("distinct labels");
    let mut state = seed;
    let values = (0..1usize << n)
        .map(|_| {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let num = (state >> 33) as i128 % 17 - 8;
            let den = (state >> 13) as i128 % 7 + 1;
            Rational::new(num, den).expect("nonzero denominator")
        })
        .collect();
    SetFunction::new(w, values).expect("full table")
}

/// `u` elements over `n` labels; element `i` maps to a window of labels
/// starting at `i mod n`. Cardinality threshold `n / 2`.
pub fn threshold_space(u: usize, n: usize) -> SApproxSpace {
    let w = labels("w", n);
    let t: Vec<(String, Vec<String>)> = (0..u)
        .map(|i| {
            let image = (0..3).map(|j| w[(i + j) % n].clone()).collect();
            (format!("x{i}"), image)
        })
        .collect();
    build_space(
        labels("x", u),
        w,
        &t,
        &DeciderSpec::CardThreshold { k: (n / 2) as i64 },
    )
    .expect("valid space")
}

/// The same images as [`threshold_space`] under the inclusion decider.
pub fn inclusion_space(u: usize, n: usize) -> SApproxSpace {
    let g = threshold_space(u, n);
    let mut doc = g.to_doc();
    doc.s = DeciderSpec::Inclusion;
    SApproxSpace::from_doc(&doc).expect("valid space")
}
