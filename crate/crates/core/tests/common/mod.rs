#![allow(dead_code)]

use cubesym_core::FamilySpec;

/// Family graphs with at most 32 vertices, small enough for the brute-force oracle.
pub fn corpus() -> Vec<FamilySpec> {
    use FamilySpec::*;
    vec![
        Hypercube { n: 3 },
        Hypercube { n: 4 },
        HypercubePower { n: 4, k: 2 },
        Folded { n: 3 },
        Folded { n: 4 },
        Enhanced { n: 4, k: 1 },
        Enhanced { n: 4, k: 2 },
        Enhanced { n: 4, k: 3 },
        Augmented { n: 3 },
        Augmented { n: 4 },
        LocallyTwisted { n: 3 },
        LocallyTwisted { n: 4 },
        Hamming { m: 3, n: 2 },
        Hamming { m: 2, n: 4 },
    ]
}
