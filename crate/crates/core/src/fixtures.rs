//! Small named sets used throughout the test suite and handy for experiments.

use crate::set::QuadraticSet;

/// Order-4 braided set with left action `L0 = L1 = (2 3)`, `L2 = L3 = (0 1)`.
/// Quantum binomial with lri; all four structural conditions hold for it.
pub fn e4() -> QuadraticSet {
    QuadraticSet::from_left_action(
        4,
        &[
            vec![0, 1, 3, 2],
            vec![0, 1, 3, 2],
            vec![1, 0, 2, 3],
            vec![1, 0, 2, 3],
        ],
    )
    .unwrap()
}

/// Order-4 quantum binomial set with lri that is *not* braided; all four
/// structural conditions fail for it.
pub fn n4() -> QuadraticSet {
    QuadraticSet::from_left_action(
        4,
        &[
            vec![0, 1, 2, 3],
            vec![0, 1, 2, 3],
            vec![0, 3, 2, 1],
            vec![1, 0, 2, 3],
        ],
    )
    .unwrap()
}

/// Order-2 set whose left action `L_0` is not bijective (r is still a bijection
/// of pairs). Fails nondegeneracy and the Ore conditions.
pub fn degenerate2() -> QuadraticSet {
    QuadraticSet::from_table(2, vec![(1, 0), (1, 1), (0, 0), (0, 1)]).unwrap()
}
