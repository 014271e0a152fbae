//! Matrices transcribed from the worked 4x4 example, used as golden data.

use crate::matrix::RMatrix;

/// The rank-2 example `a` with a zero third row.
pub fn worked_example() -> RMatrix {
    RMatrix::from_ints(&[[1, -1, 1, 0], [0, 1, 1, 1], [0, 0, 0, 0], [1, 1, 3, 2]])
}

/// Second compound of [`worked_example`].
pub fn worked_example_compound2() -> RMatrix {
    RMatrix::from_ints(&[
        [1, 1, 1, -2, -1, 1],
        [0, 0, 0, 0, 0, 0],
        [2, 2, 2, -4, -2, 2],
        [0, 0, 0, 0, 0, 0],
        [-1, -1, -1, 2, 1, -1],
        [0, 0, 0, 0, 0, 0],
    ])
}

/// Signed complementary second compound of [`worked_example`].
pub fn worked_example_adjugate_compound2() -> RMatrix {
    RMatrix::from_ints(&[
        [0, 1, 0, 2, 0, 1],
        [0, 1, 0, 2, 0, 1],
        [0, -2, 0, -4, 0, -2],
        [0, 1, 0, 2, 0, 1],
        [0, -1, 0, -2, 0, -1],
        [0, 1, 0, 2, 0, 1],
    ])
}

/// Order-2 cofactor matrix of [`worked_example`] based on rows (1, 2).
pub fn worked_example_cofactors12() -> RMatrix {
    RMatrix::from_ints(&[[-2, -1, 1, 0], [-1, -1, 0, 1], [1, 0, -1, 1], [0, 1, 1, -2]])
}
