//! The worked examples, built in code. Tables use 1-based indices.

use crate::algebra::Algebra;
use crate::coalgebra::Comultiplication;
use crate::tensor::Tensor2;

/// Six-dimensional nearly associative algebra that is neither an L- nor an
/// R-algebra.
pub fn na6() -> Algebra {
    Algebra::from_table(
        6,
        &[
            (1, 2, 3, 1),
            (2, 1, 4, -1),
            (2, 2, 5, 1),
            (1, 5, 6, -1),
            (5, 1, 6, 1),
            (2, 3, 6, 1),
            (4, 2, 6, 1),
            (2, 4, 6, -2),
            (3, 2, 6, 2),
        ],
    )
    .with_label("NA6")
}

/// Three-dimensional LR-algebra that is not nearly associative.
pub fn lr3() -> Algebra {
    Algebra::from_table(3, &[(2, 1, 3, -1), (2, 2, 2, 1), (2, 3, 3, 1), (3, 2, 3, 1)])
        .with_label("LR3")
}

/// Four-dimensional associative NAL-algebra.
pub fn nal4() -> Algebra {
    Algebra::from_table(
        4,
        &[
            (1, 1, 4, 1),
            (2, 2, 4, 1),
            (1, 2, 3, 1),
            (1, 2, 4, 1),
            (2, 1, 3, -1),
            (2, 1, 4, 1),
        ],
    )
    .with_label("NAL4")
}

/// Six-dimensional non-associative NAL-algebra.
pub fn nal6() -> Algebra {
    Algebra::from_table(
        6,
        &[
            (1, 2, 3, 1),
            (2, 1, 4, 1),
            (2, 2, 5, 1),
            (1, 5, 6, 1),
            (5, 1, 6, 1),
            (2, 3, 6, 1),
            (4, 2, 6, 1),
            (2, 4, 6, 2),
            (3, 2, 6, 2),
        ],
    )
    .with_label("NAL6")
}

/// Nearly coassociative L-coalgebra on a four-dimensional space.
pub fn co4() -> Comultiplication {
    Comultiplication::from_table(
        4,
        &[(1, 4, 4, 2), (2, 4, 3, 1), (2, 3, 4, -1), (2, 4, 4, 2)],
    )
}

/// Nearly coassociative L-coalgebra with the single value `Δ(e_1) = e_6⊗e_6`.
pub fn co6() -> Comultiplication {
    Comultiplication::from_table(6, &[(1, 6, 6, 1)])
}

/// `e_1⊗e_4 − e_4⊗e_1` on the four-dimensional space.
pub fn r14() -> Tensor2 {
    Tensor2::bivector(4, 0, 3)
}

/// `e_5⊗e_6 − e_6⊗e_5`.
pub fn r56() -> Tensor2 {
    Tensor2::bivector(6, 4, 5)
}

/// `e_2⊗e_6 − e_6⊗e_2`.
pub fn r26() -> Tensor2 {
    Tensor2::bivector(6, 1, 5)
}

/// `e_1⊗e_5 − e_5⊗e_1`.
pub fn r15() -> Tensor2 {
    Tensor2::bivector(6, 0, 4)
}
