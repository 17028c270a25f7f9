//! Fixtures shared by the benchmarks.

use pierik_core::{part, Partition, Space};

/// A single coefficient query `(space, λ, p, ν)`.
pub struct Case {
    pub name: &'static str,
    pub space: Space,
    pub lambda: Partition,
    pub p: i64,
    pub nu: Partition,
}

/// The seven-box rims in `OG(7)` and `LG(7)` with `p = 5`, plus a larger
/// disconnected rim in `OG(12)`.
pub fn cases() -> Vec<Case> {
    let og7 = Space::og(7).expect("valid space");
    let lg7 = Space::lg(7).expect("valid space");
    let og12 = Space::og(12).expect("valid space");
    vec![
        Case {
            name: "og7",
            space: og7,
            lambda: part![6, 4, 1],
            p: 5,
            nu: part![7, 6, 3, 1],
        },
        Case {
            name: "lg7",
            space: lg7,
            lambda: part![6, 4, 1],
            p: 5,
            nu: part![7, 6, 3, 1],
        },
        Case {
            name: "og12",
            space: og12,
            lambda: part![11, 9, 8, 5, 2],
            p: 8,
            nu: og12.dual(&part![10, 8, 7, 4]).expect("fits"),
        },
    ]
}
