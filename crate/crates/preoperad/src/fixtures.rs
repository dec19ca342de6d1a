//! Small reference algebras used by the test suites, the examples and the
//! shipped JSON fixture files.

use crate::algebra::AlgebraDef;
use crate::linalg::rat_int;

/// The rationals as a 1-dimensional algebra.
pub fn rationals() -> AlgebraDef {
    AlgebraDef::from_entries("rationals", vec!["1".into()], &[(0, 0, 0, rat_int(1))])
        .expect("fixture is valid")
}

/// Dual numbers: `1, eps` with `eps^2 = 0`.
pub fn dual_numbers() -> AlgebraDef {
    AlgebraDef::from_entries(
        "dual-numbers",
        vec!["1".into(), "eps".into()],
        &[
            (0, 0, 0, rat_int(1)),
            (0, 1, 1, rat_int(1)),
            (1, 0, 1, rat_int(1)),
        ],
    )
    .expect("fixture is valid")
}

/// The split 2-dimensional algebra: two orthogonal idempotents.
pub fn q_times_q() -> AlgebraDef {
    AlgebraDef::from_entries(
        "q-times-q",
        vec!["e1".into(), "e2".into()],
        &[(0, 0, 0, rat_int(1)), (1, 1, 1, rat_int(1))],
    )
    .expect("fixture is valid")
}

/// 2x2 matrices over the rationals, in the matrix-unit basis
/// `e11, e12, e21, e22` with `e_ab e_cd = [b == c] e_ad`.
pub fn m2_rational() -> AlgebraDef {
    let names = ["e11", "e12", "e21", "e22"];
    let mut entries = Vec::new();
    for a in 0..2 {
        for b in 0..2 {
            for c in 0..2 {
                for d in 0..2 {
                    if b == c {
                        let i = a * 2 + b;
                        let j = c * 2 + d;
                        let k = a * 2 + d;
                        entries.push((i, j, k, rat_int(1)));
                    }
                }
            }
        }
    }
    AlgebraDef::from_entries(
        "m2-rational",
        names.iter().map(|s| s.to_string()).collect(),
        &entries,
    )
    .expect("fixture is valid")
}

/// Upper-triangular 2x2 matrices: `e11, e12, e22`.
pub fn upper_triangular() -> AlgebraDef {
    AlgebraDef::from_entries(
        "upper-triangular-2x2",
        vec!["e11".into(), "e12".into(), "e22".into()],
        &[
            (0, 0, 0, rat_int(1)),
            (0, 1, 1, rat_int(1)),
            (1, 2, 1, rat_int(1)),
            (2, 2, 2, rat_int(1)),
        ],
    )
    .expect("fixture is valid")
}

/// A deliberately non-associative table: `a*a = b`, `a*b = a`, so
/// `(a*a)*a = b*a = 0` while `a*(a*a) = a*b = a`.
pub fn nonassociative() -> AlgebraDef {
    AlgebraDef::from_entries(
        "nonassociative",
        vec!["a".into(), "b".into()],
        &[(0, 0, 1, rat_int(1)), (0, 1, 0, rat_int(1))],
    )
    .expect("fixture is valid")
}

/// All associative fixtures, smallest first.
pub fn associative() -> Vec<AlgebraDef> {
    vec![
        rationals(),
        dual_numbers(),
        q_times_q(),
        upper_triangular(),
        m2_rational(),
    ]
}

/// Every fixture, the non-associative table last.
pub fn all() -> Vec<AlgebraDef> {
    let mut v = associative();
    v.push(nonassociative());
    v
}
