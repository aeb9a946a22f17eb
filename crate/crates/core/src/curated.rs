//! Small algebras used throughout the test suite and by the CLI as
//! built-in names.

use crate::algebra::{FiniteAlgebra, Signature};

pub fn group_signature() -> Signature {
    Signature::new([("plus", 2), ("neg", 1), ("zero", 0)]).expect("distinct symbols")
}

/// `Z_n` as `(+, -, 0)`.
pub fn cyclic_group(n: usize) -> FiniteAlgebra {
    FiniteAlgebra::from_fn(group_signature(), n, |s, a| match s {
        0 => (a[0] + a[1]) % n,
        1 => (n - a[0]) % n,
        _ => 0,
    })
    .expect("valid tables")
}

/// `Z_2 × Z_2` in the group signature, elements `2a + b`.
pub fn klein_four() -> FiniteAlgebra {
    FiniteAlgebra::from_fn(group_signature(), 4, |s, a| match s {
        0 => a[0] ^ a[1],
        1 => a[0],
        _ => 0,
    })
    .expect("valid tables")
}

/// Permutations of `{0,1,2}` in the order
/// `e, (01), (02), (12), (012), (021)`; `A_3 = {0, 4, 5}`.
pub const S3_ELEMENTS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [1, 0, 2],
    [2, 1, 0],
    [0, 2, 1],
    [1, 2, 0],
    [2, 0, 1],
];

/// `S_3` as `(·, ⁻¹, e)` with `(p·q)(i) = p(q(i))`.
pub fn symmetric_group_3() -> FiniteAlgebra {
    let sig = Signature::new([("mul", 2), ("inv", 1), ("e", 0)]).expect("distinct symbols");
    let index = |p: [usize; 3]| {
        S3_ELEMENTS
            .iter()
            .position(|&q| q == p)
            .expect("permutation")
    };
    FiniteAlgebra::from_fn(sig, 6, |s, a| match s {
        0 => {
            let (p, q) = (S3_ELEMENTS[a[0]], S3_ELEMENTS[a[1]]);
            index([p[q[0]], p[q[1]], p[q[2]]])
        }
        1 => {
            let p = S3_ELEMENTS[a[0]];
            let mut inv = [0; 3];
            for i in 0..3 {
                inv[p[i]] = i;
            }
            index(inv)
        }
        _ => 0,
    })
    .expect("valid tables")
}

/// The `n`-element chain as a meet semilattice.
pub fn semilattice(n: usize) -> FiniteAlgebra {
    let sig = Signature::new([("meet", 2)]).expect("distinct symbols");
    FiniteAlgebra::from_fn(sig, n, |_, a| a[0].min(a[1])).expect("valid tables")
}

/// The two-element lattice.
pub fn two_element_lattice() -> FiniteAlgebra {
    let sig = Signature::new([("meet", 2), ("join", 2)]).expect("distinct symbols");
    FiniteAlgebra::from_fn(
        sig,
        2,
        |s, a| if s == 0 { a[0] & a[1] } else { a[0] | a[1] },
    )
    .expect("valid tables")
}

/// A simple 3-element groupoid whose square has a non-modular congruence
/// lattice. Only `2·1 = 2` and `2·2 = 1` avoid `0`.
pub fn groupoid_g3() -> FiniteAlgebra {
    let sig = Signature::new([("mul", 2)]).expect("distinct symbols");
    FiniteAlgebra::from_fn(sig, 3, |_, a| match (a[0], a[1]) {
        (2, 1) => 2,
        (2, 2) => 1,
        _ => 0,
    })
    .expect("valid tables")
}

/// The text of the built-in suite, in the algebra file format.
pub const CURATED_FILE: &str = include_str!("../data/curated.alg");

/// Built-in algebras by name: Z2, Z3, Z4, V4, S3, SL2, SL3, L2, G3.
pub fn suite() -> Vec<(String, FiniteAlgebra)> {
    crate::format::parse_algebra_file(CURATED_FILE).expect("built-in suite parses")
}

pub fn by_name(name: &str) -> Option<FiniteAlgebra> {
    suite().into_iter().find(|(n, _)| n == name).map(|(_, a)| a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::serialize_algebras;

    fn expected() -> Vec<(&'static str, FiniteAlgebra)> {
        vec![
            ("Z2", cyclic_group(2)),
            ("Z3", cyclic_group(3)),
            ("Z4", cyclic_group(4)),
            ("V4", klein_four()),
            ("S3", symmetric_group_3()),
            ("SL2", semilattice(2)),
            ("SL3", semilattice(3)),
            ("L2", two_element_lattice()),
            ("G3", groupoid_g3()),
        ]
    }

    #[test]
    fn file_matches_constructors() {
        let parsed = suite();
        let want = expected();
        assert_eq!(parsed.len(), want.len());
        for ((pn, pa), (wn, wa)) in parsed.iter().zip(&want) {
            assert_eq!(pn, wn);
            assert_eq!(pa, wa, "{pn}");
        }
    }

    #[test]
    fn file_round_trips_byte_for_byte() {
        let parsed = suite();
        let text = serialize_algebras(parsed.iter().map(|(n, a)| (n.as_str(), a)));
        assert_eq!(text, CURATED_FILE);
    }

    #[test]
    fn s3_identity_and_a3() {
        let s3 = symmetric_group_3();
        assert_eq!(s3.apply(0, &[4, 4]), 5);
        assert_eq!(s3.apply(0, &[4, 5]), 0);
        assert_eq!(s3.apply(1, &[4]), 5);
    }
}
