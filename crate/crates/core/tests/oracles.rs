//! Values produced once by the in-crate oracles and frozen here.

use num_bigint::BigUint;
use pascal_adic::coding::{bits_to_string, complexity, complexity_depth, cylinder_table, default_max_depth, exotic_sequence};
use pascal_adic::DyadicRational;

const COMPLEXITY: [u64; 40] = [
    2, 4, 8, 14, 24, 37, 56, 80, 112, 150, 198, 255, 324, 404, 496, 601, 722, 858, 1012, 1183, 1372, 1580, 1810, 2061,
    2336, 2633, 2956, 3302, 3676, 4077, 4508, 4968, 5460, 5983, 6540, 7128, 7752, 8411, 9108, 9842,
];

// (per-word exponent, cardinality, group total num / 2^exp)
type Group = (u64, usize, u64, u64);

const GROUPS: [(usize, &[Group]); 5] = [
    (6, &[(4, 5, 5, 4), (5, 12, 3, 3), (6, 20, 5, 4)]),
    (7, &[(4, 2, 1, 3), (5, 14, 7, 4), (6, 16, 1, 2), (7, 24, 3, 4)]),
    (8, &[(4, 1, 1, 4), (5, 12, 3, 3), (6, 19, 19, 6), (7, 20, 5, 5), (8, 28, 7, 6)]),
    (9, &[(5, 10, 5, 4), (6, 22, 11, 5), (7, 24, 3, 4), (8, 24, 3, 5), (9, 32, 1, 4)]),
    (10, &[(5, 8, 1, 2), (6, 21, 21, 6), (7, 28, 7, 5), (8, 29, 29, 8), (9, 28, 7, 7), (10, 36, 9, 8)]),
];

const EXOTIC_200: &str = "01001101001000111011010011010010001101001000100001111011101101001110110100110100100011101101001101001000110100100010000111011010011010010001101001000100001101001000100001000001111101111011101101001111";

fn dy(num: u64, exp: u64) -> DyadicRational {
    DyadicRational::new(BigUint::from(num), exp)
}

#[test]
fn complexity_to_40() {
    let c = complexity(40, complexity_depth(40)).unwrap();
    let got: Vec<u64> = c.entries.iter().map(|e| e.1).collect();
    assert_eq!(got, COMPLEXITY);
}

#[test]
fn cylinder_groups_exact() {
    for (n, groups) in GROUPS {
        let t = cylinder_table(n, default_max_depth(n)).unwrap();
        assert!(t.residual_mass.is_zero());
        assert_eq!(t.groups.len(), groups.len());
        for (g, &(e, card, num, exp)) in t.groups.iter().zip(groups) {
            assert_eq!(g.measure, DyadicRational::pow2_neg(e));
            assert_eq!(g.cardinality, card);
            assert_eq!(g.total, dy(num, exp));
        }
        let words: usize = groups.iter().map(|g| g.1).sum();
        assert_eq!(t.entries.len(), words);
    }
}

#[test]
fn exotic_prefix_200() {
    assert_eq!(bits_to_string(&exotic_sequence(200).unwrap()), EXOTIC_200);
}

#[test]
fn cylinder_depth_bracket() {
    // a shallow depth leaves residual mass but never exceeds the exact measures
    let exact = cylinder_table(8, default_max_depth(8)).unwrap();
    let shallow = cylinder_table(8, 10).unwrap();
    assert!(!shallow.residual_mass.is_zero());
    for e in &shallow.entries {
        let x = exact.entries.iter().find(|f| f.word == e.word).unwrap();
        assert!(e.measure <= x.measure);
    }
    assert_eq!(shallow.total_mass() + shallow.residual_mass.clone(), DyadicRational::one());
}
