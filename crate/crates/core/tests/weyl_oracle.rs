//! Brute-force oracle for the Weyl dimension formula: positive roots come
//! from Weyl-group orbits of the simple roots, multiplicities from the
//! Freudenthal recursion over dominant weights, and the dimension is the sum
//! of multiplicities times Weyl-orbit sizes.

mod common;

use common::{all_weights, low_rank_types, Oracle};
use homrk_core::lie::{positive_roots, weyl_dim, Family, HighestWeight, SimpleType};
use num_traits::ToPrimitive;

#[test]
fn orbit_roots_match_library_roots() {
    for ty in low_rank_types() {
        let oracle = Oracle::new(ty);
        let mut a: Vec<Vec<i64>> = oracle.roots.clone();
        let mut b: Vec<Vec<i64>> = positive_roots(ty)
            .into_iter()
            .map(|r| r.into_iter().map(|x| x as i64).collect())
            .collect();
        a.sort();
        b.sort();
        assert_eq!(a, b, "{ty}");
        assert_eq!(2 * a.len() as u64 + ty.rank() as u64, ty.dim());
    }
}

#[test]
fn rank_eight_root_counts() {
    for (f, lo) in [
        (Family::A, 1),
        (Family::B, 2),
        (Family::C, 2),
        (Family::D, 4),
    ] {
        for r in lo..=8 {
            let ty = SimpleType::new(f, r).unwrap();
            assert_eq!(
                2 * positive_roots(ty).len() as u64 + r as u64,
                ty.dim(),
                "{ty}"
            );
        }
    }
    for s in ["E6", "E7", "E8"] {
        let ty: SimpleType = s.parse().unwrap();
        let oracle = Oracle::new(ty);
        assert_eq!(oracle.roots.len(), positive_roots(ty).len());
        assert_eq!(2 * oracle.roots.len() as u64 + ty.rank() as u64, ty.dim());
    }
}

#[test]
fn weyl_dim_matches_freudenthal_oracle() {
    let mut checked = 0;
    for ty in low_rank_types() {
        let oracle = Oracle::new(ty);
        for w in all_weights(ty.n(), 2) {
            let lambda: Vec<i64> = w.iter().map(|&x| x as i64).collect();
            let expected = oracle.dimension(&lambda);
            let got = weyl_dim(ty, &HighestWeight(w.clone())).to_u64().unwrap();
            assert_eq!(got, expected, "{ty} {w:?}");
            checked += 1;
        }
    }
    // 3 + 9 + 27 + 81 (A) + 9 + 27 + 81 (B) + 9 + 27 + 81 (C) + 81 (D4) + 9 (G2) + 81 (F4)
    assert_eq!(checked, 525);
}

#[test]
fn freudenthal_oracle_spot_values() {
    let g2: SimpleType = "G2".parse().unwrap();
    assert_eq!(Oracle::new(g2).dimension(&[1, 0]), 7);
    let b3: SimpleType = "B3".parse().unwrap();
    assert_eq!(Oracle::new(b3).dimension(&[0, 0, 1]), 8);
    let f4: SimpleType = "F4".parse().unwrap();
    assert_eq!(Oracle::new(f4).dimension(&[0, 0, 0, 1]), 26);
}
