mod common;

use proptest::prelude::*;
use tilekit::line::{
    decide_tiles_line_cyclotomic, decide_tiles_line_cyclotomic_capped, decide_tiles_line_stategraph, minimal_period,
    CyclotomicOutcome, TilingCertificate1D,
};
use tilekit::{FiniteSetZ, GroupSubset};

fn set(v: &[i64]) -> FiniteSetZ {
    FiniteSetZ::new(v.to_vec()).unwrap()
}

/// Brute force over every period `M ≤ max_m` and every `B ∋ 0`.
fn least_tiling(tile: &FiniteSetZ, max_m: u64) -> Option<(u64, Vec<u64>)> {
    let a = tile.canonical();
    let k = a.len() as u64;
    (k..=max_m).step_by(k as usize).find_map(|m| {
        let res: Vec<u64> = a.elements().iter().map(|&x| x as u64 % m).collect();
        let mut sorted = res.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != res.len() {
            return None;
        }
        common::groups::complements(m, &res).into_iter().next().map(|b| (m, b))
    })
}

#[test]
fn deciders_match_brute_force_for_small_diameters() {
    for bits in 0u32..1 << 8 {
        let elems: Vec<i64> = std::iter::once(0).chain((1..=8).filter(|i| bits >> (i - 1) & 1 == 1)).collect();
        let tile = set(&elems);
        let expected = least_tiling(&tile, 32);
        let got = decide_tiles_line_stategraph(&tile, 24).unwrap();
        assert_eq!(got.as_ref().map(|c| (c.period, c.residues.residues())), expected, "{tile}");
        assert_eq!(decide_tiles_line_cyclotomic(&tile), got, "{tile}");
    }
}

#[test]
fn certificates_are_translation_invariant() {
    let a = decide_tiles_line_stategraph(&set(&[0, 1, 4, 5]), 24).unwrap().unwrap();
    let b = decide_tiles_line_stategraph(&set(&[-7, -6, -3, -2]), 24).unwrap().unwrap();
    assert_eq!((a.period, a.residues.residues()), (b.period, b.residues.residues()));
    assert_eq!((a.period, a.residues.residues()), (8, vec![0, 2]));
}

#[test]
fn forged_certificates_are_rejected() {
    let tile = set(&[0, 1, 3]);
    let bad = TilingCertificate1D { tile: tile.clone(), period: 6, residues: GroupSubset::cyclic(6, &[0, 2]).unwrap() };
    assert!(!bad.verify());
    assert!(minimal_period(&bad).is_err());
    let padded = TilingCertificate1D {
        tile: set(&[0, 1]),
        period: 8,
        residues: GroupSubset::cyclic(8, &[0, 2, 4, 6]).unwrap(),
    };
    assert_eq!(minimal_period(&padded).unwrap().period, 2);
}

#[test]
fn capped_search_reports_where_it_stopped() {
    let tile = set(&[0, 1, 4, 5]);
    assert!(matches!(decide_tiles_line_cyclotomic_capped(&tile, 4), CyclotomicOutcome::Capped { .. }));
    assert!(matches!(decide_tiles_line_cyclotomic_capped(&tile, 8), CyclotomicOutcome::Tiles(_)));
    assert_eq!(decide_tiles_line_cyclotomic_capped(&set(&[0, 1, 3]), 100), CyclotomicOutcome::DoesNotTile);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn deciders_agree_on_random_tiles(rest in proptest::collection::btree_set(1i64..=16, 0..6), shift in -50i64..50) {
        let elems: Vec<i64> = std::iter::once(0).chain(rest).map(|x| x + shift).collect();
        let tile = set(&elems);
        let sg = decide_tiles_line_stategraph(&tile, 24).unwrap();
        prop_assert_eq!(&decide_tiles_line_cyclotomic(&tile), &sg);
        if let Some(c) = sg {
            prop_assert!(c.verify());
            prop_assert!(c.period <= 1u64 << tile.diameter());
        }
    }
}
