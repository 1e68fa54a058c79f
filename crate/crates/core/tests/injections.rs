//! Round trips and codomain membership for the path-pair injections on
//! randomly drawn shapes and path pairs.

use proptest::prelude::*;
use staircase_core::injections::{
    first_vertical_pair, last_horizontal_pair, phi_forward, phi_inverse, phibar_forward, phibar_inverse,
    psi_forward, psi_inverse,
};
use staircase_core::path::{count_paths, enumerate_paths, is_member, Path};
use staircase_core::shape::Shape;
use staircase_core::verify::{verify_injections, Injection};

fn shape_strategy() -> impl Strategy<Value = Shape> {
    prop::collection::vec(1usize..=4, 0..=3).prop_map(|mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let raw: Vec<i64> = parts.into_iter().map(|p| p as i64).collect();
        Shape::new(&raw).unwrap()
    })
}

/// Picks the `k`-th path of the family (modulo its size), if nonempty.
fn pick(shape: &Shape, m: usize, n: usize, k: usize) -> Option<Path> {
    let all = enumerate_paths(shape, m, n).unwrap();
    (!all.is_empty()).then(|| all[k % all.len()].clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn psi_round_trip(shape in shape_strategy(), m in 0usize..6, n in 0usize..6, a in any::<usize>(), b in any::<usize>()) {
        if let (Some(p), Some(q)) = (pick(&shape, m, n + 1, a), pick(&shape, m + 1, n, b)) {
            let out = psi_forward(&shape, &p, &q).unwrap();
            prop_assert!(is_member(&shape, &out.first, m, n));
            prop_assert!(is_member(&shape, &out.second, m + 1, n + 1));
            let back = psi_inverse(&shape, &out).unwrap();
            prop_assert_eq!((back.first, back.second), (p, q));
        }
    }

    #[test]
    fn phi_round_trip(shape in shape_strategy(), m in 1usize..6, n in 0usize..6, a in any::<usize>(), b in any::<usize>()) {
        if let (Some(p), Some(q)) = (pick(&shape, m - 1, n, a), pick(&shape, m + 1, n, b)) {
            let out = phi_forward(&shape, &p, &q).unwrap();
            prop_assert!(is_member(&shape, &out.first, m, n));
            prop_assert!(is_member(&shape, &out.second, m, n));
            prop_assert!(first_vertical_pair(&out.first, &out.second, -1).is_some());
            let back = phi_inverse(&shape, &out).unwrap();
            prop_assert_eq!((back.first, back.second), (p, q));
        }
    }

    #[test]
    fn phibar_round_trip(shape in shape_strategy(), m in 1usize..6, n in 1usize..6, a in any::<usize>(), b in any::<usize>()) {
        if let (Some(p), Some(q)) = (pick(&shape, m - 1, n + 1, a), pick(&shape, m + 1, n - 1, b)) {
            let out = phibar_forward(&shape, &p, &q).unwrap();
            prop_assert!(is_member(&shape, &out.first, m, n));
            prop_assert!(is_member(&shape, &out.second, m, n));
            prop_assert!(last_horizontal_pair(&out.first, &out.second, -1).is_some());
            let back = phibar_inverse(&shape, &out).unwrap();
            prop_assert_eq!((back.first, back.second), (p, q));
        }
    }

    /// Any inverse that succeeds must land on a preimage that maps back.
    #[test]
    fn inverses_only_accept_images(shape in shape_strategy(), m in 1usize..5, n in 1usize..5, a in any::<usize>(), b in any::<usize>()) {
        if let (Some(f), Some(g)) = (pick(&shape, m, n, a), pick(&shape, m, n, b)) {
            let pair = staircase_core::PathPair::new(f, g);
            if let Some(pre) = phi_inverse(&shape, &pair) {
                prop_assert_eq!(phi_forward(&shape, &pre.first, &pre.second).unwrap(), pair.clone());
            }
            if let Some(pre) = phibar_inverse(&shape, &pair) {
                prop_assert_eq!(phibar_forward(&shape, &pre.first, &pre.second).unwrap(), pair);
            }
        }
    }
}

#[test]
fn injectivity_certifies_the_counting_inequalities() {
    // |domain| <= |codomain| for each map is one of the chain inequalities;
    // the report's sizes must agree with the DP counts.
    for shape in ["", "1", "2", "1,1", "2,1", "3,2", "3,3,1"] {
        let shape: Shape = shape.parse().unwrap();
        let report = verify_injections(&shape, &Injection::ALL, 6).unwrap();
        assert!(report.is_clean(), "{shape}: {:?}", report.violations().next());
        for cell in &report.cells {
            let (dp, dq, cp, cq) = cell.injection.families(cell.m, cell.n).unwrap();
            let c = |f: (usize, usize)| count_paths(&shape, f.0, f.1);
            assert_eq!(num_bigint::BigUint::from(cell.domain_size), c(dp) * c(dq));
            assert_eq!(num_bigint::BigUint::from(cell.codomain_size), c(cp) * c(cq));
            assert_eq!(cell.image_size, cell.domain_size);
            assert!(cell.domain_size <= cell.codomain_size);
        }
    }
}

#[test]
fn phi_cut_entry_observations_are_recorded() {
    // The suite counts cuts whose vertices are not entered by the expected
    // step; on the empty shape the cut can sit at p's start vertex.
    let report = verify_injections(&Shape::empty(), &[Injection::Phi], 4).unwrap();
    assert!(report.is_clean());
    let unusual: usize = report.cells.iter().map(|c| c.unusual_entries).sum();
    println!("phi cuts with unusual entry steps: {unusual}");
    assert!(unusual > 0);
}
