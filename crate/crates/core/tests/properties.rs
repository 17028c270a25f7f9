mod common;

use proptest::prelude::*;

use pierik_core::{make_skew, Cell, Partition, SkewShape, Space};

fn spaces() -> Vec<Space> {
    vec![common::rect(3, 4), common::rect(4, 5), common::og(6), common::lg(7)]
}

fn pair() -> impl Strategy<Value = (Space, Partition, Partition)> {
    (
        0..spaces().len(),
        any::<prop::sample::Index>(),
        any::<prop::sample::Index>(),
    )
        .prop_map(|(s, i, j)| {
            let space = spaces()[s];
            let all = space.partitions();
            let nu = all[i.index(all.len())].clone();
            let inside: Vec<Partition> = all.into_iter().filter(|l| nu.contains(l)).collect();
            let lambda = inside[j.index(inside.len())].clone();
            (space, lambda, nu)
        })
}

proptest! {
    #[test]
    fn dual_is_an_involution((space, _, nu) in pair()) {
        prop_assert_eq!(space.dual(&space.dual(&nu).unwrap()).unwrap(), nu);
    }

    #[test]
    fn skew_weight_and_stats_from_raw_boxes((space, lambda, nu) in pair()) {
        let theta = make_skew(&lambda, &nu, space).unwrap();
        prop_assert_eq!(theta.weight() as u32, nu.weight() - lambda.weight());
        let raw = SkewShape::from_cells(theta.kind(), theta.iter().collect::<Vec<Cell>>());
        prop_assert_eq!(raw.stats(), theta.stats());
    }

    #[test]
    fn stats_are_consistent((space, lambda, nu) in pair()) {
        let theta = make_skew(&lambda, &nu, space).unwrap();
        let s = theta.stats();
        prop_assert_eq!(s.d == s.weight, s.is_rim);
        prop_assert_eq!(s.n_minus, s.n.saturating_sub(1));
        prop_assert!(s.n_prime <= s.n);
        if !s.meets_diagonal {
            prop_assert_eq!(s.n_prime, s.n);
        }
        let rows: Vec<u32> = theta.iter().map(|c| c.row).collect();
        let cols: Vec<u32> = theta.iter().map(|c| c.col).collect();
        let distinct = |v: &[u32]| v.iter().collect::<std::collections::BTreeSet<_>>().len() == v.len();
        prop_assert_eq!(s.is_rook_strip, distinct(&rows) && distinct(&cols));
        if s.is_rook_strip {
            prop_assert!(s.is_horizontal_strip && s.is_vertical_strip);
        }
    }

    #[test]
    fn corner_subsets_sit_between_bounds((space, lambda, nu) in pair()) {
        let theta = make_skew(&lambda, &nu, space).unwrap();
        let corners = theta.corners();
        let inner = theta.without(corners.iter().copied());
        let subsets = theta.corner_subsets();
        prop_assert_eq!(subsets.len(), 1 << corners.len());
        prop_assert!(subsets.contains(&theta));
        prop_assert!(subsets.contains(&inner));
        for phi in &subsets {
            prop_assert!(inner.is_subset(phi) && phi.is_subset(&theta));
        }
        let mut dedup = subsets.clone();
        dedup.sort_by(|a, b| a.cells().cmp(b.cells()));
        dedup.dedup();
        prop_assert_eq!(dedup.len(), subsets.len());
    }

    #[test]
    fn arm_partitions_shifted_rims((space, lambda, nu) in pair()) {
        let theta = make_skew(&lambda, &nu, space).unwrap();
        prop_assume!(space.is_shifted() && theta.is_rim() && !theta.is_empty());
        let arm = theta.northeast_arm().unwrap();
        prop_assert_eq!(arm.a, arm.arm.len());
        prop_assert_eq!(arm.a + arm.rest.weight(), theta.weight());
        prop_assert!(arm.arm.iter().all(|c| theta.contains(*c) && !arm.rest.contains(*c)));
        prop_assert_eq!(arm.rest.is_empty(), theta.is_row() || theta.is_column());
        prop_assert!(arm.arm_is_row || arm.arm_is_column);
    }
}
