mod common;

use common::*;
use granum::sets::{rough_equality, rough_inclusion, Approximation, Region};
use proptest::prelude::*;

fn granulation_strategy() -> impl Strategy<Value = (usize, Vec<Vec<usize>>, bool)> {
    (1usize..=6, any::<u64>(), any::<bool>()).prop_map(|(n, seed, partition)| {
        let mut r = rng(seed);
        let g = if partition {
            random_partition(n, &mut r)
        } else {
            let count = 1 + (seed as usize % (n + 1));
            random_granules(n, count, seed % 3 != 0, &mut r)
        };
        (n, g, partition)
    })
}

proptest! {
    #[test]
    fn monotone_and_oracle_equivalent((n, g, partition) in granulation_strategy()) {
        let ctx = context(n, &g);
        let sigs: Vec<(Region, Region)> = (0..1u64 << n)
            .map(|m| { let a = Region::from_mask(n, m); (ctx.lower(&a), ctx.upper(&a)) })
            .collect();
        for a in 0..1u64 << n {
            prop_assert_eq!(naive_signature(n, &g, a), (sigs[a as usize].0.mask(), sigs[a as usize].1.mask()));
            // Supersets of a: b = a | extra.
            let mut b = a;
            loop {
                prop_assert!(sigs[a as usize].0.is_subset(&sigs[b as usize].0));
                prop_assert!(sigs[a as usize].1.is_subset(&sigs[b as usize].1));
                b = (b + 1) | a;
                if b >= 1u64 << n { break; }
            }
            if partition {
                let r = Region::from_mask(n, a);
                let (l, u) = &sigs[a as usize];
                prop_assert!(l.is_subset(&r) && r.is_subset(u));
                prop_assert_eq!(&ctx.lower(l), l);
                prop_assert_eq!(&ctx.upper(u), u);
            }
        }
    }

    #[test]
    fn rough_equality_and_inclusion_laws((n, g, _) in granulation_strategy(), x in any::<u64>(), y in any::<u64>(), z in any::<u64>()) {
        let ctx = context(n, &g);
        let gr = ctx.granulation();
        let full = (1u64 << n) - 1;
        let [a, b, c] = [x, y, z].map(|m| Region::from_mask(n, m & full));
        prop_assert!(rough_equality(&a, &a, gr) && rough_inclusion(&a, &a, gr));
        prop_assert_eq!(rough_equality(&a, &b, gr), rough_equality(&b, &a, gr));
        if rough_equality(&a, &b, gr) && rough_equality(&b, &c, gr) {
            prop_assert!(rough_equality(&a, &c, gr));
        }
        if rough_inclusion(&a, &b, gr) && rough_inclusion(&b, &c, gr) {
            prop_assert!(rough_inclusion(&a, &c, gr));
        }
        if rough_inclusion(&a, &b, gr) && rough_inclusion(&b, &a, gr) {
            prop_assert!(rough_equality(&a, &b, gr));
        }
    }
}

#[test]
fn larger_random_universes_are_monotone() {
    let mut r = rng(42);
    for _ in 0..20 {
        use rand::Rng;
        let n = r.gen_range(10..=40);
        let g = random_granules(n, n / 2, true, &mut r);
        let ctx = context(n, &g);
        for _ in 0..50 {
            let a = Region::from_indices(n, (0..n).filter(|_| r.gen_bool(0.5)));
            let b = a.union(&Region::from_indices(n, (0..n).filter(|_| r.gen_bool(0.3))));
            assert!(ctx.lower(&a).is_subset(&ctx.lower(&b)));
            assert!(ctx.upper(&a).is_subset(&ctx.upper(&b)));
        }
    }
}
