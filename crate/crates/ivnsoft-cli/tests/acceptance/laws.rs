//! Randomized law checks over the 0.05 degree grid: universes and parameter
//! lists of size 1..=6, fixed seeds, 1000 instances per law.

use crate::support::Gen;
use ivnsoft::{
    level_soft_set, ComparisonMode, ExtremeKind, IvnSoftSet, LevelSoftSet, ThresholdSet,
};

pub const CASES: usize = 1000;

fn triple(gen: &mut Gen) -> (IvnSoftSet, IvnSoftSet, IvnSoftSet) {
    let (u, e) = gen.dims();
    (gen.soft_set(u, e), gen.soft_set(u, e), gen.soft_set(u, e))
}

fn level_contained(inner: &LevelSoftSet, outer: &LevelSoftSet) -> bool {
    inner
        .result()
        .table_subset_of(outer.result())
        .expect("aligned level sets")
}

/// Idempotency, commutativity, associativity, absorption, distributivity,
/// and the bottom/top identities of union and intersection.
pub fn distributive_lattice(seed: u64) {
    let mut gen = Gen::new(seed);
    for case in 0..CASES {
        let (a, b, c) = triple(&mut gen);
        let universe = a.universe().to_vec();
        let parameters = a.parameters().to_vec();
        let bottom = IvnSoftSet::make_empty(universe.clone(), parameters.clone()).unwrap();
        let top = IvnSoftSet::make_universal(universe, parameters).unwrap();

        assert_eq!(a.union(&a).unwrap(), a, "union idempotency, case {case}");
        assert_eq!(
            a.intersection(&a).unwrap(),
            a,
            "intersection idempotency, case {case}"
        );
        assert_eq!(
            a.union(&b).unwrap(),
            b.union(&a).unwrap(),
            "union commutativity, case {case}"
        );
        assert_eq!(
            a.intersection(&b).unwrap(),
            b.intersection(&a).unwrap(),
            "intersection commutativity, case {case}"
        );
        assert_eq!(
            a.union(&b).unwrap().union(&c).unwrap(),
            a.union(&b.union(&c).unwrap()).unwrap(),
            "union associativity, case {case}"
        );
        assert_eq!(
            a.intersection(&b).unwrap().intersection(&c).unwrap(),
            a.intersection(&b.intersection(&c).unwrap()).unwrap(),
            "intersection associativity, case {case}"
        );
        assert_eq!(
            a.union(&a.intersection(&b).unwrap()).unwrap(),
            a,
            "absorption over union, case {case}"
        );
        assert_eq!(
            a.intersection(&a.union(&b).unwrap()).unwrap(),
            a,
            "absorption over intersection, case {case}"
        );
        assert_eq!(
            a.union(&b.intersection(&c).unwrap()).unwrap(),
            a.union(&b)
                .unwrap()
                .intersection(&a.union(&c).unwrap())
                .unwrap(),
            "union distributes over intersection, case {case}"
        );
        assert_eq!(
            a.intersection(&b.union(&c).unwrap()).unwrap(),
            a.intersection(&b)
                .unwrap()
                .union(&a.intersection(&c).unwrap())
                .unwrap(),
            "intersection distributes over union, case {case}"
        );
        assert_eq!(
            a.union(&bottom).unwrap(),
            a,
            "bottom is the union identity, case {case}"
        );
        assert_eq!(
            a.intersection(&top).unwrap(),
            a,
            "top is the intersection identity, case {case}"
        );
        assert_eq!(
            a.union(&top).unwrap(),
            top,
            "top absorbs unions, case {case}"
        );
        assert_eq!(
            a.intersection(&bottom).unwrap(),
            bottom,
            "bottom absorbs intersections, case {case}"
        );
    }
}

/// Complement turns unions into intersections and back.
pub fn de_morgan_union_intersection(seed: u64) {
    let mut gen = Gen::new(seed);
    for case in 0..CASES {
        let (a, b, _) = triple(&mut gen);
        assert_eq!(
            a.union(&b).unwrap().complement(),
            a.complement().intersection(&b.complement()).unwrap(),
            "union De Morgan, case {case}"
        );
        assert_eq!(
            a.intersection(&b).unwrap().complement(),
            a.complement().union(&b.complement()).unwrap(),
            "intersection De Morgan, case {case}"
        );
        assert_eq!(
            a.complement().complement(),
            a,
            "double complement, case {case}"
        );
    }
}

/// Complement swaps the AND and OR products over parameter pairs, and both
/// products associate cell-wise.
pub fn de_morgan_and_associativity_of_products(seed: u64) {
    let mut gen = Gen::new(seed);
    for case in 0..CASES {
        let (u, _) = gen.dims();
        // independent parameter lists, shared universe
        let a = gen.soft_set(u, 1 + (case % 3));
        let b = gen.soft_set(u, 1 + ((case / 3) % 3));
        let c = gen.soft_set(u, 1 + ((case / 9) % 3));

        assert_eq!(
            a.or_product(&b).unwrap().as_set().complement(),
            *a.complement()
                .and_product(&b.complement())
                .unwrap()
                .as_set(),
            "OR product De Morgan, case {case}"
        );
        assert_eq!(
            a.and_product(&b).unwrap().as_set().complement(),
            *a.complement().or_product(&b.complement()).unwrap().as_set(),
            "AND product De Morgan, case {case}"
        );

        // associativity up to pair-label regrouping: flattened row-major
        // cells coincide
        let left = a
            .and_product(&b)
            .unwrap()
            .into_set()
            .and_product(&c)
            .unwrap()
            .into_set();
        let right = a
            .and_product(&b.and_product(&c).unwrap().into_set())
            .unwrap()
            .into_set();
        let flat = |s: &IvnSoftSet| {
            s.relation_form()
                .into_iter()
                .map(|(_, cell)| cell.clone())
                .collect::<Vec<_>>()
        };
        assert_eq!(
            flat(&left),
            flat(&right),
            "AND product associativity, case {case}"
        );
        let left = a
            .or_product(&b)
            .unwrap()
            .into_set()
            .or_product(&c)
            .unwrap()
            .into_set();
        let right = a
            .or_product(&b.or_product(&c).unwrap().into_set())
            .unwrap()
            .into_set();
        assert_eq!(
            flat(&left),
            flat(&right),
            "OR product associativity, case {case}"
        );
    }
}

/// Union is the least upper bound and intersection the greatest lower bound
/// of the subset order.
pub fn join_meet_extremality(seed: u64) {
    let mut gen = Gen::new(seed);
    for case in 0..CASES {
        let (a, b, r) = triple(&mut gen);
        let join = a.union(&b).unwrap();
        let meet = a.intersection(&b).unwrap();
        assert!(a.is_subset(&join).unwrap(), "a below union, case {case}");
        assert!(b.is_subset(&join).unwrap(), "b below union, case {case}");
        assert!(
            meet.is_subset(&a).unwrap(),
            "intersection below a, case {case}"
        );
        assert!(
            meet.is_subset(&b).unwrap(),
            "intersection below b, case {case}"
        );

        // an arbitrary upper bound of both dominates the union
        let upper = join.union(&r).unwrap();
        assert!(a.is_subset(&upper).unwrap() && b.is_subset(&upper).unwrap());
        assert!(
            join.is_subset(&upper).unwrap(),
            "union is least, case {case}"
        );
        // and dually for lower bounds
        let lower = meet.intersection(&r).unwrap();
        assert!(lower.is_subset(&a).unwrap() && lower.is_subset(&b).unwrap());
        assert!(
            lower.is_subset(&meet).unwrap(),
            "intersection is greatest, case {case}"
        );
    }
}

/// `a below b` holds exactly when `complement(b) below complement(a)`.
pub fn subset_complement_antitone(seed: u64) {
    let mut gen = Gen::new(seed);
    for case in 0..CASES {
        let (a, b, _) = triple(&mut gen);
        assert_eq!(
            a.is_subset(&b).unwrap(),
            b.complement().is_subset(&a.complement()).unwrap(),
            "antitone equivalence on random pairs, case {case}"
        );
        // and on pairs where containment holds by construction
        let inner = a.intersection(&b).unwrap();
        assert!(inner.is_subset(&b).unwrap());
        assert!(
            b.complement().is_subset(&inner.complement()).unwrap(),
            "case {case}"
        );
    }
}

/// Clamped addition is commutative and associative.
pub fn addition_laws(seed: u64) {
    let mut gen = Gen::new(seed);
    for case in 0..CASES {
        let (a, b, c) = triple(&mut gen);
        assert_eq!(
            a.addition(&b).unwrap(),
            b.addition(&a).unwrap(),
            "addition commutativity, case {case}"
        );
        assert_eq!(
            a.addition(&b).unwrap().addition(&c).unwrap(),
            a.addition(&b.addition(&c).unwrap()).unwrap(),
            "addition associativity, case {case}"
        );
    }
}

/// Favorite operators are idempotent; the truth favorite distributes over
/// clamped addition and is dominated by the union of favorites.
pub fn favorite_laws(seed: u64) {
    let mut gen = Gen::new(seed);
    for case in 0..CASES {
        let (a, b, _) = triple(&mut gen);
        assert_eq!(
            a.truth_favorite().truth_favorite(),
            a.truth_favorite(),
            "truth favorite idempotency, case {case}"
        );
        assert_eq!(
            a.false_favorite().false_favorite(),
            a.false_favorite(),
            "false favorite idempotency, case {case}"
        );
        assert_eq!(
            a.addition(&b).unwrap().truth_favorite(),
            a.truth_favorite().addition(&b.truth_favorite()).unwrap(),
            "truth favorite over addition, case {case}"
        );
        assert_eq!(
            a.addition(&b).unwrap().false_favorite(),
            a.false_favorite().addition(&b.false_favorite()).unwrap(),
            "false favorite over addition, case {case}"
        );
        assert!(
            a.union(&b)
                .unwrap()
                .truth_favorite()
                .is_subset(&a.truth_favorite().union(&b.truth_favorite()).unwrap())
                .unwrap(),
            "truth favorite of a union sits below the union of favorites, case {case}"
        );
    }
}

/// Lowering the cut (in the component order) never shrinks the level set.
pub fn threshold_monotonicity(seed: u64) {
    let mut gen = Gen::new(seed);
    for case in 0..CASES {
        let (u, e) = gen.dims();
        let set = gen.soft_set(u, e);
        let t1 = gen.threshold(set.parameters());
        // meet every cut with random noise: the result sits below t1
        let noise = gen.threshold(set.parameters());
        let lowered: Vec<_> = t1
            .cuts()
            .iter()
            .zip(noise.cuts())
            .map(|(a, b)| a.meet(b))
            .collect();
        let t2 = ThresholdSet::explicit(set.parameters().to_vec(), lowered).unwrap();
        for (low, high) in t2.cuts().iter().zip(t1.cuts()) {
            assert!(low.dominates(high), "construction keeps t2 below t1");
        }
        let level1 = level_soft_set(&set, &t1, ComparisonMode::Dominance).unwrap();
        let level2 = level_soft_set(&set, &t2, ComparisonMode::Dominance).unwrap();
        assert!(
            level_contained(&level1, &level2),
            "lower cut accepts at least as much, case {case}"
        );
    }
}

/// Growing the source set (in the subset order) never shrinks the level set.
pub fn source_monotonicity(seed: u64) {
    let mut gen = Gen::new(seed);
    for case in 0..CASES {
        let (u, e) = gen.dims();
        let s2 = gen.soft_set(u, e);
        let s1 = s2.intersection(&gen.soft_set(u, e)).unwrap();
        assert!(s1.is_subset(&s2).unwrap());
        let cut = gen.threshold(s2.parameters());
        let level1 = level_soft_set(&s1, &cut, ComparisonMode::Dominance).unwrap();
        let level2 = level_soft_set(&s2, &cut, ComparisonMode::Dominance).unwrap();
        assert!(
            level_contained(&level1, &level2),
            "larger source accepts at least as much, case {case}"
        );
    }
}

/// The max-min-min level set is contained in both the avg and the
/// min-min-min level sets.
pub fn rule_ordering(seed: u64) {
    let mut gen = Gen::new(seed);
    for case in 0..CASES {
        let (u, e) = gen.dims();
        let set = gen.soft_set(u, e);
        let upper = ThresholdSet::extreme(&set, ExtremeKind::MaxMinMin);
        let avg = ThresholdSet::avg(&set);
        let lower = ThresholdSet::extreme(&set, ExtremeKind::MinMinMin);
        let by_upper = level_soft_set(&set, &upper, ComparisonMode::Dominance).unwrap();
        let by_avg = level_soft_set(&set, &avg, ComparisonMode::Dominance).unwrap();
        let by_lower = level_soft_set(&set, &lower, ComparisonMode::Dominance).unwrap();
        assert!(
            level_contained(&by_upper, &by_avg),
            "Mmm within avg, case {case}"
        );
        assert!(
            level_contained(&by_upper, &by_lower),
            "Mmm within mmm, case {case}"
        );
    }
}

/// Cell-level order: dominates is a partial order, join/meet are its bounds,
/// complement is a De Morgan anti-isomorphism, and passing a cut is monotone
/// in the cut.
pub fn cell_order_laws(seed: u64) {
    let mut gen = Gen::new(seed);
    for case in 0..CASES {
        let x = gen.number();
        let y = gen.number();
        let z = gen.number();
        assert!(x.dominates(&x), "reflexivity, case {case}");
        if x.dominates(&y) && y.dominates(&x) {
            assert_eq!(x, y, "antisymmetry, case {case}");
        }
        let lo = x.meet(&y);
        let hi = x.join(&y);
        if x.dominates(&y) && y.dominates(&z) {
            assert!(x.dominates(&z), "transitivity, case {case}");
        }
        assert!(
            x.dominates(&hi) && y.dominates(&hi),
            "join above, case {case}"
        );
        assert!(
            lo.dominates(&x) && lo.dominates(&y),
            "meet below, case {case}"
        );
        let upper = hi.join(&z);
        assert!(
            hi.dominates(&upper),
            "join is least upper bound, case {case}"
        );
        assert_eq!(
            x.join(&y).complement(),
            x.complement().meet(&y.complement()),
            "cell De Morgan, case {case}"
        );
        // monotone cut passing: a cut below a passing cut also passes
        if x.satisfies(&y, ComparisonMode::Dominance) {
            let weaker = y.meet(&z);
            assert!(
                x.satisfies(&weaker, ComparisonMode::Dominance),
                "cut monotonicity, case {case}"
            );
        }
    }
}
