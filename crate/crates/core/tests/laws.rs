use std::sync::OnceLock;

use isoclips_core::clips::{clips_pair, clips_sets};
use isoclips_core::groups::{is_leq, ClassSet, GroupContext, SubgroupClass, SubgroupType};
use isoclips_core::irreps::{alt_square, sym_square, tensor_product, HarmonicLabel, HarmonicSum};
use isoclips_core::symmetry::{isotropy_classes, isotropy_classes_in_order, RepSpec};
use proptest::prelude::*;

/// Classes `clips` accepts in `ctx`: everything but type II, plus the full
/// group itself.
fn admissible(ctx: GroupContext, max: u32) -> Vec<SubgroupClass> {
    SubgroupClass::enumerate(ctx, max)
        .into_iter()
        .filter(|c| c.subgroup_type() != SubgroupType::II || *c == ctx.full_group())
        .collect()
}

fn context() -> impl Strategy<Value = GroupContext> {
    prop_oneof![Just(GroupContext::SO3), Just(GroupContext::O3)]
}

fn class_in(ctx: GroupContext) -> impl Strategy<Value = SubgroupClass> {
    prop::sample::select(admissible(ctx, 24))
}

fn pair() -> impl Strategy<Value = (GroupContext, SubgroupClass, SubgroupClass)> {
    context().prop_flat_map(|ctx| (Just(ctx), class_in(ctx), class_in(ctx)))
}

fn family() -> impl Strategy<
    Value = (
        GroupContext,
        Vec<SubgroupClass>,
        Vec<SubgroupClass>,
        Vec<SubgroupClass>,
    ),
> {
    context().prop_flat_map(|ctx| {
        let v = || prop::collection::vec(class_in(ctx), 1..5);
        (Just(ctx), v(), v(), v())
    })
}

fn label() -> impl Strategy<Value = HarmonicLabel> {
    (0..=8u32, any::<bool>()).prop_map(|(n, s)| HarmonicLabel::new(n, s))
}

fn sum() -> impl Strategy<Value = HarmonicSum> {
    prop::collection::vec((label(), 1..=3u64), 1..4).prop_map(HarmonicSum::from_terms)
}

fn set(v: &[SubgroupClass]) -> ClassSet {
    v.iter().copied().collect()
}

proptest! {
    #[test]
    fn clips_commutes((ctx, a, b) in pair()) {
        prop_assert_eq!(clips_pair(ctx, a, b).unwrap(), clips_pair(ctx, b, a).unwrap());
    }

    #[test]
    fn clips_results_are_common_subgroups((ctx, a, b) in pair()) {
        let ab = clips_pair(ctx, a, b).unwrap();
        prop_assert!(!ab.is_empty());
        for &c in &ab {
            prop_assert!(c.is_canonical());
            prop_assert!(is_leq(c, a, ctx).unwrap() && is_leq(c, b, ctx).unwrap(), "{} in {} o {}", c, a, b);
        }
    }

    #[test]
    fn full_group_is_neutral((ctx, a, _b) in pair()) {
        prop_assert_eq!(clips_pair(ctx, a, ctx.full_group()).unwrap(), ClassSet::singleton(a));
        prop_assert!(clips_pair(ctx, a, a).unwrap().contains(&a));
        prop_assert!(clips_pair(ctx, a, SubgroupClass::Triv).unwrap().contains(&SubgroupClass::Triv));
    }

    #[test]
    fn set_clips_is_associative_and_monotone((ctx, f, g, h) in family()) {
        let (f, g, h) = (set(&f), set(&g), set(&h));
        let left = clips_sets(ctx, &clips_sets(ctx, &f, &g).unwrap(), &h).unwrap();
        let right = clips_sets(ctx, &f, &clips_sets(ctx, &g, &h).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        let mut bigger = f.clone();
        bigger.union_with(&h);
        prop_assert!(clips_sets(ctx, &f, &g).unwrap().is_subset(&clips_sets(ctx, &bigger, &g).unwrap()));
    }

    #[test]
    fn normalize_is_idempotent(family in 0..6usize, n in 1..=64u32) {
        use SubgroupClass::*;
        let raw = [Cyclic(n), Dihedral(n), ZMinus(2 * n), DV(n), DH(2 * n), TypeII(
            Dihedral(n).normalize().unwrap().proper().unwrap(),
        )][family];
        let once = raw.normalize().unwrap();
        prop_assert_eq!(once.normalize().unwrap(), once);
        prop_assert!(once.is_canonical());
        prop_assert_eq!(once.to_string().parse::<SubgroupClass>().unwrap(), once);
    }

    #[test]
    fn tensor_product_laws(a in sum(), b in sum(), c in sum()) {
        let ab = tensor_product(&a, &b);
        prop_assert_eq!(&ab, &tensor_product(&b, &a));
        prop_assert_eq!(ab.dim(), a.dim() * b.dim());
        prop_assert_eq!(tensor_product(&ab, &c), tensor_product(&a, &tensor_product(&b, &c)));
        prop_assert_eq!(tensor_product(&a, &b.plus(&c)), ab.plus(&tensor_product(&a, &c)));
    }

    #[test]
    fn squares_split_the_tensor_square(a in sum()) {
        let (s, l) = (sym_square(&a), alt_square(&a));
        let d = a.dim();
        prop_assert_eq!(s.dim(), d * (d + 1) / 2);
        prop_assert_eq!(l.dim(), d * (d - 1) / 2);
        prop_assert_eq!(s.plus(&l), tensor_product(&a, &a));
    }

    #[test]
    fn fold_order_is_irrelevant(labels in prop::collection::vec(label(), 1..=6), plus in any::<bool>(), seed in any::<u64>()) {
        // force a uniform sign of -I so the O(3) fold is defined
        let o3: Vec<_> = labels
            .iter()
            .map(|l| {
                let flip = (l.minus_one_sign() > 0) != plus;
                HarmonicLabel::new(l.n, l.star != flip)
            })
            .collect();
        let permute = |v: &[HarmonicLabel]| {
            let mut p = v.to_vec();
            p.rotate_left((seed % v.len() as u64) as usize);
            p.reverse();
            p
        };
        for (ctx, v) in [(GroupContext::SO3, &labels), (GroupContext::O3, &o3)] {
            let grouped = isotropy_classes(&RepSpec::new(ctx, v.iter().copied().collect())).unwrap();
            prop_assert_eq!(&grouped, &isotropy_classes_in_order(ctx, v).unwrap());
            prop_assert_eq!(&grouped, &isotropy_classes_in_order(ctx, &permute(v)).unwrap());
        }
    }

    #[test]
    fn more_summands_keep_old_classes(a in sum(), b in sum()) {
        let small = isotropy_classes(&RepSpec::new(GroupContext::SO3, a.clone())).unwrap();
        let big = isotropy_classes(&RepSpec::new(GroupContext::SO3, a.plus(&b))).unwrap();
        // (v, 0) has the isotropy of v
        prop_assert!(small.is_subset(&big));
    }
}

fn leq_matrix(ctx: GroupContext) -> &'static (Vec<SubgroupClass>, Vec<Vec<bool>>) {
    static SO3: OnceLock<(Vec<SubgroupClass>, Vec<Vec<bool>>)> = OnceLock::new();
    static O3: OnceLock<(Vec<SubgroupClass>, Vec<Vec<bool>>)> = OnceLock::new();
    let cell = if ctx == GroupContext::SO3 { &SO3 } else { &O3 };
    cell.get_or_init(|| {
        let classes = SubgroupClass::enumerate(ctx, 24);
        let m = classes
            .iter()
            .map(|&a| {
                classes
                    .iter()
                    .map(|&b| is_leq(a, b, ctx).unwrap())
                    .collect()
            })
            .collect();
        (classes, m)
    })
}

#[test]
fn subgroup_order_is_a_partial_order() {
    for ctx in [GroupContext::SO3, GroupContext::O3] {
        let (classes, leq) = leq_matrix(ctx);
        let n = classes.len();
        for i in 0..n {
            assert!(leq[i][i], "{} not <= itself", classes[i]);
            for j in 0..n {
                if i != j && leq[i][j] {
                    assert!(
                        !leq[j][i],
                        "{} and {} are mutually below",
                        classes[i], classes[j]
                    );
                    for k in 0..n {
                        if leq[j][k] {
                            assert!(
                                leq[i][k],
                                "{} <= {} <= {}",
                                classes[i], classes[j], classes[k]
                            );
                        }
                    }
                }
            }
            assert!(leq[i][classes.iter().position(|c| *c == ctx.full_group()).unwrap()]);
            assert!(
                leq[classes
                    .iter()
                    .position(|c| *c == SubgroupClass::Triv)
                    .unwrap()][i]
            );
        }
    }
}

#[test]
fn finite_orders_divide_along_the_order() {
    let (classes, leq) = leq_matrix(GroupContext::O3);
    for (i, a) in classes.iter().enumerate() {
        for (j, b) in classes.iter().enumerate() {
            if let (true, Some(p), Some(q)) = (leq[i][j], a.order(), b.order()) {
                assert_eq!(q % p, 0, "{a} <= {b}");
            }
        }
    }
}

#[test]
fn multiplicity_stabilizes() {
    for n in 1..=6u32 {
        let mut previous: Option<ClassSet> = None;
        for k in 1..=5u64 {
            let s = RepSpec::new(
                GroupContext::SO3,
                HarmonicSum::from_terms([(HarmonicLabel::plain(n), k)]),
            );
            let classes = isotropy_classes(&s).unwrap();
            if let Some(p) = &previous {
                assert!(p.is_subset(&classes), "H{n}: {k} copies lose classes");
            }
            previous = Some(classes);
        }
        // three copies already separate every isotropy class
        let at = |k| {
            isotropy_classes(&RepSpec::new(
                GroupContext::SO3,
                HarmonicSum::from_terms([(HarmonicLabel::plain(n), k)]),
            ))
            .unwrap()
        };
        assert_eq!(at(3), at(50), "H{n}");
    }
}

#[test]
fn classes_of_sums_are_admissible() {
    let spec = RepSpec::new(
        GroupContext::O3,
        HarmonicSum::from_terms([
            (HarmonicLabel::plain(5), 1),
            (HarmonicLabel::starred(4), 2),
            (HarmonicLabel::plain(1), 1),
        ]),
    );
    let classes = isotropy_classes(&spec).unwrap();
    classes.check_admissible(GroupContext::O3).unwrap();
    assert!(classes.contains(&SubgroupClass::Triv));
    assert!(classes.contains(&SubgroupClass::O3_FULL));
}
