//! Inputs shared by the benchmarks.

use isoclips_core::{GroupContext, HarmonicLabel, HarmonicSum, RepSpec, SubgroupClass};

/// `(name, spec)` for the tensor spaces used as workloads.
pub fn workloads() -> Vec<(&'static str, RepSpec)> {
    let rep = |ctx, terms: &[(u32, bool, u64)]| {
        RepSpec::new(
            ctx,
            HarmonicSum::from_terms(terms.iter().map(|&(n, s, k)| (HarmonicLabel::new(n, s), k))),
        )
    };
    vec![
        (
            "elasticity",
            rep(
                GroupContext::SO3,
                &[(4, false, 1), (2, false, 2), (0, false, 2)],
            ),
        ),
        (
            "piezoelectricity",
            rep(
                GroupContext::O3,
                &[(3, false, 1), (2, true, 1), (1, false, 2)],
            ),
        ),
        (
            "strain-gradient",
            rep(
                GroupContext::O3,
                &[
                    (5, false, 1),
                    (4, true, 2),
                    (3, false, 5),
                    (2, true, 5),
                    (1, false, 6),
                    (0, true, 1),
                ],
            ),
        ),
    ]
}

/// Finite classes with parameter at most `max`, type II excluded.
pub fn finite_classes(max: u32) -> Vec<SubgroupClass> {
    SubgroupClass::enumerate(GroupContext::O3, max)
        .into_iter()
        .filter(|c| c.is_finite() && c.subgroup_type() != isoclips_core::SubgroupType::II)
        .collect()
}
