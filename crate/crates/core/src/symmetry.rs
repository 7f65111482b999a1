//! Isotropy classes of a direct sum of irreducibles: the clips of the
//! summands' class sets, folded left to right.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::clips::{clips_sets, ClipsError};
use crate::groups::{ClassSet, GroupContext, SubgroupClass};
use crate::irreps::{isotropy_irrep_o3, isotropy_irrep_so3, HarmonicLabel, HarmonicSum};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymmetryError {
    #[error(
        "unsupported: -I acts as +Id on some summands and -Id on others, \
         which needs clips of type II classes"
    )]
    Mixed,
    #[error(transparent)]
    Clips(#[from] ClipsError),
}

/// How `-I` acts on a representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MinusOneAction {
    MinusId,
    PlusId,
    Mixed,
    /// SO(3) context, where `-I` is not an element.
    NotApplicable,
}

/// A representation of SO(3) or O(3) given by its harmonic decomposition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepSpec {
    pub context: GroupContext,
    pub content: HarmonicSum,
}

impl RepSpec {
    pub fn new(context: GroupContext, content: HarmonicSum) -> Self {
        RepSpec { context, content }
    }
}

/// Sign census of `-I` over the summands. The trivial summand `H0` has the
/// same classes whichever way it is counted and is skipped.
pub fn minus_one_action(spec: &RepSpec) -> MinusOneAction {
    if spec.context == GroupContext::SO3 {
        return MinusOneAction::NotApplicable;
    }
    let mut plus = false;
    let mut minus = false;
    for (l, _) in spec.content.terms() {
        if l == HarmonicLabel::plain(0) {
            continue;
        }
        if l.minus_one_sign() > 0 {
            plus = true;
        } else {
            minus = true;
        }
    }
    match (plus, minus) {
        (true, true) => MinusOneAction::Mixed,
        (false, true) => MinusOneAction::MinusId,
        _ => MinusOneAction::PlusId,
    }
}

/// Classes of a single irreducible summand within an O(3) representation on
/// which `-I` acts as `-Id`.
fn o3_label_classes(l: HarmonicLabel) -> ClassSet {
    if l.n == 0 {
        // pseudoscalars: fixed by rotations only
        return [SubgroupClass::SO3, SubgroupClass::O3_FULL]
            .into_iter()
            .collect();
    }
    isotropy_irrep_o3(l).expect("labels with -I acting as -Id")
}

// Highest degree first, plain before starred.
fn fold_order(content: &HarmonicSum) -> Vec<(HarmonicLabel, u64)> {
    let mut terms: Vec<_> = content.terms().collect();
    terms.sort_by_key(|(l, _)| (std::cmp::Reverse(l.n), l.star));
    terms
}

fn fold<F>(ctx: GroupContext, content: &HarmonicSum, classes_of: F) -> Result<ClassSet, ClipsError>
where
    F: Fn(HarmonicLabel) -> ClassSet,
{
    let mut acc = ClassSet::singleton(ctx.full_group());
    for (label, multiplicity) in fold_order(content) {
        let j = classes_of(label);
        for _ in 0..multiplicity {
            let next = clips_sets(ctx, &acc, &j)?;
            // another copy maps a fixed point to itself
            if next == acc {
                break;
            }
            acc = next;
        }
    }
    Ok(acc)
}

/// The set of isotropy classes of `spec`, the zero vector included.
///
/// In O(3), when `-I` acts as `+Id` every isotropy group contains `-I`: the
/// classes are those of the underlying SO(3) representation, each `K` lifted
/// to `K x Zc2`.
pub fn isotropy_classes(spec: &RepSpec) -> Result<ClassSet, SymmetryError> {
    match minus_one_action(spec) {
        MinusOneAction::NotApplicable => {
            Ok(fold(GroupContext::SO3, &spec.content.unstarred(), |l| {
                isotropy_irrep_so3(l.n)
            })?)
        }
        MinusOneAction::PlusId => {
            let so3 = fold(GroupContext::SO3, &spec.content.unstarred(), |l| {
                isotropy_irrep_so3(l.n)
            })?;
            Ok(so3.map(|c| SubgroupClass::TypeII(c.proper().expect("rotation class"))))
        }
        MinusOneAction::MinusId => Ok(fold(GroupContext::O3, &spec.content, o3_label_classes)?),
        MinusOneAction::Mixed => Err(SymmetryError::Mixed),
    }
}

/// [`isotropy_classes`] folding the summands in the given order, one copy at
/// a time. Used to check that the result does not depend on the order.
pub fn isotropy_classes_in_order(
    context: GroupContext,
    summands: &[HarmonicLabel],
) -> Result<ClassSet, SymmetryError> {
    let spec = RepSpec::new(context, summands.iter().copied().collect());
    let action = minus_one_action(&spec);
    let (ctx, classes_of): (GroupContext, Box<dyn Fn(HarmonicLabel) -> ClassSet>) = match action {
        MinusOneAction::Mixed => return Err(SymmetryError::Mixed),
        MinusOneAction::MinusId => (GroupContext::O3, Box::new(o3_label_classes)),
        _ => (
            GroupContext::SO3,
            Box::new(|l: HarmonicLabel| isotropy_irrep_so3(l.n)),
        ),
    };
    let mut acc = ClassSet::singleton(ctx.full_group());
    for &l in summands {
        acc = clips_sets(ctx, &acc, &classes_of(l)).map_err(SymmetryError::from)?;
    }
    if action == MinusOneAction::PlusId {
        acc = acc.map(|c| SubgroupClass::TypeII(c.proper().expect("rotation class")));
    }
    Ok(acc)
}
